#pragma once

// Data-parallel sampling and polyline kernels.
//
// `rosette::kernels` holds the OpenMP versions used by the library;
// `rosette::kernels::serial` keeps straightforward reference versions that
// the tests compare against. Reductions are blocked with a fixed block size
// and combined serially, so results do not depend on the thread count.

#include <cstddef>
#include <span>

#include "rosette/series.hpp"

namespace rosette::kernels {

inline constexpr std::size_t kReductionBlock = 4096;

struct PolylineSums {
  double length = 0.0;      // sum of segment lengths
  double twice_area = 0.0;  // sum of cross products of consecutive vertices
};

/// out[i] = point_at(s, theta0 + i * step).
void sample_points(SeriesView s, double theta0, double step, std::span<PlanePoint> out);

/// Sums over consecutive vertex pairs (v[i], v[i+1]), i < size - 1. Pass a
/// closed polyline (last vertex repeating the first) for a closed curve.
PolylineSums polyline_sums(std::span<const PlanePoint> vertices);

namespace serial {

void sample_points(SeriesView s, double theta0, double step, std::span<PlanePoint> out);
PolylineSums polyline_sums(std::span<const PlanePoint> vertices);

}  // namespace serial

}  // namespace rosette::kernels
