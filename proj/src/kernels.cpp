#include "rosette/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace rosette::kernels {

namespace {

// h and h' at theta. cos/sin of n*theta/P come from the angle-addition
// recurrence on the base harmonic; terms are sorted by n.
inline void value_and_slope(SeriesView s, double theta, double& h, double& dh) {
  const double inv_p = 1.0 / s.period;
  const double base = theta * inv_p;
  const double c1 = std::cos(base);
  const double s1 = std::sin(base);
  double cn = 1.0;
  double sn = 0.0;
  int at = 0;
  h = s.constant;
  dh = 0.0;
  for (const auto& t : s.terms) {
    while (at < t.n) {
      const double c_next = cn * c1 - sn * s1;
      sn = sn * c1 + cn * s1;
      cn = c_next;
      ++at;
    }
    h += t.a * cn + t.b * sn;
    dh += t.n * inv_p * (t.b * cn - t.a * sn);
  }
}

inline PlanePoint envelope(SeriesView s, double theta) {
  double h = 0.0;
  double dh = 0.0;
  value_and_slope(s, theta, h, dh);
  const double c = std::cos(theta);
  const double sn = std::sin(theta);
  return {h * c - dh * sn, h * sn + dh * c};
}

inline void accumulate(const PlanePoint& p, const PlanePoint& q, PolylineSums& acc) {
  acc.length += std::hypot(q.x - p.x, q.y - p.y);
  acc.twice_area += p.x * q.y - q.x * p.y;
}

}  // namespace

void sample_points(SeriesView s, double theta0, double step, std::span<PlanePoint> out) {
  const auto n = static_cast<std::ptrdiff_t>(out.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    out[i] = envelope(s, theta0 + static_cast<double>(i) * step);
  }
}

PolylineSums polyline_sums(std::span<const PlanePoint> vertices) {
  if (vertices.size() < 2) return {};
  const std::size_t segments = vertices.size() - 1;
  const std::size_t blocks = (segments + kReductionBlock - 1) / kReductionBlock;
  std::vector<PolylineSums> partial(blocks);
  const auto nblocks = static_cast<std::ptrdiff_t>(blocks);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t b = 0; b < nblocks; ++b) {
    const std::size_t begin = static_cast<std::size_t>(b) * kReductionBlock;
    const std::size_t end = std::min(segments, begin + kReductionBlock);
    PolylineSums acc;
    for (std::size_t i = begin; i < end; ++i) accumulate(vertices[i], vertices[i + 1], acc);
    partial[b] = acc;
  }
  PolylineSums total;
  for (const auto& p : partial) {
    total.length += p.length;
    total.twice_area += p.twice_area;
  }
  return total;
}

namespace serial {

void sample_points(SeriesView s, double theta0, double step, std::span<PlanePoint> out) {
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = point_at(s, theta0 + static_cast<double>(i) * step);
  }
}

PolylineSums polyline_sums(std::span<const PlanePoint> vertices) {
  PolylineSums acc;
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i) accumulate(vertices[i], vertices[i + 1], acc);
  return acc;
}

}  // namespace serial

}  // namespace rosette::kernels
