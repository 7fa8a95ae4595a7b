#pragma once

// SVG figures of rosettes and their fronts.
//
// Layer tokens (one front each, taken from curve 1 unless suffixed @i):
//   base | wigner:k | equidistant:lambda,k | cwms | sms | offset:alpha | pair:lambda,k
// "base" without a suffix draws every curve of the scene; "pair" uses curves 1 and 2.
//
// The y axis is flipped (SVG y grows downward), so counterclockwise curves
// render counterclockwise. Coordinates are printed with 6 fixed decimals,
// which makes output byte-stable.

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "rosette/derived_curves.hpp"
#include "rosette/rosette_core.hpp"

namespace rosette {

enum class LayerKind { Base, Wigner, Equidistant, Cwms, Sms, Offset, Pair };

struct LayerSpec {
  LayerKind kind = LayerKind::Base;
  double lambda = 0.5;
  int k = 0;
  double alpha = 0.0;
  int curve = 0;  // 1-based curve index, 0 = default
  std::string token;
};

/// Throws std::invalid_argument on an unknown or malformed token.
LayerSpec parse_layer(std::string_view token);

/// Tokens separated by ';' or ','. A purely numeric piece after a ',' belongs
/// to the previous token ("equidistant:0.3,2,cwms" is two layers).
std::vector<LayerSpec> parse_layers(std::string_view list);

inline constexpr int kRenderSamples = 4096;

struct SceneSpec {
  std::vector<FourierSupport> curves;
  std::vector<LayerSpec> layers;
  int samples = kRenderSamples;
  double stroke_width = 1.0;  // in units of 1/400 of the figure extent
  bool mark_cusps = false;
};

/// Scene file: {"curves": ["r2.json", ...], "layers": ["base", "cwms"],
///   "samples": 4096, "stroke_width": 1, "mark_cusps": false}
/// Curve paths are relative to the scene file.
SceneSpec load_scene_file(const std::filesystem::path& path);

/// Every layer resolved to its fronts (base without suffix yields several).
std::vector<FrontSupport> resolve_layer(const SceneSpec& scene, const LayerSpec& layer);

std::string render_svg(const SceneSpec& scene);

}  // namespace rosette
