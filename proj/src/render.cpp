#include "rosette/render.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include <fmt/format.h>
#include <json.hpp>

#include "rosette/pair_equidistants.hpp"
#include "rosette/singularities.hpp"
#include "rosette/spec_io.hpp"

namespace rosette {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

double to_double(std::string_view s, std::string_view token) {
  s = trim(s);
  double v = 0.0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || end != s.data() + s.size() || !std::isfinite(v)) {
    throw std::invalid_argument(fmt::format("bad number '{}' in layer '{}'", s, token));
  }
  return v;
}

int to_int(std::string_view s, std::string_view token) {
  s = trim(s);
  int v = 0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || end != s.data() + s.size()) {
    throw std::invalid_argument(fmt::format("bad integer '{}' in layer '{}'", s, token));
  }
  return v;
}

bool is_numeric(std::string_view s) {
  s = trim(s);
  if (s.empty()) return false;
  double v = 0.0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  return ec == std::errc() && end == s.data() + s.size();
}

// "lambda,k"
std::pair<double, int> lambda_k(std::string_view args, std::string_view token) {
  const auto comma = args.find(',');
  if (comma == std::string_view::npos) {
    throw std::invalid_argument(fmt::format("layer '{}' needs lambda,k", token));
  }
  return {to_double(args.substr(0, comma), token), to_int(args.substr(comma + 1), token)};
}

const FourierSupport& curve_at(const SceneSpec& scene, int index, std::string_view token) {
  const int i = index == 0 ? 1 : index;
  if (i < 1 || i > static_cast<int>(scene.curves.size())) {
    throw std::invalid_argument(fmt::format("layer '{}' refers to curve {} but the scene has {}",
                                            token, i, scene.curves.size()));
  }
  return scene.curves[i - 1];
}

// Fixed decimals keep the document byte-stable; negative zero is folded.
std::string coord(double v) {
  std::string s = fmt::format("{:.6f}", v);
  if (s.find_first_not_of("-0.") == std::string::npos && s.front() == '-') s.erase(0, 1);
  return s;
}

constexpr const char* kPalette[] = {"#1f4e9c", "#c0392b", "#27864a", "#8e44ad",
                                    "#d35400", "#16a085", "#7f8c8d", "#2c3e50"};

struct Drawn {
  std::string id;
  std::vector<PlanePoint> points;
  bool dashed = false;
  bool point = false;
  std::vector<PlanePoint> cusps;
};

}  // namespace

LayerSpec parse_layer(std::string_view token) {
  LayerSpec layer;
  std::string_view body = trim(token);
  layer.token = std::string(body);
  if (const auto at = body.rfind('@'); at != std::string_view::npos) {
    layer.curve = to_int(body.substr(at + 1), token);
    if (layer.curve < 1) throw std::invalid_argument(fmt::format("bad curve index in '{}'", token));
    body = body.substr(0, at);
  }
  const auto colon = body.find(':');
  const std::string_view name = trim(body.substr(0, colon));
  const std::string_view args = colon == std::string_view::npos ? "" : body.substr(colon + 1);
  const bool has_args = colon != std::string_view::npos;
  auto no_args = [&] {
    if (has_args) throw std::invalid_argument(fmt::format("layer '{}' takes no arguments", token));
  };

  if (name == "base") {
    no_args();
    layer.kind = LayerKind::Base;
  } else if (name == "cwms") {
    no_args();
    layer.kind = LayerKind::Cwms;
  } else if (name == "sms") {
    no_args();
    layer.kind = LayerKind::Sms;
  } else if (name == "wigner") {
    layer.kind = LayerKind::Wigner;
    layer.k = to_int(args, token);
  } else if (name == "offset") {
    layer.kind = LayerKind::Offset;
    layer.alpha = to_double(args, token);
  } else if (name == "equidistant") {
    layer.kind = LayerKind::Equidistant;
    std::tie(layer.lambda, layer.k) = lambda_k(args, token);
  } else if (name == "pair") {
    layer.kind = LayerKind::Pair;
    std::tie(layer.lambda, layer.k) = lambda_k(args, token);
    if (layer.curve != 0) throw std::invalid_argument("pair layers always use curves 1 and 2");
  } else {
    throw std::invalid_argument(fmt::format("unknown layer '{}'", token));
  }
  return layer;
}

std::vector<LayerSpec> parse_layers(std::string_view list) {
  std::vector<std::string> pieces;
  std::string current;
  bool after_comma = false;
  auto flush = [&](bool comma_follows) {
    const std::string_view t = trim(current);
    if (after_comma && is_numeric(t) && !pieces.empty()) {
      pieces.back() += "," + std::string(t);
    } else if (!t.empty()) {
      pieces.emplace_back(t);
    }
    current.clear();
    after_comma = comma_follows;
  };
  for (char c : list) {
    if (c == ';') {
      flush(false);
    } else if (c == ',') {
      flush(true);
    } else {
      current.push_back(c);
    }
  }
  flush(false);

  std::vector<LayerSpec> layers;
  layers.reserve(pieces.size());
  for (const auto& p : pieces) layers.push_back(parse_layer(p));
  return layers;
}

std::vector<FrontSupport> resolve_layer(const SceneSpec& scene, const LayerSpec& layer) {
  switch (layer.kind) {
    case LayerKind::Base: {
      std::vector<FrontSupport> out;
      if (layer.curve != 0) {
        out.push_back(base_front(curve_at(scene, layer.curve, layer.token)));
      } else {
        for (const auto& c : scene.curves) out.push_back(base_front(c));
      }
      return out;
    }
    case LayerKind::Wigner:
      return {wigner_branch(curve_at(scene, layer.curve, layer.token), layer.k)};
    case LayerKind::Equidistant:
      return {equidistant_branch(curve_at(scene, layer.curve, layer.token), layer.lambda, layer.k)};
    case LayerKind::Cwms:
      return {cwms_support(curve_at(scene, layer.curve, layer.token))};
    case LayerKind::Sms:
      return {sms_support(curve_at(scene, layer.curve, layer.token))};
    case LayerKind::Offset:
      return {offset_support(curve_at(scene, layer.curve, layer.token), layer.alpha)};
    case LayerKind::Pair:
      return {pair_branch(curve_at(scene, 1, layer.token), curve_at(scene, 2, layer.token),
                          layer.lambda, layer.k)
                  .support};
  }
  return {};
}

SceneSpec load_scene_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SpecParseError("cannot open scene file " + path.string());
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw SpecParseError(std::string("malformed scene file: ") + e.what());
  }
  if (!doc.is_object()) throw SpecParseError("scene file must be a JSON object");
  SceneSpec scene;
  try {
    for (const auto& [key, value] : doc.items()) {
      if (key == "curves") {
        for (const auto& c : value) {
          scene.curves.push_back(load_spec_file(path.parent_path() / c.get<std::string>()).curve);
        }
      } else if (key == "layers") {
        for (const auto& l : value) scene.layers.push_back(parse_layer(l.get<std::string>()));
      } else if (key == "samples") {
        scene.samples = value.get<int>();
      } else if (key == "stroke_width") {
        scene.stroke_width = value.get<double>();
      } else if (key == "mark_cusps") {
        scene.mark_cusps = value.get<bool>();
      } else {
        throw SpecParseError("unknown field '" + key + "' in scene");
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw SpecParseError(std::string("bad scene field: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw SpecParseError(e.what());
  }
  if (scene.curves.empty()) throw SpecParseError("scene lists no curves");
  if (scene.layers.empty()) scene.layers.push_back(parse_layer("base"));
  return scene;
}

std::string render_svg(const SceneSpec& scene) {
  if (scene.samples < kMinFrontSamples) {
    throw std::invalid_argument(fmt::format("need at least {} samples", kMinFrontSamples));
  }
  std::vector<Drawn> drawn;
  for (std::size_t li = 0; li < scene.layers.size(); ++li) {
    const LayerSpec& layer = scene.layers[li];
    const auto fronts = resolve_layer(scene, layer);
    for (std::size_t fi = 0; fi < fronts.size(); ++fi) {
      const FrontSupport& h = fronts[fi];
      Drawn d;
      d.id = fronts.size() > 1 ? fmt::format("layer{}-{}", li, fi) : fmt::format("layer{}", li);
      d.dashed = layer.kind == LayerKind::Base;
      if (h.is_point()) {
        d.point = true;
        d.points.push_back(point_at(h.view(), 0.0));
      } else {
        d.points = sample_front(h, scene.samples).points;
        if (scene.mark_cusps) {
          for (double t : find_cusps(h).locations) d.cusps.push_back(point_at(h.view(), t));
        }
      }
      drawn.push_back(std::move(d));
    }
  }

  double lo_x = std::numeric_limits<double>::infinity();
  double lo_y = lo_x;
  double hi_x = -lo_x;
  double hi_y = -lo_x;
  for (const auto& d : drawn) {
    for (const auto& p : d.points) {
      lo_x = std::min(lo_x, p.x);
      hi_x = std::max(hi_x, p.x);
      lo_y = std::min(lo_y, -p.y);
      hi_y = std::max(hi_y, -p.y);
    }
  }
  if (drawn.empty()) lo_x = lo_y = hi_x = hi_y = 0.0;
  double extent = std::max(hi_x - lo_x, hi_y - lo_y);
  if (extent <= 0.0) extent = 1.0;
  const double margin = 0.05 * extent;
  const double vx = lo_x - margin;
  const double vy = lo_y - margin;
  const double vw = (hi_x - lo_x) + 2.0 * margin;
  const double vh = (hi_y - lo_y) + 2.0 * margin;
  const double stroke = scene.stroke_width * extent / 400.0;
  const double marker = 3.0 * stroke;
  const int width_px = 800;
  const int height_px = std::max(1, static_cast<int>(std::lround(width_px * vh / vw)));

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n";
  out += fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{}\" height=\"{}\" "
      "viewBox=\"{} {} {} {}\">\n",
      width_px, height_px, coord(vx), coord(vy), coord(vw), coord(vh));
  out += "<g fill=\"none\" stroke-linejoin=\"round\" stroke-linecap=\"round\">\n";
  std::size_t colour = 0;
  for (const auto& d : drawn) {
    const char* c = d.dashed ? "#000000" : kPalette[colour++ % std::size(kPalette)];
    if (d.point) {
      out += fmt::format("<circle id=\"{}\" cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"{}\" stroke=\"none\"/>\n",
                         d.id, coord(d.points[0].x), coord(-d.points[0].y), coord(marker), c);
      continue;
    }
    out += fmt::format("<polyline id=\"{}\" stroke=\"{}\" stroke-width=\"{}\"", d.id, c, coord(stroke));
    if (d.dashed) out += fmt::format(" stroke-dasharray=\"{} {}\"", coord(4 * stroke), coord(3 * stroke));
    out += " points=\"";
    for (std::size_t i = 0; i < d.points.size(); ++i) {
      if (i > 0) out += ' ';
      out += coord(d.points[i].x);
      out += ',';
      out += coord(-d.points[i].y);
    }
    out += "\"/>\n";
    for (const auto& p : d.cusps) {
      out += fmt::format("<circle cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"{}\" stroke=\"none\"/>\n",
                         coord(p.x), coord(-p.y), coord(marker), c);
    }
  }
  out += "</g>\n</svg>\n";
  return out;
}

}  // namespace rosette
