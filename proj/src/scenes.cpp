#include "wrapcam/scenes.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "wrapcam/hdr_io.hpp"

namespace wrapcam {

void SceneSpec::validate() const {
  if (kind == Kind::FromFile) {
    if (path.empty())
      throw std::invalid_argument("scene: FromFile requires a path");
    return;
  }
  if (width < 1 || height < 1)
    throw std::invalid_argument("scene: width and height must be >= 1");
  if (kind == Kind::GaussianMixture) {
    if (components.empty())
      throw std::invalid_argument("scene: mixture needs at least one component");
    for (const auto& g : components)
      if (!(g.amplitude > 0.0) || !(g.sigma > 0.0))
        throw std::invalid_argument(
            "scene: component amplitude and sigma must be > 0");
    return;
  }
  if (!(amplitude > 0.0))
    throw std::invalid_argument("scene: amplitude must be > 0");
  if (kind == Kind::Gaussian && !(sigma > 0.0))
    throw std::invalid_argument("scene: sigma must be > 0");
}

IrradianceImage generate_scene(const SceneSpec& spec) {
  spec.validate();

  if (spec.kind == SceneSpec::Kind::FromFile) return read_hdr(spec.path).image;

  if (spec.kind == SceneSpec::Kind::Ramp1D) {
    IrradianceImage img(spec.width, 1, 1);
    const double denom = spec.width > 1 ? spec.width - 1.0 : 1.0;
    for (int x = 0; x < spec.width; ++x)
      img.at(x, 0) = spec.amplitude * x / denom;
    return img;
  }

  IrradianceImage img(spec.width, spec.height, spec.channels);

  if (spec.kind == SceneSpec::Kind::Ramp2D) {
    const double denom =
        spec.width + spec.height > 2 ? spec.width + spec.height - 2.0 : 1.0;
    for (int y = 0; y < spec.height; ++y)
      for (int x = 0; x < spec.width; ++x)
        for (int c = 0; c < spec.channels; ++c)
          img.at(x, y, c) = spec.amplitude * (x + y) / denom;
    return img;
  }

  std::vector<GaussianComponent> comps;
  if (spec.kind == SceneSpec::Kind::Gaussian) {
    GaussianComponent g;
    g.amplitude = spec.amplitude;
    g.sigma = spec.sigma;
    g.center_x = spec.center_x >= 0.0 ? spec.center_x : (spec.width - 1) / 2.0;
    g.center_y = spec.center_y >= 0.0 ? spec.center_y : (spec.height - 1) / 2.0;
    comps.push_back(g);
  } else {
    comps = spec.components;
  }

  for (int y = 0; y < spec.height; ++y) {
    for (int x = 0; x < spec.width; ++x) {
      double v = 0.0;
      for (const auto& g : comps) {
        const double dx = x - g.center_x;
        const double dy = y - g.center_y;
        v += g.amplitude * std::exp(-(dx * dx + dy * dy) / (2.0 * g.sigma * g.sigma));
      }
      for (int c = 0; c < spec.channels; ++c) img.at(x, y, c) = v;
    }
  }
  return img;
}

std::string to_string(SceneSpec::Kind kind) {
  switch (kind) {
    case SceneSpec::Kind::Ramp1D: return "ramp1d";
    case SceneSpec::Kind::Ramp2D: return "ramp2d";
    case SceneSpec::Kind::Gaussian: return "gaussian";
    case SceneSpec::Kind::GaussianMixture: return "mixture";
    case SceneSpec::Kind::FromFile: return "file";
  }
  return "unknown";
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  return out;
}

GaussianComponent parse_component(const std::string& text) {
  const auto parts = split(text, '/');
  if (parts.size() != 4)
    throw std::invalid_argument("scene: component must be amp/cx/cy/sigma");
  GaussianComponent g;
  g.amplitude = std::stod(parts[0]);
  g.center_x = std::stod(parts[1]);
  g.center_y = std::stod(parts[2]);
  g.sigma = std::stod(parts[3]);
  return g;
}

}  // namespace

SceneSpec parse_scene_spec(const std::string& text) {
  const auto colon = text.find(':');
  const std::string name = text.substr(0, colon);
  const std::string args = colon == std::string::npos ? "" : text.substr(colon + 1);

  SceneSpec spec;
  if (name == "ramp1d") {
    spec.kind = SceneSpec::Kind::Ramp1D;
    spec.height = 1;
  } else if (name == "ramp2d") {
    spec.kind = SceneSpec::Kind::Ramp2D;
  } else if (name == "gaussian") {
    spec.kind = SceneSpec::Kind::Gaussian;
  } else if (name == "mixture") {
    spec.kind = SceneSpec::Kind::GaussianMixture;
  } else if (name == "file") {
    spec.kind = SceneSpec::Kind::FromFile;
    spec.path = args;
    spec.validate();
    return spec;
  } else {
    throw std::invalid_argument("scene: unknown kind '" + name + "'");
  }

  for (const std::string& kv : split(args, ',')) {
    if (kv.empty()) continue;
    const auto eq = kv.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("scene: expected key=value, got '" + kv + "'");
    const std::string key = kv.substr(0, eq);
    const std::string value = kv.substr(eq + 1);
    if (key == "w") spec.width = std::stoi(value);
    else if (key == "h") spec.height = std::stoi(value);
    else if (key == "n") spec.width = std::stoi(value);
    else if (key == "c") spec.channels = std::stoi(value);
    else if (key == "amp") spec.amplitude = std::stod(value);
    else if (key == "cx") spec.center_x = std::stod(value);
    else if (key == "cy") spec.center_y = std::stod(value);
    else if (key == "sigma") spec.sigma = std::stod(value);
    else if (key == "comps") {
      for (const std::string& comp : split(value, ';'))
        spec.components.push_back(parse_component(comp));
    } else {
      throw std::invalid_argument("scene: unknown key '" + key + "'");
    }
  }
  spec.validate();
  return spec;
}

}  // namespace wrapcam
