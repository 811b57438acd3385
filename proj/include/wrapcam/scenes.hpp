#pragma once

#include <string>
#include <vector>

#include "wrapcam/image.hpp"

namespace wrapcam {

struct GaussianComponent {
  double amplitude = 1.0;
  double center_x = 0.0;
  double center_y = 0.0;
  double sigma = 1.0;
};

// Analytic test scenes. Ramp1D is a width x 1 ramp from 0 to amplitude;
// Ramp2D is the diagonal plane amplitude * (x + y) / (width + height - 2);
// Gaussian is amplitude * exp(-((x-cx)^2 + (y-cy)^2) / (2 sigma^2));
// GaussianMixture sums its components; FromFile loads an HDR image.
struct SceneSpec {
  enum class Kind { Ramp1D, Ramp2D, Gaussian, GaussianMixture, FromFile };

  Kind kind = Kind::Gaussian;
  int width = 128;
  int height = 128;
  int channels = 1;
  double amplitude = 1.0;
  double center_x = -1.0;  // < 0 selects the image center
  double center_y = -1.0;
  double sigma = 1.0;
  std::vector<GaussianComponent> components;
  std::string path;

  void validate() const;
};

IrradianceImage generate_scene(const SceneSpec& spec);

// Parses the CLI scene syntax, e.g. "gaussian:w=128,h=128,amp=16,sigma=24",
// "ramp1d:n=6,amp=5", "ramp2d:w=64,h=64,amp=5",
// "mixture:w=64,h=64,comps=amp/cx/cy/sigma;amp/cx/cy/sigma", "file:PATH".
SceneSpec parse_scene_spec(const std::string& text);

std::string to_string(SceneSpec::Kind kind);

}  // namespace wrapcam
