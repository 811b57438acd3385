#include "wrapcam/recoverability.hpp"

#include <cmath>
#include <stdexcept>

#include "wrapcam/codec.hpp"

namespace wrapcam {

namespace {

double pair_domain_value(double v, const CodecParams& p) {
  if (p.kind == Encoding::Modulo) return v;
  const double clamped = std::max(v, p.i_max);
  return p.alpha == 2.0 ? std::log2(clamped)
                        : std::log(clamped) / std::log(p.alpha);
}

}  // namespace

RecoverabilityReport check_recoverable(const IrradianceImage& img,
                                       const CodecParams& params) {
  img.validate();
  params.validate();

  RecoverabilityReport report;
  const double bound = params.i_max;

  auto check_pair = [&](int x0, int y0, int x1, int y1, int c) {
    ++report.total_pairs;
    const double a = pair_domain_value(img.at(x0, y0, c), params);
    const double b = pair_domain_value(img.at(x1, y1, c), params);
    const double delta = std::fabs(b - a);
    if (delta > bound)
      report.violations.push_back({x0, y0, x1, y1, c, delta, bound});
  };

  for (int c = 0; c < img.channels; ++c) {
    for (int y = 0; y < img.height; ++y)
      for (int x = 0; x + 1 < img.width; ++x) check_pair(x, y, x + 1, y, c);
    for (int y = 0; y + 1 < img.height; ++y)
      for (int x = 0; x < img.width; ++x) check_pair(x, y, x, y + 1, c);
  }
  report.satisfied = report.violations.empty();
  return report;
}

Unwrap1dResult unwrap_sequential_1d(std::span<const double> wrapped,
                                    const CodecParams& params) {
  params.validate();
  if (wrapped.empty())
    throw std::invalid_argument("unwrap_sequential_1d: empty sequence");
  for (double v : wrapped)
    if (!(v >= 0.0) || !(v < params.i_max) || !std::isfinite(v))
      throw std::invalid_argument(
          "unwrap_sequential_1d: samples must lie in [0, i_max)");

  const double period = params.i_max;
  Unwrap1dResult r;
  r.unwrapped.resize(wrapped.size());
  r.counts.resize(wrapped.size());
  r.unwrapped[0] = wrapped[0];
  r.counts[0] = 0;

  for (std::size_t n = 0; n + 1 < wrapped.size(); ++n) {
    const double d = wrapped[n + 1] - wrapped[n];
    int best_k = 0;
    double best = std::fabs(d);
    bool tie = false;
    for (int k : {-1, 1}) {
      const double cand = std::fabs(d + k * period);
      if (cand < best) {
        best = cand;
        best_k = k;
        tie = false;
      } else if (cand == best) {
        tie = true;  // step of exactly i_max/2; keep the smaller |k|
      }
    }
    if (tie) {
      ++r.ties;
      if (best == std::fabs(d)) best_k = 0;
    }
    r.counts[n + 1] = r.counts[n] + best_k;
    r.unwrapped[n + 1] = wrapped[n + 1] + r.counts[n + 1] * period;
  }
  return r;
}

std::vector<double> irradiance_from_unwrapped(std::span<const double> wrapped,
                                              const Unwrap1dResult& result,
                                              const CodecParams& params,
                                              int first_winding) {
  if (wrapped.size() != result.counts.size())
    throw std::invalid_argument("irradiance_from_unwrapped: size mismatch");
  std::vector<double> out(wrapped.size());
  for (std::size_t n = 0; n < wrapped.size(); ++n) {
    const int w = first_winding + result.counts[n];
    if (w < 0)
      throw std::invalid_argument(
          "irradiance_from_unwrapped: negative absolute winding");
    out[n] = reconstruct_value(wrapped[n], w, params);
  }
  return out;
}

DynamicRangeEstimate max_dynamic_range(Encoding kind, long n_pixels, double i_max) {
  if (n_pixels < 2)
    throw std::invalid_argument("max_dynamic_range: need at least 2 pixels");
  if (!(i_max > 0.0))
    throw std::invalid_argument("max_dynamic_range: i_max must be > 0");

  DynamicRangeEstimate est;
  est.n_pixels = n_pixels;
  est.i_max = i_max;
  est.kind = kind;
  if (kind == Encoding::Modulo) {
    est.dr_db = 10.0 * std::log10(static_cast<double>(n_pixels) * i_max);
  } else {
    if (i_max <= 1.0)
      throw std::invalid_argument(
          "max_dynamic_range: mantissa estimate degenerates at i_max <= 1 "
          "(log10(i_max) <= 0)");
    est.dr_db = 10.0 * static_cast<double>(n_pixels) * std::log10(i_max);
  }
  return est;
}

}  // namespace wrapcam
