#pragma once

#include <cstdint>
#include <vector>

#include "wrapcam/image.hpp"

namespace wrapcam {

struct LogHistogram {
  int n_bins = 0;
  double log10_min = 0.0;  // log10 of the smallest positive sample
  double log10_max = 0.0;  // log10 of the largest sample
  std::vector<std::vector<std::uint64_t>> bins;  // [channel][bin]
  std::vector<std::uint64_t> zero_counts;        // zeros, tallied separately

  std::uint64_t channel_total(int c) const;
};

// Per-channel histogram over log10-spaced bins spanning the image's
// positive range. Zero samples go to the separate zero bucket; an
// all-zero image leaves the bins empty.
LogHistogram log_histogram(const IrradianceImage& img, int n_bins);

}  // namespace wrapcam
