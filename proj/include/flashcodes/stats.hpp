#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace flashcodes {

struct Summary {
  double mean = 0;
  double stddev = 0;  // sample standard deviation (n-1)
  double min = 0;
  double max = 0;
  std::size_t count = 0;
};

Summary summarize(std::span<const double> xs);
Summary summarize(std::span<const std::uint64_t> xs);

/// Pearson goodness-of-fit against equal cell probabilities; returns the
/// upper-tail p-value with counts.size()-1 degrees of freedom.
double chi_square_uniform_p(std::span<const std::uint64_t> counts);

/// Two-sample Kolmogorov-Smirnov statistic D and its asymptotic p-value.
struct KsResult {
  double statistic = 0;
  double p_value = 1;
};
KsResult ks_two_sample(std::vector<double> a, std::vector<double> b);

}  // namespace flashcodes
