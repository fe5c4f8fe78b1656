#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "flashcodes/rewriting_code.hpp"

namespace flashcodes {

struct TrajectoryLayout;

using Rational = boost::rational<std::int64_t>;

/// log2 with the argument clamped so that the result is at least 1.
double clamped_log2(double x);

struct ModularBound {
  Rational value;         // floor(n/L) (L+4)(q-1)/4
  Rational uniform_form;  // n(q-1)/8
  // floor(n/L) floor((L+4)/4) (q-1): whole rewrites per band, which is what
  // the lexicographic encoder is checked against. Equals `value` when 4 | L.
  Rational per_band_floor;
  bool regime_ok = false;  // 2 <= L <= n
};
ModularBound lb_modular(std::uint64_t n, std::uint64_t q, std::uint64_t L);

struct BaseRepBound {
  Rational value;  // q / radix
  unsigned radix = 2;
  bool radix_clamped = false;  // ceil(c) < 2 was lifted to 2
};
BaseRepBound lb_baserep(std::uint64_t q, double c);

struct SplitBound {
  double value = 0;  // n(q-1) log(n/log L) / (16 log L)
  bool regime_ok = false;  // n <= L <= 2^(n/16)
};
SplitBound lb_split(std::uint64_t n, std::uint64_t q, std::uint64_t L);

std::uint64_t ub_trivial(std::uint64_t n, std::uint64_t q);

/// Largest r with C(r+n-1, r) < L-1 (0 when none is positive). Exact.
std::uint64_t max_r(std::uint64_t n, std::uint64_t L);

struct CompleteBound {
  std::uint64_t value = 0;  // floor(n(q-1)/(r+1))
  std::uint64_t r = 0;
  bool precondition_ok = false;  // n < L-1
};
CompleteBound ub_complete(std::uint64_t n, std::uint64_t q, std::uint64_t L);

/// floor(n log(n/log L) / (2 log L)), base-2 logs, 0 when negative.
std::size_t delta_threshold(std::uint64_t n, std::uint64_t L);

/// 2 log L / log(n / log L), the ceiling on b for n <= L <= 2^(n/16).
double b_ceiling(std::uint64_t n, std::uint64_t L);

struct RobustRegime {
  double nq = 0;
  double l_log_l = 0;
  double ratio = 0;
  double c = 0;
  bool met = false;
};
RobustRegime robust_regime(std::uint64_t n, std::uint64_t q, std::uint64_t L, double c);

/// Worst-case guarantee of one of the implemented deterministic codes as an
/// exact rational (modular: the per-band floor form; split: the weakest group;
/// base representation: q/R). Nullopt for codes with no closed form.
std::optional<Rational> code_lower_bound(const RewritingCode& code);

/// (d+1) times the smallest register guarantee.
Rational trajectory_composite_bound(const TrajectoryLayout& layout);

struct BoundsReport {
  std::uint64_t n = 0, q = 0, L = 0;
  std::optional<std::uint64_t> delta;
  std::uint64_t ub_trivial = 0;
  CompleteBound ub_complete;
  ModularBound lb_modular;
  BaseRepBound lb_baserep;
  SplitBound lb_split;
  std::optional<unsigned> b;  // split groups, when feasible
  double b_ceiling = 0;
  std::size_t delta_threshold = 0;
  std::optional<bool> small_delta;  // delta <= threshold
  RobustRegime robust;
  double epsilon = 0;
  bool split_regime = false;    // n <= L <= 2^(n/16)
  bool baserep_regime = false;  // 2^(n/16) <= L <= q^n
  std::vector<std::string> notes;
};

BoundsReport bounds_report(std::uint64_t n, std::uint64_t q, std::uint64_t L, std::optional<std::uint64_t> delta,
                           double epsilon, double robust_c);

}  // namespace flashcodes
