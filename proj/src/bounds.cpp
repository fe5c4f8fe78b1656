#include "flashcodes/bounds.hpp"

#include <algorithm>
#include <cmath>

#include "flashcodes/error.hpp"
#include "flashcodes/register_codes.hpp"
#include "flashcodes/trajectory.hpp"

namespace flashcodes {

double clamped_log2(double x) { return x < 2.0 ? 1.0 : std::log2(x); }

namespace {

std::int64_t to_i64(std::uint64_t x) {
  if (x > static_cast<std::uint64_t>(INT64_MAX / 1024)) throw Error(ErrorKind::Overflow, "bound parameters too large");
  return static_cast<std::int64_t>(x);
}

}  // namespace

ModularBound lb_modular(std::uint64_t n, std::uint64_t q, std::uint64_t L) {
  ModularBound out;
  out.regime_ok = L >= 2 && L <= n;
  const std::int64_t groups = L == 0 ? 0 : to_i64(n / L);
  out.value = Rational(groups * (to_i64(L) + 4) * (to_i64(q) - 1), 4);
  out.uniform_form = Rational(to_i64(n) * (to_i64(q) - 1), 8);
  out.per_band_floor = Rational(groups * ((to_i64(L) + 4) / 4) * (to_i64(q) - 1));
  return out;
}

BaseRepBound lb_baserep(std::uint64_t q, double c) {
  BaseRepBound out;
  const double up = std::ceil(c - 1e-12);
  out.radix_clamped = up < 2.0;
  out.radix = out.radix_clamped ? 2u : static_cast<unsigned>(up);
  out.value = Rational(to_i64(q), out.radix);
  return out;
}

SplitBound lb_split(std::uint64_t n, std::uint64_t q, std::uint64_t L) {
  SplitBound out;
  const double log_L = clamped_log2(static_cast<double>(L));
  out.regime_ok = n <= L && std::log2(static_cast<double>(L)) <= static_cast<double>(n) / 16.0;
  out.value = static_cast<double>(n) * static_cast<double>(q - 1) * clamped_log2(static_cast<double>(n) / log_L) / (16.0 * log_L);
  return out;
}

std::uint64_t ub_trivial(std::uint64_t n, std::uint64_t q) { return n * (q - 1); }

__extension__ using u128 = unsigned __int128;

std::uint64_t max_r(std::uint64_t n, std::uint64_t L) {
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "max_r needs n >= 2");
  if (L < 3) return 0;
  const u128 limit = L - 1;
  // binom = C(r+n-1, r), advanced by C(r+n-1, r) = C(r+n-2, r-1) (r+n-1) / r.
  u128 binom = 1;
  std::uint64_t r = 0;
  for (;;) {
    const std::uint64_t next = r + 1;
    binom = binom * (next + n - 1) / next;
    if (binom >= limit) return r;
    r = next;
  }
}

CompleteBound ub_complete(std::uint64_t n, std::uint64_t q, std::uint64_t L) {
  CompleteBound out;
  out.precondition_ok = n + 1 < L;
  out.r = max_r(n, L);
  out.value = n * (q - 1) / (out.r + 1);
  return out;
}

std::size_t delta_threshold(std::uint64_t n, std::uint64_t L) {
  const double log_L = clamped_log2(static_cast<double>(L));
  const double spread = std::log2(static_cast<double>(n) / log_L);
  const double t = static_cast<double>(n) * spread / (2.0 * log_L);
  return t <= 0 ? 0 : static_cast<std::size_t>(std::floor(t + 1e-9));
}

double b_ceiling(std::uint64_t n, std::uint64_t L) {
  const double log_L = clamped_log2(static_cast<double>(L));
  return 2.0 * log_L / clamped_log2(static_cast<double>(n) / log_L);
}

RobustRegime robust_regime(std::uint64_t n, std::uint64_t q, std::uint64_t L, double c) {
  RobustRegime out;
  out.nq = static_cast<double>(n) * static_cast<double>(q);
  out.l_log_l = static_cast<double>(L) * clamped_log2(static_cast<double>(L));
  out.ratio = out.nq / out.l_log_l;
  out.c = c;
  out.met = out.ratio >= c;
  return out;
}

std::optional<Rational> code_lower_bound(const RewritingCode& code) {
  if (auto* m = dynamic_cast<const ModularCode*>(&code)) {
    return lb_modular(m->cell_count(), m->levels(), m->alphabet()).per_band_floor;
  }
  if (auto* s = dynamic_cast<const SplitCode*>(&code)) {
    // Each rewrite may touch every group, so the weakest group decides.
    return lb_modular(s->digit_radix(), s->levels(), s->digit_radix()).per_band_floor;
  }
  if (auto* b = dynamic_cast<const BaseRepCode*>(&code)) {
    return Rational(b->levels(), b->radix());
  }
  if (auto* t = dynamic_cast<const TrajectoryCode*>(&code)) {
    return trajectory_composite_bound(t->layout());
  }
  return std::nullopt;
}

Rational trajectory_composite_bound(const TrajectoryLayout& layout) {
  std::optional<Rational> weakest;
  for (const auto& reg : layout.registers) {
    auto lb = code_lower_bound(*reg.code);
    if (!lb) throw Error(ErrorKind::InvalidArgument, "register code without a closed-form bound");
    if (!weakest || *lb < *weakest) weakest = lb;
  }
  return Rational(static_cast<std::int64_t>(layout.d + 1)) * weakest.value_or(Rational(0));
}

BoundsReport bounds_report(std::uint64_t n, std::uint64_t q, std::uint64_t L, std::optional<std::uint64_t> delta,
                           double epsilon, double robust_c) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "n must be >= 1");
  if (q < 2) throw Error(ErrorKind::InvalidArgument, "q must be >= 2");
  if (L < 2) throw Error(ErrorKind::InvalidArgument, "L must be >= 2");
  if (delta && (*delta < 1 || *delta > L - 1)) throw Error(ErrorKind::InvalidArgument, "delta must be in [1, L-1]");
  BoundsReport rep;
  rep.n = n;
  rep.q = q;
  rep.L = L;
  rep.delta = delta;
  rep.epsilon = epsilon;
  rep.ub_trivial = ub_trivial(n, q);
  if (n >= 2) {
    rep.ub_complete = ub_complete(n, q, L);
  } else {
    rep.ub_complete.value = rep.ub_trivial;
    rep.notes.push_back("r undefined for a single cell; ub_complete falls back to n(q-1)");
  }
  rep.lb_modular = lb_modular(n, q, L);
  const double c = std::pow(static_cast<double>(L), 1.0 / static_cast<double>(n));
  rep.lb_baserep = lb_baserep(q, c);
  if (rep.lb_baserep.radix_clamped) rep.notes.push_back("ceil(L^(1/n)) < 2; base-representation radix clamped to 2");
  rep.lb_split = lb_split(n, q, L);
  if (L < 4 || static_cast<double>(n) / clamped_log2(static_cast<double>(L)) < 2.0) {
    rep.notes.push_back("log argument below 2 clamped to log = 1");
  }
  try {
    rep.b = choose_b(n, L);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NoFeasibleB) throw;
    rep.notes.push_back("no split code: floor(n/b)^b < L for every b");
  }
  rep.b_ceiling = b_ceiling(n, L);
  rep.delta_threshold = delta_threshold(n, L);
  if (delta) rep.small_delta = *delta <= rep.delta_threshold;
  rep.robust = robust_regime(n, q, L, robust_c);
  const double log_L = std::log2(static_cast<double>(L));
  rep.split_regime = n <= L && log_L <= static_cast<double>(n) / 16.0;
  rep.baserep_regime = log_L >= static_cast<double>(n) / 16.0 && log_L <= static_cast<double>(n) * std::log2(static_cast<double>(q));
  return rep;
}

}  // namespace flashcodes
