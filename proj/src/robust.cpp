#include "flashcodes/robust.hpp"

#include <algorithm>
#include <set>

#include "flashcodes/error.hpp"
#include "flashcodes/residue_dp.hpp"
#include "flashcodes/rng.hpp"

namespace flashcodes {

namespace {

std::vector<Value> prefix_sums(const std::vector<Value>& a, std::uint64_t L) {
  std::vector<Value> out(a.size() + 1, 0);
  for (std::size_t j = 0; j < a.size(); ++j) out[j + 1] = (out[j] + a[j]) % L;
  return out;
}

void check_shape(const RewritingCode& code, const CellState& s) {
  if (s.size() != code.cell_count() || s.q() != code.levels()) {
    throw Error(ErrorKind::DimensionMismatch, "state shape does not match " + code.name());
  }
}

void check_target(const RewritingCode& code, Value target, Value current) {
  if (target >= code.alphabet()) throw Error(ErrorKind::InvalidArgument, "value outside alphabet");
  if (target == current) throw Error(ErrorKind::InvalidArgument, "rewrite must change the stored value");
}

}  // namespace

std::size_t UpdateVector::diversity() const { return std::set<Value>(entries.begin(), entries.end()).size(); }

// ------------------------------------------------------------- parametric --

ParametricCode::ParametricCode(std::size_t n, unsigned q, std::uint64_t L, std::vector<std::vector<Value>> theta,
                               std::vector<Value> a)
    : n_(n), q_(q), L_(L), theta_(std::move(theta)), a_(std::move(a)) {
  if (n < 1 || q < 2 || L < 2) throw Error(ErrorKind::InvalidArgument, "parametric code needs n >= 1, q >= 2, L >= 2");
  const std::size_t rows = n * (q - 1);
  if (theta_.size() != rows || a_.size() != rows) {
    throw Error(ErrorKind::DimensionMismatch, "theta must be n(q-1) x n and a of length n(q-1)");
  }
  for (const auto& row : theta_) {
    if (row.size() != n) throw Error(ErrorKind::DimensionMismatch, "theta row length must be n");
    for (Value x : row) {
      if (x >= L) throw Error(ErrorKind::InvalidArgument, "theta entries must be < L");
    }
  }
  for (Value x : a_) {
    if (x >= L) throw Error(ErrorKind::InvalidArgument, "a entries must be < L");
  }
  a_prefix_ = prefix_sums(a_, L_);
}

ParametricCode ParametricCode::identity(std::size_t n, unsigned q, std::uint64_t L, std::vector<Value> a) {
  std::vector<Value> row(n);
  for (std::size_t i = 0; i < n; ++i) row[i] = (i + 1) % L;
  return ParametricCode(n, q, L, std::vector<std::vector<Value>>(n * (q - 1), row), std::move(a));
}

Value ParametricCode::decode(const CellState& s) const {
  check_shape(*this, s);
  const std::uint64_t w = s.weight();
  if (w == 0) return 0;
  const auto& row = theta_[w - 1];
  Value acc = a_prefix(w);
  for (std::size_t i = 0; i < n_; ++i) acc = (acc + row[i] * s[i]) % L_;
  return acc;
}

UpdateVector ParametricCode::update_vector(const CellState& s) const {
  const Value base = decode(s);
  UpdateVector u;
  u.entries.reserve(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    if (s[i] >= q_ - 1) throw Error(ErrorKind::SaturatedCell, "cell " + std::to_string(i) + " is at the top level");
    u.entries.push_back((decode(s.raise(i)) + L_ - base) % L_);
  }
  return u;
}

CellState ParametricCode::update(const CellState& s, Value target) const {
  const Value current = decode(s);
  check_target(*this, target, current);
  const std::uint64_t w = s.weight();
  const std::uint64_t room = n_ * (q_ - 1) - w;
  std::vector<unsigned> caps(n_);
  for (std::size_t i = 0; i < n_; ++i) caps[i] = q_ - 1 - s[i];
  for (std::uint64_t k = 1; k <= room; ++k) {
    const auto& row = theta_[w + k - 1];
    Value base = a_prefix(w + k);
    for (std::size_t i = 0; i < n_; ++i) base = (base + row[i] * s[i]) % L_;
    const Value need = (target + L_ - base) % L_;
    if (auto plan = exact_count_plan(row, caps, L_, need, static_cast<unsigned>(k))) return s.raise_all(*plan);
  }
  throw Error(ErrorKind::Unreachable, "no state above the current one decodes to " + std::to_string(target));
}

// ----------------------------------------------------------------- robust --

RobustCode::RobustCode(std::size_t n, unsigned q, std::uint64_t L, std::uint64_t seed, SaturationPolicy policy)
    : n_(n), q_(q), L_(L), seed_(seed), policy_(policy) {
  if (L < 2 || n < L) throw Error(ErrorKind::InvalidArgument, "robust code needs n >= L >= 2");
  if (q < 2) throw Error(ErrorKind::InvalidArgument, "q must be >= 2");
  std::mt19937_64 rng(seed);
  a_.resize(n * (q - 1));
  for (auto& x : a_) x = uniform_below(rng, L);
  a_prefix_ = prefix_sums(a_, L_);
}

RobustCode::RobustCode(std::size_t n, unsigned q, std::uint64_t L, std::vector<Value> a, SaturationPolicy policy)
    : n_(n), q_(q), L_(L), policy_(policy), a_(std::move(a)) {
  if (L < 2 || n < L) throw Error(ErrorKind::InvalidArgument, "robust code needs n >= L >= 2");
  if (q < 2) throw Error(ErrorKind::InvalidArgument, "q must be >= 2");
  if (a_.size() != n * (q - 1)) throw Error(ErrorKind::DimensionMismatch, "a must have n(q-1) entries");
  for (Value x : a_) {
    if (x >= L) throw Error(ErrorKind::InvalidArgument, "a entries must be < L");
  }
  a_prefix_ = prefix_sums(a_, L_);
}

std::vector<std::size_t> RobustCode::members(std::size_t i) const {
  if (i < 1 || i > L_) throw Error(ErrorKind::InvalidArgument, "super cell index out of range");
  std::vector<std::size_t> out;
  for (std::size_t c = i - 1; c < n_; c += L_) out.push_back(c);
  return out;
}

std::uint64_t RobustCode::capacity(std::size_t i) const { return members(i).size() * (q_ - 1); }

std::vector<std::uint64_t> RobustCode::super_levels(const CellState& s) const {
  check_shape(*this, s);
  std::vector<std::uint64_t> h(L_, 0);
  for (std::size_t c = 0; c < n_; ++c) h[c % L_] += s[c];
  return h;
}

bool RobustCode::any_full(const CellState& s) const {
  const auto h = super_levels(s);
  for (std::size_t i = 1; i <= L_; ++i) {
    if (h[i - 1] >= capacity(i)) return true;
  }
  return false;
}

Value RobustCode::decode(const CellState& s) const {
  const auto h = super_levels(s);
  const std::uint64_t w = s.weight();
  if (w == 0) return 0;
  Value acc = a_prefix_[w];
  for (std::size_t i = 1; i <= L_; ++i) acc = (acc + (i % L_) * (h[i - 1] % L_)) % L_;
  return acc;
}

std::size_t RobustCode::target_super_cell(const CellState& s, Value target) const {
  const std::uint64_t w = s.weight();
  if (w >= a_.size()) throw Error(ErrorKind::Exhausted, "every cell is at the top level");
  const Value r = (target + 2 * L_ - decode(s) - a_[w]) % L_;
  return r == 0 ? L_ : r;
}

UpdateVector RobustCode::super_update_vector(const CellState& s) const {
  const Value base = decode(s);
  const auto h = super_levels(s);
  UpdateVector u;
  for (std::size_t i = 1; i <= L_; ++i) {
    if (h[i - 1] >= capacity(i)) throw Error(ErrorKind::SaturatedCell, "super cell " + std::to_string(i) + " is full");
    std::vector<unsigned> one(L_, 0);
    one[i - 1] = 1;
    u.entries.push_back((decode(raise_in_super_cells(s, one)) + L_ - base) % L_);
  }
  return u;
}

CellState RobustCode::raise_in_super_cells(const CellState& s, const std::vector<unsigned>& per_super) const {
  std::vector<unsigned> inc(n_, 0);
  for (std::size_t i = 1; i <= L_; ++i) {
    unsigned left = per_super[i - 1];
    for (std::size_t c : members(i)) {
      if (left == 0) break;
      const unsigned take = std::min<unsigned>(left, q_ - 1 - s[c]);
      inc[c] += take;
      left -= take;
    }
    if (left != 0) throw Error(ErrorKind::OverLevel, "super cell " + std::to_string(i) + " over capacity");
  }
  return s.raise_all(inc);
}

CellState RobustCode::update(const CellState& s, Value target) const {
  const Value current = decode(s);
  check_target(*this, target, current);
  if (policy_ == SaturationPolicy::StopAtFull && any_full(s)) {
    throw Error(ErrorKind::Exhausted, "a super cell is full");
  }
  const auto h = super_levels(s);
  const std::uint64_t w = s.weight();
  if (w >= a_.size()) throw Error(ErrorKind::Exhausted, "every cell is at the top level");

  const std::size_t i = target_super_cell(s, target);
  if (h[i - 1] < capacity(i)) {
    std::vector<unsigned> one(L_, 0);
    one[i - 1] = 1;
    return raise_in_super_cells(s, one);
  }

  // The chosen super cell is full: smallest k raises over the others.
  std::vector<std::uint64_t> weights(L_);
  std::vector<unsigned> caps(L_);
  Value hsum = 0;
  for (std::size_t j = 1; j <= L_; ++j) {
    weights[j - 1] = j % L_;
    caps[j - 1] = static_cast<unsigned>(capacity(j) - h[j - 1]);
    hsum = (hsum + (j % L_) * (h[j - 1] % L_)) % L_;
  }
  const std::uint64_t room = a_.size() - w;
  for (std::uint64_t k = 2; k <= room; ++k) {
    const Value need = (target + 2 * L_ - hsum - a_prefix_[w + k]) % L_;
    if (auto plan = exact_count_plan(weights, caps, L_, need, static_cast<unsigned>(k))) {
      return raise_in_super_cells(s, *plan);
    }
  }
  throw Error(ErrorKind::Unreachable, "no state above the current one decodes to " + std::to_string(target));
}

std::string RobustCode::name() const { return "robust:seed=" + std::to_string(seed_); }

std::string RobustCode::describe(const CellState& s) const {
  std::string out = "h=(";
  const auto h = super_levels(s);
  for (std::size_t i = 0; i < h.size(); ++i) out += (i ? "," : "") + std::to_string(h[i]);
  return out + ")";
}

}  // namespace flashcodes
