#include "flashcodes/register_codes.hpp"

#include <algorithm>

#include "flashcodes/error.hpp"
#include "flashcodes/residue_dp.hpp"

namespace flashcodes {

namespace {

void check_target(const RewritingCode& code, const CellState& s, Value target, Value current) {
  if (s.size() != code.cell_count() || s.q() != code.levels()) {
    throw Error(ErrorKind::DimensionMismatch, "state shape does not match " + code.name());
  }
  if (target >= code.alphabet()) {
    throw Error(ErrorKind::InvalidArgument, "value " + std::to_string(target) + " outside alphabet of " + code.name());
  }
  if (target == current) {
    throw Error(ErrorKind::InvalidArgument, "rewrite must change the stored value");
  }
}

// Saturating a^b, capped at `cap`.
std::uint64_t pow_capped(std::uint64_t a, std::uint64_t b, std::uint64_t cap) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 0; i < b; ++i) {
    if (a != 0 && out > cap / a) return cap;
    out *= a;
    if (out >= cap) return cap;
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------- modular --

ModularCode::ModularCode(std::size_t n, unsigned q, std::uint64_t L, TieBreak tie_break)
    : n_(n), q_(q), L_(L), groups_(0), tie_break_(tie_break) {
  if (L < 2 || L > n) {
    throw Error(ErrorKind::InvalidArgument, "modular code needs 2 <= L <= n (L=" + std::to_string(L) + ", n=" + std::to_string(n) + ")");
  }
  if (q < 2) throw Error(ErrorKind::InvalidArgument, "q must be >= 2");
  groups_ = n / L;
}

std::size_t ModularCode::active_group(const CellState& s) const {
  for (std::size_t g = groups_; g-- > 1;) {
    for (std::size_t i = 0; i < L_; ++i) {
      if (s[g * L_ + i] != 0) return g;
    }
  }
  return 0;
}

Value ModularCode::group_value(std::span<const Level> group) const {
  const std::int64_t base = group[0];
  const auto L = static_cast<std::int64_t>(L_);
  std::int64_t acc = 0;
  for (std::size_t i = 1; i < group.size(); ++i) {
    acc = (acc + static_cast<std::int64_t>(i % L_) * ((group[i] - base) % L)) % L;
  }
  return static_cast<Value>((acc % L + L) % L);
}

Value ModularCode::decode(const CellState& s) const {
  if (s.size() != n_) throw Error(ErrorKind::DimensionMismatch, "state shape does not match " + name());
  const std::size_t g = active_group(s);
  return group_value(s.levels().subspan(g * L_, L_));
}

std::optional<std::vector<Level>> ModularCode::encode_group(std::span<const Level> group, Value target, bool fresh) const {
  const Level band = group[0];
  for (Level l : group) {
    if (l < band || l > band + 1) throw Error(ErrorKind::CorruptState, "group levels span more than one band");
  }
  const Value current = fresh ? 0 : group_value(group);
  const Value delta = (target + L_ - current) % L_;

  std::vector<Level> out(group.begin(), group.end());
  if (band + 1 <= static_cast<int>(q_) - 1) {
    std::vector<std::uint64_t> weights;
    std::vector<std::size_t> cells;
    for (std::size_t i = 1; i < group.size(); ++i) {
      if (group[i] == band) {
        weights.push_back(i);
        cells.push_back(i);
      }
    }
    if (auto pick = min_residue_subset(weights, L_, delta, tie_break_ == TieBreak::Reversed)) {
      for (std::size_t p : *pick) out[cells[p]] = band + 1;
      return out;
    }
    // Band exhausted: lift every cell (c_0 included) to the next band, where
    // the group decodes to 0, then write the target there.
    std::fill(out.begin(), out.end(), static_cast<Level>(band + 1));
    if (target == 0) return out;
    if (band + 2 <= static_cast<int>(q_) - 1) {
      out[target] = band + 2;
      return out;
    }
  }
  return std::nullopt;
}

CellState ModularCode::update(const CellState& s, Value target) const {
  const Value current = decode(s);
  check_target(*this, s, target, current);
  const std::size_t g = active_group(s);
  std::optional<std::vector<Level>> group = encode_group(s.levels().subspan(g * L_, L_), target, false);
  std::size_t where = g;
  if (!group && g + 1 < groups_) {
    where = g + 1;
    group = encode_group(s.levels().subspan(where * L_, L_), target, true);
  }
  if (!group) {
    throw Error(ErrorKind::Exhausted, name() + ": last group cannot encode " + std::to_string(target));
  }
  return s.with_block(where * L_, CellState::from_levels(std::move(*group), q_));
}

std::string ModularCode::name() const { return "modular:L=" + std::to_string(L_); }

std::string ModularCode::describe(const CellState& s) const {
  const std::size_t g = active_group(s);
  return "group=" + std::to_string(g) + " band=" + std::to_string(s[g * L_]);
}

// --------------------------------------------------------------- base-rep --

unsigned BaseRepCode::radix_for(std::size_t n, std::uint64_t L) {
  unsigned R = 2;
  while (pow_capped(R, n, L) < L) ++R;
  return R;
}

BaseRepCode::BaseRepCode(std::size_t n, unsigned q, std::uint64_t L) : n_(n), q_(q), L_(L), radix_(0) {
  if (n < 1 || L < 2 || q < 2) throw Error(ErrorKind::InvalidArgument, "base-representation code needs n >= 1, L >= 2, q >= 2");
  radix_ = radix_for(n, L);
  if (radix_ > q) {
    throw Error(ErrorKind::InvalidArgument, "radix " + std::to_string(radix_) + " exceeds q=" + std::to_string(q) + "; L > q^n");
  }
}

Value BaseRepCode::decode(const CellState& s) const {
  if (s.size() != n_) throw Error(ErrorKind::DimensionMismatch, "state shape does not match " + name());
  Value acc = 0;
  Value place = 1 % L_;
  for (std::size_t i = 0; i < n_; ++i) {
    acc = (acc + (s[i] % radix_) * place) % L_;
    place = (place * radix_) % L_;
  }
  return acc;
}

CellState BaseRepCode::update(const CellState& s, Value target) const {
  check_target(*this, s, target, decode(s));
  const unsigned top = *std::max_element(s.levels().begin(), s.levels().end());
  const unsigned band = s.is_zero() ? 0 : top / radix_ + 1;
  if (band * radix_ + radix_ - 1 > q_ - 1) {
    throw Error(ErrorKind::Exhausted, name() + ": no band left above level " + std::to_string(top));
  }
  std::vector<unsigned> inc(n_);
  Value rest = target;
  for (std::size_t i = 0; i < n_; ++i) {
    const unsigned level = band * radix_ + static_cast<unsigned>(rest % radix_);
    rest /= radix_;
    inc[i] = level - s[i];
  }
  return s.raise_all(inc);
}

std::string BaseRepCode::name() const { return "baserep:L=" + std::to_string(L_); }

// ------------------------------------------------------------------ split --

unsigned choose_b(std::size_t n, std::uint64_t L) {
  if (L < 2 || n < 1) throw Error(ErrorKind::InvalidArgument, "choose_b needs n >= 1 and L >= 2");
  for (std::size_t b = 1; b <= n; ++b) {
    if (pow_capped(n / b, b, L) >= L) return static_cast<unsigned>(b);
  }
  throw Error(ErrorKind::NoFeasibleB, "no b with floor(n/b)^b >= L for n=" + std::to_string(n) + ", L=" + std::to_string(L));
}

SplitCode::SplitCode(std::size_t n, unsigned q, std::uint64_t L, TieBreak tie_break)
    : n_(n), q_(q), L_(L), b_(choose_b(n, L)), M_(n / b_), inner_(M_, q, M_, tie_break) {}

std::vector<Value> SplitCode::digits_of(Value v) const {
  std::vector<Value> out(b_);
  for (std::size_t j = b_; j-- > 0;) {
    out[j] = v % M_;
    v /= M_;
  }
  return out;
}

std::vector<Value> SplitCode::digits(const CellState& s) const {
  if (s.size() != n_) throw Error(ErrorKind::DimensionMismatch, "state shape does not match " + name());
  std::vector<Value> out(b_);
  for (std::size_t j = 0; j < b_; ++j) out[j] = inner_.group_value(s.levels().subspan(j * M_, M_));
  return out;
}

Value SplitCode::decode(const CellState& s) const {
  Value v = 0;
  for (Value d : digits(s)) v = v * M_ + d;
  return v;
}

CellState SplitCode::update(const CellState& s, Value target) const {
  check_target(*this, s, target, decode(s));
  const auto old_digits = digits(s);
  const auto new_digits = digits_of(target);
  CellState out = s;
  for (std::size_t j = 0; j < b_; ++j) {
    if (old_digits[j] == new_digits[j]) continue;
    out = out.with_block(j * M_, inner_.update(s.slice(j * M_, M_), new_digits[j]));
  }
  return out;
}

std::string SplitCode::name() const { return "split:L=" + std::to_string(L_); }

std::string SplitCode::describe(const CellState& s) const {
  std::string out = "digits=(";
  const auto d = digits(s);
  for (std::size_t j = 0; j < d.size(); ++j) out += (j ? "," : "") + std::to_string(d[j]);
  return out + ")";
}

CodePtr make_complete_graph_code(std::size_t n, unsigned q, std::uint64_t L) {
  if (L <= n) return std::make_shared<ModularCode>(n, q, L);
  try {
    return std::make_shared<SplitCode>(n, q, L);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NoFeasibleB) throw;
  }
  const unsigned R = BaseRepCode::radix_for(n, L);
  if (R > q) {
    throw Error(ErrorKind::InfeasibleLayout, "no code stores L=" + std::to_string(L) + " values in " + std::to_string(n) + " cells of " + std::to_string(q) + " levels");
  }
  return std::make_shared<BaseRepCode>(n, q, L);
}

}  // namespace flashcodes
