#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "flashcodes/rewriting_code.hpp"

namespace flashcodes {

enum class TieBreak {
  Lexicographic,  // smallest ascending index list among minimum sets
  Reversed,       // largest; only used to show that traces are tie-break sensitive
};

/// Modular WOM code for 2 <= L <= n. Cells split into floor(n/L) groups of L;
/// each group stores sum_i i*(c_i - c_0) mod L, using one band of two levels
/// at a time. Groups are used in order; the active group is the last one
/// holding a nonzero cell.
class ModularCode final : public RewritingCode {
 public:
  ModularCode(std::size_t n, unsigned q, std::uint64_t L, TieBreak tie_break = TieBreak::Lexicographic);

  std::size_t cell_count() const override { return n_; }
  unsigned levels() const override { return q_; }
  std::uint64_t alphabet() const override { return L_; }
  std::size_t group_count() const noexcept { return groups_; }

  Value decode(const CellState& s) const override;
  CellState update(const CellState& s, Value target) const override;
  std::string name() const override;
  std::string describe(const CellState& s) const override;

  /// Index of the group currently holding the value.
  std::size_t active_group(const CellState& s) const;
  /// Value of one group of L levels under the group decode formula.
  Value group_value(std::span<const Level> group) const;
  /// Re-encodes one group (levels span of size L) to `target`. `fresh` marks
  /// a group that is not yet active, so at least one cell must move even when
  /// target is 0. Returns nullopt when the group cannot hold the rewrite.
  std::optional<std::vector<Level>> encode_group(std::span<const Level> group, Value target, bool fresh) const;

 private:
  std::size_t n_;
  unsigned q_;
  std::uint64_t L_;
  std::size_t groups_;
  TieBreak tie_break_;
};

/// Radix representation code: every write stores the n base-R digits of the
/// value in a fresh band of R levels. R = max(2, ceil(L^(1/n))).
class BaseRepCode final : public RewritingCode {
 public:
  BaseRepCode(std::size_t n, unsigned q, std::uint64_t L);

  std::size_t cell_count() const override { return n_; }
  unsigned levels() const override { return q_; }
  std::uint64_t alphabet() const override { return L_; }
  unsigned radix() const noexcept { return radix_; }
  /// Writes the code can hold, counting the first one: floor(q / R).
  unsigned band_count() const noexcept { return q_ / radix_; }

  Value decode(const CellState& s) const override;
  CellState update(const CellState& s, Value target) const override;
  std::string name() const override;

  /// Smallest R >= 2 with R^n >= L.
  static unsigned radix_for(std::size_t n, std::uint64_t L);

 private:
  std::size_t n_;
  unsigned q_;
  std::uint64_t L_;
  unsigned radix_;
};

/// Smallest b >= 1 with floor(n/b)^b >= L. Throws NoFeasibleB.
unsigned choose_b(std::size_t n, std::uint64_t L);

/// Split code: values written as b digits of radix M = floor(n/b), group 1
/// holding the most significant digit; each digit lives in its own modular
/// code over M cells.
class SplitCode final : public RewritingCode {
 public:
  SplitCode(std::size_t n, unsigned q, std::uint64_t L, TieBreak tie_break = TieBreak::Lexicographic);

  std::size_t cell_count() const override { return n_; }
  unsigned levels() const override { return q_; }
  std::uint64_t alphabet() const override { return L_; }
  unsigned groups() const noexcept { return b_; }
  std::size_t digit_radix() const noexcept { return M_; }
  const ModularCode& group_code() const noexcept { return inner_; }

  Value decode(const CellState& s) const override;
  CellState update(const CellState& s, Value target) const override;
  std::string name() const override;
  std::string describe(const CellState& s) const override;

  std::vector<Value> digits_of(Value v) const;
  std::vector<Value> digits(const CellState& s) const;

 private:
  std::size_t n_;
  unsigned q_;
  std::uint64_t L_;
  unsigned b_;
  std::size_t M_;
  ModularCode inner_;
};

/// Code for a complete data graph on L values in n cells: modular when
/// L <= n, split when a split exists, base representation otherwise.
CodePtr make_complete_graph_code(std::size_t n, unsigned q, std::uint64_t L);

}  // namespace flashcodes
