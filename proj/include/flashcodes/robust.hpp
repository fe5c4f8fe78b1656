#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "flashcodes/rewriting_code.hpp"

namespace flashcodes {

/// Update vector of a state: entry i is decode(state with cell i raised by
/// one) - decode(state), mod L. Diversity is the number of distinct entries.
struct UpdateVector {
  std::vector<Value> entries;
  std::size_t diversity() const;
};

/// Weight-indexed linear code. With w the state weight,
///   decode = (sum_i theta[w-1][i] c_i + sum_{j<w} a[j]) mod L,
/// all-zero decodes to 0. Updates pick a minimum-weight-increase state above
/// the current one; ties go to the lexicographically smallest sorted list of
/// raised cells.
class ParametricCode final : public RewritingCode {
 public:
  /// theta has n(q-1) rows of n entries; a has n(q-1) entries; all < L.
  ParametricCode(std::size_t n, unsigned q, std::uint64_t L, std::vector<std::vector<Value>> theta,
                 std::vector<Value> a);

  /// theta[w][i] = (i+1) mod L for every row.
  static ParametricCode identity(std::size_t n, unsigned q, std::uint64_t L, std::vector<Value> a);

  std::size_t cell_count() const override { return n_; }
  unsigned levels() const override { return q_; }
  std::uint64_t alphabet() const override { return L_; }

  Value decode(const CellState& s) const override;
  CellState update(const CellState& s, Value target) const override;
  std::string name() const override { return "parametric"; }

  /// Throws SaturatedCell when some level is already q-1.
  UpdateVector update_vector(const CellState& s) const;

  const std::vector<Value>& theta_row(std::size_t w) const { return theta_.at(w); }
  const std::vector<Value>& a() const noexcept { return a_; }

 private:
  Value a_prefix(std::uint64_t w) const { return a_prefix_[w]; }

  std::size_t n_;
  unsigned q_;
  std::uint64_t L_;
  std::vector<std::vector<Value>> theta_;
  std::vector<Value> a_;
  std::vector<Value> a_prefix_;  // a_prefix_[w] = sum_{j<w} a[j] mod L
};

enum class SaturationPolicy {
  StopAtFull,  // refuse further rewrites once any super cell is full
  Continue,    // keep going with multi-increment plans
};

/// Randomized robust code for n >= L. Cells with 1-based index j form super
/// cell ((j-1) mod L) + 1; with h_i the level sum of super cell i,
///   decode = (sum_{i=1..L} i h_i + sum_{j<w} a[j]) mod L,
/// where the a[j] are i.i.d. uniform over {0..L-1}, drawn from `seed`.
class RobustCode final : public RewritingCode {
 public:
  RobustCode(std::size_t n, unsigned q, std::uint64_t L, std::uint64_t seed,
             SaturationPolicy policy = SaturationPolicy::StopAtFull);
  /// Explicit a-sequence (length n(q-1)), for tests.
  RobustCode(std::size_t n, unsigned q, std::uint64_t L, std::vector<Value> a,
             SaturationPolicy policy = SaturationPolicy::StopAtFull);

  std::size_t cell_count() const override { return n_; }
  unsigned levels() const override { return q_; }
  std::uint64_t alphabet() const override { return L_; }
  bool deterministic() const override { return false; }

  Value decode(const CellState& s) const override;
  CellState update(const CellState& s, Value target) const override;
  std::string name() const override;
  std::string describe(const CellState& s) const override;

  std::uint64_t seed() const noexcept { return seed_; }
  SaturationPolicy policy() const noexcept { return policy_; }
  const std::vector<Value>& a() const noexcept { return a_; }

  /// 1-based super cell of 0-based cell index.
  std::size_t super_cell_of(std::size_t cell) const noexcept { return cell % L_ + 1; }
  /// 0-based cell indices of super cell i (1-based).
  std::vector<std::size_t> members(std::size_t i) const;
  std::uint64_t capacity(std::size_t i) const;
  /// h_1..h_L (index 0 holds h_1).
  std::vector<std::uint64_t> super_levels(const CellState& s) const;
  bool any_full(const CellState& s) const;
  /// Super cell (1-based) whose single raise realises `target` from s.
  std::size_t target_super_cell(const CellState& s, Value target) const;
  /// Update vector over super cells, valid while no super cell is full.
  UpdateVector super_update_vector(const CellState& s) const;

 private:
  CellState raise_in_super_cells(const CellState& s, const std::vector<unsigned>& per_super) const;

  std::size_t n_;
  unsigned q_;
  std::uint64_t L_;
  std::uint64_t seed_ = 0;
  SaturationPolicy policy_;
  std::vector<Value> a_;
  std::vector<Value> a_prefix_;
};

}  // namespace flashcodes
