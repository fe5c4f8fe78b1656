#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace flashcodes {

using Level = std::uint16_t;
using Value = std::uint64_t;

/// Levels of n flash cells, each in [0, q-1]. Immutable: every operation
/// returns a new state, and levels only ever move upwards.
class CellState {
 public:
  static constexpr unsigned kMaxLevels = 65535;

  /// All-zero state of n cells with q levels each.
  CellState(std::size_t n, unsigned q);

  static CellState from_levels(std::vector<Level> levels, unsigned q);
  /// Parses "0,0,1,1" (the trace format).
  static CellState parse(std::string_view text, unsigned q);

  std::size_t size() const noexcept { return levels_.size(); }
  unsigned q() const noexcept { return q_; }
  Level operator[](std::size_t i) const { return levels_[i]; }
  std::span<const Level> levels() const noexcept { return levels_; }

  /// Sum of all levels.
  std::uint64_t weight() const noexcept;
  bool is_zero() const noexcept;

  /// Level i increased by `amount`; throws OverLevel past q-1.
  CellState raise(std::size_t i, unsigned amount = 1) const;
  /// Adds increments[i] to every cell i; increments.size() must equal size().
  CellState raise_all(std::span<const unsigned> increments) const;

  /// True iff every level of *this is >= the matching level of `below`.
  bool is_above(const CellState& below) const;

  /// Cells [offset, offset+count) as a standalone state.
  CellState slice(std::size_t offset, std::size_t count) const;
  /// Replaces cells [offset, offset+block.size()) with `block`, which must be
  /// above the current contents of that range.
  CellState with_block(std::size_t offset, const CellState& block) const;

  std::string to_string() const;

  friend bool operator==(const CellState&, const CellState&) = default;

 private:
  CellState(std::vector<Level> levels, unsigned q, bool);

  std::vector<Level> levels_;
  unsigned q_;
};

/// Free-function form: is s2 above s1.
inline bool is_above(const CellState& s2, const CellState& s1) { return s2.is_above(s1); }

struct CellStateHash {
  std::size_t operator()(const CellState& s) const noexcept;
};

}  // namespace flashcodes
