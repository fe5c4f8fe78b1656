#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "flashcodes/data_graph.hpp"
#include "flashcodes/rewriting_code.hpp"

namespace flashcodes {

enum class TrajectoryMode {
  Complete,    // d = 0, the anchor is the whole code
  SmallDelta,  // edge registers run modular codes over alphabet Delta
  LargeDelta,  // edge registers run split codes, d = floor(log L / log Delta)
};

std::string_view to_string(TrajectoryMode mode);

struct RegisterPlan {
  std::size_t offset = 0;
  std::size_t cells = 0;
  CodePtr code;  // alphabet L for the anchor, Delta for edge registers
};

struct TrajectoryLayout {
  TrajectoryMode mode = TrajectoryMode::Complete;
  std::size_t d = 0;
  std::size_t n = 0;  // register budget
  unsigned q = 2;
  std::uint64_t L = 0;
  std::size_t delta = 0;
  std::size_t threshold = 0;  // floor(n log(n/log L) / (2 log L))
  std::vector<RegisterPlan> registers;  // S_0 (anchor) .. S_d
  std::size_t counter_offset = 0;
  std::size_t counter_cells = 0;
  std::uint64_t t_target = 0;
  bool guaranteed = true;  // false outside L <= 2^(n/16) for non-complete graphs

  std::size_t total_cells() const noexcept { return counter_offset + counter_cells; }
};

/// Register sizes and sub-codes for the trajectory code. Counter cells are
/// placed after the n register cells and sized so that t_target rewrites
/// (plus the initial anchor store) fit.
TrajectoryLayout plan_layout(std::size_t n, unsigned q, const DataGraph& graph, std::uint64_t t_target);

/// Anchor register plus d edge-label registers plus a unary write counter.
/// Write number s (the initial anchor store of value 0 is write 1) goes to
/// register (s-1) mod (d+1).
class TrajectoryCode final : public RewritingCode {
 public:
  TrajectoryCode(std::shared_ptr<const DataGraph> graph, TrajectoryLayout layout);

  std::size_t cell_count() const override { return layout_.total_cells(); }
  unsigned levels() const override { return layout_.q; }
  std::uint64_t alphabet() const override { return layout_.L; }

  /// Counter at 1: the anchor holds v_0 = 0 (already the decode of an all-zero
  /// register), so the store costs only the counter unit.
  CellState initial_state() const override;
  Value decode(const CellState& s) const override;
  CellState update(const CellState& s, Value target) const override;
  std::string name() const override { return "trajectory"; }
  std::string describe(const CellState& s) const override;

  const TrajectoryLayout& layout() const noexcept { return layout_; }
  const DataGraph& graph() const noexcept { return *graph_; }

  /// Total level of the counter cells.
  std::uint64_t counter_read(const CellState& s) const;
  /// Register that write number s+1 lands in.
  std::size_t next_register(const CellState& s) const;
  /// Value currently held by register r's sub-code.
  Value register_value(const CellState& s, std::size_t r) const;

 private:
  std::shared_ptr<const DataGraph> graph_;
  TrajectoryLayout layout_;
};

}  // namespace flashcodes
