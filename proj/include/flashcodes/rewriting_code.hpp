#pragma once

#include <cstddef>
#include <memory>
#include <string>

#include "flashcodes/cell_state.hpp"

namespace flashcodes {

/// A rewriting code: a decode map from cell states to data values and an
/// update map that moves a state upward to encode a new value.
///
/// Contract for every implementation, for any reachable state s and target
/// v != decode(s): update(s, v) is above s, differs from s, and decodes to v.
/// update throws Error{Exhausted} or Error{Unreachable} when it cannot comply.
class RewritingCode {
 public:
  virtual ~RewritingCode() = default;

  virtual std::size_t cell_count() const = 0;
  virtual unsigned levels() const = 0;
  /// Number of data values the code stores (values are 0..alphabet()-1).
  virtual std::uint64_t alphabet() const = 0;

  /// The state holding the default value 0 before any rewrite.
  virtual CellState initial_state() const { return CellState(cell_count(), levels()); }
  virtual Value decode(const CellState& s) const = 0;
  virtual CellState update(const CellState& s, Value target) const = 0;

  /// Short spec-style description, e.g. "modular:L=8".
  virtual std::string name() const = 0;
  /// Optional per-state annotation for traces.
  virtual std::string describe(const CellState&) const { return {}; }
  /// True when the code is deterministic (no hidden randomness beyond its parameters).
  virtual bool deterministic() const { return true; }
};

using CodePtr = std::shared_ptr<const RewritingCode>;

}  // namespace flashcodes
