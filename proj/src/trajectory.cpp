#include "flashcodes/trajectory.hpp"

#include <cmath>

#include "flashcodes/bounds.hpp"
#include "flashcodes/error.hpp"
#include "flashcodes/register_codes.hpp"

namespace flashcodes {

std::string_view to_string(TrajectoryMode mode) {
  switch (mode) {
    case TrajectoryMode::Complete: return "complete";
    case TrajectoryMode::SmallDelta: return "small-delta";
    case TrajectoryMode::LargeDelta: return "large-delta";
  }
  return "unknown";
}

namespace {

CodePtr register_code(std::size_t cells, unsigned q, std::uint64_t alphabet, const char* what) {
  if (cells == 0) throw Error(ErrorKind::InfeasibleLayout, std::string(what) + " register has no cells");
  try {
    return make_complete_graph_code(cells, q, alphabet);
  } catch (const Error& e) {
    throw Error(ErrorKind::InfeasibleLayout, std::string(what) + " register: " + e.what());
  }
}

// floor(x) for ratios of logs that should land on integers exactly.
std::size_t floor_ratio(double x) { return static_cast<std::size_t>(std::floor(x + 1e-9)); }

}  // namespace

TrajectoryLayout plan_layout(std::size_t n, unsigned q, const DataGraph& graph, std::uint64_t t_target) {
  if (q < 2) throw Error(ErrorKind::InvalidArgument, "q must be >= 2");
  TrajectoryLayout layout;
  layout.n = n;
  layout.q = q;
  layout.L = graph.vertex_count();
  layout.delta = graph.max_out_degree();
  layout.threshold = delta_threshold(n, layout.L);
  layout.t_target = t_target;

  if (graph.is_complete()) {
    layout.mode = TrajectoryMode::Complete;
    layout.d = 0;
    layout.registers.push_back({0, n, register_code(n, q, layout.L, "anchor")});
  } else {
    const double log_L = clamped_log2(static_cast<double>(layout.L));
    layout.guaranteed = log_L <= static_cast<double>(n) / 16.0;
    if (layout.delta < 2) throw Error(ErrorKind::InfeasibleLayout, "edge registers need Delta >= 2");
    if (layout.delta <= layout.threshold) {
      layout.mode = TrajectoryMode::SmallDelta;
      const double spread = std::log2(static_cast<double>(n) / log_L);
      layout.d = std::max<std::size_t>(1, floor_ratio(log_L / spread));
    } else {
      layout.mode = TrajectoryMode::LargeDelta;
      layout.d = std::max<std::size_t>(1, floor_ratio(log_L / std::log2(static_cast<double>(layout.delta))));
    }
    const std::size_t n0 = n / 2;
    const std::size_t ni = n / (2 * layout.d);
    layout.registers.push_back({0, n0, register_code(n0, q, layout.L, "anchor")});
    for (std::size_t i = 1; i <= layout.d; ++i) {
      const std::size_t offset = n0 + (i - 1) * ni;
      CodePtr code;
      if (layout.mode == TrajectoryMode::SmallDelta) {
        if (ni < layout.delta) {
          throw Error(ErrorKind::InfeasibleLayout,
                      "edge register of " + std::to_string(ni) + " cells cannot host alphabet " + std::to_string(layout.delta));
        }
        code = std::make_shared<ModularCode>(ni, q, layout.delta);
      } else {
        code = register_code(ni, q, layout.delta, "edge");
      }
      layout.registers.push_back({offset, ni, std::move(code)});
    }
  }
  layout.counter_offset = n;
  layout.counter_cells = std::max<std::uint64_t>(1, (t_target + 1 + (q - 2)) / (q - 1));
  return layout;
}

TrajectoryCode::TrajectoryCode(std::shared_ptr<const DataGraph> graph, TrajectoryLayout layout)
    : graph_(std::move(graph)), layout_(std::move(layout)) {
  if (!graph_) throw Error(ErrorKind::InvalidArgument, "trajectory code needs a graph");
  if (graph_->vertex_count() != layout_.L) throw Error(ErrorKind::InvalidArgument, "layout was planned for another graph");
  if (layout_.registers.size() != layout_.d + 1) throw Error(ErrorKind::InvalidArgument, "layout register count");
}

CellState TrajectoryCode::initial_state() const {
  return CellState(cell_count(), levels()).raise(layout_.counter_offset);
}

std::uint64_t TrajectoryCode::counter_read(const CellState& s) const {
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < layout_.counter_cells; ++i) total += s[layout_.counter_offset + i];
  return total;
}

std::size_t TrajectoryCode::next_register(const CellState& s) const {
  return static_cast<std::size_t>(counter_read(s) % (layout_.d + 1));
}

Value TrajectoryCode::register_value(const CellState& s, std::size_t r) const {
  const auto& reg = layout_.registers.at(r);
  return reg.code->decode(s.slice(reg.offset, reg.cells));
}

Value TrajectoryCode::decode(const CellState& s) const {
  if (s.size() != cell_count()) throw Error(ErrorKind::DimensionMismatch, "state shape does not match trajectory layout");
  const std::uint64_t writes = std::max<std::uint64_t>(1, counter_read(s));
  const std::size_t edges = static_cast<std::size_t>((writes - 1) % (layout_.d + 1));
  Value v = register_value(s, 0);
  if (v >= layout_.L) throw Error(ErrorKind::CorruptState, "anchor holds " + std::to_string(v));
  for (std::size_t r = 1; r <= edges; ++r) {
    const Value label = register_value(s, r);
    if (label >= graph_->out_degree(v)) {
      throw Error(ErrorKind::CorruptState, "register S_" + std::to_string(r) + " label " + std::to_string(label) + " has no edge at vertex " + std::to_string(v));
    }
    v = graph_->follow(v, label);
  }
  return v;
}

CellState TrajectoryCode::update(const CellState& s, Value target) const {
  const Value current = decode(s);
  if (target == current) throw Error(ErrorKind::InvalidArgument, "rewrite must change the stored value");
  if (!graph_->has_edge(current, target)) {
    throw Error(ErrorKind::NotAnEdge, "(" + std::to_string(current) + "," + std::to_string(target) + ") is not an edge");
  }
  const std::uint64_t writes = counter_read(s);
  if (writes == 0) throw Error(ErrorKind::CorruptState, "trajectory state lacks the initial anchor store");

  const std::size_t r = static_cast<std::size_t>(writes % (layout_.d + 1));
  const auto& reg = layout_.registers[r];
  const Value symbol = r == 0 ? target : graph_->edge_label(current, target);

  CellState out = s;
  const CellState block = s.slice(reg.offset, reg.cells);
  if (reg.code->decode(block) != symbol) {
    try {
      out = out.with_block(reg.offset, reg.code->update(block, symbol));
    } catch (const Error& e) {
      if (!is_capacity_failure(e.kind())) throw;
      throw Error(ErrorKind::Exhausted, "register S_" + std::to_string(r) + ": " + e.what());
    }
  }
  for (std::size_t i = 0; i < layout_.counter_cells; ++i) {
    if (out[layout_.counter_offset + i] < layout_.q - 1) return out.raise(layout_.counter_offset + i);
  }
  throw Error(ErrorKind::Exhausted, "write counter is full");
}

std::string TrajectoryCode::describe(const CellState& s) const {
  const std::uint64_t writes = counter_read(s);
  if (writes == 0) return "s=0";
  const std::size_t r = static_cast<std::size_t>((writes - 1) % (layout_.d + 1));
  return "s=" + std::to_string(writes) + " S_" + std::to_string(r) + "=" + std::to_string(register_value(s, r));
}

}  // namespace flashcodes
