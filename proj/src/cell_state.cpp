#include "flashcodes/cell_state.hpp"

#include <charconv>
#include <numeric>

#include "flashcodes/error.hpp"

namespace flashcodes {

namespace {

void check_q(unsigned q) {
  if (q < 2 || q > CellState::kMaxLevels) {
    throw Error(ErrorKind::InvalidArgument, "q must be in [2, 65535], got " + std::to_string(q));
  }
}

}  // namespace

CellState::CellState(std::size_t n, unsigned q) : levels_(n, 0), q_(q) {
  check_q(q);
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "cell count must be >= 1");
}

CellState::CellState(std::vector<Level> levels, unsigned q, bool) : levels_(std::move(levels)), q_(q) {}

CellState CellState::from_levels(std::vector<Level> levels, unsigned q) {
  check_q(q);
  if (levels.empty()) throw Error(ErrorKind::InvalidArgument, "cell count must be >= 1");
  for (Level l : levels) {
    if (l > q - 1) {
      throw Error(ErrorKind::OverLevel, "level " + std::to_string(l) + " exceeds q-1=" + std::to_string(q - 1));
    }
  }
  return CellState(std::move(levels), q, true);
}

CellState CellState::parse(std::string_view text, unsigned q) {
  std::vector<Level> levels;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view tok = text.substr(pos, comma - pos);
    unsigned v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size() || tok.empty()) {
      throw Error(ErrorKind::InvalidArgument, "bad level list '" + std::string(text) + "'");
    }
    if (v > kMaxLevels) throw Error(ErrorKind::OverLevel, "level out of range");
    levels.push_back(static_cast<Level>(v));
    pos = comma + 1;
  }
  return from_levels(std::move(levels), q);
}

std::uint64_t CellState::weight() const noexcept {
  return std::accumulate(levels_.begin(), levels_.end(), std::uint64_t{0});
}

bool CellState::is_zero() const noexcept {
  for (Level l : levels_) {
    if (l != 0) return false;
  }
  return true;
}

CellState CellState::raise(std::size_t i, unsigned amount) const {
  if (i >= levels_.size()) throw Error(ErrorKind::DimensionMismatch, "cell index out of range");
  if (amount == 0) throw Error(ErrorKind::InvalidArgument, "raise amount must be positive");
  if (levels_[i] + static_cast<std::uint64_t>(amount) > q_ - 1) {
    throw Error(ErrorKind::OverLevel, "cell " + std::to_string(i) + " would exceed level " + std::to_string(q_ - 1));
  }
  auto next = levels_;
  next[i] = static_cast<Level>(next[i] + amount);
  return CellState(std::move(next), q_, true);
}

CellState CellState::raise_all(std::span<const unsigned> increments) const {
  if (increments.size() != levels_.size()) throw Error(ErrorKind::DimensionMismatch, "increment vector size");
  auto next = levels_;
  for (std::size_t i = 0; i < next.size(); ++i) {
    if (next[i] + static_cast<std::uint64_t>(increments[i]) > q_ - 1) {
      throw Error(ErrorKind::OverLevel, "cell " + std::to_string(i) + " would exceed level " + std::to_string(q_ - 1));
    }
    next[i] = static_cast<Level>(next[i] + increments[i]);
  }
  return CellState(std::move(next), q_, true);
}

bool CellState::is_above(const CellState& below) const {
  if (below.size() != size() || below.q_ != q_) {
    throw Error(ErrorKind::DimensionMismatch, "states have different shapes");
  }
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    if (levels_[i] < below.levels_[i]) return false;
  }
  return true;
}

CellState CellState::slice(std::size_t offset, std::size_t count) const {
  if (count == 0 || offset + count > levels_.size()) throw Error(ErrorKind::DimensionMismatch, "slice out of range");
  return CellState(std::vector<Level>(levels_.begin() + offset, levels_.begin() + offset + count), q_, true);
}

CellState CellState::with_block(std::size_t offset, const CellState& block) const {
  if (block.q_ != q_ || offset + block.size() > levels_.size()) {
    throw Error(ErrorKind::DimensionMismatch, "block does not fit");
  }
  auto next = levels_;
  for (std::size_t i = 0; i < block.size(); ++i) {
    if (block.levels_[i] < next[offset + i]) {
      throw Error(ErrorKind::ContractViolation, "block would lower cell " + std::to_string(offset + i));
    }
    next[offset + i] = block.levels_[i];
  }
  return CellState(std::move(next), q_, true);
}

std::string CellState::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(levels_[i]);
  }
  return out;
}

std::size_t CellStateHash::operator()(const CellState& s) const noexcept {
  // FNV-1a over the level bytes.
  std::uint64_t h = 1469598103934665603ull;
  for (Level l : s.levels()) {
    h ^= l;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace flashcodes
