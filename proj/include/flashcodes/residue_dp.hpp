#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace flashcodes {

/// Smallest non-empty subset of `weights` (each usable once) whose sum is
/// congruent to `target` mod `modulus`. Among minimum-cardinality subsets the
/// lexicographically smallest list of positions wins (or the largest, when
/// `prefer_last` is set). Returns positions into `weights`, ascending.
std::optional<std::vector<std::size_t>> min_residue_subset(std::span<const std::uint64_t> weights,
                                                           std::uint64_t modulus, std::uint64_t target,
                                                           bool prefer_last = false);

/// Chooses exactly `count` unit increments over slots with per-slot capacity
/// so that sum(x_i * weights_i) == target (mod modulus). Among solutions the
/// one whose sorted slot sequence is lexicographically smallest wins, i.e.
/// earlier slots take as many increments as possible. Returns x_i per slot.
std::optional<std::vector<unsigned>> exact_count_plan(std::span<const std::uint64_t> weights,
                                                      std::span<const unsigned> capacities,
                                                      std::uint64_t modulus, std::uint64_t target,
                                                      unsigned count);

}  // namespace flashcodes
