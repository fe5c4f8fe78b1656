#pragma once

#include <cstdint>
#include <random>

namespace flashcodes {

/// SplitMix64 finaliser; maps (master, index) pairs to well-spread seeds.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

/// Uniform integer in [0, bound) by rejection, independent of the standard
/// library's distribution implementation.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

}  // namespace flashcodes
