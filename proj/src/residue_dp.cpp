#include "flashcodes/residue_dp.hpp"

#include <algorithm>
#include <limits>

#include "flashcodes/error.hpp"

namespace flashcodes {

namespace {

constexpr unsigned kInf = std::numeric_limits<unsigned>::max() / 2;

std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) { return (a % m + m - b % m) % m; }

}  // namespace

std::optional<std::vector<std::size_t>> min_residue_subset(std::span<const std::uint64_t> weights,
                                                           std::uint64_t modulus, std::uint64_t target,
                                                           bool prefer_last) {
  if (modulus == 0) throw Error(ErrorKind::InvalidArgument, "modulus must be positive");
  const std::size_t f = weights.size();
  target %= modulus;
  // best[i][r]: fewest elements from positions i..f-1 summing to r (empty allowed).
  std::vector<std::vector<unsigned>> best(f + 1, std::vector<unsigned>(modulus, kInf));
  best[f][0] = 0;
  for (std::size_t i = f; i-- > 0;) {
    const std::uint64_t w = weights[i] % modulus;
    for (std::uint64_t r = 0; r < modulus; ++r) {
      const unsigned take = best[i + 1][sub_mod(r, w, modulus)];
      best[i][r] = std::min(best[i + 1][r], take == kInf ? kInf : take + 1);
    }
  }
  // Fewest elements with at least one taken.
  unsigned k = kInf;
  for (std::size_t i = 0; i < f; ++i) {
    const unsigned rest = best[i + 1][sub_mod(target, weights[i], modulus)];
    if (rest != kInf) k = std::min(k, rest + 1);
  }
  if (k == kInf) return std::nullopt;

  // Pick elements one at a time; position i is eligible when the remainder is
  // still completable with exactly the remaining count from i+1 onwards.
  std::vector<std::size_t> chosen;
  std::uint64_t r = target;
  std::size_t lo = 0;
  for (unsigned need = k; need > 0; --need) {
    std::size_t pick = f;
    for (std::size_t i = lo; i < f; ++i) {
      if (best[i + 1][sub_mod(r, weights[i], modulus)] + 1 == need) {
        pick = i;
        if (!prefer_last) break;
      }
    }
    chosen.push_back(pick);
    r = sub_mod(r, weights[pick], modulus);
    lo = pick + 1;
  }
  return chosen;
}

std::optional<std::vector<unsigned>> exact_count_plan(std::span<const std::uint64_t> weights,
                                                      std::span<const unsigned> capacities,
                                                      std::uint64_t modulus, std::uint64_t target,
                                                      unsigned count) {
  if (modulus == 0) throw Error(ErrorKind::InvalidArgument, "modulus must be positive");
  if (weights.size() != capacities.size()) throw Error(ErrorKind::DimensionMismatch, "weights/capacities");
  const std::size_t f = weights.size();
  const std::size_t stride = static_cast<std::size_t>(count + 1) * modulus;
  // ok[i][c][r]: slots i..f-1 can take exactly c increments with residue r.
  std::vector<char> ok((f + 1) * stride, 0);
  auto at = [&](std::size_t i, unsigned c, std::uint64_t r) -> char& { return ok[i * stride + c * modulus + r]; };
  at(f, 0, 0) = 1;
  for (std::size_t i = f; i-- > 0;) {
    const std::uint64_t w = weights[i] % modulus;
    const unsigned cap = std::min(capacities[i], count);
    for (unsigned c = 0; c <= count; ++c) {
      for (std::uint64_t r = 0; r < modulus; ++r) {
        for (unsigned x = 0; x <= std::min(cap, c); ++x) {
          if (at(i + 1, c - x, sub_mod(r, (x * w) % modulus, modulus))) {
            at(i, c, r) = 1;
            break;
          }
        }
      }
    }
  }
  target %= modulus;
  if (!at(0, count, target)) return std::nullopt;
  std::vector<unsigned> plan(f, 0);
  unsigned c = count;
  std::uint64_t r = target;
  for (std::size_t i = 0; i < f; ++i) {
    const std::uint64_t w = weights[i] % modulus;
    for (unsigned x = std::min(capacities[i], c) + 1; x-- > 0;) {
      const std::uint64_t rr = sub_mod(r, (x * w) % modulus, modulus);
      if (at(i + 1, c - x, rr)) {
        plan[i] = x;
        c -= x;
        r = rr;
        break;
      }
    }
  }
  return plan;
}

}  // namespace flashcodes
