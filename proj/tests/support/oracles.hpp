#pragma once

// Independent reference implementations used to derive expected values.
// Deliberately naive: brute force over subsets, Pascal's triangle, plain
// recursion, and exact generating-function sums.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <deque>
#include <functional>
#include <limits>
#include <map>
#include <set>
#include <vector>

namespace oracle {

using u64 = std::uint64_t;

// Group decode: sum_i i * (c_i - c_0) mod L, computed with signed arithmetic.
inline u64 group_decode(const std::vector<int>& c, u64 L) {
  long long sum = 0;
  for (std::size_t i = 1; i < c.size(); ++i) sum += static_cast<long long>(i) * (c[i] - c[0]);
  long long m = sum % static_cast<long long>(L);
  if (m < 0) m += static_cast<long long>(L);
  return static_cast<u64>(m);
}

// All minimum-size non-empty subsets of `weights` summing to target mod m,
// as ascending index lists in lexicographic order.
inline std::vector<std::vector<std::size_t>> min_subsets(const std::vector<u64>& weights, u64 m, u64 target) {
  std::vector<std::vector<std::size_t>> best;
  std::size_t best_size = std::numeric_limits<std::size_t>::max();
  const std::size_t k = weights.size();
  for (u64 mask = 1; mask < (u64{1} << k); ++mask) {
    std::vector<std::size_t> idx;
    u64 sum = 0;
    for (std::size_t i = 0; i < k; ++i) {
      if (mask >> i & 1) {
        idx.push_back(i);
        sum += weights[i];
      }
    }
    if (sum % m != target % m) continue;
    if (idx.size() < best_size) {
      best.clear();
      best_size = idx.size();
    }
    if (idx.size() == best_size) best.push_back(idx);
  }
  std::sort(best.begin(), best.end());
  return best;
}

// Largest r with C(r+n-1, r) < L-1. Walks down the Pascal column
// C(a, n-1), a = n-1, n, ..., keeping C(a, j) for j < n saturated at L.
inline u64 max_r_scan(u64 n, u64 L) {
  if (L < 3) return 0;
  std::vector<u64> col(n, 0);  // col[j] = C(a, j)
  for (u64 a = 0; a < n; ++a) {
    for (u64 j = std::min(a, n - 1); j >= 1; --j) col[j] = std::min(L, col[j] + col[j - 1]);
    col[0] = 1;
  }
  u64 r = 0;  // col[n-1] = C(r+n-1, n-1) = C(r+n-1, r)
  for (;;) {
    for (u64 j = n - 1; j >= 1; --j) col[j] = std::min(L, col[j] + col[j - 1]);
    if (col[n - 1] >= L - 1) return r;
    ++r;
  }
}

// BFS eccentricities over an adjacency list.
inline std::size_t bfs_diameter(const std::vector<std::vector<u64>>& adj) {
  std::size_t diam = 0;
  for (std::size_t s = 0; s < adj.size(); ++s) {
    std::vector<long> dist(adj.size(), -1);
    std::deque<std::size_t> queue{s};
    dist[s] = 0;
    while (!queue.empty()) {
      auto u = queue.front();
      queue.pop_front();
      for (auto v : adj[u]) {
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          queue.push_back(v);
        }
      }
    }
    for (long d : dist) diam = std::max<std::size_t>(diam, static_cast<std::size_t>(d));
  }
  return diam;
}

// Expected number of throws until some bin first reaches its capacity, with
// throws uniform over the bins:
//   P(T > k) = k! / L^k * [x^k] prod_i sum_{j < cap_i} x^j / j!
//   E[T] = sum_{k >= 0} P(T > k).
inline long double balls_in_bins_expectation(const std::vector<u64>& caps) {
  const std::size_t L = caps.size();
  std::vector<long double> poly{1.0L};
  for (u64 c : caps) {
    std::vector<long double> next(poly.size() + c - 1, 0.0L);
    long double inv_fact = 1.0L;
    for (u64 j = 0; j < c; ++j) {
      if (j > 0) inv_fact /= static_cast<long double>(j);
      for (std::size_t k = 0; k < poly.size(); ++k) next[k + j] += poly[k] * inv_fact;
    }
    poly = std::move(next);
  }
  long double expectation = 0.0L;
  long double scale = 1.0L;  // k! / L^k
  for (std::size_t k = 0; k < poly.size(); ++k) {
    if (k > 0) scale *= static_cast<long double>(k) / static_cast<long double>(L);
    expectation += scale * poly[k];
  }
  return expectation;
}

// Plain minimax without memoisation: number of rewrites a code survives when
// the adversary picks every next value among the out-neighbours.
template <class Code, class Graph, class State>
u64 naive_worst_case(const Code& code, const Graph& graph, const State& s) {
  const auto current = code.decode(s);
  u64 best = std::numeric_limits<u64>::max();
  for (auto v : graph.out_neighbors(current)) {
    u64 value = 0;
    try {
      value = 1 + naive_worst_case(code, graph, code.update(s, v));
    } catch (...) {
      value = 0;
    }
    best = std::min(best, value);
    if (best == 0) break;
  }
  return best;
}

// Best worst case over all decode maps for n cells with q levels and L values
// on a complete graph, by trying every map (state 0 fixed to value 0) and
// solving the game with plain recursion.
inline u64 brute_optimal_game(std::size_t n, unsigned q, u64 L) {
  std::size_t states = 1;
  for (std::size_t i = 0; i < n; ++i) states *= q;
  auto digits = [&](std::size_t s) {
    std::vector<unsigned> d(n);
    for (std::size_t i = 0; i < n; ++i) {
      d[i] = s % q;
      s /= q;
    }
    return d;
  };
  std::vector<std::vector<std::size_t>> above(states);
  for (std::size_t a = 0; a < states; ++a) {
    for (std::size_t b = 0; b < states; ++b) {
      if (a == b) continue;
      auto da = digits(a), db = digits(b);
      bool up = true;
      for (std::size_t i = 0; i < n; ++i) up = up && db[i] >= da[i];
      if (up) above[a].push_back(b);
    }
  }
  u64 best = 0;
  std::vector<u64> map(states, 0);
  std::function<void(std::size_t)> enumerate = [&](std::size_t pos) {
    if (pos == states) {
      std::map<std::size_t, u64> memo;
      std::function<u64(std::size_t)> value = [&](std::size_t s) -> u64 {
        if (auto it = memo.find(s); it != memo.end()) return it->second;
        u64 worst = std::numeric_limits<u64>::max();
        for (u64 v = 0; v < L; ++v) {
          if (v == map[s]) continue;
          u64 reply = 0;
          for (auto t : above[s]) {
            if (map[t] == v) reply = std::max(reply, 1 + value(t));
          }
          worst = std::min(worst, reply);
        }
        return memo[s] = worst;
      };
      best = std::max(best, value(0));
      return;
    }
    for (u64 v = 0; v < L; ++v) {
      map[pos] = v;
      enumerate(pos + 1);
    }
  };
  enumerate(1);
  return best;
}

}  // namespace oracle
