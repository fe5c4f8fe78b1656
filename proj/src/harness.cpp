#include "flashcodes/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <random>
#include <thread>
#include <unordered_map>

#include "flashcodes/error.hpp"
#include "flashcodes/rng.hpp"

namespace flashcodes {

namespace {

std::atomic<std::uint64_t> g_runs{0};
std::atomic<std::uint64_t> g_rewrites{0};
std::atomic<std::uint64_t> g_violations{0};

[[noreturn]] void violation(const std::string& what) {
  ++g_violations;
  throw Error(ErrorKind::ContractViolation, what);
}

// The three rewriting-code conditions for one transition s -> next to value v.
void check_transition(const RewritingCode& code, const CellState& s, const CellState& next, Value v) {
  if (next == s || !next.is_above(s)) violation(code.name() + ": update did not move strictly upward from " + s.to_string());
  const Value got = code.decode(next);
  if (got != v) {
    violation(code.name() + ": state " + next.to_string() + " decodes to " + std::to_string(got) + ", expected " + std::to_string(v));
  }
  ++g_rewrites;
}

}  // namespace

ContractStats contract_stats() { return {g_runs.load(), g_rewrites.load(), g_violations.load()}; }

RewriteSequence random_walk_sequence(const DataGraph& graph, std::uint64_t seed, std::size_t length) {
  RewriteSequence seq;
  seq.spec = "random:length=" + std::to_string(length) + ",seed=" + std::to_string(seed);
  std::mt19937_64 rng(seed);
  Vertex at = 0;
  seq.values.reserve(length);
  for (std::size_t i = 0; i < length; ++i) {
    const auto out = graph.out_neighbors(at);
    at = out[uniform_below(rng, out.size())];
    seq.values.push_back(at);
  }
  return seq;
}

RewriteSequence cyclic_sequence(std::uint64_t L, std::size_t length) {
  if (L < 2) throw Error(ErrorKind::InvalidArgument, "cyclic sequence needs L >= 2");
  RewriteSequence seq;
  seq.spec = "cyclic:length=" + std::to_string(length);
  seq.values.reserve(length);
  for (std::size_t i = 1; i <= length; ++i) seq.values.push_back(i % L);
  return seq;
}

void validate_sequence(const DataGraph& graph, const RewriteSequence& seq) {
  Vertex prev = 0;
  for (std::size_t i = 0; i < seq.values.size(); ++i) {
    if (!graph.has_edge(prev, seq.values[i])) {
      throw Error(ErrorKind::InvalidArgument, "rewrite " + std::to_string(i + 1) + " (" + std::to_string(prev) + " -> " +
                                                  std::to_string(seq.values[i]) + ") is not an edge of " + graph.name());
    }
    prev = seq.values[i];
  }
}

RunReport run_sequence(const RewritingCode& code, const DataGraph& graph, const RewriteSequence& seq,
                       const RunOptions& options) {
  if (graph.vertex_count() != code.alphabet()) {
    throw Error(ErrorKind::InvalidArgument, "code alphabet " + std::to_string(code.alphabet()) + " does not match graph " + graph.name());
  }
  validate_sequence(graph, seq);
  ++g_runs;
  RunReport rep;
  rep.code = code.name();
  rep.graph = graph.name();
  rep.sequence = seq.spec;
  rep.cells = code.cell_count();
  rep.ub_trivial = ub_trivial(code.cell_count(), code.levels());
  rep.lower_bound = code_lower_bound(code);
  const auto* robust = dynamic_cast<const RobustCode*>(&code);
  if (robust) rep.seed = robust->seed();

  CellState state = code.initial_state();
  rep.initial_state = state.to_string();
  if (code.decode(state) != 0) violation(code.name() + ": initial state does not decode to 0");
  rep.stop_reason = "completed";
  for (std::size_t i = 0; i < seq.values.size(); ++i) {
    const Value v = seq.values[i];
    CellState next = state;
    try {
      next = code.update(state, v);
    } catch (const Error& e) {
      if (!is_capacity_failure(e.kind())) throw;
      rep.stop_reason = e.what();
      break;
    }
    check_transition(code, state, next, v);
    ++rep.t;
    if (robust && !rep.first_saturation && robust->any_full(next)) rep.first_saturation = rep.t;
    if (options.record_trace) {
      TraceRow row;
      row.index = i + 1;
      row.value = v;
      for (std::size_t c = 0; c < next.size(); ++c) {
        if (next[c] > state[c]) row.raised_cells.push_back(c);
      }
      row.weight = next.weight();
      row.state = next.to_string();
      row.detail = code.describe(next);
      rep.trace.push_back(std::move(row));
    }
    state = std::move(next);
  }
  if (rep.t > rep.ub_trivial) violation(code.name() + ": t exceeds n(q-1)");
  rep.final_state = state.to_string();
  return rep;
}

std::uint64_t worst_case_t(const RewritingCode& code, const DataGraph& graph, std::size_t cap) {
  if (!code.deterministic()) throw Error(ErrorKind::InvalidArgument, "worst_case_t needs a deterministic code");
  if (graph.vertex_count() != code.alphabet()) throw Error(ErrorKind::InvalidArgument, "code alphabet does not match graph");
  ++g_runs;
  std::unordered_map<CellState, std::uint64_t, CellStateHash> memo;
  std::function<std::uint64_t(const CellState&)> solve = [&](const CellState& s) -> std::uint64_t {
    if (auto it = memo.find(s); it != memo.end()) return it->second;
    if (memo.size() >= cap) {
      throw Error(ErrorKind::StateSpaceTooLarge, "more than " + std::to_string(cap) + " states explored");
    }
    const Value current = code.decode(s);
    std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
    for (Vertex v : graph.out_neighbors(current)) {
      std::uint64_t value = 0;
      try {
        CellState next = code.update(s, v);
        check_transition(code, s, next, v);
        value = 1 + solve(next);
      } catch (const Error& e) {
        if (!is_capacity_failure(e.kind())) throw;
      }
      best = std::min(best, value);
      if (best == 0) break;
    }
    memo.emplace(s, best);
    return best;
  };
  const std::uint64_t t = solve(code.initial_state());
  if (t > ub_trivial(code.cell_count(), code.levels())) violation(code.name() + ": worst case exceeds n(q-1)");
  return t;
}

std::uint64_t optimal_game_value(std::size_t n, unsigned q, std::uint64_t L, std::uint64_t max_maps) {
  if (n < 1 || q < 2 || L < 2) throw Error(ErrorKind::InvalidArgument, "oracle needs n >= 1, q >= 2, L >= 2");
  std::size_t states = 1;
  for (std::size_t i = 0; i < n; ++i) {
    states *= q;
    if (states > 64) throw Error(ErrorKind::CapsExceeded, "q^n must be <= 64");
  }
  if (L > 4) throw Error(ErrorKind::CapsExceeded, "L must be <= 4");
  // Nonzero values are interchangeable on a complete graph, so only maps in
  // which they first appear in increasing order are enumerated.
  double log_maps = static_cast<double>(states - 1) * std::log2(static_cast<double>(L));
  for (std::uint64_t k = 2; k < L; ++k) log_maps -= std::log2(static_cast<double>(k));
  if (log_maps > std::log2(static_cast<double>(max_maps)) + 1.0) {
    throw Error(ErrorKind::CapsExceeded, "about 2^" + std::to_string(static_cast<int>(log_maps)) + " decode maps");
  }

  std::vector<std::vector<unsigned>> levels(states, std::vector<unsigned>(n));
  std::vector<unsigned> weight(states, 0);
  for (std::size_t s = 0; s < states; ++s) {
    std::size_t x = s;
    for (std::size_t i = 0; i < n; ++i) {
      levels[s][i] = static_cast<unsigned>(x % q);
      weight[s] += levels[s][i];
      x /= q;
    }
  }
  std::vector<std::vector<std::size_t>> above(states);
  for (std::size_t s = 0; s < states; ++s) {
    for (std::size_t t = 0; t < states; ++t) {
      if (t == s) continue;
      bool up = true;
      for (std::size_t i = 0; i < n && up; ++i) up = levels[t][i] >= levels[s][i];
      if (up) above[s].push_back(t);
    }
  }
  std::vector<std::size_t> order(states);
  for (std::size_t s = 0; s < states; ++s) order[s] = s;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return weight[a] > weight[b]; });

  std::vector<unsigned> decode(states, 0);
  std::vector<std::uint64_t> value(states, 0);
  std::vector<std::uint64_t> reach(L);
  std::uint64_t best = 0;
  const std::uint64_t ceiling = ub_trivial(n, q);

  auto evaluate = [&]() {
    for (std::size_t s : order) {
      std::fill(reach.begin(), reach.end(), 0);
      for (std::size_t t : above[s]) reach[decode[t]] = std::max(reach[decode[t]], 1 + value[t]);
      std::uint64_t worst = std::numeric_limits<std::uint64_t>::max();
      for (unsigned v = 0; v < L; ++v) {
        if (v != decode[s]) worst = std::min(worst, reach[v]);
      }
      value[s] = worst;
    }
    return value[0];
  };

  std::function<void(std::size_t, unsigned)> assign = [&](std::size_t s, unsigned used) {
    if (best == ceiling) return;
    if (s == states) {
      best = std::max(best, evaluate());
      return;
    }
    for (unsigned v = 0; v <= std::min<unsigned>(used + 1, static_cast<unsigned>(L - 1)); ++v) {
      decode[s] = v;
      assign(s + 1, std::max(used, v));
    }
  };
  assign(1, 0);
  return best;
}

MonteCarloResult monte_carlo_expectation(const CodeSampler& sampler, const DataGraph& graph, const RewriteSequence& seq,
                                         std::size_t trials, std::uint64_t master_seed, unsigned threads) {
  if (trials < 1) throw Error(ErrorKind::InvalidArgument, "trials must be >= 1");
  MonteCarloResult out;
  out.trials.resize(trials);
  auto run_one = [&](std::size_t i) {
    TrialResult r;
    r.trial = i;
    r.seed = derive_seed(master_seed, i);
    const CodePtr code = sampler(r.seed);
    const RunReport rep = run_sequence(*code, graph, seq, RunOptions{false});
    r.t = rep.t;
    r.stop_reason = rep.stop_reason;
    r.first_saturation = rep.first_saturation;
    out.trials[i] = std::move(r);
  };
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(trials)));
  if (threads == 1) {
    for (std::size_t i = 0; i < trials; ++i) run_one(i);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(threads);
    for (unsigned w = 0; w < threads; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t i = w; i < trials; i += threads) run_one(i);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }
  std::vector<std::uint64_t> ts;
  for (const auto& r : out.trials) ts.push_back(r.t);
  out.summary = summarize(std::span<const std::uint64_t>(ts));
  return out;
}

BallsInBins balls_in_bins_oracle(const std::vector<std::uint64_t>& capacities, std::uint64_t master_seed,
                                 std::size_t trials) {
  if (trials < 1) throw Error(ErrorKind::InvalidArgument, "trials must be >= 1");
  if (capacities.empty()) throw Error(ErrorKind::InvalidArgument, "need at least one bin");
  for (auto c : capacities) {
    if (c == 0) throw Error(ErrorKind::InvalidArgument, "bin capacities must be positive");
  }
  BallsInBins out;
  out.samples.reserve(trials);
  std::vector<std::uint64_t> fill(capacities.size());
  for (std::size_t i = 0; i < trials; ++i) {
    std::mt19937_64 rng(derive_seed(master_seed, i));
    std::fill(fill.begin(), fill.end(), 0);
    std::uint64_t throws = 0;
    for (;;) {
      const std::size_t bin = uniform_below(rng, capacities.size());
      ++throws;
      if (++fill[bin] == capacities[bin]) break;
    }
    out.samples.push_back(throws);
  }
  out.summary = summarize(std::span<const std::uint64_t>(out.samples));
  return out;
}

std::vector<std::size_t> robust_choice_trace(const RobustCode& code, const RewriteSequence& seq) {
  std::vector<std::size_t> chosen;
  CellState state = code.initial_state();
  for (Value v : seq.values) {
    if (code.any_full(state)) break;
    chosen.push_back(code.target_super_cell(state, v));
    state = code.update(state, v);
  }
  return chosen;
}

RobustEvaluation robust_eval(std::size_t n, unsigned q, std::uint64_t L, const RewriteSequence& seq, std::size_t trials,
                             std::uint64_t master_seed) {
  if (trials < 1) throw Error(ErrorKind::InvalidArgument, "trials must be >= 1");
  RobustEvaluation ev;
  ev.n = n;
  ev.q = q;
  ev.L = L;
  ev.master_seed = master_seed;
  ev.index_counts.assign(L, 0);
  ev.pair_counts.assign(L * L, 0);
  const DataGraph graph = complete_graph(L);
  std::vector<std::uint64_t> capacities;
  for (std::size_t i = 0; i < trials; ++i) {
    const RobustCode code(n, q, L, derive_seed(master_seed, i), SaturationPolicy::StopAtFull);
    if (capacities.empty()) {
      for (std::size_t j = 1; j <= L; ++j) capacities.push_back(code.capacity(j));
    }
    ev.t_samples.push_back(run_sequence(code, graph, seq, RunOptions{false}).t);
    const auto chosen = robust_choice_trace(code, seq);
    for (std::size_t c : chosen) ++ev.index_counts[c - 1];
    for (std::size_t k = 0; k + 1 < chosen.size(); k += 2) ++ev.pair_counts[(chosen[k] - 1) * L + (chosen[k + 1] - 1)];
  }
  ev.t_summary = summarize(std::span<const std::uint64_t>(ev.t_samples));
  // Independent stream for the reference distribution.
  ev.oracle = balls_in_bins_oracle(capacities, derive_seed(master_seed, 0x0b0a11b1ull), trials);
  ev.ks = ks_two_sample(std::vector<double>(ev.t_samples.begin(), ev.t_samples.end()),
                        std::vector<double>(ev.oracle.samples.begin(), ev.oracle.samples.end()));
  ev.index_p = chi_square_uniform_p(ev.index_counts);
  ev.pair_p = chi_square_uniform_p(ev.pair_counts);
  return ev;
}

}  // namespace flashcodes
