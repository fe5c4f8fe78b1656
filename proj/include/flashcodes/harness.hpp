#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "flashcodes/bounds.hpp"
#include "flashcodes/data_graph.hpp"
#include "flashcodes/rewriting_code.hpp"
#include "flashcodes/robust.hpp"
#include "flashcodes/stats.hpp"

namespace flashcodes {

/// Values v_1, v_2, ... written after the implicit v_0 = 0.
struct RewriteSequence {
  std::vector<Value> values;
  std::string spec;
};

/// Uniform out-edge walk from vertex 0.
RewriteSequence random_walk_sequence(const DataGraph& graph, std::uint64_t seed, std::size_t length);
/// 1, 2, ..., L-1, 0, 1, ...
RewriteSequence cyclic_sequence(std::uint64_t L, std::size_t length);
/// Throws InvalidArgument unless consecutive values (from v_0 = 0) are edges.
void validate_sequence(const DataGraph& graph, const RewriteSequence& seq);

struct TraceRow {
  std::size_t index = 0;  // 1-based rewrite number
  Value value = 0;
  std::vector<std::size_t> raised_cells;
  std::uint64_t weight = 0;
  std::string state;
  std::string detail;
};

struct RunReport {
  std::string code;
  std::string graph;
  std::string sequence;
  std::uint64_t t = 0;
  std::string stop_reason;  // "completed" or the failure message
  std::size_t cells = 0;
  std::uint64_t ub_trivial = 0;
  std::optional<Rational> lower_bound;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> first_saturation;  // rewrite that first filled a super cell
  std::vector<TraceRow> trace;
  std::string initial_state;
  std::string final_state;
};

struct RunOptions {
  bool record_trace = true;
};

/// Applies the sequence until the first capacity failure, checking on every
/// rewrite that the transition is an edge, the new state is strictly above
/// the old one, and it decodes to the requested value. A failed check throws
/// ContractViolation; running out of room is reported in the result.
RunReport run_sequence(const RewritingCode& code, const DataGraph& graph, const RewriteSequence& seq,
                       const RunOptions& options = {});

/// Counters over every run_sequence / worst_case_t call in the process.
struct ContractStats {
  std::uint64_t runs = 0;
  std::uint64_t rewrites = 0;
  std::uint64_t violations = 0;
};
ContractStats contract_stats();

/// Exact worst case over all rewrite sequences for a deterministic code:
/// the adversary picks each next value among the out-neighbours. Throws
/// StateSpaceTooLarge after `cap` distinct states.
std::uint64_t worst_case_t(const RewritingCode& code, const DataGraph& graph, std::size_t cap);

/// Best worst-case value over every decode map from the q^n states to L
/// values (all-zero maps to 0) on a complete graph, where the encoder may
/// jump to any strictly higher state with the wanted value. Requires
/// q^n <= 64, L <= 4, and at most `max_maps` maps after symmetry reduction.
std::uint64_t optimal_game_value(std::size_t n, unsigned q, std::uint64_t L, std::uint64_t max_maps = 1u << 22);

using CodeSampler = std::function<CodePtr(std::uint64_t seed)>;

struct TrialResult {
  std::uint64_t trial = 0;
  std::uint64_t seed = 0;
  std::uint64_t t = 0;
  std::string stop_reason;
  std::optional<std::uint64_t> first_saturation;
};

struct MonteCarloResult {
  std::vector<TrialResult> trials;
  Summary summary;
};

/// t over independently sampled codes on one fixed sequence; trial i uses
/// derive_seed(master_seed, i). Results are ordered by trial index.
MonteCarloResult monte_carlo_expectation(const CodeSampler& sampler, const DataGraph& graph, const RewriteSequence& seq,
                                         std::size_t trials, std::uint64_t master_seed, unsigned threads = 1);

struct BallsInBins {
  std::vector<std::uint64_t> samples;
  Summary summary;
};

/// Throws balls uniformly into bins with the given capacities; each sample is
/// the throw count at which the first bin reaches capacity.
BallsInBins balls_in_bins_oracle(const std::vector<std::uint64_t>& capacities, std::uint64_t master_seed,
                                 std::size_t trials);

/// Super cells (1-based) chosen by a stop-at-full robust code along `seq`,
/// up to and including the rewrite that fills the first super cell.
std::vector<std::size_t> robust_choice_trace(const RobustCode& code, const RewriteSequence& seq);

struct RobustEvaluation {
  std::size_t n = 0;
  unsigned q = 0;
  std::uint64_t L = 0;
  std::uint64_t master_seed = 0;
  std::vector<std::uint64_t> t_samples;
  Summary t_summary;
  BallsInBins oracle;
  KsResult ks;
  std::vector<std::uint64_t> index_counts;  // per super cell
  std::vector<std::uint64_t> pair_counts;   // non-overlapping consecutive pairs, L*L
  double index_p = 0;
  double pair_p = 0;
};

/// Stop-at-full robust codes over `trials` seeds on a fixed sequence, compared
/// with the balls-in-bins oracle and tested for uniform, independent choices.
RobustEvaluation robust_eval(std::size_t n, unsigned q, std::uint64_t L, const RewriteSequence& seq, std::size_t trials,
                             std::uint64_t master_seed);

}  // namespace flashcodes
