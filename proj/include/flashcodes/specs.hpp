#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>

#include "flashcodes/data_graph.hpp"
#include "flashcodes/harness.hpp"
#include "flashcodes/rewriting_code.hpp"

namespace flashcodes {

/// "kind:key=value,key=value" split into the kind and its parameters.
struct SpecString {
  std::string kind;
  std::map<std::string, std::string> params;
  std::string rest;  // raw text after ':'

  static SpecString parse(const std::string& text);
  std::optional<std::uint64_t> get_u64(const std::string& key) const;
  std::uint64_t require_u64(const std::string& key) const;
};

/// "complete:L=56", "hypercube:k=4,l=2", "debruijn:k=3,l=2", "tree:delta=3,L=7".
std::shared_ptr<const DataGraph> make_graph(const std::string& spec);

struct CodeParams {
  std::size_t n = 0;
  unsigned q = 0;
  std::uint64_t t_target = 0;  // trajectory counter budget; 0 means n(q-1)
  std::uint64_t fallback_seed = 0;
};

/// "modular[:L=8]", "baserep[:L=16]", "split[:L=56]", "trajectory",
/// "parametric:theta=identity[,seed=S]", "robust[:seed=S][,policy=continue]".
/// L defaults to the graph's vertex count and must match it.
CodePtr make_code(const std::string& spec, std::shared_ptr<const DataGraph> graph, const CodeParams& params);
/// True when the code spec draws randomness from the trial seed.
bool code_uses_trial_seed(const std::string& spec);

/// "cyclic[:length=N]", "random[:length=N][,seed=S]", "list:v1,v2,...".
/// length defaults to `default_length`.
RewriteSequence make_sequence(const std::string& spec, const DataGraph& graph, std::size_t default_length,
                              std::uint64_t fallback_seed);
bool sequence_uses_trial_seed(const std::string& spec);

}  // namespace flashcodes
