#include "flashcodes/specs.hpp"

#include <charconv>

#include "flashcodes/error.hpp"
#include "flashcodes/register_codes.hpp"
#include "flashcodes/robust.hpp"
#include "flashcodes/rng.hpp"
#include "flashcodes/trajectory.hpp"

namespace flashcodes {

namespace {

std::uint64_t to_u64(const std::string& text, const std::string& what) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw Error(ErrorKind::InvalidArgument, "'" + text + "' is not a non-negative integer (" + what + ")");
  }
  return v;
}

void allow_only(const SpecString& s, std::initializer_list<const char*> keys) {
  for (const auto& [k, v] : s.params) {
    bool known = false;
    for (const char* key : keys) known = known || k == key;
    if (!known) throw Error(ErrorKind::InvalidArgument, "unknown parameter '" + k + "' for '" + s.kind + "'");
  }
}

}  // namespace

SpecString SpecString::parse(const std::string& text) {
  SpecString out;
  const auto colon = text.find(':');
  out.kind = text.substr(0, colon);
  if (out.kind.empty()) throw Error(ErrorKind::InvalidArgument, "empty spec string");
  if (colon == std::string::npos) return out;
  out.rest = text.substr(colon + 1);
  if (out.kind == "list") return out;
  std::size_t pos = 0;
  while (pos < out.rest.size()) {
    auto comma = out.rest.find(',', pos);
    if (comma == std::string::npos) comma = out.rest.size();
    const std::string item = out.rest.substr(pos, comma - pos);
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw Error(ErrorKind::InvalidArgument, "expected key=value in '" + text + "'");
    out.params[item.substr(0, eq)] = item.substr(eq + 1);
    pos = comma + 1;
  }
  return out;
}

std::optional<std::uint64_t> SpecString::get_u64(const std::string& key) const {
  auto it = params.find(key);
  if (it == params.end()) return std::nullopt;
  return to_u64(it->second, key);
}

std::uint64_t SpecString::require_u64(const std::string& key) const {
  auto v = get_u64(key);
  if (!v) throw Error(ErrorKind::InvalidArgument, "'" + kind + "' needs " + key + "=");
  return *v;
}

std::shared_ptr<const DataGraph> make_graph(const std::string& spec) {
  const auto s = SpecString::parse(spec);
  auto small = [&](const char* key) {
    const auto v = s.require_u64(key);
    if (v > 1u << 20) throw Error(ErrorKind::Overflow, std::string(key) + " too large");
    return static_cast<unsigned>(v);
  };
  if (s.kind == "complete") {
    allow_only(s, {"L"});
    return std::make_shared<DataGraph>(complete_graph(s.require_u64("L")));
  }
  if (s.kind == "hypercube") {
    allow_only(s, {"k", "l"});
    return std::make_shared<DataGraph>(hypercube_graph(small("k"), small("l")));
  }
  if (s.kind == "debruijn") {
    allow_only(s, {"k", "l"});
    return std::make_shared<DataGraph>(debruijn_graph(small("k"), small("l")));
  }
  if (s.kind == "tree") {
    allow_only(s, {"delta", "L"});
    return std::make_shared<DataGraph>(bidirected_tree(small("delta"), s.require_u64("L")));
  }
  throw Error(ErrorKind::InvalidArgument, "unknown graph kind '" + s.kind + "'");
}

bool code_uses_trial_seed(const std::string& spec) {
  const auto s = SpecString::parse(spec);
  return s.kind == "robust" && !s.params.count("seed");
}

CodePtr make_code(const std::string& spec, std::shared_ptr<const DataGraph> graph, const CodeParams& p) {
  if (!graph) throw Error(ErrorKind::InvalidArgument, "code needs a graph");
  if (p.n < 1) throw Error(ErrorKind::InvalidArgument, "n must be >= 1");
  if (p.q < 2) throw Error(ErrorKind::InvalidArgument, "q must be >= 2");
  const auto s = SpecString::parse(spec);
  const std::uint64_t L = graph->vertex_count();
  auto alphabet = [&] {
    const auto declared = s.get_u64("L");
    if (declared && *declared != L) {
      throw Error(ErrorKind::InvalidArgument, "code L=" + std::to_string(*declared) + " but graph has " + std::to_string(L) + " vertices");
    }
    return L;
  };
  auto require_complete = [&] {
    if (!graph->is_complete()) {
      throw Error(ErrorKind::InvalidArgument, "'" + s.kind + "' only supports complete graphs; use 'trajectory'");
    }
  };
  if (s.kind == "modular") {
    allow_only(s, {"L"});
    require_complete();
    return std::make_shared<ModularCode>(p.n, p.q, alphabet());
  }
  if (s.kind == "baserep") {
    allow_only(s, {"L"});
    require_complete();
    return std::make_shared<BaseRepCode>(p.n, p.q, alphabet());
  }
  if (s.kind == "split") {
    allow_only(s, {"L"});
    require_complete();
    return std::make_shared<SplitCode>(p.n, p.q, alphabet());
  }
  if (s.kind == "trajectory") {
    allow_only(s, {"t"});
    const std::uint64_t t = s.get_u64("t").value_or(p.t_target ? p.t_target : ub_trivial(p.n, p.q));
    return std::make_shared<TrajectoryCode>(graph, plan_layout(p.n, p.q, *graph, t));
  }
  if (s.kind == "parametric") {
    allow_only(s, {"theta", "seed", "L"});
    require_complete();
    auto it = s.params.find("theta");
    if (it != s.params.end() && it->second != "identity") {
      throw Error(ErrorKind::InvalidArgument, "only theta=identity is supported");
    }
    std::vector<Value> a(p.n * (p.q - 1), 0);
    if (s.params.count("seed")) {
      std::mt19937_64 rng(s.require_u64("seed"));
      for (auto& x : a) x = uniform_below(rng, L);
    }
    return std::make_shared<ParametricCode>(ParametricCode::identity(p.n, p.q, alphabet(), std::move(a)));
  }
  if (s.kind == "robust") {
    allow_only(s, {"seed", "policy", "L"});
    require_complete();
    auto policy = SaturationPolicy::StopAtFull;
    if (auto it = s.params.find("policy"); it != s.params.end()) {
      if (it->second == "continue") {
        policy = SaturationPolicy::Continue;
      } else if (it->second != "stop") {
        throw Error(ErrorKind::InvalidArgument, "policy must be 'stop' or 'continue'");
      }
    }
    return std::make_shared<RobustCode>(p.n, p.q, alphabet(), s.get_u64("seed").value_or(p.fallback_seed), policy);
  }
  throw Error(ErrorKind::InvalidArgument, "unknown code kind '" + s.kind + "'");
}

bool sequence_uses_trial_seed(const std::string& spec) {
  const auto s = SpecString::parse(spec);
  return s.kind == "random" && !s.params.count("seed");
}

RewriteSequence make_sequence(const std::string& spec, const DataGraph& graph, std::size_t default_length,
                              std::uint64_t fallback_seed) {
  const auto s = SpecString::parse(spec);
  if (s.kind == "cyclic") {
    allow_only(s, {"length"});
    if (!graph.is_complete()) throw Error(ErrorKind::InvalidArgument, "cyclic sequences need a complete graph");
    return cyclic_sequence(graph.vertex_count(), s.get_u64("length").value_or(default_length));
  }
  if (s.kind == "random") {
    allow_only(s, {"length", "seed"});
    return random_walk_sequence(graph, s.get_u64("seed").value_or(fallback_seed), s.get_u64("length").value_or(default_length));
  }
  if (s.kind == "list") {
    RewriteSequence seq;
    seq.spec = spec;
    std::size_t pos = 0;
    while (pos < s.rest.size()) {
      auto comma = s.rest.find(',', pos);
      if (comma == std::string::npos) comma = s.rest.size();
      seq.values.push_back(to_u64(s.rest.substr(pos, comma - pos), "list value"));
      pos = comma + 1;
    }
    validate_sequence(graph, seq);
    return seq;
  }
  throw Error(ErrorKind::InvalidArgument, "unknown sequence kind '" + s.kind + "'");
}

}  // namespace flashcodes
