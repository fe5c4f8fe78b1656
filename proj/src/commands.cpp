#include "flashcodes/commands.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "flashcodes/bounds.hpp"
#include "flashcodes/error.hpp"
#include "flashcodes/harness.hpp"
#include "flashcodes/register_codes.hpp"
#include "flashcodes/rng.hpp"
#include "flashcodes/specs.hpp"
#include "flashcodes/trajectory.hpp"

namespace flashcodes {

using nlohmann::ordered_json;

namespace {

ordered_json rational_json(const Rational& r) {
  if (r.denominator() == 1) return r.numerator();
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string floor_string(const std::optional<Rational>& r) {
  if (!r) return "";
  return std::to_string(r->numerator() / r->denominator());
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

ordered_json summary_json(const Summary& s) {
  return {{"count", s.count}, {"mean", s.mean}, {"stddev", s.stddev}, {"min", s.min}, {"max", s.max}};
}

void require_nq(const ExperimentConfig& c) {
  if (c.n < 1) throw Error(ErrorKind::InvalidArgument, "--n must be >= 1");
  if (c.q < 2) throw Error(ErrorKind::InvalidArgument, "--q must be >= 2");
}

void write_header(std::ostream& out, const ExperimentConfig& c) {
  out << "# " << kVersion << "\n# config " << c.to_json().dump() << "\n";
}

// The worked example: n=16, q=4, L=56, values 23, 45, 6, 27, 12.
struct GoldenRow {
  Value value;
  Value hi, lo;
  const char* group1;
  const char* group2;
};
constexpr GoldenRow kGolden[] = {
    {0, 0, 0, "00000000", "00000000"},  {23, 2, 7, "00100000", "00000001"}, {45, 5, 5, "00110000", "00000011"},
    {6, 0, 6, "00111001", "01000011"},  {27, 3, 3, "00111111", "01000111"}, {12, 1, 4, "12111111", "01111111"},
};

std::string levels_string(const CellState& s, std::size_t offset, std::size_t count) {
  std::string out;
  for (std::size_t i = 0; i < count; ++i) out += static_cast<char>('0' + s[offset + i]);
  return out;
}

}  // namespace

ordered_json ExperimentConfig::to_json() const {
  ordered_json j;
  j["subcommand"] = subcommand;
  if (!code.empty()) j["code"] = code;
  if (!graph.empty()) j["graph"] = graph;
  if (subcommand == "simulate") j["seq"] = seq;
  j["n"] = n;
  j["q"] = q;
  if (L) j["L"] = L;
  if (delta) j["delta"] = *delta;
  if (subcommand == "bounds") {
    j["epsilon"] = epsilon;
    j["robust_c"] = robust_c;
  }
  if (t_target) j["t_target"] = t_target;
  if (subcommand == "simulate" || subcommand == "robust-eval") {
    j["trials"] = trials;
    j["seed"] = seed;
    j["format"] = format;
  }
  if (subcommand == "adversary") j["cap"] = cap;
  if (subcommand == "oracle") j["max_maps"] = max_maps;
  return j;
}

void cmd_simulate(const ExperimentConfig& c, std::ostream& out) {
  require_nq(c);
  if (c.trials < 1) throw Error(ErrorKind::InvalidArgument, "--trials must be >= 1");
  if (c.format != "csv" && c.format != "json") throw Error(ErrorKind::InvalidArgument, "--out must be csv or json");
  if (c.code.empty() || c.graph.empty()) throw Error(ErrorKind::InvalidArgument, "--code and --graph are required");
  const auto graph = make_graph(c.graph);
  const std::uint64_t ub = ub_trivial(c.n, c.q);
  const bool json = c.format == "json";

  std::vector<RunReport> reports;
  std::vector<std::uint64_t> seeds;
  for (std::size_t i = 0; i < c.trials; ++i) {
    const std::uint64_t trial_seed = derive_seed(c.seed, i);
    CodeParams params{c.n, c.q, c.t_target, derive_seed(trial_seed, 0)};
    const auto code = make_code(c.code, graph, params);
    auto seq = make_sequence(c.seq, *graph, ub, derive_seed(trial_seed, 1));
    if (seq.values.size() > ub) {
      throw Error(ErrorKind::InvalidArgument, "sequence length " + std::to_string(seq.values.size()) +
                                                  " exceeds n(q-1) = " + std::to_string(ub));
    }
    RunOptions options;
    options.record_trace = json && c.trials == 1;
    reports.push_back(run_sequence(*code, *graph, seq, options));
    seeds.push_back(trial_seed);
  }

  if (!json) {
    write_header(out, c);
    out << "trial,seed,t,lb,ub,stop_reason\n";
    for (std::size_t i = 0; i < reports.size(); ++i) {
      const auto& r = reports[i];
      out << i << ',' << seeds[i] << ',' << r.t << ',' << floor_string(r.lower_bound) << ',' << r.ub_trivial << ','
          << csv_field(r.stop_reason) << '\n';
    }
    return;
  }

  ordered_json doc;
  doc["version"] = kVersion;
  doc["config"] = c.to_json();
  doc["bounds"] = {{"ub_trivial", ub}};
  if (graph->is_complete() && c.n + 1 < graph->vertex_count()) {
    const auto uc = ub_complete(c.n, c.q, graph->vertex_count());
    doc["bounds"]["ub_complete"] = uc.value;
    doc["bounds"]["r"] = uc.r;
  }
  ordered_json trials = ordered_json::array();
  std::vector<double> ts;
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const auto& r = reports[i];
    ordered_json row;
    row["trial"] = i;
    row["seed"] = seeds[i];
    row["code"] = r.code;
    row["graph"] = r.graph;
    row["sequence"] = r.sequence;
    row["t"] = r.t;
    row["lb"] = r.lower_bound ? rational_json(*r.lower_bound) : ordered_json(nullptr);
    row["ub"] = r.ub_trivial;
    row["stop_reason"] = r.stop_reason;
    row["cells"] = r.cells;
    if (r.seed) row["code_seed"] = *r.seed;
    if (r.first_saturation) row["first_saturation"] = *r.first_saturation;
    if (!r.trace.empty()) {
      row["initial_state"] = r.initial_state;
      ordered_json trace = ordered_json::array();
      for (const auto& tr : r.trace) {
        trace.push_back({{"write", tr.index},
                         {"value", tr.value},
                         {"raised_cells", tr.raised_cells},
                         {"weight", tr.weight},
                         {"state", tr.state},
                         {"detail", tr.detail}});
      }
      row["trace"] = std::move(trace);
      row["final_state"] = r.final_state;
    }
    trials.push_back(std::move(row));
    ts.push_back(static_cast<double>(r.t));
  }
  doc["trials"] = std::move(trials);
  doc["summary"] = summary_json(summarize(std::span<const double>(ts)));
  out << doc.dump(2) << '\n';
}

void cmd_bounds(const ExperimentConfig& c, std::ostream& out) {
  if (c.n < 1 || c.q < 2 || c.L < 2) throw Error(ErrorKind::InvalidArgument, "bounds need --n >= 1, --q >= 2, --L >= 2");
  const auto b = bounds_report(c.n, c.q, c.L, c.delta, c.epsilon, c.robust_c);
  ordered_json doc;
  doc["version"] = kVersion;
  doc["config"] = c.to_json();
  doc["ub_trivial"] = b.ub_trivial;
  doc["ub_complete"] = {{"value", b.ub_complete.value}, {"r", b.ub_complete.r}, {"precondition_ok", b.ub_complete.precondition_ok}};
  doc["r"] = b.ub_complete.r;
  doc["lb_modular"] = {{"value", rational_json(b.lb_modular.value)},
                       {"floor", b.lb_modular.value.numerator() / b.lb_modular.value.denominator()},
                       {"uniform_form", rational_json(b.lb_modular.uniform_form)},
                       {"per_band_floor", rational_json(b.lb_modular.per_band_floor)},
                       {"regime_ok", b.lb_modular.regime_ok}};
  doc["lb_baserep"] = {{"value", rational_json(b.lb_baserep.value)},
                       {"radix", b.lb_baserep.radix},
                       {"radix_clamped", b.lb_baserep.radix_clamped},
                       {"regime_ok", b.baserep_regime}};
  doc["lb_split"] = {{"value", b.lb_split.value}, {"regime_ok", b.lb_split.regime_ok}};
  doc["b"] = b.b ? ordered_json(*b.b) : ordered_json(nullptr);
  doc["b_ceiling"] = b.b_ceiling;
  doc["delta_threshold"] = b.delta_threshold;
  if (b.delta) {
    doc["delta"] = *b.delta;
    doc["small_delta"] = *b.small_delta;
  }
  doc["robust"] = {{"nq", b.robust.nq},        {"l_log_l", b.robust.l_log_l}, {"ratio", b.robust.ratio},
                   {"c", b.robust.c},          {"met", b.robust.met},         {"epsilon", b.epsilon}};
  doc["notes"] = b.notes;
  out << doc.dump(2) << '\n';
}

void cmd_oracle(const ExperimentConfig& c, std::ostream& out) {
  require_nq(c);
  if (c.L < 2) throw Error(ErrorKind::InvalidArgument, "--L must be >= 2");
  ordered_json doc;
  doc["version"] = kVersion;
  doc["config"] = c.to_json();
  doc["optimal_game_value"] = optimal_game_value(c.n, c.q, c.L, c.max_maps);
  doc["ub_trivial"] = ub_trivial(c.n, c.q);
  out << doc.dump(2) << '\n';
}

void cmd_adversary(const ExperimentConfig& c, std::ostream& out) {
  require_nq(c);
  if (c.code.empty() || c.graph.empty()) throw Error(ErrorKind::InvalidArgument, "--code and --graph are required");
  const auto graph = make_graph(c.graph);
  const auto code = make_code(c.code, graph, CodeParams{c.n, c.q, c.t_target, c.seed});
  if (!code->deterministic()) {
    throw Error(ErrorKind::InvalidArgument, "the adversary needs a deterministic code (got " + code->name() + ")");
  }
  ordered_json doc;
  doc["version"] = kVersion;
  doc["config"] = c.to_json();
  doc["code"] = code->name();
  doc["graph"] = graph->name();
  doc["worst_case_t"] = worst_case_t(*code, *graph, c.cap);
  const auto lb = code_lower_bound(*code);
  doc["lower_bound"] = lb ? rational_json(*lb) : ordered_json(nullptr);
  doc["ub_trivial"] = ub_trivial(c.n, c.q);
  if (graph->is_complete() && c.n + 1 < graph->vertex_count()) {
    doc["ub_complete"] = ub_complete(c.n, c.q, graph->vertex_count()).value;
  }
  out << doc.dump(2) << '\n';
}

bool cmd_worked_example(const ExperimentConfig& c, std::ostream& out) {
  const SplitCode code(16, 4, 56, c.tamper_tie_break ? TieBreak::Reversed : TieBreak::Lexicographic);
  const auto graph = complete_graph(56);
  RewriteSequence seq;
  for (std::size_t i = 1; i < std::size(kGolden); ++i) seq.values.push_back(kGolden[i].value);
  seq.spec = "list:23,45,6,27,12";
  const auto report = run_sequence(code, graph, seq);

  bool ok = report.t == 5 && report.trace.size() == 5;
  std::vector<CellState> states{code.initial_state()};
  if (ok) {
    CellState s = code.initial_state();
    for (Value v : seq.values) {
      s = code.update(s, v);
      states.push_back(s);
    }
  }
  std::ostringstream lines;
  for (std::size_t i = 0; i < states.size(); ++i) {
    const auto& s = states[i];
    const auto d = code.digits(s);
    const std::string g1 = levels_string(s, 0, 8);
    const std::string g2 = levels_string(s, 8, 8);
    const bool match = i < std::size(kGolden) && code.decode(s) == kGolden[i].value && d.size() == 2 &&
                       d[0] == kGolden[i].hi && d[1] == kGolden[i].lo && g1 == kGolden[i].group1 &&
                       g2 == kGolden[i].group2;
    ok = ok && match;
    lines << code.decode(s) << " (" << d.at(0) << ',' << d.at(1) << ") " << g1 << ' ' << g2
          << (match ? "" : "  mismatch") << '\n';
  }
  ok = ok && states.size() == std::size(kGolden);
  if (!c.quiet) out << lines.str();
  out << (ok ? "PASS" : "FAIL") << '\n';
  return ok;
}

void cmd_robust_eval(const ExperimentConfig& c, std::ostream& out) {
  require_nq(c);
  if (c.L < 2 || c.L > c.n) throw Error(ErrorKind::InvalidArgument, "robust-eval needs 2 <= --L <= --n");
  if (c.trials < 1) throw Error(ErrorKind::InvalidArgument, "--trials must be >= 1");
  if (c.format != "csv" && c.format != "json") throw Error(ErrorKind::InvalidArgument, "--out must be csv or json");
  const auto graph = complete_graph(c.L);
  const auto seq = make_sequence(c.seq == "random" ? "cyclic" : c.seq, graph, ub_trivial(c.n, c.q), derive_seed(c.seed, ~0ull));
  const auto ev = robust_eval(c.n, c.q, c.L, seq, c.trials, c.seed);

  if (c.format == "csv") {
    write_header(out, c);
    out << "trial,seed,t,oracle_t\n";
    for (std::size_t i = 0; i < ev.t_samples.size(); ++i) {
      out << i << ',' << derive_seed(c.seed, i) << ',' << ev.t_samples[i] << ',' << ev.oracle.samples.at(i) << '\n';
    }
    return;
  }
  ordered_json doc;
  doc["version"] = kVersion;
  doc["config"] = c.to_json();
  doc["sequence"] = seq.spec;
  doc["ub_trivial"] = ub_trivial(c.n, c.q);
  doc["t"] = summary_json(ev.t_summary);
  doc["oracle"] = summary_json(ev.oracle.summary);
  doc["ks"] = {{"statistic", ev.ks.statistic}, {"p", ev.ks.p_value}};
  doc["index_counts"] = ev.index_counts;
  doc["index_p"] = ev.index_p;
  doc["pair_counts"] = ev.pair_counts;
  doc["pair_p"] = ev.pair_p;
  doc["t_samples"] = ev.t_samples;
  out << doc.dump(2) << '\n';
}

int run_command(const ExperimentConfig& c, std::ostream& out, std::ostream& err) {
  try {
    std::ostringstream buffer;
    int code = 0;
    if (c.subcommand == "simulate") {
      cmd_simulate(c, buffer);
    } else if (c.subcommand == "bounds") {
      cmd_bounds(c, buffer);
    } else if (c.subcommand == "oracle") {
      cmd_oracle(c, buffer);
    } else if (c.subcommand == "adversary") {
      cmd_adversary(c, buffer);
    } else if (c.subcommand == "example-paper") {
      code = cmd_worked_example(c, buffer) ? 0 : 1;
    } else if (c.subcommand == "robust-eval") {
      cmd_robust_eval(c, buffer);
    } else {
      err << "error: unknown subcommand '" << c.subcommand << "'\n";
      return 2;
    }
    if (c.output_path.empty()) {
      out << buffer.str();
    } else {
      std::ofstream file(c.output_path, std::ios::binary);
      if (!file) {
        err << "error: cannot open " << c.output_path << " for writing\n";
        return 2;
      }
      file << buffer.str();
    }
    return code;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    switch (e.kind()) {
      case ErrorKind::ContractViolation:
      case ErrorKind::CorruptState:
        return 1;
      default:
        return 2;
    }
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace flashcodes
