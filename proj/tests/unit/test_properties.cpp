#include <doctest.h>

#include <random>

#include "flashcodes/bounds.hpp"
#include "flashcodes/error.hpp"
#include "flashcodes/harness.hpp"
#include "flashcodes/register_codes.hpp"
#include "flashcodes/robust.hpp"
#include "flashcodes/trajectory.hpp"

using namespace flashcodes;

namespace {

// Random walk of `length` rewrites with the contract checked on every step
// by run_sequence; returns t.
std::uint64_t exercise(const RewritingCode& code, const DataGraph& g, std::uint64_t seed, std::size_t length) {
  const auto rep = run_sequence(code, g, random_walk_sequence(g, seed, length), {false});
  CHECK(rep.t <= ub_trivial(code.cell_count(), code.levels()));
  return rep.t;
}

}  // namespace

TEST_CASE("property: complete-graph codes keep the rewrite contract") {
  std::mt19937_64 rng(123);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 2 + rng() % 30;
    const unsigned q = 2 + rng() % 7;
    const std::uint64_t L = 2 + rng() % 60;
    const auto g = complete_graph(L);
    CodePtr code;
    try {
      code = make_complete_graph_code(n, q, L);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::InfeasibleLayout);
      continue;
    }
    CHECK(code->decode(code->initial_state()) == 0);
    const auto t = exercise(*code, g, rng(), n * (q - 1));
    if (auto lb = code_lower_bound(*code)) {
      // A random sequence is one of the sequences the guarantee covers.
      CHECK(Rational(static_cast<std::int64_t>(t)) >= Rational(lb->numerator() / lb->denominator()));
    }
  }
}

TEST_CASE("property: randomized codes keep the rewrite contract") {
  std::mt19937_64 rng(321);
  for (int trial = 0; trial < 60; ++trial) {
    const std::uint64_t L = 2 + rng() % 8;
    const std::size_t n = L + rng() % 24;
    const unsigned q = 2 + rng() % 6;
    const auto g = complete_graph(L);
    const RobustCode stop(n, q, L, rng());
    const RobustCode cont(n, q, L, rng(), SaturationPolicy::Continue);
    std::vector<Value> a(n * (q - 1));
    for (auto& x : a) x = rng() % L;
    const auto param = ParametricCode::identity(n, q, L, a);
    exercise(stop, g, rng(), n * (q - 1));
    exercise(cont, g, rng(), n * (q - 1));
    exercise(param, g, rng(), n * (q - 1));
  }
}

TEST_CASE("property: trajectory codes keep the rewrite contract") {
  std::mt19937_64 rng(77);
  const std::vector<std::shared_ptr<const DataGraph>> graphs = {
      std::make_shared<DataGraph>(hypercube_graph(3, 2)), std::make_shared<DataGraph>(hypercube_graph(2, 5)),
      std::make_shared<DataGraph>(debruijn_graph(5, 2)),  std::make_shared<DataGraph>(debruijn_graph(3, 3)),
      std::make_shared<DataGraph>(bidirected_tree(3, 20)), std::make_shared<DataGraph>(bidirected_tree(6, 50)),
  };
  int built = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const auto& g = graphs[rng() % graphs.size()];
    const std::size_t n = 16 + rng() % 100;
    const unsigned q = 2 + rng() % 7;
    TrajectoryLayout layout;
    try {
      layout = plan_layout(n, q, *g, n * (q - 1));
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::InfeasibleLayout);
      continue;
    }
    ++built;
    const TrajectoryCode code(g, layout);
    CHECK(code.decode(code.initial_state()) == 0);
    const auto t = exercise(code, *g, rng(), n * (q - 1));
    const auto bound = trajectory_composite_bound(layout);
    CHECK(Rational(static_cast<std::int64_t>(t)) >= Rational(bound.numerator() / bound.denominator()));
  }
  CHECK(built > 60);
}

TEST_CASE("property: exhaustive adversaries respect the complete-graph ceiling when n < L-1") {
  for (auto [n, q, L] : {std::tuple{2u, 3u, 5u}, {2u, 4u, 6u}, {3u, 3u, 9u}, {3u, 2u, 7u}, {4u, 5u, 20u}, {4u, 3u, 12u}}) {
    const auto g = complete_graph(L);
    const auto ceiling = ub_complete(n, q, L);
    REQUIRE(ceiling.precondition_ok);
    const BaseRepCode base(n, q, L);
    CHECK(worst_case_t(base, g, 1'000'000) <= ceiling.value);
    try {
      const SplitCode split(n, q, L);
      CHECK(worst_case_t(split, g, 1'000'000) <= ceiling.value);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NoFeasibleB);
    }
  }
}

TEST_CASE("property: modular codes meet their per-band guarantee exhaustively") {
  for (auto [n, q, L] : {std::tuple{3u, 2u, 3u}, {3u, 3u, 3u}, {5u, 2u, 5u}, {6u, 2u, 3u}, {4u, 3u, 2u}, {7u, 3u, 7u},
                         {10u, 2u, 5u}, {11u, 2u, 11u}, {12u, 3u, 12u}}) {
    const ModularCode code(n, q, L);
    const auto wc = worst_case_t(code, complete_graph(L), 5'000'000);
    CHECK(Rational(static_cast<std::int64_t>(wc)) >= lb_modular(n, q, L).per_band_floor);
  }
}

TEST_CASE("the unfloored per-band count (L+4)/4 is not reached when 4 does not divide L") {
  // Exhaustive worst cases: one rewrite per band at L=3, two at L=6.
  CHECK(worst_case_t(ModularCode(3, 3, 3), complete_graph(3), 100000) == 2);
  CHECK(lb_modular(3, 3, 3).value == Rational(7, 2));
  CHECK(worst_case_t(ModularCode(6, 3, 6), complete_graph(6), 100000) == 4);
  CHECK(lb_modular(6, 3, 6).value == Rational(5));
}
