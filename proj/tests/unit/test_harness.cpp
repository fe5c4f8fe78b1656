#include <doctest.h>

#include <random>

#include "flashcodes/bounds.hpp"
#include "flashcodes/error.hpp"
#include "flashcodes/harness.hpp"
#include "flashcodes/register_codes.hpp"
#include "flashcodes/rng.hpp"
#include "flashcodes/stats.hpp"
#include "support/oracles.hpp"

using namespace flashcodes;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an exception");
  return ErrorKind::InvalidArgument;
}

RewriteSequence list(std::vector<Value> v) { return {std::move(v), "list"}; }

}  // namespace

TEST_CASE("cyclic sequences") {
  CHECK(cyclic_sequence(2, 4).values == std::vector<Value>{1, 0, 1, 0});
  CHECK(cyclic_sequence(4, 5).values == std::vector<Value>{1, 2, 3, 0, 1});
  const auto s = cyclic_sequence(7, 100);
  Value prev = 0;
  for (Value v : s.values) {
    CHECK(v != prev);
    prev = v;
  }
  CHECK(kind_of([] { (void)cyclic_sequence(1, 3); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("random walks") {
  CHECK(random_walk_sequence(complete_graph(5), 1, 0).values.empty());
  CHECK(random_walk_sequence(complete_graph(2), 1, 5).values == std::vector<Value>{1, 0, 1, 0, 1});
  const auto g = hypercube_graph(3, 3);
  CHECK(random_walk_sequence(g, 42, 200).values == random_walk_sequence(g, 42, 200).values);
  CHECK(random_walk_sequence(g, 42, 200).values != random_walk_sequence(g, 43, 200).values);
  CHECK_NOTHROW(validate_sequence(g, random_walk_sequence(g, 7, 500)));
  CHECK(kind_of([&] { validate_sequence(g, list({1, 1})); }) == ErrorKind::InvalidArgument);
  CHECK(kind_of([&] { validate_sequence(g, list({4})); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("run_sequence on the worked example") {
  const SplitCode code(16, 4, 56);
  const auto g = complete_graph(56);
  const auto rep = run_sequence(code, g, list({23, 45, 6, 27, 12}));
  CHECK(rep.t == 5);
  CHECK(rep.stop_reason == "completed");
  CHECK(rep.initial_state == "0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0");
  REQUIRE(rep.trace.size() == 5);
  CHECK(rep.trace[0].raised_cells == std::vector<std::size_t>{2, 15});
  CHECK(rep.trace[2].raised_cells == std::vector<std::size_t>{4, 7, 9});
  CHECK(rep.trace[4].state == "1,2,1,1,1,1,1,1,0,1,1,1,1,1,1,1");
  CHECK(rep.trace[4].weight == 16);
  CHECK(rep.trace[4].detail == "digits=(1,4)");
  CHECK(rep.final_state == rep.trace[4].state);
  CHECK(rep.ub_trivial == 48);
}

TEST_CASE("run_sequence edge cases") {
  const ModularCode code(4, 2, 4);
  const auto g = complete_graph(4);
  const auto empty = run_sequence(code, g, list({}));
  CHECK(empty.t == 0);
  CHECK(empty.stop_reason == "completed");
  const auto longer = run_sequence(code, g, cyclic_sequence(4, 50));
  CHECK(longer.t <= 4);
  CHECK(longer.stop_reason != "completed");
  CHECK(kind_of([&] { (void)run_sequence(code, complete_graph(5), list({1})); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("worst_case_t agrees with plain recursion") {
  const auto g2 = complete_graph(2);
  const ModularCode m2(2, 2, 2);
  CHECK(worst_case_t(m2, g2, 1000) == 2);
  CHECK(oracle::naive_worst_case(m2, g2, m2.initial_state()) == 2);
  for (auto [n, q, L] : {std::tuple{4u, 2u, 4u}, {4u, 3u, 4u}, {5u, 2u, 3u}, {6u, 3u, 3u}, {4u, 2u, 2u}}) {
    const ModularCode code(n, q, L);
    const auto g = complete_graph(L);
    const auto t = worst_case_t(code, g, 1'000'000);
    CHECK(t == oracle::naive_worst_case(code, g, code.initial_state()));
    CHECK(t <= ub_trivial(n, q));
  }
  const BaseRepCode base(3, 4, 8);
  CHECK(worst_case_t(base, complete_graph(8), 1000) == oracle::naive_worst_case(base, complete_graph(8), base.initial_state()));
  CHECK(worst_case_t(ModularCode(4, 2, 4), complete_graph(4), 1000) >= 2);
  CHECK(kind_of([] { (void)worst_case_t(ModularCode(16, 8, 8), complete_graph(8), 50); }) == ErrorKind::StateSpaceTooLarge);
}

TEST_CASE("optimal_game_value agrees with brute force over all decode maps") {
  CHECK(optimal_game_value(2, 2, 2) == 2);
  for (unsigned q = 2; q <= 8; ++q) CHECK(optimal_game_value(1, q, 2) == q - 1);
  for (auto [n, q, L] : {std::tuple{2u, 2u, 3u}, {3u, 2u, 2u}, {2u, 3u, 2u}, {2u, 2u, 4u}, {1u, 5u, 3u}, {3u, 2u, 3u}}) {
    CHECK(optimal_game_value(n, q, L) == oracle::brute_optimal_game(n, q, L));
    CHECK(optimal_game_value(n, q, L) <= ub_trivial(n, q));
  }
  CHECK(kind_of([] { (void)optimal_game_value(7, 2, 2); }) == ErrorKind::CapsExceeded);
  CHECK(kind_of([] { (void)optimal_game_value(2, 2, 5); }) == ErrorKind::CapsExceeded);
  CHECK(kind_of([] { (void)optimal_game_value(3, 4, 4, 1000); }) == ErrorKind::CapsExceeded);
}

TEST_CASE("optimal code beats or ties the modular code") {
  CHECK(optimal_game_value(2, 2, 2) == worst_case_t(ModularCode(2, 2, 2), complete_graph(2), 100));
  CHECK(optimal_game_value(2, 4, 2) >= worst_case_t(ModularCode(2, 4, 2), complete_graph(2), 100));
}

TEST_CASE("Monte Carlo expectation") {
  const auto g = complete_graph(4);
  const auto seq = cyclic_sequence(4, 48);
  const CodeSampler sampler = [](std::uint64_t seed) { return std::make_shared<RobustCode>(16, 4, 4, seed); };
  const auto one = monte_carlo_expectation(sampler, g, seq, 1, 7);
  REQUIRE(one.trials.size() == 1);
  CHECK(one.summary.mean == static_cast<double>(one.trials[0].t));
  CHECK(one.trials[0].seed == derive_seed(7, 0));
  const auto a = monte_carlo_expectation(sampler, g, seq, 50, 7);
  const auto b = monte_carlo_expectation(sampler, g, seq, 50, 7, 3);
  CHECK(a.summary.mean == b.summary.mean);
  CHECK(a.summary.stddev == b.summary.stddev);
  for (std::size_t i = 0; i < 50; ++i) CHECK(a.trials[i].t == b.trials[i].t);
  CHECK(kind_of([&] { (void)monte_carlo_expectation(sampler, g, seq, 0, 7); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("balls-in-bins oracle against the exact expectation") {
  CHECK(balls_in_bins_oracle({5}, 1, 10).summary.mean == 5);
  CHECK(balls_in_bins_oracle({1, 1, 1}, 1, 10).summary.max == 1);
  // Exact values from the generating-function sum.
  CHECK(static_cast<double>(oracle::balls_in_bins_expectation({2, 2, 2, 2})) == doctest::Approx(3.21875));
  CHECK(static_cast<double>(oracle::balls_in_bins_expectation({112, 112, 112, 112})) ==
        doctest::Approx(405.206347).epsilon(1e-8));
  for (std::size_t L = 2; L <= 8; ++L) {
    const std::vector<std::uint64_t> caps(L, 2);
    const double exact = static_cast<double>(oracle::balls_in_bins_expectation(caps));
    const auto sim = balls_in_bins_oracle(caps, 99, 20000);
    CHECK(std::abs(sim.summary.mean - exact) < 5 * sim.summary.stddev / std::sqrt(20000.0));
  }
  const std::vector<std::uint64_t> caps(4, 112);
  const auto sim = balls_in_bins_oracle(caps, 5, 2000);
  const double exact = static_cast<double>(oracle::balls_in_bins_expectation(caps));
  CHECK(std::abs(sim.summary.mean - exact) < 5 * sim.summary.stddev / std::sqrt(2000.0));
  CHECK(exact >= 0.85 * 448);
}

TEST_CASE("statistics") {
  const std::vector<double> xs{1, 2, 3, 4};
  const auto s = summarize(std::span<const double>(xs));
  CHECK(s.mean == 2.5);
  CHECK(s.stddev == doctest::Approx(1.2909944487));
  CHECK(s.min == 1);
  CHECK(s.max == 4);
  CHECK(s.count == 4);
  const std::vector<std::uint64_t> flat{10, 10, 10, 10};
  CHECK(chi_square_uniform_p(flat) == doctest::Approx(1.0));
  const std::vector<std::uint64_t> skew{60, 40};
  CHECK(chi_square_uniform_p(skew) == doctest::Approx(0.0455).epsilon(0.01));
  const auto same = ks_two_sample({1, 2, 3, 4, 5}, {1, 2, 3, 4, 5});
  CHECK(same.statistic == 0);
  CHECK(same.p_value == doctest::Approx(1.0));
  const auto apart = ks_two_sample({1, 2, 3}, {4, 5, 6});
  CHECK(apart.statistic == 1);
  CHECK(apart.p_value < 0.1);
  std::mt19937_64 rng(3);
  std::vector<double> a(500), b(500);
  for (auto& x : a) x = static_cast<double>(uniform_below(rng, 1000));
  for (auto& x : b) x = static_cast<double>(uniform_below(rng, 1000));
  CHECK(ks_two_sample(a, b).p_value > 0.001);
}

TEST_CASE("seed derivation and uniform draws") {
  CHECK(derive_seed(1, 2) == derive_seed(1, 2));
  CHECK(derive_seed(1, 2) != derive_seed(1, 3));
  CHECK(derive_seed(1, 2) != derive_seed(2, 2));
  std::mt19937_64 rng(1);
  std::vector<std::uint64_t> counts(7, 0);
  for (int i = 0; i < 70000; ++i) ++counts[uniform_below(rng, 7)];
  CHECK(chi_square_uniform_p(counts) > 0.001);
  CHECK(uniform_below(rng, 1) == 0);
}

TEST_CASE("robust evaluation on a small instance") {
  const auto seq = cyclic_sequence(4, 48);
  const auto ev = robust_eval(16, 4, 4, seq, 100, 11);
  CHECK(ev.t_samples.size() == 100);
  CHECK(ev.oracle.samples.size() == 100);
  std::uint64_t total = 0;
  for (auto c : ev.index_counts) total += c;
  std::uint64_t t_total = 0;
  for (auto t : ev.t_samples) t_total += t;
  CHECK(total == t_total);
  CHECK(ev.ks.p_value > 0.001);
  const auto again = robust_eval(16, 4, 4, seq, 100, 11);
  CHECK(again.t_samples == ev.t_samples);
  CHECK(again.index_p == ev.index_p);
}
