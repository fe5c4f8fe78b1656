#include <doctest.h>

#include <cmath>
#include <random>

#include "flashcodes/bounds.hpp"
#include "flashcodes/error.hpp"
#include "flashcodes/register_codes.hpp"
#include "support/oracles.hpp"

using namespace flashcodes;

TEST_CASE("modular lower bound") {
  CHECK(lb_modular(8, 4, 8).value == Rational(9));
  CHECK(lb_modular(8, 2, 8).value == Rational(3));
  CHECK(lb_modular(5, 2, 5).value == Rational(9, 4));
  CHECK(lb_modular(16, 4, 8).value == Rational(18));
  CHECK(lb_modular(16, 4, 8).uniform_form == Rational(6));
  CHECK(lb_modular(16, 4, 8).regime_ok);
  CHECK(lb_modular(16, 4, 8).per_band_floor == Rational(18));
  CHECK(lb_modular(10, 3, 5).per_band_floor == Rational(8));
  CHECK(lb_modular(10, 3, 5).value == Rational(9));
  CHECK_FALSE(lb_modular(4, 4, 8).regime_ok);
  CHECK(lb_modular(4, 4, 8).value == Rational(0));
}

TEST_CASE("base representation lower bound") {
  CHECK(lb_baserep(8, 2).value == Rational(4));
  CHECK(lb_baserep(8, 2).radix == 2);
  CHECK(lb_baserep(5, 5).value == Rational(1));
  CHECK(lb_baserep(5, 2.5).value == Rational(5, 3));
  // ceil(2^(1/16)) is already 2.
  const auto tiny = lb_baserep(4, std::pow(2.0, 1.0 / 16));
  CHECK(tiny.radix == 2);
  CHECK_FALSE(tiny.radix_clamped);
  CHECK(tiny.value == Rational(2));
  const auto clamped = lb_baserep(4, 1.0);
  CHECK(clamped.radix == 2);
  CHECK(clamped.radix_clamped);
  CHECK(clamped.value == Rational(2));
}

TEST_CASE("split lower bound") {
  const auto b = lb_split(256, 2, 1u << 16);
  CHECK(b.value == doctest::Approx(4.0));
  CHECK(b.regime_ok);
  const auto off = lb_split(16, 2, 8);
  CHECK_FALSE(off.regime_ok);
  CHECK(off.value > 0);
}

TEST_CASE("trivial upper bound") {
  CHECK(ub_trivial(8, 4) == 24);
  CHECK(ub_trivial(1, 2) == 1);
  CHECK(ub_trivial(64, 8) == 448);
}

TEST_CASE("max_r") {
  CHECK(max_r(4, 20) == 2);
  CHECK(max_r(4, 5) == 0);   // C(4,1) = 4 >= L-1
  CHECK(max_r(4, 6) == 1);   // C(4,1) = 4 < 5 <= C(5,2)
  CHECK(max_r(8, 16) == 1);
  CHECK(max_r(64, 1u << 20) == 4);
  CHECK(max_r(5, 2) == 0);
  CHECK_THROWS_AS(max_r(1, 10), Error);
}

TEST_CASE("max_r agrees with a Pascal-column scan") {
  for (std::uint64_t n = 2; n <= 64; ++n) {
    for (std::uint64_t L = 3; L <= 300; L += 3) CHECK(max_r(n, L) == oracle::max_r_scan(n, L));
    CHECK(max_r(n, 1'000'003) == oracle::max_r_scan(n, 1'000'003));
    if (n >= 6) CHECK(max_r(n, std::uint64_t{1} << 32) == oracle::max_r_scan(n, std::uint64_t{1} << 32));
  }
}

TEST_CASE("complete-graph upper bound") {
  const auto b = ub_complete(4, 5, 20);
  CHECK(b.r == 2);
  CHECK(b.value == 5);
  CHECK(b.precondition_ok);
  CHECK(ub_complete(4, 5, 5).value == 16);
  CHECK(ub_complete(64, 8, 1u << 20).value == 448 / 5);
  CHECK_FALSE(ub_complete(8, 4, 8).precondition_ok);
}

TEST_CASE("Delta threshold and b ceiling") {
  CHECK(delta_threshold(64, 16) == 32);
  CHECK(delta_threshold(64, 2) == 192);
  CHECK(delta_threshold(4, 16) == 0);
  CHECK(b_ceiling(64, 16) == doctest::Approx(2.0 * 4 / 4));
}

TEST_CASE("robust regime") {
  const auto r = robust_regime(64, 8, 4, 64);
  CHECK(r.nq == 512);
  CHECK(r.l_log_l == 8);
  CHECK(r.ratio == 64);
  CHECK(r.met);
  CHECK_FALSE(robust_regime(64, 8, 4, 65).met);
  CHECK(robust_regime(4, 2, 2, 1).l_log_l == 2);
  CHECK_FALSE(robust_regime(2, 2, 4, 8).met);
}

TEST_CASE("code lower bounds") {
  CHECK(*code_lower_bound(ModularCode(8, 4, 8)) == Rational(9));
  CHECK(*code_lower_bound(SplitCode(16, 4, 56)) == Rational(9));
  CHECK(*code_lower_bound(BaseRepCode(4, 5, 20)) == Rational(5, 3));
}

TEST_CASE("bounds report") {
  const auto r = bounds_report(4, 5, 20, std::nullopt, 0.15, 8);
  CHECK(r.ub_complete.r == 2);
  CHECK(r.ub_complete.value == 5);
  CHECK(r.ub_trivial == 16);
  CHECK_FALSE(r.b.has_value());
  CHECK(r.lb_baserep.radix == 3);
  const auto s = bounds_report(8, 4, 8, 7, 0.15, 8);
  CHECK(s.lb_modular.value == Rational(9));
  CHECK(s.ub_trivial == 24);
  REQUIRE(s.small_delta.has_value());
  CHECK(bounds_report(16, 4, 56, std::nullopt, 0.1, 8).b == 2u);
  CHECK_THROWS_AS(bounds_report(4, 5, 1, std::nullopt, 0.1, 8), Error);
  CHECK_THROWS_AS(bounds_report(4, 1, 8, std::nullopt, 0.1, 8), Error);
  CHECK(!bounds_report(2, 4, 2, std::nullopt, 0.1, 8).notes.empty());
}

TEST_CASE("property: lower bounds never exceed the trivial upper bound") {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 3000; ++i) {
    const std::uint64_t n = 2 + rng() % 200;
    const std::uint64_t q = 2 + rng() % 30;
    const std::uint64_t L = 2 + rng() % 5000;
    const auto ub = ub_trivial(n, q);
    CHECK(lb_modular(n, q, L).value <= Rational(static_cast<std::int64_t>(ub)));
    CHECK(ub_complete(n, q, L).value <= ub);
    if (L >= n && std::log2(static_cast<double>(L)) <= n / 16.0) CHECK(lb_split(n, q, L).value <= ub);
    CHECK(lb_baserep(q, 1 + static_cast<double>(rng() % q)).value <= Rational(static_cast<std::int64_t>(ub)));
  }
}
