#include <cmath>
#include <limits>
#include <random>

#include <doctest.h>

#include "ivpareto/error.hpp"
#include "ivpareto/interval.hpp"
#include "support.hpp"

using namespace ivpareto;

using support::code_of;

TEST_SUITE("interval_core") {
  TEST_CASE("make_interval") {
    const Interval d = make_interval(1, 3);
    CHECK(d.lower() == 1);
    CHECK(d.upper() == 3);
    CHECK(make_interval(5, 5).is_degenerate());
    CHECK(code_of([] { make_interval(3, 1); }) == ErrorCode::InvalidBounds);
    CHECK(code_of([] { make_interval(std::nan(""), 1); }) == ErrorCode::InvalidBounds);
    CHECK(code_of([] { make_interval(0, std::numeric_limits<double>::infinity()); }) == ErrorCode::InvalidBounds);
  }

  TEST_CASE("interval_dominates") {
    CHECK(interval_dominates({5, 7}, {1, 3}, DominanceMode::Strict));
    CHECK_FALSE(interval_dominates({3, 5}, {1, 3}, DominanceMode::Strict));
    CHECK(interval_dominates({3, 5}, {1, 3}, DominanceMode::Weak));
    CHECK_FALSE(interval_dominates({2, 2}, {2, 2}, DominanceMode::Strict));
    CHECK(interval_dominates({2, 2}, {2, 2}, DominanceMode::Weak));
    CHECK_FALSE(interval_dominates({1, 3}, {5, 7}));
  }

  TEST_CASE("contract") {
    CHECK(contract({0, 10}, {2, 7}) == Interval(2, 7));
    CHECK(code_of([] { contract({0, 10}, {-1, 5}); }) == ErrorCode::NotAContraction);
    CHECK(code_of([] { contract({0, 10}, {5, 11}); }) == ErrorCode::NotAContraction);
    CHECK(contract({2, 7}, {2, 7}) == Interval(2, 7));
  }

  TEST_CASE("queries") {
    CHECK(Interval(1, 4).width() == 3);
    CHECK(Interval(5, 5).is_degenerate());
    CHECK(Interval(5, 5).contains(5));
    CHECK_FALSE(Interval(1, 4).contains(0));
    CHECK(Interval(1, 4).contains(4));
  }

  TEST_CASE("mode names") {
    CHECK(parse_dominance_mode("weak") == DominanceMode::Weak);
    CHECK(to_string(DominanceMode::Strict) == "strict");
    CHECK(code_of([] { parse_dominance_mode("loose"); }) == ErrorCode::SchemaError);
  }

  TEST_CASE("order axioms on random triples") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 5000; ++t) {
      const Interval a = support::random_interval(rng);
      const Interval b = support::random_interval(rng);
      const Interval c = support::random_interval(rng);
      CHECK_FALSE(interval_dominates(a, a, DominanceMode::Strict));
      if (interval_dominates(a, b)) CHECK_FALSE(interval_dominates(b, a));
      for (auto mode : {DominanceMode::Strict, DominanceMode::Weak}) {
        if (interval_dominates(a, b, mode) && interval_dominates(b, c, mode)) CHECK(interval_dominates(a, c, mode));
      }
    }
  }

  TEST_CASE("contraction keeps dominance and points agree with it") {
    std::mt19937_64 rng(12);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int t = 0; t < 5000; ++t) {
      const Interval a = support::random_interval(rng, 10);
      const Interval b = support::random_interval(rng, 10);
      const double pa = a.lower() + u(rng) * a.width();
      const double pb = b.lower() + u(rng) * b.width();
      const Interval a2(a.lower() + (pa - a.lower()) * u(rng), a.upper() - (a.upper() - pa) * u(rng));
      const Interval b2(b.lower() + (pb - b.lower()) * u(rng), b.upper() - (b.upper() - pb) * u(rng));
      REQUIRE(a2.within(a));
      if (interval_dominates(a, b)) {
        CHECK(interval_dominates(a2, b2));
        CHECK(pa > pb);
      }
    }
  }
}
