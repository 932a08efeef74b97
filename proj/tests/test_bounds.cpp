#include <doctest.h>

#include <algorithm>

#include "minconn/bounds.hpp"
#include "minconn/constructions.hpp"
#include "minconn/plan.hpp"
#include "minconn/rational.hpp"

using namespace minconn;

TEST_SUITE("bounds") {

TEST_CASE("rational arithmetic") {
  Rational r(6, 4);
  CHECK(r.num() == 3);
  CHECK(r.den() == 2);
  CHECK(r.str() == "3/2");
  CHECK(Rational(-6, -4) == Rational(3, 2));
  CHECK(Rational(6, -4) == Rational(-3, 2));
  CHECK(Rational(3, 2) + Rational(1, 2) == Rational(2));
  CHECK(Rational(1, 3) * Rational(3, 4) == Rational(1, 4));
  CHECK(Rational(7, 2).floor() == 3);
  CHECK(Rational(7, 2).ceil() == 4);
  CHECK(Rational(-7, 2).floor() == -4);
  CHECK(Rational(-7, 2).ceil() == -3);
  CHECK(Rational(8, 2).is_integer());
  CHECK(Rational(8, 2).str() == "4");
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(5) > Rational(9, 2));
  CHECK(rational_max(Rational(1, 3), Rational(1, 2)) == Rational(1, 2));
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("ceil_div") {
  CHECK(ceil_div(0, 5) == 0);
  CHECK(ceil_div(1, 5) == 1);
  CHECK(ceil_div(10, 5) == 2);
  CHECK(ceil_div(11, 5) == 3);
  CHECK(ceil_div(-3, 2) == -1);
  CHECK_THROWS_AS(ceil_div(1, 0), std::invalid_argument);
}

TEST_CASE("named bounds at frozen points") {
  CHECK(mader_lower(100, 4) == Rational(44));
  CHECK(mader_lower(7, 3) == Rational(4));    // (2*7 + 6) / 5
  CHECK(mader_lower(10, 2) == Rational(14, 3));
  CHECK(mader_lower(10, 2).ceil() == 5);
  CHECK(threshold(100, 4) == Rational(228));
  CHECK(threshold(5, 2) == Rational(6));
  CHECK(threshold(6, 2) == Rational(22, 3));
  CHECK(threshold(10, 2) == Rational(38, 3));
  CHECK(threshold(22, 3) == Rational(39));
  CHECK(oxley_lower(12, 7, 3) == 4);
  CHECK(oxley_lower(19, 10, 3) == 6);
  CHECK(oxley_lower(8, 6, 2) == 4);
  CHECK(oxley_lower(13, 10, 2) == 5);
  CHECK(oxley_lower(6, 5, 2) == 3);
  CHECK(oxley_lower(39, 22, 3) == 10);
  CHECK(simple_lower(5, 5, 2) == 5);
  CHECK(simple_lower(72, 28, 5) == 24);
  CHECK(simple_lower(39, 22, 3) == 10);
  CHECK(simple_lower(11, 10, 2) == 8);
  CHECK(tight_lower(228, 100, 4) == 44);
  CHECK(tight_lower(7, 6, 2) == 4);
  CHECK(tight_lower(5, 5, 2) == 5);
  CHECK(tight_lower(6, 5, 2) == 3);
  CHECK(tight_lower(11, 10, 2) == 8);  // degree-count side dominates
  CHECK(tight_lower(13, 10, 2) == 5);  // edge-sensitive side dominates
}

TEST_CASE("generalized bound refines the classic one") {
  // Wheel-like data: n = 7, k = 3, c_f = 1, ek = 6, delta = 6.
  CHECK(mader_generalized_lower(7, 3, 1, 6, 6) == Rational(14 + 14 + 2, 5));
  CHECK(mader_generalized_lower(7, 3, 1, 6, 4) == Rational(28, 5));
  // K_{2,3} data: exactly its degree-2 count.
  CHECK(mader_generalized_lower(5, 2, 2, 0, 3) == Rational(3));
  // k-regular data: vk = n comes straight out.
  CHECK(mader_generalized_lower(5, 2, 0, 5, 2) == Rational(5));
  // With the minimum possible c_f + ek = k it reduces to the classic bound.
  for (int k = 2; k <= 6; ++k) {
    for (long long n = 2 * k + 1; n <= 40; ++n) {
      CHECK(mader_generalized_lower(n, k, k, 0, k + 1) == mader_lower(n, k));
    }
  }
}

TEST_CASE("edge range endpoints") {
  CHECK(edge_range(5, 2) == std::pair<long long, long long>{5, 7});
  CHECK(edge_range(22, 3) == std::pair<long long, long long>{33, 60});
  CHECK(edge_range(9, 4) == std::pair<long long, long long>{18, 26});
  // The upper end equals the complete graph exactly at n = k + 1.
  for (int k = 2; k <= 6; ++k) {
    auto [lo, hi] = edge_range(k + 1, k);
    CHECK(lo == hi);
    CHECK(hi == static_cast<long long>(k) * (k + 1) / 2);
  }
  CHECK_THROWS_AS(edge_range(3, 3), std::invalid_argument);
}

TEST_CASE("tight bound equals the max of its two parts exhaustively") {
  for (int k = 2; k <= 5; ++k) {
    for (long long n = k + 1; n <= 40; ++n) {
      auto [lo, hi] = edge_range(n, k);
      for (long long m = lo; m <= hi; ++m) {
        CHECK(tight_lower(m, n, k) ==
              std::max(simple_lower(m, n, k), oxley_lower(m, n, k)));
      }
    }
  }
}

TEST_CASE("classification at frozen points") {
  ParityClass both = classify_parity(12, 7, 3);
  CHECK(both.regime == ParityRegime::both);
  CHECK(both.i == 0);
  CHECK(both.feasible);
  CHECK(both.n_condition_met);

  ParityClass small = classify_parity(72, 28, 5);
  CHECK(small.regime == ParityRegime::small_m);
  CHECK(small.i == 3);
  CHECK(small.feasible);
  CHECK(small.n_condition_met);  // 2i >= k

  ParityClass large = classify_parity(19, 10, 3);
  CHECK(large.regime == ParityRegime::large_m);
  CHECK(large.i == 2);
  CHECK(large.feasible);

  // Residue too large for the small regime.
  ParityClass res = classify_parity(36, 22, 3);
  CHECK(res.regime == ParityRegime::small_m);
  CHECK_FALSE(res.feasible);
  CHECK_FALSE(res.reason.empty());

  // Adjacent edge counts on either side of the threshold work.
  ParityClass below = classify_parity(38, 22, 3);
  CHECK(below.regime == ParityRegime::small_m);
  CHECK(below.i == 1);  // 25 mod 6
  CHECK(below.feasible);
  ParityClass above = classify_parity(45, 22, 3);
  CHECK(above.regime == ParityRegime::large_m);
  CHECK(above.i == 0);
  CHECK(above.feasible);

  // j would be negative: arithmetic parity holds but no plan exists.
  ParityClass gap = classify_parity(7, 6, 2);
  CHECK(gap.regime == ParityRegime::small_m);
  CHECK(gap.i == 1);
  CHECK_FALSE(gap.feasible);

  // Large regime needs (k - 1) | (k (n - 1) - m).
  ParityClass par = classify_parity(20, 10, 3);
  CHECK(par.regime == ParityRegime::large_m);
  CHECK_FALSE(par.i.has_value());
  CHECK_FALSE(par.feasible);

  ParityClass tiny = classify_parity(12, 6, 3);
  CHECK(tiny.regime == ParityRegime::neither);
  CHECK_FALSE(tiny.feasible);
  CHECK_FALSE(tiny.n_condition_met);

  ParityClass out = classify_parity(10, 10, 3);
  CHECK(out.regime == ParityRegime::neither);
  CHECK_FALSE(out.feasible);
  CHECK(out.n_condition_met);  // n >= 3k - 2 even though m is out of range
}

TEST_CASE("n condition tracks small residues only below 3k - 2") {
  // k = 4, n = 9 < 3k - 2 = 10, i = 1 with 2i < k: not guaranteed.
  ParityClass pc = classify_parity(19, 9, 4);
  CHECK(pc.regime == ParityRegime::small_m);
  CHECK(pc.i == 1);
  CHECK(pc.feasible);
  CHECK_FALSE(pc.n_condition_met);
  // Same residue at n >= 3k - 2 is fine.
  ParityClass ok = classify_parity(35, 16, 4);
  CHECK(ok.i == 1);
  CHECK(ok.feasible);
  CHECK(ok.n_condition_met);
}

TEST_CASE("bound report fields") {
  BoundReport r = bound_report(39, 22, 3);
  CHECK(r.mader == Rational(50, 5));
  CHECK(r.simple == 10);
  CHECK(r.oxley == 10);
  CHECK(r.tight == 10);
  CHECK(r.threshold_m0 == Rational(39));
  CHECK(r.regime == "at");
  CHECK(r.edge_min == 33);
  CHECK(r.edge_max == 60);
  CHECK(r.in_edge_range);
  CHECK(bound_report(34, 22, 3).regime == "below");
  CHECK(bound_report(44, 22, 3).regime == "above");
  CHECK_FALSE(bound_report(61, 22, 3).in_edge_range);
}

}  // TEST_SUITE

TEST_SUITE("plan") {

TEST_CASE("frozen small-regime plans") {
  PlanResult r = try_plan_small_m(72, 28, 5);
  REQUIRE(r.plan.has_value());
  CHECK(r.plan->regime == Regime::small_m);
  CHECK(r.plan->l == 3);
  CHECK(r.plan->i == 3);
  CHECK(r.plan->j == 1);
  CHECK(r.plan->i_t == 2);
  CHECK(r.plan->i_s == 1);

  PlanResult l1 = try_plan_small_m(19, 9, 4);
  REQUIRE(l1.plan.has_value());
  CHECK(l1.plan->l == 1);
  CHECK(l1.plan->i == 1);
  CHECK(l1.plan->j == 0);

  PlanResult overlap = try_plan_small_m(33, 16, 4);
  REQUIRE(overlap.plan.has_value());
  CHECK(overlap.plan->l == 2);
  CHECK(overlap.plan->i == 3);
  CHECK(overlap.plan->i_t == 2);
  CHECK(overlap.plan->i_s == 1);
  CHECK(overlap.plan->j == 0);

  PlanResult at = try_plan_small_m(228, 100, 4);
  REQUIRE(at.plan.has_value());
  CHECK(at.plan->l == 14);
  CHECK(at.plan->i == 0);
  CHECK(at.plan->j == 0);

  PlanResult ten = try_plan_small_m(11, 10, 2);
  REQUIRE(ten.plan.has_value());
  CHECK(ten.plan->l == 3);
  CHECK(ten.plan->i == 1);
  CHECK(ten.plan->j == 1);
  CHECK(ten.plan->i_t == 1);
  CHECK(ten.plan->i_s == 0);

  PlanResult near = try_plan_small_m(38, 22, 3);
  REQUIRE(near.plan.has_value());
  CHECK(near.plan->l == 4);
  CHECK(near.plan->i == 1);
  CHECK(near.plan->j == 0);
  CHECK(near.plan->i_t == 1);
  CHECK(near.plan->i_s == 0);
}

TEST_CASE("frozen large-regime plans") {
  PlanResult r = try_plan_large_m(19, 10, 3);
  REQUIRE(r.plan.has_value());
  CHECK(r.plan->regime == Regime::large_m);
  CHECK(r.plan->l == 2);
  CHECK(r.plan->i == 2);
  CHECK(r.plan->j == 0);

  PlanResult ten = try_plan_large_m(13, 10, 2);
  REQUIRE(ten.plan.has_value());
  CHECK(ten.plan->l == 3);
  CHECK(ten.plan->i == 1);
  CHECK(ten.plan->j == 0);

  PlanResult tail = try_plan_large_m(45, 22, 3);
  REQUIRE(tail.plan.has_value());
  CHECK(tail.plan->l == 3);
  CHECK(tail.plan->i == 0);
  CHECK(tail.plan->j == 5);

  // At an integral threshold the large plan degenerates to the plain base.
  PlanResult at = try_plan_large_m(39, 22, 3);
  REQUIRE(at.plan.has_value());
  CHECK(at.plan->l == 4);
  CHECK(at.plan->i == 0);
  CHECK(at.plan->j == 0);

  // Both planners accept at the K_{3,4} point.
  CHECK(try_plan_small_m(12, 7, 3).plan.has_value());
  CHECK(try_plan_large_m(12, 7, 3).plan.has_value());
}

TEST_CASE("rejections carry reasons") {
  CHECK_FALSE(try_plan_small_m(36, 22, 3).plan.has_value());
  CHECK_FALSE(try_plan_small_m(36, 22, 3).reason.empty());
  CHECK_FALSE(try_plan_small_m(7, 6, 2).plan.has_value());   // j = -1
  CHECK_FALSE(try_plan_large_m(20, 10, 3).plan.has_value()); // parity
  CHECK_FALSE(try_plan_large_m(17, 8, 3).plan.has_value());  // l = 1, i > 0
  CHECK_FALSE(try_plan_small_m(12, 6, 3).plan.has_value());  // n <= 2k
  CHECK_THROWS_AS(plan_small_m(36, 22, 3), InfeasibleError);
  CHECK_THROWS_AS(plan_large_m(20, 10, 3), InfeasibleError);
}

TEST_CASE("plan parameters reproduce n and m") {
  for (int k = 2; k <= 5; ++k) {
    for (long long n = 2 * k + 1; n <= 40; ++n) {
      auto [lo, hi] = edge_range(n, k);
      for (long long m = lo; m <= hi; ++m) {
        if (PlanResult s = try_plan_small_m(m, n, k); s.plan) {
          const ConstructionPlan& p = *s.plan;
          CHECK(n == (2 * k - 1) * p.l + 2 - p.j);
          CHECK(m == k * (k * p.l + 1) - p.i - p.j * k);
          CHECK(p.i_t + p.i_s == p.i);
          CHECK(p.i_t <= k / 2);
          CHECK(p.j <= p.l);
        }
        if (PlanResult lg = try_plan_large_m(m, n, k); lg.plan) {
          const ConstructionPlan& p = *lg.plan;
          CHECK(n == (2 * k - 1) * p.l + 2 - p.i + p.j);
          CHECK(m == k * (k * p.l + 1) + p.j * k - p.i);
          CHECK(p.i < k);
          if (p.i > 0) CHECK(p.l >= 2);
        }
      }
    }
  }
}

TEST_CASE("dispatch matches classification feasibility") {
  for (int k = 2; k <= 5; ++k) {
    for (long long n = 2 * k + 1; n <= 36; ++n) {
      auto [lo, hi] = edge_range(n, k);
      for (long long m = lo; m <= hi; ++m) {
        ParityClass pc = classify_parity(m, n, k);
        PlanResult pr = plan_witness(m, n, k);
        CHECK(pc.feasible == pr.plan.has_value());
        if (pr.plan) {
          CHECK(planned_vk(*pr.plan) == tight_lower(m, n, k));
        }
      }
    }
  }
}

}  // TEST_SUITE
