#include "minconn/bounds.hpp"

#include <algorithm>
#include <stdexcept>

#include "minconn/errors.hpp"
#include "minconn/plan.hpp"

namespace minconn {

long long ceil_div(long long a, long long b) {
  if (b <= 0) throw std::invalid_argument("ceil_div: divisor must be > 0");
  long long q = a / b;
  if (a % b != 0 && a > 0) ++q;
  return q;
}

namespace {

void check_nk(long long n, int k) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (n <= k) {
    throw std::invalid_argument("need n > k, got n = " + std::to_string(n) +
                                ", k = " + std::to_string(k));
  }
}

}  // namespace

Rational mader_lower(long long n, int k) {
  check_nk(n, k);
  return Rational((k - 1) * n + 2 * k, 2 * k - 1);
}

Rational mader_generalized_lower(long long n, int k, long long c_f,
                                 long long ek, int delta) {
  check_nk(n, k);
  if (c_f < 0 || ek < 0) {
    throw std::invalid_argument("c_f and ek must be nonnegative");
  }
  long long excess = std::max(0LL, static_cast<long long>(delta) - (k + 1));
  return Rational((k - 1) * n + 2 * (c_f + ek) + excess, 2 * k - 1);
}

long long oxley_lower(long long m, long long n, int k) {
  if (k < 2) throw std::invalid_argument("oxley_lower: k must be >= 2");
  return ceil_div(m - n + k, k - 1);
}

long long simple_lower(long long m, long long n, int k) {
  if (k < 1) throw std::invalid_argument("simple_lower: k must be >= 1");
  return (k + 1) * n - 2 * m;
}

Rational threshold(long long n, int k) {
  check_nk(n, k);
  return Rational(k * (k * n - 1), 2 * k - 1);
}

long long tight_lower(long long m, long long n, int k) {
  if (k < 2) throw std::invalid_argument("tight_lower: k must be >= 2");
  check_nk(n, k);
  long long s = simple_lower(m, n, k);
  long long o = oxley_lower(m, n, k);
  long long best = std::max(s, o);
  // The threshold picks the dominant side; both selections must agree.
  long long piecewise = Rational(m) <= threshold(n, k) ? s : o;
  if (piecewise != best) {
    throw VerificationError(
        "tight_lower: threshold selection disagrees with max at m = " +
        std::to_string(m) + ", n = " + std::to_string(n) +
        ", k = " + std::to_string(k));
  }
  return best;
}

std::pair<long long, long long> edge_range(long long n, int k) {
  check_nk(n, k);
  long long lo = ceil_div(static_cast<long long>(k) * n, 2);
  long long hi = static_cast<long long>(k) * n -
                 static_cast<long long>(k) * (k + 1) / 2;
  return {lo, hi};
}

ParityClass classify_parity(long long m, long long n, int k) {
  if (k < 2) throw std::invalid_argument("classify_parity: k must be >= 2");
  ParityClass pc;
  if (n <= 2 * k) {
    pc.reason = "n must exceed 2k";
    return pc;
  }
  pc.n_condition_met = n >= 3 * k - 2;
  auto [lo, hi] = edge_range(n, k);
  if (m < lo || m > hi) {
    pc.reason = "m outside the edge range [" + std::to_string(lo) + ", " +
                std::to_string(hi) + "]";
    return pc;
  }
  Rational m0 = threshold(n, k);
  Rational rm(m);
  PlanResult small = rm <= m0 ? try_plan_small_m(m, n, k) : PlanResult{};
  PlanResult large = rm >= m0 ? try_plan_large_m(m, n, k) : PlanResult{};
  if (rm < m0) {
    pc.regime = ParityRegime::small_m;
    pc.i = (k * (n - 1) - m) % (static_cast<long long>(k) * (k - 1));
    pc.feasible = small.plan.has_value();
    if (!pc.feasible) pc.reason = small.reason;
  } else if (rm > m0) {
    pc.regime = ParityRegime::large_m;
    long long d = (k * (n - 1) - m) / (k - 1);
    if ((k * (n - 1) - m) % (k - 1) == 0) {
      pc.i = ((-d) % k + k) % k;
    }
    pc.feasible = large.plan.has_value();
    if (!pc.feasible) pc.reason = large.reason;
  } else {
    pc.regime = ParityRegime::both;
    pc.i = 0;
    pc.feasible = small.plan.has_value() || large.plan.has_value();
    if (!pc.feasible) pc.reason = small.reason;
  }
  if (pc.i.has_value()) {
    pc.n_condition_met =
        n >= 3 * k - 2 || !(*pc.i >= 1 && 2 * *pc.i < k);
  }
  return pc;
}

BoundReport bound_report(long long m, long long n, int k) {
  if (k < 2) throw std::invalid_argument("bound_report: k must be >= 2");
  check_nk(n, k);
  BoundReport r;
  r.k = k;
  r.n = n;
  r.m = m;
  r.mader = mader_lower(n, k);
  r.oxley = oxley_lower(m, n, k);
  r.simple = simple_lower(m, n, k);
  r.tight = tight_lower(m, n, k);
  r.threshold_m0 = threshold(n, k);
  Rational rm(m);
  r.regime = rm < r.threshold_m0 ? "below" : rm > r.threshold_m0 ? "above"
                                                                 : "at";
  auto [lo, hi] = edge_range(n, k);
  r.edge_min = lo;
  r.edge_max = hi;
  r.in_edge_range = m >= lo && m <= hi;
  return r;
}

}  // namespace minconn
