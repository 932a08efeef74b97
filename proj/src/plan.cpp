#include "minconn/plan.hpp"

#include <algorithm>
#include <string>

#include "minconn/errors.hpp"

namespace minconn {

namespace {

std::string fail_prefix(long long m, long long n, int k) {
  return "(m = " + std::to_string(m) + ", n = " + std::to_string(n) +
         ", k = " + std::to_string(k) + "): ";
}

// Shared gate for both regimes; returns a reason or the empty string.
std::string common_reject(long long m, long long n, int k) {
  if (k < 2) throw std::invalid_argument("planner requires k >= 2");
  if (n <= 2 * k) return "n must exceed 2k";
  auto [lo, hi] = edge_range(n, k);
  if (m < lo || m > hi) {
    return "m outside the edge range [" + std::to_string(lo) + ", " +
           std::to_string(hi) + "]";
  }
  return "";
}

}  // namespace

PlanResult try_plan_small_m(long long m, long long n, int k) {
  PlanResult res;
  res.reason = common_reject(m, n, k);
  if (!res.reason.empty()) return res;
  if (Rational(m) > threshold(n, k)) {
    res.reason = "m above the threshold, use the large regime";
    return res;
  }
  long long modulus = static_cast<long long>(k) * (k - 1);
  long long i = (k * (n - 1) - m) % modulus;  // arguments positive in range
  long long half_k = k / 2;
  if (i > 2 * half_k) {
    res.reason = "parity residue i = " + std::to_string(i) +
                 " exceeds 2 * floor(k / 2) = " + std::to_string(2 * half_k);
    return res;
  }
  long long l = (k * (n - 1) - i - m) / modulus;
  if (l < 1) {
    res.reason = "derived tree size l = " + std::to_string(l) + " is below 1";
    return res;
  }
  long long j = l * (2 * k - 1) - n + 2;
  if (j < 0) {
    res.reason = "derived deletion count j = " + std::to_string(j) +
                 " is negative";
    return res;
  }
  if (j > l) {
    res.reason = "derived deletion count j = " + std::to_string(j) +
                 " exceeds the layer count l = " + std::to_string(l);
    return res;
  }
  if (j == l && i != 0) {
    res.reason = "deleting every layer (j = l) needs residue i = 0, have i = " +
                 std::to_string(i);
    return res;
  }
  if (j == l - 1 && i > half_k) {
    res.reason =
        "deleting all but one layer (j = l - 1) caps the residue at "
        "floor(k / 2), have i = " +
        std::to_string(i);
    return res;
  }
  long long i_t = std::min(i, half_k);
  long long i_s = i - i_t;
  if (l == 1 && i_s > 0) {
    res.reason = "a single layer cannot host matchings at both ends";
    return res;
  }
  res.plan = ConstructionPlan{Regime::small_m, k, n, m, l, i, j, i_t, i_s};
  res.reason.clear();
  return res;
}

PlanResult try_plan_large_m(long long m, long long n, int k) {
  PlanResult res;
  res.reason = common_reject(m, n, k);
  if (!res.reason.empty()) return res;
  if (Rational(m) < threshold(n, k)) {
    res.reason = "m below the threshold, use the small regime";
    return res;
  }
  long long num = k * (n - 1) - m;
  if (num % (k - 1) != 0) {
    res.reason = "k (n - 1) - m = " + std::to_string(num) +
                 " is not divisible by k - 1";
    return res;
  }
  long long d = num / (k - 1);
  if (d < 1) {
    res.reason = "derived deficit d = " + std::to_string(d) + " is below 1";
    return res;
  }
  long long i = ((-d) % k + k) % k;
  long long l = (d + i) / k;
  if (l < 1) {
    res.reason = "derived tree size l = " + std::to_string(l) + " is below 1";
    return res;
  }
  if (i > 0 && l < 2) {
    res.reason = "contractions (i = " + std::to_string(i) +
                 ") need at least two layers, derived l = " +
                 std::to_string(l);
    return res;
  }
  long long j = n - 2 + i - (2 * k - 1) * l;
  if (j < 0) {
    res.reason = "derived attachment count j = " + std::to_string(j) +
                 " is negative";
    return res;
  }
  res.plan = ConstructionPlan{Regime::large_m, k, n, m, l, i, j, 0, 0};
  res.reason.clear();
  return res;
}

ConstructionPlan plan_small_m(long long m, long long n, int k) {
  PlanResult res = try_plan_small_m(m, n, k);
  if (!res.plan) {
    throw InfeasibleError("no small-regime plan " + fail_prefix(m, n, k) +
                          res.reason);
  }
  return *res.plan;
}

ConstructionPlan plan_large_m(long long m, long long n, int k) {
  PlanResult res = try_plan_large_m(m, n, k);
  if (!res.plan) {
    throw InfeasibleError("no large-regime plan " + fail_prefix(m, n, k) +
                          res.reason);
  }
  return *res.plan;
}

}  // namespace minconn
