#pragma once

#include <optional>
#include <string>

#include "minconn/bounds.hpp"

namespace minconn {

enum class Regime { small_m, large_m };

// Everything a builder needs to produce a minimally k-connected graph with
// exactly (n, m) and the minimum possible number of degree-k vertices.
//
// Small regime: start from k disjoint paths of length l - 1 glued into the
// standard scaffold, delete j degree-k vertices, then spend the residue i as
// i_t matchings rerouted at the t end and i_s at the s end.
// Large regime: same scaffold with j extra degree-k vertices attached, then
// i leaf edges of the first trees contracted.
struct ConstructionPlan {
  Regime regime = Regime::small_m;
  int k = 0;
  long long n = 0;
  long long m = 0;
  long long l = 0;
  long long i = 0;
  long long j = 0;
  long long i_t = 0;  // small regime only, i_t + i_s == i
  long long i_s = 0;
};

struct PlanResult {
  std::optional<ConstructionPlan> plan;
  std::string reason;  // set exactly when plan is empty
};

// Both require k >= 2 and succeed only for n > 2k, m inside the edge range
// and the regime's parity; every derived parameter constraint (l, i, j
// bounds) is checked, so a returned plan is always buildable.
PlanResult try_plan_small_m(long long m, long long n, int k);
PlanResult try_plan_large_m(long long m, long long n, int k);

// Throwing wrappers: InfeasibleError carrying the reason.
ConstructionPlan plan_small_m(long long m, long long n, int k);
ConstructionPlan plan_large_m(long long m, long long n, int k);

}  // namespace minconn
