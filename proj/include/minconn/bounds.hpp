#pragma once

#include <optional>
#include <string>
#include <utility>

#include "minconn/rational.hpp"

namespace minconn {

// Exact ceiling division, b > 0.
long long ceil_div(long long a, long long b);

// Classic lower bound on the number of degree-k vertices in a minimally
// k-connected graph: ((k - 1) n + 2k) / (2k - 1). Requires k >= 1, n > k.
Rational mader_lower(long long n, int k);

// Refinement using the decomposition of the graph: with c_f components of
// the non-degree-k forest, ek edges among degree-k vertices and maximum
// degree delta, the count is at least
// ((k - 1) n + 2 (c_f + ek) + max(0, delta - (k + 1))) / (2k - 1).
Rational mader_generalized_lower(long long n, int k, long long c_f,
                                 long long ek, int delta);

// Edge-sensitive bound ceil((m - n + k) / (k - 1)). Requires k >= 2.
long long oxley_lower(long long m, long long n, int k);

// Degree-counting bound (k + 1) n - 2m.
long long simple_lower(long long m, long long n, int k);

// Crossover edge count m0 = k (k n - 1) / (2k - 1): below it the degree
// count bound dominates, above it the edge-sensitive bound does.
Rational threshold(long long n, int k);

// max(simple_lower, oxley_lower); the piecewise selection by threshold is
// cross-checked against the max at runtime. Requires k >= 2.
long long tight_lower(long long m, long long n, int k);

// Possible edge counts of minimally k-connected graphs on n vertices:
// ceil(k n / 2) <= m <= k n - k (k + 1) / 2. Requires n >= k + 1; the upper
// end is attained only by the complete graph on k + 1 vertices.
std::pair<long long, long long> edge_range(long long n, int k);

enum class ParityRegime { small_m, large_m, both, neither };

// Arithmetic feasibility of building a witness with the exact parameters
// (m, n, k). `i` is the parity residue of the applicable regime; `feasible`
// means the corresponding planner accepts (all derived constraints hold);
// `n_condition_met` tracks the n >= 3k - 2 hypothesis (vacuous unless the
// residue forces it), which gates the blanket tightness guarantee.
struct ParityClass {
  ParityRegime regime = ParityRegime::neither;
  std::optional<long long> i;
  bool feasible = false;
  std::string reason;
  bool n_condition_met = false;
};

// Requires k >= 2. Returns regime `neither` when n <= 2k or m is outside
// the edge range.
ParityClass classify_parity(long long m, long long n, int k);

struct BoundReport {
  int k = 0;
  long long n = 0;
  long long m = 0;
  Rational mader;
  long long oxley = 0;
  long long simple = 0;
  long long tight = 0;
  Rational threshold_m0;
  std::string regime;  // "below", "at" or "above" the threshold
  long long edge_min = 0;
  long long edge_max = 0;
  bool in_edge_range = false;
};

BoundReport bound_report(long long m, long long n, int k);

}  // namespace minconn
