#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace minconn {

// Precondition violations on graph mutations and queries.
class GraphError : public std::runtime_error {
public:
  enum class Kind {
    out_of_range,
    loop,
    duplicate_edge,
    missing_edge,
  };

  GraphError(Kind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  Kind kind() const { return kind_; }

private:
  Kind kind_;
};

// Malformed input in any of the supported file formats.
class ParseError : public std::runtime_error {
public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Requested parameters admit no construction (wrong parity, out of the edge
// range, search envelope exceeded, ...). May carry nearby edge counts that
// would have been feasible.
class InfeasibleError : public std::runtime_error {
public:
  explicit InfeasibleError(const std::string& what,
                           std::vector<long long> suggested_m = {})
      : std::runtime_error(what), suggested_m_(std::move(suggested_m)) {}

  const std::vector<long long>& suggested_m() const { return suggested_m_; }

private:
  std::vector<long long> suggested_m_;
};

// A built graph failed its mandatory post-verification, or an internal
// cross-check tripped. Always a bug, never an expected runtime condition.
class VerificationError : public std::runtime_error {
public:
  explicit VerificationError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace minconn
