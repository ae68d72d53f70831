#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "polarset/forms.hpp"

namespace polarset::verify {

using geom::Point;
using nlohmann::json;

// Outcome of a checked predicate, machine-readable.  Failures carry a
// witness: the first offending pair or the extension point, in a fixed
// deterministic order, so runs are reproducible bit for bit.
struct Report {
  std::string predicate;
  json params = json::object();
  std::string outcome;  // "pass" | "fail" | "precondition_failed"
  json witness;         // null unless the outcome has evidence to show
  json counts = json::object();
  std::uint64_t millis = 0;

  bool passed() const { return outcome == "pass"; }
  json to_json() const;
};

json point_json(const Point& p);

// No two members perpendicular; hermitian inputs must lie on the variety.
Report is_partial_ovoid(const forms::Form& f, const std::vector<Point>& pts);
// Partial ovoid with no admissible extension point on the variety.
Report is_maximal_partial_ovoid(const forms::Form& f,
                                const std::vector<Point>& pts);
// Every pair of members spans a secant line, so tangent and contained lines
// meet the set at most once.  Members may lie on or off the variety.
Report is_tangent_set(const forms::Form& f, const std::vector<Point>& pts);
// Tangent set that no point of the ambient space extends.
Report is_maximal_tangent_set(const forms::Form& f,
                              const std::vector<Point>& pts);

struct SearchOptions {
  // Stop as soon as a clique of this size is found (0 = run to optimality).
  std::uint32_t target = 0;
  // Abort with ResourceError after this many branch nodes (0 = unlimited).
  std::uint64_t node_guard = 0;
};

struct SearchResult {
  std::vector<Point> best;
  bool proven_optimal = false;
  std::uint64_t nodes = 0;
};

// Exact maximum partial ovoid by branch and bound over the
// non-perpendicularity graph (greedy-coloring bound).  Guarded against
// varieties with more than 5000 points.
SearchResult max_partial_ovoid_search(const forms::Form& f,
                                      const SearchOptions& opts = {});

}  // namespace polarset::verify
