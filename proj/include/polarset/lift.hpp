#pragma once

#include <cstdint>
#include <vector>

#include "polarset/forms.hpp"
#include "polarset/geom.hpp"
#include "polarset/pencil.hpp"
#include "polarset/verify.hpp"

namespace polarset::lift {

using geom::Point;
using gf::Elem;
using gf::Field;

// ---- Cone lift into one more dimension ----
//
// The Hermitian space on 2n+1 coordinates whose Gram extends the first
// pencil member by a single diagonal entry.  The last unit point P is not
// absolute, its perp is the hyperplane X_2n+1 = 0, and the variety meets
// that hyperplane exactly in the embedded copy of the smaller one.  Joining
// P to a tangent set and collecting absolute points yields a partial ovoid:
// lines from P to points on the variety are tangent, all others secant.

struct LiftFrame {
  const pencil::PencilConfig* cfg = nullptr;
  forms::Form form;     // hermitian on 2n+1 coordinates
  Point apex;           // P, the last unit point
  geom::Subspace perp;  // P^perp: X_2n+1 = 0
};

// g is a nonzero base-field encoding for the new diagonal entry; any choice
// keeps the apex off the variety.
LiftFrame make_frame(const pencil::PencilConfig& cfg, Elem g = 1);

struct ConeLift {
  std::uint32_t on_h = 0;   // source points on the variety, lifted in place
  std::uint32_t off_h = 0;  // source points off it, one secant line each
  std::vector<Point> points;  // the union, sorted
  verify::Report ovoid_report;
  // Filled only when the source tangent set was verified maximal.
  verify::Report maximal_report;
};

// Lifts a raw tangent set living in the hyperplane coordinates.  The
// tangent-set property is re-checked first (UsageError on failure); pass
// source_maximal to also demand maximality of the lift.  Each secant line
// is required to carry exactly q+1 absolute points.
ConeLift cone_lift_points(const LiftFrame& frame, const std::vector<Point>& t,
                          bool source_maximal = false);

// Lift of an assembled tangent set, reusing its carried reports instead of
// re-scanning (UsageError when they do not pass).  The size laws
// |lift| = (q+1)|T off H| + |T on H| and qx + y -> q^2 x + y are enforced.
ConeLift cone_lift(const LiftFrame& frame, const pencil::TangentSet& t);

// x q^2 + y, the size a lifted tangent set of trace (x, y) must have.
std::uint64_t size_law(std::uint64_t x, std::uint64_t y, std::uint64_t q);

}  // namespace polarset::lift
