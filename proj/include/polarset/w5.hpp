#pragma once

#include <cstdint>
#include <vector>

#include "polarset/forms.hpp"
#include "polarset/geom.hpp"
#include "polarset/verify.hpp"

namespace polarset::w5 {

using geom::Point;
using gf::Elem;
using gf::Field;

// ---- Subgeometry model over the cubic extension ----
//
// Vectors (a, a^q, a^q^2, b^q^2, b^q, b) with a, b in GF(q^3) form a
// six-dimensional GF(q)-space whose projective points, one canonical
// representative per base-scalar class, carry a symplectic polar space cut
// out by the alternating form below on the extension side.

// Gram of x1 y6 + x2 y5 + x3 y4 - x4 y3 - x5 y2 - x6 y1 over the extension.
geom::Mat orbit_gram(const Field& ext);
forms::Form orbit_form(const Field& ext);

// The extension field GF(q^3) of the given base field.
const Field& cubic_ext(const Field& base);

// Raw vector for the pair (a, b); coordinates over the extension.
Point pgv_point(const Field& base, const Field& ext, Elem a, Elem b);
// Representative with the encoding-least (a, b) over base-scalar rescaling.
Point pgv_canonical(const Field& base, const Field& ext, Elem a, Elem b);

struct PgvModel {
  const Field* base = nullptr;
  const Field* ext = nullptr;
  forms::Form form;
  std::vector<Point> points;             // canonical, ascending
  std::vector<std::pair<Elem, Elem>> pairs;  // canonical (a, b), aligned
};

// Full enumeration, (q^6-1)/(q-1) points; ResourceError above 2*10^5.
PgvModel make_pgv(const Field& base);

// Diagonal matrices diag(x, x^q, x^q^2, x^-q^2, x^-q, x^-1) over the
// norm-one x, listed as ascending powers of the generator; a cyclic group
// of order q^2+q+1 preserving the form exactly.
std::vector<geom::Mat> norm_one_group(const Field& base);

// Orbit of (1,...,1, c,...,c) under the group above: the canonical points
// with a = x, b = c/x over norm-one x.  Size q^2+q+1 and pairwise
// non-perpendicularity are enforced.  UsageError when c is 0 or out of
// range.
std::vector<Point> build_orbit_ovoid(const Field& base, Elem c);

// Brute-force maximality scan over the whole subgeometry model, reported
// with per-orbit blocking statistics under the cyclic group.
verify::Report verify_orbit_maximality(const Field& base, Elem c);

// ---- Base-field coordinate chart ----
//
// Writing a and b in the basis 1, w, w^2 of the extension (w its generator)
// turns the model into the symplectic space on GF(q)^6 of the Gram below.

// Blocks T and -T with T[j][m] = trace of w^(j+m) down to the base.
geom::Mat orbit_coords_gram(const Field& base);

// build_orbit_ovoid rewritten in chart coordinates; every pairwise
// evaluation is cross-checked against the extension-side form.
std::vector<Point> orbit_ovoid_coords(const Field& base, Elem c);

// ---- Even characteristic cone construction ----

// Gram of x1 y2 + x2 y1 + x3 y4 + x4 y3 + x5 y6 + x6 y5.
geom::Mat even_gram(const Field& F);
forms::Form even_form(const Field& F);

// Smallest element with absolute trace one, so X^2 + X + delta has no root.
// UsageError in odd characteristic.
Elem find_delta(const Field& F);

struct EvenW5Config {
  Elem delta1 = 0, delta2 = 0;
  geom::Subspace space1;          // X5 = X6 = 0
  geom::Subspace space2;          // X3 = X4 = 0
  geom::Subspace sigma;           // X4 = X5 = X6 = 0
  std::vector<Point> quadric1;    // x1 x2 + x3^2 + x3 x4 + delta1 x4^2 = 0
  std::vector<Point> quadric2;    // x1 x2 + x5^2 + x5 x6 + delta2 x6^2 = 0
  std::vector<Point> cone1;       // vertex U3, base quadric2
  std::vector<Point> cone2;       // vertex <U5,U6>, base quadric1 in sigma
  std::vector<Point> meet;        // cone1 and cone2 meet, q^2+1 points
};

// UsageError in odd characteristic.
EvenW5Config make_even_config(const Field& F);

// The meet glued with the first quadric off sigma; size 2q^2-q+1, verified
// to be a maximal partial ovoid by brute force.
std::vector<Point> build_even_w5(const Field& F);

}  // namespace polarset::w5
