#pragma once

#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "polarset/forms.hpp"
#include "polarset/geom.hpp"

namespace polarset::cubic {

using geom::Point;
using gf::Elem;
using gf::Field;

// Gram matrix of the alternating form x1 y4 + x2 y3 - x3 y2 - x4 y1.  The
// collineations below rescale it by a cube, so they act on its polar space.
geom::Mat w3_gram(const Field& F);
forms::Form w3_form(const Field& F);

// Parameter of an arc point: an affine field element or the infinite one.
struct Param {
  bool infinite = false;
  Elem t = 0;

  static Param at(Elem t) { return {false, t}; }
  static Param inf() { return {true, 0}; }
  friend bool operator==(const Param&, const Param&) = default;
};

// (1, -3t, t^2, t^3) for affine parameters, U4 for the infinite one.
Point arc_point(const Field& F, Param s);

struct TwistedCubic {
  const Field* field = nullptr;
  std::vector<Param> params;  // affine parameters ascending, infinity last
  std::vector<Point> points;  // aligned with params, normalized
};

// The (q+1)-arc of all arc points; UsageError when the characteristic is 3
// (the coordinate -3t and the /3 matrix entry both degenerate).
TwistedCubic build_cubic(const Field& F);

// Plane meeting the arc only at the parameter's point.
geom::Subspace osculating_plane(const Field& F, Param s);
// Tangent line at the parameter's point; lies in the osculating plane and is
// totally isotropic for the form.
geom::Subspace tangent_at(const Field& F, Param s);

// Projectivity stabilizing the arc, kept with its defining coefficients.
struct CubicCollineation {
  Elem a = 0, b = 0, c = 0, d = 0;
  geom::Mat m;
};

// DomainError when ad == bc; UsageError in characteristic 3.
CubicCollineation collineation(const Field& F, Elem a, Elem b, Elem c, Elem d);

// Class of the square root of q modulo 3, +1 or -1.  UsageError unless q is
// an odd square coprime to 3.
int eps_of(const Field& F);

// Subgroup fixing the sub-arc below, as projectively distinct collineations;
// order sqrt(q)(q-1).  For eps == +1 the coefficients run over the square
// root subfield; for eps == -1 over the whole field subject to
// a b^s = c d^s and a^(s+1) + b^(s+1) = c^(s+1) + d^(s+1), s = sqrt(q).
// UsageError when eps does not match eps_of(F).
std::vector<CubicCollineation> group_G(const Field& F, int eps);

// U1 + x U4 for the smallest admissible x: a non-cube outside the square
// root subfield, of norm != 1 over it when eps == -1.
Point find_base_point(const Field& F, int eps);

// Parameters of the arc points fixed by the subgroup as a set: the square
// root subfield plus infinity when eps == +1, the norm-one parameters when
// eps == -1.
std::vector<Param> sub_cubic_params(const Field& F, int eps);

// Subgeometry of the square root order holding the sub-arc: the canonical
// one when eps == +1, the unique one through five sub-arc points otherwise.
geom::BaerMap lambda_map(const Field& F, int eps);

// Orbit of the base point under group_G(F, eps); size sqrt(q)(q-1)/3
// enforced (InternalError on mismatch).
std::vector<Point> orbit_O(const Field& F, int eps);

// Orbit plus the full arc, pairwise non-perpendicularity re-verified;
// size (q sqrt(q) + 3q - sqrt(q) + 3)/3.
std::vector<Point> build_w3_partial_ovoid(const Field& F);

// A subgeometry point extending build_w3_partial_ovoid(F), found by direct
// pairwise search over lambda_map(F, eps_of(F)); InternalError when none
// exists.
Point extend_by_point(const Field& F);

// Lines meeting the arc: through two arc points (real chords), rational
// lines through a conjugate pair of extension points (imaginary chords), and
// tangents.  Together they cover each off-arc point exactly once.
enum class ChordClass : std::uint8_t { real_chord, imaginary_chord, tangent };

struct ChordAtlas {
  std::vector<geom::Subspace> real_chords;
  std::vector<geom::Subspace> imaginary_chords;
  std::vector<geom::Subspace> tangents;
  // Off-arc point -> the unique line covering it.
  std::unordered_map<Point, std::pair<ChordClass, std::uint32_t>,
                     geom::PointHash>
      cover;
};

// InternalError when the covering fails to be a partition.
ChordAtlas chord_atlas(const Field& F);

// Polar line of a chord under the form.
geom::Subspace axis_of(const Field& F, const geom::Subspace& chord);

}  // namespace polarset::cubic
