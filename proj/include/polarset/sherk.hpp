#pragma once

#include <cstdint>
#include <vector>

#include "polarset/gf.hpp"
#include "polarset/verify.hpp"

namespace polarset::sherk {

using gf::Elem;
using gf::Field;

// Hypersurface of PG(1, q^3) cut out by
//   alpha N(x) + T(beta^(q^2) x^(q+1)) + T(gamma x) + delta = 0
// with alpha, delta over the base field, beta, gamma over the cubic
// extension, and infinity a member exactly when alpha vanishes.  The value
// is linear over the base field in the coefficient tuple, which is what
// makes pencils work.
struct Surface {
  const Field* base = nullptr;
  const Field* ext = nullptr;
  Elem alpha = 0;
  Elem beta = 0;
  Elem gamma = 0;
  Elem delta = 0;
};

// UsageError on the zero tuple or out-of-range coefficients.
Surface make_surface(const Field& base, Elem alpha, Elem beta, Elem gamma,
                     Elem delta);

// Point codes: a finite point is its extension encoding, infinity is one
// past the last encoding.
std::uint32_t inf_code(const Surface& S);

// Left side of the defining equation at a finite point; always lands in the
// embedded base field.
Elem surface_value(const Surface& S, Elem x);

// Sorted point codes, finite points first.
std::vector<std::uint32_t> sherk_points(const Surface& S);

// Equal coefficient tuples up to a base-field scalar.
bool proportional(const Surface& a, const Surface& b);

struct Pencil {
  std::vector<Surface> members;           // the q+1 combinations
  std::vector<std::uint32_t> base_locus;  // intersection of all members
};

// Spans the line of surfaces through two generators; UsageError when they
// are proportional.  Joint coverage of the projective line is enforced.
Pencil make_pencil(const Surface& a, const Surface& b);

// Exhaustive scan over coefficient pairs (beta, gamma) != (0, 0): whenever
// beta gamma = 0, or N(beta) is no nonzero cube of the base field, or
// N(beta) = c^3 with gamma beta != -c^2 for some nonzero c, the pencil
// spanned by the norm surface S(1,0,0,-1) and the trace surface
// S(0,beta,gamma,0) must have a nonempty base locus.  UsageError for q > 4.
verify::Report lemma_sherk_scan(const Field& base);

}  // namespace polarset::sherk
