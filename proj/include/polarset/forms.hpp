#pragma once

#include <cstdint>
#include <vector>

#include "polarset/geom.hpp"

namespace polarset::forms {

using geom::Point;
using gf::Elem;
using gf::Field;

enum class FormKind { symplectic, hermitian };

// Non-degenerate reflexive sesquilinear form on F^n.  Symplectic forms need an
// alternating Gram matrix; hermitian forms live over a field of square order
// and need conj-transpose(gram) == gram, where conj is x -> x^sqrt(q).
struct Form {
  FormKind kind = FormKind::symplectic;
  const Field* field = nullptr;
  // Fixed field of the conjugation for hermitian forms; equals field for
  // symplectic ones.
  const Field* base = nullptr;
  std::uint32_t conj_exp = 0;  // frobenius power applied to the right slot
  geom::Mat gram;
};

Form symplectic_form(const Field& F, const geom::Mat& gram);
Form hermitian_form(const Field& F, const geom::Mat& gram);

Elem conj(const Form& f, Elem a);
// P^T gram conj(Q)
Elem eval(const Form& f, const Point& p, const Point& q);
bool is_absolute(const Form& f, const Point& p);
// All absolute points, ascending; the polar space's point set.
std::vector<Point> absolute_points(const Form& f);

// Number of points of the hermitian polar space in PG(dim, q_base^2).
std::uint64_t hermitian_point_count(std::uint32_t dim, std::uint64_t q_base);

enum class LineType { tangent, secant, generator };

// Classification of the line through two distinct points by the rank of the
// restricted form: rank 2 secant, rank 1 tangent, rank 0 generator (the line
// lies in the polar space).  Symplectic lines are never tangent.
LineType line_type(const Form& f, const Point& p, const Point& q);

// Polar hyperplane {x : eval(x, p) == 0}.
geom::Subspace perp(const Form& f, const Point& p);

// Common witt index of the maximal totally isotropic subspaces, computed by
// greedy extension (no dead ends exist in a polar space).
std::uint32_t witt_index(const Form& f);

// Form induced on a subgeometry lying inside the hermitian variety: the
// pulled-back Gram is a base-field scalar times an alternating base-field
// matrix.  DomainError when the subgeometry is not inside the variety.
struct BaerRestriction {
  Form sub_form;
  Elem scale;  // pullback satisfies eval_H = embed(eval_sub) * scale
};
BaerRestriction restrict_to_baer(const Form& f, const geom::BaerMap& bm);

}  // namespace polarset::forms
