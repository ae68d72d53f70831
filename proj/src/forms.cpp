#include "polarset/forms.hpp"

#include <string>

namespace polarset::forms {

namespace {

void check_nondegenerate(const Field& F, const geom::Mat& gram) {
  try {
    geom::mat_inverse(F, gram);
  } catch (const DomainError&) {
    throw DomainError("degenerate form");
  }
}

}  // namespace

Form symplectic_form(const Field& F, const geom::Mat& gram) {
  const std::uint32_t n = gram.n;
  for (std::uint32_t i = 0; i < n; ++i) {
    if (gram.a[i][i] != 0) throw DomainError("symplectic gram has nonzero diagonal");
    for (std::uint32_t j = 0; j < n; ++j) {
      if (gram.a[j][i] != F.neg(gram.a[i][j])) {
        throw DomainError("symplectic gram is not alternating");
      }
    }
  }
  check_nondegenerate(F, gram);
  Form f;
  f.kind = FormKind::symplectic;
  f.field = &F;
  f.base = &F;
  f.conj_exp = 0;
  f.gram = gram;
  return f;
}

Form hermitian_form(const Field& F, const geom::Mat& gram) {
  if (F.k() % 2 != 0) {
    throw DomainError("hermitian form needs a field of square order");
  }
  const std::uint32_t half = F.k() / 2;
  const std::uint32_t n = gram.n;
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = 0; j < n; ++j) {
      if (F.frobenius(gram.a[j][i], half) != gram.a[i][j]) {
        throw DomainError("gram is not conjugate-symmetric");
      }
    }
  }
  check_nondegenerate(F, gram);
  Form f;
  f.kind = FormKind::hermitian;
  f.field = &F;
  f.base = &Field::get(F.p(), half);
  f.conj_exp = half;
  f.gram = gram;
  return f;
}

Elem conj(const Form& f, Elem a) {
  return f.conj_exp == 0 ? a : f.field->frobenius(a, f.conj_exp);
}

Elem eval(const Form& f, const Point& p, const Point& q) {
  const Field& F = *f.field;
  if (p.n != f.gram.n || q.n != f.gram.n) {
    throw DomainError("point size does not match the form");
  }
  Elem acc = 0;
  for (std::uint32_t j = 0; j < f.gram.n; ++j) {
    if (q.c[j] == 0) continue;
    const Elem qc = conj(f, q.c[j]);
    Elem col = 0;
    for (std::uint32_t i = 0; i < f.gram.n; ++i) {
      col = F.add(col, F.mul(p.c[i], f.gram.a[i][j]));
    }
    acc = F.add(acc, F.mul(col, qc));
  }
  return acc;
}

bool is_absolute(const Form& f, const Point& p) { return eval(f, p, p) == 0; }

std::vector<Point> absolute_points(const Form& f) {
  std::vector<Point> out;
  for (const Point& p : geom::all_points(f.gram.n - 1, *f.field)) {
    if (is_absolute(f, p)) out.push_back(p);
  }
  return out;
}

std::uint64_t hermitian_point_count(std::uint32_t dim, std::uint64_t q_base) {
  // (q^(d+1) + (-1)^d)(q^d - (-1)^d) / (q^2 - 1), with the division split so
  // every intermediate stays integral
  std::uint64_t qd = 1;
  for (std::uint32_t i = 0; i < dim; ++i) qd *= q_base;
  const std::uint64_t qd1 = qd * q_base;
  if (dim % 2 == 0) {
    return (qd1 + 1) / (q_base + 1) * ((qd - 1) / (q_base - 1));
  }
  return (qd1 - 1) / (q_base * q_base - 1) * (qd + 1);
}

LineType line_type(const Form& f, const Point& p, const Point& q) {
  const Field& F = *f.field;
  const Point pn = geom::normalize(F, p);
  const Point qn = geom::normalize(F, q);
  if (pn == qn) throw UsageError("line_type needs two distinct points");
  const Elem a = eval(f, p, p);
  const Elem b = eval(f, p, q);
  const Elem c = eval(f, q, q);
  const Elem det = F.sub(F.mul(a, c), F.mul(b, conj(f, b)));
  if (det != 0) return LineType::secant;
  if (a != 0 || b != 0 || c != 0) return LineType::tangent;
  return LineType::generator;
}

geom::Subspace perp(const Form& f, const Point& p) {
  const Field& F = *f.field;
  Point func;
  func.n = p.n;
  for (std::uint32_t i = 0; i < f.gram.n; ++i) {
    Elem acc = 0;
    for (std::uint32_t j = 0; j < f.gram.n; ++j) {
      acc = F.add(acc, F.mul(f.gram.a[i][j], conj(f, p.c[j])));
    }
    func.c[i] = acc;
  }
  if (geom::is_zero(func)) throw InternalError("perp of a point vanished");
  const Point funcs[1] = {func};
  return geom::from_equations(F, p.n, funcs);
}

std::uint32_t witt_index(const Form& f) {
  const Field& F = *f.field;
  const auto pts = geom::all_points(f.gram.n - 1, F);
  std::vector<Point> basis;
  for (;;) {
    bool grew = false;
    for (const Point& p : pts) {
      if (!is_absolute(f, p)) continue;
      bool ortho = true;
      for (const Point& b : basis) {
        if (eval(f, p, b) != 0) {
          ortho = false;
          break;
        }
      }
      if (!ortho) continue;
      if (!basis.empty() && geom::contains(F, geom::span(F, basis), p)) continue;
      basis.push_back(p);
      grew = true;
      break;
    }
    if (!grew) break;
    if (basis.size() == f.gram.n / 2) break;  // cannot exceed half the rank
  }
  return static_cast<std::uint32_t>(basis.size());
}

BaerRestriction restrict_to_baer(const Form& f, const geom::BaerMap& bm) {
  if (f.kind != FormKind::hermitian) {
    throw DomainError("restriction starts from a hermitian form");
  }
  if (bm.sup != f.field || bm.sub != f.base) {
    throw DomainError("subgeometry fields do not match the form");
  }
  const Field& F = *f.field;
  const std::uint32_t n = f.gram.n;
  if (bm.m.n != n) throw DomainError("subgeometry dimension mismatch");

  geom::Mat conj_m;
  conj_m.n = bm.m.n;
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = 0; j < n; ++j) {
      conj_m.a[i][j] = conj(f, bm.m.a[i][j]);
    }
  }
  const geom::Mat pulled =
      geom::mat_mul(F, geom::mat_transpose(bm.m), geom::mat_mul(F, f.gram, conj_m));

  Elem scale = 0;
  for (std::uint32_t i = 0; i < n && scale == 0; ++i) {
    for (std::uint32_t j = 0; j < n && scale == 0; ++j) scale = pulled.a[i][j];
  }
  if (scale == 0) throw DomainError("pulled-back form vanishes");

  const Elem inv_scale = F.inv(scale);
  geom::Mat down;
  down.n = pulled.n;
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = 0; j < n; ++j) {
      const Elem v = F.mul(inv_scale, pulled.a[i][j]);
      if (!F.in_subfield(*f.base, v)) {
        throw DomainError(
            "subgeometry does not sit inside the variety: pulled-back gram is "
            "not proportional to a base-field matrix");
      }
      down.a[i][j] = F.project_to(*f.base, v);
    }
  }
  BaerRestriction out;
  // symplectic_form rejects a non-alternating gram, which is exactly the
  // case of a subgeometry meeting the variety in a quadric section instead
  // of being contained in it
  out.sub_form = symplectic_form(*f.base, down);
  out.scale = scale;
  return out;
}

}  // namespace polarset::forms
