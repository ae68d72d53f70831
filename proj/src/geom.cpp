#include "polarset/geom.hpp"

#include <algorithm>
#include <string>

namespace polarset::geom {

namespace {

constexpr std::uint64_t kEnumGuard = 10'000'000;

void check_dims(std::uint32_t n) {
  if (n == 0 || n > kMaxCoords) {
    throw DomainError("coordinate count " + std::to_string(n) +
                      " outside [1, " + std::to_string(kMaxCoords) + "]");
  }
}

}  // namespace

Point make_point(std::initializer_list<Elem> coords) {
  check_dims(static_cast<std::uint32_t>(coords.size()));
  Point p;
  p.n = static_cast<std::uint8_t>(coords.size());
  std::size_t i = 0;
  for (Elem e : coords) p.c[i++] = e;
  return p;
}

Point unit_point(std::uint32_t n, std::uint32_t i) {
  check_dims(n);
  if (i >= n) throw DomainError("unit index out of range");
  Point p;
  p.n = static_cast<std::uint8_t>(n);
  p.c[i] = 1;
  return p;
}

bool is_zero(const Point& p) {
  for (std::uint8_t i = 0; i < p.n; ++i) {
    if (p.c[i] != 0) return false;
  }
  return true;
}

Point normalize(const Field& F, const Point& p) {
  for (std::uint8_t i = 0; i < p.n; ++i) {
    if (p.c[i] == 0) continue;
    if (p.c[i] == 1) return p;
    Point out = p;
    const Elem s = F.inv(p.c[i]);
    for (std::uint8_t j = i; j < p.n; ++j) out.c[j] = F.mul(s, p.c[j]);
    return out;
  }
  throw DomainError("zero vector has no projective point");
}

std::uint64_t pg_size(std::uint32_t dim, std::uint64_t q) {
  std::uint64_t total = 0, power = 1;
  for (std::uint32_t i = 0; i <= dim; ++i) {
    total += power;
    power *= q;
  }
  return total;
}

std::vector<Point> all_points(std::uint32_t dim, const Field& F) {
  check_dims(dim + 1);
  const std::uint64_t count = pg_size(dim, F.q());
  if (count > kEnumGuard) {
    throw ResourceError("PG(" + std::to_string(dim) + ", " +
                        std::to_string(F.q()) + ") has " +
                        std::to_string(count) + " points, above the guard");
  }
  std::vector<Point> out;
  out.reserve(count);
  const std::uint32_t n = dim + 1;
  // Ascending coordinate-tuple order: later leading positions come first,
  // then the free tail counts up in base q (big-endian).
  for (std::uint32_t lead = n; lead-- > 0;) {
    const std::uint32_t tail = n - 1 - lead;
    std::uint64_t reps = 1;
    for (std::uint32_t i = 0; i < tail; ++i) reps *= F.q();
    for (std::uint64_t t = 0; t < reps; ++t) {
      Point p;
      p.n = static_cast<std::uint8_t>(n);
      p.c[lead] = 1;
      std::uint64_t v = t;
      for (std::uint32_t i = n; i-- > lead + 1;) {
        p.c[i] = static_cast<Elem>(v % F.q());
        v /= F.q();
      }
      out.push_back(p);
    }
  }
  return out;
}

// ---- matrices ----

Mat Mat::identity(std::uint32_t n) {
  check_dims(n);
  Mat m;
  m.n = static_cast<std::uint8_t>(n);
  for (std::uint32_t i = 0; i < n; ++i) m.a[i][i] = 1;
  return m;
}

Mat mat_mul(const Field& F, const Mat& A, const Mat& B) {
  if (A.n != B.n) throw DomainError("matrix size mismatch");
  Mat out;
  out.n = A.n;
  for (std::uint32_t i = 0; i < A.n; ++i) {
    for (std::uint32_t j = 0; j < A.n; ++j) {
      Elem s = 0;
      for (std::uint32_t t = 0; t < A.n; ++t) {
        s = F.add(s, F.mul(A.a[i][t], B.a[t][j]));
      }
      out.a[i][j] = s;
    }
  }
  return out;
}

Mat mat_transpose(const Mat& A) {
  Mat out;
  out.n = A.n;
  for (std::uint32_t i = 0; i < A.n; ++i) {
    for (std::uint32_t j = 0; j < A.n; ++j) out.a[i][j] = A.a[j][i];
  }
  return out;
}

Mat mat_inverse(const Field& F, const Mat& A) {
  const std::uint32_t n = A.n;
  Mat work = A;
  Mat inv = Mat::identity(n);
  for (std::uint32_t col = 0; col < n; ++col) {
    std::uint32_t piv = col;
    while (piv < n && work.a[piv][col] == 0) ++piv;
    if (piv == n) throw DomainError("matrix is singular");
    std::swap(work.a[piv], work.a[col]);
    std::swap(inv.a[piv], inv.a[col]);
    const Elem s = F.inv(work.a[col][col]);
    for (std::uint32_t j = 0; j < n; ++j) {
      work.a[col][j] = F.mul(s, work.a[col][j]);
      inv.a[col][j] = F.mul(s, inv.a[col][j]);
    }
    for (std::uint32_t i = 0; i < n; ++i) {
      if (i == col || work.a[i][col] == 0) continue;
      const Elem f = work.a[i][col];
      for (std::uint32_t j = 0; j < n; ++j) {
        work.a[i][j] = F.sub(work.a[i][j], F.mul(f, work.a[col][j]));
        inv.a[i][j] = F.sub(inv.a[i][j], F.mul(f, inv.a[col][j]));
      }
    }
  }
  return inv;
}

Point mat_apply(const Field& F, const Mat& M, const Point& p) {
  if (M.n != p.n) throw DomainError("matrix/point size mismatch");
  Point out;
  out.n = p.n;
  for (std::uint32_t i = 0; i < M.n; ++i) {
    Elem s = 0;
    for (std::uint32_t j = 0; j < M.n; ++j) {
      s = F.add(s, F.mul(M.a[i][j], p.c[j]));
    }
    out.c[i] = s;
  }
  return out;
}

// ---- subspaces ----

namespace {

// In-place RREF of rows[0..r) over n columns; returns the rank.
std::uint32_t rref(const Field& F,
                   std::array<std::array<Elem, kMaxCoords>, kMaxCoords>& rows,
                   std::uint32_t r, std::uint32_t n) {
  std::uint32_t rank = 0;
  for (std::uint32_t col = 0; col < n && rank < r; ++col) {
    std::uint32_t piv = rank;
    while (piv < r && rows[piv][col] == 0) ++piv;
    if (piv == r) continue;
    std::swap(rows[piv], rows[rank]);
    const Elem s = F.inv(rows[rank][col]);
    for (std::uint32_t j = col; j < n; ++j) rows[rank][j] = F.mul(s, rows[rank][j]);
    for (std::uint32_t i = 0; i < r; ++i) {
      if (i == rank || rows[i][col] == 0) continue;
      const Elem f = rows[i][col];
      for (std::uint32_t j = col; j < n; ++j) {
        rows[i][j] = F.sub(rows[i][j], F.mul(f, rows[rank][j]));
      }
    }
    ++rank;
  }
  for (std::uint32_t i = rank; i < r; ++i) rows[i].fill(0);
  return rank;
}

}  // namespace

Subspace span(const Field& F, std::span<const Point> pts) {
  if (pts.empty()) throw DomainError("span of an empty point list");
  Subspace s;
  s.n = pts[0].n;
  check_dims(s.n);
  std::uint32_t r = 0;
  for (const Point& p : pts) {
    if (p.n != s.n) throw DomainError("mixed coordinate counts in span");
    if (r == s.n) {
      // basis already full, further rows cannot raise the rank
      break;
    }
    for (std::uint32_t j = 0; j < s.n; ++j) s.row[r][j] = p.c[j];
    ++r;
    r = rref(F, s.row, r, s.n);
  }
  s.r = static_cast<std::uint8_t>(rref(F, s.row, r, s.n));
  return s;
}

Subspace line_through(const Field& F, const Point& p, const Point& q) {
  const Point pts[2] = {p, q};
  Subspace s = span(F, pts);
  if (s.r != 2) {
    throw UsageError("line_through needs two distinct points");
  }
  return s;
}

bool contains(const Field& F, const Subspace& s, const Point& p) {
  if (p.n != s.n) throw DomainError("subspace/point size mismatch");
  // reduce p against the RREF rows; containment iff it cancels to zero
  std::array<Elem, kMaxCoords> v{};
  for (std::uint32_t j = 0; j < s.n; ++j) v[j] = p.c[j];
  for (std::uint32_t i = 0; i < s.r; ++i) {
    std::uint32_t lead = 0;
    while (lead < s.n && s.row[i][lead] == 0) ++lead;
    if (lead == s.n || v[lead] == 0) continue;
    const Elem f = v[lead];
    for (std::uint32_t j = lead; j < s.n; ++j) {
      v[j] = F.sub(v[j], F.mul(f, s.row[i][j]));
    }
  }
  for (std::uint32_t j = 0; j < s.n; ++j) {
    if (v[j] != 0) return false;
  }
  return true;
}

std::vector<Point> points_on(const Field& F, const Subspace& s) {
  if (s.r == 0) return {};
  const auto coeffs = all_points(s.r - 1, F);
  std::vector<Point> out;
  out.reserve(coeffs.size());
  for (const Point& lam : coeffs) {
    Point p;
    p.n = s.n;
    for (std::uint32_t j = 0; j < s.n; ++j) {
      Elem acc = 0;
      for (std::uint32_t i = 0; i < s.r; ++i) {
        acc = F.add(acc, F.mul(lam.c[i], s.row[i][j]));
      }
      p.c[j] = acc;
    }
    out.push_back(normalize(F, p));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Point> equations(const Field& F, const Subspace& s) {
  // free-variable construction of the null space of the r x n row matrix
  std::array<std::uint32_t, kMaxCoords> pivot_col{};
  std::array<bool, kMaxCoords> is_pivot{};
  for (std::uint32_t i = 0; i < s.r; ++i) {
    std::uint32_t lead = 0;
    while (lead < s.n && s.row[i][lead] == 0) ++lead;
    pivot_col[i] = lead;
    is_pivot[lead] = true;
  }
  std::vector<Point> out;
  for (std::uint32_t free = 0; free < s.n; ++free) {
    if (is_pivot[free]) continue;
    Point f;
    f.n = s.n;
    f.c[free] = 1;
    for (std::uint32_t i = 0; i < s.r; ++i) {
      f.c[pivot_col[i]] = F.neg(s.row[i][free]);
    }
    out.push_back(f);
  }
  if (out.empty()) return out;
  // canonicalize so equations() output is deterministic under row changes
  Subspace dual = span(F, out);
  out.clear();
  for (std::uint32_t i = 0; i < dual.r; ++i) {
    Point f;
    f.n = s.n;
    for (std::uint32_t j = 0; j < s.n; ++j) f.c[j] = dual.row[i][j];
    out.push_back(f);
  }
  return out;
}

Subspace from_equations(const Field& F, std::uint32_t n,
                        std::span<const Point> funcs) {
  check_dims(n);
  Subspace dual;
  dual.n = static_cast<std::uint8_t>(n);
  dual.r = 0;
  if (!funcs.empty()) {
    for (const Point& f : funcs) {
      if (f.n != n) throw DomainError("functional has wrong coordinate count");
    }
    dual = span(F, funcs);
  }
  // the solution space is the null space of the functional matrix
  const std::vector<Point> basis = equations(F, dual);
  if (basis.empty()) {
    Subspace empty;
    empty.n = static_cast<std::uint8_t>(n);
    return empty;
  }
  return span(F, basis);
}

Subspace intersect(const Field& F, const Subspace& a, const Subspace& b) {
  if (a.n != b.n) throw DomainError("ambient spaces differ");
  std::vector<Point> funcs = equations(F, a);
  const std::vector<Point> fb = equations(F, b);
  funcs.insert(funcs.end(), fb.begin(), fb.end());
  return from_equations(F, a.n, funcs);
}

// ---- subgeometries ----

BaerMap baer_from_matrix(const Field& sub, const Field& sup, const Mat& m) {
  if (!sup.has_subfield(sub) || &sub == &sup) {
    throw DomainError("not a proper subfield pair");
  }
  BaerMap bm;
  bm.sub = &sub;
  bm.sup = &sup;
  bm.m = m;
  bm.m_inv = mat_inverse(sup, m);
  return bm;
}

BaerMap baer_from_frame(const Field& sub, const Field& sup,
                        std::span<const Point> frame) {
  if (frame.empty()) throw UsageError("empty frame");
  const std::uint32_t n = frame[0].n;
  check_dims(n);
  if (frame.size() != n + 1) {
    throw UsageError("frame of PG(" + std::to_string(n - 1) + ") needs " +
                     std::to_string(n + 1) + " points");
  }
  for (const Point& p : frame) {
    if (p.n != n) throw UsageError("mixed coordinate counts in frame");
  }
  // general position: dropping any one point leaves an independent n-set
  for (std::uint32_t skip = 0; skip <= n; ++skip) {
    std::vector<Point> rest;
    for (std::uint32_t i = 0; i <= n; ++i) {
      if (i != skip) rest.push_back(frame[i]);
    }
    if (span(sup, rest).r != n) {
      std::string idx;
      for (std::uint32_t i = 0; i <= n; ++i) {
        if (i != skip) idx += (idx.empty() ? "" : ",") + std::to_string(i);
      }
      throw UsageError("frame points {" + idx + "} are dependent");
    }
  }
  // solve sum_i lambda_i f_i = f_n; columns of the unknown matrix are
  // lambda_i f_i
  Mat sys;
  sys.n = static_cast<std::uint8_t>(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = 0; j < n; ++j) sys.a[i][j] = frame[j].c[i];
  }
  const Mat sys_inv = mat_inverse(sup, sys);
  Point lambda = mat_apply(sup, sys_inv, frame[n]);
  Mat m;
  m.n = static_cast<std::uint8_t>(n);
  for (std::uint32_t j = 0; j < n; ++j) {
    if (lambda.c[j] == 0) {
      throw InternalError("frame solve produced a zero coefficient");
    }
    for (std::uint32_t i = 0; i < n; ++i) {
      m.a[i][j] = sup.mul(lambda.c[j], frame[j].c[i]);
    }
  }
  return baer_from_matrix(sub, sup, m);
}

Point baer_apply(const BaerMap& bm, const Point& p_sub) {
  Point up;
  up.n = p_sub.n;
  for (std::uint32_t i = 0; i < p_sub.n; ++i) {
    up.c[i] = bm.sup->embed_from(*bm.sub, p_sub.c[i]);
  }
  return normalize(*bm.sup, mat_apply(*bm.sup, bm.m, up));
}

std::vector<Point> baer_image(const BaerMap& bm) {
  const std::uint32_t n = bm.m.n;
  std::vector<Point> out;
  for (const Point& p : all_points(n - 1, *bm.sub)) {
    out.push_back(baer_apply(bm, p));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Point baer_involution(const BaerMap& bm, const Point& p_sup) {
  if (bm.sup->k() != 2 * bm.sub->k()) {
    throw DomainError("involution needs an index-2 subfield");
  }
  Point y = mat_apply(*bm.sup, bm.m_inv, p_sup);
  for (std::uint32_t i = 0; i < y.n; ++i) {
    y.c[i] = bm.sup->frobenius(y.c[i], bm.sub->k());
  }
  return normalize(*bm.sup, mat_apply(*bm.sup, bm.m, y));
}

}  // namespace polarset::geom
