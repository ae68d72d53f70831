#include "polarset/cubic.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <string>

#include "polarset/common.hpp"

namespace polarset::cubic {

namespace {

Elem sq(const Field& F, Elem a) { return F.mul(a, a); }
Elem cube(const Field& F, Elem a) { return F.mul(a, sq(F, a)); }

void require_char_not_3(const Field& F) {
  if (F.p() == 3) {
    throw UsageError("the arc needs a characteristic other than 3");
  }
}

void require_odd_square(const Field& F) {
  require_char_not_3(F);
  if (F.p() == 2 || F.k() % 2 != 0) {
    throw UsageError("the subgroup needs an odd square field order");
  }
}

std::uint64_t sqrt_q(const Field& F) {
  std::uint64_t s = 1;
  for (std::uint32_t i = 0; i < F.k() / 2; ++i) s *= F.p();
  return s;
}

const Field& sqrt_field(const Field& F) {
  return Field::get(F.p(), F.k() / 2);
}

// Projective fingerprint: the matrix scaled so its first nonzero entry is 1.
std::array<Elem, 16> mat_key(const Field& F, const geom::Mat& m) {
  std::array<Elem, 16> key{};
  Elem scale = 0;
  for (std::uint32_t i = 0; i < 4; ++i) {
    for (std::uint32_t j = 0; j < 4; ++j) {
      if (scale == 0 && m.a[i][j] != 0) scale = F.inv(m.a[i][j]);
      key[4 * i + j] = scale == 0 ? 0 : F.mul(m.a[i][j], scale);
    }
  }
  return key;
}

}  // namespace

geom::Mat w3_gram(const Field& F) {
  geom::Mat j;
  j.n = 4;
  j.a[0][3] = F.one();
  j.a[1][2] = F.one();
  j.a[2][1] = F.neg(F.one());
  j.a[3][0] = F.neg(F.one());
  return j;
}

forms::Form w3_form(const Field& F) {
  return forms::symplectic_form(F, w3_gram(F));
}

Point arc_point(const Field& F, Param s) {
  if (s.infinite) return geom::unit_point(4, 3);
  const Elem t = s.t;
  return geom::make_point(
      {F.one(), F.neg(F.mul(F.from_int(3), t)), sq(F, t), cube(F, t)});
}

TwistedCubic build_cubic(const Field& F) {
  require_char_not_3(F);
  TwistedCubic tc;
  tc.field = &F;
  for (Elem t = 0; t < F.q(); ++t) tc.params.push_back(Param::at(t));
  tc.params.push_back(Param::inf());
  std::set<Point> seen;
  for (const Param& s : tc.params) {
    const Point p = arc_point(F, s);
    if (!seen.insert(p).second) {
      throw InternalError("arc points collide");
    }
    tc.points.push_back(p);
  }
  return tc;
}

geom::Subspace osculating_plane(const Field& F, Param s) {
  Point func;
  if (s.infinite) {
    func = geom::unit_point(4, 0);
  } else {
    const Elem t = s.t;
    func = geom::make_point({cube(F, t), sq(F, t), F.mul(F.from_int(3), t),
                             F.neg(F.one())});
  }
  return geom::from_equations(F, 4, std::span<const Point>(&func, 1));
}

geom::Subspace tangent_at(const Field& F, Param s) {
  if (s.infinite) {
    return geom::line_through(F, geom::unit_point(4, 3),
                              geom::unit_point(4, 2));
  }
  const Elem t = s.t;
  const Point dir =
      geom::make_point({F.zero(), F.neg(F.from_int(3)),
                        F.mul(F.from_int(2), t),
                        F.mul(F.from_int(3), sq(F, t))});
  return geom::line_through(F, arc_point(F, s), dir);
}

CubicCollineation collineation(const Field& F, Elem a, Elem b, Elem c,
                               Elem d) {
  require_char_not_3(F);
  if (F.sub(F.mul(a, d), F.mul(b, c)) == 0) {
    throw DomainError("collineation needs ad - bc != 0");
  }
  const Elem two = F.from_int(2);
  const Elem three = F.from_int(3);
  const Elem six = F.from_int(6);
  CubicCollineation g{a, b, c, d, {}};
  geom::Mat& m = g.m;
  m.n = 4;
  m.a[0][0] = cube(F, a);
  m.a[0][1] = F.neg(F.mul(sq(F, a), b));
  m.a[0][2] = F.mul(three, F.mul(a, sq(F, b)));
  m.a[0][3] = cube(F, b);
  m.a[1][0] = F.neg(F.mul(three, F.mul(sq(F, a), c)));
  m.a[1][1] = F.add(F.mul(sq(F, a), d), F.mul(two, F.mul(a, F.mul(b, c))));
  m.a[1][2] = F.sub(F.neg(F.mul(three, F.mul(sq(F, b), c))),
                    F.mul(six, F.mul(a, F.mul(b, d))));
  m.a[1][3] = F.neg(F.mul(three, F.mul(sq(F, b), d)));
  m.a[2][0] = F.mul(a, sq(F, c));
  m.a[2][1] = F.div(F.sub(F.neg(F.mul(b, sq(F, c))),
                          F.mul(two, F.mul(a, F.mul(c, d)))),
                    three);
  m.a[2][2] = F.add(F.mul(a, sq(F, d)), F.mul(two, F.mul(b, F.mul(c, d))));
  m.a[2][3] = F.mul(b, sq(F, d));
  m.a[3][0] = cube(F, c);
  m.a[3][1] = F.neg(F.mul(sq(F, c), d));
  m.a[3][2] = F.mul(three, F.mul(c, sq(F, d)));
  m.a[3][3] = cube(F, d);
  return g;
}

int eps_of(const Field& F) {
  require_odd_square(F);
  return sqrt_q(F) % 3 == 1 ? 1 : -1;
}

static void require_eps(const Field& F, int eps) {
  if (eps != 1 && eps != -1) {
    throw UsageError("the subgroup class must be +1 or -1");
  }
  if (eps_of(F) != eps) {
    throw UsageError("the subgroup class does not match sqrt(q) mod 3");
  }
}

std::vector<CubicCollineation> group_G(const Field& F, int eps) {
  require_eps(F, eps);
  std::vector<CubicCollineation> out;
  std::set<std::array<Elem, 16>> seen;
  auto push = [&](Elem a, Elem b, Elem c, Elem d) {
    if (F.sub(F.mul(a, d), F.mul(b, c)) == 0) return;
    CubicCollineation g = collineation(F, a, b, c, d);
    if (seen.insert(mat_key(F, g.m)).second) out.push_back(std::move(g));
  };
  if (eps == 1) {
    const Field& sub = sqrt_field(F);
    std::vector<Elem> coeffs;
    for (Elem e = 0; e < sub.q(); ++e) coeffs.push_back(F.embed_from(sub, e));
    for (Elem a : coeffs) {
      for (Elem b : coeffs) {
        for (Elem c : coeffs) {
          for (Elem d : coeffs) push(a, b, c, d);
        }
      }
    }
  } else {
    const std::uint32_t half = F.k() / 2;
    std::vector<Elem> frob(F.q()), norm(F.q());
    for (Elem e = 0; e < F.q(); ++e) {
      frob[e] = F.frobenius(e, half);
      norm[e] = F.mul(e, frob[e]);
    }
    for (Elem a = 0; a < F.q(); ++a) {
      for (Elem b = 0; b < F.q(); ++b) {
        const Elem ab = F.mul(a, frob[b]);
        const Elem nab = F.add(norm[a], norm[b]);
        for (Elem c = 0; c < F.q(); ++c) {
          for (Elem d = 0; d < F.q(); ++d) {
            if (ab != F.mul(c, frob[d])) continue;
            if (nab != F.add(norm[c], norm[d])) continue;
            push(a, b, c, d);
          }
        }
      }
    }
  }
  const std::uint64_t want = sqrt_q(F) * (F.q() - 1);
  if (out.size() != want) {
    throw InternalError("subgroup has " + std::to_string(out.size()) +
                        " elements, expected " + std::to_string(want));
  }
  return out;
}

Point find_base_point(const Field& F, int eps) {
  require_eps(F, eps);
  const Field& sub = sqrt_field(F);
  for (Elem x = 1; x < F.q(); ++x) {
    if (F.in_subfield(sub, x)) continue;
    if (F.is_cube(x)) continue;
    if (eps == -1 && F.rel_norm(sub, x) == F.one()) continue;
    return geom::make_point({F.one(), F.zero(), F.zero(), x});
  }
  throw InternalError("no admissible coordinate for the base point");
}

std::vector<Param> sub_cubic_params(const Field& F, int eps) {
  require_eps(F, eps);
  const Field& sub = sqrt_field(F);
  std::vector<Param> params;
  if (eps == 1) {
    for (Elem e = 0; e < sub.q(); ++e) {
      params.push_back(Param::at(F.embed_from(sub, e)));
    }
    params.push_back(Param::inf());
  } else {
    for (Elem t = 1; t < F.q(); ++t) {
      if (F.rel_norm(sub, t) == F.one()) params.push_back(Param::at(t));
    }
  }
  if (params.size() != sqrt_q(F) + 1) {
    throw InternalError("sub-arc parameter count is off");
  }
  return params;
}

geom::BaerMap lambda_map(const Field& F, int eps) {
  require_eps(F, eps);
  const Field& sub = sqrt_field(F);
  if (eps == 1) {
    return geom::baer_from_matrix(sub, F, geom::Mat::identity(4));
  }
  // Any five arc points are a frame, and a frame lies in a unique
  // subgeometry of square root order.
  const auto params = sub_cubic_params(F, eps);
  std::vector<Point> frame;
  for (std::size_t i = 0; i < 5; ++i) frame.push_back(arc_point(F, params[i]));
  return geom::baer_from_frame(sub, F, frame);
}

std::vector<Point> orbit_O(const Field& F, int eps) {
  const auto group = group_G(F, eps);
  const Point base = find_base_point(F, eps);
  std::set<Point> orbit;
  for (const CubicCollineation& g : group) {
    orbit.insert(geom::normalize(F, geom::mat_apply(F, g.m, base)));
  }
  const std::uint64_t want = sqrt_q(F) * (F.q() - 1) / 3;
  if (orbit.size() != want) {
    throw InternalError("orbit has " + std::to_string(orbit.size()) +
                        " points, expected " + std::to_string(want));
  }
  return {orbit.begin(), orbit.end()};
}

std::vector<Point> build_w3_partial_ovoid(const Field& F) {
  const int eps = eps_of(F);
  const auto orbit = orbit_O(F, eps);
  const auto tc = build_cubic(F);
  std::set<Point> all(orbit.begin(), orbit.end());
  all.insert(tc.points.begin(), tc.points.end());
  const std::uint64_t s = sqrt_q(F);
  const std::uint64_t want = (F.q() * s + 3 * F.q() - s + 3) / 3;
  if (all.size() != want) {
    throw InternalError("assembled set has " + std::to_string(all.size()) +
                        " points, expected " + std::to_string(want));
  }
  std::vector<Point> pts(all.begin(), all.end());
  const forms::Form f = w3_form(F);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      if (forms::eval(f, pts[i], pts[j]) == 0) {
        throw InternalError("assembled set has a perpendicular pair");
      }
    }
  }
  return pts;
}

Point extend_by_point(const Field& F) {
  const int eps = eps_of(F);
  const auto ovoid = build_w3_partial_ovoid(F);
  geom::PointSet members(ovoid.begin(), ovoid.end());
  const forms::Form f = w3_form(F);
  for (const Point& cand : geom::baer_image(lambda_map(F, eps))) {
    if (members.count(cand) != 0) continue;
    bool clear = true;
    for (const Point& p : ovoid) {
      if (forms::eval(f, cand, p) == 0) {
        clear = false;
        break;
      }
    }
    if (clear) return cand;
  }
  throw InternalError("no extension point exists in the subgeometry");
}

ChordAtlas chord_atlas(const Field& F) {
  const auto tc = build_cubic(F);
  ChordAtlas atlas;
  for (std::size_t i = 0; i < tc.points.size(); ++i) {
    for (std::size_t j = i + 1; j < tc.points.size(); ++j) {
      atlas.real_chords.push_back(
          geom::line_through(F, tc.points[i], tc.points[j]));
    }
  }
  for (const Param& s : tc.params) {
    atlas.tangents.push_back(tangent_at(F, s));
  }
  // A conjugate pair of extension arc points spans a line fixed by the
  // extension Frobenius, so two fixed vectors of the span are rational.
  const Field& E = Field::get(F.p(), 2 * F.k());
  const Elem mu = E.gen();
  const Elem mu_q = E.frobenius(mu, F.k());
  for (Elem t = 0; t < E.q(); ++t) {
    if (E.in_subfield(F, t)) continue;
    const Elem tq = E.frobenius(t, F.k());
    if (t > tq) continue;
    const Point pt = arc_point(E, Param::at(t));
    const Point ptq = arc_point(E, Param::at(tq));
    Point v1, v2;
    v1.n = v2.n = 4;
    for (std::size_t i = 0; i < 4; ++i) {
      v1.c[i] = E.project_to(F, E.add(pt[i], ptq[i]));
      v2.c[i] = E.project_to(
          F, E.add(E.mul(mu, pt[i]), E.mul(mu_q, ptq[i])));
    }
    atlas.imaginary_chords.push_back(geom::line_through(
        F, geom::normalize(F, v1), geom::normalize(F, v2)));
  }
  geom::PointSet on_arc(tc.points.begin(), tc.points.end());
  auto mark = [&](const geom::Subspace& line, ChordClass cls,
                  std::uint32_t idx, std::size_t arc_hits) {
    std::size_t hits = 0;
    for (const Point& p : geom::points_on(F, line)) {
      if (on_arc.count(p) != 0) {
        ++hits;
        continue;
      }
      if (!atlas.cover.emplace(p, std::make_pair(cls, idx)).second) {
        throw InternalError("two covering lines meet at an off-arc point");
      }
    }
    if (hits != arc_hits) {
      throw InternalError("a covering line meets the arc unexpectedly");
    }
  };
  for (std::uint32_t i = 0; i < atlas.real_chords.size(); ++i) {
    mark(atlas.real_chords[i], ChordClass::real_chord, i, 2);
  }
  for (std::uint32_t i = 0; i < atlas.imaginary_chords.size(); ++i) {
    mark(atlas.imaginary_chords[i], ChordClass::imaginary_chord, i, 0);
  }
  for (std::uint32_t i = 0; i < atlas.tangents.size(); ++i) {
    mark(atlas.tangents[i], ChordClass::tangent, i, 1);
  }
  const std::uint64_t off_arc = geom::pg_size(3, F.q()) - (F.q() + 1);
  if (atlas.cover.size() != off_arc) {
    throw InternalError("an off-arc point escapes every chord and tangent");
  }
  return atlas;
}

geom::Subspace axis_of(const Field& F, const geom::Subspace& chord) {
  if (chord.r != 2) throw UsageError("only lines have a polar axis");
  const forms::Form f = w3_form(F);
  std::array<Point, 2> basis;
  for (std::size_t i = 0; i < 2; ++i) {
    basis[i].n = 4;
    for (std::size_t j = 0; j < 4; ++j) basis[i].c[j] = chord.row[i][j];
  }
  return geom::intersect(F, forms::perp(f, basis[0]),
                         forms::perp(f, basis[1]));
}

}  // namespace polarset::cubic
