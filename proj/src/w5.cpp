#include "polarset/w5.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <set>
#include <unordered_map>
#include <unordered_set>
#include <utility>

#include "polarset/common.hpp"

namespace polarset::w5 {

namespace {

std::uint64_t pair_key(Elem a, Elem b) {
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

// Encoding-least representative of {(la, lb) : l in base*}.
std::pair<Elem, Elem> canonical_pair(const Field& base, const Field& ext,
                                     Elem a, Elem b) {
  std::pair<Elem, Elem> best{a, b};
  for (Elem l = 2; l < base.q(); ++l) {
    const Elem le = ext.embed_from(base, l);
    std::pair<Elem, Elem> cand{ext.mul(le, a), ext.mul(le, b)};
    if (cand < best) best = cand;
  }
  return best;
}

// Generator w^(q-1) of the norm-one subgroup of ext*.
Elem norm_one_gen(const Field& base, const Field& ext) {
  return ext.pow(ext.gen(), static_cast<std::int64_t>(base.q()) - 1);
}

void require_even(const Field& F, const char* what) {
  if (F.p() != 2) {
    throw UsageError(std::string(what) + " needs even order, got q = " +
                     std::to_string(F.q()));
  }
}

Elem quadric1_eval(const Field& F, Elem delta, const Point& p) {
  Elem v = F.mul(p[0], p[1]);
  v = F.add(v, F.mul(p[2], p[2]));
  v = F.add(v, F.mul(p[2], p[3]));
  return F.add(v, F.mul(delta, F.mul(p[3], p[3])));
}

Elem quadric2_eval(const Field& F, Elem delta, const Point& p) {
  Elem v = F.mul(p[0], p[1]);
  v = F.add(v, F.mul(p[4], p[4]));
  v = F.add(v, F.mul(p[4], p[5]));
  return F.add(v, F.mul(delta, F.mul(p[5], p[5])));
}

}  // namespace

geom::Mat orbit_gram(const Field& ext) {
  geom::Mat g;
  g.n = 6;
  const Elem minus = ext.neg(ext.one());
  g.a[0][5] = ext.one();
  g.a[1][4] = ext.one();
  g.a[2][3] = ext.one();
  g.a[3][2] = minus;
  g.a[4][1] = minus;
  g.a[5][0] = minus;
  return g;
}

forms::Form orbit_form(const Field& ext) {
  return forms::symplectic_form(ext, orbit_gram(ext));
}

const Field& cubic_ext(const Field& base) {
  return Field::get(base.p(), base.k() * 3);
}

Point pgv_point(const Field& base, const Field& ext, Elem a, Elem b) {
  const std::uint32_t s = base.k();
  Point p;
  p.n = 6;
  p.c[0] = a;
  p.c[1] = ext.frobenius(a, s);
  p.c[2] = ext.frobenius(a, 2 * s);
  p.c[3] = ext.frobenius(b, 2 * s);
  p.c[4] = ext.frobenius(b, s);
  p.c[5] = b;
  return p;
}

Point pgv_canonical(const Field& base, const Field& ext, Elem a, Elem b) {
  if (a == 0 && b == 0) throw DomainError("zero vector has no canonical form");
  const auto [ca, cb] = canonical_pair(base, ext, a, b);
  return pgv_point(base, ext, ca, cb);
}

PgvModel make_pgv(const Field& base) {
  const Field& ext = cubic_ext(base);
  const std::uint64_t q = base.q();
  const std::uint64_t count = geom::pg_size(5, q);
  if (count > 200000) {
    throw ResourceError("subgeometry model with " + std::to_string(count) +
                        " points exceeds the enumeration guard");
  }
  PgvModel m;
  m.base = &base;
  m.ext = &ext;
  m.form = orbit_form(ext);
  m.points.reserve(count);
  m.pairs.reserve(count);
  // Least encodings of the base-scalar classes of ext*.  A pair is
  // canonical exactly when its first nonzero entry is class-least, with the
  // other entry free (the least first entry picks the scalar uniquely).
  std::vector<char> least(ext.q(), 0);
  {
    std::vector<char> seen(ext.q(), 0);
    for (Elem a = 1; a < ext.q(); ++a) {
      if (seen[a]) continue;
      least[a] = 1;
      for (Elem l = 1; l < base.q(); ++l) {
        seen[ext.mul(ext.embed_from(base, l), a)] = 1;
      }
    }
  }
  for (Elem b = 1; b < ext.q(); ++b) {
    if (!least[b]) continue;
    m.points.push_back(pgv_point(base, ext, 0, b));
    m.pairs.emplace_back(0, b);
  }
  for (Elem a = 1; a < ext.q(); ++a) {
    if (!least[a]) continue;
    for (Elem b = 0; b < ext.q(); ++b) {
      m.points.push_back(pgv_point(base, ext, a, b));
      m.pairs.emplace_back(a, b);
    }
  }
  if (m.points.size() != count) {
    throw InternalError("subgeometry enumeration count mismatch");
  }
  std::vector<std::uint32_t> order(m.points.size());
  for (std::uint32_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::uint32_t x, std::uint32_t y) {
    return m.points[x] < m.points[y];
  });
  PgvModel sorted = m;
  for (std::uint32_t i = 0; i < order.size(); ++i) {
    sorted.points[i] = m.points[order[i]];
    sorted.pairs[i] = m.pairs[order[i]];
  }
  return sorted;
}

std::vector<geom::Mat> norm_one_group(const Field& base) {
  const Field& ext = cubic_ext(base);
  const std::uint32_t s = base.k();
  const std::uint64_t n = base.q() * base.q() + base.q() + 1;
  const Elem g = norm_one_gen(base, ext);
  if (ext.pow(g, static_cast<std::int64_t>(n)) != ext.one()) {
    throw InternalError("norm-one generator order mismatch");
  }
  std::vector<geom::Mat> out;
  out.reserve(n);
  Elem x = ext.one();
  for (std::uint64_t i = 0; i < n; ++i) {
    if (i > 0 && x == ext.one()) {
      throw InternalError("norm-one generator order mismatch");
    }
    geom::Mat m;
    m.n = 6;
    m.a[0][0] = x;
    m.a[1][1] = ext.frobenius(x, s);
    m.a[2][2] = ext.frobenius(x, 2 * s);
    m.a[3][3] = ext.inv(m.a[2][2]);
    m.a[4][4] = ext.inv(m.a[1][1]);
    m.a[5][5] = ext.inv(x);
    out.push_back(m);
    x = ext.mul(x, g);
  }
  return out;
}

std::vector<Point> build_orbit_ovoid(const Field& base, Elem c) {
  if (c == 0 || c >= base.q()) {
    throw UsageError("orbit seed needs c in the base field minus zero, got " +
                     std::to_string(c));
  }
  const Field& ext = cubic_ext(base);
  const std::uint64_t n = base.q() * base.q() + base.q() + 1;
  const Elem ce = ext.embed_from(base, c);
  const Elem g = norm_one_gen(base, ext);
  std::set<Point> pts;
  Elem x = ext.one();
  for (std::uint64_t i = 0; i < n; ++i) {
    pts.insert(pgv_canonical(base, ext, x, ext.mul(ce, ext.inv(x))));
    x = ext.mul(x, g);
  }
  if (pts.size() != n) throw InternalError("orbit size mismatch");
  std::vector<Point> out(pts.begin(), pts.end());
  const forms::Form f = orbit_form(ext);
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (std::size_t j = i + 1; j < out.size(); ++j) {
      if (forms::eval(f, out[i], out[j]) == 0) {
        throw InternalError("orbit points are perpendicular");
      }
    }
  }
  return out;
}

verify::Report verify_orbit_maximality(const Field& base, Elem c) {
  const auto t0 = std::chrono::steady_clock::now();
  verify::Report r;
  r.predicate = "is_maximal_partial_ovoid";
  r.params = {{"model", "cubic_extension_subgeometry"},
              {"q", base.q()},
              {"c", c}};
  const PgvModel m = make_pgv(base);
  const Field& ext = *m.ext;
  const std::vector<Point> orbit = build_orbit_ovoid(base, c);
  const geom::PointSet members(orbit.begin(), orbit.end());

  std::unordered_map<std::uint64_t, std::uint32_t> index;
  index.reserve(m.pairs.size() * 2);
  for (std::uint32_t i = 0; i < m.pairs.size(); ++i) {
    index.emplace(pair_key(m.pairs[i].first, m.pairs[i].second), i);
  }
  const Elem g = norm_one_gen(base, ext);
  const Elem gi = ext.inv(g);

  std::vector<char> visited(m.points.size(), 0);
  nlohmann::json per_orbit = nlohmann::json::array();
  std::uint64_t blocked_total = 0;
  bool extendable = false;
  Point extension{};
  std::vector<std::uint32_t> cycle;
  for (std::uint32_t start = 0; start < m.points.size(); ++start) {
    if (visited[start]) continue;
    cycle.clear();
    std::uint32_t j = start;
    do {
      visited[j] = 1;
      cycle.push_back(j);
      const auto [a, b] = m.pairs[j];
      const auto np =
          canonical_pair(base, ext, ext.mul(g, a), ext.mul(gi, b));
      j = index.at(pair_key(np.first, np.second));
    } while (j != start);

    std::uint32_t member_count = 0;
    std::uint32_t blocked = 0;
    for (std::uint32_t idx : cycle) {
      const Point& p = m.points[idx];
      if (members.contains(p)) {
        ++member_count;
        continue;
      }
      bool hit = false;
      for (const Point& o : orbit) {
        if (forms::eval(m.form, p, o) == 0) {
          hit = true;
          break;
        }
      }
      if (hit) {
        ++blocked;
      } else if (!extendable) {
        extendable = true;
        extension = p;
      }
    }
    blocked_total += blocked;
    per_orbit.push_back({{"size", cycle.size()},
                         {"members", member_count},
                         {"blocked", blocked}});
  }

  r.counts = {{"points", m.points.size()},
              {"members", orbit.size()},
              {"candidates", m.points.size() - orbit.size()},
              {"blocked", blocked_total},
              {"group_orbits", per_orbit}};
  if (extendable) {
    r.outcome = "fail";
    r.witness = {{"extension_point", verify::point_json(extension)}};
  } else {
    r.outcome = "pass";
  }
  r.millis = static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::milliseconds>(
          std::chrono::steady_clock::now() - t0)
          .count());
  return r;
}

namespace {

// Base-p digits of an encoding: the coefficient tuple of the element in the
// polynomial basis the tables are built on.
std::vector<std::uint32_t> enc_digits(const Field& F, Elem a) {
  std::vector<std::uint32_t> d(F.k());
  for (std::uint32_t i = 0; i < F.k(); ++i) {
    d[i] = a % F.p();
    a /= F.p();
  }
  return d;
}

// Solver expressing extension elements in the basis 1, w, w^2 with base-field
// coordinates, working digit-wise over the prime field.
struct Chart {
  const Field* base = nullptr;
  const Field* ext = nullptr;
  std::vector<std::vector<std::uint32_t>> inv;
};

Chart make_chart(const Field& base) {
  const Field& ext = cubic_ext(base);
  const std::uint32_t p = base.p();
  const std::uint32_t k = base.k();
  const std::uint32_t d = 3 * k;
  std::vector<std::vector<std::uint32_t>> m(d,
                                            std::vector<std::uint32_t>(2 * d));
  for (std::uint32_t j = 0; j < 3; ++j) {
    for (std::uint32_t mm = 0; mm < k; ++mm) {
      const Elem e = ext.mul(ext.pow(ext.gen(), j),
                             ext.embed_from(base, base.pow(base.gen(), mm)));
      const auto dig = enc_digits(ext, e);
      for (std::uint32_t r = 0; r < d; ++r) m[r][j * k + mm] = dig[r];
    }
  }
  for (std::uint32_t r = 0; r < d; ++r) m[r][d + r] = 1;
  for (std::uint32_t col = 0; col < d; ++col) {
    std::uint32_t piv = col;
    while (piv < d && m[piv][col] == 0) ++piv;
    if (piv == d) throw InternalError("chart basis is dependent");
    std::swap(m[col], m[piv]);
    std::uint32_t s = 1;
    while (m[col][col] * s % p != 1) ++s;
    for (auto& v : m[col]) v = v * s % p;
    for (std::uint32_t r = 0; r < d; ++r) {
      if (r == col || m[r][col] == 0) continue;
      const std::uint32_t f = p - m[r][col];
      for (std::uint32_t cc = 0; cc < 2 * d; ++cc) {
        m[r][cc] = (m[r][cc] + f * m[col][cc]) % p;
      }
    }
  }
  Chart ch{&base, &ext, {}};
  ch.inv.assign(d, std::vector<std::uint32_t>(d));
  for (std::uint32_t r = 0; r < d; ++r) {
    for (std::uint32_t c = 0; c < d; ++c) ch.inv[r][c] = m[r][d + c];
  }
  return ch;
}

std::array<Elem, 3> chart_coords(const Chart& ch, Elem a) {
  const Field& base = *ch.base;
  const Field& ext = *ch.ext;
  const std::uint32_t k = base.k();
  const std::uint32_t d = 3 * k;
  const auto dig = enc_digits(ext, a);
  std::array<Elem, 3> out{};
  for (std::uint32_t j = 0; j < 3; ++j) {
    Elem acc = 0;
    for (std::uint32_t mm = 0; mm < k; ++mm) {
      std::uint32_t x = 0;
      for (std::uint32_t c = 0; c < d; ++c) x += ch.inv[j * k + mm][c] * dig[c];
      acc = base.add(acc,
                     base.mul(base.from_int(x), base.pow(base.gen(), mm)));
    }
    out[j] = acc;
  }
  Elem back = 0;
  for (std::uint32_t j = 0; j < 3; ++j) {
    back = ext.add(back, ext.mul(ext.embed_from(base, out[j]),
                                 ext.pow(ext.gen(), j)));
  }
  if (back != a) throw InternalError("chart coordinates fail to recompose");
  return out;
}

}  // namespace

geom::Mat orbit_coords_gram(const Field& base) {
  const Field& ext = cubic_ext(base);
  geom::Mat g;
  g.n = 6;
  for (std::uint32_t j = 0; j < 3; ++j) {
    for (std::uint32_t m = 0; m < 3; ++m) {
      const Elem t = ext.project_to(
          base, ext.rel_trace(base, ext.pow(ext.gen(), j + m)));
      g.a[j][3 + m] = t;
      g.a[3 + m][j] = base.neg(t);
    }
  }
  return g;
}

std::vector<Point> orbit_ovoid_coords(const Field& base, Elem c) {
  const Field& ext = cubic_ext(base);
  const std::vector<Point> model = build_orbit_ovoid(base, c);
  const Chart ch = make_chart(base);
  const forms::Form sub = forms::symplectic_form(base, orbit_coords_gram(base));
  const forms::Form sup = orbit_form(ext);
  std::vector<Point> raw;
  raw.reserve(model.size());
  for (const Point& mp : model) {
    const auto xs = chart_coords(ch, mp.c[0]);
    const auto ys = chart_coords(ch, mp.c[5]);
    Point p;
    p.n = 6;
    for (std::uint32_t j = 0; j < 3; ++j) {
      p.c[j] = xs[j];
      p.c[3 + j] = ys[j];
    }
    raw.push_back(p);
  }
  for (std::size_t i = 0; i < raw.size(); ++i) {
    for (std::size_t j = i + 1; j < raw.size(); ++j) {
      if (ext.embed_from(base, forms::eval(sub, raw[i], raw[j])) !=
          forms::eval(sup, model[i], model[j])) {
        throw InternalError("chart evaluations disagree with the model");
      }
    }
  }
  std::set<Point> pts;
  for (const Point& p : raw) pts.insert(geom::normalize(base, p));
  if (pts.size() != model.size()) {
    throw InternalError("chart collapses distinct orbit points");
  }
  return {pts.begin(), pts.end()};
}

geom::Mat even_gram(const Field& F) {
  require_even(F, "the hyperbolic-pair gram");
  geom::Mat g;
  g.n = 6;
  g.a[0][1] = g.a[1][0] = F.one();
  g.a[2][3] = g.a[3][2] = F.one();
  g.a[4][5] = g.a[5][4] = F.one();
  return g;
}

forms::Form even_form(const Field& F) {
  return forms::symplectic_form(F, even_gram(F));
}

Elem find_delta(const Field& F) {
  require_even(F, "find_delta");
  for (Elem e = 1; e < F.q(); ++e) {
    Elem acc = e;
    Elem t = e;
    for (std::uint32_t i = 1; i < F.k(); ++i) {
      t = F.frobenius(t, 1);
      acc = F.add(acc, t);
    }
    if (acc != F.one()) continue;
    for (Elem x = 0; x < F.q(); ++x) {
      if (F.add(F.add(F.mul(x, x), x), e) == 0) {
        throw InternalError("trace-one element admits a root");
      }
    }
    return e;
  }
  throw InternalError("no trace-one element found");
}

EvenW5Config make_even_config(const Field& F) {
  require_even(F, "the even cone construction");
  const std::uint64_t q = F.q();
  EvenW5Config cfg;
  cfg.delta1 = cfg.delta2 = find_delta(F);

  const Point u[6] = {geom::unit_point(6, 0), geom::unit_point(6, 1),
                      geom::unit_point(6, 2), geom::unit_point(6, 3),
                      geom::unit_point(6, 4), geom::unit_point(6, 5)};
  {
    const Point b1[] = {u[0], u[1], u[2], u[3]};
    const Point b2[] = {u[0], u[1], u[4], u[5]};
    const Point bs[] = {u[0], u[1], u[2]};
    cfg.space1 = geom::span(F, b1);
    cfg.space2 = geom::span(F, b2);
    cfg.sigma = geom::span(F, bs);
  }

  for (const Point& p : geom::all_points(3, F)) {
    Point a;
    a.n = 6;
    a.c[0] = p[0];
    a.c[1] = p[1];
    a.c[2] = p[2];
    a.c[3] = p[3];
    if (quadric1_eval(F, cfg.delta1, a) == 0) cfg.quadric1.push_back(a);
    Point b;
    b.n = 6;
    b.c[0] = p[0];
    b.c[1] = p[1];
    b.c[4] = p[2];
    b.c[5] = p[3];
    if (quadric2_eval(F, cfg.delta2, b) == 0) cfg.quadric2.push_back(b);
  }
  if (cfg.quadric1.size() != q * q + 1 || cfg.quadric2.size() != q * q + 1) {
    throw InternalError("elliptic quadric size mismatch");
  }

  std::set<Point> cone1{u[2]};
  for (const Point& e : cfg.quadric2) {
    for (const Point& p : geom::points_on(F, geom::line_through(F, u[2], e))) {
      cone1.insert(p);
    }
  }
  if (cone1.size() != q * q * q + q + 1) {
    throw InternalError("point cone size mismatch");
  }
  cfg.cone1.assign(cone1.begin(), cone1.end());

  std::vector<Point> conic;
  for (const Point& p : cfg.quadric1) {
    if (p[3] == 0) conic.push_back(p);
  }
  if (conic.size() != q + 1) throw InternalError("conic size mismatch");
  std::set<Point> cone2;
  for (const Point& r : conic) {
    const Point plane_pts[] = {u[4], u[5], r};
    for (const Point& p : geom::points_on(F, geom::span(F, plane_pts))) {
      cone2.insert(p);
    }
  }
  if (cone2.size() != (q + 1) * (q * q + 1)) {
    throw InternalError("line cone size mismatch");
  }
  cfg.cone2.assign(cone2.begin(), cone2.end());

  std::set<Point> meet;
  for (const Point& p : cfg.cone2) {
    if (cone1.contains(p)) meet.insert(p);
  }
  std::set<Point> armed{u[1]};
  for (Elem cc = 0; cc < q; ++cc) {
    for (Elem d = 0; d < q; ++d) {
      Elem n = F.add(F.add(F.mul(cc, cc), F.mul(cc, d)),
                     F.mul(cfg.delta2, F.mul(d, d)));
      Point p;
      p.n = 6;
      p.c[0] = F.one();
      p.c[1] = n;
      p.c[2] = F.char2_sqrt(n);
      p.c[4] = cc;
      p.c[5] = d;
      armed.insert(p);
    }
  }
  if (meet != armed) throw InternalError("cone meet parametrization mismatch");
  cfg.meet.assign(meet.begin(), meet.end());
  return cfg;
}

std::vector<Point> build_even_w5(const Field& F) {
  const EvenW5Config cfg = make_even_config(F);
  const std::uint64_t q = F.q();
  std::set<Point> out(cfg.meet.begin(), cfg.meet.end());
  for (const Point& p : cfg.quadric1) {
    if (p[3] != 0) out.insert(p);
  }
  if (out.size() != 2 * q * q - q + 1) {
    throw InternalError("glued even set size mismatch");
  }
  std::vector<Point> pts(out.begin(), out.end());
  const auto report = verify::is_maximal_partial_ovoid(even_form(F), pts);
  if (!report.passed()) {
    throw InternalError("glued even set failed the maximality scan");
  }
  return pts;
}

}  // namespace polarset::w5
