#include "polarset/pencil.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <set>
#include <string>
#include <utility>

#include "polarset/common.hpp"
#include "polarset/w5.hpp"

namespace polarset::pencil {

namespace {

// [[0, I], [-I, 0]]: the pairing the Darboux columns are arranged for, and
// the Gram every W_i restricts to.
geom::Mat block_gram(const Field& F, std::uint32_t n) {
  geom::Mat g;
  g.n = static_cast<std::uint8_t>(2 * n);
  for (std::uint32_t i = 0; i < n; ++i) {
    g.a[i][n + i] = F.one();
    g.a[n + i][i] = F.neg(F.one());
  }
  return g;
}

Elem beta(const Field& F, const geom::Mat& g, const Point& x, const Point& y) {
  Elem acc = 0;
  for (std::uint32_t i = 0; i < g.n; ++i) {
    if (x.c[i] == 0) continue;
    for (std::uint32_t j = 0; j < g.n; ++j) {
      acc = F.add(acc, F.mul(x.c[i], F.mul(g.a[i][j], y.c[j])));
    }
  }
  return acc;
}

// x + c * y on raw vectors.
Point axpy(const Field& F, const Point& x, Elem c, const Point& y) {
  Point out = x;
  for (std::uint32_t i = 0; i < x.n; ++i) {
    out.c[i] = F.add(out.c[i], F.mul(c, y.c[i]));
  }
  return out;
}

Elem ext_conj(const PencilConfig& cfg, Elem a) {
  return cfg.ext->frobenius(a, cfg.base->k());
}

geom::Mat conj_mat(const PencilConfig& cfg, const geom::Mat& m) {
  geom::Mat out = m;
  for (std::uint32_t i = 0; i < m.n; ++i) {
    for (std::uint32_t j = 0; j < m.n; ++j) {
      out.a[i][j] = ext_conj(cfg, m.a[i][j]);
    }
  }
  return out;
}

// iota * (xi^q - xi), the base-field value xi contributes to the coverage.
Elem trace_value(const PencilConfig& cfg, Elem xi) {
  const Field& E = *cfg.ext;
  return E.mul(cfg.iota, E.sub(ext_conj(cfg, xi), xi));
}

geom::Mat member_gram(const PencilConfig& cfg, std::uint32_t i) {
  const Field& E = *cfg.ext;
  const std::uint32_t n = cfg.n;
  geom::Mat g;
  g.n = static_cast<std::uint8_t>(2 * n);
  for (std::uint32_t j = 0; j < n; ++j) {
    g.a[j][n + j] = cfg.iota;
    g.a[n + j][j] = E.neg(cfg.iota);
  }
  g.a[2 * n - 1][2 * n - 1] = trace_value(cfg, cfg.xis[i - 1]);
  return g;
}

// Sigma_i from its parametrization: base-field tuples with last coordinate
// one and the middle slot shifted by xi_i, plus the rational points of Pi.
std::vector<Point> sigma_display(const PencilConfig& cfg, std::uint32_t i) {
  const Field& F = *cfg.base;
  const Field& E = *cfg.ext;
  const std::uint32_t n = cfg.n;
  const std::uint32_t d = 2 * n;
  const Elem xi = cfg.xis[i - 1];
  std::set<Point> pts;
  std::vector<Elem> a(d - 1, 0);
  while (true) {
    Point p;
    p.n = static_cast<std::uint8_t>(d);
    for (std::uint32_t u = 0; u + 1 < d; ++u) p.c[u] = E.embed_from(F, a[u]);
    p.c[n - 1] = E.add(p.c[n - 1], xi);
    p.c[d - 1] = E.one();
    pts.insert(geom::normalize(E, p));
    std::size_t u = 0;
    while (u < a.size() && ++a[u] == F.q()) a[u++] = 0;
    if (u == a.size()) break;
  }
  for (const Point& s : geom::all_points(d - 2, F)) {
    Point p;
    p.n = static_cast<std::uint8_t>(d);
    for (std::uint32_t u = 0; u + 1 < d; ++u) p.c[u] = E.embed_from(F, s.c[u]);
    pts.insert(geom::normalize(E, p));
  }
  const std::uint64_t expected =
      geom::pg_size(d - 1, F.q());
  if (pts.size() != expected) {
    throw InternalError("subgeometry parametrization size mismatch");
  }
  return {pts.begin(), pts.end()};
}

const char* req_name(TraceReq req) {
  switch (req) {
    case TraceReq::avoid_plane: return "avoid_plane";
    case TraceReq::exactly_one: return "exactly_one";
    case TraceReq::tangent_point: return "tangent_point";
    case TraceReq::secant_conic: return "secant_conic";
  }
  return "unknown";
}

// I + lambda v (Gv)^T, the symplectic transvection along v.
geom::Mat transvection(const Field& F, const geom::Mat& g, const Point& v,
                       Elem lambda) {
  geom::Mat m = geom::Mat::identity(g.n);
  Point w;
  w.n = g.n;
  for (std::uint32_t i = 0; i < g.n; ++i) {
    Elem acc = 0;
    for (std::uint32_t j = 0; j < g.n; ++j) {
      acc = F.add(acc, F.mul(g.a[i][j], v.c[j]));
    }
    w.c[i] = acc;
  }
  for (std::uint32_t i = 0; i < g.n; ++i) {
    if (v.c[i] == 0) continue;
    const Elem lv = F.mul(lambda, v.c[i]);
    for (std::uint32_t j = 0; j < g.n; ++j) {
      m.a[i][j] = F.add(m.a[i][j], F.mul(lv, w.c[j]));
    }
  }
  return m;
}

std::uint64_t pg_line_count(std::uint32_t dim, std::uint64_t s) {
  std::uint64_t top = 1, bottom = 1;
  for (std::uint32_t i = 0; i < 2; ++i) {
    std::uint64_t num = 1;
    for (std::uint32_t j = 0; j < dim + 1 - i; ++j) num *= s;
    top *= num - 1;
    std::uint64_t den = 1;
    for (std::uint32_t j = 0; j < 2 - i; ++j) den *= s;
    bottom *= den - 1;
  }
  return top / bottom;
}

}  // namespace

geom::Mat standard_gram(const Field& F, std::uint32_t n) {
  if (n < 2 || n > 4) {
    throw UsageError("the reference model covers n = 2, 3, 4");
  }
  geom::Mat g;
  g.n = static_cast<std::uint8_t>(2 * n);
  for (std::uint32_t i = 0; i < n; ++i) {
    g.a[i][2 * n - 1 - i] = F.one();
    g.a[2 * n - 1 - i][i] = F.neg(F.one());
  }
  return g;
}

geom::Mat symplectic_basis(const Field& F, const geom::Mat& gram) {
  forms::symplectic_form(F, gram);  // validates the Gram
  const std::uint32_t d = gram.n;
  std::vector<Point> rest;
  for (std::uint32_t u = 0; u < d; ++u) rest.push_back(geom::unit_point(d, u));
  std::vector<Point> es, fs;
  while (!rest.empty()) {
    const Point u = rest[0];
    std::size_t t = 0;
    for (std::size_t j = 1; j < rest.size(); ++j) {
      if (beta(F, gram, u, rest[j]) != 0) {
        t = j;
        break;
      }
    }
    if (t == 0) {
      throw InternalError("alternating gram degenerates on the residual space");
    }
    Point vv;
    vv.n = static_cast<std::uint8_t>(d);
    const Elem scale = F.inv(beta(F, gram, u, rest[t]));
    for (std::uint32_t c = 0; c < d; ++c) vv.c[c] = F.mul(scale, rest[t].c[c]);
    std::vector<Point> next;
    for (std::size_t j = 0; j < rest.size(); ++j) {
      if (j == 0 || j == t) continue;
      Point x = axpy(F, rest[j], beta(F, gram, rest[j], u), vv);
      x = axpy(F, x, F.neg(beta(F, gram, x, vv)), u);
      next.push_back(x);
    }
    es.push_back(u);
    fs.push_back(vv);
    rest = std::move(next);
  }
  geom::Mat s;
  s.n = static_cast<std::uint8_t>(d);
  for (std::uint32_t j = 0; j < d / 2; ++j) {
    for (std::uint32_t r = 0; r < d; ++r) {
      s.a[r][j] = es[j].c[r];
      s.a[r][d / 2 + j] = fs[j].c[r];
    }
  }
  const geom::Mat pulled =
      geom::mat_mul(F, geom::mat_transpose(s), geom::mat_mul(F, gram, s));
  if (pulled != block_gram(F, d / 2)) {
    throw InternalError("darboux basis fails its pairing");
  }
  return s;
}

std::vector<Point> to_standard_model(const Field& F, const geom::Mat& gram,
                                     const std::vector<Point>& pts) {
  const std::uint32_t d = gram.n;
  if (d % 2 != 0 || d < 4 || d > 8) {
    throw UsageError("the reference model covers dimensions 4, 6, 8");
  }
  const geom::Mat phi =
      geom::mat_mul(F, symplectic_basis(F, standard_gram(F, d / 2)),
                    geom::mat_inverse(F, symplectic_basis(F, gram)));
  std::set<Point> out;
  for (const Point& p : pts) {
    out.insert(geom::normalize(F, geom::mat_apply(F, phi, p)));
  }
  if (out.size() != pts.size()) {
    throw InternalError("re-coordinatization collapses points");
  }
  return {out.begin(), out.end()};
}

PencilConfig make_config(std::uint32_t n, const Field& base) {
  if (n < 2 || n > 4) throw UsageError("pencil needs n = 2, 3, or 4");
  const Field& ext = Field::get(base.p(), 2 * base.k());
  PencilConfig cfg;
  cfg.n = n;
  cfg.base = &base;
  cfg.ext = &ext;
  if (base.p() == 2) {
    cfg.iota = ext.one();
  } else {
    const Elem minus_one = ext.neg(ext.one());
    for (Elem e = 1; e < ext.q() && cfg.iota == 0; ++e) {
      if (ext.pow(e, base.q() - 1) == minus_one) cfg.iota = e;
    }
    if (cfg.iota == 0) throw InternalError("no skew unit in the extension");
  }
  std::set<Elem> covered;
  for (Elem xi = 0; xi < ext.q() && cfg.xis.size() < base.q(); ++xi) {
    const Elem v = trace_value(cfg, xi);
    if (!ext.in_subfield(base, v)) {
      throw InternalError("coverage value escapes the base field");
    }
    if (covered.insert(v).second) cfg.xis.push_back(xi);
  }
  if (cfg.xis.size() != base.q() || cfg.xis[0] != 0) {
    throw InternalError("coverage of the base field is incomplete");
  }
  return cfg;
}

PencilMember build_member(const PencilConfig& cfg, std::uint32_t i) {
  const Field& F = *cfg.base;
  const Field& E = *cfg.ext;
  if (i < 1 || i > F.q()) throw UsageError("pencil member index out of range");
  const std::uint32_t n = cfg.n;
  const std::uint32_t d = 2 * n;
  PencilMember m;
  m.index = i;
  m.form = forms::hermitian_form(E, member_gram(cfg, i));
  const geom::Mat gram1 = member_gram(cfg, 1);
  m.sigma = sigma_display(cfg, i);
  const std::vector<Point> sigma1 = i == 1 ? m.sigma : sigma_display(cfg, 1);
  const Elem xi = cfg.xis[i - 1];
  for (int sign : {1, -1}) {
    geom::Mat t = geom::Mat::identity(d);
    t.a[n - 1][d - 1] = sign > 0 ? xi : E.neg(xi);
    const geom::Mat pulled = geom::mat_mul(
        E, geom::mat_transpose(t),
        geom::mat_mul(E, m.form.gram, conj_mat(cfg, t)));
    if (pulled != gram1) continue;
    std::set<Point> image;
    for (const Point& p : sigma1) {
      image.insert(geom::normalize(E, geom::mat_apply(E, t, p)));
    }
    if (!std::equal(image.begin(), image.end(), m.sigma.begin(),
                    m.sigma.end())) {
      continue;
    }
    m.tau = t;
    m.sign = sign;
    break;
  }
  if (m.sign == 0) {
    throw InternalError("no shift direction carries member 1 onto member " +
                        std::to_string(i));
  }
  m.baer = geom::baer_from_matrix(F, E, m.tau);
  if (geom::baer_image(m.baer) != m.sigma) {
    throw InternalError("subgeometry image disagrees with its parametrization");
  }
  for (const Point& p : m.sigma) {
    if (!forms::is_absolute(m.form, p)) {
      throw InternalError("subgeometry point off its variety");
    }
  }
  m.w = forms::restrict_to_baer(m.form, m.baer);
  return m;
}

geom::Mat elation(const PencilConfig& cfg, std::span<const Elem> a) {
  const Field& F = *cfg.base;
  const Field& E = *cfg.ext;
  const std::uint32_t n = cfg.n;
  const std::uint32_t d = 2 * n;
  if (a.size() != d - 1) {
    throw UsageError("elation needs 2n-1 base-field parameters");
  }
  std::vector<Elem> ae(d - 1);
  for (std::uint32_t u = 0; u + 1 < d; ++u) {
    if (a[u] >= F.q()) {
      throw UsageError("elation parameters live in the base field");
    }
    ae[u] = E.embed_from(F, a[u]);
  }
  geom::Mat m = geom::Mat::identity(d);
  for (std::uint32_t r = 0; r + 1 < n; ++r) m.a[r][d - 1] = ae[r];
  for (std::uint32_t j = 0; j + 1 < n; ++j) {
    m.a[n - 1][j] = E.neg(ae[n + j]);
    m.a[n - 1][n + j] = ae[j];
    m.a[n + j][d - 1] = ae[n + j];
  }
  m.a[n - 1][d - 1] = ae[n - 1];
  return m;
}

std::vector<Point> place_seed(const PencilConfig& cfg,
                              const std::vector<Point>& seed, TraceReq req,
                              std::uint64_t rng_seed, std::uint32_t retries) {
  const Field& F = *cfg.base;
  const std::uint32_t n = cfg.n;
  const std::uint32_t d = 2 * n;
  const std::uint32_t q = F.q();
  if ((req == TraceReq::tangent_point || req == TraceReq::secant_conic) &&
      n != 2) {
    throw UsageError("plane-section requirements describe n = 2 ovoids");
  }
  if (seed.empty()) throw UsageError("empty seed");
  const geom::Mat ref = standard_gram(F, n);
  if (!verify::is_partial_ovoid(forms::symplectic_form(F, ref), seed)
           .passed()) {
    throw UsageError("seed is not a partial ovoid of the reference model");
  }
  const std::uint32_t target = req == TraceReq::avoid_plane ? 0
                               : req == TraceReq::secant_conic ? q + 1
                                                              : 1;
  const geom::Mat into = geom::mat_inverse(F, symplectic_basis(F, ref));
  std::vector<Point> block_pts;
  block_pts.reserve(seed.size());
  for (const Point& p : seed) {
    block_pts.push_back(geom::normalize(F, geom::mat_apply(F, into, p)));
  }
  const geom::Mat bg = block_gram(F, n);
  const PencilMember first = build_member(cfg, 1);
  std::mt19937_64 rng(rng_seed);
  std::vector<Point> moved(block_pts.size());
  for (std::uint32_t attempt = 0; attempt <= retries; ++attempt) {
    geom::Mat mt = geom::Mat::identity(d);
    if (attempt > 0) {
      for (std::uint32_t r = 0; r < 2 * d; ++r) {
        Point v;
        v.n = static_cast<std::uint8_t>(d);
        bool zero = true;
        while (zero) {
          for (std::uint32_t u = 0; u < d; ++u) {
            v.c[u] = static_cast<Elem>(rng() % q);
            if (v.c[u] != 0) zero = false;
          }
        }
        const Elem lambda = static_cast<Elem>(1 + rng() % (q - 1));
        mt = geom::mat_mul(F, transvection(F, bg, v, lambda), mt);
      }
    }
    std::uint32_t y = 0;
    for (std::size_t u = 0; u < block_pts.size(); ++u) {
      moved[u] = geom::normalize(F, geom::mat_apply(F, mt, block_pts[u]));
      if (moved[u].c[d - 1] == 0) ++y;
    }
    if (y != target) continue;
    const geom::Mat pulled =
        geom::mat_mul(F, geom::mat_transpose(mt), geom::mat_mul(F, bg, mt));
    if (pulled != bg) {
      throw InternalError("transvection product drifts off the form");
    }
    std::set<Point> out;
    for (const Point& p : moved) out.insert(geom::baer_apply(first.baer, p));
    if (out.size() != seed.size()) {
      throw InternalError("placement collapses seed points");
    }
    return {out.begin(), out.end()};
  }
  throw ResourceError("seed placement exhausted " + std::to_string(retries) +
                      " retries for requirement '" + req_name(req) + "'");
}

TangentSet assemble_tangent_set(const PencilConfig& cfg,
                                const std::vector<Point>& o1) {
  const Field& F = *cfg.base;
  const Field& E = *cfg.ext;
  const std::uint32_t n = cfg.n;
  const std::uint32_t d = 2 * n;
  const std::uint32_t q = F.q();
  if (o1.empty()) throw UsageError("empty seed orbit");

  std::vector<Point> ambient;
  std::vector<Point> sub;
  for (const Point& raw : o1) {
    const Point p = geom::normalize(E, raw);
    Point s;
    s.n = static_cast<std::uint8_t>(d);
    for (std::uint32_t u = 0; u < d; ++u) {
      if (!E.in_subfield(F, p.c[u])) {
        throw UsageError("seed point lies outside the rational subgeometry");
      }
      s.c[u] = E.project_to(F, p.c[u]);
    }
    ambient.push_back(p);
    sub.push_back(s);
  }

  std::vector<PencilMember> members;
  members.reserve(q);
  for (std::uint32_t i = 1; i <= q; ++i) members.push_back(build_member(cfg, i));
  if (!verify::is_partial_ovoid(members[0].w.sub_form, sub).passed()) {
    throw UsageError("seed orbit is not a partial ovoid of the first model");
  }

  TangentSet ts;
  ts.n = n;
  ts.q = q;
  for (const Point& s : sub) {
    if (s.c[d - 1] == 0) ++ts.y;
  }
  ts.x = static_cast<std::uint32_t>(sub.size()) - ts.y;

  std::set<Point> uni;
  std::set<Point> plane1;
  for (const PencilMember& m : members) {
    std::set<Point> orbit;
    for (const Point& p : ambient) {
      orbit.insert(geom::normalize(E, geom::mat_apply(E, m.tau, p)));
    }
    std::set<Point> plane;
    for (const Point& p : orbit) {
      if (p.c[d - 1] == 0) plane.insert(p);
    }
    if (m.index == 1) {
      plane1 = plane;
    } else if (plane != plane1) {
      throw InternalError("a shift moves the plane trace");
    }
    uni.insert(orbit.begin(), orbit.end());
    ts.orbits.emplace_back(orbit.begin(), orbit.end());
  }
  ts.points.assign(uni.begin(), uni.end());
  if (ts.points.size() != static_cast<std::size_t>(ts.x) * q + ts.y) {
    throw InternalError("union size violates the trace law");
  }

  ts.tangent_report = verify::is_tangent_set(members[0].form, ts.points);

  std::set<Point> on_variety;
  for (const Point& p : ts.points) {
    if (forms::is_absolute(members[0].form, p)) on_variety.insert(p);
  }
  const std::set<Point> o1_set(ambient.begin(), ambient.end());
  if (on_variety != o1_set) {
    throw InternalError("the union meets the first variety beyond its orbit");
  }

  if (n == 2 && F.p() == 2 && o1.size() == std::size_t{q} * q + 1 &&
      ts.tangent_report.passed()) {
    ts.maximal_report =
        verify::is_maximal_tangent_set(members[0].form, ts.points);
  }
  return ts;
}

std::vector<Point> default_w3_ovoid(const Field& F) {
  if (F.p() != 2) {
    throw UsageError("symplectic ovoids need even characteristic");
  }
  const Elem delta = w5::find_delta(F);
  const std::uint32_t q = F.q();
  std::set<Point> pts;
  for (Elem a = 0; a < q; ++a) {
    for (Elem b = 0; b < q; ++b) {
      const Elem tail = F.add(F.mul(a, a),
                              F.add(F.mul(a, b), F.mul(delta, F.mul(b, b))));
      pts.insert(geom::make_point({F.one(), a, b, tail}));
    }
  }
  pts.insert(geom::unit_point(4, 3));
  if (pts.size() != std::size_t{q} * q + 1) {
    throw InternalError("quadric point count mismatch");
  }
  std::vector<Point> out(pts.begin(), pts.end());
  const forms::Form f = forms::symplectic_form(F, standard_gram(F, 2));
  if (!verify::is_partial_ovoid(f, out).passed()) {
    throw InternalError("quadric points are not pairwise non-perpendicular");
  }
  const std::vector<Point> all = geom::all_points(3, F);
  std::set<geom::Subspace> generators;
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      if (forms::eval(f, all[i], all[j]) == 0) {
        generators.insert(geom::line_through(F, all[i], all[j]));
      }
    }
  }
  if (generators.size() != std::size_t{q + 1} * (q * q + 1)) {
    throw InternalError("totally isotropic line count mismatch");
  }
  const geom::PointSet cover(out.begin(), out.end());
  for (const geom::Subspace& line : generators) {
    std::uint32_t hits = 0;
    for (const Point& p : geom::points_on(F, line)) {
      if (cover.contains(p)) ++hits;
    }
    if (hits != 1) {
      throw InternalError("a totally isotropic line misses the point set");
    }
  }
  return out;
}

verify::Report lemma_checks(const PencilConfig& cfg) {
  const auto t0 = std::chrono::steady_clock::now();
  const Field& F = *cfg.base;
  const Field& E = *cfg.ext;
  const std::uint32_t n = cfg.n;
  const std::uint32_t d = 2 * n;
  const std::uint32_t q = F.q();
  if (q > 3 || n > 3) {
    throw UsageError("exhaustive line scans cover q <= 3, n <= 3");
  }
  const std::uint64_t npts = geom::pg_size(d - 1, E.q());
  if (npts > 5000) {
    throw ResourceError("ambient space too large for the line scan: " +
                        std::to_string(npts) + " points");
  }

  verify::Report r;
  r.predicate = "tangent_line_scan";
  r.params = {{"n", n}, {"q", q}};

  std::vector<PencilMember> members;
  for (std::uint32_t i = 1; i <= q; ++i) members.push_back(build_member(cfg, i));
  const forms::Form& h1 = members[0].form;
  std::vector<geom::PointSet> sigma_sets;
  geom::PointSet uni;
  for (const PencilMember& m : members) {
    sigma_sets.emplace_back(m.sigma.begin(), m.sigma.end());
    uni.insert(m.sigma.begin(), m.sigma.end());
  }

  const std::vector<Point> pts = geom::all_points(d - 1, E);
  std::uint64_t scanned = 0, tangent = 0, contained = 0;
  std::uint64_t meet_zero = 0, meet_one = 0, meet_full = 0;
  bool failed = false;

  for (std::size_t i = 0; i < pts.size() && !failed; ++i) {
    for (std::size_t j = i + 1; j < pts.size() && !failed; ++j) {
      const forms::LineType lt = forms::line_type(h1, pts[i], pts[j]);
      if (lt == forms::LineType::secant) continue;
      const auto lp =
          geom::points_on(E, geom::line_through(E, pts[i], pts[j]));
      if (!(lp[0] == pts[i] && lp[1] == pts[j])) continue;
      ++scanned;
      if (lt == forms::LineType::tangent) ++tangent; else ++contained;
      std::vector<Point> hits;
      for (const Point& p : lp) {
        if (uni.contains(p)) hits.push_back(p);
      }
      if (hits.empty()) {
        ++meet_zero;
      } else if (hits.size() == 1) {
        ++meet_one;
      } else if (hits.size() == std::size_t{q} + 1) {
        ++meet_full;
        bool housed = false;
        for (std::uint32_t k = 0; k < q && !housed; ++k) {
          bool all_in = true;
          for (const Point& p : hits) {
            if (!sigma_sets[k].contains(p)) {
              all_in = false;
              break;
            }
          }
          if (!all_in) continue;
          bool inside = true;
          for (const Point& p : lp) {
            if (!forms::is_absolute(members[k].form, p)) {
              inside = false;
              break;
            }
          }
          housed = inside;
        }
        if (!housed) {
          failed = true;
          r.witness = {{"kind", "full_line_without_member"},
                       {"line", {verify::point_json(pts[i]),
                                 verify::point_json(pts[j])}}};
        }
      } else {
        failed = true;
        r.witness = {{"kind", "illegal_meet"},
                     {"meet", hits.size()},
                     {"line", {verify::point_json(pts[i]),
                               verify::point_json(pts[j])}}};
      }
    }
  }

  std::uint64_t curves = 0, curve_points = 0;
  if (n == 2 && !failed) {
    std::vector<Point> plane;
    for (const Point& p : pts) {
      if (p.c[d - 1] == 0) plane.push_back(p);
    }
    const Elem iota2 = E.mul(cfg.iota, cfg.iota);
    for (std::uint32_t i = 2; i <= q && !failed; ++i) {
      const Elem xi = cfg.xis[i - 1];
      const Elem alpha = trace_value(cfg, xi);
      const Elem ia = E.mul(cfg.iota, alpha);
      for (Elem a2 = 0; a2 < q && !failed; ++a2) {
        Point vertex;
        vertex.n = 4;
        vertex.c[1] = E.add(E.embed_from(F, a2), xi);
        vertex.c[3] = E.one();
        std::set<Point> tangent_trace;
        std::set<Point> curve;
        for (const Point& rp : plane) {
          if (forms::line_type(h1, vertex, rp) == forms::LineType::tangent) {
            tangent_trace.insert(rp);
          }
          const Elem xx = rp.c[0], yy = rp.c[1], zz = rp.c[2];
          const Elem val = E.add(
              E.mul(iota2, E.mul(yy, ext_conj(cfg, yy))),
              E.mul(ia, E.sub(E.mul(ext_conj(cfg, xx), zz),
                              E.mul(xx, ext_conj(cfg, zz)))));
          if (val == 0) curve.insert(rp);
        }
        ++curves;
        curve_points += curve.size();
        if (tangent_trace != curve ||
            curve.size() != std::uint64_t{q} * q * q + 1) {
          failed = true;
          r.witness = {{"kind", "plane_trace_mismatch"},
                       {"member", i},
                       {"vertex", verify::point_json(vertex)}};
        }
      }
    }
  }

  r.counts = {{"lines", pg_line_count(d - 1, E.q())},
              {"scanned", scanned},
              {"tangent", tangent},
              {"contained", contained},
              {"meet_zero", meet_zero},
              {"meet_one", meet_one},
              {"meet_full", meet_full},
              {"curves", curves},
              {"curve_points", curve_points}};
  r.outcome = failed ? "fail" : "pass";
  r.millis = static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::milliseconds>(
          std::chrono::steady_clock::now() - t0)
          .count());
  return r;
}

}  // namespace polarset::pencil
