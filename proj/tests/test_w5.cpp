#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "polarset/common.hpp"
#include "polarset/forms.hpp"
#include "polarset/geom.hpp"
#include "polarset/verify.hpp"
#include "polarset/w5.hpp"

using namespace polarset;
using geom::Point;
using gf::Elem;
using gf::Field;

namespace {

const Field& base_field(std::uint32_t q) {
  switch (q) {
    case 2: return Field::get(2, 1);
    case 3: return Field::get(3, 1);
    case 4: return Field::get(2, 2);
    case 5: return Field::get(5, 1);
    case 8: return Field::get(2, 3);
    default: throw std::runtime_error("unexpected q in test");
  }
}

Elem ext_norm(const Field& ext, std::uint32_t s, Elem y) {
  return ext.mul(y, ext.mul(ext.frobenius(y, s), ext.frobenius(y, 2 * s)));
}

}  // namespace

TEST_CASE("the norm-one group is cyclic and preserves the form exactly") {
  for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
    const Field& base = base_field(q);
    const Field& ext = w5::cubic_ext(base);
    const auto K = w5::norm_one_group(base);
    const std::uint64_t n = q * q + q + 1;
    REQUIRE(K.size() == n);
    CHECK(K[0] == geom::Mat::identity(6));
    const geom::Mat J = w5::orbit_gram(ext);
    for (const auto& M : K) {
      CHECK(geom::mat_mul(ext, geom::mat_transpose(M),
                          geom::mat_mul(ext, J, M)) == J);
    }
    for (std::size_t i = 0; i + 1 < K.size(); ++i) {
      CHECK(geom::mat_mul(ext, K[1], K[i]) == K[i + 1]);
    }
    CHECK(geom::mat_mul(ext, K[1], K.back()) == K[0]);
  }
}

TEST_CASE("the group permutes the subgeometry and fixes only the two planes") {
  for (std::uint32_t q : {2u, 3u}) {
    const Field& base = base_field(q);
    const Field& ext = w5::cubic_ext(base);
    const auto m = w5::make_pgv(base);
    REQUIRE(m.points.size() == geom::pg_size(5, q));
    const auto K = w5::norm_one_group(base);
    const Elem g = K[1].a[0][0];
    const Elem gi = K[1].a[5][5];

    std::vector<Point> plane1, plane2;
    for (std::size_t i = 0; i < m.points.size(); ++i) {
      if (m.pairs[i].second == 0) plane1.push_back(m.points[i]);
      if (m.pairs[i].first == 0) plane2.push_back(m.points[i]);
    }
    REQUIRE(plane1.size() == q * q + q + 1);
    REQUIRE(plane2.size() == q * q + q + 1);
    CHECK(geom::span(ext, plane1).r == 3);
    CHECK(geom::span(ext, plane2).r == 3);

    // The generator matrix sends the vector of (a, b) to the vector of
    // (g a, b / g) on the nose, staying inside the model.
    std::set<Point> model(m.points.begin(), m.points.end());
    for (std::size_t i = 0; i < m.points.size(); ++i) {
      const auto [a, b] = m.pairs[i];
      const Point image = geom::mat_apply(ext, K[1], m.points[i]);
      CHECK(image == w5::pgv_point(base, ext, ext.mul(g, a), ext.mul(gi, b)));
      CHECK(model.contains(
          w5::pgv_canonical(base, ext, ext.mul(g, a), ext.mul(gi, b))));
    }

    // Orbit decomposition off the planes: full-length orbits that span more
    // than a plane, so no third invariant plane exists.
    const std::set<Point> p1(plane1.begin(), plane1.end());
    const std::set<Point> p2(plane2.begin(), plane2.end());
    std::set<Point> visited;
    std::size_t off_orbits = 0;
    for (std::size_t i = 0; i < m.points.size(); ++i) {
      const Point& start = m.points[i];
      if (p1.contains(start) || p2.contains(start) || visited.contains(start))
        continue;
      std::vector<Point> orbit;
      Point cur = start;
      do {
        visited.insert(cur);
        orbit.push_back(cur);
        cur = w5::pgv_canonical(base, ext, ext.mul(g, cur[0]),
                                ext.mul(gi, cur[5]));
      } while (!(cur == start));
      ++off_orbits;
      CHECK(orbit.size() == q * q + q + 1);
      CHECK(geom::span(ext, orbit).r >= 4);
      for (const Point& p : orbit) {
        CHECK(!p1.contains(p));
        CHECK(!p2.contains(p));
      }
    }
    CHECK(off_orbits == (geom::pg_size(5, q) - 2 * (q * q + q + 1)) /
                            (q * q + q + 1));
  }
}

TEST_CASE("the seed point pairs to a norm away from every orbit point") {
  for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
    const Field& base = base_field(q);
    const Field& ext = w5::cubic_ext(base);
    const std::uint32_t s = base.k();
    const auto f = w5::orbit_form(ext);
    for (Elem c : {Elem{1}, Elem(q - 1)}) {
      const Elem ce = ext.embed_from(base, c);
      const Point seed = w5::pgv_point(base, ext, ext.one(), ce);
      const Elem g = ext.pow(ext.gen(), static_cast<std::int64_t>(q) - 1);
      Elem x = ext.one();
      std::size_t seen = 0;
      for (std::uint64_t i = 0; i < q * q + q + 1; ++i, x = ext.mul(x, g)) {
        if (x == ext.one()) continue;
        ++seen;
        const Point p = w5::pgv_point(base, ext, x, ext.mul(ce, ext.inv(x)));
        const Elem lhs = forms::eval(f, seed, p);
        const Elem rhs =
            ext.mul(ce, ext_norm(ext, s, ext.sub(ext.one(), x)));
        CHECK(lhs == rhs);
        CHECK(rhs != 0);
      }
      CHECK(seen == q * q + q);
    }
  }
}

TEST_CASE("the orbit is a partial ovoid of the group order size") {
  for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
    const Field& base = base_field(q);
    const Field& ext = w5::cubic_ext(base);
    for (Elem c = 1; c < q; ++c) {
      const auto pts = w5::build_orbit_ovoid(base, c);
      CHECK(pts.size() == q * q + q + 1);
      CHECK(verify::is_partial_ovoid(w5::orbit_form(ext), pts).passed());
    }
    CHECK_THROWS_AS(w5::build_orbit_ovoid(base, 0), UsageError);
    CHECK_THROWS_AS(w5::build_orbit_ovoid(base, Elem{q}), UsageError);
  }
}

TEST_CASE("every subgeometry point off the orbit is blocked") {
  struct Row {
    std::uint32_t q;
    Elem c;
    std::uint64_t points;
  };
  for (const Row row : {Row{2, 1, 63}, Row{3, 1, 364}, Row{3, 2, 364},
                        Row{5, 1, 3906}}) {
    const Field& base = base_field(row.q);
    const auto rep = w5::verify_orbit_maximality(base, row.c);
    CHECK(rep.passed());
    CHECK(rep.predicate == "is_maximal_partial_ovoid");
    const std::uint64_t members = row.q * row.q + row.q + 1;
    CHECK(rep.counts.at("points") == row.points);
    CHECK(rep.counts.at("members") == members);
    CHECK(rep.counts.at("candidates") == row.points - members);
    CHECK(rep.counts.at("blocked") == row.points - members);
    std::uint64_t size_sum = 0;
    std::uint64_t member_orbits = 0;
    for (const auto& o : rep.counts.at("group_orbits")) {
      const std::uint64_t size = o.at("size");
      const std::uint64_t mem = o.at("members");
      const std::uint64_t blocked = o.at("blocked");
      size_sum += size;
      if (mem > 0) {
        ++member_orbits;
        CHECK(mem == members);
        CHECK(blocked == 0);
      } else {
        CHECK(blocked == size);
      }
    }
    CHECK(size_sum == row.points);
    CHECK(member_orbits == 1);
  }
}

TEST_CASE("find_delta returns the least trace-one element") {
  CHECK(w5::find_delta(base_field(2)) == 1);
  CHECK(w5::find_delta(base_field(4)) == 2);
  for (std::uint32_t q : {2u, 4u, 8u}) {
    const Field& F = base_field(q);
    const Elem delta = w5::find_delta(F);
    for (Elem x = 0; x < q; ++x) {
      CHECK(F.add(F.add(F.mul(x, x), x), delta) != 0);
    }
    // Every smaller element leaves the polynomial reducible.
    for (Elem e = 0; e < delta; ++e) {
      bool has_root = false;
      for (Elem x = 0; x < q; ++x) {
        if (F.add(F.add(F.mul(x, x), x), e) == 0) has_root = true;
      }
      CHECK(has_root);
    }
  }
  CHECK_THROWS_AS(w5::find_delta(base_field(3)), UsageError);
  CHECK_THROWS_AS(w5::find_delta(base_field(5)), UsageError);
}

TEST_CASE("the even configuration glues two quadrics through a cone meet") {
  for (std::uint32_t q : {2u, 4u}) {
    const Field& F = base_field(q);
    const auto cfg = w5::make_even_config(F);
    CHECK(cfg.delta1 == w5::find_delta(F));
    CHECK(cfg.quadric1.size() == q * q + 1);
    CHECK(cfg.quadric2.size() == q * q + 1);
    CHECK(cfg.meet.size() == q * q + 1);
    CHECK(cfg.cone1.size() == q * q * q + q + 1);
    CHECK(cfg.cone2.size() == (q + 1) * (q * q + 1));
    CHECK(cfg.space1.r == 4);
    CHECK(cfg.space2.r == 4);
    CHECK(cfg.sigma.r == 3);

    std::size_t on_conic = 0;
    for (const Point& p : cfg.quadric1) {
      CHECK(geom::contains(F, cfg.space1, p));
      if (geom::contains(F, cfg.sigma, p)) ++on_conic;
    }
    CHECK(on_conic == q + 1);
    for (const Point& p : cfg.quadric2) {
      CHECK(geom::contains(F, cfg.space2, p));
    }
    // The meet sits in the polar hyperplane of U3 and repeats in both cones.
    const std::set<Point> c1(cfg.cone1.begin(), cfg.cone1.end());
    const std::set<Point> c2(cfg.cone2.begin(), cfg.cone2.end());
    for (const Point& p : cfg.meet) {
      CHECK(p[3] == 0);
      CHECK(c1.contains(p));
      CHECK(c2.contains(p));
    }
    CHECK(std::count_if(cfg.meet.begin(), cfg.meet.end(), [](const Point& p) {
            return p == geom::unit_point(6, 1);
          }) == 1);

    const auto f = w5::even_form(F);
    CHECK(verify::is_partial_ovoid(f, cfg.quadric1).passed());
    CHECK(verify::is_partial_ovoid(f, cfg.meet).passed());
  }
}

TEST_CASE("the glued even set is a maximal partial ovoid") {
  for (std::uint32_t q : {2u, 4u}) {
    const Field& F = base_field(q);
    const auto pts = w5::build_even_w5(F);
    CHECK(pts.size() == 2 * q * q - q + 1);
    const auto rep = verify::is_maximal_partial_ovoid(w5::even_form(F), pts);
    CHECK(rep.passed());

    const auto cfg = w5::make_even_config(F);
    std::size_t off_sigma = 0;
    for (const Point& p : cfg.quadric1) {
      if (!geom::contains(F, cfg.sigma, p)) ++off_sigma;
    }
    CHECK(off_sigma == q * q - q);
  }
  CHECK_THROWS_AS(w5::build_even_w5(base_field(3)), UsageError);
  CHECK_THROWS_AS(w5::make_even_config(base_field(5)), UsageError);
}

TEST_CASE("the chart carries the orbit to base coordinates faithfully") {
  for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
    const Field& base = base_field(q);
    const geom::Mat G = w5::orbit_coords_gram(base);
    const auto f = forms::symplectic_form(base, G);
    for (Elem c : {Elem{1}, base.gen()}) {
      const auto pts = w5::orbit_ovoid_coords(base, c);
      CHECK(pts.size() == q * q + q + 1);
      CHECK(verify::is_partial_ovoid(f, pts).passed());
      CHECK(std::is_sorted(pts.begin(), pts.end()));
    }
  }
}
