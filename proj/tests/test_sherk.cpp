#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "polarset/common.hpp"
#include "polarset/sherk.hpp"

using namespace polarset;
using gf::Elem;
using gf::Field;

namespace {

const Field& base_field(std::uint32_t q) {
  switch (q) {
    case 2: return Field::get(2, 1);
    case 3: return Field::get(3, 1);
    case 4: return Field::get(2, 2);
    case 5: return Field::get(5, 1);
    default: throw std::runtime_error("unexpected q in test");
  }
}

struct Tuple {
  Elem alpha, beta, gamma, delta;
};

std::vector<Tuple> all_tuples(const Field& base) {
  const Field& ext = Field::get(base.p(), base.k() * 3);
  std::vector<Tuple> out;
  for (Elem a = 0; a < base.q(); ++a) {
    for (Elem b = 0; b < ext.q(); ++b) {
      for (Elem g = 0; g < ext.q(); ++g) {
        for (Elem d = 0; d < base.q(); ++d) {
          if (a == 0 && b == 0 && g == 0 && d == 0) continue;
          out.push_back({a, b, g, d});
        }
      }
    }
  }
  return out;
}

std::uint64_t pencil_cover_sum(const sherk::Pencil& p) {
  std::uint64_t sum = 0;
  for (const auto& m : p.members) {
    sum += sherk::sherk_points(m).size() - p.base_locus.size();
  }
  return sum;
}

}  // namespace

TEST_CASE("surface points follow the infinity rule") {
  for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
    const Field& base = base_field(q);
    const auto only_inf = sherk::make_surface(base, 0, 0, 0, base.one());
    CHECK(sherk::sherk_points(only_inf) ==
          std::vector<std::uint32_t>{sherk::inf_code(only_inf)});
    const auto only_zero = sherk::make_surface(base, base.one(), 0, 0, 0);
    CHECK(sherk::sherk_points(only_zero) == std::vector<std::uint32_t>{0});
    const auto norm_surface =
        sherk::make_surface(base, base.one(), 0, 0, base.neg(base.one()));
    CHECK(sherk::sherk_points(norm_surface).size() == q * q + q + 1);
  }
  const Field& b2 = base_field(2);
  for (const Tuple& t : all_tuples(b2)) {
    const auto s = sherk::make_surface(b2, t.alpha, t.beta, t.gamma, t.delta);
    const auto pts = sherk::sherk_points(s);
    const bool has_inf =
        std::find(pts.begin(), pts.end(), sherk::inf_code(s)) != pts.end();
    CHECK(has_inf == (t.alpha == 0));
  }
  CHECK_THROWS_AS(sherk::make_surface(b2, 0, 0, 0, 0), UsageError);
  CHECK_THROWS_AS(sherk::make_surface(b2, 2, 0, 0, 1), UsageError);
  CHECK_THROWS_AS(sherk::make_surface(b2, 0, 9, 0, 1), UsageError);
}

TEST_CASE("every surface size is one of four legal values with known counts") {
  struct Freeze {
    std::uint32_t q;
    std::map<std::size_t, std::uint64_t> hist;
  };
  const Freeze frozen[] = {
      {2, {{1, 9}, {3, 84}, {5, 126}, {7, 36}}},
      {3, {{1, 56}, {7, 2808}, {10, 2184}, {13, 1512}}},
  };
  for (const auto& fr : frozen) {
    const Field& base = base_field(fr.q);
    const std::uint64_t q = fr.q;
    const std::set<std::size_t> legal = {1, q * q - q + 1, q * q + 1,
                                         q * q + q + 1};
    std::map<std::size_t, std::uint64_t> hist;
    for (const Tuple& t : all_tuples(base)) {
      const auto s =
          sherk::make_surface(base, t.alpha, t.beta, t.gamma, t.delta);
      const std::size_t size = sherk::sherk_points(s).size();
      CHECK(legal.contains(size));
      ++hist[size];
    }
    CHECK(hist == fr.hist);
  }
}

TEST_CASE("exactly the projective singleton family has one point") {
  for (std::uint32_t q : {2u, 3u}) {
    const Field& base = base_field(q);
    const Field& ext = Field::get(base.p(), base.k() * 3);
    const std::uint32_t s = base.k();
    // All base-scalar multiples of (1, b, b^(q^2+q), N(b)) and (0,0,0,1).
    std::set<std::array<Elem, 4>> family;
    for (Elem l = 1; l < q; ++l) {
      family.insert({0, 0, 0, l});
      for (Elem b = 0; b < ext.q(); ++b) {
        const Elem g = ext.mul(ext.frobenius(b, 2 * s), ext.frobenius(b, s));
        const Elem nb = ext.project_to(
            base, ext.mul(b, ext.mul(ext.frobenius(b, s),
                                     ext.frobenius(b, 2 * s))));
        const Elem le = ext.embed_from(base, l);
        family.insert({base.mul(l, base.one()), ext.mul(le, b),
                       ext.mul(le, g), base.mul(l, nb)});
      }
    }
    for (const Tuple& t : all_tuples(base)) {
      const auto surf =
          sherk::make_surface(base, t.alpha, t.beta, t.gamma, t.delta);
      const bool one_point = sherk::sherk_points(surf).size() == 1;
      const bool in_family =
          family.contains({t.alpha, t.beta, t.gamma, t.delta});
      CHECK(one_point == in_family);
    }
  }
}

TEST_CASE("pencil members meet in the base locus and cover the line") {
  // Exhaustive over all surface pairs at q = 2.
  const Field& b2 = base_field(2);
  const auto tuples = all_tuples(b2);
  std::vector<sherk::Surface> surfaces;
  for (const Tuple& t : tuples) {
    surfaces.push_back(
        sherk::make_surface(b2, t.alpha, t.beta, t.gamma, t.delta));
  }
  std::uint64_t pencils = 0;
  for (std::size_t i = 0; i < surfaces.size(); ++i) {
    const auto pi = sherk::sherk_points(surfaces[i]);
    for (std::size_t j = i + 1; j < surfaces.size(); ++j) {
      if (sherk::proportional(surfaces[i], surfaces[j])) continue;
      const auto p = sherk::make_pencil(surfaces[i], surfaces[j]);
      ++pencils;
      REQUIRE(p.members.size() == 3);
      const auto pj = sherk::sherk_points(surfaces[j]);
      std::vector<std::uint32_t> meet;
      std::set_intersection(pi.begin(), pi.end(), pj.begin(), pj.end(),
                            std::back_inserter(meet));
      CHECK(p.base_locus == meet);
      CHECK(pencil_cover_sum(p) == 8 + 1 - p.base_locus.size());
    }
  }
  CHECK(pencils == 255 * 254 / 2);

  // Norm-and-trace shaped pairs plus seeded generic pairs at q = 3.
  const Field& b3 = base_field(3);
  const Field& e3 = Field::get(3, 3);
  const auto norm_surface =
      sherk::make_surface(b3, b3.one(), 0, 0, b3.neg(b3.one()));
  for (Elem beta = 0; beta < e3.q(); ++beta) {
    for (Elem gamma = 0; gamma < e3.q(); ++gamma) {
      if (beta == 0 && gamma == 0) continue;
      const auto p = sherk::make_pencil(
          norm_surface, sherk::make_surface(b3, 0, beta, gamma, 0));
      REQUIRE(p.members.size() == 4);
      CHECK(pencil_cover_sum(p) == 27 + 1 - p.base_locus.size());
    }
  }
  std::mt19937 rng(12345);
  const auto t3 = all_tuples(b3);
  std::uniform_int_distribution<std::size_t> pick(0, t3.size() - 1);
  for (int trial = 0; trial < 500; ++trial) {
    const Tuple& ta = t3[pick(rng)];
    const Tuple& tb = t3[pick(rng)];
    const auto sa = sherk::make_surface(b3, ta.alpha, ta.beta, ta.gamma,
                                        ta.delta);
    const auto sb = sherk::make_surface(b3, tb.alpha, tb.beta, tb.gamma,
                                        tb.delta);
    if (sherk::proportional(sa, sb)) continue;
    const auto p = sherk::make_pencil(sa, sb);
    CHECK(pencil_cover_sum(p) == 27 + 1 - p.base_locus.size());
    const auto pa = sherk::sherk_points(sa);
    const auto pb = sherk::sherk_points(sb);
    std::vector<std::uint32_t> meet;
    std::set_intersection(pa.begin(), pa.end(), pb.begin(), pb.end(),
                          std::back_inserter(meet));
    CHECK(p.base_locus == meet);
  }

  const auto twice = sherk::make_surface(b3, 2, 0, 0, 1);
  const auto once = sherk::make_surface(b3, 1, 0, 0, 2);
  CHECK_THROWS_AS(sherk::make_pencil(twice, once), UsageError);
}

TEST_CASE("member coefficients combine linearly at every finite point") {
  const Field& base = base_field(3);
  const Field& ext = Field::get(3, 3);
  const auto s1 = sherk::make_surface(base, base.one(), 0, 0,
                                      base.neg(base.one()));
  for (Elem beta : {Elem{1}, Elem{5}}) {
    for (Elem gamma : {Elem{0}, Elem{17}}) {
      const auto s2 = sherk::make_surface(base, 0, beta, gamma, 0);
      const auto p = sherk::make_pencil(s1, s2);
      for (Elem t = 0; t < base.q(); ++t) {
        const auto& member = p.members[t];
        const Elem te = ext.embed_from(base, t);
        for (Elem x = 0; x < ext.q(); ++x) {
          const Elem expect = ext.add(
              sherk::surface_value(s1, x),
              ext.mul(te, sherk::surface_value(s2, x)));
          CHECK(sherk::surface_value(member, x) == expect);
        }
      }
      for (Elem x = 0; x < ext.q(); ++x) {
        CHECK(sherk::surface_value(p.members[base.q()], x) ==
              sherk::surface_value(s2, x));
      }
    }
  }
}

TEST_CASE("qualifying coefficient pairs always leave a common point") {
  for (std::uint32_t q : {2u, 3u, 4u}) {
    const Field& base = base_field(q);
    const auto rep = sherk::lemma_sherk_scan(base);
    CHECK(rep.passed());
    const std::uint64_t q3 = static_cast<std::uint64_t>(q) * q * q;
    CHECK(rep.counts.at("pairs") == q3 * q3 - 1);
    CHECK(rep.counts.at("empty_base_locus") == 0);
    CHECK(rep.counts.at("qualifying").get<std::uint64_t>() > 0);
  }
  // At q = 2 the only cube is 1, so the failing pairs are exactly the
  // norm-one betas paired with the single gamma making gamma beta = 1.
  const auto rep2 = sherk::lemma_sherk_scan(base_field(2));
  CHECK(rep2.counts.at("nonqualifying") == 7);
  CHECK(rep2.counts.at("qualifying") == 63 - 7);

  CHECK_THROWS_AS(sherk::lemma_sherk_scan(base_field(5)), UsageError);
}
