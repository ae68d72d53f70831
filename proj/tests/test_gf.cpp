#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "polarset/gf.hpp"

using polarset::ConfigError;
using polarset::DomainError;
using polarset::gf::Elem;
using polarset::gf::Field;

TEST_CASE("field lookup and modulus validation") {
  const Field& f2 = Field::get(2, 1);
  CHECK(f2.q() == 2);
  CHECK(f2.modulus() == std::vector<std::uint32_t>{1, 1});

  const Field& f25 = Field::get(5, 2);
  CHECK(f25.q() == 25);
  CHECK(f25.modulus() == std::vector<std::uint32_t>{2, 4, 1});

  CHECK(&Field::get(5, 2) == &f25);

  CHECK_THROWS_AS(Field::get(2, 21), ConfigError);   // above the size limit
  CHECK_THROWS_AS(Field::get(4, 1), ConfigError);    // not a prime
  CHECK_THROWS_AS(Field::get(17, 1), ConfigError);   // unsupported prime
  CHECK_THROWS_AS(Field::get(2, 0), ConfigError);
  CHECK_THROWS_AS(Field::get(3, 13), ConfigError);   // no table entry
}

TEST_CASE("field axioms, exhaustive for q <= 81") {
  const std::pair<std::uint32_t, std::uint32_t> sizes[] = {
      {2, 1}, {2, 2}, {2, 3}, {2, 4}, {2, 5}, {2, 6}, {3, 1},
      {3, 2}, {3, 3}, {3, 4}, {5, 1}, {5, 2}, {7, 1}, {7, 2}};
  for (auto [p, k] : sizes) {
    const Field& F = Field::get(p, k);
    const std::uint32_t q = F.q();
    CAPTURE(p);
    CAPTURE(k);

    // characteristic
    Elem s = 0;
    for (std::uint32_t i = 0; i < p; ++i) s = F.add(s, 1);
    REQUIRE(s == 0);
    REQUIRE(F.from_int(p + 1) == 1);

    for (Elem a = 0; a < q; ++a) {
      REQUIRE(F.add(a, 0) == a);
      REQUIRE(F.mul(a, 1) == a);
      REQUIRE(F.add(a, F.neg(a)) == 0);
      if (a != 0) {
        REQUIRE(F.mul(a, F.inv(a)) == 1);
        REQUIRE(F.pow(a, static_cast<std::int64_t>(q) - 1) == 1);
      }
      for (Elem b = 0; b < q; ++b) {
        REQUIRE(F.add(a, b) == F.add(b, a));
        REQUIRE(F.mul(a, b) == F.mul(b, a));
        REQUIRE(F.sub(a, b) == F.add(a, F.neg(b)));
      }
    }
    for (Elem a = 0; a < q; ++a) {
      for (Elem b = 0; b < q; ++b) {
        for (Elem c = 0; c < q; ++c) {
          REQUIRE(F.add(F.add(a, b), c) == F.add(a, F.add(b, c)));
          REQUIRE(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
          REQUIRE(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
        }
      }
    }
    REQUIRE_THROWS_AS(F.inv(0), DomainError);
    REQUIRE_THROWS_AS(F.div(1, 0), DomainError);
    REQUIRE_THROWS_AS(F.add(q, 0), DomainError);
  }
}

TEST_CASE("generator has full multiplicative order") {
  {
    const Field& F = Field::get(2, 3);
    std::set<Elem> seen;
    for (std::uint32_t i = 0; i < 7; ++i) seen.insert(F.exp(i));
    CHECK(seen.size() == 7);
  }
  {
    const Field& F = Field::get(7, 2);  // q - 1 = 48 = 16 * 3
    CHECK(F.pow(F.gen(), 48) == 1);
    CHECK(F.pow(F.gen(), 24) != 1);
    CHECK(F.pow(F.gen(), 16) != 1);
  }
}

TEST_CASE("zech addition agrees with digitwise addition") {
  // q = 3^7 = 2187 is above the dense-table cutoff, so add() goes through
  // zech logs there.
  const Field& F = Field::get(3, 7);
  auto digit_add = [&](Elem a, Elem b) {
    Elem out = 0, mult = 1;
    for (std::uint32_t i = 0; i < 7; ++i) {
      out += (a % 3 + b % 3) % 3 * mult;
      a /= 3;
      b /= 3;
      mult *= 3;
    }
    return out;
  };
  std::mt19937_64 rng(12345);
  for (int t = 0; t < 20000; ++t) {
    const Elem a = static_cast<Elem>(rng() % F.q());
    const Elem b = static_cast<Elem>(rng() % F.q());
    REQUIRE(F.add(a, b) == digit_add(a, b));
  }
  CHECK(F.add(5, F.neg(5)) == 0);
}

TEST_CASE("frobenius") {
  {
    const Field& F = Field::get(3, 2);
    CHECK(F.frobenius(F.gen()) == F.pow(F.gen(), 3));
    CHECK(F.frobenius(F.gen()) == 7);
    CHECK(F.frobenius(0) == 0);
  }
  {
    const Field& F = Field::get(2, 3);
    for (Elem a = 0; a < 8; ++a) {
      CHECK(F.frobenius(F.frobenius(F.frobenius(a))) == a);
      CHECK(F.frobenius(a, 3) == a);
    }
  }
  {
    const Field& F = Field::get(2, 4);
    for (Elem a = 0; a < 16; ++a) {
      for (Elem b = 0; b < 16; ++b) {
        REQUIRE(F.frobenius(F.add(a, b)) == F.add(F.frobenius(a), F.frobenius(b)));
        REQUIRE(F.frobenius(F.mul(a, b)) == F.mul(F.frobenius(a), F.frobenius(b)));
      }
    }
  }
}

TEST_CASE("embedding towers") {
  const Field& F5 = Field::get(5, 1);
  const Field& F25 = Field::get(5, 2);
  const Field& F625 = Field::get(5, 4);

  CHECK(F625.has_subfield(F25));
  CHECK(F625.has_subfield(F5));
  CHECK_FALSE(F25.has_subfield(F625));

  // round trips
  for (Elem a = 0; a < 25; ++a) {
    const Elem up = F625.embed_from(F25, a);
    CHECK(F625.project_to(F25, up) == a);
    CHECK(F625.in_subfield(F25, up));
  }
  // homomorphism on all pairs
  for (Elem a = 0; a < 25; ++a) {
    for (Elem b = 0; b < 25; ++b) {
      REQUIRE(F625.embed_from(F25, F25.add(a, b)) ==
              F625.add(F625.embed_from(F25, a), F625.embed_from(F25, b)));
      REQUIRE(F625.embed_from(F25, F25.mul(a, b)) ==
              F625.mul(F625.embed_from(F25, a), F625.embed_from(F25, b)));
    }
  }
  // transitivity through the middle floor
  for (Elem a = 0; a < 5; ++a) {
    CHECK(F625.embed_from(F5, a) == F625.embed_from(F25, F25.embed_from(F5, a)));
  }
  // membership census
  std::size_t inside = 0;
  for (Elem a = 0; a < 625; ++a) inside += F625.in_subfield(F25, a) ? 1 : 0;
  CHECK(inside == 25);
  for (Elem a = 0; a < 625; ++a) {
    if (!F625.in_subfield(F25, a)) {
      CHECK_THROWS_AS(F625.project_to(F25, a), DomainError);
      break;
    }
  }

  const Field& F4 = Field::get(2, 2);
  const Field& F16 = Field::get(2, 4);
  const Field& F2 = Field::get(2, 1);
  for (Elem a = 0; a < 4; ++a) {
    const Elem up = F16.embed_from(F4, a);
    CHECK(F16.project_to(F4, up) == a);
  }
  CHECK(F16.embed_from(F2, 1) == 1);
  CHECK_THROWS_AS(F16.embed_from(F25, 1), DomainError);

  // deep even tower
  const Field& F4096 = Field::get(2, 12);
  for (auto sub_k : {1u, 2u, 3u, 4u, 6u}) {
    const Field& S = Field::get(2, sub_k);
    for (Elem a = 0; a < S.q(); ++a) {
      REQUIRE(F4096.project_to(S, F4096.embed_from(S, a)) == a);
    }
  }
}

TEST_CASE("relative norm and trace") {
  const Field& F3 = Field::get(3, 1);
  const Field& F27 = Field::get(3, 3);

  std::size_t norm_one = 0;
  for (Elem a = 1; a < 27; ++a) {
    const Elem n = F27.rel_norm(F3, a);
    REQUIRE(F27.in_subfield(F3, n));
    if (n == 1) ++norm_one;
  }
  CHECK(norm_one == 13);  // q^2 + q + 1 at q = 3

  for (Elem a = 0; a < 27; ++a) {
    for (Elem b = 0; b < 27; ++b) {
      if (a && b) {
        REQUIRE(F27.rel_norm(F3, F27.mul(a, b)) ==
                F27.mul(F27.rel_norm(F3, a), F27.rel_norm(F3, b)));
      }
      REQUIRE(F27.rel_trace(F3, F27.add(a, b)) ==
              F27.add(F27.rel_trace(F3, a), F27.rel_trace(F3, b)));
    }
  }

  // trace fibers all have size q^2
  std::map<Elem, int> fiber;
  for (Elem a = 0; a < 27; ++a) ++fiber[F27.rel_trace(F3, a)];
  CHECK(fiber.size() == 3);
  for (auto& [v, n] : fiber) CHECK(n == 9);

  // cubic-extension identity: T(x^(q+1) - x) = N(1 - x) on norm-one x
  for (auto [p, k] : {std::pair<int, int>{2, 1}, {3, 1}, {5, 1}}) {
    const Field& B = Field::get(p, k);
    const Field& E = Field::get(p, 3 * k);
    const std::uint32_t q = B.q();
    std::size_t count = 0;
    for (Elem x = 1; x < E.q(); ++x) {
      if (E.rel_norm(B, x) != 1) continue;
      ++count;
      const Elem lhs = E.rel_trace(B, E.sub(E.pow(x, q + 1), x));
      const Elem rhs = E.rel_norm(B, E.sub(1, x));
      REQUIRE(lhs == rhs);
    }
    CHECK(count == q * q + q + 1);
  }
}

TEST_CASE("square roots in characteristic 2") {
  const Field& F4 = Field::get(2, 2);
  CHECK(F4.char2_sqrt(2) == 3);  // sqrt(w) = w^2
  CHECK(F4.char2_sqrt(0) == 0);
  CHECK(F4.char2_sqrt(1) == 1);

  const Field& F16 = Field::get(2, 4);
  for (Elem a = 0; a < 16; ++a) {
    const Elem s = F16.char2_sqrt(a);
    CHECK(F16.mul(s, s) == a);
  }
  CHECK_THROWS_AS(Field::get(3, 2).char2_sqrt(1), DomainError);
}

TEST_CASE("cube classification") {
  {
    const Field& F = Field::get(5, 2);
    std::size_t non_cubes = 0;
    for (Elem a = 1; a < 25; ++a) non_cubes += F.is_cube(a) ? 0 : 1;
    CHECK(non_cubes == 16);
  }
  {
    const Field& F = Field::get(2, 3);  // q - 1 = 7 coprime to 3
    for (Elem a = 1; a < 8; ++a) CHECK(F.is_cube(a));
  }
  {
    const Field& F = Field::get(7, 1);
    std::size_t non_cubes = 0;
    for (Elem a = 1; a < 7; ++a) non_cubes += F.is_cube(a) ? 0 : 1;
    CHECK(non_cubes == 4);
    CHECK_THROWS_AS(F.is_cube(0), DomainError);
  }
}

TEST_CASE("pow edge cases") {
  const Field& F = Field::get(3, 2);
  CHECK(F.pow(0, 5) == 0);
  CHECK(F.pow(0, 0) == 1);
  CHECK_THROWS_AS(F.pow(0, -1), DomainError);
  for (Elem a = 1; a < 9; ++a) {
    CHECK(F.pow(a, -1) == F.inv(a));
    CHECK(F.pow(a, 17) == F.mul(F.pow(a, 8), F.pow(a, 9)));
  }
}

TEST_CASE("large fields construct and behave") {
  const Field& F = Field::get(2, 20);
  CHECK(F.q() == 1u << 20);
  CHECK(F.pow(F.gen(), (1 << 20) - 1) == 1);
  CHECK(F.mul(F.gen(), F.inv(F.gen())) == 1);

  const Field& G = Field::get(3, 12);
  CHECK(G.q() == 531441);
  CHECK(G.pow(G.gen(), 531440) == 1);
  CHECK(G.add(5, G.neg(5)) == 0);
}
