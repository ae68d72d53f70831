// Runs in its own binary: the override file must be installed in the
// environment before the first Field::get in the process.
#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <vector>

#include "polarset/gf.hpp"

using polarset::ConfigError;
using polarset::gf::Elem;
using polarset::gf::Field;

static const char* kPath = "conway_override_test.txt";

int main(int argc, char** argv) {
  {
    std::ofstream out(kPath);
    out << "# test override table\n";
    out << "7 2 3 1 1\n";    // x^2 + x + 3, primitive over F_7
    out << "11 2 1 0 1\n";   // x^2 + 1, irreducible but x has order 4
  }
  setenv("POLARSET_CONWAY_PATH", kPath, 1);
  doctest::Context ctx(argc, argv);
  const int rc = ctx.run();
  std::remove(kPath);
  return rc;
}

TEST_CASE("override replaces the built-in modulus and still validates") {
  const Field& F = Field::get(7, 2);
  CHECK(F.modulus() == std::vector<std::uint32_t>{3, 1, 1});
  // spot-check the arithmetic under the foreign modulus
  for (Elem a = 0; a < 49; ++a) {
    if (a != 0) CHECK(F.mul(a, F.inv(a)) == 1);
    for (Elem b = 0; b < 49; ++b) {
      REQUIRE(F.mul(a, F.add(b, 1)) == F.add(F.mul(a, b), a));
    }
  }
  CHECK(F.pow(F.gen(), 48) == 1);
  CHECK(F.pow(F.gen(), 24) != 1);
  CHECK(F.pow(F.gen(), 16) != 1);
}

TEST_CASE("non-primitive override is rejected") {
  CHECK_THROWS_AS(Field::get(11, 2), ConfigError);
}

TEST_CASE("fields absent from the override file fall back to built-ins") {
  const Field& F = Field::get(3, 2);
  CHECK(F.modulus() == std::vector<std::uint32_t>{2, 2, 1});
}
