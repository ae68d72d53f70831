#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include "polarset/common.hpp"
#include "polarset/forms.hpp"
#include "polarset/geom.hpp"
#include "polarset/io.hpp"
#include "polarset/pencil.hpp"
#include "polarset/verify.hpp"
#include "polarset/w5.hpp"

using namespace polarset;
using gf::Elem;
using gf::Field;
using geom::Point;

namespace {

forms::Form w52_form() {
  const Field& F = Field::get(2, 1);
  return forms::symplectic_form(F, w5::orbit_coords_gram(F));
}

std::vector<Point> w52_orbit() {
  return w5::orbit_ovoid_coords(Field::get(2, 1), 1);
}

// Replace line `lineno` (1-based) wholesale.
std::string with_line(const std::string& text, std::size_t lineno,
                      const std::string& repl) {
  std::string out;
  std::size_t pos = 0, cur = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string::npos) nl = text.size();
    ++cur;
    out += cur == lineno ? repl : text.substr(pos, nl - pos);
    out += '\n';
    pos = nl + 1;
  }
  return out;
}

}  // namespace

TEST_CASE("serialization is canonical and round-trips the orbit set") {
  const forms::Form f = w52_form();
  const std::vector<Point> pts = w52_orbit();
  REQUIRE(pts.size() == 7);

  const std::string text = io::serialize_text(f, pts, "orbit q=2 c=1");

  // Shuffling and denormalizing the input must not change a byte.
  std::vector<Point> mangled = pts;
  std::mt19937 rng(7);
  std::shuffle(mangled.begin(), mangled.end(), rng);
  CHECK(io::serialize_text(f, mangled, "orbit q=2 c=1") == text);
  // Duplicates collapse: same set, same bytes.
  mangled.push_back(pts[3]);
  CHECK(io::serialize_text(f, mangled, "orbit q=2 c=1") == text);

  const io::PointSetFile back = io::parse_text(text);
  CHECK(back.form.field == f.field);  // canonical field instance
  CHECK(back.form.kind == f.kind);
  CHECK(back.form.gram == f.gram);
  CHECK(back.provenance == "orbit q=2 c=1");
  CHECK(back.warnings.empty());
  std::vector<Point> expect = pts;
  std::sort(expect.begin(), expect.end());
  CHECK(back.points == expect);
  CHECK(verify::is_partial_ovoid(back.form, back.points).passed());

  // And the reparse serializes to the same bytes.
  CHECK(io::serialize_text(back.form, back.points, back.provenance) == text);
}

TEST_CASE("files survive the disk and work over extension fields") {
  const Field& F4 = Field::get(2, 2);
  const forms::Form h = forms::hermitian_form(F4, pencil::standard_gram(F4, 2));
  const std::vector<Point> pts = forms::absolute_points(h);
  REQUIRE(pts.size() == 45);

  const char* path = "io_roundtrip_test.pset";
  io::serialize(h, pts, "", path);
  const io::PointSetFile back = io::parse(path, /*require_absolute=*/true);
  std::remove(path);
  CHECK(back.form.field == &F4);
  CHECK(back.points == pts);
  CHECK(back.provenance.empty());

  CHECK_THROWS_AS(io::parse("no_such_file.pset"), UsageError);
}

TEST_CASE("every malformation is rejected with its line number") {
  const std::string good = io::serialize_text(w52_form(), w52_orbit(), "x");

  auto fails_at = [&](const std::string& text, const std::string& needle) {
    try {
      io::parse_text(text, "t");
      FAIL_CHECK("expected a parse error containing \"" << needle << "\"");
    } catch (const UsageError& e) {
      CHECK(std::string(e.what()).find(needle) != std::string::npos);
    }
  };

  fails_at(with_line(good, 1, "POLARSET v2"), "t:1");
  fails_at(with_line(good, 2, "p two"), "t:2");
  fails_at(with_line(good, 2, "q 2"), "t:2");
  fails_at(with_line(good, 3, "k 0"), "t:4");  // modulus length mismatch
  fails_at(with_line(good, 4, "modulus 1"), "t:4");
  fails_at(with_line(good, 4, "modulus 1 2"), "not reduced");
  fails_at(with_line(good, 5, "dim 1"), "t:5");
  fails_at(with_line(good, 5, "dim 99"), "t:5");
  fails_at(with_line(good, 6, "form unitary"), "unknown form kind");
  fails_at(with_line(good, 7, "gram 0,1 1,0"), "t:7");
  // A symplectic gram with a nonzero diagonal entry.
  fails_at(with_line(good, 7,
                     "gram 1,1,0,0,0,0 1,0,0,0,0,0 0,0,0,1,0,0 0,0,1,0,0,0 "
                     "0,0,0,0,0,1 0,0,0,0,1,0"),
           "t:7");
  fails_at(with_line(good, 8, "source x"), "t:8");

  // Body tampering: bad arity, range, zero, order, dupes.
  fails_at(with_line(good, 9, "1,0,0"), "t:9");
  fails_at(with_line(good, 9, "1,0,0,0,0,5"), "out of range");
  fails_at(with_line(good, 9, "0,0,0,0,0,0"), "zero vector");

  // Appending the first body point again lands below the last one.
  const std::size_t l8 = good.find("provenance x\n") + 13;
  const std::string first_pt = good.substr(l8, good.find('\n', l8) - l8 + 1);
  fails_at(good + first_pt, "out of order");

  std::string dup = good;
  {
    // Repeat the last body line verbatim.
    const std::size_t cut = dup.find_last_of('\n', dup.size() - 2);
    dup += dup.substr(cut + 1);
  }
  fails_at(dup, "duplicate point");

  // Unnormalized points only exist for q > 2.
  fails_at(
      "POLARSET v1\np 3\nk 1\nmodulus 1 1\ndim 2\nform symplectic\n"
      "gram 0,1 2,0\nprovenance\n2,1\n",
      "not normalized");

  // Truncations end with "unexpected end of file" at the next line number.
  fails_at("POLARSET v1\np 2\n", "t:3");
  fails_at("POLARSET v1\np 2\nk 1\nmodulus 1 1\ndim 2\nform symplectic\n",
           "t:7");
}

TEST_CASE("a foreign modulus is accepted with a warning") {
  // The table's GF(8) modulus is x^3 + x + 1; use the other primitive cubic.
  const std::string text =
      "POLARSET v1\n"
      "p 2\n"
      "k 3\n"
      "modulus 1 0 1 1\n"
      "dim 2\n"
      "form symplectic\n"
      "gram 0,1 1,0\n"
      "provenance foreign field\n"
      "0,1\n"
      "1,0\n"
      "1,3\n";
  const io::PointSetFile psf = io::parse_text(text);
  REQUIRE(psf.warnings.size() == 1);
  CHECK(psf.warnings[0].find("modulus differs") != std::string::npos);
  CHECK(psf.form.field != &Field::get(2, 3));
  CHECK(psf.form.field->q() == 8);
  CHECK(psf.form.field->modulus() ==
        std::vector<std::uint32_t>{1, 0, 1, 1});
  CHECK(psf.points.size() == 3);
  // Same coefficients, same instance; round trip is byte-exact.
  CHECK(psf.form.field ==
        &Field::get(2, 3, std::vector<std::uint32_t>{1, 0, 1, 1}));
  CHECK(io::serialize_text(psf.form, psf.points, psf.provenance) == text);

  // The standard modulus never warns and lands on the canonical instance.
  CHECK(&Field::get(2, 3, std::vector<std::uint32_t>{1, 1, 0, 1}) ==
        &Field::get(2, 3));

  // x^2 + 1 over GF(3) is irreducible but x has order 4, not 8.
  CHECK_THROWS_AS(
      io::parse_text("POLARSET v1\np 3\nk 2\nmodulus 1 0 1\ndim 2\n"
                     "form symplectic\ngram 0,1 2,0\nprovenance\n"),
      ConfigError);
}

TEST_CASE("absoluteness is enforced only on request") {
  const Field& F4 = Field::get(2, 2);
  const forms::Form h = forms::hermitian_form(F4, pencil::standard_gram(F4, 2));
  // Off the variety: a legal tangent-set carrier, not a variety point.
  const Point off = geom::make_point({1, 0, 0, 2});
  REQUIRE(!forms::is_absolute(h, off));
  const std::string text = io::serialize_text(h, {off}, "");
  CHECK(io::parse_text(text).points.size() == 1);
  CHECK_THROWS_AS(io::parse_text(text, "t", /*require_absolute=*/true),
                  UsageError);
}

TEST_CASE("reports serialize to the fixed schema") {
  const forms::Form f = w52_form();
  verify::Report r = verify::is_partial_ovoid(f, w52_orbit());
  const char* path = "io_report_test.json";
  io::write_report(r, path);
  std::ifstream in(path);
  REQUIRE(in.good());
  nlohmann::json j = nlohmann::json::parse(in);
  std::remove(path);
  CHECK(j["predicate"] == "is_partial_ovoid");
  CHECK(j["outcome"] == "pass");
  CHECK(j.contains("params"));
  CHECK(j.contains("counts"));
  CHECK(j.contains("millis"));
  CHECK(!j.contains("witness"));
}
