#include "polarset/io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "polarset/common.hpp"
#include "polarset/geom.hpp"
#include "polarset/gf.hpp"

namespace polarset::io {
namespace {

using gf::Elem;
using gf::Field;

const char* kTag = "POLARSET v1";

std::string kind_name(forms::FormKind k) {
  return k == forms::FormKind::symplectic ? "symplectic" : "hermitian";
}

// Strict decimal parse consuming the whole token.
std::uint64_t parse_uint(std::string_view tok, const std::string& where) {
  std::uint64_t v = 0;
  const char* end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(tok.data(), end, v);
  if (ec != std::errc() || ptr != end || tok.empty())
    throw UsageError(where + ": expected an unsigned integer, got \"" +
                     std::string(tok) + "\"");
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

// Hands out lines with 1-based numbering; no trailing-newline phantom line.
struct LineReader {
  std::string_view text;
  std::size_t pos = 0;
  std::size_t lineno = 0;

  bool next(std::string_view& line) {
    if (pos >= text.size()) return false;
    const std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) {
      line = text.substr(pos);
      pos = text.size();
    } else {
      line = text.substr(pos, nl - pos);
      pos = nl + 1;
    }
    ++lineno;
    return true;
  }
};

struct Locator {
  const std::string& name;
  const LineReader& reader;

  std::string at() const { return name + ":" + std::to_string(reader.lineno); }
  [[noreturn]] void fail(const std::string& msg) const {
    throw UsageError(at() + ": " + msg);
  }
};

// Header line "key rest"; rest may be empty only when allow_empty.
std::string_view keyed_line(const Locator& loc, std::string_view line,
                            std::string_view key, bool allow_empty = false) {
  if (line == key && allow_empty) return {};
  if (line.size() <= key.size() || line.substr(0, key.size()) != key ||
      line[key.size()] != ' ')
    loc.fail("expected \"" + std::string(key) + " ...\"");
  return line.substr(key.size() + 1);
}

Elem parse_elem(const Locator& loc, std::string_view tok, const Field& F) {
  const std::uint64_t v = parse_uint(tok, loc.at());
  if (v >= F.q())
    loc.fail("encoding " + std::to_string(v) + " out of range for GF(" +
             std::to_string(F.q()) + ")");
  return static_cast<Elem>(v);
}

void check_points_fit(const forms::Form& form, const std::vector<Point>& pts) {
  const Field& F = *form.field;
  const std::uint32_t dim = form.gram.n;
  for (const Point& p : pts) {
    if (p.n != dim)
      throw UsageError("point has " + std::to_string(p.n) +
                       " coordinates, the form needs " + std::to_string(dim));
    if (geom::is_zero(p)) throw UsageError("the zero vector is not a point");
    for (std::uint8_t i = 0; i < p.n; ++i)
      if (p.c[i] >= F.q())
        throw UsageError("coordinate encoding " + std::to_string(p.c[i]) +
                         " out of range for GF(" + std::to_string(F.q()) + ")");
  }
}

}  // namespace

std::string serialize_text(const forms::Form& form,
                           const std::vector<Point>& pts,
                           const std::string& provenance) {
  if (form.field == nullptr) throw UsageError("form carries no field");
  if (provenance.find_first_of("\r\n") != std::string::npos)
    throw UsageError("provenance must be a single line");
  check_points_fit(form, pts);
  const Field& F = *form.field;

  std::vector<Point> body;
  body.reserve(pts.size());
  for (const Point& p : pts) body.push_back(geom::normalize(F, p));
  std::sort(body.begin(), body.end());
  body.erase(std::unique(body.begin(), body.end()), body.end());

  std::ostringstream out;
  out << kTag << "\n";
  out << "p " << F.p() << "\n";
  out << "k " << F.k() << "\n";
  out << "modulus";
  for (std::uint32_t c : F.modulus()) out << ' ' << c;
  out << "\n";
  out << "dim " << static_cast<std::uint32_t>(form.gram.n) << "\n";
  out << "form " << kind_name(form.kind) << "\n";
  out << "gram";
  for (std::uint8_t i = 0; i < form.gram.n; ++i) {
    out << ' ';
    for (std::uint8_t j = 0; j < form.gram.n; ++j) {
      if (j > 0) out << ',';
      out << form.gram.a[i][j];
    }
  }
  out << "\n";
  out << "provenance";
  if (!provenance.empty()) out << ' ' << provenance;
  out << "\n";
  for (const Point& p : body) {
    for (std::uint8_t i = 0; i < p.n; ++i) {
      if (i > 0) out << ',';
      out << p.c[i];
    }
    out << "\n";
  }
  return out.str();
}

void serialize(const forms::Form& form, const std::vector<Point>& pts,
               const std::string& provenance, const std::string& path) {
  const std::string text = serialize_text(form, pts, provenance);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
  if (!out.flush()) throw UsageError("write failed for " + path);
}

PointSetFile parse_text(const std::string& text, const std::string& name,
                        bool require_absolute) {
  LineReader reader{text};
  Locator loc{name, reader};
  std::string_view line;

  auto need_line = [&](const char* what) {
    if (!reader.next(line)) {
      ++reader.lineno;
      loc.fail(std::string("unexpected end of file, expected ") + what);
    }
  };

  need_line("the format tag");
  if (line != kTag) loc.fail("not a POLARSET v1 file");

  need_line("p");
  const std::uint64_t p = parse_uint(keyed_line(loc, line, "p"), loc.at());
  need_line("k");
  const std::uint64_t k = parse_uint(keyed_line(loc, line, "k"), loc.at());

  need_line("the modulus");
  std::vector<std::uint32_t> coeffs;
  for (std::string_view tok : split(keyed_line(loc, line, "modulus"), ' ')) {
    const std::uint64_t c = parse_uint(tok, loc.at());
    if (c >= p) loc.fail("modulus coefficient " + std::to_string(c) +
                         " not reduced mod " + std::to_string(p));
    coeffs.push_back(static_cast<std::uint32_t>(c));
  }
  if (coeffs.size() != k + 1)
    loc.fail("modulus needs " + std::to_string(k + 1) + " coefficients, got " +
             std::to_string(coeffs.size()));

  PointSetFile out;
  const Field* F = nullptr;
  try {
    const Field& standard = Field::get(static_cast<std::uint32_t>(p),
                                       static_cast<std::uint32_t>(k));
    if (standard.modulus() == coeffs) F = &standard;
  } catch (const ConfigError&) {
    // No table entry for (p, k); the file's own modulus decides below.
  }
  if (F == nullptr) {
    try {
      F = &Field::get(static_cast<std::uint32_t>(p),
                      static_cast<std::uint32_t>(k), coeffs);
    } catch (const ConfigError& e) {
      throw ConfigError(loc.at() + ": " + e.what());
    }
    out.warnings.push_back("modulus differs from the table on file for GF(" +
                           std::to_string(F->q()) +
                           "); subfield embeddings unavailable");
  }

  need_line("dim");
  const std::uint64_t dim = parse_uint(keyed_line(loc, line, "dim"), loc.at());
  if (dim < 2 || dim > geom::kMaxCoords)
    loc.fail("dim must be between 2 and " + std::to_string(geom::kMaxCoords));

  need_line("the form kind");
  const std::string_view kind = keyed_line(loc, line, "form");
  if (kind != "symplectic" && kind != "hermitian")
    loc.fail("unknown form kind \"" + std::string(kind) + "\"");

  need_line("the Gram matrix");
  const auto rows = split(keyed_line(loc, line, "gram"), ' ');
  if (rows.size() != dim)
    loc.fail("gram needs " + std::to_string(dim) + " rows, got " +
             std::to_string(rows.size()));
  geom::Mat gram;
  gram.n = static_cast<std::uint8_t>(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    const auto entries = split(rows[i], ',');
    if (entries.size() != dim)
      loc.fail("gram row " + std::to_string(i + 1) + " needs " +
               std::to_string(dim) + " entries");
    for (std::size_t j = 0; j < dim; ++j)
      gram.a[i][j] = parse_elem(loc, entries[j], *F);
  }
  try {
    out.form = kind == "symplectic" ? forms::symplectic_form(*F, gram)
                                    : forms::hermitian_form(*F, gram);
  } catch (const Error& e) {
    loc.fail(e.what());
  }

  need_line("the provenance");
  out.provenance = std::string(keyed_line(loc, line, "provenance", true));

  while (reader.next(line)) {
    const auto entries = split(line, ',');
    if (entries.size() != dim)
      loc.fail("point needs " + std::to_string(dim) + " coordinates, got " +
               std::to_string(entries.size()));
    Point pt;
    pt.n = static_cast<std::uint8_t>(dim);
    for (std::size_t j = 0; j < dim; ++j)
      pt.c[j] = parse_elem(loc, entries[j], *F);
    if (geom::is_zero(pt)) loc.fail("the zero vector is not a point");
    if (geom::normalize(*F, pt) != pt)
      loc.fail("point is not normalized (first nonzero coordinate must be 1)");
    if (!out.points.empty() && !(out.points.back() < pt))
      loc.fail(out.points.back() == pt ? "duplicate point"
                                       : "points out of order");
    if (require_absolute && !forms::is_absolute(out.form, pt))
      loc.fail("point does not lie on the polar space");
    out.points.push_back(pt);
  }
  return out;
}

PointSetFile parse(const std::string& path, bool require_absolute) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_text(buf.str(), path, require_absolute);
}

void write_report(const verify::Report& r, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << r.to_json().dump(2) << "\n";
  if (!out.flush()) throw UsageError("write failed for " + path);
}

}  // namespace polarset::io
