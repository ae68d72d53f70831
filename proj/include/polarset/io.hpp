#pragma once

#include <string>
#include <vector>

#include "polarset/forms.hpp"
#include "polarset/verify.hpp"

namespace polarset::io {

using geom::Point;

// ---- POLARSET v1 point-set files ----
//
// Plain text, canonical bytes: a fixed seven-line header (format tag, p, k,
// modulus coefficients, ambient coordinate count, form kind, Gram rows,
// provenance) followed by one point per line as comma-separated element
// encodings.  Body points are normalized and strictly ascending, so a set
// has exactly one serialization on every platform.

struct PointSetFile {
  forms::Form form;
  std::vector<Point> points;  // normalized, ascending, no duplicates
  std::string provenance;
  // Accepted oddities worth surfacing, e.g. a modulus that differs from the
  // table on file (such a field works standalone but cannot be linked into
  // subfield towers).
  std::vector<std::string> warnings;
};

// Canonical text for the set; input points may come unnormalized and in any
// order.  UsageError on points that do not fit the form or a provenance
// string that is not a single line.
std::string serialize_text(const forms::Form& form,
                           const std::vector<Point>& pts,
                           const std::string& provenance);
void serialize(const forms::Form& form, const std::vector<Point>& pts,
               const std::string& provenance, const std::string& path);

// Strict parse of the canonical format; any deviation (wrong arity, value
// out of range, unnormalized or misordered row) is a UsageError carrying
// "name:line:".  require_absolute additionally demands every body point lie
// on the polar space of the header form.
PointSetFile parse_text(const std::string& text,
                        const std::string& name = "pointset",
                        bool require_absolute = false);
PointSetFile parse(const std::string& path, bool require_absolute = false);

// Pretty-printed report JSON (one object), trailing newline included.
void write_report(const verify::Report& r, const std::string& path);

}  // namespace polarset::io
