#include "polarset/lift.hpp"

#include <map>
#include <set>
#include <string>

#include "polarset/common.hpp"

namespace polarset::lift {

namespace {

// preimages of the relative norm, keyed by base-field encoding
std::map<Elem, std::vector<Elem>> norm_classes(const Field& base,
                                               const Field& ext) {
  std::map<Elem, std::vector<Elem>> classes;
  for (Elem t = 1; t < ext.q(); ++t) {
    classes[ext.project_to(base, ext.rel_norm(base, t))].push_back(t);
  }
  for (const auto& [v, ts] : classes) {
    if (v == 0 || ts.size() != base.q() + 1) {
      throw InternalError("norm fibres are off size");
    }
  }
  return classes;
}

ConeLift run_lift(const LiftFrame& frame, const std::vector<Point>& t,
                  bool source_maximal) {
  const pencil::PencilConfig& cfg = *frame.cfg;
  const Field& F = *cfg.base;
  const Field& E = *cfg.ext;
  const std::uint32_t d = 2 * cfg.n;
  const Elem g = frame.form.gram.a[d][d];

  const auto classes = norm_classes(F, E);
  ConeLift out;
  std::set<Point> pts;
  for (const Point& src : t) {
    if (src.n != d) {
      throw UsageError("lift source must use the hyperplane coordinates");
    }
    Point r = src;
    r.n = static_cast<std::uint8_t>(d + 1);
    r.c[d] = 0;
    const Elem c = forms::eval(frame.form, r, r);
    if (c == 0) {
      ++out.on_h;
      pts.insert(r);
      continue;
    }
    ++out.off_h;
    // absolute points of <P, r> solve norm(t) = -c/g, a full norm fibre
    const Elem want = E.project_to(F, E.neg(E.div(c, g)));
    for (Elem lam : classes.at(want)) {
      Point p = r;
      p.c[d] = lam;
      if (!forms::is_absolute(frame.form, p)) {
        throw InternalError("a cone point misses the variety");
      }
      pts.insert(geom::normalize(E, p));
    }
  }
  const std::uint64_t expected =
      std::uint64_t{F.q() + 1} * out.off_h + out.on_h;
  if (pts.size() != expected) {
    throw InternalError("lifted lines overlap: got " +
                        std::to_string(pts.size()) + ", expected " +
                        std::to_string(expected));
  }
  out.points.assign(pts.begin(), pts.end());
  out.ovoid_report = verify::is_partial_ovoid(frame.form, out.points);
  if (source_maximal && out.ovoid_report.passed()) {
    out.maximal_report =
        verify::is_maximal_partial_ovoid(frame.form, out.points);
  }
  return out;
}

}  // namespace

LiftFrame make_frame(const pencil::PencilConfig& cfg, Elem g) {
  const Field& F = *cfg.base;
  const Field& E = *cfg.ext;
  if (g == 0 || g >= F.q()) {
    throw UsageError("diagonal entry must be a nonzero base-field element");
  }
  const std::uint32_t d = 2 * cfg.n;
  const pencil::PencilMember first = pencil::build_member(cfg, 1);
  geom::Mat gram;
  gram.n = static_cast<std::uint8_t>(d + 1);
  for (std::uint32_t i = 0; i < d; ++i) {
    for (std::uint32_t j = 0; j < d; ++j) {
      gram.a[i][j] = first.form.gram.a[i][j];
    }
  }
  gram.a[d][d] = E.embed_from(F, g);

  LiftFrame frame;
  frame.cfg = &cfg;
  frame.form = forms::hermitian_form(E, gram);
  frame.apex = geom::unit_point(d + 1, d);
  const Point eq[1] = {geom::unit_point(d + 1, d)};
  frame.perp = geom::from_equations(E, d + 1, eq);
  if (forms::is_absolute(frame.form, frame.apex)) {
    throw InternalError("apex landed on the variety");
  }
  if (forms::perp(frame.form, frame.apex) != frame.perp) {
    throw InternalError("apex perp is not the last-coordinate hyperplane");
  }
  return frame;
}

ConeLift cone_lift_points(const LiftFrame& frame, const std::vector<Point>& t,
                          bool source_maximal) {
  const pencil::PencilConfig& cfg = *frame.cfg;
  const Field& E = *cfg.ext;
  for (const Point& p : t) {
    if (p.n != 2 * cfg.n) {
      throw UsageError("lift source must use the hyperplane coordinates");
    }
  }
  geom::Mat sub_gram;
  sub_gram.n = static_cast<std::uint8_t>(2 * cfg.n);
  for (std::uint32_t i = 0; i < sub_gram.n; ++i) {
    for (std::uint32_t j = 0; j < sub_gram.n; ++j) {
      sub_gram.a[i][j] = frame.form.gram.a[i][j];
    }
  }
  const forms::Form h = forms::hermitian_form(E, sub_gram);
  if (!verify::is_tangent_set(h, t).passed()) {
    throw UsageError("lift source fails the tangent-set check");
  }
  if (source_maximal && !verify::is_maximal_tangent_set(h, t).passed()) {
    throw UsageError("lift source is not a maximal tangent set");
  }
  return run_lift(frame, t, source_maximal);
}

ConeLift cone_lift(const LiftFrame& frame, const pencil::TangentSet& t) {
  if (!t.tangent_report.passed()) {
    throw UsageError("lift source carries a failing tangent-set report");
  }
  const bool source_maximal = t.maximal_report.passed();
  ConeLift out = run_lift(frame, t.points, source_maximal);
  if (out.on_h != t.x + t.y ||
      out.points.size() != size_law(t.x, t.y, t.q)) {
    throw InternalError("lift size disagrees with the trace law");
  }
  return out;
}

std::uint64_t size_law(std::uint64_t x, std::uint64_t y, std::uint64_t q) {
  return x * q * q + y;
}

}  // namespace polarset::lift
