#include "polarset/sherk.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <string>

#include "polarset/common.hpp"

namespace polarset::sherk {

namespace {

Elem tr(const Field& E, std::uint32_t s, Elem y) {
  return E.add(y, E.add(E.frobenius(y, s), E.frobenius(y, 2 * s)));
}

Elem norm(const Field& E, std::uint32_t s, Elem y) {
  return E.mul(y, E.mul(E.frobenius(y, s), E.frobenius(y, 2 * s)));
}

// a scaled by the base-field scalar l, slotwise.
Surface scaled(const Surface& a, Elem l) {
  const Field& base = *a.base;
  const Field& E = *a.ext;
  const Elem le = E.embed_from(base, l);
  Surface out = a;
  out.alpha = base.mul(l, a.alpha);
  out.beta = E.mul(le, a.beta);
  out.gamma = E.mul(le, a.gamma);
  out.delta = base.mul(l, a.delta);
  return out;
}

bool same_tuple(const Surface& a, const Surface& b) {
  return a.alpha == b.alpha && a.beta == b.beta && a.gamma == b.gamma &&
         a.delta == b.delta;
}

Surface combine(const Surface& a, const Surface& b, Elem l, Elem m) {
  const Field& base = *a.base;
  const Field& E = *a.ext;
  const Elem le = E.embed_from(base, l);
  const Elem me = E.embed_from(base, m);
  Surface out = a;
  out.alpha = base.add(base.mul(l, a.alpha), base.mul(m, b.alpha));
  out.beta = E.add(E.mul(le, a.beta), E.mul(me, b.beta));
  out.gamma = E.add(E.mul(le, a.gamma), E.mul(me, b.gamma));
  out.delta = base.add(base.mul(l, a.delta), base.mul(m, b.delta));
  return out;
}

}  // namespace

Surface make_surface(const Field& base, Elem alpha, Elem beta, Elem gamma,
                     Elem delta) {
  const Field& ext = Field::get(base.p(), base.k() * 3);
  if (alpha >= base.q() || delta >= base.q()) {
    throw UsageError("alpha and delta must be base field elements");
  }
  if (beta >= ext.q() || gamma >= ext.q()) {
    throw UsageError("beta and gamma must be cubic extension elements");
  }
  if (alpha == 0 && beta == 0 && gamma == 0 && delta == 0) {
    throw UsageError("the zero tuple cuts out no surface");
  }
  Surface s;
  s.base = &base;
  s.ext = &ext;
  s.alpha = alpha;
  s.beta = beta;
  s.gamma = gamma;
  s.delta = delta;
  return s;
}

std::uint32_t inf_code(const Surface& S) {
  return static_cast<std::uint32_t>(S.ext->q());
}

Elem surface_value(const Surface& S, Elem x) {
  const Field& base = *S.base;
  const Field& E = *S.ext;
  const std::uint32_t s = base.k();
  Elem v = E.mul(E.embed_from(base, S.alpha), norm(E, s, x));
  const Elem xq1 = E.mul(E.frobenius(x, s), x);
  v = E.add(v, tr(E, s, E.mul(E.frobenius(S.beta, 2 * s), xq1)));
  v = E.add(v, tr(E, s, E.mul(S.gamma, x)));
  return E.add(v, E.embed_from(base, S.delta));
}

std::vector<std::uint32_t> sherk_points(const Surface& S) {
  std::vector<std::uint32_t> out;
  for (Elem x = 0; x < S.ext->q(); ++x) {
    if (surface_value(S, x) == 0) out.push_back(x);
  }
  if (S.alpha == 0) out.push_back(inf_code(S));
  return out;
}

bool proportional(const Surface& a, const Surface& b) {
  for (Elem l = 1; l < a.base->q(); ++l) {
    if (same_tuple(scaled(a, l), b)) return true;
  }
  return false;
}

Pencil make_pencil(const Surface& a, const Surface& b) {
  if (a.base != b.base) throw UsageError("pencil generators over one field");
  if (proportional(a, b)) {
    throw UsageError("proportional surfaces span no pencil");
  }
  const Field& base = *a.base;
  Pencil p;
  p.members.reserve(base.q() + 1);
  for (Elem t = 0; t < base.q(); ++t) {
    p.members.push_back(combine(a, b, base.one(), t));
  }
  p.members.push_back(combine(a, b, 0, base.one()));

  std::set<std::uint32_t> covered;
  p.base_locus = sherk_points(p.members[0]);
  covered.insert(p.base_locus.begin(), p.base_locus.end());
  for (std::size_t i = 1; i < p.members.size(); ++i) {
    const auto pts = sherk_points(p.members[i]);
    covered.insert(pts.begin(), pts.end());
    std::vector<std::uint32_t> meet;
    std::set_intersection(p.base_locus.begin(), p.base_locus.end(),
                          pts.begin(), pts.end(), std::back_inserter(meet));
    p.base_locus = std::move(meet);
  }
  if (covered.size() != a.ext->q() + 1) {
    throw InternalError("pencil members fail to cover the line");
  }
  return p;
}

verify::Report lemma_sherk_scan(const Field& base) {
  const auto t0 = std::chrono::steady_clock::now();
  const std::uint64_t q = base.q();
  if (q > 4) {
    throw UsageError("the exhaustive coefficient scan supports q <= 4");
  }
  const Field& E = Field::get(base.p(), base.k() * 3);
  const std::uint32_t s = base.k();

  verify::Report r;
  r.predicate = "pencil_base_locus_nonempty";
  r.params = {{"q", q}};

  std::set<Elem> base_cubes;  // embedded c^3 over nonzero c
  for (Elem c = 1; c < q; ++c) {
    base_cubes.insert(E.embed_from(base, base.mul(c, base.mul(c, c))));
  }
  const Surface norm_surface = make_surface(base, base.one(), 0, 0,
                                            base.neg(base.one()));

  std::uint64_t total = 0, qualifying = 0, empty = 0;
  nlohmann::json witness;
  for (Elem beta = 0; beta < E.q(); ++beta) {
    for (Elem gamma = 0; gamma < E.q(); ++gamma) {
      if (beta == 0 && gamma == 0) continue;
      ++total;
      bool qual = (beta == 0 || gamma == 0);
      if (!qual) {
        const Elem nb = norm(E, s, beta);
        if (!base_cubes.contains(nb)) {
          qual = true;
        } else {
          const Elem gb = E.mul(gamma, beta);
          for (Elem c = 1; c < q && !qual; ++c) {
            const Elem c3 = E.embed_from(base, base.mul(c, base.mul(c, c)));
            const Elem mc2 =
                E.embed_from(base, base.neg(base.mul(c, c)));
            if (c3 == nb && gb != mc2) qual = true;
          }
        }
      }
      if (!qual) continue;
      ++qualifying;
      const Pencil p =
          make_pencil(norm_surface, make_surface(base, 0, beta, gamma, 0));
      if (p.base_locus.empty()) {
        if (empty == 0) {
          witness = {{"beta", beta}, {"gamma", gamma}};
        }
        ++empty;
      }
    }
  }
  r.counts = {{"pairs", total},
              {"qualifying", qualifying},
              {"nonqualifying", total - qualifying},
              {"empty_base_locus", empty}};
  if (empty == 0) {
    r.outcome = "pass";
  } else {
    r.outcome = "fail";
    r.witness = witness;
  }
  r.millis = static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::milliseconds>(
          std::chrono::steady_clock::now() - t0)
          .count());
  return r;
}

}  // namespace polarset::sherk
