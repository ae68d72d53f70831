#include "polarset/verify.hpp"

#include <algorithm>
#include <chrono>
#include <optional>
#include <thread>

namespace polarset::verify {

using gf::Elem;
using gf::Field;

namespace {

class Stopwatch {
 public:
  std::uint64_t millis() const {
    return static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::milliseconds>(
            std::chrono::steady_clock::now() - start_)
            .count());
  }

 private:
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

json form_json(const forms::Form& f) {
  return json{{"kind", f.kind == forms::FormKind::symplectic ? "symplectic"
                                                             : "hermitian"},
              {"p", f.field->p()},
              {"k", f.field->k()},
              {"coords", f.gram.n}};
}

// Flattened evaluation state: right_[j] = gram * conj(P_j) and self_[j] =
// eval(P_j, P_j), so a pair evaluation is an n-term dot product through local
// lookup tables.  Cheap enough for billions of pairs.
class PairKernel {
 public:
  PairKernel(const forms::Form& f, const std::vector<Point>& pts)
      : f_(f), F_(*f.field), n_(f.gram.n), pts_(pts) {
    const std::uint32_t q = F_.q();
    if (static_cast<std::uint64_t>(q) * q <= (1u << 21)) {
      mul_tab_.resize(static_cast<std::size_t>(q) * q);
      add_tab_.resize(static_cast<std::size_t>(q) * q);
      for (Elem a = 0; a < q; ++a) {
        for (Elem b = 0; b < q; ++b) {
          mul_tab_[static_cast<std::size_t>(a) * q + b] = F_.mul(a, b);
          add_tab_[static_cast<std::size_t>(a) * q + b] = F_.add(a, b);
        }
      }
    }
    conj_tab_.resize(q);
    for (Elem a = 0; a < q; ++a) conj_tab_[a] = forms::conj(f_, a);

    right_.resize(pts.size() * n_);
    self_.resize(pts.size());
    for (std::size_t j = 0; j < pts.size(); ++j) {
      if (pts[j].n != n_) throw DomainError("point size does not match the form");
      for (std::uint32_t i = 0; i < n_; ++i) {
        Elem acc = 0;
        for (std::uint32_t t = 0; t < n_; ++t) {
          acc = F_.add(acc, F_.mul(f_.gram.a[i][t], conj_tab_[pts[j].c[t]]));
        }
        right_[j * n_ + i] = acc;
      }
    }
    for (std::size_t j = 0; j < pts.size(); ++j) self_[j] = dot(j, j);
  }

  const Field& field() const { return F_; }
  std::size_t size() const { return pts_.size(); }
  Elem self(std::size_t j) const { return self_[j]; }
  Elem conj_of(Elem a) const { return conj_tab_[a]; }

  Elem mul(Elem a, Elem b) const {
    if (!mul_tab_.empty()) {
      return mul_tab_[static_cast<std::size_t>(a) * F_.q() + b];
    }
    return F_.mul(a, b);
  }
  Elem add(Elem a, Elem b) const {
    if (!add_tab_.empty()) {
      return add_tab_[static_cast<std::size_t>(a) * F_.q() + b];
    }
    return F_.add(a, b);
  }

  // eval(P_i, P_j)
  Elem dot(std::size_t i, std::size_t j) const { return dot_ext(pts_[i], j); }

  // eval(x, P_j) for an arbitrary point
  Elem dot_ext(const Point& x, std::size_t j) const {
    const Elem* w = &right_[j * n_];
    Elem acc = 0;
    for (std::uint32_t t = 0; t < n_; ++t) {
      acc = add(acc, mul(x.c[t], w[t]));
    }
    return acc;
  }

  // det of the restricted gram on the pair span; zero means non-secant
  Elem pair_det(std::size_t i, std::size_t j) const {
    const Elem b = dot(i, j);
    return F_.sub(mul(self_[i], self_[j]), mul(b, conj_tab_[b]));
  }

  // Scans all i < j pairs, in parallel for large inputs, and returns the
  // smallest (i, j) for which bad(i, j) holds.  Deterministic under any
  // thread count.
  template <class BadPair>
  std::optional<std::pair<std::size_t, std::size_t>> first_bad_pair(
      BadPair bad, std::uint64_t* pairs_out) const {
    const std::size_t n = pts_.size();
    *pairs_out = n < 2 ? 0 : n * (n - 1) / 2;
    if (n < 2) return std::nullopt;
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    const unsigned workers = n < 512 ? 1 : std::min<unsigned>(hw, 8);

    const std::pair<std::size_t, std::size_t> none{n, n};
    std::vector<std::pair<std::size_t, std::size_t>> hits(workers, none);
    auto run = [&](unsigned w) {
      auto local = none;
      for (std::size_t i = w; i < n; i += workers) {
        if (i >= local.first) break;  // later rows cannot beat this hit
        for (std::size_t j = i + 1; j < n; ++j) {
          if (bad(i, j)) {
            local = {i, j};
            break;
          }
        }
      }
      hits[w] = local;
    };
    if (workers == 1) {
      run(0);
    } else {
      std::vector<std::thread> ts;
      ts.reserve(workers);
      for (unsigned w = 0; w < workers; ++w) ts.emplace_back(run, w);
      for (auto& t : ts) t.join();
    }
    const auto best = *std::min_element(hits.begin(), hits.end());
    if (best.first == n) return std::nullopt;
    return best;
  }

 private:
  const forms::Form& f_;
  const Field& F_;
  std::uint32_t n_;
  const std::vector<Point>& pts_;
  std::vector<Elem> mul_tab_, add_tab_, conj_tab_;
  std::vector<Elem> right_;
  std::vector<Elem> self_;
};

json pair_witness(const std::vector<Point>& pts, std::size_t i, std::size_t j,
                  const char* reason) {
  return json{{"reason", reason},
              {"i", i},
              {"j", j},
              {"first", point_json(pts[i])},
              {"second", point_json(pts[j])}};
}

}  // namespace

json point_json(const Point& p) {
  json arr = json::array();
  for (std::uint8_t i = 0; i < p.n; ++i) arr.push_back(p.c[i]);
  return arr;
}

json Report::to_json() const {
  json out{{"predicate", predicate},
           {"params", params},
           {"outcome", outcome},
           {"counts", counts},
           {"millis", millis}};
  if (!witness.is_null()) out["witness"] = witness;
  return out;
}

Report is_partial_ovoid(const forms::Form& f, const std::vector<Point>& pts) {
  Stopwatch sw;
  Report r;
  r.predicate = "is_partial_ovoid";
  r.params = form_json(f);
  r.params["points"] = pts.size();
  r.counts["points"] = pts.size();

  if (f.kind == forms::FormKind::hermitian) {
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (!forms::is_absolute(f, pts[i])) {
        r.outcome = "precondition_failed";
        r.witness = json{{"reason", "point off the variety"},
                         {"i", i},
                         {"point", point_json(pts[i])}};
        r.millis = sw.millis();
        return r;
      }
    }
  }
  const PairKernel k(f, pts);
  std::uint64_t pairs = 0;
  const auto hit = k.first_bad_pair(
      [&k](std::size_t i, std::size_t j) { return k.dot(i, j) == 0; }, &pairs);
  r.counts["pairs"] = pairs;
  if (hit) {
    r.outcome = "fail";
    r.witness = pair_witness(pts, hit->first, hit->second, "perpendicular pair");
  } else {
    r.outcome = "pass";
  }
  r.millis = sw.millis();
  return r;
}

Report is_maximal_partial_ovoid(const forms::Form& f,
                                const std::vector<Point>& pts) {
  Stopwatch sw;
  Report r = is_partial_ovoid(f, pts);
  r.predicate = "is_maximal_partial_ovoid";
  if (!r.passed()) {
    r.witness["while"] = "checking the partial ovoid property";
    r.millis = sw.millis();
    return r;
  }
  const PairKernel k(f, pts);
  geom::PointSet members;
  for (const Point& p : pts) members.insert(geom::normalize(*f.field, p));
  std::uint64_t candidates = 0;
  for (const Point& x : geom::all_points(f.gram.n - 1, *f.field)) {
    if (!forms::is_absolute(f, x) || members.count(x) != 0) continue;
    ++candidates;
    bool extends = true;
    for (std::size_t j = 0; j < pts.size(); ++j) {
      if (k.dot_ext(x, j) == 0) {
        extends = false;
        break;
      }
    }
    if (extends) {
      r.outcome = "fail";
      r.witness =
          json{{"reason", "extension point exists"}, {"point", point_json(x)}};
      break;
    }
  }
  r.counts["candidates"] = candidates;
  r.millis = sw.millis();
  return r;
}

Report is_tangent_set(const forms::Form& f, const std::vector<Point>& pts) {
  Stopwatch sw;
  Report r;
  r.predicate = "is_tangent_set";
  r.params = form_json(f);
  r.params["points"] = pts.size();
  r.counts["points"] = pts.size();
  if (f.kind != forms::FormKind::hermitian) {
    throw DomainError("tangent sets are defined against a hermitian form");
  }
  // duplicates would otherwise masquerade as a "pair" in the secant test
  geom::PointSet seen;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (!seen.insert(geom::normalize(*f.field, pts[i])).second) {
      r.outcome = "fail";
      r.witness =
          json{{"reason", "duplicate point"}, {"i", i}, {"point", point_json(pts[i])}};
      r.millis = sw.millis();
      return r;
    }
  }
  const PairKernel k(f, pts);
  std::uint64_t pairs = 0;
  const auto hit = k.first_bad_pair(
      [&k](std::size_t i, std::size_t j) { return k.pair_det(i, j) == 0; },
      &pairs);
  r.counts["pairs"] = pairs;
  if (hit) {
    r.outcome = "fail";
    r.witness = pair_witness(pts, hit->first, hit->second, "non-secant pair");
  } else {
    r.outcome = "pass";
  }
  r.millis = sw.millis();
  return r;
}

Report is_maximal_tangent_set(const forms::Form& f,
                              const std::vector<Point>& pts) {
  Stopwatch sw;
  Report r = is_tangent_set(f, pts);
  r.predicate = "is_maximal_tangent_set";
  if (!r.passed()) {
    r.witness["while"] = "checking the tangent set property";
    r.millis = sw.millis();
    return r;
  }
  const Field& F = *f.field;
  const PairKernel k(f, pts);
  geom::PointSet members;
  for (const Point& p : pts) members.insert(geom::normalize(F, p));
  std::uint64_t candidates = 0;
  for (const Point& x : geom::all_points(f.gram.n - 1, F)) {
    if (members.count(x) != 0) continue;
    ++candidates;
    const Elem sx = forms::eval(f, x, x);
    bool extends = true;
    for (std::size_t j = 0; j < pts.size(); ++j) {
      const Elem b = k.dot_ext(x, j);
      const Elem det = F.sub(k.mul(sx, k.self(j)), k.mul(b, k.conj_of(b)));
      if (det == 0) {
        extends = false;
        break;
      }
    }
    if (extends) {
      r.outcome = "fail";
      r.witness =
          json{{"reason", "extension point exists"}, {"point", point_json(x)}};
      break;
    }
  }
  r.counts["candidates"] = candidates;
  r.millis = sw.millis();
  return r;
}

// ---- exact search ----

namespace {

class Bitset {
 public:
  explicit Bitset(std::size_t n = 0) : w_((n + 63) / 64, 0) {}
  void set(std::size_t i) { w_[i >> 6] |= 1ull << (i & 63); }
  void clear(std::size_t i) { w_[i >> 6] &= ~(1ull << (i & 63)); }
  bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
  void and_with(const Bitset& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
  }
  void and_not(const Bitset& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
  }
  bool empty() const {
    for (auto w : w_) {
      if (w) return false;
    }
    return true;
  }
  // lowest set bit; only valid when not empty
  std::size_t lowest() const {
    for (std::size_t wi = 0;; ++wi) {
      if (w_[wi]) return wi * 64 + static_cast<std::size_t>(__builtin_ctzll(w_[wi]));
    }
  }

 private:
  std::vector<std::uint64_t> w_;
};

// Branch and bound with a greedy-coloring bound.  Candidates are processed in
// reverse coloring order, so color numbers along the loop never increase and
// the first bounded vertex prunes the whole remainder.
struct Searcher {
  std::size_t n = 0;
  std::vector<Bitset> adj;
  std::vector<std::uint32_t> best, current;
  std::uint64_t nodes = 0;
  std::uint64_t node_guard = 0;
  std::uint32_t target = 0;

  bool done() const { return target != 0 && best.size() >= target; }

  void expand(const Bitset& cand) {
    ++nodes;
    if (node_guard != 0 && nodes > node_guard) {
      throw ResourceError("search node guard exceeded");
    }
    std::vector<std::uint32_t> order, color;
    Bitset uncolored = cand;
    std::uint32_t c = 0;
    while (!uncolored.empty()) {
      ++c;
      Bitset avail = uncolored;
      while (!avail.empty()) {
        const std::size_t v = avail.lowest();
        order.push_back(static_cast<std::uint32_t>(v));
        color.push_back(c);
        uncolored.clear(v);
        avail.clear(v);
        avail.and_not(adj[v]);  // keep the class independent
      }
    }
    for (std::size_t idx = order.size(); idx-- > 0;) {
      if (current.size() + color[idx] <= best.size()) return;
      const std::uint32_t v = order[idx];
      Bitset next = cand;
      next.and_with(adj[v]);
      // drop vertices already branched on at this level
      for (std::size_t later = idx + 1; later < order.size(); ++later) {
        next.clear(order[later]);
      }
      current.push_back(v);
      if (current.size() > best.size()) best = current;
      if (!done() && !next.empty()) expand(next);
      current.pop_back();
      if (done()) return;
    }
  }
};

}  // namespace

SearchResult max_partial_ovoid_search(const forms::Form& f,
                                      const SearchOptions& opts) {
  const auto pts = forms::absolute_points(f);
  if (pts.size() > 5000) {
    throw ResourceError("variety has " + std::to_string(pts.size()) +
                        " points, above the search guard of 5000");
  }
  const PairKernel k(f, pts);
  const std::size_t n = pts.size();

  std::vector<std::uint32_t> degree(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (k.dot(i, j) != 0) {
        ++degree[i];
        ++degree[j];
      }
    }
  }
  std::vector<std::uint32_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = static_cast<std::uint32_t>(i);
  std::sort(perm.begin(), perm.end(), [&](std::uint32_t a, std::uint32_t b) {
    if (degree[a] != degree[b]) return degree[a] > degree[b];
    return a < b;
  });

  Searcher s;
  s.n = n;
  s.adj.assign(n, Bitset(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (k.dot(perm[a], perm[b]) != 0) {
        s.adj[a].set(b);
        s.adj[b].set(a);
      }
    }
  }
  s.target = opts.target;
  s.node_guard = opts.node_guard;

  if (n > 0) {
    Bitset all(n);
    for (std::size_t i = 0; i < n; ++i) all.set(i);
    s.expand(all);
  }

  SearchResult out;
  out.nodes = s.nodes;
  out.best.reserve(s.best.size());
  for (std::uint32_t v : s.best) out.best.push_back(pts[perm[v]]);
  std::sort(out.best.begin(), out.best.end());
  out.proven_optimal = !s.done();
  return out;
}

}  // namespace polarset::verify
