#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "polarset/forms.hpp"
#include "polarset/geom.hpp"
#include "polarset/verify.hpp"

namespace polarset::pencil {

using geom::Point;
using gf::Elem;
using gf::Field;

// ---- Hermitian pencil over GF(q^2) in dimension 2n ----
//
// A family H_1, ..., H_q of Hermitian varieties sharing their intersection
// with the hyperplane Pi: X_2n = 0, each containing a shifted copy Sigma_i of
// the rational subgeometry.  Lines of H_i with q+1 points in Sigma_i form a
// symplectic space W_i, so partial ovoids placed in W_1 and pushed around by
// the shifts glue into point sets meeting every tangent and contained line
// of H_1 at most once.

// Alternating Gram with +1 on the upper antidiagonal half and -1 on the
// lower: the reference model W(2n-1, q) that seed point sets live in.
geom::Mat standard_gram(const Field& F, std::uint32_t n);

// Darboux basis of an alternating Gram: columns pair up as e_j, f_j with
// gram(e_j, f_j) = 1 and all other pairings zero, so transpose(S) * gram * S
// is the block matrix [[0, I], [-I, 0]].
geom::Mat symplectic_basis(const Field& F, const geom::Mat& gram);

// Re-coordinatization carrying the symplectic space of the given alternating
// Gram onto the reference model; points come back normalized and sorted.
std::vector<Point> to_standard_model(const Field& F, const geom::Mat& gram,
                                     const std::vector<Point>& pts);

struct PencilConfig {
  std::uint32_t n = 0;        // half the dimension, 2 to 4
  const Field* base = nullptr;  // GF(q)
  const Field* ext = nullptr;   // GF(q^2)
  Elem iota = 0;                // iota + iota^q = 0, nonzero
  std::vector<Elem> xis;        // xi_1 = 0; iota(xi^q - xi) covers GF(q)
};

// iota is 1 in even characteristic and otherwise the encoding-least element
// with iota^(q-1) = -1; the xi_i are picked greedily in encoding order until
// iota(xi^q - xi) has taken every base-field value.
PencilConfig make_config(std::uint32_t n, const Field& base);

struct PencilMember {
  std::uint32_t index = 0;  // 1-based position in the pencil
  forms::Form form;         // H_i, Gram scaled by iota to be hermitian
  geom::Mat tau;            // X_n <- X_n + sign * xi_i X_2n
  int sign = 0;
  geom::BaerMap baer;       // subgeometry map with image Sigma_i
  std::vector<Point> sigma;  // Sigma_i, sorted
  forms::BaerRestriction w;  // symplectic model W_i on the subgeometry
};

// Builds H_i, enumerates Sigma_i from its parametrization, fixes the shift
// sign by testing which direction carries Sigma_1 onto Sigma_i and H_1 onto
// H_i, and restricts the form to the subgeometry.  Every Sigma_i point is
// checked to lie on H_i.
PencilMember build_member(const PencilConfig& cfg, std::uint32_t i);

// Matrix of the elation with the given 2n-1 base-field parameters; the group
// they form has order q^(2n-1) and fixes every H_i and W_i.
geom::Mat elation(const PencilConfig& cfg, std::span<const Elem> a);

// Requested size of the seed's intersection with Pi: none, a single point,
// or (only for n = 2 ovoids) the tangent-plane and secant-plane traces.
enum class TraceReq { avoid_plane, exactly_one, tangent_point, secant_conic };

// Carries a partial ovoid of the reference model into Sigma_1, composing the
// Darboux change of coordinates with random symplectic collineations (fixed
// RNG seed) until the Pi-trace matches the request.  Returns the image O_1
// as ambient points of Sigma_1.  ResourceError when the retry budget runs
// out, naming the requirement.
std::vector<Point> place_seed(const PencilConfig& cfg,
                              const std::vector<Point>& seed, TraceReq req,
                              std::uint64_t rng_seed = 0,
                              std::uint32_t retries = 10000);

struct TangentSet {
  std::uint32_t n = 0;
  std::uint32_t q = 0;
  std::uint32_t x = 0;  // points of O_1 off Pi
  std::uint32_t y = 0;  // points of O_1 on Pi
  std::vector<Point> points;               // the union, sorted
  std::vector<std::vector<Point>> orbits;  // O_i per member, sorted
  verify::Report tangent_report;
  // Filled only for n = 2, even q, ovoid seeds; empty predicate otherwise.
  verify::Report maximal_report;
};

// O_i = tau_i(O_1); the union has size xq + y, meets H_1 exactly in O_1, and
// every O_i has the same Pi-trace.  The tangent-set property (and, for n = 2
// ovoids in even characteristic, maximality) is checked through the verify
// predicates; a failing report is returned rather than thrown.
TangentSet assemble_tangent_set(const PencilConfig& cfg,
                                const std::vector<Point>& o1);

// Elliptic-quadric ovoid (1, a, b, a^2 + ab + delta b^2) plus U4 of the
// reference W(3, q), q even; every totally isotropic line meets it exactly
// once.  UsageError in odd characteristic.
std::vector<Point> default_w3_ovoid(const Field& F);

// Exhaustive line scans behind the pencil: every tangent or contained line
// of H_1 meets the union of the Sigma_i in 0, 1, or q+1 points, the q+1
// case lying inside a single member; for n = 2 the tangent lines through the
// off-Pi subgeometry points trace a Hermitian curve on Pi.  UsageError
// outside q <= 3, n <= 3; ResourceError when the ambient space is too large
// to scan (n = 3 needs q = 2).
verify::Report lemma_checks(const PencilConfig& cfg);

}  // namespace polarset::pencil
