#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <unordered_set>
#include <vector>

#include "polarset/gf.hpp"

namespace polarset::geom {

using gf::Elem;
using gf::Field;

// Largest supported number of homogeneous coordinates (ambient PG(8, q)).
constexpr std::uint32_t kMaxCoords = 9;

// Point of PG(n-1, q) as a homogeneous coordinate vector.  Most code keeps
// points normalized (first nonzero coordinate equal to 1) so that equality of
// structs is equality of projective points.
struct Point {
  std::uint8_t n = 0;
  std::array<Elem, kMaxCoords> c{};

  Elem& operator[](std::size_t i) { return c[i]; }
  Elem operator[](std::size_t i) const { return c[i]; }

  friend bool operator==(const Point& a, const Point& b) {
    if (a.n != b.n) return false;
    for (std::uint8_t i = 0; i < a.n; ++i) {
      if (a.c[i] != b.c[i]) return false;
    }
    return true;
  }
  friend std::strong_ordering operator<=>(const Point& a, const Point& b) {
    if (a.n != b.n) return a.n <=> b.n;
    for (std::uint8_t i = 0; i < a.n; ++i) {
      if (a.c[i] != b.c[i]) return a.c[i] <=> b.c[i];
    }
    return std::strong_ordering::equal;
  }
};

struct PointHash {
  std::size_t operator()(const Point& p) const {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](std::uint64_t v) {
      h ^= v;
      h *= 1099511628211ull;
    };
    mix(p.n);
    for (std::uint8_t i = 0; i < p.n; ++i) mix(p.c[i]);
    return static_cast<std::size_t>(h);
  }
};

using PointSet = std::unordered_set<Point, PointHash>;

Point make_point(std::initializer_list<Elem> coords);
Point unit_point(std::uint32_t n, std::uint32_t i);
bool is_zero(const Point& p);
// Scales so the first nonzero coordinate is 1; DomainError on the zero vector.
Point normalize(const Field& F, const Point& p);

// Number of points of PG(dim, q).
std::uint64_t pg_size(std::uint32_t dim, std::uint64_t q);

// All points of PG(dim, F), normalized, in ascending coordinate-tuple order.
// ResourceError when the point count exceeds the enumeration guard (10^7).
std::vector<Point> all_points(std::uint32_t dim, const Field& F);

// ---- Dense square matrices over a field, column-vector action ----

struct Mat {
  std::uint8_t n = 0;
  std::array<std::array<Elem, kMaxCoords>, kMaxCoords> a{};

  static Mat identity(std::uint32_t n);
  friend bool operator==(const Mat&, const Mat&) = default;
};

Mat mat_mul(const Field& F, const Mat& A, const Mat& B);
Mat mat_transpose(const Mat& A);
// DomainError when the matrix is singular.
Mat mat_inverse(const Field& F, const Mat& A);
// M p as column vector; the result is not normalized.
Point mat_apply(const Field& F, const Mat& M, const Point& p);

// ---- Subspaces as reduced row echelon bases ----
//
// The RREF basis is canonical, so subspace equality is struct equality.

struct Subspace {
  std::uint8_t n = 0;  // ambient coordinates
  std::uint8_t r = 0;  // rank; projective dimension is r - 1
  std::array<std::array<Elem, kMaxCoords>, kMaxCoords> row{};

  friend bool operator==(const Subspace&, const Subspace&) = default;
  friend std::strong_ordering operator<=>(const Subspace& a, const Subspace& b) {
    if (a.n != b.n) return a.n <=> b.n;
    if (a.r != b.r) return a.r <=> b.r;
    for (std::uint8_t i = 0; i < a.r; ++i) {
      for (std::uint8_t j = 0; j < a.n; ++j) {
        if (a.row[i][j] != b.row[i][j]) return a.row[i][j] <=> b.row[i][j];
      }
    }
    return std::strong_ordering::equal;
  }
};

Subspace span(const Field& F, std::span<const Point> pts);
// UsageError when the two points coincide projectively.
Subspace line_through(const Field& F, const Point& p, const Point& q);
bool contains(const Field& F, const Subspace& s, const Point& p);
// Points of the subspace, normalized, ascending; guarded like all_points.
std::vector<Point> points_on(const Field& F, const Subspace& s);
// Basis of the linear functionals vanishing on s (n - r of them), as
// coefficient vectors.
std::vector<Point> equations(const Field& F, const Subspace& s);
// Common zero locus of the given functionals.
Subspace from_equations(const Field& F, std::uint32_t n,
                        std::span<const Point> funcs);
Subspace intersect(const Field& F, const Subspace& a, const Subspace& b);

// ---- Subgeometries over a subfield ----
//
// Image of the canonical PG(n-1, sub) inside PG(n-1, sup) under a
// projectivity, stored as its matrix.  baer_from_frame sends the standard
// frame to the given one; the resulting subgeometry is the unique one through
// the frame.

struct BaerMap {
  const Field* sub = nullptr;
  const Field* sup = nullptr;
  Mat m;
  Mat m_inv;
};

BaerMap baer_from_matrix(const Field& sub, const Field& sup, const Mat& m);
// frame must hold n+1 points of PG(n-1, sup), every n of them independent.
BaerMap baer_from_frame(const Field& sub, const Field& sup,
                        std::span<const Point> frame);
// Image of a point with coordinates over bm.sub; normalized over bm.sup.
Point baer_apply(const BaerMap& bm, const Point& p_sub);
// Full image point set, sorted ascending.
std::vector<Point> baer_image(const BaerMap& bm);
// The involution fixing the subgeometry pointwise; requires index 2.
Point baer_involution(const BaerMap& bm, const Point& p_sup);

}  // namespace polarset::geom
