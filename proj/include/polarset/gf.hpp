#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "polarset/common.hpp"

namespace polarset::gf {

// Element of GF(p^k), encoded as sum c_i p^i where the c_i are the
// coefficients of the residue polynomial, 0 <= c_i < p.  Encoding 0 is the
// zero element, encoding 1 the one element.
using Elem = std::uint32_t;

struct ConwayEntry {
  std::uint16_t p;
  std::uint16_t k;
  const std::uint8_t* coeffs;  // ascending degree, length k+1, monic
};

// Built-in modulus table (see src/conway_table.cpp).  Entries can be
// overridden per (p,k) through the POLARSET_CONWAY_PATH environment variable,
// pointing at a text file with lines "p k c0 c1 ... ck".
extern const ConwayEntry kConwayTable[];
extern const std::size_t kConwayTableSize;

// Arithmetic context for GF(p^k).  Instances are immutable and canonical:
// Field::get returns the same object for the same (p, k), so pointer equality
// decides field identity.  All element operations are thread-safe.
//
// Construction fails with ConfigError unless the modulus on file is monic of
// degree k with x primitive, which also certifies irreducibility: a reducible
// modulus caps the multiplicative order of x strictly below p^k - 1.
class Field {
 public:
  static const Field& get(std::uint32_t p, std::uint32_t k);
  // Same contract with an explicit modulus (ascending coefficients, length
  // k+1).  Returns the plain get(p, k) instance when the coefficients match
  // the table on file, so pointer identity is preserved; otherwise a separate
  // canonical instance keyed by the coefficients.  The modulus must still be
  // monic with x primitive.
  static const Field& get(std::uint32_t p, std::uint32_t k,
                          const std::vector<std::uint32_t>& modulus);

  std::uint32_t p() const { return p_; }
  std::uint32_t k() const { return k_; }
  std::uint32_t q() const { return q_; }
  // Modulus coefficients, ascending degree, length k+1.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  // The residue of x, a generator of the multiplicative group.
  Elem gen() const { return gen_; }
  // Image of an integer under the ring map Z -> GF(p^k).
  Elem from_int(std::uint64_t v) const { return static_cast<Elem>(v % p_); }

  Elem add(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  // x^e with e reduced mod q-1 for nonzero x; 0^e = 0 for e > 0 and 1 for
  // e = 0; negative e requires x invertible.
  Elem pow(Elem a, std::int64_t e) const;

  // Discrete log base gen(); DomainError on zero.
  std::uint32_t log(Elem a) const;
  Elem exp(std::uint64_t i) const { return exp_[i % (q_ - 1)]; }

  // x -> x^(p^count).
  Elem frobenius(Elem a, std::uint32_t count = 1) const;

  // Unique square root in even characteristic; DomainError when p is odd.
  Elem char2_sqrt(Elem a) const;
  // Whether nonzero a is a cube; DomainError on zero.
  bool is_cube(Elem a) const;

  // ---- Subfield towers ----
  // sub must satisfy sub.p == p and sub.k | k for the operations below; the
  // canonical embedding sends sub.gen() to gen()^((q-1)/(sub.q-1)).  The map
  // is verified to be a ring homomorphism the first time a pair of fields is
  // linked, so a hand-edited override table cannot silently break towers.
  bool has_subfield(const Field& sub) const;
  Elem embed_from(const Field& sub, Elem a) const;
  // Preimage under embed_from; DomainError when a is outside the image.
  Elem project_to(const Field& sub, Elem a) const;
  bool in_subfield(const Field& sub, Elem a) const;
  // Norm and trace onto the embedded copy of sub; results satisfy
  // in_subfield(sub, .).
  Elem rel_norm(const Field& sub, Elem a) const;
  Elem rel_trace(const Field& sub, Elem a) const;

 private:
  Field(std::uint32_t p, std::uint32_t k, std::vector<std::uint32_t> modulus);
  Field(const Field&) = delete;
  Field& operator=(const Field&) = delete;

  void check_elem(Elem a) const;
  std::uint64_t stride_of(const Field& sub) const;  // (q-1)/(sub.q-1)
  void verify_tower(const Field& sub) const;

  std::uint32_t p_, k_, q_;
  Elem gen_;
  std::vector<std::uint32_t> modulus_;
  std::vector<Elem> exp_;        // size q-1, exp_[i] = gen^i
  std::vector<std::uint32_t> log_;
  std::vector<Elem> neg_;        // empty when p == 2
  std::vector<Elem> add_tab_;    // full q*q table for small odd q
  std::vector<std::uint32_t> zech_;  // zech_[d] = log(1 + gen^d), large odd q
  std::vector<std::uint32_t> frob_pow_;  // p^i mod (q-1), i in [0, k)

  friend struct FieldRegistry;
};

}  // namespace polarset::gf
