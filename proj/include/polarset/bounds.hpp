#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace polarset::bounds {

// ---- Closed-form size bounds for large partial ovoids ----
//
// Each entry is one table row: a space, the class of q it applies to, and
// the exact integer value of its formula at that q.  Formulas built from
// square roots are evaluated with integer square roots; when the radicand
// is not a perfect square the real value is irrational and the entry
// carries its floor, flagged as such.

enum class Space { w3, w5, w7, h4, h6, h8 };

struct BoundEntry {
  Space space;
  std::string label;      // "W(3, q)" ... "H(8, q^2)"
  std::string condition;  // the q-class this row matched
  std::string formula;
  std::string kind;       // "lower" | "upper"
  // "constructed" when this artifact builds a witness attaining the value
  // at this q, "search" when the exact search proves it, else "quoted".
  std::string source;
  std::uint64_t value = 0;
  bool floored = false;   // irrational bound, floored
};

// Smallest prime factor decomposition q = p^e; UsageError unless q is a
// prime power.
struct PrimePower {
  std::uint64_t p = 0;
  std::uint32_t e = 0;
};
PrimePower factor_prime_power(std::uint64_t q);

// Every row of the named space applicable at q, lower bounds first.
// ResourceError when a value overflows 64 bits.
std::vector<BoundEntry> evaluate(Space s, std::uint64_t q);

// All six spaces in declaration order.
std::vector<BoundEntry> evaluate_all(std::uint64_t q);

const char* space_label(Space s);

}  // namespace polarset::bounds
