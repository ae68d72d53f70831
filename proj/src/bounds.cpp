#include "polarset/bounds.hpp"

#include <cstdint>
#include <string>
#include <vector>

#include "polarset/common.hpp"

namespace polarset::bounds {
namespace {

using u128 = unsigned __int128;

u128 upow(u128 b, std::uint32_t e) {
  u128 r = 1;
  while (e--) r *= b;
  return r;
}

// Floor of the square root, exact for the whole u128 range.
u128 isqrt(u128 n) {
  if (n < 2) return n;
  u128 x = n, y = (x + 1) / 2;
  while (y < x) {
    x = y;
    y = (x + n / x) / 2;
  }
  return x;
}

std::uint64_t narrow(u128 v) {
  if (v > u128(~std::uint64_t(0)))
    throw ResourceError("bound value exceeds 64 bits");
  return std::uint64_t(v);
}

struct Row {
  std::string condition;
  std::string formula;
  std::string kind;
  std::string source;
  u128 value = 0;
  bool floored = false;
};

void push(std::vector<BoundEntry>& out, Space s, const Row& r) {
  out.push_back(BoundEntry{s, space_label(s), r.condition, r.formula, r.kind,
                           r.source, narrow(r.value), r.floored});
}

// (q^(3/2) + 3q - q^(1/2) + 3) / 3 for square q; the numerator is always a
// multiple of 3 because s^3 - s is a product of three consecutive integers.
u128 glued_cubic_size(u128 s) {
  const u128 t = s * s * s + 3 * s * s - s + 3;
  if (t % 3 != 0) throw InternalError("cubic bound numerator not divisible by 3");
  return t / 3;
}

}  // namespace

const char* space_label(Space s) {
  switch (s) {
    case Space::w3: return "W(3, q)";
    case Space::w5: return "W(5, q)";
    case Space::w7: return "W(7, q)";
    case Space::h4: return "H(4, q^2)";
    case Space::h6: return "H(6, q^2)";
    case Space::h8: return "H(8, q^2)";
  }
  throw UsageError("unknown space");
}

PrimePower factor_prime_power(std::uint64_t q) {
  if (q < 2) throw UsageError("q must be a prime power, got " + std::to_string(q));
  std::uint64_t p = 0;
  for (std::uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) return PrimePower{q, 1};
  std::uint64_t rest = q;
  std::uint32_t e = 0;
  while (rest % p == 0) {
    rest /= p;
    ++e;
  }
  if (rest != 1)
    throw UsageError("q must be a prime power, got " + std::to_string(q));
  return PrimePower{p, e};
}

std::vector<BoundEntry> evaluate(Space s, std::uint64_t qq) {
  const PrimePower pp = factor_prime_power(qq);
  const u128 q = qq;
  const bool even = pp.p == 2;
  const bool square = pp.e % 2 == 0;
  // q^(1/2) when q is a square.
  const u128 sq = square ? upow(pp.p, pp.e / 2) : 0;

  std::vector<BoundEntry> out;
  switch (s) {
    case Space::w3: {
      if (even) {
        push(out, s, {"q even", "q^2 + 1", "lower", "constructed", q * q + 1});
        push(out, s, {"q even", "q^2 + 1", "upper", "quoted", q * q + 1});
      } else {
        if (square && pp.p != 3)
          push(out, s,
               {"q an odd square, p != 3", "(q^(3/2) + 3q - q^(1/2) + 3) / 3",
                "lower", "constructed", glued_cubic_size(sq)});
        else
          push(out, s, {"q odd, a non-square or a power of 3", "2q + 1",
                        "lower", "quoted", 2 * q + 1});
        push(out, s, {"q odd", "q^2 - q + 1", "upper", "quoted", q * q - q + 1});
      }
      break;
    }
    case Space::w5: {
      if (even)
        push(out, s, {"q even", "2q^2 - q + 1", "lower", "constructed",
                      2 * q * q - q + 1});
      else
        push(out, s, {"q odd", "q^2 + q + 1", "lower", "constructed",
                      q * q + q + 1});
      if (q == 2) {
        push(out, s, {"q = 2", "7", "lower", "search", 7});
        push(out, s, {"q = 2", "7", "upper", "search", 7});
      }
      // (q sqrt(5q^4 + 6q^3 + 7q^2 + 6q + 1) - q^3 - q^2 - q + 2) / 2 with
      // the root folded into one radicand so flooring happens once.
      const u128 rad = q * q * (5 * q * q * q * q + 6 * q * q * q + 7 * q * q + 6 * q + 1);
      const u128 root = isqrt(rad);
      const u128 c = q * q * q + q * q + q - 2;
      const bool exact = root * root == rad && (root - c) % 2 == 0;
      push(out, s,
           {"all q", "(q sqrt(5q^4 + 6q^3 + 7q^2 + 6q + 1) - q^3 - q^2 - q + 2) / 2",
            "upper", "quoted", (root - c) / 2, !exact});
      break;
    }
    case Space::w7: {
      push(out, s, {"all q", "q^3 + 1", "lower", q == 2 ? "constructed" : "quoted",
                    q * q * q + 1});
      if (q == 2) {
        push(out, s, {"q = 2", "9", "upper", "quoted", 9});
      } else {
        // q (sqrt(q) - 1)(q - sqrt(q) + 1) = sqrt(q^3 (q + 2)^2) - 2q^2 - q,
        // so the bound is a - sqrt(b) with both pieces integral terms.
        const u128 a = q * q * q * q - q * q * q + 2 * q * q + q + 3;
        const u128 b = q * q * q * (q + 2) * (q + 2);
        const u128 root = isqrt(b);
        const bool exact = root * root == b;
        push(out, s,
             {"q > 2", "q^4 - q^3 - q (sqrt(q) - 1)(q - sqrt(q) + 1) + 3",
              "upper", "quoted", a - root - (exact ? 0 : 1), !exact});
      }
      break;
    }
    case Space::h4: {
      if (pp.p == 2 || pp.p == 3)
        push(out, s, {"q a power of 2 or of 3", "q^4 + 1", "lower",
                      even ? "constructed" : "quoted", q * q * q * q + 1});
      else if (square)
        push(out, s,
             {"q an odd square, p != 3", "(q^(7/2) + 3q^3 - q^(5/2) + 3q^2) / 3",
              "lower", "constructed", q * q * glued_cubic_size(sq)});
      else
        push(out, s, {"q = p^(2h+1), p > 3", "2q^3 + q^2 + 1", "lower", "quoted",
                      2 * q * q * q + q * q + 1});
      push(out, s, {"all q", "q^5 - q^4 + q^3 + 1", "upper", "quoted",
                    upow(q, 5) - upow(q, 4) + q * q * q + 1});
      break;
    }
    case Space::h6: {
      if (even)
        push(out, s, {"q even", "2q^4 - q^3 + 1", "lower", "constructed",
                      2 * upow(q, 4) - q * q * q + 1});
      else
        push(out, s, {"q odd", "q^4 + q^3 + 1", "lower", "constructed",
                      upow(q, 4) + q * q * q + 1});
      push(out, s, {"all q", "q^7 - q^6 + q^5 - q^3 + 2", "upper", "quoted",
                    upow(q, 7) - upow(q, 6) + upow(q, 5) - q * q * q + 2});
      break;
    }
    case Space::h8: {
      push(out, s, {"all q", "q^5 + 1", "lower", q == 2 ? "constructed" : "quoted",
                    upow(q, 5) + 1});
      push(out, s,
           {"all q", "q^9 - q^8 + q^7 - q^5 - q^3 + q^2 + 1", "upper", "quoted",
            upow(q, 9) - upow(q, 8) + upow(q, 7) - upow(q, 5) - q * q * q + q * q + 1});
      break;
    }
  }
  return out;
}

std::vector<BoundEntry> evaluate_all(std::uint64_t q) {
  std::vector<BoundEntry> out;
  for (Space s : {Space::w3, Space::w5, Space::w7, Space::h4, Space::h6, Space::h8})
    for (BoundEntry& e : evaluate(s, q)) out.push_back(std::move(e));
  return out;
}

}  // namespace polarset::bounds
