#include "polarset/gf.hpp"

#include <cstdlib>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <sstream>
#include <utility>

namespace polarset::gf {

namespace {

constexpr std::uint32_t kNoLog = 0xFFFFFFFFu;
constexpr std::uint64_t kMaxQ = 1u << 20;

bool allowed_prime(std::uint32_t p) {
  return p == 2 || p == 3 || p == 5 || p == 7 || p == 11 || p == 13;
}

std::string field_name(std::uint32_t p, std::uint32_t k) {
  return "GF(" + std::to_string(p) + "^" + std::to_string(k) + ")";
}

// Little-endian base-p digits of an encoding.
std::vector<std::uint32_t> digits_of(Elem a, std::uint32_t p, std::uint32_t k) {
  std::vector<std::uint32_t> d(k);
  for (std::uint32_t i = 0; i < k; ++i) {
    d[i] = a % p;
    a /= p;
  }
  return d;
}

Elem encode(const std::vector<std::uint32_t>& d, std::uint32_t p) {
  Elem a = 0;
  for (std::size_t i = d.size(); i-- > 0;) a = a * p + d[i];
  return a;
}

}  // namespace

struct FieldRegistry {
  std::mutex mu;
  std::map<std::uint64_t, std::unique_ptr<Field>> fields;
  std::map<std::pair<std::uint32_t, std::vector<std::uint32_t>>,
           std::unique_ptr<Field>>
      customs;
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<std::uint32_t>>
      overrides;
  bool overrides_loaded = false;

  std::mutex tower_mu;
  std::set<std::pair<const Field*, const Field*>> towers_ok;

  static FieldRegistry& instance() {
    static FieldRegistry reg;
    return reg;
  }

  void load_overrides_locked() {
    if (overrides_loaded) return;
    overrides_loaded = true;
    const char* path = std::getenv("POLARSET_CONWAY_PATH");
    if (path == nullptr || *path == '\0') return;
    std::ifstream in(path);
    if (!in) throw ConfigError(std::string("cannot read modulus table: ") + path);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      const auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      std::istringstream ss(line);
      std::uint32_t p = 0, k = 0;
      if (!(ss >> p >> k) || k == 0) {
        throw ConfigError(std::string(path) + ":" + std::to_string(lineno) +
                          ": expected \"p k c0 ... ck\"");
      }
      std::vector<std::uint32_t> coeffs;
      std::uint32_t c;
      while (ss >> c) coeffs.push_back(c);
      if (coeffs.size() != k + 1) {
        throw ConfigError(std::string(path) + ":" + std::to_string(lineno) +
                          ": need " + std::to_string(k + 1) + " coefficients");
      }
      overrides[{p, k}] = std::move(coeffs);
    }
  }

  std::vector<std::uint32_t> modulus_for(std::uint32_t p, std::uint32_t k) {
    if (auto it = overrides.find({p, k}); it != overrides.end()) return it->second;
    for (std::size_t i = 0; i < kConwayTableSize; ++i) {
      const ConwayEntry& e = kConwayTable[i];
      if (e.p == p && e.k == k) {
        return std::vector<std::uint32_t>(e.coeffs, e.coeffs + k + 1);
      }
    }
    throw ConfigError("no modulus on file for " + field_name(p, k));
  }

  const Field& standard_locked(std::uint32_t p, std::uint32_t k);
};

namespace {

void check_field_params(std::uint32_t p, std::uint32_t k) {
  if (!allowed_prime(p)) {
    throw ConfigError("unsupported characteristic " + std::to_string(p));
  }
  if (k == 0) throw ConfigError("field degree must be positive");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    q *= p;
    if (q > kMaxQ) {
      throw ConfigError(field_name(p, k) + " exceeds the size limit 2^20");
    }
  }
}

}  // namespace

const Field& FieldRegistry::standard_locked(std::uint32_t p, std::uint32_t k) {
  const std::uint64_t key = (static_cast<std::uint64_t>(p) << 32) | k;
  auto it = fields.find(key);
  if (it == fields.end()) {
    auto f = std::unique_ptr<Field>(new Field(p, k, modulus_for(p, k)));
    it = fields.emplace(key, std::move(f)).first;
  }
  return *it->second;
}

const Field& Field::get(std::uint32_t p, std::uint32_t k) {
  check_field_params(p, k);
  FieldRegistry& reg = FieldRegistry::instance();
  std::lock_guard<std::mutex> lock(reg.mu);
  reg.load_overrides_locked();
  return reg.standard_locked(p, k);
}

const Field& Field::get(std::uint32_t p, std::uint32_t k,
                        const std::vector<std::uint32_t>& modulus) {
  check_field_params(p, k);
  FieldRegistry& reg = FieldRegistry::instance();
  std::lock_guard<std::mutex> lock(reg.mu);
  reg.load_overrides_locked();
  if (modulus == reg.modulus_for(p, k)) return reg.standard_locked(p, k);
  auto it = reg.customs.find({p, modulus});
  if (it == reg.customs.end()) {
    auto f = std::unique_ptr<Field>(new Field(p, k, modulus));
    it = reg.customs.emplace(std::pair{p, modulus}, std::move(f)).first;
  }
  return *it->second;
}

Field::Field(std::uint32_t p, std::uint32_t k, std::vector<std::uint32_t> modulus)
    : p_(p), k_(k), modulus_(std::move(modulus)) {
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < k; ++i) q *= p;
  q_ = static_cast<std::uint32_t>(q);

  if (modulus_.size() != k_ + 1 || modulus_[k_] != 1) {
    throw ConfigError("modulus for " + field_name(p_, k_) +
                      " must be monic of degree " + std::to_string(k_));
  }
  for (std::uint32_t c : modulus_) {
    if (c >= p_) {
      throw ConfigError("modulus coefficient out of range for " +
                        field_name(p_, k_));
    }
  }
  if (modulus_[0] == 0) {
    throw ConfigError("modulus for " + field_name(p_, k_) +
                      " has zero constant term");
  }

  // exp/log by iterating multiplication with x.  x must run through every
  // nonzero residue exactly once and return to 1 at step q-1; anything else
  // rejects the modulus.
  exp_.assign(q_ - 1, 0);
  log_.assign(q_, kNoLog);
  std::vector<std::uint32_t> cur(k_, 0);
  cur[0] = 1;
  for (std::uint32_t i = 0; i < q_ - 1; ++i) {
    const Elem e = encode(cur, p_);
    if (e == 1 && i > 0) {
      throw ConfigError("modulus for " + field_name(p_, k_) +
                        " is not primitive (x has order " + std::to_string(i) +
                        ")");
    }
    exp_[i] = e;
    log_[e] = i;
    // cur *= x mod modulus
    std::uint32_t top = cur[k_ - 1];
    for (std::uint32_t j = k_ - 1; j > 0; --j) cur[j] = cur[j - 1];
    cur[0] = 0;
    if (top != 0) {
      for (std::uint32_t j = 0; j < k_; ++j) {
        cur[j] = (cur[j] + (p_ - 1) * top * modulus_[j]) % p_;
      }
    }
  }
  if (encode(cur, p_) != 1) {
    throw ConfigError("modulus for " + field_name(p_, k_) + " is not primitive");
  }
  gen_ = k_ == 1 ? exp_[1 % (q_ - 1)] : static_cast<Elem>(p_);

  frob_pow_.assign(k_, 0);
  std::uint64_t f = 1;
  for (std::uint32_t i = 0; i < k_; ++i) {
    frob_pow_[i] = static_cast<std::uint32_t>(f);
    f = f * p_ % (q_ - 1);
  }

  if (p_ != 2) {
    neg_.assign(q_, 0);
    for (Elem a = 0; a < q_; ++a) {
      auto d = digits_of(a, p_, k_);
      for (auto& c : d) c = (p_ - c) % p_;
      neg_[a] = encode(d, p_);
    }
    if (q_ <= 1024) {
      add_tab_.assign(static_cast<std::size_t>(q_) * q_, 0);
      for (Elem a = 0; a < q_; ++a) {
        const auto da = digits_of(a, p_, k_);
        for (Elem b = 0; b < q_; ++b) {
          auto db = digits_of(b, p_, k_);
          for (std::uint32_t j = 0; j < k_; ++j) db[j] = (db[j] + da[j]) % p_;
          add_tab_[static_cast<std::size_t>(a) * q_ + b] = encode(db, p_);
        }
      }
    } else {
      // Zech logarithms: add through zech_[d] = log(1 + gen^d).
      zech_.assign(q_ - 1, kNoLog);
      for (std::uint32_t d = 0; d < q_ - 1; ++d) {
        auto v = digits_of(exp_[d], p_, k_);
        v[0] = (v[0] + 1) % p_;
        const Elem s = encode(v, p_);
        if (s != 0) zech_[d] = log_[s];
      }
    }
  }
}

void Field::check_elem(Elem a) const {
  if (a >= q_) {
    throw DomainError("encoding " + std::to_string(a) + " is not in " +
                      field_name(p_, k_));
  }
}

Elem Field::add(Elem a, Elem b) const {
  check_elem(a);
  check_elem(b);
  if (p_ == 2) return a ^ b;
  if (!add_tab_.empty()) return add_tab_[static_cast<std::size_t>(a) * q_ + b];
  if (a == 0) return b;
  if (b == 0) return a;
  const std::uint32_t i = log_[a], j = log_[b];
  const std::uint32_t d = j >= i ? j - i : j + (q_ - 1) - i;
  const std::uint32_t z = zech_[d];
  if (z == kNoLog) return 0;
  std::uint32_t s = i + z;
  if (s >= q_ - 1) s -= q_ - 1;
  return exp_[s];
}

Elem Field::neg(Elem a) const {
  check_elem(a);
  if (p_ == 2) return a;
  return neg_[a];
}

Elem Field::mul(Elem a, Elem b) const {
  check_elem(a);
  check_elem(b);
  if (a == 0 || b == 0) return 0;
  std::uint32_t s = log_[a] + log_[b];
  if (s >= q_ - 1) s -= q_ - 1;
  return exp_[s];
}

Elem Field::inv(Elem a) const {
  check_elem(a);
  if (a == 0) throw DomainError("inverse of zero in " + field_name(p_, k_));
  const std::uint32_t i = log_[a];
  return exp_[i == 0 ? 0 : q_ - 1 - i];
}

Elem Field::pow(Elem a, std::int64_t e) const {
  check_elem(a);
  if (a == 0) {
    if (e > 0) return 0;
    if (e == 0) return 1;
    throw DomainError("negative power of zero in " + field_name(p_, k_));
  }
  const std::int64_t m = q_ - 1;
  std::int64_t r = e % m;
  if (r < 0) r += m;
  return exp_[static_cast<std::uint64_t>(log_[a]) * static_cast<std::uint64_t>(r) %
              static_cast<std::uint64_t>(m)];
}

std::uint32_t Field::log(Elem a) const {
  check_elem(a);
  if (a == 0) throw DomainError("log of zero in " + field_name(p_, k_));
  return log_[a];
}

Elem Field::frobenius(Elem a, std::uint32_t count) const {
  check_elem(a);
  if (a == 0) return 0;
  const std::uint32_t f = frob_pow_[count % k_];
  return exp_[static_cast<std::uint64_t>(log_[a]) * f % (q_ - 1)];
}

Elem Field::char2_sqrt(Elem a) const {
  if (p_ != 2) {
    throw DomainError("char2_sqrt needs characteristic 2, field is " +
                      field_name(p_, k_));
  }
  check_elem(a);
  return frobenius(a, k_ - 1);
}

bool Field::is_cube(Elem a) const {
  check_elem(a);
  if (a == 0) throw DomainError("cube test on zero in " + field_name(p_, k_));
  if ((q_ - 1) % 3 != 0) return true;
  return pow(a, (q_ - 1) / 3) == 1;
}

bool Field::has_subfield(const Field& sub) const {
  return sub.p_ == p_ && k_ % sub.k_ == 0;
}

std::uint64_t Field::stride_of(const Field& sub) const {
  if (!has_subfield(sub)) {
    throw DomainError(field_name(sub.p_, sub.k_) + " is not a subfield of " +
                      field_name(p_, k_));
  }
  return static_cast<std::uint64_t>(q_ - 1) / (sub.q_ - 1);
}

void Field::verify_tower(const Field& sub) const {
  FieldRegistry& reg = FieldRegistry::instance();
  {
    std::lock_guard<std::mutex> lock(reg.tower_mu);
    if (reg.towers_ok.count({this, &sub}) != 0) return;
  }
  const std::uint64_t s = stride_of(sub);
  auto raw = [&](Elem a) -> Elem {
    return a == 0 ? 0 : exp_[static_cast<std::uint64_t>(sub.log_[a]) * s % (q_ - 1)];
  };
  // The image of sub's generator must be a root of sub's modulus, and the map
  // must commute with +1; together with multiplicativity (built into the log
  // formula) this pins a ring homomorphism.
  Elem acc = 0;
  for (std::size_t i = sub.modulus_.size(); i-- > 0;) {
    acc = add(mul(acc, raw(sub.gen_)), from_int(sub.modulus_[i]));
  }
  bool ok = acc == 0;
  for (Elem a = 0; ok && a + 1 < sub.q_; ++a) {
    if (raw(sub.add(a, 1)) != add(raw(a), 1)) ok = false;
  }
  if (!ok) {
    throw ConfigError("moduli of " + field_name(p_, k_) + " and " +
                      field_name(sub.p_, sub.k_) +
                      " are not compatible as a tower");
  }
  std::lock_guard<std::mutex> lock(reg.tower_mu);
  reg.towers_ok.insert({this, &sub});
}

Elem Field::embed_from(const Field& sub, Elem a) const {
  const std::uint64_t s = stride_of(sub);
  sub.check_elem(a);
  verify_tower(sub);
  if (a == 0) return 0;
  return exp_[static_cast<std::uint64_t>(sub.log_[a]) * s % (q_ - 1)];
}

Elem Field::project_to(const Field& sub, Elem a) const {
  const std::uint64_t s = stride_of(sub);
  check_elem(a);
  verify_tower(sub);
  if (a == 0) return 0;
  const std::uint32_t j = log_[a];
  if (j % s != 0) {
    throw DomainError("element is not in the " + field_name(sub.p_, sub.k_) +
                      " subfield of " + field_name(p_, k_));
  }
  return sub.exp_[j / s];
}

bool Field::in_subfield(const Field& sub, Elem a) const {
  const std::uint64_t s = stride_of(sub);
  check_elem(a);
  if (a == 0) return true;
  return log_[a] % s == 0;
}

Elem Field::rel_norm(const Field& sub, Elem a) const {
  const std::uint64_t s = stride_of(sub);
  check_elem(a);
  if (a == 0) return 0;
  return exp_[static_cast<std::uint64_t>(log_[a]) * s % (q_ - 1)];
}

Elem Field::rel_trace(const Field& sub, Elem a) const {
  stride_of(sub);  // validates the subfield relation
  check_elem(a);
  const std::uint32_t d = k_ / sub.k_;
  Elem acc = 0;
  for (std::uint32_t i = 0; i < d; ++i) acc = add(acc, frobenius(a, i * sub.k_));
  if (!in_subfield(sub, acc)) {
    throw InternalError("relative trace left the base field");
  }
  return acc;
}

}  // namespace polarset::gf
