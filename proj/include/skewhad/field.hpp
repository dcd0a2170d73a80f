#pragma once

// Table-driven arithmetic for GF(3^m), m <= 13.
//
// Elements are canonical integer indices in [0, q-1], little-endian base 3:
// index = sum c_i 3^i encodes the polynomial sum c_i x^i mod the field
// modulus. Addition is digit-wise mod 3 (no carries) and is served from
// per-limb lookup tables; multiplication goes through exp/log tables over a
// fixed generator. A FieldCtx is immutable after construction and safe to
// share across threads.

#include <cstdint>
#include <memory>
#include <mutex>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace skewhad {

using Felt = std::uint32_t;

inline constexpr int kMaxDegree = 13;

inline std::int64_t pow3(int e) {
  std::int64_t r = 1;
  for (int i = 0; i < e; ++i) r *= 3;
  return r;
}

namespace detail {

// --- polynomial arithmetic over GF(3), little-endian digit vectors ---
// Used only during FieldCtx construction (modulus validation, generator
// search, exp table build); everything afterwards is table lookups.

inline int poly_degree(const std::vector<int>& p) {
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
    if (p[i] != 0) return i;
  return -1;
}

inline std::vector<int> poly_mul_mod(const std::vector<int>& a, const std::vector<int>& b,
                                     const std::vector<int>& mod) {
  const int m = static_cast<int>(mod.size()) - 1;
  std::vector<int> r(2 * m, 0);
  for (int i = 0; i < m; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < m; ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % 3;
  }
  for (int i = 2 * m - 1; i >= m; --i) {
    const int c = r[i];
    if (c == 0) continue;
    r[i] = 0;
    for (int j = 0; j < m; ++j) r[i - m + j] = ((r[i - m + j] - c * mod[j]) % 3 + 3) % 3;
  }
  r.resize(m);
  return r;
}

inline std::vector<int> poly_pow_mod(std::vector<int> base, std::uint64_t e,
                                     const std::vector<int>& mod) {
  const int m = static_cast<int>(mod.size()) - 1;
  std::vector<int> r(m, 0);
  r[0] = 1;
  while (e > 0) {
    if (e & 1) r = poly_mul_mod(r, base, mod);
    base = poly_mul_mod(base, base, mod);
    e >>= 1;
  }
  return r;
}

inline std::vector<int> poly_gcd(std::vector<int> a, std::vector<int> b) {
  while (poly_degree(b) >= 0) {
    while (poly_degree(a) >= poly_degree(b) && poly_degree(a) >= 0) {
      const int da = poly_degree(a), db = poly_degree(b);
      const int lead_inv = (b[db] == 1) ? 1 : 2;  // inverses in GF(3): 1->1, 2->2
      const int c = (a[da] * lead_inv) % 3;
      for (int i = 0; i <= db; ++i) a[i + da - db] = ((a[i + da - db] - c * b[i]) % 3 + 3) % 3;
    }
    std::swap(a, b);
  }
  return a;
}

inline std::string poly_to_string(const std::vector<int>& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p[i]);
  }
  s += "]";
  return s;
}

// Degree-m monic f over GF(3) is irreducible iff x^(3^m) == x (mod f) and no
// element of a proper subfield GF(3^d) is a root, i.e. gcd(x^(3^d) - x, f) = 1
// for all d < m. Returns an empty vector if irreducible, otherwise a
// nontrivial factor (gcd witness).
inline std::vector<int> reducibility_witness(const std::vector<int>& mod) {
  const int m = static_cast<int>(mod.size()) - 1;
  if (m == 1) return {};
  std::vector<int> x(m, 0);
  x[1] = 1;
  std::vector<int> xp = x;
  for (int d = 1; d <= m; ++d) {
    xp = poly_pow_mod(xp, 3, mod);  // x^(3^d) mod f
    if (d == m) {
      if (xp != x) return mod;  // f does not divide x^(3^m) - x; f itself named
      return {};
    }
    std::vector<int> diff(m + 1, 0);
    for (int i = 0; i < m; ++i) diff[i] = ((xp[i] - x[i]) % 3 + 3) % 3;
    std::vector<int> g = poly_gcd(diff, mod);
    if (poly_degree(g) > 0) {
      // normalize monic
      const int dg = poly_degree(g);
      if (g[dg] == 2)
        for (int i = 0; i <= dg; ++i) g[i] = (2 * g[i]) % 3;
      g.resize(dg + 1);
      return g;
    }
  }
  return {};
}

// Shared digit-wise mod-3 addition tables, keyed by digit count. Entry
// (i, j) holds the carry-free base-3 sum of indices i, j < 3^digits.
inline std::shared_ptr<const std::vector<std::uint16_t>> digit_add_table(int digits) {
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const std::vector<std::uint16_t>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(digits);
  if (it != cache.end()) return it->second;

  const std::uint32_t n = static_cast<std::uint32_t>(pow3(digits));
  auto table = std::make_shared<std::vector<std::uint16_t>>(static_cast<std::size_t>(n) * n);
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = 0; j < n; ++j) {
      std::uint32_t a = i, b = j, out = 0, p = 1;
      for (int d = 0; d < digits; ++d) {
        out += ((a % 3 + b % 3) % 3) * p;
        a /= 3;
        b /= 3;
        p *= 3;
      }
      (*table)[static_cast<std::size_t>(i) * n + j] = static_cast<std::uint16_t>(out);
    }
  }
  cache[digits] = table;
  return table;
}

}  // namespace detail

// Shipped default moduli (monic irreducible over GF(3), constant term first,
// lexicographically first in digit order). Pinned so element indices in
// output files are byte-reproducible; any irreducible choice yields the same
// isomorphism-invariant statistics.
inline const std::vector<int>& default_modulus(int m) {
  static const std::vector<std::vector<int>> table = {
      {0, 1},                                         // m=1: x
      {1, 0, 1},                                      // m=2: x^2 + 1
      {1, 0, 2, 1},                                   // m=3
      {1, 0, 1, 1, 1},                                // m=4
      {1, 0, 0, 0, 2, 1},                             // m=5
      {1, 0, 0, 0, 1, 1, 1},                          // m=6
      {1, 0, 0, 0, 0, 1, 2, 1},                       // m=7
      {1, 0, 0, 0, 0, 1, 1, 0, 1},                    // m=8
      {1, 0, 0, 0, 0, 0, 2, 1, 0, 1},                 // m=9
      {1, 0, 0, 0, 0, 0, 0, 0, 2, 0, 1},              // m=10
      {1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 2, 1},           // m=11
      {1, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 1},        // m=12
      {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 1},     // m=13
  };
  if (m < 1 || m > kMaxDegree)
    throw std::out_of_range("default_modulus: m must be in [1, " + std::to_string(kMaxDegree) +
                            "], got " + std::to_string(m));
  return table[static_cast<std::size_t>(m - 1)];
}

class FieldCtx {
 public:
  explicit FieldCtx(int m) : FieldCtx(m, default_modulus(m)) {}

  FieldCtx(int m, const std::vector<int>& modulus) {
    if (m < 1 || m > kMaxDegree)
      throw std::out_of_range("FieldCtx: extension degree m must be in [1, " +
                              std::to_string(kMaxDegree) + "], got " + std::to_string(m));
    if (static_cast<int>(modulus.size()) != m + 1)
      throw std::invalid_argument("FieldCtx: modulus must have m+1 digits");
    for (int d : modulus)
      if (d < 0 || d > 2) throw std::invalid_argument("FieldCtx: modulus digits must be in {0,1,2}");
    if (modulus[static_cast<std::size_t>(m)] != 1)
      throw std::invalid_argument("FieldCtx: modulus must be monic");
    const std::vector<int> factor = detail::reducibility_witness(modulus);
    if (!factor.empty())
      throw std::invalid_argument("FieldCtx: modulus " + detail::poly_to_string(modulus) +
                                  " is reducible; found factor " + detail::poly_to_string(factor));

    m_ = m;
    q_ = static_cast<std::uint32_t>(pow3(m));
    qm1_ = q_ - 1;
    modulus_ = modulus;

    build_add_tables();
    build_neg_table();
    find_generator();
    build_exp_log();
    build_trace_table();
  }

  int m() const { return m_; }
  std::uint32_t q() const { return q_; }
  const std::vector<int>& modulus() const { return modulus_; }
  Felt generator() const { return generator_; }

  Felt add(Felt a, Felt b) const {
    const std::uint32_t lo = add_lo_raw_[static_cast<std::size_t>(lo_of_[a]) * lo_size_ + lo_of_[b]];
    if (hi_size_ == 1) return lo;
    return lo +
           lo_size_ * add_hi_raw_[static_cast<std::size_t>(hi_of_[a]) * hi_size_ + hi_of_[b]];
  }

  Felt neg(Felt a) const { return neg_[a]; }
  Felt sub(Felt a, Felt b) const { return add(a, neg_[b]); }

  Felt mul(Felt a, Felt b) const {
    if (a == 0 || b == 0) return 0;
    std::uint32_t s = log_[a] + log_[b];
    if (s >= qm1_) s -= qm1_;
    return exp_[s];
  }

  Felt inv(Felt a) const {
    if (a == 0) throw std::domain_error("FieldCtx::inv: zero has no inverse");
    const std::uint32_t l = log_[a];
    return exp_[l == 0 ? 0 : qm1_ - l];
  }

  Felt pow(Felt a, std::int64_t e) const {
    if (a == 0) {
      if (e < 0) throw std::domain_error("FieldCtx::pow: negative power of zero");
      return e == 0 ? 1u : 0u;
    }
    std::int64_t r = e % static_cast<std::int64_t>(qm1_);
    if (r < 0) r += qm1_;
    return exp_[(static_cast<std::uint64_t>(log_[a]) * static_cast<std::uint64_t>(r)) % qm1_];
  }

  // trace to the prime field, value in {0,1,2}
  int trace(Felt a) const { return trace_[a]; }

  // +1 on nonzero squares, -1 on nonsquares, 0 at zero
  int quadratic_character(Felt a) const {
    if (a == 0) return 0;
    return (log_[a] & 1u) ? -1 : +1;
  }

  std::uint32_t log(Felt a) const {
    if (a == 0) throw std::domain_error("FieldCtx::log: log of zero is undefined");
    return log_[a];
  }

  Felt exp(std::uint64_t k) const { return exp_[k % qm1_]; }

  const std::vector<std::uint32_t>& exp_table() const { return exp_; }
  const std::vector<std::uint32_t>& log_table() const { return log_; }

  // little-endian base-3 digits of an element index
  std::vector<int> digits(Felt a) const {
    std::vector<int> d(static_cast<std::size_t>(m_));
    for (int i = 0; i < m_; ++i) {
      d[static_cast<std::size_t>(i)] = static_cast<int>(a % 3);
      a /= 3;
    }
    return d;
  }

  Felt from_digits(const std::vector<int>& d) const {
    Felt a = 0;
    for (int i = m_ - 1; i >= 0; --i) a = a * 3 + static_cast<Felt>(d[static_cast<std::size_t>(i)] % 3);
    return a;
  }

  // embeds an ordinary integer via repeated addition of 1 (n mod 3)
  Felt from_int(std::int64_t n) const {
    std::int64_t r = n % 3;
    if (r < 0) r += 3;
    return static_cast<Felt>(r);
  }

 private:
  void build_add_tables() {
    const int lo_digits = (m_ + 1) / 2;
    const int hi_digits = m_ - lo_digits;
    lo_size_ = static_cast<std::uint32_t>(pow3(lo_digits));
    hi_size_ = static_cast<std::uint32_t>(pow3(hi_digits));
    add_lo_ = detail::digit_add_table(lo_digits);
    add_lo_raw_ = add_lo_->data();
    if (hi_digits > 0) {
      add_hi_ = detail::digit_add_table(hi_digits);
      add_hi_raw_ = add_hi_->data();
    }
    lo_of_.resize(q_);
    hi_of_.resize(q_);
    for (std::uint32_t i = 0; i < q_; ++i) {
      lo_of_[i] = static_cast<std::uint16_t>(i % lo_size_);
      hi_of_[i] = static_cast<std::uint16_t>(i / lo_size_);
    }
  }

  void build_neg_table() {
    neg_.resize(q_);
    for (std::uint32_t i = 0; i < q_; ++i) {
      std::uint32_t a = i, out = 0, p = 1;
      for (int d = 0; d < m_; ++d) {
        out += ((3 - a % 3) % 3) * p;
        a /= 3;
        p *= 3;
      }
      neg_[i] = out;
    }
  }

  void find_generator() {
    // factor q-1, then take the smallest index of full multiplicative order
    std::vector<std::uint64_t> primes;
    std::uint64_t n = qm1_;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
      if (n % d == 0) {
        primes.push_back(d);
        while (n % d == 0) n /= d;
      }
    }
    if (n > 1) primes.push_back(n);

    std::vector<int> one(static_cast<std::size_t>(m_), 0);
    one[0] = 1;
    for (Felt cand = 2; cand < q_; ++cand) {
      std::vector<int> p(static_cast<std::size_t>(m_));
      {
        Felt a = cand;
        for (int i = 0; i < m_; ++i) {
          p[static_cast<std::size_t>(i)] = static_cast<int>(a % 3);
          a /= 3;
        }
      }
      bool ok = detail::poly_pow_mod(p, qm1_, modulus_) == one;
      for (std::size_t i = 0; ok && i < primes.size(); ++i)
        if (detail::poly_pow_mod(p, qm1_ / primes[i], modulus_) == one) ok = false;
      if (ok) {
        generator_ = cand;
        return;
      }
    }
    throw std::logic_error("FieldCtx: no generator found (internal error)");
  }

  void build_exp_log() {
    exp_.assign(qm1_, 0);
    log_.assign(q_, qm1_);  // sentinel for zero
    std::vector<int> gp(static_cast<std::size_t>(m_));
    {
      Felt a = generator_;
      for (int i = 0; i < m_; ++i) {
        gp[static_cast<std::size_t>(i)] = static_cast<int>(a % 3);
        a /= 3;
      }
    }
    std::vector<int> cur(static_cast<std::size_t>(m_), 0);
    cur[0] = 1;
    for (std::uint32_t k = 0; k < qm1_; ++k) {
      Felt idx = 0;
      for (int i = m_ - 1; i >= 0; --i) idx = idx * 3 + static_cast<Felt>(cur[static_cast<std::size_t>(i)]);
      if (log_[idx] != qm1_)
        throw std::logic_error("FieldCtx: generator order defect while building tables");
      exp_[k] = idx;
      log_[idx] = k;
      cur = detail::poly_mul_mod(cur, gp, modulus_);
    }
    Felt back = 0;
    for (int i = m_ - 1; i >= 0; --i) back = back * 3 + static_cast<Felt>(cur[static_cast<std::size_t>(i)]);
    if (back != 1) throw std::logic_error("FieldCtx: exp table did not close to 1");
  }

  void build_trace_table() {
    trace_.assign(q_, 0);
    for (std::uint32_t a = 0; a < q_; ++a) {
      Felt t = 0, cur = a;
      for (int i = 0; i < m_; ++i) {
        t = add(t, cur);
        cur = mul(mul(cur, cur), cur);  // Frobenius: cur^3
      }
      if (t > 2) throw std::logic_error("FieldCtx: trace landed outside the prime field");
      trace_[a] = static_cast<std::uint8_t>(t);
    }
  }

  int m_ = 0;
  std::uint32_t q_ = 0, qm1_ = 0;
  std::vector<int> modulus_;
  Felt generator_ = 0;
  std::vector<std::uint32_t> exp_, log_;
  std::vector<Felt> neg_;
  std::vector<std::uint8_t> trace_;
  std::uint32_t lo_size_ = 1, hi_size_ = 1;
  std::vector<std::uint16_t> lo_of_, hi_of_;
  std::shared_ptr<const std::vector<std::uint16_t>> add_lo_, add_hi_;
  const std::uint16_t* add_lo_raw_ = nullptr;
  const std::uint16_t* add_hi_raw_ = nullptr;
};

inline FieldCtx make_field(int m) { return FieldCtx(m); }
inline FieldCtx make_field(int m, const std::vector<int>& modulus) { return FieldCtx(m, modulus); }

}  // namespace skewhad
