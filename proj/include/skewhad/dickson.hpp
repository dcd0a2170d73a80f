#pragma once

// First-kind Dickson polynomials over GF(3^m): evaluation, the gcd
// permutation criterion, and planarity of arbitrary value tables.

#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

#include "skewhad/field.hpp"

namespace skewhad {

struct DicksonSpec {
  int n;    // order, n >= 1
  Felt u;   // parameter
};

// Two-term recurrence D_0 = 2, D_1 = x, D_n = x*D_{n-1} - u*D_{n-2}.
// Exact in the field; the closed binomial form is kept as a test oracle only.
inline Felt dickson_eval(const FieldCtx& f, const DicksonSpec& spec, Felt x) {
  if (spec.n < 0) throw std::invalid_argument("dickson_eval: order must be nonnegative");
  if (spec.n == 0) return f.add(1, 1);
  Felt prev = f.add(1, 1);  // D_0 = 2
  Felt cur = x;             // D_1
  for (int k = 2; k <= spec.n; ++k) {
    const Felt next = f.sub(f.mul(x, cur), f.mul(spec.u, prev));
    prev = cur;
    cur = next;
  }
  return cur;
}

// Full value table of x -> D_n(x, u).
inline std::vector<Felt> dickson_table(const FieldCtx& f, const DicksonSpec& spec) {
  std::vector<Felt> t(f.q());
  for (Felt x = 0; x < f.q(); ++x) t[x] = dickson_eval(f, spec, x);
  return t;
}

enum class PermMethod { criterion, exhaustive };

struct PermResult {
  bool is_permutation;
  PermMethod method;  // the method actually used
};

inline bool table_is_bijection(const FieldCtx& f, std::span<const Felt> table) {
  if (table.size() != f.q()) throw std::invalid_argument("value table must have q entries");
  std::vector<bool> seen(f.q(), false);
  for (Felt v : table) {
    if (v >= f.q() || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

// gcd(n, q^2 - 1) = 1 criterion for u != 0; u = 0 degenerates to the monomial
// x^n and falls back to the exhaustive check.
inline PermResult is_permutation(const FieldCtx& f, const DicksonSpec& spec,
                                 PermMethod method = PermMethod::criterion) {
  if (spec.n < 1) throw std::invalid_argument("is_permutation: order must be positive");
  if (method == PermMethod::criterion && spec.u != 0) {
    const std::uint64_t q2m1 =
        static_cast<std::uint64_t>(f.q()) * static_cast<std::uint64_t>(f.q()) - 1;
    return {std::gcd(static_cast<std::uint64_t>(spec.n), q2m1) == 1, PermMethod::criterion};
  }
  const auto table = dickson_table(f, spec);
  return {table_is_bijection(f, table), PermMethod::exhaustive};
}

// f is planar iff x -> f(x+a) - f(x) is a bijection for every a != 0.
// Takes a value table so squaring, Dickson images and user maps share one path.
inline bool is_planar(const FieldCtx& f, std::span<const Felt> table) {
  if (table.size() != f.q()) throw std::invalid_argument("is_planar: value table must have q entries");
  std::vector<bool> seen(f.q());
  for (Felt a = 1; a < f.q(); ++a) {
    std::fill(seen.begin(), seen.end(), false);
    bool bij = true;
    for (Felt x = 0; x < f.q(); ++x) {
      const Felt d = f.sub(table[f.add(x, a)], table[x]);
      if (seen[d]) {
        bij = false;
        break;
      }
      seen[d] = true;
    }
    if (!bij) return false;
  }
  return true;
}

}  // namespace skewhad
