#pragma once

// Exact character sums in Z[w], w a primitive cube root of unity (w^2 = -1-w),
// plus a floating-point sanity layer for Gauss sums and Fourier inversion.
// The congruence and norm checks are exact integer computations; doubles
// never decide a verification.

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "skewhad/element_set.hpp"
#include "skewhad/sets.hpp"

namespace skewhad {

struct Eisenstein {
  std::int64_t a0 = 0;  // rational part
  std::int64_t a1 = 0;  // coefficient of w

  friend Eisenstein operator+(Eisenstein x, Eisenstein y) { return {x.a0 + y.a0, x.a1 + y.a1}; }
  friend Eisenstein operator-(Eisenstein x, Eisenstein y) { return {x.a0 - y.a0, x.a1 - y.a1}; }
  friend Eisenstein operator*(Eisenstein x, Eisenstein y) {
    return {x.a0 * y.a0 - x.a1 * y.a1, x.a0 * y.a1 + x.a1 * y.a0 - x.a1 * y.a1};
  }
  bool operator==(const Eisenstein&) const = default;

  Eisenstein conj() const { return {a0 - a1, -a1}; }  // w -> w^2
  std::int64_t norm() const { return a0 * a0 - a0 * a1 + a1 * a1; }
  bool divisible_by(std::int64_t d) const { return a0 % d == 0 && a1 % d == 0; }
};

// sum over d in D of w^tr(beta*d), tallied exactly: with n_t the number of
// elements of beta*D of trace t, the sum is (n0 - n2) + (n1 - n2) w.
inline Eisenstein additive_char_sum(const FieldCtx& f, const ElementSet& d, Felt beta) {
  std::int64_t n[3] = {0, 0, 0};
  d.for_each([&](Felt x) { ++n[f.trace(f.mul(beta, x))]; });
  return {n[0] - n[2], n[1] - n[2]};
}

struct CongruenceReport {
  bool all_pass = true;
  std::int64_t modulus = 1;      // 3^((m-1)/2)
  std::vector<Felt> witnesses;   // beta values that fail
};

// psi_beta(D) = (3^((m-1)/2) - 1)/2 mod 3^((m-1)/2) for every beta != 0
inline CongruenceReport lemma_sim_congruence(const FieldCtx& f, const ElementSet& d) {
  if (f.m() % 2 == 0) throw std::invalid_argument("lemma_sim_congruence: m must be odd");
  CongruenceReport rep;
  rep.modulus = pow3((f.m() - 1) / 2);
  const std::int64_t target = (rep.modulus - 1) / 2;
  for (Felt beta = 1; beta < f.q(); ++beta) {
    const Eisenstein z = additive_char_sum(f, d, beta) - Eisenstein{target, 0};
    if (!z.divisible_by(rep.modulus)) {
      rep.all_pass = false;
      rep.witnesses.push_back(beta);
    }
  }
  return rep;
}

// S_beta = sum over x != 0 of w^tr(beta*D_7(x,u)) * chi(x), checked to vanish
// mod 3^((m-1)/2) for every beta != 0
inline CongruenceReport s_beta_congruence(const FieldCtx& f, Felt u) {
  if (f.m() % 2 == 0) throw std::invalid_argument("s_beta_congruence: m must be odd");
  if (f.m() % 3 == 0) throw std::invalid_argument("s_beta_congruence: m must not be divisible by 3");
  if (u == 0) throw std::invalid_argument("s_beta_congruence: u must be nonzero");
  CongruenceReport rep;
  rep.modulus = pow3((f.m() - 1) / 2);

  std::vector<Felt> value(f.q());
  std::vector<int> chi(f.q());
  for (Felt x = 1; x < f.q(); ++x) {
    value[x] = dickson_eval(f, {7, u}, x);
    chi[x] = f.quadratic_character(x);
  }
  for (Felt beta = 1; beta < f.q(); ++beta) {
    std::int64_t n[3] = {0, 0, 0};
    for (Felt x = 1; x < f.q(); ++x) n[f.trace(f.mul(beta, value[x]))] += chi[x];
    const Eisenstein s{n[0] - n[2], n[1] - n[2]};
    if (!s.divisible_by(rep.modulus)) {
      rep.all_pass = false;
      rep.witnesses.push_back(beta);
    }
  }
  return rep;
}

// g(chi_k) = sum over x != 0 of chi_k(x) psi(x), chi_k the k-th power of the
// character dual to the table generator. Floating point; |g|^2 = q for k != 0.
inline std::complex<double> gauss_sum_numeric(const FieldCtx& f, std::uint32_t k) {
  const double two_pi = 6.283185307179586476925286766559;
  const std::uint32_t qm1 = f.q() - 1;
  std::complex<double> acc{0.0, 0.0};
  for (std::uint32_t j = 0; j < qm1; ++j) {
    const Felt x = f.exp(j);
    const double mult_angle = two_pi * static_cast<double>((static_cast<std::uint64_t>(k) * j) % qm1) /
                              static_cast<double>(qm1);
    const double add_angle = two_pi * static_cast<double>(f.trace(x)) / 3.0;
    acc += std::polar(1.0, mult_angle + add_angle);
  }
  return acc;
}

// Reconstructs psi(x) = (1/(q-1)) sum_k g(chi_k) chi_k^{-1}(x) for sampled
// x != 0 and reports the worst absolute deviation from w^tr(x).
inline double fourier_inversion_check(const FieldCtx& f, int samples,
                                      std::uint64_t seed = 0x0F1E2D3C4B5A6978ULL) {
  if (f.m() > 5) throw std::invalid_argument("fourier_inversion_check: q-1 terms per sample, m <= 5");
  const double two_pi = 6.283185307179586476925286766559;
  const std::uint32_t qm1 = f.q() - 1;

  std::vector<std::complex<double>> gauss(qm1);
  for (std::uint32_t k = 0; k < qm1; ++k) gauss[k] = gauss_sum_numeric(f, k);

  std::vector<Felt> xs;
  if (samples <= 0 || static_cast<std::uint32_t>(samples) >= qm1) {
    for (Felt x = 1; x < f.q(); ++x) xs.push_back(x);
  } else {
    std::mt19937_64 rng(seed);
    for (int i = 0; i < samples; ++i) xs.push_back(1 + static_cast<Felt>(rng() % qm1));
  }

  double worst = 0.0;
  for (Felt x : xs) {
    const std::uint32_t lx = f.log(x);
    std::complex<double> acc{0.0, 0.0};
    for (std::uint32_t k = 0; k < qm1; ++k) {
      const std::uint64_t e = (static_cast<std::uint64_t>(k) * lx) % qm1;
      acc += gauss[k] * std::polar(1.0, -two_pi * static_cast<double>(e) / static_cast<double>(qm1));
    }
    acc /= static_cast<double>(qm1);
    const std::complex<double> expect = std::polar(1.0, two_pi * static_cast<double>(f.trace(x)) / 3.0);
    worst = std::max(worst, std::abs(acc - expect));
  }
  return worst;
}

}  // namespace skewhad
