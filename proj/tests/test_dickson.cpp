#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "skewhad/dickson.hpp"

using namespace skewhad;

namespace {

// Independent oracle: the closed binomial form
//   D_n(x,u) = sum_{j<=n/2} n/(n-j) * C(n-j, j) * (-u)^j * x^(n-2j),
// with exact integer coefficients reduced mod 3.
std::int64_t binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Felt dickson_closed_form(const FieldCtx& f, int n, Felt x, Felt u) {
  if (n == 0) return f.add(1, 1);
  Felt acc = 0;
  for (int j = 0; 2 * j <= n; ++j) {
    const std::int64_t coeff = binom(n - j, j) * n / (n - j);  // exact division
    const int c3 = static_cast<int>(coeff % 3);
    if (c3 == 0) continue;
    Felt term = f.mul(f.pow(f.neg(u), j), f.pow(x, n - 2 * j));
    if (c3 == 2) term = f.neg(term);
    acc = f.add(acc, term);
  }
  return acc;
}

}  // namespace

TEST_CASE("recurrence agrees with the closed form") {
  std::mt19937_64 rng(0xD1C5);
  for (int m : {2, 5}) {
    FieldCtx f(m);
    for (int n = 1; n <= 15; ++n) {
      for (int it = 0; it < 1000; ++it) {
        const Felt x = static_cast<Felt>(rng() % f.q());
        const Felt u = static_cast<Felt>(rng() % f.q());
        REQUIRE(dickson_eval(f, {n, u}, x) == dickson_closed_form(f, n, x, u));
      }
    }
  }
}

TEST_CASE("order 7 matches x^7 - u x^5 - u^2 x^3 - u^3 x") {
  FieldCtx f(5);
  std::mt19937_64 rng(21);
  for (int it = 0; it < 2000; ++it) {
    const Felt x = static_cast<Felt>(rng() % f.q());
    const Felt u = static_cast<Felt>(rng() % f.q());
    const Felt expect = f.sub(f.sub(f.sub(f.pow(x, 7), f.mul(u, f.pow(x, 5))),
                                    f.mul(f.pow(u, 2), f.pow(x, 3))),
                              f.mul(f.pow(u, 3), x));
    CHECK(dickson_eval(f, {7, u}, x) == expect);
  }
}

TEST_CASE("special values") {
  FieldCtx f5(5);
  for (Felt u = 0; u < f5.q(); ++u) CHECK(dickson_eval(f5, {7, u}, 0) == 0);
  // D_n(x, 0) = x^n
  std::mt19937_64 rng(3);
  for (int n = 1; n <= 12; ++n)
    for (int it = 0; it < 200; ++it) {
      const Felt x = static_cast<Felt>(rng() % f5.q());
      CHECK(dickson_eval(f5, {n, 0}, x) == f5.pow(x, n));
    }
  FieldCtx f1(1);
  CHECK(dickson_eval(f1, {7, 1}, 1) == 1);  // 1-1-1-1 = 1 in GF(3)
}

TEST_CASE("functional equation D_n(y + u/y, u) = y^n + (u/y)^n") {
  FieldCtx f(5);
  for (int n : {5, 7}) {
    for (Felt u : {Felt{1}, f.neg(1), f.generator()}) {
      for (Felt y = 1; y < f.q(); ++y) {
        const Felt uy = f.mul(u, f.inv(y));
        CHECK(dickson_eval(f, {n, u}, f.add(y, uy)) == f.add(f.pow(y, n), f.pow(uy, n)));
      }
    }
  }
}

TEST_CASE("permutation criterion matches the exhaustive check") {
  for (int m = 1; m <= 5; ++m) {
    FieldCtx f(m);
    for (Felt u : {Felt{1}, f.generator()}) {
      for (int n = 1; n <= 15; ++n) {
        const auto crit = is_permutation(f, {n, u}, PermMethod::criterion);
        const auto full = is_permutation(f, {n, u}, PermMethod::exhaustive);
        REQUIRE(crit.is_permutation == full.is_permutation);
        CHECK(crit.method == PermMethod::criterion);
        CHECK(full.method == PermMethod::exhaustive);
      }
    }
  }
}

TEST_CASE("order-7 permutation iff m not divisible by 3") {
  CHECK(is_permutation(FieldCtx(5), {7, 1}).is_permutation);
  CHECK_FALSE(is_permutation(FieldCtx(3), {7, 1}).is_permutation);
  CHECK(is_permutation(FieldCtx(4), {7, 1}).is_permutation);
  CHECK_FALSE(is_permutation(FieldCtx(6), {7, 1}).is_permutation);
  // n=2 never: q^2-1 is even
  CHECK_FALSE(is_permutation(FieldCtx(2), {2, 1}).is_permutation);
}

TEST_CASE("u = 0 falls back to the exhaustive path") {
  FieldCtx f(2);
  // D_5(x, 0) = x^5; gcd(5, 8) = 1 so a permutation of GF(9)
  const auto r = is_permutation(f, {5, 0}, PermMethod::criterion);
  CHECK(r.method == PermMethod::exhaustive);
  CHECK(r.is_permutation);
  const auto r2 = is_permutation(f, {2, 0}, PermMethod::criterion);
  CHECK(r2.method == PermMethod::exhaustive);
  CHECK_FALSE(r2.is_permutation);
}

TEST_CASE("planarity of squaring, D_5 image and D_7 image") {
  FieldCtx f(5);
  std::vector<Felt> sq(f.q()), d5(f.q()), d7(f.q());
  const Felt minus1 = f.neg(1);
  for (Felt x = 0; x < f.q(); ++x) {
    sq[x] = f.mul(x, x);
    d5[x] = dickson_eval(f, {5, minus1}, f.mul(x, x));
    d7[x] = dickson_eval(f, {7, 1}, f.mul(x, x));
  }
  CHECK(is_planar(f, sq));
  CHECK(is_planar(f, d5));
  CHECK_FALSE(is_planar(f, d7));
  CHECK_THROWS_AS(is_planar(f, std::span<const Felt>(sq.data(), 10)), std::invalid_argument);
}
