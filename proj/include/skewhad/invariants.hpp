#pragma once

// Triple intersection numbers T{a,b} = |D n (D+a) n (D+b)| and the scaling
// relation between Dickson image sets. Identical distributions are necessary
// for equivalence, so pairwise-distinct distributions certify pairwise
// inequivalence (the converse direction is not decided here).

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "skewhad/element_set.hpp"
#include "skewhad/parallel.hpp"
#include "skewhad/sets.hpp"

namespace skewhad {

enum class PairConvention { unordered_distinct, ordered_distinct };

inline const char* to_string(PairConvention c) {
  return c == PairConvention::unordered_distinct ? "unordered_distinct" : "ordered_distinct";
}

struct TripleDist {
  std::string family_label;
  int m = 0;
  PairConvention convention = PairConvention::unordered_distinct;
  std::vector<std::pair<std::uint32_t, std::int64_t>> entries;  // (value, multiplicity), sorted

  std::int64_t multiplicity_of(std::uint32_t value) const {
    for (const auto& [v, mult] : entries)
      if (v == value) return mult;
    return 0;
  }
  std::pair<std::uint32_t, std::uint32_t> min_max() const {
    if (entries.empty()) throw std::logic_error("TripleDist: empty distribution");
    return {entries.front().first, entries.back().first};
  }
  bool same_distribution(const TripleDist& other) const { return entries == other.entries; }
};

namespace detail {

// All q-1 nonzero translates of D as a flat word matrix; the scan memory is
// (q-1) * q bits, so cap the universe at 3^9.
class TranslateCache {
 public:
  TranslateCache(const FieldCtx& f, const ElementSet& d) : words_per_set_((f.q() + 63) / 64) {
    if (f.q() > 19683)
      throw std::invalid_argument("triple scan: universe too large (max m = 9 for the translate cache)");
    data_.assign(static_cast<std::size_t>(f.q()) * words_per_set_, 0);
    for (Felt g = 1; g < f.q(); ++g) {
      std::uint64_t* row = data_.data() + static_cast<std::size_t>(g) * words_per_set_;
      d.for_each([&](Felt x) {
        const Felt y = f.add(x, g);
        row[y >> 6] |= std::uint64_t{1} << (y & 63);
      });
    }
  }
  const std::uint64_t* row(Felt g) const {
    return data_.data() + static_cast<std::size_t>(g) * words_per_set_;
  }
  std::size_t words() const { return words_per_set_; }

 private:
  std::size_t words_per_set_;
  std::vector<std::uint64_t> data_;
};

// Unordered scan over {a,b}, a != b, both nonzero. Each worker owns a strided
// slice of the outer index and a private accumulator; merging is integer
// addition, so the result is independent of the worker count.
template <class Acc>
void triple_scan_unordered(const FieldCtx& f, const ElementSet& d, int threads,
                           std::vector<Acc>& accs) {
  const TranslateCache cache(f, d);
  const std::uint32_t q = f.q();
  const std::size_t nw = cache.words();
  const int workers = static_cast<int>(accs.size());

  auto body = [&](int w) {
    Acc& acc = accs[static_cast<std::size_t>(w)];
    std::vector<std::uint64_t> da(nw);
    const std::uint64_t* dw = d.words().data();
    for (Felt a = 1 + static_cast<Felt>(w); a < q; a += static_cast<Felt>(workers)) {
      const std::uint64_t* ta = cache.row(a);
      for (std::size_t i = 0; i < nw; ++i) da[i] = dw[i] & ta[i];
      for (Felt b = a + 1; b < q; ++b) {
        const std::uint64_t* tb = cache.row(b);
        std::uint32_t t = 0;
        for (std::size_t i = 0; i < nw; ++i)
          t += static_cast<std::uint32_t>(std::popcount(da[i] & tb[i]));
        acc(t);
      }
    }
  };

  if (workers <= 1) {
    body(0);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) pool.emplace_back(body, w);
  for (auto& t : pool) t.join();
}

struct HistAcc {
  std::vector<std::int64_t> hist;
  void operator()(std::uint32_t t) { ++hist[t]; }
};

struct MinMaxAcc {
  std::uint32_t min = ~0u;
  std::uint32_t max = 0;
  void operator()(std::uint32_t t) {
    if (t < min) min = t;
    if (t > max) max = t;
  }
};

}  // namespace detail

// Exact multiplicity histogram of T{a,b} over admissible pairs. Deterministic
// for any worker count; the counting identities are asserted on every run.
inline TripleDist triple_distribution(const FieldCtx& f, const ElementSet& d,
                                      PairConvention convention, std::string family_label = "",
                                      int threads = 1) {
  const std::uint32_t q = f.q();
  const std::uint32_t k = d.cardinality();
  const int workers = std::max(1, std::min<int>(resolve_threads(threads), static_cast<int>(q) - 1));

  std::vector<detail::HistAcc> accs(static_cast<std::size_t>(workers));
  for (auto& a : accs) a.hist.assign(k + 1, 0);
  detail::triple_scan_unordered(f, d, workers, accs);

  std::vector<std::int64_t> hist(k + 1, 0);
  for (const auto& a : accs)
    for (std::uint32_t v = 0; v <= k; ++v) hist[v] += a.hist[v];

  const std::int64_t scale = convention == PairConvention::ordered_distinct ? 2 : 1;
  std::int64_t pairs = 0, weighted = 0;
  TripleDist dist;
  dist.family_label = std::move(family_label);
  dist.m = f.m();
  dist.convention = convention;
  for (std::uint32_t v = 0; v <= k; ++v) {
    if (hist[v] == 0) continue;
    dist.entries.emplace_back(v, hist[v] * scale);
    pairs += hist[v] * scale;
    weighted += static_cast<std::int64_t>(v) * hist[v] * scale;
  }

  const std::int64_t qm1 = q - 1;
  const std::int64_t expected_pairs = scale * qm1 * (qm1 - 1) / 2;
  const std::int64_t expected_weighted =
      scale * static_cast<std::int64_t>(k) * (k - 1) * (k - 2) / 2;
  if (pairs != expected_pairs)
    throw std::logic_error("triple_distribution: pair count identity violated");
  if (weighted != expected_weighted)
    throw std::logic_error("triple_distribution: weighted sum identity violated");
  return dist;
}

// min and max of T over admissible pairs (identical under both conventions)
inline std::pair<std::uint32_t, std::uint32_t> minmax_triple(const FieldCtx& f,
                                                             const ElementSet& d,
                                                             PairConvention /*convention*/ =
                                                                 PairConvention::unordered_distinct,
                                                             int threads = 1) {
  const std::uint32_t q = f.q();
  const int workers = std::max(1, std::min<int>(resolve_threads(threads), static_cast<int>(q) - 1));
  std::vector<detail::MinMaxAcc> accs(static_cast<std::size_t>(workers));
  detail::triple_scan_unordered(f, d, workers, accs);
  detail::MinMaxAcc total;
  for (const auto& a : accs) {
    total.min = std::min(total.min, a.min);
    total.max = std::max(total.max, a.max);
  }
  return {total.min, total.max};
}

struct CompareReport {
  std::vector<std::string> labels;
  std::vector<std::vector<bool>> equal;  // equal[i][j]
  bool pairwise_distinct = true;
};

inline CompareReport compare_families(const std::vector<TripleDist>& dists) {
  if (dists.empty()) throw std::invalid_argument("compare_families: nothing to compare");
  for (const auto& d : dists) {
    if (d.m != dists.front().m)
      throw std::invalid_argument("compare_families: mixed extension degrees");
    if (d.convention != dists.front().convention)
      throw std::invalid_argument("compare_families: mixed pair conventions");
  }
  CompareReport rep;
  const std::size_t n = dists.size();
  rep.equal.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    rep.labels.push_back(dists[i].family_label);
    for (std::size_t j = 0; j < n; ++j) {
      rep.equal[i][j] = dists[i].same_distribution(dists[j]);
      if (i != j && rep.equal[i][j]) rep.pairwise_distinct = false;
    }
  }
  return rep;
}

enum class ScalingClass { equivalent_to_d1, equivalent_to_dminus1 };

struct ScalingOrbit {
  ScalingClass cls;
  Felt b;        // scaling witness: u = b^2 (or -u = b^2 for the D_{-1} class)
  bool negated;  // D_u = -b^7 * D_base rather than +b^7 * D_base
};

// Resolves which of the two scaling classes D_u falls in and verifies the
// claimed elementwise identity D_u = (+|-) b^7 D_{base}.
inline ScalingOrbit scaling_orbit_check(const FieldCtx& f, Felt u) {
  if (u == 0) throw std::invalid_argument("scaling_orbit_check: u must be nonzero");
  if (f.m() % 2 == 0 || f.m() % 3 == 0)
    throw std::invalid_argument("scaling_orbit_check: requires odd m with m not divisible by 3");

  ScalingOrbit orbit{};
  Felt base_u;
  if (f.quadratic_character(u) == 1) {
    orbit.cls = ScalingClass::equivalent_to_d1;
    base_u = 1;
    orbit.b = f.exp(f.log(u) / 2);
  } else {
    orbit.cls = ScalingClass::equivalent_to_dminus1;
    base_u = f.neg(1);
    orbit.b = f.exp(f.log(f.neg(u)) / 2);
  }
  orbit.negated = f.quadratic_character(orbit.b) == -1;

  const ElementSet du = dickson_image(f, 7, u);
  const ElementSet base = dickson_image(f, 7, base_u);
  const Felt scale = orbit.negated ? f.neg(f.pow(orbit.b, 7)) : f.pow(orbit.b, 7);
  const ElementSet scaled = affine_image(f, base, scale, 0);
  if (!(du == scaled))
    throw std::logic_error("scaling_orbit_check: scaling identity failed (internal error)");
  return orbit;
}

// One-time calibration of the pair convention against the published Paley row
// for m = 5. The brace notation suggests unordered pairs; this pins it to the
// published multiplicities rather than to a reading of the notation.
inline PairConvention calibrate_pair_convention() {
  const FieldCtx f(5);
  const auto dist =
      triple_distribution(f, paley_set(f), PairConvention::unordered_distinct, "paley");
  const std::vector<std::pair<std::uint32_t, std::int64_t>> anchor = {
      {26, 1815}, {27, 3630}, {28, 1815}, {29, 7260}, {33, 1815}};
  bool unordered_ok = true, ordered_ok = true;
  for (const auto& [v, mult] : anchor) {
    unordered_ok = unordered_ok && dist.multiplicity_of(v) == mult;
    ordered_ok = ordered_ok && dist.multiplicity_of(v) * 2 == mult;
  }
  if (unordered_ok) return PairConvention::unordered_distinct;
  if (ordered_ok) return PairConvention::ordered_distinct;
  throw std::logic_error("calibrate_pair_convention: neither convention matches the anchor row");
}

// Calibrated default (see calibrate_pair_convention; asserted in the tests).
inline constexpr PairConvention kDefaultConvention = PairConvention::unordered_distinct;

}  // namespace skewhad
