#pragma once

// Candidate difference sets (Paley squares, Dickson images, generic
// permutation images) and their exact verification: skewness and the full
// difference-count report, all in integer arithmetic.

#include <cstdint>
#include <optional>
#include <stdexcept>

#include "skewhad/dickson.hpp"
#include "skewhad/element_set.hpp"
#include "skewhad/parallel.hpp"

namespace skewhad {

// {f(x^2) : x != 0} when squares_only, else {f(x) : x != 0}
template <class Fn>
ElementSet build_image_set(const FieldCtx& f, Fn&& map, bool squares_only = true) {
  ElementSet d(f);
  for (Felt x = 1; x < f.q(); ++x) d.insert(map(squares_only ? f.mul(x, x) : x));
  return d;
}

// nonzero quadratic residues
inline ElementSet paley_set(const FieldCtx& f) {
  return build_image_set(f, [](Felt s) { return s; }, true);
}

// {D_n(x^2, u) : x != 0}
inline ElementSet dickson_image(const FieldCtx& f, int n, Felt u) {
  const DicksonSpec spec{n, u};
  return build_image_set(f, [&](Felt s) { return dickson_eval(f, spec, s); }, true);
}

// The order-5 comparison family: label l maps to the image of D_5(x^2, -l).
// The sign is calibrated against the published m=5 distribution rows.
inline ElementSet dy_image(const FieldCtx& f, int label) {
  if (label != 1 && label != -1) throw std::invalid_argument("dy_image: label must be +1 or -1");
  return dickson_image(f, 5, label == 1 ? f.neg(1) : Felt{1});
}

// 0 not in D, D and -D disjoint, |D| = (q-1)/2
inline bool is_skew(const FieldCtx& f, const ElementSet& d) {
  if (d.contains(0)) return false;
  if (d.cardinality() != (f.q() - 1) / 2) return false;
  return d.disjoint_with(d.negated());
}

enum class SetVerdict { difference_set, partial_difference_set, neither };

struct ClassSummary {
  std::int64_t min = -1;
  std::int64_t max = -1;
  bool uniform = true;  // vacuously true for an empty class
};

struct DsReport {
  std::uint32_t v = 0;
  std::uint32_t k = 0;
  SetVerdict verdict = SetVerdict::neither;
  std::int64_t lambda = -1;  // difference_set lambda, or the PDS on-class count
  std::int64_t mu = -1;      // PDS off-class count (-1 when the class is empty)
  bool skew = false;
  ClassSummary on_class;   // counts N(g) for g in (D u -D) \ {0}
  ClassSummary off_class;  // counts N(g) elsewhere (g != 0)
};

// Tallies N(g) = |D n (D+g)| for every g != 0 via translated-bitset popcounts
// and classifies the set. The counting identity sum_g N(g) = k(k-1) is
// asserted on every call.
inline DsReport difference_report(const FieldCtx& f, const ElementSet& d, int threads = 1) {
  const std::uint32_t q = f.q();
  const std::uint32_t k = d.cardinality();
  if (k < 1) throw std::invalid_argument("difference_report: set must be nonempty");

  std::vector<std::uint32_t> counts(q, 0);  // counts[g] = N(g), g >= 1
  parallel_chunks(q - 1, threads, [&](int, std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t gi = begin; gi < end; ++gi) {
      const Felt g = static_cast<Felt>(gi + 1);
      counts[g] = d.intersect_count(d.translate(g));
    }
  });

  std::uint64_t total = 0;
  for (Felt g = 1; g < q; ++g) total += counts[g];
  if (total != static_cast<std::uint64_t>(k) * (k - 1))
    throw std::logic_error("difference_report: counting identity violated");

  ElementSet on(f);
  {
    const ElementSet negd = d.negated();
    for (Felt g = 1; g < q; ++g)
      if (d.contains(g) || negd.contains(g)) on.insert(g);
  }

  DsReport rep;
  rep.v = q;
  rep.k = k;
  rep.skew = is_skew(f, d);

  auto fold = [&](bool in_on_class) {
    ClassSummary s;
    bool first = true;
    for (Felt g = 1; g < q; ++g) {
      if (on.contains(g) != in_on_class) continue;
      const std::int64_t n = counts[g];
      if (first) {
        s.min = s.max = n;
        first = false;
      } else {
        if (n < s.min) s.min = n;
        if (n > s.max) s.max = n;
      }
    }
    s.uniform = (s.min == s.max);
    return s;
  };
  rep.on_class = fold(true);
  rep.off_class = fold(false);

  const bool off_empty = rep.off_class.min == -1;
  if (rep.on_class.uniform && (off_empty || (rep.off_class.uniform &&
                                             rep.on_class.min == rep.off_class.min))) {
    rep.verdict = SetVerdict::difference_set;
    rep.lambda = rep.on_class.min;
  } else if (rep.on_class.uniform && rep.off_class.uniform) {
    rep.verdict = SetVerdict::partial_difference_set;
    rep.lambda = rep.on_class.min;
    rep.mu = rep.off_class.min;
  } else {
    rep.verdict = SetVerdict::neither;
  }
  return rep;
}

// s*D + t, s != 0
inline ElementSet affine_image(const FieldCtx& f, const ElementSet& d, Felt s, Felt t) {
  if (s == 0) throw std::invalid_argument("affine_image: scalar must be nonzero");
  ElementSet r(f);
  d.for_each([&](Felt x) { r.insert(f.add(f.mul(s, x), t)); });
  return r;
}

}  // namespace skewhad
