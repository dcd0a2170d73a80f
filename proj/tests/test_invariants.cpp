#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <random>

#include "skewhad/invariants.hpp"

using namespace skewhad;

namespace {

// Independent oracle: direct membership triple loop over unordered pairs.
std::map<std::uint32_t, std::int64_t> naive_triple_hist(const FieldCtx& f, const ElementSet& d) {
  std::map<std::uint32_t, std::int64_t> h;
  for (Felt a = 1; a < f.q(); ++a) {
    for (Felt b = a + 1; b < f.q(); ++b) {
      std::uint32_t t = 0;
      d.for_each([&](Felt z) {
        if (d.contains(f.sub(z, a)) && d.contains(f.sub(z, b))) ++t;
      });
      ++h[t];
    }
  }
  return h;
}

ElementSet random_subset(const FieldCtx& f, std::uint32_t k, std::mt19937_64& rng) {
  std::vector<Felt> all(f.q());
  for (Felt i = 0; i < f.q(); ++i) all[i] = i;
  for (std::uint32_t i = 0; i < k; ++i) {
    const std::uint32_t j = i + static_cast<std::uint32_t>(rng() % (f.q() - i));
    std::swap(all[i], all[j]);
  }
  ElementSet s(f);
  for (std::uint32_t i = 0; i < k; ++i) s.insert(all[i]);
  return s;
}

std::map<std::uint32_t, std::int64_t> as_map(const TripleDist& d) {
  return {d.entries.begin(), d.entries.end()};
}

}  // namespace

TEST_CASE("triple distribution agrees with the naive oracle") {
  FieldCtx f(3);
  std::mt19937_64 rng(0x731);
  std::vector<ElementSet> cases{paley_set(f)};
  for (int i = 0; i < 5; ++i) cases.push_back(random_subset(f, 13, rng));
  for (const auto& d : cases) {
    const auto oracle = naive_triple_hist(f, d);
    const auto dist = triple_distribution(f, d, PairConvention::unordered_distinct);
    CHECK(as_map(dist) == oracle);
  }
}

TEST_CASE("m=3 Paley distribution, frozen") {
  FieldCtx f(3);
  const auto dist = triple_distribution(f, paley_set(f), PairConvention::unordered_distinct);
  CHECK(dist.entries == decltype(dist.entries){{2, 156}, {3, 130}, {4, 39}});
}

TEST_CASE("ordered convention doubles the multiplicities") {
  FieldCtx f(3);
  const auto un = triple_distribution(f, paley_set(f), PairConvention::unordered_distinct);
  const auto ord = triple_distribution(f, paley_set(f), PairConvention::ordered_distinct);
  REQUIRE(un.entries.size() == ord.entries.size());
  for (std::size_t i = 0; i < un.entries.size(); ++i) {
    CHECK(un.entries[i].first == ord.entries[i].first);
    CHECK(un.entries[i].second * 2 == ord.entries[i].second);
  }
}

TEST_CASE("pair convention calibrates to unordered against the Paley anchor") {
  CHECK(calibrate_pair_convention() == kDefaultConvention);
  CHECK(kDefaultConvention == PairConvention::unordered_distinct);
}

TEST_CASE("published m=5 distribution rows") {
  FieldCtx f(5);
  const int threads = 4;
  struct Row {
    const char* label;
    ElementSet set;
    std::vector<std::pair<std::uint32_t, std::int64_t>> anchor;
  };
  std::vector<Row> rows;
  rows.push_back({"paley", paley_set(f), {{26, 1815}, {27, 3630}, {28, 1815}, {29, 7260}, {33, 1815}}});
  rows.push_back({"dy1", dy_image(f, 1), {{23, 15}, {24, 30}, {25, 285}, {26, 1245}, {35, 45}}});
  rows.push_back({"dy-1", dy_image(f, -1), {{24, 75}, {25, 435}, {26, 1155}, {27, 2385}, {35, 120}}});
  rows.push_back({"d7:1", dickson_image(f, 7, 1), {{23, 30}, {24, 60}, {25, 390}, {26, 1110}, {36, 45}}});
  rows.push_back({"d7:-1", dickson_image(f, 7, f.neg(1)),
                  {{23, 15}, {24, 75}, {25, 330}, {26, 1005}, {36, 15}}});

  std::vector<TripleDist> dists;
  for (const auto& row : rows) {
    auto dist = triple_distribution(f, row.set, kDefaultConvention, row.label, threads);
    for (const auto& [v, mult] : row.anchor) {
      INFO(row.label << " value " << v);
      CHECK(dist.multiplicity_of(v) == mult);
    }
    dists.push_back(std::move(dist));
  }
  const auto cmp = compare_families(dists);
  CHECK(cmp.pairwise_distinct);
}

TEST_CASE("minmax agrees with the distribution extremes") {
  for (int m : {3, 5}) {
    FieldCtx f(m);
    for (const auto& d : {paley_set(f), dickson_image(f, 7, 1)}) {
      const auto dist = triple_distribution(f, d, kDefaultConvention);
      CHECK(minmax_triple(f, d, kDefaultConvention) == dist.min_max());
    }
  }
}

TEST_CASE("scan is worker-count independent") {
  FieldCtx f(5);
  const auto d = dickson_image(f, 7, 1);
  const auto d1 = triple_distribution(f, d, kDefaultConvention, "", 1);
  const auto d7 = triple_distribution(f, d, kDefaultConvention, "", 7);
  CHECK(d1.entries == d7.entries);
}

TEST_CASE("compare_families rejects mismatched inputs") {
  FieldCtx f3(3), f5(5);
  const auto a = triple_distribution(f3, paley_set(f3), kDefaultConvention, "a");
  const auto b = triple_distribution(f5, paley_set(f5), kDefaultConvention, "b");
  CHECK_THROWS_AS(compare_families({a, b}), std::invalid_argument);
  const auto c = triple_distribution(f3, paley_set(f3), PairConvention::ordered_distinct, "c");
  CHECK_THROWS_AS(compare_families({a, c}), std::invalid_argument);
  CHECK_THROWS_AS(compare_families({}), std::invalid_argument);
  // identical input twice compares equal
  const auto cmp = compare_families({a, a});
  CHECK(cmp.equal[0][1]);
  CHECK_FALSE(cmp.pairwise_distinct);
}

TEST_CASE("affine invariance of the distribution") {
  FieldCtx f(5);
  const auto d = dickson_image(f, 7, 1);
  const auto base = triple_distribution(f, d, kDefaultConvention, "", 4);
  // scalings and shifts generate the affine maps, so checking each family of
  // generators separately covers every s*D + t
  for (Felt s = 1; s < f.q(); ++s) {
    const auto moved = triple_distribution(f, affine_image(f, d, s, 0), kDefaultConvention, "", 4);
    REQUIRE(moved.entries == base.entries);
  }
  for (Felt t = 0; t < f.q(); ++t) {
    const auto moved = triple_distribution(f, affine_image(f, d, 1, t), kDefaultConvention, "", 4);
    REQUIRE(moved.entries == base.entries);
  }
  std::mt19937_64 rng(0xAF1);
  for (int it = 0; it < 20; ++it) {
    const Felt s = 1 + static_cast<Felt>(rng() % (f.q() - 1));
    const Felt t = static_cast<Felt>(rng() % f.q());
    const auto moved = triple_distribution(f, affine_image(f, d, s, t), kDefaultConvention, "", 4);
    REQUIRE(moved.entries == base.entries);
  }
}

TEST_CASE("scaling orbit classes") {
  FieldCtx f(5);
  const Felt g = f.generator();
  {
    const auto r = scaling_orbit_check(f, 1);
    CHECK(r.cls == ScalingClass::equivalent_to_d1);
    CHECK(r.b == 1);
    CHECK_FALSE(r.negated);
  }
  {
    // u = g^2: b = g is a nonsquare, so D_u = -g^7 D_1
    const auto r = scaling_orbit_check(f, f.mul(g, g));
    CHECK(r.cls == ScalingClass::equivalent_to_d1);
    CHECK(r.b == g);
    CHECK(r.negated);
  }
  {
    // u = g^4: b = g^2 is a square, so D_u = +(g^2)^7 D_1
    const auto r = scaling_orbit_check(f, f.pow(g, 4));
    CHECK(r.cls == ScalingClass::equivalent_to_d1);
    CHECK(r.b == f.mul(g, g));
    CHECK_FALSE(r.negated);
  }
  {
    const auto r = scaling_orbit_check(f, g);  // nonsquare
    CHECK(r.cls == ScalingClass::equivalent_to_dminus1);
  }
  // every u lands in the class matching its quadratic character
  for (Felt u = 1; u < f.q(); ++u) {
    const auto r = scaling_orbit_check(f, u);
    CHECK((r.cls == ScalingClass::equivalent_to_d1) == (f.quadratic_character(u) == 1));
  }
  CHECK_THROWS_AS(scaling_orbit_check(f, 0), std::invalid_argument);
  CHECK_THROWS_AS(scaling_orbit_check(FieldCtx(4), 1), std::invalid_argument);
  CHECK_THROWS_AS(scaling_orbit_check(FieldCtx(3), 1), std::invalid_argument);
}

TEST_CASE("capacity guard for the translate cache") {
  FieldCtx f(10);
  ElementSet d(f);
  d.insert(1);
  d.insert(2);
  CHECK_THROWS_AS(triple_distribution(f, d, kDefaultConvention), std::invalid_argument);
}
