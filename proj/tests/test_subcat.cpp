#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "expected_tables.hpp"
#include "helpers.hpp"
#include "qrep/subcat.hpp"

using namespace qrep;
namespace ex = qrep_expected;

static std::vector<u32> to_dims(const unsigned* row, u32 n) {
  std::vector<u32> d(n);
  for (u32 i = 0; i < n; ++i) d[i] = row[i];
  return d;
}

static CategoryContext& ctx_a2() {
  static Algebra alg = load_algebra("a2.json");
  static CategoryContext ctx = make_full_context(alg, enumerate_indecomposables(alg));
  return ctx;
}

static CategoryContext& ctx_sq() {
  static Algebra alg = load_algebra("square.json");
  static CategoryContext ctx = make_full_context(alg, enumerate_indecomposables(alg));
  return ctx;
}

// reference-index -> catalog-index maps
static const std::vector<u32>& map_a2() {
  static std::vector<u32> m = [] {
    std::vector<u32> mm(ex::a_count);
    for (u32 i = 0; i < ex::a_count; ++i)
      mm[i] = catalog_index_by_dims(ctx_a2().catalog, to_dims(ex::a_dims[i], 2));
    return mm;
  }();
  return m;
}

static const std::vector<u32>& map_sq() {
  static std::vector<u32> m = [] {
    std::vector<u32> mm(ex::b_count);
    for (u32 i = 0; i < ex::b_count; ++i)
      mm[i] = catalog_index_by_dims(ctx_sq().catalog, to_dims(ex::b_dims[i], 4));
    return mm;
  }();
  return m;
}

static u64 tr(const std::vector<u32>& m, u64 ref_mask) {
  u64 out = 0;
  for (u32 i = 0; i < m.size(); ++i)
    if ((ref_mask >> i) & 1) out |= u64(1) << m[i];
  return out;
}

static std::set<u64> entry_masks(const std::vector<ThickEntry>& entries) {
  std::set<u64> s;
  for (const auto& e : entries) s.insert(e.mask);
  return s;
}

TEST_CASE("thick classes of the line algebra") {
  auto& ctx = ctx_a2();
  auto& m = map_a2();

  std::set<u64> expect;
  for (u32 k = 0; k < 5; ++k) expect.insert(tr(m, ex::thick_a_masks[k]));

  auto entries = enumerate_thick(ctx);
  REQUIRE(entry_masks(entries) == expect);
  for (const auto& e : entries) REQUIRE(is_thick(ctx, e.mask).ok);

  SECTION("two-member classes missing the third are rejected with a witness") {
    for (u64 bad : {tr(m, 3), tr(m, 5), tr(m, 6)}) {
      ThickCheck c = is_thick(ctx, bad);
      REQUIRE_FALSE(c.ok);
      REQUIRE_FALSE(c.witness.empty());
    }
  }
}

TEST_CASE("thick closure is a closure operator on the line algebra") {
  auto& ctx = ctx_a2();
  auto& m = map_a2();

  REQUIRE(thick_closure(ctx, tr(m, 2)).mask == tr(m, 2));
  REQUIRE(thick_closure(ctx, tr(m, 3)).mask == ctx.universe);

  for (u64 mask = 0; mask <= ctx.universe; ++mask) {
    u64 cl = thick_closure(ctx, mask).mask;
    REQUIRE(mask_subset(mask, cl));
    REQUIRE(thick_closure(ctx, cl).mask == cl);
    REQUIRE(is_thick(ctx, cl).ok);
    for (u64 sub = mask; ; sub = (sub - 1) & mask) {
      REQUIRE(mask_subset(thick_closure(ctx, sub).mask, cl));
      if (sub == 0) break;
    }
  }
}

TEST_CASE("thick classes of the square algebra over the embedded part") {
  auto& ctx = ctx_sq();
  auto& m = map_sq();

  u64 require_mask = tr(m, 7);  // the three members supported away from the open part
  std::set<u64> expect;
  for (u32 k = 0; k < 5; ++k) expect.insert(tr(m, ex::thick_b_rows[k]));

  auto entries = enumerate_thick(ctx, require_mask);
  REQUIRE(entries.size() == 5);
  REQUIRE(entry_masks(entries) == expect);
  for (const auto& e : entries) REQUIRE(is_thick(ctx, e.mask).ok);
}

TEST_CASE("restricted contexts") {
  SECTION("a non-extension-closed restriction is rejected") {
    REQUIRE_THROWS_AS(make_restricted_context(ctx_a2(), tr(map_a2(), 3)), std::invalid_argument);
  }

  SECTION("thick classes inside the extension-closed square example") {
    auto& m = map_sq();
    CategoryContext rctx = make_restricted_context(ctx_sq(), tr(m, ex::ext_closed_example_mask));
    std::set<u64> expect;
    for (u32 k = 0; k < 4; ++k) expect.insert(tr(m, ex::ext_closed_thick_masks[k]));
    auto entries = enumerate_thick(rctx, tr(m, 7));
    REQUIRE(entry_masks(entries) == expect);
  }

  SECTION("the example class is not thick in the full category") {
    auto& m = map_sq();
    ThickCheck c = is_thick(ctx_sq(), tr(m, ex::ext_closed_example_mask));
    REQUIRE_FALSE(c.ok);
  }

  SECTION("thick classes inside the small line-algebra context") {
    auto& m = map_a2();
    CategoryContext rctx = make_restricted_context(ctx_a2(), tr(m, 5));
    std::set<u64> expect;
    for (u32 k = 0; k < 4; ++k) expect.insert(tr(m, ex::ext_closed_small_masks[k]));
    auto entries = enumerate_thick(rctx);
    REQUIRE(entry_masks(entries) == expect);
  }

  SECTION("towers are refused in restricted mode") {
    auto& m = map_a2();
    CategoryContext rctx = make_restricted_context(ctx_a2(), tr(m, 5));
    REQUIRE_THROWS_AS(hat_layer(rctx, tr(m, 4), ctx_a2().member(0)), std::invalid_argument);
  }
}

TEST_CASE("approximation towers on the line algebra") {
  auto& ctx = ctx_a2();
  auto& m = map_a2();

  for (u32 row = 0; row < 2; ++row) {
    u64 mask = tr(m, ex::a_silting_masks[row]);
    REQUIRE(mask_presilting(ctx, mask));

    TowerTable vee = tower_vee(ctx, mask);
    TowerTable hat = tower_hat(ctx, mask);
    REQUIRE(vee.all_exact);
    REQUIRE(hat.all_exact);
    REQUIRE_FALSE(vee.saturated);
    REQUIRE_FALSE(hat.saturated);

    for (u32 c = 0; c < ex::a_count; ++c) {
      u32 want_vee = ex::a_vee_layers[row][c];
      u32 want_hat = ex::a_hat_layers[row][c];
      const TowerResult& rv = vee.entries[m[c]];
      const TowerResult& rh = hat.entries[m[c]];
      if (want_vee == 255) {
        REQUIRE_FALSE(rv.member);
      } else {
        REQUIRE(rv.member);
        REQUIRE(rv.layer == want_vee);
      }
      if (want_hat == 255) {
        REQUIRE_FALSE(rh.member);
      } else {
        REQUIRE(rh.member);
        REQUIRE(rh.layer == want_hat);
      }
    }
  }

  SECTION("refutation does not need the vanishing gate") {
    u64 simples = tr(m, 3);
    REQUIRE_FALSE(mask_presilting(ctx, simples));
    TowerResult r = hat_layer(ctx, simples, ctx.member(catalog_index_by_dims(ctx.catalog, {1, 1})));
    REQUIRE_FALSE(r.member);
    REQUIRE(r.exact);
  }
}

TEST_CASE("closure properties on seeded random generator masks") {
  auto& ctx = ctx_sq();
  std::mt19937_64 rng(11);
  for (u32 round = 0; round < 40; ++round) {
    u64 mask = rng() & ctx.universe;
    u64 cl = thick_closure(ctx, mask).mask;
    REQUIRE(mask_subset(mask, cl));
    REQUIRE(thick_closure(ctx, cl).mask == cl);
    REQUIRE(is_thick(ctx, cl).ok);
    u64 sub = mask & rng();
    REQUIRE(mask_subset(thick_closure(ctx, sub).mask, cl));
  }
}
