#pragma once

#include <algorithm>
#include <set>

#include "qrep/recollement.hpp"
#include "qrep/subcat.hpp"

namespace qrep {

inline u64 catalog_support(const Algebra& alg, const IndecCatalog& cat, const Module& m) {
  if (m.is_zero()) return 0;
  return support_mask(cat.multiplicities(alg, m));
}

// Mask over the big catalog of the embedded copy of every corner indecomposable.
inline u64 embedded_image_mask(const TriangularContext& tc, const IndecCatalog& cat_b,
                               const IndecCatalog& cat_a) {
  u64 m = 0;
  for (const Module& x : cat_a.modules)
    m |= catalog_support(*tc.big, cat_b, i_lower_star(tc, x));
  return m;
}

// Open image of a class in the big context, as a corner catalog mask.
inline u64 phi_mask(const TriangularContext& tc, const CategoryContext& ctx_b,
                    const IndecCatalog& cat_a, u64 v_mask) {
  require_in_context(ctx_b, v_mask);
  u64 out = 0;
  for (u32 i = 0; i < ctx_b.size(); ++i)
    if ((v_mask >> i) & 1)
      out |= catalog_support(*tc.corner, cat_a, j_upper_star(tc, ctx_b.member(i)));
  return out;
}

// Open preimage of a corner class, as a mask over the big context universe.
inline u64 psi_mask(const TriangularContext& tc, const CategoryContext& ctx_b,
                    const IndecCatalog& cat_a, u64 u_mask) {
  u64 out = 0;
  for (u32 i = 0; i < ctx_b.size(); ++i) {
    if (!((ctx_b.universe >> i) & 1)) continue;
    u64 s = catalog_support(*tc.corner, cat_a, j_upper_star(tc, ctx_b.member(i)));
    if (mask_subset(s, u_mask)) out |= u64(1) << i;
  }
  return out;
}

struct BijectionPair {
  u64 big_mask = 0;
  u64 corner_mask = 0;
};

struct BijectionReport {
  u64 embedded = 0;
  std::vector<ThickEntry> big_thick;     // thick classes containing the embedded copy
  std::vector<ThickEntry> corner_thick;  // all thick classes of the corner context
  std::vector<BijectionPair> pairs;      // aligned with big_thick
  bool counts_match = false;
  bool phi_matches = false;   // every open image is a listed corner class
  bool psi_matches = false;   // every open preimage is a listed big class
  bool round_trip = false;    // both composites are the identity
  bool all_pass = false;
  SearchStats stats;
};

inline BijectionReport verify_bijection(const TriangularContext& tc, const CategoryContext& ctx_b,
                                        const CategoryContext& ctx_a) {
  if (ctx_b.alg->content_hash() != tc.big->content_hash())
    throw std::invalid_argument("big context algebra does not match the doubling");
  if (ctx_a.alg->content_hash() != tc.corner->content_hash())
    throw std::invalid_argument("corner context algebra does not match the doubling");

  BijectionReport rep;
  rep.embedded = embedded_image_mask(tc, ctx_b.catalog, ctx_a.catalog);
  if (!mask_subset(rep.embedded, ctx_b.universe))
    throw std::invalid_argument("context does not contain the embedded corner copy");
  if (phi_mask(tc, ctx_b, ctx_a.catalog, ctx_b.universe) != ctx_a.universe)
    throw std::invalid_argument("corner context universe is not the open image of the big context");

  rep.big_thick = enumerate_thick(ctx_b, rep.embedded);
  rep.corner_thick = enumerate_thick(ctx_a);
  for (const ThickEntry& e : rep.big_thick) rep.stats.absorb(e.check.stats);
  for (const ThickEntry& e : rep.corner_thick) rep.stats.absorb(e.check.stats);

  std::set<u64> corner_set, big_set;
  for (const ThickEntry& e : rep.corner_thick) corner_set.insert(e.mask);
  for (const ThickEntry& e : rep.big_thick) big_set.insert(e.mask);

  rep.counts_match = rep.big_thick.size() == rep.corner_thick.size();
  rep.phi_matches = true;
  rep.round_trip = true;
  for (const ThickEntry& e : rep.big_thick) {
    u64 p = phi_mask(tc, ctx_b, ctx_a.catalog, e.mask);
    rep.pairs.push_back({e.mask, p});
    if (!corner_set.count(p)) rep.phi_matches = false;
    if (psi_mask(tc, ctx_b, ctx_a.catalog, p) != e.mask) rep.round_trip = false;
  }
  rep.psi_matches = true;
  for (const ThickEntry& e : rep.corner_thick) {
    u64 q = psi_mask(tc, ctx_b, ctx_a.catalog, e.mask);
    if (!big_set.count(q)) rep.psi_matches = false;
    if (phi_mask(tc, ctx_b, ctx_a.catalog, q) != e.mask) rep.round_trip = false;
  }

  rep.all_pass = rep.counts_match && rep.phi_matches && rep.psi_matches && rep.round_trip;
  return rep;
}

}  // namespace qrep
