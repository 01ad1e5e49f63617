#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "qrep/bijection.hpp"

namespace qrep {

namespace detail {

inline void require_full_module_context(const CategoryContext& ctx) {
  if (ctx.restricted)
    throw std::invalid_argument("silting analysis is only defined over the full module context");
}

}  // namespace detail

struct PresiltingCheck {
  bool ok = true;
  std::string witness;
};

inline PresiltingCheck is_presilting(const CategoryContext& ctx, u64 mask) {
  detail::require_full_module_context(ctx);
  require_in_context(ctx, mask);
  PresiltingCheck out;
  for (u32 k = 1; k <= ctx.gldim; ++k)
    for (u32 i = 0; i < ctx.size(); ++i) {
      if (!((mask >> i) & 1)) continue;
      for (u32 j = 0; j < ctx.size(); ++j) {
        if (!((mask >> j) & 1)) continue;
        if (ctx.ext[k - 1][i][j] != 0) {
          out.ok = false;
          out.witness = "nonvanishing degree-" + std::to_string(k) + " extension from member " +
                        std::to_string(i) + " to member " + std::to_string(j);
          return out;
        }
      }
    }
  return out;
}

struct SiltingCheck {
  bool ok = false;
  PresiltingCheck presilting;
  ClosureResult closure;
  std::vector<u64> trace;  // closure masks per round, ending at the fixpoint
  std::string witness;
};

inline SiltingCheck is_silting(const CategoryContext& ctx, u64 mask) {
  detail::require_full_module_context(ctx);
  require_in_context(ctx, mask);
  SiltingCheck out;
  out.presilting = is_presilting(ctx, mask);
  u64 cur = mask;
  out.trace.push_back(cur);
  while (true) {
    u64 grow = 0;
    ThickCheck pass;
    detail::scan_tier1(ctx, cur, &grow, pass);
    detail::scan_tier2(ctx, cur, &grow, pass);
    out.closure.stats.absorb(pass.stats);
    u64 next = cur | grow;
    if (next == cur) break;
    cur = next;
    out.trace.push_back(cur);
  }
  out.closure.mask = cur;
  if (!out.presilting.ok) {
    out.witness = out.presilting.witness;
  } else if (out.closure.mask != ctx.universe) {
    out.witness = "thick closure stops at " + detail::mask_note(out.closure.mask);
  }
  out.ok = out.presilting.ok && out.closure.mask == ctx.universe;
  return out;
}

struct SiltingEntry {
  u64 mask = 0;
  SiltingCheck check;
};

inline std::vector<SiltingEntry> enumerate_silting(const CategoryContext& ctx) {
  detail::require_full_module_context(ctx);
  if (std::popcount(ctx.universe) > 20)
    throw std::runtime_error("context too large to enumerate silting subclasses");
  std::vector<SiltingEntry> out;
  u64 uni = ctx.universe;
  for (u64 sub = uni;; sub = (sub - 1) & uni) {
    if (mask_presilting(ctx, sub)) {
      SiltingCheck check = is_silting(ctx, sub);
      if (check.ok) out.push_back({sub, check});
    }
    if (sub == 0) break;
  }
  std::sort(out.begin(), out.end(), [](const SiltingEntry& a, const SiltingEntry& b) {
    u32 pa = std::popcount(a.mask), pb = std::popcount(b.mask);
    if (pa != pb) return pa < pb;
    return a.mask < b.mask;
  });
  return out;
}

// ---------------------------------------------------------------------------
// cotorsion pairs

struct CotorsionPair {
  u64 t = 0;
  u64 f = 0;
};

struct CotorsionReport {
  bool ok = false;
  bool orthogonal = false;      // no degree-1 extension from t to f
  bool covers = false;          // every member admits a conflation f' -> t' -> member
  bool envelopes = false;       // every member admits a conflation member -> f' -> t'
  std::string witness;
  std::vector<std::string> notes;  // one approximation witness per catalog member
  SearchStats stats;
};

namespace detail {

// Bounded multiset generator: all sums of catalog members from `mask` with at
// most `max_parts` components (the empty sum included), as multiplicity vectors.
inline std::vector<std::vector<u32>> bounded_multisets(const CategoryContext& ctx, u64 mask,
                                                       u32 max_parts) {
  std::vector<u32> members;
  for (u32 i = 0; i < ctx.size(); ++i)
    if ((mask >> i) & 1) members.push_back(i);
  std::vector<std::vector<u32>> out;
  std::vector<u32> mult(ctx.size(), 0);
  auto rec = [&](auto&& self, u32 pos, u32 left) -> void {
    if (pos == members.size()) {
      out.push_back(mult);
      return;
    }
    for (u32 c = 0; c <= left; ++c) {
      mult[members[pos]] = c;
      self(self, pos + 1, left - c);
    }
    mult[members[pos]] = 0;
  };
  rec(rec, 0, max_parts);
  return out;
}

inline Module sum_of(const CategoryContext& ctx, const std::vector<u32>& mult) {
  std::vector<Module> parts;
  for (u32 i = 0; i < ctx.size(); ++i)
    for (u32 c = 0; c < mult[i]; ++c) parts.push_back(ctx.member(i));
  if (parts.empty()) return zero_module(*ctx.alg);
  return direct_sum(*ctx.alg, parts).total;
}

}  // namespace detail

inline CotorsionReport is_cotorsion_pair(const CategoryContext& ctx, CotorsionPair p) {
  detail::require_full_module_context(ctx);
  require_in_context(ctx, p.t);
  require_in_context(ctx, p.f);
  CotorsionReport rep;

  rep.orthogonal = true;
  for (u32 i = 0; i < ctx.size() && rep.orthogonal; ++i) {
    if (!((p.t >> i) & 1)) continue;
    for (u32 j = 0; j < ctx.size(); ++j) {
      if (!((p.f >> j) & 1)) continue;
      if (ctx.ext[0][i][j] != 0) {
        rep.orthogonal = false;
        rep.witness = "degree-1 extension from member " + std::to_string(i) + " to member " +
                      std::to_string(j);
        break;
      }
    }
  }

  std::vector<std::vector<u32>> left_sums = detail::bounded_multisets(ctx, p.f, ctx.caps.sum_mult);
  std::vector<std::vector<u32>> right_sums = detail::bounded_multisets(ctx, p.t, ctx.caps.sum_mult);

  rep.covers = true;
  for (u32 c = 0; c < ctx.size(); ++c) {
    if (!((ctx.universe >> c) & 1)) continue;
    if ((p.t >> c) & 1) {
      rep.notes.push_back("member " + std::to_string(c) + ": already a cover");
      continue;
    }
    bool found = false;
    for (const std::vector<u32>& mult : left_sums) {
      Module left = detail::sum_of(ctx, mult);
      if (left.is_zero()) continue;
      MiddleTerms mids = ext1_middle_terms(*ctx.alg, ctx.member(c), left, ctx.caps.ext_cap);
      rep.stats.saturated = rep.stats.saturated || mids.truncated;
      for (const Module& mid : mids.middles) {
        ++rep.stats.checked;
        if (in_add_mask(ctx, mid, p.t)) {
          rep.notes.push_back("member " + std::to_string(c) + ": cover with kernel " +
                              detail::mask_note(support_mask(mult)));
          found = true;
          break;
        }
      }
      if (found) break;
    }
    if (!found) {
      rep.covers = false;
      if (rep.witness.empty())
        rep.witness = "no bounded cover conflation found for member " + std::to_string(c);
    }
  }

  rep.envelopes = true;
  for (u32 c = 0; c < ctx.size(); ++c) {
    if (!((ctx.universe >> c) & 1)) continue;
    if ((p.f >> c) & 1) {
      rep.notes.push_back("member " + std::to_string(c) + ": already an envelope");
      continue;
    }
    bool found = false;
    for (const std::vector<u32>& mult : right_sums) {
      Module right = detail::sum_of(ctx, mult);
      if (right.is_zero()) continue;
      MiddleTerms mids = ext1_middle_terms(*ctx.alg, right, ctx.member(c), ctx.caps.ext_cap);
      rep.stats.saturated = rep.stats.saturated || mids.truncated;
      for (const Module& mid : mids.middles) {
        ++rep.stats.checked;
        if (in_add_mask(ctx, mid, p.f)) {
          rep.notes.push_back("member " + std::to_string(c) + ": envelope with cokernel " +
                              detail::mask_note(support_mask(mult)));
          found = true;
          break;
        }
      }
      if (found) break;
    }
    if (!found) {
      rep.envelopes = false;
      if (rep.witness.empty())
        rep.witness = "no bounded envelope conflation found for member " + std::to_string(c);
    }
  }

  rep.ok = rep.orthogonal && rep.covers && rep.envelopes;
  return rep;
}

inline bool is_hereditary(const CategoryContext& ctx, CotorsionPair p) {
  detail::require_full_module_context(ctx);
  for (u32 k = 2; k <= ctx.gldim; ++k)
    for (u32 i = 0; i < ctx.size(); ++i) {
      if (!((p.t >> i) & 1)) continue;
      for (u32 j = 0; j < ctx.size(); ++j) {
        if (!((p.f >> j) & 1)) continue;
        if (ctx.ext[k - 1][i][j] != 0) return false;
      }
    }
  return true;
}

inline bool is_bounded(const CategoryContext& ctx, CotorsionPair p) {
  detail::require_full_module_context(ctx);
  return tower_hat(ctx, p.t).member_mask == ctx.universe &&
         tower_vee(ctx, p.f).member_mask == ctx.universe;
}

// ---------------------------------------------------------------------------
// the correspondence between silting classes and bounded hereditary pairs

struct ATReport {
  CotorsionPair pair;  // (coresolved-by-M classes, resolved-by-M classes)
  TowerTable vee, hat;
  CotorsionReport pair_check;
  bool hereditary = false;
  bool bounded = false;
  bool intersection_is_input = false;
  bool exact = false;  // tower layers backed by the approximation recursion
  bool all_pass = false;
};

inline ATReport at_bijection_check(const CategoryContext& ctx, u64 mask) {
  detail::require_full_module_context(ctx);
  SiltingCheck pre = is_silting(ctx, mask);
  if (!pre.ok)
    throw std::invalid_argument("correspondence check requires a silting class: " + pre.witness);
  ATReport rep;
  rep.vee = tower_vee(ctx, mask);
  rep.hat = tower_hat(ctx, mask);
  rep.pair = {rep.vee.member_mask, rep.hat.member_mask};
  rep.pair_check = is_cotorsion_pair(ctx, rep.pair);
  rep.hereditary = is_hereditary(ctx, rep.pair);
  rep.bounded = is_bounded(ctx, rep.pair);
  rep.intersection_is_input = (rep.vee.member_mask & rep.hat.member_mask) == mask;
  rep.exact = rep.vee.all_exact && rep.hat.all_exact && !rep.vee.saturated && !rep.hat.saturated;
  rep.all_pass = rep.pair_check.ok && rep.hereditary && rep.bounded && rep.intersection_is_input;
  return rep;
}

// ---------------------------------------------------------------------------
// glued pairs across a triangular context

struct GluedPair {
  CotorsionPair closed;  // input pair on the closed corner copy
  CotorsionPair open;    // input pair on the open corner copy
  CotorsionPair glued;   // resulting pair over the big catalog
};

inline GluedPair glue_cotorsion(const TriangularContext& tc, const CategoryContext& ctx_b,
                                const CategoryContext& ctx_corner, CotorsionPair closed_pair,
                                CotorsionPair open_pair) {
  detail::require_full_module_context(ctx_b);
  detail::require_full_module_context(ctx_corner);
  require_in_context(ctx_corner, closed_pair.t);
  require_in_context(ctx_corner, closed_pair.f);
  require_in_context(ctx_corner, open_pair.t);
  require_in_context(ctx_corner, open_pair.f);
  GluedPair out;
  out.closed = closed_pair;
  out.open = open_pair;
  const Algebra& a = *tc.corner;
  for (u32 i = 0; i < ctx_b.size(); ++i) {
    const Module& mb = ctx_b.member(i);
    u64 up = catalog_support(a, ctx_corner.catalog, i_upper_star(tc, mb));
    u64 sh = catalog_support(a, ctx_corner.catalog, i_shriek(tc, mb));
    u64 op = catalog_support(a, ctx_corner.catalog, j_upper_star(tc, mb));
    if (mask_subset(up, closed_pair.t) && mask_subset(op, open_pair.t))
      out.glued.t |= u64(1) << i;
    if (mask_subset(sh, closed_pair.f) && mask_subset(op, open_pair.f))
      out.glued.f |= u64(1) << i;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Silting classes across the triangular context: gluing direction

struct GlueSiltingReport {
  u64 result = 0;       // add-closure of the embedded and extended inputs
  u64 set_builder = 0;  // tower-membership description from the statement
  bool formula_agrees = false;
  bool i_upper_star_exact = false;
  bool i_shriek_exact = false;
  bool j_lower_shriek_exact = false;
  SiltingCheck silting;  // verification of `result` in the big context
  bool verified = false;
};

inline GlueSiltingReport glue_silting(const TriangularContext& tc, const CategoryContext& ctx_b,
                                      const CategoryContext& ctx_corner, u64 ma_mask, u64 mc_mask) {
  detail::require_full_module_context(ctx_b);
  detail::require_full_module_context(ctx_corner);
  SiltingCheck ca = is_silting(ctx_corner, ma_mask);
  if (!ca.ok)
    throw std::invalid_argument("closed-side input is not silting: " + ca.witness);
  SiltingCheck cc = is_silting(ctx_corner, mc_mask);
  if (!cc.ok)
    throw std::invalid_argument("open-side input is not silting: " + cc.witness);

  GlueSiltingReport rep;
  const Algebra& a = *tc.corner;
  const Algebra& b = *tc.big;

  for (u32 i = 0; i < ctx_corner.size(); ++i) {
    if ((ma_mask >> i) & 1)
      rep.result |= catalog_support(b, ctx_b.catalog, i_lower_star(tc, ctx_corner.member(i)));
    if ((mc_mask >> i) & 1)
      rep.result |= catalog_support(b, ctx_b.catalog, j_lower_shriek(tc, ctx_corner.member(i)));
  }

  u64 ma_vee = tower_vee(ctx_corner, ma_mask).member_mask;
  u64 ma_hat = tower_hat(ctx_corner, ma_mask).member_mask;
  u64 mc_vee = tower_vee(ctx_corner, mc_mask).member_mask;
  u64 mc_hat = tower_hat(ctx_corner, mc_mask).member_mask;
  for (u32 i = 0; i < ctx_b.size(); ++i) {
    const Module& mb = ctx_b.member(i);
    u64 up = catalog_support(a, ctx_corner.catalog, i_upper_star(tc, mb));
    u64 sh = catalog_support(a, ctx_corner.catalog, i_shriek(tc, mb));
    u64 op = catalog_support(a, ctx_corner.catalog, j_upper_star(tc, mb));
    if (mask_subset(up, ma_vee) && mask_subset(op, mc_vee) && mask_subset(sh, ma_hat) &&
        mask_subset(op, mc_hat))
      rep.set_builder |= u64(1) << i;
  }
  rep.formula_agrees = rep.set_builder == rep.result;

  FunctorExactness ex = probe_exactness(tc, ctx_corner.catalog, ctx_b.catalog);
  rep.i_upper_star_exact = ex.i_upper_star;
  rep.i_shriek_exact = ex.i_shriek;
  rep.j_lower_shriek_exact = ex.j_lower_shriek;

  rep.silting = is_silting(ctx_b, rep.result);
  rep.verified = rep.silting.ok;
  return rep;
}

// ---------------------------------------------------------------------------
// Silting classes across the triangular context: restriction direction

struct RestrictSiltingReport {
  TowerTable vee, hat;  // over the big context
  u64 vee_mask = 0, hat_mask = 0;
  bool closed_shriek_stable = false;  // embed(closed restriction) preserves the coresolved class
  bool closed_upper_stable = false;   // embed(closed quotient) preserves the coresolved class
  bool open_lower_stable = false;     // coextend(open restriction) preserves the resolved class
  bool open_shriek_stable = false;    // extend(open restriction) preserves the coresolved class
  u64 candidate_closed = 0, candidate_open = 0;  // corner masks
  SiltingCheck silting_closed, silting_open;
  bool add_case_closed = false;  // images of the input generate the candidate
  bool add_case_open = false;
  bool verified = false;
};

inline RestrictSiltingReport restrict_silting(const TriangularContext& tc,
                                              const CategoryContext& ctx_b,
                                              const CategoryContext& ctx_corner, u64 m_mask) {
  detail::require_full_module_context(ctx_b);
  detail::require_full_module_context(ctx_corner);
  SiltingCheck cm = is_silting(ctx_b, m_mask);
  if (!cm.ok) throw std::invalid_argument("input class is not silting: " + cm.witness);

  RestrictSiltingReport rep;
  const Algebra& a = *tc.corner;
  const Algebra& b = *tc.big;
  rep.vee = tower_vee(ctx_b, m_mask);
  rep.hat = tower_hat(ctx_b, m_mask);
  rep.vee_mask = rep.vee.member_mask;
  rep.hat_mask = rep.hat.member_mask;

  rep.closed_shriek_stable = true;
  rep.closed_upper_stable = true;
  rep.open_shriek_stable = true;
  u64 up_vee = 0, sh_hat = 0, op_vee = 0, op_hat = 0, up_of_m = 0, op_of_m = 0;
  for (u32 i = 0; i < ctx_b.size(); ++i) {
    const Module& mb = ctx_b.member(i);
    if ((rep.vee_mask >> i) & 1) {
      u64 emb_sh = catalog_support(b, ctx_b.catalog, i_lower_star(tc, i_shriek(tc, mb)));
      if (!mask_subset(emb_sh, rep.vee_mask)) rep.closed_shriek_stable = false;
      u64 emb_up = catalog_support(b, ctx_b.catalog, i_lower_star(tc, i_upper_star(tc, mb)));
      if (!mask_subset(emb_up, rep.vee_mask)) rep.closed_upper_stable = false;
      u64 ext_op = catalog_support(b, ctx_b.catalog, j_lower_shriek(tc, j_upper_star(tc, mb)));
      if (!mask_subset(ext_op, rep.vee_mask)) rep.open_shriek_stable = false;
      up_vee |= catalog_support(a, ctx_corner.catalog, i_upper_star(tc, mb));
      op_vee |= catalog_support(a, ctx_corner.catalog, j_upper_star(tc, mb));
    }
    if ((rep.hat_mask >> i) & 1) {
      sh_hat |= catalog_support(a, ctx_corner.catalog, i_shriek(tc, mb));
      op_hat |= catalog_support(a, ctx_corner.catalog, j_upper_star(tc, mb));
    }
    if ((m_mask >> i) & 1) {
      up_of_m |= catalog_support(a, ctx_corner.catalog, i_upper_star(tc, mb));
      op_of_m |= catalog_support(a, ctx_corner.catalog, j_upper_star(tc, mb));
    }
  }
  rep.open_lower_stable = true;
  for (u32 i = 0; i < ctx_b.size(); ++i) {
    if (!((rep.hat_mask >> i) & 1)) continue;
    u64 coext = catalog_support(b, ctx_b.catalog, j_lower_star(tc, j_upper_star(tc, ctx_b.member(i))));
    if (!mask_subset(coext, rep.hat_mask)) rep.open_lower_stable = false;
  }

  rep.candidate_closed = up_vee & sh_hat;
  rep.candidate_open = op_vee & op_hat;
  rep.silting_closed = is_silting(ctx_corner, rep.candidate_closed);
  rep.silting_open = is_silting(ctx_corner, rep.candidate_open);
  rep.add_case_closed = up_of_m == rep.candidate_closed;
  rep.add_case_open = op_of_m == rep.candidate_open;
  rep.verified = rep.silting_closed.ok && rep.silting_open.ok;
  return rep;
}

// ---------------------------------------------------------------------------
// constructive approximation conflations against a glued pair

struct ApproxStep {
  Conflation conflation;  // kernel -> middle -> target
  bool open_trivial = false;
  bool closed_trivial = false;
};

struct ApproxChain {
  std::vector<ApproxStep> steps;  // target of step 0 is the input module
  bool ok = false;
  std::string stage;  // failure description when not ok
};

namespace detail {

struct PullbackData {
  Module module;
  Morphism to_left, to_right;  // projections to the two span legs
};

inline PullbackData pullback(const Algebra& alg, const Module& left, const Module& right,
                             const Module& target, const Morphism& f, const Morphism& g) {
  DirectSum ds = direct_sum(alg, {left, right});
  Morphism h = zero_morphism(alg, ds.total, target);
  for (u32 v = 0; v < alg.n_vertices(); ++v)
    h.comps[v] = f.comps[v].hstack(g.comps[v].scaled(alg.prime() - 1));
  SubModule k = kernel_of(alg, ds.total, h);
  PullbackData out;
  out.module = k.module;
  std::vector<Module> parts{left, right};
  out.to_left = compose(summand_projection(alg, ds, parts, 0), k.inclusion);
  out.to_right = compose(summand_projection(alg, ds, parts, 1), k.inclusion);
  return out;
}

struct CornerApprox {
  bool trivial = false;
  Module t;
  Morphism ev;  // t -> y, surjective
  bool ok = true;
};

inline CornerApprox corner_approximation(const CategoryContext& ctx, u64 mask, const Module& y) {
  CornerApprox out;
  if (in_add_mask(ctx, y, mask)) {
    out.trivial = true;
    out.t = y;
    out.ev = identity_morphism(*ctx.alg, y);
    return out;
  }
  BuiltSum ev = evaluation(ctx, mask, y);
  out.t = ev.total;
  out.ev = ev.map;
  out.ok = is_epi(out.ev);
  return out;
}

}  // namespace detail

inline ApproxChain approximation_triangle(const TriangularContext& tc, const CategoryContext& ctx_b,
                                          const CategoryContext& ctx_corner, const GluedPair& gp,
                                          Module m) {
  detail::require_full_module_context(ctx_b);
  detail::require_full_module_context(ctx_corner);
  const Algebra& b = *tc.big;
  ApproxChain chain;
  for (u32 step = 0; step <= ctx_b.caps.tower_depth; ++step) {
    if (m.is_zero()) {
      chain.ok = true;
      return chain;
    }
    Triple t = to_triple(tc, m);

    detail::CornerApprox open_ap = detail::corner_approximation(ctx_corner, gp.open.t, t.y);
    if (!open_ap.ok) {
      chain.stage = "open-side approximation is not surjective";
      return chain;
    }
    Module mid = m;
    Morphism mid_to_m = identity_morphism(b, m);
    if (!open_ap.trivial) {
      detail::PullbackData pb =
          detail::pullback(b, j_lower_star(tc, open_ap.t), m, j_lower_star(tc, t.y),
                           j_lower_star_mor(tc, open_ap.ev), unit_open(tc, m));
      mid = pb.module;
      mid_to_m = pb.to_right;
    }

    QuotientModule q = i_upper_star_data(tc, mid);
    detail::CornerApprox closed_ap = detail::corner_approximation(ctx_corner, gp.closed.t, q.module);
    if (!closed_ap.ok) {
      chain.stage = "closed-side approximation is not surjective";
      return chain;
    }
    Module top = mid;
    Morphism top_to_mid = identity_morphism(b, mid);
    if (!closed_ap.trivial) {
      detail::PullbackData pb =
          detail::pullback(b, i_lower_star(tc, closed_ap.t), mid, i_lower_star(tc, q.module),
                           i_lower_star_mor(tc, closed_ap.ev), unit_closed(tc, mid));
      top = pb.module;
      top_to_mid = pb.to_right;
    }

    Morphism proj = compose(mid_to_m, top_to_mid);
    SubModule ker = kernel_of(b, top, proj);
    ApproxStep st;
    st.open_trivial = open_ap.trivial;
    st.closed_trivial = closed_ap.trivial;
    st.conflation = {ker.module, top, m, ker.inclusion, proj};
    if (!is_conflation(b, st.conflation)) {
      chain.stage = "assembled sequence is not a conflation";
      return chain;
    }
    if (!in_add_mask(ctx_b, top, gp.glued.t)) {
      chain.stage = "middle term escapes the glued class";
      return chain;
    }
    Module next = ker.module;
    chain.steps.push_back(std::move(st));
    m = std::move(next);
  }
  chain.stage = "approximation chain exceeds the depth bound";
  return chain;
}

}  // namespace qrep
