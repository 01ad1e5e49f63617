#pragma once

#include <bit>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "qrep/homology.hpp"

namespace qrep {

struct Caps {
  u32 sum_mult = 2;         // components per side in summed-map scans
  u64 hom_enum_cap = 100000;  // morphism evaluations per predicate call
  u64 ext_cap = 10000;        // extension classes per pair
  u32 tower_depth = 8;
  u32 mult_bound = 2;       // per-member multiplicity in tower cover search
};

struct SearchStats {
  u64 checked = 0;
  u64 skipped = 0;
  bool saturated = false;
  void absorb(const SearchStats& o) {
    checked += o.checked;
    skipped += o.skipped;
    saturated = saturated || o.saturated;
  }
};

inline u64 support_mask(const std::vector<u32>& mult) {
  u64 m = 0;
  for (u32 i = 0; i < mult.size(); ++i)
    if (mult[i]) m |= u64(1) << i;
  return m;
}

inline bool mask_subset(u64 a, u64 b) { return (a & ~b) == 0; }

// Per-pair data over the catalog: middle terms of nonsplit extension classes,
// and kernels/cokernels of maps between members.
struct PairTables {
  // middles[x][z]: multiplicity vectors of nonsplit middles of classes
  // 0 -> member x -> E -> member z -> 0
  std::vector<std::vector<std::vector<std::vector<u32>>>> middles;
  std::vector<std::vector<std::vector<std::vector<u32>>>> cokers;  // [i][j]: monos i -> j
  std::vector<std::vector<std::vector<std::vector<u32>>>> kers;    // [i][j]: epis i -> j
  bool truncated = false;
};

// Kernel/cokernel supports of probed maps between bounded sums of catalog
// members, shared between contexts over the same algebra.
struct Tier2Data {
  struct PairEntry {
    u64 need = 0;  // catalog members used by either side
    std::vector<u64> coker_supports;
    std::vector<u64> ker_supports;
  };
  std::vector<PairEntry> pairs;
  SearchStats stats;
};

struct CategoryContext {
  const Algebra* alg = nullptr;
  IndecCatalog catalog;
  u64 universe = 0;       // catalog members of the ambient context
  bool restricted = false;  // true: an extension-closed proper context
  u32 gldim = 0;
  std::vector<std::vector<u32>> hom_table;
  std::vector<std::vector<std::vector<u32>>> ext;  // ext[k-1][i][j] = dim Ext^k
  PairTables tables;
  Caps caps;
  mutable std::shared_ptr<Tier2Data> tier2;  // built on first tier-2 scan

  u32 size() const { return static_cast<u32>(catalog.modules.size()); }
  const Module& member(u32 i) const { return catalog.modules[i]; }
};

inline bool in_add_mask(const CategoryContext& ctx, const Module& x, u64 mask) {
  if (x.is_zero()) return true;
  return mask_subset(support_mask(ctx.catalog.multiplicities(*ctx.alg, x)), mask);
}

namespace detail {

// Nonzero morphisms dom -> cod up to scalar; falls back to 0/1 coefficient
// vectors, then to single basis elements, when the class count exceeds cap.
inline std::vector<Morphism> maps_up_to_scalar(const Algebra& alg, const Module& dom,
                                               const Module& cod, u64 cap, SearchStats& stats) {
  std::vector<Morphism> basis = hom_basis(alg, dom, cod);
  u32 h = static_cast<u32>(basis.size());
  std::vector<Morphism> out;
  if (h == 0) return out;
  u64 classes = 0;  // (p^h - 1)/(p - 1) accumulated
  bool overflow = false;
  for (u32 i = 0; i < h; ++i) {
    classes = classes * alg.prime() + 1;
    if (classes > cap) {
      overflow = true;
      break;
    }
  }
  if (!overflow) {
    std::vector<u32> coeffs(h, 0);
    std::function<void(u32, bool)> gen = [&](u32 pos, bool leading) {
      if (pos == h) {
        if (leading) return;
        Morphism f = zero_morphism(alg, dom, cod);
        for (u32 k = 0; k < h; ++k)
          if (coeffs[k]) f = add_morphisms(f, scale_morphism(basis[k], coeffs[k], alg.prime()));
        out.push_back(std::move(f));
        return;
      }
      if (leading) {
        coeffs[pos] = 0;
        gen(pos + 1, true);
        coeffs[pos] = 1;
        gen(pos + 1, false);
        coeffs[pos] = 0;
      } else {
        for (u32 c = 0; c < alg.prime(); ++c) {
          coeffs[pos] = c;
          gen(pos + 1, false);
        }
        coeffs[pos] = 0;
      }
    };
    gen(0, true);
    return out;
  }
  if ((u64(1) << h) - 1 <= cap) {
    for (u64 bits = 1; bits < (u64(1) << h); ++bits) {
      Morphism f = zero_morphism(alg, dom, cod);
      for (u32 k = 0; k < h; ++k)
        if ((bits >> k) & 1) f = add_morphisms(f, basis[k]);
      out.push_back(std::move(f));
    }
    stats.skipped += 1;  // scalar refinement dropped
    return out;
  }
  stats.skipped += 1;
  return basis;
}

}  // namespace detail

inline CategoryContext make_full_context(const Algebra& alg, IndecCatalog catalog,
                                         const Caps& caps = {}) {
  CategoryContext ctx;
  ctx.alg = &alg;
  ctx.catalog = std::move(catalog);
  u32 n = ctx.size();
  if (n > 20) throw std::runtime_error("catalog too large for mask-based contexts");
  ctx.universe = (n == 0) ? 0 : ((u64(1) << n) - 1);
  ctx.caps = caps;
  ctx.gldim = global_dimension(alg);
  ctx.hom_table.assign(n, std::vector<u32>(n, 0));
  ctx.ext.assign(std::max<u32>(ctx.gldim, 1), std::vector<std::vector<u32>>(n, std::vector<u32>(n, 0)));
  for (u32 i = 0; i < n; ++i)
    for (u32 j = 0; j < n; ++j) {
      std::vector<u32> e = ext_dims_upto(alg, ctx.member(i), ctx.member(j), ctx.gldim);
      ctx.hom_table[i][j] = e[0];
      for (u32 k = 1; k <= ctx.gldim; ++k) ctx.ext[k - 1][i][j] = e[k];
    }
  ctx.tables.middles.assign(n, std::vector<std::vector<std::vector<u32>>>(n));
  ctx.tables.cokers.assign(n, std::vector<std::vector<std::vector<u32>>>(n));
  ctx.tables.kers.assign(n, std::vector<std::vector<std::vector<u32>>>(n));
  SearchStats build_stats;
  for (u32 x = 0; x < n; ++x)
    for (u32 z = 0; z < n; ++z) {
      if (ctx.gldim >= 1 && ctx.ext[0][z][x] > 0) {
        MiddleTerms mt = ext1_middle_terms(alg, ctx.member(z), ctx.member(x), caps.ext_cap);
        if (mt.truncated) ctx.tables.truncated = true;
        for (size_t c = 1; c < mt.middles.size(); ++c)
          ctx.tables.middles[x][z].push_back(ctx.catalog.multiplicities(alg, mt.middles[c]));
      }
      for (const Morphism& f :
           detail::maps_up_to_scalar(alg, ctx.member(x), ctx.member(z), 4096, build_stats)) {
        if (is_mono(f)) {
          std::vector<u32> c =
              ctx.catalog.multiplicities(alg, cokernel_of(alg, ctx.member(z), f).module);
          if (std::find(ctx.tables.cokers[x][z].begin(), ctx.tables.cokers[x][z].end(), c) ==
              ctx.tables.cokers[x][z].end())
            ctx.tables.cokers[x][z].push_back(std::move(c));
        }
        if (is_epi(f)) {
          std::vector<u32> k =
              ctx.catalog.multiplicities(alg, kernel_of(alg, ctx.member(x), f).module);
          if (std::find(ctx.tables.kers[x][z].begin(), ctx.tables.kers[x][z].end(), k) ==
              ctx.tables.kers[x][z].end())
            ctx.tables.kers[x][z].push_back(std::move(k));
        }
      }
    }
  return ctx;
}

struct ThickCheck {
  bool ok = true;
  std::string witness;
  SearchStats stats;
};

namespace detail {

inline std::string mask_note(u64 mask) {
  std::string s = "{";
  bool first = true;
  for (u32 i = 0; i < 64; ++i)
    if ((mask >> i) & 1) {
      if (!first) s += ",";
      s += "#" + std::to_string(i);
      first = false;
    }
  return s + "}";
}

// Shared scanner: reports (or accumulates) members reachable from the class by
// one admissible middle / cokernel / kernel that leave the class.
inline void scan_tier1(const CategoryContext& ctx, u64 mask, u64* grow, ThickCheck& out) {
  for (u32 x = 0; x < ctx.size(); ++x) {
    if (!((mask >> x) & 1)) continue;
    for (u32 z = 0; z < ctx.size(); ++z) {
      if (!((mask >> z) & 1)) continue;
      for (const auto& mid : ctx.tables.middles[x][z]) {
        u64 s = support_mask(mid);
        out.stats.checked += 1;
        if (mask_subset(s, mask)) continue;
        // extensions of context members stay in the context by assumption
        out.ok = false;
        if (grow) {
          *grow |= s & ~mask;
        } else {
          out.witness = "extension of #" + std::to_string(z) + " by #" + std::to_string(x) +
                        " has middle with summands " + mask_note(s & ~mask) +
                        " outside the class";
          return;
        }
      }
      for (const auto& cok : ctx.tables.cokers[x][z]) {
        u64 s = support_mask(cok);
        out.stats.checked += 1;
        if (!mask_subset(s, ctx.universe)) continue;  // not admissible in this context
        if (mask_subset(s, mask)) continue;
        out.ok = false;
        if (grow) {
          *grow |= s & ~mask;
        } else {
          out.witness = "cokernel of a mono #" + std::to_string(x) + " -> #" + std::to_string(z) +
                        " has summands " + mask_note(s & ~mask) + " outside the class";
          return;
        }
      }
      for (const auto& ker : ctx.tables.kers[x][z]) {
        u64 s = support_mask(ker);
        out.stats.checked += 1;
        if (!mask_subset(s, ctx.universe)) continue;
        if (mask_subset(s, mask)) continue;
        out.ok = false;
        if (grow) {
          *grow |= s & ~mask;
        } else {
          out.witness = "kernel of an epi #" + std::to_string(x) + " -> #" + std::to_string(z) +
                        " has summands " + mask_note(s & ~mask) + " outside the class";
          return;
        }
      }
    }
  }
}

inline std::vector<std::vector<u32>> multisets_from_mask(const CategoryContext& ctx, u64 mask,
                                                        u32 max_size) {
  std::vector<u32> members;
  for (u32 i = 0; i < ctx.size(); ++i)
    if ((mask >> i) & 1) members.push_back(i);
  std::vector<std::vector<u32>> out;
  std::vector<u32> cur;
  std::function<void(u32)> gen = [&](u32 start) {
    if (cur.size() >= 1) out.push_back(cur);
    if (cur.size() == max_size) return;
    for (u32 k = start; k < members.size(); ++k) {
      cur.push_back(members[k]);
      gen(k);
      cur.pop_back();
    }
  };
  gen(0);
  return out;
}

inline const Tier2Data& ensure_tier2(const CategoryContext& ctx) {
  if (ctx.tier2) return *ctx.tier2;
  auto data = std::make_shared<Tier2Data>();
  u64 full = (ctx.size() == 0) ? 0 : ((u64(1) << ctx.size()) - 1);
  auto multisets = multisets_from_mask(ctx, full, ctx.caps.sum_mult);
  bool done = false;
  for (const auto& ums : multisets) {
    if (done) break;
    for (const auto& vms : multisets) {
      if (done) break;
      if (ums.size() <= 1 && vms.size() <= 1) continue;  // tier-1 territory
      std::vector<Module> uparts, vparts;
      u64 need = 0;
      for (u32 i : ums) {
        uparts.push_back(ctx.member(i));
        need |= u64(1) << i;
      }
      for (u32 i : vms) {
        vparts.push_back(ctx.member(i));
        need |= u64(1) << i;
      }
      Module u = direct_sum(*ctx.alg, uparts).total;
      Module v = direct_sum(*ctx.alg, vparts).total;
      if (u.dims == v.dims) continue;  // a mono or epi would be an iso
      bool mono_possible = true, epi_possible = true;
      for (u32 w = 0; w < ctx.alg->n_vertices(); ++w) {
        if (u.dims[w] > v.dims[w]) mono_possible = false;
        if (u.dims[w] < v.dims[w]) epi_possible = false;
      }
      if (!mono_possible && !epi_possible) continue;
      std::vector<Morphism> basis = hom_basis(*ctx.alg, u, v);
      u32 h = static_cast<u32>(basis.size());
      if (h == 0) continue;
      bool basis_only = h > 12;
      if (basis_only) data->stats.skipped += 1;
      u64 total = basis_only ? h : (u64(1) << h) - 1;
      Tier2Data::PairEntry entry;
      entry.need = need;
      for (u64 bits = 1; bits <= total; ++bits) {
        if (data->stats.checked >= ctx.caps.hom_enum_cap) {
          data->stats.saturated = true;
          done = true;
          break;
        }
        Morphism f = zero_morphism(*ctx.alg, u, v);
        if (basis_only) {
          f = basis[static_cast<u32>(bits - 1)];
        } else {
          for (u32 k = 0; k < h; ++k)
            if ((bits >> k) & 1) f = add_morphisms(f, basis[k]);
        }
        data->stats.checked += 1;
        if (mono_possible && is_mono(f)) {
          u64 s = support_mask(
              ctx.catalog.multiplicities(*ctx.alg, cokernel_of(*ctx.alg, v, f).module));
          if (std::find(entry.coker_supports.begin(), entry.coker_supports.end(), s) ==
              entry.coker_supports.end())
            entry.coker_supports.push_back(s);
        }
        if (epi_possible && is_epi(f)) {
          u64 s = support_mask(
              ctx.catalog.multiplicities(*ctx.alg, kernel_of(*ctx.alg, u, f).module));
          if (std::find(entry.ker_supports.begin(), entry.ker_supports.end(), s) ==
              entry.ker_supports.end())
            entry.ker_supports.push_back(s);
        }
      }
      if (!entry.coker_supports.empty() || !entry.ker_supports.empty())
        data->pairs.push_back(std::move(entry));
    }
  }
  ctx.tier2 = data;
  return *data;
}

inline void scan_tier2(const CategoryContext& ctx, u64 mask, u64* grow, ThickCheck& out) {
  if (ctx.caps.sum_mult < 2) return;
  const Tier2Data& data = ensure_tier2(ctx);
  out.stats.saturated = out.stats.saturated || data.stats.saturated;
  out.stats.skipped += data.stats.skipped;
  for (const auto& entry : data.pairs) {
    if (!mask_subset(entry.need, mask)) continue;
    for (u64 s : entry.coker_supports) {
      out.stats.checked += 1;
      if (!mask_subset(s, ctx.universe)) continue;  // not admissible in this context
      if (mask_subset(s, mask)) continue;
      out.ok = false;
      if (grow) {
        *grow |= s & ~mask;
      } else {
        out.witness = "cokernel of a mono between summed members has summands " +
                      mask_note(s & ~mask) + " outside the class";
        return;
      }
    }
    for (u64 s : entry.ker_supports) {
      out.stats.checked += 1;
      if (!mask_subset(s, ctx.universe)) continue;
      if (mask_subset(s, mask)) continue;
      out.ok = false;
      if (grow) {
        *grow |= s & ~mask;
      } else {
        out.witness = "kernel of an epi between summed members has summands " +
                      mask_note(s & ~mask) + " outside the class";
        return;
      }
    }
  }
}

}  // namespace detail

inline void require_in_context(const CategoryContext& ctx, u64 mask) {
  if (!mask_subset(mask, ctx.universe))
    throw std::invalid_argument("class is not contained in the context");
}

inline ThickCheck is_extension_closed(const CategoryContext& ctx, u64 mask) {
  require_in_context(ctx, mask);
  ThickCheck out;
  // run only the middle-term part of tier 1
  for (u32 x = 0; x < ctx.size() && out.ok; ++x) {
    if (!((mask >> x) & 1)) continue;
    for (u32 z = 0; z < ctx.size() && out.ok; ++z) {
      if (!((mask >> z) & 1)) continue;
      for (const auto& mid : ctx.tables.middles[x][z]) {
        out.stats.checked += 1;
        u64 s = support_mask(mid);
        if (!mask_subset(s, mask)) {
          out.ok = false;
          out.witness = "extension of #" + std::to_string(z) + " by #" + std::to_string(x) +
                        " has middle outside the class";
          break;
        }
      }
    }
  }
  out.stats.saturated = ctx.tables.truncated;
  return out;
}

inline ThickCheck is_thick(const CategoryContext& ctx, u64 mask, bool tier1_only = false) {
  require_in_context(ctx, mask);
  ThickCheck out;
  detail::scan_tier1(ctx, mask, nullptr, out);
  if (!out.ok) return out;
  if (!tier1_only) detail::scan_tier2(ctx, mask, nullptr, out);
  out.stats.saturated = out.stats.saturated || ctx.tables.truncated;
  return out;
}

struct ClosureResult {
  u64 mask = 0;
  SearchStats stats;
};

inline ClosureResult thick_closure(const CategoryContext& ctx, u64 start) {
  require_in_context(ctx, start);
  ClosureResult res;
  u64 cur = start;
  while (true) {
    u64 grow = 0;
    ThickCheck pass;
    detail::scan_tier1(ctx, cur, &grow, pass);
    detail::scan_tier2(ctx, cur, &grow, pass);
    res.stats.absorb(pass.stats);
    u64 next = cur | grow;
    if (next == cur) break;
    cur = next;
  }
  res.mask = cur;
  return res;
}

struct ThickEntry {
  u64 mask = 0;
  ThickCheck check;
};

inline std::vector<ThickEntry> enumerate_thick(const CategoryContext& ctx, u64 require_contains = 0) {
  if (std::popcount(ctx.universe) > 20)
    throw std::runtime_error("context too large to enumerate thick subclasses");
  require_in_context(ctx, require_contains);
  std::vector<ThickEntry> out;
  u64 uni = ctx.universe;
  for (u64 sub = uni;; sub = (sub - 1) & uni) {
    if (mask_subset(require_contains, sub)) {
      ThickCheck quick = is_thick(ctx, sub, true);
      if (quick.ok) {
        ThickCheck full = is_thick(ctx, sub);
        if (full.ok) out.push_back({sub, full});
      }
    }
    if (sub == 0) break;
  }
  std::sort(out.begin(), out.end(), [](const ThickEntry& a, const ThickEntry& b) {
    u32 pa = std::popcount(a.mask), pb = std::popcount(b.mask);
    if (pa != pb) return pa < pb;
    return a.mask < b.mask;
  });
  return out;
}

// ---------------------------------------------------------------------------
// approximation towers

inline bool mask_presilting(const CategoryContext& ctx, u64 mask) {
  for (u32 k = 1; k <= ctx.gldim; ++k)
    for (u32 i = 0; i < ctx.size(); ++i) {
      if (!((mask >> i) & 1)) continue;
      for (u32 j = 0; j < ctx.size(); ++j) {
        if (!((mask >> j) & 1)) continue;
        if (ctx.ext[k - 1][i][j] != 0) return false;
      }
    }
  return true;
}

namespace detail {

struct BuiltSum {
  Module total;
  Morphism map;  // evaluation (sum -> x) or coevaluation (x -> sum)
};

inline BuiltSum evaluation(const CategoryContext& ctx, u64 mask, const Module& x) {
  std::vector<Module> parts;
  std::vector<Morphism> maps;
  for (u32 i = 0; i < ctx.size(); ++i) {
    if (!((mask >> i) & 1)) continue;
    for (Morphism& f : hom_basis(*ctx.alg, ctx.member(i), x)) {
      parts.push_back(ctx.member(i));
      maps.push_back(std::move(f));
    }
  }
  BuiltSum out;
  if (parts.empty()) {
    out.total = zero_module(*ctx.alg);
    out.map = zero_morphism(*ctx.alg, out.total, x);
    return out;
  }
  DirectSum ds = direct_sum(*ctx.alg, parts);
  out.total = ds.total;
  out.map = zero_morphism(*ctx.alg, out.total, x);
  for (size_t pc = 0; pc < parts.size(); ++pc) {
    Morphism inc = summand_inclusion(*ctx.alg, ds, parts, pc);
    out.map = add_morphisms(out.map, compose(maps[pc], inc));
  }
  return out;
}

inline BuiltSum coevaluation(const CategoryContext& ctx, u64 mask, const Module& x) {
  std::vector<Module> parts;
  std::vector<Morphism> maps;
  for (u32 i = 0; i < ctx.size(); ++i) {
    if (!((mask >> i) & 1)) continue;
    for (Morphism& f : hom_basis(*ctx.alg, x, ctx.member(i))) {
      parts.push_back(ctx.member(i));
      maps.push_back(std::move(f));
    }
  }
  BuiltSum out;
  if (parts.empty()) {
    out.total = zero_module(*ctx.alg);
    out.map = zero_morphism(*ctx.alg, x, out.total);
    return out;
  }
  DirectSum ds = direct_sum(*ctx.alg, parts);
  out.total = ds.total;
  out.map = zero_morphism(*ctx.alg, x, out.total);
  for (size_t pc = 0; pc < parts.size(); ++pc) {
    Morphism emb = summand_inclusion(*ctx.alg, ds, parts, pc);
    out.map = add_morphisms(out.map, compose(emb, maps[pc]));
  }
  return out;
}

}  // namespace detail

struct TowerResult {
  bool member = false;
  u32 layer = 0;
  bool exact = true;      // result backed by the approximation recursion
  bool saturated = false;  // depth or budget reached before a decision
  u64 skipped = 0;
};

inline TowerResult hat_layer(const CategoryContext& ctx, u64 mask, const Module& x) {
  if (ctx.restricted)
    throw std::invalid_argument("towers are only defined over the full module context");
  require_in_context(ctx, mask);
  TowerResult res;
  bool gate = mask_presilting(ctx, mask);
  res.exact = gate;
  Module cur = x;
  for (u32 step = 0; step <= ctx.caps.tower_depth; ++step) {
    if (in_add_mask(ctx, cur, mask)) {
      res.member = true;
      res.layer = step;
      if (!gate) res.exact = (step == 0);
      return res;
    }
    detail::BuiltSum ev = detail::evaluation(ctx, mask, cur);
    if (!is_epi(ev.map)) {
      // no epi from the add-class at all, so definitely outside
      res.member = false;
      res.exact = true;
      return res;
    }
    cur = kernel_of(*ctx.alg, ev.total, ev.map).module;
  }
  res.member = false;
  res.saturated = true;
  res.exact = false;
  return res;
}

inline TowerResult vee_layer(const CategoryContext& ctx, u64 mask, const Module& x) {
  if (ctx.restricted)
    throw std::invalid_argument("towers are only defined over the full module context");
  require_in_context(ctx, mask);
  TowerResult res;
  bool gate = mask_presilting(ctx, mask);
  res.exact = gate;
  Module cur = x;
  for (u32 step = 0; step <= ctx.caps.tower_depth; ++step) {
    if (in_add_mask(ctx, cur, mask)) {
      res.member = true;
      res.layer = step;
      if (!gate) res.exact = (step == 0);
      return res;
    }
    detail::BuiltSum coev = detail::coevaluation(ctx, mask, cur);
    if (!is_mono(coev.map)) {
      res.member = false;
      res.exact = true;
      return res;
    }
    cur = cokernel_of(*ctx.alg, coev.total, coev.map).module;
  }
  res.member = false;
  res.saturated = true;
  res.exact = false;
  return res;
}

struct TowerTable {
  std::vector<TowerResult> entries;  // one per catalog member
  u64 member_mask = 0;
  bool all_exact = true;
  bool saturated = false;
};

inline TowerTable tower_hat(const CategoryContext& ctx, u64 mask) {
  TowerTable t;
  for (u32 i = 0; i < ctx.size(); ++i) {
    TowerResult r = hat_layer(ctx, mask, ctx.member(i));
    if (r.member) t.member_mask |= u64(1) << i;
    t.all_exact = t.all_exact && r.exact;
    t.saturated = t.saturated || r.saturated;
    t.entries.push_back(r);
  }
  return t;
}

inline TowerTable tower_vee(const CategoryContext& ctx, u64 mask) {
  TowerTable t;
  for (u32 i = 0; i < ctx.size(); ++i) {
    TowerResult r = vee_layer(ctx, mask, ctx.member(i));
    if (r.member) t.member_mask |= u64(1) << i;
    t.all_exact = t.all_exact && r.exact;
    t.saturated = t.saturated || r.saturated;
    t.entries.push_back(r);
  }
  return t;
}

// Add-closure of a list of modules, as a catalog mask.
inline u64 add_closure(const CategoryContext& ctx, const std::vector<Module>& gens) {
  u64 mask = 0;
  for (const Module& g : gens) mask |= support_mask(ctx.catalog.multiplicities(*ctx.alg, g));
  return mask;
}

// An extension-closed context restricted to the members of xmask.
inline CategoryContext make_restricted_context(const CategoryContext& full, u64 xmask) {
  require_in_context(full, xmask);
  ThickCheck ec = is_extension_closed(full, xmask);
  if (!ec.ok)
    throw std::invalid_argument("context is not extension-closed: " + ec.witness);
  detail::ensure_tier2(full);  // share the probe data with the restriction
  CategoryContext ctx = full;
  ctx.universe = xmask;
  ctx.restricted = true;
  return ctx;
}

}  // namespace qrep
