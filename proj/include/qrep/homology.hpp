#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "qrep/rep.hpp"

namespace qrep {

// Radical subrepresentation: at each vertex, the sum of the images of all
// incoming arrow maps.
inline SubModule radical_sub(const Algebra& alg, const Module& m) {
  std::vector<Matrix> cols;
  for (u32 v = 0; v < alg.n_vertices(); ++v) {
    Matrix acc(m.dims[v], 0, alg.prime());
    for (u32 a = 0; a < alg.n_arrows(); ++a)
      if (alg.arrow(a).to == v) acc = acc.hstack(m.mats[a]);
    cols.push_back(column_space_basis(acc));
  }
  return sub_module(alg, m, cols);
}

struct ProjectiveCover {
  Module p;
  Morphism pi;                 // p -> m, surjective
  std::vector<u32> top_mults;  // multiplicity of each vertex projective
};

inline ProjectiveCover projective_cover(const Algebra& alg, const Module& m) {
  u32 p_ = alg.prime();
  SubModule rad = radical_sub(alg, m);
  ProjectiveCover out;
  out.top_mults.resize(alg.n_vertices());
  std::vector<Module> parts;
  std::vector<std::pair<u32, std::vector<u32>>> generators;  // (vertex, lift vector)
  for (u32 v = 0; v < alg.n_vertices(); ++v) {
    QuotientBasis qb = quotient_basis(rad.inclusion.comps[v], m.dims[v]);
    out.top_mults[v] = qb.projection.rows();
    for (u32 g = 0; g < out.top_mults[v]; ++g) {
      parts.push_back(projective_module(alg, v));
      std::vector<u32> lift(m.dims[v]);
      for (u32 i = 0; i < m.dims[v]; ++i) lift[i] = qb.coset_reps.at(i, g);
      generators.emplace_back(v, std::move(lift));
    }
  }
  if (parts.empty()) {
    out.p = zero_module(alg);
    out.pi = zero_morphism(alg, out.p, m);
    if (!m.is_zero()) throw std::logic_error("nonzero module with zero top");
    return out;
  }
  DirectSum ds = direct_sum(alg, parts);
  out.p = ds.total;
  out.pi = zero_morphism(alg, out.p, m);
  for (size_t g = 0; g < generators.size(); ++g) {
    auto [v, lift] = generators[g];
    for (u32 w = 0; w < alg.n_vertices(); ++w) {
      const auto& paths = alg.residue_paths(v, w);
      for (u32 b = 0; b < paths.size(); ++b) {
        Matrix act = path_action(alg, m, paths[b]);
        std::vector<u32> img(m.dims[w], 0);
        for (u32 i = 0; i < m.dims[w]; ++i)
          for (u32 j = 0; j < m.dims[v]; ++j)
            img[i] = fp_add(img[i], fp_mul(act.at(i, j), lift[j], p_), p_);
        for (u32 i = 0; i < m.dims[w]; ++i)
          out.pi.comps[w].at(i, ds.offsets[g][w] + b) = img[i];
      }
    }
  }
  if (!is_epi(out.pi)) throw std::logic_error("projective cover failed to surject");
  return out;
}

inline Module syzygy(const Algebra& alg, const Module& m) {
  ProjectiveCover cover = projective_cover(alg, m);
  return kernel_of(alg, cover.p, cover.pi).module;
}

struct Resolution {
  std::vector<Module> terms;    // projective terms, index 0 closest to the module
  std::vector<Morphism> diffs;  // diffs[k] : terms[k+1] -> terms[k]
  Morphism aug;                 // terms[0] -> module
  u32 length = 0;               // largest k with terms[k] nonzero
};

inline Resolution minimal_resolution(const Algebra& alg, const Module& m, u32 max_len = 32) {
  Resolution res;
  if (m.is_zero()) return res;
  ProjectiveCover cover = projective_cover(alg, m);
  res.terms.push_back(cover.p);
  res.aug = cover.pi;
  SubModule ker = kernel_of(alg, cover.p, cover.pi);
  while (!ker.module.is_zero()) {
    if (res.terms.size() > max_len)
      throw std::runtime_error("projective resolution exceeds length bound " +
                               std::to_string(max_len));
    ProjectiveCover step = projective_cover(alg, ker.module);
    res.diffs.push_back(compose(ker.inclusion, step.pi));
    res.terms.push_back(step.p);
    ker = kernel_of(alg, step.p, step.pi);
  }
  res.length = static_cast<u32>(res.terms.size()) - 1;
  return res;
}

// dim Ext^k(m, n) for k = 0..kmax, via Hom(-, n) applied to a minimal
// resolution of m.
inline std::vector<u32> ext_dims_upto(const Algebra& alg, const Module& m, const Module& n,
                                      u32 kmax) {
  std::vector<u32> out(kmax + 1, 0);
  if (m.is_zero() || n.is_zero()) return out;
  Resolution res = minimal_resolution(alg, m);
  u32 top = std::min<u32>(kmax, res.length);
  std::vector<std::vector<Morphism>> hb;
  for (u32 k = 0; k <= top; ++k) hb.push_back(hom_basis(alg, res.terms[k], n));
  auto diff_rank = [&](u32 k) -> u32 {
    // rank of Hom(terms[k-1], n) -> Hom(terms[k], n), precomposition with diffs[k-1]
    if (k == 0 || k > top) return 0;
    if (hb[k - 1].empty() || hb[k].empty()) return 0;
    Matrix mat(static_cast<u32>(hb[k].size()), static_cast<u32>(hb[k - 1].size()), alg.prime());
    for (u32 c = 0; c < hb[k - 1].size(); ++c) {
      auto coords = detail::coords_in_span(alg, hb[k], compose(hb[k - 1][c], res.diffs[k - 1]),
                                           alg.prime());
      if (!coords) throw std::logic_error("precomposition escaped hom basis");
      for (u32 r = 0; r < hb[k].size(); ++r) mat.at(r, c) = (*coords)[r];
    }
    return rank(mat);
  };
  for (u32 k = 0; k <= kmax; ++k) {
    if (k > top) break;
    u32 h = static_cast<u32>(hb[k].size());
    out[k] = h - diff_rank(k) - diff_rank(k + 1);
  }
  return out;
}

inline u32 ext_dim(const Algebra& alg, const Module& m, const Module& n, u32 k) {
  return ext_dims_upto(alg, m, n, k)[k];
}

inline u32 global_dimension(const Algebra& alg) {
  u32 gd = 0;
  for (u32 v = 0; v < alg.n_vertices(); ++v)
    gd = std::max(gd, minimal_resolution(alg, simple_module(alg, v)).length);
  return gd;
}

// ---------------------------------------------------------------------------
// extensions and conflations

struct Conflation {
  Module left, mid, right;
  Morphism inj;   // left -> mid
  Morphism proj;  // mid -> right
};

inline bool is_conflation(const Algebra& alg, const Conflation& c) {
  if (!intertwines(alg, c.left, c.mid, c.inj)) return false;
  if (!intertwines(alg, c.mid, c.right, c.proj)) return false;
  if (!is_mono(c.inj) || !is_epi(c.proj)) return false;
  if (!is_zero_morphism(compose(c.proj, c.inj))) return false;
  return c.mid.dim_total() == c.left.dim_total() + c.right.dim_total();
}

struct MiddleTerms {
  std::vector<Module> middles;  // distinct up to isomorphism; first entry is left + right
  bool truncated = false;
};

// All middle terms of extensions of `right` by `left`, up to isomorphism.
// Classes are enumerated up to scalar (scaling a class does not change the
// middle); if more than `cap` classes remain the enumeration is truncated and
// flagged.
inline MiddleTerms ext1_middle_terms(const Algebra& alg, const Module& right, const Module& left,
                                     u64 cap = 10000) {
  u32 p = alg.prime();
  MiddleTerms out;
  out.middles.push_back(direct_sum(alg, {left, right}).total);
  if (right.is_zero() || left.is_zero()) return out;
  ProjectiveCover cover = projective_cover(alg, right);
  SubModule w = kernel_of(alg, cover.p, cover.pi);
  std::vector<Morphism> w_to_l = hom_basis(alg, w.module, left);
  std::vector<Morphism> p_to_l = hom_basis(alg, cover.p, left);
  u32 wdim = static_cast<u32>(w_to_l.size());
  Matrix span(wdim, static_cast<u32>(p_to_l.size()), p);
  for (u32 c = 0; c < p_to_l.size(); ++c) {
    auto coords = detail::coords_in_span(alg, w_to_l, compose(p_to_l[c], w.inclusion), p);
    for (u32 r = 0; r < wdim; ++r) span.at(r, c) = (*coords)[r];
  }
  QuotientBasis qb = quotient_basis(column_space_basis(span), wdim);
  u32 e = qb.projection.rows();
  if (e == 0) return out;

  u64 class_count = 1;
  for (u32 i = 0; i < e; ++i) {
    class_count = class_count * p + 1;  // (p^e - 1)/(p - 1) accumulated
    if (class_count > cap) break;
  }
  // enumerate nonzero coefficient vectors with leading coefficient 1
  std::vector<u32> coeffs(e, 0);
  u64 used = 0;
  std::function<void(u32, bool)> gen = [&](u32 pos, bool leading) {
    if (out.truncated) return;
    if (pos == e) {
      if (leading) return;
      if (++used > cap) {
        out.truncated = true;
        return;
      }
      Morphism g = zero_morphism(alg, w.module, left);
      for (u32 k = 0; k < e; ++k) {
        if (!coeffs[k]) continue;
        for (u32 r = 0; r < wdim; ++r) {
          u32 c = fp_mul(qb.coset_reps.at(r, k), coeffs[k], p);
          if (c) g = add_morphisms(g, scale_morphism(w_to_l[r], c, p));
        }
      }
      Module mid = detail::pushout_middle_general(alg, cover.p, w.inclusion, left, g);
      for (const Module& seen : out.middles)
        if (are_isomorphic(alg, seen, mid)) return;
      out.middles.push_back(mid);
      return;
    }
    if (leading) {
      coeffs[pos] = 0;
      gen(pos + 1, true);
      coeffs[pos] = 1;
      gen(pos + 1, false);
      coeffs[pos] = 0;
    } else {
      for (u32 c = 0; c < p; ++c) {
        coeffs[pos] = c;
        gen(pos + 1, false);
        if (out.truncated) break;
      }
      coeffs[pos] = 0;
    }
  };
  gen(0, true);
  return out;
}

// Alternating sum of Ext dimensions applied to a conflation, tested against a
// fixed object in the first argument.  Returns true when the long exact
// sequence bookkeeping balances.
inline bool les_alternating_sum_ok(const Algebra& alg, const Module& t, const Conflation& c,
                                   u32 kmax) {
  std::vector<u32> ea = ext_dims_upto(alg, t, c.left, kmax);
  std::vector<u32> eb = ext_dims_upto(alg, t, c.mid, kmax);
  std::vector<u32> ec = ext_dims_upto(alg, t, c.right, kmax);
  long long sum = 0;
  for (u32 k = 0; k <= kmax; ++k) {
    long long term = static_cast<long long>(ea[k]) - static_cast<long long>(eb[k]) +
                     static_cast<long long>(ec[k]);
    sum += (k % 2 == 0) ? term : -term;
  }
  return sum == 0;
}

}  // namespace qrep
