#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "qrep/quiver.hpp"

namespace qrep {

// A morphism of representations: one matrix per vertex.
struct Morphism {
  std::vector<Matrix> comps;
};

inline Morphism zero_morphism(const Algebra& alg, const Module& from, const Module& to) {
  Morphism f;
  for (u32 v = 0; v < alg.n_vertices(); ++v)
    f.comps.push_back(Matrix(to.dims[v], from.dims[v], alg.prime()));
  return f;
}

inline Morphism identity_morphism(const Algebra& alg, const Module& m) {
  Morphism f;
  for (u32 v = 0; v < alg.n_vertices(); ++v)
    f.comps.push_back(Matrix::identity(m.dims[v], alg.prime()));
  return f;
}

inline Morphism compose(const Morphism& g, const Morphism& f) {
  Morphism h;
  for (size_t v = 0; v < f.comps.size(); ++v) h.comps.push_back(g.comps[v] * f.comps[v]);
  return h;
}

inline Morphism add_morphisms(const Morphism& f, const Morphism& g) {
  Morphism h;
  for (size_t v = 0; v < f.comps.size(); ++v) h.comps.push_back(f.comps[v] + g.comps[v]);
  return h;
}

inline Morphism scale_morphism(const Morphism& f, u32 c, u32 p) {
  Morphism h;
  for (const Matrix& m : f.comps) h.comps.push_back(m.scaled(c % p));
  return h;
}

inline bool is_zero_morphism(const Morphism& f) {
  for (const Matrix& m : f.comps)
    if (!m.is_zero()) return false;
  return true;
}

inline bool is_epi(const Morphism& f) {
  for (const Matrix& m : f.comps)
    if (rank(m) != m.rows()) return false;
  return true;
}

inline bool is_mono(const Morphism& f) {
  for (const Matrix& m : f.comps)
    if (rank(m) != m.cols()) return false;
  return true;
}

inline bool is_iso_morphism(const Morphism& f) {
  for (const Matrix& m : f.comps)
    if (m.rows() != m.cols() || !is_invertible(m)) return false;
  return true;
}

inline bool intertwines(const Algebra& alg, const Module& m, const Module& n, const Morphism& f) {
  for (u32 a = 0; a < alg.n_arrows(); ++a) {
    const Arrow& ar = alg.arrow(a);
    if (!(f.comps[ar.to] * m.mats[a] - n.mats[a] * f.comps[ar.from]).is_zero()) return false;
  }
  return true;
}

// Basis of Hom(m, n) as the kernel of the stacked intertwining system.
inline std::vector<Morphism> hom_basis(const Algebra& alg, const Module& m, const Module& n) {
  u32 p = alg.prime();
  std::vector<u32> offs(alg.n_vertices());
  u32 total = 0;
  for (u32 v = 0; v < alg.n_vertices(); ++v) {
    offs[v] = total;
    total += m.dims[v] * n.dims[v];
  }
  std::vector<std::vector<u32>> rows;
  for (u32 a = 0; a < alg.n_arrows(); ++a) {
    const Arrow& ar = alg.arrow(a);
    u32 s = ar.from, t = ar.to;
    for (u32 i = 0; i < n.dims[t]; ++i)
      for (u32 j = 0; j < m.dims[s]; ++j) {
        std::vector<u32> row(total, 0);
        for (u32 k = 0; k < m.dims[t]; ++k) {
          u32 pos = offs[t] + i * m.dims[t] + k;
          row[pos] = fp_add(row[pos], m.mats[a].at(k, j), p);
        }
        for (u32 k = 0; k < n.dims[s]; ++k) {
          u32 pos = offs[s] + k * m.dims[s] + j;
          row[pos] = fp_sub(row[pos], n.mats[a].at(i, k), p);
        }
        rows.push_back(std::move(row));
      }
  }
  Matrix sys(static_cast<u32>(rows.size()), total, p);
  for (u32 i = 0; i < rows.size(); ++i)
    for (u32 j = 0; j < total; ++j) sys.at(i, j) = rows[i][j];
  Matrix null = kernel_basis(sys);
  std::vector<Morphism> out;
  for (u32 b = 0; b < null.cols(); ++b) {
    Morphism f;
    for (u32 v = 0; v < alg.n_vertices(); ++v) {
      Matrix comp(n.dims[v], m.dims[v], p);
      for (u32 i = 0; i < n.dims[v]; ++i)
        for (u32 j = 0; j < m.dims[v]; ++j) comp.at(i, j) = null.at(offs[v] + i * m.dims[v] + j, b);
      f.comps.push_back(std::move(comp));
    }
    out.push_back(std::move(f));
  }
  return out;
}

inline u32 hom_dim(const Algebra& alg, const Module& m, const Module& n) {
  return static_cast<u32>(hom_basis(alg, m, n).size());
}

struct DirectSum {
  Module total;
  // per part, per vertex: offset of the part's block
  std::vector<std::vector<u32>> offsets;
};

inline DirectSum direct_sum(const Algebra& alg, const std::vector<Module>& parts) {
  DirectSum ds;
  ds.total = zero_module(alg);
  ds.offsets.resize(parts.size());
  for (size_t i = 0; i < parts.size(); ++i) {
    ds.offsets[i].resize(alg.n_vertices());
    for (u32 v = 0; v < alg.n_vertices(); ++v) {
      ds.offsets[i][v] = ds.total.dims[v];
      ds.total.dims[v] += parts[i].dims[v];
    }
  }
  for (u32 a = 0; a < alg.n_arrows(); ++a) {
    const Arrow& ar = alg.arrow(a);
    Matrix mat(ds.total.dims[ar.to], ds.total.dims[ar.from], alg.prime());
    for (size_t piece = 0; piece < parts.size(); ++piece) {
      const Matrix& pm = parts[piece].mats[a];
      for (u32 i = 0; i < pm.rows(); ++i)
        for (u32 j = 0; j < pm.cols(); ++j)
          mat.at(ds.offsets[piece][ar.to] + i, ds.offsets[piece][ar.from] + j) = pm.at(i, j);
    }
    ds.total.mats[a] = std::move(mat);
  }
  return ds;
}

inline Morphism summand_inclusion(const Algebra& alg, const DirectSum& ds,
                                  const std::vector<Module>& parts, size_t idx) {
  Morphism f = zero_morphism(alg, parts[idx], ds.total);
  for (u32 v = 0; v < alg.n_vertices(); ++v)
    for (u32 i = 0; i < parts[idx].dims[v]; ++i) f.comps[v].at(ds.offsets[idx][v] + i, i) = 1;
  return f;
}

inline Morphism summand_projection(const Algebra& alg, const DirectSum& ds,
                                   const std::vector<Module>& parts, size_t idx) {
  Morphism f = zero_morphism(alg, ds.total, parts[idx]);
  for (u32 v = 0; v < alg.n_vertices(); ++v)
    for (u32 i = 0; i < parts[idx].dims[v]; ++i) f.comps[v].at(i, ds.offsets[idx][v] + i) = 1;
  return f;
}

// Subrepresentation spanned by per-vertex columns (must be arrow-stable);
// returns the module together with its inclusion.
struct SubModule {
  Module module;
  Morphism inclusion;
};

inline SubModule sub_module(const Algebra& alg, const Module& ambient,
                            const std::vector<Matrix>& basis_cols) {
  u32 p = alg.prime();
  SubModule out;
  out.module.dims.resize(alg.n_vertices());
  for (u32 v = 0; v < alg.n_vertices(); ++v) out.module.dims[v] = basis_cols[v].cols();
  for (u32 a = 0; a < alg.n_arrows(); ++a) {
    const Arrow& ar = alg.arrow(a);
    Matrix imgs = ambient.mats[a] * basis_cols[ar.from];
    if (out.module.dims[ar.to]) {
      auto sol = solve_matrix(basis_cols[ar.to], imgs);
      if (!sol) throw std::logic_error("subspace not arrow-stable");
      out.module.mats.push_back(std::move(*sol));
    } else {
      if (!imgs.is_zero()) throw std::logic_error("subspace not arrow-stable");
      out.module.mats.push_back(Matrix(0, out.module.dims[ar.from], p));
    }
  }
  out.inclusion.comps = basis_cols;
  return out;
}

struct QuotientModule {
  Module module;
  Morphism projection;
  Morphism section;  // linear sections, not a morphism of representations
};

inline QuotientModule quotient_module(const Algebra& alg, const Module& ambient,
                                      const std::vector<Matrix>& sub_cols) {
  u32 p = alg.prime();
  QuotientModule out;
  std::vector<QuotientBasis> qb;
  for (u32 v = 0; v < alg.n_vertices(); ++v)
    qb.push_back(quotient_basis(sub_cols[v], ambient.dims[v]));
  out.module.dims.resize(alg.n_vertices());
  for (u32 v = 0; v < alg.n_vertices(); ++v) out.module.dims[v] = qb[v].projection.rows();
  for (u32 a = 0; a < alg.n_arrows(); ++a) {
    const Arrow& ar = alg.arrow(a);
    out.module.mats.push_back(qb[ar.to].projection * ambient.mats[a] * qb[ar.from].coset_reps);
  }
  for (u32 v = 0; v < alg.n_vertices(); ++v) {
    out.projection.comps.push_back(qb[v].projection);
    out.section.comps.push_back(qb[v].coset_reps);
  }
  return out;
}

inline SubModule kernel_of(const Algebra& alg, const Module& dom, const Morphism& f) {
  std::vector<Matrix> cols;
  for (u32 v = 0; v < alg.n_vertices(); ++v) cols.push_back(kernel_basis(f.comps[v]));
  return sub_module(alg, dom, cols);
}

inline QuotientModule cokernel_of(const Algebra& alg, const Module& cod, const Morphism& f) {
  std::vector<Matrix> img;
  for (u32 v = 0; v < alg.n_vertices(); ++v) img.push_back(column_space_basis(f.comps[v]));
  return quotient_module(alg, cod, img);
}

inline SubModule image_of(const Algebra& alg, const Module& cod, const Morphism& f) {
  std::vector<Matrix> img;
  for (u32 v = 0; v < alg.n_vertices(); ++v) img.push_back(column_space_basis(f.comps[v]));
  return sub_module(alg, cod, img);
}

// ---------------------------------------------------------------------------
// endomorphism analysis

namespace detail {

// Coordinates of g in the span of basis (both flattened); nullopt if outside.
inline std::optional<std::vector<u32>> coords_in_span(const Algebra& alg,
                                                      const std::vector<Morphism>& basis,
                                                      const Morphism& g, u32 p) {
  u32 total = 0;
  for (const Matrix& m : g.comps) total += m.rows() * m.cols();
  Matrix sys(total, static_cast<u32>(basis.size()), p);
  std::vector<u32> rhs(total);
  u32 pos = 0;
  for (size_t v = 0; v < g.comps.size(); ++v)
    for (u32 i = 0; i < g.comps[v].rows(); ++i)
      for (u32 j = 0; j < g.comps[v].cols(); ++j) {
        for (u32 b = 0; b < basis.size(); ++b) sys.at(pos, b) = basis[b].comps[v].at(i, j);
        rhs[pos] = g.comps[v].at(i, j);
        ++pos;
      }
  return solve(sys, rhs);
}

struct EndAlgebra {
  std::vector<Morphism> basis;
  // structure[i][j] = coordinates of basis[i] * basis[j]
  std::vector<std::vector<std::vector<u32>>> structure;
};

inline EndAlgebra end_algebra(const Algebra& alg, const Module& m) {
  EndAlgebra out;
  out.basis = hom_basis(alg, m, m);
  u32 d = static_cast<u32>(out.basis.size());
  out.structure.assign(d, std::vector<std::vector<u32>>(d));
  for (u32 i = 0; i < d; ++i)
    for (u32 j = 0; j < d; ++j) {
      auto c = coords_in_span(alg, out.basis, compose(out.basis[i], out.basis[j]), alg.prime());
      if (!c) throw std::logic_error("endomorphism product escaped its own span");
      out.structure[i][j] = *c;
    }
  return out;
}

// Left-multiplication matrix of the element with the given coordinates.
inline Matrix left_mult(const EndAlgebra& e, const std::vector<u32>& coords, u32 p) {
  u32 d = static_cast<u32>(e.basis.size());
  Matrix l(d, d, p);
  for (u32 j = 0; j < d; ++j)
    for (u32 i = 0; i < d; ++i)
      for (u32 k = 0; k < d; ++k)
        l.at(k, j) = fp_add(l.at(k, j), fp_mul(coords[i], e.structure[i][j][k], p), p);
  return l;
}

}  // namespace detail

// Local endomorphism ring test.  The radical is cut out by the trace form
// (valid because the field order exceeds dim End, which is checked), and the
// semisimple quotient is a field iff it is commutative with one-dimensional
// fixed space under x -> x^p.
inline bool is_indecomposable(const Algebra& alg, const Module& m) {
  if (m.is_zero()) throw std::invalid_argument("zero module has no decomposition type");
  u32 p = alg.prime();
  detail::EndAlgebra e = detail::end_algebra(alg, m);
  u32 d = static_cast<u32>(e.basis.size());
  if (p <= d)
    throw std::invalid_argument("field order " + std::to_string(p) +
                                " too small for endomorphism analysis (dim End = " +
                                std::to_string(d) + ")");
  std::vector<Matrix> lefts;
  for (u32 i = 0; i < d; ++i) {
    std::vector<u32> ei(d, 0);
    ei[i] = 1;
    lefts.push_back(detail::left_mult(e, ei, p));
  }
  Matrix gram(d, d, p);
  for (u32 i = 0; i < d; ++i)
    for (u32 j = 0; j < d; ++j) {
      Matrix prod = lefts[i] * lefts[j];
      u32 tr = 0;
      for (u32 k = 0; k < d; ++k) tr = fp_add(tr, prod.at(k, k), p);
      gram.at(i, j) = tr;
    }
  Matrix rad = kernel_basis(gram);  // coordinates of a radical basis
  u32 raddim = rad.cols();
  u32 q = d - raddim;
  if (q == 1) return true;
  QuotientBasis qb = quotient_basis(rad, d);
  // multiplication on the semisimple quotient, via coset representatives
  auto mul_q = [&](const std::vector<u32>& x, const std::vector<u32>& y) {
    std::vector<u32> xl = qb.coset_reps.apply(x);
    std::vector<u32> yl = qb.coset_reps.apply(y);
    std::vector<u32> z(d, 0);
    for (u32 i = 0; i < d; ++i)
      for (u32 j = 0; j < d; ++j) {
        if (!xl[i] || !yl[j]) continue;
        u32 c = fp_mul(xl[i], yl[j], p);
        for (u32 k = 0; k < d; ++k)
          z[k] = fp_add(z[k], fp_mul(c, e.structure[i][j][k], p), p);
      }
    return qb.projection.apply(z);
  };
  for (u32 i = 0; i < q; ++i)
    for (u32 j = i + 1; j < q; ++j) {
      std::vector<u32> ei(q, 0), ej(q, 0);
      ei[i] = 1;
      ej[j] = 1;
      if (mul_q(ei, ej) != mul_q(ej, ei)) return false;  // not commutative, so not a field
    }
  // Frobenius fixed space of the commutative semisimple quotient
  Matrix frob(q, q, p);
  for (u32 j = 0; j < q; ++j) {
    std::vector<u32> x(q, 0);
    x[j] = 1;
    std::vector<u32> powed(q, 0);
    // x^p by square-and-multiply on quotient elements
    std::vector<u32> acc;
    {
      // identity element of End: coordinates of id_m in the basis
      Morphism idm = identity_morphism(alg, m);
      auto c = detail::coords_in_span(alg, e.basis, idm, p);
      acc = qb.projection.apply(*c);
    }
    std::vector<u32> base = x;
    u32 exp = p;
    while (exp) {
      if (exp & 1) acc = mul_q(acc, base);
      base = mul_q(base, base);
      exp >>= 1;
    }
    powed = acc;
    for (u32 i = 0; i < q; ++i) frob.at(i, j) = fp_sub(powed[i], (i == j) ? 1u : 0u, p);
  }
  return kernel_basis(frob).cols() == 1;
}

// ---------------------------------------------------------------------------
// decomposition into indecomposables (Fitting splitting)

struct DecomposeOptions {
  u64 seed = 42;
  u32 trials = 200;
};

namespace detail {

inline std::optional<std::pair<SubModule, SubModule>> try_split(const Algebra& alg,
                                                               const Module& m,
                                                               const Morphism& phi) {
  u32 p = alg.prime();
  u32 n = m.dim_total();
  // phi^n realizes the Fitting decomposition at each eigenvalue shift
  for (u32 lam = 0; lam < p; ++lam) {
    Morphism shifted = phi;
    for (u32 v = 0; v < shifted.comps.size(); ++v)
      for (u32 i = 0; i < std::min(shifted.comps[v].rows(), shifted.comps[v].cols()); ++i)
        shifted.comps[v].at(i, i) = fp_sub(shifted.comps[v].at(i, i), lam, p);
    Morphism power = shifted;
    for (u32 k = 1; k < n; k <<= 1) power = compose(power, power);
    SubModule ker = kernel_of(alg, m, power);
    u32 kd = ker.module.dim_total();
    if (kd == 0 || kd == n) continue;
    SubModule img = image_of(alg, m, power);
    return std::make_pair(std::move(ker), std::move(img));
  }
  return std::nullopt;
}

}  // namespace detail

inline std::vector<Module> decompose(const Algebra& alg, const Module& m,
                                     const DecomposeOptions& opt = {}) {
  if (m.is_zero()) return {};
  if (is_indecomposable(alg, m)) return {m};
  std::vector<Morphism> basis = hom_basis(alg, m, m);
  std::mt19937_64 rng(opt.seed);
  auto attempt = [&](const Morphism& phi) -> std::optional<std::vector<Module>> {
    auto split = detail::try_split(alg, m, phi);
    if (!split) return std::nullopt;
    std::vector<Module> out;
    for (const Module& part : {split->first.module, split->second.module})
      for (Module& piece : decompose(alg, part, opt)) out.push_back(std::move(piece));
    return out;
  };
  for (const Morphism& phi : basis)
    if (auto got = attempt(phi)) return *got;
  for (u32 t = 0; t < opt.trials; ++t) {
    Morphism phi = zero_morphism(alg, m, m);
    for (const Morphism& b : basis)
      phi = add_morphisms(phi, scale_morphism(b, static_cast<u32>(rng() % alg.prime()),
                                              alg.prime()));
    if (auto got = attempt(phi)) return *got;
  }
  throw std::runtime_error("decomposition search budget exhausted on a decomposable module");
}

// ---------------------------------------------------------------------------
// isomorphism testing

struct IsoOptions {
  u64 seed = 42;
  u32 trials = 40;
};

inline bool are_isomorphic(const Algebra& alg, const Module& m, const Module& n,
                           const IsoOptions& opt = {}) {
  if (m.dims != n.dims) return false;
  if (m.is_zero()) return true;
  std::vector<Morphism> basis = hom_basis(alg, m, n);
  if (basis.empty()) return false;
  u32 end_m = hom_dim(alg, m, m);
  if (end_m != hom_dim(alg, n, n)) return false;
  if (basis.size() != end_m) return false;
  if (basis.size() != hom_dim(alg, n, m)) return false;
  std::mt19937_64 rng(opt.seed);
  if (basis.size() == 1) return is_iso_morphism(basis[0]);
  for (u32 t = 0; t < opt.trials; ++t) {
    Morphism f = zero_morphism(alg, m, n);
    for (const Morphism& b : basis)
      f = add_morphisms(f, scale_morphism(b, static_cast<u32>(rng() % alg.prime()),
                                          alg.prime()));
    if (is_iso_morphism(f)) return true;
  }
  throw std::runtime_error("isomorphism test ambiguous after " + std::to_string(opt.trials) +
                           " randomized trials");
}

// ---------------------------------------------------------------------------
// bottom-up enumeration of indecomposables

struct SearchBounds {
  u32 dim_bound = 4;   // per-vertex dimension cap
  u64 budget = 10000000;
  u64 seed = 42;
};

struct IndecCatalog {
  std::vector<Module> modules;  // sorted by (total dim, dim vector)

  std::optional<u32> find(const Algebra& alg, const Module& m) const {
    for (u32 i = 0; i < modules.size(); ++i)
      if (are_isomorphic(alg, modules[i], m)) return i;
    return std::nullopt;
  }

  // Multiplicity vector of m over the catalog; throws if a piece is missing.
  std::vector<u32> multiplicities(const Algebra& alg, const Module& m) const {
    std::vector<u32> mult(modules.size(), 0);
    for (const Module& piece : decompose(alg, m)) {
      auto idx = find(alg, piece);
      if (!idx) throw std::runtime_error("direct summand not in catalog");
      ++mult[*idx];
    }
    return mult;
  }
};

namespace detail {

// Middle term of the extension of s (simple quotient) by u along the cocycle
// g : rad_part -> u, realized as a pushout of the chosen presentation of s.
// pres: 0 -> w -> p0 -> s -> 0 with w given by inclusion cols into p0.
struct SimplePresentation {
  Module p0;
  Module w;
  Morphism incl;  // w -> p0
  Morphism onto;  // p0 -> s
};

inline SimplePresentation presentation_of_simple(const Algebra& alg, u32 v) {
  SimplePresentation pr;
  pr.p0 = projective_module(alg, v);
  Module s = simple_module(alg, v);
  // quotient map p0 -> s kills every residue path of positive length
  pr.onto = zero_morphism(alg, pr.p0, s);
  const auto& lazy = alg.residue_paths(v, v);
  for (u32 i = 0; i < lazy.size(); ++i)
    if (lazy[i].arrows.empty()) pr.onto.comps[v].at(0, i) = 1;
  SubModule ker = kernel_of(alg, pr.p0, pr.onto);
  pr.w = ker.module;
  pr.incl = ker.inclusion;
  return pr;
}

// Middle of the extension classified by the cocycle g : w -> u, where
// incl : w -> p0 is the chosen syzygy inclusion: the pushout (p0 + u)/w.
inline Module pushout_middle_general(const Algebra& alg, const Module& p0, const Morphism& incl,
                                     const Module& u, const Morphism& g) {
  DirectSum ds = direct_sum(alg, {p0, u});
  std::vector<Matrix> anti;
  for (u32 v = 0; v < alg.n_vertices(); ++v) {
    u32 wd = incl.comps[v].cols();
    Matrix cols(ds.total.dims[v], wd, alg.prime());
    for (u32 j = 0; j < wd; ++j) {
      for (u32 i = 0; i < p0.dims[v]; ++i)
        cols.at(ds.offsets[0][v] + i, j) = incl.comps[v].at(i, j);
      for (u32 i = 0; i < u.dims[v]; ++i)
        cols.at(ds.offsets[1][v] + i, j) = fp_neg(g.comps[v].at(i, j), alg.prime());
    }
    anti.push_back(std::move(cols));
  }
  return quotient_module(alg, ds.total, anti).module;
}

}  // namespace detail

inline IndecCatalog enumerate_indecomposables(const Algebra& alg,
                                              const SearchBounds& bounds = {}) {
  u64 work = 0;
  auto charge = [&](u64 amount) {
    work += amount;
    if (work > bounds.budget) throw std::runtime_error("search budget exceeded");
  };

  std::vector<Module> found;
  auto known = [&](const Module& m) {
    for (const Module& k : found)
      if (are_isomorphic(alg, k, m)) return true;
    return false;
  };
  auto within = [&](const Module& m) {
    for (u32 d : m.dims)
      if (d > bounds.dim_bound) return false;
    return true;
  };

  for (u32 v = 0; v < alg.n_vertices(); ++v) found.push_back(simple_module(alg, v));

  std::vector<detail::SimplePresentation> pres;
  for (u32 v = 0; v < alg.n_vertices(); ++v) pres.push_back(detail::presentation_of_simple(alg, v));

  u32 max_total = alg.n_vertices() * bounds.dim_bound;
  for (u32 target = 2; target <= max_total; ++target) {
    {
      // candidate radicals: multisets over the current catalog of total dim
      // target - 1, with per-member multiplicity capped by dim Ext^1(s, member)
      for (u32 sv = 0; sv < alg.n_vertices(); ++sv) {
        Module s = simple_module(alg, sv);
        std::vector<u32> extdim(found.size());
        std::vector<std::vector<Morphism>> cocycles(found.size());
        for (u32 i = 0; i < found.size(); ++i) {
          // Ext^1(s, u) as cocycles Hom(w, u) modulo restrictions Hom(p0, u)
          std::vector<Morphism> w_to_u = hom_basis(alg, pres[sv].w, found[i]);
          std::vector<Morphism> p_to_u = hom_basis(alg, pres[sv].p0, found[i]);
          // coordinates of restricted maps inside Hom(w, u)
          std::vector<Morphism> restricted;
          for (const Morphism& f : p_to_u) restricted.push_back(compose(f, pres[sv].incl));
          // complement dimension = ext dim; keep cocycle representatives
          u32 wdim = static_cast<u32>(w_to_u.size());
          Matrix span(wdim, static_cast<u32>(restricted.size()), alg.prime());
          for (u32 c = 0; c < restricted.size(); ++c) {
            auto coords = detail::coords_in_span(alg, w_to_u, restricted[c], alg.prime());
            for (u32 r = 0; r < wdim; ++r) span.at(r, c) = (*coords)[r];
          }
          QuotientBasis qb = quotient_basis(column_space_basis(span), wdim);
          extdim[i] = qb.projection.rows();
          for (u32 r = 0; r < extdim[i]; ++r) {
            Morphism rep = zero_morphism(alg, pres[sv].w, found[i]);
            for (u32 k = 0; k < wdim; ++k) {
              u32 c = qb.coset_reps.at(k, r);
              if (c) rep = add_morphisms(rep, scale_morphism(w_to_u[k], c, alg.prime()));
            }
            cocycles[i].push_back(std::move(rep));
          }
        }
        // enumerate multisets: counts[i] in [0, extdim[i]], total dim matches
        std::vector<u32> counts(found.size(), 0);
        u32 need = target - 1;
        std::function<void(u32, u32)> enumerate = [&](u32 idx, u32 remaining) {
          if (remaining == 0) {
            std::vector<Module> parts;
            std::vector<std::pair<u32, u32>> slots;  // (catalog idx, copy)
            for (u32 i = 0; i < counts.size(); ++i)
              for (u32 c = 0; c < counts[i]; ++c) {
                parts.push_back(found[i]);
                slots.emplace_back(i, c);
              }
            if (parts.empty()) return;
            charge(1);
            DirectSum ds = direct_sum(alg, parts);
            // classes with every slot component nonzero, up to scaling each
            // slot: enumerate nonzero cocycle choices per slot with first
            // coordinate normalized
            std::vector<std::vector<std::vector<u32>>> per_slot;
            for (auto [ci, copy] : slots) {
              std::vector<std::vector<u32>> choices;
              u32 e = extdim[ci];
              std::vector<u32> coeffs(e, 0);
              std::function<void(u32, bool)> gen = [&](u32 pos, bool leading) {
                if (pos == e) {
                  if (!leading) choices.push_back(coeffs);
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
              per_slot.push_back(std::move(choices));
            }
            // cartesian product over slots
            std::vector<u32> pick(slots.size(), 0);
            std::function<void(u32)> walk = [&](u32 slot) {
              if (slot == slots.size()) {
                charge(parts.size() + 1);
                Morphism g = zero_morphism(alg, pres[sv].w, ds.total);
                for (u32 sidx = 0; sidx < slots.size(); ++sidx) {
                  auto [ci, copy] = slots[sidx];
                  const auto& coeffs = per_slot[sidx][pick[sidx]];
                  Morphism comp = zero_morphism(alg, pres[sv].w, parts[sidx]);
                  for (u32 k = 0; k < coeffs.size(); ++k)
                    if (coeffs[k])
                      comp = add_morphisms(comp,
                                           scale_morphism(cocycles[ci][k], coeffs[k], alg.prime()));
                  Morphism incl = summand_inclusion(alg, ds, parts, sidx);
                  g = add_morphisms(g, compose(incl, comp));
                }
                Module mid = detail::pushout_middle_general(alg, pres[sv].p0, pres[sv].incl,
                                                            ds.total, g);
                if (mid.dim_total() == target && within(mid) && !known(mid) &&
                    is_indecomposable(alg, mid))
                  found.push_back(mid);
                return;
              }
              for (u32 c = 0; c < per_slot[slot].size(); ++c) {
                pick[slot] = c;
                walk(slot + 1);
              }
            };
            bool any_empty = false;
            for (const auto& ch : per_slot) any_empty |= ch.empty();
            if (!any_empty) walk(0);
            return;
          }
          if (idx == counts.size()) return;
          u32 dim_i = found[idx].dim_total();
          for (u32 c = 0; c <= extdim[idx] && c * dim_i <= remaining; ++c) {
            counts[idx] = c;
            enumerate(idx + 1, remaining - c * dim_i);
          }
          counts[idx] = 0;
        };
        enumerate(0, need);
      }
    }
  }

  std::sort(found.begin(), found.end(), [](const Module& a, const Module& b) {
    if (a.dim_total() != b.dim_total()) return a.dim_total() < b.dim_total();
    return a.dims < b.dims;
  });
  return IndecCatalog{std::move(found)};
}

}  // namespace qrep
