#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "qrep/homology.hpp"

namespace qrep {

// A triangular context: a big algebra whose quiver splits into a closed copy
// (x-side), an open copy (y-side) of one corner algebra, and one connecting
// arrow per corner vertex, subject to commuting-square relations.
struct TriangularContext {
  std::shared_ptr<Algebra> corner;  // the small algebra appearing on both sides
  std::shared_ptr<Algebra> big;
  std::vector<u32> y_vertex, x_vertex;  // corner vertex -> big vertex
  std::vector<u32> y_arrow, x_arrow;    // corner arrow -> big arrow
  std::vector<u32> conn;                // corner vertex -> connecting big arrow
};

inline TriangularContext build_doubled(const Algebra& a) {
  u32 n = a.n_vertices();
  std::vector<std::string> vertices;
  for (u32 v = 0; v < n; ++v) vertices.push_back("y" + a.vertex_name(v));
  for (u32 v = 0; v < n; ++v) vertices.push_back("x" + a.vertex_name(v));
  std::vector<Arrow> arrows;
  for (u32 ai = 0; ai < a.n_arrows(); ++ai) {
    const Arrow& ar = a.arrow(ai);
    arrows.push_back({"y" + ar.name, ar.from, ar.to});
  }
  for (u32 ai = 0; ai < a.n_arrows(); ++ai) {
    const Arrow& ar = a.arrow(ai);
    arrows.push_back({"x" + ar.name, n + ar.from, n + ar.to});
  }
  for (u32 v = 0; v < n; ++v) arrows.push_back({"c" + a.vertex_name(v), v, n + v});
  u32 na = a.n_arrows();
  std::vector<Relation> relations;
  for (const Relation& r : a.relations()) {
    Relation ry, rx;
    ry.source = r.source;
    ry.target = r.target;
    rx.source = n + r.source;
    rx.target = n + r.target;
    for (const RelationTerm& t : r.terms) {
      RelationTerm ty{t.coeff, t.arrows};
      RelationTerm tx{t.coeff, t.arrows};
      for (u32& idx : tx.arrows) idx += na;
      ry.terms.push_back(std::move(ty));
      rx.terms.push_back(std::move(tx));
    }
    relations.push_back(std::move(ry));
    relations.push_back(std::move(rx));
  }
  for (u32 ai = 0; ai < a.n_arrows(); ++ai) {
    const Arrow& ar = a.arrow(ai);
    Relation sq;
    sq.source = ar.from;
    sq.target = n + ar.to;
    sq.terms.push_back({1, {ai, 2 * na + ar.to}});
    sq.terms.push_back({a.prime() - 1, {2 * na + ar.from, na + ai}});
    relations.push_back(std::move(sq));
  }
  TriangularContext tc;
  tc.corner = std::make_shared<Algebra>(a);
  tc.big = std::make_shared<Algebra>(vertices, arrows, relations, a.prime());
  for (u32 v = 0; v < n; ++v) {
    tc.y_vertex.push_back(v);
    tc.x_vertex.push_back(n + v);
    tc.conn.push_back(2 * a.n_arrows() + v);
  }
  for (u32 ai = 0; ai < a.n_arrows(); ++ai) {
    tc.y_arrow.push_back(ai);
    tc.x_arrow.push_back(a.n_arrows() + ai);
  }
  return tc;
}

struct Pairing {
  std::vector<std::string> y_vertices, x_vertices, corner_names;
};

// Recover a triangular context from an existing big algebra and a pairing of
// its vertices.  The corner algebra is rebuilt from the y-side subquiver.
inline TriangularContext from_pairing(const Algebra& b, const Pairing& pairing) {
  u32 n = static_cast<u32>(pairing.y_vertices.size());
  if (pairing.x_vertices.size() != n || pairing.corner_names.size() != n)
    throw std::invalid_argument("pairing lists must have equal length");
  if (2 * n != b.n_vertices())
    throw std::invalid_argument("pairing must cover all vertices exactly once");
  TriangularContext tc;
  tc.y_vertex.resize(n);
  tc.x_vertex.resize(n);
  std::vector<int> side(b.n_vertices(), -1);  // 0 = y, 1 = x
  std::vector<u32> corner_of(b.n_vertices(), 0);
  for (u32 i = 0; i < n; ++i) {
    auto yv = b.vertex_index(pairing.y_vertices[i]);
    auto xv = b.vertex_index(pairing.x_vertices[i]);
    if (!yv || !xv) throw std::invalid_argument("pairing names an unknown vertex");
    if (side[*yv] != -1 || side[*xv] != -1)
      throw std::invalid_argument("pairing must cover all vertices exactly once");
    tc.y_vertex[i] = *yv;
    tc.x_vertex[i] = *xv;
    side[*yv] = 0;
    side[*xv] = 1;
    corner_of[*yv] = i;
    corner_of[*xv] = i;
  }
  // classify arrows
  std::vector<std::pair<u32, u32>> y_arrows;  // (big arrow, unused)
  tc.conn.assign(n, static_cast<u32>(-1));
  std::vector<u32> internal_x;
  for (u32 ai = 0; ai < b.n_arrows(); ++ai) {
    const Arrow& ar = b.arrow(ai);
    int fs = side[ar.from], ts = side[ar.to];
    if (fs == 0 && ts == 0) {
      y_arrows.emplace_back(ai, 0);
    } else if (fs == 1 && ts == 1) {
      internal_x.push_back(ai);
    } else if (fs == 0 && ts == 1) {
      if (corner_of[ar.from] != corner_of[ar.to])
        throw std::invalid_argument("connecting arrow does not respect the pairing");
      if (tc.conn[corner_of[ar.from]] != static_cast<u32>(-1))
        throw std::invalid_argument("duplicate connecting arrow at a paired vertex");
      tc.conn[corner_of[ar.from]] = ai;
    } else {
      throw std::invalid_argument("arrow from the closed side into the open side");
    }
  }
  for (u32 i = 0; i < n; ++i)
    if (tc.conn[i] == static_cast<u32>(-1))
      throw std::invalid_argument("missing connecting arrow at vertex " + pairing.y_vertices[i]);
  // match x-arrows to y-arrows by endpoints
  for (auto [yai, _] : y_arrows) {
    const Arrow& ya = b.arrow(yai);
    u32 cs = corner_of[ya.from], ct = corner_of[ya.to];
    u32 hit = static_cast<u32>(-1);
    for (u32 xai : internal_x) {
      const Arrow& xa = b.arrow(xai);
      if (corner_of[xa.from] == cs && corner_of[xa.to] == ct) {
        if (hit != static_cast<u32>(-1))
          throw std::invalid_argument("ambiguous arrow mirror across the pairing");
        hit = xai;
      }
    }
    if (hit == static_cast<u32>(-1))
      throw std::invalid_argument("open-side arrow " + ya.name + " has no closed-side mirror");
    tc.y_arrow.push_back(yai);
    tc.x_arrow.push_back(hit);
  }
  if (tc.y_arrow.size() != internal_x.size())
    throw std::invalid_argument("closed side has arrows without open-side mirrors");
  // rebuild the corner from the y-side
  std::vector<std::string> cverts = pairing.corner_names;
  std::vector<Arrow> carrows;
  for (u32 k = 0; k < tc.y_arrow.size(); ++k) {
    const Arrow& ya = b.arrow(tc.y_arrow[k]);
    carrows.push_back({ya.name, corner_of[ya.from], corner_of[ya.to]});
  }
  std::vector<Relation> crels;
  for (const Relation& r : b.relations()) {
    bool all_y = true;
    for (const RelationTerm& t : r.terms)
      for (u32 ai : t.arrows)
        if (side[b.arrow(ai).from] != 0 || side[b.arrow(ai).to] != 0) all_y = false;
    if (!all_y) continue;
    Relation cr;
    cr.source = corner_of[b.arrow(r.terms[0].arrows[0]).from];
    cr.target = corner_of[b.arrow(r.terms[0].arrows.back()).to];
    for (const RelationTerm& t : r.terms) {
      RelationTerm ct{t.coeff, {}};
      for (u32 ai : t.arrows) {
        u32 ck = static_cast<u32>(-1);
        for (u32 k = 0; k < tc.y_arrow.size(); ++k)
          if (tc.y_arrow[k] == ai) ck = k;
        ct.arrows.push_back(ck);
      }
      cr.terms.push_back(std::move(ct));
    }
    crels.push_back(std::move(cr));
  }
  tc.corner = std::make_shared<Algebra>(cverts, carrows, crels, b.prime());
  tc.big = std::make_shared<Algebra>(b);
  return tc;
}

// ---------------------------------------------------------------------------
// triples and the six functors

struct Triple {
  Module x, y;  // corner modules
  Morphism f;   // y -> x
};

inline Triple to_triple(const TriangularContext& tc, const Module& mb) {
  const Algebra& a = *tc.corner;
  Triple t;
  t.x.dims.resize(a.n_vertices());
  t.y.dims.resize(a.n_vertices());
  for (u32 v = 0; v < a.n_vertices(); ++v) {
    t.y.dims[v] = mb.dims[tc.y_vertex[v]];
    t.x.dims[v] = mb.dims[tc.x_vertex[v]];
  }
  for (u32 ai = 0; ai < a.n_arrows(); ++ai) {
    t.y.mats.push_back(mb.mats[tc.y_arrow[ai]]);
    t.x.mats.push_back(mb.mats[tc.x_arrow[ai]]);
  }
  for (u32 v = 0; v < a.n_vertices(); ++v) t.f.comps.push_back(mb.mats[tc.conn[v]]);
  return t;
}

inline Module from_triple(const TriangularContext& tc, const Triple& t) {
  const Algebra& a = *tc.corner;
  const Algebra& b = *tc.big;
  if (!intertwines(a, t.y, t.x, t.f))
    throw std::invalid_argument("triple map does not intertwine the corner actions");
  Module mb;
  mb.dims.assign(b.n_vertices(), 0);
  mb.mats.assign(b.n_arrows(), Matrix(0, 0, b.prime()));
  for (u32 v = 0; v < a.n_vertices(); ++v) {
    mb.dims[tc.y_vertex[v]] = t.y.dims[v];
    mb.dims[tc.x_vertex[v]] = t.x.dims[v];
  }
  for (u32 ai = 0; ai < a.n_arrows(); ++ai) {
    mb.mats[tc.y_arrow[ai]] = t.y.mats[ai];
    mb.mats[tc.x_arrow[ai]] = t.x.mats[ai];
  }
  for (u32 v = 0; v < a.n_vertices(); ++v) mb.mats[tc.conn[v]] = t.f.comps[v];
  if (!relations_satisfied(b, mb))
    throw std::logic_error("assembled module violates the relations");
  return mb;
}

// objects
inline Module i_lower_star(const TriangularContext& tc, const Module& x) {
  Triple t;
  t.x = x;
  t.y = zero_module(*tc.corner);
  t.f = zero_morphism(*tc.corner, t.y, t.x);
  return from_triple(tc, t);
}

inline Module j_lower_shriek(const TriangularContext& tc, const Module& y) {
  Triple t;
  t.x = y;
  t.y = y;
  t.f = identity_morphism(*tc.corner, y);
  return from_triple(tc, t);
}

inline Module j_lower_star(const TriangularContext& tc, const Module& y) {
  Triple t;
  t.x = zero_module(*tc.corner);
  t.y = y;
  t.f = zero_morphism(*tc.corner, t.y, t.x);
  return from_triple(tc, t);
}

inline Module i_shriek(const TriangularContext& tc, const Module& mb) {
  return to_triple(tc, mb).x;
}

inline Module j_upper_star(const TriangularContext& tc, const Module& mb) {
  return to_triple(tc, mb).y;
}

inline QuotientModule i_upper_star_data(const TriangularContext& tc, const Module& mb) {
  Triple t = to_triple(tc, mb);
  return cokernel_of(*tc.corner, t.x, t.f);
}

inline Module i_upper_star(const TriangularContext& tc, const Module& mb) {
  return i_upper_star_data(tc, mb).module;
}

// morphisms
inline Morphism i_shriek_mor(const TriangularContext& tc, const Morphism& phi) {
  Morphism out;
  for (u32 v : tc.x_vertex) out.comps.push_back(phi.comps[v]);
  return out;
}

inline Morphism j_upper_star_mor(const TriangularContext& tc, const Morphism& phi) {
  Morphism out;
  for (u32 v : tc.y_vertex) out.comps.push_back(phi.comps[v]);
  return out;
}

inline Morphism i_lower_star_mor(const TriangularContext& tc, const Morphism& f) {
  const Algebra& b = *tc.big;
  Morphism out;
  out.comps.assign(b.n_vertices(), Matrix(0, 0, b.prime()));
  for (u32 v = 0; v < tc.corner->n_vertices(); ++v) {
    out.comps[tc.x_vertex[v]] = f.comps[v];
    out.comps[tc.y_vertex[v]] = Matrix(0, 0, b.prime());
  }
  return out;
}

inline Morphism j_lower_shriek_mor(const TriangularContext& tc, const Morphism& g) {
  const Algebra& b = *tc.big;
  Morphism out;
  out.comps.assign(b.n_vertices(), Matrix(0, 0, b.prime()));
  for (u32 v = 0; v < tc.corner->n_vertices(); ++v) {
    out.comps[tc.y_vertex[v]] = g.comps[v];
    out.comps[tc.x_vertex[v]] = g.comps[v];
  }
  return out;
}

inline Morphism j_lower_star_mor(const TriangularContext& tc, const Morphism& g) {
  const Algebra& b = *tc.big;
  Morphism out;
  out.comps.assign(b.n_vertices(), Matrix(0, 0, b.prime()));
  for (u32 v = 0; v < tc.corner->n_vertices(); ++v) {
    out.comps[tc.y_vertex[v]] = g.comps[v];
    out.comps[tc.x_vertex[v]] = Matrix(0, 0, b.prime());
  }
  return out;
}

inline Morphism i_upper_star_mor(const TriangularContext& tc, const Module& mb, const Module& nb,
                                 const Morphism& phi) {
  QuotientModule qm = i_upper_star_data(tc, mb);
  QuotientModule qn = i_upper_star_data(tc, nb);
  Morphism phix = i_shriek_mor(tc, phi);
  Morphism out;
  for (u32 v = 0; v < tc.corner->n_vertices(); ++v)
    out.comps.push_back(qn.projection.comps[v] * phix.comps[v] * qm.section.comps[v]);
  return out;
}

// ---------------------------------------------------------------------------
// unit and counit maps at a module of the big algebra

// i_lower_star(i_shriek(m)) -> m : identity on the closed part
inline Morphism counit_closed(const TriangularContext& tc, const Module& mb) {
  const Algebra& b = *tc.big;
  Module src = i_lower_star(tc, i_shriek(tc, mb));
  Morphism out = zero_morphism(b, src, mb);
  for (u32 v = 0; v < tc.corner->n_vertices(); ++v) {
    u32 bx = tc.x_vertex[v];
    out.comps[bx] = Matrix::identity(mb.dims[bx], b.prime());
  }
  return out;
}

// m -> j_lower_star(j_upper_star(m)) : identity on the open part
inline Morphism unit_open(const TriangularContext& tc, const Module& mb) {
  const Algebra& b = *tc.big;
  Module dst = j_lower_star(tc, j_upper_star(tc, mb));
  Morphism out = zero_morphism(b, mb, dst);
  for (u32 v = 0; v < tc.corner->n_vertices(); ++v) {
    u32 by = tc.y_vertex[v];
    out.comps[by] = Matrix::identity(mb.dims[by], b.prime());
  }
  return out;
}

// j_lower_shriek(j_upper_star(m)) -> m : (connector, identity)
inline Morphism counit_open(const TriangularContext& tc, const Module& mb) {
  const Algebra& b = *tc.big;
  Triple t = to_triple(tc, mb);
  Module src = j_lower_shriek(tc, t.y);
  Morphism out = zero_morphism(b, src, mb);
  for (u32 v = 0; v < tc.corner->n_vertices(); ++v) {
    out.comps[tc.y_vertex[v]] = Matrix::identity(mb.dims[tc.y_vertex[v]], b.prime());
    out.comps[tc.x_vertex[v]] = t.f.comps[v];
  }
  return out;
}

// m -> i_lower_star(i_upper_star(m)) : cokernel projection on the closed part
inline Morphism unit_closed(const TriangularContext& tc, const Module& mb) {
  const Algebra& b = *tc.big;
  QuotientModule q = i_upper_star_data(tc, mb);
  Module dst = i_lower_star(tc, q.module);
  Morphism out = zero_morphism(b, mb, dst);
  for (u32 v = 0; v < tc.corner->n_vertices(); ++v)
    out.comps[tc.x_vertex[v]] = q.projection.comps[v];
  return out;
}

// The closed-open conflation 0 -> i i^! m -> m -> j_* j^* m -> 0.
inline Conflation closed_open_conflation(const TriangularContext& tc, const Module& mb) {
  Conflation c;
  c.left = i_lower_star(tc, i_shriek(tc, mb));
  c.mid = mb;
  c.right = j_lower_star(tc, j_upper_star(tc, mb));
  c.inj = counit_closed(tc, mb);
  c.proj = unit_open(tc, mb);
  return c;
}

// Right-exactness of j_! j^* m -> m -> i i^* m -> 0, checked vertexwise.
inline bool open_closed_right_exact(const TriangularContext& tc, const Module& mb) {
  const Algebra& b = *tc.big;
  Morphism u = counit_open(tc, mb);
  Morphism v = unit_closed(tc, mb);
  if (!is_epi(v)) return false;
  for (u32 w = 0; w < b.n_vertices(); ++w) {
    Matrix comp = v.comps[w] * u.comps[w];
    if (!comp.is_zero()) return false;
    if (rank(u.comps[w]) != mb.dims[w] - rank(v.comps[w])) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// verification

struct CheckResult {
  std::string name;
  bool pass = true;
  std::string detail;
};

struct FunctorExactness {
  bool i_upper_star = true;
  bool i_shriek = true;
  bool i_lower_star = true;
  bool j_upper_star = true;
  bool j_lower_shriek = true;
  bool j_lower_star = true;
  std::string witness;  // first failure seen
};

struct RecollementReport {
  std::vector<CheckResult> checks;
  FunctorExactness exactness;
  bool all_pass = true;

  void add(CheckResult c) {
    all_pass = all_pass && c.pass;
    checks.push_back(std::move(c));
  }
};

namespace detail {

inline std::vector<Conflation> cover_conflations(const Algebra& alg, const IndecCatalog& cat) {
  std::vector<Conflation> out;
  for (const Module& m : cat.modules) {
    ProjectiveCover cover = projective_cover(alg, m);
    SubModule ker = kernel_of(alg, cover.p, cover.pi);
    if (ker.module.is_zero()) continue;
    Conflation c;
    c.left = ker.module;
    c.mid = cover.p;
    c.right = m;
    c.inj = ker.inclusion;
    c.proj = cover.pi;
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace detail

inline RecollementReport verify_recollement(const TriangularContext& tc,
                                            const IndecCatalog& cat_a,
                                            const IndecCatalog& cat_b, u32 kmax = 2) {
  const Algebra& a = *tc.corner;
  const Algebra& b = *tc.big;
  RecollementReport rep;

  {
    CheckResult c{"embedding_fully_faithful", true, ""};
    for (const Module& x : cat_a.modules)
      for (const Module& xp : cat_a.modules) {
        u32 lhs = hom_dim(b, i_lower_star(tc, x), i_lower_star(tc, xp));
        u32 rhs = hom_dim(a, x, xp);
        if (lhs != rhs) {
          c.pass = false;
          c.detail = "hom dimensions disagree under the closed embedding";
        }
      }
    rep.add(std::move(c));
  }
  {
    CheckResult c{"open_kills_embedded", true, ""};
    for (const Module& x : cat_a.modules)
      if (!j_upper_star(tc, i_lower_star(tc, x)).is_zero()) {
        c.pass = false;
        c.detail = "open restriction of an embedded module is nonzero";
      }
    rep.add(std::move(c));
  }
  {
    CheckResult c{"adjunction_open_shriek", true, ""};
    for (const Module& y : cat_a.modules)
      for (const Module& nb : cat_b.modules)
        if (hom_dim(b, j_lower_shriek(tc, y), nb) != hom_dim(a, y, j_upper_star(tc, nb))) {
          c.pass = false;
          c.detail = "hom adjunction for the open extension fails";
        }
    rep.add(std::move(c));
  }
  {
    CheckResult c{"adjunction_embed_lower", true, ""};
    for (const Module& x : cat_a.modules)
      for (const Module& nb : cat_b.modules)
        if (hom_dim(b, i_lower_star(tc, x), nb) != hom_dim(a, x, i_shriek(tc, nb))) {
          c.pass = false;
          c.detail = "hom adjunction for the closed embedding (left side) fails";
        }
    rep.add(std::move(c));
  }
  {
    CheckResult c{"adjunction_embed_upper", true, ""};
    for (const Module& x : cat_a.modules)
      for (const Module& nb : cat_b.modules)
        if (hom_dim(b, nb, i_lower_star(tc, x)) != hom_dim(a, i_upper_star(tc, nb), x)) {
          c.pass = false;
          c.detail = "hom adjunction for the closed embedding (right side) fails";
        }
    rep.add(std::move(c));
  }
  {
    CheckResult c{"adjunction_open_lower", true, ""};
    for (const Module& y : cat_a.modules)
      for (const Module& nb : cat_b.modules)
        if (hom_dim(b, nb, j_lower_star(tc, y)) != hom_dim(a, j_upper_star(tc, nb), y)) {
          c.pass = false;
          c.detail = "hom adjunction for the open coextension fails";
        }
    rep.add(std::move(c));
  }
  {
    CheckResult c{"unit_counit_isos", true, ""};
    for (const Module& x : cat_a.modules) {
      if (!are_isomorphic(a, i_upper_star(tc, i_lower_star(tc, x)), x)) c.pass = false;
      if (!are_isomorphic(a, i_shriek(tc, i_lower_star(tc, x)), x)) c.pass = false;
      if (!are_isomorphic(a, j_upper_star(tc, j_lower_shriek(tc, x)), x)) c.pass = false;
      if (!are_isomorphic(a, j_upper_star(tc, j_lower_star(tc, x)), x)) c.pass = false;
    }
    if (!c.pass) c.detail = "a unit or counit fails to be invertible";
    rep.add(std::move(c));
  }
  {
    CheckResult c{"orthogonal_vanishing", true, ""};
    for (const Module& y : cat_a.modules) {
      if (!i_upper_star(tc, j_lower_shriek(tc, y)).is_zero()) c.pass = false;
      if (!i_shriek(tc, j_lower_star(tc, y)).is_zero()) c.pass = false;
    }
    if (!c.pass) c.detail = "closed restriction of an open extension is nonzero";
    rep.add(std::move(c));
  }
  {
    CheckResult c{"closed_open_conflation", true, ""};
    for (const Module& mb : cat_b.modules)
      if (!is_conflation(b, closed_open_conflation(tc, mb))) {
        c.pass = false;
        c.detail = "closed-open sequence fails to be a conflation";
      }
    rep.add(std::move(c));
  }
  {
    CheckResult c{"open_closed_right_exact", true, ""};
    for (const Module& mb : cat_b.modules)
      if (!open_closed_right_exact(tc, mb)) {
        c.pass = false;
        c.detail = "open-closed sequence fails right exactness";
      }
    rep.add(std::move(c));
  }
  {
    CheckResult c{"derived_adjunction_embed", true, ""};
    for (const Module& x : cat_a.modules)
      for (const Module& nb : cat_b.modules) {
        std::vector<u32> lhs = ext_dims_upto(b, i_lower_star(tc, x), nb, kmax);
        std::vector<u32> rhs = ext_dims_upto(a, x, i_shriek(tc, nb), kmax);
        if (lhs != rhs) {
          c.pass = false;
          c.detail = "derived adjunction for the closed embedding fails";
        }
      }
    rep.add(std::move(c));
  }
  {
    CheckResult c{"derived_adjunction_open_shriek", true, ""};
    for (const Module& y : cat_a.modules)
      for (const Module& nb : cat_b.modules) {
        std::vector<u32> lhs = ext_dims_upto(b, j_lower_shriek(tc, y), nb, kmax);
        std::vector<u32> rhs = ext_dims_upto(a, y, j_upper_star(tc, nb), kmax);
        if (lhs != rhs) {
          c.pass = false;
          c.detail = "derived adjunction for the open extension fails";
        }
      }
    rep.add(std::move(c));
  }
  {
    CheckResult c{"derived_adjunction_open_lower", true, ""};
    for (const Module& y : cat_a.modules)
      for (const Module& nb : cat_b.modules) {
        std::vector<u32> lhs = ext_dims_upto(b, nb, j_lower_star(tc, y), kmax);
        std::vector<u32> rhs = ext_dims_upto(a, j_upper_star(tc, nb), y, kmax);
        if (lhs != rhs) {
          c.pass = false;
          c.detail = "derived adjunction for the open coextension fails";
        }
      }
    rep.add(std::move(c));
  }

  // exactness probes on projective-cover conflations
  auto probe_from_corner = [&](auto&& map_ob, auto&& map_mor, bool& flag, const char* fname) {
    for (const Conflation& c : detail::cover_conflations(a, cat_a)) {
      Conflation img;
      img.left = map_ob(c.left);
      img.mid = map_ob(c.mid);
      img.right = map_ob(c.right);
      img.inj = map_mor(c.inj);
      img.proj = map_mor(c.proj);
      if (!is_conflation(b, img)) {
        flag = false;
        if (rep.exactness.witness.empty())
          rep.exactness.witness = std::string(fname) + " breaks a conflation";
      }
    }
  };
  probe_from_corner([&](const Module& m) { return i_lower_star(tc, m); },
                    [&](const Morphism& f) { return i_lower_star_mor(tc, f); },
                    rep.exactness.i_lower_star, "closed embedding");
  probe_from_corner([&](const Module& m) { return j_lower_shriek(tc, m); },
                    [&](const Morphism& f) { return j_lower_shriek_mor(tc, f); },
                    rep.exactness.j_lower_shriek, "open extension");
  probe_from_corner([&](const Module& m) { return j_lower_star(tc, m); },
                    [&](const Morphism& f) { return j_lower_star_mor(tc, f); },
                    rep.exactness.j_lower_star, "open coextension");

  for (const Conflation& c : detail::cover_conflations(b, cat_b)) {
    Conflation restr;
    restr.left = i_shriek(tc, c.left);
    restr.mid = i_shriek(tc, c.mid);
    restr.right = i_shriek(tc, c.right);
    restr.inj = i_shriek_mor(tc, c.inj);
    restr.proj = i_shriek_mor(tc, c.proj);
    if (!is_conflation(a, restr)) {
      rep.exactness.i_shriek = false;
      if (rep.exactness.witness.empty())
        rep.exactness.witness = "closed restriction breaks a conflation";
    }
    Conflation open_restr;
    open_restr.left = j_upper_star(tc, c.left);
    open_restr.mid = j_upper_star(tc, c.mid);
    open_restr.right = j_upper_star(tc, c.right);
    open_restr.inj = j_upper_star_mor(tc, c.inj);
    open_restr.proj = j_upper_star_mor(tc, c.proj);
    if (!is_conflation(a, open_restr)) {
      rep.exactness.j_upper_star = false;
      if (rep.exactness.witness.empty())
        rep.exactness.witness = "open restriction breaks a conflation";
    }
    Conflation quot;
    quot.left = i_upper_star(tc, c.left);
    quot.mid = i_upper_star(tc, c.mid);
    quot.right = i_upper_star(tc, c.right);
    quot.inj = i_upper_star_mor(tc, c.left, c.mid, c.inj);
    quot.proj = i_upper_star_mor(tc, c.mid, c.right, c.proj);
    if (!is_conflation(a, quot)) {
      rep.exactness.i_upper_star = false;
      if (rep.exactness.witness.empty())
        rep.exactness.witness = "closed quotient functor breaks a conflation";
    }
  }

  return rep;
}

}  // namespace qrep
