#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "qrep/fpmatrix.hpp"

namespace qrep {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Arrow {
  std::string name;
  u32 from = 0;
  u32 to = 0;
};

// One summand of a relation: coeff * (a_1 then a_2 then ... then a_n).
struct RelationTerm {
  u32 coeff = 0;
  std::vector<u32> arrows;  // traversal order
};

struct Relation {
  std::vector<RelationTerm> terms;
  u32 source = 0;
  u32 target = 0;
};

// A path stored in traversal order; empty = the lazy path at a vertex.
struct Path {
  u32 source = 0;
  u32 target = 0;
  std::vector<u32> arrows;
};

inline bool path_order_less(const Path& a, const Path& b) {
  if (a.arrows.size() != b.arrows.size()) return a.arrows.size() < b.arrows.size();
  return a.arrows < b.arrows;
}

namespace detail {
inline bool is_prime_u32(u32 n) {
  if (n < 2) return false;
  for (u32 d = 2; static_cast<u64>(d) * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}
}  // namespace detail

class Algebra {
public:
  Algebra(std::vector<std::string> vertices, std::vector<Arrow> arrows,
          std::vector<Relation> relations, u32 prime)
      : vertices_(std::move(vertices)),
        arrows_(std::move(arrows)),
        relations_(std::move(relations)),
        p_(prime) {
    validate_and_build();
  }

  u32 prime() const { return p_; }
  u32 n_vertices() const { return static_cast<u32>(vertices_.size()); }
  u32 n_arrows() const { return static_cast<u32>(arrows_.size()); }
  const std::string& vertex_name(u32 v) const { return vertices_[v]; }
  const Arrow& arrow(u32 a) const { return arrows_[a]; }
  const std::vector<Relation>& relations() const { return relations_; }

  std::optional<u32> vertex_index(const std::string& name) const {
    for (u32 v = 0; v < vertices_.size(); ++v)
      if (vertices_[v] == name) return v;
    return std::nullopt;
  }

  // Total dimension of the bound quiver algebra = number of residue paths.
  u32 dim() const { return dim_; }

  // Residue paths v -> w (a basis of e_w (kQ/I) e_v), canonical order.
  const std::vector<Path>& residue_paths(u32 v, u32 w) const { return blocks_[block_index(v, w)].residue; }

  // Express a path, as an element of the quotient algebra, in the residue
  // basis of its (source, target) block.
  std::vector<u32> reduce_path(const Path& q) const {
    const Block& b = blocks_[block_index(q.source, q.target)];
    std::vector<u32> coords(b.all.size(), 0);
    coords[b.position_of(q)] = 1;
    return b.reduce(coords, p_);
  }

  std::string content_hash() const {
    std::string s = "vertices:";
    for (const auto& v : vertices_) s += v + ";";
    s += "|arrows:";
    for (const auto& a : arrows_) s += a.name + ":" + vertices_[a.from] + ">" + vertices_[a.to] + ";";
    s += "|relations:";
    for (const auto& r : relations_) {
      for (const auto& t : r.terms) {
        s += std::to_string(t.coeff) + "*";
        for (u32 ai : t.arrows) s += arrows_[ai].name + ".";
        s += "+";
      }
      s += ";";
    }
    s += "|p:" + std::to_string(p_);
    u64 h = 1469598103934665603ull;
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
  }

private:
  friend struct AlgebraAccess;

  struct Block {
    std::vector<Path> all;       // every path v -> w, canonical order
    std::vector<Path> residue;   // non-pivot paths = basis of the quotient
    Matrix ideal_rref;           // rref rows spanning the ideal inside this block
    std::vector<u32> pivots;     // pivot positions into `all`
    std::vector<u32> residue_pos;  // positions into `all` of residue paths

    u32 position_of(const Path& q) const {
      for (u32 i = 0; i < all.size(); ++i)
        if (all[i].arrows == q.arrows) return i;
      throw std::logic_error("path not found in its block");
    }

    // Reduce a coordinate vector over `all` modulo the ideal rows, then read
    // off the residue coordinates.
    std::vector<u32> reduce(std::vector<u32> coords, u32 p) const {
      for (u32 row = 0; row < pivots.size(); ++row) {
        u32 c = coords[pivots[row]];
        if (!c) continue;
        for (u32 j = 0; j < coords.size(); ++j)
          coords[j] = fp_sub(coords[j], fp_mul(c, ideal_rref.at(row, j), p), p);
      }
      std::vector<u32> out(residue_pos.size());
      for (u32 i = 0; i < residue_pos.size(); ++i) out[i] = coords[residue_pos[i]];
      return out;
    }
  };

  u32 block_index(u32 v, u32 w) const { return v * n_vertices() + w; }

  void validate_and_build() {
    if (vertices_.empty()) throw ParseError("algebra needs at least one vertex");
    {
      std::vector<std::string> sorted = vertices_;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw ParseError("duplicate vertex name");
    }
    for (const Arrow& a : arrows_)
      if (a.from >= vertices_.size() || a.to >= vertices_.size())
        throw ParseError("arrow endpoint out of range");
    check_acyclic();
    for (const Relation& r : relations_) validate_relation(r);
    if (!detail::is_prime_u32(p_)) throw ParseError("field order must be prime, got " + std::to_string(p_));
    build_blocks();
    if (p_ <= dim_)
      throw ParseError("prime " + std::to_string(p_) + " must exceed algebra dimension " +
                       std::to_string(dim_));
  }

  void check_acyclic() {
    u32 n = n_vertices();
    std::vector<u32> indeg(n, 0);
    for (const Arrow& a : arrows_) ++indeg[a.to];
    std::vector<u32> queue;
    for (u32 v = 0; v < n; ++v)
      if (!indeg[v]) queue.push_back(v);
    u32 seen = 0;
    while (!queue.empty()) {
      u32 v = queue.back();
      queue.pop_back();
      ++seen;
      for (const Arrow& a : arrows_)
        if (a.from == v && --indeg[a.to] == 0) queue.push_back(a.to);
    }
    if (seen != n) throw ParseError("cyclic quiver");
  }

  void validate_relation(const Relation& r) const {
    if (r.terms.empty()) throw ParseError("empty relation");
    bool nonzero = false;
    for (const RelationTerm& t : r.terms) {
      if (t.arrows.size() < 2)
        throw ParseError("relation term path must have length >= 2 (admissible ideal)");
      for (size_t i = 0; i < t.arrows.size(); ++i) {
        if (t.arrows[i] >= arrows_.size()) throw ParseError("relation references unknown arrow");
        if (i + 1 < t.arrows.size() && arrows_[t.arrows[i]].to != arrows_[t.arrows[i + 1]].from)
          throw ParseError("non-composable relation path");
      }
      u32 s = arrows_[t.arrows.front()].from;
      u32 e = arrows_[t.arrows.back()].to;
      if (s != r.source || e != r.target)
        throw ParseError("relation terms are not parallel paths");
      if (t.coeff % p_ != 0) nonzero = true;
    }
    if (!nonzero) throw ParseError("relation vanishes modulo the field order");
  }

  std::vector<Path> paths_from(u32 v) const {
    std::vector<Path> out;
    out.push_back(Path{v, v, {}});
    for (size_t i = 0; i < out.size(); ++i) {
      Path cur = out[i];
      for (u32 a = 0; a < arrows_.size(); ++a) {
        if (arrows_[a].from != cur.target) continue;
        Path ext = cur;
        ext.arrows.push_back(a);
        ext.target = arrows_[a].to;
        out.push_back(std::move(ext));
      }
    }
    return out;
  }

  void build_blocks() {
    u32 n = n_vertices();
    blocks_.assign(static_cast<size_t>(n) * n, Block{});
    for (u32 v = 0; v < n; ++v)
      for (const Path& q : paths_from(v)) blocks_[block_index(v, q.target)].all.push_back(q);
    for (auto& b : blocks_)
      std::sort(b.all.begin(), b.all.end(), path_order_less);

    // Two-sided ideal inside each block: left/right path multiples of the
    // relation generators.
    std::vector<std::vector<std::vector<u32>>> ideal_rows(blocks_.size());
    for (const Relation& r : relations_) {
      for (u32 v = 0; v < n; ++v) {
        for (const Path& pre : paths_from(v)) {
          if (pre.target != r.source) continue;
          for (const Path& post : paths_from(r.target)) {
            Block& blk = blocks_[block_index(v, post.target)];
            std::vector<u32> row(blk.all.size(), 0);
            for (const RelationTerm& t : r.terms) {
              Path full = pre;
              full.arrows.insert(full.arrows.end(), t.arrows.begin(), t.arrows.end());
              full.arrows.insert(full.arrows.end(), post.arrows.begin(), post.arrows.end());
              full.target = post.target;
              u32 pos = blk.position_of(full);
              row[pos] = fp_add(row[pos], t.coeff % p_, p_);
            }
            ideal_rows[block_index(v, post.target)].push_back(std::move(row));
          }
        }
      }
    }

    dim_ = 0;
    for (size_t bi = 0; bi < blocks_.size(); ++bi) {
      Block& b = blocks_[bi];
      u32 width = static_cast<u32>(b.all.size());
      Matrix rows(static_cast<u32>(ideal_rows[bi].size()), width, p_);
      for (u32 i = 0; i < ideal_rows[bi].size(); ++i)
        for (u32 j = 0; j < width; ++j) rows.at(i, j) = ideal_rows[bi][i][j];
      RrefResult rr = rref(rows);
      b.pivots = rr.pivots;
      Matrix kept(rr.rank, width, p_);
      for (u32 i = 0; i < rr.rank; ++i)
        for (u32 j = 0; j < width; ++j) kept.at(i, j) = rr.reduced.at(i, j);
      b.ideal_rref = kept;
      std::vector<bool> is_pivot(width, false);
      for (u32 c : b.pivots) is_pivot[c] = true;
      for (u32 i = 0; i < width; ++i)
        if (!is_pivot[i]) {
          b.residue_pos.push_back(i);
          b.residue.push_back(b.all[i]);
        }
      dim_ += static_cast<u32>(b.residue.size());
    }
  }

  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  std::vector<Relation> relations_;
  u32 p_ = 101;
  u32 dim_ = 0;
  std::vector<Block> blocks_;
};

// A representation: a vector space at each vertex, a matrix along each arrow
// (rows = dim at target, cols = dim at source).
struct Module {
  std::vector<u32> dims;
  std::vector<Matrix> mats;

  u32 dim_total() const {
    u32 s = 0;
    for (u32 d : dims) s += d;
    return s;
  }
  bool is_zero() const { return dim_total() == 0; }
};

inline Module zero_module(const Algebra& alg) {
  Module m;
  m.dims.assign(alg.n_vertices(), 0);
  for (u32 a = 0; a < alg.n_arrows(); ++a)
    m.mats.push_back(Matrix(0, 0, alg.prime()));
  return m;
}

inline void check_module(const Algebra& alg, const Module& m) {
  if (m.dims.size() != alg.n_vertices() || m.mats.size() != alg.n_arrows())
    throw std::invalid_argument("module shape does not match algebra");
  for (u32 a = 0; a < alg.n_arrows(); ++a)
    if (m.mats[a].rows() != m.dims[alg.arrow(a).to] || m.mats[a].cols() != m.dims[alg.arrow(a).from])
      throw std::invalid_argument("arrow matrix shape mismatch");
}

// Product M(a_n) ... M(a_1) realizing a path action (a_1 traversed first).
inline Matrix path_action(const Algebra& alg, const Module& m, const Path& q) {
  Matrix acc = Matrix::identity(m.dims[q.source], alg.prime());
  for (u32 ai : q.arrows) acc = m.mats[ai] * acc;
  return acc;
}

inline bool relations_satisfied(const Algebra& alg, const Module& m) {
  for (const Relation& r : alg.relations()) {
    Matrix sum(m.dims[r.target], m.dims[r.source], alg.prime());
    for (const RelationTerm& t : r.terms) {
      Path q{r.source, r.target, t.arrows};
      sum = sum + path_action(alg, m, q).scaled(t.coeff % alg.prime());
    }
    if (!sum.is_zero()) return false;
  }
  return true;
}

inline Module simple_module(const Algebra& alg, u32 v) {
  Module m = zero_module(alg);
  m.dims[v] = 1;
  for (u32 a = 0; a < alg.n_arrows(); ++a)
    m.mats[a] = Matrix(m.dims[alg.arrow(a).to], m.dims[alg.arrow(a).from], alg.prime());
  return m;
}

// Indecomposable projective at v: basis at w = residue paths v -> w; an arrow
// acts by appending itself and reducing modulo the relation ideal.
inline Module projective_module(const Algebra& alg, u32 v) {
  Module m;
  m.dims.resize(alg.n_vertices());
  for (u32 w = 0; w < alg.n_vertices(); ++w)
    m.dims[w] = static_cast<u32>(alg.residue_paths(v, w).size());
  for (u32 a = 0; a < alg.n_arrows(); ++a) {
    const Arrow& ar = alg.arrow(a);
    const auto& src = alg.residue_paths(v, ar.from);
    const auto& dst = alg.residue_paths(v, ar.to);
    Matrix mat(static_cast<u32>(dst.size()), static_cast<u32>(src.size()), alg.prime());
    for (u32 j = 0; j < src.size(); ++j) {
      Path ext = src[j];
      ext.arrows.push_back(a);
      ext.target = ar.to;
      std::vector<u32> coords = alg.reduce_path(ext);
      for (u32 i = 0; i < dst.size(); ++i) mat.at(i, j) = coords[i];
    }
    m.mats.push_back(std::move(mat));
  }
  return m;
}

inline Module regular_module(const Algebra& alg) {
  Module total = zero_module(alg);
  std::vector<Module> parts;
  for (u32 v = 0; v < alg.n_vertices(); ++v) parts.push_back(projective_module(alg, v));
  for (u32 w = 0; w < alg.n_vertices(); ++w) {
    total.dims[w] = 0;
    for (const Module& part : parts) total.dims[w] += part.dims[w];
  }
  for (u32 a = 0; a < alg.n_arrows(); ++a) {
    const Arrow& ar = alg.arrow(a);
    Matrix mat(total.dims[ar.to], total.dims[ar.from], alg.prime());
    u32 ro = 0, co = 0;
    for (const Module& part : parts) {
      for (u32 i = 0; i < part.mats[a].rows(); ++i)
        for (u32 j = 0; j < part.mats[a].cols(); ++j) mat.at(ro + i, co + j) = part.mats[a].at(i, j);
      ro += part.dims[ar.to];
      co += part.dims[ar.from];
    }
    total.mats[a] = std::move(mat);
  }
  return total;
}

// JSON grammar: {"vertices": [...], "arrows": [{"name","from","to"}...],
// "relations": [[{"coeff": int, "path": [arrow names]}...]...], "prime": opt}.
inline Algebra parse_algebra(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("algebra spec must be a JSON object");
  if (!j.contains("vertices") || !j["vertices"].is_array())
    throw ParseError("missing or malformed 'vertices'");
  std::vector<std::string> vertices;
  for (const auto& v : j["vertices"]) {
    if (!v.is_string()) throw ParseError("vertex names must be strings");
    vertices.push_back(v.get<std::string>());
  }

  auto vidx = [&](const std::string& name) -> u32 {
    for (u32 i = 0; i < vertices.size(); ++i)
      if (vertices[i] == name) return i;
    throw ParseError("unknown vertex '" + name + "'");
  };

  std::vector<Arrow> arrows;
  if (j.contains("arrows")) {
    if (!j["arrows"].is_array()) throw ParseError("malformed 'arrows'");
    for (const auto& a : j["arrows"]) {
      if (!a.is_object() || !a.contains("name") || !a.contains("from") || !a.contains("to"))
        throw ParseError("arrow needs name/from/to");
      arrows.push_back(Arrow{a["name"].get<std::string>(), vidx(a["from"].get<std::string>()),
                             vidx(a["to"].get<std::string>())});
    }
  }
  auto aidx = [&](const std::string& name) -> u32 {
    for (u32 i = 0; i < arrows.size(); ++i)
      if (arrows[i].name == name) return i;
    throw ParseError("unknown arrow '" + name + "'");
  };

  u32 prime = 101;
  if (j.contains("prime")) {
    if (!j["prime"].is_number_integer()) throw ParseError("malformed 'prime'");
    long long p = j["prime"].get<long long>();
    if (p < 2) throw ParseError("field order must be at least 2");
    prime = static_cast<u32>(p);
  }

  std::vector<Relation> relations;
  if (j.contains("relations")) {
    if (!j["relations"].is_array()) throw ParseError("malformed 'relations'");
    for (const auto& rel : j["relations"]) {
      if (!rel.is_array() || rel.empty()) throw ParseError("relation must be a nonempty array of terms");
      Relation r;
      bool first = true;
      for (const auto& term : rel) {
        if (!term.is_object() || !term.contains("coeff") || !term.contains("path"))
          throw ParseError("relation term needs coeff and path");
        RelationTerm t;
        long long c = term["coeff"].get<long long>();
        long long cm = ((c % prime) + prime) % prime;
        t.coeff = static_cast<u32>(cm);
        if (!term["path"].is_array() || term["path"].empty())
          throw ParseError("relation term path must be a nonempty array");
        for (const auto& an : term["path"]) t.arrows.push_back(aidx(an.get<std::string>()));
        if (first) {
          r.source = arrows[t.arrows.front()].from;
          r.target = arrows[t.arrows.back()].to;
          first = false;
        }
        r.terms.push_back(std::move(t));
      }
      relations.push_back(std::move(r));
    }
  }
  return Algebra(std::move(vertices), std::move(arrows), std::move(relations), prime);
}

inline Algebra parse_algebra_text(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError("invalid JSON");
  return parse_algebra(j);
}

}  // namespace qrep
