#pragma once

#include "dblcat/core.hpp"
#include "dblcat/validate.hpp"

namespace dblcat {

// The terminal double category: one object, identities only.
inline DoubleCategory terminal() {
  DoubleCategory d;
  d.name = "Terminal";
  d.n_objects = 1;
  d.h_src = {0}; d.h_tgt = {0};
  d.v_src = {0}; d.v_tgt = {0};
  d.sq = {SquareFrame{0, 0, 0, 0}};
  d.id_h = {0}; d.id_v = {0};
  d.id_sq_h = {0}; d.id_sq_v = {0};
  allocate_tables(d);
  d.set_hcomp_h(0, 0, 0);
  d.set_vcomp_v(0, 0, 0);
  d.set_hcomp_sq(0, 0, 0);
  d.set_vcomp_sq(0, 0, 0);
  return d;
}

// Discrete double category on the cyclic group Z/n: n objects, identities only.
// (The group structure matters to the tensor built on top, not to the category.)
inline DoubleCategory disc_cyclic(int n) {
  if (n <= 0) throw PreconditionError("disc_cyclic: order must be positive");
  DoubleCategory d;
  d.name = "Disc(Z/" + std::to_string(n) + ")";
  d.n_objects = n;
  for (Idx a = 0; a < n; ++a) {
    d.h_src.push_back(a); d.h_tgt.push_back(a);
    d.v_src.push_back(a); d.v_tgt.push_back(a);
    d.sq.push_back({a, a, a, a});
    d.id_h.push_back(a); d.id_v.push_back(a);
    d.id_sq_h.push_back(a); d.id_sq_v.push_back(a);
  }
  allocate_tables(d);
  for (Idx a = 0; a < n; ++a) {
    d.set_hcomp_h(a, a, a);
    d.set_vcomp_v(a, a, a);
    d.set_hcomp_sq(a, a, a);
    d.set_vcomp_sq(a, a, a);
  }
  return d;
}

// Quintet double category Q(Z/n): one object, hcells and vcells are group
// elements, squares are (top, bottom, left, right) with top+right = left+bottom.
// Square index = ((top*n)+bottom)*n+left with right determined.
inline DoubleCategory quintet_cyclic(int n) {
  if (n <= 0) throw PreconditionError("quintet_cyclic: order must be positive");
  DoubleCategory d;
  d.name = "Q(Z/" + std::to_string(n) + ")";
  d.n_objects = 1;
  for (Idx i = 0; i < n; ++i) {
    d.h_src.push_back(0); d.h_tgt.push_back(0);
    d.v_src.push_back(0); d.v_tgt.push_back(0);
  }
  auto sq_index = [n](Idx top, Idx bottom, Idx left) {
    return (top * n + bottom) * n + left;
  };
  for (Idx t = 0; t < n; ++t)
    for (Idx b = 0; b < n; ++b)
      for (Idx l = 0; l < n; ++l) {
        Idx r = ((l + b - t) % n + n) % n;  // t + r = l + b
        d.sq.push_back({t, b, l, r});
      }
  d.id_h = {0}; d.id_v = {0};
  for (Idx f = 0; f < n; ++f) d.id_sq_h.push_back(sq_index(f, f, 0));
  for (Idx u = 0; u < n; ++u) d.id_sq_v.push_back(sq_index(0, 0, u));
  allocate_tables(d);
  for (Idx f = 0; f < n; ++f)
    for (Idx g = 0; g < n; ++g) d.set_hcomp_h(f, g, (f + g) % n);
  for (Idx u = 0; u < n; ++u)
    for (Idx w = 0; w < n; ++w) d.set_vcomp_v(u, w, (u + w) % n);
  for (Idx a = 0; a < d.ns(); ++a)
    for (Idx b = 0; b < d.ns(); ++b) {
      const auto& A = d.sq[a];
      const auto& B = d.sq[b];
      if (A.right == B.left)
        d.set_hcomp_sq(a, b, sq_index((A.top + B.top) % n, (A.bottom + B.bottom) % n, A.left));
      if (A.bottom == B.top)
        d.set_vcomp_sq(a, b, sq_index(A.top, B.bottom, (A.left + B.left) % n));
    }
  return d;
}

// One object, identity 1-cells, and Z/n worth of globular squares composing by
// addition in both directions. Not thin for n > 1; products with it make
// law-violation fixtures expressible.
inline DoubleCategory shell_cyclic(int n) {
  if (n <= 0) throw PreconditionError("shell_cyclic: order must be positive");
  DoubleCategory d;
  d.name = "Shell(Z/" + std::to_string(n) + ")";
  d.n_objects = 1;
  d.h_src = {0}; d.h_tgt = {0};
  d.v_src = {0}; d.v_tgt = {0};
  for (Idx s = 0; s < n; ++s) d.sq.push_back({0, 0, 0, 0});
  d.id_h = {0}; d.id_v = {0};
  d.id_sq_h = {0}; d.id_sq_v = {0};
  allocate_tables(d);
  d.set_hcomp_h(0, 0, 0);
  d.set_vcomp_v(0, 0, 0);
  for (Idx s = 0; s < n; ++s)
    for (Idx t = 0; t < n; ++t) {
      d.set_hcomp_sq(s, t, (s + t) % n);
      d.set_vcomp_sq(s, t, (s + t) % n);
    }
  return d;
}

// Squares double category of the chain poset 0 < 1 < ... < k-1: 1-cells in both
// directions are pairs a <= b, squares are the commuting frames (all of them,
// one square per frame).
inline DoubleCategory square_chain(int k) {
  if (k <= 0) throw PreconditionError("square_chain: length must be positive");
  DoubleCategory d;
  d.name = "Sq(" + std::to_string(k) + "-chain)";
  d.n_objects = k;
  std::vector<std::vector<Idx>> arrow(k, std::vector<Idx>(k, kNone));
  for (Idx a = 0; a < k; ++a)
    for (Idx b = a; b < k; ++b) {
      arrow[a][b] = d.nh();
      d.h_src.push_back(a); d.h_tgt.push_back(b);
      d.v_src.push_back(a); d.v_tgt.push_back(b);
    }
  // squares: top a<=b, left a<=c, right b<=d, bottom c<=d with c<=d forced
  std::map<SquareFrame, Idx> by_frame;
  auto frame_of = [&](Idx a, Idx b, Idx c, Idx dd) {
    return SquareFrame{arrow[a][b], arrow[c][dd], arrow[a][c], arrow[b][dd]};
  };
  for (Idx a = 0; a < k; ++a)
    for (Idx b = a; b < k; ++b)
      for (Idx c = a; c < k; ++c)
        for (Idx dd = std::max(b, c); dd < k; ++dd) {
          SquareFrame fr = frame_of(a, b, c, dd);
          by_frame[fr] = d.ns();
          d.sq.push_back(fr);
        }
  for (Idx a = 0; a < k; ++a) {
    d.id_h.push_back(arrow[a][a]);
    d.id_v.push_back(arrow[a][a]);
  }
  for (Idx f = 0; f < d.nh(); ++f)
    d.id_sq_h.push_back(by_frame.at(SquareFrame{f, f, d.id_v[d.h_src[f]], d.id_v[d.h_tgt[f]]}));
  for (Idx u = 0; u < d.nv(); ++u)
    d.id_sq_v.push_back(by_frame.at(SquareFrame{d.id_h[d.v_src[u]], d.id_h[d.v_tgt[u]], u, u}));
  allocate_tables(d);
  for (Idx f = 0; f < d.nh(); ++f)
    for (Idx g = 0; g < d.nh(); ++g)
      if (d.h_tgt[f] == d.h_src[g]) d.set_hcomp_h(f, g, arrow[d.h_src[f]][d.h_tgt[g]]);
  for (Idx u = 0; u < d.nv(); ++u)
    for (Idx w = 0; w < d.nv(); ++w)
      if (d.v_tgt[u] == d.v_src[w]) d.set_vcomp_v(u, w, arrow[d.v_src[u]][d.v_tgt[w]]);
  for (Idx a = 0; a < d.ns(); ++a)
    for (Idx b = 0; b < d.ns(); ++b) {
      const auto& A = d.sq[a];
      const auto& B = d.sq[b];
      if (A.right == B.left)
        d.set_hcomp_sq(a, b, by_frame.at(SquareFrame{d.hcomp_h_raw(A.top, B.top),
                                                     d.hcomp_h_raw(A.bottom, B.bottom),
                                                     A.left, B.right}));
      if (A.bottom == B.top)
        d.set_vcomp_sq(a, b, by_frame.at(SquareFrame{A.top, B.bottom,
                                                     d.vcomp_v_raw(A.left, B.left),
                                                     d.vcomp_v_raw(A.right, B.right)}));
    }
  return d;
}

// ---------------------------------------------------------------------------
// Product of double categories, componentwise on every sort and table.

struct ProductIndexing {
  Idx objs2, nh2, nv2, ns2;
  Idx obj(Idx a, Idx b) const { return a * objs2 + b; }
  Idx h(Idx f, Idx g) const { return f * nh2 + g; }
  Idx v(Idx u, Idx w) const { return u * nv2 + w; }
  Idx s(Idx a, Idx b) const { return a * ns2 + b; }
  std::pair<Idx, Idx> obj_parts(Idx i) const { return {i / objs2, i % objs2}; }
  std::pair<Idx, Idx> h_parts(Idx i) const { return {i / nh2, i % nh2}; }
  std::pair<Idx, Idx> v_parts(Idx i) const { return {i / nv2, i % nv2}; }
  std::pair<Idx, Idx> s_parts(Idx i) const { return {i / ns2, i % ns2}; }
};

inline ProductIndexing product_indexing(const DoubleCategory& c, const DoubleCategory& d) {
  (void)c;
  return ProductIndexing{d.n_objects, d.nh(), d.nv(), d.ns()};
}

inline DoubleCategory product(const DoubleCategory& c, const DoubleCategory& d) {
  ProductIndexing ix = product_indexing(c, d);
  DoubleCategory p;
  p.name = c.name + "x" + d.name;
  p.n_objects = c.n_objects * d.n_objects;
  for (Idx f = 0; f < c.nh(); ++f)
    for (Idx g = 0; g < d.nh(); ++g) {
      p.h_src.push_back(ix.obj(c.h_src[f], d.h_src[g]));
      p.h_tgt.push_back(ix.obj(c.h_tgt[f], d.h_tgt[g]));
    }
  for (Idx u = 0; u < c.nv(); ++u)
    for (Idx w = 0; w < d.nv(); ++w) {
      p.v_src.push_back(ix.obj(c.v_src[u], d.v_src[w]));
      p.v_tgt.push_back(ix.obj(c.v_tgt[u], d.v_tgt[w]));
    }
  for (Idx a = 0; a < c.ns(); ++a)
    for (Idx b = 0; b < d.ns(); ++b) {
      p.sq.push_back({ix.h(c.sq[a].top, d.sq[b].top),
                      ix.h(c.sq[a].bottom, d.sq[b].bottom),
                      ix.v(c.sq[a].left, d.sq[b].left),
                      ix.v(c.sq[a].right, d.sq[b].right)});
    }
  for (Idx a = 0; a < c.n_objects; ++a)
    for (Idx b = 0; b < d.n_objects; ++b) {
      p.id_h.push_back(ix.h(c.id_h[a], d.id_h[b]));
      p.id_v.push_back(ix.v(c.id_v[a], d.id_v[b]));
    }
  for (Idx f = 0; f < c.nh(); ++f)
    for (Idx g = 0; g < d.nh(); ++g)
      p.id_sq_h.push_back(ix.s(c.id_sq_h[f], d.id_sq_h[g]));
  for (Idx u = 0; u < c.nv(); ++u)
    for (Idx w = 0; w < d.nv(); ++w)
      p.id_sq_v.push_back(ix.s(c.id_sq_v[u], d.id_sq_v[w]));
  allocate_tables(p);
  for (Idx f1 = 0; f1 < c.nh(); ++f1)
    for (Idx g1 = 0; g1 < c.nh(); ++g1) {
      if (c.h_tgt[f1] != c.h_src[g1]) continue;
      for (Idx f2 = 0; f2 < d.nh(); ++f2)
        for (Idx g2 = 0; g2 < d.nh(); ++g2) {
          if (d.h_tgt[f2] != d.h_src[g2]) continue;
          p.set_hcomp_h(ix.h(f1, f2), ix.h(g1, g2),
                        ix.h(c.hcomp_h_raw(f1, g1), d.hcomp_h_raw(f2, g2)));
        }
    }
  for (Idx u1 = 0; u1 < c.nv(); ++u1)
    for (Idx w1 = 0; w1 < c.nv(); ++w1) {
      if (c.v_tgt[u1] != c.v_src[w1]) continue;
      for (Idx u2 = 0; u2 < d.nv(); ++u2)
        for (Idx w2 = 0; w2 < d.nv(); ++w2) {
          if (d.v_tgt[u2] != d.v_src[w2]) continue;
          p.set_vcomp_v(ix.v(u1, u2), ix.v(w1, w2),
                        ix.v(c.vcomp_v_raw(u1, w1), d.vcomp_v_raw(u2, w2)));
        }
    }
  for (Idx a1 = 0; a1 < c.ns(); ++a1)
    for (Idx b1 = 0; b1 < c.ns(); ++b1) {
      bool hc1 = c.sq[a1].right == c.sq[b1].left;
      bool vc1 = c.sq[a1].bottom == c.sq[b1].top;
      if (!hc1 && !vc1) continue;
      for (Idx a2 = 0; a2 < d.ns(); ++a2)
        for (Idx b2 = 0; b2 < d.ns(); ++b2) {
          if (hc1 && d.sq[a2].right == d.sq[b2].left)
            p.set_hcomp_sq(ix.s(a1, a2), ix.s(b1, b2),
                           ix.s(c.hcomp_sq_raw(a1, b1), d.hcomp_sq_raw(a2, b2)));
          if (vc1 && d.sq[a2].bottom == d.sq[b2].top)
            p.set_vcomp_sq(ix.s(a1, a2), ix.s(b1, b2),
                           ix.s(c.vcomp_sq_raw(a1, b1), d.vcomp_sq_raw(a2, b2)));
        }
    }
  // pseudo overlays multiply componentwise; strict factors contribute identities
  if (c.has_pseudo_overlay() || d.has_pseudo_overlay()) {
    auto assoc1 = [&](Idx f, Idx g, Idx h) {
      auto it = c.assoc.find({f, g, h});
      return it != c.assoc.end() ? it->second
                                 : c.id_sq_h[c.hcomp_h_raw(c.hcomp_h_raw(f, g), h)];
    };
    auto assoc2 = [&](Idx f, Idx g, Idx h) {
      auto it = d.assoc.find({f, g, h});
      return it != d.assoc.end() ? it->second
                                 : d.id_sq_h[d.hcomp_h_raw(d.hcomp_h_raw(f, g), h)];
    };
    for (Idx f1 = 0; f1 < c.nh(); ++f1)
      for (Idx g1 = 0; g1 < c.nh(); ++g1)
        for (Idx h1 = 0; h1 < c.nh(); ++h1) {
          if (c.h_tgt[f1] != c.h_src[g1] || c.h_tgt[g1] != c.h_src[h1]) continue;
          for (Idx f2 = 0; f2 < d.nh(); ++f2)
            for (Idx g2 = 0; g2 < d.nh(); ++g2)
              for (Idx h2 = 0; h2 < d.nh(); ++h2) {
                if (d.h_tgt[f2] != d.h_src[g2] || d.h_tgt[g2] != d.h_src[h2]) continue;
                p.assoc[{ix.h(f1, f2), ix.h(g1, g2), ix.h(h1, h2)}] =
                    ix.s(assoc1(f1, g1, h1), assoc2(f2, g2, h2));
              }
        }
  }
  return p;
}

// Find the unique square with the given frame, if any; thin instances make
// this a workhorse for constructions.
inline std::optional<Idx> find_square(const DoubleCategory& d, const SquareFrame& fr) {
  std::optional<Idx> out;
  for (Idx a = 0; a < d.ns(); ++a) {
    if (d.sq[a] == fr) {
      if (out) return std::nullopt;  // not unique
      out = a;
    }
  }
  return out;
}

inline std::vector<Idx> squares_with_frame(const DoubleCategory& d, const SquareFrame& fr) {
  std::vector<Idx> out;
  for (Idx a = 0; a < d.ns(); ++a)
    if (d.sq[a] == fr) out.push_back(a);
  return out;
}

// Named example dispatch used by the CLI and the test fixtures.
inline DoubleCategory make_example(const std::string& name) {
  if (name == "Terminal") return terminal();
  if (name == "Disc(Z/2)") return disc_cyclic(2);
  if (name == "Disc(Z/3)") return disc_cyclic(3);
  if (name == "Q(Z/2)") return quintet_cyclic(2);
  if (name == "Q(Z/3)") return quintet_cyclic(3);
  if (name == "Shell(Z/2)") return shell_cyclic(2);
  if (name == "Sq(2-chain)") return square_chain(2);
  if (name == "Sq(3-chain)") return square_chain(3);
  throw PreconditionError("make_example: unknown example '" + name + "'");
}

}  // namespace dblcat
