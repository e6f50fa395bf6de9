#pragma once

#include "dblcat/quasi.hpp"

namespace dblcat {

// A pure-centrality certificate for a binoidal double category: the binoidal
// functor families plus independently stored left- and right-centrality cell
// families whose coincidence the theorem demands. The shared layout matches
// the quasi-functor families, so the two notions convert by rewiring.
struct PureCentralityCertificate {
  DcPtr B;
  std::vector<LaxDoubleFunctor> lfun;  // A |-> (A /\ -), per object
  std::vector<LaxDoubleFunctor> rfun;  // B |-> (- \/ B), per object
  // left-centrality data (components of k/\- and u/\-)
  std::vector<Idx> kK_l, uK_l, kU_l, uU_l;
  // right-centrality data (components of -\/K and -\/U)
  std::vector<Idx> kK_r, uK_r, kU_r, uU_r;
};

inline QuasiFunctor certificate_to_quasi(const PureCentralityCertificate& c) {
  QuasiFunctor q;
  q.Acat = c.B;
  q.Bcat = c.B;
  q.Ccat = c.B;
  q.minusA = c.rfun;
  q.Bminus = c.lfun;
  q.kK = c.kK_l;
  q.uK = c.uK_l;
  q.kU = c.kU_l;
  q.uU = c.uU_l;
  return q;
}

inline PureCentralityCertificate quasi_to_binoidal(const QuasiFunctor& q) {
  PureCentralityCertificate c;
  c.B = q.Ccat;
  c.lfun = q.Bminus;
  c.rfun = q.minusA;
  c.kK_l = q.kK;
  c.uK_l = q.uK;
  c.kU_l = q.kU;
  c.uU_l = q.uU;
  c.kK_r = q.kK;
  c.uK_r = q.uK;
  c.kU_r = q.kU;
  c.uU_r = q.uU;
  return c;
}

inline QuasiFunctor binoidal_to_quasi(const PureCentralityCertificate& c) {
  return certificate_to_quasi(c);
}

// Assemble the centrality transformations from a certificate and run the full
// battery: the quasi axioms, the transformation checkers for every cell, and
// the coincidence equalities of the characterization.
inline ValidationReport check_pure_centrality(const PureCentralityCertificate& c,
                                              int max_per_law = 10) {
  ValidationReport rep;
  rep.max_per_law = max_per_law;
  const auto& d = *c.B;
  auto sh = [&](Idx i) { return std::to_string(i); };

  // coincidences (items ii-v): left data and right data must agree cell-wise
  auto cmp = [&](const char* law, const std::vector<Idx>& l, const std::vector<Idx>& r) {
    if (l.size() != r.size()) throw StructuralError("certificate family tables differ in size");
    for (size_t i = 0; i < l.size(); ++i)
      if (l[i] != r[i])
        rep.add(law, "entry " + std::to_string(i), sh(l[i]), sh(r[i]));
  };
  cmp("coincidence-3ii", c.kK_l, c.kK_r);
  cmp("coincidence-3iii", c.uU_l, c.uU_r);
  cmp("coincidence-3iv", c.uK_l, c.uK_r);
  cmp("coincidence-3v", c.kU_l, c.kU_r);

  QuasiFunctor q = certificate_to_quasi(c);
  rep.merge(check_quasi_functor(q, max_per_law), "quasi");
  if (!rep.pass) return rep;

  // assembled centrality transformations pass the transformation checkers
  for (Idx k = 0; k < d.nh(); ++k) {
    HorizontalTransformation t;
    t.name = "central(" + sh(k) + ")";
    t.variant = HVariant::pseudo;
    t.delta_oplax = false;  // lax orientation, cells are the (k,K) family
    t.F = c.lfun[d.h_src[k]];
    t.G = c.lfun[d.h_tgt[k]];
    t.at_obj.resize(d.n_objects);
    for (Idx A = 0; A < d.n_objects; ++A) t.at_obj[A] = q.kA(k, A);
    t.at_v.resize(d.nv());
    for (Idx U = 0; U < d.nv(); ++U) t.at_v[U] = q.kU_at(k, U);
    t.delta.resize(d.nh());
    for (Idx K = 0; K < d.nh(); ++K) t.delta[K] = q.kK_at(k, K);
    rep.merge(check_horizontal_transformation(t, max_per_law), "left-central " + sh(k));
  }
  for (Idx K = 0; K < d.nh(); ++K) {
    HorizontalTransformation t;
    t.name = "central-r(" + sh(K) + ")";
    t.variant = HVariant::pseudo;
    t.delta_oplax = true;  // oplax orientation, same cells read the other way
    t.F = c.rfun[d.h_src[K]];
    t.G = c.rfun[d.h_tgt[K]];
    t.at_obj.resize(d.n_objects);
    for (Idx B0 = 0; B0 < d.n_objects; ++B0) t.at_obj[B0] = q.BK(B0, K);
    t.at_v.resize(d.nv());
    for (Idx u = 0; u < d.nv(); ++u) t.at_v[u] = q.uK_at(u, K);
    t.delta.resize(d.nh());
    for (Idx k = 0; k < d.nh(); ++k) t.delta[k] = q.kK_at(k, K);
    rep.merge(check_horizontal_transformation(t, max_per_law), "right-central " + sh(K));
  }
  for (Idx u = 0; u < d.nv(); ++u) {
    VerticalTransformation t;
    t.name = "vcentral(" + sh(u) + ")";
    t.variant = VVariant::pseudo;
    t.au_lax = false;  // oplax orientation of the (u,U) cells
    t.F = c.lfun[d.v_src[u]];
    t.G = c.lfun[d.v_tgt[u]];
    t.at_obj.resize(d.n_objects);
    for (Idx A = 0; A < d.n_objects; ++A) t.at_obj[A] = q.uA(u, A);
    t.at_h.resize(d.nh());
    for (Idx K = 0; K < d.nh(); ++K) t.at_h[K] = q.uK_at(u, K);
    t.at_v.resize(d.nv());
    for (Idx U = 0; U < d.nv(); ++U) t.at_v[U] = q.uU_at(u, U);
    rep.merge(check_vertical_transformation(t, max_per_law), "left-vcentral " + sh(u));
  }
  for (Idx U = 0; U < d.nv(); ++U) {
    VerticalTransformation t;
    t.name = "vcentral-r(" + sh(U) + ")";
    t.variant = VVariant::pseudo;
    t.au_lax = true;  // lax orientation of the same cells
    t.F = c.rfun[d.v_src[U]];
    t.G = c.rfun[d.v_tgt[U]];
    t.at_obj.resize(d.n_objects);
    for (Idx B0 = 0; B0 < d.n_objects; ++B0) t.at_obj[B0] = q.BU(B0, U);
    t.at_h.resize(d.nh());
    for (Idx k = 0; k < d.nh(); ++k) t.at_h[k] = q.kU_at(k, U);
    t.at_v.resize(d.nv());
    for (Idx u = 0; u < d.nv(); ++u) t.at_v[u] = q.uU_at(u, U);
    rep.merge(check_vertical_transformation(t, max_per_law), "right-vcentral " + sh(U));
  }
  return rep;
}

}  // namespace dblcat
