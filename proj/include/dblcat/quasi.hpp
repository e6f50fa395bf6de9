#pragma once

#include "dblcat/monoidal_check.hpp"

namespace dblcat {

// A pseudodouble quasi-functor H: B x A -> C presented by its partial functor
// families and the four 2-cell families of the appendix characterization.
// Family indexing: (k,K) by k (hcell of Bcat) and K (hcell of Acat), etc.
struct QuasiFunctor {
  DcPtr Acat, Bcat, Ccat;
  std::vector<LaxDoubleFunctor> minusA;  // per object A of Acat: (-,A): Bcat -> Ccat
  std::vector<LaxDoubleFunctor> Bminus;  // per object B of Bcat: (B,-): Acat -> Ccat
  std::vector<Idx> kK;  // [k * nhA + K]: globular
  std::vector<Idx> uK;  // [u * nhA + K]
  std::vector<Idx> kU;  // [k * nvA + U]
  std::vector<Idx> uU;  // [u * nvA + U]: vertically globular

  Idx at(Idx B, Idx A) const { return minusA[A].on_obj(B); }
  Idx kA(Idx k, Idx A) const { return minusA[A].on_h(k); }
  Idx BK(Idx B, Idx K) const { return Bminus[B].on_h(K); }
  Idx uA(Idx u, Idx A) const { return minusA[A].on_v(u); }
  Idx BU(Idx B, Idx U) const { return Bminus[B].on_v(U); }

  Idx kK_at(Idx k, Idx K) const { return kK[k * Acat->nh() + K]; }
  Idx uK_at(Idx u, Idx K) const { return uK[u * Acat->nh() + K]; }
  Idx kU_at(Idx k, Idx U) const { return kU[k * Acat->nv() + U]; }
  Idx uU_at(Idx u, Idx U) const { return uU[u * Acat->nv() + U]; }
};

// The twenty axioms, named as in the characterization. Structural problems
// throw; axiom failures are reported by name.
inline ValidationReport check_quasi_functor(const QuasiFunctor& q, int max_per_law = 10) {
  const auto& A = *q.Acat;
  const auto& B = *q.Bcat;
  const auto& C = *q.Ccat;
  if (q.minusA.size() != static_cast<size_t>(A.n_objects) ||
      q.Bminus.size() != static_cast<size_t>(B.n_objects))
    throw StructuralError("quasi functor: partial functor families wrongly sized");
  for (Idx a = 0; a < A.n_objects; ++a)
    for (Idx b = 0; b < B.n_objects; ++b)
      if (q.minusA[a].on_obj(b) != q.Bminus[b].on_obj(a))
        throw StructuralError("quasi functor: (B,A) disagreement at (" + std::to_string(b) +
                              "," + std::to_string(a) + ")");
  if (q.kK.size() != static_cast<size_t>(B.nh()) * A.nh() ||
      q.uK.size() != static_cast<size_t>(B.nv()) * A.nh() ||
      q.kU.size() != static_cast<size_t>(B.nh()) * A.nv() ||
      q.uU.size() != static_cast<size_t>(B.nv()) * A.nv())
    throw StructuralError("quasi functor: 2-cell families wrongly sized");

  // frames
  for (Idx k = 0; k < B.nh(); ++k)
    for (Idx K = 0; K < A.nh(); ++K) {
      Idx top = C.hcomp_h(q.kA(k, A.h_src[K]), q.BK(B.h_tgt[k], K));
      Idx bot = C.hcomp_h(q.BK(B.h_src[k], K), q.kA(k, A.h_tgt[K]));
      if (!(C.sq[q.kK_at(k, K)] ==
            SquareFrame{top, bot, C.id_v[C.h_src[top]], C.id_v[C.h_tgt[top]]}))
        throw StructuralError("quasi functor: (k,K) cell has wrong frame at (" +
                              std::to_string(k) + "," + std::to_string(K) + ")");
    }
  for (Idx u = 0; u < B.nv(); ++u)
    for (Idx K = 0; K < A.nh(); ++K) {
      SquareFrame want{q.BK(B.v_src[u], K), q.BK(B.v_tgt[u], K), q.uA(u, A.h_src[K]),
                       q.uA(u, A.h_tgt[K])};
      if (!(C.sq[q.uK_at(u, K)] == want))
        throw StructuralError("quasi functor: (u,K) cell has wrong frame");
    }
  for (Idx k = 0; k < B.nh(); ++k)
    for (Idx U = 0; U < A.nv(); ++U) {
      SquareFrame want{q.kA(k, A.v_src[U]), q.kA(k, A.v_tgt[U]), q.BU(B.h_src[k], U),
                       q.BU(B.h_tgt[k], U)};
      if (!(C.sq[q.kU_at(k, U)] == want))
        throw StructuralError("quasi functor: (k,U) cell has wrong frame");
    }
  for (Idx u = 0; u < B.nv(); ++u)
    for (Idx U = 0; U < A.nv(); ++U) {
      Idx lft = C.vcomp_v(q.BU(B.v_src[u], U), q.uA(u, A.v_tgt[U]));
      Idx rgt = C.vcomp_v(q.uA(u, A.v_src[U]), q.BU(B.v_tgt[u], U));
      SquareFrame want{C.id_h[C.v_src[lft]], C.id_h[C.v_tgt[lft]], lft, rgt};
      if (!(C.sq[q.uU_at(u, U)] == want))
        throw StructuralError("quasi functor: (u,U) cell has wrong frame");
    }

  ValidationReport rep;
  rep.max_per_law = max_per_law;
  auto sh = [&](Idx i) { return std::to_string(i); };
  auto eq = [&](const char* law, const std::string& at, Idx lhs, Idx rhs) {
    if (lhs != rhs) rep.add(law, at, sh(lhs), sh(rhs));
  };

  for (Idx a = 0; a < A.n_objects; ++a) rep.merge(check_lax_functor(q.minusA[a]), "(-,A)");
  for (Idx b = 0; b < B.n_objects; ++b) rep.merge(check_lax_functor(q.Bminus[b]), "(B,-)");

  // degenerate-argument axioms
  for (Idx B0 = 0; B0 < B.n_objects; ++B0)
    for (Idx K = 0; K < A.nh(); ++K) {
      Idx As = A.h_src[K], At = A.h_tgt[K];
      Idx one = B.id_h[B0];
      eq("(1_B,K)", "(" + sh(B0) + "," + sh(K) + ")",
         C.vcomp_sq(C.hcomp_sq(q.minusA[As].unitor(B0), C.id_sq_h[q.BK(B0, K)]),
                    q.kK_at(one, K)),
         C.hcomp_sq(C.id_sq_h[q.BK(B0, K)], q.minusA[At].unitor(B0)));
    }
  for (Idx k = 0; k < B.nh(); ++k)
    for (Idx A0 = 0; A0 < A.n_objects; ++A0) {
      Idx Bs = B.h_src[k], Bt = B.h_tgt[k];
      Idx one = A.id_h[A0];
      eq("(k,1_A)", "(" + sh(k) + "," + sh(A0) + ")",
         C.vcomp_sq(C.hcomp_sq(C.id_sq_h[q.kA(k, A0)], q.Bminus[Bt].unitor(A0)),
                    q.kK_at(k, one)),
         C.hcomp_sq(q.Bminus[Bs].unitor(A0), C.id_sq_h[q.kA(k, A0)]));
    }
  for (Idx u = 0; u < B.nv(); ++u)
    for (Idx A0 = 0; A0 < A.n_objects; ++A0) {
      Idx Bs = B.v_src[u], Bt = B.v_tgt[u];
      eq("(u,1_A)", "(" + sh(u) + "," + sh(A0) + ")",
         C.vcomp_sq(C.id_sq_v[q.uA(u, A0)], q.Bminus[Bt].unitor(A0)),
         C.vcomp_sq(q.Bminus[Bs].unitor(A0), q.uK_at(u, A.id_h[A0])));
    }
  for (Idx B0 = 0; B0 < B.n_objects; ++B0)
    for (Idx U = 0; U < A.nv(); ++U) {
      Idx As = A.v_src[U], At = A.v_tgt[U];
      eq("(1_B,U)", "(" + sh(B0) + "," + sh(U) + ")",
         C.vcomp_sq(q.minusA[As].unitor(B0), q.kU_at(B.id_h[B0], U)),
         C.vcomp_sq(C.id_sq_v[q.BU(B0, U)], q.minusA[At].unitor(B0)));
    }
  for (Idx B0 = 0; B0 < B.n_objects; ++B0)
    for (Idx K = 0; K < A.nh(); ++K)
      eq("(1^B,K)", "(" + sh(B0) + "," + sh(K) + ")", q.uK_at(B.id_v[B0], K),
         C.id_sq_h[q.BK(B0, K)]);
  for (Idx k = 0; k < B.nh(); ++k)
    for (Idx A0 = 0; A0 < A.n_objects; ++A0)
      eq("(k,1^A)", "(" + sh(k) + "," + sh(A0) + ")", q.kU_at(k, A.id_v[A0]),
         C.id_sq_h[q.kA(k, A0)]);
  for (Idx B0 = 0; B0 < B.n_objects; ++B0)
    for (Idx U = 0; U < A.nv(); ++U)
      eq("(1^B,U)", "(" + sh(B0) + "," + sh(U) + ")", q.uU_at(B.id_v[B0], U),
         C.id_sq_v[q.BU(B0, U)]);
  for (Idx u = 0; u < B.nv(); ++u)
    for (Idx A0 = 0; A0 < A.n_objects; ++A0)
      eq("(u,1^A)", "(" + sh(u) + "," + sh(A0) + ")", q.uU_at(u, A.id_v[A0]),
         C.id_sq_v[q.uA(u, A0)]);

  // composition axioms
  for (Idx k = 0; k < B.nh(); ++k)
    for (Idx kp = 0; kp < B.nh(); ++kp) {
      if (B.h_tgt[k] != B.h_src[kp]) continue;
      Idx kk = B.hcomp_h_raw(k, kp);
      for (Idx K = 0; K < A.nh(); ++K) {
        Idx As = A.h_src[K], At = A.h_tgt[K];
        Idx Bt2 = B.h_tgt[kp];
        eq("(k'k,K)", "(" + sh(k) + "," + sh(kp) + "," + sh(K) + ")",
           C.vcomp_sq(C.hcomp_sq(q.minusA[As].compositor(k, kp), C.id_sq_h[q.BK(Bt2, K)]),
                      q.kK_at(kk, K)),
           C.vcomp_sq_many(
               {C.hcomp_sq(C.id_sq_h[q.kA(k, As)], q.kK_at(kp, K)),
                C.hcomp_sq(q.kK_at(k, K), C.id_sq_h[q.kA(kp, At)]),
                C.hcomp_sq(C.id_sq_h[q.BK(B.h_src[k], K)], q.minusA[At].compositor(k, kp))}));
      }
    }
  for (Idx k = 0; k < B.nh(); ++k)
    for (Idx K = 0; K < A.nh(); ++K)
      for (Idx Kp = 0; Kp < A.nh(); ++Kp) {
        if (A.h_tgt[K] != A.h_src[Kp]) continue;
        Idx KK = A.hcomp_h_raw(K, Kp);
        Idx Bs = B.h_src[k], Bt = B.h_tgt[k];
        eq("(k,K'K)", "(" + sh(k) + "," + sh(K) + "," + sh(Kp) + ")",
           C.vcomp_sq(C.hcomp_sq(C.id_sq_h[q.kA(k, A.h_src[K])], q.Bminus[Bt].compositor(K, Kp)),
                      q.kK_at(k, KK)),
           C.vcomp_sq_many(
               {C.hcomp_sq(q.kK_at(k, K), C.id_sq_h[q.BK(Bt, Kp)]),
                C.hcomp_sq(C.id_sq_h[q.BK(Bs, K)], q.kK_at(k, Kp)),
                C.hcomp_sq(q.Bminus[Bs].compositor(K, Kp), C.id_sq_h[q.kA(k, A.h_tgt[Kp])])}));
      }
  for (Idx u = 0; u < B.nv(); ++u)
    for (Idx K = 0; K < A.nh(); ++K)
      for (Idx Kp = 0; Kp < A.nh(); ++Kp) {
        if (A.h_tgt[K] != A.h_src[Kp]) continue;
        Idx KK = A.hcomp_h_raw(K, Kp);
        Idx Bs = B.v_src[u], Bt = B.v_tgt[u];
        eq("(u,K'K)", "(" + sh(u) + "," + sh(K) + "," + sh(Kp) + ")",
           C.vcomp_sq(q.Bminus[Bs].compositor(K, Kp), q.uK_at(u, KK)),
           C.vcomp_sq(C.hcomp_sq(q.uK_at(u, K), q.uK_at(u, Kp)),
                      q.Bminus[Bt].compositor(K, Kp)));
      }
  for (Idx k = 0; k < B.nh(); ++k)
    for (Idx kp = 0; kp < B.nh(); ++kp) {
      if (B.h_tgt[k] != B.h_src[kp]) continue;
      Idx kk = B.hcomp_h_raw(k, kp);
      for (Idx U = 0; U < A.nv(); ++U) {
        Idx As = A.v_src[U], At = A.v_tgt[U];
        eq("(k'k,U)", "(" + sh(k) + "," + sh(kp) + "," + sh(U) + ")",
           C.vcomp_sq(C.hcomp_sq(q.kU_at(k, U), q.kU_at(kp, U)),
                      q.minusA[At].compositor(k, kp)),
           C.vcomp_sq(q.minusA[As].compositor(k, kp), q.kU_at(kk, U)));
      }
    }
  for (Idx u = 0; u < B.nv(); ++u)
    for (Idx up = 0; up < B.nv(); ++up) {
      if (B.v_tgt[u] != B.v_src[up]) continue;
      Idx uu = B.vcomp_v_raw(u, up);
      for (Idx K = 0; K < A.nh(); ++K)
        eq("(u/u',K)", "(" + sh(u) + "," + sh(up) + "," + sh(K) + ")", q.uK_at(uu, K),
           C.vcomp_sq(q.uK_at(u, K), q.uK_at(up, K)));
    }
  for (Idx k = 0; k < B.nh(); ++k)
    for (Idx U = 0; U < A.nv(); ++U)
      for (Idx Up = 0; Up < A.nv(); ++Up) {
        if (A.v_tgt[U] != A.v_src[Up]) continue;
        Idx UU = A.vcomp_v_raw(U, Up);
        eq("(k,U/U')", "(" + sh(k) + "," + sh(U) + "," + sh(Up) + ")", q.kU_at(k, UU),
           C.vcomp_sq(q.kU_at(k, U), q.kU_at(k, Up)));
      }
  for (Idx u = 0; u < B.nv(); ++u)
    for (Idx U = 0; U < A.nv(); ++U)
      for (Idx Up = 0; Up < A.nv(); ++Up) {
        if (A.v_tgt[U] != A.v_src[Up]) continue;
        Idx UU = A.vcomp_v_raw(U, Up);
        Idx Bs = B.v_src[u], Bt = B.v_tgt[u];
        eq("(u,U/U')", "(" + sh(u) + "," + sh(U) + "," + sh(Up) + ")", q.uU_at(u, UU),
           C.hcomp_sq(C.vcomp_sq(C.id_sq_v[q.BU(Bs, U)], q.uU_at(u, Up)),
                      C.vcomp_sq(q.uU_at(u, U), C.id_sq_v[q.BU(Bt, Up)])));
      }
  for (Idx u = 0; u < B.nv(); ++u)
    for (Idx up = 0; up < B.nv(); ++up) {
      if (B.v_tgt[u] != B.v_src[up]) continue;
      Idx uu = B.vcomp_v_raw(u, up);
      for (Idx U = 0; U < A.nv(); ++U) {
        Idx As = A.v_src[U], At = A.v_tgt[U];
        eq("(u/u',U)", "(" + sh(u) + "," + sh(up) + "," + sh(U) + ")", q.uU_at(uu, U),
           C.hcomp_sq(C.vcomp_sq(q.uU_at(u, U), C.id_sq_v[q.uA(up, At)]),
                      C.vcomp_sq(C.id_sq_v[q.uA(u, As)], q.uU_at(up, U))));
      }
    }

  // naturality axioms against arbitrary squares
  for (Idx w = 0; w < B.ns(); ++w) {
    Idx k = B.sq[w].top, l = B.sq[w].bottom, u = B.sq[w].left, v = B.sq[w].right;
    for (Idx K = 0; K < A.nh(); ++K) {
      Idx As = A.h_src[K], At = A.h_tgt[K];
      eq("(k,K)-l-nat", "(" + sh(w) + "," + sh(K) + ")",
         C.vcomp_sq(q.kK_at(k, K), C.hcomp_sq(q.uK_at(u, K), q.minusA[At].on_sq(w))),
         C.vcomp_sq(C.hcomp_sq(q.minusA[As].on_sq(w), q.uK_at(v, K)), q.kK_at(l, K)));
    }
    for (Idx U = 0; U < A.nv(); ++U) {
      Idx As = A.v_src[U], At = A.v_tgt[U];
      eq("(u,U)-l-nat", "(" + sh(w) + "," + sh(U) + ")",
         C.hcomp_sq(q.uU_at(u, U), C.vcomp_sq(q.minusA[As].on_sq(w), q.kU_at(l, U))),
         C.hcomp_sq(C.vcomp_sq(q.kU_at(k, U), q.minusA[At].on_sq(w)), q.uU_at(v, U)));
    }
  }
  for (Idx z = 0; z < A.ns(); ++z) {
    Idx K = A.sq[z].top, L = A.sq[z].bottom, U = A.sq[z].left, V = A.sq[z].right;
    for (Idx k = 0; k < B.nh(); ++k) {
      Idx Bs = B.h_src[k], Bt = B.h_tgt[k];
      eq("(k,K)-r-nat", "(" + sh(k) + "," + sh(z) + ")",
         C.vcomp_sq(q.kK_at(k, K), C.hcomp_sq(q.Bminus[Bs].on_sq(z), q.kU_at(k, V))),
         C.vcomp_sq(C.hcomp_sq(q.kU_at(k, U), q.Bminus[Bt].on_sq(z)), q.kK_at(k, L)));
    }
    for (Idx u = 0; u < B.nv(); ++u) {
      Idx Bs = B.v_src[u], Bt = B.v_tgt[u];
      eq("(u,U)-r-nat", "(" + sh(u) + "," + sh(z) + ")",
         C.hcomp_sq(q.uU_at(u, U), C.vcomp_sq(q.uK_at(u, K), q.Bminus[Bt].on_sq(z))),
         C.hcomp_sq(C.vcomp_sq(q.Bminus[Bs].on_sq(z), q.uK_at(u, L)), q.uU_at(u, V)));
    }
  }
  return rep;
}

// The canonical list of the twenty axiom names, in checker order.
inline const std::vector<std::string>& quasi_axiom_names() {
  static const std::vector<std::string> names = {
      "(1_B,K)", "(k,1_A)", "(u,1_A)", "(1_B,U)", "(1^B,K)", "(k,1^A)", "(1^B,U)",
      "(u,1^A)", "(k'k,K)", "(k,K'K)", "(u,K'K)", "(k'k,U)", "(u/u',K)", "(k,U/U')",
      "(u,U/U')", "(u/u',U)", "(k,K)-l-nat", "(k,K)-r-nat", "(u,U)-l-nat", "(u,U)-r-nat"};
  return names;
}

// The tensor of a horizontally monoidal double category as a quasi-functor,
// with the canonical (identity or unique framed) interchange cells.
inline QuasiFunctor tensor_quasi_functor(const HorizontalMonoidalStructure& s) {
  const auto& d = *s.D;
  QuasiFunctor q;
  q.Acat = s.D;
  q.Bcat = s.D;
  q.Ccat = s.D;
  for (Idx a = 0; a < d.n_objects; ++a) {
    LaxDoubleFunctor f = unit_right_functor(s.ten, s.D, a);
    f.name = "(-," + std::to_string(a) + ")";
    f.variant = FunctorVariant::pseudo;
    q.minusA.push_back(std::move(f));
    LaxDoubleFunctor g = unit_left_functor(s.ten, s.D, a);
    g.name = "(" + std::to_string(a) + ",-)";
    g.variant = FunctorVariant::pseudo;
    q.Bminus.push_back(std::move(g));
  }
  q.kK.assign(static_cast<size_t>(d.nh()) * d.nh(), kNone);
  q.uK.assign(static_cast<size_t>(d.nv()) * d.nh(), kNone);
  q.kU.assign(static_cast<size_t>(d.nh()) * d.nv(), kNone);
  q.uU.assign(static_cast<size_t>(d.nv()) * d.nv(), kNone);
  for (Idx k = 0; k < d.nh(); ++k)
    for (Idx K = 0; K < d.nh(); ++K) {
      Idx top = d.hcomp_h(q.kA(k, d.h_src[K]), q.BK(d.h_tgt[k], K));
      Idx bot = d.hcomp_h(q.BK(d.h_src[k], K), q.kA(k, d.h_tgt[K]));
      q.kK[k * d.nh() + K] = globular_cell_for(d, top, bot, "tensor quasi (k,K)");
    }
  // the mixed families are the tensor images of identity squares
  for (Idx u = 0; u < d.nv(); ++u)
    for (Idx K = 0; K < d.nh(); ++K)
      q.uK[u * d.nh() + K] = s.ten.sqr(d.id_sq_v[u], d.id_sq_h[K]);
  for (Idx k = 0; k < d.nh(); ++k)
    for (Idx U = 0; U < d.nv(); ++U)
      q.kU[k * d.nv() + U] = s.ten.sqr(d.id_sq_h[k], d.id_sq_v[U]);
  for (Idx u = 0; u < d.nv(); ++u)
    for (Idx U = 0; U < d.nv(); ++U) {
      Idx lft = d.vcomp_v(q.BU(d.v_src[u], U), q.uA(u, d.v_tgt[U]));
      Idx rgt = d.vcomp_v(q.uA(u, d.v_src[U]), q.BU(d.v_tgt[u], U));
      Idx cand = s.ten.sqr(d.id_sq_v[u], d.id_sq_v[U]);
      if (d.sq[cand] == SquareFrame{d.id_h[d.v_src[lft]], d.id_h[d.v_tgt[lft]], lft, rgt}) {
        q.uU[u * d.nv() + U] = cand;
      } else if (lft == rgt) {
        q.uU[u * d.nv() + U] = d.id_sq_v[lft];
      } else {
        auto w = find_square(d, SquareFrame{d.id_h[d.v_src[lft]], d.id_h[d.v_tgt[lft]], lft, rgt});
        if (!w) throw PreconditionError("tensor quasi (u,U): no canonical square");
        q.uU[u * d.nv() + U] = *w;
      }
    }
  return q;
}

}  // namespace dblcat
