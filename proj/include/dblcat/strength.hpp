#pragma once

#include "dblcat/action_structures.hpp"

namespace dblcat {

enum class StrengthSide : std::uint8_t { left, right, both };

// Left strength t^M_{A,B}: A(x)(M(x)B) -> M(x)(A(x)B) and right strength
// s^M_{A,B}: (M(x)A)(x)B -> M(x)(A(x)B), as horizontal transformations over
// (M x D) x D, with structure modifications stored as component tables.
struct StrengthBundle {
  Orientation orientation = Orientation::horizontal;
  StrengthSide side = StrengthSide::both;
  ActionBundle bundle;  // carries M, D, F, beta, nu, p/l/m-tilde and braiding

  DcPtr prodMDD;         // (M x D) x D, cells only when large
  ProductIndexing ixMDD; // pair = (M x D index, D index)

  std::optional<HorizontalTransformation> t_h, s_h;
  std::optional<VerticalTransformation> t_v, s_v;

  // modification component tables (globular squares in D)
  std::vector<Idx> x_, y_, z_, w_;      // left:  x[M,A], y[M,A,B,C], z[A,B], w[M,N,A,B]
  std::vector<Idx> xp_, yp_, zp_, wp_;  // right-side mirrors
  std::vector<Idx> q_;                  // q[M,A,B,C]
  std::vector<Idx> c_;                  // c[M,N,A,B]
  bool has_q = false, has_c = false;

  Idx nM() const { return bundle.M().n_objects; }
  Idx nD() const { return bundle.D->n_objects; }

  Idx t3(Idx m, Idx a, Idx b) const { return ixMDD.obj(bundle.ixMD.obj(m, a), b); }
  Idx t3h(Idx m, Idx f, Idx g) const { return ixMDD.h(bundle.ixMD.h(m, f), g); }
  Idx t3v(Idx m, Idx u, Idx w) const { return ixMDD.v(bundle.ixMD.v(m, u), w); }

  Idx t_at(Idx m, Idx a, Idx b) const { return t_h ? t_h->at_obj[t3(m, a, b)] : t_v->at_obj[t3(m, a, b)]; }
  Idx s_at(Idx m, Idx a, Idx b) const { return s_h ? s_h->at_obj[t3(m, a, b)] : s_v->at_obj[t3(m, a, b)]; }

  Idx ix_ma(Idx m, Idx a) const { return m * nD() + a; }
  Idx ix_ab(Idx a, Idx b) const { return a * nD() + b; }
  Idx ix_mabc(Idx m, Idx a, Idx b, Idx c) const { return ((m * nD() + a) * nD() + b) * nD() + c; }
  Idx ix_mnab(Idx m, Idx n, Idx a, Idx b) const { return ((m * nM() + n) * nD() + a) * nD() + b; }
};

inline const TensorData& target_tensor(const ActionBundle& a) {
  if (a.Dh) return a.Dh->ten;
  if (a.Dv) return a.Dv->ten;
  throw PreconditionError("strength boundaries need a monoidal structure on the target");
}

// Boundary functors of a left strength over (M x D) x D.
inline std::pair<LaxDoubleFunctor, LaxDoubleFunctor> left_strength_boundaries(
    const StrengthBundle& st) {
  const auto& a = st.bundle;
  const auto& d = *a.D;
  const TensorData& Dten = target_tensor(a);
  LaxDoubleFunctor S, T;
  S.name = "A(x)(M(x)B)";
  T.name = "M(x)(A(x)B)";
  S.src = T.src = st.prodMDD;
  S.dst = T.dst = a.D;
  auto build = [&](auto obj, auto hc, auto vc, auto sq) {
    S.obj_map.resize(st.prodMDD->n_objects);
    T.obj_map.resize(st.prodMDD->n_objects);
    for (Idx ma = 0; ma < a.prodMD->n_objects; ++ma)
      for (Idx b = 0; b < d.n_objects; ++b) {
        auto [m, aa] = a.ixMD.obj_parts(ma);
        auto [so, to] = obj(m, aa, b);
        S.obj_map[st.ixMDD.obj(ma, b)] = so;
        T.obj_map[st.ixMDD.obj(ma, b)] = to;
      }
    S.h_map.resize(st.prodMDD->nh());
    T.h_map.resize(st.prodMDD->nh());
    for (Idx ma = 0; ma < a.prodMD->nh(); ++ma)
      for (Idx b = 0; b < d.nh(); ++b) {
        auto [m, aa] = a.ixMD.h_parts(ma);
        auto [so, to] = hc(m, aa, b);
        S.h_map[st.ixMDD.h(ma, b)] = so;
        T.h_map[st.ixMDD.h(ma, b)] = to;
      }
    S.v_map.resize(st.prodMDD->nv());
    T.v_map.resize(st.prodMDD->nv());
    for (Idx ma = 0; ma < a.prodMD->nv(); ++ma)
      for (Idx b = 0; b < d.nv(); ++b) {
        auto [m, aa] = a.ixMD.v_parts(ma);
        auto [so, to] = vc(m, aa, b);
        S.v_map[st.ixMDD.v(ma, b)] = so;
        T.v_map[st.ixMDD.v(ma, b)] = to;
      }
    S.sq_map.resize(st.prodMDD->ns());
    T.sq_map.resize(st.prodMDD->ns());
    for (Idx ma = 0; ma < a.prodMD->ns(); ++ma)
      for (Idx b = 0; b < d.ns(); ++b) {
        auto [m, aa] = a.ixMD.s_parts(ma);
        auto [so, to] = sq(m, aa, b);
        S.sq_map[st.ixMDD.s(ma, b)] = so;
        T.sq_map[st.ixMDD.s(ma, b)] = to;
      }
  };
  build(
      [&](Idx m, Idx aa, Idx b) {
        return std::pair<Idx, Idx>{Dten.obj(aa, a.act_obj(m, b)),
                                   a.act_obj(m, Dten.obj(aa, b))};
      },
      [&](Idx m, Idx f, Idx g) {
        return std::pair<Idx, Idx>{Dten.h(f, a.act_h(m, g)), a.act_h(m, Dten.h(f, g))};
      },
      [&](Idx m, Idx u, Idx w) {
        return std::pair<Idx, Idx>{Dten.v(u, a.act_v(m, w)), a.act_v(m, Dten.v(u, w))};
      },
      [&](Idx m, Idx x, Idx y) {
        return std::pair<Idx, Idx>{Dten.sqr(x, a.act_sq(m, y)), a.act_sq(m, Dten.sqr(x, y))};
      });
  // note: the D-slot order in the pair is (A in the M-pair slot? no) — the
  // (M x D) x D indexing carries (M, A) in the pair and B in the tail; the
  // source composite is A (x) (M (x) B).
  return {S, T};
}

inline std::pair<LaxDoubleFunctor, LaxDoubleFunctor> right_strength_boundaries(
    const StrengthBundle& st) {
  const auto& a = st.bundle;
  const auto& d = *a.D;
  const TensorData& Dten = target_tensor(a);
  LaxDoubleFunctor S, T;
  S.name = "(M(x)A)(x)B";
  T.name = "M(x)(A(x)B)";
  S.src = T.src = st.prodMDD;
  S.dst = T.dst = a.D;
  S.obj_map.resize(st.prodMDD->n_objects);
  T.obj_map.resize(st.prodMDD->n_objects);
  for (Idx ma = 0; ma < a.prodMD->n_objects; ++ma)
    for (Idx b = 0; b < d.n_objects; ++b) {
      auto [m, aa] = a.ixMD.obj_parts(ma);
      S.obj_map[st.ixMDD.obj(ma, b)] = Dten.obj(a.act_obj(m, aa), b);
      T.obj_map[st.ixMDD.obj(ma, b)] = a.act_obj(m, Dten.obj(aa, b));
    }
  S.h_map.resize(st.prodMDD->nh());
  T.h_map.resize(st.prodMDD->nh());
  for (Idx ma = 0; ma < a.prodMD->nh(); ++ma)
    for (Idx b = 0; b < d.nh(); ++b) {
      auto [m, f] = a.ixMD.h_parts(ma);
      S.h_map[st.ixMDD.h(ma, b)] = Dten.h(a.act_h(m, f), b);
      T.h_map[st.ixMDD.h(ma, b)] = a.act_h(m, Dten.h(f, b));
    }
  S.v_map.resize(st.prodMDD->nv());
  T.v_map.resize(st.prodMDD->nv());
  for (Idx ma = 0; ma < a.prodMD->nv(); ++ma)
    for (Idx b = 0; b < d.nv(); ++b) {
      auto [m, u] = a.ixMD.v_parts(ma);
      S.v_map[st.ixMDD.v(ma, b)] = Dten.v(a.act_v(m, u), b);
      T.v_map[st.ixMDD.v(ma, b)] = a.act_v(m, Dten.v(u, b));
    }
  S.sq_map.resize(st.prodMDD->ns());
  T.sq_map.resize(st.prodMDD->ns());
  for (Idx ma = 0; ma < a.prodMD->ns(); ++ma)
    for (Idx b = 0; b < d.ns(); ++b) {
      auto [m, x] = a.ixMD.s_parts(ma);
      S.sq_map[st.ixMDD.s(ma, b)] = Dten.sqr(a.act_sq(m, x), b);
      T.sq_map[st.ixMDD.s(ma, b)] = a.act_sq(m, Dten.sqr(x, b));
    }
  return {S, T};
}


}  // namespace dblcat
