#pragma once

#include "dblcat/strength.hpp"

namespace dblcat {

// Schema binder over a strength bundle: action leaves plus t/s and the named
// strength modification cells.
struct StrengthBinder : ActionBinder {
  const StrengthBundle* st;

  explicit StrengthBinder(const StrengthBundle& s) : ActionBinder(s.bundle), st(&s) {}

  HVal named_h_extra(const std::string& n, const std::vector<ObjVal>& os) override {
    if (n == "t") return HVal{'D', st->t_at(os[0].idx, os[1].idx, os[2].idx)};
    if (n == "s") return HVal{'D', st->s_at(os[0].idx, os[1].idx, os[2].idx)};
    throw StructuralError("unknown hcell leaf " + n);
  }

  Idx named_square_extra(const std::string& n, const std::vector<ObjVal>& os,
                         const std::vector<HVal>& hs, const std::vector<Idx>&) override {
    const auto& d = *a->D;
    auto vinv = [&](Idx q, const char* what) {
      auto i = d.sq_v_inverse(q);
      if (!i) throw PreconditionError(std::string(what) + " has no vertical inverse");
      return *i;
    };
    if (n == "sx") return st->x_[st->ix_ma(os[0].idx, os[1].idx)];
    if (n == "sx_inv") return vinv(st->x_[st->ix_ma(os[0].idx, os[1].idx)], "x");
    if (n == "sy") return st->y_[st->ix_mabc(os[0].idx, os[1].idx, os[2].idx, os[3].idx)];
    if (n == "sz") return st->z_[st->ix_ab(os[0].idx, os[1].idx)];
    if (n == "sw") return st->w_[st->ix_mnab(os[0].idx, os[1].idx, os[2].idx, os[3].idx)];
    if (n == "sxp") return st->xp_[st->ix_ma(os[0].idx, os[1].idx)];
    if (n == "syp") return st->yp_[st->ix_mabc(os[0].idx, os[1].idx, os[2].idx, os[3].idx)];
    if (n == "szp") return st->zp_[st->ix_ab(os[0].idx, os[1].idx)];
    if (n == "swp") return st->wp_[st->ix_mnab(os[0].idx, os[1].idx, os[2].idx, os[3].idx)];
    if (n == "q") return st->q_[st->ix_mabc(os[0].idx, os[1].idx, os[2].idx, os[3].idx)];
    if (n == "c") return st->c_[st->ix_mnab(os[0].idx, os[1].idx, os[2].idx, os[3].idx)];
    if (n == "tdelta" || n == "tdelta_inv") {
      if (!st->t_h) throw PreconditionError("tdelta needs the horizontal t");
      // hs = (m-hcell, a-hcell, b-hcell)
      Idx i = st->t3h(hs[0].idx, hs[1].idx, hs[2].idx);
      return n == "tdelta" ? st->t_h->delta[i] : st->t_h->delta_in_direction(i, false);
    }
    if (n == "sdelta" || n == "sdelta_inv") {
      if (!st->s_h) throw PreconditionError("sdelta needs the horizontal s");
      Idx i = st->t3h(hs[0].idx, hs[1].idx, hs[2].idx);
      return n == "sdelta" ? st->s_h->delta[i] : st->s_h->delta_in_direction(i, false);
    }
    throw StructuralError("unknown square leaf " + n);
  }
};

inline bool strength_is_strict(const StrengthBundle& st) {
  const auto& d = *st.bundle.D;
  auto all_id = [&](const std::vector<Idx>& v) {
    for (Idx x : v)
      if (x != kNone && !d.is_identity_sq_v(x) && !d.is_identity_sq_h(x)) return false;
    return true;
  };
  bool strict = all_id(st.x_) && all_id(st.y_) && all_id(st.z_) && all_id(st.w_) &&
                all_id(st.xp_) && all_id(st.yp_) && all_id(st.zp_) && all_id(st.wp_) &&
                all_id(st.q_) && all_id(st.c_) && action_is_strict(st.bundle);
  if (st.t_h) strict = strict && all_id(st.t_h->delta) && all_id(st.t_h->at_v);
  if (st.s_h) strict = strict && all_id(st.s_h->delta) && all_id(st.s_h->at_v);
  return strict;
}

inline ValidationReport check_strength(const StrengthBundle& st, int max_per_law = 10) {
  ValidationReport rep;
  rep.max_per_law = max_per_law;
  const auto& a = st.bundle;
  const auto& d = *a.D;
  if (!a.Dh && st.orientation == Orientation::horizontal)
    throw PreconditionError("check_strength: monoidal structure on the target required");
  rep.merge(check_action(a), "action");
  auto sh = [&](Idx i) { return std::to_string(i); };
  Idx nM = st.nM(), nD = st.nD();

  bool left = st.side != StrengthSide::right;
  bool right = st.side != StrengthSide::left;

  if (st.orientation == Orientation::horizontal) {
    const auto& Dh = *a.Dh;
    if (left) {
      if (!st.t_h) throw StructuralError("left strength missing t");
      auto [S, T] = left_strength_boundaries(st);
      if (st.t_h->F.obj_map != S.obj_map || st.t_h->F.h_map != S.h_map ||
          st.t_h->G.obj_map != T.obj_map || st.t_h->G.h_map != T.h_map)
        throw StructuralError("t boundaries do not match A(x)(M(x)B) => M(x)(A(x)B)");
      rep.merge(check_horizontal_transformation(*st.t_h), "t");
    }
    if (right) {
      if (!st.s_h) throw StructuralError("right strength missing s");
      auto [S, T] = right_strength_boundaries(st);
      if (st.s_h->F.obj_map != S.obj_map || st.s_h->F.h_map != S.h_map ||
          st.s_h->G.obj_map != T.obj_map || st.s_h->G.h_map != T.h_map)
        throw StructuralError("s boundaries do not match (M(x)A)(x)B => M(x)(A(x)B)");
      rep.merge(check_horizontal_transformation(*st.s_h), "s");
    }

    auto check_glob = [&](const char* law, const std::string& at, Idx w, Idx top, Idx bot) {
      if (w == kNone ||
          !(d.sq[w] == SquareFrame{top, bot, d.id_v[d.h_src[top]], d.id_v[d.h_tgt[top]]}))
        rep.add(std::string(law) + "-frame", at, w == kNone ? "missing" : d.show_frame(w), "");
      else if (!d.sq_v_inverse(w))
        rep.add(std::string(law) + "-invertible", at, sh(w), "");
    };

    for (Idx m = 0; m < nM && left; ++m)
      for (Idx A = 0; A < nD; ++A) {
        check_glob("x", "(" + sh(m) + "," + sh(A) + ")", st.x_[st.ix_ma(m, A)],
                   d.hcomp_h(st.t_at(m, Dh.unit, A),
                             a.act_h(a.M().id_h[m], Dh.lunit.at_obj[A])),
                   Dh.lunit.at_obj[a.act_obj(m, A)]);
        for (Idx B = 0; B < nD; ++B)
          for (Idx C = 0; C < nD; ++C)
            check_glob("y", "(" + sh(m) + "," + sh(A) + "," + sh(B) + "," + sh(C) + ")",
                       st.y_[st.ix_mabc(m, A, B, C)],
                       d.hcomp_h(st.t_at(m, Dh.ten.obj(A, B), C),
                                 a.act_h(a.M().id_h[m], Dh.a_comp(A, B, C))),
                       d.hcomp_h_many({Dh.a_comp(A, B, a.act_obj(m, C)),
                                       Dh.ten.h(d.id_h[A], st.t_at(m, B, C)),
                                       st.t_at(m, A, Dh.ten.obj(B, C))}));
      }
    for (Idx A = 0; A < nD && left; ++A)
      for (Idx B = 0; B < nD; ++B)
        check_glob("z", "(" + sh(A) + "," + sh(B) + ")", st.z_[st.ix_ab(A, B)],
                   d.hcomp_h(Dh.ten.h(d.id_h[A], a.nu_obj(B)), st.t_at(a.Munit(), A, B)),
                   a.nu_obj(Dh.ten.obj(A, B)));
    for (Idx m = 0; m < nM && left; ++m)
      for (Idx n = 0; n < nM; ++n)
        for (Idx A = 0; A < nD; ++A)
          for (Idx B = 0; B < nD; ++B)
            check_glob("w", "(" + sh(m) + "," + sh(n) + "," + sh(A) + "," + sh(B) + ")",
                       st.w_[st.ix_mnab(m, n, A, B)],
                       d.hcomp_h_many({st.t_at(m, A, a.act_obj(n, B)),
                                       a.act_h(a.M().id_h[m], st.t_at(n, A, B)),
                                       a.beta_obj(m, n, Dh.ten.obj(A, B))}),
                       d.hcomp_h(Dh.ten.h(d.id_h[A], a.beta_obj(m, n, B)),
                                 st.t_at(a.Mten().obj(m, n), A, B)));
    for (Idx m = 0; m < nM && right; ++m)
      for (Idx A = 0; A < nD; ++A) {
        check_glob("x'", "(" + sh(m) + "," + sh(A) + ")", st.xp_[st.ix_ma(m, A)],
                   d.hcomp_h(st.s_at(m, A, Dh.unit),
                             a.act_h(a.M().id_h[m], Dh.runit.at_obj[A])),
                   Dh.runit.at_obj[a.act_obj(m, A)]);
        for (Idx B = 0; B < nD; ++B)
          for (Idx C = 0; C < nD; ++C)
            check_glob("y'", "(" + sh(m) + "," + sh(A) + "," + sh(B) + "," + sh(C) + ")",
                       st.yp_[st.ix_mabc(m, A, B, C)],
                       d.hcomp_h_many({Dh.ten.h(st.s_at(m, A, B), d.id_h[C]),
                                       st.s_at(m, Dh.ten.obj(A, B), C),
                                       a.act_h(a.M().id_h[m], Dh.a_comp(A, B, C))}),
                       d.hcomp_h(Dh.a_comp(a.act_obj(m, A), B, C),
                                 st.s_at(m, A, Dh.ten.obj(B, C))));
      }
    for (Idx A = 0; A < nD && right; ++A)
      for (Idx B = 0; B < nD; ++B)
        check_glob("z'", "(" + sh(A) + "," + sh(B) + ")", st.zp_[st.ix_ab(A, B)],
                   d.hcomp_h(Dh.ten.h(a.nu_obj(A), d.id_h[B]), st.s_at(a.Munit(), A, B)),
                   a.nu_obj(Dh.ten.obj(A, B)));
    for (Idx m = 0; m < nM && right; ++m)
      for (Idx n = 0; n < nM; ++n)
        for (Idx A = 0; A < nD; ++A)
          for (Idx B = 0; B < nD; ++B)
            check_glob("w'", "(" + sh(m) + "," + sh(n) + "," + sh(A) + "," + sh(B) + ")",
                       st.wp_[st.ix_mnab(m, n, A, B)],
                       d.hcomp_h_many({st.s_at(m, a.act_obj(n, A), B),
                                       a.act_h(a.M().id_h[m], st.s_at(n, A, B)),
                                       a.beta_obj(m, n, Dh.ten.obj(A, B))}),
                       d.hcomp_h(Dh.ten.h(a.beta_obj(m, n, A), d.id_h[B]),
                                 st.s_at(a.Mten().obj(m, n), A, B)));
    if (st.has_q) {
      for (Idx m = 0; m < nM; ++m)
        for (Idx A = 0; A < nD; ++A)
          for (Idx B = 0; B < nD; ++B)
            for (Idx C = 0; C < nD; ++C)
              check_glob("q", "(" + sh(m) + "," + sh(A) + "," + sh(B) + "," + sh(C) + ")",
                         st.q_[st.ix_mabc(m, A, B, C)],
                         d.hcomp_h_many({Dh.a_comp(A, a.act_obj(m, B), C),
                                         Dh.ten.h(d.id_h[A], st.s_at(m, B, C)),
                                         st.t_at(m, A, Dh.ten.obj(B, C))}),
                         d.hcomp_h_many({Dh.ten.h(st.t_at(m, A, B), d.id_h[C]),
                                         st.s_at(m, Dh.ten.obj(A, B), C),
                                         a.act_h(a.M().id_h[m], Dh.a_comp(A, B, C))}));
    }
    if (st.has_c) {
      if (!a.braiding || !a.braiding->phi_h)
        throw PreconditionError("commutativity requires a braiding on the acting category");
      auto phi = [&](Idx x, Idx y) {
        return a.braiding->phi_h->at_obj[a.Mten().ix.obj(x, y)];
      };
      for (Idx m = 0; m < nM; ++m)
        for (Idx n = 0; n < nM; ++n)
          for (Idx A = 0; A < nD; ++A)
            for (Idx B = 0; B < nD; ++B)
              check_glob("c", "(" + sh(m) + "," + sh(n) + "," + sh(A) + "," + sh(B) + ")",
                         st.c_[st.ix_mnab(m, n, A, B)],
                         d.hcomp_h_many({st.s_at(m, A, a.act_obj(n, B)),
                                         a.act_h(a.M().id_h[m], st.t_at(n, A, B)),
                                         a.beta_obj(m, n, Dh.ten.obj(A, B))}),
                         d.hcomp_h_many({st.t_at(n, a.act_obj(m, A), B),
                                         a.act_h(a.M().id_h[n], st.s_at(m, A, B)),
                                         a.beta_obj(n, m, Dh.ten.obj(A, B)),
                                         a.act_h(phi(n, m), d.id_h[Dh.ten.obj(A, B)])}));
    }

    // TA regime for strengths
    AxiomSchema schema = load_axiom_schema();
    StrengthBinder binder(st);
    bool strict = strength_is_strict(st);
    if (strict) rep.note("strict-shortcut: all strength structure squares are identities");
    if (left && st.t_h)
      run_schema_axioms(schema.for_structure("horizontal_strength"), binder,
                        [&](char sort) { return sort == 'M' ? nM : nD; }, strict, rep);
    if (st.has_q && left && right)
      run_schema_axioms(schema.for_structure("bistrength"), binder,
                        [&](char sort) { return sort == 'M' ? nM : nD; }, strict, rep);
  } else {
    // vertical orientation: invertible strict transformations, identity
    // vertical modifications as literal equalities of composite 1v-cells
    const auto& Dv = *a.Dv;
    if (left) {
      if (!st.t_v) throw StructuralError("left strength missing t");
      rep.merge(check_vertical_transformation(*st.t_v), "t");
      for (Idx m = 0; m < nM; ++m)
        for (Idx A = 0; A < nD; ++A) {
          Idx lhs = Dv.lunit.at_obj[a.act_obj(m, A)];
          Idx rhs = d.vcomp_v(st.t_at(m, Dv.unit, A),
                              a.act_v(a.M().id_v[m], Dv.lunit.at_obj[A]));
          if (lhs != rhs)
            rep.add("x-identity", "(" + sh(m) + "," + sh(A) + ")", sh(lhs), sh(rhs));
          for (Idx B = 0; B < nD; ++B) {
            Idx zl = a.nu_obj(Dv.ten.obj(A, B));
            Idx zr = d.vcomp_v(Dv.ten.v(d.id_v[A], a.nu_obj(B)), st.t_at(a.Munit(), A, B));
            if (zl != zr) rep.add("z-identity", "(" + sh(A) + "," + sh(B) + ")", sh(zl), sh(zr));
            for (Idx C = 0; C < nD; ++C) {
              Idx yl = d.vcomp_v(st.t_at(m, Dv.ten.obj(A, B), C),
                                 a.act_v(a.M().id_v[m],
                                         Dv.assoc.at_obj[Dv.triple.ix3.obj(
                                             Dv.ten.ix.obj(A, B), C)]));
              Idx yr = d.vcomp_v_many(
                  {Dv.assoc.at_obj[Dv.triple.ix3.obj(Dv.ten.ix.obj(A, B), a.act_obj(m, C))],
                   Dv.ten.v(d.id_v[A], st.t_at(m, B, C)), st.t_at(m, A, Dv.ten.obj(B, C))});
              if (yl != yr)
                rep.add("y-identity", "(" + sh(m) + "," + sh(A) + "," + sh(B) + "," + sh(C) + ")",
                        sh(yl), sh(yr));
            }
          }
          for (Idx n = 0; n < nM; ++n)
            for (Idx B = 0; B < nD; ++B) {
              Idx wl = d.vcomp_v(Dv.ten.v(d.id_v[A], a.beta_obj(m, n, B)),
                                 st.t_at(a.Mten().obj(m, n), A, B));
              Idx wr = d.vcomp_v_many({st.t_at(m, A, a.act_obj(n, B)),
                                       a.act_v(a.M().id_v[m], st.t_at(n, A, B)),
                                       a.beta_obj(m, n, Dv.ten.obj(A, B))});
              if (wl != wr)
                rep.add("w-identity", "(" + sh(m) + "," + sh(n) + "," + sh(A) + "," + sh(B) + ")",
                        sh(wl), sh(wr));
            }
        }
    }
    if (right) {
      if (!st.s_v) throw StructuralError("right strength missing s");
      rep.merge(check_vertical_transformation(*st.s_v), "s");
    }
    if (st.has_q && st.t_v && st.s_v) {
      for (Idx m = 0; m < nM; ++m)
        for (Idx A = 0; A < nD; ++A)
          for (Idx B = 0; B < nD; ++B)
            for (Idx C = 0; C < nD; ++C) {
              Idx ql = d.vcomp_v_many(
                  {Dv.assoc.at_obj[Dv.triple.ix3.obj(Dv.ten.ix.obj(A, a.act_obj(m, B)), C)],
                   Dv.ten.v(d.id_v[A], st.s_at(m, B, C)), st.t_at(m, A, Dv.ten.obj(B, C))});
              Idx qr = d.vcomp_v_many(
                  {Dv.ten.v(st.t_at(m, A, B), d.id_v[C]), st.s_at(m, Dv.ten.obj(A, B), C),
                   a.act_v(a.M().id_v[m],
                           Dv.assoc.at_obj[Dv.triple.ix3.obj(Dv.ten.ix.obj(A, B), C)])});
              if (ql != qr)
                rep.add("q-identity", "(" + sh(m) + "," + sh(A) + "," + sh(B) + "," + sh(C) + ")",
                        sh(ql), sh(qr));
            }
    }
  }
  return rep;
}

}  // namespace dblcat
