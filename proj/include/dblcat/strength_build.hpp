#pragma once

#include "dblcat/tables.hpp"

namespace dblcat {

// Identity strengths on a strict self-action (or any action whose interchange
// is strict): every component is the identity cell on its boundary.
inline StrengthBundle identity_strength(const ActionBundle& bundle) {
  if (!bundle.Dh) throw PreconditionError("identity_strength: monoidal target required");
  StrengthBundle st;
  st.orientation = Orientation::horizontal;
  st.side = StrengthSide::both;
  st.bundle = bundle;
  st.prodMDD = product_for_source(*bundle.prodMD, *bundle.D);
  st.ixMDD = product_indexing(*bundle.prodMD, *bundle.D);
  const auto& a = st.bundle;
  const auto& d = *a.D;
  const auto& Dh = *a.Dh;

  auto make_identity_like = [&](bool leftside) {
    auto [S, T] = leftside ? left_strength_boundaries(st) : right_strength_boundaries(st);
    HorizontalTransformation t;
    t.name = leftside ? "t(id)" : "s(id)";
    t.variant = HVariant::pseudo;
    t.F = S;
    t.G = T;
    t.at_obj.resize(st.prodMDD->n_objects);
    t.at_v.resize(st.prodMDD->nv());
    t.delta.resize(st.prodMDD->nh());
    t.delta_inv.resize(st.prodMDD->nh());
    for (Idx o = 0; o < st.prodMDD->n_objects; ++o) {
      if (S.obj_map[o] != T.obj_map[o])
        throw PreconditionError("identity_strength: interchange is not strict");
      t.at_obj[o] = d.id_h[S.obj_map[o]];
    }
    for (Idx u = 0; u < st.prodMDD->nv(); ++u) {
      SquareFrame want{t.at_obj[st.prodMDD->v_src[u]], t.at_obj[st.prodMDD->v_tgt[u]],
                       S.v_map[u], T.v_map[u]};
      auto w = find_square(d, want);
      if (!w) throw PreconditionError("identity_strength: missing naturality square");
      t.at_v[u] = *w;
    }
    for (Idx f = 0; f < st.prodMDD->nh(); ++f) {
      Idx top = d.hcomp_h(S.h_map[f], t.at_obj[st.prodMDD->h_tgt[f]]);
      Idx bot = d.hcomp_h(t.at_obj[st.prodMDD->h_src[f]], T.h_map[f]);
      t.delta[f] = globular_cell_for(d, top, bot, "identity_strength delta");
      auto inv = d.sq_v_inverse(t.delta[f]);
      if (!inv) throw PreconditionError("identity_strength: delta not invertible");
      t.delta_inv[f] = *inv;
    }
    return t;
  };
  st.t_h = make_identity_like(true);
  st.s_h = make_identity_like(false);

  Idx nM = st.nM(), nD = st.nD();
  Idx J = a.Munit();
  st.x_.resize(static_cast<size_t>(nM) * nD);
  st.xp_.resize(st.x_.size());
  st.y_.resize(static_cast<size_t>(nM) * nD * nD * nD);
  st.yp_.resize(st.y_.size());
  st.z_.resize(static_cast<size_t>(nD) * nD);
  st.zp_.resize(st.z_.size());
  st.w_.resize(static_cast<size_t>(nM) * nM * nD * nD);
  st.wp_.resize(st.w_.size());
  st.q_.resize(st.y_.size());
  st.c_.resize(st.w_.size());
  st.has_q = true;
  st.has_c = a.braiding.has_value();
  for (Idx m = 0; m < nM; ++m)
    for (Idx A = 0; A < nD; ++A) {
      st.x_[st.ix_ma(m, A)] = globular_cell_for(
          d, d.hcomp_h(st.t_at(m, Dh.unit, A), a.act_h(a.M().id_h[m], Dh.lunit.at_obj[A])),
          Dh.lunit.at_obj[a.act_obj(m, A)], "x");
      st.xp_[st.ix_ma(m, A)] = globular_cell_for(
          d, d.hcomp_h(st.s_at(m, A, Dh.unit), a.act_h(a.M().id_h[m], Dh.runit.at_obj[A])),
          Dh.runit.at_obj[a.act_obj(m, A)], "x'");
      for (Idx B = 0; B < nD; ++B)
        for (Idx C = 0; C < nD; ++C) {
          st.y_[st.ix_mabc(m, A, B, C)] = globular_cell_for(
              d,
              d.hcomp_h(st.t_at(m, Dh.ten.obj(A, B), C),
                        a.act_h(a.M().id_h[m], Dh.a_comp(A, B, C))),
              d.hcomp_h_many({Dh.a_comp(A, B, a.act_obj(m, C)),
                              Dh.ten.h(d.id_h[A], st.t_at(m, B, C)),
                              st.t_at(m, A, Dh.ten.obj(B, C))}),
              "y");
          st.yp_[st.ix_mabc(m, A, B, C)] = globular_cell_for(
              d,
              d.hcomp_h_many({Dh.ten.h(st.s_at(m, A, B), d.id_h[C]),
                              st.s_at(m, Dh.ten.obj(A, B), C),
                              a.act_h(a.M().id_h[m], Dh.a_comp(A, B, C))}),
              d.hcomp_h(Dh.a_comp(a.act_obj(m, A), B, C), st.s_at(m, A, Dh.ten.obj(B, C))),
              "y'");
          st.q_[st.ix_mabc(m, A, B, C)] = globular_cell_for(
              d,
              d.hcomp_h_many({Dh.a_comp(A, a.act_obj(m, B), C),
                              Dh.ten.h(d.id_h[A], st.s_at(m, B, C)),
                              st.t_at(m, A, Dh.ten.obj(B, C))}),
              d.hcomp_h_many({Dh.ten.h(st.t_at(m, A, B), d.id_h[C]),
                              st.s_at(m, Dh.ten.obj(A, B), C),
                              a.act_h(a.M().id_h[m], Dh.a_comp(A, B, C))}),
              "q");
        }
    }
  for (Idx A = 0; A < nD; ++A)
    for (Idx B = 0; B < nD; ++B) {
      st.z_[st.ix_ab(A, B)] = globular_cell_for(
          d, d.hcomp_h(Dh.ten.h(d.id_h[A], a.nu_obj(B)), st.t_at(J, A, B)),
          a.nu_obj(Dh.ten.obj(A, B)), "z");
      st.zp_[st.ix_ab(A, B)] = globular_cell_for(
          d, d.hcomp_h(Dh.ten.h(a.nu_obj(A), d.id_h[B]), st.s_at(J, A, B)),
          a.nu_obj(Dh.ten.obj(A, B)), "z'");
    }
  for (Idx m = 0; m < nM; ++m)
    for (Idx n = 0; n < nM; ++n)
      for (Idx A = 0; A < nD; ++A)
        for (Idx B = 0; B < nD; ++B) {
          st.w_[st.ix_mnab(m, n, A, B)] = globular_cell_for(
              d,
              d.hcomp_h_many({st.t_at(m, A, a.act_obj(n, B)),
                              a.act_h(a.M().id_h[m], st.t_at(n, A, B)),
                              a.beta_obj(m, n, Dh.ten.obj(A, B))}),
              d.hcomp_h(Dh.ten.h(d.id_h[A], a.beta_obj(m, n, B)),
                        st.t_at(a.Mten().obj(m, n), A, B)),
              "w");
          st.wp_[st.ix_mnab(m, n, A, B)] = globular_cell_for(
              d,
              d.hcomp_h_many({st.s_at(m, a.act_obj(n, A), B),
                              a.act_h(a.M().id_h[m], st.s_at(n, A, B)),
                              a.beta_obj(m, n, Dh.ten.obj(A, B))}),
              d.hcomp_h(Dh.ten.h(a.beta_obj(m, n, A), d.id_h[B]),
                        st.s_at(a.Mten().obj(m, n), A, B)),
              "w'");
          if (st.has_c) {
            auto phi = [&](Idx x2, Idx y2) {
              return a.braiding->phi_h->at_obj[a.Mten().ix.obj(x2, y2)];
            };
            st.c_[st.ix_mnab(m, n, A, B)] = globular_cell_for(
                d,
                d.hcomp_h_many({st.s_at(m, A, a.act_obj(n, B)),
                                a.act_h(a.M().id_h[m], st.t_at(n, A, B)),
                                a.beta_obj(m, n, Dh.ten.obj(A, B))}),
                d.hcomp_h_many({st.t_at(n, a.act_obj(m, A), B),
                                a.act_h(a.M().id_h[n], st.s_at(m, A, B)),
                                a.beta_obj(n, m, Dh.ten.obj(A, B)),
                                a.act_h(phi(n, m), d.id_h[Dh.ten.obj(A, B)])}),
                "c");
          }
        }
  return st;
}

// ---------------------------------------------------------------------------
// Vertical strengths/lax-monoidality: the identity-modification discipline of
// the vertical orientation (trivial cocycle modifications). The conversions
// mirror Tables 1 and 2 with 1v-cells.

inline ActionBundle self_action_vertical(std::shared_ptr<VerticalMonoidalStructure> Dv) {
  ActionBundle a;
  a.orientation = Orientation::vertical;
  a.lax = true;
  a.Mv = Dv;
  a.D = Dv->D;
  a.Dv = Dv;
  a.prodMD = Dv->ten.prod;
  a.ixMD = Dv->ten.ix;
  a.F = Dv->ten.F;
  a.prodMMD = Dv->triple.prod3;
  a.ixMMD = Dv->triple.ix3;
  const auto& d = *a.D;
  auto [S, T] = beta_boundaries(a);
  VerticalTransformation beta;
  beta.name = "beta";
  beta.variant = VVariant::invertible;
  beta.F = S;
  beta.G = T;
  beta.at_obj.resize(a.prodMMD->n_objects);
  for (Idx o = 0; o < a.prodMMD->n_objects; ++o) {
    if (S.obj_map[o] != T.obj_map[o])
      throw PreconditionError("self_action_vertical: tensor is not strictly associative");
    beta.at_obj[o] = d.id_v[S.obj_map[o]];
  }
  beta.at_h.resize(a.prodMMD->nh());
  for (Idx f = 0; f < a.prodMMD->nh(); ++f) beta.at_h[f] = d.id_sq_h[S.h_map[f]];
  beta.at_v.resize(a.prodMMD->nv());
  for (Idx u = 0; u < a.prodMMD->nv(); ++u) beta.at_v[u] = d.id_sq_v[S.v_map[u]];
  a.beta_v = std::move(beta);
  auto [Sn, Tn] = nu_boundaries(a);
  VerticalTransformation nu;
  nu.name = "nu";
  nu.variant = VVariant::invertible;
  nu.F = Sn;
  nu.G = Tn;
  nu.at_obj.resize(d.n_objects);
  for (Idx o = 0; o < d.n_objects; ++o) {
    if (Sn.obj_map[o] != Tn.obj_map[o])
      throw PreconditionError("self_action_vertical: unit is not strict");
    nu.at_obj[o] = d.id_v[o];
  }
  nu.at_h.resize(d.nh());
  for (Idx f = 0; f < d.nh(); ++f) nu.at_h[f] = d.id_sq_h[f];
  nu.at_v.resize(d.nv());
  for (Idx u = 0; u < d.nv(); ++u) nu.at_v[u] = d.id_sq_v[u];
  a.nu_v = std::move(nu);
  a.pt.clear();
  a.lt.clear();
  a.mt.clear();
  return a;
}

// Vertical Table-1 counterpart: strengths out of a vertical lax monoidal
// action with trivial cocycle modifications.
inline StrengthBundle vertical_strengths_from_monoidal(const ActionBundle& bundle,
                                                       const std::vector<Idx>& int_obj_v,
                                                       Idx iota_v) {
  if (bundle.orientation != Orientation::vertical)
    throw PreconditionError("vertical_strengths_from_monoidal: vertical bundle required");
  if (!bundle.Dv) throw PreconditionError("vertical strengths need a vertical monoidal target");
  const auto& a = bundle;
  const auto& d = *a.D;
  const auto& Dv = *a.Dv;
  (void)iota_v;
  StrengthBundle st;
  st.orientation = Orientation::vertical;
  st.side = StrengthSide::both;
  st.bundle = bundle;
  st.prodMDD = product_for_source(*a.prodMD, *a.D);
  st.ixMDD = product_indexing(*a.prodMD, *a.D);
  Idx np = a.prodMD->n_objects;
  Idx J = a.Munit();
  auto int_at = [&](Idx m, Idx A, Idx n, Idx B) {
    return int_obj_v[a.ixMD.obj(m, A) * np + a.ixMD.obj(n, B)];
  };

  auto build = [&](bool leftside) {
    auto [S, T] = leftside ? left_strength_boundaries(st) : right_strength_boundaries(st);
    VerticalTransformation t;
    t.name = leftside ? "t(v)" : "s(v)";
    t.variant = VVariant::invertible;
    t.F = S;
    t.G = T;
    t.at_obj.resize(st.prodMDD->n_objects);
    for (Idx m = 0; m < st.nM(); ++m)
      for (Idx A = 0; A < st.nD(); ++A)
        for (Idx B = 0; B < st.nD(); ++B) {
          Idx o = st.t3(m, A, B);
          t.at_obj[o] =
              leftside
                  ? d.vcomp_v_many({Dv.ten.v(a.nu_obj(A), d.id_v[a.act_obj(m, B)]),
                                    int_at(J, A, m, B),
                                    a.act_v(a.Mv->lunit.at_obj[m], d.id_v[Dv.ten.obj(A, B)])})
                  : d.vcomp_v_many({Dv.ten.v(d.id_v[a.act_obj(m, A)], a.nu_obj(B)),
                                    int_at(m, A, J, B),
                                    a.act_v(a.Mv->runit.at_obj[m], d.id_v[Dv.ten.obj(A, B)])});
        }
    t.at_h.resize(st.prodMDD->nh());
    for (Idx f = 0; f < st.prodMDD->nh(); ++f) {
      auto w = find_square(d, SquareFrame{S.h_map[f], T.h_map[f],
                                          t.at_obj[st.prodMDD->h_src[f]],
                                          t.at_obj[st.prodMDD->h_tgt[f]]});
      if (!w) throw PreconditionError("vertical strength: missing 2-cell component");
      t.at_h[f] = *w;
    }
    t.at_v.resize(st.prodMDD->nv());
    for (Idx u = 0; u < st.prodMDD->nv(); ++u) {
      Idx l = d.vcomp_v(t.at_obj[st.prodMDD->v_src[u]], T.v_map[u]);
      Idx r = d.vcomp_v(S.v_map[u], t.at_obj[st.prodMDD->v_tgt[u]]);
      if (l != r) throw PreconditionError("vertical strength: components not strictly natural");
      t.at_v[u] = d.id_sq_v[l];
    }
    return t;
  };
  st.t_v = build(true);
  st.s_v = build(false);
  st.has_q = true;
  st.has_c = bundle.braiding.has_value();
  return st;
}

// Vertical Table-2 counterpart: the interchanger 1v-cells of the lax monoidal
// structure determined by vertical strengths.
inline std::vector<Idx> vertical_monoidal_from_strengths(const StrengthBundle& st) {
  if (st.orientation != Orientation::vertical)
    throw PreconditionError("vertical_monoidal_from_strengths: vertical bundle required");
  if (!st.t_v || !st.s_v) throw PreconditionError("both vertical strengths required");
  if (!st.has_q) throw PreconditionError("bistrength required");
  const auto& a = st.bundle;
  const auto& d = *a.D;
  const auto& Dv = *a.Dv;
  Idx np = a.prodMD->n_objects;
  std::vector<Idx> int_obj(static_cast<size_t>(np) * np, kNone);
  for (Idx x = 0; x < np; ++x)
    for (Idx y = 0; y < np; ++y) {
      auto [m, A] = a.ixMD.obj_parts(x);
      auto [n, B] = a.ixMD.obj_parts(y);
      int_obj[x * np + y] = d.vcomp_v_many({st.s_at(m, A, a.act_obj(n, B)),
                                            a.act_v(a.M().id_v[m], st.t_at(n, A, B)),
                                            a.beta_obj(m, n, Dv.ten.obj(A, B))});
    }
  return int_obj;
}

// Lifting of vertical strengths to horizontal ones along companions of the
// 1v-components; structure cells are recomputed on the lifted frames.
inline StrengthBundle lift_strength(const StrengthBundle& sv,
                                    std::shared_ptr<HorizontalMonoidalStructure> Mh,
                                    std::shared_ptr<HorizontalMonoidalStructure> Dh,
                                    const ActionBundle& horizontal_bundle,
                                    const CompanionChoice& choice) {
  if (sv.orientation != Orientation::vertical)
    throw PreconditionError("lift_strength: vertical input required");
  StrengthBundle st;
  st.orientation = Orientation::horizontal;
  st.side = sv.side;
  st.bundle = horizontal_bundle;
  st.bundle.Mh = std::move(Mh);
  st.bundle.Dh = std::move(Dh);
  st.prodMDD = sv.prodMDD;
  st.ixMDD = sv.ixMDD;
  if (sv.t_v) st.t_h = lift_vertical_to_horizontal(*sv.t_v, choice);
  if (sv.s_v) st.s_h = lift_vertical_to_horizontal(*sv.s_v, choice);
  const auto& a = st.bundle;
  const auto& d = *a.D;
  const auto& Dh2 = *a.Dh;
  Idx nM = st.nM(), nD = st.nD(), J = a.Munit();
  st.x_.resize(static_cast<size_t>(nM) * nD);
  st.xp_.resize(st.x_.size());
  st.y_.resize(static_cast<size_t>(nM) * nD * nD * nD);
  st.yp_.resize(st.y_.size());
  st.z_.resize(static_cast<size_t>(nD) * nD);
  st.zp_.resize(st.z_.size());
  st.w_.resize(static_cast<size_t>(nM) * nM * nD * nD);
  st.wp_.resize(st.w_.size());
  st.q_.resize(st.y_.size());
  st.c_.resize(st.w_.size());
  st.has_q = sv.has_q;
  st.has_c = sv.has_c && a.braiding.has_value();
  for (Idx m = 0; m < nM; ++m)
    for (Idx A = 0; A < nD; ++A) {
      st.x_[st.ix_ma(m, A)] = globular_cell_for(
          d, d.hcomp_h(st.t_at(m, Dh2.unit, A), a.act_h(a.M().id_h[m], Dh2.lunit.at_obj[A])),
          Dh2.lunit.at_obj[a.act_obj(m, A)], "lifted x");
      st.xp_[st.ix_ma(m, A)] = globular_cell_for(
          d, d.hcomp_h(st.s_at(m, A, Dh2.unit), a.act_h(a.M().id_h[m], Dh2.runit.at_obj[A])),
          Dh2.runit.at_obj[a.act_obj(m, A)], "lifted x'");
      for (Idx B = 0; B < nD; ++B)
        for (Idx C = 0; C < nD; ++C) {
          st.y_[st.ix_mabc(m, A, B, C)] = globular_cell_for(
              d,
              d.hcomp_h(st.t_at(m, Dh2.ten.obj(A, B), C),
                        a.act_h(a.M().id_h[m], Dh2.a_comp(A, B, C))),
              d.hcomp_h_many({Dh2.a_comp(A, B, a.act_obj(m, C)),
                              Dh2.ten.h(d.id_h[A], st.t_at(m, B, C)),
                              st.t_at(m, A, Dh2.ten.obj(B, C))}),
              "lifted y");
          st.yp_[st.ix_mabc(m, A, B, C)] = globular_cell_for(
              d,
              d.hcomp_h_many({Dh2.ten.h(st.s_at(m, A, B), d.id_h[C]),
                              st.s_at(m, Dh2.ten.obj(A, B), C),
                              a.act_h(a.M().id_h[m], Dh2.a_comp(A, B, C))}),
              d.hcomp_h(Dh2.a_comp(a.act_obj(m, A), B, C), st.s_at(m, A, Dh2.ten.obj(B, C))),
              "lifted y'");
          if (st.has_q)
            st.q_[st.ix_mabc(m, A, B, C)] = globular_cell_for(
                d,
                d.hcomp_h_many({Dh2.a_comp(A, a.act_obj(m, B), C),
                                Dh2.ten.h(d.id_h[A], st.s_at(m, B, C)),
                                st.t_at(m, A, Dh2.ten.obj(B, C))}),
                d.hcomp_h_many({Dh2.ten.h(st.t_at(m, A, B), d.id_h[C]),
                                st.s_at(m, Dh2.ten.obj(A, B), C),
                                a.act_h(a.M().id_h[m], Dh2.a_comp(A, B, C))}),
                "lifted q");
        }
    }
  for (Idx A = 0; A < nD; ++A)
    for (Idx B = 0; B < nD; ++B) {
      st.z_[st.ix_ab(A, B)] = globular_cell_for(
          d, d.hcomp_h(Dh2.ten.h(d.id_h[A], a.nu_obj(B)), st.t_at(J, A, B)),
          a.nu_obj(Dh2.ten.obj(A, B)), "lifted z");
      st.zp_[st.ix_ab(A, B)] = globular_cell_for(
          d, d.hcomp_h(Dh2.ten.h(a.nu_obj(A), d.id_h[B]), st.s_at(J, A, B)),
          a.nu_obj(Dh2.ten.obj(A, B)), "lifted z'");
    }
  for (Idx m = 0; m < nM; ++m)
    for (Idx n = 0; n < nM; ++n)
      for (Idx A = 0; A < nD; ++A)
        for (Idx B = 0; B < nD; ++B) {
          st.w_[st.ix_mnab(m, n, A, B)] = globular_cell_for(
              d,
              d.hcomp_h_many({st.t_at(m, A, a.act_obj(n, B)),
                              a.act_h(a.M().id_h[m], st.t_at(n, A, B)),
                              a.beta_obj(m, n, Dh2.ten.obj(A, B))}),
              d.hcomp_h(Dh2.ten.h(d.id_h[A], a.beta_obj(m, n, B)),
                        st.t_at(a.Mten().obj(m, n), A, B)),
              "lifted w");
          st.wp_[st.ix_mnab(m, n, A, B)] = globular_cell_for(
              d,
              d.hcomp_h_many({st.s_at(m, a.act_obj(n, A), B),
                              a.act_h(a.M().id_h[m], st.s_at(n, A, B)),
                              a.beta_obj(m, n, Dh2.ten.obj(A, B))}),
              d.hcomp_h(Dh2.ten.h(a.beta_obj(m, n, A), d.id_h[B]),
                        st.s_at(a.Mten().obj(m, n), A, B)),
              "lifted w'");
          if (st.has_c) {
            auto phi = [&](Idx x2, Idx y2) {
              return a.braiding->phi_h->at_obj[a.Mten().ix.obj(x2, y2)];
            };
            st.c_[st.ix_mnab(m, n, A, B)] = globular_cell_for(
                d,
                d.hcomp_h_many({st.s_at(m, A, a.act_obj(n, B)),
                                a.act_h(a.M().id_h[m], st.t_at(n, A, B)),
                                a.beta_obj(m, n, Dh2.ten.obj(A, B))}),
                d.hcomp_h_many({st.t_at(n, a.act_obj(m, A), B),
                                a.act_h(a.M().id_h[n], st.s_at(m, A, B)),
                                a.beta_obj(n, m, Dh2.ten.obj(A, B)),
                                a.act_h(phi(n, m), d.id_h[Dh2.ten.obj(A, B)])}),
                "lifted c");
          }
        }
  return st;
}

}  // namespace dblcat
