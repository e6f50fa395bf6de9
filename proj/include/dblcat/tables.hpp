#pragma once

#include "dblcat/strength_check.hpp"

namespace dblcat {

// ---------------------------------------------------------------------------
// Table 1: a lax monoidal horizontal lax action yields a bistrong commutative
// action. The strengths compose nu, the interchanger and the acting unitors;
// the structure modifications are the canonical cells on the frames that the
// cited sources paste (identities on strict instances, unique on thin ones).

inline StrengthBundle lax_monoidal_to_bistrong(const LaxMonoidalActionStructure& s) {
  const auto& a = s.bundle;
  const auto& d = *a.D;
  if (a.orientation != Orientation::horizontal)
    throw PreconditionError("lax_monoidal_to_bistrong: horizontal orientation required "
                            "(use vertical_lax_monoidal_to_strengths)");
  if (!a.Dh) throw PreconditionError("Table 1 needs a monoidal target");
  if (!a.braiding || !a.braiding->phi_h)
    throw PreconditionError("Table 1 row c blocked: braiding required");
  for (Idx w : s.beta2)
    if (!d.sq_v_inverse(w))
      throw PreconditionError("Table 1 row c blocked: beta2 is not invertible");

  const auto& Dh = *a.Dh;
  StrengthBundle st;
  st.orientation = Orientation::horizontal;
  st.side = StrengthSide::both;
  st.bundle = a;
  st.prodMDD = product_for_source(*a.prodMD, *a.D);
  st.ixMDD = product_indexing(*a.prodMD, *a.D);

  Idx J = a.Munit();
  Idx nM = st.nM(), nD = st.nD();
  Idx np = a.prodMD->n_objects;
  Idx nph = a.prodMD->nh();
  (void)np;

  // t = [nu_A (x) 1_{MB} | int_{J,A,M,B} | lamM_M (x)bar 1_{AB}]
  {
    auto [S, T] = left_strength_boundaries(st);
    HorizontalTransformation t;
    t.name = "t(table1)";
    t.variant = HVariant::pseudo;
    t.F = S;
    t.G = T;
    t.at_obj.resize(st.prodMDD->n_objects);
    t.at_v.resize(st.prodMDD->nv());
    t.delta.resize(st.prodMDD->nh());
    t.delta_inv.resize(st.prodMDD->nh());
    for (Idx m = 0; m < nM; ++m)
      for (Idx A = 0; A < nD; ++A)
        for (Idx B = 0; B < nD; ++B)
          t.at_obj[st.t3(m, A, B)] =
              d.hcomp_h_many({Dh.ten.h(a.nu_obj(A), d.id_h[a.act_obj(m, B)]),
                              s.int_at(J, A, m, B),
                              a.act_h(a.Mh->lunit.at_obj[m], d.id_h[Dh.ten.obj(A, B)])});
    // delta: chain of the three constituents' cells
    for (Idx m = 0; m < a.M().nh(); ++m)
      for (Idx f = 0; f < d.nh(); ++f)
        for (Idx g = 0; g < d.nh(); ++g) {
          Idx i = st.t3h(m, f, g);
          Idx x1 = Dh.ten.sqr(a.nu_h->delta[f], d.id_sq_h[a.act_h(m, g)]);
          Idx x2 = s.int_pair[a.ixMD.h(a.M().id_h[J], f) * nph + a.ixMD.h(m, g)];
          Idx x3 = a.act_sq(a.Mh->lunit.delta[m], d.id_sq_h[Dh.ten.h(f, g)]);
          // composite delta of a three-stage transformation
          Idx mS = a.M().h_src[m], mT = a.M().h_tgt[m];
          Idx fS = d.h_src[f], fT = d.h_tgt[f];
          Idx gS = d.h_src[g], gT = d.h_tgt[g];
          auto comp1 = [&](Idx mm, Idx AA, Idx BB) {
            return Dh.ten.h(a.nu_obj(AA), d.id_h[a.act_obj(mm, BB)]);
          };
          auto comp2 = [&](Idx mm, Idx AA, Idx BB) { return s.int_at(J, AA, mm, BB); };
          auto comp3 = [&](Idx mm, Idx AA, Idx BB) {
            return a.act_h(a.Mh->lunit.at_obj[mm], d.id_h[Dh.ten.obj(AA, BB)]);
          };
          Idx l1 = d.vcomp_sq(
              d.hcomp_sq(x1, d.id_sq_h[d.hcomp_h(comp2(mT, fT, gT), comp3(mT, fT, gT))]),
              d.vcomp_sq(
                  d.hcomp_sq(d.id_sq_h[comp1(mS, fS, gS)],
                             d.hcomp_sq(x2, d.id_sq_h[comp3(mT, fT, gT)])),
                  d.hcomp_sq(d.id_sq_h[d.hcomp_h(comp1(mS, fS, gS), comp2(mS, fS, gS))], x3)));
          t.delta[i] = l1;
          auto inv = d.sq_v_inverse(l1);
          if (!inv) throw PreconditionError("Table 1: t delta not invertible");
          t.delta_inv[i] = *inv;
        }
    for (Idx m = 0; m < a.M().nv(); ++m)
      for (Idx u = 0; u < d.nv(); ++u)
        for (Idx w = 0; w < d.nv(); ++w) {
          Idx i = st.t3v(m, u, w);
          Idx x1 = Dh.ten.sqr(a.nu_h->at_v[u], d.id_sq_v[a.act_v(m, w)]);
          Idx x2 = s.int_v[a.ixMD.v(a.M().id_v[J], u) * a.prodMD->nv() + a.ixMD.v(m, w)];
          Idx x3 = a.act_sq(a.Mh->lunit.at_v[m], d.id_sq_v[Dh.ten.v(u, w)]);
          t.at_v[i] = d.hcomp_sq_many({x1, x2, x3});
        }
    st.t_h = std::move(t);
  }
  // s = [1_{MA} (x) nu_B | int_{M,A,J,B} | roM_M (x)bar 1_{AB}]
  {
    auto [S, T] = right_strength_boundaries(st);
    HorizontalTransformation sr;
    sr.name = "s(table1)";
    sr.variant = HVariant::pseudo;
    sr.F = S;
    sr.G = T;
    sr.at_obj.resize(st.prodMDD->n_objects);
    sr.at_v.resize(st.prodMDD->nv());
    sr.delta.resize(st.prodMDD->nh());
    sr.delta_inv.resize(st.prodMDD->nh());
    for (Idx m = 0; m < nM; ++m)
      for (Idx A = 0; A < nD; ++A)
        for (Idx B = 0; B < nD; ++B)
          sr.at_obj[st.t3(m, A, B)] =
              d.hcomp_h_many({Dh.ten.h(d.id_h[a.act_obj(m, A)], a.nu_obj(B)),
                              s.int_at(m, A, J, B),
                              a.act_h(a.Mh->runit.at_obj[m], d.id_h[Dh.ten.obj(A, B)])});
    for (Idx m = 0; m < a.M().nh(); ++m)
      for (Idx f = 0; f < d.nh(); ++f)
        for (Idx g = 0; g < d.nh(); ++g) {
          Idx i = st.t3h(m, f, g);
          Idx mS = a.M().h_src[m], mT = a.M().h_tgt[m];
          Idx fS = d.h_src[f], fT = d.h_tgt[f];
          Idx gS = d.h_src[g], gT = d.h_tgt[g];
          Idx x1 = Dh.ten.sqr(d.id_sq_h[a.act_h(m, f)], a.nu_h->delta[g]);
          Idx x2 = s.int_pair[a.ixMD.h(m, f) * nph + a.ixMD.h(a.M().id_h[J], g)];
          Idx x3 = a.act_sq(a.Mh->runit.delta[m], d.id_sq_h[Dh.ten.h(f, g)]);
          auto comp1 = [&](Idx mm, Idx AA, Idx BB) {
            return Dh.ten.h(d.id_h[a.act_obj(mm, AA)], a.nu_obj(BB));
          };
          auto comp2 = [&](Idx mm, Idx AA, Idx BB) { return s.int_at(mm, AA, J, BB); };
          auto comp3 = [&](Idx mm, Idx AA, Idx BB) {
            return a.act_h(a.Mh->runit.at_obj[mm], d.id_h[Dh.ten.obj(AA, BB)]);
          };
          Idx l1 = d.vcomp_sq(
              d.hcomp_sq(x1, d.id_sq_h[d.hcomp_h(comp2(mT, fT, gT), comp3(mT, fT, gT))]),
              d.vcomp_sq(
                  d.hcomp_sq(d.id_sq_h[comp1(mS, fS, gS)],
                             d.hcomp_sq(x2, d.id_sq_h[comp3(mT, fT, gT)])),
                  d.hcomp_sq(d.id_sq_h[d.hcomp_h(comp1(mS, fS, gS), comp2(mS, fS, gS))], x3)));
          sr.delta[i] = l1;
          auto inv = d.sq_v_inverse(l1);
          if (!inv) throw PreconditionError("Table 1: s delta not invertible");
          sr.delta_inv[i] = *inv;
        }
    for (Idx m = 0; m < a.M().nv(); ++m)
      for (Idx u = 0; u < d.nv(); ++u)
        for (Idx w = 0; w < d.nv(); ++w) {
          Idx i = st.t3v(m, u, w);
          Idx x1 = Dh.ten.sqr(d.id_sq_v[a.act_v(m, u)], a.nu_h->at_v[w]);
          Idx x2 = s.int_v[a.ixMD.v(m, u) * a.prodMD->nv() + a.ixMD.v(a.M().id_v[J], w)];
          Idx x3 = a.act_sq(a.Mh->runit.at_v[m], d.id_sq_v[Dh.ten.v(u, w)]);
          sr.at_v[i] = d.hcomp_sq_many({x1, x2, x3});
        }
    st.s_h = std::move(sr);
  }

  // structure modifications on their canonical frames
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
  st.has_c = true;
  auto phi = [&](Idx x, Idx y) { return a.braiding->phi_h->at_obj[a.Mten().ix.obj(x, y)]; };
  for (Idx m = 0; m < nM; ++m)
    for (Idx A = 0; A < nD; ++A) {
      st.x_[st.ix_ma(m, A)] = globular_cell_for(
          d,
          d.hcomp_h(st.t_at(m, Dh.unit, A), a.act_h(a.M().id_h[m], Dh.lunit.at_obj[A])),
          Dh.lunit.at_obj[a.act_obj(m, A)], "Table 1 row x");
      st.xp_[st.ix_ma(m, A)] = globular_cell_for(
          d,
          d.hcomp_h(st.s_at(m, A, Dh.unit), a.act_h(a.M().id_h[m], Dh.runit.at_obj[A])),
          Dh.runit.at_obj[a.act_obj(m, A)], "Table 1 row x'");
      for (Idx B = 0; B < nD; ++B)
        for (Idx C = 0; C < nD; ++C) {
          st.y_[st.ix_mabc(m, A, B, C)] = globular_cell_for(
              d,
              d.hcomp_h(st.t_at(m, Dh.ten.obj(A, B), C),
                        a.act_h(a.M().id_h[m], Dh.a_comp(A, B, C))),
              d.hcomp_h_many({Dh.a_comp(A, B, a.act_obj(m, C)),
                              Dh.ten.h(d.id_h[A], st.t_at(m, B, C)),
                              st.t_at(m, A, Dh.ten.obj(B, C))}),
              "Table 1 row y");
          st.yp_[st.ix_mabc(m, A, B, C)] = globular_cell_for(
              d,
              d.hcomp_h_many({Dh.ten.h(st.s_at(m, A, B), d.id_h[C]),
                              st.s_at(m, Dh.ten.obj(A, B), C),
                              a.act_h(a.M().id_h[m], Dh.a_comp(A, B, C))}),
              d.hcomp_h(Dh.a_comp(a.act_obj(m, A), B, C), st.s_at(m, A, Dh.ten.obj(B, C))),
              "Table 1 row y'");
          st.q_[st.ix_mabc(m, A, B, C)] = globular_cell_for(
              d,
              d.hcomp_h_many({Dh.a_comp(A, a.act_obj(m, B), C),
                              Dh.ten.h(d.id_h[A], st.s_at(m, B, C)),
                              st.t_at(m, A, Dh.ten.obj(B, C))}),
              d.hcomp_h_many({Dh.ten.h(st.t_at(m, A, B), d.id_h[C]),
                              st.s_at(m, Dh.ten.obj(A, B), C),
                              a.act_h(a.M().id_h[m], Dh.a_comp(A, B, C))}),
              "Table 1 row q");
        }
    }
  for (Idx A = 0; A < nD; ++A)
    for (Idx B = 0; B < nD; ++B) {
      st.z_[st.ix_ab(A, B)] = globular_cell_for(
          d, d.hcomp_h(Dh.ten.h(d.id_h[A], a.nu_obj(B)), st.t_at(J, A, B)),
          a.nu_obj(Dh.ten.obj(A, B)), "Table 1 row z");
      st.zp_[st.ix_ab(A, B)] = globular_cell_for(
          d, d.hcomp_h(Dh.ten.h(a.nu_obj(A), d.id_h[B]), st.s_at(J, A, B)),
          a.nu_obj(Dh.ten.obj(A, B)), "Table 1 row z'");
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
              "Table 1 row w");
          st.wp_[st.ix_mnab(m, n, A, B)] = globular_cell_for(
              d,
              d.hcomp_h_many({st.s_at(m, a.act_obj(n, A), B),
                              a.act_h(a.M().id_h[m], st.s_at(n, A, B)),
                              a.beta_obj(m, n, Dh.ten.obj(A, B))}),
              d.hcomp_h(Dh.ten.h(a.beta_obj(m, n, A), d.id_h[B]),
                        st.s_at(a.Mten().obj(m, n), A, B)),
              "Table 1 row w'");
          st.c_[st.ix_mnab(m, n, A, B)] = globular_cell_for(
              d,
              d.hcomp_h_many({st.s_at(m, A, a.act_obj(n, B)),
                              a.act_h(a.M().id_h[m], st.t_at(n, A, B)),
                              a.beta_obj(m, n, Dh.ten.obj(A, B))}),
              d.hcomp_h_many({st.t_at(n, a.act_obj(m, A), B),
                              a.act_h(a.M().id_h[n], st.s_at(m, A, B)),
                              a.beta_obj(n, m, Dh.ten.obj(A, B)),
                              a.act_h(phi(n, m), d.id_h[Dh.ten.obj(A, B)])}),
              "Table 1 row c");
        }
  return st;
}

// ---------------------------------------------------------------------------
// Table 2: a bistrong commutative action yields a lax monoidal action:
//   F2 = [s^M_{A,NB} | M (x)bar t^N_{A,B} | beta_{M,N,AB}],  iota = nu_I.

inline LaxMonoidalActionStructure bistrong_to_lax_monoidal(const StrengthBundle& st) {
  const auto& a = st.bundle;
  const auto& d = *a.D;
  if (st.orientation != Orientation::horizontal)
    throw PreconditionError("bistrong_to_lax_monoidal: horizontal orientation required");
  if (!st.has_q) throw PreconditionError("bistrength required");
  if (!st.has_c) throw PreconditionError("commutativity required");
  if (!st.t_h || !st.s_h) throw StructuralError("Table 2 needs both strengths");
  if (!a.Dh) throw PreconditionError("Table 2 needs a monoidal target");
  const auto& Dh = *a.Dh;

  LaxMonoidalActionStructure s;
  s.bundle = a;
  Idx np = a.prodMD->n_objects;
  Idx nph = a.prodMD->nh();
  Idx npv = a.prodMD->nv();
  s.int_obj.assign(static_cast<size_t>(np) * np, kNone);
  s.int_pair.assign(static_cast<size_t>(nph) * nph, kNone);
  s.int_v.assign(static_cast<size_t>(npv) * npv, kNone);
  for (Idx x = 0; x < np; ++x)
    for (Idx y = 0; y < np; ++y) {
      auto [m, A] = a.ixMD.obj_parts(x);
      auto [n, B] = a.ixMD.obj_parts(y);
      s.int_obj[x * np + y] =
          d.hcomp_h_many({st.s_at(m, A, a.act_obj(n, B)),
                          a.act_h(a.M().id_h[m], st.t_at(n, A, B)),
                          a.beta_obj(m, n, Dh.ten.obj(A, B))});
    }
  auto comp1 = [&](Idx m, Idx n, Idx A, Idx B) { return st.s_at(m, A, a.act_obj(n, B)); };
  auto comp2 = [&](Idx m, Idx n, Idx A, Idx B) {
    return a.act_h(a.M().id_h[m], st.t_at(n, A, B));
  };
  auto comp3 = [&](Idx m, Idx n, Idx A, Idx B) {
    return a.beta_obj(m, n, Dh.ten.obj(A, B));
  };
  for (Idx x = 0; x < nph; ++x)
    for (Idx y = 0; y < nph; ++y) {
      auto [mh, f] = a.ixMD.h_parts(x);
      auto [nh_, g] = a.ixMD.h_parts(y);
      Idx mS = a.M().h_src[mh], mT = a.M().h_tgt[mh];
      Idx nS = a.M().h_src[nh_], nT = a.M().h_tgt[nh_];
      Idx fS = d.h_src[f], fT = d.h_tgt[f];
      Idx gS = d.h_src[g], gT = d.h_tgt[g];
      Idx x1 = st.s_h->delta[st.t3h(mh, f, a.act_h(nh_, g))];
      Idx x2 = a.act_sq(a.M().id_sq_h[mh], st.t_h->delta[st.t3h(nh_, f, g)]);
      Idx x3 = a.beta_h->delta[a.ixMMD.h(a.Mten().ix.h(mh, nh_), Dh.ten.h(f, g))];
      Idx l1 = d.vcomp_sq(
          d.hcomp_sq(x1, d.id_sq_h[d.hcomp_h(comp2(mT, nT, fT, gT), comp3(mT, nT, fT, gT))]),
          d.vcomp_sq(
              d.hcomp_sq(d.id_sq_h[comp1(mS, nS, fS, gS)],
                         d.hcomp_sq(x2, d.id_sq_h[comp3(mT, nT, fT, gT)])),
              d.hcomp_sq(d.id_sq_h[d.hcomp_h(comp1(mS, nS, fS, gS), comp2(mS, nS, fS, gS))],
                         x3)));
      s.int_pair[x * nph + y] = l1;
    }
  for (Idx x = 0; x < npv; ++x)
    for (Idx y = 0; y < npv; ++y) {
      auto [mu, u] = a.ixMD.v_parts(x);
      auto [nv_, w] = a.ixMD.v_parts(y);
      Idx x1 = st.s_h->at_v[st.t3v(mu, u, a.act_v(nv_, w))];
      Idx x2 = a.act_sq(a.M().id_sq_v[mu], st.t_h->at_v[st.t3v(nv_, u, w)]);
      Idx x3 = a.beta_h->at_v[a.ixMMD.v(a.Mten().ix.v(mu, nv_), Dh.ten.v(u, w))];
      s.int_v[x * npv + y] = d.hcomp_sq_many({x1, x2, x3});
    }
  s.iota = a.nu_obj(Dh.unit);

  // beta2 / beta0 / nu2 / nu0 on the canonical frames
  Idx nM = st.nM(), nD = st.nD();
  Idx nt = nM * nM * nD;
  auto triple = [&](Idx m, Idx n, Idx aa) { return (m * nM + n) * nD + aa; };
  s.beta2.assign(static_cast<size_t>(nt) * nt, kNone);
  if (!a.braiding || !a.braiding->phi_h)
    throw PreconditionError("Table 2 requires a braiding for beta2");
  auto phi = [&](Idx x, Idx y) { return a.braiding->phi_h->at_obj[a.Mten().ix.obj(x, y)]; };
  auto int_at = [&](Idx m, Idx A, Idx n, Idx B) {
    return s.int_obj[a.ixMD.obj(m, A) * np + a.ixMD.obj(n, B)];
  };
  for (Idx m = 0; m < nM; ++m)
    for (Idx n = 0; n < nM; ++n)
      for (Idx aa = 0; aa < nD; ++aa)
        for (Idx p = 0; p < nM; ++p)
          for (Idx q = 0; q < nM; ++q)
            for (Idx bb = 0; bb < nD; ++bb) {
              Idx top = d.hcomp_h_many(
                  {int_at(m, a.act_obj(n, aa), p, a.act_obj(q, bb)),
                   a.act_h(a.M().id_h[a.Mten().obj(m, p)], int_at(n, aa, q, bb)),
                   a.beta_obj(a.Mten().obj(m, p), a.Mten().obj(n, q), Dh.ten.obj(aa, bb))});
              Idx bot = d.hcomp_h_many(
                  {Dh.ten.h(a.beta_obj(m, n, aa), a.beta_obj(p, q, bb)),
                   int_at(a.Mten().obj(m, n), aa, a.Mten().obj(p, q), bb),
                   a.act_h(a.Mten().h(a.Mten().h(a.M().id_h[m], phi(n, p)), a.M().id_h[q]),
                           d.id_h[Dh.ten.obj(aa, bb)])});
              s.beta2[triple(m, n, aa) * nt + triple(p, q, bb)] =
                  globular_cell_for(d, top, bot, "Table 2 row beta2");
            }
  {
    Idx bot = d.hcomp_h_many({s.iota, a.act_h(a.M().id_h[a.Munit()], s.iota),
                              a.beta_obj(a.Munit(), a.Munit(), Dh.unit),
                              a.act_h(a.Mh->lunit.at_obj[a.Munit()], d.id_h[Dh.unit])});
    s.beta0 = globular_cell_for(d, s.iota, bot, "Table 2 row beta0");
  }
  s.nu2.assign(static_cast<size_t>(nD) * nD, kNone);
  for (Idx aa = 0; aa < nD; ++aa)
    for (Idx bb = 0; bb < nD; ++bb) {
      Idx ab = Dh.ten.obj(aa, bb);
      Idx top = a.nu_obj(ab);
      Idx bot = d.hcomp_h_many({Dh.ten.h(a.nu_obj(aa), a.nu_obj(bb)),
                                int_at(a.Munit(), aa, a.Munit(), bb),
                                a.act_h(a.Mh->lunit.at_obj[a.Munit()], d.id_h[ab])});
      s.nu2[aa * nD + bb] = globular_cell_for(d, top, bot, "Table 2 row nu2");
    }
  s.nu0 = d.id_sq_h[s.iota];
  return s;
}

}  // namespace dblcat
