#pragma once

#include "dblcat/action.hpp"

namespace dblcat {

// Canonical self-action of a horizontally monoidal double category: the tensor
// acting on its own category, beta and nu the (inverted) structure maps. For
// strict structures everything is on the nose.
inline ActionBundle self_action(std::shared_ptr<HorizontalMonoidalStructure> Dh) {
  ActionBundle a;
  a.orientation = Orientation::horizontal;
  a.lax = true;
  a.Mh = Dh;
  a.D = Dh->D;
  a.Dh = Dh;
  a.prodMD = Dh->ten.prod;
  a.ixMD = Dh->ten.ix;
  a.F = Dh->ten.F;
  a.prodMMD = Dh->triple.prod3;
  a.ixMMD = Dh->triple.ix3;

  const auto& d = *a.D;
  auto [S, T] = beta_boundaries(a);
  HorizontalTransformation beta;
  beta.name = "beta";
  beta.variant = HVariant::pseudo;
  beta.F = S;
  beta.G = T;
  beta.at_obj.resize(a.prodMMD->n_objects);
  beta.at_v.resize(a.prodMMD->nv());
  beta.delta.resize(a.prodMMD->nh());
  beta.delta_inv.resize(a.prodMMD->nh());
  // strict structures: beta components are the inverse associators = identities
  for (Idx o = 0; o < a.prodMMD->n_objects; ++o) {
    if (S.obj_map[o] != T.obj_map[o])
      throw PreconditionError("self_action: tensor is not strictly associative");
    beta.at_obj[o] = d.id_h[S.obj_map[o]];
  }
  for (Idx u = 0; u < a.prodMMD->nv(); ++u) beta.at_v[u] = d.id_sq_v[S.v_map[u]];
  for (Idx f = 0; f < a.prodMMD->nh(); ++f) {
    Idx c = d.hcomp_h(S.h_map[f], beta.at_obj[a.prodMMD->h_tgt[f]]);
    beta.delta[f] = d.id_sq_h[c];
    beta.delta_inv[f] = beta.delta[f];
  }
  a.beta_h = std::move(beta);

  auto [Sn, Tn] = nu_boundaries(a);
  HorizontalTransformation nu;
  nu.name = "nu";
  nu.variant = HVariant::pseudo;
  nu.F = Sn;
  nu.G = Tn;
  nu.at_obj.resize(d.n_objects);
  nu.at_v.resize(d.nv());
  nu.delta.resize(d.nh());
  nu.delta_inv.resize(d.nh());
  for (Idx o = 0; o < d.n_objects; ++o) {
    if (Sn.obj_map[o] != Tn.obj_map[o])
      throw PreconditionError("self_action: unit is not strict");
    nu.at_obj[o] = d.id_h[o];
  }
  for (Idx u = 0; u < d.nv(); ++u) nu.at_v[u] = d.id_sq_v[u];
  for (Idx f = 0; f < d.nh(); ++f) {
    nu.delta[f] = d.id_sq_h[f];
    nu.delta_inv[f] = nu.delta[f];
  }
  a.nu_h = std::move(nu);

  Idx nM = a.M().n_objects, nD = d.n_objects;
  a.pt.assign(static_cast<size_t>(nM) * nM * nM * nD, kNone);
  a.lt.assign(static_cast<size_t>(nM) * nD, kNone);
  a.mt.assign(static_cast<size_t>(nM) * nD, kNone);
  for (Idx M1 = 0; M1 < nM; ++M1)
    for (Idx E = 0; E < nD; ++E) {
      Idx me = a.act_obj(M1, E);
      a.lt[M1 * nD + E] = d.id_sq_h[d.id_h[me]];
      a.mt[M1 * nD + E] = d.id_sq_h[d.id_h[me]];
      for (Idx N = 0; N < nM; ++N)
        for (Idx P = 0; P < nM; ++P)
          a.pt[((M1 * nM + N) * nM + P) * nD + E] =
              d.id_sq_h[d.hcomp_h(a.act_h(a.M().id_h[M1], a.beta_obj(N, P, E)),
                                  a.beta_obj(M1, a.Mten().obj(N, P), E))];
    }
  return a;
}

// Terminal acting category: a double monad presented as an action. The monad
// is given by its functor tables plus mu/nu component hcells with all laws
// holding on the nose (thin hosts make this automatic).
inline ActionBundle monad_as_action(DcPtr D, const LaxDoubleFunctor& T,
                                    const std::vector<Idx>& mu_comp,
                                    const std::vector<Idx>& eta_comp) {
  auto term = share(terminal());
  ActionBundle a;
  a.orientation = Orientation::horizontal;
  a.lax = true;
  a.Mh = std::make_shared<HorizontalMonoidalStructure>(
      identity_horizontal_monoidal(term, additive_tensor(term), 0));
  a.D = D;
  a.prodMD = share(product(*term, *D));
  a.ixMD = product_indexing(*term, *D);
  const auto& d = *D;
  // F(*, E) = T(E)
  a.F.name = "monad-" + T.name;
  a.F.variant = T.variant;
  a.F.src = a.prodMD;
  a.F.dst = D;
  a.F.obj_map.resize(a.prodMD->n_objects);
  for (Idx e = 0; e < d.n_objects; ++e) a.F.obj_map[a.ixMD.obj(0, e)] = T.on_obj(e);
  a.F.h_map.resize(a.prodMD->nh());
  for (Idx e = 0; e < d.nh(); ++e) a.F.h_map[a.ixMD.h(0, e)] = T.on_h(e);
  a.F.v_map.resize(a.prodMD->nv());
  for (Idx e = 0; e < d.nv(); ++e) a.F.v_map[a.ixMD.v(0, e)] = T.on_v(e);
  a.F.sq_map.resize(a.prodMD->ns());
  for (Idx e = 0; e < d.ns(); ++e) a.F.sq_map[a.ixMD.s(0, e)] = T.on_sq(e);

  a.prodMMD = share(product(*a.Mh->ten.prod, *D));
  a.ixMMD = product_indexing(*a.Mh->ten.prod, *D);
  auto [S, Tb] = beta_boundaries(a);
  HorizontalTransformation beta;
  beta.name = "mu";
  beta.variant = HVariant::lax;
  beta.delta_oplax = true;
  beta.F = S;
  beta.G = Tb;
  beta.at_obj.resize(a.prodMMD->n_objects);
  for (Idx e = 0; e < d.n_objects; ++e) beta.at_obj[a.ixMMD.obj(0, e)] = mu_comp[e];
  beta.at_v.resize(a.prodMMD->nv());
  for (Idx u = 0; u < d.nv(); ++u) {
    auto w = find_square(d, SquareFrame{beta.at_obj[a.ixMMD.obj(0, d.v_src[u])],
                                        beta.at_obj[a.ixMMD.obj(0, d.v_tgt[u])],
                                        S.v_map[a.ixMMD.v(0, u)], Tb.v_map[a.ixMMD.v(0, u)]});
    if (!w) throw PreconditionError("monad_as_action: missing naturality square for mu");
    beta.at_v[a.ixMMD.v(0, u)] = *w;
  }
  beta.delta.resize(a.prodMMD->nh());
  for (Idx f = 0; f < d.nh(); ++f) {
    Idx A = d.h_src[f], B = d.h_tgt[f];
    Idx top = d.hcomp_h(S.h_map[a.ixMMD.h(0, f)], beta.at_obj[a.ixMMD.obj(0, B)]);
    Idx bot = d.hcomp_h(beta.at_obj[a.ixMMD.obj(0, A)], Tb.h_map[a.ixMMD.h(0, f)]);
    auto w = find_square(d, SquareFrame{top, bot, d.id_v[d.h_src[top]], d.id_v[d.h_tgt[top]]});
    if (!w) throw PreconditionError("monad_as_action: missing oplax cell for mu");
    beta.delta[a.ixMMD.h(0, f)] = *w;
  }
  a.beta_h = std::move(beta);

  auto [Sn, Tn] = nu_boundaries(a);
  HorizontalTransformation nu;
  nu.name = "eta";
  nu.variant = HVariant::lax;
  nu.F = Sn;
  nu.G = Tn;
  nu.at_obj = eta_comp;
  nu.at_v.resize(d.nv());
  for (Idx u = 0; u < d.nv(); ++u) {
    auto w = find_square(d, SquareFrame{eta_comp[d.v_src[u]], eta_comp[d.v_tgt[u]], u,
                                        Tn.v_map[u]});
    if (!w) throw PreconditionError("monad_as_action: missing naturality square for eta");
    nu.at_v[u] = *w;
  }
  nu.delta.resize(d.nh());
  for (Idx f = 0; f < d.nh(); ++f) {
    Idx top = d.hcomp_h(f, eta_comp[d.h_tgt[f]]);
    Idx bot = d.hcomp_h(eta_comp[d.h_src[f]], Tn.h_map[f]);
    auto w = find_square(d, SquareFrame{top, bot, d.id_v[d.h_src[top]], d.id_v[d.h_tgt[top]]});
    if (!w) throw PreconditionError("monad_as_action: missing oplax cell for eta");
    nu.delta[f] = *w;
  }
  a.nu_h = std::move(nu);

  Idx nD = d.n_objects;
  a.pt.assign(static_cast<size_t>(nD), kNone);
  a.lt.assign(static_cast<size_t>(nD), kNone);
  a.mt.assign(static_cast<size_t>(nD), kNone);
  for (Idx E = 0; E < nD; ++E) {
    Idx me = a.act_obj(0, E);
    {
      Idx top = d.hcomp_h(a.act_h(0 /* id hcell of * */, a.beta_obj(0, 0, E)),
                          a.beta_obj(0, 0, E * 0));
      (void)top;
    }
    Idx pt_top = d.hcomp_h(a.act_h(a.M().id_h[0], a.beta_obj(0, 0, E)), a.beta_obj(0, 0, E));
    Idx pt_bot = d.hcomp_h_many({a.beta_obj(0, 0, a.act_obj(0, E)), a.beta_obj(0, 0, E),
                                 a.act_h(a.Mh->a_comp(0, 0, 0), d.id_h[E])});
    auto wp = find_square(d, SquareFrame{pt_top, pt_bot, d.id_v[d.h_src[pt_top]],
                                         d.id_v[d.h_tgt[pt_top]]});
    if (!wp) throw PreconditionError("monad_as_action: associativity cell missing");
    a.pt[E] = *wp;
    Idx lt_top = d.hcomp_h_many({a.nu_obj(me), a.beta_obj(0, 0, E),
                                 a.act_h(a.Mh->lunit.at_obj[0], d.id_h[E])});
    auto wl = find_square(d, SquareFrame{lt_top, d.id_h[me], d.id_v[me], d.id_v[me]});
    if (!wl) throw PreconditionError("monad_as_action: left unit cell missing");
    a.lt[E] = *wl;
    Idx mt_top = d.hcomp_h_many({a.act_h(a.M().id_h[0], a.nu_obj(E)), a.beta_obj(0, 0, E),
                                 a.act_h(a.Mh->runit.at_obj[0], d.id_h[E])});
    auto wm = find_square(d, SquareFrame{mt_top, d.id_h[me], d.id_v[me], d.id_v[me]});
    if (!wm) throw PreconditionError("monad_as_action: middle unit cell missing");
    a.mt[E] = *wm;
  }
  return a;
}

// ---------------------------------------------------------------------------
// Lax monoidal actions: the interchanger cocycle plus the beta/nu monoidality
// witnesses of Rem. hor-modif.

struct LaxMonoidalActionStructure {
  ActionBundle bundle;
  std::vector<Idx> int_obj;   // [(M,A) x (N,B)]: hcell (MA)(NB) -> (MN)(AB)
  std::vector<Idx> int_pair;  // squares at pairs of (MxD)-hcells
  std::vector<Idx> int_v;     // squares at pairs of (MxD)-vcells
  Idx iota = kNone;           // hcell I -> J(x)I
  std::vector<Idx> beta2;     // [(t1,t2)] with t = (M*nM+N)*nD+A
  Idx beta0 = kNone;
  std::vector<Idx> nu2;       // [A*nD+B]
  Idx nu0 = kNone;

  Idx pair_obj(Idx m, Idx a) const {
    return bundle.ixMD.obj(m, a);
  }
  Idx int_at(Idx m, Idx a, Idx n, Idx b) const {
    Idx np = bundle.prodMD->n_objects;
    return int_obj[pair_obj(m, a) * np + pair_obj(n, b)];
  }
};

// Identity lax monoidal structure on a strict self-action.
inline LaxMonoidalActionStructure identity_lax_monoidal_action(ActionBundle bundle,
                                                               Braiding braid) {
  LaxMonoidalActionStructure s;
  bundle.braiding = std::move(braid);
  s.bundle = std::move(bundle);
  const auto& a = s.bundle;
  const auto& d = *a.D;
  if (!a.Dh) throw PreconditionError("lax monoidal action needs a monoidal target");
  Idx np = a.prodMD->n_objects;
  s.int_obj.assign(static_cast<size_t>(np) * np, kNone);
  Idx nph = a.prodMD->nh();
  s.int_pair.assign(static_cast<size_t>(nph) * nph, kNone);
  for (Idx x = 0; x < np; ++x)
    for (Idx y = 0; y < np; ++y) {
      auto [m, aa] = a.ixMD.obj_parts(x);
      auto [n, bb] = a.ixMD.obj_parts(y);
      Idx src = a.Dh->ten.obj(a.act_obj(m, aa), a.act_obj(n, bb));
      Idx dst = a.act_obj(a.Mten().obj(m, n), a.Dh->ten.obj(aa, bb));
      if (src != dst)
        throw PreconditionError("identity_lax_monoidal_action: interchange is not strict");
      s.int_obj[x * np + y] = d.id_h[src];
    }
  for (Idx x = 0; x < nph; ++x)
    for (Idx y = 0; y < nph; ++y) {
      Idx top = a.Dh->ten.h(a.F.on_h(x), a.F.on_h(y));
      Idx tgt = s.int_obj[a.prodMD->h_tgt[x] * np + a.prodMD->h_tgt[y]];
      s.int_pair[x * nph + y] = d.id_sq_h[d.hcomp_h(top, tgt)];
    }
  Idx npv = a.prodMD->nv();
  s.int_v.assign(static_cast<size_t>(npv) * npv, kNone);
  for (Idx x = 0; x < npv; ++x)
    for (Idx y = 0; y < npv; ++y) {
      Idx top = s.int_obj[a.prodMD->v_src[x] * np + a.prodMD->v_src[y]];
      Idx bot = s.int_obj[a.prodMD->v_tgt[x] * np + a.prodMD->v_tgt[y]];
      Idx lft = a.Dh->ten.v(a.F.on_v(x), a.F.on_v(y));
      auto [m1, u1] = a.ixMD.v_parts(x);
      auto [m2, u2] = a.ixMD.v_parts(y);
      Idx rgt = a.act_v(a.Mten().v(m1, m2), a.Dh->ten.v(u1, u2));
      auto w = find_square(d, SquareFrame{top, bot, lft, rgt});
      if (!w) throw PreconditionError("identity_lax_monoidal_action: missing interchanger square");
      s.int_v[x * npv + y] = *w;
    }
  s.iota = d.id_h[a.Dh->unit];
  Idx nM = a.M().n_objects, nD = d.n_objects;
  Idx nt = nM * nM * nD;
  s.beta2.assign(static_cast<size_t>(nt) * nt, kNone);
  auto triple = [&](Idx m, Idx n, Idx aa) { return (m * nM + n) * nD + aa; };
  for (Idx m = 0; m < nM; ++m)
    for (Idx n = 0; n < nM; ++n)
      for (Idx aa = 0; aa < nD; ++aa)
        for (Idx p = 0; p < nM; ++p)
          for (Idx q = 0; q < nM; ++q)
            for (Idx bb = 0; bb < nD; ++bb) {
              // top of the beta2 cell: F2 / (MP)F2 / beta
              Idx mna = a.act_obj(m, a.act_obj(n, aa));
              Idx pqb = a.act_obj(p, a.act_obj(q, bb));
              Idx t1 = s.int_at(m, a.act_obj(n, aa), p, a.act_obj(q, bb));
              Idx t2 = a.act_h(a.M().id_h[a.Mten().obj(m, p)], s.int_at(n, aa, q, bb));
              Idx t3 = a.beta_obj(a.Mten().obj(m, p), a.Mten().obj(n, q),
                                  a.Dh->ten.obj(aa, bb));
              (void)mna;
              (void)pqb;
              Idx top = d.hcomp_h_many({t1, t2, t3});
              s.beta2[triple(m, n, aa) * nt + triple(p, q, bb)] = d.id_sq_h[top];
            }
  s.beta0 = d.id_sq_h[d.hcomp_h_many(
      {s.iota, a.act_h(a.M().id_h[a.Munit()], s.iota),
       a.beta_obj(a.Munit(), a.Munit(), a.Dh->unit),
       a.act_h(a.Mh->lunit.at_obj[a.Munit()], d.id_h[a.Dh->unit])})];
  s.nu2.assign(static_cast<size_t>(nD) * nD, kNone);
  for (Idx aa = 0; aa < nD; ++aa)
    for (Idx bb = 0; bb < nD; ++bb)
      s.nu2[aa * nD + bb] = d.id_sq_h[a.nu_obj(a.Dh->ten.obj(aa, bb))];
  s.nu0 = d.id_sq_h[s.iota];
  return s;
}

inline ValidationReport check_lax_monoidal_action(const LaxMonoidalActionStructure& s,
                                                  int max_per_law = 10) {
  const auto& a = s.bundle;
  const auto& d = *a.D;
  if (a.orientation == Orientation::horizontal && !a.braiding)
    throw PreconditionError("braiding required for a lax monoidal horizontal action");
  if (!a.Dh) throw PreconditionError("lax monoidal action needs a monoidal target");
  ValidationReport rep;
  rep.max_per_law = max_per_law;
  rep.merge(check_action(a), "action");
  auto sh = [&](Idx i) { return std::to_string(i); };

  Idx np = a.prodMD->n_objects;
  Idx nph = a.prodMD->nh();
  if (s.int_obj.size() != static_cast<size_t>(np) * np ||
      s.int_pair.size() != static_cast<size_t>(nph) * nph)
    throw StructuralError("interchanger tables wrongly sized");

  // interchanger frames
  for (Idx x = 0; x < np; ++x)
    for (Idx y = 0; y < np; ++y) {
      auto [m, aa] = a.ixMD.obj_parts(x);
      auto [n, bb] = a.ixMD.obj_parts(y);
      Idx h = s.int_obj[x * np + y];
      Idx src = a.Dh->ten.obj(a.act_obj(m, aa), a.act_obj(n, bb));
      Idx dst = a.act_obj(a.Mten().obj(m, n), a.Dh->ten.obj(aa, bb));
      if (d.h_src[h] != src || d.h_tgt[h] != dst)
        rep.add("int-frame", "(" + sh(x) + "," + sh(y) + ")", d.show(Sort::HCell, h), "");
    }
  for (Idx x = 0; x < nph; ++x)
    for (Idx y = 0; y < nph; ++y) {
      Idx q = s.int_pair[x * nph + y];
      Idx top = d.hcomp_h(a.Dh->ten.h(a.F.on_h(x), a.F.on_h(y)),
                          s.int_obj[a.prodMD->h_tgt[x] * np + a.prodMD->h_tgt[y]]);
      Idx bot = d.hcomp_h(s.int_obj[a.prodMD->h_src[x] * np + a.prodMD->h_src[y]],
                          a.act_h(a.Mten().h(a.ixMD.h_parts(x).first, a.ixMD.h_parts(y).first),
                                  a.Dh->ten.h(a.ixMD.h_parts(x).second, a.ixMD.h_parts(y).second)));
      std::string at = "(" + sh(x) + "," + sh(y) + ")";
      if (!(d.sq[q] == SquareFrame{top, bot, d.id_v[d.h_src[top]], d.id_v[d.h_tgt[top]]}))
        rep.add("int-square-frame", at, d.show_frame(q), "");
      else if (!d.sq_v_inverse(q))
        rep.add("int-square-invertible", at, sh(q), "");
    }

  // interchanger squares at vcell pairs
  Idx npv = a.prodMD->nv();
  if (s.int_v.size() != static_cast<size_t>(npv) * npv)
    throw StructuralError("interchanger vcell table wrongly sized");
  for (Idx x = 0; x < npv; ++x)
    for (Idx y = 0; y < npv; ++y) {
      Idx w = s.int_v[x * npv + y];
      Idx top = s.int_obj[a.prodMD->v_src[x] * np + a.prodMD->v_src[y]];
      Idx bot = s.int_obj[a.prodMD->v_tgt[x] * np + a.prodMD->v_tgt[y]];
      Idx lft = a.Dh->ten.v(a.F.on_v(x), a.F.on_v(y));
      auto [m1, u1] = a.ixMD.v_parts(x);
      auto [m2, u2] = a.ixMD.v_parts(y);
      Idx rgt = a.act_v(a.Mten().v(m1, m2), a.Dh->ten.v(u1, u2));
      if (!(d.sq[w] == SquareFrame{top, bot, lft, rgt}))
        rep.add("int-vcell-frame", "(" + sh(x) + "," + sh(y) + ")", d.show_frame(w), "");
    }

  // iota
  if (s.iota == kNone || d.h_src[s.iota] != a.Dh->unit ||
      d.h_tgt[s.iota] != a.act_obj(a.Munit(), a.Dh->unit))
    rep.add("iota-frame", "unit", s.iota == kNone ? "missing" : d.show(Sort::HCell, s.iota), "");

  // beta2 / beta0 / nu2 / nu0 frames and invertibility (Rem. hor-modif shapes)
  Idx nM = a.M().n_objects, nD = d.n_objects;
  Idx nt = nM * nM * nD;
  auto triple = [&](Idx m, Idx n, Idx aa) { return (m * nM + n) * nD + aa; };
  if (s.beta2.size() != static_cast<size_t>(nt) * nt ||
      s.nu2.size() != static_cast<size_t>(nD) * nD)
    throw StructuralError("beta2/nu2 tables wrongly sized");
  for (Idx m = 0; m < nM; ++m)
    for (Idx n = 0; n < nM; ++n)
      for (Idx aa = 0; aa < nD; ++aa)
        for (Idx p = 0; p < nM; ++p)
          for (Idx q = 0; q < nM; ++q)
            for (Idx bb = 0; bb < nD; ++bb) {
              Idx w = s.beta2[triple(m, n, aa) * nt + triple(p, q, bb)];
              Idx top = d.hcomp_h_many(
                  {s.int_at(m, a.act_obj(n, aa), p, a.act_obj(q, bb)),
                   a.act_h(a.M().id_h[a.Mten().obj(m, p)], s.int_at(n, aa, q, bb)),
                   a.beta_obj(a.Mten().obj(m, p), a.Mten().obj(n, q), a.Dh->ten.obj(aa, bb))});
              Idx bot = d.hcomp_h_many(
                  {a.Dh->ten.h(a.beta_obj(m, n, aa), a.beta_obj(p, q, bb)),
                   s.int_at(a.Mten().obj(m, n), aa, a.Mten().obj(p, q), bb),
                   a.act_h(/* 1h-component of the M-cocycle: Id (x) Phi (x) Id */
                           a.Mten().h(a.Mten().h(a.M().id_h[m],
                                                 a.braiding->phi_h->at_obj[a.Mten().ix.obj(n, p)]),
                                      a.M().id_h[q]),
                           d.id_h[a.Dh->ten.obj(aa, bb)])});
              std::string at = "((" + sh(m) + "," + sh(n) + "," + sh(aa) + "),(" + sh(p) + "," +
                               sh(q) + "," + sh(bb) + "))";
              if (!(d.sq[w] == SquareFrame{top, bot, d.id_v[d.h_src[top]], d.id_v[d.h_tgt[top]]}))
                rep.add("beta2-frame", at, d.show_frame(w), "");
              else if (!d.sq_v_inverse(w))
                rep.add("beta2-invertible", at, sh(w), "");
            }
  for (Idx aa = 0; aa < nD; ++aa)
    for (Idx bb = 0; bb < nD; ++bb) {
      Idx w = s.nu2[aa * nD + bb];
      Idx ab = a.Dh->ten.obj(aa, bb);
      Idx top = d.hcomp_h_many({a.Dh->ten.h(a.nu_obj(aa), a.nu_obj(bb)),
                                s.int_at(a.Munit(), aa, a.Munit(), bb),
                                a.act_h(a.Mh->lunit.at_obj[a.Munit()], d.id_h[ab])});
      Idx bot = a.nu_obj(ab);
      std::string at = "(" + sh(aa) + "," + sh(bb) + ")";
      if (!(d.sq[w] == SquareFrame{bot, top, d.id_v[d.h_src[bot]], d.id_v[d.h_tgt[bot]]}) &&
          !(d.sq[w] == SquareFrame{top, bot, d.id_v[d.h_src[top]], d.id_v[d.h_tgt[top]]}))
        rep.add("nu2-frame", at, d.show_frame(w), "");
      else if (!d.sq_v_inverse(w))
        rep.add("nu2-invertible", at, sh(w), "");
    }
  {
    Idx w = s.beta0;
    Idx bot = d.hcomp_h_many({s.iota, a.act_h(a.M().id_h[a.Munit()], s.iota),
                              a.beta_obj(a.Munit(), a.Munit(), a.Dh->unit),
                              a.act_h(a.Mh->lunit.at_obj[a.Munit()], d.id_h[a.Dh->unit])});
    if (w == kNone ||
        !(d.sq[w] == SquareFrame{s.iota, bot, d.id_v[d.h_src[s.iota]], d.id_v[d.h_tgt[s.iota]]}))
      if (w == kNone || !(d.sq[w] == SquareFrame{bot, s.iota, d.id_v[d.h_src[bot]],
                                                 d.id_v[d.h_tgt[bot]]}))
        rep.add("beta0-frame", "unit", w == kNone ? "missing" : d.show_frame(w), "");
  }
  {
    Idx w = s.nu0;
    Idx nuI = a.nu_obj(a.Dh->unit);
    if (w == kNone || !(d.sq[w] == SquareFrame{s.iota, nuI, d.id_v[d.h_src[s.iota]],
                                               d.id_v[d.h_tgt[s.iota]]}))
      if (w == kNone ||
          !(d.sq[w] == SquareFrame{nuI, s.iota, d.id_v[d.h_src[nuI]], d.id_v[d.h_tgt[nuI]]}))
        rep.add("nu0-frame", "unit", w == kNone ? "missing" : d.show_frame(w), "");
  }
  return rep;
}

}  // namespace dblcat
