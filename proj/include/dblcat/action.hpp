#pragma once

#include "dblcat/moncells.hpp"

namespace dblcat {

// ---------------------------------------------------------------------------
// Actions of a monoidal double category M on D. Constraints are stored in the
// monad-like orientation throughout:
//   beta:  -(x)(-(x)-)  =>  (-(x)-)(x)-      (inverse associator direction)
//   nu:    Id           =>  J(x)-            (inverse unitor direction)
// "proper" bundles have invertible beta/nu; "lax" bundles need no inverses.

struct ActionBundle {
  Orientation orientation = Orientation::horizontal;
  bool lax = true;

  // acting category with its monoidal structure (exactly one set per orientation)
  std::shared_ptr<HorizontalMonoidalStructure> Mh;
  std::shared_ptr<VerticalMonoidalStructure> Mv;
  std::optional<Braiding> braiding;

  DcPtr D;
  std::shared_ptr<HorizontalMonoidalStructure> Dh;  // optional monoidal structure on D
  std::shared_ptr<VerticalMonoidalStructure> Dv;

  // F = (x)-bar : M x D -> D
  DcPtr prodMD;
  ProductIndexing ixMD;
  LaxDoubleFunctor F;

  // source of beta: (M x M) x D, cells only when large
  DcPtr prodMMD;
  ProductIndexing ixMMD;  // (pair in M x M, object in D)
  std::optional<HorizontalTransformation> beta_h, nu_h;
  std::optional<VerticalTransformation> beta_v, nu_v;

  // p-tilde / l-tilde / m-tilde components in the monad-action form; identity
  // vertically-globular cells are implicit in the vertical orientation
  std::vector<Idx> pt;  // [(M*nM+N)*nM+P]*nD + E
  std::vector<Idx> lt;  // M*nD + E
  std::vector<Idx> mt;  // M*nD + E

  const DoubleCategory& M() const { return Mh ? *Mh->D : *Mv->D; }
  const TensorData& Mten() const { return Mh ? Mh->ten : Mv->ten; }
  Idx Munit() const { return Mh ? Mh->unit : Mv->unit; }

  Idx act_obj(Idx m, Idx e) const { return F.on_obj(ixMD.obj(m, e)); }
  Idx act_h(Idx m, Idx e) const { return F.on_h(ixMD.h(m, e)); }
  Idx act_v(Idx m, Idx e) const { return F.on_v(ixMD.v(m, e)); }
  Idx act_sq(Idx m, Idx e) const { return F.on_sq(ixMD.s(m, e)); }

  Idx beta_obj(Idx m, Idx n, Idx e) const {
    Idx i = ixMMD.obj(Mten().ix.obj(m, n), e);
    return beta_h ? beta_h->at_obj[i] : beta_v->at_obj[i];
  }
  Idx nu_obj(Idx e) const { return nu_h ? nu_h->at_obj[e] : nu_v->at_obj[e]; }

  Idx pt_at(Idx m, Idx n, Idx p, Idx e) const {
    Idx nM = M().n_objects;
    return pt[((m * nM + n) * nM + p) * D->n_objects + e];
  }
  Idx lt_at(Idx m, Idx e) const { return lt[m * D->n_objects + e]; }
  Idx mt_at(Idx m, Idx e) const { return mt[m * D->n_objects + e]; }
};

// Boundary functors of beta over (M x M) x D.
inline std::pair<LaxDoubleFunctor, LaxDoubleFunctor> beta_boundaries(const ActionBundle& a) {
  const auto& m = a.M();
  const auto& d = *a.D;
  const TensorData& mt = a.Mten();
  LaxDoubleFunctor S, T;  // S: M(NE), T: (MN)E
  S.name = "-(x)(-(x)-)";
  T.name = "(-(x)-)(x)-";
  S.src = T.src = a.prodMMD;
  S.dst = T.dst = a.D;
  S.obj_map.resize(a.prodMMD->n_objects);
  T.obj_map.resize(a.prodMMD->n_objects);
  for (Idx mn = 0; mn < mt.prod->n_objects; ++mn)
    for (Idx e = 0; e < d.n_objects; ++e) {
      auto [x, y] = mt.ix.obj_parts(mn);
      S.obj_map[a.ixMMD.obj(mn, e)] = a.act_obj(x, a.act_obj(y, e));
      T.obj_map[a.ixMMD.obj(mn, e)] = a.act_obj(mt.obj(x, y), e);
    }
  S.h_map.resize(a.prodMMD->nh());
  T.h_map.resize(a.prodMMD->nh());
  for (Idx mn = 0; mn < mt.prod->nh(); ++mn)
    for (Idx e = 0; e < d.nh(); ++e) {
      auto [x, y] = mt.ix.h_parts(mn);
      S.h_map[a.ixMMD.h(mn, e)] = a.act_h(x, a.act_h(y, e));
      T.h_map[a.ixMMD.h(mn, e)] = a.act_h(mt.h(x, y), e);
    }
  S.v_map.resize(a.prodMMD->nv());
  T.v_map.resize(a.prodMMD->nv());
  for (Idx mn = 0; mn < mt.prod->nv(); ++mn)
    for (Idx e = 0; e < d.nv(); ++e) {
      auto [x, y] = mt.ix.v_parts(mn);
      S.v_map[a.ixMMD.v(mn, e)] = a.act_v(x, a.act_v(y, e));
      T.v_map[a.ixMMD.v(mn, e)] = a.act_v(mt.v(x, y), e);
    }
  S.sq_map.resize(a.prodMMD->ns());
  T.sq_map.resize(a.prodMMD->ns());
  for (Idx mn = 0; mn < mt.prod->ns(); ++mn)
    for (Idx e = 0; e < d.ns(); ++e) {
      auto [x, y] = mt.ix.s_parts(mn);
      S.sq_map[a.ixMMD.s(mn, e)] = a.act_sq(x, a.act_sq(y, e));
      T.sq_map[a.ixMMD.s(mn, e)] = a.act_sq(mt.sqr(x, y), e);
    }
  return {S, T};
}

inline std::pair<LaxDoubleFunctor, LaxDoubleFunctor> nu_boundaries(const ActionBundle& a) {
  const auto& d = *a.D;
  LaxDoubleFunctor S = identity_functor(a.D);
  LaxDoubleFunctor T;
  T.name = "J(x)-";
  T.src = a.D;
  T.dst = a.D;
  Idx J = a.Munit();
  const auto& m = a.M();
  T.obj_map.resize(d.n_objects);
  for (Idx e = 0; e < d.n_objects; ++e) T.obj_map[e] = a.act_obj(J, e);
  T.h_map.resize(d.nh());
  for (Idx e = 0; e < d.nh(); ++e) T.h_map[e] = a.act_h(m.id_h[J], e);
  T.v_map.resize(d.nv());
  for (Idx e = 0; e < d.nv(); ++e) T.v_map[e] = a.act_v(m.id_v[J], e);
  T.sq_map.resize(d.ns());
  for (Idx e = 0; e < d.ns(); ++e) T.sq_map[e] = a.act_sq(m.id_sq_h[m.id_h[J]], e);
  return {S, T};
}

// ---------------------------------------------------------------------------
// Schema binder over an action bundle (horizontal orientation).

struct ActionBinder : SchemaBinder {
  const ActionBundle* a;
  const struct StrengthBundle* str = nullptr;  // filled by the strength binder

  explicit ActionBinder(const ActionBundle& bundle) : a(&bundle) {}

  const DoubleCategory& target() const override { return *a->D; }
  const DoubleCategory& sort_category(char sort) const override {
    return sort == 'M' ? a->M() : *a->D;
  }
  ObjVal var(const std::string& name) override {
    throw StructuralError("unbound schema variable " + name);
  }
  ObjVal unit(char which) override {
    if (which == 'J') return ObjVal{'M', a->Munit()};
    if (!a->Dh) throw PreconditionError("schema axiom needs a monoidal structure on the target");
    return ObjVal{'D', a->Dh->unit};
  }
  ObjVal tensor_obj(ObjVal x, ObjVal y) override {
    if (x.sort == 'M' && y.sort == 'M') return ObjVal{'M', a->Mten().obj(x.idx, y.idx)};
    if (x.sort == 'M' && y.sort == 'D') return ObjVal{'D', a->act_obj(x.idx, y.idx)};
    if (x.sort == 'D' && y.sort == 'D') {
      if (!a->Dh) throw PreconditionError("schema axiom needs a monoidal structure on the target");
      return ObjVal{'D', a->Dh->ten.obj(x.idx, y.idx)};
    }
    throw StructuralError("cannot pair a target object with an acting object in this order");
  }
  HVal id_h(ObjVal x) override { return HVal{x.sort, sort_category(x.sort).id_h[x.idx]}; }
  HVal tensor_h(HVal x, HVal y) override {
    if (x.sort == 'M' && y.sort == 'M') return HVal{'M', a->Mten().h(x.idx, y.idx)};
    if (x.sort == 'M' && y.sort == 'D') return HVal{'D', a->act_h(x.idx, y.idx)};
    if (x.sort == 'D' && y.sort == 'D') {
      if (!a->Dh) throw PreconditionError("schema axiom needs a monoidal structure on the target");
      return HVal{'D', a->Dh->ten.h(x.idx, y.idx)};
    }
    throw StructuralError("cannot pair hcells of these sorts");
  }
  HVal named_h(const std::string& n, const std::vector<ObjVal>& os) override {
    if (n == "aM") return HVal{'M', a->Mh->a_comp(os[0].idx, os[1].idx, os[2].idx)};
    if (n == "lamM") return HVal{'M', a->Mh->lunit.at_obj[os[0].idx]};
    if (n == "roM") return HVal{'M', a->Mh->runit.at_obj[os[0].idx]};
    if (n == "b") return HVal{'D', a->beta_obj(os[0].idx, os[1].idx, os[2].idx)};
    if (n == "nu") return HVal{'D', a->nu_obj(os[0].idx)};
    if (n == "phi") {
      if (!a->braiding || !a->braiding->phi_h)
        throw PreconditionError("schema axiom needs a braiding");
      return HVal{'M', a->braiding->phi_h->at_obj[a->Mten().ix.obj(os[0].idx, os[1].idx)]};
    }
    if (n == "a") {
      if (!a->Dh) throw PreconditionError("schema axiom needs a monoidal structure on the target");
      return HVal{'D', a->Dh->a_comp(os[0].idx, os[1].idx, os[2].idx)};
    }
    if (n == "lam") {
      if (!a->Dh) throw PreconditionError("schema axiom needs a monoidal structure on the target");
      return HVal{'D', a->Dh->lunit.at_obj[os[0].idx]};
    }
    if (n == "ro") {
      if (!a->Dh) throw PreconditionError("schema axiom needs a monoidal structure on the target");
      return HVal{'D', a->Dh->runit.at_obj[os[0].idx]};
    }
    return named_h_extra(n, os);
  }
  virtual HVal named_h_extra(const std::string& n, const std::vector<ObjVal>&) {
    throw StructuralError("unknown hcell leaf " + n);
  }

  Idx named_square(const std::string& n, const std::vector<ObjVal>& os,
                   const std::vector<HVal>& hs, const std::vector<Idx>& qs) override {
    const auto& d = *a->D;
    if (n == "pt" || n == "pt_inv") {
      Idx q = a->pt_at(os[0].idx, os[1].idx, os[2].idx, os[3].idx);
      if (n == "pt") return q;
      auto i = d.sq_v_inverse(q);
      if (!i) throw PreconditionError("pt has no vertical inverse");
      return *i;
    }
    if (n == "lt") return a->lt_at(os[0].idx, os[1].idx);
    if (n == "mt") return a->mt_at(os[0].idx, os[1].idx);
    if (n == "pM") {
      return a->Mh->p[a->Mh->obj4(os[0].idx, os[1].idx, os[2].idx, os[3].idx)];
    }
    if (n == "lMinv") {
      auto i = a->M().sq_v_inverse(a->Mh->l[a->Mh->obj2(os[0].idx, os[1].idx)]);
      if (!i) throw PreconditionError("lM has no vertical inverse");
      return *i;
    }
    if (n == "bdelta" || n == "bdelta_inv") {
      // hs = (m-hcell, m-hcell, d-hcell): index into (M x M) x D
      Idx h3 = a->ixMMD.h(a->Mten().ix.h(hs[0].idx, hs[1].idx), hs[2].idx);
      if (!a->beta_h) throw PreconditionError("bdelta needs a horizontal beta");
      return n == "bdelta" ? a->beta_h->delta[h3] : a->beta_h->delta_in_direction(h3, false);
    }
    if (n == "nudelta" || n == "nudelta_inv") {
      if (!a->nu_h) throw PreconditionError("nudelta needs a horizontal nu");
      return n == "nudelta" ? a->nu_h->delta[hs[0].idx]
                            : a->nu_h->delta_in_direction(hs[0].idx, false);
    }
    if (n == "adelta" || n == "adelta_inv") {
      if (!a->Dh) throw PreconditionError("schema axiom needs a monoidal structure on the target");
      Idx h3 = a->Dh->triple.ix3.h(a->Dh->ten.ix.h(hs[0].idx, hs[1].idx), hs[2].idx);
      return n == "adelta" ? a->Dh->assoc.delta[h3]
                           : a->Dh->assoc.delta_in_direction(h3, false);
    }
    if (n == "ldelta" || n == "ldelta_inv") {
      if (!a->Dh) throw PreconditionError("schema axiom needs a monoidal structure on the target");
      return n == "ldelta" ? a->Dh->lunit.delta[hs[0].idx]
                           : a->Dh->lunit.delta_in_direction(hs[0].idx, false);
    }
    if (n == "l_inv") {
      if (!a->Dh) throw PreconditionError("schema axiom needs a monoidal structure on the target");
      auto i = d.sq_v_inverse(a->Dh->l[a->Dh->obj2(os[0].idx, os[1].idx)]);
      if (!i) throw PreconditionError("l has no vertical inverse");
      return *i;
    }
    if (n == "r_inv") {
      if (!a->Dh) throw PreconditionError("schema axiom needs a monoidal structure on the target");
      auto i = d.sq_v_inverse(a->Dh->r[a->Dh->obj2(os[0].idx, os[1].idx)]);
      if (!i) throw PreconditionError("r has no vertical inverse");
      return *i;
    }
    return named_square_extra(n, os, hs, qs);
  }
  virtual Idx named_square_extra(const std::string& n, const std::vector<ObjVal>&,
                                 const std::vector<HVal>&, const std::vector<Idx>&) {
    throw StructuralError("unknown square leaf " + n);
  }

  Idx tensor_sq(Idx x, Idx y, char kind) override {
    if (kind == 'x') {
      if (!a->Dh) throw PreconditionError("schema axiom needs a monoidal structure on the target");
      return a->Dh->ten.sqr(x, y);
    }
    if (kind == 'm') return a->Mten().sqr(x, y);
    return a->act_sq(x, y);
  }
};

inline bool action_is_strict(const ActionBundle& a) {
  const auto& d = *a.D;
  auto all_id = [&](const std::vector<Idx>& v) {
    for (Idx x : v)
      if (x != kNone && !d.is_identity_sq_v(x) && !d.is_identity_sq_h(x)) return false;
    return true;
  };
  bool strict = all_id(a.pt) && all_id(a.lt) && all_id(a.mt);
  if (a.beta_h) strict = strict && all_id(a.beta_h->delta) && all_id(a.beta_h->at_v);
  if (a.nu_h) strict = strict && all_id(a.nu_h->delta) && all_id(a.nu_h->at_v);
  return strict;
}

inline ValidationReport check_action(const ActionBundle& a, int max_per_law = 10) {
  ValidationReport rep;
  rep.max_per_law = 10;
  rep.max_per_law = max_per_law;
  const auto& d = *a.D;
  const auto& m = a.M();
  Idx nM = m.n_objects, nD = d.n_objects;
  auto sh = [&](Idx i) { return std::to_string(i); };

  rep.merge(check_lax_functor(a.F), "action-functor");

  if (a.orientation == Orientation::horizontal) {
    if (!a.beta_h || !a.nu_h) throw StructuralError("horizontal action without beta/nu");
    rep.merge(check_horizontal_transformation(*a.beta_h), "beta");
    rep.merge(check_horizontal_transformation(*a.nu_h), "nu");
    auto [S, T] = beta_boundaries(a);
    if (a.beta_h->F.obj_map != S.obj_map || a.beta_h->F.h_map != S.h_map ||
        a.beta_h->G.obj_map != T.obj_map || a.beta_h->G.h_map != T.h_map)
      throw StructuralError("beta boundaries do not match the action composites");
    auto [Sn, Tn] = nu_boundaries(a);
    if (a.nu_h->F.obj_map != Sn.obj_map || a.nu_h->G.obj_map != Tn.obj_map ||
        a.nu_h->G.h_map != Tn.h_map)
      throw StructuralError("nu boundaries do not match the action composites");
    if (!a.lax) {
      for (Idx i = 0; i < static_cast<Idx>(a.beta_h->at_obj.size()); ++i)
        if (!d.h_inverse(a.beta_h->at_obj[i]))
          rep.add("beta-invertible", "component " + sh(i), sh(a.beta_h->at_obj[i]), "");
      for (Idx i = 0; i < static_cast<Idx>(a.nu_h->at_obj.size()); ++i)
        if (!d.h_inverse(a.nu_h->at_obj[i]))
          rep.add("nu-invertible", "component " + sh(i), sh(a.nu_h->at_obj[i]), "");
    }

    // p/l/m-tilde frames (monad-action form)
    if (a.pt.size() != static_cast<size_t>(nM) * nM * nM * nD ||
        a.lt.size() != static_cast<size_t>(nM) * nD || a.mt.size() != static_cast<size_t>(nM) * nD)
      throw StructuralError("action coherence tables wrongly sized");
    for (Idx M1 = 0; M1 < nM; ++M1)
      for (Idx N = 0; N < nM; ++N)
        for (Idx P = 0; P < nM; ++P)
          for (Idx E = 0; E < nD; ++E) {
            Idx top = d.hcomp_h(a.act_h(m.id_h[M1], a.beta_obj(N, P, E)),
                                a.beta_obj(M1, a.Mten().obj(N, P), E));
            Idx bot = d.hcomp_h_many({a.beta_obj(M1, N, a.act_obj(P, E)),
                                      a.beta_obj(a.Mten().obj(M1, N), P, E),
                                      a.act_h(a.Mh->a_comp(M1, N, P), d.id_h[E])});
            Idx w = a.pt_at(M1, N, P, E);
            std::string at = "(" + sh(M1) + "," + sh(N) + "," + sh(P) + "," + sh(E) + ")";
            if (!(d.sq[w] == SquareFrame{top, bot, d.id_v[d.h_src[top]], d.id_v[d.h_tgt[top]]}))
              rep.add("pt-frame", at, d.show_frame(w), "");
            else if (!d.sq_v_inverse(w))
              rep.add("pt-invertible", at, sh(w), "");
          }
    for (Idx M1 = 0; M1 < nM; ++M1)
      for (Idx E = 0; E < nD; ++E) {
        std::string at = "(" + sh(M1) + "," + sh(E) + ")";
        Idx me = a.act_obj(M1, E);
        Idx ltop = d.hcomp_h_many({a.nu_obj(me), a.beta_obj(a.Munit(), M1, E),
                                   a.act_h(a.Mh->lunit.at_obj[M1], d.id_h[E])});
        Idx w = a.lt_at(M1, E);
        if (!(d.sq[w] == SquareFrame{ltop, d.id_h[me], d.id_v[me], d.id_v[me]}))
          rep.add("lt-frame", at, d.show_frame(w), "");
        else if (!d.sq_v_inverse(w))
          rep.add("lt-invertible", at, sh(w), "");
        Idx mtop = d.hcomp_h_many({a.act_h(m.id_h[M1], a.nu_obj(E)),
                                   a.beta_obj(M1, a.Munit(), E),
                                   a.act_h(a.Mh->runit.at_obj[M1], d.id_h[E])});
        Idx w2 = a.mt_at(M1, E);
        if (!(d.sq[w2] == SquareFrame{mtop, d.id_h[me], d.id_v[me], d.id_v[me]}))
          rep.add("mt-frame", at, d.show_frame(w2), "");
        else if (!d.sq_v_inverse(w2))
          rep.add("mt-invertible", at, sh(w2), "");
      }

    // TA regime for the action
    AxiomSchema schema = load_axiom_schema();
    ActionBinder binder(a);
    bool strict = action_is_strict(a);
    if (strict) rep.note("strict-shortcut: all action structure squares are identities");
    run_schema_axioms(schema.for_structure("horizontal_action"), binder,
                      [&](char sort) { return sort == 'M' ? nM : nD; }, strict, rep);
  } else {
    if (!a.beta_v || !a.nu_v) throw StructuralError("vertical action without beta/nu");
    rep.merge(check_vertical_transformation(*a.beta_v), "beta");
    rep.merge(check_vertical_transformation(*a.nu_v), "nu");
    // identity coherence: pentagon/triangles as composite 1v-cell equalities
    for (Idx M1 = 0; M1 < nM; ++M1)
      for (Idx N = 0; N < nM; ++N)
        for (Idx P = 0; P < nM; ++P)
          for (Idx E = 0; E < nD; ++E) {
            Idx lhs = d.vcomp_v(a.act_v(m.id_v[M1], a.beta_obj(N, P, E)),
                                a.beta_obj(M1, a.Mten().obj(N, P), E));
            Idx rhs = d.vcomp_v_many({a.beta_obj(M1, N, a.act_obj(P, E)),
                                      a.beta_obj(a.Mten().obj(M1, N), P, E),
                                      a.act_v(a.Mv->assoc.at_obj[a.Mv->triple.ix3.obj(
                                                  a.Mten().ix.obj(M1, N), P)],
                                              d.id_v[E])});
            if (lhs != rhs)
              rep.add("action-pentagon",
                      "(" + sh(M1) + "," + sh(N) + "," + sh(P) + "," + sh(E) + ")", sh(lhs),
                      sh(rhs));
          }
    for (Idx M1 = 0; M1 < nM; ++M1)
      for (Idx E = 0; E < nD; ++E) {
        Idx me = a.act_obj(M1, E);
        Idx lhs = d.vcomp_v_many({a.nu_obj(me), a.beta_obj(a.Munit(), M1, E),
                                  a.act_v(a.Mv->lunit.at_obj[M1], d.id_v[E])});
        if (lhs != d.id_v[me])
          rep.add("action-left-unit", "(" + sh(M1) + "," + sh(E) + ")", sh(lhs), sh(d.id_v[me]));
        Idx rhs = d.vcomp_v_many({a.act_v(m.id_v[M1], a.nu_obj(E)), a.beta_obj(M1, a.Munit(), E),
                                  a.act_v(a.Mv->runit.at_obj[M1], d.id_v[E])});
        if (rhs != d.id_v[me])
          rep.add("action-middle-unit", "(" + sh(M1) + "," + sh(E) + ")", sh(rhs), sh(d.id_v[me]));
      }
  }
  return rep;
}

}  // namespace dblcat
