#pragma once

#include "dblcat/monoidal_lift.hpp"

namespace dblcat {

// Componentwise monoidal structure on a product D x D (needed as the source
// structure when the tensor itself is viewed as a lax monoidal functor).
inline VerticalMonoidalStructure product_monoidal(const VerticalMonoidalStructure& s) {
  const auto& d = *s.D;
  DcPtr p = s.ten.prod;
  ProductIndexing ix = s.ten.ix;
  TensorData t2;
  t2.prod = product_for_source(*p, *p);
  t2.ix = product_indexing(*p, *p);
  LaxDoubleFunctor& f = t2.F;
  f.name = "tensor-x-tensor";
  f.variant = FunctorVariant::pseudo;
  f.src = t2.prod;
  f.dst = p;
  auto fill = [&](std::vector<Idx>& out, Idx n_pair, auto part, auto pair1, auto comb) {
    out.resize(static_cast<size_t>(n_pair) * n_pair);
    for (Idx x = 0; x < n_pair; ++x)
      for (Idx y = 0; y < n_pair; ++y) {
        auto [a, b] = part(x);
        auto [c, e] = part(y);
        out[t2.ix.obj(0, 0) * 0 + pair1(x, y)] = comb(a, b, c, e);
      }
  };
  (void)fill;
  f.obj_map.resize(static_cast<size_t>(t2.prod->n_objects));
  for (Idx x = 0; x < p->n_objects; ++x)
    for (Idx y = 0; y < p->n_objects; ++y) {
      auto [a, b] = ix.obj_parts(x);
      auto [c, e] = ix.obj_parts(y);
      f.obj_map[t2.ix.obj(x, y)] = ix.obj(s.ten.obj(a, c), s.ten.obj(b, e));
    }
  f.h_map.resize(static_cast<size_t>(t2.prod->nh()));
  for (Idx x = 0; x < p->nh(); ++x)
    for (Idx y = 0; y < p->nh(); ++y) {
      auto [a, b] = ix.h_parts(x);
      auto [c, e] = ix.h_parts(y);
      f.h_map[t2.ix.h(x, y)] = ix.h(s.ten.h(a, c), s.ten.h(b, e));
    }
  f.v_map.resize(static_cast<size_t>(t2.prod->nv()));
  for (Idx x = 0; x < p->nv(); ++x)
    for (Idx y = 0; y < p->nv(); ++y) {
      auto [a, b] = ix.v_parts(x);
      auto [c, e] = ix.v_parts(y);
      f.v_map[t2.ix.v(x, y)] = ix.v(s.ten.v(a, c), s.ten.v(b, e));
    }
  f.sq_map.resize(static_cast<size_t>(t2.prod->ns()));
  for (Idx x = 0; x < p->ns(); ++x)
    for (Idx y = 0; y < p->ns(); ++y) {
      auto [a, b] = ix.s_parts(x);
      auto [c, e] = ix.s_parts(y);
      f.sq_map[t2.ix.s(x, y)] = ix.s(s.ten.sqr(a, c), s.ten.sqr(b, e));
    }
  VerticalMonoidalStructure out;
  out.D = p;
  out.ten = std::move(t2);
  out.unit = ix.obj(s.unit, s.unit);
  out.triple = make_triple(out.ten, p);
  // componentwise constraints: identity when s is strict; otherwise pairs
  out.assoc = identity_vertical_transformation(out.triple.left);
  out.assoc.G = out.triple.right;
  if (out.triple.left.obj_map != out.triple.right.obj_map)
    throw PreconditionError("product_monoidal: supported for strict tensors only");
  out.lunit = identity_vertical_transformation(unit_left_functor(out.ten, p, out.unit));
  out.lunit.G = identity_functor(p);
  out.runit = identity_vertical_transformation(unit_right_functor(out.ten, p, out.unit));
  out.runit.G = identity_functor(p);
  if (out.lunit.F.obj_map != out.lunit.G.obj_map ||
      out.runit.F.obj_map != out.runit.G.obj_map)
    throw PreconditionError("product_monoidal: supported for strict units only");
  return out;
}

// ---------------------------------------------------------------------------
// Monoidal transformations and modifications, vertical orientation: sigma2
// components are vertically globular cocycle-modification cells.

struct MonoidalVTransformation {
  VerticalTransformation sigma;   // underlying transformation F => F~
  std::vector<Idx> sigma2;        // per src object pair, vertically globular
  Idx sigma0 = kNone;             // at the unit
};

inline ValidationReport check_monoidal_transformation(const MonoidalVTransformation& t,
                                                      const MonoidalFunctorStructure& mf,
                                                      const MonoidalFunctorStructure& mg,
                                                      const VerticalMonoidalStructure& src,
                                                      const VerticalMonoidalStructure& dst,
                                                      int max_per_law = 10) {
  ValidationReport rep;
  rep.max_per_law = max_per_law;
  rep.merge(check_vertical_transformation(t.sigma), "sigma");
  const auto& c = *src.D;
  const auto& d = *dst.D;
  Idx n = c.n_objects;
  auto sh = [&](Idx i) { return std::to_string(i); };
  if (t.sigma2.size() != static_cast<size_t>(n) * n)
    throw StructuralError("monoidal transformation: sigma2 wrongly sized");
  auto F2 = [&](Idx A, Idx B) { return mf.F2_obj[A * n + B]; };
  auto G2 = [&](Idx A, Idx B) { return mg.F2_obj[A * n + B]; };
  for (Idx A = 0; A < n; ++A)
    for (Idx B = 0; B < n; ++B) {
      Idx q = t.sigma2[A * n + B];
      // frame: left = F2 / sigma(A (x) B), right = sigma(A) (x) sigma(B) / G2
      Idx lft = d.vcomp_v(F2(A, B), t.sigma.at_obj[src.ten.obj(A, B)]);
      Idx rgt = d.vcomp_v(dst.ten.v(t.sigma.at_obj[A], t.sigma.at_obj[B]), G2(A, B));
      SquareFrame want{d.id_h[d.v_src[lft]], d.id_h[d.v_tgt[lft]], lft, rgt};
      if (!(d.sq[q] == want)) {
        rep.add("sigma2-frame", "(" + sh(A) + "," + sh(B) + ")", d.show_frame(q), "");
        continue;
      }
      if (!d.sq_h_inverse(q))
        rep.add("sigma2-invertible", "(" + sh(A) + "," + sh(B) + ")", sh(q), "");
    }
  // unit cell: sigma0 frames Id => sigma at the unit after F0/G0
  {
    Idx lft = d.vcomp_v(mf.F0, t.sigma.at_obj[src.unit]);
    Idx rgt = mg.F0;
    SquareFrame want{d.id_h[d.v_src[lft]], d.id_h[d.v_tgt[lft]], lft, rgt};
    if (t.sigma0 == kNone || !(d.sq[t.sigma0] == want))
      rep.add("sigma0-frame", "unit", t.sigma0 == kNone ? "missing" : d.show_frame(t.sigma0), "");
  }
  return rep;
}

// Cocycle modification checker for vertical modifications: additionally to the
// modification axioms, left/right normalization against the unit component.
inline ValidationReport check_monoidal_modification(const Modification& m,
                                                    const VerticalMonoidalStructure& dst,
                                                    int max_per_law = 10) {
  ValidationReport rep;
  rep.max_per_law = max_per_law;
  rep.merge(check_modification(m), "modification");
  // 2-dimensional normalization: the component at the unit must be the
  // identity cell on its boundary
  const auto& d = m.dst();
  Idx comp = m.at_obj.empty() ? kNone : m.at_obj[dst.unit];
  if (comp != kNone && !d.is_identity_sq_h(comp) && !d.is_identity_sq_v(comp))
    rep.add("unit-normalization", "unit object", std::to_string(comp), "identity");
  return rep;
}

// ---------------------------------------------------------------------------
// Horizontal lax monoidality for a functor between horizontally monoidal
// double categories (used for the lifted structures): F2 components are
// 1h-cells with horizontally globular invertible square components.

struct HMonoidalFunctorStructure {
  LaxDoubleFunctor F;
  std::vector<Idx> F2_obj;   // hcells per src object pair
  std::vector<Idx> F2_pair;  // horizontally globular squares per src hcell pair
  Idx F0 = kNone;            // hcell I -> F(I)
};

inline ValidationReport check_hmonoidal_functor(const HMonoidalFunctorStructure& mf,
                                                const HorizontalMonoidalStructure& src,
                                                const HorizontalMonoidalStructure& dst,
                                                int max_per_law = 10) {
  ValidationReport rep;
  rep.max_per_law = max_per_law;
  const auto& c = *src.D;
  const auto& d = *dst.D;
  Idx n = c.n_objects;
  auto sh = [&](Idx i) { return std::to_string(i); };
  auto F2 = [&](Idx A, Idx B) { return mf.F2_obj[A * n + B]; };
  auto F2s = [&](Idx f, Idx g) { return mf.F2_pair[f * c.nh() + g]; };
  for (Idx A = 0; A < n; ++A)
    for (Idx B = 0; B < n; ++B) {
      Idx h = F2(A, B);
      if (d.h_src[h] != dst.ten.obj(mf.F.on_obj(A), mf.F.on_obj(B)) ||
          d.h_tgt[h] != mf.F.on_obj(src.ten.obj(A, B)))
        rep.add("F2-frame", "(" + sh(A) + "," + sh(B) + ")", d.show(Sort::HCell, h), "");
    }
  for (Idx f = 0; f < c.nh(); ++f)
    for (Idx g = 0; g < c.nh(); ++g) {
      Idx q = F2s(f, g);
      Idx top = d.hcomp_h(dst.ten.h(mf.F.on_h(f), mf.F.on_h(g)),
                          F2(c.h_tgt[f], c.h_tgt[g]));
      Idx bot = d.hcomp_h(F2(c.h_src[f], c.h_src[g]), mf.F.on_h(src.ten.h(f, g)));
      SquareFrame want{top, bot, d.id_v[d.h_src[top]], d.id_v[d.h_tgt[top]]};
      std::string at = "(" + sh(f) + "," + sh(g) + ")";
      if (!(d.sq[q] == want)) rep.add("F2-square-frame", at, d.show_frame(q), "");
      else if (!d.sq_v_inverse(q)) rep.add("F2-square-invertible", at, sh(q), "");
    }
  // 1h-level cocycle over object triples (strict targets compose on the nose)
  for (Idx A = 0; A < n; ++A)
    for (Idx B = 0; B < n; ++B)
      for (Idx C = 0; C < n; ++C) {
        Idx lhs = d.hcomp_h_many({dst.a_comp(mf.F.on_obj(A), mf.F.on_obj(B), mf.F.on_obj(C)),
                                  dst.ten.h(d.id_h[mf.F.on_obj(A)], F2(B, C)),
                                  F2(A, src.ten.obj(B, C)),
                                  mf.F.on_h(src.a_comp(A, B, C))});
        // target path must agree with (F2 (x) 1) then F2 then F(assoc) route up
        // to the stored associator; with strict sources both routes are cells
        Idx rhs = d.hcomp_h_many({dst.ten.h(F2(A, B), d.id_h[mf.F.on_obj(C)]),
                                  F2(src.ten.obj(A, B), C),
                                  mf.F.on_h(src.a_comp(A, B, C))});
        // compare targets of the two 1h-composites: both end at F(A(BC));
        // equality of the composites themselves is the omega-coherence, which
        // is witnessed rather than strict in general; here we record only
        // composability and leave the witness to the omega modification.
        if (d.h_tgt[lhs] != d.h_tgt[rhs])
          rep.add("F2-cocycle-shape", "(" + sh(A) + "," + sh(B) + "," + sh(C) + ")", sh(lhs),
                  sh(rhs));
      }
  return rep;
}

// Lift of a strongly lax monoidal functor's vertical cocycle to the
// horizontal orientation (Prop. on lifting in the double category of monoidal
// functors): F2 hats via companions, square components via the square lift.
inline HMonoidalFunctorStructure lift_monoidal_functor(const MonoidalFunctorStructure& mf,
                                                       const VerticalMonoidalStructure& src,
                                                       const CompanionChoice& choice) {
  const auto& c = *src.D;
  const auto& d = *mf.F.dst;
  HMonoidalFunctorStructure out;
  out.F = mf.F;
  Idx n = c.n_objects;
  out.F2_obj.assign(static_cast<size_t>(n) * n, kNone);
  out.F2_pair.assign(static_cast<size_t>(c.nh()) * c.nh(), kNone);
  for (Idx A = 0; A < n; ++A)
    for (Idx B = 0; B < n; ++B) {
      const auto& w = choice.require(d, mf.F2_obj[A * n + B]);
      out.F2_obj[A * n + B] = w.u_hat;
    }
  for (Idx f = 0; f < c.nh(); ++f)
    for (Idx g = 0; g < c.nh(); ++g) {
      Idx q = mf.F2_pair[f * c.nh() + g];
      const auto& wl = choice.require(d, d.sq[q].left);
      const auto& wr = choice.require(d, d.sq[q].right);
      out.F2_pair[f * c.nh() + g] = lift_square(d, q, wl, wr);
    }
  const auto& w0 = choice.require(d, mf.F0);
  out.F0 = w0.u_hat;
  return out;
}

}  // namespace dblcat
