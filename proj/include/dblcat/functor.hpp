#pragma once

#include <memory>
#include <utility>

#include "dblcat/builders.hpp"
#include "dblcat/core.hpp"

namespace dblcat {

using DcPtr = std::shared_ptr<const DoubleCategory>;

inline DcPtr share(DoubleCategory d) { return std::make_shared<const DoubleCategory>(std::move(d)); }

// Structural equality, ignoring the display name.
inline bool tables_equal(const DoubleCategory& a, const DoubleCategory& b) {
  return a.n_objects == b.n_objects && a.h_src == b.h_src && a.h_tgt == b.h_tgt &&
         a.v_src == b.v_src && a.v_tgt == b.v_tgt && a.sq == b.sq && a.id_h == b.id_h &&
         a.id_v == b.id_v && a.id_sq_h == b.id_sq_h && a.id_sq_v == b.id_sq_v &&
         a.hcomp_h_tab == b.hcomp_h_tab && a.vcomp_v_tab == b.vcomp_v_tab &&
         a.hcomp_sq_tab == b.hcomp_sq_tab && a.vcomp_sq_tab == b.vcomp_sq_tab &&
         a.assoc == b.assoc && a.lunit == b.lunit && a.runit == b.runit;
}

inline bool same_category(const DcPtr& a, const DcPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return tables_equal(*a, *b);
}

enum class FunctorVariant : std::uint8_t { lax, pseudo, strict };

// A lax double functor: strict in the vertical direction, lax horizontally,
// with globular compositor squares [Ff|Fg] => F(fg) and unitors 1_{FA} => F(1_A).
// Empty compositor/unitor containers mean "identities" (the strict case).
struct LaxDoubleFunctor {
  std::string name;
  FunctorVariant variant = FunctorVariant::strict;
  DcPtr src, dst;
  std::vector<Idx> obj_map, h_map, v_map, sq_map;
  std::map<std::pair<Idx, Idx>, Idx> comp;  // per composable (f,g) in src
  std::vector<Idx> unit;                    // per src object

  Idx on_obj(Idx a) const { src->require_obj(a); return obj_map[a]; }
  Idx on_h(Idx f) const { src->require_h(f); return h_map[f]; }
  Idx on_v(Idx u) const { src->require_v(u); return v_map[u]; }
  Idx on_sq(Idx a) const { src->require_sq(a); return sq_map[a]; }

  bool is_strict_tables() const { return comp.empty() && unit.empty(); }

  // Compositor [Ff|Fg] => F(fg); identity when not stored.
  Idx compositor(Idx f, Idx g) const {
    auto it = comp.find({f, g});
    if (it != comp.end()) return it->second;
    Idx lhs = dst->hcomp_h(on_h(f), on_h(g));
    Idx rhs = on_h(src->hcomp_h(f, g));
    if (lhs != rhs)
      throw StructuralError(name + ": missing compositor at (" + std::to_string(f) + "," +
                            std::to_string(g) + ") and images do not compose strictly");
    return dst->id_sq_h[lhs];
  }

  // Unitor 1_{F A} => F(1_A); identity when not stored.
  Idx unitor(Idx a) const {
    if (!unit.empty()) return unit[a];
    Idx lhs = dst->id_h[on_obj(a)];
    Idx rhs = on_h(src->id_h[a]);
    if (lhs != rhs)
      throw StructuralError(name + ": missing unitor at object " + std::to_string(a));
    return dst->id_sq_h[lhs];
  }

  Idx compositor_inv(Idx f, Idx g) const {
    Idx c = compositor(f, g);
    if (dst->is_identity_sq_v(c)) return c;
    auto inv = dst->sq_v_inverse(c);
    if (!inv)
      throw PreconditionError(name + ": compositor at (" + std::to_string(f) + "," +
                              std::to_string(g) + ") is not vertically invertible");
    return *inv;
  }

  Idx unitor_inv(Idx a) const {
    Idx c = unitor(a);
    if (dst->is_identity_sq_v(c)) return c;
    auto inv = dst->sq_v_inverse(c);
    if (!inv)
      throw PreconditionError(name + ": unitor at object " + std::to_string(a) +
                              " is not vertically invertible");
    return *inv;
  }
};

inline LaxDoubleFunctor identity_functor(DcPtr d) {
  LaxDoubleFunctor f;
  f.name = "Id";
  f.variant = FunctorVariant::strict;
  f.src = d;
  f.dst = d;
  f.obj_map.resize(d->n_objects);
  for (Idx a = 0; a < d->n_objects; ++a) f.obj_map[a] = a;
  f.h_map.resize(d->nh());
  for (Idx a = 0; a < d->nh(); ++a) f.h_map[a] = a;
  f.v_map.resize(d->nv());
  for (Idx a = 0; a < d->nv(); ++a) f.v_map[a] = a;
  f.sq_map.resize(d->ns());
  for (Idx a = 0; a < d->ns(); ++a) f.sq_map[a] = a;
  return f;
}

inline LaxDoubleFunctor constant_functor(DcPtr src, DcPtr dst, Idx obj) {
  dst->require_obj(obj);
  LaxDoubleFunctor f;
  f.name = "Const(" + std::to_string(obj) + ")";
  f.variant = FunctorVariant::strict;
  f.src = src;
  f.dst = dst;
  f.obj_map.assign(src->n_objects, obj);
  f.h_map.assign(src->nh(), dst->id_h[obj]);
  f.v_map.assign(src->nv(), dst->id_v[obj]);
  f.sq_map.assign(src->ns(), dst->id_sq_h[dst->id_h[obj]]);
  return f;
}

// G after F. Compositors paste: [GFf|GFg] => G[Ff|Fg] => GF(fg).
inline LaxDoubleFunctor compose_functor(const LaxDoubleFunctor& g, const LaxDoubleFunctor& f) {
  if (!same_category(f.dst, g.src))
    throw StructuralError("compose_functor: inner target differs from outer source");
  LaxDoubleFunctor r;
  r.name = g.name + "*" + f.name;
  r.variant = (f.variant == FunctorVariant::strict && g.variant == FunctorVariant::strict)
                  ? FunctorVariant::strict
                  : std::min(f.variant, g.variant);
  r.src = f.src;
  r.dst = g.dst;
  r.obj_map.resize(f.src->n_objects);
  for (Idx a = 0; a < f.src->n_objects; ++a) r.obj_map[a] = g.on_obj(f.on_obj(a));
  r.h_map.resize(f.src->nh());
  for (Idx a = 0; a < f.src->nh(); ++a) r.h_map[a] = g.on_h(f.on_h(a));
  r.v_map.resize(f.src->nv());
  for (Idx a = 0; a < f.src->nv(); ++a) r.v_map[a] = g.on_v(f.on_v(a));
  r.sq_map.resize(f.src->ns());
  for (Idx a = 0; a < f.src->ns(); ++a) r.sq_map[a] = g.on_sq(f.on_sq(a));
  if (!(f.is_strict_tables() && g.is_strict_tables())) {
    const auto& s = *f.src;
    for (Idx x = 0; x < s.nh(); ++x)
      for (Idx y = 0; y < s.nh(); ++y) {
        if (s.h_tgt[x] != s.h_src[y]) continue;
        Idx c = g.dst->vcomp_sq(g.compositor(f.on_h(x), f.on_h(y)), g.on_sq(f.compositor(x, y)));
        if (!g.dst->is_identity_sq_v(c)) r.comp[{x, y}] = c;
      }
    bool any_unit = false;
    std::vector<Idx> units(s.n_objects);
    for (Idx a = 0; a < s.n_objects; ++a) {
      units[a] = g.dst->vcomp_sq(g.unitor(f.on_obj(a)), g.on_sq(f.unitor(a)));
      if (!g.dst->is_identity_sq_v(units[a])) any_unit = true;
    }
    if (any_unit) r.unit = std::move(units);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Functors into / out of products.

struct BinaryFunctorView {
  // helpers for a functor whose source is product(c1, c2)
  const DoubleCategory* c1;
  const DoubleCategory* c2;
  ProductIndexing ix;
};

inline LaxDoubleFunctor product_functor(const LaxDoubleFunctor& f, const LaxDoubleFunctor& g,
                                        DcPtr src_prod, DcPtr dst_prod) {
  // f: A -> C, g: B -> D, result: A x B -> C x D
  ProductIndexing sx = product_indexing(*f.src, *g.src);
  ProductIndexing dx = product_indexing(*f.dst, *g.dst);
  LaxDoubleFunctor r;
  r.name = f.name + "x" + g.name;
  r.variant = std::min(f.variant, g.variant);
  r.src = src_prod;
  r.dst = dst_prod;
  r.obj_map.resize(src_prod->n_objects);
  for (Idx a = 0; a < f.src->n_objects; ++a)
    for (Idx b = 0; b < g.src->n_objects; ++b)
      r.obj_map[sx.obj(a, b)] = dx.obj(f.on_obj(a), g.on_obj(b));
  r.h_map.resize(src_prod->nh());
  for (Idx a = 0; a < f.src->nh(); ++a)
    for (Idx b = 0; b < g.src->nh(); ++b)
      r.h_map[sx.h(a, b)] = dx.h(f.on_h(a), g.on_h(b));
  r.v_map.resize(src_prod->nv());
  for (Idx a = 0; a < f.src->nv(); ++a)
    for (Idx b = 0; b < g.src->nv(); ++b)
      r.v_map[sx.v(a, b)] = dx.v(f.on_v(a), g.on_v(b));
  r.sq_map.resize(src_prod->ns());
  for (Idx a = 0; a < f.src->ns(); ++a)
    for (Idx b = 0; b < g.src->ns(); ++b)
      r.sq_map[sx.s(a, b)] = dx.s(f.on_sq(a), g.on_sq(b));
  if (!(f.is_strict_tables() && g.is_strict_tables())) {
    for (Idx x = 0; x < src_prod->nh(); ++x)
      for (Idx y = 0; y < src_prod->nh(); ++y) {
        if (src_prod->h_tgt[x] != src_prod->h_src[y]) continue;
        auto [x1, x2] = sx.h_parts(x);
        auto [y1, y2] = sx.h_parts(y);
        Idx c = dx.s(f.compositor(x1, y1), g.compositor(x2, y2));
        if (!dst_prod->is_identity_sq_v(c)) r.comp[{x, y}] = c;
      }
    bool any = false;
    std::vector<Idx> units(src_prod->n_objects);
    for (Idx a = 0; a < src_prod->n_objects; ++a) {
      auto [a1, a2] = sx.obj_parts(a);
      units[a] = dx.s(f.unitor(a1), g.unitor(a2));
      if (!dst_prod->is_identity_sq_v(units[a])) any = true;
    }
    if (any) r.unit = std::move(units);
  }
  return r;
}

inline LaxDoubleFunctor projection_functor(DcPtr prod, const DoubleCategory& c1,
                                           const DoubleCategory& c2, int which, DcPtr target) {
  ProductIndexing ix = product_indexing(c1, c2);
  LaxDoubleFunctor r;
  r.name = which == 0 ? "pr1" : "pr2";
  r.src = prod;
  r.dst = target;
  r.obj_map.resize(prod->n_objects);
  for (Idx a = 0; a < prod->n_objects; ++a) {
    auto [x, y] = ix.obj_parts(a);
    r.obj_map[a] = which == 0 ? x : y;
  }
  r.h_map.resize(prod->nh());
  for (Idx a = 0; a < prod->nh(); ++a) {
    auto [x, y] = ix.h_parts(a);
    r.h_map[a] = which == 0 ? x : y;
  }
  r.v_map.resize(prod->nv());
  for (Idx a = 0; a < prod->nv(); ++a) {
    auto [x, y] = ix.v_parts(a);
    r.v_map[a] = which == 0 ? x : y;
  }
  r.sq_map.resize(prod->ns());
  for (Idx a = 0; a < prod->ns(); ++a) {
    auto [x, y] = ix.s_parts(a);
    r.sq_map[a] = which == 0 ? x : y;
  }
  return r;
}

// Pairing <f, g>: X -> C1 x C2 from f: X -> C1, g: X -> C2 (strict f, g only).
inline LaxDoubleFunctor pairing_functor(const LaxDoubleFunctor& f, const LaxDoubleFunctor& g,
                                        DcPtr dst_prod) {
  if (!same_category(f.src, g.src)) throw StructuralError("pairing_functor: sources differ");
  if (!f.is_strict_tables() || !g.is_strict_tables())
    throw PreconditionError("pairing_functor: strict components required");
  ProductIndexing dx = product_indexing(*f.dst, *g.dst);
  LaxDoubleFunctor r;
  r.name = "<" + f.name + "," + g.name + ">";
  r.src = f.src;
  r.dst = dst_prod;
  r.obj_map.resize(f.src->n_objects);
  for (Idx a = 0; a < f.src->n_objects; ++a) r.obj_map[a] = dx.obj(f.on_obj(a), g.on_obj(a));
  r.h_map.resize(f.src->nh());
  for (Idx a = 0; a < f.src->nh(); ++a) r.h_map[a] = dx.h(f.on_h(a), g.on_h(a));
  r.v_map.resize(f.src->nv());
  for (Idx a = 0; a < f.src->nv(); ++a) r.v_map[a] = dx.v(f.on_v(a), g.on_v(a));
  r.sq_map.resize(f.src->ns());
  for (Idx a = 0; a < f.src->ns(); ++a) r.sq_map[a] = dx.s(f.on_sq(a), g.on_sq(a));
  return r;
}

// ---------------------------------------------------------------------------
// Exhaustive functor checker.

inline ValidationReport check_lax_functor(const LaxDoubleFunctor& F, int max_per_law = 10) {
  if (!F.src || !F.dst) throw StructuralError("check_lax_functor: missing source or target");
  const auto& s = *F.src;
  const auto& d = *F.dst;
  if (F.obj_map.size() != static_cast<size_t>(s.n_objects) ||
      F.h_map.size() != static_cast<size_t>(s.nh()) ||
      F.v_map.size() != static_cast<size_t>(s.nv()) ||
      F.sq_map.size() != static_cast<size_t>(s.ns()))
    throw StructuralError("check_lax_functor: map tables wrongly sized");
  for (Idx a : F.obj_map) d.require_obj(a);
  for (Idx a : F.h_map) d.require_h(a);
  for (Idx a : F.v_map) d.require_v(a);
  for (Idx a : F.sq_map) d.require_sq(a);

  // frame preservation is structural: a functor that does not preserve frames
  // is not a functor candidate at all
  for (Idx f = 0; f < s.nh(); ++f)
    if (d.h_src[F.on_h(f)] != F.on_obj(s.h_src[f]) || d.h_tgt[F.on_h(f)] != F.on_obj(s.h_tgt[f]))
      throw StructuralError(F.name + ": hcell " + std::to_string(f) + " image has wrong endpoints");
  for (Idx u = 0; u < s.nv(); ++u)
    if (d.v_src[F.on_v(u)] != F.on_obj(s.v_src[u]) || d.v_tgt[F.on_v(u)] != F.on_obj(s.v_tgt[u]))
      throw StructuralError(F.name + ": vcell " + std::to_string(u) + " image has wrong endpoints");
  for (Idx a = 0; a < s.ns(); ++a) {
    SquareFrame want{F.on_h(s.sq[a].top), F.on_h(s.sq[a].bottom),
                     F.on_v(s.sq[a].left), F.on_v(s.sq[a].right)};
    if (!(d.sq[F.on_sq(a)] == want))
      throw StructuralError(F.name + ": square " + std::to_string(a) + " image has wrong frame");
  }

  ValidationReport rep;
  rep.max_per_law = max_per_law;
  auto sh = [&](Idx i) { return std::to_string(i); };

  // vertical strictness
  for (Idx a = 0; a < s.n_objects; ++a)
    if (F.on_v(s.id_v[a]) != d.id_v[F.on_obj(a)])
      rep.add("F-vertical-identity", "object " + sh(a), sh(F.on_v(s.id_v[a])), sh(d.id_v[F.on_obj(a)]));
  for (Idx u = 0; u < s.nv(); ++u)
    for (Idx w = 0; w < s.nv(); ++w) {
      if (s.v_tgt[u] != s.v_src[w]) continue;
      if (F.on_v(s.vcomp_v_raw(u, w)) != d.vcomp_v_raw(F.on_v(u), F.on_v(w)))
        rep.add("F-vcomp", "(" + sh(u) + "," + sh(w) + ")", "", "");
    }
  for (Idx f = 0; f < s.nh(); ++f)
    if (F.on_sq(s.id_sq_h[f]) != d.id_sq_h[F.on_h(f)])
      rep.add("F-square-identity", "hcell " + sh(f), sh(F.on_sq(s.id_sq_h[f])), sh(d.id_sq_h[F.on_h(f)]));
  for (Idx a = 0; a < s.ns(); ++a)
    for (Idx b = 0; b < s.ns(); ++b) {
      if (s.sq[a].bottom != s.sq[b].top) continue;
      if (F.on_sq(s.vcomp_sq_raw(a, b)) != d.vcomp_sq_raw(F.on_sq(a), F.on_sq(b)))
        rep.add("F-sq-vcomp", "(" + sh(a) + "," + sh(b) + ")", "", "");
    }

  // compositors: frames, globularity, naturality, coherence
  for (Idx f = 0; f < s.nh(); ++f)
    for (Idx g = 0; g < s.nh(); ++g) {
      if (s.h_tgt[f] != s.h_src[g]) continue;
      Idx c = F.compositor(f, g);
      SquareFrame want{d.hcomp_h(F.on_h(f), F.on_h(g)), F.on_h(s.hcomp_h_raw(f, g)),
                       d.id_v[F.on_obj(s.h_src[f])], d.id_v[F.on_obj(s.h_tgt[g])]};
      if (!(d.sq[c] == want)) {
        rep.add("F-compositor-frame", "(" + sh(f) + "," + sh(g) + ")", d.show_frame(c), "");
        continue;
      }
      if (F.variant == FunctorVariant::strict && !d.is_identity_sq_v(c))
        rep.add("F-strict-compositor", "(" + sh(f) + "," + sh(g) + ")", sh(c), "identity");
      if (F.variant == FunctorVariant::pseudo && !d.sq_v_inverse(c))
        rep.add("F-pseudo-compositor", "(" + sh(f) + "," + sh(g) + ")", sh(c), "invertible");
    }
  for (Idx a = 0; a < s.n_objects; ++a) {
    Idx c = F.unitor(a);
    SquareFrame want{d.id_h[F.on_obj(a)], F.on_h(s.id_h[a]),
                     d.id_v[F.on_obj(a)], d.id_v[F.on_obj(a)]};
    if (!(d.sq[c] == want)) {
      rep.add("F-unitor-frame", "object " + sh(a), d.show_frame(c), "");
      continue;
    }
    if (F.variant == FunctorVariant::strict && !d.is_identity_sq_v(c))
      rep.add("F-strict-unitor", "object " + sh(a), sh(c), "identity");
    if (F.variant == FunctorVariant::pseudo && !d.sq_v_inverse(c))
      rep.add("F-pseudo-unitor", "object " + sh(a), sh(c), "invertible");
  }

  // compositor naturality: [Fa|Fb] / comp_{f',g'} = comp_{f,g} / F([a|b])
  for (Idx a = 0; a < s.ns(); ++a)
    for (Idx b = 0; b < s.ns(); ++b) {
      if (s.sq[a].right != s.sq[b].left) continue;
      Idx lhs = d.vcomp_sq(d.hcomp_sq(F.on_sq(a), F.on_sq(b)),
                           F.compositor(s.sq[a].bottom, s.sq[b].bottom));
      Idx rhs = d.vcomp_sq(F.compositor(s.sq[a].top, s.sq[b].top),
                           F.on_sq(s.hcomp_sq_raw(a, b)));
      if (lhs != rhs)
        rep.add("F-compositor-natural", "(" + sh(a) + "," + sh(b) + ")", sh(lhs), sh(rhs));
    }
  // unitor naturality against vertical cells
  for (Idx u = 0; u < s.nv(); ++u) {
    Idx lhs = d.vcomp_sq(d.id_sq_v[F.on_v(u)], F.unitor(s.v_tgt[u]));
    Idx rhs = d.vcomp_sq(F.unitor(s.v_src[u]), F.on_sq(s.id_sq_v[u]));
    if (lhs != rhs) rep.add("F-unitor-natural", "vcell " + sh(u), sh(lhs), sh(rhs));
  }

  // associativity coherence (strict source/target composition assumed for the
  // horizontal 1-categories; pseudo overlays enter through assoc squares)
  auto dst_assoc = [&](Idx x, Idx y, Idx z) -> Idx {
    auto it = d.assoc.find({x, y, z});
    if (it != d.assoc.end()) return it->second;
    return d.id_sq_h[d.hcomp_h(d.hcomp_h(x, y), z)];
  };
  auto src_assoc = [&](Idx x, Idx y, Idx z) -> Idx {
    auto it = s.assoc.find({x, y, z});
    if (it != s.assoc.end()) return it->second;
    return s.id_sq_h[s.hcomp_h(s.hcomp_h(x, y), z)];
  };
  for (Idx f = 0; f < s.nh(); ++f)
    for (Idx g = 0; g < s.nh(); ++g) {
      if (s.h_tgt[f] != s.h_src[g]) continue;
      for (Idx h = 0; h < s.nh(); ++h) {
        if (s.h_tgt[g] != s.h_src[h]) continue;
        Idx lhs = d.vcomp_sq_many(
            {d.hcomp_sq(F.compositor(f, g), d.id_sq_h[F.on_h(h)]),
             F.compositor(s.hcomp_h_raw(f, g), h), F.on_sq(src_assoc(f, g, h))});
        Idx rhs = d.vcomp_sq_many(
            {dst_assoc(F.on_h(f), F.on_h(g), F.on_h(h)),
             d.hcomp_sq(d.id_sq_h[F.on_h(f)], F.compositor(g, h)),
             F.compositor(f, s.hcomp_h_raw(g, h))});
        if (lhs != rhs)
          rep.add("F-compositor-assoc", "(" + sh(f) + "," + sh(g) + "," + sh(h) + ")", sh(lhs), sh(rhs));
      }
    }
  // unit coherence
  auto dst_lunit = [&](Idx x) -> Idx {
    if (!d.lunit.empty()) return d.lunit[x];
    return d.id_sq_h[x];
  };
  auto dst_runit = [&](Idx x) -> Idx {
    if (!d.runit.empty()) return d.runit[x];
    return d.id_sq_h[x];
  };
  auto src_lunit = [&](Idx x) -> Idx {
    if (!s.lunit.empty()) return s.lunit[x];
    return s.id_sq_h[x];
  };
  auto src_runit = [&](Idx x) -> Idx {
    if (!s.runit.empty()) return s.runit[x];
    return s.id_sq_h[x];
  };
  for (Idx f = 0; f < s.nh(); ++f) {
    {
      Idx lhs = d.vcomp_sq_many({d.hcomp_sq(F.unitor(s.h_src[f]), d.id_sq_h[F.on_h(f)]),
                                 F.compositor(s.id_h[s.h_src[f]], f),
                                 F.on_sq(src_lunit(f))});
      Idx rhs = dst_lunit(F.on_h(f));
      if (lhs != rhs) rep.add("F-left-unit-coherence", "hcell " + sh(f), sh(lhs), sh(rhs));
    }
    {
      Idx lhs = d.vcomp_sq_many({d.hcomp_sq(d.id_sq_h[F.on_h(f)], F.unitor(s.h_tgt[f])),
                                 F.compositor(f, s.id_h[s.h_tgt[f]]),
                                 F.on_sq(src_runit(f))});
      Idx rhs = dst_runit(F.on_h(f));
      if (lhs != rhs) rep.add("F-right-unit-coherence", "hcell " + sh(f), sh(lhs), sh(rhs));
    }
  }

  return rep;
}

}  // namespace dblcat
