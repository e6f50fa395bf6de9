#pragma once

#include "dblcat/functor.hpp"

namespace dblcat {

enum class HVariant : std::uint8_t { oplax, lax, pseudo, strict };
enum class VVariant : std::uint8_t { lax, oplax, pseudo, strict, invertible };

inline const char* hvariant_name(HVariant v) {
  switch (v) {
    case HVariant::oplax: return "oplax";
    case HVariant::lax: return "lax";
    case HVariant::pseudo: return "pseudo";
    case HVariant::strict: return "strict";
  }
  return "?";
}
inline const char* vvariant_name(VVariant v) {
  switch (v) {
    case VVariant::lax: return "lax";
    case VVariant::oplax: return "oplax";
    case VVariant::pseudo: return "pseudo";
    case VVariant::strict: return "strict";
    case VVariant::invertible: return "invertible";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Horizontal transformation alpha: F => G with 1h-components alpha(A), square
// components alpha^u at vcells, and globular components delta_f at hcells.
// delta is stored in its native direction:
//   oplax (delta_oplax=true):  [F f | alpha(B)] => [alpha(A) | G f]
//   lax   (delta_oplax=false): [alpha(A) | G f] => [F f | alpha(B)]
// pseudo/strict are oplax-oriented; pseudo carries inverse witnesses.

struct HorizontalTransformation {
  std::string name;
  HVariant variant = HVariant::strict;
  bool delta_oplax = true;
  LaxDoubleFunctor F, G;
  std::vector<Idx> at_obj;     // per src object
  std::vector<Idx> at_v;       // per src vcell
  std::vector<Idx> delta;      // per src hcell
  std::vector<Idx> delta_inv;  // optional witnesses (pseudo)

  const DoubleCategory& src() const { return *F.src; }
  const DoubleCategory& dst() const { return *F.dst; }

  Idx delta_in_direction(Idx f, bool want_oplax) const {
    if (want_oplax == delta_oplax) return delta[f];
    if (!delta_inv.empty()) return delta_inv[f];
    if (dst().is_identity_sq_v(delta[f])) return delta[f];
    auto inv = dst().sq_v_inverse(delta[f]);
    if (!inv)
      throw PreconditionError(name + ": delta at hcell " + std::to_string(f) +
                              " has no inverse for the requested direction");
    return *inv;
  }
};

// Vertical transformation alpha0: F => G with 1v-components, square components
// (alpha0)_f at hcells, and vertically globular components alpha0^u at vcells.
// at_v native direction:
//   lax  (au_lax=true):  left = alpha0(A)/G(u),  right = F(u)/alpha0(A')
//   oplax(au_lax=false): left = F(u)/alpha0(A'), right = alpha0(A)/G(u)

struct VerticalTransformation {
  std::string name;
  VVariant variant = VVariant::strict;
  bool au_lax = true;
  LaxDoubleFunctor F, G;
  std::vector<Idx> at_obj;  // per src object: vcell
  std::vector<Idx> at_h;    // per src hcell: square
  std::vector<Idx> at_v;    // per src vcell: vertically globular square

  const DoubleCategory& src() const { return *F.src; }
  const DoubleCategory& dst() const { return *F.dst; }
};

// ---------------------------------------------------------------------------
// Identity transformations.

inline HorizontalTransformation identity_horizontal_transformation(const LaxDoubleFunctor& F) {
  HorizontalTransformation t;
  t.name = "Id(" + F.name + ")";
  t.variant = HVariant::strict;
  t.F = F;
  t.G = F;
  const auto& s = *F.src;
  const auto& d = *F.dst;
  t.at_obj.resize(s.n_objects);
  for (Idx a = 0; a < s.n_objects; ++a) t.at_obj[a] = d.id_h[F.on_obj(a)];
  t.at_v.resize(s.nv());
  for (Idx u = 0; u < s.nv(); ++u) t.at_v[u] = d.id_sq_v[F.on_v(u)];
  t.delta.resize(s.nh());
  for (Idx f = 0; f < s.nh(); ++f) t.delta[f] = d.id_sq_h[F.on_h(f)];
  return t;
}

inline VerticalTransformation identity_vertical_transformation(const LaxDoubleFunctor& F) {
  VerticalTransformation t;
  t.name = "Idv(" + F.name + ")";
  t.variant = VVariant::invertible;
  t.F = F;
  t.G = F;
  const auto& s = *F.src;
  const auto& d = *F.dst;
  t.at_obj.resize(s.n_objects);
  for (Idx a = 0; a < s.n_objects; ++a) t.at_obj[a] = d.id_v[F.on_obj(a)];
  t.at_h.resize(s.nh());
  for (Idx f = 0; f < s.nh(); ++f) t.at_h[f] = d.id_sq_h[F.on_h(f)];
  t.at_v.resize(s.nv());
  for (Idx u = 0; u < s.nv(); ++u) t.at_v[u] = d.id_sq_v[F.on_v(u)];
  return t;
}

// ---------------------------------------------------------------------------
// Checkers. Structural problems (sizes, wrong frames, boundary mismatch) throw;
// law failures land in the report.

inline ValidationReport check_horizontal_transformation(const HorizontalTransformation& t,
                                                        int max_per_law = 10) {
  if (!same_category(t.F.src, t.G.src) || !same_category(t.F.dst, t.G.dst))
    throw StructuralError(t.name + ": boundary functors do not share source/target");
  const auto& s = t.src();
  const auto& d = t.dst();
  if (t.at_obj.size() != static_cast<size_t>(s.n_objects) ||
      t.at_v.size() != static_cast<size_t>(s.nv()) ||
      t.delta.size() != static_cast<size_t>(s.nh()))
    throw StructuralError(t.name + ": component tables wrongly sized");

  for (Idx a = 0; a < s.n_objects; ++a) {
    d.require_h(t.at_obj[a]);
    if (d.h_src[t.at_obj[a]] != t.F.on_obj(a) || d.h_tgt[t.at_obj[a]] != t.G.on_obj(a))
      throw StructuralError(t.name + ": component at object " + std::to_string(a) +
                            " has wrong endpoints");
  }
  for (Idx u = 0; u < s.nv(); ++u) {
    d.require_sq(t.at_v[u]);
    SquareFrame want{t.at_obj[s.v_src[u]], t.at_obj[s.v_tgt[u]], t.F.on_v(u), t.G.on_v(u)};
    if (!(d.sq[t.at_v[u]] == want))
      throw StructuralError(t.name + ": component at vcell " + std::to_string(u) +
                            " has wrong frame");
  }
  for (Idx f = 0; f < s.nh(); ++f) {
    d.require_sq(t.delta[f]);
    Idx A = s.h_src[f], B = s.h_tgt[f];
    Idx top = d.hcomp_h(t.F.on_h(f), t.at_obj[B]);
    Idx bot = d.hcomp_h(t.at_obj[A], t.G.on_h(f));
    if (!t.delta_oplax) std::swap(top, bot);
    SquareFrame want{top, bot, d.id_v[t.F.on_obj(A)], d.id_v[t.G.on_obj(B)]};
    if (!(d.sq[t.delta[f]] == want))
      throw StructuralError(t.name + ": delta at hcell " + std::to_string(f) +
                            " has wrong frame");
  }

  ValidationReport rep;
  rep.max_per_law = max_per_law;
  auto sh = [&](Idx i) { return std::to_string(i); };

  if (t.variant == HVariant::strict) {
    for (Idx f = 0; f < s.nh(); ++f)
      if (!d.is_identity_sq_v(t.delta[f]))
        rep.add("strictness", "delta at hcell " + sh(f), sh(t.delta[f]), "identity");
  }
  if (t.variant == HVariant::pseudo) {
    for (Idx f = 0; f < s.nh(); ++f) {
      if (!t.delta_inv.empty()) {
        Idx i = t.delta_inv[f];
        bool ok = d.valid_sq(i) && d.sq[i].top == d.sq[t.delta[f]].bottom &&
                  d.sq[i].bottom == d.sq[t.delta[f]].top &&
                  d.vcomp_sq_raw(t.delta[f], i) == d.id_sq_h[d.sq[t.delta[f]].top] &&
                  d.vcomp_sq_raw(i, t.delta[f]) == d.id_sq_h[d.sq[i].top];
        if (!ok) rep.add("invertibility", "delta at hcell " + sh(f), sh(t.delta[f]), sh(i));
      } else if (!d.sq_v_inverse(t.delta[f])) {
        rep.add("invertibility", "delta at hcell " + sh(f), sh(t.delta[f]), "no inverse");
      }
    }
  }

  const bool op = t.delta_oplax;

  // h.o.t.-1: compositor coherence
  for (Idx f = 0; f < s.nh(); ++f)
    for (Idx g = 0; g < s.nh(); ++g) {
      if (s.h_tgt[f] != s.h_src[g]) continue;
      Idx fg = s.hcomp_h_raw(f, g);
      Idx A = s.h_src[f], C = s.h_tgt[g];
      Idx lhs, rhs;
      if (op) {
        lhs = d.vcomp_sq(d.hcomp_sq(t.F.compositor(f, g), d.id_sq_h[t.at_obj[C]]), t.delta[fg]);
        rhs = d.vcomp_sq_many({d.hcomp_sq(d.id_sq_h[t.F.on_h(f)], t.delta[g]),
                               d.hcomp_sq(t.delta[f], d.id_sq_h[t.G.on_h(g)]),
                               d.hcomp_sq(d.id_sq_h[t.at_obj[A]], t.G.compositor(f, g))});
      } else {
        lhs = d.vcomp_sq_many({d.hcomp_sq(t.delta[f], d.id_sq_h[t.G.on_h(g)]),
                               d.hcomp_sq(d.id_sq_h[t.F.on_h(f)], t.delta[g]),
                               d.hcomp_sq(t.F.compositor(f, g), d.id_sq_h[t.at_obj[C]])});
        rhs = d.vcomp_sq(d.hcomp_sq(d.id_sq_h[t.at_obj[A]], t.G.compositor(f, g)), t.delta[fg]);
      }
      if (lhs != rhs) rep.add("h.o.t.-1", "(" + sh(f) + "," + sh(g) + ")", sh(lhs), sh(rhs));
    }

  // h.o.t.-2: unitor coherence
  for (Idx A = 0; A < s.n_objects; ++A) {
    Idx one = s.id_h[A];
    Idx lhs, rhs;
    if (op) {
      lhs = d.vcomp_sq(d.hcomp_sq(t.F.unitor(A), d.id_sq_h[t.at_obj[A]]), t.delta[one]);
      rhs = d.hcomp_sq(d.id_sq_h[t.at_obj[A]], t.G.unitor(A));
    } else {
      lhs = d.vcomp_sq(d.hcomp_sq(d.id_sq_h[t.at_obj[A]], t.G.unitor(A)), t.delta[one]);
      rhs = d.hcomp_sq(t.F.unitor(A), d.id_sq_h[t.at_obj[A]]);
    }
    if (lhs != rhs) rep.add("h.o.t.-2", "object " + sh(A), sh(lhs), sh(rhs));
  }

  // h.o.t.-3 / h.o.t.-4: vertical functoriality of alpha^u
  for (Idx u = 0; u < s.nv(); ++u)
    for (Idx w = 0; w < s.nv(); ++w) {
      if (s.v_tgt[u] != s.v_src[w]) continue;
      Idx lhs = t.at_v[s.vcomp_v_raw(u, w)];
      Idx rhs = d.vcomp_sq(t.at_v[u], t.at_v[w]);
      if (lhs != rhs) rep.add("h.o.t.-3", "(" + sh(u) + "," + sh(w) + ")", sh(lhs), sh(rhs));
    }
  for (Idx A = 0; A < s.n_objects; ++A) {
    Idx lhs = t.at_v[s.id_v[A]];
    Idx rhs = d.id_sq_h[t.at_obj[A]];
    if (lhs != rhs) rep.add("h.o.t.-4", "object " + sh(A), sh(lhs), sh(rhs));
  }

  // h.o.t.-5: naturality against every square
  for (Idx a = 0; a < s.ns(); ++a) {
    Idx f = s.sq[a].top, g = s.sq[a].bottom, u = s.sq[a].left, v = s.sq[a].right;
    Idx lhs, rhs;
    if (op) {
      lhs = d.vcomp_sq(d.hcomp_sq(t.F.on_sq(a), t.at_v[v]), t.delta[g]);
      rhs = d.vcomp_sq(t.delta[f], d.hcomp_sq(t.at_v[u], t.G.on_sq(a)));
    } else {
      lhs = d.vcomp_sq(t.delta[f], d.hcomp_sq(t.F.on_sq(a), t.at_v[v]));
      rhs = d.vcomp_sq(d.hcomp_sq(t.at_v[u], t.G.on_sq(a)), t.delta[g]);
    }
    if (lhs != rhs) rep.add("h.o.t.-5", "square " + sh(a), sh(lhs), sh(rhs));
  }

  return rep;
}

inline ValidationReport check_vertical_transformation(const VerticalTransformation& t,
                                                      int max_per_law = 10) {
  if (!same_category(t.F.src, t.G.src) || !same_category(t.F.dst, t.G.dst))
    throw StructuralError(t.name + ": boundary functors do not share source/target");
  const auto& s = t.src();
  const auto& d = t.dst();
  if (t.at_obj.size() != static_cast<size_t>(s.n_objects) ||
      t.at_h.size() != static_cast<size_t>(s.nh()) ||
      t.at_v.size() != static_cast<size_t>(s.nv()))
    throw StructuralError(t.name + ": component tables wrongly sized");

  for (Idx a = 0; a < s.n_objects; ++a) {
    d.require_v(t.at_obj[a]);
    if (d.v_src[t.at_obj[a]] != t.F.on_obj(a) || d.v_tgt[t.at_obj[a]] != t.G.on_obj(a))
      throw StructuralError(t.name + ": component at object " + std::to_string(a) +
                            " has wrong endpoints");
  }
  for (Idx f = 0; f < s.nh(); ++f) {
    d.require_sq(t.at_h[f]);
    SquareFrame want{t.F.on_h(f), t.G.on_h(f), t.at_obj[s.h_src[f]], t.at_obj[s.h_tgt[f]]};
    if (!(d.sq[t.at_h[f]] == want))
      throw StructuralError(t.name + ": component at hcell " + std::to_string(f) +
                            " has wrong frame");
  }
  for (Idx u = 0; u < s.nv(); ++u) {
    d.require_sq(t.at_v[u]);
    Idx A = s.v_src[u], Ap = s.v_tgt[u];
    Idx l = d.vcomp_v(t.at_obj[A], t.G.on_v(u));
    Idx r = d.vcomp_v(t.F.on_v(u), t.at_obj[Ap]);
    if (!t.au_lax) std::swap(l, r);
    SquareFrame want{d.id_h[t.F.on_obj(A)], d.id_h[t.G.on_obj(Ap)], l, r};
    if (!(d.sq[t.at_v[u]] == want))
      throw StructuralError(t.name + ": component at vcell " + std::to_string(u) +
                            " has wrong frame");
  }

  ValidationReport rep;
  rep.max_per_law = max_per_law;
  auto sh = [&](Idx i) { return std::to_string(i); };

  if (t.variant == VVariant::strict || t.variant == VVariant::invertible) {
    for (Idx u = 0; u < s.nv(); ++u)
      if (!d.is_identity_sq_h(t.at_v[u]))
        rep.add("strictness", "component at vcell " + sh(u), sh(t.at_v[u]), "identity");
  }
  if (t.variant == VVariant::pseudo) {
    for (Idx u = 0; u < s.nv(); ++u)
      if (!d.sq_h_inverse(t.at_v[u]))
        rep.add("invertibility", "component at vcell " + sh(u), sh(t.at_v[u]), "no h-inverse");
  }
  if (t.variant == VVariant::invertible) {
    for (Idx f = 0; f < s.nh(); ++f)
      if (!d.sq_v_inverse(t.at_h[f]))
        rep.add("invertibility", "component at hcell " + sh(f), sh(t.at_h[f]), "no v-inverse");
    for (Idx a = 0; a < s.n_objects; ++a)
      if (!d.v_inverse(t.at_obj[a]))
        rep.add("invertibility", "component at object " + sh(a), sh(t.at_obj[a]), "no inverse");
  }

  const bool lax = t.au_lax;

  // v.l.t.-1
  for (Idx f = 0; f < s.nh(); ++f)
    for (Idx g = 0; g < s.nh(); ++g) {
      if (s.h_tgt[f] != s.h_src[g]) continue;
      Idx lhs = d.vcomp_sq(d.hcomp_sq(t.at_h[f], t.at_h[g]), t.G.compositor(f, g));
      Idx rhs = d.vcomp_sq(t.F.compositor(f, g), t.at_h[s.hcomp_h_raw(f, g)]);
      if (lhs != rhs) rep.add("v.l.t.-1", "(" + sh(f) + "," + sh(g) + ")", sh(lhs), sh(rhs));
    }

  // v.l.t.-2
  for (Idx A = 0; A < s.n_objects; ++A) {
    Idx lhs = d.vcomp_sq(t.F.unitor(A), t.at_h[s.id_h[A]]);
    Idx rhs = d.vcomp_sq(d.id_sq_v[t.at_obj[A]], t.G.unitor(A));
    if (lhs != rhs) rep.add("v.l.t.-2", "object " + sh(A), sh(lhs), sh(rhs));
  }

  // v.l.t.-3: staircase pasting for composites
  for (Idx u = 0; u < s.nv(); ++u)
    for (Idx w = 0; w < s.nv(); ++w) {
      if (s.v_tgt[u] != s.v_src[w]) continue;
      Idx lhs = t.at_v[s.vcomp_v_raw(u, w)];
      Idx rhs;
      if (lax) {
        rhs = d.hcomp_sq(d.vcomp_sq(t.at_v[u], d.id_sq_v[t.G.on_v(w)]),
                         d.vcomp_sq(d.id_sq_v[t.F.on_v(u)], t.at_v[w]));
      } else {
        rhs = d.hcomp_sq(d.vcomp_sq(d.id_sq_v[t.F.on_v(u)], t.at_v[w]),
                         d.vcomp_sq(t.at_v[u], d.id_sq_v[t.G.on_v(w)]));
      }
      if (lhs != rhs) rep.add("v.l.t.-3", "(" + sh(u) + "," + sh(w) + ")", sh(lhs), sh(rhs));
    }

  // v.l.t.-4
  for (Idx A = 0; A < s.n_objects; ++A) {
    Idx lhs = t.at_v[s.id_v[A]];
    Idx rhs = d.id_sq_v[t.at_obj[A]];
    if (lhs != rhs) rep.add("v.l.t.-4", "object " + sh(A), sh(lhs), sh(rhs));
  }

  // v.l.t.-5: naturality against every square
  for (Idx a = 0; a < s.ns(); ++a) {
    Idx f = s.sq[a].top, g = s.sq[a].bottom, u = s.sq[a].left, v = s.sq[a].right;
    Idx lhs, rhs;
    if (lax) {
      lhs = d.hcomp_sq(t.at_v[u], d.vcomp_sq(t.F.on_sq(a), t.at_h[g]));
      rhs = d.hcomp_sq(d.vcomp_sq(t.at_h[f], t.G.on_sq(a)), t.at_v[v]);
    } else {
      lhs = d.hcomp_sq(d.vcomp_sq(t.F.on_sq(a), t.at_h[g]), t.at_v[v]);
      rhs = d.hcomp_sq(t.at_v[u], d.vcomp_sq(t.at_h[f], t.G.on_sq(a)));
    }
    if (lhs != rhs) rep.add("v.l.t.-5", "square " + sh(a), sh(lhs), sh(rhs));
  }

  return rep;
}

// ---------------------------------------------------------------------------
// Composition and whiskering.

inline VerticalTransformation compose_vertical_transformations(const VerticalTransformation& a,
                                                               const VerticalTransformation& b) {
  if (!same_category(a.F.dst, b.F.dst) || !same_category(a.F.src, b.F.src))
    throw StructuralError("compose_vertical_transformations: incompatible boundaries");
  // b after a: a: F=>G, b: G=>H
  if (a.G.obj_map != b.F.obj_map || a.G.h_map != b.F.h_map || a.G.v_map != b.F.v_map ||
      a.G.sq_map != b.F.sq_map)
    throw StructuralError("compose_vertical_transformations: middle functor mismatch");
  if (a.au_lax != b.au_lax)
    throw StructuralError("compose_vertical_transformations: mixed component orientations");
  const auto& s = a.src();
  const auto& d = a.dst();
  VerticalTransformation r;
  r.name = a.name + "/" + b.name;
  r.variant = std::min(a.variant, b.variant);
  if (a.variant == VVariant::invertible && b.variant == VVariant::invertible)
    r.variant = VVariant::invertible;
  r.au_lax = a.au_lax;
  r.F = a.F;
  r.G = b.G;
  r.at_obj.resize(s.n_objects);
  for (Idx o = 0; o < s.n_objects; ++o) r.at_obj[o] = d.vcomp_v(a.at_obj[o], b.at_obj[o]);
  r.at_h.resize(s.nh());
  for (Idx f = 0; f < s.nh(); ++f) r.at_h[f] = d.vcomp_sq(a.at_h[f], b.at_h[f]);
  r.at_v.resize(s.nv());
  for (Idx u = 0; u < s.nv(); ++u) {
    if (a.au_lax) {
      Idx x = d.vcomp_sq(d.id_sq_v[a.at_obj[s.v_src[u]]], b.at_v[u]);
      Idx y = d.vcomp_sq(a.at_v[u], d.id_sq_v[b.at_obj[s.v_tgt[u]]]);
      r.at_v[u] = d.hcomp_sq(x, y);
    } else {
      Idx x = d.vcomp_sq(a.at_v[u], d.id_sq_v[b.at_obj[s.v_tgt[u]]]);
      Idx y = d.vcomp_sq(d.id_sq_v[a.at_obj[s.v_src[u]]], b.at_v[u]);
      r.at_v[u] = d.hcomp_sq(x, y);
    }
  }
  return r;
}

inline HorizontalTransformation compose_horizontal_transformations(
    const HorizontalTransformation& a, const HorizontalTransformation& b) {
  // b after a: a: F=>G, b: G=>H
  if (a.G.obj_map != b.F.obj_map || a.G.h_map != b.F.h_map)
    throw StructuralError("compose_horizontal_transformations: middle functor mismatch");
  if (a.delta_oplax != b.delta_oplax)
    throw StructuralError("compose_horizontal_transformations: mixed delta orientations");
  const auto& s = a.src();
  const auto& d = a.dst();
  HorizontalTransformation r;
  r.name = "[" + a.name + "|" + b.name + "]";
  r.variant = std::min(a.variant, b.variant);
  r.delta_oplax = a.delta_oplax;
  r.F = a.F;
  r.G = b.G;
  r.at_obj.resize(s.n_objects);
  for (Idx o = 0; o < s.n_objects; ++o) r.at_obj[o] = d.hcomp_h(a.at_obj[o], b.at_obj[o]);
  r.at_v.resize(s.nv());
  for (Idx u = 0; u < s.nv(); ++u) r.at_v[u] = d.hcomp_sq(a.at_v[u], b.at_v[u]);
  r.delta.resize(s.nh());
  for (Idx f = 0; f < s.nh(); ++f) {
    Idx A = s.h_src[f], B = s.h_tgt[f];
    if (a.delta_oplax) {
      // [Ff|aB|bB] => [aA|Gf|bB] => [aA|bA|Hf]
      r.delta[f] = d.vcomp_sq(d.hcomp_sq(a.delta[f], d.id_sq_h[b.at_obj[B]]),
                              d.hcomp_sq(d.id_sq_h[a.at_obj[A]], b.delta[f]));
    } else {
      r.delta[f] = d.vcomp_sq(d.hcomp_sq(d.id_sq_h[a.at_obj[A]], b.delta[f]),
                              d.hcomp_sq(a.delta[f], d.id_sq_h[b.at_obj[B]]));
    }
  }
  return r;
}

// Whisker a vertical transformation by functors: H . t (post) or t . K (pre).
inline VerticalTransformation whisker_vertical_post(const LaxDoubleFunctor& H,
                                                    const VerticalTransformation& t) {
  if (!same_category(t.F.dst, H.src))
    throw StructuralError("whisker_vertical_post: boundary mismatch");
  const auto& s = t.src();
  const auto& d = *H.dst;
  VerticalTransformation r;
  r.name = H.name + "." + t.name;
  r.variant = t.variant == VVariant::invertible ? VVariant::strict : t.variant;
  r.au_lax = t.au_lax;
  r.F = compose_functor(H, t.F);
  r.G = compose_functor(H, t.G);
  r.at_obj.resize(s.n_objects);
  for (Idx o = 0; o < s.n_objects; ++o) r.at_obj[o] = H.on_v(t.at_obj[o]);
  r.at_h.resize(s.nh());
  for (Idx f = 0; f < s.nh(); ++f) r.at_h[f] = H.on_sq(t.at_h[f]);
  r.at_v.resize(s.nv());
  for (Idx u = 0; u < s.nv(); ++u) {
    // vertically globular source squares keep the shape only up to H's unitors
    Idx m = H.on_sq(t.at_v[u]);
    Idx A = s.v_src[u], Ap = s.v_tgt[u];
    Idx fix_top = H.unitor(t.F.on_obj(A));
    Idx fix_bot = H.unitor(t.G.on_obj(Ap));
    if (!d.is_identity_sq_v(fix_top)) m = d.vcomp_sq(fix_top, m);
    if (!d.is_identity_sq_v(fix_bot)) {
      auto inv = d.sq_v_inverse(fix_bot);
      if (!inv) throw PreconditionError("whisker_vertical_post: non-invertible unitor");
      m = d.vcomp_sq(m, *inv);
    }
    r.at_v[u] = m;
  }
  if (t.variant == VVariant::invertible) r.variant = VVariant::invertible;
  return r;
}

inline VerticalTransformation whisker_vertical_pre(const VerticalTransformation& t,
                                                   const LaxDoubleFunctor& K) {
  if (!same_category(K.dst, t.F.src))
    throw StructuralError("whisker_vertical_pre: boundary mismatch");
  const auto& s = *K.src;
  VerticalTransformation r;
  r.name = t.name + "." + K.name;
  r.variant = t.variant;
  r.au_lax = t.au_lax;
  r.F = compose_functor(t.F, K);
  r.G = compose_functor(t.G, K);
  r.at_obj.resize(s.n_objects);
  for (Idx o = 0; o < s.n_objects; ++o) r.at_obj[o] = t.at_obj[K.on_obj(o)];
  r.at_h.resize(s.nh());
  for (Idx f = 0; f < s.nh(); ++f) r.at_h[f] = t.at_h[K.on_h(f)];
  r.at_v.resize(s.nv());
  for (Idx u = 0; u < s.nv(); ++u) r.at_v[u] = t.at_v[K.on_v(u)];
  return r;
}

inline HorizontalTransformation whisker_horizontal_pre(const HorizontalTransformation& t,
                                                       const LaxDoubleFunctor& K) {
  if (!same_category(K.dst, t.F.src))
    throw StructuralError("whisker_horizontal_pre: boundary mismatch");
  const auto& s = *K.src;
  HorizontalTransformation r;
  r.name = t.name + "." + K.name;
  r.variant = t.variant;
  r.delta_oplax = t.delta_oplax;
  r.F = compose_functor(t.F, K);
  r.G = compose_functor(t.G, K);
  r.at_obj.resize(s.n_objects);
  for (Idx o = 0; o < s.n_objects; ++o) r.at_obj[o] = t.at_obj[K.on_obj(o)];
  r.at_v.resize(s.nv());
  for (Idx u = 0; u < s.nv(); ++u) r.at_v[u] = t.at_v[K.on_v(u)];
  r.delta.resize(s.nh());
  for (Idx f = 0; f < s.nh(); ++f) r.delta[f] = t.delta[K.on_h(f)];
  if (!t.delta_inv.empty()) {
    r.delta_inv.resize(s.nh());
    for (Idx f = 0; f < s.nh(); ++f) r.delta_inv[f] = t.delta_inv[K.on_h(f)];
  }
  return r;
}

inline HorizontalTransformation whisker_horizontal_post(const LaxDoubleFunctor& H,
                                                        const HorizontalTransformation& t) {
  if (!same_category(t.F.dst, H.src))
    throw StructuralError("whisker_horizontal_post: boundary mismatch");
  const auto& s = t.src();
  const auto& d = *H.dst;
  HorizontalTransformation r;
  r.name = H.name + "." + t.name;
  r.variant = t.variant;
  r.delta_oplax = t.delta_oplax;
  r.F = compose_functor(H, t.F);
  r.G = compose_functor(H, t.G);
  r.at_obj.resize(s.n_objects);
  for (Idx o = 0; o < s.n_objects; ++o) r.at_obj[o] = H.on_h(t.at_obj[o]);
  r.at_v.resize(s.nv());
  for (Idx u = 0; u < s.nv(); ++u) r.at_v[u] = H.on_sq(t.at_v[u]);
  r.delta.resize(s.nh());
  for (Idx f = 0; f < s.nh(); ++f) {
    Idx A = s.h_src[f], B = s.h_tgt[f];
    Idx m = H.on_sq(t.delta[f]);
    // paste H's compositors to restore the [Hx|Hy] boundary shape
    Idx ctop, cbot;
    if (t.delta_oplax) {
      ctop = H.compositor(t.F.on_h(f), t.at_obj[B]);
      cbot = H.compositor(t.at_obj[A], t.G.on_h(f));
    } else {
      ctop = H.compositor(t.at_obj[A], t.G.on_h(f));
      cbot = H.compositor(t.F.on_h(f), t.at_obj[B]);
    }
    m = d.vcomp_sq(ctop, m);
    if (!d.is_identity_sq_v(cbot)) {
      auto inv = d.sq_v_inverse(cbot);
      if (!inv) throw PreconditionError("whisker_horizontal_post: non-invertible compositor");
      m = d.vcomp_sq(m, *inv);
    }
    r.delta[f] = m;
  }
  return r;
}

}  // namespace dblcat
