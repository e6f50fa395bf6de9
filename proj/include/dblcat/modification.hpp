#pragma once

#include "dblcat/transform.hpp"

namespace dblcat {

enum class ModKind : std::uint8_t { general, horizontal, vertical };

// A modification filling the square of transformations
//
//        F ==(top: alpha)==> G
//        |                   |
//   (left: alpha0)     (right: beta0)
//        v                   v
//        F' ==(bot: beta)==> G'
//
// with component squares Theta_A framed by the four object components. The
// horizontal (resp. vertical) restriction takes identity vertical (resp.
// horizontal) boundary transformations.
struct Modification {
  std::string name;
  ModKind kind = ModKind::general;
  HorizontalTransformation top, bottom;
  VerticalTransformation left, right;
  std::vector<Idx> at_obj;

  const DoubleCategory& src() const { return top.src(); }
  const DoubleCategory& dst() const { return top.dst(); }
};

inline Modification make_horizontal_modification(std::string name,
                                                 const HorizontalTransformation& top,
                                                 const HorizontalTransformation& bottom,
                                                 std::vector<Idx> at_obj) {
  Modification m;
  m.name = std::move(name);
  m.kind = ModKind::horizontal;
  m.top = top;
  m.bottom = bottom;
  m.left = identity_vertical_transformation(top.F);
  m.right = identity_vertical_transformation(top.G);
  m.at_obj = std::move(at_obj);
  return m;
}

inline Modification make_vertical_modification(std::string name,
                                               const VerticalTransformation& left,
                                               const VerticalTransformation& right,
                                               std::vector<Idx> at_obj) {
  Modification m;
  m.name = std::move(name);
  m.kind = ModKind::vertical;
  m.left = left;
  m.right = right;
  m.top = identity_horizontal_transformation(left.F);
  m.bottom = identity_horizontal_transformation(left.G);
  m.at_obj = std::move(at_obj);
  return m;
}

inline Modification identity_modification_of(const HorizontalTransformation& t) {
  std::vector<Idx> comps(t.src().n_objects);
  for (Idx a = 0; a < t.src().n_objects; ++a) comps[a] = t.dst().id_sq_h[t.at_obj[a]];
  return make_horizontal_modification("Id(" + t.name + ")", t, t, std::move(comps));
}

inline Modification identity_modification_of(const VerticalTransformation& t) {
  std::vector<Idx> comps(t.src().n_objects);
  for (Idx a = 0; a < t.src().n_objects; ++a) comps[a] = t.dst().id_sq_v[t.at_obj[a]];
  return make_vertical_modification("Id(" + t.name + ")", t, t, std::move(comps));
}

inline ValidationReport check_modification(const Modification& m, int max_per_law = 10) {
  const auto& s = m.src();
  const auto& d = m.dst();
  auto eqf = [](const LaxDoubleFunctor& a, const LaxDoubleFunctor& b) {
    return a.obj_map == b.obj_map && a.h_map == b.h_map && a.v_map == b.v_map &&
           a.sq_map == b.sq_map;
  };
  if (!eqf(m.top.F, m.left.F) || !eqf(m.top.G, m.right.F) || !eqf(m.bottom.F, m.left.G) ||
      !eqf(m.bottom.G, m.right.G))
    throw StructuralError(m.name + ": boundary transformations do not share corners");
  if (m.top.delta_oplax != m.bottom.delta_oplax)
    throw StructuralError(m.name + ": top and bottom have different delta orientations");
  if (m.left.au_lax != m.right.au_lax)
    throw StructuralError(m.name + ": left and right have different component orientations");
  if (m.at_obj.size() != static_cast<size_t>(s.n_objects))
    throw StructuralError(m.name + ": component table wrongly sized");
  for (Idx a = 0; a < s.n_objects; ++a) {
    d.require_sq(m.at_obj[a]);
    SquareFrame want{m.top.at_obj[a], m.bottom.at_obj[a], m.left.at_obj[a], m.right.at_obj[a]};
    if (!(d.sq[m.at_obj[a]] == want))
      throw StructuralError(m.name + ": component at object " + std::to_string(a) +
                            " has wrong frame");
  }

  ValidationReport rep;
  rep.max_per_law = max_per_law;
  auto sh = [&](Idx i) { return std::to_string(i); };
  const bool op = m.top.delta_oplax;
  const bool lax = m.left.au_lax;

  // m.ho-vl.-1 over every hcell
  for (Idx f = 0; f < s.nh(); ++f) {
    Idx A = s.h_src[f], B = s.h_tgt[f];
    Idx lhs, rhs;
    if (op) {
      lhs = d.vcomp_sq(d.hcomp_sq(m.left.at_h[f], m.at_obj[B]), m.bottom.delta[f]);
      rhs = d.vcomp_sq(m.top.delta[f], d.hcomp_sq(m.at_obj[A], m.right.at_h[f]));
    } else {
      lhs = d.vcomp_sq(m.top.delta[f], d.hcomp_sq(m.left.at_h[f], m.at_obj[B]));
      rhs = d.vcomp_sq(d.hcomp_sq(m.at_obj[A], m.right.at_h[f]), m.bottom.delta[f]);
    }
    if (lhs != rhs) rep.add("m.ho-vl.-1", "hcell " + sh(f), sh(lhs), sh(rhs));
  }

  // m.ho-vl.-2 over every vcell
  for (Idx u = 0; u < s.nv(); ++u) {
    Idx A = s.v_src[u], Ap = s.v_tgt[u];
    Idx lhs, rhs;
    if (lax) {
      lhs = d.hcomp_sq(m.left.at_v[u], d.vcomp_sq(m.top.at_v[u], m.at_obj[Ap]));
      rhs = d.hcomp_sq(d.vcomp_sq(m.at_obj[A], m.bottom.at_v[u]), m.right.at_v[u]);
    } else {
      lhs = d.hcomp_sq(d.vcomp_sq(m.top.at_v[u], m.at_obj[Ap]), m.right.at_v[u]);
      rhs = d.hcomp_sq(m.left.at_v[u], d.vcomp_sq(m.at_obj[A], m.bottom.at_v[u]));
    }
    if (lhs != rhs) rep.add("m.ho-vl.-2", "vcell " + sh(u), sh(lhs), sh(rhs));
  }

  return rep;
}

// Vertical composite of horizontally-bounded modifications (stacking along the
// vertical transformations) and of vertical modifications componentwise.
inline Modification vcompose_modifications(const Modification& a, const Modification& b) {
  const auto& d = a.dst();
  Modification r;
  r.name = a.name + "/" + b.name;
  r.kind = a.kind == b.kind ? a.kind : ModKind::general;
  r.top = a.top;
  r.bottom = b.bottom;
  r.left = compose_vertical_transformations(a.left, b.left);
  r.right = compose_vertical_transformations(a.right, b.right);
  r.at_obj.resize(a.at_obj.size());
  for (size_t i = 0; i < a.at_obj.size(); ++i)
    r.at_obj[i] = d.vcomp_sq(a.at_obj[i], b.at_obj[i]);
  return r;
}

inline bool modification_is_identity(const Modification& m) {
  const auto& d = m.dst();
  for (Idx c : m.at_obj)
    if (!d.is_identity_sq_v(c) && !d.is_identity_sq_h(c)) return false;
  return true;
}

}  // namespace dblcat
