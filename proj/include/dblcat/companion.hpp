#pragma once

#include "dblcat/modification.hpp"
#include "dblcat/transform.hpp"

namespace dblcat {

// Companion of a vcell u: A -> B: an hcell u_hat: A -> B with
//   eps: (top u_hat, bottom 1_B, left u, right 1^B)
//   eta: (top 1_A, bottom u_hat, left 1^A, right u)
// satisfying [eta|eps] = Id_{u_hat} and eta/eps = Id^u.
struct CompanionWitness {
  Idx u = kNone;      // vcell
  Idx u_hat = kNone;  // hcell
  Idx eps = kNone;    // square
  Idx eta = kNone;    // square
  friend auto operator<=>(const CompanionWitness&, const CompanionWitness&) = default;
};

// Conjoint of u: A -> B: an hcell u_check: B -> A with
//   eta*: (top 1_A, bottom u_check, left u, right 1^A)
//   eps*: (top u_check, bottom 1_B, left 1^B, right u)
// satisfying [eps*|eta*] = Id_{u_check} and eta*/eps* = Id^u.
struct ConjointWitness {
  Idx u = kNone;
  Idx u_check = kNone;
  Idx eps_star = kNone;
  Idx eta_star = kNone;
};

inline bool check_companion(const DoubleCategory& d, const CompanionWitness& w) {
  d.require_v(w.u);
  d.require_h(w.u_hat);
  d.require_sq(w.eps);
  d.require_sq(w.eta);
  Idx A = d.v_src[w.u], B = d.v_tgt[w.u];
  if (d.h_src[w.u_hat] != A || d.h_tgt[w.u_hat] != B) return false;
  if (!(d.sq[w.eps] == SquareFrame{w.u_hat, d.id_h[B], w.u, d.id_v[B]})) return false;
  if (!(d.sq[w.eta] == SquareFrame{d.id_h[A], w.u_hat, d.id_v[A], w.u})) return false;
  if (d.hcomp_sq(w.eta, w.eps) != d.id_sq_h[w.u_hat]) return false;
  if (d.vcomp_sq(w.eta, w.eps) != d.id_sq_v[w.u]) return false;
  return true;
}

inline bool check_conjoint(const DoubleCategory& d, const ConjointWitness& w) {
  d.require_v(w.u);
  d.require_h(w.u_check);
  d.require_sq(w.eps_star);
  d.require_sq(w.eta_star);
  Idx A = d.v_src[w.u], B = d.v_tgt[w.u];
  if (d.h_src[w.u_check] != B || d.h_tgt[w.u_check] != A) return false;
  if (!(d.sq[w.eta_star] == SquareFrame{d.id_h[A], w.u_check, w.u, d.id_v[A]})) return false;
  if (!(d.sq[w.eps_star] == SquareFrame{w.u_check, d.id_h[B], d.id_v[B], w.u})) return false;
  if (d.hcomp_sq(w.eps_star, w.eta_star) != d.id_sq_h[w.u_check]) return false;
  if (d.vcomp_sq(w.eta_star, w.eps_star) != d.id_sq_v[w.u]) return false;
  return true;
}

// Exhaustive search over the stored tables; deterministic order.
inline std::vector<CompanionWitness> find_companions(const DoubleCategory& d, Idx u) {
  d.require_v(u);
  std::vector<CompanionWitness> out;
  Idx A = d.v_src[u], B = d.v_tgt[u];
  for (Idx h = 0; h < d.nh(); ++h) {
    if (d.h_src[h] != A || d.h_tgt[h] != B) continue;
    for (Idx eps = 0; eps < d.ns(); ++eps) {
      if (!(d.sq[eps] == SquareFrame{h, d.id_h[B], u, d.id_v[B]})) continue;
      for (Idx eta = 0; eta < d.ns(); ++eta) {
        if (!(d.sq[eta] == SquareFrame{d.id_h[A], h, d.id_v[A], u})) continue;
        CompanionWitness w{u, h, eps, eta};
        if (check_companion(d, w)) out.push_back(w);
      }
    }
  }
  return out;
}

inline CompanionWitness identity_companion(const DoubleCategory& d, Idx obj) {
  d.require_obj(obj);
  return CompanionWitness{d.id_v[obj], d.id_h[obj], d.id_sq_h[d.id_h[obj]],
                          d.id_sq_h[d.id_h[obj]]};
}

// Cor. of companions/conjoints for invertible cells: if u is invertible and
// u^{-1} has companion (what, eps, eta), then u has conjoint u_check = what with
//   eps*_u = eps_{u^{-1}} / Id^u  and  eta*_u = Id^u / eta_{u^{-1}}.
inline ConjointWitness conjoint_from_companion_of_inverse(const DoubleCategory& d,
                                                          const CompanionWitness& w_inv, Idx u) {
  d.require_v(u);
  auto uinv = d.v_inverse(u);
  if (!uinv) throw PreconditionError("conjoint_from_companion_of_inverse: vcell not invertible");
  if (w_inv.u != *uinv)
    throw PreconditionError("conjoint_from_companion_of_inverse: witness is not for the inverse");
  if (!check_companion(d, w_inv))
    throw PreconditionError("conjoint_from_companion_of_inverse: companion witness fails");
  ConjointWitness c;
  c.u = u;
  c.u_check = w_inv.u_hat;
  c.eps_star = d.vcomp_sq(w_inv.eps, d.id_sq_v[u]);
  c.eta_star = d.vcomp_sq(d.id_sq_v[u], w_inv.eta);
  return c;
}

// A fixed choice of companions for selected vcells of one category.
struct CompanionChoice {
  std::map<Idx, CompanionWitness> at;

  const CompanionWitness& require(const DoubleCategory& d, Idx u) const {
    auto it = at.find(u);
    if (it == at.end())
      throw CoverageError("companion choice does not cover vcell " + std::to_string(u));
    if (!check_companion(d, it->second))
      throw PreconditionError("companion choice stores a failing witness for vcell " +
                              std::to_string(u));
    return it->second;
  }
  bool covers(Idx u) const { return at.count(u) != 0; }
};

// Lowest-index witness per liftable vcell; reproducible by construction.
inline CompanionChoice canonical_choice(const DoubleCategory& d) {
  CompanionChoice c;
  for (Idx u = 0; u < d.nv(); ++u) {
    auto ws = find_companions(d, u);
    if (!ws.empty()) c.at.emplace(u, ws.front());
  }
  return c;
}

// ---------------------------------------------------------------------------
// The lifting primitive: a square with vertical sides u (left) and u' (right)
// lifts to the horizontally globular square
//     [eta_u | a | eps_{u'}] : [top(a) | u'_hat] => [u_hat | bottom(a)].
inline Idx lift_square(const DoubleCategory& d, Idx a, const CompanionWitness& wl,
                       const CompanionWitness& wr) {
  d.require_sq(a);
  if (d.sq[a].left != wl.u || d.sq[a].right != wr.u)
    throw PreconditionError("lift_square: witnesses do not match the square's vertical sides");
  return d.hcomp_sq_many({wl.eta, a, wr.eps});
}

// Inverse of lift_square: given a globular square X: [f | u'_hat] => [u_hat | g],
// recover the square with frame (f, g, u, u') by the pasting
//   vcomp( [Id_f | eta_{u'}], X, [eps_u | Id_g] ).
// unlift(lift(a)) = a holds on the nose by the companion laws and interchange.
inline Idx unlift_square(const DoubleCategory& d, Idx lifted, Idx f, Idx g,
                         const CompanionWitness& wl, const CompanionWitness& wr) {
  d.require_sq(lifted);
  if (d.sq[lifted].top != d.hcomp_h(f, wr.u_hat) ||
      d.sq[lifted].bottom != d.hcomp_h(wl.u_hat, g))
    throw PreconditionError("unlift_square: lifted square has the wrong boundary shape");
  return d.vcomp_sq_many({d.hcomp_sq(d.id_sq_h[f], wr.eta), lifted,
                          d.hcomp_sq(wl.eps, d.id_sq_h[g])});
}

// ---------------------------------------------------------------------------
// Prop. 2.14: lift a vertical transformation with invertible square components
// along a fixed choice of companions for its 1v-components.

inline HorizontalTransformation lift_vertical_to_horizontal(const VerticalTransformation& a0,
                                                            const CompanionChoice& choice) {
  const auto& s = a0.src();
  const auto& d = a0.dst();
  if (a0.variant != VVariant::strict && a0.variant != VVariant::invertible &&
      a0.variant != VVariant::pseudo)
    throw PreconditionError("lift: vertical transformation must be pseudo or (invertible) strict");

  HorizontalTransformation r;
  r.name = "lift(" + a0.name + ")";
  r.variant = HVariant::pseudo;
  r.delta_oplax = true;
  r.F = a0.F;
  r.G = a0.G;

  std::vector<CompanionWitness> wit(s.n_objects);
  for (Idx A = 0; A < s.n_objects; ++A) wit[A] = choice.require(d, a0.at_obj[A]);

  r.at_obj.resize(s.n_objects);
  for (Idx A = 0; A < s.n_objects; ++A) r.at_obj[A] = wit[A].u_hat;

  // delta_f = [eta_A | (a0)_f | eps_B]
  r.delta.resize(s.nh());
  r.delta_inv.resize(s.nh());
  for (Idx f = 0; f < s.nh(); ++f) {
    Idx A = s.h_src[f], B = s.h_tgt[f];
    r.delta[f] = lift_square(d, a0.at_h[f], wit[A], wit[B]);
    // inverse via the conjoints of the inverse components
    auto ainv = d.sq_v_inverse(a0.at_h[f]);
    if (!ainv)
      throw PreconditionError("lift: component at hcell " + std::to_string(f) +
                              " is not vertically invertible");
    auto uinvA = d.v_inverse(a0.at_obj[A]);
    auto uinvB = d.v_inverse(a0.at_obj[B]);
    if (uinvA && uinvB) {
      ConjointWitness cA = conjoint_from_companion_of_inverse(
          d, CompanionWitness{a0.at_obj[A], wit[A].u_hat, wit[A].eps, wit[A].eta}, *uinvA);
      ConjointWitness cB = conjoint_from_companion_of_inverse(
          d, CompanionWitness{a0.at_obj[B], wit[B].u_hat, wit[B].eps, wit[B].eta}, *uinvB);
      // delta^{-1} = [eps*_A | (a0)_f^{-1} | eta*_B]
      r.delta_inv[f] = d.hcomp_sq_many({cA.eps_star, *ainv, cB.eta_star});
    } else {
      auto inv = d.sq_v_inverse(r.delta[f]);
      if (!inv) throw PreconditionError("lift: delta has no vertical inverse");
      r.delta_inv[f] = *inv;
    }
  }

  // (alpha1)^u = [ (Id^{Fu} / eta_{A'}) | flip(a0^u) | (eps_A / Id^{Gu}) ]
  r.at_v.resize(s.nv());
  for (Idx u = 0; u < s.nv(); ++u) {
    Idx A = s.v_src[u], Ap = s.v_tgt[u];
    Idx x = d.vcomp_sq(d.id_sq_v[a0.F.on_v(u)], wit[Ap].eta);
    Idx mid;
    if (d.is_identity_sq_h(a0.at_v[u])) {
      mid = d.id_sq_v[d.sq[a0.at_v[u]].left];
      if (a0.au_lax) mid = d.id_sq_v[d.sq[a0.at_v[u]].right];
    } else if (a0.au_lax) {
      auto hv = d.sq_h_inverse(a0.at_v[u]);
      if (!hv) throw PreconditionError("lift: a0^u has no horizontal inverse");
      mid = *hv;
    } else {
      mid = a0.at_v[u];
    }
    Idx y = d.vcomp_sq(wit[A].eps, d.id_sq_v[a0.G.on_v(u)]);
    r.at_v[u] = d.hcomp_sq_many({x, mid, y});
  }
  return r;
}

// ---------------------------------------------------------------------------
// Lifting of (identity) vertical modifications into horizontal modifications:
// the component at A of the lift of a vertical modification between composites
// alpha_1/../alpha_k => beta_1/../beta_l is [eta-block | omega_A | eps-block].
// The eta/eps blocks are the companion witnesses of the composite columns,
// built by the standard composite-companion formulas.

inline CompanionWitness compose_companions(const DoubleCategory& d, const CompanionWitness& a,
                                           const CompanionWitness& b) {
  // companion of a.u / b.u is [a.u_hat | b.u_hat]
  if (d.v_tgt[a.u] != d.v_src[b.u])
    throw PreconditionError("compose_companions: vcells not composable");
  CompanionWitness w;
  w.u = d.vcomp_v(a.u, b.u);
  w.u_hat = d.hcomp_h(a.u_hat, b.u_hat);
  w.eta = d.vcomp_sq(a.eta, d.hcomp_sq(d.id_sq_h[a.u_hat], b.eta));
  w.eps = d.vcomp_sq(d.hcomp_sq(a.eps, d.id_sq_h[b.u_hat]), b.eps);
  return w;
}

// Lift a vertically globular square (left column p, right column q, both with
// chosen companions) to a horizontally globular one: top = q_hat, bottom =
// p_hat.
inline Idx lift_globular(const DoubleCategory& d, Idx omega, const CompanionWitness& wleft,
                         const CompanionWitness& wright) {
  d.require_sq(omega);
  if (d.sq[omega].left != wleft.u || d.sq[omega].right != wright.u)
    throw PreconditionError("lift_globular: witnesses do not match the boundaries");
  return d.hcomp_sq_many({wleft.eta, omega, wright.eps});
}

// Semi-lift of eq. (omega-gen): a vertically globular square with left column
// u/v and right column v'/u' (v, v' liftable) becomes a square with top
// v'_hat, bottom v_hat, left u, right u'.
inline Idx semi_lift(const DoubleCategory& d, Idx omega, Idx u, const CompanionWitness& wv,
                     Idx uprime, const CompanionWitness& wvprime) {
  d.require_sq(omega);
  if (d.sq[omega].left != d.vcomp_v(u, wv.u))
    throw PreconditionError("semi_lift: left boundary is not u/v");
  if (d.sq[omega].right != d.vcomp_v(wvprime.u, uprime))
    throw PreconditionError("semi_lift: right boundary is not v'/u'");
  Idx x = d.vcomp_sq(d.id_sq_v[u], wv.eta);
  Idx y = d.vcomp_sq(wvprime.eps, d.id_sq_v[uprime]);
  return d.hcomp_sq_many({x, omega, y});
}

}  // namespace dblcat
