#include <catch2/catch_amalgamated.hpp>

#include "dblcat/builders.hpp"
#include "dblcat/companion.hpp"
#include "dblcat/validate.hpp"

using namespace dblcat;

namespace {

// Two objects joined by a single vertical arrow and nothing else: its vcell
// has no companion because no hcell crosses.
DoubleCategory vertical_arrow_only() {
  DoubleCategory d;
  d.name = "VArrow";
  d.n_objects = 2;
  d.h_src = {0, 1};
  d.h_tgt = {0, 1};
  d.v_src = {0, 1, 0};
  d.v_tgt = {0, 1, 1};
  d.sq = {{0, 0, 0, 0}, {1, 1, 1, 1}, {0, 1, 2, 2}};
  d.id_h = {0, 1};
  d.id_v = {0, 1};
  d.id_sq_h = {0, 1};
  d.id_sq_v = {0, 1, 2};
  allocate_tables(d);
  d.set_hcomp_h(0, 0, 0);
  d.set_hcomp_h(1, 1, 1);
  for (Idx u = 0; u < 3; ++u) {
    Idx s = d.v_src[u], t = d.v_tgt[u];
    d.set_vcomp_v(d.id_v[s], u, u);
    d.set_vcomp_v(u, d.id_v[t], u);
  }
  d.set_hcomp_sq(0, 0, 0);
  d.set_hcomp_sq(1, 1, 1);
  d.set_hcomp_sq(2, 2, 2);
  d.set_vcomp_sq(0, 0, 0);
  d.set_vcomp_sq(1, 1, 1);
  d.set_vcomp_sq(0, 2, 2);
  d.set_vcomp_sq(2, 1, 2);
  return d;
}

}  // namespace

TEST_CASE("identity companions check") {
  auto d = quintet_cyclic(2);
  auto w = identity_companion(d, 0);
  CHECK(check_companion(d, w));
}

TEST_CASE("Sq(2-chain): the evident witness for each vcell checks; search finds all") {
  auto d = square_chain(2);
  for (Idx u = 0; u < d.nv(); ++u) {
    auto ws = find_companions(d, u);
    INFO("vcell " << u);
    CHECK_FALSE(ws.empty());
    for (auto& w : ws) CHECK(check_companion(d, w));
    // the companion hcell is the matching poset arrow
    CHECK(d.h_src[ws.front().u_hat] == d.v_src[u]);
    CHECK(d.h_tgt[ws.front().u_hat] == d.v_tgt[u]);
  }
}

TEST_CASE("Q(Z/2): vcell 1 has companion hcell 1, never 0") {
  auto d = quintet_cyclic(2);
  auto ws = find_companions(d, 1);
  REQUIRE_FALSE(ws.empty());
  for (auto& w : ws) CHECK(w.u_hat == 1);
  // u_hat = 0 admits no eps frame at all
  CHECK_FALSE(find_square(d, SquareFrame{0, d.id_h[0], 1, d.id_v[0]}).has_value());
}

TEST_CASE("vertical-arrow-only category has no companion for the crossing vcell") {
  auto d = vertical_arrow_only();
  REQUIRE(validate_double_category(d).pass);
  CHECK(find_companions(d, 2).empty());
  CHECK_FALSE(find_companions(d, 0).empty());
}

TEST_CASE("conjoint from companion of inverse") {
  SECTION("identity case") {
    auto d = quintet_cyclic(2);
    auto w = identity_companion(d, 0);
    auto c = conjoint_from_companion_of_inverse(d, w, d.id_v[0]);
    CHECK(check_conjoint(d, c));
    CHECK(c.u_check == d.id_h[0]);
  }
  SECTION("Q(Z/2): vcell 1 is self-inverse") {
    auto d = quintet_cyclic(2);
    auto ws = find_companions(d, 1);
    REQUIRE_FALSE(ws.empty());
    auto c = conjoint_from_companion_of_inverse(d, ws.front(), 1);
    CHECK(check_conjoint(d, c));
    CHECK(c.u_check == 1);
  }
  SECTION("non-invertible vcell is a precondition error") {
    auto d = square_chain(2);
    Idx cross = kNone;
    for (Idx u = 0; u < d.nv(); ++u)
      if (d.v_src[u] == 0 && d.v_tgt[u] == 1) cross = u;
    REQUIRE(cross != kNone);
    auto ws = find_companions(d, cross);
    REQUIRE_FALSE(ws.empty());
    CHECK_THROWS_AS(conjoint_from_companion_of_inverse(d, ws.front(), cross), PreconditionError);
  }
}

TEST_CASE("canonical choice covers all liftable vcells deterministically") {
  auto d = square_chain(2);
  auto c1 = canonical_choice(d);
  auto c2 = canonical_choice(d);
  CHECK(c1.at.size() == static_cast<size_t>(d.nv()));
  REQUIRE(c1.at.size() == c2.at.size());
  for (auto& [u, w] : c1.at) CHECK(w == c2.at.at(u));
}

TEST_CASE("lift of the identity vertical transformation is the identity transformation") {
  auto q = share(quintet_cyclic(2));
  auto f = identity_functor(q);
  auto v = identity_vertical_transformation(f);
  CompanionChoice choice;
  for (Idx a = 0; a < q->n_objects; ++a) choice.at.emplace(q->id_v[a], identity_companion(*q, a));
  auto h = lift_vertical_to_horizontal(v, choice);
  auto idh = identity_horizontal_transformation(f);
  CHECK(h.at_obj == idh.at_obj);
  CHECK(h.at_v == idh.at_v);
  CHECK(h.delta == idh.delta);
  CHECK(check_horizontal_transformation(h).pass);
}

TEST_CASE("Q(Z/2) translation-by-1 lifts to a passing horizontal transformation") {
  auto q = share(quintet_cyclic(2));
  auto f = identity_functor(q);
  VerticalTransformation t;
  t.name = "vshift1";
  t.variant = VVariant::invertible;
  t.F = f;
  t.G = f;
  t.at_obj = {1};
  t.at_h.resize(q->nh());
  for (Idx h = 0; h < q->nh(); ++h) t.at_h[h] = *find_square(*q, SquareFrame{h, h, 1, 1});
  t.at_v = {q->id_sq_v[1], q->id_sq_v[0]};  // 1+0=1, 1+1=0
  REQUIRE(check_vertical_transformation(t).pass);

  auto choice = canonical_choice(*q);
  auto h = lift_vertical_to_horizontal(t, choice);
  CHECK(h.at_obj == std::vector<Idx>{1});
  auto rep = check_horizontal_transformation(h);
  INFO(rep.summary());
  CHECK(rep.pass);

  SECTION("un-lift round-trips delta components to the original squares") {
    for (Idx hc = 0; hc < q->nh(); ++hc) {
      Idx back = unlift_square(*q, h.delta[hc], hc, hc, choice.require(*q, 1),
                               choice.require(*q, 1));
      CHECK(back == t.at_h[hc]);
    }
  }
  SECTION("delta and its conjoint-built inverse cancel") {
    for (Idx hc = 0; hc < q->nh(); ++hc) {
      CHECK(q->vcomp_sq(h.delta[hc], h.delta_inv[hc]) == q->id_sq_h[q->sq[h.delta[hc]].top]);
      CHECK(q->vcomp_sq(h.delta_inv[hc], h.delta[hc]) == q->id_sq_h[q->sq[h.delta_inv[hc]].top]);
    }
  }
  SECTION("coverage error when a component is missing from the choice") {
    CompanionChoice empty;
    CHECK_THROWS_AS(lift_vertical_to_horizontal(t, empty), CoverageError);
  }
}

TEST_CASE("lift on Sq(2-chain) identity transformation with searched witnesses") {
  auto s = share(square_chain(2));
  auto f = identity_functor(s);
  auto v = identity_vertical_transformation(f);
  auto choice = canonical_choice(*s);
  auto h = lift_vertical_to_horizontal(v, choice);
  CHECK(check_horizontal_transformation(h).pass);
}

TEST_CASE("square lift and semi-lift shapes") {
  auto q = quintet_cyclic(2);
  auto choice = canonical_choice(q);
  const auto& w1 = choice.require(q, 1);
  SECTION("lift_square produces the globular associate") {
    Idx a = *find_square(q, SquareFrame{1, 1, 1, 1});
    Idx lifted = lift_square(q, a, w1, w1);
    CHECK(q.is_horizontally_globular(lifted));
    CHECK(q.sq[lifted].top == q.hcomp_h(1, w1.u_hat));
    CHECK(q.sq[lifted].bottom == q.hcomp_h(w1.u_hat, 1));
    CHECK(unlift_square(q, lifted, 1, 1, w1, w1) == a);
  }
  SECTION("semi-lift of a vertically globular square with liftable column parts") {
    // omega: left = u/v = 0/1 = 1, right = v'/u' = 1/0 = 1
    Idx omega = *find_square(q, SquareFrame{q.id_h[0], q.id_h[0], 1, 1});
    Idx out = semi_lift(q, omega, 0, w1, 0, w1);
    CHECK(q.sq[out].top == w1.u_hat);
    CHECK(q.sq[out].bottom == w1.u_hat);
    CHECK(q.sq[out].left == 0);
    CHECK(q.sq[out].right == 0);
  }
  SECTION("composite companions satisfy the companion laws") {
    auto w = compose_companions(q, w1, w1);
    CHECK(check_companion(q, w));
    CHECK(w.u == 0);
    CHECK(w.u_hat == 0);
  }
}
