#include <catch2/catch_amalgamated.hpp>

#include "dblcat/builders.hpp"
#include "dblcat/functor.hpp"
#include "dblcat/modification.hpp"
#include "dblcat/transform.hpp"
#include "dblcat/validate.hpp"

using namespace dblcat;

namespace {

// One object, hcells the idempotent monoid {1, t}, thin globular squares
// generated by 1 <= t. Small host for genuinely lax functors.
DoubleCategory idempotent_poset_monoid() {
  DoubleCategory d;
  d.name = "IdemMonoid";
  d.n_objects = 1;
  d.h_src = {0, 0};
  d.h_tgt = {0, 0};
  d.v_src = {0};
  d.v_tgt = {0};
  // squares x => y iff x <= y
  d.sq = {{0, 0, 0, 0}, {0, 1, 0, 0}, {1, 1, 0, 0}};
  d.id_h = {0};
  d.id_v = {0};
  d.id_sq_h = {0, 2};
  d.id_sq_v = {0};
  allocate_tables(d);
  auto mul = [](Idx x, Idx y) { return (x || y) ? 1 : 0; };
  for (Idx x = 0; x < 2; ++x)
    for (Idx y = 0; y < 2; ++y) d.set_hcomp_h(x, y, mul(x, y));
  d.set_vcomp_v(0, 0, 0);
  auto sq_of = [&](Idx x, Idx y) -> Idx { return x == 0 ? (y == 0 ? 0 : 1) : 2; };
  auto top_of = [&](Idx s) { return d.sq[s].top; };
  auto bot_of = [&](Idx s) { return d.sq[s].bottom; };
  for (Idx a = 0; a < 3; ++a)
    for (Idx b = 0; b < 3; ++b) {
      d.set_hcomp_sq(a, b, sq_of(mul(top_of(a), top_of(b)), mul(bot_of(a), bot_of(b))));
      if (bot_of(a) == top_of(b)) d.set_vcomp_sq(a, b, sq_of(top_of(a), bot_of(b)));
    }
  return d;
}

}  // namespace

TEST_CASE("identity functor on Q(Z/2) passes") {
  auto q = share(quintet_cyclic(2));
  auto f = identity_functor(q);
  auto rep = check_lax_functor(f);
  INFO(rep.summary());
  CHECK(rep.pass);
}

TEST_CASE("constant functor with identity compositors passes") {
  auto q = share(quintet_cyclic(2));
  auto s = share(square_chain(2));
  auto f = constant_functor(s, q, 0);
  CHECK(check_lax_functor(f).pass);
}

TEST_CASE("object swap without hcell remap is a structural error") {
  auto d = share(disc_cyclic(2));
  auto f = identity_functor(d);
  f.obj_map = {1, 0};  // swap objects, leave cell maps alone
  CHECK_THROWS_AS(check_lax_functor(f), StructuralError);
}

TEST_CASE("genuinely lax functor: idempotent monad as Terminal -> IdemMonoid") {
  auto t = share(terminal());
  auto m = share(idempotent_poset_monoid());
  REQUIRE(validate_double_category(*m).pass);
  LaxDoubleFunctor f;
  f.name = "idem";
  f.variant = FunctorVariant::lax;
  f.src = t;
  f.dst = m;
  f.obj_map = {0};
  f.h_map = {1};      // 1_* maps to t
  f.v_map = {0};
  f.sq_map = {2};     // Id square maps to Id_t
  f.unit = {1};       // 1 => t
  f.comp[{0, 0}] = 2; // [t|t] = t => t
  auto rep = check_lax_functor(f);
  INFO(rep.summary());
  CHECK(rep.pass);
  // the pseudo flag must now fail: the unitor has no vertical inverse
  f.variant = FunctorVariant::pseudo;
  auto rep2 = check_lax_functor(f);
  CHECK_FALSE(rep2.pass);
  CHECK(rep2.has_law("F-pseudo-unitor"));
}

TEST_CASE("functor composition preserves checkability") {
  auto q = share(quintet_cyclic(2));
  auto f = identity_functor(q);
  auto g = compose_functor(f, f);
  CHECK(check_lax_functor(g).pass);
}

TEST_CASE("identity horizontal transformation passes") {
  auto q = share(quintet_cyclic(2));
  auto f = identity_functor(q);
  auto t = identity_horizontal_transformation(f);
  auto rep = check_horizontal_transformation(t);
  INFO(rep.summary());
  CHECK(rep.pass);
}

TEST_CASE("Q(Z/2) horizontal transformation with component 1 passes (thinness)") {
  auto qd = quintet_cyclic(2);
  auto q = share(std::move(qd));
  auto f = identity_functor(q);
  HorizontalTransformation t;
  t.name = "shift1";
  t.variant = HVariant::pseudo;
  t.delta_oplax = true;
  t.F = f;
  t.G = f;
  t.at_obj = {1};
  // alpha^u: frame {1, 1, u, u}
  t.at_v.resize(q->nv());
  for (Idx u = 0; u < q->nv(); ++u) {
    auto s = find_square(*q, SquareFrame{1, 1, u, u});
    REQUIRE(s);
    t.at_v[u] = *s;
  }
  // delta_f: [f|1] => [1|f], all cells globular with equal composites
  t.delta.resize(q->nh());
  for (Idx h = 0; h < q->nh(); ++h) {
    Idx c = q->hcomp_h(h, 1);
    auto s = find_square(*q, SquareFrame{c, c, 0, 0});
    REQUIRE(s);
    t.delta[h] = *s;
  }
  auto rep = check_horizontal_transformation(t);
  INFO(rep.summary());
  CHECK(rep.pass);

  SECTION("wrongly framed component is a structural error") {
    auto bad = t;
    bad.at_v[1] = *find_square(*q, SquareFrame{0, 0, 1, 1});
    CHECK_THROWS_AS(check_horizontal_transformation(bad), StructuralError);
  }
  SECTION("pseudo downgrades to oplax and to lax after direction normalization") {
    auto down = t;
    down.variant = HVariant::oplax;
    CHECK(check_horizontal_transformation(down).pass);
    HorizontalTransformation laxed = t;
    laxed.variant = HVariant::lax;
    laxed.delta_oplax = false;
    for (Idx h = 0; h < q->nh(); ++h) laxed.delta[h] = t.delta_in_direction(h, false);
    CHECK(check_horizontal_transformation(laxed).pass);
  }
}

TEST_CASE("Q(Z/2) vertical translation-by-1 passes as strict") {
  auto q = share(quintet_cyclic(2));
  auto f = identity_functor(q);
  VerticalTransformation t;
  t.name = "vshift1";
  t.variant = VVariant::strict;
  t.F = f;
  t.G = f;
  t.at_obj = {1};
  t.at_h.resize(q->nh());
  for (Idx h = 0; h < q->nh(); ++h) {
    auto s = find_square(*q, SquareFrame{h, h, 1, 1});
    REQUIRE(s);
    t.at_h[h] = *s;
  }
  t.at_v.resize(q->nv());
  for (Idx u = 0; u < q->nv(); ++u) t.at_v[u] = q->id_sq_v[q->vcomp_v(1, u)];
  auto rep = check_vertical_transformation(t);
  INFO(rep.summary());
  CHECK(rep.pass);

  SECTION("invertible flag passes too: Z/2 components are self-inverse") {
    auto inv = t;
    inv.variant = VVariant::invertible;
    CHECK(check_vertical_transformation(inv).pass);
  }
  SECTION("composition of two translations is the identity transformation") {
    auto c = compose_vertical_transformations(t, t);
    CHECK(check_vertical_transformation(c).pass);
    auto idt = identity_vertical_transformation(f);
    CHECK(c.at_obj == idt.at_obj);
    CHECK(c.at_h == idt.at_h);
    CHECK(c.at_v == idt.at_v);
  }
  SECTION("boundary mismatch in composition is structural") {
    auto sq2 = share(square_chain(2));
    auto g = identity_functor(sq2);
    auto other = identity_vertical_transformation(g);
    CHECK_THROWS_AS(compose_vertical_transformations(t, other), StructuralError);
  }
}

TEST_CASE("push-to-top transformation on Sq(2-chain); invertible flag fails") {
  auto s = share(square_chain(2));
  auto idf = identity_functor(s);
  auto cst = constant_functor(s, s, 1);
  VerticalTransformation t;
  t.name = "to-top";
  t.variant = VVariant::strict;
  t.F = idf;
  t.G = cst;
  t.at_obj.resize(s->n_objects);
  for (Idx a = 0; a < s->n_objects; ++a) {
    // the unique vcell a -> 1
    for (Idx u = 0; u < s->nv(); ++u)
      if (s->v_src[u] == a && s->v_tgt[u] == 1) t.at_obj[a] = u;
  }
  t.at_h.resize(s->nh());
  for (Idx h = 0; h < s->nh(); ++h) {
    auto sqr = find_square(*s, SquareFrame{h, s->id_h[1], t.at_obj[s->h_src[h]],
                                           t.at_obj[s->h_tgt[h]]});
    REQUIRE(sqr);
    t.at_h[h] = *sqr;
  }
  t.at_v.resize(s->nv());
  for (Idx u = 0; u < s->nv(); ++u)
    t.at_v[u] = s->id_sq_v[s->vcomp_v(u, t.at_obj[s->v_tgt[u]])];
  CHECK(check_vertical_transformation(t).pass);

  auto bad = t;
  bad.variant = VVariant::invertible;
  auto rep = check_vertical_transformation(bad);
  CHECK_FALSE(rep.pass);
  CHECK(rep.has_law("invertibility"));
}

TEST_CASE("identity modification passes; unique-frame modification passes") {
  auto q = share(quintet_cyclic(2));
  auto f = identity_functor(q);
  auto alpha = identity_horizontal_transformation(f);
  auto m = identity_modification_of(alpha);
  CHECK(check_modification(m).pass);

  // vertical identity modification
  auto a0 = identity_vertical_transformation(f);
  auto mv = identity_modification_of(a0);
  CHECK(check_modification(mv).pass);

  SECTION("wrongly framed component is structural") {
    auto bad = m;
    bad.at_obj[0] = *find_square(*q, SquareFrame{1, 1, 0, 0});
    CHECK_THROWS_AS(check_modification(bad), StructuralError);
  }
}

TEST_CASE("whiskering closure on built-ins") {
  for (const char* name : {"Q(Z/2)", "Disc(Z/2)", "Sq(2-chain)"}) {
    auto d = share(make_example(name));
    auto f = identity_functor(d);
    auto t = identity_horizontal_transformation(f);
    auto tw = whisker_horizontal_post(f, t);
    CHECK(check_horizontal_transformation(tw).pass);
    auto tp = whisker_horizontal_pre(t, f);
    CHECK(check_horizontal_transformation(tp).pass);
    auto v = identity_vertical_transformation(f);
    CHECK(check_vertical_transformation(whisker_vertical_post(f, v)).pass);
    CHECK(check_vertical_transformation(whisker_vertical_pre(v, f)).pass);
    auto c = compose_horizontal_transformations(t, t);
    CHECK(check_horizontal_transformation(c).pass);
  }
}
