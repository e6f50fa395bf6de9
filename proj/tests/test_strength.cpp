#include <catch2/catch_amalgamated.hpp>

#include "dblcat/builders.hpp"
#include "dblcat/strength_build.hpp"

using namespace dblcat;

namespace {

std::shared_ptr<HorizontalMonoidalStructure> make_h(const char* name) {
  auto d = share(make_example(name));
  return std::make_shared<HorizontalMonoidalStructure>(
      identity_horizontal_monoidal(d, additive_tensor(d), 0));
}

LaxMonoidalActionStructure make_lma(const char* name) {
  auto dh = make_h(name);
  auto bundle = self_action(dh);
  auto braid = identity_horizontal_braiding(dh->ten, dh->D);
  return identity_lax_monoidal_action(std::move(bundle), std::move(braid));
}

}  // namespace

TEST_CASE("identity strength on the Disc(Z/2) self-action passes") {
  auto dh = make_h("Disc(Z/2)");
  auto bundle = self_action(dh);
  bundle.braiding = identity_horizontal_braiding(dh->ten, dh->D);
  auto st = identity_strength(bundle);
  auto rep = check_strength(st);
  INFO(rep.summary());
  for (auto& v : rep.violations) INFO(v.law + " @ " + v.witness);
  CHECK(rep.pass);
}

TEST_CASE("identity strength on the Q(Z/2) self-action passes") {
  auto qh = make_h("Q(Z/2)");
  auto bundle = self_action(qh);
  bundle.braiding = identity_horizontal_braiding(qh->ten, qh->D);
  auto st = identity_strength(bundle);
  auto rep = check_strength(st);
  INFO(rep.summary());
  for (auto& v : rep.violations) INFO(v.law + " @ " + v.witness);
  CHECK(rep.pass);
}

TEST_CASE("swapped domain factors in t are structural") {
  auto dh = make_h("Disc(Z/2)");
  auto bundle = self_action(dh);
  bundle.braiding = identity_horizontal_braiding(dh->ten, dh->D);
  auto st = identity_strength(bundle);
  // shift one source-boundary object: the frames stop matching A(x)(M(x)B)
  auto& S = st.t_h->F;
  S.obj_map[0] = (S.obj_map[0] + 1) % dh->D->n_objects;
  CHECK_THROWS_AS(check_strength(st), StructuralError);
}

TEST_CASE("Table 1 on the Disc(Z/2) lax-monoidal bundle: identities out, checker passes") {
  auto s = make_lma("Disc(Z/2)");
  auto st = lax_monoidal_to_bistrong(s);
  auto rep = check_strength(st);
  INFO(rep.summary());
  for (auto& v : rep.violations) INFO(v.law + " @ " + v.witness);
  CHECK(rep.pass);
  CHECK(st.has_q);
  CHECK(st.has_c);
  // all strengths are identities
  const auto& d = *st.bundle.D;
  for (Idx o = 0; o < st.prodMDD->n_objects; ++o)
    CHECK(d.is_identity_h(st.t_h->at_obj[o]));
}

TEST_CASE("Table 1 on the Q(Z/2) lax-monoidal bundle passes") {
  auto s = make_lma("Q(Z/2)");
  auto st = lax_monoidal_to_bistrong(s);
  auto rep = check_strength(st);
  INFO(rep.summary());
  for (auto& v : rep.violations) INFO(v.law + " @ " + v.witness);
  CHECK(rep.pass);
}

TEST_CASE("Table 1 without a braiding is blocked naming the c row") {
  auto s = make_lma("Disc(Z/2)");
  s.bundle.braiding.reset();
  try {
    lax_monoidal_to_bistrong(s);
    FAIL("expected PreconditionError");
  } catch (const PreconditionError& e) {
    CHECK(std::string(e.what()).find("braiding required") != std::string::npos);
  }
}

TEST_CASE("Table round-trips on the Disc(Z/2) bundle are table identities") {
  auto s = make_lma("Disc(Z/2)");
  SECTION("Table 1 then Table 2 recovers F2 and iota on the nose") {
    auto st = lax_monoidal_to_bistrong(s);
    auto s2 = bistrong_to_lax_monoidal(st);
    CHECK(s2.int_obj == s.int_obj);
    CHECK(s2.int_pair == s.int_pair);
    CHECK(s2.int_v == s.int_v);
    CHECK(s2.iota == s.iota);
  }
  SECTION("Table 2 then Table 1 recovers t and s on the identity-strength bundle") {
    auto dh = make_h("Disc(Z/2)");
    auto bundle = self_action(dh);
    bundle.braiding = identity_horizontal_braiding(dh->ten, dh->D);
    auto st = identity_strength(bundle);
    auto s2 = bistrong_to_lax_monoidal(st);
    auto st2 = lax_monoidal_to_bistrong(s2);
    CHECK(st2.t_h->at_obj == st.t_h->at_obj);
    CHECK(st2.t_h->delta == st.t_h->delta);
    CHECK(st2.t_h->at_v == st.t_h->at_v);
    CHECK(st2.s_h->at_obj == st.s_h->at_obj);
    CHECK(st2.q_ == st.q_);
    CHECK(st2.c_ == st.c_);
  }
}

TEST_CASE("Table 2 without q is a precondition error") {
  auto dh = make_h("Disc(Z/2)");
  auto bundle = self_action(dh);
  bundle.braiding = identity_horizontal_braiding(dh->ten, dh->D);
  auto st = identity_strength(bundle);
  st.has_q = false;
  CHECK_THROWS_AS(bistrong_to_lax_monoidal(st), PreconditionError);
}

TEST_CASE("check on the Table-1 output never fails when the input passed") {
  for (const char* name : {"Disc(Z/2)", "Q(Z/2)"}) {
    auto s = make_lma(name);
    REQUIRE(check_lax_monoidal_action(s).pass);
    auto st = lax_monoidal_to_bistrong(s);
    auto rep = check_strength(st);
    INFO(name << ": " << rep.summary());
    CHECK(rep.pass);
  }
}

TEST_CASE("vertical equivalence round-trips on identity bundles") {
  for (const char* name : {"Disc(Z/2)", "Q(Z/2)"}) {
    auto d = share(make_example(name));
    auto dv = std::make_shared<VerticalMonoidalStructure>(
        identity_vertical_monoidal(d, additive_tensor(d), 0));
    auto bundle = self_action_vertical(dv);
    bundle.braiding = identity_vertical_braiding(dv->ten, d);
    REQUIRE(check_action(bundle).pass);
    // identity interchanger cells
    Idx np = bundle.prodMD->n_objects;
    std::vector<Idx> int_obj(static_cast<size_t>(np) * np);
    for (Idx x = 0; x < np; ++x)
      for (Idx y = 0; y < np; ++y) {
        auto [m, aa] = bundle.ixMD.obj_parts(x);
        auto [n, bb] = bundle.ixMD.obj_parts(y);
        int_obj[x * np + y] =
            d->id_v[bundle.act_obj(dv->ten.obj(m, n), dv->ten.obj(aa, bb))];
      }
    auto stv = vertical_strengths_from_monoidal(bundle, int_obj, d->id_v[0]);
    auto rep = check_strength(stv);
    INFO(name << ": " << rep.summary());
    for (auto& v : rep.violations) INFO(v.law + " @ " + v.witness);
    CHECK(rep.pass);
    auto back = vertical_monoidal_from_strengths(stv);
    CHECK(back == int_obj);

    SECTION(std::string("lax-only bundle lacking strengths errors (") + name + ")") {
      auto broken = stv;
      broken.t_v.reset();
      CHECK_THROWS_AS(vertical_monoidal_from_strengths(broken), PreconditionError);
    }
  }
}

TEST_CASE("lift_strength takes identity vertical strengths to identity horizontal ones") {
  auto d = share(quintet_cyclic(2));
  auto dv = std::make_shared<VerticalMonoidalStructure>(
      identity_vertical_monoidal(d, additive_tensor(d), 0));
  auto bundle_v = self_action_vertical(dv);
  Idx np = bundle_v.prodMD->n_objects;
  std::vector<Idx> int_obj(static_cast<size_t>(np) * np);
  for (Idx x = 0; x < np; ++x)
    for (Idx y = 0; y < np; ++y) int_obj[x * np + y] = d->id_v[0];
  auto stv = vertical_strengths_from_monoidal(bundle_v, int_obj, d->id_v[0]);

  auto dh = std::make_shared<HorizontalMonoidalStructure>(
      identity_horizontal_monoidal(d, dv->ten, 0));
  auto bundle_h = self_action(dh);
  bundle_h.braiding = identity_horizontal_braiding(dh->ten, d);
  auto choice = canonical_choice(*d);
  auto sth = lift_strength(stv, dh, dh, bundle_h, choice);
  auto rep = check_strength(sth);
  INFO(rep.summary());
  for (auto& v : rep.violations) INFO(v.law + " @ " + v.witness);
  CHECK(rep.pass);

  SECTION("missing companions raise coverage errors") {
    CompanionChoice empty;
    CHECK_THROWS_AS(lift_strength(stv, dh, dh, bundle_h, empty), CoverageError);
  }
}
