#include <catch2/catch_amalgamated.hpp>

#include "dblcat/action_structures.hpp"
#include "dblcat/builders.hpp"

using namespace dblcat;

namespace {

std::shared_ptr<HorizontalMonoidalStructure> disc_h() {
  auto d = share(disc_cyclic(2));
  return std::make_shared<HorizontalMonoidalStructure>(
      identity_horizontal_monoidal(d, additive_tensor(d), 0));
}

std::shared_ptr<HorizontalMonoidalStructure> quintet_h() {
  auto d = share(quintet_cyclic(2));
  return std::make_shared<HorizontalMonoidalStructure>(
      identity_horizontal_monoidal(d, additive_tensor(d), 0));
}

ActionBundle chain_monad_bundle() {
  // T = constant-to-top monad on Sq(2-chain)
  auto d = share(square_chain(2));
  LaxDoubleFunctor T = constant_functor(d, d, 1);
  T.name = "const-top";
  std::vector<Idx> mu(d->n_objects), eta(d->n_objects);
  for (Idx a = 0; a < d->n_objects; ++a) {
    mu[a] = d->id_h[1];  // T T a = 1 -> 1
    for (Idx f = 0; f < d->nh(); ++f)
      if (d->h_src[f] == a && d->h_tgt[f] == 1) eta[a] = f;
  }
  return monad_as_action(d, T, mu, eta);
}

}  // namespace

TEST_CASE("Disc(Z/2) self-action passes the action checker") {
  auto a = self_action(disc_h());
  auto rep = check_action(a);
  INFO(rep.summary());
  CHECK(rep.pass);
}

TEST_CASE("Q(Z/2) self-action passes the action checker") {
  auto a = self_action(quintet_h());
  auto rep = check_action(a);
  INFO(rep.summary());
  CHECK(rep.pass);
}

TEST_CASE("wrongly framed nu component is structural") {
  auto a = self_action(disc_h());
  a.nu_h->at_obj[0] = 1;  // hcell on the wrong object
  CHECK_THROWS_AS(check_action(a), StructuralError);
}

TEST_CASE("monad on Sq(2-chain) as a terminal action") {
  auto a = chain_monad_bundle();
  auto rep = check_action(a);
  INFO(rep.summary());
  CHECK(rep.pass);
}

TEST_CASE("lax monoidal self-action of Disc(Z/2) passes") {
  auto dh = disc_h();
  auto bundle = self_action(dh);
  auto braid = identity_horizontal_braiding(dh->ten, dh->D);
  for (auto& w : braid.b1) w = kNone;  // identity hexagons
  auto s = identity_lax_monoidal_action(std::move(bundle), std::move(braid));
  auto rep = check_lax_monoidal_action(s);
  INFO(rep.summary());
  for (auto& v : rep.violations) INFO(v.law + " @ " + v.witness);
  CHECK(rep.pass);
}

TEST_CASE("lax monoidal self-action of Q(Z/2) passes") {
  auto qh = quintet_h();
  auto bundle = self_action(qh);
  auto braid = identity_horizontal_braiding(qh->ten, qh->D);
  auto s = identity_lax_monoidal_action(std::move(bundle), std::move(braid));
  auto rep = check_lax_monoidal_action(s);
  INFO(rep.summary());
  for (auto& v : rep.violations) INFO(v.law + " @ " + v.witness);
  CHECK(rep.pass);
}

TEST_CASE("horizontal lax monoidal action without braiding is a precondition error") {
  auto dh = disc_h();
  auto bundle = self_action(dh);
  auto braid = identity_horizontal_braiding(dh->ten, dh->D);
  auto s = identity_lax_monoidal_action(std::move(bundle), std::move(braid));
  s.bundle.braiding.reset();
  CHECK_THROWS_AS(check_lax_monoidal_action(s), PreconditionError);
}
