#include <catch2/catch_amalgamated.hpp>

#include "dblcat/builders.hpp"
#include "dblcat/moncells.hpp"
#include "dblcat/monoidal_check.hpp"
#include "dblcat/monoidal_lift.hpp"

using namespace dblcat;

namespace {

VerticalMonoidalStructure disc_vertical() {
  auto d = share(disc_cyclic(2));
  return identity_vertical_monoidal(d, additive_tensor(d), 0);
}

VerticalMonoidalStructure quintet_vertical() {
  auto d = share(quintet_cyclic(2));
  return identity_vertical_monoidal(d, additive_tensor(d), 0);
}

// Q(Z/2) horizontal structure with shifted unitors: every component is the
// nonidentity hcell 1; thinness makes all axioms hold while keeping the
// structure outside the strict shortcut.
HorizontalMonoidalStructure quintet_twisted_horizontal() {
  auto d = share(quintet_cyclic(2));
  auto s = identity_horizontal_monoidal(d, additive_tensor(d), 0);
  auto shift = [&](HorizontalTransformation& t) {
    t.at_obj = {1};
    for (Idx u = 0; u < d->nv(); ++u) t.at_v[u] = *find_square(*d, SquareFrame{1, 1, u, u});
    for (Idx f = 0; f < d->nh(); ++f) {
      Idx c = d->hcomp_h(f, 1);
      t.delta[f] = d->id_sq_h[c];
      t.delta_inv[f] = d->id_sq_h[c];
    }
  };
  shift(s.lunit);
  shift(s.runit);
  // refresh the unit modification components to the (now shifted) frames
  for (Idx a = 0; a < d->n_objects; ++a)
    for (Idx b = 0; b < d->n_objects; ++b) {
      Idx mtop = d->hcomp_h(s.a_comp(a, 0, b), s.ten.h(d->id_h[a], s.lunit.at_obj[b]));
      s.m[s.obj2(a, b)] = d->id_sq_h[mtop];
      Idx ltop = s.ten.h(s.lunit.at_obj[a], d->id_h[b]);
      s.l[s.obj2(a, b)] = d->id_sq_h[ltop];
      Idx rtop = s.runit.at_obj[s.ten.obj(a, b)];
      s.r[s.obj2(a, b)] = d->id_sq_h[rtop];
    }
  return s;
}

}  // namespace

TEST_CASE("Disc(Z/2) vertical monoidal structure passes") {
  auto s = disc_vertical();
  auto rep = check_vertical_monoidal(s);
  INFO(rep.summary());
  CHECK(rep.pass);
}

TEST_CASE("Q(Z/2) vertical monoidal structure passes; twisted lunit fails triangle") {
  auto s = quintet_vertical();
  auto rep = check_vertical_monoidal(s);
  INFO(rep.summary());
  CHECK(rep.pass);

  auto bad = s;
  const auto& d = *bad.D;
  bad.lunit.at_obj = {1};
  bad.lunit.at_h.resize(d.nh());
  for (Idx f = 0; f < d.nh(); ++f) bad.lunit.at_h[f] = *find_square(d, SquareFrame{f, f, 1, 1});
  bad.lunit.at_v = {d.id_sq_v[1], d.id_sq_v[0]};
  auto rep2 = check_vertical_monoidal(bad);
  CHECK_FALSE(rep2.pass);
  CHECK(rep2.has_law("triangle"));
}

TEST_CASE("identity horizontal monoidal on Disc passes via strict shortcut") {
  auto d = share(disc_cyclic(2));
  auto s = identity_horizontal_monoidal(d, additive_tensor(d), 0);
  auto rep = check_horizontal_monoidal(s);
  INFO(rep.summary());
  CHECK(rep.pass);
  bool shortcut = false;
  for (auto& nte : rep.notes)
    if (nte.find("strict-shortcut") != std::string::npos) shortcut = true;
  CHECK(shortcut);
}

TEST_CASE("twisted Q(Z/2) horizontal monoidal evaluates the TA axioms and passes") {
  auto s = quintet_twisted_horizontal();
  auto rep = check_horizontal_monoidal(s);
  INFO(rep.summary());
  for (auto& v : rep.violations) INFO(v.law + " @ " + v.witness + ": " + v.lhs + " vs " + v.rhs);
  CHECK(rep.pass);
  int evaluated = 0;
  for (auto& nte : rep.notes)
    if (nte.find("evaluated: TA") != std::string::npos) ++evaluated;
  CHECK(evaluated == 3);  // TA1, TA2, TA3 all ran instance-wise
}

TEST_CASE("missing r table is a structural error") {
  auto d = share(disc_cyclic(2));
  auto s = identity_horizontal_monoidal(d, additive_tensor(d), 0);
  s.r.clear();
  CHECK_THROWS_AS(check_horizontal_monoidal(s), StructuralError);
}

TEST_CASE("lift_monoidal: identity vertical structure lifts to identity horizontal") {
  auto s = disc_vertical();
  auto choice = canonical_choice(*s.D);
  auto h = lift_monoidal(s, choice);
  auto rep = check_horizontal_monoidal(h);
  INFO(rep.summary());
  CHECK(rep.pass);
  CHECK(horizontal_monoidal_is_strict(h));
  auto idh = identity_horizontal_monoidal(s.D, s.ten, s.unit);
  CHECK(h.assoc.at_obj == idh.assoc.at_obj);
  CHECK(h.lunit.at_obj == idh.lunit.at_obj);
  CHECK(h.p == idh.p);
}

TEST_CASE("lift_monoidal on Q(Z/2) passes the horizontal checker") {
  auto s = quintet_vertical();
  auto choice = canonical_choice(*s.D);
  auto h = lift_monoidal(s, choice);
  auto rep = check_horizontal_monoidal(h);
  INFO(rep.summary());
  CHECK(rep.pass);

  SECTION("empty choice raises a coverage error") {
    CompanionChoice empty;
    CHECK_THROWS_AS(lift_monoidal(s, empty), CoverageError);
  }
}

TEST_CASE("identity braidings pass on Disc and Q") {
  for (const char* name : {"Disc(Z/2)", "Q(Z/2)"}) {
    auto d = share(make_example(name));
    auto ten = additive_tensor(d);
    auto s = identity_vertical_monoidal(d, ten, 0);
    auto b = identity_vertical_braiding(s.ten, d);
    std::vector<Idx> a3(static_cast<size_t>(d->n_objects) * d->n_objects * d->n_objects);
    for (Idx A = 0; A < d->n_objects; ++A)
      for (Idx B = 0; B < d->n_objects; ++B)
        for (Idx C = 0; C < d->n_objects; ++C)
          a3[(A * d->n_objects + B) * d->n_objects + C] =
              s.assoc.at_obj[s.triple.ix3.obj(s.ten.ix.obj(A, B), C)];
    auto rep = check_braiding(b, *d, s.ten, a3);
    INFO(name << ": " << rep.summary());
    CHECK(rep.pass);
  }
}

TEST_CASE("wrongly framed braiding component is structural") {
  auto d = share(quintet_cyclic(2));
  auto s = identity_vertical_monoidal(d, additive_tensor(d), 0);
  auto b = identity_vertical_braiding(s.ten, d);
  b.phi_v->at_obj[0] = 1;  // endpoints no longer matchph the swap boundary? still 0->0 in Q
  // on the one-object quintet the endpoints still match; break a frame instead
  b.phi_v->at_h[0] = *find_square(*d, SquareFrame{1, 1, 0, 0});
  CHECK_THROWS_AS(check_vertical_transformation(*b.phi_v), StructuralError);
}

TEST_CASE("tensor_as_lax_monoidal cocycle checks") {
  SECTION("Disc(Z/2), identity braiding: all cells identity, passes") {
    auto s = disc_vertical();
    auto b = identity_vertical_braiding(s.ten, s.D);
    auto mf = tensor_as_lax_monoidal(s, b);
    auto src = product_monoidal(s);
    auto rep = check_monoidal_functor(mf, src, s);
    INFO(rep.summary());
    CHECK(rep.pass);
  }
  SECTION("Q(Z/2): unique framed cocycle cells pass") {
    auto s = quintet_vertical();
    auto b = identity_vertical_braiding(s.ten, s.D);
    auto mf = tensor_as_lax_monoidal(s, b);
    auto src = product_monoidal(s);
    auto rep = check_monoidal_functor(mf, src, s);
    INFO(rep.summary());
    CHECK(rep.pass);
  }
  SECTION("mis-set F0 fails normalization") {
    auto s = quintet_vertical();
    auto b = identity_vertical_braiding(s.ten, s.D);
    auto mf = tensor_as_lax_monoidal(s, b);
    mf.F0 = 1;  // wrong unit cell
    auto src = product_monoidal(s);
    auto rep = check_monoidal_functor(mf, src, s);
    CHECK_FALSE(rep.pass);
    CHECK((rep.has_law("right-normalization") || rep.has_law("left-normalization")));
  }
}

TEST_CASE("monoidal transformation and modification checkers accept identities") {
  auto s = disc_vertical();
  auto b = identity_vertical_braiding(s.ten, s.D);
  auto mf = tensor_as_lax_monoidal(s, b);
  auto src = product_monoidal(s);
  MonoidalVTransformation t;
  t.sigma = identity_vertical_transformation(mf.F);
  Idx n = src.D->n_objects;
  const auto& d = *s.D;
  t.sigma2.resize(static_cast<size_t>(n) * n);
  for (Idx A = 0; A < n; ++A)
    for (Idx B = 0; B < n; ++B) {
      Idx lft = d.vcomp_v(mf.F2_obj[A * n + B], t.sigma.at_obj[src.ten.obj(A, B)]);
      t.sigma2[A * n + B] = d.id_sq_v[lft];
    }
  t.sigma0 = d.id_sq_v[mf.F0];
  auto rep = check_monoidal_transformation(t, mf, mf, src, s);
  INFO(rep.summary());
  CHECK(rep.pass);

  auto idm = identity_modification_of(t.sigma);
  CHECK(check_monoidal_modification(idm, src).pass);
}

TEST_CASE("lift_monoidal_functor keeps strict structures unchanged") {
  auto s = quintet_vertical();
  auto b = identity_vertical_braiding(s.ten, s.D);
  auto mf = tensor_as_lax_monoidal(s, b);
  auto src = product_monoidal(s);
  auto choice = canonical_choice(*s.D);
  auto lifted = lift_monoidal_functor(mf, src, choice);
  // identity-cocycle cells lift to identity hcells
  for (Idx i = 0; i < static_cast<Idx>(lifted.F2_obj.size()); ++i) {
    Idx v = mf.F2_obj[i];
    CHECK(lifted.F2_obj[i] == choice.require(*s.D, v).u_hat);
  }
  auto hsrc = lift_monoidal(src, canonical_choice(*src.D));
  auto hdst = lift_monoidal(s, choice);
  auto rep = check_hmonoidal_functor(lifted, hsrc, hdst);
  INFO(rep.summary());
  CHECK(rep.pass);
}
