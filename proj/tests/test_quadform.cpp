#include "doctest.h"
#include "evencl/quadform.hpp"
#include "evencl/random.hpp"

#include <map>

using namespace evencl;

namespace {

const Ring f2 = Ring::prime_field(2);
const Ring f3 = Ring::prime_field(3);
const Ring f5 = Ring::prime_field(5);
const Ring qq = Ring::rationals();

QuadraticForm3 form(const Ring& r, std::array<long long, 6> c) { return QuadraticForm3::from_ints(r, c); }

Vec<3> vec(const Ring& r, long long a, long long b, long long c) { return {r.from_int(a), r.from_int(b), r.from_int(c)}; }

}  // namespace

TEST_CASE("induced_quadratic examples") {
  CHECK(induced_quadratic({Mat3::identity(qq)}) == form(qq, {1, 1, 1, 0, 0, 0}));
  CHECK(induced_quadratic(make_bilinear(f2, {{{0, 1, 0}, {0, 0, 0}, {0, 0, 0}}})) == form(f2, {0, 0, 0, 0, 0, 1}));
  CHECK(induced_quadratic(make_bilinear(f3, {{{1, 2, 0}, {0, 1, 0}, {0, 0, 1}}})) == form(f3, {1, 1, 1, 0, 0, 2}));
}

TEST_CASE("polar_bilinear examples") {
  CHECK(polar_bilinear(form(qq, {1, 1, 1, 0, 0, 0})).matrix == Mat3::scalar(qq.from_int(2)));
  CHECK(polar_bilinear(form(f2, {0, 0, 1, 0, 0, 1})) == make_bilinear(f2, {{{0, 1, 0}, {1, 0, 0}, {0, 0, 0}}}));
  CHECK(polar_bilinear(form(f3, {1, 0, 0, 1, 0, 0})) == make_bilinear(f3, {{{2, 0, 0}, {0, 0, 1}, {0, 1, 0}}}));
}

TEST_CASE("act_similarity examples") {
  const auto q = form(f5, {1, 2, 3, 4, 0, 1});
  CHECK(act_similarity(Similarity::identity(f5), q) == q);
  CHECK(act_similarity({Mat3::identity(f5), f5.from_int(3)}, q) == scale(q, f5.from_int(3)));
  const Similarity s{Mat3::from_rows(f5, {{{1, 0, 0}, {0, 1, 0}, {0, 0, 2}}}), f5.one()};
  CHECK(act_similarity(s, form(f5, {1, 1, 1, 0, 0, 0})) == form(f5, {1, 1, 4, 0, 0, 0}));
  const Similarity singular{Mat3::from_rows(f5, {{{1, 0, 0}, {0, 1, 0}, {0, 0, 0}}}), f5.one()};
  CHECK_THROWS_AS(act_similarity(singular, q), Error);
}

TEST_CASE("half_discriminant examples") {
  CHECK(half_discriminant(QuadraticForm3(qq)).is_zero());
  CHECK(half_discriminant(form(qq, {1, 1, 1, 0, 0, 0})) == qq.from_int(4));
  CHECK(half_discriminant(form(f2, {0, 0, 1, 0, 0, 1})) == f2.one());
  CHECK_FALSE(is_semiregular(form(f2, {1, 1, 1, 0, 0, 0})));
  CHECK(is_semiregular(form(f2, {0, 0, 1, 0, 0, 1})));
  CHECK_FALSE(is_semiregular(QuadraticForm3(f3)));
  CHECK(is_semiregular(form(f3, {1, 1, 1, 0, 0, 0})));
}

TEST_CASE("twist examples") {
  const auto q = form(qq, {1, 1, 1, 0, 0, 0});
  CHECK(twist(q, DiscriminantTwist(qq.one())) == q);
  CHECK(twist(q, DiscriminantTwist(qq.from_int(-1))) == form(qq, {-1, -1, -1, 0, 0, 0}));
  const auto q5 = form(f5, {0, 0, 1, 0, 0, 1});
  const auto t = twist(q5, DiscriminantTwist(f5.from_int(2)));
  CHECK(t == form(f5, {0, 0, 2, 0, 0, 2}));
  CHECK(half_discriminant(t) == f5.from_int(3) * half_discriminant(q5));
  CHECK_THROWS_AS(DiscriminantTwist(f5.zero()), Error);
}

TEST_CASE("orbit_equivalent examples") {
  const auto q3 = form(f3, {1, 2, 0, 1, 0, 2});
  const auto self = orbit_equivalent(q3, q3);
  REQUIRE(self);
  CHECK(is_similarity(*self, q3, q3));
  const auto swap = orbit_equivalent(form(f2, {1, 0, 0, 0, 0, 0}), form(f2, {0, 1, 0, 0, 0, 0}));
  REQUIRE(swap);
  CHECK(act_similarity(*swap, form(f2, {1, 0, 0, 0, 0, 0})) == form(f2, {0, 1, 0, 0, 0, 0}));
  const auto pure = orbit_equivalent(form(f3, {1, 1, 1, 0, 0, 0}), form(f3, {2, 2, 2, 0, 0, 0}));
  REQUIRE(pure);
  CHECK(act_similarity(*pure, form(f3, {1, 1, 1, 0, 0, 0})) == form(f3, {2, 2, 2, 0, 0, 0}));
  CHECK_FALSE(orbit_equivalent(form(f3, {1, 0, 0, 0, 0, 0}), form(f3, {1, 1, 0, 0, 0, 0})));
  CHECK_THROWS_AS(orbit_equivalent(form(qq, {1, 0, 0, 0, 0, 0}), form(qq, {1, 0, 0, 0, 0, 0})), Error);
  CHECK_THROWS_AS(orbit_equivalent(form(f5, {1, 0, 0, 0, 0, 0}), form(f5, {1, 0, 0, 0, 0, 0})), Error);
}

TEST_CASE("GL3 orders") {
  CHECK(general_linear_group(f2).size() == 168);
  CHECK(general_linear_group(f3).size() == 11232);
}

// ---------------------------------------------------------------- properties

TEST_CASE("q(cx) = c^2 q(x)") {
  Rng rng(11);
  for (const Ring& r : {f3, f5, qq, Ring::dual_numbers(3), Ring::residue_ring(2, 3)})
    for (int i = 0; i < 100; ++i) {
      const auto q = random_form(rng, r);
      const Vec<3> x = {random_elem(rng, r), random_elem(rng, r), random_elem(rng, r)};
      const Elem c = random_elem(rng, r);
      CHECK(q({c * x[0], c * x[1], c * x[2]}) == c * c * q(x));
    }
}

TEST_CASE("act_similarity satisfies q'(gx) = l q(x)") {
  Rng rng(12);
  for (const Ring& r : {f3, f5, qq})
    for (int i = 0; i < 100; ++i) {
      const auto q = random_form(rng, r);
      const auto s = random_similarity(rng, r);
      const auto target = act_similarity(s, q);
      CHECK(is_similarity(s, q, target));
      const Vec<3> x = {random_elem(rng, r), random_elem(rng, r), random_elem(rng, r)};
      CHECK(target(s.g * x) == s.l * q(x));
    }
}

TEST_CASE("d0 transformation laws, exhaustive over F2") {
  for (const auto& q : all_quadratic_forms(f2))
    for (const auto& g : general_linear_group(f2))
      CHECK(half_discriminant(precompose(q, g.inverse())) == g.det().pow(-2) * half_discriminant(q));
}

TEST_CASE("d0 transformation laws, random") {
  Rng rng(13);
  for (const Ring& r : {f3, f5, qq, Ring::dual_numbers(5)})
    for (int i = 0; i < 500; ++i) {
      const auto q = random_form(rng, r);
      const auto g = random_invertible(rng, r);
      const auto l = random_unit(rng, r);
      CHECK(half_discriminant(precompose(q, g.inverse())) == g.det().pow(-2) * half_discriminant(q));
      CHECK(half_discriminant(scale(q, l)) == l.pow(3) * half_discriminant(q));
    }
}

TEST_CASE("semiregularity is orbit-invariant") {
  Rng rng(14);
  for (const Ring& r : {f2, f3, f5, Ring::residue_ring(2, 2)})
    for (int i = 0; i < 300; ++i) {
      const auto q = random_form(rng, r);
      const auto s = random_similarity(rng, r);
      CHECK(is_semiregular(q) == is_semiregular(act_similarity(s, q)));
    }
}

TEST_CASE("fibers of induced_quadratic are alternating cosets, exhaustive over F2") {
  const auto all = all_bilinear_forms(f2);
  std::map<QuadraticForm3, std::vector<BilinearForm3>> fibers;
  for (const auto& b : all) fibers[induced_quadratic(b)].push_back(b);
  CHECK(fibers.size() == 64);  // surjective onto the 2^6 forms
  for (const auto& [q, fiber] : fibers) {
    CHECK(fiber.size() == 8);  // |Alt| = 2^3
    for (const auto& b : fiber) CHECK(is_alternating(b.matrix - fiber.front().matrix));
  }
  for (const auto& b : all)
    for (const auto& c : all)
      CHECK((induced_quadratic(b) == induced_quadratic(c)) == is_alternating(b.matrix - c.matrix));
}

TEST_CASE("polar of induced is b + b^T") {
  Rng rng(15);
  for (const Ring& r : {f2, f3, f5, qq, Ring::integers()})
    for (int i = 0; i < 100; ++i) {
      const auto b = random_bilinear(rng, r);
      CHECK(polar_bilinear(induced_quadratic(b)).matrix == b.matrix + b.matrix.transpose());
      CHECK(induced_quadratic(default_lift(induced_quadratic(b))) == induced_quadratic(b));
      CHECK(induced_quadratic(lower_lift(induced_quadratic(b))) == induced_quadratic(b));
    }
}

TEST_CASE("bilinear action matches the quadratic action") {
  Rng rng(16);
  for (int i = 0; i < 200; ++i) {
    const auto b = random_bilinear(rng, f5);
    const auto g = random_invertible(rng, f5);
    CHECK(induced_quadratic(act_bilinear(g, b)) == act_similarity({g, f5.one()}, induced_quadratic(b)));
  }
}
