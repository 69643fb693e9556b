#include "doctest.h"
#include "evencl/clifford.hpp"
#include "evencl/random.hpp"

using namespace evencl;

namespace {

const Ring f2 = Ring::prime_field(2);
const Ring f3 = Ring::prime_field(3);
const Ring f5 = Ring::prime_field(5);
const Ring qq = Ring::rationals();

QuadraticForm3 form(const Ring& r, std::array<long long, 6> c) { return QuadraticForm3::from_ints(r, c); }

CliffordElement word(const QuadraticForm3& q, std::initializer_list<int> w) {
  const std::vector<int> v(w);
  return reduce_word(q, v);
}

Vec<4> vec4(const Ring& r, long long a, long long b, long long c, long long d) {
  return {r.from_int(a), r.from_int(b), r.from_int(c), r.from_int(d)};
}

Mat4 diag4(const Ring& r, long long a, long long b, long long c, long long d) {
  Mat4 m(r);
  m(0, 0) = r.from_int(a), m(1, 1) = r.from_int(b), m(2, 2) = r.from_int(c), m(3, 3) = r.from_int(d);
  return m;
}

// c'(x, y) = T(c(T^-1 x, T^-1 y)): the structure making T an isomorphism A -> A'.
AlgebraStructure4 transport(const AlgebraStructure4& a, const Mat4& t) {
  const Mat4 inv = t.inverse();
  AlgebraStructure4 out(a.ring());
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      const auto v = t * a.multiply(inv.column(i), inv.column(j));
      for (std::size_t k = 0; k < 4; ++k) out.at(i, j, k) = v[k];
    }
  return out;
}

}  // namespace

TEST_CASE("clifford_product examples") {
  const auto q = form(qq, {3, 5, 7, 1, 2, 4});
  CHECK(clifford_product(q, CliffordElement::generator(qq, 0), CliffordElement::generator(qq, 0)) ==
        CliffordElement::scalar(qq.from_int(3)));
  const auto q1 = form(qq, {1, 1, 1, 0, 0, 0});
  CHECK(clifford_product(q1, word(q1, {0, 1}), word(q1, {0, 1})) == CliffordElement::scalar(qq.from_int(-1)));
  const QuadraticForm3 zero(f5);
  CHECK(clifford_product(zero, word(zero, {1, 2}), word(zero, {2, 0})) == CliffordElement(f5));
}

TEST_CASE("rewriting: e_j e_i = u_ij - e_i e_j") {
  const auto q = form(f5, {1, 2, 3, 4, 1, 2});
  CliffordElement expected = CliffordElement::scalar(q.cross(0, 1));
  expected -= word(q, {0, 1});
  CHECK(word(q, {1, 0}) == expected);
  CHECK(word(q, {2, 2}) == CliffordElement::scalar(f5.from_int(3)));
}

TEST_CASE("Clifford multiplication is associative and reduces words") {
  Rng rng(21);
  for (const Ring& r : {f3, qq, Ring::dual_numbers(2)})
    for (int i = 0; i < 20; ++i) {
      const auto q = random_form(rng, r);
      const CliffordTable t(q);
      std::array<CliffordElement, 3> x;
      for (auto& e : x) {
        e = CliffordElement(r);
        for (auto& c : e.c) c = random_elem(rng, r);
      }
      CHECK(t.multiply(t.multiply(x[0], x[1]), x[2]) == t.multiply(x[0], t.multiply(x[1], x[2])));
      const std::vector<int> w = {2, 1, 0, 2, 1};
      const std::vector<int> head = {2, 1}, tail = {0, 2, 1};
      CHECK(reduce_word(q, w) == t.multiply(reduce_word(q, head), reduce_word(q, tail)));
      const Vec<3> v = {random_elem(rng, r), random_elem(rng, r), random_elem(rng, r)};
      CHECK(t.multiply(CliffordElement::vector(v), CliffordElement::vector(v)) == CliffordElement::scalar(q(v)));
    }
}

TEST_CASE("psi_even_matrix examples") {
  const Mat4 psi0 = psi_even_matrix({Mat3(qq)});
  CHECK(psi0 == diag4(qq, 1, 1, -1, 1));
  CHECK(psi_even_matrix({Mat3::identity(qq)}) == psi0);
  const auto e23 = make_bilinear(f5, {{{0, 0, 0}, {0, 0, 1}, {0, 0, 0}}});
  Mat4 expected = diag4(f5, 1, 1, -1, 1);
  expected(0, 1) = f5.one();
  CHECK(psi_even_matrix(e23) == expected);
  CHECK(apply_psi(e23, {vec4(f5, 0, 1, 0, 0)}) == LambdaEven{vec4(f5, 1, 1, 0, 0)});
}

TEST_CASE("upsilon examples") {
  const AlgebraStructure4 zero = upsilon({Mat3(f3)});
  for (std::size_t i = 1; i < 4; ++i)
    for (std::size_t j = 1; j < 4; ++j) CHECK(zero.product(i, j) == vec4(f3, 0, 0, 0, 0));

  const AlgebraStructure4 h = upsilon({Mat3::identity(qq)});
  for (std::size_t i = 1; i < 4; ++i) {
    auto minus_one = vec4(qq, -1, 0, 0, 0);
    CHECK(h.product(i, i) == minus_one);
  }
  CHECK(h.product(1, 2) == vec4(qq, 0, 0, 0, -1));
  CHECK(h.product(2, 3) == vec4(qq, 0, -1, 0, 0));
  CHECK(h.product(3, 1) == vec4(qq, 0, 0, -1, 0));
  CHECK(h.product(2, 1) == vec4(qq, 0, 0, 0, 1));

  const AlgebraStructure4 e12 = upsilon(make_bilinear(f2, {{{0, 1, 0}, {0, 0, 0}, {0, 0, 0}}}));
  CHECK(e12.product(3, 3) == vec4(f2, 0, 0, 0, 1));
}

TEST_CASE("upsilon matches the generic structure constants") {
  // f_i f_j over a generic B, from the symbolic expansion in tools/derive_recover.py
  const auto b = make_bilinear(qq, {{{1, 2, 3}, {4, 5, 6}, {7, 8, 10}}});
  const AlgebraStructure4 a = upsilon(b);
  CHECK(a.product(1, 1) == vec4(qq, -2, 2, 0, 0));
  CHECK(a.product(1, 2) == vec4(qq, -2, -7, -6, -10));
  CHECK(a.product(1, 3) == vec4(qq, 3, 4, 5, 8));
  CHECK(a.product(2, 1) == vec4(qq, -4, 3, 8, 10));
  CHECK(a.product(2, 2) == vec4(qq, 11, 0, -4, 0));
  CHECK(a.product(2, 3) == vec4(qq, -6, -1, -2, -7));
  CHECK(a.product(3, 1) == vec4(qq, 3, -2, -5, -6));
  CHECK(a.product(3, 2) == vec4(qq, -6, 1, 4, 3));
  CHECK(a.product(3, 3) == vec4(qq, 3, 0, 0, 2));
}

TEST_CASE("upsilon is unital and associative") {
  for (const auto& b : all_bilinear_forms(f2)) {
    const auto a = upsilon(b);
    CHECK(a.is_unital());
    CHECK(a.is_associative());
  }
  Rng rng(22);
  for (const Ring& r : {f3, f5, qq})
    for (int i = 0; i < 1000; ++i) {
      const auto a = upsilon(random_bilinear(rng, r));
      REQUIRE(a.is_unital());
      REQUIRE(a.is_associative());
    }
}

TEST_CASE("c0_of_similarity examples") {
  const auto q = form(qq, {2, 3, 5, 1, -1, 4});
  CHECK(c0_of_similarity(Similarity::identity(qq), q) == AlgebraMap::identity(qq));

  // cyclic e1 -> e2 -> e3 -> e1 on the diagonal form: f1 -> f2 -> f3 -> f1
  const auto diag = form(qq, {1, 1, 1, 0, 0, 0});
  const Similarity cyc{Mat3::from_rows(qq, {{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}}), qq.one()};
  Mat4 expected(qq);
  expected(0, 0) = qq.one(), expected(2, 1) = qq.one(), expected(3, 2) = qq.one(), expected(1, 3) = qq.one();
  CHECK(c0_of_similarity(cyc, diag, diag).matrix == expected);

  const Similarity bad{Mat3::identity(qq), qq.from_int(2)};
  CHECK_THROWS_AS(c0_of_similarity(bad, diag, diag), Error);
}

TEST_CASE("det identity and functoriality") {
  Rng rng(23);
  for (const Ring& r : {f3, f5, qq, Ring::dual_numbers(3)})
    for (int i = 0; i < 150; ++i) {
      const auto q = random_form(rng, r);
      const auto s = random_similarity(rng, r);
      const auto s1 = random_similarity(rng, r);
      const auto mid = act_similarity(s, q);
      const auto phi = c0_of_similarity(s, q);
      CHECK(is_algebra_iso(phi, even_clifford_algebra(q), even_clifford_algebra(mid)));
      CHECK(phi.matrix.det() == s.l.pow(-3) * s.g.det().pow(2));
      CHECK(transfer_to_lambda2(phi, q, mid).det() == s.l.pow(-3) * s.g.det().pow(2));
      CHECK(c0_of_similarity(s.then(s1), q) == c0_of_similarity(s1, mid).after(phi));
      CHECK(s.then(s1).l == s.l * s1.l);
    }
}

TEST_CASE("transfer_to_lambda2 does not depend on the lifts") {
  Rng rng(24);
  for (int i = 0; i < 200; ++i) {
    const auto q = random_form(rng, f5);
    const auto s = random_similarity(rng, f5);
    const auto target = act_similarity(s, q);
    const auto phi = c0_of_similarity(s, q);
    auto alt = [&] {
      Mat3 m(f5);
      for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = a + 1; b < 3; ++b) {
          m(a, b) = random_elem(rng, f5);
          m(b, a) = -m(a, b);
        }
      return m;
    };
    const BilinearForm3 src{default_lift(q).matrix + alt()}, dst{default_lift(target).matrix + alt()};
    const auto moved = change_lifts(phi, default_lift(q), default_lift(target), src, dst);
    CHECK(is_algebra_iso(moved, upsilon(src), upsilon(dst)));
    CHECK(transfer_to_lambda2(moved, src, dst) == transfer_to_lambda2(phi, q, target));
  }
}

TEST_CASE("transfer_to_lambda2 rejects non-isomorphisms") {
  const auto q = form(f3, {1, 1, 1, 0, 0, 0});
  Mat4 m = Mat4::identity(f3);
  m(1, 1) = f3.from_int(2);
  CHECK_THROWS_AS(transfer_to_lambda2({m}, q, q), Error);
  CHECK(transfer_to_lambda2(AlgebraMap::identity(f3), q, q) == Mat3::identity(f3));
}

TEST_CASE("scaling_iso") {
  const auto q = form(qq, {1, 1, 1, 0, 0, 0});
  CHECK(scaling_iso(q, DiscriminantTwist(qq.one())) == AlgebraMap::identity(qq));
  CHECK(scaling_iso(q, DiscriminantTwist(qq.from_int(-1))).matrix == diag4(qq, 1, -1, -1, -1));
  Rng rng(25);
  for (int i = 0; i < 200; ++i) {
    const auto q5 = random_form(rng, f5);
    const Elem l = random_unit(rng, f5), m = random_unit(rng, f5);
    const DiscriminantTwist tl(l), tm(m), tlm(l * m);
    const auto iso = scaling_iso(q5, tl);
    CHECK(is_algebra_iso(iso, even_clifford_algebra(twist(q5, tl)), even_clifford_algebra(q5)));
    CHECK(iso.after(scaling_iso(twist(q5, tl), tm)) == scaling_iso(q5, tlm));
  }
}

TEST_CASE("is_algebra_iso examples") {
  const auto zero = upsilon({Mat3(f5)});
  CHECK(is_algebra_iso(AlgebraMap::identity(f5), zero, zero));
  CHECK(is_algebra_iso({diag4(f5, 1, 2, 1, 1)}, zero, zero));
  Mat4 collapse = Mat4::identity(f5);
  collapse(0, 1) = f5.one(), collapse(1, 1) = f5.zero();
  CHECK_FALSE(is_algebra_iso({collapse}, zero, zero));
  const auto h = upsilon({Mat3::identity(f5)});
  CHECK_FALSE(is_algebra_iso({diag4(f5, 1, 2, 1, 1)}, h, h));
}

TEST_CASE("lift_section examples") {
  const auto q = form(f5, {1, 2, 3, 0, 1, 0});
  const auto id = lift_section(AlgebraMap::identity(f5), q, q, LiftVariant::parse("splus:1"));
  CHECK(id == Similarity::identity(f5));

  // det(phi_L2) = 2 over F3 is a non-square
  const auto q3 = form(f3, {1, 1, 1, 0, 0, 0});
  const Similarity s{Mat3::identity(f3), f3.from_int(2)};
  const auto target = act_similarity(s, q3);
  const auto phi = c0_of_similarity(s, q3);
  REQUIRE(transfer_to_lambda2(phi, q3, target).det() == f3.from_int(2));
  CHECK_THROWS_AS(lift_section(phi, q3, target, LiftVariant::parse("sprime")), Error);
  const auto plus = lift_section(phi, q3, target, LiftVariant::parse("splus:1"));
  CHECK(c0_of_similarity(plus, q3) == phi);
  CHECK(plus.l == f3.from_int(2));
}

TEST_CASE("lift variants parse") {
  CHECK(LiftVariant::parse("sprime").kind == LiftVariant::Kind::s_prime);
  CHECK(LiftVariant::parse("s:3").odd == 3);
  CHECK(LiftVariant::parse("splus:-5").to_string() == "splus:-5");
  for (const char* bad : {"s:2", "splus:", "plus:1", "s:x"}) CHECK_THROWS_AS(LiftVariant::parse(bad), Error);
}

TEST_CASE("sections: identity, multiplier and det relation") {
  Rng rng(26);
  for (const Ring& r : {f5, qq, Ring::prime_field(7)})
    for (int i = 0; i < 60; ++i) {
      const auto q = random_form(rng, r);
      const auto s = random_similarity(rng, r);
      const auto target = act_similarity(s, q);
      const auto phi = c0_of_similarity(s, q);
      const Elem det = transfer_to_lambda2(phi, q, target).det();
      for (long long odd : {1LL, 3LL, -1LL, 5LL}) {
        for (auto kind : {LiftVariant::Kind::s_plus, LiftVariant::Kind::s_odd}) {
          const LiftVariant v{kind, odd};
          CAPTURE(v.to_string());
          const auto lifted = lift_section(phi, q, target, v);
          CHECK(c0_of_similarity(lifted, q) == phi);
          CHECK(lifted.l == det.pow(odd));
          CHECK(lifted.g.det().pow(2) * lifted.l.pow(-3) == det);
        }
      }
      if (is_square(det)) {
        const auto lifted = lift_section(phi, q, target, LiftVariant::parse("sprime"));
        CHECK(lifted.l.is_one());
        CHECK(lifted.g.det().pow(2) == det);
        CHECK(c0_of_similarity(lifted, q) == phi);
      }
    }
}

TEST_CASE("kernel lemma, exhaustive over F3") {
  const auto q = form(f3, {1, 1, 1, 0, 0, 0});
  REQUIRE(is_semiregular(q));
  int kernel = 0;
  for (const auto& g : general_linear_group(f3))
    for (const auto& l : f3.units()) {
      const Similarity s{g, l};
      if (!is_similarity(s, q, q)) continue;
      if (c0_of_similarity(s, q) != AlgebraMap::identity(f3)) continue;
      ++kernel;
      CHECK(g == Mat3::scalar(l.inverse() * g.det()));
    }
  CHECK(kernel == 2);
}

TEST_CASE("opposite") {
  CHECK(opposite(opposite(upsilon(make_bilinear(f5, {{{1, 2, 3}, {4, 0, 1}, {2, 2, 2}}})))) ==
        upsilon(make_bilinear(f5, {{{1, 2, 3}, {4, 0, 1}, {2, 2, 2}}})));
  for (const auto& b : all_bilinear_forms(f2))
    CHECK(opposite(upsilon(b)) == upsilon({-b.matrix.transpose()}));
  const auto comm = upsilon({Mat3::identity(f2)});
  CHECK(comm.is_commutative());
  CHECK(opposite(comm) == comm);
}

TEST_CASE("base_change_algebra") {
  const Ring z = Ring::integers();
  const auto h = upsilon({Mat3::identity(z)});
  CHECK(base_change_algebra(h, f5) == upsilon({Mat3::identity(f5)}));
  const auto reduced = base_change_algebra(h, f2);
  CHECK(reduced.product(1, 1) == vec4(f2, 1, 0, 0, 0));
  const Ring d3 = Ring::dual_numbers(3);
  Rng rng(27);
  for (int i = 0; i < 100; ++i) {
    const auto b = random_bilinear(rng, d3);
    const auto a = upsilon(b);
    const auto down = base_change_algebra(a, f3);
    for (std::size_t k = 0; k < 64; ++k) CHECK(down.constants()[k].residue() == a.constants()[k].residue());
    CHECK(down == upsilon(base_change(b, f3)));
  }
  CHECK_THROWS_AS(base_change_algebra(upsilon({Mat3::identity(f3)}), f5), Error);
}

TEST_CASE("GL3-equivariance of upsilon") {
  Rng rng(28);
  for (int i = 0; i < 200; ++i) {
    const auto b = random_bilinear(rng, f5);
    const auto g = random_invertible(rng, f5);
    const Mat3 l2 = exterior_square(g);
    Mat4 t(f5);
    t(0, 0) = f5.one();
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t c = 0; c < 3; ++c) t(r + 1, c + 1) = l2(r, c);
    CHECK(is_algebra_iso({t}, upsilon(b), upsilon(act_bilinear(g, b))));
    CHECK(transport(upsilon(b), t) == upsilon(act_bilinear(g, b)));
  }
}
