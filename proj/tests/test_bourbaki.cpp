#include "doctest.h"
#include "evencl/bourbaki.hpp"
#include "evencl/random.hpp"

using namespace evencl;

namespace {

const Ring f5 = Ring::prime_field(5);

std::vector<int> random_word(Rng& rng, std::size_t n) {
  std::uniform_int_distribution<int> g(0, 2);
  std::vector<int> w(n);
  for (auto& x : w) x = g(rng);
  return w;
}

Vec<3> random_covector(Rng& rng, const Ring& r) { return {random_elem(rng, r), random_elem(rng, r), random_elem(rng, r)}; }

TensorElement random_tensor(Rng& rng, const Ring& r) {
  std::uniform_int_distribution<std::size_t> len(0, 5);
  TensorElement x(r);
  for (int i = 0; i < 4; ++i) x.add(random_word(rng, len(rng)), random_elem(rng, r));
  return x;
}

// Normal-form element of C(V, q) read back as a tensor of increasing words.
TensorElement as_tensor(const CliffordElement& x) {
  TensorElement t(x.ring);
  for (std::size_t s = 0; s < 8; ++s) {
    std::vector<int> w;
    for (int g = 0; g < 3; ++g)
      if (clifford_mask(s) & (1u << g)) w.push_back(g);
    t.add(w, x.c[s]);
  }
  return t;
}

}  // namespace

TEST_CASE("t_f examples") {
  const Vec<3> f = {f5.from_int(1), f5.from_int(2), f5.from_int(3)};
  CHECK(bourbaki_t(f, TensorElement::word(f5, {})).is_zero());
  const Vec<3> dual1 = {f5.one(), f5.zero(), f5.zero()};
  CHECK(bourbaki_t(dual1, TensorElement::word(f5, {0})) == TensorElement::word(f5, {}));
  // t_f(e1 e2) = f(e1) e2 - e1 f(e2)
  TensorElement expected(f5);
  expected.add({1}, f5.from_int(1));
  expected.add({0}, f5.from_int(-2));
  CHECK(bourbaki_t(f, TensorElement::word(f5, {0, 1})) == expected);
}

TEST_CASE("t_f is homogeneous of degree -1 on words and squares to zero") {
  Rng rng(31);
  for (int i = 0; i < 300; ++i) {
    const auto f = random_covector(rng, f5), g = random_covector(rng, f5);
    const auto w = random_word(rng, 1 + i % 6);
    for (const auto& [word, c] : bourbaki_t(f, TensorElement::word(f5, w)).terms) CHECK(word.size() + 1 == w.size());
    const auto x = random_tensor(rng, f5);
    CHECK(bourbaki_t(f, bourbaki_t(f, x)).is_zero());
    TensorElement anti = bourbaki_t(f, bourbaki_t(g, x));
    anti += bourbaki_t(g, bourbaki_t(f, x));
    CHECK(anti.is_zero());
  }
}

TEST_CASE("t_f vanishes on words in the kernel of f") {
  const Vec<3> f = {f5.zero(), f5.zero(), f5.one()};
  for (const std::vector<int> w : {std::vector<int>{0, 1, 1, 0}, {1}, {0, 0, 0}})
    CHECK(bourbaki_t(f, TensorElement::word(f5, w)).is_zero());
}

TEST_CASE("t_f preserves the Clifford ideal") {
  Rng rng(32);
  for (int i = 0; i < 200; ++i) {
    const auto q = random_form(rng, f5);
    const auto f = random_covector(rng, f5);
    const Vec<3> v = random_covector(rng, f5);
    // y (x (x) x - q(x)) z with random words y, z
    TensorElement rel = TensorElement::word(f5, {}).left_multiply(v).left_multiply(v);
    rel.add({}, -q(v));
    TensorElement gen(f5);
    const auto y = random_word(rng, i % 3), z = random_word(rng, (i / 3) % 3);
    for (const auto& [w, c] : rel.terms) {
      std::vector<int> full = y;
      full.insert(full.end(), w.begin(), w.end());
      full.insert(full.end(), z.begin(), z.end());
      gen.add(full, c);
    }
    CHECK(reduce_tensor(q, gen) == CliffordElement(f5));
    CHECK(reduce_tensor(q, bourbaki_t(f, gen)) == CliffordElement(f5));
  }
}

TEST_CASE("closed-form psi agrees with the recursion") {
  Rng rng(33);
  for (const Ring& r : {f5, Ring::prime_field(2), Ring::rationals(), Ring::dual_numbers(3)})
    for (int i = 0; i < 100; ++i) {
      const auto b = random_bilinear(rng, r);
      CHECK(psi_even_matrix_by_recursion(b) == psi_even_matrix(b));
    }
}

TEST_CASE("Psi_b(x (x) x') = x (x) x' + b(x, x')") {
  Rng rng(34);
  const auto b = random_bilinear(rng, f5);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      TensorElement expected = TensorElement::word(f5, {i, j});
      expected.add({}, b.matrix(i, j));
      CHECK(bourbaki_psi(b, TensorElement::word(f5, {i, j})) == expected);
    }
}

TEST_CASE("Psi additivity through the intermediate Clifford algebra") {
  Rng rng(35);
  for (int i = 0; i < 100; ++i) {
    const auto b1 = random_bilinear(rng, f5), b2 = random_bilinear(rng, f5);
    const BilinearForm3 sum{b1.matrix + b2.matrix};
    const QuadraticForm3 zero(f5);
    const auto w = TensorElement::word(f5, random_word(rng, i % 6));
    CHECK(bourbaki_psi(sum, w) == bourbaki_psi(b1, bourbaki_psi(b2, w)));
    // C(q_{b1+b2}) -> C(q_{b2}) -> C(0) against the direct map
    const auto mid = reduce_tensor(induced_quadratic(b2), bourbaki_psi(b1, w));
    CHECK(reduce_tensor(zero, bourbaki_psi(b2, as_tensor(mid))) == reduce_tensor(zero, bourbaki_psi(sum, w)));
  }
}

TEST_CASE("Psi_b carries the ideal of q_b into the exterior ideal") {
  Rng rng(36);
  for (int i = 0; i < 200; ++i) {
    const auto b = random_bilinear(rng, f5);
    const Vec<3> v = random_covector(rng, f5);
    TensorElement rel = TensorElement::word(f5, {}).left_multiply(v).left_multiply(v);
    rel.add({}, -induced_quadratic(b)(v));
    CHECK(reduce_tensor(QuadraticForm3(f5), bourbaki_psi(b, rel)) == CliffordElement(f5));
  }
}

TEST_CASE("psi_b on random even words") {
  Rng rng(37);
  for (int i = 0; i < 200; ++i) {
    const auto b = random_bilinear(rng, f5);
    const auto w = random_word(rng, 2 * (i % 3));
    const LambdaEven closed{psi_even_matrix(b) * even_part(reduce_word(induced_quadratic(b), w)).c};
    const auto rec = exterior_even_coordinates(reduce_tensor(QuadraticForm3(f5), bourbaki_psi(b, TensorElement::word(f5, w))));
    CHECK(closed == rec);
  }
}
