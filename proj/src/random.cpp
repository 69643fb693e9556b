#include "evencl/random.hpp"

namespace evencl {

Elem random_elem(Rng& rng, const Ring& r) {
  switch (r.kind()) {
    case Ring::Kind::integers:
      return r.from_int(std::uniform_int_distribution<long long>(-9, 9)(rng));
    case Ring::Kind::rationals: {
      const auto n = std::uniform_int_distribution<long>(-9, 9)(rng);
      const auto d = std::uniform_int_distribution<long>(1, 9)(rng);
      mpq_class x(n, d);
      x.canonicalize();
      return r.from_rational(x);
    }
    default:
      return r.element_at(std::uniform_int_distribution<std::uint64_t>(0, r.size() - 1)(rng));
  }
}

Elem random_unit(Rng& rng, const Ring& r) {
  if (r.kind() == Ring::Kind::integers) return r.from_int(std::bernoulli_distribution(0.5)(rng) ? 1 : -1);
  for (;;) {
    Elem x = random_elem(rng, r);
    if (x.is_unit()) return x;
  }
}

Mat3 random_invertible(Rng& rng, const Ring& r) {
  for (;;) {
    Mat3 m = random_matrix<3>(rng, r);
    if (m.is_invertible()) return m;
  }
}

QuadraticForm3 random_form(Rng& rng, const Ring& r) {
  std::array<Elem, 6> c;
  for (auto& x : c) x = random_elem(rng, r);
  return QuadraticForm3(r, c);
}

BilinearForm3 random_bilinear(Rng& rng, const Ring& r) { return {random_matrix<3>(rng, r)}; }

Similarity random_similarity(Rng& rng, const Ring& r) {
  Mat3 g = random_invertible(rng, r);
  Elem l = random_unit(rng, r);
  return {std::move(g), std::move(l)};
}

}  // namespace evencl
