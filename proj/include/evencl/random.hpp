#pragma once

#include <random>

#include "evencl/quadform.hpp"

namespace evencl {

using Rng = std::mt19937_64;

/// Uniform over finite rings; integers in [-9, 9]; rationals n/d with
/// n in [-9, 9], d in [1, 9].
Elem random_elem(Rng& rng, const Ring& r);
Elem random_unit(Rng& rng, const Ring& r);

template <std::size_t N>
Matrix<N> random_matrix(Rng& rng, const Ring& r) {
  Matrix<N> m(r);
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) m(i, j) = random_elem(rng, r);
  return m;
}

/// Rejection-sampled invertible matrix (determinant a unit).
Mat3 random_invertible(Rng& rng, const Ring& r);

QuadraticForm3 random_form(Rng& rng, const Ring& r);
BilinearForm3 random_bilinear(Rng& rng, const Ring& r);
Similarity random_similarity(Rng& rng, const Ring& r);

}  // namespace evencl
