#pragma once

#include <array>
#include <optional>
#include <vector>

#include "evencl/matrix.hpp"
#include "evencl/ring.hpp"

namespace evencl {

/// Quadratic form on a free rank-3 module with values in a trivialized line.
///
/// Coefficients are stored in the fixed order (a1, a2, a3, u23, u13, u12):
///   q(x) = a1 x1^2 + a2 x2^2 + a3 x3^2 + u23 x2 x3 + u13 x1 x3 + u12 x1 x2.
class QuadraticForm3 {
 public:
  QuadraticForm3() = default;
  explicit QuadraticForm3(const Ring& r) : ring_(r) { coeffs_.fill(r.zero()); }
  QuadraticForm3(const Ring& r, std::array<Elem, 6> coeffs);
  static QuadraticForm3 from_ints(const Ring& r, const std::array<long long, 6>& c);

  const Ring& ring() const { return ring_; }
  const std::array<Elem, 6>& coeffs() const { return coeffs_; }

  /// Diagonal coefficient a_i, i in 0..2.
  const Elem& diag(std::size_t i) const { return coeffs_[i]; }
  /// Cross coefficient u_ij for i != j (0-based, symmetric in i, j).
  const Elem& cross(std::size_t i, std::size_t j) const { return coeffs_[3 + (3 - i - j)]; }

  Elem operator()(const Vec<3>& x) const;

  /// Polarization b_q(e_i, e_j): u_ij off the diagonal, 2 a_i on it.
  Elem polar(std::size_t i, std::size_t j) const;

  std::string to_string() const;

  friend bool operator==(const QuadraticForm3&, const QuadraticForm3&) = default;
  friend auto operator<=>(const QuadraticForm3& x, const QuadraticForm3& y) { return x.coeffs_ <=> y.coeffs_; }

 private:
  Ring ring_;
  std::array<Elem, 6> coeffs_;
};

/// Bilinear form b(x, y) = sum b_ij x_i y_j; not assumed symmetric.
struct BilinearForm3 {
  Mat3 matrix;

  const Ring& ring() const { return matrix.ring(); }
  Elem operator()(const Vec<3>& x, const Vec<3>& y) const;
  friend bool operator==(const BilinearForm3&, const BilinearForm3&) = default;
};

/// Pair (g, l): g invertible, l a unit multiplier.
struct Similarity {
  Mat3 g;
  Elem l;

  static Similarity identity(const Ring& r) { return {Mat3::identity(r), r.one()}; }
  /// (g1, l1) after (g, l) is (g1 g, l l1).
  Similarity then(const Similarity& next) const { return {next.g * g, l * next.l}; }

  friend bool operator==(const Similarity&, const Similarity&) = default;
};

/// Free-module twisted discriminant bundle: multiplication by a unit.
class DiscriminantTwist {
 public:
  /// Throws NonUnit.
  explicit DiscriminantTwist(Elem lambda);
  const Elem& lambda() const { return lambda_; }

 private:
  Elem lambda_;
};

BilinearForm3 make_bilinear(const Ring& r, const std::array<std::array<long long, 3>, 3>& rows);

QuadraticForm3 induced_quadratic(const BilinearForm3& b);
/// Symmetric matrix with diagonal 2 a_i and off-diagonal u_ij.
BilinearForm3 polar_bilinear(const QuadraticForm3& q);

/// Upper-triangular lift: b_ii = a_i, b_ij = u_ij (i < j), zero below.
BilinearForm3 default_lift(const QuadraticForm3& q);
/// Lower-triangular lift: b_ii = a_i, b_ji = u_ij (i < j), zero above.
BilinearForm3 lower_lift(const QuadraticForm3& q);

/// Whether the matrix is alternating (zero diagonal, skew).
bool is_alternating(const Mat3& m);

/// q o h: x -> q(h x).
QuadraticForm3 precompose(const QuadraticForm3& q, const Mat3& h);
QuadraticForm3 scale(const QuadraticForm3& q, const Elem& c);

/// q' with q'(y) = l q(g^-1 y), so q'(g x) = l q(x). Throws SingularMatrix, NonUnit.
QuadraticForm3 act_similarity(const Similarity& s, const QuadraticForm3& q);
/// Whether q'(g x) = l q(x) holds coefficient-wise.
bool is_similarity(const Similarity& s, const QuadraticForm3& q, const QuadraticForm3& q_target);

/// g . b : (x, y) -> b(g^-1 x, g^-1 y). Throws SingularMatrix.
BilinearForm3 act_bilinear(const Mat3& g, const BilinearForm3& b);

/// Kneser's half-discriminant
///   d0 = 4 a1 a2 a3 + u23 u13 u12 - a1 u23^2 - a2 u13^2 - a3 u12^2.
Elem half_discriminant(const QuadraticForm3& q);
bool is_semiregular(const QuadraticForm3& q);

/// lambda * q coefficient-wise.
QuadraticForm3 twist(const QuadraticForm3& q, const DiscriminantTwist& t);

/// All of GL3 over a finite ring, enumerated once per ring and cached.
/// Throws InfiniteRing, or SearchTooLarge when |R|^9 exceeds the desk budget.
const std::vector<Mat3>& general_linear_group(const Ring& r);

/// Witness (g, lambda) with q' = lambda * (q o g^-1), if one exists.
/// Searches all of GL3 and all units. Throws InfiniteRing for z and q.
std::optional<Similarity> orbit_equivalent(const QuadraticForm3& q, const QuadraticForm3& q_target);

/// Every form over a finite ring, in lexicographic coefficient order.
std::vector<QuadraticForm3> all_quadratic_forms(const Ring& r);
/// Every bilinear form over a finite ring (row-major lexicographic).
std::vector<BilinearForm3> all_bilinear_forms(const Ring& r);

QuadraticForm3 base_change(const QuadraticForm3& q, const Ring& dst);
BilinearForm3 base_change(const BilinearForm3& b, const Ring& dst);
template <std::size_t N>
Matrix<N> base_change(const Matrix<N>& m, const Ring& dst) {
  Matrix<N> out(dst);
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) out(i, j) = ring_hom_apply(m.ring(), dst, m(i, j));
  return out;
}

}  // namespace evencl
