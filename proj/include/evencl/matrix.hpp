#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "evencl/ring.hpp"

namespace evencl {

template <std::size_t N>
using Vec = std::array<Elem, N>;

template <std::size_t N>
Vec<N> zero_vec(const Ring& r) {
  Vec<N> v;
  v.fill(r.zero());
  return v;
}

/// Dense N x N matrix over a Ring, row-major. Determinants and adjugates are
/// division-free so they are valid over rings with zero divisors.
template <std::size_t N>
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(const Ring& r) : ring_(r) { e_.fill(r.zero()); }

  static Matrix identity(const Ring& r) {
    Matrix m(r);
    for (std::size_t i = 0; i < N; ++i) m(i, i) = r.one();
    return m;
  }

  static Matrix scalar(const Elem& x) {
    Matrix m(x.ring());
    for (std::size_t i = 0; i < N; ++i) m(i, i) = x;
    return m;
  }

  static Matrix from_rows(const Ring& r, const std::array<std::array<long long, N>, N>& rows) {
    Matrix m(r);
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) m(i, j) = r.from_int(rows[i][j]);
    return m;
  }

  const Ring& ring() const { return ring_; }

  Elem& operator()(std::size_t i, std::size_t j) { return e_[i * N + j]; }
  const Elem& operator()(std::size_t i, std::size_t j) const { return e_[i * N + j]; }

  Vec<N> column(std::size_t j) const {
    Vec<N> v;
    for (std::size_t i = 0; i < N; ++i) v[i] = (*this)(i, j);
    return v;
  }
  void set_column(std::size_t j, const Vec<N>& v) {
    for (std::size_t i = 0; i < N; ++i) (*this)(i, j) = v[i];
  }

  Matrix transpose() const {
    Matrix t(ring_);
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix operator*(const Matrix& o) const {
    Matrix m(ring_);
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t k = 0; k < N; ++k) {
        if ((*this)(i, k).is_zero()) continue;
        for (std::size_t j = 0; j < N; ++j) m(i, j) += (*this)(i, k) * o(k, j);
      }
    return m;
  }

  Vec<N> operator*(const Vec<N>& v) const {
    Vec<N> out = zero_vec<N>(ring_);
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) out[i] += (*this)(i, j) * v[j];
    return out;
  }

  Matrix operator+(const Matrix& o) const {
    Matrix m = *this;
    for (std::size_t i = 0; i < N * N; ++i) m.e_[i] += o.e_[i];
    return m;
  }
  Matrix operator-(const Matrix& o) const {
    Matrix m = *this;
    for (std::size_t i = 0; i < N * N; ++i) m.e_[i] -= o.e_[i];
    return m;
  }
  Matrix operator-() const {
    Matrix m = *this;
    for (auto& x : m.e_) x = -x;
    return m;
  }
  Matrix scaled(const Elem& c) const {
    Matrix m = *this;
    for (auto& x : m.e_) x *= c;
    return m;
  }

  /// Minor with row r and column c deleted.
  Matrix<N - 1> minor(std::size_t r, std::size_t c) const requires(N > 1) {
    Matrix<N - 1> m(ring_);
    for (std::size_t i = 0, mi = 0; i < N; ++i) {
      if (i == r) continue;
      for (std::size_t j = 0, mj = 0; j < N; ++j) {
        if (j == c) continue;
        m(mi, mj++) = (*this)(i, j);
      }
      ++mi;
    }
    return m;
  }

  Elem det() const {
    if constexpr (N == 1) {
      return e_[0];
    } else {
      Elem d = ring_.zero();
      for (std::size_t j = 0; j < N; ++j) {
        if ((*this)(0, j).is_zero()) continue;
        Elem term = (*this)(0, j) * minor(0, j).det();
        if (j % 2 == 0) d += term; else d -= term;
      }
      return d;
    }
  }

  /// Transpose of the cofactor matrix: adj(M) * M = det(M) * I.
  Matrix adjugate() const {
    Matrix a(ring_);
    if constexpr (N == 1) {
      a(0, 0) = ring_.one();
    } else {
      for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) {
          Elem c = minor(i, j).det();
          a(j, i) = (i + j) % 2 == 0 ? c : -c;
        }
    }
    return a;
  }

  bool is_invertible() const { return det().is_unit(); }

  /// Throws SingularMatrix when the determinant is not a unit.
  Matrix inverse() const {
    auto inv_det = det().try_inverse();
    if (!inv_det) throw Error(Errc::singular_matrix, "determinant " + det().to_string() + " is not a unit");
    return adjugate().scaled(*inv_det);
  }

  friend bool operator==(const Matrix& x, const Matrix& y) { return x.e_ == y.e_; }
  friend auto operator<=>(const Matrix& x, const Matrix& y) { return x.e_ <=> y.e_; }

  const std::array<Elem, N * N>& entries() const { return e_; }

 private:
  Ring ring_;
  std::array<Elem, N * N> e_;
};

using Mat3 = Matrix<3>;
using Mat4 = Matrix<4>;

/// Cofactor matrix det(g) * g^{-T}; the matrix of the second exterior power
/// of g on the basis (e2^e3, e3^e1, e1^e2).
inline Mat3 exterior_square(const Mat3& g) { return g.adjugate().transpose(); }

/// Row-reduced echelon form over a field, in place. Returns pivot columns.
std::vector<std::size_t> rref(std::vector<std::vector<Elem>>& rows);

/// Basis of {x : M x = 0} over a field, as vectors of length `cols`.
std::vector<std::vector<Elem>> nullspace(std::vector<std::vector<Elem>> rows, std::size_t cols, const Ring& r);

}  // namespace evencl
