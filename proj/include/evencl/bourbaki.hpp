#pragma once

#include <map>
#include <vector>

#include "evencl/clifford.hpp"

namespace evencl {

/// Element of the tensor algebra TV (I trivialized): generator words with
/// coefficients. Words use 0-based generator indices.
struct TensorElement {
  Ring ring;
  std::map<std::vector<int>, Elem> terms;

  explicit TensorElement(const Ring& r) : ring(r) {}
  static TensorElement word(const Ring& r, std::vector<int> w);

  void add(const std::vector<int>& w, const Elem& c);
  TensorElement& operator+=(const TensorElement& o);
  TensorElement& operator-=(const TensorElement& o);
  TensorElement scaled(const Elem& c) const;
  /// x (x) this, for a vector x given by coordinates.
  TensorElement left_multiply(const Vec<3>& x) const;

  bool is_zero() const { return terms.empty(); }
  friend bool operator==(const TensorElement&, const TensorElement&) = default;
};

/// The antiderivation t_f on TV:
///   t_f(1) = 0,  t_f(x (x) y) = f(x) y - x (x) t_f(y).
TensorElement bourbaki_t(const Vec<3>& f, const TensorElement& x);

/// Psi_b on TV:
///   Psi_b(1) = 1,  Psi_b(x (x) y) = x (x) Psi_b(y) + t_{b_x}(Psi_b(y)),
/// with b_x = b(x, -).
TensorElement bourbaki_psi(const BilinearForm3& b, const TensorElement& x);

/// Image of a tensor in C(V, q).
CliffordElement reduce_tensor(const QuadraticForm3& q, const TensorElement& x);

/// t_f evaluated on a word and reduced in C(V, q).
CliffordElement bourbaki_t(const Vec<3>& f, std::span<const int> word, const QuadraticForm3& q);

/// Lambda-side coordinates of an even element of the exterior algebra C(V, 0).
LambdaEven exterior_even_coordinates(const CliffordElement& x);

/// psi_b on the even basis (1, e2e3, e1e3, e1e2) computed through the
/// Psi_b recursion and reduction in the exterior algebra. Should equal
/// psi_even_matrix(b).
Mat4 psi_even_matrix_by_recursion(const BilinearForm3& b);

}  // namespace evencl
