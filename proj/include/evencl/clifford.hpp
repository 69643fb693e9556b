#pragma once

#include <array>
#include <span>
#include <string>

#include "evencl/matrix.hpp"
#include "evencl/quadform.hpp"

namespace evencl {

// ------------------------------------------------------------------------
// Full Clifford algebra C(V, q), rank 8, as a rewriting system.

/// Element of C(V, q) in normal form: coefficients on e_S for the subsets
/// S of {1,2,3} in the order (empty, 1, 2, 3, 12, 13, 23, 123), each e_S the
/// increasing product of generators.
struct CliffordElement {
  Ring ring;
  std::array<Elem, 8> c;

  CliffordElement() = default;
  explicit CliffordElement(const Ring& r) : ring(r) { c.fill(r.zero()); }

  static CliffordElement scalar(const Elem& x);
  /// Generator e_{i+1}, i in 0..2.
  static CliffordElement generator(const Ring& r, std::size_t i);
  /// sum_i v_i e_{i+1}.
  static CliffordElement vector(const Vec<3>& v);

  CliffordElement& operator+=(const CliffordElement& o);
  CliffordElement& operator-=(const CliffordElement& o);
  CliffordElement scaled(const Elem& x) const;
  friend CliffordElement operator+(CliffordElement x, const CliffordElement& y) { return x += y; }
  friend CliffordElement operator-(CliffordElement x, const CliffordElement& y) { return x -= y; }
  friend bool operator==(const CliffordElement&, const CliffordElement&) = default;

  bool is_even() const;
};

/// Bitmask of the subset stored at slot `index` (bit i = generator e_{i+1}).
unsigned clifford_mask(std::size_t index);
std::size_t clifford_index(unsigned mask);

/// Normal form of the generator word e_{w0+1} e_{w1+1} ... under
/// e_i e_i -> a_i and e_j e_i -> u_ij - e_i e_j for j > i.
CliffordElement reduce_word(const QuadraticForm3& q, std::span<const int> word);

/// Basis products of C(V, q), built once per form.
class CliffordTable {
 public:
  explicit CliffordTable(const QuadraticForm3& q);
  const QuadraticForm3& form() const { return q_; }
  CliffordElement multiply(const CliffordElement& x, const CliffordElement& y) const;

 private:
  QuadraticForm3 q_;
  std::array<CliffordElement, 64> table_;
};

CliffordElement clifford_product(const QuadraticForm3& q, const CliffordElement& x, const CliffordElement& y);

// ------------------------------------------------------------------------
// Even part. Two coordinate systems, kept apart by type:
//   clifford side: (1, e2e3, e1e3, e1e2) inside C0(V, q);
//   lambda side:   (1, f1, f2, f3) with f1 = e2^e3, f2 = e3^e1, f3 = e1^e2.

enum class EvenBasis { clifford, lambda };

template <EvenBasis B>
struct EvenElement {
  Vec<4> c;
  friend bool operator==(const EvenElement&, const EvenElement&) = default;
};

using CliffordEven = EvenElement<EvenBasis::clifford>;
using LambdaEven = EvenElement<EvenBasis::lambda>;

/// Even coordinates of an element; throws std::invalid_argument on odd parts.
CliffordEven even_part(const CliffordElement& x);
CliffordElement to_clifford(const CliffordEven& x);

/// Structure constants on a rank-4 free module with unit f0:
/// f_i f_j = sum_k c[i][j][k] f_k.
class AlgebraStructure4 {
 public:
  AlgebraStructure4() = default;
  explicit AlgebraStructure4(const Ring& r) : ring_(r) { c_.fill(r.zero()); }

  const Ring& ring() const { return ring_; }
  Elem& at(std::size_t i, std::size_t j, std::size_t k) { return c_[16 * i + 4 * j + k]; }
  const Elem& at(std::size_t i, std::size_t j, std::size_t k) const { return c_[16 * i + 4 * j + k]; }
  const std::array<Elem, 64>& constants() const { return c_; }

  Vec<4> product(std::size_t i, std::size_t j) const;
  Vec<4> multiply(const Vec<4>& x, const Vec<4>& y) const;

  bool is_unital() const;
  bool is_associative() const;
  bool is_commutative() const;

  friend bool operator==(const AlgebraStructure4&, const AlgebraStructure4&) = default;

 private:
  Ring ring_;
  std::array<Elem, 64> c_;
};

/// Unit-preserving linear map on rank-4 algebras, lambda-side coordinates.
/// Column j is the image of f_j.
struct AlgebraMap {
  Mat4 matrix;

  static AlgebraMap identity(const Ring& r) { return {Mat4::identity(r)}; }
  const Ring& ring() const { return matrix.ring(); }
  /// This map applied after `first`.
  AlgebraMap after(const AlgebraMap& first) const { return {matrix * first.matrix}; }
  friend bool operator==(const AlgebraMap&, const AlgebraMap&) = default;
};

/// Matrix of psi_b on C0: clifford-side basis -> lambda-side basis,
/// 1 -> 1 and e_i e_j -> e_i ^ e_j + b(e_i, e_j).
Mat4 psi_even_matrix(const BilinearForm3& b);

LambdaEven apply_psi(const BilinearForm3& b, const CliffordEven& x);
CliffordEven apply_psi_inverse(const BilinearForm3& b, const LambdaEven& x);

/// Algebra structure on (1, f1, f2, f3) transported from C0(V, q_b) along psi_b.
AlgebraStructure4 upsilon(const BilinearForm3& b);
/// upsilon of the default (upper-triangular) lift.
AlgebraStructure4 even_clifford_algebra(const QuadraticForm3& q);

/// Clifford-side matrix of C0(g, l): e_i e_j -> l^-1 g(e_i) g(e_j) in C0(q').
Mat4 similarity_clifford_matrix(const Similarity& s, const QuadraticForm3& q);

/// C0(g, l): C0(q) -> C0(q') with q' = act_similarity(s, q), on lambda-side
/// coordinates relative to the default lifts of q and q'.
AlgebraMap c0_of_similarity(const Similarity& s, const QuadraticForm3& q);
/// As above with a stated target; throws NotASimilarity when s does not carry q to q_target.
AlgebraMap c0_of_similarity(const Similarity& s, const QuadraticForm3& q, const QuadraticForm3& q_target);

/// C0(lambda q) -> C0(q): e_i e_j -> lambda e_i e_j, lambda-side, default lifts.
AlgebraMap scaling_iso(const QuadraticForm3& q, const DiscriminantTwist& t);

/// Re-express a lambda-side map written against lifts (from_src, from_dst)
/// against lifts (to_src, to_dst) of the same forms.
AlgebraMap change_lifts(const AlgebraMap& phi, const BilinearForm3& from_src, const BilinearForm3& from_dst,
                        const BilinearForm3& to_src, const BilinearForm3& to_dst);

/// The induced map on Lambda^2 (f1, f2, f3 block). phi is written against the
/// given lifts; throws NotAnAlgebraIso unless it is an isomorphism
/// upsilon(src_lift) -> upsilon(dst_lift).
Mat3 transfer_to_lambda2(const AlgebraMap& phi, const BilinearForm3& src_lift, const BilinearForm3& dst_lift);
/// Same, with phi written against the default lifts of q and q_target.
Mat3 transfer_to_lambda2(const AlgebraMap& phi, const QuadraticForm3& q, const QuadraticForm3& q_target);

/// Which section of Sim -> Iso to apply. `odd` is the index 2k+1.
struct LiftVariant {
  enum class Kind { s_prime, s_odd, s_plus };
  Kind kind = Kind::s_plus;
  long long odd = 1;

  /// "sprime", "s:<2k+1>", "splus:<2k+1>"; throws ParseError.
  static LiftVariant parse(std::string_view text);
  std::string to_string() const;
};

/// Similarity (g, l) inducing phi: g = l^-1 r (phi_L2)^{-T}, where r is a
/// square root of l^3 det(phi_L2) chosen per variant. Throws NotAnAlgebraIso,
/// SquareRootUnavailable.
Similarity lift_section(const AlgebraMap& phi, const QuadraticForm3& q, const QuadraticForm3& q_target,
                        const LiftVariant& variant);

/// Invertible, unit-preserving, and multiplicative on all 16 basis pairs.
bool is_algebra_iso(const AlgebraMap& phi, const AlgebraStructure4& a, const AlgebraStructure4& b);

/// c_op[i][j][k] = c[j][i][k].
AlgebraStructure4 opposite(const AlgebraStructure4& a);

/// Entrywise image under the canonical homomorphism; throws NoCanonicalHom.
AlgebraStructure4 base_change_algebra(const AlgebraStructure4& a, const Ring& dst);

}  // namespace evencl
