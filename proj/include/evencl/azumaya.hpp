#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "evencl/clifford.hpp"

namespace evencl {

struct CenterInfo {
  int dimension = 0;
  std::vector<Vec<4>> basis;  ///< reduced echelon basis
};

/// Solutions of x f_j = f_j x, j = 1..3. Throws NotAField.
CenterInfo center(const AlgebraStructure4& a);

/// Center of dimension 1 and no proper nonzero two-sided ideal.
/// Throws NotAField (also for z and q), FieldTooLarge for p > 5.
bool is_azumaya(const AlgebraStructure4& a);

/// The unique B with upsilon(B) = A. Throws NotSpecialized.
BilinearForm3 recover_bilinear(const AlgebraStructure4& a);

struct C0Realization {
  QuadraticForm3 form;
  DiscriminantTwist twist;
};

/// q = induced_quadratic(recover_bilinear(A)) with the trivial twist;
/// checks that the identity is an isomorphism A -> upsilon(B). Throws NotSpecialized.
C0Realization realize_as_c0(const AlgebraStructure4& a);

/// M_2(R) on the basis (I, E11, E12, E21).
AlgebraStructure4 matrix_algebra_2x2(const Ring& r);

/// Unital associative table over F_2 that is not in the image of upsilon,
/// found by perturbing single constants of upsilon tables. Throws
/// std::runtime_error if the search comes up empty.
AlgebraStructure4 find_non_specialized_f2();

struct AgreementRow {
  BilinearForm3 b;
  Elem d0;
  bool semiregular;
  bool azumaya;
  bool agree() const { return semiregular == azumaya; }
};

struct AgreementReport {
  std::string field;
  std::uint64_t checked = 0;
  std::uint64_t agreements = 0;
  std::vector<AgreementRow> disagreements;
};

/// Compares is_semiregular(q_B) with is_azumaya(upsilon(B)): every B when
/// `samples` is 0, otherwise `samples` random B drawn with `seed`.
/// `on_row`, if set, sees every row.
AgreementReport semiregular_azumaya_agree(const Ring& field, std::uint64_t samples = 0, std::uint64_t seed = 0,
                                          const std::function<void(const AgreementRow&)>& on_row = {});

}  // namespace evencl
