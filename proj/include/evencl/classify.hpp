#pragma once

#include <optional>
#include <string>
#include <vector>

#include "evencl/clifford.hpp"

namespace evencl {

/// Partition of every quadratic form over a small field. Forms are listed in
/// lexicographic coefficient order; class ids are numbered by first
/// appearance, so each representative is the least form of its class.
struct Partition {
  Ring field;
  std::vector<QuadraticForm3> forms;
  std::vector<int> class_of;
  std::vector<std::size_t> representatives;
  /// For orbit partitions: a similarity from the representative to each form.
  std::vector<std::optional<Similarity>> witness;

  std::size_t class_count() const { return representatives.size(); }
  friend bool same_partition(const Partition& a, const Partition& b);
};

enum class LiftScheme { upper, lower };

/// Index of q in the lexicographic enumeration of forms.
std::size_t form_index(const QuadraticForm3& q);

/// q ~ q' iff upsilon of the chosen lifts are isomorphic, decided by
/// exhaustive search. Throws FieldTooLarge unless p in {2, 3}.
Partition witt_partition(const Ring& field, LiftScheme lifts = LiftScheme::upper);

/// Orbits of q -> lambda (q o g^-1) over all of GL3 and all units.
/// Throws FieldTooLarge unless p in {2, 3}.
Partition orbit_partition(const Ring& field);

struct BijectionReport {
  std::string field;
  std::size_t forms = 0;
  std::size_t witt_classes = 0;
  std::size_t orbit_classes = 0;
  bool equal = false;
  std::size_t semiregular_classes = 0;
  std::size_t azumaya_classes = 0;
  bool lift_independent = false;
  bool orbit_witnesses_valid = false;
  bool azumaya_bijection = false;
  bool pass = false;
};

BijectionReport verify_bijection(const Ring& field);

/// Every unit-preserving automorphism of A. Throws FieldTooLarge unless p in {2, 3}.
std::vector<AlgebraMap> automorphism_group(const AlgebraStructure4& a);

/// det of the map induced on Lambda^2 (the f1, f2, f3 block).
Elem lambda2_determinant(const AlgebraMap& phi);

struct ExactRowsReport {
  std::string field;
  QuadraticForm3 form;
  std::size_t go_order = 0, o_order = 0, so_order = 0;
  std::size_t aut_order = 0, aut_prime_order = 0, saut_order = 0;
  std::size_t mu2_order = 0;
  bool o_kernel_is_mu2 = false;
  bool o_onto_aut_prime = false;
  bool go_kernel_is_scalars = false;
  bool go_onto_aut = false;
  bool so_bijective = false;
  bool det_one = false;
  bool det_relation = false;
  bool splus_section = false;
  bool splus_homomorphism = false;
  bool splus_saut_in_so = false;
  bool counting = false;
  bool pass = false;
};

/// Checks the rows 1 -> mu2 -> O -> Aut' -> 1, 1 -> units -> GO -> Aut -> 1,
/// SO = S-Aut, determinant 1 on every automorphism, and the splitting by s+_1.
/// Throws NotSemiregular, FieldTooLarge.
ExactRowsReport verify_exact_rows(const QuadraticForm3& q);

}  // namespace evencl
