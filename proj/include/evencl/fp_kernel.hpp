#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "evencl/clifford.hpp"

namespace evencl::fp {

/// A rank-4 algebra over F_p with small-integer structure constants.
/// Vectors of F_p^4 are coded as x0 + p x1 + p^2 x2 + p^3 x3.
class Algebra {
 public:
  /// Throws NotAField unless the ring is a prime field; FieldTooLarge for p > 5.
  explicit Algebra(const AlgebraStructure4& a);

  int p() const { return p_; }
  int size() const { return n_; }
  int c(int i, int j, int k) const { return c_[16 * i + 4 * j + k]; }

  std::array<int, 4> decode(int code) const;
  int encode(const std::array<int, 4>& x) const;
  std::array<int, 4> multiply(const std::array<int, 4>& x, const std::array<int, 4>& y) const;

 private:
  int p_;
  int n_;
  std::array<int, 64> c_{};
};

/// Unit-preserving linear map as the images of f1, f2, f3 (codes).
using MapImages = std::array<int, 3>;

/// Backtracking search over the images of f1, f2, f3 (p^12 candidates).
/// Every multiplication equation is checked as soon as all images it
/// mentions are fixed. Requires p <= 3 (FieldTooLarge otherwise).
class IsoSearch {
 public:
  IsoSearch(const Algebra& src, const Algebra& dst);

  std::optional<MapImages> first();
  std::vector<MapImages> all();
  /// Candidates visited by the last search.
  std::uint64_t visited() const { return visited_; }

 private:
  bool descend(int level, MapImages& v, std::vector<MapImages>* out);
  bool equations_hold(int level, const MapImages& v) const;
  bool independent(const MapImages& v) const;

  const Algebra& a_;
  const Algebra& b_;
  std::vector<std::uint16_t> mul_;  // dst product table, n*n
  std::array<std::vector<std::array<int, 2>>, 4> eqs_;
  std::uint64_t visited_ = 0;
};

AlgebraMap to_algebra_map(const Algebra& a, const MapImages& v, const Ring& r);

/// Dimension of the center (solutions of x f_j = f_j x).
int center_dimension(const Algebra& a);

/// Whether a proper nonzero two-sided ideal exists, by enumerating every
/// reduced-echelon subspace of dimension 1..3.
bool has_proper_ideal(const Algebra& a);

/// Number of reduced-echelon subspaces of F_p^4 of each dimension 0..4.
std::array<std::uint64_t, 5> subspace_counts(int p);

}  // namespace evencl::fp
