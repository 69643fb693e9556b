#include "evencl/azumaya.hpp"

#include <stdexcept>

#include "evencl/fp_kernel.hpp"
#include "evencl/random.hpp"

namespace evencl {

CenterInfo center(const AlgebraStructure4& a) {
  const Ring& r = a.ring();
  if (!r.is_field()) throw Error(Errc::not_a_field, "center over " + r.descriptor());
  std::vector<std::vector<Elem>> rows;
  for (std::size_t j = 1; j < 4; ++j)
    for (std::size_t k = 0; k < 4; ++k) {
      std::vector<Elem> row(4, r.zero());
      for (std::size_t i = 0; i < 4; ++i) row[i] = a.at(i, j, k) - a.at(j, i, k);
      rows.push_back(std::move(row));
    }
  auto kernel = nullspace(rows, 4, r);
  rref(kernel);
  CenterInfo info;
  info.dimension = static_cast<int>(kernel.size());
  for (const auto& v : kernel) info.basis.push_back({v[0], v[1], v[2], v[3]});
  return info;
}

bool is_azumaya(const AlgebraStructure4& a) {
  const Ring& r = a.ring();
  if (!r.is_field()) throw Error(Errc::not_a_field, "Azumaya test over " + r.descriptor());
  if (!r.is_finite()) throw Error(Errc::infinite_ring, "Azumaya test over " + r.descriptor());
  const fp::Algebra alg(a);
  return fp::center_dimension(alg) == 1 && !fp::has_proper_ideal(alg);
}

BilinearForm3 recover_bilinear(const AlgebraStructure4& a) {
  // Closed-form inverse of upsilon, derived by tools/derive_recover.py.
  const Ring& r = a.ring();
  Mat3 m(r);
  m(0, 0) = a.at(3, 2, 1);
  m(0, 1) = -a.at(3, 1, 1);
  m(0, 2) = a.at(3, 2, 3);
  m(1, 0) = a.at(1, 3, 1);
  m(1, 1) = a.at(1, 3, 2);
  m(1, 2) = -a.at(3, 1, 3);
  m(2, 0) = -a.at(1, 2, 1);
  m(2, 1) = a.at(1, 3, 3);
  m(2, 2) = a.at(2, 1, 3);
  BilinearForm3 b{m};
  if (upsilon(b) != a) throw Error(Errc::not_specialized, "structure constants are not in the image of upsilon");
  return b;
}

C0Realization realize_as_c0(const AlgebraStructure4& a) {
  const BilinearForm3 b = recover_bilinear(a);
  if (!is_algebra_iso(AlgebraMap::identity(a.ring()), a, upsilon(b)))
    throw Error(Errc::not_specialized, "identity is not an isomorphism onto upsilon(B)");
  return {induced_quadratic(b), DiscriminantTwist(a.ring().one())};
}

AlgebraStructure4 matrix_algebra_2x2(const Ring& r) {
  // basis 0 = I, 1 = E11, 2 = E12, 3 = E21; E22 = I - E11
  AlgebraStructure4 a(r);
  for (std::size_t j = 0; j < 4; ++j) {
    a.at(0, j, j) = r.one();
    a.at(j, 0, j) = r.one();
  }
  a.at(1, 1, 1) = r.one();
  a.at(1, 2, 2) = r.one();
  a.at(2, 3, 1) = r.one();
  a.at(3, 1, 3) = r.one();
  a.at(3, 2, 0) = r.one();
  a.at(3, 2, 1) = -r.one();
  return a;
}

AlgebraStructure4 find_non_specialized_f2() {
  const Ring f2 = Ring::prime_field(2);
  auto try_table = [](const AlgebraStructure4& t) {
    if (!t.is_unital() || !t.is_associative()) return false;
    try {
      recover_bilinear(t);
      return false;
    } catch (const Error& e) {
      return e.code() == Errc::not_specialized;
    }
  };
  const auto forms = all_bilinear_forms(f2);
  for (const auto& b : forms) {
    const AlgebraStructure4 base = upsilon(b);
    for (std::size_t i = 1; i < 4; ++i)
      for (std::size_t j = 1; j < 4; ++j)
        for (std::size_t k = 0; k < 4; ++k) {
          AlgebraStructure4 t = base;
          t.at(i, j, k) += f2.one();
          if (try_table(t)) return t;
        }
  }
  // wider: two constants at once
  for (const auto& b : forms) {
    const AlgebraStructure4 base = upsilon(b);
    for (std::size_t x = 0; x < 36; ++x)
      for (std::size_t y = x + 1; y < 36; ++y) {
        AlgebraStructure4 t = base;
        t.at(1 + x / 12, 1 + (x / 4) % 3, x % 4) += f2.one();
        t.at(1 + y / 12, 1 + (y / 4) % 3, y % 4) += f2.one();
        if (try_table(t)) return t;
      }
  }
  throw std::runtime_error("no associative non-specialized table found over F2");
}

AgreementReport semiregular_azumaya_agree(const Ring& field, std::uint64_t samples, std::uint64_t seed,
                                          const std::function<void(const AgreementRow&)>& on_row) {
  AgreementReport report;
  report.field = field.descriptor();
  auto check = [&](const BilinearForm3& b) {
    const QuadraticForm3 q = induced_quadratic(b);
    AgreementRow row{b, half_discriminant(q), is_semiregular(q), is_azumaya(upsilon(b))};
    ++report.checked;
    if (row.agree())
      ++report.agreements;
    else
      report.disagreements.push_back(row);
    if (on_row) on_row(row);
  };
  if (samples == 0) {
    for (const auto& b : all_bilinear_forms(field)) check(b);
  } else {
    Rng rng(seed);
    for (std::uint64_t i = 0; i < samples; ++i) check(random_bilinear(rng, field));
  }
  return report;
}

}  // namespace evencl
