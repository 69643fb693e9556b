#include "evencl/fp_kernel.hpp"

#include <algorithm>
#include <bitset>
#include <functional>

namespace evencl::fp {
namespace {

int mod(long long x, int p) {
  const long long r = x % p;
  return static_cast<int>(r < 0 ? r + p : r);
}

// Calls visit(rows) for every reduced row echelon k x 4 matrix over F_p.
void for_each_echelon(int p, int k, const std::function<void(const std::vector<std::array<int, 4>>&)>& visit) {
  std::array<int, 4> cols{};
  std::function<void(int, int)> choose_pivots = [&](int idx, int start) {
    if (idx == k) {
      // free slots: entries right of each pivot in non-pivot columns
      std::vector<std::pair<int, int>> free;
      for (int r = 0; r < k; ++r)
        for (int c = cols[r] + 1; c < 4; ++c)
          if (std::find(cols.begin(), cols.begin() + k, c) == cols.begin() + k) free.emplace_back(r, c);
      std::vector<std::array<int, 4>> rows(k, std::array<int, 4>{});
      for (int r = 0; r < k; ++r) rows[r][cols[r]] = 1;
      std::uint64_t total = 1;
      for (std::size_t i = 0; i < free.size(); ++i) total *= p;
      for (std::uint64_t code = 0; code < total; ++code) {
        auto rest = code;
        for (auto [r, c] : free) {
          rows[r][c] = static_cast<int>(rest % p);
          rest /= p;
        }
        visit(rows);
      }
      return;
    }
    for (int c = start; c < 4; ++c) {
      cols[idx] = c;
      choose_pivots(idx + 1, c + 1);
    }
  };
  choose_pivots(0, 0);
}

}  // namespace

Algebra::Algebra(const AlgebraStructure4& a) {
  const Ring& r = a.ring();
  if (!r.is_prime_field()) throw Error(Errc::not_a_field, r.descriptor() + " is not a prime field");
  p_ = static_cast<int>(r.characteristic_prime());
  if (p_ > 5) throw Error(Errc::field_too_large, r.descriptor());
  n_ = p_ * p_ * p_ * p_;
  for (std::size_t i = 0; i < 64; ++i) c_[i] = static_cast<int>(a.constants()[i].residue());
}

std::array<int, 4> Algebra::decode(int code) const {
  std::array<int, 4> x{};
  for (auto& v : x) {
    v = code % p_;
    code /= p_;
  }
  return x;
}

int Algebra::encode(const std::array<int, 4>& x) const {
  int code = 0;
  for (int i = 3; i >= 0; --i) code = code * p_ + x[i];
  return code;
}

std::array<int, 4> Algebra::multiply(const std::array<int, 4>& x, const std::array<int, 4>& y) const {
  std::array<long long, 4> acc{};
  for (int i = 0; i < 4; ++i) {
    if (!x[i]) continue;
    for (int j = 0; j < 4; ++j) {
      if (!y[j]) continue;
      const long long xy = x[i] * y[j];
      for (int k = 0; k < 4; ++k) acc[k] += xy * c(i, j, k);
    }
  }
  std::array<int, 4> out{};
  for (int k = 0; k < 4; ++k) out[k] = mod(acc[k], p_);
  return out;
}

IsoSearch::IsoSearch(const Algebra& src, const Algebra& dst) : a_(src), b_(dst) {
  if (src.p() != dst.p()) throw Error(Errc::ring_mismatch, "algebras over different fields");
  if (src.p() > 3) throw Error(Errc::field_too_large, "isomorphism search over F_" + std::to_string(src.p()));
  const int n = dst.size();
  mul_.resize(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) mul_[x * n + y] = static_cast<std::uint16_t>(dst.encode(dst.multiply(dst.decode(x), dst.decode(y))));
  // f_i f_j = c0 + sum c_k f_k can be checked once f_i, f_j and every f_k it uses are placed.
  for (int i = 1; i < 4; ++i)
    for (int j = 1; j < 4; ++j) {
      int level = std::max(i, j);
      for (int k = 1; k < 4; ++k)
        if (src.c(i, j, k)) level = std::max(level, k);
      eqs_[level].push_back({i, j});
    }
}

bool IsoSearch::equations_hold(int level, const MapImages& v) const {
  const int n = b_.size();
  const int p = b_.p();
  for (auto [i, j] : eqs_[level]) {
    std::array<int, 4> rhs{};
    rhs[0] = a_.c(i, j, 0);
    for (int k = 1; k < 4; ++k) {
      const int ck = a_.c(i, j, k);
      if (!ck) continue;
      const auto vk = b_.decode(v[k - 1]);
      for (int m = 0; m < 4; ++m) rhs[m] += ck * vk[m];
    }
    for (auto& x : rhs) x %= p;
    if (mul_[v[i - 1] * n + v[j - 1]] != b_.encode(rhs)) return false;
  }
  return true;
}

bool IsoSearch::independent(const MapImages& v) const {
  // The map is invertible iff the f1..f3 coordinates of the images are.
  std::array<std::array<int, 4>, 3> m;
  for (int i = 0; i < 3; ++i) m[i] = b_.decode(v[i]);
  const long long det = static_cast<long long>(m[0][1]) * (m[1][2] * m[2][3] - m[1][3] * m[2][2]) -
                        static_cast<long long>(m[0][2]) * (m[1][1] * m[2][3] - m[1][3] * m[2][1]) +
                        static_cast<long long>(m[0][3]) * (m[1][1] * m[2][2] - m[1][2] * m[2][1]);
  return mod(det, b_.p()) != 0;
}

bool IsoSearch::descend(int level, MapImages& v, std::vector<MapImages>* out) {
  if (level == 4) {
    if (!independent(v)) return false;
    if (out) {
      out->push_back(v);
      return false;
    }
    return true;
  }
  for (int code = 0; code < b_.size(); ++code) {
    v[level - 1] = code;
    ++visited_;
    if (!equations_hold(level, v)) continue;
    if (descend(level + 1, v, out)) return true;
  }
  return false;
}

std::optional<MapImages> IsoSearch::first() {
  visited_ = 0;
  MapImages v{};
  if (descend(1, v, nullptr)) return v;
  return std::nullopt;
}

std::vector<MapImages> IsoSearch::all() {
  visited_ = 0;
  std::vector<MapImages> out;
  MapImages v{};
  descend(1, v, &out);
  return out;
}

AlgebraMap to_algebra_map(const Algebra& a, const MapImages& v, const Ring& r) {
  Mat4 m(r);
  m(0, 0) = r.one();
  for (int i = 0; i < 3; ++i) {
    const auto x = a.decode(v[i]);
    for (int k = 0; k < 4; ++k) m(k, i + 1) = r.from_int(x[k]);
  }
  return {m};
}

int center_dimension(const Algebra& a) {
  const int p = a.p();
  // Unknown x = (x0..x3); the equations sum_i x_i (c[i][j][k] - c[j][i][k]) = 0.
  std::vector<std::array<int, 4>> rows;
  for (int j = 1; j < 4; ++j)
    for (int k = 0; k < 4; ++k) {
      std::array<int, 4> row{};
      for (int i = 0; i < 4; ++i) row[i] = mod(a.c(i, j, k) - a.c(j, i, k), p);
      rows.push_back(row);
    }
  int rank = 0;
  for (int col = 0; col < 4 && rank < static_cast<int>(rows.size()); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    int inv = 1;
    while (inv * rows[rank][col] % p != 1) ++inv;
    for (auto& x : rows[rank]) x = x * inv % p;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (static_cast<int>(r) == rank || rows[r][col] == 0) continue;
      const int f = rows[r][col];
      for (int c = 0; c < 4; ++c) rows[r][c] = mod(rows[r][c] - f * rows[rank][c], p);
    }
    ++rank;
  }
  return 4 - rank;
}

bool has_proper_ideal(const Algebra& a) {
  const int p = a.p();
  const int n = a.size();
  bool found = false;
  std::array<std::array<int, 4>, 4> basis{};
  for (int i = 0; i < 4; ++i) basis[i][i] = 1;
  for (int k = 1; k <= 3 && !found; ++k) {
    for_each_echelon(p, k, [&](const std::vector<std::array<int, 4>>& rows) {
      if (found) return;
      std::bitset<625> span;
      std::uint64_t combos = 1;
      for (int i = 0; i < k; ++i) combos *= p;
      for (std::uint64_t code = 0; code < combos; ++code) {
        std::array<int, 4> x{};
        auto rest = code;
        for (int r = 0; r < k; ++r) {
          const int coeff = static_cast<int>(rest % p);
          rest /= p;
          for (int c = 0; c < 4; ++c) x[c] = (x[c] + coeff * rows[r][c]) % p;
        }
        span.set(a.encode(x));
      }
      (void)n;
      for (const auto& v : rows)
        for (const auto& f : basis)
          if (!span.test(a.encode(a.multiply(v, f))) || !span.test(a.encode(a.multiply(f, v)))) return;
      found = true;
    });
  }
  return found;
}

std::array<std::uint64_t, 5> subspace_counts(int p) {
  std::array<std::uint64_t, 5> counts{};
  for (int k = 0; k <= 4; ++k) for_each_echelon(p, k, [&](const auto&) { ++counts[k]; });
  return counts;
}

}  // namespace evencl::fp
