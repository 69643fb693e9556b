#include "evencl/matrix.hpp"

namespace evencl {

std::vector<std::size_t> rref(std::vector<std::vector<Elem>>& rows) {
  std::vector<std::size_t> pivots;
  if (rows.empty()) return pivots;
  if (!rows.front().empty() && !rows.front().front().ring().is_field())
    throw Error(Errc::not_a_field, rows.front().front().ring().descriptor());
  const std::size_t cols = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][c].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    const Elem inv = rows[r][c].inverse();
    for (auto& x : rows[r]) x *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      const Elem f = rows[i][c];
      for (std::size_t j = 0; j < cols; ++j) rows[i][j] -= f * rows[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

std::vector<std::vector<Elem>> nullspace(std::vector<std::vector<Elem>> rows, std::size_t cols, const Ring& r) {
  if (!r.is_field()) throw Error(Errc::not_a_field, r.descriptor());
  auto pivots = rref(rows);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Elem>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Elem> v(cols, r.zero());
    v[free] = r.one();
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -rows[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace evencl
