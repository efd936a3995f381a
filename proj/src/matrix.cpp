#include "troplb/matrix.hpp"

#include <algorithm>
#include <utility>

#include "troplb/error.hpp"

namespace troplb {

RatMatrix rref(RatMatrix m, std::size_t ncols, std::vector<std::size_t>* pivots) {
  if (pivots) pivots->clear();
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && m[sel][col] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    Rat inv = 1 / m[row][col];
    for (std::size_t j = 0; j < ncols; ++j) m[row][j] *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == row || m[i][col] == 0) continue;
      Rat f = m[i][col];
      for (std::size_t j = 0; j < ncols; ++j) m[i][j] -= f * m[row][j];
    }
    if (pivots) pivots->push_back(col);
    ++row;
  }
  m.resize(row);
  return m;
}

std::size_t rank(const RatMatrix& m) {
  if (m.empty()) return 0;
  return rref(m, m.front().size()).size();
}

std::size_t rank(const IntMatrix& m) { return rank(to_rat(m)); }

std::optional<RatVec> solve_rational(const RatMatrix& a, const RatVec& b, std::size_t ncols) {
  RatMatrix aug;
  aug.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    RatVec row = a[i];
    row.push_back(b.at(i));
    aug.push_back(std::move(row));
  }
  std::vector<std::size_t> pivots;
  RatMatrix r = rref(aug, ncols + 1, &pivots);
  RatVec x = zero_rat(ncols);
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (pivots[i] == ncols) return std::nullopt;
    x[pivots[i]] = r[i][ncols];
  }
  return x;
}

IntMatrix rational_kernel(const RatMatrix& a, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  RatMatrix r = rref(a, ncols, &pivots);
  std::vector<bool> is_pivot(ncols, false);
  for (auto p : pivots) is_pivot[p] = true;
  IntMatrix basis;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    RatVec v = zero_rat(ncols);
    v[free] = 1;
    for (std::size_t i = 0; i < r.size(); ++i) v[pivots[i]] = -r[i][free];
    basis.push_back(primitive(v));
  }
  return basis;
}

namespace {

void row_axpy(IntVec& dst, const Int& f, const IntVec& src) {
  for (std::size_t j = 0; j < dst.size(); ++j) dst[j] += f * src[j];
}

}  // namespace

HermiteForm hermite(const IntMatrix& a, std::size_t ncols) {
  HermiteForm out;
  out.h = a;
  const std::size_t m = a.size();
  out.u.assign(m, IntVec(m, Int(0)));
  for (std::size_t i = 0; i < m; ++i) out.u[i][i] = 1;

  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < m; ++col) {
    while (true) {
      // Pick the row with the smallest nonzero entry in this column.
      std::size_t best = m;
      for (std::size_t i = row; i < m; ++i) {
        if (out.h[i][col] == 0) continue;
        if (best == m || abs(out.h[i][col]) < abs(out.h[best][col])) best = i;
      }
      if (best == m) break;
      std::swap(out.h[row], out.h[best]);
      std::swap(out.u[row], out.u[best]);
      bool done = true;
      for (std::size_t i = row + 1; i < m; ++i) {
        if (out.h[i][col] == 0) continue;
        Int q = floor_div(out.h[i][col], out.h[row][col]);
        row_axpy(out.h[i], -q, out.h[row]);
        row_axpy(out.u[i], -q, out.u[row]);
        if (out.h[i][col] != 0) done = false;
      }
      if (done) break;
    }
    if (out.h[row][col] == 0) continue;
    if (out.h[row][col] < 0) {
      for (auto& x : out.h[row]) x = -x;
      for (auto& x : out.u[row]) x = -x;
    }
    for (std::size_t i = 0; i < row; ++i) {
      Int q = floor_div(out.h[i][col], out.h[row][col]);
      if (q == 0) continue;
      row_axpy(out.h[i], -q, out.h[row]);
      row_axpy(out.u[i], -q, out.u[row]);
    }
    ++row;
  }
  out.rank = row;
  return out;
}

IntMatrix lattice_basis(const IntMatrix& rows, std::size_t ncols) {
  HermiteForm hf = hermite(rows, ncols);
  hf.h.resize(hf.rank);
  return hf.h;
}

IntMatrix integer_kernel(const IntMatrix& a, std::size_t ncols) {
  if (a.empty()) {
    IntMatrix id;
    for (std::size_t i = 0; i < ncols; ++i) id.push_back(unit_int(ncols, i));
    return id;
  }
  HermiteForm hf = hermite(transpose(a, ncols), a.size());
  IntMatrix kernel(hf.u.begin() + static_cast<std::ptrdiff_t>(hf.rank), hf.u.end());
  return lattice_basis(kernel, ncols);
}

std::optional<IntVec> solve_integer(const IntMatrix& a, const IntVec& b, std::size_t ncols) {
  const std::size_t m = a.size();
  if (m == 0) return zero_int(ncols);
  // U A^T = H, so A U^T = H^T and x = U^T y with H^T y = b.
  HermiteForm hf = hermite(transpose(a, ncols), m);
  IntVec residual = b;
  IntVec y = zero_int(ncols);
  std::size_t col = 0;
  for (std::size_t i = 0; i < hf.rank; ++i) {
    while (hf.h[i][col] == 0) ++col;
    if (residual[col] % hf.h[i][col] != 0) return std::nullopt;
    y[i] = residual[col] / hf.h[i][col];
    for (std::size_t j = 0; j < m; ++j) residual[j] -= y[i] * hf.h[i][j];
  }
  if (!is_zero(residual)) return std::nullopt;
  IntVec x = zero_int(ncols);
  for (std::size_t i = 0; i < hf.rank; ++i)
    if (y[i] != 0) row_axpy(x, y[i], hf.u[i]);
  return x;
}

IntVec reduce_mod_lattice(IntVec x, const IntMatrix& hnf) {
  for (const auto& row : hnf) {
    std::size_t col = 0;
    while (col < row.size() && row[col] == 0) ++col;
    if (col == row.size()) continue;
    Int q = floor_div(x[col], row[col]);
    if (q != 0) row_axpy(x, -q, row);
  }
  return x;
}

bool in_lattice(const IntVec& x, const IntMatrix& basis, std::size_t ncols) {
  IntVec r = reduce_mod_lattice(x, lattice_basis(basis, ncols));
  return is_zero(r);
}

std::vector<Int> smith_diagonal(const IntMatrix& a, std::size_t ncols) {
  IntMatrix m = a;
  std::size_t cols = ncols;
  // Alternate row and column Hermite reductions until the matrix is diagonal.
  for (int guard = 0; guard < 1000; ++guard) {
    m = lattice_basis(m, cols);
    bool diagonal = true;
    for (std::size_t i = 0; i < m.size() && diagonal; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        if (i != j && m[i][j] != 0) {
          diagonal = false;
          break;
        }
    if (diagonal) break;
    std::size_t rows = m.size();
    m = transpose(m, cols);
    cols = rows;
  }
  std::vector<Int> d;
  for (std::size_t i = 0; i < m.size() && i < cols; ++i)
    if (m[i][i] != 0) d.push_back(abs(m[i][i]));
  // Enforce the divisibility chain.
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      Int g = gcd(d[i], d[j]);
      Int l = lcm(d[i], d[j]);
      d[i] = g;
      d[j] = l;
    }
  return d;
}

void for_each_combination(std::size_t n, std::size_t k,
                          const std::function<bool(const std::vector<std::size_t>&)>& fn) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (!fn(idx)) return;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace troplb
