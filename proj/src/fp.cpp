#include "wl/fp.hpp"

#include <algorithm>
#include <sstream>

namespace wl {

bool is_odd_prime(std::uint32_t p) {
  if (p < 3 || p % 2 == 0) return false;
  for (std::uint32_t d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

void require_odd_prime(std::uint32_t p) {
  if (!is_odd_prime(p))
    throw std::invalid_argument("modulus must be an odd prime, got " + std::to_string(p));
}

std::uint32_t fp_pow(std::uint32_t base, std::uint64_t e, std::uint32_t p) {
  std::uint64_t acc = 1, b = base % p;
  while (e) {
    if (e & 1) acc = acc * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(acc);
}

std::uint32_t fp_inv(std::uint32_t x, std::uint32_t p) {
  x %= p;
  if (x == 0) throw std::domain_error("division by zero in F_p");
  return fp_pow(x, p - 2, p);
}

FpScalar::FpScalar(std::int64_t v, std::uint32_t modulus) : p(modulus) {
  require_odd_prime(modulus);
  value = fp_reduce(v, modulus);
}

FpScalar FpScalar::operator+(FpScalar o) const {
  return FpScalar(std::int64_t(value) + o.value, p);
}
FpScalar FpScalar::operator-(FpScalar o) const {
  return FpScalar(std::int64_t(value) - o.value, p);
}
FpScalar FpScalar::operator*(FpScalar o) const {
  return FpScalar(std::int64_t(value) * o.value, p);
}
FpScalar FpScalar::operator-() const { return FpScalar(-std::int64_t(value), p); }
FpScalar FpScalar::inv() const { return FpScalar(fp_inv(value, p), p); }

bool FpVector::is_zero() const {
  return std::all_of(v_.begin(), v_.end(), [](std::uint32_t x) { return x == 0; });
}

FpMatrix::FpMatrix(std::uint32_t p, std::size_t rows, std::size_t cols)
    : p_(p), rows_(rows), cols_(cols), a_(rows * cols, 0) {
  require_odd_prime(p);
}

FpMatrix FpMatrix::from_rows(std::uint32_t p,
                             const std::vector<std::vector<std::int64_t>>& rows) {
  std::size_t r = rows.size();
  std::size_t c = r ? rows[0].size() : 0;
  FpMatrix m(p, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw std::invalid_argument("ragged rows");
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

void FpMatrix::set_row(std::size_t r, const FpVector& v) {
  if (v.size() != cols_ || v.p() != p_) throw std::invalid_argument("row shape mismatch");
  std::copy(v.data().begin(), v.data().end(), a_.begin() + r * cols_);
}

void FpMatrix::zero_column(std::size_t c) {
  for (std::size_t r = 0; r < rows_; ++r) a_[r * cols_ + c] = 0;
}

void FpMatrix::swap_columns(std::size_t c1, std::size_t c2) {
  for (std::size_t r = 0; r < rows_; ++r) std::swap(a_[r * cols_ + c1], a_[r * cols_ + c2]);
}

void FpMatrix::negate_column(std::size_t c) {
  for (std::size_t r = 0; r < rows_; ++r) {
    std::uint32_t& x = a_[r * cols_ + c];
    if (x) x = p_ - x;
  }
}

std::string FpMatrix::to_string() const {
  std::ostringstream os;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? " " : "") << at(r, c);
    os << "\n";
  }
  return os.str();
}

namespace {

// In-place elimination to (non-reduced) echelon form; returns pivot columns.
std::vector<std::size_t> echelonize(FpMatrix& m) {
  const std::uint32_t p = m.p();
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pr = r;
    while (pr < rows && m.at(pr, c) == 0) ++pr;
    if (pr == rows) continue;
    if (pr != r)
      for (std::size_t j = 0; j < cols; ++j) {
        std::uint32_t t = m.at(r, j);
        m.set(r, j, m.at(pr, j));
        m.set(pr, j, t);
      }
    std::uint32_t inv = fp_inv(m.at(r, c), p);
    for (std::size_t j = c; j < cols; ++j)
      m.set(r, j, std::uint64_t(m.at(r, j)) * inv % p);
    for (std::size_t i = r + 1; i < rows; ++i) {
      std::uint32_t f = m.at(i, c);
      if (!f) continue;
      for (std::size_t j = c; j < cols; ++j) {
        std::uint64_t v = m.at(i, j) + std::uint64_t(p - f) * m.at(r, j) % p;
        m.set(i, j, v % p);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

void back_substitute(FpMatrix& m, const std::vector<std::size_t>& pivots) {
  const std::uint32_t p = m.p();
  const std::size_t cols = m.cols();
  for (std::size_t k = pivots.size(); k-- > 0;) {
    std::size_t c = pivots[k];
    for (std::size_t i = 0; i < k; ++i) {
      std::uint32_t f = m.at(i, c);
      if (!f) continue;
      for (std::size_t j = c; j < cols; ++j) {
        std::uint64_t v = m.at(i, j) + std::uint64_t(p - f) * m.at(k, j) % p;
        m.set(i, j, v % p);
      }
    }
  }
}

}  // namespace

std::size_t rank(FpMatrix m) { return echelonize(m).size(); }

FpMatrix rref(FpMatrix m) {
  auto pivots = echelonize(m);
  back_substitute(m, pivots);
  // drop zero rows so equal row spaces compare equal
  FpMatrix out(m.p(), pivots.size(), m.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out.set(r, c, m.at(r, c));
  return out;
}

FpMatrix wedge(const FpMatrix& m) {
  if (m.rows() < 2 || m.cols() < 2)
    throw std::invalid_argument("wedge needs at least 2 rows and 2 columns");
  const std::uint32_t p = m.p();
  const std::size_t nr = m.rows(), nc = m.cols();
  FpMatrix out(p, choose2(nr), choose2(nc));
  std::size_t row = 0;
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = i + 1; j < nr; ++j, ++row) {
      std::size_t col = 0;
      for (std::size_t k = 0; k < nc; ++k)
        for (std::size_t l = k + 1; l < nc; ++l, ++col) {
          std::int64_t d = std::int64_t(m.at(i, k)) * m.at(j, l) -
                           std::int64_t(m.at(i, l)) * m.at(j, k);
          out.set(row, col, d);
        }
    }
  return out;
}

bool column_space_equal(const FpMatrix& a, const FpMatrix& b) {
  if (a.rows() != b.rows() || a.p() != b.p())
    throw std::invalid_argument("column_space_equal: row count / modulus mismatch");
  // span(A) == span(B)  iff  rank A == rank B == rank [A|B]
  FpMatrix joint(a.p(), a.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) joint.set(r, c, a.at(r, c));
    for (std::size_t c = 0; c < b.cols(); ++c) joint.set(r, a.cols() + c, b.at(r, c));
  }
  std::size_t ra = rank(a), rb = rank(b);
  return ra == rb && rank(std::move(joint)) == ra;
}

FpMatrix row_kernel(const FpMatrix& m) {
  const std::uint32_t p = m.p();
  const std::size_t nr = m.rows(), nc = m.cols();
  // eliminate [M | I]; rows with zero M-part carry the kernel
  FpMatrix aug(p, nr, nc + nr);
  for (std::size_t r = 0; r < nr; ++r) {
    for (std::size_t c = 0; c < nc; ++c) aug.set(r, c, m.at(r, c));
    aug.set(r, nc + r, 1);
  }
  echelonize(aug);
  std::vector<std::vector<std::int64_t>> basis;
  for (std::size_t r = 0; r < nr; ++r) {
    bool zero = true;
    for (std::size_t c = 0; c < nc && zero; ++c) zero = aug.at(r, c) == 0;
    if (!zero) continue;
    std::vector<std::int64_t> row(nr);
    for (std::size_t c = 0; c < nr; ++c) row[c] = aug.at(r, nc + c);
    basis.push_back(std::move(row));
  }
  FpMatrix k = FpMatrix::from_rows(p, basis);
  if (basis.empty()) k = FpMatrix(p, 0, nr);
  return rref(std::move(k));
}

std::size_t pair_rank(std::size_t i, std::size_t j, std::size_t n) {
  if (i >= j || j >= n) throw std::invalid_argument("pair_rank: need i < j < n");
  // pairs (i, i+1..n-1) start after all pairs with smaller first index
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

std::pair<std::size_t, std::size_t> pair_unrank(std::size_t r, std::size_t n) {
  std::size_t i = 0;
  while (r >= n - 1 - i) {
    r -= n - 1 - i;
    ++i;
  }
  return {i, i + 1 + r};
}

}  // namespace wl
