#pragma once

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace wl {

/// True iff p is an odd prime. The whole toolkit works over F_p with p >= 3;
/// p = 2 is rejected everywhere because the symbolic group arithmetic needs
/// odd characteristic.
bool is_odd_prime(std::uint32_t p);

/// Throws std::invalid_argument unless is_odd_prime(p).
void require_odd_prime(std::uint32_t p);

/// Residue in [0, p) for a (possibly negative) integer.
inline std::uint32_t fp_reduce(std::int64_t x, std::uint32_t p) {
  std::int64_t r = x % static_cast<std::int64_t>(p);
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

std::uint32_t fp_pow(std::uint32_t base, std::uint64_t e, std::uint32_t p);

/// Multiplicative inverse; x must be nonzero mod p.
std::uint32_t fp_inv(std::uint32_t x, std::uint32_t p);

/// One element of F_p, always stored reduced.
struct FpScalar {
  std::uint32_t value = 0;
  std::uint32_t p = 3;

  FpScalar() = default;
  FpScalar(std::int64_t v, std::uint32_t modulus);

  FpScalar operator+(FpScalar o) const;
  FpScalar operator-(FpScalar o) const;
  FpScalar operator*(FpScalar o) const;
  FpScalar operator-() const;
  FpScalar inv() const;
  bool operator==(const FpScalar&) const = default;
};

/// Vector over F_p; all entries share the modulus.
class FpVector {
 public:
  FpVector() = default;
  FpVector(std::uint32_t p, std::size_t len) : p_(p), v_(len, 0) { require_odd_prime(p); }
  FpVector(std::uint32_t p, std::vector<std::uint32_t> entries)
      : p_(p), v_(std::move(entries)) {
    require_odd_prime(p);
    for (auto& e : v_) e %= p_;
  }

  std::uint32_t p() const { return p_; }
  std::size_t size() const { return v_.size(); }
  std::uint32_t operator[](std::size_t i) const { return v_[i]; }
  void set(std::size_t i, std::int64_t x) { v_[i] = fp_reduce(x, p_); }
  void add_at(std::size_t i, std::int64_t x) { v_[i] = fp_reduce(std::int64_t(v_[i]) + x, p_); }
  const std::vector<std::uint32_t>& data() const { return v_; }
  std::vector<std::uint32_t>& data() { return v_; }
  bool is_zero() const;
  bool operator==(const FpVector&) const = default;

 private:
  std::uint32_t p_ = 3;
  std::vector<std::uint32_t> v_;
};

/// Dense row-major matrix over F_p. All the matrices in this project are
/// small (at most a few hundred rows, ~20k columns), so no sparse storage.
class FpMatrix {
 public:
  FpMatrix() = default;
  FpMatrix(std::uint32_t p, std::size_t rows, std::size_t cols);

  /// Rows given as signed integers, reduced mod p.
  static FpMatrix from_rows(std::uint32_t p,
                            const std::vector<std::vector<std::int64_t>>& rows);

  std::uint32_t p() const { return p_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::uint32_t at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, std::int64_t v) { a_[r * cols_ + c] = fp_reduce(v, p_); }
  void set_row(std::size_t r, const FpVector& v);

  const std::vector<std::uint32_t>& data() const { return a_; }
  std::vector<std::uint32_t>& data() { return a_; }

  void zero_column(std::size_t c);
  void swap_columns(std::size_t c1, std::size_t c2);
  void negate_column(std::size_t c);

  bool operator==(const FpMatrix&) const = default;
  std::string to_string() const;

 private:
  std::uint32_t p_ = 3;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<std::uint32_t> a_;
};

/// Rank of the row space, by Gaussian elimination over F_p.
std::size_t rank(FpMatrix m);

/// Reduced row echelon form (canonical for the row space).
FpMatrix rref(FpMatrix m);

/// Second exterior power: row (i,j) and column (k,l) run over index pairs in
/// lexicographic order, entry = det [[m(i,k), m(i,l)], [m(j,k), m(j,l)]].
/// Requires at least 2 rows and 2 columns.
FpMatrix wedge(const FpMatrix& m);

/// True iff the column spans of a and b coincide. Requires equal row counts.
bool column_space_equal(const FpMatrix& a, const FpMatrix& b);

/// Basis of the left null space {x : x m = 0}, in reduced row echelon form
/// (hence canonical: row-equivalent inputs give identical kernels).
FpMatrix row_kernel(const FpMatrix& m);

/// Lexicographic rank of the pair (i, j), i < j, among all 2-subsets of
/// {0,..,n-1}: (0,1) -> 0, (0,2) -> 1, ..., (n-2,n-1) -> C(n,2)-1.
std::size_t pair_rank(std::size_t i, std::size_t j, std::size_t n);
std::pair<std::size_t, std::size_t> pair_unrank(std::size_t r, std::size_t n);

inline std::size_t choose2(std::size_t n) { return n * (n - 1) / 2; }

}  // namespace wl
