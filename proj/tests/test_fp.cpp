#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support/brute.hpp"
#include "wl/fp.hpp"
#include "wl/hash.hpp"

using namespace wl;
using wl::testing::brute_rank;

namespace {

FpMatrix random_matrix(std::uint32_t p, std::size_t rows, std::size_t cols, Rng& rng) {
  FpMatrix m(p, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rng.below32(p));
  return m;
}

}  // namespace

TEST_CASE("odd prime validation") {
  CHECK(is_odd_prime(3));
  CHECK(is_odd_prime(7919));
  CHECK_FALSE(is_odd_prime(2));
  CHECK_FALSE(is_odd_prime(9));
  CHECK_FALSE(is_odd_prime(1));
  CHECK_THROWS_AS(FpMatrix(2, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(FpScalar(1, 15), std::invalid_argument);
}

TEST_CASE("scalar arithmetic") {
  FpScalar a(5, 7), b(-3, 7);
  CHECK(a.value == 5);
  CHECK(b.value == 4);
  CHECK((a * b).value == 6);
  CHECK((a + b).value == 2);
  CHECK((a - b).value == 1);
  CHECK((a.inv() * a).value == 1);
}

TEST_CASE("rank: small examples against the row-span oracle") {
  FpMatrix zero(3, 3, 4);
  CHECK(rank(zero) == 0);
  CHECK(brute_rank(zero) == 0);

  FpMatrix id = FpMatrix::from_rows(5, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  CHECK(rank(id) == 3);
  CHECK(brute_rank(id) == 3);

  // hand elimination over F_3: (1,2,1),(2,1,0) -> rank 2
  FpMatrix m = FpMatrix::from_rows(3, {{1, 5, 1}, {2, 1, 0}});
  CHECK(rank(m) == 2);
  CHECK(brute_rank(m) == 2);
}

TEST_CASE("rank agrees with the oracle on random matrices") {
  Rng rng(2024);
  for (std::uint32_t p : {3u, 5u}) {
    for (int trial = 0; trial < 40; ++trial) {
      std::size_t rows = 1 + rng.below(5), cols = 1 + rng.below(6);
      FpMatrix m = random_matrix(p, rows, cols, rng);
      CHECK(rank(m) == brute_rank(m));
    }
  }
}

TEST_CASE("wedge: worked 2x3 example") {
  FpMatrix b1 = FpMatrix::from_rows(7, {{1, 5, 1}, {2, 1, 0}});
  FpMatrix b2 = wedge(b1);
  REQUIRE(b2.rows() == 1);
  REQUIRE(b2.cols() == 3);
  // (-9, -2, -1) reduced mod 7
  CHECK(b2.at(0, 0) == fp_reduce(-9, 7));
  CHECK(b2.at(0, 1) == fp_reduce(-2, 7));
  CHECK(b2.at(0, 2) == fp_reduce(-1, 7));
}

TEST_CASE("wedge: identity and dimension errors") {
  FpMatrix id2 = FpMatrix::from_rows(3, {{1, 0}, {0, 1}});
  FpMatrix w = wedge(id2);
  REQUIRE(w.rows() == 1);
  REQUIRE(w.cols() == 1);
  CHECK(w.at(0, 0) == 1);

  FpMatrix row(3, 1, 4);
  CHECK_THROWS_AS(wedge(row), std::invalid_argument);
  FpMatrix col(3, 4, 1);
  CHECK_THROWS_AS(wedge(col), std::invalid_argument);
}

TEST_CASE("wedge of a rank-3 4x6 matrix has rank 3") {
  // built as a product to force rank exactly 3
  Rng rng(99);
  for (int attempt = 0;; ++attempt) {
    FpMatrix a = random_matrix(3, 4, 3, rng);
    FpMatrix b = random_matrix(3, 3, 6, rng);
    FpMatrix m(3, 4, 6);
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = 0; c < 6; ++c) {
        std::int64_t s = 0;
        for (std::size_t t = 0; t < 3; ++t) s += std::int64_t(a.at(r, t)) * b.at(t, c);
        m.set(r, c, s);
      }
    if (rank(m) != 3) continue;
    CHECK(rank(wedge(m)) == 3);  // C(3,2) = 3
    break;
  }
}

TEST_CASE("rank of the exterior square is C(rank, 2)") {
  Rng rng(7);
  for (std::uint32_t p : {3u, 5u, 7u}) {
    for (int trial = 0; trial < 500; ++trial) {
      std::size_t rows = 2 + rng.below(7), cols = 2 + rng.below(11);
      FpMatrix m = random_matrix(p, rows, cols, rng);
      std::size_t r = rank(m);
      CHECK(rank(wedge(m)) == choose2(r));
    }
  }
}

TEST_CASE("column space equality") {
  FpMatrix a = FpMatrix::from_rows(3, {{1, 0}, {0, 1}});
  CHECK(column_space_equal(a, a));

  FpMatrix scaled = FpMatrix::from_rows(3, {{2, 0}, {0, 2}});
  CHECK(column_space_equal(a, scaled));

  FpMatrix e1 = FpMatrix::from_rows(3, {{1}, {0}});
  FpMatrix e2 = FpMatrix::from_rows(3, {{0}, {1}});
  CHECK_FALSE(column_space_equal(e1, e2));

  FpMatrix bad(3, 3, 1);
  CHECK_THROWS_AS(column_space_equal(e1, bad), std::invalid_argument);
}

TEST_CASE("row kernel: forced dependencies and canonical form") {
  FpMatrix id = FpMatrix::from_rows(5, {{1, 0}, {0, 1}});
  CHECK(row_kernel(id).rows() == 0);

  FpMatrix twice = FpMatrix::from_rows(5, {{1, 2, 3}, {1, 2, 3}});
  FpMatrix k = row_kernel(twice);
  REQUIRE(k.rows() == 1);
  CHECK(k.at(0, 0) == 1);
  CHECK(k.at(0, 1) == 4);  // (1, -1) mod 5
}

TEST_CASE("row kernel is canonical: column operations leave it untouched") {
  Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    FpMatrix m = random_matrix(5, 4, 5, rng);
    FpMatrix k = row_kernel(m);
    CHECK(rref(k) == k);  // already in canonical form
    // invertible column operations preserve the row dependencies exactly
    FpMatrix shuffled = m;
    for (int ops = 0; ops < 12; ++ops) {
      std::size_t c1 = rng.below(5), c2 = rng.below(5);
      if (c1 == c2) {
        shuffled.negate_column(c1);
        continue;
      }
      std::uint32_t f = rng.below32(5);
      for (std::size_t r = 0; r < 4; ++r)
        shuffled.set(r, c1, std::int64_t(shuffled.at(r, c1)) + std::int64_t(f) * shuffled.at(r, c2));
    }
    CHECK(row_kernel(shuffled) == k);
  }
}

TEST_CASE("kernel dimension matches rank-nullity on wedge matrices") {
  Rng rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    FpMatrix b1 = random_matrix(3, 3, 6, rng);
    FpMatrix b2 = wedge(b1);
    CHECK(row_kernel(b2).rows() == choose2(3) - rank(b2));
  }
}

TEST_CASE("rank is invariant under row and column permutations") {
  Rng rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    FpMatrix m = random_matrix(7, 4, 6, rng);
    FpMatrix shuffled = m;
    for (int s = 0; s < 6; ++s) {
      shuffled.swap_columns(rng.below(6), rng.below(6));
    }
    // swap two rows by rebuilding
    std::vector<std::vector<std::int64_t>> rows(4, std::vector<std::int64_t>(6));
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = 0; c < 6; ++c) rows[r][c] = shuffled.at(r, c);
    std::swap(rows[rng.below(4)], rows[rng.below(4)]);
    CHECK(rank(FpMatrix::from_rows(7, rows)) == rank(m));
  }
}

TEST_CASE("pair ranking round-trips") {
  for (std::size_t n : {2u, 5u, 9u}) {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j, ++idx) {
        CHECK(pair_rank(i, j, n) == idx);
        CHECK(pair_unrank(idx, n) == std::make_pair(i, j));
      }
  }
}
