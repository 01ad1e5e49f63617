#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "qrep/fpmatrix.hpp"

using namespace qrep;

namespace {

Matrix random_matrix(std::mt19937_64& rng, u32 rows, u32 cols, u32 p) {
  Matrix m(rows, cols, p);
  std::uniform_int_distribution<u32> d(0, p - 1);
  for (u32 i = 0; i < rows; ++i)
    for (u32 j = 0; j < cols; ++j) m.at(i, j) = d(rng);
  return m;
}

}  // namespace

TEST_CASE("scalar arithmetic mod p") {
  const u32 p = 101;
  CHECK(fp_add(100, 1, p) == 0);
  CHECK(fp_sub(0, 1, p) == 100);
  CHECK(fp_mul(10, 21, p) == 210 % 101);
  CHECK(fp_pow(2, 100, p) == 1);  // Fermat
  for (u32 a = 1; a < p; ++a) CHECK(fp_mul(a, fp_inv(a, p), p) == 1);
  CHECK_THROWS_AS(fp_inv(0, p), std::domain_error);
}

TEST_CASE("rref of a rank-1 matrix") {
  Matrix m = Matrix::from_rows({{1, 2}, {2, 4}}, 101);
  RrefResult rr = rref(m);
  CHECK(rr.rank == 1);
  CHECK(rr.pivots == std::vector<u32>{0});
  CHECK(rr.reduced == Matrix::from_rows({{1, 2}, {0, 0}}, 101));
  Matrix k = kernel_basis(m);
  REQUIRE(k.cols() == 1);
  CHECK(k.column_vec(0) == std::vector<u32>{99, 1});  // x0 = -2, x1 = 1
}

TEST_CASE("rref is idempotent and rank is transpose-invariant") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 50; ++trial) {
    u32 rows = 1 + static_cast<u32>(rng() % 7);
    u32 cols = 1 + static_cast<u32>(rng() % 7);
    Matrix m = random_matrix(rng, rows, cols, 101);
    RrefResult rr = rref(m);
    CHECK(rref(rr.reduced).reduced == rr.reduced);
    CHECK(rank(m) == rank(m.transpose()));
    CHECK(m.cols() == rr.rank + kernel_basis(m).cols());
    Matrix k = kernel_basis(m);
    if (k.cols()) CHECK((m * k).is_zero());
  }
}

TEST_CASE("solve round trip and inconsistency") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    u32 rows = 1 + static_cast<u32>(rng() % 6);
    u32 cols = 1 + static_cast<u32>(rng() % 6);
    Matrix m = random_matrix(rng, rows, cols, 101);
    std::vector<u32> x(cols);
    for (auto& v : x) v = static_cast<u32>(rng() % 101);
    auto sol = solve(m, m.apply(x));
    REQUIRE(sol.has_value());
    CHECK(m.apply(*sol) == m.apply(x));
  }
  Matrix m = Matrix::from_rows({{1, 0}, {0, 0}}, 101);
  CHECK_FALSE(solve(m, {0, 1}).has_value());
  CHECK(solve(m, {5, 0}).has_value());
}

TEST_CASE("quotient by a line in the plane") {
  Matrix sub(2, 1, 101);
  sub.at(0, 0) = 1;
  sub.at(1, 0) = 1;
  QuotientBasis q = quotient_basis(sub, 2);
  REQUIRE(q.projection.rows() == 1);
  CHECK(q.projection == Matrix::from_rows({{100, 1}}, 101));
  CHECK(q.coset_reps == Matrix::from_rows({{0}, {1}}, 101));
  CHECK((q.projection * sub).is_zero());
  CHECK(q.projection * q.coset_reps == Matrix::identity(1, 101));
}

TEST_CASE("quotient basis properties") {
  std::mt19937_64 rng(12345);
  for (int trial = 0; trial < 50; ++trial) {
    u32 ambient = 1 + static_cast<u32>(rng() % 8);
    u32 gens = static_cast<u32>(rng() % (ambient + 2));
    Matrix sub = gens ? random_matrix(rng, ambient, gens, 101) : Matrix(ambient, 0, 101);
    QuotientBasis q = quotient_basis(sub, ambient);
    u32 r = rank(sub);
    CHECK(q.projection.rows() == ambient - r);
    if (gens) CHECK((q.projection * sub).is_zero());
    CHECK(q.projection * q.coset_reps == Matrix::identity(ambient - r, 101));
  }
}

TEST_CASE("inverse and column space") {
  Matrix m = Matrix::from_rows({{2, 1}, {1, 1}}, 101);
  REQUIRE(is_invertible(m));
  CHECK(m * inverse(m) == Matrix::identity(2, 101));
  Matrix s = Matrix::from_rows({{1, 2, 3}, {2, 4, 6}}, 101);
  Matrix b = column_space_basis(s);
  CHECK(b.cols() == 1);
  CHECK(b.column_vec(0) == std::vector<u32>{1, 2});
}
