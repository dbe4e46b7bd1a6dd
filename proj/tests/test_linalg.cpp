#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "ncreg/linalg.hpp"
#include "ncreg/field.hpp"

using namespace ncreg;

namespace {

template <class K>
SparseMatrix<K> from_rows(const K& field, int cols,
                          std::vector<std::vector<std::int64_t>> rows) {
  SparseMatrix<K> m(static_cast<int>(rows.size()), cols);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (int j = 0; j < cols; ++j)
      if (rows[i][j] != 0)
        m.add(static_cast<int>(i), j, field.from_long(rows[i][j]));
  m.finalize(field);
  return m;
}

template <class K>
SparseMatrix<K> random_matrix(const K& field, std::mt19937_64& rng, int r,
                              int c) {
  SparseMatrix<K> m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j)
      if (rng() % 3 == 0)
        m.add(i, j, field.from_long(static_cast<std::int64_t>(rng() % 11) - 5));
  m.finalize(field);
  return m;
}

}  // namespace

TEST_CASE("rref basics") {
  Rationals Q;
  auto id3 = from_rows(Q, 3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  auto r = rref(Q, id3);
  REQUIRE(r.rank == 3);
  REQUIRE(r.pivot_cols == std::vector<int>{0, 1, 2});

  PrimeField F5(5);
  auto m = from_rows(F5, 2, {{2, 4}, {1, 2}});  // row2 = 3*row1 mod 5
  auto r5 = rref(F5, m);
  REQUIRE(r5.rank == 1);
  REQUIRE(r5.pivot_cols == std::vector<int>{0});
  REQUIRE(r5.rref.get(F5, 0, 0) == 1);
  REQUIRE(r5.rref.get(F5, 0, 1) == 2);

  auto zero = from_rows(Q, 4, {{0, 0, 0, 0}, {0, 0, 0, 0}});
  REQUIRE(rref(Q, zero).rank == 0);
}

TEST_CASE("kernel basis is canonical") {
  Rationals Q;
  auto id2 = from_rows(Q, 2, {{1, 0}, {0, 1}});
  REQUIRE(kernel_basis(Q, id2).empty());

  auto ones = from_rows(Q, 2, {{1, 1}});
  auto k = kernel_basis(Q, ones);
  REQUIRE(k.size() == 1);
  // free column 1 set to one, pivot column carries -1
  REQUIRE(k[0].size() == 2);
  REQUIRE(k[0][0] == std::pair<int, Rationals::Elem>(0, Q.from_long(-1)));
  REQUIRE(k[0][1] == std::pair<int, Rationals::Elem>(1, Q.one()));

  PrimeField F7(7);
  auto row = from_rows(F7, 3, {{1, 2, 3}});
  REQUIRE(kernel_basis(F7, row).size() == 2);
}

TEST_CASE("kernel vectors annihilate and count cols - rank") {
  PrimeField F(32003);
  std::mt19937_64 rng(11);
  for (int it = 0; it < 50; ++it) {
    int r = 1 + static_cast<int>(rng() % 6);
    int c = 1 + static_cast<int>(rng() % 6);
    auto m = random_matrix(F, rng, r, c);
    auto rk = rank(F, m);
    auto kern = kernel_basis(F, m);
    REQUIRE(static_cast<int>(kern.size()) == c - rk);
    for (const auto& v : kern) REQUIRE(matvec(F, m, v).empty());
    // independence: the kernel matrix has full rank
    SparseMatrix<PrimeField> km(static_cast<int>(kern.size()), c);
    for (std::size_t i = 0; i < kern.size(); ++i)
      km.set_row(static_cast<int>(i), kern[i]);
    REQUIRE(rank(F, km) == static_cast<int>(kern.size()));
    // rank of the transpose agrees
    REQUIRE(rank(F, m.transposed()) == rk);
  }
}

TEST_CASE("rref is idempotent") {
  Rationals Q;
  std::mt19937_64 rng(13);
  for (int it = 0; it < 20; ++it) {
    auto m = random_matrix(Q, rng, 5, 7);
    auto r1 = rref(Q, m);
    auto r2 = rref(Q, r1.rref);
    REQUIRE(r2.rank == r1.rank);
    REQUIRE(r2.pivot_cols == r1.pivot_cols);
    for (int i = 0; i < r1.rank; ++i)
      REQUIRE(r2.rref.row(i) == r1.rref.row(i));
  }
}

TEST_CASE("rationals do not lose exactness on elimination") {
  Rationals Q;
  // a matrix engineered to produce fractions mid-elimination
  auto m = from_rows(Q, 3, {{2, 3, 5}, {7, 11, 13}, {17, 19, 23}});
  auto r = rref(Q, m);
  REQUIRE(r.rank == 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      REQUIRE(r.rref.get(Q, i, j) == (i == j ? Q.one() : Q.zero()));
}
