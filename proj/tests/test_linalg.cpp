#include <catch2/catch_amalgamated.hpp>
#include <colorpbw/linalg.hpp>

#include "support/random_support.hpp"

#include <algorithm>
#include <random>

using namespace colorpbw;

TEST_CASE("gauss-jordan inverse on random unit-triangular products") {
  testsupport::Rng rng(1001);
  std::uniform_int_distribution<int> small(-3, 3);
  for (int trial = 0; trial < 50; ++trial) {
    std::size_t n = 1 + trial % 4;
    Matrix l = Matrix::identity(n), u = Matrix::identity(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < i; ++j) {
        l.at(i, j) = Scalar(small(rng));
        u.at(j, i) = Scalar(small(rng));
      }
    Matrix m = l * u;
    CHECK((m * invert(m)).is_identity());
    CHECK((invert(m) * m).is_identity());
  }
  Matrix sing(2, 2);
  sing.at(0, 0) = Scalar(1);
  sing.at(1, 0) = Scalar(2);  // rank 1
  CHECK_THROWS_AS(invert(sing), std::invalid_argument);
}

TEST_CASE("kernel basis spans the kernel in echelon form") {
  // rank-1 map on 3 columns: kernel has dimension 2, echelon unit entries
  Matrix m(2, 3);
  m.at(0, 0) = Scalar(1);
  m.at(0, 1) = Scalar(2);
  m.at(0, 2) = Scalar(3);
  m.at(1, 0) = Scalar(2);
  m.at(1, 1) = Scalar(4);
  m.at(1, 2) = Scalar(6);
  auto ker = kernel_basis(m);
  REQUIRE(ker.size() == 2);
  for (const auto& v : ker) {
    std::vector<Scalar> image = m.apply(v);
    for (const auto& c : image) CHECK(c.is_zero());
  }
  // zero matrix: the kernel basis is the standard basis, in order
  auto full = kernel_basis(Matrix(2, 2));
  REQUIRE(full.size() == 2);
  CHECK(full[0][0].is_one());
  CHECK(full[1][1].is_one());
}

TEST_CASE("canonical rows are an invariant of the row span") {
  testsupport::Rng rng(2002);
  std::uniform_int_distribution<int> val(-4, 4);
  std::uniform_int_distribution<std::size_t> colpick(0, 11);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<SparseRow> rows;
    for (int r = 0; r < 6; ++r) {
      std::map<std::size_t, Scalar> entries;
      for (int k = 0; k < 3; ++k) {
        Scalar v(val(rng));
        if (!v.is_zero()) entries[colpick(rng)] = v;
      }
      rows.emplace_back(entries.begin(), entries.end());
    }
    RowReducer base;
    for (const auto& r : rows) base.add_row(r);

    // shuffle, rescale, and mix in random combinations of other rows
    std::vector<SparseRow> mixed = rows;
    std::shuffle(mixed.begin(), mixed.end(), rng);
    for (auto& r : mixed) {
      Scalar c(val(rng));
      if (c.is_zero()) c = Scalar(1);
      for (auto& [col, v] : r) v *= c;
      const SparseRow& other = rows[colpick(rng) % rows.size()];
      r = sparse_axpy(r, Scalar(val(rng)), other);
    }
    for (const auto& r : rows) mixed.push_back(r);  // keep the span equal
    RowReducer again;
    for (const auto& r : mixed) again.add_row(r);

    CHECK(base.rank() == again.rank());
    CHECK(base.canonical_rows() == again.canonical_rows());
  }
}

TEST_CASE("row reducer counts independent rows exactly") {
  RowReducer red;
  CHECK(red.add_row({{0, Scalar(1)}, {1, Scalar(1)}}));
  CHECK(red.add_row({{1, Scalar(1)}, {2, Scalar(1)}}));
  CHECK_FALSE(red.add_row({{0, Scalar(1)}, {2, Scalar(-1)}}));  // sum of the others
  CHECK(red.rank() == 2);
  // canonical rows have unit leads and zeros at the other pivots
  auto rows = red.canonical_rows();
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].front().first == 0);
  CHECK(rows[1].front().first == 1);
  for (const auto& [col, v] : rows[0]) CHECK((col != 1 || v.is_zero()));
}
