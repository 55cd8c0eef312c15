#include <doctest.h>

#include "boolcd/kernels.hpp"
#include "oracles.hpp"
#include "test_helpers.hpp"

using namespace boolcd;

TEST_CASE("bool_matmul identity and OR idempotence") {
  const auto id = BoolMatrix::from_rows({{1, 0}, {0, 1}});
  const auto col = BoolMatrix::from_rows({{1}, {1}});
  CHECK(bool_matmul(id, col) == col);

  // 1 OR 1 is 1, not 2
  const auto row = BoolMatrix::from_rows({{1, 1}});
  const auto prod = bool_matmul(row, col);
  CHECK(prod.rows() == 1);
  CHECK(prod.cols() == 1);
  CHECK(prod.get(0, 0));
}

TEST_CASE("bool_matmul equals naive triple loop on seeded inputs") {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    const auto l = helpers::random_matrix(seed, 5, 4, 0.4);
    const auto r = helpers::random_matrix(seed + 100, 4, 3, 0.4);
    CHECK(bool_matmul(l, r) == oracles::naive_matmul(l, r));
  }
}

TEST_CASE("bool_matmul rejects dimension mismatch naming both shapes") {
  const auto l = BoolMatrix(2, 3);
  const auto r = BoolMatrix(2, 2);
  CHECK_THROWS_WITH_AS(bool_matmul(l, r), doctest::Contains("2x3"), ShapeError);
}

TEST_CASE("bool_matmul is unchanged by duplicated column/row pair") {
  const auto l = helpers::random_matrix(7, 4, 3, 0.5);
  const auto r = helpers::random_matrix(8, 3, 5, 0.5);
  // append duplicate of l's last column and of r's last row
  BoolMatrix l2(4, 4);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 3; ++j) l2.set(i, j, l.get(i, j));
    l2.set(i, 3, l.get(i, 2));
  }
  BoolMatrix r2(4, 5);
  for (std::size_t j = 0; j < 5; ++j) {
    for (std::size_t i = 0; i < 3; ++i) r2.set(i, j, r.get(i, j));
    r2.set(3, j, r.get(2, j));
  }
  CHECK(bool_matmul(l2, r2) == bool_matmul(l, r));
}

TEST_CASE("bool_kronecker scalar-one identity and trivial shapes") {
  const auto one = BoolMatrix::from_rows({{1}});
  const auto m = helpers::random_matrix(3, 3, 2, 0.5);
  CHECK(bool_kronecker(one, m) == m);

  const auto id = BoolMatrix::from_rows({{1, 0}, {0, 1}});
  CHECK(bool_kronecker(id, one) == id);
}

TEST_CASE("bool_kronecker equals quadruple-loop oracle") {
  for (std::uint64_t seed = 11; seed <= 14; ++seed) {
    const auto l = helpers::random_matrix(seed, 2, 2, 0.5);
    const auto r = helpers::random_matrix(seed + 50, 3, 2, 0.5);
    CHECK(bool_kronecker(l, r) == oracles::naive_kronecker(l, r));
  }
}

TEST_CASE("unfold places single cell and all-ones correctly") {
  BoolTensor3 x(2, 3, 4);
  x.set(0, 0, 0, true);
  const auto m1 = unfold(x, Mode::Objects);
  CHECK(m1.rows() == 2);
  CHECK(m1.cols() == 12);
  CHECK(m1.get(0, 0));
  CHECK(m1.ones_count() == 1);

  BoolTensor3 ones(2, 2, 2);
  for (std::size_t o = 0; o < 2; ++o)
    for (std::size_t f = 0; f < 2; ++f)
      for (std::size_t t = 0; t < 2; ++t) ones.set(o, f, t, true);
  const auto m2 = unfold(ones, Mode::Features);
  CHECK(m2.rows() == 2);
  CHECK(m2.cols() == 4);
  CHECK(m2.ones_count() == 8);
}

TEST_CASE("unfold column order matches the stated layout") {
  // cell (o,f,t) lands at the documented column for each mode
  BoolTensor3 x(3, 4, 5);
  x.set(2, 3, 4, true);
  CHECK(unfold(x, Mode::Objects).get(2, 3 + 4 * 4));
  CHECK(unfold(x, Mode::Features).get(3, 2 + 4 * 3));
  CHECK(unfold(x, Mode::Time).get(4, 2 + 3 * 3));
}

TEST_CASE("fold round-trips every mode exactly") {
  for (const Mode mode : {Mode::Objects, Mode::Features, Mode::Time}) {
    for (std::uint64_t seed = 21; seed <= 24; ++seed) {
      const auto x = helpers::random_tensor(seed, 3, 2, 4, 0.4);
      CHECK(fold(unfold(x, mode), mode, {3, 2, 4}) == x);
    }
    const auto big = helpers::random_tensor(99, 4, 3, 5, 0.3);
    CHECK(fold(unfold(big, mode), mode, {4, 3, 5}) == big);
  }
}

TEST_CASE("fold trivial cases and shape rejection") {
  const auto single = fold(BoolMatrix::from_rows({{1}}), Mode::Objects, {1, 1, 1});
  CHECK(single.get(0, 0, 0));
  CHECK(single.ones_count() == 1);

  const auto zeros = fold(BoolMatrix(2, 6), Mode::Objects, {2, 3, 2});
  CHECK(zeros.ones_count() == 0);

  CHECK_THROWS_AS(fold(BoolMatrix(2, 5), Mode::Objects, {2, 3, 2}), ShapeError);
}

TEST_CASE("unfold then fold is identity on every cell of small tensors") {
  // exhaustive over all cells: flip one at a time
  for (const Mode mode : {Mode::Objects, Mode::Features, Mode::Time}) {
    BoolTensor3 x(3, 2, 4);
    for (std::size_t o = 0; o < 3; ++o) {
      for (std::size_t f = 0; f < 2; ++f) {
        for (std::size_t t = 0; t < 4; ++t) {
          x.set(o, f, t, true);
          CHECK(fold(unfold(x, mode), mode, {3, 2, 4}) == x);
          x.set(o, f, t, false);
        }
      }
    }
  }
}

TEST_CASE("tucker_reconstruct trivial cases") {
  // all-zero core reconstructs to all zeros
  BoolTensor3 g(2, 2, 2);
  const auto a = helpers::random_matrix(31, 4, 2, 0.6);
  const auto b = helpers::random_matrix(32, 3, 2, 0.6);
  const auto c = helpers::random_matrix(33, 5, 2, 0.6);
  CHECK(tucker_reconstruct(g, a, b, c).ones_count() == 0);

  // single core 1 with all-ones single-column factors gives all ones
  BoolTensor3 g1(1, 1, 1);
  g1.set(0, 0, 0, true);
  const auto ones_col = BoolMatrix::from_rows({{1}, {1}, {1}});
  const auto xhat = tucker_reconstruct(g1, ones_col, ones_col, ones_col);
  CHECK(xhat.ones_count() == 27);
}

TEST_CASE("tucker_reconstruct equals six-nested-loop oracle") {
  for (std::uint64_t seed = 41; seed <= 44; ++seed) {
    const auto g = helpers::random_tensor(seed, 2, 2, 2, 0.5);
    const auto a = helpers::random_matrix(seed + 1, 4, 2, 0.4);
    const auto b = helpers::random_matrix(seed + 2, 3, 2, 0.4);
    const auto c = helpers::random_matrix(seed + 3, 5, 2, 0.4);
    CHECK(tucker_reconstruct(g, a, b, c) == oracles::naive_reconstruct(g, a, b, c));
  }
}

TEST_CASE("tucker_reconstruct rejects rank mismatch") {
  BoolTensor3 g(2, 2, 2);
  CHECK_THROWS_AS(tucker_reconstruct(g, BoolMatrix(4, 3), BoolMatrix(3, 2), BoolMatrix(5, 2)),
                  ShapeError);
}

TEST_CASE("reconstruction is monotone in the core") {
  const auto a = helpers::random_matrix(51, 4, 2, 0.5);
  const auto b = helpers::random_matrix(52, 3, 2, 0.5);
  const auto c = helpers::random_matrix(53, 5, 2, 0.5);
  const auto g1 = helpers::random_tensor(54, 2, 2, 2, 0.3);
  BoolTensor3 g2 = g1;
  g2.set(1, 1, 1, true);
  g2.set(0, 1, 0, true);
  const auto x1 = tucker_reconstruct(g1, a, b, c);
  const auto x2 = tucker_reconstruct(g2, a, b, c);
  for (std::size_t o = 0; o < 4; ++o) {
    for (std::size_t f = 0; f < 3; ++f) {
      for (std::size_t t = 0; t < 5; ++t) {
        CHECK(x1.get(o, f, t) <= x2.get(o, f, t));
      }
    }
  }
}

TEST_CASE("hamming_error examples and symmetry") {
  const auto x = helpers::random_tensor(61, 2, 2, 2, 0.5);
  const auto same = hamming_error(x, x);
  CHECK(same.mismatches == 0);
  CHECK(same.relative == 0.0);

  BoolTensor3 ones(2, 2, 2);
  for (std::size_t o = 0; o < 2; ++o)
    for (std::size_t f = 0; f < 2; ++f)
      for (std::size_t t = 0; t < 2; ++t) ones.set(o, f, t, true);
  const BoolTensor3 zeros(2, 2, 2);
  const auto err = hamming_error(ones, zeros);
  CHECK(err.mismatches == 8);
  CHECK(err.relative == 1.0);

  const auto y = helpers::random_tensor(62, 2, 2, 2, 0.5);
  CHECK(hamming_error(x, y).mismatches == hamming_error(y, x).mismatches);
  CHECK(hamming_error(x, y).mismatches == oracles::naive_mismatches(x, y));

  CHECK_THROWS_AS(hamming_error(x, BoolTensor3(2, 2, 3)), ShapeError);
}

TEST_CASE("density examples") {
  BoolTensor3 zeros(3, 3, 3);
  CHECK(density(zeros) == 0.0);
  BoolTensor3 ones(2, 2, 2);
  for (std::size_t o = 0; o < 2; ++o)
    for (std::size_t f = 0; f < 2; ++f)
      for (std::size_t t = 0; t < 2; ++t) ones.set(o, f, t, true);
  CHECK(density(ones) == 1.0);

  const auto x = helpers::random_tensor(71, 10, 10, 10, 0.3);
  CHECK(density(x) == doctest::Approx(static_cast<double>(x.ones_count()) / 1000.0));

  CHECK_THROWS_AS(density(BoolTensor3(0, 3, 3)), DomainError);
}

TEST_CASE("bit-packed kernels match naive oracles up to 8x8x8") {
  for (std::uint64_t seed = 81; seed <= 83; ++seed) {
    const auto x = helpers::random_tensor(seed, 8, 8, 8, 0.35);
    const auto y = helpers::random_tensor(seed + 10, 8, 8, 8, 0.35);
    CHECK(hamming_error(x, y).mismatches == oracles::naive_mismatches(x, y));
    for (const Mode mode : {Mode::Objects, Mode::Features, Mode::Time}) {
      CHECK(fold(unfold(x, mode), mode, {8, 8, 8}) == x);
    }
    const auto g = helpers::random_tensor(seed + 20, 3, 3, 3, 0.4);
    const auto a = helpers::random_matrix(seed + 21, 8, 3, 0.4);
    const auto b = helpers::random_matrix(seed + 22, 8, 3, 0.4);
    const auto c = helpers::random_matrix(seed + 23, 8, 3, 0.4);
    CHECK(tucker_reconstruct(g, a, b, c) == oracles::naive_reconstruct(g, a, b, c));
  }
}

TEST_CASE("packed row padding stays zero after sets and clears") {
  BoolMatrix m(3, 70);  // spills into a second word per row
  m.set(1, 69, true);
  m.set(1, 69, false);
  m.set(2, 5, true);
  CHECK(m.ones_count() == 1);
  // transpose sees exactly the same cells
  const auto mt = transpose(m);
  CHECK(mt.ones_count() == 1);
  CHECK(mt.get(5, 2));
}

TEST_CASE("empty matrices are valid") {
  const BoolMatrix m0(0, 4);
  const BoolMatrix m1(4, 0);
  CHECK(m0.ones_count() == 0);
  CHECK(m1.ones_count() == 0);
  const auto p = bool_matmul(BoolMatrix(2, 0), BoolMatrix(0, 3));
  CHECK(p.rows() == 2);
  CHECK(p.cols() == 3);
  CHECK(p.ones_count() == 0);
}
