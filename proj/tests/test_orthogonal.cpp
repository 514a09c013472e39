#include <doctest.h>

#include <random>

#include "frozen_values.hpp"
#include "orthosum/error.hpp"
#include "orthosum/oracle.hpp"
#include "orthosum/orthogonal.hpp"
#include "orthosum/vector_geometry.hpp"
#include "support.hpp"

using namespace orthosum;
using testing_support::mat2;
using testing_support::vec;

TEST_CASE("orthogonality") {
  const Field f5 = Field::of_order(5);
  CHECK(is_orthogonal(f5, FqMatrix::identity(f5, 3)));
  CHECK(is_orthogonal(f5, mat2(f5, 0, 1, 1, 0)));
  CHECK_FALSE(is_orthogonal(f5, mat2(f5, 2, 0, 0, 1)));
  CHECK_THROWS_AS(OrthogonalMatrix(f5, mat2(f5, 2, 0, 0, 1)), Error);
}

TEST_CASE("O(2) enumeration") {
  CHECK(enumerate_o2(Field::of_order(5)).size() == 8);
  CHECK(enumerate_o2(Field::of_order(3)).size() == 8);
  CHECK(enumerate_o2(Field::of_order(7)).size() == 16);
  for (auto q : odd_prime_powers(3, 27)) {
    const Field f = Field::of_order(q);
    const auto o2 = enumerate_o2(f);
    CHECK(o2.size() == 2 * sphere_count(f, f.one(), 2));
    // Matches the closure of reflections.
    const auto group = generate_orthogonal_group(f, 2);
    CHECK(group.size() == o2.size());
  }
}

TEST_CASE("reflections") {
  const Field f5 = Field::of_order(5);
  const auto r1 = reflection(f5, vec(f5, {1, 0, 0}));
  FqMatrix expected = FqMatrix::identity(f5, 3);
  expected.at(0, 0) = f5.neg(f5.one());
  CHECK(r1.matrix() == expected);
  CHECK(reflection(f5, vec(f5, {1, 1})).matrix() == mat2(f5, 0, -1, -1, 0));
  CHECK_THROWS_AS(reflection(f5, vec(f5, {1, 2})), Error);

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const FqVector w = testing_support::random_vector(f5, 3, rng);
    if (norm(f5, w).v == 0) continue;
    const FqMatrix r = reflection(f5, w).matrix();
    CHECK(la::mul(f5, r, r) == FqMatrix::identity(f5, 3));
  }
}

TEST_CASE("Witt map") {
  const Field f5 = Field::of_order(5);
  const auto e1 = vec(f5, {1, 0}), e2 = vec(f5, {0, 1});
  CHECK(witt_map(f5, e1, e1).matrix() == FqMatrix::identity(f5, 2));
  CHECK(la::apply(f5, witt_map(f5, e1, e2).matrix(), e1) == e2);
  CHECK(witt_map(f5, vec(f5, {1, 2}), vec(f5, {2, 1})).matrix() == mat2(f5, 0, 1, 1, 0));
  CHECK_THROWS_AS(witt_map(f5, e1, vec(f5, {1, 1})), Error);
  CHECK_THROWS_AS(witt_map(f5, vec(f5, {0, 0}), vec(f5, {0, 0})), Error);

  // Every pair of equal-length nonzero vectors, including isotropic pairs
  // that need the intermediate route.
  for (long long q : {3, 5, 9, 13}) {
    const Field f = Field::of_order(q);
    for (int d : {2, 3}) {
      if (q == 13 && d == 3) continue;
      const std::uint64_t size = la::ambient_size(f, d, 10'000'000);
      for (std::uint64_t i = 1; i < size; ++i) {
        const FqVector u = la::vector_at(f, i, d);
        for (std::uint64_t j = 1; j < size; j += (d == 3 ? 7 : 1)) {
          const FqVector v = la::vector_at(f, j, d);
          if (norm(f, u) != norm(f, v)) continue;
          const FqMatrix w = witt_map(f, u, v).matrix();
          REQUIRE(is_orthogonal(f, w));
          REQUIRE(la::apply(f, w, u) == v);
        }
      }
    }
  }
}

TEST_CASE("exact counts") {
  CHECK(orth_sum_count(Field::of_order(5), 2) == 8);
  CHECK(orth_sum_count(Field::of_order(7), 2) == 6);
  CHECK(orth_sum_count(Field::of_order(5), 3) == 48);
  CHECK(orth_sum_count(Field::of_order(3), 3) == 54);
  CHECK(orth_sum_count(Field::of_order(3), 4) == 324);
  CHECK(orth_sum_count(Field::of_order(9), 5) == 8 * 216);
}

TEST_CASE("first column split") {
  const Field f5 = Field::of_order(5);
  FqMatrix a(3);
  a.at(0, 0) = f5.from_int(2);
  a.at(1, 1) = f5.from_int(3);
  const auto parts = first_col_unit_split(f5, a);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].column(0) == vec(f5, {1, 0, 0}));
  CHECK(parts[1].column(0) == vec(f5, {1, 0, 0}));
  CHECK(la::sum(f5, parts, 3) == a);

  const auto zero_parts = first_col_unit_split(f5, FqMatrix(3));
  CHECK(zero_parts[0].column(0) == vec(f5, {1, 0, 0}));
  CHECK(zero_parts[1].column(0) == vec(f5, {-1, 0, 0}));

  const Field f7 = Field::of_order(7);
  FqMatrix iso(3);
  iso.set_column(0, vec(f7, {1, 2, 3}));  // 1 + 4 + 9 = 0 mod 7
  const auto iso_parts = first_col_unit_split(f7, iso);
  CHECK((iso_parts.size() == 2 || iso_parts.size() == 3));
  CHECK(la::sum(f7, iso_parts, 3) == iso);
  for (const auto& p : iso_parts) CHECK(norm(f7, p.column(0)) == f7.one());
}

TEST_CASE("2x2 decompositions are exact for every matrix") {
  const Field f5 = Field::of_order(5);
  const auto zero = decompose_2x2(f5, FqMatrix(2));
  CHECK(zero.parts.size() == 8);
  CHECK(zero.verify(f5));

  const FqMatrix hard = mat2(f5, 1, 0, 1, 0);
  const auto dec = decompose_2x2(f5, hard);
  CHECK(dec.parts.size() == 8);
  CHECK(dec.verify(f5));
  CHECK(oracle::min_orth_sum(f5, hard) == frozen::kDistE1E1RowsQ5);

  for (long long q : {3, 5, 7, 9, 11, 13}) {
    const Field f = Field::of_order(q);
    const std::uint64_t expected = q % 4 == 1 ? 8 : 6;
    for (std::uint64_t idx = 0; idx < la::ambient_size(f, 4, 10'000'000); ++idx) {
      const auto d = decompose_2x2(f, la::matrix_at(f, idx, 2));
      REQUIRE(d.parts.size() == expected);
      REQUIRE(d.verify(f));
    }
  }
}

TEST_CASE("d x d decompositions") {
  const Field f3 = Field::of_order(3);
  const auto zero = decompose_dxd(f3, FqMatrix(3));
  CHECK(zero.parts.size() == 54);
  CHECK(zero.verify(f3));

  const Field f5 = Field::of_order(5);
  const auto id = decompose_dxd(f5, FqMatrix::identity(f5, 3));
  CHECK(id.parts.size() == 48);
  CHECK(id.verify(f5));

  std::mt19937_64 rng(17);
  const auto a4 = testing_support::random_matrix(f3, 4, rng);
  const auto d4 = decompose_orthogonal(f3, a4);
  CHECK(d4.parts.size() == 324);
  CHECK(d4.verify(f3));

  for (long long q : {3, 5, 7, 9, 11, 13}) {
    const Field f = Field::of_order(q);
    for (int trial = 0; trial < 20; ++trial) {
      const auto a = testing_support::random_matrix(f, 3, rng);
      const auto d = decompose_orthogonal(f, a);
      REQUIRE(d.parts.size() == orth_sum_count(f, 3));
      REQUIRE(d.verify(f));
    }
  }
  CHECK_THROWS_AS(decompose_dxd(f5, FqMatrix(2)), Error);
}

TEST_CASE("equivalent matrices have equal oracle minima") {
  for (long long q : {3, 5}) {
    const Field f = Field::of_order(q);
    const auto gens = oracle::orthogonal_generators(f, 2);
    const auto map = oracle::sumset_closure(f, gens, 2);
    for (std::uint64_t idx = 0; idx < map.dist.size(); ++idx) {
      const FqMatrix a = la::matrix_at(f, idx, 2);
      for (const auto& x : gens) {
        for (const auto& y : gens) {
          REQUIRE(map.at(la::index_of(f, la::mul(f, la::mul(f, x, a), y))) == map.at(idx));
        }
      }
    }
  }
}

TEST_CASE("orthogonal group closure in dimension 3") {
  const Field f3 = Field::of_order(3);
  const auto group = generate_orthogonal_group(f3, 3);
  CHECK(group.size() == 48);
  for (const auto& g : group) CHECK(is_orthogonal(f3, g.matrix()));
}
