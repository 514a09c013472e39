#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "orthosum/error.hpp"
#include "orthosum/field.hpp"

using namespace orthosum;

namespace {

std::vector<long long> desk_orders() { return {3, 5, 7, 9, 11, 13, 25, 27}; }

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::BadShape;
}

}  // namespace

TEST_CASE("construction and modulus") {
  const Field f3 = Field::make(3, 1);
  CHECK(f3.q() == 3);
  CHECK(std::vector<std::uint32_t>(f3.modulus().begin(), f3.modulus().end()) == std::vector<std::uint32_t>{0, 1});

  const Field f9 = Field::make(3, 2);
  CHECK(f9.q() == 9);
  CHECK(std::vector<std::uint32_t>(f9.modulus().begin(), f9.modulus().end()) == std::vector<std::uint32_t>{1, 0, 1});
  CHECK(is_irreducible(f9.modulus(), 3));

  for (long long q : {25LL, 27LL, 49LL, 81LL, 125LL, 243LL}) {
    const Field f = Field::of_order(q);
    CHECK(f.q() == q);
    CHECK(is_irreducible(f.modulus(), f.p()));
  }
  CHECK(Field::of_order(9) == Field::make(3, 2));
}

TEST_CASE("construction errors") {
  CHECK(code_of([] { Field::make(2, 1); }) == ErrorCode::EvenCharacteristic);
  CHECK(code_of([] { Field::of_order(4); }) == ErrorCode::EvenCharacteristic);
  CHECK(code_of([] { Field::make(9, 1); }) == ErrorCode::NonPrime);
  CHECK(code_of([] { Field::of_order(15); }) == ErrorCode::NonPrime);
  CHECK(code_of([] { Field::make(3, 0); }) == ErrorCode::BadDegree);
  CHECK(code_of([] { Field::of_order(10007); }) == ErrorCode::FieldTooLarge);
  CHECK(code_of([] { Field::make(5, 1).inv(Elem{0}); }) == ErrorCode::DivideByZero);
}

TEST_CASE("arithmetic examples") {
  const Field f5 = Field::of_order(5);
  CHECK(f5.inv(f5.from_int(2)) == f5.from_int(3));
  const Field f7 = Field::of_order(7);
  CHECK(f7.pow(f7.from_int(3), 6) == f7.one());
  CHECK(f7.pow(f7.from_int(3), -1) == f7.inv(f7.from_int(3)));

  const Field f9 = Field::of_order(9);
  const long long x_coeffs[] = {0, 1};
  const Elem x = f9.from_coeffs(x_coeffs);
  CHECK(f9.mul(x, x) == f9.from_int(2));
  CHECK(f9.coeffs(f9.mul(x, x)) == std::vector<std::uint32_t>{2, 0});
}

TEST_CASE("field axioms hold exhaustively") {
  for (long long q : desk_orders()) {
    const Field f = Field::of_order(q);
    for (std::uint32_t a = 0; a < f.q(); ++a) {
      const Elem ea{a};
      CHECK(f.add(ea, f.neg(ea)) == f.zero());
      if (a != 0) CHECK(f.mul(ea, f.inv(ea)) == f.one());
      for (std::uint32_t b = 0; b < f.q(); ++b) {
        const Elem eb{b};
        REQUIRE(f.add(ea, eb) == f.add(eb, ea));
        REQUIRE(f.mul(ea, eb) == f.mul(eb, ea));
        const Elem c{(a * 7 + b * 3) % f.q()};
        REQUIRE(f.mul(ea, f.add(eb, c)) == f.add(f.mul(ea, eb), f.mul(ea, c)));
        REQUIRE(f.mul(f.mul(ea, eb), c) == f.mul(ea, f.mul(eb, c)));
      }
    }
  }
}

TEST_CASE("legendre symbol") {
  const Field f5 = Field::of_order(5);
  CHECK(f5.legendre(f5.from_int(4)) == Legendre::Residue);
  CHECK(f5.legendre(f5.from_int(2)) == Legendre::NonResidue);
  CHECK(f5.legendre(f5.zero()) == Legendre::Zero);
  const Field f9 = Field::of_order(9);
  CHECK(f9.legendre(f9.neg(f9.one())) == Legendre::Residue);

  for (long long q : desk_orders()) {
    const Field f = Field::of_order(q);
    int residues = 0;
    for (std::uint32_t a = 1; a < f.q(); ++a) {
      const Elem ea{a};
      CHECK(f.legendre(f.sqr(ea)) == Legendre::Residue);
      if (f.legendre(ea) == Legendre::Residue) ++residues;
      for (std::uint32_t b = 1; b < f.q(); ++b) {
        const Elem eb{b};
        REQUIRE(to_int(f.legendre(ea)) * to_int(f.legendre(eb)) == to_int(f.legendre(f.mul(ea, eb))));
      }
    }
    CHECK(residues == static_cast<int>((f.q() - 1) / 2));
  }
}

TEST_CASE("square roots") {
  const Field f7 = Field::of_order(7);
  CHECK(f7.sqrt(f7.from_int(2)) == std::vector<Elem>{f7.from_int(3), f7.from_int(4)});
  const Field f5 = Field::of_order(5);
  CHECK(f5.sqrt(f5.zero()) == std::vector<Elem>{f5.zero()});
  CHECK(f5.sqrt(f5.from_int(2)).empty());

  for (long long q : desk_orders()) {
    const Field f = Field::of_order(q);
    for (std::uint32_t a = 0; a < f.q(); ++a) {
      const Elem ea{a};
      const auto roots = f.sqrt(ea);
      CHECK(roots.size() == static_cast<std::size_t>(to_int(f.legendre(ea)) + 1));
      for (Elem r : roots) CHECK(f.sqr(r) == ea);
      CHECK(std::is_sorted(roots.begin(), roots.end()));
    }
  }
}

TEST_CASE("i is a square root of -1 exactly when q = 1 mod 4") {
  for (long long q : desk_orders()) {
    const Field f = Field::of_order(q);
    CHECK(f.has_i() == (q % 4 == 1));
    if (f.has_i()) CHECK(f.sqr(f.i()) == f.neg(f.one()));
  }
}

TEST_CASE("trace") {
  const Field f3 = Field::of_order(3);
  CHECK(f3.trace(f3.from_int(2)) == 2);
  const Field f9 = Field::of_order(9);
  CHECK(f9.trace(f9.one()) == 2);
  const long long x_coeffs[] = {0, 1};
  CHECK(f9.trace(f9.from_coeffs(x_coeffs)) == 0);

  for (long long q : desk_orders()) {
    const Field f = Field::of_order(q);
    std::vector<int> hits(f.p(), 0);
    for (std::uint32_t a = 0; a < f.q(); ++a) {
      ++hits[f.trace(Elem{a})];
      for (std::uint32_t b = 0; b < f.q(); b += 3) {
        REQUIRE(f.trace(f.add(Elem{a}, Elem{b})) == (f.trace(Elem{a}) + f.trace(Elem{b})) % f.p());
      }
    }
    for (int h : hits) CHECK(h == static_cast<int>(f.q() / f.p()));
  }
}

TEST_CASE("additive character") {
  const Field f5 = Field::of_order(5);
  CHECK(std::abs(f5.character(f5.zero()) - std::complex<double>(1.0, 0.0)) < 1e-12);
  CHECK(std::abs(f5.character(f5.one()) - std::polar(1.0, 2.0 * std::numbers::pi / 5.0)) < 1e-12);

  for (long long q : desk_orders()) {
    const Field f = Field::of_order(q);
    for (std::uint32_t a = 0; a < f.q(); ++a) {
      std::complex<double> acc{0.0, 0.0};
      for (std::uint32_t x = 0; x < f.q(); ++x) acc += f.character(f.mul(Elem{a}, Elem{x}));
      const double expected = a == 0 ? static_cast<double>(q) : 0.0;
      CHECK(std::abs(acc - std::complex<double>(expected, 0.0)) < 1e-9);
    }
    for (std::uint32_t a = 0; a < f.q(); ++a) {
      if (f.trace(Elem{a}) == 0) CHECK(std::abs(f.character(Elem{a}) - 1.0) < 1e-12);
    }
  }
}

TEST_CASE("prime power listing") {
  CHECK(odd_prime_powers(3, 30) == std::vector<std::uint32_t>{3, 5, 7, 9, 11, 13, 17, 19, 23, 25, 27, 29});
  CHECK(is_prime(73));
  CHECK_FALSE(is_prime(91));
}
