#include <doctest.h>

#include <cmath>

#include "frozen_values.hpp"
#include "orthosum/error.hpp"
#include "orthosum/spectrum.hpp"
#include "orthosum/triangle.hpp"
#include "support.hpp"

using namespace orthosum;
using testing_support::mat2;
using testing_support::vec;

namespace {

bool near(Complex a, Complex b, double tol) { return std::abs(a - b) < tol; }

}  // namespace

TEST_CASE("frozen values at q = 5") {
  const Field f5 = Field::of_order(5);
  const auto o2 = ConnectionSet::o2(f5);
  CHECK(near(cayley_eigenvalue(f5, FqMatrix::identity(f5, 2), o2), frozen::kLambdaIdentityQ5, 1e-9));
  CHECK(near(sphere_fourier(f5, vec(f5, {2, 0}), f5.one()), frozen::kSphereFourier20Q5, 1e-9));
  CHECK(near(kloosterman(f5, f5.one(), f5.one()), frozen::kKloosterman11Q5, 1e-9));

  const auto gap = spectral_gap_param(f5, o2);
  CHECK(gap.max_nontrivial == doctest::Approx(frozen::kMaxNontrivialQ5).epsilon(1e-9));
  CHECK(gap.n_star == doctest::Approx(frozen::kNStarQ5).epsilon(1e-9));
}

TEST_CASE("connection sets") {
  const Field f5 = Field::of_order(5);
  CHECK(ConnectionSet::o2(f5).size() == 8);
  CHECK(ConnectionSet::sl2(f5).size() == 120);
  CHECK(ConnectionSet::gl2(f5).size() == 480);
  CHECK(ConnectionSet::unit_sphere(f5, 3).size() == 30);
  CHECK(ConnectionSet::power_subgroup(f5, 2).size() == 2);
  CHECK(ConnectionSet::o2(f5).flat_dim() == 4);
  CHECK(ConnectionSet::unit_sphere(f5, 3).flat_dim() == 3);
  CHECK(to_string(ConnectionSet::Label::O2) == "O2");
  CHECK_THROWS_AS(ConnectionSet::of_vectors(ConnectionSet::Label::UnitSphere, 2, {vec(f5, {0, 0})}), Error);
}

TEST_CASE("spectrum identities") {
  for (long long q : {3, 5, 7, 9}) {
    const Field f = Field::of_order(q);
    for (const auto& g : {ConnectionSet::o2(f), ConnectionSet::unit_sphere(f, 2), ConnectionSet::unit_sphere(f, 3)}) {
      const auto eig = full_spectrum(f, g);
      CHECK(near(eig[0], static_cast<double>(g.size()), 1e-9));
      Complex total{0.0, 0.0};
      double energy = 0.0;
      for (const auto& l : eig) {
        total += l;
        energy += std::norm(l);
      }
      // 0 is not in G, so the eigenvalues sum to zero; Parseval gives q^k |G|.
      CHECK(std::abs(total) < 1e-6);
      CHECK(energy == doctest::Approx(static_cast<double>(eig.size()) * g.size()).epsilon(1e-9));

      for (std::uint64_t idx = 0; idx < eig.size(); idx += 7) {
        const auto a = flat_coordinates(la::vector_at(f, idx, g.flat_dim()));
        REQUIRE(near(cayley_eigenvalue(f, a, g), eig[idx], 1e-9));
        REQUIRE(eigenfunction_check(f, a, g, 8, idx));
      }
    }
  }
}

TEST_CASE("power subgroups and linear groups") {
  const Field f7 = Field::of_order(7);
  const auto units = ConnectionSet::power_subgroup(f7, 1);
  for (std::uint32_t a = 1; a < 7; ++a) CHECK(near(cayley_eigenvalue(f7, FqVector{Elem{a}}, units), -1.0, 1e-9));
  const auto squares = ConnectionSet::power_subgroup(f7, 2);
  CHECK(squares.size() == 3);
  // Gauss periods for q = 7: (-1 +- i sqrt 7) / 2.
  const auto l1 = cayley_eigenvalue(f7, FqVector{f7.one()}, squares);
  CHECK(l1.real() == doctest::Approx(-0.5));
  CHECK(std::abs(l1.imag()) == doctest::Approx(std::sqrt(7.0) / 2.0));

  const Field f3 = Field::of_order(3);
  const auto gl2 = ConnectionSet::gl2(f3);
  const auto gap = spectral_gap_param(f3, gl2);
  CHECK(gap.max_nontrivial <= gl2.size());
  CHECK(eigenfunction_check(f3, flat_coordinates(mat2(f3, 1, 2, 0, 1)), ConnectionSet::sl2(f3), 16));
}

TEST_CASE("Kloosterman sums") {
  for (long long q : {5, 7, 9, 11, 13, 25}) {
    const Field f = Field::of_order(q);
    for (std::uint32_t a = 1; a < f.q(); ++a) {
      for (std::uint32_t b = 1; b < f.q(); ++b) {
        const auto k = kloosterman(f, Elem{a}, Elem{b});
        REQUIRE(std::abs(k.imag()) < 1e-9);
        REQUIRE(near(k, kloosterman(f, Elem{b}, Elem{a}), 1e-9));
        REQUIRE(std::abs(k) <= 2.0 * std::sqrt(static_cast<double>(q)) + 1e-9);
      }
    }
    CHECK(near(kloosterman(f, f.zero(), f.zero()), static_cast<double>(q - 1), 1e-9));
  }
}

TEST_CASE("closed form agrees with direct summation") {
  for (long long q : {3, 5, 7, 9, 11, 13}) {
    const Field f = Field::of_order(q);
    const auto o2 = ConnectionSet::o2(f);
    for (const auto& inv : enumerate_classes(f)) {
      const auto direct = cayley_eigenvalue(f, class_representative(f, inv), o2);
      REQUIRE(near(o2_eigenvalue_closed_form(f, inv), direct, 1e-6));
    }
  }
  const Field f5 = Field::of_order(5);
  CHECK_THROWS_AS(o2_eigenvalue_closed_form(f5, {f5.one(), f5.one(), f5.one()}), Error);
}

TEST_CASE("rank-one eigenvalues") {
  for (long long q : {5, 7, 9, 13}) {
    const Field f = Field::of_order(q);
    const auto o2 = ConnectionSet::o2(f);
    const double rt = std::sqrt(static_cast<double>(q));
    const double so2 = static_cast<double>(o2.size()) / 2.0;
    for (std::uint32_t a = 0; a < f.q(); ++a) {
      for (std::uint32_t b = 0; b < f.q(); ++b) {
        if (a == 0 && b == 0) continue;
        const Elem ea{a}, eb{b};
        const auto lower = rank_one_eigenvalue_lower(f, ea, eb);
        REQUIRE(near(lower.value, cayley_eigenvalue(f, FqMatrix::of2(f.zero(), f.zero(), ea, eb), o2), 1e-9));
        for (std::uint32_t s = 0; s < f.q(); ++s) {
          const Elem es{s};
          const auto r = rank_one_eigenvalue(f, ea, eb, es);
          const auto m = FqMatrix::of2(ea, eb, f.mul(es, ea), f.mul(es, eb));
          REQUIRE(near(r.value, cayley_eigenvalue(f, m, o2), 1e-9));
          const double bound = r.form_vanishes ? so2 + 2.0 * rt : 4.0 * rt;
          REQUIRE(std::abs(r.value) <= bound + 1e-9);
          if (r.form_vanishes) REQUIRE(r.row_isotropic);
        }
      }
    }
  }
  const Field f5 = Field::of_order(5);
  const auto iso = rank_one_eigenvalue(f5, f5.one(), f5.from_int(2), f5.zero());
  CHECK(iso.row_isotropic);
}

TEST_CASE("bound reports") {
  for (long long q : {3, 5, 7, 9, 11, 13}) {
    const Field f = Field::of_order(q);
    const auto report = bound_report(f);
    CAPTURE(q);
    CHECK(report.all_pass());
    CHECK(report.class_constant);
    CHECK(report.symmetric);
    CHECK(report.closed_forms_match);
    CHECK(report.parseval_relative_error < 1e-9);
    CHECK(report.sum_of_eigenvalues < 1e-6);
    std::size_t nondegenerate = 0;
    for (const auto& e : report.entries) {
      if (e.branch == Branch::Nondegenerate || e.branch == Branch::EqualLengthsOrthogonal) ++nondegenerate;
    }
    CHECK(nondegenerate == count_classes(f.q()));
  }
  CHECK(to_string(Branch::EqualLengthsOrthogonal) == "LL0");
}

TEST_CASE("sphere reports") {
  for (long long q : {3, 5, 7, 9, 11, 13}) {
    const Field f = Field::of_order(q);
    CHECK(sphere_report(f, 2).all_pass());
    CHECK(sphere_report(f, 3).all_pass());
  }
}
