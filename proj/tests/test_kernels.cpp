#include <doctest.h>

#include "orthosum/error.hpp"
#include "orthosum/kernels.hpp"
#include "orthosum/oracle.hpp"
#include "orthosum/orthogonal.hpp"
#include "orthosum/vector_geometry.hpp"

using namespace orthosum;

namespace {

kernels::FlatSet o2_pairing(const Field& f) {
  std::vector<FqMatrix> gens;
  for (const auto& g : enumerate_o2(f)) gens.push_back(g.matrix());
  return oracle::flatten(gens, 2);
}

struct ThreadGuard {
  int saved = kernels::max_threads();
  ~ThreadGuard() { kernels::set_threads(saved); }
};

}  // namespace

TEST_CASE("OpenMP kernels reproduce the serial reference exactly") {
  ThreadGuard guard;
  for (int threads : {1, 2, 4}) {
    kernels::set_threads(threads);
    for (long long q : {3, 5, 9, 13}) {
      const Field f = Field::of_order(q);
      CAPTURE(threads);
      CAPTURE(q);
      for (int d : {1, 2, 3}) {
        for (std::uint32_t t = 0; t < f.q(); ++t) {
          REQUIRE(kernels::serial::sphere_points(f, Elem{t}, d) == kernels::omp::sphere_points(f, Elem{t}, d));
        }
      }

      const auto pairing = o2_pairing(f);
      const auto s = kernels::serial::character_sums(f, pairing);
      const auto o = kernels::omp::character_sums(f, pairing);
      REQUIRE(s.size() == o.size());
      for (std::size_t i = 0; i < s.size(); ++i) REQUIRE(s[i] == o[i]);

      CHECK(kernels::serial::sumset_distances(f, pairing) == kernels::omp::sumset_distances(f, pairing));
      const auto circle = oracle::flatten(sphere(f, f.one(), 2), 2);
      CHECK(kernels::serial::sumset_distances(f, circle) == kernels::omp::sumset_distances(f, circle));

      std::vector<std::uint8_t> layer(f.q() * f.q(), 0);
      layer[1] = layer[f.q() + 2] = 1;
      for (int step = 0; step < 3; ++step) {
        const auto next = kernels::serial::next_layer(f, circle, layer);
        REQUIRE(next == kernels::omp::next_layer(f, circle, layer));
        layer = next;
      }

      CHECK(kernels::serial::realizable_triples(f) == kernels::omp::realizable_triples(f));
    }
  }
}

TEST_CASE("sumset distances obey the BFS layer invariants") {
  const Field f = Field::of_order(7);
  const auto gens = o2_pairing(f);
  const auto dist = kernels::serial::sumset_distances(f, gens);
  std::vector<std::uint32_t> x(4);
  for (std::size_t g = 0; g < gens.size(); ++g) {
    std::uint64_t idx = 0;
    for (int i = 0; i < 4; ++i) idx = idx * f.q() + gens.at(g)[i];
    CHECK(dist[idx] == 1);
  }
  // One generator step increases distance by at most one.
  for (std::uint64_t idx = 0; idx < dist.size(); ++idx) {
    FqMatrix m = la::matrix_at(f, idx, 2);
    for (std::size_t g = 0; g < gens.size(); ++g) {
      FqMatrix step(2);
      for (int i = 0; i < 4; ++i) step.at(i / 2, i % 2) = Elem{gens.at(g)[i]};
      const auto next = la::index_of(f, la::add(f, m, step));
      REQUIRE(dist[next] <= dist[idx] + 1);
    }
  }
}

TEST_CASE("kernels refuse ambient spaces above the guard") {
  const Field f = Field::of_order(13);
  CHECK_THROWS_AS(kernels::serial::sphere_points(f, f.one(), 7), Error);
  CHECK_THROWS_AS(kernels::omp::sphere_points(f, f.one(), 7), Error);
}
