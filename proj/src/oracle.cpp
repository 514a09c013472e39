#include "orthosum/oracle.hpp"

#include <algorithm>
#include <random>

#include "orthosum/error.hpp"
#include "orthosum/orthogonal.hpp"
#include "orthosum/spectrum.hpp"
#include "orthosum/triangle.hpp"
#include "orthosum/vector_geometry.hpp"

namespace orthosum::oracle {

namespace {

constexpr std::uint64_t kAmbientLimit = 10'000'000;

DistanceMap summarize(int k, std::vector<std::int16_t> dist) {
  DistanceMap out;
  out.k = k;
  out.all_reachable = true;
  for (std::uint64_t idx = 0; idx < dist.size(); ++idx) {
    if (dist[idx] == kernels::kUnreached) {
      out.all_reachable = false;
    } else if (dist[idx] > out.diameter) {
      out.diameter = dist[idx];
      out.diameter_witness = idx;
    }
  }
  out.dist = std::move(dist);
  return out;
}

}  // namespace

kernels::FlatSet flatten(const std::vector<FqVector>& gens, int d) {
  kernels::FlatSet s;
  s.k = d;
  for (const auto& v : gens) {
    if (static_cast<int>(v.size()) != d) throw Error(ErrorCode::BadShape, "generator has the wrong dimension");
    for (Elem e : v) s.digits.push_back(e.v);
  }
  return s;
}

kernels::FlatSet flatten(const std::vector<FqMatrix>& gens, int d) {
  kernels::FlatSet s;
  s.k = d * d;
  for (const auto& m : gens) {
    if (m.dim() != d) throw Error(ErrorCode::BadShape, "generator has the wrong dimension");
    for (Elem e : m.entries()) s.digits.push_back(e.v);
  }
  return s;
}

DistanceMap sumset_closure(const Field& f, const kernels::FlatSet& gens) {
  la::ambient_size(f, gens.k, kAmbientLimit);
  return summarize(gens.k, kernels::omp::sumset_distances(f, gens));
}

DistanceMap sumset_closure(const Field& f, const std::vector<FqVector>& gens, int d) {
  return sumset_closure(f, flatten(gens, d));
}

DistanceMap sumset_closure(const Field& f, const std::vector<FqMatrix>& gens, int d) {
  return sumset_closure(f, flatten(gens, d));
}

std::vector<std::uint8_t> k_fold_sumset(const Field& f, const kernels::FlatSet& gens, int m) {
  if (m < 1) throw Error(ErrorCode::BadShape, "sumset order must be positive");
  const std::uint64_t size = la::ambient_size(f, gens.k, kAmbientLimit);
  std::vector<std::uint8_t> layer(size, 0);
  for (std::size_t g = 0; g < gens.size(); ++g) {
    std::uint64_t idx = 0;
    for (int i = 0; i < gens.k; ++i) idx = idx * f.q() + gens.at(g)[i];
    layer[idx] = 1;
  }
  for (int step = 1; step < m; ++step) layer = kernels::omp::next_layer(f, gens, layer);
  return layer;
}

int min_unit_sum(const Field& f, const FqVector& v) {
  const int d = static_cast<int>(v.size());
  const auto map = sumset_closure(f, sphere(f, f.one(), d), d);
  return map.at(la::index_of(f, v));
}

std::vector<FqMatrix> orthogonal_generators(const Field& f, int d) {
  std::vector<FqMatrix> out;
  const auto group = d == 2 ? enumerate_o2(f) : generate_orthogonal_group(f, d);
  out.reserve(group.size());
  for (const auto& g : group) out.push_back(g.matrix());
  return out;
}

int min_orth_sum(const Field& f, const FqMatrix& a) {
  const auto map = sumset_closure(f, orthogonal_generators(f, a.dim()), a.dim());
  return map.at(la::index_of(f, a));
}

std::uint64_t good_lengths_bruteforce(const Field& f) {
  const auto gens = flatten(sphere(f, f.one(), 2), 2);
  const auto two_fold = k_fold_sumset(f, gens, 2);
  std::vector<std::uint8_t> good(f.q(), 1);
  for (std::uint64_t idx = 0; idx < two_fold.size(); ++idx) {
    if (!two_fold[idx]) good[norm(f, la::vector_at(f, idx, 2)).v] = 0;
  }
  return static_cast<std::uint64_t>(std::count(good.begin(), good.end(), 1));
}

bool zero_is_three_unit_sum(const Field& f) {
  // 0 = u1 + u2 + u3 iff some u1 + u2 is itself a unit vector.
  const auto circle = sphere(f, f.one(), 2);
  for (const auto& u1 : circle) {
    for (const auto& u2 : circle) {
      if (norm(f, la::add(f, u1, u2)) == f.one()) return true;
    }
  }
  return false;
}

OrbitCensus congruence_orbits(const Field& f) {
  const std::uint64_t size = la::ambient_size(f, 4, kAmbientLimit);
  const auto o2 = enumerate_o2(f);
  OrbitCensus out;
  out.o2_order = o2.size();
  out.label.assign(size, -1);
  for (std::uint64_t idx = 0; idx < size; ++idx) {
    if (out.label[idx] != -1) continue;
    const FqMatrix a = la::matrix_at(f, idx, 2);
    if (la::det(f, a).v == 0) continue;
    const auto id = static_cast<std::int32_t>(out.orbit_count++);
    for (const auto& g : o2) out.label[la::index_of(f, la::mul(f, g.matrix(), a))] = id;
  }
  out.gl2_order = static_cast<std::uint64_t>(std::count_if(out.label.begin(), out.label.end(), [](std::int32_t l) { return l >= 0; }));
  return out;
}

nlohmann::json LedgerRow::to_json() const {
  return {{"theorem", theorem}, {"q", q}, {"d", d}, {"expected", expected}, {"observed", observed}, {"pass", pass}};
}

namespace {

LedgerRow sphere_row(const Field& f) {
  std::uint64_t matching = 0;
  for (std::uint32_t t = 0; t < f.q(); ++t) {
    if (sphere_count(f, Elem{t}, 2) == sphere_size_formula(f, Elem{t})) ++matching;
  }
  return {"sphere-size", f.q(), 2, f.q(), matching, matching == f.q()};
}

LedgerRow good_lengths_row(const Field& f) {
  const auto expected = good_set_size(f.q());
  const auto observed = good_lengths_bruteforce(f);
  return {"two-unit-lengths", f.q(), 2, expected, observed, expected == observed};
}

LedgerRow zero_three_row(const Field& f) {
  const bool expected = zero_three_units_possible(f.p(), f.n());
  const bool observed = zero_is_three_unit_sum(f);
  return {"zero-three-units", f.q(), 2, expected, observed, expected == observed};
}

LedgerRow unit_sum_row(const Field& f, int d) {
  const std::uint64_t size = la::ambient_size(f, d, kAmbientLimit);
  const auto oracle = sumset_closure(f, sphere(f, f.one(), d), d);
  int max_parts = 0;
  bool ok = true;
  for (std::uint64_t idx = 0; idx < size; ++idx) {
    const FqVector v = la::vector_at(f, idx, d);
    const auto dec = decompose_unit_sum(f, v);
    const int bound = unit_sum_bound(f, d, la::is_zero(v));
    max_parts = std::max(max_parts, dec.count());
    if (!dec.verify(f) || dec.count() > bound || oracle.at(idx) == kernels::kUnreached || oracle.at(idx) > dec.count()) ok = false;
  }
  const int bound = std::max(unit_sum_bound(f, d, false), unit_sum_bound(f, d, true));
  return {"unit-sum", f.q(), d, {{"bound", bound}},
          {{"max_parts", max_parts}, {"oracle_diameter", oracle.diameter}, {"checked", size}}, ok && max_parts <= bound};
}

LedgerRow orth_sum_row(const Field& f, int d, int samples, std::uint64_t seed) {
  const std::uint64_t expected = orth_sum_count(f, d);
  std::uint64_t checked = 0, exact = 0;
  auto check = [&](const FqMatrix& a) {
    ++checked;
    const auto dec = decompose_orthogonal(f, a);
    if (dec.parts.size() == expected && dec.verify(f)) ++exact;
  };
  std::uint64_t size = 0;
  bool full = false;
  try {
    size = la::ambient_size(f, d * d, 20'000);
    full = true;
  } catch (const Error&) {
  }
  if (full) {
    for (std::uint64_t idx = 0; idx < size; ++idx) check(la::matrix_at(f, idx, d));
  } else {
    std::mt19937_64 rng(seed ^ (f.q() * 131 + d));
    std::uniform_int_distribution<std::uint32_t> coord(0, f.q() - 1);
    for (int s = 0; s < samples; ++s) {
      FqMatrix a(d);
      for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) a.at(r, c) = Elem{coord(rng)};
      check(a);
    }
  }
  return {"orth-sum", f.q(), d, expected, {{"checked", checked}, {"exact", exact}, {"exhaustive", full}},
          checked == exact && checked > 0};
}

LedgerRow orth_diameter_row(const Field& f, int d) {
  const auto map = sumset_closure(f, orthogonal_generators(f, d), d);
  const std::uint64_t bound = orth_sum_count(f, d);
  const FqMatrix witness = la::matrix_at(f, map.diameter_witness, d);
  nlohmann::json rows = nlohmann::json::array();
  for (int r = 0; r < d; ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (int c = 0; c < d; ++c) row.push_back(witness.at(r, c).v);
    rows.push_back(row);
  }
  return {"orth-diameter", f.q(), d, {{"at_most", bound}},
          {{"diameter", map.diameter}, {"witness", rows}, {"all_reachable", map.all_reachable}},
          map.all_reachable && static_cast<std::uint64_t>(map.diameter) <= bound};
}

LedgerRow census_row(const Field& f) {
  const auto census = congruence_orbits(f);
  const auto expected = count_classes(f.q());
  return {"triangle-census", f.q(), 2, expected, census.orbit_count, census.orbit_count == expected};
}

LedgerRow classes_row(const Field& f) {
  const auto census = congruence_orbits(f);
  const std::uint64_t expected = census.gl2_order / census.o2_order;
  const std::uint64_t observed = enumerate_classes(f).size();
  return {"triangle-classes", f.q(), 2, expected, observed, expected == observed};
}

LedgerRow spectrum_row(const Field& f) {
  const auto rep = bound_report(f);
  return {"o2-spectrum", f.q(), 2, true,
          {{"all_pass", rep.all_pass()}, {"n_star", rep.gap.n_star}, {"classes", rep.entries.size()}}, rep.all_pass()};
}

LedgerRow walk_row() {
  std::uint64_t checked = 0, holding = 0;
  for (std::uint64_t q : odd_prime_powers(73, 200)) {
    ++checked;
    const std::uint64_t s1 = q % 4 == 1 ? q - 1 : q + 1;
    if (walk_threshold_holds(q, s1)) ++holding;
  }
  return {"walk-threshold", 200, 2, checked, holding, checked == holding};
}

}  // namespace

std::vector<LedgerRow> verify_suite(const SuiteOptions& opts) {
  std::vector<LedgerRow> rows;
  for (std::uint64_t q : opts.qs) {
    const Field f = Field::of_order(static_cast<long long>(q));
    rows.push_back(sphere_row(f));
    rows.push_back(good_lengths_row(f));
    rows.push_back(zero_three_row(f));
    rows.push_back(census_row(f));
    rows.push_back(classes_row(f));
    rows.push_back(spectrum_row(f));
    for (int d : opts.dims) {
      rows.push_back(unit_sum_row(f, d));
      rows.push_back(orth_sum_row(f, d, opts.samples, opts.seed));
      if (d == 2 || (d == 3 && q == 3)) rows.push_back(orth_diameter_row(f, d));
    }
  }
  rows.push_back(walk_row());
  return rows;
}

}  // namespace orthosum::oracle
