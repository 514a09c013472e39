#include <algorithm>
#include <atomic>
#include <complex>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "kernel_common.hpp"
#include "orthosum/kernels.hpp"

namespace orthosum::kernels {

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

void set_threads(int n) {
#ifdef _OPENMP
  if (n > 0) omp_set_num_threads(n);
#else
  (void)n;
#endif
}

namespace {

int thread_id() {
#ifdef _OPENMP
  return omp_get_thread_num();
#else
  return 0;
#endif
}

}  // namespace

namespace omp {

std::vector<std::uint64_t> sphere_points(const Field& f, Elem t, int d) {
  const std::uint64_t size = detail::power(f.q(), d);
  const auto sq = detail::square_table(f);
  std::vector<std::vector<std::uint64_t>> local(max_threads());

  // schedule(static) hands each thread one contiguous block in thread order,
  // so concatenating the per-thread lists keeps ascending index order.
#pragma omp parallel
  {
    auto& mine = local[thread_id()];
    std::vector<std::uint32_t> x(d);
#pragma omp for schedule(static)
    for (std::int64_t idx = 0; idx < static_cast<std::int64_t>(size); ++idx) {
      detail::decode(static_cast<std::uint64_t>(idx), f.q(), d, x.data());
      Elem acc{0};
      for (int i = 0; i < d; ++i) acc = f.add(acc, Elem{sq[x[i]]});
      if (acc == t) mine.push_back(static_cast<std::uint64_t>(idx));
    }
  }
  std::vector<std::uint64_t> out;
  for (auto& part : local) out.insert(out.end(), part.begin(), part.end());
  return out;
}

std::vector<std::complex<double>> character_sums(const Field& f, const FlatSet& gens) {
  const int k = gens.k;
  const std::uint64_t size = detail::power(f.q(), k);
  const auto roots = f.roots_of_unity();
  std::vector<std::complex<double>> out(size);

#pragma omp parallel
  {
    std::vector<std::uint32_t> a(k);
    std::vector<long long> counts(f.p());
#pragma omp for schedule(static)
    for (std::int64_t idx = 0; idx < static_cast<std::int64_t>(size); ++idx) {
      detail::decode(static_cast<std::uint64_t>(idx), f.q(), k, a.data());
      std::fill(counts.begin(), counts.end(), 0);
      for (std::size_t g = 0; g < gens.size(); ++g) ++counts[detail::pairing_trace(f, a.data(), gens.at(g), k)];
      std::complex<double> acc{0.0, 0.0};
      for (std::uint32_t j = 0; j < f.p(); ++j) acc += static_cast<double>(counts[j]) * roots[j];
      out[idx] = acc;
    }
  }
  return out;
}

std::vector<std::int16_t> sumset_distances(const Field& f, const FlatSet& gens) {
  const int k = gens.k;
  const std::uint64_t size = detail::power(f.q(), k);
  std::vector<std::int16_t> dist(size, kUnreached);
  std::vector<std::uint64_t> frontier;
  for (std::size_t g = 0; g < gens.size(); ++g) {
    const std::uint64_t idx = detail::encode(gens.at(g), f.q(), k);
    if (dist[idx] == kUnreached) {
      dist[idx] = 1;
      frontier.push_back(idx);
    }
  }
  std::sort(frontier.begin(), frontier.end());

  std::int16_t m = 1;
  std::vector<std::vector<std::uint64_t>> local(max_threads());
  while (!frontier.empty()) {
    if (m == INT16_MAX) throw std::overflow_error("sumset distance overflow");
    for (auto& l : local) l.clear();
    // dist is read-only inside the region; writes happen in the merge below.
#pragma omp parallel
    {
      auto& mine = local[thread_id()];
      std::vector<std::uint32_t> x(k);
#pragma omp for schedule(static)
      for (std::int64_t i = 0; i < static_cast<std::int64_t>(frontier.size()); ++i) {
        detail::decode(frontier[i], f.q(), k, x.data());
        for (std::size_t g = 0; g < gens.size(); ++g) {
          const std::uint64_t y = detail::shifted(f, x.data(), gens.at(g), k);
          if (dist[y] == kUnreached) mine.push_back(y);
        }
      }
    }
    std::vector<std::uint64_t> next;
    for (const auto& part : local) {
      for (std::uint64_t y : part) {
        if (dist[y] == kUnreached) {
          dist[y] = static_cast<std::int16_t>(m + 1);
          next.push_back(y);
        }
      }
    }
    std::sort(next.begin(), next.end());
    frontier = std::move(next);
    ++m;
  }
  return dist;
}

std::vector<std::uint8_t> next_layer(const Field& f, const FlatSet& gens, const std::vector<std::uint8_t>& layer) {
  const int k = gens.k;
  std::vector<std::uint8_t> out(layer.size(), 0);
#pragma omp parallel
  {
    std::vector<std::uint32_t> x(k);
#pragma omp for schedule(dynamic, 256)
    for (std::int64_t idx = 0; idx < static_cast<std::int64_t>(layer.size()); ++idx) {
      if (!layer[idx]) continue;
      detail::decode(static_cast<std::uint64_t>(idx), f.q(), k, x.data());
      for (std::size_t g = 0; g < gens.size(); ++g) {
        std::atomic_ref<std::uint8_t>(out[detail::shifted(f, x.data(), gens.at(g), k)])
            .store(1, std::memory_order_relaxed);
      }
    }
  }
  return out;
}

std::vector<Triple> realizable_triples(const Field& f) {
  std::vector<std::vector<Triple>> stripes(f.q());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t s = 0; s < static_cast<std::int64_t>(f.q()); ++s) {
    const Elem l1{static_cast<std::uint32_t>(s)};
    auto& stripe = stripes[s];
    for (std::uint32_t l2 = 0; l2 < f.q(); ++l2) {
      const Elem prod = f.mul(l1, Elem{l2});
      for (std::uint32_t mu = 0; mu < f.q(); ++mu) {
        if (detail::nonzero_residue(f, f.sub(prod, f.sqr(Elem{mu})))) stripe.push_back({l1, Elem{l2}, Elem{mu}});
      }
    }
  }
  std::vector<Triple> out;
  for (auto& s : stripes) out.insert(out.end(), s.begin(), s.end());
  return out;
}

}  // namespace omp
}  // namespace orthosum::kernels
