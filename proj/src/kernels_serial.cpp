#include <complex>
#include <stdexcept>

#include "kernel_common.hpp"
#include "orthosum/error.hpp"
#include "orthosum/kernels.hpp"

namespace orthosum::kernels {

namespace detail {

std::uint64_t power(std::uint32_t q, int k) {
  std::uint64_t size = 1;
  for (int i = 0; i < k; ++i) {
    size *= q;
    if (size > kAmbientLimit) {
      throw Error(ErrorCode::AmbientTooLarge, "ambient space exceeds " + std::to_string(kAmbientLimit) + " elements");
    }
  }
  return size;
}

std::vector<std::uint32_t> square_table(const Field& f) {
  std::vector<std::uint32_t> sq(f.q());
  for (std::uint32_t x = 0; x < f.q(); ++x) sq[x] = f.sqr(Elem{x}).v;
  return sq;
}

}  // namespace detail

namespace serial {

std::vector<std::uint64_t> sphere_points(const Field& f, Elem t, int d) {
  const std::uint64_t size = detail::power(f.q(), d);
  const auto sq = detail::square_table(f);
  std::vector<std::uint32_t> x(d);
  std::vector<std::uint64_t> out;
  for (std::uint64_t idx = 0; idx < size; ++idx) {
    detail::decode(idx, f.q(), d, x.data());
    Elem acc{0};
    for (int i = 0; i < d; ++i) acc = f.add(acc, Elem{sq[x[i]]});
    if (acc == t) out.push_back(idx);
  }
  return out;
}

std::vector<std::complex<double>> character_sums(const Field& f, const FlatSet& gens) {
  const int k = gens.k;
  const std::uint64_t size = detail::power(f.q(), k);
  const auto roots = f.roots_of_unity();
  std::vector<std::complex<double>> out(size);
  std::vector<std::uint32_t> a(k);
  std::vector<long long> counts(f.p());
  for (std::uint64_t idx = 0; idx < size; ++idx) {
    detail::decode(idx, f.q(), k, a.data());
    std::fill(counts.begin(), counts.end(), 0);
    for (std::size_t g = 0; g < gens.size(); ++g) ++counts[detail::pairing_trace(f, a.data(), gens.at(g), k)];
    std::complex<double> acc{0.0, 0.0};
    for (std::uint32_t j = 0; j < f.p(); ++j) acc += static_cast<double>(counts[j]) * roots[j];
    out[idx] = acc;
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
  std::vector<std::uint32_t> x(k);
  std::int16_t m = 1;
  while (!frontier.empty()) {
    if (m == INT16_MAX) throw std::overflow_error("sumset distance overflow");
    std::vector<std::uint64_t> next;
    for (std::uint64_t idx : frontier) {
      detail::decode(idx, f.q(), k, x.data());
      for (std::size_t g = 0; g < gens.size(); ++g) {
        const std::uint64_t y = detail::shifted(f, x.data(), gens.at(g), k);
        if (dist[y] == kUnreached) {
          dist[y] = static_cast<std::int16_t>(m + 1);
          next.push_back(y);
        }
      }
    }
    frontier = std::move(next);
    ++m;
  }
  return dist;
}

std::vector<std::uint8_t> next_layer(const Field& f, const FlatSet& gens, const std::vector<std::uint8_t>& layer) {
  const int k = gens.k;
  std::vector<std::uint8_t> out(layer.size(), 0);
  std::vector<std::uint32_t> x(k);
  for (std::uint64_t idx = 0; idx < layer.size(); ++idx) {
    if (!layer[idx]) continue;
    detail::decode(idx, f.q(), k, x.data());
    for (std::size_t g = 0; g < gens.size(); ++g) out[detail::shifted(f, x.data(), gens.at(g), k)] = 1;
  }
  return out;
}

std::vector<Triple> realizable_triples(const Field& f) {
  std::vector<Triple> out;
  for (std::uint32_t l1 = 0; l1 < f.q(); ++l1) {
    for (std::uint32_t l2 = 0; l2 < f.q(); ++l2) {
      const Elem prod = f.mul(Elem{l1}, Elem{l2});
      for (std::uint32_t mu = 0; mu < f.q(); ++mu) {
        if (detail::nonzero_residue(f, f.sub(prod, f.sqr(Elem{mu})))) out.push_back({Elem{l1}, Elem{l2}, Elem{mu}});
      }
    }
  }
  return out;
}

}  // namespace serial
}  // namespace orthosum::kernels
