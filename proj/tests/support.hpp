#pragma once

#include <random>

#include "orthosum/field.hpp"
#include "orthosum/linalg.hpp"

namespace testing_support {

using orthosum::Elem;
using orthosum::Field;
using orthosum::FqMatrix;
using orthosum::FqVector;

inline FqVector vec(const Field& f, std::initializer_list<long long> xs) {
  FqVector v;
  for (long long x : xs) v.push_back(f.from_int(x));
  return v;
}

inline FqMatrix mat2(const Field& f, long long a, long long b, long long c, long long d) {
  return FqMatrix::of2(f.from_int(a), f.from_int(b), f.from_int(c), f.from_int(d));
}

inline FqMatrix random_matrix(const Field& f, int d, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> coord(0, f.q() - 1);
  FqMatrix m(d);
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) m.at(r, c) = Elem{coord(rng)};
  return m;
}

inline FqVector random_vector(const Field& f, int d, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> coord(0, f.q() - 1);
  FqVector v(d);
  for (auto& x : v) x = Elem{coord(rng)};
  return v;
}

}  // namespace testing_support
