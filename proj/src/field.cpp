#include "orthosum/field.hpp"

#include <algorithm>
#include <numbers>
#include <stdexcept>
#include <string>

#include "orthosum/error.hpp"

namespace orthosum {

namespace {

using Poly = std::vector<std::uint32_t>;

// Remainder of a by monic b over Z_p; both little-endian, trailing zeros allowed in a.
Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const std::uint32_t lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    if (lead != 0) {
      for (std::size_t i = 0; i <= db; ++i) {
        a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - (lead * b[i]) % p) % p);
      }
    }
    a.pop_back();
  }
  return a;
}

Poly digits_of(std::uint32_t index, std::uint32_t p, std::uint32_t n) {
  Poly d(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    d[i] = index % p;
    index /= p;
  }
  return d;
}

std::uint32_t index_of(const Poly& d, std::uint32_t p) {
  std::uint32_t idx = 0;
  for (std::size_t i = d.size(); i-- > 0;) idx = idx * p + d[i];
  return idx;
}

std::uint32_t poly_mulmod_index(std::uint32_t a, std::uint32_t b, const Poly& modulus, std::uint32_t p,
                                std::uint32_t n) {
  const Poly da = digits_of(a, p, n);
  const Poly db = digits_of(b, p, n);
  Poly prod(2 * n - 1, 0);
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = 0; j < n; ++j) {
      prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{da[i]} * db[j]) % p);
    }
  }
  Poly r = poly_mod(std::move(prod), modulus, p);
  r.resize(n, 0);
  return index_of(r, p);
}

}  // namespace

bool is_prime(long long k) {
  if (k < 2) return false;
  for (long long d = 2; d * d <= k; ++d) {
    if (k % d == 0) return false;
  }
  return true;
}

bool is_irreducible(std::span<const std::uint32_t> poly, std::uint32_t p) {
  const std::size_t n = poly.size() - 1;
  if (n == 1) return true;
  const Poly f(poly.begin(), poly.end());
  for (std::size_t deg = 1; deg <= n / 2; ++deg) {
    std::uint32_t count = 1;
    for (std::size_t i = 0; i < deg; ++i) count *= p;
    for (std::uint32_t low = 0; low < count; ++low) {
      Poly g = digits_of(low, p, static_cast<std::uint32_t>(deg));
      g.push_back(1);
      const Poly r = poly_mod(f, g, p);
      if (std::all_of(r.begin(), r.end(), [](std::uint32_t c) { return c == 0; })) return false;
    }
  }
  return true;
}

std::vector<std::uint32_t> odd_prime_powers(std::uint32_t lo, std::uint32_t hi) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t p = 3; p <= hi; p += 2) {
    if (!is_prime(p)) continue;
    for (std::uint64_t q = p; q <= hi; q *= p) {
      if (q >= lo) out.push_back(static_cast<std::uint32_t>(q));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Field Field::make(long long p, long long n) {
  if (p == 2) throw Error(ErrorCode::EvenCharacteristic, "characteristic 2 is not supported");
  if (!is_prime(p)) throw Error(ErrorCode::NonPrime, std::to_string(p) + " is not prime");
  if (n < 1) throw Error(ErrorCode::BadDegree, "extension degree must be >= 1, got " + std::to_string(n));
  long long qq = 1;
  for (long long i = 0; i < n; ++i) {
    qq *= p;
    if (qq > kMaxOrder) {
      throw Error(ErrorCode::FieldTooLarge, "field order exceeds " + std::to_string(kMaxOrder));
    }
  }

  auto t = std::make_shared<Tables>();
  t->p = static_cast<std::uint32_t>(p);
  t->n = static_cast<std::uint32_t>(n);
  t->q = static_cast<std::uint32_t>(qq);
  const std::uint32_t P = t->p, N = t->n, Q = t->q;

  if (N == 1) {
    t->modulus = {0, 1};
  } else {
    // q candidates for the lower coefficients, scanned in increasing index.
    for (std::uint32_t low = 0; low < Q; ++low) {
      Poly cand = digits_of(low, P, N);
      cand.push_back(1);
      if (is_irreducible(cand, P)) {
        t->modulus = std::move(cand);
        break;
      }
    }
  }

  // Multiplicative structure: find the smallest generator of the unit group.
  std::vector<std::uint32_t> powers(Q - 1);
  std::vector<char> seen(Q);
  bool found = false;
  for (std::uint32_t g = 1; g < Q && !found; ++g) {
    std::fill(seen.begin(), seen.end(), 0);
    std::uint32_t x = 1;
    std::uint32_t k = 0;
    for (; k < Q - 1; ++k) {
      if (seen[x]) break;
      seen[x] = 1;
      powers[k] = x;
      x = N == 1 ? static_cast<std::uint32_t>((std::uint64_t{x} * g) % P)
                 : poly_mulmod_index(x, g, t->modulus, P, N);
    }
    found = (k == Q - 1 && x == 1);
  }
  if (!found) throw std::logic_error("no primitive element found");

  t->exp.resize(2 * (Q - 1));
  t->log.assign(Q, 0);
  for (std::uint32_t k = 0; k < Q - 1; ++k) {
    t->exp[k] = powers[k];
    t->exp[k + Q - 1] = powers[k];
    t->log[powers[k]] = k;
  }

  t->neg.resize(Q);
  for (std::uint32_t x = 0; x < Q; ++x) {
    Poly d = digits_of(x, P, N);
    for (auto& c : d) c = (P - c) % P;
    t->neg[x] = index_of(d, P);
  }

  if (N > 1 && Q <= 2048) {
    t->add_table.resize(std::size_t{Q} * Q);
    for (std::uint32_t a = 0; a < Q; ++a) {
      const Poly da = digits_of(a, P, N);
      for (std::uint32_t b = 0; b < Q; ++b) {
        Poly db = digits_of(b, P, N);
        for (std::uint32_t i = 0; i < N; ++i) db[i] = (db[i] + da[i]) % P;
        t->add_table[std::size_t{a} * Q + b] = static_cast<std::uint16_t>(index_of(db, P));
      }
    }
  }

  t->roots.resize(P);
  for (std::uint32_t j = 0; j < P; ++j) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(P);
    t->roots[j] = {std::cos(angle), std::sin(angle)};
  }
  t->roots[0] = {1.0, 0.0};

  t->root.assign(Q, -1);
  t->trace.assign(Q, 0);
  Field f(t);
  for (std::uint32_t x = 0; x < Q; ++x) {
    const std::uint32_t sq = f.mul(Elem{x}, Elem{x}).v;
    if (t->root[sq] < 0) t->root[sq] = static_cast<std::int32_t>(x);
  }
  for (std::uint32_t x = 0; x < Q; ++x) {
    Elem frob{x};
    Elem acc{0};
    for (std::uint32_t i = 0; i < N; ++i) {
      acc = f.add(acc, frob);
      frob = f.pow(frob, P);
    }
    if (acc.v >= P) throw std::logic_error("trace escaped the prime subfield");
    t->trace[x] = acc.v;
  }
  return f;
}

Field Field::of_order(long long q) {
  if (q < 2) throw Error(ErrorCode::NonPrime, std::to_string(q) + " is not a prime power");
  if (q % 2 == 0) {
    if ((q & (q - 1)) == 0) throw Error(ErrorCode::EvenCharacteristic, "characteristic 2 is not supported");
    throw Error(ErrorCode::NonPrime, std::to_string(q) + " is not a prime power");
  }
  long long p = 3;
  while (q % p != 0) p += 2;
  long long n = 0, rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++n;
  }
  if (rest != 1) throw Error(ErrorCode::NonPrime, std::to_string(q) + " is not a prime power");
  return make(p, n);
}

Elem Field::from_int(long long k) const {
  const long long p = t_->p;
  return Elem{static_cast<std::uint32_t>(((k % p) + p) % p)};
}

Elem Field::from_coeffs(std::span<const long long> coeffs) const {
  if (coeffs.size() > t_->n) {
    throw Error(ErrorCode::BadShape, "element has more than n = " + std::to_string(t_->n) + " coefficients");
  }
  Poly d(t_->n, 0);
  const long long p = t_->p;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    d[i] = static_cast<std::uint32_t>(((coeffs[i] % p) + p) % p);
  }
  return Elem{index_of(d, t_->p)};
}

std::vector<std::uint32_t> Field::coeffs(Elem x) const { return digits_of(x.v, t_->p, t_->n); }

Elem Field::element(std::uint32_t index) const {
  if (index >= t_->q) throw Error(ErrorCode::FieldMismatch, "index " + std::to_string(index) + " outside field");
  return Elem{index};
}

Elem Field::add_digits(Elem a, Elem b) const {
  const std::uint32_t p = t_->p;
  std::uint32_t x = a.v, y = b.v, out = 0, scale = 1;
  for (std::uint32_t i = 0; i < t_->n; ++i) {
    out += ((x % p + y % p) % p) * scale;
    x /= p;
    y /= p;
    scale *= p;
  }
  return Elem{out};
}

Elem Field::add(Elem a, Elem b) const {
  if (t_->n == 1) {
    const std::uint32_t s = a.v + b.v;
    return Elem{s >= t_->p ? s - t_->p : s};
  }
  if (!t_->add_table.empty()) return Elem{t_->add_table[std::size_t{a.v} * t_->q + b.v]};
  return add_digits(a, b);
}

Elem Field::inv(Elem a) const {
  if (a.v == 0) throw Error(ErrorCode::DivideByZero, "inverse of zero");
  const std::uint32_t order = t_->q - 1;
  return Elem{t_->exp[(order - t_->log[a.v]) % order]};
}

Elem Field::pow(Elem a, long long e) const {
  if (e < 0) return pow(inv(a), -e);
  if (e == 0) return one();
  if (a.v == 0) return zero();
  const std::uint64_t order = t_->q - 1;
  const std::uint64_t k = (std::uint64_t{t_->log[a.v]} * (static_cast<std::uint64_t>(e) % order)) % order;
  return Elem{t_->exp[k]};
}

Legendre Field::legendre(Elem x) const {
  if (x.v == 0) return Legendre::Zero;
  // The generator is a nonresidue, so residues are exactly the even powers.
  return (t_->log[x.v] % 2 == 0) ? Legendre::Residue : Legendre::NonResidue;
}

std::vector<Elem> Field::sqrt(Elem x) const {
  if (x.v == 0) return {Elem{0}};
  Elem r;
  if (t_->q % 4 == 3) {
    r = pow(x, (static_cast<long long>(t_->q) + 1) / 4);
    if (mul(r, r) != x) return {};
  } else {
    if (t_->root[x.v] < 0) return {};
    r = Elem{static_cast<std::uint32_t>(t_->root[x.v])};
  }
  Elem s = neg(r);
  if (s < r) std::swap(r, s);
  return {r, s};
}

Elem Field::i() const {
  if (!has_i()) throw Error(ErrorCode::UnrealizableInvariant, "-1 is not a square when q = 3 mod 4");
  return sqrt(neg(one())).front();
}

}  // namespace orthosum
