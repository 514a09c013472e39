#pragma once

#include <compare>
#include <complex>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace orthosum {

/// An element of GF(p^n), stored as its index sum_i c_i p^i where c_i is the
/// coefficient of x^i in the reduced polynomial representative. Index order is
/// the canonical element order used for every enumeration and tie-break.
struct Elem {
  std::uint32_t v = 0;

  constexpr auto operator<=>(const Elem&) const = default;
};

/// Quadratic character value.
enum class Legendre : int { NonResidue = -1, Zero = 0, Residue = 1 };

constexpr int to_int(Legendre l) { return static_cast<int>(l); }

/// GF(p^n) for odd p, with precomputed log/exp, trace and square-root tables.
/// Immutable after construction; copies share the tables.
class Field {
 public:
  static constexpr std::uint32_t kMaxOrder = 10000;

  /// Builds GF(p^n) with the lowest monic irreducible modulus, where
  /// candidates are ordered by the little-endian base-p value of their lower
  /// coefficients.
  static Field make(long long p, long long n);

  /// Factors q as p^n and forwards to make().
  static Field of_order(long long q);

  std::uint32_t p() const { return t_->p; }
  std::uint32_t n() const { return t_->n; }
  std::uint32_t q() const { return t_->q; }

  /// Monic modulus, coefficient of x^i at index i (length n + 1).
  std::span<const std::uint32_t> modulus() const { return t_->modulus; }

  Elem zero() const { return Elem{0}; }
  Elem one() const { return Elem{1}; }
  Elem from_int(long long k) const;
  Elem from_coeffs(std::span<const long long> coeffs) const;
  std::vector<std::uint32_t> coeffs(Elem x) const;
  Elem element(std::uint32_t index) const;

  bool is_prime_field() const { return t_->n == 1; }
  bool q_is_1_mod_4() const { return t_->q % 4 == 1; }

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem neg(Elem a) const { return Elem{t_->neg[a.v]}; }
  Elem mul(Elem a, Elem b) const {
    if (a.v == 0 || b.v == 0) return Elem{0};
    return Elem{t_->exp[t_->log[a.v] + t_->log[b.v]]};
  }
  Elem sqr(Elem a) const { return mul(a, a); }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, long long e) const;

  Legendre legendre(Elem x) const;
  /// True for 0 and for nonzero quadratic residues.
  bool is_square(Elem x) const { return legendre(x) != Legendre::NonResidue; }
  /// All square roots of x in ascending index order: {} for nonresidues,
  /// {0} for zero, {r, -r} otherwise.
  std::vector<Elem> sqrt(Elem x) const;
  /// Galois trace as an element of Z_p.
  std::uint32_t trace(Elem x) const { return t_->trace[x.v]; }
  /// Canonical additive character exp(2 pi i Tr(x) / p).
  std::complex<double> character(Elem x) const { return t_->roots[t_->trace[x.v]]; }
  /// The p-th roots of unity exp(2 pi i j / p), indexed by j.
  std::span<const std::complex<double>> roots_of_unity() const { return t_->roots; }

  /// A fixed square root of -1, present iff q = 1 mod 4.
  bool has_i() const { return q_is_1_mod_4(); }
  Elem i() const;

  bool same_as(const Field& other) const {
    return t_ == other.t_ || (t_->p == other.t_->p && t_->modulus == other.t_->modulus);
  }
  bool operator==(const Field& other) const { return same_as(other); }

 private:
  struct Tables {
    std::uint32_t p = 0, n = 0, q = 0;
    std::vector<std::uint32_t> modulus;
    std::vector<std::uint32_t> exp;  // length 2(q - 1)
    std::vector<std::uint32_t> log;  // log[0] unused
    std::vector<std::uint32_t> neg;
    std::vector<std::uint32_t> trace;
    std::vector<std::uint16_t> add_table;  // q*q entries for small extension fields
    std::vector<std::int32_t> root;        // smallest square root or -1
    std::vector<std::complex<double>> roots;
  };

  explicit Field(std::shared_ptr<const Tables> t) : t_(std::move(t)) {}
  Elem add_digits(Elem a, Elem b) const;

  std::shared_ptr<const Tables> t_;
};

bool is_prime(long long k);

/// Brute-force irreducibility over Z_p by trial division with every monic
/// polynomial of degree 1..floor(n/2). Coefficients little-endian, monic.
bool is_irreducible(std::span<const std::uint32_t> poly, std::uint32_t p);

/// Odd prime powers in [lo, hi], ascending.
std::vector<std::uint32_t> odd_prime_powers(std::uint32_t lo, std::uint32_t hi);

}  // namespace orthosum
