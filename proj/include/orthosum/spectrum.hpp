#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "orthosum/field.hpp"
#include "orthosum/kernels.hpp"
#include "orthosum/linalg.hpp"
#include "orthosum/triangle.hpp"

namespace orthosum {

using Complex = std::complex<double>;

/// Connection set G of a Cayley digraph (edge A -> B iff B - A in G).
/// Matrix sets live in Mat_d, vector sets in F_q^d; power subgroups are
/// 1 x 1, stored as vectors of dimension 1.
class ConnectionSet {
 public:
  enum class Label { O2, SL2, GL2, UnitSphere, PowerSubgroup };

  static ConnectionSet o2(const Field& f);
  static ConnectionSet sl2(const Field& f);
  static ConnectionSet gl2(const Field& f);
  static ConnectionSet unit_sphere(const Field& f, int d);
  /// (F_q^*)^k.
  static ConnectionSet power_subgroup(const Field& f, int k);
  static ConnectionSet of_matrices(Label label, int d, std::vector<FqMatrix> elements);
  static ConnectionSet of_vectors(Label label, int d, std::vector<FqVector> elements);

  Label label() const { return label_; }
  bool is_matrix() const { return is_matrix_; }
  int dim() const { return d_; }
  /// Coordinates of the flat space: d^2 for matrices, d for vectors.
  int flat_dim() const { return is_matrix_ ? d_ * d_ : d_; }
  std::size_t size() const { return pairing_.size(); }
  const std::vector<FqMatrix>& matrices() const { return matrices_; }
  const std::vector<FqVector>& vectors() const { return vectors_; }

  /// Each element flattened so that Tr(A g) (or m . x) is a plain dot
  /// product with the flat coordinates of A. Matrices are stored transposed.
  const kernels::FlatSet& pairing() const { return pairing_; }

 private:
  ConnectionSet() = default;
  void build_pairing();

  Label label_ = Label::O2;
  bool is_matrix_ = true;
  int d_ = 0;
  std::vector<FqMatrix> matrices_;
  std::vector<FqVector> vectors_;
  kernels::FlatSet pairing_;
};

std::string_view to_string(ConnectionSet::Label label);

/// Flat coordinates of A (row-major for matrices).
std::vector<std::uint32_t> flat_coordinates(const FqMatrix& a);
std::vector<std::uint32_t> flat_coordinates(const FqVector& v);

/// lambda_A = sum over g of chi(Tr(A g)) (chi(m . x) for vector sets).
Complex cayley_eigenvalue(const Field& f, const std::vector<std::uint32_t>& a_flat, const ConnectionSet& g);
Complex cayley_eigenvalue(const Field& f, const FqMatrix& a, const ConnectionSet& g);
Complex cayley_eigenvalue(const Field& f, const FqVector& m, const ConnectionSet& g);

/// Every eigenvalue, indexed by the flat index of A.
std::vector<Complex> full_spectrum(const Field& f, const ConnectionSet& g);

/// Checks sum_g chi_A(x + g) = lambda_A chi_A(x) at `samples` random x.
bool eigenfunction_check(const Field& f, const std::vector<std::uint32_t>& a_flat, const ConnectionSet& g,
                         int samples, std::uint64_t seed = 1, double tol = 1e-9);

struct GapParameter {
  double max_nontrivial = 0.0;  // max over A != 0 of |lambda_A|
  double n_star = 0.0;          // (q^k / |G|) * max_nontrivial
};
GapParameter spectral_gap_param(const Field& f, const ConnectionSet& g);
GapParameter spectral_gap_param(const std::vector<Complex>& spectrum, std::size_t group_size);

/// sum over x in S_t (plane) of chi(-m . x).
Complex sphere_fourier(const Field& f, const FqVector& m, Elem t);

/// sum over x != 0 of chi(a x + b / x).
Complex kloosterman(const Field& f, Elem a, Elem b);

/// lambda_{L1,L2,mu} for T_{O(2;q)} without touching the group.
/// Throws UnrealizableInvariant when L1 L2 - mu^2 is not a nonzero square.
Complex o2_eigenvalue_closed_form(const Field& f, const TriangleInvariant& inv);

struct RankOneEigenvalue {
  Complex value;
  /// a = +-b i for the row (a, b).
  bool row_isotropic = false;
  /// One of the two linear forms in the S_1 sums is identically zero, so
  /// that sum equals |S_1| instead of being bounded by 2 sqrt(q).
  bool form_vanishes = false;
};

/// A = [[a, b], [s a, s b]], (a, b) != 0, via its two S_1 sums.
RankOneEigenvalue rank_one_eigenvalue(const Field& f, Elem a, Elem b, Elem s);
/// A = [[0, 0], [a, b]].
RankOneEigenvalue rank_one_eigenvalue_lower(const Field& f, Elem a, Elem b);

enum class Branch { Zero, Nondegenerate, EqualLengthsOrthogonal, RankOne, RankOneIsotropic, SphereTrivial, SphereNontrivial };
std::string_view to_string(Branch b);

struct SpectrumEntry {
  FqMatrix representative;        // matrix groups
  FqVector vector_representative; // vector groups
  TriangleInvariant invariant{};
  Complex value;
  Branch branch = Branch::Zero;
  double bound = 0.0;
  bool pass = false;
  std::optional<Complex> closed_form;
};

struct SpectrumReport {
  std::uint64_t q = 0;
  std::vector<SpectrumEntry> entries;
  GapParameter gap;
  std::size_t group_size = 0;
  bool class_constant = false;
  bool symmetric = false;
  bool closed_forms_match = false;
  double parseval_relative_error = 0.0;
  double sum_of_eigenvalues = 0.0;  // |sum lambda_A|

  bool all_pass() const;
};

/// Exhaustive spectrum of T_{O(2;q)}, one entry per left O(2)-orbit (orbit
/// minimum as representative), each with its branch verdict.
SpectrumReport bound_report(const Field& f);

/// Spectrum of the unit-sphere digraph on F_q^d, one entry per m. The
/// 2 sqrt(q) bound is only asserted in the plane.
SpectrumReport sphere_report(const Field& f, int d);

}  // namespace orthosum
