#include "orthosum/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "orthosum/error.hpp"
#include "orthosum/orthogonal.hpp"
#include "orthosum/vector_geometry.hpp"

namespace orthosum {

namespace {

constexpr std::uint64_t kSpectrumLimit = 10'000'000;

double root_q(const Field& f) { return std::sqrt(static_cast<double>(f.q())); }

// |S_1| in the plane, which is also |SO(2;q)|.
double circle_size(const Field& f) { return static_cast<double>(f.q()) - (f.q_is_1_mod_4() ? 1.0 : -1.0); }

Complex linear_sum_over_circle(const Field& f, const std::vector<FqVector>& circle, Elem alpha, Elem beta) {
  Complex acc{0.0, 0.0};
  for (const auto& x : circle) acc += f.character(f.add(f.mul(alpha, x[0]), f.mul(beta, x[1])));
  return acc;
}

}  // namespace

ConnectionSet ConnectionSet::o2(const Field& f) {
  std::vector<FqMatrix> els;
  for (const auto& g : enumerate_o2(f)) els.push_back(g.matrix());
  return of_matrices(Label::O2, 2, std::move(els));
}

ConnectionSet ConnectionSet::sl2(const Field& f) {
  const std::uint64_t size = la::ambient_size(f, 4, kSpectrumLimit);
  std::vector<FqMatrix> els;
  for (std::uint64_t idx = 0; idx < size; ++idx) {
    FqMatrix m = la::matrix_at(f, idx, 2);
    if (la::det(f, m) == f.one()) els.push_back(std::move(m));
  }
  return of_matrices(Label::SL2, 2, std::move(els));
}

ConnectionSet ConnectionSet::gl2(const Field& f) {
  const std::uint64_t size = la::ambient_size(f, 4, kSpectrumLimit);
  std::vector<FqMatrix> els;
  for (std::uint64_t idx = 0; idx < size; ++idx) {
    FqMatrix m = la::matrix_at(f, idx, 2);
    if (la::det(f, m).v != 0) els.push_back(std::move(m));
  }
  return of_matrices(Label::GL2, 2, std::move(els));
}

ConnectionSet ConnectionSet::unit_sphere(const Field& f, int d) {
  return of_vectors(Label::UnitSphere, d, sphere(f, f.one(), d));
}

ConnectionSet ConnectionSet::power_subgroup(const Field& f, int k) {
  if (k < 1) throw Error(ErrorCode::BadDegree, "power subgroup exponent must be positive");
  std::set<std::uint32_t> powers;
  for (std::uint32_t x = 1; x < f.q(); ++x) powers.insert(f.pow(Elem{x}, k).v);
  std::vector<FqVector> els;
  for (std::uint32_t v : powers) els.push_back({Elem{v}});
  return of_vectors(Label::PowerSubgroup, 1, std::move(els));
}

ConnectionSet ConnectionSet::of_matrices(Label label, int d, std::vector<FqMatrix> elements) {
  ConnectionSet s;
  s.label_ = label;
  s.is_matrix_ = true;
  s.d_ = d;
  s.matrices_ = std::move(elements);
  s.build_pairing();
  return s;
}

ConnectionSet ConnectionSet::of_vectors(Label label, int d, std::vector<FqVector> elements) {
  ConnectionSet s;
  s.label_ = label;
  s.is_matrix_ = false;
  s.d_ = d;
  s.vectors_ = std::move(elements);
  s.build_pairing();
  return s;
}

void ConnectionSet::build_pairing() {
  pairing_.k = flat_dim();
  pairing_.digits.clear();
  auto push = [&](const std::vector<std::uint32_t>& flat) {
    if (std::all_of(flat.begin(), flat.end(), [](std::uint32_t x) { return x == 0; })) {
      throw Error(ErrorCode::ZeroVector, "connection set must not contain 0");
    }
    pairing_.digits.insert(pairing_.digits.end(), flat.begin(), flat.end());
  };
  if (is_matrix_) {
    for (const auto& m : matrices_) {
      if (m.dim() != d_) throw Error(ErrorCode::BadShape, "connection set matrices differ in size");
      push(flat_coordinates(m.transpose()));
    }
  } else {
    for (const auto& v : vectors_) {
      if (static_cast<int>(v.size()) != d_) throw Error(ErrorCode::BadShape, "connection set vectors differ in size");
      push(flat_coordinates(v));
    }
  }
}

std::string_view to_string(ConnectionSet::Label label) {
  switch (label) {
    case ConnectionSet::Label::O2: return "O2";
    case ConnectionSet::Label::SL2: return "SL2";
    case ConnectionSet::Label::GL2: return "GL2";
    case ConnectionSet::Label::UnitSphere: return "unit-sphere";
    case ConnectionSet::Label::PowerSubgroup: return "power-subgroup";
  }
  return "?";
}

std::vector<std::uint32_t> flat_coordinates(const FqMatrix& a) {
  std::vector<std::uint32_t> out;
  out.reserve(a.entries().size());
  for (Elem e : a.entries()) out.push_back(e.v);
  return out;
}

std::vector<std::uint32_t> flat_coordinates(const FqVector& v) {
  std::vector<std::uint32_t> out;
  out.reserve(v.size());
  for (Elem e : v) out.push_back(e.v);
  return out;
}

Complex cayley_eigenvalue(const Field& f, const std::vector<std::uint32_t>& a_flat, const ConnectionSet& g) {
  const auto& pairing = g.pairing();
  if (static_cast<int>(a_flat.size()) != pairing.k) throw Error(ErrorCode::BadShape, "argument does not match the connection set");
  std::vector<long long> counts(f.p(), 0);
  for (std::size_t j = 0; j < pairing.size(); ++j) {
    Elem acc{0};
    const std::uint32_t* x = pairing.at(j);
    for (int i = 0; i < pairing.k; ++i) acc = f.add(acc, f.mul(Elem{a_flat[i]}, Elem{x[i]}));
    ++counts[f.trace(acc)];
  }
  const auto roots = f.roots_of_unity();
  Complex acc{0.0, 0.0};
  for (std::uint32_t j = 0; j < f.p(); ++j) acc += static_cast<double>(counts[j]) * roots[j];
  return acc;
}

Complex cayley_eigenvalue(const Field& f, const FqMatrix& a, const ConnectionSet& g) {
  return cayley_eigenvalue(f, flat_coordinates(a), g);
}

Complex cayley_eigenvalue(const Field& f, const FqVector& m, const ConnectionSet& g) {
  return cayley_eigenvalue(f, flat_coordinates(m), g);
}

std::vector<Complex> full_spectrum(const Field& f, const ConnectionSet& g) {
  return kernels::omp::character_sums(f, g.pairing());
}

bool eigenfunction_check(const Field& f, const std::vector<std::uint32_t>& a_flat, const ConnectionSet& g,
                         int samples, std::uint64_t seed, double tol) {
  const auto& pairing = g.pairing();
  const int k = pairing.k;
  const Complex lambda = cayley_eigenvalue(f, a_flat, g);
  auto chi_a = [&](const std::vector<std::uint32_t>& x) {
    Elem acc{0};
    for (int i = 0; i < k; ++i) acc = f.add(acc, f.mul(Elem{a_flat[i]}, Elem{x[i]}));
    return f.character(acc);
  };
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> coord(0, f.q() - 1);
  std::vector<std::uint32_t> x(k), y(k);
  for (int s = 0; s < samples; ++s) {
    for (auto& c : x) c = coord(rng);
    Complex lhs{0.0, 0.0};
    for (std::size_t j = 0; j < pairing.size(); ++j) {
      const std::uint32_t* gj = pairing.at(j);
      for (int i = 0; i < k; ++i) y[i] = f.add(Elem{x[i]}, Elem{gj[i]}).v;
      lhs += chi_a(y);
    }
    if (std::abs(lhs - lambda * chi_a(x)) > tol) return false;
  }
  return true;
}

GapParameter spectral_gap_param(const std::vector<Complex>& spectrum, std::size_t group_size) {
  GapParameter out;
  for (std::size_t idx = 1; idx < spectrum.size(); ++idx) out.max_nontrivial = std::max(out.max_nontrivial, std::abs(spectrum[idx]));
  if (group_size > 0) out.n_star = static_cast<double>(spectrum.size()) / static_cast<double>(group_size) * out.max_nontrivial;
  return out;
}

GapParameter spectral_gap_param(const Field& f, const ConnectionSet& g) {
  return spectral_gap_param(full_spectrum(f, g), g.size());
}

Complex sphere_fourier(const Field& f, const FqVector& m, Elem t) {
  if (m.size() != 2) throw Error(ErrorCode::BadShape, "sphere_fourier works in the plane");
  Complex acc{0.0, 0.0};
  for (const auto& x : sphere(f, t, 2)) acc += f.character(f.neg(la::dot(f, m, x)));
  return acc;
}

Complex kloosterman(const Field& f, Elem a, Elem b) {
  Complex acc{0.0, 0.0};
  for (std::uint32_t x = 1; x < f.q(); ++x) {
    const Elem ex{x};
    acc += f.character(f.add(f.mul(a, ex), f.div(b, ex)));
  }
  return acc;
}

Complex o2_eigenvalue_closed_form(const Field& f, const TriangleInvariant& inv) {
  if (!is_realizable(f, inv)) throw Error(ErrorCode::UnrealizableInvariant, "L1 L2 - mu^2 is not a nonzero square");
  if (inv.l1.v == 0 && inv.l2.v != 0) return o2_eigenvalue_closed_form(f, {inv.l2, inv.l1, inv.mu});
  if (inv.l1.v == 0) {
    // Both columns isotropic, on opposite lines: two Kloosterman sums.
    const Elem half_mu = f.div(inv.mu, f.from_int(2));
    const Elem coeff = f.mul(f.i(), half_mu);
    return kloosterman(f, f.one(), f.neg(coeff)) + kloosterman(f, f.one(), coeff);
  }
  const Elem r = f.sqrt(f.sub(f.mul(inv.l1, inv.l2), f.sqr(inv.mu))).front();
  const Elem inv_l1 = f.inv(inv.l1);
  const Elem across = f.mul(r, inv_l1);
  const Elem along = f.mul(inv.mu, inv_l1);
  return sphere_fourier(f, {f.add(f.one(), across), along}, inv.l1) +
         sphere_fourier(f, {f.sub(f.one(), across), along}, inv.l1);
}

namespace {

bool is_i_multiple(const Field& f, Elem a, Elem b) {
  if (!f.has_i() || (a.v == 0 && b.v == 0)) return false;
  const Elem bi = f.mul(b, f.i());
  return a == bi || a == f.neg(bi);
}

// For any 2x2 A, lambda_A over O(2) splits into an S_1 sum from rotations
// with coefficients (A00 + A11, A01 - A10) and one from reflections with
// (A00 - A11, A01 + A10).
std::pair<FqVector, FqVector> o2_linear_forms(const Field& f, const FqMatrix& a) {
  return {{f.add(a.at(0, 0), a.at(1, 1)), f.sub(a.at(0, 1), a.at(1, 0))},
          {f.sub(a.at(0, 0), a.at(1, 1)), f.add(a.at(0, 1), a.at(1, 0))}};
}

}  // namespace

RankOneEigenvalue rank_one_eigenvalue(const Field& f, Elem a, Elem b, Elem s) {
  if (a.v == 0 && b.v == 0) throw Error(ErrorCode::ZeroVector, "rank-one row must be nonzero");
  const auto circle = sphere(f, f.one(), 2);
  const Elem bs = f.mul(b, s), as = f.mul(a, s);
  const Elem a1 = f.sub(a, bs), b1 = f.add(as, b);
  const Elem a2 = f.add(a, bs), b2 = f.sub(b, as);
  RankOneEigenvalue out;
  out.value = linear_sum_over_circle(f, circle, a1, b1) + linear_sum_over_circle(f, circle, a2, b2);
  out.row_isotropic = is_i_multiple(f, a, b);
  out.form_vanishes = (a1.v == 0 && b1.v == 0) || (a2.v == 0 && b2.v == 0);
  return out;
}

RankOneEigenvalue rank_one_eigenvalue_lower(const Field& f, Elem a, Elem b) {
  if (a.v == 0 && b.v == 0) throw Error(ErrorCode::ZeroVector, "rank-one row must be nonzero");
  const auto circle = sphere(f, f.one(), 2);
  const auto [rot, ref] = o2_linear_forms(f, FqMatrix::of2(f.zero(), f.zero(), a, b));
  RankOneEigenvalue out;
  out.value = linear_sum_over_circle(f, circle, rot[0], rot[1]) + linear_sum_over_circle(f, circle, ref[0], ref[1]);
  out.row_isotropic = is_i_multiple(f, a, b);
  out.form_vanishes = la::is_zero(rot) || la::is_zero(ref);
  return out;
}

std::string_view to_string(Branch b) {
  switch (b) {
    case Branch::Zero: return "zero";
    case Branch::Nondegenerate: return "nondegenerate";
    case Branch::EqualLengthsOrthogonal: return "LL0";
    case Branch::RankOne: return "rank-one";
    case Branch::RankOneIsotropic: return "rank-one-isotropic";
    case Branch::SphereTrivial: return "trivial";
    case Branch::SphereNontrivial: return "nontrivial";
  }
  return "?";
}

bool SpectrumReport::all_pass() const {
  if (!class_constant || !symmetric || !closed_forms_match) return false;
  if (parseval_relative_error > 1e-6) return false;
  return std::all_of(entries.begin(), entries.end(), [](const SpectrumEntry& e) { return e.pass; });
}

SpectrumReport bound_report(const Field& f) {
  const ConnectionSet g = ConnectionSet::o2(f);
  const auto spectrum = full_spectrum(f, g);
  const double sq = root_q(f);
  const double so2 = circle_size(f);

  SpectrumReport rep;
  rep.q = f.q();
  rep.group_size = g.size();
  rep.gap = spectral_gap_param(spectrum, g.size());
  rep.class_constant = true;
  rep.closed_forms_match = true;

  double parseval = 0.0;
  Complex total{0.0, 0.0};
  for (const auto& v : spectrum) {
    parseval += std::norm(v);
    total += v;
  }
  const double expected_parseval = static_cast<double>(spectrum.size()) * static_cast<double>(g.size());
  rep.parseval_relative_error = std::abs(parseval - expected_parseval) / expected_parseval;
  rep.sum_of_eigenvalues = std::abs(total);

  std::vector<std::uint8_t> visited(spectrum.size(), 0);
  for (std::uint64_t idx = 0; idx < spectrum.size(); ++idx) {
    if (visited[idx]) continue;
    const FqMatrix a = la::matrix_at(f, idx, 2);
    for (const auto& x : g.matrices()) {
      const std::uint64_t member = la::index_of(f, la::mul(f, x, a));
      visited[member] = 1;
      if (std::abs(spectrum[member] - spectrum[idx]) > 1e-9) rep.class_constant = false;
    }

    SpectrumEntry e;
    e.representative = a;
    e.invariant = invariants(f, a);
    e.value = spectrum[idx];
    const int rk = la::rank(f, a);
    if (rk == 0) {
      e.branch = Branch::Zero;
      e.bound = static_cast<double>(g.size());
      e.pass = std::abs(e.value - Complex(e.bound, 0.0)) < 1e-9;
    } else if (rk == 2) {
      const auto& inv = e.invariant;
      e.closed_form = o2_eigenvalue_closed_form(f, inv);
      if (std::abs(*e.closed_form - e.value) > 1e-6) rep.closed_forms_match = false;
      if (inv.l1 == inv.l2 && inv.l1.v != 0 && inv.mu.v == 0) {
        e.branch = Branch::EqualLengthsOrthogonal;
        e.bound = 2.0 * sq;
        e.pass = std::abs(e.value - Complex(so2, 0.0)) <= e.bound + 1e-9;
      } else {
        e.branch = Branch::Nondegenerate;
        e.bound = 4.0 * sq;
        e.pass = std::abs(e.value) <= e.bound + 1e-9;
      }
    } else {
      const auto [rot, ref] = o2_linear_forms(f, a);
      if (la::is_zero(rot) || la::is_zero(ref)) {
        e.branch = Branch::RankOneIsotropic;
        e.bound = so2 + 2.0 * sq;
      } else {
        e.branch = Branch::RankOne;
        e.bound = 4.0 * sq;
      }
      e.pass = std::abs(e.value) <= e.bound + 1e-9;
    }
    rep.entries.push_back(std::move(e));
  }

  rep.symmetric = true;
  for (const auto& t : enumerate_classes(f)) {
    const TriangleInvariant swapped{t.l2, t.l1, t.mu};
    const Complex lhs = cayley_eigenvalue(f, class_representative(f, t), g);
    const Complex rhs = cayley_eigenvalue(f, class_representative(f, swapped), g);
    if (std::abs(lhs - rhs) > 1e-9) rep.symmetric = false;
  }
  return rep;
}

SpectrumReport sphere_report(const Field& f, int d) {
  const ConnectionSet g = ConnectionSet::unit_sphere(f, d);
  const auto spectrum = full_spectrum(f, g);
  const double bound = 2.0 * root_q(f);

  SpectrumReport rep;
  rep.q = f.q();
  rep.group_size = g.size();
  rep.gap = spectral_gap_param(spectrum, g.size());
  rep.class_constant = true;
  rep.symmetric = true;
  rep.closed_forms_match = true;

  double parseval = 0.0;
  Complex total{0.0, 0.0};
  for (const auto& v : spectrum) {
    parseval += std::norm(v);
    total += v;
  }
  const double expected_parseval = static_cast<double>(spectrum.size()) * static_cast<double>(g.size());
  rep.parseval_relative_error = std::abs(parseval - expected_parseval) / expected_parseval;
  rep.sum_of_eigenvalues = std::abs(total);

  for (std::uint64_t idx = 0; idx < spectrum.size(); ++idx) {
    SpectrumEntry e;
    e.vector_representative = la::vector_at(f, idx, d);
    e.value = spectrum[idx];
    if (idx == 0) {
      e.branch = Branch::SphereTrivial;
      e.bound = static_cast<double>(g.size());
      e.pass = std::abs(e.value - Complex(e.bound, 0.0)) < 1e-9;
    } else {
      e.branch = Branch::SphereNontrivial;
      e.bound = d == 2 ? bound : 0.0;
      e.pass = d != 2 || std::abs(e.value) < bound;
    }
    rep.entries.push_back(std::move(e));
  }
  return rep;
}

}  // namespace orthosum
