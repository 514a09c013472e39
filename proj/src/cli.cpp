#include "orthosum/cli.hpp"

#include <chrono>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "orthosum/error.hpp"
#include "orthosum/field.hpp"
#include "orthosum/kernels.hpp"
#include "orthosum/oracle.hpp"
#include "orthosum/orthogonal.hpp"
#include "orthosum/spectrum.hpp"
#include "orthosum/triangle.hpp"
#include "orthosum/vector_geometry.hpp"

namespace orthosum::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  UsageError(const std::string& flag, const std::string& what) : std::runtime_error(flag + ": " + what) {}
};

struct Common {
  long long q = 0;
  long long p = 0;
  long long n = 1;
  std::string format = "json";
  std::string out_path;
  int threads = 0;
  bool verbose = false;
};

Field make_field(const Common& c) {
  try {
    if (c.q != 0) return Field::of_order(c.q);
    if (c.p != 0) return Field::make(c.p, c.n);
  } catch (const Error& e) {
    throw UsageError(c.q != 0 ? "--q" : "--p", e.what());
  }
  throw UsageError("--q", "a field is required (--q Q, or --p P with optional --n N)");
}

// ---- literals -------------------------------------------------------------

Elem parse_elem(const Field& f, const json& j, const std::string& flag) {
  if (j.is_number_integer()) return f.from_int(j.get<long long>());
  if (j.is_array()) {
    std::vector<long long> coeffs;
    for (const auto& c : j) {
      if (!c.is_number_integer()) throw UsageError(flag, "coefficients must be integers");
      coeffs.push_back(c.get<long long>());
    }
    try {
      return f.from_coeffs(coeffs);
    } catch (const Error& e) {
      throw UsageError(flag, e.what());
    }
  }
  throw UsageError(flag, "field literal must be an integer or a coefficient list");
}

json parse_json(const std::string& text, const std::string& flag) {
  try {
    return json::parse(text);
  } catch (const json::exception&) {
    throw UsageError(flag, "not valid JSON: " + text);
  }
}

FqVector parse_vector(const Field& f, const std::string& text, const std::string& flag) {
  const json j = parse_json(text, flag);
  if (!j.is_array() || j.empty()) throw UsageError(flag, "expected a non-empty array of field literals");
  FqVector v;
  for (const auto& x : j) v.push_back(parse_elem(f, x, flag));
  return v;
}

FqMatrix parse_matrix(const Field& f, const std::string& text, const std::string& flag) {
  const json j = parse_json(text, flag);
  if (!j.is_array() || j.empty()) throw UsageError(flag, "expected a square array of rows");
  const int d = static_cast<int>(j.size());
  FqMatrix m(d);
  for (int r = 0; r < d; ++r) {
    if (!j[r].is_array() || static_cast<int>(j[r].size()) != d) throw UsageError(flag, "matrix must be square");
    for (int c = 0; c < d; ++c) m.at(r, c) = parse_elem(f, j[r][c], flag);
  }
  return m;
}

Elem parse_scalar(const Field& f, const std::string& text, const std::string& flag) {
  return parse_elem(f, parse_json(text, flag), flag);
}

json elem_json(const Field& f, Elem e) {
  if (f.is_prime_field()) return e.v;
  return f.coeffs(e);
}

json vector_json(const Field& f, const FqVector& v) {
  json out = json::array();
  for (Elem e : v) out.push_back(elem_json(f, e));
  return out;
}

json matrix_json(const Field& f, const FqMatrix& m) {
  json out = json::array();
  for (int r = 0; r < m.dim(); ++r) out.push_back(vector_json(f, m.row(r)));
  return out;
}

// ---- output ---------------------------------------------------------------

std::string csv_cell(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  const std::string s = v.dump();
  if (s.find(',') == std::string::npos && s.find('"') == std::string::npos) return s;
  std::string quoted = "\"";
  for (char ch : s) {
    if (ch == '"') quoted += '"';
    quoted += ch;
  }
  return quoted + "\"";
}

std::string pretty_cell(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

/// Rows of one table; every row has the same keys as `columns`.
void emit_table(std::ostream& os, const std::string& format, const std::vector<std::string>& columns,
                const std::vector<json>& rows) {
  if (format == "json") {
    for (const auto& r : rows) os << r.dump() << '\n';
    return;
  }
  if (format == "csv") {
    for (std::size_t i = 0; i < columns.size(); ++i) os << (i ? "," : "") << columns[i];
    os << '\n';
    for (const auto& r : rows) {
      for (std::size_t i = 0; i < columns.size(); ++i) os << (i ? "," : "") << csv_cell(r.at(columns[i]));
      os << '\n';
    }
    return;
  }
  std::vector<std::size_t> width(columns.size());
  for (std::size_t i = 0; i < columns.size(); ++i) {
    width[i] = columns[i].size();
    for (const auto& r : rows) width[i] = std::max(width[i], pretty_cell(r.at(columns[i])).size());
  }
  auto line = [&](auto cell) {
    for (std::size_t i = 0; i < columns.size(); ++i) {
      const std::string s = cell(i);
      os << (i ? "  " : "") << s << std::string(width[i] - s.size(), ' ');
    }
    os << '\n';
  };
  line([&](std::size_t i) { return columns[i]; });
  for (const auto& r : rows) line([&](std::size_t i) { return pretty_cell(r.at(columns[i])); });
}

void emit_record(std::ostream& os, const std::string& format, const json& record) {
  if (format == "json") {
    os << record.dump() << '\n';
    return;
  }
  std::vector<std::string> keys;
  for (auto it = record.begin(); it != record.end(); ++it) keys.push_back(it.key());
  if (format == "csv") {
    emit_table(os, format, keys, {record});
    return;
  }
  std::size_t w = 0;
  for (const auto& k : keys) w = std::max(w, k.size());
  for (const auto& k : keys) os << k << std::string(w - k.size(), ' ') << "  " << pretty_cell(record.at(k)) << '\n';
}

// ---- commands -------------------------------------------------------------

struct Outcome {
  std::string text;
  bool pass = true;
};

Outcome cmd_field(const Common& c, const std::string& element) {
  const Field f = make_field(c);
  std::ostringstream os;
  json rec;
  rec["p"] = f.p();
  rec["n"] = f.n();
  rec["q"] = f.q();
  rec["modulus"] = std::vector<std::uint32_t>(f.modulus().begin(), f.modulus().end());
  rec["i"] = f.has_i() ? elem_json(f, f.i()) : json(nullptr);
  if (!element.empty()) {
    const Elem x = parse_scalar(f, element, "--element");
    rec["element"] = elem_json(f, x);
    rec["legendre"] = to_int(f.legendre(x));
    json roots = json::array();
    for (Elem r : f.sqrt(x)) roots.push_back(elem_json(f, r));
    rec["sqrt"] = roots;
    rec["trace"] = f.trace(x);
    rec["inverse"] = x.v == 0 ? json(nullptr) : elem_json(f, f.inv(x));
  }
  emit_record(os, c.format, rec);
  return {os.str(), true};
}

Outcome cmd_decompose_vector(const Common& c, const std::string& vec, bool with_oracle) {
  const Field f = make_field(c);
  const FqVector v = parse_vector(f, vec, "--vector");
  if (v.size() < 2) throw UsageError("--vector", "unit sums need dimension >= 2");
  const auto dec = decompose_unit_sum(f, v);
  const int bound = unit_sum_bound(f, static_cast<int>(v.size()), la::is_zero(v));
  const bool verified = dec.verify(f) && dec.count() <= bound;
  json parts = json::array();
  for (const auto& p : dec.parts) parts.push_back(vector_json(f, p));
  json rec{{"target", vector_json(f, v)}, {"parts", parts}, {"count", dec.count()}, {"bound", bound}, {"verified", verified}};
  if (with_oracle) rec["oracle_min"] = oracle::min_unit_sum(f, v);
  std::ostringstream os;
  emit_record(os, c.format, rec);
  return {os.str(), verified};
}

Outcome cmd_decompose_matrix(const Common& c, const std::string& mat, std::optional<bool> emit_parts) {
  const Field f = make_field(c);
  const FqMatrix a = parse_matrix(f, mat, "--matrix");
  if (a.dim() < 2) throw UsageError("--matrix", "orthogonal sums need dimension >= 2");
  const auto dec = decompose_orthogonal(f, a);
  const bool verified = dec.verify(f);
  json rec{{"target", matrix_json(f, a)}};
  if (emit_parts.value_or(a.dim() <= 3)) {
    json parts = json::array();
    for (const auto& p : dec.parts) parts.push_back(matrix_json(f, p.matrix()));
    rec["parts"] = parts;
  }
  rec["count"] = dec.parts.size();
  rec["verified"] = verified;
  std::ostringstream os;
  emit_record(os, c.format, rec);
  return {os.str(), verified};
}

Outcome cmd_triangles_count(const Common& c, bool check) {
  const Field f = make_field(c);
  json rec{{"q", f.q()}, {"count", count_classes(f.q())}};
  bool pass = true;
  if (check) {
    const auto census = oracle::congruence_orbits(f);
    rec["orbit_count"] = census.orbit_count;
    pass = census.orbit_count == count_classes(f.q());
  }
  std::ostringstream os;
  if (c.format == "json" || check) {
    emit_record(os, c.format, rec);
  } else {
    os << count_classes(f.q()) << '\n';
  }
  return {os.str(), pass};
}

Outcome cmd_triangles_census(const Common& c) {
  const Field f = make_field(c);
  const auto classes = enumerate_classes(f);
  const auto formula = count_classes(f.q());
  std::ostringstream os;
  if (c.format == "json") {
    json rows = json::array();
    for (const auto& t : classes) rows.push_back({elem_json(f, t.l1), elem_json(f, t.l2), elem_json(f, t.mu)});
    os << json{{"q", f.q()}, {"classes", rows}, {"count", classes.size()}, {"formula", formula}}.dump() << '\n';
  } else {
    std::vector<json> rows;
    for (const auto& t : classes) rows.push_back({{"q", f.q()}, {"L1", elem_json(f, t.l1)}, {"L2", elem_json(f, t.l2)}, {"mu", elem_json(f, t.mu)}});
    emit_table(os, c.format, {"q", "L1", "L2", "mu"}, rows);
    os << "# classes=" << classes.size() << " formula=" << formula << '\n';
  }
  return {os.str(), classes.size() == formula};
}

Outcome cmd_triangles_classify(const Common& c, const std::string& mat) {
  const Field f = make_field(c);
  const FqMatrix t = parse_matrix(f, mat, "--matrix");
  if (t.dim() != 2) throw UsageError("--matrix", "triangles are 2x2 matrices");
  const auto inv = invariants(f, t);
  json rec{{"L1", elem_json(f, inv.l1)},
           {"L2", elem_json(f, inv.l2)},
           {"mu", elem_json(f, inv.mu)},
           {"L3", elem_json(f, third_side(f, inv))},
           {"nondegenerate", la::det(f, t).v != 0},
           {"realizable", is_realizable(f, inv)}};
  std::ostringstream os;
  emit_record(os, c.format, rec);
  return {os.str(), true};
}

Outcome cmd_triangles_congruent(const Common& c, const std::string& m1, const std::string& m2) {
  const Field f = make_field(c);
  const FqMatrix a = parse_matrix(f, m1, "--matrix");
  const FqMatrix b = parse_matrix(f, m2, "--matrix2");
  if (a.dim() != 2 || b.dim() != 2) throw UsageError("--matrix", "triangles are 2x2 matrices");
  bool result = false;
  try {
    result = congruent(f, a, b);
  } catch (const Error& e) {
    throw UsageError("--matrix", e.what());
  }
  std::ostringstream os;
  emit_record(os, c.format, json{{"congruent", result}});
  return {os.str(), true};
}

Outcome cmd_triangles_sides(const Common& c, const std::string& l1, const std::string& l2, const std::string& l3) {
  const Field f = make_field(c);
  const Elem a = parse_scalar(f, l1, "--l1"), b = parse_scalar(f, l2, "--l2"), d = parse_scalar(f, l3, "--l3");
  std::ostringstream os;
  emit_record(os, c.format, json{{"exists", triangle_exists_with_sides(f, a, b, d)}, {"mu", elem_json(f, mu_from_sides(f, a, b, d))}});
  return {os.str(), true};
}

Outcome cmd_spectrum(const Common& c, const std::string& group, const std::string& report, int d) {
  const Field f = make_field(c);
  const bool full = report == "full";
  const bool o2 = group == "o2";
  const SpectrumReport rep = o2 ? bound_report(f) : sphere_report(f, d);

  std::vector<std::string> columns;
  if (full) columns.push_back(o2 ? "matrix" : "m");
  if (o2) {
    columns.insert(columns.end(), {"L1", "L2", "mu"});
  } else {
    for (int i = 1; i <= d; ++i) columns.push_back("m" + std::to_string(i));
  }
  columns.insert(columns.end(), {"re", "im", "branch", "pass"});

  std::vector<json> rows;
  for (const auto& e : rep.entries) {
    json r;
    if (o2) {
      if (full) r["matrix"] = matrix_json(f, e.representative);
      r["L1"] = elem_json(f, e.invariant.l1);
      r["L2"] = elem_json(f, e.invariant.l2);
      r["mu"] = elem_json(f, e.invariant.mu);
    } else {
      if (full) r["m"] = vector_json(f, e.vector_representative);
      for (int i = 0; i < d; ++i) r["m" + std::to_string(i + 1)] = elem_json(f, e.vector_representative[i]);
    }
    r["re"] = e.value.real();
    r["im"] = e.value.imag();
    r["branch"] = std::string(to_string(e.branch));
    r["pass"] = e.pass;
    rows.push_back(std::move(r));
  }

  std::ostringstream os;
  if (c.format == "json") {
    json entries = json::array();
    for (auto& r : rows) entries.push_back(std::move(r));
    json rec{{"q", f.q()},
             {"group", group},
             {"group_size", rep.group_size},
             {"max_nontrivial", rep.gap.max_nontrivial},
             {"n_star", rep.gap.n_star},
             {"class_constant", rep.class_constant},
             {"symmetric", rep.symmetric},
             {"closed_forms_match", rep.closed_forms_match},
             {"parseval_relative_error", rep.parseval_relative_error},
             {"all_pass", rep.all_pass()},
             {"entries", entries}};
    os << rec.dump() << '\n';
  } else {
    emit_table(os, c.format, columns, rows);
    if (c.format == "pretty") {
      os << "group_size=" << rep.group_size << " n_star=" << rep.gap.n_star << " all_pass=" << (rep.all_pass() ? "true" : "false") << '\n';
    }
  }
  return {os.str(), rep.all_pass()};
}

Outcome cmd_oracle(const Common& c, const std::string& kind, int d, const std::string& vec, const std::string& mat) {
  const Field f = make_field(c);
  std::ostringstream os;
  if (!vec.empty()) {
    const FqVector v = parse_vector(f, vec, "--vector");
    emit_record(os, c.format, json{{"target", vector_json(f, v)}, {"min", oracle::min_unit_sum(f, v)}});
    return {os.str(), true};
  }
  if (!mat.empty()) {
    const FqMatrix a = parse_matrix(f, mat, "--matrix");
    emit_record(os, c.format, json{{"target", matrix_json(f, a)}, {"min", oracle::min_orth_sum(f, a)}});
    return {os.str(), true};
  }
  oracle::DistanceMap map;
  json witness;
  std::size_t gens = 0;
  if (kind == "unit") {
    const auto sph = sphere(f, f.one(), d);
    gens = sph.size();
    map = oracle::sumset_closure(f, sph, d);
    witness = vector_json(f, la::vector_at(f, map.diameter_witness, d));
  } else {
    const auto g = oracle::orthogonal_generators(f, d);
    gens = g.size();
    map = oracle::sumset_closure(f, g, d);
    witness = matrix_json(f, la::matrix_at(f, map.diameter_witness, d));
  }
  emit_record(os, c.format,
              json{{"kind", kind}, {"q", f.q()}, {"d", d}, {"generators", gens}, {"diameter", map.diameter},
                   {"witness", witness}, {"all_reachable", map.all_reachable}});
  return {os.str(), true};
}

Outcome cmd_verify_all(const Common& c, long long qmax, bool deep, int samples) {
  oracle::SuiteOptions opts;
  opts.qs.clear();
  for (auto q : odd_prime_powers(3, static_cast<std::uint32_t>(qmax))) opts.qs.push_back(q);
  if (opts.qs.empty()) throw UsageError("--qmax", "no odd prime power in range");
  if (deep) opts.dims.push_back(4);
  opts.samples = samples;
  const auto rows = oracle::verify_suite(opts);
  bool pass = true;
  std::vector<json> out;
  for (const auto& r : rows) {
    pass = pass && r.pass;
    out.push_back(r.to_json());
  }
  std::ostringstream os;
  emit_table(os, c.format, {"theorem", "q", "d", "expected", "observed", "pass"}, out);
  return {os.str(), pass};
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sums of unit vectors and orthogonal matrices over finite fields"};
  app.require_subcommand(1);
  app.fallthrough();

  Common common;
  app.add_option("--q", common.q, "Field order (odd prime power)");
  app.add_option("--p", common.p, "Field characteristic");
  app.add_option("--n", common.n, "Extension degree");
  app.add_option("--format", common.format, "Output format")->check(CLI::IsMember({"json", "csv", "pretty"}));
  app.add_option("--out", common.out_path, "Write results to this file");
  app.add_option("--threads", common.threads, "OpenMP threads (0 = runtime default)")->check(CLI::NonNegativeNumber);
  app.add_flag("--verbose", common.verbose, "Timing on stderr");

  std::function<Outcome()> action;

  auto* field = app.add_subcommand("field", "Field parameters and element queries");
  std::string element;
  field->add_option("--element", element, "Field literal to inspect");
  field->callback([&] { action = [&] { return cmd_field(common, element); }; });

  auto* dvec = app.add_subcommand("decompose-vector", "Write a vector as a sum of unit vectors");
  std::string vec;
  bool with_oracle = false;
  dvec->add_option("--vector", vec, "JSON array of field literals")->required();
  dvec->add_flag("--oracle", with_oracle, "Also report the brute-force minimum");
  dvec->callback([&] { action = [&] { return cmd_decompose_vector(common, vec, with_oracle); }; });

  auto* dmat = app.add_subcommand("decompose-matrix", "Write a matrix as a sum of orthogonal matrices");
  std::string mat;
  std::optional<bool> emit_parts;
  dmat->add_option("--matrix", mat, "JSON array of rows")->required();
  dmat->add_flag("--emit-parts,!--no-emit-parts", emit_parts, "Include the parts list (default: d <= 3)");
  dmat->callback([&] { action = [&] { return cmd_decompose_matrix(common, mat, emit_parts); }; });

  auto* tri = app.add_subcommand("triangles", "Triangle congruence classes");
  tri->require_subcommand(1);
  auto* tcount = tri->add_subcommand("count", "Number of nondegenerate congruence classes");
  bool check = false;
  tcount->add_flag("--check", check, "Confirm by explicit orbit enumeration");
  tcount->callback([&] { action = [&] { return cmd_triangles_count(common, check); }; });
  auto* tcensus = tri->add_subcommand("census", "List realizable (L1, L2, mu)");
  tcensus->callback([&] { action = [&] { return cmd_triangles_census(common); }; });
  auto* tclassify = tri->add_subcommand("classify", "Invariants of a 2x2 triangle matrix");
  std::string tmat;
  tclassify->add_option("--matrix", tmat, "JSON 2x2 matrix")->required();
  tclassify->callback([&] { action = [&] { return cmd_triangles_classify(common, tmat); }; });
  auto* tcong = tri->add_subcommand("congruent", "Congruence test for two invertible triangles");
  std::string tmat2;
  tcong->add_option("--matrix", tmat, "First 2x2 matrix")->required();
  tcong->add_option("--matrix2", tmat2, "Second 2x2 matrix")->required();
  tcong->callback([&] { action = [&] { return cmd_triangles_congruent(common, tmat, tmat2); }; });
  auto* tsides = tri->add_subcommand("sides", "Existence of a triangle with given side lengths");
  std::string l1, l2, l3;
  tsides->add_option("--l1", l1)->required();
  tsides->add_option("--l2", l2)->required();
  tsides->add_option("--l3", l3)->required();
  tsides->callback([&] { action = [&] { return cmd_triangles_sides(common, l1, l2, l3); }; });
  for (auto* s : {tcount, tcensus, tclassify, tcong, tsides}) s->fallthrough();

  auto* spec_cmd = app.add_subcommand("spectrum", "Eigenvalues of Cayley digraphs");
  std::string group = "o2", report = "bounds";
  int spec_d = 2;
  spec_cmd->add_option("--group", group)->check(CLI::IsMember({"o2", "sphere"}));
  spec_cmd->add_option("--report", report)->check(CLI::IsMember({"bounds", "full"}));
  spec_cmd->add_option("--d", spec_d, "Sphere dimension")->check(CLI::Range(1, 8));
  spec_cmd->callback([&] { action = [&] { return cmd_spectrum(common, group, report, spec_d); }; });

  auto* orc = app.add_subcommand("oracle", "Brute-force sumset distances");
  std::string kind = "unit", ovec, omat;
  int orc_d = 2;
  orc->add_option("--kind", kind)->check(CLI::IsMember({"unit", "orth"}));
  orc->add_option("--d", orc_d)->check(CLI::Range(1, 8));
  orc->add_option("--vector", ovec, "Report min unit sum for this vector");
  orc->add_option("--matrix", omat, "Report min orthogonal sum for this matrix");
  orc->callback([&] { action = [&] { return cmd_oracle(common, kind, orc_d, ovec, omat); }; });

  auto* all = app.add_subcommand("verify-all", "Run every check and print the ledger");
  long long qmax = 13;
  bool deep = false;
  int samples = 64;
  all->add_option("--qmax", qmax)->check(CLI::Range(3LL, 10000LL));
  all->add_flag("--deep", deep, "Include d = 4");
  all->add_option("--samples", samples, "Random matrices per non-exhaustive (q, d)")->check(CLI::PositiveNumber);
  all->callback([&] { action = [&] { return cmd_verify_all(common, qmax, deep, samples); }; });

  for (auto* s : {field, dvec, dmat, tri, spec_cmd, orc, all}) s->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  if (common.threads > 0) kernels::set_threads(common.threads);

  const auto start = std::chrono::steady_clock::now();
  Outcome result;
  try {
    result = action();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
    return kExitUsage;
  }
  if (common.verbose) {
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    err << "threads=" << kernels::max_threads() << " seconds=" << secs << '\n';
  }

  if (common.out_path.empty()) {
    out << result.text;
  } else {
    std::ofstream file(common.out_path);
    if (!file) {
      err << "error: --out: cannot open " << common.out_path << '\n';
      return kExitUsage;
    }
    file << result.text;
  }
  return result.pass ? kExitOk : kExitFailedCheck;
}

}  // namespace orthosum::cli
