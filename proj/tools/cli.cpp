#include "cli.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "bicomplex/eigenvalues.hpp"
#include "bicomplex/jordan.hpp"
#include "bicomplex/lattice.hpp"
#include "bicomplex/operator.hpp"
#include "bicomplex/spectral.hpp"
#include "examples.hpp"
#include "json_io.hpp"

namespace bicx::cli {

using io::Backend;
using io::json;
using io::ParseError;

std::map<std::string, double> default_tolerances() {
  return {
      {"det", 1e-10},          // relative zero test for floating determinants
      {"selfadjoint", 1e-10},  // ||A - A*|| / ||A|| accepted as self-adjoint
      {"convergence", 1e-14},  // Jacobi off-diagonal stopping threshold
      {"separation", 1e-8},    // minimum eigenvalue gap for pairing enumeration
      {"membership", 1e-9},    // spectrum membership on the floating backend
      {"canonical", 1e-10},    // orthogonality check of finite-rank forms
      {"residual", 1e-9},      // pass bound for example reconstructions
  };
}

namespace {

struct RunConfig {
  std::optional<Backend> backend;
  std::string format = "json";
  std::map<std::string, double> tol = default_tolerances();
  std::uint64_t seed = 0;

  JacobiOptions jacobi() const {
    JacobiOptions o;
    o.selfadjoint_tol = tol.at("selfadjoint");
    o.convergence_tol = tol.at("convergence");
    return o;
  }
};

void parse_tolerances(const std::vector<std::string>& items, RunConfig& cfg) {
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw ParseError("--tol expects name=value, got '" + item + "'");
    const std::string name = item.substr(0, eq);
    const std::string value = item.substr(eq + 1);
    if (!cfg.tol.count(name)) throw ParseError("unknown tolerance '" + name + "'");
    double x = 0;
    try {
      std::size_t used = 0;
      x = std::stod(value, &used);
      if (used != value.size()) throw std::invalid_argument(value);
    } catch (const std::exception&) {
      throw ParseError("tolerance '" + name + "' needs a number, got '" + value + "'");
    }
    if (!(x > 0)) throw ParseError("tolerance '" + name + "' must be positive");
    cfg.tol[name] = x;
  }
}

json load(const std::string& path, std::istream& in) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  } else {
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open input file '" + path + "'");
    text.assign(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

const json& field(const json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  return doc.at(key);
}

Backend pick_backend(const RunConfig& cfg, const json& doc) { return cfg.backend ? *cfg.backend : io::infer_backend(doc); }

template <class Fn>
json with_backend(Backend b, Fn&& fn) {
  if (b == Backend::exact) return fn.template operator()<Rational>();
  return fn.template operator()<double>();
}

void require_format(const RunConfig& cfg, std::initializer_list<const char*> allowed, const std::string& cmd) {
  for (const char* f : allowed)
    if (cfg.format == f) return;
  throw ParseError("format '" + cfg.format + "' is not available for " + cmd);
}

std::string num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

// Floating backends read exact matrices by rounding; exact backends read
// floating matrices as the dyadic rationals they are.
BicomplexMatrixD matrix_d(const json& doc) {
  return io::infer_backend(doc) == Backend::exact ? to_double(io::read_matrix<Rational>(doc))
                                                   : io::read_matrix<double>(doc);
}

BicomplexMatrixQ matrix_q(const json& doc) {
  return io::infer_backend(doc) == Backend::exact ? io::read_matrix<Rational>(doc)
                                                   : to_rational(io::read_matrix<double>(doc));
}

template <Real R>
HyperbolicValue<R> read_hyperbolic(const json& j) {
  if (!j.is_array() || j.size() != 2) throw ParseError("a hyperbolic value is [h1, h2]");
  if constexpr (is_exact_v<R>) {
    return HyperbolicValue<R>(io::read_complex_q(j[0]).re, io::read_complex_q(j[1]).re);
  } else {
    return HyperbolicValue<R>(io::read_complex_d(j[0]).re, io::read_complex_d(j[1]).re);
  }
}

template <Real R>
json write_hyperbolic(const HyperbolicValue<R>& h) {
  if constexpr (is_exact_v<R>) {
    return json{{h.squared ? "squared" : "value", {io::write(h.h1), io::write(h.h2)}}};
  } else {
    return json{{h.squared ? "squared" : "value", {h.h1, h.h2}}};
  }
}

// ---------------------------------------------------------------------------

json cmd_scalar(const RunConfig& cfg, const json& doc, const std::string& op) {
  return with_backend(pick_backend(cfg, doc), [&]<Real R>() -> json {
    auto a = [&] { return io::read_scalar<R>(field(doc, "a")); };
    auto b = [&] { return io::read_scalar<R>(field(doc, "b")); };
    if (op == "add") return {{"result", io::write(add(a(), b()))}};
    if (op == "sub") return {{"result", io::write(sub(a(), b()))}};
    if (op == "mul") return {{"result", io::write(mul(a(), b()))}};
    if (op == "invert") return {{"result", io::write(invert(a()))}};
    if (op == "conjugate") return {{"result", io::write(conjugate(a()))}};
    if (op == "euclidean") {
      const auto [z1, z2] = a().to_euclidean();
      return {{"eucl", {io::write(z1), io::write(z2)}}};
    }
    if (op == "norm") return {{"norm", write_hyperbolic(hyperbolic_norm(a()))}};
    if (op == "root") {
      const auto n = field(doc, "n").get<unsigned>();
      if (n == 0) throw ParseError("\"n\" must be positive");
      json roots = json::array();
      if (doc.contains("branches")) {
        const auto& br = doc.at("branches");
        roots.push_back(io::write(nth_root(a(), n, br.at(0).get<unsigned>(), br.at(1).get<unsigned>())));
      } else {
        for (unsigned k1 = 0; k1 < n; ++k1)
          for (unsigned k2 = 0; k2 < n; ++k2) roots.push_back(io::write(nth_root(a(), n, k1, k2)));
      }
      return {{"roots", roots}};
    }
    if (op == "ball") {
      const bool inside = ball_contains(io::read_scalar<R>(field(doc, "center")),
                                        read_hyperbolic<R>(field(doc, "radius")),
                                        io::read_scalar<R>(field(doc, "point")));
      return {{"contains", inside}};
    }
    if (op == "inf") {
      std::vector<HyperbolicValue<R>> values;
      for (const auto& v : field(doc, "values")) values.push_back(read_hyperbolic<R>(v));
      return {{"inf", write_hyperbolic(hyperbolic_inf(std::span<const HyperbolicValue<R>>(values)))}};
    }
    if (op == "compare") {
      static const char* names[] = {"less", "equal", "greater", "incomparable"};
      const auto c = compare(read_hyperbolic<R>(field(doc, "a")), read_hyperbolic<R>(field(doc, "b")));
      return {{"ordering", names[static_cast<int>(c)]}};
    }
    throw ParseError("unknown scalar op '" + op + "'");
  });
}

json cmd_matmul(const RunConfig& cfg, const json& doc) {
  return with_backend(pick_backend(cfg, doc), [&]<Real R>() -> json {
    const auto a = io::read_matrix<R>(field(doc, "a"));
    const auto b = io::read_matrix<R>(field(doc, "b"));
    return {{"result", io::write(mat_mul(a, b))}};
  });
}

json cmd_det(const RunConfig& cfg, const json& doc) {
  return with_backend(pick_backend(cfg, doc), [&]<Real R>() -> json {
    const auto a = io::read_matrix<R>(doc);
    const auto d = determinant(a);
    json singular = json::array();
    if (a.is_square()) {
      if (determinant_vanishes(a.m1(), d.c1(), cfg.tol.at("det"))) singular.push_back(1);
      if (determinant_vanishes(a.m2(), d.c2(), cfg.tol.at("det"))) singular.push_back(2);
    }
    return {{"det", io::write(d)}, {"invertible", singular.empty()}, {"singular_components", singular}};
  });
}

json cmd_inverse(const RunConfig& cfg, const json& doc) {
  return with_backend(pick_backend(cfg, doc), [&]<Real R>() -> json {
    return {{"inverse", io::write(inverse(io::read_matrix<R>(doc), cfg.tol.at("det")))}};
  });
}

json write_blocks(const ComplexJordanData& d) {
  json out = json::array();
  for (const auto& b : d.blocks) out.push_back({{"eigenvalue", io::write(b.eigenvalue)}, {"size", b.size}});
  return out;
}

json write_jordan(const BicomplexJordanData& jd) {
  json eig1 = json::array(), eig2 = json::array();
  for (const auto& z : jd.comp1.eigenvalues) eig1.push_back(io::write(z));
  for (const auto& z : jd.comp2.eigenvalues) eig2.push_back(io::write(z));
  json alphabet = json::array();
  for (auto s : jd.superdiagonal_alphabet()) alphabet.push_back(to_string(s));
  return {{"p", io::write(jd.p)},
          {"j", io::write(jd.j)},
          {"blocks", {{"1", write_blocks(jd.comp1)}, {"2", write_blocks(jd.comp2)}}},
          {"eigenvalues", {{"1", eig1}, {"2", eig2}}},
          {"superdiagonal_alphabet", alphabet}};
}

json cmd_jordan(const json& doc, bool enumerate, std::size_t limit) {
  const auto jd = bicomplex_jordan(matrix_q(doc));
  if (!enumerate) return write_jordan(jd);
  json variants = json::array();
  for (const auto& v : enumerate_block_orders(jd, limit)) variants.push_back(write_jordan(v));
  return {{"count", variants.size()}, {"variants", variants}};
}

json write_subspace(const Subspace& s) {
  json basis = json::array();
  for (const auto& v : s.basis()) basis.push_back(io::write(v));
  return basis;
}

json cmd_lattice(const json& doc) {
  const auto l = bicomplex_lattice(matrix_q(doc));
  json nodes = json::array();
  for (std::size_t i = 0; i < l.size(); ++i) {
    nodes.push_back({{"label", l.labels[i]},
                     {"dims", {l.nodes[i].s1.dim(), l.nodes[i].s2.dim()}},
                     {"basis", {{"1", write_subspace(l.nodes[i].s1)}, {"2", write_subspace(l.nodes[i].s2)}}}});
  }
  return {{"nodes", nodes},
          {"covers", l.covers},
          {"complete", l.info.complete},
          {"family", l.info.family},
          {"warnings", l.info.warnings}};
}

json write_spectral(const BicomplexSpectralData& s) {
  return {{"p", io::write(s.p)},
          {"d", io::write(s.d)},
          {"pairing", s.pairing},
          {"residuals",
           {{"unitarity", io::write(s.residuals.unitarity)},
            {"reconstruction", io::write(s.residuals.reconstruction)},
            {"imaginary", io::write(s.residuals.imaginary)}}}};
}

json cmd_spectral(const RunConfig& cfg, const json& doc, bool all, const std::vector<std::size_t>& pairing) {
  const auto a = matrix_d(doc);
  if (all) {
    json out = json::array();
    for (const auto& s : enumerate_diagonalizations(a, cfg.tol.at("separation"), cfg.jacobi()))
      out.push_back(write_spectral(s));
    return {{"count", out.size()}, {"diagonalizations", out}};
  }
  return write_spectral(selfadjoint_diagonalize(a, pairing, cfg.jacobi()));
}

// ---------------------------------------------------------------------------
// operator subcommands

std::string tower_csv(const TowerReport& r) {
  std::ostringstream os;
  os << "dim,outside1,outside2,min_modulus1,min_modulus2,point_spectrum,invertible,certified,"
        "pairings_outside,diagonal_above,mixed_samples,mixed_in_spectrum,mixed_strict,mixed_relaxed\n";
  for (const auto& t : r.truncations) {
    os << t.dim << ',' << t.components[0].outside_count << ',' << t.components[1].outside_count << ','
       << num(t.components[0].min_modulus) << ',' << num(t.components[1].min_modulus) << ',' << t.point_spectrum_size
       << ',' << t.invertible_members << ',' << t.certified_eigenvalues << ',' << t.pairings_outside << ','
       << t.diagonal_above << ',' << t.mixed_samples << ',' << t.mixed_in_spectrum << ','
       << t.mixed_strict_eigenvalues << ',' << t.mixed_relaxed_witnesses << '\n';
  }
  return os.str();
}

json tower_json(const TowerReport& r) {
  json rows = json::array();
  for (const auto& t : r.truncations) {
    rows.push_back({{"dim", t.dim},
                    {"outside", {t.components[0].outside_count, t.components[1].outside_count}},
                    {"min_modulus", {t.components[0].min_modulus, t.components[1].min_modulus}},
                    {"point_spectrum", t.point_spectrum_size},
                    {"invertible_members", t.invertible_members},
                    {"certified_eigenvalues", t.certified_eigenvalues},
                    {"all_invertible_certified", t.all_invertible_certified},
                    {"pairings_outside", t.pairings_outside},
                    {"diagonal_above", t.diagonal_above},
                    {"one_component_members",
                     {{"samples", t.mixed_samples},
                      {"in_spectrum", t.mixed_in_spectrum},
                      {"eigenvalues", t.mixed_strict_eigenvalues},
                      {"one_component_eigenvectors", t.mixed_relaxed_witnesses}}}});
  }
  return {{"epsilon", io::write(r.epsilon)},
          {"limit_point", r.limit_witness},
          {"moduli_decrease", r.moduli_decrease},
          {"truncations", rows}};
}

SigmaSequence read_sigma(const json& doc) {
  SigmaSequence s;
  s.power2 = 2.0;
  if (!doc.contains("sigma")) return s;
  const auto& j = doc.at("sigma");
  if (j.contains("values")) {
    for (const auto& v : j.at("values")) {
      if (!v.is_array() || v.size() != 2) throw ParseError("sigma values are [h1, h2] pairs");
      s.explicit_values.emplace_back(v[0].get<double>(), v[1].get<double>());
    }
  } else if (j.contains("powers")) {
    s.power1 = j.at("powers").at(0).get<double>();
    s.power2 = j.at("powers").at(1).get<double>();
  } else {
    throw ParseError("\"sigma\" needs \"powers\" or \"values\"");
  }
  return s;
}

std::string cmd_tower(const RunConfig& cfg, const json& doc) {
  require_format(cfg, {"json", "csv"}, "operator tower");
  const auto sigma = read_sigma(doc);
  std::vector<std::size_t> dims{8, 16, 32};
  if (doc.contains("dims")) dims = doc.at("dims").get<std::vector<std::size_t>>();
  for (auto d : dims)
    if (d == 0) throw ParseError("dimensions must be positive");
  HyperbolicD eps(0.1, 0.1);
  if (doc.contains("epsilon")) eps = HyperbolicD(doc.at("epsilon").at(0).get<double>(), doc.at("epsilon").at(1).get<double>());
  const auto report = check_compact_spectral_properties(sigma, dims, eps, cfg.jacobi());
  return cfg.format == "csv" ? tower_csv(report) : tower_json(report).dump(2) + "\n";
}

std::string cmd_approx(const RunConfig& cfg, const json& doc) {
  require_format(cfg, {"json", "csv"}, "operator approx");
  const auto t = matrix_d(field(doc, "matrix"));
  std::vector<std::size_t> ranks;
  if (doc.contains("ranks")) {
    ranks = doc.at("ranks").get<std::vector<std::size_t>>();
  } else {
    for (std::size_t r = 0; r <= t.rows(); ++r) ranks.push_back(r);
  }
  const auto report = norm_limit_demo(t, ranks, cfg.jacobi());
  if (cfg.format == "csv") {
    std::ostringstream os;
    os << "rank,error1,error2,expected1,expected2,canonical\n";
    for (const auto& r : report.rows)
      os << r.rank << ',' << num(r.error.h1) << ',' << num(r.error.h2) << ',' << num(r.expected.h1) << ','
         << num(r.expected.h2) << ',' << (r.canonical ? "true" : "false") << '\n';
    return os.str();
  }
  json rows = json::array();
  for (const auto& r : report.rows)
    rows.push_back({{"rank", r.rank},
                    {"error", io::write(r.error)},
                    {"expected", io::write(r.expected)},
                    {"canonical", r.canonical}});
  return json{{"norm", io::write(report.norm)}, {"nonincreasing", report.nonincreasing}, {"rows", rows}}.dump(2) + "\n";
}

json cmd_riesz(const RunConfig& cfg, const json& doc) {
  const auto dim = field(doc, "dim").get<std::size_t>();
  const double r = field(doc, "r").get<double>();
  std::vector<BicomplexVectorD> basis;
  if (doc.contains("basis")) {
    for (const auto& v : doc.at("basis")) basis.push_back(io::read_vector<double>(v));
  } else {
    const auto k = field(doc, "subspace_dim").get<std::size_t>();
    std::mt19937_64 rng(cfg.seed);
    std::uniform_int_distribution<int> pick(-5, 5);
    for (std::size_t i = 0; i < k; ++i) {
      BicomplexVectorD v(dim);
      for (std::size_t c = 0; c < dim; ++c) {
        v.v1[c] = ComplexD(pick(rng), pick(rng));
        v.v2[c] = ComplexD(pick(rng), pick(rng));
      }
      basis.push_back(std::move(v));
    }
  }
  const auto y = riesz_witness(basis, dim, r);

  // Distance to X as the residual after orthogonal projection.
  double dist[2];
  for (int c = 1; c <= 2; ++c) {
    std::vector<ComplexVector<double>> vs;
    for (const auto& b : basis) vs.push_back(b.component(c));
    auto res = y.component(c);
    for (const auto& q : orthonormalize(vs)) {
      const ComplexD coef = dot(res, q);
      for (std::size_t i = 0; i < res.size(); ++i) res[i] -= coef * q[i];
    }
    dist[c - 1] = norm2(res);
  }
  return {{"witness", io::write(y)},
          {"norm", io::write(vector_hyperbolic_norm(y))},
          {"distance", {dist[0], dist[1]}},
          {"r", r}};
}

json error_payload(const std::string& name, const std::string& message,
                   const std::vector<Error::Field>& fields = {}) {
  json f = json::object();
  for (const auto& [k, v] : fields) f[k] = v;
  return {{"error", name}, {"message", message}, {"fields", f}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out) {
  CLI::App app{"Bicomplex matrix and operator toolkit", "bicx"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string backend, format = "json";
  std::vector<std::string> tols;
  std::uint64_t seed = 0;
  app.add_option("--backend", backend, "exact or float (default: inferred from the input)")
      ->check(CLI::IsMember({"exact", "float"}));
  app.add_option("--format", format, "json, csv (operator tower/approx) or dot (lattice)")
      ->check(CLI::IsMember({"json", "csv", "dot"}));
  app.add_option("--tol", tols, "name=value tolerance override, repeatable")->allow_extra_args(false);
  app.add_option("--seed", seed, "seed for randomized inputs");

  std::string input = "-";
  auto add_input = [&](CLI::App* sub) { sub->add_option("input", input, "JSON input file, '-' for stdin"); };

  std::string op;
  auto* scalar = app.add_subcommand("scalar", "scalar arithmetic, norms, roots and balls");
  scalar->add_option("--op", op, "add|sub|mul|invert|conjugate|euclidean|norm|root|ball|inf|compare")->required();
  add_input(scalar);

  auto* matmul = app.add_subcommand("matmul", "product of {\"a\": A, \"b\": B}");
  add_input(matmul);
  auto* det = app.add_subcommand("det", "componentwise determinant");
  add_input(det);
  auto* inv = app.add_subcommand("inverse", "componentwise inverse");
  add_input(inv);

  bool enumerate = false;
  std::size_t limit = 1024;
  auto* jordan = app.add_subcommand("jordan", "exact bicomplex Jordan form");
  jordan->add_flag("--enumerate-pairings", enumerate, "emit every block-permuted variant");
  jordan->add_option("--limit", limit, "cap on enumerated variants");
  add_input(jordan);

  auto* lattice = app.add_subcommand("lattice", "invariant subspace lattice diagram");
  add_input(lattice);

  bool all_pairings = false;
  std::vector<std::size_t> pairing;
  auto* spectral = app.add_subcommand("spectral", "unitary diagonalization of a self-adjoint matrix");
  spectral->add_flag("--all-pairings", all_pairings, "enumerate all n! pairings");
  spectral->add_option("--pairing", pairing, "permutation matching component-2 eigenvalues")
      ->delimiter(',')
      ->allow_extra_args(false);
  add_input(spectral);

  auto* oper = app.add_subcommand("operator", "compact operator checks");
  oper->require_subcommand(1);
  auto* tower = oper->add_subcommand("tower", "spectral tower of a diagonal compact operator");
  add_input(tower);
  auto* approx = oper->add_subcommand("approx", "best finite-rank approximation errors");
  add_input(approx);
  auto* riesz = oper->add_subcommand("riesz", "witness vector at distance r from a subspace");
  add_input(riesz);

  int which = 1;
  std::string example_input;
  auto* examples_cmd = app.add_subcommand("examples", "reproduce the worked examples");
  examples_cmd->add_option("--which", which, "1 or 2")->check(CLI::IsMember({1, 2}));
  examples_cmd->add_option("input", example_input, "optional {\"z\": scalar} for example 1");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    out << error_payload("ParseError", e.what()).dump(2) << "\n";
    return 2;
  }

  try {
    RunConfig cfg;
    if (!backend.empty()) cfg.backend = io::backend_from_string(backend);
    cfg.format = format;
    cfg.seed = seed;
    parse_tolerances(tols, cfg);

    std::string text;
    auto emit = [&](const json& j) { text = j.dump(2) + "\n"; };

    if (scalar->parsed()) {
      require_format(cfg, {"json"}, "scalar");
      emit(cmd_scalar(cfg, load(input, in), op));
    } else if (matmul->parsed()) {
      require_format(cfg, {"json"}, "matmul");
      emit(cmd_matmul(cfg, load(input, in)));
    } else if (det->parsed()) {
      require_format(cfg, {"json"}, "det");
      emit(cmd_det(cfg, load(input, in)));
    } else if (inv->parsed()) {
      require_format(cfg, {"json"}, "inverse");
      emit(cmd_inverse(cfg, load(input, in)));
    } else if (jordan->parsed()) {
      require_format(cfg, {"json"}, "jordan");
      emit(cmd_jordan(load(input, in), enumerate, limit));
    } else if (lattice->parsed()) {
      require_format(cfg, {"json", "dot"}, "lattice");
      const auto doc = load(input, in);
      if (cfg.format == "dot") {
        text = to_dot(bicomplex_lattice(matrix_q(doc)));
      } else {
        emit(cmd_lattice(doc));
      }
    } else if (spectral->parsed()) {
      require_format(cfg, {"json"}, "spectral");
      emit(cmd_spectral(cfg, load(input, in), all_pairings, pairing));
    } else if (tower->parsed()) {
      text = cmd_tower(cfg, load(input, in));
    } else if (approx->parsed()) {
      text = cmd_approx(cfg, load(input, in));
    } else if (riesz->parsed()) {
      require_format(cfg, {"json"}, "operator riesz");
      emit(cmd_riesz(cfg, load(input, in)));
    } else if (examples_cmd->parsed()) {
      require_format(cfg, {"json"}, "examples");
      if (which == 1) {
        examples::Example1Options o;
        o.det_tol = cfg.tol.at("det");
        o.residual_tol = cfg.tol.at("residual");
        o.jacobi = cfg.jacobi();
        BicomplexD z = examples::example1_default_z();
        if (!example_input.empty()) z = io::read_scalar<double>(field(load(example_input, in), "z"));
        emit(examples::example1(z, o));
      } else {
        emit(examples::example2());
      }
    }
    out << text;
    return 0;
  } catch (const ParseError& e) {
    out << error_payload("ParseError", e.what()).dump(2) << "\n";
    return 2;
  } catch (const json::exception& e) {
    out << error_payload("ParseError", e.what()).dump(2) << "\n";
    return 2;
  } catch (const Error& e) {
    out << error_payload(e.name(), e.what(), e.fields()).dump(2) << "\n";
    return 1;
  }
}

}  // namespace bicx::cli
