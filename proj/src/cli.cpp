#include <gwd/cli.hpp>

#include <gwd/acceptance.hpp>
#include <gwd/coupling.hpp>
#include <gwd/observables.hpp>
#include <gwd/reactions.hpp>
#include <gwd/regularization.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace gwd {

namespace {

// Raised by subcommand bodies when the achieved numerical accuracy is worse
// than the contract requires (exit code 2 rather than 1).
struct AccuracyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string num17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string cnum(const std::complex<double>& z) {
  if (z.imag() == 0.0) return num17(z.real());
  std::string s = num17(z.real());
  s += (z.imag() < 0 ? " - " : " + ");
  s += num17(std::abs(z.imag())) + "i";
  return s;
}

Rational spin_arg(const std::string& text) {
  Rational j = rational_from_string(text);
  if (j < 0 || !is_half_integer(j))
    throw std::domain_error("spin must be a nonnegative half-integer, got '" + text + "'");
  return j;
}

Rational halfint_arg(const std::string& text) {
  Rational m = rational_from_string(text);
  if (!is_half_integer(m))
    throw std::domain_error("projection must be a half-integer, got '" + text + "'");
  return m;
}

// Projection argument: a rational number, or the literal `smax` for the
// maximal value sqrt(j(j+1)), kept exact.
Scalar projection_arg(const std::string& text, const Rational& j) {
  if (text == "smax") return spin_magnitude(j);
  if (text == "-smax") return -spin_magnitude(j);
  return Scalar(rational_from_string(text));
}

struct WeightSpec {
  CosPoly poly;
  int order;
};

WeightSpec weight_arg(const std::string& name) {
  std::string w;
  for (char c : name) w.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (w == "1" || w == "none" || w == "p0") return {legendre_cos(0), 0};
  if (w == "cos" || w == "p1") return {legendre_cos(1), 1};
  if (w == "p2") return {legendre_cos(2), 2};
  if (w == "p3") return {legendre_cos(3), 3};
  if (w == "p4") return {legendre_cos(4), 4};
  throw std::domain_error("unknown weight '" + name + "' (use cos, p2, p3, p4)");
}

RmsPattern pattern_arg(const std::string& token) {
  auto p = parse_pattern(token);
  if (!p)
    throw std::domain_error(
        "unknown pattern '" + token +
        "' (use stretched-halves, vector-halves, scalar-halves, scalar-ones, or a-d)");
  return *p;
}

std::string exact_or_numeric(const Scalar& s) {
  if (!s.is_exact()) return num17(s.value());
  if (s.is_symbolic()) return s.str();
  return s.str() + " = " + num17(s.value());
}

std::string value_str(const RegularizedValue& v) {
  std::string s;
  if (!v.pi3.is_zero() || v.pi2.is_zero()) s += "(" + v.pi3.str() + ") pi^3";
  if (!v.pi2.is_zero()) {
    if (!s.empty()) s += " + ";
    s += "(" + v.pi2.str() + ") pi^2";
  }
  s += "  [= " + cnum(v.numeric()) + "]";
  if (v.continued) s += " (continued)";
  return s;
}

// --- subcommand bodies ------------------------------------------------------

int do_dfunc(std::ostream& out, const std::string& js, const std::string& ns,
             const std::string& ms, const std::optional<double>& theta) {
  Rational j = spin_arg(js);
  Scalar n = projection_arg(ns, j);
  Rational m = halfint_arg(ms);
  Wavefunction psi = Wavefunction::build(j, n, m);
  out << "state: j=" << to_string(j) << "  n=" << n.str() << "  m=" << to_string(m);
  if (psi.at_edge()) out << "  [edge state]";
  if (psi.is_null()) out << "  [identically zero]";
  out << "\n";
  out << "branch A: " << (psi.branch_a().empty() ? "0" : psi.branch_a().str()) << "\n";
  out << "branch B: " << (psi.branch_b().empty() ? "0" : psi.branch_b().str()) << "\n";
  out << "(theta parts per unit N; full value carries e^{i m phi} e^{i n chi})\n";
  if (theta) {
    std::complex<double> a = psi.evaluate_branch(0, *theta);
    std::complex<double> b = psi.evaluate_branch(1, *theta);
    out << "at theta=" << num17(*theta) << ": A=" << cnum(a) << "  B=" << cnum(b)
        << "  A+B=" << cnum(a + b) << "\n";
  }
  return 0;
}

int do_inner(std::ostream& out, const std::vector<std::string>& s, const std::string& wname) {
  Rational j1 = spin_arg(s[0]), j2 = spin_arg(s[3]);
  Scalar n1 = projection_arg(s[1], j1), n2 = projection_arg(s[4], j2);
  Rational m1 = halfint_arg(s[2]), m2 = halfint_arg(s[5]);
  WeightSpec w = weight_arg(wname);
  Wavefunction bra = Wavefunction::build(j1, n1, m1);
  Wavefunction ket = Wavefunction::build(j2, n2, m2);
  InnerProductBreakdown ip = inner_product(bra, ket, w.poly);
  if (ip.zero_by_selection) {
    out << "0 (selection rule: the phase labels n or m differ)\n";
    return 0;
  }
  out << "branch AA: " << value_str(ip.aa) << "\n";
  out << "branch AB: " << value_str(ip.ab) << "\n";
  out << "branch BA: " << value_str(ip.ba) << "\n";
  out << "branch BB: " << value_str(ip.bb) << "\n";
  out << "total:     " << value_str(ip.total) << "   (per |N|^2)\n";
  return 0;
}

int do_expect(std::ostream& out, const std::string& js, const std::string& ns,
              const std::string& ms, const std::string& wname) {
  Rational j = spin_arg(js);
  Scalar n = projection_arg(ns, j);
  Rational m = halfint_arg(ms);
  WeightSpec w = weight_arg(wname);
  Wavefunction psi = Wavefunction::build(j, n, m);

  bool regularized = true;
  ExpectationValue ev;
  try {
    ev = expectation(psi, w.poly);
  } catch (const std::domain_error& e) {
    if (std::string(e.what()).find("zero-norm") != std::string::npos) throw;
    regularized = false;  // continuation not available: use the coupling product
  }
  if (regularized) {
    out << "<" << wname << "> = ";
    if (ev.exact)
      out << ev.exact_value.str() << " = " << num17(ev.value);
    else
      out << num17(ev.value);
    out << "   (path=regularized)\n";
    return 0;
  }
  if (m > j || -m > j)
    throw std::domain_error("the coupling-product path needs |m| <= j");
  Scalar v = expect_legendre(j, n, m, w.order);
  out << "<" << wname << "> = " << exact_or_numeric(v) << "   (path=analytic)\n";
  return 0;
}

int do_cg(std::ostream& out, const std::vector<std::string>& rest, bool internal) {
  if (internal) {
    if (rest.size() != 3)
      throw std::domain_error("--internal expects: j n k");
    Rational j = spin_arg(rest[0]);
    Scalar n = projection_arg(rest[1], j);
    int k = static_cast<int>(to_long(rational_from_string(rest[2])));
    Scalar v = internal_cg(j, n, k);
    out << "<j n, k 0 | j n> (j=" << to_string(j) << ", n=" << n.str() << ", k=" << k
        << ") = " << exact_or_numeric(v) << "\n";
    return 0;
  }
  if (rest.size() != 5)
    throw std::domain_error("expects: j1 m1 j2 m2 j3  (or --internal j n k)");
  Rational j1 = spin_arg(rest[0]), j2 = spin_arg(rest[2]), j3 = spin_arg(rest[4]);
  Rational m1 = rational_from_string(rest[1]), m2 = rational_from_string(rest[3]);
  if (is_integer(j1 - m1) && is_integer(j2 - m2)) {
    RadicalSum v = cg_exact(j1, m1, j2, m2, j3);
    out << "<" << to_string(j1) << " " << to_string(m1) << ", " << to_string(j2) << " "
        << to_string(m2) << " | " << to_string(j3) << " " << to_string(m1 + m2)
        << "> = " << v.str() << " = " << num17(v.value()) << "\n";
    return 0;
  }
  double x1 = to_double(m1), x2 = to_double(m2);
  double sq = cg_sq_continuous(j1, x1, j2, x2, j3);
  out << "coefficient^2 (continued to x1=" << num17(x1) << ", x2=" << num17(x2)
      << ") = " << num17(sq) << "\n";
  return 0;
}

int do_rms(std::ostream& out, const std::string& token) {
  RmsPattern p = pattern_arg(token);
  PatternInfo info = pattern_info(p);
  RmsResult r = rms_pattern(p);
  if (r.error_estimate > 1e-6)
    throw AccuracyError("quadrature failed to converge: error estimate " +
                        num17(r.error_estimate));
  out << "pattern " << info.token << ": <j3 n3 | j1 x, j2 n3-x> with j1=" << to_string(info.j1)
      << " j2=" << to_string(info.j2) << " j3=" << to_string(info.j3)
      << " n3=" << num17(info.n3) << "\n";
  out << "rms = " << num17(r.rms) << "\n";
  out << "area = " << num17(r.integral) << "  (error estimate " << num17(r.error_estimate)
      << ")\n";
  if (r.closed_form) out << "closed form area = " << num17(*r.closed_form) << "\n";
  return 0;
}

int do_gfactor(std::ostream& out, const std::vector<std::string>& rest, bool invert) {
  if (rest.size() != 2)
    throw std::domain_error(invert ? "--invert expects: s g" : "expects: s n");
  Rational s = spin_arg(rest[0]);
  if (invert) {
    Rational g = rational_from_string(rest[1]);
    ProjectionForG pg = projection_for_g(s, g);
    out << "n^2 = s(s+1)(g-1) = " << to_string(s * (s + 1) * (g - 1)) << "\n";
    if (pg.imaginary)
      out << "imaginary projection: n = i * " << exact_or_numeric(pg.n) << "\n";
    else
      out << "|n| = " << exact_or_numeric(pg.n) << "\n";
    return 0;
  }
  Scalar n = projection_arg(rest[1], s);
  Scalar g = g_factor(s, n);
  out << "g = " << exact_or_numeric(g) << "\n";
  return 0;
}

int do_react(std::ostream& out, const std::vector<std::string>& words,
             const std::string& particles_path) {
  ParticleTable table = ParticleTable::load_default();
  if (!particles_path.empty()) table.load_file(particles_path);

  std::string joined;
  for (const std::string& w : words) {
    if (!joined.empty()) joined += " ";
    joined += w;
  }
  std::vector<std::string> lines;
  if (std::ifstream file(joined); file && joined.find("->") == std::string::npos) {
    std::string line;
    while (std::getline(file, line)) {
      std::string body = line.substr(0, line.find('#'));
      if (body.find_first_not_of(" \t\r") != std::string::npos) lines.push_back(body);
    }
  } else {
    lines.push_back(joined);
  }
  if (lines.empty()) throw std::domain_error("no reactions to check");

  for (const std::string& line : lines) {
    std::string text = line;
    auto arrow = text.find("->");
    if (arrow == std::string::npos)
      throw std::domain_error("reaction needs the form 'parent -> a b': " + line);
    text.replace(arrow, 2, " ");
    std::istringstream in(text);
    std::vector<std::string> tok;
    std::string t;
    while (in >> t)
      if (t != "+") tok.push_back(t);
    if (tok.size() != 3)
      throw std::domain_error("reaction needs one parent and two products: " + line);
    ReactionCheck rc = check_reaction(table, tok[0], tok[1], tok[2]);
    out << rc.parent << " -> " << rc.daughter_a << " + " << rc.daughter_b << ": "
        << (rc.allowed ? "ALLOWED" : "FORBIDDEN") << ", coefficient "
        << num17(rc.coefficient) << "  [" << rc.mechanism << ": " << rc.detail << "]";
    if (rc.hypothetical) out << "  (hypothetical participants)";
    out << "\n";
  }
  return 0;
}

int do_quasiprob(std::ostream& out, const std::string& token, long samples,
                 const std::string& format, std::optional<double> xmin,
                 std::optional<double> xmax) {
  RmsPattern p = pattern_arg(token);
  PatternInfo info = pattern_info(p);
  if (samples < 2) throw std::domain_error("--samples must be at least 2");
  double lo = xmin ? *xmin : info.center - 6.0;
  double hi = xmax ? *xmax : info.center + 6.0;
  if (!(hi > lo)) throw std::domain_error("empty sampling range");

  std::vector<std::pair<double, double>> rows;
  rows.reserve(samples);
  for (long i = 0; i < samples; ++i) {
    double x = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(samples - 1);
    rows.emplace_back(x, quasiprob_density(p, x));
  }

  if (format == "csv") {
    out << "x,density\n";
    for (auto& [x, d] : rows) out << num17(x) << "," << num17(d) << "\n";
    return 0;
  }
  if (format != "json") throw std::domain_error("--out must be csv or json");
  nlohmann::json doc;
  doc["pattern"] = info.token;
  doc["j1"] = to_string(info.j1);
  doc["j2"] = to_string(info.j2);
  doc["j3"] = to_string(info.j3);
  doc["n3"] = info.n3;
  doc["symmetry_axis"] = info.center;
  doc["allowed_window_a"] = {-to_double(info.j1), to_double(info.j1)};
  doc["allowed_window_b"] = {info.n3 - to_double(info.j2), info.n3 + to_double(info.j2)};
  nlohmann::json samples_json = nlohmann::json::array();
  for (auto& [x, d] : rows) samples_json.push_back({x, d});
  doc["samples"] = std::move(samples_json);
  out << doc.dump(2) << "\n";
  return 0;
}

int do_verify(std::ostream& out) {
  AcceptanceReport rep = run_acceptance();
  int passed = 0;
  for (const CriterionResult& r : rep.results) {
    out << (r.pass ? "PASS" : "FAIL") << "  " << std::setw(2) << r.id << "  " << r.label
        << "  (" << std::fixed << std::setprecision(1) << r.ms << " ms)";
    out.unsetf(std::ios::fixed);
    if (!r.pass) out << "\n      " << r.detail;
    out << "\n";
    if (r.pass) ++passed;
  }
  out << "verification: " << passed << "/" << rep.results.size() << " criteria passed\n";
  return rep.all_pass ? 0 : 2;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"generalized spin wavefunctions: moments, couplings, selection rules"};
  app.require_subcommand(1);
  int code = 0;

  // dfunc
  auto* dfunc = app.add_subcommand("dfunc", "print a wavefunction (optionally evaluated)");
  std::vector<std::string> dfunc_args;
  std::optional<double> dfunc_theta;
  dfunc->add_option("labels", dfunc_args, "j n m")->expected(3);
  dfunc->add_option("--theta", dfunc_theta, "evaluate the theta parts at this angle");
  dfunc->callback([&] {
    code = do_dfunc(out, dfunc_args[0], dfunc_args[1], dfunc_args[2], dfunc_theta);
  });

  // inner
  auto* inner = app.add_subcommand("inner", "regularized inner product of two states");
  std::vector<std::string> inner_args;
  std::string inner_weight = "none";
  inner->add_option("labels", inner_args, "j n m j' n' m'")->expected(6);
  inner->add_option("--weight", inner_weight, "weight polynomial: cos, p2, p3, p4");
  inner->callback([&] { code = do_inner(out, inner_args, inner_weight); });

  // expect
  auto* expect = app.add_subcommand("expect", "expectation value of a weight polynomial");
  std::vector<std::string> expect_args;
  std::string expect_weight;
  expect->add_option("labels", expect_args, "j n m")->expected(3);
  expect->add_option("--weight", expect_weight, "cos, p2, p3, p4")->required();
  expect->callback([&] {
    code = do_expect(out, expect_args[0], expect_args[1], expect_args[2], expect_weight);
  });

  // cg
  auto* cg = app.add_subcommand("cg", "coupling coefficient (external, or --internal)");
  std::vector<std::string> cg_args;
  bool cg_internal = false;
  cg->add_option("labels", cg_args, "j1 m1 j2 m2 j3  |  --internal j n k");
  cg->add_flag("--internal", cg_internal, "body-frame coefficient <j n, k 0 | j n>");
  cg->callback([&] { code = do_cg(out, cg_args, cg_internal); });

  // rms
  auto* rms = app.add_subcommand("rms", "rms coupling over the split internal projection");
  std::string rms_token;
  rms->add_option("pattern", rms_token, "stretched-halves, vector-halves, scalar-halves, scalar-ones")
      ->required();
  rms->callback([&] { code = do_rms(out, rms_token); });

  // gfactor
  auto* gf = app.add_subcommand("gfactor", "gyromagnetic ratio from the internal projection");
  std::vector<std::string> gf_args;
  bool gf_invert = false;
  gf->add_option("values", gf_args, "s n   (or with --invert: s g)")->expected(2);
  gf->add_flag("--invert", gf_invert, "solve for n given g");
  gf->callback([&] { code = do_gfactor(out, gf_args, gf_invert); });

  // react
  auto* react = app.add_subcommand("react", "check decay selection rules");
  std::vector<std::string> react_words;
  std::string particles_path;
  react->add_option("reaction", react_words, "'parent -> a b' or a file of reactions")
      ->expected(-1)
      ->required();
  react->add_option("--particles", particles_path, "extra particle table file");
  react->callback([&] { code = do_react(out, react_words, particles_path); });

  // quasiprob
  auto* qp = app.add_subcommand("quasiprob", "sample a quasiprobability curve");
  std::string qp_token, qp_format = "csv";
  long qp_samples = 401;
  std::optional<double> qp_xmin, qp_xmax;
  qp->add_option("pattern", qp_token, "pattern token")->required();
  qp->add_option("--samples", qp_samples, "number of sample points (default 401)");
  qp->add_option("--out", qp_format, "csv or json (default csv)");
  qp->add_option("--xmin", qp_xmin, "lower sampling bound");
  qp->add_option("--xmax", qp_xmax, "upper sampling bound");
  qp->callback([&] {
    code = do_quasiprob(out, qp_token, qp_samples, qp_format, qp_xmin, qp_xmax);
  });

  // verify
  auto* verify = app.add_subcommand("verify", "run the full verification suite");
  verify->callback([&] { code = do_verify(out); });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const AccuracyError& e) {
    err << "accuracy error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return code;
}

}  // namespace gwd
