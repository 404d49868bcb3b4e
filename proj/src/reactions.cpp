#include <gwd/reactions.hpp>
#include <gwd/coupling.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace gwd {

namespace {

const char* kBuiltinTable = R"(
# name  twice_spin  category  [hypothetical]
electron        1  stretched
positron        1  stretched
muon            1  stretched
tau             1  stretched
neutrino        1  stretched
up              1  stretched
down            1  stretched
strange         1  stretched
charm           1  stretched
bottom          1  stretched
top             1  stretched
W               2  stretched
Z               2  zero
photon          2  zero
gluon           2  zero
higgs           0  zero
graviton        4  zero        hypothetical
neutral-quark   1  zero        hypothetical
mirror-electron 1  stretched   hypothetical
mirror-neutrino 1  stretched   hypothetical
)";

std::string lower(const std::string& s) {
  std::string out;
  for (char c : s) out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  return out;
}

}  // namespace

ParticleTable ParticleTable::builtin() {
  ParticleTable t;
  std::istringstream in(kBuiltinTable);
  std::string line;
  while (std::getline(in, line)) t.add_line(line);
  t.aliases_ = {
      {"e", "electron"},   {"e-", "electron"}, {"e+", "positron"},
      {"mu", "muon"},      {"nu", "neutrino"}, {"quark", "up"},
      {"q", "up"},         {"gamma", "photon"}, {"g", "gluon"},
      {"h", "higgs"},      {"h0", "higgs"},    {"z0", "z"},
      {"w+", "w"},         {"w-", "w"},
  };
  return t;
}

ParticleTable ParticleTable::load_default() {
  ParticleTable t = builtin();
  if (const char* path = std::getenv("GWD_PARTICLES")) t.load_file(path);
  return t;
}

void ParticleTable::add_line(const std::string& line) {
  std::string body = line.substr(0, line.find('#'));
  std::istringstream in(body);
  std::string name, twice, category;
  if (!(in >> name >> twice >> category)) {
    if (!name.empty()) throw std::runtime_error("bad particle line: " + line);
    return;  // blank / comment line
  }
  Particle p;
  p.name = name;
  long ts = std::stol(twice);
  if (ts < 0) throw std::runtime_error("negative spin in particle line: " + line);
  p.spin = Rational(ts, 2);
  std::string cat = lower(category);
  if (cat == "zero")
    p.zero_projection = true;
  else if (cat == "stretched")
    p.zero_projection = false;
  else
    throw std::runtime_error("unknown projection category '" + category + "'");
  std::string flag;
  while (in >> flag) {
    if (lower(flag) == "hypothetical")
      p.hypothetical = true;
    else
      throw std::runtime_error("unknown particle flag '" + flag + "'");
  }
  add(p);
}

void ParticleTable::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open particle table: " + path);
  std::string line;
  while (std::getline(in, line)) add_line(line);
}

void ParticleTable::add(const Particle& p) {
  for (Particle& q : list_) {
    if (lower(q.name) == lower(p.name)) {
      q = p;
      return;
    }
  }
  list_.push_back(p);
}

const Particle* ParticleTable::find(const std::string& name) const {
  std::string key = lower(name);
  auto a = aliases_.find(key);
  if (a != aliases_.end()) key = a->second;
  for (const Particle& p : list_)
    if (lower(p.name) == key) return &p;
  return nullptr;
}

double particle_projection(const Particle& p) {
  if (p.zero_projection) return 0.0;
  return std::sqrt(to_double(p.spin * (p.spin + 1)));
}

double emission_coefficient(const Rational& j, double n, int k) {
  if (Rational(k) > 2 * j) return 0.0;
  return internal_cg(j, Scalar::floating(n), k).value();
}

namespace {

const Particle& need(const ParticleTable& table, const std::string& name) {
  const Particle* p = table.find(name);
  if (!p) throw std::runtime_error("unknown particle '" + name + "'");
  return *p;
}

Scalar exact_projection(const Particle& p) {
  if (p.zero_projection) return Scalar(0);
  return spin_magnitude(p.spin);
}

bool shared_axis(const Particle& parent, const Particle& keep, const Particle& emit,
                 ReactionCheck& out) {
  if (keep.spin != parent.spin || keep.zero_projection != parent.zero_projection) return false;
  if (!emit.zero_projection || !is_integer(emit.spin)) return false;
  int k = static_cast<int>(to_long(emit.spin));
  if (k > 4) return false;
  out.mechanism = "shared-axis";
  if (Rational(k) > 2 * parent.spin) {
    out.coefficient = 0.0;
    out.detail = "emitted multipole order exceeds 2j";
    return true;
  }
  out.coefficient = internal_cg(parent.spin, exact_projection(parent), k).value();
  out.detail = "<j n, k 0 | j n> along the conserved internal axis";
  return true;
}

}  // namespace

ReactionCheck check_reaction(const ParticleTable& table, const std::string& parent_name,
                             const std::string& a_name, const std::string& b_name) {
  const Particle& parent = need(table, parent_name);
  const Particle& a = need(table, a_name);
  const Particle& b = need(table, b_name);

  ReactionCheck out;
  out.parent = parent.name;
  out.daughter_a = a.name;
  out.daughter_b = b.name;
  out.hypothetical = parent.hypothetical || a.hypothetical || b.hypothetical;

  bool matched = false;
  if (shared_axis(parent, a, b, out) || shared_axis(parent, b, a, out)) {
    matched = true;
  } else if (parent.zero_projection && a.zero_projection && b.zero_projection &&
             a.spin == b.spin && is_integer(parent.spin) && parent.spin <= 4) {
    // Both products carry n = 0; exchange the parent with a product (the
    // internal-frame coefficient keeps its magnitude under exchange).
    out.mechanism = "axis-exchange";
    int k = static_cast<int>(to_long(parent.spin));
    if (Rational(k) > 2 * a.spin) {
      out.coefficient = 0.0;
      out.detail = "parent spin exceeds the coupled product range";
    } else {
      out.coefficient = internal_cg(a.spin, Scalar(0), k).value();
      out.detail = "|<s 0 | k 0, s 0>| after exchanging parent and product";
    }
    matched = true;
  } else if (!a.zero_projection && !b.zero_projection) {
    out.mechanism = "split-axis-rms";
    if (!parent.zero_projection && parent.spin == a.spin + b.spin) {
      out.coefficient = rms_stretched(a.spin, b.spin).rms;
      out.detail = "rms over the split of the stretched internal projection";
      matched = true;
    } else if (parent.zero_projection) {
      const Rational half(1, 2);
      RmsPattern p;
      if (a.spin == half && b.spin == half && parent.spin == 1)
        p = RmsPattern::HalvesToOneZero;
      else if (a.spin == half && b.spin == half && parent.spin == 0)
        p = RmsPattern::HalvesToZero;
      else if (a.spin == 1 && b.spin == 1 && parent.spin == 0)
        p = RmsPattern::OnesToZero;
      else
        throw std::runtime_error("split-axis coupling not tabulated for this spin pattern");
      out.coefficient = rms_pattern(p).rms;
      out.detail = "rms over the split of the internal projection";
      matched = true;
    }
  }
  if (!matched)
    throw std::runtime_error("no internal-axis mechanism applies to this reaction");

  out.allowed = std::abs(out.coefficient) > 1e-8;
  return out;
}

double conservation_solve(const ConservationTerm& parent,
                          const std::vector<ConservationTerm>& known,
                          const Rational& s_unknown, const Rational& m_unknown) {
  if (m_unknown == 0) throw std::domain_error("cannot solve for n with m = 0");
  auto weight = [](const ConservationTerm& t) {
    return t.n * to_double(t.m) / std::sqrt(to_double(t.s * (t.s + 1)));
  };
  double lhs = weight(parent);
  for (const ConservationTerm& t : known) lhs -= weight(t);
  return lhs * std::sqrt(to_double(s_unknown * (s_unknown + 1))) / to_double(m_unknown);
}

double dark_matter_fraction(double mass_ratio) {
  return (1 + 4 * mass_ratio) / (2 + 4 * mass_ratio);
}

double koide_ratio(double m1, double m2, double m3) {
  double s = std::sqrt(m1) + std::sqrt(m2) + std::sqrt(m3);
  return (m1 + m2 + m3) / (s * s);
}

double koide_charged_leptons() { return koide_ratio(0.51099895, 105.6583755, 1776.86); }

}  // namespace gwd
