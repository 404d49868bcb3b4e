#pragma once

// Particle catalogue and decay selection rules driven by the body-frame
// projection: every catalogued particle carries either the maximal internal
// projection n = sqrt(s(s+1)) ("stretched") or n = 0 ("zero").  Reaction
// vertices are scored by the internal-frame coupling coefficient, which is 1
// for allowed channels and 0 for forbidden ones.

#include <gwd/rational.hpp>

#include <map>
#include <string>
#include <vector>

namespace gwd {

struct Particle {
  std::string name;
  Rational spin;
  bool zero_projection = false;  // n = 0; otherwise n = sqrt(s(s+1))
  bool hypothetical = false;     // not an established particle
};

class ParticleTable {
 public:
  // Built-in catalogue of the standard particles plus flagged hypothetical
  // neutral/mirror entries.
  static ParticleTable builtin();
  // Built-in table, optionally extended/overridden by the file named in the
  // GWD_PARTICLES environment variable.
  static ParticleTable load_default();

  // "name twice_spin stretched|zero [hypothetical]"; '#' starts a comment.
  void add_line(const std::string& line);
  void load_file(const std::string& path);
  void add(const Particle& p);

  const Particle* find(const std::string& name) const;  // alias-aware
  const std::vector<Particle>& all() const { return list_; }

 private:
  std::vector<Particle> list_;
  std::map<std::string, std::string> aliases_;
};

// The n value implied by the particle's category.
double particle_projection(const Particle& p);

struct ReactionCheck {
  std::string parent, daughter_a, daughter_b;
  double coefficient;     // internal-frame coupling (within a phase)
  bool allowed;           // |coefficient| above tolerance
  bool hypothetical;      // some participant is a hypothetical entry
  std::string mechanism;  // shared-axis | axis-exchange | split-axis-rms
  std::string detail;
};
ReactionCheck check_reaction(const ParticleTable& table, const std::string& parent,
                             const std::string& a, const std::string& b);

// <j n | k 0, j n>: boson emission keeping the emitter's internal axis.
// Exceeds 1 for stretched n and k >= 2 (suppressing/altering higher-spin
// boson emission); equals 1 for k <= 1.
double emission_coefficient(const Rational& j, double n, int k);

// One term of the projection-conservation rule n m / sqrt(s(s+1)).
struct ConservationTerm {
  Rational s;
  double n;
  Rational m;
};
// Solve parent = sum(known) + unknown for the unknown particle's n.
double conservation_solve(const ConservationTerm& parent,
                          const std::vector<ConservationTerm>& known,
                          const Rational& s_unknown, const Rational& m_unknown);

// Predicted dark-matter fraction (1 + 4r)/(2 + 4r) for a neutral-to-charged
// mass ratio r; r = 1 gives 5/6.
double dark_matter_fraction(double mass_ratio);

// (m1 + m2 + m3) / (sqrt(m1) + sqrt(m2) + sqrt(m3))^2, which is 2/3 when the
// square-root mass vector sits at 45 degrees to (1,1,1).
double koide_ratio(double m1, double m2, double m3);
double koide_charged_leptons();  // measured lepton masses

}  // namespace gwd
