#include <doctest.h>

#include <gwd/cli.hpp>

#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = gwd::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("cli: help and argument errors") {
  CliRun help = cli({"--help"});
  CHECK(help.code == 0);
  CHECK(contains(help.out, "dfunc"));
  CHECK(contains(help.out, "react"));

  CHECK(cli({}).code == 1);
  CHECK(cli({"bogus-subcommand"}).code == 1);
  CHECK(cli({"expect", "1/2", "1"}).code == 1);  // missing projection argument
  CliRun bad = cli({"expect", "1/2", "1", "1/2", "--weight", "p9"});
  CHECK(bad.code == 1);
  CHECK(contains(bad.err, "unknown weight"));
}

TEST_CASE("cli: dfunc prints both branches and edge markers") {
  CliRun r = cli({"dfunc", "1/2", "1", "1/2", "--theta", "1.0"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "branch A:"));
  CHECK(contains(r.out, "branch B:"));
  CHECK(contains(r.out, "at theta=1"));

  CliRun edge = cli({"dfunc", "1/2", "1", "3/2"});
  CHECK(edge.code == 0);
  CHECK(contains(edge.out, "[edge state]"));
}

TEST_CASE("cli: inner product breakdown and selection rules") {
  CliRun same = cli({"inner", "1/2", "1", "1/2", "1/2", "1", "1/2"});
  CHECK(same.code == 0);
  CHECK(contains(same.out, "branch AA:"));
  CHECK(contains(same.out, "pi^3"));
  CHECK(contains(same.out, "(per |N|^2)"));

  CliRun diff = cli({"inner", "1/2", "1", "1/2", "1/2", "1", "-1/2"});
  CHECK(diff.code == 0);
  CHECK(contains(diff.out, "selection rule"));
}

TEST_CASE("cli: expectation values pick the right evaluation path") {
  CliRun reg = cli({"expect", "1/2", "1", "1/2", "--weight", "cos"});
  CHECK(reg.code == 0);
  CHECK(contains(reg.out, "2/3"));
  CHECK(contains(reg.out, "(path=regularized)"));

  // an irrational projection is outside the integral-continuation machinery,
  // so the coupling-product path takes over
  CliRun ana = cli({"expect", "1/2", "smax", "1/2", "--weight", "cos"});
  CHECK(ana.code == 0);
  CHECK(contains(ana.out, "(path=analytic)"));
  CHECK(contains(ana.out, "0.5773502691896"));

  // edge states carry no norm, so no expectation value exists
  CliRun edge = cli({"expect", "1/2", "1", "3/2", "--weight", "cos"});
  CHECK(edge.code == 1);
  CHECK(contains(edge.err, "zero-norm"));
}

TEST_CASE("cli: coupling coefficients, exact and continued") {
  CliRun exact = cli({"cg", "1/2", "1/2", "1/2", "-1/2", "1"});
  CHECK(exact.code == 0);
  CHECK(contains(exact.out, "0.7071067811865475"));

  CliRun internal = cli({"cg", "--internal", "1", "1", "1"});
  CHECK(internal.code == 0);
  CHECK(contains(internal.out, "0.7071067811865475"));

  CliRun cont = cli({"cg", "1/2", "0.3", "1/2", "0.2", "1"});
  CHECK(cont.code == 0);
  CHECK(contains(cont.out, "coefficient^2 (continued"));
}

TEST_CASE("cli: rms pattern report") {
  CliRun r = cli({"rms", "vector-halves"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "rms = "));
  CHECK(contains(r.out, "closed form area"));

  CHECK(cli({"rms", "unknown-pattern"}).code == 1);
}

TEST_CASE("cli: g-factor forward and inverse") {
  CliRun g1 = cli({"gfactor", "1", "0"});
  CHECK(g1.code == 0);
  CHECK(contains(g1.out, "g = 1"));

  CliRun g2 = cli({"gfactor", "1/2", "smax"});
  CHECK(g2.code == 0);
  CHECK(contains(g2.out, "g = 2"));

  CliRun inv = cli({"gfactor", "--invert", "3/2", "2/3"});
  CHECK(inv.code == 0);
  CHECK(contains(inv.out, "-5/4"));
  CHECK(contains(inv.out, "imaginary projection"));
}

TEST_CASE("cli: reaction checks") {
  // a bare "->" argv token reads as an option, so reactions are passed as one
  // quoted word (the form the shell delivers for gwd react "h -> a b")
  CliRun ok = cli({"react", "higgs -> photon photon"});
  CHECK(ok.code == 0);
  CHECK(contains(ok.out, "ALLOWED"));

  CliRun no = cli({"react", "Z -> photon photon"});
  CHECK(no.code == 0);
  CHECK(contains(no.out, "FORBIDDEN"));

  CliRun unknown = cli({"react", "wombat -> photon photon"});
  CHECK(unknown.code == 1);
  CHECK(contains(unknown.err, "unknown particle"));
}

TEST_CASE("cli: quasiprobability sampling in csv and json") {
  CliRun csv = cli({"quasiprob", "scalar-halves", "--samples", "5"});
  CHECK(csv.code == 0);
  CHECK(contains(csv.out, "x,density"));
  long rows = 0;
  for (char c : csv.out)
    if (c == '\n') ++rows;
  CHECK(rows == 6);  // header plus five samples

  CliRun js = cli({"quasiprob", "scalar-halves", "--samples", "5", "--out", "json"});
  CHECK(js.code == 0);
  nlohmann::json doc = nlohmann::json::parse(js.out);
  CHECK(doc["pattern"] == "scalar-halves");
  CHECK(doc["j1"] == "1/2");
  CHECK(doc["samples"].size() == 5);

  CHECK(cli({"quasiprob", "scalar-halves", "--samples", "1"}).code == 1);
}
