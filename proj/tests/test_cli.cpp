#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "sublat/cli.hpp"
#include "sublat/json_io.hpp"
#include "sublat/matrix.hpp"
#include "sublat/medial.hpp"

using namespace sublat;

namespace {

namespace fs = std::filesystem;

struct CliResult {
  int code = 0;
  std::string out;
  std::string err;
  Json report;
};

CliResult run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  CliResult r;
  r.code = sublat::run(std::move(args), out, err);
  r.out = out.str();
  r.err = err.str();
  if (!r.out.empty() && r.out.front() == '{') r.report = Json::parse(r.out);
  return r;
}

fs::path workdir() {
  static fs::path dir = [] {
    fs::path p = fs::temp_directory_path() / "sublat-cli-tests";
    fs::create_directories(p);
    return p;
  }();
  return dir;
}

std::string input_file(const std::string& name, const std::string& content) {
  fs::path p = workdir() / name;
  std::ofstream f(p, std::ios::binary);
  f << content;
  return p.string();
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

const std::string kDiamond =
    R"({"ambient": 2, "nodes": [[[1, 0]], [[0, 1]]]})";
const std::string kChain = R"({"ambient": 2, "nodes": [[[1, 0]]]})";
const std::string kThreeLines =
    R"({"ambient": 2, "nodes": [[[1, 0]], [[0, 1]], [[1, 1]]]})";
const std::string kSwap = R"([[0, 1], [1, 0]])";
const std::string kShear = R"([[1, 1], [0, 1]])";
const std::string kPhi =
    R"({"interval": "[0,1]", "breakpoints": [["0","0"], ["1/2","1/4"], ["1","1"]]})";
const std::string kMedialUnit = R"({"m": 1, "v3": [[1]], "v1": [[1]]})";

}  // namespace

TEST_CASE("collineate reports the verdict and node permutation") {
  std::string lat = input_file("diamond.json", kDiamond);
  std::string m = input_file("swap.json", kSwap);
  CliResult r = run_cli({"collineate", "--lattice", lat, "--matrix", m});
  CHECK(r.code == 0);
  CHECK(r.report.at("verb") == "collineate");
  CHECK(r.report.at("verdict") == true);
  CHECK(r.report.at("permutation") == Json::array({0, 2, 1, 3}));

  std::string bad = input_file("shear.json", kShear);
  CliResult neg = run_cli({"collineate", "--lattice", lat, "--matrix", bad});
  CHECK(neg.code == 1);
  CHECK(neg.report.at("verdict") == false);
  CHECK(!neg.report.contains("permutation"));
}

TEST_CASE("usage and input errors exit with 2") {
  CliResult missing = run_cli({"collineate", "--lattice", "nope.json"});
  CHECK(missing.code == 2);
  CHECK(missing.out.empty());

  CliResult unknown = run_cli({"frobnicate"});
  CHECK(unknown.code == 2);

  std::string bad = input_file("broken.json", "{nope");
  std::string m = input_file("swap.json", kSwap);
  CliResult malformed =
      run_cli({"collineate", "--lattice", bad, "--matrix", m});
  CHECK(malformed.code == 2);
  CHECK(malformed.err.find("input error") != std::string::npos);

  CliResult absent = run_cli({"collineate", "--lattice",
                              (workdir() / "void.json").string(), "--matrix", m});
  CHECK(absent.code == 2);

  CliResult noargs = run_cli({"aut"});
  CHECK(noargs.code == 2);

  CliResult bare = run_cli({"volterra"});
  CHECK(bare.code == 2);
}

TEST_CASE("help is not an error") {
  CliResult r = run_cli({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("closure") != std::string::npos);
  CHECK(r.out.find("collineate") != std::string::npos);
}

TEST_CASE("closure builds the lattice and writes a diagram") {
  std::string fam = input_file("two-lines.json", kDiamond);
  std::string dot = (workdir() / "diamond.gv").string();
  CliResult r = run_cli({"closure", "--family", fam, "--dot", dot});
  CHECK(r.code == 0);
  CHECK(r.report.at("size") == 4);
  CHECK(r.report.at("lattice").at("ambient") == 2);
  std::string diagram = slurp(dot);
  CHECK(diagram.rfind("digraph", 0) == 0);
  CHECK(diagram.find("n0 -> n1") != std::string::npos);
}

TEST_CASE("alg reports the dimension of the invariant algebra") {
  std::string lat = input_file("chain.json", kChain);
  CliResult r = run_cli({"alg", "--lattice", lat});
  CHECK(r.code == 0);
  CHECK(r.report.at("dim") == 3);
}

TEST_CASE("commutant and bicommutant") {
  std::string gens = input_file(
      "gens-id.json", R"({"ambient": 2, "generators": [[[1, 0], [0, 1]]]})");
  CliResult first = run_cli({"commutant", "--generators", gens});
  CHECK(first.code == 0);
  CHECK(first.report.at("dim") == 4);

  CliResult second = run_cli({"commutant", "--generators", gens, "--double"});
  CHECK(second.code == 0);
  CHECK(second.report.at("dim") == 1);
}

TEST_CASE("aut counts order automorphisms") {
  std::string lat = input_file("diamond.json", kDiamond);
  CliResult r = run_cli({"aut", "--lattice", lat});
  CHECK(r.code == 0);
  CHECK(r.report.at("count") == 2);

  CliResult chain = run_cli({"aut", "--chain", "3"});
  CHECK(chain.report.at("count") == 1);

  CliResult multi = run_cli({"aut", "--multi-chain", "2,1"});
  CHECK(multi.report.at("count") == 1);

  CliResult square = run_cli({"aut", "--multi-chain", "2,2"});
  CHECK(square.report.at("count") == 2);
}

TEST_CASE("classify names the order type") {
  CliResult dt = run_cli({"classify", "--multi-chain", "1,1,1"});
  CHECK(dt.code == 0);
  CHECK(dt.report.at("tag") == "double_triangle");

  CliResult mc = run_cli({"classify", "--multi-chain", "2,1"});
  CHECK(mc.report.at("tag") == "multi_chain(2,1)");

  CliResult ch = run_cli({"classify", "--chain", "4"});
  CHECK(ch.report.at("tag") == "chain");
}

TEST_CASE("realize-medial and decompose") {
  std::string inputs = input_file("medial-unit.json", kMedialUnit);
  CliResult r = run_cli(
      {"realize-medial", "--inputs", inputs, "--kind", "double-triangle"});
  CHECK(r.code == 0);
  CHECK(r.report.at("lattice").at("nodes").size() == 5);
  CHECK(r.report.at("realization").at("ambient") == 2);

  // Feed one of the realization's own involutions back through the
  // decomposition verb.
  MedialRealization real =
      realize_double_triangle(1, Matrix::identity(1), Matrix::identity(1));
  std::string w1 = input_file("w1.json", json_of(real.w1).dump());
  CliResult dec = run_cli({"decompose", "--medial", inputs, "--matrix", w1,
                           "--kind", "double-triangle"});
  CHECK(dec.code == 0);
  CHECK(dec.report.at("verdict") == true);
  CHECK(dec.report.at("w_index") == 1);
  CHECK(matrix_from_json(dec.report.at("w")) == real.w1);
  CHECK(matrix_from_json(dec.report.at("grp")).is_identity());

  std::string shear = input_file("shear.json", kShear);
  CliResult neg = run_cli({"decompose", "--medial", inputs, "--matrix", shear,
                           "--kind", "double-triangle"});
  CHECK(neg.code == 1);
  CHECK(neg.report.at("verdict") == false);
}

TEST_CASE("perp builds the annihilator lattice") {
  std::string lat = input_file("chain.json", kChain);
  CliResult r = run_cli({"perp", "--lattice", lat});
  CHECK(r.code == 0);
  CHECK(r.report.at("lattice").at("nodes").size() == 3);
  CHECK(r.report.at("lattice").at("ambient") == 2);
}

TEST_CASE("conj-test checks conjugate-linear collineations") {
  std::string lat = input_file("diamond.json", kDiamond);
  std::string op = input_file(
      "conj-id.json", R"({"form": "mat-conj", "matrix": [[1, 0], [0, 1]]})");
  CliResult r = run_cli({"conj-test", "--lattice", lat, "--operator", op});
  CHECK(r.code == 0);
  CHECK(r.report.at("verdict") == true);
  CHECK(r.report.at("permutation") == Json::array({0, 1, 2, 3}));

  std::string skew = input_file(
      "skew.json",
      R"({"ambient": 2, "nodes": [[[1, {"re": "0", "im": "1"}]]]})");
  CliResult neg = run_cli({"conj-test", "--lattice", skew, "--operator", op});
  CHECK(neg.code == 1);
  CHECK(neg.report.at("verdict") == false);

  std::string badform = input_file(
      "badform.json", R"({"form": "other", "matrix": [[1, 0], [0, 1]]})");
  CliResult bad = run_cli({"conj-test", "--lattice", lat, "--operator", badform});
  CHECK(bad.code == 2);
}

TEST_CASE("volterra verbs") {
  std::string phi = input_file("phi.json", kPhi);
  std::string step = input_file(
      "step.json", R"({"p": 1, "cuts": ["1/4"], "values": [[1, 1], [0, 1]]})");

  CliResult apply = run_cli({"volterra", "apply", "--phi", phi, "--step", step});
  CHECK(apply.code == 0);
  CHECK(apply.report.at("norm_pow") == "1/4");
  CHECK(apply.report.at("result").at("cuts") == Json::array({"1/2"}));
  CHECK(apply.report.at("result").at("values") ==
        Json::array({Json::array({"1/2", "1"}), Json::array({"0", "1"})}));

  CliResult dec = run_cli({"volterra", "decompose", "--phi", phi});
  CHECK(dec.code == 0);
  CHECK(dec.report.at("residual_identity") == true);
  CHECK(dec.report.at("complement_param").at("breakpoints") ==
        Json::array({Json::array({"0", "0"}), Json::array({"1/4", "1/2"}),
                     Json::array({"1", "1"})}));

  CliResult cantor = run_cli({"volterra", "cantor", "--depth", "1"});
  CHECK(cantor.code == 0);
  CHECK(cantor.report.at("min_slope") == "1/2");
  CHECK(cantor.report.at("psi").at("breakpoints") ==
        Json::array({Json::array({"0", "0"}), Json::array({"1/3", "5/12"}),
                     Json::array({"2/3", "7/12"}), Json::array({"1", "1"})}));

  CliResult act =
      run_cli({"volterra", "nest-action", "--phi", phi, "--cut", "1/4"});
  CHECK(act.code == 0);
  CHECK(act.report.at("image") == "1/2");

  CliResult badcut =
      run_cli({"volterra", "nest-action", "--phi", phi, "--cut", "x"});
  CHECK(badcut.code == 2);
}

TEST_CASE("shift-nest verbs") {
  CliResult full = run_cli({"shift-nest", "test", "--family", "full",
                            "--shift", "5"});
  CHECK(full.code == 0);
  CHECK(full.report.at("verdict") == true);

  CliResult half = run_cli({"shift-nest", "test", "--family", "half",
                            "--shift", "1"});
  CHECK(half.code == 1);
  CHECK(half.report.at("verdict") == false);

  CliResult oneside = run_cli({"shift-nest", "test", "--family", "half",
                               "--shift", "1", "--one-sided"});
  CHECK(oneside.code == 0);
  CHECK(oneside.report.at("verdict") == true);

  CliResult dec = run_cli({"shift-nest", "decompose", "--shift", "3"});
  CHECK(dec.code == 0);
  CHECK(dec.report.at("w_power") == 3);
  CHECK(dec.report.at("residual_shift") == 0);

  CliResult badfam = run_cli({"shift-nest", "test", "--family", "sideways",
                              "--shift", "1"});
  CHECK(badfam.code == 2);
}

TEST_CASE("probe-reflexive distinguishes clean and witnessed families") {
  std::string clean = input_file("diamond.json", kDiamond);
  CliResult ok = run_cli({"probe-reflexive", "--lattice", clean, "--trials",
                          "8", "--seed", "5"});
  CHECK(ok.code == 0);
  CHECK(ok.report.at("verdict") == "no_counterexample");
  CHECK(ok.report.at("witnesses").empty());

  std::string lines = input_file("three-lines.json", kThreeLines);
  CliResult found = run_cli({"probe-reflexive", "--lattice", lines,
                             "--trials", "8", "--seed", "5"});
  CHECK(found.code == 1);
  CHECK(found.report.at("verdict") == "counterexample_found");
  CHECK(!found.report.at("witnesses").empty());
}

TEST_CASE("reports are byte deterministic") {
  std::string lines = input_file("three-lines.json", kThreeLines);
  std::vector<std::string> probe = {"probe-reflexive", "--lattice", lines,
                                    "--trials", "12", "--seed", "31"};
  CHECK(run_cli(probe).out == run_cli(probe).out);

  std::string fam = input_file("two-lines.json", kDiamond);
  std::vector<std::string> closure = {"closure", "--family", fam};
  CHECK(run_cli(closure).out == run_cli(closure).out);
}

TEST_CASE("reports written with --out round trip as inputs") {
  std::string fam = input_file("two-lines.json", kDiamond);
  std::string rep = (workdir() / "closure-report.json").string();
  CliResult r = run_cli({"closure", "--family", fam, "--out", rep});
  CHECK(r.code == 0);
  CHECK(r.out.empty());

  Json report = Json::parse(slurp(rep));
  CHECK(report.at("size") == 4);
  std::string lat = input_file("closed.json", report.at("lattice").dump());
  CliResult aut = run_cli({"aut", "--lattice", lat});
  CHECK(aut.code == 0);
  CHECK(aut.report.at("count") == 2);
}
