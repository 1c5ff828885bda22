#include "sublat/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>
#include <utility>

#include "sublat/collineation.hpp"
#include "sublat/duality.hpp"
#include "sublat/errors.hpp"
#include "sublat/json_io.hpp"
#include "sublat/medial.hpp"
#include "sublat/nests.hpp"

namespace sublat {

namespace {

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw parse_error("invalid JSON in " + path + ": " + e.what());
  }
}

// Report sink: stdout by default, a file when --out was given.
class Emitter {
public:
  Emitter(const std::string* out_path, std::ostream& fallback)
      : out_path_(out_path), fallback_(fallback) {}

  void operator()(const Json& report) const {
    std::string text = report.dump(2) + "\n";
    if (out_path_->empty()) {
      fallback_ << text;
      return;
    }
    std::ofstream f(*out_path_, std::ios::binary);
    if (!f) throw parse_error("cannot write " + *out_path_);
    f << text;
  }

private:
  const std::string* out_path_;
  std::ostream& fallback_;
};

void write_dot(const std::string& path, const SubspaceLattice& l) {
  if (path.empty()) return;
  std::ofstream f(path, std::ios::binary);
  if (!f) throw parse_error("cannot write " + path);
  f << lattice_to_dot(l);
}

Json permutation_json(const std::vector<std::size_t>& p) {
  Json arr = Json::array();
  for (std::size_t v : p) arr.push_back(v);
  return arr;
}

Matrix square_matrix_from_file(const std::string& path, std::size_t ambient,
                               const char* what) {
  Matrix m = matrix_from_json(load_json(path));
  if (m.rows() != ambient || m.cols() != ambient)
    throw precondition_error(std::string(what) +
                             " must be ambient x ambient");
  return m;
}

std::vector<std::size_t> parse_length_list(const std::string& text) {
  std::vector<std::size_t> lengths;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    if (token.empty() || token.find_first_not_of("0123456789") !=
                             std::string::npos)
      throw parse_error("chain lengths must be positive integers");
    lengths.push_back(static_cast<std::size_t>(std::stoull(token)));
    if (lengths.back() == 0)
      throw parse_error("chain lengths must be positive integers");
  }
  if (lengths.empty()) throw parse_error("empty chain-length list");
  return lengths;
}

MedialKind parse_kind(const std::string& kind) {
  if (kind == "diamond") return MedialKind::diamond;
  if (kind == "double-triangle") return MedialKind::double_triangle;
  throw parse_error("kind must be diamond or double-triangle");
}

Json classify_json(const char* verb, const ClassifyResult& c) {
  Json lengths = Json::array();
  for (std::size_t q : c.chain_lengths) lengths.push_back(q);
  return Json{{"verb", verb},
              {"tag", c.tag_name()},
              {"chain_lengths", std::move(lengths)},
              {"medial_n", c.medial_n}};
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact subspace-lattice toolkit"};
  app.require_subcommand(1);
  int rc = 0;

  // Options shared by several verbs; each verb binds the ones it uses.
  std::string lattice_path, matrix_path, out_path, dot_path, family_path;
  std::string generators_path, inputs_path, phi_path, step_path, op_path;
  std::string kind = "double-triangle", family_tag = "full";
  std::string chain_list;
  std::size_t cap = 4096, chain_q = 0, trials = 16;
  long long shift = 0;
  int depth = 0;
  long exhaustive_height = 0;
  std::uint64_t seed = 1;
  std::string cut_text = "0";
  bool one_sided = false, double_commutant = false;
  Emitter emit(&out_path, out);

  auto* closure_cmd =
      app.add_subcommand("closure", "meet/join closure of a family");
  closure_cmd->add_option("--family", family_path, "family JSON")->required();
  closure_cmd->add_option("--cap", cap, "node cap");
  closure_cmd->add_option("--out", out_path, "report path");
  closure_cmd->add_option("--dot", dot_path, "DOT diagram path");
  closure_cmd->callback([&] {
    FamilyInputs f = family_from_json(load_json(family_path));
    SubspaceLattice l = SubspaceLattice::closure(f.ambient, f.members, cap);
    write_dot(dot_path, l);
    emit(Json{{"verb", "closure"}, {"size", l.size()}, {"lattice", json_of(l)}});
    rc = 0;
  });

  auto* alg_cmd =
      app.add_subcommand("alg", "largest algebra leaving every node invariant");
  alg_cmd->add_option("--lattice", lattice_path, "lattice JSON")->required();
  alg_cmd->add_option("--out", out_path, "report path");
  alg_cmd->callback([&] {
    SubspaceLattice l = lattice_from_json(load_json(lattice_path));
    OperatorAlgebra a = alg_of_family(l.ambient(), l.nodes());
    emit(Json{{"verb", "alg"}, {"dim", a.dim()}, {"algebra", json_of(a)}});
    rc = 0;
  });

  auto* comm_cmd =
      app.add_subcommand("commutant", "commutant of a set of generators");
  comm_cmd->add_option("--generators", generators_path, "generators JSON")
      ->required();
  comm_cmd->add_flag("--double", double_commutant, "compute the bicommutant");
  comm_cmd->add_option("--out", out_path, "report path");
  comm_cmd->callback([&] {
    std::size_t ambient = 0;
    std::vector<Matrix> gens =
        generators_from_json(load_json(generators_path), ambient);
    OperatorAlgebra a = double_commutant ? bicommutant(ambient, gens)
                                         : commutant(ambient, gens);
    emit(Json{{"verb", "commutant"},
              {"double", double_commutant},
              {"dim", a.dim()},
              {"algebra", json_of(a)}});
    rc = 0;
  });

  auto* coll_cmd = app.add_subcommand(
      "collineate", "test whether a matrix maps the lattice onto itself");
  coll_cmd->add_option("--lattice", lattice_path, "lattice JSON")->required();
  coll_cmd->add_option("--matrix", matrix_path, "matrix JSON")->required();
  coll_cmd->add_option("--out", out_path, "report path");
  coll_cmd->callback([&] {
    SubspaceLattice l = lattice_from_json(load_json(lattice_path));
    Matrix s = square_matrix_from_file(matrix_path, l.ambient(), "matrix");
    bool verdict = is_collineation(l, s);
    Json report{{"verb", "collineate"}, {"verdict", verdict}};
    if (verdict)
      report["permutation"] = permutation_json(induced_automorphism(l, s));
    emit(report);
    rc = verdict ? 0 : 1;
  });

  auto* aut_cmd =
      app.add_subcommand("aut", "order automorphisms of a lattice");
  aut_cmd->add_option("--lattice", lattice_path, "lattice JSON");
  aut_cmd->add_option("--chain", chain_q, "abstract chain, q proper nodes");
  aut_cmd->add_option("--multi-chain", chain_list,
                      "abstract multi-chain, comma-separated lengths");
  aut_cmd->add_option("--out", out_path, "report path");
  aut_cmd->add_option("--dot", dot_path, "DOT diagram path (lattice input)");
  aut_cmd->callback([&] {
    std::vector<std::vector<std::size_t>> auts;
    if (!lattice_path.empty()) {
      SubspaceLattice l = lattice_from_json(load_json(lattice_path));
      write_dot(dot_path, l);
      auts = l.automorphisms();
    } else if (!chain_list.empty()) {
      auts = OrderRelation::multi_chain(parse_length_list(chain_list))
                 .automorphisms();
    } else if (chain_q > 0) {
      auts = OrderRelation::chain(chain_q).automorphisms();
    } else {
      throw parse_error("aut needs --lattice, --chain, or --multi-chain");
    }
    Json list = Json::array();
    for (const auto& p : auts) list.push_back(permutation_json(p));
    emit(Json{{"verb", "aut"}, {"count", auts.size()},
              {"automorphisms", std::move(list)}});
    rc = 0;
  });

  auto* cls_cmd = app.add_subcommand("classify", "order type of a lattice");
  cls_cmd->add_option("--lattice", lattice_path, "lattice JSON");
  cls_cmd->add_option("--chain", chain_q, "abstract chain, q proper nodes");
  cls_cmd->add_option("--multi-chain", chain_list,
                      "abstract multi-chain, comma-separated lengths");
  cls_cmd->add_option("--out", out_path, "report path");
  cls_cmd->add_option("--dot", dot_path, "DOT diagram path (lattice input)");
  cls_cmd->callback([&] {
    ClassifyResult c;
    if (!lattice_path.empty()) {
      SubspaceLattice l = lattice_from_json(load_json(lattice_path));
      write_dot(dot_path, l);
      c = l.classify();
    } else if (!chain_list.empty()) {
      c = OrderRelation::multi_chain(parse_length_list(chain_list)).classify();
    } else if (chain_q > 0) {
      c = OrderRelation::chain(chain_q).classify();
    } else {
      throw parse_error("classify needs --lattice, --chain, or --multi-chain");
    }
    emit(classify_json("classify", c));
    rc = 0;
  });

  auto* medial_cmd = app.add_subcommand(
      "realize-medial", "build a diamond or double triangle from v3, v1");
  medial_cmd->add_option("--inputs", inputs_path, "inputs JSON {m, v3, v1}")
      ->required();
  medial_cmd->add_option("--kind", kind, "diamond or double-triangle");
  medial_cmd->add_option("--out", out_path, "report path");
  medial_cmd->add_option("--dot", dot_path, "DOT diagram path");
  medial_cmd->callback([&] {
    MedialInputs in = medial_inputs_from_json(load_json(inputs_path));
    MedialRealization r = realize_double_triangle(in.m, in.v3, in.v1);
    verify_medial_relations(r);
    SubspaceLattice l = medial_lattice(r, parse_kind(kind));
    write_dot(dot_path, l);
    emit(Json{{"verb", "realize-medial"},
              {"kind", kind},
              {"realization", json_of(r)},
              {"lattice", json_of(l)}});
    rc = 0;
  });

  auto* dec_cmd = app.add_subcommand(
      "decompose", "factor a collineation as (node-fixing) x (exchange)");
  dec_cmd->add_option("--medial", inputs_path, "inputs JSON {m, v3, v1}")
      ->required();
  dec_cmd->add_option("--matrix", matrix_path, "matrix JSON")->required();
  dec_cmd->add_option("--kind", kind, "diamond or double-triangle");
  dec_cmd->add_option("--out", out_path, "report path");
  dec_cmd->callback([&] {
    MedialInputs in = medial_inputs_from_json(load_json(inputs_path));
    MedialRealization r = realize_double_triangle(in.m, in.v3, in.v1);
    MedialKind mk = parse_kind(kind);
    SubspaceLattice l = medial_lattice(r, mk);
    Matrix s = square_matrix_from_file(matrix_path, l.ambient(), "matrix");
    if (!is_collineation(l, s)) {
      emit(Json{{"verb", "decompose"}, {"verdict", false}});
      rc = 1;
      return;
    }
    MedialDecomposition d = medial_decompose(r, mk, s);
    emit(Json{{"verb", "decompose"},
              {"verdict", true},
              {"w_index", d.w_index},
              {"w", json_of(d.w)},
              {"grp", json_of(d.grp)}});
    rc = 0;
  });

  auto* perp_cmd =
      app.add_subcommand("perp", "annihilator lattice under the pairing");
  perp_cmd->add_option("--lattice", lattice_path, "lattice JSON")->required();
  perp_cmd->add_option("--out", out_path, "report path");
  perp_cmd->add_option("--dot", dot_path, "DOT diagram path");
  perp_cmd->callback([&] {
    SubspaceLattice l = lattice_from_json(load_json(lattice_path));
    SubspaceLattice d = perp_family(l);
    write_dot(dot_path, d);
    emit(Json{{"verb", "perp"}, {"lattice", json_of(d)}});
    rc = 0;
  });

  auto* conj_cmd = app.add_subcommand(
      "conj-test", "conjugate-linear collineation test");
  conj_cmd->add_option("--lattice", lattice_path, "lattice JSON")->required();
  conj_cmd->add_option("--operator", op_path, "conjugate operator JSON")
      ->required();
  conj_cmd->add_option("--out", out_path, "report path");
  conj_cmd->callback([&] {
    SubspaceLattice l = lattice_from_json(load_json(lattice_path));
    ConjugateOperator c = conjugate_from_json(load_json(op_path));
    if (c.mat.rows() != l.ambient())
      throw precondition_error("operator must be ambient x ambient");
    bool verdict = is_conjugate_collineation(l, c);
    Json report{{"verb", "conj-test"}, {"verdict", verdict}};
    if (verdict)
      report["permutation"] =
          permutation_json(conjugate_induced_automorphism(l, c));
    emit(report);
    rc = verdict ? 0 : 1;
  });

  auto* vol_cmd = app.add_subcommand("volterra", "continuous-nest calculus");
  vol_cmd->require_subcommand(1);

  auto* vapply = vol_cmd->add_subcommand(
      "apply", "transfer operator on a step function");
  vapply->add_option("--phi", phi_path, "pl bijection JSON")->required();
  vapply->add_option("--step", step_path, "step function JSON")->required();
  vapply->add_option("--out", out_path, "report path");
  vapply->callback([&] {
    PLBijection phi = pl_from_json(load_json(phi_path));
    StepFunction f = step_from_json(load_json(step_path));
    StepFunction g = v_phi_apply(phi, f);
    Rational before = f.norm_pow(), after = g.norm_pow();
    if (before != after)
      throw invariant_error("transfer operator failed to be isometric");
    emit(Json{{"verb", "volterra apply"},
              {"result", json_of(g)},
              {"norm_pow", before.str()}});
    rc = 0;
  });

  auto* vdec = vol_cmd->add_subcommand(
      "decompose", "split a cut action into node-fixing and transfer parts");
  vdec->add_option("--phi", phi_path, "cut action JSON")->required();
  vdec->add_option("--out", out_path, "report path");
  vdec->callback([&] {
    PLBijection action = pl_from_json(load_json(phi_path));
    VolterraFactorization f = volterra_decompose(action);
    emit(Json{{"verb", "volterra decompose"},
              {"grp", "fixes-every-cut"},
              {"complement_param", json_of(f.v_param)},
              {"residual_identity", f.residual.is_identity()}});
    rc = 0;
  });

  auto* vcan = vol_cmd->add_subcommand(
      "cantor", "staircase approximant with Lipschitz inverse");
  vcan->add_option("--depth", depth, "subdivision depth")->required();
  vcan->add_option("--out", out_path, "report path");
  vcan->callback([&] {
    PLBijection psi = cantor_psi_approx(depth);
    const auto& pts = psi.breakpoints();
    Rational min_slope;
    for (std::size_t i = 1; i < pts.size(); ++i) {
      Rational s = (pts[i].second - pts[i - 1].second) /
                   (pts[i].first - pts[i - 1].first);
      if (i == 1 || s < min_slope) min_slope = s;
    }
    emit(Json{{"verb", "volterra cantor"},
              {"depth", depth},
              {"psi", json_of(psi)},
              {"min_slope", min_slope.str()},
              {"inverse_quotient_bound", "1/2"}});
    rc = 0;
  });

  auto* vact = vol_cmd->add_subcommand(
      "nest-action", "image of a cut under the transfer operator");
  vact->add_option("--phi", phi_path, "pl bijection JSON")->required();
  vact->add_option("--cut", cut_text, "cut parameter in [0,1]")->required();
  vact->add_option("--out", out_path, "report path");
  vact->callback([&] {
    PLBijection phi = pl_from_json(load_json(phi_path));
    Rational t = Rational::parse(cut_text);
    emit(Json{{"verb", "volterra nest-action"},
              {"cut", t.str()},
              {"image", volterra_nest_action(phi, t).str()}});
    rc = 0;
  });

  auto* shift_cmd =
      app.add_subcommand("shift-nest", "integer-indexed nest and the shift");
  shift_cmd->require_subcommand(1);

  auto* stest = shift_cmd->add_subcommand("test", "invariance of the family");
  stest->add_option("--family", family_tag, "full or half")->required();
  stest->add_option("--shift", shift, "shift exponent")->required();
  stest->add_flag("--one-sided", one_sided, "forward containment only");
  stest->add_option("--out", out_path, "report path");
  stest->callback([&] {
    ShiftFamily fam;
    if (family_tag == "full")
      fam = ShiftFamily::full_z;
    else if (family_tag == "half")
      fam = ShiftFamily::half_from_0;
    else
      throw parse_error("family must be full or half");
    bool verdict = one_sided ? shift_one_sided_test(fam, shift)
                             : shift_collineation_test(fam, shift);
    emit(Json{{"verb", "shift-nest test"},
              {"family", family_tag},
              {"shift", shift},
              {"one_sided", one_sided},
              {"verdict", verdict}});
    rc = verdict ? 0 : 1;
  });

  auto* sdec = shift_cmd->add_subcommand(
      "decompose", "factor a full-nest collineation through the shift");
  sdec->add_option("--shift", shift, "action index: image of node 0")
      ->required();
  sdec->add_option("--out", out_path, "report path");
  sdec->callback([&] {
    ShiftFactorization f = shift_decompose(shift);
    emit(Json{{"verb", "shift-nest decompose"},
              {"grp", "fixes-every-node"},
              {"w_power", f.w_power},
              {"residual_shift", f.residual_shift}});
    rc = 0;
  });

  auto* probe_cmd = app.add_subcommand(
      "probe-reflexive", "search for cyclic subspaces outside the lattice");
  probe_cmd->add_option("--lattice", lattice_path, "lattice JSON")->required();
  probe_cmd->add_option("--trials", trials, "sampled vectors");
  probe_cmd->add_option("--seed", seed, "sampler seed");
  probe_cmd->add_option("--exhaustive-height", exhaustive_height,
                        "exhaustive small-case height (ambient <= 3)");
  probe_cmd->add_option("--cap", cap, "closure node cap");
  probe_cmd->add_option("--out", out_path, "report path");
  probe_cmd->callback([&] {
    SubspaceLattice l = lattice_from_json(load_json(lattice_path));
    ReflexivityProbeOptions opts;
    opts.node_cap = cap;
    opts.exhaustive_height = exhaustive_height;
    ReflexivityReport rep = reflexivity_probe(l, trials, seed, opts);
    Json witnesses = Json::array();
    for (const auto& w : rep.witnesses) witnesses.push_back(json_of(w));
    emit(Json{{"verb", "probe-reflexive"},
              {"seed", rep.seed},
              {"trials", rep.trials},
              {"exhaustive_small", rep.exhaustive_small},
              {"verdict", rep.verdict},
              {"witnesses", std::move(witnesses)}});
    rc = rep.witnesses.empty() ? 0 : 1;
  });

  std::reverse(args.begin(), args.end());
  try {
    app.parse(std::move(args));
    return rc;
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const parse_error& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const precondition_error& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const cap_exceeded_error& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const invariant_error& e) {
    err << "invariant violation: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace sublat
