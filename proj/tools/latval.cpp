// latval: compute lattice-polytope invariants, run the verification suites,
// print cell decompositions. All output is JSON with numbers as strings.
//
// Exit codes:
//   0  success (for verify: every selected suite passed)
//   1  at least one suite failed
//   2  parse error (command line, JSON syntax, malformed polytope or number)
//   3  validation error (the input parses but is not a valid polytope)
//   4  incompatible request (unknown invariant, suite or decomposition,
//      invariant not defined for this polytope, unsupported dimension)

#include "latval/decompositions.hpp"
#include "latval/ehrhart.hpp"
#include "latval/json.hpp"
#include "latval/operators.hpp"
#include "latval/suites.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace {

using namespace latval;

enum Exit : int { kOk = 0, kSuiteFailed = 1, kParse = 2, kValidation = 3, kIncompatible = 4 };

struct ExitError : std::runtime_error {
  ExitError(int code, const std::string& what) : std::runtime_error(what), code(code) {}
  int code;
};

std::string read_text(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw ExitError(kParse, "cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Json parse_document(const std::string& text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ExitError(kParse, origin + ": " + e.what());
  }
}

Polytope load_polytope(const std::string& path) {
  const Json doc = parse_document(read_text(path), path);
  try {
    return polytope_from_json(doc);
  } catch (const FormatError& e) {
    throw ExitError(kParse, path + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw ExitError(kValidation, path + ": " + e.what());
  }
}

Rational parameter(const std::string& text, const char* name) {
  try {
    return parse_rational(text);
  } catch (const InputError& e) {
    throw ExitError(kParse, std::string("--") + name + ": " + e.what());
  }
}

void require_lattice(const Polytope& p, const std::string& invariant) {
  if (!p.is_lattice()) throw ExitError(kIncompatible, invariant + " needs a lattice polytope");
}

struct ComputeArgs {
  std::string invariant;
  std::string file;
  std::string a = "0";
  std::string b = "0";
  std::string c = "1";
};

Json compute(const ComputeArgs& args) {
  const Polytope p = load_polytope(args.file);
  const std::string& inv = args.invariant;
  const Rational a = parameter(args.a, "a");
  const Rational b = parameter(args.b, "b");
  const Rational c = parameter(args.c, "c");
  if (a < 0 || b < 0 || c < 0) throw ExitError(kValidation, "operator parameters must be nonnegative");

  if (inv == "count") return {{"count", to_string(count(p))}};
  if (inv == "moment") return {{"moment", to_json(discrete_moment(p))}};
  if (inv == "ehrhart") {
    require_lattice(p, inv);
    return to_json(ehrhart(p));
  }
  if (inv == "moment-expansion") {
    require_lattice(p, inv);
    return to_json(moment_expansion(p));
  }
  if (inv == "dst") {
    require_lattice(p, inv);
    return {{"dst", to_json(discrete_steiner(p))}};
  }
  if (inv == "centroid") return {{"centroid", to_json(centroid(p))}};
  if (inv == "facet-system") return {{"facet-system", to_json(facet_system(p))}};
  if (inv == "difference-body") return {{inv, to_json(scale(difference_body(p), c))}};
  if (inv == "projection-body") return {{inv, to_json(scale(projection_body(p), c))}};
  if (inv == "z-ab") {
    require_lattice(p, inv);
    return {{inv, to_json(z_ab(p, a, b))}};
  }
  if (inv == "contra-z-ab-2d") {
    if (p.ambient_dim() != 2) throw ExitError(kIncompatible, "contra-z-ab-2d needs ambient dimension 2");
    require_lattice(p, inv);
    return {{inv, to_json(contra_z_ab_2d(p, a, b))}};
  }
  throw ExitError(kIncompatible, "unknown invariant: " + inv);
}

struct VerifyArgs {
  std::string suite = "all";
  std::size_t dim = 2;
  std::size_t trials = 0;
  std::string op;
};

OperatorSpec load_operator(const std::string& text) {
  const bool inline_json = !text.empty() && text.front() == '{';
  const Json doc = parse_document(inline_json ? text : read_text(text), inline_json ? "--op" : text);
  try {
    OperatorSpec op = operator_from_json(doc);
    op.validate();
    return op;
  } catch (const FormatError& e) {
    throw ExitError(kParse, std::string("--op: ") + e.what());
  } catch (const InputError& e) {
    throw ExitError(kIncompatible, std::string("--op: ") + e.what());
  }
}

struct DecompArgs {
  std::string name;
  std::size_t dim = 2;
  std::size_t k = 2;
};

Json decomp(const DecompArgs& args) {
  if (args.dim < 2 || args.dim > 4) throw ExitError(kIncompatible, "decompositions need --dim in 2..4");
  if (args.name == "corner") return to_json(corner_split(args.dim));
  if (args.name == "prism") return to_json(prism_triangulation(args.dim));
  if (args.name == "cube") return to_json(cube_triangulation(args.dim));
  if (args.name == "grid") {
    if (args.k < 1 || args.k > 4) throw ExitError(kIncompatible, "grid needs --k in 1..4");
    return to_json(grid_decomposition(args.dim, args.k));
  }
  throw ExitError(kIncompatible, "unknown decomposition: " + args.name);
}

void emit(const Json& doc, const std::string& path) {
  if (path.empty()) {
    std::cout << doc.dump(2) << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) throw ExitError(kValidation, "cannot write " + path);
  out << doc.dump(2) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact valuations and Minkowski valuations on lattice polytopes"};
  app.require_subcommand(1);
  std::string json_path;
  std::uint64_t seed = 1;
  app.add_option("--json", json_path, "Write the JSON result to this file instead of stdout");
  app.add_option("--seed", seed, "Seed for the verification suites");

  ComputeArgs compute_args;
  auto* compute_cmd = app.add_subcommand("compute", "Compute an invariant of the polytope in a JSON file");
  compute_cmd->add_option("invariant", compute_args.invariant,
                          "count | moment | ehrhart | moment-expansion | dst | difference-body | z-ab | "
                          "projection-body | contra-z-ab-2d | centroid | facet-system")
      ->required();
  compute_cmd->add_option("file", compute_args.file, "Polytope JSON file, or - for stdin")->required();
  compute_cmd->add_option("--a", compute_args.a, "Parameter a as p/q");
  compute_cmd->add_option("--b", compute_args.b, "Parameter b as p/q");
  compute_cmd->add_option("--c", compute_args.c, "Scale c as p/q (difference-body, projection-body)");
  compute_cmd->fallthrough();

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "Run verification suites");
  verify_cmd->add_option("--suite", verify_args.suite, "Suite name or all");
  verify_cmd->add_option("--dim", verify_args.dim, "Ambient dimension");
  verify_cmd->add_option("--trials", verify_args.trials, "Random trials (default depends on --dim)");
  verify_cmd->add_option("--op", verify_args.op, "Operator JSON, inline or a file path");
  verify_cmd->add_flag("--list", "Print the suite names and exit");
  verify_cmd->fallthrough();

  DecompArgs decomp_args;
  auto* decomp_cmd = app.add_subcommand("decomp", "Print a cell decomposition with its face census");
  decomp_cmd->add_option("name", decomp_args.name, "corner | prism | cube | grid")->required();
  decomp_cmd->add_option("--dim", decomp_args.dim, "Ambient dimension");
  decomp_cmd->add_option("--k", decomp_args.k, "Grid size for grid");
  decomp_cmd->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  }

  try {
    if (*compute_cmd) {
      emit(compute(compute_args), json_path);
      return kOk;
    }
    if (*decomp_cmd) {
      emit(decomp(decomp_args), json_path);
      return kOk;
    }

    if (verify_cmd->count("--list")) {
      for (const auto& name : suite_names()) std::cout << name << '\n';
      return kOk;
    }
    SuiteRequest request{verify_args.suite, verify_args.dim, seed, verify_args.trials, std::nullopt};
    if (!verify_args.op.empty()) request.op = load_operator(verify_args.op);
    std::vector<SuiteReport> reports;
    try {
      reports = run_suites(request);
    } catch (const InputError& e) {
      throw ExitError(kIncompatible, e.what());
    }
    bool all_passed = true;
    Json doc = Json::array();
    for (const auto& r : reports) {
      all_passed = all_passed && r.passed();
      doc.push_back(to_json(r));
      if (!json_path.empty())
        std::cout << (r.passed() ? "PASS " : "FAIL ") << r.name << " dim=" << r.dim << " checks=" << r.checks
                  << " failures=" << r.failures.size() << " elapsed=" << r.elapsed_seconds << "s\n";
    }
    emit(doc, json_path);
    return all_passed ? kOk : kSuiteFailed;
  } catch (const ExitError& e) {
    std::cerr << "latval: " << e.what() << '\n';
    return e.code;
  } catch (const UnboundedError& e) {
    std::cerr << "latval: " << e.what() << '\n';
    return kValidation;
  } catch (const std::invalid_argument& e) {
    std::cerr << "latval: " << e.what() << '\n';
    return kIncompatible;
  }
}
