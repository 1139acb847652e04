// mcg-cocycle: evaluate Morita's and Earle's twisted cocycles on free-group
// automorphisms, emit builtin elements, and run the verification suites.
//
// Exit codes: 0 ok, 1 verification failure, 2 bad input, 3 map not in N.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "mcg/earle.hpp"
#include "mcg/endomorphism.hpp"
#include "mcg/homology.hpp"
#include "mcg/morita.hpp"
#include "mcg/serialize.hpp"
#include "mcg/verify.hpp"

namespace {

using namespace mcg;

constexpr int kExitVerifyFailed = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitNotInN = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const std::vector<std::string> kCocycles{"all", "rho", "morita-f-tilde", "morita-f", "earle-psi"};

/// builtin names: identity, iota, inner:<word>, twist:<k>:<variant>
Auto make_builtin(const std::string& name, Genus g) {
  if (name == "identity") return Auto::identity(g);
  if (name == "iota") return jablow(g);
  if (name.rfind("inner:", 0) == 0) {
    try {
      return inner(Word::parse(g, name.substr(6)));
    } catch (const ParseError& e) {
      throw UsageError(e.what());
    }
  }
  if (name.rfind("twist:", 0) == 0) {
    const auto rest = name.substr(6);
    const auto colon = rest.find(':');
    if (colon == std::string::npos) throw UsageError("twist builtin needs twist:<k>:<variant>");
    int k = 0;
    try {
      k = std::stoi(rest.substr(0, colon));
    } catch (const std::exception&) {
      throw UsageError("bad handle in '" + name + "'");
    }
    try {
      return twist(g, k, rest.substr(colon + 1));
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  throw UsageError("unknown builtin '" + name + "'");
}

Genus parse_genus(int g) {
  try {
    return Genus(g);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const int g = std::stoi(text);
      return {g, g};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw UsageError("bad genus range '" + text + "' (expected N or LO..HI)");
  }
}

std::string matrix_text(const SpMat& m) {
  std::string s;
  for (int r = 0; r < m.dim(); ++r) {
    s += "  [";
    for (int c = 0; c < m.dim(); ++c) s += (c ? " " : "") + std::to_string(m(r, c));
    s += "]\n";
  }
  return s;
}

// ---------------------------------------------------------------------------

struct EvalArgs {
  std::string target;
  std::string in_path;
  int genus = 0;
  std::string cocycle = "all";
  std::string format = "text";
};

int cmd_eval(const EvalArgs& a) {
  std::optional<Endo> phi;
  std::optional<Endo> backward;
  std::string source;

  if (!a.in_path.empty()) {
    if (!a.target.empty()) throw UsageError("give either a builtin target or --in, not both");
    MapFile file = read_map_file(a.in_path);
    if (a.genus != 0 && a.genus != file.forward.genus().value()) {
      throw UsageError("--g " + std::to_string(a.genus) + " disagrees with the file's genus");
    }
    phi = file.forward;
    if (file.certified) backward = file.certified->backward();
    source = a.in_path;
  } else {
    if (a.target.rfind("builtin:", 0) != 0) throw UsageError("target must be builtin:<name> (or use --in)");
    const Genus g = parse_genus(a.genus == 0 ? 2 : a.genus);
    const Auto built = make_builtin(a.target.substr(8), g);
    phi = built.forward();
    backward = built.backward();
    source = a.target;
  }

  const Genus g = phi->genus();
  const auto witness = in_N(*phi);
  if (!witness) {
    const auto image = cyclic_reduce(apply(*phi, zeta(g)));
    std::cerr << "error: map does not send zeta to a conjugate of zeta\n"
              << "cyclically reduced image of zeta: " << image.core.str() << "\n";
    return kExitNotInN;
  }

  const bool all = a.cocycle == "all";
  const SpMat rho = induced_matrix(*phi);

  Json doc;
  doc["genus"] = g.value();
  doc["source"] = source;
  doc["input"] = map_to_json(*phi, backward ? &*backward : nullptr);
  doc["automorphism_certified"] = backward.has_value();
  doc["in_M_g1"] = witness->conjugator.empty();
  doc["witness"] = witness->conjugator.str();
  if (all || a.cocycle == "rho") doc["rho"] = to_json(rho);
  std::optional<HVec> ft, f;
  std::optional<QVec> psi;
  if (all || a.cocycle == "morita-f-tilde") {
    ft = f_tilde_unchecked(*phi);
    doc["morita_f_tilde"] = to_json(*ft);
  }
  if (all || a.cocycle == "morita-f") {
    f = morita_f(*witness);
    doc["morita_f"] = to_json(*f);
  }
  if (all || a.cocycle == "earle-psi") {
    psi = earle_psi(*witness);
    doc["earle_psi"] = to_json(*psi);
  }

  if (a.format == "structured") {
    std::cout << doc.dump(2) << "\n";
    return 0;
  }
  std::cout << "genus: " << g.value() << "\n"
            << "source: " << source << "\n"
            << "in M_g1: " << (witness->conjugator.empty() ? "yes" : "no") << "\n"
            << "witness u: " << witness->conjugator.str() << "\n";
  if (!backward) std::cout << "note: no inverse supplied; results assume the map is an automorphism\n";
  if (all || a.cocycle == "rho") std::cout << "rho:\n" << matrix_text(rho);
  if (ft) std::cout << "morita-f-tilde: " << ft->str() << "\n";
  if (f) std::cout << "morita-f: " << f->str() << "\n";
  if (psi) std::cout << "earle-psi: " << psi->str() << "\n"
                     << "earle-psi: " << psi->str_canonical() << "\n";
  return 0;
}

int cmd_builtin(const std::string& name, int genus, const std::string& out_path) {
  const Genus g = parse_genus(genus);
  const Auto a = make_builtin(name, g);
  const std::string text = map_to_json(a).dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) throw UsageError("cannot write " + out_path);
    out << text;
  }
  return 0;
}

struct VerifyArgs {
  std::string suite = "all";
  std::string genus = "2..5";
  int samples = 200;
  std::uint64_t seed = 1;
  std::string format = "text";
};

int cmd_verify(const VerifyArgs& a) {
  verify::Options opts;
  std::tie(opts.genus_lo, opts.genus_hi) = parse_range(a.genus);
  opts.samples = a.samples;
  opts.seed = a.seed;
  std::vector<verify::PropertyResult> results;
  try {
    results = verify::run_suite(a.suite, opts);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }

  bool ok = true;
  Json doc;
  doc["suite"] = a.suite;
  doc["genus"] = {opts.genus_lo, opts.genus_hi};
  doc["samples"] = opts.samples;
  doc["seed"] = opts.seed;
  Json props = Json::array();
  for (const auto& r : results) {
    ok = ok && r.passed;
    if (a.format == "structured") {
      Json p;
      p["suite"] = r.suite;
      p["property"] = r.name;
      p["genus"] = r.genus;
      p["checked"] = r.checked;
      p["passed"] = r.passed;
      if (!r.passed) p["counterexample"] = r.counterexample;
      props.push_back(std::move(p));
    } else {
      std::cout << (r.passed ? "PASS " : "FAIL ") << r.suite << " g=" << r.genus << " " << r.name << " ("
                << r.checked << " checked)";
      if (!r.passed) std::cout << "\n  counterexample: " << r.counterexample;
      std::cout << "\n";
    }
  }
  if (a.format == "structured") {
    doc["properties"] = std::move(props);
    doc["passed"] = ok;
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << (ok ? "all properties passed" : "some properties FAILED") << "\n";
  }
  return ok ? 0 : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Morita and Earle twisted 1-cocycles on the mapping class group"};
  app.require_subcommand(1);

  EvalArgs eval_args;
  auto* eval = app.add_subcommand("eval", "evaluate cocycles on a map");
  eval->add_option("target", eval_args.target, "builtin:<name> (identity, iota, inner:<word>, twist:<k>:<variant>)");
  eval->add_option("--in", eval_args.in_path, "automorphism file");
  eval->add_option("--g", eval_args.genus, "genus for builtin targets");
  eval->add_option("--cocycle", eval_args.cocycle, "value to print")->check(CLI::IsMember(kCocycles));
  eval->add_option("--format", eval_args.format)->check(CLI::IsMember({"text", "structured"}));

  std::string builtin_name;
  int builtin_genus = 2;
  std::string builtin_out;
  auto* builtin = app.add_subcommand("builtin", "write the automorphism file of a builtin element");
  builtin->add_option("name", builtin_name, "identity, iota, inner:<word>, twist:<k>:<variant>")->required();
  builtin->add_option("--g", builtin_genus, "genus");
  builtin->add_option("--out", builtin_out, "output path (default stdout)");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "run property suites");
  verify->add_option("suite", verify_args.suite, "words, d-function, cocycle-n, descent, earle, paper-vectors, all");
  verify->add_option("--g", verify_args.genus, "genus or range LO..HI");
  verify->add_option("--samples", verify_args.samples, "random samples per property")->check(CLI::PositiveNumber);
  verify->add_option("--seed", verify_args.seed);
  verify->add_option("--format", verify_args.format)->check(CLI::IsMember({"text", "structured"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitBadInput;
  }

  try {
    if (*eval) return cmd_eval(eval_args);
    if (*builtin) return cmd_builtin(builtin_name, builtin_genus, builtin_out);
    return cmd_verify(verify_args);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const GenusMismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
}
