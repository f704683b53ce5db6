// latsize: exact lattice-width and lattice-size computations for small
// lattice polytopes, with closed-form evaluation and exhaustive verification
// for the parametric simplex family T_{p_1,...,p_d}.
//
// Exit codes: 0 success / all rows match, 1 usage or parse error,
// 2 verification mismatch, 3 budget exceeded.

#include "latsize/family.hpp"
#include "latsize/hull.hpp"
#include "latsize/io.hpp"
#include "latsize/oracle.hpp"
#include "latsize/search.hpp"
#include "sweep.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace latsize;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitMismatch = 2;
constexpr int kExitBudget = 3;

struct CommonOpts {
  std::string format = "human";  // human|csv|json
  std::string output;            // empty = stdout
  std::uint64_t node_budget = 100'000'000;
  long long time_budget_s = 600;
  int threads = 1;
  bool certify = false;
};

void emit(const CommonOpts& opts, const std::string& text) {
  if (opts.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(opts.output, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + opts.output);
  out << text;
}

PolytopeDocument load_document(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open input file: " + path);
    buf << in.rdbuf();
  }
  return parse_polytope_document(buf.str());
}

std::vector<Int> parse_params(const std::vector<std::string>& raw) {
  std::vector<Int> p;
  p.reserve(raw.size());
  for (const std::string& s : raw) p.push_back(parse_decimal_int(s));
  return p;
}

std::string matrix_lines(const Mat& m, const char* indent = "  ") {
  std::string s;
  for (const Vec& row : m) s += indent + to_string(row) + "\n";
  return s;
}

nlohmann::ordered_json json_vec(const Vec& v) {
  nlohmann::ordered_json a = nlohmann::ordered_json::array();
  for (const Int& x : v) a.push_back(x.str());
  return a;
}

nlohmann::ordered_json json_mat(const Mat& m) {
  nlohmann::ordered_json a = nlohmann::ordered_json::array();
  for (const Vec& row : m) a.push_back(json_vec(row));
  return a;
}

// ---------------------------------------------------------------------------
// width

int cmd_width(const std::string& input, const CommonOpts& opts, bool minimizers) {
  const PolytopeDocument doc = load_document(input);
  const LatticePolytope P = to_polytope(doc);
  const WidthResult r = lattice_width(P, {}, minimizers);

  if (opts.format == "json") {
    nlohmann::ordered_json j;
    if (doc.name) j["name"] = *doc.name;
    j["dim"] = P.dim();
    j["lattice_width"] = r.width.str();
    j["witness"] = json_vec(r.witness.coords());
    if (minimizers) {
      nlohmann::ordered_json a = nlohmann::ordered_json::array();
      for (const Direction& h : r.minimizers) a.push_back(json_vec(h.coords()));
      j["minimizers"] = std::move(a);
    }
    emit(opts, j.dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << "polytope: " << (doc.name ? *doc.name : input) << "\n"
       << "dim: " << P.dim() << "\n"
       << "lattice width: " << r.width << "\n"
       << "witness: " << to_string(r.witness.coords()) << "\n";
    if (minimizers) {
      os << "minimizing directions:\n";
      for (const Direction& h : r.minimizers) os << "  " << to_string(h.coords()) << "\n";
    }
    emit(opts, os.str());
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// lsdelta / lscube

int cmd_ls(const std::string& input, const CommonOpts& opts, bool cube) {
  const PolytopeDocument doc = load_document(input);
  const LatticePolytope P = to_polytope(doc);
  SearchConfig cfg;
  cfg.node_budget = opts.node_budget;
  const SearchResult r = cube ? ls_cube(P, cfg) : ls_delta(P, cfg);

  bool contained = true;
  if (opts.certify) {
    // Re-check the containment independently of the search bookkeeping.
    const LatticePolytope image = apply_map(r.witness, P);
    for (const Vec& q : image.points()) {
      Int sum = 0;
      for (const Int& x : q) {
        if (x < 0 || (cube && x > r.value)) contained = false;
        sum += x;
      }
      if (!cube && sum > r.value) contained = false;
    }
  }

  const char* name = cube ? "ls_cube" : "ls_delta";
  if (opts.format == "json") {
    nlohmann::ordered_json j;
    if (doc.name) j["name"] = *doc.name;
    j[name] = r.value.str();
    j["certified"] = r.certified;
    j["witness"] = json_mat(r.witness.matrix());
    j["translation"] = json_vec(r.witness.translation());
    j["nodes_explored"] = r.nodes_explored;
    j["candidates_considered"] = r.candidates_considered;
    if (opts.certify) j["containment_verified"] = contained;
    emit(opts, j.dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << "polytope: " << (doc.name ? *doc.name : input) << "\n"
       << name << ": " << r.value << "\n"
       << "certified: " << (r.certified ? "yes" : "no (node budget exceeded)") << "\n"
       << "witness matrix (rows):\n"
       << matrix_lines(r.witness.matrix()) << "translation: "
       << to_string(r.witness.translation()) << "\n"
       << "nodes explored: " << r.nodes_explored << "\n"
       << "candidates considered: " << r.candidates_considered << "\n";
    if (opts.certify)
      os << "containment verified: " << (contained ? "yes" : "NO") << "\n";
    emit(opts, os.str());
  }
  if (!contained) return kExitMismatch;
  return r.certified ? kExitOk : kExitBudget;
}

// ---------------------------------------------------------------------------
// family

int cmd_family(const std::vector<std::string>& raw_params, const CommonOpts& opts,
               bool run_search) {
  const FamilyParams fp{parse_params(raw_params)};
  const TheoremScope scope = theorem_scope(fp);
  const LatticePolytope T = family_simplex(fp);
  const PolytopeDocument doc = make_document(T, fp.label());

  std::optional<SearchResult> sd, sc;
  if (run_search) {
    SearchConfig cfg;
    cfg.node_budget = opts.node_budget;
    sd = ls_delta(T, cfg);
    sc = ls_cube(T, cfg);
  }

  nlohmann::ordered_json j;
  std::ostringstream os;
  os << "family: " << fp.label() << "\n"
     << "d: " << fp.d() << "\n"
     << "alpha: " << fp.alpha() << "\n"
     << "k: " << (fp.k_defined() ? fp.k().str() : "undefined (p_d < 2)") << "\n";
  j["family"] = fp.label();
  j["d"] = fp.d();
  j["alpha"] = fp.alpha().str();
  j["k"] = fp.k_defined() ? nlohmann::ordered_json(fp.k().str())
                          : nlohmann::ordered_json(nullptr);

  os << "in scope: " << (scope.in_scope ? "yes" : "no") << "\n";
  j["in_scope"] = scope.in_scope;
  if (!scope.in_scope) {
    nlohmann::ordered_json reasons = nlohmann::ordered_json::array();
    os << "scope violations:\n";
    for (ScopeReason r : scope.reasons) {
      os << "  - " << describe(r) << "\n";
      reasons.push_back(describe(r));
    }
    j["scope_violations"] = std::move(reasons);
  }

  if (scope.in_scope) {
    os << "ls_delta (closed form): " << closed_form_ls_delta(fp) << "\n"
       << "ls_cube (closed form): " << closed_form_ls_cube(fp) << "\n";
    j["ls_delta_formula"] = closed_form_ls_delta(fp).str();
    j["ls_cube_formula"] = closed_form_ls_cube(fp).str();
  }

  if (fp.k_defined()) {
    const AffineUnimodularMap W = witness_matrix(fp);
    os << "witness matrix (rows):\n" << matrix_lines(W.matrix());
    j["witness"] = json_mat(W.matrix());
  }

  bool mismatch = false;
  if (sd) {
    os << "ls_delta (search): " << sd->value
       << (sd->certified ? "" : " (not certified)") << "\n"
       << "ls_cube (search): " << sc->value << (sc->certified ? "" : " (not certified)")
       << "\n";
    j["ls_delta_search"] = sd->value.str();
    j["ls_cube_search"] = sc->value.str();
    j["search_certified"] = sd->certified && sc->certified;
    if (scope.in_scope && sd->certified && sc->certified) {
      const bool agree = sd->value == closed_form_ls_delta(fp) &&
                         sc->value == closed_form_ls_cube(fp);
      os << "formula matches search: " << (agree ? "yes" : "NO") << "\n";
      j["formula_matches_search"] = agree;
      mismatch = !agree;
    }
  }

  os << "document: " << to_json(doc) << "\n";
  j["document"] = nlohmann::ordered_json::parse(to_json(doc));

  emit(opts, opts.format == "json" ? j.dump(2) + "\n" : os.str());
  if (mismatch) return kExitMismatch;
  if (sd && !(sd->certified && sc->certified)) return kExitBudget;
  return kExitOk;
}

// ---------------------------------------------------------------------------
// lemmas

int cmd_lemmas(const std::vector<std::string>& raw_params, const CommonOpts& opts) {
  const FamilyParams fp{parse_params(raw_params)};
  if (!fp.k_defined())
    throw std::invalid_argument("lemmas: requires p_d >= 2 so that k is defined");
  const LatticePolytope T = family_simplex(fp);
  const LemmaReport ad = check_lemma_ad_restriction(fp);
  const LemmaReport forced = check_lemma_forced_width(fp);

  if (opts.format == "json") {
    nlohmann::ordered_json j;
    j["family"] = fp.label();
    j["width_bound"] = ad.width_bound.str();
    nlohmann::ordered_json dirs = nlohmann::ordered_json::array();
    for (const Direction& h : ad.admissible) {
      nlohmann::ordered_json e;
      e["direction"] = json_vec(h.coords());
      e["width"] = width_in_direction(T, h).str();
      dirs.push_back(std::move(e));
    }
    j["admissible"] = std::move(dirs);
    j["ad_restriction_ok"] = ad.ok;
    j["forced_width_ok"] = forced.ok;
    emit(opts, j.dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << "family: " << fp.label() << "\n"
       << "width bound (k+2): " << ad.width_bound << "\n"
       << "admissible directions (" << ad.admissible.size() << "):\n";
    for (const Direction& h : ad.admissible)
      os << "  " << to_string(h.coords()) << "  width " << width_in_direction(T, h)
         << "\n";
    os << "d-th coordinate restricted to {-1,0,1}: " << (ad.ok ? "pass" : "FAIL") << "\n"
       << "width forced to k+2 when |a_d| = 1: " << (forced.ok ? "pass" : "FAIL")
       << "\n";
    emit(opts, os.str());
  }
  return (ad.ok && forced.ok) ? kExitOk : kExitMismatch;
}

// ---------------------------------------------------------------------------
// verify

int cmd_verify(const cli::SweepSpec& spec, const cli::SweepOptions& sweep_opts,
               const CommonOpts& opts) {
  const cli::VerifyReport report = cli::run_verify_sweep(spec, sweep_opts);
  std::string text;
  if (opts.format == "csv")
    text = cli::render_csv(report);
  else if (opts.format == "json")
    text = cli::render_json(report);
  else
    text = cli::render_human(report);
  emit(opts, text);
  if (report.any_mismatch) return kExitMismatch;
  if (report.any_budget) return kExitBudget;
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "latsize: exact lattice width and lattice size (simplex and cube) of "
      "lattice polytopes, and closed-form verification for the simplex family "
      "T_{p_1,...,p_d}"};
  app.require_subcommand(1);
  app.fallthrough();  // global options may appear after subcommand arguments

  CommonOpts opts;
  app.add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"human", "csv", "json"}))
      ->capture_default_str();
  app.add_option("--output", opts.output, "Write the report to a file instead of stdout");
  app.add_option("--node-budget", opts.node_budget,
                 "Search node budget (partial matrices)")
      ->envname("LATSIZE_NODE_BUDGET")
      ->capture_default_str();
  app.add_option("--time-budget", opts.time_budget_s, "Oracle time budget in seconds")
      ->capture_default_str();
  app.add_option("--threads", opts.threads, "Worker threads for verify sweeps")
      ->envname("LATSIZE_THREADS")
      ->capture_default_str();

  std::string input;
  bool minimizers = false;
  CLI::App* width = app.add_subcommand("width", "Lattice width of a polytope document");
  width->add_option("input", input, "JSON polytope document ('-' for stdin)")->required();
  width->add_flag("--minimizers", minimizers, "List all width-minimizing directions");

  CLI::App* lsdelta =
      app.add_subcommand("lsdelta", "Lattice size w.r.t. the standard simplex");
  lsdelta->add_option("input", input, "JSON polytope document ('-' for stdin)")
      ->required();
  lsdelta->add_flag("--certify", opts.certify,
                    "Independently re-verify the witness containment");

  CLI::App* lscube = app.add_subcommand("lscube", "Lattice size w.r.t. the unit cube");
  lscube->add_option("input", input, "JSON polytope document ('-' for stdin)")->required();
  lscube->add_flag("--certify", opts.certify,
                   "Independently re-verify the witness containment");

  std::vector<std::string> raw_params;
  bool family_search = false;
  CLI::App* family =
      app.add_subcommand("family", "Closed forms and witness for T_{p_1,...,p_d}");
  family->add_option("params", raw_params, "Family parameters p_1 ... p_d")
      ->required()
      ->expected(-1);
  family->add_flag("--search", family_search, "Also run the search engine and compare");

  CLI::App* lemmas =
      app.add_subcommand("lemmas", "Complete direction enumeration at width k+2");
  lemmas->add_option("params", raw_params, "Family parameters p_1 ... p_d")
      ->required()
      ->expected(-1);

  cli::SweepSpec spec;
  cli::SweepOptions sweep_opts;
  std::vector<std::string> range_strs;
  long long oracle_bound = 0;
  CLI::App* verify = app.add_subcommand(
      "verify", "Sweep family parameters and compare formulas against the search");
  verify->add_option("-d,--d", spec.d, "Number of family parameters")->required();
  verify
      ->add_option("--range", range_strs,
                   "Inclusive range lo:hi for each parameter (repeat d times)")
      ->required()
      ->expected(-1);
  verify->add_flag("--in-scope-only", spec.in_scope_only,
                   "Keep only tuples satisfying the theorem hypotheses");
  verify->add_flag("--coprime-only", spec.coprime_only,
                   "Keep only tuples with gcd(p_1,...,p_d) = 1");
  verify->add_flag("--oracle", sweep_opts.run_oracle,
                   "Cross-check with the brute-force oracle (dim <= 3)");
  verify->add_option("--entry-bound", oracle_bound,
                     "Oracle entry bound (default: max witness entry + 1)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*width) return cmd_width(input, opts, minimizers);
    if (*lsdelta) return cmd_ls(input, opts, /*cube=*/false);
    if (*lscube) return cmd_ls(input, opts, /*cube=*/true);
    if (*family) return cmd_family(raw_params, opts, family_search);
    if (*lemmas) return cmd_lemmas(raw_params, opts);
    if (*verify) {
      for (const std::string& s : range_strs) {
        const auto colon = s.find(':');
        if (colon == std::string::npos)
          throw std::invalid_argument("range must be lo:hi, got '" + s + "'");
        spec.ranges.push_back(cli::ParamRange{parse_decimal_int(s.substr(0, colon)),
                                              parse_decimal_int(s.substr(colon + 1))});
      }
      if (oracle_bound > 0) sweep_opts.oracle_entry_bound = Int(oracle_bound);
      sweep_opts.node_budget = opts.node_budget;
      sweep_opts.time_budget_ms = opts.time_budget_s * 1000;
      sweep_opts.threads = opts.threads;
      return cmd_verify(spec, sweep_opts, opts);
    }
  } catch (const BudgetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
