#include "sweep.hpp"

#include "latsize/family.hpp"
#include "latsize/oracle.hpp"
#include "latsize/search.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

namespace latsize::cli {

namespace {

std::vector<std::vector<Int>> expand_tuples(const SweepSpec& spec) {
  std::vector<std::vector<Int>> tuples;
  std::vector<Int> current(static_cast<std::size_t>(spec.d));
  const auto recurse = [&](auto&& self, int i) -> void {
    if (i == spec.d) {
      tuples.push_back(current);
      return;
    }
    const ParamRange& r = spec.ranges[static_cast<std::size_t>(i)];
    for (Int v = r.lo; v <= r.hi; ++v) {
      current[static_cast<std::size_t>(i)] = v;
      self(self, i + 1);
    }
  };
  recurse(recurse, 0);
  return tuples;
}

Int max_abs_entry(const Mat& m) {
  Int best = 0;
  for (const Vec& row : m)
    for (const Int& x : row) best = std::max(best, abs_int(x));
  return best;
}

VerifyRow header_row(const std::vector<Int>& tuple) {
  FamilyParams fp{tuple};
  VerifyRow row;
  row.params = tuple;
  row.alpha = fp.alpha();
  row.in_scope = theorem_scope(fp).in_scope;
  if (fp.k_defined()) {
    row.k = fp.k();
    row.ls_delta_formula = fp.k() + 3;
    row.ls_cube_formula = fp.k() + 2;
  }
  return row;
}

VerifyRow evaluate_tuple(const std::vector<Int>& tuple, const SweepOptions& opts,
                         bool with_oracle) {
  FamilyParams fp{tuple};
  VerifyRow row = header_row(tuple);

  const LatticePolytope T = family_simplex(fp);
  SearchConfig cfg;
  cfg.node_budget = opts.node_budget;
  cfg.enum_budget.cells = opts.enum_cells;
  if (fp.k_defined()) {
    // The explicit certificate bounds both objectives from above, whatever
    // the theorem scope.
    const AffineUnimodularMap W = witness_matrix(fp);
    const LatticePolytope image = apply_map(W, T);
    SearchConfig dcfg = cfg;
    dcfg.initial_upper_bound = l1(image);
    const SearchResult sd = ls_delta(T, dcfg);
    if (sd.certified) row.ls_delta_search = sd.value;

    Int cube_ub = 0;
    for (int i = 0; i <= fp.d(); ++i)
      cube_ub = std::max(cube_ub,
                         width_in_direction(image, Direction(unit_vec(fp.d() + 1, i))));
    SearchConfig ccfg = cfg;
    ccfg.initial_upper_bound = cube_ub;
    const SearchResult sc = ls_cube(T, ccfg);
    if (sc.certified) row.ls_cube_search = sc.value;

    if (with_oracle && fp.d() + 1 <= 3) {
      OracleConfig ocfg;
      ocfg.entry_bound = opts.oracle_entry_bound
                             ? *opts.oracle_entry_bound
                             : std::max(max_abs_entry(sd.witness.matrix()),
                                        max_abs_entry(sc.witness.matrix())) +
                                   1;
      ocfg.time_budget = std::chrono::milliseconds(opts.time_budget_ms);
      row.oracle_ls_delta = latsize::oracle_ls_delta(T, ocfg);
      row.oracle_ls_cube = latsize::oracle_ls_cube(T, ocfg);
    }
  } else {
    const SearchResult sd = ls_delta(T, cfg);
    if (sd.certified) row.ls_delta_search = sd.value;
    const SearchResult sc = ls_cube(T, cfg);
    if (sc.certified) row.ls_cube_search = sc.value;
  }

  const bool budget = !row.ls_delta_search || !row.ls_cube_search;
  const bool oracle_consistent =
      !with_oracle ||
      ((!row.oracle_ls_delta || row.oracle_ls_delta == row.ls_delta_search) &&
       (!row.oracle_ls_cube || row.oracle_ls_cube == row.ls_cube_search));
  if (budget) {
    row.match = "budget";
  } else if (!row.k) {
    row.match = "n/a";
  } else {
    const bool agree = row.ls_delta_formula == row.ls_delta_search &&
                       row.ls_cube_formula == row.ls_cube_search && oracle_consistent;
    if (row.in_scope)
      row.match = agree ? "yes" : "no";
    else
      row.match = agree ? "oos-agree" : "oos-differ";
  }
  return row;
}

std::string int_str(const std::optional<Int>& v) { return v ? v->str() : std::string(); }

std::string params_str(const std::vector<Int>& p) {
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ' ';
    s += p[i].str();
  }
  return s;
}

}  // namespace

VerifyReport run_verify_sweep(const SweepSpec& spec, const SweepOptions& opts) {
  if (static_cast<int>(spec.ranges.size()) != spec.d)
    throw std::invalid_argument("verify sweep: need one range per parameter");
  for (const ParamRange& r : spec.ranges)
    if (r.lo < 0)
      throw std::invalid_argument("verify sweep: parameters are nonnegative");
  // An empty range (lo > hi) is a valid empty sweep.

  std::vector<std::vector<Int>> tuples = expand_tuples(spec);
  const auto excluded = [&](const std::vector<Int>& t) {
    if (spec.coprime_only && content(t) != 1) return true;
    if (spec.in_scope_only && !theorem_scope(FamilyParams{t}).in_scope) return true;
    return false;
  };
  tuples.erase(std::remove_if(tuples.begin(), tuples.end(), excluded), tuples.end());

  VerifyReport report;
  report.with_oracle = opts.run_oracle;
  report.rows.resize(tuples.size());

  const int threads = std::max(1, opts.threads);
  std::atomic<std::size_t> next{0};
  const auto worker = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= tuples.size()) return;
      try {
        report.rows[i] = evaluate_tuple(tuples[i], opts, opts.run_oracle);
      } catch (const BudgetError&) {
        report.rows[i] = header_row(tuples[i]);
        report.rows[i].match = "budget";
      }
    }
  };
  if (threads == 1 || tuples.size() <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }

  for (const VerifyRow& row : report.rows) {
    if (row.match == "no") report.any_mismatch = true;
    if (row.match == "budget") report.any_budget = true;
  }
  return report;
}

std::string render_csv(const VerifyReport& report) {
  std::ostringstream os;
  os << "params,alpha,k,in_scope,ls_delta_formula,ls_delta_search,ls_cube_formula,"
        "ls_cube_search";
  if (report.with_oracle) os << ",oracle_ls_delta,oracle_ls_cube";
  os << ",match\n";
  for (const VerifyRow& r : report.rows) {
    os << params_str(r.params) << ',' << r.alpha.str() << ',' << int_str(r.k) << ','
       << (r.in_scope ? "true" : "false") << ',' << int_str(r.ls_delta_formula) << ','
       << int_str(r.ls_delta_search) << ',' << int_str(r.ls_cube_formula) << ','
       << int_str(r.ls_cube_search);
    if (report.with_oracle)
      os << ',' << int_str(r.oracle_ls_delta) << ',' << int_str(r.oracle_ls_cube);
    os << ',' << r.match << '\n';
  }
  return os.str();
}

std::string render_json(const VerifyReport& report) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  const auto put = [](nlohmann::ordered_json& j, const char* key,
                      const std::optional<Int>& v) {
    if (v)
      j[key] = v->str();
    else
      j[key] = nullptr;
  };
  for (const VerifyRow& r : report.rows) {
    nlohmann::ordered_json j;
    nlohmann::ordered_json params = nlohmann::ordered_json::array();
    for (const Int& p : r.params) params.push_back(p.str());
    j["params"] = std::move(params);
    j["alpha"] = r.alpha.str();
    put(j, "k", r.k);
    j["in_scope"] = r.in_scope;
    put(j, "ls_delta_formula", r.ls_delta_formula);
    put(j, "ls_delta_search", r.ls_delta_search);
    put(j, "ls_cube_formula", r.ls_cube_formula);
    put(j, "ls_cube_search", r.ls_cube_search);
    if (report.with_oracle) {
      put(j, "oracle_ls_delta", r.oracle_ls_delta);
      put(j, "oracle_ls_cube", r.oracle_ls_cube);
    }
    j["match"] = r.match;
    rows.push_back(std::move(j));
  }
  nlohmann::ordered_json out;
  out["rows"] = std::move(rows);
  return out.dump(2) + "\n";
}

std::string render_human(const VerifyReport& report) {
  std::ostringstream os;
  for (const VerifyRow& r : report.rows) {
    os << params_str(r.params) << ": alpha=" << r.alpha.str()
       << " k=" << (r.k ? r.k->str() : "-") << (r.in_scope ? " in-scope" : " out-of-scope")
       << " ls_delta=" << (r.ls_delta_search ? r.ls_delta_search->str() : "?")
       << (r.ls_delta_formula ? " (formula " + r.ls_delta_formula->str() + ")" : "")
       << " ls_cube=" << (r.ls_cube_search ? r.ls_cube_search->str() : "?")
       << (r.ls_cube_formula ? " (formula " + r.ls_cube_formula->str() + ")" : "");
    if (report.with_oracle && r.oracle_ls_delta)
      os << " oracle=" << r.oracle_ls_delta->str() << '/' << r.oracle_ls_cube->str();
    os << " match=" << r.match << '\n';
  }
  std::size_t in_scope = 0, matched = 0;
  for (const VerifyRow& r : report.rows) {
    if (r.in_scope) {
      ++in_scope;
      if (r.match == "yes") ++matched;
    }
  }
  os << report.rows.size() << " rows, " << in_scope << " in scope, " << matched
     << " matching\n";
  return os.str();
}

}  // namespace latsize::cli
