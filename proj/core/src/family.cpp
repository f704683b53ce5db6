#include "latsize/family.hpp"

#include <sstream>
#include <stdexcept>

namespace latsize {

FamilyParams::FamilyParams(std::vector<Int> p) : p_(std::move(p)) {
  if (p_.empty()) throw std::invalid_argument("FamilyParams: need d >= 1 parameters");
  for (const Int& x : p_)
    if (x < 0) throw std::invalid_argument("FamilyParams: parameters must be nonnegative");
}

Int FamilyParams::alpha() const {
  Int a = 0;
  for (std::size_t i = 0; i + 1 < p_.size(); ++i) a += p_[i];
  return a;
}

Int FamilyParams::k() const {
  if (!k_defined())
    throw std::domain_error("FamilyParams::k: undefined for p_d < 2 (p_d = " +
                            p_.back().str() + ")");
  return (p_.back() - 2) / (alpha() + 1);
}

std::string FamilyParams::label() const {
  std::ostringstream os;
  os << "T_{";
  for (std::size_t i = 0; i < p_.size(); ++i) {
    if (i) os << ',';
    os << p_[i];
  }
  os << '}';
  return os.str();
}

const char* describe(ScopeReason r) {
  switch (r) {
    case ScopeReason::NonPositiveLeadingParam: return "some p_i <= 0 for i < d";
    case ScopeReason::LastParamBelowTwo: return "p_d < 2";
    case ScopeReason::BelowQuadraticBound: return "p_d < alpha^2 - alpha";
    case ScopeReason::DimensionBelowTwo: return "d < 2";
  }
  return "?";
}

namespace {
std::string scope_message(const TheoremScope& scope, const std::string& what_op) {
  std::string msg = what_op + ": parameters out of scope (";
  for (std::size_t i = 0; i < scope.reasons.size(); ++i) {
    if (i) msg += "; ";
    msg += describe(scope.reasons[i]);
  }
  return msg + ")";
}
}  // namespace

ScopeError::ScopeError(const TheoremScope& s, const std::string& what_op)
    : std::invalid_argument(scope_message(s, what_op)), scope(s) {}

LatticePolytope family_simplex(const FamilyParams& params) {
  const int d = params.d();
  const int n = d + 1;
  std::vector<Vec> pts;
  pts.reserve(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i < n; ++i) pts.push_back(unit_vec(n, i));
  Vec apex(params.p());
  apex.push_back(1);
  pts.push_back(std::move(apex));
  return LatticePolytope(std::move(pts));
}

TheoremScope theorem_scope(const FamilyParams& params) {
  TheoremScope scope;
  // The d = 1 member provably escapes the simplex-size formula: the triangle
  // conv{(1,0),(0,1),(p,1)} maps into p*Delta while k+3 = p+1.
  if (params.d() < 2) scope.reasons.push_back(ScopeReason::DimensionBelowTwo);
  for (int i = 0; i + 1 < params.d(); ++i)
    if (params.p()[static_cast<std::size_t>(i)] <= 0) {
      scope.reasons.push_back(ScopeReason::NonPositiveLeadingParam);
      break;
    }
  if (params.last() < 2) scope.reasons.push_back(ScopeReason::LastParamBelowTwo);
  const Int a = params.alpha();
  if (params.last() < a * a - a) scope.reasons.push_back(ScopeReason::BelowQuadraticBound);
  scope.in_scope = scope.reasons.empty();
  return scope;
}

Int closed_form_ls_delta(const FamilyParams& params) {
  TheoremScope scope = theorem_scope(params);
  if (!scope.in_scope) throw ScopeError(scope, "closed_form_ls_delta");
  return params.k() + 3;
}

Int closed_form_ls_cube(const FamilyParams& params) {
  TheoremScope scope = theorem_scope(params);
  if (!scope.in_scope) throw ScopeError(scope, "closed_form_ls_cube");
  return params.k() + 2;
}

AffineUnimodularMap witness_matrix(const FamilyParams& params) {
  const int d = params.d();
  const int n = d + 1;
  const Int k = params.k();  // rejects p_d < 2
  Mat rows;
  rows.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < d - 1; ++i) rows.push_back(unit_vec(n, i));
  rows.push_back(unit_vec(n, d));
  Vec last(static_cast<std::size_t>(n), k + 1);
  last[static_cast<std::size_t>(d - 1)] = -1;
  last[static_cast<std::size_t>(d)] = params.last() - params.alpha() * (k + 1) - 1;
  rows.push_back(std::move(last));
  return AffineUnimodularMap(std::move(rows), zero_vec(n));
}

namespace {

LemmaReport enumerate_at_lemma_bound(const FamilyParams& params, const EnumBudget& budget) {
  LemmaReport report;
  report.width_bound = params.k() + 2;
  report.admissible =
      directions_with_width_at_most(family_simplex(params), report.width_bound, budget);
  return report;
}

}  // namespace

LemmaReport check_lemma_ad_restriction(const FamilyParams& params, const EnumBudget& budget) {
  LemmaReport report = enumerate_at_lemma_bound(params, budget);
  const auto ad_index = static_cast<std::size_t>(params.d() - 1);
  for (const Direction& h : report.admissible)
    if (abs_int(h.coords()[ad_index]) >= 2) report.violations.push_back(h);
  report.ok = report.violations.empty();
  return report;
}

LemmaReport check_lemma_forced_width(const FamilyParams& params, const EnumBudget& budget) {
  LemmaReport report = enumerate_at_lemma_bound(params, budget);
  const LatticePolytope T = family_simplex(params);
  const auto ad_index = static_cast<std::size_t>(params.d() - 1);
  for (const Direction& h : report.admissible) {
    if (abs_int(h.coords()[ad_index]) != 1) continue;
    if (width_in_direction(T, h) != report.width_bound) report.violations.push_back(h);
  }
  report.ok = report.violations.empty();
  return report;
}

WidthResult family_width(const FamilyParams& params, const EnumBudget& budget) {
  return lattice_width(family_simplex(params), budget);
}

}  // namespace latsize
