#pragma once

#include "latsize/geometry.hpp"
#include "latsize/width.hpp"

#include <string>
#include <vector>

namespace latsize {

/// Parameters (p_1, ..., p_d) of the simplex
///   T = conv{ e_1, ..., e_{d+1}, (p_1, ..., p_d, 1) }  in R^{d+1},
/// with the derived quantities alpha = p_1 + ... + p_{d-1} and, once
/// p_d >= 2, k = floor((p_d - 2) / (alpha + 1)).
class FamilyParams {
 public:
  explicit FamilyParams(std::vector<Int> p);

  int d() const { return static_cast<int>(p_.size()); }
  const std::vector<Int>& p() const { return p_; }
  const Int& last() const { return p_.back(); }

  Int alpha() const;

  bool k_defined() const { return p_.back() >= 2; }
  /// Throws std::domain_error when p_d < 2.
  Int k() const;

  std::string label() const;  // "T_{p1,...,pd}"

 private:
  std::vector<Int> p_;
};

enum class ScopeReason {
  NonPositiveLeadingParam,  // some p_i <= 0 for i < d
  LastParamBelowTwo,        // p_d < 2
  BelowQuadraticBound,      // p_d < alpha^2 - alpha
  DimensionBelowTwo,        // d < 2; the simplex-size formula fails at d = 1
};

const char* describe(ScopeReason r);

/// Whether the closed-form lattice sizes apply, with every violated
/// hypothesis listed. in_scope iff reasons is empty.
struct TheoremScope {
  bool in_scope = false;
  std::vector<ScopeReason> reasons;
};

struct ScopeError : std::invalid_argument {
  explicit ScopeError(const TheoremScope& scope, const std::string& what_op);
  TheoremScope scope;
};

LatticePolytope family_simplex(const FamilyParams& params);

TheoremScope theorem_scope(const FamilyParams& params);

/// k + 3, valid only in scope (throws ScopeError otherwise).
Int closed_form_ls_delta(const FamilyParams& params);

/// k + 2, valid only in scope (throws ScopeError otherwise).
Int closed_form_ls_cube(const FamilyParams& params);

/// The explicit unimodular certificate: rows e_1..e_{d-1}, then e_{d+1},
/// then (k+1, ..., k+1, -1, p_d - alpha(k+1) - 1), zero translation. For
/// in-scope parameters the image has l1 = k+3 and, shifted by e_{d+1}, lies
/// in [0, k+2]^{d+1}. Requires p_d >= 2.
AffineUnimodularMap witness_matrix(const FamilyParams& params);

/// Complete enumeration behind the direction lemmas, at width bound k+2.
struct LemmaReport {
  Int width_bound;
  std::vector<Direction> admissible;  // all primitive h with width <= bound
  std::vector<Direction> violations;  // entries breaking the lemma, if any
  bool ok = false;
};

/// Every primitive h with w_h(T) <= k+2 must have d-th coordinate in
/// {-1, 0, 1}. Requires p_d >= 2.
LemmaReport check_lemma_ad_restriction(const FamilyParams& params,
                                       const EnumBudget& budget = {});

/// Every primitive h with d-th coordinate +-1 and w_h(T) <= k+2 must have
/// width exactly k+2. Requires p_d >= 2.
LemmaReport check_lemma_forced_width(const FamilyParams& params,
                                     const EnumBudget& budget = {});

/// Lattice width of the family member; 1 for every nondegenerate member,
/// 0 for the all-zero parameter vector (T degenerates to a simplex face).
WidthResult family_width(const FamilyParams& params, const EnumBudget& budget = {});

}  // namespace latsize
