#include "latsize/search.hpp"

#include "latsize/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace latsize {

namespace {

struct NodeBudgetExceeded {};

enum class Mode { Delta, Cube };

// Cofactor vector g of an (n-1) x n matrix: det([rows; r]) = +-<g, r>.
Vec cofactor_vector(const Mat& rows, int n) {
  Vec g(static_cast<std::size_t>(n));
  if (n == 1) {
    g[0] = 1;
    return g;
  }
  Mat minor(rows.size(), Vec(static_cast<std::size_t>(n - 1)));
  for (int j = 0; j < n; ++j) {
    for (std::size_t r = 0; r < rows.size(); ++r) {
      std::size_t mc = 0;
      for (int c = 0; c < n; ++c) {
        if (c == j) continue;
        minor[r][mc++] = rows[r][static_cast<std::size_t>(c)];
      }
    }
    Int m = determinant(minor);
    g[static_cast<std::size_t>(j)] = (j % 2 == 0) ? m : Int(-m);
  }
  return g;
}

// One iterative-deepening level: is there a unimodular matrix whose rows all
// come from cands (either sign) with the mode's objective <= bound?
class LevelSearch {
 public:
  LevelSearch(const LatticePolytope& P, Mode mode, const Int& bound,
              const std::vector<Direction>& cands, std::uint64_t node_budget,
              bool prune, std::uint64_t& nodes)
      : pts_(P.points()),
        n_(P.dim()),
        mode_(mode),
        bound_(bound),
        cands_(cands),
        node_budget_(node_budget),
        prune_(prune),
        nodes_(nodes) {
    const std::size_t m = cands_.size();
    val_.resize(m);
    for (std::size_t c = 0; c < m; ++c) {
      val_[c].resize(pts_.size());
      for (std::size_t p = 0; p < pts_.size(); ++p)
        val_[c][p] = dot(cands_[c].coords(), pts_[p]);
    }
    // suffix_rank_[s] = rank of cands[s..); prunes branches that can no
    // longer reach full rank.
    suffix_rank_.assign(m + 1, 0);
    if (!prune_) return;
    for (std::size_t s = m; s-- > 0;) {
      Mat suffix;
      suffix.reserve(m - s);
      for (std::size_t c = s; c < m; ++c) suffix.push_back(cands_[c].coords());
      suffix_rank_[s] = rank(suffix);
      if (suffix_rank_[s] == n_) {
        // Earlier suffixes are supersets; their rank is n as well.
        for (std::size_t t = 0; t < s; ++t) suffix_rank_[t] = n_;
        break;
      }
    }
  }

  bool full_rank_possible() const {
    if (!prune_) return !cands_.empty();
    return !cands_.empty() && suffix_rank_[0] == n_;
  }

  // Returns the found matrix rows, or nullopt when the level is infeasible.
  std::optional<Mat> run() {
    if (!full_rank_possible()) return std::nullopt;
    rows_.clear();
    subsets_.clear();
    min_sum_ = 0;
    dfs(0);
    return found_;
  }

 private:
  void count_node() {
    if (++nodes_ > node_budget_) throw NodeBudgetExceeded{};
  }

  Int subset_width(const std::vector<Int>& values) const {
    Int lo = values[0], hi = values[0];
    for (const Int& v : values) {
      if (v < lo) lo = v;
      if (v > hi) hi = v;
    }
    return hi - lo;
  }

  // Extends the partial matrix with signed candidate idx. Returns false when
  // a pruning rule rejects the extension (state is rolled back either way).
  bool try_push(std::size_t idx, int sign) {
    count_node();
    std::vector<Int> v(pts_.size());
    for (std::size_t p = 0; p < pts_.size(); ++p)
      v[p] = sign > 0 ? val_[idx][p] : Int(-val_[idx][p]);

    const std::size_t old_count = subsets_.size();
    if (mode_ == Mode::Delta) {
      // Lemma-based pruning: every subset sum of rows of a feasible matrix
      // has width <= l1(A P) <= bound. Only subsets containing the new row
      // are new; the rest were checked when they were created.
      for (std::size_t s = 0; s <= old_count; ++s) {
        std::vector<Int> ns(pts_.size());
        bool all_zero = true;
        for (std::size_t p = 0; p < pts_.size(); ++p) {
          ns[p] = (s == 0 ? v[p] : subsets_[s - 1][p] + v[p]);
          if (ns[p] != ns[0]) all_zero = false;
        }
        // Constant value vector means the summed direction is orthogonal to
        // every difference of points; for full-dimensional P that forces the
        // zero vector, i.e. linear dependence.
        if (prune_ && all_zero) {
          subsets_.resize(old_count);
          return false;
        }
        if (prune_ && subset_width(ns) > bound_) {
          subsets_.resize(old_count);
          return false;
        }
        subsets_.push_back(std::move(ns));
      }
      // Monotone lower bound on the final l1: max_x over the chosen-row sum
      // minus the chosen-row minima can only grow as rows are added.
      Int new_min = v[0];
      for (const Int& x : v)
        if (x < new_min) new_min = x;
      const std::vector<Int>& full = subsets_.back();
      Int mx = full[0];
      for (const Int& x : full)
        if (x > mx) mx = x;
      if (prune_ && mx - (min_sum_ + new_min) > bound_) {
        subsets_.resize(old_count);
        return false;
      }
      min_sum_ += new_min;
      min_stack_.push_back(new_min);
    }

    rows_.push_back(sign > 0 ? cands_[idx].coords() : negate(cands_[idx].coords()));
    if (prune_ && rank(rows_) < static_cast<int>(rows_.size())) {
      pop(old_count);
      return false;
    }
    return true;
  }

  void pop(std::size_t old_subset_count) {
    rows_.pop_back();
    if (mode_ == Mode::Delta) {
      if (subsets_.size() > old_subset_count) subsets_.resize(old_subset_count);
      if (!min_stack_.empty() && min_stack_.size() > rows_.size()) {
        min_sum_ -= min_stack_.back();
        min_stack_.pop_back();
      }
    }
  }

  void dfs(std::size_t start) {
    if (found_) return;
    const std::size_t depth = rows_.size();
    const std::size_t m = cands_.size();
    if (depth == static_cast<std::size_t>(n_) - 1) {
      scan_last_row(start);
      return;
    }
    for (std::size_t idx = start; idx < m && !found_; ++idx) {
      const std::size_t slots_left = static_cast<std::size_t>(n_) - depth;
      if (m - idx < slots_left) return;
      if (prune_ && static_cast<int>(depth) + suffix_rank_[idx] < n_) return;
      const int nsigns = (mode_ == Mode::Delta) ? 2 : 1;
      for (int s = 0; s < nsigns && !found_; ++s) {
        const std::size_t old_count = subsets_.size();
        if (try_push(idx, s == 0 ? 1 : -1)) {
          dfs(idx + 1);
          if (!found_) pop(old_count);
        }
      }
    }
  }

  // With n-1 independent rows fixed, the determinant of any completion is
  // <cofactor, last_row>, so one dot product decides unimodularity.
  void scan_last_row(std::size_t start) {
    const Vec g = cofactor_vector(rows_, n_);
    if (prune_ && content(g) != 1) return;  // every completion has |det| divisible by it
    const std::size_t m = cands_.size();
    for (std::size_t idx = start; idx < m && !found_; ++idx) {
      count_node();
      Int det = dot(g, cands_[idx].coords());
      if (det != 1 && det != -1) continue;
      const int nsigns = (mode_ == Mode::Delta) ? 2 : 1;
      for (int s = 0; s < nsigns && !found_; ++s) {
        const int sign = (s == 0) ? 1 : -1;
        if (mode_ == Mode::Delta) {
          Int mx = 0, row_min = 0;
          bool first = true;
          for (std::size_t p = 0; p < pts_.size(); ++p) {
            Int v = sign > 0 ? val_[idx][p] : Int(-val_[idx][p]);
            Int total = (subsets_.empty() ? v : subsets_.back()[p] + v);
            if (first) {
              mx = total;
              row_min = v;
              first = false;
            } else {
              if (total > mx) mx = total;
              if (v < row_min) row_min = v;
            }
          }
          if (mx - (min_sum_ + row_min) > bound_) continue;
        }
        Mat full = rows_;
        full.push_back(sign > 0 ? cands_[idx].coords() : negate(cands_[idx].coords()));
        found_ = std::move(full);
      }
    }
  }

  const std::vector<Vec>& pts_;
  int n_;
  Mode mode_;
  Int bound_;
  const std::vector<Direction>& cands_;
  std::uint64_t node_budget_;
  bool prune_;
  std::uint64_t& nodes_;

  std::vector<std::vector<Int>> val_;
  std::vector<int> suffix_rank_;

  Mat rows_;
  std::vector<std::vector<Int>> subsets_;  // value vectors of all nonempty subsets
  std::vector<Int> min_stack_;
  Int min_sum_ = 0;
  std::optional<Mat> found_;
};

Int objective_upper_bound(const LatticePolytope& P, Mode mode) {
  if (mode == Mode::Delta) return l1(P);
  Int best = 0;
  for (int i = 0; i < P.dim(); ++i)
    best = std::max(best, width_in_direction(P, Direction(unit_vec(P.dim(), i))));
  return best;
}

Vec nonnegative_translation(const Mat& rows, const LatticePolytope& P) {
  const std::size_t n = rows.size();
  Vec mins(n);
  bool first = true;
  for (const Vec& p : P.points()) {
    for (std::size_t i = 0; i < n; ++i) {
      Int v = dot(rows[i], p);
      if (first || v < mins[i]) mins[i] = v;
    }
    first = false;
  }
  return negate(mins);
}

void verify_containment(const AffineUnimodularMap& L, const LatticePolytope& P,
                        const Int& value, Mode mode) {
  const LatticePolytope image = apply_map(L, P);
  for (const Vec& q : image.points()) {
    Int sum = 0;
    for (const Int& x : q) {
      if (x < 0) throw std::logic_error("search: witness image leaves the orthant");
      if (mode == Mode::Cube && x > value)
        throw std::logic_error("search: witness image exceeds the cube");
      sum += x;
    }
    if (mode == Mode::Delta && sum > value)
      throw std::logic_error("search: witness image exceeds the simplex dilate");
  }
}

SearchResult run_search(const LatticePolytope& P, Mode mode, const SearchConfig& cfg) {
  const int n = P.dim();
  const WidthResult lw = lattice_width(P, cfg.enum_budget);
  if (lw.width == 0)
    throw std::invalid_argument("ls search: polytope is not full-dimensional");

  Int hi = objective_upper_bound(P, mode);
  if (cfg.initial_upper_bound && *cfg.initial_upper_bound < hi)
    hi = *cfg.initial_upper_bound;

  SearchResult result{Int(0), AffineUnimodularMap::identity(n), 0, 0, false};
  try {
    for (Int B = lw.width; B <= hi; ++B) {
      std::vector<Direction> cands = directions_with_width_at_most(P, B, cfg.enum_budget);
      result.candidates_considered += cands.size();
      LevelSearch level(P, mode, B, cands, cfg.node_budget, cfg.prune,
                        result.nodes_explored);
      std::optional<Mat> rows = level.run();
      if (!rows) continue;
      Vec t = nonnegative_translation(*rows, P);
      AffineUnimodularMap witness(std::move(*rows), std::move(t));
      // Levels below B are exhausted, so the objective equals B exactly.
      result.value = B;
      result.witness = std::move(witness);
      result.certified = true;
      if (cfg.report_witness) verify_containment(result.witness, P, result.value, mode);
      return result;
    }
    // The upper bound level is feasible by construction, so reaching this
    // point means the caller-provided bound was wrong.
    throw std::logic_error("ls search: no witness found up to the upper bound " + hi.str());
  } catch (const NodeBudgetExceeded&) {
    // Best known upper bound with an explicit witness: the identity map.
    const Mat id = AffineUnimodularMap::identity(n).matrix();
    Vec t = nonnegative_translation(id, P);
    result.value = objective_upper_bound(P, mode);
    result.witness = AffineUnimodularMap(id, std::move(t));
    result.certified = false;
    verify_containment(result.witness, P, result.value, mode);
    return result;
  }
}

}  // namespace

SearchResult ls_delta(const LatticePolytope& P, const SearchConfig& cfg) {
  return run_search(P, Mode::Delta, cfg);
}

SearchResult ls_cube(const LatticePolytope& P, const SearchConfig& cfg) {
  return run_search(P, Mode::Cube, cfg);
}

std::vector<Direction> candidate_rows(const LatticePolytope& P, const Int& B,
                                      const EnumBudget& budget) {
  return directions_with_width_at_most(P, B, budget);
}

}  // namespace latsize
