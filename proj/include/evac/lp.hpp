#pragma once

#include <iosfwd>
#include <limits>
#include <string>
#include <unordered_map>
#include <vector>

namespace evac {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

enum class Sense { Minimize, Maximize };
enum class Relation { LessEqual, Equal, GreaterEqual };
enum class SolveStatus { Optimal, Infeasible, Unbounded };

/// A linear program in row form: sense, cost vector, sparse rows with a
/// relation and RHS, and per-variable bounds (default [0, +inf)).
/// Variable and row names are stable tags used in reports.
class LpProblem {
 public:
  struct Term {
    int var;
    double coeff;
  };

  explicit LpProblem(Sense sense = Sense::Minimize) : sense_(sense) {}

  int add_variable(const std::string& name, double cost, double lower = 0.0,
                   double upper = kInfinity);
  int add_free_variable(const std::string& name, double cost) {
    return add_variable(name, cost, -kInfinity, kInfinity);
  }
  int add_row(const std::string& name, Relation rel, double rhs);
  /// Accumulates a coefficient onto an existing row.
  void add_term(int row, int var, double coeff);

  void set_cost(int var, double cost) { cost_[var] = cost; }
  void set_rhs(int row, double rhs) { rhs_[row] = rhs; }
  void set_bounds(int var, double lower, double upper) {
    lower_[var] = lower;
    upper_[var] = upper;
  }

  Sense sense() const { return sense_; }
  int num_variables() const { return static_cast<int>(cost_.size()); }
  int num_rows() const { return static_cast<int>(rhs_.size()); }
  double cost(int var) const { return cost_[var]; }
  double lower(int var) const { return lower_[var]; }
  double upper(int var) const { return upper_[var]; }
  double rhs(int row) const { return rhs_[row]; }
  Relation relation(int row) const { return relation_[row]; }
  const std::vector<Term>& row_terms(int row) const { return rows_[row]; }
  const std::string& variable_name(int var) const { return var_names_[var]; }
  const std::string& row_name(int row) const { return row_names_[row]; }

  /// Index lookup by name; -1 when absent.
  int variable(const std::string& name) const;
  int row(const std::string& name) const;

  /// Throws std::invalid_argument on non-finite data, bad references or
  /// duplicate names.
  void validate() const;

  /// Fixed-section text dump (sense / objective / rows / bounds), LP-format
  /// compatible so problems can be diffed against external solvers.
  void write_lp_format(std::ostream& os) const;

 private:
  Sense sense_;
  std::vector<double> cost_, lower_, upper_, rhs_;
  std::vector<Relation> relation_;
  std::vector<std::vector<Term>> rows_;
  std::vector<std::string> var_names_, row_names_;
  std::unordered_map<std::string, int> var_index_, row_index_;
};

enum class VarStatus : unsigned char { Basic, AtLower, AtUpper, Free };

struct BasisEntry {
  enum class Kind : unsigned char { Structural, Slack, Artificial };
  Kind kind;
  int index;    // variable index (Structural) or row index (Slack/Artificial)
  double sign;  // column sign for artificials (+1/-1), 1 otherwise
};

struct LpSolution {
  SolveStatus status = SolveStatus::Infeasible;
  double objective = 0.0;
  std::vector<double> x;              // primal values, declared space
  std::vector<double> duals;          // per row: d(objective)/d(rhs)
  std::vector<double> reduced_costs;  // per variable, declared space
  std::vector<double> row_activity;
  std::vector<double> row_slack;  // rhs-activity (<=), activity-rhs (>=), 0 (=)
  std::vector<VarStatus> var_status;
  std::vector<BasisEntry> basis;      // one entry per row slot
  std::vector<int> infeasible_rows;   // rows retaining positive phase-1 artificials
  int iterations = 0;
};

struct SolverOptions {
  double tol_feas = 1e-9;
  double tol_gap = 1e-7;
  double pivot_tol = 1e-8;
  int refactor_interval = 100;
  int stall_threshold = 500;  // degenerate pivots before Bland's rule kicks in
  long max_iterations = 0;    // 0: derived from problem size
};

/// Two-phase revised simplex (Dantzig pricing, Bland fallback). Deterministic
/// for identical input. Throws NumericalBreakdown when a pivot stays below
/// pivot_tol after a refactorization retry.
LpSolution solve(const LpProblem& problem, const SolverOptions& options = {});

struct RangeReport {
  double decrease = 0.0;  // allowable decrease (>= 0, may be +inf)
  double increase = 0.0;  // allowable increase (>= 0, may be +inf)
  double rate = 0.0;      // d(objective)/d(target) inside the range
  bool degenerate = false;
};

/// Basis-preserving range for an objective coefficient. Requires an Optimal
/// solution of the same problem. Conservative under degeneracy (flagged).
RangeReport range_objective_coefficient(const LpProblem& problem,
                                        const LpSolution& solution, int var);
RangeReport range_objective_coefficient(const LpProblem& problem,
                                        const LpSolution& solution,
                                        const std::string& var);

/// Basis-preserving RHS range; rate equals the row's dual price.
RangeReport range_rhs(const LpProblem& problem, const LpSolution& solution,
                      int row);
RangeReport range_rhs(const LpProblem& problem, const LpSolution& solution,
                      const std::string& row);

}  // namespace evac
