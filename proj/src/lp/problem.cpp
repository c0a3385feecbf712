#include "evac/lp.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace evac {

int LpProblem::add_variable(const std::string& name, double cost, double lower,
                            double upper) {
  int id = num_variables();
  if (!var_index_.emplace(name, id).second)
    throw std::invalid_argument("duplicate variable name: " + name);
  cost_.push_back(cost);
  lower_.push_back(lower);
  upper_.push_back(upper);
  var_names_.push_back(name);
  return id;
}

int LpProblem::add_row(const std::string& name, Relation rel, double rhs) {
  int id = num_rows();
  if (!row_index_.emplace(name, id).second)
    throw std::invalid_argument("duplicate row name: " + name);
  rhs_.push_back(rhs);
  relation_.push_back(rel);
  rows_.emplace_back();
  row_names_.push_back(name);
  return id;
}

void LpProblem::add_term(int row, int var, double coeff) {
  if (row < 0 || row >= num_rows())
    throw std::invalid_argument("add_term: bad row");
  if (var < 0 || var >= num_variables())
    throw std::invalid_argument("add_term: bad variable");
  for (auto& t : rows_[row]) {
    if (t.var == var) {
      t.coeff += coeff;
      return;
    }
  }
  rows_[row].push_back({var, coeff});
}

int LpProblem::variable(const std::string& name) const {
  auto it = var_index_.find(name);
  return it == var_index_.end() ? -1 : it->second;
}

int LpProblem::row(const std::string& name) const {
  auto it = row_index_.find(name);
  return it == row_index_.end() ? -1 : it->second;
}

void LpProblem::validate() const {
  for (int j = 0; j < num_variables(); ++j) {
    if (std::isnan(cost_[j]) || std::isinf(cost_[j]))
      throw std::invalid_argument("non-finite cost on " + var_names_[j]);
    if (lower_[j] > upper_[j])
      throw std::invalid_argument("crossed bounds on " + var_names_[j]);
  }
  for (int i = 0; i < num_rows(); ++i) {
    if (!std::isfinite(rhs_[i]))
      throw std::invalid_argument("non-finite rhs on " + row_names_[i]);
    for (const auto& t : rows_[i]) {
      if (t.var < 0 || t.var >= num_variables())
        throw std::invalid_argument("row " + row_names_[i] +
                                    " references unknown variable");
      if (!std::isfinite(t.coeff))
        throw std::invalid_argument("non-finite coefficient in " + row_names_[i]);
    }
  }
}

void LpProblem::write_lp_format(std::ostream& os) const {
  os.precision(17);
  os << (sense_ == Sense::Minimize ? "Minimize" : "Maximize") << "\n obj:";
  for (int j = 0; j < num_variables(); ++j) {
    if (cost_[j] == 0.0) continue;
    os << (cost_[j] >= 0 ? " + " : " - ") << std::abs(cost_[j]) << ' '
       << var_names_[j];
  }
  os << "\nSubject To\n";
  for (int i = 0; i < num_rows(); ++i) {
    os << ' ' << row_names_[i] << ':';
    for (const auto& t : rows_[i])
      os << (t.coeff >= 0 ? " + " : " - ") << std::abs(t.coeff) << ' '
         << var_names_[t.var];
    switch (relation_[i]) {
      case Relation::LessEqual: os << " <= "; break;
      case Relation::Equal: os << " = "; break;
      case Relation::GreaterEqual: os << " >= "; break;
    }
    os << rhs_[i] << '\n';
  }
  os << "Bounds\n";
  for (int j = 0; j < num_variables(); ++j) {
    if (lower_[j] == 0.0 && upper_[j] == kInfinity) continue;
    if (lower_[j] == -kInfinity && upper_[j] == kInfinity) {
      os << ' ' << var_names_[j] << " free\n";
    } else {
      os << ' ';
      if (lower_[j] == -kInfinity)
        os << "-inf";
      else
        os << lower_[j];
      os << " <= " << var_names_[j] << " <= ";
      if (upper_[j] == kInfinity)
        os << "+inf";
      else
        os << upper_[j];
      os << '\n';
    }
  }
  os << "End\n";
}

}  // namespace evac
