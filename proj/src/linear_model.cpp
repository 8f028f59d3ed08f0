#include "cjs/linear_model.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace cjs {

const char* formulation_name(Formulation f) {
  switch (f) {
    case Formulation::F1: return "f1";
    case Formulation::F2: return "f2";
    case Formulation::F3: return "f3";
  }
  return "?";
}

std::optional<Formulation> formulation_from_name(const std::string& name) {
  if (name == "f1") return Formulation::F1;
  if (name == "f2") return Formulation::F2;
  if (name == "f3") return Formulation::F3;
  return std::nullopt;
}

int LinearModel::add_var(std::string name, VarKind kind) {
  int id = static_cast<int>(vars.size());
  index.emplace(name, id);
  vars.push_back({std::move(name), kind});
  return id;
}

int LinearModel::var(const std::string& name) const {
  auto it = index.find(name);
  if (it == index.end())
    throw std::invalid_argument("model: unknown variable " + name);
  return it->second;
}

ModelSize model_size(const LinearModel& model) {
  ModelSize size;
  size.variables = static_cast<int64_t>(model.vars.size());
  size.constraints = static_cast<int64_t>(model.rows.size());
  for (const auto& row : model.rows) {
    auto it = size.rows_by_family.begin();
    for (; it != size.rows_by_family.end(); ++it)
      if (it->first == row.family) break;
    if (it == size.rows_by_family.end())
      size.rows_by_family.emplace_back(row.family, 1);
    else
      ++it->second;
  }

  int64_t J = model.n_jobs, M = model.n_machines;
  int64_t C = 0;  // conflict edges, recovered from the conflict row families
  for (const auto& row : model.rows) {
    if (model.formulation == Formulation::F1 && row.family == "confA") ++C;
    if (model.formulation == Formulation::F2 && row.family == "conf") ++C;
  }

  if (model.objective == Objective::MaxSum) {
    if (model.formulation == Formulation::F1) {
      int64_t K = model.positions;
      size.formula_variables = J * M * K + J + M * K + C;
      size.formula_constraints = 2 * J + 2 * M * K + J * M * K + 2 * C;
    } else if (model.formulation == Formulation::F2) {
      size.formula_variables = J * J + M * J + J;
      size.formula_constraints = J * J + J * J * M + C + 2 * J;
    }
  }
  return size;
}

namespace {

void append_wrapped(std::string& out, std::string& line, const std::string& piece) {
  if (line.size() + piece.size() > 200) {
    out += line;
    out += "\n";
    line = "   ";
  }
  line += piece;
}

std::string render_terms(const std::vector<LinTerm>& terms, const LinearModel& model) {
  std::string out, line;
  bool first = true;
  for (const auto& t : terms) {
    std::string piece;
    int64_t mag = t.coef < 0 ? -t.coef : t.coef;
    if (first) {
      piece = t.coef < 0 ? "- " : "";
      first = false;
    } else {
      piece = t.coef < 0 ? " - " : " + ";
    }
    if (mag != 1) piece += std::to_string(mag) + " ";
    piece += model.vars[t.var].name;
    append_wrapped(out, line, piece);
  }
  if (first) line += "0";  // empty expression
  out += line;
  return out;
}

}  // namespace

std::string export_lp(const LinearModel& model) {
  std::ostringstream out;
  out << "\\ " << formulation_name(model.formulation) << " " << objective_name(model.objective)
      << " jobs=" << model.n_jobs << " machines=" << model.n_machines
      << " horizon=" << model.horizon << " bigB=" << model.big_B << "\n";
  out << (model.sense == Sense::Maximize ? "Maximize" : "Minimize") << "\n";
  out << " obj: " << render_terms(model.objective_terms, model) << "\n";
  out << "Subject To\n";
  for (const auto& row : model.rows) {
    const char* rel = row.rel == Rel::LE ? "<=" : row.rel == Rel::GE ? ">=" : "=";
    out << " " << row.name << ": " << render_terms(row.terms, model) << " " << rel << " "
        << row.rhs << "\n";
  }
  std::string binaries, line;
  for (const auto& v : model.vars)
    if (v.kind == VarKind::Binary) append_wrapped(binaries, line, " " + v.name);
  binaries += line;
  if (!binaries.empty()) out << "Binaries\n" << binaries << "\n";
  out << "End\n";
  return out.str();
}

ModelCheck check_assignment(const LinearModel& model, const VarAssignment& assignment) {
  std::string missing;
  std::vector<double> value(model.vars.size(), 0);
  for (size_t i = 0; i < model.vars.size(); ++i) {
    auto it = assignment.find(model.vars[i].name);
    if (it == assignment.end()) {
      missing += missing.empty() ? model.vars[i].name : ", " + model.vars[i].name;
      continue;
    }
    value[i] = it->second;
  }
  if (!missing.empty())
    throw std::invalid_argument("check_assignment: assignment missing variables: " + missing);

  ModelCheck check;
  for (size_t i = 0; i < model.vars.size(); ++i)
    if (model.vars[i].kind == VarKind::Binary && value[i] != 0.0 && value[i] != 1.0)
      check.violations.push_back(model.vars[i].name + " not in {0,1}");

  constexpr double kTol = 1e-6;
  for (const auto& row : model.rows) {
    double lhs = 0;
    for (const auto& t : row.terms) lhs += static_cast<double>(t.coef) * value[t.var];
    double rhs = static_cast<double>(row.rhs);
    bool ok = row.rel == Rel::LE   ? lhs <= rhs + kTol
              : row.rel == Rel::GE ? lhs >= rhs - kTol
                                   : std::abs(lhs - rhs) <= kTol;
    if (!ok) check.violations.push_back(row.name);
  }
  for (const auto& t : model.objective_terms)
    check.objective += static_cast<double>(t.coef) * value[t.var];
  check.canonical = check.objective + static_cast<double>(model.objective_shift);
  check.feasible = check.violations.empty();
  return check;
}

}  // namespace cjs
