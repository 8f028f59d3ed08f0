#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "cjs/instance.hpp"

namespace cjs {

enum class Formulation { F1, F2, F3 };

const char* formulation_name(Formulation f);
std::optional<Formulation> formulation_from_name(const std::string& name);

enum class VarKind { Binary, Continuous };
enum class Rel { LE, GE, EQ };
enum class Sense { Minimize, Maximize };

struct ModelVar {
  std::string name;
  VarKind kind;
};

struct LinTerm {
  int var;       // index into LinearModel::vars
  int64_t coef;  // all model coefficients are integral
};

struct ModelRow {
  std::string name;
  std::string family;
  std::vector<LinTerm> terms;
  Rel rel;
  int64_t rhs;
};

// A mixed-integer linear model plus enough metadata to embed schedules and
// read solutions back. `objective_shift` converts the raw linear objective
// into the schedule objective (canonical = raw + shift); the time-indexed
// family measures starts in 1-based slots, which shifts its MinSum and
// MinMax objectives by a constant.
struct LinearModel {
  Formulation formulation;
  Objective objective;
  Sense sense = Sense::Minimize;
  std::vector<ModelVar> vars;
  std::vector<LinTerm> objective_terms;
  int64_t objective_shift = 0;
  std::vector<ModelRow> rows;
  int n_jobs = 0;
  int n_machines = 0;
  int64_t horizon = 0;  // T for MaxSum; sum of p (or the override) otherwise
  int64_t big_B = 0;
  int64_t positions = 0;  // K (position-indexed family only)
  std::unordered_map<std::string, int> index;

  int add_var(std::string name, VarKind kind);
  int var(const std::string& name) const;  // throws if absent
};

struct ModelSize {
  int64_t variables = 0;
  int64_t constraints = 0;
  std::vector<std::pair<std::string, int64_t>> rows_by_family;
  // Closed-form counts as stated for the deadline variants; absent where no
  // closed form is given. The position-indexed closed form undercounts the
  // two completion-linking families, so it may disagree with the
  // enumeration; enumerated counts are authoritative.
  std::optional<int64_t> formula_variables;
  std::optional<int64_t> formula_constraints;
};

ModelSize model_size(const LinearModel& model);

// Deterministic LP text: fixed variable naming (x_i_m_k / x_i_m / x_i_m_t,
// s_i, z_m_k, y_i_j, zz_i, Tmax), fixed row order, integer coefficients,
// lines wrapped at a fixed column. Byte-identical for identical models.
std::string export_lp(const LinearModel& model);

using VarAssignment = std::unordered_map<std::string, double>;

struct ModelCheck {
  bool feasible = false;
  std::vector<std::string> violations;  // row names, or binary domain notes
  double objective = 0;                 // raw linear objective
  double canonical = 0;                 // objective + shift
};

// Evaluates every row at the assignment: 1e-6 tolerance on row activity,
// exact {0,1} on binary variables. Throws std::invalid_argument naming the
// missing variables if the assignment is incomplete.
ModelCheck check_assignment(const LinearModel& model, const VarAssignment& assignment);

}  // namespace cjs
