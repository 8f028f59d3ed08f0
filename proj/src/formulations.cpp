#include "cjs/formulations.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cjs {

namespace {

std::string nm(const char* stem, int64_t a) { return std::string(stem) + "_" + std::to_string(a); }
std::string nm(const char* stem, int64_t a, int64_t b) {
  return nm(stem, a) + "_" + std::to_string(b);
}
std::string nm(const char* stem, int64_t a, int64_t b, int64_t c) {
  return nm(stem, a, b) + "_" + std::to_string(c);
}

struct Builder {
  LinearModel model;

  void row(std::string name, std::string family, std::vector<LinTerm> terms, Rel rel,
           int64_t rhs) {
    model.rows.push_back({std::move(name), std::move(family), std::move(terms), rel, rhs});
  }
};

int64_t conflict_degree_load(const Instance& inst) {
  std::vector<bool> has(inst.n_jobs, false);
  for (auto [a, b] : inst.conflicts) has[a] = has[b] = true;
  int64_t sum = 0;
  for (int j = 0; j < inst.n_jobs; ++j)
    if (has[j]) sum += inst.p[j];
  return sum;
}

void build_f1(Builder& b, const Instance& inst) {
  LinearModel& m = b.model;
  int64_t J = inst.n_jobs, M = inst.n_machines, K = m.positions, B = m.big_B;
  bool maxsum = m.objective == Objective::MaxSum;

  for (int64_t i = 0; i < J; ++i)
    for (int64_t mc = 0; mc < M; ++mc)
      for (int64_t k = 1; k <= K; ++k) m.add_var(nm("x", i, mc, k), VarKind::Binary);
  for (int64_t i = 0; i < J; ++i) m.add_var(nm("s", i), VarKind::Continuous);
  for (int64_t mc = 0; mc < M; ++mc)
    for (int64_t k = 1; k <= K; ++k) m.add_var(nm("z", mc, k), VarKind::Continuous);
  for (auto [i, j] : inst.conflicts) m.add_var(nm("y", i, j), VarKind::Binary);

  // Deadline envelope: released by B while a job is unassigned. Kept for
  // every objective; with the default horizon it is a valid inequality,
  // and binary-search probes rely on it to cap the makespan.
  for (int64_t i = 0; i < J; ++i) {
    std::vector<LinTerm> t{{m.var(nm("s", i)), 1}};
    for (int64_t mc = 0; mc < M; ++mc)
      for (int64_t k = 1; k <= K; ++k) t.push_back({m.var(nm("x", i, mc, k)), B});
    b.row(nm("cap", i), "cap", std::move(t), Rel::LE, m.horizon - inst.p[i] + B);
  }
  for (int64_t i = 0; i < J; ++i) {
    std::vector<LinTerm> t;
    for (int64_t mc = 0; mc < M; ++mc)
      for (int64_t k = 1; k <= K; ++k) t.push_back({m.var(nm("x", i, mc, k)), 1});
    b.row(nm("asg", i), "asg", std::move(t), maxsum ? Rel::LE : Rel::EQ, 1);
  }
  for (int64_t mc = 0; mc < M; ++mc)
    for (int64_t k = 1; k <= K; ++k) {
      std::vector<LinTerm> t;
      for (int64_t i = 0; i < J; ++i) t.push_back({m.var(nm("x", i, mc, k)), 1});
      b.row(nm("pos", mc, k), "pos", std::move(t), Rel::LE, 1);
    }
  for (int64_t mc = 0; mc < M; ++mc)
    for (int64_t k = 2; k <= K; ++k)
      b.row(nm("chain", mc, k), "chain",
            {{m.var(nm("z", mc, k - 1)), 1}, {m.var(nm("z", mc, k)), -1}}, Rel::LE, 0);
  for (int64_t i = 0; i < J; ++i)
    for (int64_t mc = 0; mc < M; ++mc)
      for (int64_t k = 1; k <= K; ++k)
        b.row(nm("zlink", i, mc, k), "zlink",
              {{m.var(nm("s", i)), 1}, {m.var(nm("z", mc, k)), -1}, {m.var(nm("x", i, mc, k)), B}},
              Rel::LE, B - inst.p[i]);
  // Start after the previous position's completion; z_m_0 is the constant 0.
  for (int64_t i = 0; i < J; ++i)
    for (int64_t mc = 0; mc < M; ++mc)
      for (int64_t k = 1; k <= K; ++k) {
        std::vector<LinTerm> t{{m.var(nm("s", i)), 1}, {m.var(nm("x", i, mc, k)), -B}};
        if (k > 1) t.push_back({m.var(nm("z", mc, k - 1)), -1});
        b.row(nm("zprev", i, mc, k), "zprev", std::move(t), Rel::GE, -B);
      }
  for (auto [i, j] : inst.conflicts) {
    b.row(nm("confA", i, j), "confA",
          {{m.var(nm("s", i)), 1}, {m.var(nm("s", j)), -1}, {m.var(nm("y", i, j)), -B}},
          Rel::LE, -inst.p[i]);
    b.row(nm("confB", i, j), "confB",
          {{m.var(nm("s", j)), 1}, {m.var(nm("s", i)), -1}, {m.var(nm("y", i, j)), B}},
          Rel::LE, B - inst.p[j]);
  }

  if (maxsum) {
    m.sense = Sense::Maximize;
    for (int64_t i = 0; i < J; ++i)
      for (int64_t mc = 0; mc < M; ++mc)
        for (int64_t k = 1; k <= K; ++k)
          m.objective_terms.push_back({m.var(nm("x", i, mc, k)), inst.r[i]});
  }
}

void build_f2(Builder& b, const Instance& inst) {
  LinearModel& m = b.model;
  int64_t J = inst.n_jobs, M = inst.n_machines, B = m.big_B;
  bool maxsum = m.objective == Objective::MaxSum;

  for (int64_t i = 0; i < J; ++i)
    for (int64_t j = 0; j < J; ++j) m.add_var(nm("y", i, j), VarKind::Binary);
  for (int64_t mc = 0; mc < M; ++mc)
    for (int64_t i = 0; i < J; ++i) m.add_var(nm("x", i, mc), VarKind::Binary);
  for (int64_t i = 0; i < J; ++i) m.add_var(nm("s", i), VarKind::Continuous);

  if (maxsum)
    for (int64_t i = 0; i < J; ++i) {
      std::vector<LinTerm> t{{m.var(nm("s", i)), 1}};
      for (int64_t mc = 0; mc < M; ++mc) t.push_back({m.var(nm("x", i, mc)), B});
      b.row(nm("cap", i), "cap", std::move(t), Rel::LE, m.horizon - inst.p[i] + B);
    }
  for (int64_t i = 0; i < J; ++i) {
    std::vector<LinTerm> t;
    for (int64_t mc = 0; mc < M; ++mc) t.push_back({m.var(nm("x", i, mc)), 1});
    b.row(nm("asg", i), "asg", std::move(t), maxsum ? Rel::LE : Rel::EQ, 1);
  }
  for (int64_t i = 0; i < J; ++i)
    for (int64_t j = 0; j < J; ++j) {
      if (i == j) continue;
      b.row(nm("seq", i, j), "seq",
            {{m.var(nm("s", i)), 1}, {m.var(nm("s", j)), -1}, {m.var(nm("y", i, j)), B}},
            Rel::LE, B - inst.p[i]);
    }
  for (int64_t i = 0; i < J; ++i)
    for (int64_t j = 0; j < J; ++j) {
      if (i == j) continue;
      for (int64_t mc = 0; mc < M; ++mc)
        b.row(nm("mach", i, j, mc), "mach",
              {{m.var(nm("x", i, mc)), 1},
               {m.var(nm("x", j, mc)), 1},
               {m.var(nm("y", i, j)), -1},
               {m.var(nm("y", j, i)), -1}},
              Rel::LE, 1);
    }
  for (auto [i, j] : inst.conflicts)
    b.row(nm("conf", i, j), "conf", {{m.var(nm("y", i, j)), 1}, {m.var(nm("y", j, i)), 1}},
          Rel::GE, 1);

  if (maxsum) {
    m.sense = Sense::Maximize;
    for (int64_t i = 0; i < J; ++i)
      for (int64_t mc = 0; mc < M; ++mc)
        m.objective_terms.push_back({m.var(nm("x", i, mc)), inst.r[i]});
  }
}

void build_f3(Builder& b, const Instance& inst) {
  LinearModel& m = b.model;
  int64_t J = inst.n_jobs, M = inst.n_machines, T = m.horizon, B = m.big_B;
  bool maxsum = m.objective == Objective::MaxSum;

  for (int64_t i = 0; i < J; ++i)
    for (int64_t mc = 0; mc < M; ++mc)
      for (int64_t t = 1; t <= T; ++t) m.add_var(nm("x", i, mc, t), VarKind::Binary);
  for (int64_t i = 0; i < J; ++i) m.add_var(nm("s", i), VarKind::Continuous);
  for (int64_t i = 0; i < J; ++i) m.add_var(nm("zz", i), VarKind::Binary);

  for (int64_t mc = 0; mc < M; ++mc)
    for (int64_t t = 1; t <= T; ++t) {
      std::vector<LinTerm> terms;
      for (int64_t i = 0; i < J; ++i) terms.push_back({m.var(nm("x", i, mc, t)), 1});
      b.row(nm("machcap", mc, t), "machcap", std::move(terms), Rel::LE, 1);
    }
  for (int64_t i = 0; i < J; ++i)
    for (int64_t t = 1; t <= T; ++t) {
      std::vector<LinTerm> terms;
      for (int64_t mc = 0; mc < M; ++mc) terms.push_back({m.var(nm("x", i, mc, t)), 1});
      b.row(nm("jobcap", i, t), "jobcap", std::move(terms), Rel::LE, 1);
    }
  for (int64_t i = 0; i < J; ++i) {
    std::vector<LinTerm> terms;
    for (int64_t mc = 0; mc < M; ++mc)
      for (int64_t t = 1; t <= T; ++t) terms.push_back({m.var(nm("x", i, mc, t)), 1});
    if (maxsum) {
      terms.push_back({m.var(nm("zz", i)), -inst.p[i]});
      b.row(nm("len", i), "len", std::move(terms), Rel::EQ, 0);
    } else {
      b.row(nm("len", i), "len", std::move(terms), Rel::EQ, inst.p[i]);
    }
  }
  // Occupied slots lie exactly in [s_i, s_i + p_i - 1] (slot numbering).
  for (int64_t i = 0; i < J; ++i)
    for (int64_t t = 1; t <= T; ++t) {
      std::vector<LinTerm> terms{{m.var(nm("s", i)), 1}};
      for (int64_t mc = 0; mc < M; ++mc) terms.push_back({m.var(nm("x", i, mc, t)), B});
      b.row(nm("startlb", i, t), "startlb", std::move(terms), Rel::LE, B + t);
    }
  for (int64_t i = 0; i < J; ++i)
    for (int64_t t = 1; t <= T; ++t) {
      std::vector<LinTerm> terms{{m.var(nm("s", i)), 1}};
      for (int64_t mc = 0; mc < M; ++mc) terms.push_back({m.var(nm("x", i, mc, t)), -B});
      b.row(nm("endub", i, t), "endub", std::move(terms), Rel::GE, t + 1 - inst.p[i] - B);
    }
  for (auto [i, j] : inst.conflicts)
    for (int64_t t = 1; t <= T; ++t) {
      std::vector<LinTerm> terms;
      for (int64_t mc = 0; mc < M; ++mc) {
        terms.push_back({m.var(nm("x", i, mc, t)), 1});
        terms.push_back({m.var(nm("x", j, mc, t)), 1});
      }
      b.row(nm("conf", i, j, t), "conf", std::move(terms), Rel::LE, 1);
    }

  if (maxsum) {
    m.sense = Sense::Maximize;
    for (int64_t i = 0; i < J; ++i)
      m.objective_terms.push_back({m.var(nm("zz", i)), inst.r[i]});
  }
}

}  // namespace

LinearModel build_model(const Instance& inst, Formulation formulation, Objective objective,
                        std::optional<int64_t> horizon_override) {
  inst.check_for(objective);
  Builder b;
  LinearModel& m = b.model;
  m.formulation = formulation;
  m.objective = objective;
  m.n_jobs = inst.n_jobs;
  m.n_machines = inst.n_machines;
  m.horizon = horizon_override.value_or(objective == Objective::MaxSum ? *inst.T
                                                                       : inst.total_p());
  if (m.horizon < 0) throw std::invalid_argument("build_model: horizon must be >= 0");
  m.big_B = m.horizon + conflict_degree_load(inst);
  if (formulation == Formulation::F1) {
    int64_t p_min = inst.n_jobs ? *std::min_element(inst.p.begin(), inst.p.end()) : 1;
    m.positions = m.horizon / p_min;
  }

  switch (formulation) {
    case Formulation::F1: build_f1(b, inst); break;
    case Formulation::F2: build_f2(b, inst); break;
    case Formulation::F3: build_f3(b, inst); break;
  }

  if (objective == Objective::MinSum) {
    for (int i = 0; i < inst.n_jobs; ++i)
      m.objective_terms.push_back({m.var(nm("s", i)), inst.w[i]});
    for (int i = 0; i < inst.n_jobs; ++i)
      m.objective_shift += inst.w[i] * (formulation == Formulation::F3 ? inst.p[i] - 1
                                                                       : inst.p[i]);
  } else if (objective == Objective::MinMax) {
    int tmax = m.add_var("Tmax", VarKind::Continuous);
    m.objective_terms.push_back({tmax, 1});
    for (int i = 0; i < inst.n_jobs; ++i)
      m.rows.push_back({nm("tmax", i),
                        "tmax",
                        {{m.var(nm("s", i)), 1}, {tmax, -1}},
                        Rel::LE,
                        -inst.p[i]});
    if (formulation == Formulation::F3) m.objective_shift = -1;
  }
  return b.model;
}

namespace {

// Virtual starts for rejected jobs: conflicting ones are serialized after
// the horizon so every conflict row sees disjoint intervals; conflict-free
// ones sit at 0 (F1/F2, where only the pair rows would see them) or at the
// horizon (F3, where no row references an empty job's start).
std::vector<int64_t> virtual_starts(const LinearModel& model, const Instance& inst,
                                    const Schedule& sched) {
  std::vector<bool> conflicted(inst.n_jobs, false);
  for (auto [a, bjob] : inst.conflicts) conflicted[a] = conflicted[bjob] = true;
  std::vector<int64_t> start(inst.n_jobs, -1);
  int64_t next = model.horizon;
  for (int j = 0; j < inst.n_jobs; ++j) {
    if (sched.assignment[j]) {
      start[j] = sched.assignment[j]->start;
      continue;
    }
    if (model.formulation == Formulation::F3) {
      start[j] = model.horizon;
    } else if (conflicted[j]) {
      if (inst.p[j] > model.big_B - (next - model.horizon))
        throw std::invalid_argument("embed_schedule: rejected job " + std::to_string(j) +
                                    " does not fit the big-B envelope");
      start[j] = next;
      next += inst.p[j];
    } else {
      if (inst.p[j] > model.big_B)
        throw std::invalid_argument("embed_schedule: rejected job " + std::to_string(j) +
                                    " does not fit the big-B envelope");
      start[j] = 0;
    }
  }
  return start;
}

}  // namespace

VarAssignment embed_schedule(const LinearModel& model, const Instance& inst,
                             const Schedule& sched) {
  ValidationReport report = validate_schedule(inst, sched, model.objective);
  if (!report.feasible())
    throw InfeasibleScheduleError("embed_schedule: schedule is infeasible", std::move(report));
  for (int j = 0; j < inst.n_jobs; ++j)
    if (sched.assignment[j] &&
        sched.assignment[j]->start + inst.p[j] > model.horizon)
      throw std::invalid_argument("embed_schedule: job " + std::to_string(j) +
                                  " completes past the model horizon");

  VarAssignment a;
  for (const auto& v : model.vars) a[v.name] = 0;
  std::vector<int64_t> start = virtual_starts(model, inst, sched);
  auto completion = [&](int j) { return start[j] + inst.p[j]; };

  switch (model.formulation) {
    case Formulation::F1: {
      for (int mc = 0; mc < inst.n_machines; ++mc) {
        std::vector<int> jobs;
        for (int j = 0; j < inst.n_jobs; ++j)
          if (sched.assignment[j] && sched.assignment[j]->machine == mc) jobs.push_back(j);
        std::sort(jobs.begin(), jobs.end(), [&](int x, int y) {
          return sched.assignment[x]->start < sched.assignment[y]->start;
        });
        if (static_cast<int64_t>(jobs.size()) > model.positions)
          throw std::invalid_argument("embed_schedule: machine " + std::to_string(mc) +
                                      " uses more than K positions");
        int64_t prev_z = 0;
        for (int64_t k = 1; k <= model.positions; ++k) {
          if (k <= static_cast<int64_t>(jobs.size())) {
            int j = jobs[k - 1];
            a[nm("x", j, mc, k)] = 1;
            prev_z = completion(j);
          }
          a[nm("z", mc, k)] = static_cast<double>(prev_z);
        }
      }
      for (int j = 0; j < inst.n_jobs; ++j) a[nm("s", j)] = static_cast<double>(start[j]);
      for (auto [i, j] : inst.conflicts)
        a[nm("y", i, j)] = completion(i) <= start[j] ? 0 : 1;
      break;
    }
    case Formulation::F2: {
      for (int j = 0; j < inst.n_jobs; ++j) {
        if (sched.assignment[j]) a[nm("x", j, sched.assignment[j]->machine)] = 1;
        a[nm("s", j)] = static_cast<double>(start[j]);
      }
      for (int i = 0; i < inst.n_jobs; ++i)
        for (int j = 0; j < inst.n_jobs; ++j)
          if (i != j) a[nm("y", i, j)] = completion(i) <= start[j] ? 1 : 0;
      break;
    }
    case Formulation::F3: {
      for (int j = 0; j < inst.n_jobs; ++j) {
        if (!sched.assignment[j]) {
          a[nm("s", j)] = static_cast<double>(model.horizon);
          continue;
        }
        int64_t s = sched.assignment[j]->start;
        int mc = sched.assignment[j]->machine;
        a[nm("s", j)] = static_cast<double>(s + 1);
        a[nm("zz", j)] = 1;
        for (int64_t t = s + 1; t <= s + inst.p[j]; ++t) a[nm("x", j, mc, t)] = 1;
      }
      if (model.objective != Objective::MaxSum)
        for (int j = 0; j < inst.n_jobs; ++j) a[nm("zz", j)] = 1;
      break;
    }
  }

  if (model.objective == Objective::MinMax) {
    int64_t makespan = 0;
    for (int j = 0; j < inst.n_jobs; ++j)
      if (sched.assignment[j]) makespan = std::max(makespan, sched.completion(inst, j));
    if (model.formulation == Formulation::F3) {
      // Slot numbering: Tmax >= s_model + p = completion + 1.
      int64_t t = 0;
      for (int j = 0; j < inst.n_jobs; ++j)
        t = std::max(t, static_cast<int64_t>(a[nm("s", j)]) + inst.p[j]);
      a["Tmax"] = static_cast<double>(t);
    } else {
      int64_t t = makespan;
      for (int j = 0; j < inst.n_jobs; ++j) t = std::max(t, start[j] + inst.p[j]);
      a["Tmax"] = static_cast<double>(t);
    }
  }
  return a;
}

Schedule reconstruct_schedule(const LinearModel& model, const Instance& inst,
                              const VarAssignment& assignment) {
  auto value = [&](const std::string& name) {
    auto it = assignment.find(name);
    if (it == assignment.end())
      throw std::invalid_argument("reconstruct_schedule: assignment missing " + name);
    return it->second;
  };

  Schedule sched;
  sched.assignment.assign(inst.n_jobs, std::nullopt);
  if (model.formulation == Formulation::F3) {
    struct Run {
      int job;
      int64_t start;
    };
    std::vector<Run> runs;
    for (int j = 0; j < inst.n_jobs; ++j) {
      int64_t first = -1;
      for (int64_t t = 1; t <= model.horizon && first < 0; ++t)
        for (int mc = 0; mc < inst.n_machines; ++mc)
          if (value(nm("x", j, mc, t)) > 0.5) {
            first = t;
            break;
          }
      if (first >= 0) runs.push_back({j, first - 1});
    }
    // Slot choices may migrate between machines; recolor the intervals.
    std::sort(runs.begin(), runs.end(), [](const Run& a, const Run& b) {
      return a.start != b.start ? a.start < b.start : a.job < b.job;
    });
    std::vector<int64_t> free_at(inst.n_machines, 0);
    for (const Run& run : runs) {
      int chosen = -1;
      for (int mc = 0; mc < inst.n_machines; ++mc)
        if (free_at[mc] <= run.start) {
          chosen = mc;
          break;
        }
      if (chosen < 0) chosen = 0;  // leave an overlap for validation to flag
      free_at[chosen] = run.start + inst.p[run.job];
      sched.assignment[run.job] = Assignment{chosen, run.start};
    }
  } else {
    for (int j = 0; j < inst.n_jobs; ++j) {
      for (int mc = 0; mc < inst.n_machines; ++mc) {
        bool on = false;
        if (model.formulation == Formulation::F2) {
          on = value(nm("x", j, mc)) > 0.5;
        } else {
          for (int64_t k = 1; k <= model.positions && !on; ++k)
            on = value(nm("x", j, mc, k)) > 0.5;
        }
        if (on) {
          sched.assignment[j] =
              Assignment{mc, static_cast<int64_t>(std::llround(value(nm("s", j))))};
          break;
        }
      }
    }
  }
  for (int j = 0; j < inst.n_jobs; ++j)
    if (!sched.assignment[j]) sched.rejected.push_back(j);
  return sched;
}

}  // namespace cjs
