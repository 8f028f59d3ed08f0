#include "cjs/schedule.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace cjs {

const char* objective_name(Objective obj) {
  switch (obj) {
    case Objective::MaxSum: return "maxsum";
    case Objective::MinSum: return "minsum";
    case Objective::MinMax: return "minmax";
  }
  return "?";
}

std::optional<Objective> objective_from_name(const std::string& name) {
  if (name == "maxsum") return Objective::MaxSum;
  if (name == "minsum") return Objective::MinSum;
  if (name == "minmax") return Objective::MinMax;
  return std::nullopt;
}

void Instance::check() const {
  if (n_jobs < 0 || n_machines < 1)
    throw std::invalid_argument("instance: need n_jobs >= 0 and n_machines >= 1");
  if (static_cast<int>(p.size()) != n_jobs)
    throw std::invalid_argument("instance: p must have one entry per job");
  for (int64_t v : p)
    if (v < 1) throw std::invalid_argument("instance: processing times must be >= 1");
  if (!w.empty() && static_cast<int>(w.size()) != n_jobs)
    throw std::invalid_argument("instance: w must be empty or have one entry per job");
  if (!r.empty() && static_cast<int>(r.size()) != n_jobs)
    throw std::invalid_argument("instance: r must be empty or have one entry per job");
  if (T && *T < 0) throw std::invalid_argument("instance: T must be >= 0");
  std::set<std::pair<int, int>> seen;
  for (auto [a, b] : conflicts) {
    if (a < 0 || b < 0 || a >= n_jobs || b >= n_jobs)
      throw std::invalid_argument("instance: conflict pair out of range");
    if (a == b) throw std::invalid_argument("instance: self conflict");
    if (a > b) std::swap(a, b);
    if (!seen.insert({a, b}).second)
      throw std::invalid_argument("instance: duplicate conflict pair");
  }
}

void Instance::check_for(Objective obj) const {
  check();
  if (obj == Objective::MaxSum) {
    if (r.empty() && n_jobs > 0)
      throw std::invalid_argument("maxsum: instance has no profits r");
    if (!T) throw std::invalid_argument("maxsum: instance has no deadline T");
  }
  if (obj == Objective::MinSum && w.empty() && n_jobs > 0)
    throw std::invalid_argument("minsum: instance has no weights w");
}

std::vector<std::vector<int>> Instance::adjacency() const {
  std::vector<std::vector<int>> adj(n_jobs);
  for (auto [a, b] : conflicts) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  return adj;
}

const char* violation_name(Violation v) {
  switch (v) {
    case Violation::Malformed: return "malformed";
    case Violation::DuplicateAssignment: return "duplicate-assignment";
    case Violation::MachineOverlap: return "machine-overlap";
    case Violation::ConflictOverlap: return "conflict-overlap";
    case Violation::Deadline: return "deadline";
  }
  return "?";
}

std::string ValidationReport::to_string() const {
  std::ostringstream out;
  for (const auto& e : entries)
    out << violation_name(e.kind) << ": " << e.detail << "\n";
  return out.str();
}

namespace {

bool intervals_intersect(int64_t a, int64_t alen, int64_t b, int64_t blen) {
  return a < b + blen && b < a + alen;
}

}  // namespace

ValidationReport validate_schedule(const Instance& inst, const Schedule& sched, Objective obj) {
  inst.check_for(obj);
  ValidationReport rep;
  auto add = [&rep](Violation kind, std::string detail) {
    rep.entries.push_back({kind, std::move(detail)});
  };

  if (static_cast<int>(sched.assignment.size()) != inst.n_jobs) {
    add(Violation::Malformed, "schedule must carry one assignment slot per job");
    return rep;
  }

  std::vector<bool> rejected(inst.n_jobs, false);
  for (int j : sched.rejected) {
    if (j < 0 || j >= inst.n_jobs) {
      add(Violation::Malformed, "rejected job index out of range: " + std::to_string(j));
      continue;
    }
    if (rejected[j])
      add(Violation::Malformed, "job rejected twice: " + std::to_string(j));
    rejected[j] = true;
  }

  std::vector<bool> usable(inst.n_jobs, false);
  for (int j = 0; j < inst.n_jobs; ++j) {
    const auto& a = sched.assignment[j];
    if (a && rejected[j]) {
      add(Violation::DuplicateAssignment, "job both assigned and rejected: " + std::to_string(j));
      continue;
    }
    if (!a) {
      if (!rejected[j])
        add(Violation::Malformed, "job neither assigned nor rejected: " + std::to_string(j));
      else if (obj != Objective::MaxSum)
        add(Violation::Malformed, "job rejection is only allowed under maxsum: " + std::to_string(j));
      continue;
    }
    if (a->machine < 0 || a->machine >= inst.n_machines) {
      add(Violation::Malformed, "job " + std::to_string(j) + " on machine " + std::to_string(a->machine));
      continue;
    }
    if (a->start < 0) {
      add(Violation::Malformed, "job " + std::to_string(j) + " starts at " + std::to_string(a->start));
      continue;
    }
    usable[j] = true;
    if (obj == Objective::MaxSum && a->start + inst.p[j] > *inst.T)
      add(Violation::Deadline, "job " + std::to_string(j) + " completes at " +
                                   std::to_string(a->start + inst.p[j]) + " > T = " +
                                   std::to_string(*inst.T));
  }

  // Machine exclusivity among well-formed assignments.
  std::vector<std::vector<int>> on_machine(inst.n_machines);
  for (int j = 0; j < inst.n_jobs; ++j)
    if (usable[j]) on_machine[sched.assignment[j]->machine].push_back(j);
  for (int m = 0; m < inst.n_machines; ++m) {
    auto& jobs = on_machine[m];
    std::sort(jobs.begin(), jobs.end(), [&](int a, int b) {
      return sched.assignment[a]->start < sched.assignment[b]->start;
    });
    for (size_t k = 1; k < jobs.size(); ++k) {
      int prev = jobs[k - 1], cur = jobs[k];
      if (sched.assignment[cur]->start < sched.completion(inst, prev))
        add(Violation::MachineOverlap,
            "jobs " + std::to_string(prev) + " and " + std::to_string(cur) +
                " overlap on machine " + std::to_string(m));
    }
  }

  for (auto [a, b] : inst.conflicts) {
    if (!usable[a] || !usable[b]) continue;
    if (intervals_intersect(sched.assignment[a]->start, inst.p[a],
                            sched.assignment[b]->start, inst.p[b]))
      add(Violation::ConflictOverlap,
          "conflicting jobs " + std::to_string(a) + " and " + std::to_string(b) + " overlap");
  }

  return rep;
}

int64_t evaluate(const Instance& inst, const Schedule& sched, Objective obj) {
  ValidationReport rep = validate_schedule(inst, sched, obj);
  if (!rep.feasible())
    throw InfeasibleScheduleError("evaluate: schedule is infeasible", std::move(rep));
  int64_t value = 0;
  switch (obj) {
    case Objective::MaxSum:
      for (int j = 0; j < inst.n_jobs; ++j)
        if (sched.assignment[j]) value += inst.r[j];
      break;
    case Objective::MinSum:
      for (int j = 0; j < inst.n_jobs; ++j)
        value += inst.w[j] * sched.completion(inst, j);
      break;
    case Objective::MinMax:
      for (int j = 0; j < inst.n_jobs; ++j)
        value = std::max(value, sched.completion(inst, j));
      break;
  }
  return value;
}

int64_t minmax_lower_bound(const Instance& inst) {
  inst.check();
  if (inst.n_jobs == 0) return 0;
  int64_t total = inst.total_p();
  int64_t bound = (total + inst.n_machines - 1) / inst.n_machines;
  for (int64_t v : inst.p) bound = std::max(bound, v);

  // Greedy cliques in the conflict graph, one seeded per job, grown through
  // jobs in decreasing-p order. Clique members pairwise exclude each other in
  // time, so their total processing time bounds the makespan from below.
  std::vector<std::vector<bool>> adj(inst.n_jobs, std::vector<bool>(inst.n_jobs, false));
  for (auto [a, b] : inst.conflicts) adj[a][b] = adj[b][a] = true;
  std::vector<int> order(inst.n_jobs);
  for (int i = 0; i < inst.n_jobs; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return inst.p[a] != inst.p[b] ? inst.p[a] > inst.p[b] : a < b;
  });
  for (int seed : order) {
    std::vector<int> clique{seed};
    int64_t clique_p = inst.p[seed];
    for (int cand : order) {
      if (cand == seed) continue;
      bool ok = true;
      for (int c : clique)
        if (!adj[cand][c]) { ok = false; break; }
      if (ok) {
        clique.push_back(cand);
        clique_p += inst.p[cand];
      }
    }
    bound = std::max(bound, clique_p);
  }
  return bound;
}

}  // namespace cjs
