#include "cjs/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace cjs {

namespace {

// Shared state for one enumeration pass over a fixed active job set.
struct Enumeration {
  const Instance& inst;
  Objective obj;
  std::vector<int> jobs;               // active jobs, ascending
  std::vector<int> machine_of;         // per active index
  std::vector<std::vector<int>> on_machine;
  std::vector<std::pair<int, int>> cross_edges;  // active-index pairs on distinct machines
  std::vector<std::pair<int, int>> active_edges; // conflict edges within the active set

  // Scratch for the longest-path pass.
  std::vector<int> indeg, topo_queue;
  std::vector<int64_t> start;
  std::vector<std::vector<int>> succ;

  bool found = false;       // MaxSum: stop after the first feasible orientation
  bool have_best = false;
  int64_t best = 0;
  Schedule best_schedule;
  uint64_t orientations = 0;

  explicit Enumeration(const Instance& inst, Objective obj) : inst(inst), obj(obj) {}

  bool better(int64_t value) const {
    if (!have_best) return true;
    return obj == Objective::MaxSum ? value > best : value < best;
  }

  void run(std::vector<int> active) {
    jobs = std::move(active);
    size_t k = jobs.size();
    machine_of.assign(k, 0);
    indeg.assign(k, 0);
    start.assign(k, 0);
    succ.assign(k, {});
    topo_queue.resize(k);
    active_edges.clear();
    std::vector<int> pos(inst.n_jobs, -1);
    for (size_t i = 0; i < k; ++i) pos[jobs[i]] = static_cast<int>(i);
    for (auto [a, b] : inst.conflicts)
      if (pos[a] >= 0 && pos[b] >= 0) active_edges.emplace_back(pos[a], pos[b]);
    if (k == 0) {
      evaluate_leaf();
      return;
    }
    assign(0, 0);
  }

  // Machine assignments in canonical form: a job may open machine q+1 only
  // after machines 0..q are in use. Identical machines make every
  // assignment a relabeling of a canonical one.
  void assign(size_t idx, int used) {
    if (found) return;
    if (idx == jobs.size()) {
      on_machine.assign(inst.n_machines, {});
      for (size_t i = 0; i < jobs.size(); ++i)
        on_machine[machine_of[i]].push_back(static_cast<int>(i));
      cross_edges.clear();
      for (auto [a, b] : active_edges)
        if (machine_of[a] != machine_of[b]) cross_edges.emplace_back(a, b);
      permute(0);
      return;
    }
    int limit = std::min(used, inst.n_machines - 1);
    for (int m = 0; m <= limit; ++m) {
      machine_of[idx] = m;
      assign(idx + 1, std::max(used, m + 1));
      if (found) return;
    }
  }

  void permute(size_t machine) {
    if (found) return;
    if (machine == on_machine.size()) {
      directions();
      return;
    }
    auto& order = on_machine[machine];
    if (order.size() <= 1) {
      permute(machine + 1);
      return;
    }
    std::sort(order.begin(), order.end());
    do {
      permute(machine + 1);
      if (found) return;
    } while (std::next_permutation(order.begin(), order.end()));
  }

  // Same-machine conflict pairs are already serialized by the machine
  // order, so only edges across machines need an explicit direction.
  void directions() {
    uint64_t masks = uint64_t{1} << cross_edges.size();
    for (uint64_t mask = 0; mask < masks; ++mask) {
      evaluate_orientation(mask);
      if (found) return;
    }
  }

  void evaluate_orientation(uint64_t mask) {
    size_t k = jobs.size();
    for (size_t i = 0; i < k; ++i) {
      succ[i].clear();
      indeg[i] = 0;
    }
    for (const auto& order : on_machine)
      for (size_t q = 1; q < order.size(); ++q) {
        succ[order[q - 1]].push_back(order[q]);
        ++indeg[order[q]];
      }
    for (size_t e = 0; e < cross_edges.size(); ++e) {
      auto [a, b] = cross_edges[e];
      if (mask & (uint64_t{1} << e)) std::swap(a, b);
      succ[a].push_back(b);
      ++indeg[b];
    }

    // Longest path in topological order; a leftover node means a cycle.
    size_t head = 0, tail = 0;
    for (size_t i = 0; i < k; ++i) {
      start[i] = 0;
      if (indeg[i] == 0) topo_queue[tail++] = static_cast<int>(i);
    }
    size_t seen = 0;
    while (head < tail) {
      int u = topo_queue[head++];
      ++seen;
      int64_t done = start[u] + inst.p[jobs[u]];
      for (int v : succ[u]) {
        start[v] = std::max(start[v], done);
        if (--indeg[v] == 0) topo_queue[tail++] = v;
      }
    }
    if (seen < k) return;
    ++orientations;
    evaluate_leaf();
  }

  void evaluate_leaf() {
    size_t k = jobs.size();
    int64_t value = 0;
    switch (obj) {
      case Objective::MaxSum:
        for (size_t i = 0; i < k; ++i) {
          if (start[i] + inst.p[jobs[i]] > *inst.T) return;
          value += inst.r[jobs[i]];
        }
        break;
      case Objective::MinSum:
        for (size_t i = 0; i < k; ++i)
          value += inst.w[jobs[i]] * (start[i] + inst.p[jobs[i]]);
        break;
      case Objective::MinMax:
        for (size_t i = 0; i < k; ++i)
          value = std::max(value, start[i] + inst.p[jobs[i]]);
        break;
    }
    if (obj == Objective::MaxSum) found = true;  // value is fixed per subset
    if (!better(value)) return;
    have_best = true;
    best = value;
    best_schedule.assignment.assign(inst.n_jobs, std::nullopt);
    best_schedule.rejected.clear();
    std::vector<bool> active(inst.n_jobs, false);
    for (size_t i = 0; i < k; ++i) {
      active[jobs[i]] = true;
      best_schedule.assignment[jobs[i]] = Assignment{machine_of[i], start[i]};
    }
    for (int j = 0; j < inst.n_jobs; ++j)
      if (!active[j]) best_schedule.rejected.push_back(j);
  }
};

}  // namespace

OracleResult brute_force(const Instance& inst, Objective obj, const OracleLimits& limits) {
  inst.check_for(obj);
  if (inst.n_jobs > limits.max_jobs)
    throw std::invalid_argument("oracle: refusing " + std::to_string(inst.n_jobs) +
                                " jobs (limit " + std::to_string(limits.max_jobs) +
                                "); raise OracleLimits::max_jobs deliberately");

  Enumeration enumeration(inst, obj);
  std::vector<int> all(inst.n_jobs);
  for (int i = 0; i < inst.n_jobs; ++i) all[i] = i;

  if (obj == Objective::MaxSum) {
    // Subsets in ascending mask order; the first witness of the best value
    // is kept, later ties are ignored.
    for (uint64_t mask = 0; mask < (uint64_t{1} << inst.n_jobs); ++mask) {
      std::vector<int> subset;
      int64_t profit = 0;
      bool fits = true;
      for (int j = 0; j < inst.n_jobs; ++j)
        if (mask & (uint64_t{1} << j)) {
          if (inst.p[j] > *inst.T) { fits = false; break; }
          subset.push_back(j);
          profit += inst.r[j];
        }
      if (!fits) continue;
      if (enumeration.have_best && profit <= enumeration.best) continue;
      enumeration.found = false;
      enumeration.run(std::move(subset));
    }
    if (!enumeration.have_best) {
      enumeration.best = 0;
      enumeration.best_schedule.assignment.assign(inst.n_jobs, std::nullopt);
      for (int j = 0; j < inst.n_jobs; ++j) enumeration.best_schedule.rejected.push_back(j);
      enumeration.have_best = true;
    }
  } else {
    enumeration.run(all);
  }

  OracleResult result;
  result.optimum = enumeration.best;
  result.schedule = std::move(enumeration.best_schedule);
  result.orientations = enumeration.orientations;
  return result;
}

}  // namespace cjs
