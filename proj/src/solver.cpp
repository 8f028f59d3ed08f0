#include "cjs/solver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace cjs {

const char* solve_status_name(SolveStatus s) {
  switch (s) {
    case SolveStatus::Optimal: return "optimal";
    case SolveStatus::Feasible: return "feasible";
    case SolveStatus::Infeasible: return "infeasible";
    case SolveStatus::Unknown: return "unknown";
  }
  return "?";
}

double relative_gap(std::optional<int64_t> incumbent, double bound) {
  if (!incumbent) return 1.0;
  double inc = static_cast<double>(*incumbent);
  return std::abs(inc - bound) / std::max(std::abs(inc), 1e-9);
}

namespace {

constexpr int64_t kNoHorizon = std::numeric_limits<int64_t>::max() / 4;

struct Engine {
  const Instance& inst;
  Objective obj;
  SolveConfig cfg;
  int64_t horizon;
  bool decision;

  int n, m;
  std::vector<uint64_t> adj_mask;
  std::vector<int> by_length;   // jobs sorted by (-p, index): the branch order
  std::vector<int> rank_of;
  std::vector<int> by_ratio;    // MaxSum: jobs sorted by r/p descending
  std::vector<int> by_wspt;     // MinSum: jobs sorted by w/p descending
  std::vector<int> twin_prev;   // largest smaller index with identical (p, w, r, conflicts)

  struct Placed {
    int job, machine;
    int64_t start, end;
  };
  std::vector<Placed> placed;
  uint64_t placed_mask = 0;
  std::vector<int64_t> busy;
  int64_t committed_profit = 0;
  int64_t committed_cost = 0;
  int64_t committed_makespan = 0;

  bool have_inc = false;
  int64_t inc_value = 0;
  Schedule inc_schedule;

  double root_bound = 0;
  bool aborted = false;
  bool stop = false;    // decision witness found
  bool proved = false;  // incumbent meets the global dual bound within gap_target
  uint64_t nodes = 0, props = 0;
  std::chrono::steady_clock::time_point t0;

  Engine(const Instance& inst, Objective obj, const SolveConfig& cfg, int64_t horizon,
         bool decision)
      : inst(inst), obj(obj), cfg(cfg), horizon(horizon), decision(decision) {
    n = inst.n_jobs;
    m = inst.n_machines;
    if (n > 63) throw std::invalid_argument("solver: at most 63 jobs supported");
    adj_mask.assign(n, 0);
    for (auto [a, b] : inst.conflicts) {
      adj_mask[a] |= uint64_t{1} << b;
      adj_mask[b] |= uint64_t{1} << a;
    }
    by_length.resize(n);
    for (int i = 0; i < n; ++i) by_length[i] = i;
    std::sort(by_length.begin(), by_length.end(), [&](int a, int b) {
      return inst.p[a] != inst.p[b] ? inst.p[a] > inst.p[b] : a < b;
    });
    rank_of.assign(n, 0);
    for (int i = 0; i < n; ++i) rank_of[by_length[i]] = i;
    if (obj == Objective::MaxSum) {
      by_ratio = by_length;
      std::sort(by_ratio.begin(), by_ratio.end(), [&](int a, int b) {
        // r_a / p_a > r_b / p_b without division; ties by index.
        int64_t lhs = inst.r[a] * inst.p[b], rhs = inst.r[b] * inst.p[a];
        return lhs != rhs ? lhs > rhs : a < b;
      });
    }
    if (obj == Objective::MinSum) {
      by_wspt = by_length;
      std::sort(by_wspt.begin(), by_wspt.end(), [&](int a, int b) {
        int64_t lhs = inst.w[a] * inst.p[b], rhs = inst.w[b] * inst.p[a];
        return lhs != rhs ? lhs > rhs : a < b;
      });
    }
    // Jobs with equal length, equal objective value (weight or profit, where
    // the objective reads one), and equal conflict neighbourhood are
    // interchangeable (equal neighbourhoods exclude mutual conflicts, since a
    // mask never contains its own job). Forcing them into index order along a
    // branch removes the corresponding permutations.
    auto same_value = [&](int i, int j) {
      if (obj == Objective::MinSum) return inst.w[i] == inst.w[j];
      if (obj == Objective::MaxSum) return inst.r[i] == inst.r[j];
      return true;
    };
    twin_prev.assign(n, -1);
    for (int j = 1; j < n; ++j)
      for (int i = j - 1; i >= 0; --i)
        if (inst.p[i] == inst.p[j] && same_value(i, j) && adj_mask[i] == adj_mask[j]) {
          twin_prev[j] = i;
          break;
        }
    busy.assign(m, 0);
    t0 = std::chrono::steady_clock::now();
  }

  bool minimizing() const { return obj != Objective::MaxSum; }

  double elapsed() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }

  bool limits_hit() {
    if (cfg.node_limit && nodes >= cfg.node_limit) return true;
    if (cfg.time_limit > 0 && !cfg.deterministic && (nodes & 1023) == 0 &&
        elapsed() > cfg.time_limit)
      return true;
    return false;
  }

  int64_t max_conflict_end(int job) const {
    int64_t t = 0;
    for (const auto& pl : placed)
      if (adj_mask[job] & (uint64_t{1} << pl.job)) t = std::max(t, pl.end);
    return t;
  }

  int64_t earliest(int job, int64_t s_last, int64_t min_busy) const {
    return std::max({s_last, max_conflict_end(job), min_busy});
  }

  // Admissible bound over all descendants of the current node: a lower
  // bound when minimizing, an upper bound for MaxSum.
  double node_bound(int64_t s_last) const {
    int64_t min_busy = *std::min_element(busy.begin(), busy.end());
    switch (obj) {
      case Objective::MinMax: {
        int64_t lb = committed_makespan;
        int64_t work = 0;
        for (int64_t b : busy) work += b;
        for (int j = 0; j < n; ++j) {
          if (placed_mask & (uint64_t{1} << j)) continue;
          work += inst.p[j];
          lb = std::max(lb, earliest(j, s_last, min_busy) + inst.p[j]);
        }
        lb = std::max(lb, (work + m - 1) / m);
        // Mutually conflicting unplaced jobs serialize behind the earliest
        // of them; grow one clique greedily in branch order.
        uint64_t clique = 0;
        int64_t clique_p = 0, clique_est = kNoHorizon;
        for (int j : by_length) {
          uint64_t bit = uint64_t{1} << j;
          if (placed_mask & bit) continue;
          if ((adj_mask[j] & clique) == clique) {
            clique |= bit;
            clique_p += inst.p[j];
            clique_est = std::min(clique_est, earliest(j, s_last, min_busy));
          }
        }
        if (clique) lb = std::max(lb, clique_est + clique_p);
        return static_cast<double>(lb);
      }
      case Objective::MinSum: {
        // Per-job floor: nothing completes before its earliest start plus
        // its length.
        int64_t lb = committed_cost;
        int64_t w_sum = 0, wp_sum = 0, r_min = kNoHorizon;
        for (int j = 0; j < n; ++j) {
          if (placed_mask & (uint64_t{1} << j)) continue;
          lb += inst.w[j] * (earliest(j, s_last, min_busy) + inst.p[j]);
          w_sum += inst.w[j];
          wp_sum += inst.w[j] * inst.p[j];
          r_min = std::min(r_min, earliest(j, s_last, min_busy));
        }
        if (!w_sum) return static_cast<double>(lb);
        // Machine-capacity floor: drop the conflicts and release everything
        // at the earliest remaining start; spreading the single-machine
        // weight-per-length schedule over m machines bounds any m-machine
        // completion cost from below.
        double wspt = 0;
        int64_t cum = 0;
        for (int j : by_wspt) {
          if (placed_mask & (uint64_t{1} << j)) continue;
          cum += inst.p[j];
          wspt += static_cast<double>(inst.w[j]) * static_cast<double>(cum);
        }
        double capacity = static_cast<double>(committed_cost) +
                          static_cast<double>(w_sum * r_min) + wspt / m +
                          (m - 1) * static_cast<double>(wp_sum) / (2.0 * m);
        return std::max(static_cast<double>(lb), capacity);
      }
      case Objective::MaxSum: {
        double cap = 0;
        for (int64_t b : busy) cap += std::max<int64_t>(0, horizon - std::max(b, s_last));
        double ub = static_cast<double>(committed_profit);
        for (int j : by_ratio) {
          if (placed_mask & (uint64_t{1} << j)) continue;
          if (earliest(j, s_last, min_busy) + inst.p[j] > horizon) continue;
          if (cap <= 0) break;
          double take = std::min(cap, static_cast<double>(inst.p[j]));
          ub += take * static_cast<double>(inst.r[j]) / static_cast<double>(inst.p[j]);
          cap -= take;
        }
        return ub;
      }
    }
    return 0;
  }

  // True once the incumbent is within gap_target of the global dual bound,
  // which proves (near-)optimality without exhausting the tree.
  bool bound_met() const {
    if (decision || !have_inc) return false;
    return relative_gap(inc_value, root_bound) <= cfg.gap_target;
  }

  // Deterministic list-scheduling start solution: jobs in branch order
  // (MinSum by weight-per-length, MaxSum by profit-per-length, else longest
  // first), each on the machine finishing it earliest, pushed past every
  // conflicting interval already placed. MaxSum rejects jobs that would
  // miss the deadline. In decision mode the seed is kept only if it fits
  // the horizon, in which case it settles the question.
  void greedy_seed() {
    std::vector<int> order = by_length;
    if (obj == Objective::MaxSum) order = by_ratio;
    if (obj == Objective::MinSum)
      std::sort(order.begin(), order.end(), [&](int a, int b) {
        int64_t lhs = inst.w[a] * inst.p[b], rhs = inst.w[b] * inst.p[a];
        return lhs != rhs ? lhs > rhs : a < b;
      });

    std::vector<std::optional<Assignment>> asg(n);
    std::vector<int64_t> mbusy(m, 0);
    struct Iv {
      int64_t s, e;
      int job;
    };
    std::vector<Iv> ivs;
    int64_t profit = 0, cost = 0, mk = 0;
    for (int j : order) {
      int best_mach = -1;
      int64_t best_t = 0;
      for (int mach = 0; mach < m; ++mach) {
        int64_t t = mbusy[mach];
        for (bool moved = true; moved;) {
          moved = false;
          for (const Iv& iv : ivs)
            if ((adj_mask[j] >> iv.job) & 1 && iv.s < t + inst.p[j] && t < iv.e) {
              t = iv.e;
              moved = true;
            }
        }
        if (best_mach < 0 || t < best_t) {
          best_mach = mach;
          best_t = t;
        }
      }
      int64_t end = best_t + inst.p[j];
      if (obj == Objective::MaxSum && end > horizon) continue;
      asg[j] = Assignment{best_mach, best_t};
      mbusy[best_mach] = end;
      ivs.push_back({best_t, end, j});
      if (obj == Objective::MaxSum) profit += inst.r[j];
      if (obj == Objective::MinSum) cost += inst.w[j] * end;
      mk = std::max(mk, end);
    }
    if (decision && mk > horizon) return;
    have_inc = true;
    inc_value = obj == Objective::MaxSum ? profit
              : obj == Objective::MinSum ? cost
                                         : mk;
    inc_schedule.assignment = std::move(asg);
    inc_schedule.rejected.clear();
    for (int j = 0; j < n; ++j)
      if (!inc_schedule.assignment[j]) inc_schedule.rejected.push_back(j);
    if (decision) stop = true;
  }

  void snapshot_incumbent(int64_t value) {
    have_inc = true;
    inc_value = value;
    inc_schedule.assignment.assign(n, std::nullopt);
    inc_schedule.rejected.clear();
    for (const auto& pl : placed)
      inc_schedule.assignment[pl.job] = Assignment{pl.machine, pl.start};
    for (int j = 0; j < n; ++j)
      if (!(placed_mask & (uint64_t{1} << j)) && !inc_schedule.assignment[j])
        inc_schedule.rejected.push_back(j);
  }

  bool improves(int64_t value) const {
    if (!have_inc) return true;
    return minimizing() ? value < inc_value : value > inc_value;
  }

  void dfs(int64_t s_last, int last_rank) {
    if (aborted || stop) return;
    ++nodes;
    if (limits_hit()) {
      aborted = true;
      return;
    }

    bool complete = placed_mask == (n == 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1);
    if (obj == Objective::MaxSum) {
      if (improves(committed_profit)) {
        snapshot_incumbent(committed_profit);
        if (bound_met()) {
          proved = stop = true;
          return;
        }
      }
    } else if (complete) {
      int64_t value = obj == Objective::MinMax ? committed_makespan : committed_cost;
      if (decision) {
        snapshot_incumbent(value);
        stop = true;
        return;
      }
      if (improves(value)) {
        snapshot_incumbent(value);
        if (bound_met()) proved = stop = true;
      }
      return;
    }
    if (complete) return;

    // The global dual bound holds below every node, so it sharpens weak
    // local bounds (and stalls the search instantly once the incumbent
    // matches it).
    double bound = node_bound(s_last);
    if (minimizing())
      bound = std::max(bound, root_bound);
    else
      bound = std::min(bound, root_bound);
    if (decision) {
      if (bound > static_cast<double>(horizon)) return;
    } else if (have_inc) {
      double inc = static_cast<double>(inc_value);
      if (minimizing()) {
        if (bound >= inc - cfg.gap_target * std::abs(inc)) return;
      } else {
        if (bound <= inc + cfg.gap_target * std::abs(inc)) return;
      }
    }

    // Candidate starts: 0 plus completion times of placed jobs.
    std::vector<int64_t> cands{0};
    for (const auto& pl : placed) cands.push_back(pl.end);
    std::sort(cands.begin(), cands.end());
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());

    for (int rank = 0; rank < n; ++rank) {
      int job = by_length[rank];
      if (placed_mask & (uint64_t{1} << job)) continue;
      if (twin_prev[job] >= 0 && !(placed_mask & (uint64_t{1} << twin_prev[job])))
        continue;  // an interchangeable smaller-index job goes first
      int64_t conf_end = max_conflict_end(job);
      for (int64_t t : cands) {
        ++props;
        if (t < s_last || t < conf_end) continue;
        if (t == s_last && rank <= last_rank) continue;  // same-time placements in rank order
        if (t + inst.p[job] > horizon) continue;
        bool conflict_support = t == 0 || t == conf_end;
        // One representative machine per distinct idle-from value <= t.
        int64_t prev_value = -1;
        for (int mach = 0; mach < m; ++mach) {
          if (busy[mach] > t || busy[mach] == prev_value) continue;
          prev_value = busy[mach];
          if (!conflict_support && busy[mach] != t) continue;  // unsupported: dominated
          place(job, mach, t);
          dfs(t, rank);
          unplace(job, mach);
          if (aborted || stop) return;
        }
      }
    }
  }

  void place(int job, int mach, int64_t t) {
    int64_t end = t + inst.p[job];
    placed.push_back({job, mach, t, end});
    placed_mask |= uint64_t{1} << job;
    busy[mach] = end;
    committed_profit += obj == Objective::MaxSum ? inst.r[job] : 0;
    committed_cost += obj == Objective::MinSum ? inst.w[job] * end : 0;
    committed_makespan = std::max(committed_makespan, end);
  }

  void unplace(int job, int mach) {
    const Placed pl = placed.back();
    placed.pop_back();
    placed_mask &= ~(uint64_t{1} << job);
    // Recompute the machine's idle-from and the committed makespan.
    busy[mach] = 0;
    committed_makespan = 0;
    for (const auto& q : placed) {
      if (q.machine == mach) busy[mach] = std::max(busy[mach], q.end);
      committed_makespan = std::max(committed_makespan, q.end);
    }
    committed_profit -= obj == Objective::MaxSum ? inst.r[job] : 0;
    committed_cost -= obj == Objective::MinSum ? inst.w[job] * pl.end : 0;
  }

  SolveResult finish() {
    SolveResult res;
    res.stats.nodes = nodes;
    res.stats.propagations = props;
    res.stats.elapsed_s = elapsed();
    if (have_inc) {
      res.incumbent = inc_value;
      res.schedule = inc_schedule;
    }
    if (decision) {
      if (stop) {
        res.status = SolveStatus::Feasible;
        res.bound = root_bound;  // a witness proves nothing about the optimum
      } else if (!aborted) {
        res.status = SolveStatus::Infeasible;
        res.bound = static_cast<double>(horizon) + 1;  // proven: no makespan <= horizon
      } else {
        res.status = SolveStatus::Unknown;
        res.bound = root_bound;
      }
      res.gap = relative_gap(res.incumbent, res.bound);
      return res;
    }
    if (proved) {
      // The incumbent met the global dual bound; no cheaper certificate exists.
      res.status = SolveStatus::Optimal;
      res.bound = root_bound;
      res.gap = relative_gap(res.incumbent, res.bound);
      return res;
    }
    if (!aborted) {
      // Exhausted search: optimum proven within gap_target.
      res.status = have_inc ? SolveStatus::Optimal : SolveStatus::Infeasible;
      if (have_inc) {
        double inc = static_cast<double>(inc_value);
        res.bound = cfg.gap_target == 0
                        ? inc
                        : (minimizing() ? inc - cfg.gap_target * std::abs(inc)
                                        : inc + cfg.gap_target * std::abs(inc));
      } else {
        res.bound = root_bound;
      }
    } else {
      res.status = have_inc ? SolveStatus::Feasible : SolveStatus::Unknown;
      res.bound = root_bound;
    }
    res.gap = relative_gap(res.incumbent, res.bound);
    return res;
  }
};

SolveResult run(const Instance& inst, Objective obj, const SolveConfig& cfg, int64_t horizon,
                bool decision) {
  inst.check_for(obj);
  Engine eng(inst, obj, cfg, horizon, decision);
  eng.root_bound = inst.n_jobs ? eng.node_bound(0) : 0;
  if (obj == Objective::MinMax)
    eng.root_bound = std::max(eng.root_bound, static_cast<double>(minmax_lower_bound(inst)));
  if (decision && eng.root_bound > static_cast<double>(horizon)) {
    SolveResult res;
    res.status = SolveStatus::Infeasible;
    res.bound = static_cast<double>(horizon) + 1;
    res.gap = 1.0;
    return res;
  }
  eng.greedy_seed();
  bool settled = eng.decision && eng.stop;  // the greedy witness fits the horizon
  if (!settled && eng.bound_met()) {
    eng.proved = true;
    settled = true;
  }
  if (!settled) eng.dfs(0, -1);
  return eng.finish();
}

}  // namespace

SolveResult solve(const Instance& inst, Objective obj, const SolveConfig& cfg) {
  int64_t horizon = kNoHorizon;
  if (obj == Objective::MaxSum) {
    inst.check_for(obj);
    horizon = *inst.T;
  }
  return run(inst, obj, cfg, horizon, false);
}

SolveResult solve_decision_minmax(const Instance& inst, int64_t horizon,
                                  const SolveConfig& cfg) {
  if (horizon < 0) throw std::invalid_argument("solve_decision_minmax: horizon must be >= 0");
  return run(inst, Objective::MinMax, cfg, horizon, true);
}

}  // namespace cjs
