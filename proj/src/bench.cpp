#include "cjs/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <sstream>

#include "cjs/binary_search.hpp"
#include "cjs/external_solver.hpp"
#include "cjs/formulations.hpp"
#include "cjs/oracle.hpp"
#include "cjs/schedule.hpp"

namespace cjs {
namespace {

const char* status_label(SolveStatus s) {
  switch (s) {
    case SolveStatus::Optimal: return "Optimal";
    case SolveStatus::Feasible: return "Feasible";
    case SolveStatus::Infeasible: return "Infeasible";
    case SolveStatus::Unknown: return "Unknown";
  }
  return "?";
}

struct MethodPlan {
  bool minmax_only = false;
  bool needs_external = false;
};

MethodPlan plan_for(const std::string& method) {
  MethodPlan plan;
  if (method == "bs-native") plan.minmax_only = true;
  if (method == "bs-f1" || method == "bs-f3") {
    plan.minmax_only = true;
    plan.needs_external = true;
  }
  if (method == "f1" || method == "f2" || method == "f3") plan.needs_external = true;
  return plan;
}

bool known_method(const std::string& method) {
  static const char* names[] = {"native", "bs-native", "bs-f1", "bs-f3",
                                "f1",     "f2",        "f3",    "oracle"};
  for (const char* n : names)
    if (method == n) return true;
  return false;
}

SolveResult dispatch(const Instance& inst, const std::string& method,
                     const BenchConfig& cfg) {
  if (method == "native") return solve(inst, cfg.objective, cfg.solve);
  if (method == "oracle") {
    OracleResult ref = brute_force(inst, cfg.objective);  // throws past the guard
    SolveResult res;
    res.status = SolveStatus::Optimal;
    res.incumbent = ref.optimum;
    res.bound = static_cast<double>(ref.optimum);
    res.gap = 0;
    res.schedule = ref.schedule;
    res.stats.nodes = ref.orientations;
    return res;
  }
  if (method == "bs-native" || method == "bs-f1" || method == "bs-f3") {
    BinarySearchConfig bs;
    bs.backend = method == "bs-native" ? ProbeBackend::Native
               : method == "bs-f1"     ? ProbeBackend::F1
                                       : ProbeBackend::F3;
    bs.probe = cfg.solve;
    bs.solver_command = cfg.solver_command;
    return binary_search_minmax(inst, bs);
  }
  Formulation f = method == "f1"   ? Formulation::F1
                  : method == "f2" ? Formulation::F2
                                   : Formulation::F3;
  LinearModel model = build_model(inst, f, cfg.objective);
  return solve_external(inst, model, cfg.solver_command);
}

std::string fmt(double v, int prec) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(prec);
  os << v;
  return os.str();
}

struct Cell {
  int runs = 0;      // completed (not Skipped, not Error)
  int skipped = 0;
  int optimal = 0;
  double time_sum = 0;
  double gap_sum = 0;
};

void summary_block(std::ostringstream& out, const std::string& title,
                   const std::vector<const BenchRecord*>& records,
                   const std::function<std::string(const BenchRecord&)>& key_of,
                   const std::vector<std::string>& keys,
                   const std::vector<std::string>& methods) {
  std::map<std::pair<std::string, std::string>, Cell> cells;
  for (const BenchRecord* r : records) {
    Cell& c = cells[{key_of(*r), r->method}];
    if (r->status == "Skipped" || r->status == "Error") {
      ++c.skipped;
      continue;
    }
    ++c.runs;
    if (r->status == "Optimal") ++c.optimal;
    c.time_sum += r->time_s;
    c.gap_sum += r->gap;
  }

  out << "== by " << title << " ==\n";
  out << "  group      method      runs  skip  time(s)   gap      opt%\n";
  for (const std::string& key : keys) {
    for (const std::string& method : methods) {
      auto it = cells.find({key, method});
      if (it == cells.end()) continue;
      const Cell& c = it->second;
      double mean_time = c.runs ? c.time_sum / c.runs : 0;
      double mean_gap = c.runs ? c.gap_sum / c.runs : 0;
      double opt_pct = c.runs ? 100.0 * c.optimal / c.runs : 0;
      out << "  " << key << std::string(key.size() < 10 ? 10 - key.size() : 1, ' ')
          << method << std::string(method.size() < 11 ? 11 - method.size() : 1, ' ')
          << c.runs << std::string(c.runs < 10 ? 5 : c.runs < 100 ? 4 : 3, ' ')
          << c.skipped << std::string(c.skipped < 10 ? 5 : 4, ' ')
          << fmt(mean_time, 3) << "    " << fmt(mean_gap, 4) << "   "
          << fmt(opt_pct, 1) << "\n";
    }
  }
  out << "\n";
}

std::vector<std::string> ordered_keys(const std::vector<const BenchRecord*>& records,
                                      const std::function<int64_t(const BenchRecord&)>& dim) {
  std::vector<int64_t> vals;
  for (const BenchRecord* r : records) vals.push_back(dim(*r));
  std::sort(vals.begin(), vals.end());
  vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
  std::vector<std::string> keys;
  for (int64_t v : vals) keys.push_back(v < 0 ? "-" : std::to_string(v));
  return keys;
}

}  // namespace

std::vector<BenchRecord> run_bench(const std::vector<BenchRun>& runs,
                                   const BenchConfig& cfg) {
  for (const std::string& m : cfg.methods)
    if (!known_method(m)) throw std::invalid_argument("unknown bench method: " + m);

  std::vector<BenchRecord> records;
  records.reserve(runs.size() * cfg.methods.size());
  for (const BenchRun& run : runs) {
    BenchRecord base;
    base.instance = run.name;
    base.n = run.inst.n_jobs;
    base.m = run.inst.n_machines;
    base.T = run.inst.T.value_or(-1);
    if (run.inst.meta) {
      base.alpha = run.inst.meta->alpha;
      base.setting = run.inst.meta->setting;
    }
    base.objective = objective_name(cfg.objective);

    for (const std::string& method : cfg.methods) {
      BenchRecord rec = base;
      rec.method = method;
      MethodPlan plan = plan_for(method);
      if (plan.minmax_only && cfg.objective != Objective::MinMax) {
        rec.status = "Skipped";
        rec.note = "minmax only";
        records.push_back(std::move(rec));
        continue;
      }
      if (plan.needs_external && cfg.solver_command.empty()) {
        rec.status = "Skipped";
        rec.note = "no external solver command";
        records.push_back(std::move(rec));
        continue;
      }
      auto t0 = std::chrono::steady_clock::now();
      try {
        SolveResult res = dispatch(run.inst, method, cfg);
        rec.status = status_label(res.status);
        rec.incumbent = res.incumbent;
        rec.bound = res.bound;
        rec.gap = res.gap;
        rec.nodes = res.stats.nodes;
        rec.iterations = res.stats.iterations;
        rec.note = res.note;
      } catch (const std::exception& e) {
        rec.status = "Error";
        rec.note = e.what();
      }
      rec.time_s =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      records.push_back(std::move(rec));
    }
  }
  return records;
}

std::string bench_csv(const std::vector<BenchRecord>& records) {
  std::ostringstream out;
  out << "instance,n,m,T,alpha,setting,method,objective,status,incumbent,bound,gap,"
         "time_s,nodes,iterations,note\n";
  for (const BenchRecord& r : records) {
    std::string note = r.note;
    std::replace(note.begin(), note.end(), ',', ';');
    std::replace(note.begin(), note.end(), '\n', ' ');
    out << r.instance << ',' << r.n << ',' << r.m << ',' << r.T << ',' << r.alpha << ','
        << r.setting << ',' << r.method << ',' << r.objective << ',' << r.status << ','
        << (r.incumbent ? std::to_string(*r.incumbent) : std::string()) << ','
        << fmt(r.bound, 6) << ',' << fmt(r.gap, 6) << ',' << fmt(r.time_s, 6) << ','
        << r.nodes << ',' << r.iterations << ',' << note << '\n';
  }
  return out.str();
}

std::string bench_summary(const std::vector<BenchRecord>& records) {
  std::vector<const BenchRecord*> ptrs;
  for (const BenchRecord& r : records) ptrs.push_back(&r);

  std::vector<std::string> methods;
  for (const BenchRecord& r : records)
    if (std::find(methods.begin(), methods.end(), r.method) == methods.end())
      methods.push_back(r.method);

  std::ostringstream out;
  struct Dim {
    const char* title;
    std::function<int64_t(const BenchRecord&)> get;
  };
  const Dim dims[] = {
      {"n", [](const BenchRecord& r) { return static_cast<int64_t>(r.n); }},
      {"m", [](const BenchRecord& r) { return static_cast<int64_t>(r.m); }},
      {"T", [](const BenchRecord& r) { return r.T; }},
      {"alpha", [](const BenchRecord& r) { return static_cast<int64_t>(r.alpha); }},
      {"setting", [](const BenchRecord& r) { return static_cast<int64_t>(r.setting); }},
  };
  for (const Dim& dim : dims) {
    auto key_of = [&dim](const BenchRecord& r) {
      int64_t v = dim.get(r);
      return v < 0 ? std::string("-") : std::to_string(v);
    };
    summary_block(out, dim.title, ptrs, key_of, ordered_keys(ptrs, dim.get), methods);
  }
  summary_block(
      out, "Total", ptrs, [](const BenchRecord&) { return std::string("Total"); },
      {"Total"}, methods);
  return out.str();
}

}  // namespace cjs
