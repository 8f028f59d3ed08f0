#include "cjs/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace cjs {

namespace {
using nlohmann::json;

[[noreturn]] void fail(const std::string& what) {
  throw std::invalid_argument(what);
}
}  // namespace

std::string instance_to_json(const Instance& inst) {
  json j;
  j["version"] = 1;
  j["n"] = inst.n_jobs;
  j["m"] = inst.n_machines;
  if (inst.T) j["T"] = *inst.T;
  j["p"] = inst.p;
  if (!inst.w.empty()) j["w"] = inst.w;
  if (!inst.r.empty()) j["r"] = inst.r;
  j["conflicts"] = json::array();
  for (auto [a, b] : inst.conflicts) j["conflicts"].push_back({a, b});
  if (inst.meta) {
    json m;
    m["seed"] = inst.meta->seed;
    m["alpha"] = inst.meta->alpha;
    m["setting"] = inst.meta->setting;
    if (inst.meta->capped) m["capped"] = true;
    j["meta"] = m;
  }
  return j.dump(2) + "\n";
}

Instance instance_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    fail(std::string("instance: invalid JSON: ") + e.what());
  }
  try {
    if (j.value("version", 0) != 1) fail("instance: unsupported version");
    Instance inst;
    inst.n_jobs = j.at("n").get<int>();
    inst.n_machines = j.at("m").get<int>();
    if (j.contains("T")) inst.T = j.at("T").get<int64_t>();
    inst.p = j.at("p").get<std::vector<int64_t>>();
    if (j.contains("w")) inst.w = j.at("w").get<std::vector<int64_t>>();
    if (j.contains("r")) inst.r = j.at("r").get<std::vector<int64_t>>();
    for (const auto& pair : j.value("conflicts", json::array())) {
      if (!pair.is_array() || pair.size() != 2) fail("instance: conflict pair must be [i, j]");
      inst.conflicts.emplace_back(pair[0].get<int>(), pair[1].get<int>());
    }
    if (j.contains("meta")) {
      const auto& m = j.at("meta");
      InstanceMeta meta;
      meta.seed = m.value("seed", uint64_t{0});
      meta.alpha = m.value("alpha", 0);
      meta.setting = m.value("setting", 0);
      meta.capped = m.value("capped", false);
      inst.meta = meta;
    }
    inst.check();
    return inst;
  } catch (const json::exception& e) {
    fail(std::string("instance: ") + e.what());
  }
}

std::string schedule_to_json(const Schedule& sched) {
  json j;
  j["version"] = 1;
  j["assignments"] = json::array();
  for (size_t job = 0; job < sched.assignment.size(); ++job) {
    if (!sched.assignment[job]) continue;
    json a;
    a["job"] = job;
    a["machine"] = sched.assignment[job]->machine;
    a["start"] = sched.assignment[job]->start;
    j["assignments"].push_back(a);
  }
  j["rejected"] = sched.rejected;
  return j.dump(2) + "\n";
}

Schedule schedule_from_json(const std::string& text, int n_jobs) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    fail(std::string("schedule: invalid JSON: ") + e.what());
  }
  try {
    if (j.value("version", 0) != 1) fail("schedule: unsupported version");
    Schedule sched;
    sched.assignment.resize(n_jobs);
    for (const auto& a : j.value("assignments", json::array())) {
      int job = a.at("job").get<int>();
      if (job < 0 || job >= n_jobs) fail("schedule: job index out of range");
      if (sched.assignment[job]) fail("schedule: job assigned twice");
      sched.assignment[job] = Assignment{a.at("machine").get<int>(), a.at("start").get<int64_t>()};
    }
    sched.rejected = j.value("rejected", std::vector<int>{});
    return sched;
  } catch (const json::exception& e) {
    fail(std::string("schedule: ") + e.what());
  }
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << content;
  if (!out) throw std::runtime_error("write failed: " + path);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Instance load_instance(const std::string& path) {
  return instance_from_json(read_file(path));
}

void save_instance(const std::string& path, const Instance& inst) {
  write_file(path, instance_to_json(inst));
}

Schedule load_schedule(const std::string& path, int n_jobs) {
  return schedule_from_json(read_file(path), n_jobs);
}

void save_schedule(const std::string& path, const Schedule& sched) {
  write_file(path, schedule_to_json(sched));
}

}  // namespace cjs
