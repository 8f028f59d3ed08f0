#pragma once

#include <string>

#include "cjs/instance.hpp"
#include "cjs/schedule.hpp"

namespace cjs {

// Text formats are specified byte-exactly in docs/FORMATS.md. Writers emit
// canonical JSON (sorted keys, two-space indent, trailing newline) so that
// regeneration from a seed reproduces files bit-for-bit.

std::string instance_to_json(const Instance& inst);
Instance instance_from_json(const std::string& text);

std::string schedule_to_json(const Schedule& sched);
Schedule schedule_from_json(const std::string& text, int n_jobs);

void write_file(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

Instance load_instance(const std::string& path);
void save_instance(const std::string& path, const Instance& inst);
Schedule load_schedule(const std::string& path, int n_jobs);
void save_schedule(const std::string& path, const Schedule& sched);

}  // namespace cjs
