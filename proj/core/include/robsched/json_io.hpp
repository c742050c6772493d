#pragma once

#include "robsched/instance.hpp"

#include <filesystem>
#include <string>
#include <string_view>

namespace robsched {

/// Instance wire format (JSON object):
///   kind            "identical" | "uniform" | "unrelated"
///   gamma           non-negative integer
///   machines        machine count (required for identical, optional
///                   otherwise; must agree with speeds/matrix rows)
///   jobs            [{"p_bar": V, "p_hat": V}, ...]      identical/uniform
///   speeds          [R, ...]                             uniform
///   p_bar_matrix,
///   p_hat_matrix    [[V, ...], ...], one row per machine  unrelated
///
/// V is a rational rendered as "num/den" (or "num"); plain JSON integers are
/// accepted as shorthand; "inf" marks Forbidden entries. Schedules are
/// {"assignment": [machine, ...]}.
Instance instance_from_json(std::string_view text);
std::string instance_to_json(const Instance& instance, int indent = 2);

Schedule schedule_from_json(std::string_view text);
std::string schedule_to_json(const Schedule& schedule, int indent = 2);

Instance load_instance(const std::filesystem::path& path);
void save_instance(const std::filesystem::path& path, const Instance& instance);

Schedule load_schedule(const std::filesystem::path& path);
void save_schedule(const std::filesystem::path& path, const Schedule& schedule);

}  // namespace robsched
