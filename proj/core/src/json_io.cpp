#include "robsched/json_io.hpp"

#include "json.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace robsched {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& what) {
  throw std::invalid_argument("instance JSON: " + what);
}

Value value_from_json(const json& node) {
  if (node.is_string()) return Value::parse(node.get<std::string>());
  if (node.is_number_integer()) {
    auto v = node.get<long long>();
    if (v < 0) fail("negative processing time");
    return Value(v);
  }
  if (node.is_number_unsigned()) return Value(static_cast<long long>(node.get<unsigned long long>()));
  fail("processing times must be integers or \"num/den\" strings (floats are not exact)");
}

Rational rational_from_json(const json& node) {
  if (node.is_string()) return parse_rational(node.get<std::string>());
  if (node.is_number_integer()) return Rational(node.get<long long>());
  if (node.is_number_unsigned()) return Rational(node.get<unsigned long long>());
  fail("expected a rational (integer or \"num/den\" string)");
}

std::vector<JobTimes> jobs_from_json(const json& doc) {
  if (!doc.contains("jobs") || !doc["jobs"].is_array()) fail("missing \"jobs\" array");
  std::vector<JobTimes> jobs;
  for (const auto& entry : doc["jobs"]) {
    if (!entry.is_object() || !entry.contains("p_bar") || !entry.contains("p_hat"))
      fail("each job needs \"p_bar\" and \"p_hat\"");
    jobs.push_back({value_from_json(entry["p_bar"]), value_from_json(entry["p_hat"])});
  }
  return jobs;
}

std::vector<std::vector<Value>> matrix_from_json(const json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_array()) fail(std::string("missing \"") + key + "\" matrix");
  std::vector<std::vector<Value>> rows;
  for (const auto& row : doc[key]) {
    if (!row.is_array()) fail(std::string("\"") + key + "\" rows must be arrays");
    std::vector<Value> values;
    for (const auto& cell : row) values.push_back(value_from_json(cell));
    rows.push_back(std::move(values));
  }
  return rows;
}

int gamma_from_json(const json& doc) {
  if (!doc.contains("gamma") || !doc["gamma"].is_number_integer()) fail("missing integer \"gamma\"");
  auto g = doc["gamma"].get<long long>();
  if (g < 0) fail("\"gamma\" must be non-negative");
  return static_cast<int>(g);
}

void check_declared_machines(const json& doc, int actual) {
  if (!doc.contains("machines")) return;
  if (!doc["machines"].is_number_integer() || doc["machines"].get<long long>() != actual)
    fail("\"machines\" disagrees with the rest of the instance");
}

json value_to_json(const Value& v) { return v.str(); }

}  // namespace

Instance instance_from_json(std::string_view text) {
  json doc = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded()) fail("not valid JSON");
  if (!doc.is_object()) fail("top level must be an object");
  if (!doc.contains("kind") || !doc["kind"].is_string()) fail("missing \"kind\"");
  const std::string kind = doc["kind"].get<std::string>();
  const int gamma = gamma_from_json(doc);

  if (kind == "identical") {
    if (!doc.contains("machines") || !doc["machines"].is_number_integer())
      fail("identical instances need an integer \"machines\" field");
    auto m = doc["machines"].get<long long>();
    if (m < 1) fail("\"machines\" must be at least 1");
    return Instance::identical(static_cast<int>(m), gamma, jobs_from_json(doc));
  }
  if (kind == "uniform") {
    if (!doc.contains("speeds") || !doc["speeds"].is_array()) fail("uniform instances need \"speeds\"");
    std::vector<Rational> speeds;
    for (const auto& s : doc["speeds"]) speeds.push_back(rational_from_json(s));
    check_declared_machines(doc, static_cast<int>(speeds.size()));
    return Instance::uniform(std::move(speeds), gamma, jobs_from_json(doc));
  }
  if (kind == "unrelated") {
    auto nominal = matrix_from_json(doc, "p_bar_matrix");
    auto deviation = matrix_from_json(doc, "p_hat_matrix");
    check_declared_machines(doc, static_cast<int>(nominal.size()));
    return Instance::unrelated(gamma, std::move(nominal), std::move(deviation));
  }
  fail("unknown kind \"" + kind + "\"");
}

std::string instance_to_json(const Instance& instance, int indent) {
  json doc;
  doc["kind"] = machine_kind_name(instance.kind());
  doc["gamma"] = instance.gamma();
  doc["machines"] = instance.machine_count();
  switch (instance.kind()) {
    case MachineKind::Identical:
    case MachineKind::Uniform: {
      json jobs = json::array();
      for (const auto& jt : instance.job_times())
        jobs.push_back({{"p_bar", value_to_json(jt.nominal)}, {"p_hat", value_to_json(jt.deviation)}});
      doc["jobs"] = std::move(jobs);
      if (instance.kind() == MachineKind::Uniform) {
        json speeds = json::array();
        for (const auto& s : instance.speeds()) speeds.push_back(rational_str(s));
        doc["speeds"] = std::move(speeds);
      }
      break;
    }
    case MachineKind::Unrelated: {
      json nominal = json::array();
      json deviation = json::array();
      for (int i = 0; i < instance.machine_count(); ++i) {
        json nrow = json::array();
        json drow = json::array();
        for (int j = 0; j < instance.job_count(); ++j) {
          nrow.push_back(value_to_json(instance.nominal_time(i, j)));
          drow.push_back(value_to_json(instance.deviation_time(i, j)));
        }
        nominal.push_back(std::move(nrow));
        deviation.push_back(std::move(drow));
      }
      doc["p_bar_matrix"] = std::move(nominal);
      doc["p_hat_matrix"] = std::move(deviation);
      break;
    }
  }
  return doc.dump(indent);
}

Schedule schedule_from_json(std::string_view text) {
  json doc = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded() || !doc.is_object() || !doc.contains("assignment") ||
      !doc["assignment"].is_array())
    throw std::invalid_argument("schedule JSON: expected {\"assignment\": [machine, ...]}");
  Schedule schedule;
  for (const auto& entry : doc["assignment"]) {
    if (!entry.is_number_integer())
      throw std::invalid_argument("schedule JSON: assignment entries must be integers");
    schedule.assignment.push_back(entry.get<int>());
  }
  return schedule;
}

std::string schedule_to_json(const Schedule& schedule, int indent) {
  json doc;
  doc["assignment"] = schedule.assignment;
  return doc.dump(indent);
}

namespace {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write " + path.string());
  out << text << '\n';
}

}  // namespace

Instance load_instance(const std::filesystem::path& path) {
  return instance_from_json(read_file(path));
}

void save_instance(const std::filesystem::path& path, const Instance& instance) {
  write_file(path, instance_to_json(instance));
}

Schedule load_schedule(const std::filesystem::path& path) {
  return schedule_from_json(read_file(path));
}

void save_schedule(const std::filesystem::path& path, const Schedule& schedule) {
  write_file(path, schedule_to_json(schedule));
}

}  // namespace robsched
