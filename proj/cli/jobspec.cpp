#include "jobspec.hpp"

#include <set>

#include <json.hpp>

#include "format.hpp"
#include "hulthen/model.hpp"

namespace hulthen::cli {

namespace {

std::string scalar_to_text(const nlohmann::json& v, const std::string& key) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_number()) return v.dump(); // shortest round-trip form
  throw InvalidInput("job parameter '" + key + "' must be a scalar");
}

const std::set<std::string> kCommands = {
    "shift-params", "energy", "table", "centrifugal",
    "enumerate",    "wavefunction", "verify"};

} // namespace

JobSpec parse_jobspec(const std::string& text) {
  nlohmann::json doc = nlohmann::json::parse(text, nullptr, false);
  if (doc.is_discarded() || !doc.is_object())
    throw InvalidInput("job file is not a JSON object");

  JobSpec job;
  if (!doc.contains("command") || !doc["command"].is_string())
    throw InvalidInput("job file needs a string 'command'");
  job.command = doc["command"].get<std::string>();
  if (kCommands.count(job.command) == 0)
    throw InvalidInput("unknown job command '" + job.command + "'");

  if (doc.contains("parameters")) {
    const auto& params = doc["parameters"];
    if (!params.is_object())
      throw InvalidInput("job 'parameters' must be an object");
    for (auto it = params.begin(); it != params.end(); ++it) {
      const std::string& key = it.key();
      if (key == "job" || key == "output" || key == "format")
        throw InvalidInput("job parameter '" + key + "' is reserved");
      job.parameters[key] = scalar_to_text(it.value(), key);
    }
  }

  if (doc.contains("output")) {
    const auto& out = doc["output"];
    if (!out.is_object()) throw InvalidInput("job 'output' must be an object");
    if (out.contains("format")) {
      if (!out["format"].is_string())
        throw InvalidInput("job output.format must be a string");
      job.format = out["format"].get<std::string>();
    }
    if (out.contains("path")) {
      if (!out["path"].is_string())
        throw InvalidInput("job output.path must be a string");
      job.path = out["path"].get<std::string>();
    }
  }
  if (job.format != "csv" && job.format != "json")
    throw InvalidInput("job output.format must be 'csv' or 'json'");
  if (job.path.empty()) throw InvalidInput("job output.path must not be empty");
  return job;
}

std::string serialize_jobspec(const JobSpec& job) {
  JsonValue params = JsonValue::object();
  for (const auto& [key, value] : job.parameters)
    params.set(key, JsonValue::str(value));
  JsonValue out = JsonValue::object();
  out.set("format", JsonValue::str(job.format));
  out.set("path", JsonValue::str(job.path));
  JsonValue doc = JsonValue::object();
  doc.set("command", JsonValue::str(job.command));
  doc.set("parameters", std::move(params));
  doc.set("output", std::move(out));
  return doc.dump();
}

std::vector<std::string> jobspec_to_argv(const JobSpec& job) {
  std::vector<std::string> argv;
  argv.push_back(job.command);
  for (const auto& [key, value] : job.parameters) {
    argv.push_back("--" + key);
    argv.push_back(value);
  }
  argv.push_back("--format");
  argv.push_back(job.format);
  if (job.path != "-") {
    argv.push_back("--output");
    argv.push_back(job.path);
  }
  return argv;
}

} // namespace hulthen::cli
