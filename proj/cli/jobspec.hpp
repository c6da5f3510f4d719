#pragma once

// Batch job files: a JSON document naming a subcommand, its parameters, and
// the output destination. Parsing normalises every parameter to its text
// form so a job round-trips through parse + serialize without drift and can
// be replayed as an argv vector.

#include <map>
#include <string>
#include <vector>

namespace hulthen::cli {

struct JobSpec {
  std::string command;
  std::map<std::string, std::string> parameters; // key order = sorted
  std::string format = "csv";                    // csv | json
  std::string path = "-";                        // "-" = stdout
};

// throws hulthen::InvalidInput on malformed documents
JobSpec parse_jobspec(const std::string& text);

std::string serialize_jobspec(const JobSpec& job);

// ["<command>", "--key", "value", ..., "--format", f, "--output", p]
std::vector<std::string> jobspec_to_argv(const JobSpec& job);

} // namespace hulthen::cli
