#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "sdlab/io/reports.hpp"
#include "sdlab/lab/census.hpp"

namespace sdlab::cli {

/// A config problem, located by JSON pointer or by byte offset.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(const std::string& location, const std::string& message)
      : std::runtime_error(location + ": " + message), location_(location) {}
  const std::string& location() const { return location_; }

 private:
  std::string location_;
};

enum class Experiment { bad_centers, vanishing, face_condition, homotopy_face, dimension };

struct Assertion {
  std::string path;  // JSON pointer into the "result" object
  io::Json equals;   // rationals given as "a/b" strings compare by value
  io::Json at_most;
};

struct CensusExperiment {
  Experiment experiment = Experiment::bad_centers;
  std::string name;
  lab::VarietySpec variety;
  lab::CensusConfig centers;
  std::vector<lab::Permutation> sigma_set;
  std::vector<Assertion> assertions;
  io::Json echo;  // normalized copy of the inputs, for the report
};

CensusExperiment parse_census_config(const std::string& text);
CensusExperiment load_census_config(const std::string& path);

/// Runs the experiment and returns {"result": ..., "assertions": [...]}.
io::Json run_experiment(const CensusExperiment& exp);

}  // namespace sdlab::cli
