#pragma once

#include <string>
#include <vector>

#include "run_config.hpp"

namespace hftpr {

struct Command {
  std::string name;
  std::string description;
  std::vector<std::string> keys;  ///< config keys exposed as flags
  void (*run)(const RunConfig&);
};

const std::vector<Command>& commands();

// Each command writes into c.out (created if needed), including the config
// echo config.txt. Failures throw.
void cmd_simulate(const RunConfig& c);
void cmd_reconstruct(const RunConfig& c);
void cmd_sweep(const RunConfig& c);
void cmd_mix(const RunConfig& c);
void cmd_ingest(const RunConfig& c);
void cmd_make_object(const RunConfig& c);

}  // namespace hftpr
