#include <algorithm>
#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "commands.hpp"

int main(int argc, char** argv) {
  using namespace hftpr;

  CLI::App app{"HFT phase retrieval: simulate, reconstruct, sweep, mix, ingest"};
  app.require_subcommand(1);

  struct Bound {
    std::string config;
    std::map<std::string, std::string> values;
    std::map<std::string, CLI::Option*> flags;
  };
  std::map<std::string, Bound> bound;

  for (const Command& cmd : commands()) {
    CLI::App* sub = app.add_subcommand(cmd.name, cmd.description);
    Bound& b = bound[cmd.name];
    sub->add_option("--config", b.config, "key = value file; flags override it");
    std::vector<std::string> keys = {"seed", "out"};
    keys.insert(keys.end(), cmd.keys.begin(), cmd.keys.end());
    for (const std::string& key : keys) {
      const auto& all = config_keys();
      const auto it = std::find_if(all.begin(), all.end(), [&](const ConfigKey& k) { return k.name == key; });
      b.flags[key] = sub->add_option("--" + key, b.values[key], it->help);
    }
  }

  CLI11_PARSE(app, argc, argv);

  for (const Command& cmd : commands()) {
    CLI::App* sub = app.get_subcommand(cmd.name);
    if (!sub->parsed()) continue;
    const Bound& b = bound.at(cmd.name);
    try {
      RunConfig c = b.config.empty() ? RunConfig{} : load_config(b.config);
      for (const auto& [key, opt] : b.flags) {
        if (opt->count() > 0) set_key(c, key, b.values.at(key));
      }
      cmd.run(c);
    } catch (const std::exception& e) {
      std::cerr << "hftpr " << cmd.name << ": " << e.what() << "\n";
      return 1;
    }
  }
  return 0;
}
