// polyslice: exact slice-diameter experiments on polyhedral norms.
//
//   polyslice <experiment> [options]      experiment: thm1 prop2 prop3 verify-ext sandwich
//   polyslice vertices --space FILE       unit ball of a space, H- and V-representation
//   polyslice diameter --space FILE --f P/Q,... --alpha P/Q
//
// Exit status: 0 when every asserted row passes, 1 when one fails, 2 on bad input.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "polyslice/errors.hpp"
#include "polyslice/experiments.hpp"
#include "polyslice/serialize.hpp"
#include "polyslice/slice.hpp"

namespace {

using polyslice::Scalar;

std::vector<Scalar> parse_list(const std::string& text) {
  std::vector<Scalar> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(polyslice::parse_scalar(item));
  }
  return out;
}

nlohmann::json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw polyslice::InvalidArgument("cannot open '" + path + "'");
  return nlohmann::json::parse(in);
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw polyslice::InvalidArgument("cannot write '" + path + "'");
  out << text;
}

struct Flags {
  std::string config_file;
  int n = 0;
  std::string r, delta, epsilon, epsilons, omega_rule = "default", omega, g = "e1", alpha, format = "csv", output;
  std::size_t trials = 0;
  std::uint64_t seed = 1;
};

void add_experiment_flags(CLI::App* cmd, Flags& f) {
  cmd->add_option("--config", f.config_file, "JSON file mirroring the experiment configuration");
  cmd->add_option("--n", f.n, "Truncation size N (omit to sweep 1..6 where supported)");
  cmd->add_option("--r", f.r, "Parameter r as P/Q");
  cmd->add_option("--delta", f.delta, "Slice depth delta as P/Q (thm1)");
  cmd->add_option("--epsilon", f.epsilon, "Target epsilon as P/Q");
  cmd->add_option("--epsilons", f.epsilons, "Strictly decreasing P/Q list (prop3)");
  cmd->add_option("--omega-rule", f.omega_rule, "default | list")->check(CLI::IsMember({"default", "list"}));
  cmd->add_option("--omega", f.omega, "omega_2..omega_N as P/Q list (with --omega-rule list)");
  cmd->add_option("--g", f.g, "Slicing functional for prop2: e1 | e1+e2 | random | P/Q,...");
  cmd->add_option("--alpha", f.alpha, "Slice depth for prop2 as P/Q");
  cmd->add_option("--trials", f.trials, "Random trials (sampling oracle / sandwich vectors)");
  cmd->add_option("--seed", f.seed, "Random seed");
  cmd->add_option("--format", f.format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--output", f.output, "Write the report here instead of stdout");
}

polyslice::ExperimentConfig to_config(const std::string& name, const Flags& f, const CLI::App& cmd) {
  polyslice::ExperimentConfig c;
  if (!f.config_file.empty()) {
    c = polyslice::config_from_json(read_json(f.config_file));
    if (c.experiment != name) {
      throw polyslice::InvalidArgument("config file is for '" + c.experiment + "', not '" + name + "'");
    }
  }
  c.experiment = name;
  auto given = [&](const char* opt) { return cmd.count(opt) > 0; };
  if (given("--n")) c.n = f.n;
  if (given("--r")) c.r = polyslice::parse_scalar(f.r);
  if (given("--delta")) c.delta = polyslice::parse_scalar(f.delta);
  if (given("--epsilon")) c.epsilon = polyslice::parse_scalar(f.epsilon);
  if (given("--epsilons")) c.epsilons = parse_list(f.epsilons);
  if (given("--omega-rule")) c.omega_rule = f.omega_rule;
  if (given("--omega")) c.omega = parse_list(f.omega);
  if (given("--g")) c.g = f.g;
  if (given("--alpha")) c.alpha = polyslice::parse_scalar(f.alpha);
  if (given("--trials")) c.trials = f.trials;
  if (given("--seed")) c.seed = f.seed;
  if (given("--format")) c.format = f.format;
  if (given("--output")) c.output_path = f.output;
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact slice diameters and certificates for polyhedral norms"};
  app.require_subcommand(1);

  Flags flags;
  std::vector<std::pair<std::string, CLI::App*>> experiments;
  for (const char* name : {"thm1", "prop2", "prop3", "verify-ext", "sandwich"}) {
    auto* cmd = app.add_subcommand(name, std::string("Run the ") + name + " experiment");
    add_experiment_flags(cmd, flags);
    experiments.emplace_back(name, cmd);
  }

  std::string space_file, f_text, alpha_text, output;
  auto* vertices_cmd = app.add_subcommand("vertices", "Unit ball of a space file as H- and V-representation JSON");
  vertices_cmd->add_option("--space", space_file, "Space description JSON")->required();
  vertices_cmd->add_option("--output", output, "Output path");
  auto* diameter_cmd = app.add_subcommand("diameter", "Exact diameter of a slice of a space's unit ball");
  diameter_cmd->add_option("--space", space_file, "Space description JSON")->required();
  diameter_cmd->add_option("--f", f_text, "Slicing functional as P/Q list")->required();
  diameter_cmd->add_option("--alpha", alpha_text, "Slice depth as P/Q")->required();
  diameter_cmd->add_option("--output", output, "Output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // --help exits 0
  }

  try {
    if (vertices_cmd->parsed()) {
      const auto space = polyslice::space_from_json(read_json(space_file));
      const auto ball = polyslice::unit_ball(space);
      emit(polyslice::to_json(ball, polyslice::enumerate_vertices(ball)).dump(2) + "\n", output);
      return 0;
    }
    if (diameter_cmd->parsed()) {
      const auto space = polyslice::space_from_json(read_json(space_file));
      const polyslice::SliceSpec spec(polyslice::Vec(parse_list(f_text)), polyslice::parse_scalar(alpha_text));
      const auto result = polyslice::diameter(polyslice::make_slice(space, spec), space);
      emit(polyslice::to_json(result).dump(2) + "\n", output);
      return 0;
    }
    for (const auto& [name, cmd] : experiments) {
      if (!cmd->parsed()) continue;
      const auto config = to_config(name, flags, *cmd);
      const auto report = polyslice::run_experiment(config);
      const std::string text =
          config.format == "json" ? polyslice::to_json(report).dump(2) + "\n" : polyslice::to_csv(report);
      emit(text, config.output_path);
      for (const auto& note : report.notes) std::cerr << "note: " << note << '\n';
      std::cerr << name << ": " << report.verdict() << '\n';
      return report.passed() ? 0 : 1;
    }
  } catch (const polyslice::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: bad JSON: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
