#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "behavemine/config.hpp"
#include "behavemine/discovery.hpp"
#include "behavemine/event_model.hpp"
#include "behavemine/replay.hpp"
#include "behavemine/report.hpp"
#include "behavemine/simulator.hpp"
#include "behavemine/translator.hpp"

namespace {

using namespace behavemine;

int log_level() {
  // 0 = quiet, 1 = info, 2 = debug
  const char* env = std::getenv("BEHAVEMINE_LOG_LEVEL");
  if (!env) return 0;
  std::string v = env;
  if (v == "info") return 1;
  if (v == "debug") return 2;
  return std::atoi(env);
}

void info(const std::string& msg) {
  if (log_level() >= 1) std::cerr << "[behavemine] " << msg << "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << content;
}

SimulationParams params_from_cli(const std::string& profile_name,
                                 const std::string& params_file, int traces,
                                 std::uint64_t seed) {
  if (!profile_name.empty() && !params_file.empty())
    throw std::runtime_error("--profile and --params are exclusive");
  SimulationParams params;
  if (!profile_name.empty()) {
    auto profile = profile_from_string(profile_name);
    if (!profile) throw std::runtime_error("unknown profile '" + profile_name + "'");
    params = preset(*profile);
  } else if (!params_file.empty()) {
    params = load_params_file(params_file);
  } else {
    throw std::runtime_error("either --profile or --params is required");
  }
  params.trace_count = traces;
  params.seed = seed;
  return params;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"behavemine: HCI event-log simulation, mining and recommendations"};
  app.require_subcommand(1);

  // --- simulate ---
  std::string sim_profile, sim_params_file, sim_out;
  int sim_traces = 825;
  std::uint64_t sim_seed = 1;
  auto* sim = app.add_subcommand("simulate", "generate a low-level event log");
  sim->add_option("--profile", sim_profile, "behavior preset (optimal,user1..user5)");
  sim->add_option("--params", sim_params_file, "key=value parameter file");
  sim->add_option("--traces", sim_traces, "number of traces");
  sim->add_option("--seed", sim_seed, "random seed");
  sim->add_option("-o,--output", sim_out, "output file (default stdout)");

  // --- translate ---
  std::string tr_in, tr_out;
  bool tr_verify = false;
  auto* tr = app.add_subcommand("translate", "low-level log to high-level log");
  tr->add_option("-i,--input", tr_in, "low-level log file")->required();
  tr->add_option("-o,--output", tr_out, "output file (default stdout)");
  tr->add_flag("--verify", tr_verify,
               "check the intra-task partition property and exit");

  // --- discover ---
  std::string disc_in, disc_out, disc_dot;
  double disc_eta = 0.4, disc_eps = 0.55;
  auto* disc = app.add_subcommand("discover", "mine a behavioral Petri net");
  disc->add_option("-i,--input", disc_in, "high-level log file")->required();
  disc->add_option("--eta", disc_eta, "parallelism threshold");
  disc->add_option("--epsilon", disc_eps, "filter percentile");
  disc->add_option("-o,--output", disc_out, "net JSON output (default stdout)");
  disc->add_option("--dot", disc_dot, "also write DOT to this file");

  // --- replay ---
  std::string rp_net, rp_high, rp_low, rp_out, rp_format = "text";
  auto* rp = app.add_subcommand("replay", "replay a log against a net");
  rp->add_option("--net", rp_net, "net JSON file")->required();
  rp->add_option("-i,--input", rp_high, "high-level log file")->required();
  rp->add_option("--low", rp_low, "matching low-level log (mouse precision)");
  rp->add_option("--format", rp_format, "text or json");
  rp->add_option("-o,--output", rp_out, "output file (default stdout)");

  // --- recommend ---
  std::string rc_user, rc_optimal, rc_out, rc_format = "text";
  auto* rc = app.add_subcommand("recommend", "derive ranked recommendations");
  rc->add_option("--user", rc_user, "user high-level log")->required();
  rc->add_option("--optimal", rc_optimal, "optimal high-level log")->required();
  rc->add_option("--format", rc_format, "text or json");
  rc->add_option("-o,--output", rc_out, "output file (default stdout)");

  // --- pipeline ---
  std::string pl_profile, pl_params_file, pl_optimal, pl_out, pl_format = "text";
  int pl_traces = 825;
  std::uint64_t pl_seed = 1;
  double pl_eta = 0.4, pl_eps = 0.55;
  auto* pl = app.add_subcommand("pipeline", "simulate, mine, replay, recommend");
  pl->add_option("--profile", pl_profile, "behavior preset");
  pl->add_option("--params", pl_params_file, "key=value parameter file");
  pl->add_option("--traces", pl_traces, "number of traces");
  pl->add_option("--seed", pl_seed, "random seed");
  pl->add_option("--eta", pl_eta, "parallelism threshold");
  pl->add_option("--epsilon", pl_eps, "filter percentile");
  pl->add_option("--optimal", pl_optimal, "optimal low-level log file");
  pl->add_option("--format", pl_format, "text or json");
  pl->add_option("-o,--output", pl_out, "report file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (sim->parsed()) {
      auto params = params_from_cli(sim_profile, sim_params_file, sim_traces, sim_seed);
      auto log = simulate_log(params, sim_profile.empty() ? "user" : sim_profile);
      if (log.traces.empty())
        std::cerr << "warning: trace count is 0, writing an empty log\n";
      write_file(sim_out, serialize_low_level_log(log));
      std::size_t events = 0;
      for (const auto& t : log.traces) events += t.events.size();
      std::cerr << log.traces.size() << " traces, " << events << " events\n";
      return 0;
    }
    if (tr->parsed()) {
      auto low = parse_low_level_log(read_file(tr_in));
      auto high = translate_log(low);
      if (tr_verify) {
        for (const auto& trace : high.traces) {
          std::size_t covered = 0;
          for (const auto& task : segment_intra_tasks(trace))
            covered += task.controllables.size() +
                       (task.synthetic_terminator ? 0 : 1);
          if (covered != trace.events.size()) {
            std::cerr << "partition violated in trace '" << trace.id << "'\n";
            return 1;
          }
        }
        std::cerr << "partition property holds for " << high.traces.size()
                  << " traces\n";
        return 0;
      }
      write_file(tr_out, serialize_high_level_log(high));
      return 0;
    }
    if (disc->parsed()) {
      auto log = parse_high_level_log(read_file(disc_in));
      DiscoveryParams params{disc_eta, disc_eps};
      auto net = discover(log, params);
      write_file(disc_out, net.to_json() + "\n");
      if (!disc_dot.empty()) write_file(disc_dot, net.to_dot());
      info("discovered net: " + std::to_string(net.place_count()) + " places, " +
           std::to_string(net.transition_count()) + " transitions");
      return 0;
    }
    if (rp->parsed()) {
      auto net = PetriNet::from_json(read_file(rp_net));
      auto high = parse_high_level_log(read_file(rp_high));
      MetricsReport metrics;
      metrics.user_fitness = log_fitness(net, high);
      metrics.optimal_fitness = metrics.user_fitness;
      metrics.reactivity_ms = measure_reactivity(high);
      metrics.mouse_precision = 0.0;
      if (!rp_low.empty()) {
        auto low = parse_low_level_log(read_file(rp_low));
        metrics.mouse_precision = measure_mouse_precision(low);
      }
      std::ostringstream out;
      if (rp_format == "json") {
        out << render_metrics_json(metrics) << "\n";
      } else {
        out << "Fitness: " << metrics.user_fitness << "\n"
            << "Reactivity [ms]: " << metrics.reactivity_ms << "\n";
        if (!rp_low.empty())
          out << "Mouse Precision: " << metrics.mouse_precision << "\n";
      }
      write_file(rp_out, out.str());
      return 0;
    }
    if (rc->parsed()) {
      auto user = parse_high_level_log(read_file(rc_user));
      auto optimal_log = parse_high_level_log(read_file(rc_optimal));
      if (optimal_log.traces.empty())
        throw std::runtime_error("optimal log holds no trace");
      double reactivity = measure_reactivity(user);
      auto recs = rank(combine(
          intra_recommendations(user, optimal_log.traces.front(), reactivity),
          inter_recommendations(user, optimal_log.traces.front())));
      if (rc_format == "json") {
        write_file(rc_out, render_recommendations_json(recs) + "\n");
      } else {
        std::ostringstream out;
        if (recs.empty()) out << "No recommendations.\n";
        for (std::size_t i = 0; i < recs.size(); ++i) {
          if (i) out << "\n";
          out << render_recommendation_text(recs[i]);
        }
        write_file(rc_out, out.str());
      }
      return 0;
    }
    if (pl->parsed()) {
      PipelineConfig config;
      if (!pl_profile.empty()) {
        auto profile = profile_from_string(pl_profile);
        if (!profile)
          throw std::runtime_error("unknown profile '" + pl_profile + "'");
        config.profile = *profile;
      }
      if (!pl_params_file.empty())
        config.explicit_params = load_params_file(pl_params_file);
      config.trace_count = pl_traces;
      config.seed = pl_seed;
      config.discovery = {pl_eta, pl_eps};
      config.report_format = pl_format;
      config.optimal_path = pl_optimal;
      info("running pipeline");
      auto result = run_pipeline(config);
      write_file(pl_out, render_report(result, pl_format));
      return 0;
    }
  } catch (const PipelineError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
