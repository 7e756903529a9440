#include "behavemine/report.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "behavemine/translator.hpp"

namespace behavemine {

namespace {

std::string format_rate(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  return buf;
}

std::string format_fitness(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  return buf;
}

std::string join_names(const std::vector<std::string>& names) {
  std::string out = "[";
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) out += ", ";
    out += names[i];
  }
  out += "]";
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

SimulationParams PipelineConfig::resolve_params() const {
  if (profile && explicit_params)
    throw PipelineError("config", "profile and explicit params are exclusive");
  SimulationParams p;
  if (profile)
    p = preset(*profile);
  else if (explicit_params)
    p = *explicit_params;
  else
    throw PipelineError("config", "either a profile or explicit params required");
  p.trace_count = trace_count;
  p.seed = seed;
  return p;
}

PipelineResult run_pipeline(const PipelineConfig& config) {
  PipelineResult result;
  SimulationParams params = config.resolve_params();

  try {
    result.user_low = simulate_log(
        params, config.profile ? to_string(*config.profile) : "user");
  } catch (const std::exception& e) {
    throw PipelineError("simulate", e.what());
  }

  try {
    result.user_high = translate_log(result.user_low);
  } catch (const std::exception& e) {
    throw PipelineError("translate", e.what());
  }

  try {
    if (!config.optimal_path.empty()) {
      result.optimal_low = parse_low_level_log(read_file(config.optimal_path));
    } else {
      SimulationParams opt = preset(Profile::kOptimal);
      opt.trace_count = 1;
      opt.seed = config.seed;
      result.optimal_low = simulate_log(opt, "optimal");
    }
    if (result.optimal_low.traces.empty())
      throw std::runtime_error("optimal log holds no trace");
    result.optimal_high = translate_trace(result.optimal_low.traces.front());
  } catch (const PipelineError&) {
    throw;
  } catch (const std::exception& e) {
    throw PipelineError("optimal-log", e.what());
  }

  try {
    result.net = discover(result.user_high, config.discovery);
  } catch (const std::exception& e) {
    throw PipelineError("discover", e.what());
  }

  try {
    result.metrics.user_fitness = log_fitness(result.net, result.user_high);
    result.metrics.optimal_fitness =
        replay_trace(result.net, result.optimal_high).fitness;
    result.metrics.reactivity_ms = measure_reactivity(result.user_high);
    result.metrics.mouse_precision = measure_mouse_precision(result.user_low);
  } catch (const std::exception& e) {
    throw PipelineError("replay", e.what());
  }

  try {
    auto intra = intra_recommendations(result.user_high, result.optimal_high,
                                       result.metrics.reactivity_ms);
    auto inter = inter_recommendations(result.user_high, result.optimal_high);
    result.recommendations = rank(combine(std::move(intra), std::move(inter)));
  } catch (const std::exception& e) {
    throw PipelineError("recommend", e.what());
  }

  return result;
}

std::string render_metrics_text(const MetricsReport& metrics) {
  std::ostringstream out;
  out << "User's Fitness: " << format_fitness(metrics.user_fitness) << "\n"
      << "Optimal Fitness: " << format_fitness(metrics.optimal_fitness) << "\n"
      << "User's Reactivity [ms]: " << std::llround(metrics.reactivity_ms) << "\n"
      << "User's Mouse Precision: " << format_fitness(metrics.mouse_precision)
      << "\n";
  return out.str();
}

std::string render_metrics_json(const MetricsReport& metrics) {
  nlohmann::json j;
  j["user_fitness"] = metrics.user_fitness;
  j["optimal_fitness"] = metrics.optimal_fitness;
  j["reactivity_ms"] = metrics.reactivity_ms;
  j["mouse_precision"] = metrics.mouse_precision;
  return j.dump(2);
}

std::string render_recommendation_text(const Recommendation& rec) {
  std::ostringstream out;
  if (rec.kind == Recommendation::Kind::kIntra) {
    const auto& r = rec.intra;
    out << "Task: " << r.task << "\n"
        << "Occurrence Rate: " << format_rate(r.occurrence_rate) << "\n"
        << "Total Occurrence Per Trace: " << format_rate(r.total_occurrence_per_trace)
        << "\n"
        << "Average Time Saving: " << std::llround(r.avg_time_saving_ms) << "\n"
        << "User should not do: " << join_names(r.avoid) << "\n"
        << "User should do instead: " << join_names(r.do_instead) << "\n";
  } else {
    const auto& r = rec.inter;
    out << "Task: " << r.task << "\n"
        << "Occurrence Rate: " << format_rate(r.occurrence_rate) << "\n"
        << "Average Time Saving: " << std::llround(r.avg_time_saving_ms) << "\n"
        << "User should not repetitively do: " << r.task << "\n";
  }
  return out.str();
}

std::string render_recommendations_json(const std::vector<Recommendation>& recs) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& rec : recs) {
    nlohmann::json j;
    if (rec.kind == Recommendation::Kind::kIntra) {
      const auto& r = rec.intra;
      j["kind"] = "intra";
      j["task"] = r.task;
      j["occurrence_rate"] = r.occurrence_rate;
      j["total_occurrence_per_trace"] = r.total_occurrence_per_trace;
      j["avg_time_saving_ms"] = r.avg_time_saving_ms;
      j["avoid"] = r.avoid;
      j["do_instead"] = r.do_instead;
    } else {
      const auto& r = rec.inter;
      j["kind"] = "inter";
      j["task"] = r.task;
      j["sequence"] = r.sequence;
      j["occurrence_rate"] = r.occurrence_rate;
      j["avg_time_saving_ms"] = r.avg_time_saving_ms;
    }
    arr.push_back(std::move(j));
  }
  return arr.dump(2);
}

std::string render_report(const PipelineResult& result, const std::string& format) {
  if (format == "json") {
    nlohmann::json j;
    j["metrics"] = nlohmann::json::parse(render_metrics_json(result.metrics));
    j["recommendations"] =
        nlohmann::json::parse(render_recommendations_json(result.recommendations));
    return j.dump(2) + "\n";
  }
  std::ostringstream out;
  out << render_metrics_text(result.metrics);
  if (result.recommendations.empty()) {
    out << "\nNo recommendations.\n";
  } else {
    for (const auto& rec : result.recommendations) {
      out << "\n" << render_recommendation_text(rec);
    }
  }
  return out.str();
}

}  // namespace behavemine
