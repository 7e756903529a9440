#pragma once

#include <optional>
#include <string>
#include <vector>

#include "behavemine/discovery.hpp"
#include "behavemine/event_model.hpp"
#include "behavemine/recommender.hpp"
#include "behavemine/replay.hpp"
#include "behavemine/simulator.hpp"

namespace behavemine {

struct PipelineConfig {
  std::optional<Profile> profile;
  std::optional<SimulationParams> explicit_params;
  int trace_count = 825;
  std::uint64_t seed = 1;
  DiscoveryParams discovery;
  std::string report_format = "text";  // "text" or "json"
  // When set, the optimal log is loaded from this low-level log file instead
  // of simulating the optimal preset.
  std::string optimal_path;

  SimulationParams resolve_params() const;
};

struct PipelineResult {
  LowLevelLog user_low;
  HighLevelLog user_high;
  LowLevelLog optimal_low;
  HighLevelTrace optimal_high;
  PetriNet net;
  MetricsReport metrics;
  std::vector<Recommendation> recommendations;
};

class PipelineError : public std::runtime_error {
 public:
  PipelineError(const std::string& stage, const std::string& cause)
      : std::runtime_error("stage " + stage + " failed: " + cause),
        stage_(stage) {}
  const std::string& stage() const { return stage_; }

 private:
  std::string stage_;
};

// Full flow: simulate (or load) -> translate -> discover -> replay both logs
// -> metrics -> ranked recommendations.
PipelineResult run_pipeline(const PipelineConfig& config);

std::string render_metrics_text(const MetricsReport& metrics);
std::string render_metrics_json(const MetricsReport& metrics);
std::string render_recommendation_text(const Recommendation& rec);
std::string render_recommendations_json(const std::vector<Recommendation>& recs);
std::string render_report(const PipelineResult& result, const std::string& format);

}  // namespace behavemine
