#pragma once

#include <string>
#include <vector>

#include "behavemine/event_model.hpp"

namespace behavemine {

struct IntraRecommendation {
  std::string task;  // terminator uncontrollable event name
  double occurrence_rate = 0.0;          // traces containing the avoid sequence
  double total_occurrence_per_trace = 0.0;
  double avg_time_saving_ms = 0.0;
  std::vector<std::string> avoid;        // controllable event names
  std::vector<std::string> do_instead;
};

struct InterRecommendation {
  std::string task;  // last name of the redundant group
  std::vector<std::string> sequence;  // full redundant group
  double occurrence_rate = 0.0;
  double avg_time_saving_ms = 0.0;
};

struct Recommendation {
  enum class Kind { kIntra, kInter } kind = Kind::kIntra;
  IntraRecommendation intra;
  InterRecommendation inter;

  double saving() const {
    return kind == Kind::kIntra ? intra.avg_time_saving_ms
                                : inter.avg_time_saving_ms;
  }
  double rate() const {
    return kind == Kind::kIntra ? intra.occurrence_rate : inter.occurrence_rate;
  }
  const std::string& task() const {
    return kind == Kind::kIntra ? intra.task : inter.task;
  }
};

// Recommendations with an occurrence rate below this are treated as random
// noise rather than a habit worth training away.
inline constexpr double kMinOccurrenceRate = 0.10;

// Per-terminator comparison of the user's modal controllable sequence
// against the optimal trace's; emitted only when switching saves time
// ((|avoid| - |do_instead|) * reactivity > 0).
std::vector<IntraRecommendation> intra_recommendations(
    const HighLevelLog& user_log, const HighLevelTrace& optimal_trace,
    double reactivity_ms, double min_rate = kMinOccurrenceRate);

// Uncontrollable events occurring more often than in the optimal trace (or
// as adjacent duplicates); consecutive redundant intra tasks group into one
// recommendation whose saving is their mean total duration.
std::vector<InterRecommendation> inter_recommendations(
    const HighLevelLog& user_log, const HighLevelTrace& optimal_trace,
    double min_rate = kMinOccurrenceRate);

// Stable descending order by average time saving; ties by occurrence rate,
// then task name.
std::vector<Recommendation> rank(std::vector<Recommendation> recommendations);

std::vector<Recommendation> combine(std::vector<IntraRecommendation> intra,
                                    std::vector<InterRecommendation> inter);

}  // namespace behavemine
