#include "behavemine/recommender.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "behavemine/translator.hpp"

namespace behavemine {

namespace {

using NameSeq = std::vector<std::string>;

NameSeq controllable_names(const IntraTask& task) {
  NameSeq names;
  names.reserve(task.controllables.size());
  for (const auto& c : task.controllables) names.push_back(c.name);
  return names;
}

// Most frequent sequence; ties towards the lexicographically smaller one.
const NameSeq* modal_sequence(const std::map<NameSeq, std::int64_t>& counts) {
  const NameSeq* best = nullptr;
  std::int64_t best_count = 0;
  for (const auto& [seq, count] : counts) {
    if (count > best_count) {  // map iteration is lex order, first wins ties
      best = &seq;
      best_count = count;
    }
  }
  return best;
}

}  // namespace

std::vector<IntraRecommendation> intra_recommendations(
    const HighLevelLog& user_log, const HighLevelTrace& optimal_trace,
    double reactivity_ms, double min_rate) {
  std::vector<IntraRecommendation> result;
  if (user_log.traces.empty() || reactivity_ms <= 0.0) return result;

  // Optimal modal sequence per terminator.
  std::map<std::string, std::map<NameSeq, std::int64_t>> optimal_counts;
  for (const auto& task : segment_intra_tasks(optimal_trace)) {
    if (task.synthetic_terminator) continue;
    ++optimal_counts[task.terminator.name][controllable_names(task)];
  }

  // User sequences per terminator.
  std::map<std::string, std::map<NameSeq, std::int64_t>> user_counts;
  // Per terminator+sequence: traces containing it and total occurrences.
  std::map<std::string, std::map<NameSeq, std::pair<std::int64_t, std::int64_t>>>
      user_presence;  // (containing traces, total count)
  for (const auto& trace : user_log.traces) {
    std::map<std::string, std::map<NameSeq, std::int64_t>> in_trace;
    for (const auto& task : segment_intra_tasks(trace)) {
      if (task.synthetic_terminator) continue;
      auto names = controllable_names(task);
      ++user_counts[task.terminator.name][names];
      ++in_trace[task.terminator.name][names];
    }
    for (const auto& [terminator, seqs] : in_trace) {
      for (const auto& [seq, count] : seqs) {
        auto& [traces, total] = user_presence[terminator][seq];
        ++traces;
        total += count;
      }
    }
  }

  double total_traces = static_cast<double>(user_log.traces.size());
  for (const auto& [terminator, counts] : user_counts) {
    auto opt_it = optimal_counts.find(terminator);
    if (opt_it == optimal_counts.end()) continue;
    const NameSeq* user_modal = modal_sequence(counts);
    const NameSeq* opt_modal = modal_sequence(opt_it->second);
    if (!user_modal || !opt_modal || *user_modal == *opt_modal) continue;
    auto saving_steps = static_cast<double>(user_modal->size()) -
                        static_cast<double>(opt_modal->size());
    if (saving_steps <= 0.0) continue;

    const auto& [containing, total] = user_presence[terminator][*user_modal];
    double rate = static_cast<double>(containing) / total_traces;
    if (rate < min_rate) continue;

    IntraRecommendation rec;
    rec.task = terminator;
    rec.occurrence_rate = rate;
    rec.total_occurrence_per_trace =
        containing == 0 ? 0.0
                        : static_cast<double>(total) / static_cast<double>(containing);
    rec.avg_time_saving_ms = saving_steps * reactivity_ms;
    rec.avoid = *user_modal;
    rec.do_instead = *opt_modal;
    result.push_back(std::move(rec));
  }
  return result;
}

std::vector<InterRecommendation> inter_recommendations(
    const HighLevelLog& user_log, const HighLevelTrace& optimal_trace,
    double min_rate) {
  std::vector<InterRecommendation> result;
  if (user_log.traces.empty()) return result;

  std::map<std::string, std::int64_t> optimal_count;
  std::set<std::string> optimal_adjacent;
  {
    auto names = inter_sequence(optimal_trace);
    for (std::size_t i = 0; i < names.size(); ++i) {
      ++optimal_count[names[i]];
      if (i > 0 && names[i] == names[i - 1]) optimal_adjacent.insert(names[i]);
    }
  }

  struct GroupStats {
    std::int64_t containing_traces = 0;
    double duration_sum_ms = 0.0;  // summed over traces, then averaged
  };
  std::map<NameSeq, GroupStats> groups;

  for (const auto& trace : user_log.traces) {
    auto tasks = segment_intra_tasks(trace);
    std::vector<const IntraTask*> real;
    for (const auto& t : tasks)
      if (!t.synthetic_terminator) real.push_back(&t);

    std::map<std::string, std::int64_t> seen;
    std::vector<bool> redundant(real.size(), false);
    for (std::size_t i = 0; i < real.size(); ++i) {
      const std::string& name = real[i]->terminator.name;
      std::int64_t allowed = 0;
      if (auto it = optimal_count.find(name); it != optimal_count.end())
        allowed = it->second;
      bool excess = seen[name] >= allowed;
      bool adjacent_dup = i > 0 && real[i - 1]->terminator.name == name &&
                          !optimal_adjacent.count(name);
      redundant[i] = excess || adjacent_dup;
      ++seen[name];
    }

    // Group consecutive redundant tasks; aggregate once per trace and group.
    std::map<NameSeq, double> trace_groups;
    std::size_t i = 0;
    while (i < real.size()) {
      if (!redundant[i]) {
        ++i;
        continue;
      }
      std::size_t j = i;
      NameSeq names;
      double duration = 0.0;
      while (j < real.size() && redundant[j]) {
        names.push_back(real[j]->terminator.name);
        duration += static_cast<double>(real[j]->duration_ms);
        ++j;
      }
      trace_groups[names] += duration;
      i = j;
    }
    for (const auto& [names, duration] : trace_groups) {
      auto& g = groups[names];
      ++g.containing_traces;
      g.duration_sum_ms += duration;
    }
  }

  double total_traces = static_cast<double>(user_log.traces.size());
  for (const auto& [names, stats] : groups) {
    double rate = static_cast<double>(stats.containing_traces) / total_traces;
    if (rate < min_rate) continue;
    double saving =
        stats.duration_sum_ms / static_cast<double>(stats.containing_traces);
    if (saving <= 0.0) continue;
    InterRecommendation rec;
    rec.task = names.back();
    rec.sequence = names;
    rec.occurrence_rate = rate;
    rec.avg_time_saving_ms = saving;
    result.push_back(std::move(rec));
  }
  return result;
}

std::vector<Recommendation> combine(std::vector<IntraRecommendation> intra,
                                    std::vector<InterRecommendation> inter) {
  std::vector<Recommendation> all;
  all.reserve(intra.size() + inter.size());
  for (auto& r : intra) {
    Recommendation rec;
    rec.kind = Recommendation::Kind::kIntra;
    rec.intra = std::move(r);
    all.push_back(std::move(rec));
  }
  for (auto& r : inter) {
    Recommendation rec;
    rec.kind = Recommendation::Kind::kInter;
    rec.inter = std::move(r);
    all.push_back(std::move(rec));
  }
  return all;
}

std::vector<Recommendation> rank(std::vector<Recommendation> recommendations) {
  std::stable_sort(recommendations.begin(), recommendations.end(),
                   [](const Recommendation& a, const Recommendation& b) {
                     if (a.saving() != b.saving()) return a.saving() > b.saving();
                     if (a.rate() != b.rate()) return a.rate() > b.rate();
                     return a.task() < b.task();
                   });
  return recommendations;
}

}  // namespace behavemine
