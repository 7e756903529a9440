#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "behavemine/event_model.hpp"
#include "behavemine/petri_net.hpp"

namespace behavemine {

class DiscoveryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Synthetic source/sink node names of the directly-follows graph. Event
// names from the translator never collide with these.
inline const std::string kDfgStart = "<start>";
inline const std::string kDfgEnd = "<end>";

struct DFG {
  std::map<std::string, std::int64_t> nodes;  // name -> occurrence count
  std::map<std::pair<std::string, std::string>, std::int64_t> edges;
  // Unordered pairs (a,b) for which some trace contains a,b,a consecutively;
  // used to tell short loops apart from concurrency.
  std::set<std::pair<std::string, std::string>> aba_witness;
  std::size_t trace_count = 0;

  bool has_edge(const std::string& a, const std::string& b) const {
    return edges.count({a, b}) > 0;
  }
  std::int64_t edge_freq(const std::string& a, const std::string& b) const {
    auto it = edges.find({a, b});
    return it == edges.end() ? 0 : it->second;
  }
};

struct DiscoveryParams {
  double eta = 0.4;                 // parallelism threshold
  double epsilon_percentile = 0.55; // frequency percentile for edge filtering
};

struct LoopInfo {
  std::set<std::string> self_loops;
  std::set<std::pair<std::string, std::string>> short_loops;  // a < b
};

DFG build_dfg(const HighLevelLog& log);

LoopInfo detect_loops(const DFG& dfg);

// Unordered pairs considered concurrent: both direction edges exist, the
// pair is not a short loop, and |f(ab)-f(ba)| / (f(ab)+f(ba)) < eta.
std::set<std::pair<std::string, std::string>> detect_concurrency(
    const DFG& dfg, const LoopInfo& loops, double eta);

// Expects concurrency edges already removed. Keeps each node's most
// frequent incoming and outgoing edge, re-adds edges at or above the
// epsilon-percentile frequency, then repairs connectivity so every node
// lies on a <start> -> <end> path. Throws DiscoveryError when a node cannot
// be connected.
DFG filter_dfg(const DFG& dfg, double epsilon_percentile);

// Full five-step discovery. The returned net has one visible transition per
// event name, a single source/sink place pair as initial/final marking, and
// passes is_sound.
PetriNet discover(const HighLevelLog& log, const DiscoveryParams& params = {});

}  // namespace behavemine
