#include "behavemine/discovery.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <memory>

namespace behavemine {

namespace {

std::pair<std::string, std::string> canonical(const std::string& a,
                                              const std::string& b) {
  return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
}

}  // namespace

DFG build_dfg(const HighLevelLog& log) {
  if (log.traces.empty()) throw DiscoveryError("empty log");
  DFG dfg;
  dfg.trace_count = log.traces.size();
  dfg.nodes[kDfgStart] = static_cast<std::int64_t>(log.traces.size());
  dfg.nodes[kDfgEnd] = static_cast<std::int64_t>(log.traces.size());
  for (const auto& trace : log.traces) {
    std::string prev = kDfgStart;
    for (const auto& e : trace.events) {
      ++dfg.nodes[e.name];
      ++dfg.edges[{prev, e.name}];
      prev = e.name;
    }
    ++dfg.edges[{prev, kDfgEnd}];
    for (std::size_t i = 0; i + 2 < trace.events.size(); ++i) {
      const auto& a = trace.events[i].name;
      const auto& b = trace.events[i + 1].name;
      if (a == trace.events[i + 2].name && a != b)
        dfg.aba_witness.insert(canonical(a, b));
    }
  }
  return dfg;
}

LoopInfo detect_loops(const DFG& dfg) {
  LoopInfo info;
  for (const auto& [edge, freq] : dfg.edges) {
    (void)freq;
    if (edge.first == edge.second) info.self_loops.insert(edge.first);
  }
  for (const auto& pair : dfg.aba_witness) {
    if (dfg.has_edge(pair.first, pair.second) &&
        dfg.has_edge(pair.second, pair.first))
      info.short_loops.insert(pair);
  }
  return info;
}

std::set<std::pair<std::string, std::string>> detect_concurrency(
    const DFG& dfg, const LoopInfo& loops, double eta) {
  std::set<std::pair<std::string, std::string>> result;
  // Interleaving noise can balance a rare pair's two directions by chance;
  // a pair only qualifies when both orders carry real support.
  std::int64_t min_support = std::max<std::int64_t>(
      2, static_cast<std::int64_t>((dfg.trace_count + 1) / 2));
  for (const auto& [edge, fwd] : dfg.edges) {
    const auto& [a, b] = edge;
    if (a == b || a == kDfgStart || b == kDfgEnd || a == kDfgEnd ||
        b == kDfgStart)
      continue;
    if (a > b) continue;  // handle each unordered pair once
    std::int64_t rev = dfg.edge_freq(b, a);
    if (rev == 0) continue;
    if (fwd + rev < min_support) continue;
    if (loops.short_loops.count({a, b})) continue;
    double balance = static_cast<double>(std::llabs(fwd - rev)) /
                     static_cast<double>(fwd + rev);
    if (balance < eta) result.insert({a, b});
  }
  return result;
}

namespace {

// Ensures every node is reachable from <start> and co-reachable from <end>
// within `kept`, adding the most frequent helpful edges from `candidates`.
void repair_connectivity(
    std::set<std::pair<std::string, std::string>>& kept,
    const std::map<std::pair<std::string, std::string>, std::int64_t>& candidates,
    std::size_t node_count) {
  auto reachable_from = [&](const std::string& origin, bool forward) {
    std::set<std::string> seen{origin};
    std::vector<std::string> stack{origin};
    while (!stack.empty()) {
      std::string n = stack.back();
      stack.pop_back();
      for (const auto& edge : kept) {
        const std::string& from = forward ? edge.first : edge.second;
        const std::string& to = forward ? edge.second : edge.first;
        if (from == n && !seen.count(to)) {
          seen.insert(to);
          stack.push_back(to);
        }
      }
    }
    return seen;
  };

  for (bool forward : {true, false}) {
    const std::string& origin = forward ? kDfgStart : kDfgEnd;
    while (true) {
      auto seen = reachable_from(origin, forward);
      if (seen.size() == node_count) break;
      const std::pair<std::string, std::string>* best = nullptr;
      std::int64_t best_freq = -1;
      for (const auto& [edge, freq] : candidates) {
        const std::string& from = forward ? edge.first : edge.second;
        const std::string& to = forward ? edge.second : edge.first;
        if (!seen.count(from) || seen.count(to)) continue;
        if (freq > best_freq || (freq == best_freq && best && edge < *best)) {
          best = &edge;
          best_freq = freq;
        }
      }
      if (!best)
        throw DiscoveryError(
            "disconnected graph: a node cannot be placed on a start-end path");
      kept.insert(*best);
    }
  }
}

}  // namespace

DFG filter_dfg(const DFG& dfg, double epsilon_percentile) {
  if (dfg.nodes.empty()) throw DiscoveryError("empty directly-follows graph");

  // Most frequent incoming/outgoing edge per node; ties resolved towards the
  // lexicographically smaller partner for determinism.
  std::map<std::string, std::pair<std::int64_t, std::string>> best_in, best_out;
  for (const auto& [edge, freq] : dfg.edges) {
    const auto& [a, b] = edge;
    auto out_it = best_out.find(a);
    if (out_it == best_out.end() || freq > out_it->second.first ||
        (freq == out_it->second.first && b < out_it->second.second))
      best_out[a] = {freq, b};
    auto in_it = best_in.find(b);
    if (in_it == best_in.end() || freq > in_it->second.first ||
        (freq == in_it->second.first && a < in_it->second.second))
      best_in[b] = {freq, a};
  }

  std::set<std::pair<std::string, std::string>> kept;
  for (const auto& [node, entry] : best_out) kept.insert({node, entry.second});
  for (const auto& [node, entry] : best_in) kept.insert({entry.second, node});

  std::vector<std::int64_t> freqs;
  freqs.reserve(dfg.edges.size());
  for (const auto& [edge, freq] : dfg.edges) {
    (void)edge;
    freqs.push_back(freq);
  }
  std::sort(freqs.begin(), freqs.end());
  double eps = std::clamp(epsilon_percentile, 0.0, 1.0);
  std::size_t idx =
      static_cast<std::size_t>(eps * static_cast<double>(freqs.size()));
  if (idx >= freqs.size()) idx = freqs.size() - 1;
  std::int64_t threshold = freqs[idx];
  for (const auto& [edge, freq] : dfg.edges) {
    if (freq >= threshold) kept.insert(edge);
  }

  repair_connectivity(kept, dfg.edges, dfg.nodes.size());

  DFG out;
  out.nodes = dfg.nodes;
  out.trace_count = dfg.trace_count;
  out.aba_witness = dfg.aba_witness;
  for (const auto& edge : kept)
    out.edges[edge] = dfg.edge_freq(edge.first, edge.second);
  return out;
}

namespace {

// Builds one union-find style cluster id per node from the concurrency
// relation (transitive closure).
std::map<std::string, std::size_t> cluster_map(
    const std::vector<std::string>& names,
    const std::set<std::pair<std::string, std::string>>& concurrent) {
  std::map<std::string, std::size_t> parent;
  for (std::size_t i = 0; i < names.size(); ++i) parent[names[i]] = i;
  std::map<std::size_t, std::size_t> up;
  for (std::size_t i = 0; i < names.size(); ++i) up[i] = i;
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    while (up[x] != x) {
      up[x] = up[up[x]];
      x = up[x];
    }
    return x;
  };
  for (const auto& [a, b] : concurrent) {
    auto ia = parent.find(a), ib = parent.find(b);
    if (ia == parent.end() || ib == parent.end()) continue;
    up[find(ia->second)] = find(ib->second);
  }
  std::map<std::string, std::size_t> out;
  for (const auto& [name, idx] : parent) out[name] = find(idx);
  return out;
}

// Fraction of traces a directly-follows connection must appear in to be
// wired into the net. Kept-but-infrequent edges stay out (beyond what
// connectivity requires), so off-pattern behavior surfaces as visible model
// moves during replay instead of riding free connectors.
constexpr double kNetEdgeRate = 0.30;

// Converts a filtered DFG into a labeled Petri net.
//
// Every node gets an input and an output place with its visible transition
// between them; each frequent edge becomes an invisible connector from the
// source's output place to the target's input place. Groups of pairwise
// concurrent successors share one invisible fan (AND-split); symmetric for
// predecessor groups (AND-join).
class NetBuilder {
 public:
  NetBuilder(const DFG& dfg,
             const std::set<std::pair<std::string, std::string>>& concurrent,
             bool enable_and)
      : dfg_(dfg), concurrent_(concurrent), enable_and_(enable_and) {}

  bool build(PetriNet& net) {
    for (const auto& [name, freq] : dfg_.nodes) {
      (void)freq;
      names_.push_back(name);
    }
    std::sort(names_.begin(), names_.end());
    auto clusters = cluster_map(names_, concurrent_);

    std::map<std::string, std::size_t> in_place, out_place;
    for (const auto& name : names_) {
      if (name != kDfgStart) in_place[name] = net.add_place("in:" + name);
      if (name != kDfgEnd) out_place[name] = net.add_place("out:" + name);
    }
    for (const auto& name : names_) {
      if (name == kDfgStart || name == kDfgEnd) continue;
      std::size_t t = net.add_transition("t:" + name, name, false);
      net.add_arc_pt(in_place[name], t);
      net.add_arc_tp(t, out_place[name]);
    }

    // Project onto the frequent connections, then repair connectivity from
    // the full kept set so every activity stays on a start-end path.
    std::int64_t min_freq = std::max<std::int64_t>(
        1, static_cast<std::int64_t>(kNetEdgeRate *
                                     static_cast<double>(dfg_.trace_count)));
    std::set<std::pair<std::string, std::string>> wired;
    for (const auto& [edge, freq] : dfg_.edges) {
      if (freq >= min_freq) wired.insert(edge);
    }
    repair_connectivity(wired, dfg_.edges, names_.size());

    std::map<std::string, std::vector<std::string>> succs, preds;
    for (const auto& edge : wired) {
      succs[edge.first].push_back(edge.second);
      preds[edge.second].push_back(edge.first);
    }

    // AND fans and joins claim their member edges.
    std::set<std::pair<std::string, std::string>> claimed;
    std::size_t tau_counter = 0;
    auto next_tau = [&]() {
      return net.add_transition("tau:" + std::to_string(tau_counter++),
                                std::nullopt, true);
    };

    if (enable_and_) {
      for (const auto& name : names_) {
        auto it = succs.find(name);
        if (it == succs.end()) continue;
        std::map<std::size_t, std::vector<std::string>> groups;
        for (const auto& s : it->second) groups[clusters[s]].push_back(s);
        for (const auto& [cid, members] : groups) {
          (void)cid;
          if (members.size() < 2) continue;
          std::size_t tau = next_tau();
          net.add_arc_pt(out_place[name], tau);
          for (const auto& m : members) {
            net.add_arc_tp(tau, in_place[m]);
            claimed.insert({name, m});
          }
        }
      }
      for (const auto& name : names_) {
        auto it = preds.find(name);
        if (it == preds.end()) continue;
        std::map<std::size_t, std::vector<std::string>> groups;
        for (const auto& p : it->second) groups[clusters[p]].push_back(p);
        for (const auto& [cid, members] : groups) {
          (void)cid;
          if (members.size() < 2) continue;
          bool free = true;
          for (const auto& m : members)
            if (claimed.count({m, name})) free = false;
          if (!free) continue;  // realized by a split fan already
          std::size_t tau = next_tau();
          for (const auto& m : members) {
            net.add_arc_pt(out_place[m], tau);
            claimed.insert({m, name});
          }
          net.add_arc_tp(tau, in_place[name]);
        }
      }
    }

    for (const auto& edge : wired) {
      if (claimed.count(edge)) continue;
      std::size_t tau = next_tau();
      net.add_arc_pt(out_place[edge.first], tau);
      net.add_arc_tp(tau, in_place[edge.second]);
    }

    net.initial_marking()[out_place[kDfgStart]] = 1;
    net.final_marking()[in_place[kDfgEnd]] = 1;
    return true;
  }

 private:
  const DFG& dfg_;
  const std::set<std::pair<std::string, std::string>>& concurrent_;
  bool enable_and_;
  std::vector<std::string> names_;
};

}  // namespace

PetriNet discover(const HighLevelLog& log, const DiscoveryParams& params) {
  DFG dfg = build_dfg(log);
  LoopInfo loops = detect_loops(dfg);
  auto concurrent = detect_concurrency(dfg, loops, params.eta);

  if (!concurrent.empty()) {
    try {
      DFG reduced = dfg;
      for (const auto& [a, b] : concurrent) {
        reduced.edges.erase({a, b});
        reduced.edges.erase({b, a});
      }
      DFG filtered = filter_dfg(reduced, params.epsilon_percentile);
      PetriNet net;
      NetBuilder builder(filtered, concurrent, /*enable_and=*/true);
      if (builder.build(net) && is_sound(net, 200000).verdict == Soundness::kSound)
        return net;
    } catch (const DiscoveryError&) {
      // fall through to the xor-only construction
    }
  }

  DFG filtered = filter_dfg(dfg, params.epsilon_percentile);
  PetriNet net;
  const std::set<std::pair<std::string, std::string>> no_concurrency;
  NetBuilder builder(filtered, no_concurrency, /*enable_and=*/false);
  if (!builder.build(net)) throw DiscoveryError("net construction failed");
  auto verdict = is_sound(net, 200000);
  if (verdict.verdict != Soundness::kSound)
    throw DiscoveryError("discovered net is not sound: " + verdict.reason);
  return net;
}

}  // namespace behavemine
