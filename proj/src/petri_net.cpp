#include "behavemine/petri_net.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>

#include <json.hpp>

namespace behavemine {

std::size_t PetriNet::add_place(const std::string& id) {
  place_ids_.push_back(id);
  m0_.push_back(0);
  mz_.push_back(0);
  return place_ids_.size() - 1;
}

std::size_t PetriNet::add_transition(const std::string& id,
                                     std::optional<std::string> label,
                                     bool invisible) {
  transitions_.push_back({id, std::move(label), invisible});
  inputs_.emplace_back();
  outputs_.emplace_back();
  return transitions_.size() - 1;
}

void PetriNet::add_arc_pt(std::size_t place, std::size_t transition) {
  auto& in = inputs_[transition];
  if (std::find(in.begin(), in.end(), place) == in.end()) in.push_back(place);
}

void PetriNet::add_arc_tp(std::size_t transition, std::size_t place) {
  auto& out = outputs_[transition];
  if (std::find(out.begin(), out.end(), place) == out.end()) out.push_back(place);
}

std::optional<std::size_t> PetriNet::find_place(const std::string& id) const {
  for (std::size_t i = 0; i < place_ids_.size(); ++i)
    if (place_ids_[i] == id) return i;
  return std::nullopt;
}

std::optional<std::size_t> PetriNet::find_transition(const std::string& id) const {
  for (std::size_t i = 0; i < transitions_.size(); ++i)
    if (transitions_[i].id == id) return i;
  return std::nullopt;
}

std::optional<std::size_t> PetriNet::transition_by_label(
    const std::string& label) const {
  for (std::size_t i = 0; i < transitions_.size(); ++i)
    if (!transitions_[i].invisible && transitions_[i].label == label) return i;
  return std::nullopt;
}

void PetriNet::check_structure() const {
  if (m0_.size() != place_ids_.size() || mz_.size() != place_ids_.size())
    throw PetriNetError("marking dimension does not match place count");
  auto total = [](const Marking& m) {
    return std::accumulate(m.begin(), m.end(), std::int64_t{0});
  };
  if (total(m0_) <= 0) throw PetriNetError("initial marking carries no token");
  if (total(mz_) <= 0) throw PetriNetError("final marking carries no token");
}

bool enabled(const PetriNet& pn, const Marking& m, std::size_t t) {
  if (t >= pn.transition_count()) throw PetriNetError("unknown transition index");
  const auto& in = pn.inputs(t);
  if (in.empty()) return false;
  for (std::size_t p : in)
    if (m[p] < 1) return false;
  return true;
}

Marking fire(const PetriNet& pn, const Marking& m, std::size_t t) {
  if (!enabled(pn, m, t))
    throw PetriNetError("transition '" + pn.transition(t).id + "' is not enabled");
  Marking next = m;
  for (std::size_t p : pn.inputs(t)) --next[p];
  for (std::size_t p : pn.outputs(t)) ++next[p];
  return next;
}

namespace {

bool covers_strictly(const Marking& m, const Marking& mz) {
  bool extra = false;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] < mz[i]) return false;
    if (m[i] > mz[i]) extra = true;
  }
  return extra;
}

}  // namespace

SoundnessVerdict is_sound(const PetriNet& pn, std::size_t state_bound) {
  SoundnessVerdict v;
  pn.check_structure();

  std::map<Marking, std::size_t> seen;
  std::vector<Marking> states;
  std::vector<std::vector<std::size_t>> succ;  // reachability graph edges
  std::deque<std::size_t> frontier;
  std::vector<bool> fired(pn.transition_count(), false);

  auto intern = [&](const Marking& m) -> std::optional<std::size_t> {
    auto it = seen.find(m);
    if (it != seen.end()) return it->second;
    if (states.size() >= state_bound) return std::nullopt;
    std::size_t idx = states.size();
    seen.emplace(m, idx);
    states.push_back(m);
    succ.emplace_back();
    frontier.push_back(idx);
    return idx;
  };

  intern(pn.initial_marking());
  bool bounded = true;
  while (!frontier.empty()) {
    std::size_t idx = frontier.front();
    frontier.pop_front();
    Marking current = states[idx];
    for (std::size_t t = 0; t < pn.transition_count(); ++t) {
      if (!enabled(pn, current, t)) continue;
      fired[t] = true;
      auto next = fire(pn, current, t);
      if (covers_strictly(next, pn.final_marking())) {
        v.verdict = Soundness::kUnsound;
        v.reason = "marking with surplus tokens covers the final marking";
        v.explored = states.size();
        return v;
      }
      auto ni = intern(next);
      if (!ni) {
        bounded = false;
        continue;
      }
      succ[idx].push_back(*ni);
    }
  }
  v.explored = states.size();
  if (!bounded) {
    v.verdict = Soundness::kInconclusive;
    v.reason = "state bound reached";
    return v;
  }

  for (std::size_t t = 0; t < pn.transition_count(); ++t) {
    if (!fired[t]) {
      v.verdict = Soundness::kUnsound;
      v.reason = "dead transition '" + pn.transition(t).id + "'";
      return v;
    }
  }

  auto final_it = seen.find(pn.final_marking());
  if (final_it == seen.end()) {
    v.verdict = Soundness::kUnsound;
    v.reason = "final marking unreachable";
    return v;
  }

  // Backward reachability from the final marking.
  std::vector<std::vector<std::size_t>> pred(states.size());
  for (std::size_t i = 0; i < states.size(); ++i)
    for (std::size_t j : succ[i]) pred[j].push_back(i);
  std::vector<bool> can_finish(states.size(), false);
  std::deque<std::size_t> queue{final_it->second};
  can_finish[final_it->second] = true;
  while (!queue.empty()) {
    std::size_t i = queue.front();
    queue.pop_front();
    for (std::size_t j : pred[i]) {
      if (!can_finish[j]) {
        can_finish[j] = true;
        queue.push_back(j);
      }
    }
  }
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (!can_finish[i]) {
      v.verdict = Soundness::kUnsound;
      v.reason = "final marking not reachable from some reachable marking";
      return v;
    }
  }

  v.verdict = Soundness::kSound;
  return v;
}

std::string PetriNet::to_json() const {
  nlohmann::json j;
  j["places"] = place_ids_;
  j["transitions"] = nlohmann::json::array();
  for (const auto& t : transitions_) {
    nlohmann::json jt;
    jt["id"] = t.id;
    if (t.label) jt["label"] = *t.label;
    jt["invisible"] = t.invisible;
    j["transitions"].push_back(jt);
  }
  j["arcs"] = nlohmann::json::array();
  for (std::size_t t = 0; t < transitions_.size(); ++t) {
    for (std::size_t p : inputs_[t])
      j["arcs"].push_back({{"from", place_ids_[p]}, {"to", transitions_[t].id}});
    for (std::size_t p : outputs_[t])
      j["arcs"].push_back({{"from", transitions_[t].id}, {"to", place_ids_[p]}});
  }
  auto marking_json = [&](const Marking& m) {
    nlohmann::json jm = nlohmann::json::object();
    for (std::size_t p = 0; p < m.size(); ++p)
      if (m[p] > 0) jm[place_ids_[p]] = m[p];
    return jm;
  };
  j["m0"] = marking_json(m0_);
  j["mz"] = marking_json(mz_);
  return j.dump(2);
}

PetriNet PetriNet::from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  PetriNet pn;
  for (const auto& p : j.at("places")) pn.add_place(p.get<std::string>());
  for (const auto& jt : j.at("transitions")) {
    std::optional<std::string> label;
    if (jt.contains("label")) label = jt.at("label").get<std::string>();
    pn.add_transition(jt.at("id").get<std::string>(), label,
                      jt.value("invisible", false));
  }
  for (const auto& ja : j.at("arcs")) {
    auto from = ja.at("from").get<std::string>();
    auto to = ja.at("to").get<std::string>();
    if (auto p = pn.find_place(from)) {
      auto t = pn.find_transition(to);
      if (!t) throw PetriNetError("arc target '" + to + "' is not a transition");
      pn.add_arc_pt(*p, *t);
    } else if (auto t = pn.find_transition(from)) {
      auto p2 = pn.find_place(to);
      if (!p2) throw PetriNetError("arc target '" + to + "' is not a place");
      pn.add_arc_tp(*t, *p2);
    } else {
      throw PetriNetError("arc source '" + from + "' is unknown");
    }
  }
  auto load_marking = [&](const char* key, Marking& m) {
    for (auto it = j.at(key).begin(); it != j.at(key).end(); ++it) {
      auto p = pn.find_place(it.key());
      if (!p) throw PetriNetError("marking references unknown place");
      m[*p] = it.value().get<std::int32_t>();
    }
  };
  load_marking("m0", pn.m0_);
  load_marking("mz", pn.mz_);
  return pn;
}

std::string PetriNet::to_dot() const {
  std::ostringstream out;
  out << "digraph pn {\n  rankdir=LR;\n";
  for (std::size_t p = 0; p < place_ids_.size(); ++p) {
    out << "  \"" << place_ids_[p] << "\" [shape=circle,label=\"";
    if (m0_[p] > 0) out << "&bull;";
    out << "\"];\n";
  }
  for (const auto& t : transitions_) {
    if (t.invisible) {
      out << "  \"" << t.id
          << "\" [shape=box,style=filled,fillcolor=black,label=\"\",height=0.2];\n";
    } else {
      out << "  \"" << t.id << "\" [shape=box,label=\""
          << (t.label ? *t.label : t.id) << "\"];\n";
    }
  }
  for (std::size_t t = 0; t < transitions_.size(); ++t) {
    for (std::size_t p : inputs_[t])
      out << "  \"" << place_ids_[p] << "\" -> \"" << transitions_[t].id << "\";\n";
    for (std::size_t p : outputs_[t])
      out << "  \"" << transitions_[t].id << "\" -> \"" << place_ids_[p] << "\";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace behavemine
