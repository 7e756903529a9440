#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace behavemine {

// Marking: token count per place, indexed by place position in the net.
// Discovered nets are safe (0/1 tokens) but the semantics allow any
// non-negative count.
using Marking = std::vector<std::int32_t>;

struct TransitionDef {
  std::string id;
  std::optional<std::string> label;  // nullopt for invisible transitions
  bool invisible = false;
};

class PetriNetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class PetriNet {
 public:
  std::size_t add_place(const std::string& id);
  std::size_t add_transition(const std::string& id, std::optional<std::string> label,
                             bool invisible);
  void add_arc_pt(std::size_t place, std::size_t transition);
  void add_arc_tp(std::size_t transition, std::size_t place);

  std::size_t place_count() const { return place_ids_.size(); }
  std::size_t transition_count() const { return transitions_.size(); }

  const std::string& place_id(std::size_t p) const { return place_ids_[p]; }
  const TransitionDef& transition(std::size_t t) const { return transitions_[t]; }
  const std::vector<std::size_t>& inputs(std::size_t t) const { return inputs_[t]; }
  const std::vector<std::size_t>& outputs(std::size_t t) const { return outputs_[t]; }

  std::optional<std::size_t> find_place(const std::string& id) const;
  std::optional<std::size_t> find_transition(const std::string& id) const;
  // Index of the unique visible transition carrying `label`, if any.
  std::optional<std::size_t> transition_by_label(const std::string& label) const;

  Marking& initial_marking() { return m0_; }
  Marking& final_marking() { return mz_; }
  const Marking& initial_marking() const { return m0_; }
  const Marking& final_marking() const { return mz_; }

  // Structural sanity: bipartite arcs by construction; checks that both
  // markings carry at least one token and have the right dimension.
  void check_structure() const;

  std::string to_json() const;
  static PetriNet from_json(const std::string& text);
  std::string to_dot() const;

 private:
  std::vector<std::string> place_ids_;
  std::vector<TransitionDef> transitions_;
  std::vector<std::vector<std::size_t>> inputs_;   // per transition: place indices
  std::vector<std::vector<std::size_t>> outputs_;  // per transition: place indices
  Marking m0_, mz_;
};

// A transition is enabled when it has at least one input place and every
// input place holds a token.
bool enabled(const PetriNet& pn, const Marking& m, std::size_t t);

// Fires t, returning the successor marking. Throws PetriNetError when t is
// not enabled. `m` itself is untouched.
Marking fire(const PetriNet& pn, const Marking& m, std::size_t t);

enum class Soundness { kSound, kUnsound, kInconclusive };

struct SoundnessVerdict {
  Soundness verdict = Soundness::kInconclusive;
  std::string reason;
  std::size_t explored = 0;
};

// Bounded exploration of the reachability graph. Sound iff the final
// marking is reachable from every reachable marking, no reachable marking
// strictly covers the final one, and no transition is dead.
SoundnessVerdict is_sound(const PetriNet& pn, std::size_t state_bound = 100000);

}  // namespace behavemine
