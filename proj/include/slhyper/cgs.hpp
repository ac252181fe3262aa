#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace slhyper {

/// Finite concurrent game structure. All identifier lists are duplicate-free
/// and iteration order is the declared order. The transition table is total:
/// transition[s * profile_count() + p] is defined for every action profile p.
struct Cgs {
  std::vector<std::string> states;
  std::vector<std::string> agents;
  std::vector<std::string> actions;
  std::vector<std::string> aps;
  int initial = 0;
  std::vector<int> transition;            // [state][profile-index] -> state
  std::vector<std::vector<bool>> labels;  // [state][ap] membership

  int num_states() const { return static_cast<int>(states.size()); }
  int num_agents() const { return static_cast<int>(agents.size()); }
  int num_actions() const { return static_cast<int>(actions.size()); }
  int num_aps() const { return static_cast<int>(aps.size()); }

  /// |actions|^|agents|
  std::size_t profile_count() const;

  /// Mixed-radix profile index; agent 0 is the most significant digit.
  std::size_t profile_index(const std::vector<int>& action_per_agent) const;
  std::vector<int> profile_decode(std::size_t idx) const;

  int step(int state, std::size_t profile_idx) const {
    return transition[state * profile_count() + profile_idx];
  }

  std::vector<int> label_set(int s) const; // sorted ap indices

  int state_index(const std::string& id) const;
  int agent_index(const std::string& id) const;
  int action_index(const std::string& id) const;
  int ap_index(const std::string& id) const;

  /// Rebuilds the name -> index maps; call after mutating the id lists.
  void reindex();

private:
  std::unordered_map<std::string, int> state_idx_, agent_idx_, action_idx_, ap_idx_;
};

/// Per-observation-symbol partition of the state set. Storing partitions
/// (rather than relation pairs) makes each ~_o an equivalence relation by
/// construction.
struct ObservationFamily {
  std::vector<std::string> observations;
  std::vector<std::vector<std::vector<int>>> blocks; // [obs][block] -> states
  std::vector<std::vector<int>> block_of;            // [obs][state] -> block

  int num_observations() const { return static_cast<int>(observations.size()); }
  int obs_index(const std::string& id) const;
  bool related(int obs, int s1, int s2) const { return block_of[obs][s1] == block_of[obs][s2]; }

  /// Recomputes block_of from blocks; throws Error if some observation is not
  /// a partition of 0..num_states-1.
  void rebuild(int num_states);
};

/// Records which APs encode (agent, action) pairs and which encode
/// injectivity tags, plus the outcome of the IL/AR checks.
struct IlArCertificate {
  bool is_il = false;
  bool is_ar = false;
  std::vector<std::vector<std::string>> action_ap; // [agent][action] -> ap name
  std::vector<std::string> injectivity_aps;
};

/// A CGS together with its observation family (and, when produced by the
/// IL/AR transform, a certificate). This is the unit of file I/O.
struct CgsDocument {
  Cgs cgs;
  ObservationFamily fam;
  std::optional<IlArCertificate> cert;
};

/// Parses and validates the JSON CGS format. Throws Error on missing
/// transition entries (non-total), unknown or duplicate identifiers, labels
/// outside the declared AP set, or malformed observation partitions.
CgsDocument load_cgs_json(const std::string& text);

/// Deterministic serialization: identical documents yield identical bytes.
std::string save_cgs_json(const CgsDocument& doc);

/// Re-checks all structural invariants of an in-memory document.
void validate_cgs(const CgsDocument& doc);

/// FNV-1a digest of an input, used for provenance in reports.
std::string input_digest(const std::string& bytes);

} // namespace slhyper
