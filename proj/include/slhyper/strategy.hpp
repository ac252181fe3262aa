#pragma once

#include "slhyper/cgs.hpp"

#include <cstdint>
#include <vector>

namespace slhyper {

/// A window-k strategy class: total tables from windows (sequences of length
/// 1..k over a symbol alphabet) to actions. The alphabet is the state set for
/// full-information strategies, or the block set of one observation for
/// mode-o strategies. The class is the finite surrogate for Strats(G) /
/// Strats(G, o).
struct StrategyClass {
  int num_symbols = 0;
  int num_actions = 0;
  int window = 1;   // k
  int mode = -1;    // -1: full information, otherwise observation index
  // Mode-o only: window symbols are (block, own previous action) pairs,
  // encoded as block * (num_actions + 1) + 1 + action, with 0 standing for
  // "no previous action". An agent's own actions are a function of its full
  // observation history, so this stays inside the o-strategy space while
  // letting bounded windows keep information the truncation would lose.
  bool track_actions = false;

  /// Number of windows of length 1..k.
  std::uint64_t window_count() const;
  /// Number of strategies, num_actions^window_count. Throws Error when the
  /// class does not fit in 62 bits (the checker is desk-scale by design).
  std::uint64_t size() const;
  /// Table slot of a window (most recent symbol last).
  std::uint64_t window_pos(const std::vector<int>& window_syms) const;

  bool operator==(const StrategyClass&) const = default;
};

/// A single strategy from a class, identified by its table index. The table
/// maps window slot w to digit w of `index` in base num_actions.
struct FiniteMemoryStrategy {
  StrategyClass cls;
  std::uint64_t index = 0;

  int action_at(std::uint64_t window_slot) const;
  int action_for_window(const std::vector<int>& window_syms) const;
  /// Explicit table, one action per window slot.
  std::vector<int> table() const;
};

StrategyClass full_info_class(const Cgs& g, int window_k);
StrategyClass observation_class(const Cgs& g, const ObservationFamily& fam, int obs,
                                int window_k, bool track_actions = false);

/// Ultimately periodic play stem . loop^omega; the loop is non-empty.
struct Lasso {
  std::vector<int> stem;
  std::vector<int> loop;

  int state_at(std::size_t t) const {
    return t < stem.size() ? stem[t] : loop[(t - stem.size()) % loop.size()];
  }
  std::size_t length() const { return stem.size() + loop.size(); }
};

/// Unique play from `start` under one strategy per agent (declared order).
/// Full-information strategies read the last min(len, k) states, mode-o
/// strategies the last min(len, k) observation blocks. The lasso closes at
/// the first repetition of (state, all agents' windows).
Lasso play_lasso(const Cgs& g, const ObservationFamily& fam, int start,
                 const std::vector<FiniteMemoryStrategy>& profile);

/// p ~_o p' : equal length and pointwise same block.
bool indistinguishable_prefixes(const ObservationFamily& fam, int obs,
                                const std::vector<int>& p, const std::vector<int>& p2);

/// Checks the o-strategy condition for a full-information strategy: every
/// pair of pointwise ~_o-related windows gets the same action.
bool is_o_strategy(const Cgs& g, const ObservationFamily& fam, int obs,
                   const FiniteMemoryStrategy& f);

/// Lifts a mode-o strategy to an extensionally equal full-information table.
FiniteMemoryStrategy lift_to_full_info(const Cgs& g, const ObservationFamily& fam,
                                       const FiniteMemoryStrategy& f);

} // namespace slhyper
