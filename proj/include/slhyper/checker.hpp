#pragma once

#include "slhyper/cgs.hpp"
#include "slhyper/formula.hpp"
#include "slhyper/strategy.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace slhyper {

/// A lasso of atom valuations: positions 0..val.size()-1, wrapping from the
/// last position back to loop_start.
struct LassoTrace {
  int loop_start = 0;
  std::vector<std::vector<bool>> val; // [position][atom]
};

/// Exact evaluation of a (core-constructor) path formula on the infinite
/// word stem . loop^omega, by backward dynamic programming with wrap-around
/// and least-fixpoint iteration for U.
bool eval_ltl_lasso(const PathPtr& psi, const LassoTrace& trace,
                    const std::function<int(const std::string& ap,
                                            const std::string& path)>& atom_id);

/// Bounded brute-force SL_ii model checker: quantifiers range over the
/// window-k class of mode-o strategies. Deterministic enumeration order,
/// depth-first with short-circuiting. Quantified subformulas are memoized on
/// the strategies bound to their free variables and relevant agent bindings.
class SliiChecker {
public:
  /// With track_actions, quantified strategies read (block, own previous
  /// action) windows instead of plain block windows; see StrategyClass.
  SliiChecker(const Cgs& g, const ObservationFamily& fam, int window_k,
              bool track_actions = false);
  bool check(const SliiPtr& root);

private:
  struct NodeInfo {
    std::vector<std::string> free_vars; // sorted
    std::vector<int> rel_agents;        // sorted; agents a path formula below needs from outside
  };

  const Cgs& g_;
  const ObservationFamily& fam_;
  int window_k_;
  bool track_actions_;
  std::map<const SlIiFormula*, NodeInfo> info_;
  std::map<const SlIiFormula*, std::map<std::vector<std::uint64_t>, bool>> memo_;
  std::map<std::string, FiniteMemoryStrategy> delta_;
  std::vector<std::optional<FiniteMemoryStrategy>> theta_;

  const NodeInfo& info(const SliiPtr& a);
  bool eval(const SliiPtr& a);
  bool eval_path(const SliiPtr& a);
};

/// Bounded brute-force HyperSL model checker: quantifiers range over the
/// window-k class of full-information strategies.
class HyperChecker {
public:
  HyperChecker(const Cgs& g, int window_k);
  bool check(const HyperPtr& root);

private:
  struct NodeInfo {
    std::vector<std::string> free_vars; // sorted
  };

  const Cgs& g_;
  ObservationFamily no_obs_; // play_lasso needs a family; all strategies are full-info
  int window_k_;
  std::map<const HyperSlFormula*, NodeInfo> info_;
  std::map<const HyperSlFormula*, std::map<std::vector<std::uint64_t>, bool>> memo_;
  std::map<std::string, FiniteMemoryStrategy> delta_;

  const NodeInfo& info(const HyperPtr& a);
  bool eval(const HyperPtr& a);
  bool eval_body(const HyperPtr& a);
};

bool check_slii(const Cgs& g, const ObservationFamily& fam, const SliiPtr& phi, int window_k,
                bool track_actions = false);
bool check_hypersl(const Cgs& g, const HyperPtr& phi, int window_k);

} // namespace slhyper
