#pragma once

#include "slhyper/cgs.hpp"
#include "slhyper/formula.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace slhyper {

/// Deliberate encoder defects for harness-sensitivity runs.
enum class H2sMutation {
  None,
  DropEqConjunct,   // drop the first eq constraint of every quantifier that has one
  WrongAtomPathVar, // rotate the path variable of every body atom (needs |V| >= 2)
};

/// Product of one copy of the base structure per path variable. Composite
/// state (s1,..,sm) steps componentwise; agent <i>@<pi> controls agent i of
/// the pi-copy; AP a@<pi> reads a in the pi-copy; observation o@<pi> relates
/// tuples agreeing on the pi component.
struct SelfComposition {
  Cgs cgs;
  ObservationFamily fam;
  std::vector<std::string> pathvars;
  std::vector<std::vector<int>> state_tuple; // composite state -> base state per pathvar

  int num_copies() const { return static_cast<int>(pathvars.size()); }
  /// Composite index of a tuple (one base state per pathvar, first pathvar
  /// most significant).
  int tuple_index(const std::vector<int>& base_states) const;
  std::string agent_name(int base_agent, int copy) const;
  std::string ap_name(int base_ap, int copy) const;
};

/// Builds the full |S|^|V| product (no pruning: the o_pi blocks must cover
/// every tuple). Throws Error on empty/duplicate path variables or composite
/// name collisions.
SelfComposition self_compose(const Cgs& g, const std::vector<std::string>& pathvars);

/// The one-strategy-across-copies constraint eq(x@pi, x@pi2): universally
/// quantifies one opponent per (agent, copy) pair, binds them, and for every
/// base agent pair (i1, i2) re-binds i1 in the pi-copy to x@pi and i2 in the
/// pi2-copy to x@pi2, asserting action agreement until the two copies' labels
/// diverge. `base` must be the action-recording base the composition was built
/// from. `fresh_counter` suffixes the generated y names.
SliiPtr build_eq(const SelfComposition& comp, const Cgs& base,
                 const IlArCertificate& cert, const std::string& x,
                 const std::string& pi, const std::string& pi2,
                 int& fresh_counter);
SliiPtr build_eq(const SelfComposition& comp, const Cgs& base,
                 const IlArCertificate& cert, const std::string& x,
                 const std::string& pi, const std::string& pi2);

/// Per-construct emission counts of one translation run.
struct H2sStats {
  std::vector<std::size_t> eq_per_quantifier;
  std::vector<std::size_t> copies_per_quantifier;
  std::vector<std::size_t> bindings_per_body;
};

/// Full translation over V = path variables of phi (first-use order). Each
/// quantifier becomes one quantifier per copy (mode o@pi) plus eq constraints;
/// each body binds every composite agent and translates a@pi to the composite
/// AP. A body profile that does not cover some pi falls back to the first
/// listed profile's variables for that copy. With prune=true only copies
/// actually used to build a path are quantified, and eq is restricted to
/// unordered pairs of kept copies.
std::pair<SelfComposition, SliiPtr>
translate_hypersl(const HyperPtr& phi, const Cgs& g, const IlArCertificate& cert,
                  bool prune, H2sMutation mutation = H2sMutation::None,
                  H2sStats* stats = nullptr);

struct H2sSizeReport {
  std::size_t input_size = 0;
  std::size_t output_size = 0;
  std::size_t eq_size = 0;                  // one eq instance
  std::size_t eq_per_quantifier = 0;        // |V|^2 unpruned
  std::size_t bindings_per_body = 0;        // |V| * n
  std::size_t bound = 0;                    // |phi| * |V|^3 * n^2 * (|A| + |AP|)
};

H2sSizeReport size_report_h2s(const HyperPtr& phi, const Cgs& g,
                              const IlArCertificate& cert);
std::string h2s_report_json(const H2sSizeReport& r);

} // namespace slhyper
