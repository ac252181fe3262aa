#pragma once

#include "slhyper/cgs.hpp"
#include "slhyper/formula.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace slhyper {

/// Deliberate encoder defects for harness-sensitivity runs.
enum class S2hMutation {
  None,
  DropIiInExists, // emit exists x. body instead of exists x. ii_o(x) & body
};

/// Path variable every translated body runs on (outside the ii_o gadgets).
extern const std::string kMainPathVar;
/// Path variables internal to ind / ii_o.
extern const std::string kIndPathVar1;
extern const std::string kIndPathVar2;

/// Propositional characterization of "the pi1-state and the pi2-state are
/// ~_o-related": disjunction over all ordered related pairs (s, s') of the two
/// full label descriptions. Exact on injectively labeled structures only;
/// throws Error otherwise.
PathPtr build_ind(const Cgs& g, const ObservationFamily& fam, int obs,
                  const std::string& pi1, const std::string& pi2);

/// The o-strategy constraint on strategy variable x: quantifies 2n fresh
/// opponent variables, then for every agent i runs two copies that differ only
/// in the opponents and asserts (X action-agreement of i) W (not ind_o).
/// `fresh_counter` suffixes the generated y names; generated names must not
/// collide with `avoid` (throws Error).
HyperPtr build_ii(const Cgs& g, const ObservationFamily& fam,
                  const IlArCertificate& cert, int obs, const std::string& x,
                  const std::vector<std::string>& avoid, int& fresh_counter);
HyperPtr build_ii(const Cgs& g, const ObservationFamily& fam,
                  const IlArCertificate& cert, int obs, const std::string& x);

/// Full translation: quantifiers gain an ii_o guard (conjoined under exists,
/// disjoined negated under forall), bindings accumulate a partial profile, and
/// each path formula becomes a single body on kMainPathVar under the profile
/// accumulated so far. Throws Error when a path formula is reached with some
/// agent unbound, or on unknown observation/agent names.
HyperPtr translate_slii(const SliiPtr& phi, const Cgs& g,
                        const ObservationFamily& fam, const IlArCertificate& cert,
                        S2hMutation mutation = S2hMutation::None);

struct S2hSizeReport {
  std::size_t input_size = 0;
  std::size_t output_size = 0;
  std::vector<std::pair<std::string, std::size_t>> ind_size; // per observation
  std::vector<std::pair<std::string, std::size_t>> ii_size;  // per observation
  std::size_t max_related_pairs = 0; // max_o |~_o| as ordered pairs
  std::size_t bound = 0;             // |phi| * n * (|A| + |AP| * max_o |~_o|)
};

S2hSizeReport size_report_s2h(const SliiPtr& phi, const Cgs& g,
                              const ObservationFamily& fam,
                              const IlArCertificate& cert);
std::string s2h_report_json(const S2hSizeReport& r);

} // namespace slhyper
