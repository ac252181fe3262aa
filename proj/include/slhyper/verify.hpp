#pragma once

#include "slhyper/cgs.hpp"
#include "slhyper/formula.hpp"
#include "slhyper/hypersl_to_slii.hpp"
#include "slhyper/slii_to_hypersl.hpp"

#include <string>

namespace slhyper {

struct VerifyReport {
  std::string direction; // "s2h" or "h2s"
  std::string formula;
  std::string encoded_formula;
  std::string instance_digest;
  int window_k = 1;
  bool lhs = false;
  bool rhs = false;
  bool agree = false;
  double lhs_seconds = 0;
  double rhs_seconds = 0;
  std::size_t input_size = 0;
  std::size_t encoded_size = 0;
};

/// Checks the original SL_ii formula and its HyperSL encoding on the same
/// structure (transformed with make_il_ar first unless the document already
/// carries a valid IL+AR certificate) under matched window-k classes.
VerifyReport verify_s2h(const CgsDocument& doc, const SliiPtr& phi, int window_k,
                             S2hMutation mutation = S2hMutation::None);

/// Checks the HyperSL formula on the (IL+AR-prepared) structure against its
/// SL_ii encoding on the self-composition.
VerifyReport verify_h2s(const CgsDocument& doc, const HyperPtr& phi, int window_k,
                             bool prune, H2sMutation mutation = H2sMutation::None);

std::string verify_report_json(const VerifyReport& r);

} // namespace slhyper
