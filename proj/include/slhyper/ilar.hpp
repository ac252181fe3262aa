#pragma once

#include "slhyper/cgs.hpp"

namespace slhyper {

/// True iff no two states share a label set.
bool is_injectively_labeled(const Cgs& g);

/// True iff every transition target carries exactly the action APs named by
/// the certificate for the profile that was played. States without incoming
/// transitions (in particular an unreachable initial state) are unconstrained.
/// Returns false when the certificate names no AP for some (agent, action).
bool is_action_recording(const Cgs& g, const IlArCertificate& cert);

/// True iff the document carries a certificate and both checks pass.
bool already_il_ar(const CgsDocument& doc);

/// Product construction: states are (base state, last action profile) shells,
/// pruned to the reachable set; the initial shell records the first declared
/// action for every agent. Adds APs act_<agent>_<action> (action recording)
/// and id_<state> (one per produced state, forcing injective labels); the
/// lifted observation family ignores the recorded profile and the fresh APs.
/// Throws Error when a fresh AP name collides with a user AP.
CgsDocument make_il_ar(const Cgs& g, const ObservationFamily& fam);

} // namespace slhyper
