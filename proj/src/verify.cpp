#include "slhyper/verify.hpp"
#include "slhyper/checker.hpp"
#include "slhyper/error.hpp"
#include "slhyper/ilar.hpp"

#include <nlohmann/json.hpp>

#include <chrono>

namespace slhyper {

namespace {

CgsDocument prepare(const CgsDocument& doc) {
  if (already_il_ar(doc))
    return doc;
  return make_il_ar(doc.cgs, doc.fam);
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

} // namespace

VerifyReport verify_s2h(const CgsDocument& doc, const SliiPtr& phi, int window_k,
                        S2hMutation mutation) {
  CgsDocument g = prepare(doc);
  VerifyReport r;
  r.direction = "s2h";
  r.formula = print_slii(phi);
  r.instance_digest = input_digest(save_cgs_json(doc));
  r.window_k = window_k;
  r.input_size = slii_size(phi);

  // The hyper side quantifies over state-window strategies on the
  // action-recording structure, where a strategy can read its own last action
  // off the state. Action-tracking windows give the direct side the same
  // information, which it legitimately has (own actions are a function of the
  // observation history), so the two bounded classes line up.
  auto t0 = std::chrono::steady_clock::now();
  r.lhs = check_slii(g.cgs, g.fam, phi, window_k, true);
  r.lhs_seconds = seconds_since(t0);

  HyperPtr encoded = translate_slii(phi, g.cgs, g.fam, *g.cert, mutation);
  r.encoded_formula = print_hypersl(encoded);
  r.encoded_size = hyper_size(encoded);

  t0 = std::chrono::steady_clock::now();
  r.rhs = check_hypersl(g.cgs, encoded, window_k);
  r.rhs_seconds = seconds_since(t0);

  r.agree = r.lhs == r.rhs;
  return r;
}

VerifyReport verify_h2s(const CgsDocument& doc, const HyperPtr& phi, int window_k,
                        bool prune, H2sMutation mutation) {
  CgsDocument g = prepare(doc);
  VerifyReport r;
  r.direction = "h2s";
  r.formula = print_hypersl(phi);
  r.instance_digest = input_digest(save_cgs_json(doc));
  r.window_k = window_k;
  r.input_size = hyper_size(phi);

  auto t0 = std::chrono::steady_clock::now();
  r.lhs = check_hypersl(g.cgs, phi, window_k);
  r.lhs_seconds = seconds_since(t0);

  auto [comp, encoded] = translate_hypersl(phi, g.cgs, *g.cert, prune, mutation);
  r.encoded_formula = print_slii(encoded);
  r.encoded_size = slii_size(encoded);

  t0 = std::chrono::steady_clock::now();
  r.rhs = check_slii(comp.cgs, comp.fam, encoded, window_k);
  r.rhs_seconds = seconds_since(t0);

  r.agree = r.lhs == r.rhs;
  return r;
}

std::string verify_report_json(const VerifyReport& r) {
  nlohmann::ordered_json j;
  j["direction"] = r.direction;
  j["formula"] = r.formula;
  j["encoded_formula"] = r.encoded_formula;
  j["instance_digest"] = r.instance_digest;
  j["class"] = {{"window", r.window_k}};
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["agree"] = r.agree;
  j["timings"] = {{"lhs_seconds", r.lhs_seconds}, {"rhs_seconds", r.rhs_seconds}};
  j["sizes"] = {{"input", r.input_size}, {"encoded", r.encoded_size}};
  return j.dump(2) + "\n";
}

} // namespace slhyper
