#include "slhyper/slii_to_hypersl.hpp"
#include "slhyper/error.hpp"
#include "slhyper/ilar.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace slhyper {

const std::string kMainPathVar = "pdot";
const std::string kIndPathVar1 = "pi1";
const std::string kIndPathVar2 = "pi2";

PathPtr build_ind(const Cgs& g, const ObservationFamily& fam, int obs,
                  const std::string& pi1, const std::string& pi2) {
  if (obs < 0 || obs >= fam.num_observations())
    throw Error("unknown observation");
  if (!is_injectively_labeled(g))
    throw Error("ind requires an injectively labeled structure");
  auto characterize = [&](int s, const std::string& pi) {
    std::vector<PathPtr> lits;
    for (int a = 0; a < g.num_aps(); ++a) {
      PathPtr atom = p_atom(g.aps[a], pi);
      lits.push_back(g.labels[s][a] ? atom : p_not(atom));
    }
    return p_and_all(lits);
  };
  std::vector<PathPtr> disjuncts;
  for (int s = 0; s < g.num_states(); ++s)
    for (int s2 = 0; s2 < g.num_states(); ++s2)
      if (fam.related(obs, s, s2))
        disjuncts.push_back(p_and(characterize(s, pi1), characterize(s2, pi2)));
  return p_or_all(disjuncts);
}

HyperPtr build_ii(const Cgs& g, const ObservationFamily& fam,
                  const IlArCertificate& cert, int obs, const std::string& x,
                  const std::vector<std::string>& avoid, int& fresh_counter) {
  if (obs < 0 || obs >= fam.num_observations())
    throw Error("unknown observation");
  int n = g.num_agents();
  std::set<std::string> taken(avoid.begin(), avoid.end());
  taken.insert(x);
  int c = fresh_counter++;
  std::vector<std::string> y(n), yp(n);
  for (int j = 0; j < n; ++j) {
    y[j] = "y_" + g.agents[j] + "_" + std::to_string(c);
    yp[j] = "yp_" + g.agents[j] + "_" + std::to_string(c);
    if (taken.count(y[j]) || taken.count(yp[j]))
      throw Error("strategy variable collides with generated name '" + y[j] + "'");
  }

  PathPtr not_ind = p_not(build_ind(g, fam, obs, kIndPathVar1, kIndPathVar2));
  std::vector<HyperPtr> conjuncts;
  for (int i = 0; i < n; ++i) {
    std::vector<PathPtr> iffs;
    for (int al = 0; al < g.num_actions(); ++al)
      iffs.push_back(p_iff(p_atom(cert.action_ap[i][al], kIndPathVar1),
                           p_atom(cert.action_ap[i][al], kIndPathVar2)));
    PathPtr psi = p_weak_until(p_next(p_and_all(iffs)), not_ind);
    HyperProfile p1{kIndPathVar1, {}}, p2{kIndPathVar2, {}};
    for (int j = 0; j < n; ++j) {
      p1.bind.emplace_back(g.agents[j], j == i ? x : y[j]);
      p2.bind.emplace_back(g.agents[j], j == i ? x : yp[j]);
    }
    conjuncts.push_back(h_body(psi, {p1, p2}));
  }
  HyperPtr body = h_and_all(conjuncts);
  for (int j = n - 1; j >= 0; --j)
    body = h_forall(yp[j], body);
  for (int j = n - 1; j >= 0; --j)
    body = h_forall(y[j], body);
  return body;
}

HyperPtr build_ii(const Cgs& g, const ObservationFamily& fam,
                  const IlArCertificate& cert, int obs, const std::string& x) {
  int c = 0;
  return build_ii(g, fam, cert, obs, x, {}, c);
}

namespace {

void collect_slii_vars(const SliiPtr& a, std::set<std::string>& out) {
  if (!a)
    return;
  if (!a->var.empty())
    out.insert(a->var);
  collect_slii_vars(a->lhs, out);
  collect_slii_vars(a->rhs, out);
  collect_slii_vars(a->sub, out);
}

PathPtr on_main_path(const PathPtr& psi) {
  switch (psi->op) {
  case PathOp::True:
    return psi;
  case PathOp::Atom:
    return p_atom(psi->ap, kMainPathVar);
  case PathOp::Not:
    return p_not(on_main_path(psi->lhs));
  case PathOp::And:
    return p_and(on_main_path(psi->lhs), on_main_path(psi->rhs));
  case PathOp::Next:
    return p_next(on_main_path(psi->lhs));
  case PathOp::Until:
    return p_until(on_main_path(psi->lhs), on_main_path(psi->rhs));
  }
  throw Error("unreachable");
}

} // namespace

HyperPtr translate_slii(const SliiPtr& phi, const Cgs& g,
                        const ObservationFamily& fam, const IlArCertificate& cert,
                        S2hMutation mutation) {
  if (!is_injectively_labeled(g) || !is_action_recording(g, cert))
    throw Error("translation requires an injectively labeled, action-recording structure");
  std::set<std::string> used;
  collect_slii_vars(phi, used);
  std::vector<std::string> avoid(used.begin(), used.end());
  int fresh = 0;

  std::function<HyperPtr(const SliiPtr&, std::vector<std::string>&)> rec =
      [&](const SliiPtr& a, std::vector<std::string>& prof) -> HyperPtr {
    switch (a->op) {
    case SliiOp::Path: {
      HyperProfile p{kMainPathVar, {}};
      for (int i = 0; i < g.num_agents(); ++i) {
        if (prof[i].empty())
          throw Error("agent '" + g.agents[i] + "' is unbound at a path formula");
        p.bind.emplace_back(g.agents[i], prof[i]);
      }
      return h_body(on_main_path(a->path), {p});
    }
    case SliiOp::And:
      return h_and(rec(a->lhs, prof), rec(a->rhs, prof));
    case SliiOp::Or:
      return h_or(rec(a->lhs, prof), rec(a->rhs, prof));
    case SliiOp::Bind: {
      int i = g.agent_index(a->agent);
      if (i < 0)
        throw Error("binding references unknown agent '" + a->agent + "'");
      std::string saved = prof[i];
      prof[i] = a->var;
      HyperPtr r = rec(a->sub, prof);
      prof[i] = saved;
      return r;
    }
    case SliiOp::Exists: {
      int o = fam.obs_index(a->obs);
      if (o < 0)
        throw Error("quantifier references unknown observation '" + a->obs + "'");
      HyperPtr inner = rec(a->sub, prof);
      if (mutation == S2hMutation::DropIiInExists)
        return h_exists(a->var, inner);
      HyperPtr ii = build_ii(g, fam, cert, o, a->var, avoid, fresh);
      return h_exists(a->var, h_and(ii, inner));
    }
    case SliiOp::Forall: {
      int o = fam.obs_index(a->obs);
      if (o < 0)
        throw Error("quantifier references unknown observation '" + a->obs + "'");
      HyperPtr ii = build_ii(g, fam, cert, o, a->var, avoid, fresh);
      return h_forall(a->var, h_or(negate_hypersl(ii), rec(a->sub, prof)));
    }
    }
    throw Error("unreachable");
  };

  std::vector<std::string> prof(g.num_agents());
  HyperPtr out = rec(phi, prof);
  check_hypersl_wf(out);
  return out;
}

S2hSizeReport size_report_s2h(const SliiPtr& phi, const Cgs& g,
                              const ObservationFamily& fam,
                              const IlArCertificate& cert) {
  S2hSizeReport r;
  r.input_size = slii_size(phi);
  r.output_size = hyper_size(translate_slii(phi, g, fam, cert));
  for (int o = 0; o < fam.num_observations(); ++o) {
    r.ind_size.emplace_back(
        fam.observations[o],
        path_size(build_ind(g, fam, o, kIndPathVar1, kIndPathVar2)));
    r.ii_size.emplace_back(fam.observations[o],
                           hyper_size(build_ii(g, fam, cert, o, "x")));
    std::size_t pairs = 0;
    for (const auto& block : fam.blocks[o])
      pairs += block.size() * block.size();
    r.max_related_pairs = std::max(r.max_related_pairs, pairs);
  }
  r.bound = r.input_size * static_cast<std::size_t>(g.num_agents()) *
            (static_cast<std::size_t>(g.num_actions()) +
             static_cast<std::size_t>(g.num_aps()) * r.max_related_pairs);
  return r;
}

std::string s2h_report_json(const S2hSizeReport& r) {
  nlohmann::ordered_json j;
  j["input_size"] = r.input_size;
  j["output_size"] = r.output_size;
  j["ind_size"] = nlohmann::ordered_json::object();
  for (const auto& [o, s] : r.ind_size)
    j["ind_size"][o] = s;
  j["ii_size"] = nlohmann::ordered_json::object();
  for (const auto& [o, s] : r.ii_size)
    j["ii_size"][o] = s;
  j["max_related_pairs"] = r.max_related_pairs;
  j["bound"] = r.bound;
  return j.dump(2) + "\n";
}

} // namespace slhyper
