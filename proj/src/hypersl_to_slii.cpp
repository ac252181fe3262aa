#include "slhyper/hypersl_to_slii.hpp"
#include "slhyper/error.hpp"
#include "slhyper/ilar.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace slhyper {

int SelfComposition::tuple_index(const std::vector<int>& base_states) const {
  if (static_cast<int>(base_states.size()) != num_copies())
    throw Error("tuple arity mismatch");
  int base_count = static_cast<int>(fam.blocks.front().size());
  int idx = 0;
  for (int c = 0; c < num_copies(); ++c)
    idx = idx * base_count + base_states[c];
  return idx;
}

std::string SelfComposition::agent_name(int base_agent, int copy) const {
  std::size_t n = cgs.agents.size() / pathvars.size();
  return cgs.agents[copy * n + base_agent];
}

std::string SelfComposition::ap_name(int base_ap, int copy) const {
  std::size_t n = cgs.aps.size() / pathvars.size();
  return cgs.aps[copy * n + base_ap];
}

SelfComposition self_compose(const Cgs& g, const std::vector<std::string>& pathvars) {
  if (pathvars.empty())
    throw Error("self-composition needs at least one path variable");
  {
    std::set<std::string> dedup(pathvars.begin(), pathvars.end());
    if (dedup.size() != pathvars.size())
      throw Error("duplicate path variable in self-composition");
  }
  int m = static_cast<int>(pathvars.size());
  int n = g.num_agents();
  std::size_t count = 1;
  for (int c = 0; c < m; ++c) {
    count *= static_cast<std::size_t>(g.num_states());
    if (count > (1u << 20))
      throw Error("self-composition too large");
  }

  SelfComposition comp;
  comp.pathvars = pathvars;
  Cgs& out = comp.cgs;

  for (int c = 0; c < m; ++c) {
    for (const std::string& a : g.agents)
      out.agents.push_back(a + "@" + pathvars[c]);
    for (const std::string& a : g.aps)
      out.aps.push_back(a + "@" + pathvars[c]);
  }

  comp.state_tuple.resize(count, std::vector<int>(m));
  for (std::size_t idx = 0; idx < count; ++idx) {
    std::size_t rest = idx;
    for (int c = m - 1; c >= 0; --c) {
      comp.state_tuple[idx][c] = static_cast<int>(rest % g.num_states());
      rest /= g.num_states();
    }
    std::string name = "(";
    for (int c = 0; c < m; ++c)
      name += (c ? "," : "") + g.states[comp.state_tuple[idx][c]];
    name += ")";
    out.states.push_back(name);
  }
  {
    std::set<std::string> dedup;
    for (const auto& v : {out.states, out.agents, out.aps})
      for (const auto& id : v)
        if (!dedup.insert(id).second)
          throw Error("composite identifier collision: '" + id + "'");
  }
  out.actions = g.actions;

  std::vector<int> init(m, g.initial);
  out.initial = 0;
  for (int c = 0; c < m; ++c)
    out.initial = out.initial * g.num_states() + g.initial;

  int base_aps = g.num_aps();
  out.labels.assign(count, std::vector<bool>(out.aps.size(), false));
  std::size_t pc = out.profile_count();
  out.transition.resize(count * pc);
  for (std::size_t idx = 0; idx < count; ++idx) {
    for (int c = 0; c < m; ++c)
      for (int a = 0; a < base_aps; ++a)
        out.labels[idx][c * base_aps + a] = g.labels[comp.state_tuple[idx][c]][a];
    for (std::size_t p = 0; p < pc; ++p) {
      std::vector<int> acts = out.profile_decode(p);
      int next = 0;
      for (int c = 0; c < m; ++c) {
        std::vector<int> base_acts(acts.begin() + c * n, acts.begin() + (c + 1) * n);
        next = next * g.num_states() +
               g.step(comp.state_tuple[idx][c], g.profile_index(base_acts));
      }
      out.transition[idx * pc + p] = next;
    }
  }
  out.reindex();

  comp.fam.observations.clear();
  comp.fam.blocks.assign(m, {});
  for (int c = 0; c < m; ++c) {
    comp.fam.observations.push_back("o@" + pathvars[c]);
    comp.fam.blocks[c].assign(g.num_states(), {});
    for (std::size_t idx = 0; idx < count; ++idx)
      comp.fam.blocks[c][comp.state_tuple[idx][c]].push_back(static_cast<int>(idx));
  }
  comp.fam.rebuild(static_cast<int>(count));
  return comp;
}

SliiPtr build_eq(const SelfComposition& comp, const Cgs& base,
                 const IlArCertificate& cert, const std::string& x,
                 const std::string& pi, const std::string& pi2,
                 int& fresh_counter) {
  int m = comp.num_copies();
  int n = base.num_agents();
  auto copy_of = [&](const std::string& pv) {
    for (int c = 0; c < m; ++c)
      if (comp.pathvars[c] == pv)
        return c;
    throw Error("unknown path variable '" + pv + "'");
  };
  int cp = copy_of(pi), cp2 = copy_of(pi2);
  if (cert.action_ap.empty())
    throw Error("eq requires an action recording certificate");

  int ctr = fresh_counter++;
  std::vector<std::vector<std::string>> y(m, std::vector<std::string>(n));
  for (int c = 0; c < m; ++c)
    for (int j = 0; j < n; ++j)
      y[c][j] = "y_" + base.agents[j] + "_" + comp.pathvars[c] + "_" + std::to_string(ctr);

  // divergence condition: some base AP differs between the two copies
  std::vector<PathPtr> diffs;
  for (int a = 0; a < base.num_aps(); ++a)
    diffs.push_back(p_niff(p_atom(comp.ap_name(a, cp)), p_atom(comp.ap_name(a, cp2))));
  PathPtr diverged = p_or_all(diffs);

  std::vector<SliiPtr> pair_conjuncts;
  for (int i1 = 0; i1 < n; ++i1) {
    for (int i2 = 0; i2 < n; ++i2) {
      std::vector<PathPtr> iffs;
      for (int al = 0; al < base.num_actions(); ++al) {
        int a1 = base.ap_index(cert.action_ap[i1][al]);
        int a2 = base.ap_index(cert.action_ap[i2][al]);
        if (a1 < 0 || a2 < 0)
          throw Error("action recording certificate references unknown AP");
        iffs.push_back(p_iff(p_atom(comp.ap_name(a1, cp)), p_atom(comp.ap_name(a2, cp2))));
      }
      PathPtr psi = p_weak_until(p_next(p_and_all(iffs)), diverged);
      SliiPtr leaf = s_bind(comp.agent_name(i1, cp), x + "@" + pi,
                            s_bind(comp.agent_name(i2, cp2), x + "@" + pi2,
                                   s_path(psi)));
      pair_conjuncts.push_back(leaf);
    }
  }
  SliiPtr body = s_and_all(pair_conjuncts);
  for (int c = m - 1; c >= 0; --c)
    for (int j = n - 1; j >= 0; --j)
      body = s_bind(comp.agent_name(j, c), y[c][j], body);
  for (int c = m - 1; c >= 0; --c)
    for (int j = n - 1; j >= 0; --j)
      body = s_forall(y[c][j], comp.fam.observations[c], body);
  return body;
}

SliiPtr build_eq(const SelfComposition& comp, const Cgs& base,
                 const IlArCertificate& cert, const std::string& x,
                 const std::string& pi, const std::string& pi2) {
  int c = 0;
  return build_eq(comp, base, cert, x, pi, pi2, c);
}

namespace {

using UseSet = std::set<std::pair<std::string, int>>; // (variable, copy)

/// Emitted bindings of a body: the matching profile's variable per copy, or
/// the first profile's as fallback for copies the body does not mention.
std::vector<std::vector<std::string>> body_binding_vars(
    const HyperPtr& body, const Cgs& base, const std::vector<std::string>& pathvars) {
  int m = static_cast<int>(pathvars.size());
  int n = base.num_agents();
  std::vector<const HyperProfile*> chosen(m, nullptr);
  for (int c = 0; c < m; ++c) {
    for (const auto& p : body->profiles)
      if (p.pathvar == pathvars[c])
        chosen[c] = &p;
    if (!chosen[c])
      chosen[c] = &body->profiles.front();
  }
  std::vector<std::vector<std::string>> vars(m, std::vector<std::string>(n));
  for (int c = 0; c < m; ++c) {
    std::vector<bool> seen(n, false);
    for (const auto& [agent, var] : chosen[c]->bind) {
      int i = base.agent_index(agent);
      if (i < 0)
        throw Error("profile references unknown agent '" + agent + "'");
      vars[c][i] = var;
      seen[i] = true;
    }
    for (int i = 0; i < n; ++i)
      if (!seen[i])
        throw Error("agent '" + base.agents[i] + "' is unbound in a profile");
  }
  return vars;
}

UseSet uses_of(const HyperPtr& a, const Cgs& base,
               const std::vector<std::string>& pathvars) {
  switch (a->op) {
  case HyperOp::Body: {
    UseSet u;
    auto vars = body_binding_vars(a, base, pathvars);
    for (int c = 0; c < static_cast<int>(pathvars.size()); ++c)
      for (const auto& v : vars[c])
        u.insert({v, c});
    return u;
  }
  case HyperOp::And:
  case HyperOp::Or: {
    UseSet u = uses_of(a->lhs, base, pathvars);
    UseSet r = uses_of(a->rhs, base, pathvars);
    u.insert(r.begin(), r.end());
    return u;
  }
  case HyperOp::Forall:
  case HyperOp::Exists: {
    UseSet u = uses_of(a->sub, base, pathvars);
    for (auto it = u.begin(); it != u.end();)
      it = it->first == a->var ? u.erase(it) : std::next(it);
    return u;
  }
  }
  throw Error("unreachable");
}

} // namespace

std::pair<SelfComposition, SliiPtr>
translate_hypersl(const HyperPtr& phi, const Cgs& g, const IlArCertificate& cert,
                  bool prune, H2sMutation mutation, H2sStats* stats) {
  if (!is_injectively_labeled(g) || !is_action_recording(g, cert))
    throw Error("translation requires an injectively labeled, action-recording structure");
  check_hypersl_wf(phi);
  std::vector<std::string> pathvars = hyper_path_vars(phi);
  SelfComposition comp = self_compose(g, pathvars);
  int m = comp.num_copies();
  int fresh = 0;

  std::function<SliiPtr(const HyperPtr&)> rec = [&](const HyperPtr& a) -> SliiPtr {
    switch (a->op) {
    case HyperOp::And:
      return s_and(rec(a->lhs), rec(a->rhs));
    case HyperOp::Or:
      return s_or(rec(a->lhs), rec(a->rhs));
    case HyperOp::Forall:
    case HyperOp::Exists: {
      std::vector<int> copies;
      if (prune) {
        UseSet u = uses_of(a->sub, g, pathvars);
        for (int c = 0; c < m; ++c)
          if (u.count({a->var, c}))
            copies.push_back(c);
      } else {
        for (int c = 0; c < m; ++c)
          copies.push_back(c);
      }
      std::vector<SliiPtr> eqs;
      if (prune) {
        for (std::size_t i = 0; i < copies.size(); ++i)
          for (std::size_t j = i + 1; j < copies.size(); ++j)
            eqs.push_back(build_eq(comp, g, cert, a->var, pathvars[copies[i]],
                                   pathvars[copies[j]], fresh));
      } else {
        for (int c1 = 0; c1 < m; ++c1)
          for (int c2 = 0; c2 < m; ++c2)
            eqs.push_back(build_eq(comp, g, cert, a->var, pathvars[c1],
                                   pathvars[c2], fresh));
      }
      if (stats) {
        stats->eq_per_quantifier.push_back(eqs.size());
        stats->copies_per_quantifier.push_back(copies.size());
      }
      if (mutation == H2sMutation::DropEqConjunct && !eqs.empty())
        eqs.erase(eqs.begin());
      SliiPtr inner = rec(a->sub);
      SliiPtr body;
      if (eqs.empty())
        body = inner;
      else if (a->op == HyperOp::Exists)
        body = s_and(s_and_all(eqs), inner);
      else
        body = s_or(negate_slii(s_and_all(eqs)), inner);
      for (auto it = copies.rbegin(); it != copies.rend(); ++it) {
        std::string var = a->var + "@" + pathvars[*it];
        std::string obs = comp.fam.observations[*it];
        body = a->op == HyperOp::Exists ? s_exists(var, obs, body)
                                        : s_forall(var, obs, body);
      }
      return body;
    }
    case HyperOp::Body: {
      std::function<PathPtr(const PathPtr&)> tr = [&](const PathPtr& psi) -> PathPtr {
        switch (psi->op) {
        case PathOp::True:
          return psi;
        case PathOp::Atom: {
          int ap = g.ap_index(psi->ap);
          if (ap < 0)
            throw Error("atom references unknown AP '" + psi->ap + "'");
          int c = -1;
          for (int k = 0; k < m; ++k)
            if (pathvars[k] == psi->path)
              c = k;
          if (c < 0)
            throw Error("atom references unknown path variable '" + psi->path + "'");
          if (mutation == H2sMutation::WrongAtomPathVar && m >= 2)
            c = (c + 1) % m;
          return p_atom(comp.ap_name(ap, c));
        }
        case PathOp::Not:
          return p_not(tr(psi->lhs));
        case PathOp::And:
          return p_and(tr(psi->lhs), tr(psi->rhs));
        case PathOp::Next:
          return p_next(tr(psi->lhs));
        case PathOp::Until:
          return p_until(tr(psi->lhs), tr(psi->rhs));
        }
        throw Error("unreachable");
      };
      SliiPtr out = s_path(tr(a->path));
      auto vars = body_binding_vars(a, g, pathvars);
      if (stats)
        stats->bindings_per_body.push_back(static_cast<std::size_t>(m) *
                                           static_cast<std::size_t>(g.num_agents()));
      for (int c = m - 1; c >= 0; --c)
        for (int i = g.num_agents() - 1; i >= 0; --i)
          out = s_bind(comp.agent_name(i, c), vars[c][i] + "@" + pathvars[c], out);
      return out;
    }
    }
    throw Error("unreachable");
  };

  SliiPtr out = rec(phi);
  check_slii_wf(out);
  return {std::move(comp), std::move(out)};
}

H2sSizeReport size_report_h2s(const HyperPtr& phi, const Cgs& g,
                              const IlArCertificate& cert) {
  H2sSizeReport r;
  r.input_size = hyper_size(phi);
  auto [comp, out] = translate_hypersl(phi, g, cert, false);
  r.output_size = slii_size(out);
  std::size_t m = comp.pathvars.size();
  std::size_t n = static_cast<std::size_t>(g.num_agents());
  r.eq_size = slii_size(
      build_eq(comp, g, cert, "x", comp.pathvars.front(), comp.pathvars.back()));
  r.eq_per_quantifier = m * m;
  r.bindings_per_body = m * n;
  r.bound = r.input_size * m * m * m * n * n *
            (static_cast<std::size_t>(g.num_actions()) +
             static_cast<std::size_t>(g.num_aps()));
  return r;
}

std::string h2s_report_json(const H2sSizeReport& r) {
  nlohmann::ordered_json j;
  j["input_size"] = r.input_size;
  j["output_size"] = r.output_size;
  j["eq_size"] = r.eq_size;
  j["eq_per_quantifier"] = r.eq_per_quantifier;
  j["bindings_per_body"] = r.bindings_per_body;
  j["bound"] = r.bound;
  return j.dump(2) + "\n";
}

} // namespace slhyper
