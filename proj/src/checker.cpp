#include "slhyper/checker.hpp"
#include "slhyper/error.hpp"

#include <algorithm>
#include <numeric>

namespace slhyper {

// ---------------------------------------------------------------------------
// LTL on lassos
// ---------------------------------------------------------------------------

namespace {

using Sat = std::vector<char>;

Sat eval_rec(const PathPtr& psi, const LassoTrace& tr,
             const std::function<int(const std::string&, const std::string&)>& atom_id) {
  const int n = static_cast<int>(tr.val.size());
  auto wrap_next = [&](int i) { return i + 1 < n ? i + 1 : tr.loop_start; };
  switch (psi->op) {
  case PathOp::True:
    return Sat(n, 1);
  case PathOp::Atom: {
    int a = atom_id(psi->ap, psi->path);
    Sat out(n);
    for (int i = 0; i < n; ++i)
      out[i] = tr.val[i][a];
    return out;
  }
  case PathOp::Not: {
    Sat s = eval_rec(psi->lhs, tr, atom_id);
    for (auto& v : s)
      v = !v;
    return s;
  }
  case PathOp::And: {
    Sat l = eval_rec(psi->lhs, tr, atom_id);
    Sat r = eval_rec(psi->rhs, tr, atom_id);
    for (int i = 0; i < n; ++i)
      l[i] = l[i] && r[i];
    return l;
  }
  case PathOp::Next: {
    Sat s = eval_rec(psi->lhs, tr, atom_id);
    Sat out(n);
    for (int i = 0; i < n; ++i)
      out[i] = s[wrap_next(i)];
    return out;
  }
  case PathOp::Until: {
    Sat a = eval_rec(psi->lhs, tr, atom_id);
    Sat b = eval_rec(psi->rhs, tr, atom_id);
    // least fixpoint of sat[i] = b[i] | (a[i] & sat[next(i)])
    Sat sat(n, 0);
    bool changed = true;
    while (changed) {
      changed = false;
      for (int i = n - 1; i >= 0; --i) {
        char v = b[i] || (a[i] && sat[wrap_next(i)]);
        if (v != sat[i]) {
          sat[i] = v;
          changed = true;
        }
      }
    }
    return sat;
  }
  }
  throw Error("eval_ltl_lasso: non-core constructor");
}

} // namespace

bool eval_ltl_lasso(const PathPtr& psi, const LassoTrace& trace,
                    const std::function<int(const std::string&, const std::string&)>& atom_id) {
  if (trace.val.empty() || trace.loop_start < 0 ||
      trace.loop_start >= static_cast<int>(trace.val.size()))
    throw Error("eval_ltl_lasso: empty or misaligned lasso");
  return eval_rec(psi, trace, atom_id)[0] != 0;
}

// ---------------------------------------------------------------------------
// Shared helpers
// ---------------------------------------------------------------------------

namespace {

void encode_strategy(const FiniteMemoryStrategy& f, std::vector<std::uint64_t>& key) {
  key.push_back(static_cast<std::uint64_t>(f.cls.mode + 1));
  key.push_back(f.index);
}

template <typename T>
std::vector<T> sorted_union(std::vector<T> a, const std::vector<T>& b) {
  for (const T& x : b)
    if (std::find(a.begin(), a.end(), x) == a.end())
      a.push_back(x);
  std::sort(a.begin(), a.end());
  return a;
}

template <typename T>
std::vector<T> without(std::vector<T> a, const T& x) {
  a.erase(std::remove(a.begin(), a.end(), x), a.end());
  return a;
}

} // namespace

// ---------------------------------------------------------------------------
// SliiChecker
// ---------------------------------------------------------------------------

SliiChecker::SliiChecker(const Cgs& g, const ObservationFamily& fam, int window_k,
                         bool track_actions)
    : g_(g), fam_(fam), window_k_(window_k), track_actions_(track_actions) {
  if (window_k < 1)
    throw Error("checker window must be at least 1");
  theta_.assign(g.num_agents(), std::nullopt);
}

const SliiChecker::NodeInfo& SliiChecker::info(const SliiPtr& a) {
  auto it = info_.find(a.get());
  if (it != info_.end())
    return it->second;
  NodeInfo ni;
  switch (a->op) {
  case SliiOp::Path: {
    ni.rel_agents.resize(g_.num_agents());
    std::iota(ni.rel_agents.begin(), ni.rel_agents.end(), 0);
    break;
  }
  case SliiOp::And:
  case SliiOp::Or: {
    const NodeInfo& l = info(a->lhs);
    const NodeInfo& r = info(a->rhs);
    ni.free_vars = sorted_union(l.free_vars, r.free_vars);
    ni.rel_agents = sorted_union(l.rel_agents, r.rel_agents);
    break;
  }
  case SliiOp::Forall:
  case SliiOp::Exists: {
    const NodeInfo& s = info(a->sub);
    ni.free_vars = without(s.free_vars, a->var);
    ni.rel_agents = s.rel_agents;
    break;
  }
  case SliiOp::Bind: {
    const NodeInfo& s = info(a->sub);
    int ai = g_.agent_index(a->agent);
    if (ai < 0)
      throw Error("unknown agent '" + a->agent + "' in binding");
    if (std::find(s.rel_agents.begin(), s.rel_agents.end(), ai) != s.rel_agents.end()) {
      ni.free_vars = sorted_union(s.free_vars, {a->var});
      ni.rel_agents = without(s.rel_agents, ai);
    } else {
      ni = s; // binding an irrelevant agent
    }
    break;
  }
  }
  return info_.emplace(a.get(), std::move(ni)).first->second;
}

bool SliiChecker::eval_path(const SliiPtr& a) {
  std::vector<FiniteMemoryStrategy> profile;
  profile.reserve(g_.num_agents());
  for (int i = 0; i < g_.num_agents(); ++i) {
    if (!theta_[i])
      throw Error("agent '" + g_.agents[i] + "' is unbound at a path formula");
    profile.push_back(*theta_[i]);
  }
  Lasso lasso = play_lasso(g_, fam_, g_.initial, profile);
  LassoTrace tr;
  tr.loop_start = static_cast<int>(lasso.stem.size());
  tr.val.reserve(lasso.length());
  for (std::size_t t = 0; t < lasso.length(); ++t)
    tr.val.push_back(g_.labels[lasso.state_at(t)]);
  return eval_ltl_lasso(a->path, tr, [&](const std::string& ap, const std::string& path) {
    if (!path.empty())
      throw Error("hyper atom in SL_ii path formula");
    int id = g_.ap_index(ap);
    if (id < 0)
      throw Error("unknown atomic proposition '" + ap + "'");
    return id;
  });
}

bool SliiChecker::eval(const SliiPtr& a) {
  switch (a->op) {
  case SliiOp::Path:
    return eval_path(a);
  case SliiOp::And:
    return eval(a->lhs) && eval(a->rhs);
  case SliiOp::Or:
    return eval(a->lhs) || eval(a->rhs);
  case SliiOp::Bind: {
    auto it = delta_.find(a->var);
    if (it == delta_.end())
      throw Error("unbound strategy variable '" + a->var + "'");
    int ai = g_.agent_index(a->agent);
    if (ai < 0)
      throw Error("unknown agent '" + a->agent + "' in binding");
    auto saved = theta_[ai];
    theta_[ai] = it->second;
    bool r = eval(a->sub);
    theta_[ai] = saved;
    return r;
  }
  case SliiOp::Forall:
  case SliiOp::Exists: {
    const NodeInfo& ni = info(a);
    std::vector<std::uint64_t> key;
    for (const auto& v : ni.free_vars) {
      auto it = delta_.find(v);
      if (it == delta_.end())
        throw Error("unbound strategy variable '" + v + "'");
      encode_strategy(it->second, key);
    }
    for (int ai : ni.rel_agents) {
      if (theta_[ai]) {
        key.push_back(static_cast<std::uint64_t>(ai) + 1);
        encode_strategy(*theta_[ai], key);
      }
    }
    auto& cache = memo_[a.get()];
    if (auto it = cache.find(key); it != cache.end())
      return it->second;

    int obs = fam_.obs_index(a->obs);
    if (obs < 0)
      throw Error("unknown observation '" + a->obs + "'");
    StrategyClass cls = observation_class(g_, fam_, obs, window_k_, track_actions_);
    std::uint64_t count = cls.size();
    bool universal = a->op == SliiOp::Forall;
    auto saved = delta_.find(a->var) != delta_.end()
                     ? std::optional<FiniteMemoryStrategy>(delta_[a->var])
                     : std::nullopt;
    bool result = universal;
    for (std::uint64_t i = 0; i < count; ++i) {
      delta_[a->var] = FiniteMemoryStrategy{cls, i};
      bool r = eval(a->sub);
      if (r != universal) {
        result = r;
        break;
      }
    }
    if (saved)
      delta_[a->var] = *saved;
    else
      delta_.erase(a->var);
    cache.emplace(std::move(key), result);
    return result;
  }
  }
  throw Error("unreachable");
}

bool SliiChecker::check(const SliiPtr& root) {
  check_slii_wf(root);
  return eval(root);
}

// ---------------------------------------------------------------------------
// HyperChecker
// ---------------------------------------------------------------------------

HyperChecker::HyperChecker(const Cgs& g, int window_k) : g_(g), window_k_(window_k) {
  if (window_k < 1)
    throw Error("checker window must be at least 1");
}

const HyperChecker::NodeInfo& HyperChecker::info(const HyperPtr& a) {
  auto it = info_.find(a.get());
  if (it != info_.end())
    return it->second;
  NodeInfo ni;
  switch (a->op) {
  case HyperOp::Forall:
  case HyperOp::Exists:
    ni.free_vars = without(info(a->sub).free_vars, a->var);
    break;
  case HyperOp::And:
  case HyperOp::Or:
    ni.free_vars = sorted_union(info(a->lhs).free_vars, info(a->rhs).free_vars);
    break;
  case HyperOp::Body:
    for (const auto& pr : a->profiles)
      for (const auto& [agent, var] : pr.bind)
        ni.free_vars = sorted_union(ni.free_vars, {var});
    break;
  }
  return info_.emplace(a.get(), std::move(ni)).first->second;
}

bool HyperChecker::eval_body(const HyperPtr& a) {
  const int m = static_cast<int>(a->profiles.size());
  std::vector<Lasso> lassos(m);
  for (int k = 0; k < m; ++k) {
    std::vector<std::optional<FiniteMemoryStrategy>> per_agent(g_.num_agents());
    for (const auto& [agent, var] : a->profiles[k].bind) {
      int ai = g_.agent_index(agent);
      if (ai < 0)
        throw Error("unknown agent '" + agent + "' in profile for '" + a->profiles[k].pathvar + "'");
      auto it = delta_.find(var);
      if (it == delta_.end())
        throw Error("free strategy variable '" + var + "' in profile");
      per_agent[ai] = it->second;
    }
    std::vector<FiniteMemoryStrategy> profile;
    for (int i = 0; i < g_.num_agents(); ++i) {
      if (!per_agent[i])
        throw Error("profile for path '" + a->profiles[k].pathvar + "' does not bind agent '" +
                    g_.agents[i] + "'");
      profile.push_back(*per_agent[i]);
    }
    lassos[k] = play_lasso(g_, no_obs_, g_.initial, profile);
  }

  // align to common stem length and lcm of loop lengths
  std::size_t stem = 0, loop = 1;
  for (const auto& l : lassos) {
    stem = std::max(stem, l.stem.size());
    loop = std::lcm(loop, l.loop.size());
  }
  LassoTrace tr;
  tr.loop_start = static_cast<int>(stem);
  const int num_aps = g_.num_aps();
  for (std::size_t t = 0; t < stem + loop; ++t) {
    std::vector<bool> row(static_cast<std::size_t>(m) * num_aps, false);
    for (int k = 0; k < m; ++k) {
      const auto& lab = g_.labels[lassos[k].state_at(t)];
      for (int ap = 0; ap < num_aps; ++ap)
        row[static_cast<std::size_t>(k) * num_aps + ap] = lab[ap];
    }
    tr.val.push_back(std::move(row));
  }
  return eval_ltl_lasso(a->path, tr, [&](const std::string& ap, const std::string& path) {
    int id = g_.ap_index(ap);
    if (id < 0)
      throw Error("unknown atomic proposition '" + ap + "'");
    for (int k = 0; k < m; ++k)
      if (a->profiles[k].pathvar == path)
        return k * num_aps + id;
    throw Error("atom references path variable '" + path + "' not bound by the body");
  });
}

bool HyperChecker::eval(const HyperPtr& a) {
  switch (a->op) {
  case HyperOp::And:
    return eval(a->lhs) && eval(a->rhs);
  case HyperOp::Or:
    return eval(a->lhs) || eval(a->rhs);
  case HyperOp::Body:
    return eval_body(a);
  case HyperOp::Forall:
  case HyperOp::Exists: {
    const NodeInfo& ni = info(a);
    std::vector<std::uint64_t> key;
    for (const auto& v : ni.free_vars) {
      auto it = delta_.find(v);
      if (it == delta_.end())
        throw Error("unbound strategy variable '" + v + "'");
      encode_strategy(it->second, key);
    }
    auto& cache = memo_[a.get()];
    if (auto it = cache.find(key); it != cache.end())
      return it->second;

    StrategyClass cls = full_info_class(g_, window_k_);
    std::uint64_t count = cls.size();
    bool universal = a->op == HyperOp::Forall;
    auto savedIt = delta_.find(a->var);
    auto saved = savedIt != delta_.end() ? std::optional<FiniteMemoryStrategy>(savedIt->second)
                                         : std::nullopt;
    bool result = universal;
    for (std::uint64_t i = 0; i < count; ++i) {
      delta_[a->var] = FiniteMemoryStrategy{cls, i};
      bool r = eval(a->sub);
      if (r != universal) {
        result = r;
        break;
      }
    }
    if (saved)
      delta_[a->var] = *saved;
    else
      delta_.erase(a->var);
    cache.emplace(std::move(key), result);
    return result;
  }
  }
  throw Error("unreachable");
}

bool HyperChecker::check(const HyperPtr& root) {
  check_hypersl_wf(root);
  return eval(root);
}

bool check_slii(const Cgs& g, const ObservationFamily& fam, const SliiPtr& phi, int window_k,
                bool track_actions) {
  return SliiChecker(g, fam, window_k, track_actions).check(phi);
}

bool check_hypersl(const Cgs& g, const HyperPtr& phi, int window_k) {
  return HyperChecker(g, window_k).check(phi);
}

} // namespace slhyper
