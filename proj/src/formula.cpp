#include "slhyper/formula.hpp"
#include "slhyper/error.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>

namespace slhyper {

namespace {

std::shared_ptr<PathFormula> mk(PathOp op, PathPtr l = nullptr, PathPtr r = nullptr) {
  auto n = std::make_shared<PathFormula>();
  n->op = op;
  n->lhs = std::move(l);
  n->rhs = std::move(r);
  return n;
}

} // namespace

PathPtr p_true() {
  static const PathPtr t = mk(PathOp::True);
  return t;
}

PathPtr p_atom(std::string ap, std::string path) {
  auto n = std::make_shared<PathFormula>();
  n->op = PathOp::Atom;
  n->ap = std::move(ap);
  n->path = std::move(path);
  return n;
}

PathPtr p_not(PathPtr a) {
  if (a->op == PathOp::Not)
    return a->lhs;
  return mk(PathOp::Not, std::move(a));
}

PathPtr p_and(PathPtr a, PathPtr b) { return mk(PathOp::And, std::move(a), std::move(b)); }
PathPtr p_next(PathPtr a) { return mk(PathOp::Next, std::move(a)); }
PathPtr p_until(PathPtr a, PathPtr b) { return mk(PathOp::Until, std::move(a), std::move(b)); }

PathPtr p_false() { return p_not(p_true()); }
PathPtr p_or(PathPtr a, PathPtr b) { return p_not(p_and(p_not(std::move(a)), p_not(std::move(b)))); }
PathPtr p_implies(PathPtr a, PathPtr b) { return p_or(p_not(std::move(a)), std::move(b)); }

PathPtr p_iff(PathPtr a, PathPtr b) {
  return p_and(p_implies(a, b), p_implies(b, a));
}

PathPtr p_niff(PathPtr a, PathPtr b) { return p_not(p_iff(std::move(a), std::move(b))); }
PathPtr p_eventually(PathPtr a) { return p_until(p_true(), std::move(a)); }
PathPtr p_globally(PathPtr a) { return p_not(p_until(p_true(), p_not(std::move(a)))); }

PathPtr p_weak_until(PathPtr a, PathPtr b) {
  // (a U b) | !(true U !a)
  return p_or(p_until(a, std::move(b)), p_globally(a));
}

PathPtr p_and_all(const std::vector<PathPtr>& xs) {
  if (xs.empty())
    return p_true();
  PathPtr acc = xs.front();
  for (std::size_t i = 1; i < xs.size(); ++i)
    acc = p_and(acc, xs[i]);
  return acc;
}

PathPtr p_or_all(const std::vector<PathPtr>& xs) {
  if (xs.empty())
    return p_false();
  PathPtr acc = xs.front();
  for (std::size_t i = 1; i < xs.size(); ++i)
    acc = p_or(acc, xs[i]);
  return acc;
}

bool path_equal(const PathPtr& a, const PathPtr& b) {
  if (a == b)
    return true;
  if (a->op != b->op)
    return false;
  switch (a->op) {
  case PathOp::True: return true;
  case PathOp::Atom: return a->ap == b->ap && a->path == b->path;
  case PathOp::Not:
  case PathOp::Next: return path_equal(a->lhs, b->lhs);
  case PathOp::And:
  case PathOp::Until: return path_equal(a->lhs, b->lhs) && path_equal(a->rhs, b->rhs);
  }
  return false;
}

std::size_t path_size(const PathPtr& a) {
  switch (a->op) {
  case PathOp::True:
  case PathOp::Atom: return 1;
  case PathOp::Not:
  case PathOp::Next: return 1 + path_size(a->lhs);
  case PathOp::And:
  case PathOp::Until: return 1 + path_size(a->lhs) + path_size(a->rhs);
  }
  return 0;
}

int temporal_depth(const PathPtr& a) {
  switch (a->op) {
  case PathOp::True:
  case PathOp::Atom: return 0;
  case PathOp::Not: return temporal_depth(a->lhs);
  case PathOp::Next: return 1 + temporal_depth(a->lhs);
  case PathOp::And: return std::max(temporal_depth(a->lhs), temporal_depth(a->rhs));
  case PathOp::Until: return 1 + std::max(temporal_depth(a->lhs), temporal_depth(a->rhs));
  }
  return 0;
}

namespace {

bool path_is_binary(const PathPtr& a) {
  return a->op == PathOp::And || a->op == PathOp::Until;
}

std::string print_path_unary_operand(const PathPtr& a) {
  std::string s = print_path(a);
  return s; // binary nodes already come parenthesized
}

} // namespace

std::string print_path(const PathPtr& a) {
  switch (a->op) {
  case PathOp::True: return "true";
  case PathOp::Atom: return a->path.empty() ? a->ap : a->ap + "@" + a->path;
  case PathOp::Not: return "!" + print_path_unary_operand(a->lhs);
  case PathOp::Next: return "X " + print_path_unary_operand(a->lhs);
  case PathOp::And: return "(" + print_path(a->lhs) + " & " + print_path(a->rhs) + ")";
  case PathOp::Until: return "(" + print_path(a->lhs) + " U " + print_path(a->rhs) + ")";
  }
  return "";
}

// ---------------------------------------------------------------------------
// SL_ii
// ---------------------------------------------------------------------------

namespace {

std::shared_ptr<SlIiFormula> smk(SliiOp op) {
  auto n = std::make_shared<SlIiFormula>();
  n->op = op;
  return n;
}

} // namespace

SliiPtr s_path(PathPtr psi) {
  auto n = smk(SliiOp::Path);
  n->path = std::move(psi);
  return n;
}

SliiPtr s_and(SliiPtr a, SliiPtr b) {
  if (a->op == SliiOp::Path && b->op == SliiOp::Path)
    return s_path(p_and(a->path, b->path));
  auto n = smk(SliiOp::And);
  n->lhs = std::move(a);
  n->rhs = std::move(b);
  return n;
}

SliiPtr s_or(SliiPtr a, SliiPtr b) {
  if (a->op == SliiOp::Path && b->op == SliiOp::Path)
    return s_path(p_or(a->path, b->path));
  auto n = smk(SliiOp::Or);
  n->lhs = std::move(a);
  n->rhs = std::move(b);
  return n;
}

SliiPtr s_and_all(const std::vector<SliiPtr>& xs) {
  if (xs.empty())
    return s_path(p_true());
  SliiPtr acc = xs.front();
  for (std::size_t i = 1; i < xs.size(); ++i)
    acc = s_and(acc, xs[i]);
  return acc;
}

SliiPtr s_or_all(const std::vector<SliiPtr>& xs) {
  if (xs.empty())
    return s_path(p_false());
  SliiPtr acc = xs.front();
  for (std::size_t i = 1; i < xs.size(); ++i)
    acc = s_or(acc, xs[i]);
  return acc;
}

SliiPtr s_forall(std::string var, std::string obs, SliiPtr sub) {
  auto n = smk(SliiOp::Forall);
  n->var = std::move(var);
  n->obs = std::move(obs);
  n->sub = std::move(sub);
  return n;
}

SliiPtr s_exists(std::string var, std::string obs, SliiPtr sub) {
  auto n = smk(SliiOp::Exists);
  n->var = std::move(var);
  n->obs = std::move(obs);
  n->sub = std::move(sub);
  return n;
}

SliiPtr s_bind(std::string agent, std::string var, SliiPtr sub) {
  auto n = smk(SliiOp::Bind);
  n->agent = std::move(agent);
  n->var = std::move(var);
  n->sub = std::move(sub);
  return n;
}

bool slii_equal(const SliiPtr& a, const SliiPtr& b) {
  if (a == b)
    return true;
  if (a->op != b->op)
    return false;
  switch (a->op) {
  case SliiOp::Path: return path_equal(a->path, b->path);
  case SliiOp::And:
  case SliiOp::Or: return slii_equal(a->lhs, b->lhs) && slii_equal(a->rhs, b->rhs);
  case SliiOp::Forall:
  case SliiOp::Exists:
    return a->var == b->var && a->obs == b->obs && slii_equal(a->sub, b->sub);
  case SliiOp::Bind:
    return a->agent == b->agent && a->var == b->var && slii_equal(a->sub, b->sub);
  }
  return false;
}

std::size_t slii_size(const SliiPtr& a) {
  switch (a->op) {
  case SliiOp::Path: return path_size(a->path);
  case SliiOp::And:
  case SliiOp::Or: return 1 + slii_size(a->lhs) + slii_size(a->rhs);
  case SliiOp::Forall:
  case SliiOp::Exists:
  case SliiOp::Bind: return 1 + slii_size(a->sub);
  }
  return 0;
}

std::string print_slii(const SliiPtr& a) {
  auto wrap = [](const SliiPtr& c) {
    std::string s = print_slii(c);
    if (c->op == SliiOp::Forall || c->op == SliiOp::Exists || c->op == SliiOp::Bind)
      return "(" + s + ")";
    return s;
  };
  switch (a->op) {
  case SliiOp::Path: return print_path(a->path);
  case SliiOp::And: return "(" + wrap(a->lhs) + " & " + wrap(a->rhs) + ")";
  case SliiOp::Or: return "(" + wrap(a->lhs) + " | " + wrap(a->rhs) + ")";
  case SliiOp::Forall: return "forall " + a->var + ":" + a->obs + ". " + print_slii(a->sub);
  case SliiOp::Exists: return "exists " + a->var + ":" + a->obs + ". " + print_slii(a->sub);
  case SliiOp::Bind: return "bind " + a->agent + " " + a->var + ". " + print_slii(a->sub);
  }
  return "";
}

SliiPtr negate_slii(const SliiPtr& a) {
  switch (a->op) {
  case SliiOp::Path: return s_path(p_not(a->path));
  case SliiOp::And: return s_or(negate_slii(a->lhs), negate_slii(a->rhs));
  case SliiOp::Or: return s_and(negate_slii(a->lhs), negate_slii(a->rhs));
  case SliiOp::Forall: return s_exists(a->var, a->obs, negate_slii(a->sub));
  case SliiOp::Exists: return s_forall(a->var, a->obs, negate_slii(a->sub));
  case SliiOp::Bind: return s_bind(a->agent, a->var, negate_slii(a->sub));
  }
  return nullptr;
}

namespace {

void slii_free_vars_rec(const SliiPtr& a, std::vector<std::string>& bound,
                        std::vector<std::string>& out) {
  auto is_bound = [&](const std::string& v) {
    return std::find(bound.begin(), bound.end(), v) != bound.end();
  };
  auto add = [&](const std::string& v) {
    if (!is_bound(v) && std::find(out.begin(), out.end(), v) == out.end())
      out.push_back(v);
  };
  switch (a->op) {
  case SliiOp::Path: return;
  case SliiOp::And:
  case SliiOp::Or:
    slii_free_vars_rec(a->lhs, bound, out);
    slii_free_vars_rec(a->rhs, bound, out);
    return;
  case SliiOp::Forall:
  case SliiOp::Exists:
    bound.push_back(a->var);
    slii_free_vars_rec(a->sub, bound, out);
    bound.pop_back();
    return;
  case SliiOp::Bind:
    add(a->var);
    slii_free_vars_rec(a->sub, bound, out);
    return;
  }
}

void slii_wf_rec(const SliiPtr& a, std::vector<std::string>& bound) {
  switch (a->op) {
  case SliiOp::Path: {
    // no hyper atoms inside SL_ii path formulas
    std::vector<PathPtr> stack{a->path};
    while (!stack.empty()) {
      PathPtr p = stack.back();
      stack.pop_back();
      if (p->op == PathOp::Atom && !p->path.empty())
        throw Error("path-variable-indexed atom '" + p->ap + "@" + p->path +
                    "' not allowed in an SL_ii path formula");
      if (p->lhs) stack.push_back(p->lhs);
      if (p->rhs) stack.push_back(p->rhs);
    }
    return;
  }
  case SliiOp::And:
  case SliiOp::Or:
    slii_wf_rec(a->lhs, bound);
    slii_wf_rec(a->rhs, bound);
    return;
  case SliiOp::Forall:
  case SliiOp::Exists:
    bound.push_back(a->var);
    slii_wf_rec(a->sub, bound);
    bound.pop_back();
    return;
  case SliiOp::Bind:
    if (std::find(bound.begin(), bound.end(), a->var) == bound.end())
      throw Error("unbound strategy variable '" + a->var + "' in binding for agent '" +
                  a->agent + "'");
    slii_wf_rec(a->sub, bound);
    return;
  }
}

/// Any mention of a strategy variable, including binders.
void slii_all_vars(const SliiPtr& a, std::set<std::string>& out) {
  switch (a->op) {
  case SliiOp::Path: return;
  case SliiOp::And:
  case SliiOp::Or:
    slii_all_vars(a->lhs, out);
    slii_all_vars(a->rhs, out);
    return;
  case SliiOp::Forall:
  case SliiOp::Exists:
    out.insert(a->var);
    slii_all_vars(a->sub, out);
    return;
  case SliiOp::Bind:
    out.insert(a->var);
    slii_all_vars(a->sub, out);
    return;
  }
}

bool slii_mentions(const SliiPtr& a, const std::string& var) {
  std::set<std::string> vs;
  slii_all_vars(a, vs);
  return vs.count(var) > 0;
}

} // namespace

std::vector<std::string> slii_free_vars(const SliiPtr& a) {
  std::vector<std::string> bound, out;
  slii_free_vars_rec(a, bound, out);
  return out;
}

void check_slii_wf(const SliiPtr& a) {
  std::vector<std::string> bound;
  slii_wf_rec(a, bound);
}

SliiPtr canonicalize_slii(const SliiPtr& a) {
  switch (a->op) {
  case SliiOp::Path: return a;
  case SliiOp::Forall: return s_forall(a->var, a->obs, canonicalize_slii(a->sub));
  case SliiOp::Exists: return s_exists(a->var, a->obs, canonicalize_slii(a->sub));
  case SliiOp::Bind: return s_bind(a->agent, a->var, canonicalize_slii(a->sub));
  case SliiOp::And:
  case SliiOp::Or: {
    SliiPtr l = canonicalize_slii(a->lhs);
    SliiPtr r = canonicalize_slii(a->rhs);
    auto rebuild = [&](SliiPtr x, SliiPtr y) {
      return a->op == SliiOp::And ? s_and(std::move(x), std::move(y))
                                  : s_or(std::move(x), std::move(y));
    };
    // Let quantifiers float outward when the sibling does not mention the
    // quantified variable (no capture possible).
    if ((l->op == SliiOp::Forall || l->op == SliiOp::Exists) && !slii_mentions(r, l->var)) {
      SliiPtr inner = canonicalize_slii(rebuild(l->sub, r));
      return l->op == SliiOp::Forall ? s_forall(l->var, l->obs, inner)
                                     : s_exists(l->var, l->obs, inner);
    }
    if ((r->op == SliiOp::Forall || r->op == SliiOp::Exists) && !slii_mentions(l, r->var)) {
      SliiPtr inner = canonicalize_slii(rebuild(l, r->sub));
      return r->op == SliiOp::Forall ? s_forall(r->var, r->obs, inner)
                                     : s_exists(r->var, r->obs, inner);
    }
    return rebuild(l, r);
  }
  }
  return a;
}

// ---------------------------------------------------------------------------
// HyperSL
// ---------------------------------------------------------------------------

namespace {

std::shared_ptr<HyperSlFormula> hmk(HyperOp op) {
  auto n = std::make_shared<HyperSlFormula>();
  n->op = op;
  return n;
}

} // namespace

HyperPtr h_forall(std::string var, HyperPtr sub) {
  auto n = hmk(HyperOp::Forall);
  n->var = std::move(var);
  n->sub = std::move(sub);
  return n;
}

HyperPtr h_exists(std::string var, HyperPtr sub) {
  auto n = hmk(HyperOp::Exists);
  n->var = std::move(var);
  n->sub = std::move(sub);
  return n;
}

HyperPtr h_and(HyperPtr a, HyperPtr b) {
  auto n = hmk(HyperOp::And);
  n->lhs = std::move(a);
  n->rhs = std::move(b);
  return n;
}

HyperPtr h_or(HyperPtr a, HyperPtr b) {
  auto n = hmk(HyperOp::Or);
  n->lhs = std::move(a);
  n->rhs = std::move(b);
  return n;
}

HyperPtr h_and_all(const std::vector<HyperPtr>& xs) {
  if (xs.empty())
    throw Error("empty conjunction of HyperSL state formulas");
  HyperPtr acc = xs.front();
  for (std::size_t i = 1; i < xs.size(); ++i)
    acc = h_and(acc, xs[i]);
  return acc;
}

HyperPtr h_or_all(const std::vector<HyperPtr>& xs) {
  if (xs.empty())
    throw Error("empty disjunction of HyperSL state formulas");
  HyperPtr acc = xs.front();
  for (std::size_t i = 1; i < xs.size(); ++i)
    acc = h_or(acc, xs[i]);
  return acc;
}

HyperPtr h_body(PathPtr psi, std::vector<HyperProfile> profiles) {
  auto n = hmk(HyperOp::Body);
  n->path = std::move(psi);
  n->profiles = std::move(profiles);
  return n;
}

bool hyper_equal(const HyperPtr& a, const HyperPtr& b) {
  if (a == b)
    return true;
  if (a->op != b->op)
    return false;
  switch (a->op) {
  case HyperOp::Forall:
  case HyperOp::Exists: return a->var == b->var && hyper_equal(a->sub, b->sub);
  case HyperOp::And:
  case HyperOp::Or: return hyper_equal(a->lhs, b->lhs) && hyper_equal(a->rhs, b->rhs);
  case HyperOp::Body: {
    if (!path_equal(a->path, b->path) || a->profiles.size() != b->profiles.size())
      return false;
    for (std::size_t i = 0; i < a->profiles.size(); ++i) {
      if (a->profiles[i].pathvar != b->profiles[i].pathvar ||
          a->profiles[i].bind != b->profiles[i].bind)
        return false;
    }
    return true;
  }
  }
  return false;
}

std::size_t hyper_size(const HyperPtr& a) {
  switch (a->op) {
  case HyperOp::Forall:
  case HyperOp::Exists: return 1 + hyper_size(a->sub);
  case HyperOp::And:
  case HyperOp::Or: return 1 + hyper_size(a->lhs) + hyper_size(a->rhs);
  case HyperOp::Body: {
    std::size_t n = 1 + path_size(a->path);
    for (const auto& pr : a->profiles)
      n += 1 + pr.bind.size();
    return n;
  }
  }
  return 0;
}

std::string print_hypersl(const HyperPtr& a) {
  auto wrap = [](const HyperPtr& c) {
    std::string s = print_hypersl(c);
    if (c->op == HyperOp::Forall || c->op == HyperOp::Exists || c->op == HyperOp::Body)
      return "(" + s + ")";
    return s;
  };
  switch (a->op) {
  case HyperOp::Forall: return "forall " + a->var + ". " + print_hypersl(a->sub);
  case HyperOp::Exists: return "exists " + a->var + ". " + print_hypersl(a->sub);
  case HyperOp::And: return "(" + wrap(a->lhs) + " & " + wrap(a->rhs) + ")";
  case HyperOp::Or: return "(" + wrap(a->lhs) + " | " + wrap(a->rhs) + ")";
  case HyperOp::Body: {
    std::string s = "[";
    for (std::size_t k = 0; k < a->profiles.size(); ++k) {
      if (k)
        s += "; ";
      s += a->profiles[k].pathvar + ":(";
      for (std::size_t i = 0; i < a->profiles[k].bind.size(); ++i) {
        if (i)
          s += ",";
        s += a->profiles[k].bind[i].first + "=" + a->profiles[k].bind[i].second;
      }
      s += ")";
    }
    s += "] " + print_path(a->path);
    return s;
  }
  }
  return "";
}

HyperPtr negate_hypersl(const HyperPtr& a) {
  switch (a->op) {
  case HyperOp::Forall: return h_exists(a->var, negate_hypersl(a->sub));
  case HyperOp::Exists: return h_forall(a->var, negate_hypersl(a->sub));
  case HyperOp::And: return h_or(negate_hypersl(a->lhs), negate_hypersl(a->rhs));
  case HyperOp::Or: return h_and(negate_hypersl(a->lhs), negate_hypersl(a->rhs));
  case HyperOp::Body: return h_body(p_not(a->path), a->profiles);
  }
  return nullptr;
}

namespace {

void hyper_free_vars_rec(const HyperPtr& a, std::vector<std::string>& bound,
                         std::vector<std::string>& out) {
  auto add = [&](const std::string& v) {
    if (std::find(bound.begin(), bound.end(), v) == bound.end() &&
        std::find(out.begin(), out.end(), v) == out.end())
      out.push_back(v);
  };
  switch (a->op) {
  case HyperOp::Forall:
  case HyperOp::Exists:
    bound.push_back(a->var);
    hyper_free_vars_rec(a->sub, bound, out);
    bound.pop_back();
    return;
  case HyperOp::And:
  case HyperOp::Or:
    hyper_free_vars_rec(a->lhs, bound, out);
    hyper_free_vars_rec(a->rhs, bound, out);
    return;
  case HyperOp::Body:
    for (const auto& pr : a->profiles)
      for (const auto& [agent, var] : pr.bind)
        add(var);
    return;
  }
}

void hyper_path_vars_rec(const HyperPtr& a, std::vector<std::string>& out) {
  auto add = [&](const std::string& v) {
    if (std::find(out.begin(), out.end(), v) == out.end())
      out.push_back(v);
  };
  switch (a->op) {
  case HyperOp::Forall:
  case HyperOp::Exists:
    hyper_path_vars_rec(a->sub, out);
    return;
  case HyperOp::And:
  case HyperOp::Or:
    hyper_path_vars_rec(a->lhs, out);
    hyper_path_vars_rec(a->rhs, out);
    return;
  case HyperOp::Body:
    for (const auto& pr : a->profiles)
      add(pr.pathvar);
    return;
  }
}

void hyper_wf_rec(const HyperPtr& a, std::vector<std::string>& bound,
                  std::vector<std::string>& agent_set) {
  switch (a->op) {
  case HyperOp::Forall:
  case HyperOp::Exists:
    bound.push_back(a->var);
    hyper_wf_rec(a->sub, bound, agent_set);
    bound.pop_back();
    return;
  case HyperOp::And:
  case HyperOp::Or:
    hyper_wf_rec(a->lhs, bound, agent_set);
    hyper_wf_rec(a->rhs, bound, agent_set);
    return;
  case HyperOp::Body: {
    std::vector<std::string> pvars;
    for (const auto& pr : a->profiles) {
      if (std::find(pvars.begin(), pvars.end(), pr.pathvar) != pvars.end())
        throw Error("duplicate path variable '" + pr.pathvar + "' in body");
      pvars.push_back(pr.pathvar);
      std::vector<std::string> agents;
      for (const auto& [agent, var] : pr.bind) {
        if (std::find(agents.begin(), agents.end(), agent) != agents.end())
          throw Error("agent '" + agent + "' bound twice in profile for '" + pr.pathvar + "'");
        agents.push_back(agent);
        if (std::find(bound.begin(), bound.end(), var) == bound.end())
          throw Error("unbound strategy variable '" + var + "' in profile for '" +
                      pr.pathvar + "'");
      }
      std::sort(agents.begin(), agents.end());
      if (agent_set.empty())
        agent_set = agents;
      else if (agents != agent_set)
        throw Error("non-total profile: profiles bind different agent sets");
    }
    std::vector<PathPtr> stack{a->path};
    while (!stack.empty()) {
      PathPtr p = stack.back();
      stack.pop_back();
      if (p->op == PathOp::Atom) {
        if (p->path.empty())
          throw Error("atom '" + p->ap + "' is missing a path variable");
        if (std::find(pvars.begin(), pvars.end(), p->path) == pvars.end())
          throw Error("atom references path variable '" + p->path +
                      "' not bound by the body");
      }
      if (p->lhs) stack.push_back(p->lhs);
      if (p->rhs) stack.push_back(p->rhs);
    }
    return;
  }
  }
}

} // namespace

std::vector<std::string> hyper_free_vars(const HyperPtr& a) {
  std::vector<std::string> bound, out;
  hyper_free_vars_rec(a, bound, out);
  return out;
}

std::vector<std::string> hyper_path_vars(const HyperPtr& a) {
  std::vector<std::string> out;
  hyper_path_vars_rec(a, out);
  return out;
}

void check_hypersl_wf(const HyperPtr& a) {
  std::vector<std::string> bound, agent_set;
  hyper_wf_rec(a, bound, agent_set);
}

// ---------------------------------------------------------------------------
// JSON trees
// ---------------------------------------------------------------------------

namespace {

using nlohmann::json;

json path_json(const PathPtr& a) {
  switch (a->op) {
  case PathOp::True: return {{"op", "true"}};
  case PathOp::Atom: {
    json j = {{"op", "atom"}, {"ap", a->ap}};
    if (!a->path.empty())
      j["path"] = a->path;
    return j;
  }
  case PathOp::Not: return {{"op", "not"}, {"sub", path_json(a->lhs)}};
  case PathOp::Next: return {{"op", "next"}, {"sub", path_json(a->lhs)}};
  case PathOp::And: return {{"op", "and"}, {"lhs", path_json(a->lhs)}, {"rhs", path_json(a->rhs)}};
  case PathOp::Until:
    return {{"op", "until"}, {"lhs", path_json(a->lhs)}, {"rhs", path_json(a->rhs)}};
  }
  return {};
}

json slii_json(const SliiPtr& a) {
  switch (a->op) {
  case SliiOp::Path: return {{"op", "path"}, {"body", path_json(a->path)}};
  case SliiOp::And: return {{"op", "and"}, {"lhs", slii_json(a->lhs)}, {"rhs", slii_json(a->rhs)}};
  case SliiOp::Or: return {{"op", "or"}, {"lhs", slii_json(a->lhs)}, {"rhs", slii_json(a->rhs)}};
  case SliiOp::Forall:
    return {{"op", "forall"}, {"var", a->var}, {"obs", a->obs}, {"sub", slii_json(a->sub)}};
  case SliiOp::Exists:
    return {{"op", "exists"}, {"var", a->var}, {"obs", a->obs}, {"sub", slii_json(a->sub)}};
  case SliiOp::Bind:
    return {{"op", "bind"}, {"agent", a->agent}, {"var", a->var}, {"sub", slii_json(a->sub)}};
  }
  return {};
}

json hyper_json(const HyperPtr& a) {
  switch (a->op) {
  case HyperOp::Forall: return {{"op", "forall"}, {"var", a->var}, {"sub", hyper_json(a->sub)}};
  case HyperOp::Exists: return {{"op", "exists"}, {"var", a->var}, {"sub", hyper_json(a->sub)}};
  case HyperOp::And: return {{"op", "and"}, {"lhs", hyper_json(a->lhs)}, {"rhs", hyper_json(a->rhs)}};
  case HyperOp::Or: return {{"op", "or"}, {"lhs", hyper_json(a->lhs)}, {"rhs", hyper_json(a->rhs)}};
  case HyperOp::Body: {
    json profs = json::array();
    for (const auto& pr : a->profiles) {
      json b = json::object();
      for (const auto& [agent, var] : pr.bind)
        b[agent] = var;
      profs.push_back({{"path", pr.pathvar}, {"profile", b}});
    }
    return {{"op", "body"}, {"bindings", profs}, {"body", path_json(a->path)}};
  }
  }
  return {};
}

} // namespace

std::string path_to_json(const PathPtr& a) { return path_json(a).dump(); }
std::string slii_to_json(const SliiPtr& a) { return slii_json(a).dump(); }
std::string hypersl_to_json(const HyperPtr& a) { return hyper_json(a).dump(); }

} // namespace slhyper
