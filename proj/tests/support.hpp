#pragma once

#include "slhyper/cgs.hpp"
#include "slhyper/checker.hpp"
#include "slhyper/formula.hpp"

#include <functional>
#include <random>
#include <string>
#include <vector>

namespace slhyper::testing {

enum class Tv { False, True, Unknown };

/// Three-valued LTL evaluation on a finite prefix: atoms beyond the horizon
/// and undetermined U/X obligations yield Unknown. Independent oracle for the
/// exact lasso evaluator wherever the bounded result is decided.
inline Tv bounded_eval(const PathPtr& psi, const std::vector<std::vector<bool>>& prefix,
                       const std::function<int(const std::string&, const std::string&)>& atom_id,
                       std::size_t pos) {
  std::size_t h = prefix.size();
  if (pos >= h)
    return Tv::Unknown;
  switch (psi->op) {
  case PathOp::True:
    return Tv::True;
  case PathOp::Atom:
    return prefix[pos][atom_id(psi->ap, psi->path)] ? Tv::True : Tv::False;
  case PathOp::Not: {
    Tv v = bounded_eval(psi->lhs, prefix, atom_id, pos);
    if (v == Tv::Unknown)
      return v;
    return v == Tv::True ? Tv::False : Tv::True;
  }
  case PathOp::And: {
    Tv a = bounded_eval(psi->lhs, prefix, atom_id, pos);
    Tv b = bounded_eval(psi->rhs, prefix, atom_id, pos);
    if (a == Tv::False || b == Tv::False)
      return Tv::False;
    if (a == Tv::True && b == Tv::True)
      return Tv::True;
    return Tv::Unknown;
  }
  case PathOp::Next:
    return bounded_eval(psi->lhs, prefix, atom_id, pos + 1);
  case PathOp::Until: {
    // Kleene expansion a U b = b | (a & X(a U b)); the horizon end is Unknown.
    auto and3 = [](Tv x, Tv y) {
      if (x == Tv::False || y == Tv::False)
        return Tv::False;
      return (x == Tv::True && y == Tv::True) ? Tv::True : Tv::Unknown;
    };
    auto or3 = [](Tv x, Tv y) {
      if (x == Tv::True || y == Tv::True)
        return Tv::True;
      return (x == Tv::False && y == Tv::False) ? Tv::False : Tv::Unknown;
    };
    Tv b = bounded_eval(psi->rhs, prefix, atom_id, pos);
    Tv a = bounded_eval(psi->lhs, prefix, atom_id, pos);
    Tv rest = bounded_eval(psi, prefix, atom_id, pos + 1);
    return or3(b, and3(a, rest));
  }
  }
  return Tv::Unknown;
}

/// Unrolls a lasso trace to a finite valuation prefix of the given horizon.
inline std::vector<std::vector<bool>> unroll(const LassoTrace& t, std::size_t horizon) {
  std::vector<std::vector<bool>> out;
  std::size_t n = t.val.size();
  std::size_t loop = n - static_cast<std::size_t>(t.loop_start);
  for (std::size_t i = 0; i < horizon; ++i)
    out.push_back(t.val[i < n ? i : t.loop_start + (i - n) % loop]);
  return out;
}

/// Rotates the first loop position into the stem.
inline LassoTrace rotate_into_stem(const LassoTrace& t) {
  LassoTrace r;
  std::size_t n = t.val.size();
  std::size_t ls = static_cast<std::size_t>(t.loop_start);
  r.val.assign(t.val.begin(), t.val.end());
  r.val.push_back(t.val[ls]);
  r.loop_start = t.loop_start + 1;
  (void)n;
  return r;
}

/// Repeats the loop twice.
inline LassoTrace double_loop(const LassoTrace& t) {
  LassoTrace r = t;
  for (std::size_t i = static_cast<std::size_t>(t.loop_start); i < t.val.size(); ++i)
    r.val.push_back(t.val[i]);
  return r;
}

/// One-agent structure: states s0..s_{n-1}, actions m0/m1, ap "goal" on the
/// last state. m0 keeps the current state, m1 advances by one (saturating).
inline CgsDocument chain_game(int n, bool blind) {
  CgsDocument doc;
  Cgs& g = doc.cgs;
  for (int i = 0; i < n; ++i)
    g.states.push_back("s" + std::to_string(i));
  g.agents = {"a1"};
  g.actions = {"m0", "m1"};
  g.aps = {"goal"};
  g.initial = 0;
  g.labels.assign(n, {false});
  g.labels[n - 1][0] = true;
  g.transition.resize(static_cast<std::size_t>(n) * 2);
  for (int s = 0; s < n; ++s) {
    g.transition[s * 2 + 0] = s;
    g.transition[s * 2 + 1] = std::min(s + 1, n - 1);
  }
  g.reindex();
  doc.fam.observations = {"o1"};
  if (blind) {
    std::vector<int> all;
    for (int i = 0; i < n; ++i)
      all.push_back(i);
    doc.fam.blocks = {{all}};
  } else {
    doc.fam.blocks.emplace_back();
    for (int i = 0; i < n; ++i)
      doc.fam.blocks[0].push_back({i});
  }
  doc.fam.rebuild(n);
  return doc;
}

} // namespace slhyper::testing
