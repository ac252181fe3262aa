#include "slhyper/generator.hpp"
#include "slhyper/error.hpp"

#include <algorithm>
#include <functional>

namespace slhyper {

std::vector<std::vector<int>> random_set_partition(std::mt19937_64& rng, int n) {
  if (n <= 0)
    throw Error("partition of an empty set");
  if (n > 10)
    throw Error("set partition sampling capped at 10 elements");
  // enumerate restricted growth strings: g[0]=0, g[i] <= max(g[0..i-1])+1
  std::vector<std::vector<int>> all;
  std::vector<int> g(n, 0);
  std::function<void(int, int)> walk = [&](int i, int mx) {
    if (i == n) {
      all.push_back(g);
      return;
    }
    for (int v = 0; v <= mx + 1; ++v) {
      g[i] = v;
      walk(i + 1, std::max(mx, v));
    }
  };
  walk(1, 0);
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  const std::vector<int>& chosen = all[pick(rng)];
  int num_blocks = *std::max_element(chosen.begin(), chosen.end()) + 1;
  std::vector<std::vector<int>> blocks(num_blocks);
  for (int i = 0; i < n; ++i)
    blocks[chosen[i]].push_back(i);
  return blocks;
}

CgsDocument random_instance(std::uint64_t seed, const GenSizes& sizes) {
  if (sizes.states < 1 || sizes.agents < 1 || sizes.actions < 1 || sizes.aps < 0 ||
      sizes.observations < 1)
    throw Error("generator sizes out of range");
  if (sizes.states > 10 || sizes.agents > 4 || sizes.actions > 6 || sizes.aps > 8 ||
      sizes.observations > 4)
    throw Error("generator sizes exceed documented caps");
  std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ull + 1);

  CgsDocument doc;
  Cgs& g = doc.cgs;
  for (int i = 0; i < sizes.states; ++i)
    g.states.push_back("s" + std::to_string(i));
  for (int i = 0; i < sizes.agents; ++i)
    g.agents.push_back("a" + std::to_string(i + 1));
  for (int i = 0; i < sizes.actions; ++i)
    g.actions.push_back("m" + std::to_string(i));
  for (int i = 0; i < sizes.aps; ++i)
    g.aps.push_back("p" + std::to_string(i));
  g.initial = 0;

  std::uniform_int_distribution<int> state_pick(0, sizes.states - 1);
  std::uniform_int_distribution<int> coin(0, 1);
  std::size_t pc = g.profile_count();
  g.transition.resize(static_cast<std::size_t>(sizes.states) * pc);
  for (std::size_t i = 0; i < g.transition.size(); ++i)
    g.transition[i] = state_pick(rng);
  g.labels.assign(sizes.states, std::vector<bool>(sizes.aps, false));
  for (int s = 0; s < sizes.states; ++s)
    for (int a = 0; a < sizes.aps; ++a)
      g.labels[s][a] = coin(rng) != 0;
  g.reindex();

  for (int o = 0; o < sizes.observations; ++o) {
    doc.fam.observations.push_back("o" + std::to_string(o + 1));
    doc.fam.blocks.push_back(random_set_partition(rng, sizes.states));
  }
  doc.fam.rebuild(sizes.states);
  return doc;
}

PathPtr random_path_formula(std::mt19937_64& rng,
                            const std::vector<std::pair<std::string, std::string>>& atoms,
                            int tdepth, int budget) {
  if (atoms.empty())
    return p_true();
  std::uniform_int_distribution<std::size_t> atom_pick(0, atoms.size() - 1);
  auto leaf = [&]() -> PathPtr {
    const auto& [ap, path] = atoms[atom_pick(rng)];
    PathPtr a = p_atom(ap, path);
    return std::uniform_int_distribution<int>(0, 2)(rng) == 0 ? p_not(a) : a;
  };
  std::function<PathPtr(int, int)> gen = [&](int td, int bud) -> PathPtr {
    if (bud <= 1)
      return leaf();
    int choices = td > 0 ? 9 : 4;
    switch (std::uniform_int_distribution<int>(0, choices - 1)(rng)) {
    case 0:
    case 1:
      return leaf();
    case 2:
      return p_and(gen(td, bud / 2), gen(td, bud / 2));
    case 3:
      return p_or(gen(td, bud / 2), gen(td, bud / 2));
    case 4:
      return p_next(gen(td - 1, bud - 1));
    case 5:
      return p_until(gen(td - 1, bud / 2), gen(td - 1, bud / 2));
    case 6:
      return p_eventually(gen(td - 1, bud - 1));
    case 7:
      return p_globally(gen(td - 1, bud - 1));
    default:
      return p_implies(gen(td, bud / 2), gen(td, bud / 2));
    }
  };
  return gen(tdepth, budget);
}

SliiPtr random_slii_formula(std::uint64_t seed, const CgsDocument& doc,
                            int max_qdepth, int max_tdepth) {
  std::mt19937_64 rng(seed * 0x2545f4914f6cdd1dull + 7);
  const Cgs& g = doc.cgs;
  int q = std::uniform_int_distribution<int>(1, std::max(1, max_qdepth))(rng);
  std::vector<std::string> scope;
  std::vector<std::pair<bool, std::string>> prefix; // (is_forall, obs)
  for (int i = 0; i < q; ++i) {
    int o = std::uniform_int_distribution<int>(0, doc.fam.num_observations() - 1)(rng);
    prefix.emplace_back(std::uniform_int_distribution<int>(0, 1)(rng) == 0,
                        doc.fam.observations[o]);
    scope.push_back("x" + std::to_string(i + 1));
  }
  std::vector<std::pair<std::string, std::string>> atoms;
  for (const auto& ap : g.aps)
    atoms.emplace_back(ap, "");

  auto leaf = [&]() {
    SliiPtr body = s_path(random_path_formula(rng, atoms, max_tdepth));
    std::uniform_int_distribution<std::size_t> var_pick(0, scope.size() - 1);
    for (int i = g.num_agents() - 1; i >= 0; --i)
      body = s_bind(g.agents[i], scope[var_pick(rng)], body);
    return body;
  };
  SliiPtr body = leaf();
  int roll = std::uniform_int_distribution<int>(0, 3)(rng);
  if (roll == 0)
    body = s_and(body, leaf());
  else if (roll == 1)
    body = s_or(body, leaf());
  for (int i = q - 1; i >= 0; --i)
    body = prefix[i].first ? s_forall(scope[i], prefix[i].second, body)
                           : s_exists(scope[i], prefix[i].second, body);
  return body;
}

HyperPtr random_hypersl_formula(std::uint64_t seed, const CgsDocument& doc,
                                int max_qdepth, int max_tdepth, int max_pathvars) {
  std::mt19937_64 rng(seed * 0xda942042e4dd58b5ull + 3);
  const Cgs& g = doc.cgs;
  int q = std::uniform_int_distribution<int>(1, std::max(1, max_qdepth))(rng);
  int m = std::uniform_int_distribution<int>(1, std::max(1, max_pathvars))(rng);
  std::vector<std::string> scope, pathvars;
  std::vector<bool> is_forall;
  for (int i = 0; i < q; ++i) {
    scope.push_back("x" + std::to_string(i + 1));
    is_forall.push_back(std::uniform_int_distribution<int>(0, 1)(rng) == 0);
  }
  for (int k = 0; k < m; ++k)
    pathvars.push_back("pv" + std::to_string(k + 1));

  std::vector<std::pair<std::string, std::string>> atoms;
  for (const auto& ap : g.aps)
    for (const auto& pv : pathvars)
      atoms.emplace_back(ap, pv);

  std::uniform_int_distribution<std::size_t> var_pick(0, scope.size() - 1);
  auto leaf = [&]() {
    std::vector<HyperProfile> profiles;
    for (const auto& pv : pathvars) {
      HyperProfile p{pv, {}};
      for (const auto& agent : g.agents)
        p.bind.emplace_back(agent, scope[var_pick(rng)]);
      profiles.push_back(std::move(p));
    }
    return h_body(random_path_formula(rng, atoms, max_tdepth), std::move(profiles));
  };
  HyperPtr body = leaf();
  int roll = std::uniform_int_distribution<int>(0, 3)(rng);
  if (roll == 0)
    body = h_and(body, leaf());
  else if (roll == 1)
    body = h_or(body, leaf());
  for (int i = q - 1; i >= 0; --i)
    body = is_forall[i] ? h_forall(scope[i], body) : h_exists(scope[i], body);
  return body;
}

} // namespace slhyper
