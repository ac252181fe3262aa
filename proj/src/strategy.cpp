#include "slhyper/strategy.hpp"
#include "slhyper/error.hpp"

#include <map>

namespace slhyper {

namespace {

constexpr std::uint64_t kMaxClassBits = 62;

std::uint64_t pow_u64(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  while (exp--) {
    r *= base;
  }
  return r;
}

} // namespace

std::uint64_t StrategyClass::window_count() const {
  std::uint64_t total = 0, level = 1;
  for (int l = 1; l <= window; ++l) {
    level *= static_cast<std::uint64_t>(num_symbols);
    total += level;
    if (total > (1ull << 32))
      throw Error("strategy class too large: too many windows");
  }
  return total;
}

std::uint64_t StrategyClass::size() const {
  std::uint64_t w = window_count();
  // num_actions^w must fit in 62 bits
  unsigned __int128 s = 1;
  for (std::uint64_t i = 0; i < w; ++i) {
    s *= static_cast<unsigned>(num_actions);
    if (s > (static_cast<unsigned __int128>(1) << kMaxClassBits))
      throw Error("strategy class too large: " + std::to_string(w) + " windows over " +
                  std::to_string(num_actions) + " actions");
  }
  return static_cast<std::uint64_t>(s);
}

std::uint64_t StrategyClass::window_pos(const std::vector<int>& window_syms) const {
  std::size_t l = window_syms.size();
  if (l == 0 || l > static_cast<std::size_t>(window))
    throw Error("window length out of range");
  // offset = sum_{j=1..l-1} num_symbols^j
  std::uint64_t offset = 0, level = 1;
  for (std::size_t j = 1; j < l; ++j) {
    level *= static_cast<std::uint64_t>(num_symbols);
    offset += level;
  }
  std::uint64_t idx = 0;
  for (int sym : window_syms) {
    if (sym < 0 || sym >= num_symbols)
      throw Error("window symbol out of range");
    idx = idx * num_symbols + static_cast<std::uint64_t>(sym);
  }
  return offset + idx;
}

int FiniteMemoryStrategy::action_at(std::uint64_t window_slot) const {
  std::uint64_t d = pow_u64(cls.num_actions, window_slot);
  return static_cast<int>((index / d) % cls.num_actions);
}

int FiniteMemoryStrategy::action_for_window(const std::vector<int>& window_syms) const {
  return action_at(cls.window_pos(window_syms));
}

std::vector<int> FiniteMemoryStrategy::table() const {
  std::uint64_t w = cls.window_count();
  std::vector<int> t(w);
  std::uint64_t rest = index;
  for (std::uint64_t i = 0; i < w; ++i) {
    t[i] = static_cast<int>(rest % cls.num_actions);
    rest /= cls.num_actions;
  }
  return t;
}

StrategyClass full_info_class(const Cgs& g, int window_k) {
  if (window_k < 1)
    throw Error("strategy window must be at least 1");
  StrategyClass c;
  c.num_symbols = g.num_states();
  c.num_actions = g.num_actions();
  c.window = window_k;
  c.mode = -1;
  return c;
}

StrategyClass observation_class(const Cgs& g, const ObservationFamily& fam, int obs,
                                int window_k, bool track_actions) {
  if (obs < 0 || obs >= fam.num_observations())
    throw Error("unknown observation");
  if (window_k < 1)
    throw Error("strategy window must be at least 1");
  StrategyClass c;
  c.num_symbols = static_cast<int>(fam.blocks[obs].size());
  c.num_actions = g.num_actions();
  c.window = window_k;
  c.mode = obs;
  c.track_actions = track_actions;
  if (track_actions)
    c.num_symbols *= g.num_actions() + 1;
  return c;
}

Lasso play_lasso(const Cgs& g, const ObservationFamily& fam, int start,
                 const std::vector<FiniteMemoryStrategy>& profile) {
  if (static_cast<int>(profile.size()) != g.num_agents())
    throw Error("play_lasso needs one strategy per agent");
  for (const auto& f : profile) {
    if (f.cls.mode >= fam.num_observations())
      throw Error("strategy references an unknown observation");
  }

  std::vector<std::vector<int>> windows(profile.size());
  std::vector<int> last_act(profile.size(), -1);
  std::vector<int> states;
  std::map<std::vector<int>, int> seen; // (state, windows) -> step
  int s = start;
  for (;;) {
    // extend every agent's window with the current state's symbol
    for (std::size_t i = 0; i < profile.size(); ++i) {
      int sym = profile[i].cls.mode < 0 ? s : fam.block_of[profile[i].cls.mode][s];
      if (profile[i].cls.mode >= 0 && profile[i].cls.track_actions)
        sym = sym * (profile[i].cls.num_actions + 1) + 1 + last_act[i];
      windows[i].push_back(sym);
      if (static_cast<int>(windows[i].size()) > profile[i].cls.window)
        windows[i].erase(windows[i].begin());
    }
    std::vector<int> sig{s};
    for (const auto& w : windows) {
      sig.push_back(static_cast<int>(w.size()));
      sig.insert(sig.end(), w.begin(), w.end());
    }
    auto [it, fresh] = seen.emplace(std::move(sig), static_cast<int>(states.size()));
    if (!fresh) {
      Lasso l;
      l.stem.assign(states.begin(), states.begin() + it->second);
      l.loop.assign(states.begin() + it->second, states.end());
      return l;
    }
    states.push_back(s);
    std::vector<int> acts(profile.size());
    for (std::size_t i = 0; i < profile.size(); ++i) {
      acts[i] = profile[i].action_for_window(windows[i]);
      last_act[i] = acts[i];
    }
    s = g.step(s, g.profile_index(acts));
  }
}

bool indistinguishable_prefixes(const ObservationFamily& fam, int obs,
                                const std::vector<int>& p, const std::vector<int>& p2) {
  if (obs < 0 || obs >= fam.num_observations())
    throw Error("unknown observation");
  if (p.size() != p2.size())
    return false;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (!fam.related(obs, p[i], p2[i]))
      return false;
  return true;
}

namespace {

/// Calls fn for every window (length 1..k over num_symbols symbols).
template <typename Fn>
void for_each_window(int num_symbols, int k, Fn&& fn) {
  std::vector<int> w;
  for (int l = 1; l <= k; ++l) {
    w.assign(l, 0);
    for (;;) {
      fn(w);
      int i = l - 1;
      while (i >= 0 && ++w[i] == num_symbols) {
        w[i] = 0;
        --i;
      }
      if (i < 0)
        break;
    }
  }
}

} // namespace

bool is_o_strategy(const Cgs& g, const ObservationFamily& fam, int obs,
                   const FiniteMemoryStrategy& f) {
  if (obs < 0 || obs >= fam.num_observations())
    throw Error("unknown observation");
  if (f.cls.mode >= 0)
    return true; // mode-o strategies satisfy the condition by construction
  // group windows by their block image; all windows in a group must agree
  std::map<std::vector<int>, int> action_of_blocks;
  bool ok = true;
  for_each_window(g.num_states(), f.cls.window, [&](const std::vector<int>& w) {
    if (!ok)
      return;
    std::vector<int> img(w.size());
    for (std::size_t i = 0; i < w.size(); ++i)
      img[i] = fam.block_of[obs][w[i]];
    img.push_back(static_cast<int>(w.size()));
    int a = f.action_for_window(w);
    auto [it, fresh] = action_of_blocks.emplace(img, a);
    if (!fresh && it->second != a)
      ok = false;
  });
  return ok;
}

FiniteMemoryStrategy lift_to_full_info(const Cgs& g, const ObservationFamily& fam,
                                       const FiniteMemoryStrategy& f) {
  if (f.cls.mode < 0)
    return f;
  if (f.cls.track_actions)
    throw Error("cannot lift an action-tracking strategy to a state table");
  StrategyClass full;
  full.num_symbols = g.num_states();
  full.num_actions = f.cls.num_actions;
  full.window = f.cls.window;
  full.mode = -1;
  full.size(); // overflow guard
  FiniteMemoryStrategy out{full, 0};
  for_each_window(g.num_states(), f.cls.window, [&](const std::vector<int>& w) {
    std::vector<int> img(w.size());
    for (std::size_t i = 0; i < w.size(); ++i)
      img[i] = fam.block_of[f.cls.mode][w[i]];
    int a = f.action_for_window(img);
    out.index += static_cast<std::uint64_t>(a) * pow_u64(full.num_actions, full.window_pos(w));
  });
  return out;
}

} // namespace slhyper
