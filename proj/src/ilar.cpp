#include "slhyper/ilar.hpp"
#include "slhyper/error.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace slhyper {

bool is_injectively_labeled(const Cgs& g) {
  std::set<std::vector<int>> seen;
  for (int s = 0; s < g.num_states(); ++s)
    if (!seen.insert(g.label_set(s)).second)
      return false;
  return true;
}

bool is_action_recording(const Cgs& g, const IlArCertificate& cert) {
  if (static_cast<int>(cert.action_ap.size()) != g.num_agents())
    return false;
  std::vector<std::vector<int>> ap_of(g.num_agents());
  std::set<int> recording;
  for (int i = 0; i < g.num_agents(); ++i) {
    if (static_cast<int>(cert.action_ap[i].size()) != g.num_actions())
      return false;
    ap_of[i].resize(g.num_actions());
    for (int c = 0; c < g.num_actions(); ++c) {
      const std::string& name = cert.action_ap[i][c];
      if (name.empty())
        return false;
      int ap = g.ap_index(name);
      if (ap < 0)
        throw Error("action recording certificate references unknown AP '" + name + "'");
      ap_of[i][c] = ap;
      recording.insert(ap);
    }
  }
  std::size_t pc = g.profile_count();
  for (int s = 0; s < g.num_states(); ++s) {
    for (std::size_t p = 0; p < pc; ++p) {
      int t = g.step(s, p);
      std::vector<int> acts = g.profile_decode(p);
      for (int i = 0; i < g.num_agents(); ++i) {
        for (int c = 0; c < g.num_actions(); ++c) {
          bool want = (c == acts[i]);
          if (g.labels[t][ap_of[i][c]] != want)
            return false;
        }
      }
    }
  }
  return true;
}

bool already_il_ar(const CgsDocument& doc) {
  return doc.cert && is_injectively_labeled(doc.cgs) &&
         is_action_recording(doc.cgs, *doc.cert);
}

CgsDocument make_il_ar(const Cgs& g, const ObservationFamily& fam) {
  if (g.num_states() == 0 || g.num_agents() == 0 || g.num_actions() == 0)
    throw Error("cannot transform an empty game structure");

  std::set<std::string> user_aps(g.aps.begin(), g.aps.end());
  auto fresh = [&](const std::string& name) {
    if (user_aps.count(name))
      throw Error("generated AP '" + name + "' collides with a declared AP");
    return name;
  };

  std::size_t pc = g.profile_count();

  // Reachable (state, recorded profile) shells from (initial, all-first-action).
  std::size_t init_shell = static_cast<std::size_t>(g.initial) * pc + 0;
  std::set<std::size_t> reach{init_shell};
  std::deque<std::size_t> queue{init_shell};
  while (!queue.empty()) {
    std::size_t shell = queue.front();
    queue.pop_front();
    int s = static_cast<int>(shell / pc);
    for (std::size_t q = 0; q < pc; ++q) {
      std::size_t next = static_cast<std::size_t>(g.step(s, q)) * pc + q;
      if (reach.insert(next).second)
        queue.push_back(next);
    }
  }

  std::vector<std::size_t> shells(reach.begin(), reach.end()); // sorted: state-major
  std::map<std::size_t, int> shell_index;
  for (std::size_t i = 0; i < shells.size(); ++i)
    shell_index[shells[i]] = static_cast<int>(i);

  Cgs out;
  out.agents = g.agents;
  out.actions = g.actions;
  out.aps = g.aps;

  IlArCertificate cert;
  cert.action_ap.assign(g.num_agents(), std::vector<std::string>(g.num_actions()));
  for (int i = 0; i < g.num_agents(); ++i) {
    for (int c = 0; c < g.num_actions(); ++c) {
      std::string name = fresh("act_" + g.agents[i] + "_" + g.actions[c]);
      cert.action_ap[i][c] = name;
      out.aps.push_back(name);
    }
  }

  for (std::size_t shell : shells) {
    int s = static_cast<int>(shell / pc);
    std::vector<int> acts = g.profile_decode(shell % pc);
    std::string name = g.states[s];
    for (int a : acts)
      name += "#" + g.actions[a];
    out.states.push_back(name);
  }
  for (const std::string& st : out.states) {
    std::string name = fresh("id_" + st);
    cert.injectivity_aps.push_back(name);
    out.aps.push_back(name);
  }
  {
    std::set<std::string> all(out.aps.begin(), out.aps.end());
    if (all.size() != out.aps.size())
      throw Error("generated AP names collide with each other");
  }

  out.initial = shell_index.at(init_shell);
  int base_aps = g.num_aps();
  int act_aps = g.num_agents() * g.num_actions();
  out.labels.assign(out.states.size(),
                    std::vector<bool>(out.aps.size(), false));
  out.transition.resize(out.states.size() * pc);
  for (std::size_t i = 0; i < shells.size(); ++i) {
    int s = static_cast<int>(shells[i] / pc);
    std::vector<int> acts = g.profile_decode(shells[i] % pc);
    for (int a = 0; a < base_aps; ++a)
      out.labels[i][a] = g.labels[s][a];
    for (int j = 0; j < g.num_agents(); ++j)
      out.labels[i][base_aps + j * g.num_actions() + acts[j]] = true;
    out.labels[i][base_aps + act_aps + static_cast<int>(i)] = true;
    for (std::size_t q = 0; q < pc; ++q) {
      std::size_t next = static_cast<std::size_t>(g.step(s, q)) * pc + q;
      out.transition[i * pc + q] = shell_index.at(next);
    }
  }
  out.reindex();

  // Lifted observations: shells are related iff their base states are; the
  // recorded profile and the fresh APs stay invisible.
  ObservationFamily out_fam;
  out_fam.observations = fam.observations;
  out_fam.blocks.resize(fam.num_observations());
  for (int o = 0; o < fam.num_observations(); ++o) {
    std::vector<std::vector<int>> lifted(fam.blocks[o].size());
    for (std::size_t i = 0; i < shells.size(); ++i) {
      int s = static_cast<int>(shells[i] / pc);
      lifted[fam.block_of[o][s]].push_back(static_cast<int>(i));
    }
    for (auto& block : lifted)
      if (!block.empty())
        out_fam.blocks[o].push_back(std::move(block));
  }
  out_fam.rebuild(out.num_states());

  cert.is_il = true;
  cert.is_ar = true;

  CgsDocument doc;
  doc.cgs = std::move(out);
  doc.fam = std::move(out_fam);
  doc.cert = std::move(cert);
  return doc;
}

} // namespace slhyper
