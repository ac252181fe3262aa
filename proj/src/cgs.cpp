#include "slhyper/cgs.hpp"
#include "slhyper/error.hpp"

#include <algorithm>
#include <cstdio>

#include <json.hpp>

namespace slhyper {

using nlohmann::ordered_json;

std::size_t Cgs::profile_count() const {
  std::size_t n = 1;
  for (int i = 0; i < num_agents(); ++i)
    n *= static_cast<std::size_t>(num_actions());
  return n;
}

std::size_t Cgs::profile_index(const std::vector<int>& action_per_agent) const {
  std::size_t idx = 0;
  for (int i = 0; i < num_agents(); ++i)
    idx = idx * num_actions() + action_per_agent[i];
  return idx;
}

std::vector<int> Cgs::profile_decode(std::size_t idx) const {
  std::vector<int> out(num_agents());
  for (int i = num_agents() - 1; i >= 0; --i) {
    out[i] = static_cast<int>(idx % num_actions());
    idx /= num_actions();
  }
  return out;
}

std::vector<int> Cgs::label_set(int s) const {
  std::vector<int> out;
  for (int a = 0; a < num_aps(); ++a)
    if (labels[s][a])
      out.push_back(a);
  return out;
}

namespace {

int lookup(const std::unordered_map<std::string, int>& m, const std::string& id) {
  auto it = m.find(id);
  return it == m.end() ? -1 : it->second;
}

void build_index(const std::vector<std::string>& ids, const char* what,
                 std::unordered_map<std::string, int>& out) {
  out.clear();
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (!out.emplace(ids[i], static_cast<int>(i)).second)
      throw Error(std::string("duplicate ") + what + " identifier '" + ids[i] + "'");
  }
}

} // namespace

int Cgs::state_index(const std::string& id) const { return lookup(state_idx_, id); }
int Cgs::agent_index(const std::string& id) const { return lookup(agent_idx_, id); }
int Cgs::action_index(const std::string& id) const { return lookup(action_idx_, id); }
int Cgs::ap_index(const std::string& id) const { return lookup(ap_idx_, id); }

void Cgs::reindex() {
  build_index(states, "state", state_idx_);
  build_index(agents, "agent", agent_idx_);
  build_index(actions, "action", action_idx_);
  build_index(aps, "atomic proposition", ap_idx_);
}

int ObservationFamily::obs_index(const std::string& id) const {
  for (std::size_t i = 0; i < observations.size(); ++i)
    if (observations[i] == id)
      return static_cast<int>(i);
  return -1;
}

void ObservationFamily::rebuild(int num_states) {
  block_of.assign(observations.size(), std::vector<int>(num_states, -1));
  for (std::size_t o = 0; o < observations.size(); ++o) {
    for (std::size_t b = 0; b < blocks[o].size(); ++b) {
      for (int s : blocks[o][b]) {
        if (s < 0 || s >= num_states)
          throw Error("observation '" + observations[o] + "' references an unknown state");
        if (block_of[o][s] != -1)
          throw Error("observation '" + observations[o] + "' is not a partition: state listed twice");
        block_of[o][s] = static_cast<int>(b);
      }
    }
    for (int s = 0; s < num_states; ++s)
      if (block_of[o][s] == -1)
        throw Error("observation '" + observations[o] + "' is not a partition: a state is not covered");
  }
}

void validate_cgs(const CgsDocument& doc) {
  const Cgs& g = doc.cgs;
  if (g.states.empty())
    throw Error("a CGS needs at least one state");
  if (g.agents.empty())
    throw Error("a CGS needs at least one agent");
  if (g.actions.empty())
    throw Error("a CGS needs at least one action");
  if (g.initial < 0 || g.initial >= g.num_states())
    throw Error("initial state out of range");
  if (g.labels.size() != g.states.size())
    throw Error("labeling must cover every state");
  for (const auto& row : g.labels)
    if (row.size() != g.aps.size())
      throw Error("label row has the wrong width");
  std::size_t want = g.states.size() * g.profile_count();
  if (g.transition.size() != want)
    throw Error("non-total transition: expected " + std::to_string(want) + " entries, found " +
                std::to_string(g.transition.size()));
  for (int t : g.transition)
    if (t < 0 || t >= g.num_states())
      throw Error("transition target out of range");
  if (doc.fam.blocks.size() != doc.fam.observations.size())
    throw Error("observation family is inconsistent");
  ObservationFamily fam = doc.fam;
  fam.rebuild(g.num_states()); // throws on non-partitions
}

CgsDocument load_cgs_json(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const ordered_json::parse_error& e) {
    throw Error(std::string("malformed JSON: ") + e.what());
  }
  auto need = [&](const char* field) -> const ordered_json& {
    if (!j.contains(field))
      throw Error(std::string("missing field '") + field + "'");
    return j.at(field);
  };

  CgsDocument doc;
  Cgs& g = doc.cgs;
  try {
    for (const auto& a : need("agents"))
      g.agents.push_back(a.get<std::string>());
    for (const auto& a : need("actions"))
      g.actions.push_back(a.get<std::string>());
    for (const auto& a : need("aps"))
      g.aps.push_back(a.get<std::string>());
    for (const auto& st : need("states"))
      g.states.push_back(st.at("id").get<std::string>());
    g.reindex();

    g.labels.assign(g.states.size(), std::vector<bool>(g.aps.size(), false));
    int si = 0;
    for (const auto& st : need("states")) {
      for (const auto& l : st.value("labels", ordered_json::array())) {
        int ap = g.ap_index(l.get<std::string>());
        if (ap < 0)
          throw Error("unknown atomic proposition '" + l.get<std::string>() + "' in labels of state '" +
                      g.states[si] + "'");
        g.labels[si][ap] = true;
      }
      ++si;
    }

    std::string init = need("initial").get<std::string>();
    g.initial = g.state_index(init);
    if (g.initial < 0)
      throw Error("unknown initial state '" + init + "'");

    g.transition.assign(g.states.size() * g.profile_count(), -1);
    for (const auto& tr : need("transitions")) {
      std::string from = tr.at("from").get<std::string>();
      std::string to = tr.at("to").get<std::string>();
      int fi = g.state_index(from);
      int ti = g.state_index(to);
      if (fi < 0)
        throw Error("unknown state '" + from + "' in transition");
      if (ti < 0)
        throw Error("unknown state '" + to + "' in transition");
      const auto& prof = tr.at("profile");
      std::vector<int> act(g.num_agents(), -1);
      for (auto it = prof.begin(); it != prof.end(); ++it) {
        int ai = g.agent_index(it.key());
        if (ai < 0)
          throw Error("unknown agent '" + it.key() + "' in transition profile");
        int ci = g.action_index(it.value().get<std::string>());
        if (ci < 0)
          throw Error("unknown action '" + it.value().get<std::string>() + "' in transition profile");
        act[ai] = ci;
      }
      for (int i = 0; i < g.num_agents(); ++i)
        if (act[i] < 0)
          throw Error("transition profile from '" + from + "' misses agent '" + g.agents[i] + "'");
      std::size_t pi = g.profile_index(act);
      std::size_t slot = fi * g.profile_count() + pi;
      if (g.transition[slot] != -1)
        throw Error("duplicate transition entry for state '" + from + "'");
      g.transition[slot] = ti;
    }
    for (std::size_t s = 0; s < g.states.size(); ++s) {
      for (std::size_t p = 0; p < g.profile_count(); ++p) {
        if (g.transition[s * g.profile_count() + p] == -1) {
          auto acts = g.profile_decode(p);
          std::string prof;
          for (int i = 0; i < g.num_agents(); ++i)
            prof += (i ? "," : "") + g.agents[i] + "=" + g.actions[acts[i]];
          throw Error("non-total transition: missing entry for state '" + g.states[s] +
                      "', profile {" + prof + "}");
        }
      }
    }

    for (auto it = need("observations").begin(); it != need("observations").end(); ++it) {
      doc.fam.observations.push_back(it.key());
      std::vector<std::vector<int>> obs_blocks;
      for (const auto& block : it.value()) {
        std::vector<int> b;
        for (const auto& sid : block) {
          int s = g.state_index(sid.get<std::string>());
          if (s < 0)
            throw Error("unknown state '" + sid.get<std::string>() + "' in observation '" +
                        it.key() + "'");
          b.push_back(s);
        }
        obs_blocks.push_back(std::move(b));
      }
      doc.fam.blocks.push_back(std::move(obs_blocks));
    }
    doc.fam.rebuild(g.num_states());

    if (j.contains("certificate")) {
      const auto& c = j.at("certificate");
      IlArCertificate cert;
      cert.is_il = c.value("is_il", false);
      cert.is_ar = c.value("is_ar", false);
      cert.action_ap.assign(g.num_agents(),
                            std::vector<std::string>(g.num_actions()));
      for (auto it = c.at("action_aps").begin(); it != c.at("action_aps").end(); ++it) {
        int ai = g.agent_index(it.key());
        if (ai < 0)
          throw Error("certificate references unknown agent '" + it.key() + "'");
        for (auto jt = it.value().begin(); jt != it.value().end(); ++jt) {
          int ci = g.action_index(jt.key());
          if (ci < 0)
            throw Error("certificate references unknown action '" + jt.key() + "'");
          std::string ap = jt.value().get<std::string>();
          if (g.ap_index(ap) < 0)
            throw Error("certificate references unknown AP '" + ap + "'");
          cert.action_ap[ai][ci] = ap;
        }
      }
      for (const auto& ap : c.value("injectivity_aps", ordered_json::array())) {
        if (g.ap_index(ap.get<std::string>()) < 0)
          throw Error("certificate references unknown AP '" + ap.get<std::string>() + "'");
        cert.injectivity_aps.push_back(ap.get<std::string>());
      }
      doc.cert = std::move(cert);
    }
  } catch (const ordered_json::exception& e) {
    throw Error(std::string("malformed CGS document: ") + e.what());
  }

  validate_cgs(doc);
  return doc;
}

std::string save_cgs_json(const CgsDocument& doc) {
  const Cgs& g = doc.cgs;
  ordered_json j;
  ordered_json states = ordered_json::array();
  for (int s = 0; s < g.num_states(); ++s) {
    ordered_json labels = ordered_json::array();
    for (int a : g.label_set(s))
      labels.push_back(g.aps[a]);
    states.push_back({{"id", g.states[s]}, {"labels", labels}});
  }
  j["states"] = states;
  j["initial"] = g.states[g.initial];
  j["agents"] = g.agents;
  j["actions"] = g.actions;
  j["aps"] = g.aps;
  ordered_json trans = ordered_json::array();
  for (int s = 0; s < g.num_states(); ++s) {
    for (std::size_t p = 0; p < g.profile_count(); ++p) {
      auto acts = g.profile_decode(p);
      ordered_json prof = ordered_json::object();
      for (int i = 0; i < g.num_agents(); ++i)
        prof[g.agents[i]] = g.actions[acts[i]];
      trans.push_back({{"from", g.states[s]},
                       {"profile", prof},
                       {"to", g.states[g.step(s, p)]}});
    }
  }
  j["transitions"] = trans;
  ordered_json obs = ordered_json::object();
  for (int o = 0; o < doc.fam.num_observations(); ++o) {
    ordered_json blist = ordered_json::array();
    for (const auto& block : doc.fam.blocks[o]) {
      ordered_json b = ordered_json::array();
      for (int s : block)
        b.push_back(g.states[s]);
      blist.push_back(b);
    }
    obs[doc.fam.observations[o]] = blist;
  }
  j["observations"] = obs;
  if (doc.cert) {
    ordered_json aps_by_agent = ordered_json::object();
    for (int i = 0; i < g.num_agents(); ++i) {
      ordered_json m = ordered_json::object();
      for (int c = 0; c < g.num_actions(); ++c)
        m[g.actions[c]] = doc.cert->action_ap[i][c];
      aps_by_agent[g.agents[i]] = m;
    }
    j["certificate"] = {{"is_il", doc.cert->is_il},
                        {"is_ar", doc.cert->is_ar},
                        {"action_aps", aps_by_agent},
                        {"injectivity_aps", doc.cert->injectivity_aps}};
  }
  return j.dump(2) + "\n";
}

std::string input_digest(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

} // namespace slhyper
