#include <doctest.h>

#include "slhyper/checker.hpp"
#include "slhyper/error.hpp"
#include "slhyper/generator.hpp"
#include "slhyper/ilar.hpp"
#include "slhyper/parser.hpp"

#include <set>

using namespace slhyper;

TEST_CASE("injective labeling detection") {
  CgsDocument doc = random_instance(1, {2, 1, 2, 1, 1});
  doc.cgs.labels = {{true}, {false}};
  CHECK(is_injectively_labeled(doc.cgs));
  doc.cgs.labels = {{true}, {true}};
  CHECK_FALSE(is_injectively_labeled(doc.cgs));
}

TEST_CASE("action recording detection") {
  CgsDocument doc = random_instance(2, {2, 1, 2, 1, 1});
  IlArCertificate empty;
  CHECK_FALSE(is_action_recording(doc.cgs, empty)); // no action APs at all

  CgsDocument out = make_il_ar(doc.cgs, doc.fam);
  CHECK(is_action_recording(out.cgs, *out.cert));

  // flip one recorded-action label and the check fails
  CgsDocument broken = out;
  int ap = broken.cgs.ap_index(broken.cert->action_ap[0][0]);
  int target = broken.cgs.step(0, 0);
  broken.cgs.labels[target][ap] = !broken.cgs.labels[target][ap];
  CHECK_FALSE(is_action_recording(broken.cgs, *broken.cert));

  IlArCertificate bogus = *out.cert;
  bogus.action_ap[0][0] = "no_such_ap";
  CHECK_THROWS_AS(is_action_recording(out.cgs, bogus), Error);
}

TEST_CASE("transform output is IL and AR with the expected shape") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    CgsDocument doc = random_instance(seed, {3, 2, 2, 2, 2});
    CgsDocument out = make_il_ar(doc.cgs, doc.fam);
    CHECK(is_injectively_labeled(out.cgs));
    CHECK(is_action_recording(out.cgs, *out.cert));
    CHECK(already_il_ar(out));
    // at most |S| * |A|^n shells, all reachable
    CHECK(out.cgs.num_states() <= 3 * 4);
    CHECK(out.cgs.num_aps() ==
          doc.cgs.num_aps() + 2 * 2 + out.cgs.num_states());
    CHECK_NOTHROW(validate_cgs(out));
    // serialization round-trips the certificate
    CgsDocument back = load_cgs_json(save_cgs_json(out));
    CHECK(back.cert.has_value());
    CHECK(already_il_ar(back));
  }
}

TEST_CASE("every product shell is reachable and steps like the base") {
  CgsDocument doc = random_instance(5, {2, 2, 2, 1, 1});
  const Cgs& g = doc.cgs;
  CgsDocument out = make_il_ar(g, doc.fam);
  std::size_t pc = g.profile_count();
  // initial shell records the first declared action for every agent
  CHECK(out.cgs.states[out.cgs.initial] == g.states[g.initial] + "#m0#m0");
  for (int s = 0; s < out.cgs.num_states(); ++s) {
    for (std::size_t p = 0; p < pc; ++p) {
      int t = out.cgs.step(s, p);
      // recorded profile of the target equals the profile played
      auto acts = out.cgs.profile_decode(p);
      for (int i = 0; i < out.cgs.num_agents(); ++i) {
        int ap = out.cgs.ap_index(out.cert->action_ap[i][acts[i]]);
        CHECK(out.cgs.labels[t][ap]);
      }
    }
  }
}

TEST_CASE("lifted observations ignore the recorded profile") {
  CgsDocument doc = random_instance(6, {3, 1, 2, 1, 1});
  doc.fam.blocks = {{{0, 1}, {2}}};
  doc.fam.rebuild(3);
  CgsDocument out = make_il_ar(doc.cgs, doc.fam);
  for (int s1 = 0; s1 < out.cgs.num_states(); ++s1) {
    for (int s2 = 0; s2 < out.cgs.num_states(); ++s2) {
      // base state is the name prefix before '#'
      auto base = [&](int s) {
        const std::string& n = out.cgs.states[s];
        return doc.cgs.state_index(n.substr(0, n.find('#')));
      };
      CHECK(out.fam.related(0, s1, s2) ==
            doc.fam.related(0, base(s1), base(s2)));
    }
  }
}

TEST_CASE("fresh AP collisions are reported") {
  CgsDocument doc = random_instance(7, {1, 1, 1, 1, 1});
  doc.cgs.aps[0] = "act_a1_m0";
  doc.cgs.reindex();
  CHECK_THROWS_WITH_AS(make_il_ar(doc.cgs, doc.fam), doctest::Contains("collides"),
                       Error);
}

TEST_CASE("semantics are preserved by the transform (spot check)") {
  for (std::uint64_t seed = 40; seed < 52; ++seed) {
    CgsDocument doc = random_instance(seed, {2, 1, 2, 2, 1});
    CgsDocument out = make_il_ar(doc.cgs, doc.fam);
    SliiPtr phi = random_slii_formula(seed, doc, 2, 2);
    CHECK(check_slii(doc.cgs, doc.fam, phi, 1) ==
          check_slii(out.cgs, out.fam, phi, 1));
  }
}
