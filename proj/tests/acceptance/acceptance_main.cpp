// Acceptance harness: one line per criterion, non-zero exit on any failure.

#include "slhyper/checker.hpp"
#include "slhyper/formula.hpp"
#include "slhyper/generator.hpp"
#include "slhyper/hypersl_to_slii.hpp"
#include "slhyper/ilar.hpp"
#include "slhyper/parser.hpp"
#include "slhyper/slii_to_hypersl.hpp"
#include "slhyper/verify.hpp"

#include "../support.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <vector>

using namespace slhyper;
using namespace slhyper::testing;

namespace {

int failures = 0;

double now_seconds() {
  using clock = std::chrono::steady_clock;
  return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
}

void report(int criterion, bool pass, const std::string& what, double secs) {
  std::printf("criterion %2d: %s  %s  (%.1fs)\n", criterion, pass ? "PASS" : "FAIL",
              what.c_str(), secs);
  std::fflush(stdout);
  if (!pass)
    ++failures;
}

struct PoolEntryS {
  CgsDocument doc;
  SliiPtr phi;
};
struct PoolEntryH {
  CgsDocument doc;
  HyperPtr phi;
};

// Curated size mix: the checker's cost is exponential in the window table, so
// the larger bases get shallower quantifier prefixes.
std::vector<PoolEntryS> make_pool_s(int count) {
  std::vector<PoolEntryS> pool;
  for (int i = 0; i < count; ++i) {
    std::uint64_t seed = 1000 + static_cast<std::uint64_t>(i);
    GenSizes sizes;
    int qdepth = 2;
    switch (i % 10) {
    case 0: case 1: case 2:
      sizes = {1, 1, 2, 2, 2};
      break;
    case 3: case 4: case 5:
      sizes = {2, 1, 2, 2, 2};
      break;
    case 6: case 7:
      sizes = {3, 1, 2, 2, 2};
      qdepth = 1;
      break;
    default:
      sizes = {1, 2, 2, 2, 1};
      qdepth = 1;
      break;
    }
    CgsDocument doc = random_instance(seed, sizes);
    pool.push_back({doc, random_slii_formula(seed, doc, qdepth, 2)});
  }
  return pool;
}

std::vector<PoolEntryH> make_pool_h(int count) {
  std::vector<PoolEntryH> pool;
  for (int i = 0; i < count; ++i) {
    std::uint64_t seed = 5000 + static_cast<std::uint64_t>(i);
    GenSizes sizes;
    int qdepth = 2, maxpv = 2;
    switch (i % 10) {
    case 0: case 1: case 2:
      sizes = {1, 1, 2, 2, 1};
      break;
    case 3: case 4: case 5:
      sizes = {2, 1, 2, 2, 1};
      break;
    case 6: case 7:
      sizes = {3, 1, 2, 2, 1};
      qdepth = 1;
      maxpv = 1;
      break;
    default:
      sizes = {1, 2, 2, 2, 1};
      qdepth = 1;
      maxpv = 1;
      break;
    }
    CgsDocument doc = random_instance(seed, sizes);
    pool.push_back({doc, random_hypersl_formula(seed, doc, qdepth, 2, maxpv)});
  }
  return pool;
}

void criterion_1() {
  double t0 = now_seconds();
  bool pass = true;
  std::string detail = "ind matches ~_o pointwise on 50 IL instances";
  for (int i = 0; i < 50 && pass; ++i) {
    GenSizes sizes = (i % 2) ? GenSizes{3, 1, 2, 2, 2} : GenSizes{2, 1, 2, 2, 2};
    CgsDocument base = random_instance(100 + i, sizes);
    CgsDocument doc = make_il_ar(base.cgs, base.fam);
    const Cgs& g = doc.cgs;
    for (int o = 0; o < doc.fam.num_observations() && pass; ++o) {
      PathPtr ind = build_ind(g, doc.fam, o, kIndPathVar1, kIndPathVar2);
      for (int s1 = 0; s1 < g.num_states() && pass; ++s1) {
        for (int s2 = 0; s2 < g.num_states(); ++s2) {
          LassoTrace t;
          t.loop_start = 0;
          std::vector<bool> row(static_cast<std::size_t>(g.num_aps()) * 2);
          for (int a = 0; a < g.num_aps(); ++a) {
            row[a] = g.labels[s1][a];
            row[g.num_aps() + a] = g.labels[s2][a];
          }
          t.val = {row};
          bool got = eval_ltl_lasso(
              ind, t, [&](const std::string& ap, const std::string& path) {
                int a = g.ap_index(ap);
                return path == kIndPathVar1 ? a : g.num_aps() + a;
              });
          if (got != doc.fam.related(o, s1, s2)) {
            pass = false;
            detail = "mismatch on instance " + std::to_string(i) + " pair (" +
                     g.states[s1] + "," + g.states[s2] + ")";
            break;
          }
        }
      }
    }
  }
  double secs = now_seconds() - t0;
  report(1, pass && secs < 5.0, detail + (secs >= 5.0 ? " [over budget]" : ""), secs);
}

void criterion_2() {
  double t0 = now_seconds();
  bool pass = true;
  std::string detail = "IL/AR conformance x100, semantic preservation x50 at k in {1,2}";
  for (int i = 0; i < 100 && pass; ++i) {
    GenSizes sizes = (i % 2) ? GenSizes{3, 2, 2, 2, 2} : GenSizes{2, 1, 2, 2, 1};
    CgsDocument base = random_instance(200 + i, sizes);
    CgsDocument doc = make_il_ar(base.cgs, base.fam);
    if (!is_injectively_labeled(doc.cgs) || !is_action_recording(doc.cgs, *doc.cert)) {
      pass = false;
      detail = "IL/AR check failed on instance " + std::to_string(i);
    }
  }
  for (int i = 0; i < 50 && pass; ++i) {
    int k = (i % 2) + 1;
    GenSizes sizes;
    int qdepth;
    if (k == 1) {
      sizes = (i % 4 == 0) ? GenSizes{3, 2, 2, 2, 2} : GenSizes{2, 2, 2, 2, 2};
      qdepth = 2;
    } else {
      sizes = (i % 4 == 1) ? GenSizes{3, 1, 2, 2, 2} : GenSizes{2, 1, 2, 2, 2};
      qdepth = 1;
    }
    CgsDocument base = random_instance(300 + i, sizes);
    CgsDocument doc = make_il_ar(base.cgs, base.fam);
    SliiPtr phi = random_slii_formula(300 + i, base, qdepth, 2);
    bool before = check_slii(base.cgs, base.fam, phi, k);
    bool after = check_slii(doc.cgs, doc.fam, phi, k);
    if (before != after) {
      pass = false;
      detail = "preservation failed at k=" + std::to_string(k) + " on pair " +
               std::to_string(i) + ": " + print_slii(phi);
    }
  }
  double secs = now_seconds() - t0;
  report(2, pass && secs < 120.0, detail + (secs >= 120.0 ? " [over budget]" : ""), secs);
}

void criterion_3() {
  double t0 = now_seconds();
  bool pass = true;
  std::string detail = "self-composition counts and block structure x50";
  for (int i = 0; i < 50 && pass; ++i) {
    int m = (i % 3) + 1;
    GenSizes sizes{(i % 4) + 1, (i % 2) + 1, 2, 2, 1};
    CgsDocument doc = random_instance(400 + i, sizes);
    std::vector<std::string> pv;
    for (int c = 0; c < m; ++c)
      pv.push_back("p" + std::to_string(c + 1));
    SelfComposition comp = self_compose(doc.cgs, pv);
    std::size_t s = static_cast<std::size_t>(doc.cgs.num_states());
    std::size_t want_states = 1;
    for (int c = 0; c < m; ++c)
      want_states *= s;
    pass = comp.cgs.num_states() == static_cast<int>(want_states) &&
           comp.cgs.num_agents() == doc.cgs.num_agents() * m &&
           comp.cgs.num_aps() == doc.cgs.num_aps() * m &&
           comp.fam.num_observations() == m;
    for (int o = 0; o < m && pass; ++o) {
      pass = comp.fam.blocks[o].size() == s;
      for (const auto& block : comp.fam.blocks[o])
        pass = pass && block.size() == want_states / s;
    }
    if (!pass)
      detail = "count mismatch on instance " + std::to_string(i);
  }
  report(3, pass, detail, now_seconds() - t0);
}

// Shared pool results so criteria 4/5/6/8/10 reuse the expensive runs.
std::vector<PoolEntryS> pool_s;
std::vector<PoolEntryH> pool_h;
std::vector<VerifyReport> reports_s;
std::vector<VerifyReport> reports_h;

void criterion_4() {
  double t0 = now_seconds();
  pool_s = make_pool_s(200);
  int disagreements = 0;
  std::string detail;
  for (std::size_t i = 0; i < pool_s.size(); ++i) {
    VerifyReport r = verify_s2h(pool_s[i].doc, pool_s[i].phi, 1);
    reports_s.push_back(r);
    if (!r.agree && ++disagreements == 1)
      detail = "first disagreement at entry " + std::to_string(i) + ": " + r.formula;
  }
  if (disagreements == 0)
    detail = "agreement on all 200 pairs";
  double secs = now_seconds() - t0;
  report(4, disagreements == 0 && secs < 1800.0, detail, secs);
}

void criterion_5() {
  double t0 = now_seconds();
  pool_h = make_pool_h(200);
  int disagreements = 0;
  std::string detail;
  for (std::size_t i = 0; i < pool_h.size(); ++i) {
    VerifyReport r = verify_h2s(pool_h[i].doc, pool_h[i].phi, 1, true);
    reports_h.push_back(r);
    if (!r.agree && ++disagreements == 1)
      detail = "first disagreement at entry " + std::to_string(i) + ": " + r.formula;
  }
  if (disagreements == 0)
    detail = "agreement on all 200 pairs";
  double secs = now_seconds() - t0;
  report(5, disagreements == 0 && secs < 1800.0, detail, secs);
}

void criterion_6() {
  double t0 = now_seconds();

  // Copy-the-opponent game: after the transform the single-state structure
  // records the last joint action, so a state-reading strategy can replay
  // the opponent's previous move while a strategy behind the blind
  // observation cannot. The formula asks x to copy y with one step of
  // delay, so the ii constraint is the only thing keeping the encoded side
  // honest.
  CgsDocument copycat_base = random_instance(12, {1, 2, 2, 1, 1});
  CgsDocument copycat = make_il_ar(copycat_base.cgs, copycat_base.fam);
  SliiPtr copy_phi = parse_slii(
      "exists x:o1. forall y:o1. bind a1 x. bind a2 y. "
      "(G (act_a2_m1 -> X act_a1_m1)) & (G (act_a2_m0 -> X act_a1_m0))");
  bool drop_ii = !verify_s2h(copycat, copy_phi, 1, S2hMutation::DropIiInExists).agree;

  CgsDocument chain = chain_game(2, false);
  HyperPtr tied = parse_hypersl(
      "forall x. [p1:(a1=x); p2:(a1=x)] G (goal@p1 <-> goal@p2)");
  bool drop_eq =
      !verify_h2s(chain, tied, 1, true, H2sMutation::DropEqConjunct).agree;
  HyperPtr one_sided =
      parse_hypersl("exists x. forall z. [p1:(a1=x); p2:(a1=z)] F goal@p1");
  bool wrong_pv =
      !verify_h2s(chain, one_sided, 1, true, H2sMutation::WrongAtomPathVar)
           .agree;

  std::string detail = std::string("mutations caught: drop-ii=") +
                       (drop_ii ? "yes" : "NO") + " drop-eq=" +
                       (drop_eq ? "yes" : "NO") + " wrong-pathvar=" +
                       (wrong_pv ? "yes" : "NO");
  report(6, drop_ii && drop_eq && wrong_pv, detail, now_seconds() - t0);
}

void criterion_7() {
  double t0 = now_seconds();
  CgsDocument base0 = random_instance(9, {1, 2, 2, 2, 1});
  base0.cgs.aps = {"a", "b"};
  base0.cgs.reindex();
  CgsDocument doc = make_il_ar(base0.cgs, base0.fam);
  HyperPtr phi = parse_hypersl(
      "exists x. exists y. forall z. [p1:(a1=x,a2=y); p2:(a1=z,a2=x)] "
      "G (a@p1 -> b@p2)");
  auto [comp, out] = translate_hypersl(phi, doc.cgs, *doc.cert, true);

  SliiPtr body = s_path(p_globally(p_implies(p_atom("a@p1"), p_atom("b@p2"))));
  body = s_bind("a1@p1", "x@p1",
                s_bind("a2@p1", "y@p1",
                       s_bind("a1@p2", "z@p2", s_bind("a2@p2", "x@p2", body))));
  SliiPtr eq = build_eq(comp, doc.cgs, *doc.cert, "x", "p1", "p2");
  SliiPtr expect = s_exists(
      "x@p1", "o@p1",
      s_exists("x@p2", "o@p2",
               s_and(eq, s_exists("y@p1", "o@p1",
                                  s_forall("z@p2", "o@p2", body)))));
  bool pass = slii_equal(canonicalize_slii(out), canonicalize_slii(expect));
  report(7, pass, "worked-example encoding matches up to canonical binder order",
         now_seconds() - t0);
}

void criterion_8() {
  double t0 = now_seconds();
  const double kSizeConstant = 8.0;
  double worst_s = 0, worst_h = 0;
  bool counts_ok = true;
  for (const auto& entry : pool_s) {
    CgsDocument doc = make_il_ar(entry.doc.cgs, entry.doc.fam);
    S2hSizeReport r = size_report_s2h(entry.phi, doc.cgs, doc.fam, *doc.cert);
    worst_s = std::max(worst_s, static_cast<double>(r.output_size) /
                                    static_cast<double>(r.bound));
  }
  for (const auto& entry : pool_h) {
    CgsDocument doc = make_il_ar(entry.doc.cgs, entry.doc.fam);
    H2sSizeReport r = size_report_h2s(entry.phi, doc.cgs, *doc.cert);
    worst_h = std::max(worst_h, static_cast<double>(r.output_size) /
                                    static_cast<double>(r.bound));
    H2sStats stats;
    translate_hypersl(entry.phi, doc.cgs, *doc.cert, false, H2sMutation::None,
                      &stats);
    std::size_t m = hyper_path_vars(entry.phi).size();
    std::size_t n = static_cast<std::size_t>(doc.cgs.num_agents());
    for (std::size_t c : stats.eq_per_quantifier)
      counts_ok = counts_ok && c == m * m;
    for (std::size_t c : stats.bindings_per_body)
      counts_ok = counts_ok && c == m * n;
  }
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "max size/bound: s2h %.3f, h2s %.3f (C=%.1f); eq=|V|^2 and "
                "binds=|V|*n %s",
                worst_s, worst_h, kSizeConstant, counts_ok ? "exact" : "VIOLATED");
  report(8, counts_ok && worst_s <= kSizeConstant && worst_h <= kSizeConstant, buf,
         now_seconds() - t0);
}

void criterion_9() {
  double t0 = now_seconds();
  std::mt19937_64 rng(424242);
  std::vector<std::pair<std::string, std::string>> atoms = {{"a", ""}, {"b", ""}, {"c", ""}};
  auto atom_id = [](const std::string& ap, const std::string&) {
    return ap == "a" ? 0 : ap == "b" ? 1 : 2;
  };
  int bad = 0, decided = 0;
  for (int round = 0; round < 1000; ++round) {
    PathPtr psi = random_path_formula(rng, atoms, 4, 14);
    LassoTrace t;
    std::size_t stem = rng() % 4, loop = 1 + rng() % 4;
    t.loop_start = static_cast<int>(stem);
    for (std::size_t i = 0; i < stem + loop; ++i)
      t.val.push_back({(rng() & 1) != 0, (rng() & 1) != 0, (rng() & 1) != 0});
    bool exact = eval_ltl_lasso(psi, t, atom_id);
    std::size_t horizon = stem + 2 * loop * (temporal_depth(psi) + 1);
    Tv bounded = bounded_eval(psi, unroll(t, horizon), atom_id, 0);
    if (bounded != Tv::Unknown) {
      ++decided;
      if ((bounded == Tv::True) != exact)
        ++bad;
    }
    if (eval_ltl_lasso(psi, rotate_into_stem(t), atom_id) != exact)
      ++bad;
    if (eval_ltl_lasso(psi, double_loop(t), atom_id) != exact)
      ++bad;
  }
  double secs = now_seconds() - t0;
  char buf[120];
  std::snprintf(buf, sizeof(buf),
                "lasso evaluator vs bounded oracle: %d decided, %d failures", decided,
                bad);
  report(9, bad == 0 && decided > 100 && secs < 30.0, buf, secs);
}

void criterion_10() {
  double t0 = now_seconds();
  int bad = 0;
  for (const auto& entry : pool_s) {
    CgsDocument doc = make_il_ar(entry.doc.cgs, entry.doc.fam);
    if (check_slii(doc.cgs, doc.fam, entry.phi, 1) ==
        check_slii(doc.cgs, doc.fam, negate_slii(entry.phi), 1))
      ++bad;
  }
  for (const auto& entry : pool_h) {
    CgsDocument doc = make_il_ar(entry.doc.cgs, entry.doc.fam);
    if (check_hypersl(doc.cgs, entry.phi, 1) ==
        check_hypersl(doc.cgs, negate_hypersl(entry.phi), 1))
      ++bad;
  }
  report(10, bad == 0,
         "negation flips the verdict on all pooled formulas (" +
             std::to_string(bad) + " violations)",
         now_seconds() - t0);
}

} // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  std::printf("%s (%d failing)\n", failures == 0 ? "ALL CRITERIA PASS" : "FAILURES",
              failures);
  return failures == 0 ? 0 : 1;
}
