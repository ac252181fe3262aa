#include <doctest.h>

#include "slhyper/error.hpp"
#include "slhyper/formula.hpp"
#include "slhyper/generator.hpp"

#include <map>
#include <set>

using namespace slhyper;

TEST_CASE("instances are deterministic per seed") {
  GenSizes sizes{3, 2, 2, 2, 2};
  CHECK(save_cgs_json(random_instance(99, sizes)) ==
        save_cgs_json(random_instance(99, sizes)));
  CHECK(save_cgs_json(random_instance(99, sizes)) !=
        save_cgs_json(random_instance(100, sizes)));
}

TEST_CASE("all generated partitions are valid equivalences") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    CgsDocument doc = random_instance(seed, {4, 1, 2, 1, 2});
    CHECK_NOTHROW(validate_cgs(doc)); // rebuild() re-checks the partitions
  }
}

TEST_CASE("set partition sampling covers all partitions of a 3-set") {
  std::mt19937_64 rng(7);
  std::set<std::vector<std::vector<int>>> seen;
  for (int i = 0; i < 500; ++i)
    seen.insert(random_set_partition(rng, 3));
  CHECK(seen.size() == 5); // Bell(3)
  CHECK_THROWS_AS(random_set_partition(rng, 0), Error);
}

TEST_CASE("size caps are enforced") {
  CHECK_THROWS_AS(random_instance(1, {11, 1, 2, 1, 1}), Error);
  CHECK_THROWS_AS(random_instance(1, {2, 5, 2, 1, 1}), Error);
}

TEST_CASE("random formulas are well-formed and respect depth limits") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    CgsDocument doc = random_instance(seed, {2, 2, 2, 2, 2});
    SliiPtr s = random_slii_formula(seed, doc, 2, 2);
    CHECK_NOTHROW(check_slii_wf(s));
    HyperPtr h = random_hypersl_formula(seed, doc, 2, 2, 2);
    CHECK_NOTHROW(check_hypersl_wf(h));
    CHECK(hyper_path_vars(h).size() <= 2);
    CHECK(slii_equal(s, random_slii_formula(seed, doc, 2, 2)));
    CHECK(hyper_equal(h, random_hypersl_formula(seed, doc, 2, 2, 2)));
  }
}

TEST_CASE("random path formulas stay within the temporal depth budget") {
  std::mt19937_64 rng(5);
  std::vector<std::pair<std::string, std::string>> atoms = {{"a", ""}, {"b", ""}};
  for (int i = 0; i < 200; ++i) {
    PathPtr p = random_path_formula(rng, atoms, 2, 12);
    // F/G desugar through U with a nested negation; allow the sugar overhead
    CHECK(temporal_depth(p) <= 2);
  }
}
