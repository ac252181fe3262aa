#pragma once

#include "slhyper/cgs.hpp"
#include "slhyper/formula.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace slhyper {

struct GenSizes {
  int states = 2;
  int agents = 1;
  int actions = 2;
  int aps = 2;
  int observations = 1;
};

/// Deterministic-per-seed random instance: uniform labels, uniform transition
/// targets, observation partitions sampled uniformly from all set partitions
/// of the state set.
CgsDocument random_instance(std::uint64_t seed, const GenSizes& sizes);

/// Uniform set partition of {0..n-1} via restricted growth strings; returned
/// as blocks in order of their smallest element.
std::vector<std::vector<int>> random_set_partition(std::mt19937_64& rng, int n);

/// Random path formula over the given atoms; temporal operators consume
/// `tdepth`, every constructor consumes the node budget.
PathPtr random_path_formula(std::mt19937_64& rng,
                            const std::vector<std::pair<std::string, std::string>>& atoms,
                            int tdepth, int budget = 12);

/// Random well-formed SL_ii formula for the instance: a quantifier prefix
/// (1..max_qdepth, random observations), then one or two leaves, each binding
/// every agent to a quantified variable and asserting a random path formula.
SliiPtr random_slii_formula(std::uint64_t seed, const CgsDocument& doc,
                            int max_qdepth, int max_tdepth);

/// Random well-formed HyperSL formula; every body uses the same `pathvars`
/// path variables (1..max_pathvars of them), so the formula's variable set is
/// predictable.
HyperPtr random_hypersl_formula(std::uint64_t seed, const CgsDocument& doc,
                                int max_qdepth, int max_tdepth, int max_pathvars);

} // namespace slhyper
