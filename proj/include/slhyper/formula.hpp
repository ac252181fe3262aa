#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace slhyper {

// ---------------------------------------------------------------------------
// LTL path formulas.
//
// Only the core constructors (true, atom, !, &, X, U) survive construction;
// the sugared operators (|, ->, <->, F, G, W, false) are desugared by the
// factory functions below. Atoms carry an optional path variable: it is empty
// in SL_ii path formulas and mandatory in HyperSL path formulas.
// ---------------------------------------------------------------------------

enum class PathOp { True, Atom, Not, And, Next, Until };

struct PathFormula;
using PathPtr = std::shared_ptr<const PathFormula>;

struct PathFormula {
  PathOp op;
  std::string ap;   // Atom only
  std::string path; // Atom only; "" for SL_ii atoms
  PathPtr lhs;
  PathPtr rhs;
};

PathPtr p_true();
PathPtr p_atom(std::string ap, std::string path = "");
PathPtr p_not(PathPtr a); // eliminates double negation
PathPtr p_and(PathPtr a, PathPtr b);
PathPtr p_next(PathPtr a);
PathPtr p_until(PathPtr a, PathPtr b);

PathPtr p_false();                      // !true
PathPtr p_or(PathPtr a, PathPtr b);     // !(!a & !b)
PathPtr p_implies(PathPtr a, PathPtr b);
PathPtr p_iff(PathPtr a, PathPtr b);
PathPtr p_niff(PathPtr a, PathPtr b);   // a <-/-> b
PathPtr p_eventually(PathPtr a);        // true U a
PathPtr p_globally(PathPtr a);          // !(true U !a)
PathPtr p_weak_until(PathPtr a, PathPtr b); // (a U b) | !(true U !a)

// Empty conjunction is true, empty disjunction is false.
PathPtr p_and_all(const std::vector<PathPtr>& xs);
PathPtr p_or_all(const std::vector<PathPtr>& xs);

bool path_equal(const PathPtr& a, const PathPtr& b);
std::size_t path_size(const PathPtr& a);
int temporal_depth(const PathPtr& a);
std::string print_path(const PathPtr& a);

// ---------------------------------------------------------------------------
// SL_ii state formulas.
// ---------------------------------------------------------------------------

enum class SliiOp { Path, And, Or, Forall, Exists, Bind };

struct SlIiFormula;
using SliiPtr = std::shared_ptr<const SlIiFormula>;

struct SlIiFormula {
  SliiOp op;
  PathPtr path;      // Path
  SliiPtr lhs;       // And/Or
  SliiPtr rhs;       // And/Or
  SliiPtr sub;       // Forall/Exists/Bind
  std::string var;   // Forall/Exists/Bind
  std::string obs;   // Forall/Exists
  std::string agent; // Bind
};

SliiPtr s_path(PathPtr psi);
// State-level connectives of two plain path formulas collapse into a single
// path formula; the two readings coincide since both operands are evaluated
// on the same play.
SliiPtr s_and(SliiPtr a, SliiPtr b);
SliiPtr s_or(SliiPtr a, SliiPtr b);
SliiPtr s_and_all(const std::vector<SliiPtr>& xs); // empty -> path true
SliiPtr s_or_all(const std::vector<SliiPtr>& xs);  // empty -> path false
SliiPtr s_forall(std::string var, std::string obs, SliiPtr sub);
SliiPtr s_exists(std::string var, std::string obs, SliiPtr sub);
SliiPtr s_bind(std::string agent, std::string var, SliiPtr sub);

bool slii_equal(const SliiPtr& a, const SliiPtr& b);
std::size_t slii_size(const SliiPtr& a);
std::string print_slii(const SliiPtr& a);

/// Dual of a state formula: swaps forall/exists and &/|, keeps bindings,
/// negates path bodies. The grammar has no state-level negation, so this is
/// how implications between state formulas are materialized.
SliiPtr negate_slii(const SliiPtr& a);

/// Strategy variables used (in binds or quantified subformulas) but not bound
/// by a quantifier within the formula itself, in first-use order.
std::vector<std::string> slii_free_vars(const SliiPtr& a);

/// Throws Error on unbound strategy variables or hyper atoms in path bodies.
void check_slii_wf(const SliiPtr& a);

/// Normal form used for structural comparison: conjunction/disjunction
/// operands that do not mention a neighbouring quantifier's variable let the
/// quantifier float outward, e.g. eq & (exists y. ...) == exists y. eq & ...
SliiPtr canonicalize_slii(const SliiPtr& a);

// ---------------------------------------------------------------------------
// HyperSL state formulas.
// ---------------------------------------------------------------------------

enum class HyperOp { Forall, Exists, And, Or, Body };

struct HyperSlFormula;
using HyperPtr = std::shared_ptr<const HyperSlFormula>;

/// One path binding pi_k : (agent -> strategy variable) of a body.
struct HyperProfile {
  std::string pathvar;
  std::vector<std::pair<std::string, std::string>> bind; // (agent, var)
};

struct HyperSlFormula {
  HyperOp op;
  std::string var; // Forall/Exists
  HyperPtr lhs;    // And/Or
  HyperPtr rhs;    // And/Or
  HyperPtr sub;    // Forall/Exists
  PathPtr path;                       // Body
  std::vector<HyperProfile> profiles; // Body
};

HyperPtr h_forall(std::string var, HyperPtr sub);
HyperPtr h_exists(std::string var, HyperPtr sub);
HyperPtr h_and(HyperPtr a, HyperPtr b);
HyperPtr h_or(HyperPtr a, HyperPtr b);
HyperPtr h_and_all(const std::vector<HyperPtr>& xs);
HyperPtr h_or_all(const std::vector<HyperPtr>& xs);
HyperPtr h_body(PathPtr psi, std::vector<HyperProfile> profiles);

bool hyper_equal(const HyperPtr& a, const HyperPtr& b);
std::size_t hyper_size(const HyperPtr& a);
std::string print_hypersl(const HyperPtr& a);
HyperPtr negate_hypersl(const HyperPtr& a);
std::vector<std::string> hyper_free_vars(const HyperPtr& a);

/// Path variables occurring anywhere in the formula, in first-use order.
std::vector<std::string> hyper_path_vars(const HyperPtr& a);

/// Throws Error on unbound variables, duplicate path variables in a body,
/// atoms referencing a path variable not bound by the body, profiles whose
/// agent sets differ across the formula, or atoms missing a path variable.
void check_hypersl_wf(const HyperPtr& a);

// Canonical JSON trees for tooling (serialized via nlohmann in formula.cpp).
std::string path_to_json(const PathPtr& a);
std::string slii_to_json(const SliiPtr& a);
std::string hypersl_to_json(const HyperPtr& a);

} // namespace slhyper
