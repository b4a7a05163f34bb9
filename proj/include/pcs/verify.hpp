#pragma once

#include <vector>

#include "pcs/machine.hpp"

namespace pcs {

// Finite antichain of configs denoting its upward closure under config_leq.
struct UpwardClosedSet {
  std::vector<Config> basis;
};

// Drops dominated elements and orders the rest canonically.
UpwardClosedSet make_upward(std::vector<Config> basis);
bool upward_member(const UpwardClosedSet& set, const Config& c);

// Minimal predecessor basis of the upward closure of `target` through one
// reliable application of rules()[rule].  Empty when rule.to differs from the
// target state or no predecessor exists.
std::vector<Config> pre_basis(const Machine& m, int rule, const Config& target);

struct Verdict {
  bool answer = false;

  enum class CertKind { None, Run, Basis, Domination, Deadlock } cert = CertKind::None;
  Run run;                    // Run / Deadlock / Domination path
  std::vector<Config> basis;  // Basis (saturated backward fixpoint)
  size_t dom_i = 0, dom_j = 0;  // Domination: config positions in run
};

// Coverability: can c0 reach the upward closure of target under the
// internal-superseding semantics?  Positive verdicts carry a replayable
// witness run, negative ones the saturated predecessor basis.
Verdict cover(const Machine& m, const Config& c0, const UpwardClosedSet& target);

// Exact reachability; coincides with coverability here, and the witness is
// extended by internal steps down to d itself.
Verdict reach_exact(const Machine& m, const Config& c0, const Config& d);

// Do all runs from c0 terminate?  Negative verdicts carry a run with an
// ancestor domination pair.
Verdict terminate(const Machine& m, const Config& c0);

// Do all maximal runs from c0 visit one of the goal control states?
Verdict inevitable_states(const Machine& m, const Config& c0, const std::vector<int>& goals);

// Internal-superseding steps from `from` down to `to`; requires
// config_leq(to, from).
std::vector<Step> internal_steps_down(const Machine& m, const Config& from, const Config& to);

// Rearrange an internal-superseding run from an empty-channel start into a
// write-superseding run with the same endpoints: superseding steps commute
// leftwards until each sits right after the write it follows, then every
// write plus its superseding block folds into one superseding write.
Run normalize_run(const Machine& m, const Run& run);

}  // namespace pcs
