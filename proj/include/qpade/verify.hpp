#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qpade/params.hpp"
#include "qpade/report.hpp"

namespace qpade {

// Per-sample check groups. Each solves every rational-approximation problem
// it needs at p and at the shifted points, so a singular draw retries the
// whole group.

// Series-side problem: linear pair, forced factors, evolution identities.
std::vector<CheckReport> verify_d5_sample(const ParamSet& p);

// Interpolation-side problem: main-direction evolution identities plus the
// linear pair in every applicable direction (m >= 1 required).
std::vector<CheckReport> verify_e6_sample(const ParamSet& p);

// Determinant/hypergeometric solution formulas (m >= 1 unlocks the shifted
// blocks; with m = 0 only the unshifted value formulas are checked).
std::vector<CheckReport> verify_solutions_sample(const ParamSet& p);

// Four-direction lattice: per-direction evolution equations, contiguity
// relations, and the parameter-tuple bridge to the reflection engine
// (m >= 1 and n >= 1).
std::vector<CheckReport> verify_directions_sample(const ParamSet& p);

// Non-exact spot check: numerator/denominator of the degree-(2,2) series
// approximant against truncated infinite products in double precision.
CheckReport float_sanity_check();

// Degree grids used by the CLI when no explicit degrees are given.
std::vector<std::pair<int, int>> default_degrees(const std::string& target);

// Runs the target's group at sampled parameters, `samples` groups per degree
// pair, resampling any group that hits a singular/degenerate draw.
std::vector<CheckReport> run_target_sampled(
    const std::string& target, Rng& rng, int samples,
    const std::vector<std::pair<int, int>>& degrees);

// Same at one explicit parameter point.
std::vector<CheckReport> run_target_at(const std::string& target,
                                       const ParamSet& p);

}  // namespace qpade
