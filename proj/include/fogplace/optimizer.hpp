// Copyright 2026 The fogplace Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * \file fogplace/optimizer.hpp
 *
 * \brief Exact placement solve with a choice of backend.
 *
 * `Backend::BranchAndPrice` is the default and handles full-size instances.
 * `Backend::Compact` runs generic branch and bound on the model from
 * build_milp(); it is exact too but only practical for small instances.
 */

#ifndef FOGPLACE_OPTIMIZER_HPP
#define FOGPLACE_OPTIMIZER_HPP

#include <fogplace/optimizer/branch_price.hpp>
#include <fogplace/optimizer/compact.hpp>
#include <fogplace/optimizer/greedy.hpp>
#include <fogplace/optimizer/oracle.hpp>

#include <chrono>
#include <string_view>

namespace fogplace {

enum class Backend
{
	BranchAndPrice,
	Compact
};

inline Backend parse_backend(std::string_view s)
{
	if (s == "branch-and-price" || s == "bp") { return Backend::BranchAndPrice; }
	if (s == "compact") { return Backend::Compact; }
	throw InvalidParameterError("unknown backend: " + std::string(s));
}

struct SolveOptions
{
	Backend backend = Backend::BranchAndPrice;
	double time_limit_seconds = 600;
	/// Branch-and-price node limit; 0 means none.
	long node_limit = 0;
};

/// Solves `milp` (built from `inst`) by branch and bound, warm-started with
/// the greedy placement.
inline PlacementSolution solve_compact(const ProblemInstance& inst, const CompactMilp& milp, double time_limit_seconds)
{
	auto t0 = std::chrono::steady_clock::now();
	milp::MipOptions mo;
	mo.time_limit_seconds = time_limit_seconds;
	mo.incumbent = encode_solution(inst, milp, greedy_warm_start(inst));
	auto res = milp::solve_mip(milp.model, mo);
	if (res.status == milp::MipStatus::Infeasible) { throw InfeasibleModelError("placement model is infeasible"); }
	if (res.status == milp::MipStatus::NoSolution) { throw TimeoutError("time limit reached without a feasible placement"); }
	auto sol = assemble_solution(inst, decode_placements(inst, milp, res.x));
	sol.backend = "compact";
	sol.optimal = res.status == milp::MipStatus::Optimal;
	sol.bound = sol.optimal ? sol.objective.weighted : std::min(res.bound, sol.objective.weighted);
	sol.gap = (sol.objective.weighted - sol.bound) / std::max(1.0, std::fabs(sol.objective.weighted));
	sol.nodes_explored = static_cast<std::size_t>(res.nodes);
	sol.solve_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
	return sol;
}

/// Proven-optimal placement, or the best placement found with its bound when
/// the time limit is reached (optimal = false). The result is re-checked by
/// validate_solution() before it is returned.
inline PlacementSolution solve(const ProblemInstance& inst, const SolveOptions& opt = {})
{
	validate_instance(inst);
	PlacementSolution sol;
	if (opt.backend == Backend::Compact) { sol = solve_compact(inst, build_milp(inst), opt.time_limit_seconds); }
	else
	{
		ExactOptions eo;
		eo.time_limit_seconds = opt.time_limit_seconds;
		eo.node_limit = opt.node_limit;
		sol = solve_branch_and_price(inst, eo);
	}
	require_valid(inst, sol);
	return sol;
}

} // namespace fogplace

#endif // FOGPLACE_OPTIMIZER_HPP
