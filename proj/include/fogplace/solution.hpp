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
 * \file fogplace/solution.hpp
 *
 * \brief Placement solutions: assembly from per-workload decisions, objective
 *  breakdown, a standalone constraint checker and the text dump.
 */

#ifndef FOGPLACE_SOLUTION_HPP
#define FOGPLACE_SOLUTION_HPP

#include <fogplace/capacity.hpp>
#include <fogplace/common.hpp>
#include <fogplace/instance.hpp>
#include <fogplace/power.hpp>

#include <cmath>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace fogplace {

struct WorkloadPlacement
{
	/// Hosting node; empty means blocked.
	std::optional<NodeId> host;
	/// Host to source access node, and host to DC.
	Path source_path;
	Path dc_path;
	/// Chassis index within the host location (TS only), -1 otherwise.
	int server = -1;

	bool blocked() const { return !host.has_value(); }
	friend bool operator==(const WorkloadPlacement&, const WorkloadPlacement&) = default;
};

struct ObjectiveBreakdown
{
	double tnpc = 0;
	std::size_t blocked = 0;
	std::size_t active_components = 0;
	std::size_t active_servers = 0;
	double weighted = 0;
	friend bool operator==(const ObjectiveBreakdown&, const ObjectiveBreakdown&) = default;
};

struct PlacementSolution
{
	std::vector<WorkloadPlacement> placements;
	/// Modeled workload traffic per link (regular traffic excluded).
	std::vector<double> link_flow;
	ActivationMap activation;
	ObjectiveBreakdown objective;

	bool optimal = false;
	/// Best proven lower bound on the weighted objective.
	double bound = 0;
	double gap = 0;
	double solve_seconds = 0;
	std::string backend;
	std::size_t nodes_explored = 0;
};

inline double weighted_objective(const ObjectiveWeights& w, std::size_t blocked, std::size_t nc, std::size_t ns, double tnpc)
{
	return w.alpha1 * static_cast<double>(blocked) + w.alpha2 * static_cast<double>(nc) + w.alpha3 * static_cast<double>(ns)
		   + w.power_weight * tnpc;
}

/// Lexicographic comparison on (blocked, components, servers, power); power
/// compared with an absolute tolerance.
inline bool lex_less(const ObjectiveBreakdown& a, const ObjectiveBreakdown& b, double power_tol = 1e-7)
{
	if (a.blocked != b.blocked) { return a.blocked < b.blocked; }
	if (a.active_components != b.active_components) { return a.active_components < b.active_components; }
	if (a.active_servers != b.active_servers) { return a.active_servers < b.active_servers; }
	return a.tnpc < b.tnpc - power_tol;
}

inline std::vector<double> total_link_traffic(const ProblemInstance& inst, const std::vector<double>& flow, bool include_regular)
{
	std::vector<double> t = flow;
	if (include_regular)
	{
		for (std::size_t e = 0; e < t.size(); ++e) { t[e] += inst.regular_traffic[e]; }
	}
	return t;
}

/// Fills flows, activation and objective from `placements`. In TS mode the
/// server index of every workload (node-local included) must be set.
inline PlacementSolution assemble_solution(const ProblemInstance& inst, std::vector<WorkloadPlacement> placements)
{
	const auto& topo = inst.topo();
	const auto& ws = inst.workloads.workloads;
	if (placements.size() != ws.size()) { throw InfeasibleAssignmentError("one placement per workload required"); }
	PlacementSolution sol;
	sol.link_flow.assign(topo.link_count(), 0.0);
	std::vector<int> loc_of(topo.node_count(), -1);
	for (std::size_t i = 0; i < inst.locations.size(); ++i) { loc_of[inst.locations[i].node.index()] = static_cast<int>(i); }

	std::vector<LocationAssignment> per_loc(inst.locations.size());
	for (std::size_t i = 0; i < inst.locations.size(); ++i) { per_loc[i].location = inst.locations[i]; }
	for (std::size_t i = 0; i < ws.size(); ++i)
	{
		const auto& p = placements[i];
		if (p.blocked())
		{
			++sol.objective.blocked;
			continue;
		}
		int l = loc_of[p.host->index()];
		if (l < 0) { throw InfeasibleAssignmentError("workload hosted on a node without compute"); }
		per_loc[l].demands.push_back(ws[i].demand);
		per_loc[l].servers.push_back(p.server);
		if (ws[i].is_real_time())
		{
			for (auto e : p.source_path) { sol.link_flow[e.index()] += inst.traffic_split.to_source * ws[i].uplink_gbps; }
			for (auto e : p.dc_path) { sol.link_flow[e.index()] += inst.traffic_split.to_dc * ws[i].uplink_gbps; }
		}
	}
	auto summary = activation_accounting(per_loc, inst.mode);
	sol.activation = std::move(summary.map);
	sol.objective.active_components = summary.active_components;
	sol.objective.active_servers = summary.active_servers;
	sol.objective.tnpc = evaluate_power(topo, total_link_traffic(inst, sol.link_flow, inst.regular_traffic_in_power)).tnpc;
	sol.objective.weighted = weighted_objective(inst.weights, sol.objective.blocked, sol.objective.active_components,
												sol.objective.active_servers, sol.objective.tnpc);
	sol.placements = std::move(placements);
	return sol;
}

struct ValidationReport
{
	std::vector<std::string> violations;
	bool ok() const { return violations.empty(); }
};

/// Re-derives every constraint from the instance data alone: assignment and
/// node-local pinning, per-chassis (TS) or pooled (DS) capacity, path
/// endpoints, link totals against capacity minus regular traffic, and the
/// reported activation and objective terms.
inline ValidationReport validate_solution(const ProblemInstance& inst, const PlacementSolution& sol, double tol = 1e-6)
{
	ValidationReport rep;
	auto fail = [&](std::string s) { rep.violations.push_back(std::move(s)); };
	const auto& topo = inst.topo();
	const auto& ws = inst.workloads.workloads;
	if (sol.placements.size() != ws.size())
	{
		fail("placement count differs from workload count");
		return rep;
	}

	std::vector<double> flow(topo.link_count(), 0.0);
	std::vector<std::vector<std::size_t>> at(inst.locations.size());
	std::size_t blocked = 0;
	for (std::size_t i = 0; i < ws.size(); ++i)
	{
		const auto& w = ws[i];
		const auto& p = sol.placements[i];
		const std::string tag = "workload " + std::to_string(i) + ": ";
		if (!w.is_real_time())
		{
			if (p.blocked() || *p.host != w.home_location) { fail(tag + "node-local workload not at its home location"); }
		}
		if (p.blocked())
		{
			if (w.is_real_time()) { ++blocked; }
			if (!p.source_path.empty() || !p.dc_path.empty()) { fail(tag + "blocked workload carries paths"); }
			continue;
		}
		std::size_t l = inst.locations.size();
		for (std::size_t j = 0; j < inst.locations.size(); ++j)
		{
			if (inst.locations[j].node == *p.host) { l = j; }
		}
		if (l == inst.locations.size())
		{
			fail(tag + "host is not a compute location");
			continue;
		}
		at[l].push_back(i);
		if (w.is_real_time())
		{
			if (!is_simple_path(topo, p.source_path, *p.host, w.source_node)) { fail(tag + "source path does not join host and source"); }
			if (!is_simple_path(topo, p.dc_path, *p.host, topo.datacenter())) { fail(tag + "DC path does not join host and DC"); }
			for (auto e : p.source_path) { flow[e.index()] += inst.traffic_split.to_source * w.uplink_gbps; }
			for (auto e : p.dc_path) { flow[e.index()] += inst.traffic_split.to_dc * w.uplink_gbps; }
		}
		else if (!p.source_path.empty() || !p.dc_path.empty()) { fail(tag + "node-local workload carries paths"); }
	}

	for (std::size_t e = 0; e < flow.size(); ++e)
	{
		const auto& link = topo.link(LinkId(e));
		if (flow[e] + inst.regular_traffic[e] > link.capacity_gbps + tol)
		{
			fail("link " + std::to_string(e) + " over capacity");
		}
		if (sol.link_flow.size() != flow.size() || std::abs(sol.link_flow[e] - flow[e]) > tol)
		{
			fail("link " + std::to_string(e) + " flow total mismatch");
		}
	}

	std::size_t ns = 0, nc = 0;
	for (std::size_t l = 0; l < inst.locations.size(); ++l)
	{
		const auto& loc = inst.locations[l];
		const auto& cap = loc.config.capacity;
		if (inst.mode == PlacementMode::Traditional)
		{
			std::vector<Resources> used(loc.server_count);
			std::vector<bool> busy(loc.server_count, false);
			for (auto i : at[l])
			{
				int s = sol.placements[i].server;
				if (s < 0 || static_cast<std::size_t>(s) >= loc.server_count)
				{
					fail("workload " + std::to_string(i) + " has no valid chassis");
					continue;
				}
				used[s] += ws[i].demand;
				busy[s] = true;
			}
			for (std::size_t s = 0; s < loc.server_count; ++s)
			{
				for (std::size_t r = 0; r < kResourceCount; ++r)
				{
					if (used[s][r] > cap[r] + tol) { fail(topo.node(loc.node).name + " chassis " + std::to_string(s) + " over capacity"); }
				}
				ns += busy[s];
				nc += busy[s] ? 3 : 0;
			}
		}
		else
		{
			Resources total;
			for (auto i : at[l]) { total += ws[i].demand; }
			std::size_t chassis = 0;
			for (std::size_t r = 0; r < kResourceCount; ++r)
			{
				if (total[r] > cap[r] * static_cast<double>(loc.server_count) + tol)
				{
					fail(topo.node(loc.node).name + " pooled " + std::string(to_string(static_cast<ResourceType>(r))) + " over capacity");
				}
				std::size_t k = total[r] <= tol ? 0 : static_cast<std::size_t>(std::ceil(total[r] / cap[r] - 1e-9));
				nc += k;
				chassis = std::max(chassis, k);
			}
			ns += chassis;
		}
	}

	const auto& ob = sol.objective;
	if (ob.blocked != blocked) { fail("blocked count mismatch"); }
	if (ob.active_servers != ns) { fail("active server count mismatch"); }
	if (ob.active_components != nc) { fail("active component count mismatch"); }
	double load = 0;
	for (std::size_t e = 0; e < flow.size(); ++e)
	{
		double t = flow[e] + (inst.regular_traffic_in_power ? inst.regular_traffic[e] : 0.0);
		for (auto d : topo.link(LinkId(e)).traversed_devices)
		{
			if (const auto* lp = std::get_if<LoadProportionalPower>(&topo.device(d).profile)) { load += lp->watts_per_gbps * t; }
		}
	}
	double tnpc = load;
	for (const auto& d : topo.devices())
	{
		if (const auto* s = std::get_if<StaticPower>(&d.profile)) { tnpc += s->watts; }
	}
	if (std::abs(tnpc - ob.tnpc) > 1e-9 * std::max(1.0, tnpc)) { fail("TNPC mismatch"); }
	double weighted = weighted_objective(inst.weights, blocked, nc, ns, tnpc);
	if (std::abs(weighted - ob.weighted) > 1e-9 * std::max(1.0, weighted)) { fail("weighted objective mismatch"); }
	return rep;
}

inline void require_valid(const ProblemInstance& inst, const PlacementSolution& sol)
{
	auto rep = validate_solution(inst, sol);
	if (!rep.ok()) { throw UnvalidatedSolutionError("solution violates constraints: " + rep.violations.front()); }
}

// Solution dump, one record per line:
//
//   fogplace-solution 1
//   objective <weighted> tnpc <w> blocked <n> components <n> servers <n> optimal <0|1>
//   place <workload-id> <host-node-id|blocked> <chassis|-> src <link,...|-> dc <link,...|->
//   flow <link-id> <gbps>
//   chassis <node-id> <index> <cpu 0|1><ram 0|1><storage 0|1>

inline void write_solution(std::ostream& os, const PlacementSolution& sol)
{
	auto path_text = [](const Path& p) {
		if (p.empty()) { return std::string("-"); }
		std::string s;
		for (std::size_t i = 0; i < p.size(); ++i) { s += (i ? "," : "") + std::to_string(p[i].value); }
		return s;
	};
	const auto& ob = sol.objective;
	os << "fogplace-solution 1\n";
	os << "objective " << text::format_double(ob.weighted) << " tnpc " << text::format_double(ob.tnpc) << " blocked " << ob.blocked
	   << " components " << ob.active_components << " servers " << ob.active_servers << " optimal " << (sol.optimal ? 1 : 0) << "\n";
	for (std::size_t i = 0; i < sol.placements.size(); ++i)
	{
		const auto& p = sol.placements[i];
		os << "place " << i << ' ';
		if (p.blocked()) { os << "blocked"; }
		else { os << p.host->value; }
		os << ' ';
		if (p.server >= 0) { os << p.server; }
		else { os << '-'; }
		os << " src " << path_text(p.source_path) << " dc " << path_text(p.dc_path) << "\n";
	}
	for (std::size_t e = 0; e < sol.link_flow.size(); ++e)
	{
		if (sol.link_flow[e] != 0) { os << "flow " << e << ' ' << text::format_double(sol.link_flow[e]) << "\n"; }
	}
	for (const auto& loc : sol.activation)
	{
		for (std::size_t c = 0; c < loc.chassis.size(); ++c)
		{
			const auto& ch = loc.chassis[c];
			if (ch[0] || ch[1] || ch[2]) { os << "chassis " << loc.node.value << ' ' << c << ' ' << ch[0] << ch[1] << ch[2] << "\n"; }
		}
	}
}

} // namespace fogplace

#endif // FOGPLACE_SOLUTION_HPP
