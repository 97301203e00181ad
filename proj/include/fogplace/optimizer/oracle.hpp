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
 * \file fogplace/optimizer/oracle.hpp
 *
 * \brief Exhaustive reference solver for tiny instances. Shares nothing with
 *  the MILP code beyond the instance types and the solution assembly.
 */

#ifndef FOGPLACE_OPTIMIZER_ORACLE_HPP
#define FOGPLACE_OPTIMIZER_ORACLE_HPP

#include <fogplace/instance.hpp>
#include <fogplace/solution.hpp>

#include <map>
#include <optional>
#include <vector>

namespace fogplace {

struct OracleLimits
{
	std::size_t max_real_time = 4;
	std::size_t max_locations = 3;
	std::size_t max_servers_per_location = 2;
	std::size_t max_items_per_location = 12;
};

namespace detail {

// Fewest chassis for `items`, trying every chassis map in lexicographic
// order; returns the first map achieving the minimum.
inline std::optional<std::vector<int>> exhaustive_server_map(const std::vector<Resources>& items, const ServerConfig& cfg, std::size_t servers)
{
	const std::size_t n = items.size();
	if (n == 0) { return std::vector<int>{}; }
	if (servers == 0) { return std::nullopt; }
	std::vector<int> map(n, 0), best;
	std::size_t best_used = servers + 1;
	for (;;)
	{
		std::vector<Resources> load(servers);
		std::vector<bool> used(servers, false);
		for (std::size_t i = 0; i < n; ++i)
		{
			load[map[i]] += items[i];
			used[map[i]] = true;
		}
		bool ok = true;
		for (const auto& l : load) { ok = ok && fits_within(l, cfg.capacity); }
		std::size_t count = 0;
		for (bool u : used) { count += u; }
		if (ok && count < best_used)
		{
			best_used = count;
			best = map;
		}
		bool advanced = false;
		for (std::size_t i = n; i-- > 0;)
		{
			if (static_cast<std::size_t>(++map[i]) < servers)
			{
				advanced = true;
				break;
			}
			map[i] = 0;
		}
		if (!advanced) { break; }
	}
	if (best.empty()) { return std::nullopt; }
	return best;
}

} // namespace detail

/// Enumerates every host-or-blocked choice and path pair of every real-time
/// workload (and, in TS mode, every chassis map), returning the minimum
/// weighted objective. Ties keep the lexicographically first assignment,
/// where each workload's choices are ordered blocked, then by location, then
/// source path, then DC path.
inline PlacementSolution brute_force_oracle(const ProblemInstance& inst, const OracleLimits& lim = {})
{
	validate_instance(inst);
	const auto& topo = inst.topo();
	const auto& ws = inst.workloads.workloads;
	const std::size_t nl = inst.locations.size();
	std::vector<std::size_t> rt;
	for (std::size_t i = 0; i < ws.size(); ++i)
	{
		if (ws[i].is_real_time()) { rt.push_back(i); }
	}
	if (rt.size() > lim.max_real_time || nl > lim.max_locations) { throw InstanceTooLargeError("instance exceeds oracle limits"); }
	for (const auto& loc : inst.locations)
	{
		if (loc.server_count > lim.max_servers_per_location) { throw InstanceTooLargeError("too many servers for the oracle"); }
	}

	std::vector<int> loc_of(topo.node_count(), -1);
	for (std::size_t l = 0; l < nl; ++l) { loc_of[inst.locations[l].node.index()] = static_cast<int>(l); }
	std::vector<std::vector<std::size_t>> local(nl);
	for (std::size_t i = 0; i < ws.size(); ++i)
	{
		if (!ws[i].is_real_time()) { local[static_cast<std::size_t>(loc_of[ws[i].home_location.index()])].push_back(i); }
	}
	for (std::size_t l = 0; l < nl; ++l)
	{
		if (local[l].size() + rt.size() > lim.max_items_per_location) { throw InstanceTooLargeError("too many workloads per location for the oracle"); }
	}

	struct Choice
	{
		int location = -1;  // -1: blocked
		std::size_t src = 0, dc = 0;
	};
	std::vector<std::vector<Choice>> choices(rt.size());
	for (std::size_t k = 0; k < rt.size(); ++k)
	{
		choices[k].push_back({});
		for (std::size_t l = 0; l < nl; ++l)
		{
			const NodeId host = inst.locations[l].node;
			std::size_t ns = topo.paths_between(host, ws[rt[k]].source_node).size();
			std::size_t nd = topo.paths_between(host, topo.datacenter()).size();
			for (std::size_t a = 0; a < ns; ++a)
			{
				for (std::size_t b = 0; b < nd; ++b) { choices[k].push_back({static_cast<int>(l), a, b}); }
			}
		}
	}

	const auto coef = link_power_coefficients(topo);
	double base = static_power(topo);
	if (inst.regular_traffic_in_power)
	{
		for (std::size_t e = 0; e < coef.size(); ++e) { base += coef[e] * inst.regular_traffic[e]; }
	}

	// Per (location, subset of real-time workloads there): chassis map or
	// infeasible, plus the NC/NS it costs.
	struct LocEval
	{
		bool feasible = false;
		std::size_t nc = 0, ns = 0;
		std::vector<int> map;  // local items then real-time items in index order
	};
	std::map<std::pair<std::size_t, unsigned>, LocEval> cache;
	auto evaluate_location = [&](std::size_t l, unsigned mask) -> const LocEval& {
		auto key = std::make_pair(l, mask);
		auto it = cache.find(key);
		if (it != cache.end()) { return it->second; }
		const auto& loc = inst.locations[l];
		std::vector<Resources> items;
		for (auto i : local[l]) { items.push_back(ws[i].demand); }
		for (std::size_t k = 0; k < rt.size(); ++k)
		{
			if (mask >> k & 1u) { items.push_back(ws[rt[k]].demand); }
		}
		LocEval ev;
		if (inst.mode == PlacementMode::Traditional)
		{
			if (auto m = detail::exhaustive_server_map(items, loc.config, loc.server_count))
			{
				ev.feasible = true;
				ev.map = *m;
				std::vector<bool> used(loc.server_count, false);
				for (int s : ev.map) { used[s] = true; }
				for (bool u : used) { ev.ns += u; }
				ev.nc = 3 * ev.ns;
			}
		}
		else if (ds_allocation_feasible(items, loc))
		{
			ev.feasible = true;
			Resources total = sum_demands(items);
			for (std::size_t r = 0; r < kResourceCount; ++r)
			{
				std::size_t n = components_needed(total[r], loc.config.capacity[r]);
				ev.nc += n;
				ev.ns = std::max(ev.ns, n);
			}
		}
		return cache.emplace(key, std::move(ev)).first->second;
	};

	const auto& w8 = inst.weights;
	std::vector<std::size_t> idx(rt.size(), 0), best_idx;
	bool found = false;
	double best = 0;
	for (;;)
	{
		std::vector<double> flow(topo.link_count(), 0.0);
		std::vector<unsigned> mask(nl, 0);
		std::size_t blocked = 0;
		for (std::size_t k = 0; k < rt.size(); ++k)
		{
			const auto& ch = choices[k][idx[k]];
			if (ch.location < 0)
			{
				++blocked;
				continue;
			}
			mask[static_cast<std::size_t>(ch.location)] |= 1u << k;
			const NodeId host = inst.locations[static_cast<std::size_t>(ch.location)].node;
			const auto& w = ws[rt[k]];
			for (auto e : topo.paths_between(host, w.source_node)[ch.src]) { flow[e.index()] += inst.traffic_split.to_source * w.uplink_gbps; }
			for (auto e : topo.paths_between(host, topo.datacenter())[ch.dc]) { flow[e.index()] += inst.traffic_split.to_dc * w.uplink_gbps; }
		}
		bool ok = true;
		double tnpc = base;
		for (std::size_t e = 0; e < flow.size() && ok; ++e)
		{
			ok = flow[e] + inst.regular_traffic[e] <= topo.link(LinkId(e)).capacity_gbps + kCapacityEps;
			tnpc += coef[e] * flow[e];
		}
		std::size_t nc = 0, ns = 0;
		for (std::size_t l = 0; l < nl && ok; ++l)
		{
			const auto& ev = evaluate_location(l, mask[l]);
			ok = ev.feasible;
			nc += ev.nc;
			ns += ev.ns;
		}
		if (ok)
		{
			double obj = weighted_objective(w8, blocked, nc, ns, tnpc);
			if (!found || obj < best - 1e-12 * std::max(1.0, std::fabs(best)))
			{
				found = true;
				best = obj;
				best_idx = idx;
			}
		}
		std::size_t k = rt.size();
		bool done = true;
		while (k > 0)
		{
			--k;
			if (++idx[k] < choices[k].size())
			{
				done = false;
				break;
			}
			idx[k] = 0;
		}
		if (done) { break; }
	}
	if (!found) { throw InfeasibleModelError("no feasible assignment"); }

	std::vector<WorkloadPlacement> placements(ws.size());
	std::vector<unsigned> mask(nl, 0);
	for (std::size_t k = 0; k < rt.size(); ++k)
	{
		const auto& ch = choices[k][best_idx[k]];
		if (ch.location < 0) { continue; }
		mask[static_cast<std::size_t>(ch.location)] |= 1u << k;
		const NodeId host = inst.locations[static_cast<std::size_t>(ch.location)].node;
		auto& pl = placements[rt[k]];
		pl.host = host;
		pl.source_path = topo.paths_between(host, ws[rt[k]].source_node)[ch.src];
		pl.dc_path = topo.paths_between(host, topo.datacenter())[ch.dc];
	}
	for (std::size_t l = 0; l < nl; ++l)
	{
		const auto& ev = evaluate_location(l, mask[l]);
		if (!ev.feasible) { throw InstanceInfeasibleError("node-local workloads do not fit"); }
		std::size_t pos = 0;
		for (auto i : local[l])
		{
			placements[i].host = inst.locations[l].node;
			if (inst.mode == PlacementMode::Traditional) { placements[i].server = ev.map[pos]; }
			++pos;
		}
		for (std::size_t k = 0; k < rt.size(); ++k)
		{
			if (!(mask[l] >> k & 1u)) { continue; }
			if (inst.mode == PlacementMode::Traditional) { placements[rt[k]].server = ev.map[pos]; }
			++pos;
		}
	}
	auto sol = assemble_solution(inst, std::move(placements));
	sol.optimal = true;
	sol.bound = sol.objective.weighted;
	sol.backend = "oracle";
	return sol;
}

} // namespace fogplace

#endif // FOGPLACE_OPTIMIZER_ORACLE_HPP
