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
 * \file fogplace/optimizer/greedy.hpp
 *
 * \brief Deterministic first-fit placement used as the initial incumbent.
 */

#ifndef FOGPLACE_OPTIMIZER_GREEDY_HPP
#define FOGPLACE_OPTIMIZER_GREEDY_HPP

#include <fogplace/instance.hpp>
#include <fogplace/solution.hpp>

#include <algorithm>
#include <numeric>
#include <vector>

namespace fogplace {

/// Per-location capacity bookkeeping shared by the greedy and the LP-guided
/// rounding in the exact solver.
class CapacityTracker
{
public:
	CapacityTracker(const ProblemInstance& inst, const PlacementModel& pm) : inst_(&inst), pm_(&pm)
	{
		const std::size_t nl = pm.location_count();
		used_.assign(nl, Resources{});
		chassis_.resize(nl);
		items_.resize(nl);
		for (std::size_t l = 0; l < nl; ++l)
		{
			const auto& loc = pm.location(l);
			chassis_[l].assign(loc.server_count, Resources{});
			used_[l] = pm.local_load(l);
			for (auto i : pm.local_items(l)) { items_[l].push_back(inst.workloads.workloads[i].demand); }
			if (inst.mode == PlacementMode::Traditional)
			{
				auto slots = pack_min_servers(items_[l], loc.config, loc.server_count);
				if (!slots) { throw InstanceInfeasibleError("node-local workloads do not fit"); }
				for (std::size_t i = 0; i < slots->size(); ++i) { chassis_[l][(*slots)[i]] += items_[l][i]; }
			}
		}
		link_used_.assign(inst.topo().link_count(), 0.0);
	}

	/// First chassis (TS) or the pool (DS) that can take `d`; returns the
	/// chassis index, -1 for DS, or nullopt.
	std::optional<int> fits(std::size_t l, const Resources& d) const
	{
		const auto& loc = pm_->location(l);
		if (inst_->mode == PlacementMode::Disaggregated)
		{
			if (fits_within(used_[l] + d, loc.total_capacity())) { return -1; }
			return std::nullopt;
		}
		for (std::size_t s = 0; s < chassis_[l].size(); ++s)
		{
			if (fits_within(chassis_[l][s] + d, loc.config.capacity)) { return static_cast<int>(s); }
		}
		return std::nullopt;
	}

	bool route_fits(const RouteOption& o) const
	{
		for (const auto& [e, g] : o.usage)
		{
			if (link_used_[e.index()] + g > pm_->free_capacity(e) + kCapacityEps) { return false; }
		}
		return true;
	}

	void place(std::size_t l, int chassis, const Resources& d, const RouteOption& o)
	{
		used_[l] += d;
		if (chassis >= 0) { chassis_[l][static_cast<std::size_t>(chassis)] += d; }
		for (const auto& [e, g] : o.usage) { link_used_[e.index()] += g; }
	}

private:
	const ProblemInstance* inst_;
	const PlacementModel* pm_;
	std::vector<Resources> used_;
	std::vector<std::vector<Resources>> chassis_;
	std::vector<std::vector<Resources>> items_;
	std::vector<double> link_used_;
};

/// Chassis indices for every workload of a TS assignment, using the fewest
/// chassis per location. `host_loc[i]` is the location of workload i or -1.
inline bool assign_min_servers(const ProblemInstance& inst, const std::vector<int>& host_loc, std::vector<WorkloadPlacement>& out)
{
	const auto& ws = inst.workloads.workloads;
	for (std::size_t l = 0; l < inst.locations.size(); ++l)
	{
		std::vector<std::size_t> members;
		std::vector<Resources> demands;
		for (std::size_t i = 0; i < ws.size(); ++i)
		{
			if (host_loc[i] == static_cast<int>(l))
			{
				members.push_back(i);
				demands.push_back(ws[i].demand);
			}
		}
		auto slots = pack_min_servers(demands, inst.locations[l].config, inst.locations[l].server_count);
		if (!slots) { return false; }
		for (std::size_t k = 0; k < members.size(); ++k) { out[members[k]].server = (*slots)[k]; }
	}
	return true;
}

/// Real-time workloads by uplink rate, highest first; each goes to the
/// nearest location (by source hop count) with room, on the route with the
/// fewest hops that fits the remaining link capacity; otherwise blocked.
/// TS chassis are then repacked to the minimum count per location.
inline PlacementSolution greedy_warm_start(const ProblemInstance& inst)
{
	PlacementModel pm(inst);
	const auto& topo = inst.topo();
	const auto& ws = inst.workloads.workloads;
	const std::size_t nl = pm.location_count();
	CapacityTracker cap(inst, pm);

	std::vector<WorkloadPlacement> placements(ws.size());
	std::vector<int> host_loc(ws.size(), -1);
	for (std::size_t l = 0; l < nl; ++l)
	{
		for (auto i : pm.local_items(l))
		{
			placements[i].host = pm.location(l).node;
			host_loc[i] = static_cast<int>(l);
		}
	}

	std::vector<std::size_t> order(pm.real_time().size());
	std::iota(order.begin(), order.end(), 0);
	std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pm.rt_workload(a).uplink_gbps > pm.rt_workload(b).uplink_gbps; });

	for (auto k : order)
	{
		const auto& w = pm.rt_workload(k);
		std::vector<std::size_t> locs(nl);
		std::iota(locs.begin(), locs.end(), 0);
		auto hops = [&](std::size_t l) { return topo.paths_between(pm.location(l).node, w.source_node).front().size(); };
		std::stable_sort(locs.begin(), locs.end(), [&](std::size_t a, std::size_t b) { return hops(a) < hops(b); });
		for (auto l : locs)
		{
			auto chassis = cap.fits(l, w.demand);
			if (!chassis) { continue; }
			const NodeId host = pm.location(l).node;
			const auto& sp = topo.paths_between(host, w.source_node);
			const auto& dp = topo.paths_between(host, topo.datacenter());
			const RouteOption* pick = nullptr;
			std::size_t pick_hops = 0;
			for (const auto& o : pm.options(k, l))
			{
				if (!cap.route_fits(o)) { continue; }
				std::size_t h = sp[o.source_path].size() + dp[o.dc_path].size();
				if (!pick || h < pick_hops)
				{
					pick = &o;
					pick_hops = h;
				}
			}
			if (!pick) { continue; }
			cap.place(l, *chassis, w.demand, *pick);
			auto& pl = placements[pm.real_time()[k]];
			pl.host = host;
			pl.source_path = sp[pick->source_path];
			pl.dc_path = dp[pick->dc_path];
			host_loc[pm.real_time()[k]] = static_cast<int>(l);
			break;
		}
	}

	if (inst.mode == PlacementMode::Traditional && !assign_min_servers(inst, host_loc, placements))
	{
		throw Error("greedy placement could not be repacked");
	}
	auto sol = assemble_solution(inst, std::move(placements));
	sol.backend = "greedy";
	return sol;
}

} // namespace fogplace

#endif // FOGPLACE_OPTIMIZER_GREEDY_HPP
