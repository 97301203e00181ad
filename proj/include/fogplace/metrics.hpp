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
 * \file fogplace/metrics.hpp
 *
 * \brief Reported quantities derived from a validated placement.
 */

#ifndef FOGPLACE_METRICS_HPP
#define FOGPLACE_METRICS_HPP

#include <fogplace/instance.hpp>
#include <fogplace/power.hpp>
#include <fogplace/solution.hpp>

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fogplace {

enum class BlockingCause
{
	AccessTail,
	Uplink,
	RemoteCapacity
};

inline std::string_view to_string(BlockingCause c)
{
	switch (c)
	{
	case BlockingCause::AccessTail: return "access_tail";
	case BlockingCause::Uplink: return "uplink";
	case BlockingCause::RemoteCapacity: return "remote_capacity";
	}
	return "?";
}

struct MetricsReport
{
	std::size_t blocked_count = 0;
	/// Cause per blocked workload, in workload id order.
	std::vector<std::pair<WorkloadId, BlockingCause>> blocked_causes;
	std::array<std::size_t, 3> blocked_by_cause{0, 0, 0};

	std::size_t active_servers = 0;
	std::size_t idle_servers = 0;
	std::size_t active_components = 0;
	std::size_t idle_components = 0;
	/// Idle servers by host kind, and as shares of all idle servers.
	std::size_t idle_servers_co = 0;
	std::size_t idle_servers_bo = 0;
	std::size_t idle_servers_cs = 0;
	double idle_share_bo = 0;
	double idle_share_cs = 0;

	/// Gb/s summed over the links of each segment, indexed by Segment.
	std::array<double, kSegmentCount> traffic_by_segment{0, 0, 0, 0};
	std::array<double, kSegmentCount> traffic_by_segment_with_regular{0, 0, 0, 0};
	PowerBreakdown power;

	/// Mean source-to-host hop count over placed real-time workloads.
	std::optional<double> avg_hop_count;
	std::size_t placed_real_time = 0;
};

namespace detail {

/// Whether real-time workload `w` fits somewhere next to the rest of `sol`
/// once the links in `relaxed_links` and the compute capacity of the
/// locations in `relaxed_locations` are treated as unlimited.
inline bool insertion_feasible(const ProblemInstance& inst, const PlacementSolution& sol, const Workload& w, const std::vector<bool>& relaxed_links,
                               const std::vector<bool>& relaxed_locations)
{
	const auto& topo = inst.topo();
	const auto& ws = inst.workloads.workloads;
	const auto total = total_link_traffic(inst, sol.link_flow, true);
	for (std::size_t l = 0; l < inst.locations.size(); ++l)
	{
		const auto& loc = inst.locations[l];
		bool fits = relaxed_locations[l];
		if (!fits)
		{
			if (inst.mode == PlacementMode::Disaggregated)
			{
				Resources used;
				for (std::size_t i = 0; i < ws.size(); ++i)
				{
					if (sol.placements[i].host == loc.node) { used += ws[i].demand; }
				}
				fits = fits_within(used + w.demand, loc.total_capacity());
			}
			else
			{
				std::vector<Resources> chassis(loc.server_count);
				for (std::size_t i = 0; i < ws.size(); ++i)
				{
					const auto& p = sol.placements[i];
					if (p.host == loc.node && p.server >= 0) { chassis[static_cast<std::size_t>(p.server)] += ws[i].demand; }
				}
				for (const auto& c : chassis) { fits = fits || fits_within(c + w.demand, loc.config.capacity); }
			}
		}
		if (!fits) { continue; }
		for (const auto& sp : topo.paths_between(loc.node, w.source_node))
		{
			for (const auto& dp : topo.paths_between(loc.node, topo.datacenter()))
			{
				std::vector<double> add(topo.link_count(), 0.0);
				for (auto e : sp) { add[e.index()] += inst.traffic_split.to_source * w.uplink_gbps; }
				for (auto e : dp) { add[e.index()] += inst.traffic_split.to_dc * w.uplink_gbps; }
				bool ok = true;
				for (std::size_t e = 0; e < add.size() && ok; ++e)
				{
					if (add[e] == 0 || relaxed_links[e]) { continue; }
					ok = total[e] + add[e] <= topo.link(LinkId(e)).capacity_gbps + kCapacityEps;
				}
				if (ok) { return true; }
			}
		}
	}
	return false;
}

} // namespace detail

/// Relaxes, in order, the workload's own access tail, then every CS and BO
/// uplink, then compute capacity away from the source; the first relaxation
/// that lets the workload in beside the other placements names the cause.
/// Workloads that none of them admit are counted as remote-capacity blocks.
inline BlockingCause attribute_blocking(const ProblemInstance& inst, const PlacementSolution& sol, const Workload& w)
{
	const auto& topo = inst.topo();
	std::vector<bool> links(topo.link_count(), false);
	std::vector<bool> locs(inst.locations.size(), false);
	if (auto tail = topo.uplink(w.source_node))
	{
		links[tail->index()] = true;
		if (detail::insertion_feasible(inst, sol, w, links, locs)) { return BlockingCause::AccessTail; }
		links[tail->index()] = false;
	}
	for (const auto& l : topo.links())
	{
		const auto& a = topo.node(l.a), &b = topo.node(l.b);
		bool uplink = l.segment == Segment::MetroAccess
		              && (a.kind == NodeKind::RadioCS || a.kind == NodeKind::EnterpriseBO || b.kind == NodeKind::RadioCS || b.kind == NodeKind::EnterpriseBO);
		links[l.id.index()] = uplink;
	}
	if (detail::insertion_feasible(inst, sol, w, links, locs)) { return BlockingCause::Uplink; }
	return BlockingCause::RemoteCapacity;
}

inline MetricsReport compute_metrics(const PlacementSolution& sol, const ProblemInstance& inst)
{
	require_valid(inst, sol);
	const auto& topo = inst.topo();
	const auto& ws = inst.workloads.workloads;
	MetricsReport m;

	m.blocked_count = sol.objective.blocked;
	for (std::size_t i = 0; i < ws.size(); ++i)
	{
		if (!ws[i].is_real_time() || !sol.placements[i].blocked()) { continue; }
		auto cause = attribute_blocking(inst, sol, ws[i]);
		m.blocked_causes.emplace_back(ws[i].id, cause);
		++m.blocked_by_cause[static_cast<std::size_t>(cause)];
	}

	const std::size_t servers = total_servers(inst.locations);
	m.active_servers = sol.objective.active_servers;
	m.active_components = sol.objective.active_components;
	m.idle_servers = servers - m.active_servers;
	m.idle_components = kResourceCount * servers - m.active_components;
	for (std::size_t l = 0; l < inst.locations.size(); ++l)
	{
		const auto& loc = inst.locations[l];
		std::size_t idle = loc.server_count - sol.activation[l].active_servers();
		switch (topo.node(loc.node).kind)
		{
		case NodeKind::MetroCO: m.idle_servers_co += idle; break;
		case NodeKind::EnterpriseBO: m.idle_servers_bo += idle; break;
		case NodeKind::RadioCS: m.idle_servers_cs += idle; break;
		default: break;
		}
	}
	if (m.idle_servers > 0)
	{
		m.idle_share_bo = static_cast<double>(m.idle_servers_bo) / static_cast<double>(m.idle_servers);
		m.idle_share_cs = static_cast<double>(m.idle_servers_cs) / static_cast<double>(m.idle_servers);
	}

	for (const auto& l : topo.links())
	{
		auto s = static_cast<std::size_t>(l.segment);
		m.traffic_by_segment[s] += sol.link_flow[l.id.index()];
		m.traffic_by_segment_with_regular[s] += sol.link_flow[l.id.index()] + inst.regular_traffic[l.id.index()];
	}
	m.power = evaluate_power(topo, total_link_traffic(inst, sol.link_flow, inst.regular_traffic_in_power));

	std::size_t hops = 0;
	for (std::size_t i = 0; i < ws.size(); ++i)
	{
		if (!ws[i].is_real_time() || sol.placements[i].blocked()) { continue; }
		hops += hop_count(topo, sol.placements[i].source_path);
		++m.placed_real_time;
	}
	if (m.placed_real_time > 0) { m.avg_hop_count = static_cast<double>(hops) / static_cast<double>(m.placed_real_time); }
	return m;
}

/// Column names of flatten_metrics(), in order.
inline std::vector<std::string> metrics_columns()
{
	return {"blocked",
	        "blocked_access_tail",
	        "blocked_uplink",
	        "blocked_remote_capacity",
	        "active_servers",
	        "idle_servers",
	        "active_components",
	        "idle_components",
	        "idle_servers_co",
	        "idle_servers_bo",
	        "idle_servers_cs",
	        "idle_share_bo",
	        "idle_share_cs",
	        "traffic_metro_core_gbps",
	        "traffic_metro_access_gbps",
	        "traffic_last_mile_gbps",
	        "traffic_metro_core_with_regular_gbps",
	        "traffic_metro_access_with_regular_gbps",
	        "traffic_last_mile_with_regular_gbps",
	        "power_static_w",
	        "power_load_w",
	        "power_metro_core_w",
	        "power_metro_access_w",
	        "power_last_mile_w",
	        "tnpc_w",
	        "avg_hop_count",
	        "placed_real_time"};
}

/// Values matching metrics_columns(); an absent hop count is empty.
inline std::vector<std::string> flatten_metrics(const MetricsReport& m)
{
	auto u = [](std::size_t v) { return std::to_string(v); };
	auto d = [](double v) { return text::format_double(v); };
	const auto core = static_cast<std::size_t>(Segment::MetroCore);
	const auto access = static_cast<std::size_t>(Segment::MetroAccess);
	const auto last = static_cast<std::size_t>(Segment::LastMile);
	return {u(m.blocked_count),
	        u(m.blocked_by_cause[0]),
	        u(m.blocked_by_cause[1]),
	        u(m.blocked_by_cause[2]),
	        u(m.active_servers),
	        u(m.idle_servers),
	        u(m.active_components),
	        u(m.idle_components),
	        u(m.idle_servers_co),
	        u(m.idle_servers_bo),
	        u(m.idle_servers_cs),
	        d(m.idle_share_bo),
	        d(m.idle_share_cs),
	        d(m.traffic_by_segment[core]),
	        d(m.traffic_by_segment[access]),
	        d(m.traffic_by_segment[last]),
	        d(m.traffic_by_segment_with_regular[core]),
	        d(m.traffic_by_segment_with_regular[access]),
	        d(m.traffic_by_segment_with_regular[last]),
	        d(m.power.static_total),
	        d(m.power.load_proportional_total),
	        d(m.power.per_segment[core]),
	        d(m.power.per_segment[access]),
	        d(m.power.per_segment[last]),
	        d(m.power.tnpc),
	        m.avg_hop_count ? d(*m.avg_hop_count) : std::string(),
	        u(m.placed_real_time)};
}

} // namespace fogplace

#endif // FOGPLACE_METRICS_HPP
