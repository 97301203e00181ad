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

// Random instances small enough for brute_force_oracle.

#ifndef FOGPLACE_TESTS_TINY_INSTANCES_HPP
#define FOGPLACE_TESTS_TINY_INSTANCES_HPP

#include <fogplace/instance.hpp>

#include <memory>
#include <random>

namespace fogplace::testing {

struct TinyOptions
{
	std::size_t max_real_time = 4;
	std::size_t max_locations = 3;
	std::size_t max_servers = 2;
	/// Access link capacities are drawn from [low, 10] Gb/s.
	double min_access_gbps = 1.5;
};

inline ProblemInstance tiny_instance(std::uint64_t seed, PlacementMode mode, const TinyOptions& opt = {})
{
	std::mt19937_64 rng(seed);
	auto uni = [&](double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng); };
	auto pick = [&](std::size_t n) { return static_cast<std::size_t>(std::uniform_int_distribution<std::size_t>(0, n - 1)(rng)); };

	RingSpec spec;
	spec.co_count = 1 + pick(3);
	spec.onus_per_co = pick(2);
	spec.with_bo = pick(2) == 1;
	spec.with_cs = true;
	spec.access_link_gbps = uni(opt.min_access_gbps, 10.0);
	spec.last_mile_gbps = uni(opt.min_access_gbps, 10.0);
	spec.core_link_gbps = uni(2.0, 20.0);
	spec.gateway_ring_position = pick(spec.co_count);
	auto topo = std::make_shared<const Topology>(build_ring_topology(spec));

	ProblemInstance inst;
	inst.topology = topo;
	inst.mode = mode;

	std::vector<NodeId> hosts;
	for (const auto& n : topo->nodes())
	{
		if (can_host_compute(n.kind)) { hosts.push_back(n.id); }
	}
	std::shuffle(hosts.begin(), hosts.end(), rng);
	const std::size_t nl = 1 + pick(std::min(opt.max_locations, hosts.size()));
	ServerConfig cfg;
	cfg.capacity = Resources(8, 32, 120);
	for (std::size_t l = 0; l < nl; ++l) { inst.locations.push_back({hosts[l], 1 + pick(opt.max_servers), cfg}); }
	std::sort(inst.locations.begin(), inst.locations.end(), [](const ComputeLocation& a, const ComputeLocation& b) { return a.node < b.node; });

	auto demand = [&] { return Resources(static_cast<double>(1 + pick(5)), uni(2, 20), uni(5, 70)); };
	auto& ws = inst.workloads.workloads;
	for (const auto& loc : inst.locations)
	{
		std::size_t n = pick(3);
		for (std::size_t j = 0; j < n; ++j)
		{
			Workload w;
			w.id = WorkloadId(ws.size());
			w.kind = WorkloadKind::NodeLocal;
			w.source_node = loc.node;
			w.home_location = loc.node;
			w.demand = demand();
			w.uplink_gbps = uni(0.5, 2.0);
			// Keep the instance valid: node-local load must fit at home.
			std::vector<Resources> mine;
			for (const auto& o : ws)
			{
				if (o.home_location == loc.node && !o.is_real_time()) { mine.push_back(o.demand); }
			}
			mine.push_back(w.demand);
			bool fits = mode == PlacementMode::Traditional ? pack_min_servers(mine, loc.config, loc.server_count).has_value()
			                                               : ds_allocation_feasible(mine, loc);
			if (fits) { ws.push_back(w); }
		}
	}
	std::vector<NodeId> sources;
	for (const auto& n : topo->nodes())
	{
		if (n.kind == NodeKind::RadioCS || n.kind == NodeKind::PonOnu) { sources.push_back(n.id); }
	}
	const std::size_t nrt = pick(opt.max_real_time + 1);
	for (std::size_t j = 0; j < nrt; ++j)
	{
		Workload w;
		w.id = WorkloadId(ws.size());
		w.kind = WorkloadKind::RealTime;
		w.source_node = sources[pick(sources.size())];
		w.home_location = w.source_node;
		w.demand = demand();
		w.uplink_gbps = uni(0.5, 4.0);
		ws.push_back(w);
	}
	inst.workloads.seed = seed;

	inst.regular_traffic.assign(topo->link_count(), 0.0);
	for (const auto& l : topo->links())
	{
		if (l.segment != Segment::GatewayUplink) { inst.regular_traffic[l.id.index()] = uni(0.0, 0.5) * l.capacity_gbps; }
	}
	return inst;
}

} // namespace fogplace::testing

#endif // FOGPLACE_TESTS_TINY_INSTANCES_HPP
