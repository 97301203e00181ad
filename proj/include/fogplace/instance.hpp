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
 * \file fogplace/instance.hpp
 *
 * \brief Placement problem instance and its precomputed routing view.
 *
 * A placed real-time workload emits two commodities from its host: one back
 * to its source access node at `to_source x uplink`, one to the hyperscale
 * DC at `to_dc x uplink`. Node-local workloads emit no modeled traffic.
 */

#ifndef FOGPLACE_INSTANCE_HPP
#define FOGPLACE_INSTANCE_HPP

#include <fogplace/capacity.hpp>
#include <fogplace/common.hpp>
#include <fogplace/power.hpp>
#include <fogplace/topology.hpp>
#include <fogplace/workload.hpp>

#include <algorithm>
#include <istream>
#include <memory>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace fogplace {

/// Weights of blocked workloads, active components and active servers; the
/// power term has weight one. Priority must be strict: blocked, then
/// components, then servers, then power.
struct ObjectiveWeights
{
	double alpha1 = 1e9;
	double alpha2 = 1e6;
	double alpha3 = 1e4;
	double power_weight = 1.0;
};

/// Fractions of a real-time workload's uplink rate sent back to its source
/// and to the DC.
struct TrafficSplit
{
	double to_source = 0.5;
	double to_dc = 0.5;
};

/// Background load as a fraction of each link's capacity, per segment.
struct RegularTrafficProfile
{
	double metro_access_fraction = 0.9;
	double last_mile_fraction = 0.75;
	double metro_core_fraction = 0.1;
	double gateway_fraction = 0.0;

	double fraction(Segment s) const
	{
		switch (s)
		{
		case Segment::MetroCore: return metro_core_fraction;
		case Segment::MetroAccess: return metro_access_fraction;
		case Segment::LastMile: return last_mile_fraction;
		case Segment::GatewayUplink: return gateway_fraction;
		}
		return 0;
	}
};

inline std::vector<double> regular_traffic_from_profile(const Topology& topo, const RegularTrafficProfile& profile)
{
	std::vector<double> out(topo.link_count());
	for (const auto& l : topo.links()) { out[l.id.index()] = profile.fraction(l.segment) * l.capacity_gbps; }
	return out;
}

struct ProblemInstance
{
	std::shared_ptr<const Topology> topology;
	WorkloadSet workloads;
	std::vector<ComputeLocation> locations;
	PlacementMode mode = PlacementMode::Traditional;
	ObjectiveWeights weights;
	/// Gb/s of background traffic per link.
	std::vector<double> regular_traffic;
	TrafficSplit traffic_split;
	/// Whether background traffic is charged to load-proportional devices.
	bool regular_traffic_in_power = true;

	const Topology& topo() const { return *topology; }
};

/// Largest TNPC any placement can reach: statics plus every load-
/// proportional device driven by full link capacity.
inline double max_possible_tnpc(const Topology& topo)
{
	double w = static_power(topo);
	for (const auto& l : topo.links())
	{
		double c = link_power_coefficient(topo, l.id);
		if (c > 0) { w += c * l.capacity_gbps; }
	}
	return w;
}

inline std::size_t total_servers(const std::vector<ComputeLocation>& locations)
{
	std::size_t n = 0;
	for (const auto& l : locations) { n += l.server_count; }
	return n;
}

/// Throws InstanceInvalidError on malformed data, InstanceInfeasibleError
/// when node-local demands cannot fit their home location.
inline void validate_instance(const ProblemInstance& inst)
{
	if (!inst.topology) { throw InstanceInvalidError("instance has no topology"); }
	const auto& topo = inst.topo();
	if (inst.regular_traffic.size() != topo.link_count()) { throw InstanceInvalidError("regular traffic vector does not match link count"); }
	for (const auto& l : topo.links())
	{
		double r = inst.regular_traffic[l.id.index()];
		if (r < 0) { throw InstanceInvalidError("negative regular traffic on link " + std::to_string(l.id.value)); }
		if (r >= l.capacity_gbps) { throw InstanceInvalidError("regular traffic saturates link " + std::to_string(l.id.value)); }
	}
	const auto& ts = inst.traffic_split;
	if (ts.to_source < 0 || ts.to_source > 1 || ts.to_dc < 0 || ts.to_dc > 1)
	{
		throw InstanceInvalidError("traffic split fractions must lie in [0,1]");
	}

	std::vector<int> loc_of(topo.node_count(), -1);
	for (std::size_t i = 0; i < inst.locations.size(); ++i)
	{
		const auto& loc = inst.locations[i];
		if (loc.node.index() >= topo.node_count() || !can_host_compute(topo.node(loc.node).kind))
		{
			throw InstanceInvalidError("compute location on a node that cannot host compute");
		}
		if (loc_of[loc.node.index()] >= 0) { throw InstanceInvalidError("duplicate compute location"); }
		for (std::size_t r = 0; r < kResourceCount; ++r)
		{
			if (!(loc.config.capacity[r] > 0)) { throw InstanceInvalidError("server capacities must be positive"); }
		}
		loc_of[loc.node.index()] = static_cast<int>(i);
	}

	const auto& w = inst.weights;
	const double servers = static_cast<double>(total_servers(inst.locations));
	const double tnpc = max_possible_tnpc(topo);
	if (!(w.power_weight == 1.0)) { throw InstanceInvalidError("power weight is fixed at 1"); }
	if (!(w.alpha3 > tnpc) || !(w.alpha2 > w.alpha3 * servers + tnpc)
		|| !(w.alpha1 > w.alpha2 * 3 * servers + w.alpha3 * servers + tnpc))
	{
		throw InstanceInvalidError("objective weights do not enforce blocked > components > servers > power priority");
	}

	std::vector<std::vector<Resources>> local(inst.locations.size());
	for (std::size_t i = 0; i < inst.workloads.workloads.size(); ++i)
	{
		const auto& wl = inst.workloads.workloads[i];
		if (wl.id.index() != i) { throw InstanceInvalidError("workload ids must be dense and ordered"); }
		if (wl.source_node.index() >= topo.node_count()) { throw InstanceInvalidError("workload source outside topology"); }
		for (std::size_t r = 0; r < kResourceCount; ++r)
		{
			if (wl.demand[r] < 0) { throw InstanceInvalidError("negative resource demand"); }
		}
		if (wl.uplink_gbps < 0) { throw InstanceInvalidError("negative uplink rate"); }
		auto kind = topo.node(wl.source_node).kind;
		if (wl.is_real_time())
		{
			if (kind != NodeKind::RadioCS && kind != NodeKind::PonOnu)
			{
				throw InstanceInvalidError("real-time workloads must originate at a CS or ONU");
			}
		}
		else
		{
			if (wl.home_location != wl.source_node || loc_of[wl.home_location.index()] < 0)
			{
				throw InstanceInvalidError("node-local workload " + std::to_string(i) + " has no compute location at its source");
			}
			local[loc_of[wl.home_location.index()]].push_back(wl.demand);
		}
	}
	for (std::size_t i = 0; i < inst.locations.size(); ++i)
	{
		const auto& loc = inst.locations[i];
		bool ok = inst.mode == PlacementMode::Traditional ? pack_min_servers(local[i], loc.config, loc.server_count).has_value()
														   : ds_allocation_feasible(local[i], loc);
		if (!ok)
		{
			throw InstanceInfeasibleError("node-local workloads exceed the capacity of " + topo.node(loc.node).name);
		}
	}
}

/// One way to serve a workload from a host: a path for each commodity.
struct RouteOption
{
	std::size_t source_path = 0;
	std::size_t dc_path = 0;
	/// Load-proportional watts this route adds.
	double power = 0;
	/// Gb/s per link, sorted by link id, zero entries dropped.
	std::vector<std::pair<LinkId, double>> usage;
};

/// Solver-facing view of an instance: indices of real-time workloads and
/// locations, and every route option of every (workload, location) pair.
class PlacementModel
{
public:
	explicit PlacementModel(const ProblemInstance& inst) : inst_(&inst)
	{
		validate_instance(inst);
		const auto& topo = inst.topo();
		coef_ = link_power_coefficients(topo);
		loc_of_node_.assign(topo.node_count(), -1);
		for (std::size_t i = 0; i < inst.locations.size(); ++i) { loc_of_node_[inst.locations[i].node.index()] = static_cast<int>(i); }
		free_.resize(topo.link_count());
		for (std::size_t e = 0; e < free_.size(); ++e) { free_[e] = topo.link(LinkId(e)).capacity_gbps - inst.regular_traffic[e]; }

		base_tnpc_ = static_power(topo);
		if (inst.regular_traffic_in_power)
		{
			for (std::size_t e = 0; e < coef_.size(); ++e) { base_tnpc_ += coef_[e] * inst.regular_traffic[e]; }
		}

		local_load_.assign(inst.locations.size(), Resources{});
		local_items_.assign(inst.locations.size(), {});
		for (const auto& w : inst.workloads.workloads)
		{
			if (w.is_real_time()) { rt_.push_back(w.id.index()); }
			else
			{
				auto l = static_cast<std::size_t>(loc_of_node_[w.home_location.index()]);
				local_load_[l] += w.demand;
				local_items_[l].push_back(w.id.index());
			}
		}

		options_.resize(rt_.size() * inst.locations.size());
		for (std::size_t k = 0; k < rt_.size(); ++k)
		{
			const auto& w = inst.workloads.workloads[rt_[k]];
			for (std::size_t l = 0; l < inst.locations.size(); ++l)
			{
				options_[k * inst.locations.size() + l] = build_options(w, inst.locations[l].node);
			}
		}
	}

	const ProblemInstance& instance() const { return *inst_; }
	const Topology& topo() const { return inst_->topo(); }
	std::size_t location_count() const { return inst_->locations.size(); }
	const ComputeLocation& location(std::size_t l) const { return inst_->locations[l]; }
	int location_of_node(NodeId n) const { return loc_of_node_[n.index()]; }

	/// Workload indices (into the workload set) of the real-time workloads.
	const std::vector<std::size_t>& real_time() const { return rt_; }
	const Workload& rt_workload(std::size_t k) const { return inst_->workloads.workloads[rt_[k]]; }

	/// Node-local demand summed per location, and the workloads behind it.
	const Resources& local_load(std::size_t l) const { return local_load_[l]; }
	const std::vector<std::size_t>& local_items(std::size_t l) const { return local_items_[l]; }

	/// Route options of real-time workload k hosted at location l, cheapest
	/// first (ties keep path enumeration order).
	const std::vector<RouteOption>& options(std::size_t k, std::size_t l) const { return options_[k * location_count() + l]; }

	/// Capacity left on a link after regular traffic.
	double free_capacity(LinkId e) const { return free_[e.index()]; }
	const std::vector<double>& power_coefficients() const { return coef_; }
	/// TNPC with no modeled workload traffic.
	double base_tnpc() const { return base_tnpc_; }

	/// The location's own uplink (BO/CS to CO), if any.
	std::optional<LinkId> access_link(std::size_t l) const { return topo().uplink(location(l).node); }

private:
	std::vector<RouteOption> build_options(const Workload& w, NodeId host) const
	{
		const auto& topo = inst_->topo();
		const auto& src_paths = topo.paths_between(host, w.source_node);
		const auto& dc_paths = topo.paths_between(host, topo.datacenter());
		const double rs = inst_->traffic_split.to_source * w.uplink_gbps;
		const double rd = inst_->traffic_split.to_dc * w.uplink_gbps;
		std::vector<RouteOption> out;
		for (std::size_t i = 0; i < src_paths.size(); ++i)
		{
			for (std::size_t j = 0; j < dc_paths.size(); ++j)
			{
				RouteOption opt;
				opt.source_path = i;
				opt.dc_path = j;
				std::vector<double> use(topo.link_count(), 0.0);
				for (auto e : src_paths[i]) { use[e.index()] += rs; }
				for (auto e : dc_paths[j]) { use[e.index()] += rd; }
				for (std::size_t e = 0; e < use.size(); ++e)
				{
					if (use[e] > 0)
					{
						opt.usage.emplace_back(LinkId(e), use[e]);
						opt.power += coef_[e] * use[e];
					}
				}
				out.push_back(std::move(opt));
			}
		}
		std::stable_sort(out.begin(), out.end(), [](const RouteOption& a, const RouteOption& b) { return a.power < b.power; });
		return out;
	}

	const ProblemInstance* inst_;
	std::vector<double> coef_;
	std::vector<int> loc_of_node_;
	std::vector<double> free_;
	double base_tnpc_ = 0;
	std::vector<std::size_t> rt_;
	std::vector<Resources> local_load_;
	std::vector<std::vector<std::size_t>> local_items_;
	std::vector<std::vector<RouteOption>> options_;
};

// Regular traffic file: one line per link,
//
//   fogplace-regular-traffic 1
//   link <id> <gbps>
//
// Links not listed carry no regular traffic.

inline void write_regular_traffic(std::ostream& os, const std::vector<double>& traffic)
{
	os << "fogplace-regular-traffic 1\n";
	for (std::size_t e = 0; e < traffic.size(); ++e) { os << "link " << e << ' ' << text::format_double(traffic[e]) << "\n"; }
}

inline std::vector<double> read_regular_traffic(std::istream& is, std::size_t link_count)
{
	std::string line;
	if (!std::getline(is, line) || text::trim(line) != "fogplace-regular-traffic 1") { throw ParseError("missing regular traffic header"); }
	std::vector<double> out(link_count, 0.0);
	while (std::getline(is, line))
	{
		auto t = text::trim(line);
		if (t.empty() || t.front() == '#') { continue; }
		auto f = text::split(t, ' ');
		if (f.size() != 3 || f[0] != "link") { throw ParseError("bad regular traffic line: " + std::string(t)); }
		auto e = static_cast<std::size_t>(text::parse_int(f[1]));
		if (e >= link_count) { throw ParseError("regular traffic for unknown link " + std::string(f[1])); }
		out[e] = text::parse_double(f[2]);
	}
	return out;
}

} // namespace fogplace

#endif // FOGPLACE_INSTANCE_HPP
