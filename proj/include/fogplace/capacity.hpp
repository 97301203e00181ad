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
 * \file fogplace/capacity.hpp
 *
 * \brief Compute capacity of fog locations under traditional (TS) and
 *  disaggregated (DS) server semantics, and the activation accounting that
 *  turns an assignment into active server (NS) and component (NC) counts.
 *
 * A chassis holds one CPU, one RAM and one storage component. In TS mode a
 * workload takes all three resources from one chassis and an active chassis
 * activates its three components. In DS mode each location pools its
 * components per resource type; the fewest components covering the summed
 * demand are activated and packed into the fewest chassis.
 */

#ifndef FOGPLACE_CAPACITY_HPP
#define FOGPLACE_CAPACITY_HPP

#include <fogplace/common.hpp>
#include <fogplace/topology.hpp>
#include <fogplace/workload.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <optional>
#include <vector>

namespace fogplace {

/// Slack used when comparing summed floating-point demands with capacity.
inline constexpr double kCapacityEps = 1e-9;

struct ServerConfig
{
	Resources capacity{12, 64, 300};
};

struct ComputeLocation
{
	NodeId node;
	std::size_t server_count = 0;
	ServerConfig config;

	Resources total_capacity() const
	{
		Resources r = config.capacity;
		for (auto& x : r.v) { x *= static_cast<double>(server_count); }
		return r;
	}
};

enum class PlacementMode
{
	Traditional,
	Disaggregated
};

inline std::string_view to_string(PlacementMode m) { return m == PlacementMode::Traditional ? "ts" : "ds"; }

inline PlacementMode parse_placement_mode(std::string_view s)
{
	if (s == "ts") { return PlacementMode::Traditional; }
	if (s == "ds") { return PlacementMode::Disaggregated; }
	throw ParseError("unknown placement mode '" + std::string(s) + "'");
}

/// Six servers per CO, six per BO, four per CS.
inline std::vector<ComputeLocation> paper_compute_locations(const Topology& topo, ServerConfig config = {})
{
	std::vector<ComputeLocation> out;
	for (const auto& n : topo.nodes())
	{
		switch (n.kind)
		{
		case NodeKind::MetroCO: out.push_back({n.id, 6, config}); break;
		case NodeKind::EnterpriseBO: out.push_back({n.id, 6, config}); break;
		case NodeKind::RadioCS: out.push_back({n.id, 4, config}); break;
		default: break;
		}
	}
	return out;
}

inline bool fits_within(const Resources& demand, const Resources& room)
{
	for (std::size_t r = 0; r < kResourceCount; ++r)
	{
		if (demand[r] > room[r] + kCapacityEps) { return false; }
	}
	return true;
}

/// TS locality: all three demands must fit the residual of one chassis.
inline bool fits_on_server(const Resources& demand, const ServerConfig& config, const Resources& residual)
{
	for (std::size_t r = 0; r < kResourceCount; ++r)
	{
		if (residual[r] > config.capacity[r] + kCapacityEps || residual[r] < -kCapacityEps)
		{
			throw InvalidParameterError("residual exceeds server capacity");
		}
	}
	return fits_within(demand, residual);
}

/// Components of one type needed to cover `demand`.
inline std::size_t components_needed(double demand, double unit_capacity)
{
	if (demand <= kCapacityEps) { return 0; }
	return static_cast<std::size_t>(std::ceil(demand / unit_capacity - kCapacityEps));
}

inline Resources sum_demands(const std::vector<Resources>& demands)
{
	Resources total;
	for (const auto& d : demands) { total += d; }
	return total;
}

/// DS pooling: per resource type, total demand within the location's
/// server_count x per-server capacity. Pools never span locations.
inline bool ds_allocation_feasible(const std::vector<Resources>& demands, const ComputeLocation& location)
{
	return fits_within(sum_demands(demands), location.total_capacity());
}

/// Active components per chassis (cpu, ram, storage).
using ChassisState = std::array<bool, kResourceCount>;

struct LocationActivation
{
	NodeId node;
	std::vector<ChassisState> chassis;

	std::size_t active_servers() const
	{
		return static_cast<std::size_t>(std::count_if(chassis.begin(), chassis.end(), [](const ChassisState& c) {
			return c[0] || c[1] || c[2];
		}));
	}
	std::size_t active_components() const
	{
		std::size_t n = 0;
		for (const auto& c : chassis) { n += c[0] + c[1] + c[2]; }
		return n;
	}
	std::size_t active_components(ResourceType r) const
	{
		std::size_t n = 0;
		for (const auto& c : chassis) { n += c[static_cast<std::size_t>(r)]; }
		return n;
	}
	friend bool operator==(const LocationActivation&, const LocationActivation&) = default;
};

using ActivationMap = std::vector<LocationActivation>;

struct ActivationSummary
{
	ActivationMap map;
	std::vector<std::size_t> servers_per_location;
	std::size_t active_servers = 0;
	std::size_t active_components = 0;
};

/// Workloads placed at one location; `servers` gives the chassis index of
/// each demand and is consulted only in TS mode.
struct LocationAssignment
{
	ComputeLocation location;
	std::vector<Resources> demands;
	std::vector<int> servers;
};

/// DS activation of one location: per type the minimum component count, the
/// components filling chassis 0, 1, ... in order.
inline LocationActivation ds_location_activation(const ComputeLocation& loc, const Resources& total_demand)
{
	LocationActivation act{loc.node, std::vector<ChassisState>(loc.server_count, ChassisState{false, false, false})};
	for (std::size_t r = 0; r < kResourceCount; ++r)
	{
		std::size_t n = components_needed(total_demand[r], loc.config.capacity[r]);
		if (n > loc.server_count)
		{
			throw InfeasibleAssignmentError("pooled " + std::string(to_string(static_cast<ResourceType>(r))) + " demand exceeds location capacity");
		}
		for (std::size_t c = 0; c < n; ++c) { act.chassis[c][r] = true; }
	}
	return act;
}

inline LocationActivation ts_location_activation(const LocationAssignment& a)
{
	const auto& loc = a.location;
	if (a.servers.size() != a.demands.size()) { throw InfeasibleAssignmentError("every TS demand needs a server index"); }
	std::vector<Resources> used(loc.server_count);
	LocationActivation act{loc.node, std::vector<ChassisState>(loc.server_count, ChassisState{false, false, false})};
	for (std::size_t i = 0; i < a.demands.size(); ++i)
	{
		int s = a.servers[i];
		if (s < 0 || static_cast<std::size_t>(s) >= loc.server_count) { throw InfeasibleAssignmentError("server index out of range"); }
		used[s] += a.demands[i];
		act.chassis[s] = ChassisState{true, true, true};
	}
	for (const auto& u : used)
	{
		if (!fits_within(u, loc.config.capacity)) { throw InfeasibleAssignmentError("server capacity exceeded"); }
	}
	return act;
}

inline ActivationSummary activation_accounting(const std::vector<LocationAssignment>& assignment, PlacementMode mode)
{
	ActivationSummary out;
	for (const auto& a : assignment)
	{
		LocationActivation act = mode == PlacementMode::Traditional ? ts_location_activation(a)
																	 : ds_location_activation(a.location, sum_demands(a.demands));
		out.servers_per_location.push_back(act.active_servers());
		out.active_servers += act.active_servers();
		out.active_components += act.active_components();
		out.map.push_back(std::move(act));
	}
	return out;
}

/// Lower bound on chassis needed for `demands` in TS mode: the pooled bound,
/// and per type the count of demands above half a chassis (pairwise
/// incompatible).
inline std::size_t ts_bin_lower_bound(const std::vector<Resources>& demands, const ServerConfig& config)
{
	std::size_t lb = 0;
	Resources total = sum_demands(demands);
	for (std::size_t r = 0; r < kResourceCount; ++r)
	{
		lb = std::max(lb, components_needed(total[r], config.capacity[r]));
		std::size_t big = 0;
		for (const auto& d : demands) { big += d[r] > 0.5 * config.capacity[r] + kCapacityEps; }
		lb = std::max(lb, big);
	}
	return lb;
}

namespace detail {

class BinPacker
{
public:
	BinPacker(const std::vector<Resources>& demands, const ServerConfig& config) : demands_(demands), config_(config)
	{
		order_.resize(demands.size());
		std::iota(order_.begin(), order_.end(), 0);
		auto size = [&](std::size_t i) {
			double s = 0;
			for (std::size_t r = 0; r < kResourceCount; ++r) { s += demands_[i][r] / config_.capacity[r]; }
			return s;
		};
		std::stable_sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) { return size(a) > size(b); });
	}

	/// Assignment into at most `bins` chassis, or nullopt.
	std::optional<std::vector<int>> pack(std::size_t bins)
	{
		load_.assign(bins, Resources{});
		slot_.assign(demands_.size(), -1);
		budget_ = 2'000'000;
		if (dfs(0, 0)) { return slot_; }
		if (budget_ <= 0) { throw Error("bin packing search budget exhausted"); }
		return std::nullopt;
	}

private:
	bool dfs(std::size_t k, std::size_t open)
	{
		if (--budget_ <= 0) { return false; }
		if (k == order_.size()) { return true; }
		const std::size_t i = order_[k];
		for (std::size_t b = 0; b < load_.size() && b <= open; ++b)
		{
			Resources next = load_[b] + demands_[i];
			if (!fits_within(next, config_.capacity)) { continue; }
			Resources prev = load_[b];
			load_[b] = next;
			slot_[i] = static_cast<int>(b);
			if (dfs(k + 1, std::max(open, b + 1))) { return true; }
			load_[b] = prev;
			slot_[i] = -1;
			if (budget_ <= 0) { return false; }
		}
		return false;
	}

	const std::vector<Resources>& demands_;
	ServerConfig config_;
	std::vector<std::size_t> order_;
	std::vector<Resources> load_;
	std::vector<int> slot_;
	long budget_ = 0;
};

} // namespace detail

/// Exact minimum-chassis TS packing of `demands` into at most `max_servers`
/// chassis. Returns the chassis index per demand, using chassis 0..k-1 for
/// the minimum k; nullopt when no packing exists.
inline std::optional<std::vector<int>> pack_min_servers(const std::vector<Resources>& demands, const ServerConfig& config,
														std::size_t max_servers)
{
	if (demands.empty()) { return std::vector<int>{}; }
	for (const auto& d : demands)
	{
		if (!fits_within(d, config.capacity)) { return std::nullopt; }
	}
	detail::BinPacker packer(demands, config);
	for (std::size_t k = std::max<std::size_t>(1, ts_bin_lower_bound(demands, config)); k <= max_servers; ++k)
	{
		if (auto slots = packer.pack(k)) { return slots; }
	}
	return std::nullopt;
}

} // namespace fogplace

#endif // FOGPLACE_CAPACITY_HPP
