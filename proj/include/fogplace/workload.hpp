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
 * \file fogplace/workload.hpp
 *
 * \brief Seeded workload population: node-local VMs/VNFs pinned to CO, BO and
 *  CS locations, and real-time workloads sourced at CSs and ONUs.
 *
 * Random draws: every workload owns an independent std::mt19937_64 stream
 * whose seed is derived from (seed, role, CO ring position, child ordinal,
 * ordinal) through the SplitMix64 finalizer, so changing one count never
 * reshuffles the draws of other workloads. Raw 64-bit outputs are mapped to
 * [0,1) by taking their top 53 bits; no std distribution is used, which keeps
 * the population identical across standard library implementations.
 */

#ifndef FOGPLACE_WORKLOAD_HPP
#define FOGPLACE_WORKLOAD_HPP

#include <fogplace/common.hpp>
#include <fogplace/topology.hpp>

#include <array>
#include <cmath>
#include <cstdint>
#include <istream>
#include <ostream>
#include <random>
#include <vector>

namespace fogplace {

enum class ResourceType
{
	Cpu = 0,
	Ram = 1,
	Storage = 2
};

inline constexpr std::size_t kResourceCount = 3;

inline std::string_view to_string(ResourceType r)
{
	switch (r)
	{
	case ResourceType::Cpu: return "cpu";
	case ResourceType::Ram: return "ram";
	case ResourceType::Storage: return "storage";
	}
	return "?";
}

/// CPU cores, RAM GB, storage GB.
struct Resources
{
	std::array<double, kResourceCount> v{0, 0, 0};

	Resources() = default;
	Resources(double cores, double ram, double storage) : v{cores, ram, storage} {}

	double cpu_cores() const { return v[0]; }
	double ram_gb() const { return v[1]; }
	double storage_gb() const { return v[2]; }
	double& operator[](std::size_t r) { return v[r]; }
	double operator[](std::size_t r) const { return v[r]; }
	double& operator[](ResourceType r) { return v[static_cast<std::size_t>(r)]; }
	double operator[](ResourceType r) const { return v[static_cast<std::size_t>(r)]; }

	Resources& operator+=(const Resources& o)
	{
		for (std::size_t r = 0; r < kResourceCount; ++r) { v[r] += o.v[r]; }
		return *this;
	}
	Resources& operator-=(const Resources& o)
	{
		for (std::size_t r = 0; r < kResourceCount; ++r) { v[r] -= o.v[r]; }
		return *this;
	}
	friend Resources operator+(Resources a, const Resources& b) { return a += b; }
	friend Resources operator-(Resources a, const Resources& b) { return a -= b; }
	friend bool operator==(const Resources&, const Resources&) = default;
};

enum class WorkloadKind
{
	NodeLocal,
	RealTime
};

struct Workload
{
	WorkloadId id;
	WorkloadKind kind = WorkloadKind::RealTime;
	NodeId source_node;
	Resources demand;
	double uplink_gbps = 0;
	/// Equal to source_node for node-local workloads; unused otherwise.
	NodeId home_location;

	bool is_real_time() const { return kind == WorkloadKind::RealTime; }
	double cpu_cores() const { return demand.cpu_cores(); }
	double ram_gb() const { return demand.ram_gb(); }
	double storage_gb() const { return demand.storage_gb(); }
};

struct WorkloadSet
{
	std::vector<Workload> workloads;
	std::uint64_t seed = 0;
	double traffic_scale = 1.0;

	std::size_t size() const { return workloads.size(); }
	std::size_t count(WorkloadKind k) const
	{
		std::size_t n = 0;
		for (const auto& w : workloads) { n += w.kind == k; }
		return n;
	}
};

/// Closed ranges that demands are drawn from.
struct DemandRanges
{
	int min_cores = 3;
	int max_cores = 12;
	double min_ram_gb = 20;
	double max_ram_gb = 60;
	double min_storage_gb = 20;
	double max_storage_gb = 120;
	double min_uplink_gbps = 1;
	double max_uplink_gbps = 2;
};

/// Workloads per CO group.
struct WorkloadCounts
{
	std::size_t co_local = 4;
	std::size_t bo_local = 4;
	std::size_t cs_local = 2;
	std::size_t real_time_per_cs = 1;
	std::size_t real_time_per_onu = 1;
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x)
{
	x += 0x9e3779b97f4a7c15ULL;
	x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
	x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
	return x ^ (x >> 31);
}

enum class Role : std::uint64_t
{
	CoLocal = 1,
	BoLocal = 2,
	CsLocal = 3,
	CsRealTime = 4,
	OnuRealTime = 5
};

inline std::uint64_t stream_seed(std::uint64_t seed, Role role, std::uint64_t co, std::uint64_t child, std::uint64_t ordinal)
{
	std::uint64_t h = splitmix64(seed);
	for (std::uint64_t part : {static_cast<std::uint64_t>(role), co, child, ordinal})
	{
		h = splitmix64(h ^ part);
	}
	return h;
}

inline double unit_interval(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

} // namespace detail

inline Workload draw_workload(std::uint64_t stream, const DemandRanges& ranges)
{
	std::mt19937_64 rng(stream);
	Workload w;
	const int span = ranges.max_cores - ranges.min_cores + 1;
	const double cores = ranges.min_cores + std::floor(detail::unit_interval(rng) * span);
	const double ram = ranges.min_ram_gb + (ranges.max_ram_gb - ranges.min_ram_gb) * detail::unit_interval(rng);
	const double storage = ranges.min_storage_gb + (ranges.max_storage_gb - ranges.min_storage_gb) * detail::unit_interval(rng);
	w.demand = Resources(cores, ram, storage);
	w.uplink_gbps = ranges.min_uplink_gbps + (ranges.max_uplink_gbps - ranges.min_uplink_gbps) * detail::unit_interval(rng);
	return w;
}

/// Population per CO, in ring order: CO-local, BO-local, CS-local, CS
/// real-time, then ONU real-time workloads. Ids are assigned in that order.
inline WorkloadSet generate_workloads(const Topology& topo, std::uint64_t seed, const WorkloadCounts& counts = {},
									  const DemandRanges& ranges = {})
{
	if (ranges.min_cores > ranges.max_cores || ranges.min_ram_gb > ranges.max_ram_gb
		|| ranges.min_storage_gb > ranges.max_storage_gb || ranges.min_uplink_gbps > ranges.max_uplink_gbps)
	{
		throw InvalidParameterError("demand range bounds are inverted");
	}
	WorkloadSet set;
	set.seed = seed;
	auto emit = [&](detail::Role role, std::size_t co, std::size_t child, std::size_t ordinal, WorkloadKind kind, NodeId source) {
		Workload w = draw_workload(detail::stream_seed(seed, role, co, child, ordinal), ranges);
		w.id = WorkloadId(set.workloads.size());
		w.kind = kind;
		w.source_node = source;
		w.home_location = kind == WorkloadKind::NodeLocal ? source : NodeId{};
		set.workloads.push_back(w);
	};
	const auto& ring = topo.ring();
	for (std::size_t pos = 0; pos < ring.size(); ++pos)
	{
		NodeId co = ring[pos];
		for (std::size_t i = 0; i < counts.co_local; ++i) { emit(detail::Role::CoLocal, pos, 0, i, WorkloadKind::NodeLocal, co); }
		auto bos = topo.children(co, NodeKind::EnterpriseBO);
		for (std::size_t c = 0; c < bos.size(); ++c)
		{
			for (std::size_t i = 0; i < counts.bo_local; ++i) { emit(detail::Role::BoLocal, pos, c, i, WorkloadKind::NodeLocal, bos[c]); }
		}
		auto css = topo.children(co, NodeKind::RadioCS);
		for (std::size_t c = 0; c < css.size(); ++c)
		{
			for (std::size_t i = 0; i < counts.cs_local; ++i) { emit(detail::Role::CsLocal, pos, c, i, WorkloadKind::NodeLocal, css[c]); }
		}
		for (std::size_t c = 0; c < css.size(); ++c)
		{
			for (std::size_t i = 0; i < counts.real_time_per_cs; ++i)
			{
				emit(detail::Role::CsRealTime, pos, c, i, WorkloadKind::RealTime, css[c]);
			}
		}
		auto onus = topo.children(co, NodeKind::PonOnu);
		for (std::size_t c = 0; c < onus.size(); ++c)
		{
			for (std::size_t i = 0; i < counts.real_time_per_onu; ++i)
			{
				emit(detail::Role::OnuRealTime, pos, c, i, WorkloadKind::RealTime, onus[c]);
			}
		}
	}
	return set;
}

/// Multiplies every real-time uplink rate by `scale`; node-local workloads
/// carry no modeled traffic and are left alone.
inline WorkloadSet apply_traffic_scale(WorkloadSet set, double scale)
{
	if (!(scale > 0)) { throw InvalidParameterError("traffic scale must be positive"); }
	for (auto& w : set.workloads)
	{
		if (w.is_real_time()) { w.uplink_gbps *= scale; }
	}
	set.traffic_scale *= scale;
	return set;
}

// Text format:
//
//   fogplace-workloads 1
//   seed <u64>
//   traffic_scale <x>
//   workload <id> node_local|real_time <source-node-id> <cores> <ram-gb> <storage-gb> <uplink-gbps> <home-node-id|->

inline void write_workloads(std::ostream& os, const WorkloadSet& set)
{
	os << "fogplace-workloads 1\n";
	os << "seed " << set.seed << "\n";
	os << "traffic_scale " << text::format_double(set.traffic_scale) << "\n";
	for (const auto& w : set.workloads)
	{
		os << "workload " << w.id.value << ' ' << (w.is_real_time() ? "real_time" : "node_local") << ' ' << w.source_node.value << ' '
		   << text::format_double(w.cpu_cores()) << ' ' << text::format_double(w.ram_gb()) << ' ' << text::format_double(w.storage_gb())
		   << ' ' << text::format_double(w.uplink_gbps) << ' ';
		if (w.is_real_time()) { os << '-'; }
		else { os << w.home_location.value; }
		os << "\n";
	}
}

inline WorkloadSet read_workloads(std::istream& is)
{
	std::string line;
	if (!std::getline(is, line) || text::trim(line) != "fogplace-workloads 1") { throw ParseError("missing workloads header"); }
	WorkloadSet set;
	while (std::getline(is, line))
	{
		auto t = text::trim(line);
		if (t.empty() || t.front() == '#') { continue; }
		auto f = text::split(t, ' ');
		if (f[0] == "seed" && f.size() == 2)
		{
			std::uint64_t v = 0;
			auto res = std::from_chars(f[1].data(), f[1].data() + f[1].size(), v);
			if (res.ec != std::errc()) { throw ParseError("bad seed"); }
			set.seed = v;
		}
		else if (f[0] == "traffic_scale" && f.size() == 2) { set.traffic_scale = text::parse_double(f[1]); }
		else if (f[0] == "workload" && f.size() == 9)
		{
			Workload w;
			w.id = WorkloadId(static_cast<std::size_t>(text::parse_int(f[1])));
			if (w.id.index() != set.workloads.size()) { throw ParseError("workload ids must be dense and ordered"); }
			if (f[2] == "real_time") { w.kind = WorkloadKind::RealTime; }
			else if (f[2] == "node_local") { w.kind = WorkloadKind::NodeLocal; }
			else { throw ParseError("unknown workload kind '" + std::string(f[2]) + "'"); }
			w.source_node = NodeId(static_cast<std::size_t>(text::parse_int(f[3])));
			w.demand = Resources(text::parse_double(f[4]), text::parse_double(f[5]), text::parse_double(f[6]));
			w.uplink_gbps = text::parse_double(f[7]);
			if (f[8] != "-") { w.home_location = NodeId(static_cast<std::size_t>(text::parse_int(f[8]))); }
			set.workloads.push_back(w);
		}
		else { throw ParseError("bad workloads line: " + std::string(t)); }
	}
	return set;
}

} // namespace fogplace

#endif // FOGPLACE_WORKLOAD_HPP
