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
 * \file fogplace/power.hpp
 *
 * \brief Total network power consumption (TNPC) of the metro and access
 *  devices for a given per-link traffic vector.
 */

#ifndef FOGPLACE_POWER_HPP
#define FOGPLACE_POWER_HPP

#include <fogplace/common.hpp>
#include <fogplace/topology.hpp>

#include <array>
#include <string>
#include <variant>
#include <vector>

namespace fogplace {

struct PowerBreakdown
{
	double static_total = 0;
	double load_proportional_total = 0;
	/// Watts per device, indexed by device id.
	std::vector<double> per_device;
	/// Watts per segment, indexed by Segment; a device is attributed to the
	/// segment of its class (ONU and OLT: last mile; CPE and access router:
	/// metro access; aggregation router: metro core).
	std::array<double, kSegmentCount> per_segment{0, 0, 0, 0};
	double tnpc = 0;
};

inline Segment device_segment(DeviceKind k)
{
	switch (k)
	{
	case DeviceKind::ONU:
	case DeviceKind::OLT: return Segment::LastMile;
	case DeviceKind::CPE:
	case DeviceKind::AccessRouter: return Segment::MetroAccess;
	case DeviceKind::AggregationRouter: return Segment::MetroCore;
	}
	return Segment::MetroCore;
}

/// Watts added per Gb/s crossing `link`: the sum of the load-proportional
/// devices it charges.
inline double link_power_coefficient(const Topology& topo, LinkId link)
{
	double w = 0;
	for (auto d : topo.link(link).traversed_devices)
	{
		if (const auto* lp = std::get_if<LoadProportionalPower>(&topo.device(d).profile)) { w += lp->watts_per_gbps; }
	}
	return w;
}

inline std::vector<double> link_power_coefficients(const Topology& topo)
{
	std::vector<double> out(topo.link_count());
	for (std::size_t e = 0; e < out.size(); ++e) { out[e] = link_power_coefficient(topo, LinkId(e)); }
	return out;
}

inline double static_power(const Topology& topo)
{
	double w = 0;
	for (const auto& d : topo.devices())
	{
		if (const auto* s = std::get_if<StaticPower>(&d.profile)) { w += s->watts; }
	}
	return w;
}

/// `traffic_gbps` is the total per link, regular traffic included.
inline PowerBreakdown evaluate_power(const Topology& topo, const std::vector<double>& traffic_gbps)
{
	if (traffic_gbps.size() != topo.link_count()) { throw InvalidParameterError("traffic vector size does not match link count"); }
	PowerBreakdown out;
	std::vector<double> device_load(topo.devices().size(), 0.0);
	for (const auto& l : topo.links())
	{
		double t = traffic_gbps[l.id.index()];
		if (t < 0) { throw NegativeTrafficError("negative traffic on link " + std::to_string(l.id.value)); }
		for (auto d : l.traversed_devices) { device_load[d.index()] += t; }
	}
	out.per_device.assign(topo.devices().size(), 0.0);
	for (const auto& d : topo.devices())
	{
		double w = 0;
		if (const auto* s = std::get_if<StaticPower>(&d.profile))
		{
			w = s->watts;
			out.static_total += w;
		}
		else
		{
			w = std::get<LoadProportionalPower>(d.profile).watts_per_gbps * device_load[d.id.index()];
			out.load_proportional_total += w;
		}
		out.per_device[d.id.index()] = w;
		out.per_segment[static_cast<std::size_t>(device_segment(d.kind))] += w;
	}
	out.tnpc = out.static_total + out.load_proportional_total;
	return out;
}

} // namespace fogplace

#endif // FOGPLACE_POWER_HPP
