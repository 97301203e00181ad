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
 * \file fogplace/topology.hpp
 *
 * \brief Metro ring / access network graph: central offices (COs) on a ring,
 *  each fronting an enterprise branch office (BO), a radio cell site (CS) and
 *  a PON tree of ONUs, plus one hyperscale DC behind a gateway CO.
 *
 * Every non-CO node is a leaf attached to exactly one CO (the DC to the
 * gateway CO), so every simple path is: climb to a CO, follow one ring arc,
 * descend. Paths between every ordered node pair are precomputed at
 * construction; the object is immutable afterwards.
 */

#ifndef FOGPLACE_TOPOLOGY_HPP
#define FOGPLACE_TOPOLOGY_HPP

#include <fogplace/common.hpp>

#include <algorithm>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

namespace fogplace {

enum class NodeKind
{
	MetroCO,
	EnterpriseBO,
	RadioCS,
	PonOnu,
	HyperscaleDC
};

inline bool can_host_compute(NodeKind k)
{
	return k == NodeKind::MetroCO || k == NodeKind::EnterpriseBO || k == NodeKind::RadioCS;
}

enum class DeviceKind
{
	CPE,
	AggregationRouter,
	AccessRouter,
	OLT,
	ONU
};

enum class Segment
{
	MetroCore,
	MetroAccess,
	LastMile,
	GatewayUplink
};

inline constexpr int kSegmentCount = 4;

struct StaticPower
{
	double watts = 0;
	friend bool operator==(const StaticPower&, const StaticPower&) = default;
};

struct LoadProportionalPower
{
	double watts_per_gbps = 0;
	friend bool operator==(const LoadProportionalPower&, const LoadProportionalPower&) = default;
};

using PowerProfile = std::variant<StaticPower, LoadProportionalPower>;

/// Per-device-class power values. Defaults are the metro Ethernet / PON
/// profile: CPE and ONU static, routers and OLT load proportional.
struct PowerDefaults
{
	double cpe_watts = 75.0;
	double onu_watts = 15.0;
	double aggregation_router_w_per_gbps = 0.9;
	double access_router_w_per_gbps = 0.243;
	double olt_w_per_gbps = 1.75;
};

struct Node
{
	NodeId id;
	NodeKind kind = NodeKind::MetroCO;
	std::string name;
	/// CO this node hangs off; a CO is its own parent.
	NodeId parent_co;
	/// Position on the ring for COs, -1 otherwise.
	int ring_position = -1;
};

struct NetworkDevice
{
	DeviceId id;
	DeviceKind kind = DeviceKind::CPE;
	PowerProfile profile;
	NodeId attached_node;
};

struct Link
{
	LinkId id;
	NodeId a;
	NodeId b;
	double capacity_gbps = 0;
	Segment segment = Segment::MetroCore;
	/// Devices charged for traffic crossing this link, in charging order.
	std::vector<DeviceId> traversed_devices;
};

inline std::string_view to_string(NodeKind k)
{
	switch (k)
	{
	case NodeKind::MetroCO: return "co";
	case NodeKind::EnterpriseBO: return "bo";
	case NodeKind::RadioCS: return "cs";
	case NodeKind::PonOnu: return "onu";
	case NodeKind::HyperscaleDC: return "dc";
	}
	return "?";
}

inline std::string_view to_string(DeviceKind k)
{
	switch (k)
	{
	case DeviceKind::CPE: return "cpe";
	case DeviceKind::AggregationRouter: return "aggregation_router";
	case DeviceKind::AccessRouter: return "access_router";
	case DeviceKind::OLT: return "olt";
	case DeviceKind::ONU: return "onu";
	}
	return "?";
}

inline std::string_view to_string(Segment s)
{
	switch (s)
	{
	case Segment::MetroCore: return "metro_core";
	case Segment::MetroAccess: return "metro_access";
	case Segment::LastMile: return "last_mile";
	case Segment::GatewayUplink: return "gateway_uplink";
	}
	return "?";
}

inline NodeKind parse_node_kind(std::string_view s)
{
	for (auto k : {NodeKind::MetroCO, NodeKind::EnterpriseBO, NodeKind::RadioCS, NodeKind::PonOnu, NodeKind::HyperscaleDC})
	{
		if (to_string(k) == s) { return k; }
	}
	throw ParseError("unknown node kind '" + std::string(s) + "'");
}

inline DeviceKind parse_device_kind(std::string_view s)
{
	for (auto k : {DeviceKind::CPE, DeviceKind::AggregationRouter, DeviceKind::AccessRouter, DeviceKind::OLT, DeviceKind::ONU})
	{
		if (to_string(k) == s) { return k; }
	}
	throw ParseError("unknown device kind '" + std::string(s) + "'");
}

inline Segment parse_segment(std::string_view s)
{
	for (auto k : {Segment::MetroCore, Segment::MetroAccess, Segment::LastMile, Segment::GatewayUplink})
	{
		if (to_string(k) == s) { return k; }
	}
	throw ParseError("unknown segment '" + std::string(s) + "'");
}

class Topology
{
public:
	Topology(std::vector<Node> nodes, std::vector<Link> links, std::vector<NetworkDevice> devices, NodeId gateway_co)
	: nodes_(std::move(nodes)),
	  links_(std::move(links)),
	  devices_(std::move(devices)),
	  gateway_co_(gateway_co)
	{
		validate();
		index();
	}

	const std::vector<Node>& nodes() const { return nodes_; }
	const std::vector<Link>& links() const { return links_; }
	const std::vector<NetworkDevice>& devices() const { return devices_; }
	const Node& node(NodeId id) const { return nodes_.at(id.index()); }
	const Link& link(LinkId id) const { return links_.at(id.index()); }
	const NetworkDevice& device(DeviceId id) const { return devices_.at(id.index()); }
	std::size_t node_count() const { return nodes_.size(); }
	std::size_t link_count() const { return links_.size(); }

	NodeId gateway_co() const { return gateway_co_; }
	NodeId datacenter() const { return dc_; }
	/// COs in ring order (clockwise = increasing position).
	const std::vector<NodeId>& ring() const { return ring_; }

	/// The link a leaf node uses to reach its CO; empty for a CO.
	std::optional<LinkId> uplink(NodeId n) const
	{
		auto l = uplink_[n.index()];
		if (l < 0) { return std::nullopt; }
		return LinkId(static_cast<std::size_t>(l));
	}

	/// Link joining ring positions p and p+1 (mod ring size).
	LinkId ring_link(std::size_t position) const { return ring_links_.at(position); }

	/// Simple paths from src to dst: one per ring direction when the
	/// endpoints sit under different COs, shorter first and clockwise first
	/// on ties. A node paired with itself yields the single empty path.
	const std::vector<Path>& paths_between(NodeId src, NodeId dst) const
	{
		return paths_.at(src.index() * nodes_.size() + dst.index());
	}

	std::vector<NodeId> nodes_of_kind(NodeKind kind) const
	{
		std::vector<NodeId> out;
		for (const auto& n : nodes_)
		{
			if (n.kind == kind) { out.push_back(n.id); }
		}
		return out;
	}

	/// Children of a CO of the given kind, in id order.
	std::vector<NodeId> children(NodeId co, NodeKind kind) const
	{
		std::vector<NodeId> out;
		for (const auto& n : nodes_)
		{
			if (n.kind == kind && n.kind != NodeKind::MetroCO && n.parent_co == co) { out.push_back(n.id); }
		}
		return out;
	}

	std::optional<NodeId> find_node(std::string_view name) const
	{
		for (const auto& n : nodes_)
		{
			if (n.name == name) { return n.id; }
		}
		return std::nullopt;
	}

private:
	void validate() const
	{
		std::size_t dc_count = 0;
		for (std::size_t i = 0; i < nodes_.size(); ++i)
		{
			const auto& n = nodes_[i];
			if (n.id.index() != i) { throw InstanceInvalidError("node ids must be dense and ordered"); }
			if (n.kind == NodeKind::HyperscaleDC) { ++dc_count; }
			if (n.parent_co.index() >= nodes_.size() || nodes_[n.parent_co.index()].kind != NodeKind::MetroCO)
			{
				throw InstanceInvalidError("node '" + n.name + "' does not attach to a CO");
			}
			if (n.kind == NodeKind::MetroCO && n.parent_co != n.id)
			{
				throw InstanceInvalidError("CO '" + n.name + "' must be its own parent");
			}
		}
		if (dc_count != 1) { throw InstanceInvalidError("topology needs exactly one hyperscale DC"); }
		if (gateway_co_.index() >= nodes_.size() || nodes_[gateway_co_.index()].kind != NodeKind::MetroCO)
		{
			throw InstanceInvalidError("gateway must be a CO");
		}
		for (std::size_t i = 0; i < links_.size(); ++i)
		{
			const auto& l = links_[i];
			if (l.id.index() != i) { throw InstanceInvalidError("link ids must be dense and ordered"); }
			if (!(l.capacity_gbps > 0)) { throw InstanceInvalidError("link capacity must be positive"); }
			if (l.a == l.b) { throw InstanceInvalidError("link endpoints must differ"); }
			if (l.a.index() >= nodes_.size() || l.b.index() >= nodes_.size())
			{
				throw InstanceInvalidError("link endpoint out of range");
			}
			auto ka = nodes_[l.a.index()].kind;
			auto kb = nodes_[l.b.index()].kind;
			auto other = ka == NodeKind::MetroCO ? kb : ka;
			bool ok = false;
			switch (l.segment)
			{
			case Segment::MetroCore: ok = ka == NodeKind::MetroCO && kb == NodeKind::MetroCO; break;
			case Segment::MetroAccess:
				ok = (ka == NodeKind::MetroCO || kb == NodeKind::MetroCO)
					 && (other == NodeKind::EnterpriseBO || other == NodeKind::RadioCS);
				break;
			case Segment::LastMile: ok = (ka == NodeKind::MetroCO || kb == NodeKind::MetroCO) && other == NodeKind::PonOnu; break;
			case Segment::GatewayUplink:
				ok = (ka == NodeKind::MetroCO || kb == NodeKind::MetroCO) && other == NodeKind::HyperscaleDC;
				break;
			}
			if (!ok) { throw InstanceInvalidError("link " + std::to_string(i) + " does not match its segment"); }
			for (auto d : l.traversed_devices)
			{
				if (d.index() >= devices_.size()) { throw InstanceInvalidError("link charges unknown device"); }
			}
		}
		for (std::size_t i = 0; i < devices_.size(); ++i)
		{
			const auto& d = devices_[i];
			if (d.id.index() != i) { throw InstanceInvalidError("device ids must be dense and ordered"); }
			bool ok = std::visit(
				[](const auto& p) {
					using P = std::decay_t<decltype(p)>;
					if constexpr (std::is_same_v<P, StaticPower>) { return p.watts > 0; }
					else { return p.watts_per_gbps > 0; }
				},
				d.profile);
			if (!ok) { throw InstanceInvalidError("device power values must be positive"); }
		}
	}

	void index()
	{
		const std::size_t n = nodes_.size();
		uplink_.assign(n, -1);
		for (const auto& n : nodes_)
		{
			if (n.kind == NodeKind::HyperscaleDC) { dc_ = n.id; }
		}

		// Every leaf has exactly one uplink, to its parent CO.
		std::vector<int> uplink_count(n, 0);
		std::vector<NodeId> cos;
		for (const auto& node : nodes_)
		{
			if (node.kind == NodeKind::MetroCO) { cos.push_back(node.id); }
		}
		for (const auto& l : links_)
		{
			if (l.segment == Segment::MetroCore) { continue; }
			NodeId leaf = nodes_[l.a.index()].kind == NodeKind::MetroCO ? l.b : l.a;
			NodeId co = leaf == l.a ? l.b : l.a;
			NodeId expected = nodes_[leaf.index()].kind == NodeKind::HyperscaleDC ? gateway_co_ : nodes_[leaf.index()].parent_co;
			if (co != expected) { throw InstanceInvalidError("leaf '" + nodes_[leaf.index()].name + "' linked to the wrong CO"); }
			uplink_[leaf.index()] = static_cast<int>(l.id.index());
			++uplink_count[leaf.index()];
		}
		for (const auto& node : nodes_)
		{
			if (node.kind != NodeKind::MetroCO && uplink_count[node.id.index()] != 1)
			{
				throw InstanceInvalidError("node '" + node.name + "' must attach to exactly one CO");
			}
		}

		// Ring: positions 0..k-1, link p joins p and p+1.
		const std::size_t k = cos.size();
		ring_.assign(k, NodeId{});
		std::vector<bool> seen(k, false);
		for (auto c : cos)
		{
			int p = nodes_[c.index()].ring_position;
			if (p < 0 || static_cast<std::size_t>(p) >= k || seen[p]) { throw InstanceInvalidError("CO ring positions must be a permutation"); }
			seen[p] = true;
			ring_[p] = c;
		}
		const std::size_t ring_link_count = k <= 1 ? 0 : (k == 2 ? 1 : k);
		ring_links_.assign(ring_link_count, LinkId{});
		std::vector<int> found(ring_link_count, 0);
		for (const auto& l : links_)
		{
			if (l.segment != Segment::MetroCore) { continue; }
			int pa = nodes_[l.a.index()].ring_position;
			int pb = nodes_[l.b.index()].ring_position;
			int lo = std::min(pa, pb), hi = std::max(pa, pb);
			std::size_t pos;
			if (hi == lo + 1) { pos = static_cast<std::size_t>(lo); }
			else if (lo == 0 && static_cast<std::size_t>(hi) == k - 1 && k > 2) { pos = k - 1; }
			else { throw InstanceInvalidError("metro core link joins non-adjacent ring positions"); }
			if (pos >= ring_link_count || found[pos]++) { throw InstanceInvalidError("CO subgraph is not a single ring"); }
			ring_links_[pos] = l.id;
		}
		for (auto f : found)
		{
			if (f != 1) { throw InstanceInvalidError("CO subgraph is not a single ring"); }
		}

		paths_.assign(n * n, {});
		for (std::size_t a = 0; a < n; ++a)
		{
			for (std::size_t b = 0; b < n; ++b)
			{
				paths_[a * n + b] = compute_paths(NodeId(a), NodeId(b));
			}
		}
	}

	NodeId attach_co(NodeId x) const
	{
		const auto& node = nodes_[x.index()];
		return node.kind == NodeKind::HyperscaleDC ? gateway_co_ : node.parent_co;
	}

	std::vector<Path> compute_paths(NodeId src, NodeId dst) const
	{
		if (src == dst) { return {Path{}}; }
		NodeId ca = attach_co(src);
		NodeId cb = attach_co(dst);
		Path up, down;
		if (src != ca) { up.push_back(LinkId(static_cast<std::size_t>(uplink_[src.index()]))); }
		if (dst != cb) { down.push_back(LinkId(static_cast<std::size_t>(uplink_[dst.index()]))); }
		std::vector<Path> arcs;
		if (ca == cb) { arcs.push_back({}); }
		else
		{
			const std::size_t k = ring_.size();
			const std::size_t pa = static_cast<std::size_t>(nodes_[ca.index()].ring_position);
			const std::size_t pb = static_cast<std::size_t>(nodes_[cb.index()].ring_position);
			Path cw, ccw;
			for (std::size_t p = pa; p != pb; p = (p + 1) % k) { cw.push_back(ring_links_[k == 2 ? 0 : p]); }
			for (std::size_t p = pa; p != pb; p = (p + k - 1) % k) { ccw.push_back(ring_links_[k == 2 ? 0 : (p + k - 1) % k]); }
			arcs.push_back(std::move(cw));
			if (k > 2) { arcs.push_back(std::move(ccw)); }
			// Stable sort keeps clockwise first on equal length.
			std::stable_sort(arcs.begin(), arcs.end(), [](const Path& x, const Path& y) { return x.size() < y.size(); });
		}
		std::vector<Path> out;
		for (auto& arc : arcs)
		{
			Path p = up;
			p.insert(p.end(), arc.begin(), arc.end());
			p.insert(p.end(), down.begin(), down.end());
			out.push_back(std::move(p));
		}
		return out;
	}

	std::vector<Node> nodes_;
	std::vector<Link> links_;
	std::vector<NetworkDevice> devices_;
	NodeId gateway_co_;
	NodeId dc_;
	std::vector<NodeId> ring_;
	std::vector<LinkId> ring_links_;
	std::vector<int> uplink_;
	std::vector<std::vector<Path>> paths_;
};

/// Shape of a ring topology. Per CO: optional BO and CS, a PON tree of
/// `onus_per_co` ONUs behind one OLT.
struct RingSpec
{
	std::size_t co_count = 6;
	std::size_t onus_per_co = 4;
	bool with_bo = true;
	bool with_cs = true;
	double core_link_gbps = 200.0;
	/// CO to BO and CO to CS links.
	double access_link_gbps = 10.0;
	/// CO to ONU links; not scaled with access_link_gbps.
	double last_mile_gbps = 10.0;
	double gateway_link_gbps = 1.0e6;
	std::size_t gateway_ring_position = 0;
	PowerDefaults power;
};

inline Topology build_ring_topology(const RingSpec& spec)
{
	if (spec.co_count < 1) { throw InvalidParameterError("co_count must be at least 1"); }
	if (!(spec.access_link_gbps > 0) || !(spec.core_link_gbps > 0) || !(spec.last_mile_gbps > 0) || !(spec.gateway_link_gbps > 0))
	{
		throw InvalidParameterError("link capacities must be positive");
	}
	if (spec.gateway_ring_position >= spec.co_count) { throw InvalidParameterError("gateway position outside the ring"); }

	std::vector<Node> nodes;
	std::vector<Link> links;
	std::vector<NetworkDevice> devices;

	auto add_node = [&](NodeKind kind, std::string name, NodeId parent, int pos) {
		NodeId id(nodes.size());
		nodes.push_back(Node{id, kind, std::move(name), kind == NodeKind::MetroCO ? id : parent, pos});
		return id;
	};
	auto add_device = [&](DeviceKind kind, PowerProfile profile, NodeId at) {
		DeviceId id(devices.size());
		devices.push_back(NetworkDevice{id, kind, profile, at});
		return id;
	};
	auto add_link = [&](NodeId a, NodeId b, double cap, Segment seg, std::vector<DeviceId> devs) {
		LinkId id(links.size());
		links.push_back(Link{id, a, b, cap, seg, std::move(devs)});
		return id;
	};

	const auto& pw = spec.power;
	std::vector<NodeId> cos;
	std::vector<DeviceId> agg(spec.co_count);
	std::vector<DeviceId> access(spec.co_count);
	std::vector<DeviceId> olt(spec.co_count);
	for (std::size_t k = 0; k < spec.co_count; ++k)
	{
		cos.push_back(add_node(NodeKind::MetroCO, "co" + std::to_string(k), NodeId{}, static_cast<int>(k)));
	}
	for (std::size_t k = 0; k < spec.co_count; ++k)
	{
		agg[k] = add_device(DeviceKind::AggregationRouter, LoadProportionalPower{pw.aggregation_router_w_per_gbps}, cos[k]);
		if (spec.with_bo || spec.with_cs)
		{
			access[k] = add_device(DeviceKind::AccessRouter, LoadProportionalPower{pw.access_router_w_per_gbps}, cos[k]);
		}
		if (spec.onus_per_co > 0)
		{
			olt[k] = add_device(DeviceKind::OLT, LoadProportionalPower{pw.olt_w_per_gbps}, cos[k]);
		}
	}

	const std::size_t k = spec.co_count;
	const std::size_t ring_links = k <= 1 ? 0 : (k == 2 ? 1 : k);
	for (std::size_t p = 0; p < ring_links; ++p)
	{
		std::size_t q = (p + 1) % k;
		add_link(cos[p], cos[q], spec.core_link_gbps, Segment::MetroCore, {agg[p], agg[q]});
	}
	for (std::size_t c = 0; c < k; ++c)
	{
		if (spec.with_bo)
		{
			NodeId bo = add_node(NodeKind::EnterpriseBO, "bo" + std::to_string(c), cos[c], -1);
			DeviceId cpe = add_device(DeviceKind::CPE, StaticPower{pw.cpe_watts}, bo);
			add_link(cos[c], bo, spec.access_link_gbps, Segment::MetroAccess, {cpe, access[c]});
		}
	}
	for (std::size_t c = 0; c < k; ++c)
	{
		if (spec.with_cs)
		{
			NodeId cs = add_node(NodeKind::RadioCS, "cs" + std::to_string(c), cos[c], -1);
			add_link(cos[c], cs, spec.access_link_gbps, Segment::MetroAccess, {access[c]});
		}
	}
	for (std::size_t c = 0; c < k; ++c)
	{
		for (std::size_t j = 0; j < spec.onus_per_co; ++j)
		{
			NodeId onu = add_node(NodeKind::PonOnu, "onu" + std::to_string(c) + "." + std::to_string(j), cos[c], -1);
			DeviceId dev = add_device(DeviceKind::ONU, StaticPower{pw.onu_watts}, onu);
			add_link(cos[c], onu, spec.last_mile_gbps, Segment::LastMile, {dev, olt[c]});
		}
	}
	NodeId gw = cos[spec.gateway_ring_position];
	NodeId dc = add_node(NodeKind::HyperscaleDC, "dc", gw, -1);
	add_link(gw, dc, spec.gateway_link_gbps, Segment::GatewayUplink, {});

	return Topology(std::move(nodes), std::move(links), std::move(devices), gw);
}

/// Six COs on a 200 Gb/s ring, each with one BO, one CS and a 1:N 10G EPON.
/// `access_link_gbps` sets only the CO-BO and CO-CS links.
inline Topology build_paper_topology(double access_link_gbps = 10.0, std::size_t onus_per_co = 4, std::size_t gateway_ring_position = 0)
{
	if (!(access_link_gbps > 0)) { throw InvalidParameterError("access_link_gbps must be positive"); }
	if (onus_per_co < 1) { throw InvalidParameterError("onus_per_co must be at least 1"); }
	RingSpec spec;
	spec.access_link_gbps = access_link_gbps;
	spec.onus_per_co = onus_per_co;
	spec.gateway_ring_position = gateway_ring_position;
	return build_ring_topology(spec);
}

inline std::vector<Path> enumerate_paths(const Topology& topo, NodeId src, NodeId dst)
{
	if (src.index() >= topo.node_count() || dst.index() >= topo.node_count())
	{
		throw InvalidParameterError("path endpoint not in topology");
	}
	if (src == dst) { throw InvalidParameterError("enumerate_paths needs distinct endpoints"); }
	const auto& paths = topo.paths_between(src, dst);
	if (paths.empty()) { throw NoPathError("no path between " + topo.node(src).name + " and " + topo.node(dst).name); }
	return paths;
}

inline std::size_t hop_count(const Topology&, const Path& path) { return path.size(); }

/// True iff `path` is a walk from `src` to `dst` over existing links that
/// visits no node twice.
inline bool is_simple_path(const Topology& topo, const Path& path, NodeId src, NodeId dst)
{
	NodeId at = src;
	std::vector<bool> visited(topo.node_count(), false);
	visited[at.index()] = true;
	for (auto lid : path)
	{
		if (lid.index() >= topo.link_count()) { return false; }
		const auto& l = topo.link(lid);
		NodeId next;
		if (l.a == at) { next = l.b; }
		else if (l.b == at) { next = l.a; }
		else { return false; }
		if (visited[next.index()]) { return false; }
		visited[next.index()] = true;
		at = next;
	}
	return at == dst;
}

// Text format, one record per line, fields separated by single spaces:
//
//   fogplace-topology 1
//   gateway <node-id>
//   node <id> <kind> <name> <parent-co-id> <ring-position>
//   device <id> <kind> static|load <value> <attached-node-id>
//   link <id> <a> <b> <capacity-gbps> <segment> <device-id,...|->
//
// Numbers use the shortest round-trip decimal form.

inline void write_topology(std::ostream& os, const Topology& topo)
{
	os << "fogplace-topology 1\n";
	os << "gateway " << topo.gateway_co().value << "\n";
	for (const auto& n : topo.nodes())
	{
		os << "node " << n.id.value << ' ' << to_string(n.kind) << ' ' << n.name << ' ' << n.parent_co.value << ' '
		   << n.ring_position << "\n";
	}
	for (const auto& d : topo.devices())
	{
		os << "device " << d.id.value << ' ' << to_string(d.kind) << ' ';
		if (const auto* s = std::get_if<StaticPower>(&d.profile)) { os << "static " << text::format_double(s->watts); }
		else { os << "load " << text::format_double(std::get<LoadProportionalPower>(d.profile).watts_per_gbps); }
		os << ' ' << d.attached_node.value << "\n";
	}
	for (const auto& l : topo.links())
	{
		os << "link " << l.id.value << ' ' << l.a.value << ' ' << l.b.value << ' ' << text::format_double(l.capacity_gbps) << ' '
		   << to_string(l.segment) << ' ';
		if (l.traversed_devices.empty()) { os << '-'; }
		for (std::size_t i = 0; i < l.traversed_devices.size(); ++i)
		{
			os << (i ? "," : "") << l.traversed_devices[i].value;
		}
		os << "\n";
	}
}

inline Topology read_topology(std::istream& is)
{
	std::string line;
	if (!std::getline(is, line) || text::trim(line) != "fogplace-topology 1") { throw ParseError("missing topology header"); }
	std::vector<Node> nodes;
	std::vector<Link> links;
	std::vector<NetworkDevice> devices;
	std::optional<NodeId> gateway;
	auto to_u = [](std::string_view s) { return static_cast<std::size_t>(text::parse_int(s)); };
	while (std::getline(is, line))
	{
		auto t = text::trim(line);
		if (t.empty() || t.front() == '#') { continue; }
		auto f = text::split(t, ' ');
		if (f[0] == "gateway" && f.size() == 2) { gateway = NodeId(to_u(f[1])); }
		else if (f[0] == "node" && f.size() == 6)
		{
			nodes.push_back(Node{NodeId(to_u(f[1])), parse_node_kind(f[2]), std::string(f[3]), NodeId(to_u(f[4])),
								 static_cast<int>(text::parse_int(f[5]))});
		}
		else if (f[0] == "device" && f.size() == 6)
		{
			PowerProfile p;
			double v = text::parse_double(f[4]);
			if (f[3] == "static") { p = StaticPower{v}; }
			else if (f[3] == "load") { p = LoadProportionalPower{v}; }
			else { throw ParseError("unknown power profile '" + std::string(f[3]) + "'"); }
			devices.push_back(NetworkDevice{DeviceId(to_u(f[1])), parse_device_kind(f[2]), p, NodeId(to_u(f[5]))});
		}
		else if (f[0] == "link" && f.size() == 7)
		{
			std::vector<DeviceId> devs;
			if (f[6] != "-")
			{
				for (auto d : text::split(f[6], ',')) { devs.push_back(DeviceId(to_u(d))); }
			}
			links.push_back(Link{LinkId(to_u(f[1])), NodeId(to_u(f[2])), NodeId(to_u(f[3])), text::parse_double(f[4]),
								 parse_segment(f[5]), std::move(devs)});
		}
		else { throw ParseError("bad topology line: " + std::string(t)); }
	}
	if (!gateway) { throw ParseError("topology has no gateway line"); }
	return Topology(std::move(nodes), std::move(links), std::move(devices), *gateway);
}

} // namespace fogplace

#endif // FOGPLACE_TOPOLOGY_HPP
