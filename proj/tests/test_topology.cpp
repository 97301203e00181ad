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

#include <fogplace/topology.hpp>

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

using namespace fogplace;

namespace {

std::map<Segment, std::size_t> count_segments(const Topology& topo)
{
	std::map<Segment, std::size_t> out;
	for (const auto& l : topo.links()) { ++out[l.segment]; }
	return out;
}

NodeId by_name(const Topology& topo, std::string_view name)
{
	auto n = topo.find_node(name);
	EXPECT_TRUE(n.has_value()) << name;
	return *n;
}

// Reference shortest-path lengths by breadth-first search over the CO ring.
std::size_t bfs_hops(const Topology& topo, NodeId src, NodeId dst)
{
	std::vector<int> dist(topo.node_count(), -1);
	std::vector<NodeId> queue{src};
	dist[src.index()] = 0;
	for (std::size_t i = 0; i < queue.size(); ++i)
	{
		NodeId at = queue[i];
		for (const auto& l : topo.links())
		{
			NodeId next;
			if (l.a == at) { next = l.b; }
			else if (l.b == at) { next = l.a; }
			else { continue; }
			if (dist[next.index()] < 0)
			{
				dist[next.index()] = dist[at.index()] + 1;
				queue.push_back(next);
			}
		}
	}
	return static_cast<std::size_t>(dist[dst.index()]);
}

} // namespace

TEST(PaperTopology, LinkCountsAt10G)
{
	auto topo = build_paper_topology(10, 4);
	auto seg = count_segments(topo);
	EXPECT_EQ(seg[Segment::MetroCore], 6u);
	EXPECT_EQ(seg[Segment::MetroAccess], 12u);
	EXPECT_EQ(seg[Segment::LastMile], 24u);
	EXPECT_EQ(seg[Segment::GatewayUplink], 1u);
	EXPECT_EQ(topo.link_count(), 43u);
	EXPECT_EQ(topo.nodes_of_kind(NodeKind::MetroCO).size(), 6u);
	EXPECT_EQ(topo.nodes_of_kind(NodeKind::EnterpriseBO).size(), 6u);
	EXPECT_EQ(topo.nodes_of_kind(NodeKind::RadioCS).size(), 6u);
	EXPECT_EQ(topo.nodes_of_kind(NodeKind::PonOnu).size(), 24u);
	EXPECT_EQ(topo.nodes_of_kind(NodeKind::HyperscaleDC).size(), 1u);
	for (const auto& l : topo.links())
	{
		switch (l.segment)
		{
		case Segment::MetroCore: EXPECT_DOUBLE_EQ(l.capacity_gbps, 200); break;
		case Segment::MetroAccess: EXPECT_DOUBLE_EQ(l.capacity_gbps, 10); break;
		case Segment::LastMile: EXPECT_DOUBLE_EQ(l.capacity_gbps, 10); break;
		case Segment::GatewayUplink: EXPECT_GE(l.capacity_gbps, 1e5); break;
		}
	}
}

TEST(PaperTopology, FortyGigScalesOnlyBoAndCsLinks)
{
	auto topo = build_paper_topology(40, 4);
	EXPECT_EQ(topo.link_count(), 43u);
	for (const auto& l : topo.links())
	{
		if (l.segment == Segment::MetroAccess) { EXPECT_DOUBLE_EQ(l.capacity_gbps, 40); }
		if (l.segment == Segment::LastMile) { EXPECT_DOUBLE_EQ(l.capacity_gbps, 10); }
		if (l.segment == Segment::MetroCore) { EXPECT_DOUBLE_EQ(l.capacity_gbps, 200); }
	}
}

TEST(PaperTopology, OneOnuPerCo)
{
	auto topo = build_paper_topology(10, 1);
	auto seg = count_segments(topo);
	EXPECT_EQ(seg[Segment::LastMile], 6u);
	EXPECT_EQ(seg[Segment::MetroCore], 6u);
	EXPECT_EQ(seg[Segment::MetroAccess], 12u);
	EXPECT_EQ(seg[Segment::GatewayUplink], 1u);
}

TEST(PaperTopology, RejectsBadParameters)
{
	EXPECT_THROW(build_paper_topology(0, 4), InvalidParameterError);
	EXPECT_THROW(build_paper_topology(10, 0), InvalidParameterError);
	EXPECT_THROW(build_paper_topology(10, 4, 6), InvalidParameterError);
	EXPECT_NO_THROW(build_paper_topology(25, 2));
}

TEST(PaperTopology, DeviceDefaults)
{
	auto topo = build_paper_topology();
	std::map<DeviceKind, std::size_t> n;
	for (const auto& d : topo.devices())
	{
		++n[d.kind];
		switch (d.kind)
		{
		case DeviceKind::CPE: EXPECT_EQ(d.profile, PowerProfile(StaticPower{75})); break;
		case DeviceKind::ONU: EXPECT_EQ(d.profile, PowerProfile(StaticPower{15})); break;
		case DeviceKind::AggregationRouter: EXPECT_EQ(d.profile, PowerProfile(LoadProportionalPower{0.9})); break;
		case DeviceKind::AccessRouter: EXPECT_EQ(d.profile, PowerProfile(LoadProportionalPower{0.243})); break;
		case DeviceKind::OLT: EXPECT_EQ(d.profile, PowerProfile(LoadProportionalPower{1.75})); break;
		}
	}
	EXPECT_EQ(n[DeviceKind::CPE], 6u);
	EXPECT_EQ(n[DeviceKind::ONU], 24u);
	EXPECT_EQ(n[DeviceKind::AggregationRouter], 6u);
	EXPECT_EQ(n[DeviceKind::AccessRouter], 6u);
	EXPECT_EQ(n[DeviceKind::OLT], 6u);
}

TEST(PaperTopology, LinkChargingRule)
{
	auto topo = build_paper_topology();
	for (const auto& l : topo.links())
	{
		std::multiset<DeviceKind> kinds;
		for (auto d : l.traversed_devices) { kinds.insert(topo.device(d).kind); }
		const auto& far = topo.node(l.b);
		switch (l.segment)
		{
		case Segment::MetroCore:
			EXPECT_EQ(kinds, (std::multiset<DeviceKind>{DeviceKind::AggregationRouter, DeviceKind::AggregationRouter}));
			EXPECT_NE(topo.device(l.traversed_devices[0]).attached_node, topo.device(l.traversed_devices[1]).attached_node);
			break;
		case Segment::MetroAccess:
			if (far.kind == NodeKind::EnterpriseBO) { EXPECT_EQ(kinds, (std::multiset<DeviceKind>{DeviceKind::CPE, DeviceKind::AccessRouter})); }
			else { EXPECT_EQ(kinds, (std::multiset<DeviceKind>{DeviceKind::AccessRouter})); }
			break;
		case Segment::LastMile: EXPECT_EQ(kinds, (std::multiset<DeviceKind>{DeviceKind::ONU, DeviceKind::OLT})); break;
		case Segment::GatewayUplink: EXPECT_TRUE(kinds.empty()); break;
		}
	}
}

TEST(PaperTopology, StructuralInvariants)
{
	auto topo = build_paper_topology();
	EXPECT_EQ(topo.ring().size(), 6u);
	EXPECT_EQ(topo.gateway_co(), topo.ring()[0]);
	for (const auto& n : topo.nodes())
	{
		if (n.kind == NodeKind::MetroCO || n.kind == NodeKind::HyperscaleDC) { continue; }
		ASSERT_TRUE(topo.uplink(n.id).has_value());
		const auto& l = topo.link(*topo.uplink(n.id));
		EXPECT_TRUE((l.a == n.parent_co && l.b == n.id) || (l.b == n.parent_co && l.a == n.id));
		std::size_t degree = 0;
		for (const auto& m : topo.links()) { degree += m.a == n.id || m.b == n.id; }
		EXPECT_EQ(degree, 1u) << n.name;
	}
	for (const auto& l : topo.links())
	{
		EXPECT_NE(l.a, l.b);
		EXPECT_GT(l.capacity_gbps, 0);
	}
}

TEST(PaperTopology, GatewayPositionIsConfigurable)
{
	auto topo = build_paper_topology(10, 4, 3);
	EXPECT_EQ(topo.gateway_co(), topo.ring()[3]);
	const auto& up = topo.link(*topo.uplink(topo.datacenter()));
	EXPECT_EQ(up.segment, Segment::GatewayUplink);
	EXPECT_TRUE(up.a == topo.ring()[3] || up.b == topo.ring()[3]);
}

TEST(PaperTopology, RingSurvivesAnySingleCoreCut)
{
	auto topo = build_paper_topology();
	const auto& ring = topo.ring();
	for (std::size_t cut = 0; cut < ring.size(); ++cut)
	{
		std::set<NodeId> seen{ring[0]};
		std::vector<NodeId> stack{ring[0]};
		while (!stack.empty())
		{
			NodeId at = stack.back();
			stack.pop_back();
			for (std::size_t p = 0; p < ring.size(); ++p)
			{
				if (p == cut) { continue; }
				const auto& l = topo.link(topo.ring_link(p));
				NodeId next;
				if (l.a == at) { next = l.b; }
				else if (l.b == at) { next = l.a; }
				else { continue; }
				if (seen.insert(next).second) { stack.push_back(next); }
			}
		}
		EXPECT_EQ(seen.size(), ring.size()) << "cut " << cut;
	}
}

TEST(EnumeratePaths, OnuToParentCo)
{
	auto topo = build_paper_topology();
	auto paths = enumerate_paths(topo, by_name(topo, "onu1.0"), by_name(topo, "co1"));
	ASSERT_EQ(paths.size(), 1u);
	EXPECT_EQ(paths[0].size(), 1u);
	EXPECT_EQ(hop_count(topo, paths[0]), 1u);
}

TEST(EnumeratePaths, OnuToBoAcrossTheRingTies)
{
	auto topo = build_paper_topology();
	auto paths = enumerate_paths(topo, by_name(topo, "onu1.0"), by_name(topo, "bo4"));
	ASSERT_EQ(paths.size(), 2u);
	EXPECT_EQ(paths[0].size(), 5u);
	EXPECT_EQ(paths[1].size(), 5u);
	EXPECT_NE(paths[0], paths[1]);
	// Clockwise first: co1 -> co2 is the second link.
	EXPECT_EQ(paths[0][1], topo.ring_link(1));
}

TEST(EnumeratePaths, CsToParentCo)
{
	auto topo = build_paper_topology();
	auto paths = enumerate_paths(topo, by_name(topo, "cs2"), by_name(topo, "co2"));
	ASSERT_EQ(paths.size(), 1u);
	EXPECT_EQ(paths[0].size(), 1u);
}

TEST(EnumeratePaths, ShorterDirectionFirst)
{
	auto topo = build_paper_topology();
	auto paths = enumerate_paths(topo, by_name(topo, "onu0.2"), by_name(topo, "cs1"));
	ASSERT_EQ(paths.size(), 2u);
	EXPECT_EQ(paths[0].size(), 3u);
	EXPECT_EQ(paths[1].size(), 7u);
}

TEST(EnumeratePaths, RejectsBadEndpoints)
{
	auto topo = build_paper_topology();
	EXPECT_THROW(enumerate_paths(topo, NodeId(0), NodeId(0)), InvalidParameterError);
	EXPECT_THROW(enumerate_paths(topo, NodeId(0), NodeId(999)), InvalidParameterError);
}

TEST(EnumeratePaths, AllPairsSimpleAndShortestMatchesBfs)
{
	auto topo = build_paper_topology();
	for (const auto& a : topo.nodes())
	{
		for (const auto& b : topo.nodes())
		{
			if (a.id == b.id) { continue; }
			auto paths = enumerate_paths(topo, a.id, b.id);
			ASSERT_FALSE(paths.empty());
			EXPECT_LE(paths.size(), 2u);
			for (const auto& p : paths) { EXPECT_TRUE(is_simple_path(topo, p, a.id, b.id)) << a.name << " -> " << b.name; }
			EXPECT_EQ(paths[0].size(), bfs_hops(topo, a.id, b.id)) << a.name << " -> " << b.name;
			for (std::size_t i = 1; i < paths.size(); ++i) { EXPECT_LE(paths[i - 1].size(), paths[i].size()); }
			std::set<Path> unique(paths.begin(), paths.end());
			EXPECT_EQ(unique.size(), paths.size());
		}
	}
}

TEST(EnumeratePaths, SymmetricAsLinkSets)
{
	auto topo = build_paper_topology();
	auto sets = [](std::vector<Path> ps) {
		std::set<std::set<LinkId>> out;
		for (auto& p : ps) { out.insert(std::set<LinkId>(p.begin(), p.end())); }
		return out;
	};
	for (const auto& a : topo.nodes())
	{
		for (const auto& b : topo.nodes())
		{
			if (a.id == b.id) { continue; }
			EXPECT_EQ(sets(enumerate_paths(topo, a.id, b.id)), sets(enumerate_paths(topo, b.id, a.id)));
		}
	}
}

TEST(EnumeratePaths, OnuToRemoteLocationsNeedTwoHops)
{
	auto topo = build_paper_topology();
	for (auto onu : topo.nodes_of_kind(NodeKind::PonOnu))
	{
		for (const auto& n : topo.nodes())
		{
			if (!can_host_compute(n.kind) || n.id == topo.node(onu).parent_co) { continue; }
			for (const auto& p : enumerate_paths(topo, onu, n.id)) { EXPECT_GE(hop_count(topo, p), 2u); }
		}
	}
}

TEST(HopCount, Examples)
{
	auto topo = build_paper_topology();
	auto cs = by_name(topo, "cs3");
	ASSERT_EQ(topo.paths_between(cs, cs).size(), 1u);
	EXPECT_EQ(hop_count(topo, topo.paths_between(cs, cs)[0]), 0u);
	auto onu = by_name(topo, "onu2.1");
	EXPECT_EQ(hop_count(topo, enumerate_paths(topo, onu, by_name(topo, "co2"))[0]), 1u);
	EXPECT_EQ(hop_count(topo, enumerate_paths(topo, onu, by_name(topo, "bo3"))[0]), 3u);
}

TEST(TopologyText, RoundTrip)
{
	auto topo = build_paper_topology(40, 3, 2);
	std::stringstream ss;
	write_topology(ss, topo);
	auto back = read_topology(ss);
	std::stringstream again;
	write_topology(again, back);
	EXPECT_EQ(ss.str(), again.str());
	EXPECT_EQ(back.link_count(), topo.link_count());
	EXPECT_EQ(back.gateway_co(), topo.gateway_co());
	for (const auto& a : topo.nodes())
	{
		for (const auto& b : topo.nodes()) { EXPECT_EQ(back.paths_between(a.id, b.id), topo.paths_between(a.id, b.id)); }
	}
}

TEST(TopologyText, RejectsMalformedInput)
{
	std::stringstream bad("not-a-topology\n");
	EXPECT_THROW(read_topology(bad), ParseError);
	std::stringstream kind("fogplace-topology 1\ngateway 0\nnode 0 Router co0 0 0\n");
	EXPECT_THROW(read_topology(kind), Error);
}
