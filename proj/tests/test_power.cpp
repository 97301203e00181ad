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

#include <fogplace/power.hpp>

#include <gtest/gtest.h>

#include <numeric>
#include <random>

using namespace fogplace;

namespace {

std::vector<double> zero(const Topology& topo) { return std::vector<double>(topo.link_count(), 0.0); }

std::vector<double> random_traffic(const Topology& topo, std::mt19937_64& rng)
{
	std::uniform_real_distribution<double> u(0.0, 1.0);
	std::vector<double> t(topo.link_count());
	for (const auto& l : topo.links()) { t[l.id.index()] = u(rng) * std::min(l.capacity_gbps, 50.0); }
	return t;
}

} // namespace

TEST(EvaluatePower, ZeroTrafficIsStaticOnly)
{
	auto topo = build_paper_topology();
	auto p = evaluate_power(topo, zero(topo));
	EXPECT_DOUBLE_EQ(p.tnpc, 810.0);
	EXPECT_DOUBLE_EQ(p.static_total, 810.0);
	EXPECT_DOUBLE_EQ(p.load_proportional_total, 0.0);
	EXPECT_DOUBLE_EQ(static_power(topo), 810.0);
}

TEST(EvaluatePower, OnuToBoFlow)
{
	auto topo = build_paper_topology();
	auto onu = *topo.find_node("onu2.0");
	auto bo = *topo.find_node("bo2");
	auto t = zero(topo);
	const auto& path = topo.paths_between(onu, bo).at(0);
	ASSERT_EQ(path.size(), 2u);
	for (auto e : path) { t[e.index()] = 10; }
	auto p = evaluate_power(topo, t);
	EXPECT_NEAR(p.load_proportional_total, 19.93, 1e-12);
	EXPECT_NEAR(p.tnpc, 810 + 19.93, 1e-12);
}

TEST(EvaluatePower, CoreLinkChargesBothEnds)
{
	auto topo = build_paper_topology();
	auto t = zero(topo);
	t[topo.ring_link(2).index()] = 10;
	auto p = evaluate_power(topo, t);
	EXPECT_NEAR(p.load_proportional_total, 18.0, 1e-12);
	EXPECT_NEAR(p.per_segment[static_cast<std::size_t>(Segment::MetroCore)], 18.0, 1e-12);
}

TEST(EvaluatePower, GatewayUplinkIsFree)
{
	auto topo = build_paper_topology();
	auto t = zero(topo);
	t[topo.uplink(topo.datacenter())->index()] = 100;
	EXPECT_DOUBLE_EQ(evaluate_power(topo, t).tnpc, 810.0);
}

TEST(EvaluatePower, RejectsBadInput)
{
	auto topo = build_paper_topology();
	auto t = zero(topo);
	t[3] = -1;
	EXPECT_THROW(evaluate_power(topo, t), NegativeTrafficError);
	EXPECT_THROW(evaluate_power(topo, std::vector<double>(5, 0.0)), InvalidParameterError);
}

TEST(EvaluatePower, CoefficientsPerSegment)
{
	auto topo = build_paper_topology();
	for (const auto& l : topo.links())
	{
		double c = link_power_coefficient(topo, l.id);
		switch (l.segment)
		{
		case Segment::MetroCore: EXPECT_NEAR(c, 1.8, 1e-12); break;
		case Segment::MetroAccess: EXPECT_NEAR(c, 0.243, 1e-12); break;
		case Segment::LastMile: EXPECT_NEAR(c, 1.75, 1e-12); break;
		case Segment::GatewayUplink: EXPECT_EQ(c, 0.0); break;
		}
	}
}

TEST(PowerProperties, BreakdownsAreConsistent)
{
	auto topo = build_paper_topology(40);
	std::mt19937_64 rng(3);
	for (int trial = 0; trial < 100; ++trial)
	{
		auto p = evaluate_power(topo, random_traffic(topo, rng));
		EXPECT_NEAR(p.tnpc, p.static_total + p.load_proportional_total, 1e-9);
		EXPECT_NEAR(p.tnpc, std::accumulate(p.per_device.begin(), p.per_device.end(), 0.0), 1e-9);
		EXPECT_NEAR(p.tnpc, std::accumulate(p.per_segment.begin(), p.per_segment.end(), 0.0), 1e-9);
		EXPECT_DOUBLE_EQ(p.static_total, 810.0);
	}
}

TEST(PowerProperties, LinearInLoad)
{
	auto topo = build_paper_topology();
	std::mt19937_64 rng(5);
	for (int trial = 0; trial < 50; ++trial)
	{
		auto t = random_traffic(topo, rng);
		double lambda = std::uniform_real_distribution<double>(0.1, 3.0)(rng);
		auto scaled = t;
		for (auto& x : scaled) { x *= lambda; }
		double base = evaluate_power(topo, t).load_proportional_total;
		EXPECT_NEAR(evaluate_power(topo, scaled).load_proportional_total, lambda * base, 1e-9 * (1 + base));

		double direct = 0;
		for (const auto& l : topo.links()) { direct += link_power_coefficient(topo, l.id) * t[l.id.index()]; }
		EXPECT_NEAR(direct, base, 1e-9 * (1 + base));
	}
}

TEST(PowerProperties, MonotoneInTraffic)
{
	auto topo = build_paper_topology();
	std::mt19937_64 rng(9);
	for (int trial = 0; trial < 100; ++trial)
	{
		auto t = random_traffic(topo, rng);
		double before = evaluate_power(topo, t).tnpc;
		t[rng() % t.size()] += 1.5;
		EXPECT_GE(evaluate_power(topo, t).tnpc, before);
	}
}
