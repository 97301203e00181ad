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

#include <fogplace/workload.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

using namespace fogplace;

namespace {

void expect_same(const WorkloadSet& a, const WorkloadSet& b)
{
	ASSERT_EQ(a.size(), b.size());
	for (std::size_t i = 0; i < a.size(); ++i)
	{
		const auto& x = a.workloads[i];
		const auto& y = b.workloads[i];
		EXPECT_EQ(x.id, y.id);
		EXPECT_EQ(x.kind, y.kind);
		EXPECT_EQ(x.source_node, y.source_node);
		EXPECT_EQ(x.home_location, y.home_location);
		EXPECT_EQ(x.demand, y.demand);
		EXPECT_EQ(x.uplink_gbps, y.uplink_gbps);
	}
}

} // namespace

// Reference outputs published with the generators.
TEST(Prng, KnownVectors)
{
	EXPECT_EQ(detail::splitmix64(0), 0xe220a8397b1dcdafULL);
	std::mt19937_64 mt;
	mt.discard(9999);
	EXPECT_EQ(mt(), 9981545732273789042ULL);
}

TEST(Generate, PaperPopulation)
{
	auto topo = build_paper_topology();
	auto set = generate_workloads(topo, 7);
	EXPECT_EQ(set.size(), 90u);
	EXPECT_EQ(set.count(WorkloadKind::NodeLocal), 60u);
	EXPECT_EQ(set.count(WorkloadKind::RealTime), 30u);
	EXPECT_EQ(set.seed, 7u);
	EXPECT_EQ(set.traffic_scale, 1.0);
	for (const auto& w : set.workloads)
	{
		EXPECT_GE(w.cpu_cores(), 3);
		EXPECT_LE(w.cpu_cores(), 12);
		EXPECT_EQ(w.cpu_cores(), std::floor(w.cpu_cores()));
		EXPECT_GE(w.ram_gb(), 20);
		EXPECT_LE(w.ram_gb(), 60);
		EXPECT_GE(w.storage_gb(), 20);
		EXPECT_LE(w.storage_gb(), 120);
		EXPECT_GE(w.uplink_gbps, 1);
		EXPECT_LE(w.uplink_gbps, 2);
	}
}

TEST(Generate, PerCoGroupComposition)
{
	auto topo = build_paper_topology();
	auto set = generate_workloads(topo, 3);
	for (auto co : topo.ring())
	{
		std::size_t co_local = 0, bo_local = 0, cs_local = 0, cs_rt = 0, onu_rt = 0;
		for (const auto& w : set.workloads)
		{
			const auto& src = topo.node(w.source_node);
			if (src.parent_co != co) { continue; }
			if (!w.is_real_time())
			{
				EXPECT_EQ(w.home_location, w.source_node);
				EXPECT_TRUE(can_host_compute(src.kind));
				co_local += src.kind == NodeKind::MetroCO;
				bo_local += src.kind == NodeKind::EnterpriseBO;
				cs_local += src.kind == NodeKind::RadioCS;
			}
			else
			{
				EXPECT_TRUE(src.kind == NodeKind::RadioCS || src.kind == NodeKind::PonOnu);
				cs_rt += src.kind == NodeKind::RadioCS;
				onu_rt += src.kind == NodeKind::PonOnu;
			}
		}
		EXPECT_EQ(co_local, 4u);
		EXPECT_EQ(bo_local, 4u);
		EXPECT_EQ(cs_local, 2u);
		EXPECT_EQ(cs_rt, 1u);
		EXPECT_EQ(onu_rt, 4u);
	}
}

TEST(Generate, OneOnuPerCo)
{
	auto topo = build_paper_topology(10, 1);
	auto set = generate_workloads(topo, 7);
	EXPECT_EQ(set.count(WorkloadKind::NodeLocal), 60u);
	EXPECT_EQ(set.count(WorkloadKind::RealTime), 12u);
}

TEST(Generate, Deterministic)
{
	auto topo = build_paper_topology();
	expect_same(generate_workloads(topo, 7), generate_workloads(topo, 7));
	auto a = generate_workloads(topo, 7);
	auto b = generate_workloads(topo, 8);
	bool differs = false;
	for (std::size_t i = 0; i < a.size(); ++i) { differs = differs || !(a.workloads[i].demand == b.workloads[i].demand); }
	EXPECT_TRUE(differs);
}

TEST(Generate, IndependentOfAccessCapacity)
{
	expect_same(generate_workloads(build_paper_topology(10), 11), generate_workloads(build_paper_topology(40), 11));
}

// Streams are keyed per workload, so adding ONUs leaves earlier draws alone.
TEST(Generate, CountChangesDoNotReshuffle)
{
	auto small = generate_workloads(build_paper_topology(10, 1), 5);
	auto large = generate_workloads(build_paper_topology(10, 4), 5);
	std::size_t matched = 0;
	for (const auto& w : small.workloads)
	{
		for (const auto& v : large.workloads)
		{
			if (v.demand == w.demand && v.uplink_gbps == w.uplink_gbps && v.kind == w.kind) { ++matched; }
		}
	}
	EXPECT_EQ(matched, small.size());
}

TEST(Generate, RejectsInvertedRanges)
{
	DemandRanges r;
	r.min_cores = 13;
	EXPECT_THROW(generate_workloads(build_paper_topology(), 1, {}, r), InvalidParameterError);
}

TEST(Generate, DistributionOverManySamples)
{
	DemandRanges r;
	double sum = 0;
	std::array<int, 13> hist{};
	const int n = 10000;
	for (int i = 0; i < n; ++i)
	{
		auto w = draw_workload(detail::splitmix64(static_cast<std::uint64_t>(i)), r);
		ASSERT_GE(w.cpu_cores(), 3);
		ASSERT_LE(w.cpu_cores(), 12);
		ASSERT_GE(w.ram_gb(), 20);
		ASSERT_LE(w.ram_gb(), 60);
		ASSERT_GE(w.storage_gb(), 20);
		ASSERT_LE(w.storage_gb(), 120);
		ASSERT_GE(w.uplink_gbps, 1);
		ASSERT_LE(w.uplink_gbps, 2);
		sum += w.cpu_cores();
		++hist[static_cast<std::size_t>(w.cpu_cores())];
	}
	EXPECT_NEAR(sum / n, 7.5, 7.5 * 0.05);
	for (int c = 3; c <= 12; ++c) { EXPECT_GT(hist[static_cast<std::size_t>(c)], 0) << c; }
}

TEST(TrafficScale, Examples)
{
	WorkloadSet set;
	Workload rt;
	rt.kind = WorkloadKind::RealTime;
	rt.uplink_gbps = 1.4;
	Workload local;
	local.id = WorkloadId(1);
	local.kind = WorkloadKind::NodeLocal;
	local.uplink_gbps = 1.4;
	set.workloads = {rt, local};
	auto s2 = apply_traffic_scale(set, 2.0);
	EXPECT_DOUBLE_EQ(s2.workloads[0].uplink_gbps, 2.8);
	EXPECT_DOUBLE_EQ(s2.workloads[1].uplink_gbps, 1.4);
	EXPECT_EQ(s2.workloads[0].demand, rt.demand);
	EXPECT_EQ(s2.traffic_scale, 2.0);
	expect_same(apply_traffic_scale(set, 1.0), set);
	EXPECT_THROW(apply_traffic_scale(set, 0.0), InvalidParameterError);
}

TEST(TrafficScale, PreservesEverythingButRealTimeUplinks)
{
	auto base = generate_workloads(build_paper_topology(), 9);
	auto s2 = apply_traffic_scale(base, 2.0);
	for (std::size_t i = 0; i < base.size(); ++i)
	{
		EXPECT_EQ(s2.workloads[i].demand, base.workloads[i].demand);
		double want = base.workloads[i].uplink_gbps * (base.workloads[i].is_real_time() ? 2.0 : 1.0);
		EXPECT_EQ(s2.workloads[i].uplink_gbps, want);
	}
}

TEST(WorkloadText, RoundTrip)
{
	auto set = apply_traffic_scale(generate_workloads(build_paper_topology(), 21), 2.0);
	std::stringstream ss;
	write_workloads(ss, set);
	auto back = read_workloads(ss);
	expect_same(set, back);
	EXPECT_EQ(back.seed, 21u);
	EXPECT_EQ(back.traffic_scale, 2.0);
}

TEST(WorkloadText, RejectsMalformedInput)
{
	std::stringstream header("workloads\n");
	EXPECT_THROW(read_workloads(header), ParseError);
	std::stringstream gap("fogplace-workloads 1\nworkload 3 real_time 1 3 20 20 1 -\n");
	EXPECT_THROW(read_workloads(gap), ParseError);
	std::stringstream kind("fogplace-workloads 1\nworkload 0 batch 1 3 20 20 1 -\n");
	EXPECT_THROW(read_workloads(kind), ParseError);
}
