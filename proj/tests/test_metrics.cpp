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

#include <fogplace/metrics.hpp>
#include <fogplace/optimizer.hpp>

#include "tiny_instances.hpp"

#include <gtest/gtest.h>

#include <numeric>

using namespace fogplace;
using fogplace::testing::tiny_instance;

namespace {

// One CO with a CS and one ONU. Background traffic leaves `access_free` on
// the CS link and `tail_free` on the ONU tail.
ProblemInstance cs_and_onu(double access_free, double tail_free, std::size_t co_servers, std::size_t cs_servers)
{
	RingSpec spec;
	spec.co_count = 1;
	spec.onus_per_co = 1;
	spec.with_bo = false;
	auto topo = std::make_shared<const Topology>(build_ring_topology(spec));
	ProblemInstance inst;
	inst.topology = topo;
	inst.locations = {{*topo->find_node("co0"), co_servers, ServerConfig{}}, {*topo->find_node("cs0"), cs_servers, ServerConfig{}}};
	inst.regular_traffic.assign(topo->link_count(), 0.0);
	inst.regular_traffic[topo->uplink(*topo->find_node("cs0"))->index()] = 10 - access_free;
	inst.regular_traffic[topo->uplink(*topo->find_node("onu0.0"))->index()] = 10 - tail_free;
	return inst;
}

Workload rt(std::size_t id, NodeId src, Resources d, double uplink)
{
	Workload w;
	w.id = WorkloadId(id);
	w.kind = WorkloadKind::RealTime;
	w.source_node = src;
	w.home_location = src;
	w.demand = d;
	w.uplink_gbps = uplink;
	return w;
}

std::size_t cause_count(const MetricsReport& m, BlockingCause c) { return m.blocked_by_cause[static_cast<std::size_t>(c)]; }

} // namespace

TEST(Metrics, ZeroTrafficPowerAtPaperScale)
{
	auto topo = std::make_shared<const Topology>(build_paper_topology());
	ProblemInstance inst;
	inst.topology = topo;
	inst.locations = paper_compute_locations(*topo);
	inst.regular_traffic.assign(topo->link_count(), 0.0);
	auto sol = solve(inst);
	auto m = compute_metrics(sol, inst);
	EXPECT_DOUBLE_EQ(m.power.tnpc, 810.0);
	EXPECT_EQ(m.active_servers, 0u);
	EXPECT_EQ(m.idle_servers, 96u);
	EXPECT_EQ(m.idle_components, 288u);
	EXPECT_FALSE(m.avg_hop_count.has_value());
	EXPECT_EQ(flatten_metrics(m)[25], "");
}

TEST(Metrics, TailBlockIsAttributedToTheTail)
{
	auto inst = cs_and_onu(5, 0.4, 2, 2);
	auto onu = *inst.topo().find_node("onu0.0");
	inst.workloads.workloads = {rt(0, onu, {4, 20, 20}, 1.0)};
	auto sol = solve(inst);
	ASSERT_EQ(sol.objective.blocked, 1u);
	auto m = compute_metrics(sol, inst);
	ASSERT_EQ(m.blocked_causes.size(), 1u);
	EXPECT_EQ(m.blocked_causes[0].second, BlockingCause::AccessTail);
	EXPECT_EQ(cause_count(m, BlockingCause::AccessTail), 1u);
}

TEST(Metrics, CsUplinkBlockIsAttributedToTheCsLink)
{
	auto inst = cs_and_onu(0.4, 5, 2, 2);
	auto cs = *inst.topo().find_node("cs0");
	inst.workloads.workloads = {rt(0, cs, {4, 20, 20}, 1.0)};
	auto sol = solve(inst);
	ASSERT_EQ(sol.objective.blocked, 1u);
	// The CS link is both the workload's tail and an uplink; the tail test
	// comes first.
	EXPECT_EQ(compute_metrics(sol, inst).blocked_causes[0].second, BlockingCause::AccessTail);
}

TEST(Metrics, OverflowBehindAFullUplinkIsAnUplinkBlock)
{
	// The CO is full; the only spare chassis sits behind a congested CS link.
	auto inst = cs_and_onu(0.8, 5, 1, 1);
	auto onu = *inst.topo().find_node("onu0.0");
	auto co = inst.locations[0].node;
	Workload local;
	local.id = WorkloadId(0);
	local.kind = WorkloadKind::NodeLocal;
	local.source_node = co;
	local.home_location = co;
	local.demand = {12, 20, 20};
	inst.workloads.workloads = {local, rt(1, onu, {4, 20, 20}, 1.0)};
	auto sol = solve(inst);
	ASSERT_EQ(sol.objective.blocked, 1u);
	EXPECT_EQ(compute_metrics(sol, inst).blocked_causes[0].second, BlockingCause::Uplink);
}

TEST(Metrics, NoRoomAnywhereIsRemoteCapacity)
{
	auto inst = cs_and_onu(5, 5, 1, 1);
	auto onu = *inst.topo().find_node("onu0.0");
	inst.workloads.workloads = {rt(0, onu, {12, 20, 20}, 1.0), rt(1, onu, {12, 20, 20}, 1.0), rt(2, onu, {12, 20, 20}, 1.0)};
	auto sol = solve(inst);
	ASSERT_EQ(sol.objective.blocked, 1u);
	EXPECT_EQ(compute_metrics(sol, inst).blocked_causes[0].second, BlockingCause::RemoteCapacity);
}

TEST(MetricsProperties, InvariantsOnTinyInstances)
{
	for (std::uint64_t seed = 1; seed <= 80; ++seed)
	{
		auto inst = tiny_instance(seed, seed % 2 ? PlacementMode::Traditional : PlacementMode::Disaggregated);
		auto sol = solve(inst);
		auto m = compute_metrics(sol, inst);
		const std::size_t servers = total_servers(inst.locations);

		EXPECT_EQ(m.blocked_count, sol.objective.blocked);
		EXPECT_EQ(m.blocked_causes.size(), m.blocked_count);
		EXPECT_EQ(std::accumulate(m.blocked_by_cause.begin(), m.blocked_by_cause.end(), std::size_t{0}), m.blocked_count);
		EXPECT_EQ(m.active_servers + m.idle_servers, servers);
		EXPECT_EQ(m.active_components + m.idle_components, 3 * servers);
		EXPECT_EQ(m.idle_servers_co + m.idle_servers_bo + m.idle_servers_cs, m.idle_servers);
		if (inst.mode == PlacementMode::Traditional) { EXPECT_EQ(m.active_components, 3 * m.active_servers); }

		double flow = std::accumulate(sol.link_flow.begin(), sol.link_flow.end(), 0.0);
		double regular = std::accumulate(inst.regular_traffic.begin(), inst.regular_traffic.end(), 0.0);
		double by_seg = std::accumulate(m.traffic_by_segment.begin(), m.traffic_by_segment.end(), 0.0);
		double by_seg_r = std::accumulate(m.traffic_by_segment_with_regular.begin(), m.traffic_by_segment_with_regular.end(), 0.0);
		EXPECT_NEAR(by_seg, flow, 1e-9 * (1 + flow));
		EXPECT_NEAR(by_seg_r, flow + regular, 1e-9 * (1 + flow + regular));
		EXPECT_NEAR(m.power.tnpc, sol.objective.tnpc, 1e-9 * m.power.tnpc);

		std::size_t placed = 0;
		for (const auto& w : inst.workloads.workloads) { placed += w.is_real_time() && !sol.placements[w.id.index()].blocked(); }
		EXPECT_EQ(m.placed_real_time, placed);
		if (placed > 0) { EXPECT_GE(*m.avg_hop_count, 0.0); }
		EXPECT_EQ(flatten_metrics(m).size(), metrics_columns().size());
	}
}

// Placed workloads never need a relaxation, so attribution is only about
// the blocked ones; an unblocked copy of the instance must report none.
TEST(MetricsProperties, CausesOnlyForBlockedWorkloads)
{
	for (std::uint64_t seed = 90; seed < 130; ++seed)
	{
		auto inst = tiny_instance(seed, PlacementMode::Disaggregated);
		auto sol = solve(inst);
		auto m = compute_metrics(sol, inst);
		for (const auto& [id, cause] : m.blocked_causes) { EXPECT_TRUE(sol.placements[id.index()].blocked()); }
	}
}

TEST(Metrics, RefusesUnvalidatedSolutions)
{
	auto inst = tiny_instance(3, PlacementMode::Traditional);
	auto sol = solve(inst);
	sol.objective.active_servers += 1;
	EXPECT_THROW(compute_metrics(sol, inst), UnvalidatedSolutionError);
}

TEST(Metrics, ColumnNamesAreStable)
{
	auto cols = metrics_columns();
	EXPECT_EQ(cols.size(), 27u);
	EXPECT_EQ(cols.front(), "blocked");
	EXPECT_EQ(cols[24], "tnpc_w");
	EXPECT_EQ(cols[25], "avg_hop_count");
	EXPECT_EQ(to_string(BlockingCause::AccessTail), "access_tail");
	EXPECT_EQ(to_string(BlockingCause::Uplink), "uplink");
	EXPECT_EQ(to_string(BlockingCause::RemoteCapacity), "remote_capacity");
}
