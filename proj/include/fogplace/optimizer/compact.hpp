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
 * \file fogplace/optimizer/compact.hpp
 *
 * \brief Compact MILP of the placement problem over candidate paths.
 *
 * Variables:
 *  - y[w][l]   workload w hosted at location l (node-local: home only, fixed)
 *  - b[w]      real-time workload w blocked
 *  - p[w][l][k], q[w][l][k]  path k for the source and DC commodities
 *  - x[w][l][s] workload on chassis s (TS only)
 *  - u[l][r][c] component c of type r active
 *  - v[l][s]   chassis active
 *  - t[e]      modeled flow on link e, bounded by capacity minus background
 *
 * Components fill chassis in index order (u[l][r][c] >= u[l][r][c+1]), and
 * TS chassis likewise, which removes symmetric optima without changing the
 * optimal value.
 */

#ifndef FOGPLACE_OPTIMIZER_COMPACT_HPP
#define FOGPLACE_OPTIMIZER_COMPACT_HPP

#include <fogplace/instance.hpp>
#include <fogplace/milp/model.hpp>
#include <fogplace/solution.hpp>

#include <string>
#include <vector>

namespace fogplace {

struct CompactMilp
{
	milp::Model model;
	/// Variable indices, -1 where the variable does not exist.
	std::vector<std::vector<int>> y;                 // [workload][location]
	std::vector<int> b;                              // [workload]
	std::vector<std::vector<std::vector<int>>> p;    // [workload][location][path]
	std::vector<std::vector<std::vector<int>>> q;    // [workload][location][path]
	std::vector<std::vector<std::vector<int>>> x;    // [workload][location][chassis]
	std::vector<std::vector<std::vector<int>>> u;    // [location][resource][component]
	std::vector<std::vector<int>> v;                 // [location][chassis]
	std::vector<int> t;                              // [link]
};

inline CompactMilp build_milp(const ProblemInstance& inst)
{
	validate_instance(inst);
	const auto& topo = inst.topo();
	const auto& ws = inst.workloads.workloads;
	const std::size_t nw = ws.size(), nl = inst.locations.size(), ne = topo.link_count();
	const bool ts = inst.mode == PlacementMode::Traditional;
	const auto coef = link_power_coefficients(topo);
	const auto& w8 = inst.weights;

	CompactMilp c;
	auto& m = c.model;
	auto S = [](auto... parts) { return (std::string{} + ... + std::string(parts)); };
	auto N = [](std::size_t i) { return std::to_string(i); };

	c.y.assign(nw, std::vector<int>(nl, -1));
	c.b.assign(nw, -1);
	c.p.assign(nw, std::vector<std::vector<int>>(nl));
	c.q.assign(nw, std::vector<std::vector<int>>(nl));
	c.x.assign(nw, std::vector<std::vector<int>>(nl));
	c.u.assign(nl, std::vector<std::vector<int>>(kResourceCount));
	c.v.assign(nl, {});
	c.t.assign(ne, -1);

	for (std::size_t l = 0; l < nl; ++l)
	{
		const auto& loc = inst.locations[l];
		for (std::size_t s = 0; s < loc.server_count; ++s)
		{
			c.v[l].push_back(m.add_variable(S("v_", N(l), "_", N(s)), milp::VarType::Binary, 0, 1, w8.alpha3));
		}
		for (std::size_t r = 0; r < kResourceCount; ++r)
		{
			for (std::size_t s = 0; s < loc.server_count; ++s)
			{
				c.u[l][r].push_back(m.add_variable(S("u_", N(l), "_", N(r), "_", N(s)), milp::VarType::Binary, 0, 1, w8.alpha2));
			}
		}
	}
	for (std::size_t e = 0; e < ne; ++e)
	{
		double free = topo.link(LinkId(e)).capacity_gbps - inst.regular_traffic[e];
		c.t[e] = m.add_variable(S("t_", N(e)), milp::VarType::Continuous, 0, free, coef[e]);
	}

	std::vector<lp::Entries> link_rows(ne);
	std::vector<std::vector<lp::Entries>> cap_rows(nl, std::vector<lp::Entries>(kResourceCount));
	for (std::size_t w = 0; w < nw; ++w)
	{
		const auto& wl = ws[w];
		lp::Entries assign;
		if (wl.is_real_time())
		{
			c.b[w] = m.add_variable(S("b_", N(w)), milp::VarType::Binary, 0, 1, w8.alpha1);
			assign.emplace_back(c.b[w], 1);
		}
		for (std::size_t l = 0; l < nl; ++l)
		{
			const NodeId host = inst.locations[l].node;
			if (!wl.is_real_time() && host != wl.home_location) { continue; }
			double fixed = wl.is_real_time() ? 0 : 1;
			c.y[w][l] = m.add_variable(S("y_", N(w), "_", N(l)), milp::VarType::Binary, fixed, 1);
			assign.emplace_back(c.y[w][l], 1);
			for (std::size_t r = 0; r < kResourceCount; ++r)
			{
				if (!ts && wl.demand[r] != 0) { cap_rows[l][r].emplace_back(c.y[w][l], wl.demand[r]); }
			}
			if (ts)
			{
				lp::Entries link{{c.y[w][l], -1}};
				for (std::size_t s = 0; s < inst.locations[l].server_count; ++s)
				{
					int xv = m.add_variable(S("x_", N(w), "_", N(l), "_", N(s)), milp::VarType::Binary, 0, 1);
					c.x[w][l].push_back(xv);
					link.emplace_back(xv, 1);
				}
				m.add_constraint(S("server_choice_", N(w), "_", N(l)), link, 0, 0);
			}
			if (!wl.is_real_time()) { continue; }

			const double rs = inst.traffic_split.to_source * wl.uplink_gbps;
			const double rd = inst.traffic_split.to_dc * wl.uplink_gbps;
			auto add_paths = [&](const std::vector<Path>& paths, double rate, char tag, std::vector<int>& out) {
				lp::Entries choice{{c.y[w][l], -1}};
				for (std::size_t k = 0; k < paths.size(); ++k)
				{
					int pv = m.add_variable(S(std::string(1, tag), "_", N(w), "_", N(l), "_", N(k)), milp::VarType::Binary, 0, 1);
					out.push_back(pv);
					choice.emplace_back(pv, 1);
					if (rate != 0)
					{
						for (auto e : paths[k]) { link_rows[e.index()].emplace_back(pv, rate); }
					}
				}
				m.add_constraint(S(std::string(1, tag), "_choice_", N(w), "_", N(l)), choice, 0, 0);
			};
			add_paths(topo.paths_between(host, wl.source_node), rs, 'p', c.p[w][l]);
			add_paths(topo.paths_between(host, topo.datacenter()), rd, 'q', c.q[w][l]);
		}
		m.add_constraint(S("assign_", N(w)), assign, 1, 1);
	}

	for (std::size_t l = 0; l < nl; ++l)
	{
		const auto& loc = inst.locations[l];
		const auto& cap = loc.config.capacity;
		for (std::size_t r = 0; r < kResourceCount; ++r)
		{
			if (ts)
			{
				for (std::size_t s = 0; s < loc.server_count; ++s)
				{
					lp::Entries row{{c.v[l][s], -cap[r]}};
					for (std::size_t w = 0; w < nw; ++w)
					{
						if (!c.x[w][l].empty() && ws[w].demand[r] != 0) { row.emplace_back(c.x[w][l][s], ws[w].demand[r]); }
					}
					m.add_constraint(S("pack_", N(l), "_", N(s), "_", N(r)), row, -kInf, 0);
					m.add_constraint(S("tie_", N(l), "_", N(r), "_", N(s)), {{c.u[l][r][s], 1}, {c.v[l][s], -1}}, 0, 0);
				}
			}
			else
			{
				auto row = cap_rows[l][r];
				for (std::size_t s = 0; s < loc.server_count; ++s) { row.emplace_back(c.u[l][r][s], -cap[r]); }
				m.add_constraint(S("pool_", N(l), "_", N(r)), row, -kInf, 0);
				for (std::size_t s = 0; s < loc.server_count; ++s)
				{
					m.add_constraint(S("host_", N(l), "_", N(r), "_", N(s)), {{c.u[l][r][s], 1}, {c.v[l][s], -1}}, -kInf, 0);
					if (s + 1 < loc.server_count)
					{
						m.add_constraint(S("fill_", N(l), "_", N(r), "_", N(s)), {{c.u[l][r][s], 1}, {c.u[l][r][s + 1], -1}}, 0, kInf);
					}
				}
			}
		}
		for (std::size_t s = 0; s + 1 < loc.server_count; ++s)
		{
			m.add_constraint(S("order_", N(l), "_", N(s)), {{c.v[l][s], 1}, {c.v[l][s + 1], -1}}, 0, kInf);
		}
	}
	for (std::size_t e = 0; e < ne; ++e)
	{
		auto row = link_rows[e];
		row.emplace_back(c.t[e], -1);
		m.add_constraint(S("flow_", N(e)), row, 0, 0);
	}

	double constant = static_power(topo);
	if (inst.regular_traffic_in_power)
	{
		for (std::size_t e = 0; e < ne; ++e) { constant += coef[e] * inst.regular_traffic[e]; }
	}
	m.set_objective_constant(constant);
	return c;
}

/// Reads a placement back from an integral point of the compact model.
inline std::vector<WorkloadPlacement> decode_placements(const ProblemInstance& inst, const CompactMilp& c, const std::vector<double>& x)
{
	const auto& topo = inst.topo();
	const auto& ws = inst.workloads.workloads;
	auto on = [&](int var) { return var >= 0 && x[var] > 0.5; };
	std::vector<WorkloadPlacement> out(ws.size());
	for (std::size_t w = 0; w < ws.size(); ++w)
	{
		for (std::size_t l = 0; l < inst.locations.size(); ++l)
		{
			if (!on(c.y[w][l])) { continue; }
			auto& pl = out[w];
			const NodeId host = inst.locations[l].node;
			pl.host = host;
			for (std::size_t s = 0; s < c.x[w][l].size(); ++s)
			{
				if (on(c.x[w][l][s])) { pl.server = static_cast<int>(s); }
			}
			if (!ws[w].is_real_time()) { continue; }
			for (std::size_t k = 0; k < c.p[w][l].size(); ++k)
			{
				if (on(c.p[w][l][k])) { pl.source_path = topo.paths_between(host, ws[w].source_node)[k]; }
			}
			for (std::size_t k = 0; k < c.q[w][l].size(); ++k)
			{
				if (on(c.q[w][l][k])) { pl.dc_path = topo.paths_between(host, topo.datacenter())[k]; }
			}
		}
	}
	return out;
}

/// Writes a complete solution as a point of the compact model (usable as an
/// incumbent). DS component counts follow the pooled totals.
inline std::vector<double> encode_solution(const ProblemInstance& inst, const CompactMilp& c, const PlacementSolution& sol)
{
	const auto& topo = inst.topo();
	const auto& ws = inst.workloads.workloads;
	std::vector<double> x(c.model.variables().size(), 0.0);
	std::vector<int> loc_of(topo.node_count(), -1);
	for (std::size_t l = 0; l < inst.locations.size(); ++l) { loc_of[inst.locations[l].node.index()] = static_cast<int>(l); }
	for (std::size_t w = 0; w < ws.size(); ++w)
	{
		const auto& pl = sol.placements[w];
		if (pl.blocked())
		{
			if (c.b[w] >= 0) { x[c.b[w]] = 1; }
			continue;
		}
		auto l = static_cast<std::size_t>(loc_of[pl.host->index()]);
		x[c.y[w][l]] = 1;
		if (!c.x[w][l].empty()) { x[c.x[w][l][static_cast<std::size_t>(pl.server)]] = 1; }
		if (!ws[w].is_real_time()) { continue; }
		const auto& sp = topo.paths_between(*pl.host, ws[w].source_node);
		const auto& dp = topo.paths_between(*pl.host, topo.datacenter());
		for (std::size_t k = 0; k < sp.size(); ++k)
		{
			if (sp[k] == pl.source_path) { x[c.p[w][l][k]] = 1; }
		}
		for (std::size_t k = 0; k < dp.size(); ++k)
		{
			if (dp[k] == pl.dc_path) { x[c.q[w][l][k]] = 1; }
		}
	}
	for (std::size_t l = 0; l < sol.activation.size(); ++l)
	{
		const auto& act = sol.activation[l];
		for (std::size_t s = 0; s < act.chassis.size(); ++s)
		{
			const auto& ch = act.chassis[s];
			if (ch[0] || ch[1] || ch[2]) { x[c.v[l][s]] = 1; }
			for (std::size_t r = 0; r < kResourceCount; ++r) { x[c.u[l][r][s]] = ch[r] ? 1 : 0; }
		}
	}
	for (std::size_t e = 0; e < c.t.size(); ++e) { x[c.t[e]] = sol.link_flow[e]; }
	return x;
}

} // namespace fogplace

#endif // FOGPLACE_OPTIMIZER_COMPACT_HPP
