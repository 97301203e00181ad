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
 * \file fogplace/optimizer/branch_price.hpp
 *
 * \brief Exact branch-and-price solver for the placement problem.
 *
 * The master LP chooses columns instead of individual binaries:
 *
 *  - DS: one column per location, holding a set of real-time workloads with a
 *    route each. Its cost charges the component and chassis counts of the
 *    pooled demand (node-local load included) plus the route power, so the
 *    integer rounding of component counts sits inside the column.
 *  - TS: one column per chassis pattern, holding node-local and real-time
 *    workloads that fit one chassis, at cost 3 alpha2 + alpha3 plus route
 *    power. A count row per location bounds the active chassis.
 *
 * Rows: real-time cover (sum + blocked = 1), location convexity (DS) or
 * node-local cover and chassis count (TS), and link capacity for links whose
 * worst-case load can exceed the free capacity.
 *
 * Columns are priced exactly with a 3-D knapsack, so every node bound is a
 * Lagrangian bound valid whether or not column generation has converged.
 * Branching: blocked flags, then (TS) chassis counts, then
 * workload-to-location, then route choices. A TS node whose assignment is integral but does
 * not pack into its chassis count is branched on an unfixed workload there,
 * or receives a count cut once every workload at the location is fixed.
 */

#ifndef FOGPLACE_OPTIMIZER_BRANCH_PRICE_HPP
#define FOGPLACE_OPTIMIZER_BRANCH_PRICE_HPP

#include <fogplace/instance.hpp>
#include <fogplace/milp/simplex.hpp>
#include <fogplace/optimizer/greedy.hpp>
#include <fogplace/optimizer/knapsack.hpp>
#include <fogplace/solution.hpp>

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <string>
#include <unordered_map>
#include <vector>

namespace fogplace {

struct ExactOptions
{
	double time_limit_seconds = 600;
	/// Nodes whose bound is within this many objective units of the
	/// incumbent are pruned.
	double absolute_gap = 1e-5;
	/// Run the LP-guided rounding heuristic every this many nodes.
	int heuristic_interval = 25;
	/// Dive from every this many nodes, starting at the root.
	int dive_interval = 200;
	/// Stop after this many nodes; 0 means no limit. Unlike the time limit
	/// this gives the same result on every machine.
	long node_limit = 0;
	std::optional<PlacementSolution> incumbent;
};

namespace detail {

class BranchAndPrice
{
	using Clock = std::chrono::steady_clock;

	struct Column
	{
		std::size_t loc = 0;
		std::vector<std::size_t> rt;      // real-time indices k, ascending
		std::vector<std::size_t> route;   // option index per entry of rt
		std::vector<std::size_t> local;   // TS: node-local rows covered
		std::array<std::size_t, kResourceCount> n{};  // DS: active components per type
		double cost = 0;
		int lp_index = -1;
	};

	struct NodeState
	{
		std::vector<signed char> b_fix;        // -1 free, 0, 1
		std::vector<unsigned char> allowed;    // [k * L + l]
		std::vector<int> forced;               // location or -1
		std::vector<std::uint64_t> routes;     // [k * L + l] allowed option mask
		std::vector<double> count_lo, count_hi;
		/// DS: bounds on each location's active components per resource.
		std::vector<std::array<std::size_t, kResourceCount>> comp_lo, comp_hi;
		/// Bounds on the aggregate rows: blocked total, then chassis total
		/// (TS) or component total (DS), then server total (DS).
		std::array<double, 3> agg_lo{}, agg_hi{};
	};

	struct Node
	{
		double bound = -kInf;
		long id = 0;
		NodeState state;
		lp::Basis basis;
		bool has_basis = false;
	};

	static constexpr double kPriceTol = 1e-7;

	struct PriceResult
	{
		double rc = kInf;
		std::optional<Column> column;
	};

public:
	BranchAndPrice(const ProblemInstance& inst, const ExactOptions& opt)
		: inst_(inst), opt_(opt), pm_(inst), ws_(inst.workloads.workloads), ds_(inst.mode == PlacementMode::Disaggregated), lp_(master_options())
	{
		K_ = pm_.real_time().size();
		L_ = pm_.location_count();
	}

	PlacementSolution run()
	{
		start_ = Clock::now();
		build_master();

		incumbent_ = greedy_warm_start(inst_);
		if (opt_.incumbent && opt_.incumbent->objective.weighted < incumbent_->objective.weighted) { incumbent_ = opt_.incumbent; }
		add_solution_columns(*incumbent_);

		// Bounds equal to a milliwatt are ties; the newest node wins so the
		// search keeps descending on a flat bound.
		auto key = [](double b) { return std::isfinite(b) ? std::floor(b * 1e3) : b; };
		auto cmp = [&](const Node& a, const Node& b) { return key(a.bound) != key(b.bound) ? key(a.bound) > key(b.bound) : a.id < b.id; };
		std::priority_queue<Node, std::vector<Node>, decltype(cmp)> open(cmp);
		open.push(Node{-kInf, next_id_++, root_state(), {}, false});

		bool limit_hit = false;
		double open_bound = kInf;
		while (!open.empty())
		{
			if (elapsed() > opt_.time_limit_seconds || (opt_.node_limit > 0 && nodes_ >= opt_.node_limit))
			{
				limit_hit = true;
				break;
			}
			Node node = open.top();
			open.pop();
			if (pruned(node.bound)) { continue; }
			++nodes_;
			process(node, open);
			if (timed_out_in_node_)
			{
				open.push(std::move(node));
				limit_hit = true;
				break;
			}
		}
		if (limit_hit)
		{
			while (!open.empty())
			{
				open_bound = std::min(open_bound, open.top().bound);
				open.pop();
			}
		}

		PlacementSolution sol = *incumbent_;
		sol.backend = ds_ ? "branch-and-price/ds" : "branch-and-price/ts";
		sol.nodes_explored = static_cast<std::size_t>(nodes_);
		sol.optimal = !limit_hit;
		double z = sol.objective.weighted;
		sol.bound = limit_hit ? std::min(open_bound, z) : z;
		sol.gap = limit_hit ? (z - sol.bound) / std::max(1.0, std::fabs(z)) : 0.0;
		sol.solve_seconds = elapsed();
		return sol;
	}

private:
	static lp::SimplexOptions master_options()
	{
		lp::SimplexOptions o;
		o.dual_tol = 1e-8;
		o.relative_dual_tol = 0;
		return o;
	}

	double elapsed() const { return std::chrono::duration<double>(Clock::now() - start_).count(); }

	bool pruned(double bound) const { return incumbent_ && bound >= incumbent_->objective.weighted - opt_.absolute_gap; }

	// ---- master construction -------------------------------------------------

	void build_master()
	{
		const auto& topo = inst_.topo();
		for (std::size_t k = 0; k < K_; ++k) { rt_row_.push_back(lp_.add_row(1, 1)); }
		if (ds_)
		{
			for (std::size_t l = 0; l < L_; ++l) { loc_row_.push_back(lp_.add_row(1, 1)); }
		}
		else
		{
			local_row_.assign(ws_.size(), -1);
			for (std::size_t l = 0; l < L_; ++l)
			{
				for (auto i : pm_.local_items(l)) { local_row_[i] = lp_.add_row(1, 1); }
			}
			for (std::size_t l = 0; l < L_; ++l)
			{
				auto lb = local_pack_count(l);
				root_count_lo_.push_back(static_cast<double>(lb));
				count_row_.push_back(lp_.add_row(static_cast<double>(lb), static_cast<double>(pm_.location(l).server_count)));
			}
		}

		// A link row is needed only if the worst case over every real-time
		// workload's routes can exceed the free capacity.
		link_row_.assign(topo.link_count(), -1);
		std::vector<double> worst(topo.link_count(), 0.0);
		for (std::size_t k = 0; k < K_; ++k)
		{
			std::vector<double> w(topo.link_count(), 0.0);
			for (std::size_t l = 0; l < L_; ++l)
			{
				for (const auto& o : pm_.options(k, l))
				{
					for (const auto& [e, g] : o.usage) { w[e.index()] = std::max(w[e.index()], g); }
				}
			}
			for (std::size_t e = 0; e < w.size(); ++e) { worst[e] += w[e]; }
		}
		for (std::size_t e = 0; e < worst.size(); ++e)
		{
			if (worst[e] > pm_.free_capacity(LinkId(e)) + kCapacityEps) { link_row_[e] = lp_.add_row(-kInf, pm_.free_capacity(LinkId(e))); }
		}

		// Aggregate rows. Their totals are integral in every placement, so
		// branching on them settles the weighted counts before individual
		// assignments.
		root_agg_lo_ = {0, 0, 0};
		root_agg_hi_ = {static_cast<double>(K_), 0, 0};
		agg_row_.assign(3, -1);
		agg_row_[0] = lp_.add_row(0, static_cast<double>(K_));
		for (std::size_t l = 0; l < L_; ++l)
		{
			const double S = static_cast<double>(pm_.location(l).server_count);
			if (ds_)
			{
				auto n = min_components(l, pm_.local_load(l));
				root_agg_lo_[1] += static_cast<double>(n[0] + n[1] + n[2]);
				root_agg_lo_[2] += static_cast<double>(std::max({n[0], n[1], n[2]}));
				root_agg_hi_[1] += 3 * S;
				root_agg_hi_[2] += S;
			}
			else
			{
				root_agg_lo_[1] += root_count_lo_[l];
				root_agg_hi_[1] += S;
			}
		}
		agg_row_[1] = lp_.add_row(root_agg_lo_[1], root_agg_hi_[1]);
		if (ds_) { agg_row_[2] = lp_.add_row(root_agg_lo_[2], root_agg_hi_[2]); }

		for (std::size_t k = 0; k < K_; ++k) { b_col_.push_back(lp_.add_column(inst_.weights.alpha1, 0, 1, {{rt_row_[k], 1.0}, {agg_row_[0], 1.0}})); }
		// Phase-one artificials on every row that a zero master cannot meet.
		auto artificial = [&](int row) { art_col_.push_back(lp_.add_column(0, 0, 0, {{row, 1.0}})); };
		for (int r : rt_row_) { artificial(r); }
		for (int r : loc_row_) { artificial(r); }
		for (int r : local_row_)
		{
			if (r >= 0) { artificial(r); }
		}
		for (int r : count_row_) { artificial(r); }
		for (int r : agg_row_)
		{
			if (r >= 0) { artificial(r); }
		}

		coef_ = pm_.power_coefficients();
		NodeState root = root_state();
		state_ = &root;
		if (ds_)
		{
			for (std::size_t l = 0; l < L_; ++l) { add_column(make_column(l, {}, {}, {})); }
		}
		else
		{
			for (std::size_t l = 0; l < L_; ++l)
			{
				std::vector<Resources> d;
				for (auto i : pm_.local_items(l)) { d.push_back(ws_[i].demand); }
				auto slots = pack_min_servers(d, pm_.location(l).config, pm_.location(l).server_count);
				std::vector<std::vector<std::size_t>> pats;
				for (std::size_t j = 0; j < slots->size(); ++j)
				{
					auto s = static_cast<std::size_t>((*slots)[j]);
					if (pats.size() <= s) { pats.resize(s + 1); }
					pats[s].push_back(pm_.local_items(l)[j]);
				}
				for (auto& p : pats) { add_column(make_column(l, {}, {}, p)); }
			}
		}
		state_ = nullptr;
	}

	std::size_t local_pack_count(std::size_t l) const
	{
		std::vector<Resources> d;
		for (auto i : pm_.local_items(l)) { d.push_back(ws_[i].demand); }
		auto slots = pack_min_servers(d, pm_.location(l).config, pm_.location(l).server_count);
		if (!slots) { throw InstanceInfeasibleError("node-local workloads do not fit"); }
		int mx = -1;
		for (int s : *slots) { mx = std::max(mx, s); }
		return static_cast<std::size_t>(mx + 1);
	}

	NodeState root_state() const
	{
		NodeState s;
		s.b_fix.assign(K_, -1);
		s.allowed.assign(K_ * L_, 1);
		s.forced.assign(K_, -1);
		s.routes.assign(K_ * L_, 0);
		for (std::size_t k = 0; k < K_; ++k)
		{
			for (std::size_t l = 0; l < L_; ++l)
			{
				const auto& opts = pm_.options(k, l);
				if (opts.size() > 64) { throw Error("more than 64 route options per workload and location"); }
				std::uint64_t mask = 0;
				for (std::size_t o = 0; o < opts.size(); ++o)
				{
					bool ok = true;
					for (const auto& [e, g] : opts[o].usage) { ok = ok && g <= pm_.free_capacity(e) + kCapacityEps; }
					if (ok) { mask |= std::uint64_t{1} << o; }
				}
				s.routes[k * L_ + l] = mask;
				if (!mask || !fits_within(pm_.rt_workload(k).demand, pm_.location(l).total_capacity())) { s.allowed[k * L_ + l] = 0; }
			}
		}
		if (!ds_)
		{
			s.count_lo = root_count_lo_;
			for (std::size_t l = 0; l < L_; ++l) { s.count_hi.push_back(static_cast<double>(pm_.location(l).server_count)); }
		}
		else
		{
			for (std::size_t l = 0; l < L_; ++l)
			{
				const std::size_t S = pm_.location(l).server_count;
				s.comp_lo.push_back(min_components(l, pm_.local_load(l)));
				s.comp_hi.push_back({S, S, S});
			}
		}
		s.agg_lo = root_agg_lo_;
		s.agg_hi = root_agg_hi_;
		return s;
	}

	// ---- columns ---------------------------------------------------------------

	/// DS columns activate `n` components, or the fewest that hold the
	/// location's load when `n` is not given.
	Column make_column(std::size_t l, std::vector<std::size_t> rt, std::vector<std::size_t> route, std::vector<std::size_t> local,
	                   std::optional<std::array<std::size_t, kResourceCount>> n = std::nullopt) const
	{
		Column c;
		c.loc = l;
		// Keep rt ascending with its routes.
		std::vector<std::size_t> ord(rt.size());
		std::iota(ord.begin(), ord.end(), 0);
		std::sort(ord.begin(), ord.end(), [&](std::size_t a, std::size_t b) { return rt[a] < rt[b]; });
		for (auto i : ord)
		{
			c.rt.push_back(rt[i]);
			c.route.push_back(route[i]);
		}
		std::sort(local.begin(), local.end());
		c.local = std::move(local);
		double power = 0;
		for (std::size_t i = 0; i < c.rt.size(); ++i) { power += pm_.options(c.rt[i], l)[c.route[i]].power; }
		if (ds_)
		{
			if (n) { c.n = *n; }
			else
			{
				Resources total = pm_.local_load(l);
				for (auto k : c.rt) { total += pm_.rt_workload(k).demand; }
				c.n = min_components(l, total);
			}
			c.cost = ds_cost(c.n) + power;
		}
		else { c.cost = 3 * inst_.weights.alpha2 + inst_.weights.alpha3 + power; }
		return c;
	}

	std::array<std::size_t, kResourceCount> min_components(std::size_t l, const Resources& total) const
	{
		std::array<std::size_t, kResourceCount> n{};
		for (std::size_t r = 0; r < kResourceCount; ++r) { n[r] = components_needed(total[r], pm_.location(l).config.capacity[r]); }
		return n;
	}

	static std::size_t sum_of(const std::array<std::size_t, kResourceCount>& n) { return n[0] + n[1] + n[2]; }
	static std::size_t max_of(const std::array<std::size_t, kResourceCount>& n) { return std::max({n[0], n[1], n[2]}); }

	double ds_cost(const std::array<std::size_t, kResourceCount>& n) const
	{
		return inst_.weights.alpha2 * static_cast<double>(sum_of(n)) + inst_.weights.alpha3 * static_cast<double>(max_of(n));
	}

	std::string column_key(const Column& c) const
	{
		std::string key = std::to_string(c.loc) + "|";
		for (std::size_t i = 0; i < c.rt.size(); ++i) { key += std::to_string(c.rt[i]) + ":" + std::to_string(c.route[i]) + ","; }
		key += "|";
		for (auto i : c.local) { key += std::to_string(i) + ","; }
		if (ds_) { key += "|" + std::to_string(c.n[0]) + "," + std::to_string(c.n[1]) + "," + std::to_string(c.n[2]); }
		return key;
	}

	/// Adds the column unless an identical one exists; returns true if added.
	bool add_column(Column c)
	{
		auto key = column_key(c);
		if (keys_.count(key)) { return false; }
		lp::Entries e;
		for (auto k : c.rt) { e.emplace_back(rt_row_[k], 1.0); }
		if (ds_)
		{
			e.emplace_back(loc_row_[c.loc], 1.0);
			if (sum_of(c.n)) { e.emplace_back(agg_row_[1], static_cast<double>(sum_of(c.n))); }
			if (max_of(c.n)) { e.emplace_back(agg_row_[2], static_cast<double>(max_of(c.n))); }
		}
		else
		{
			for (auto i : c.local) { e.emplace_back(local_row_[i], 1.0); }
			e.emplace_back(count_row_[c.loc], 1.0);
			e.emplace_back(agg_row_[1], 1.0);
		}
		std::vector<double> use(link_row_.size(), 0.0);
		for (std::size_t i = 0; i < c.rt.size(); ++i)
		{
			for (const auto& [l, g] : pm_.options(c.rt[i], c.loc)[c.route[i]].usage) { use[l.index()] += g; }
		}
		for (std::size_t l = 0; l < use.size(); ++l)
		{
			if (use[l] != 0 && link_row_[l] >= 0) { e.emplace_back(link_row_[l], use[l]); }
		}
		std::sort(e.begin(), e.end());
		c.lp_index = lp_.add_column(phase_one_ ? 0.0 : c.cost, 0, compatible(c, *state_) ? 1 : 0, std::move(e));
		keys_.emplace(std::move(key), columns_.size());
		columns_.push_back(std::move(c));
		return true;
	}

	void add_solution_columns(const PlacementSolution& sol)
	{
		const auto& topo = inst_.topo();
		NodeState root = root_state();
		state_ = &root;
		std::vector<int> k_of(ws_.size(), -1);
		for (std::size_t k = 0; k < K_; ++k) { k_of[pm_.real_time()[k]] = static_cast<int>(k); }
		// DS: one column per location. TS: one per used chassis.
		std::map<std::pair<std::size_t, int>, Column> groups;
		for (std::size_t i = 0; i < ws_.size(); ++i)
		{
			const auto& pl = sol.placements[i];
			if (pl.blocked()) { continue; }
			auto l = static_cast<std::size_t>(pm_.location_of_node(*pl.host));
			auto& g = groups[{l, ds_ ? 0 : pl.server}];
			g.loc = l;
			if (k_of[i] < 0)
			{
				if (!ds_) { g.local.push_back(i); }
				continue;
			}
			auto k = static_cast<std::size_t>(k_of[i]);
			const auto& sp = topo.paths_between(*pl.host, ws_[i].source_node);
			const auto& dp = topo.paths_between(*pl.host, topo.datacenter());
			for (std::size_t o = 0; o < pm_.options(k, l).size(); ++o)
			{
				const auto& opt = pm_.options(k, l)[o];
				if (sp[opt.source_path] == pl.source_path && dp[opt.dc_path] == pl.dc_path)
				{
					g.rt.push_back(k);
					g.route.push_back(o);
				}
			}
		}
		for (auto& [key, g] : groups) { add_column(make_column(g.loc, g.rt, g.route, g.local)); }
		state_ = nullptr;
	}

	bool compatible(const Column& c, const NodeState& s) const
	{
		if (ds_)
		{
			for (std::size_t r = 0; r < kResourceCount; ++r)
			{
				if (c.n[r] < s.comp_lo[c.loc][r] || c.n[r] > s.comp_hi[c.loc][r]) { return false; }
			}
		}
		for (std::size_t i = 0; i < c.rt.size(); ++i)
		{
			std::size_t k = c.rt[i];
			if (s.b_fix[k] == 1 || !s.allowed[k * L_ + c.loc]) { return false; }
			if (s.forced[k] >= 0 && static_cast<std::size_t>(s.forced[k]) != c.loc) { return false; }
			if (!(s.routes[k * L_ + c.loc] >> c.route[i] & 1u)) { return false; }
		}
		return true;
	}

	void apply(const NodeState& s)
	{
		for (const auto& c : columns_) { lp_.set_column_bounds(c.lp_index, 0, compatible(c, s) ? 1 : 0); }
		for (std::size_t k = 0; k < K_; ++k)
		{
			double lo = s.b_fix[k] == 1 ? 1 : 0, hi = s.b_fix[k] == 0 ? 0 : 1;
			lp_.set_column_bounds(b_col_[k], lo, hi);
		}
		for (int a : art_col_) { lp_.set_column_bounds(a, 0, 0); }
		for (std::size_t a = 0; a < agg_row_.size(); ++a)
		{
			if (agg_row_[a] >= 0) { lp_.set_row_bounds(agg_row_[a], s.agg_lo[a], s.agg_hi[a]); }
		}
		if (!ds_)
		{
			for (std::size_t l = 0; l < L_; ++l) { lp_.set_row_bounds(count_row_[l], s.count_lo[l], s.count_hi[l]); }
		}
	}

	// ---- pricing ---------------------------------------------------------------

	struct ItemChoice
	{
		std::size_t k;
		std::size_t route;
		double value;
	};

	/// Value of real-time workload k at location l under duals y: its cover
	/// dual minus the cheapest allowed route's reduced cost.
	std::optional<ItemChoice> item_value(std::size_t k, std::size_t l, const std::vector<double>& y, const NodeState& s) const
	{
		if (s.b_fix[k] == 1 || !s.allowed[k * L_ + l]) { return std::nullopt; }
		if (s.forced[k] >= 0 && static_cast<std::size_t>(s.forced[k]) != l) { return std::nullopt; }
		const auto& opts = pm_.options(k, l);
		std::uint64_t mask = s.routes[k * L_ + l];
		double best = kInf;
		std::size_t pick = 0;
		for (std::size_t o = 0; o < opts.size(); ++o)
		{
			if (!(mask >> o & 1u)) { continue; }
			double c = phase_one_ ? 0.0 : opts[o].power;
			for (const auto& [e, g] : opts[o].usage)
			{
				int row = link_row_[e.index()];
				if (row >= 0) { c -= y[row] * g; }
			}
			if (c < best)
			{
				best = c;
				pick = o;
			}
		}
		if (best == kInf) { return std::nullopt; }
		return ItemChoice{k, pick, y[rt_row_[k]] - best};
	}

	PriceResult price_ds(std::size_t l, const std::vector<double>& y, const NodeState& s)
	{
		const auto& loc = pm_.location(l);
		const Resources& local = pm_.local_load(l);
		std::vector<ItemChoice> choice;
		std::vector<KnapsackItem> items;
		double v_all = 0;
		for (std::size_t k = 0; k < K_; ++k)
		{
			auto c = item_value(k, l, y, s);
			if (!c || c->value <= 0) { continue; }
			choice.push_back(*c);
			items.push_back({pm_.rt_workload(k).demand, c->value});
			v_all += c->value;
		}
		const double mu = y[loc_row_[l]];
		std::array<std::size_t, kResourceCount> nmin{};
		for (std::size_t r = 0; r < kResourceCount; ++r) { nmin[r] = components_needed(local[r], loc.config.capacity[r]); }

		// Component-count vectors, cheapest first under the aggregate duals.
		struct Count
		{
			std::array<std::size_t, kResourceCount> n;
			double f;
		};
		std::vector<Count> counts;
		const std::size_t S = loc.server_count;
		const double w_nc = (phase_one_ ? 0.0 : inst_.weights.alpha2) - y[agg_row_[1]];
		const double w_ns = (phase_one_ ? 0.0 : inst_.weights.alpha3) - y[agg_row_[2]];
		const auto& lo = s.comp_lo[l];
		const auto& hi = s.comp_hi[l];
		for (std::size_t a = std::max(nmin[0], lo[0]); a <= std::min(S, hi[0]); ++a)
		{
			for (std::size_t b = std::max(nmin[1], lo[1]); b <= std::min(S, hi[1]); ++b)
			{
				for (std::size_t c = std::max(nmin[2], lo[2]); c <= std::min(S, hi[2]); ++c)
				{
					double f = w_nc * static_cast<double>(a + b + c) + w_ns * static_cast<double>(std::max({a, b, c}));
					counts.push_back({{a, b, c}, f});
				}
			}
		}
		std::stable_sort(counts.begin(), counts.end(), [](const Count& x, const Count& z) { return x.f < z.f; });

		PriceResult best;
		std::vector<std::size_t> best_set;
		std::array<std::size_t, kResourceCount> best_n{};
		bool have = false;
		for (const auto& cnt : counts)
		{
			double base = cnt.f - mu;
			if (have && base - v_all >= best.rc) { break; }
			Resources room;
			for (std::size_t r = 0; r < kResourceCount; ++r) { room[r] = static_cast<double>(cnt.n[r]) * loc.config.capacity[r] - local[r]; }
			bool fits = true;
			for (std::size_t r = 0; r < kResourceCount; ++r) { fits = fits && room[r] >= -kCapacityEps; }
			if (!fits) { continue; }
			// Need value > base - best.rc to improve.
			double target = have ? base - best.rc : -1.0;
			auto ks = knapsack_.solve(items, room, std::max(target, -1.0));
			double value = ks.improved ? ks.value : 0.0;
			std::vector<std::size_t> set = ks.improved ? ks.chosen : std::vector<std::size_t>{};
			if (!ks.improved && have) { continue; }
			double rc = base - value;
			if (!have || rc < best.rc)
			{
				best.rc = rc;
				best_set = set;
				best_n = cnt.n;
				have = true;
			}
		}
		if (!have) { return best; }
		std::vector<std::size_t> rt, route;
		for (auto i : best_set)
		{
			rt.push_back(choice[i].k);
			route.push_back(choice[i].route);
		}
		best.column = make_column(l, rt, route, {}, best_n);
		return best;
	}

	PriceResult price_ts(std::size_t l, const std::vector<double>& y, const NodeState& s)
	{
		const auto& loc = pm_.location(l);
		std::vector<KnapsackItem> items;
		std::vector<std::pair<bool, ItemChoice>> what;  // (is_local, choice); local uses k as workload index
		for (auto i : pm_.local_items(l))
		{
			double v = y[local_row_[i]];
			if (v <= 0) { continue; }
			items.push_back({ws_[i].demand, v});
			what.push_back({true, ItemChoice{i, 0, v}});
		}
		for (std::size_t k = 0; k < K_; ++k)
		{
			auto c = item_value(k, l, y, s);
			if (!c || c->value <= 0) { continue; }
			items.push_back({pm_.rt_workload(k).demand, c->value});
			what.push_back({false, *c});
		}
		double base = (phase_one_ ? 0.0 : 3 * inst_.weights.alpha2 + inst_.weights.alpha3) - y[count_row_[l]] - y[agg_row_[1]];
		auto ks = knapsack_.solve(items, loc.config.capacity, -1.0);
		PriceResult res;
		res.rc = base - (ks.improved ? ks.value : 0.0);
		std::vector<std::size_t> rt, route, local;
		for (auto i : ks.chosen)
		{
			if (what[i].first) { local.push_back(what[i].second.k); }
			else
			{
				rt.push_back(what[i].second.k);
				route.push_back(what[i].second.route);
			}
		}
		res.column = make_column(l, rt, route, local);
		return res;
	}

	/// Lagrangian bound: every row dualized with y, each location's column
	/// choice kept under its cardinality (exactly one column in DS, between
	/// the count bounds in TS).
	double lagrangian_bound(const std::vector<double>& y, const std::vector<double>& rc, const NodeState& s) const
	{
		long double z = pm_.base_tnpc();
		for (int i = 0; i < lp_.rows(); ++i)
		{
			long double yi = y[i];
			if (yi > 0) { z += yi * lp_.row_lower(i); }
			else if (yi < 0) { z += yi * lp_.row_upper(i); }
		}
		for (std::size_t k = 0; k < K_; ++k)
		{
			long double d = static_cast<long double>(inst_.weights.alpha1) - y[rt_row_[k]] - y[agg_row_[0]];
			double lo = s.b_fix[k] == 1 ? 1 : 0, hi = s.b_fix[k] == 0 ? 0 : 1;
			z += d > 0 ? d * lo : d * hi;
		}
		for (std::size_t l = 0; l < L_; ++l)
		{
			if (ds_) { z += rc[l]; }
			else { z += rc[l] < 0 ? rc[l] * s.count_hi[l] : rc[l] * s.count_lo[l]; }
		}
		return static_cast<double>(z);
	}

	// ---- node processing -------------------------------------------------------

	enum class NodeOutcome
	{
		Solved,
		Infeasible,
		Pruned
	};

	void set_phase_one(bool on)
	{
		phase_one_ = on;
		for (const auto& c : columns_) { lp_.set_cost(c.lp_index, on ? 0.0 : c.cost); }
		for (std::size_t k = 0; k < K_; ++k) { lp_.set_cost(b_col_[k], on ? 0.0 : inst_.weights.alpha1); }
		for (int a : art_col_)
		{
			lp_.set_cost(a, on ? 1.0 : 0.0);
			lp_.set_column_bounds(a, 0, on ? kInf : 0);
		}
	}

	std::vector<PriceResult> price_all(const std::vector<double>& y, const NodeState& s)
	{
		std::vector<PriceResult> out(L_);
		for (std::size_t l = 0; l < L_; ++l) { out[l] = ds_ ? price_ds(l, y, s) : price_ts(l, y, s); }
		return out;
	}

	/// Column generation for feasibility. Returns false when the node's
	/// master has no feasible point over all columns.
	bool phase_one(const NodeState& s)
	{
		set_phase_one(true);
		bool feasible = false;
		for (;;)
		{
			auto st = lp_.solve();
			if (st != lp::Status::Optimal) { throw Error("phase-one master did not solve"); }
			if (lp_.objective() <= 1e-9)
			{
				feasible = true;
				break;
			}
			auto y = lp_.clamped_duals();
			auto pr = price_all(y, s);
			bool added = false;
			for (auto& p : pr)
			{
				if (p.column && p.rc < -1e-9) { added = add_column(std::move(*p.column)) || added; }
			}
			if (!added) { break; }
			if (elapsed() > opt_.time_limit_seconds)
			{
				timed_out_in_node_ = true;
				break;
			}
		}
		set_phase_one(false);
		return feasible;
	}

	NodeOutcome column_generation(Node& node)
	{
		const NodeState& s = node.state;
		int restarts = 0;
		for (;;)
		{
			auto st = lp_.solve();
			if (st == lp::Status::Infeasible)
			{
				if (++restarts > 50) { throw Error("master LP alternates between phases"); }
				if (!phase_one(s)) { return timed_out_in_node_ ? NodeOutcome::Pruned : NodeOutcome::Infeasible; }
				continue;
			}
			if (st != lp::Status::Optimal) { throw Error("master LP did not solve"); }
			auto y = lp_.clamped_duals();
			auto pr = price_all(y, s);
			std::vector<double> rc(L_);
			for (std::size_t l = 0; l < L_; ++l) { rc[l] = pr[l].rc; }
			node.bound = std::max(node.bound, lagrangian_bound(y, rc, s));
			if (pruned(node.bound)) { return NodeOutcome::Pruned; }
			bool added = false;
			for (std::size_t l = 0; l < L_; ++l)
			{
				auto& p = pr[l];
				if (p.column && p.rc < -kPriceTol) { added = add_column(std::move(*p.column)) || added; }
			}
			if (!added) { return NodeOutcome::Solved; }
			if (elapsed() > opt_.time_limit_seconds)
			{
				timed_out_in_node_ = true;
				return NodeOutcome::Pruned;
			}
		}
	}

	template <typename Queue>
	void process(Node& node, Queue& open)
	{
		state_ = &node.state;
		apply(node.state);
		if (node.has_basis) { lp_.set_basis(node.basis); }
		bool dived = false;
		for (;;)
		{
			auto outcome = column_generation(node);
			if (outcome != NodeOutcome::Solved || timed_out_in_node_) { break; }

			const double tol = 1e-6;
			std::vector<double> lam(columns_.size());
			for (std::size_t j = 0; j < columns_.size(); ++j) { lam[j] = lp_.value(columns_[j].lp_index); }
			std::vector<double> yv(K_ * L_, 0.0), count(L_, 0.0);
			for (std::size_t j = 0; j < columns_.size(); ++j)
			{
				if (lam[j] <= 1e-12) { continue; }
				const auto& c = columns_[j];
				for (auto k : c.rt) { yv[k * L_ + c.loc] += lam[j]; }
				count[c.loc] += lam[j];
			}
			if (opt_.heuristic_interval > 0 && (nodes_ % opt_.heuristic_interval) == 1) { rounding_heuristic(yv); }
			if (!dived && opt_.dive_interval > 0 && (nodes_ % opt_.dive_interval) == 1)
			{
				dived = true;
				auto basis = lp_.basis();
				dive(node.state);
				state_ = &node.state;
				apply(node.state);
				lp_.set_basis(basis);
				if (timed_out_in_node_) { break; }
				continue;
			}

			auto frac = [&](double v) { return v > tol && v < 1 - tol; };
			auto child = [&](auto&& edit) {
				Node c{node.bound, next_id_++, node.state, lp_.basis(), true};
				edit(c.state);
				open.push(std::move(c));
			};

			// Aggregate totals.
			std::array<double, 3> agg{};
			for (std::size_t k = 0; k < K_; ++k) { agg[0] += lp_.value(b_col_[k]); }
			for (std::size_t j = 0; j < columns_.size(); ++j)
			{
				if (lam[j] <= 1e-12) { continue; }
				const auto& c = columns_[j];
				agg[1] += lam[j] * (ds_ ? static_cast<double>(sum_of(c.n)) : 1.0);
				agg[2] += ds_ ? lam[j] * static_cast<double>(max_of(c.n)) : 0.0;
			}
			for (std::size_t a = 0; a < agg.size(); ++a)
			{
				if (agg_row_[a] >= 0 && std::fabs(agg[a] - std::round(agg[a])) > tol)
				{
					const double v = agg[a];
					child([&](NodeState& s) { s.agg_hi[a] = std::floor(v); });
					child([&](NodeState& s) { s.agg_lo[a] = std::ceil(v); });
					state_ = nullptr;
					return;
				}
			}
			// Blocked flags.
			for (std::size_t k = 0; k < K_; ++k)
			{
				if (frac(lp_.value(b_col_[k])))
				{
					child([&](NodeState& s) { s.b_fix[k] = 1; });
					child([&](NodeState& s) { s.b_fix[k] = 0; });
					state_ = nullptr;
					return;
				}
			}
			// DS component counts per location, most fractional first.
			if (ds_)
			{
				std::vector<std::array<double, kResourceCount>> comp(L_, {0, 0, 0});
				for (std::size_t j = 0; j < columns_.size(); ++j)
				{
					if (lam[j] <= 1e-12) { continue; }
					for (std::size_t r = 0; r < kResourceCount; ++r) { comp[columns_[j].loc][r] += lam[j] * static_cast<double>(columns_[j].n[r]); }
				}
				double most = tol;
				std::optional<std::pair<std::size_t, std::size_t>> at;
				for (std::size_t l = 0; l < L_; ++l)
				{
					for (std::size_t r = 0; r < kResourceCount; ++r)
					{
						const double f = std::fabs(comp[l][r] - std::round(comp[l][r]));
						if (f > most)
						{
							most = f;
							at = {l, r};
						}
					}
				}
				if (at)
				{
					const auto [l, r] = *at;
					const double v = comp[l][r];
					child([&](NodeState& s) { s.comp_hi[l][r] = static_cast<std::size_t>(std::floor(v)); });
					child([&](NodeState& s) { s.comp_lo[l][r] = static_cast<std::size_t>(std::ceil(v)); });
					state_ = nullptr;
					return;
				}
			}
			// TS chassis counts.
			if (!ds_)
			{
				for (std::size_t l = 0; l < L_; ++l)
				{
					double c = count[l];
					if (std::fabs(c - std::round(c)) > tol)
					{
						child([&](NodeState& s) { s.count_hi[l] = std::floor(c); });
						child([&](NodeState& s) { s.count_lo[l] = std::ceil(c); });
						state_ = nullptr;
						return;
					}
				}
			}
			// Workload to location.
			for (std::size_t k = 0; k < K_; ++k)
			{
				for (std::size_t l = 0; l < L_; ++l)
				{
					if (frac(yv[k * L_ + l]))
					{
						branch_location(node, k, l, open);
						state_ = nullptr;
						return;
					}
				}
			}
			// Route choices.
			for (std::size_t k = 0; k < K_; ++k)
			{
				for (std::size_t l = 0; l < L_; ++l)
				{
					if (yv[k * L_ + l] < 0.5) { continue; }
					std::vector<double> z(pm_.options(k, l).size(), 0.0);
					for (std::size_t j = 0; j < columns_.size(); ++j)
					{
						const auto& c = columns_[j];
						if (lam[j] <= 1e-12 || c.loc != l) { continue; }
						for (std::size_t i = 0; i < c.rt.size(); ++i)
						{
							if (c.rt[i] == k) { z[c.route[i]] += lam[j]; }
						}
					}
					for (std::size_t o = 0; o < z.size(); ++o)
					{
						if (frac(z[o]))
						{
							const std::uint64_t bit = std::uint64_t{1} << o;
							child([&](NodeState& s) { s.routes[k * L_ + l] &= bit; });
							child([&](NodeState& s) { s.routes[k * L_ + l] &= ~bit; });
							state_ = nullptr;
							return;
						}
					}
				}
			}

			// Integral assignment: build the placement.
			std::vector<int> host_loc(ws_.size(), -1);
			std::vector<std::size_t> route_of(K_, 0);
			for (std::size_t l = 0; l < L_; ++l)
			{
				for (auto i : pm_.local_items(l)) { host_loc[i] = static_cast<int>(l); }
			}
			for (std::size_t j = 0; j < columns_.size(); ++j)
			{
				if (lam[j] < 0.5) { continue; }
				const auto& c = columns_[j];
				for (std::size_t i = 0; i < c.rt.size(); ++i)
				{
					host_loc[pm_.real_time()[c.rt[i]]] = static_cast<int>(c.loc);
					route_of[c.rt[i]] = c.route[i];
				}
			}
			std::vector<WorkloadPlacement> pl(ws_.size());
			bool resolve = false;
			if (!ds_)
			{
				for (std::size_t l = 0; l < L_ && !resolve; ++l)
				{
					std::vector<std::size_t> members;
					std::vector<Resources> d;
					for (std::size_t i = 0; i < ws_.size(); ++i)
					{
						if (host_loc[i] == static_cast<int>(l))
						{
							members.push_back(i);
							d.push_back(ws_[i].demand);
						}
					}
					const auto cnt = static_cast<std::size_t>(std::llround(count[l]));
					auto slots = pack_min_servers(d, pm_.location(l).config, cnt);
					if (slots)
					{
						for (std::size_t m = 0; m < members.size(); ++m) { pl[members[m]].server = (*slots)[m]; }
						continue;
					}
					// Does not pack into the LP's chassis count.
					std::optional<std::size_t> free_k;
					for (std::size_t k = 0; k < K_ && !free_k; ++k)
					{
						if (host_loc[pm_.real_time()[k]] == static_cast<int>(l) && node.state.forced[k] != static_cast<int>(l)) { free_k = k; }
					}
					if (free_k)
					{
						branch_location(node, *free_k, l, open);
						state_ = nullptr;
						return;
					}
					// Every workload here is fixed: the count must rise.
					auto need = pack_min_servers(d, pm_.location(l).config, pm_.location(l).server_count);
					double lb = need ? static_cast<double>(count_used(*need)) : node.state.count_hi[l] + 1;
					if (lb > node.state.count_hi[l])
					{
						state_ = nullptr;
						return;
					}
					node.state.count_lo[l] = std::max(node.state.count_lo[l], lb);
					lp_.set_row_bounds(count_row_[l], node.state.count_lo[l], node.state.count_hi[l]);
					resolve = true;
				}
				if (resolve) { continue; }
			}
			const auto& topo = inst_.topo();
			for (std::size_t i = 0; i < ws_.size(); ++i)
			{
				if (host_loc[i] < 0) { continue; }
				pl[i].host = pm_.location(static_cast<std::size_t>(host_loc[i])).node;
			}
			for (std::size_t k = 0; k < K_; ++k)
			{
				std::size_t i = pm_.real_time()[k];
				if (host_loc[i] < 0) { continue; }
				const auto& opt = pm_.options(k, static_cast<std::size_t>(host_loc[i]))[route_of[k]];
				pl[i].source_path = topo.paths_between(*pl[i].host, ws_[i].source_node)[opt.source_path];
				pl[i].dc_path = topo.paths_between(*pl[i].host, topo.datacenter())[opt.dc_path];
			}
			offer(assemble_solution(inst_, std::move(pl)));
			break;
		}
		state_ = nullptr;
	}

	static std::size_t count_used(const std::vector<int>& slots)
	{
		int mx = -1;
		for (int s : slots) { mx = std::max(mx, s); }
		return static_cast<std::size_t>(mx + 1);
	}

	template <typename Queue>
	void branch_location(const Node& node, std::size_t k, std::size_t l, Queue& open)
	{
		auto basis = lp_.basis();
		Node one{node.bound, next_id_++, node.state, basis, true};
		one.state.forced[k] = static_cast<int>(l);
		one.state.b_fix[k] = 0;
		Node zero{node.bound, next_id_++, node.state, basis, true};
		zero.state.allowed[k * L_ + l] = 0;
		open.push(std::move(one));
		open.push(std::move(zero));
	}

	void offer(PlacementSolution sol)
	{
		if (!validate_solution(inst_, sol).ok()) { return; }
		if (!incumbent_ || sol.objective.weighted < incumbent_->objective.weighted - 1e-9)
		{
			incumbent_ = std::move(sol);
		}
	}

	/// Repeatedly fixes the location configuration with the largest
	/// fractional LP weight and re-solves, rounding after every step. A fix
	/// that makes the master infeasible is undone and forbidden instead.
	void dive(const NodeState& from)
	{
		Node d{-kInf, -1, from, {}, false};
		state_ = &d.state;
		NodeState last = from;
		std::optional<std::pair<std::size_t, std::size_t>> last_fix;
		int backtracks = 0;
		for (std::size_t step = 0; step <= 2 * (K_ + L_); ++step)
		{
			apply(d.state);
			d.bound = -kInf;
			auto outcome = column_generation(d);
			if (timed_out_in_node_) { return; }
			if (outcome != NodeOutcome::Solved)
			{
				if (!last_fix || ++backtracks > static_cast<int>(L_)) { return; }
				d.state = last;
				d.state.allowed[last_fix->first * L_ + last_fix->second] = 0;
				last_fix.reset();
				continue;
			}
			std::vector<double> yv(K_ * L_, 0.0);
			const Column* pick = nullptr;
			double best = 0;
			for (const auto& c : columns_)
			{
				double lam = lp_.value(c.lp_index);
				if (lam <= 1e-12) { continue; }
				for (auto k : c.rt) { yv[k * L_ + c.loc] += lam; }
				if (c.rt.empty() || lam >= 1 - 1e-6) { continue; }
				if (std::all_of(c.rt.begin(), c.rt.end(), [&](std::size_t k) { return d.state.forced[k] >= 0; })) { continue; }
				if (lam > best)
				{
					best = lam;
					pick = &c;
				}
			}
			rounding_heuristic(yv);
			offer_integral_master();
			last = d.state;
			last_fix.reset();
			if (pick)
			{
				for (std::size_t i = 0; i < pick->rt.size(); ++i)
				{
					const std::size_t k = pick->rt[i];
					d.state.forced[k] = static_cast<int>(pick->loc);
					d.state.b_fix[k] = 0;
				}
				for (std::size_t i = 0; i < pick->rt.size() && !last_fix; ++i)
				{
					if (last.forced[pick->rt[i]] < 0) { last_fix = {pick->rt[i], pick->loc}; }
				}
				continue;
			}
			// Every configuration is integral; settle a fractional block flag.
			std::optional<std::size_t> block;
			best = 1e-6;
			for (std::size_t k = 0; k < K_; ++k)
			{
				const double b = lp_.value(b_col_[k]);
				if (d.state.b_fix[k] < 0 && b > best && b < 1 - 1e-6)
				{
					best = b;
					block = k;
				}
			}
			if (!block) { return; }
			d.state.b_fix[*block] = 1;
		}
	}

	/// Offers the master's solution when every column and block flag is
	/// integral. TS chassis are numbered in column order per location.
	void offer_integral_master()
	{
		auto integral = [](double v) { return v < 1e-6 || v > 1 - 1e-6; };
		for (int b : b_col_)
		{
			if (!integral(lp_.value(b))) { return; }
		}
		const auto& topo = inst_.topo();
		std::vector<WorkloadPlacement> pl(ws_.size());
		std::vector<int> next_chassis(L_, 0);
		for (const auto& c : columns_)
		{
			const double lam = lp_.value(c.lp_index);
			if (!integral(lam)) { return; }
			if (lam < 0.5) { continue; }
			const NodeId host = pm_.location(c.loc).node;
			const int chassis = ds_ ? -1 : next_chassis[c.loc]++;
			for (auto i : c.local)
			{
				pl[i].host = host;
				pl[i].server = chassis;
			}
			for (std::size_t j = 0; j < c.rt.size(); ++j)
			{
				const std::size_t i = pm_.real_time()[c.rt[j]];
				const auto& opt = pm_.options(c.rt[j], c.loc)[c.route[j]];
				pl[i].host = host;
				pl[i].server = chassis;
				pl[i].source_path = topo.paths_between(host, ws_[i].source_node)[opt.source_path];
				pl[i].dc_path = topo.paths_between(host, topo.datacenter())[opt.dc_path];
			}
		}
		if (ds_)
		{
			for (std::size_t l = 0; l < L_; ++l)
			{
				for (auto i : pm_.local_items(l)) { pl[i].host = pm_.location(l).node; }
			}
		}
		offer(assemble_solution(inst_, std::move(pl)));
	}

	/// Places real-time workloads where the LP puts most of their weight,
	/// falling back to the nearest location with room.
	void rounding_heuristic(const std::vector<double>& yv)
	{
		const auto& topo = inst_.topo();
		CapacityTracker cap(inst_, pm_);
		std::vector<WorkloadPlacement> pl(ws_.size());
		std::vector<int> host_loc(ws_.size(), -1);
		for (std::size_t l = 0; l < L_; ++l)
		{
			for (auto i : pm_.local_items(l))
			{
				pl[i].host = pm_.location(l).node;
				host_loc[i] = static_cast<int>(l);
			}
		}
		std::vector<std::size_t> order(K_);
		std::iota(order.begin(), order.end(), 0);
		auto weight = [&](std::size_t k) {
			double m = 0;
			for (std::size_t l = 0; l < L_; ++l) { m = std::max(m, yv[k * L_ + l]); }
			return m;
		};
		std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return weight(a) > weight(b); });
		for (auto k : order)
		{
			const auto& w = pm_.rt_workload(k);
			std::vector<std::size_t> locs(L_);
			std::iota(locs.begin(), locs.end(), 0);
			auto hops = [&](std::size_t l) { return topo.paths_between(pm_.location(l).node, w.source_node).front().size(); };
			std::stable_sort(locs.begin(), locs.end(), [&](std::size_t a, std::size_t b) {
				double ya = yv[k * L_ + a], yb = yv[k * L_ + b];
				if (ya != yb) { return ya > yb; }
				return hops(a) < hops(b);
			});
			for (auto l : locs)
			{
				auto chassis = cap.fits(l, w.demand);
				if (!chassis) { continue; }
				const RouteOption* pick = nullptr;
				for (const auto& o : pm_.options(k, l))
				{
					if (cap.route_fits(o))
					{
						pick = &o;
						break;
					}
				}
				if (!pick) { continue; }
				cap.place(l, *chassis, w.demand, *pick);
				std::size_t i = pm_.real_time()[k];
				const NodeId host = pm_.location(l).node;
				pl[i].host = host;
				pl[i].source_path = topo.paths_between(host, w.source_node)[pick->source_path];
				pl[i].dc_path = topo.paths_between(host, topo.datacenter())[pick->dc_path];
				host_loc[i] = static_cast<int>(l);
				break;
			}
		}
		if (!ds_ && !assign_min_servers(inst_, host_loc, pl)) { return; }
		offer(assemble_solution(inst_, std::move(pl)));
	}

	const ProblemInstance& inst_;
	ExactOptions opt_;
	PlacementModel pm_;
	const std::vector<Workload>& ws_;
	const bool ds_;
	std::size_t K_ = 0, L_ = 0;
	lp::Simplex lp_;
	std::vector<int> rt_row_, loc_row_, local_row_, count_row_, link_row_;
	std::vector<int> agg_row_;
	std::array<double, 3> root_agg_lo_{}, root_agg_hi_{};
	std::vector<int> b_col_, art_col_;
	std::vector<double> coef_;
	std::vector<double> root_count_lo_;
	std::vector<Column> columns_;
	std::unordered_map<std::string, std::size_t> keys_;
	const NodeState* state_ = nullptr;
	bool phase_one_ = false;
	bool timed_out_in_node_ = false;
	Knapsack knapsack_;
	std::optional<PlacementSolution> incumbent_;
	long nodes_ = 0;
	long next_id_ = 0;
	Clock::time_point start_;
};

} // namespace detail

inline PlacementSolution solve_branch_and_price(const ProblemInstance& inst, const ExactOptions& opt = {})
{
	detail::BranchAndPrice bp(inst, opt);
	return bp.run();
}

} // namespace fogplace

#endif // FOGPLACE_OPTIMIZER_BRANCH_PRICE_HPP
