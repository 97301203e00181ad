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
 * \file fogplace/milp/model.hpp
 *
 * \brief Solver-agnostic MILP description, LP-format export and a
 *  best-bound branch-and-bound over the bundled simplex.
 */

#ifndef FOGPLACE_MILP_MODEL_HPP
#define FOGPLACE_MILP_MODEL_HPP

#include <fogplace/common.hpp>
#include <fogplace/milp/simplex.hpp>

#include <chrono>
#include <cmath>
#include <map>
#include <optional>
#include <ostream>
#include <queue>
#include <string>
#include <vector>

namespace fogplace::milp {

enum class VarType
{
	Continuous,
	Binary,
	Integer
};

struct Variable
{
	std::string name;
	VarType type = VarType::Continuous;
	double lower = 0;
	double upper = kInf;
	double cost = 0;
};

struct Constraint
{
	std::string name;
	lp::Entries terms;  // (variable, coefficient)
	double lower = -kInf;
	double upper = kInf;
};

class Model
{
public:
	int add_variable(std::string name, VarType type, double lower, double upper, double cost = 0)
	{
		if (type == VarType::Binary)
		{
			lower = std::max(lower, 0.0);
			upper = std::min(upper, 1.0);
		}
		vars_.push_back({std::move(name), type, lower, upper, cost});
		return static_cast<int>(vars_.size()) - 1;
	}

	int add_constraint(std::string name, lp::Entries terms, double lower, double upper)
	{
		for (const auto& [v, a] : terms)
		{
			if (v < 0 || v >= static_cast<int>(vars_.size())) { throw InvalidParameterError("constraint references unknown variable"); }
		}
		rows_.push_back({std::move(name), std::move(terms), lower, upper});
		return static_cast<int>(rows_.size()) - 1;
	}

	void set_objective_constant(double c) { constant_ = c; }
	double objective_constant() const { return constant_; }

	const std::vector<Variable>& variables() const { return vars_; }
	const std::vector<Constraint>& constraints() const { return rows_; }
	Variable& variable(int j) { return vars_[j]; }

	std::size_t integer_count() const
	{
		std::size_t n = 0;
		for (const auto& v : vars_) { n += v.type != VarType::Continuous; }
		return n;
	}

	double evaluate(const std::vector<double>& x) const
	{
		double z = constant_;
		for (std::size_t j = 0; j < vars_.size(); ++j) { z += vars_[j].cost * x[j]; }
		return z;
	}

private:
	std::vector<Variable> vars_;
	std::vector<Constraint> rows_;
	double constant_ = 0;
};

/// CPLEX LP text, readable by common MILP solvers. The objective constant
/// is carried by a variable fixed at one.
inline void write_lp(std::ostream& os, const Model& m)
{
	auto num = [](double v) { return text::format_double(v); };
	auto term = [&](double a, const std::string& name, bool first) {
		std::string s;
		if (a < 0) { s = first ? "- " : " - "; }
		else if (!first) { s = " + "; }
		double mag = std::fabs(a);
		if (mag != 1) { s += num(mag) + " "; }
		return s + name;
	};
	const auto& vars = m.variables();
	os << "\\ fogplace placement model\n";
	os << "Minimize\n obj: ";
	bool first = true;
	for (const auto& v : vars)
	{
		if (v.cost == 0) { continue; }
		os << term(v.cost, v.name, first);
		first = false;
	}
	if (m.objective_constant() != 0)
	{
		os << term(m.objective_constant(), "const_one", first);
		first = false;
	}
	if (first) { os << "0 " << (vars.empty() ? "const_one" : vars.front().name); }
	os << "\nSubject To\n";
	for (const auto& c : m.constraints())
	{
		auto body = [&]() {
			std::string s;
			bool f = true;
			for (const auto& [j, a] : c.terms)
			{
				s += term(a, vars[j].name, f);
				f = false;
			}
			if (f) { s = "0 " + (vars.empty() ? std::string("const_one") : vars.front().name); }
			return s;
		};
		if (c.lower == c.upper) { os << ' ' << c.name << ": " << body() << " = " << num(c.upper) << "\n"; }
		else
		{
			if (std::isfinite(c.lower)) { os << ' ' << c.name << (std::isfinite(c.upper) ? "_lo" : "") << ": " << body() << " >= " << num(c.lower) << "\n"; }
			if (std::isfinite(c.upper)) { os << ' ' << c.name << (std::isfinite(c.lower) ? "_hi" : "") << ": " << body() << " <= " << num(c.upper) << "\n"; }
		}
	}
	os << "Bounds\n";
	for (const auto& v : vars)
	{
		if (v.type == VarType::Binary && v.lower == 0 && v.upper == 1) { continue; }
		if (v.lower == v.upper) { os << ' ' << v.name << " = " << num(v.lower) << "\n"; continue; }
		os << ' ' << (std::isfinite(v.lower) ? num(v.lower) : "-inf") << " <= " << v.name << " <= "
		   << (std::isfinite(v.upper) ? num(v.upper) : "+inf") << "\n";
	}
	if (m.objective_constant() != 0) { os << " const_one = 1\n"; }
	os << "Binaries\n";
	for (const auto& v : vars)
	{
		if (v.type == VarType::Binary && v.lower == 0 && v.upper == 1) { os << ' ' << v.name << "\n"; }
	}
	os << "Generals\n";
	for (const auto& v : vars)
	{
		if (v.type == VarType::Integer || (v.type == VarType::Binary && !(v.lower == 0 && v.upper == 1))) { os << ' ' << v.name << "\n"; }
	}
	os << "End\n";
}

enum class MipStatus
{
	Optimal,
	Infeasible,
	/// Limit reached with an incumbent.
	Feasible,
	/// Limit reached without an incumbent.
	NoSolution
};

struct MipOptions
{
	double time_limit_seconds = 600;
	long node_limit = 10'000'000;
	double integrality_tol = 1e-6;
	/// Nodes whose bound is within this of the incumbent are pruned.
	double absolute_gap = 1e-7;
	std::optional<std::vector<double>> incumbent;
};

struct MipResult
{
	MipStatus status = MipStatus::NoSolution;
	std::vector<double> x;
	double objective = kInf;
	double bound = -kInf;
	long nodes = 0;
};

/// Best-bound branch-and-bound. Branches on the lowest-index fractional
/// integer variable; open nodes are ordered by bound, then creation order.
/// Node bounds come from the Lagrangian of the node LP, so pruning does not
/// rely on the LP being solved to tolerance.
inline MipResult solve_mip(const Model& model, const MipOptions& opt = {})
{
	const auto start = std::chrono::steady_clock::now();
	auto elapsed = [&]() { return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count(); };
	const auto& vars = model.variables();
	const int n = static_cast<int>(vars.size());

	lp::SimplexOptions so;
	so.dual_tol = 1e-8;
	so.relative_dual_tol = 0;
	lp::Simplex lp(so);
	for (const auto& c : model.constraints()) { lp.add_row(c.lower, c.upper); }
	std::vector<lp::Entries> cols(n);
	for (std::size_t i = 0; i < model.constraints().size(); ++i)
	{
		for (const auto& [j, a] : model.constraints()[i].terms) { cols[j].emplace_back(static_cast<int>(i), a); }
	}
	for (int j = 0; j < n; ++j) { lp.add_column(vars[j].cost, vars[j].lower, vars[j].upper, cols[j]); }

	MipResult res;
	auto integral = [&](const std::vector<double>& x) {
		for (int j = 0; j < n; ++j)
		{
			if (vars[j].type != VarType::Continuous && std::fabs(x[j] - std::round(x[j])) > opt.integrality_tol) { return false; }
		}
		return true;
	};
	auto feasible = [&](const std::vector<double>& x) {
		for (int j = 0; j < n; ++j)
		{
			if (x[j] < vars[j].lower - 1e-7 || x[j] > vars[j].upper + 1e-7) { return false; }
		}
		for (const auto& c : model.constraints())
		{
			double s = 0;
			for (const auto& [j, a] : c.terms) { s += a * x[j]; }
			if (s < c.lower - 1e-7 * (1 + std::fabs(c.lower)) || s > c.upper + 1e-7 * (1 + std::fabs(c.upper))) { return false; }
		}
		return true;
	};
	if (opt.incumbent && opt.incumbent->size() == static_cast<std::size_t>(n) && integral(*opt.incumbent) && feasible(*opt.incumbent))
	{
		res.x = *opt.incumbent;
		res.objective = model.evaluate(res.x);
	}

	struct Node
	{
		double bound;
		long id;
		std::vector<std::pair<double, double>> box;
		lp::Basis basis;
	};
	auto cmp = [](const Node& a, const Node& b) { return a.bound != b.bound ? a.bound > b.bound : a.id > b.id; };
	std::priority_queue<Node, std::vector<Node>, decltype(cmp)> open(cmp);
	std::vector<std::pair<double, double>> root_box(n);
	for (int j = 0; j < n; ++j) { root_box[j] = {vars[j].lower, vars[j].upper}; }
	long next_id = 0;
	open.push(Node{-kInf, next_id++, root_box, lp.basis()});
	bool limit_hit = false;

	while (!open.empty())
	{
		if (elapsed() > opt.time_limit_seconds || res.nodes >= opt.node_limit)
		{
			limit_hit = true;
			break;
		}
		Node node = open.top();
		open.pop();
		if (node.bound + model.objective_constant() >= res.objective - opt.absolute_gap) { continue; }
		++res.nodes;
		for (int j = 0; j < n; ++j) { lp.set_column_bounds(j, node.box[j].first, node.box[j].second); }
		if (node.id > 0) { lp.set_basis(node.basis); }
		auto st = lp.solve();
		if (st == lp::Status::Infeasible) { continue; }
		if (st != lp::Status::Optimal) { throw Error("LP relaxation did not solve to optimality"); }
		double bound = std::max(node.bound, lp.lagrangian_bound(lp.clamped_duals()));
		if (bound + model.objective_constant() >= res.objective - opt.absolute_gap) { continue; }

		std::vector<double> x(n);
		for (int j = 0; j < n; ++j) { x[j] = lp.value(j); }
		int branch = -1;
		for (int j = 0; j < n; ++j)
		{
			if (vars[j].type != VarType::Continuous && std::fabs(x[j] - std::round(x[j])) > opt.integrality_tol)
			{
				branch = j;
				break;
			}
		}
		if (branch < 0)
		{
			for (int j = 0; j < n; ++j)
			{
				if (vars[j].type != VarType::Continuous) { x[j] = std::round(x[j]); }
			}
			if (feasible(x))
			{
				double z = model.evaluate(x);
				if (z < res.objective)
				{
					res.objective = z;
					res.x = x;
				}
				continue;
			}
			// Rounding broke a row: the LP point is only tolerance-feasible.
			// Fall through and branch on the variable furthest from integral.
			double worst = 0;
			for (int j = 0; j < n; ++j)
			{
				if (vars[j].type == VarType::Continuous) { continue; }
				double f = std::fabs(lp.value(j) - std::round(lp.value(j)));
				if (f > worst)
				{
					worst = f;
					branch = j;
				}
			}
			if (branch < 0 || worst < 1e-9) { continue; }
		}
		auto basis = lp.basis();
		double v = lp.value(branch);
		double fl = std::floor(v), ce = std::ceil(v);
		Node down{bound, next_id++, node.box, basis};
		down.box[branch].second = std::min(down.box[branch].second, fl);
		Node up{bound, next_id++, node.box, basis};
		up.box[branch].first = std::max(up.box[branch].first, ce);
		if (down.box[branch].first <= down.box[branch].second) { open.push(std::move(down)); }
		if (up.box[branch].first <= up.box[branch].second) { open.push(std::move(up)); }
	}

	double open_bound = kInf;
	if (limit_hit)
	{
		while (!open.empty())
		{
			open_bound = std::min(open_bound, open.top().bound + model.objective_constant());
			open.pop();
		}
	}
	if (res.x.empty())
	{
		res.status = limit_hit ? MipStatus::NoSolution : MipStatus::Infeasible;
		res.bound = limit_hit ? open_bound : kInf;
		return res;
	}
	res.status = limit_hit ? MipStatus::Feasible : MipStatus::Optimal;
	res.bound = limit_hit ? std::min(open_bound, res.objective) : res.objective;
	return res;
}

} // namespace fogplace::milp

#endif // FOGPLACE_MILP_MODEL_HPP
