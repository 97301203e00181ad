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
 * \file fogplace/milp/simplex.hpp
 *
 * \brief Bounded-variable revised primal simplex with a dense basis inverse.
 *
 * Problem form: minimize c'x subject to lo_i <= a_i x <= hi_i and
 * l_j <= x_j <= u_j. Every row gets a logical variable r_i = a_i x carrying
 * the row bounds, so the working system is A x - r = 0 with bounds only.
 *
 * Phase 1 minimizes the sum of bound violations of basic variables; phase 2
 * the true costs. Pricing is Dantzig's rule with a Harris two-pass ratio
 * test, switching to Bland's rule while the objective stalls. Arithmetic on
 * the basis inverse is carried in long double; the inverse is rebuilt from
 * scratch every `refactor_interval` pivots.
 *
 * Columns may be appended between solves (column generation) and bounds may
 * change (branching); the last basis is kept as a warm start.
 */

#ifndef FOGPLACE_MILP_SIMPLEX_HPP
#define FOGPLACE_MILP_SIMPLEX_HPP

#include <fogplace/common.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <utility>
#include <vector>

namespace fogplace::lp {

using Entries = std::vector<std::pair<int, double>>;

enum class Status
{
	Optimal,
	Infeasible,
	Unbounded,
	IterationLimit
};

enum class VarState : unsigned char
{
	Basic,
	AtLower,
	AtUpper,
	/// Nonbasic free variable held at zero.
	AtZero
};

struct Basis
{
	std::vector<VarState> state;
	std::vector<int> basic;
};

struct SimplexOptions
{
	double primal_tol = 1e-9;
	double dual_tol = 1e-9;
	/// Reduced costs above -(dual_tol + relative_dual_tol * |c|) count as
	/// optimal. Zero makes the test absolute, which models mixing very large
	/// and very small costs need.
	double relative_dual_tol = 1e-9;
	double pivot_tol = 1e-11;
	int refactor_interval = 64;
	long max_iterations = 1'000'000;
	int stall_limit = 60;
};

class Simplex
{
	using Real = long double;

public:
	explicit Simplex(SimplexOptions opt = {}) : opt_(opt) {}

	int rows() const { return static_cast<int>(row_lo_.size()); }
	/// Structural columns.
	int cols() const { return static_cast<int>(struct_index_.size()); }

	int add_row(double lo, double hi)
	{
		int i = rows();
		row_lo_.push_back(lo);
		row_hi_.push_back(hi);
		int v = new_var(0.0, lo, hi, Entries{{i, -1.0}});
		logical_index_.push_back(v);
		// The logical enters the basis in its own row.
		state_[v] = VarState::Basic;
		basic_.push_back(v);
		row_entries_.emplace_back();
		needs_refactor_ = true;
		return i;
	}

	int add_column(double cost, double lo, double hi, Entries entries)
	{
		int j = cols();
		for (const auto& [r, a] : entries)
		{
			if (r < 0 || r >= rows()) { throw InvalidParameterError("column entry row out of range"); }
			row_entries_[r].emplace_back(j, a);
		}
		int v = new_var(cost, lo, hi, std::move(entries));
		struct_index_.push_back(v);
		place_nonbasic(v);
		return j;
	}

	void set_column_bounds(int j, double lo, double hi)
	{
		int v = struct_index_[j];
		lo_[v] = lo;
		hi_[v] = hi;
		if (state_[v] != VarState::Basic) { place_nonbasic(v); }
		dirty_x_ = true;
	}

	void set_row_bounds(int i, double lo, double hi)
	{
		row_lo_[i] = lo;
		row_hi_[i] = hi;
		int v = logical_index_[i];
		lo_[v] = lo;
		hi_[v] = hi;
		if (state_[v] != VarState::Basic) { place_nonbasic(v); }
		dirty_x_ = true;
	}

	void set_cost(int j, double c) { cost_[struct_index_[j]] = c; }
	double cost(int j) const { return cost_[struct_index_[j]]; }
	double column_lower(int j) const { return lo_[struct_index_[j]]; }
	double column_upper(int j) const { return hi_[struct_index_[j]]; }
	double row_lower(int i) const { return row_lo_[i]; }
	double row_upper(int i) const { return row_hi_[i]; }
	const Entries& column(int j) const { return col_[struct_index_[j]]; }

	Status solve()
	{
		iterations_ = 0;
		if (needs_refactor_) { refactor(); }
		else if (dirty_x_) { compute_basic_values(); }
		status_ = run(true);
		// A stall means heavy degeneracy: solve with randomly widened bounds,
		// then restore them and finish from the resulting basis.
		for (int round = 0; stalled_; ++round)
		{
			auto lo = lo_, hi = hi_;
			std::mt19937_64 rng(0x5eed + static_cast<unsigned>(round));
			std::uniform_real_distribution<double> u(0.5, 1.0);
			const double scale = 1e-7 * std::pow(10.0, round);
			for (std::size_t v = 0; v < lo_.size(); ++v)
			{
				if (lo_[v] == hi_[v]) { continue; }
				if (std::isfinite(lo_[v])) { lo_[v] -= scale * u(rng) * (1 + std::fabs(lo_[v])); }
				if (std::isfinite(hi_[v])) { hi_[v] += scale * u(rng) * (1 + std::fabs(hi_[v])); }
			}
			reseat_nonbasic();
			status_ = run(false);
			lo_ = std::move(lo);
			hi_ = std::move(hi);
			reseat_nonbasic();
			if (status_ != Status::Optimal) { break; }
			status_ = run(round < 2);
		}
		return status_;
	}

	Status status() const { return status_; }
	long iterations() const { return iterations_; }

	double value(int j) const { return static_cast<double>(x_[struct_index_[j]]); }
	double row_activity(int i) const { return static_cast<double>(x_[logical_index_[i]]); }

	double objective() const
	{
		Real z = 0;
		for (int j = 0; j < cols(); ++j)
		{
			int v = struct_index_[j];
			z += static_cast<Real>(cost_[v]) * x_[v];
		}
		return static_cast<double>(z);
	}

	/// Row duals y with reduced cost c_j - y'a_j, valid after Optimal.
	std::vector<double> duals() const
	{
		auto y = compute_duals(false);
		return std::vector<double>(y.begin(), y.end());
	}

	double reduced_cost(int j, const std::vector<double>& y) const
	{
		int v = struct_index_[j];
		Real d = cost_[v];
		for (const auto& [r, a] : col_[v]) { d -= static_cast<Real>(y[r]) * a; }
		return static_cast<double>(d);
	}

	/// Duals with signs forced to match the row bounds (a row without a
	/// finite lower bound gets y <= 0, without an upper bound y >= 0), so that
	/// lagrangian_bound() of the result is finite.
	std::vector<double> clamped_duals() const
	{
		auto y = duals();
		for (int i = 0; i < rows(); ++i)
		{
			if (!std::isfinite(row_lo_[i]) && y[i] > 0) { y[i] = 0; }
			if (!std::isfinite(row_hi_[i]) && y[i] < 0) { y[i] = 0; }
		}
		return y;
	}

	/// min over the column and row boxes of c'x - y'(Ax - r). A lower bound on
	/// the LP optimum for every y; -inf when a box is unbounded in the
	/// improving direction. Reduced costs within roundoff of zero count as
	/// zero on unbounded columns.
	double lagrangian_bound(const std::vector<double>& y) const
	{
		Real z = 0;
		for (int j = 0; j < cols(); ++j)
		{
			int v = struct_index_[j];
			Real d = cost_[v];
			Real scale = std::fabs(static_cast<Real>(cost_[v]));
			for (const auto& [r, a] : col_[v])
			{
				d -= static_cast<Real>(y[r]) * a;
				scale = std::max(scale, std::fabs(static_cast<Real>(y[r]) * a));
			}
			if (std::fabs(d) <= 1e-13L * (1 + scale) && !(std::isfinite(lo_[v]) && std::isfinite(hi_[v]))) { continue; }
			if (d > 0)
			{
				if (!std::isfinite(lo_[v])) { return -kInf; }
				z += d * lo_[v];
			}
			else if (d < 0)
			{
				if (!std::isfinite(hi_[v])) { return -kInf; }
				z += d * hi_[v];
			}
		}
		for (int i = 0; i < rows(); ++i)
		{
			Real yi = y[i];
			if (yi > 0)
			{
				if (!std::isfinite(row_lo_[i])) { return -kInf; }
				z += yi * row_lo_[i];
			}
			else if (yi < 0)
			{
				if (!std::isfinite(row_hi_[i])) { return -kInf; }
				z += yi * row_hi_[i];
			}
		}
		return static_cast<double>(z);
	}

	Basis basis() const { return Basis{state_, basic_}; }

	void set_basis(const Basis& b)
	{
		if (b.basic.size() != basic_.size()) { throw InvalidParameterError("basis row count mismatch"); }
		// Variables added after the basis was taken stay nonbasic.
		for (std::size_t v = 0; v < state_.size(); ++v)
		{
			state_[v] = v < b.state.size() ? b.state[v] : VarState::AtLower;
			if (state_[v] != VarState::Basic) { place_nonbasic(static_cast<int>(v)); }
		}
		basic_ = b.basic;
		needs_refactor_ = true;
	}

private:
	int new_var(double cost, double lo, double hi, Entries entries)
	{
		int v = static_cast<int>(cost_.size());
		cost_.push_back(cost);
		lo_.push_back(lo);
		hi_.push_back(hi);
		col_.push_back(std::move(entries));
		state_.push_back(VarState::AtLower);
		x_.push_back(0);
		return v;
	}

	void reseat_nonbasic()
	{
		for (std::size_t v = 0; v < state_.size(); ++v)
		{
			if (state_[v] != VarState::Basic) { place_nonbasic(static_cast<int>(v)); }
		}
		refactor();
	}

	void place_nonbasic(int v)
	{
		if (std::isfinite(lo_[v]) && std::isfinite(hi_[v]))
		{
			// Keep an upper-bound choice if still meaningful, else go to lower.
			if (state_[v] == VarState::AtUpper && hi_[v] >= lo_[v]) { x_[v] = hi_[v]; }
			else
			{
				state_[v] = VarState::AtLower;
				x_[v] = lo_[v];
			}
		}
		else if (std::isfinite(lo_[v]))
		{
			state_[v] = VarState::AtLower;
			x_[v] = lo_[v];
		}
		else if (std::isfinite(hi_[v]))
		{
			state_[v] = VarState::AtUpper;
			x_[v] = hi_[v];
		}
		else
		{
			state_[v] = VarState::AtZero;
			x_[v] = 0;
		}
		dirty_x_ = true;
	}

	// Dense inverse of the basis matrix by Gauss-Jordan with partial pivoting.
	void refactor()
	{
		const int m = rows();
		for (;;)
		{
			std::vector<Real> a(static_cast<std::size_t>(m) * m, 0), inv(static_cast<std::size_t>(m) * m, 0);
			for (int k = 0; k < m; ++k)
			{
				for (const auto& [r, val] : col_[basic_[k]]) { a[static_cast<std::size_t>(r) * m + k] = val; }
				inv[static_cast<std::size_t>(k) * m + k] = 1;
			}
			int bad_col = -1;
			std::vector<int> perm_col(m);
			for (int k = 0; k < m; ++k) { perm_col[k] = k; }
			for (int k = 0; k < m && bad_col < 0; ++k)
			{
				int piv = -1;
				Real best = 0;
				for (int r = k; r < m; ++r)
				{
					Real v = std::fabs(a[static_cast<std::size_t>(r) * m + k]);
					if (v > best)
					{
						best = v;
						piv = r;
					}
				}
				if (piv < 0 || best < 1e-12L)
				{
					bad_col = k;
					break;
				}
				if (piv != k)
				{
					for (int c = 0; c < m; ++c)
					{
						std::swap(a[static_cast<std::size_t>(piv) * m + c], a[static_cast<std::size_t>(k) * m + c]);
						std::swap(inv[static_cast<std::size_t>(piv) * m + c], inv[static_cast<std::size_t>(k) * m + c]);
					}
				}
				Real d = a[static_cast<std::size_t>(k) * m + k];
				for (int c = 0; c < m; ++c)
				{
					a[static_cast<std::size_t>(k) * m + c] /= d;
					inv[static_cast<std::size_t>(k) * m + c] /= d;
				}
				for (int r = 0; r < m; ++r)
				{
					if (r == k) { continue; }
					Real f = a[static_cast<std::size_t>(r) * m + k];
					if (f == 0) { continue; }
					for (int c = 0; c < m; ++c)
					{
						a[static_cast<std::size_t>(r) * m + c] -= f * a[static_cast<std::size_t>(k) * m + c];
						inv[static_cast<std::size_t>(r) * m + c] -= f * inv[static_cast<std::size_t>(k) * m + c];
					}
				}
			}
			if (bad_col < 0)
			{
				binv_ = std::move(inv);
				break;
			}
			// Singular basis: swap the offending basic column for a logical
			// that is not basic yet, then retry.
			repair_basis(bad_col);
		}
		needs_refactor_ = false;
		since_refactor_ = 0;
		compute_basic_values();
	}

	void repair_basis(int position)
	{
		std::vector<bool> in_basis(state_.size(), false);
		for (int v : basic_) { in_basis[v] = true; }
		for (int i = 0; i < rows(); ++i)
		{
			int lv = logical_index_[i];
			if (!in_basis[lv])
			{
				int out = basic_[position];
				basic_[position] = lv;
				state_[lv] = VarState::Basic;
				state_[out] = VarState::AtLower;
				place_nonbasic(out);
				return;
			}
		}
		throw Error("simplex basis repair failed");
	}

	void compute_basic_values()
	{
		const int m = rows();
		std::vector<Real> rhs(m, 0);
		for (std::size_t v = 0; v < state_.size(); ++v)
		{
			if (state_[v] == VarState::Basic || x_[v] == 0) { continue; }
			for (const auto& [r, a] : col_[v]) { rhs[r] -= static_cast<Real>(a) * x_[v]; }
		}
		for (int i = 0; i < m; ++i)
		{
			Real s = 0;
			const Real* row = &binv_[static_cast<std::size_t>(i) * m];
			for (int k = 0; k < m; ++k) { s += row[k] * rhs[k]; }
			x_[basic_[i]] = s;
		}
		dirty_x_ = false;
	}

	Real infeasibility(int v) const
	{
		Real tol = opt_.primal_tol * (1 + std::fabs(x_[v]));
		if (x_[v] < lo_[v] - tol) { return lo_[v] - x_[v]; }
		if (x_[v] > hi_[v] + tol) { return x_[v] - hi_[v]; }
		return 0;
	}

	std::vector<Real> compute_duals(bool phase1) const
	{
		const int m = rows();
		std::vector<Real> cb(m, 0);
		for (int i = 0; i < m; ++i)
		{
			int v = basic_[i];
			if (phase1)
			{
				Real tol = opt_.primal_tol * (1 + std::fabs(x_[v]));
				cb[i] = x_[v] < lo_[v] - tol ? -1 : (x_[v] > hi_[v] + tol ? 1 : 0);
			}
			else { cb[i] = cost_[v]; }
		}
		std::vector<Real> y(m, 0);
		for (int i = 0; i < m; ++i)
		{
			if (cb[i] == 0) { continue; }
			const Real* row = &binv_[static_cast<std::size_t>(i) * m];
			for (int k = 0; k < m; ++k) { y[k] += cb[i] * row[k]; }
		}
		return y;
	}

	/// Primal simplex from the current basis. With `may_stall`, returns
	/// IterationLimit and sets stalled_ when progress stops; otherwise falls
	/// back to Bland's rule.
	Status run(bool may_stall)
	{
		stalled_ = false;
		const int m = rows();
		bool phase1 = true;
		int stall = 0;
		bool bland = false;
		Real last_obj = std::numeric_limits<Real>::infinity();
		std::vector<Real> alpha(m);
		for (;;)
		{
			if (iterations_ >= opt_.max_iterations) { return Status::IterationLimit; }
			if (since_refactor_ >= opt_.refactor_interval) { refactor(); }

			Real infeas = 0;
			for (int i = 0; i < m; ++i) { infeas += infeasibility(basic_[i]); }
			if (phase1 && infeas == 0) { phase1 = false; last_obj = std::numeric_limits<Real>::infinity(); stall = 0; bland = false; }
			Real obj = phase1 ? infeas : static_cast<Real>(objective());
			if (obj < last_obj - 1e-12L * (1 + std::fabs(obj)))
			{
				last_obj = obj;
				stall = 0;
			}
			else { ++stall; }
			if (stall > opt_.stall_limit)
			{
				if (may_stall)
				{
					stalled_ = true;
					return Status::IterationLimit;
				}
				// Stay with Bland's rule until this phase ends.
				bland = true;
			}

			auto y = compute_duals(phase1);

			// Pricing.
			int q = -1;
			int dir = 0;
			Real best = 0;
			for (std::size_t vv = 0; vv < state_.size(); ++vv)
			{
				int v = static_cast<int>(vv);
				VarState s = state_[v];
				if (s == VarState::Basic) { continue; }
				if (lo_[v] == hi_[v]) { continue; }
				Real c = phase1 ? 0 : static_cast<Real>(cost_[v]);
				Real d = c;
				for (const auto& [r, a] : col_[v]) { d -= y[r] * a; }
				Real tol = opt_.dual_tol + opt_.relative_dual_tol * std::fabs(c);
				int candidate_dir = 0;
				if ((s == VarState::AtLower || s == VarState::AtZero) && d < -tol) { candidate_dir = 1; }
				else if ((s == VarState::AtUpper || s == VarState::AtZero) && d > tol) { candidate_dir = -1; }
				if (!candidate_dir) { continue; }
				Real score = std::fabs(d);
				if (bland)
				{
					q = v;
					dir = candidate_dir;
					break;
				}
				if (score > best)
				{
					best = score;
					q = v;
					dir = candidate_dir;
				}
			}
			if (q < 0)
			{
				if (phase1) { return infeas > 0 ? Status::Infeasible : Status::Optimal; }
				return Status::Optimal;
			}

			// alpha = B^-1 a_q; basic values move by -dir * t * alpha.
			std::fill(alpha.begin(), alpha.end(), 0);
			for (const auto& [r, a] : col_[q])
			{
				for (int i = 0; i < m; ++i) { alpha[i] += binv_[static_cast<std::size_t>(i) * m + r] * a; }
			}

			// Harris pass 1: largest step with bounds relaxed by the tolerance.
			auto limit = [&](int i, bool relaxed, int& bound_side) -> Real {
				int v = basic_[i];
				Real delta = -dir * alpha[i];
				if (std::fabs(delta) <= opt_.pivot_tol) { return std::numeric_limits<Real>::infinity(); }
				Real tol = relaxed ? opt_.primal_tol * (1 + std::fabs(x_[v])) : 0;
				Real ptol = opt_.primal_tol * (1 + std::fabs(x_[v]));
				bool below = x_[v] < lo_[v] - ptol;
				bool above = x_[v] > hi_[v] + ptol;
				if (phase1 && below)
				{
					if (delta > 0) { bound_side = -1; return (lo_[v] - x_[v] + tol) / delta; }
					return std::numeric_limits<Real>::infinity();
				}
				if (phase1 && above)
				{
					if (delta < 0) { bound_side = 1; return (x_[v] - hi_[v] + tol) / -delta; }
					return std::numeric_limits<Real>::infinity();
				}
				if (delta < 0)
				{
					if (!std::isfinite(lo_[v])) { return std::numeric_limits<Real>::infinity(); }
					bound_side = -1;
					return std::max<Real>(0, x_[v] - lo_[v] + tol) / -delta;
				}
				if (!std::isfinite(hi_[v])) { return std::numeric_limits<Real>::infinity(); }
				bound_side = 1;
				return std::max<Real>(0, hi_[v] - x_[v] + tol) / delta;
			};

			Real max_step = std::numeric_limits<Real>::infinity();
			for (int i = 0; i < m; ++i)
			{
				int side = 0;
				max_step = std::min(max_step, limit(i, !bland, side));
			}
			Real flip = (std::isfinite(lo_[q]) && std::isfinite(hi_[q])) ? static_cast<Real>(hi_[q] - lo_[q]) : std::numeric_limits<Real>::infinity();

			int p = -1;
			int p_side = 0;
			Real step = 0;
			if (!std::isfinite(flip) && !std::isfinite(max_step))
			{
				if (phase1) { throw Error("simplex phase 1 unbounded ray"); }
				return Status::Unbounded;
			}
			if (flip <= max_step)
			{
				step = flip;
			}
			else
			{
				if (!std::isfinite(max_step))
				{
					if (phase1) { throw Error("simplex phase 1 unbounded ray"); }
					return Status::Unbounded;
				}
				// Pass 2: among rows whose exact ratio is within the relaxed
				// step, take the largest pivot magnitude (lowest index under
				// Bland).
				Real best_pivot = -1;
				for (int i = 0; i < m; ++i)
				{
					int side = 0;
					Real r = limit(i, false, side);
					if (r <= max_step)
					{
						Real mag = std::fabs(alpha[i]);
						if (bland)
						{
							if (p < 0 || r < step - 1e-15L || (r <= step + 1e-15L && basic_[i] < basic_[p]))
							{
								p = i;
								p_side = side;
								step = r;
							}
						}
						else if (mag > best_pivot)
						{
							best_pivot = mag;
							p = i;
							p_side = side;
							step = r;
						}
					}
				}
				if (p < 0) { return Status::Unbounded; }
			}

			// Apply the step.
			for (int i = 0; i < m; ++i) { x_[basic_[i]] -= dir * step * alpha[i]; }
			x_[q] += dir * step;
			++iterations_;

			if (p < 0)
			{
				state_[q] = dir > 0 ? VarState::AtUpper : VarState::AtLower;
				x_[q] = dir > 0 ? hi_[q] : lo_[q];
				continue;
			}

			int out = basic_[p];
			x_[out] = p_side < 0 ? lo_[out] : hi_[out];
			state_[out] = p_side < 0 ? VarState::AtLower : VarState::AtUpper;
			if (!std::isfinite(x_[out]))
			{
				state_[out] = VarState::AtZero;
				x_[out] = 0;
			}
			basic_[p] = q;
			state_[q] = VarState::Basic;

			// Rank-one update of the inverse.
			Real piv = alpha[p];
			Real* prow = &binv_[static_cast<std::size_t>(p) * m];
			for (int k = 0; k < m; ++k) { prow[k] /= piv; }
			for (int i = 0; i < m; ++i)
			{
				if (i == p || alpha[i] == 0) { continue; }
				Real f = alpha[i];
				Real* row = &binv_[static_cast<std::size_t>(i) * m];
				for (int k = 0; k < m; ++k) { row[k] -= f * prow[k]; }
			}
			++since_refactor_;
			if (since_refactor_ == 0 || iterations_ % 32 == 0) { compute_basic_values(); }
		}
	}

	SimplexOptions opt_;
	std::vector<double> cost_, lo_, hi_;
	std::vector<Entries> col_;
	std::vector<VarState> state_;
	std::vector<Real> x_;
	std::vector<double> row_lo_, row_hi_;
	std::vector<int> logical_index_;
	std::vector<int> struct_index_;
	std::vector<Entries> row_entries_;
	std::vector<int> basic_;
	std::vector<Real> binv_;
	bool needs_refactor_ = true;
	bool dirty_x_ = true;
	bool stalled_ = false;
	int since_refactor_ = 0;
	long iterations_ = 0;
	Status status_ = Status::IterationLimit;
};

} // namespace fogplace::lp

#endif // FOGPLACE_MILP_SIMPLEX_HPP
