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
 * \file fogplace/optimizer/knapsack.hpp
 *
 * \brief Exact three-dimensional 0-1 knapsack by depth-first branch and
 *  bound, used to price columns.
 */

#ifndef FOGPLACE_OPTIMIZER_KNAPSACK_HPP
#define FOGPLACE_OPTIMIZER_KNAPSACK_HPP

#include <fogplace/capacity.hpp>
#include <fogplace/workload.hpp>

#include <algorithm>
#include <numeric>
#include <vector>

namespace fogplace {

struct KnapsackItem
{
	Resources demand;
	double value = 0;
};

struct KnapsackResult
{
	double value = 0;
	/// Indices into the item list, ascending.
	std::vector<std::size_t> chosen;
	bool improved = false;
};

/// Maximizes total value within `room`. Only selections worth more than
/// `target` are reported (improved = false otherwise). Items should have
/// positive value; others are ignored.
class Knapsack
{
public:
	KnapsackResult solve(const std::vector<KnapsackItem>& items, const Resources& room, double target)
	{
		items_.clear();
		index_.clear();
		for (std::size_t i = 0; i < items.size(); ++i)
		{
			if (items[i].value > 0 && fits_within(items[i].demand, room))
			{
				items_.push_back(items[i]);
				index_.push_back(i);
			}
		}
		const std::size_t n = items_.size();
		std::vector<std::size_t> ord(n);
		std::iota(ord.begin(), ord.end(), 0);
		std::stable_sort(ord.begin(), ord.end(), [&](std::size_t a, std::size_t b) { return items_[a].value > items_[b].value; });
		std::vector<KnapsackItem> sorted;
		std::vector<std::size_t> sorted_index;
		for (auto i : ord)
		{
			sorted.push_back(items_[i]);
			sorted_index.push_back(index_[i]);
		}
		items_ = std::move(sorted);
		index_ = std::move(sorted_index);

		suffix_.assign(n + 1, 0);
		for (std::size_t i = n; i-- > 0;) { suffix_[i] = suffix_[i + 1] + items_[i].value; }
		for (std::size_t r = 0; r < kResourceCount; ++r)
		{
			by_ratio_[r].resize(n);
			std::iota(by_ratio_[r].begin(), by_ratio_[r].end(), 0);
			std::stable_sort(by_ratio_[r].begin(), by_ratio_[r].end(), [&](std::size_t a, std::size_t b) {
				// value / demand, descending; zero demand first.
				return items_[a].value * items_[b].demand[r] > items_[b].value * items_[a].demand[r];
			});
		}

		best_ = target;
		improved_ = false;
		take_.assign(n, false);
		best_take_.clear();
		dfs(0, 0, room);

		KnapsackResult res;
		res.improved = improved_;
		res.value = improved_ ? best_ : 0;
		if (improved_)
		{
			for (std::size_t i = 0; i < n; ++i)
			{
				if (best_take_[i]) { res.chosen.push_back(index_[i]); }
			}
			std::sort(res.chosen.begin(), res.chosen.end());
		}
		return res;
	}

private:
	double bound(std::size_t from, const Resources& room) const
	{
		double ub = suffix_[from];
		for (std::size_t r = 0; r < kResourceCount; ++r)
		{
			double left = room[r] + kCapacityEps, v = 0;
			for (auto i : by_ratio_[r])
			{
				if (i < from) { continue; }
				double d = items_[i].demand[r];
				if (d <= left)
				{
					left -= d;
					v += items_[i].value;
				}
				else
				{
					v += items_[i].value * (left / d);
					break;
				}
			}
			ub = std::min(ub, v);
		}
		return ub;
	}

	void dfs(std::size_t i, double value, const Resources& room)
	{
		if (value > best_)
		{
			best_ = value;
			improved_ = true;
			best_take_ = take_;
		}
		if (i == items_.size()) { return; }
		if (value + bound(i, room) <= best_) { return; }
		if (fits_within(items_[i].demand, room))
		{
			take_[i] = true;
			dfs(i + 1, value + items_[i].value, room - items_[i].demand);
			take_[i] = false;
		}
		dfs(i + 1, value, room);
	}

	std::vector<KnapsackItem> items_;
	std::vector<std::size_t> index_;
	std::vector<double> suffix_;
	std::array<std::vector<std::size_t>, kResourceCount> by_ratio_;
	std::vector<bool> take_, best_take_;
	double best_ = 0;
	bool improved_ = false;
};

} // namespace fogplace

#endif // FOGPLACE_OPTIMIZER_KNAPSACK_HPP
