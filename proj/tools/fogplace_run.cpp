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

// fogplace-run: runs a grid of placement scenarios and writes the report
// files described in fogplace/runner.hpp.
//
// Exit status: 0 when every solve is proven optimal, 1 when some solve hit a
// limit or an oracle check disagreed, 2 on bad input or I/O failure.

#include <fogplace/optimizer/oracle.hpp>
#include <fogplace/runner.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <numeric>

using namespace fogplace;

namespace {

std::vector<std::string> csv_list(const std::string& s)
{
	std::vector<std::string> out;
	for (auto part : text::split(s, ','))
	{
		auto t = text::trim(part);
		if (!t.empty()) { out.emplace_back(t); }
	}
	return out;
}

std::vector<double> csv_doubles(const std::string& s)
{
	std::vector<double> out;
	for (const auto& x : csv_list(s)) { out.push_back(text::parse_double(x)); }
	return out;
}

bool looks_numeric(const std::string& s)
{
	return !s.empty() && s.find_first_not_of("0123456789.,eE+- ") == std::string::npos;
}

// "a,l,c[,g]" sets the profile fractions (metro access, last mile, metro
// core, gateway); anything else names a regular-traffic file.
void apply_regular_traffic(const std::string& arg, ScenarioConfig& base)
{
	if (looks_numeric(arg))
	{
		auto f = csv_doubles(arg);
		if (f.size() != 3 && f.size() != 4) { throw InvalidParameterError("--regular-traffic needs 3 or 4 fractions"); }
		base.regular_per_link.reset();
		base.regular_profile.metro_access_fraction = f[0];
		base.regular_profile.last_mile_fraction = f[1];
		base.regular_profile.metro_core_fraction = f[2];
		base.regular_profile.gateway_fraction = f.size() == 4 ? f[3] : 0.0;
		return;
	}
	std::ifstream is(arg);
	if (!is) { throw IoError("cannot read " + arg); }
	base.regular_per_link = read_regular_traffic(is, build_paper_topology().link_count());
}

int oracle_check(const GridConfig& g)
{
	int mismatches = 0;
	for (const auto& c : expand_grid(g))
	{
		auto inst = build_downscaled_instance(c);
		auto sol = solve(inst, {c.backend, c.time_limit_seconds, c.node_limit});
		auto ref = brute_force_oracle(inst);
		const bool same = sol.optimal && sol.objective.weighted == ref.objective.weighted;
		std::cout << cell_key(c) << " seed " << c.seed << " solve " << text::format_double(sol.objective.weighted) << " oracle "
		          << text::format_double(ref.objective.weighted) << (same ? " ok" : " MISMATCH") << "\n";
		mismatches += same ? 0 : 1;
	}
	return mismatches;
}

std::filesystem::path instance_dir(const std::filesystem::path& out, const ScenarioConfig& c)
{
	return out / "instances" / (cell_key(c) + "-seed" + std::to_string(c.seed));
}

} // namespace

int main(int argc, char** argv)
{
	CLI::App app{"Run fog placement scenarios and write report files."};

	std::string config_file, modes = "ts,ds", scenarios = "s1,s2", capacities = "10,40", seeds, regular, split, out = "out", backend;
	std::size_t seed_count = 0, threads = 0;
	double time_limit = -1;
	long node_limit = -1;
	bool check = false, dump = false;
	std::string replay;

	app.add_option("--config", config_file, "JSON grid file; flags given on the command line override it");
	auto* mode_opt = app.add_option("--mode", modes, "ts, ds or a comma list");
	auto* sc_opt = app.add_option("--scenario", scenarios, "s1, s2 or a comma list");
	auto* cap_opt = app.add_option("--access-link-gbps", capacities, "metro access link capacities, comma list");
	app.add_option("--seeds", seeds, "comma list of seeds");
	app.add_option("--seed-count", seed_count, "use seeds 1..N");
	app.add_option("--out", out, "output directory")->capture_default_str();
	app.add_option("--time-limit", time_limit, "seconds per solve (default 600)");
	app.add_option("--node-limit", node_limit, "branch-and-price nodes per solve, 0 for none");
	app.add_option("--regular-traffic", regular, "regular-traffic file, or fractions access,last-mile,core[,gateway]");
	app.add_option("--traffic-split", split, "to-source,to-dc shares of real-time traffic");
	app.add_option("--backend", backend, "branch-and-price or compact");
	app.add_option("--threads", threads, "cells solved in parallel");
	app.add_flag("--oracle-check", check, "cross-check solve against brute force on down-scaled instances");
	app.add_flag("--dump-instance", dump, "write each instance under <out>/instances and exit");
	app.add_option("--replay", replay, "solve a dumped instance directory and print its record");

	CLI11_PARSE(app, argc, argv);

	try
	{
		GridConfig g;
		if (!config_file.empty())
		{
			std::ifstream is(config_file);
			if (!is) { throw IoError("cannot read " + config_file); }
			nlohmann::json j;
			try
			{
				is >> j;
			}
			catch (const nlohmann::json::exception& e)
			{
				throw ParseError(config_file + ": " + e.what());
			}
			grid_from_json(j, g);
		}
		if (config_file.empty() || mode_opt->count() > 0)
		{
			g.modes.clear();
			for (const auto& m : csv_list(modes)) { g.modes.push_back(parse_placement_mode(m)); }
		}
		if (config_file.empty() || sc_opt->count() > 0)
		{
			g.scenarios.clear();
			for (const auto& s : csv_list(scenarios)) { g.scenarios.push_back(parse_traffic_scenario(s)); }
		}
		if (config_file.empty() || cap_opt->count() > 0) { g.access_link_gbps = csv_doubles(capacities); }
		if (!seeds.empty())
		{
			g.seeds.clear();
			for (const auto& s : csv_list(seeds)) { g.seeds.push_back(static_cast<std::uint64_t>(text::parse_int(s))); }
		}
		else if (seed_count > 0)
		{
			g.seeds.resize(seed_count);
			std::iota(g.seeds.begin(), g.seeds.end(), std::uint64_t{1});
		}
		if (time_limit >= 0) { g.base.time_limit_seconds = time_limit; }
		if (node_limit >= 0) { g.base.node_limit = node_limit; }
		if (!regular.empty()) { apply_regular_traffic(regular, g.base); }
		if (!split.empty())
		{
			auto s = csv_doubles(split);
			if (s.size() != 2) { throw InvalidParameterError("--traffic-split needs two shares"); }
			g.base.traffic_split = {s[0], s[1]};
		}
		if (!backend.empty()) { g.base.backend = parse_backend(backend); }
		if (threads > 0) { g.threads = threads; }
		g.base.output_dir = out;

		if (!replay.empty())
		{
			auto inst = load_instance(replay);
			RunRecord r;
			r.config = g.base;
			r.config.mode = inst.mode;
			r.solution = solve(inst, {g.base.backend, g.base.time_limit_seconds, g.base.node_limit});
			r.metrics = compute_metrics(r.solution, inst);
			auto cols = record_columns();
			auto vals = record_values(r);
			for (std::size_t i = 5; i < cols.size(); ++i) { std::cout << cols[i] << "=" << vals[i] << "\n"; }
			return r.solution.optimal ? 0 : 1;
		}
		if (check)
		{
			int bad = oracle_check(g);
			std::cout << (bad == 0 ? "oracle check passed" : std::to_string(bad) + " oracle mismatches") << "\n";
			return bad == 0 ? 0 : 1;
		}
		if (dump)
		{
			for (const auto& c : expand_grid(g))
			{
				auto dir = instance_dir(out, c);
				dump_instance(build_instance(c), dir);
				std::cout << dir.string() << "\n";
			}
			return 0;
		}

		auto res = run_grid(g);
		write_grid_outputs(g, res, out);
		for (const auto& r : res.records)
		{
			std::cout << cell_key(r.config) << " seed " << r.config.seed << " blocked " << r.metrics.blocked_count << " NC " << r.metrics.active_components
			          << " NS " << r.metrics.active_servers << " tnpc " << text::format_fixed(r.metrics.power.tnpc, 3)
			          << (r.solution.optimal ? "" : " (not proven optimal, gap " + text::format_double(r.solution.gap) + ")") << "\n";
		}
		return res.all_optimal() ? 0 : 1;
	}
	catch (const std::exception& e)
	{
		std::cerr << "fogplace-run: " << e.what() << "\n";
		return 2;
	}
}
