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
 * \file fogplace/runner.hpp
 *
 * \brief Scenario grid orchestration, instance dumps and report files.
 *
 * Files written by write_grid_outputs() into the output directory:
 *
 *   records.csv     one row per (cell, seed); columns from record_columns()
 *   summary.csv     one row per cell with mean and sample stddev
 *   dominance.csv   ts/ds blocked counts paired by scenario, capacity, seed
 *   timings.csv     wall-clock solve seconds; the only nondeterministic file
 *   manifest.json   grid configuration, seeds and build versions
 *   plot/<name>.dat whitespace-separated columns, one row per cell
 *
 * Traffic columns are Gb/s of modeled load summed over a segment's links.
 */

#ifndef FOGPLACE_RUNNER_HPP
#define FOGPLACE_RUNNER_HPP

#include <fogplace/metrics.hpp>
#include <fogplace/optimizer.hpp>

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace fogplace {

inline constexpr const char* kVersion = "0.1.0";

enum class TrafficScenario
{
	S1,
	S2
};

inline std::string_view to_string(TrafficScenario s) { return s == TrafficScenario::S1 ? "s1" : "s2"; }

inline TrafficScenario parse_traffic_scenario(std::string_view s)
{
	if (s == "s1" || s == "S1") { return TrafficScenario::S1; }
	if (s == "s2" || s == "S2") { return TrafficScenario::S2; }
	throw InvalidParameterError("unknown traffic scenario: " + std::string(s));
}

/// Real-time uplink multiplier of a scenario.
inline double traffic_scale(TrafficScenario s) { return s == TrafficScenario::S1 ? 1.0 : 2.0; }

struct ScenarioConfig
{
	PlacementMode mode = PlacementMode::Traditional;
	TrafficScenario scenario = TrafficScenario::S1;
	double access_link_gbps = 10.0;
	std::uint64_t seed = 1;
	ObjectiveWeights weights;
	TrafficSplit traffic_split;
	RegularTrafficProfile regular_profile;
	/// Per-link background load; replaces regular_profile when set.
	std::optional<std::vector<double>> regular_per_link;
	bool regular_traffic_in_power = true;
	double time_limit_seconds = 600;
	/// Branch-and-price node limit, 0 for none; makes a limited run replayable.
	long node_limit = 0;
	Backend backend = Backend::BranchAndPrice;
	std::filesystem::path output_dir = "out";
};

/// "ts-s1-10g" style label of the grid cell a config belongs to.
inline std::string cell_key(const ScenarioConfig& c)
{
	return std::string(to_string(c.mode)) + "-" + std::string(to_string(c.scenario)) + "-" + text::format_double(c.access_link_gbps) + "g";
}

inline ProblemInstance build_instance(const ScenarioConfig& c)
{
	auto topo = std::make_shared<const Topology>(build_paper_topology(c.access_link_gbps));
	ProblemInstance inst;
	inst.topology = topo;
	inst.mode = c.mode;
	inst.workloads = apply_traffic_scale(generate_workloads(*topo, c.seed), traffic_scale(c.scenario));
	inst.locations = paper_compute_locations(*topo);
	inst.weights = c.weights;
	inst.traffic_split = c.traffic_split;
	inst.regular_traffic_in_power = c.regular_traffic_in_power;
	if (c.regular_per_link)
	{
		if (c.regular_per_link->size() != topo->link_count()) { throw InvalidParameterError("regular traffic file does not match the link count"); }
		inst.regular_traffic = *c.regular_per_link;
	}
	else { inst.regular_traffic = regular_traffic_from_profile(*topo, c.regular_profile); }
	return inst;
}

/// One CO with a BO, a CS and an ONU, two servers per location and two
/// workloads of each kind: small enough for brute_force_oracle().
inline ProblemInstance build_downscaled_instance(const ScenarioConfig& c)
{
	RingSpec spec;
	spec.co_count = 1;
	spec.onus_per_co = 1;
	spec.access_link_gbps = c.access_link_gbps;
	auto topo = std::make_shared<const Topology>(build_ring_topology(spec));
	ProblemInstance inst;
	inst.topology = topo;
	inst.mode = c.mode;
	WorkloadCounts counts;
	counts.co_local = 1;
	counts.bo_local = 1;
	counts.cs_local = 1;
	inst.workloads = apply_traffic_scale(generate_workloads(*topo, c.seed, counts), traffic_scale(c.scenario));
	for (auto loc : paper_compute_locations(*topo))
	{
		loc.server_count = 2;
		inst.locations.push_back(loc);
	}
	inst.weights = c.weights;
	inst.traffic_split = c.traffic_split;
	inst.regular_traffic_in_power = c.regular_traffic_in_power;
	inst.regular_traffic = regular_traffic_from_profile(*topo, c.regular_profile);
	return inst;
}

class CellError : public Error
{
public:
	CellError(const std::string& cell, std::uint64_t seed, const std::string& what)
		: Error(cell + " seed " + std::to_string(seed) + ": " + what), cell_(cell), seed_(seed)
	{
	}
	const std::string& cell() const { return cell_; }
	std::uint64_t seed() const { return seed_; }

private:
	std::string cell_;
	std::uint64_t seed_;
};

struct RunRecord
{
	ScenarioConfig config;
	PlacementSolution solution;
	MetricsReport metrics;
};

/// Builds, solves, validates and measures one (cell, seed).
inline RunRecord run_scenario(const ScenarioConfig& c)
{
	try
	{
		auto inst = build_instance(c);
		RunRecord r;
		r.config = c;
		r.solution = solve(inst, {c.backend, c.time_limit_seconds, c.node_limit});
		r.metrics = compute_metrics(r.solution, inst);
		return r;
	}
	catch (const std::exception& e)
	{
		throw CellError(cell_key(c), c.seed, e.what());
	}
}

struct GridConfig
{
	ScenarioConfig base;
	std::vector<PlacementMode> modes{PlacementMode::Traditional, PlacementMode::Disaggregated};
	std::vector<TrafficScenario> scenarios{TrafficScenario::S1, TrafficScenario::S2};
	std::vector<double> access_link_gbps{10.0, 40.0};
	std::vector<std::uint64_t> seeds{1};
	/// Worker threads; 1 runs the cells in order on the calling thread.
	std::size_t threads = 1;
};

inline std::vector<ScenarioConfig> expand_grid(const GridConfig& g)
{
	if (g.seeds.empty()) { throw InvalidParameterError("at least one seed is required"); }
	if (g.modes.empty() || g.scenarios.empty() || g.access_link_gbps.empty()) { throw InvalidParameterError("grid has an empty axis"); }
	std::vector<ScenarioConfig> out;
	for (auto m : g.modes)
	{
		for (auto s : g.scenarios)
		{
			for (auto a : g.access_link_gbps)
			{
				for (auto seed : g.seeds)
				{
					ScenarioConfig c = g.base;
					c.mode = m;
					c.scenario = s;
					c.access_link_gbps = a;
					c.seed = seed;
					out.push_back(c);
				}
			}
		}
	}
	auto key = [](const ScenarioConfig& c) { return std::make_tuple(cell_key(c), c.seed); };
	std::stable_sort(out.begin(), out.end(), [&](const auto& a, const auto& b) { return key(a) < key(b); });
	return out;
}

struct GridResult
{
	/// Sorted by cell key, then seed.
	std::vector<RunRecord> records;

	bool all_optimal() const
	{
		return std::all_of(records.begin(), records.end(), [](const RunRecord& r) { return r.solution.optimal; });
	}
};

inline GridResult run_grid(const GridConfig& g)
{
	auto jobs = expand_grid(g);
	std::vector<std::optional<RunRecord>> slots(jobs.size());
	std::vector<std::exception_ptr> errors(jobs.size());
	std::atomic<std::size_t> next{0};
	auto work = [&] {
		for (std::size_t i = next++; i < jobs.size(); i = next++)
		{
			try
			{
				slots[i] = run_scenario(jobs[i]);
			}
			catch (...)
			{
				errors[i] = std::current_exception();
			}
		}
	};
	const std::size_t n = std::max<std::size_t>(1, std::min(g.threads, jobs.size()));
	if (n == 1) { work(); }
	else
	{
		std::vector<std::thread> pool;
		for (std::size_t t = 0; t < n; ++t) { pool.emplace_back(work); }
		for (auto& t : pool) { t.join(); }
	}
	for (const auto& e : errors)
	{
		if (e) { std::rethrow_exception(e); }
	}
	GridResult res;
	for (auto& s : slots) { res.records.push_back(std::move(*s)); }
	return res;
}

// ---------------------------------------------------------------------------
// Instance dumps
//
//   <dir>/topology.txt         write_topology()
//   <dir>/workloads.txt        write_workloads()
//   <dir>/regular_traffic.txt  write_regular_traffic()
//   <dir>/scenario.txt         mode, weights, split and compute locations:
//
//     fogplace-scenario 1
//     mode ts|ds
//     weights <alpha1> <alpha2> <alpha3> <power-weight>
//     traffic_split <to-source> <to-dc>
//     regular_traffic_in_power 0|1
//     location <node-id> <servers> <cores> <ram-gb> <storage-gb>

inline void write_scenario(std::ostream& os, const ProblemInstance& inst)
{
	auto d = [](double v) { return text::format_double(v); };
	os << "fogplace-scenario 1\n";
	os << "mode " << to_string(inst.mode) << "\n";
	os << "weights " << d(inst.weights.alpha1) << ' ' << d(inst.weights.alpha2) << ' ' << d(inst.weights.alpha3) << ' '
	   << d(inst.weights.power_weight) << "\n";
	os << "traffic_split " << d(inst.traffic_split.to_source) << ' ' << d(inst.traffic_split.to_dc) << "\n";
	os << "regular_traffic_in_power " << (inst.regular_traffic_in_power ? 1 : 0) << "\n";
	for (const auto& l : inst.locations)
	{
		os << "location " << l.node.value << ' ' << l.server_count << ' ' << d(l.config.capacity[0]) << ' ' << d(l.config.capacity[1]) << ' '
		   << d(l.config.capacity[2]) << "\n";
	}
}

/// Reads scenario.txt into `inst`; topology, workloads and regular traffic
/// are left untouched.
inline void read_scenario(std::istream& is, ProblemInstance& inst)
{
	std::string line;
	if (!std::getline(is, line) || text::trim(line) != "fogplace-scenario 1") { throw ParseError("missing scenario header"); }
	inst.locations.clear();
	while (std::getline(is, line))
	{
		auto t = text::trim(line);
		if (t.empty() || t.front() == '#') { continue; }
		auto f = text::split(t, ' ');
		auto num = [&](std::size_t i) { return text::parse_double(f[i]); };
		if (f[0] == "mode" && f.size() == 2) { inst.mode = parse_placement_mode(f[1]); }
		else if (f[0] == "weights" && f.size() == 5) { inst.weights = {num(1), num(2), num(3), num(4)}; }
		else if (f[0] == "traffic_split" && f.size() == 3) { inst.traffic_split = {num(1), num(2)}; }
		else if (f[0] == "regular_traffic_in_power" && f.size() == 2) { inst.regular_traffic_in_power = f[1] == "1"; }
		else if (f[0] == "location" && f.size() == 6)
		{
			ComputeLocation l;
			l.node = NodeId(static_cast<std::size_t>(text::parse_int(f[1])));
			l.server_count = static_cast<std::size_t>(text::parse_int(f[2]));
			l.config.capacity = Resources(num(3), num(4), num(5));
			inst.locations.push_back(l);
		}
		else { throw ParseError("bad scenario line: " + std::string(t)); }
	}
}

namespace detail {

inline std::ofstream open_out(const std::filesystem::path& p)
{
	std::ofstream os(p, std::ios::binary);
	if (!os) { throw IoError("cannot write " + p.string()); }
	return os;
}

inline std::ifstream open_in(const std::filesystem::path& p)
{
	std::ifstream is(p, std::ios::binary);
	if (!is) { throw IoError("cannot read " + p.string()); }
	return is;
}

} // namespace detail

inline void dump_instance(const ProblemInstance& inst, const std::filesystem::path& dir)
{
	std::error_code ec;
	std::filesystem::create_directories(dir, ec);
	if (ec) { throw IoError("cannot create " + dir.string() + ": " + ec.message()); }
	{
		auto os = detail::open_out(dir / "topology.txt");
		write_topology(os, inst.topo());
	}
	{
		auto os = detail::open_out(dir / "workloads.txt");
		write_workloads(os, inst.workloads);
	}
	{
		auto os = detail::open_out(dir / "regular_traffic.txt");
		write_regular_traffic(os, inst.regular_traffic);
	}
	auto os = detail::open_out(dir / "scenario.txt");
	write_scenario(os, inst);
	if (!os) { throw IoError("write to " + dir.string() + " failed"); }
}

inline ProblemInstance load_instance(const std::filesystem::path& dir)
{
	ProblemInstance inst;
	{
		auto is = detail::open_in(dir / "topology.txt");
		inst.topology = std::make_shared<const Topology>(read_topology(is));
	}
	{
		auto is = detail::open_in(dir / "workloads.txt");
		inst.workloads = read_workloads(is);
	}
	{
		auto is = detail::open_in(dir / "regular_traffic.txt");
		inst.regular_traffic = read_regular_traffic(is, inst.topo().link_count());
	}
	auto is = detail::open_in(dir / "scenario.txt");
	read_scenario(is, inst);
	return inst;
}

// ---------------------------------------------------------------------------
// Report files

inline std::vector<std::string> record_columns()
{
	std::vector<std::string> cols{"cell", "mode", "scenario", "access_link_gbps", "seed", "objective", "optimal", "gap", "nodes"};
	for (auto& c : metrics_columns()) { cols.push_back(std::move(c)); }
	return cols;
}

inline std::vector<std::string> record_values(const RunRecord& r)
{
	const auto& c = r.config;
	std::vector<std::string> v{cell_key(c),
	                           std::string(to_string(c.mode)),
	                           std::string(to_string(c.scenario)),
	                           text::format_double(c.access_link_gbps),
	                           std::to_string(c.seed),
	                           text::format_double(r.solution.objective.weighted),
	                           r.solution.optimal ? "1" : "0",
	                           text::format_double(r.solution.gap),
	                           std::to_string(r.solution.nodes_explored)};
	for (auto& x : flatten_metrics(r.metrics)) { v.push_back(std::move(x)); }
	return v;
}

namespace detail {

inline void write_row(std::ostream& os, const std::vector<std::string>& cells)
{
	for (std::size_t i = 0; i < cells.size(); ++i) { os << (i ? "," : "") << cells[i]; }
	os << "\n";
}

} // namespace detail

struct CellSummary
{
	std::string cell;
	ScenarioConfig config;
	std::size_t runs = 0;
	std::size_t optimal_runs = 0;
	/// Mean and sample standard deviation per summarized column; NaN
	/// entries (an absent hop count) are skipped.
	std::map<std::string, std::pair<double, double>> stats;
};

/// Metrics columns averaged in summary.csv.
inline std::vector<std::string> summary_columns()
{
	auto cols = metrics_columns();
	cols.erase(std::remove(cols.begin(), cols.end(), "placed_real_time"), cols.end());
	return cols;
}

inline std::vector<CellSummary> summarize(const GridResult& res)
{
	const auto cols = metrics_columns();
	const auto keep = summary_columns();
	std::vector<CellSummary> out;
	std::map<std::string, std::vector<std::vector<double>>> samples;
	for (const auto& r : res.records)
	{
		auto key = cell_key(r.config);
		if (out.empty() || out.back().cell != key)
		{
			out.push_back({key, r.config, 0, 0, {}});
			samples[key].assign(cols.size(), {});
		}
		auto& s = out.back();
		++s.runs;
		s.optimal_runs += r.solution.optimal ? 1 : 0;
		auto vals = flatten_metrics(r.metrics);
		for (std::size_t i = 0; i < cols.size(); ++i)
		{
			if (!vals[i].empty()) { samples[key][i].push_back(text::parse_double(vals[i])); }
		}
	}
	for (auto& s : out)
	{
		for (std::size_t i = 0; i < cols.size(); ++i)
		{
			if (std::find(keep.begin(), keep.end(), cols[i]) == keep.end()) { continue; }
			const auto& xs = samples[s.cell][i];
			double mean = std::nan(""), sd = std::nan("");
			if (!xs.empty())
			{
				mean = 0;
				for (double x : xs) { mean += x; }
				mean /= static_cast<double>(xs.size());
				sd = 0;
				for (double x : xs) { sd += (x - mean) * (x - mean); }
				sd = xs.size() > 1 ? std::sqrt(sd / static_cast<double>(xs.size() - 1)) : 0.0;
			}
			s.stats[cols[i]] = {mean, sd};
		}
	}
	return out;
}

struct DominanceRow
{
	TrafficScenario scenario;
	double access_link_gbps;
	std::uint64_t seed;
	std::size_t ts_blocked;
	std::size_t ds_blocked;
	bool holds() const { return ds_blocked <= ts_blocked; }
};

/// Pairs each ts record with the ds record of the same scenario, capacity
/// and seed.
inline std::vector<DominanceRow> dominance_rows(const GridResult& res)
{
	std::vector<DominanceRow> out;
	for (const auto& t : res.records)
	{
		if (t.config.mode != PlacementMode::Traditional) { continue; }
		for (const auto& d : res.records)
		{
			if (d.config.mode == PlacementMode::Disaggregated && d.config.scenario == t.config.scenario
			    && d.config.access_link_gbps == t.config.access_link_gbps && d.config.seed == t.config.seed)
			{
				out.push_back({t.config.scenario, t.config.access_link_gbps, t.config.seed, t.metrics.blocked_count, d.metrics.blocked_count});
			}
		}
	}
	return out;
}

inline nlohmann::json scenario_to_json(const ScenarioConfig& c)
{
	nlohmann::json j;
	j["mode"] = to_string(c.mode);
	j["scenario"] = to_string(c.scenario);
	j["access_link_gbps"] = c.access_link_gbps;
	j["seed"] = c.seed;
	j["weights"] = {c.weights.alpha1, c.weights.alpha2, c.weights.alpha3, c.weights.power_weight};
	j["traffic_split"] = {c.traffic_split.to_source, c.traffic_split.to_dc};
	if (c.regular_per_link) { j["regular_traffic"] = *c.regular_per_link; }
	else
	{
		j["regular_traffic"] = {{"metro_access", c.regular_profile.metro_access_fraction},
		                        {"last_mile", c.regular_profile.last_mile_fraction},
		                        {"metro_core", c.regular_profile.metro_core_fraction},
		                        {"gateway", c.regular_profile.gateway_fraction}};
	}
	j["regular_traffic_in_power"] = c.regular_traffic_in_power;
	j["time_limit_seconds"] = c.time_limit_seconds;
	j["node_limit"] = c.node_limit;
	j["backend"] = c.backend == Backend::Compact ? "compact" : "branch-and-price";
	return j;
}

/// Applies the keys present in `j` on top of `c`. Accepts the shape produced
/// by scenario_to_json().
inline void scenario_from_json(const nlohmann::json& j, ScenarioConfig& c)
{
	try
	{
		if (j.contains("mode")) { c.mode = parse_placement_mode(j.at("mode").get<std::string>()); }
		if (j.contains("scenario")) { c.scenario = parse_traffic_scenario(j.at("scenario").get<std::string>()); }
		if (j.contains("access_link_gbps")) { c.access_link_gbps = j.at("access_link_gbps").get<double>(); }
		if (j.contains("seed")) { c.seed = j.at("seed").get<std::uint64_t>(); }
		if (j.contains("weights"))
		{
			auto w = j.at("weights").get<std::vector<double>>();
			if (w.size() != 3 && w.size() != 4) { throw InvalidParameterError("weights need 3 or 4 entries"); }
			c.weights = {w[0], w[1], w[2], w.size() == 4 ? w[3] : 1.0};
		}
		if (j.contains("traffic_split"))
		{
			auto s = j.at("traffic_split").get<std::vector<double>>();
			if (s.size() != 2) { throw InvalidParameterError("traffic_split needs 2 entries"); }
			c.traffic_split = {s[0], s[1]};
		}
		if (j.contains("regular_traffic"))
		{
			const auto& r = j.at("regular_traffic");
			if (r.is_array()) { c.regular_per_link = r.get<std::vector<double>>(); }
			else
			{
				c.regular_per_link.reset();
				c.regular_profile.metro_access_fraction = r.value("metro_access", c.regular_profile.metro_access_fraction);
				c.regular_profile.last_mile_fraction = r.value("last_mile", c.regular_profile.last_mile_fraction);
				c.regular_profile.metro_core_fraction = r.value("metro_core", c.regular_profile.metro_core_fraction);
				c.regular_profile.gateway_fraction = r.value("gateway", c.regular_profile.gateway_fraction);
			}
		}
		if (j.contains("regular_traffic_in_power")) { c.regular_traffic_in_power = j.at("regular_traffic_in_power").get<bool>(); }
		if (j.contains("time_limit_seconds")) { c.time_limit_seconds = j.at("time_limit_seconds").get<double>(); }
		if (j.contains("node_limit")) { c.node_limit = j.at("node_limit").get<long>(); }
		if (j.contains("backend")) { c.backend = parse_backend(j.at("backend").get<std::string>()); }
	}
	catch (const nlohmann::json::exception& e)
	{
		throw ParseError(std::string("bad config: ") + e.what());
	}
}

/// Reads a grid file: scenario keys at top level plus optional "modes",
/// "scenarios", "access_link_gbps" (array form), "seeds" and "threads".
inline void grid_from_json(const nlohmann::json& j, GridConfig& g)
{
	try
	{
		auto base = j;
		for (const char* k : {"modes", "scenarios", "seeds", "threads"}) { base.erase(k); }
		if (j.contains("access_link_gbps") && j.at("access_link_gbps").is_array())
		{
			base.erase("access_link_gbps");
			g.access_link_gbps = j.at("access_link_gbps").get<std::vector<double>>();
		}
		scenario_from_json(base, g.base);
		if (j.contains("modes"))
		{
			g.modes.clear();
			for (const auto& m : j.at("modes")) { g.modes.push_back(parse_placement_mode(m.get<std::string>())); }
		}
		if (j.contains("scenarios"))
		{
			g.scenarios.clear();
			for (const auto& s : j.at("scenarios")) { g.scenarios.push_back(parse_traffic_scenario(s.get<std::string>())); }
		}
		if (j.contains("seeds")) { g.seeds = j.at("seeds").get<std::vector<std::uint64_t>>(); }
		if (j.contains("threads")) { g.threads = j.at("threads").get<std::size_t>(); }
	}
	catch (const nlohmann::json::exception& e)
	{
		throw ParseError(std::string("bad config: ") + e.what());
	}
}

inline nlohmann::json grid_manifest(const GridConfig& g, const GridResult& res)
{
	nlohmann::json j;
	j["tool"] = "fogplace";
	j["version"] = kVersion;
	j["compiler"] = __VERSION__;
	j["cplusplus"] = __cplusplus;
	j["base"] = scenario_to_json(g.base);
	j["base"].erase("mode");
	j["base"].erase("scenario");
	j["base"].erase("access_link_gbps");
	j["base"].erase("seed");
	for (auto m : g.modes) { j["modes"].push_back(to_string(m)); }
	for (auto s : g.scenarios) { j["scenarios"].push_back(to_string(s)); }
	j["access_link_gbps"] = g.access_link_gbps;
	j["seeds"] = g.seeds;
	j["runs"] = res.records.size();
	j["all_optimal"] = res.all_optimal();
	j["files"] = {"records.csv", "summary.csv", "dominance.csv", "timings.csv", "plot/blocked.dat", "plot/resources.dat", "plot/traffic.dat",
	              "plot/power.dat", "plot/hops.dat"};
	return j;
}

/// Writes every report file listed at the top of this header.
inline void write_grid_outputs(const GridConfig& g, const GridResult& res, const std::filesystem::path& dir)
{
	std::error_code ec;
	std::filesystem::create_directories(dir / "plot", ec);
	if (ec) { throw IoError("cannot create " + dir.string() + ": " + ec.message()); }
	auto num = [](double v) { return std::isnan(v) ? std::string("nan") : text::format_double(v); };

	{
		auto os = detail::open_out(dir / "records.csv");
		detail::write_row(os, record_columns());
		for (const auto& r : res.records) { detail::write_row(os, record_values(r)); }
	}
	{
		auto os = detail::open_out(dir / "timings.csv");
		os << "cell,seed,solve_seconds\n";
		for (const auto& r : res.records) { os << cell_key(r.config) << ',' << r.config.seed << ',' << text::format_fixed(r.solution.solve_seconds, 3) << "\n"; }
	}
	const auto cells = summarize(res);
	{
		auto os = detail::open_out(dir / "summary.csv");
		std::vector<std::string> head{"cell", "mode", "scenario", "access_link_gbps", "runs", "optimal_runs"};
		for (const auto& c : summary_columns())
		{
			head.push_back(c + "_mean");
			head.push_back(c + "_stddev");
		}
		detail::write_row(os, head);
		for (const auto& s : cells)
		{
			std::vector<std::string> row{s.cell,
			                             std::string(to_string(s.config.mode)),
			                             std::string(to_string(s.config.scenario)),
			                             text::format_double(s.config.access_link_gbps),
			                             std::to_string(s.runs),
			                             std::to_string(s.optimal_runs)};
			for (const auto& c : summary_columns())
			{
				row.push_back(num(s.stats.at(c).first));
				row.push_back(num(s.stats.at(c).second));
			}
			detail::write_row(os, row);
		}
	}
	{
		auto os = detail::open_out(dir / "dominance.csv");
		os << "scenario,access_link_gbps,seed,ts_blocked,ds_blocked,holds\n";
		for (const auto& d : dominance_rows(res))
		{
			os << to_string(d.scenario) << ',' << text::format_double(d.access_link_gbps) << ',' << d.seed << ',' << d.ts_blocked << ','
			   << d.ds_blocked << ',' << (d.holds() ? 1 : 0) << "\n";
		}
	}

	auto plot = [&](const std::string& name, const std::vector<std::string>& cols) {
		auto os = detail::open_out(dir / "plot" / name);
		os << "# cell";
		for (const auto& c : cols) { os << ' ' << c; }
		os << "\n";
		for (const auto& s : cells)
		{
			os << s.cell;
			for (const auto& c : cols) { os << ' ' << num(s.stats.at(c).first); }
			os << "\n";
		}
	};
	plot("blocked.dat", {"blocked", "blocked_access_tail", "blocked_uplink", "blocked_remote_capacity"});
	plot("resources.dat", {"active_servers", "idle_servers", "active_components", "idle_components", "idle_share_bo", "idle_share_cs"});
	plot("traffic.dat", {"traffic_metro_core_gbps", "traffic_metro_access_gbps", "traffic_last_mile_gbps", "traffic_metro_core_with_regular_gbps",
	                     "traffic_metro_access_with_regular_gbps", "traffic_last_mile_with_regular_gbps"});
	plot("power.dat", {"power_static_w", "power_load_w", "power_metro_core_w", "power_metro_access_w", "power_last_mile_w", "tnpc_w"});
	plot("hops.dat", {"avg_hop_count"});

	auto os = detail::open_out(dir / "manifest.json");
	os << grid_manifest(g, res).dump(2) << "\n";
}

} // namespace fogplace

#endif // FOGPLACE_RUNNER_HPP
