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

// Acceptance run over the paper-scale grid. Prints one PASS/FAIL line per
// criterion and exits nonzero if any criterion fails.
//
//   acceptance [seeds-per-cell [timed-seeds]]
//
// Seeds 1..timed-seeds (default 5) of every cell are solved with the full
// 600 s limit and feed the runtime criterion. The remaining seeds up to
// seeds-per-cell (default 20) run under a node limit so the whole grid
// stays reproducible on any machine.

#include <fogplace/optimizer/oracle.hpp>
#include <fogplace/runner.hpp>

#include "tiny_instances.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

using namespace fogplace;
namespace fs = std::filesystem;

namespace {

constexpr double kSolveLimit = 600;
constexpr double kGridLimit = 7200;
constexpr long kNodeLimit = 300;

struct Verdict
{
	int id;
	bool pass;
	std::string detail;
};

std::vector<Verdict> verdicts;

void report(int id, bool pass, const std::string& detail)
{
	verdicts.push_back({id, pass, detail});
	std::printf("criterion %2d: %s  %s\n", id, pass ? "PASS" : "FAIL", detail.c_str());
	std::fflush(stdout);
}

std::string fmt(double v, int digits = 3)
{
	char buf[64];
	std::snprintf(buf, sizeof buf, "%.*f", digits, v);
	return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0)
{
	return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string slurp(const fs::path& p)
{
	std::ifstream is(p, std::ios::binary);
	std::stringstream ss;
	ss << is.rdbuf();
	return ss.str();
}

struct Key
{
	PlacementMode mode;
	TrafficScenario scenario;
	double access;
	std::uint64_t seed;
	auto operator<=>(const Key&) const = default;
};

Key key_of(const ScenarioConfig& c) { return {c.mode, c.scenario, c.access_link_gbps, c.seed}; }

class Grid
{
public:
	std::map<Key, RunRecord> runs;
	std::uint64_t seeds = 0;

	const RunRecord& at(PlacementMode m, TrafficScenario s, double a, std::uint64_t seed) const { return runs.at({m, s, a, seed}); }
};

void check_oracle()
{
	auto t0 = std::chrono::steady_clock::now();
	int cases = 0, equal = 0, blocked = 0;
	for (std::uint64_t seed = 1; seed <= 30; ++seed)
	{
		for (auto mode : {PlacementMode::Traditional, PlacementMode::Disaggregated})
		{
			auto inst = fogplace::testing::tiny_instance(seed, mode);
			auto sol = solve(inst, {Backend::BranchAndPrice, 60});
			auto ref = brute_force_oracle(inst);
			++cases;
			blocked += ref.objective.blocked > 0;
			const auto& a = sol.objective;
			const auto& b = ref.objective;
			bool same = sol.optimal && a.blocked == b.blocked && a.active_components == b.active_components && a.active_servers == b.active_servers
			            && std::abs(a.tnpc - b.tnpc) <= 1e-9 * b.tnpc;
			equal += same;
			if (!same) { std::printf("  oracle mismatch: seed %llu mode %s\n", static_cast<unsigned long long>(seed), std::string(to_string(mode)).c_str()); }
		}
	}
	double t = seconds_since(t0);
	report(1, cases >= 50 && equal == cases && t < 60,
	       std::to_string(equal) + "/" + std::to_string(cases) + " tiny instances equal the oracle (" + std::to_string(blocked) + " with blocking), "
	           + fmt(t, 1) + " s");
}

Grid run_paper_grid(std::uint64_t seeds, std::uint64_t timed)
{
	Grid g;
	g.seeds = seeds;
	GridConfig cfg;
	cfg.seeds.clear();
	for (std::uint64_t s = 1; s <= seeds; ++s) { cfg.seeds.push_back(s); }
	cfg.base.time_limit_seconds = kSolveLimit;
	auto jobs = expand_grid(cfg);
	std::size_t done = 0;
	for (auto c : jobs)
	{
		if (c.seed > timed) { c.node_limit = kNodeLimit; }
		auto r = run_scenario(c);
		++done;
		std::fprintf(stderr, "[%zu/%zu] %s seed %llu: blocked %zu NC %zu NS %zu tnpc %.3f %s %.1f s\n", done, jobs.size(), cell_key(c).c_str(),
		             static_cast<unsigned long long>(c.seed), r.metrics.blocked_count, r.metrics.active_components, r.metrics.active_servers,
		             r.metrics.power.tnpc, r.solution.optimal ? "optimal" : "limit", r.solution.solve_seconds);
		g.runs.emplace(key_of(c), std::move(r));
	}
	return g;
}

const std::vector<double> kCaps{10.0, 40.0};
const std::vector<TrafficScenario> kScenarios{TrafficScenario::S1, TrafficScenario::S2};
constexpr auto TS = PlacementMode::Traditional;
constexpr auto DS = PlacementMode::Disaggregated;

std::string share(std::size_t k, std::size_t n) { return std::to_string(k) + "/" + std::to_string(n); }

bool at_least_80(std::size_t k, std::size_t n) { return n > 0 && 5 * k >= 4 * n; }

void check_dominance(const Grid& g)
{
	std::size_t ok = 0, n = 0;
	for (auto s : kScenarios)
	{
		for (auto a : kCaps)
		{
			for (std::uint64_t seed = 1; seed <= g.seeds; ++seed)
			{
				++n;
				ok += g.at(DS, s, a, seed).metrics.blocked_count <= g.at(TS, s, a, seed).metrics.blocked_count;
			}
		}
	}
	report(2, g.seeds >= 20 && ok == n, share(ok, n) + " paired runs with blocked(ds) <= blocked(ts), " + std::to_string(g.seeds) + " seeds per cell");
}

void check_monotonicity(const Grid& g)
{
	std::size_t ok = 0, n = 0;
	for (auto m : {TS, DS})
	{
		for (auto s : kScenarios)
		{
			for (std::uint64_t seed = 1; seed <= g.seeds; ++seed)
			{
				++n;
				ok += g.at(m, s, 40, seed).metrics.blocked_count <= g.at(m, s, 10, seed).metrics.blocked_count;
			}
		}
	}
	report(3, ok == n, share(ok, n) + " runs with blocked(40G) <= blocked(10G)");
}

void check_blocking_trends(const Grid& g)
{
	auto b = [&](PlacementMode m, TrafficScenario s, double a, std::uint64_t seed) { return g.at(m, s, a, seed).metrics.blocked_count; };
	std::size_t a_ok = 0, b_ok = 0, c_ok = 0;
	for (std::uint64_t seed = 1; seed <= g.seeds; ++seed)
	{
		a_ok += b(TS, TrafficScenario::S1, 10, seed) > 0 && b(DS, TrafficScenario::S1, 10, seed) == 0;
		b_ok += b(TS, TrafficScenario::S2, 10, seed) > b(DS, TrafficScenario::S2, 10, seed) && b(DS, TrafficScenario::S2, 10, seed) > 0;
		c_ok += b(TS, TrafficScenario::S2, 40, seed) <= 1 && b(DS, TrafficScenario::S2, 40, seed) <= 1;
	}
	const std::size_t n = g.seeds;
	std::string ref = "seed 1: s1/10G ts " + std::to_string(b(TS, TrafficScenario::S1, 10, 1)) + " ds " + std::to_string(b(DS, TrafficScenario::S1, 10, 1))
	                  + "; s2/10G ts " + std::to_string(b(TS, TrafficScenario::S2, 10, 1)) + " ds " + std::to_string(b(DS, TrafficScenario::S2, 10, 1))
	                  + "; s2/40G ts " + std::to_string(b(TS, TrafficScenario::S2, 40, 1)) + " ds " + std::to_string(b(DS, TrafficScenario::S2, 40, 1));
	report(4, g.seeds >= 20 && at_least_80(a_ok, n) && at_least_80(b_ok, n) && at_least_80(c_ok, n),
	       "(a) " + share(a_ok, n) + " (b) " + share(b_ok, n) + " (c) " + share(c_ok, n) + "; " + ref);
}

void check_ts_identity(const Grid& g)
{
	std::size_t ok = 0, n = 0;
	for (const auto& [k, r] : g.runs)
	{
		if (k.mode != TS) { continue; }
		++n;
		ok += r.metrics.active_components == 3 * r.metrics.active_servers && r.solution.objective.active_components == 3 * r.solution.objective.active_servers;
	}
	report(5, ok == n, share(ok, n) + " ts runs with NC == 3 NS");
}

void check_resource_reduction(const Grid& g)
{
	std::size_t ok = 0;
	double nc_sum = 0, ns_sum = 0;
	for (std::uint64_t seed = 1; seed <= g.seeds; ++seed)
	{
		const auto& t = g.at(TS, TrafficScenario::S1, 10, seed).metrics;
		const auto& d = g.at(DS, TrafficScenario::S1, 10, seed).metrics;
		double nc = 1.0 - static_cast<double>(d.active_components) / static_cast<double>(t.active_components);
		double ns = 1.0 - static_cast<double>(d.active_servers) / static_cast<double>(t.active_servers);
		nc_sum += nc;
		ns_sum += ns;
		ok += nc >= 0.20 && nc <= 0.45 && ns >= 0.05 && ns <= 0.25;
	}
	const double n = static_cast<double>(g.seeds);
	report(6, at_least_80(ok, g.seeds),
	       share(ok, g.seeds) + " s1/10G seeds in range; mean reduction NC " + fmt(100 * nc_sum / n, 1) + "% NS " + fmt(100 * ns_sum / n, 1) + "%");
}

void check_hops(const Grid& g)
{
	std::size_t ok = 0, n = 0;
	double ts_sum = 0, ds_sum = 0;
	for (auto s : kScenarios)
	{
		for (auto a : kCaps)
		{
			for (std::uint64_t seed = 1; seed <= g.seeds; ++seed)
			{
				const auto& t = g.at(TS, s, a, seed).metrics.avg_hop_count;
				const auto& d = g.at(DS, s, a, seed).metrics.avg_hop_count;
				++n;
				if (t && d)
				{
					ok += *d >= *t;
					if (s == TrafficScenario::S1 && a == 10)
					{
						ts_sum += *t;
						ds_sum += *d;
					}
				}
			}
		}
	}
	const double k = static_cast<double>(g.seeds);
	report(7, at_least_80(ok, n), share(ok, n) + " pairs with hops(ds) >= hops(ts); s1/10G mean ts " + fmt(ts_sum / k, 2) + " ds " + fmt(ds_sum / k, 2));
}

void check_power_arithmetic()
{
	auto topo = build_paper_topology();
	std::vector<double> flow(topo.link_count(), 0.0);
	double idle = evaluate_power(topo, flow).tnpc;
	// ONU tail to its CO, then the CO to BO access link.
	auto onu = *topo.find_node("onu0.0");
	auto bo = *topo.find_node("bo0");
	const auto& path = topo.paths_between(onu, bo).at(0);
	for (auto e : path) { flow[e.index()] = 10.0; }
	double one = evaluate_power(topo, flow).tnpc;

	// The same figure through the whole pipeline: a solved instance with no
	// workloads and no background load.
	ProblemInstance inst;
	inst.topology = std::make_shared<const Topology>(topo);
	inst.locations = paper_compute_locations(topo);
	inst.regular_traffic.assign(topo.link_count(), 0.0);
	double solved = solve(inst).objective.tnpc;

	const double want = 810 + 19.93;
	report(8, path.size() == 2 && idle == 810.0 && solved == 810.0 && std::abs(one - want) <= 1e-9 * want,
	       "zero traffic " + fmt(idle, 6) + " W, solved empty instance " + fmt(solved, 6) + " W, single 10 Gb/s flow " + fmt(one, 6) + " W");
}

void check_marginal_power(const Grid& g)
{
	std::size_t ok = 0;
	double sum = 0;
	for (std::uint64_t seed = 1; seed <= g.seeds; ++seed)
	{
		double t = g.at(TS, TrafficScenario::S1, 40, seed).metrics.power.tnpc;
		double d = g.at(DS, TrafficScenario::S1, 40, seed).metrics.power.tnpc;
		double rel = (d - t) / t;
		sum += rel;
		ok += rel > 0 && rel < 0.05;
	}
	report(9, at_least_80(ok, g.seeds), share(ok, g.seeds) + " s1/40G seeds with 0 < dTNPC < 5%; mean " + fmt(100 * sum / static_cast<double>(g.seeds), 2) + "%");
}

void check_determinism()
{
	const fs::path root = fs::temp_directory_path() / "fogplace_acceptance";
	fs::remove_all(root);
	GridConfig cfg;
	cfg.scenarios = {TrafficScenario::S2};
	cfg.access_link_gbps = {10};
	cfg.seeds = {1, 2};
	cfg.base.node_limit = 100;
	auto a = run_grid(cfg);
	write_grid_outputs(cfg, a, root / "a");
	auto b = run_grid(cfg);
	write_grid_outputs(cfg, b, root / "b");
	bool same = true;
	for (const char* f : {"records.csv", "summary.csv", "dominance.csv", "plot/blocked.dat", "plot/resources.dat", "plot/traffic.dat", "plot/power.dat",
	                      "plot/hops.dat"})
	{
		same = same && slurp(root / "a" / f) == slurp(root / "b" / f);
	}
	auto manifest = [](fs::path p) {
		auto j = nlohmann::json::parse(slurp(p));
		return j.dump();
	};
	same = same && manifest(root / "a" / "manifest.json") == manifest(root / "b" / "manifest.json");

	bool replay = true;
	for (const auto& r : a.records)
	{
		auto inst = build_instance(r.config);
		dump_instance(inst, root / "dump");
		auto back = load_instance(root / "dump");
		SolveOptions so{r.config.backend, r.config.time_limit_seconds, r.config.node_limit};
		auto x = solve(inst, so);
		auto y = solve(back, so);
		replay = replay && x.placements == y.placements && x.objective == y.objective && x.link_flow == y.link_flow && x.activation == y.activation
		         && x.placements == r.solution.placements;
	}
	fs::remove_all(root);
	report(10, same && replay,
	       std::string("reports ") + (same ? "byte-identical" : "DIFFER") + " across reruns; dump/reload replay " + (replay ? "identical" : "DIFFERS"));
}

void check_runtime(const Grid& g, std::uint64_t timed)
{
	std::size_t optimal = 0, n = 0;
	double total = 0, worst = 0;
	std::string worst_cell;
	for (const auto& [k, r] : g.runs)
	{
		if (k.seed > timed) { continue; }
		++n;
		total += r.solution.solve_seconds;
		optimal += r.solution.optimal && r.solution.solve_seconds <= kSolveLimit;
		if (r.solution.solve_seconds > worst)
		{
			worst = r.solution.solve_seconds;
			worst_cell = cell_key(r.config) + " seed " + std::to_string(k.seed);
		}
	}
	report(11, timed >= 5 && n == 8 * timed && optimal == n && total <= kGridLimit,
	       share(optimal, n) + " solves proven optimal within " + fmt(kSolveLimit, 0) + " s; grid total " + fmt(total, 0) + " s; slowest " + worst_cell + " "
	           + fmt(worst, 1) + " s");
}

} // namespace

int main(int argc, char** argv)
{
	std::uint64_t seeds = 20, timed = 5;
	try
	{
		if (argc > 1) { seeds = static_cast<std::uint64_t>(text::parse_int(argv[1])); }
		if (argc > 2) { timed = static_cast<std::uint64_t>(text::parse_int(argv[2])); }
		if (seeds == 0 || timed > seeds) { throw InvalidParameterError("need 0 < timed-seeds <= seeds-per-cell"); }
	}
	catch (const std::exception& e)
	{
		std::fprintf(stderr, "usage: acceptance [seeds-per-cell [timed-seeds]]: %s\n", e.what());
		return 2;
	}

	try
	{
		check_oracle();
		check_power_arithmetic();
		check_determinism();
		auto g = run_paper_grid(seeds, timed);
		check_dominance(g);
		check_monotonicity(g);
		check_blocking_trends(g);
		check_ts_identity(g);
		check_resource_reduction(g);
		check_hops(g);
		check_marginal_power(g);
		check_runtime(g, timed);
	}
	catch (const std::exception& e)
	{
		std::fprintf(stderr, "acceptance aborted: %s\n", e.what());
		return 2;
	}

	std::sort(verdicts.begin(), verdicts.end(), [](const Verdict& a, const Verdict& b) { return a.id < b.id; });
	std::printf("\nsummary\n");
	bool all = true;
	for (const auto& v : verdicts)
	{
		std::printf("criterion %2d: %s\n", v.id, v.pass ? "PASS" : "FAIL");
		all = all && v.pass;
	}
	return all ? 0 : 1;
}
