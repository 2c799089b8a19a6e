// hyperorder: command-line front end for orderings, bounds, generators and
// the gluing solver. Run `hyperorder --help` for the command list.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hyperorder/bounds.hpp"
#include "hyperorder/errors.hpp"
#include "hyperorder/gluing.hpp"
#include "hyperorder/instances.hpp"
#include "hyperorder/orderings.hpp"
#include "hyperorder/text_format.hpp"

using namespace hyperorder;
using json = nlohmann::ordered_json;

namespace {

enum Exit : int { kOk = 0, kUsage = 1, kParse = 2, kGuard = 3, kMismatch = 4 };

struct VerifyMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fnv1a64(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char b : bytes) {
    h ^= b;
    h *= 0x100000001b3ull;
  }
  std::ostringstream out;
  out << std::hex << std::setw(16) << std::setfill('0') << h;
  return out.str();
}

// Shared per-run state: the report skeleton plus the clock.
struct Run {
  bool as_json = false;
  json report;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  std::string input(const std::string& path) {
    auto bytes = read_file(path);
    report["inputs"].push_back({{"path", path}, {"fnv1a64", fnv1a64(bytes)}});
    return bytes;
  }

  // Prints the report (JSON or the human text) to `out`.
  void finish(std::ostream& out, const std::string& human) {
    report["wall_seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (as_json) {
      out << report.dump(2) << '\n';
    } else {
      out << human;
    }
  }
};

json to_json(const DeltaReport& r) {
  return {{"profile", r.profile}, {"max_delta", r.max_delta}, {"argmax_k", r.argmax_k}};
}

json to_json(const BoundReport& b) {
  json j = {{"name", b.name}, {"applicable", b.applicable}, {"statement", b.statement}};
  if (b.value) {
    std::visit([&](auto v) { j["value"] = v; }, *b.value);
  } else {
    j["value"] = nullptr;
  }
  return j;
}

std::string value_text(const BoundReport& b) {
  if (!b.value) return "-";
  std::ostringstream out;
  std::visit([&](auto v) { out << v; }, *b.value);
  return out.str();
}

json to_json(const LowerBoundCertificate& c) {
  return {{"c_const", c.c_const}, {"eps", c.eps}, {"lhs", c.lhs}, {"certified", c.certified}};
}

std::string profile_text(const DeltaReport& r) {
  std::ostringstream out;
  out << "profile:";
  for (auto v : r.profile) out << ' ' << v;
  out << "\nmax delta: " << r.max_delta << " (at k=" << r.argmax_k << ")\n";
  return out.str();
}

struct OrderOptions {
  std::string method = "greedy";
  std::string start_rule = "lowest_index";
  std::string component_rule = "d_increasing";
  double time_limit = 60.0;
  std::size_t max_m = 24;
};

OrderingResult run_method(const SetFamily& f, const OrderOptions& o) {
  SearchBudget budget;
  budget.time_limit = std::chrono::duration<double>(o.time_limit);
  budget.max_m_for_dp = o.max_m;
  if (o.method == "greedy") {
    return standard_ordering(f, parse_start_rule(o.start_rule), parse_component_rule(o.component_rule));
  }
  if (o.method == "two-set") return two_set_optimal(f);
  if (o.method == "dp") return subset_dp_exact(f, budget);
  return branch_bound(f, budget);
}

void add_order_flags(CLI::App* cmd, OrderOptions& o, const char* method_flag) {
  cmd->add_option(method_flag, o.method, "greedy | two-set | dp | bb")
      ->check(CLI::IsMember({"greedy", "two-set", "dp", "bb"}))
      ->capture_default_str();
  cmd->add_option("--start-rule", o.start_rule, "lowest_index | best_of_all_starts (greedy)")->capture_default_str();
  cmd->add_option("--component-rule", o.component_rule, "d_increasing | gamma_decreasing | vertex_order (greedy)")
      ->capture_default_str();
  cmd->add_option("--time-limit", o.time_limit, "seconds for dp and bb")->capture_default_str();
  cmd->add_option("--max-m", o.max_m, "largest m the subset DP accepts")->capture_default_str();
}

json order_json(const OrderOptions& o, const OrderingResult& r) {
  json j = {{"method", std::string(to_string(r.method))}, {"optimal", r.optimal}, {"delta", to_json(r.report)}};
  if (r.method == Method::greedy) {
    j["start_rule"] = o.start_rule;
    j["component_rule"] = o.component_rule;
  }
  return j;
}

Ordering solve_ordering(const LinearSystem& sys, const OrderOptions& o, const std::string& ordering_path, Run& run,
                        json& method_out) {
  if (!ordering_path.empty()) {
    method_out = "given";
    return parse_ordering(run.input(ordering_path), sys.m());
  }
  if (o.method == "identity") {
    method_out = "identity";
    return Ordering::identity(sys.m());
  }
  const auto r = run_method(support_family(sys), o);
  method_out = order_json(o, r);
  return r.ordering;
}

json trace_json(const GlueTrace& t) {
  json steps = json::array();
  for (const auto& s : t.steps) {
    steps.push_back({{"equation", s.equation + 1}, {"partials", s.partials}, {"union", s.union_size},
                     {"delta", s.delta}, {"work", s.work}});
  }
  json j = {{"q", t.q}, {"n", t.n}, {"steps", steps}, {"free_variables", t.free_variables},
            {"consistent", t.consistent}};
  const auto count = t.solution_count();
  j["solutions"] = count ? json(*count) : json(nullptr);
  return j;
}

std::string trace_text(const GlueTrace& t) {
  std::ostringstream out;
  out << "  k  eq   |S_k|  union  delta  work\n";
  for (std::size_t k = 0; k < t.steps.size(); ++k) {
    const auto& s = t.steps[k];
    out << std::setw(3) << k + 1 << std::setw(4) << s.equation + 1 << std::setw(8) << s.partials << std::setw(7)
        << s.union_size << std::setw(7) << s.delta << "  " << s.work << '\n';
  }
  out << (t.consistent ? "consistent" : "inconsistent") << ", free variables " << t.free_variables << ", solutions ";
  if (const auto c = t.solution_count()) {
    out << *c << '\n';
  } else {
    out << "overflow\n";
  }
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Orderings of set families that keep prefix unions small"};
  app.require_subcommand(1);
  app.fallthrough();
  Run run;
  app.add_flag("--json", run.as_json, "print the run report as JSON");

  json invocation = json::array();
  for (int i = 0; i < argc; ++i) invocation.push_back(argv[i]);
  run.report["invocation"] = invocation;
  run.report["inputs"] = json::array();

  // delta
  std::string family_path;
  std::string ordering_path;
  auto* delta = app.add_subcommand("delta", "prefix excess profile of a family under an ordering (identity by default)");
  delta->add_option("family", family_path, "family file")->required();
  delta->add_option("ordering", ordering_path, "ordering file");

  // order
  OrderOptions order_opts;
  std::uint64_t seed = 0;
  auto* order = app.add_subcommand("order", "compute an ordering; ordering on stdout, report on stderr");
  order->add_option("family", family_path, "family file")->required();
  add_order_flags(order, order_opts, "--method");
  order->add_option("--seed", seed, "recorded in the report; every method is deterministic")->capture_default_str();

  // bounds
  std::int64_t bound_c = 3;
  std::int64_t bound_n = 0;
  std::int64_t bound_m = 0;
  std::string bound_family;
  auto* bounds = app.add_subcommand("bounds", "closed-form worst-case bounds for (c, n, m)");
  bounds->add_option("--c", bound_c, "set size, 2 or 3")->check(CLI::IsMember({2, 3}))->capture_default_str();
  bounds->add_option("--n", bound_n, "ground set size")->required();
  bounds->add_option("--m", bound_m, "number of sets")->required();
  bounds->add_option("--family", bound_family, "also evaluate the disconnected-family bound on this file");

  // certify
  double c_const = 0.4590625;
  double eps = 0.0818757697241;
  bool search = false;
  double grid = 1e-4;
  auto* certify = app.add_subcommand("certify", "evaluate the entropy certificate, or grid-search its constants");
  certify->add_option("--c-const", c_const)->capture_default_str();
  certify->add_option("--eps", eps)->capture_default_str();
  certify->add_flag("--search", search, "grid-search the largest certified eps");
  certify->add_option("--grid", grid, "grid step for --search")->capture_default_str();

  // gen
  std::string model_tag;
  std::uint32_t gen_n = 0;
  std::uint32_t gen_m = 0;
  std::uint32_t gen_c = 3;
  auto* gen = app.add_subcommand("gen", "generate a family (family format on stdout)");
  gen->add_option("--model", model_tag, "random3 | fano | sts9 | sts9-minus-point | disjoint-pairs | uniform-random")
      ->required();
  auto* gen_n_opt = gen->add_option("--n", gen_n, "ground set size (fixed designs: their own)");
  auto* gen_m_opt = gen->add_option("--m", gen_m, "number of sets (sts9: lines kept; random3: ignored)");
  gen->add_option("--c", gen_c, "set size for uniform-random")->capture_default_str();
  gen->add_option("--seed", seed)->capture_default_str();

  // gen-system
  std::uint32_t sys_q = 2;
  bool unplanted = false;
  auto* gen_sys = app.add_subcommand("gen-system", "generate a random linear system (gfsys format on stdout)");
  gen_sys->add_option("--q", sys_q, "prime field order")->capture_default_str();
  gen_sys->add_option("--n", gen_n, "variables")->required();
  gen_sys->add_option("--m", gen_m, "equations")->required();
  gen_sys->add_option("--c", gen_c, "largest equation support")->capture_default_str();
  gen_sys->add_option("--seed", seed)->capture_default_str();
  gen_sys->add_flag("--unplanted", unplanted, "uniform right-hand sides (may be inconsistent)");

  // solve / verify
  std::string system_path;
  OrderOptions solve_opts;
  solve_opts.method = "identity";
  std::size_t print_limit = 0;
  auto* solve = app.add_subcommand("solve", "solve a gfsys file by gluing");
  solve->add_option("system", system_path, "gfsys file")->required();
  solve->add_option("--ordering", ordering_path, "ordering file over the equations");
  solve->add_option("--print", print_limit, "print up to this many solutions")->capture_default_str();
  auto* verify = app.add_subcommand("verify", "check gluing against exhaustive search; exit 4 on mismatch");
  verify->add_option("system", system_path, "gfsys file")->required();
  verify->add_option("--ordering", ordering_path, "ordering file over the equations");
  for (auto* cmd : {solve, verify}) {
    cmd->add_option("--order-method", solve_opts.method, "identity | greedy | two-set | dp | bb")
        ->check(CLI::IsMember({"identity", "greedy", "two-set", "dp", "bb"}))
        ->capture_default_str();
    cmd->add_option("--start-rule", solve_opts.start_rule)->capture_default_str();
    cmd->add_option("--component-rule", solve_opts.component_rule)->capture_default_str();
    cmd->add_option("--time-limit", solve_opts.time_limit)->capture_default_str();
  }

  // bench
  std::uint32_t bench_lo = 8;
  std::uint32_t bench_hi = 20;
  std::uint32_t bench_count = 10;
  double bench_limit = 10.0;
  auto* bench = app.add_subcommand("bench", "random3 widths: greedy rules against the exact optimum");
  bench->add_option("--n-min", bench_lo)->capture_default_str();
  bench->add_option("--n-max", bench_hi)->capture_default_str();
  bench->add_option("--instances", bench_count, "instances per n")->capture_default_str();
  bench->add_option("--seed", seed)->capture_default_str();
  bench->add_option("--time-limit", bench_limit, "per-instance limit for the exact search")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    if (delta->parsed()) {
      run.report["command"] = "delta";
      const auto f = parse_family(run.input(family_path));
      const auto o = ordering_path.empty() ? Ordering::identity(f.m()) : parse_ordering(run.input(ordering_path), f.m());
      const auto r = delta_profile(f, o);
      run.report["method"] = ordering_path.empty() ? "identity" : "given";
      run.report["seed"] = nullptr;
      run.report["delta"] = to_json(r);
      run.finish(std::cout, profile_text(r));
    } else if (order->parsed()) {
      run.report["command"] = "order";
      const auto f = parse_family(run.input(family_path));
      const auto r = run_method(f, order_opts);
      run.report["seed"] = seed;
      run.report["result"] = order_json(order_opts, r);
      std::cout << format_ordering(r.ordering);
      run.finish(std::cerr, std::string("method: ") + std::string(to_string(r.method)) +
                                (r.optimal ? " (optimal)\n" : " (not proven optimal)\n") + profile_text(r.report));
    } else if (bounds->parsed()) {
      run.report["command"] = "bounds";
      run.report["c"] = bound_c;
      run.report["n"] = bound_n;
      run.report["m"] = bound_m;
      std::ostringstream human;
      json list = json::array();
      if (bound_c == 2) {
        const auto v = f2_formula(bound_n, bound_m);
        list.push_back({{"name", "f2"}, {"applicable", true}, {"statement", "worst case for sets of size <= 2"},
                        {"value", v}});
        human << "f2(" << bound_n << "," << bound_m << ") = " << v << '\n';
      } else {
        for (const auto& b : f3_bounds(bound_n, bound_m)) {
          list.push_back(to_json(b));
          human << std::left << std::setw(20) << b.name << std::setw(10) << value_text(b)
                << (b.applicable ? "" : "(not applicable) ") << b.statement << '\n';
        }
      }
      if (!bound_family.empty()) {
        const auto b = disconnected_bound(parse_family(run.input(bound_family)));
        list.push_back(to_json(b));
        human << std::left << std::setw(20) << b.name << std::setw(10) << value_text(b)
              << (b.applicable ? "" : "(not applicable) ") << b.statement << '\n';
      }
      run.report["bounds"] = list;
      run.finish(std::cout, human.str());
    } else if (certify->parsed()) {
      run.report["command"] = "certify";
      const auto cert = search ? search_constants(grid) : lower_bound_lhs(c_const, eps);
      run.report["method"] = search ? "grid_search" : "evaluate";
      if (search) run.report["grid"] = grid;
      run.report["certificate"] = to_json(cert);
      std::ostringstream human;
      human << std::setprecision(12) << "c = " << cert.c_const << "\neps = " << cert.eps << "\nlhs = " << cert.lhs
            << '\n'
            << (cert.certified ? "CERTIFIED" : "NOT CERTIFIED") << '\n';
      run.finish(std::cout, human.str());
    } else if (gen->parsed()) {
      GeneratorSpec spec{parse_model(model_tag), gen_n, gen_m, gen_c, Seed{seed}};
      // Fixed designs default to their own shape.
      const std::pair<std::uint32_t, std::uint32_t> shape = spec.model == Model::fano               ? std::pair{7u, 7u}
                                                            : spec.model == Model::sts9             ? std::pair{9u, 12u}
                                                            : spec.model == Model::sts9_minus_point ? std::pair{8u, 8u}
                                                                                                    : std::pair{0u, 0u};
      if (gen_n_opt->count() == 0) {
        if (shape.first == 0) throw std::invalid_argument("--n is required for this model");
        spec.n = shape.first;
      }
      if (gen_m_opt->count() == 0 && shape.second != 0) spec.m = shape.second;
      std::cout << format_family(generate(spec));
    } else if (gen_sys->parsed()) {
      std::cout << format_system(gen_random_system(sys_q, gen_n, gen_m, gen_c, Seed{seed}, !unplanted));
    } else if (solve->parsed() || verify->parsed()) {
      const bool verifying = verify->parsed();
      run.report["command"] = verifying ? "verify" : "solve";
      const auto sys = parse_system(run.input(system_path));
      json method;
      const auto o = solve_ordering(sys, solve_opts, ordering_path, run, method);
      run.report["method"] = method;
      run.report["seed"] = nullptr;
      const auto trace = glue_solve(sys, o);
      run.report["trace"] = trace_json(trace);
      std::ostringstream human;
      human << trace_text(trace);
      if (verifying) {
        const auto glued = materialize_solutions(trace);
        const auto brute = brute_force_solve(sys);
        const bool same = glued == brute;
        run.report["verified"] = same;
        run.report["brute_force_solutions"] = brute.size();
        human << (same ? "MATCH" : "MISMATCH") << ": gluing " << glued.size() << ", exhaustive " << brute.size()
              << '\n';
        run.finish(std::cout, human.str());
        if (!same) throw VerifyMismatch("solution sets differ");
      } else {
        if (print_limit > 0) {
          const auto sols = materialize_solutions(trace);
          json shown = json::array();
          for (std::size_t i = 0; i < sols.size() && i < print_limit; ++i) {
            shown.push_back(sols[i]);
            for (std::size_t v = 0; v < sols[i].size(); ++v) human << (v ? " " : "") << sols[i][v];
            human << '\n';
          }
          run.report["solutions_shown"] = shown;
        }
        run.finish(std::cout, human.str());
      }
    } else if (bench->parsed()) {
      run.report["command"] = "bench";
      run.report["seed"] = seed;
      run.report["instances_per_n"] = bench_count;
      SplitMix64 seeds(Seed{seed});
      json rows = json::array();
      std::ostringstream human;
      human << "   n  exact(mean) proven  greedy  best-start  gamma  vertex   exact(s)\n";
      SearchBudget budget;
      budget.time_limit = std::chrono::duration<double>(bench_limit);
      for (std::uint32_t n = bench_lo; n <= bench_hi; ++n) {
        double sum_exact = 0;
        double sum_greedy[4] = {0, 0, 0, 0};
        std::size_t proven = 0;
        double exact_seconds = 0;
        for (std::uint32_t i = 0; i < bench_count; ++i) {
          const auto f = gen_random3(n, Seed{seeds.next()});
          const OrderingResult greedy[4] = {
              standard_ordering(f),
              standard_ordering(f, StartRule::best_of_all_starts),
              standard_ordering(f, StartRule::lowest_index, ComponentRule::gamma_decreasing),
              standard_ordering(f, StartRule::lowest_index, ComponentRule::vertex_order),
          };
          for (int g = 0; g < 4; ++g) sum_greedy[g] += greedy[g].report.max_delta;
          const auto t0 = std::chrono::steady_clock::now();
          const auto exact = f.m() <= budget.max_m_for_dp ? subset_dp_exact(f, budget) : branch_bound(f, budget);
          exact_seconds += std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
          sum_exact += exact.report.max_delta;
          proven += exact.optimal ? 1 : 0;
        }
        const double k = bench_count;
        rows.push_back({{"n", n},
                        {"exact_mean", sum_exact / k},
                        {"proven", proven},
                        {"greedy_mean", sum_greedy[0] / k},
                        {"best_start_mean", sum_greedy[1] / k},
                        {"gamma_mean", sum_greedy[2] / k},
                        {"vertex_order_mean", sum_greedy[3] / k},
                        {"exact_seconds", exact_seconds}});
        human << std::fixed << std::setprecision(2) << std::setw(4) << n << std::setw(13) << sum_exact / k
              << std::setw(7) << proven << std::setw(8) << sum_greedy[0] / k << std::setw(12) << sum_greedy[1] / k
              << std::setw(7) << sum_greedy[2] / k << std::setw(8) << sum_greedy[3] / k << std::setw(11)
              << exact_seconds << '\n';
      }
      run.report["rows"] = rows;
      run.finish(std::cout, human.str());
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const GuardExceeded& e) {
    std::cerr << "refused: " << e.what() << '\n';
    return kGuard;
  } catch (const VerifyMismatch& e) {
    std::cerr << "verification failed: " << e.what() << '\n';
    return kMismatch;
  } catch (const std::invalid_argument& e) {
    std::cerr << "not applicable: " << e.what() << '\n';
    return kGuard;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kOk;
}
