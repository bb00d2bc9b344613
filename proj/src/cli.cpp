#include "proxima/cli.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "proxima/config.hpp"
#include "proxima/report.hpp"

namespace proxima {
namespace {

using nlohmann::json;

struct Flags {
  std::string problem;
  std::string config;
  std::string cls = "orbital";
  std::optional<double> eta;
  std::optional<int> density;
  std::optional<std::size_t> depth;
  std::string seed;
  std::string trace;
  std::optional<double> bound_eta;
  std::optional<std::size_t> max_iter;
  std::size_t lemma_seeds = 100;
  std::size_t lemma_length = 50;
  double lemma_decay = 0.8;
};

Problem load(const Flags& f) {
  if (!f.problem.empty() && !f.config.empty()) {
    throw ConfigError("give either --problem or --config, not both");
  }
  if (!f.config.empty()) return load_problem(f.config);
  if (!f.problem.empty()) return builtin_problem(f.problem);
  throw ConfigError("one of --problem or --config is required");
}

std::uint64_t rng_seed() {
  const char* env = std::getenv("PROXIMA_SEED");
  if (!env || !*env) return 0;
  std::uint64_t out = 0;
  const char* end = env + std::char_traits<char>::length(env);
  auto r = std::from_chars(env, end, out);
  if (r.ec != std::errc() || r.ptr != end) throw ConfigError("PROXIMA_SEED must be an unsigned integer");
  return out;
}

json envelope(const std::string& command, const Problem& p, json flags) {
  return {{"report_version", kReportVersion},
          {"tool", kToolVersion},
          {"command", command},
          {"problem", problem_to_json(p)},
          {"flags", std::move(flags)}};
}

Point seed_point(const Flags& f, const Problem& p) {
  if (!f.seed.empty()) return parse_point_list(p.map.space(), f.seed);
  if (!p.options.seeds.empty()) return p.options.seeds.front();
  throw ConfigError("no --seed given and the problem declares no seeds");
}

int cmd_verify(const Flags& f, std::ostream& out) {
  const Problem p = load(f);
  const auto cls = parse_contraction_class(f.cls);
  if (!cls) throw ConfigError("--class must be one of cyclic, suzuki, orbital");
  ContractionOptions opts;
  opts.density = f.density.value_or(p.options.density);
  opts.depth = f.depth.value_or(p.options.depth);
  opts.tol = p.options.verify_tol;
  opts.sup_tol = p.options.sup_tol;
  opts.dist = p.options.dist;
  const double eta = f.eta.value_or(p.options.eta);

  json report = envelope("verify", p,
                         {{"class", f.cls}, {"eta", eta}, {"density", opts.density},
                          {"depth", opts.depth}});
  const CyclicityVerdict cyc = cyclicity_check(p.map, opts.density);
  print(out, cyc);
  report["cyclicity"] = to_json(cyc);
  if (!cyc.pass) {
    emit_json_block(out, report);
    return kExitVerdictFail;
  }
  bool ok = true;
  if (*cls == ContractionClass::Orbital) {
    std::vector<Point> seeds = p.map.omega().sample(opts.density);
    for (auto& s : p.map.delta().sample(opts.density)) seeds.push_back(std::move(s));
    const BoundednessVerdict b = boundedness_check(p.map, seeds, 2 * opts.depth, 2.0);
    print(out, b);
    report["boundedness"] = to_json(b);
    ok = b.pass;
  }
  const ContractionVerdict v = verify(p.map, *cls, eta, opts);
  print(out, v);
  report["verdict"] = to_json(v);
  emit_json_block(out, report);
  return ok && v.holds ? kExitOk : kExitVerdictFail;
}

int cmd_solve(const Flags& f, std::ostream& out) {
  const Problem p = load(f);
  const Point seed = seed_point(f, p);
  p.map.side_of(seed);  // DomainError for seeds outside both regions

  SolveOptions opts;
  opts.max_iter = f.max_iter.value_or(p.options.max_iter);
  opts.gap_tol = p.options.gap_tol;
  opts.pair_tol = p.options.pair_tol;
  opts.eta_for_bound = f.bound_eta;
  opts.dist = p.options.dist;
  const std::string trace = !f.trace.empty() ? f.trace : p.options.trace_path.value_or("");

  json flags{{"seed", to_json(seed)}, {"max_iter", opts.max_iter}};
  if (f.bound_eta) flags["bound_eta"] = *f.bound_eta;
  if (!trace.empty()) flags["trace"] = trace;
  json report = envelope("solve", p, flags);

  const CyclicityVerdict cyc = cyclicity_check(p.map, p.options.density);
  report["cyclicity"] = to_json(cyc);
  if (!cyc.pass) {
    print(out, cyc);
    emit_json_block(out, report);
    return kExitVerdictFail;
  }
  const SolveReport r = iterate(p.map, seed, opts);
  print(out, r);
  report["report"] = to_json(r);
  if (!trace.empty()) {
    std::ofstream csv(trace);
    if (!csv) throw ConfigError("cannot write trace file '" + trace + "'");
    write_trace_csv(csv, r);
    out << "trace written to " << trace << '\n';
  }
  emit_json_block(out, report);
  return r.converged ? kExitOk : kExitVerdictFail;
}

int cmd_dist(const Flags& f, std::ostream& out) {
  const Problem p = load(f);
  const int density = f.density.value_or(kDistDensity);
  const SetDistance d = set_distance(p.map.omega(), p.map.delta(), density);
  out << "dist(omega, delta) = " << format_number(d.dist) << " (density " << density << ")\n"
      << "  witness " << d.witness.a.to_string() << " , " << d.witness.b.to_string() << '\n';
  json report = envelope("dist", p, {{"density", density}});
  report["dist"] = d.dist;
  report["witness"] = to_json(d.witness);
  emit_json_block(out, report);
  return kExitOk;
}

int cmd_orbit(const Flags& f, std::ostream& out) {
  const Problem p = load(f);
  const Point seed = seed_point(f, p);
  p.map.side_of(seed);
  const std::size_t depth = f.depth.value_or(8);
  json report = envelope("orbit", p, {{"seed", to_json(seed)}, {"depth", depth}});
  const OrbitTable t = orbit(p.map, seed, depth);
  print(out, t);
  report["orbit"] = to_json(t);
  emit_json_block(out, report);
  return kExitOk;
}

int cmd_lemmas(const Flags& f, std::ostream& out) {
  const Problem p = load(f);
  const std::uint64_t base = rng_seed();
  const SetDistance d = set_distance(p.map.omega(), p.map.delta(), kDistDensity);
  const std::vector<double> schedule{0.1, 0.01, 0.001};
  constexpr double kCauchyEps = 0.05;

  std::size_t close_pass = 0, cauchy_pass = 0, both = 0;
  json failures = json::array();
  for (std::size_t i = 0; i < f.lemma_seeds; ++i) {
    const std::uint64_t seed = base + i;
    const SequenceTriple t = generate_converging_triple(p.map.omega(), p.map.delta(), d.witness,
                                                        f.lemma_length, f.lemma_decay, seed);
    const CloseVerdict c = check_lemma_close(t, d.dist, schedule);
    const CauchyVerdict y = check_lemma_cauchy(t.sigma, t.rho, t.theta, d.dist, kCauchyEps);
    const bool c_ok = c.status == LemmaStatus::Pass;
    const bool y_ok = y.status == LemmaStatus::Pass;
    close_pass += c_ok;
    cauchy_pass += y_ok;
    both += c_ok && y_ok;
    if (!c_ok || !y_ok) {
      failures.push_back({{"seed", seed},
                          {"close", to_string(c.status)},
                          {"cauchy", to_string(y.status)}});
    }
  }
  out << "lemma harness over " << f.lemma_seeds << " seeds (base " << base
      << "), finite horizon " << f.lemma_length << '\n'
      << "  closeness (eps 0.1, 0.01, 0.001): " << close_pass << '/' << f.lemma_seeds << " pass\n"
      << "  cauchy (eps 0.05):                " << cauchy_pass << '/' << f.lemma_seeds << " pass\n"
      << both << '/' << f.lemma_seeds << " pass\n";
  json report = envelope("lemmas", p,
                         {{"seeds", f.lemma_seeds}, {"base_seed", base}, {"length", f.lemma_length},
                          {"decay", f.lemma_decay}, {"eps_schedule", schedule},
                          {"cauchy_eps", kCauchyEps}});
  report["dist"] = d.dist;
  report["proximal_pair"] = to_json(d.witness);
  report["close_pass"] = close_pass;
  report["cauchy_pass"] = cauchy_pass;
  report["pass"] = both;
  report["failures"] = failures;
  emit_json_block(out, report);
  return both == f.lemma_seeds ? kExitOk : kExitVerdictFail;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Best proximity points of cyclic maps in finite-dimensional p-norm spaces",
               "proxima"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);
  app.fallthrough();
  Flags f;
  app.add_option("--problem", f.problem, "built-in problem name (paper-example)");
  app.add_option("--config", f.config, "path to a JSON problem file");

  auto* verify = app.add_subcommand("verify", "check a contraction inequality on a sample grid");
  verify->add_option("--class", f.cls, "cyclic | suzuki | orbital")
      ->check(CLI::IsMember({"cyclic", "suzuki", "orbital"}));
  verify->add_option("--eta", f.eta, "contraction constant in (0, 1)");
  verify->add_option("--density", f.density, "samples per region");
  verify->add_option("--depth", f.depth, "orbit depth for the orbital supremum");

  auto* solve = app.add_subcommand("solve", "run the Picard iteration from a seed");
  solve->add_option("--seed", f.seed, "comma-separated coordinates, e.g. \"-1,-0.5\"");
  solve->add_option("--trace", f.trace, "write the iterate trace as CSV");
  solve->add_option("--bound-eta", f.bound_eta, "check the gap envelope with this eta");
  solve->add_option("--max-iter", f.max_iter, "iteration cap");

  auto* dist = app.add_subcommand("dist", "estimate dist(omega, delta)");
  dist->add_option("--density", f.density, "samples per region");

  auto* orb = app.add_subcommand("orbit", "print the orbit of a seed");
  orb->add_option("--seed", f.seed, "comma-separated coordinates");
  orb->add_option("--depth", f.depth, "number of map applications");

  auto* lemmas = app.add_subcommand("lemmas", "run the sequence-lemma harness");
  lemmas->add_option("--seeds", f.lemma_seeds, "number of seeded triples");
  lemmas->add_option("--length", f.lemma_length, "sequence length");
  lemmas->add_option("--decay", f.lemma_decay, "perturbation decay in (0, 1)");

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(argv_rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << kToolVersion << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (verify->parsed()) return cmd_verify(f, out);
    if (solve->parsed()) return cmd_solve(f, out);
    if (dist->parsed()) return cmd_dist(f, out);
    if (orb->parsed()) return cmd_orbit(f, out);
    return cmd_lemmas(f, out);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CyclicityError& e) {
    err << "cyclicity violation: " << e.what() << '\n';
    return kExitVerdictFail;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace proxima
