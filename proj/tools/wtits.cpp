#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "wtits/cli.hpp"
#include "wtits/errors.hpp"
#include "wtits/presets.hpp"

using namespace wtits;
using cli::json;

namespace {

struct GroupOptions {
  std::string preset = "sl3";
  std::string config;
};

void add_group_options(CLI::App* app, GroupOptions& o) {
  auto* p = app->add_option("--preset", o.preset, "sl3, sl<n> or so24")->capture_default_str();
  app->add_option("--config", o.config, "custom group JSON file")->excludes(p);
}

GroupPreset resolve(const GroupOptions& o) {
  if (o.config.empty()) return load_preset(o.preset);
  std::ifstream in(o.config);
  if (!in) throw ParseError("cannot read config file " + o.config, 0);
  std::stringstream buf;
  buf << in.rdbuf();
  json j;
  try {
    j = json::parse(buf.str());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("config is not valid JSON: ") + e.what(), e.byte);
  }
  return preset_from_json(j);
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path, 0);
  out << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

Eigen::VectorXd to_vector(const std::vector<double>& v) {
  return Eigen::Map<const Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(v.size()));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Extended Weyl groups, their Bruhat-type order, and the orders of Morse components and control sets"};
  app.require_subcommand(1);
  std::function<int()> run;

  // group
  GroupOptions group_opts;
  bool group_json = false;
  auto* group = app.add_subcommand("group", "print |U|, |W|, |C|, generators and C");
  add_group_options(group, group_opts);
  group->add_flag("--json", group_json, "JSON output");
  group->callback([&] {
    run = [&] {
      const TitsGroup g(resolve(group_opts));
      std::cout << (group_json ? dump(cli::group_json(g)) : cli::group_text(g));
      return 0;
    };
  });

  // order
  auto* order = app.add_subcommand("order", "queries on the extended order");
  order->require_subcommand(1);
  GroupOptions leq_opts;
  std::string lhs, rhs;
  auto* leq = order->add_subcommand("leq", "print whether lhs <= rhs");
  add_group_options(leq, leq_opts);
  leq->add_option("--lhs", lhs, "element expression")->required();
  leq->add_option("--rhs", rhs, "element expression")->required();
  leq->callback([&] {
    run = [&] {
      const TitsGroup g(resolve(leq_opts));
      const ExtendedBruhatOrder o(g);
      const std::size_t a = g.id(cli::evaluate_expr(g, lhs)), b = g.id(cli::evaluate_expr(g, rhs));
      std::cout << (o.leq(a, b) ? "true" : "false") << "\n";
      return 0;
    };
  });
  GroupOptions hasse_opts;
  std::string hasse_format = "dot", hasse_output;
  auto* hasse = order->add_subcommand("hasse", "emit the Hasse diagram");
  add_group_options(hasse, hasse_opts);
  hasse->add_option("--format", hasse_format)->check(CLI::IsMember({"dot", "json"}))->capture_default_str();
  hasse->add_option("--output,-o", hasse_output, "write to a file instead of stdout");
  hasse->callback([&] {
    run = [&] {
      const TitsGroup g(resolve(hasse_opts));
      const ExtendedBruhatOrder o(g);
      emit(hasse_format == "json" ? dump(cli::hasse_json(o)) : cli::hasse_dot(o), hasse_output);
      return 0;
    };
  });

  // morse
  GroupOptions morse_opts;
  std::string theta, morse_format = "text", morse_output;
  std::vector<std::string> extra_gens;
  auto* morse = app.add_subcommand("morse", "cosets U_H u and the order <=_H");
  add_group_options(morse, morse_opts);
  morse->add_option("--theta", theta, "simple roots vanishing on H, e.g. 1 or 1,2; empty for none")->expected(0, 1);
  morse->add_option("--extra-gens", extra_gens, "extra generators of U_H (element expressions)");
  morse->add_option("--format", morse_format)->check(CLI::IsMember({"text", "dot", "json"}))->capture_default_str();
  morse->add_option("--output,-o", morse_output);
  morse->callback([&] {
    run = [&] {
      const TitsGroup g(resolve(morse_opts));
      const ExtendedBruhatOrder o(g);
      const auto u_h = g.subgroup_U_H(cli::parse_index_set(theta, g.rank()), cli::evaluate_expr_list(g, extra_gens));
      const QuotientPoset q = morse_quotient_order(o, u_h);
      if (morse_format == "json")
        emit(dump(cli::quotient_json(o, q, "U_H")), morse_output);
      else if (morse_format == "dot")
        emit(cli::quotient_dot(o, q, "U_H"), morse_output);
      else
        emit(cli::morse_text(o, q), morse_output);
      return 0;
    };
  });

  // control
  GroupOptions control_opts;
  std::vector<std::string> us_gens, pair;
  std::string control_format = "text", control_output;
  auto* control = app.add_subcommand("control", "control-set classes U(S) u and their order");
  add_group_options(control, control_opts);
  control->add_option("--us-gens", us_gens, "generators of U(S) (element expressions)")
      ->expected(0, CLI::detail::expected_max_vector_size);
  control->add_option("--pair", pair, "two elements whose control sets are compared")->expected(2);
  control->add_option("--format", control_format)->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  control->add_option("--output,-o", control_output);
  control->callback([&] {
    run = [&] {
      const TitsGroup g(resolve(control_opts));
      const ExtendedBruhatOrder o(g);
      const cli::ControlData d = cli::control_data(o, cli::evaluate_expr_list(g, us_gens));
      if (!pair.empty()) {
        const ExactMatrix a = cli::evaluate_expr(g, pair[0]), b = cli::evaluate_expr(g, pair[1]);
        emit(control_format == "json" ? dump(cli::control_pair_json(o, d, a, b)) : cli::control_pair_text(o, d, a, b),
             control_output);
      } else {
        emit(control_format == "json" ? dump(cli::control_json(o, d)) : cli::control_text(o, d), control_output);
      }
      return 0;
    };
  });

  // oracle
  auto* oracle_cmd = app.add_subcommand("oracle", "numerical cross-checks on SO(n)");
  oracle_cmd->require_subcommand(1);
  std::uint64_t seed = 42;
  auto add_seed = [&](CLI::App* a) {
    a->add_option("--seed", seed, "RNG seed")->envname("WTITS_SEED")->capture_default_str();
  };

  GroupOptions schubert_opts;
  std::size_t samples = 100000;
  double tol = 1e-2, margin = 5e-2;
  std::string schubert_output;
  auto* schubert = oracle_cmd->add_subcommand("schubert", "incidence of sampled cells against the order");
  add_group_options(schubert, schubert_opts);
  schubert->add_option("--samples", samples, "uniform draws per cell")->capture_default_str();
  add_seed(schubert);
  schubert->add_option("--tol", tol, "incidence tolerance")->capture_default_str();
  schubert->add_option("--margin", margin, "required distance on negative pairs")->capture_default_str();
  schubert->add_option("--output,-o", schubert_output);
  schubert->callback([&] {
    run = [&] {
      const TitsGroup g(resolve(schubert_opts));
      const ExtendedBruhatOrder o(g);
      const auto r = oracle::schubert_agreement(o, samples, seed, tol, margin);
      emit(dump(cli::schubert_json(g, r)), schubert_output);
      std::cerr << r.agreeing << "/" << r.pairs.size() << " pairs agree; min negative distance "
                << r.min_negative_distance << (r.margin_ok() ? "" : " (below margin)") << "\n";
      return r.all_agree() && r.margin_ok() ? 0 : 3;
    };
  });

  GroupOptions flow_opts;
  std::string flow_H = "2,-1,-1", flow_nil = "0", flow_output;
  oracle::MorseOptions morse_options;
  double dt = 0.02;
  auto* flow = oracle_cmd->add_subcommand("flow", "Morse components of a translation flow");
  add_group_options(flow, flow_opts);
  flow->add_option("--H", flow_H, "diagonal of H")->capture_default_str();
  flow->add_option("--nilpotent", flow_nil, "e.g. e23 or 0.5*e1_3+e12")->capture_default_str();
  flow->add_option("--steps", morse_options.steps)->capture_default_str();
  flow->add_option("--grid", morse_options.grid, "generic points")->capture_default_str();
  flow->add_option("--dt", dt, "time step")->capture_default_str();
  flow->add_option("--perturbation", morse_options.perturbation)->capture_default_str();
  add_seed(flow);
  flow->add_option("--output,-o", flow_output);
  flow->callback([&] {
    run = [&] {
      const TitsGroup g(resolve(flow_opts));
      oracle::FlowSpec spec;
      const auto h = cli::parse_real_list(flow_H);
      if (h.size() != g.n()) throw ParseError("--H needs " + std::to_string(g.n()) + " entries", 0);
      spec.H = to_vector(h);
      spec.elliptic = oracle::Matrix::Identity(static_cast<Eigen::Index>(g.n()), static_cast<Eigen::Index>(g.n()));
      spec.nilpotent = cli::parse_elementary_sum(flow_nil, g.n());
      spec.time_step = dt;
      morse_options.seed = seed;
      const auto r = oracle::recover_morse(g, spec, morse_options);
      if (r.degenerate) {
        emit(dump(cli::morse_flow_json(g, spec, morse_options, r, nullptr)), flow_output);
        std::cerr << "degenerate flow: H = 0 and no nilpotent part, every point is fixed\n";
        return 0;
      }
      const ExtendedBruhatOrder o(g);
      const QuotientPoset q = morse_quotient_order(o, g.subgroup_U_H(r.theta));
      const auto match = oracle::match_morse_quotient(r, q);
      emit(dump(cli::morse_flow_json(g, spec, morse_options, r, &match)), flow_output);
      std::cerr << r.recurrent.size() << " recurrent points, " << r.components.size() << " components, "
                << r.attractors.size() << " attractors; components "
                << (match.components_are_cosets && match.order_reversed ? "match" : "DO NOT match")
                << " the cosets of U_H\n";
      return match.components_are_cosets && match.order_reversed ? 0 : 3;
    };
  });

  GroupOptions contraction_opts;
  std::string con_H = "2,-1,-1", con_nil = "e12";
  std::size_t k_max = 20;
  double con_step = 1.0;
  auto* contraction = oracle_cmd->add_subcommand("contraction", "|h^-k exp(n) h^k - I| against exp(-alpha k)");
  add_group_options(contraction, contraction_opts);
  contraction->add_option("--H", con_H)->capture_default_str();
  contraction->add_option("--nilpotent", con_nil)->capture_default_str();
  contraction->add_option("--kmax", k_max)->capture_default_str();
  contraction->add_option("--step", con_step)->capture_default_str();
  contraction->callback([&] {
    run = [&] {
      const GroupPreset p = resolve(contraction_opts);
      const auto h = cli::parse_real_list(con_H);
      if (h.size() != p.n) throw ParseError("--H needs " + std::to_string(p.n) + " entries", 0);
      const auto r = oracle::contraction_check(to_vector(h), cli::parse_elementary_sum(con_nil, p.n), k_max, con_step);
      std::cout << dump(cli::contraction_json(r));
      std::cerr << "max relative error " << r.max_relative_error << " against ratio " << r.predicted_ratio << "\n";
      return 0;
    };
  });

  std::size_t draws = 1000, dim = 2;
  bool complex_case = false;
  auto* rank_one = oracle_cmd->add_subcommand("rank-one", "identities of the rank-one psi maps");
  rank_one->add_option("--draws", draws)->capture_default_str();
  rank_one->add_option("--dim", dim, "size of v")->capture_default_str();
  rank_one->add_flag("--complex", complex_case, "complex case, z purely imaginary");
  add_seed(rank_one);
  rank_one->callback([&] {
    run = [&] {
      const auto s = oracle::rank_one_sweep(draws, dim, complex_case, seed);
      const auto& m = s.max;
      std::cout << dump({{"draws", s.draws},
                         {"dim", s.dim},
                         {"complex", s.complex},
                         {"seed", seed},
                         {"max", {{"a_squared", m.a_squared},
                                  {"a_cubed", m.a_cubed},
                                  {"trace", m.trace},
                                  {"corner", m.corner},
                                  {"endpoint", m.endpoint},
                                  {"start", m.start},
                                  {"unitary", m.unitary},
                                  {"series", m.series}}}});
      std::cerr << "worst residual " << s.worst() << "\n";
      return 0;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  try {
    return run();
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Unsupported& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return 2;
  } catch (const InvariantViolation& e) {
    std::cerr << "invariant violated: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
