#include "mf/cli.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "mf/io.hpp"

namespace mf::cli {

namespace {

using io::Json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Config {
  double tol = 1e-8;
  std::uint64_t seed = 0;
  bool json = false;
};

// Result of a subcommand: the object to print and the exit code.
struct Outcome {
  Json body;
  int code = 0;
};

// ---------------------------------------------------------------------------
// Human-readable rendering: six significant digits, matrices row by row.

std::string fmt(double x) {
  std::ostringstream os;
  os << std::setprecision(6) << x;
  return os.str();
}

bool is_complex(const Json& j) {
  return j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number();
}

std::string fmt_complex(const Json& j) {
  const double re = j[0].get<double>(), im = j[1].get<double>();
  if (im == 0.0) return fmt(re);
  std::ostringstream os;
  os << fmt(re) << (im < 0 ? "-" : "+") << fmt(std::abs(im)) << "i";
  return os.str();
}

std::string fmt_scalar(const Json& j) {
  if (j.is_number_float()) return fmt(j.get<double>());
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "-";
  return j.dump();
}

bool is_flat(const Json& j) {
  if (!j.is_array()) return false;
  return std::all_of(j.begin(), j.end(), [](const Json& x) {
    return x.is_primitive() || is_complex(x);
  });
}

std::string fmt_flat(const Json& j) {
  std::string s = "[";
  for (size_t i = 0; i < j.size(); ++i) {
    if (i) s += ", ";
    s += is_complex(j[i]) ? fmt_complex(j[i]) : fmt_scalar(j[i]);
  }
  return s + "]";
}

void render(const Json& j, std::ostream& out, int indent) {
  const std::string pad(indent, ' ');
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (value.is_primitive()) {
        out << pad << key << ": " << fmt_scalar(value) << "\n";
      } else if (is_flat(value)) {
        out << pad << key << ": " << fmt_flat(value) << "\n";
      } else {
        out << pad << key << ":\n";
        render(value, out, indent + 2);
      }
    }
  } else if (j.is_array()) {
    const bool matrix = std::all_of(j.begin(), j.end(), is_flat);
    for (size_t i = 0; i < j.size(); ++i) {
      if (matrix) {
        out << pad << fmt_flat(j[i]) << "\n";
      } else if (j[i].is_primitive()) {
        out << pad << fmt_scalar(j[i]) << "\n";
      } else {
        out << pad << "[" << i << "]\n";
        render(j[i], out, indent + 2);
      }
    }
  } else {
    out << pad << fmt_scalar(j) << "\n";
  }
}

// ---------------------------------------------------------------------------
// File loading

template <class Loader>
auto load(const std::string& path, Loader loader) {
  if (path.empty()) throw UsageError("missing required file argument");
  const Json j = io::read_file(path);
  try {
    return loader(j);
  } catch (const io::FormatError& e) {
    throw io::FormatError(path + ": " + e.what());
  } catch (const Json::exception& e) {
    throw io::FormatError(path + ": " + e.what());
  }
}

Povm load_povm(const std::string& path) {
  return load(path, [](const Json& j) { return io::povm_from_json(j); });
}
DensityMatrix load_state(const std::string& path) {
  return load(path, [](const Json& j) { return io::state_from_json(j); });
}

std::string detect_kind(const Json& j) {
  if (!j.is_object()) return "unknown";
  if (j.contains("fiducials")) return "sic";
  if (j.contains("effects")) return "povm";
  if (j.contains("kraus")) return "channel";
  if (j.contains("dim_s")) return "spec";
  if (j.contains("target_dim")) return "agent";
  if (j.contains("q")) return "table";
  if (j.contains("utility")) return "model";
  if (j.contains("matrix")) return "state";
  if (j.contains("probs")) return "probs";
  return "unknown";
}

Outcome cmd_validate(const std::string& path, std::string kind) {
  const Json j = io::read_file(path);
  if (kind.empty()) kind = detect_kind(j);
  ValidationReport report;
  try {
    if (kind == "povm")
      report = validate_povm(io::povm_from_json(j, false));
    else if (kind == "state")
      report = validate_state(io::state_from_json(j, false));
    else if (kind == "channel")
      report = validate_channel(io::channel_from_json(j, false));
    else if (kind == "sic")
      io::sic_from_json(j);
    else if (kind == "spec")
      io::spec_from_json(j);
    else if (kind == "agent")
      io::agent_from_json(j);
    else if (kind == "table")
      io::table_from_json(j);
    else if (kind == "model")
      io::decision_from_json(j);
    else if (kind == "probs")
      io::sic_probs_from_json(j);
    else
      throw UsageError(path + ": cannot tell what kind of file this is; pass --kind");
  } catch (const io::FormatError& e) {
    report.violations.push_back({e.what(), 0.0});
  } catch (const Json::exception& e) {
    report.violations.push_back({e.what(), 0.0});
  }
  Json body = io::to_json(report);
  body["file"] = path;
  body["kind"] = kind;
  return {body, report.ok() ? 0 : 2};
}

// (p, r) either from raw files or derived from (state, povm) via the SIC.
struct ReferenceInputs {
  std::string probs, conditional, state, povm;
  int dim = 0;
};

struct Reference {
  SicProbVector p;
  StochasticMatrix r;
  std::vector<std::string> labels;
  std::optional<OutcomeDistribution> born;
};

Reference resolve_reference(const ReferenceInputs& in) {
  Reference ref;
  if (!in.state.empty() || !in.povm.empty()) {
    if (in.state.empty() || in.povm.empty())
      throw UsageError("--state and --povm must be given together");
    const DensityMatrix rho = load_state(in.state);
    const Povm p = load_povm(in.povm);
    if (in.dim != 0 && in.dim != rho.dim)
      throw UsageError("--dim " + std::to_string(in.dim) +
                       " does not match the state dimension " + std::to_string(rho.dim));
    const SicPovm sic = build_sic(rho.dim);
    ref.p = state_to_sic_probs(rho, sic);
    ref.r = povm_to_conditional(sic, p);
    ref.labels = p.labels();
    ref.born = born_probabilities(rho, p);
    return ref;
  }
  if (in.probs.empty() || in.conditional.empty())
    throw UsageError("give either --probs and --conditional, or --state and --povm");
  ref.p = load(in.probs, [](const Json& j) { return io::sic_probs_from_json(j); });
  ref.r = load(in.conditional, [](const Json& j) { return io::stochastic_from_json(j); });
  return ref;
}

Outcome cmd_rule(const ReferenceInputs& in, bool quantum) {
  const Reference ref = resolve_reference(in);
  const OutcomeDistribution q = quantum ? urgleichung(ref.p, ref.r, ref.labels)
                                        : classical_rule(ref.p, ref.r, ref.labels);
  Json body = io::to_json(q);
  body["rule"] = quantum ? "urgleichung" : "classical";
  if (ref.born) body["born"] = ref.born->probs;
  return {body, 0};
}

Json discovery_json(const DiscoveryResult& r, bool full) {
  Json j = io::to_json(r);
  if (!full) {
    j.erase("states");
    j.erase("measurements");
  }
  return j;
}

std::pair<int, int> parse_range(const std::string& s) {
  const auto dots = s.find("..");
  try {
    if (dots == std::string::npos) {
      const int d = std::stoi(s);
      return {d, d};
    }
    return {std::stoi(s.substr(0, dots)), std::stoi(s.substr(dots + 2))};
  } catch (const std::exception&) {
    throw UsageError("--scan-dim expects MIN..MAX, got '" + s + "'");
  }
}

AgentState load_agent(const std::string& path) {
  return load(path, [](const Json& j) { return io::agent_from_json(j); });
}

TuningCertificate certificate_for(const AgentState& agent, const std::string& system,
                                  const std::string& cert_path, double tol) {
  if (!cert_path.empty())
    return load(cert_path, [](const Json& j) { return io::certificate_from_json(j); });
  return tune_from_dilations(agent, system, tol);
}

Outcome cmd_demo(const Config& cfg) {
  Json body;
  const SicPovm sic = build_sic(2);
  const DensityMatrix zero{2, basis_projector(2, 0)};
  const Povm zb = computational_basis(2);
  const SicProbVector p = state_to_sic_probs(zero, sic);
  const StochasticMatrix r = povm_to_conditional(sic, zb);
  const double q_classical = classical_rule(p, r).probs[0];
  const double q_quantum = urgleichung(p, r).probs[0];
  body["reference_gap"] = {{"sic_probs", p.probs},
                           {"classical_q0", q_classical},
                           {"urgleichung_q0", q_quantum},
                           {"born_q0", born_probabilities(zero, zb).probs[0]},
                           {"gap", q_quantum - q_classical}};

  Json naimark = Json::array();
  for (const Povm& z : {zb, sic.povm}) {
    const DilationSpec spec = naimark_construct(z);
    const DilationCheck check = is_generalized_dilation(spec.y, z, spec, cfg.tol);
    naimark.push_back({{"outcomes", z.size()},
                       {"ancilla_dim", spec.dim_s},
                       {"residual", check.residual},
                       {"holds", check.holds}});
  }
  body["naimark"] = naimark;

  Json rows = Json::array();
  for (const auto& sc : qubit_taxonomy_scenarios()) {
    for (ExtensionMode mode : {ExtensionMode::exclusive, ExtensionMode::inclusive}) {
      AgentState agent{2, sc.x, {{"S", naimark_apparatus(sc.z)}}, {}};
      const TuningCertificate cert = tune_from_dilations(agent, "S", cfg.tol);
      const auto [next, report] = incorporate(agent, "S", cert, mode, cfg.tol);
      rows.push_back({{"case", to_string(report.extension_case)},
                      {"mode", to_string(mode)},
                      {"final", to_string(report.final_class)},
                      {"comparison", symbol(report.comparison)}});
    }
  }
  body["taxonomy"] = rows;
  return {body, 0};
}

int emit(const Outcome& o, const Config& cfg, std::ostream& out) {
  if (cfg.json)
    out << o.body.dump(2) << "\n";
  else
    render(o.body, out, 0);
  return o.code;
}

int report_error(const std::string& msg, int code, const Config& cfg,
                 std::ostream& out, std::ostream& err) {
  err << "mf: " << msg << "\n";
  if (cfg.json) out << Json{{"error", msg}, {"exit_code", code}}.dump(2) << "\n";
  return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Measurement extension toolkit: SIC representations, dilations, "
               "the post-processing order and agent extension.", "mf"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--tol", cfg.tol, "Numerical tolerance")->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "Seed for every random draw");
  app.add_flag("--json", cfg.json, "Emit one JSON object instead of text");

  std::function<Outcome()> action;

  // validate
  std::string v_file, v_kind;
  auto* validate = app.add_subcommand("validate", "Check a file against its schema invariants");
  validate->add_option("file", v_file, "JSON file")->required();
  validate->add_option("--kind", v_kind, "povm|state|channel|sic|spec|agent|table|model|probs");
  validate->callback([&] { action = [&] { return cmd_validate(v_file, v_kind); }; });

  // born
  std::string b_state, b_povm;
  auto* born = app.add_subcommand("born", "Outcome probabilities Tr(rho E_j)");
  born->add_option("--state", b_state)->required();
  born->add_option("--povm", b_povm)->required();
  born->callback([&] {
    action = [&] {
      return Outcome{io::to_json(born_probabilities(load_state(b_state), load_povm(b_povm))), 0};
    };
  });

  // sic
  int s_dim = 0;
  std::string s_state, s_probs, s_povm;
  auto* sic = app.add_subcommand("sic", "Reference SIC measurements");
  sic->require_subcommand(1);
  auto* sic_build = sic->add_subcommand("build", "Built-in SIC in dimension 2 or 3");
  sic_build->add_option("--dim", s_dim)->required();
  sic_build->callback([&] { action = [&] { return Outcome{io::to_json(build_sic(s_dim)), 0}; }; });
  auto* sic_probs = sic->add_subcommand("probs", "SIC probabilities of a state");
  sic_probs->add_option("--state", s_state)->required();
  sic_probs->callback([&] {
    action = [&] {
      const DensityMatrix rho = load_state(s_state);
      return Outcome{io::to_json(state_to_sic_probs(rho, build_sic(rho.dim))), 0};
    };
  });
  auto* sic_state = sic->add_subcommand("state", "State with the given SIC probabilities");
  sic_state->add_option("--probs", s_probs)->required();
  sic_state->callback([&] {
    action = [&] {
      const SicProbVector p = load(s_probs, [](const Json& j) { return io::sic_probs_from_json(j); });
      return Outcome{io::to_json(sic_probs_to_state(p, build_sic(p.dim))), 0};
    };
  });
  auto* sic_cond = sic->add_subcommand("conditional", "r(j|i) of a POVM against the SIC");
  sic_cond->add_option("--povm", s_povm)->required();
  sic_cond->callback([&] {
    action = [&] {
      const Povm p = load_povm(s_povm);
      return Outcome{io::to_json(povm_to_conditional(build_sic(p.dim), p)), 0};
    };
  });

  // urgleichung / classical
  ReferenceInputs ref_in;
  auto add_reference = [&](CLI::App* sub) {
    sub->add_option("--probs", ref_in.probs, "SIC probability vector file");
    sub->add_option("--conditional", ref_in.conditional, "Conditional r(j|i) file");
    sub->add_option("--state", ref_in.state, "State file (converted through the SIC)");
    sub->add_option("--povm", ref_in.povm, "POVM file (converted through the SIC)");
    sub->add_option("--dim", ref_in.dim, "Expected dimension");
  };
  auto* urg = app.add_subcommand("urgleichung", "Quantum rule from reference probabilities");
  add_reference(urg);
  urg->callback([&] { action = [&] { return cmd_rule(ref_in, true); }; });
  auto* classical = app.add_subcommand("classical", "Law of total probability on the same inputs");
  add_reference(classical);
  classical->callback([&] { action = [&] { return cmd_rule(ref_in, false); }; });

  // compare
  std::string c_left, c_right;
  auto* cmp = app.add_subcommand("compare", "Post-processing order between two POVMs");
  cmp->add_option("--left", c_left)->required();
  cmp->add_option("--right", c_right)->required();
  cmp->callback([&] {
    action = [&] {
      const Povm z = load_povm(c_left), x = load_povm(c_right);
      Json body = io::to_json(compare(z, x, cfg.tol));
      body["trivial"] = {is_trivial_class(z, cfg.tol), is_trivial_class(x, cfg.tol)};
      body["rank_one"] = {is_rank_one_povm(z, cfg.tol), is_rank_one_povm(x, cfg.tol)};
      return Outcome{body, 0};
    };
  });

  // umax
  std::string u_model, u_channel;
  auto* umax = app.add_subcommand("umax", "Maximum expected utility per measurement channel");
  umax->add_option("--model", u_model)->required();
  umax->add_option("--channel", u_channel, "Only this channel");
  umax->callback([&] {
    action = [&] {
      const io::DecisionFile f = load(u_model, [](const Json& j) { return io::decision_from_json(j); });
      Json channels = Json::object();
      for (const auto& [name, q] : f.channels) {
        if (!u_channel.empty() && name != u_channel) continue;
        channels[name] = io::to_json(u_max({f.prior, q, f.utility}));
      }
      if (channels.empty()) throw UsageError("no channel named '" + u_channel + "'");
      return Outcome{Json{{"channels", channels}}, 0};
    };
  });

  // dilate
  std::string d_povm, d_spec, d_y, d_state;
  int d_states = 50;
  auto* dilate = app.add_subcommand("dilate", "Generalized dilations");
  dilate->require_subcommand(1);
  auto* d_naimark = dilate->add_subcommand("naimark", "Naimark dilation of a POVM");
  d_naimark->add_option("--povm", d_povm)->required();
  d_naimark->callback([&] {
    action = [&] { return Outcome{io::to_json(naimark_construct(load_povm(d_povm))), 0}; };
  });
  auto load_spec = [&] {
    return load(d_spec, [](const Json& j) { return io::spec_from_json(j); });
  };
  auto* d_verify = dilate->add_subcommand("verify", "Operator check that a spec dilates a POVM");
  d_verify->add_option("--spec", d_spec)->required();
  d_verify->add_option("--povm", d_povm)->required();
  d_verify->add_option("--y", d_y, "Measurement on S (defaults to the spec's)");
  d_verify->callback([&] {
    action = [&] {
      const DilationSpec spec = load_spec();
      const Povm y = d_y.empty() ? spec.y : load_povm(d_y);
      const DilationCheck c = is_generalized_dilation(y, load_povm(d_povm), spec, cfg.tol);
      return Outcome{Json{{"holds", c.holds}, {"residual", c.residual}, {"tol", cfg.tol}}, 0};
    };
  });
  auto* d_prob = dilate->add_subcommand("probcheck", "Sampled check through both SIC representations");
  d_prob->add_option("--spec", d_spec)->required();
  d_prob->add_option("--povm", d_povm)->required();
  d_prob->add_option("--states", d_states, "Number of random states");
  d_prob->callback([&] {
    action = [&] {
      const DilationSpec spec = load_spec();
      const auto report = check_tuning_probabilistic(spec, load_povm(d_povm), build_sic(spec.dim_t),
                                                     build_sic(spec.dim_s), d_states, cfg.seed, cfg.tol);
      return Outcome{io::to_json(report), 0};
    };
  });
  auto* d_apply = dilate->add_subcommand("apply", "State left on S by the apparatus");
  d_apply->add_option("--spec", d_spec)->required();
  d_apply->add_option("--state", d_state)->required();
  d_apply->callback([&] {
    action = [&] { return Outcome{io::to_json(apply_apparatus(load_spec(), load_state(d_state))), 0}; };
  });
  auto* d_induced = dilate->add_subcommand("induced", "POVM on T simulated by a spec");
  d_induced->add_option("--spec", d_spec)->required();
  d_induced->callback([&] { action = [&] { return Outcome{io::to_json(induced_povm(load_spec())), 0}; }; });

  // tuned
  std::string t_pairs;
  auto* tuned = app.add_subcommand("tuned", "Certificate for a list of (y, z, spec) pairs");
  tuned->add_option("--pairs", t_pairs, "File with {\"pairs\": [{name, y, z, spec}]}")->required();
  tuned->callback([&] {
    action = [&] {
      Json j = io::read_file(t_pairs);
      j["tol"] = cfg.tol;
      const TuningCertificate cert = load(t_pairs, [&](const Json&) { return io::certificate_from_json(j); });
      return Outcome{io::to_json(cert), 0};
    };
  });

  // discover
  std::string g_table, g_scan;
  int g_dim = 0;
  DiscoverOptions g_opts;
  bool g_model = false;
  auto* disc = app.add_subcommand("discover", "Search for a d-dimensional model of a probability table");
  disc->add_option("--table", g_table)->required();
  disc->add_option("--dim", g_dim, "Dimension (defaults to the table's dim_hint)");
  disc->add_option("--scan-dim", g_scan, "Range MIN..MAX of dimensions to try");
  disc->add_option("--restarts", g_opts.restarts);
  disc->add_option("--iters", g_opts.max_iters);
  disc->add_option("--fit-tol", g_opts.tol, "Reproduction tolerance (default 1e-6)");
  disc->add_flag("--model", g_model, "Include the fitted states and POVMs");
  disc->callback([&] {
    action = [&] {
      const ProbabilityTable t = load(g_table, [](const Json& j) { return io::table_from_json(j); });
      g_opts.seed = cfg.seed;
      if (!g_scan.empty()) {
        const auto [lo, hi] = parse_range(g_scan);
        if (lo < 1 || hi < lo) throw UsageError("--scan-dim range is empty");
        Json scans = Json::array();
        Json minimal = nullptr;
        for (int d = lo; d <= hi; ++d) {
          const DiscoveryResult r = discover_system(t, d, g_opts);
          scans.push_back(discovery_json(r, g_model));
          if (r.feasible && minimal.is_null()) minimal = d;
        }
        return Outcome{Json{{"scan", scans}, {"minimal_feasible_dim", minimal}}, 0};
      }
      const int d = g_dim != 0 ? g_dim : t.dim_hint;
      if (d < 1) throw UsageError("no --dim given and the table has no dim_hint");
      return Outcome{discovery_json(discover_system(t, d, g_opts), g_model), 0};
    };
  });

  // agent
  std::string a_file, a_system, a_cert, a_mode = "inclusive", a_meas, a_sysname;
  bool a_force = false;
  auto* agent = app.add_subcommand("agent", "Agent extension: classify, tune, incorporate, deconstruct");
  agent->require_subcommand(1);
  auto* a_classify = agent->add_subcommand("classify", "Extension case of a tuned apparatus");
  a_classify->add_option("--agent", a_file)->required();
  a_classify->add_option("--system", a_system)->required();
  a_classify->add_option("--certificate", a_cert);
  a_classify->callback([&] {
    action = [&] {
      const AgentState st = load_agent(a_file);
      const TuningCertificate cert = certificate_for(st, a_system, a_cert, cfg.tol);
      std::vector<Povm> z;
      for (const auto& e : cert.entries) z.push_back(e.z);
      const ExtensionCase c = classify_extension(members(st.direct), z, cfg.tol);
      Json rows = Json::object();
      for (ExtensionMode m : {ExtensionMode::exclusive, ExtensionMode::inclusive}) {
        const auto [which, sym] = taxonomy_row(c, m);
        rows[to_string(m)] = {{"final_class", to_string(which)}, {"comparison", symbol(sym)}};
      }
      return Outcome{Json{{"case", to_string(c)}, {"tuned", cert.tuned}, {"rows", rows}}, 0};
    };
  });
  auto* a_tune = agent->add_subcommand("tune", "Certificate from an external system's stored dilations");
  a_tune->add_option("--agent", a_file)->required();
  a_tune->add_option("--system", a_system)->required();
  a_tune->callback([&] {
    action = [&] { return Outcome{io::to_json(tune_from_dilations(load_agent(a_file), a_system, cfg.tol)), 0}; };
  });
  auto* a_inc = agent->add_subcommand("incorporate", "Incorporate a tuned external system");
  a_inc->add_option("--agent", a_file)->required();
  a_inc->add_option("--system", a_system)->required();
  a_inc->add_option("--certificate", a_cert, "Defaults to the system's stored dilations");
  a_inc->add_option("--mode", a_mode)->check(CLI::IsMember({"inclusive", "exclusive"}));
  a_inc->add_flag("--force", a_force, "Postulate the extension without a valid certificate");
  a_inc->callback([&] {
    action = [&] {
      const AgentState st = load_agent(a_file);
      const TuningCertificate cert = certificate_for(st, a_system, a_cert, cfg.tol);
      const auto [next, report] = incorporate(st, a_system, cert, mode_from_string(a_mode), cfg.tol, a_force);
      return Outcome{Json{{"agent", io::to_json(next)}, {"report", io::to_json(report)}}, 0};
    };
  });
  auto* a_dec = agent->add_subcommand("deconstruct", "Move a direct measurement out to a proxy system");
  a_dec->add_option("--agent", a_file)->required();
  a_dec->add_option("--measurement", a_meas)->required();
  a_dec->add_option("--system-name", a_sysname);
  a_dec->callback([&] {
    action = [&] { return Outcome{io::to_json(deconstruct(load_agent(a_file), a_meas, a_sysname)), 0}; };
  });

  auto* demo = app.add_subcommand("demo", "Worked qubit example");
  demo->callback([&] { action = [&] { return cmd_demo(cfg); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    return report_error(e.what(), 1, cfg, out, err);
  }

  try {
    return emit(action(), cfg, out);
  } catch (const UsageError& e) {
    return report_error(e.what(), 1, cfg, out, err);
  } catch (const io::FormatError& e) {
    return report_error(e.what(), 2, cfg, out, err);
  } catch (const DimensionError& e) {
    return report_error(e.what(), 2, cfg, out, err);
  } catch (const DomainError& e) {
    return report_error(e.what(), 2, cfg, out, err);
  } catch (const ExtensionRefused& e) {
    return report_error(e.what(), 2, cfg, out, err);
  } catch (const std::invalid_argument& e) {
    return report_error(e.what(), 1, cfg, out, err);
  } catch (const std::exception& e) {
    return report_error(e.what(), 1, cfg, out, err);
  }
}

}  // namespace mf::cli
