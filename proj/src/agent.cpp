#include "mf/agent.hpp"

#include <sstream>

namespace mf {

std::vector<Povm> members(const MeasurementSet& set) {
  std::vector<Povm> out;
  out.reserve(set.size());
  for (const auto& [name, p] : set) out.push_back(p);
  return out;
}

ValidationReport validate_agent(const AgentState& agent) {
  ValidationReport r;
  if (agent.target_dim < 1)
    r.violations.push_back({"target_dim", static_cast<double>(agent.target_dim)});
  for (const auto& [name, p] : agent.direct) {
    if (p.dim != agent.target_dim) {
      r.violations.push_back({"direct '" + name + "' dimension",
                              static_cast<double>(p.dim)});
      continue;
    }
    for (auto v : validate_povm(p).violations) {
      v.invariant = "direct '" + name + "' " + v.invariant;
      r.violations.push_back(v);
    }
  }
  for (const auto& [sys, ext] : agent.external)
    for (const auto& [name, p] : ext.measurements) {
      if (p.dim != ext.dim) {
        r.violations.push_back({"external '" + sys + "/" + name + "' dimension",
                                static_cast<double>(p.dim)});
        continue;
      }
      for (auto v : validate_povm(p).violations) {
        v.invariant = "external '" + sys + "/" + name + "' " + v.invariant;
        r.violations.push_back(v);
      }
    }
  return r;
}

std::string to_string(ExtensionCase c) {
  switch (c) {
    case ExtensionCase::downgrade: return "downgrade";
    case ExtensionCase::upgrade: return "upgrade";
    case ExtensionCase::duplicate: return "duplicate";
    case ExtensionCase::innovation: return "innovation";
  }
  return "innovation";
}

std::string to_string(ExtensionMode m) {
  return m == ExtensionMode::inclusive ? "inclusive" : "exclusive";
}

std::string to_string(FinalClass f) {
  switch (f) {
    case FinalClass::original: return "{X^a}";
    case FinalClass::incorporated: return "{Z^b}";
    case FinalClass::both: return "{X^a, Z^b}";
  }
  return "{X^a}";
}

std::string symbol(Comparison c) {
  switch (c) {
    case Comparison::less: return "<";
    case Comparison::greater: return ">";
    case Comparison::equal: return "=";
    case Comparison::incomparable: return "≠";
  }
  return "≠";
}

ExtensionCase case_from_string(const std::string& s) {
  if (s == "downgrade") return ExtensionCase::downgrade;
  if (s == "upgrade") return ExtensionCase::upgrade;
  if (s == "duplicate") return ExtensionCase::duplicate;
  if (s == "innovation") return ExtensionCase::innovation;
  throw std::invalid_argument("unknown extension case '" + s + "'");
}

ExtensionMode mode_from_string(const std::string& s) {
  if (s == "inclusive") return ExtensionMode::inclusive;
  if (s == "exclusive") return ExtensionMode::exclusive;
  throw std::invalid_argument("unknown extension mode '" + s + "'");
}

ExtensionCase classify_extension(const std::vector<Povm>& x_set,
                                 const std::vector<Povm>& z_set, double tol) {
  for (const auto& p : x_set)
    for (const auto& q : z_set)
      if (p.dim != q.dim)
        throw DimensionError("classify_extension: measurement sets act on "
                             "different dimensions");
  switch (compare_sets(z_set, x_set, tol)) {
    case Relation::equivalent: return ExtensionCase::duplicate;
    case Relation::geq: return ExtensionCase::upgrade;
    case Relation::leq: return ExtensionCase::downgrade;
    case Relation::incomparable: return ExtensionCase::innovation;
  }
  return ExtensionCase::innovation;
}

std::pair<FinalClass, Comparison> taxonomy_row(ExtensionCase c,
                                               ExtensionMode mode) {
  const bool inclusive = mode == ExtensionMode::inclusive;
  switch (c) {
    case ExtensionCase::downgrade:
      return inclusive ? std::pair{FinalClass::original, Comparison::equal}
                       : std::pair{FinalClass::incorporated, Comparison::less};
    case ExtensionCase::duplicate:
      return {FinalClass::original, Comparison::equal};
    case ExtensionCase::upgrade:
      return {FinalClass::incorporated, Comparison::greater};
    case ExtensionCase::innovation:
      return inclusive
                 ? std::pair{FinalClass::both, Comparison::incomparable}
                 : std::pair{FinalClass::incorporated, Comparison::incomparable};
  }
  return {FinalClass::both, Comparison::incomparable};
}

FinalMeasurements final_measurements(ExtensionCase c, ExtensionMode mode,
                                     const std::vector<Povm>& x_set,
                                     const std::vector<Povm>& z_set,
                                     double tol) {
  const ExtensionCase actual = classify_extension(x_set, z_set, tol);
  if (actual != c)
    throw std::invalid_argument("final_measurements: measurement sets form a " +
                                to_string(actual) + ", not a " + to_string(c));
  const auto [which, cmp] = taxonomy_row(c, mode);
  FinalMeasurements out{which, {}, cmp};
  if (which != FinalClass::incorporated)
    out.set.insert(out.set.end(), x_set.begin(), x_set.end());
  if (which != FinalClass::original)
    out.set.insert(out.set.end(), z_set.begin(), z_set.end());
  return out;
}

namespace {

std::string describe(const MeasurementSet& set) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [name, p] : set) {
    os << (first ? "" : ", ") << name;
    first = false;
  }
  os << "}";
  return os.str();
}

bool same_operator_list(const Povm& a, const Povm& b, double tol) {
  if (a.dim != b.dim || a.size() != b.size()) return false;
  for (int i = 0; i < a.size(); ++i)
    if (max_abs(a[i] - b[i]) > tol) return false;
  return true;
}

}  // namespace

std::pair<AgentState, ExtensionReport> incorporate(
    const AgentState& agent, const std::string& system_name,
    const TuningCertificate& certificate, ExtensionMode mode, double tol,
    bool force) {
  const auto sys = agent.external.find(system_name);
  if (sys == agent.external.end())
    throw ExtensionRefused("no external system named '" + system_name + "'");

  if (!force) {
    if (certificate.vacuous || certificate.entries.empty())
      throw ExtensionRefused(
          "tuning precedes extension: certificate is vacuous");
    for (const auto& e : certificate.entries) {
      if (!e.holds || e.residual > certificate.tol)
        throw ExtensionRefused("tuning precedes extension: pair '" + e.name +
                               "' has residual " + std::to_string(e.residual));
      bool found = false;
      for (const auto& [name, y] : sys->second.measurements)
        if (same_operator_list(y, e.y, std::max(tol, certificate.tol))) {
          found = true;
          break;
        }
      if (!found)
        throw ExtensionRefused("tuning precedes extension: pair '" + e.name +
                               "' does not use a measurement of system '" +
                               system_name + "'");
    }
  }

  MeasurementSet z_named;
  for (size_t i = 0; i < certificate.entries.size(); ++i) {
    const auto& e = certificate.entries[i];
    if (e.z.dim != agent.target_dim)
      throw DimensionError("incorporate: tuned measurement '" + e.name +
                           "' acts on dimension " + std::to_string(e.z.dim));
    std::string name =
        e.name.empty() ? system_name + "." + std::to_string(i) : e.name;
    if (z_named.count(name)) name = system_name + "." + std::to_string(i);
    z_named.emplace(name, e.z);
  }

  const std::vector<Povm> x_set = members(agent.direct);
  const std::vector<Povm> z_set = members(z_named);
  const ExtensionCase c = classify_extension(x_set, z_set, tol);
  const auto [which, cmp] = taxonomy_row(c, mode);

  AgentState next = agent;
  next.external.erase(system_name);
  if (mode == ExtensionMode::exclusive) next.direct.clear();
  for (const auto& [name, p] : z_named) {
    std::string key = name;
    if (next.direct.count(key)) key = system_name + ":" + name;
    next.direct.emplace(key, p);
  }

  ExtensionReport report;
  report.mode = mode;
  report.extension_case = c;
  report.final_class = which;
  report.comparison = cmp;
  report.forced = force;
  if (which != FinalClass::incorporated)
    report.final_set.insert(agent.direct.begin(), agent.direct.end());
  if (which != FinalClass::original)
    for (const auto& [name, p] : z_named) {
      const std::string key =
          report.final_set.count(name) ? system_name + ":" + name : name;
      report.final_set.emplace(key, p);
    }

  next.history.push_back(
      {force ? "incorporate-forced" : "incorporate",
       to_string(mode) + " " + to_string(c) + " of system '" + system_name +
           "': " + describe(z_named) + " -> final class " + to_string(which) +
           " (" + symbol(cmp) + ")"});
  return {std::move(next), std::move(report)};
}

TuningCertificate tune_from_dilations(const AgentState& agent,
                                      const std::string& system_name,
                                      double tol) {
  const auto sys = agent.external.find(system_name);
  if (sys == agent.external.end())
    throw std::invalid_argument("no external system named '" + system_name + "'");
  std::vector<TuningPair> pairs;
  std::vector<DilationSpec> specs;
  for (const auto& [name, spec] : sys->second.dilations) {
    const auto y = sys->second.measurements.find(name);
    if (y == sys->second.measurements.end()) continue;
    pairs.push_back({name, y->second, induced_povm(spec)});
    specs.push_back(spec);
  }
  return verify_tuned(pairs, specs, tol);
}

AgentState deconstruct(const AgentState& agent, const std::string& name,
                       std::string system_name) {
  const auto it = agent.direct.find(name);
  if (it == agent.direct.end())
    throw std::invalid_argument("deconstruct: no direct measurement named '" +
                                name + "'");
  if (system_name.empty()) system_name = "D:" + name;
  while (agent.external.count(system_name)) system_name += "'";

  DilationSpec spec = naimark_construct(it->second);
  ExternalSystem proxy;
  proxy.dim = spec.dim_s;
  proxy.measurements.emplace(name, spec.y);
  proxy.dilations.emplace(name, std::move(spec));

  AgentState next = agent;
  next.direct.erase(name);
  next.external.emplace(system_name, std::move(proxy));
  next.history.push_back({"deconstruct", "measurement '" + name +
                                             "' moved to proxy system '" +
                                             system_name + "'"});
  return next;
}

ExternalSystem naimark_apparatus(const MeasurementSet& targets) {
  ExternalSystem sys;
  for (const auto& [name, z] : targets) {
    DilationSpec spec = naimark_construct(z);
    if (sys.dim != 0 && sys.dim != spec.dim_s)
      throw DimensionError("naimark_apparatus: targets differ in outcome count");
    sys.dim = spec.dim_s;
    sys.measurements.emplace(name, spec.y);
    sys.dilations.emplace(name, std::move(spec));
  }
  return sys;
}

std::vector<TaxonomyScenario> qubit_taxonomy_scenarios() {
  const Povm zb = computational_basis(2);
  const double h = 0.5;
  ComplexMatrix plus(2, 2), minus(2, 2);
  plus << h, h, h, h;
  minus << h, -h, -h, h;
  const Povm xb = Povm::from_matrices({plus, minus}, {"+", "-"});
  Povm flipped = zb;
  std::swap(flipped.effects[0], flipped.effects[1]);
  const Povm trivial = trivial_povm(2);

  return {
      {ExtensionCase::downgrade, {{"Z", zb}}, {{"coin", trivial}}},
      {ExtensionCase::duplicate, {{"Z", zb}}, {{"Z'", flipped}}},
      {ExtensionCase::upgrade, {{"coin", trivial}}, {{"Z'", zb}}},
      {ExtensionCase::innovation, {{"Z", zb}}, {{"X", xb}}},
  };
}

}  // namespace mf
