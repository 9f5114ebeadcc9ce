#include "mf/io.hpp"

#include <cmath>
#include <fstream>

namespace mf::io {

namespace {

[[noreturn]] void fail(const std::string& what) { throw FormatError(what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) fail("expected a JSON object");
  const auto it = j.find(key);
  if (it == j.end()) fail(std::string("missing field \"") + key + "\"");
  return *it;
}

int int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) fail(std::string("field \"") + key + "\" must be an integer");
  return v.get<int>();
}

double number(const Json& j) {
  if (!j.is_number()) fail("expected a number");
  const double x = j.get<double>();
  if (!std::isfinite(x)) fail("non-finite number");
  return x;
}

Complex complex_from_json(const Json& j) {
  if (j.is_number()) return {number(j), 0.0};
  if (!j.is_array() || j.size() != 2) fail("complex scalar must be [re, im]");
  return {number(j[0]), number(j[1])};
}

std::vector<double> real_list(const Json& j) {
  if (!j.is_array()) fail("expected an array of numbers");
  std::vector<double> out;
  for (const auto& x : j) out.push_back(number(x));
  return out;
}

void require_valid(const ValidationReport& r, const std::string& what) {
  if (!r.ok()) fail(what + ": " + r.violations.front().invariant +
                    " violated (residual " +
                    std::to_string(r.violations.front().magnitude) + ")");
}

std::vector<std::string> labels_field(const Json& j, int n) {
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    for (const auto& l : j["labels"]) {
      if (!l.is_string()) fail("labels must be strings");
      labels.push_back(l.get<std::string>());
    }
    if (static_cast<int>(labels.size()) != n)
      fail("label count does not match effect count");
  }
  return labels;
}

}  // namespace

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw FormatError(path + ": malformed JSON: " + e.what());
  }
}

Json to_json(const ComplexMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k)
      row.push_back({m(i, k).real(), m(i, k).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

ComplexMatrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) fail("matrix must be a nonempty array of rows");
  const size_t cols = j[0].is_array() ? j[0].size() : 0;
  if (cols == 0) fail("matrix rows must be nonempty arrays");
  ComplexMatrix m(j.size(), cols);
  for (size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_array() || j[i].size() != cols) fail("matrix rows differ in length");
    for (size_t k = 0; k < cols; ++k) m(i, k) = complex_from_json(j[i][k]);
  }
  return m;
}

Json to_json(const ComplexVector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back({v(i).real(), v(i).imag()});
  return out;
}

ComplexVector vector_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) fail("vector must be a nonempty array");
  ComplexVector v(j.size());
  for (size_t i = 0; i < j.size(); ++i) v(i) = complex_from_json(j[i]);
  return v;
}

Json to_json(const RealMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(m(i, k));
    rows.push_back(std::move(row));
  }
  return rows;
}

RealMatrix real_matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) fail("matrix must be a nonempty array of rows");
  const size_t cols = j[0].is_array() ? j[0].size() : 0;
  if (cols == 0) fail("matrix rows must be nonempty arrays");
  RealMatrix m(j.size(), cols);
  for (size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_array() || j[i].size() != cols) fail("matrix rows differ in length");
    for (size_t k = 0; k < cols; ++k) m(i, k) = number(j[i][k]);
  }
  return m;
}

Json to_json(const Povm& p) {
  Json effects = Json::array();
  for (const auto& e : p.effects) effects.push_back(to_json(e.matrix));
  return {{"dim", p.dim}, {"labels", p.labels()}, {"effects", effects}};
}

Povm povm_from_json(const Json& j, bool check) {
  const int dim = int_field(j, "dim");
  const Json& effects = field(j, "effects");
  if (!effects.is_array() || effects.empty()) fail("\"effects\" must be a nonempty array");
  std::vector<ComplexMatrix> mats;
  for (const auto& e : effects) mats.push_back(matrix_from_json(e));
  Povm p = Povm::from_matrices(std::move(mats), labels_field(j, static_cast<int>(effects.size())));
  p.dim = dim;
  if (check) require_valid(validate_povm(p), "POVM");
  return p;
}

Json to_json(const DensityMatrix& rho) {
  return {{"dim", rho.dim}, {"matrix", to_json(rho.matrix)}};
}

DensityMatrix state_from_json(const Json& j, bool check) {
  DensityMatrix rho{int_field(j, "dim"), matrix_from_json(field(j, "matrix"))};
  if (!check) return rho;
  require_valid(validate_state(rho), "state");
  rho.matrix = hermitian_part(rho.matrix);
  return rho;
}

Json to_json(const QuantumChannel& phi) {
  Json kraus = Json::array();
  for (const auto& k : phi.kraus) kraus.push_back(to_json(k));
  return {{"dim_in", phi.dim_in}, {"dim_out", phi.dim_out}, {"kraus", kraus}};
}

QuantumChannel channel_from_json(const Json& j, bool check) {
  QuantumChannel phi{int_field(j, "dim_in"), int_field(j, "dim_out"), {}};
  const Json& kraus = field(j, "kraus");
  if (!kraus.is_array() || kraus.empty()) fail("\"kraus\" must be a nonempty array");
  for (const auto& k : kraus) phi.kraus.push_back(matrix_from_json(k));
  if (check) require_valid(validate_channel(phi), "channel");
  return phi;
}

Json to_json(const StochasticMatrix& lam) {
  return {{"n_in", lam.n_in()}, {"n_out", lam.n_out()},
          {"entries", to_json(lam.entries())}};
}

StochasticMatrix stochastic_from_json(const Json& j) {
  const Json& entries = j.is_object() ? field(j, "entries") : j;
  StochasticMatrix lam(real_matrix_from_json(entries));
  if (lam.stochasticity_residual() > kProbabilityTol)
    fail("stochastic matrix: column-stochasticity violated (residual " +
         std::to_string(lam.stochasticity_residual()) + ")");
  return lam;
}

Json to_json(const OutcomeDistribution& q) {
  return {{"labels", q.labels}, {"probs", q.probs}};
}

Json to_json(const SicPovm& sic) {
  Json j = to_json(sic.povm);
  Json fids = Json::array();
  for (const auto& f : sic.fiducials) fids.push_back(to_json(f));
  j["fiducials"] = fids;
  return j;
}

SicPovm sic_from_json(const Json& j) {
  SicPovm sic;
  sic.povm = povm_from_json(j);
  sic.dim = sic.povm.dim;
  for (const auto& f : field(j, "fiducials")) sic.fiducials.push_back(vector_from_json(f));
  if (sic.size() != sic.dim * sic.dim) fail("SIC must have d² fiducials");
  if (sic_overlap_residual(sic) > 1e-9) fail("SIC: equal-overlap invariant violated");
  return sic;
}

Json to_json(const SicProbVector& p) {
  return {{"dim", p.dim}, {"probs", p.probs}};
}

SicProbVector sic_probs_from_json(const Json& j) {
  SicProbVector p{int_field(j, "dim"), real_list(field(j, "probs"))};
  if (static_cast<int>(p.probs.size()) != p.dim * p.dim)
    fail("SIC probability vector must have d² entries");
  double sum = 0.0;
  for (double x : p.probs) {
    if (x < -kProbabilityTol) fail("SIC probability vector: nonnegative violated");
    if (x > 1.0 / p.dim + kProbabilityTol)
      fail("SIC probability vector: entry exceeds 1/d");
    sum += x;
  }
  if (std::abs(sum - 1.0) > kProbabilityTol) fail("SIC probability vector: normalized violated");
  return p;
}

Json to_json(const ProbabilityTable& t) {
  Json meas = Json::array();
  for (const auto& m : t.measurements)
    meas.push_back({{"label", m.label}, {"n_outcomes", m.n_outcomes}});
  return {{"dim_hint", t.dim_hint},
          {"preparations", t.preparations()},
          {"measurements", meas},
          {"q", t.q}};
}

ProbabilityTable table_from_json(const Json& j) {
  ProbabilityTable t;
  t.dim_hint = j.contains("dim_hint") ? int_field(j, "dim_hint") : 0;
  const int preps = int_field(j, "preparations");
  for (const auto& m : field(j, "measurements")) {
    const Json& label = field(m, "label");
    t.measurements.push_back(
        {label.is_string() ? label.get<std::string>() : label.dump(),
         int_field(m, "n_outcomes")});
  }
  const Json& q = field(j, "q");
  if (!q.is_array()) fail("\"q\" must be an array");
  for (const auto& row : q) {
    std::vector<std::vector<double>> r;
    for (const auto& dist : row) r.push_back(real_list(dist));
    t.q.push_back(std::move(r));
  }
  if (t.preparations() != preps) fail("\"q\" row count differs from \"preparations\"");
  require_valid(validate_table(t), "probability table");
  return t;
}

Json to_json(const DiscoveryResult& r) {
  Json states = Json::array(), meas = Json::array();
  for (const auto& s : r.states) states.push_back(to_json(s));
  for (const auto& m : r.measurements) meas.push_back(to_json(m));
  return {{"feasible", r.feasible}, {"dim", r.dim},        {"residual", r.residual},
          {"best_restart", r.best_restart}, {"states", states}, {"measurements", meas}};
}

Json to_json(const DilationSpec& spec) {
  return {{"dim_s", spec.dim_s}, {"dim_t", spec.dim_t}, {"sigma", to_json(spec.sigma)},
          {"phi", to_json(spec.phi)}, {"y", to_json(spec.y)}};
}

DilationSpec spec_from_json(const Json& j) {
  DilationSpec spec;
  spec.dim_s = int_field(j, "dim_s");
  spec.dim_t = int_field(j, "dim_t");
  spec.sigma = state_from_json(field(j, "sigma"));
  spec.phi = channel_from_json(field(j, "phi"));
  spec.y = povm_from_json(field(j, "y"));
  require_valid(validate_spec(spec), "dilation");
  return spec;
}

Json to_json(const TuningCertificate& cert) {
  Json pairs = Json::array();
  for (const auto& e : cert.entries)
    pairs.push_back({{"name", e.name}, {"residual", e.residual}, {"holds", e.holds},
                     {"y", to_json(e.y)}, {"z", to_json(e.z)}, {"spec", to_json(e.spec)}});
  return {{"tol", cert.tol}, {"tuned", cert.tuned}, {"vacuous", cert.vacuous},
          {"pairs", pairs}};
}

TuningCertificate certificate_from_json(const Json& j) {
  TuningCertificate cert;
  cert.tol = number(field(j, "tol"));
  const Json& pairs = field(j, "pairs");
  if (!pairs.is_array()) fail("\"pairs\" must be an array");
  std::vector<TuningPair> tp;
  std::vector<DilationSpec> specs;
  for (const auto& p : pairs) {
    const Json& name = field(p, "name");
    tp.push_back({name.is_string() ? name.get<std::string>() : "",
                  povm_from_json(field(p, "y")), povm_from_json(field(p, "z"))});
    specs.push_back(spec_from_json(field(p, "spec")));
  }
  // Residuals are recomputed rather than trusted.
  return verify_tuned(tp, specs, cert.tol);
}

Json to_json(const ProbabilisticTuningReport& r) {
  return {{"n_states", r.n_states}, {"max_gap", r.max_gap}, {"agrees", r.agrees},
          {"vacuous", r.vacuous}};
}

Json to_json(const OrderVerdict& v) {
  Json j = {{"relation", to_string(v.relation)}, {"lp_residual", v.lp_residual}};
  j["witness_forward"] = v.witness_forward ? to_json(*v.witness_forward) : Json();
  j["witness_backward"] = v.witness_backward ? to_json(*v.witness_backward) : Json();
  return j;
}

Json to_json(const GeqResult& r) {
  Json j = {{"holds", r.holds}, {"lp_residual", r.lp_residual},
            {"witness_residual", r.witness_residual}};
  j["witness"] = r.witness ? to_json(*r.witness) : Json();
  return j;
}

Json to_json(const UmaxResult& r) {
  return {{"value", r.value}, {"choice", r.choice}, {"strategy", to_json(r.strategy)}};
}

Json to_json(const BlackwellReport& r) {
  return {{"geq_holds", r.geq_holds},
          {"n_utilities", r.n_utilities},
          {"monotonicity_violations", r.monotonicity_violations},
          {"reversals", r.reversals},
          {"inconsistencies", r.inconsistencies},
          {"max_reversal", r.max_reversal},
          {"vacuous", r.vacuous},
          {"consistent", r.consistent}};
}

DecisionFile decision_from_json(const Json& j) {
  DecisionFile f;
  f.prior = real_list(field(j, "prior"));
  f.utility = real_matrix_from_json(field(j, "utility"));
  const Json& channels = field(j, "channels");
  if (!channels.is_object() || channels.empty()) fail("\"channels\" must be a nonempty object");
  for (const auto& [name, m] : channels.items()) {
    StochasticMatrix q = stochastic_from_json(m);
    DecisionModel model{f.prior, q, f.utility};
    require_valid(validate_model(model), "decision model channel '" + name + "'");
    f.channels.emplace(name, std::move(q));
  }
  return f;
}

namespace {

Json set_to_json(const MeasurementSet& set) {
  Json j = Json::object();
  for (const auto& [name, p] : set) j[name] = to_json(p);
  return j;
}

MeasurementSet set_from_json(const Json& j) {
  if (!j.is_object()) fail("measurement set must be an object keyed by name");
  MeasurementSet set;
  for (const auto& [name, p] : j.items()) set.emplace(name, povm_from_json(p));
  return set;
}

}  // namespace

Json to_json(const AgentState& agent) {
  Json external = Json::object();
  for (const auto& [name, ext] : agent.external) {
    Json e = {{"dim", ext.dim}, {"measurements", set_to_json(ext.measurements)}};
    if (!ext.dilations.empty()) {
      Json dil = Json::object();
      for (const auto& [m, spec] : ext.dilations) dil[m] = to_json(spec);
      e["dilations"] = dil;
    }
    external[name] = e;
  }
  Json history = Json::array();
  for (const auto& h : agent.history) history.push_back({{"kind", h.kind}, {"detail", h.detail}});
  return {{"target_dim", agent.target_dim},
          {"direct", set_to_json(agent.direct)},
          {"external", external},
          {"history", history}};
}

AgentState agent_from_json(const Json& j) {
  AgentState agent;
  agent.target_dim = int_field(j, "target_dim");
  if (j.contains("direct")) agent.direct = set_from_json(j["direct"]);
  if (j.contains("external")) {
    for (const auto& [name, e] : j["external"].items()) {
      ExternalSystem ext;
      ext.dim = int_field(e, "dim");
      ext.measurements = set_from_json(field(e, "measurements"));
      if (e.contains("dilations"))
        for (const auto& [m, spec] : e["dilations"].items())
          ext.dilations.emplace(m, spec_from_json(spec));
      agent.external.emplace(name, std::move(ext));
    }
  }
  if (j.contains("history"))
    for (const auto& h : j["history"]) {
      if (h.is_string())
        agent.history.push_back({"note", h.get<std::string>()});
      else
        agent.history.push_back({field(h, "kind").get<std::string>(),
                                 field(h, "detail").get<std::string>()});
    }
  require_valid(validate_agent(agent), "agent");
  return agent;
}

Json to_json(const ExtensionReport& r) {
  return {{"mode", to_string(r.mode)},
          {"case", to_string(r.extension_case)},
          {"final_class", to_string(r.final_class)},
          {"final_set", set_to_json(r.final_set)},
          {"comparison", symbol(r.comparison)},
          {"forced", r.forced}};
}

Json to_json(const ValidationReport& r) {
  Json v = Json::array();
  for (const auto& x : r.violations) {
    Json e = {{"invariant", x.invariant}, {"magnitude", x.magnitude}};
    if (x.effect >= 0) e["effect"] = x.effect;
    if (x.row >= 0) e["entry"] = {x.row, x.col};
    v.push_back(e);
  }
  return {{"valid", r.ok()}, {"violations", v}};
}

}  // namespace mf::io
