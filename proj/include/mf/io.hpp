// JSON encodings. Complex scalars are [re, im]; matrices are nested
// row-major arrays of complex scalars.
#pragma once

#include <stdexcept>
#include <string>

#include "json.hpp"
#include "mf/agent.hpp"
#include "mf/dilate.hpp"
#include "mf/measure.hpp"
#include "mf/order.hpp"
#include "mf/sicrep.hpp"

namespace mf::io {

using Json = nlohmann::json;

/// Malformed input: unparsable JSON, wrong schema, or a violated invariant.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json read_file(const std::string& path);

Json to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const Json& j);
Json to_json(const ComplexVector& v);
ComplexVector vector_from_json(const Json& j);
Json to_json(const RealMatrix& m);
RealMatrix real_matrix_from_json(const Json& j);

// The *_from_json loaders check every type invariant and throw FormatError
// naming the first violation.
Json to_json(const Povm& p);
Povm povm_from_json(const Json& j, bool check = true);
Json to_json(const DensityMatrix& rho);
DensityMatrix state_from_json(const Json& j, bool check = true);
Json to_json(const QuantumChannel& phi);
QuantumChannel channel_from_json(const Json& j, bool check = true);
Json to_json(const StochasticMatrix& lam);
StochasticMatrix stochastic_from_json(const Json& j);
Json to_json(const OutcomeDistribution& q);

Json to_json(const SicPovm& sic);
SicPovm sic_from_json(const Json& j);
Json to_json(const SicProbVector& p);
SicProbVector sic_probs_from_json(const Json& j);

Json to_json(const ProbabilityTable& t);
ProbabilityTable table_from_json(const Json& j);
Json to_json(const DiscoveryResult& r);

Json to_json(const DilationSpec& spec);
DilationSpec spec_from_json(const Json& j);
Json to_json(const TuningCertificate& cert);
TuningCertificate certificate_from_json(const Json& j);
Json to_json(const ProbabilisticTuningReport& r);

Json to_json(const OrderVerdict& v);
Json to_json(const GeqResult& r);
Json to_json(const UmaxResult& r);
Json to_json(const BlackwellReport& r);

/// {"prior": [...], "utility": [[...]], "channels": {name: [[...]]}}; each
/// channel matrix has one row per outcome x and one column per w.
struct DecisionFile {
  std::vector<double> prior;
  RealMatrix utility;
  std::map<std::string, StochasticMatrix> channels;
};
DecisionFile decision_from_json(const Json& j);

Json to_json(const AgentState& agent);
AgentState agent_from_json(const Json& j);
Json to_json(const ExtensionReport& r);

Json to_json(const ValidationReport& r);

}  // namespace mf::io
