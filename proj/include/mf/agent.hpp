// An agent's measurement repertoire on a target system, and how it changes
// when a tuned external apparatus is incorporated (or an existing direct
// measurement is split back out into an apparatus).
#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mf/dilate.hpp"
#include "mf/order.hpp"

namespace mf {

using MeasurementSet = std::map<std::string, Povm>;

std::vector<Povm> members(const MeasurementSet& set);

struct ExternalSystem {
  int dim = 0;
  MeasurementSet measurements;
  /// Known dilations for some of the measurements, keyed by measurement
  /// name. The induced POVM of each is the target measurement it simulates.
  std::map<std::string, DilationSpec> dilations;
};

struct HistoryEvent {
  std::string kind;  // "incorporate", "incorporate-forced", "deconstruct"
  std::string detail;
};

struct AgentState {
  int target_dim = 0;
  MeasurementSet direct;
  std::map<std::string, ExternalSystem> external;
  std::vector<HistoryEvent> history;
};

ValidationReport validate_agent(const AgentState& agent);

enum class ExtensionCase { downgrade, upgrade, duplicate, innovation };
enum class ExtensionMode { inclusive, exclusive };
enum class Comparison { less, greater, equal, incomparable };
/// Which side of the extension the final equivalence class is represented by.
enum class FinalClass { original, incorporated, both };

std::string to_string(ExtensionCase c);
std::string to_string(ExtensionMode m);
std::string to_string(FinalClass f);
/// "<", ">", "=", "≠"
std::string symbol(Comparison c);
ExtensionCase case_from_string(const std::string& s);
ExtensionMode mode_from_string(const std::string& s);

/// Downgrade / upgrade / duplicate / innovation of z_set relative to x_set
/// under the set-level order.
ExtensionCase classify_extension(const std::vector<Povm>& x_set,
                                 const std::vector<Povm>& z_set, double tol);

struct FinalMeasurements {
  FinalClass which = FinalClass::original;
  std::vector<Povm> set;
  Comparison comparison = Comparison::equal;
};

/// Row of the extension taxonomy for (case, mode). Throws
/// std::invalid_argument when `c` is not the case of (x_set, z_set).
FinalMeasurements final_measurements(ExtensionCase c, ExtensionMode mode,
                                     const std::vector<Povm>& x_set,
                                     const std::vector<Povm>& z_set,
                                     double tol);

/// Table lookup without the consistency check.
std::pair<FinalClass, Comparison> taxonomy_row(ExtensionCase c,
                                               ExtensionMode mode);

struct ExtensionReport {
  ExtensionMode mode = ExtensionMode::inclusive;
  ExtensionCase extension_case = ExtensionCase::duplicate;
  FinalClass final_class = FinalClass::original;
  MeasurementSet final_set;  // class representative
  Comparison comparison = Comparison::equal;
  bool forced = false;
};

class ExtensionRefused : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Incorporates the measurements a tuning certificate pairs with the
/// external system `system_name`. The system is removed from the external
/// map; the direct set becomes X ∪ Z (inclusive) or Z (exclusive).
/// Refuses with ExtensionRefused unless the certificate is non-vacuous, tuned
/// and its S-side measurements belong to the system, or `force` is set.
std::pair<AgentState, ExtensionReport> incorporate(
    const AgentState& agent, const std::string& system_name,
    const TuningCertificate& certificate, ExtensionMode mode, double tol,
    bool force = false);

/// Certificate built from the dilations stored on an external system.
TuningCertificate tune_from_dilations(const AgentState& agent,
                                      const std::string& system_name,
                                      double tol);

/// Replaces direct measurement `name` by an external proxy system carrying
/// its Naimark dilation. The proxy is named `system_name`, or "D:<name>".
AgentState deconstruct(const AgentState& agent, const std::string& name,
                       std::string system_name = {});

/// External system whose measurements are Naimark dilations of `targets`
/// (all with the same outcome count), with the dilations stored.
ExternalSystem naimark_apparatus(const MeasurementSet& targets);

/// Qubit fixtures, one per extension case: X and Z sets with known relation.
struct TaxonomyScenario {
  ExtensionCase extension_case;
  MeasurementSet x;
  MeasurementSet z;
};
std::vector<TaxonomyScenario> qubit_taxonomy_scenarios();

}  // namespace mf
