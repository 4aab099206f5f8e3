// Copyright 2026 The quditcast Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "quditcast/cloning.hpp"
#include "quditcast/criteria.hpp"
#include "quditcast/families.hpp"
#include "quditcast/measures.hpp"

// Orchestration: parameter sweeps over the state families, threshold
// location by bisection, the random-state survey, closed-form comparison
// tables, and CSV/JSON emission. All outputs are deterministic: fixed
// column orders, 12 significant digits, per-sample RNG streams derived
// from the master seed.

namespace quditcast {

inline constexpr const char* artifact_version = "quditcast 0.1.0";

enum class BroadcastClass { None, NonOptimal, SubOptimal, Optimal };
const char* to_string(BroadcastClass c);

struct CriteriaConfig {
  double tol = criterion_tol;
};

// One row of a parameter sweep.
struct ScanRecord {
  std::string family;
  std::vector<std::pair<std::string, double>> params;
  Verdict verdict_nonlocal;     // PH on rho_14 (2x3: conclusive)
  Verdict verdict_alice_local;  // PH on rho_13 (2x2: conclusive)
  Verdict verdict_bob_local;    // PH, refined by realignment, on rho_24
  bool pptes_bob = false;
  bool abs_sep_alice = false;
  double discord_nonlocal = 0;
  double coherence_nonlocal = 0;
  BroadcastClass broadcast_class = BroadcastClass::None;
};

struct GridSpec {
  double lo = 0, hi = 0, step = 0;
  std::vector<double> points() const;  // inclusive of both ends
};

// Sweeps evaluate each grid point independently through the cached
// broadcast channel. Out-of-domain grids raise ValidationError listing the
// offending points; tpcs grid combinations with beta < 0 (outside the
// admissible triangle) are skipped.
std::vector<ScanRecord> sweep_mems(const GridSpec& r_grid,
                                   const CriteriaConfig& cfg = {});
std::vector<ScanRecord> sweep_tpcs(const GridSpec& alpha_grid,
                                   const GridSpec& gamma_grid,
                                   const CriteriaConfig& cfg = {});

struct ThresholdResult {
  std::string family;
  std::string predicate;
  double lo = 0, hi = 0;  // final bracket, |hi - lo| <= tol
  double root = 0;        // bracket midpoint
  double tol = 0;
  int evaluations = 0;
};

// Bisection of a boolean predicate over one scalar parameter. The
// predicate must differ at the endpoints (else bracket error) and be
// monotone on the bracket; monotonicity is screened by sampling 16
// interior points and aborting with a diagnostic on more than one flip.
ThresholdResult locate_threshold(const std::string& family,
                                 const std::string& predicate_name,
                                 const std::function<bool(double)>& pred,
                                 double lo, double hi, double tol,
                                 bool check_monotone = true);

// Named single-parameter predicates for the threshold CLI: the parameter
// is r for mems and alpha for tpcs (gamma held fixed).
//   nonlocal-entangled      PH finds rho_14 entangled
//   alice-local-separable   PH finds rho_13 separable
//   bob-ppt                 rho_24 partial transpose is non-negative
//   locals-separable        alice-local-separable && bob-ppt
//   bob-detected-entangled  rho_24 NPT or realignment above 1
//   pptes-bob               pptes_detect on rho_24
//   abs-sep-alice           rho_13 absolutely separable
//   nonbroadcastable-input  stated inequality on the input state
std::function<bool(double)> family_predicate(const std::string& family,
                                             const std::string& name,
                                             double gamma = 0.0,
                                             double tol = criterion_tol);
std::vector<std::string> predicate_names();

struct SurveyOptions {
  long samples = 0;
  std::uint64_t seed = 0;
  int d = 3;
  // Environment dimension of the induced measure. The default 36 keeps the
  // ensemble mixed enough that the stated non-broadcastability inequality
  // has a non-empty class; recorded in output metadata.
  int rank_envelope = 36;
  double tol = criterion_tol;
};

struct SurveyRecord {
  long index = 0;
  double norm_x = 0, norm_y = 0, t_colsum = 0;  // expectation-value norms
  double stated_lhs = 0, stated_rhs = 0;        // inequality sides (d = 3 only)
  bool nonbroadcastable = false;
  double scaled_bloch_lhs = 0;  // bloch-norm LHS of the scaled nonlocal output
  bool scaled_separable = false;
};

struct SurveyResult {
  SurveyOptions opts;
  long n_nonbroadcastable = 0;
  long n_other = 0;
  std::vector<SurveyRecord> records;
};

// Haar survey over 2 x d inputs. For d = 3 the class split is the stated
// inequality; for other d (where that inequality is undefined) the
// bloch-norm verdict on the scaled nonlocal output takes its place.
SurveyResult survey(const SurveyOptions& opts);

struct TableRow {
  std::string formula;
  double max_abs_dev = 0;
};
struct TableReport {
  std::string which;
  std::string grid_note;
  std::vector<TableRow> rows;
};

// Dense-grid comparison of protocol outputs against closed forms:
// discord_mems, coherence_mems, discord_tpcs, coherence_tpcs,
// scaling_factors.
TableReport reproduce_table(const std::string& which);
std::vector<std::string> table_names();

// Serialization. CSV: fixed column order, 12 significant digits, '#'
// metadata lines (no volatile fields, so identical runs emit identical
// bytes). JSON mirrors carry the same data plus a metadata block.
std::string records_csv(const std::vector<ScanRecord>& records);
std::string records_json(const std::vector<ScanRecord>& records,
                         const CriteriaConfig& cfg);
std::string survey_csv(const SurveyResult& result);
std::string survey_json(const SurveyResult& result);

// State interchange file: {"dims": [2, d], "matrix": {"re": [[...]],
// "im": [[...]]}}, row-major; Hermiticity, trace and positivity validated
// on load.
DensityMatrix load_state_json(const std::string& path);
void save_state_json(const DensityMatrix& rho, const std::string& path);

// One-shot protocol run on a user state: outputs, verdicts and measures.
std::string broadcast_report_json(const DensityMatrix& input,
                                  const CriteriaConfig& cfg = {});

}  // namespace quditcast
