// Criterion-vs-oracle evaluation over a corpus and the report emitters.
//
// One EvaluationRow per curve: the criterion sweep's order profile on one
// side, branch-count ground truth (or the constructed label) on the other,
// and the agreement flags in between. Row-level failures are recorded in the
// row so a single bad curve cannot hide the rest of the report.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vft/corpus.hpp"
#include "vft/multipoly.hpp"

namespace vft {

struct EvaluationRow {
    std::string id;
    int k = 0;
    std::vector<std::pair<int, Order>> per_r; // ascending r, 2 <= r < k
    std::optional<bool> claims_reducible;     // empty when the sweep was rejected
    std::optional<int> witness_r;
    std::string criterion_error; // violated-hypothesis name when rejected

    std::optional<long> oracle_branches;
    std::string oracle_status; // EXACT | INCONCLUSIVE | NA | error name
    std::string ground_truth;  // REDUCIBLE | IRREDUCIBLE | UNKNOWN
    std::optional<bool> theorem_agrees;
    std::optional<bool> reciprocal_claim_holds;
};

// Deterministic: rows come back sorted by id regardless of jobs. A conflict
// between an EXACT oracle verdict and a curve's label throws
// Error(LabelConflict): the corpus itself is wrong.
std::vector<EvaluationRow> evaluate(const std::vector<CurveRecord>& records, int jobs = 1);

// Columns: id,k,orders,claims_reducible,witness_r,oracle_branches,
// oracle_status,ground_truth,theorem_agrees,reciprocal_claim_holds.
// orders is "r=order;r=order"; rejected sweeps carry the error name there.
std::string emit_csv(const std::vector<EvaluationRow>& rows);

// Same table as Markdown plus a summary line.
std::string emit_markdown(const std::vector<EvaluationRow>& rows);

} // namespace vft
