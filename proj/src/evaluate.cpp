#include "vft/evaluate.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <sstream>
#include <thread>

#include "vft/puiseux.hpp"
#include "vft/tangency.hpp"

namespace vft {

namespace {

std::string tri_bool(const std::optional<bool>& b) {
    if (!b) return "NA";
    return *b ? "true" : "false";
}

EvaluationRow evaluate_one(const CurveRecord& rec) {
    EvaluationRow row;
    row.id = rec.id;
    row.k = rec.k;
    WeierstrassPolynomial wp = to_weierstrass(rec.poly);

    try {
        CriterionVerdict v = criterion_sweep(wp);
        row.per_r.assign(v.per_r.begin(), v.per_r.end());
        row.claims_reducible = v.claims_reducible;
        row.witness_r = v.witness_r;
    } catch (const Error& e) {
        row.criterion_error = error_code_name(e.code());
    }

    if (rec.poly.nvars() == 2) {
        try {
            OracleVerdict o = oracle_verdict(wp);
            row.oracle_branches = o.branches;
            row.oracle_status = oracle_status_name(o.status);
        } catch (const Error& e) {
            row.oracle_status = error_code_name(e.code());
        }
    } else {
        row.oracle_status = "NA";
    }

    // Ground truth: an EXACT oracle outranks the label; a conflict between
    // the two is a corpus bug and aborts the whole run.
    std::optional<bool> truth_reducible;
    if (row.oracle_status == "EXACT") {
        truth_reducible = *row.oracle_branches >= 2;
        if (rec.label != Label::Unlabeled &&
            (rec.label == Label::Reducible) != *truth_reducible)
            throw Error(ErrorCode::LabelConflict,
                        "curve '" + rec.id + "': label " + label_name(rec.label) +
                            " contradicts exact oracle branch count " +
                            std::to_string(*row.oracle_branches));
    } else if (rec.label != Label::Unlabeled) {
        truth_reducible = (rec.label == Label::Reducible);
    }
    row.ground_truth =
        truth_reducible ? (*truth_reducible ? "REDUCIBLE" : "IRREDUCIBLE") : "UNKNOWN";

    if (row.claims_reducible && truth_reducible)
        row.theorem_agrees = (*row.claims_reducible == *truth_reducible);

    // "order equals r-1 for every swept r" on curves known irreducible.
    if (truth_reducible && !*truth_reducible) {
        if (row.criterion_error.empty()) {
            bool all = true;
            for (const auto& [r, ord] : row.per_r)
                if (ord != Order(r - 1)) all = false;
            row.reciprocal_claim_holds = all;
        } else if (rec.k <= 2) {
            row.reciprocal_claim_holds = true; // no r in [2, k): vacuous
        }
    }
    return row;
}

} // namespace

std::vector<EvaluationRow> evaluate(const std::vector<CurveRecord>& records, int jobs) {
    std::vector<const CurveRecord*> ordered;
    ordered.reserve(records.size());
    for (const auto& r : records) ordered.push_back(&r);
    std::sort(ordered.begin(), ordered.end(),
              [](const CurveRecord* a, const CurveRecord* b) { return a->id < b->id; });

    std::vector<EvaluationRow> rows(ordered.size());
    jobs = std::clamp(jobs, 1, 64);
    if (jobs == 1 || ordered.size() < 2) {
        for (std::size_t i = 0; i < ordered.size(); ++i) rows[i] = evaluate_one(*ordered[i]);
        return rows;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= ordered.size()) return;
            try {
                rows[i] = evaluate_one(*ordered[i]);
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
    return rows;
}

namespace {

std::string orders_field(const EvaluationRow& row) {
    if (!row.criterion_error.empty()) return row.criterion_error;
    std::ostringstream out;
    bool first = true;
    for (const auto& [r, ord] : row.per_r) {
        if (!first) out << ";";
        out << r << "=" << order_to_string(ord);
        first = false;
    }
    return out.str();
}

std::string branches_field(const EvaluationRow& row) {
    if (row.oracle_branches) return std::to_string(*row.oracle_branches);
    return row.oracle_status == "INCONCLUSIVE" ? "UNKNOWN" : "NA";
}

std::vector<std::string> row_fields(const EvaluationRow& row) {
    return {row.id,
            std::to_string(row.k),
            orders_field(row),
            tri_bool(row.claims_reducible),
            row.witness_r ? std::to_string(*row.witness_r) : "NA",
            branches_field(row),
            row.oracle_status,
            row.ground_truth,
            tri_bool(row.theorem_agrees),
            tri_bool(row.reciprocal_claim_holds)};
}

constexpr const char* kColumns[] = {
    "id", "k", "orders", "claims_reducible", "witness_r", "oracle_branches",
    "oracle_status", "ground_truth", "theorem_agrees", "reciprocal_claim_holds"};

} // namespace

std::string emit_csv(const std::vector<EvaluationRow>& rows) {
    std::ostringstream out;
    bool first = true;
    for (const char* col : kColumns) {
        if (!first) out << ",";
        out << col;
        first = false;
    }
    out << "\n";
    for (const auto& row : rows) {
        auto fields = row_fields(row);
        for (std::size_t i = 0; i < fields.size(); ++i) out << (i ? "," : "") << fields[i];
        out << "\n";
    }
    return out.str();
}

std::string emit_markdown(const std::vector<EvaluationRow>& rows) {
    std::ostringstream out;
    out << "|";
    for (const char* col : kColumns) out << " " << col << " |";
    out << "\n|";
    for (std::size_t i = 0; i < std::size(kColumns); ++i) out << " --- |";
    out << "\n";
    int agree = 0, known = 0;
    for (const auto& row : rows) {
        auto fields = row_fields(row);
        out << "|";
        for (const auto& f : fields) out << " " << f << " |";
        out << "\n";
        if (row.theorem_agrees) {
            ++known;
            if (*row.theorem_agrees) ++agree;
        }
    }
    out << "\n" << agree << "/" << known << " curves agree with the Theorem\n";
    return out.str();
}

} // namespace vft
