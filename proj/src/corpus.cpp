#include "vft/corpus.hpp"

#include <fstream>
#include <ostream>

#include <json.hpp>

#include "vft/weierstrass.hpp"

namespace vft {

std::string label_name(Label label) {
    switch (label) {
        case Label::Reducible: return "REDUCIBLE";
        case Label::Irreducible: return "IRREDUCIBLE";
        case Label::Unlabeled: return "UNLABELED";
    }
    return "UNLABELED";
}

namespace {

Label parse_label(const std::string& s, const std::string& id) {
    if (s == "REDUCIBLE") return Label::Reducible;
    if (s == "IRREDUCIBLE") return Label::Irreducible;
    if (s == "UNLABELED" || s.empty()) return Label::Unlabeled;
    throw Error(ErrorCode::MalformedCorpus, "curve '" + id + "': unknown label '" + s + "'");
}

} // namespace

std::vector<CurveRecord> load_corpus(const std::string& path, std::ostream& diagnostics) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::MalformedCorpus, "cannot open corpus file '" + path + "'");
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::MalformedCorpus, std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("curves") || !doc["curves"].is_array())
        throw Error(ErrorCode::MalformedCorpus, "expected an object with a \"curves\" array");

    std::vector<CurveRecord> records;
    for (const auto& entry : doc["curves"]) {
        CurveRecord rec;
        try {
            rec.id = entry.at("id").get<std::string>();
            rec.variables = entry.at("variables").get<std::vector<std::string>>();
            rec.expr = entry.at("expr").get<std::string>();
            if (entry.contains("label")) rec.label = parse_label(entry["label"].get<std::string>(), rec.id);
            if (entry.contains("notes")) rec.notes = entry["notes"].get<std::string>();
        } catch (const nlohmann::json::exception& e) {
            throw Error(ErrorCode::MalformedCorpus,
                        std::string("curve entry missing required field: ") + e.what());
        }
        if (rec.id.empty() || rec.id.find_first_of(",|\n") != std::string::npos)
            throw Error(ErrorCode::MalformedCorpus,
                        "curve id '" + rec.id + "' is empty or contains reserved characters");
        for (const auto& seen : records)
            if (seen.id == rec.id)
                throw Error(ErrorCode::MalformedCorpus, "duplicate curve id '" + rec.id + "'");

        // Validate: parse under the declared variables, then Weierstrass check.
        try {
            VariableContext ctx(rec.variables);
            rec.poly = parse_poly(rec.expr, ctx);
            WeierstrassPolynomial wp = to_weierstrass(rec.poly);
            rec.k = wp.degree();
        } catch (const ParseError& e) {
            throw Error(ErrorCode::MalformedCorpus,
                        "curve '" + rec.id + "': " + e.what());
        } catch (const Error& e) {
            throw Error(e.code(), "curve '" + rec.id + "': " + e.what());
        } catch (const std::invalid_argument& e) {
            throw Error(ErrorCode::MalformedCorpus, "curve '" + rec.id + "': " + e.what());
        }
        rec.multiplicity_equals_degree = (rec.poly.total_order() == Order(rec.k));
        if (!rec.multiplicity_equals_degree)
            diagnostics << "note: curve '" << rec.id << "': total order "
                        << order_to_string(rec.poly.total_order()) << " is below its x-degree "
                        << rec.k << "\n";
        records.push_back(std::move(rec));
    }
    if (records.empty()) diagnostics << "warning: corpus '" << path << "' contains no curves\n";
    return records;
}

} // namespace vft
