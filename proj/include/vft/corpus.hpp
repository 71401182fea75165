// Corpus ingestion. A corpus is a JSON document
//   {"curves": [{"id", "variables", "expr", "label", "notes"}, ...]}
// whose every entry must parse under its variable list and pass the
// Weierstrass-form validation. Labels carry constructed ground truth.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "vft/expr.hpp"
#include "vft/multipoly.hpp"

namespace vft {

enum class Label { Reducible, Irreducible, Unlabeled };

std::string label_name(Label label);

struct CurveRecord {
    std::string id;
    std::vector<std::string> variables;
    std::string expr;
    Label label = Label::Unlabeled;
    std::string notes;

    MultiPoly poly{2}; // parsed and validated
    int k = 0;         // x-degree
    // Whether the total order of the curve equals k (the strict reading in
    // which k is also the multiplicity). Recorded and reported, not enforced.
    bool multiplicity_equals_degree = true;
};

// Throws Error(MalformedCorpus) on structural problems and propagates
// parse/validation failures with the offending curve id in the message.
// Warnings (empty corpus, curves of multiplicity below their x-degree) go to
// the diagnostics stream.
std::vector<CurveRecord> load_corpus(const std::string& path, std::ostream& diagnostics);

} // namespace vft
