// Text form of polynomials: a small recursive-descent parser and the
// deterministic printer that round-trips with it.
//
// Grammar (whitespace insignificant, '*' is mandatory, no juxtaposition):
//   expr   := term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := '-' factor | base ('^' uint)?
//   base   := rational | variable | '(' expr ')'
//   rational := uint ('/' uint)?        single token, no internal spaces
#pragma once

#include <string>
#include <vector>

#include "vft/error.hpp"
#include "vft/multipoly.hpp"

namespace vft {

class VariableContext {
public:
    // Name at index 0 is the distinguished x-variable.
    explicit VariableContext(std::vector<std::string> names);

    // "x,y,z" -> context; used by the CLI's --vars flag.
    static VariableContext from_csv(const std::string& csv);

    int nvars() const { return static_cast<int>(names_.size()); }
    const std::string& name(int i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }
    int index_of(const std::string& name) const; // -1 if unknown

private:
    std::vector<std::string> names_;
};

MultiPoly parse_poly(const std::string& text, const VariableContext& ctx);
std::string print_poly(const MultiPoly& p, const VariableContext& ctx);

} // namespace vft
