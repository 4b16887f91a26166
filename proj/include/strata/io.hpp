#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "strata/af.hpp"
#include "strata/propo.hpp"
#include "strata/stratified.hpp"
#include "strata/systemz.hpp"

namespace strata {

enum class AfFormat { apx, tgf };

/// APX: `arg(NAME).` and `att(A,B).` statements, free whitespace, `%`
/// comments. TGF: node ids one per line, a `#` line, then `A B` edges.
/// Throws ParseError, DuplicateArgumentError or UnknownArgumentError, all
/// carrying line:column.
AF parse_af(std::string_view text, AfFormat format);
std::string print_af(const AF& af, AfFormat format);

/// Formula syntax: atoms, T, F, !, &&, ||, ->, <->, parentheses.
/// Precedence ! > && > || > -> > <->; -> groups to the right.
Formula parse_formula(std::string_view text);

/// One `(CLAIM | PREMISE)` or `(CLAIM)` per line, `%` comments. The atom
/// order defaults to the sorted atoms of the file.
KnowledgeBase parse_kb(std::string_view text, std::optional<AtomSet> atoms = std::nullopt);
std::string print_kb(const KnowledgeBase& kb);

/// Graphviz digraph; with `ranks`, every node label carries its rank and
/// the fill colour encodes it.
std::string to_dot(const AF& af, const StratifiedLabeling* ranks = nullptr);

}  // namespace strata
