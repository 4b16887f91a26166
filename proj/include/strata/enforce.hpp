#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "strata/af.hpp"
#include "strata/stratified.hpp"

namespace strata {

/// |attacks(a) symmetric-difference attacks(b)|. Throws ArgumentMismatchError
/// unless both frameworks have the same arguments.
std::size_t attack_distance(const AF& a, const AF& b);

struct AttackEdit {
  enum class Kind { add, remove };
  Kind kind;
  std::string from;
  std::string to;

  std::string to_string() const;  // "+(A,B)" / "-(A,B)"
  friend bool operator==(const AttackEdit&, const AttackEdit&) = default;
};

AF apply_edits(const AF& af, const std::vector<AttackEdit>& edits);

/// C is contained in in(L) for some sigma-labeling L.
bool credulously_accepted(const AF& af, Semantics sigma, const ArgumentSet& target);

/// Outcome of the bounded minimal-change search.
struct EnforcementResult {
  enum class Status {
    finite,
    infinite,        // not produced by the bounded search
    unknown_beyond,  // no framework within `budget` edits accepts the target
  };

  Status status = Status::unknown_beyond;
  std::size_t value = 0;  // the minimal distance for finite, the budget for unknown_beyond
  std::vector<AttackEdit> witness;  // |witness| == value when finite
};

/// Minimal number of attack additions/removals over af's own arguments
/// after which `target` is credulously accepted. Iterative deepening over
/// the edit count; candidate edit sets are tried in lexicographic order of
/// (attacker, target) pairs, so the witness is the least such set.
EnforcementResult characteristic(const AF& af, Semantics sigma, const ArgumentSet& target,
                                 std::size_t budget);

/// Pairs (A, B) with N({A}) < N({B}) where some sigma-stratified labeling
/// ranks both finitely with S(A) >= S(B). Throws TruncationError when some
/// N({A}) is not resolved within `budget`.
std::vector<std::pair<std::string, std::string>> conjecture_scan(const AF& af, Semantics sigma,
                                                                 std::size_t budget,
                                                                 const StratifyOptions& options = {});

}  // namespace strata
