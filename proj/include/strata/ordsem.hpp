#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "strata/af.hpp"
#include "strata/stratified.hpp"

namespace strata {

/// Candidate isomorphism: argument of the source framework to argument of the target.
using IsoMap = std::map<std::string, std::string>;

/// Bijective and attack-preserving in both directions.
bool is_isomorphism(const AF& from, const AF& to, const IsoMap& m);

/// Image of `af` under a bijection of its argument names.
AF apply_isomorphism(const AF& af, const IsoMap& m);

/// Uniformly random permutation of af's own arguments.
IsoMap random_isomorphism(const AF& af, std::mt19937_64& rng);

/// Maximal weakly connected subframeworks, ordered by their least argument.
std::vector<AF> wcom(const AF& af);

/// Ranking postulates, adapted to sets of rankings.
enum class Postulate {
  abstraction,           // Ab*
  irrelevance,           // Ir*
  void_precedence,       // VP*
  weak_void_precedence,  // WVP*
  defense_precedence,    // DP*
  quality_precedence,    // QP*
};

std::string_view to_string(Postulate p);  // "ab", "ir", ...
std::optional<Postulate> parse_postulate(std::string_view text);

struct PropertyWitness {
  // Argument pair for the pairwise postulates; for Ab* / Ir* `first` names
  // the offending isomorphism or component union.
  std::string first;
  std::string second;
  std::string detail;

  friend bool operator==(const PropertyWitness&, const PropertyWitness&) = default;
};

struct PropertyReport {
  Postulate property;
  bool holds = true;
  std::vector<PropertyWitness> witnesses;
};

struct CheckOptions {
  std::size_t trials = 50;  // random isomorphisms for Ab*
  std::uint64_t seed = 0;
  StratifyOptions stratify;
};

/// Checks one postulate on one framework against the sigma-stratified
/// semantics. Pairwise postulates report each violating (A, B) pair once,
/// in argument order, with the first violating ranking as detail.
PropertyReport check_property(const AF& af, Semantics sigma, Postulate property,
                              const CheckOptions& options = {});

}  // namespace strata
