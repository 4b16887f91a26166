#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "strata/af.hpp"
#include "strata/rank.hpp"

namespace strata {

/// Ranks aligned with a framework's arguments.
class StratifiedLabeling {
 public:
  StratifiedLabeling() = default;
  explicit StratifiedLabeling(std::vector<Rank> ranks) : ranks_(std::move(ranks)) {}

  std::size_t size() const noexcept { return ranks_.size(); }
  Rank operator[](ArgIndex a) const { return ranks_.at(a); }
  Rank at(const AF& af, std::string_view argument) const { return ranks_.at(af.index_of(argument)); }
  const std::vector<Rank>& ranks() const noexcept { return ranks_; }

  // No argument at infinity.
  bool is_finite() const;

  friend auto operator<=>(const StratifiedLabeling&, const StratifiedLabeling&) = default;

 private:
  std::vector<Rank> ranks_;
};

struct StratifyOptions {
  // Any stage producing more labelings than this raises TruncationError.
  std::size_t max_labelings = 100000;
};

/// Every sigma-stratified labeling, deduplicated by rank map and sorted
/// lexicographically over rank vectors. Empty when sigma has no labeling
/// at the top level.
std::vector<StratifiedLabeling> stratified_labelings(const AF& af, Semantics sigma,
                                                     const StratifyOptions& options = {});

/// The unique grounded-stratified labeling, peeling grounded in-sets.
StratifiedLabeling grounded_stratified(const AF& af);

/// One level of the nested chain: a set of arguments and a sigma-labeling
/// of the subframework they induce (aligned with restrict(af, arguments)).
struct Stratum {
  ArgumentSet arguments;
  Labeling labeling;
};

/// levels[i] holds A_i for 0 <= i <= k (k = levels.size() - 1, possibly -1);
/// `unranked` holds A_{-1}, the arguments at infinity. Arguments at
/// infinity belong to every A_i as well.
struct Characterization {
  std::vector<Stratum> levels;
  Stratum unranked;

  int top() const noexcept { return static_cast<int>(levels.size()) - 1; }
};

/// Throws NotStratifiedError when S is not a sigma-stratified labeling of af.
Characterization characterize(const AF& af, Semantics sigma, const StratifiedLabeling& s);

/// Rank map described by a chain: max{i | a in A_i}, or infinity on A_{-1}.
StratifiedLabeling reconstruct(const AF& af, const Characterization& c);

/// "A1:0 A2:1 A3:inf" in argument order.
std::string format_ranks(const AF& af, const StratifiedLabeling& s);

}  // namespace strata
