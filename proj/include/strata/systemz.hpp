#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "strata/af.hpp"
#include "strata/propo.hpp"
#include "strata/rank.hpp"

namespace strata {

/// An ordered set of pairwise distinct conditionals over an atom set.
class KnowledgeBase {
 public:
  KnowledgeBase() = default;

  // Atom set defaults to the sorted atoms mentioned by the conditionals.
  // An explicit atom set must cover them (it may also add further atoms).
  explicit KnowledgeBase(std::vector<Conditional> conditionals,
                         std::optional<AtomSet> atoms = std::nullopt);

  const AtomSet& atoms() const noexcept { return atoms_; }
  const std::vector<Conditional>& conditionals() const noexcept { return conditionals_; }
  std::size_t size() const noexcept { return conditionals_.size(); }

  // Same conditionals over another atom order.
  KnowledgeBase with_atoms(AtomSet atoms) const { return KnowledgeBase(conditionals_, std::move(atoms)); }

 private:
  AtomSet atoms_;
  std::vector<Conditional> conditionals_;
};

std::vector<Conditional> satisfied_set(const KnowledgeBase& kb, const World& w);

bool satisfies(const World& w, const KnowledgeBase& kb);

/// First world (in enumeration order) that verifies `d` and satisfies every
/// conditional of `kb`. Worlds range over kb's atoms, extended by d's.
std::optional<World> tolerated(const KnowledgeBase& kb, const Conditional& d);

struct ZPartition {
  std::vector<std::vector<Conditional>> strata;

  // Index of the stratum holding `d`; throws Error when absent.
  std::size_t stratum_of(const Conditional& d) const;
};

/// Throws InconsistentKnowledgeBaseError when a non-empty remainder
/// tolerates none of its members.
ZPartition z_partition(const KnowledgeBase& kb);

/// Ranks indexed by world index over a fixed atom set.
class RankingFunction {
 public:
  // Throws Error unless there is one rank per world and some rank is 0.
  RankingFunction(AtomSet atoms, std::vector<Rank> ranks);

  const AtomSet& atoms() const noexcept { return atoms_; }
  Rank operator()(const World& w) const;
  const std::vector<Rank>& ranks() const noexcept { return ranks_; }

 private:
  AtomSet atoms_;
  std::vector<Rank> ranks_;
};

/// 0 on worlds satisfying kb, else 1 + the highest Z-stratum falsified.
RankingFunction kappa_z(const KnowledgeBase& kb);

/// Minimum rank over the models of f; infinity when f is unsatisfiable.
Rank rank_of_formula(const RankingFunction& kappa, const Formula& f);

/// kappa(claim & premise) < kappa(!claim & premise).
bool accepts(const RankingFunction& kappa, const Conditional& d);

/// Worlds as arguments (named by World::name()), with w1 attacking w2 iff
/// w1's System Z rank is strictly below w2's.
AF induced_af(const KnowledgeBase& kb);

struct BridgeReport {
  bool holds = true;
  // "world: kappa=R stratified=R" for every disagreeing world.
  std::vector<std::string> mismatches;
};

/// Compares kappa_z(kb) with the grounded-stratified labeling of induced_af(kb).
BridgeReport bridge_check(const KnowledgeBase& kb);

}  // namespace strata
