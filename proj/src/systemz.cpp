#include "strata/systemz.hpp"

#include <algorithm>

#include "strata/error.hpp"
#include "strata/stratified.hpp"

namespace strata {

namespace {

std::vector<std::string> mentioned_atoms(const std::vector<Conditional>& conditionals) {
  std::set<std::string> atoms;
  for (const auto& d : conditionals) {
    auto more = d.atoms();
    atoms.insert(more.begin(), more.end());
  }
  return {atoms.begin(), atoms.end()};
}

bool satisfies_all(const World& w, const std::vector<Conditional>& conditionals) {
  return std::all_of(conditionals.begin(), conditionals.end(),
                     [&](const Conditional& d) { return satisfies(w, d); });
}

std::optional<World> first_tolerating_world(const AtomSet& atoms,
                                            const std::vector<Conditional>& base,
                                            const Conditional& d) {
  for (const World& w : worlds(atoms)) {
    if (conditional_status(w, d) == ConditionalStatus::verifies && satisfies_all(w, base)) return w;
  }
  return std::nullopt;
}

}  // namespace

KnowledgeBase::KnowledgeBase(std::vector<Conditional> conditionals, std::optional<AtomSet> atoms)
    : conditionals_(std::move(conditionals)) {
  for (std::size_t i = 0; i < conditionals_.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (conditionals_[i] == conditionals_[j]) {
        throw Error("duplicate conditional " + conditionals_[i].to_string());
      }
    }
  }
  const auto mentioned = mentioned_atoms(conditionals_);
  if (!atoms) {
    atoms_ = AtomSet(mentioned);
    return;
  }
  for (const auto& a : mentioned) {
    if (!atoms->find(a)) throw UnknownAtomError("atom '" + a + "' missing from the atom order");
  }
  atoms_ = std::move(*atoms);
}

std::vector<Conditional> satisfied_set(const KnowledgeBase& kb, const World& w) {
  std::vector<Conditional> out;
  for (const auto& d : kb.conditionals()) {
    if (satisfies(w, d)) out.push_back(d);
  }
  return out;
}

bool satisfies(const World& w, const KnowledgeBase& kb) { return satisfies_all(w, kb.conditionals()); }

std::optional<World> tolerated(const KnowledgeBase& kb, const Conditional& d) {
  AtomSet atoms = kb.atoms();
  std::vector<std::string> extra;
  for (const auto& a : d.atoms()) {
    if (!atoms.find(a)) extra.push_back(a);
  }
  if (!extra.empty()) {
    auto names = atoms.names();
    names.insert(names.end(), extra.begin(), extra.end());
    atoms = AtomSet::sorted(std::move(names));
  }
  return first_tolerating_world(atoms, kb.conditionals(), d);
}

std::size_t ZPartition::stratum_of(const Conditional& d) const {
  for (std::size_t i = 0; i < strata.size(); ++i) {
    if (std::find(strata[i].begin(), strata[i].end(), d) != strata[i].end()) return i;
  }
  throw Error("conditional " + d.to_string() + " is not in the partition");
}

ZPartition z_partition(const KnowledgeBase& kb) {
  ZPartition out;
  std::vector<Conditional> remaining = kb.conditionals();
  while (!remaining.empty()) {
    std::vector<Conditional> layer;
    std::vector<Conditional> rest;
    for (const auto& d : remaining) {
      if (first_tolerating_world(kb.atoms(), remaining, d)) {
        layer.push_back(d);
      } else {
        rest.push_back(d);
      }
    }
    if (layer.empty()) {
      std::string members;
      for (const auto& d : remaining) members += (members.empty() ? "" : ", ") + d.to_string();
      throw InconsistentKnowledgeBaseError("inconsistent knowledge base: {" + members +
                                           "} tolerates none of its members");
    }
    out.strata.push_back(std::move(layer));
    remaining = std::move(rest);
  }
  return out;
}

RankingFunction::RankingFunction(AtomSet atoms, std::vector<Rank> ranks)
    : atoms_(std::move(atoms)), ranks_(std::move(ranks)) {
  if (ranks_.size() != (std::size_t{1} << atoms_.size())) {
    throw Error("ranking function needs one rank per world");
  }
  if (std::find(ranks_.begin(), ranks_.end(), Rank(0)) == ranks_.end()) {
    throw Error("ranking function has no world at rank 0");
  }
}

Rank RankingFunction::operator()(const World& w) const {
  if (!(w.atoms() == atoms_)) throw UnknownAtomError("world is over a different atom set");
  return ranks_.at(w.index());
}

RankingFunction kappa_z(const KnowledgeBase& kb) {
  const ZPartition partition = z_partition(kb);
  std::vector<Rank> ranks;
  for (const World& w : worlds(kb.atoms())) {
    Rank r(0);
    for (std::size_t i = 0; i < partition.strata.size(); ++i) {
      for (const auto& d : partition.strata[i]) {
        if (!satisfies(w, d)) r = std::max(r, Rank(static_cast<std::uint32_t>(i + 1)));
      }
    }
    ranks.push_back(r);
  }
  return RankingFunction(kb.atoms(), std::move(ranks));
}

Rank rank_of_formula(const RankingFunction& kappa, const Formula& f) {
  Rank best = Rank::infinity();
  for (const World& w : worlds(kappa.atoms())) {
    if (eval(w, f)) best = std::min(best, kappa(w));
  }
  return best;
}

bool accepts(const RankingFunction& kappa, const Conditional& d) {
  return rank_of_formula(kappa, Formula::conjunction(d.claim, d.premise)) <
         rank_of_formula(kappa, Formula::conjunction(Formula::negation(d.claim), d.premise));
}

namespace {

// Strict order on worlds: a Delta-satisfying world precedes every
// falsifying one, and falsifying worlds compare by 1 + their highest
// falsified Z-stratum. This is exactly the order of kappa_z.
AF preference_framework(const RankingFunction& kappa) {
  const auto all = worlds(kappa.atoms());
  std::vector<std::string> names;
  for (const auto& w : all) names.push_back(w.name());
  std::vector<std::pair<std::string, std::string>> attacks;
  for (const auto& w1 : all) {
    for (const auto& w2 : all) {
      if (kappa(w1) < kappa(w2)) attacks.emplace_back(w1.name(), w2.name());
    }
  }
  return AF(std::move(names), attacks);
}

}  // namespace

AF induced_af(const KnowledgeBase& kb) { return preference_framework(kappa_z(kb)); }

BridgeReport bridge_check(const KnowledgeBase& kb) {
  const RankingFunction kappa = kappa_z(kb);
  const AF af = preference_framework(kappa);
  const StratifiedLabeling s = grounded_stratified(af);
  BridgeReport report;
  for (const World& w : worlds(kb.atoms())) {
    const Rank expected = kappa(w);
    const Rank actual = s.at(af, w.name());
    if (expected != actual) {
      report.holds = false;
      report.mismatches.push_back(w.name() + ": kappa=" + expected.to_string() +
                                  " stratified=" + actual.to_string());
    }
  }
  return report;
}

}  // namespace strata
