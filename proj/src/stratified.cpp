#include "strata/stratified.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "strata/error.hpp"

namespace strata {

bool StratifiedLabeling::is_finite() const {
  return std::all_of(ranks_.begin(), ranks_.end(), [](Rank r) { return r.is_finite(); });
}

namespace {

using Mask = std::vector<bool>;
using RankVector = std::vector<Rank>;

/// Memoised recursion over the set of arguments still unranked. The result
/// for a mask is the set of stratified labelings of the subframework it
/// induces (ranks start at 0); entries outside the mask are placeholders.
class StratifiedSearch {
 public:
  StratifiedSearch(const AF& af, Semantics sigma, std::size_t limit)
      : af_(af), sigma_(sigma), limit_(limit) {}

  const std::vector<RankVector>& solve(const Mask& mask) {
    if (auto it = memo_.find(mask); it != memo_.end()) return it->second;

    std::vector<ArgIndex> members;
    for (ArgIndex a = 0; a < mask.size(); ++a) {
      if (mask[a]) members.push_back(a);
    }

    std::set<RankVector> found;
    if (members.empty()) {
      found.insert(RankVector(af_.size()));
    } else {
      const AF sub = af_.subframework(members);
      for (const Labeling& l : labelings(sub, sigma_)) {
        const auto in = l.members(Label::in);
        if (in.empty()) {
          RankVector ranks(af_.size());
          for (ArgIndex m : members) ranks[m] = Rank::infinity();
          found.insert(std::move(ranks));
        } else {
          Mask rest = mask;
          for (ArgIndex i : in) rest[members[i]] = false;
          // std::map keeps references stable across the nested inserts.
          const std::vector<RankVector>& tails = solve(rest);
          for (const RankVector& tail : tails) {
            RankVector ranks(af_.size());
            for (ArgIndex m : members) ranks[m] = rest[m] ? tail[m].successor() : Rank(0);
            found.insert(std::move(ranks));
          }
        }
        if (found.size() > limit_) {
          throw TruncationError("more than " + std::to_string(limit_) +
                                " stratified labelings; raise the budget");
        }
      }
    }
    return memo_.emplace(mask, std::vector<RankVector>(found.begin(), found.end())).first->second;
  }

 private:
  const AF& af_;
  Semantics sigma_;
  std::size_t limit_;
  std::map<Mask, std::vector<RankVector>> memo_;
};

}  // namespace

std::vector<StratifiedLabeling> stratified_labelings(const AF& af, Semantics sigma,
                                                     const StratifyOptions& options) {
  StratifiedSearch search(af, sigma, options.max_labelings);
  const auto& ranks = search.solve(Mask(af.size(), true));
  std::vector<StratifiedLabeling> out;
  out.reserve(ranks.size());
  for (const auto& r : ranks) out.emplace_back(r);
  return out;
}

StratifiedLabeling grounded_stratified(const AF& af) {
  std::vector<Rank> ranks(af.size(), Rank::infinity());
  std::vector<ArgIndex> remaining(af.size());
  for (ArgIndex a = 0; a < af.size(); ++a) remaining[a] = a;

  for (std::uint32_t stage = 0; !remaining.empty(); ++stage) {
    const Labeling l = grounded(af.subframework(remaining));
    std::vector<ArgIndex> next;
    for (ArgIndex i = 0; i < remaining.size(); ++i) {
      if (l[i] == Label::in) {
        ranks[remaining[i]] = Rank(stage);
      } else {
        next.push_back(remaining[i]);
      }
    }
    if (next.size() == remaining.size()) break;  // empty in-set: the rest stay at infinity
    remaining = std::move(next);
  }
  return StratifiedLabeling(std::move(ranks));
}

namespace {

Stratum witness_stratum(const AF& af, Semantics sigma, const std::vector<ArgIndex>& members,
                        const ArgumentSet& expected_in) {
  Stratum stratum;
  for (ArgIndex a : members) stratum.arguments.insert(af.name(a));
  const AF sub = af.subframework(members);
  for (const Labeling& l : labelings(sub, sigma)) {
    if (l.names(sub, Label::in) == expected_in) {
      stratum.labeling = l;
      return stratum;
    }
  }
  throw NotStratifiedError("no " + std::string(to_string(sigma)) +
                           "-labeling witnesses the stratum of size " +
                           std::to_string(members.size()));
}

}  // namespace

Characterization characterize(const AF& af, Semantics sigma, const StratifiedLabeling& s) {
  if (s.size() != af.size()) {
    throw NotStratifiedError("rank map does not cover the framework's arguments");
  }
  int top = -1;
  for (Rank r : s.ranks()) {
    if (r.is_finite()) top = std::max(top, static_cast<int>(r.value()));
  }

  Characterization c;
  for (int i = 0; i <= top; ++i) {
    const Rank level(static_cast<std::uint32_t>(i));
    std::vector<ArgIndex> members;
    ArgumentSet expected_in;
    for (ArgIndex a = 0; a < af.size(); ++a) {
      if (s[a] >= level) members.push_back(a);
      if (s[a] == level) expected_in.insert(af.name(a));
    }
    if (expected_in.empty()) {
      throw NotStratifiedError("rank " + std::to_string(i) + " is skipped");
    }
    c.levels.push_back(witness_stratum(af, sigma, members, expected_in));
  }

  std::vector<ArgIndex> unranked;
  for (ArgIndex a = 0; a < af.size(); ++a) {
    if (!s[a].is_finite()) unranked.push_back(a);
  }
  c.unranked = witness_stratum(af, sigma, unranked, {});
  return c;
}

StratifiedLabeling reconstruct(const AF& af, const Characterization& c) {
  std::vector<Rank> ranks(af.size(), Rank(0));
  for (std::size_t i = 0; i < c.levels.size(); ++i) {
    for (const auto& name : c.levels[i].arguments) {
      ranks[af.index_of(name)] = Rank(static_cast<std::uint32_t>(i));
    }
  }
  for (const auto& name : c.unranked.arguments) ranks[af.index_of(name)] = Rank::infinity();
  return StratifiedLabeling(std::move(ranks));
}

std::string format_ranks(const AF& af, const StratifiedLabeling& s) {
  std::string out;
  for (ArgIndex a = 0; a < af.size() && a < s.size(); ++a) {
    if (a) out += ' ';
    out += af.name(a) + ":" + s[a].to_string();
  }
  return out;
}

}  // namespace strata
