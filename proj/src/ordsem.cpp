#include "strata/ordsem.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "strata/error.hpp"

namespace strata {

bool is_isomorphism(const AF& from, const AF& to, const IsoMap& m) {
  if (from.size() != to.size() || m.size() != from.size()) return false;
  std::vector<ArgIndex> image(from.size());
  std::vector<bool> hit(to.size(), false);
  for (ArgIndex a = 0; a < from.size(); ++a) {
    auto it = m.find(from.name(a));
    if (it == m.end()) return false;
    auto target = to.find(it->second);
    if (!target || hit[*target]) return false;
    hit[*target] = true;
    image[a] = *target;
  }
  for (ArgIndex a = 0; a < from.size(); ++a) {
    for (ArgIndex b = 0; b < from.size(); ++b) {
      if (from.attacks(a, b) != to.attacks(image[a], image[b])) return false;
    }
  }
  return true;
}

AF apply_isomorphism(const AF& af, const IsoMap& m) {
  std::vector<std::string> names;
  for (const auto& a : af.arguments()) {
    auto it = m.find(a);
    if (it == m.end()) throw UnknownArgumentError("isomorphism misses argument '" + a + "'");
    names.push_back(it->second);
  }
  std::vector<std::pair<std::string, std::string>> attacks;
  for (const auto& [a, b] : af.attack_list()) attacks.emplace_back(names[a], names[b]);
  return AF(std::move(names), attacks);
}

IsoMap random_isomorphism(const AF& af, std::mt19937_64& rng) {
  std::vector<std::string> image = af.arguments();
  std::shuffle(image.begin(), image.end(), rng);
  IsoMap m;
  for (ArgIndex a = 0; a < af.size(); ++a) m.emplace(af.name(a), image[a]);
  return m;
}

namespace {

// Component id per argument, numbered by least member.
std::vector<std::size_t> component_ids(const AF& af) {
  std::vector<std::size_t> parent(af.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [a, b] : af.attack_list()) {
    const auto ra = root(a), rb = root(b);
    if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
  }
  std::vector<std::size_t> ids(af.size());
  std::vector<std::size_t> numbering(af.size(), af.size());
  std::size_t next = 0;
  for (ArgIndex a = 0; a < af.size(); ++a) {
    const auto r = root(a);
    if (numbering[r] == af.size()) numbering[r] = next++;
    ids[a] = numbering[r];
  }
  return ids;
}

std::vector<std::vector<ArgIndex>> components(const AF& af) {
  const auto ids = component_ids(af);
  std::vector<std::vector<ArgIndex>> out;
  for (ArgIndex a = 0; a < af.size(); ++a) {
    if (ids[a] >= out.size()) out.resize(ids[a] + 1);
    out[ids[a]].push_back(a);
  }
  return out;
}

std::string join_names(const AF& af, const std::vector<ArgIndex>& members) {
  std::string out = "{";
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i) out += ',';
    out += af.name(members[i]);
  }
  return out + "}";
}

PropertyReport check_abstraction(const AF& af, Semantics sigma, const CheckOptions& options) {
  PropertyReport report{Postulate::abstraction, true, {}};
  const auto source = stratified_labelings(af, sigma, options.stratify);
  for (std::size_t trial = 0; trial < options.trials; ++trial) {
    std::seed_seq seq{static_cast<std::uint32_t>(options.seed),
                      static_cast<std::uint32_t>(options.seed >> 32),
                      static_cast<std::uint32_t>(trial)};
    std::mt19937_64 rng(seq);
    const IsoMap phi = random_isomorphism(af, rng);
    const AF image = apply_isomorphism(af, phi);

    std::string mapping;
    for (const auto& [a, b] : phi) mapping += (mapping.empty() ? "" : ",") + a + "->" + b;

    if (!is_isomorphism(af, image, phi)) {
      report.witnesses.push_back({"trial " + std::to_string(trial), "", "not an isomorphism: " + mapping});
      continue;
    }
    // S1 o phi^-1, positioned by the image's argument order.
    std::vector<StratifiedLabeling> expected;
    for (const auto& s : source) {
      std::vector<Rank> ranks(image.size());
      for (ArgIndex a = 0; a < af.size(); ++a) ranks[image.index_of(phi.at(af.name(a)))] = s[a];
      expected.emplace_back(std::move(ranks));
    }
    std::sort(expected.begin(), expected.end());
    if (stratified_labelings(image, sigma, options.stratify) != expected) {
      report.witnesses.push_back({"trial " + std::to_string(trial), "", mapping});
    }
  }
  report.holds = report.witnesses.empty();
  return report;
}

bool same_relative_order(const std::vector<ArgIndex>& members, const StratifiedLabeling& local,
                         const StratifiedLabeling& global) {
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = 0; j < members.size(); ++j) {
      const Rank li = local[i], lj = local[j];
      const Rank gi = global[members[i]], gj = global[members[j]];
      if ((li == lj) != (gi == gj)) return false;
      if ((li <= lj) != (gi <= gj)) return false;
    }
  }
  return true;
}

PropertyReport check_irrelevance(const AF& af, Semantics sigma, const CheckOptions& options) {
  PropertyReport report{Postulate::irrelevance, true, {}};
  const auto global = stratified_labelings(af, sigma, options.stratify);
  if (global.empty()) return report;

  const auto comps = components(af);
  if (comps.size() > 16) {
    throw LimitExceededError("too many weakly connected components to form all unions");
  }
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << comps.size()); ++mask) {
    std::vector<ArgIndex> members;
    for (std::size_t c = 0; c < comps.size(); ++c) {
      if (mask & (std::uint32_t{1} << c)) members.insert(members.end(), comps[c].begin(), comps[c].end());
    }
    std::sort(members.begin(), members.end());
    const AF part = af.subframework(members);
    for (const auto& local : stratified_labelings(part, sigma, options.stratify)) {
      const bool matched = std::any_of(global.begin(), global.end(), [&](const StratifiedLabeling& g) {
        return same_relative_order(members, local, g);
      });
      if (!matched) report.witnesses.push_back({join_names(af, members), "", format_ranks(part, local)});
    }
  }
  report.holds = report.witnesses.empty();
  return report;
}

using PairCondition = std::function<bool(ArgIndex, ArgIndex, const StratifiedLabeling&)>;

PropertyReport check_pairwise(const AF& af, Semantics sigma, Postulate property,
                              const CheckOptions& options, const PairCondition& holds_for) {
  PropertyReport report{property, true, {}};
  const auto all = stratified_labelings(af, sigma, options.stratify);
  for (ArgIndex a = 0; a < af.size(); ++a) {
    for (ArgIndex b = 0; b < af.size(); ++b) {
      for (const auto& s : all) {
        if (!holds_for(a, b, s)) {
          report.witnesses.push_back({af.name(a), af.name(b), format_ranks(af, s)});
          break;
        }
      }
    }
  }
  report.holds = report.witnesses.empty();
  return report;
}

}  // namespace

std::vector<AF> wcom(const AF& af) {
  std::vector<AF> out;
  for (const auto& members : components(af)) out.push_back(af.subframework(members));
  return out;
}

std::string_view to_string(Postulate p) {
  switch (p) {
    case Postulate::abstraction: return "ab";
    case Postulate::irrelevance: return "ir";
    case Postulate::void_precedence: return "vp";
    case Postulate::weak_void_precedence: return "wvp";
    case Postulate::defense_precedence: return "dp";
    case Postulate::quality_precedence: return "qp";
  }
  return "?";
}

std::optional<Postulate> parse_postulate(std::string_view text) {
  for (Postulate p : {Postulate::abstraction, Postulate::irrelevance, Postulate::void_precedence,
                      Postulate::weak_void_precedence, Postulate::defense_precedence,
                      Postulate::quality_precedence}) {
    if (to_string(p) == text) return p;
  }
  return std::nullopt;
}

PropertyReport check_property(const AF& af, Semantics sigma, Postulate property,
                              const CheckOptions& options) {
  switch (property) {
    case Postulate::abstraction:
      return check_abstraction(af, sigma, options);
    case Postulate::irrelevance:
      return check_irrelevance(af, sigma, options);
    case Postulate::void_precedence:
      return check_pairwise(af, sigma, property, options,
                            [&](ArgIndex a, ArgIndex b, const StratifiedLabeling& s) {
                              if (!af.attackers_of(a).empty() || af.attackers_of(b).empty()) return true;
                              return s[a] < s[b];
                            });
    case Postulate::weak_void_precedence:
      return check_pairwise(af, sigma, property, options,
                            [&](ArgIndex a, ArgIndex b, const StratifiedLabeling& s) {
                              return !af.attackers_of(a).empty() || s[a] <= s[b];
                            });
    case Postulate::defense_precedence: {
      std::vector<bool> defended(af.size(), false);
      for (ArgIndex a = 0; a < af.size(); ++a) {
        for (ArgIndex c : af.attackers_of(a)) {
          if (!af.attackers_of(c).empty()) defended[a] = true;
        }
      }
      return check_pairwise(af, sigma, property, options,
                            [&](ArgIndex a, ArgIndex b, const StratifiedLabeling& s) {
                              if (af.attackers_of(a).size() != af.attackers_of(b).size()) return true;
                              if (defended[a] || !defended[b]) return true;
                              return s[a] < s[b];
                            });
    }
    case Postulate::quality_precedence:
      return check_pairwise(af, sigma, property, options,
                            [&](ArgIndex a, ArgIndex b, const StratifiedLabeling& s) {
                              const auto& att_a = af.attackers_of(a);
                              const auto& att_b = af.attackers_of(b);
                              const bool premise = std::any_of(att_b.begin(), att_b.end(), [&](ArgIndex c) {
                                return std::all_of(att_a.begin(), att_a.end(),
                                                   [&](ArgIndex d) { return s[c] < s[d]; });
                              });
                              return !premise || s[a] < s[b];
                            });
  }
  return {property, true, {}};
}

}  // namespace strata
