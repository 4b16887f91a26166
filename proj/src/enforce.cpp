#include "strata/enforce.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "strata/error.hpp"

namespace strata {

std::size_t attack_distance(const AF& a, const AF& b) {
  if (a.arguments() != b.arguments()) {
    throw ArgumentMismatchError("attack distance needs frameworks over the same arguments");
  }
  std::size_t d = 0;
  for (ArgIndex x = 0; x < a.size(); ++x) {
    for (ArgIndex y = 0; y < a.size(); ++y) {
      if (a.attacks(x, y) != b.attacks(x, y)) ++d;
    }
  }
  return d;
}

std::string AttackEdit::to_string() const {
  return std::string(kind == Kind::add ? "+" : "-") + "(" + from + "," + to + ")";
}

AF apply_edits(const AF& af, const std::vector<AttackEdit>& edits) {
  auto attacks = af.attack_pairs();
  for (const auto& e : edits) {
    af.index_of(e.from);
    af.index_of(e.to);
    if (e.kind == AttackEdit::Kind::add) {
      attacks.emplace(e.from, e.to);
    } else {
      attacks.erase({e.from, e.to});
    }
  }
  return AF(af.arguments(), {attacks.begin(), attacks.end()});
}

namespace {

bool accepted(const AF& af, Semantics sigma, const std::vector<ArgIndex>& target) {
  auto contains = [&](const Labeling& l) {
    return std::all_of(target.begin(), target.end(), [&](ArgIndex a) { return l[a] == Label::in; });
  };
  const auto all = labelings(af, sigma);
  return std::any_of(all.begin(), all.end(), contains);
}

std::vector<ArgIndex> target_indices(const AF& af, const ArgumentSet& target) {
  std::vector<ArgIndex> out;
  for (const auto& name : target) out.push_back(af.index_of(name));
  return out;
}

class EditSearch {
 public:
  EditSearch(const AF& af, Semantics sigma, std::vector<ArgIndex> target)
      : af_(af), sigma_(sigma), target_(std::move(target)), matrix_(af.size() * af.size()) {
    for (const auto& [a, b] : af.attack_list()) matrix_[a * af.size() + b] = true;
  }

  // Least edit set of exactly k toggled pairs, if any.
  std::optional<std::vector<std::size_t>> search(std::size_t k) {
    chosen_.clear();
    if (extend(0, k)) return chosen_;
    return std::nullopt;
  }

 private:
  bool extend(std::size_t from, std::size_t remaining) {
    if (remaining == 0) return test();
    const std::size_t universe = matrix_.size();
    for (std::size_t pair = from; pair + remaining <= universe; ++pair) {
      chosen_.push_back(pair);
      matrix_[pair] = !matrix_[pair];
      const bool found = extend(pair + 1, remaining - 1);
      matrix_[pair] = !matrix_[pair];
      if (found) return true;
      chosen_.pop_back();
    }
    return false;
  }

  bool test() const {
    const std::size_t n = af_.size();
    std::vector<std::pair<ArgIndex, ArgIndex>> attacks;
    for (std::size_t i = 0; i < matrix_.size(); ++i) {
      if (matrix_[i]) attacks.emplace_back(i / n, i % n);
    }
    return accepted(af_.with_attacks(attacks), sigma_, target_);
  }

  const AF& af_;
  Semantics sigma_;
  std::vector<ArgIndex> target_;
  std::vector<bool> matrix_;
  std::vector<std::size_t> chosen_;
};

}  // namespace

bool credulously_accepted(const AF& af, Semantics sigma, const ArgumentSet& target) {
  return accepted(af, sigma, target_indices(af, target));
}

EnforcementResult characteristic(const AF& af, Semantics sigma, const ArgumentSet& target,
                                 std::size_t budget) {
  auto indices = target_indices(af, target);
  if (accepted(af, sigma, indices)) return {EnforcementResult::Status::finite, 0, {}};

  const std::size_t n = af.size();
  EditSearch search(af, sigma, std::move(indices));
  for (std::size_t k = 1; k <= std::min(budget, n * n); ++k) {
    if (auto pairs = search.search(k)) {
      EnforcementResult result{EnforcementResult::Status::finite, k, {}};
      for (std::size_t p : *pairs) {
        const ArgIndex from = p / n, to = p % n;
        result.witness.push_back({af.attacks(from, to) ? AttackEdit::Kind::remove : AttackEdit::Kind::add,
                                  af.name(from), af.name(to)});
      }
      return result;
    }
  }
  return {EnforcementResult::Status::unknown_beyond, budget, {}};
}

std::vector<std::pair<std::string, std::string>> conjecture_scan(const AF& af, Semantics sigma,
                                                                 std::size_t budget,
                                                                 const StratifyOptions& options) {
  std::vector<std::size_t> cost(af.size());
  for (ArgIndex a = 0; a < af.size(); ++a) {
    const auto r = characteristic(af, sigma, {af.name(a)}, budget);
    if (r.status != EnforcementResult::Status::finite) {
      throw TruncationError("budget " + std::to_string(budget) + " does not resolve N({" +
                            af.name(a) + "})");
    }
    cost[a] = r.value;
  }

  const auto all = stratified_labelings(af, sigma, options);
  std::vector<std::pair<std::string, std::string>> out;
  for (ArgIndex a = 0; a < af.size(); ++a) {
    for (ArgIndex b = 0; b < af.size(); ++b) {
      if (cost[a] >= cost[b]) continue;
      const bool refuted = std::any_of(all.begin(), all.end(), [&](const StratifiedLabeling& s) {
        return s[a].is_finite() && s[b].is_finite() && s[a] >= s[b];
      });
      if (refuted) out.emplace_back(af.name(a), af.name(b));
    }
  }
  return out;
}

}  // namespace strata
