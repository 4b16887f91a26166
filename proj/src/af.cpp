#include "strata/af.hpp"

#include <algorithm>
#include <bit>

#include "strata/error.hpp"

namespace strata {

ArgumentationFramework::ArgumentationFramework(
    std::vector<std::string> arguments,
    const std::vector<std::pair<std::string, std::string>>& attacks)
    : names_(std::move(arguments)) {
  std::sort(names_.begin(), names_.end());
  if (auto dup = std::adjacent_find(names_.begin(), names_.end()); dup != names_.end()) {
    throw DuplicateArgumentError("duplicate argument '" + *dup + "'");
  }
  for (ArgIndex i = 0; i < names_.size(); ++i) index_.emplace(names_[i], i);

  std::vector<std::pair<ArgIndex, ArgIndex>> indexed;
  indexed.reserve(attacks.size());
  for (const auto& [from, to] : attacks) indexed.emplace_back(index_of(from), index_of(to));
  build(indexed);
}

void ArgumentationFramework::build(const std::vector<std::pair<ArgIndex, ArgIndex>>& attacks) {
  const std::size_t n = names_.size();
  matrix_.assign(n * n, false);
  attackers_.assign(n, {});
  targets_.assign(n, {});
  attack_count_ = 0;
  for (const auto& [from, to] : attacks) {
    if (matrix_[from * n + to]) continue;
    matrix_[from * n + to] = true;
    ++attack_count_;
  }
  for (ArgIndex a = 0; a < n; ++a) {
    for (ArgIndex b = 0; b < n; ++b) {
      if (matrix_[a * n + b]) {
        targets_[a].push_back(b);
        attackers_[b].push_back(a);
      }
    }
  }
}

std::optional<ArgIndex> ArgumentationFramework::find(std::string_view name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

ArgIndex ArgumentationFramework::index_of(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw UnknownArgumentError("unknown argument '" + std::string(name) + "'");
}

std::vector<std::pair<ArgIndex, ArgIndex>> ArgumentationFramework::attack_list() const {
  std::vector<std::pair<ArgIndex, ArgIndex>> out;
  out.reserve(attack_count_);
  for (ArgIndex a = 0; a < size(); ++a) {
    for (ArgIndex b : targets_[a]) out.emplace_back(a, b);
  }
  return out;
}

std::set<std::pair<std::string, std::string>> ArgumentationFramework::attack_pairs() const {
  std::set<std::pair<std::string, std::string>> out;
  for (const auto& [a, b] : attack_list()) out.emplace(names_[a], names_[b]);
  return out;
}

ArgumentationFramework ArgumentationFramework::with_attacks(
    const std::vector<std::pair<ArgIndex, ArgIndex>>& attacks) const {
  ArgumentationFramework out;
  out.names_ = names_;
  out.index_ = index_;
  for (const auto& [from, to] : attacks) {
    if (from >= size() || to >= size()) throw UnknownArgumentError("attack index out of range");
  }
  out.build(attacks);
  return out;
}

ArgumentationFramework ArgumentationFramework::subframework(const std::vector<ArgIndex>& keep) const {
  ArgumentationFramework out;
  std::vector<ArgIndex> position(size(), size());
  for (ArgIndex i = 0; i < keep.size(); ++i) {
    out.names_.push_back(names_.at(keep[i]));
    out.index_.emplace(names_[keep[i]], i);
    position[keep[i]] = i;
  }
  std::vector<std::pair<ArgIndex, ArgIndex>> attacks;
  for (ArgIndex i = 0; i < keep.size(); ++i) {
    for (ArgIndex t : targets_[keep[i]]) {
      if (position[t] != size()) attacks.emplace_back(i, position[t]);
    }
  }
  out.build(attacks);
  return out;
}

ArgumentSet attackers(const AF& af, std::string_view a) {
  ArgumentSet out;
  for (ArgIndex b : af.attackers_of(af.index_of(a))) out.insert(af.name(b));
  return out;
}

ArgumentSet defenders(const AF& af, std::string_view a) {
  ArgumentSet out;
  for (ArgIndex c : af.attackers_of(af.index_of(a))) {
    for (ArgIndex b : af.attackers_of(c)) out.insert(af.name(b));
  }
  return out;
}

AF restrict(const AF& af, const ArgumentSet& keep) {
  std::vector<ArgIndex> indices;
  for (const auto& name : keep) indices.push_back(af.index_of(name));
  std::sort(indices.begin(), indices.end());
  return af.subframework(indices);
}

// ---------------------------------------------------------------------------

std::string_view to_string(Label l) {
  switch (l) {
    case Label::in: return "in";
    case Label::out: return "out";
    case Label::undec: return "undec";
  }
  return "?";
}

Labeling Labeling::from_map(const AF& af, const std::map<std::string, Label>& labels) {
  if (labels.size() != af.size()) {
    throw IncompatibleLabelingError("labeling does not cover the framework's arguments");
  }
  std::vector<Label> out(af.size(), Label::undec);
  for (const auto& [name, label] : labels) {
    auto i = af.find(name);
    if (!i) throw IncompatibleLabelingError("labeling mentions unknown argument '" + name + "'");
    out[*i] = label;
  }
  return Labeling(std::move(out));
}

std::vector<ArgIndex> Labeling::members(Label l) const {
  std::vector<ArgIndex> out;
  for (ArgIndex i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == l) out.push_back(i);
  }
  return out;
}

ArgumentSet Labeling::names(const AF& af, Label l) const {
  ArgumentSet out;
  for (ArgIndex i : members(l)) out.insert(af.name(i));
  return out;
}

std::string_view to_string(Semantics s) {
  switch (s) {
    case Semantics::complete: return "complete";
    case Semantics::grounded: return "grounded";
    case Semantics::preferred: return "preferred";
    case Semantics::stable: return "stable";
    case Semantics::semi_stable: return "semi_stable";
  }
  return "?";
}

std::optional<Semantics> parse_semantics(std::string_view text) {
  if (text == "complete" || text == "c" || text == "co") return Semantics::complete;
  if (text == "grounded" || text == "gr") return Semantics::grounded;
  if (text == "preferred" || text == "p" || text == "pr") return Semantics::preferred;
  if (text == "stable" || text == "s" || text == "st") return Semantics::stable;
  if (text == "semi_stable" || text == "semi-stable" || text == "ss" || text == "sst") {
    return Semantics::semi_stable;
  }
  return std::nullopt;
}

namespace {

void require_compatible(const AF& af, const Labeling& l) {
  if (l.size() != af.size()) {
    throw IncompatibleLabelingError("labeling has " + std::to_string(l.size()) +
                                    " entries, framework has " + std::to_string(af.size()) +
                                    " arguments");
  }
}

bool admissible_at(const AF& af, const Labeling& l, ArgIndex a) {
  const auto& att = af.attackers_of(a);
  switch (l[a]) {
    case Label::out:
      return std::any_of(att.begin(), att.end(), [&](ArgIndex b) { return l[b] == Label::in; });
    case Label::in:
      return std::all_of(att.begin(), att.end(), [&](ArgIndex b) { return l[b] == Label::out; });
    case Label::undec:
      return true;
  }
  return false;
}

bool complete_at(const AF& af, const Labeling& l, ArgIndex a) {
  if (!admissible_at(af, l, a)) return false;
  if (l[a] != Label::undec) return true;
  const auto& att = af.attackers_of(a);
  const bool in_attacker =
      std::any_of(att.begin(), att.end(), [&](ArgIndex b) { return l[b] == Label::in; });
  const bool live_attacker =
      std::any_of(att.begin(), att.end(), [&](ArgIndex b) { return l[b] != Label::out; });
  return !in_attacker && live_attacker;
}

// Domain bits for the complete-labeling search.
constexpr std::uint8_t kIn = 1;
constexpr std::uint8_t kOut = 2;
constexpr std::uint8_t kUndec = 4;
constexpr std::uint8_t kAny = kIn | kOut | kUndec;

/// Backtracking over {in, out, undec} with propagation of the local
/// conditions of complete labelings. Every rule removes only values that no
/// complete labeling extending the current domains can take.
class CompleteSearch {
 public:
  explicit CompleteSearch(const AF& af) : af_(af) {}

  std::vector<Labeling> run() {
    std::vector<std::uint8_t> domains(af_.size(), kAny);
    search(domains);
    std::sort(found_.begin(), found_.end());
    return std::move(found_);
  }

 private:
  using Domains = std::vector<std::uint8_t>;

  static bool narrow(Domains& d, ArgIndex a, std::uint8_t mask, bool& changed) {
    const std::uint8_t next = d[a] & mask;
    if (next != d[a]) {
      d[a] = next;
      changed = true;
    }
    return next != 0;
  }

  bool propagate(Domains& d) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (ArgIndex a = 0; a < af_.size(); ++a) {
        const auto& att = af_.attackers_of(a);
        bool attacker_in = false;
        bool attackers_out = true;
        std::size_t may_be_in = 0;
        std::size_t may_be_live = 0;
        ArgIndex last_may_be_in = 0;
        ArgIndex last_may_be_live = 0;
        for (ArgIndex b : att) {
          if (d[b] == kIn) attacker_in = true;
          if (d[b] != kOut) attackers_out = false;
          if (d[b] & kIn) {
            ++may_be_in;
            last_may_be_in = b;
          }
          if (d[b] & (kIn | kUndec)) {
            ++may_be_live;
            last_may_be_live = b;
          }
        }
        if (attacker_in && !narrow(d, a, kOut, changed)) return false;
        if (attackers_out && !narrow(d, a, kIn, changed)) return false;
        if (may_be_in == 0 && !narrow(d, a, kIn | kUndec, changed)) return false;
        if (may_be_live == 0 && !narrow(d, a, kIn | kOut, changed)) return false;

        if (d[a] == kIn) {
          for (ArgIndex b : att) {
            if (!narrow(d, b, kOut, changed)) return false;
          }
          for (ArgIndex t : af_.targets_of(a)) {
            if (!narrow(d, t, kOut, changed)) return false;
          }
        } else if (d[a] == kOut) {
          if (may_be_in == 1 && !narrow(d, last_may_be_in, kIn, changed)) return false;
        } else if (d[a] == kUndec) {
          for (ArgIndex b : att) {
            if (!narrow(d, b, kOut | kUndec, changed)) return false;
          }
          if (may_be_live == 1 && !narrow(d, last_may_be_live, kIn | kUndec, changed)) {
            return false;
          }
        }
      }
    }
    return true;
  }

  void search(Domains& d) {
    if (!propagate(d)) return;
    auto open = std::find_if(d.begin(), d.end(), [](std::uint8_t x) { return std::popcount(x) > 1; });
    if (open == d.end()) {
      std::vector<Label> labels(d.size());
      for (ArgIndex a = 0; a < d.size(); ++a) {
        labels[a] = d[a] == kIn ? Label::in : d[a] == kOut ? Label::out : Label::undec;
      }
      Labeling l(std::move(labels));
      if (is_complete(af_, l)) found_.push_back(std::move(l));
      return;
    }
    const auto a = static_cast<ArgIndex>(open - d.begin());
    for (std::uint8_t value : {kIn, kOut, kUndec}) {
      if (!(d[a] & value)) continue;
      Domains next = d;
      next[a] = value;
      search(next);
    }
  }

  const AF& af_;
  std::vector<Labeling> found_;
};

bool subset(const std::vector<bool>& a, const std::vector<bool>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] && !b[i]) return false;
  }
  return true;
}

std::vector<bool> indicator(const Labeling& l, Label which) {
  std::vector<bool> out(l.size());
  for (ArgIndex i = 0; i < l.size(); ++i) out[i] = l[i] == which;
  return out;
}

// Keeps labelings whose `which`-set is maximal (or minimal) under inclusion.
std::vector<Labeling> extremal(const std::vector<Labeling>& all, Label which, bool maximal) {
  std::vector<std::vector<bool>> sets;
  sets.reserve(all.size());
  for (const auto& l : all) sets.push_back(indicator(l, which));
  std::vector<Labeling> out;
  for (std::size_t i = 0; i < all.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < all.size() && !dominated; ++j) {
      if (sets[i] == sets[j]) continue;
      dominated = maximal ? subset(sets[i], sets[j]) : subset(sets[j], sets[i]);
    }
    if (!dominated) out.push_back(all[i]);
  }
  return out;
}

}  // namespace

bool is_admissible(const AF& af, const Labeling& l) {
  require_compatible(af, l);
  for (ArgIndex a = 0; a < af.size(); ++a) {
    if (!admissible_at(af, l, a)) return false;
  }
  return true;
}

bool is_complete(const AF& af, const Labeling& l) {
  require_compatible(af, l);
  for (ArgIndex a = 0; a < af.size(); ++a) {
    if (!complete_at(af, l, a)) return false;
  }
  return true;
}

Labeling grounded(const AF& af) {
  std::vector<Label> labels(af.size(), Label::undec);
  bool changed = true;
  while (changed) {
    changed = false;
    for (ArgIndex a = 0; a < af.size(); ++a) {
      if (labels[a] != Label::undec) continue;
      const auto& att = af.attackers_of(a);
      if (std::all_of(att.begin(), att.end(), [&](ArgIndex b) { return labels[b] == Label::out; })) {
        labels[a] = Label::in;
        changed = true;
      }
    }
    for (ArgIndex a = 0; a < af.size(); ++a) {
      if (labels[a] != Label::undec) continue;
      const auto& att = af.attackers_of(a);
      if (std::any_of(att.begin(), att.end(), [&](ArgIndex b) { return labels[b] == Label::in; })) {
        labels[a] = Label::out;
        changed = true;
      }
    }
  }
  return Labeling(std::move(labels));
}

std::vector<Labeling> labelings(const AF& af, Semantics sigma) {
  if (sigma == Semantics::grounded) return {grounded(af)};
  auto complete = CompleteSearch(af).run();
  switch (sigma) {
    case Semantics::complete:
      return complete;
    case Semantics::preferred:
      return extremal(complete, Label::in, true);
    case Semantics::semi_stable:
      return extremal(complete, Label::undec, false);
    case Semantics::stable: {
      std::vector<Labeling> out;
      for (auto& l : complete) {
        if (l.members(Label::undec).empty()) out.push_back(std::move(l));
      }
      return out;
    }
    case Semantics::grounded:
      break;
  }
  return {};
}

std::string format_labeling(const AF& af, const Labeling& l) {
  require_compatible(af, l);
  std::string out;
  for (ArgIndex a = 0; a < af.size(); ++a) {
    if (a) out += ' ';
    out += af.name(a);
    out += ':';
    out += to_string(l[a]);
  }
  return out;
}

}  // namespace strata
