#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace strata {

using ArgIndex = std::size_t;
using ArgumentSet = std::set<std::string>;

/// A finite argumentation framework. Arguments are opaque strings kept in
/// lexicographic order; ArgIndex refers to a position in that order.
class ArgumentationFramework {
 public:
  ArgumentationFramework() = default;

  // Throws DuplicateArgumentError or UnknownArgumentError.
  ArgumentationFramework(std::vector<std::string> arguments,
                         const std::vector<std::pair<std::string, std::string>>& attacks);

  std::size_t size() const noexcept { return names_.size(); }
  bool empty() const noexcept { return names_.empty(); }
  const std::vector<std::string>& arguments() const noexcept { return names_; }
  const std::string& name(ArgIndex a) const { return names_.at(a); }

  std::optional<ArgIndex> find(std::string_view name) const;
  ArgIndex index_of(std::string_view name) const;  // throws UnknownArgumentError

  const std::vector<ArgIndex>& attackers_of(ArgIndex a) const { return attackers_.at(a); }
  const std::vector<ArgIndex>& targets_of(ArgIndex a) const { return targets_.at(a); }
  bool attacks(ArgIndex from, ArgIndex to) const { return matrix_[from * size() + to]; }

  std::size_t attack_count() const noexcept { return attack_count_; }
  // Sorted by (attacker, target).
  std::vector<std::pair<ArgIndex, ArgIndex>> attack_list() const;
  std::set<std::pair<std::string, std::string>> attack_pairs() const;

  // Same arguments, attack relation replaced.
  ArgumentationFramework with_attacks(const std::vector<std::pair<ArgIndex, ArgIndex>>& attacks) const;

  // Induced subframework on `keep` (ascending indices).
  ArgumentationFramework subframework(const std::vector<ArgIndex>& keep) const;

  friend bool operator==(const ArgumentationFramework& a, const ArgumentationFramework& b) {
    return a.names_ == b.names_ && a.matrix_ == b.matrix_;
  }

 private:
  void build(const std::vector<std::pair<ArgIndex, ArgIndex>>& attacks);

  std::vector<std::string> names_;
  std::map<std::string, ArgIndex, std::less<>> index_;
  std::vector<std::vector<ArgIndex>> attackers_;
  std::vector<std::vector<ArgIndex>> targets_;
  std::vector<bool> matrix_;
  std::size_t attack_count_ = 0;
};

using AF = ArgumentationFramework;

ArgumentSet attackers(const AF& af, std::string_view a);
ArgumentSet defenders(const AF& af, std::string_view a);
AF restrict(const AF& af, const ArgumentSet& keep);

// Declaration order gives in < out < undec, which is the enumeration order.
enum class Label : std::uint8_t { in, out, undec };

std::string_view to_string(Label l);

/// Total labeling, positionally aligned with a framework's arguments.
class Labeling {
 public:
  Labeling() = default;
  explicit Labeling(std::vector<Label> labels) : labels_(std::move(labels)) {}

  // Throws IncompatibleLabelingError unless `labels` covers exactly af's arguments.
  static Labeling from_map(const AF& af, const std::map<std::string, Label>& labels);

  std::size_t size() const noexcept { return labels_.size(); }
  Label operator[](ArgIndex a) const { return labels_.at(a); }
  const std::vector<Label>& labels() const noexcept { return labels_; }

  std::vector<ArgIndex> members(Label l) const;
  ArgumentSet names(const AF& af, Label l) const;

  friend auto operator<=>(const Labeling&, const Labeling&) = default;

 private:
  std::vector<Label> labels_;
};

enum class Semantics { complete, grounded, preferred, stable, semi_stable };

inline constexpr Semantics all_semantics[] = {Semantics::complete, Semantics::grounded,
                                              Semantics::preferred, Semantics::stable,
                                              Semantics::semi_stable};

std::string_view to_string(Semantics s);
// Accepts the full names and the short forms c, gr, p, s, ss.
std::optional<Semantics> parse_semantics(std::string_view text);

bool is_admissible(const AF& af, const Labeling& l);
bool is_complete(const AF& af, const Labeling& l);

/// Least fixpoint: an argument whose attackers are all out goes in, an
/// argument with an in attacker goes out, the rest stay undec.
Labeling grounded(const AF& af);

/// All sigma-labelings, sorted lexicographically over arguments (in < out < undec).
std::vector<Labeling> labelings(const AF& af, Semantics sigma);

/// "A1:in A2:out ..." in argument order.
std::string format_labeling(const AF& af, const Labeling& l);

}  // namespace strata
