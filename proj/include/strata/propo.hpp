#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace strata {

/// True iff `name` matches [a-z][a-z0-9_]*.
bool is_valid_atom_name(std::string_view name);

/// An ordered set of propositional atoms. The order fixes how worlds are
/// enumerated and named. Copies share the underlying storage.
class AtomSet {
 public:
  // Upper bound on the number of atoms for explicit world enumeration.
  static constexpr std::size_t max_atoms = 24;

  AtomSet();

  // Keeps the given order. Throws Error on invalid or repeated names and
  // LimitExceededError beyond max_atoms.
  explicit AtomSet(std::vector<std::string> ordered);

  // Sorted, duplicates removed.
  static AtomSet sorted(std::vector<std::string> names);

  std::size_t size() const noexcept { return names_->size(); }
  bool empty() const noexcept { return names_->empty(); }
  const std::string& operator[](std::size_t i) const { return (*names_)[i]; }
  const std::vector<std::string>& names() const noexcept { return *names_; }

  std::optional<std::size_t> find(std::string_view name) const;
  // Throws UnknownAtomError.
  std::size_t index_of(std::string_view name) const;

  friend bool operator==(const AtomSet& a, const AtomSet& b) {
    return a.names_ == b.names_ || *a.names_ == *b.names_;
  }

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

/// Immutable propositional formula. Equality is structural.
class Formula {
 public:
  enum class Kind { top, bottom, atom, negation, conjunction, disjunction, implication, equivalence };

  static Formula top();
  static Formula bottom();
  static Formula atom(std::string name);
  static Formula negation(Formula operand);
  static Formula conjunction(Formula lhs, Formula rhs);
  static Formula disjunction(Formula lhs, Formula rhs);
  static Formula implication(Formula lhs, Formula rhs);
  static Formula equivalence(Formula lhs, Formula rhs);

  Kind kind() const noexcept;
  const std::string& atom_name() const;  // kind() == atom
  const Formula& operand() const;        // kind() == negation
  const Formula& lhs() const;            // binary kinds
  const Formula& rhs() const;

  std::set<std::string> atoms() const;

  // Concrete syntax: ! && || -> <-> T F, parenthesised only where needed.
  std::string to_string() const;

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// A total truth assignment over an AtomSet. World `index` encodes the
/// assignment: the first atom is the most significant bit and a zero bit
/// means true, so index 0 is the all-true world.
class World {
 public:
  World(AtomSet atoms, std::uint32_t index);

  const AtomSet& atoms() const noexcept { return atoms_; }
  std::uint32_t index() const noexcept { return index_; }

  bool value(std::size_t atom) const;
  bool value(std::string_view atom) const;  // throws UnknownAtomError

  // Literals in atom order, negation as a leading '-': "pb-f".
  std::string name() const;
  static World from_name(const AtomSet& atoms, std::string_view name);

  friend bool operator==(const World& a, const World& b) {
    return a.index_ == b.index_ && a.atoms_ == b.atoms_;
  }

 private:
  AtomSet atoms_;
  std::uint32_t index_;
};

/// All 2^n worlds, all-true first and all-false last; the assignment of
/// the first atom varies slowest.
std::vector<World> worlds(const AtomSet& atoms);

bool eval(const World& w, const Formula& f);

/// (claim | premise); a Top premise prints as (claim).
struct Conditional {
  Formula claim;
  Formula premise = Formula::top();

  std::set<std::string> atoms() const;
  std::string to_string() const;

  friend bool operator==(const Conditional& a, const Conditional& b) {
    return a.claim == b.claim && a.premise == b.premise;
  }
};

enum class ConditionalStatus { verifies, falsifies, neutral };

ConditionalStatus conditional_status(const World& w, const Conditional& d);

inline bool satisfies(const World& w, const Conditional& d) {
  return conditional_status(w, d) != ConditionalStatus::falsifies;
}

}  // namespace strata
