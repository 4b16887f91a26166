#include "strata/propo.hpp"

#include <algorithm>

#include "strata/error.hpp"

namespace strata {

bool is_valid_atom_name(std::string_view name) {
  if (name.empty() || name.front() < 'a' || name.front() > 'z') return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
  });
}

AtomSet::AtomSet() : names_(std::make_shared<const std::vector<std::string>>()) {}

AtomSet::AtomSet(std::vector<std::string> ordered) {
  if (ordered.size() > max_atoms) {
    throw LimitExceededError("too many atoms: " + std::to_string(ordered.size()) + " (limit " +
                             std::to_string(max_atoms) + ")");
  }
  std::set<std::string> seen;
  for (const auto& name : ordered) {
    if (!is_valid_atom_name(name)) throw Error("invalid atom name '" + name + "'");
    if (!seen.insert(name).second) throw Error("duplicate atom '" + name + "'");
  }
  names_ = std::make_shared<const std::vector<std::string>>(std::move(ordered));
}

AtomSet AtomSet::sorted(std::vector<std::string> names) {
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());
  return AtomSet(std::move(names));
}

std::optional<std::size_t> AtomSet::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_->size(); ++i) {
    if ((*names_)[i] == name) return i;
  }
  return std::nullopt;
}

std::size_t AtomSet::index_of(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw UnknownAtomError("unknown atom '" + std::string(name) + "'");
}

// ---------------------------------------------------------------------------

struct Formula::Node {
  Kind kind;
  std::string name;
  std::vector<Formula> children;
};

namespace {

const Formula& shared_top() {
  static const Formula f = Formula::top();
  return f;
}

}  // namespace

Formula Formula::top() { return Formula(std::make_shared<const Node>(Node{Kind::top, {}, {}})); }

Formula Formula::bottom() {
  return Formula(std::make_shared<const Node>(Node{Kind::bottom, {}, {}}));
}

Formula Formula::atom(std::string name) {
  if (!is_valid_atom_name(name)) throw Error("invalid atom name '" + name + "'");
  return Formula(std::make_shared<const Node>(Node{Kind::atom, std::move(name), {}}));
}

Formula Formula::negation(Formula operand) {
  return Formula(std::make_shared<const Node>(Node{Kind::negation, {}, {std::move(operand)}}));
}

Formula Formula::conjunction(Formula lhs, Formula rhs) {
  return Formula(
      std::make_shared<const Node>(Node{Kind::conjunction, {}, {std::move(lhs), std::move(rhs)}}));
}

Formula Formula::disjunction(Formula lhs, Formula rhs) {
  return Formula(
      std::make_shared<const Node>(Node{Kind::disjunction, {}, {std::move(lhs), std::move(rhs)}}));
}

Formula Formula::implication(Formula lhs, Formula rhs) {
  return Formula(
      std::make_shared<const Node>(Node{Kind::implication, {}, {std::move(lhs), std::move(rhs)}}));
}

Formula Formula::equivalence(Formula lhs, Formula rhs) {
  return Formula(
      std::make_shared<const Node>(Node{Kind::equivalence, {}, {std::move(lhs), std::move(rhs)}}));
}

Formula::Kind Formula::kind() const noexcept { return node_->kind; }
const std::string& Formula::atom_name() const { return node_->name; }
const Formula& Formula::operand() const { return node_->children.at(0); }
const Formula& Formula::lhs() const { return node_->children.at(0); }
const Formula& Formula::rhs() const { return node_->children.at(1); }

namespace {

void collect_atoms(const Formula& f, std::set<std::string>& out) {
  switch (f.kind()) {
    case Formula::Kind::top:
    case Formula::Kind::bottom:
      return;
    case Formula::Kind::atom:
      out.insert(f.atom_name());
      return;
    case Formula::Kind::negation:
      collect_atoms(f.operand(), out);
      return;
    default:
      collect_atoms(f.lhs(), out);
      collect_atoms(f.rhs(), out);
  }
}

// Binding strength; higher binds tighter.
int precedence(Formula::Kind k) {
  switch (k) {
    case Formula::Kind::equivalence: return 1;
    case Formula::Kind::implication: return 2;
    case Formula::Kind::disjunction: return 3;
    case Formula::Kind::conjunction: return 4;
    case Formula::Kind::negation: return 5;
    default: return 6;
  }
}

void print(const Formula& f, int min_precedence, std::string& out) {
  const int p = precedence(f.kind());
  const bool parens = p < min_precedence;
  if (parens) out += '(';
  switch (f.kind()) {
    case Formula::Kind::top: out += 'T'; break;
    case Formula::Kind::bottom: out += 'F'; break;
    case Formula::Kind::atom: out += f.atom_name(); break;
    case Formula::Kind::negation:
      out += '!';
      print(f.operand(), 5, out);
      break;
    default: {
      const char* op = "";
      // Implication associates to the right, everything else to the left.
      int left = p, right = p + 1;
      switch (f.kind()) {
        case Formula::Kind::conjunction: op = " && "; break;
        case Formula::Kind::disjunction: op = " || "; break;
        case Formula::Kind::implication:
          op = " -> ";
          left = p + 1;
          right = p;
          break;
        case Formula::Kind::equivalence: op = " <-> "; break;
        default: break;
      }
      print(f.lhs(), left, out);
      out += op;
      print(f.rhs(), right, out);
    }
  }
  if (parens) out += ')';
}

}  // namespace

std::set<std::string> Formula::atoms() const {
  std::set<std::string> out;
  collect_atoms(*this, out);
  return out;
}

std::string Formula::to_string() const {
  std::string out;
  print(*this, 0, out);
  return out;
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.node_->kind != b.node_->kind || a.node_->name != b.node_->name) return false;
  return a.node_->children == b.node_->children;
}

// ---------------------------------------------------------------------------

World::World(AtomSet atoms, std::uint32_t index) : atoms_(std::move(atoms)), index_(index) {
  if (atoms_.size() < 32 && index_ >= (std::uint32_t{1} << atoms_.size())) {
    throw Error("world index out of range");
  }
}

bool World::value(std::size_t atom) const {
  const std::size_t shift = atoms_.size() - 1 - atom;
  return ((index_ >> shift) & 1u) == 0;
}

bool World::value(std::string_view atom) const { return value(atoms_.index_of(atom)); }

std::string World::name() const {
  std::string out;
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    if (!value(i)) out += '-';
    out += atoms_[i];
  }
  return out;
}

World World::from_name(const AtomSet& atoms, std::string_view name) {
  std::uint32_t index = 0;
  std::size_t pos = 0;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    bool truth = true;
    if (pos < name.size() && name[pos] == '-') {
      truth = false;
      ++pos;
    }
    if (name.substr(pos, atoms[i].size()) != atoms[i]) {
      throw Error("'" + std::string(name) + "' does not name a world over the atom set");
    }
    pos += atoms[i].size();
    index = (index << 1) | (truth ? 0u : 1u);
  }
  if (pos != name.size()) {
    throw Error("'" + std::string(name) + "' does not name a world over the atom set");
  }
  return World(atoms, index);
}

std::vector<World> worlds(const AtomSet& atoms) {
  if (atoms.size() > AtomSet::max_atoms) {
    throw LimitExceededError("world enumeration limited to " + std::to_string(AtomSet::max_atoms) +
                             " atoms");
  }
  const std::uint32_t count = std::uint32_t{1} << atoms.size();
  std::vector<World> out;
  out.reserve(count);
  for (std::uint32_t i = 0; i < count; ++i) out.emplace_back(atoms, i);
  return out;
}

bool eval(const World& w, const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::top: return true;
    case Formula::Kind::bottom: return false;
    case Formula::Kind::atom: return w.value(std::string_view(f.atom_name()));
    case Formula::Kind::negation: return !eval(w, f.operand());
    default: break;
  }
  // No short-circuiting: an unknown atom on either side must be reported.
  const bool lhs = eval(w, f.lhs());
  const bool rhs = eval(w, f.rhs());
  switch (f.kind()) {
    case Formula::Kind::conjunction: return lhs && rhs;
    case Formula::Kind::disjunction: return lhs || rhs;
    case Formula::Kind::implication: return !lhs || rhs;
    default: return lhs == rhs;
  }
}

// ---------------------------------------------------------------------------

std::set<std::string> Conditional::atoms() const {
  auto out = claim.atoms();
  auto more = premise.atoms();
  out.insert(more.begin(), more.end());
  return out;
}

std::string Conditional::to_string() const {
  if (premise == shared_top()) return "(" + claim.to_string() + ")";
  return "(" + claim.to_string() + " | " + premise.to_string() + ")";
}

ConditionalStatus conditional_status(const World& w, const Conditional& d) {
  // Evaluate both sides so unknown atoms are reported regardless of the premise.
  const bool claim = eval(w, d.claim);
  const bool premise = eval(w, d.premise);
  if (!premise) return ConditionalStatus::neutral;
  return claim ? ConditionalStatus::verifies : ConditionalStatus::falsifies;
}

}  // namespace strata
