#include "strata/io.hpp"

#include <cctype>
#include <map>
#include <sstream>
#include <vector>

#include "strata/error.hpp"

namespace strata {

namespace {

struct Location {
  std::size_t line = 1;
  std::size_t column = 1;
};

bool is_name_char(char c) {
  return !std::isspace(static_cast<unsigned char>(c)) && c != '(' && c != ')' && c != ',' &&
         c != '.' && c != '%';
}

/// Character cursor for the APX grammar.
class ApxReader {
 public:
  explicit ApxReader(std::string_view text) : text_(text) {}

  void skip_blank() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '%') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  bool at_end() {
    skip_blank();
    return pos_ >= text_.size();
  }

  Location location() const { return loc_; }

  void expect(char c) {
    skip_blank();
    if (pos_ >= text_.size() || text_[pos_] != c) {
      fail(std::string("expected '") + c + "'");
    }
    advance();
  }

  std::string name() {
    skip_blank();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && is_name_char(text_[pos_])) advance();
    if (start == pos_) fail("expected a name");
    return std::string(text_.substr(start, pos_ - start));
  }

  [[noreturn]] void fail(const std::string& message) const {
    std::string found = pos_ < text_.size() ? std::string("'") + text_[pos_] + "'" : "end of input";
    throw ParseError(message + ", found " + found, loc_.line, loc_.column);
  }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++loc_.line;
      loc_.column = 1;
    } else {
      ++loc_.column;
    }
    ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  Location loc_;
};

std::string at(Location loc) { return std::to_string(loc.line) + ":" + std::to_string(loc.column) + ": "; }

struct PendingAttack {
  std::string from;
  std::string to;
  Location where;
};

AF build_af(const std::vector<std::pair<std::string, Location>>& args,
            const std::vector<PendingAttack>& pending) {
  std::map<std::string, Location> declared;
  std::vector<std::string> names;
  for (const auto& [name, where] : args) {
    if (!declared.emplace(name, where).second) {
      throw DuplicateArgumentError(at(where) + "duplicate argument '" + name + "'");
    }
    names.push_back(name);
  }
  std::vector<std::pair<std::string, std::string>> attacks;
  for (const auto& a : pending) {
    for (const auto& end : {a.from, a.to}) {
      if (!declared.count(end)) {
        throw UnknownArgumentError(at(a.where) + "attack references unknown argument '" + end + "'");
      }
    }
    attacks.emplace_back(a.from, a.to);
  }
  return AF(std::move(names), attacks);
}

AF parse_apx(std::string_view text) {
  ApxReader r(text);
  std::vector<std::pair<std::string, Location>> args;
  std::vector<PendingAttack> attacks;
  while (!r.at_end()) {
    const Location where = r.location();
    const std::string keyword = r.name();
    if (keyword == "arg") {
      r.expect('(');
      const Location name_at = r.location();
      std::string name = r.name();
      r.expect(')');
      r.expect('.');
      args.emplace_back(std::move(name), name_at);
    } else if (keyword == "att") {
      r.expect('(');
      std::string from = r.name();
      r.expect(',');
      std::string to = r.name();
      r.expect(')');
      r.expect('.');
      attacks.push_back({std::move(from), std::move(to), where});
    } else {
      throw ParseError("unknown statement '" + keyword + "'", where.line, where.column);
    }
  }
  return build_af(args, attacks);
}

std::vector<std::pair<std::string, std::size_t>> split_tokens(std::string_view line) {
  std::vector<std::pair<std::string, std::size_t>> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (start < i) out.emplace_back(std::string(line.substr(start, i - start)), start + 1);
  }
  return out;
}

AF parse_tgf(std::string_view text) {
  std::vector<std::pair<std::string, Location>> args;
  std::vector<PendingAttack> attacks;
  bool edges = false;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto tokens = split_tokens(line);
    if (tokens.empty()) continue;
    if (!edges && tokens[0].first == "#") {
      if (tokens.size() > 1) throw ParseError("unexpected text after '#'", line_no, tokens[1].second);
      edges = true;
      continue;
    }
    if (!edges) {
      // Anything after the id is a node label and is ignored.
      args.emplace_back(tokens[0].first, Location{line_no, tokens[0].second});
    } else {
      if (tokens.size() < 2) {
        throw ParseError("edge needs two node ids", line_no, tokens[0].second);
      }
      attacks.push_back({tokens[0].first, tokens[1].first, Location{line_no, tokens[0].second}});
    }
  }
  return build_af(args, attacks);
}

// ---------------------------------------------------------------------------
// Formulas and conditionals

enum class Tok { ident, top, bottom, neg, conj, disj, impl, iff, lparen, rparen, bar, end };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

std::vector<Token> lex(std::string_view text, std::size_t line) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto push = [&](Tok kind, std::size_t len) {
    out.push_back({kind, std::string(text.substr(i, len)), line, i + 1});
    i += len;
  };
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c >= 'a' && c <= 'z') {
      std::size_t j = i;
      while (j < text.size() && (std::islower(static_cast<unsigned char>(text[j])) ||
                                 std::isdigit(static_cast<unsigned char>(text[j])) || text[j] == '_')) {
        ++j;
      }
      push(Tok::ident, j - i);
    } else if (text.substr(i, 3) == "<->") {
      push(Tok::iff, 3);
    } else if (text.substr(i, 2) == "->") {
      push(Tok::impl, 2);
    } else if (text.substr(i, 2) == "&&") {
      push(Tok::conj, 2);
    } else if (text.substr(i, 2) == "||") {
      push(Tok::disj, 2);
    } else if (c == '|') {
      push(Tok::bar, 1);
    } else if (c == '!') {
      push(Tok::neg, 1);
    } else if (c == '(') {
      push(Tok::lparen, 1);
    } else if (c == ')') {
      push(Tok::rparen, 1);
    } else if ((c == 'T' || c == 'F') &&
               (i + 1 == text.size() || !std::isalnum(static_cast<unsigned char>(text[i + 1])))) {
      push(c == 'T' ? Tok::top : Tok::bottom, 1);
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", line, i + 1);
    }
  }
  out.push_back({Tok::end, "", line, text.size() + 1});
  return out;
}

std::string describe(const Token& t) { return t.kind == Tok::end ? "end of input" : "'" + t.text + "'"; }

/// Recursive descent over tokens[pos, stop).
class FormulaParser {
 public:
  FormulaParser(const std::vector<Token>& tokens, std::size_t begin, std::size_t stop)
      : tokens_(tokens), pos_(begin), stop_(stop) {}

  Formula parse_all() {
    if (pos_ == stop_) fail("expected a formula");
    Formula f = equivalence();
    if (pos_ != stop_) fail("unexpected " + describe(peek()));
    return f;
  }

 private:
  const Token& peek() const { return pos_ < stop_ ? tokens_[pos_] : end_token(); }
  const Token& end_token() const { return tokens_[stop_ < tokens_.size() ? stop_ : tokens_.size() - 1]; }
  bool accept(Tok kind) {
    if (pos_ < stop_ && tokens_[pos_].kind == kind) {
      ++pos_;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& message) const {
    const Token& t = peek();
    throw ParseError(message, t.line, t.column);
  }

  Formula equivalence() {
    Formula lhs = implication();
    while (accept(Tok::iff)) lhs = Formula::equivalence(lhs, implication());
    return lhs;
  }

  Formula implication() {
    Formula lhs = disjunction();
    if (accept(Tok::impl)) return Formula::implication(lhs, implication());
    return lhs;
  }

  Formula disjunction() {
    Formula lhs = conjunction();
    while (accept(Tok::disj)) lhs = Formula::disjunction(lhs, conjunction());
    return lhs;
  }

  Formula conjunction() {
    Formula lhs = unary();
    while (accept(Tok::conj)) lhs = Formula::conjunction(lhs, unary());
    return lhs;
  }

  Formula unary() {
    if (accept(Tok::neg)) return Formula::negation(unary());
    return primary();
  }

  Formula primary() {
    const Token& t = peek();
    if (accept(Tok::ident)) return Formula::atom(t.text);
    if (accept(Tok::top)) return Formula::top();
    if (accept(Tok::bottom)) return Formula::bottom();
    if (accept(Tok::lparen)) {
      Formula inner = equivalence();
      if (!accept(Tok::rparen)) fail("expected ')', found " + describe(peek()));
      return inner;
    }
    fail("expected a formula, found " + describe(t));
  }

  const std::vector<Token>& tokens_;
  std::size_t pos_;
  std::size_t stop_;
};

Conditional parse_conditional(std::string_view text, std::size_t line) {
  const auto tokens = lex(text, line);
  const std::size_t end = tokens.size() - 1;
  if (tokens[0].kind != Tok::lparen) {
    throw ParseError("a conditional starts with '('", line, tokens[0].column);
  }
  int depth = 0;
  std::size_t close = end;
  std::vector<std::size_t> bars;
  for (std::size_t i = 0; i < end; ++i) {
    if (tokens[i].kind == Tok::lparen) ++depth;
    if (tokens[i].kind == Tok::rparen && --depth == 0) {
      close = i;
      break;
    }
    if (tokens[i].kind == Tok::bar && depth == 1) bars.push_back(i);
  }
  if (close == end) throw ParseError("unbalanced parentheses", line, tokens[end].column);
  if (close + 1 != end) {
    throw ParseError("unexpected " + describe(tokens[close + 1]) + " after conditional", line,
                     tokens[close + 1].column);
  }
  if (bars.size() > 1) {
    throw AmbiguousBarError("more than one '|' separates claim and premise", line, tokens[bars[1]].column);
  }
  if (bars.empty()) return {FormulaParser(tokens, 1, close).parse_all(), Formula::top()};
  return {FormulaParser(tokens, 1, bars[0]).parse_all(),
          FormulaParser(tokens, bars[0] + 1, close).parse_all()};
}

std::string strip_comment(const std::string& line) {
  const auto pct = line.find('%');
  return pct == std::string::npos ? line : line.substr(0, pct);
}

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

const char* fill_for(Rank r) {
  if (!r.is_finite()) return "#bababa";
  switch (r.value()) {
    case 0: return "#a6d96a";
    case 1: return "#fee08b";
    case 2: return "#fdae61";
    default: return "#f46d43";
  }
}

}  // namespace

AF parse_af(std::string_view text, AfFormat format) {
  return format == AfFormat::apx ? parse_apx(text) : parse_tgf(text);
}

std::string print_af(const AF& af, AfFormat format) {
  std::string out;
  if (format == AfFormat::apx) {
    for (const auto& a : af.arguments()) out += "arg(" + a + ").\n";
    for (const auto& [a, b] : af.attack_list()) out += "att(" + af.name(a) + "," + af.name(b) + ").\n";
  } else {
    for (const auto& a : af.arguments()) out += a + "\n";
    out += "#\n";
    for (const auto& [a, b] : af.attack_list()) out += af.name(a) + " " + af.name(b) + "\n";
  }
  return out;
}

Formula parse_formula(std::string_view text) {
  const auto tokens = lex(text, 1);
  return FormulaParser(tokens, 0, tokens.size() - 1).parse_all();
}

KnowledgeBase parse_kb(std::string_view text, std::optional<AtomSet> atoms) {
  std::vector<Conditional> conditionals;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    const std::string body = strip_comment(line);
    if (body.find_first_not_of(" \t\r") == std::string::npos) continue;
    Conditional d = parse_conditional(body, line_no);
    for (const auto& previous : conditionals) {
      if (previous == d) throw ParseError("duplicate conditional " + d.to_string(), line_no, 1);
    }
    conditionals.push_back(std::move(d));
  }
  return KnowledgeBase(std::move(conditionals), std::move(atoms));
}

std::string print_kb(const KnowledgeBase& kb) {
  std::string out;
  for (const auto& d : kb.conditionals()) out += d.to_string() + "\n";
  return out;
}

std::string to_dot(const AF& af, const StratifiedLabeling* ranks) {
  std::string out = "digraph af {\n";
  if (ranks) out += "  node [style=filled];\n";
  for (ArgIndex a = 0; a < af.size(); ++a) {
    out += "  " + quoted(af.name(a));
    if (ranks) {
      const Rank r = (*ranks)[a];
      std::string label = quoted(af.name(a));
      label.insert(label.size() - 1, "\\n" + r.to_string());
      out += " [label=" + label + ", rank=\"" + r.to_string() + "\", fillcolor=\"" + fill_for(r) + "\"]";
    }
    out += ";\n";
  }
  for (const auto& [a, b] : af.attack_list()) {
    out += "  " + quoted(af.name(a)) + " -> " + quoted(af.name(b)) + ";\n";
  }
  return out + "}\n";
}

}  // namespace strata
