#include "strata/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "strata/enforce.hpp"
#include "strata/error.hpp"
#include "strata/io.hpp"
#include "strata/ordsem.hpp"
#include "strata/stratified.hpp"
#include "strata/systemz.hpp"

namespace strata::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Common {
  std::string file;
  std::string format;  // empty: from the extension
  bool json = false;
};

std::string read_input(const std::string& path, std::istream& in) {
  std::stringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error("cannot open '" + path + "'");
  buf << f.rdbuf();
  return buf.str();
}

std::string detect_format(const Common& c, const std::string& fallback) {
  if (!c.format.empty()) return c.format;
  for (const char* ext : {".apx", ".tgf", ".kb"}) {
    const std::string e(ext);
    if (c.file.size() > e.size() && c.file.compare(c.file.size() - e.size(), e.size(), e) == 0) {
      return e.substr(1);
    }
  }
  return fallback;
}

AF load_af(const Common& c, std::istream& in) {
  const std::string fmt = detect_format(c, "apx");
  if (fmt == "kb") throw Error("this command expects an argumentation framework, not a knowledge base");
  return parse_af(read_input(c.file, in), fmt == "tgf" ? AfFormat::tgf : AfFormat::apx);
}

KnowledgeBase load_kb(const Common& c, const std::string& atom_order, std::istream& in) {
  const std::string fmt = detect_format(c, "kb");
  if (fmt != "kb") throw Error("this command expects a knowledge base (.kb)");
  std::optional<AtomSet> atoms;
  if (!atom_order.empty()) {
    std::vector<std::string> names;
    std::stringstream ss(atom_order);
    for (std::string a; std::getline(ss, a, ',');) names.push_back(a);
    atoms = AtomSet(std::move(names));
  }
  return parse_kb(read_input(c.file, in), atoms);
}

Json rank_json(Rank r) {
  if (!r.is_finite()) return "inf";
  return r.value();
}

Json ranks_json(const AF& af, const StratifiedLabeling& s) {
  Json j = Json::object();
  for (ArgIndex a = 0; a < af.size(); ++a) j[af.name(a)] = rank_json(s[a]);
  return j;
}

std::size_t stratify_budget() {
  const char* env = std::getenv("STRATA_BUDGET");
  if (!env || !*env) return StratifyOptions{}.max_labelings;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (*end != '\0' || v == 0) throw Error(std::string("STRATA_BUDGET must be a positive integer, got '") + env + "'");
  return static_cast<std::size_t>(v);
}

void emit(std::ostream& out, const std::string& command, const Common& c, Json result) {
  Json doc;
  doc["command"] = command;
  doc["input"] = c.file;
  doc["result"] = std::move(result);
  out << doc.dump(2) << "\n";
}

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("FILE", c.file, "input file, - for stdin")->required();
  sub->add_option("--format", c.format, "input format")->check(CLI::IsMember({"apx", "tgf", "kb"}));
  sub->add_flag("--json", c.json, "machine-readable output");
}

CLI::Option* add_semantics(CLI::App* sub, std::string& sem) {
  return sub
      ->add_option("--sem", sem, "complete, grounded, preferred, stable or semi-stable")
      ->required()
      ->check([](const std::string& s) {
        return parse_semantics(s) ? std::string() : "unknown semantics '" + s + "'";
      });
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Stratified labelings of argumentation frameworks and System Z"};
  app.name("strata");
  app.require_subcommand(1);

  Common c;
  std::string sem = "grounded";
  std::string prop;
  std::string atom_order;
  std::string out_format = "apx";
  std::string target;
  bool partition = false;
  std::size_t trials = 50;
  std::uint64_t seed = 0;
  std::size_t budget = 3;
  std::size_t index = 0;

  auto* solve = app.add_subcommand("solve", "enumerate sigma-labelings");
  add_common(solve, c);
  add_semantics(solve, sem);

  auto* stratify = app.add_subcommand("stratify", "enumerate sigma-stratified labelings");
  add_common(stratify, c);
  add_semantics(stratify, sem);

  auto* zrank = app.add_subcommand("zrank", "System Z ranks of all worlds");
  add_common(zrank, c);
  zrank->add_flag("--partition", partition, "print the Z-partition instead");
  zrank->add_option("--atom-order", atom_order, "comma separated atoms, first varies slowest");

  auto* induce = app.add_subcommand("induce", "framework induced by the System Z ranks");
  add_common(induce, c);
  induce->add_option("--out", out_format, "output format")->check(CLI::IsMember({"apx", "tgf", "dot"}));
  induce->add_option("--atom-order", atom_order, "comma separated atoms");

  auto* bridge = app.add_subcommand("bridge", "compare System Z with grounded-stratified ranks");
  add_common(bridge, c);

  auto* check = app.add_subcommand("check", "check a ranking postulate");
  add_common(check, c);
  add_semantics(check, sem);
  check->add_option("--prop", prop, "ab, ir, vp, wvp, dp or qp")
      ->required()
      ->check(CLI::IsMember({"ab", "ir", "vp", "wvp", "dp", "qp"}));
  check->add_option("--trials", trials, "random isomorphisms for ab");
  check->add_option("--seed", seed, "random seed");

  auto* enforce = app.add_subcommand("enforce", "minimal attack edits making a set credulously accepted");
  add_common(enforce, c);
  add_semantics(enforce, sem);
  enforce->add_option("--target", target, "comma separated arguments")->required();
  enforce->add_option("--budget", budget, "largest edit count tried");

  auto* scan = app.add_subcommand("scan", "pairs where enforcement cost and rank disagree");
  add_common(scan, c);
  add_semantics(scan, sem);
  scan->add_option("--budget", budget, "largest edit count tried");

  auto* dot = app.add_subcommand("dot", "Graphviz output colored by rank");
  add_common(dot, c);
  add_semantics(dot, sem);
  dot->add_option("--index", index, "which stratified labeling to draw");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    const Semantics sigma = *parse_semantics(sem);
    StratifyOptions stratify_options{stratify_budget()};

    if (solve->parsed()) {
      const AF af = load_af(c, in);
      const auto all = labelings(af, sigma);
      if (c.json) {
        Json list = Json::array();
        for (const auto& l : all) {
          Json j = Json::object();
          for (ArgIndex a = 0; a < af.size(); ++a) j[af.name(a)] = std::string(to_string(l[a]));
          list.push_back(std::move(j));
        }
        emit(out, "solve", c, {{"semantics", std::string(to_string(sigma))}, {"labelings", list}});
      } else {
        for (const auto& l : all) out << format_labeling(af, l) << "\n";
      }
      return 0;
    }

    if (stratify->parsed()) {
      const AF af = load_af(c, in);
      const auto all = stratified_labelings(af, sigma, stratify_options);
      if (c.json) {
        Json list = Json::array();
        for (const auto& s : all) list.push_back(ranks_json(af, s));
        emit(out, "stratify", c, {{"semantics", std::string(to_string(sigma))}, {"labelings", list}});
      } else {
        for (const auto& s : all) out << format_ranks(af, s) << "\n";
      }
      return 0;
    }

    if (zrank->parsed()) {
      const KnowledgeBase kb = load_kb(c, atom_order, in);
      if (partition) {
        const ZPartition z = z_partition(kb);
        Json strata_json = Json::array();
        for (std::size_t i = 0; i < z.strata.size(); ++i) {
          Json layer = Json::array();
          std::string line;
          for (const auto& d : z.strata[i]) {
            layer.push_back(d.to_string());
            line += (line.empty() ? "" : " ") + d.to_string();
          }
          strata_json.push_back(std::move(layer));
          if (!c.json) out << i << " " << line << "\n";
        }
        if (c.json) emit(out, "zrank", c, {{"partition", strata_json}});
        return 0;
      }
      const RankingFunction kappa = kappa_z(kb);
      Json rows = Json::array();
      for (const World& w : worlds(kb.atoms())) {
        if (c.json) {
          rows.push_back({{"world", w.name()}, {"rank", rank_json(kappa(w))}});
        } else {
          out << w.name() << " " << kappa(w) << "\n";
        }
      }
      if (c.json) emit(out, "zrank", c, {{"atoms", kb.atoms().names()}, {"worlds", rows}});
      return 0;
    }

    if (induce->parsed()) {
      const AF af = induced_af(load_kb(c, atom_order, in));
      if (c.json) {
        Json attacks = Json::array();
        for (const auto& [a, b] : af.attack_list()) attacks.push_back({af.name(a), af.name(b)});
        emit(out, "induce", c, {{"arguments", af.arguments()}, {"attacks", attacks}});
      } else if (out_format == "dot") {
        out << to_dot(af);
      } else {
        out << print_af(af, out_format == "tgf" ? AfFormat::tgf : AfFormat::apx);
      }
      return 0;
    }

    if (bridge->parsed()) {
      const BridgeReport report = bridge_check(load_kb(c, "", in));
      if (c.json) {
        emit(out, "bridge", c, {{"holds", report.holds}, {"mismatches", report.mismatches}});
      } else {
        out << (report.holds ? "holds" : "fails") << "\n";
        for (const auto& m : report.mismatches) out << m << "\n";
      }
      return report.holds ? 0 : 1;
    }

    if (check->parsed()) {
      const AF af = load_af(c, in);
      CheckOptions options;
      options.trials = trials;
      options.seed = seed;
      options.stratify = stratify_options;
      const PropertyReport report = check_property(af, sigma, *parse_postulate(prop), options);
      if (c.json) {
        Json witnesses = Json::array();
        for (const auto& w : report.witnesses) {
          witnesses.push_back({{"first", w.first}, {"second", w.second}, {"detail", w.detail}});
        }
        emit(out, "check", c,
             {{"property", prop},
              {"semantics", std::string(to_string(sigma))},
              {"holds", report.holds},
              {"witnesses", witnesses}});
      } else {
        out << prop << " " << (report.holds ? "holds" : "fails") << "\n";
        for (const auto& w : report.witnesses) {
          if (w.second.empty()) {
            out << w.first << " " << w.detail << "\n";
          } else {
            out << "(" << w.first << "," << w.second << ") " << w.detail << "\n";
          }
        }
      }
      return report.holds ? 0 : 1;
    }

    if (enforce->parsed()) {
      const AF af = load_af(c, in);
      ArgumentSet goal;
      std::stringstream ss(target);
      for (std::string a; std::getline(ss, a, ',');) {
        if (!a.empty()) goal.insert(a);
      }
      const EnforcementResult r = characteristic(af, sigma, goal, budget);
      const bool finite = r.status == EnforcementResult::Status::finite;
      if (c.json) {
        Json edits = Json::array();
        for (const auto& e : r.witness) edits.push_back(e.to_string());
        Json result{{"semantics", std::string(to_string(sigma))},
                    {"target", Json(std::vector<std::string>(goal.begin(), goal.end()))},
                    {"status", finite ? "finite" : "unknown_beyond"},
                    {"value", r.value}};
        if (finite) result["witness"] = edits;
        emit(out, "enforce", c, std::move(result));
      } else if (finite) {
        out << r.value << "\n";
        for (const auto& e : r.witness) out << e.to_string() << "\n";
      } else {
        out << "unknown beyond " << r.value << "\n";
      }
      return 0;
    }

    if (scan->parsed()) {
      const AF af = load_af(c, in);
      const auto pairs = conjecture_scan(af, sigma, budget, stratify_options);
      if (c.json) {
        Json list = Json::array();
        for (const auto& [a, b] : pairs) list.push_back({a, b});
        emit(out, "scan", c, {{"semantics", std::string(to_string(sigma))}, {"pairs", list}});
      } else {
        for (const auto& [a, b] : pairs) out << "(" << a << "," << b << ")\n";
      }
      return 0;
    }

    if (dot->parsed()) {
      const AF af = load_af(c, in);
      const auto all = stratified_labelings(af, sigma, stratify_options);
      std::string graph;
      if (all.empty()) {
        err << "strata: no " << to_string(sigma) << "-stratified labeling, drawing without ranks\n";
        graph = to_dot(af);
      } else if (index >= all.size()) {
        throw Error("--index " + std::to_string(index) + " out of range, " + std::to_string(all.size()) +
                    " stratified labelings");
      } else {
        graph = to_dot(af, &all[index]);
      }
      if (c.json) {
        emit(out, "dot", c, {{"semantics", std::string(to_string(sigma))}, {"dot", graph}});
      } else {
        out << graph;
      }
      return 0;
    }
  } catch (const std::exception& e) {
    err << "strata: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace strata::cli
