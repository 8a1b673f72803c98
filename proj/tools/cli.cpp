#include "cli.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "mobius/io.hpp"
#include "mobius/realizability.hpp"
#include "mobius/verify.hpp"

namespace mobius::cli {

namespace {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Graph load_graph(const std::string& spec) {
  try {
    if (auto builtin = builtin_graph(spec)) return builtin->graph;
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  try {
    return parse_graph_text(read_file(spec));
  } catch (const std::invalid_argument& e) {
    throw InputError(spec + ": " + e.what());
  }
}

Decoration load_decoration(const std::string& path) {
  const std::string text = read_file(path);
  try {
    return parse_decoration_json(text);
  } catch (const ParseError& e) {
    throw InputError(path + ": " + e.what());
  }
}

void print_group(std::ostream& out, const PermGroup& g, const GroupName& name) {
  out << "order " << g.order() << ", " << name.display() << "\n";
  out << "generators:";
  if (g.generators().empty()) out << " none";
  out << "\n";
  for (const auto& s : g.generators()) out << "  " << to_cycle_string(s) << "\n";
}

const CatalogEntry* matching_entry(const Decoration& d) {
  const std::string text = decoration_to_json(d);
  for (const auto& entry : catalog()) {
    if (decoration_to_json(entry.decoration) == text) return &entry;
  }
  return nullptr;
}

int cmd_aut(const std::string& graph, const std::string& format,
            std::ostream& out) {
  const PermGroup aut = automorphisms(load_graph(graph));
  const GroupName name = recognize(aut);
  if (format == "json") {
    out << group_to_json(aut, name);
  } else {
    print_group(out, aut, name);
  }
  return kOk;
}

int cmd_stabilizer(const std::string& path, bool refined, std::ostream& out) {
  const Decoration d = load_decoration(path);
  PermGroup h = PermGroup::trivial(1);
  try {
    h = refined ? refined_upper_bound(d) : stabilizer(d);
  } catch (const std::invalid_argument& e) {
    throw InputError(path + ": " + e.what());
  }
  print_group(out, h, recognize(h));
  if (const CatalogEntry* entry = matching_entry(d)) {
    out << "catalog entry " << entry->name << ": " << entry->anchor << "\n";
    out << "expected " << entry->expected.display() << "\n";
  } else {
    out << "note: upper bound on the orientation-preserving symmetry group of "
           "the embedding\n";
  }
  return kOk;
}

int cmd_classify(std::size_t n, const std::string& format, std::ostream& out) {
  RealizabilityReport report;
  try {
    report = classify(n);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  out << (format == "json" ? report_to_json(report) : report_to_text(report));
  return kOk;
}

int cmd_admissible(std::ostream& out) {
  const PermGroup adm = admissible_subgroup();
  out << "admissible elements of Aut(K3,3)\n";
  print_group(out, adm, recognize(adm));
  std::map<std::string, std::size_t> counts;
  const auto subgroups = admissible_subgroups();
  for (const auto& h : subgroups) ++counts[recognize(h).to_string()];
  const auto classes = isomorphism_classes(subgroups);
  out << subgroups.size() << " subgroups in " << classes.size()
      << " isomorphism classes\n";
  for (const auto& c : classes) {
    out << "  " << c.display() << "  order " << c.order() << "  x"
        << counts[c.to_string()] << "\n";
  }
  return kOk;
}

int cmd_lemma(std::ostream& out) {
  const LemmaReport r = lemma_z2cubed();
  out << "subgroups of Aut(K3,3) isomorphic to Z_2 x Z_2 x Z_2: "
      << r.subgroups_found << "\n";
  for (const auto& h : r.subgroups) {
    out << " ";
    for (const auto& s : h.generators()) out << " " << to_cycle_string(s);
    out << "\n";
  }
  out << "every one contains a transposition: "
      << (r.all_contain_transposition ? "yes" : "no")
      << (r.vacuous ? " (vacuously)" : "") << "\n";
  return r.all_contain_transposition ? kOk : kMismatch;
}

int cmd_corollary(bool progress, std::ostream& out, std::ostream& err) {
  std::function<void(std::string_view)> say;
  if (progress) say = [&err](std::string_view s) { err << s << "\n"; };
  const CorollaryReport r = corollary_scan_s6(say);
  out << "subgroups of S6: " << r.total_subgroups << "\n";
  out << "without transpositions or elements of order 4 or 5: " << r.survivors
      << "\n";
  for (const auto& c : r.classes) {
    out << "  " << c.name.display() << "  x" << c.count
        << (c.realizable ? "" : "  NOT in the K3,3 list") << "\n";
  }
  out << "exceptions: " << r.exceptions.size() << "\n";
  for (const auto& h : r.exceptions) {
    out << " ";
    for (const auto& s : h.generators()) out << " " << to_cycle_string(s);
    out << "\n";
  }
  return r.all_survivors_realizable() ? kOk : kMismatch;
}

int cmd_catalog(const std::string& name, std::ostream& out) {
  if (name.empty()) {
    for (const auto& entry : catalog()) {
      out << entry.name << "  " << entry.expected.display() << "  order "
          << entry.expected.order() << "  "
          << (entry.evaluation == Evaluation::RefinedBound ? "refined"
                                                           : "stabilizer")
          << "\n    " << entry.anchor << "\n";
    }
    return kOk;
  }
  const CatalogEntry* entry = find_catalog_entry(name);
  if (!entry) throw InputError("no catalog entry named '" + name + "'");
  out << entry->name << ": " << entry->anchor << "\n";
  out << "expected " << entry->expected.display() << "\n";
  const PermGroup h = evaluate(*entry);
  print_group(out, h, recognize(h));
  out << decoration_to_json(entry->decoration);
  return kOk;
}

int cmd_verify(bool deep, std::ostream& out, std::ostream& err) {
  auto say = [&err](std::string_view s) { err << s << "\n"; };
  bool ok = true;
  for (const auto& r : run_checks(deep, say)) {
    out << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail
        << "\n";
    ok &= r.passed;
  }
  return ok ? kOk : kMismatch;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Symmetry groups of decorated Moebius ladders", "mobius"};
  app.require_subcommand(1);

  std::string graph, decoration, format = "text", catalog_name;
  std::size_t n = 0;
  bool refined = false, progress = false, deep = false;
  std::string lemma_name, corollary_name;

  auto* aut = app.add_subcommand("aut", "automorphism group of a graph");
  aut->add_option("--graph", graph, "mobius:<n>, k33 or a graph text file")
      ->required();
  aut->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* stab = app.add_subcommand("stabilizer", "stabilizer of a decoration");
  stab->add_option("--decoration", decoration, "decoration JSON file")
      ->required();
  stab->add_flag("--refined", refined,
                 "intersect with the admissible subgroup (K3,3 only)");

  auto* cls = app.add_subcommand("classify", "realizable groups for M_n");
  cls->add_option("--n", n)->required();
  cls->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* adm = app.add_subcommand("admissible", "admissible subgroup of Aut(K3,3)");

  auto* lem = app.add_subcommand("lemma", "Z2^3 subgroups contain transpositions");
  lem->add_option("name", lemma_name)->required()->check(
      CLI::IsMember({"z2cubed"}));

  auto* cor = app.add_subcommand("corollary", "scan the subgroups of S6");
  cor->add_option("name", corollary_name)->required()->check(
      CLI::IsMember({"s6"}));
  cor->add_flag("--progress", progress, "status lines on stderr");

  auto* cat = app.add_subcommand("catalog", "list or show catalog entries");
  cat->add_option("--name", catalog_name);

  auto* ver = app.add_subcommand("verify", "run the golden checks");
  ver->add_flag("--deep", deep, "include the S6 scan");

  if (!args.empty() && args[0].rfind("-", 0) != 0 &&
      !app.get_subcommand_no_throw(args[0])) {
    err << "unknown command '" << args[0] << "'\n" << app.help();
    return kInputError;
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    err << app.help();
    return kInputError;
  }

  try {
    if (*aut) return cmd_aut(graph, format, out);
    if (*stab) return cmd_stabilizer(decoration, refined, out);
    if (*cls) return cmd_classify(n, format, out);
    if (*adm) return cmd_admissible(out);
    if (*lem) return cmd_lemma(out);
    if (*cor) return cmd_corollary(progress, out, err);
    if (*cat) return cmd_catalog(catalog_name, out);
    if (*ver) return cmd_verify(deep, out, err);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace mobius::cli
