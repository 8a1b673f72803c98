#include "mobius/realizability.hpp"

#include <algorithm>
#include <stdexcept>

#include "mobius/graph.hpp"

namespace mobius {

std::vector<GroupName> isomorphism_classes(
    const std::vector<PermGroup>& groups) {
  std::vector<std::pair<GroupName, const PermGroup*>> classes;
  for (const auto& g : groups) {
    GroupName name = recognize(g);
    bool known = false;
    for (const auto& [seen, rep] : classes) {
      if (seen.family == GroupFamily::Unrecognized &&
          name.family == GroupFamily::Unrecognized) {
        known = are_isomorphic(*rep, g).has_value();
      } else {
        known = seen == name;
      }
      if (known) break;
    }
    if (!known) classes.emplace_back(std::move(name), &g);
  }
  std::vector<GroupName> names;
  for (auto& [name, rep] : classes) names.push_back(std::move(name));
  std::stable_sort(names.begin(), names.end(), report_order_less);
  return names;
}

namespace {

void sort_report(RealizabilityReport& report) {
  std::stable_sort(report.groups.begin(), report.groups.end(),
                   [](const RealizableGroup& a, const RealizableGroup& b) {
                     return report_order_less(a.name, b.name);
                   });
}

void add_group(RealizabilityReport& report, GroupName name,
               std::optional<CatalogEntry> witness, std::string provenance) {
  for (const auto& existing : report.groups) {
    if (existing.name == name) return;
  }
  const std::size_t order = name.order();
  report.groups.push_back(
      {std::move(name), order, std::move(witness), std::move(provenance)});
}

RealizabilityReport classify_theta() {
  RealizabilityReport report;
  report.n = 1;
  const Graph theta = mobius_ladder(1).graph;
  Decoration knotted(theta);
  knotted.add_knot(0, KnotLabel{"N", false}, Orientation{1, 2});
  const std::vector<CatalogEntry> witnesses = {
      {"theta-planar", Decoration(theta), GroupName::cyclic(2),
       "planar theta graph", Evaluation::Stabilizer},
      {"theta-knotted", std::move(knotted), GroupName::trivial(),
       "theta graph with a non-invertible knot in one edge",
       Evaluation::Stabilizer},
  };
  for (const auto& w : witnesses) {
    add_group(report, recognize(evaluate(w)), w, "theta graph");
  }
  return report;
}

RealizabilityReport classify_k4() {
  RealizabilityReport report;
  report.n = 2;
  const auto subgroups = all_subgroups(automorphisms(mobius_ladder(2).graph));
  for (auto& name : isomorphism_classes(subgroups)) {
    add_group(report, std::move(name), std::nullopt, "subgroup of Aut(K4)");
  }
  return report;
}

RealizabilityReport classify_k33() {
  RealizabilityReport report;
  report.n = 3;
  std::vector<std::pair<GroupName, const CatalogEntry*>> witnessed;
  for (const auto& entry : catalog()) {
    witnessed.emplace_back(recognize(evaluate(entry)), &entry);
  }
  for (auto& name : isomorphism_classes(admissible_subgroups())) {
    std::optional<CatalogEntry> witness;
    for (const auto& [w_name, entry] : witnessed) {
      if (w_name == name) {
        witness = *entry;
        break;
      }
    }
    std::string provenance = "admissible subgroup of Aut(K3,3)";
    if (witness) {
      const std::string& n = witness->name;
      provenance = n.rfind("hex-", 0) == 0   ? "hexagon construction"
                   : n.rfind("fan-", 0) == 0 ? "fan construction"
                                             : "distinct knots";
    }
    add_group(report, std::move(name), std::move(witness), provenance);
  }
  return report;
}

RealizabilityReport classify_ladder(std::size_t n) {
  RealizabilityReport report;
  report.n = n;
  const std::size_t rim = 2 * n;
  const std::string tag = "ladder-n" + std::to_string(n);
  const Graph graph = mobius_ladder(n).graph;

  add_group(report, GroupName::trivial(),
            CatalogEntry{tag + "-distinct", distinct_labels(graph),
                         GroupName::trivial(), "distinct knots on every edge",
                         Evaluation::Stabilizer},
            "distinct knots");
  for (std::size_t k = 2; k <= rim; ++k) {
    if (rim % k) continue;
    const std::string kk = "-k" + std::to_string(k);
    add_group(report, GroupName::cyclic(k),
              CatalogEntry{tag + kk + "-noninvertible",
                           ladder_decoration(n, k, false), GroupName::cyclic(k),
                           "same non-invertible knot on rim edges spaced " +
                               std::to_string(rim / k) + " apart",
                           Evaluation::Stabilizer},
              "2n-gon construction");
    if (k == rim) {
      add_group(report, GroupName::dihedral(k),
                CatalogEntry{tag + "-bare", Decoration(graph),
                             GroupName::dihedral(k), "no knots",
                             Evaluation::Stabilizer},
                "2n-gon construction");
    } else {
      add_group(report, GroupName::dihedral(k),
                CatalogEntry{tag + kk + "-invertible",
                             ladder_decoration(n, k, true),
                             GroupName::dihedral(k),
                             "same invertible knot on rim edges spaced " +
                                 std::to_string(rim / k) + " apart",
                             Evaluation::Stabilizer},
                "2n-gon construction");
    }
  }
  return report;
}

}  // namespace

RealizabilityReport classify(std::size_t n) {
  RealizabilityReport report;
  switch (n) {
    case 0:
      throw std::invalid_argument("classify needs n >= 1");
    case 1:
      report = classify_theta();
      break;
    case 2:
      report = classify_k4();
      break;
    case 3:
      report = classify_k33();
      break;
    default:
      report = classify_ladder(n);
  }
  sort_report(report);
  return report;
}

LemmaReport lemma_z2cubed() {
  LemmaReport report;
  const GroupName target = GroupName::direct_product(
      {GroupName::cyclic(2), GroupName::cyclic(2), GroupName::cyclic(2)});
  for (auto& h : all_subgroups(k33_automorphisms())) {
    if (h.order() != 8) continue;
    if (recognize(h) != target) continue;
    const bool has_transposition =
        std::any_of(h.elements().begin(), h.elements().end(), is_transposition);
    report.all_contain_transposition &= has_transposition;
    report.subgroups.push_back(std::move(h));
  }
  report.subgroups_found = report.subgroups.size();
  report.vacuous = report.subgroups.empty();
  return report;
}

CorollaryReport corollary_scan_s6(
    const std::function<void(std::string_view)>& progress) {
  auto say = [&](const std::string& line) {
    if (progress) progress(line);
  };
  CorollaryReport report;
  const PermGroup s6 = PermGroup::generate(
      {perm_from_cycles({{1, 2, 3, 4, 5, 6}}, 6), perm_from_cycles({{1, 2}}, 6)});

  say("enumerating subgroups of S6");
  const auto subgroups = all_subgroups(s6);
  report.total_subgroups = subgroups.size();
  say("found " + std::to_string(subgroups.size()) + " subgroups");

  std::vector<PermGroup> survivors;
  for (const auto& h : subgroups) {
    bool excluded = false;
    for (const auto& p : h.elements()) {
      const std::size_t o = p.order();
      if (o == 4 || o == 5 || is_transposition(p)) {
        excluded = true;
        break;
      }
    }
    if (!excluded) {
      survivors.push_back(h);
    } else if (h == s6) {
      report.full_group_filtered_out = true;
    }
  }
  report.survivors = survivors.size();
  say(std::to_string(survivors.size()) + " subgroups pass the filter");

  say("classifying K3,3");
  const auto realizable = classify(3);

  say("recognizing survivors");
  std::vector<std::pair<ClassCount, const PermGroup*>> counts;
  for (const auto& h : survivors) {
    GroupName name = recognize(h);
    auto it = std::find_if(counts.begin(), counts.end(), [&](const auto& c) {
      if (c.first.name.family == GroupFamily::Unrecognized &&
          name.family == GroupFamily::Unrecognized) {
        return are_isomorphic(*c.second, h).has_value();
      }
      return c.first.name == name;
    });
    if (it != counts.end()) {
      ++it->first.count;
      if (!it->first.realizable) report.exceptions.push_back(h);
      continue;
    }
    bool ok = std::any_of(
        realizable.groups.begin(), realizable.groups.end(),
        [&](const RealizableGroup& r) { return r.name == name; });
    if (!ok) report.exceptions.push_back(h);
    counts.push_back({ClassCount{std::move(name), 1, ok}, &h});
  }
  for (auto& [count, rep] : counts) report.classes.push_back(std::move(count));
  std::stable_sort(report.classes.begin(), report.classes.end(),
                   [](const ClassCount& a, const ClassCount& b) {
                     return report_order_less(a.name, b.name);
                   });
  say("done");
  return report;
}

}  // namespace mobius
