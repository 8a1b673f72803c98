#include "mobius/verify.hpp"

#include <algorithm>
#include <sstream>

#include "mobius/golden.hpp"
#include "mobius/named_automorphisms.hpp"
#include "mobius/realizability.hpp"

namespace mobius {

namespace {

using Names = std::vector<std::string>;

Names report_names(const RealizabilityReport& r) {
  Names out;
  for (const auto& g : r.groups) out.push_back(g.name.to_string());
  return out;
}

std::string join(const Names& names) {
  std::string out;
  for (const auto& n : names) out += (out.empty() ? "" : ", ") + n;
  return out;
}

CheckResult check(std::string name, bool passed, std::string detail) {
  return {std::move(name), passed, std::move(detail)};
}

CheckResult automorphism_orders() {
  std::ostringstream detail;
  bool ok = true;
  auto expect = [&](std::size_t n, std::size_t order, const GroupName& name) {
    const PermGroup aut = automorphisms(mobius_ladder(n).graph);
    const GroupName got = recognize(aut);
    detail << "M" << n << ":" << aut.order() << "/" << got.to_string() << " ";
    ok &= aut.order() == order && (n == 1 || got == name);
  };
  expect(1, 2, GroupName::cyclic(2));
  expect(2, 24, GroupName::symmetric(4));
  const PermGroup k = automorphisms(k33().graph);
  ok &= k.order() == 72 && recognize(k) == GroupName::wreath_s3_z2();
  detail << "K33:" << k.order() << "/" << recognize(k).to_string() << " ";
  for (std::size_t n = 4; n <= 8; ++n) {
    expect(n, 4 * n, GroupName::dihedral(2 * n));
  }
  return check("automorphism groups", ok, detail.str());
}

CheckResult relations() {
  using namespace named;
  const Permutation fp = f() * psi();
  const std::vector<std::pair<const char*, bool>> rel = {
      {"fg=gf", f() * g() == g() * f()},
      {"fpsi=psif", f() * psi() == psi() * f()},
      {"psi g psi=g^-1", psi() * g() * psi() == g().inverse()},
      {"phi f phi=f^-1", phi() * f() * phi() == f().inverse()},
      {"phi g phi=g^-1", phi() * g() * phi() == g().inverse()},
      {"phi(fpsi)phi=(fpsi)^-1", phi() * fp * phi() == fp.inverse()},
  };
  std::string failed;
  for (const auto& [name, holds] : rel) {
    if (!holds) failed += std::string(failed.empty() ? "" : ", ") + name;
  }
  return check("relations", failed.empty(),
               failed.empty() ? "6 of 6 hold" : "fail: " + failed);
}

CheckResult generated_groups() {
  using namespace named;
  const Permutation fp = f() * psi();
  const GroupName z3 = GroupName::cyclic(3);
  const GroupName d3 = GroupName::dihedral(3);
  struct Row {
    const char* label;
    std::vector<Permutation> gens;
    GroupName expected;
  };
  const std::vector<Row> rows = {
      {"<fpsi,phi>", {fp, phi()}, GroupName::dihedral(6)},
      {"<fpsi>", {fp}, GroupName::cyclic(6)},
      {"<f,phi>", {f(), phi()}, d3},
      {"<f>", {f()}, z3},
      {"<psi,phi>", {psi(), phi()}, GroupName::dihedral(2)},
      {"<psi>", {psi()}, GroupName::cyclic(2)},
      {"<f,g>", {f(), g()}, GroupName::direct_product({z3, z3})},
      {"<f,g,phi>", {f(), g(), phi()}, GroupName::generalized_dihedral_z3xz3()},
      {"<f,g,psi>", {f(), g(), psi()}, GroupName::direct_product({d3, z3})},
      {"<f,g,phi,psi>", {f(), g(), phi(), psi()},
       GroupName::direct_product({d3, d3})},
  };
  std::string failed;
  for (const auto& row : rows) {
    const PermGroup h = PermGroup::generate(row.gens);
    if (h.order() != row.expected.order() || recognize(h) != row.expected) {
      failed += std::string(failed.empty() ? "" : ", ") + row.label;
    }
  }
  return check("generated groups", failed.empty(),
               failed.empty() ? "10 of 10 match" : "fail: " + failed);
}

CheckResult catalog_stabilizers() {
  std::ostringstream detail;
  bool ok = true;
  for (const auto& entry : catalog()) {
    const PermGroup h = evaluate(entry);
    const GroupName got = recognize(h);
    ok &= h.order() == entry.expected.order() && got == entry.expected;
    detail << h.order() << " ";
  }
  return check("catalog stabilizers", ok, "orders " + detail.str());
}

CheckResult ladder_stabilizers() {
  std::size_t checked = 0;
  std::string failed;
  for (std::size_t n = 4; n <= 8; ++n) {
    for (std::size_t k = 2; k <= 2 * n; ++k) {
      if ((2 * n) % k) continue;
      for (bool inv : {true, false}) {
        const PermGroup h = stabilizer(ladder_decoration(n, k, inv));
        const GroupName want =
            inv ? GroupName::dihedral(k) : GroupName::cyclic(k);
        ++checked;
        if (h.order() != (inv ? 2 * k : k) || recognize(h) != want) {
          failed += " n=" + std::to_string(n) + ",k=" + std::to_string(k) +
                    (inv ? ",inv" : ",noninv");
        }
      }
    }
  }
  return check("ladder stabilizers", failed.empty(),
               failed.empty() ? std::to_string(checked) + " decorations"
                              : "fail:" + failed);
}

CheckResult admissibility() {
  const PermGroup adm = admissible_subgroup();
  const GroupName name = recognize(adm);
  Names classes;
  for (const auto& c : isomorphism_classes(admissible_subgroups())) {
    classes.push_back(c.to_string());
  }
  const Names table = report_names(classify(3));
  const bool ok = adm.order() == 36 &&
                  name == GroupName::direct_product(
                              {GroupName::dihedral(3), GroupName::dihedral(3)}) &&
                  classes == table;
  return check("admissibility", ok,
               "order " + std::to_string(adm.order()) + ", " +
                   name.to_string() + ", " + std::to_string(classes.size()) +
                   " classes");
}

CheckResult classify_tables() {
  const std::vector<std::pair<std::size_t, Names>> expected = {
      {1, {"1", "Z2"}},
      {2, {"1", "Z2", "Z3", "D2", "Z4", "D3", "D4", "A4", "S4"}},
      {3,
       {"1", "Z2", "Z3", "D2", "D3", "Z6", "Z3xZ3", "D6", "(Z3xZ3):Z2",
        "D3xZ3", "D3xD3"}},
      {4, {"1", "Z2", "D2", "Z4", "D4", "Z8", "D8"}},
      {5, {"1", "Z2", "D2", "Z5", "D5", "Z10", "D10"}},
  };
  std::string failed;
  for (const auto& [n, names] : expected) {
    const Names got = report_names(classify(n));
    if (got != names) {
      failed += " n=" + std::to_string(n) + " got [" + join(got) + "]";
    }
  }
  return check("classify tables", failed.empty(),
               failed.empty() ? "n = 1..5" : "fail:" + failed);
}

CheckResult lemma() {
  const LemmaReport r = lemma_z2cubed();
  const bool ok = r.all_contain_transposition &&
                  r.subgroups_found == golden::kZ2CubedInAutK33;
  return check("lemma z2cubed", ok,
               std::to_string(r.subgroups_found) + " subgroups" +
                   (r.vacuous ? " (holds vacuously)" : ""));
}

CheckResult corollary(const std::function<void(std::string_view)>& progress) {
  const CorollaryReport r = corollary_scan_s6(progress);
  std::string detail = std::to_string(r.total_subgroups) + " subgroups, " +
                       std::to_string(r.survivors) + " survivors, " +
                       std::to_string(r.exceptions.size()) + " exceptions";
  for (const auto& c : r.classes) {
    if (!c.realizable) {
      detail += "; " + std::to_string(c.count) + " x " + c.name.to_string() +
                " not realizable";
    }
  }
  const bool ok = r.total_subgroups == golden::kSubgroupsOfS6 &&
                  r.all_survivors_realizable();
  return check("corollary s6", ok, detail);
}

}  // namespace

std::vector<CheckResult> run_checks(
    bool deep, const std::function<void(std::string_view)>& progress) {
  std::vector<CheckResult> results;
  results.push_back(automorphism_orders());
  results.push_back(relations());
  results.push_back(generated_groups());
  results.push_back(catalog_stabilizers());
  results.push_back(ladder_stabilizers());
  results.push_back(admissibility());
  results.push_back(classify_tables());
  results.push_back(lemma());
  if (deep) results.push_back(corollary(progress));
  return results;
}

}  // namespace mobius
