// wadefect: Tate cohomology and weak-approximation defects from the command line.

#include "wadefect/catalog.hpp"
#include "wadefect/cohomology.hpp"
#include "wadefect/context_io.hpp"
#include "wadefect/defect.hpp"
#include "wadefect/selftest.hpp"

#include "CLI11.hpp"

#include <iostream>
#include <string>
#include <vector>

using namespace wadefect;

namespace {

enum class Format { text, machine };

Json factors_json(const FiniteAbelianGroup& g) {
  Json out = Json::array();
  for (const auto& d : g.invariant_factors()) out.push_back(io::integer_json(d));
  return out;
}

Json group_json(const FiniteAbelianGroup& g) { return {{"invariant_factors", factors_json(g)}, {"group", g.to_string()}}; }

Json vector_json(const std::vector<Integer>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(io::integer_json(x));
  return out;
}

std::string set_string(const std::vector<std::string>& names) {
  std::string s = "{";
  for (std::size_t i = 0; i < names.size(); ++i) s += (i ? ", " : "") + names[i];
  return s + "}";
}

std::vector<std::string> split_places(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  auto flush = [&] {
    std::size_t a = cur.find_first_not_of(" \t"), b = cur.find_last_not_of(" \t");
    if (a != std::string::npos) out.push_back(cur.substr(a, b - a + 1));
    cur.clear();
  };
  for (char c : text) {
    if (c == ',')
      flush();
    else
      cur += c;
  }
  flush();
  return out;
}

void emit(Format f, const Json& machine, const std::string& text) {
  if (f == Format::machine)
    std::cout << machine.dump() << "\n";
  else
    std::cout << text;
}

int cmd_cohomology(const ContextDocument& doc, int degree, Format f) {
  const auto& ctx = doc.context;
  CohomologyGroup h = tate(ctx.group(), ctx.lattice(), degree);
  Json reps = Json::array();
  for (const auto& r : h.representative_lift()) reps.push_back(vector_json(r));
  Json j = {{"command", "cohomology"}, {"context", doc.name}, {"degree", degree}};
  j.update(group_json(h.value()));
  j["representatives"] = reps;
  emit(f, j, "H^" + std::to_string(degree) + " = " + h.value().to_string() + "\n");
  return 0;
}

int cmd_sha_omega(const ContextDocument& doc, int degree, Format f) {
  const auto& ctx = doc.context;
  ShaOmega s = sha_omega(ctx.group(), ctx.lattice(), degree);
  Json gens = Json::array();
  for (const auto& x : s.handle.generators()) gens.push_back(vector_json(x));
  Json j = {{"command", "sha-omega"}, {"context", doc.name}, {"degree", degree}};
  j.update(group_json(s.group));
  j["cohomology"] = group_json(s.cohomology.value());
  j["generators_in_cohomology"] = gens;
  emit(f, j,
       "H^" + std::to_string(degree) + " = " + s.cohomology.value().to_string() + "\nSha^" + std::to_string(degree) +
           "_Omega = " + s.group.to_string() + "\n");
  return 0;
}

int cmd_defect(const ContextDocument& doc, const std::vector<std::string>& s, Format f) {
  DefectEngine e(doc.context);
  auto names = e.resolve(s);
  FiniteAbelianGroup primal = e.defect_primal(names), dual_path = e.defect_dual(names);
  if (primal.invariant_factors() != dual_path.invariant_factors())
    throw ConsistencyError("defect paths disagree: " + primal.to_string() + " vs " + dual_path.to_string());
  Json j = {{"command", "defect"}, {"context", doc.name}, {"S", names}, {"C_S", group_json(primal)},
            {"C_S_dual_path", group_json(dual_path)}};
  emit(f, j, "C_S = " + primal.to_string() + " (dual path: " + dual_path.to_string() + ")\n");
  return 0;
}

int cmd_verdict(const ContextDocument& doc, const std::vector<std::string>& s, Format f) {
  DefectReport rep = verdict(doc.context, s);
  Json j = {{"command", "verdict"},
            {"context", doc.name},
            {"S", rep.S},
            {"S0", rep.S0},
            {"C_S", group_json(rep.C_S)},
            {"C_S_dual_path", group_json(rep.C_S_dual_path)},
            {"weak_approximation", rep.wa_verdict},
            {"shortcut", to_string(rep.shortcut_used)},
            {"real_approximation", rep.real_approximation}};
  std::string text = "S = " + set_string(rep.S) + "\nS0 = " + set_string(rep.S0) + "\nC_S = " + rep.C_S.to_string() + "\n";
  text += rep.wa_verdict ? "weak approximation holds for S\n" : "weak approximation fails; defect C_S ≅ " + rep.C_S.to_string() + "\n";
  if (rep.shortcut_used != Shortcut::none) text += "shortcut: " + to_string(rep.shortcut_used) + "\n";
  if (rep.real_approximation) text += "note: real approximation\n";
  emit(f, j, text);
  return 0;
}

int cmd_catalog(const std::string& show, Format f) {
  if (!show.empty()) {
    std::cout << catalog_entry(show).document.dump(2) << "\n";
    return 0;
  }
  Json j = Json::array();
  std::string text;
  for (const auto& e : catalog()) {
    j.push_back({{"name", e.name}, {"summary", e.summary}});
    text += e.name + std::string(22 - std::min<std::size_t>(21, e.name.size()), ' ') + e.summary + "\n";
  }
  emit(f, Json{{"command", "catalog"}, {"entries", j}}, text);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tate cohomology of character lattices and the defect of weak approximation"};
  app.require_subcommand(1);

  std::string input, s_list, format = "text", show;
  int degree = 1;
  bool corrupt = false;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "text or machine")->check(CLI::IsMember({"text", "machine"}));
  };
  auto add_input = [&](CLI::App* sub) {
    sub->add_option("--input", input, "context document (JSON file or catalog:<name>)")->required();
  };

  auto* coh = app.add_subcommand("cohomology", "Tate cohomology of the lattice in one degree");
  add_input(coh);
  coh->add_option("--degree", degree, "degree in {-1, 0, 1, 2}");
  add_format(coh);

  auto* sha = app.add_subcommand("sha-omega", "classes vanishing on every cyclic subgroup");
  add_input(sha);
  sha->add_option("--degree", degree, "degree in {-1, 0, 1, 2}");
  add_format(sha);

  auto* def = app.add_subcommand("defect", "C_S by both routes");
  add_input(def);
  def->add_option("--S", s_list, "comma-separated place names");
  add_format(def);

  auto* ver = app.add_subcommand("verdict", "weak approximation verdict for S");
  add_input(ver);
  ver->add_option("--S", s_list, "comma-separated place names");
  add_format(ver);

  auto* cat = app.add_subcommand("catalog", "list built-in contexts");
  cat->add_option("--show", show, "print the document of one entry");
  add_format(cat);

  auto* self = app.add_subcommand("selftest", "run the invariant checks on the catalog");
  self->add_flag("--corrupt-action", corrupt, "damage one action matrix first (negative control)")->group("");
  add_format(self);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  const Format f = format == "machine" ? Format::machine : Format::text;
  try {
    if (*cat) return cmd_catalog(show, f);
    if (*self) {
      SelftestResult r = run_selftest(std::cout, corrupt);
      return r.failed == 0 ? 0 : 2;
    }
    ContextDocument doc = load_context(input);
    if (*coh) return cmd_cohomology(doc, degree, f);
    if (*sha) return cmd_sha_omega(doc, degree, f);
    if (*def) return cmd_defect(doc, split_places(s_list), f);
    if (*ver) return cmd_verdict(doc, split_places(s_list), f);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const ConsistencyError& e) {
    std::cerr << "internal consistency failure: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
