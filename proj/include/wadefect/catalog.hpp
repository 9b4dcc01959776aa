#pragma once

// Built-in example contexts, stored as documents in the input schema.

#include "wadefect/context_io.hpp"

#include <string>
#include <vector>

namespace wadefect {

struct CatalogEntry {
  std::string name;
  std::string summary;
  Json document;
};

namespace catalog_detail {

inline Json cyclic_group(std::size_t n) {
  std::string cycle = "(";
  for (std::size_t i = 0; i < n; ++i) cycle += (i ? " " : "") + std::to_string(i);
  cycle += ")";
  return {{"degree", n}, {"generators", {cycle}}, {"names", {"s"}}};
}

inline Json construct(const std::string& kind) { return {{"construct", kind}}; }

inline Json place(const std::string& name, Json decomposition, bool archimedean = false) {
  return {{"name", name}, {"decomposition", std::move(decomposition)}, {"archimedean", archimedean}};
}

inline Json entry(const std::string& name, Json group, Json lattice, Json places) {
  return {{"name", name}, {"group", std::move(group)}, {"lattice", std::move(lattice)}, {"places", std::move(places)}};
}

inline Json explicit_lattice(const GLattice& m) {
  Json acts = Json::array();
  for (const auto& a : m.generator_action()) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < a.rows(); ++r) {
      Json row = Json::array();
      for (std::size_t c = 0; c < a.cols(); ++c) row.push_back(io::integer_json(a(r, c)));
      rows.push_back(row);
    }
    acts.push_back(rows);
  }
  return {{"rank", m.rank()}, {"action_on_generators", acts}};
}

/// Z[g/h] modulo the sum of its basis, in the images of e_c for c != first coset.
inline GLattice coset_norm_one(const FiniteGroup& g, const Subgroup& h) {
  LeftCosets cosets = left_cosets(h);
  const std::size_t k = cosets.representatives.size();
  std::vector<IntegerMatrix> action;
  for (std::size_t x = 0; x < g.order(); ++x) {
    IntegerMatrix a(k - 1, k - 1);
    for (std::size_t c = 1; c < k; ++c) {
      const std::size_t xc = cosets.coset_of[g.mul(x, cosets.representatives[c])];
      if (xc != 0) {
        a(xc - 1, c - 1) = 1;
      } else {
        for (std::size_t i = 0; i + 1 < k; ++i) a(i, c - 1) = -1;
      }
    }
    action.push_back(std::move(a));
  }
  return GLattice::from_full_action(g, std::move(action), k - 1);
}

}  // namespace catalog_detail

inline std::vector<CatalogEntry> catalog() {
  using namespace catalog_detail;
  std::vector<CatalogEntry> out;
  for (std::size_t n = 2; n <= 6; ++n) {
    const std::string name = "cyclic" + std::to_string(n);
    Json places = Json::array({place("v0", {"s"})});
    if (n % 2 == 0) places.push_back(place("inf", {"s^" + std::to_string(n / 2)}, true));
    out.push_back({name, "cyclic group of order " + std::to_string(n) + ", norm-one lattice",
                   entry(name, cyclic_group(n), construct("norm_one_quotient"), places)});
  }
  const Json klein = {{"degree", 4}, {"generators", {"(0 1)(2 3)", "(0 2)(1 3)"}}, {"names", {"a", "b"}}};
  const Json klein_places = Json::array(
      {place("v0", {"a", "b"}), place("w", {"a"}), place("inf", {"b"}, true)});
  out.push_back({"klein-augmentation", "Klein four-group, augmentation kernel",
                 entry("klein-augmentation", klein, construct("augmentation_kernel"), klein_places)});
  out.push_back({"klein-norm-one", "Klein four-group, norm-one lattice",
                 entry("klein-norm-one", klein, construct("norm_one_quotient"), klein_places)});
  out.push_back({"klein-regular", "Klein four-group, regular lattice",
                 entry("klein-regular", klein, construct("regular"), klein_places)});
  out.push_back({"s3", "symmetric group on 3 letters, norm-one lattice",
                 entry("s3", {{"degree", 3}, {"generators", {"(0 1)", "(0 1 2)"}}, {"names", {"t", "r"}}},
                       construct("norm_one_quotient"),
                       Json::array({place("v0", {"t", "r"}), place("inf", {"t"}, true)}))});
  out.push_back({"d10", "dihedral group of order 10, norm-one lattice",
                 entry("d10", {{"degree", 5}, {"generators", {"(0 1 2 3 4)", "(1 4)(2 3)"}}, {"names", {"r", "f"}}},
                       construct("norm_one_quotient"),
                       Json::array({place("v0", {"r", "f"}), place("inf", {"f"}, true)}))});
  const Json affine = {{"degree", 5}, {"generators", {"(0 1 2 3 4)", "(1 2 4 3)"}}, {"names", {"t", "m"}}};
  const FiniteGroup g20 = io::parse_group(affine, "group");
  out.push_back({"metacyclic20", "affine group of the line over F_5, norm-one lattice of the 5 points",
                 entry("metacyclic20", affine,
                       explicit_lattice(coset_norm_one(g20, Subgroup::generated_by(g20, {g20.generators()[1]}))),
                       Json::array({place("v0", {"t", "m"}), place("v1", {"m"}), place("inf", {"m^2"}, true)}))});
  return out;
}

inline const CatalogEntry& catalog_entry(const std::string& name) {
  static const std::vector<CatalogEntry> entries = catalog();
  for (const auto& e : entries)
    if (e.name == name) return e;
  throw InputError("no catalog entry named '" + name + "'");
}

/// A file path, or "catalog:<name>".
inline ContextDocument load_context(const std::string& source) {
  const std::string prefix = "catalog:";
  if (source.rfind(prefix, 0) == 0) return parse_context(catalog_entry(source.substr(prefix.size())).document);
  return load_context_file(source);
}

}  // namespace wadefect
