#pragma once

// JSON context documents.
//
// {
//   "name": "optional label",
//   "group": {"degree": 4, "generators": ["(0 1)(2 3)", [2, 3, 0, 1]], "names": ["a", "b"]},
//   "lattice": {"rank": 2, "action_on_generators": [[[0, 1], [1, 0]], ...]}
//           or {"construct": "trivial" | "regular" | "permutation" | "augmentation_kernel"
//                          | "norm_one_quotient" | "dual" | "direct_sum",
//               "arguments": {"rank": 1} | {"subgroup": [words]} | {"of": lattice} | {"summands": [lattices]}},
//   "places": [{"name": "v0", "decomposition": ["a", "b*a", 3], "archimedean": false}]
// }
//
// Points are numbered from 0. Cycles compose right to left. Decomposition
// entries are generator words ("a*b^-1", "e" for the identity) or element
// indices, and generate the subgroup.

#include "wadefect/defect.hpp"
#include "wadefect/errors.hpp"
#include "wadefect/finite_group.hpp"
#include "wadefect/g_lattice.hpp"
#include "wadefect/groups.hpp"

#include "json.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

namespace wadefect {

using Json = nlohmann::ordered_json;

struct ContextDocument {
  std::string name;
  ArithmeticContext context;
};

namespace io {

[[noreturn]] inline void fail(const std::string& path, const std::string& what) { throw InputError(path + ": " + what); }

inline const Json& field(const Json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) fail(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(path, "missing field '" + key + "'");
  return *it;
}

inline long long as_int(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  return j.get<long long>();
}

inline std::size_t as_index(const Json& j, const std::string& path) {
  long long v = as_int(j, path);
  if (v < 0) fail(path, "expected a nonnegative integer");
  return static_cast<std::size_t>(v);
}

inline Permutation parse_cycles(const std::string& text, std::size_t degree, const std::string& path) {
  std::vector<std::vector<std::size_t>> cycles;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip();
  while (i < text.size()) {
    if (text[i] != '(') fail(path, "expected '(' at offset " + std::to_string(i) + " in \"" + text + "\"");
    ++i;
    std::vector<std::size_t> cycle;
    for (;;) {
      skip();
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (start == i) fail(path, "bad cycle syntax at offset " + std::to_string(i) + " in \"" + text + "\"");
      std::size_t point = std::stoul(text.substr(start, i - start));
      if (point >= degree) fail(path, "point " + std::to_string(point) + " exceeds degree " + std::to_string(degree));
      if (std::find(cycle.begin(), cycle.end(), point) != cycle.end())
        fail(path, "point " + std::to_string(point) + " repeated inside a cycle");
      cycle.push_back(point);
    }
    if (cycle.size() > 1) cycles.push_back(std::move(cycle));
    skip();
  }
  return permutation_from_cycles(degree, cycles);
}

inline Permutation parse_permutation(const Json& j, std::size_t degree, const std::string& path) {
  if (j.is_string()) return parse_cycles(j.get<std::string>(), degree, path);
  if (!j.is_array()) fail(path, "expected a cycle string or a one-line array");
  if (j.size() != degree) fail(path, "one-line permutation has " + std::to_string(j.size()) + " entries, degree is " +
                                         std::to_string(degree));
  Permutation p;
  std::vector<bool> hit(degree, false);
  for (std::size_t x = 0; x < degree; ++x) {
    std::size_t y = as_index(j[x], path + "[" + std::to_string(x) + "]");
    if (y >= degree || hit[y]) fail(path, "not a permutation of 0.." + std::to_string(degree - 1));
    hit[y] = true;
    p.push_back(y);
  }
  return p;
}

inline std::string cycle_string(const Permutation& p) {
  std::string out;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (seen[x] || p[x] == x) continue;
    out += "(";
    for (std::size_t y = x; !seen[y]; y = p[y]) {
      seen[y] = true;
      if (y != x) out += " ";
      out += std::to_string(y);
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

/// Element named by a word such as "a*b^-1*a" or "e".
inline std::size_t parse_word(const FiniteGroup& g, const std::string& word, const std::string& path) {
  const auto& names = g.generator_names();
  std::size_t x = 0;
  std::stringstream ss(word);
  std::string token;
  bool any = false;
  while (std::getline(ss, token, '*')) {
    auto trim = [](std::string s) {
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
      return s;
    };
    token = trim(token);
    if (token.empty()) fail(path, "empty factor in word \"" + word + "\"");
    any = true;
    long long exponent = 1;
    if (auto caret = token.find('^'); caret != std::string::npos) {
      try {
        std::size_t used = 0;
        exponent = std::stoll(token.substr(caret + 1), &used);
        if (used != token.size() - caret - 1) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        fail(path, "bad exponent in \"" + token + "\"");
      }
      token = trim(token.substr(0, caret));
    }
    std::size_t base;
    if (token == "e" || token == "1") {
      base = 0;
    } else {
      auto it = std::find(names.begin(), names.end(), token);
      if (it == names.end()) fail(path, "unknown generator name '" + token + "'");
      base = g.generators()[static_cast<std::size_t>(it - names.begin())];
    }
    const long long ord = static_cast<long long>(g.element_order(base));
    const std::size_t k = static_cast<std::size_t>(((exponent % ord) + ord) % ord);
    x = g.mul(x, g.power(base, k));
  }
  if (!any) fail(path, "empty word");
  return x;
}

inline std::size_t parse_element(const FiniteGroup& g, const Json& j, const std::string& path) {
  if (j.is_string()) return parse_word(g, j.get<std::string>(), path);
  std::size_t i = as_index(j, path);
  if (i >= g.order()) fail(path, "element index " + std::to_string(i) + " out of range (group order " +
                                     std::to_string(g.order()) + ")");
  return i;
}

inline Subgroup parse_subgroup(const FiniteGroup& g, const Json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected a list of generator words or element indices");
  std::vector<std::size_t> gens;
  for (std::size_t i = 0; i < j.size(); ++i) gens.push_back(parse_element(g, j[i], path + "[" + std::to_string(i) + "]"));
  return Subgroup::generated_by(g, gens);
}

inline FiniteGroup parse_group(const Json& j, const std::string& path) {
  const std::size_t degree = as_index(field(j, "degree", path), path + ".degree");
  if (degree == 0) fail(path + ".degree", "degree must be positive");
  const Json& gens = field(j, "generators", path);
  if (!gens.is_array()) fail(path + ".generators", "expected a list");
  std::vector<Permutation> perms;
  for (std::size_t i = 0; i < gens.size(); ++i)
    perms.push_back(parse_permutation(gens[i], degree, path + ".generators[" + std::to_string(i) + "]"));
  std::vector<std::string> names;
  if (auto it = j.find("names"); it != j.end()) {
    if (!it->is_array() || it->size() != gens.size()) fail(path + ".names", "expected one name per generator");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const Json& n = (*it)[i];
      const std::string p = path + ".names[" + std::to_string(i) + "]";
      if (!n.is_string()) fail(p, "expected a string");
      std::string s = n.get<std::string>();
      if (s.empty() || s == "e" || s == "1" || s.find_first_of("*^ ()") != std::string::npos)
        fail(p, "unusable generator name \"" + s + "\"");
      if (std::find(names.begin(), names.end(), s) != names.end()) fail(p, "duplicate generator name \"" + s + "\"");
      names.push_back(s);
    }
  }
  try {
    return group_from_generators(degree, perms, names);
  } catch (const InputError& e) {
    fail(path, e.what());
  }
}

inline IntegerMatrix parse_matrix(const Json& j, std::size_t rank, const std::string& path) {
  if (!j.is_array() || j.size() != rank) fail(path, "expected " + std::to_string(rank) + " rows");
  IntegerMatrix m(rank, rank);
  for (std::size_t r = 0; r < rank; ++r) {
    const Json& row = j[r];
    const std::string rp = path + "[" + std::to_string(r) + "]";
    if (!row.is_array() || row.size() != rank) fail(rp, "expected " + std::to_string(rank) + " entries");
    for (std::size_t c = 0; c < rank; ++c) m(r, c) = Integer(as_int(row[c], rp + "[" + std::to_string(c) + "]"));
  }
  return m;
}

inline GLattice parse_lattice(const FiniteGroup& g, const Json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  if (j.contains("construct")) {
    const Json& c = j["construct"];
    if (!c.is_string()) fail(path + ".construct", "expected a string");
    const std::string kind = c.get<std::string>();
    const Json empty = Json::object();
    const Json& args = j.contains("arguments") ? j["arguments"] : empty;
    const std::string ap = path + ".arguments";
    if (!args.is_object()) fail(ap, "expected an object");
    {
      if (kind == "trivial") {
        std::size_t rank = args.contains("rank") ? as_index(args["rank"], ap + ".rank") : 1;
        return trivial_lattice(g, rank);
      }
      if (kind == "regular") return regular_lattice(g);
      if (kind == "augmentation_kernel") return augmentation_kernel(g);
      if (kind == "norm_one_quotient") return norm_one_quotient(g);
      if (kind == "permutation") return permutation_lattice(g, parse_subgroup(g, field(args, "subgroup", ap), ap + ".subgroup"));
      if (kind == "dual") return dual(parse_lattice(g, field(args, "of", ap), ap + ".of"));
      if (kind == "direct_sum") {
        const Json& parts = field(args, "summands", ap);
        if (!parts.is_array() || parts.empty()) fail(ap + ".summands", "expected a nonempty list");
        GLattice m = parse_lattice(g, parts[0], ap + ".summands[0]");
        for (std::size_t i = 1; i < parts.size(); ++i)
          m = direct_sum(m, parse_lattice(g, parts[i], ap + ".summands[" + std::to_string(i) + "]"));
        return m;
      }
    }
    fail(path + ".construct", "unknown construct \"" + kind + "\"");
  }
  const std::size_t rank = as_index(field(j, "rank", path), path + ".rank");
  const Json& acts = field(j, "action_on_generators", path);
  if (!acts.is_array()) fail(path + ".action_on_generators", "expected a list of matrices");
  if (acts.size() != g.generators().size())
    fail(path + ".action_on_generators", "expected " + std::to_string(g.generators().size()) + " matrices, got " +
                                             std::to_string(acts.size()));
  std::vector<IntegerMatrix> mats;
  for (std::size_t i = 0; i < acts.size(); ++i)
    mats.push_back(parse_matrix(acts[i], rank, path + ".action_on_generators[" + std::to_string(i) + "]"));
  try {
    return lattice_from_action(g, mats, rank);
  } catch (const InputError& e) {
    fail(path + ".action_on_generators", e.what());
  }
}

inline std::vector<Place> parse_places(const FiniteGroup& g, const Json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected a list");
  std::vector<Place> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string p = path + "[" + std::to_string(i) + "]";
    const Json& e = j[i];
    const Json& name = field(e, "name", p);
    if (!name.is_string()) fail(p + ".name", "expected a string");
    Place place{name.get<std::string>(), parse_subgroup(g, field(e, "decomposition", p), p + ".decomposition"), false};
    if (auto it = e.find("archimedean"); it != e.end()) {
      if (!it->is_boolean()) fail(p + ".archimedean", "expected true or false");
      place.archimedean = it->get<bool>();
    }
    out.push_back(std::move(place));
  }
  return out;
}

inline Json integer_json(const Integer& x) {
  if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
    return Json(static_cast<long long>(x));
  return Json(to_string(x));
}

}  // namespace io

inline ContextDocument parse_context(const Json& doc) {
  if (!doc.is_object()) throw InputError("document: expected a JSON object");
  ContextDocument out;
  if (auto it = doc.find("name"); it != doc.end()) {
    if (!it->is_string()) io::fail("name", "expected a string");
    out.name = it->get<std::string>();
  }
  FiniteGroup g = io::parse_group(io::field(doc, "group", "document"), "group");
  GLattice m = io::parse_lattice(g, io::field(doc, "lattice", "document"), "lattice");
  std::vector<Place> places;
  if (doc.contains("places")) places = io::parse_places(g, doc["places"], "places");
  out.context = ArithmeticContext(g, m, std::move(places));
  return out;
}

inline ContextDocument parse_context_text(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("JSON syntax: ") + e.what());
  }
  return parse_context(doc);
}

inline ContextDocument load_context_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_context_text(ss.str());
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

/// Canonical explicit form: cycle strings, explicit generator matrices and
/// decomposition groups given by the generator words of their elements.
inline Json serialize_context(const ContextDocument& d) {
  const ArithmeticContext& ctx = d.context;
  const FiniteGroup& g = ctx.group();
  Json doc = Json::object();
  if (!d.name.empty()) doc["name"] = d.name;
  Json gens = Json::array();
  if (!g.permutations()) throw StructuralError("group without a permutation representation cannot be serialized");
  for (std::size_t s : g.generators()) gens.push_back(io::cycle_string((*g.permutations())[s]));
  doc["group"] = {{"degree", g.degree()}, {"generators", gens}, {"names", g.generator_names()}};
  Json acts = Json::array();
  for (const auto& m : ctx.lattice().generator_action()) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
      Json row = Json::array();
      for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(io::integer_json(m(r, c)));
      rows.push_back(row);
    }
    acts.push_back(rows);
  }
  doc["lattice"] = {{"rank", ctx.lattice().rank()}, {"action_on_generators", acts}};
  Json places = Json::array();
  for (const auto& p : ctx.places()) {
    Json dec = Json::array();
    for (std::size_t x : p.decomposition.elements())
      if (x != 0) dec.push_back(g.label(x));
    places.push_back({{"name", p.name}, {"decomposition", dec}, {"archimedean", p.archimedean}});
  }
  doc["places"] = places;
  return doc;
}

inline bool same_context(const ArithmeticContext& a, const ArithmeticContext& b) {
  if (!(a.lattice() == b.lattice()) || a.places().size() != b.places().size()) return false;
  if (a.group().generator_names() != b.group().generator_names()) return false;
  for (std::size_t i = 0; i < a.places().size(); ++i) {
    const auto &p = a.places()[i], &q = b.places()[i];
    if (p.name != q.name || p.archimedean != q.archimedean || p.decomposition.elements() != q.decomposition.elements())
      return false;
  }
  return true;
}

}  // namespace wadefect
