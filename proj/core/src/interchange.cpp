#include "transfersys/interchange.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "transfersys/errors.hpp"

namespace transfersys {
namespace {

using json = nlohmann::json;

const std::set<std::string> kTopKeys = {"format_version", "group_name", "elements",
                                        "covers", "leq_pairs", "conj_generators"};
const std::set<std::string> kElementKeys = {"label", "order", "order_factorization"};

std::uint64_t as_count(const json& v, const std::string& where) {
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0)
    throw FormatError(where + ": expected a non-negative integer");
  return v.get<std::uint64_t>();
}

std::vector<std::pair<ElementIndex, ElementIndex>> read_pairs(const json& arr, const std::string& key,
                                                              std::size_t n) {
  if (!arr.is_array()) throw FormatError("'" + key + "' must be an array");
  std::vector<std::pair<ElementIndex, ElementIndex>> out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string where = key + "[" + std::to_string(i) + "]";
    const json& p = arr[i];
    if (!p.is_array() || p.size() != 2) throw FormatError(where + ": expected [a, b]");
    const auto a = as_count(p[0], where);
    const auto b = as_count(p[1], where);
    if (a >= n || b >= n) throw FormatError(where + ": element index out of range");
    out.emplace_back(static_cast<ElementIndex>(a), static_cast<ElementIndex>(b));
  }
  return out;
}

}  // namespace

GroupLattice load_lattice(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("malformed lattice document: ") + e.what());
  }
  if (!doc.is_object()) throw FormatError("lattice document must be an object");
  for (const auto& item : doc.items())
    if (!kTopKeys.count(item.key())) throw FormatError("unknown top-level key '" + item.key() + "'");

  if (!doc.contains("format_version")) throw FormatError("missing 'format_version'");
  if (!doc["format_version"].is_number_integer() || doc["format_version"].get<int>() != kInterchangeVersion)
    throw FormatError("unsupported format_version; expected " + std::to_string(kInterchangeVersion));
  if (!doc.contains("group_name") || !doc["group_name"].is_string())
    throw FormatError("'group_name' must be a string");
  if (!doc.contains("elements") || !doc["elements"].is_array())
    throw FormatError("'elements' must be an array");
  const bool has_covers = doc.contains("covers");
  const bool has_leq = doc.contains("leq_pairs");
  if (has_covers == has_leq) throw FormatError("exactly one of 'covers' or 'leq_pairs' is required");

  LatticeData data;
  data.group_name = doc["group_name"].get<std::string>();
  const json& elems = doc["elements"];
  for (std::size_t i = 0; i < elems.size(); ++i) {
    const std::string where = "elements[" + std::to_string(i) + "]";
    const json& e = elems[i];
    if (!e.is_object()) throw FormatError(where + ": expected an object");
    for (const auto& item : e.items())
      if (!kElementKeys.count(item.key())) throw FormatError(where + ": unknown key '" + item.key() + "'");
    if (!e.contains("label") || !e["label"].is_string()) throw FormatError(where + ": 'label' must be a string");
    LatticeElement el;
    el.label = e["label"].get<std::string>();
    if (!e.contains("order")) throw FormatError(where + ": missing 'order'");
    el.order = as_count(e["order"], where + ".order");
    if (el.order == 0) throw FormatError(where + ": 'order' must be positive");
    if (!e.contains("order_factorization") || !e["order_factorization"].is_array())
      throw FormatError(where + ": 'order_factorization' must be an array");
    for (const json& pe : e["order_factorization"]) {
      if (!pe.is_array() || pe.size() != 2) throw FormatError(where + ": factorization entries are [prime, exponent]");
      el.order_factorization.push_back(
          {as_count(pe[0], where + ".order_factorization"),
           static_cast<unsigned>(as_count(pe[1], where + ".order_factorization"))});
    }
    data.elements.push_back(std::move(el));
  }
  const std::size_t n = data.elements.size();
  data.relation = has_covers ? read_pairs(doc["covers"], "covers", n) : read_pairs(doc["leq_pairs"], "leq_pairs", n);

  if (doc.contains("conj_generators")) {
    const json& gens = doc["conj_generators"];
    if (!gens.is_array()) throw FormatError("'conj_generators' must be an array");
    for (std::size_t g = 0; g < gens.size(); ++g) {
      const std::string where = "conj_generators[" + std::to_string(g) + "]";
      if (!gens[g].is_array()) throw FormatError(where + ": expected an array of indices");
      Permutation perm;
      for (const json& v : gens[g]) perm.push_back(static_cast<ElementIndex>(as_count(v, where)));
      data.conj_generators.push_back(std::move(perm));
    }
  }
  return GroupLattice::create(std::move(data));
}

GroupLattice load_lattice_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open lattice file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_lattice(buf.str());
}

std::string dump_lattice(const GroupLattice& lattice, int indent) {
  json doc;
  doc["format_version"] = kInterchangeVersion;
  doc["group_name"] = lattice.group_name();
  json elems = json::array();
  for (const LatticeElement& e : lattice.elements()) {
    json fac = json::array();
    for (const PrimePower& pp : e.order_factorization) fac.push_back({pp.prime, pp.exponent});
    elems.push_back({{"label", e.label}, {"order", e.order}, {"order_factorization", fac}});
  }
  doc["elements"] = std::move(elems);
  json covers = json::array();
  for (auto [a, b] : lattice.cover_pairs()) covers.push_back({a, b});
  doc["covers"] = std::move(covers);
  json gens = json::array();
  for (const Permutation& g : lattice.conj_generators()) gens.push_back(g);
  doc["conj_generators"] = std::move(gens);
  return doc.dump(indent) + "\n";
}

}  // namespace transfersys
