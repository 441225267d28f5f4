#include "pzeta/json_io.hpp"

#include <json.hpp>

#include "pzeta/error.hpp"

namespace pzeta {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kCacheVersion = 1;

Json parse(const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) throw Error("malformed JSON input");
  return j;
}

Integer integer_field(const Json& j, const char* key) {
  if (!j.contains(key)) throw Error(std::string("missing field '") + key + "'");
  const auto& v = j.at(key);
  if (v.is_string()) return parse_integer(v.get<std::string>());
  if (v.is_number_integer()) return Integer(v.get<std::int64_t>());
  throw Error(std::string("field '") + key + "' must be an integer or decimal string");
}

Index index_field(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_integer())
    throw Error(std::string("missing integer field '") + key + "'");
  return j.at(key).get<Index>();
}

Json recipe_to_node(const SeriesRecipe& recipe);

SeriesRecipe recipe_from_node(const Json& j) {
  if (!j.is_object() || !j.contains("variant") || !j.at("variant").is_string())
    throw Error("recipe node must be an object with a 'variant' string");
  const std::string variant = j.at("variant").get<std::string>();

  if (variant == "lattice") {
    LatticeRecipe r;
    if (j.contains("generators")) {
      if (!j.at("generators").is_array())
        throw Error("'generators' must be an array of cycle strings");
      for (const auto& line : j.at("generators")) {
        if (!line.is_string()) throw Error("generators must be strings");
        r.generators += line.get<std::string>() + "\n";
      }
    }
    if (j.contains("degree")) r.degree = static_cast<int>(index_field(j, "degree"));
    return SeriesRecipe{std::move(r)};
  }
  if (variant == "cyclic")
    return SeriesRecipe{CyclicRecipe{index_field(j, "n")}};
  if (variant == "elementary_abelian")
    return SeriesRecipe{ElementaryAbelianRecipe{
        index_field(j, "p"), static_cast<int>(index_field(j, "d"))}};
  if (variant == "alternating_truncated")
    return SeriesRecipe{AlternatingTruncatedRecipe{index_field(j, "m")}};
  if (variant == "boston") {
    if (!j.contains("base")) throw Error("boston recipe requires 'base'");
    BostonPowerRecipe r;
    r.base = std::make_shared<SeriesRecipe>(recipe_from_node(j.at("base")));
    r.f = integer_field(j, "f");
    r.aut_order = integer_field(j, "aut_order");
    r.group_order = integer_field(j, "group_order");
    return SeriesRecipe{std::move(r)};
  }
  if (variant == "brown") {
    if (!j.contains("factors") || !j.at("factors").is_array())
      throw Error("brown recipe requires a 'factors' array");
    BrownProductRecipe r;
    for (const auto& f : j.at("factors")) r.factors.push_back(recipe_from_node(f));
    return SeriesRecipe{std::move(r)};
  }
  throw Error("unknown recipe variant '" + variant + "'");
}

struct RecipeWriter {
  Json operator()(const LatticeRecipe& r) const {
    Json j;
    j["variant"] = "lattice";
    Json gens = Json::array();
    for (const auto& g : parse_generators(r.generators, r.degree))
      gens.push_back(g.to_cycle_string());
    j["generators"] = std::move(gens);
    if (r.degree >= 0) j["degree"] = r.degree;
    return j;
  }
  Json operator()(const CyclicRecipe& r) const {
    return Json{{"variant", "cyclic"}, {"n", r.n}};
  }
  Json operator()(const ElementaryAbelianRecipe& r) const {
    return Json{{"variant", "elementary_abelian"}, {"p", r.p}, {"d", r.d}};
  }
  Json operator()(const AlternatingTruncatedRecipe& r) const {
    return Json{{"variant", "alternating_truncated"}, {"m", r.m}};
  }
  Json operator()(const BostonPowerRecipe& r) const {
    Json j;
    j["variant"] = "boston";
    j["base"] = r.base ? recipe_to_node(*r.base) : Json();
    j["f"] = to_decimal(r.f);
    j["aut_order"] = to_decimal(r.aut_order);
    j["group_order"] = to_decimal(r.group_order);
    return j;
  }
  Json operator()(const BrownProductRecipe& r) const {
    Json j;
    j["variant"] = "brown";
    Json factors = Json::array();
    for (const auto& f : r.factors) factors.push_back(recipe_to_node(f));
    j["factors"] = std::move(factors);
    return j;
  }
};

Json recipe_to_node(const SeriesRecipe& recipe) {
  return std::visit(RecipeWriter{}, recipe.v);
}

}  // namespace

std::string series_to_json(const DirichletSeries& series) {
  Json j;
  j["bound"] = series.bound();
  Json terms = Json::array();
  for (const auto& [n, c] : series.terms())
    terms.push_back(Json::array({n, to_decimal(c)}));
  j["terms"] = std::move(terms);
  return j.dump();
}

DirichletSeries series_from_json(const std::string& text) {
  Json j = parse(text);
  if (!j.is_object()) throw Error("series JSON must be an object");
  const Index bound = index_field(j, "bound");
  if (!j.contains("terms") || !j.at("terms").is_array())
    throw Error("series JSON requires a 'terms' array");
  std::vector<std::pair<Index, Integer>> pairs;
  for (const auto& t : j.at("terms")) {
    if (!t.is_array() || t.size() != 2 || !t.at(0).is_number_integer())
      throw Error("each term must be [index, coefficient]");
    const Index n = t.at(0).get<Index>();
    Integer c;
    if (t.at(1).is_string()) c = parse_integer(t.at(1).get<std::string>());
    else if (t.at(1).is_number_integer()) c = t.at(1).get<std::int64_t>();
    else throw Error("coefficients must be integers or decimal strings");
    pairs.emplace_back(n, std::move(c));
  }
  return DirichletSeries::make(pairs, bound);
}

std::string recipe_to_json(const SeriesRecipe& recipe) {
  return recipe_to_node(recipe).dump();
}

SeriesRecipe recipe_from_json(const std::string& text) {
  return recipe_from_node(parse(text));
}

std::string moebius_cache_to_json(const PermGroup& group,
                                  const SubgroupLattice& lattice,
                                  const MoebiusTable& table) {
  Json j;
  j["version"] = kCacheVersion;
  j["group_hash"] = group_hash(group);
  j["degree"] = group.degree();
  j["order"] = group.order();
  Json gens = Json::array();
  for (const auto& g : group.generators()) gens.push_back(g.to_cycle_string());
  j["generators"] = std::move(gens);

  Json subs = Json::array();
  for (const auto& s : lattice.subgroups()) {
    Json members = Json::array();
    for (auto m : s.members) members.push_back(m);
    subs.push_back(std::move(members));
  }
  j["subgroups"] = std::move(subs);

  Json leq = Json::array();
  for (const auto& [a, b] : lattice.leq()) leq.push_back(Json::array({a, b}));
  j["leq"] = std::move(leq);

  Json mu = Json::array();
  for (const auto& v : table.values) mu.push_back(to_decimal(v));
  j["mu"] = std::move(mu);
  return j.dump();
}

LatticeData moebius_cache_from_json(const std::string& text,
                                    const PermGroup& group) {
  Json j = parse(text);
  if (!j.is_object()) throw Error("cache JSON must be an object");
  if (!j.contains("version") || j.at("version") != kCacheVersion)
    throw Error("unsupported cache version");
  if (!j.contains("group_hash") || j.at("group_hash") != group_hash(group))
    throw Error("cache group hash does not match the group");
  if (index_field(j, "order") != group.order())
    throw Error("cache order does not match the group");

  if (!j.contains("subgroups") || !j.at("subgroups").is_array())
    throw Error("cache requires a 'subgroups' array");
  const std::size_t n = static_cast<std::size_t>(group.order());
  std::vector<Subgroup> subs;
  for (const auto& members_node : j.at("subgroups")) {
    if (!members_node.is_array()) throw Error("subgroup fingerprints must be arrays");
    Subgroup s;
    s.bits.resize(n);
    for (const auto& m : members_node) {
      if (!m.is_number_unsigned() && !m.is_number_integer())
        throw Error("subgroup members must be element indices");
      const auto idx = m.get<std::int64_t>();
      if (idx < 0 || idx >= group.order())
        throw Error("subgroup member index out of range");
      s.members.push_back(static_cast<std::uint32_t>(idx));
      s.bits.set(static_cast<std::size_t>(idx));
    }
    subs.push_back(std::move(s));
  }

  if (!j.contains("leq") || !j.at("leq").is_array())
    throw Error("cache requires a 'leq' array");
  std::vector<std::pair<std::uint32_t, std::uint32_t>> leq;
  for (const auto& pair : j.at("leq")) {
    if (!pair.is_array() || pair.size() != 2)
      throw Error("leq entries must be [i, j] pairs");
    const auto a = pair.at(0).get<std::int64_t>();
    const auto b = pair.at(1).get<std::int64_t>();
    if (a < 0 || b < 0 || a >= static_cast<std::int64_t>(subs.size()) ||
        b >= static_cast<std::int64_t>(subs.size()))
      throw Error("leq index out of range");
    leq.emplace_back(static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b));
  }

  if (!j.contains("mu") || !j.at("mu").is_array() ||
      j.at("mu").size() != subs.size())
    throw Error("cache requires one mu value per subgroup");

  LatticeData data;
  data.table.group_order = group.order();
  for (const auto& s : subs) data.table.orders.push_back(s.order());
  for (const auto& v : j.at("mu")) {
    if (v.is_string()) data.table.values.push_back(parse_integer(v.get<std::string>()));
    else if (v.is_number_integer()) data.table.values.push_back(Integer(v.get<std::int64_t>()));
    else throw Error("mu values must be integers or decimal strings");
  }
  data.lattice = SubgroupLattice(group, std::move(subs), std::move(leq));
  return data;
}

std::string trace_to_json_lines(const std::vector<TraceEntry>& trace) {
  std::string out;
  for (const auto& e : trace) {
    Json j;
    j["k"] = e.k;
    j["m"] = e.degree;
    j["f"] = to_decimal(e.multiplicity);
    j["frontier"] = e.frontier;
    out += j.dump() + "\n";
  }
  return out;
}

}  // namespace pzeta
