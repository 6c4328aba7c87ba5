#include <regex>

#include "aprings/error.hpp"
#include "aprings/expression.hpp"
#include "aprings/ring_model.hpp"
#include "aprings/serialization.hpp"

namespace aprings {
namespace {

std::vector<unsigned> group_factors(const Json& j) {
  if (!j.is_array()) throw Error(ErrorKind::Parse, "abelian group must be an array of cyclic factor orders");
  std::vector<unsigned> f;
  for (const auto& v : j) {
    const auto n = v.get<long long>();
    if (n < 1) throw Error(ErrorKind::Parse, "cyclic factor orders must be positive");
    f.push_back(static_cast<unsigned>(n));
  }
  return f;
}

// "C2xC2", "C4", "1"
std::vector<unsigned> parse_group_name(const std::string& text) {
  if (text == "1" || text == "trivial") return {};
  static const std::regex factor(R"(C(\d+))");
  std::vector<unsigned> f;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = text.find('x', start);
    const auto piece = text.substr(start, end == std::string::npos ? std::string::npos : end - start);
    std::smatch m;
    if (!std::regex_match(piece, m, factor)) throw Error(ErrorKind::Parse, "bad abelian group name \"" + text + "\"");
    const auto n = std::stoul(m[1].str());
    if (n < 1 || n > 4096) throw Error(ErrorKind::Parse, "cyclic factor order out of range in \"" + text + "\"");
    f.push_back(static_cast<unsigned>(n));
    if (end == std::string::npos) break;
    start = end + 1;
  }
  return f;
}

ModelPtr burnside_of_named(const std::string& name, const Limits& limits) {
  if (name == "A5") return std::make_shared<BurnsideModel>(bundled_a5_table());
  auto g = named_group(name, limits);
  if (!g) throw Error(ErrorKind::Parse, "unknown named group \"" + name + "\"");
  return std::make_shared<BurnsideModel>(table_of_marks(*g, name, limits));
}

std::vector<std::vector<Integer>> ideal_from_json(const Json& j, const FiniteAbelianGroup& group) {
  std::vector<std::vector<Integer>> gens;
  if (j.is_null()) return gens;
  if (!j.is_array()) throw Error(ErrorKind::Parse, "ideal must be an array");
  const GroupRingModel ambient(group);
  for (const auto& g : j) {
    if (g.is_string()) {
      gens.push_back(parse_element(ambient, g.get<std::string>()).coords);
    } else if (g.is_array()) {
      std::vector<Integer> coords;
      for (const auto& c : g) coords.push_back(integer_from_json(c));
      if (coords.size() != group.order()) throw Error(ErrorKind::Parse, "ideal generator has the wrong length");
      gens.push_back(std::move(coords));
    } else {
      throw Error(ErrorKind::Parse, "ideal generators are expressions or coefficient arrays");
    }
  }
  return gens;
}

}  // namespace

ModelPtr construct_model(const Json& spec, const Limits& limits) {
  try {
    if (spec.is_string()) return preset_model(spec.get<std::string>(), limits);
    if (!spec.is_object()) throw Error(ErrorKind::Parse, "ring spec must be an object or a preset name");
    if (spec.contains("preset")) return preset_model(spec.at("preset").get<std::string>(), limits);
    const auto kind = spec.at("kind").get<std::string>();
    if (kind == "Z") return std::make_shared<IntegersModel>();
    if (kind == "ProductZ") {
      const auto k = spec.contains("factors") ? spec.at("factors").get<long long>() : spec.at("k").get<long long>();
      if (k < 1 || k > 64) throw Error(ErrorKind::Parse, "ProductZ factor count must be in 1..64");
      return std::make_shared<ProductZModel>(static_cast<std::size_t>(k));
    }
    if (kind == "GroupRing") {
      const auto& g = spec.at("group");
      FiniteAbelianGroup group(g.is_string() ? parse_group_name(g.get<std::string>()) : group_factors(g));
      if (group.order() > limits.max_group_order) {
        throw Error(ErrorKind::OrderBoundExceeded, "group order exceeds the bound");
      }
      return std::make_shared<GroupRingModel>(std::move(group));
    }
    if (kind == "Burnside") {
      if (spec.contains("table")) return std::make_shared<BurnsideModel>(table_from_json(spec.at("table")));
      const auto& g = spec.at("group");
      if (g.is_string()) return burnside_of_named(g.get<std::string>(), limits);
      const auto name = spec.value("name", std::string("G"));
      return std::make_shared<BurnsideModel>(table_of_marks(perm_group_from_json(g, limits), name, limits));
    }
    if (kind == "FiniteQuotient") {
      const auto& g = spec.contains("group") ? spec.at("group") : Json::array();
      FiniteAbelianGroup group(g.is_string() ? parse_group_name(g.get<std::string>()) : group_factors(g));
      auto ideal = ideal_from_json(spec.value("ideal", Json()), group);
      return std::make_shared<FiniteQuotientModel>(integer_from_json(spec.at("modulus")), std::move(group),
                                                   std::move(ideal), limits, spec.value("name", std::string()));
    }
    if (kind == "Product") {
      return std::make_shared<ProductModel>(construct_model(spec.at("left"), limits),
                                            construct_model(spec.at("right"), limits));
    }
    throw Error(ErrorKind::Parse, "unknown ring kind \"" + kind + "\"");
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("malformed ring spec: ") + e.what());
  }
}

ModelPtr preset_model(const std::string& name, const Limits& limits) {
  static const std::regex power(R"(Z\^(\d+))");
  static const std::regex group_ring(R"(Z\[([^\]]+)\])");
  static const std::regex quotient(R"(Z(\d+)\[([^\]]+)\])");
  static const std::regex cyclic(R"(Z/(\d+))");
  static const std::regex burnside(R"(burnside-(\w+))");
  std::smatch m;
  if (name == "Z") return std::make_shared<IntegersModel>();
  if (name == "W(F3)") {
    return std::make_shared<FiniteQuotientModel>(4, FiniteAbelianGroup({2}), std::vector<std::vector<Integer>>{{1, 1}},
                                                 limits, "W(F3)");
  }
  if (name == "W(F5)") {
    return std::make_shared<FiniteQuotientModel>(2, FiniteAbelianGroup({2}), std::vector<std::vector<Integer>>{},
                                                 limits, "W(F5)");
  }
  if (std::regex_match(name, m, power)) {
    const auto k = std::stoul(m[1].str());
    if (k < 1 || k > 64) throw Error(ErrorKind::Parse, "Z^k needs 1 <= k <= 64");
    return std::make_shared<ProductZModel>(k);
  }
  if (std::regex_match(name, m, group_ring)) {
    return construct_model(Json{{"kind", "GroupRing"}, {"group", m[1].str()}}, limits);
  }
  if (std::regex_match(name, m, quotient)) {
    return construct_model(Json{{"kind", "FiniteQuotient"}, {"modulus", m[1].str()}, {"group", m[2].str()}},
                           limits);
  }
  if (std::regex_match(name, m, cyclic)) {
    return construct_model(Json{{"kind", "FiniteQuotient"}, {"modulus", m[1].str()}, {"group", "1"}, {"name", name}},
                           limits);
  }
  if (std::regex_match(name, m, burnside)) return burnside_of_named(m[1].str(), limits);
  throw Error(ErrorKind::Parse, "unknown ring preset \"" + name + "\"");
}

std::vector<std::string> preset_model_names() {
  return {"Z",      "Z^3",    "Z[C2]",       "Z[C2xC2]",    "Z[C4]", "Z4[C2]", "Z8[C2]",
          "Z2[C2xC2]", "Z3[C2]", "Z/n",      "W(F3)", "W(F5)",  "burnside-A5", "burnside-S3", "burnside-C2"};
}

}  // namespace aprings
