#include "aprings/serialization.hpp"

#include "aprings/error.hpp"

namespace aprings {

Json integer_to_json(const Integer& v) { return to_decimal(v); }

Integer integer_from_json(const Json& j) {
  if (j.is_string()) return parse_integer(j.get<std::string>());
  if (j.is_number_integer()) return Integer(j.get<long long>());
  if (j.is_number_unsigned()) return Integer(j.get<unsigned long long>());
  throw Error(ErrorKind::Parse, "expected an integer, got " + j.dump());
}

Json polynomial_to_json(const IntPolynomial& p) {
  Json out = Json::array();
  for (const auto& c : p.coefficients()) out.push_back(integer_to_json(c));
  return out;
}

IntPolynomial polynomial_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorKind::Parse, "polynomial must be an array of coefficients");
  std::vector<Integer> coeffs;
  for (const auto& c : j) coeffs.push_back(integer_from_json(c));
  return IntPolynomial(std::move(coeffs));
}

Json cyclotomic_to_json(const CyclotomicInteger& c) {
  Json coords = Json::array();
  for (const auto& v : c.coords()) coords.push_back(integer_to_json(v));
  return Json{{"order", c.order()}, {"coords", coords}};
}

CyclotomicInteger cyclotomic_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("order") || !j.contains("coords")) {
    throw Error(ErrorKind::Parse, "cyclotomic integer needs order and coords");
  }
  std::vector<Integer> coords;
  for (const auto& c : j.at("coords")) coords.push_back(integer_from_json(c));
  return CyclotomicInteger(j.at("order").get<unsigned>(), std::move(coords));
}

Json root_spec_to_json(const RootSpec& spec) {
  Json atoms = Json::array();
  for (const auto& atom : spec.atoms()) {
    if (const auto* ints = std::get_if<IntegerRoots>(&atom)) {
      Json values = Json::array();
      for (const auto& v : ints->values) values.push_back(integer_to_json(v));
      atoms.push_back(Json{{"kind", "integers"}, {"values", values}});
    } else {
      atoms.push_back(Json{{"kind", "roots_of_unity"}, {"order", std::get<RootsOfUnity>(atom).order}});
    }
  }
  return Json{{"atoms", atoms}};
}

RootSpec root_spec_from_json(const Json& j) {
  try {
    if (!j.is_object() || !j.contains("atoms") || !j.at("atoms").is_array()) {
      throw Error(ErrorKind::Parse, "root spec needs an \"atoms\" array");
    }
    std::vector<RootAtom> atoms;
    for (const auto& a : j.at("atoms")) {
      const auto kind = a.at("kind").get<std::string>();
      if (kind == "integers") {
        std::vector<Integer> values;
        for (const auto& v : a.at("values")) values.push_back(integer_from_json(v));
        atoms.emplace_back(IntegerRoots{std::move(values)});
      } else if (kind == "roots_of_unity") {
        const auto order = a.at("order").get<long long>();
        if (order < 1) throw Error(ErrorKind::Parse, "roots_of_unity order must be positive");
        atoms.emplace_back(RootsOfUnity{static_cast<unsigned>(order)});
      } else {
        throw Error(ErrorKind::Parse, "unknown atom kind \"" + kind + "\"");
      }
    }
    return RootSpec(std::move(atoms));
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("malformed root spec: ") + e.what());
  }
}

Json sum_set_to_json(const SumSet& s) {
  Json elements = Json::array();
  for (const auto& e : s.elements) elements.push_back(cyclotomic_to_json(e));
  return Json{{"order", s.order}, {"summands", s.summands}, {"size", s.elements.size()}, {"elements", elements}};
}

Json table_to_json(const TableOfMarks& t) {
  Json classes = Json::array();
  for (const auto& c : t.classes) classes.push_back(Json{{"label", c.label}, {"order", c.order}, {"size", c.size}});
  Json marks = Json::array();
  for (const auto& row : t.marks) {
    Json r = Json::array();
    for (const auto& v : row) r.push_back(integer_to_json(v));
    marks.push_back(r);
  }
  return Json{{"group", t.group_name}, {"classes", classes}, {"marks", marks}};
}

TableOfMarks table_from_json(const Json& j) {
  try {
    TableOfMarks t;
    if (j.contains("group")) t.group_name = j.at("group").get<std::string>();
    for (const auto& c : j.at("classes")) {
      ClassInfo info;
      info.label = c.at("label").get<std::string>();
      if (c.contains("order")) info.order = c.at("order").get<std::size_t>();
      if (c.contains("size")) info.size = c.at("size").get<std::size_t>();
      t.classes.push_back(std::move(info));
    }
    for (const auto& row : j.at("marks")) {
      std::vector<Integer> r;
      for (const auto& v : row) r.push_back(integer_from_json(v));
      t.marks.push_back(std::move(r));
    }
    t.validate();
    return t;
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("malformed table of marks: ") + e.what());
  }
}

Json perm_group_to_json(const PermGroup& g) {
  Json gens = Json::array();
  for (const auto& p : g.generators()) gens.push_back(p.images());
  return Json{{"degree", g.degree()}, {"generators", gens}, {"order", g.order()}};
}

PermGroup perm_group_from_json(const Json& j, const Limits& limits) {
  try {
    const auto degree = j.at("degree").get<std::size_t>();
    std::vector<Permutation> gens;
    for (const auto& images : j.at("generators")) {
      auto v = images.get<std::vector<std::uint16_t>>();
      if (v.size() != degree) throw Error(ErrorKind::Parse, "generator length differs from degree");
      gens.emplace_back(std::move(v));
    }
    return close_group(degree, std::move(gens), limits);
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("malformed group: ") + e.what());
  }
}

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::Parse, std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace aprings
