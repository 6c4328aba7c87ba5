#pragma once

#include <string>

#include <json.hpp>

#include "aprings/annihilator.hpp"
#include "aprings/cyclotomic.hpp"
#include "aprings/group.hpp"
#include "aprings/integer.hpp"
#include "aprings/limits.hpp"
#include "aprings/polynomial.hpp"

namespace aprings {

using Json = nlohmann::json;

// Integers travel as decimal strings; plain JSON integers are accepted on
// input.
Json integer_to_json(const Integer& v);
Integer integer_from_json(const Json& j);

Json polynomial_to_json(const IntPolynomial& p);
IntPolynomial polynomial_from_json(const Json& j);

Json cyclotomic_to_json(const CyclotomicInteger& c);
CyclotomicInteger cyclotomic_from_json(const Json& j);

// {"atoms":[{"kind":"integers","values":[...]},{"kind":"roots_of_unity","order":m}]}
Json root_spec_to_json(const RootSpec& spec);
RootSpec root_spec_from_json(const Json& j);

Json sum_set_to_json(const SumSet& s);

// {"group":..., "classes":[{"label","order","size"}], "marks":[[...]]}
Json table_to_json(const TableOfMarks& t);
TableOfMarks table_from_json(const Json& j);

// {"degree": d, "generators": [[images], ...]}
Json perm_group_to_json(const PermGroup& g);
PermGroup perm_group_from_json(const Json& j, const Limits& limits = default_limits());

// Parses JSON text, mapping syntax errors to Error(Parse).
Json parse_json_text(const std::string& text);

}  // namespace aprings
