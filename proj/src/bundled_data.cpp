#include "aprings/group.hpp"
#include "aprings/serialization.hpp"

#include "a5_table_data.hpp"

namespace aprings {

TableOfMarks bundled_a5_table() {
  static const TableOfMarks table = table_from_json(Json::parse(kA5TableJson));
  return table;
}

}  // namespace aprings
