#pragma once

#include <cstddef>

namespace aprings {

// Resource bounds shared by every module. Values are plain data; pass a
// modified copy to raise a bound for one call.
struct Limits {
  std::size_t max_cyclotomic_degree = 64;   // deg Phi_m
  int max_summands = 8;                     // n in T_n
  std::size_t max_sumset_size = 200000;     // |T_n|
  std::size_t max_group_order = 5040;       // closure
  std::size_t max_subgroup_enum_order = 120;
  std::size_t max_carrier = 4096;           // finite quotient carriers, predicate scans
  std::size_t max_spectrum_table = 256;     // exhaustive ideal enumeration
  int max_length_radius = 12;               // BFS length search
};

// Defaults with APRINGS_MAX_GROUP_ORDER, APRINGS_MAX_CARRIER and
// APRINGS_MAX_SUMSET applied. Read once per process.
const Limits& default_limits();

}  // namespace aprings
