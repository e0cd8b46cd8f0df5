#pragma once

#include <cstddef>

namespace ghmst {

// Size caps for the exact algorithms. Exceeding a cap raises
// Errc::size_limit_exceeded instead of silently degrading.
struct Limits {
  std::size_t max_exhaustive_product = 24;  // |X|*|Y| cap for exhaustive GH search
  std::size_t max_bnb_n = 8;                // per-space cap for branch-and-bound GH
  std::size_t max_tree_enumeration_n = 8;   // cap for Pruefer tree enumeration
  std::size_t max_partition_n = 12;         // cap for partition enumeration
  std::size_t max_topology_n = 7;           // cap for Steiner topology enumeration

  // Reads GHMST_MAX_EXHAUSTIVE and GHMST_MAX_N; unset or malformed
  // variables keep the defaults.
  static Limits from_env();
};

}  // namespace ghmst
