#include "ghmst/limits.hpp"

#include <cstdlib>
#include <string>

namespace ghmst {

namespace {

bool read_env_size(const char* name, std::size_t& out) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return false;
  char* end = nullptr;
  const unsigned long long value = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0' || value == 0) return false;
  out = static_cast<std::size_t>(value);
  return true;
}

}  // namespace

Limits Limits::from_env() {
  Limits limits;
  read_env_size("GHMST_MAX_EXHAUSTIVE", limits.max_exhaustive_product);
  std::size_t max_n = 0;
  if (read_env_size("GHMST_MAX_N", max_n)) {
    limits.max_bnb_n = max_n;
    limits.max_tree_enumeration_n = max_n;
  }
  return limits;
}

}  // namespace ghmst
