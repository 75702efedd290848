#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace mcs {

// Elements are 0-based internally; the text format is 1-based:
//   p sc <n> <m>
//   s <id> <e1> <e2> ...      (m lines, set ids 1..m)
struct SetCoverInstance {
  std::uint32_t num_elements = 0;
  std::vector<std::vector<std::uint32_t>> sets;

  // Throws std::invalid_argument when an element is out of range or the sets
  // do not cover every element.
  void validate() const;
};

SetCoverInstance parse_set_cover(std::string_view text);
std::string format_set_cover(const SetCoverInstance& sc);

}  // namespace mcs
