#pragma once

#include <cstdint>
#include <vector>

namespace ripskit::detail {

// Suffix array of `s` (symbols in [1, alphabet)) by prefix doubling.
std::vector<std::int32_t> suffix_array(const std::vector<std::int32_t>& s, std::int32_t alphabet);

// lcp[i] = longest common prefix of suffixes sa[i-1] and sa[i]; lcp[0] = 0.
std::vector<std::int32_t> lcp_array(const std::vector<std::int32_t>& s,
                                    const std::vector<std::int32_t>& sa);

// Range-minimum over a fixed array.
class RangeMin {
 public:
  explicit RangeMin(const std::vector<std::int32_t>& values);
  // Minimum over the half-open range [lo, hi); requires lo < hi.
  std::int32_t query(std::size_t lo, std::size_t hi) const;

 private:
  std::size_t n_;
  std::vector<std::int32_t> tree_;
};

}  // namespace ripskit::detail
