#include "suffix_array.hpp"

#include <algorithm>
#include <limits>

namespace ripskit::detail {

std::vector<std::int32_t> suffix_array(const std::vector<std::int32_t>& input,
                                       std::int32_t alphabet) {
  // Sorting cyclic shifts of s + [0] sorts the suffixes of s.
  std::vector<std::int32_t> s(input);
  s.push_back(0);
  const auto n = static_cast<std::int32_t>(s.size());
  std::vector<std::int32_t> p(static_cast<std::size_t>(n)), c(static_cast<std::size_t>(n));
  std::vector<std::int32_t> cnt(static_cast<std::size_t>(std::max(alphabet, n)), 0);

  for (std::int32_t x : s) ++cnt[static_cast<std::size_t>(x)];
  for (std::size_t i = 1; i < cnt.size(); ++i) cnt[i] += cnt[i - 1];
  for (std::int32_t i = n - 1; i >= 0; --i)
    p[static_cast<std::size_t>(--cnt[static_cast<std::size_t>(s[static_cast<std::size_t>(i)])])] = i;
  std::int32_t classes = 1;
  c[static_cast<std::size_t>(p[0])] = 0;
  for (std::int32_t i = 1; i < n; ++i) {
    if (s[static_cast<std::size_t>(p[static_cast<std::size_t>(i)])] !=
        s[static_cast<std::size_t>(p[static_cast<std::size_t>(i - 1)])])
      ++classes;
    c[static_cast<std::size_t>(p[static_cast<std::size_t>(i)])] = classes - 1;
  }

  std::vector<std::int32_t> pn(static_cast<std::size_t>(n)), cn(static_cast<std::size_t>(n));
  for (std::int64_t h = 1; h < n && classes < n; h <<= 1) {
    for (std::int32_t i = 0; i < n; ++i) {
      std::int64_t v = p[static_cast<std::size_t>(i)] - h;
      if (v < 0) v += n;
      pn[static_cast<std::size_t>(i)] = static_cast<std::int32_t>(v);
    }
    std::fill(cnt.begin(), cnt.begin() + classes, 0);
    for (std::int32_t i = 0; i < n; ++i)
      ++cnt[static_cast<std::size_t>(c[static_cast<std::size_t>(pn[static_cast<std::size_t>(i)])])];
    for (std::int32_t i = 1; i < classes; ++i) cnt[static_cast<std::size_t>(i)] += cnt[static_cast<std::size_t>(i - 1)];
    for (std::int32_t i = n - 1; i >= 0; --i) {
      std::int32_t v = pn[static_cast<std::size_t>(i)];
      p[static_cast<std::size_t>(--cnt[static_cast<std::size_t>(c[static_cast<std::size_t>(v)])])] = v;
    }
    cn[static_cast<std::size_t>(p[0])] = 0;
    classes = 1;
    for (std::int32_t i = 1; i < n; ++i) {
      auto a = static_cast<std::size_t>(p[static_cast<std::size_t>(i)]);
      auto b = static_cast<std::size_t>(p[static_cast<std::size_t>(i - 1)]);
      auto a2 = static_cast<std::size_t>((static_cast<std::int64_t>(a) + h) % n);
      auto b2 = static_cast<std::size_t>((static_cast<std::int64_t>(b) + h) % n);
      if (c[a] != c[b] || c[a2] != c[b2]) ++classes;
      cn[a] = classes - 1;
    }
    c.swap(cn);
  }
  // Drop the terminal sentinel, which sorts first.
  p.erase(p.begin());
  return p;
}

std::vector<std::int32_t> lcp_array(const std::vector<std::int32_t>& s,
                                    const std::vector<std::int32_t>& sa) {
  const std::size_t n = s.size();
  std::vector<std::int32_t> rank(n), lcp(n, 0);
  for (std::size_t i = 0; i < n; ++i) rank[static_cast<std::size_t>(sa[i])] = static_cast<std::int32_t>(i);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    auto r = static_cast<std::size_t>(rank[i]);
    if (r == 0) {
      k = 0;
      continue;
    }
    auto j = static_cast<std::size_t>(sa[r - 1]);
    while (i + k < n && j + k < n && s[i + k] == s[j + k]) ++k;
    lcp[r] = static_cast<std::int32_t>(k);
    if (k > 0) --k;
  }
  return lcp;
}

RangeMin::RangeMin(const std::vector<std::int32_t>& values)
    : n_(values.size()), tree_(2 * values.size(), std::numeric_limits<std::int32_t>::max()) {
  std::copy(values.begin(), values.end(), tree_.begin() + static_cast<std::ptrdiff_t>(n_));
  for (std::size_t i = n_ - 1; i > 0; --i) tree_[i] = std::min(tree_[2 * i], tree_[2 * i + 1]);
}

std::int32_t RangeMin::query(std::size_t lo, std::size_t hi) const {
  std::int32_t best = std::numeric_limits<std::int32_t>::max();
  for (lo += n_, hi += n_; lo < hi; lo >>= 1, hi >>= 1) {
    if (lo & 1) best = std::min(best, tree_[lo++]);
    if (hi & 1) best = std::min(best, tree_[--hi]);
  }
  return best;
}

}  // namespace ripskit::detail
