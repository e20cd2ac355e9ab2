#include <algorithm>
#include <numeric>
#include <functional>

#include "ripskit/semidecide.hpp"
#include "text_util.hpp"

namespace ripskit {

namespace {

// All permutations of n points (0-based), lexicographic, with a product
// table for the right action: (a*b)[i] = b[a[i]].
struct SymmetricGroup {
  std::size_t n;
  std::vector<std::vector<std::uint8_t>> elems;
  std::vector<std::uint32_t> mul;  // mul[a * size + b]
  std::vector<std::uint32_t> inv;
  std::vector<std::uint32_t> order;
  std::uint32_t identity = 0;

  explicit SymmetricGroup(std::size_t deg) : n(deg) {
    std::vector<std::uint8_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    do elems.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    const std::size_t N = elems.size();
    auto index = [&](const std::vector<std::uint8_t>& q) {
      return static_cast<std::uint32_t>(
          std::lower_bound(elems.begin(), elems.end(), q) - elems.begin());
    };
    mul.resize(N * N);
    std::vector<std::uint8_t> q(n);
    for (std::size_t a = 0; a < N; ++a)
      for (std::size_t b = 0; b < N; ++b) {
        for (std::size_t i = 0; i < n; ++i) q[i] = elems[b][elems[a][i]];
        mul[a * N + b] = index(q);
      }
    inv.resize(N);
    order.resize(N);
    for (std::size_t a = 0; a < N; ++a) {
      for (std::size_t i = 0; i < n; ++i) q[elems[a][i]] = static_cast<std::uint8_t>(i);
      inv[a] = index(q);
      std::uint32_t c = static_cast<std::uint32_t>(a), k = 1;
      while (c != identity) {
        c = mul[c * N + a];
        ++k;
      }
      order[a] = k;
    }
  }

  std::size_t size() const { return elems.size(); }
  std::uint32_t times(std::uint32_t a, std::uint32_t b) const { return mul[a * size() + b]; }

  std::uint32_t pow(std::uint32_t a, const BigInt& e) const {
    BigInt r = e % order[a];
    if (r < 0) r += order[a];
    auto k = static_cast<unsigned>(r);
    std::uint32_t out = identity;
    for (unsigned i = 0; i < k; ++i) out = times(out, a);
    return out;
  }

  // One representative per cycle type: consecutive points per cycle.
  std::vector<std::uint32_t> class_representatives() const {
    std::vector<std::uint32_t> reps;
    std::vector<std::size_t> parts;
    auto emit = [&] {
      std::vector<std::uint8_t> q(n);
      std::size_t start = 0;
      for (std::size_t len : parts) {
        for (std::size_t i = 0; i < len; ++i) q[start + i] = static_cast<std::uint8_t>(start + (i + 1) % len);
        start += len;
      }
      reps.push_back(static_cast<std::uint32_t>(std::lower_bound(elems.begin(), elems.end(), q) - elems.begin()));
    };
    // Partitions of n into nonincreasing parts.
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t left, std::size_t max_part) {
      if (left == 0) {
        emit();
        return;
      }
      for (std::size_t part = std::min(left, max_part); part >= 1; --part) {
        parts.push_back(part);
        rec(left - part, part);
        parts.pop_back();
      }
    };
    rec(n, n);
    std::sort(reps.begin(), reps.end());
    return reps;
  }
};

struct CompiledRelator {
  std::vector<std::pair<std::size_t, BigInt>> syllables;  // (generator index, exponent)
  std::size_t last_gen = 0;
};

class Search {
 public:
  Search(const Presentation& p, const SymmetricGroup& s) : s_(s), assign_(p.generators().size()) {
    by_last_.resize(p.generators().size());
    for (const Word& r : p.relators()) {
      CompiledRelator c;
      r.for_each_syllable([&](const Syllable& syl) {
        std::size_t g = *p.index_of(syl.gen.name());
        c.syllables.emplace_back(g, syl.exp);
        c.last_gen = std::max(c.last_gen, g);
        return true;
      });
      if (!c.syllables.empty()) by_last_[c.last_gen].push_back(std::move(c));
    }
  }

  bool run(std::vector<std::uint32_t>& out) {
    if (assign_.empty()) return false;
    for (std::uint32_t rep : s_.class_representatives()) {
      assign_[0] = rep;
      if (!satisfied(0)) continue;
      if (extend(1)) {
        out = assign_;
        return true;
      }
    }
    return false;
  }

 private:
  bool satisfied(std::size_t g) const {
    for (const CompiledRelator& c : by_last_[g]) {
      std::uint32_t acc = s_.identity;
      for (const auto& [gen, e] : c.syllables) acc = s_.times(acc, s_.pow(assign_[gen], e));
      if (acc != s_.identity) return false;
    }
    return true;
  }

  bool extend(std::size_t g) {
    if (g == assign_.size()) {
      return std::any_of(assign_.begin(), assign_.end(), [&](std::uint32_t a) { return a != s_.identity; });
    }
    for (std::uint32_t a = 0; a < s_.size(); ++a) {
      assign_[g] = a;
      if (satisfied(g) && extend(g + 1)) return true;
    }
    return false;
  }

  const SymmetricGroup& s_;
  std::vector<std::uint32_t> assign_;
  std::vector<std::vector<CompiledRelator>> by_last_;
};

std::uint64_t generated_order(const SymmetricGroup& s, const std::vector<std::uint32_t>& gens) {
  std::vector<bool> seen(s.size(), false);
  std::vector<std::uint32_t> frontier{s.identity};
  seen[s.identity] = true;
  std::uint64_t count = 1;
  while (!frontier.empty()) {
    std::uint32_t a = frontier.back();
    frontier.pop_back();
    for (std::uint32_t g : gens) {
      std::uint32_t b = s.times(a, g);
      if (!seen[b]) {
        seen[b] = true;
        ++count;
        frontier.push_back(b);
      }
    }
  }
  return count;
}

}  // namespace

QuotientResult quotient_search(const Presentation& p, std::size_t max_degree, std::size_t cap) {
  if (cap > 7) throw InvalidArgument("quotient degree cap must be at most 7");
  if (max_degree < 1 || max_degree > cap)
    throw InvalidArgument("quotient degree must lie in 1.." + std::to_string(cap));
  QuotientResult res;
  res.max_degree = max_degree;
  for (std::size_t n = 2; n <= max_degree; ++n) {
    SymmetricGroup s(n);
    Search search(p, s);
    std::vector<std::uint32_t> found;
    if (!search.run(found)) continue;
    QuotientWitness w;
    w.degree = n;
    for (std::size_t g = 0; g < found.size(); ++g) {
      w.generators.push_back(p.generators()[g].name());
      Permutation perm;
      for (std::uint8_t v : s.elems[found[g]]) perm.push_back(v + 1U);
      w.images.push_back(std::move(perm));
    }
    w.image_order = generated_order(s, found);
    res.witness = std::move(w);
    return res;
  }
  return res;
}

Permutation evaluate_permutation(const Presentation& p, const std::vector<Permutation>& images, const Word& w) {
  if (images.size() != p.generators().size()) throw InvalidArgument("one image per generator is required");
  const std::size_t n = images.empty() ? 0 : images[0].size();
  Permutation cur(n);
  std::iota(cur.begin(), cur.end(), 1U);
  w.for_each_syllable([&](const Syllable& s) {
    const Permutation& g = images[*p.index_of(s.gen.name())];
    Permutation step(n);
    if (s.exp > 0) {
      step = g;
    } else {
      for (std::size_t i = 0; i < n; ++i) step[g[i] - 1] = static_cast<std::uint32_t>(i + 1);
    }
    for (auto& v : cur) {
      std::uint32_t len = 1;
      for (std::uint32_t d = step[v - 1]; d != v; d = step[d - 1]) ++len;
      auto k = static_cast<std::uint32_t>(abs(s.exp) % len);
      for (std::uint32_t i = 0; i < k; ++i) v = step[v - 1];
    }
    return true;
  });
  return cur;
}

std::string QuotientResult::serialize() const {
  if (!witness) return "outcome: none " + std::to_string(max_degree) + "\n";
  std::string out = "outcome: witness " + std::to_string(witness->degree) + "\n";
  out += "image-order: " + std::to_string(witness->image_order) + "\n";
  for (std::size_t g = 0; g < witness->images.size(); ++g) {
    out += "perm " + witness->generators[g] + ":";
    for (std::uint32_t v : witness->images[g]) out += " " + std::to_string(v);
    out += "\n";
  }
  return out;
}

QuotientResult QuotientResult::parse(std::string_view text) {
  auto lines = text_util::content_lines(text);
  if (lines.empty()) throw ParseError("empty quotient report");
  auto head = text_util::strip_prefix(lines[0].second, "outcome:");
  if (!head) throw ParseError("quotient report must start with 'outcome:'");
  auto tok = text_util::split_ws(*head);
  if (tok.size() != 2) throw ParseError("malformed outcome line");
  QuotientResult r;
  if (tok[0] == "none") {
    r.max_degree = text_util::parse_size(tok[1]);
    if (lines.size() != 1) throw ParseError("unexpected lines after 'outcome: none'");
    return r;
  }
  if (tok[0] != "witness") throw ParseError("unknown outcome '" + std::string(tok[0]) + "'");
  QuotientWitness w;
  w.degree = text_util::parse_size(tok[1]);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::string_view line = lines[i].second;
    if (auto v = text_util::strip_prefix(line, "image-order:")) {
      w.image_order = text_util::parse_size(text_util::trim(*v));
      continue;
    }
    std::size_t colon = line.find(':');
    if (!text_util::strip_prefix(line, "perm ") || colon == std::string_view::npos)
      throw ParseError("malformed perm line");
    w.generators.emplace_back(text_util::trim(line.substr(5, colon - 5)));
    Permutation perm;
    for (std::string_view v : text_util::split_ws(line.substr(colon + 1)))
      perm.push_back(static_cast<std::uint32_t>(text_util::parse_size(v)));
    if (perm.size() != w.degree) throw ParseError("permutation length does not match the degree");
    w.images.push_back(std::move(perm));
  }
  r.witness = std::move(w);
  return r;
}

}  // namespace ripskit
