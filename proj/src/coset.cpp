#include <algorithm>
#include <deque>
#include <numeric>

#include "ripskit/semidecide.hpp"
#include "text_util.hpp"

namespace ripskit {

namespace {

constexpr std::int32_t kUndef = -1;

class Exhausted {};

// HLT with union-find coincidence processing.
class CosetTable {
 public:
  CosetTable(std::size_t ngens, std::uint64_t max_cosets)
      : cols_(2 * ngens), max_(max_cosets) {
    add_row();
  }

  std::int32_t& at(std::int32_t c, std::uint32_t x) {
    return table_[static_cast<std::size_t>(c) * cols_ + x];
  }
  std::size_t size() const { return parent_.size(); }
  bool alive(std::int32_t c) const { return parent_[static_cast<std::size_t>(c)] == c; }
  std::uint64_t defined() const { return parent_.size(); }

  void scan_and_fill(std::int32_t coset, const Letters& w) {
    if (w.empty()) return;
    std::int32_t f = coset, b = coset;
    std::size_t i = 0, j = w.size();  // unscanned letters are w[i..j)
    for (;;) {
      while (i < j && at(f, w[i]) != kUndef) f = at(f, w[i++]);
      if (i == j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j > i && at(b, inverse_letter(w[j - 1])) != kUndef) b = at(b, inverse_letter(w[--j]));
      if (j == i) {
        coincidence(f, b);
        return;
      }
      if (j == i + 1) {
        at(f, w[i]) = b;
        at(b, inverse_letter(w[i])) = f;
        return;
      }
      define(f, w[i]);
    }
  }

  void define(std::int32_t c, std::uint32_t x) {
    if (parent_.size() >= max_) throw Exhausted{};
    std::int32_t d = add_row();
    at(c, x) = d;
    at(d, inverse_letter(x)) = c;
  }

  std::int32_t rep(std::int32_t c) {
    std::int32_t r = c;
    while (parent_[static_cast<std::size_t>(r)] != r) r = parent_[static_cast<std::size_t>(r)];
    while (parent_[static_cast<std::size_t>(c)] != r) {
      std::int32_t next = parent_[static_cast<std::size_t>(c)];
      parent_[static_cast<std::size_t>(c)] = r;
      c = next;
    }
    return r;
  }

  void coincidence(std::int32_t a, std::int32_t b) {
    std::deque<std::int32_t> queue;
    merge(a, b, queue);
    while (!queue.empty()) {
      std::int32_t g = queue.front();
      queue.pop_front();
      for (std::uint32_t x = 0; x < cols_; ++x) {
        std::int32_t d = at(g, x);
        if (d == kUndef) continue;
        at(d, inverse_letter(x)) = kUndef;
        std::int32_t mu = rep(g), nu = rep(d);
        if (at(mu, x) != kUndef) {
          merge(nu, at(mu, x), queue);
        } else if (at(nu, inverse_letter(x)) != kUndef) {
          merge(mu, at(nu, inverse_letter(x)), queue);
        } else {
          at(mu, x) = nu;
          at(nu, inverse_letter(x)) = mu;
        }
      }
    }
  }

 private:
  std::int32_t add_row() {
    auto c = static_cast<std::int32_t>(parent_.size());
    parent_.push_back(c);
    table_.resize(table_.size() + cols_, kUndef);
    return c;
  }

  void merge(std::int32_t a, std::int32_t b, std::deque<std::int32_t>& queue) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[static_cast<std::size_t>(b)] = a;
    queue.push_back(b);
  }

  std::size_t cols_;
  std::uint64_t max_;
  std::vector<std::int32_t> table_;
  std::vector<std::int32_t> parent_;
};

std::vector<Letters> letter_words(const Presentation& p, const std::vector<Word>& words) {
  std::vector<Letters> out;
  std::uint64_t used = 0;
  for (const Word& w : words) {
    out.push_back(to_letters(p, w, kCosetRelatorLetters - used));
    used += out.back().size();
  }
  return out;
}

}  // namespace

CosetResult coset_enumerate(const Presentation& p, const std::vector<Word>& subgroup,
                            std::uint64_t max_cosets) {
  if (max_cosets < 1) throw InvalidArgument("max-cosets must be at least 1");
  if (max_cosets > static_cast<std::uint64_t>(std::numeric_limits<std::int32_t>::max()))
    throw InvalidArgument("max-cosets is too large");
  CosetResult res;
  res.max_cosets = max_cosets;
  for (const Generator& g : p.generators()) res.generators.push_back(g.name());

  std::vector<Letters> rels = letter_words(p, p.relators());
  std::vector<Letters> hgens = letter_words(p, subgroup);
  const std::uint32_t cols = static_cast<std::uint32_t>(2 * p.generators().size());
  CosetTable t(p.generators().size(), max_cosets);
  try {
    for (const Letters& h : hgens) t.scan_and_fill(0, h);
    for (std::int32_t a = 0; static_cast<std::size_t>(a) < t.size(); ++a) {
      for (const Letters& r : rels) {
        if (!t.alive(a)) break;
        t.scan_and_fill(a, r);
      }
      for (std::uint32_t x = 0; x < cols && t.alive(a); ++x)
        if (t.at(a, x) == kUndef) t.define(a, x);
    }
  } catch (const Exhausted&) {
    res.defined = t.defined();
    return res;
  }
  res.defined = t.defined();

  std::vector<std::int32_t> number(t.size(), 0);
  std::uint32_t n = 0;
  for (std::int32_t c = 0; static_cast<std::size_t>(c) < t.size(); ++c)
    if (t.alive(c)) number[static_cast<std::size_t>(c)] = static_cast<std::int32_t>(++n);
  res.finite = true;
  res.index = n;
  for (std::uint32_t g = 0; g < p.generators().size(); ++g) {
    Permutation perm;
    perm.reserve(n);
    for (std::int32_t c = 0; static_cast<std::size_t>(c) < t.size(); ++c)
      if (t.alive(c)) perm.push_back(static_cast<std::uint32_t>(number[static_cast<std::size_t>(t.at(c, 2 * g))]));
    res.perms.push_back(std::move(perm));
  }
  return res;
}

std::uint32_t coset_act(const Presentation& p, const CosetResult& r, std::uint32_t c, const Word& w) {
  if (!r.finite) throw InvalidArgument("coset table is not complete");
  std::vector<Permutation> inv(r.perms.size(), Permutation(r.index));
  for (std::size_t g = 0; g < r.perms.size(); ++g)
    for (std::uint32_t i = 0; i < r.index; ++i) inv[g][r.perms[g][i] - 1] = i + 1;
  bool ok = w.for_each_syllable([&](const Syllable& s) {
    auto idx = p.index_of(s.gen.name());
    if (!idx) throw InvalidArgument("generator '" + s.gen.name() + "' not in the alphabet");
    const Permutation& perm = s.exp > 0 ? r.perms[*idx] : inv[*idx];
    // Cycle length bounds the useful exponent.
    std::uint32_t len = 1;
    for (std::uint32_t d = perm[c - 1]; d != c; d = perm[d - 1]) ++len;
    auto e = static_cast<std::uint64_t>(abs(s.exp) % len);
    for (std::uint64_t k = 0; k < e; ++k) c = perm[c - 1];
    return true;
  });
  (void)ok;
  return c;
}

bool verify_coset_table(const Presentation& p, const std::vector<Word>& subgroup, const CosetResult& r) {
  if (!r.finite || r.index == 0 || r.perms.size() != p.generators().size()) return false;
  for (const Permutation& perm : r.perms) {
    if (perm.size() != r.index) return false;
    std::vector<bool> hit(r.index, false);
    for (std::uint32_t v : perm) {
      if (v < 1 || v > r.index || hit[v - 1]) return false;
      hit[v - 1] = true;
    }
  }
  for (const Word& rel : p.relators())
    for (std::uint32_t c = 1; c <= r.index; ++c)
      if (coset_act(p, r, c, rel) != c) return false;
  for (const Word& h : subgroup)
    if (coset_act(p, r, 1, h) != 1) return false;
  std::vector<bool> seen(r.index, false);
  std::vector<std::uint32_t> stack{1};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    std::uint32_t c = stack.back();
    stack.pop_back();
    for (const Permutation& perm : r.perms) {
      std::uint32_t d = perm[c - 1];
      if (!seen[d - 1]) {
        seen[d - 1] = true;
        ++count;
        stack.push_back(d);
      }
    }
  }
  return count == r.index;
}

Certificate certify_trivial(const Presentation& p, std::uint64_t max_cosets) {
  CosetResult r = coset_enumerate(p, {}, max_cosets);
  return r.finite && r.index == 1 ? Certificate::Trivial : Certificate::Inconclusive;
}

CosetTableOracle::CosetTableOracle(Presentation p, CosetResult table) : p_(std::move(p)), table_(std::move(table)) {
  if (!table_.finite) throw InvalidArgument("coset table oracle needs a finite table");
}

Triviality CosetTableOracle::decide(const Word& w) const {
  // Over the trivial subgroup the action is regular.
  return coset_act(p_, table_, 1, w) == 1 ? Triviality::Trivial : Triviality::Nontrivial;
}

// ----------------------------------------------------------------- format

std::string CosetResult::serialize() const {
  if (!finite) return "outcome: exhausted " + std::to_string(max_cosets) + "\n";
  std::string out = "outcome: finite " + std::to_string(index) + "\n";
  out += "max-cosets: " + std::to_string(max_cosets) + "\n";
  for (std::size_t g = 0; g < perms.size(); ++g) {
    out += "perm " + generators[g] + ":";
    for (std::uint32_t v : perms[g]) out += " " + std::to_string(v);
    out += "\n";
  }
  return out;
}

CosetResult CosetResult::parse(std::string_view text) {
  auto lines = text_util::content_lines(text);
  if (lines.empty()) throw ParseError("empty coset report");
  CosetResult r;
  auto head = text_util::strip_prefix(lines[0].second, "outcome:");
  if (!head) throw ParseError("coset report must start with 'outcome:'");
  auto tok = text_util::split_ws(*head);
  if (tok.size() != 2) throw ParseError("malformed outcome line");
  if (tok[0] == "exhausted") {
    if (lines.size() != 1) throw ParseError("unexpected lines after an exhausted outcome");
    r.max_cosets = text_util::parse_size(tok[1]);
    return r;
  }
  if (tok[0] != "finite") throw ParseError("unknown outcome '" + std::string(tok[0]) + "'");
  r.finite = true;
  r.index = text_util::parse_size(tok[1]);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::string_view line = lines[i].second;
    if (auto v = text_util::strip_prefix(line, "max-cosets:")) {
      r.max_cosets = text_util::parse_size(text_util::trim(*v));
      continue;
    }
    auto rest = text_util::strip_prefix(line, "perm ");
    std::size_t colon = line.find(':');
    if (!rest || colon == std::string_view::npos) throw ParseError("malformed perm line");
    r.generators.emplace_back(text_util::trim(line.substr(5, colon - 5)));
    Permutation perm;
    for (std::string_view v : text_util::split_ws(line.substr(colon + 1)))
      perm.push_back(static_cast<std::uint32_t>(text_util::parse_size(v)));
    if (perm.size() != r.index) throw ParseError("permutation length does not match the index");
    r.perms.push_back(std::move(perm));
  }
  return r;
}

}  // namespace ripskit
