#include <algorithm>

#include "ripskit/smallcancel.hpp"

namespace ripskit {

namespace {

Letters inverse_letters(const Letters& w) {
  Letters out(w.rbegin(), w.rend());
  for (auto& l : out) l = inverse_letter(l);
  return out;
}

Letters rotate_at(const Letters& w, std::size_t i) {
  Letters out(w.begin() + static_cast<std::ptrdiff_t>(i), w.end());
  out.insert(out.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
  return out;
}

// Rewrites cur (rotated to start at the match) by replacing the first
// `len` letters, which equal c read from `off`, with the inverse of the
// complement.
Letters replace(const Letters& cur, std::size_t start, const Letters& c, std::size_t off,
                std::size_t len) {
  Letters rot = rotate_at(cur, start);
  const std::size_t L = c.size();
  Letters out;
  out.reserve(L - len + rot.size() - len);
  for (std::size_t t = L; t > len; --t) out.push_back(inverse_letter(c[(off + t - 1) % L]));
  out.insert(out.end(), rot.begin() + static_cast<std::ptrdiff_t>(len), rot.end());
  return cyclically_reduce_letters(out);
}

std::size_t cyclic_match(const Letters& w, std::size_t i, const Letters& c, std::size_t o) {
  const std::size_t n = w.size(), L = c.size(), lim = std::min(n, L);
  std::size_t l = 0;
  while (l < lim && w[(i + l) % n] == c[(o + l) % L]) ++l;
  return l;
}

}  // namespace

DehnSolver::DehnSolver(Presentation p, std::uint64_t piece_budget, std::uint64_t max_letters)
    : p_(std::move(p)), max_letters_(max_letters) {
  SCReport rep = verify_metric(p_, Rational(1, 6), piece_budget);
  if (!rep.holds)
    throw NotCertified("presentation is not C'(1/6) (witness piece " + rep.witness->to_string() +
                       "); refusing to run Dehn's algorithm");
  std::uint64_t used = 0;
  for (std::size_t r = 0; r < p_.relators().size(); ++r) {
    Letters core = to_letters(p_, cyclic_reduce(p_.relators()[r]).core, max_letters_ - used);
    used += 2 * core.size();
    if (used > max_letters_) throw BudgetExceeded("relators exceed the Dehn letter budget");
    Letters inv = inverse_letters(core);
    cyclic_.push_back({r, false, std::move(core)});
    cyclic_.push_back({r, true, std::move(inv)});
  }
  by_letter_.resize(2 * p_.generators().size());
  for (std::size_t ci = 0; ci < cyclic_.size(); ++ci) {
    const Letters& c = cyclic_[ci].letters;
    for (std::size_t o = 0; o < c.size(); ++o) by_letter_[c[o]].emplace_back(ci, o);
  }
}

DehnResult DehnSolver::solve(const Word& w) const {
  DehnResult res;
  Letters cur = cyclically_reduce_letters(to_letters(p_, w, max_letters_));
  while (!cur.empty()) {
    bool replaced = false;
    for (std::size_t i = 0; i < cur.size() && !replaced; ++i) {
      std::size_t best_len = 0, best_ci = 0, best_off = 0;
      for (const auto& [ci, o] : by_letter_[cur[i]]) {
        const Letters& c = cyclic_[ci].letters;
        std::size_t l = cyclic_match(cur, i, c, o);
        if (2 * l > c.size() && l > best_len) {
          best_len = l;
          best_ci = ci;
          best_off = o;
        }
      }
      if (best_len == 0) continue;
      Letters next = replace(cur, i, cyclic_[best_ci].letters, best_off, best_len);
      DehnStep step;
      step.start = i;
      step.length = best_len;
      step.source = {cyclic_[best_ci].relator, cyclic_[best_ci].inverse, best_off};
      step.before = from_letters(p_, cur);
      step.after = from_letters(p_, next);
      res.trace.push_back(std::move(step));
      cur = std::move(next);
      replaced = true;
    }
    if (!replaced) break;
  }
  res.trivial = cur.empty();
  res.residue = from_letters(p_, cur);
  return res;
}

bool replay_dehn_trace(const Presentation& p, const Word& w, const DehnResult& result) {
  Letters cur = cyclically_reduce_letters(to_letters(p, w, kDefaultDehnLetters));
  for (const DehnStep& s : result.trace) {
    if (from_letters(p, cur) != s.before) return false;
    if (s.source.relator >= p.relators().size()) return false;
    Letters c = to_letters(p, cyclic_reduce(p.relators()[s.source.relator]).core, kDefaultDehnLetters);
    if (s.source.inverse) c = inverse_letters(c);
    if (s.start >= cur.size() || s.source.offset >= c.size()) return false;
    if (2 * s.length <= c.size() || s.length > cur.size()) return false;
    if (cyclic_match(cur, s.start, c, s.source.offset) < s.length) return false;
    Letters next = replace(cur, s.start, c, s.source.offset, s.length);
    if (next.size() >= cur.size()) return false;
    if (from_letters(p, next) != s.after) return false;
    cur = std::move(next);
  }
  return from_letters(p, cur) == result.residue && result.trivial == cur.empty();
}

}  // namespace ripskit
