// Exact piece computation over the symmetrized set, working on syllables.
//
// Every relator is cyclically reduced and rotated so that its first and last
// syllables are on different generators. Each orientation becomes a cyclic
// syllable sequence; all of them are laid out doubled in one text (one
// unique sentinel each) and indexed by a generalized suffix array.
//
// For a syllable g^a at position P, the longest common prefix of an element
// starting inside P with an element starting inside a partner syllable g^a'
// is either min(a - i, a' - i') for misaligned ends, or, with aligned ends,
// min(a, a') plus the letters of the common syllable continuation plus the
// overlap of the first differing syllables when they share a generator and
// sign. Partners are visited in suffix-array order so the continuation lcp is
// a running range minimum, and the walk stops once no further partner can
// beat the current best.

#include <algorithm>
#include <limits>
#include <numeric>

#include "ripskit/smallcancel.hpp"
#include "suffix_array.hpp"
#include "text_util.hpp"

namespace ripskit {

namespace {

constexpr std::int64_t kLetterLimit = std::int64_t{1} << 62;
constexpr std::uint32_t kNoKey = std::numeric_limits<std::uint32_t>::max();

struct CyclicWord {
  std::size_t relator = 0;
  bool inverse = false;
  std::vector<std::uint32_t> key;  // 2 * generator index + (exponent < 0)
  std::vector<std::int64_t> len;
  std::vector<std::int64_t> start;  // letter offset of each syllable
  std::int64_t letters = 0;
  std::int64_t rot = 0;  // cyclic offset 0 sits at this offset of the linear word

  std::size_t size() const { return key.size(); }
  std::uint64_t original_offset(std::int64_t off) const {
    return static_cast<std::uint64_t>((off + rot) % letters);
  }
};

CyclicWord make_cyclic(const Presentation& p, const Word& w, std::size_t relator, bool inverse) {
  CyclicWord c;
  c.relator = relator;
  c.inverse = inverse;
  w.for_each_syllable([&](const Syllable& s) {
    std::size_t idx = *p.index_of(s.gen.name());
    BigInt a = abs(s.exp);
    if (a >= kLetterLimit) throw BudgetExceeded("syllable exponent too large for the piece engine");
    c.key.push_back(static_cast<std::uint32_t>(2 * idx + (s.exp < 0 ? 1 : 0)));
    c.len.push_back(static_cast<std::int64_t>(a));
    return true;
  });
  if (c.size() >= 2 && c.key.front() == c.key.back()) {
    c.rot = c.len.front();
    c.len.back() += c.len.front();
    c.key.erase(c.key.begin());
    c.len.erase(c.len.begin());
  }
  c.start.resize(c.size());
  std::int64_t acc = 0;
  for (std::size_t j = 0; j < c.size(); ++j) {
    c.start[j] = acc;
    acc += c.len[j];
    if (acc >= kLetterLimit) throw BudgetExceeded("relator too long for the piece engine");
  }
  c.letters = acc;
  return c;
}

// Reads `n` letters of the cyclic word starting at cyclic offset `off`.
Word read_cyclic(const Presentation& p, const CyclicWord& c, std::int64_t off, std::int64_t n) {
  auto it = std::upper_bound(c.start.begin(), c.start.end(), off);
  auto j = static_cast<std::size_t>(it - c.start.begin()) - 1;
  std::int64_t inner = off - c.start[j];
  WordBuilder b;
  while (n > 0) {
    std::int64_t take = std::min(n, c.len[j] - inner);
    const Generator& g = p.generators()[c.key[j] / 2];
    b.push(g, (c.key[j] & 1U) ? BigInt(-take) : BigInt(take));
    n -= take;
    inner = 0;
    j = (j + 1) % c.size();
  }
  return std::move(b).finish();
}

struct Candidate {
  std::int64_t value = 0;
  std::size_t pw = 0, qw = 0;
  std::int64_t p_off = 0, q_off = 0;
};

class PieceEngine {
 public:
  PieceEngine(const Presentation& p, std::uint64_t budget) : p_(p) {
    BigInt syllables = 0;
    std::vector<Word> cores;
    for (std::size_t r = 0; r < p.relators().size(); ++r) {
      Word core = cyclic_reduce(p.relators()[r]).core;
      if (core.empty())
        throw InvalidArgument("relator " + std::to_string(r + 1) +
                              " is empty after cyclic reduction; the metric condition is undefined");
      syllables += 2 * core.syllable_count();
      if (syllables > budget)
        throw BudgetExceeded("piece engine budget of " + std::to_string(budget) +
                             " symmetrized syllables exceeded");
      cores.push_back(std::move(core));
    }
    for (std::size_t r = 0; r < cores.size(); ++r) {
      words_.push_back(make_cyclic(p, cores[r], r, false));
      words_.push_back(make_cyclic(p, cores[r].inverse(), r, true));
    }
    build_text();
  }

  std::vector<RelatorPieces> run() {
    std::vector<Candidate> best(p_.relators().size());
    group_and_walk(best);
    std::vector<RelatorPieces> out;
    for (std::size_t r = 0; r < best.size(); ++r) {
      const CyclicWord& fw = words_[2 * r];
      RelatorPieces rp;
      rp.relator = r;
      rp.length = fw.letters;
      rp.max_piece = best[r].value;
      if (best[r].value > 0) {
        const Candidate& c = best[r];
        const CyclicWord& pw = words_[c.pw];
        const CyclicWord& qw = words_[c.qw];
        PieceWitness w{read_cyclic(p_, pw, c.p_off, c.value),
                       {pw.relator, pw.inverse, pw.original_offset(c.p_off)},
                       {qw.relator, qw.inverse, qw.original_offset(c.q_off)}};
        rp.witness = std::move(w);
      }
      out.push_back(std::move(rp));
    }
    return out;
  }

 private:
  void build_text() {
    std::vector<std::pair<std::uint32_t, std::int64_t>> symbols;
    for (const CyclicWord& c : words_)
      for (std::size_t j = 0; j < c.size(); ++j) symbols.emplace_back(c.key[j], c.len[j]);
    std::sort(symbols.begin(), symbols.end());
    symbols.erase(std::unique(symbols.begin(), symbols.end()), symbols.end());

    // Code 0 is reserved; symbol codes preserve (key, len) order so that
    // suffixes group by generator and sign first. Sentinels sort last.
    const auto nsym = symbols.size();
    code_key_.assign(1, kNoKey);
    code_len_.assign(1, 0);
    for (const auto& [k, l] : symbols) {
      code_key_.push_back(k);
      code_len_.push_back(l);
    }
    std::size_t total = 0;
    for (const CyclicWord& c : words_) total += 2 * c.size() + 2;
    if (total + nsym + words_.size() + 2 >= static_cast<std::size_t>(std::numeric_limits<std::int32_t>::max()))
      throw BudgetExceeded("symmetrized set too large for the piece engine");

    text_.reserve(total);
    pre_.reserve(total);
    for (std::size_t w = 0; w < words_.size(); ++w) {
      const CyclicWord& c = words_[w];
      base_.push_back(text_.size());
      std::vector<std::int32_t> codes(c.size());
      for (std::size_t j = 0; j < c.size(); ++j) {
        auto it = std::lower_bound(symbols.begin(), symbols.end(), std::make_pair(c.key[j], c.len[j]));
        codes[j] = static_cast<std::int32_t>(it - symbols.begin()) + 1;
      }
      std::int64_t acc = 0;
      for (std::size_t t = 0; t < 2 * c.size() + 1; ++t) {
        std::size_t j = t % c.size();
        text_.push_back(codes[j]);
        pre_.push_back(acc);
        acc += c.len[j];
      }
      text_.push_back(static_cast<std::int32_t>(nsym + 1 + w));
      pre_.push_back(acc);
      code_key_.push_back(kNoKey);
      code_len_.push_back(0);
    }
    auto alphabet = static_cast<std::int32_t>(nsym + 1 + words_.size());
    sa_ = detail::suffix_array(text_, alphabet);
    lcp_ = detail::lcp_array(text_, sa_);
    rank_.resize(sa_.size());
    for (std::size_t i = 0; i < sa_.size(); ++i) rank_[static_cast<std::size_t>(sa_[i])] = static_cast<std::int32_t>(i);
  }

  static std::int64_t cap(std::int64_t raw, std::int64_t lp, std::int64_t lq) {
    if (raw >= lp && lp == lq) return lp - 1;
    return std::min({raw, lp, lq});
  }

  struct Member {
    std::uint32_t w;
    std::uint32_t j;
    std::int32_t rank;
  };

  void group_and_walk(std::vector<Candidate>& best) {
    std::vector<std::vector<Member>> groups(2 * p_.generators().size());
    for (std::size_t w = 0; w < words_.size(); ++w) {
      const CyclicWord& c = words_[w];
      for (std::size_t j = 0; j < c.size(); ++j) {
        std::int32_t rk = rank_[base_[w] + j + 1];
        groups[c.key[j]].push_back({static_cast<std::uint32_t>(w), static_cast<std::uint32_t>(j), rk});
      }
    }
    detail::RangeMin rmq(lcp_);
    for (auto& g : groups) {
      std::sort(g.begin(), g.end(), [](const Member& a, const Member& b) { return a.rank < b.rank; });
      // Two longest syllables of the group, for the misaligned bound.
      std::size_t top1 = g.size(), top2 = g.size();
      for (std::size_t i = 0; i < g.size(); ++i) {
        std::int64_t l = words_[g[i].w].len[g[i].j];
        if (top1 == g.size() || l > words_[g[top1].w].len[g[top1].j]) {
          top2 = top1;
          top1 = i;
        } else if (top2 == g.size() || l > words_[g[top2].w].len[g[top2].j]) {
          top2 = i;
        }
      }
      for (std::size_t i = 0; i < g.size(); ++i) {
        const CyclicWord& c = words_[g[i].w];
        if (c.inverse) continue;
        Candidate cand = walk(g, i, top1 == i ? top2 : top1, rmq);
        Candidate& slot = best[c.relator];
        if (cand.value > slot.value) slot = cand;
      }
    }
  }

  Candidate walk(const std::vector<Member>& g, std::size_t idx, std::size_t iso,
                 const detail::RangeMin& rmq) const {
    const Member& P = g[idx];
    const CyclicWord& cp = words_[P.w];
    const std::int64_t a = cp.len[P.j];
    const std::int64_t lp = cp.letters;
    const std::size_t cont = base_[P.w] + P.j + 1;
    const std::size_t end = base_[P.w] + 2 * cp.size() + 1;

    Candidate best;
    best.pw = best.qw = P.w;
    if (a >= 2) {
      best.value = cap(a - 1, lp, lp);
      best.p_off = cp.start[P.j];
      best.q_off = cp.start[P.j] + 1;
    }
    auto offer = [&](std::int64_t raw, const Member& Q, std::int64_t aligned) {
      const CyclicWord& cq = words_[Q.w];
      std::int64_t v = cap(raw, lp, cq.letters);
      if (v <= best.value) return;
      best.value = v;
      best.qw = Q.w;
      best.pw = P.w;
      best.p_off = cp.start[P.j] + (a - aligned);
      best.q_off = cq.start[Q.j] + (cq.len[Q.j] - aligned);
    };
    if (iso < g.size()) {
      const Member& Q = g[iso];
      std::int64_t al = std::min(a, words_[Q.w].len[Q.j]);
      offer(al, Q, al);
    }

    for (int dir : {-1, +1}) {
      std::int64_t q = std::numeric_limits<std::int64_t>::max();
      for (std::ptrdiff_t nb = static_cast<std::ptrdiff_t>(idx) + dir;
           nb >= 0 && nb < static_cast<std::ptrdiff_t>(g.size()); nb += dir) {
        const Member& Q = g[static_cast<std::size_t>(nb)];
        const Member& prev = g[static_cast<std::size_t>(nb - dir)];
        auto lo = static_cast<std::size_t>(std::min(prev.rank, Q.rank));
        auto hi = static_cast<std::size_t>(std::max(prev.rank, Q.rank));
        q = std::min<std::int64_t>(q, rmq.query(lo + 1, hi + 1));
        const std::size_t qcont = base_[Q.w] + Q.j + 1;
        if (q == 0 && code_key_[static_cast<std::size_t>(text_[cont])] !=
                          code_key_[static_cast<std::size_t>(text_[qcont])])
          break;
        const CyclicWord& cq = words_[Q.w];
        const std::int64_t a2 = cq.len[Q.j];
        const std::int64_t al = std::min(a, a2);
        const auto uq = static_cast<std::size_t>(q);
        const std::int64_t run = pre_[cont + uq] - pre_[cont];
        auto sp = static_cast<std::size_t>(text_[cont + uq]);
        auto sq = static_cast<std::size_t>(text_[qcont + uq]);
        std::int64_t partial = 0;
        if (code_key_[sp] != kNoKey && code_key_[sp] == code_key_[sq])
          partial = std::min(code_len_[sp], code_len_[sq]);
        offer(al + run + partial, Q, al);
        // Every later partner in this direction has lcp <= q and, at lcp q,
        // a differing syllable no closer to P's than this one.
        std::int64_t bound = a + run + partial;
        if (cont + uq + 1 <= end) bound = std::min(bound, a + (pre_[cont + uq + 1] - pre_[cont]));
        if (bound <= best.value) break;
      }
    }
    return best;
  }

  const Presentation& p_;
  std::vector<CyclicWord> words_;
  std::vector<std::int32_t> text_;
  std::vector<std::int64_t> pre_;
  std::vector<std::size_t> base_;
  std::vector<std::uint32_t> code_key_;
  std::vector<std::int64_t> code_len_;
  std::vector<std::int32_t> sa_, lcp_, rank_;
};

}  // namespace

std::vector<RelatorPieces> max_piece_lengths(const Presentation& p, std::uint64_t budget) {
  if (p.relators().empty()) return {};
  PieceEngine engine(p, budget);
  return engine.run();
}

// ----------------------------------------------------------------- reports

Rational parse_rational(std::string_view text) {
  text = text_util::trim(text);
  std::size_t slash = text.find('/');
  BigInt num = text_util::parse_bigint(text.substr(0, slash));
  BigInt den = 1;
  if (slash != std::string_view::npos) den = text_util::parse_bigint(text.substr(slash + 1));
  if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string rational_to_string(const Rational& q) {
  return numerator(q).str() + "/" + denominator(q).str();
}

SCReport verify_metric(const Presentation& p, const Rational& lambda, std::uint64_t budget) {
  if (lambda <= 0) throw InvalidArgument("lambda must be positive");
  SCReport rep;
  rep.lambda = lambda;
  rep.piece_budget = budget;
  rep.holds = true;
  const BigInt num = numerator(lambda), den = denominator(lambda);
  for (RelatorPieces& rp : max_piece_lengths(p, budget)) {
    rep.rows.push_back({rp.relator, rp.length, rp.max_piece});
    if (rep.holds && !(rp.max_piece * den < num * rp.length)) {
      rep.holds = false;
      rep.witness = rp.witness->piece;
      rep.first = rp.witness->first;
      rep.second = rp.witness->second;
    }
  }
  return rep;
}

namespace {

std::string occurrence_line(const PieceOccurrence& o) {
  return "occurrence: " + std::to_string(o.relator + 1) + (o.inverse ? " - " : " + ") +
         std::to_string(o.offset) + "\n";
}

}  // namespace

std::string SCReport::serialize() const {
  std::string out = "lambda: " + rational_to_string(lambda) + "\n";
  out += "piece-budget: " + std::to_string(piece_budget) + "\n";
  for (const Row& r : rows)
    out += "relator " + std::to_string(r.relator + 1) + " len " + r.length.str() + " maxpiece " +
           r.max_piece.str() + "\n";
  out += holds ? "verdict: holds\n" : "verdict: fails\n";
  if (witness) {
    out += "witness: " + witness->to_string() + "\n";
    out += occurrence_line(*first);
    out += occurrence_line(*second);
  }
  return out;
}

SCReport SCReport::parse(std::string_view text) {
  SCReport rep;
  bool have_lambda = false, have_verdict = false;
  std::vector<PieceOccurrence> occ;
  for (const auto& [lineno, line] : text_util::content_lines(text)) {
    auto fail = [&, ln = lineno]() {
      return ParseError("line " + std::to_string(ln) + ": malformed report line");
    };
    if (auto v = text_util::strip_prefix(line, "lambda:")) {
      rep.lambda = parse_rational(*v);
      have_lambda = true;
    } else if (auto v = text_util::strip_prefix(line, "piece-budget:")) {
      rep.piece_budget = text_util::parse_size(text_util::trim(*v));
    } else if (auto v = text_util::strip_prefix(line, "verdict:")) {
      auto t = text_util::trim(*v);
      if (t != "holds" && t != "fails") throw fail();
      rep.holds = t == "holds";
      have_verdict = true;
    } else if (auto v = text_util::strip_prefix(line, "witness:")) {
      rep.witness = Word::parse(*v);
    } else if (auto v = text_util::strip_prefix(line, "occurrence:")) {
      auto tok = text_util::split_ws(*v);
      if (tok.size() != 3 || (tok[1] != "+" && tok[1] != "-")) throw fail();
      std::size_t rel = text_util::parse_size(tok[0]);
      if (rel == 0) throw fail();
      occ.push_back({rel - 1, tok[1] == "-", text_util::parse_size(tok[2])});
    } else {
      auto tok = text_util::split_ws(line);
      if (tok.size() != 6 || tok[0] != "relator" || tok[2] != "len" || tok[4] != "maxpiece")
        throw fail();
      std::size_t rel = text_util::parse_size(tok[1]);
      if (rel == 0) throw fail();
      rep.rows.push_back({rel - 1, text_util::parse_bigint(tok[3]), text_util::parse_bigint(tok[5])});
    }
  }
  if (!have_lambda || !have_verdict) throw ParseError("report lacks lambda or verdict");
  if (rep.witness.has_value() == rep.holds) throw ParseError("witness must be present exactly when the verdict fails");
  if (rep.witness) {
    if (occ.size() != 2) throw ParseError("a witness needs two occurrences");
    rep.first = occ[0];
    rep.second = occ[1];
  } else if (!occ.empty()) {
    throw ParseError("occurrences without a witness");
  }
  return rep;
}

// ------------------------------------------------------------ proper powers

namespace {

constexpr std::size_t kPeriodicityLimit = 1'000'000;
constexpr std::size_t kProbeSyllables = 16;

// The first n letters of w.
Word letter_prefix(const Word& w, const BigInt& n) {
  WordBuilder b;
  BigInt left = n;
  w.for_each_syllable([&](const Syllable& s) {
    if (left == 0) return false;
    BigInt a = abs(s.exp);
    BigInt take = a < left ? a : left;
    b.push(s.gen, s.exp > 0 ? take : BigInt(-take));
    left -= take;
    return left > 0;
  });
  return std::move(b).finish();
}

// Number of syllables of w equal to (g, e).
BigInt multiplicity(const Word& w, const Generator& g, const BigInt& e) {
  auto term = [&](const Generator& tg, const BigInt& base, const BigInt& step, const BigInt& count) -> BigInt {
    if (tg != g) return 0;
    if (step == 0) return base == e ? count : BigInt(0);
    BigInt diff = e - base;
    if (diff % step != 0) return 0;
    BigInt i = diff / step;
    return (i >= 0 && i < count) ? BigInt(1) : BigInt(0);
  };
  BigInt n = 0;
  for (const Segment& seg : w.segments()) {
    if (const auto* s = std::get_if<Syllable>(&seg)) {
      if (s->gen == g && s->exp == e) n += 1;
    } else {
      const auto& l = std::get<Ladder>(seg);
      n += term(l.lead, l.lead_base, l.lead_step, l.count);
      n += term(l.trail, l.trail_base, l.trail_step, l.count);
    }
  }
  return n;
}

}  // namespace

ProperPower is_proper_power(const Word& w) {
  if (w.empty()) throw InvalidArgument("proper-power test needs a nonempty word");
  if (!is_cyclically_reduced(w)) throw InvalidArgument("proper-power test needs a cyclically reduced word");
  ProperPower res;
  auto segs = w.segments();
  if (segs.size() == 1 && std::holds_alternative<Syllable>(segs[0])) {
    const auto& s = std::get<Syllable>(segs[0]);
    if (abs(s.exp) >= 2) {
      res.is_power = true;
      res.root = Word::letter(s.gen, s.exp > 0 ? 1 : -1);
      res.exponent = abs(s.exp);
    }
    return res;
  }
  // Rotate so the cyclic syllable sequence starts at a syllable boundary.
  Word rotated = w;
  Syllable f = w.first_syllable(), l = w.last_syllable();
  if (f.gen == l.gen) {
    Word head = Word::letter(f.gen, f.exp);
    rotated = head.inverse() * w * head;
  }
  // A syllable occurring exactly once rules out any period. Cheap on ladders,
  // so try it before expanding.
  std::size_t probed = 0;
  for (const Segment& seg : rotated.segments()) {
    if (const auto* lad = std::get_if<Ladder>(&seg)) {
      const Syllable probes[] = {{lad->lead, lad->lead_base},
                                 {lad->trail, lad->trail_base},
                                 {lad->lead, lad->lead_exp(lad->count - 1)},
                                 {lad->trail, lad->trail_exp(lad->count - 1)}};
      for (const Syllable& s : probes)
        if (multiplicity(rotated, s.gen, s.exp) == 1) return res;
    } else if (++probed <= kProbeSyllables) {
      const auto& s = std::get<Syllable>(seg);
      if (multiplicity(rotated, s.gen, s.exp) == 1) return res;
    }
  }
  BigInt syl = rotated.syllable_count();
  if (syl <= kPeriodicityLimit) {
    std::vector<Syllable> s = rotated.syllables();
    const std::size_t n = s.size();
    for (std::size_t d = 1; d < n; ++d) {
      if (n % d != 0) continue;
      bool periodic = true;
      for (std::size_t i = d; i < n && periodic; ++i) periodic = s[i] == s[i - d];
      if (!periodic) continue;
      res.is_power = true;
      res.exponent = n / d;
      res.root = letter_prefix(w, w.letter_length() / res.exponent);
      return res;
    }
    return res;
  }
  throw BudgetExceeded("word of " + syl.str() + " syllables is too long for the proper-power test");
}

}  // namespace ripskit
