#include "ripskit/word.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <set>
#include <sstream>

namespace ripskit {

namespace {

// Sum of base + i*step over i in [0, count).
BigInt progression_sum(const BigInt& base, const BigInt& step,
                       const BigInt& count) {
  return count * base + step * (count * (count - 1) / 2);
}

bool term_keeps_sign(const BigInt& base, const BigInt& step,
                     const BigInt& count) {
  if (base == 0) return false;
  BigInt last = base + (count - 1) * step;
  return last != 0 && (base > 0) == (last > 0);
}

// Walks the expanded syllable stream of a segment list.
class SyllableCursor {
 public:
  explicit SyllableCursor(std::span<const Segment> segs) : segs_(segs) {}

  bool done() const { return seg_ == segs_.size(); }

  Syllable next() {
    const Segment& s = segs_[seg_];
    if (const auto* syl = std::get_if<Syllable>(&s)) {
      ++seg_;
      return *syl;
    }
    const auto& l = std::get<Ladder>(s);
    BigInt rep = pos_ / 2;
    Syllable out = (pos_ % 2 == 0) ? Syllable{l.lead, l.lead_exp(rep)}
                                   : Syllable{l.trail, l.trail_exp(rep)};
    ++pos_;
    if (pos_ == 2 * l.count) {
      pos_ = 0;
      ++seg_;
    }
    return out;
  }

 private:
  std::span<const Segment> segs_;
  std::size_t seg_ = 0;
  BigInt pos_ = 0;
};

Syllable front_of(const Segment& s) {
  if (const auto* syl = std::get_if<Syllable>(&s)) return *syl;
  const auto& l = std::get<Ladder>(s);
  return {l.lead, l.lead_base};
}

Syllable back_of(const Segment& s) {
  if (const auto* syl = std::get_if<Syllable>(&s)) return *syl;
  const auto& l = std::get<Ladder>(s);
  return {l.trail, l.trail_exp(l.count - 1)};
}

// Ladders of count 1 are stored as their two syllables.
void emit_ladder(std::vector<Segment>& out, Ladder l) {
  if (l.count == 1) {
    out.emplace_back(Syllable{l.lead, l.lead_base});
    out.emplace_back(Syllable{l.trail, l.trail_base});
  } else if (l.count > 1) {
    out.emplace_back(std::move(l));
  }
}

}  // namespace

bool is_valid_generator_name(std::string_view name) {
  if (name.empty()) return false;
  bool all_digits = true;
  for (char c : name) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
    if (!std::isdigit(static_cast<unsigned char>(c))) all_digits = false;
  }
  // All-digit names would collide with the identity literal "1".
  return !all_digits;
}

Generator::Generator(std::string name) : name_(std::move(name)) {
  if (!is_valid_generator_name(name_))
    throw InvalidArgument("invalid generator name '" + name_ + "'");
}

Ladder Ladder::inverse() const {
  BigInt last = count - 1;
  return Ladder{trail, -trail_exp(last), trail_step,
                lead,  -lead_exp(last),  lead_step, count};
}

Ladder Ladder::shifted(const BigInt& n) const {
  return Ladder{lead,  lead_exp(n),  lead_step, trail,
                trail_exp(n), trail_step, count - n};
}

// ---------------------------------------------------------------- builder

const Generator* WordBuilder::back_gen() const {
  if (segs_.empty()) return nullptr;
  const Segment& s = segs_.back();
  if (const auto* syl = std::get_if<Syllable>(&s)) return &syl->gen;
  return &std::get<Ladder>(s).trail;
}

Syllable WordBuilder::pop_back_syllable() {
  if (auto* syl = std::get_if<Syllable>(&segs_.back())) {
    Syllable out = std::move(*syl);
    segs_.pop_back();
    return out;
  }
  Ladder l = std::get<Ladder>(std::move(segs_.back()));
  segs_.pop_back();
  BigInt last = l.count - 1;
  Syllable lead_last{l.lead, l.lead_exp(last)};
  Syllable trail_last{l.trail, l.trail_exp(last)};
  l.count = last;
  emit_ladder(segs_, std::move(l));
  segs_.emplace_back(std::move(lead_last));
  return trail_last;
}

void WordBuilder::push(const Generator& g, const BigInt& exp) {
  if (exp == 0) return;
  const Generator* b = back_gen();
  if (b == nullptr || *b != g) {
    segs_.emplace_back(Syllable{g, exp});
    return;
  }
  Syllable tail = pop_back_syllable();
  BigInt merged = tail.exp + exp;
  if (merged != 0) segs_.emplace_back(Syllable{g, std::move(merged)});
}

void WordBuilder::push(Ladder l) {
  if (l.count <= 0) return;
  if (l.lead == l.trail || !term_keeps_sign(l.lead_base, l.lead_step, l.count) ||
      !term_keeps_sign(l.trail_base, l.trail_step, l.count)) {
    // Not a canonical ladder: fall back to syllable-by-syllable reduction.
    for (BigInt i = 0; i < l.count; ++i) {
      push(l.lead, l.lead_exp(i));
      push(l.trail, l.trail_exp(i));
    }
    return;
  }
  while (l.count > 0) {
    if (l.count == 1) {
      push(l.lead, l.lead_base);
      push(l.trail, l.trail_base);
      return;
    }
    const Generator* b = back_gen();
    if (b == nullptr || *b != l.lead) {
      segs_.emplace_back(std::move(l));
      return;
    }
    if (const auto* back = std::get_if<Ladder>(&segs_.back());
        back != nullptr && back->inverse() == l) {
      segs_.pop_back();
      return;
    }
    push(l.lead, l.lead_base);
    push(l.trail, l.trail_base);
    l = l.shifted(1);
  }
}

void WordBuilder::append(const Word& w) {
  for (const Segment& s : w.segs_) {
    if (const auto* syl = std::get_if<Syllable>(&s))
      push(*syl);
    else
      push(std::get<Ladder>(s));
  }
}

Word WordBuilder::finish() && {
  Word w;
  w.segs_ = std::move(segs_);
  return w;
}

// ------------------------------------------------------------------ words

Word Word::letter(const Generator& g, const BigInt& exp) {
  WordBuilder b;
  b.push(g, exp);
  return std::move(b).finish();
}

Word Word::ladder(const Generator& lead, const BigInt& lead_base,
                  const BigInt& lead_step, const Generator& trail,
                  const BigInt& trail_base, const BigInt& trail_step,
                  const BigInt& count) {
  WordBuilder b;
  b.push(Ladder{lead, lead_base, lead_step, trail, trail_base, trail_step, count});
  return std::move(b).finish();
}

Word Word::parse(std::string_view text) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i > start) tokens.push_back(text.substr(start, i - start));
  }
  if (tokens.empty()) throw ParseError("empty word text (the identity is written 1)");
  if (tokens.size() == 1 && tokens[0] == "1") return {};

  WordBuilder b;
  for (std::string_view tok : tokens) {
    std::size_t caret = tok.find('^');
    std::string_view name = tok.substr(0, caret);
    if (!is_valid_generator_name(name))
      throw ParseError("malformed syllable '" + std::string(tok) + "'");
    BigInt exp = 1;
    if (caret != std::string_view::npos) {
      std::string_view digits = tok.substr(caret + 1);
      std::size_t k = 0;
      if (!digits.empty() && (digits[0] == '-' || digits[0] == '+')) k = 1;
      if (k == digits.size())
        throw ParseError("malformed syllable '" + std::string(tok) + "'");
      for (std::size_t j = k; j < digits.size(); ++j)
        if (!std::isdigit(static_cast<unsigned char>(digits[j])))
          throw ParseError("malformed syllable '" + std::string(tok) + "'");
      std::string body(digits.substr(k));
      exp = BigInt(body);
      if (digits[0] == '-') exp = -exp;
    }
    b.push(Generator(std::string(name)), exp);
  }
  return std::move(b).finish();
}

BigInt Word::syllable_count() const {
  BigInt n = 0;
  for (const Segment& s : segs_) {
    if (std::holds_alternative<Syllable>(s))
      n += 1;
    else
      n += 2 * std::get<Ladder>(s).count;
  }
  return n;
}

BigInt Word::letter_length() const {
  BigInt n = 0;
  for (const Segment& s : segs_) {
    if (const auto* syl = std::get_if<Syllable>(&s)) {
      n += abs(syl->exp);
    } else {
      const auto& l = std::get<Ladder>(s);
      n += abs(progression_sum(l.lead_base, l.lead_step, l.count));
      n += abs(progression_sum(l.trail_base, l.trail_step, l.count));
    }
  }
  return n;
}

BigInt Word::exponent_sum(const Generator& g) const {
  BigInt n = 0;
  for (const Segment& s : segs_) {
    if (const auto* syl = std::get_if<Syllable>(&s)) {
      if (syl->gen == g) n += syl->exp;
    } else {
      const auto& l = std::get<Ladder>(s);
      if (l.lead == g) n += progression_sum(l.lead_base, l.lead_step, l.count);
      if (l.trail == g) n += progression_sum(l.trail_base, l.trail_step, l.count);
    }
  }
  return n;
}

std::vector<Generator> Word::generators() const {
  std::set<Generator> seen;
  for (const Segment& s : segs_) {
    if (const auto* syl = std::get_if<Syllable>(&s)) {
      seen.insert(syl->gen);
    } else {
      const auto& l = std::get<Ladder>(s);
      seen.insert(l.lead);
      seen.insert(l.trail);
    }
  }
  return {seen.begin(), seen.end()};
}

Syllable Word::first_syllable() const {
  if (segs_.empty()) throw InvalidArgument("empty word has no syllables");
  return front_of(segs_.front());
}

Syllable Word::last_syllable() const {
  if (segs_.empty()) throw InvalidArgument("empty word has no syllables");
  return back_of(segs_.back());
}

bool Word::for_each_syllable(const std::function<bool(const Syllable&)>& fn) const {
  SyllableCursor cur(segs_);
  while (!cur.done())
    if (!fn(cur.next())) return false;
  return true;
}

std::vector<Syllable> Word::syllables() const {
  std::vector<Syllable> out;
  for_each_syllable([&](const Syllable& s) {
    out.push_back(s);
    return true;
  });
  return out;
}

Word Word::inverse() const {
  Word w;
  w.segs_.reserve(segs_.size());
  for (auto it = segs_.rbegin(); it != segs_.rend(); ++it) {
    if (const auto* syl = std::get_if<Syllable>(&*it))
      w.segs_.emplace_back(Syllable{syl->gen, -syl->exp});
    else
      w.segs_.emplace_back(std::get<Ladder>(*it).inverse());
  }
  return w;
}

std::string Word::to_string() const {
  if (segs_.empty()) return "1";
  std::string out;
  for_each_syllable([&](const Syllable& s) {
    if (!out.empty()) out += ' ';
    out += s.gen.name();
    if (s.exp != 1) {
      out += '^';
      out += s.exp.str();
    }
    return true;
  });
  return out;
}

Word operator*(const Word& u, const Word& v) {
  WordBuilder b;
  b.append(u);
  b.append(v);
  return std::move(b).finish();
}

bool operator==(const Word& u, const Word& v) {
  if (u.segs_ == v.segs_) return true;
  SyllableCursor a(u.segs_), b(v.segs_);
  while (!a.done() && !b.done())
    if (!(a.next() == b.next())) return false;
  return a.done() && b.done();
}

// ------------------------------------------------------------- free group

Word reduce(std::span<const Syllable> raw) {
  WordBuilder b;
  for (const Syllable& s : raw) b.push(s);
  return std::move(b).finish();
}

Word invert(const Word& w) { return w.inverse(); }

Word commutator(const Word& u, const Word& v) {
  WordBuilder b;
  b.append(u);
  b.append(v);
  b.append(u.inverse());
  b.append(v.inverse());
  return std::move(b).finish();
}

bool is_cyclically_reduced(const Word& w) {
  if (w.segments().empty()) return true;
  if (w.segments().size() == 1 && std::holds_alternative<Syllable>(w.segments()[0]))
    return true;
  Syllable f = w.first_syllable(), l = w.last_syllable();
  return !(f.gen == l.gen && (f.exp > 0) != (l.exp > 0));
}

namespace {

// Two-ended segment queue used by cyclic reduction.
class SegmentDeque {
 public:
  explicit SegmentDeque(std::span<const Segment> segs) : d_(segs.begin(), segs.end()) {}

  bool single_syllable() const {
    return d_.size() == 1 && std::holds_alternative<Syllable>(d_.front());
  }
  bool empty() const { return d_.empty(); }
  Syllable front() const { return front_of(d_.front()); }
  Syllable back() const { return back_of(d_.back()); }

  void pop_front() {
    if (std::holds_alternative<Syllable>(d_.front())) {
      d_.pop_front();
      return;
    }
    Ladder l = std::get<Ladder>(std::move(d_.front()));
    d_.pop_front();
    Syllable t{l.trail, l.trail_base};
    std::vector<Segment> rest;
    emit_ladder(rest, l.shifted(1));
    for (auto it = rest.rbegin(); it != rest.rend(); ++it) d_.push_front(std::move(*it));
    d_.emplace_front(std::move(t));
  }

  void pop_back() {
    if (std::holds_alternative<Syllable>(d_.back())) {
      d_.pop_back();
      return;
    }
    Ladder l = std::get<Ladder>(std::move(d_.back()));
    d_.pop_back();
    BigInt last = l.count - 1;
    Syllable lead_last{l.lead, l.lead_exp(last)};
    l.count = last;
    std::vector<Segment> rest;
    emit_ladder(rest, std::move(l));
    for (auto& s : rest) d_.push_back(std::move(s));
    d_.emplace_back(std::move(lead_last));
  }

  void push_front(Syllable s) { d_.emplace_front(std::move(s)); }
  void push_back(Syllable s) { d_.emplace_back(std::move(s)); }

  Word to_word() const {
    WordBuilder b;
    for (const Segment& s : d_) {
      if (const auto* syl = std::get_if<Syllable>(&s))
        b.push(*syl);
      else
        b.push(std::get<Ladder>(s));
    }
    return std::move(b).finish();
  }

 private:
  std::deque<Segment> d_;
};

}  // namespace

CyclicReduction cyclic_reduce(const Word& w) {
  SegmentDeque d(w.segments());
  WordBuilder conj;
  while (!d.empty() && !d.single_syllable()) {
    Syllable f = d.front(), l = d.back();
    if (f.gen != l.gen || (f.exp > 0) == (l.exp > 0)) break;
    d.pop_front();
    d.pop_back();
    BigInt k = std::min(abs(f.exp), abs(l.exp));
    BigInt signed_k = f.exp > 0 ? k : BigInt(-k);
    conj.push(f.gen, signed_k);
    BigInt f_rest = f.exp - signed_k;
    BigInt l_rest = l.exp + signed_k;
    if (f_rest != 0) d.push_front({f.gen, f_rest});
    if (l_rest != 0) d.push_back({l.gen, l_rest});
  }
  return {d.to_word(), std::move(conj).finish()};
}

Word power(const Word& w, const BigInt& n) {
  if (n == 0 || w.empty()) return {};
  if (n < 0) return power(w.inverse(), -n);
  CyclicReduction cr = cyclic_reduce(w);
  WordBuilder b;
  b.append(cr.conjugator);
  const auto segs = cr.core.segments();
  if (segs.size() == 1 && std::holds_alternative<Syllable>(segs[0])) {
    const auto& s = std::get<Syllable>(segs[0]);
    b.push(s.gen, s.exp * n);
  } else {
    if (n > BigInt(std::numeric_limits<std::uint32_t>::max()))
      throw BudgetExceeded("word power exponent " + n.str() + " too large to expand");
    auto reps = static_cast<std::uint64_t>(n);
    for (std::uint64_t i = 0; i < reps; ++i) b.append(cr.core);
  }
  b.append(cr.conjugator.inverse());
  return std::move(b).finish();
}

// ----------------------------------------------------------------- GenMap

void GenMap::assign(const Generator& g, std::vector<Word> images) {
  if (images.size() != arity_)
    throw InvalidArgument("image tuple for '" + g.name() + "' has length " +
                          std::to_string(images.size()) + ", expected " +
                          std::to_string(arity_));
  images_[g.name()] = std::move(images);
}

void GenMap::assign(const Generator& g, Word image) {
  std::vector<Word> v;
  v.push_back(std::move(image));
  assign(g, std::move(v));
}

const std::vector<Word>* GenMap::find(const Generator& g) const {
  auto it = images_.find(g.name());
  return it == images_.end() ? nullptr : &it->second;
}

namespace {

const Syllable* as_single(const Word& w) {
  auto segs = w.segments();
  if (segs.size() == 1) return std::get_if<Syllable>(&segs[0]);
  return nullptr;
}

void push_power(WordBuilder& b, const Word& image, const BigInt& e) {
  if (image.empty()) return;
  if (const Syllable* s = as_single(image)) {
    b.push(s->gen, s->exp * e);
    return;
  }
  b.append(power(image, e));
}

}  // namespace

std::vector<Word> substitute(const Word& w, const GenMap& images) {
  auto lookup = [&](const Generator& g) -> const std::vector<Word>& {
    const auto* tuple = images.find(g);
    if (tuple == nullptr) throw InvalidArgument("unassigned generator '" + g.name() + "'");
    return *tuple;
  };
  // Validate before building anything.
  for (const Generator& g : w.generators()) lookup(g);

  std::vector<Word> out;
  out.reserve(images.arity());
  for (std::size_t c = 0; c < images.arity(); ++c) {
    WordBuilder b;
    for (const Segment& seg : w.segments()) {
      if (const auto* syl = std::get_if<Syllable>(&seg)) {
        push_power(b, lookup(syl->gen)[c], syl->exp);
        continue;
      }
      const auto& l = std::get<Ladder>(seg);
      const Word& u = lookup(l.lead)[c];
      const Word& v = lookup(l.trail)[c];
      bool u_simple = u.empty() || as_single(u) != nullptr;
      bool v_simple = v.empty() || as_single(v) != nullptr;
      if (u_simple && v_simple) {
        const Syllable* us = as_single(u);
        const Syllable* vs = as_single(v);
        if (us == nullptr && vs == nullptr) continue;
        if (us != nullptr && vs != nullptr && us->gen != vs->gen) {
          b.push(Ladder{us->gen, us->exp * l.lead_base, us->exp * l.lead_step,
                        vs->gen, vs->exp * l.trail_base, vs->exp * l.trail_step,
                        l.count});
          continue;
        }
        BigInt total = 0;
        const Generator* g = nullptr;
        if (us != nullptr) {
          total += us->exp * progression_sum(l.lead_base, l.lead_step, l.count);
          g = &us->gen;
        }
        if (vs != nullptr) {
          total += vs->exp * progression_sum(l.trail_base, l.trail_step, l.count);
          g = &vs->gen;
        }
        b.push(*g, total);
        continue;
      }
      for (BigInt i = 0; i < l.count; ++i) {
        push_power(b, u, l.lead_exp(i));
        push_power(b, v, l.trail_exp(i));
      }
    }
    out.push_back(std::move(b).finish());
  }
  return out;
}

}  // namespace ripskit
