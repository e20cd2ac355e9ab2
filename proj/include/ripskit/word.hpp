#pragma once

// Free-group words in run-length-encoded form.
//
// A Word is a sequence of segments. A segment is either a single syllable
// g^e or a *ladder*
//
//     lead^(a + 0*da) trail^(b + 0*db) lead^(a + 1*da) trail^(b + 1*db) ...
//
// with `count` repetitions, so relators such as x y^k+1 x y^k+2 ... x y^k+7m
// occupy constant space regardless of how many syllables they expand to.
//
// Invariant: the expanded syllable stream is the freely reduced form, i.e. no
// zero exponents and no two adjacent syllables on the same generator. Inside
// a ladder every exponent of a term has the same sign, and count >= 2.

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ripskit/errors.hpp"

namespace ripskit {

bool is_valid_generator_name(std::string_view name);

class Generator {
 public:
  explicit Generator(std::string name);

  const std::string& name() const noexcept { return name_; }

  friend bool operator==(const Generator&, const Generator&) = default;
  friend auto operator<=>(const Generator&, const Generator&) = default;

 private:
  std::string name_;
};

struct Syllable {
  Generator gen;
  BigInt exp;

  friend bool operator==(const Syllable&, const Syllable&) = default;
};

struct Ladder {
  Generator lead;
  BigInt lead_base;
  BigInt lead_step;
  Generator trail;
  BigInt trail_base;
  BigInt trail_step;
  BigInt count;

  BigInt lead_exp(const BigInt& i) const { return lead_base + i * lead_step; }
  BigInt trail_exp(const BigInt& i) const { return trail_base + i * trail_step; }

  // Ladder whose expansion is the inverse of this one's.
  Ladder inverse() const;
  // Drops the first `n` repetitions.
  Ladder shifted(const BigInt& n) const;

  friend bool operator==(const Ladder&, const Ladder&) = default;
};

using Segment = std::variant<Syllable, Ladder>;

class Word {
 public:
  Word() = default;

  static Word letter(const Generator& g, const BigInt& exp = 1);
  // Runs through the reducer, so any parameters are accepted.
  static Word ladder(const Generator& lead, const BigInt& lead_base,
                     const BigInt& lead_step, const Generator& trail,
                     const BigInt& trail_base, const BigInt& trail_step,
                     const BigInt& count);
  // Parses the whitespace-separated `name^exp` syntax; "1" is the identity.
  static Word parse(std::string_view text);

  bool empty() const noexcept { return segs_.empty(); }
  std::span<const Segment> segments() const noexcept { return segs_; }

  BigInt syllable_count() const;
  BigInt letter_length() const;
  BigInt exponent_sum(const Generator& g) const;
  std::vector<Generator> generators() const;  // sorted, distinct

  Syllable first_syllable() const;
  Syllable last_syllable() const;

  // Visits the expanded syllables in order; stops early when `fn` returns
  // false. Returns false iff stopped early.
  bool for_each_syllable(const std::function<bool(const Syllable&)>& fn) const;
  std::vector<Syllable> syllables() const;

  Word inverse() const;
  std::string to_string() const;

  friend Word operator*(const Word& u, const Word& v);
  friend bool operator==(const Word& u, const Word& v);

 private:
  friend class WordBuilder;
  std::vector<Segment> segs_;
};

// Incremental free reduction. Segments pushed in order are cancelled and
// merged against the tail built so far.
class WordBuilder {
 public:
  void push(const Generator& g, const BigInt& exp);
  void push(const Syllable& s) { push(s.gen, s.exp); }
  void push(Ladder l);
  void append(const Word& w);
  Word finish() &&;

 private:
  const Generator* back_gen() const;
  Syllable pop_back_syllable();

  std::vector<Segment> segs_;
};

Word reduce(std::span<const Syllable> raw);
Word invert(const Word& w);
Word commutator(const Word& u, const Word& v);  // u v u^-1 v^-1
Word power(const Word& w, const BigInt& n);

bool is_cyclically_reduced(const Word& w);

// w = conjugator * core * conjugator^-1 with core cyclically reduced.
struct CyclicReduction {
  Word core;
  Word conjugator;
};
CyclicReduction cyclic_reduce(const Word& w);

// Homomorphism data: generator -> tuple of images (one per direct
// factor of the target; arity 1 for plain homomorphisms).
class GenMap {
 public:
  explicit GenMap(std::size_t arity = 1) : arity_(arity) {}

  std::size_t arity() const noexcept { return arity_; }
  void assign(const Generator& g, std::vector<Word> images);
  void assign(const Generator& g, Word image);
  const std::vector<Word>* find(const Generator& g) const;
  const std::map<std::string, std::vector<Word>>& assignments() const {
    return images_;
  }

 private:
  std::size_t arity_;
  std::map<std::string, std::vector<Word>> images_;
};

// Componentwise substitution followed by reduction. Throws InvalidArgument
// naming the first unassigned generator.
std::vector<Word> substitute(const Word& w, const GenMap& images);

}  // namespace ripskit
