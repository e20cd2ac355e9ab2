#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "ripskit/word.hpp"

namespace ripskit {

// Finite presentation <generators | relators>. Relator count and order are
// kept exactly as given; empty relators are legal.
class Presentation {
 public:
  Presentation() = default;
  // Throws InvalidArgument on duplicate generators or undeclared relator
  // generators.
  Presentation(std::vector<Generator> generators, std::vector<Word> relators);

  const std::vector<Generator>& generators() const noexcept { return gens_; }
  const std::vector<Word>& relators() const noexcept { return rels_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  // Line-oriented text format:
  //   gens: a b c
  //   rel: a b a^-1 b^-1
  //   # comment
  static Presentation parse(std::string_view text);
  std::string serialize() const;

  friend bool operator==(const Presentation& a, const Presentation& b) {
    return a.gens_ == b.gens_ && a.rels_ == b.rels_;
  }

 private:
  std::vector<Generator> gens_;
  std::vector<Word> rels_;
  std::unordered_map<std::string, std::size_t> index_;
};

// Parses a file holding a single word (comment and blank lines ignored).
Word parse_word_file(std::string_view text);
// Parses one word per non-comment line.
std::vector<Word> parse_word_list(std::string_view text);

// Letter codes relative to a presentation's alphabet: generator i is 2i,
// its inverse 2i+1.
using Letters = std::vector<std::uint32_t>;
inline std::uint32_t inverse_letter(std::uint32_t l) { return l ^ 1U; }

// Expands w into letter codes; throws BudgetExceeded beyond `max_letters`
// and InvalidArgument for generators outside the alphabet.
Letters to_letters(const Presentation& p, const Word& w, std::uint64_t max_letters);
Word from_letters(const Presentation& p, std::span<const std::uint32_t> letters);
Letters reduce_letters(std::span<const std::uint32_t> letters);
Letters cyclically_reduce_letters(std::span<const std::uint32_t> letters);

struct Symmetrized {
  std::vector<Word> words;
  // One entry per relator: relator = conjugator * core * conjugator^-1.
  std::vector<CyclicReduction> reductions;
};

// All distinct cyclic permutations of each cyclically reduced relator and of
// its inverse, in first-occurrence order.
Symmetrized symmetrize(const Presentation& p, std::uint64_t max_letters = 10'000'000);

// ------------------------------------------------------------ abelianization

class IntMatrix {
 public:
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<BigInt> entries);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  BigInt& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

 private:
  std::size_t rows_, cols_;
  std::vector<BigInt> a_;
};

// Nonzero invariant factors d1 | d2 | ... | dk (positive).
std::vector<BigInt> smith_normal_form(IntMatrix m);

// Rows = relators, columns = generators.
IntMatrix exponent_sum_matrix(const Presentation& p);

struct AbelianizationResult {
  std::size_t betti = 0;
  std::vector<BigInt> torsion;  // divisors >= 2, each dividing the next

  bool trivial() const { return betti == 0 && torsion.empty(); }
  std::string serialize() const;
  static AbelianizationResult parse(std::string_view text);
  friend bool operator==(const AbelianizationResult&, const AbelianizationResult&) = default;
};

AbelianizationResult abelianization(const Presentation& p);

// --------------------------------------------------------- homomorphisms

enum class Triviality { Trivial, Nontrivial, Inconclusive };

// Decides triviality of words in some fixed target group.
class WordOracle {
 public:
  virtual ~WordOracle() = default;
  virtual Triviality decide(const Word& w) const = 0;
};

class FreeGroupOracle final : public WordOracle {
 public:
  Triviality decide(const Word& w) const override {
    return w.empty() ? Triviality::Trivial : Triviality::Nontrivial;
  }
};

enum class HomCheck { Holds, Fails, Inconclusive };

// True iff every relator of `source` maps to the identity, one oracle per
// component of the map. A definite failure wins over inconclusive answers.
HomCheck check_hom(const Presentation& source, const GenMap& map,
                   std::span<const WordOracle* const> components);
HomCheck check_hom(const Presentation& source, const GenMap& map, const WordOracle& target);

}  // namespace ripskit
