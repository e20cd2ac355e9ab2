#pragma once

// Metric small cancellation: pieces, C'(lambda) certification, proper
// powers and Dehn's algorithm.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ripskit/presentation.hpp"

namespace ripskit {

// Budget for the piece engine, counted in syllables of the symmetrized set
// (both orientations of every cyclically reduced relator).
inline constexpr std::uint64_t kDefaultPieceBudget = 1'000'000;

// An occurrence of a subword inside a symmetrized relator: relator index
// (0-based), orientation, and letter offset within the cyclically reduced
// relator (or its inverse) read cyclically from its first letter.
struct PieceOccurrence {
  std::size_t relator = 0;
  bool inverse = false;
  std::uint64_t offset = 0;

  friend bool operator==(const PieceOccurrence&, const PieceOccurrence&) = default;
};

struct PieceWitness {
  Word piece;
  PieceOccurrence first;
  PieceOccurrence second;
};

struct RelatorPieces {
  std::size_t relator = 0;
  BigInt length;     // letters of the cyclically reduced relator
  BigInt max_piece;  // longest piece contained in it
  std::optional<PieceWitness> witness;  // realizes max_piece when > 0
};

// Throws InvalidArgument for empty relators and BudgetExceeded beyond
// `budget` symmetrized syllables.
std::vector<RelatorPieces> max_piece_lengths(const Presentation& p,
                                             std::uint64_t budget = kDefaultPieceBudget);

Rational parse_rational(std::string_view text);
std::string rational_to_string(const Rational& q);

struct SCReport {
  struct Row {
    std::size_t relator = 0;  // 1-based in serialized form
    BigInt length;
    BigInt max_piece;

    friend bool operator==(const Row&, const Row&) = default;
  };

  Rational lambda;
  std::uint64_t piece_budget = kDefaultPieceBudget;
  std::vector<Row> rows;
  bool holds = false;
  // Present iff !holds.
  std::optional<Word> witness;
  std::optional<PieceOccurrence> first;
  std::optional<PieceOccurrence> second;

  std::string serialize() const;
  static SCReport parse(std::string_view text);
};

SCReport verify_metric(const Presentation& p, const Rational& lambda,
                       std::uint64_t budget = kDefaultPieceBudget);

struct ProperPower {
  bool is_power = false;
  Word root;                // set when is_power
  BigInt exponent = 1;
};

// w must be cyclically reduced and nonempty.
ProperPower is_proper_power(const Word& w);

// ------------------------------------------------------------------- Dehn

struct DehnStep {
  std::size_t start = 0;   // cyclic start of the replaced subword
  std::size_t length = 0;  // letters replaced
  PieceOccurrence source;  // where the subword sits in the symmetrized set
  Word before;             // cyclically reduced word before the step
  Word after;              // cyclically reduced word after the step
};

struct DehnResult {
  bool trivial = false;
  Word residue;  // cyclically reduced word where the loop stopped
  std::vector<DehnStep> trace;
};

inline constexpr std::uint64_t kDefaultDehnLetters = 10'000'000;

class DehnSolver {
 public:
  // Certifies C'(1/6) first; throws NotCertified otherwise.
  explicit DehnSolver(Presentation p, std::uint64_t piece_budget = kDefaultPieceBudget,
                      std::uint64_t max_letters = kDefaultDehnLetters);

  const Presentation& presentation() const noexcept { return p_; }
  DehnResult solve(const Word& w) const;
  bool is_trivial(const Word& w) const { return solve(w).trivial; }

 private:
  struct Cyclic {
    std::size_t relator;
    bool inverse;
    Letters letters;
  };
  Presentation p_;
  std::uint64_t max_letters_;
  std::vector<Cyclic> cyclic_;
  // first letter -> (cyclic index, offset)
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> by_letter_;
};

// Replays a trace from the cyclic reduction of `w`; true iff every step is a
// valid Dehn replacement and the final word is the recorded residue.
bool replay_dehn_trace(const Presentation& p, const Word& w, const DehnResult& result);

class DehnOracle final : public WordOracle {
 public:
  explicit DehnOracle(const DehnSolver& solver) : solver_(solver) {}
  Triviality decide(const Word& w) const override {
    return solver_.is_trivial(w) ? Triviality::Trivial : Triviality::Nontrivial;
  }

 private:
  const DehnSolver& solver_;
};

}  // namespace ripskit
