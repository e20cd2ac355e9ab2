#pragma once

// Semi-decision engines: coset enumeration, finite quotient search and
// normal-closure membership.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ripskit/presentation.hpp"

namespace ripskit {

inline constexpr std::uint64_t kDefaultMaxCosets = 100'000;
inline constexpr std::uint64_t kCosetRelatorLetters = 10'000'000;

using Permutation = std::vector<std::uint32_t>;  // 1-based images of 1..n

struct CosetResult {
  bool finite = false;
  std::size_t index = 0;          // on finite
  std::uint64_t max_cosets = 0;   // the budget used
  std::uint64_t defined = 0;      // cosets ever defined
  std::vector<std::string> generators;
  std::vector<Permutation> perms;  // one per generator, on finite

  std::string serialize() const;
  static CosetResult parse(std::string_view text);
};

// HLT enumeration of the cosets of <subgroup> in p. Cosets are numbered in
// order of definition; coset 1 is the subgroup.
CosetResult coset_enumerate(const Presentation& p, const std::vector<Word>& subgroup,
                            std::uint64_t max_cosets = kDefaultMaxCosets);

// Checks a finite result: every relator and subgroup generator fixes
// coset 1 (subgroup) or acts trivially (relators), the action is transitive
// and the permutations are well formed.
bool verify_coset_table(const Presentation& p, const std::vector<Word>& subgroup, const CosetResult& r);

// Image of coset `c` (1-based) under w.
std::uint32_t coset_act(const Presentation& p, const CosetResult& r, std::uint32_t c, const Word& w);

enum class Certificate { Trivial, Inconclusive };
Certificate certify_trivial(const Presentation& p, std::uint64_t max_cosets = kDefaultMaxCosets);

// Word problem in a finite group given by a complete table over the
// trivial subgroup.
class CosetTableOracle final : public WordOracle {
 public:
  CosetTableOracle(Presentation p, CosetResult table);
  Triviality decide(const Word& w) const override;

 private:
  Presentation p_;
  CosetResult table_;
};

// ------------------------------------------------------------ quotients

inline constexpr std::size_t kQuotientDegreeCap = 6;
inline constexpr std::size_t kDefaultQuotientDegree = 5;

struct QuotientWitness {
  std::size_t degree = 0;
  std::vector<std::string> generators;
  std::vector<Permutation> images;
  std::uint64_t image_order = 0;
};

struct QuotientResult {
  std::size_t max_degree = 0;
  std::optional<QuotientWitness> witness;

  std::string serialize() const;
  static QuotientResult parse(std::string_view text);
};

// Searches S_2..S_max_degree for a homomorphism with nontrivial image.
QuotientResult quotient_search(const Presentation& p, std::size_t max_degree = kDefaultQuotientDegree,
                               std::size_t cap = kQuotientDegreeCap);

// Evaluates w under an assignment of permutations (right action).
Permutation evaluate_permutation(const Presentation& p, const std::vector<Permutation>& images,
                                 const Word& w);

// ------------------------------------------------------------ membership

enum class Membership { Yes, No, Inconclusive };

struct MembershipResult {
  Membership answer = Membership::Inconclusive;
  std::string method;  // "free-reduction", "dehn", "coset-index" or "none"
  std::uint64_t max_cosets = 0;
  std::optional<std::size_t> index_with;     // |<X | R u {w}>| when finite
  std::optional<std::size_t> index_without;  // |<X | R>| when finite

  std::string serialize() const;
};

MembershipResult normal_closure_member(const Word& w, const Presentation& p,
                                       std::uint64_t max_cosets = kDefaultMaxCosets);

}  // namespace ripskit
