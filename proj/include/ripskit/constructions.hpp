#pragma once

// Presentation builders: the refined Rips construction, the Theta family,
// Miller's words, W_{Sigma,k}, the Gamma pipeline and the fiber gadget.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ripskit/presentation.hpp"

namespace ripskit {

BigInt factorial(std::uint64_t n);

// ------------------------------------------------------------------- Rips

inline constexpr std::uint64_t kMaxRipsP = 100;
// Smallest accepted m; the fixed base runs use exponents up to 162.
inline constexpr unsigned kMinRipsM = 163;

struct RipsParams {
  std::uint64_t p = 1;
  std::optional<BigInt> m_override;
  std::optional<BigInt> lambda_override;
};

struct RipsConstants {
  std::uint64_t p = 1;
  BigInt m;
  BigInt lambda;
  std::size_t r = 0;
  BigInt total_length;  // |R_1| + ... + |R_s|

  // k_{di} = 7m(4i + d - 4), d in 1..4, i in 1..r.
  BigInt k(unsigned d, std::size_t i) const;
};

// Default m = 3^8 * p!.
BigInt rips_default_m(std::uint64_t p);
RipsConstants rips_constants(const Presentation& w, const RipsParams& params = {});

struct RipsResult {
  Presentation presentation;
  GenMap projection;  // x_i -> x_i, x -> 1, y -> 1
  RipsConstants constants;
};

RipsResult rips(const Presentation& w, const RipsParams& params = {});

// ------------------------------------------------------------------ Theta

Presentation theta(std::uint64_t n);

// ----------------------------------------------------------------- Miller

namespace miller {
Word a();
Word c();
Word b0();
Word b(std::uint64_t i);  // i >= 1
}  // namespace miller

// The m + 2 words over {x, y}; seed generators map to b_1, b_2, ... in
// declaration order.
std::vector<Word> miller_sigma(const Presentation& seed, const Word& w);

// ------------------------------------------------------------- W_{Sigma,k}

std::string level_generator_name(std::size_t level, std::size_t sigma_index);

struct WSigmaK {
  Presentation presentation;
  // Into Q^{k+1}; component 0 is the diagonal copy.
  GenMap pi0;
};

WSigmaK w_sigma_k(const Presentation& q, const std::vector<Word>& sigma, std::size_t k);

// ------------------------------------------------------------------ Gamma

struct GammaInput {
  Presentation q;  // default: free group on a, b
  std::vector<Word> r_prime;
  Word a_bar;
  Word b_bar;
  Presentation seed;
  Word w;
  std::size_t k = 1;
  RipsParams rips;
};

// Free group <a, b | > with a_bar = a, b_bar = b.
GammaInput default_gamma_input(Presentation seed, Word w, std::size_t k);

struct GammaResult {
  std::vector<Word> sigma_prime;
  Presentation intermediate;  // <X | R u Sigma'>
  Presentation w_sigma;
  RipsResult gamma;
};

GammaResult gamma_for_word(const GammaInput& in);

// 5 + |R| + 4r + 4k|S| + (k^2 + k)/2 |S|^2.
BigInt gamma_relator_count(std::size_t r, std::size_t rel, std::size_t k, std::size_t sigma);

// ------------------------------------------------------------------ fiber

// w(x_1..x_r) w(x_{r+1}..x_{2r})^-1.
Word tilde(const Word& w, std::size_t r);

std::string x_name(std::size_t i);  // "x<i>"

struct FiberInput {
  std::size_t r = 0;
  std::size_t k = 0;
  std::vector<Word> a;  // words in y_1..y_k
  // b[((i - 1) * k + (l - 1)) * 2 + (e > 0 ? 0 : 1)]
  std::vector<Word> b;
  std::vector<Word> v;  // words in x_1..x_{2r}, y_1..y_k

  const Word& b_word(std::size_t i, std::size_t l, int e) const;
  Word& b_word(std::size_t i, std::size_t l, int e);

  // Presentation-style text: a gens line listing x1..x2r y1..yk, then
  // "A: w", "B i l e: w" (every entry required) and "V: w" lines.
  static FiberInput parse(std::string_view text);
  std::string serialize() const;
  void validate() const;
};

Presentation fiber_gadget(const FiberInput& in, const Word& w);

// 1 + 2k + k^2 + 8rk + 2|J1| + |J2|.
std::size_t fiber_relator_count(const FiberInput& in);

}  // namespace ripskit
