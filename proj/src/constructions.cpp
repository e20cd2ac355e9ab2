#include "ripskit/constructions.hpp"

namespace ripskit {

namespace {

const Generator kX("x");
const Generator kY("y");

// x y^(k+1) x y^(k+2) ... x y^(k+count)
Word padding(const BigInt& k, const BigInt& count) {
  return Word::ladder(kX, 1, 0, kY, k + 1, 1, count);
}

}  // namespace

BigInt factorial(std::uint64_t n) {
  BigInt f = 1;
  for (std::uint64_t i = 2; i <= n; ++i) f *= i;
  return f;
}

// ------------------------------------------------------------------- Rips

BigInt RipsConstants::k(unsigned d, std::size_t i) const {
  if (d < 1 || d > 4 || i < 1 || i > r) throw InvalidArgument("k_{di} index out of range");
  return 7 * m * (4 * BigInt(i) + d - 4);
}

BigInt rips_default_m(std::uint64_t p) { return BigInt(6561) * factorial(p); }

RipsConstants rips_constants(const Presentation& w, const RipsParams& params) {
  if (params.p < 1 || params.p > kMaxRipsP)
    throw InvalidArgument("p must lie in 1.." + std::to_string(kMaxRipsP));
  RipsConstants c;
  c.p = params.p;
  c.m = params.m_override ? *params.m_override : rips_default_m(params.p);
  if (c.m < kMinRipsM)
    throw InvalidArgument("m = " + c.m.str() + " is below " + std::to_string(kMinRipsM) +
                          ": the run xy^m...xy^(2m+1) would overlap the fixed runs 1..162");
  c.r = w.generators().size();
  c.total_length = 0;
  for (const Word& rel : w.relators()) c.total_length += rel.letter_length();
  if (params.lambda_override) {
    if (*params.lambda_override <= 0) throw InvalidArgument("lambda must be positive");
    c.lambda = *params.lambda_override;
  } else {
    c.lambda = 100 * c.m * c.r * c.total_length;
  }
  return c;
}

RipsResult rips(const Presentation& w, const RipsParams& params) {
  for (const Generator& g : w.generators())
    if (g == kX || g == kY)
      throw InvalidArgument("input generator '" + g.name() + "' clashes with the added generators x, y");
  RipsResult out;
  out.constants = rips_constants(w, params);
  const RipsConstants& c = out.constants;
  const BigInt& m = c.m;

  std::vector<Generator> gens = w.generators();
  gens.push_back(kX);
  gens.push_back(kY);

  std::vector<Word> rels;
  rels.push_back(padding(0, 81));
  rels.push_back(padding(81, 81));
  rels.push_back(padding(m - 1, m + 2));
  rels.push_back(padding(3 * m - 1, m + 3));
  rels.push_back(padding(5 * m - 1, m + 4));
  for (std::size_t j = 1; j <= w.relators().size(); ++j) {
    const Word& rj = w.relators()[j - 1];
    rels.push_back(c.lambda == 0 ? rj : rj * padding(c.lambda * j, c.lambda));
  }
  for (std::size_t i = 1; i <= c.r; ++i) {
    const Generator& xi = w.generators()[i - 1];
    Word xw = Word::letter(xi), xinv = Word::letter(xi, -1);
    const Word conj[4] = {xw * Word::letter(kX) * xinv, xw * Word::letter(kY) * xinv,
                          xinv * Word::letter(kX) * xw, xinv * Word::letter(kY) * xw};
    for (unsigned d = 1; d <= 4; ++d) rels.push_back(conj[d - 1] * padding(c.k(d, i), 7 * m));
  }

  out.presentation = Presentation(std::move(gens), std::move(rels));
  for (const Generator& g : w.generators()) out.projection.assign(g, Word::letter(g));
  out.projection.assign(kX, Word{});
  out.projection.assign(kY, Word{});
  return out;
}

// ------------------------------------------------------------------ Theta

Presentation theta(std::uint64_t n) {
  if (n < 5) throw InvalidArgument("theta needs n >= 5");
  if (n > 1000) throw InvalidArgument("theta supports n <= 1000");
  std::vector<Word> rels;
  for (std::uint64_t k = 5; k <= n; ++k) {
    BigInt f = factorial(k);
    rels.push_back(padding(f, f));
    rels.push_back(padding(2 * f, f - 1));
    rels.push_back(padding(3 * f, f + 1));
  }
  return Presentation({kX, kY}, std::move(rels));
}

// ----------------------------------------------------------------- Miller

namespace miller {

Word a() { return Word::letter(kY, -1) * Word::letter(kX) * commutator(Word::letter(kY), Word::letter(kX)); }

Word c() { return Word::letter(kX) * commutator(Word::letter(kY), Word::letter(kX)); }

Word b0() {
  const Word x = Word::letter(kX), A = a(), C = c();
  return power(A, -2) * power(x, -2) * A * x * power(A, 2) * power(C, -2) * x.inverse() *
         C.inverse() * x * power(C, 2);
}

Word b(std::uint64_t i) {
  if (i == 0) throw InvalidArgument("b_i needs i >= 1");
  BigInt e = BigInt(3) + i;
  return commutator(power(a(), e) * power(c(), -e), Word::letter(kX));
}

}  // namespace miller

std::vector<Word> miller_sigma(const Presentation& seed, const Word& w) {
  for (const Generator& g : w.generators())
    if (!seed.index_of(g.name()))
      throw InvalidArgument("word uses '" + g.name() + "', which is not a seed generator");
  GenMap to_b;
  for (std::size_t i = 0; i < seed.generators().size(); ++i) to_b.assign(seed.generators()[i], miller::b(i + 1));

  const Word A = miller::a(), C = miller::c(), x = Word::letter(kX);
  std::vector<Word> out;
  out.push_back(miller::b0());
  for (const Word& omega : seed.relators()) out.push_back(substitute(omega, to_b)[0]);
  Word wb = substitute(w, to_b)[0];
  out.push_back(commutator(wb, x) * power(A, 3) * power(C, -3) * x.inverse() * power(C, 3) *
                power(A, -3));
  return out;
}

// ------------------------------------------------------------- W_{Sigma,k}

std::string level_generator_name(std::size_t level, std::size_t sigma_index) {
  return "y" + std::to_string(level) + "_" + std::to_string(sigma_index);
}

WSigmaK w_sigma_k(const Presentation& q, const std::vector<Word>& sigma, std::size_t k) {
  if (sigma.empty()) throw InvalidArgument("Sigma must be nonempty");
  if (k < 1) throw InvalidArgument("k must be at least 1");
  for (std::size_t i = 0; i < sigma.size(); ++i)
    for (const Generator& g : sigma[i].generators())
      if (!q.index_of(g.name()))
        throw InvalidArgument("Sigma word " + std::to_string(i + 1) + " uses undeclared generator '" +
                              g.name() + "'");

  const std::size_t n = sigma.size();
  std::vector<Generator> gens = q.generators();
  std::vector<std::vector<Word>> y(k + 1);
  for (std::size_t s = 1; s <= k; ++s)
    for (std::size_t i = 1; i <= n; ++i) {
      Generator g(level_generator_name(s, i));
      gens.push_back(g);
      y[s].push_back(Word::letter(g));
    }

  std::vector<Word> rels = q.relators();
  for (std::size_t s = 1; s <= k; ++s)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) rels.push_back(commutator(sigma[a].inverse() * y[s][a], y[s][b]));
  for (std::size_t s = 1; s <= k; ++s)
    for (std::size_t t = s + 1; t <= k; ++t)
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) rels.push_back(commutator(y[s][a], y[t][b]));

  WSigmaK out{Presentation(gens, std::move(rels)), GenMap(k + 1)};
  for (const Generator& g : q.generators()) out.pi0.assign(g, std::vector<Word>(k + 1, Word::letter(g)));
  for (std::size_t s = 1; s <= k; ++s)
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Word> img(k + 1);
      img[s] = sigma[i];
      out.pi0.assign(Generator(level_generator_name(s, i + 1)), std::move(img));
    }
  return out;
}

// ------------------------------------------------------------------ Gamma

GammaInput default_gamma_input(Presentation seed, Word w, std::size_t k) {
  GammaInput in;
  Generator a("a"), b("b");
  in.q = Presentation({a, b}, {});
  in.a_bar = Word::letter(a);
  in.b_bar = Word::letter(b);
  in.seed = std::move(seed);
  in.w = std::move(w);
  in.k = k;
  return in;
}

GammaResult gamma_for_word(const GammaInput& in) {
  GammaResult out;
  GenMap lift;
  lift.assign(kX, in.a_bar);
  lift.assign(kY, in.b_bar);
  out.sigma_prime = in.r_prime;
  for (const Word& s : miller_sigma(in.seed, in.w)) out.sigma_prime.push_back(substitute(s, lift)[0]);

  WSigmaK wsk = w_sigma_k(in.q, out.sigma_prime, in.k);
  std::vector<Word> rels = in.q.relators();
  rels.insert(rels.end(), out.sigma_prime.begin(), out.sigma_prime.end());
  out.intermediate = Presentation(in.q.generators(), std::move(rels));
  out.w_sigma = std::move(wsk.presentation);
  out.gamma = rips(out.w_sigma, in.rips);
  return out;
}

BigInt gamma_relator_count(std::size_t r, std::size_t rel, std::size_t k, std::size_t sigma) {
  BigInt K = k, S = sigma;
  return 5 + BigInt(rel) + 4 * BigInt(r) + 4 * K * S + (K * K + K) / 2 * S * S;
}

}  // namespace ripskit
