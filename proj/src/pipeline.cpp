#include "ripskit/pipeline.hpp"

namespace ripskit {

namespace {

std::string torsion_line(const AbelianizationResult& a) {
  std::string out;
  for (const BigInt& d : a.torsion) out += " " + d.str();
  return out;
}

}  // namespace

PipelineReport pipeline_gamma(const GammaInput& in, std::uint64_t max_cosets) {
  PipelineReport rep;
  rep.result = gamma_for_word(in);
  rep.k = in.k;
  rep.p = in.rips.p;
  rep.max_cosets = max_cosets;
  rep.formula_count = gamma_relator_count(in.q.generators().size(), in.q.relators().size(), in.k,
                                          rep.result.sigma_prime.size());
  rep.gamma_abelianization = abelianization(rep.result.gamma.presentation);
  rep.intermediate_abelianization = abelianization(rep.result.intermediate);
  rep.intermediate_certificate = certify_trivial(rep.result.intermediate, max_cosets);
  return rep;
}

std::string PipelineReport::serialize() const {
  const Presentation& g = result.gamma.presentation;
  std::string out;
  out += "k: " + std::to_string(k) + "\n";
  out += "p: " + std::to_string(p) + "\n";
  out += "m: " + result.gamma.constants.m.str() + "\n";
  out += "lambda: " + result.gamma.constants.lambda.str() + "\n";
  out += "sigma-prime: " + std::to_string(result.sigma_prime.size()) + "\n";
  out += "w-sigma-generators: " + std::to_string(result.w_sigma.generators().size()) + "\n";
  out += "w-sigma-relators: " + std::to_string(result.w_sigma.relators().size()) + "\n";
  out += "gamma-generators: " + std::to_string(g.generators().size()) + "\n";
  out += "gamma-relators: " + std::to_string(g.relators().size()) + "\n";
  out += "formula-count: " + formula_count.str() + "\n";
  out += std::string("count-matches: ") + (formula_count == g.relators().size() ? "yes" : "no") + "\n";
  out += "gamma-betti: " + std::to_string(gamma_abelianization.betti) + "\n";
  out += "gamma-torsion:" + torsion_line(gamma_abelianization) + "\n";
  out += "intermediate-betti: " + std::to_string(intermediate_abelianization.betti) + "\n";
  out += "intermediate-torsion:" + torsion_line(intermediate_abelianization) + "\n";
  out += std::string("intermediate-certify: ") +
         (intermediate_certificate == Certificate::Trivial ? "trivial" : "inconclusive") + "\n";
  out += "max-cosets: " + std::to_string(max_cosets) + "\n";
  return out;
}

}  // namespace ripskit
