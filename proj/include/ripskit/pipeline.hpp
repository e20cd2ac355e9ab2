#pragma once

#include <string>

#include "ripskit/constructions.hpp"
#include "ripskit/semidecide.hpp"

namespace ripskit {

struct PipelineReport {
  GammaResult result;
  std::size_t k = 1;
  std::uint64_t p = 1;
  std::uint64_t max_cosets = kDefaultMaxCosets;
  BigInt formula_count;
  AbelianizationResult gamma_abelianization;
  AbelianizationResult intermediate_abelianization;
  Certificate intermediate_certificate = Certificate::Inconclusive;

  // key: value lines; the Gamma presentation itself is not included.
  std::string serialize() const;
};

PipelineReport pipeline_gamma(const GammaInput& in, std::uint64_t max_cosets = kDefaultMaxCosets);

}  // namespace ripskit
