#include "ripskit/ripskit.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "ripskit/constructions.hpp"
#include "ripskit/pipeline.hpp"
#include "ripskit/semidecide.hpp"
#include "ripskit/smallcancel.hpp"

struct rk_presentation {
  ripskit::Presentation value;
};
struct rk_word {
  ripskit::Word value;
};
struct rk_fiber_input {
  ripskit::FiberInput value;
};

namespace {

thread_local std::string last_error;

// Text output is one token per syllable; Gamma at default parameters is far
// beyond this.
constexpr std::uint64_t kMaxTextSyllables = 50'000'000;

void check_text_size(const ripskit::BigInt& syllables) {
  if (syllables > kMaxTextSyllables)
    throw ripskit::BudgetExceeded("serialized form would hold " + syllables.str() + " syllables (limit " +
                                  std::to_string(kMaxTextSyllables) + ")");
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename F>
rk_status guard(F&& body) {
  try {
    body();
    last_error.clear();
    return RK_OK;
  } catch (const ripskit::ParseError& e) {
    last_error = e.what();
    return RK_ERR_PARSE;
  } catch (const ripskit::InvalidArgument& e) {
    last_error = e.what();
    return RK_ERR_INVALID;
  } catch (const ripskit::BudgetExceeded& e) {
    last_error = e.what();
    return RK_ERR_BUDGET;
  } catch (const ripskit::NotCertified& e) {
    last_error = e.what();
    return RK_ERR_NOT_CERTIFIED;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return RK_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return RK_ERR_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (!p) throw ripskit::InvalidArgument(std::string(what) + " must not be null");
}

std::optional<ripskit::BigInt> big_or_none(const char* s, const char* what) {
  if (!s || !*s) return std::nullopt;
  std::string t(s);
  std::size_t i = t[0] == '-' ? 1 : 0;
  if (i == t.size() || t.find_first_not_of("0123456789", i) != std::string::npos)
    throw ripskit::ParseError(std::string(what) + " must be a decimal integer, got '" + t + "'");
  return ripskit::BigInt(t);
}

ripskit::RipsParams rips_params(const rk_rips_options* opt) {
  ripskit::RipsParams p;
  if (!opt) return p;
  p.p = opt->p;
  p.m_override = big_or_none(opt->m_override, "m-override");
  p.lambda_override = big_or_none(opt->lambda_override, "lambda-override");
  return p;
}

std::vector<ripskit::Word> word_list(const char* text) {
  if (!text) return {};
  return ripskit::parse_word_list(text);
}

std::string dehn_report(const ripskit::DehnResult& r) {
  std::string out = std::string("result: ") + (r.trivial ? "trivial" : "nontrivial") + "\n";
  out += "residue: " + r.residue.to_string() + "\n";
  out += "steps: " + std::to_string(r.trace.size()) + "\n";
  for (std::size_t i = 0; i < r.trace.size(); ++i) {
    const ripskit::DehnStep& s = r.trace[i];
    out += "step " + std::to_string(i + 1) + ": start " + std::to_string(s.start) + " length " +
           std::to_string(s.length) + " relator " + std::to_string(s.source.relator + 1) +
           (s.source.inverse ? " -" : " +") + " offset " + std::to_string(s.source.offset) + "\n";
  }
  return out;
}

}  // namespace

extern "C" {

const char* rk_version(void) { return "1.0.0"; }

const char* rk_last_error(void) { return last_error.c_str(); }

const char* rk_status_name(rk_status s) {
  switch (s) {
    case RK_OK:
      return "ok";
    case RK_ERR_PARSE:
      return "parse error";
    case RK_ERR_INVALID:
      return "invalid argument";
    case RK_ERR_BUDGET:
      return "budget exceeded";
    case RK_ERR_NOT_CERTIFIED:
      return "not certified";
    case RK_ERR_IO:
      return "i/o error";
    case RK_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

void rk_string_free(char* s) { std::free(s); }

rk_status rk_presentation_parse(const char* text, rk_presentation** out) {
  return guard([&] {
    require(text, "text");
    require(out, "out");
    *out = new rk_presentation{ripskit::Presentation::parse(text)};
  });
}

rk_status rk_presentation_serialize(const rk_presentation* p, char** out) {
  return guard([&] {
    require(p, "presentation");
    require(out, "out");
    ripskit::BigInt total = 0;
    for (const ripskit::Word& r : p->value.relators()) total += r.syllable_count();
    check_text_size(total);
    *out = dup(p->value.serialize());
  });
}

size_t rk_presentation_generator_count(const rk_presentation* p) { return p ? p->value.generators().size() : 0; }
size_t rk_presentation_relator_count(const rk_presentation* p) { return p ? p->value.relators().size() : 0; }
void rk_presentation_free(rk_presentation* p) { delete p; }

rk_status rk_word_parse(const char* text, rk_word** out) {
  return guard([&] {
    require(text, "text");
    require(out, "out");
    *out = new rk_word{ripskit::parse_word_file(text)};
  });
}

rk_status rk_word_serialize(const rk_word* w, char** out) {
  return guard([&] {
    require(w, "word");
    require(out, "out");
    check_text_size(w->value.syllable_count());
    *out = dup(w->value.to_string() + "\n");
  });
}

void rk_word_free(rk_word* w) { delete w; }

rk_status rk_fiber_input_parse(const char* text, rk_fiber_input** out) {
  return guard([&] {
    require(text, "text");
    require(out, "out");
    *out = new rk_fiber_input{ripskit::FiberInput::parse(text)};
  });
}

rk_status rk_fiber_input_serialize(const rk_fiber_input* in, char** out) {
  return guard([&] {
    require(in, "fiber input");
    require(out, "out");
    *out = dup(in->value.serialize());
  });
}

void rk_fiber_input_free(rk_fiber_input* in) { delete in; }

void rk_rips_options_init(rk_rips_options* opt) {
  if (!opt) return;
  opt->p = 1;
  opt->m_override = nullptr;
  opt->lambda_override = nullptr;
}

rk_status rk_rips(const rk_presentation* w, const rk_rips_options* opt, rk_presentation** out,
                  char** constants) {
  return guard([&] {
    require(w, "presentation");
    require(out, "out");
    ripskit::RipsResult r = ripskit::rips(w->value, rips_params(opt));
    std::string c;
    if (constants)
      c = "p: " + std::to_string(r.constants.p) + "\nm: " + r.constants.m.str() +
          "\nlambda: " + r.constants.lambda.str() + "\n";
    auto* h = new rk_presentation{std::move(r.presentation)};
    if (constants) {
      try {
        *constants = dup(c);
      } catch (...) {
        delete h;
        throw;
      }
    }
    *out = h;
  });
}

rk_status rk_theta(uint64_t n, rk_presentation** out) {
  return guard([&] {
    require(out, "out");
    *out = new rk_presentation{ripskit::theta(n)};
  });
}

rk_status rk_miller(const rk_presentation* seed, const rk_word* w, rk_presentation** out) {
  return guard([&] {
    require(seed, "seed");
    require(w, "word");
    require(out, "out");
    auto sigma = ripskit::miller_sigma(seed->value, w->value);
    *out = new rk_presentation{
        ripskit::Presentation({ripskit::Generator("x"), ripskit::Generator("y")}, std::move(sigma))};
  });
}

rk_status rk_w_sigma_k(const rk_presentation* q, const char* sigma, size_t k, rk_presentation** out) {
  return guard([&] {
    require(q, "presentation");
    require(sigma, "sigma");
    require(out, "out");
    *out = new rk_presentation{ripskit::w_sigma_k(q->value, word_list(sigma), k).presentation};
  });
}

rk_status rk_tilde(const rk_word* w, size_t r, rk_word** out) {
  return guard([&] {
    require(w, "word");
    require(out, "out");
    *out = new rk_word{ripskit::tilde(w->value, r)};
  });
}

rk_status rk_fiber_gadget(const rk_fiber_input* in, const rk_word* w, rk_presentation** out) {
  return guard([&] {
    require(in, "fiber input");
    require(w, "word");
    require(out, "out");
    *out = new rk_presentation{ripskit::fiber_gadget(in->value, w->value)};
  });
}

void rk_gamma_options_init(rk_gamma_options* opt) {
  if (!opt) return;
  opt->k = 1;
  rk_rips_options_init(&opt->rips);
  opt->max_cosets = ripskit::kDefaultMaxCosets;
  opt->q = nullptr;
  opt->r_prime = nullptr;
  opt->a_bar = nullptr;
  opt->b_bar = nullptr;
}

rk_status rk_pipeline_gamma(const rk_presentation* seed, const rk_word* w, const rk_gamma_options* opt,
                            rk_presentation** gamma, char** report) {
  return guard([&] {
    require(seed, "seed");
    require(w, "word");
    require(opt, "options");
    require(report, "report");
    ripskit::GammaInput in = ripskit::default_gamma_input(seed->value, w->value, opt->k);
    if (opt->q) in.q = opt->q->value;
    in.r_prime = word_list(opt->r_prime);
    if (opt->a_bar) in.a_bar = opt->a_bar->value;
    if (opt->b_bar) in.b_bar = opt->b_bar->value;
    in.rips = rips_params(&opt->rips);
    ripskit::PipelineReport rep = ripskit::pipeline_gamma(in, opt->max_cosets);
    char* text = dup(rep.serialize());
    if (gamma) {
      try {
        *gamma = new rk_presentation{rep.result.gamma.presentation};
      } catch (...) {
        std::free(text);
        throw;
      }
    }
    *report = text;
  });
}

rk_status rk_verify_metric(const rk_presentation* p, const char* lambda, uint64_t piece_budget,
                           rk_verdict* verdict, char** report) {
  return guard([&] {
    require(p, "presentation");
    require(lambda, "lambda");
    require(verdict, "verdict");
    require(report, "report");
    ripskit::SCReport r = ripskit::verify_metric(p->value, ripskit::parse_rational(lambda), piece_budget);
    *report = dup(r.serialize());
    *verdict = r.holds ? RK_HOLDS : RK_FAILS;
  });
}

rk_status rk_abelianize(const rk_presentation* p, rk_verdict* verdict, char** report) {
  return guard([&] {
    require(p, "presentation");
    require(verdict, "verdict");
    require(report, "report");
    ripskit::AbelianizationResult a = ripskit::abelianization(p->value);
    *report = dup(a.serialize());
    *verdict = a.trivial() ? RK_HOLDS : RK_FAILS;
  });
}

rk_status rk_dehn(const rk_presentation* p, const rk_word* w, uint64_t piece_budget, rk_verdict* verdict,
                  char** report) {
  return guard([&] {
    require(p, "presentation");
    require(w, "word");
    require(verdict, "verdict");
    require(report, "report");
    ripskit::DehnSolver solver(p->value, piece_budget);
    ripskit::DehnResult r = solver.solve(w->value);
    *report = dup(dehn_report(r));
    *verdict = r.trivial ? RK_HOLDS : RK_FAILS;
  });
}

rk_status rk_coset(const rk_presentation* p, const char* subgroup, uint64_t max_cosets, rk_verdict* verdict,
                   char** report) {
  return guard([&] {
    require(p, "presentation");
    require(verdict, "verdict");
    require(report, "report");
    ripskit::CosetResult r = ripskit::coset_enumerate(p->value, word_list(subgroup), max_cosets);
    *report = dup(r.serialize());
    *verdict = r.finite ? RK_HOLDS : RK_INCONCLUSIVE;
  });
}

rk_status rk_quotient_search(const rk_presentation* p, size_t max_degree, rk_verdict* verdict, char** report) {
  return guard([&] {
    require(p, "presentation");
    require(verdict, "verdict");
    require(report, "report");
    ripskit::QuotientResult r = ripskit::quotient_search(p->value, max_degree);
    *report = dup(r.serialize());
    *verdict = r.witness ? RK_HOLDS : RK_FAILS;
  });
}

rk_status rk_closure_member(const rk_presentation* p, const rk_word* w, uint64_t max_cosets,
                            rk_verdict* verdict, char** report) {
  return guard([&] {
    require(p, "presentation");
    require(w, "word");
    require(verdict, "verdict");
    require(report, "report");
    ripskit::MembershipResult r = ripskit::normal_closure_member(w->value, p->value, max_cosets);
    *report = dup(r.serialize());
    switch (r.answer) {
      case ripskit::Membership::Yes:
        *verdict = RK_HOLDS;
        break;
      case ripskit::Membership::No:
        *verdict = RK_FAILS;
        break;
      case ripskit::Membership::Inconclusive:
        *verdict = RK_INCONCLUSIVE;
        break;
    }
  });
}

}  // extern "C"
