// ripskit command-line frontend. Talks to the library only through the C API.
//
// Exit codes: 0 success/holds/certified, 1 definitive failure,
// 2 inconclusive or budget exhausted, 3 usage or input error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "ripskit/ripskit.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFails = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitUsage = 3;

struct Failure {
  int code;
};

int status_exit(rk_status s) { return s == RK_ERR_BUDGET ? kExitInconclusive : kExitUsage; }

void check(rk_status s) {
  if (s == RK_OK) return;
  std::cerr << "ripskit: " << rk_status_name(s) << ": " << rk_last_error() << "\n";
  throw Failure{status_exit(s)};
}

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "ripskit: cannot read '" << path << "'\n";
    throw Failure{kExitUsage};
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << text;
  out.close();
  if (!out) {
    std::cerr << "ripskit: cannot write '" << path << "'\n";
    throw Failure{kExitUsage};
  }
}

struct StrDeleter {
  void operator()(char* s) const { rk_string_free(s); }
};
struct PresDeleter {
  void operator()(rk_presentation* p) const { rk_presentation_free(p); }
};
struct WordDeleter {
  void operator()(rk_word* w) const { rk_word_free(w); }
};
struct FiberDeleter {
  void operator()(rk_fiber_input* f) const { rk_fiber_input_free(f); }
};
using Str = std::unique_ptr<char, StrDeleter>;
using Pres = std::unique_ptr<rk_presentation, PresDeleter>;
using WordH = std::unique_ptr<rk_word, WordDeleter>;
using Fiber = std::unique_ptr<rk_fiber_input, FiberDeleter>;

Pres load_presentation(const std::string& path) {
  std::string text = read_input(path);
  rk_presentation* p = nullptr;
  check(rk_presentation_parse(text.c_str(), &p));
  return Pres(p);
}

WordH load_word(const std::string& path) {
  std::string text = read_input(path);
  rk_word* w = nullptr;
  check(rk_word_parse(text.c_str(), &w));
  return WordH(w);
}

WordH word_from_text(const std::string& text) {
  rk_word* w = nullptr;
  check(rk_word_parse(text.c_str(), &w));
  return WordH(w);
}

std::string take(char* s) {
  Str owned(s);
  return owned ? std::string(owned.get()) : std::string();
}

std::string serialize(const rk_presentation* p) {
  char* s = nullptr;
  check(rk_presentation_serialize(p, &s));
  return take(s);
}

struct Options {
  std::string input;
  std::string word;
  std::string output;
  std::string lambda = "1/6";
  std::uint64_t p = 1;
  std::string m_override;
  std::string lambda_override;
  std::size_t k = 1;
  std::size_t r = 1;
  std::uint64_t n = 5;
  std::uint64_t max_cosets = 100000;
  std::uint64_t piece_budget = 1000000;
  std::size_t quotient_degree = 5;
  std::uint64_t seed = 0;
  bool delta = false;
  std::string sigma;
  std::string subgroup;
  std::string q;
  std::string r_prime;
  std::string a_bar;
  std::string b_bar;
};

// Payload goes to --output when given, stdout otherwise.
void emit(const Options& o, const std::string& text) {
  if (o.output.empty())
    std::cout << text;
  else
    write_file(o.output, text);
}

int verdict_exit(rk_verdict v) {
  switch (v) {
    case RK_HOLDS:
      return kExitOk;
    case RK_FAILS:
      return kExitFails;
    case RK_INCONCLUSIVE:
      return kExitInconclusive;
  }
  return kExitUsage;
}

rk_rips_options rips_options(const Options& o) {
  rk_rips_options r;
  rk_rips_options_init(&r);
  r.p = o.p;
  r.m_override = o.m_override.empty() ? nullptr : o.m_override.c_str();
  r.lambda_override = o.lambda_override.empty() ? nullptr : o.lambda_override.c_str();
  return r;
}

int run_rips(const Options& o) {
  Pres in = load_presentation(o.input);
  rk_rips_options ro = rips_options(o);
  rk_presentation* out = nullptr;
  check(rk_rips(in.get(), &ro, &out, nullptr));
  Pres g(out);
  emit(o, serialize(g.get()));
  return kExitOk;
}

int run_theta(const Options& o) {
  rk_presentation* out = nullptr;
  check(rk_theta(o.n, &out));
  Pres t(out);
  emit(o, serialize(t.get()));
  return kExitOk;
}

int run_miller(const Options& o) {
  Pres seed = load_presentation(o.input);
  WordH w = load_word(o.word);
  rk_presentation* out = nullptr;
  check(rk_miller(seed.get(), w.get(), &out));
  Pres m(out);
  emit(o, serialize(m.get()));
  return kExitOk;
}

int run_wsk(const Options& o) {
  Pres q = load_presentation(o.input);
  std::string sigma = read_input(o.sigma);
  rk_presentation* out = nullptr;
  check(rk_w_sigma_k(q.get(), sigma.c_str(), o.k, &out));
  Pres w(out);
  emit(o, serialize(w.get()));
  return kExitOk;
}

int run_gamma(const Options& o) {
  Pres seed = load_presentation(o.input);
  WordH w = load_word(o.word);
  rk_gamma_options go;
  rk_gamma_options_init(&go);
  go.k = o.k;
  go.rips = rips_options(o);
  go.max_cosets = o.max_cosets;
  Pres q;
  WordH a, b;
  std::string r_prime;
  if (!o.q.empty()) {
    q = load_presentation(o.q);
    go.q = q.get();
  }
  if (!o.r_prime.empty()) {
    r_prime = read_input(o.r_prime);
    go.r_prime = r_prime.c_str();
  }
  if (!o.a_bar.empty()) {
    a = word_from_text(o.a_bar);
    go.a_bar = a.get();
  }
  if (!o.b_bar.empty()) {
    b = word_from_text(o.b_bar);
    go.b_bar = b.get();
  }
  rk_presentation* gamma = nullptr;
  char* report = nullptr;
  check(rk_pipeline_gamma(seed.get(), w.get(), &go, o.output.empty() ? nullptr : &gamma, &report));
  Pres g(gamma);
  std::string text = take(report);
  if (g) write_file(o.output, serialize(g.get()));
  std::cout << text;
  return kExitOk;
}

int run_tilde(const Options& o) {
  WordH w = load_word(o.word);
  rk_word* out = nullptr;
  check(rk_tilde(w.get(), o.r, &out));
  WordH t(out);
  char* s = nullptr;
  check(rk_word_serialize(t.get(), &s));
  emit(o, take(s));
  return kExitOk;
}

int run_fiber(const Options& o) {
  std::string text = read_input(o.input);
  rk_fiber_input* fi = nullptr;
  check(rk_fiber_input_parse(text.c_str(), &fi));
  Fiber in(fi);
  WordH w = load_word(o.word);
  rk_presentation* out = nullptr;
  check(rk_fiber_gadget(in.get(), w.get(), &out));
  Pres g(out);
  if (o.delta) {
    rk_rips_options ro = rips_options(o);
    rk_presentation* d = nullptr;
    check(rk_rips(g.get(), &ro, &d, nullptr));
    g.reset(d);
  }
  emit(o, serialize(g.get()));
  return kExitOk;
}

int run_verify_sc(const Options& o) {
  Pres p = load_presentation(o.input);
  rk_verdict v;
  char* report = nullptr;
  check(rk_verify_metric(p.get(), o.lambda.c_str(), o.piece_budget, &v, &report));
  emit(o, take(report));
  return verdict_exit(v);
}

int run_abelianize(const Options& o) {
  Pres p = load_presentation(o.input);
  rk_verdict v;
  char* report = nullptr;
  check(rk_abelianize(p.get(), &v, &report));
  emit(o, take(report));
  return kExitOk;
}

int run_dehn(const Options& o) {
  Pres p = load_presentation(o.input);
  WordH w = load_word(o.word);
  rk_verdict v;
  char* report = nullptr;
  check(rk_dehn(p.get(), w.get(), o.piece_budget, &v, &report));
  emit(o, take(report));
  return verdict_exit(v);
}

int run_coset(const Options& o) {
  Pres p = load_presentation(o.input);
  std::string sub;
  if (!o.subgroup.empty()) sub = read_input(o.subgroup);
  rk_verdict v;
  char* report = nullptr;
  check(rk_coset(p.get(), o.subgroup.empty() ? nullptr : sub.c_str(), o.max_cosets, &v, &report));
  emit(o, take(report));
  return verdict_exit(v);
}

int run_quotient(const Options& o) {
  Pres p = load_presentation(o.input);
  rk_verdict v;
  char* report = nullptr;
  check(rk_quotient_search(p.get(), o.quotient_degree, &v, &report));
  emit(o, take(report));
  return verdict_exit(v);
}

int run_closure(const Options& o) {
  Pres p = load_presentation(o.input);
  WordH w = load_word(o.word);
  rk_verdict v;
  char* report = nullptr;
  check(rk_closure_member(p.get(), w.get(), o.max_cosets, &v, &report));
  emit(o, take(report));
  return verdict_exit(v);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ripskit: explicit presentations, small cancellation and semi-decision tools"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(rk_version()));
  Options o;

  auto common = [&](CLI::App* s) {
    s->add_option("--output", o.output, "Write the payload to PATH instead of stdout");
    s->add_option("--seed", o.seed, "Seed for randomized behaviour (all commands are deterministic)")
        ->capture_default_str();
  };
  auto rips_flags = [&](CLI::App* s) {
    s->add_option("--p", o.p, "Index parameter p; default m = 3^8 p!")->capture_default_str();
    s->add_option("--m-override", o.m_override, "Use this m instead of 3^8 p! (at least 163)");
    s->add_option("--lambda-override", o.lambda_override, "Use this padding length instead of 100 m r sum|R_j|");
  };

  CLI::App* rips = app.add_subcommand("rips", "Rips construction of a presentation");
  rips->add_option("input", o.input, "Presentation file ('-' for stdin)")->required();
  rips_flags(rips);
  common(rips);

  CLI::App* theta = app.add_subcommand("theta", "Theta_n presentation");
  theta->add_option("n", o.n, "Stage n >= 5")->required();
  common(theta);

  CLI::App* miller = app.add_subcommand("miller", "Miller presentation <x, y | Sigma_w>");
  miller->add_option("seed-file", o.input, "Seed presentation file")->required();
  miller->add_option("word", o.word, "Word file over the seed generators")->required();
  common(miller);

  CLI::App* wsk = app.add_subcommand("wsk", "W_{Sigma,k} presentation");
  wsk->add_option("q", o.input, "Presentation Q")->required();
  wsk->add_option("sigma", o.sigma, "File with one word of Sigma per line")->required();
  wsk->add_option("--k", o.k, "Number of levels")->capture_default_str();
  common(wsk);

  CLI::App* gamma = app.add_subcommand("gamma", "Full Gamma pipeline; report on stdout, Gamma via --output");
  gamma->add_option("seed-file", o.input, "Seed presentation file")->required();
  gamma->add_option("word", o.word, "Word file over the seed generators")->required();
  gamma->add_option("--k", o.k, "Number of levels")->capture_default_str();
  gamma->add_option("--max-cosets", o.max_cosets, "Coset budget for the intermediate certificate")
      ->capture_default_str();
  gamma->add_option("--q", o.q, "Presentation Q (default: free group on a, b)");
  gamma->add_option("--r-prime", o.r_prime, "File with the words R', one per line");
  gamma->add_option("--a-bar", o.a_bar, "Lift of a in Q (default: a)");
  gamma->add_option("--b-bar", o.b_bar, "Lift of b in Q (default: b)");
  rips_flags(gamma);
  common(gamma);

  CLI::App* tilde = app.add_subcommand("tilde", "w(x_1..x_r) w(x_{r+1}..x_{2r})^-1");
  tilde->add_option("word", o.word, "Word file in x1..xr")->required();
  tilde->add_option("--r", o.r, "Rank r")->capture_default_str();
  common(tilde);

  CLI::App* fiber = app.add_subcommand("fiber", "Fiber gadget G_w (or Delta_w with --delta)");
  fiber->add_option("input", o.input, "Fiber input file")->required();
  fiber->add_option("word", o.word, "Word file in x1..xr")->required();
  fiber->add_flag("--delta", o.delta, "Apply the Rips construction to G_w");
  rips_flags(fiber);
  common(fiber);

  CLI::App* vsc = app.add_subcommand("verify-sc", "Check the C'(lambda) condition");
  vsc->add_option("input", o.input, "Presentation file")->required();
  vsc->add_option("--lambda", o.lambda, "Threshold p/q")->capture_default_str();
  vsc->add_option("--piece-budget,--budget", o.piece_budget, "Symmetrized syllable budget")
      ->capture_default_str();
  common(vsc);

  CLI::App* ab = app.add_subcommand("abelianize", "Abelianization via Smith normal form");
  ab->add_option("input", o.input, "Presentation file")->required();
  common(ab);

  CLI::App* dehn = app.add_subcommand("dehn", "Dehn's algorithm on a C'(1/6) presentation");
  dehn->add_option("input", o.input, "Presentation file")->required();
  dehn->add_option("word", o.word, "Word file")->required();
  dehn->add_option("--piece-budget,--budget", o.piece_budget, "Symmetrized syllable budget")
      ->capture_default_str();
  common(dehn);

  CLI::App* coset = app.add_subcommand("coset", "Coset enumeration");
  coset->add_option("input", o.input, "Presentation file")->required();
  coset->add_option("--subgroup", o.subgroup, "File with subgroup generators, one per line");
  coset->add_option("--max-cosets,--budget", o.max_cosets, "Total cosets that may be defined")
      ->capture_default_str();
  common(coset);

  CLI::App* qs = app.add_subcommand("quotient-search", "Search symmetric groups for a nontrivial quotient");
  qs->add_option("input", o.input, "Presentation file")->required();
  qs->add_option("--quotient-degree", o.quotient_degree, "Largest degree tried (at most 6)")
      ->capture_default_str();
  common(qs);

  CLI::App* cm = app.add_subcommand("closure-member", "Is the word in the normal closure of the relators?");
  cm->add_option("input", o.input, "Presentation file")->required();
  cm->add_option("word", o.word, "Word file")->required();
  cm->add_option("--max-cosets,--budget", o.max_cosets, "Coset budget per enumeration")->capture_default_str();
  common(cm);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (rips->parsed()) return run_rips(o);
    if (theta->parsed()) return run_theta(o);
    if (miller->parsed()) return run_miller(o);
    if (wsk->parsed()) return run_wsk(o);
    if (gamma->parsed()) return run_gamma(o);
    if (tilde->parsed()) return run_tilde(o);
    if (fiber->parsed()) return run_fiber(o);
    if (vsc->parsed()) return run_verify_sc(o);
    if (ab->parsed()) return run_abelianize(o);
    if (dehn->parsed()) return run_dehn(o);
    if (coset->parsed()) return run_coset(o);
    if (qs->parsed()) return run_quotient(o);
    if (cm->parsed()) return run_closure(o);
  } catch (const Failure& f) {
    return f.code;
  }
  return kExitUsage;
}
