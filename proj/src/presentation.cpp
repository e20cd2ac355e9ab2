#include "ripskit/presentation.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "text_util.hpp"

namespace ripskit {

Presentation::Presentation(std::vector<Generator> generators, std::vector<Word> relators)
    : gens_(std::move(generators)), rels_(std::move(relators)) {
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (!index_.emplace(gens_[i].name(), i).second)
      throw InvalidArgument("duplicate generator '" + gens_[i].name() + "'");
  }
  for (std::size_t r = 0; r < rels_.size(); ++r) {
    for (const Generator& g : rels_[r].generators()) {
      if (!index_.contains(g.name()))
        throw InvalidArgument("relator " + std::to_string(r + 1) +
                              " uses undeclared generator '" + g.name() + "'");
    }
  }
}

std::optional<std::size_t> Presentation::index_of(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Presentation Presentation::parse(std::string_view text) {
  std::vector<Generator> gens;
  std::vector<Word> rels;
  std::set<std::string> declared;
  bool have_gens = false;
  for (const auto& [lineno, line] : text_util::content_lines(text)) {
    auto where = [&] { return "line " + std::to_string(lineno) + ": "; };
    if (!have_gens) {
      auto rest = text_util::strip_prefix(line, "gens:");
      if (!rest) throw ParseError(where() + "expected 'gens:'");
      for (std::string_view name : text_util::split_ws(*rest)) {
        if (!is_valid_generator_name(name))
          throw ParseError(where() + "invalid generator name '" + std::string(name) + "'");
        if (!declared.insert(std::string(name)).second)
          throw ParseError(where() + "duplicate generator '" + std::string(name) + "'");
        gens.emplace_back(std::string(name));
      }
      have_gens = true;
      continue;
    }
    auto rest = text_util::strip_prefix(line, "rel:");
    if (!rest) throw ParseError(where() + "expected 'rel:'");
    Word w;
    try {
      w = Word::parse(*rest);
    } catch (const ParseError& e) {
      throw ParseError(where() + e.what());
    }
    for (const Generator& g : w.generators())
      if (!declared.contains(g.name()))
        throw ParseError(where() + "undeclared generator '" + g.name() + "'");
    rels.push_back(std::move(w));
  }
  if (!have_gens) throw ParseError("missing 'gens:' line");
  return Presentation(std::move(gens), std::move(rels));
}

std::string Presentation::serialize() const {
  std::string out = "gens:";
  for (const Generator& g : gens_) {
    out += ' ';
    out += g.name();
  }
  out += '\n';
  for (const Word& r : rels_) {
    out += "rel: ";
    out += r.to_string();
    out += '\n';
  }
  return out;
}

Word parse_word_file(std::string_view text) {
  auto lines = text_util::content_lines(text);
  if (lines.size() != 1) throw ParseError("word file must contain exactly one word");
  return Word::parse(lines[0].second);
}

std::vector<Word> parse_word_list(std::string_view text) {
  std::vector<Word> out;
  for (const auto& [lineno, line] : text_util::content_lines(text)) {
    try {
      out.push_back(Word::parse(line));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

// ----------------------------------------------------------------- letters

Letters to_letters(const Presentation& p, const Word& w, std::uint64_t max_letters) {
  BigInt len = w.letter_length();
  if (len > max_letters)
    throw BudgetExceeded("word of " + len.str() + " letters exceeds the budget of " +
                         std::to_string(max_letters) + " letters");
  Letters out;
  out.reserve(static_cast<std::size_t>(len));
  w.for_each_syllable([&](const Syllable& s) {
    auto idx = p.index_of(s.gen.name());
    if (!idx) throw InvalidArgument("generator '" + s.gen.name() + "' not in the alphabet");
    std::uint32_t code = static_cast<std::uint32_t>(2 * *idx) + (s.exp < 0 ? 1U : 0U);
    auto n = static_cast<std::uint64_t>(abs(s.exp));
    out.insert(out.end(), n, code);
    return true;
  });
  return out;
}

Word from_letters(const Presentation& p, std::span<const std::uint32_t> letters) {
  WordBuilder b;
  for (std::uint32_t l : letters) b.push(p.generators()[l / 2], (l & 1U) ? -1 : 1);
  return std::move(b).finish();
}

Letters reduce_letters(std::span<const std::uint32_t> letters) {
  Letters out;
  out.reserve(letters.size());
  for (std::uint32_t l : letters) {
    if (!out.empty() && out.back() == inverse_letter(l))
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

Letters cyclically_reduce_letters(std::span<const std::uint32_t> letters) {
  Letters w = reduce_letters(letters);
  std::size_t lo = 0, hi = w.size();
  while (hi - lo >= 2 && w[lo] == inverse_letter(w[hi - 1])) {
    ++lo;
    --hi;
  }
  return Letters(w.begin() + static_cast<std::ptrdiff_t>(lo),
                 w.begin() + static_cast<std::ptrdiff_t>(hi));
}

Symmetrized symmetrize(const Presentation& p, std::uint64_t max_letters) {
  Symmetrized out;
  std::set<Letters> seen;
  BigInt total = 0;
  for (const Word& r : p.relators()) {
    CyclicReduction cr = cyclic_reduce(r);
    BigInt len = cr.core.letter_length();
    total += 2 * len * len;
    if (total > max_letters)
      throw BudgetExceeded("symmetrized set exceeds the budget of " +
                           std::to_string(max_letters) + " letters");
    Letters core = to_letters(p, cr.core, max_letters);
    out.reductions.push_back(std::move(cr));
    if (core.empty()) continue;
    Letters inv(core.rbegin(), core.rend());
    for (auto& l : inv) l = inverse_letter(l);
    for (const Letters* orient : {&core, &inv}) {
      for (std::size_t k = 0; k < orient->size(); ++k) {
        Letters rot(orient->begin() + static_cast<std::ptrdiff_t>(k), orient->end());
        rot.insert(rot.end(), orient->begin(), orient->begin() + static_cast<std::ptrdiff_t>(k));
        if (seen.insert(rot).second) out.words.push_back(from_letters(p, rot));
      }
    }
  }
  return out;
}

// ---------------------------------------------------------- abelianization

IntMatrix exponent_sum_matrix(const Presentation& p) {
  IntMatrix m(p.relators().size(), p.generators().size());
  for (std::size_t r = 0; r < p.relators().size(); ++r)
    for (std::size_t c = 0; c < p.generators().size(); ++c)
      m(r, c) = p.relators()[r].exponent_sum(p.generators()[c]);
  return m;
}

AbelianizationResult abelianization(const Presentation& p) {
  std::vector<BigInt> divisors = smith_normal_form(exponent_sum_matrix(p));
  AbelianizationResult res;
  res.betti = p.generators().size() - divisors.size();
  for (const BigInt& d : divisors)
    if (d > 1) res.torsion.push_back(d);
  return res;
}

std::string AbelianizationResult::serialize() const {
  std::string out = "betti: " + std::to_string(betti) + "\ntorsion:";
  for (const BigInt& d : torsion) out += " " + d.str();
  out += '\n';
  return out;
}

AbelianizationResult AbelianizationResult::parse(std::string_view text) {
  auto lines = text_util::content_lines(text);
  if (lines.size() != 2) throw ParseError("abelianization report must have two lines");
  AbelianizationResult res;
  auto betti = text_util::strip_prefix(lines[0].second, "betti:");
  auto torsion = text_util::strip_prefix(lines[1].second, "torsion:");
  if (!betti || !torsion) throw ParseError("malformed abelianization report");
  res.betti = text_util::parse_size(text_util::trim(*betti));
  for (std::string_view d : text_util::split_ws(*torsion)) res.torsion.push_back(text_util::parse_bigint(d));
  return res;
}

// ------------------------------------------------------------ homomorphism

HomCheck check_hom(const Presentation& source, const GenMap& map,
                   std::span<const WordOracle* const> components) {
  if (components.size() != map.arity())
    throw InvalidArgument("map has arity " + std::to_string(map.arity()) + " but " +
                          std::to_string(components.size()) + " oracles were given");
  for (const Generator& g : source.generators())
    if (map.find(g) == nullptr) throw InvalidArgument("unassigned generator '" + g.name() + "'");
  bool inconclusive = false;
  for (const Word& r : source.relators()) {
    std::vector<Word> image = substitute(r, map);
    for (std::size_t c = 0; c < image.size(); ++c) {
      switch (components[c]->decide(image[c])) {
        case Triviality::Trivial:
          break;
        case Triviality::Nontrivial:
          return HomCheck::Fails;
        case Triviality::Inconclusive:
          inconclusive = true;
          break;
      }
    }
  }
  return inconclusive ? HomCheck::Inconclusive : HomCheck::Holds;
}

HomCheck check_hom(const Presentation& source, const GenMap& map, const WordOracle& target) {
  const WordOracle* one[] = {&target};
  return check_hom(source, map, one);
}

}  // namespace ripskit
