#include <set>

#include "ripskit/constructions.hpp"
#include "text_util.hpp"

namespace ripskit {

std::string x_name(std::size_t i) { return "x" + std::to_string(i); }

namespace {

std::string y_name(std::size_t l) { return "y" + std::to_string(l); }

Word letter(const std::string& name, int e = 1) { return Word::letter(Generator(name), e); }

void require_within(const Word& w, const std::set<std::string>& allowed, const std::string& what) {
  for (const Generator& g : w.generators())
    if (!allowed.contains(g.name()))
      throw InvalidArgument(what + " uses generator '" + g.name() + "' outside its alphabet");
}

std::set<std::string> y_alphabet(std::size_t k) {
  std::set<std::string> s;
  for (std::size_t l = 1; l <= k; ++l) s.insert(y_name(l));
  return s;
}

std::size_t b_index(std::size_t r, std::size_t k, std::size_t i, std::size_t l, int e) {
  if (i < 1 || i > 2 * r || l < 1 || l > k || (e != 1 && e != -1))
    throw InvalidArgument("B index out of range");
  return ((i - 1) * k + (l - 1)) * 2 + (e > 0 ? 0 : 1);
}

}  // namespace

Word tilde(const Word& w, std::size_t r) {
  GenMap same, shifted;
  for (std::size_t i = 1; i <= r; ++i) {
    same.assign(Generator(x_name(i)), letter(x_name(i)));
    shifted.assign(Generator(x_name(i)), letter(x_name(r + i)));
  }
  for (const Generator& g : w.generators())
    if (same.find(g) == nullptr)
      throw InvalidArgument("generator '" + g.name() + "' is not among x1..x" + std::to_string(r));
  return w * substitute(w, shifted)[0].inverse();
}

const Word& FiberInput::b_word(std::size_t i, std::size_t l, int e) const {
  return b.at(b_index(r, k, i, l, e));
}

Word& FiberInput::b_word(std::size_t i, std::size_t l, int e) { return b.at(b_index(r, k, i, l, e)); }

void FiberInput::validate() const {
  if (b.size() != 4 * r * k) throw InvalidArgument("B table must have 4rk entries");
  std::set<std::string> ys = y_alphabet(k);
  std::set<std::string> all = ys;
  for (std::size_t i = 1; i <= 2 * r; ++i) all.insert(x_name(i));
  for (const Word& w : a) require_within(w, ys, "an A word");
  for (const Word& w : b) require_within(w, ys, "a B word");
  for (const Word& w : v) require_within(w, all, "a V word");
}

FiberInput FiberInput::parse(std::string_view text) {
  FiberInput in;
  bool have_gens = false;
  std::vector<bool> seen;
  for (const auto& [lineno, line] : text_util::content_lines(text)) {
    const std::string where = "line " + std::to_string(lineno) + ": ";
    auto word_after = [&](std::string_view body) {
      try {
        return Word::parse(body);
      } catch (const ParseError& e) {
        throw ParseError(where + e.what());
      }
    };
    if (!have_gens) {
      auto rest = text_util::strip_prefix(line, "gens:");
      if (!rest) throw ParseError(where + "expected 'gens:'");
      auto names = text_util::split_ws(*rest);
      std::size_t nx = 0;
      while (nx < names.size() && names[nx] == x_name(nx + 1)) ++nx;
      for (std::size_t l = 1; nx + l - 1 < names.size(); ++l)
        if (names[nx + l - 1] != y_name(l))
          throw ParseError(where + "generators must be exactly x1..x2r followed by y1..yk");
      if (nx % 2 != 0) throw ParseError(where + "the number of x generators must be even");
      in.r = nx / 2;
      in.k = names.size() - nx;
      in.b.assign(4 * in.r * in.k, Word{});
      seen.assign(in.b.size(), false);
      have_gens = true;
      continue;
    }
    if (auto rest = text_util::strip_prefix(line, "A:")) {
      in.a.push_back(word_after(*rest));
    } else if (auto rest = text_util::strip_prefix(line, "V:")) {
      in.v.push_back(word_after(*rest));
    } else if (line.starts_with("B ")) {
      std::size_t colon = line.find(':');
      if (colon == std::string_view::npos) throw ParseError(where + "expected 'B i l e: word'");
      auto idx = text_util::split_ws(line.substr(1, colon - 1));
      if (idx.size() != 3) throw ParseError(where + "expected 'B i l e: word'");
      std::size_t i = text_util::parse_size(idx[0]), l = text_util::parse_size(idx[1]);
      BigInt e = text_util::parse_bigint(idx[2]);
      if (i < 1 || i > 2 * in.r || l < 1 || l > in.k || (e != 1 && e != -1))
        throw ParseError(where + "B index out of range");
      std::size_t pos = b_index(in.r, in.k, i, l, e > 0 ? 1 : -1);
      if (seen[pos]) throw ParseError(where + "duplicate B entry");
      seen[pos] = true;
      in.b[pos] = word_after(line.substr(colon + 1));
    } else {
      throw ParseError(where + "expected 'A:', 'B i l e:' or 'V:'");
    }
  }
  if (!have_gens) throw ParseError("missing 'gens:' line");
  for (std::size_t pos = 0; pos < seen.size(); ++pos)
    if (!seen[pos]) {
      std::size_t e = pos % 2, l = (pos / 2) % in.k + 1, i = pos / 2 / in.k + 1;
      throw ParseError("missing B entry " + std::to_string(i) + " " + std::to_string(l) +
                       (e == 0 ? " 1" : " -1"));
    }
  try {
    in.validate();
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
  return in;
}

std::string FiberInput::serialize() const {
  std::string out = "gens:";
  for (std::size_t i = 1; i <= 2 * r; ++i) out += " " + x_name(i);
  for (std::size_t l = 1; l <= k; ++l) out += " " + y_name(l);
  out += "\n";
  for (const Word& w : a) out += "A: " + w.to_string() + "\n";
  for (std::size_t i = 1; i <= 2 * r; ++i)
    for (std::size_t l = 1; l <= k; ++l)
      for (int e : {1, -1})
        out += "B " + std::to_string(i) + " " + std::to_string(l) + " " + std::to_string(e) + ": " +
               b_word(i, l, e).to_string() + "\n";
  for (const Word& w : v) out += "V: " + w.to_string() + "\n";
  return out;
}

std::size_t fiber_relator_count(const FiberInput& in) {
  return 1 + 2 * in.k + in.k * in.k + 8 * in.r * in.k + 2 * in.a.size() + in.v.size();
}

Presentation fiber_gadget(const FiberInput& in, const Word& w) {
  in.validate();
  const std::size_t r = in.r, k = in.k;
  const Word wt = tilde(w, r);
  const Generator t("t");
  const Word tw = Word::letter(t);
  auto side = [](std::size_t l, char s) { return y_name(l) + s; };

  std::vector<Generator> gens;
  for (std::size_t i = 1; i <= 2 * r; ++i) gens.emplace_back(x_name(i));
  for (char s : {'L', 'R'})
    for (std::size_t l = 1; l <= k; ++l) gens.emplace_back(side(l, s));
  gens.push_back(t);

  GenMap to_side[2];
  for (int c = 0; c < 2; ++c)
    for (std::size_t l = 1; l <= k; ++l)
      to_side[c].assign(Generator(y_name(l)), letter(side(l, c == 0 ? 'L' : 'R')));
  GenMap diagonal;
  for (std::size_t i = 1; i <= 2 * r; ++i) diagonal.assign(Generator(x_name(i)), letter(x_name(i)));
  for (std::size_t l = 1; l <= k; ++l)
    diagonal.assign(Generator(y_name(l)), letter(side(l, 'L')) * letter(side(l, 'R')));

  std::vector<Word> rels;
  const Word wtt = wt * tw;
  rels.push_back(commutator(wtt, tw));
  for (std::size_t l = 1; l <= k; ++l) rels.push_back(commutator(tw, letter(side(l, 'L'))));
  for (std::size_t l = 1; l <= k; ++l) rels.push_back(commutator(wtt, letter(side(l, 'R'))));
  for (std::size_t l = 1; l <= k; ++l)
    for (std::size_t m = 1; m <= k; ++m) rels.push_back(commutator(letter(side(l, 'R')), letter(side(m, 'L'))));
  for (int c = 0; c < 2; ++c) {
    const char s = c == 0 ? 'L' : 'R';
    for (std::size_t i = 1; i <= 2 * r; ++i)
      for (std::size_t l = 1; l <= k; ++l)
        for (int e : {1, -1})
          rels.push_back(letter(x_name(i), e) * letter(side(l, s)) * letter(x_name(i), -e) *
                         substitute(in.b_word(i, l, e), to_side[c])[0]);
  }
  for (const Word& a : in.a) {
    rels.push_back(substitute(a, to_side[0])[0]);
    rels.push_back(substitute(a, to_side[1])[0]);
  }
  for (const Word& v : in.v) rels.push_back(substitute(v, diagonal)[0]);
  return Presentation(std::move(gens), std::move(rels));
}

}  // namespace ripskit
