#include "ripskit/semidecide.hpp"
#include "ripskit/smallcancel.hpp"

namespace ripskit {

MembershipResult normal_closure_member(const Word& w, const Presentation& p, std::uint64_t max_cosets) {
  for (const Generator& g : w.generators())
    if (!p.index_of(g.name())) throw InvalidArgument("word uses '" + g.name() + "', which is not a generator");
  MembershipResult res;
  res.max_cosets = max_cosets;
  if (w.empty()) {
    res.answer = Membership::Yes;
    res.method = "free-reduction";
    return res;
  }

  std::optional<DehnSolver> dehn;
  try {
    dehn.emplace(p);
  } catch (const NotCertified&) {
  } catch (const InvalidArgument&) {
  } catch (const BudgetExceeded&) {
  }
  if (dehn) {
    res.answer = dehn->is_trivial(w) ? Membership::Yes : Membership::No;
    res.method = "dehn";
    return res;
  }

  res.method = "coset-index";
  CosetResult without = coset_enumerate(p, {}, max_cosets);
  if (without.finite) res.index_without = without.index;
  std::vector<Word> rels = p.relators();
  rels.push_back(w);
  CosetResult with = coset_enumerate(Presentation(p.generators(), std::move(rels)), {}, max_cosets);
  if (with.finite) res.index_with = with.index;
  if (res.index_with && res.index_without)
    res.answer = *res.index_with == *res.index_without ? Membership::Yes : Membership::No;
  else
    res.method = "none";
  return res;
}

std::string MembershipResult::serialize() const {
  std::string out = "answer: ";
  switch (answer) {
    case Membership::Yes:
      out += "yes";
      break;
    case Membership::No:
      out += "no";
      break;
    case Membership::Inconclusive:
      out += "inconclusive";
      break;
  }
  out += "\nmethod: " + method + "\n";
  out += "max-cosets: " + std::to_string(max_cosets) + "\n";
  if (index_without) out += "index-without-word: " + std::to_string(*index_without) + "\n";
  if (index_with) out += "index-with-word: " + std::to_string(*index_with) + "\n";
  return out;
}

}  // namespace ripskit
