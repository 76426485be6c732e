#include "essv/constructions.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <unordered_map>

#include "essv/bitset.hpp"
#include "essv/decide.hpp"
#include "essv/error.hpp"
#include "essv/identity.hpp"
#include "essv/stamp.hpp"

namespace essv {

namespace {

family::Monomial as_family(const RMonomial& m) { return family::Monomial{m.sets, m.letters, m.mode}; }

Word cat(Word a, const Word& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

Word reversed_word(Word w) {
  std::reverse(w.begin(), w.end());
  return w;
}

void verify_quotient(const Dfa& l, const Dfa& k, const Word& x, const Word& y, const char* what) {
  if (!equivalent(word_quotient(k, x, y), l))
    throw ConsistencyError(std::string(what) + ": x^-1 K y^-1 differs from L");
}

void require_mode(const std::vector<RMonomial>& monomials, MonomialNormal mode, const Alphabet& alphabet) {
  for (const auto& m : monomials) {
    if (!(m.alphabet == alphabet)) throw InputError("monomial over a different alphabet");
    if (m.mode != mode)
      throw InputError(mode == MonomialNormal::R ? "r_witness needs R-mode monomials"
                                                 : "l_witness needs L-mode monomials");
    m.validate();
  }
}

}  // namespace

void RMonomial::validate() const {
  if (mode == MonomialNormal::None) throw InputError("monomial mode must be R or L");
  (void)build_family(alphabet, as_family(*this));
}

Dfa RMonomial::language() const { return build_family(alphabet, as_family(*this)); }

RMonomial RMonomial::reversed() const {
  RMonomial out;
  out.alphabet = alphabet;
  out.sets.assign(sets.rbegin(), sets.rend());
  out.letters.assign(letters.rbegin(), letters.rend());
  out.mode = mode == MonomialNormal::R ? MonomialNormal::L
             : mode == MonomialNormal::L ? MonomialNormal::R
                                         : MonomialNormal::None;
  return out;
}

Dfa monomial_union(const Alphabet& alphabet, const std::vector<RMonomial>& monomials) {
  Dfa out = empty_language(alphabet);
  for (const auto& m : monomials) out = bool_op(BoolOp::Union, out, m.language());
  return out;
}

Dfa r_witness(const Alphabet& alphabet, const std::vector<RMonomial>& monomials, const Word& x,
              const Word& y) {
  require_mode(monomials, MonomialNormal::R, alphabet);
  Dfa k_lang = empty_language(alphabet);
  for (const auto& m : monomials) {
    const LetterSet& last = m.sets.back();
    std::size_t zlen = 0;
    while (zlen < y.size() && last[y[zlen]]) ++zlen;
    const Word t(y.begin() + static_cast<std::ptrdiff_t>(zlen), y.end());

    Dfa part = concat_words(x, m.language(), t);
    // Prefix A0* a1 ... a_k, or ε when k = 0.
    Dfa head = universal_language(alphabet);
    if (m.letters.empty()) {
      head = finite_language(alphabet, {Word{}});
    } else {
      std::vector<PatternToken> tokens{PatternToken::star_of(m.sets[0])};
      for (std::size_t i = 0; i < m.letters.size(); ++i) {
        tokens.push_back(PatternToken::of(m.letters[i]));
        if (i + 1 < m.letters.size()) tokens.push_back(PatternToken::star_of(m.sets[i + 1]));
      }
      head = pattern_language(alphabet, tokens);
    }
    std::vector<Letter> ak;
    for (Letter a = 0; a < alphabet.size(); ++a)
      if (last[a]) ak.push_back(a);
    // v ranges over A_k^{<|z|}, enumerated length by length.
    std::vector<Word> layer{Word{}};
    for (std::size_t len = 0; len < zlen; ++len) {
      for (const auto& v : layer) part = bool_op(BoolOp::Difference, part, concat_words(x, head, cat(v, t)));
      std::vector<Word> next;
      for (const auto& v : layer)
        for (auto a : ak) next.push_back(cat(v, Word{a}));
      layer = std::move(next);
    }
    k_lang = bool_op(BoolOp::Union, k_lang, part);
  }
  verify_quotient(monomial_union(alphabet, monomials), k_lang, x, y, "r_witness");
  return k_lang;
}

Dfa l_witness(const Alphabet& alphabet, const std::vector<RMonomial>& monomials, const Word& x,
              const Word& y) {
  require_mode(monomials, MonomialNormal::L, alphabet);
  std::vector<RMonomial> mirrored;
  for (const auto& m : monomials) mirrored.push_back(m.reversed());
  const Dfa k_lang = minimize(reverse(r_witness(alphabet, mirrored, reversed_word(y), reversed_word(x))));
  verify_quotient(monomial_union(alphabet, monomials), k_lang, x, y, "l_witness");
  return k_lang;
}

SubwordProfile::SubwordProfile(Alphabet alphabet, std::size_t k, std::size_t cap)
    : alphabet_(std::move(alphabet)), k_(k) {
  const std::size_t n = alphabet_.size();
  offset_.push_back(0);
  std::size_t layer = 1;
  for (std::size_t len = 0; len <= k_; ++len) {
    offset_.push_back(offset_.back() + layer);
    layer *= n;
  }
  const std::size_t bits = offset_.back();
  // value[i] / length[i] of the word with index i; used to extend by a letter.
  std::vector<std::size_t> value(bits), length(bits);
  for (std::size_t len = 0; len <= k_; ++len)
    for (std::size_t i = offset_[len]; i < offset_[len + 1]; ++i) {
      value[i] = i - offset_[len];
      length[i] = len;
    }

  std::unordered_map<DynBitset, State, DynBitsetHash> ids;
  DynBitset start(bits);
  start.set(0);
  ids.emplace(start, 0);
  profiles_.push_back(std::move(start));
  for (std::size_t q = 0; q < profiles_.size(); ++q) {
    for (Letter a = 0; a < n; ++a) {
      DynBitset next = profiles_[q];
      profiles_[q].for_each([&](std::size_t i) {
        if (length[i] < k_) next.set(offset_[length[i] + 1] + value[i] * n + a);
      });
      auto [it, inserted] = ids.try_emplace(next, static_cast<State>(profiles_.size()));
      if (inserted) {
        if (profiles_.size() >= cap)
          throw InputError("subword profile automaton exceeds the state cap of " + std::to_string(cap));
        profiles_.push_back(std::move(next));
      }
      delta_.push_back(it->second);
    }
  }
}

State SubwordProfile::state_of(const Word& w) const {
  State q = initial();
  for (auto a : w) {
    if (a >= alphabet_.size()) throw InputError("letter outside the alphabet");
    q = next(q, a);
  }
  return q;
}

std::size_t SubwordProfile::index_of(const Word& u) const {
  std::size_t v = 0;
  for (auto a : u) v = v * alphabet_.size() + a;
  return offset_[u.size()] + v;
}

bool SubwordProfile::contains(State q, const Word& u) const {
  if (u.size() > k_) throw InputError("subword longer than the profile level");
  return profiles_.at(q).test(index_of(u));
}

std::vector<Word> SubwordProfile::subwords(State q) const {
  std::vector<Word> out;
  const std::size_t n = alphabet_.size();
  profiles_.at(q).for_each([&](std::size_t i) {
    std::size_t len = 0;
    while (offset_[len + 1] <= i) ++len;
    std::size_t v = i - offset_[len];
    Word w(len);
    for (std::size_t j = len; j > 0; --j) {
      w[j - 1] = static_cast<Letter>(v % n);
      v /= n;
    }
    out.push_back(std::move(w));
  });
  return out;
}

Dfa SubwordProfile::as_dfa(const std::vector<bool>& finals) const {
  if (finals.size() != state_count()) throw InputError("one accepting flag per profile state expected");
  return Dfa(alphabet_, state_count(), initial(), finals, delta_);
}

SubwordProfile simon_profile(const Alphabet& alphabet, std::size_t k, std::size_t cap) {
  return SubwordProfile(alphabet, k, cap);
}

namespace {

// Reachable pairs (profile state, dfa state) of the synchronous product.
template <class F>
void for_each_product_pair(const SubwordProfile& p, const Dfa& d, F&& f) {
  const std::size_t n = d.state_count();
  const std::size_t sigma = d.alphabet().size();
  std::vector<bool> seen(p.state_count() * n, false);
  std::deque<std::pair<State, State>> queue{{p.initial(), d.initial()}};
  seen[static_cast<std::size_t>(p.initial()) * n + d.initial()] = true;
  while (!queue.empty()) {
    auto [q, s] = queue.front();
    queue.pop_front();
    f(q, s);
    for (Letter a = 0; a < sigma; ++a) {
      const State q2 = p.next(q, a);
      const State s2 = d.next(s, a);
      const std::size_t key = static_cast<std::size_t>(q2) * n + s2;
      if (!seen[key]) {
        seen[key] = true;
        queue.emplace_back(q2, s2);
      }
    }
  }
}

}  // namespace

bool is_union_of_simon_classes(const Dfa& d, std::size_t k, std::size_t cap) {
  const Dfa m = minimize(d);
  const SubwordProfile p(m.alphabet(), k, cap);
  std::vector<int> verdict(p.state_count(), -1);
  bool ok = true;
  for_each_product_pair(p, m, [&](State q, State s) {
    const int here = m.is_final(s) ? 1 : 0;
    if (verdict[q] == -1)
      verdict[q] = here;
    else if (verdict[q] != here)
      ok = false;
  });
  return ok;
}

Dfa j_witness(const Dfa& l, std::size_t k, const Word& x, const Word& y, std::size_t cap) {
  if (!is_union_of_simon_classes(l, k, cap))
    throw InputError("not piecewise-testable at level " + std::to_string(k));
  const SubwordProfile p(l.alphabet(), x.size() + y.size() + k, cap);
  const Dfa xly = minimize(concat_words(x, l, y));
  std::vector<bool> finals(p.state_count(), false);
  for_each_product_pair(p, xly, [&](State q, State s) {
    if (xly.is_final(s)) finals[q] = true;
  });
  const Dfa k_lang = minimize(p.as_dfa(finals));
  verify_quotient(minimize(l), k_lang, x, y, "j_witness");
  return k_lang;
}

Dfa group_witness(const Dfa& l, const Word& x, const Word& y) {
  const Stamp eta = syntactic_stamp(l);
  const Monoid& m = eta.monoid();
  if (!m.is_group()) throw InputError("syntactic monoid of L is not a group");
  const Element ex = eval_word(eta, x);
  const Element ey = eval_word(eta, y);
  std::vector<bool> in(m.size(), false);
  for (auto f : *eta.accepting()) in[m.mul(m.mul(ex, f), ey)] = true;
  ElementSet target;
  for (Element e = 0; e < m.size(); ++e)
    if (in[e]) target.push_back(e);
  const Dfa k_lang = minimize(language_of(eta, target));
  verify_quotient(minimize(l), k_lang, x, y, "group_witness");
  return k_lang;
}

J1Report j1_counterexample_report(std::size_t max_k, std::size_t max_l) {
  J1Report r;
  r.alphabet = Alphabet::of("ab");
  const Letter a = 0, b = 1;
  const Dfa contains_a = build_family(r.alphabet, family::Subword{Word{a}});
  const Dfa contains_b = build_family(r.alphabet, family::Subword{Word{b}});
  r.language = contains_b;
  r.x = Word{b};
  r.y = Word{};

  // The atoms of the Boolean algebra generated by Σ*aΣ* and Σ*bΣ*.
  std::vector<Dfa> atoms;
  for (int cell = 0; cell < 4; ++cell) {
    const Dfa pa = (cell & 1) ? contains_a : complement(contains_a);
    const Dfa pb = (cell & 2) ? contains_b : complement(contains_b);
    atoms.push_back(bool_op(BoolOp::Intersection, pa, pb));
  }
  for (int mask = 0; mask < 16; ++mask) {
    Dfa c = empty_language(r.alphabet);
    for (int cell = 0; cell < 4; ++cell)
      if (mask & (1 << cell)) c = bool_op(BoolOp::Union, c, atoms[cell]);
    if (std::find(r.candidates.begin(), r.candidates.end(), c) == r.candidates.end())
      r.candidates.push_back(std::move(c));
  }

  const Word wa{a};
  const Word wab{a, b};
  for (std::size_t k = 0; k <= max_k; ++k) {
    for (std::size_t l = 0; l <= max_l; ++l) {
      const CriterionCheck check = bounded_criterion_check(r.language, r.x, r.y, k, l, r.candidates);
      J1Report::Row row;
      row.k = k;
      row.l = l;
      row.u = Word(k, a);
      row.v = Word(l, a);
      if (check.found || !check.refuted_at || check.refuted_at->first != row.u ||
          check.refuted_at->second != row.v) {
        throw ConsistencyError("J1 check at k=" + std::to_string(k) + ", l=" + std::to_string(l) +
                               " did not refute at (a^k, a^l)");
      }
      row.a_in_quotient = r.language.accepts(cat(cat(row.u, wa), row.v));
      row.ab_in_quotient = r.language.accepts(cat(cat(row.u, wab), row.v));
      const Word xu = cat(r.x, row.u);
      const Word vy = cat(row.v, r.y);
      row.candidates_conflate = std::all_of(r.candidates.begin(), r.candidates.end(), [&](const Dfa& c) {
        return c.accepts(cat(cat(xu, wa), vy)) == c.accepts(cat(cat(xu, wab), vy));
      });
      if (row.a_in_quotient || !row.ab_in_quotient || !row.candidates_conflate)
        throw ConsistencyError("J1 distinguishing pair (a, ab) failed at k=" + std::to_string(k) +
                               ", l=" + std::to_string(l));
      r.rows.push_back(std::move(row));
    }
  }

  const Stamp s = syntactic_stamp(concat_words(r.x, r.language, r.y));
  const Basis j1 = builtin_basis("J1");
  const EssentialQuotient q = essential_quotient(s);
  r.quotient_stamp_size = q.quotient_stamp.monoid().size();
  r.bsbs_structural = is_essentially_v_structural(q, j1.identities);
  r.bsbs_equational = is_essentially_v_equational(s, j1.identities);
  if (!r.bsbs_structural || !r.bsbs_equational)
    throw ConsistencyError("bΣ*bΣ* was expected to be essentially-J1 by both procedures");
  return r;
}

std::string format_report(const J1Report& r) {
  std::ostringstream out;
  out << "L = Σ*bΣ*, x = " << r.alphabet.format(r.x) << ", y = " << r.alphabet.format(r.y) << "\n";
  out << "candidates (Boolean combinations of Σ*aΣ* and Σ*bΣ*): " << r.candidates.size() << "\n";
  for (const auto& row : r.rows) {
    out << "k=" << row.k << " l=" << row.l << ": refuted at (u, v) = (" << r.alphabet.format(row.u) << ", "
        << r.alphabet.format(row.v) << "); a " << (row.a_in_quotient ? "∈" : "∉") << " u^-1 L v^-1, ab "
        << (row.ab_in_quotient ? "∈" : "∉") << " u^-1 L v^-1; every candidate "
        << (row.candidates_conflate ? "conflates" : "separates") << " a and ab\n";
  }
  out << "bΣ*bΣ* essentially-J1: structural=" << (r.bsbs_structural ? "true" : "false")
      << " equational=" << (r.bsbs_equational ? "true" : "false") << " (quotient size "
      << r.quotient_stamp_size << ")\n";
  return out.str();
}

}  // namespace essv
