#include "essv/dfa.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_map>

#include "essv/bitset.hpp"
#include "essv/error.hpp"

namespace essv {

Alphabet::Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
  std::set<std::string> seen;
  for (const auto& s : symbols_) {
    if (s.empty()) throw InputError("alphabet symbols must be nonempty");
    if (!seen.insert(s).second) throw InputError("duplicate alphabet symbol '" + s + "'");
  }
}

Alphabet Alphabet::of(std::string_view chars) {
  std::vector<std::string> symbols;
  for (char c : chars) symbols.emplace_back(1, c);
  return Alphabet(std::move(symbols));
}

std::optional<Letter> Alphabet::find(std::string_view symbol) const noexcept {
  for (std::size_t i = 0; i < symbols_.size(); ++i)
    if (symbols_[i] == symbol) return static_cast<Letter>(i);
  return std::nullopt;
}

Letter Alphabet::letter(std::string_view symbol) const {
  if (auto a = find(symbol)) return *a;
  throw InputError("unknown symbol '" + std::string(symbol) + "'");
}

bool Alphabet::single_char() const noexcept {
  return std::all_of(symbols_.begin(), symbols_.end(), [](const auto& s) { return s.size() == 1; });
}

Word Alphabet::parse(std::string_view text) const {
  if (text.empty() || text == "ε" || text == "eps") return {};
  Word w;
  if (single_char()) {
    for (char c : text) {
      if (c == ' ' || c == '.') continue;
      w.push_back(letter(std::string_view(&c, 1)));
    }
    return w;
  }
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (text[i] == ' ' || text[i] == '.')) ++i;
    std::size_t j = i;
    while (j < text.size() && text[j] != ' ' && text[j] != '.') ++j;
    if (j > i) w.push_back(letter(text.substr(i, j - i)));
    i = j;
  }
  return w;
}

std::string Alphabet::format(const Word& w) const {
  if (w.empty()) return "ε";
  std::string out;
  const bool single = single_char();
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!single && i > 0) out += '.';
    out += symbol(w[i]);
  }
  return out;
}

Dfa::Dfa(Alphabet alphabet, std::size_t states, State initial, std::vector<bool> finals,
         std::vector<State> delta)
    : alphabet_(std::move(alphabet)),
      states_(states),
      initial_(initial),
      finals_(std::move(finals)),
      delta_(std::move(delta)) {
  if (states_ == 0) throw InputError("a DFA needs at least one state");
  if (initial_ >= states_) throw InputError("initial state out of range");
  if (finals_.size() != states_) throw InputError("final mask size does not match state count");
  if (delta_.size() != states_ * alphabet_.size()) throw InputError("transition table has wrong size");
  for (auto t : delta_)
    if (t >= states_) throw InputError("transition target out of range");
}

std::vector<State> Dfa::finals() const {
  std::vector<State> out;
  for (State q = 0; q < states_; ++q)
    if (finals_[q]) out.push_back(q);
  return out;
}

State Dfa::run(State q, const Word& w) const noexcept {
  for (auto a : w) q = next(q, a);
  return q;
}

Dfa universal_language(const Alphabet& alphabet) {
  return Dfa(alphabet, 1, 0, {true}, std::vector<State>(alphabet.size(), 0));
}

Dfa empty_language(const Alphabet& alphabet) {
  return Dfa(alphabet, 1, 0, {false}, std::vector<State>(alphabet.size(), 0));
}

namespace {

void require_same_alphabet(const Dfa& a, const Dfa& b) {
  if (!(a.alphabet() == b.alphabet())) throw InputError("alphabet mismatch between automata");
}

}  // namespace

Dfa minimize(const Dfa& d) {
  const std::size_t k = d.alphabet().size();

  // Reachable states in BFS order.
  std::vector<State> order;
  std::vector<std::int64_t> index(d.state_count(), -1);
  order.push_back(d.initial());
  index[d.initial()] = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (Letter a = 0; a < k; ++a) {
      const State t = d.next(order[i], a);
      if (index[t] < 0) {
        index[t] = static_cast<std::int64_t>(order.size());
        order.push_back(t);
      }
    }
  }
  const std::size_t n = order.size();

  // Moore refinement on the reachable part.
  std::vector<std::uint32_t> cls(n);
  for (std::size_t i = 0; i < n; ++i) cls[i] = d.is_final(order[i]) ? 1 : 0;
  std::size_t count = 0;
  {
    bool any_final = false, any_other = false;
    for (std::size_t i = 0; i < n; ++i) (cls[i] ? any_final : any_other) = true;
    count = static_cast<std::size_t>(any_final) + static_cast<std::size_t>(any_other);
  }
  while (true) {
    std::unordered_map<std::vector<std::uint32_t>, std::uint32_t, VectorHash> ids;
    std::vector<std::uint32_t> next_cls(n);
    std::vector<std::uint32_t> sig(k + 1);
    for (std::size_t i = 0; i < n; ++i) {
      sig[0] = cls[i];
      for (Letter a = 0; a < k; ++a) sig[a + 1] = cls[static_cast<std::size_t>(index[d.next(order[i], a)])];
      auto [it, inserted] = ids.try_emplace(sig, static_cast<std::uint32_t>(ids.size()));
      next_cls[i] = it->second;
    }
    cls = std::move(next_cls);
    if (ids.size() == count) break;
    count = ids.size();
  }

  // Canonical numbering: BFS over classes from the initial class.
  std::vector<std::int64_t> canon(count, -1);
  std::vector<std::size_t> rep(count, 0);
  for (std::size_t i = n; i-- > 0;) rep[cls[i]] = i;
  std::vector<std::uint32_t> queue{cls[0]};
  canon[cls[0]] = 0;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const std::size_t r = rep[queue[i]];
    for (Letter a = 0; a < k; ++a) {
      const auto c = cls[static_cast<std::size_t>(index[d.next(order[r], a)])];
      if (canon[c] < 0) {
        canon[c] = static_cast<std::int64_t>(queue.size());
        queue.push_back(c);
      }
    }
  }
  std::vector<bool> finals(count);
  std::vector<State> delta(count * k);
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const std::size_t r = rep[queue[i]];
    finals[i] = d.is_final(order[r]);
    for (Letter a = 0; a < k; ++a) {
      const auto c = cls[static_cast<std::size_t>(index[d.next(order[r], a)])];
      delta[i * k + a] = static_cast<State>(canon[c]);
    }
  }
  return Dfa(d.alphabet(), count, 0, std::move(finals), std::move(delta));
}

Dfa bool_op(BoolOp op, const Dfa& left, const Dfa& right) {
  require_same_alphabet(left, right);
  const std::size_t k = left.alphabet().size();
  const std::size_t rn = right.state_count();
  std::unordered_map<std::size_t, State> ids;
  std::vector<std::pair<State, State>> pairs;
  auto id_of = [&](State p, State q) {
    auto [it, inserted] = ids.try_emplace(p * rn + q, static_cast<State>(pairs.size()));
    if (inserted) pairs.emplace_back(p, q);
    return it->second;
  };
  id_of(left.initial(), right.initial());
  std::vector<State> delta;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    for (Letter a = 0; a < k; ++a) {
      const auto [p, q] = pairs[i];
      delta.push_back(id_of(left.next(p, a), right.next(q, a)));
    }
  }
  std::vector<bool> finals(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const bool l = left.is_final(pairs[i].first);
    const bool r = right.is_final(pairs[i].second);
    switch (op) {
      case BoolOp::Union: finals[i] = l || r; break;
      case BoolOp::Intersection: finals[i] = l && r; break;
      case BoolOp::Difference: finals[i] = l && !r; break;
      case BoolOp::SymmetricDifference: finals[i] = l != r; break;
    }
  }
  return minimize(Dfa(left.alphabet(), pairs.size(), 0, std::move(finals), std::move(delta)));
}

Dfa complement(const Dfa& d) {
  auto finals = d.final_mask();
  finals.flip();
  return minimize(Dfa(d.alphabet(), d.state_count(), d.initial(), std::move(finals), d.delta()));
}

Dfa word_quotient(const Dfa& d, const Word& u, const Word& v) {
  std::vector<bool> finals(d.state_count());
  for (State q = 0; q < d.state_count(); ++q) finals[q] = d.is_final(d.run(q, v));
  return minimize(Dfa(d.alphabet(), d.state_count(), d.run(d.initial(), u), std::move(finals), d.delta()));
}

Dfa concat_words(const Word& x, const Dfa& d, const Word& y) {
  const std::size_t k = d.alphabet().size();
  for (auto a : x)
    if (a >= k) throw InputError("prefix word uses a letter outside the alphabet");
  for (auto a : y)
    if (a >= k) throw InputError("suffix word uses a letter outside the alphabet");

  // Phase 1: states 0..|x| read x, then a dead state. Phase 2: the DFA
  // state reached on the letters read after x, lagging |y| letters behind;
  // the lagging letters are buffered. Accept iff the buffer equals y and
  // the lagging state is final.
  struct Node {
    int phase;  // 0: reading x, 1: dead, 2: main
    std::size_t pos;
    State q;
    Word buffer;
    bool operator==(const Node&) const = default;
  };
  struct NodeHash {
    std::size_t operator()(const Node& n) const noexcept {
      std::size_t h = static_cast<std::size_t>(n.phase) * 1000003 + n.pos * 7919 + n.q;
      for (auto a : n.buffer) h = h * 31 + a + 1;
      return h;
    }
  };
  std::unordered_map<Node, State, NodeHash> ids;
  std::vector<Node> nodes;
  auto id_of = [&](Node n) {
    auto [it, inserted] = ids.try_emplace(n, static_cast<State>(nodes.size()));
    if (inserted) nodes.push_back(std::move(n));
    return it->second;
  };
  auto step = [&](const Node& n, Letter a) -> Node {
    switch (n.phase) {
      case 0:
        if (n.pos < x.size()) {
          if (x[n.pos] != a) return Node{1, 0, 0, {}};
          if (n.pos + 1 < x.size()) return Node{0, n.pos + 1, 0, {}};
          return Node{2, 0, d.initial(), {}};
        }
        break;
      case 1:
        return n;
      default:
        break;
    }
    Node m = n;
    m.buffer.push_back(a);
    if (m.buffer.size() > y.size()) {
      m.q = d.next(m.q, m.buffer.front());
      m.buffer.erase(m.buffer.begin());
    }
    return m;
  };
  id_of(x.empty() ? Node{2, 0, d.initial(), {}} : Node{0, 0, 0, {}});
  std::vector<State> delta;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (Letter a = 0; a < k; ++a) {
      const Node n = nodes[i];
      delta.push_back(id_of(step(n, a)));
    }
  }
  std::vector<bool> finals(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i)
    finals[i] = nodes[i].phase == 2 && nodes[i].buffer == y && d.is_final(nodes[i].q);
  return minimize(Dfa(d.alphabet(), nodes.size(), 0, std::move(finals), std::move(delta)));
}

Dfa reverse(const Dfa& d) {
  const std::size_t k = d.alphabet().size();
  const std::size_t n = d.state_count();
  std::vector<std::vector<std::vector<State>>> pred(k, std::vector<std::vector<State>>(n));
  for (State q = 0; q < n; ++q)
    for (Letter a = 0; a < k; ++a) pred[a][d.next(q, a)].push_back(q);

  std::unordered_map<DynBitset, State, DynBitsetHash> ids;
  std::vector<DynBitset> subsets;
  auto id_of = [&](DynBitset s) {
    auto [it, inserted] = ids.try_emplace(s, static_cast<State>(subsets.size()));
    if (inserted) subsets.push_back(std::move(s));
    return it->second;
  };
  DynBitset start(n);
  for (State q = 0; q < n; ++q)
    if (d.is_final(q)) start.set(q);
  id_of(std::move(start));
  std::vector<State> delta;
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    for (Letter a = 0; a < k; ++a) {
      DynBitset next(n);
      subsets[i].for_each([&](std::size_t q) {
        for (auto p : pred[a][q]) next.set(p);
      });
      delta.push_back(id_of(std::move(next)));
    }
  }
  std::vector<bool> finals(subsets.size());
  for (std::size_t i = 0; i < subsets.size(); ++i) finals[i] = subsets[i].test(d.initial());
  return minimize(Dfa(d.alphabet(), subsets.size(), 0, std::move(finals), std::move(delta)));
}

bool is_empty(const Dfa& d) {
  const Dfa m = minimize(d);
  return m.state_count() == 1 && !m.is_final(0);
}

bool equivalent(const Dfa& a, const Dfa& b) {
  require_same_alphabet(a, b);
  return minimize(a) == minimize(b);
}

std::optional<Word> distinguishing_word(const Dfa& a, const Dfa& b) {
  require_same_alphabet(a, b);
  const std::size_t k = a.alphabet().size();
  const std::size_t bn = b.state_count();
  std::unordered_map<std::size_t, std::pair<std::size_t, Letter>> parent;
  std::deque<std::pair<State, State>> queue{{a.initial(), b.initial()}};
  const std::size_t root = a.initial() * bn + b.initial();
  parent[root] = {root, 0};
  while (!queue.empty()) {
    const auto [p, q] = queue.front();
    queue.pop_front();
    const std::size_t key = p * bn + q;
    if (a.is_final(p) != b.is_final(q)) {
      Word w;
      for (std::size_t cur = key; cur != root;) {
        const auto [prev, letter] = parent[cur];
        w.push_back(letter);
        cur = prev;
      }
      std::reverse(w.begin(), w.end());
      return w;
    }
    for (Letter c = 0; c < k; ++c) {
      const State np = a.next(p, c), nq = b.next(q, c);
      const std::size_t nk = np * bn + nq;
      if (!parent.contains(nk)) {
        parent[nk] = {key, c};
        queue.emplace_back(np, nq);
      }
    }
  }
  return std::nullopt;
}

NeMorphism::NeMorphism(Alphabet source, Alphabet target, std::vector<Word> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  if (images_.size() != source_.size())
    throw InputError("a morphism needs exactly one image per source letter");
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i].empty())
      throw InputError("image of '" + source_.symbol(static_cast<Letter>(i)) + "' is empty (morphism must be non-erasing)");
    for (auto c : images_[i])
      if (c >= target_.size()) throw InputError("image uses a letter outside the target alphabet");
  }
}

NeMorphism NeMorphism::identity(const Alphabet& alphabet) {
  std::vector<Word> images;
  for (Letter a = 0; a < alphabet.size(); ++a) images.push_back({a});
  return NeMorphism(alphabet, alphabet, std::move(images));
}

Word NeMorphism::apply(const Word& w) const {
  Word out;
  for (auto a : w) out.insert(out.end(), images_.at(a).begin(), images_.at(a).end());
  return out;
}

Dfa ne_preimage(const NeMorphism& f, const Dfa& d) {
  if (!(f.target() == d.alphabet())) throw InputError("morphism target alphabet differs from the DFA's");
  const std::size_t k = f.source().size();
  std::vector<State> delta(d.state_count() * k);
  for (State q = 0; q < d.state_count(); ++q)
    for (Letter a = 0; a < k; ++a) delta[q * k + a] = d.run(q, f.image(a));
  return minimize(Dfa(f.source(), d.state_count(), d.initial(), d.final_mask(), std::move(delta)));
}

}  // namespace essv
