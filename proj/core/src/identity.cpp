#include "essv/identity.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

#include "essv/bitset.hpp"
#include "essv/error.hpp"

namespace essv {

const char* to_string(SatisfactionMode mode) noexcept {
  return mode == SatisfactionMode::All ? "all" : "ne";
}

namespace {

void collect_variables(const OmegaTerm& t, std::set<std::string>& out) {
  for (const auto& f : t) {
    if (f.kind == Factor::Kind::Var)
      out.insert(f.name);
    else
      collect_variables(f.body, out);
  }
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  IdentityStatement identity() {
    IdentityStatement id;
    id.lhs = term();
    skip_space();
    if (!consume('=')) fail("expected '='");
    id.rhs = term();
    skip_space();
    if (pos_ != text_.size()) {
      if (text_[pos_] == ')') fail("unbalanced parentheses");
      fail("unexpected character");
    }
    return id;
  }

  OmegaTerm whole_term() {
    OmegaTerm t = term();
    skip_space();
    if (pos_ != text_.size()) fail(text_[pos_] == ')' ? "unbalanced parentheses" : "unexpected character");
    return t;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("identity syntax error at position " + std::to_string(pos_) + ": " + what);
  }

  void skip_space() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
  }

  bool consume(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool consume_omega() {
    skip_space();
    if (text_.substr(pos_, 2) == "^w") {
      pos_ += 2;
      return true;
    }
    if (text_.substr(pos_, 3) == "^ω") {
      pos_ += 3;
      return true;
    }
    return false;
  }

  OmegaTerm term() {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '1') {
      ++pos_;
      skip_space();
      if (pos_ < text_.size() && text_[pos_] != '=' && text_[pos_] != ')')
        fail("the constant 1 must stand alone");
      return {};
    }
    OmegaTerm t;
    while (true) {
      skip_space();
      if (pos_ >= text_.size() || text_[pos_] == '=' || text_[pos_] == ')') break;
      const char c = text_[pos_];
      if (c == '(') {
        ++pos_;
        OmegaTerm inner = term();
        skip_space();
        if (!consume(')')) fail("unbalanced parentheses");
        if (inner.empty()) fail("empty parenthesized term");
        if (!consume_omega()) fail("a parenthesized term must be followed by ^w");
        t.push_back(Factor::omega(std::move(inner)));
      } else if (c >= 'a' && c <= 'z') {
        std::string name(1, c);
        ++pos_;
        while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') name += text_[pos_++];
        if (consume_omega())
          t.push_back(Factor::omega({Factor::var(std::move(name))}));
        else
          t.push_back(Factor::var(std::move(name)));
      } else if (c == '^') {
        fail("^w must follow a variable or a parenthesized term");
      } else {
        fail(std::string("unexpected character '") + c + "'");
      }
    }
    if (t.empty()) fail("empty term (write 1 for the empty word)");
    return t;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string factor_string(const Factor& f) {
  if (f.kind == Factor::Kind::Var) return f.name;
  if (f.body.size() == 1 && f.body[0].kind == Factor::Kind::Var) return f.body[0].name + "^w";
  return "(" + to_string(f.body) + ")^w";
}

// Term compiled against a variable numbering.
struct CompiledFactor {
  bool omega = false;
  std::size_t var = 0;
  std::vector<CompiledFactor> body;
};
using CompiledTerm = std::vector<CompiledFactor>;

CompiledTerm compile(const OmegaTerm& t, const std::vector<std::string>& names) {
  CompiledTerm out;
  for (const auto& f : t) {
    CompiledFactor c;
    if (f.kind == Factor::Kind::Var) {
      c.var = static_cast<std::size_t>(std::find(names.begin(), names.end(), f.name) - names.begin());
    } else {
      c.omega = true;
      c.body = compile(f.body, names);
    }
    out.push_back(std::move(c));
  }
  return out;
}

Element eval_compiled(const Monoid& m, const CompiledTerm& t, const std::vector<Element>& values) {
  Element acc = m.identity();
  for (const auto& f : t) {
    const Element v = f.omega ? m.omega(eval_compiled(m, f.body, values)) : values[f.var];
    acc = m.mul(acc, v);
  }
  return acc;
}

// Calls f(values) for every assignment of the listed variable slots into
// range; stops early when f returns false. Returns false if stopped.
template <class F>
bool for_each_assignment(const std::vector<std::size_t>& slots, const ElementSet& range,
                         std::vector<Element>& values, F&& f) {
  if (slots.empty()) return f(values);
  if (range.empty()) return true;
  std::vector<std::size_t> idx(slots.size(), 0);
  for (auto s : slots) values[s] = range[0];
  while (true) {
    if (!f(values)) return false;
    std::size_t i = 0;
    while (i < slots.size()) {
      if (++idx[i] < range.size()) {
        values[slots[i]] = range[idx[i]];
        break;
      }
      idx[i] = 0;
      values[slots[i]] = range[0];
      ++i;
    }
    if (i == slots.size()) return true;
  }
}

void check_space(std::size_t range, std::size_t vars) {
  double total = 1;
  for (std::size_t i = 0; i < vars; ++i) total *= static_cast<double>(range);
  if (total > 4e9) {
    throw InputError("identity check would enumerate " + std::to_string(static_cast<long double>(total)) +
                     " assignments; too many variables for this monoid");
  }
}

std::set<std::size_t> slots_of(const CompiledTerm& t) {
  std::set<std::size_t> out;
  for (const auto& f : t) {
    if (f.omega) {
      auto inner = slots_of(f.body);
      out.insert(inner.begin(), inner.end());
    } else {
      out.insert(f.var);
    }
  }
  return out;
}

bool disjoint(const std::set<std::size_t>& a, const std::set<std::size_t>& b) {
  return std::none_of(a.begin(), a.end(), [&](auto x) { return b.contains(x); });
}

// Distinct values of a term over all assignments of its variables, each
// with one assignment (over the term's slots) producing it.
using ValueWitnesses = std::vector<std::pair<Element, std::vector<std::pair<std::size_t, Element>>>>;

bool is_linear(const CompiledTerm& t, std::set<std::size_t>& seen) {
  for (const auto& f : t) {
    if (f.omega) {
      if (!is_linear(f.body, seen)) return false;
    } else if (!seen.insert(f.var).second) {
      return false;
    }
  }
  return true;
}

// Value set of a linear term, built factor by factor as set products.
ValueWitnesses linear_values(const Monoid& m, const CompiledTerm& t, const ElementSet& range) {
  ValueWitnesses acc{{m.identity(), {}}};
  for (const auto& f : t) {
    ValueWitnesses factor;
    if (f.omega) {
      std::vector<int> seen(m.size(), 0);
      for (auto& [v, w] : linear_values(m, f.body, range)) {
        const Element o = m.omega(v);
        if (!seen[o]) {
          seen[o] = 1;
          factor.emplace_back(o, std::move(w));
        }
      }
    } else {
      for (auto e : range) factor.push_back({e, {{f.var, e}}});
    }
    ValueWitnesses next;
    std::vector<int> seen(m.size(), 0);
    for (const auto& [a, wa] : acc) {
      for (const auto& [b, wb] : factor) {
        const Element ab = m.mul(a, b);
        if (seen[ab]) continue;
        seen[ab] = 1;
        auto w = wa;
        w.insert(w.end(), wb.begin(), wb.end());
        next.emplace_back(ab, std::move(w));
      }
    }
    acc = std::move(next);
  }
  return acc;
}

ValueWitnesses term_values(const Monoid& m, const CompiledTerm& t, const ElementSet& range,
                           std::size_t var_count) {
  std::set<std::size_t> seen;
  if (is_linear(t, seen)) return linear_values(m, t, range);
  const auto slot_set = slots_of(t);
  const std::vector<std::size_t> slots(slot_set.begin(), slot_set.end());
  check_space(range.size(), slots.size());
  std::vector<Element> values(var_count, 0);
  std::vector<int> hit(m.size(), 0);
  ValueWitnesses out;
  for_each_assignment(slots, range, values, [&](const std::vector<Element>& vals) {
    const Element v = eval_compiled(m, t, vals);
    if (!hit[v]) {
      hit[v] = 1;
      std::vector<std::pair<std::size_t, Element>> w;
      for (auto s : slots) w.emplace_back(s, vals[s]);
      out.emplace_back(v, std::move(w));
    }
    return true;
  });
  return out;
}

IdentityViolation make_violation(const Monoid& m, const std::vector<std::string>& names,
                                 const CompiledTerm& lhs, const CompiledTerm& rhs,
                                 const std::vector<Element>& values) {
  IdentityViolation v;
  for (std::size_t i = 0; i < names.size(); ++i) v.assignment[names[i]] = values[i];
  v.lhs_value = eval_compiled(m, lhs, values);
  v.rhs_value = eval_compiled(m, rhs, values);
  return v;
}

std::optional<IdentityViolation> brute_force(const Monoid& m, const ElementSet& range,
                                             const std::vector<std::string>& names,
                                             const CompiledTerm& lhs, const CompiledTerm& rhs) {
  std::vector<std::size_t> slots(names.size());
  for (std::size_t i = 0; i < slots.size(); ++i) slots[i] = i;
  check_space(range.size(), slots.size());
  std::vector<Element> values(names.size(), 0);
  std::optional<IdentityViolation> found;
  for_each_assignment(slots, range, values, [&](const std::vector<Element>& vals) {
    if (eval_compiled(m, lhs, vals) != eval_compiled(m, rhs, vals)) {
      found = make_violation(m, names, lhs, rhs, vals);
      return false;
    }
    return true;
  });
  return found;
}

// Partition of the carrier by the signature m -> (f(m, c))_{c in contexts}.
std::vector<std::uint32_t> partition_by(const Monoid& m, std::size_t count,
                                        const std::function<std::uint32_t(Element, std::size_t)>& f) {
  std::unordered_map<std::vector<std::uint32_t>, std::uint32_t, VectorHash> ids;
  std::vector<std::uint32_t> cls(m.size());
  std::vector<std::uint32_t> sig(count);
  for (Element e = 0; e < m.size(); ++e) {
    for (std::size_t i = 0; i < count; ++i) sig[i] = f(e, i);
    cls[e] = ids.try_emplace(sig, static_cast<std::uint32_t>(ids.size())).first->second;
  }
  return cls;
}

}  // namespace

std::set<std::string> IdentityStatement::variables() const {
  std::set<std::string> out;
  collect_variables(lhs, out);
  collect_variables(rhs, out);
  return out;
}

IdentityStatement parse_identity(std::string_view text) { return Parser(text).identity(); }
OmegaTerm parse_term(std::string_view text) { return Parser(text).whole_term(); }

std::string to_string(const OmegaTerm& t) {
  if (t.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i > 0) out += ' ';
    out += factor_string(t[i]);
  }
  return out;
}

std::string to_string(const IdentityStatement& id) { return to_string(id.lhs) + " = " + to_string(id.rhs); }

Element eval_term(const Monoid& m, const OmegaTerm& t, const Assignment& assignment) {
  Element acc = m.identity();
  for (const auto& f : t) {
    Element v;
    if (f.kind == Factor::Kind::Var) {
      auto it = assignment.find(f.name);
      if (it == assignment.end()) throw InputError("unbound variable '" + f.name + "'");
      if (it->second >= m.size()) throw InputError("value of '" + f.name + "' out of range");
      v = it->second;
    } else {
      v = m.omega(eval_term(m, f.body, assignment));
    }
    acc = m.mul(acc, v);
  }
  return acc;
}

std::optional<IdentityViolation> find_violation(const Monoid& m, const ElementSet& range,
                                                const IdentityStatement& id) {
  const auto var_set = id.variables();
  const std::vector<std::string> names(var_set.begin(), var_set.end());
  const CompiledTerm lhs = compile(id.lhs, names);
  const CompiledTerm rhs = compile(id.rhs, names);
  if (!names.empty() && range.empty()) return std::nullopt;

  // Common outer factors P·u·Q = P·v·Q. When P, Q and the core use
  // pairwise disjoint variables, the identity holds iff l·u·r = l·v·r for
  // every value l of P, r of Q and every core assignment; that relation is
  // computed once as a partition of the carrier.
  const std::size_t shortest = std::min(lhs.size(), rhs.size());
  std::size_t max_p = 0;
  while (max_p < shortest && id.lhs[max_p] == id.rhs[max_p]) ++max_p;
  std::size_t max_q = 0;
  while (max_q < shortest - max_p && id.lhs[lhs.size() - 1 - max_q] == id.rhs[rhs.size() - 1 - max_q]) ++max_q;

  for (std::size_t p = max_p + 1; p-- > 0;) {
    for (std::size_t q = max_q + 1; q-- > 0;) {
      if (p + q == 0) continue;
      const CompiledTerm prefix(lhs.begin(), lhs.begin() + static_cast<std::ptrdiff_t>(p));
      const CompiledTerm suffix(lhs.end() - static_cast<std::ptrdiff_t>(q), lhs.end());
      const CompiledTerm core_l(lhs.begin() + static_cast<std::ptrdiff_t>(p), lhs.end() - static_cast<std::ptrdiff_t>(q));
      const CompiledTerm core_r(rhs.begin() + static_cast<std::ptrdiff_t>(p), rhs.end() - static_cast<std::ptrdiff_t>(q));
      const auto vp = slots_of(prefix), vq = slots_of(suffix);
      auto vc = slots_of(core_l);
      {
        auto r = slots_of(core_r);
        vc.insert(r.begin(), r.end());
      }
      if (!disjoint(vp, vq) || !disjoint(vp, vc) || !disjoint(vq, vc)) continue;

      const auto lefts = term_values(m, prefix, range, names.size());
      const auto rights = term_values(m, suffix, range, names.size());
      const auto right_cls = partition_by(m, rights.size(), [&](Element e, std::size_t i) {
        return m.mul(e, rights[i].first);
      });
      const auto key = partition_by(m, lefts.size(), [&](Element e, std::size_t i) {
        return right_cls[m.mul(lefts[i].first, e)];
      });

      const std::vector<std::size_t> core_slots(vc.begin(), vc.end());
      check_space(range.size(), core_slots.size());
      std::vector<Element> values(names.size(), range.empty() ? m.identity() : range[0]);
      std::optional<IdentityViolation> found;
      for_each_assignment(core_slots, range, values, [&](std::vector<Element>& vals) {
        const Element u = eval_compiled(m, core_l, vals);
        const Element v = eval_compiled(m, core_r, vals);
        if (key[u] == key[v]) return true;
        for (const auto& [l, lw] : lefts) {
          for (const auto& [r, rw] : rights) {
            if (m.mul(m.mul(l, u), r) == m.mul(m.mul(l, v), r)) continue;
            for (const auto& [slot, e] : lw) vals[slot] = e;
            for (const auto& [slot, e] : rw) vals[slot] = e;
            found = make_violation(m, names, lhs, rhs, vals);
            return false;
          }
        }
        throw ConsistencyError("identity check: partition and explicit contexts disagree");
      });
      return found;
    }
  }
  return brute_force(m, range, names, lhs, rhs);
}

ElementSet substitution_range(const Stamp& s, SatisfactionMode mode) {
  if (mode == SatisfactionMode::Ne) return image_semigroup(s);
  ElementSet all(s.monoid().size());
  for (Element e = 0; e < all.size(); ++e) all[e] = e;
  return all;
}

bool satisfies(const Stamp& s, const IdentityStatement& id, SatisfactionMode mode) {
  return !find_violation(s.monoid(), substitution_range(s, mode), id).has_value();
}

bool satisfies(const Monoid& m, const IdentityStatement& id) {
  ElementSet all(m.size());
  for (Element e = 0; e < all.size(); ++e) all[e] = e;
  return !find_violation(m, all, id).has_value();
}

IdentityStatement u_of_e(const IdentityStatement& id) {
  const auto used = id.variables();
  std::set<std::string> taken(used.begin(), used.end());
  auto fresh = [&](const std::string& base) {
    std::string name = base;
    for (int i = 1; taken.contains(name); ++i) name = base + std::to_string(i);
    taken.insert(name);
    return name;
  };
  const std::string x = fresh("x"), y = fresh("y"), z = fresh("z"), t = fresh("t");
  auto wrap = [&](const OmegaTerm& core) {
    OmegaTerm out{Factor::omega({Factor::var(x)}), Factor::var(y)};
    out.insert(out.end(), core.begin(), core.end());
    out.push_back(Factor::var(z));
    out.push_back(Factor::omega({Factor::var(t)}));
    return out;
  };
  return IdentityStatement{wrap(id.lhs), wrap(id.rhs)};
}

std::vector<IdentityStatement> u_of_e(const std::vector<IdentityStatement>& basis) {
  std::vector<IdentityStatement> out;
  out.reserve(basis.size());
  for (const auto& id : basis) out.push_back(u_of_e(id));
  return out;
}

const std::vector<std::string>& builtin_basis_names() {
  static const std::vector<std::string> names{"R", "L", "J", "LI", "J1", "Com", "ACom", "A", "G", "Ab", "triv"};
  return names;
}

Basis builtin_basis(std::string_view name) {
  auto make = [](std::string n, std::initializer_list<const char*> ids, SatisfactionMode mode,
                 BasisSource source) {
    Basis b{std::move(n), {}, mode, source};
    for (const char* text : ids) b.identities.push_back(parse_identity(text));
    return b;
  };
  using M = SatisfactionMode;
  using S = BasisSource;
  if (name == "R") return make("R", {"(a b)^w a = (a b)^w"}, M::All, S::Cited);
  if (name == "L") return make("L", {"b (a b)^w = (a b)^w"}, M::All, S::Cited);
  if (name == "J") return make("J", {"(a b)^w a = (a b)^w", "b (a b)^w = (a b)^w"}, M::All, S::Cited);
  if (name == "LI") return make("LI", {"x^w y x^w = x^w"}, M::Ne, S::Cited);
  if (name == "J1") return make("J1", {"x x = x", "x y = y x"}, M::All, S::Standard);
  if (name == "Com") return make("Com", {"x y = y x"}, M::All, S::Standard);
  if (name == "A") return make("A", {"x^w x = x^w"}, M::All, S::Standard);
  if (name == "ACom") return make("ACom", {"x y = y x", "x^w x = x^w"}, M::All, S::Standard);
  if (name == "G") return make("G", {"x^w = 1"}, M::All, S::Standard);
  if (name == "Ab") return make("Ab", {"x^w = 1", "x y = y x"}, M::All, S::Standard);
  if (name == "triv") return make("triv", {"x = y"}, M::All, S::Standard);
  std::string choices;
  for (const auto& n : builtin_basis_names()) choices += (choices.empty() ? "" : ", ") + n;
  throw InputError("unknown variety '" + std::string(name) + "' (choices: " + choices + ")");
}

}  // namespace essv
