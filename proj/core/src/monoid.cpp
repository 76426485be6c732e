#include "essv/monoid.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_set>

#include "essv/bitset.hpp"
#include "essv/error.hpp"

namespace essv {

namespace {

std::vector<Element> compute_omega_table(std::size_t n, const std::vector<Element>& table) {
  std::vector<Element> result(n);
  for (Element m = 0; m < n; ++m) {
    Element power = m;
    // Powers of m are eventually periodic; the idempotent is reached within n steps.
    while (table[power * n + power] != power) power = table[power * n + m];
    result[m] = power;
  }
  return result;
}

void check_identity_laws(std::size_t n, const std::vector<Element>& table, Element identity) {
  if (identity >= n) {
    throw InputError("identity " + std::to_string(identity) + " out of range for size " +
                     std::to_string(n));
  }
  for (Element m = 0; m < n; ++m) {
    if (table[identity * n + m] != m || table[m * n + identity] != m) {
      std::ostringstream os;
      os << "identity law violated: " << identity << "·" << m << " = " << table[identity * n + m]
         << ", " << m << "·" << identity << " = " << table[m * n + identity];
      throw InputError(os.str());
    }
  }
}

}  // namespace

Monoid::Monoid(std::size_t size, std::shared_ptr<const std::vector<Element>> table, Element identity,
               std::vector<std::string> names)
    : size_(size),
      identity_(identity),
      table_(std::move(table)),
      omega_(std::make_shared<const std::vector<Element>>(compute_omega_table(size, *table_))),
      names_(std::move(names)) {}

Monoid Monoid::from_table(const std::vector<std::vector<Element>>& rows, Element identity,
                          std::vector<std::string> names) {
  const std::size_t n = rows.size();
  if (n == 0) throw InputError("monoid table is empty");
  std::vector<Element> flat;
  flat.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) {
      throw InputError("row " + std::to_string(i) + " has " + std::to_string(rows[i].size()) +
                       " entries, expected " + std::to_string(n));
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (rows[i][j] >= n) {
        throw InputError("table entry out of range at (" + std::to_string(i) + "," +
                         std::to_string(j) + "): " + std::to_string(rows[i][j]));
      }
      flat.push_back(rows[i][j]);
    }
  }
  check_identity_laws(n, flat, identity);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const Element ab = flat[a * n + b];
      for (std::size_t c = 0; c < n; ++c) {
        if (flat[ab * n + c] != flat[a * n + flat[b * n + c]]) {
          std::ostringstream os;
          os << "associativity violated at (" << a << "," << b << "," << c << ")";
          throw InputError(os.str());
        }
      }
    }
  }
  if (!names.empty()) {
    if (names.size() != n) throw InputError("names must have exactly one entry per element");
    std::set<std::string> seen(names.begin(), names.end());
    if (seen.size() != n) throw InputError("element names must be distinct");
  }
  return Monoid(n, std::make_shared<const std::vector<Element>>(std::move(flat)), identity,
                std::move(names));
}

Monoid Monoid::from_trusted(std::size_t size, std::vector<Element> flat_table, Element identity) {
  if (size == 0 || flat_table.size() != size * size) throw InputError("bad flat table shape");
  for (auto e : flat_table)
    if (e >= size) throw InputError("table entry out of range");
  check_identity_laws(size, flat_table, identity);
  return Monoid(size, std::make_shared<const std::vector<Element>>(std::move(flat_table)), identity,
                {});
}

Monoid Monoid::trivial() { return from_trusted(1, {0}, 0); }

Monoid Monoid::cyclic_group(std::size_t n) {
  std::vector<Element> flat(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) flat[a * n + b] = static_cast<Element>((a + b) % n);
  return from_trusted(n, std::move(flat), 0);
}

Element Monoid::product(std::span<const Element> factors) const noexcept {
  Element acc = identity_;
  for (auto f : factors) acc = mul(acc, f);
  return acc;
}

bool Monoid::is_group() const noexcept {
  for (Element m = 0; m < size_; ++m)
    if (omega(m) != identity_) return false;
  return true;
}

std::string Monoid::name(Element m) const {
  if (!names_.empty()) return names_[m];
  return std::to_string(m);
}

std::vector<std::vector<Element>> Monoid::rows() const {
  std::vector<std::vector<Element>> out(size_, std::vector<Element>(size_));
  for (std::size_t a = 0; a < size_; ++a)
    for (std::size_t b = 0; b < size_; ++b) out[a][b] = mul(static_cast<Element>(a), static_cast<Element>(b));
  return out;
}

bool operator==(const Monoid& a, const Monoid& b) noexcept {
  return a.size_ == b.size_ && a.identity_ == b.identity_ &&
         (a.table_ == b.table_ || *a.table_ == *b.table_);
}

Element omega(const Monoid& m, Element x) {
  if (x >= m.size()) throw InputError("element out of range");
  Element power = x;
  while (m.mul(power, power) != power) power = m.mul(power, x);
  return power;
}

ElementSet generated_submonoid(const Monoid& m, std::span<const Element> gens) {
  for (auto g : gens)
    if (g >= m.size()) throw InputError("generator out of range");
  std::vector<bool> seen(m.size(), false);
  std::deque<Element> queue{m.identity()};
  seen[m.identity()] = true;
  while (!queue.empty()) {
    const Element e = queue.front();
    queue.pop_front();
    for (auto g : gens) {
      const Element next = m.mul(e, g);
      if (!seen[next]) {
        seen[next] = true;
        queue.push_back(next);
      }
    }
  }
  ElementSet out;
  for (Element e = 0; e < m.size(); ++e)
    if (seen[e]) out.push_back(e);
  return out;
}

ProductMonoid direct_product(const Monoid& left, const Monoid& right, std::size_t cap) {
  const std::size_t n = left.size() * right.size();
  if (n > cap) {
    throw InputError("direct product size " + std::to_string(n) + " exceeds cap " +
                     std::to_string(cap));
  }
  const std::size_t rs = right.size();
  std::vector<Element> flat(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const auto l = left.mul(static_cast<Element>(a / rs), static_cast<Element>(b / rs));
      const auto r = right.mul(static_cast<Element>(a % rs), static_cast<Element>(b % rs));
      flat[a * n + b] = static_cast<Element>(l * rs + r);
    }
  }
  const auto id = static_cast<Element>(left.identity() * rs + right.identity());
  return ProductMonoid{Monoid::from_trusted(n, std::move(flat), id), rs};
}

MonoidCongruence::MonoidCongruence(Monoid base, const std::vector<std::size_t>& class_of)
    : base_(std::move(base)) {
  if (class_of.size() != base_.size()) {
    throw InputError("congruence labels: expected " + std::to_string(base_.size()) + ", got " +
                     std::to_string(class_of.size()));
  }
  std::vector<std::pair<std::size_t, std::size_t>> seen;  // (label, class)
  class_of_.resize(class_of.size());
  for (std::size_t i = 0; i < class_of.size(); ++i) {
    auto it = std::find_if(seen.begin(), seen.end(),
                           [&](const auto& p) { return p.first == class_of[i]; });
    if (it == seen.end()) {
      seen.emplace_back(class_of[i], seen.size());
      class_of_[i] = seen.size() - 1;
    } else {
      class_of_[i] = it->second;
    }
  }
  class_count_ = seen.size();
}

MonoidCongruence MonoidCongruence::identity(const Monoid& base) {
  std::vector<std::size_t> labels(base.size());
  std::iota(labels.begin(), labels.end(), std::size_t{0});
  return MonoidCongruence(base, labels);
}

MonoidCongruence MonoidCongruence::full(const Monoid& base) {
  return MonoidCongruence(base, std::vector<std::size_t>(base.size(), 0));
}

std::optional<MonoidCongruence::Violation> MonoidCongruence::find_incompatibility() const {
  const std::size_t n = base_.size();
  std::vector<Element> representative(class_count_, 0);
  std::vector<bool> has_rep(class_count_, false);
  for (Element e = 0; e < n; ++e) {
    if (!has_rep[class_of_[e]]) {
      has_rep[class_of_[e]] = true;
      representative[class_of_[e]] = e;
    }
  }
  // Comparing each element with its class representative suffices: the
  // relation "same class" is transitive.
  for (Element a = 0; a < n; ++a) {
    const Element rep = representative[class_of_[a]];
    if (rep == a) continue;
    for (Element c = 0; c < n; ++c) {
      if (class_of_[base_.mul(a, c)] != class_of_[base_.mul(rep, c)]) return Violation{rep, a, c, false};
      if (class_of_[base_.mul(c, a)] != class_of_[base_.mul(c, rep)]) return Violation{rep, a, c, true};
    }
  }
  return std::nullopt;
}

QuotientMonoid quotient_monoid(const MonoidCongruence& congruence) {
  if (auto v = congruence.find_incompatibility()) {
    std::ostringstream os;
    os << "partition is not a congruence: elements " << v->a << " and " << v->b
       << " are related but ";
    if (v->on_left)
      os << v->c << "·" << v->a << " and " << v->c << "·" << v->b;
    else
      os << v->a << "·" << v->c << " and " << v->b << "·" << v->c;
    os << " are not";
    throw InputError(os.str());
  }
  const Monoid& base = congruence.base();
  const std::size_t k = congruence.class_count();
  std::vector<Element> rep(k, 0);
  std::vector<bool> has_rep(k, false);
  std::vector<Element> projection(base.size());
  for (Element e = 0; e < base.size(); ++e) {
    const auto c = congruence.class_of(e);
    projection[e] = static_cast<Element>(c);
    if (!has_rep[c]) {
      has_rep[c] = true;
      rep[c] = e;
    }
  }
  std::vector<Element> flat(k * k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) flat[a * k + b] = projection[base.mul(rep[a], rep[b])];
  return QuotientMonoid{Monoid::from_trusted(k, std::move(flat), projection[base.identity()]),
                        std::move(projection)};
}

bool is_morphism(const Monoid& a, const Monoid& b, std::span<const Element> f) {
  if (f.size() != a.size()) return false;
  if (f[a.identity()] != b.identity()) return false;
  for (Element x = 0; x < a.size(); ++x)
    for (Element y = 0; y < a.size(); ++y)
      if (f[a.mul(x, y)] != b.mul(f[x], f[y])) return false;
  return true;
}

bool isomorphic(const Monoid& a, const Monoid& b) {
  if (a.size() != b.size()) return false;
  const std::size_t n = a.size();
  if (n > 9) throw InputError("isomorphism test limited to monoids of size <= 9");
  std::vector<Element> others_a, others_b;
  for (Element e = 0; e < n; ++e) {
    if (e != a.identity()) others_a.push_back(e);
    if (e != b.identity()) others_b.push_back(e);
  }
  std::vector<Element> f(n);
  f[a.identity()] = b.identity();
  do {
    for (std::size_t i = 0; i < others_a.size(); ++i) f[others_a[i]] = others_b[i];
    if (is_morphism(a, b, f)) return true;
  } while (std::next_permutation(others_b.begin(), others_b.end()));
  return false;
}

namespace {

// Tries to extend generator images to a morphism from the submonoid they
// generate onto the whole of `target`.
bool extends_to_surjection(const Monoid& source, const std::vector<Element>& gens,
                           const std::vector<Element>& images, const Monoid& target) {
  std::vector<Element> map(source.size(), 0);
  std::vector<bool> mapped(source.size(), false);
  std::deque<Element> queue{source.identity()};
  map[source.identity()] = target.identity();
  mapped[source.identity()] = true;
  std::vector<bool> hit(target.size(), false);
  hit[target.identity()] = true;
  while (!queue.empty()) {
    const Element s = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const Element t = source.mul(s, gens[i]);
      const Element img = target.mul(map[s], images[i]);
      if (!mapped[t]) {
        mapped[t] = true;
        map[t] = img;
        hit[img] = true;
        queue.push_back(t);
      } else if (map[t] != img) {
        return false;
      }
    }
  }
  return std::all_of(hit.begin(), hit.end(), [](bool h) { return h; });
}

bool surjects_from(const Monoid& n, const std::vector<Element>& gens, const Monoid& m) {
  std::vector<Element> images(gens.size(), 0);
  const std::size_t total = [&] {
    std::size_t t = 1;
    for (std::size_t i = 0; i < gens.size(); ++i) t *= m.size();
    return t;
  }();
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t c = code;
    for (auto& img : images) {
      img = static_cast<Element>(c % m.size());
      c /= m.size();
    }
    if (extends_to_surjection(n, gens, images, m)) return true;
  }
  return false;
}

}  // namespace

DivisionVerdict divides(const Monoid& m, const Monoid& n, DivisionBudget budget) {
  if (m.size() == 1) return DivisionVerdict::Divides;
  if (m.size() > budget.max_target_size) return DivisionVerdict::BudgetExhausted;
  if (m.size() > n.size()) return DivisionVerdict::DoesNotDivide;

  struct Node {
    DynBitset members;
    std::vector<Element> gens;
  };
  std::unordered_set<DynBitset, DynBitsetHash> visited;
  std::vector<Node> layer;
  {
    DynBitset start(n.size());
    start.set(n.identity());
    visited.insert(start);
    layer.push_back(Node{start, {}});
  }
  bool complete = true;
  for (std::size_t depth = 0;; ++depth) {
    for (const auto& node : layer)
      if (node.members.count() >= m.size() && surjects_from(n, node.gens, m))
        return DivisionVerdict::Divides;
    if (layer.empty()) break;
    std::vector<Node> next;
    for (const auto& node : layer) {
      for (Element e = 0; e < n.size(); ++e) {
        if (node.members.test(e)) continue;
        auto gens = node.gens;
        gens.push_back(e);
        const auto closure = generated_submonoid(n, gens);
        DynBitset members(n.size());
        for (auto x : closure) members.set(x);
        if (visited.contains(members)) continue;
        if (depth >= budget.max_generators) {
          complete = false;
          break;
        }
        visited.insert(members);
        next.push_back(Node{std::move(members), std::move(gens)});
      }
      if (!complete) break;
    }
    if (!complete) break;
    layer = std::move(next);
  }
  return complete ? DivisionVerdict::DoesNotDivide : DivisionVerdict::BudgetExhausted;
}

const char* to_string(DivisionVerdict v) noexcept {
  switch (v) {
    case DivisionVerdict::Divides: return "divides";
    case DivisionVerdict::DoesNotDivide: return "does not divide";
    case DivisionVerdict::BudgetExhausted: return "budget exhausted";
  }
  return "?";
}

}  // namespace essv
