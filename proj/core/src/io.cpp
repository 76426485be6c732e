#include "essv/io.hpp"

#include <fstream>
#include <sstream>

#include "essv/error.hpp"

namespace essv::io {

namespace {

template <class T>
T get(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw InputError(std::string("field '") + key + "' has the wrong type");
  }
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string symbol_of(const json& v) {
  if (!v.is_string()) throw InputError("letters must be given as strings");
  return v.get<std::string>();
}

std::size_t index(const json& v, const char* what) {
  if (!v.is_number_integer() || v.get<long long>() < 0)
    throw InputError(std::string(what) + " must be a non-negative integer");
  return v.get<std::size_t>();
}

Alphabet alphabet_from(const json& j) {
  auto symbols = get<std::vector<std::string>>(j, "alphabet");
  for (const auto& s : symbols)
    if (s.empty()) throw InputError("alphabet symbols must be nonempty");
  return Alphabet(std::move(symbols));
}

json word_json(const Alphabet& a, const Word& w) { return a.format(w); }

}  // namespace

json to_json(const Monoid& m) {
  json j{{"size", m.size()}, {"identity", m.identity()}, {"table", m.rows()}};
  if (!m.names().empty()) j["names"] = m.names();
  return j;
}

Monoid monoid_from_json(const json& j) {
  const auto size = get<std::size_t>(j, "size");
  const auto identity = get<Element>(j, "identity");
  const auto& table = field(j, "table");
  if (!table.is_array() || table.size() != size) throw InputError("table must have 'size' rows");
  std::vector<std::vector<Element>> rows;
  for (const auto& row : table) {
    if (!row.is_array() || row.size() != size) throw InputError("table rows must have 'size' entries");
    std::vector<Element> r;
    for (const auto& v : row) r.push_back(static_cast<Element>(index(v, "table entry")));
    rows.push_back(std::move(r));
  }
  std::vector<std::string> names;
  if (j.contains("names")) names = get<std::vector<std::string>>(j, "names");
  return Monoid::from_table(rows, identity, std::move(names));
}

json to_json(const Dfa& d) {
  json delta = json::array();
  for (State q = 0; q < d.state_count(); ++q) {
    json row = json::array();
    for (Letter a = 0; a < d.alphabet().size(); ++a) row.push_back(d.next(q, a));
    delta.push_back(std::move(row));
  }
  return json{{"alphabet", d.alphabet().symbols()},
              {"states", d.state_count()},
              {"initial", d.initial()},
              {"finals", d.finals()},
              {"delta", std::move(delta)}};
}

Dfa dfa_from_json(const json& j) {
  Alphabet alphabet = alphabet_from(j);
  const auto states = get<std::size_t>(j, "states");
  if (states == 0) throw InputError("a DFA needs at least one state");
  const auto initial = get<std::size_t>(j, "initial");
  const auto& delta = field(j, "delta");
  if (!delta.is_array() || delta.size() != states) throw InputError("delta must have one row per state");
  const std::size_t k = alphabet.size();
  const auto sink = static_cast<State>(states);
  bool partial = false;
  std::vector<State> flat;
  for (const auto& row : delta) {
    if (!row.is_array() || row.size() != k) throw InputError("delta rows must have one entry per letter");
    for (const auto& v : row) {
      if (v.is_null() || (v.is_number_integer() && v.get<long long>() == -1)) {
        partial = true;
        flat.push_back(sink);
      } else {
        flat.push_back(static_cast<State>(index(v, "delta entry")));
      }
    }
  }
  std::vector<bool> finals(states + (partial ? 1 : 0), false);
  for (const auto& f : field(j, "finals")) {
    const auto q = index(f, "final state");
    if (q >= states) throw InputError("final state out of range");
    finals[q] = true;
  }
  if (partial)
    for (std::size_t a = 0; a < k; ++a) flat.push_back(sink);
  return Dfa(std::move(alphabet), states + (partial ? 1 : 0), static_cast<State>(initial), std::move(finals),
             std::move(flat));
}

json to_json(const Stamp& s) {
  json letters = json::object();
  for (Letter a = 0; a < s.alphabet().size(); ++a) letters[s.alphabet().symbol(a)] = s.letter_image(a);
  json j{{"alphabet", s.alphabet().symbols()}, {"monoid", to_json(s.monoid())}, {"letters", letters}};
  if (s.accepting()) j["accepting"] = *s.accepting();
  return j;
}

Stamp stamp_from_json(const json& j) {
  Alphabet alphabet = alphabet_from(j);
  Monoid m = monoid_from_json(field(j, "monoid"));
  const auto& letters = field(j, "letters");
  if (!letters.is_object()) throw InputError("'letters' must map symbols to elements");
  std::vector<Element> images;
  for (const auto& sym : alphabet.symbols()) {
    if (!letters.contains(sym)) throw InputError("no image for letter '" + sym + "'");
    images.push_back(static_cast<Element>(index(letters.at(sym), "letter image")));
  }
  if (letters.size() != alphabet.size()) throw InputError("'letters' names a symbol outside the alphabet");
  std::optional<ElementSet> accepting;
  if (j.contains("accepting")) accepting = get<ElementSet>(j, "accepting");
  return Stamp(std::move(alphabet), std::move(m), std::move(images), std::move(accepting));
}

json to_json(const MonomialFile& f) {
  json monos = json::array();
  MonomialNormal mode = MonomialNormal::R;
  for (const auto& m : f.monomials) {
    json sets = json::array();
    for (const auto& s : m.sets) {
      json set = json::array();
      for (Letter a = 0; a < s.size(); ++a)
        if (s[a]) set.push_back(f.alphabet.symbol(a));
      sets.push_back(std::move(set));
    }
    json letters = json::array();
    for (auto a : m.letters) letters.push_back(f.alphabet.symbol(a));
    monos.push_back({{"sets", sets}, {"letters", letters}});
    mode = m.mode;
  }
  return json{{"alphabet", f.alphabet.symbols()},
              {"monomials", monos},
              {"mode", mode == MonomialNormal::L ? "L" : "R"}};
}

MonomialFile monomials_from_json(const json& j) {
  MonomialFile out;
  out.alphabet = alphabet_from(j);
  const auto mode = get<std::string>(j, "mode");
  if (mode != "R" && mode != "L") throw InputError("monomial mode must be \"R\" or \"L\"");
  for (const auto& m : field(j, "monomials")) {
    RMonomial mono;
    mono.alphabet = out.alphabet;
    mono.mode = mode == "R" ? MonomialNormal::R : MonomialNormal::L;
    for (const auto& set : field(m, "sets")) {
      LetterSet s(out.alphabet.size(), false);
      for (const auto& sym : set) s[out.alphabet.letter(symbol_of(sym))] = true;
      mono.sets.push_back(std::move(s));
    }
    for (const auto& sym : field(m, "letters")) mono.letters.push_back(out.alphabet.letter(symbol_of(sym)));
    mono.validate();
    out.monomials.push_back(std::move(mono));
  }
  return out;
}

json to_json(const EssentialQuotient& q) {
  return json{{"stamp", to_json(q.stamp)},
              {"stability_index", q.stability_index},
              {"eventual_image", q.t},
              {"classes", q.congruence.classes()},
              {"quotient", to_json(q.quotient_stamp)},
              {"projection", q.projection}};
}

json to_json(const IdentityViolation& v, const Monoid& m) {
  json assignment = json::object();
  for (const auto& [name, e] : v.assignment) assignment[name] = e;
  json j{{"assignment", assignment}, {"lhs", v.lhs_value}, {"rhs", v.rhs_value}};
  if (!m.names().empty()) {
    json named = json::object();
    for (const auto& [name, e] : v.assignment) named[name] = m.name(e);
    j["assignment_names"] = named;
  }
  return j;
}

json verdict_to_json(const JoinVerdict& v, const Dfa& language) {
  json j{{"language", to_json(minimize(language))},
         {"variety", v.variety},
         {"in_join", v.in_join},
         {"method", to_string(v.method)},
         {"status", to_string(v.status)},
         {"monoid_size", v.monoid_size},
         {"quotient_size", v.quotient_size},
         {"stability_index", v.stability_index}};
  if (v.witness) {
    json assignment = json::object();
    for (const auto& [name, e] : v.witness->assignment) assignment[name] = e;
    j["witness"] = json{{"identity", v.witness->identity},
                        {"assignment", assignment},
                        {"lhs", v.witness->lhs_value},
                        {"rhs", v.witness->rhs_value}};
  }
  return j;
}

json to_json(const J1Report& r) {
  json rows = json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"k", row.k},
                    {"l", row.l},
                    {"u", word_json(r.alphabet, row.u)},
                    {"v", word_json(r.alphabet, row.v)},
                    {"refuted", true},
                    {"a_in_quotient", row.a_in_quotient},
                    {"ab_in_quotient", row.ab_in_quotient},
                    {"candidates_conflate", row.candidates_conflate}});
  }
  return json{{"language", to_json(r.language)},
              {"x", word_json(r.alphabet, r.x)},
              {"y", word_json(r.alphabet, r.y)},
              {"candidate_count", r.candidates.size()},
              {"rows", rows},
              {"bsbs_essentially_j1", {{"structural", r.bsbs_structural},
                                       {"equational", r.bsbs_equational},
                                       {"quotient_size", r.quotient_stamp_size}}}};
}

json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return json::parse(buf.str());
  } catch (const json::parse_error& e) {
    throw InputError("'" + path + "' is not valid JSON: " + e.what());
  }
}

}  // namespace essv::io
