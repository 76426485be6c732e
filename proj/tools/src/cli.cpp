#include "essv_cli/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>
#include <variant>

#include "essv/builders.hpp"
#include "essv/constructions.hpp"
#include "essv/decide.hpp"
#include "essv/error.hpp"
#include "essv/identity.hpp"
#include "essv/io.hpp"
#include "essv/oracle.hpp"
#include "essv/stamp.hpp"

namespace essv::cli {

namespace {

using io::json;

struct Options {
  bool json = false;
  bool verify = false;
  std::string file;
  std::string name;
  std::string identity;
  std::string mode = "all";
  std::string kind;
  std::string x, y;
  std::size_t k = 0;
  bool k_given = false;
  std::string spec;
  std::string alphabet = "ab";
  std::string demo;
};

struct Input {
  std::variant<Dfa, Stamp, Monoid, io::MonomialFile> value;
};

Input load(const std::string& path) {
  const json j = io::read_file(path);
  if (!j.is_object()) throw InputError("'" + path + "' does not hold a JSON object");
  if (j.contains("delta")) return {io::dfa_from_json(j)};
  if (j.contains("monomials")) return {io::monomials_from_json(j)};
  if (j.contains("monoid")) return {io::stamp_from_json(j)};
  if (j.contains("table")) return {io::monoid_from_json(j)};
  throw InputError("'" + path + "' is not a DFA, stamp, monoid or monomial file");
}

Dfa load_dfa(const std::string& path) {
  Input in = load(path);
  if (auto* d = std::get_if<Dfa>(&in.value)) return *d;
  throw InputError("'" + path + "' must contain a DFA");
}

Stamp load_stamp(const std::string& path) {
  Input in = load(path);
  if (auto* d = std::get_if<Dfa>(&in.value)) return syntactic_stamp(*d);
  if (auto* s = std::get_if<Stamp>(&in.value)) return *s;
  throw InputError("'" + path + "' must contain a DFA or a stamp");
}

std::size_t profile_cap() {
  if (const char* env = std::getenv("ESSV_PROFILE_CAP")) {
    try {
      return static_cast<std::size_t>(std::stoull(env));
    } catch (const std::exception&) {
      throw InputError("ESSV_PROFILE_CAP must be a positive integer");
    }
  }
  return kDefaultProfileCap;
}

void verify_failed(const std::string& what) { throw ConsistencyError("--verify: " + what); }

// Words up to 2·states (at most 8) separated by contexts up to the state
// count must realize exactly the elements those words reach.
void verify_syntactic(const Dfa& d, const Stamp& s) {
  const Dfa m = minimize(d);
  if (m.state_count() > 5) return;
  const std::size_t n = std::min<std::size_t>(2 * m.state_count(), 8);
  const auto classes = oracle::syntactic_classes_bruteforce(m, n, m.state_count());
  std::set<Element> reached;
  for (const auto& cls : classes) {
    const Element e = eval_word(s, cls.front());
    for (const auto& w : cls)
      if (eval_word(s, w) != e) verify_failed("syntactic classes split a monoid element");
    if (!reached.insert(e).second) verify_failed("two syntactic classes share a monoid element");
  }
}

void verify_levels(const Dfa& d, const Stamp& s) {
  const EventualImage image = eventual_image(s);
  const std::size_t len = 2 * image.stability_index + image.levels.period;
  const auto sets = oracle::level_sets_by_words(d, s, len);
  for (std::size_t n = 1; n <= len; ++n)
    if (sets[n - 1] != image.levels.at(n)) verify_failed("level set of length " + std::to_string(n) + " differs");
}

std::string set_string(const ElementSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? ", " : "") + std::to_string(s[i]);
  return out + "}";
}

std::string assignment_string(const Assignment& a) {
  std::string out;
  for (const auto& [name, e] : a) out += (out.empty() ? "" : ", ") + name + " -> " + std::to_string(e);
  return out;
}

int cmd_synmon(const Options& o, std::ostream& out) {
  const Dfa d = load_dfa(o.file);
  const Stamp s = syntactic_stamp(d);
  if (o.verify) verify_syntactic(d, s);
  out << io::to_json(s).dump(2) << "\n";
  return kOk;
}

int cmd_stability(const Options& o, std::ostream& out) {
  Input in = load(o.file);
  std::optional<Dfa> d;
  if (auto* p = std::get_if<Dfa>(&in.value)) d = *p;
  const Stamp s = d ? syntactic_stamp(*d) : load_stamp(o.file);
  const EventualImage image = eventual_image(s);
  if (o.verify && d) verify_levels(*d, s);
  if (o.json) {
    out << json{{"stability_index", image.stability_index},
                {"preperiod", image.levels.preperiod},
                {"period", image.levels.period},
                {"eventual_image", image.t},
                {"image_semigroup", image_semigroup(s)}}
               .dump(2)
        << "\n";
  } else {
    out << "stability index: " << image.stability_index << "\n"
        << "level sets: preperiod " << image.levels.preperiod << ", period " << image.levels.period << "\n"
        << "eventual image T: " << set_string(image.t) << "\n";
  }
  return kOk;
}

int cmd_essquo(const Options& o, std::ostream& out) {
  const Stamp s = load_stamp(o.file);
  const EssentialQuotient q = essential_quotient(s);
  if (o.json) {
    out << io::to_json(q).dump(2) << "\n";
  } else {
    out << "monoid size: " << s.monoid().size() << "\n"
        << "stability index: " << q.stability_index << "\n"
        << "eventual image T: " << set_string(q.t) << "\n"
        << "quotient size: " << q.quotient_stamp.monoid().size() << "\n"
        << "projection:";
    for (auto e : q.projection) out << " " << e;
    out << "\n";
  }
  return kOk;
}

int cmd_check_identity(const Options& o, std::ostream& out) {
  const IdentityStatement id = parse_identity(o.identity);
  if (o.mode != "all" && o.mode != "ne") throw InputError("--mode must be 'all' or 'ne'");
  const SatisfactionMode mode = o.mode == "all" ? SatisfactionMode::All : SatisfactionMode::Ne;
  Input in = load(o.file);
  std::optional<Stamp> stamp;
  Monoid monoid = Monoid::trivial();
  ElementSet range;
  if (auto* m = std::get_if<Monoid>(&in.value)) {
    if (mode == SatisfactionMode::Ne) throw InputError("ne-satisfaction needs a stamp or a DFA, not a bare monoid");
    monoid = *m;
    for (Element e = 0; e < m->size(); ++e) range.push_back(e);
  } else {
    stamp = load_stamp(o.file);
    monoid = stamp->monoid();
    range = substitution_range(*stamp, mode);
  }
  const auto violation = find_violation(monoid, range, id);
  if (o.verify && stamp && monoid.size() <= 20) {
    if (oracle::satisfies_by_words(*stamp, id, mode) != !violation.has_value())
      verify_failed("word-substitution check disagrees");
  }
  if (o.json) {
    json j{{"identity", to_string(id)}, {"mode", to_string(mode)}, {"satisfied", !violation}};
    if (violation) j["violation"] = io::to_json(*violation, monoid);
    out << j.dump(2) << "\n";
  } else if (violation) {
    out << "violated: " << to_string(id) << " (" << to_string(mode) << ")\n"
        << "  assignment " << assignment_string(violation->assignment) << ": lhs = " << violation->lhs_value
        << ", rhs = " << violation->rhs_value << "\n";
  } else {
    out << "satisfied: " << to_string(id) << " (" << to_string(mode) << ")\n";
  }
  return violation ? kNegative : kOk;
}

int cmd_variety(const Options& o, std::ostream& out) {
  const Basis basis = builtin_basis(o.name);
  const Stamp s = load_stamp(o.file);
  const ElementSet range = substitution_range(s, basis.mode);
  json failures = json::array();
  std::ostringstream text;
  for (const auto& id : basis.identities) {
    if (auto v = find_violation(s.monoid(), range, id)) {
      failures.push_back({{"identity", to_string(id)}, {"violation", io::to_json(*v, s.monoid())}});
      text << "  fails " << to_string(id) << " at " << assignment_string(v->assignment) << "\n";
    }
    if (o.verify && s.monoid().size() <= 20 &&
        oracle::satisfies_by_words(s, id, basis.mode) != !find_violation(s.monoid(), range, id))
      verify_failed("word-substitution check disagrees on " + to_string(id));
  }
  const bool member = failures.empty();
  if (o.json) {
    out << json{{"variety", basis.name}, {"mode", to_string(basis.mode)}, {"member", member},
                {"monoid_size", s.monoid().size()}, {"failures", failures}}
               .dump(2)
        << "\n";
  } else {
    out << (member ? "in " : "not in ") << basis.name << " (" << to_string(basis.mode)
        << "-satisfaction, monoid size " << s.monoid().size() << ")\n"
        << text.str();
  }
  return member ? kOk : kNegative;
}

int cmd_join_li(const Options& o, std::ostream& out) {
  if (o.name == "J1") (void)in_join_with_li(universal_language(Alphabet::of("a")), o.name);
  const Dfa d = load_dfa(o.file);
  const JoinVerdict v = in_join_with_li(d, o.name);
  if (o.verify) verify_syntactic(d, syntactic_stamp(d));
  if (o.json) {
    out << io::verdict_to_json(v, d).dump(2) << "\n";
  } else {
    out << (v.in_join ? "in " : "not in ") << v.variety << " ∨ LI (both procedures agree; criterion "
        << to_string(v.status) << ")\n"
        << "  monoid size " << v.monoid_size << ", essential quotient size " << v.quotient_size
        << ", stability index " << v.stability_index << "\n";
    if (v.witness)
      out << "  fails " << v.witness->identity << " at " << assignment_string(v.witness->assignment) << "\n";
  }
  return v.in_join ? kOk : kNegative;
}

int cmd_uofe(const Options& o, std::ostream& out) {
  const IdentityStatement wrapped = u_of_e(parse_identity(o.identity));
  if (o.json)
    out << json{{"identity", to_string(wrapped)}, {"mode", "ne"}}.dump(2) << "\n";
  else
    out << to_string(wrapped) << "\n";
  return kOk;
}

int cmd_witness(const Options& o, std::ostream& out) {
  Input in = load(o.file);
  std::optional<Dfa> k_lang;
  std::optional<Dfa> l_lang;
  Alphabet alphabet;
  if (o.kind == "r" || o.kind == "l") {
    auto* f = std::get_if<io::MonomialFile>(&in.value);
    if (!f) throw InputError("witness " + o.kind + " needs a monomial file");
    alphabet = f->alphabet;
    const Word x = alphabet.parse(o.x), y = alphabet.parse(o.y);
    k_lang = o.kind == "r" ? r_witness(alphabet, f->monomials, x, y) : l_witness(alphabet, f->monomials, x, y);
    l_lang = monomial_union(alphabet, f->monomials);
  } else if (o.kind == "j" || o.kind == "group") {
    auto* d = std::get_if<Dfa>(&in.value);
    if (!d) throw InputError("witness " + o.kind + " needs a DFA file");
    alphabet = d->alphabet();
    const Word x = alphabet.parse(o.x), y = alphabet.parse(o.y);
    if (o.kind == "j") {
      if (!o.k_given) throw InputError("witness j needs --k");
      k_lang = j_witness(*d, o.k, x, y, profile_cap());
    } else {
      k_lang = group_witness(*d, x, y);
    }
    l_lang = *d;
  } else {
    throw InputError("witness kind must be r, l, j or group");
  }
  if (o.verify) {
    const Dfa q = word_quotient(*k_lang, alphabet.parse(o.x), alphabet.parse(o.y));
    if (!oracle::approx_equal(q, *l_lang, 10)) verify_failed("x^-1 K y^-1 and L differ on a short word");
  }
  out << io::to_json(minimize(*k_lang)).dump(2) << "\n";
  return kOk;
}

int cmd_demo(const Options& o, std::ostream& out) {
  if (o.demo != "j1") throw InputError("unknown demo '" + o.demo + "' (available: j1)");
  const J1Report r = j1_counterexample_report();
  if (o.json)
    out << io::to_json(r).dump(2) << "\n";
  else
    out << format_report(r);
  return kOk;
}

int cmd_build(const Options& o, std::ostream& out) {
  const Alphabet alphabet = Alphabet::of(o.alphabet);
  const Dfa d = build_family(alphabet, parse_family_spec(alphabet, o.spec));
  out << io::to_json(d).dump(2) << "\n";
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Syntactic monoids, essentially-V stamps and joins with LI", "essv"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--json", o.json, "Machine-readable output");
  app.add_flag("--verify", o.verify, "Cross-check against brute-force oracles");

  auto* synmon = app.add_subcommand("synmon", "Syntactic stamp of a DFA (JSON)");
  synmon->add_option("file", o.file, "DFA JSON")->required();
  auto* stability = app.add_subcommand("stability", "Stability index and eventual image");
  stability->add_option("file", o.file, "DFA or stamp JSON")->required();
  auto* essquo = app.add_subcommand("essquo", "Essential quotient monoid and projection");
  essquo->add_option("file", o.file, "DFA or stamp JSON")->required();
  auto* check = app.add_subcommand("check-identity", "Check an ω-identity");
  check->add_option("identity", o.identity, "e.g. \"x^w y x^w = x^w\"")->required();
  check->add_option("file", o.file, "DFA, stamp or monoid JSON")->required();
  check->add_option("--mode", o.mode, "all or ne")->capture_default_str();
  auto* variety = app.add_subcommand("variety", "Membership of the syntactic monoid in a builtin variety");
  variety->add_option("name", o.name, "Variety name")->required();
  variety->add_option("file", o.file, "DFA or stamp JSON")->required();
  auto* join = app.add_subcommand("join-li", "Membership of a language in V ∨ LI");
  join->add_option("name", o.name, "Variety name")->required();
  join->add_option("file", o.file, "DFA JSON")->required();
  auto* uofe = app.add_subcommand("uofe", "Wrap an identity as x^w y u z t^w = x^w y v z t^w");
  uofe->add_option("identity", o.identity, "u = v")->required();
  auto* witness = app.add_subcommand("witness", "Build K with L = x^-1 K y^-1");
  witness->add_option("kind", o.kind, "r, l, j or group")->required();
  witness->add_option("file", o.file, "Monomial file (r, l) or DFA JSON (j, group)")->required();
  witness->add_option("--x", o.x, "Left word");
  witness->add_option("--y", o.y, "Right word");
  auto* k_opt = witness->add_option("--k", o.k, "Piecewise-testability level (j)");
  auto* demo = app.add_subcommand("demo", "Worked examples");
  demo->add_option("name", o.demo, "j1")->required();
  auto* build = app.add_subcommand("build", "Build a DFA from a language family");
  build->add_option("spec", o.spec, "e.g. prefix(ab), rmono({b} a {a,b})")->required();
  build->add_option("--alphabet", o.alphabet, "Letters, one character each")->capture_default_str();

  std::ostringstream buffer;
  int code = kOk;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    o.k_given = k_opt->count() > 0;
    if (synmon->parsed()) code = cmd_synmon(o, buffer);
    else if (stability->parsed()) code = cmd_stability(o, buffer);
    else if (essquo->parsed()) code = cmd_essquo(o, buffer);
    else if (check->parsed()) code = cmd_check_identity(o, buffer);
    else if (variety->parsed()) code = cmd_variety(o, buffer);
    else if (join->parsed()) code = cmd_join_li(o, buffer);
    else if (uofe->parsed()) code = cmd_uofe(o, buffer);
    else if (witness->parsed()) code = cmd_witness(o, buffer);
    else if (demo->parsed()) code = cmd_demo(o, buffer);
    else if (build->parsed()) code = cmd_build(o, buffer);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  } catch (const ConsistencyError& e) {
    err << "internal consistency failure: " << e.what() << "\n";
    return kInconsistent;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const nlohmann::json::exception& e) {
    err << "error: malformed JSON input: " << e.what() << "\n";
    return kUsage;
  }
  out << buffer.str();
  return code;
}

}  // namespace essv::cli
