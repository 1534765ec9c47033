#include "puiseux/cli.hpp"

#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "puiseux/blocks.hpp"
#include "puiseux/errors.hpp"
#include "puiseux/factor.hpp"
#include "puiseux/homs.hpp"
#include "puiseux/monoid.hpp"
#include "puiseux/primary.hpp"
#include "puiseux/serialize.hpp"

namespace puiseux::cli {

namespace {

using Json = json::Json;

/// Malformed or unreadable input; maps to exit code 1.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  bool json = false;
  std::string spec;
  std::string domain;
  std::string codomain;
  std::string x;
  std::string n;
  std::string s;
  std::string q;
  std::string p;
  std::string f;
  std::string sn;
  std::string group;
  std::string subset;
  std::string sequence;
  std::string terms;
  std::string samples;
  std::size_t depth = 8;
  std::string bound = "100";
  std::size_t window = 2;
  std::size_t cap = 100;
  std::size_t power = 3;
  std::uint64_t modulus = 0;
};

Json parse_json_text(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError("malformed JSON in " + what + " at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

/// Inline JSON, or a path to a file holding it.
Json load_json(const std::string& arg, const std::string& what) {
  if (arg.empty()) throw DomainError("missing --" + what);
  const auto first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) return parse_json_text(arg, what);
  std::ifstream in(arg);
  if (!in) throw InputError("cannot read " + what + " file '" + arg + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_json_text(buf.str(), what + " file '" + arg + "'");
}

/// A JSON array, or a comma-separated list of bare values.
Json load_list(const std::string& arg, const std::string& what) {
  if (arg.empty()) throw DomainError("missing --" + what);
  if (arg.find('[') != std::string::npos) return parse_json_text(arg, what);
  Json out = Json::array();
  std::stringstream in(arg);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(item);
  return out;
}

Rational load_rational(const std::string& arg, const std::string& what) {
  if (arg.empty()) throw DomainError("missing --" + what);
  return Rational::parse(arg);
}

Integer load_integer(const std::string& arg, const std::string& what) {
  const Rational q = load_rational(arg, what);
  if (!q.is_integer()) throw DomainError("--" + what + " must be an integer, got " + q.to_string());
  return q.num();
}

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

/// Aligned "key  value" lines; nested values are printed as compact JSON.
void render_text(const Json& result, std::ostream& out) {
  std::size_t width = 0;
  for (const auto& [key, value] : result.items()) width = std::max(width, key.size());
  for (const auto& [key, value] : result.items()) {
    out << std::left << std::setw(static_cast<int>(width)) << key << "  " << scalar_text(value) << '\n';
  }
}

struct Outcome {
  Json body;
  bool unknown = false;
  std::string evidence;  // text mode only
};

void echo_family_params(Json& body, const PuiseuxSpec& spec, const Options& o, bool with_bound) {
  if (spec.is_finite()) return;
  body["depth"] = o.depth;
  if (with_bound) body["bound"] = o.bound;
}

Outcome cmd_member(const Options& o) {
  const PuiseuxSpec spec = json::spec_from(load_json(o.spec, "spec"));
  const Rational x = load_rational(o.x, "x");
  const MembershipAnswer a = member(spec, x, o.depth);
  Json body{{"x", json::to_json(x)}};
  const Json answer = json::to_json(a);
  for (const auto& [k, v] : answer.items()) body[k] = v;
  echo_family_params(body, spec, o, false);
  return {body, a.unknown()};
}

Outcome cmd_atoms(const Options& o) {
  const PuiseuxSpec spec = json::spec_from(load_json(o.spec, "spec"));
  Json body;
  try {
    Json atoms = Json::array();
    for (const auto& a : atoms_up_to(spec, o.depth)) atoms.push_back(json::to_json(a));
    body["atoms"] = atoms;
    echo_family_params(body, spec, o, false);
    return {body, false};
  } catch (const AtomicityUnknown& e) {
    body["verdict"] = "unknown";
    body["reason"] = e.what();
    return {body, true};
  }
}

Outcome cmd_factor(const Options& o) {
  const PuiseuxSpec spec = json::spec_from(load_json(o.spec, "spec"));
  const Rational x = load_rational(o.x, "x");
  Json all = Json::array();
  for (const auto& f : factorizations(spec, x)) all.push_back(json::to_json(f));
  return {Json{{"factorizations", all}}};
}

Outcome cmd_lengths(const Options& o) {
  const PuiseuxSpec spec = json::spec_from(load_json(o.spec, "spec"));
  return {Json{{"lengths", json::to_json(length_set(spec, load_rational(o.x, "x")))}}};
}

Outcome cmd_elasticity(const Options& o) {
  const PuiseuxSpec spec = json::spec_from(load_json(o.spec, "spec"));
  return {Json{{"elasticity", json::to_json(elasticity(spec, load_rational(o.x, "x")))}}};
}

Outcome cmd_frobenius(const Options& o) {
  const NumericalMonoid m = json::numerical_from(load_json(o.spec, "spec"));
  return {Json{{"frobenius", m.frobenius()}}};
}

Outcome cmd_apery(const Options& o) {
  const NumericalMonoid m = json::numerical_from(load_json(o.spec, "spec"));
  const std::uint64_t mod = o.modulus ? o.modulus : m.multiplicity();
  return {Json{{"m", mod}, {"apery", m.apery_set(mod)}}};
}

Outcome cmd_classify(const Options& o) {
  const Classification c = classify(json::spec_from(load_json(o.spec, "spec")));
  return {json::to_json(c), false, c.evidence};
}

Outcome cmd_certify(const Options& o) {
  const PuiseuxSpec spec = json::spec_from(load_json(o.spec, "spec"));
  Integer n;
  std::vector<Rational> s;
  Json power;
  if (o.n.empty() && o.s.empty()) {
    const auto* g = std::get_if<Geometric>(&spec.variant());
    if (!g || g->biinfinite || g->from != 1) {
      throw DomainError("--n and --S are required unless the spec is <r^k : k >= 1>");
    }
    const PowerCertificate pc = mcyclic_certificate(g->ratio, o.power);
    n = pc.n;
    s = pc.s;
    power = json::to_json(pc);
  } else {
    n = load_integer(o.n, "n");
    s = json::rationals_from(load_list(o.s, "S"));
  }
  const auto result = verify_finitary_certificate(spec, n, s, load_rational(o.bound, "bound"), o.depth);
  Json body = json::to_json(result);
  if (!power.is_null()) body["powerIdentities"] = power["identities"];
  const auto* failure = std::get_if<FailureWitness>(&result);
  return {body, failure && failure->undecided};
}

Outcome cmd_refute(const Options& o) {
  const PuiseuxSpec spec = json::spec_from(load_json(o.spec, "spec"));
  const auto r = refute_strongly_primary(spec, load_integer(o.n, "n"), json::rationals_from(load_list(o.s, "S")));
  return {json::to_json(r)};
}

Outcome cmd_build(const Options& o) {
  std::vector<NumericalMonoid> sn;
  const Json levels = load_list(o.sn, "sn");
  if (!levels.is_array() || levels.empty()) throw DomainError("--sn must be a nonempty list of generator lists");
  // A flat list such as [3,5] means a single constant level.
  const Json nested = levels.front().is_array() ? levels : Json::array({levels});
  for (const auto& level : nested) {
    sn.push_back(json::numerical_from(Json{{"kind", "numerical"}, {"generators", level}}));
  }
  const ConstructionReport r = build_primary_construction(
      load_integer(o.p, "p"), load_integer(o.q, "q"), Polynomial::parse(o.f.empty() ? "n" : o.f), std::move(sn),
      o.depth);
  Json body = json::to_json(r);
  body["depth"] = o.depth;
  return {body};
}

Outcome cmd_hom_check(const Options& o) {
  const HomSpec h{load_rational(o.q, "q"), json::spec_from(load_json(o.domain, "domain")),
                  json::spec_from(load_json(o.codomain, "codomain"))};
  const HomCheck c = check_hom(h.q, h.domain, h.codomain, o.depth);
  Json body{{"hom", json::to_json(h)}};
  const Json check = json::to_json(c);
  for (const auto& [k, v] : check.items()) body[k] = v;
  return {body, c.verdict == HomVerdict::Unknown};
}

Outcome cmd_transfer_check(const Options& o) {
  const TransferCheck t = is_transfer(load_rational(o.q, "q"), json::spec_from(load_json(o.domain, "domain")),
                                      json::spec_from(load_json(o.codomain, "codomain")));
  return {json::to_json(t)};
}

Outcome cmd_transfer_verify(const Options& o) {
  const auto report = verify_transfer_properties(
      load_rational(o.q, "q"), json::spec_from(load_json(o.domain, "domain")),
      json::spec_from(load_json(o.codomain, "codomain")), json::rationals_from(load_list(o.samples, "samples")));
  return {json::to_json(report)};
}

Outcome cmd_aut_search(const Options& o) {
  const auto a = automorphism_search(json::spec_from(load_json(o.spec, "spec")), o.window);
  Json body = json::to_json(a);
  body["window"] = o.window;
  return {body};
}

FiniteAbelianGroup group_of(const Options& o) { return json::group_from(load_list(o.group, "group")); }

std::vector<GroupElement> subset_of(const FiniteAbelianGroup& g, const Options& o) {
  if (o.subset.empty()) return g.elements();
  std::vector<GroupElement> out;
  for (const auto& e : load_list(o.subset, "subset")) {
    out.push_back(json::element_from(g, e.is_string() ? Json(std::stoull(e.get<std::string>())) : e));
  }
  return out;
}

Json sequence_json(const Options& o) {
  Json seq = load_list(o.sequence, "sequence");
  for (auto& e : seq) {
    if (e.is_string()) e = std::stoull(e.get<std::string>());
  }
  return seq;
}

Outcome cmd_block_atoms(const Options& o) {
  const FiniteAbelianGroup g = group_of(o);
  Json atoms = Json::array();
  for (const auto& a : block_atoms(g, subset_of(g, o))) atoms.push_back(json::to_json(a));
  return {Json{{"group", json::to_json(g)}, {"atoms", atoms}}};
}

Outcome cmd_block_factor(const Options& o) {
  const FiniteAbelianGroup g = group_of(o);
  const auto subset = subset_of(g, o);
  const GSequence x = json::sequence_from(g, sequence_json(o));
  Json all = Json::array();
  LengthSet lengths;
  for (const auto& f : block_factorizations(g, subset, x)) {
    Json one = Json::array();
    for (const auto& a : f) one.push_back(json::to_json(a));
    all.push_back(one);
    lengths.insert(Integer(static_cast<unsigned long>(f.size())));
  }
  return {Json{{"factorizations", all}, {"lengths", json::to_json(lengths)}}};
}

Outcome cmd_davenport(const Options& o) {
  const FiniteAbelianGroup g = group_of(o);
  return {Json{{"group", json::to_json(g)}, {"davenport", davenport(g)}}};
}

Outcome cmd_gcd_lemma(const Options& o) {
  std::vector<std::uint64_t> terms;
  for (const auto& e : load_list(o.terms, "terms")) {
    terms.push_back(e.is_string() ? std::stoull(e.get<std::string>()) : e.get<std::uint64_t>());
  }
  Json body = json::to_json(gcd_stabilization(from_list(std::move(terms)), o.cap));
  body["cap"] = o.cap;
  return {body};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations in Puiseux, numerical and block monoids"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json, "Emit compact JSON");

  using Handler = std::function<Outcome(const Options&)>;
  std::map<CLI::App*, Handler> handlers;
  auto command = [&](const std::string& name, const std::string& help, Handler h) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_flag("--json", o.json, "Emit compact JSON");
    handlers[sub] = std::move(h);
    return sub;
  };
  auto with_spec = [&](CLI::App* sub) { sub->add_option("--spec", o.spec, "Spec JSON or a file holding it"); };
  auto with_x = [&](CLI::App* sub) { sub->add_option("--x", o.x, "Element, e.g. \"3/2\""); };
  auto with_depth = [&](CLI::App* sub) { sub->add_option("--depth", o.depth, "Truncation depth")->capture_default_str(); };
  auto with_hom = [&](CLI::App* sub) {
    sub->add_option("--q", o.q, "Multiplier");
    sub->add_option("--domain", o.domain, "Domain spec");
    sub->add_option("--codomain", o.codomain, "Codomain spec");
  };
  auto with_group = [&](CLI::App* sub) {
    sub->add_option("--group", o.group, "Cyclic factor orders, e.g. [2,2]");
  };

  auto* c = command("member", "Decide membership", cmd_member);
  with_spec(c), with_x(c), with_depth(c);
  c = command("atoms", "List atoms", cmd_atoms);
  with_spec(c), with_depth(c);
  c = command("factor", "All factorizations of x", cmd_factor);
  with_spec(c), with_x(c);
  c = command("lengths", "Length set of x", cmd_lengths);
  with_spec(c), with_x(c);
  c = command("elasticity", "max L(x) / min L(x)", cmd_elasticity);
  with_spec(c), with_x(c);
  c = command("frobenius", "Frobenius number", cmd_frobenius);
  with_spec(c);
  c = command("apery", "Apery set", cmd_apery);
  with_spec(c);
  c->add_option("--m", o.modulus, "Element of the monoid (default: multiplicity)");
  c = command("classify", "Transfer and Krull classification", cmd_classify);
  with_spec(c);
  c = command("certify-primary", "Check a finitary certificate (n, S) within a bound", cmd_certify);
  with_spec(c), with_depth(c);
  c->add_option("--n", o.n, "Multiplier n");
  c->add_option("--S", o.s, "Finite set S");
  c->add_option("--bound", o.bound, "Largest x checked")->capture_default_str();
  c->add_option("--J", o.power, "Powers checked in the r-power identity")->capture_default_str();
  c = command("refute-primary", "Valuation refutation of a candidate (n, S)", cmd_refute);
  with_spec(c);
  c->add_option("--n", o.n, "Multiplier n");
  c->add_option("--S", o.s, "Finite set S");
  c = command("build-construction", "Validate the growth construction", cmd_build);
  c->add_option("--p", o.p, "Denominator base p");
  c->add_option("--q", o.q, "Numerator base q");
  c->add_option("--f", o.f, "Exponent polynomial, e.g. n^2");
  c->add_option("--sn", o.sn, "Numerical monoids S_n, e.g. [[3,5]]");
  with_depth(c);
  c = command("hom-check", "Check that multiplication by q maps M into N", cmd_hom_check);
  with_hom(c), with_depth(c);
  c = command("transfer-check", "Decide whether q*M = N", cmd_transfer_check);
  with_hom(c);
  c = command("transfer-verify", "Compare atoms and length sets across a transfer", cmd_transfer_verify);
  with_hom(c);
  c->add_option("--samples", o.samples, "Elements of M to check");
  c = command("aut-search", "Automorphisms of <r^n : n in Z> within a window", cmd_aut_search);
  with_spec(c);
  c->add_option("--window", o.window, "Largest |k| for r^k")->capture_default_str();
  c = command("block-atoms", "Minimal zero-sum sequences", cmd_block_atoms);
  with_group(c);
  c->add_option("--subset", o.subset, "Allowed elements G0 (default: the whole group)");
  c = command("block-factor", "Factorizations of a zero-sum sequence", cmd_block_factor);
  with_group(c);
  c->add_option("--subset", o.subset, "Allowed elements G0 (default: the whole group)");
  c->add_option("--sequence", o.sequence, "Terms of the sequence");
  c = command("davenport", "Davenport constant", cmd_davenport);
  with_group(c);
  c = command("gcd-lemma", "Least m with a_{m+1} in <a_1..a_m>", cmd_gcd_lemma);
  c->add_option("--terms", o.terms, "Sequence terms");
  c->add_option("--cap", o.cap, "Largest m scanned")->capture_default_str();

  std::vector<std::string> argv_storage{"puiseux"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kDomainError;
  }

  CLI::App* chosen = app.get_subcommands().front();
  try {
    const Outcome result = handlers.at(chosen)(o);
    if (o.json) {
      out << result.body.dump() << '\n';
    } else {
      render_text(result.body, out);
      if (!result.evidence.empty()) out << "evidence" << "  " << result.evidence << '\n';
    }
    return result.unknown ? kUnknown : kOk;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const ConstructionError& e) {
    err << "error: construction fails at n = " << e.index() << ": " << e.what() << '\n';
    return kDomainError;
  } catch (const ScanCapError& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  }
}

}  // namespace puiseux::cli
