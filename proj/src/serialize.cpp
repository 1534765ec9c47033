#include "puiseux/serialize.hpp"

#include <numeric>

#include "puiseux/errors.hpp"

namespace puiseux::json {

namespace {

[[noreturn]] void bad(const std::string& what) { throw DomainError(what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::uint64_t u64_from(const Json& j, const std::string& what) {
  if (j.is_number_float()) bad(what + ": floats are not accepted, write an integer");
  if (j.is_number_unsigned()) return j.get<std::uint64_t>();
  if (j.is_number_integer()) {
    const auto v = j.get<std::int64_t>();
    if (v < 0) bad(what + ": negative values are not accepted");
    return static_cast<std::uint64_t>(v);
  }
  if (j.is_string()) {
    const Rational q = Rational::parse(j.get<std::string>());
    if (!q.is_integer() || !q.num().fits_ulong_p()) bad(what + ": expected a 64-bit integer");
    return q.num().get_ui();
  }
  bad(what + ": expected an integer");
}

Integer integer_from(const Json& j, const std::string& what) {
  const Rational q = rational_from(j);
  if (!q.is_integer()) bad(what + ": expected an integer, got " + q.to_string());
  return q.num();
}

std::vector<std::uint64_t> u64_list(const Json& j, const std::string& what) {
  if (!j.is_array()) bad(what + ": expected an array");
  std::vector<std::uint64_t> out;
  for (const auto& e : j) out.push_back(u64_from(e, what));
  return out;
}

PrimeForm form_from(const std::string& s) {
  for (auto f : {PrimeForm::Reciprocal, PrimeForm::PredecessorOverPrime, PrimeForm::SquarePlusOneOverPrime}) {
    if (to_string(f) == s) return f;
  }
  bad("unknown prime form \"" + s + "\"; expected \"1/p\", \"(p-1)/p\" or \"(p^2+1)/p\"");
}

PrimeFilter filter_from(const std::string& s) {
  for (auto f : {PrimeFilter::All, PrimeFilter::Odd}) {
    if (to_string(f) == s) return f;
  }
  bad("unknown prime filter \"" + s + "\"; expected \"all\" or \"odd\"");
}

Json scope_json(const CertificateScope& s) {
  return Json{{"xBound", to_json(s.x_bound)}, {"depth", s.depth}, {"elementsChecked", s.elements_checked}};
}

Json rational_list(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& q : v) out.push_back(to_json(q));
  return out;
}

}  // namespace

Rational rational_from(const Json& j) {
  if (j.is_number_float()) {
    bad("floats are not accepted, write an exact fraction such as \"3/2\"");
  }
  if (j.is_number_integer() || j.is_number_unsigned()) {
    if (j.is_number_integer() && !j.is_number_unsigned() && j.get<std::int64_t>() < 0) {
      bad("negative values are not accepted");
    }
    return Rational(j.get<std::uint64_t>());
  }
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  bad("expected a rational such as \"3/2\", got " + j.dump());
}

Json to_json(const Rational& q) { return q.to_string(); }

Json to_json(const Integer& n) {
  if (n.fits_slong_p()) return n.get_si();
  return n.get_str();
}

std::vector<Rational> rationals_from(const Json& j) {
  if (!j.is_array()) bad("expected an array of rationals");
  std::vector<Rational> out;
  for (const auto& e : j) out.push_back(rational_from(e));
  return out;
}

PuiseuxSpec spec_from(const Json& j) {
  const std::string kind = field(j, "kind").get<std::string>();
  if (kind == "finite") return PuiseuxSpec::finite(rationals_from(field(j, "generators")));
  if (kind == "numerical") {
    const NumericalMonoid m = numerical_from(j);
    std::vector<Rational> gens;
    for (auto g : m.generators()) gens.emplace_back(g);
    return PuiseuxSpec::finite(std::move(gens));
  }
  if (kind == "geometric") {
    const Rational r = rational_from(field(j, "ratio"));
    if (j.value("biinfinite", false)) return PuiseuxSpec::biinfinite_geometric(r);
    std::int64_t from = 1;
    if (j.contains("from")) {
      if (!j.at("from").is_number_integer()) bad("\"from\" must be an integer");
      from = j.at("from").get<std::int64_t>();
    }
    return PuiseuxSpec::geometric(r, from);
  }
  if (kind == "primeReciprocal") {
    return PuiseuxSpec::prime_reciprocal(form_from(field(j, "form").get<std::string>()),
                                         filter_from(j.value("primes", std::string("all"))));
  }
  if (kind == "primaryConstruction") {
    std::vector<NumericalMonoid> sn;
    const Json& levels = j.is_object() && j.contains("sn") ? j.at("sn") : field(j, "Sn");
    if (!levels.is_array()) bad("\"Sn\" must be an array of generator lists");
    for (const auto& level : levels) {
      const auto gens = u64_list(level, "Sn");
      sn.emplace_back(std::span<const std::uint64_t>(gens));
    }
    return PuiseuxSpec::primary_construction(integer_from(field(j, "p"), "p"), integer_from(field(j, "q"), "q"),
                                             Polynomial::parse(field(j, "f").get<std::string>()), std::move(sn));
  }
  bad("unknown spec kind \"" + kind + "\"");
}

Json to_json(const PuiseuxSpec& spec) {
  struct Visitor {
    Json operator()(const FiniteGen& f) const {
      return Json{{"kind", "finite"}, {"generators", rational_list(f.generators)}};
    }
    Json operator()(const Geometric& g) const {
      Json j{{"kind", "geometric"}, {"ratio", to_json(g.ratio)}};
      if (g.biinfinite) {
        j["biinfinite"] = true;
      } else {
        j["from"] = g.from;
      }
      return j;
    }
    Json operator()(const PrimeReciprocal& p) const {
      return Json{{"kind", "primeReciprocal"}, {"form", to_string(p.form)}, {"primes", to_string(p.primes)}};
    }
    Json operator()(const PrimaryConstruction& pc) const {
      Json sn = Json::array();
      for (const auto& m : pc.sn) sn.push_back(m.generators());
      return Json{{"kind", "primaryConstruction"}, {"p", to_json(pc.p)}, {"q", to_json(pc.q)},
                  {"f", pc.f.to_string()}, {"Sn", sn}};
    }
  };
  return std::visit(Visitor{}, spec.variant());
}

NumericalMonoid numerical_from(const Json& j) {
  const std::string kind = field(j, "kind").get<std::string>();
  if (kind != "numerical" && kind != "finite") bad("expected a numerical monoid spec");
  std::vector<std::uint64_t> gens;
  for (const auto& e : field(j, "generators")) {
    if (kind == "numerical") {
      gens.push_back(u64_from(e, "generators"));
    } else {
      const Rational q = rational_from(e);
      if (!q.is_integer() || !q.num().fits_ulong_p()) bad("numerical monoids need integer generators");
      gens.push_back(q.num().get_ui());
    }
  }
  if (gens.empty()) bad("a numerical monoid needs at least one generator");
  const std::uint64_t g = std::accumulate(gens.begin(), gens.end(), std::uint64_t{0},
                                          [](std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); });
  if (g != 1) {
    bad("generators of a numerical monoid must have gcd 1 (got gcd " + std::to_string(g) + ")");
  }
  return NumericalMonoid(std::span<const std::uint64_t>(gens));
}

Json to_json(const NumericalMonoid& m) { return Json{{"kind", "numerical"}, {"generators", m.generators()}}; }

Json to_json(const Factorization& f) {
  Json out = Json::array();
  for (const auto& [atom, count] : f.counts()) out.push_back(Json{{"atom", to_json(atom)}, {"count", to_json(count)}});
  return out;
}

Json to_json(const LengthSet& l) {
  Json out = Json::array();
  for (const auto& n : l.values()) out.push_back(to_json(n));
  return out;
}

Json to_json(const MembershipAnswer& a) {
  Json j{{"verdict", to_string(a.verdict)}};
  if (a.yes()) j["witness"] = to_json(a.witness);
  j["reason"] = a.reason;
  if (a.unknown()) j["depthSearched"] = a.depth_searched;
  return j;
}

Json to_json(const Classification& c) {
  return Json{{"transferFinite", c.transfer_finite},
              {"transferKrull", c.transfer_krull},
              {"krull", c.krull},
              {"cMonoid", c.c_monoid}};
}

FiniteAbelianGroup group_from(const Json& j) {
  if (j.is_object()) return FiniteAbelianGroup(u64_list(field(j, "orders"), "orders"));
  if (j.is_number()) return FiniteAbelianGroup({u64_from(j, "orders")});
  return FiniteAbelianGroup(u64_list(j, "orders"));
}

Json to_json(const FiniteAbelianGroup& g) { return Json{{"orders", g.orders()}}; }

GroupElement element_from(const FiniteAbelianGroup& g, const Json& j) {
  GroupElement e = j.is_array() ? u64_list(j, "element") : GroupElement{u64_from(j, "element")};
  g.validate(e);
  return e;
}

Json element_to_json(const GroupElement& e) {
  if (e.size() == 1) return e[0];
  return e;
}

GSequence sequence_from(const FiniteAbelianGroup& g, const Json& j) {
  if (!j.is_array()) bad("a sequence is a JSON array of group elements");
  GSequence x;
  for (const auto& e : j) x.add(element_from(g, e));
  return x;
}

Json to_json(const GSequence& x) {
  Json out = Json::array();
  for (const auto& [g, c] : x.counts()) out.push_back(Json::array({element_to_json(g), c}));
  return out;
}

Json to_json(const CertificateResult& r) {
  if (const auto* c = std::get_if<FinitaryCertificate>(&r)) {
    return Json{{"kind", "scopedCertificate"},
                {"n", to_json(c->n)},
                {"S", rational_list(c->s)},
                {"scope", scope_json(c->scope)}};
  }
  const auto& f = std::get<FailureWitness>(r);
  return Json{{"kind", "failureWitness"},
              {"n", to_json(f.n)},
              {"S", rational_list(f.s)},
              {"scope", scope_json(f.scope)},
              {"x", to_json(f.x)},
              {"firstDepth", f.first_depth},
              {"undecided", f.undecided},
              {"reason", f.reason}};
}

Json to_json(const PowerCertificate& c) {
  Json ids = Json::array();
  for (const auto& id : c.identities) {
    ids.push_back(Json{{"j", id.j}, {"lhs", to_json(id.lhs)}, {"factorization", to_json(id.rhs)}});
  }
  return Json{{"n", to_json(c.n)}, {"S", rational_list(c.s)}, {"identities", ids}};
}

Json to_json(const ConstructionReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    rows.push_back(Json{{"n", row.level}, {"lhs", to_json(row.lhs)}, {"rhs", to_json(row.rhs)}, {"holds", row.holds}});
  }
  return Json{{"spec", to_json(r.spec)},
              {"inequality", rows},
              {"certificate", Json{{"n", to_json(r.certificate_n)},
                                   {"S", rational_list(r.certificate_s)},
                                   {"depth", r.certificate_depth}}}};
}

Json to_json(const RefutationResult& r) {
  if (const auto* v = std::get_if<ValuationRefutation>(&r)) {
    return Json{{"kind", "theoremBackedRefutation"},
                {"n", to_json(v->n)},
                {"S", rational_list(v->s)},
                {"witnessAtom", to_json(v->witness_atom)},
                {"witnessDenominator", to_json(v->witness_denominator)},
                {"witnessIndex", v->witness_index},
                {"argument", v->argument}};
  }
  const auto& n = std::get<NotRefuted>(r);
  return Json{{"kind", "notRefuted"},
              {"n", to_json(n.n)},
              {"S", rational_list(n.s)},
              {"atomsScanned", n.atoms_scanned},
              {"reason", n.reason}};
}

Json to_json(const HomSpec& h) {
  return Json{{"q", to_json(h.q)}, {"domain", to_json(h.domain)}, {"codomain", to_json(h.codomain)}};
}

Json to_json(const HomCheck& h) {
  Json j{{"verdict", to_string(h.verdict)}};
  if (h.witness) j["witness"] = to_json(*h.witness);
  if (h.depth) j["depth"] = h.depth;
  j["reason"] = h.reason;
  return j;
}

Json to_json(const TransferCheck& t) {
  Json j{{"transfer", t.transfer}};
  if (t.witness) j["witness"] = to_json(*t.witness);
  j["reason"] = t.reason;
  return j;
}

Json to_json(const TransferReport& r) {
  Json samples = Json::array();
  for (const auto& s : r.samples) {
    Json j{{"x", to_json(s.x)}};
    if (s.skipped) {
      j["skipped"] = true;
      j["note"] = s.note;
    } else {
      j["atomInDomain"] = s.atom_in_domain;
      j["atomInCodomain"] = s.atom_in_codomain;
      j["lengthsDomain"] = to_json(s.lengths_domain);
      j["lengthsCodomain"] = to_json(s.lengths_codomain);
      j["ok"] = s.ok;
    }
    samples.push_back(std::move(j));
  }
  return Json{{"allOk", r.all_ok}, {"samples", samples}};
}

Json to_json(const AutomorphismSearch& a) {
  Json shifts = Json::array();
  for (auto k : a.shifts) shifts.push_back(k);
  return Json{{"multipliers", rational_list(a.multipliers)},
              {"shifts", shifts},
              {"candidatesTested", a.candidates_tested},
              {"rejected", a.rejected.size()}};
}

Json to_json(const Stabilization& s) {
  return Json{{"m", s.m}, {"terms", s.terms}, {"coefficients", s.coefficients}};
}

}  // namespace puiseux::json
