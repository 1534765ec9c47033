#pragma once

// JSON encodings of specs, factorizations, groups, sequences and the
// evidence objects. Rationals travel as strings such as "3/2"; plain
// nonnegative JSON integers are accepted on input, floats never.

#include <string>
#include <vector>

#include "json.hpp"
#include "puiseux/blocks.hpp"
#include "puiseux/factorization.hpp"
#include "puiseux/homs.hpp"
#include "puiseux/monoid.hpp"
#include "puiseux/numerical.hpp"
#include "puiseux/primary.hpp"
#include "puiseux/spec.hpp"

namespace puiseux::json {

using Json = nlohmann::ordered_json;

Rational rational_from(const Json& j);
Json to_json(const Rational& q);
Json to_json(const Integer& n);
std::vector<Rational> rationals_from(const Json& j);

PuiseuxSpec spec_from(const Json& j);
Json to_json(const PuiseuxSpec& spec);
/// Accepts {"kind":"numerical",...} and finite specs of integers with gcd 1.
NumericalMonoid numerical_from(const Json& j);
Json to_json(const NumericalMonoid& m);

Json to_json(const Factorization& f);
Json to_json(const LengthSet& l);
Json to_json(const MembershipAnswer& a);
Json to_json(const Classification& c);

FiniteAbelianGroup group_from(const Json& j);
Json to_json(const FiniteAbelianGroup& g);
GroupElement element_from(const FiniteAbelianGroup& g, const Json& j);
Json element_to_json(const GroupElement& e);
/// Input: a plain list of terms. Output: sorted [element, count] pairs.
GSequence sequence_from(const FiniteAbelianGroup& g, const Json& j);
Json to_json(const GSequence& x);

Json to_json(const CertificateResult& r);
Json to_json(const PowerCertificate& c);
Json to_json(const ConstructionReport& r);
Json to_json(const RefutationResult& r);
Json to_json(const HomSpec& h);
Json to_json(const HomCheck& h);
Json to_json(const TransferCheck& t);
Json to_json(const TransferReport& r);
Json to_json(const AutomorphismSearch& a);
Json to_json(const Stabilization& s);

}  // namespace puiseux::json
