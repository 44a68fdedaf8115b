#pragma once

#include <json.hpp>

#include "eqcoh/cellular.hpp"
#include "eqcoh/coeff.hpp"
#include "eqcoh/cohops.hpp"
#include "eqcoh/decomp.hpp"
#include "eqcoh/poly.hpp"
#include "eqcoh/reps.hpp"
#include "eqcoh/ringstr.hpp"
#include "eqcoh/slice.hpp"

// JSON views of the result types. Objects use std::map, so keys come out sorted.
namespace eqcoh {

using Json = nlohmann::json;

Json to_json(const VirtualRep& v);
Json to_json(const Monomial& m);
Json to_json(const CoeffGroup& g);
Json to_json(const AbelianGroup& g);
Json to_json(const MackeySum& s);
Json to_json(const Decomposition& d);
Json to_json(const CohomologyAnswer& a);
Json to_json(const SliceCertificate& c);
Json to_json(const Poly& p);
Json to_json(const SeriesTerms& s);
Json to_json(const RelationCheck& c);
Json to_json(const InjectivityProfile& p);
Json to_json(const BasisMonomial& b);
Json to_json(const ConjRing& c);
Json to_json(const ObstructionReport& r);

}  // namespace eqcoh
