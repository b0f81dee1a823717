#pragma once

#include <json.hpp>

#include "superdirac/lifting.hpp"
#include "superdirac/superalg.hpp"

namespace superdirac {

/// Insertion-ordered JSON keeps every serialization byte-reproducible.
using Json = nlohmann::ordered_json;

Json weight_json(const Weight& w);                 // {"2lambda": [...]}
Weight weight_from_json(const Json& j);

Json character_json(const FormalCharacter& f);     // [{"2exp":[...],"coef":".."}]
FormalCharacter character_from_json(const Json& j, std::size_t rank);

Json series_json(const TruncatedSeries& s);
TruncatedSeries series_from_json(const Json& j);

Json record_json(const IrreducibleCharacterRecord& rec);

Json parameter_json(const HarishChandraParameter& p);

Json lift_certificate_json(const LiftCertificate& c);

Json dirac_index_certificate_json(const DiracIndexCertificate& c);

Json transfer_factor_certificate_json(const TransferFactorCertificate& c);

Json dirac_square_certificate_json(const DiracSquareCertificate& c);

Json kostant_certificate_json(const KostantCertificate& c);

Json bijection_report_json(const BijectionReport& r);

Json tensor_element_json(const TensorElement& t);

Json cohomology_json(const DiracCohomologyResult& r);

Json multiplicities_json(const MultiplicityMap& m);

}  // namespace superdirac
