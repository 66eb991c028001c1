#pragma once

#include <string>

#include <json.hpp>

#include "magicrank/rank.hpp"

namespace magicrank {

/// Rank certificates are self-contained JSON documents tagged by "kind":
/// exact-rank, correlation-bound, frank-decomposition, stab-rank-decomposition.
using RankCertificate = nlohmann::json;

RankCertificate make_certificate(const NonclassicalPoly& P, const Rank2Result& r);
RankCertificate make_certificate(const NonclassicalPoly& P, const CorrelationBound& b);
RankCertificate make_certificate(const PhaseTable& f, unsigned d, const FrankResult& r);
RankCertificate make_certificate(const StateVector& v, const StabRankResult& r);

struct VerifyOutcome {
  bool ok = false;
  std::string detail;
};

/// Re-checks a certificate from its own data: the witness reproduces the target
/// pointwise, and the minimality / inequality claims are recomputed exhaustively.
VerifyOutcome verify_certificate(const RankCertificate& cert, unsigned prec = kDefaultPrecisionBits);

nlohmann::json to_json(const RealValue& v);
nlohmann::json to_json(const std::vector<CycloNumber>& values);
std::vector<CycloNumber> cyclo_vector_from_json(const nlohmann::json& j);
TorusValue parse_torus(std::uint32_t p, const std::string& text);

}  // namespace magicrank
