#pragma once

#include "b3cryst/burau.hpp"
#include "b3cryst/cryst.hpp"
#include "b3cryst/finite_image.hpp"
#include "b3cryst/matrix.hpp"
#include "b3cryst/rewriting.hpp"
#include "b3cryst/stallings.hpp"

#include <json.hpp>

namespace b3cryst {

using Json = nlohmann::ordered_json;

/// Matrices serialize as arrays of row arrays of decimal strings, so that
/// arbitrary-precision entries survive round-trips through JSON readers that
/// only know doubles.
Json to_json(const IntMatrix& m);
Json to_json(const ModMatrix& m);
Json to_json(const GroupFingerprint& f);

/// Group dump: modulus, order, histogram, center order, transversal words.
Json group_report(const FiniteMatrixGroup& g);

/// Context summary: index, Schreier generator count, invariant factors, rank.
Json context_report(const AbelianizationContext& ctx);

Json verdict_report(const CrystPresentation& p, const Verdict& v);
Json torsion_report(const CrystPresentation& p, const TorsionReport& t);

/// Graph dump as a JSON edge list, plus rank and index.
Json graph_report(const SubgroupGraph& g);

}  // namespace b3cryst
