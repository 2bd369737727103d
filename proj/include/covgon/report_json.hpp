// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <json.hpp>

#include "covgon/dimcount.hpp"
#include "covgon/enclosure.hpp"
#include "covgon/feasibility.hpp"
#include "covgon/gonality.hpp"
#include "covgon/primes.hpp"

// JSON views of every report type. Keys are emitted in a fixed order and
// rationals are serialized as canonical "p/q" strings (never floats), so
// identical inputs always produce byte-identical documents.
namespace covgon::json {

using ordered_json = nlohmann::ordered_json;

// Integers become JSON numbers when they fit in 64 bits, decimal strings
// otherwise; rationals are always strings.
ordered_json int_json(const Int& v);
ordered_json rat_json(const Rat& v);

Int int_from_json(const ordered_json& j);
Rat rat_from_json(const ordered_json& j);

ordered_json enclosure_json(const Enclosure& e);
ordered_json certificate_json(const BoundCertificate& cert);
ordered_json selection_json(const PrimeDegreeSelection& sel);
ordered_json constraint_checks_json(const std::vector<ConstraintCheck>& checks);
ordered_json verdict_json(const FeasibilityVerdict& v);
ordered_json induction_json(const InductionReport& r);
ordered_json dimcount_json(const DimCountReport& r);

}  // namespace covgon::json
