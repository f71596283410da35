/*
   Copyright 2026 The psplit Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef PSPLIT_SERIALIZE_HPP
#define PSPLIT_SERIALIZE_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "psplit/certificate.hpp"
#include "psplit/frattini.hpp"

namespace psplit {

using json = nlohmann::json;

// All *_from_json functions throw ParseError (or the error of the failing
// constructor) on malformed documents.

struct PolynomialInput {
    PPolynomial poly;
    std::vector<std::string> variables;
};

/// {"p":2,"q":2,"variables":["x","y"],"terms":[{"var":"x","height":1,"coeff":"1"}, ...]}
/// with "modulus" (coefficients low to high) required when q > p.
PolynomialInput polynomial_from_json(const json& j);
json polynomial_to_json(const PPolynomial& P, const std::vector<std::string>& variables);

FieldPtr field_from_json(const json& j);

json series_to_json(const LaurentSeries& a);
LaurentSeries series_from_json(const json& j, const FieldPtr& field);

json split_to_json(const SplitCertificate& c);
SplitCertificate split_from_json(const json& j, const FieldPtr& field, std::size_t arity);

json verdict_to_json(const AnisotropyVerdict& v);
AnisotropyVerdict verdict_from_json(const json& j, const FieldPtr& field);

json exclusion_to_json(const ExclusionCertificate& c);
ExclusionCertificate exclusion_from_json(const json& j, const FieldPtr& field);

json certificate_to_json(const Certificate& c);
Certificate certificate_from_json(const json& j);

/// {"order":n,"table":[[...], ...]}, 0-based, row = left factor.
FiniteGroupTable group_from_json(const json& j);
json group_to_json(const FiniteGroupTable& G);

/// Stable text form: sorted keys, two-space indent.
std::string dump(const json& j);

}  // namespace psplit

#endif
