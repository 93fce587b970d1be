#pragma once

// JSON and plain-text rendering of computation results.

#include <json.hpp>
#include <string>
#include <vector>

#include "pncoh/checkers.hpp"
#include "pncoh/chow.hpp"
#include "pncoh/pfaff.hpp"

namespace pncoh {

using Json = nlohmann::ordered_json;

/// Number when it fits in 64 bits, decimal string otherwise.
Json big_to_json(const BigInt& v);
/// Integer when integral, "p/q" string otherwise.
Json rational_to_json(const Rational& v);

Json to_json(const CohomologyTable& t);
Json to_json(const ChowClass& c);
Json to_json(const PorteousResult& p);
Json to_json(const ENResolutionReport& r);
Json to_json(const ENCertificate& c);
Json to_json(const EulerChase& c);
Json to_json(const TheoremReport& r);
Json to_json(const TwistedOneForm& w);
Json to_json(const SingularScheme& s);
Json to_json(const SectionSpace& s);
Json to_json(const std::vector<AnnihilatorDegree>& a);
Json to_json(const UniquenessReport& u);

std::string render_text(const CohomologyTable& t);
std::string render_text(const PorteousResult& p);
std::string render_text(const ENResolutionReport& r);
std::string render_text(const ENCertificate& c);
std::string render_text(const TheoremReport& r);
std::string render_text(const SingularScheme& s);
std::string render_text(const SectionSpace& s);
std::string render_text(const std::vector<AnnihilatorDegree>& a);
std::string render_text(const UniquenessReport& u);

}  // namespace pncoh
