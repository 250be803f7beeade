#pragma once

#include <nlohmann/json.hpp>

#include "milnor/analysis.hpp"
#include "milnor/fuzz.hpp"
#include "milnor/lemmas.hpp"

// Report rendering shared by the CLI and the test suites. JSON carries every
// numeric invariant as an exact integer or the string "infinity"; no floating
// point anywhere. Key order is fixed (ordered_json) so reruns are
// byte-identical. The text renderers print the same values.

namespace milnor {

using Json = nlohmann::ordered_json;

Json to_json(const ExtNat& n);  // integer or "infinity"
Json to_json(const AnalysisReport& r);
Json to_json(const Thm14Result& r);
Json to_json(const LemmaReport& r);
Json to_json(const ProductIdentityResult& r);
Json to_json(const ContactBoundResult& r);
Json to_json(const FuzzSummary& s);

std::string to_text(const AnalysisReport& r);
std::string to_text(const Thm14Result& r);
std::string to_text(const LemmaReport& r);
std::string to_text(const ProductIdentityResult& r);
std::string to_text(const ContactBoundResult& r);
std::string to_text(const FuzzSummary& s);

}  // namespace milnor
