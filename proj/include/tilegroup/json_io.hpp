#pragma once

#include <string>

#include "json.hpp"
#include "tilegroup/modelset.hpp"
#include "tilegroup/pointset.hpp"
#include "tilegroup/presentation.hpp"
#include "tilegroup/psgamma.hpp"
#include "tilegroup/sequences.hpp"
#include "tilegroup/universal.hpp"

namespace tilegroup {

using Json = nlohmann::json;

// Exact numbers travel as strings in the "p/q + r/s*sqrt(d)" form.
Json to_json(const QR& x);
QR qr_from_json(const Json& j);

Json to_json(const WindowSet& w);
WindowSet window_from_json(const Json& j);

Json to_json(const PointSet1D& ps);
Json to_json(const PatternClass& c);
Json to_json(const GxhElement& e);
Json to_json(const Presentation& p);
Json to_json(const AbelianInvariants& a);
Json to_json(const HarvestReport& h);
Json to_json(const CaseReport& r);
Json to_json(const FactorLanguage& lang);

Json to_json(const CutProjectScheme& s);
CutProjectScheme scheme_from_json(const Json& j);

Json to_json(const SequenceSpec& s);
SequenceSpec sequence_from_json(const Json& j);

LengthFunction lengths_from_json(const Json& j);
/// "a=2,b=1/2 + 1/2*sqrt(5)"
LengthFunction parse_lengths(const std::string& text);

Json read_json_file(const std::string& path);

}  // namespace tilegroup
