#pragma once

#include <string>

#include <json.hpp>

#include "psd/bordering.hpp"
#include "psd/constructions.hpp"
#include "psd/correlation.hpp"
#include "psd/cyclotomy.hpp"
#include "psd/design.hpp"
#include "psd/search.hpp"
#include "psd/tables.hpp"

namespace psd {

using Json = nlohmann::ordered_json;

/// "{d1 | n1, n2, ...}"
std::string profile_text(const CorrelationProfile& p);

Json to_record(const CorrelationProfile& p);
Json to_record(const BinaryMatrix& m);  // list of row strings
Json to_record(const DesignClass& c);
Json to_record(const DifferenceSpectrum& s);
Json to_record(const SOptimalityReport& r);
Json to_record(const VerificationReport& r);
Json to_record(const GoodMatrixReport& r);
Json to_record(const SearchResult& r);
Json to_record(const ObservationReport& r);
Json to_record(const TableRow& r);

}  // namespace psd
