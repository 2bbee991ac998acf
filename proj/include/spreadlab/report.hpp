#pragma once

#include <string>

#include <json.hpp>

#include "spreadlab/certificates.hpp"
#include "spreadlab/extremal.hpp"
#include "spreadlab/scan.hpp"
#include "spreadlab/spread.hpp"

namespace spreadlab {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

Json to_json(const Complex& z);
Json to_json(const DenseMatrix& a);
Json to_json(const Spectrum& spec);
Json to_json(const SpreadResult& s);
Json to_json(const BoundCertificate& c);
Json to_json(const GammaBreakdown& g);
Json to_json(const SearchReport& r);
/// Summary of a scan; rows are emitted only when `with_rows`.
Json to_json(const ScanTable& t, bool with_rows = false);
Json to_json(const IntervalSet& s);

struct RunReport {
    std::string command;
    Json inputs = Json::object();
    Json results = Json::object();
    double timing_ms = 0.0;
};

/// Fixed field order: schema_version, command, inputs, results, timing_ms.
[[nodiscard]] std::string serialize(const RunReport& report);

} // namespace spreadlab
