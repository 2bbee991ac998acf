#include "spreadlab/report.hpp"

#include <cmath>

namespace spreadlab {

namespace {

// JSON has no NaN; absent values are null.
Json real_or_null(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

} // namespace

Json to_json(const Complex& z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

Json to_json(const DenseMatrix& a) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < a.order(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < a.order(); ++j) row.push_back(a(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json to_json(const Spectrum& spec) {
    Json out = Json::array();
    for (const auto& v : spec) out.push_back(to_json(v));
    return out;
}

Json to_json(const SpreadResult& s) {
    Json out;
    out["value"] = s.value;
    out["pair"] = Json::array({to_json(s.pair.first), to_json(s.pair.second)});
    out["pair_kind"] = std::string(to_string(s.pair_kind));
    out["perron"] = real_or_null(s.perron);
    return out;
}

Json to_json(const BoundCertificate& c) {
    Json out;
    out["name"] = c.name;
    out["bound"] = real_or_null(c.bound);
    out["attained"] = real_or_null(c.attained);
    out["slack"] = real_or_null(c.slack);
    out["tolerance"] = c.tolerance;
    out["passed"] = c.passed;
    Json ctx = Json::object();
    for (const auto& [k, v] : c.context) ctx[k] = real_or_null(v);
    out["context"] = std::move(ctx);
    if (!c.detail.empty()) out["detail"] = c.detail;
    return out;
}

Json to_json(const GammaBreakdown& g) {
    Json out;
    out["gamma"] = g.gamma;
    out["addend_perron"] = g.addend_perron;
    out["addend_entry"] = g.addend_entry;
    out["a_hat_total"] = g.a_hat_total;
    out["lambda_max"] = g.lambda_max;
    return out;
}

Json to_json(const SearchReport& r) {
    Json out;
    out["n"] = r.n;
    out["search_space"] = std::string(to_string(r.search_space));
    out["zero_diag"] = r.zero_diag;
    out["best_spread"] = r.best_spread;
    out["best_matrix"] = to_json(r.best_matrix);
    out["is_symmetric"] = r.is_symmetric;
    out["is_01"] = r.is_01;
    out["matrices_examined"] = r.matrices_examined;
    out["ties"] = r.ties;
    if (r.best_code) out["best_code"] = *r.best_code;
    if (r.seed) out["seed"] = *r.seed;
    if (r.restarts) out["restarts"] = *r.restarts;
    return out;
}

Json to_json(const ScanTable& t, bool with_rows) {
    Json out;
    out["eta"] = t.eta;
    out["resolution"] = t.resolution;
    out["max_x"] = t.max_x;
    out["max_value"] = t.max_value;
    out["clamped_rows"] = t.clamped_rows;
    out["degenerate"] = t.degenerate;
    if (with_rows) {
        Json rows = Json::array();
        for (const auto& row : t.rows) rows.push_back(Json::array({row.x, row.f}));
        out["rows"] = std::move(rows);
    }
    return out;
}

Json to_json(const IntervalSet& s) {
    Json out = Json::array();
    for (const auto& iv : s.intervals) out.push_back(Json::array({iv.lo, iv.hi}));
    return out;
}

std::string serialize(const RunReport& report) {
    Json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["command"] = report.command;
    doc["inputs"] = report.inputs;
    doc["results"] = report.results;
    doc["timing_ms"] = report.timing_ms;
    return doc.dump(2) + "\n";
}

} // namespace spreadlab
