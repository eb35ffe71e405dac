#pragma once

// Machine-readable forms of polynomials, matrices and reports. Every
// top-level document carries "schema_version"; integers that can exceed
// 64 bits are written as decimal strings.

#include <string>

#include "json.hpp"
#include "tracesign/certificate.hpp"
#include "tracesign/matrix.hpp"
#include "tracesign/poly.hpp"
#include "tracesign/verify.hpp"

namespace tracesign {

inline constexpr int kSchemaVersion = 1;

nlohmann::json json_value(const MultilinearPoly& p);
MultilinearPoly poly_from_json(const nlohmann::json& j);

/// {"a": "...", "c": "...", "b": "...", "d": "..."}
nlohmann::json json_value(const IntMatrix2& m);
IntMatrix2 matrix_from_json(const nlohmann::json& j);

nlohmann::json json_value(const SignPattern& p);

/// Summary block, counterexample when present, per-sigma rows on request.
nlohmann::json json_value(const GoodnessReport& r, bool include_per_sigma = false);

nlohmann::json json_value(const OracleSummary& s);

nlohmann::json json_value(const CertificateReport& r);

/// One row per check block: check,ok,instances,failures.
std::string certificate_csv(const CertificateReport& r);

}  // namespace tracesign
