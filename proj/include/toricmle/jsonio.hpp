#ifndef TORICMLE_JSONIO_HPP
#define TORICMLE_JSONIO_HPP

#include <string>

#include <json.hpp>

#include "toricmle/birch.hpp"
#include "toricmle/closedform.hpp"
#include "toricmle/lattice.hpp"
#include "toricmle/mldegree.hpp"

namespace toricmle {

/// Deterministic serialization: keys in sorted order (nlohmann's default
/// object ordering), floats printed with 17 significant digits, no locale
/// dependence. Parsing the output and dumping it again is byte-identical.
std::string canonical_dump(const nlohmann::json& j, int indent = -1);

nlohmann::json to_json(const CatalogEntry& e);
/// The whole catalog as a versioned document.
nlohmann::json catalog_json();

nlohmann::json to_json(const ToricModel& model);
nlohmann::json to_json(const MLEResult& r);
nlohmann::json to_json(const ClosedFormResult& r);
nlohmann::json to_json(const PolynomialDiscrepancy& d);
nlohmann::json to_json(const MLDegreeReport& r);

} // namespace toricmle

#endif
