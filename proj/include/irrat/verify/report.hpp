#pragma once

#include "irrat/verify/certificate.hpp"

#include "json.hpp"

#include <string>

namespace irrat {

/// Certificate JSON. Integers are decimal strings and rationals "num/den"
/// strings, so no value passes through a machine number.
nlohmann::ordered_json to_json(const Certificate& cert);
Certificate certificate_from_json(const nlohmann::ordered_json& j);

/// One header line plus one line per row; same row data as the JSON.
std::string to_csv(const Certificate& cert);
/// Aligned human-readable table with decimal previews of the residuals.
std::string to_table(const Certificate& cert);

std::string to_string(RowKind kind);
RowKind parse_row_kind(const std::string& text);

}  // namespace irrat
