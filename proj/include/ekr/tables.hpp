#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ekr/spectral.hpp"

namespace ekr {

enum class Format { Json, Csv, Text };

/// Throws ConfigError for anything other than json, csv, text.
Format parse_format(std::string_view name);

/// Rows of JSON scalars under named columns.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<nlohmann::json>> rows;
};

std::string render(const Table& table, Format format);

/// Names accepted by make_table.
const std::vector<std::string>& table_names();

/// classes, irreps, eta, derangements, sigma, spectrum, characters, eigentable.
/// Throws ConfigError on an unknown name.
Table make_table(const Context& ctx, std::string_view which);

/// {"num": .., "den": ..}
nlohmann::json rational_json(const Rational& r);

/// Certificate in its JSON form. The timestamp is the only field that varies
/// between identical runs; pass false to leave it out.
nlohmann::json certificate_json(const Certificate& cert, bool with_timestamp = true);

std::string utc_timestamp();

}  // namespace ekr
