#pragma once

#include <filesystem>
#include <istream>
#include <string>
#include <string_view>

#include "maxmin/apps.hpp"
#include "maxmin/dense_matrix.hpp"

namespace maxmin {

// Matrix files: one row per line, comma-separated numeric fields (decimal
// or scientific), no header. Blank lines are ignored; a field-count
// mismatch or non-numeric field raises ParseError naming line and column.

DenseMatrix parse_matrix_csv(std::istream& in,
                             std::string_view source_name = "<stream>");
DenseMatrix read_matrix_csv(const std::filesystem::path& path);

/// Entries formatted with 17 significant digits, so write/read round-trips
/// bit-exactly.
std::string format_matrix_csv(const DenseMatrix& m);
void write_matrix_csv(const DenseMatrix& m, const std::filesystem::path& path);

// Geolocation datasets: header `site,Twin,Rwin,Ewin,Tsum,Rsum,Esum`, then
// one row per site with a quoted-or-bare UTF-8 name and six numeric fields.

GeoDataset parse_geo_csv(std::istream& in,
                         std::string_view source_name = "<stream>");
GeoDataset read_geo_csv(const std::filesystem::path& path);

/// Plot-ready scatter rows `site,ax,bx,score`, one per site in input order,
/// with a header line.
std::string format_scatter_csv(const GeoScoreReport& report);
void write_scatter_csv(const GeoScoreReport& report,
                       const std::filesystem::path& path);

}  // namespace maxmin
