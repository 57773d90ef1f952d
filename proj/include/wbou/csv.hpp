#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "wbou/estimation.hpp"
#include "wbou/path_engine.hpp"
#include "wbou/svmodel.hpp"

namespace wbou::csv {

/// Shortest decimal that round-trips; integral values keep a trailing ".0".
std::string format_double(double x);

/// t,x,x_minus,x_plus
void write_path(std::ostream& os, const WbouPath& path);
/// t,y,x,int_x
void write_sv_path(std::ostream& os, const SvPath& path);
/// skip,rv
void write_signature(std::ostream& os, const std::vector<SignaturePoint>& points);

/// Writes a header and rows of equal width.
void write_table(std::ostream& os, const std::vector<std::string>& header,
                 const std::vector<std::vector<double>>& columns);

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<double>> columns;

    /// Column by name; throws DomainError when absent.
    const std::vector<double>& column(const std::string& name) const;
    bool has(const std::string& name) const;
};

/// Numeric CSV with a header row. Throws DomainError on malformed content.
Table read_table(std::istream& is);

/// Levels from a table with an `x` column, optionally with a strictly
/// increasing `t` column.
Series series_from_table(const Table& table);

/// ACF from a table with `lag` and `rho_hat` columns; lags must be 0, 1, 2, ...
AcfEstimate acf_from_table(const Table& table);

/// File helpers; throw IoError when the file cannot be opened.
Table read_table_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace wbou::csv
