#include "wbou/csv.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "wbou/error.hpp"

namespace wbou::csv {

std::string format_double(double x) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    std::string s(buf, res.ptr);
    if (std::isfinite(x) && s.find_first_of(".e") == std::string::npos) s += ".0";
    return s;
}

void write_table(std::ostream& os, const std::vector<std::string>& header,
                 const std::vector<std::vector<double>>& columns) {
    for (std::size_t j = 0; j < header.size(); ++j) os << (j ? "," : "") << header[j];
    os << '\n';
    const std::size_t rows = columns.empty() ? 0 : columns.front().size();
    std::string line;
    for (std::size_t i = 0; i < rows; ++i) {
        line.clear();
        for (std::size_t j = 0; j < columns.size(); ++j) {
            if (j) line += ',';
            line += format_double(columns[j][i]);
        }
        line += '\n';
        os << line;
    }
}

void write_path(std::ostream& os, const WbouPath& path) {
    std::vector<double> t(path.grid.points());
    for (std::size_t k = 0; k < t.size(); ++k) t[k] = path.grid.time(k);
    write_table(os, {"t", "x", "x_minus", "x_plus"}, {t, path.x, path.x_minus, path.x_plus});
}

void write_sv_path(std::ostream& os, const SvPath& path) {
    std::vector<double> t(path.grid.points());
    for (std::size_t k = 0; k < t.size(); ++k) t[k] = path.grid.time(k);
    write_table(os, {"t", "y", "x", "int_x"}, {t, path.y, path.x, path.int_x});
}

void write_signature(std::ostream& os, const std::vector<SignaturePoint>& points) {
    os << "skip,rv\n";
    for (const auto& p : points) os << p.skip << ',' << format_double(p.rv) << '\n';
}

const std::vector<double>& Table::column(const std::string& name) const {
    const auto it = std::find(header.begin(), header.end(), name);
    if (it == header.end()) throw DomainError("CSV has no column '" + name + "'");
    return columns[static_cast<std::size_t>(it - header.begin())];
}

bool Table::has(const std::string& name) const {
    return std::find(header.begin(), header.end(), name) != header.end();
}

namespace {

std::string trim(std::string s) {
    const auto b = s.find_first_not_of(" \t\r");
    const auto e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) out.push_back(trim(cell));
    if (!line.empty() && line.back() == ',') out.emplace_back();
    return out;
}

double parse_number(const std::string& cell, std::size_t row) {
    double v = 0.0;
    const auto res = std::from_chars(cell.data(), cell.data() + cell.size(), v);
    if (res.ec != std::errc{} || res.ptr != cell.data() + cell.size()) {
        throw DomainError("CSV row " + std::to_string(row) + ": '" + cell + "' is not a number");
    }
    return v;
}

}  // namespace

Table read_table(std::istream& is) {
    Table t;
    std::string line;
    while (std::getline(is, line) && trim(line).empty()) {
    }
    if (trim(line).empty()) throw DomainError("CSV is empty");
    t.header = split(trim(line));
    t.columns.resize(t.header.size());
    std::size_t row = 1;
    while (std::getline(is, line)) {
        ++row;
        line = trim(line);
        if (line.empty()) continue;
        const auto cells = split(line);
        if (cells.size() != t.header.size()) {
            throw DomainError("CSV row " + std::to_string(row) + " has " + std::to_string(cells.size()) +
                              " fields, header has " + std::to_string(t.header.size()));
        }
        for (std::size_t j = 0; j < cells.size(); ++j) t.columns[j].push_back(parse_number(cells[j], row));
    }
    return t;
}

Series series_from_table(const Table& table) {
    if (table.has("t")) {
        const auto& t = table.column("t");
        for (std::size_t i = 1; i < t.size(); ++i) {
            if (!(t[i] > t[i - 1])) {
                throw DomainError("column t is not strictly increasing at row " + std::to_string(i + 2));
            }
        }
    }
    return Series(table.column("x"));
}

AcfEstimate acf_from_table(const Table& table) {
    const auto& lag = table.column("lag");
    const auto& rho = table.column("rho_hat");
    for (std::size_t i = 0; i < lag.size(); ++i) {
        if (lag[i] != static_cast<double>(i)) throw DomainError("lag column must read 0, 1, 2, ...");
    }
    AcfEstimate out;
    out.rho = rho;
    return out;
}

Table read_table_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "' for reading");
    return read_table(in);
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out << contents;
    if (!out) throw IoError("write to '" + path + "' failed");
}

}  // namespace wbou::csv
