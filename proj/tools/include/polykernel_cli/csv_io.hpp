#pragma once

#include <polykernel/errors.hpp>
#include <polykernel/point_set.hpp>

#include <Eigen/Dense>

#include <istream>
#include <ostream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace polykernel::cli {

/// Malformed input; carries the 1-based line number (0 if not tied to a line).
class ParseError : public Error {
public:
    ParseError(const std::string& source, int line, const std::string& what);
    int line() const { return line_; }

private:
    int line_;
};

/// A file could not be opened, read or written.
class IoError : public Error {
public:
    using Error::Error;
};

/// Numeric CSV contents. `names` is empty unless the file has a column-name row.
struct NumericTable {
    std::vector<std::string> names;
    Eigen::MatrixXd data;
};

/// Reads comma-separated numbers. Blank lines and lines starting with '#' are
/// skipped; the first remaining line may hold column names instead of numbers.
NumericTable read_csv(std::istream& in, const std::string& source = "<stream>");
NumericTable read_csv_file(const std::string& path);

/// Points, one per row. An empty file gives an empty set of dimension `empty_dim`.
PointSet read_points(const std::string& path, int empty_dim = 1);
Eigen::MatrixXd read_values(const std::string& path);

/// 17 significant digits; "nan", "inf" and "-inf" for non-finite values.
std::string format_double(double value);

using Cell = std::variant<double, long long, std::string>;

/// Tabular command output plus the settings that produced it.
struct Report {
    std::string command;
    /// Resolved options, in the order given.
    std::vector<std::pair<std::string, std::string>> config;
    /// Scalar results that belong in the header (condition estimates and such).
    std::vector<std::pair<std::string, std::string>> summary;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

/// '#'-prefixed header (tool, version, command, config, summary) when `header`
/// is set, then a column-name row and the data rows.
void write_csv(const Report& report, std::ostream& out, bool header);
void write_json(const Report& report, std::ostream& out);

} // namespace polykernel::cli
