#include "polykernel_cli/csv_io.hpp"

#include <polykernel/version.hpp>

#include <json.hpp>

#include <charconv>
#include <cmath>
#include <fstream>
#include <type_traits>
#include <string_view>

namespace polykernel::cli {

namespace {

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_fields(std::string_view line)
{
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        fields.push_back(trim(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start)));
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return fields;
}

bool parse_number(std::string_view field, double& value)
{
    if (field.empty())
        return false;
    if (field.front() == '+')
        field.remove_prefix(1);
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    return ec == std::errc() && ptr == field.data() + field.size();
}

std::ifstream open_input(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open '" + path + "' for reading");
    return in;
}

} // namespace

ParseError::ParseError(const std::string& source, int line, const std::string& what)
    : Error(source + (line > 0 ? ":" + std::to_string(line) : std::string()) + ": " + what)
    , line_(line)
{
}

NumericTable read_csv(std::istream& in, const std::string& source)
{
    NumericTable table;
    std::vector<std::vector<double>> rows;
    std::size_t width = 0;
    bool seen_content = false;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string_view text = trim(line);
        if (text.empty() || text.front() == '#')
            continue;
        const auto fields = split_fields(text);
        std::vector<double> values(fields.size());
        std::size_t numeric = 0;
        for (std::size_t k = 0; k < fields.size(); ++k)
            if (parse_number(fields[k], values[k]))
                ++numeric;

        if (!seen_content && numeric == 0) {
            for (auto f : fields)
                table.names.emplace_back(f);
            width = fields.size();
            seen_content = true;
            continue;
        }
        if (numeric != fields.size()) {
            for (std::size_t k = 0; k < fields.size(); ++k)
                if (!parse_number(fields[k], values[k]))
                    throw ParseError(source, line_no,
                                     "field " + std::to_string(k + 1) + " is not a number: '" + std::string(fields[k]) + "'");
        }
        if (seen_content && fields.size() != width)
            throw ParseError(source, line_no,
                             "expected " + std::to_string(width) + " fields, found " + std::to_string(fields.size()));
        width = fields.size();
        seen_content = true;
        rows.push_back(std::move(values));
    }
    if (in.bad())
        throw IoError("error while reading '" + source + "'");

    table.data.resize(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(width));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t k = 0; k < width; ++k)
            table.data(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = rows[i][k];
    return table;
}

NumericTable read_csv_file(const std::string& path)
{
    auto in = open_input(path);
    return read_csv(in, path);
}

PointSet read_points(const std::string& path, int empty_dim)
{
    const NumericTable table = read_csv_file(path);
    if (table.data.rows() == 0)
        return PointSet(table.data.cols() > 0 ? static_cast<int>(table.data.cols()) : empty_dim);
    if (!table.data.allFinite())
        throw ParseError(path, 0, "point coordinates must be finite");
    return PointSet(PointMatrix(table.data));
}

Eigen::MatrixXd read_values(const std::string& path)
{
    return read_csv_file(path).data;
}

std::string format_double(double value)
{
    if (std::isnan(value))
        return "nan";
    if (std::isinf(value))
        return value > 0 ? "inf" : "-inf";
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 17);
    return std::string(buf, ptr);
}

void write_csv(const Report& report, std::ostream& out, bool header)
{
    if (header) {
        out << "# polykernel " << kVersion << '\n';
        out << "# command = " << report.command << '\n';
        for (const auto& [key, value] : report.config)
            out << "# " << key << " = " << value << '\n';
        for (const auto& [key, value] : report.summary)
            out << "# " << key << " = " << value << '\n';
    }
    for (std::size_t k = 0; k < report.columns.size(); ++k)
        out << (k ? "," : "") << report.columns[k];
    out << '\n';
    for (const auto& row : report.rows) {
        for (std::size_t k = 0; k < row.size(); ++k) {
            if (k)
                out << ',';
            std::visit(
                [&](const auto& v) {
                    using T = std::decay_t<decltype(v)>;
                    if constexpr (std::is_same_v<T, double>)
                        out << format_double(v);
                    else
                        out << v;
                },
                row[k]);
        }
        out << '\n';
    }
}

void write_json(const Report& report, std::ostream& out)
{
    nlohmann::ordered_json doc;
    doc["tool"] = "polykernel";
    doc["version"] = std::string(kVersion);
    doc["command"] = report.command;
    doc["config"] = nlohmann::ordered_json::object();
    for (const auto& [key, value] : report.config)
        doc["config"][key] = value;
    doc["summary"] = nlohmann::ordered_json::object();
    for (const auto& [key, value] : report.summary)
        doc["summary"][key] = value;
    doc["columns"] = report.columns;
    auto rows = nlohmann::ordered_json::array();
    for (const auto& row : report.rows) {
        auto r = nlohmann::ordered_json::array();
        for (const auto& cell : row)
            std::visit([&](const auto& v) { r.push_back(v); }, cell);
        rows.push_back(std::move(r));
    }
    doc["rows"] = std::move(rows);
    out << doc.dump(2) << '\n';
}

} // namespace polykernel::cli
