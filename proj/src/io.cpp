#include "spreadlab/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "spreadlab/error.hpp"

namespace spreadlab {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t k = 0;
    while (k < line.size()) {
        while (k < line.size() && (line[k] == ' ' || line[k] == '\t' || line[k] == '\r')) ++k;
        const std::size_t start = k;
        while (k < line.size() && line[k] != ' ' && line[k] != '\t' && line[k] != '\r') ++k;
        if (k > start) out.push_back(line.substr(start, k - start));
    }
    return out;
}

bool parse_double(std::string_view field, double& value) {
    if (!field.empty() && field.front() == '+') field.remove_prefix(1);
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    return ec == std::errc() && ptr == field.data() + field.size();
}

} // namespace

DenseMatrix parse_matrix(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t line_no = 0;
    std::vector<std::size_t> numbers;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        ++line_no;
        const auto line = trim(text.substr(pos, end - pos));
        if (!line.empty() && line.front() != '#') {
            lines.push_back(line);
            numbers.push_back(line_no);
        }
        pos = end + 1;
    }
    if (lines.empty()) {
        throw Error(ErrorCode::ParseError, "empty matrix file");
    }
    std::size_t n = 0;
    {
        const auto header = lines.front();
        const auto [ptr, ec] = std::from_chars(header.data(), header.data() + header.size(), n);
        if (ec != std::errc() || ptr != header.data() + header.size() || n == 0) {
            throw Error(ErrorCode::ParseError, "line " + std::to_string(numbers.front()) +
                                                   ": expected a positive order, got '" + std::string(header) + "'");
        }
    }
    if (lines.size() - 1 != n) {
        throw Error(ErrorCode::ParseError,
                    "expected " + std::to_string(n) + " rows, found " + std::to_string(lines.size() - 1));
    }
    std::vector<double> entries;
    entries.reserve(n * n);
    for (std::size_t r = 1; r <= n; ++r) {
        const auto fields = split_fields(lines[r]);
        if (fields.size() != n) {
            throw Error(ErrorCode::ParseError, "line " + std::to_string(numbers[r]) + ": expected " +
                                                   std::to_string(n) + " values, found " +
                                                   std::to_string(fields.size()));
        }
        for (const auto f : fields) {
            double v = 0.0;
            if (!parse_double(f, v) || !std::isfinite(v)) {
                throw Error(ErrorCode::ParseError,
                            "line " + std::to_string(numbers[r]) + ": bad value '" + std::string(f) + "'");
            }
            entries.push_back(v);
        }
    }
    return {n, std::move(entries)};
}

std::string format_real(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string format_matrix(const DenseMatrix& a) {
    std::string out = std::to_string(a.order()) + "\n";
    for (std::size_t i = 0; i < a.order(); ++i) {
        for (std::size_t j = 0; j < a.order(); ++j) {
            if (j) out += ' ';
            out += format_real(a(i, j));
        }
        out += '\n';
    }
    return out;
}

DenseMatrix read_matrix_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorCode::IoError, "cannot open '" + path.string() + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_matrix(ss.str());
}

void write_text_file(const std::filesystem::path& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw Error(ErrorCode::IoError, "cannot write '" + path.string() + "'");
    }
    out << content;
    out.flush();
    if (!out) {
        throw Error(ErrorCode::IoError, "write to '" + path.string() + "' failed");
    }
}

void write_matrix_file(const std::filesystem::path& path, const DenseMatrix& a) {
    write_text_file(path, format_matrix(a));
}

double parse_real(std::string_view text) {
    text = trim(text);
    double value = 0.0;
    if (const auto slash = text.find('/'); slash != std::string_view::npos) {
        double num = 0.0;
        double den = 0.0;
        if (parse_double(trim(text.substr(0, slash)), num) && parse_double(trim(text.substr(slash + 1)), den) &&
            den != 0.0) {
            return num / den;
        }
    } else if (parse_double(text, value) && std::isfinite(value)) {
        return value;
    }
    throw Error(ErrorCode::InvalidArgument, "not a real number: '" + std::string(text) + "'");
}

} // namespace spreadlab
