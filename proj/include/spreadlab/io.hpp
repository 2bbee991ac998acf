#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "spreadlab/matrix.hpp"

namespace spreadlab {

/// Matrix text format: a line holding n, then n rows of n decimal values.
/// Blank lines and lines starting with '#' are ignored anywhere.
/// Throws ParseError on any deviation.
[[nodiscard]] DenseMatrix parse_matrix(std::string_view text);

/// Emits the format above with 17 significant digits, so parse∘format is the identity.
[[nodiscard]] std::string format_matrix(const DenseMatrix& a);

/// Throws IoError when the file cannot be read, ParseError on bad content.
[[nodiscard]] DenseMatrix read_matrix_file(const std::filesystem::path& path);
void write_matrix_file(const std::filesystem::path& path, const DenseMatrix& a);

void write_text_file(const std::filesystem::path& path, std::string_view content);

/// printf("%.17g")
[[nodiscard]] std::string format_real(double v);

/// Parses a decimal real or a ratio "p/q" (e.g. "1/200"). Throws InvalidArgument.
[[nodiscard]] double parse_real(std::string_view text);

} // namespace spreadlab
