#ifndef IVPARETO_IO_HPP
#define IVPARETO_IO_HPP

#include <filesystem>
#include <string>
#include <string_view>

namespace ivpareto {

/// Throws IoError.
std::string read_file(const std::filesystem::path& path);

/// Writes to a sibling temporary file, fsyncs it and renames it over `path`.
void write_file_atomic(const std::filesystem::path& path, std::string_view contents);

}  // namespace ivpareto

#endif  // IVPARETO_IO_HPP
