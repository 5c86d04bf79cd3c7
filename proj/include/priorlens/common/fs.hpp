#pragma once

#include <filesystem>
#include <optional>
#include <string>

namespace priorlens::fs {

std::string read_file(const std::filesystem::path& path);
std::optional<std::string> read_file_if_exists(const std::filesystem::path& path);

// Writes via a temp file in the same directory followed by an atomic rename,
// so concurrent writers of the same content-addressed entry cannot interleave.
void atomic_write(const std::filesystem::path& path, const std::string& content);

} // namespace priorlens::fs
