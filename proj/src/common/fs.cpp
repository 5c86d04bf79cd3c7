#include "priorlens/common/fs.hpp"

#include <atomic>
#include <fstream>
#include <sstream>

#include "priorlens/common/errors.hpp"

namespace priorlens::fs {

namespace stdfs = std::filesystem;

std::string read_file(const stdfs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) raise(ErrorKind::SchemaError, "cannot read file: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::optional<std::string> read_file_if_exists(const stdfs::path& path) {
    std::error_code ec;
    if (!stdfs::exists(path, ec)) return std::nullopt;
    return read_file(path);
}

void atomic_write(const stdfs::path& path, const std::string& content) {
    stdfs::create_directories(path.parent_path());
    static std::atomic<unsigned> counter{0};
    stdfs::path tmp = path;
    tmp += ".tmp" + std::to_string(counter.fetch_add(1));
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) raise(ErrorKind::SchemaError, "cannot write file: " + tmp.string());
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!out) raise(ErrorKind::SchemaError, "short write: " + tmp.string());
    }
    stdfs::rename(tmp, path);
}

} // namespace priorlens::fs
