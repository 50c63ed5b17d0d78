#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace plasmon {

// FNV-1a, stable across platforms; used for config and output hashes in manifests.
std::uint64_t fnv1a(const std::string& data);
std::string hex64(std::uint64_t v);

// Deterministic number formatting for CSV cells.
std::string fmt_fixed(double v, int digits);
std::string fmt_sci(double v, int digits = 9);

class CsvWriter {
public:
    explicit CsvWriter(std::vector<std::string> header);
    void row(const std::vector<std::string>& cells);
    const std::string& text() const { return text_; }

private:
    std::size_t columns_;
    std::string text_;
};

std::string read_file(const std::string& path);
// Writes and returns the content hash; throws std::runtime_error on I/O failure.
std::string write_file(const std::string& path, const std::string& content);

}  // namespace plasmon
