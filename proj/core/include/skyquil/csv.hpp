#pragma once

#include <filesystem>
#include <string>
#include <unordered_map>
#include <vector>

namespace skyquil::csv {

// Minimal CSV support: UTF-8, header row, comma separator, optional quoting.
// All pipeline outputs round-trip through this module so byte formatting is
// consistent across commands.

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    [[nodiscard]] int column(const std::string& name) const;  // -1 if missing
    [[nodiscard]] int require_column(const std::string& name) const;
};

Table read_file(const std::filesystem::path& path);
Table parse(const std::string& text);

void write_file(const std::filesystem::path& path, const Table& table);

std::string format_double(double v);  // deterministic shortest round-trip format

double to_double(const std::string& cell, const std::string& context);
long to_long(const std::string& cell, const std::string& context);
bool to_bool(const std::string& cell, const std::string& context);

}  // namespace skyquil::csv
