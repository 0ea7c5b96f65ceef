#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace uavgame {

/// Shortest decimal string that parses back to exactly the same double
/// ('.' separator, locale-independent).
std::string format_double(double value);

/// 64-bit FNV-1a of a byte string, as 16 hex digits.
std::string fnv1a_hex(const std::string& bytes);

/// Minimal CSV assembly: one provenance comment line, a header, then rows.
/// Numeric cells are emitted with round-trip-exact formatting, so identical
/// inputs always produce byte-identical files.
class CsvWriter {
  public:
    CsvWriter(std::string comment, std::vector<std::string> header);

    void add_row(const std::vector<std::string>& cells);
    static std::string cell(double v) { return format_double(v); }
    static std::string cell(std::int64_t v) { return std::to_string(v); }

    std::string str() const;
    void write_file(const std::string& path) const;
    std::size_t rows() const { return rows_; }

  private:
    std::string body_;
    std::size_t columns_;
    std::size_t rows_ = 0;
};

}  // namespace uavgame
