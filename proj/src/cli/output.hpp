#pragma once

#include <initializer_list>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace finkin::cli {

inline constexpr const char* kToolName = "finkin";
inline constexpr const char* kToolVersion = "0.1.0";

// Shortest round-trip decimal form; identical input gives identical text.
std::string format_number(double value);

// Comma-separated, one header row, LF line endings.
class CsvWriter {
public:
    explicit CsvWriter(std::initializer_list<std::string_view> header);

    void row(std::initializer_list<double> values);
    void row(const std::vector<std::string>& fields);

    const std::string& str() const { return text_; }

private:
    std::size_t columns_;
    std::string text_;
};

nlohmann::json meta_block(const std::vector<std::string>& args);

// Writes text to path, or to `console` for "" / "-". Throws IoError on failure.
void write_output(const std::string& path, const std::string& text, std::ostream& console);

}  // namespace finkin::cli
