#include "cli/output.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "finkin/error.hpp"

namespace finkin::cli {

std::string format_number(double value) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, res.ptr);
}

CsvWriter::CsvWriter(std::initializer_list<std::string_view> header) : columns_(header.size()) {
    bool first = true;
    for (auto h : header) {
        if (!first) text_ += ',';
        text_ += h;
        first = false;
    }
    text_ += '\n';
}

void CsvWriter::row(std::initializer_list<double> values) {
    if (values.size() != columns_) throw std::logic_error("csv row width mismatch");
    bool first = true;
    for (double v : values) {
        if (!first) text_ += ',';
        text_ += format_number(v);
        first = false;
    }
    text_ += '\n';
}

void CsvWriter::row(const std::vector<std::string>& fields) {
    if (fields.size() != columns_) throw std::logic_error("csv row width mismatch");
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) text_ += ',';
        text_ += fields[i];
    }
    text_ += '\n';
}

nlohmann::json meta_block(const std::vector<std::string>& args) {
    std::string command_line = kToolName;
    for (const auto& a : args) {
        command_line += ' ';
        command_line += a;
    }
    return {{"tool", kToolName}, {"version", kToolVersion}, {"command_line", command_line}};
}

void write_output(const std::string& path, const std::string& text, std::ostream& console) {
    if (path.empty() || path == "-") {
        console << text;
        console.flush();
        if (!console) throw IoError("failed writing to the console");
        return;
    }
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) throw IoError("cannot open " + path + " for writing");
    file << text;
    file.close();
    if (!file) throw IoError("failed writing " + path);
}

}  // namespace finkin::cli
