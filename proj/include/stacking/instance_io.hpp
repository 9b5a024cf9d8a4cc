#pragma once

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "stacking/interval.hpp"

namespace stacking {

// Instance text format:
//
//   x,y
//   0.125,0.75
//   ...
//
// UTF-8, header exactly `x,y`, one interval per line in arrival order, values
// written in shortest round-trip form.

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what);
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Round-trip decimal form of a double.
std::string format_double(double v);

void write_instance(std::ostream& os, const Instance& inst);
std::string to_text(const Instance& inst);

// Throws ParseError (with 1-based line) on malformed text, InvalidInstance
// when the parsed windows violate the distinct-endpoint contract.
Instance parse_instance(std::string_view text);

Instance read_instance_file(const std::filesystem::path& path);
void write_instance_file(const std::filesystem::path& path, const Instance& inst);

}  // namespace stacking
