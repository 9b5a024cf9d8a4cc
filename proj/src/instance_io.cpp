#include "stacking/instance_io.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>

namespace stacking {

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

std::string format_double(double v) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    if (ec != std::errc()) throw std::logic_error("format_double: buffer too small");
    return std::string(buf, ptr);
}

void write_instance(std::ostream& os, const Instance& inst) {
    os << "x,y\n";
    for (const auto& iv : inst) {
        os << format_double(iv.start) << ',' << format_double(iv.end) << '\n';
    }
}

std::string to_text(const Instance& inst) {
    std::ostringstream os;
    write_instance(os, inst);
    return os.str();
}

namespace {

double parse_field(std::string_view field, std::size_t line_no) {
    if (field.empty()) throw ParseError(line_no, "empty field");
    // from_chars rejects a leading '+', accept it as a decimal literal would
    if (field.front() == '+') field.remove_prefix(1);
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    if (ec != std::errc() || ptr != field.data() + field.size()) {
        throw ParseError(line_no, "not a decimal number: '" + std::string(field) + "'");
    }
    return v;
}

}  // namespace

Instance parse_instance(std::string_view text) {
    std::vector<Interval> raw;
    std::size_t line_no = 0;
    bool saw_header = false;

    while (!text.empty()) {
        auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

        if (!saw_header) {
            if (line != "x,y") throw ParseError(line_no, "expected header 'x,y'");
            saw_header = true;
            continue;
        }
        if (line.empty()) {
            if (text.empty()) break;  // trailing newline
            throw ParseError(line_no, "empty line");
        }
        auto comma = line.find(',');
        if (comma == std::string_view::npos) throw ParseError(line_no, "expected two fields");
        if (line.find(',', comma + 1) != std::string_view::npos) {
            throw ParseError(line_no, "expected two fields");
        }
        double x = parse_field(line.substr(0, comma), line_no);
        double y = parse_field(line.substr(comma + 1), line_no);
        raw.push_back({raw.size(), x, y});
    }
    if (!saw_header) throw ParseError(1, "missing header 'x,y'");
    return Instance::from_intervals(std::move(raw));
}

Instance read_instance_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw IoError("read failed on '" + path.string() + "'");
    return parse_instance(buf.str());
}

void write_instance_file(const std::filesystem::path& path, const Instance& inst) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
    write_instance(out, inst);
    out.flush();
    if (!out) throw IoError("write failed on '" + path.string() + "'");
}

}  // namespace stacking
