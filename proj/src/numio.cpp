#include "ridgepath/numio.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <stdexcept>

namespace ridgepath {

std::string format_double(double v) {
    char buf[40];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    if (ec != std::errc{}) throw std::runtime_error("format_double: buffer too small");
    return std::string(buf, ptr);
}

std::string format_fixed(double v, int precision) {
    char buf[512];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::fixed, precision);
    if (ec != std::errc{}) throw std::runtime_error("format_fixed: buffer too small");
    return std::string(buf, ptr);
}

std::string format_general(double v, int precision) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, precision);
    if (ec != std::errc{}) throw std::runtime_error("format_general: buffer too small");
    return std::string(buf, ptr);
}

bool try_parse_double(std::string_view s, double& out) {
    if (s.empty()) return false;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    // from_chars rejects a leading '+', which CSV exports occasionally carry
    if (*first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc{} && ptr == last;
}

double parse_double(std::string_view s) {
    double v = 0.0;
    if (!try_parse_double(s, v)) {
        throw std::runtime_error("not a number: \"" + std::string(s) + "\"");
    }
    return v;
}

namespace {

std::string clean_field(std::string_view f) {
    size_t b = 0, e = f.size();
    while (b < e && std::isspace(static_cast<unsigned char>(f[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(f[e - 1]))) --e;
    if (e - b >= 2 && f[b] == '"' && f[e - 1] == '"') {
        ++b;
        --e;
    }
    return std::string(f.substr(b, e - b));
}

}  // namespace

std::vector<std::string> split_csv_line(std::string_view line) {
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    std::vector<std::string> out;
    size_t start = 0;
    while (true) {
        size_t pos = line.find(',', start);
        if (pos == std::string_view::npos) {
            out.push_back(clean_field(line.substr(start)));
            break;
        }
        out.push_back(clean_field(line.substr(start, pos - start)));
        start = pos + 1;
    }
    return out;
}

}  // namespace ridgepath
