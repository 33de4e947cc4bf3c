#include "irs/cli/config_io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <system_error>

namespace irs::cli {
namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

[[noreturn]] void fail(std::string_view where, std::string_view key, const std::string& what) {
    std::string msg(where);
    if (!key.empty()) msg += ": field '" + std::string(key) + "'";
    msg += ": " + what;
    throw ConfigError(msg);
}

double to_double(std::string_view where, std::string_view key, std::string_view text) {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        fail(where, key, "expected a number, got '" + std::string(text) + "'");
    }
    return v;
}

int to_int(std::string_view where, std::string_view key, std::string_view text) {
    int v = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        fail(where, key, "expected an integer, got '" + std::string(text) + "'");
    }
    return v;
}

std::string format_exact(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// A decimal dB value whose conversion reproduces `linear` bit for bit when
// one exists within a few ulps of the direct conversion.
std::string db_text_for(double linear) {
    double db = linear_to_db(linear);
    for (int i = 0; i < 64; ++i) {
        const std::string text = format_exact(db);
        const double back = db_to_linear(std::stod(text));
        if (back == linear) return text;
        db = std::nextafter(db, back < linear ? INFINITY : -INFINITY);
    }
    return format_exact(linear_to_db(linear));
}

}  // namespace

void apply_setting(SystemConfig& config, std::string_view key, std::string_view value, std::string_view where) {
    value = trim(value);
    if (value.empty()) fail(where, key, "missing value");
    if (key == "n_elements") {
        config.n_elements = to_int(where, key, value);
    } else if (key == "d1_m") {
        config.d1_m = to_double(where, key, value);
    } else if (key == "d2_m") {
        config.d2_m = to_double(where, key, value);
    } else if (key == "dL_m") {
        config.dL_m = to_double(where, key, value);
    } else if (key == "v1") {
        config.v1 = to_double(where, key, value);
    } else if (key == "v2") {
        config.v2 = to_double(where, key, value);
    } else if (key == "vL") {
        config.vL = to_double(where, key, value);
    } else if (key == "gamma_bar_db") {
        config.gamma_bar = db_to_linear(to_double(where, key, value));
    } else {
        fail(where, key, "unknown key");
    }
}

SystemConfig parse_config(std::string_view text, std::string_view source) {
    SystemConfig config;
    std::size_t line_no = 0;
    while (!text.empty()) {
        ++line_no;
        const auto eol = text.find('\n');
        std::string_view line = text.substr(0, eol);
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const std::string where = std::string(source) + ":" + std::to_string(line_no);
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) fail(where, {}, "expected 'key = value', got '" + std::string(line) + "'");
        const auto key = trim(line.substr(0, eq));
        if (key.empty()) fail(where, {}, "missing key");
        apply_setting(config, key, line.substr(eq + 1), where);
    }
    return config;
}

SystemConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError(path + ": cannot open configuration file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str(), path);
}

std::string dump_config(const SystemConfig& config) {
    std::string out;
    out += "n_elements = " + std::to_string(config.n_elements) + "\n";
    out += "d1_m = " + format_exact(config.d1_m) + "\n";
    out += "d2_m = " + format_exact(config.d2_m) + "\n";
    out += "dL_m = " + format_exact(config.dL_m) + "\n";
    out += "v1 = " + format_exact(config.v1) + "\n";
    out += "v2 = " + format_exact(config.v2) + "\n";
    out += "vL = " + format_exact(config.vL) + "\n";
    out += "gamma_bar_db = " + db_text_for(config.gamma_bar) + "\n";
    return out;
}

}  // namespace irs::cli
