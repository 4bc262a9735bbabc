#include "jssec/syntax/numbers.hpp"

#include <charconv>
#include <cmath>
#include <limits>

namespace jssec::syntax {

std::string number_to_string(double value) {
    if (std::isnan(value)) return "NaN";
    if (value == 0) return "0";
    if (std::isinf(value)) return value > 0 ? "Infinity" : "-Infinity";

    std::string sign;
    if (value < 0) {
        sign = "-";
        value = -value;
    }

    // Shortest round-trip digits in scientific form, e.g. "1.2345e+02".
    char buffer[64];
    auto [end, ec] = std::to_chars(buffer, buffer + sizeof buffer, value, std::chars_format::scientific);
    std::string_view sci(buffer, static_cast<std::size_t>(end - buffer));
    const auto e_pos = sci.find('e');
    std::string digits;
    for (char c : sci.substr(0, e_pos)) {
        if (c != '.') digits += c;
    }
    int exponent = 0;
    std::string_view exp_text = sci.substr(e_pos + 1);
    if (exp_text.front() == '+') exp_text.remove_prefix(1);
    std::from_chars(exp_text.data(), exp_text.data() + exp_text.size(), exponent);

    // k digits, value = 0.digits * 10^n
    const int k = static_cast<int>(digits.size());
    const int n = exponent + 1;

    std::string out;
    if (k <= n && n <= 21) {
        out = digits + std::string(static_cast<std::size_t>(n - k), '0');
    } else if (0 < n && n <= 21) {
        out = digits.substr(0, static_cast<std::size_t>(n)) + "." + digits.substr(static_cast<std::size_t>(n));
    } else if (-6 < n && n <= 0) {
        out = "0." + std::string(static_cast<std::size_t>(-n), '0') + digits;
    } else {
        const int e = n - 1;
        std::string exp_part = (e >= 0 ? "+" : "-") + std::to_string(e >= 0 ? e : -e);
        if (k == 1) {
            out = digits + "e" + exp_part;
        } else {
            out = digits.substr(0, 1) + "." + digits.substr(1) + "e" + exp_part;
        }
    }
    return sign + out;
}

namespace {

bool is_js_space(unsigned char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
}

std::string_view trim(std::string_view text) {
    while (!text.empty() && is_js_space(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && is_js_space(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    return text;
}

}  // namespace

double string_to_number(std::string_view text) {
    constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
    text = trim(text);
    if (text.empty()) return 0;

    if (text.size() > 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X')) {
        double value = 0;
        for (char c : text.substr(2)) {
            int digit;
            if (c >= '0' && c <= '9') {
                digit = c - '0';
            } else if (c >= 'a' && c <= 'f') {
                digit = c - 'a' + 10;
            } else if (c >= 'A' && c <= 'F') {
                digit = c - 'A' + 10;
            } else {
                return kNaN;
            }
            value = value * 16 + digit;
        }
        return value;
    }

    double sign = 1;
    std::string_view body = text;
    if (body.front() == '+' || body.front() == '-') {
        if (body.front() == '-') sign = -1;
        body.remove_prefix(1);
    }
    if (body == "Infinity") return sign * std::numeric_limits<double>::infinity();

    // StrUnsignedDecimalLiteral: digits [. digits] [e sign digits] | . digits [...]
    std::size_t i = 0;
    std::size_t int_digits = 0;
    std::size_t frac_digits = 0;
    while (i < body.size() && body[i] >= '0' && body[i] <= '9') ++i, ++int_digits;
    if (i < body.size() && body[i] == '.') {
        ++i;
        while (i < body.size() && body[i] >= '0' && body[i] <= '9') ++i, ++frac_digits;
    }
    if (int_digits + frac_digits == 0) return kNaN;
    if (i < body.size() && (body[i] == 'e' || body[i] == 'E')) {
        ++i;
        if (i < body.size() && (body[i] == '+' || body[i] == '-')) ++i;
        std::size_t exp_digits = 0;
        while (i < body.size() && body[i] >= '0' && body[i] <= '9') ++i, ++exp_digits;
        if (exp_digits == 0) return kNaN;
    }
    if (i != body.size()) return kNaN;

    std::string normalized(body);
    if (normalized.front() == '.') normalized.insert(normalized.begin(), '0');
    double value = 0;
    auto [ptr, ec] = std::from_chars(normalized.data(), normalized.data() + normalized.size(), value);
    if (ec == std::errc::result_out_of_range) {
        // Overflow saturates; underflow rounds to zero.
        const auto e = normalized.find_first_of("eE");
        const bool negative_exponent = e != std::string::npos && e + 1 < normalized.size() && normalized[e + 1] == '-';
        value = negative_exponent ? 0.0 : std::numeric_limits<double>::infinity();
    }
    return sign * value;
}

}  // namespace jssec::syntax
