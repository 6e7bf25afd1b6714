#include "hypersob/scalar.hpp"

#include <array>
#include <charconv>
#include <regex>

#include "hypersob/error.hpp"

namespace hypersob {

std::string to_string(const Rational& r) { return r.get_str(); }

std::string to_string(double x) {
    std::array<char, 64> buf{};
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
    if (ec != std::errc{}) {
        return "nan";
    }
    return std::string(buf.data(), end);
}

ParsedNumber parse_number(std::string_view text) {
    static const std::regex rational_re(R"(^[+-]?[0-9]+(/[0-9]+)?$)");
    static const std::regex decimal_re(R"(^[+-]?([0-9]+\.?[0-9]*|\.[0-9]+)([eE][+-]?[0-9]+)?$)");

    const std::string s(text);
    ParsedNumber out;
    out.text = s;
    if (std::regex_match(s, rational_re)) {
        const auto slash = s.find('/');
        if (slash != std::string::npos && s.find_first_not_of('0', slash + 1) == std::string::npos) {
            throw InvalidParameter("zero denominator in '" + s + "'");
        }
        // mpq_set_str rejects a leading '+'.
        const std::string digits = (s.front() == '+') ? s.substr(1) : s;
        out.rational.set_str(digits, 10);
        out.rational.canonicalize();
        out.exact = true;
        out.value = out.rational.get_d();
        return out;
    }
    if (std::regex_match(s, decimal_re)) {
        const char* first = s.data() + (s.front() == '+' ? 1 : 0);
        double v = 0.0;
        auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), v);
        if (ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(v)) {
            throw InvalidParameter("cannot parse number '" + s + "'");
        }
        out.exact = false;
        out.value = v;
        out.rational = Rational(v);
        return out;
    }
    throw InvalidParameter("cannot parse number '" + s + "'");
}

}  // namespace hypersob
