#include "ynum/lambda_spec.hpp"

#include <cctype>

namespace ynum {

namespace {

bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

// [sign] digits
size_t scan_integer(const std::string& s, size_t pos, bool allow_sign) {
    size_t i = pos;
    if (allow_sign && i < s.size() && (s[i] == '+' || s[i] == '-'))
        ++i;
    const size_t start = i;
    while (i < s.size() && digit(s[i]))
        ++i;
    if (i == start)
        throw LambdaParseError("expected digits", i);
    return i;
}

// [sign] digits [/ digits]
size_t scan_rational(const std::string& s, size_t pos, bool allow_sign) {
    size_t i = scan_integer(s, pos, allow_sign);
    if (i < s.size() && s[i] == '/')
        i = scan_integer(s, i + 1, /*allow_sign=*/false);
    return i;
}

}  // namespace

LambdaValue parse_lambda(const std::string& text) {
    if (text == "phi")
        return golden_ratio();
    if (text == "sym")
        return SymbolicLambda{};
    if (text.empty())
        throw LambdaParseError("empty lambda", 0);

    const size_t sq = text.find("*sqrt5");
    if (sq != std::string::npos) {
        if (sq + 6 != text.size())
            throw LambdaParseError("trailing characters after sqrt5 term", sq + 6);
        const size_t a_end = scan_rational(text, 0, /*allow_sign=*/true);
        if (a_end >= sq || (text[a_end] != '+' && text[a_end] != '-'))
            throw LambdaParseError("expected '+' or '-' before the sqrt5 coefficient", a_end);
        const bool negative_b = text[a_end] == '-';
        const size_t b_end = scan_rational(text, a_end + 1, /*allow_sign=*/false);
        if (b_end != sq)
            throw LambdaParseError("malformed sqrt5 coefficient", b_end);
        const Rational a = Rational::from_string(text.substr(0, a_end));
        const Rational b = Rational::from_string(text.substr(a_end + 1, sq - a_end - 1));
        return Surd5(a, negative_b ? -b : b);
    }

    const size_t end = scan_rational(text, 0, /*allow_sign=*/true);
    if (end != text.size())
        throw LambdaParseError("unexpected character", end);
    return Rational::from_string(text);
}

std::string render_lambda(const LambdaValue& v) {
    return std::visit(
        [](const auto& x) -> std::string {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, Rational>) {
                return x.to_string();
            } else if constexpr (std::is_same_v<T, Surd5>) {
                const Rational& b = x.b();
                const std::string sep = b.is_negative() ? "-" : "+";
                const Rational mag = b.is_negative() ? -b : b;
                return x.a().to_string() + sep + mag.to_string() + "*sqrt5";
            } else {
                return "sym";
            }
        },
        v);
}

}  // namespace ynum
