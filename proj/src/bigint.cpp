#include "numsg/bigint.hpp"

#include "numsg/error.hpp"

#include <cctype>

namespace numsg {

std::string to_string(const Rational& r) {
    const BigInt& den = boost::multiprecision::denominator(r);
    std::string out = boost::multiprecision::numerator(r).str();
    if (den != 1) out += "/" + den.str();
    return out;
}

namespace {

BigInt parse_integer(const std::string& text, const std::string& whole) {
    std::size_t i = 0;
    bool negative = false;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) negative = text[i++] == '-';
    if (i == text.size()) throw Error(ErrorKind::ParseError, "malformed rational '" + whole + "'");
    BigInt v = 0;
    for (; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            throw Error(ErrorKind::ParseError, "malformed rational '" + whole + "'");
        v = v * 10 + (text[i] - '0');
    }
    return negative ? BigInt(-v) : v;
}

} // namespace

Rational parse_rational(const std::string& raw) {
    std::string text;
    for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c))) text += c;
    if (text.empty()) throw Error(ErrorKind::ParseError, "empty rational");

    if (auto slash = text.find('/'); slash != std::string::npos) {
        BigInt num = parse_integer(text.substr(0, slash), raw);
        BigInt den = parse_integer(text.substr(slash + 1), raw);
        if (den == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + raw + "'");
        return Rational(num, den);
    }
    if (auto dot = text.find('.'); dot != std::string::npos) {
        std::string frac = text.substr(dot + 1);
        std::string head = text.substr(0, dot);
        bool negative = !head.empty() && head[0] == '-';
        if (head.empty() || head == "-" || head == "+") head += "0";
        BigInt scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
        BigInt int_part = parse_integer(head, raw);
        BigInt frac_part = frac.empty() ? BigInt(0) : parse_integer(frac, raw);
        if (!frac.empty() && (frac[0] == '-' || frac[0] == '+'))
            throw Error(ErrorKind::ParseError, "malformed rational '" + raw + "'");
        BigInt magnitude = (negative ? BigInt(-int_part) : int_part) * scale + frac_part;
        return Rational(negative ? BigInt(-magnitude) : magnitude, scale);
    }
    return Rational(parse_integer(text, raw));
}

} // namespace numsg
