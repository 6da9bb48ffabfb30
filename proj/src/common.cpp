#include "toricsol/errors.hpp"
#include "toricsol/types.hpp"

#include <cctype>
#include <cstdlib>

namespace toricsol {

const char* to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::MalformedDocument: return "MalformedDocument";
        case ErrorCode::UnboundedRegion: return "UnboundedRegion";
        case ErrorCode::EmptyInterior: return "EmptyInterior";
        case ErrorCode::NonPrimitiveNormal: return "NonPrimitiveNormal";
        case ErrorCode::DegenerateVertex: return "DegenerateVertex";
        case ErrorCode::RedundantFacet: return "RedundantFacet";
        case ErrorCode::NotDelzant: return "NotDelzant";
        case ErrorCode::NotFano: return "NotFano";
        case ErrorCode::UnboundedRootRegion: return "UnboundedRootRegion";
        case ErrorCode::AmbiguousRoot: return "AmbiguousRoot";
        case ErrorCode::UnsupportedDimension: return "UnsupportedDimension";
        case ErrorCode::NonConvergence: return "NonConvergence";
        case ErrorCode::BoundaryEvaluation: return "BoundaryEvaluation";
        case ErrorCode::LossOfConvexity: return "LossOfConvexity";
        case ErrorCode::NoSignChange: return "NoSignChange";
        case ErrorCode::OutOfDomain: return "OutOfDomain";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

namespace {

[[noreturn]] void bad_literal(std::string_view text) {
    throw Error(ErrorCode::MalformedDocument,
                "cannot read '" + std::string(text) + "' as a rational number");
}

boost::multiprecision::cpp_int parse_integer(std::string_view text, std::string_view whole) {
    if (text.empty()) bad_literal(whole);
    for (char c : text)
        if (!std::isdigit(static_cast<unsigned char>(c))) bad_literal(whole);
    // cpp_int reads a leading 0 as octal
    const auto first = text.find_first_not_of('0');
    if (first == std::string_view::npos) return 0;
    return boost::multiprecision::cpp_int(std::string(text.substr(first)));
}

Rational parse_decimal(std::string_view text) {
    using boost::multiprecision::cpp_int;
    std::string_view whole = text;
    bool negative = false;
    if (!text.empty() && (text[0] == '+' || text[0] == '-')) {
        negative = text[0] == '-';
        text.remove_prefix(1);
    }
    long exponent = 0;
    if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
        std::string_view ex = text.substr(e + 1);
        bool eneg = false;
        if (!ex.empty() && (ex[0] == '+' || ex[0] == '-')) {
            eneg = ex[0] == '-';
            ex.remove_prefix(1);
        }
        if (ex.empty() || ex.size() > 6) bad_literal(whole);
        exponent = static_cast<long>(parse_integer(ex, whole));
        if (eneg) exponent = -exponent;
        text = text.substr(0, e);
    }
    std::string digits;
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view intpart = text.substr(0, dot);
        std::string_view frac = text.substr(dot + 1);
        if (intpart.empty() && frac.empty()) bad_literal(whole);
        digits = std::string(intpart) + std::string(frac);
        exponent -= static_cast<long>(frac.size());
    } else {
        digits = std::string(text);
    }
    cpp_int mantissa = parse_integer(digits, whole);
    cpp_int scale = boost::multiprecision::pow(cpp_int(10), static_cast<unsigned>(std::labs(exponent)));
    Rational r = exponent >= 0 ? Rational(mantissa * scale) : Rational(mantissa, scale);
    return negative ? Rational(-r) : r;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.empty()) bad_literal(text);
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        Rational num = parse_decimal(text.substr(0, slash));
        Rational den = parse_decimal(text.substr(slash + 1));
        if (den == 0) bad_literal(text);
        return num / den;
    }
    return parse_decimal(text);
}

std::string format_rational(const Rational& r) {
    if (boost::multiprecision::denominator(r) == 1)
        return boost::multiprecision::numerator(r).str();
    return boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str();
}

bool lex_less(const IntVector& lhs, const IntVector& rhs) {
    for (Eigen::Index i = 0; i < std::min(lhs.size(), rhs.size()); ++i) {
        if (lhs[i] != rhs[i]) return lhs[i] < rhs[i];
    }
    return lhs.size() < rhs.size();
}

}  // namespace toricsol
