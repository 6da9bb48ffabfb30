#pragma once

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace toricsol {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using IntVector = Eigen::VectorXi;
using Rational = boost::multiprecision::cpp_rational;

/// Parses "p/q", integer, or decimal literals ("0.125", "1e-3") exactly.
Rational parse_rational(std::string_view text);

/// "p/q" or "p" when the denominator is one.
std::string format_rational(const Rational& r);

inline double to_double(const Rational& r) { return static_cast<double>(r); }

/// Lexicographic order on integer vectors of equal length.
bool lex_less(const IntVector& lhs, const IntVector& rhs);

}  // namespace toricsol
