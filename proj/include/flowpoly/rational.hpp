#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <string>
#include <vector>

#include "flowpoly/errors.hpp"

namespace flowpoly {

/// Exact rational number; no floating point is used anywhere in the library.
using Rational = boost::multiprecision::mpq_rational;

/// Dense exact-rational vector, indexed by arc id or by (i,S) pair index.
using RationalVector = std::vector<Rational>;

/// Prints in lowest terms, "3/7" or "2" for integers (GMP keeps rationals canonical).
inline std::string to_string(const Rational& r) { return r.str(); }

/// Parses "3/7", "-1/2" or "5". Rejects everything else, including a zero denominator.
inline Rational parse_rational(const std::string& text) {
    auto fail = [&] { throw ParseError("not a rational: \"" + text + "\""); };
    if (text.empty()) fail();
    std::size_t i = text[0] == '-' || text[0] == '+' ? 1 : 0;
    if (i == text.size()) fail();
    bool slash_seen = false;
    for (std::size_t j = i; j < text.size(); ++j) {
        if (text[j] == '/' && !slash_seen && j + 1 < text.size() && j > i) {
            slash_seen = true;
            continue;
        }
        if (text[j] < '0' || text[j] > '9') fail();
    }
    if (slash_seen && text.substr(text.find('/') + 1).find_first_not_of('0') == std::string::npos)
        fail();
    std::string cleaned = text[0] == '+' ? text.substr(1) : text;
    Rational r(cleaned);
    mpq_canonicalize(r.backend().data());  // GMP string assignment skips reduction
    return r;
}

}  // namespace flowpoly
