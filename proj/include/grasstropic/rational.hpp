#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace grasstropic {

using Rational = mpq_class;

// Base class for every error raised by the library. The CLI maps it to exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text (diagram files, words, JSON, rationals).
class ParseError : public Error {
 public:
  using Error::Error;
};

// Parses "3", "-7/2" or "0.25". Floating literals are rejected unless they are
// finite decimals, which are converted exactly.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);
double to_double(const Rational& q);

// 1-based sorted subset of [n].
using Subset = std::vector<int>;

std::string subset_to_string(const Subset& s);  // "{1,2,4}"
std::string subset_compact(const Subset& s);    // "124" for n < 10, else "1.2.14"
Subset parse_subset(std::string_view text);
std::vector<Subset> k_subsets(int n, int k);     // lexicographic
bool subset_less_lex(const Subset& a, const Subset& b);

}  // namespace grasstropic
