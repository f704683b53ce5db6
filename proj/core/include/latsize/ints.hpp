#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace latsize {

/// Exact integer used for every coordinate, width and determinant in this
/// library. All core computations are integer or rational; there is no
/// floating point anywhere on a value-producing path.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Dense integer vector. Points, directions and matrix rows all use it.
using Vec = std::vector<Int>;
using Mat = std::vector<Vec>;

/// Thrown when an enumeration or node budget is exhausted before the
/// computation could finish. Callers that can degrade gracefully catch it.
struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Thrown on malformed input documents.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

/// gcd of the absolute values of all entries; 0 for the zero vector.
Int content(const Vec& v);

bool is_zero(const Vec& v);

Int dot(const Vec& a, const Vec& b);

Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec negate(const Vec& v);

/// Flips the sign so the first nonzero entry is positive. Zero vectors are
/// returned unchanged.
Vec sign_normalize(Vec v);

Vec zero_vec(int n);
Vec unit_vec(int n, int i);

std::string to_string(const Vec& v);

}  // namespace latsize
