#include "latsize/ints.hpp"

#include <boost/multiprecision/integer.hpp>

#include <sstream>

namespace latsize {

Int content(const Vec& v) {
  Int g = 0;
  for (const Int& x : v) {
    g = boost::multiprecision::gcd(g, abs_int(x));
    if (g == 1) break;
  }
  return g;
}

bool is_zero(const Vec& v) {
  for (const Int& x : v)
    if (x != 0) return false;
  return true;
}

Int dot(const Vec& a, const Vec& b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Vec add(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec negate(const Vec& v) {
  Vec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = -v[i];
  return r;
}

Vec sign_normalize(Vec v) {
  for (const Int& x : v) {
    if (x == 0) continue;
    if (x < 0) return negate(v);
    break;
  }
  return v;
}

Vec zero_vec(int n) { return Vec(static_cast<std::size_t>(n), Int(0)); }

Vec unit_vec(int n, int i) {
  Vec e = zero_vec(n);
  e[static_cast<std::size_t>(i)] = 1;
  return e;
}

std::string to_string(const Vec& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  os << ')';
  return os.str();
}

}  // namespace latsize
