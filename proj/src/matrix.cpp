#include "coinc/matrix.hpp"

namespace coinc {

Scalar dot(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw InvalidInput("dot product dimension mismatch");
  Scalar s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Vector add(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw InvalidInput("vector sum dimension mismatch");
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Vector subtract(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw InvalidInput("vector difference dimension mismatch");
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Vector scaled(const Vector& v, const Scalar& s) {
  Vector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] * s;
  return out;
}

bool is_zero(const Vector& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

Vector primitive(const Vector& v) {
  if (is_zero(v)) return v;
  BigInt den_lcm = 1;
  for (const auto& x : v) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.get_den().get_mpz_t());
  BigInt num_gcd = 0;
  for (const auto& x : v) {
    const BigInt n = x.get_num() * (den_lcm / x.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
  }
  Scalar factor(den_lcm, num_gcd);
  factor.canonicalize();
  return scaled(v, factor);
}

}  // namespace coinc
