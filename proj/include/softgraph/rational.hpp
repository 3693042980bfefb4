#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace softgraph {

using Int = mpz_class;
using Rat = mpq_class;

inline double to_double(const Rat& r) { return r.get_d(); }
inline double to_double(const Int& z) { return z.get_d(); }

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

// Scales a rational vector to coprime integer entries, first nonzero positive.
// The zero vector is returned unchanged.
std::vector<Rat> to_coprime_integers(std::vector<Rat> v);

// Parses "3", "-7", "2/5", "-1/3".
Rat parse_rational(const std::string& s);

std::string rat_str(const Rat& r);

// a + b*sqrt(d) with a,b rational and d a squarefree integer > 1.
// d == 0 encodes a plain rational (b must be 0), so Rat values embed.
struct Quad {
  Rat a;
  Rat b;
  long d = 0;

  Quad() = default;
  Quad(const Rat& r) : a(r), b(0), d(0) {}  // NOLINT: implicit by design
  Quad(int v) : a(v), b(0), d(0) {}         // NOLINT
  Quad(Rat a_, Rat b_, long d_);

  bool is_zero() const { return a == 0 && b == 0; }
  bool is_rational() const { return b == 0; }
  double approx() const;
  Quad conj() const { return Quad(a, -b, d); }

  Quad operator-() const { return Quad(-a, -b, d); }
  Quad& operator+=(const Quad& o);
  Quad& operator-=(const Quad& o);
  Quad& operator*=(const Quad& o);
  Quad& operator/=(const Quad& o);

  friend Quad operator+(Quad x, const Quad& y) { return x += y; }
  friend Quad operator-(Quad x, const Quad& y) { return x -= y; }
  friend Quad operator*(Quad x, const Quad& y) { return x *= y; }
  friend Quad operator/(Quad x, const Quad& y) { return x /= y; }
  friend bool operator==(const Quad& x, const Quad& y) {
    return (x - y).is_zero();
  }
};

std::string quad_str(const Quad& q);

long squarefree_part(Int n, Int* square_root_factor);

// Zero tests used by the templated linear algebra.
inline bool scalar_is_zero(const Rat& r) { return r == 0; }
inline bool scalar_is_zero(const Int& z) { return z == 0; }
inline bool scalar_is_zero(const Quad& q) { return q.is_zero(); }
inline bool scalar_is_zero(double x) { return x == 0.0; }

}  // namespace softgraph
