#include "softgraph/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace softgraph {

std::vector<Rat> to_coprime_integers(std::vector<Rat> v) {
  Int den_lcm = 1;
  for (const Rat& r : v) {
    Int d = r.get_den();
    den_lcm = lcm(den_lcm, d);
  }
  Int num_gcd = 0;
  for (Rat& r : v) {
    r *= Rat(den_lcm);
    r.canonicalize();
    num_gcd = gcd(num_gcd, Int(r.get_num()));
  }
  if (num_gcd == 0) return v;  // zero vector
  int sign = 0;
  for (const Rat& r : v) {
    if (r != 0) {
      sign = sgn(r) > 0 ? 1 : -1;
      break;
    }
  }
  for (Rat& r : v) {
    r /= Rat(num_gcd * sign);
    r.canonicalize();
  }
  return v;
}

Rat parse_rational(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      Rat r(s);
      r.canonicalize();
      return r;
    }
    Rat num(s.substr(0, slash));
    Rat den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    Rat r = num / den;
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("bad rational: '" + s + "'");
  }
}

std::string rat_str(const Rat& r) { return r.get_str(); }

long squarefree_part(Int n, Int* square_root_factor) {
  if (n <= 0) throw std::invalid_argument("squarefree_part needs n > 0");
  Int sq = 1;
  Int d = n;
  for (Int f = 2; f * f <= d;) {
    if (d % (f * f) == 0) {
      d /= f * f;
      sq *= f;
    } else {
      ++f;
    }
  }
  if (square_root_factor) *square_root_factor = sq;
  if (!d.fits_slong_p()) throw std::overflow_error("radicand too large");
  return d.get_si();
}

Quad::Quad(Rat a_, Rat b_, long d_) : a(std::move(a_)), b(std::move(b_)), d(d_) {
  if (b == 0) d = 0;
  if (d == 1) {  // sqrt(1) collapses
    a += b;
    b = 0;
    d = 0;
  }
}

double Quad::approx() const {
  return a.get_d() + b.get_d() * std::sqrt(static_cast<double>(d));
}

namespace {
long merge_d(const Quad& x, const Quad& y) {
  if (x.d == 0) return y.d;
  if (y.d == 0) return x.d;
  if (x.d != y.d) throw std::invalid_argument("mixed quadratic fields");
  return x.d;
}
}  // namespace

Quad& Quad::operator+=(const Quad& o) {
  d = merge_d(*this, o);
  a += o.a;
  b += o.b;
  if (b == 0) d = 0;
  return *this;
}

Quad& Quad::operator-=(const Quad& o) {
  d = merge_d(*this, o);
  a -= o.a;
  b -= o.b;
  if (b == 0) d = 0;
  return *this;
}

Quad& Quad::operator*=(const Quad& o) {
  long dd = merge_d(*this, o);
  Rat na = a * o.a + b * o.b * Rat(dd);
  Rat nb = a * o.b + b * o.a;
  a = na;
  b = nb;
  d = (nb == 0) ? 0 : dd;
  return *this;
}

Quad& Quad::operator/=(const Quad& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  long dd = merge_d(*this, o);
  Rat norm = o.a * o.a - o.b * o.b * Rat(dd);
  if (norm == 0) throw std::domain_error("division by zero norm");
  Quad inv(o.a / norm, -o.b / norm, dd);
  return *this *= inv;
}

std::string quad_str(const Quad& q) {
  if (q.b == 0) return rat_str(q.a);
  std::string s = rat_str(q.a);
  s += (q.b > 0) ? " + " : " - ";
  Rat ab = abs(q.b);
  if (ab != 1) s += rat_str(ab) + "*";
  s += "sqrt(" + std::to_string(q.d) + ")";
  return s;
}

}  // namespace softgraph
