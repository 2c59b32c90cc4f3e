#include "qpencil/numeric.hpp"

namespace qpencil {

Int parse_int(const std::string& s) {
  Int v;
  if (s.empty() || v.set_str(s, 10) != 0) {
    throw domain_error("parse_int: not a decimal integer: '" + s + "'");
  }
  return v;
}

Rat parse_rat(const std::string& s) {
  Rat v;
  if (s.empty() || v.set_str(s, 10) != 0) {
    throw domain_error("parse_rat: not a decimal rational: '" + s + "'");
  }
  if (v.get_den() == 0) {
    throw domain_error("parse_rat: zero denominator in '" + s + "'");
  }
  v.canonicalize();
  return v;
}

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw domain_error("make_rat: zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Int to_int(const Rat& r) {
  if (!is_integer(r)) {
    throw domain_error("to_int: " + r.get_str() + " is not an integer");
  }
  return r.get_num();
}

bool is_square(const Int& v) {
  if (sgn(v) < 0) return false;
  return mpz_perfect_square_p(v.get_mpz_t()) != 0;
}

bool is_square(const Rat& r) {
  return is_square(Int(r.get_num())) && is_square(Int(r.get_den()));
}

Int sqrt_exact(const Int& v) {
  if (!is_square(v)) {
    throw domain_error("sqrt_exact: " + v.get_str() + " is not a perfect square");
  }
  Int root;
  mpz_sqrt(root.get_mpz_t(), v.get_mpz_t());
  return root;
}

Rat sqrt_exact(const Rat& r) {
  return Rat(sqrt_exact(Int(r.get_num())), sqrt_exact(Int(r.get_den())));
}

Int pow_int(const Int& v, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), v.get_mpz_t(), e);
  return r;
}

Rat pow_rat(const Rat& v, long e) {
  if (e >= 0) {
    Rat r;
    mpz_pow_ui(r.get_num_mpz_t(), v.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(r.get_den_mpz_t(), v.get_den_mpz_t(), static_cast<unsigned long>(e));
    r.canonicalize();
    return r;
  }
  if (v == 0) throw domain_error("pow_rat: zero to a negative power");
  return pow_rat(Rat(1) / v, -e);
}

Valuation valuation(const Int& value, const Int& p) {
  if (value == 0) throw domain_error("valuation: undefined at zero");
  if (p < 2) throw domain_error("valuation: base must be >= 2");
  Valuation out{0, value};
  while (out.unit % p == 0) {
    out.unit /= p;
    ++out.v;
  }
  return out;
}

}  // namespace qpencil
