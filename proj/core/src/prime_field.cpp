#include "qpencil/prime_field.hpp"

namespace qpencil {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(u128(a) * b % p); }

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

void check_same_modulus(FpElem a, FpElem b, const char* op) {
  if (a.p != b.p) {
    throw domain_error(std::string("prime field ") + op + ": modulus mismatch " +
                       std::to_string(a.p) + " vs " + std::to_string(b.p));
  }
}

}  // namespace

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // This base set is a proven deterministic witness set for all n < 2^64.
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

FpElem fp_make(u64 value, u64 p) {
  if (p < 3 || (p & 1) == 0 || (p >> 63) != 0 || !is_prime_u64(p)) {
    throw domain_error("prime field: modulus " + std::to_string(p) + " is not an odd prime (< 2^63)");
  }
  return FpElem{value % p, p};
}

FpElem fp_reduce(const Int& value, u64 p) {
  FpElem probe = fp_make(0, p);  // validates p
  Int m = value % Int(static_cast<unsigned long>(p));
  if (m < 0) m += Int(static_cast<unsigned long>(p));
  probe.v = m.get_ui();
  return probe;
}

FpElem fp_add(FpElem a, FpElem b) {
  check_same_modulus(a, b, "add");
  u64 s = a.v + b.v;
  if (s >= a.p) s -= a.p;
  return FpElem{s, a.p};
}

FpElem fp_sub(FpElem a, FpElem b) {
  check_same_modulus(a, b, "sub");
  u64 s = a.v >= b.v ? a.v - b.v : a.v + a.p - b.v;
  return FpElem{s, a.p};
}

FpElem fp_neg(FpElem a) { return FpElem{a.v == 0 ? 0 : a.p - a.v, a.p}; }

FpElem fp_mul(FpElem a, FpElem b) {
  check_same_modulus(a, b, "mul");
  return FpElem{mulmod(a.v, b.v, a.p), a.p};
}

FpElem fp_inv(FpElem a) {
  if (a.v == 0) throw domain_error("prime field: inverse of zero");
  return FpElem{powmod(a.v, a.p - 2, a.p), a.p};
}

FpElem fp_div(FpElem a, FpElem b) {
  check_same_modulus(a, b, "div");
  return fp_mul(a, fp_inv(b));
}

FpElem fp_pow(FpElem a, u64 e) { return FpElem{powmod(a.v, e, a.p), a.p}; }

int fp_legendre(FpElem a) {
  if (a.v == 0) return 0;
  u64 e = powmod(a.v, (a.p - 1) / 2, a.p);
  return e == 1 ? 1 : -1;
}

FpElem fp_sqrt(FpElem a) {
  if (a.v == 0) return a;
  if (fp_legendre(a) != 1) {
    throw domain_error("fp_sqrt: " + std::to_string(a.v) + " is not a square mod " + std::to_string(a.p));
  }
  u64 p = a.p;
  if (p % 4 == 3) return fp_pow(a, (p + 1) / 4);
  // Tonelli-Shanks.
  u64 q = p - 1;
  int s = 0;
  while ((q & 1) == 0) {
    q >>= 1;
    ++s;
  }
  FpElem z{2, p};
  while (fp_legendre(z) != -1) ++z.v;
  FpElem c = fp_pow(z, q);
  FpElem t = fp_pow(a, q);
  FpElem r = fp_pow(a, (q + 1) / 2);
  u64 mm = static_cast<u64>(s);
  while (t.v != 1) {
    u64 i = 0;
    FpElem t2 = t;
    while (t2.v != 1) {
      t2 = fp_mul(t2, t2);
      ++i;
      if (i == mm) throw domain_error("fp_sqrt: internal failure");
    }
    FpElem b = c;
    for (u64 j = 0; j + i + 1 < mm; ++j) b = fp_mul(b, b);
    mm = i;
    c = fp_mul(b, b);
    t = fp_mul(t, c);
    r = fp_mul(r, b);
  }
  return r;
}

std::vector<FpElem> fp_all(u64 p) {
  FpElem probe = fp_make(0, p);
  std::vector<FpElem> out;
  out.reserve(p);
  for (u64 v = 0; v < p; ++v) out.push_back(FpElem{v, probe.p});
  return out;
}

}  // namespace qpencil
