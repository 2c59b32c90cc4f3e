#include "qpencil/binary_form.hpp"

namespace qpencil {

bool binary_form_is_integral(const QForm& f) {
  for (const auto& c : f.f) {
    if (!is_integer(c)) return false;
  }
  return true;
}

Int form_height(const QForm& f) {
  if (!binary_form_is_integral(f)) {
    throw domain_error("form_height: integral coefficients required");
  }
  Int h(0);
  for (const auto& c : f.f) {
    Int a = abs(to_int(c));
    if (a > h) h = a;
  }
  return h;
}

FpForm form_to_fp(const QForm& f, std::uint64_t p) {
  if (!binary_form_is_integral(f)) {
    throw domain_error("form_to_fp: integral coefficients required");
  }
  std::vector<FpElem> coeffs;
  coeffs.reserve(f.f.size());
  for (const auto& c : f.f) coeffs.push_back(fp_reduce(to_int(c), p));
  return FpForm{f.n, std::move(coeffs)};
}

QForm form_from_fp(const FpForm& f) {
  std::vector<Rat> coeffs;
  coeffs.reserve(f.f.size());
  for (const auto& c : f.f) coeffs.emplace_back(static_cast<unsigned long>(c.v));
  return QForm{f.n, std::move(coeffs)};
}

QForm form_from_ints(const std::vector<Int>& leading_first) {
  std::vector<Rat> coeffs;
  coeffs.reserve(leading_first.size());
  for (const auto& c : leading_first) coeffs.emplace_back(c);
  return binary_form_make(static_cast<int>(leading_first.size()) - 1, std::move(coeffs));
}

FpElem binary_discriminant(const FpForm& f) {
  if (form_is_zero(f)) throw domain_error("binary_discriminant: zero form");
  QForm lifted = form_from_fp(f);
  return fp_reduce(to_int(binary_discriminant(lifted)), f.f.at(0).p);
}

ComponentLabel real_component_label(const QForm& f) {
  if (f.n % 2 != 0) throw domain_error("real_component_label: even degree required");
  if (f.f.at(0) == 0) throw domain_error("real_component_label: leading coefficient is zero");
  if (binary_discriminant(f) == 0) throw domain_error("real_component_label: zero discriminant");
  const int r1 = sturm_real_root_count(binary_to_poly(f));
  ComponentLabel out;
  out.m = r1 / 2;
  out.tau_count = tau_class_count(out.m, f.n);
  return out;
}

Int tau_class_count(int m, int n) {
  if (m < 0 || n < 2 || n % 2 != 0 || m > n / 2) {
    throw domain_error("tau_class_count: need even n >= 2 and 0 <= m <= n/2");
  }
  if (m > 1) return pow_int(Int(2), static_cast<unsigned long>(2 * m - 2));
  if (m == 1) return Int(1);
  return n % 4 == 0 ? Int(2) : Int(1);
}

std::vector<std::vector<int>> tau_sign_classes(int m, int lead_sign) {
  if (lead_sign != 1 && lead_sign != -1) {
    throw domain_error("tau_sign_classes: lead_sign must be +1 or -1");
  }
  if (m < 0) throw domain_error("tau_sign_classes: m must be >= 0");
  std::vector<std::vector<int>> out;
  if (m == 0) return out;
  const int len = 2 * m;
  // Global negation flips no product (even length), and each class has a
  // unique representative with first sign +1.
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << (len - 1)); ++mask) {
    std::vector<int> s(static_cast<std::size_t>(len), 1);
    int prod = 1;
    for (int i = 1; i < len; ++i) {
      if ((mask >> (i - 1)) & 1) {
        s[static_cast<std::size_t>(i)] = -1;
        prod = -prod;
      }
    }
    if (prod == lead_sign) out.push_back(std::move(s));
  }
  return out;
}

}  // namespace qpencil
