#include "mskkt/rational.hpp"

#include <cctype>
#include <cmath>

namespace mskkt {

Rat make_rat(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

namespace {

bool is_integer_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

std::string trimmed(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

}  // namespace

Rat parse_rational(const std::string& text) {
  const std::string s = trimmed(text);
  const std::size_t slash = s.find('/');
  std::string num = (slash == std::string::npos) ? s : s.substr(0, slash);
  std::string den = (slash == std::string::npos) ? "1" : s.substr(slash + 1);
  if (!is_integer_token(num) || !is_integer_token(den)) {
    throw input_error("not a rational: '" + text +
                      "' (expected an integer or num/den; decimals are not accepted)");
  }
  BigInt n(num, 10), d(den, 10);
  if (d == 0) throw input_error("not a rational: '" + text + "' (zero denominator)");
  Rat r(n, d);
  r.canonicalize();
  return r;
}

std::string rational_string(const Rat& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

double to_double(const Rat& r) { return r.get_d(); }

Rat rational_from_double(double value, const BigInt& max_denominator) {
  if (!std::isfinite(value)) throw std::invalid_argument("non-finite value");
  if (max_denominator < 1) throw std::invalid_argument("denominator bound must be positive");

  const bool negative = value < 0;
  Rat target(std::fabs(value));  // exact binary expansion of the double
  target.canonicalize();
  if (target.get_den() <= max_denominator) return negative ? Rat(-target) : target;

  // Continued fraction walk. When the next convergent's denominator would
  // exceed the bound, the best approximation is either the last convergent or
  // the largest admissible semiconvergent; compare both exactly.
  BigInt num = target.get_num(), den = target.get_den();
  BigInt h_prev = 0, k_prev = 1;  // h_{-2}/k_{-2}
  BigInt h_cur = 1, k_cur = 0;    // h_{-1}/k_{-1} seeded so the first step yields a0/1
  while (den != 0) {
    BigInt a = num / den;
    BigInt h_next = a * h_cur + h_prev;
    BigInt k_next = a * k_cur + k_prev;
    if (k_next > max_denominator) {
      BigInt t = (max_denominator - k_prev) / k_cur;
      Rat convergent(h_cur, k_cur);
      convergent.canonicalize();
      if (t <= 0) {
        return negative ? Rat(-convergent) : convergent;
      }
      Rat semi(t * h_cur + h_prev, t * k_cur + k_prev);
      semi.canonicalize();
      Rat err_conv = abs(convergent - target);
      Rat err_semi = abs(semi - target);
      Rat best = (err_semi < err_conv) ? semi : convergent;
      return negative ? Rat(-best) : best;
    }
    h_prev = h_cur;
    k_prev = k_cur;
    h_cur = h_next;
    k_cur = k_next;
    BigInt rem = num - a * den;
    num = den;
    den = rem;
  }
  Rat exact(h_cur, k_cur);
  exact.canonicalize();
  return negative ? Rat(-exact) : exact;
}

}  // namespace mskkt
