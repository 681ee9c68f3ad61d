// Exact integer Laurent polynomials in one variable.
//
// Coefficients are 64-bit integers with overflow detection: arithmetic that
// would wrap throws kmos::overflow_error instead. Used for the Kauffman
// bracket, Jones and Alexander polynomials, where exactness is the whole
// point of the computation.
#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace kmos {

struct overflow_error : std::runtime_error {
  overflow_error() : std::runtime_error("integer overflow in exact arithmetic") {}
};

struct poly_error : std::runtime_error {
  explicit poly_error(const std::string& what) : std::runtime_error(what) {}
};

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw overflow_error{};
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw overflow_error{};
  return r;
}

// Dense representation over a contiguous exponent window. The window never
// has zero coefficients at either end; the zero polynomial has an empty
// coefficient vector.
class LaurentPoly {
 public:
  LaurentPoly() = default;

  static LaurentPoly term(std::int64_t c, int e) {
    LaurentPoly p;
    if (c != 0) {
      p.min_exp_ = e;
      p.coeffs_.assign(1, c);
    }
    return p;
  }

  static LaurentPoly constant(std::int64_t c) { return term(c, 0); }
  static LaurentPoly one() { return term(1, 0); }
  static LaurentPoly variable() { return term(1, 1); }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const { return coeffs_.size() == 1 && min_exp_ == 0 && coeffs_[0] == 1; }

  int min_exp() const { return min_exp_; }
  int max_exp() const { return min_exp_ + static_cast<int>(coeffs_.size()) - 1; }
  int span() const { return is_zero() ? 0 : max_exp() - min_exp(); }

  std::int64_t coeff(int e) const {
    if (is_zero() || e < min_exp_ || e > max_exp()) return 0;
    return coeffs_[static_cast<std::size_t>(e - min_exp_)];
  }

  std::int64_t leading_coeff() const { return is_zero() ? 0 : coeffs_.back(); }

  void add_term(std::int64_t c, int e) {
    if (c == 0) return;
    if (is_zero()) {
      min_exp_ = e;
      coeffs_.assign(1, c);
      return;
    }
    if (e < min_exp_) {
      coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(min_exp_ - e), 0);
      min_exp_ = e;
    } else if (e > max_exp()) {
      coeffs_.resize(static_cast<std::size_t>(e - min_exp_) + 1, 0);
    }
    auto& slot = coeffs_[static_cast<std::size_t>(e - min_exp_)];
    slot = checked_add(slot, c);
    trim();
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
      add_term(o.coeffs_[i], o.min_exp_ + static_cast<int>(i));
    return *this;
  }

  LaurentPoly& operator-=(const LaurentPoly& o) {
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
      std::int64_t c = o.coeffs_[i];
      if (c == std::numeric_limits<std::int64_t>::min()) throw overflow_error{};
      add_term(-c, o.min_exp_ + static_cast<int>(i));
    }
    return *this;
  }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    r.min_exp_ = a.min_exp_ + b.min_exp_;
    r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        if (b.coeffs_[j] == 0) continue;
        r.coeffs_[i + j] = checked_add(r.coeffs_[i + j], checked_mul(a.coeffs_[i], b.coeffs_[j]));
      }
    }
    r.trim();
    return r;
  }

  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  LaurentPoly negated() const {
    LaurentPoly r = *this;
    for (auto& c : r.coeffs_) {
      if (c == std::numeric_limits<std::int64_t>::min()) throw overflow_error{};
      c = -c;
    }
    return r;
  }

  // Multiply by t^k.
  LaurentPoly shifted(int k) const {
    LaurentPoly r = *this;
    if (!r.is_zero()) r.min_exp_ += k;
    return r;
  }

  // Substitute t -> 1/t.
  LaurentPoly reversed() const {
    LaurentPoly r = *this;
    if (r.is_zero()) return r;
    std::reverse(r.coeffs_.begin(), r.coeffs_.end());
    r.min_exp_ = -max_exp();
    return r;
  }

  bool is_palindromic() const {
    std::size_t n = coeffs_.size();
    for (std::size_t i = 0; i < n / 2; ++i)
      if (coeffs_[i] != coeffs_[n - 1 - i]) return false;
    return true;
  }

  std::int64_t eval(std::int64_t x) const {
    if (is_zero()) return 0;
    if (x == 0) throw poly_error("cannot evaluate Laurent polynomial at 0");
    // Horner over the dense window, then the t^min_exp factor; min_exp < 0
    // only makes sense for x = +-1 which is all we need.
    std::int64_t acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
      acc = checked_add(checked_mul(acc, x), *it);
    if (min_exp_ >= 0) {
      for (int i = 0; i < min_exp_; ++i) acc = checked_mul(acc, x);
    } else {
      if (x != 1 && x != -1)
        throw poly_error("negative exponents require evaluation at a unit");
      if (x == -1 && (min_exp_ & 1)) acc = checked_mul(acc, -1);
    }
    return acc;
  }

  // Exact division; throws poly_error if the divisor does not divide exactly.
  LaurentPoly divided_exact(const LaurentPoly& d) const {
    if (d.is_zero()) throw poly_error("division by zero polynomial");
    if (is_zero()) return {};
    LaurentPoly rem = *this;
    LaurentPoly quot;
    while (!rem.is_zero() && rem.coeffs_.size() >= d.coeffs_.size()) {
      std::int64_t lead = rem.coeffs_.back();
      if (lead % d.coeffs_.back() != 0) throw poly_error("non-exact polynomial division");
      std::int64_t q = lead / d.coeffs_.back();
      int e = rem.max_exp() - d.max_exp();
      quot.add_term(q, e);
      LaurentPoly sub = d * term(q, e);
      rem -= sub;
    }
    if (!rem.is_zero()) throw poly_error("non-exact polynomial division");
    return quot;
  }

  // Canonical text: "c*t^e" terms joined with explicit signs, ascending
  // exponents, e.g. "1*t^-1-1*t^0+1*t^1". Zero prints as "0".
  std::string str(std::string_view var = "t") const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      std::int64_t c = coeffs_[i];
      if (c == 0) continue;
      if (!out.empty() && c > 0) out += '+';
      out += std::to_string(c);
      out += '*';
      out += var;
      out += '^';
      out += std::to_string(min_exp_ + static_cast<int>(i));
    }
    return out;
  }

  static LaurentPoly parse(std::string_view text, std::string_view var = "t") {
    LaurentPoly p;
    if (text == "0" || text.empty()) return p;
    std::size_t i = 0;
    while (i < text.size()) {
      std::size_t star = text.find('*', i);
      if (star == std::string_view::npos) throw poly_error("bad polynomial text");
      std::int64_t c = std::strtoll(std::string(text.substr(i, star - i)).c_str(), nullptr, 10);
      std::size_t caret = text.find('^', star);
      if (caret == std::string_view::npos ||
          text.substr(star + 1, caret - star - 1) != var)
        throw poly_error("bad polynomial text");
      std::size_t j = caret + 1;
      if (j < text.size() && (text[j] == '-' || text[j] == '+')) ++j;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      int e = static_cast<int>(
          std::strtol(std::string(text.substr(caret + 1, j - caret - 1)).c_str(), nullptr, 10));
      p.add_term(c, e);
      i = j;
    }
    return p;
  }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) = default;

  // Lexicographic order on (min_exp, coefficient window); any total order
  // works for chirality folding as long as it is deterministic.
  friend std::strong_ordering operator<=>(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) {
      if (a.is_zero() && b.is_zero()) return std::strong_ordering::equal;
      return a.is_zero() ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    if (auto c = a.min_exp_ <=> b.min_exp_; c != 0) return c;
    if (auto c = a.coeffs_.size() <=> b.coeffs_.size(); c != 0) return c;
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      if (auto c = a.coeffs_[i] <=> b.coeffs_[i]; c != 0) return c;
    return std::strong_ordering::equal;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    std::size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
    if (lead > 0) {
      coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
      min_exp_ += static_cast<int>(lead);
    }
    if (coeffs_.empty()) min_exp_ = 0;
  }

  int min_exp_ = 0;
  std::vector<std::int64_t> coeffs_;
};

}  // namespace kmos
