#include "engel/spectra.hpp"

#include <algorithm>
#include <map>

namespace engel {

IntPolynomial::IntPolynomial(std::vector<BigInt> coefficients)
    : coeffs_(std::move(coefficients)) {
  trim();
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) {
    coeffs_.pop_back();
  }
}

IntPolynomial IntPolynomial::from_roots(
    std::vector<std::pair<std::int64_t, std::size_t>> const& roots) {
  std::vector<BigInt> c{1};
  for (auto [root, mult] : roots) {
    for (std::size_t k = 0; k < mult; ++k) {
      // multiply by (x - root)
      c.push_back(0);
      for (std::size_t i = c.size() - 1; i > 0; --i) {
        c[i] = c[i - 1] - c[i] * root;
      }
      c[0] = -c[0] * root;
    }
  }
  return IntPolynomial(std::move(c));
}

bool IntPolynomial::is_monic() const {
  return !coeffs_.empty() && coeffs_.back() == 1;
}

BigInt IntPolynomial::evaluate(BigInt const& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

IntPolynomial IntPolynomial::operator*(IntPolynomial const& other) const {
  if (coeffs_.empty() || other.coeffs_.empty()) {
    return IntPolynomial();
  }
  std::vector<BigInt> out(coeffs_.size() + other.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) {
      out[i + j] += coeffs_[i] * other.coeffs_[j];
    }
  }
  return IntPolynomial(std::move(out));
}

std::vector<std::string> IntPolynomial::coefficient_strings() const {
  std::vector<std::string> out;
  for (auto const& c : coeffs_) {
    out.push_back(c.str());
  }
  return out;
}

std::size_t IntegerSpectrum::total_multiplicity() const {
  std::size_t total = 0;
  for (auto const& r : roots) {
    total += r.second;
  }
  return total;
}

namespace {

  // Divides `c` by (x - r) in place when r is a root; returns false
  // otherwise and leaves `c` untouched.
  bool divide_root(std::vector<BigInt>& c, std::int64_t r) {
    std::size_t const   n = c.size() - 1;
    std::vector<BigInt> q(n);
    BigInt              carry = c[n];
    for (std::size_t i = n; i-- > 0;) {
      q[i]  = carry;
      carry = c[i] + carry * r;
    }
    if (carry != 0) {
      return false;
    }
    c = std::move(q);
    return true;
  }

}  // namespace

std::optional<IntegerSpectrum> integer_roots(IntPolynomial const&        p,
                                             std::optional<std::int64_t> bound) {
  if (!p.is_monic()) {
    throw std::invalid_argument("integer_roots expects a monic polynomial");
  }
  std::vector<BigInt>                c = p.coefficients();
  std::map<std::int64_t, std::size_t> found;

  std::size_t zeros = 0;
  while (c.size() > 1 && c.front() == 0) {
    c.erase(c.begin());
    ++zeros;
  }
  if (zeros > 0) {
    found[0] = zeros;
  }

  if (!bound && c.size() > 1) {
    // If every root is real, each |r| is at most sqrt(sum r^2), and
    // sum r^2 = c_{n-1}^2 - 2 c_{n-2} for a monic polynomial.
    std::size_t const n  = c.size() - 1;
    BigInt const      s1 = c[n - 1];
    BigInt const      s2 = n >= 2 ? BigInt(s1 * s1 - 2 * c[n - 2]) : BigInt(s1 * s1);
    if (s2 < 0) {
      return std::nullopt;
    }
    BigInt root = boost::multiprecision::sqrt(s2);
    bound       = static_cast<std::int64_t>(root);
  }

  std::int64_t const limit = bound.value_or(0);
  for (std::int64_t mag = 1; mag <= limit && c.size() > 1; ++mag) {
    for (std::int64_t r : {-mag, mag}) {
      // The constant term is non-zero here and must be divisible by r.
      if (c.front() % r != 0) {
        continue;
      }
      while (c.size() > 1 && divide_root(c, r)) {
        ++found[r];
      }
    }
  }
  if (c.size() > 1) {
    return std::nullopt;
  }
  IntegerSpectrum spec;
  spec.roots.assign(found.begin(), found.end());
  return spec;
}

std::string rational_string(Rational const& r) {
  return boost::multiprecision::numerator(r).str() + "/"
         + boost::multiprecision::denominator(r).str();
}

}  // namespace engel
