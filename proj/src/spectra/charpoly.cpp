// Multimodular characteristic polynomial: Hessenberg reduction over Z/p for
// several 62-bit primes, then a Chinese-remainder lift to symmetric residues.

#include "engel/spectra.hpp"

#include <algorithm>
#include <cstdlib>

namespace engel {

namespace {

  using u64  = std::uint64_t;
  using u128 = unsigned __int128;

  u64 mul_mod(u64 a, u64 b, u64 p) {
    return static_cast<u64>(static_cast<u128>(a) * b % p);
  }

  u64 pow_mod(u64 base, u64 exp, u64 p) {
    u64 result = 1 % p;
    base %= p;
    while (exp > 0) {
      if (exp & 1U) {
        result = mul_mod(result, base, p);
      }
      base = mul_mod(base, base, p);
      exp >>= 1U;
    }
    return result;
  }

  // Deterministic Miller-Rabin for 64-bit inputs.
  bool is_prime_u64(u64 n) {
    if (n < 2) {
      return false;
    }
    for (u64 small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
      if (n % small == 0) {
        return n == small;
      }
    }
    u64      d = n - 1;
    unsigned s = 0;
    while ((d & 1U) == 0) {
      d >>= 1U;
      ++s;
    }
    for (u64 a : {2ULL, 325ULL, 9375ULL, 28178ULL, 450775ULL, 9780504ULL, 1795265022ULL}) {
      u64 x = pow_mod(a, d, n);
      if (x == 0 || x == 1 || x == n - 1) {
        continue;
      }
      bool composite = true;
      for (unsigned r = 1; r < s; ++r) {
        x = mul_mod(x, x, n);
        if (x == n - 1) {
          composite = false;
          break;
        }
      }
      if (composite) {
        return false;
      }
    }
    return true;
  }

  class PrimeSource {
   public:
    u64 next() {
      do {
        candidate_ -= 2;
      } while (!is_prime_u64(candidate_));
      return candidate_;
    }

   private:
    u64 candidate_ = (u64{1} << 62U) + 1;
  };

  u64 reduce(std::int64_t v, u64 p) {
    std::int64_t const r = v % static_cast<std::int64_t>(p);
    return r < 0 ? static_cast<u64>(r + static_cast<std::int64_t>(p)) : static_cast<u64>(r);
  }

  // Coefficients of det(xI - M) mod p, ascending.
  std::vector<u64> char_poly_mod(IntMatrix const& m, u64 p) {
    std::size_t const n = m.size();
    std::vector<u64>  h(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        h[i * n + j] = reduce(m(i, j), p);
      }
    }
    auto at  = [&](std::size_t i, std::size_t j) -> u64& { return h[i * n + j]; };
    auto sub = [p](u64 a, u64 b) { return a >= b ? a - b : a + (p - b); };
    auto add = [p](u64 a, u64 b) { return a >= p - b ? a - (p - b) : a + b; };

    for (std::size_t j = 0; j + 2 < n; ++j) {
      std::size_t piv = j + 1;
      while (piv < n && at(piv, j) == 0) {
        ++piv;
      }
      if (piv == n) {
        continue;
      }
      if (piv != j + 1) {
        for (std::size_t c = 0; c < n; ++c) {
          std::swap(at(piv, c), at(j + 1, c));
        }
        for (std::size_t r = 0; r < n; ++r) {
          std::swap(at(r, piv), at(r, j + 1));
        }
      }
      u64 const inv = pow_mod(at(j + 1, j), p - 2, p);
      for (std::size_t i = j + 2; i < n; ++i) {
        if (at(i, j) == 0) {
          continue;
        }
        u64 const u = mul_mod(at(i, j), inv, p);
        for (std::size_t c = 0; c < n; ++c) {
          at(i, c) = sub(at(i, c), mul_mod(u, at(j + 1, c), p));
        }
        for (std::size_t r = 0; r < n; ++r) {
          at(r, j + 1) = add(at(r, j + 1), mul_mod(u, at(r, i), p));
        }
      }
    }

    // poly[m] is the characteristic polynomial of the leading m x m block.
    std::vector<std::vector<u64>> poly(n + 1);
    poly[0] = {1};
    for (std::size_t k = 0; k < n; ++k) {
      std::vector<u64> next(k + 2, 0);
      for (std::size_t d = 0; d <= k; ++d) {
        next[d + 1] = add(next[d + 1], poly[k][d]);
        next[d]     = sub(next[d], mul_mod(at(k, k), poly[k][d], p));
      }
      u64 t = 1;
      for (std::size_t i = k; i-- > 0;) {
        t               = mul_mod(t, at(i + 1, i), p);
        u64 const scale = mul_mod(t, at(i, k), p);
        if (scale == 0) {
          continue;
        }
        for (std::size_t d = 0; d <= i; ++d) {
          next[d] = sub(next[d], mul_mod(scale, poly[i][d], p));
        }
      }
      poly[k + 1] = std::move(next);
    }
    return poly[n];
  }

}  // namespace

std::int64_t IntMatrix::max_abs_row_sum() const {
  std::int64_t best = 0;
  for (std::size_t i = 0; i < n_; ++i) {
    std::int64_t sum = 0;
    for (std::size_t j = 0; j < n_; ++j) {
      sum += std::llabs((*this)(i, j));
    }
    best = std::max(best, sum);
  }
  return best;
}

IntPolynomial char_poly_exact(IntMatrix const& m) {
  std::size_t const n = m.size();
  // Every eigenvalue is at most R in modulus, so |c_k| <= C(n,k) R^(n-k)
  // <= (1 + R)^n.
  BigInt const bound = boost::multiprecision::pow(BigInt(1 + m.max_abs_row_sum()),
                                                  static_cast<unsigned>(n));
  BigInt const target = 2 * bound;

  std::vector<BigInt> residue(n + 1, 0);
  BigInt              modulus = 1;
  PrimeSource         primes;
  while (modulus <= target) {
    u64 const        p      = primes.next();
    std::vector<u64> coeffs = char_poly_mod(m, p);
    u64 const        m_inv  = pow_mod(static_cast<u64>(modulus % p), p - 2, p);
    for (std::size_t k = 0; k <= n; ++k) {
      u64 const current = static_cast<u64>(residue[k] % p);
      u64 const diff    = coeffs[k] >= current ? coeffs[k] - current : coeffs[k] + (p - current);
      residue[k] += modulus * mul_mod(diff, m_inv, p);
    }
    modulus *= p;
  }
  BigInt const half = modulus / 2;
  for (auto& c : residue) {
    if (c > half) {
      c -= modulus;
    }
  }
  return IntPolynomial(std::move(residue));
}

}  // namespace engel
