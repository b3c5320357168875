// Exact characteristic polynomials, integer spectra and graph energies.
//
// Nothing in this module uses floating point. Characteristic polynomials are
// computed modulo a set of 62-bit primes (Hessenberg reduction) and lifted by
// Chinese remaindering; enough primes are used to exceed twice a rigorous
// bound on every coefficient, so the lift is exact.

#ifndef ENGEL_SPECTRA_HPP_
#define ENGEL_SPECTRA_HPP_

#include "engel/graph.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace engel {

using BigInt   = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Dense square integer matrix, row-major.
class IntMatrix {
 public:
  explicit IntMatrix(std::size_t n = 0) : n_(n), data_(n * n, 0) {}

  std::size_t size() const noexcept {
    return n_;
  }

  std::int64_t& operator()(std::size_t i, std::size_t j) {
    return data_[i * n_ + j];
  }

  std::int64_t operator()(std::size_t i, std::size_t j) const {
    return data_[i * n_ + j];
  }

  // Largest absolute row sum.
  std::int64_t max_abs_row_sum() const;

 private:
  std::size_t               n_;
  std::vector<std::int64_t> data_;
};

IntMatrix adjacency_matrix(SimpleGraph const& g);
IntMatrix laplacian_matrix(SimpleGraph const& g);         // D - A
IntMatrix signless_laplacian_matrix(SimpleGraph const& g);  // D + A

// Integer coefficients in ascending degree.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coefficients);

  // prod (x - root)^multiplicity
  static IntPolynomial from_roots(std::vector<std::pair<std::int64_t, std::size_t>> const& roots);

  std::vector<BigInt> const& coefficients() const noexcept {
    return coeffs_;
  }

  // -1 for the zero polynomial.
  long degree() const noexcept {
    return static_cast<long>(coeffs_.size()) - 1;
  }

  bool is_monic() const;

  BigInt evaluate(BigInt const& x) const;

  IntPolynomial operator*(IntPolynomial const& other) const;

  bool operator==(IntPolynomial const&) const = default;

  std::vector<std::string> coefficient_strings() const;

 private:
  void trim();

  std::vector<BigInt> coeffs_;
};

// Multiset of integer roots, ascending by value.
struct IntegerSpectrum {
  std::vector<std::pair<std::int64_t, std::size_t>> roots;

  std::size_t total_multiplicity() const;

  bool operator==(IntegerSpectrum const&) const = default;
};

// det(xI - M), monic of degree n.
IntPolynomial char_poly_exact(IntMatrix const& m);

// Full factorisation over the integers by trial division, or nullopt when
// some root is not an integer. Candidates satisfy |r| <= bound; without a
// bound, sqrt(sum of squared roots) from the top two coefficients is used.
std::optional<IntegerSpectrum> integer_roots(IntPolynomial const&        p,
                                             std::optional<std::int64_t> bound = std::nullopt);

class NonIntegralSpectrum : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct MatrixSpectrum {
  IntPolynomial                  polynomial;
  std::optional<IntegerSpectrum> spectrum;

  bool operator==(MatrixSpectrum const&) const = default;
};

struct SpectralData {
  MatrixSpectrum adjacency;
  MatrixSpectrum laplacian;
  MatrixSpectrum signless;
  std::size_t    vertices = 0;
  std::size_t    edges    = 0;

  bool super_integral() const {
    return adjacency.spectrum && laplacian.spectrum && signless.spectrum;
  }
};

// Polynomials and (where integral) spectra of A, L and Q.
SpectralData spectral_data(SimpleGraph const& g);

struct SpectrumReport {
  MatrixSpectrum adjacency;
  MatrixSpectrum laplacian;
  MatrixSpectrum signless;
  Rational       mean_degree;  // 2e / v
  Rational       energy;       // sum |lambda|
  Rational       laplacian_energy;
  Rational       signless_laplacian_energy;
  bool           super_integral  = false;
  bool           hyperenergetic  = false;  // E > 2(n - 1)
  bool           hypoenergetic   = false;  // E < n
  bool           ele_holds       = false;  // E <= LE

  bool operator==(SpectrumReport const&) const = default;
};

// Throws NonIntegralSpectrum when any of the three spectra is not integral.
SpectrumReport spectrum_report(SimpleGraph const& g);
SpectrumReport spectrum_report(SpectralData const& data);

// Families with closed-form spectra.
struct CompleteFamily {
  std::size_t n;
};
struct UniformMultipartiteFamily {
  std::size_t a;  // parts
  std::size_t b;  // part size
};

// Report for K_n or K_{a.b} assembled from the closed forms, without any
// matrix work. Throws std::invalid_argument for empty parameters.
SpectrumReport closed_form_spectra(CompleteFamily family);
SpectrumReport closed_form_spectra(UniformMultipartiteFamily family);

std::string rational_string(Rational const& r);

}  // namespace engel

#endif  // ENGEL_SPECTRA_HPP_
