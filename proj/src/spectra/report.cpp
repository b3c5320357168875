#include "engel/spectra.hpp"

#include <map>

namespace engel {

namespace {

  IntMatrix degree_plus(SimpleGraph const& g, std::int64_t sign) {
    std::size_t const n = g.vertex_count();
    IntMatrix         m(n);
    for (std::size_t i = 0; i < n; ++i) {
      m(i, i) = static_cast<std::int64_t>(g.degree(i));
      for (std::size_t j : g.neighbours(i)) {
        m(i, j) = sign;
      }
    }
    return m;
  }

  MatrixSpectrum analyse(IntMatrix const& m) {
    MatrixSpectrum out;
    out.polynomial = char_poly_exact(m);
    out.spectrum   = integer_roots(out.polynomial, m.max_abs_row_sum());
    return out;
  }

  Rational absolute_deviation(IntegerSpectrum const& s, Rational const& centre) {
    Rational total = 0;
    for (auto [value, mult] : s.roots) {
      Rational d = Rational(value) - centre;
      if (d < 0) {
        d = -d;
      }
      total += d * static_cast<unsigned long long>(mult);
    }
    return total;
  }

  using RootList = std::vector<std::pair<std::int64_t, std::size_t>>;

  // Merges repeated values and drops zero multiplicities.
  MatrixSpectrum from_multiset(RootList const& raw) {
    std::map<std::int64_t, std::size_t> merged;
    for (auto [value, mult] : raw) {
      if (mult > 0) {
        merged[value] += mult;
      }
    }
    IntegerSpectrum spec;
    spec.roots.assign(merged.begin(), merged.end());
    return {IntPolynomial::from_roots(spec.roots), spec};
  }

  SpectrumReport assemble(MatrixSpectrum adjacency,
                          MatrixSpectrum laplacian,
                          MatrixSpectrum signless,
                          std::size_t    vertices,
                          std::size_t    edges) {
    if (!adjacency.spectrum || !laplacian.spectrum || !signless.spectrum) {
      throw NonIntegralSpectrum("graph is not super integral");
    }
    SpectrumReport r;
    r.super_integral = true;
    r.mean_degree    = vertices == 0 ? Rational(0)
                                     : Rational(2 * static_cast<long long>(edges),
                                                static_cast<long long>(vertices));
    r.energy                    = absolute_deviation(*adjacency.spectrum, 0);
    r.laplacian_energy          = absolute_deviation(*laplacian.spectrum, r.mean_degree);
    r.signless_laplacian_energy = absolute_deviation(*signless.spectrum, r.mean_degree);
    auto const n                = static_cast<long long>(vertices);
    r.hyperenergetic            = r.energy > Rational(2 * (n - 1));
    r.hypoenergetic             = r.energy < Rational(n);
    r.ele_holds                 = r.energy <= r.laplacian_energy;
    r.adjacency                 = std::move(adjacency);
    r.laplacian                 = std::move(laplacian);
    r.signless                  = std::move(signless);
    return r;
  }

  std::int64_t as_int(std::size_t v) {
    return static_cast<std::int64_t>(v);
  }

}  // namespace

IntMatrix adjacency_matrix(SimpleGraph const& g) {
  std::size_t const n = g.vertex_count();
  IntMatrix         m(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j : g.neighbours(i)) {
      m(i, j) = 1;
    }
  }
  return m;
}

IntMatrix laplacian_matrix(SimpleGraph const& g) {
  return degree_plus(g, -1);
}

IntMatrix signless_laplacian_matrix(SimpleGraph const& g) {
  return degree_plus(g, 1);
}

SpectralData spectral_data(SimpleGraph const& g) {
  SpectralData d;
  d.adjacency = analyse(adjacency_matrix(g));
  d.laplacian = analyse(laplacian_matrix(g));
  d.signless  = analyse(signless_laplacian_matrix(g));
  d.vertices  = g.vertex_count();
  d.edges     = g.edge_count();
  return d;
}

SpectrumReport spectrum_report(SpectralData const& data) {
  return assemble(data.adjacency, data.laplacian, data.signless, data.vertices, data.edges);
}

SpectrumReport spectrum_report(SimpleGraph const& g) {
  return spectrum_report(spectral_data(g));
}

SpectrumReport closed_form_spectra(CompleteFamily family) {
  if (family.n == 0) {
    throw std::invalid_argument("K_n needs n >= 1");
  }
  std::int64_t const n = as_int(family.n);
  std::size_t const  r = family.n - 1;
  return assemble(from_multiset({{-1, r}, {n - 1, 1}}),
                  from_multiset({{0, 1}, {n, r}}),
                  from_multiset({{n - 2, r}, {2 * n - 2, 1}}),
                  family.n,
                  family.n * r / 2);
}

SpectrumReport closed_form_spectra(UniformMultipartiteFamily family) {
  if (family.a == 0 || family.b == 0) {
    throw std::invalid_argument("K_{a.b} needs a, b >= 1");
  }
  std::int64_t const a = as_int(family.a);
  std::int64_t const b = as_int(family.b);
  std::size_t const  inner = family.a * (family.b - 1);
  std::size_t const  outer = family.a - 1;
  return assemble(from_multiset({{0, inner}, {-b, outer}, {b * (a - 1), 1}}),
                  from_multiset({{0, 1}, {b * (a - 1), inner}, {a * b, outer}}),
                  from_multiset({{b * (a - 1), inner}, {b * (a - 2), outer}, {2 * b * (a - 1), 1}}),
                  family.a * family.b,
                  family.a * (family.a - 1) * family.b * family.b / 2);
}

}  // namespace engel
