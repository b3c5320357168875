// JSON documents for the command-line front end. Every document carries
// "schema": "engel-lab/1". Polynomials are arrays of decimal strings in
// ascending degree, spectra are [[value, multiplicity], ...] ascending and
// rationals are "num/den" strings.

#ifndef ENGEL_REPORTS_HPP_
#define ENGEL_REPORTS_HPP_

#include "engel/analysis.hpp"
#include "engel/genus.hpp"
#include "engel/spec.hpp"
#include "engel/spectra.hpp"

#include "json.hpp"

namespace engel {

struct AnalyzeLimits {
  std::size_t clique_limit  = default_clique_limit;
  // Characteristic polynomials are skipped above this many vertices.
  std::size_t spectra_limit = 200;
  unsigned    workers       = 1;
};

nlohmann::json shape_json(MultipartiteShape const& shape);
nlohmann::json integer_spectrum_json(IntegerSpectrum const& s);
nlohmann::json matrix_spectrum_json(MatrixSpectrum const& m);
nlohmann::json spectrum_json(SpectrumReport const& r);
// Polynomials always; energies only when all three spectra are integral.
nlohmann::json spectrum_json(SpectralData const& d);
nlohmann::json surface_json(SurfaceClass const& s);
nlohmann::json zagreb_json(ZagrebReport const& z);

// Order, element-order census, L(G), Fitting validation, nilpotent and
// soluble flags, hypercenter order.
nlohmann::json group_report(GroupSpec const& spec, FiniteGroup const& g, unsigned workers = 1);

// Shape, clique number, planarity, surface class, spectra and Zagreb
// indices of the reduced co-Engel graph. Work beyond the limits appears as
// {"skipped": reason}.
nlohmann::json analyze_report(GroupSpec const&     spec,
                              FiniteGroup const&   g,
                              AnalyzeLimits const& limits = {});

}  // namespace engel

#endif  // ENGEL_REPORTS_HPP_
