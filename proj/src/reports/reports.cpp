#include "engel/reports.hpp"

#include "engel/engel.hpp"
#include "engel/export.hpp"

namespace engel {

using nlohmann::json;

namespace {

  json names_of(FiniteGroup const& g, std::vector<Element> const& elements) {
    json out = json::array();
    for (Element e : elements) {
      out.push_back(g.element_name(e));
    }
    return out;
  }

  json skipped(std::string const& reason) {
    return {{"skipped", reason}};
  }

}  // namespace

json shape_json(MultipartiteShape const& shape) {
  return {{"parts", shape.parts},
          {"uniform", shape.is_uniform},
          {"a", shape.a},
          {"b", shape.b}};
}

json integer_spectrum_json(IntegerSpectrum const& s) {
  json out = json::array();
  for (auto [value, mult] : s.roots) {
    out.push_back({value, mult});
  }
  return out;
}

json matrix_spectrum_json(MatrixSpectrum const& m) {
  return {{"polynomial", m.polynomial.coefficient_strings()},
          {"spectrum", m.spectrum ? integer_spectrum_json(*m.spectrum) : json(nullptr)}};
}

json spectrum_json(SpectrumReport const& r) {
  return {{"adjacency", matrix_spectrum_json(r.adjacency)},
          {"laplacian", matrix_spectrum_json(r.laplacian)},
          {"signless_laplacian", matrix_spectrum_json(r.signless)},
          {"mean_degree", rational_string(r.mean_degree)},
          {"energy", rational_string(r.energy)},
          {"laplacian_energy", rational_string(r.laplacian_energy)},
          {"signless_laplacian_energy", rational_string(r.signless_laplacian_energy)},
          {"super_integral", r.super_integral},
          {"hyperenergetic", r.hyperenergetic},
          {"hypoenergetic", r.hypoenergetic},
          {"energy_le_laplacian_energy", r.ele_holds}};
}

json spectrum_json(SpectralData const& d) {
  if (d.super_integral()) {
    return spectrum_json(spectrum_report(d));
  }
  return {{"adjacency", matrix_spectrum_json(d.adjacency)},
          {"laplacian", matrix_spectrum_json(d.laplacian)},
          {"signless_laplacian", matrix_spectrum_json(d.signless)},
          {"super_integral", false}};
}

json surface_json(SurfaceClass const& s) {
  auto opt = [](auto const& v) { return v ? json(*v) : json(nullptr); };
  return {{"genus", opt(s.genus)},
          {"crosscap", opt(s.crosscap)},
          {"classification", to_string(s.classification)},
          {"projective", opt(s.projective)},
          {"genus_lower_bound", opt(s.genus_lower_bound)},
          {"crosscap_lower_bound", opt(s.crosscap_lower_bound)},
          {"basis", s.basis}};
}

json zagreb_json(ZagrebReport const& z) {
  auto ratio = [](std::optional<Rational> const& r) {
    return r ? json(rational_string(*r)) : json(nullptr);
  };
  return {{"m1", z.m1.str()},
          {"m2", z.m2.str()},
          {"vertices", z.v_count},
          {"edges", z.e_count},
          {"m2_over_e", ratio(z.hv_lhs)},
          {"m1_over_v", ratio(z.hv_rhs)},
          {"hansen_vukicevic_holds", z.hv_holds ? json(*z.hv_holds) : json(nullptr)}};
}

json group_report(GroupSpec const& spec, FiniteGroup const& g, unsigned workers) {
  EngelRelation const  rel(g, workers);
  std::vector<Element> l     = left_engel_set(rel);
  FittingCheck const   check = validate_fitting(g, l);
  json census = json::array();
  for (auto [order, count] : order_census(g)) {
    census.push_back({order, count});
  }
  return {{"schema", schema_version},
          {"group", to_string(spec)},
          {"label", g.label()},
          {"order", g.order()},
          {"element_orders", census},
          {"left_engel", names_of(g, l)},
          {"left_engel_size", l.size()},
          {"fitting_check",
           {{"is_subgroup", check.is_subgroup},
            {"is_normal", check.is_normal},
            {"is_nilpotent", check.is_nilpotent},
            {"is_maximal", check.is_maximal},
            {"passed", check.passed()}}},
          {"nilpotent", is_nilpotent(g)},
          {"soluble", is_soluble(g)},
          {"hypercenter_order", hypercenter(g).size()}};
}

json analyze_report(GroupSpec const& spec, FiniteGroup const& g, AnalyzeLimits const& limits) {
  EngelRelation const rel(g, limits.workers);
  json doc{{"schema", schema_version},
           {"group", to_string(spec)},
           {"label", g.label()},
           {"order", g.order()}};
  std::vector<Element> l = left_engel_set(rel);
  doc["left_engel_size"] = l.size();
  if (l.size() == g.order()) {
    doc["reduced"] = skipped("group is Engel; the reduced graph has no vertices");
    return doc;
  }
  ReducedGraph const reduced = reduced_co_engel_graph(g, rel);
  SimpleGraph const& graph   = reduced.graph;
  auto const         shape   = recognize_complete_multipartite(graph);
  doc["reduced"] = {{"vertices", graph.vertex_count()},
                    {"edges", graph.edge_count()},
                    {"shape", shape ? shape_json(*shape) : json(nullptr)}};
  if (graph.vertex_count() <= limits.clique_limit) {
    doc["clique_number"] = clique_number(graph, limits.clique_limit);
  } else {
    doc["clique_number"] = skipped("more than " + std::to_string(limits.clique_limit)
                                   + " vertices");
  }
  doc["planar"]  = is_planar(graph);
  doc["surface"] = surface_json(surface_class_of_reduced(g, reduced));
  if (graph.vertex_count() <= limits.spectra_limit) {
    doc["spectra"] = spectrum_json(spectral_data(graph));
  } else {
    doc["spectra"] = skipped("more than " + std::to_string(limits.spectra_limit)
                             + " vertices");
  }
  doc["zagreb"] = zagreb_json(zagreb_report(graph));
  return doc;
}

}  // namespace engel
