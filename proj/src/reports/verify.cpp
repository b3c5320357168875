#include "engel/verify.hpp"

#include "engel/analysis.hpp"
#include "engel/engel.hpp"
#include "engel/export.hpp"
#include "engel/genus.hpp"
#include "engel/reports.hpp"
#include "engel/spectra.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <set>
#include <sstream>

namespace engel {

using nlohmann::json;

namespace {

  using RootList = std::vector<std::pair<std::int64_t, std::size_t>>;

  constexpr std::size_t sweep_t[] = {1, 2, 3};
  constexpr std::size_t sweep_m[] = {3, 5, 7, 9};
  constexpr std::pair<std::uint64_t, std::uint64_t> sweep_pq[] = {
      {2, 3}, {2, 5}, {2, 7}, {3, 7}, {3, 13}, {5, 11}};

  bool power_of_two(std::size_t n) {
    return n != 0 && (n & (n - 1)) == 0;
  }

  std::int64_t ceil_div(std::int64_t num, std::int64_t den) {
    return num <= 0 ? 0 : (num + den - 1) / den;
  }

  std::vector<std::size_t> repeated(std::size_t count, std::size_t value) {
    return std::vector<std::size_t>(count, value);
  }

  struct Facts {
    GroupSpec                        spec;
    std::string                      name;
    FiniteGroup                      group;
    EngelRelation                    relation;
    std::vector<Element>             left;
    std::optional<ReducedGraph>      reduced;
    std::optional<MultipartiteShape> shape;

    Facts(GroupSpec s, FiniteGroup g, unsigned workers)
        : spec(std::move(s)),
          name(to_string(spec)),
          group(std::move(g)),
          relation(group, workers),
          left(left_engel_set(relation)) {
      if (left.size() < group.order()) {
        reduced = reduced_co_engel_graph(group, relation);
        shape   = recognize_complete_multipartite(reduced->graph);
      }
    }

    json parts() const {
      return shape ? json(shape->parts) : json(nullptr);
    }

    Element generator(std::string const& gen_name) const {
      for (auto const& gen : group.generators()) {
        if (gen.name == gen_name) {
          return gen.index;
        }
      }
      throw std::logic_error(name + " has no generator " + gen_name);
    }
  };

  class Sweep {
   public:
    explicit Sweep(VerifyOptions const& options) : options_(options) {}

    // nullptr when the group is above the order bound.
    Facts const* facts(GroupSpec const& spec) {
      std::string const key = to_string(spec);
      if (auto it = known_.find(key); it != known_.end()) {
        return it->second.get();
      }
      if (spec_order(spec) > options_.max_order) {
        return nullptr;
      }
      FiniteGroup g = options_.cache ? options_.cache->obtain(spec) : build_group(spec);
      auto        f = std::make_unique<Facts>(spec, std::move(g), options_.workers);
      return known_.emplace(key, std::move(f)).first->second.get();
    }

    void add(std::string claim, std::string const& group, json expected, json computed) {
      std::string status = expected == computed ? "pass" : "fail";
      records_.push_back(
          {std::move(claim), group, std::move(expected), std::move(computed), std::move(status)});
    }

    void skip(std::initializer_list<char const*> claims, GroupSpec const& spec) {
      std::string const reason = "order " + std::to_string(spec_order(spec))
                                 + " exceeds --max-order "
                                 + std::to_string(options_.max_order);
      for (char const* claim : claims) {
        records_.push_back({claim, to_string(spec), nullptr, {{"skipped", reason}}, "skipped"});
      }
    }

    std::vector<VerificationRecord> take() {
      std::sort(records_.begin(), records_.end(), [](auto const& a, auto const& b) {
        return std::tie(a.claim_id, a.group) < std::tie(b.claim_id, b.group);
      });
      return std::move(records_);
    }

   private:
    VerifyOptions const&                          options_;
    std::map<std::string, std::unique_ptr<Facts>> known_;
    std::vector<VerificationRecord>               records_;
  };

  json spectrum_from_roots(RootList const& raw) {
    std::map<std::int64_t, std::size_t> merged;
    for (auto [value, mult] : raw) {
      if (mult > 0) {
        merged[value] += mult;
      }
    }
    IntegerSpectrum s;
    s.roots.assign(merged.begin(), merged.end());
    return matrix_spectrum_json({IntPolynomial::from_roots(s.roots), s});
  }

  // The theorem's three spectra with E = LE = LE+ = energy, neither hyper-
  // nor hypoenergetic.
  json energy_expected(RootList const& a, RootList const& l, RootList const& q, std::int64_t energy) {
    std::string const e = std::to_string(energy) + "/1";
    return {{"adjacency", spectrum_from_roots(a)},
            {"laplacian", spectrum_from_roots(l)},
            {"signless_laplacian", spectrum_from_roots(q)},
            {"energy", e},
            {"laplacian_energy", e},
            {"signless_laplacian_energy", e},
            {"super_integral", true},
            {"hyperenergetic", false},
            {"hypoenergetic", false},
            {"energy_le_laplacian_energy", true}};
  }

  json energy_computed(Facts const& f) {
    json j = spectrum_json(spectral_data(f.reduced->graph));
    j.erase("mean_degree");
    return j;
  }

  json zagreb_expected(BigInt const& m1, BigInt const& m2, BigInt const& ratio) {
    std::string const r = ratio.str() + "/1";
    return {{"m1", m1.str()}, {"m2", m2.str()}, {"m2_over_e", r}, {"m1_over_v", r}};
  }

  json zagreb_computed(Facts const& f) {
    ZagrebReport const z = zagreb_report(f.reduced->graph);
    auto ratio = [](std::optional<Rational> const& r) {
      return r ? json(rational_string(*r)) : json(nullptr);
    };
    return {{"m1", z.m1.str()},
            {"m2", z.m2.str()},
            {"m2_over_e", ratio(z.hv_lhs)},
            {"m1_over_v", ratio(z.hv_rhs)}};
  }

  std::string classification(Facts const& f) {
    return to_string(surface_class_of_reduced(f.group, *f.reduced).classification);
  }

  json euler_consistency(Facts const& f) {
    SurfaceClass const s = surface_class_of_reduced(f.group, *f.reduced);
    return {{"genus_at_least_euler_bound",
             s.genus && *s.genus >= s.genus_lower_bound.value_or(0)}};
  }

  json euler_expected() {
    return {{"genus_at_least_euler_bound", true}};
  }

  std::vector<std::string> sorted_names(FiniteGroup const& g, std::vector<Element> const& xs) {
    std::vector<std::string> out;
    for (Element x : xs) {
      out.push_back(g.element_name(x));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  json fitting_json(FittingCheck const& c) {
    return {{"is_subgroup", c.is_subgroup},
            {"is_normal", c.is_normal},
            {"is_nilpotent", c.is_nilpotent},
            {"is_maximal", c.is_maximal}};
  }

  json fitting_expected() {
    return fitting_json({true, true, true, true});
  }

  bool has_single_arc(Facts const& f) {
    return !single_arc_pairs(directed_engel_graph(f.group, f.relation)).empty();
  }

  // Violations of the three bullets of the D_{2n} arc description; C is
  // the rotation subgroup, indices 0..n-1.
  json dihedral_arc_violations(Facts const& f) {
    FiniteGroup const& g = f.group;
    std::size_t const  n = g.order() / 2;
    auto arc = [&](Element x, Element y) { return f.relation.terminates(y, x); };
    std::size_t bad[3] = {0, 0, 0};
    for (Element x = 0; x < g.order(); ++x) {
      for (Element y = 0; y < g.order(); ++y) {
        if (x == y) {
          continue;
        }
        bool const x_in = x < n;
        bool const y_in = y < n;
        if (x_in && y_in) {
          bad[0] += !(arc(x, y) && arc(y, x));
        } else if (x_in) {
          bool const back = power_of_two(element_order(g, commutator(g, y, x)));
          bad[1] += !(arc(x, y) && arc(y, x) == back);
        } else if (!y_in) {
          bool const both = power_of_two(element_order(g, g.mul(x, y)));
          bad[2] += both ? !(arc(x, y) && arc(y, x)) : (arc(x, y) || arc(y, x));
        }
      }
    }
    return {{"bullet_1_violations", bad[0]},
            {"bullet_2_violations", bad[1]},
            {"bullet_3_violations", bad[2]}};
  }

  ////////////////////////////////////////////////////////////////////////

  void dihedral_family(Sweep& sweep, bool quaternion) {
    for (std::size_t t : sweep_t) {
      for (std::size_t m : sweep_m) {
        std::size_t const order = (std::size_t{1} << (t + 1)) * m;
        std::size_t const b     = std::size_t{1} << t;
        GroupSpec const   spec  = quaternion ? quaternion_spec(order) : dihedral_spec(order);
        Facts const*      f     = sweep.facts(spec);
        if (!f) {
          sweep.skip({"thm-dihed", "fitting-baer", "genus-formula-dihed",
                      quaternion ? "genus-class-Q" : "genus-class-D", "genus-euler-consistency",
                      "energy-d2m", "zagreb-dihed", "directed-single-arcs"},
                     spec);
          continue;
        }
        std::string const& name = f->name;
        sweep.add("thm-dihed", name, repeated(m, b), f->parts());
        sweep.add("fitting-baer", name, fitting_expected(),
                  fitting_json(validate_fitting(f->group, f->left)));

        auto const   mi      = static_cast<std::int64_t>(m);
        auto const   half    = static_cast<std::int64_t>(b / 2) - 1;  // 2^{t-1} - 1
        std::int64_t theorem = mi * (mi - 1) * half * half / 2 + ceil_div((mi - 3) * (mi - 4), 12);
        sweep.add("genus-formula-dihed", name, theorem,
                  f->shape ? json(genus_uniform_multipartite(f->shape->a, f->shape->b))
                           : json(nullptr));

        std::string expected_class = "genus>=5";
        if (t == 1 && m == 3) {
          expected_class = "planar";
        } else if (t == 1 && (m == 5 || m == 7)) {
          expected_class = "toroidal";
        } else if ((t == 1 && m == 9) || (t == 2 && m == 3)) {
          expected_class = "triple-toroidal";
        }
        sweep.add(quaternion ? "genus-class-Q" : "genus-class-D", name, expected_class,
                  classification(*f));
        sweep.add("genus-euler-consistency", name, euler_expected(), euler_consistency(*f));

        auto const B = static_cast<std::int64_t>(b);
        sweep.add("energy-d2m", name,
                  energy_expected({{0, m * (b - 1)}, {-B, m - 1}, {B * (mi - 1), 1}},
                                  {{0, 1}, {B * (mi - 1), m * (b - 1)}, {B * mi, m - 1}},
                                  {{B * (mi - 1), m * (b - 1)}, {B * (mi - 2), m - 1},
                                   {2 * B * (mi - 1), 1}},
                                  2 * B * (mi - 1)),
                  energy_computed(*f));

        BigInt const two = 2;
        BigInt const M   = m;
        sweep.add("zagreb-dihed", name,
                  zagreb_expected(pow(two, 3 * t) * M * (M - 1) * (M - 1),
                                  pow(two, 4 * t - 1) * M * (M - 1) * (M - 1) * (M - 1),
                                  pow(two, 2 * t) * (M - 1) * (M - 1)),
                  zagreb_computed(*f));
        sweep.add("directed-single-arcs", name, true, has_single_arc(*f));

        if (quaternion) {
          Facts const* d = sweep.facts(dihedral_spec(order));
          if (d) {
            sweep.add("thm-dihed-iso", name, true,
                      graphs_isomorphic_small(d->reduced->graph, f->reduced->graph));
          }
        } else {
          Element const y = f->generator("y");
          sweep.add("left-engel-dihed", name,
                    sorted_names(f->group, subgroup_generated(f->group, std::vector{y}).members()),
                    sorted_names(f->group, f->left));
          sweep.add("directed-dihed-proposition", name,
                    json{{"bullet_1_violations", 0},
                         {"bullet_2_violations", 0},
                         {"bullet_3_violations", 0}},
                    dihedral_arc_violations(*f));
          sweep.add("directed-single-arcs-outside-L", name, 0,
                    single_arcs_outside_L(f->group).size());
        }
      }
    }
    if (quaternion) {
      return;
    }
    for (std::size_t m : sweep_m) {
      GroupSpec const spec = dihedral_spec(2 * m);
      Facts const*    f    = sweep.facts(spec);
      if (!f) {
        sweep.skip({"thm-dihed-d2m", "genus-class-D2m", "energy-d2m-odd", "left-engel-dihed"},
                   spec);
        continue;
      }
      auto const mi = static_cast<std::int64_t>(m);
      sweep.add("thm-dihed-d2m", f->name, repeated(m, 1), f->parts());
      std::string expected_class = "genus>=5";
      if (m == 3) {
        expected_class = "planar";
      } else if (m == 5 || m == 7) {
        expected_class = "toroidal";
      } else if (m == 9) {
        expected_class = "triple-toroidal";
      }
      sweep.add("genus-class-D2m", f->name, expected_class, classification(*f));
      sweep.add("genus-euler-consistency", f->name, euler_expected(), euler_consistency(*f));
      sweep.add("energy-d2m-odd", f->name,
                energy_expected({{-1, m - 1}, {mi - 1, 1}}, {{0, 1}, {mi, m - 1}},
                                {{mi - 2, m - 1}, {2 * (mi - 1), 1}}, 2 * (mi - 1)),
                energy_computed(*f));
      Element const y = f->generator("y");
      sweep.add("left-engel-dihed", f->name,
                sorted_names(f->group, subgroup_generated(f->group, std::vector{y}).members()),
                sorted_names(f->group, f->left));
    }
  }

  void frobenius_family(Sweep& sweep) {
    for (auto [p, q] : sweep_pq) {
      GroupSpec const spec = frobenius_spec(p, q);
      Facts const*    f    = sweep.facts(spec);
      if (!f) {
        sweep.skip({"thm-pq", "left-engel-fpq", "fitting-baer", "genus-formula-pq",
                    "genus-class-F", "genus-euler-consistency", "energy-fpq", "zagreb-fpq",
                    "directed-single-arcs"},
                   spec);
        continue;
      }
      std::string const& name = f->name;
      auto const         P    = static_cast<std::int64_t>(p);
      auto const         Q    = static_cast<std::int64_t>(q);
      sweep.add("thm-pq", name, repeated(q, p - 1), f->parts());
      Element const b = f->generator("b");
      sweep.add("left-engel-fpq", name,
                sorted_names(f->group, subgroup_generated(f->group, std::vector{b}).members()),
                sorted_names(f->group, f->left));
      sweep.add("fitting-baer", name, fitting_expected(),
                fitting_json(validate_fitting(f->group, f->left)));

      std::int64_t theorem = ceil_div((Q - 3) * (Q - 4), 12);
      if (p >= 3) {
        theorem += Q * (Q - 1) / 2 * ceil_div((P - 3) * (P - 3), 4);
      }
      json computed_genus = nullptr;
      if (f->shape && f->shape->is_uniform) {
        computed_genus = genus_uniform_multipartite(f->shape->a, f->shape->b);
      }
      sweep.add("genus-formula-pq", name, theorem, computed_genus);

      std::string expected_class = "genus>=5";
      if (p == 2 && q == 3) {
        expected_class = "planar";
      } else if ((p == 2 && (q == 5 || q == 7)) || (p == 3 && q == 7)) {
        expected_class = "toroidal";
      }
      sweep.add("genus-class-F", name, expected_class, classification(*f));
      sweep.add("genus-euler-consistency", name, euler_expected(), euler_consistency(*f));

      std::size_t const pm1 = p - 1;
      std::size_t const qm1 = q - 1;
      sweep.add("energy-fpq", name,
                energy_expected({{0, q * (p - 2)}, {-(P - 1), qm1}, {(P - 1) * (Q - 1), 1}},
                                {{0, 1}, {(P - 1) * (Q - 1), q * (p - 2)}, {Q * (P - 1), qm1}},
                                {{(P - 1) * (Q - 1), q * (p - 2)}, {(P - 1) * (Q - 2), qm1},
                                 {2 * (P - 1) * (Q - 1), 1}},
                                2 * (P - 1) * (Q - 1)),
                energy_computed(*f));
      BigInt const bp = pm1;
      BigInt const bq = q;
      sweep.add("zagreb-fpq", name,
                zagreb_expected(bq * (bq - 1) * (bq - 1) * bp * bp * bp,
                                bq * (bq - 1) * (bq - 1) * (bq - 1) * bp * bp * bp * bp / 2,
                                (bq - 1) * (bq - 1) * bp * bp),
                zagreb_computed(*f));
      sweep.add("directed-single-arcs", name, true, has_single_arc(*f));
    }
  }

  void product_family(Sweep& sweep) {
    std::vector<GroupSpec> const engel_factors{cyclic_spec(2), cyclic_spec(3), cyclic_spec(4),
                                               quaternion_spec(8)};
    std::vector<GroupSpec> const bases{dihedral_spec(12), quaternion_spec(12),
                                       frobenius_spec(3, 7)};
    for (auto const& h : engel_factors) {
      for (auto const& base : bases) {
        GroupSpec const spec = product_spec({h, base});
        Facts const*    g    = sweep.facts(base);
        Facts const*    f    = sweep.facts(spec);
        if (!f || !g) {
          sweep.skip({"thm-bipar", "thm-bipar-partite-sets", "left-engel-product",
                      "directed-single-arcs"},
                     spec);
          continue;
        }
        std::size_t const l = spec_order(h);
        std::size_t const m = g->shape->a;
        std::size_t const n = g->shape->b;
        sweep.add("thm-bipar", f->name, repeated(l * m, n), f->parts());
        sweep.add("thm-bipar-partite-sets", f->name, repeated(m, l * n), f->parts());
        std::vector<Element> law;
        for (std::size_t u = 0; u < l; ++u) {
          for (Element x : g->left) {
            law.push_back(static_cast<Element>(u * g->group.order() + x));
          }
        }
        sweep.add("left-engel-product", f->name, law, f->left);
        sweep.add("directed-single-arcs", f->name, true, has_single_arc(*f));
      }
    }
  }

  // Is every pair between the two vertex sets of the reduced graph adjacent?
  bool contains_biclique(Facts const& f, std::size_t left_size, std::size_t right_size) {
    auto classes = multipartite_classes(f.reduced->graph);
    std::vector<std::size_t> left;
    std::vector<std::size_t> right;
    for (auto const& cls : classes) {
      auto& side = left.size() < left_size ? left : right;
      side.insert(side.end(), cls.begin(), cls.end());
    }
    return left.size() == left_size && right.size() == right_size
           && verify_biclique(f.reduced->graph, left, right);
  }

  void special_groups(Sweep& sweep) {
    // Nilpotent groups: complete directed graphs.
    for (auto const& spec : {quaternion_spec(8), dihedral_spec(8), cyclic_spec(6), cyclic_spec(7)}) {
      if (Facts const* f = sweep.facts(spec)) {
        sweep.add("directed-nilpotent-complete", f->name, true,
                  directed_engel_graph(f->group, f->relation).is_complete());
      } else {
        sweep.skip({"directed-nilpotent-complete"}, spec);
      }
    }
    for (auto const& spec : {symmetric_spec(3), symmetric_spec(4), dihedral_spec(12),
                             quaternion_spec(12)}) {
      if (Facts const* f = sweep.facts(spec)) {
        sweep.add("directed-single-arcs", f->name, true, has_single_arc(*f));
      } else {
        sweep.skip({"directed-single-arcs"}, spec);
      }
    }

    if (Facts const* s4 = sweep.facts(symmetric_spec(4))) {
      FiniteGroup const& g = s4->group;
      sweep.add("left-engel-s4", s4->name,
                std::vector<std::string>{"()", "(1,2)(3,4)", "(1,3)(2,4)", "(1,4)(2,3)"},
                sorted_names(g, s4->left));
      sweep.add("fitting-baer", s4->name, fitting_expected(),
                fitting_json(validate_fitting(g, s4->left)));
      auto const  arcs = single_arcs_outside_L(g);
      // Inside the copy of S_3 fixing the point 4, single arcs run exactly
      // from the elements of order 3 to those of order 2.
      auto fixes_4 = [&](Element e) {
        return e != g.identity() && g.element_name(e).find('4') == std::string::npos;
      };
      bool        pattern = true;
      std::size_t inside  = 0;
      for (auto [x, y] : arcs) {
        if (fixes_4(x) && fixes_4(y)) {
          ++inside;
          pattern = pattern && element_order(g, x) == 3 && element_order(g, y) == 2;
        }
      }
      sweep.add("directed-single-arcs-outside-L", s4->name,
                json{{"nonempty", true}, {"s3_arcs", 6}, {"s3_arcs_order_3_to_2", true}},
                json{{"nonempty", !arcs.empty()}, {"s3_arcs", inside},
                     {"s3_arcs_order_3_to_2", pattern}});
    } else {
      sweep.skip({"left-engel-s4", "directed-single-arcs-outside-L"}, symmetric_spec(4));
    }

    GroupSpec const c3d6 = product_spec({cyclic_spec(3), dihedral_spec(6)});
    for (auto const& spec : {dihedral_spec(6), dihedral_spec(12), quaternion_spec(12)}) {
      if (Facts const* f = sweep.facts(spec)) {
        SurfaceClass const s = surface_class_of_reduced(f->group, *f->reduced);
        sweep.add("genus-class-planar", f->name, "planar", to_string(s.classification));
        sweep.add("projective", f->name, true, s.projective ? json(*s.projective) : json(nullptr));
        sweep.add("crosscap-value", f->name, 1, s.crosscap ? json(*s.crosscap) : json(nullptr));
      } else {
        sweep.skip({"genus-class-planar", "projective", "crosscap-value"}, spec);
      }
    }
    for (auto const& spec : {alternating_spec(4), c3d6}) {
      if (Facts const* f = sweep.facts(spec)) {
        SurfaceClass const s = surface_class_of_reduced(f->group, *f->reduced);
        sweep.add("genus-class-gen", f->name, "toroidal", to_string(s.classification));
        sweep.add("projective", f->name, false, s.projective ? json(*s.projective) : json(nullptr));
      } else {
        sweep.skip({"genus-class-gen", "projective"}, spec);
      }
    }

    if (Facts const* a4 = sweep.facts(alternating_spec(4))) {
      FiniteGroup const&  g = a4->group;
      ReducedGraph const& r = *a4->reduced;
      auto locate = [&](std::vector<std::string> const& names) {
        std::vector<std::size_t> out;
        for (auto const& nm : names) {
          for (std::size_t i = 0; i < r.elements.size(); ++i) {
            if (g.element_name(r.elements[i]) == nm) {
              out.push_back(i);
            }
          }
        }
        return out;
      };
      auto const h = locate({"(2,3,4)", "(1,2,4)", "(2,4,3)", "(1,4,2)"});
      auto const k = locate({"(1,2,3)", "(1,3,4)", "(1,3,2)", "(1,4,3)"});
      bool const biclique = h.size() == 4 && k.size() == 4 && verify_biclique(r.graph, h, k);
      std::size_t const omega = clique_number(r.graph);
      sweep.add("a4-structure", a4->name,
                json{{"vertices", 8}, {"biclique_H_K", true}, {"clique_at_most_4", true},
                     {"planar", false}},
                json{{"vertices", r.graph.vertex_count()}, {"biclique_H_K", biclique},
                     {"clique_at_most_4", omega <= 4}, {"planar", is_planar(r.graph)}});
      sweep.add("crosscap-value", a4->name, json{{"K_4_4", 2}, {"contains_K_4_4", true}},
                json{{"K_4_4", crosscap_complete_bipartite(4, 4)}, {"contains_K_4_4", biclique}});
    } else {
      sweep.skip({"a4-structure", "crosscap-value"}, alternating_spec(4));
    }

    if (Facts const* f = sweep.facts(c3d6)) {
      sweep.add("crosscap-value", f->name, json{{"K_6_3", 2}, {"contains_K_6_3", true}},
                json{{"K_6_3", crosscap_complete_bipartite(6, 3)},
                     {"contains_K_6_3", f->shape.has_value() && contains_biclique(*f, 6, 3)}});
    } else {
      sweep.skip({"crosscap-value"}, c3d6);
    }

    // Adjacency is constant on cosets of the hypercenter.
    for (auto const& spec : {c3d6, dihedral_spec(12)}) {
      Facts const* f = sweep.facts(spec);
      if (!f) {
        sweep.skip({"lemma-hypercenter-cosets"}, spec);
        continue;
      }
      FiniteGroup const& g     = f->group;
      Subgroup const     z     = hypercenter(g);
      auto               adj   = [&](Element x, Element y) {
        return !f->relation.terminates(x, y) && !f->relation.terminates(y, x);
      };
      std::size_t violations = 0;
      for (Element x = 0; x < g.order(); ++x) {
        for (Element y = 0; y < g.order(); ++y) {
          if (!adj(x, y)) {
            continue;
          }
          for (Element z1 : z.members()) {
            for (Element z2 : z.members()) {
              violations += !adj(g.mul(x, z1), g.mul(y, z2));
            }
          }
        }
      }
      sweep.add("lemma-hypercenter-cosets", f->name, 0, violations);
    }
  }

  std::string csv_field(std::string const& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
      return s;
    }
    std::string out = "\"";
    for (char c : s) {
      out += c;
      if (c == '"') {
        out += '"';
      }
    }
    return out + "\"";
  }

}  // namespace

std::vector<std::string> const& verify_families() {
  static std::vector<std::string> const families{"dihedral", "quaternion", "frobenius",
                                                 "product", "special"};
  return families;
}

std::vector<VerificationRecord> verify_paper(VerifyOptions const& options) {
  std::set<std::string> selected(options.families.begin(), options.families.end());
  for (auto const& f : selected) {
    auto const& all = verify_families();
    if (std::find(all.begin(), all.end(), f) == all.end()) {
      throw SpecError("unknown family '" + f + "'");
    }
  }
  auto wanted = [&](char const* family) { return selected.empty() || selected.count(family); };
  Sweep sweep(options);
  if (wanted("dihedral")) {
    dihedral_family(sweep, false);
  }
  if (wanted("quaternion")) {
    dihedral_family(sweep, true);
  }
  if (wanted("frobenius")) {
    frobenius_family(sweep);
  }
  if (wanted("product")) {
    product_family(sweep);
  }
  if (wanted("special")) {
    special_groups(sweep);
  }
  return sweep.take();
}

bool any_failed(std::vector<VerificationRecord> const& records) {
  return std::any_of(records.begin(), records.end(),
                     [](auto const& r) { return r.status == "fail"; });
}

std::string records_to_csv(std::vector<VerificationRecord> const& records) {
  std::ostringstream out;
  out << "claim_id,group,expected,computed,status\n";
  for (auto const& r : records) {
    out << csv_field(r.claim_id) << ',' << csv_field(r.group) << ','
        << csv_field(r.expected.dump()) << ',' << csv_field(r.computed.dump()) << ','
        << r.status << '\n';
  }
  return out.str();
}

json records_to_json(std::vector<VerificationRecord> const& records) {
  json rows = json::array();
  for (auto const& r : records) {
    rows.push_back({{"claim_id", r.claim_id},
                    {"group", r.group},
                    {"expected", r.expected},
                    {"computed", r.computed},
                    {"status", r.status}});
  }
  return {{"schema", schema_version}, {"records", rows}};
}

json sweep_single_arcs(std::size_t max_order, GroupCache const* cache) {
  std::vector<GroupSpec> specs;
  for (std::uint64_t n = 1; n <= max_order; ++n) {
    specs.push_back(cyclic_spec(n));
  }
  for (std::uint64_t n = 4; n <= max_order; n += 2) {
    specs.push_back(dihedral_spec(n));
  }
  for (std::uint64_t n = 8; n <= max_order; n += 4) {
    specs.push_back(quaternion_spec(n));
  }
  for (std::uint64_t p = 2; p * p < max_order; ++p) {
    for (std::uint64_t q = p + 1; p * q <= max_order; ++q) {
      try {
        specs.push_back(frobenius_spec(p, q));
      } catch (SpecError const&) {
      }
    }
  }
  for (std::uint64_t n = 2; n <= 4; ++n) {
    specs.push_back(symmetric_spec(n));
    specs.push_back(alternating_spec(n));
  }
  std::vector<GroupSpec> bases;
  for (auto const& s : specs) {
    if (s.family != Family::cyclic) {
      bases.push_back(s);
    }
  }
  for (auto const& h : {cyclic_spec(2), cyclic_spec(3)}) {
    for (auto const& b : bases) {
      specs.push_back(product_spec({h, b}));
    }
  }

  json rows = json::array();
  for (auto const& spec : specs) {
    if (spec_order(spec) > max_order) {
      continue;
    }
    FiniteGroup const g = cache ? cache->obtain(spec) : build_group(spec);
    if (!is_soluble(g)) {
      continue;
    }
    EngelRelation const rel(g);
    auto const          single  = single_arc_pairs(directed_engel_graph(g, rel));
    auto const          outside = single_arcs_outside_L(g);
    rows.push_back({{"group", to_string(spec)},
                    {"order", g.order()},
                    {"nilpotent", is_nilpotent(g)},
                    {"single_arcs", single.size()},
                    {"single_arcs_outside_L", outside.size()},
                    {"none_outside_L", outside.empty()}});
  }
  std::sort(rows.begin(), rows.end(),
            [](json const& a, json const& b) { return a["group"] < b["group"]; });
  return {{"schema", schema_version}, {"max_order", max_order}, {"groups", rows}};
}

}  // namespace engel
