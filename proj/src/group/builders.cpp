#include "engel/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

namespace engel {

namespace {

  std::string power_word(char symbol, std::uint64_t k) {
    if (k == 0) {
      return "";
    }
    std::string s(1, symbol);
    if (k > 1) {
      s += "^" + std::to_string(k);
    }
    return s;
  }

  std::string join_word(std::string w) {
    return w.empty() ? "1" : w;
  }

  bool is_prime(std::uint64_t n) {
    if (n < 2) {
      return false;
    }
    for (std::uint64_t d = 2; d * d <= n; ++d) {
      if (n % d == 0) {
        return false;
      }
    }
    return true;
  }

  std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp > 0) {
      if (exp & 1) {
        result = result * base % m;
      }
      base = base * base % m;
      exp >>= 1;
    }
    return result;
  }

  // Shared by dihedral and dicyclic groups: elements x^a y^i with a in {0,1},
  // i in [0, k). x^2 = y^twist, y^i x = x y^-i.
  FiniteGroup build_metacyclic(std::string label, std::size_t k, std::size_t twist) {
    std::size_t const n = 2 * k;
    std::vector<Element> table(n * n);
    auto index = [k](std::size_t a, std::size_t i) {
      return static_cast<Element>(a * k + i % k);
    };
    for (std::size_t a = 0; a < 2; ++a) {
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t b = 0; b < 2; ++b) {
          for (std::size_t j = 0; j < k; ++j) {
            // x^a y^i x^b y^j = x^(a+b) y^((-1)^b i + j)
            std::size_t e = (b == 0 ? i : (k - i) % k) + j;
            std::size_t c = a + b;
            if (c == 2) {
              c = 0;
              e += twist;
            }
            table[index(a, i) * n + index(b, j)] = index(c, e);
          }
        }
      }
    }
    std::vector<std::string> names;
    for (std::size_t a = 0; a < 2; ++a) {
      for (std::size_t i = 0; i < k; ++i) {
        names.push_back(join_word(power_word('x', a) + power_word('y', i)));
      }
    }
    std::vector<NamedGenerator> gens{{"x", index(1, 0)},
                                     {"y", index(0, k > 1 ? 1 : 0)}};
    return FiniteGroup(std::move(label), n, std::move(table), std::move(gens),
                       std::move(names));
  }

  std::string cycle_notation(std::vector<std::size_t> const& perm) {
    std::string        out;
    std::vector<char>  done(perm.size(), 0);
    for (std::size_t i = 0; i < perm.size(); ++i) {
      if (done[i] || perm[i] == i) {
        continue;
      }
      out += "(";
      std::size_t j = i;
      bool        first = true;
      while (!done[j]) {
        done[j] = 1;
        if (!first) {
          out += ",";
        }
        out += std::to_string(j + 1);
        first = false;
        j     = perm[j];
      }
      out += ")";
    }
    return out.empty() ? "()" : out;
  }

  bool is_even(std::vector<std::size_t> const& perm) {
    std::size_t       transpositions = 0;
    std::vector<char> done(perm.size(), 0);
    for (std::size_t i = 0; i < perm.size(); ++i) {
      std::size_t len = 0;
      for (std::size_t j = i; !done[j]; j = perm[j]) {
        done[j] = 1;
        ++len;
      }
      if (len > 0) {
        transpositions += len - 1;
      }
    }
    return transpositions % 2 == 0;
  }

  FiniteGroup build_permutation_group(std::size_t n, bool even_only) {
    if (n < 2 || n > 6) {
      throw std::invalid_argument("permutation degree must lie in [2, 6], got "
                                  + std::to_string(n));
    }
    std::vector<std::vector<std::size_t>> perms;
    std::vector<std::size_t>              p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
      if (!even_only || is_even(p)) {
        perms.push_back(p);
      }
    } while (std::next_permutation(p.begin(), p.end()));

    std::map<std::vector<std::size_t>, Element> index;
    for (std::size_t i = 0; i < perms.size(); ++i) {
      index.emplace(perms[i], static_cast<Element>(i));
    }
    std::size_t const    order = perms.size();
    std::vector<Element> table(order * order);
    std::vector<std::size_t> prod(n);
    for (std::size_t a = 0; a < order; ++a) {
      for (std::size_t b = 0; b < order; ++b) {
        for (std::size_t i = 0; i < n; ++i) {
          prod[i] = perms[b][perms[a][i]];
        }
        table[a * order + b] = index.at(prod);
      }
    }
    std::vector<std::string> names;
    for (auto const& q : perms) {
      names.push_back(cycle_notation(q));
    }
    auto perm_of_cycle = [n](std::vector<std::size_t> cycle) {
      std::vector<std::size_t> q(n);
      std::iota(q.begin(), q.end(), 0);
      for (std::size_t i = 0; i < cycle.size(); ++i) {
        q[cycle[i]] = cycle[(i + 1) % cycle.size()];
      }
      return q;
    };
    std::vector<NamedGenerator> gens;
    auto add_gen = [&](std::vector<std::size_t> cycle) {
      auto q = perm_of_cycle(std::move(cycle));
      gens.push_back({cycle_notation(q), index.at(q)});
    };
    if (!even_only) {
      add_gen({0, 1});
      std::vector<std::size_t> full(n);
      std::iota(full.begin(), full.end(), 0);
      if (n > 2) {
        add_gen(full);
      }
    } else {
      for (std::size_t k = 2; k < n; ++k) {
        add_gen({0, 1, k});
      }
    }
    std::string label = (even_only ? "A_" : "S_") + std::to_string(n);
    return FiniteGroup(std::move(label), order, std::move(table),
                       std::move(gens), std::move(names));
  }

}  // namespace

FiniteGroup build_cyclic(std::size_t n) {
  if (n == 0) {
    throw std::invalid_argument("cyclic group order must be positive");
  }
  std::vector<Element> table(n * n);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      table[i * n + j] = static_cast<Element>((i + j) % n);
    }
    names.push_back(join_word(power_word('g', i)));
  }
  std::vector<NamedGenerator> gens{{"g", static_cast<Element>(1 % n)}};
  return FiniteGroup("C_" + std::to_string(n), n, std::move(table),
                     std::move(gens), std::move(names));
}

FiniteGroup build_dihedral(std::size_t two_n) {
  if (two_n < 4 || two_n % 2 != 0) {
    throw std::invalid_argument("dihedral order must be even and >= 4, got "
                                + std::to_string(two_n));
  }
  return build_metacyclic("D_" + std::to_string(two_n), two_n / 2, 0);
}

FiniteGroup build_generalized_quaternion(std::size_t four_n) {
  if (four_n < 8 || four_n % 4 != 0) {
    throw std::invalid_argument(
        "quaternion order must be a multiple of 4 and >= 8, got "
        + std::to_string(four_n));
  }
  return build_metacyclic("Q_" + std::to_string(four_n), four_n / 2,
                          four_n / 4);
}

std::uint64_t default_frobenius_root(std::uint64_t p, std::uint64_t q) {
  if (!is_prime(p) || !is_prime(q)) {
    throw std::invalid_argument("F(p,q) needs primes p and q");
  }
  if (q % p != 1) {
    throw std::invalid_argument("F(p,q) needs q = 1 mod p, got p="
                                + std::to_string(p)
                                + ", q=" + std::to_string(q));
  }
  for (std::uint64_t r = 2; r < q; ++r) {
    if (pow_mod(r, p, q) == 1) {
      return r;
    }
  }
  throw std::logic_error("no root of unity found");  // unreachable for q = 1 mod p
}

FiniteGroup build_frobenius(std::uint64_t                p,
                            std::uint64_t                q,
                            std::optional<std::uint64_t> r) {
  std::uint64_t const root_default = default_frobenius_root(p, q);
  std::uint64_t       root         = root_default;
  if (r) {
    root = *r % q;
    if (root == 1 || pow_mod(root, p, q) != 1) {
      throw std::invalid_argument("r=" + std::to_string(*r)
                                  + " is not a nontrivial p-th root of unity mod q");
    }
  }
  // rpow[j] = r^j mod q
  std::vector<std::uint64_t> rpow(p);
  rpow[0] = 1;
  for (std::uint64_t j = 1; j < p; ++j) {
    rpow[j] = rpow[j - 1] * root % q;
  }
  std::size_t const    n = p * q;
  std::vector<Element> table(n * n);
  // a^i b^t a^j b^s = a^(i+j) b^(s + t r^j)
  for (std::uint64_t i = 0; i < p; ++i) {
    for (std::uint64_t t = 0; t < q; ++t) {
      for (std::uint64_t j = 0; j < p; ++j) {
        for (std::uint64_t s = 0; s < q; ++s) {
          std::uint64_t ai = (i + j) % p;
          std::uint64_t bi = (s + t * rpow[j]) % q;
          table[(i * q + t) * n + (j * q + s)] = static_cast<Element>(ai * q + bi);
        }
      }
    }
  }
  std::vector<std::string> names;
  for (std::uint64_t i = 0; i < p; ++i) {
    for (std::uint64_t j = 0; j < q; ++j) {
      names.push_back(join_word(power_word('a', i) + power_word('b', j)));
    }
  }
  std::vector<NamedGenerator> gens{{"a", static_cast<Element>(q)},
                                   {"b", static_cast<Element>(1)}};
  std::string label = "F(" + std::to_string(p) + "," + std::to_string(q) + ")";
  if (r && root != root_default) {
    label = "F(" + std::to_string(p) + "," + std::to_string(q) + ";r="
            + std::to_string(root) + ")";
  }
  return FiniteGroup(std::move(label), n, std::move(table), std::move(gens),
                     std::move(names));
}

FiniteGroup build_symmetric(std::size_t n) {
  return build_permutation_group(n, false);
}

FiniteGroup build_alternating(std::size_t n) {
  return build_permutation_group(n, true);
}

FiniteGroup direct_product(FiniteGroup const& g, FiniteGroup const& h) {
  std::size_t const m = h.order();
  std::size_t const n = g.order() * m;
  std::vector<Element> table(n * n);
  for (Element g1 = 0; g1 < g.order(); ++g1) {
    for (Element h1 = 0; h1 < m; ++h1) {
      std::size_t row = (g1 * m + h1) * n;
      for (Element g2 = 0; g2 < g.order(); ++g2) {
        for (Element h2 = 0; h2 < m; ++h2) {
          table[row + g2 * m + h2]
              = static_cast<Element>(g.mul(g1, g2) * m + h.mul(h1, h2));
        }
      }
    }
  }
  std::vector<std::string> names;
  names.reserve(n);
  for (Element g1 = 0; g1 < g.order(); ++g1) {
    for (Element h1 = 0; h1 < m; ++h1) {
      names.push_back("(" + g.element_name(g1) + "," + h.element_name(h1) + ")");
    }
  }
  std::vector<NamedGenerator> gens;
  for (auto const& gen : g.generators()) {
    gens.push_back({"(" + gen.name + ",1)",
                    static_cast<Element>(gen.index * m + h.identity())});
  }
  for (auto const& gen : h.generators()) {
    gens.push_back({"(1," + gen.name + ")",
                    static_cast<Element>(g.identity() * m + gen.index)});
  }
  return FiniteGroup(g.label() + " x " + h.label(), n, std::move(table),
                     std::move(gens), std::move(names));
}

}  // namespace engel
