#include "engel/spec.hpp"

#include <charconv>

namespace engel {

namespace {

  // Tables are order^2 entries; beyond this they stop being desk scale.
  constexpr std::uint64_t max_build_order = 5000;

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

  std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
    std::uint64_t result = 1 % mod;
    base %= mod;
    while (exp > 0) {
      if (exp & 1U) {
        result = result * base % mod;
      }
      base = base * base % mod;
      exp >>= 1U;
    }
    return result;
  }

  std::uint64_t parse_number(std::string_view text, std::string_view what) {
    std::uint64_t value = 0;
    auto [ptr, ec]      = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()
        || value > 1'000'000) {
      throw SpecError("invalid " + std::string(what) + " '" + std::string(text) + "'");
    }
    return value;
  }

  std::vector<std::string_view> split_colons(std::string_view text) {
    std::vector<std::string_view> out;
    std::size_t                   start = 0;
    while (true) {
      std::size_t pos = text.find(':', start);
      out.push_back(text.substr(start, pos == std::string_view::npos ? pos : pos - start));
      if (pos == std::string_view::npos) {
        return out;
      }
      start = pos + 1;
    }
  }

  void validate(GroupSpec const& s) {
    auto const& p = s.params;
    switch (s.family) {
      case Family::cyclic:
        if (p[0] < 1) {
          throw SpecError("cyclic order n=" + std::to_string(p[0]) + " must be >= 1");
        }
        break;
      case Family::dihedral:
        if (p[0] < 4 || p[0] % 2 != 0) {
          throw SpecError("dihedral order 2n=" + std::to_string(p[0])
                          + " must be even and >= 4");
        }
        break;
      case Family::quaternion:
        if (p[0] < 8 || p[0] % 4 != 0) {
          throw SpecError("quaternion order 4n=" + std::to_string(p[0])
                          + " must be a multiple of 4 and >= 8");
        }
        break;
      case Family::frobenius:
        if (!is_prime(p[0])) {
          throw SpecError("frobenius p=" + std::to_string(p[0]) + " is not prime");
        }
        if (!is_prime(p[1])) {
          throw SpecError("frobenius q=" + std::to_string(p[1]) + " is not prime");
        }
        if (p[1] % p[0] != 1) {
          throw SpecError("frobenius q=" + std::to_string(p[1]) + " is not 1 mod p="
                          + std::to_string(p[0]));
        }
        if (p.size() == 3
            && (p[2] % p[1] <= 1 || pow_mod(p[2], p[0], p[1]) != 1)) {
          throw SpecError("frobenius r=" + std::to_string(p[2])
                          + " needs r^p = 1 and r != 1 mod q");
        }
        break;
      case Family::symmetric:
      case Family::alternating:
        if (p[0] < 2 || p[0] > 6) {
          throw SpecError("degree n=" + std::to_string(p[0]) + " must be in 2..6");
        }
        break;
      case Family::product:
        break;
    }
  }

  GroupSpec parse_product(std::string_view body) {
    GroupSpec spec;
    spec.family = Family::product;
    std::size_t i = 0;
    while (true) {
      if (i >= body.size() || body[i] != '(') {
        throw SpecError("product factor must start with '(' in '" + std::string(body) + "'");
      }
      int         depth = 0;
      std::size_t j     = i;
      for (; j < body.size(); ++j) {
        if (body[j] == '(') {
          ++depth;
        } else if (body[j] == ')' && --depth == 0) {
          break;
        }
      }
      if (j == body.size()) {
        throw SpecError("unbalanced parentheses in '" + std::string(body) + "'");
      }
      spec.factors.push_back(parse_group_spec(body.substr(i + 1, j - i - 1)));
      i = j + 1;
      if (i == body.size()) {
        break;
      }
      if (body[i] != 'x') {
        throw SpecError("expected 'x' between product factors in '" + std::string(body) + "'");
      }
      ++i;
    }
    if (spec.factors.size() < 2) {
      throw SpecError("product needs at least two factors");
    }
    return spec;
  }

  GroupSpec simple(Family family, std::vector<std::uint64_t> params) {
    GroupSpec s{family, std::move(params), {}};
    validate(s);
    return s;
  }

}  // namespace

std::string family_name(Family family) {
  switch (family) {
    case Family::cyclic: return "cyclic";
    case Family::dihedral: return "dihedral";
    case Family::quaternion: return "quaternion";
    case Family::frobenius: return "frobenius";
    case Family::symmetric: return "symmetric";
    case Family::alternating: return "alternating";
    case Family::product: return "product";
  }
  return "unknown";
}

GroupSpec parse_group_spec(std::string_view text) {
  if (text.size() < 3 || text[1] != ':') {
    throw SpecError("group spec '" + std::string(text) + "' must look like 'D:24'");
  }
  char const letter = text[0];
  if (letter == 'P') {
    return parse_product(text.substr(2));
  }
  auto parts = split_colons(text.substr(2));
  GroupSpec spec;
  std::size_t expected = 1;
  switch (letter) {
    case 'C': spec.family = Family::cyclic; break;
    case 'D': spec.family = Family::dihedral; break;
    case 'Q': spec.family = Family::quaternion; break;
    case 'S': spec.family = Family::symmetric; break;
    case 'A': spec.family = Family::alternating; break;
    case 'F':
      spec.family = Family::frobenius;
      expected    = parts.size() == 3 ? 3 : 2;
      break;
    default: throw SpecError("unknown group family '" + std::string(1, letter) + "'");
  }
  if (parts.size() != expected) {
    throw SpecError("wrong number of parameters in '" + std::string(text) + "'");
  }
  static constexpr char const* names[] = {"p", "q", "r"};
  for (std::size_t k = 0; k < parts.size(); ++k) {
    spec.params.push_back(
        parse_number(parts[k], spec.family == Family::frobenius ? names[k] : "order"));
  }
  validate(spec);
  return spec;
}

std::string to_string(GroupSpec const& spec) {
  if (spec.family == Family::product) {
    std::string out = "P:";
    for (std::size_t i = 0; i < spec.factors.size(); ++i) {
      out += (i ? "x(" : "(") + to_string(spec.factors[i]) + ")";
    }
    return out;
  }
  static constexpr char letters[] = {'C', 'D', 'Q', 'F', 'S', 'A'};
  std::string out(1, letters[static_cast<int>(spec.family)]);
  for (auto p : spec.params) {
    out += ":" + std::to_string(p);
  }
  return out;
}

std::uint64_t spec_order(GroupSpec const& spec) {
  switch (spec.family) {
    case Family::cyclic:
    case Family::dihedral:
    case Family::quaternion: return spec.params[0];
    case Family::frobenius: return spec.params[0] * spec.params[1];
    case Family::symmetric:
    case Family::alternating: {
      std::uint64_t f = 1;
      for (std::uint64_t k = 2; k <= spec.params[0]; ++k) {
        f *= k;
      }
      return spec.family == Family::symmetric ? f : f / 2;
    }
    case Family::product: {
      std::uint64_t total = 1;
      for (auto const& f : spec.factors) {
        std::uint64_t o = spec_order(f);
        // Saturate rather than overflow; anything this large is refused.
        total = total > max_build_order * max_build_order / o ? max_build_order * max_build_order
                                                              : total * o;
      }
      return total;
    }
  }
  return 0;
}

FiniteGroup build_group(GroupSpec const& spec) {
  if (spec_order(spec) > max_build_order) {
    throw SpecError("group " + to_string(spec) + " has order above "
                    + std::to_string(max_build_order));
  }
  auto const& p = spec.params;
  switch (spec.family) {
    case Family::cyclic: return build_cyclic(p[0]);
    case Family::dihedral: return build_dihedral(p[0]);
    case Family::quaternion: return build_generalized_quaternion(p[0]);
    case Family::frobenius:
      return build_frobenius(p[0], p[1], p.size() == 3 ? std::optional(p[2]) : std::nullopt);
    case Family::symmetric: return build_symmetric(p[0]);
    case Family::alternating: return build_alternating(p[0]);
    case Family::product: {
      FiniteGroup g = build_group(spec.factors.front());
      for (std::size_t i = 1; i < spec.factors.size(); ++i) {
        g = direct_product(g, build_group(spec.factors[i]));
      }
      return g;
    }
  }
  throw SpecError("unhandled family");
}

GroupSpec cyclic_spec(std::uint64_t n) {
  return simple(Family::cyclic, {n});
}
GroupSpec dihedral_spec(std::uint64_t two_n) {
  return simple(Family::dihedral, {two_n});
}
GroupSpec quaternion_spec(std::uint64_t four_n) {
  return simple(Family::quaternion, {four_n});
}
GroupSpec frobenius_spec(std::uint64_t p, std::uint64_t q) {
  return simple(Family::frobenius, {p, q});
}
GroupSpec symmetric_spec(std::uint64_t n) {
  return simple(Family::symmetric, {n});
}
GroupSpec alternating_spec(std::uint64_t n) {
  return simple(Family::alternating, {n});
}
GroupSpec product_spec(std::vector<GroupSpec> factors) {
  if (factors.size() < 2) {
    throw SpecError("product needs at least two factors");
  }
  return GroupSpec{Family::product, {}, std::move(factors)};
}

}  // namespace engel
