#include "engel/group.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>
#include <string>

namespace engel {

FiniteGroup::FiniteGroup(std::string                 label,
                         std::size_t                 order,
                         std::vector<Element>        table,
                         std::vector<NamedGenerator> generators,
                         std::vector<std::string>    element_names)
    : label_(std::move(label)),
      order_(order),
      table_(std::move(table)),
      identity_(0),
      inverse_(order),
      generators_(std::move(generators)),
      names_(std::move(element_names)) {
  if (order_ == 0) {
    throw std::invalid_argument("group order must be positive");
  }
  if (table_.size() != order_ * order_) {
    throw std::invalid_argument("multiplication table has "
                                + std::to_string(table_.size())
                                + " entries, expected "
                                + std::to_string(order_ * order_));
  }
  // Latin square: every row and every column is a permutation.
  std::vector<char> seen(order_);
  for (std::size_t i = 0; i < order_; ++i) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t j = 0; j < order_; ++j) {
      Element v = table_[i * order_ + j];
      if (v >= order_ || seen[v]) {
        throw std::invalid_argument("table row " + std::to_string(i)
                                    + " is not a permutation");
      }
      seen[v] = 1;
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t j = 0; j < order_; ++j) {
      Element v = table_[j * order_ + i];
      if (seen[v]) {
        throw std::invalid_argument("table column " + std::to_string(i)
                                    + " is not a permutation");
      }
      seen[v] = 1;
    }
  }
  // In a Latin square e*e = e determines the only candidate identity.
  bool found = false;
  for (std::size_t e = 0; e < order_ && !found; ++e) {
    if (table_[e * order_ + e] != e) {
      continue;
    }
    found = true;
    for (std::size_t x = 0; x < order_; ++x) {
      if (table_[e * order_ + x] != x || table_[x * order_ + e] != x) {
        found = false;
        break;
      }
    }
    if (found) {
      identity_ = static_cast<Element>(e);
    }
  }
  if (!found) {
    throw std::invalid_argument("table has no two-sided identity");
  }
  for (std::size_t x = 0; x < order_; ++x) {
    for (std::size_t y = 0; y < order_; ++y) {
      if (table_[x * order_ + y] == identity_) {
        if (table_[y * order_ + x] != identity_) {
          throw std::invalid_argument("element " + std::to_string(x)
                                      + " has no two-sided inverse");
        }
        inverse_[x] = static_cast<Element>(y);
        break;
      }
    }
  }
  for (auto const& gen : generators_) {
    if (gen.index >= order_) {
      throw std::invalid_argument("generator " + gen.name + " out of range");
    }
  }
  if (names_.empty()) {
    names_.reserve(order_);
    for (std::size_t i = 0; i < order_; ++i) {
      names_.push_back("e" + std::to_string(i));
    }
  } else if (names_.size() != order_) {
    throw std::invalid_argument("element name list has wrong length");
  }
}

void FiniteGroup::check_element(Element a) const {
  if (a >= order_) {
    throw std::out_of_range("element index " + std::to_string(a)
                            + " out of range for group of order "
                            + std::to_string(order_));
  }
}

Element FiniteGroup::power(Element a, std::int64_t k) const {
  check_element(a);
  if (k < 0) {
    a = inverse_[a];
    k = -k;
  }
  Element result = identity_;
  Element base   = a;
  while (k > 0) {
    if (k & 1) {
      result = mul(result, base);
    }
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

Subgroup::Subgroup(std::size_t parent_order, std::vector<Element> members)
    : members_(std::move(members)), mask_(parent_order, false) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()),
                 members_.end());
  for (Element m : members_) {
    if (m >= parent_order) {
      throw std::out_of_range("subgroup member outside parent group");
    }
    mask_[m] = true;
  }
}

bool check_associativity(FiniteGroup const& g, AssociativityCheck mode) {
  std::size_t const n = g.order();
  if (mode == AssociativityCheck::automatic) {
    mode = n <= 200 ? AssociativityCheck::exhaustive
                    : AssociativityCheck::sampled;
  }
  if (mode == AssociativityCheck::exhaustive) {
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        Element ab = g.mul(a, b);
        for (Element c = 0; c < n; ++c) {
          if (g.mul(ab, c) != g.mul(a, g.mul(b, c))) {
            return false;
          }
        }
      }
    }
    return true;
  }
  std::mt19937_64                        rng(0x5eed);
  std::uniform_int_distribution<Element> pick(0, static_cast<Element>(n - 1));
  for (int i = 0; i < 10000; ++i) {
    Element a = pick(rng), b = pick(rng), c = pick(rng);
    if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))) {
      return false;
    }
  }
  return true;
}

Element commutator(FiniteGroup const& g, Element x, Element y) {
  g.check_element(x);
  g.check_element(y);
  return g.mul(g.mul(g.inverse(x), g.inverse(y)), g.mul(x, y));
}

Element conjugate(FiniteGroup const& g, Element x, Element y) {
  g.check_element(x);
  g.check_element(y);
  return g.mul(g.mul(g.inverse(y), x), y);
}

std::size_t element_order(FiniteGroup const& g, Element x) {
  g.check_element(x);
  std::size_t k   = 1;
  Element     cur = x;
  while (cur != g.identity()) {
    cur = g.mul(cur, x);
    ++k;
  }
  return k;
}

std::vector<std::pair<std::size_t, std::size_t>>
order_census(FiniteGroup const& g) {
  std::map<std::size_t, std::size_t> counts;
  for (Element x = 0; x < g.order(); ++x) {
    ++counts[element_order(g, x)];
  }
  return {counts.begin(), counts.end()};
}

}  // namespace engel
