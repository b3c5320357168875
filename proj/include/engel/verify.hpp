// The published-claim verification sweep and the single-arc search harness.

#ifndef ENGEL_VERIFY_HPP_
#define ENGEL_VERIFY_HPP_

#include "engel/cache.hpp"
#include "engel/spec.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace engel {

struct VerificationRecord {
  std::string    claim_id;
  std::string    group;  // canonical spec
  nlohmann::json expected;
  nlohmann::json computed;
  std::string    status;  // "pass", "fail" or "skipped"
};

// Families accepted by VerifyOptions::families.
std::vector<std::string> const& verify_families();

struct VerifyOptions {
  std::vector<std::string> families;  // empty selects all
  std::size_t              max_order = 200;
  unsigned                 workers   = 1;
  GroupCache const*        cache     = nullptr;
};

// Records sorted by (claim_id, group). Groups above max_order yield
// "skipped" records. Throws SpecError for an unknown family.
std::vector<VerificationRecord> verify_paper(VerifyOptions const& options);

bool any_failed(std::vector<VerificationRecord> const& records);

// Header claim_id,group,expected,computed,status; RFC 4180 quoting; LF.
std::string    records_to_csv(std::vector<VerificationRecord> const& records);
nlohmann::json records_to_json(std::vector<VerificationRecord> const& records);

// Built-in soluble groups up to max_order, each with its single-arc counts
// and whether no single arc lies outside L(G). Sorted by group.
nlohmann::json sweep_single_arcs(std::size_t max_order, GroupCache const* cache = nullptr);

}  // namespace engel

#endif  // ENGEL_VERIFY_HPP_
