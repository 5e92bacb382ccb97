#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "justfp/abelian.hpp"
#include "justfp/coset_enum.hpp"
#include "justfp/presentation.hpp"
#include "justfp/subgroup.hpp"
#include "justfp/transform.hpp"

namespace justfp {

struct Budget {
  std::size_t max_cosets = kDefaultMaxCosets;
  std::size_t max_index = kDefaultMaxIndex;
  // Backtracking nodes for the low-index search; 0 for no limit.
  std::size_t max_search_nodes = kDefaultMaxSearchNodes;
};

struct FiniteCertificate {
  std::size_t order = 0;
};

struct ZSurjectionCertificate {
  std::size_t free_rank = 0;
  AbelianInvariants invariants;
  // Images of the generators under a surjection onto Z.
  std::vector<long long> map;
};

struct SubgroupCertificate {
  std::size_t index = 0;
  std::size_t subgroup_free_rank = 0;
  AbelianInvariants subgroup_invariants;
  std::shared_ptr<CosetTable const> table;
  std::shared_ptr<SubgroupPresentation const> subgroup;
};

struct AmalgamCertificate;

struct UnknownCertificate {
  std::string budget_report;
};

using Certificate = std::variant<FiniteCertificate, ZSurjectionCertificate,
                                 SubgroupCertificate, AmalgamCertificate,
                                 UnknownCertificate>;

// K1 = H_r *_{<r> = <x>} B' with B' = <x, b | x^-1 b x = b^2, x^k = 1>.
// Nontrivial once r != 1 in H_r (k >= 2) and <r> != H_r.
struct AmalgamCertificate {
  enum class OrderOfR {
    kFinite,      // k is known
    kInfinite,    // r survives in a free abelian quotient; B' = B(1,2)
    kAtLeastTwo,  // H_r is infinite and r is known only to be nontrivial
  };

  std::size_t relator_index = 0;
  OrderOfR order_kind = OrderOfR::kFinite;
  std::uint64_t k = 0;                 // when kFinite
  std::optional<BigInt> amalgam_index;  // [B' : <x>] = 2^k - 1 when kFinite
  std::optional<std::size_t> h_order;   // nullopt: H_r is infinite
  std::optional<std::size_t> r_index_in_h;  // [H_r : <r>] when H_r is finite
  // Regular representation of H_r when it is finite.
  std::shared_ptr<CosetTable const> h_table;
  // Why H_r is infinite, when it is.
  std::shared_ptr<Certificate const> h_infinite;
  std::string nontrivial_evidence;  // why r != 1 in H_r
  std::string noncyclic_evidence;   // why H_r != <r>
};

std::string certificate_kind(Certificate const& c);
bool certifies_infinite(Certificate const& c);
bool certifies_finite(Certificate const& c);

enum class Verification { kTrue, kFalse, kUnknown };

// Decides whether q presents the same group as p, where q's generators
// start with p's.  True when both enumerate to the same finite order, every
// relator of p is trivial in q, and every extra generator of q is trivial in
// q: the map G(p) -> G(q) is then onto between groups of equal order.
// Throws std::invalid_argument if q's alphabet does not extend p's.
Verification verify_presents_same_group(Presentation const& p,
                                        Presentation const& q,
                                        std::size_t max_cosets =
                                            kDefaultMaxCosets);

enum class Redundancy { kCertifiedIrredundant, kRedundant, kUnknown };

struct IrredundancyEntry {
  std::size_t relator_index = 0;
  Redundancy status = Redundancy::kUnknown;
  std::optional<std::size_t> h_order;  // |H_r| when it enumerated
  // |H_r| != |G|, reported only when both orders are finite.
  std::optional<bool> h_not_isomorphic_to_g;
  std::string evidence;
};

// Per relator r_i: is r_i != 1 in H_i = <X | R \ {r_i}>?
std::vector<IrredundancyEntry> check_irredundant(Presentation const& p,
                                                 Budget const& budget = {});

// Tries a Z-surjection, then a subgroup of index <= max_index with infinite
// abelianization, then a complete enumeration (giving Finite).  Never
// reports infinite without a witness.
Certificate certify_infinite(Presentation const& p, Budget const& budget = {});

// Case 1 of the construction: deleting relator 2i+1 (b^-1 r b r^-2) of the
// output leaves an amalgamated free product.  Throws std::out_of_range if i
// is not an input relator index.
Certificate certify_case1_amalgam(TransformRecord const& t, std::size_t i,
                                  Budget const& budget = {});

// Case 2: with relator 2i (r^-1 b r b^-2) deleted, X -> 0, b_i -> 1 and the
// other fresh generators -> 0 is a surjection onto Z.  Returns that map
// checked against the remaining relators, or nullopt if the check fails.
std::optional<ZSurjectionCertificate> certify_case2_surjection(
    TransformRecord const& t, std::size_t i);

// Re-checks a witness from scratch against the presentation it is about.
// Empty when valid, otherwise the reason.  Amalgam certificates need the
// transform record they came from.
std::optional<std::string> validate_certificate(
    Presentation const& p, Certificate const& c,
    TransformRecord const* record = nullptr);

struct BudgetUse {
  std::size_t cosets_defined = 0;
  std::size_t max_index_searched = 0;
  std::size_t search_nodes = 0;
};

struct RelatorVerdict {
  std::size_t relator_index = 0;
  Presentation removed;
  Certificate certificate;
  BudgetUse budget_used;
};

enum class Summary { kJustFinite, kNotJustFinite, kInconclusive };

std::string to_string(Summary s);
std::string to_string(Redundancy r);

struct JustFiniteReport {
  Presentation presentation;
  long long deficiency = 0;
  std::optional<std::size_t> group_order;
  std::vector<IrredundancyEntry> irredundancy;
  std::optional<TransformRecord> transform;
  // Irredundancy of the transform's input, when there is one.
  std::vector<IrredundancyEntry> input_irredundancy;
  std::vector<RelatorVerdict> verdicts;
  Summary summary = Summary::kInconclusive;
  std::vector<std::string> notes;
};

// Certifies every single-relator deletion of p.  When `record` is given
// (p == record->output), deletions of 2i use the explicit Case 2 map and
// deletions of 2i+1 a Z-surjection or else the Case 1 amalgam, falling back
// to certify_infinite.
JustFiniteReport just_finite_report(Presentation const& p,
                                    Budget const& budget = {},
                                    TransformRecord const* record = nullptr);

// Is the finite group with this regular table cyclic?
bool is_cyclic(CosetTable const& regular);

}  // namespace justfp
