#include "justfp/certify.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <stdexcept>

namespace justfp {

namespace {

template <typename... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <typename... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void note_use(BudgetUse* use, EnumerationOutcome const& outcome) {
  if (use != nullptr) {
    use->cosets_defined += outcome.stats().cosets_defined;
  }
}

std::optional<ZSurjectionCertificate> z_surjection(Presentation const& p) {
  AbelianizationMap map(p);
  auto const& inv = map.invariants();
  if (inv.free_rank == 0) {
    return std::nullopt;
  }
  ZSurjectionCertificate cert;
  cert.free_rank = inv.free_rank;
  cert.invariants = inv;
  // The first free Smith coordinate is a surjection onto Z.
  std::size_t const col = map.smith().rank;
  for (std::size_t g = 0; g < p.generator_count(); ++g) {
    BigInt const& v = map.smith().right(g, col);
    if (v > std::numeric_limits<long long>::max() ||
        v < std::numeric_limits<long long>::min()) {
      cert.map.clear();
      break;
    }
    cert.map.push_back(static_cast<long long>(v));
  }
  return cert;
}

Certificate certify_infinite_impl(Presentation const& p, Budget const& budget,
                                  BudgetUse* use) {
  if (auto cert = z_surjection(p)) {
    return *std::move(cert);
  }
  SubgroupSearchStats stats;
  auto witness = find_infinite_abelianization_subgroup(p, budget.max_index, &stats,
                                                       budget.max_search_nodes);
  if (use != nullptr) {
    use->max_index_searched = std::max(use->max_index_searched, stats.index_searched);
    use->search_nodes += stats.nodes;
  }
  if (witness) {
    SubgroupCertificate cert;
    cert.index = witness->record.index;
    cert.subgroup_free_rank = witness->invariants.free_rank;
    cert.subgroup_invariants = witness->invariants;
    cert.table = std::make_shared<CosetTable const>(std::move(witness->record.table));
    cert.subgroup = std::make_shared<SubgroupPresentation const>(
        std::move(witness->record.subgroup));
    return cert;
  }
  auto outcome = coset_enumerate(p, {}, budget.max_cosets);
  note_use(use, outcome);
  if (outcome.is_complete()) {
    return FiniteCertificate{outcome.index()};
  }
  std::string searched =
      stats.exhausted
          ? "low-index search stopped after " + std::to_string(stats.nodes) +
                " nodes with index " + std::to_string(stats.index_searched) +
                " incomplete"
          : "no subgroup of index <= " + std::to_string(budget.max_index) +
                " with infinite abelianization";
  return UnknownCertificate{"abelianization finite; " + searched +
                            "; enumeration exceeded " +
                            std::to_string(budget.max_cosets) + " cosets"};
}

BigInt mersenne(std::uint64_t k) {
  BigInt one = 1;
  return (one << static_cast<unsigned>(k)) - 1;
}

struct InfiniteBranchEvidence {
  AmalgamCertificate::OrderOfR order_kind;
  std::string nontrivial;
  std::string noncyclic;
};

// Why r != 1 in H_r and H_r != <r> when H_r is infinite.
std::variant<InfiniteBranchEvidence, std::string> infinite_branch_evidence(
    TransformRecord const& t, Presentation const& h, Word const& r,
    Budget const& budget, BudgetUse* use) {
  AbelianizationMap amap(h);
  InfiniteBranchEvidence ev;
  std::optional<CosetTable> g_table;
  bool g_tried = false;
  auto g_regular = [&]() -> CosetTable const* {
    if (!g_tried) {
      g_tried = true;
      auto outcome = coset_enumerate(t.input, {}, budget.max_cosets);
      note_use(use, outcome);
      if (outcome.is_complete()) {
        g_table = std::move(outcome).take_table();
      }
    }
    return g_table ? &*g_table : nullptr;
  };

  if (amap.has_free_component(r)) {
    ev.order_kind = AmalgamCertificate::OrderOfR::kInfinite;
    ev.nontrivial = "r has infinite order in the abelianization of H_r";
  } else if (!amap.is_trivial(r)) {
    ev.order_kind = AmalgamCertificate::OrderOfR::kAtLeastTwo;
    ev.nontrivial = "r is nontrivial in the abelianization of H_r";
  } else if (auto const* g = g_regular()) {
    ev.order_kind = AmalgamCertificate::OrderOfR::kAtLeastTwo;
    ev.nontrivial = "G has order " + std::to_string(g->live_count()) +
                    " while H_r is infinite, so r != 1 in H_r";
  } else {
    return std::string("cannot show r != 1 in H_r");
  }

  auto const& inv = amap.invariants();
  if (inv.torsion.size() + inv.free_rank >= 2) {
    ev.noncyclic = "H_r has non-cyclic abelianization " + inv.to_string();
  } else if (auto const* g = g_regular(); g != nullptr && !is_cyclic(*g)) {
    ev.noncyclic = "H_r maps onto G, which is non-cyclic of order " +
                   std::to_string(g->live_count());
  } else {
    return std::string("cannot show H_r != <r>");
  }
  return ev;
}

Certificate case1_impl(TransformRecord const& t, std::size_t i,
                       Budget const& budget, BudgetUse* use) {
  if (i >= t.input.relator_count()) {
    throw std::out_of_range("certify_case1_amalgam: relator index " +
                            std::to_string(i) + " out of range");
  }
  Word const& r = t.input.relator(i);
  Presentation h = remove_relator(t.input, i);
  auto outcome = coset_enumerate(h, {}, budget.max_cosets);
  note_use(use, outcome);

  AmalgamCertificate cert;
  cert.relator_index = i;
  if (outcome.is_complete()) {
    auto table = std::make_shared<CosetTable const>(std::move(outcome).take_table());
    std::uint64_t k = element_order(*table, r);
    std::size_t order = table->live_count();
    if (k < 2) {
      return UnknownCertificate{"r = 1 in H_r: input relator " +
                                std::to_string(i) + " is redundant"};
    }
    if (order / k < 2) {
      return UnknownCertificate{"H_r = <r> is cyclic"};
    }
    cert.order_kind = AmalgamCertificate::OrderOfR::kFinite;
    cert.k = k;
    cert.amalgam_index = mersenne(k);
    cert.h_order = order;
    cert.r_index_in_h = order / k;
    cert.h_table = std::move(table);
    cert.nontrivial_evidence =
        "r has order " + std::to_string(k) + " in H_r of order " +
        std::to_string(order);
    cert.noncyclic_evidence =
        "[H_r : <r>] = " + std::to_string(order / k);
    return cert;
  }

  Certificate inner = certify_infinite_impl(h, budget, use);
  if (!certifies_infinite(inner)) {
    return UnknownCertificate{"H_r did not enumerate within " +
                              std::to_string(budget.max_cosets) +
                              " cosets and was not certified infinite"};
  }
  auto evidence = infinite_branch_evidence(t, h, r, budget, use);
  if (auto const* failure = std::get_if<std::string>(&evidence)) {
    return UnknownCertificate{"H_r is infinite but " + *failure};
  }
  auto& ev = std::get<InfiniteBranchEvidence>(evidence);
  cert.order_kind = ev.order_kind;
  cert.h_infinite = std::make_shared<Certificate const>(std::move(inner));
  cert.nontrivial_evidence = std::move(ev.nontrivial);
  cert.noncyclic_evidence = std::move(ev.noncyclic);
  return cert;
}

}  // namespace

std::string certificate_kind(Certificate const& c) {
  return std::visit(
      Overloaded{
          [](FiniteCertificate const&) { return std::string("Finite"); },
          [](ZSurjectionCertificate const&) {
            return std::string("InfiniteViaZSurjection");
          },
          [](SubgroupCertificate const&) {
            return std::string("InfiniteViaSubgroup");
          },
          [](AmalgamCertificate const&) {
            return std::string("InfiniteViaAmalgam");
          },
          [](UnknownCertificate const&) { return std::string("Unknown"); },
      },
      c);
}

bool certifies_infinite(Certificate const& c) {
  return std::holds_alternative<ZSurjectionCertificate>(c) ||
         std::holds_alternative<SubgroupCertificate>(c) ||
         std::holds_alternative<AmalgamCertificate>(c);
}

bool certifies_finite(Certificate const& c) {
  return std::holds_alternative<FiniteCertificate>(c);
}

bool is_cyclic(CosetTable const& regular) {
  std::size_t const order = regular.live_count();
  SubgroupPresentation rs = rewrite_subgroup(regular.presentation(), regular);
  for (auto const& element : rs.transversal) {
    if (element_order(regular, element) == order) {
      return true;
    }
  }
  return false;
}

Verification verify_presents_same_group(Presentation const& p,
                                        Presentation const& q,
                                        std::size_t max_cosets) {
  if (q.generator_count() < p.generator_count() ||
      !std::equal(p.generator_names().begin(), p.generator_names().end(),
                  q.generator_names().begin())) {
    throw std::invalid_argument(
        "verify_presents_same_group: generators of q must start with those of p");
  }
  auto p_order = group_order(p, max_cosets);
  auto q_outcome = coset_enumerate(q, {}, max_cosets);
  if (!p_order || !q_outcome.is_complete()) {
    return Verification::kUnknown;
  }
  if (*p_order != q_outcome.index()) {
    return Verification::kFalse;
  }
  CosetTable const& table = q_outcome.table();
  for (auto const& r : p.relators()) {
    if (!word_acts_trivially(table, r)) {
      return Verification::kFalse;
    }
  }
  for (std::size_t g = p.generator_count(); g < q.generator_count(); ++g) {
    if (!word_acts_trivially(table, Word::generator(g))) {
      return Verification::kFalse;
    }
  }
  return Verification::kTrue;
}

namespace {

// `known(i)` may supply an infiniteness certificate for H_i already at hand.
std::vector<IrredundancyEntry> check_irredundant_impl(
    Presentation const& p, Budget const& budget,
    std::function<std::optional<Certificate>(std::size_t)> const& known) {
  std::optional<std::size_t> g_order;
  bool g_tried = false;
  auto order_of_g = [&] {
    if (!g_tried) {
      g_tried = true;
      g_order = group_order(p, budget.max_cosets);
    }
    return g_order;
  };

  std::vector<IrredundancyEntry> out;
  for (std::size_t i = 0; i < p.relator_count(); ++i) {
    IrredundancyEntry entry;
    entry.relator_index = i;
    Word const& r = p.relator(i);
    Presentation h = remove_relator(p, i);
    auto outcome = coset_enumerate(h, {}, budget.max_cosets);
    if (outcome.is_complete()) {
      entry.h_order = outcome.index();
      if (word_acts_trivially(outcome.table(), r)) {
        entry.status = Redundancy::kRedundant;
        entry.evidence = "r = 1 in H_r (order " +
                         std::to_string(outcome.index()) + ")";
      } else {
        entry.status = Redundancy::kCertifiedIrredundant;
        entry.evidence = "r acts nontrivially on the " +
                         std::to_string(outcome.index()) +
                         " elements of H_r";
      }
      if (auto g = order_of_g()) {
        entry.h_not_isomorphic_to_g = *g != *entry.h_order;
      }
      out.push_back(std::move(entry));
      continue;
    }
    AbelianizationMap amap(h);
    if (amap.has_free_component(r)) {
      entry.status = Redundancy::kCertifiedIrredundant;
      entry.evidence = "r has infinite order in the abelianization of H_r";
    } else if (!amap.is_trivial(r)) {
      entry.status = Redundancy::kCertifiedIrredundant;
      entry.evidence = "r is nontrivial in the abelianization of H_r";
    } else if (auto g = order_of_g()) {
      std::optional<Certificate> infinite = known(i);
      if (!infinite || !certifies_infinite(*infinite)) {
        infinite = certify_infinite(h, budget);
      }
      if (certifies_infinite(*infinite)) {
        entry.status = Redundancy::kCertifiedIrredundant;
        entry.evidence = "H_r is infinite (" + certificate_kind(*infinite) +
                         ") while G has order " + std::to_string(*g);
      } else {
        entry.status = Redundancy::kUnknown;
        entry.evidence = "H_r exceeded " + std::to_string(budget.max_cosets) +
                         " cosets, r is trivial in its abelianization and H_r "
                         "was not certified infinite";
      }
    } else {
      entry.status = Redundancy::kUnknown;
      entry.evidence = "H_r exceeded " + std::to_string(budget.max_cosets) +
                       " cosets and r is trivial in its abelianization";
    }
    out.push_back(std::move(entry));
  }
  return out;
}

}  // namespace

std::vector<IrredundancyEntry> check_irredundant(Presentation const& p,
                                                 Budget const& budget) {
  return check_irredundant_impl(
      p, budget, [](std::size_t) { return std::optional<Certificate>(); });
}

Certificate certify_infinite(Presentation const& p, Budget const& budget) {
  return certify_infinite_impl(p, budget, nullptr);
}

Certificate certify_case1_amalgam(TransformRecord const& t, std::size_t i,
                                  Budget const& budget) {
  return case1_impl(t, i, budget, nullptr);
}

std::optional<ZSurjectionCertificate> certify_case2_surjection(
    TransformRecord const& t, std::size_t i) {
  if (i >= t.pairs.size()) {
    throw std::out_of_range("certify_case2_surjection: relator index " +
                            std::to_string(i) + " out of range");
  }
  auto const& pair = t.pairs[i];
  Presentation k2 = remove_relator(t.output, pair.b_conjugation_relator);
  std::vector<long long> map(k2.generator_count(), 0);
  map[pair.generator.index] = 1;
  if (!is_surjection_onto_Z(k2, map)) {
    return std::nullopt;
  }
  ZSurjectionCertificate cert;
  cert.invariants = abelian_invariants(k2);
  cert.free_rank = cert.invariants.free_rank;
  cert.map = std::move(map);
  return cert;
}

std::optional<std::string> validate_certificate(Presentation const& p,
                                                Certificate const& c,
                                                TransformRecord const* record) {
  return std::visit(
      Overloaded{
          [&](FiniteCertificate const& f) -> std::optional<std::string> {
            auto order = group_order(p, std::max(kDefaultMaxCosets, 4 * f.order));
            if (order != f.order) {
              return "enumeration does not reproduce order " +
                     std::to_string(f.order);
            }
            return std::nullopt;
          },
          [&](ZSurjectionCertificate const& z) -> std::optional<std::string> {
            auto inv = abelian_invariants(p);
            if (z.free_rank < 1 || inv.free_rank != z.free_rank) {
              return "free rank " + std::to_string(inv.free_rank) +
                     " does not match the certificate";
            }
            if (!z.map.empty() && !is_surjection_onto_Z(p, z.map)) {
              return "the recorded map is not a surjection onto Z";
            }
            return std::nullopt;
          },
          [&](SubgroupCertificate const& s) -> std::optional<std::string> {
            if (!s.table || s.table->presentation() != p) {
              return "subgroup table belongs to a different presentation";
            }
            if (auto bad = check_complete_table(*s.table)) {
              return "subgroup table invalid: " + *bad;
            }
            if (s.table->live_count() != s.index) {
              return "subgroup index does not match its table";
            }
            auto rewritten = rewrite_subgroup(p, *s.table);
            auto inv = abelian_invariants(rewritten.presentation);
            if (inv.free_rank < 1 || inv.free_rank != s.subgroup_free_rank) {
              return "subgroup abelianization has free rank " +
                     std::to_string(inv.free_rank);
            }
            return std::nullopt;
          },
          [&](AmalgamCertificate const& a) -> std::optional<std::string> {
            if (record == nullptr) {
              return "amalgam certificates need their transform record";
            }
            if (a.relator_index >= record->pairs.size()) {
              return "relator index out of range";
            }
            auto const& pair = record->pairs[a.relator_index];
            if (p != remove_relator(record->output, pair.r_conjugation_relator)) {
              return "presentation is not K1 for relator " +
                     std::to_string(a.relator_index);
            }
            Presentation h = remove_relator(record->input, a.relator_index);
            Word const& r = record->input.relator(a.relator_index);
            if (a.h_table) {
              if (a.h_table->presentation() != h || !a.h_table->subgroup().empty()) {
                return "stored table is not the regular table of H_r";
              }
              if (auto bad = check_complete_table(*a.h_table)) {
                return "H_r table invalid: " + *bad;
              }
              std::uint64_t k = element_order(*a.h_table, r);
              std::size_t order = a.h_table->live_count();
              if (k < 2 || k != a.k) {
                return "order of r in H_r is " + std::to_string(k);
              }
              if (order / k < 2 || a.r_index_in_h != order / k ||
                  a.h_order != order) {
                return "[H_r : <r>] = " + std::to_string(order / k);
              }
              if (a.amalgam_index != mersenne(k)) {
                return "amalgam index is not 2^k - 1";
              }
              return std::nullopt;
            }
            if (!a.h_infinite || !certifies_infinite(*a.h_infinite)) {
              return "no witness that H_r is infinite";
            }
            if (auto bad = validate_certificate(h, *a.h_infinite, nullptr)) {
              return "H_r witness invalid: " + *bad;
            }
            auto evidence = infinite_branch_evidence(*record, h, r, Budget{}, nullptr);
            if (auto const* failure = std::get_if<std::string>(&evidence)) {
              return *failure;
            }
            if (std::get<InfiniteBranchEvidence>(evidence).order_kind !=
                a.order_kind) {
              return "order of r in H_r re-derived differently";
            }
            return std::nullopt;
          },
          [](UnknownCertificate const&) -> std::optional<std::string> {
            return std::nullopt;
          },
      },
      c);
}

std::string to_string(Summary s) {
  switch (s) {
    case Summary::kJustFinite:
      return "just-finite";
    case Summary::kNotJustFinite:
      return "not-just-finite";
    case Summary::kInconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

std::string to_string(Redundancy r) {
  switch (r) {
    case Redundancy::kCertifiedIrredundant:
      return "certified-irredundant";
    case Redundancy::kRedundant:
      return "redundant";
    case Redundancy::kUnknown:
      return "unknown";
  }
  return "unknown";
}

JustFiniteReport just_finite_report(Presentation const& p, Budget const& budget,
                                    TransformRecord const* record) {
  if (record != nullptr && record->output != p) {
    throw std::invalid_argument(
        "just_finite_report: presentation is not the transform output");
  }
  JustFiniteReport report;
  report.presentation = p;
  report.deficiency = deficiency(p);
  report.group_order = group_order(p, budget.max_cosets);

  if (record != nullptr) {
    report.transform = *record;
    report.input_irredundancy = check_irredundant(record->input, budget);
  }

  for (std::size_t j = 0; j < p.relator_count(); ++j) {
    RelatorVerdict verdict;
    verdict.relator_index = j;
    verdict.removed = remove_relator(p, j);
    BudgetUse use;
    std::optional<Certificate> cert;
    if (record != nullptr) {
      std::size_t const i = j / 2;
      if (j % 2 == 0) {
        if (auto z = certify_case2_surjection(*record, i)) {
          cert = *std::move(z);
        }
      } else if (auto z = z_surjection(verdict.removed)) {
        cert = *std::move(z);
      } else {
        // Ahead of the subgroup search, which is costly on K1's alphabet.
        Certificate amalgam = case1_impl(*record, i, budget, &use);
        if (certifies_infinite(amalgam)) {
          cert = std::move(amalgam);
        }
      }
    }
    if (!cert) {
      cert = certify_infinite_impl(verdict.removed, budget, &use);
    }
    verdict.certificate = *std::move(cert);
    verdict.budget_used = use;
    report.verdicts.push_back(std::move(verdict));
  }

  // A deleted relator that is trivial in what remains leaves G itself.
  report.irredundancy = check_irredundant_impl(
      p, budget, [&](std::size_t i) -> std::optional<Certificate> {
        return report.verdicts[i].certificate;
      });

  bool any_finite = false;
  bool all_infinite = true;
  for (auto const& v : report.verdicts) {
    if (certifies_finite(v.certificate)) {
      any_finite = true;
      report.notes.push_back(
          "removing relator " + std::to_string(v.relator_index) +
          " leaves a finite group of order " +
          std::to_string(std::get<FiniteCertificate>(v.certificate).order));
    }
    all_infinite = all_infinite && certifies_infinite(v.certificate);
  }

  if (!report.group_order) {
    Certificate whole = certify_infinite(p, budget);
    if (certifies_infinite(whole)) {
      report.summary = Summary::kNotJustFinite;
      report.notes.push_back("the presented group is infinite (" +
                             certificate_kind(whole) + ")");
    } else {
      report.summary = Summary::kInconclusive;
      report.notes.push_back("the order of the presented group was not determined within " +
                             std::to_string(budget.max_cosets) + " cosets");
    }
    return report;
  }
  if (any_finite) {
    report.summary = Summary::kNotJustFinite;
    return report;
  }
  if (!all_infinite) {
    report.summary = Summary::kInconclusive;
    report.notes.push_back("some deletions were neither certified finite nor infinite");
    return report;
  }
  bool redundant_input = std::any_of(
      report.input_irredundancy.begin(), report.input_irredundancy.end(),
      [](auto const& e) { return e.status == Redundancy::kRedundant; });
  if (redundant_input) {
    report.summary = Summary::kInconclusive;
    report.notes.push_back(
        "the transform input has a redundant relator, outside the hypotheses "
        "of the construction");
    return report;
  }
  report.summary = Summary::kJustFinite;
  return report;
}

}  // namespace justfp
