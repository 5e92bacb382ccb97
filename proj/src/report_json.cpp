#include "justfp/report_json.hpp"

#include <limits>
#include <sstream>

#include "justfp/syntax.hpp"

namespace justfp {

namespace {

using nlohmann::json;

json big(BigInt const& v) {
  if (v <= std::numeric_limits<long long>::max() &&
      v >= std::numeric_limits<long long>::min()) {
    return static_cast<long long>(v);
  }
  return v.str();
}

json optional_size(std::optional<std::size_t> v) {
  return v ? json(*v) : json(nullptr);
}

json table_rows(CosetTable const& t) {
  json rows = json::array();
  for (Coset c = 0; c < t.live_count(); ++c) {
    auto row = t.row(c);
    rows.push_back(json(std::vector<Coset>(row.begin(), row.end())));
  }
  return rows;
}

std::string order_of_r(AmalgamCertificate const& a) {
  switch (a.order_kind) {
    case AmalgamCertificate::OrderOfR::kFinite:
      return std::to_string(a.k);
    case AmalgamCertificate::OrderOfR::kInfinite:
      return "infinite";
    case AmalgamCertificate::OrderOfR::kAtLeastTwo:
      return ">= 2";
  }
  return "?";
}

json witness(Presentation const& p, Certificate const& c) {
  if (auto const* f = std::get_if<FiniteCertificate>(&c)) {
    return {{"order", f->order}};
  }
  if (auto const* z = std::get_if<ZSurjectionCertificate>(&c)) {
    json map = json::object();
    for (std::size_t g = 0; g < z->map.size() && g < p.generator_count(); ++g) {
      map[p.name(g)] = z->map[g];
    }
    return {{"free_rank", z->free_rank},
            {"abelian_invariants", to_json(z->invariants)},
            {"map", z->map.empty() ? json(nullptr) : map}};
  }
  if (auto const* s = std::get_if<SubgroupCertificate>(&c)) {
    json gens = json::array();
    if (s->subgroup) {
      for (std::size_t i = 0; i < s->subgroup->generator_words.size(); ++i) {
        gens.push_back({{"name", s->subgroup->presentation.name(i)},
                        {"word", p.format(s->subgroup->generator_words[i])}});
      }
    }
    return {{"index", s->index},
            {"subgroup_free_rank", s->subgroup_free_rank},
            {"subgroup_invariants", to_json(s->subgroup_invariants)},
            {"schreier_generators", gens},
            {"subgroup_presentation",
             s->subgroup ? json(print_presentation(s->subgroup->presentation))
                         : json(nullptr)},
            {"coset_table", s->table ? table_rows(*s->table) : json(nullptr)}};
  }
  if (auto const* a = std::get_if<AmalgamCertificate>(&c)) {
    json out = {
        {"relator_index", a->relator_index},
        {"order_of_r", order_of_r(*a)},
        {"k", a->order_kind == AmalgamCertificate::OrderOfR::kFinite
                  ? json(a->k)
                  : json(nullptr)},
        {"amalgam_index",
         a->amalgam_index ? json(a->amalgam_index->str()) : json(nullptr)},
        {"h_order", optional_size(a->h_order)},
        {"r_index_in_h", optional_size(a->r_index_in_h)},
        {"nontrivial_evidence", a->nontrivial_evidence},
        {"noncyclic_evidence", a->noncyclic_evidence},
        {"h_infinite", nullptr}};
    if (a->h_infinite) {
      // H_r's generators are a prefix of K1's, so p supplies their names.
      out["h_infinite"] = {{"certificate_kind", certificate_kind(*a->h_infinite)},
                           {"witness", witness(p, *a->h_infinite)}};
    }
    return out;
  }
  return {{"budget_report", std::get<UnknownCertificate>(c).budget_report}};
}

json irredundancy_array(std::vector<IrredundancyEntry> const& entries,
                        Presentation const& p) {
  json out = json::array();
  for (auto const& e : entries) {
    out.push_back(to_json(e, p));
  }
  return out;
}

}  // namespace

json to_json(AbelianInvariants const& inv) {
  json torsion = json::array();
  for (auto const& d : inv.torsion) {
    torsion.push_back(big(d));
  }
  return {{"torsion", torsion}, {"free_rank", inv.free_rank}};
}

json to_json(Presentation const& p, Certificate const& c) {
  return {{"certificate_kind", certificate_kind(c)}, {"witness", witness(p, c)}};
}

json to_json(IrredundancyEntry const& e, Presentation const& p) {
  return {{"relator_index", e.relator_index},
          {"relator", p.format(p.relator(e.relator_index))},
          {"status", to_string(e.status)},
          {"h_order", optional_size(e.h_order)},
          {"h_not_isomorphic_to_g",
           e.h_not_isomorphic_to_g ? json(*e.h_not_isomorphic_to_g) : json(nullptr)},
          {"evidence", e.evidence}};
}

json to_json(TransformRecord const& t) {
  json pairs = json::array();
  for (auto const& pair : t.pairs) {
    pairs.push_back({{"input_relator", pair.input_relator},
                     {"relator", t.input.format(t.input.relator(pair.input_relator))},
                     {"generator", pair.generator.name},
                     {"b_conjugation_relator", pair.b_conjugation_relator},
                     {"r_conjugation_relator", pair.r_conjugation_relator}});
  }
  return {{"input", print_presentation(t.input)},
          {"output", print_presentation(t.output)},
          {"pairs", pairs}};
}

json to_json(JustFiniteReport const& report) {
  Presentation const& p = report.presentation;
  json verdicts = json::array();
  for (auto const& v : report.verdicts) {
    verdicts.push_back(
        {{"relator_index", v.relator_index},
         {"relator", p.format(p.relator(v.relator_index))},
         {"certificate_kind", certificate_kind(v.certificate)},
         {"witness", witness(v.removed, v.certificate)},
         {"budget_used",
          {{"cosets_defined", v.budget_used.cosets_defined},
           {"max_index_searched", v.budget_used.max_index_searched},
           {"search_nodes", v.budget_used.search_nodes}}}});
  }
  json transform = nullptr;
  if (report.transform) {
    transform = to_json(*report.transform);
    transform["input_irredundancy"] =
        irredundancy_array(report.input_irredundancy, report.transform->input);
  }
  return {{"schema", kReportSchema},
          {"presentation", print_presentation(p)},
          {"deficiency", report.deficiency},
          {"group_order", optional_size(report.group_order)},
          {"irredundancy", irredundancy_array(report.irredundancy, p)},
          {"transform", transform},
          {"verdicts", verdicts},
          {"summary", to_string(report.summary)},
          {"notes", report.notes}};
}

std::string describe(Presentation const& p, Certificate const& c) {
  std::ostringstream out;
  if (auto const* f = std::get_if<FiniteCertificate>(&c)) {
    out << "Finite(order " << f->order << ")";
  } else if (auto const* z = std::get_if<ZSurjectionCertificate>(&c)) {
    out << "InfiniteViaZSurjection(free rank " << z->free_rank
        << "; abelianization " << z->invariants.to_string();
    if (!z->map.empty()) {
      out << "; map";
      for (std::size_t g = 0; g < z->map.size(); ++g) {
        out << ' ' << p.name(g) << "->" << z->map[g];
      }
    }
    out << ")";
  } else if (auto const* s = std::get_if<SubgroupCertificate>(&c)) {
    out << "InfiniteViaSubgroup(index " << s->index << "; subgroup abelianization "
        << s->subgroup_invariants.to_string() << ")";
  } else if (auto const* a = std::get_if<AmalgamCertificate>(&c)) {
    out << "InfiniteViaAmalgam(r = relator " << a->relator_index << "; k "
        << order_of_r(*a);
    if (a->amalgam_index) {
      out << "; [B' : <x>] = " << a->amalgam_index->str();
    }
    if (a->h_order) {
      out << "; |H_r| = " << *a->h_order << "; [H_r : <r>] = "
          << a->r_index_in_h.value_or(0);
    } else {
      out << "; H_r infinite via "
          << (a->h_infinite ? certificate_kind(*a->h_infinite) : "?");
      out << "; " << a->noncyclic_evidence;
    }
    out << ")";
  } else {
    out << "Unknown(" << std::get<UnknownCertificate>(c).budget_report << ")";
  }
  return out.str();
}

std::string render_text(JustFiniteReport const& report) {
  Presentation const& p = report.presentation;
  std::ostringstream out;
  out << "presentation: " << print_presentation(p) << "\n";
  out << "deficiency:   " << report.deficiency << "\n";
  out << "group order:  "
      << (report.group_order ? std::to_string(*report.group_order)
                             : std::string("unknown (enumeration overflow)"))
      << "\n";
  if (report.transform) {
    out << "transform of: " << print_presentation(report.transform->input)
        << "\n";
    for (auto const& e : report.input_irredundancy) {
      out << "  input relator " << e.relator_index << ": "
          << to_string(e.status) << " (" << e.evidence << ")\n";
    }
  }
  out << "irredundancy:\n";
  for (auto const& e : report.irredundancy) {
    out << "  relator " << e.relator_index << ": " << to_string(e.status)
        << " (" << e.evidence << ")\n";
  }
  out << "deletions:\n";
  for (auto const& v : report.verdicts) {
    out << "  - relator " << v.relator_index << " ["
        << p.format(p.relator(v.relator_index)) << "]: "
        << describe(v.removed, v.certificate) << "\n";
  }
  out << "summary: " << to_string(report.summary) << "\n";
  for (auto const& note : report.notes) {
    out << "note: " << note << "\n";
  }
  return out.str();
}

}  // namespace justfp
