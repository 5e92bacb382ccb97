// justfp: finitely presented groups and just-finite presentations.
//
// Exit codes: 0 definitive result, 1 input error, 2 budget exhausted or
// inconclusive.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "justfp/abelian.hpp"
#include "justfp/certify.hpp"
#include "justfp/coset_enum.hpp"
#include "justfp/report_json.hpp"
#include "justfp/subgroup.hpp"
#include "justfp/syntax.hpp"
#include "justfp/transform.hpp"

namespace {

using nlohmann::json;
using namespace justfp;

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitInconclusive = 2;

struct CliConfig {
  std::size_t max_cosets = kDefaultMaxCosets;
  std::size_t max_index = kDefaultMaxIndex;
  std::string format = "text";
  bool cyclic_shortcut = false;

  bool json() const { return format == "json"; }
  Budget budget() const { return {max_cosets, max_index}; }
};

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_source(std::string const& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin),
            std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw InputError("cannot open '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Presentation load(std::string const& path) {
  std::string text = read_source(path);
  try {
    return parse_presentation(text);
  } catch (ParseError const& e) {
    throw InputError(path + ":" + e.render(text));
  } catch (PresentationError const& e) {
    throw InputError(path + ": " + e.what());
  }
}

void emit(CliConfig const& cfg, json const& j, std::string const& text) {
  if (cfg.json()) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << text;
  }
}

// The cyclic case of the construction: a finite cyclic group of order n is
// presented by <x | x^n>.
std::optional<Presentation> cyclic_presentation(Presentation const& p,
                                                CliConfig const& cfg) {
  auto outcome = coset_enumerate(p, {}, cfg.max_cosets);
  if (!outcome.is_complete() || !is_cyclic(outcome.table())) {
    return std::nullopt;
  }
  return Presentation({"x"}, {Word::generator(0, static_cast<long long>(outcome.index()))});
}

int cmd_transform(std::string const& path, CliConfig const& cfg) {
  Presentation p = load(path);
  if (cfg.cyclic_shortcut) {
    if (auto cyclic = cyclic_presentation(p, cfg)) {
      emit(cfg,
           {{"presentation", print_presentation(*cyclic)},
            {"cyclic_shortcut", true},
            {"pairs", json::array()}},
           print_presentation(*cyclic) + "\n");
      return kExitOk;
    }
  }
  TransformRecord t = just_finite_transform(p);
  std::string text = print_presentation(t.output) + "\n";
  for (auto const& pair : t.pairs) {
    text += "# relator " + std::to_string(pair.input_relator) + " [" +
            p.format(p.relator(pair.input_relator)) + "] -> generator " +
            pair.generator.name + ", relators " +
            std::to_string(pair.b_conjugation_relator) + ", " +
            std::to_string(pair.r_conjugation_relator) + "\n";
  }
  json j = to_json(t);
  j["presentation"] = print_presentation(t.output);
  j["cyclic_shortcut"] = false;
  emit(cfg, j, text);
  return kExitOk;
}

int cmd_order(std::string const& path, CliConfig const& cfg) {
  Presentation p = load(path);
  auto outcome = coset_enumerate(p, {}, cfg.max_cosets);
  json j = {{"presentation", print_presentation(p)},
            {"max_cosets", cfg.max_cosets},
            {"cosets_defined", outcome.stats().cosets_defined}};
  if (outcome.is_complete()) {
    j["order"] = outcome.index();
    emit(cfg, j, std::to_string(outcome.index()) + "\n");
    return kExitOk;
  }
  j["order"] = nullptr;
  emit(cfg, j,
       "overflow: enumeration exceeded " + std::to_string(cfg.max_cosets) +
           " cosets (order unknown)\n");
  return kExitInconclusive;
}

int cmd_abelian(std::string const& path, CliConfig const& cfg) {
  Presentation p = load(path);
  AbelianInvariants inv = abelian_invariants(p);
  json j = to_json(inv);
  j["presentation"] = print_presentation(p);
  j["maps_onto_Z"] = inv.free_rank >= 1;
  emit(cfg, j, inv.to_string() + "\n");
  return kExitOk;
}

int cmd_low_index(std::string const& path, CliConfig const& cfg) {
  Presentation p = load(path);
  auto records = low_index_subgroups(p, cfg.max_index);
  json list = json::array();
  std::string text;
  for (auto const& rec : records) {
    AbelianInvariants inv = abelian_invariants(rec.subgroup.presentation);
    json gens = json::array();
    for (auto const& w : rec.subgroup.generator_words) {
      gens.push_back(p.format(w));
    }
    list.push_back({{"index", rec.index},
                    {"generators", gens},
                    {"abelian_invariants", to_json(inv)}});
    text += "index " + std::to_string(rec.index) + ": abelianization " +
            inv.to_string() + "\n";
  }
  emit(cfg,
       {{"presentation", print_presentation(p)},
        {"max_index", cfg.max_index},
        {"subgroups", list}},
       text);
  return kExitOk;
}

int cmd_certify_infinite(std::string const& path, CliConfig const& cfg) {
  Presentation p = load(path);
  Certificate c = certify_infinite(p, cfg.budget());
  json j = to_json(p, c);
  j["presentation"] = print_presentation(p);
  emit(cfg, j, describe(p, c) + "\n");
  return std::holds_alternative<UnknownCertificate>(c) ? kExitInconclusive
                                                       : kExitOk;
}

int cmd_verify_same(std::string const& first, std::string const& second,
                    CliConfig const& cfg) {
  Presentation p = load(first);
  Presentation q = load(second);
  Verification v;
  try {
    v = verify_presents_same_group(p, q, cfg.max_cosets);
  } catch (std::invalid_argument const& e) {
    throw InputError(e.what());
  }
  json j = {{"p", print_presentation(p)}, {"q", print_presentation(q)}};
  switch (v) {
    case Verification::kTrue:
      j["same_group"] = true;
      emit(cfg, j, "true\n");
      return kExitOk;
    case Verification::kFalse:
      j["same_group"] = false;
      emit(cfg, j, "false\n");
      return kExitOk;
    case Verification::kUnknown:
      j["same_group"] = nullptr;
      emit(cfg, j, "unknown (enumeration overflow)\n");
      return kExitInconclusive;
  }
  return kExitInconclusive;
}

int cmd_report(std::string const& path, bool transform_first,
               CliConfig const& cfg) {
  Presentation p = load(path);
  std::optional<TransformRecord> record;
  if (transform_first) {
    if (cfg.cyclic_shortcut) {
      if (auto cyclic = cyclic_presentation(p, cfg)) {
        p = *cyclic;
        transform_first = false;
      }
    }
    if (transform_first) {
      record = just_finite_transform(p);
      p = record->output;
    }
  } else {
    record = recover_transform(p);
  }
  JustFiniteReport report =
      just_finite_report(p, cfg.budget(), record ? &*record : nullptr);
  emit(cfg, to_json(report), render_text(report));
  return report.summary == Summary::kInconclusive ? kExitInconclusive : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finitely presented groups and just-finite presentations"};
  app.require_subcommand(1);
  app.fallthrough();

  CliConfig cfg;
  app.add_option("--max-cosets", cfg.max_cosets, "Coset enumeration budget")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-index", cfg.max_index, "Low-index search bound")
      ->check(CLI::PositiveNumber);
  app.add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--cyclic-shortcut", cfg.cyclic_shortcut,
               "Present finite cyclic groups as <x | x^n> instead of transforming");

  std::string file;
  std::string second;
  bool transform_first = false;

  auto* transform = app.add_subcommand("transform", "Print the just-finite transform");
  transform->add_option("file", file, ".fp file or - for stdin")->required();
  auto* order = app.add_subcommand("order", "Group order by coset enumeration");
  order->add_option("file", file)->required();
  auto* abelian = app.add_subcommand("abelian", "Abelian invariants");
  abelian->add_option("file", file)->required();
  auto* low_index = app.add_subcommand("low-index", "Subgroups of small index up to conjugacy");
  low_index->add_option("file", file)->required();
  auto* certify = app.add_subcommand("certify-infinite", "Search for an infiniteness certificate");
  certify->add_option("file", file)->required();
  auto* verify = app.add_subcommand("verify-same", "Check that the second file presents the same group");
  verify->add_option("first", file)->required();
  verify->add_option("second", second)->required();
  auto* report = app.add_subcommand("report", "Certify every single-relator deletion");
  report->add_option("file", file)->required();
  report->add_flag("--transform", transform_first, "Transform the input first");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (*transform) return cmd_transform(file, cfg);
    if (*order) return cmd_order(file, cfg);
    if (*abelian) return cmd_abelian(file, cfg);
    if (*low_index) return cmd_low_index(file, cfg);
    if (*certify) return cmd_certify_infinite(file, cfg);
    if (*verify) return cmd_verify_same(file, second, cfg);
    if (*report) return cmd_report(file, transform_first, cfg);
  } catch (InputError const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
