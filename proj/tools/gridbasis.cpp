// gridbasis: membership deciders and basis enumeration for permutation
// pattern classes, juxtapositions and 2x2 grid classes.

#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "gridbasis/dsl.hpp"
#include "gridbasis/render.hpp"

namespace {

using namespace gridbasis;

struct Options {
  std::string class_spec, juxt_spec, grid_spec, perm, side, format = "text";
  std::string c_basis, d_basis;
  int max_len = 6, lookahead = 2, workers = 1, form = 0;
  std::uint64_t memory_budget = kDefaultMemoryBudget;
  bool witness = false;
};

// GRIDBASIS_MAX_LEN may lower the hard length cap, never raise it.
int effective_cap() {
  const char* env = std::getenv("GRIDBASIS_MAX_LEN");
  if (!env) return kHardLengthCap;
  char* end = nullptr;
  const long value = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || value < 0)
    throw validation_error("GRIDBASIS_MAX_LEN must be a non-negative integer, got \"" +
                           std::string(env) + "\"");
  return value < kHardLengthCap ? static_cast<int>(value) : kHardLengthCap;
}

void check_cap(int max_len) {
  const int cap = effective_cap();
  if (max_len > cap)
    throw resource_error("--max-len " + std::to_string(max_len) +
                         " exceeds the hard length cap " + std::to_string(cap));
}

void warn_reduced(const ClassSpec& c) {
  if (c.was_reduced())
    std::cerr << "warning: basis was not an antichain; reduced to " << c.to_string() << "\n";
}

void warn_reduced(const GridSpec& g) {
  for (const auto& cell : g.cells()) warn_reduced(cell);
}

EnumLimits limits_from(const Options& o) {
  EnumLimits lim;
  lim.max_len = o.max_len;
  lim.lookahead = o.lookahead;
  lim.workers = o.workers;
  lim.memory_budget = o.memory_budget;
  return lim;
}

struct Source {
  bool is_class = false;
  ClassSpec cls;
  GridSpec grid;
  std::string description;
};

Source parse_source(const Options& o) {
  const int given = !o.class_spec.empty() + !o.juxt_spec.empty() + !o.grid_spec.empty();
  if (given != 1)
    throw validation_error("exactly one of --class, --juxt or --grid is required");
  Source s;
  if (!o.class_spec.empty()) {
    s.is_class = true;
    s.cls = parse_class(o.class_spec);
    warn_reduced(s.cls);
    s.description = s.cls.to_string();
  } else if (!o.juxt_spec.empty()) {
    s.grid = parse_juxt(o.juxt_spec);
    warn_reduced(s.grid);
    s.description = s.grid.to_string();
  } else {
    s.grid = parse_grid(o.grid_spec);
    warn_reduced(s.grid);
    s.description = s.grid.to_string();
  }
  return s;
}

GridSpec parse_required_grid(const Options& o) {
  if (o.grid_spec.empty()) throw validation_error("--grid is required for this subcommand");
  GridSpec g = parse_grid(o.grid_spec);
  warn_reduced(g);
  return g;
}

void emit(const Options& o, const nlohmann::json& j, const std::string& text) {
  if (o.format == "json")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

int cmd_member(const Options& o) {
  const Source src = parse_source(o);
  const Permutation p = parse_perm(o.perm);
  bool is_member = false;
  nlohmann::json witness_json = nullptr;
  std::string witness_text;
  if (src.is_class) {
    is_member = src.cls.member(p);
  } else if (const auto w = find_gridding(src.grid, p)) {
    is_member = true;
    switch (src.grid.shape()) {
      case GridShape::horizontal:
        witness_json = {{"v", w->v}};
        witness_text = "witness: v=" + std::to_string(w->v) + "\n";
        break;
      case GridShape::vertical:
        witness_json = {{"h", w->h}};
        witness_text = "witness: h=" + std::to_string(w->h) + "\n";
        break;
      case GridShape::two_by_two:
        witness_json = {{"v", w->v}, {"h", w->h}};
        witness_text =
            "witness: v=" + std::to_string(w->v) + " h=" + std::to_string(w->h) + "\n";
        break;
    }
  }
  nlohmann::json j;
  j["class"] = src.description;
  j["perm"] = perm_json(p);
  j["member"] = is_member;
  j["witness"] = o.witness ? witness_json : nlohmann::json(nullptr);
  std::string text = is_member ? "true\n" : "false\n";
  if (o.witness && is_member) text += witness_text;
  emit(o, j, text);
  return 0;
}

int cmd_squint(const Options& o) {
  const GridSpec g = parse_required_grid(o);
  const Permutation p = parse_perm(o.perm);
  if (o.side != "A" && o.side != "B") throw validation_error("--side must be A or B");
  const SquintSide side = o.side == "A" ? SquintSide::a : SquintSide::b;
  const auto w = find_squint_division(g, p, side);
  nlohmann::json j;
  j["grid"] = g.to_string();
  j["perm"] = perm_json(p);
  j["side"] = o.side;
  j["member"] = w.has_value();
  j["witness"] = (o.witness && w) ? nlohmann::json{{"v", w->v}, {"r", w->r}, {"l", w->l}}
                                  : nlohmann::json(nullptr);
  std::string text = w ? "true\n" : "false\n";
  if (o.witness && w)
    text += "witness: v=" + std::to_string(w->v) + " r=" + std::to_string(w->r) +
            " l=" + std::to_string(w->l) + "\n";
  emit(o, j, text);
  return 0;
}

int cmd_basis(const Options& o) {
  check_cap(o.max_len);
  const Source src = parse_source(o);
  MembershipFn member;
  if (src.is_class)
    member = [&](const Permutation& p) { return src.cls.member(p); };
  else
    member = [&](const Permutation& p) { return member_grid(src.grid, p); };
  const BasisReport report = enumerate_basis(member, src.description, limits_from(o));
  emit(o, report_json(report), report_text(report));
  return 0;
}

int cmd_relbasis(const Options& o) {
  check_cap(o.max_len);
  const GridSpec g = parse_required_grid(o);
  const RelativeBasisReport report = relative_basis(g, limits_from(o));
  emit(o, relative_json(report), relative_text(report));
  return 0;
}

int cmd_verify_lemma3(const Options& o) {
  check_cap(o.max_len);
  const GridSpec g = parse_required_grid(o);
  const Lemma3Report report = verify_lemma3(g, o.max_len);
  emit(o, lemma3_json(g, o.max_len, report), lemma3_text(report));
  return 0;
}

int cmd_verify_obs2(const Options& o) {
  check_cap(o.max_len);
  const GridSpec g = parse_required_grid(o);
  const Observation2Report report = verify_observation2(g, limits_from(o));
  emit(o, observation2_json(g, report), observation2_text(report));
  return 0;
}

int cmd_survey(const Options& o) {
  check_cap(o.max_len);
  const EnumLimits lim = limits_from(o);
  const auto orbits = survey_monotone(lim);
  emit(o, survey_json(orbits, lim), survey_text(orbits));
  return 0;
}

int cmd_theorem2(const Options& o) {
  check_cap(o.max_len);
  if (o.c_basis.empty() || o.d_basis.empty())
    throw validation_error("--c-basis and --d-basis are required");
  const ClassSpec c = parse_class(o.c_basis);
  const ClassSpec d = parse_class(o.d_basis);
  warn_reduced(c);
  warn_reduced(d);
  const BasisReport report = theorem2_check(c, d, o.form, limits_from(o));
  emit(o, report_json(report), report_text(report));
  return 0;
}

int cmd_nonfb(const Options& o) {
  check_cap(o.max_len);
  const BasisReport report = nonfb_demo(limits_from(o));
  emit(o, report_json(report), report_text(report));
  return 0;
}

void add_format(CLI::App* cmd, Options& o) {
  cmd->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->default_val("text");
}

void add_enum_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--max-len", o.max_len, "Enumeration length cap")
      ->check(CLI::Range(0, 12))
      ->capture_default_str();
  cmd->add_option("--lookahead", o.lookahead, "Stabilization lookahead")
      ->check(CLI::Range(0, 12))
      ->capture_default_str();
  cmd->add_option("--workers", o.workers, "Worker threads")
      ->check(CLI::Range(1, 256))
      ->capture_default_str();
  cmd->add_option("--memory-budget", o.memory_budget, "Frontier memory budget in bytes")
      ->capture_default_str();
}

void add_class_sources(CLI::App* cmd, Options& o) {
  cmd->add_option("--class", o.class_spec, "Class spec, e.g. \"Av(2143,3412)\"");
  cmd->add_option("--juxt", o.juxt_spec, "Juxtaposition spec, e.g. \"[inc|inc]\"");
  cmd->add_option("--grid", o.grid_spec, "2x2 grid spec, e.g. \"[dec inc; inc dec]\"");
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"membership and basis enumeration for permutation pattern classes"};
  app.require_subcommand(1);

  CLI::App* member = app.add_subcommand("member", "Decide membership of a permutation");
  add_class_sources(member, o);
  member->add_option("--perm", o.perm, "Permutation, e.g. 35142")->required();
  member->add_flag("--witness", o.witness, "Print a witness for positive answers");
  add_format(member, o);

  CLI::App* basis = app.add_subcommand("basis", "Enumerate the basis up to a length cap");
  add_class_sources(basis, o);
  add_enum_options(basis, o);
  add_format(basis, o);

  CLI::App* relbasis = app.add_subcommand("relbasis", "Relative basis of a 2x2 grid class");
  relbasis->add_option("--grid", o.grid_spec, "2x2 grid spec")->required();
  add_enum_options(relbasis, o);
  add_format(relbasis, o);

  CLI::App* squint = app.add_subcommand("squint", "Decide squint-class membership");
  squint->add_option("--grid", o.grid_spec, "2x2 grid spec")->required();
  squint->add_option("--perm", o.perm, "Permutation")->required();
  squint->add_option("--side", o.side, "Squint side")->check(CLI::IsMember({"A", "B"}))->required();
  squint->add_flag("--witness", o.witness, "Print a witness for positive answers");
  add_format(squint, o);

  CLI::App* lemma3 = app.add_subcommand("verify-lemma3", "Grid class equals squint intersection");
  lemma3->add_option("--grid", o.grid_spec, "2x2 grid spec")->required();
  lemma3->add_option("--max-len", o.max_len, "Exhaustive check length cap")->check(CLI::Range(0, 12));
  add_format(lemma3, o);

  CLI::App* obs2 = app.add_subcommand("verify-obs2", "Basis splits into in-F and basis-of-F parts");
  obs2->add_option("--grid", o.grid_spec, "2x2 grid spec")->required();
  add_enum_options(obs2, o);
  add_format(obs2, o);

  CLI::App* survey = app.add_subcommand("survey-monotone", "Basis survey of monotone 2x2 grids");
  add_enum_options(survey, o);
  add_format(survey, o);

  CLI::App* theorem2 = app.add_subcommand("theorem2", "Basis of [C D] over a monotone bottom row");
  theorem2->add_option("--c-basis", o.c_basis, "Class spec for the top-left cell")->required();
  theorem2->add_option("--d-basis", o.d_basis, "Class spec for the top-right cell")->required();
  theorem2->add_option("--form", o.form, "Bottom row: 1=[inc inc], 2=[inc dec], 3=[dec inc]")
      ->check(CLI::Range(1, 3))
      ->required();
  add_enum_options(theorem2, o);
  add_format(theorem2, o);

  CLI::App* nonfb = app.add_subcommand("nonfb-demo", "Basis growth of the direct-sum example grid");
  add_enum_options(nonfb, o);
  add_format(nonfb, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (member->parsed()) return cmd_member(o);
    if (basis->parsed()) return cmd_basis(o);
    if (relbasis->parsed()) return cmd_relbasis(o);
    if (squint->parsed()) return cmd_squint(o);
    if (lemma3->parsed()) return cmd_verify_lemma3(o);
    if (obs2->parsed()) return cmd_verify_obs2(o);
    if (survey->parsed()) return cmd_survey(o);
    if (theorem2->parsed()) return cmd_theorem2(o);
    if (nonfb->parsed()) return cmd_nonfb(o);
  } catch (const parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const validation_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const resource_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
