#include "cli.hpp"

#include "flatknot/alexander.hpp"
#include "flatknot/bracket.hpp"
#include "flatknot/canonical.hpp"
#include "flatknot/cover.hpp"
#include "flatknot/errors.hpp"
#include "flatknot/json_io.hpp"
#include "flatknot/moves.hpp"
#include "flatknot/quandle.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

namespace flatknot::cli {

namespace {

struct Config {
  std::string format = "text";
  std::uint64_t seed = 1;
  int budget = 5000;
  int cap = 20;
  std::string convention = "L";
  std::string move_system = "fv";
};

struct Outcome {
  Json result;
  std::string text;
  int status = kOk;
};

std::string trim(std::string s) {
  const auto not_space = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  return s;
}

// A path to a readable file, or the input itself.
std::string load_input(const std::string& arg) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) {
    std::ifstream in(arg);
    std::stringstream ss;
    ss << in.rdbuf();
    return trim(ss.str());
  }
  return trim(arg);
}

bool looks_like_json(const std::string& text) { return !text.empty() && text.front() == '{'; }

GaussCode load_code(const std::string& arg) {
  const std::string text = load_input(arg);
  if (looks_like_json(text)) return planar_to_gauss(planar_from_json(parse_json_text(text)));
  return parse_gauss(text);
}

Json load_json(const std::string& arg) {
  const std::string text = load_input(arg);
  if (!looks_like_json(text)) throw ParseError("expected a JSON object", 0);
  return parse_json_text(text);
}

BracketOptions bracket_options(const Config& cfg) {
  BracketOptions o;
  o.ms = MoveSystem::parse(cfg.move_system);
  o.budget = cfg.budget;
  o.cap = cfg.cap;
  if (cfg.convention == "L") o.convention = SmoothingConvention::L;
  else if (cfg.convention == "R") o.convention = SmoothingConvention::R;
  else throw ValidationError("convention must be L or R");
  return o;
}

Outcome bracket_outcome(const BracketValue& b) {
  Outcome o;
  o.result = bracket_to_json(b);
  for (const auto& [key, term] : b.terms)
    o.text += key + "\t" + term.coeff.to_string() + (term.saturated ? "" : "\t(unsaturated)") + "\n";
  if (!b.saturated()) o.status = kBudget;
  return o;
}

std::string counts_line(const PlanarCode& p) {
  return "classical=" + std::to_string(count_vertices(p, VertexKind::Classical)) +
         " flat=" + std::to_string(count_vertices(p, VertexKind::Flat)) +
         " virtual=" + std::to_string(count_vertices(p, VertexKind::Virtual));
}

Json counts_json(const PlanarCode& p) {
  return {{"classical", count_vertices(p, VertexKind::Classical)},
          {"flat", count_vertices(p, VertexKind::Flat)},
          {"virtual", count_vertices(p, VertexKind::Virtual)}};
}

Json config_json(const Config& c) {
  return {{"format", c.format},           {"seed", c.seed},
          {"budget", c.budget},           {"cap", c.cap},
          {"convention", c.convention},   {"move_system", MoveSystem::parse(c.move_system).to_string()}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Invariants of flat-virtual and multi-flat knot diagrams", "flatknot"};
  app.require_subcommand(1);
  Config cfg;
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", cfg.seed, "Random seed");
  app.add_option("--budget", cfg.budget, "Canonical-key search budget per state");
  app.add_option("--cap", cfg.cap, "Maximal number of classical crossings for the bracket");
  app.add_option("--convention", cfg.convention, "Smoothing convention")->check(CLI::IsMember({"L", "R"}));
  auto* ms_opt = app.add_option("--move-system", cfg.move_system, "k:d0,..:e0,..[:v], or fv, rfv, classical");
  for (auto* o : app.get_options()) o->configurable(false);
  app.fallthrough();

  std::string input;
  std::function<Outcome()> action;

  auto* validate = app.add_subcommand("validate", "Check a Gauss code, planar code, annular curve or biquandle");
  validate->add_option("input", input, "Inline code or file")->required();
  validate->callback([&] {
    action = [&] {
      Outcome o;
      const std::string text = load_input(input);
      if (!looks_like_json(text)) {
        const GaussCode g = parse_gauss(text);
        o.result = {{"kind", "gauss"}, {"code", g.to_string()}, {"crossings", g.crossing_count()},
                    {"classical", g.classical_count()}, {"components", g.num_components()}};
        o.text = "ok gauss " + g.to_string() + "\n";
        return o;
      }
      const Json j = parse_json_text(text);
      if (j.contains("vertices")) {
        const PlanarCode p = planar_from_json(j);
        o.result = {{"kind", "planar"}, {"counts", counts_json(p)}};
        o.text = "ok planar " + counts_line(p) + "\n";
      } else if (j.contains("n")) {
        const FiniteKFlatBiquandle b = biquandle_from_json(j);
        const AxiomReport r = check_axioms(b);
        if (!r.ok) throw ValidationError("axiom check failed: " + r.failure);
        o.result = {{"kind", "biquandle"}, {"n", b.n}, {"k", b.k}};
        o.text = "ok biquandle n=" + std::to_string(b.n) + " k=" + std::to_string(b.k) + "\n";
      } else {
        const AnnularCurve c = annular_from_json(j);
        validate_curve(c);
        o.result = {{"kind", "annular"}, {"segments", c.segment_count()}, {"crossings", c.crossings.size()}};
        o.text = "ok annular segments=" + std::to_string(c.segment_count()) + "\n";
      }
      return o;
    };
  });

  bool no_auto_kink = false;
  auto* alex = app.add_subcommand("alexander", "Three-variable polynomial of a flat-virtual diagram");
  alex->add_option("input", input, "Inline code or file")->required();
  alex->add_flag("--no-auto-kink", no_auto_kink, "Fail instead of adding a curl to components without underpass");
  alex->callback([&] {
    action = [&] {
      const std::string text = load_input(input);
      const PlanarCode p = looks_like_json(text) ? planar_from_json(parse_json_text(text)) : gauss_to_planar(parse_gauss(text));
      const AlexanderResult r = alexander_delta(p, !no_auto_kink);
      Outcome o;
      o.result = {{"delta", r.delta.to_string()}, {"nonclassical", !r.delta.is_zero()}, {"auto_kinked", r.auto_kinked}};
      o.text = r.delta.to_string() + "\n";
      return o;
    };
  });

  std::optional<int> a_value;
  auto add_bracket = [&](const char* name, bool normalized) {
    auto* sub = app.add_subcommand(name, normalized ? "Flat-virtual Jones polynomial" : "Picture-valued bracket");
    sub->add_option("input", input, "Inline code or file")->required();
    sub->add_option("--a-value", a_value, "Substitute a (only -1 or 1)");
    sub->callback([&, normalized] {
      action = [&, normalized] {
        const GaussCode g = load_code(input);
        BracketValue b = normalized ? jones(g, bracket_options(cfg)) : bracket(g, bracket_options(cfg));
        if (a_value) {
          if (*a_value == -1) b = specialize_flat(b);
          else if (*a_value == 1) {
            BracketValue s;
            s.states = b.states;
            for (const auto& [k, t] : b.terms) {
              LaurentPoly c = t.coeff.substitute(var::a, 1);
              if (!c.is_zero()) s.terms[k] = BracketTerm{std::move(c), t.saturated};
            }
            b = s;
          } else {
            throw ValidationError("--a-value accepts only -1 or 1");
          }
        }
        return bracket_outcome(b);
      };
    });
  };
  add_bracket("bracket", false);
  add_bracket("jones", true);

  std::string biquandle_path;
  auto* col = app.add_subcommand("colorings", "Count colourings by a finite k-flat biquandle");
  col->add_option("input", input, "Inline code or file")->required();
  col->add_option("--biquandle", biquandle_path, "Biquandle JSON file")->required();
  col->callback([&] {
    action = [&] {
      const GaussCode g = load_code(input);
      const FiniteKFlatBiquandle b = biquandle_from_json(load_json(biquandle_path));
      const unsigned long long n = count_colorings(g, b);
      Outcome o;
      o.result = {{"count", n}};
      o.text = std::to_string(n) + "\n";
      return o;
    };
  });

  std::optional<int> k_opt;
  auto* mf = app.add_subcommand("mf-delta", "Alexander polynomial of a multi-flat diagram");
  mf->add_option("input", input, "Inline code or file")->required();
  mf->add_option("--k", k_opt, "Number of flat types (default: the largest type used)");
  mf->add_flag("--no-auto-kink", no_auto_kink, "Fail instead of adding a curl to components without underpass");
  mf->callback([&] {
    action = [&] {
      const GaussCode g = load_code(input);
      const MultiflatDelta d = multiflat_alexander_delta(g, k_opt.value_or(g.max_type()), !no_auto_kink);
      Outcome o;
      o.result = {{"delta", d.delta.to_string()}, {"ideal_order", d.ideal_order}, {"auto_kinked", d.auto_kinked}};
      o.text = d.delta.to_string() + "\n";
      if (d.ideal_order == 1) o.text += "ideal: first minor (the determinant vanishes)\n";
      return o;
    };
  });

  int d_value = 2;
  auto* phi = app.add_subcommand("phi", "Flat-virtual image of an annular diagram");
  phi->add_option("input", input, "Annular curve JSON")->required();
  phi->add_option("--d", d_value, "Order of the rotation group")->check(CLI::Range(2, 1000));
  phi->callback([&] {
    action = [&] {
      const AnnularCurve c = annular_from_json(load_json(input));
      const GaussCode g = phi_d_gauss(c, d_value);
      const PlanarCode p = gauss_to_planar(g);
      Outcome o;
      o.result = {{"gauss", g.to_string()}, {"planar", planar_to_json(p)}, {"counts", counts_json(p)}};
      o.text = g.to_string() + "\n" + counts_line(p) + "\n";
      return o;
    };
  });

  int p_value = 2;
  auto* cov = app.add_subcommand("cover", "Projection along an unbranched cyclic cover of the annulus");
  cov->add_option("input", input, "Annular diagram JSON")->required();
  cov->add_option("--p", p_value, "Degree of the cover")->check(CLI::Range(2, 1000));
  cov->callback([&] {
    action = [&] {
      const AnnularCurve c = annular_from_json(load_json(input));
      const MoveSystem ms = ms_opt->count() > 0 ? MoveSystem::parse(cfg.move_system) : MoveSystem::classical();
      const CoverResult r = covering_project(c, p_value, ms);
      Outcome o;
      o.result = {{"gauss", r.gauss.to_string()}, {"planar", planar_to_json(r.planar)},
                  {"move_system", r.ms.to_string()}, {"new_type", r.new_type}};
      o.text = r.gauss.to_string() + "\nmove system: " + r.ms.to_string() + "\n";
      return o;
    };
  });

  int steps = 20;
  bool forbid_r1 = false;
  int max_crossings = 0;
  std::string log_out, replay_path;
  auto* scr = app.add_subcommand("scramble", "Random walk of legal moves, or replay of a move log");
  scr->add_option("input", input, "Inline code or file");
  scr->add_option("--steps", steps, "Number of moves")->check(CLI::NonNegativeNumber);
  scr->add_flag("--forbid-classical-r1", forbid_r1, "Never use classical first moves");
  scr->add_option("--max-crossings", max_crossings, "Crossing cap during the walk (0: start + 6)");
  scr->add_option("--log-out", log_out, "Write the move log as JSON");
  scr->add_option("--replay", replay_path, "Replay a move log instead of scrambling");
  scr->callback([&] {
    action = [&] {
      Outcome o;
      if (!replay_path.empty()) {
        const MoveLog log = move_log_from_json(load_json(replay_path));
        const GaussCode end = replay(log.start, log.moves, log.ms);
        o.result = {{"code", end.to_string()}, {"moves", log.moves.size()}};
        o.text = end.to_string() + "\n";
        return o;
      }
      if (input.empty()) throw ValidationError("scramble needs an input code or --replay");
      const GaussCode g = load_code(input);
      ScrambleOptions opt;
      opt.forbid_classical_r1 = forbid_r1;
      opt.max_crossings = max_crossings;
      const MoveSystem ms = MoveSystem::parse(cfg.move_system);
      const ScrambleResult r = scramble(g, ms, cfg.seed, steps, opt);
      const Json log = move_log_to_json({g, ms, r.log});
      if (!log_out.empty()) {
        std::ofstream f(log_out);
        if (!f) throw ValidationError("cannot write " + log_out);
        f << log.dump(2) << "\n";
      }
      o.result = {{"code", r.code.to_string()}, {"moves", r.log.size()}, {"log", log}};
      o.text = r.code.to_string() + "\n";
      return o;
    };
  });

  auto* canon = app.add_subcommand("canon", "Canonical key of a flat state");
  canon->add_option("input", input, "Inline code or file")->required();
  canon->callback([&] {
    action = [&] {
      const CanonicalKey k = canonical_flat_key(load_code(input), MoveSystem::parse(cfg.move_system), cfg.budget);
      Outcome o;
      o.result = {{"key", k.key}, {"free_circles", k.free_circles}, {"saturated", k.saturated}, {"visited", k.visited}};
      o.text = k.key + "\tfree_circles=" + std::to_string(k.free_circles) + (k.saturated ? "" : "\t(unsaturated)") + "\n";
      if (!k.saturated) o.status = kBudget;
      return o;
    };
  });

  std::string to = "planar";
  auto* conv = app.add_subcommand("convert", "Convert between Gauss and planar codes");
  conv->add_option("input", input, "Inline code or file")->required();
  conv->add_option("--to", to, "Target form")->check(CLI::IsMember({"planar", "gauss"}));
  conv->callback([&] {
    action = [&] {
      const GaussCode g = load_code(input);
      Outcome o;
      if (to == "gauss") {
        o.result = {{"gauss", g.to_string()}};
        o.text = g.to_string() + "\n";
      } else {
        const PlanarCode p = gauss_to_planar(g);
        o.result = planar_to_json(p);
        o.text = planar_to_json(p).dump(2) + "\n";
      }
      return o;
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalid;
  }

  const std::string sub = app.get_subcommands().front()->get_name();
  try {
    const Json config = config_json(cfg);
    err << "# flatknot " << sub << " " << config.dump() << "\n";
    const Outcome o = action();
    if (cfg.format == "json") out << Json{{"command", sub}, {"config", config}, {"result", o.result}}.dump(2) << "\n";
    else out << o.text;
    return o.status;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kInvalid;
  } catch (const ValidationError& e) {
    err << "invalid input: " << e.what() << "\n";
    return kInvalid;
  } catch (const PreconditionError& e) {
    err << "precondition violated: " << e.what() << "\n";
    return kPrecondition;
  } catch (const BudgetError& e) {
    err << "budget exhausted: " << e.what() << "\n";
    return kBudget;
  }
}

}  // namespace flatknot::cli
