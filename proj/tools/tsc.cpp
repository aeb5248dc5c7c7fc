// tsc: command-line front end for normal forms, sequent decisions and model
// checking in the finitely supported frame.
//
// Exit status: 0 success / derivable / holds, 1 negative answer, 2 usage or
// input error.

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "tsc/frame.hpp"
#include "tsc/fuzz.hpp"
#include "tsc/normalform.hpp"
#include "tsc/syntax.hpp"

namespace {

using nlohmann::json;

constexpr int kYes = 0;
constexpr int kNo = 1;
constexpr int kError = 2;

struct Output {
  bool json = false;
  bool color = false;

  std::string status(const std::string& word, bool positive) const {
    if (!color) return word;
    return (positive ? "\033[32m" : "\033[31m") + word + "\033[0m";
  }
};

json world_json(const tsc::World& x) {
  json out = json::array();
  for (const auto& c : x.coords()) out.push_back(tsc::render(c));
  return out;
}

int emit(const Output& out, const json& doc, const std::string& text) {
  if (out.json) {
    std::cout << doc.dump() << '\n';
  } else {
    std::cout << text;
  }
  return kYes;
}

int cmd_normalize(const Output& out, const std::string& text) {
  const auto f = tsc::parse_formula(text);
  const auto x = tsc::val(f);
  const auto m = tsc::mnf_of_world(x);
  emit(out, {{"status", "ok"}, {"mnf", tsc::render(m)}, {"world", world_json(x)}},
       tsc::render(m) + "\nworld: " + tsc::render(x) + "\n");
  return kYes;
}

int cmd_decide(const Output& out, const std::string& text) {
  const auto s = tsc::parse_sequent(text);
  const auto lw = tsc::val(s.lhs);
  const auto rw = tsc::val(s.rhs);
  const bool ok = tsc::pointwise_geq(lw, rw);
  const std::string word = ok ? "derivable" : "not derivable";
  json doc{{"status", word},
           {"mnf", tsc::render(tsc::mnf_of_world(lw))},
           {"world", world_json(lw)},
           {"detail", {{"rhs_mnf", tsc::render(tsc::mnf_of_world(rw))}, {"rhs_world", world_json(rw)}}}};
  emit(out, doc,
       out.status(word, ok) + "\nlhs mnf:   " + tsc::render(tsc::mnf_of_world(lw)) +
           "\nrhs mnf:   " + tsc::render(tsc::mnf_of_world(rw)) + "\nlhs world: " + tsc::render(lw) +
           "\nrhs world: " + tsc::render(rw) + "\n");
  return ok ? kYes : kNo;
}

int cmd_equiv(const Output& out, const std::string& a_text, const std::string& b_text) {
  const auto a = tsc::parse_formula(a_text);
  const auto b = tsc::parse_formula(b_text);
  const auto aw = tsc::val(a);
  const auto bw = tsc::val(b);
  const bool ok = aw == bw;
  const std::string word = ok ? "equivalent" : "not equivalent";
  json doc{{"status", word},
           {"mnf", tsc::render(tsc::mnf_of_world(aw))},
           {"world", world_json(aw)},
           {"detail", {{"other_mnf", tsc::render(tsc::mnf_of_world(bw))}, {"other_world", world_json(bw)}}}};
  emit(out, doc,
       out.status(word, ok) + "\n" + tsc::render(tsc::mnf_of_world(aw)) + "\n" + tsc::render(tsc::mnf_of_world(bw)) +
           "\n");
  return ok ? kYes : kNo;
}

int cmd_world(const Output& out, const std::string& text) {
  const auto x = tsc::val(tsc::parse_formula(text));
  emit(out, {{"status", "ok"}, {"world", world_json(x)}}, tsc::render(x) + "\n");
  return kYes;
}

int cmd_mnf_of_world(const Output& out, const std::string& text) {
  const auto x = tsc::parse_world(text);
  const auto m = tsc::mnf_of_world(x);
  emit(out, {{"status", "ok"}, {"mnf", tsc::render(m)}, {"world", world_json(x)}}, tsc::render(m) + "\n");
  return kYes;
}

int cmd_check_world(const Output& out, const std::string& text) {
  try {
    const auto x = tsc::parse_world(text);
    emit(out, {{"status", "valid"}, {"world", world_json(x)}}, out.status("valid", true) + " " + tsc::render(x) + "\n");
    return kYes;
  } catch (const tsc::WorldError& e) {
    emit(out, {{"status", "invalid"}, {"detail", {{"index", e.index()}, {"message", e.what()}}}},
         out.status("invalid", false) + " at index " + std::to_string(e.index()) + ": " + e.what() + "\n");
    return kNo;
  }
}

int cmd_mc(const Output& out, const std::string& world_text, const std::string& formula_text) {
  const auto x = tsc::parse_world(world_text);
  const auto f = tsc::parse_formula(formula_text);
  const auto threshold = tsc::val(f);
  const bool ok = tsc::pointwise_geq(x, threshold);
  const std::string word = ok ? "holds" : "fails";
  emit(out, {{"status", word}, {"world", world_json(x)}, {"detail", {{"threshold", world_json(threshold)}}}},
       out.status(word, ok) + "\nthreshold: " + tsc::render(threshold) + "\n");
  return ok ? kYes : kNo;
}

int cmd_steps(const Output& out, const std::string& x_text, std::size_t n, const std::string& alpha_text,
              const std::string& y_text) {
  const auto x = tsc::parse_world(x_text);
  const auto alpha = tsc::parse_ordinal(alpha_text);
  const auto y = tsc::parse_world(y_text);
  const bool ok = tsc::steps(x, n, alpha, y);
  const auto least = tsc::lift(y, n, alpha);
  const std::string word = ok ? "holds" : "fails";
  emit(out, {{"status", word}, {"world", world_json(x)}, {"detail", {{"least", world_json(least)}}}},
       out.status(word, ok) + "\nleast predecessor: " + tsc::render(least) + "\n");
  return ok ? kYes : kNo;
}

int cmd_fuzz(const Output& out, std::uint64_t seed, std::size_t count, const std::string& only, bool serial,
             bool mutate) {
  if (count == 0) {
    std::cerr << "tsc fuzz: --count must be at least 1\n";
    return kError;
  }
  tsc::fuzz::Options options;
  options.seed = seed;
  options.count = count;
  options.exec = serial ? tsc::Execution::Serial : tsc::Execution::Parallel;
  if (mutate) options.semantics = tsc::fuzz::corrupted_semantics();

  std::vector<tsc::fuzz::FamilyReport> reports;
  if (only.empty()) {
    reports = tsc::fuzz::run_all(options);
  } else {
    reports.push_back(tsc::fuzz::run_family(tsc::fuzz::family(only), options));
  }

  bool all_ok = true;
  json families = json::array();
  std::string text;
  for (const auto& r : reports) {
    all_ok = all_ok && r.ok();
    json entry{{"family", r.name}, {"passed", r.passed}, {"failed", r.failed}, {"vacuous", r.vacuous}};
    text += out.status(r.ok() ? "PASS" : "FAIL", r.ok()) + "  " + r.name + "  " + std::to_string(r.passed) + "/" +
            std::to_string(count);
    if (r.vacuous > 0) text += " (" + std::to_string(r.vacuous) + " vacuous)";
    text += "\n";
    if (!r.ok()) {
      entry["counterexample"] = r.counterexample;
      entry["instance"] = *r.first_failure;
      text += "      instance " + std::to_string(*r.first_failure) + ": " + r.counterexample + "\n";
    }
    families.push_back(entry);
  }
  emit(out, {{"status", all_ok ? "pass" : "fail"}, {"detail", {{"seed", seed}, {"count", count}, {"families", families}}}},
       text);
  return all_ok ? kYes : kNo;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Turing Schmerl Calculus: normal forms, decisions and the frame H"};
  app.require_subcommand(1);

  Output out;
  app.add_flag("--json", out.json, "Emit JSON instead of text");
  if (const char* c = std::getenv("TSC_COLOR")) out.color = std::string(c) == "1";

  std::string a, b, c, d;
  std::size_t n = 0;
  int code = kError;

  auto* normalize = app.add_subcommand("normalize", "Print the monomial normal form of a formula");
  normalize->add_option("formula", a)->required();
  normalize->callback([&] { code = cmd_normalize(out, a); });

  auto* decide = app.add_subcommand("decide", "Decide a sequent 'phi |- psi'");
  decide->add_option("sequent", a)->required();
  decide->callback([&] { code = cmd_decide(out, a); });

  auto* equiv = app.add_subcommand("equiv", "Decide whether two formulas are equivalent");
  equiv->add_option("left", a)->required();
  equiv->add_option("right", b)->required();
  equiv->callback([&] { code = cmd_equiv(out, a, b); });

  auto* world = app.add_subcommand("world", "Print the least world satisfying a formula");
  world->add_option("formula", a)->required();
  world->callback([&] { code = cmd_world(out, a); });

  auto* mow = app.add_subcommand("mnf-of-world", "Print the MNF defining a world");
  mow->add_option("world", a)->required();
  mow->callback([&] { code = cmd_mnf_of_world(out, a); });

  auto* check = app.add_subcommand("check-world", "Validate an l-sequence");
  check->add_option("world", a)->required();
  check->callback([&] { code = cmd_check_world(out, a); });

  auto* mc = app.add_subcommand("mc", "Model-check a formula at a world");
  mc->add_option("world", a)->required();
  mc->add_option("formula", b)->required();
  mc->callback([&] { code = cmd_mc(out, a, b); });

  auto* st = app.add_subcommand("steps", "Decide x S_n^alpha y");
  st->add_option("x", a)->required();
  st->add_option("n", n)->required();
  st->add_option("alpha", c)->required();
  st->add_option("y", d)->required();
  st->callback([&] { code = cmd_steps(out, a, n, c, d); });

  std::uint64_t seed = 1;
  std::size_t count = 100;
  std::string only;
  bool serial = false;
  bool mutate = false;
  auto* fuzz = app.add_subcommand("fuzz", "Run the randomized property families");
  fuzz->add_option("--seed", seed, "Random seed");
  fuzz->add_option("--count", count, "Instances per family");
  fuzz->add_option("--family", only, "Run a single family");
  fuzz->add_flag("--serial", serial, "Disable the OpenMP path");
  fuzz->add_flag("--mutate-lift", mutate, "Run against a lift that ignores its exponent (mutation test)");
  fuzz->callback([&] { code = cmd_fuzz(out, seed, count, only, serial, mutate); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kError;
  } catch (const tsc::ParseError& e) {
    std::cerr << "tsc: " << e.what() << '\n';
    return kError;
  } catch (const tsc::WorldError& e) {
    std::cerr << "tsc: invalid world at index " << e.index() << ": " << e.what() << '\n';
    return kError;
  } catch (const std::exception& e) {
    std::cerr << "tsc: " << e.what() << '\n';
    return kError;
  }
  return code;
}
