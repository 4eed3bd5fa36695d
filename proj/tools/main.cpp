#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>

#include "CLI11.hpp"
#include "checks.hpp"

#ifndef TITS_CORPUS_DIR
#define TITS_CORPUS_DIR "corpus"
#endif

using nlohmann::json;
using namespace tits;
using namespace tits::cli;

namespace {

const char* kVersion = "1.0.0";

struct Options {
  std::string scene;
  std::string json_out;
  bool timings = false;
  bool verbose = false;
  std::uint64_t seed = 1;
  int p_max = -1;
  int sample = 0;
  std::string corpus_dir = TITS_CORPUS_DIR;
};

void print_result(const CheckResult& r, bool verbose) {
  std::cout << r.name << ": " << verdict_name(r.verdict);
  if (r.hypotheses != "MET") std::cout << " (" << r.hypotheses << ")";
  std::cout << "\n";
  if (verbose) {
    std::cout << r.result.dump(2) << "\n";
    return;
  }
  for (const auto& [k, v] : r.result.items()) {
    if (v.is_object() && v.contains("summary"))
      std::cout << "  " << k << ": " << v["summary"].get<std::string>() << "\n";
    else if (!v.is_structured())
      std::cout << "  " << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
  }
}

int write_report(const Options& o, const json& report) {
  if (o.json_out.empty()) return 0;
  if (o.json_out == "-") {
    std::cout << report.dump(2) << "\n";
    return 0;
  }
  std::ofstream out(o.json_out);
  if (!out) {
    std::cerr << "cannot write " << o.json_out << "\n";
    return 1;
  }
  out << report.dump(2) << "\n";
  return 0;
}

json report_header(const std::string& command) {
  return {{"tool", "tits"}, {"version", kVersion}, {"command", command}};
}

int run_scene_command(const Options& o, const std::string& check) {
  json report = report_header(check);
  std::vector<CheckResult> results;
  try {
    Scene s = load_scene(o.scene);
    if (check == "resolution" && o.p_max >= 0) s.p_max = o.p_max;
    report["scene"] = s.name;
    report["scene_digest"] = scene_digest(s);
    results.push_back(run_check(s, check));
  } catch (const SceneError& e) {
    CheckResult r;
    r.name = check;
    r.verdict = Verdict::Invalid;
    r.hypotheses = "UNKNOWN";
    r.result = {{"diagnostic", e.what()}};
    results.push_back(r);
    std::cerr << "invalid scene: " << e.what() << "\n";
  }
  json checks = json::array();
  for (const auto& r : results) {
    print_result(r, o.verbose);
    checks.push_back(r.to_json(o.timings));
  }
  const int code = exit_code(results);
  report["checks"] = checks;
  report["overall"] = code == 0 ? "PASS" : verdict_name(results.back().verdict);
  if (write_report(o, report)) return 1;
  return code;
}

// Random admissible Euclidean plane arrangements, each checked for the
// apartment isomorphism and one facet exact sequence.
json sample_sweep(const Options& o, bool& ok) {
  std::mt19937_64 rng(o.seed);
  std::uniform_int_distribution<long> coef(-3, 3), count(3, 5);
  json out = json::array();
  int made = 0;
  for (int attempt = 0; made < o.sample && attempt < 50 * o.sample; ++attempt) {
    json scene{{"geometry", "E"}, {"n", 2}, {"hyperplanes", json::array()}};
    const long k = count(rng);
    for (long i = 0; i < k; ++i)
      scene["hyperplanes"].push_back(
          {std::to_string(coef(rng)), std::to_string(coef(rng)), std::to_string(coef(rng))});
    scene["options"] = {{"u", {std::to_string(coef(rng)), std::to_string(coef(rng)), std::to_string(coef(rng))}}};
    Scene s;
    try {
      s = parse_scene(scene);
      Collection l = scene_collection(s);
      if (admissible(l) != Admissibility::Admissible) continue;
      if (l.contains(LinearSubspace::kernel(3, {*s.u}))) continue;
    } catch (const std::exception&) {
      continue;
    }
    ++made;
    json entry{{"scene", scene}, {"scene_digest", scene_digest(s)}, {"checks", json::array()}};
    for (const char* c : {"verify solomon-tits", "verify exact-seq"}) {
      CheckResult r = run_check(s, c);
      if (r.verdict != Verdict::Pass) ok = false;
      entry["checks"].push_back(r.to_json(o.timings));
    }
    out.push_back(entry);
  }
  if (made < o.sample) ok = false;
  return out;
}

int run_corpus(const Options& o) {
  namespace fs = std::filesystem;
  json report = report_header("corpus");
  std::vector<fs::path> files;
  if (!fs::is_directory(o.corpus_dir)) {
    std::cerr << "no corpus directory " << o.corpus_dir << "\n";
    return 2;
  }
  for (const auto& e : fs::directory_iterator(o.corpus_dir))
    if (e.path().extension() == ".json") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  bool ok = true;
  json scenes = json::array();
  for (const auto& f : files) {
    json entry{{"file", f.filename().string()}};
    std::vector<std::string> mismatches;
    try {
      Scene s = load_scene(f.string());
      entry["scene"] = s.name;
      entry["scene_digest"] = scene_digest(s);
      json checks = json::array();
      for (const auto& c : s.checks) {
        CheckResult r = run_check(s, c);
        checks.push_back(r.to_json(o.timings));
        std::string m = s.expect.contains(c) ? expectation_mismatch(r, s.expect[c])
                                              : c + ": no declared expectation";
        if (!m.empty()) mismatches.push_back(m);
      }
      entry["checks"] = checks;
    } catch (const SceneError& e) {
      mismatches.push_back(std::string("invalid scene: ") + e.what());
    }
    entry["mismatches"] = mismatches;
    entry["verdict"] = mismatches.empty() ? "PASS" : "FAIL";
    std::cout << (mismatches.empty() ? "PASS " : "FAIL ") << f.filename().string() << "\n";
    for (const auto& m : mismatches) std::cout << "  " << m << "\n";
    ok = ok && mismatches.empty();
    scenes.push_back(entry);
  }
  report["scenes"] = scenes;
  if (o.sample > 0) {
    bool sample_ok = true;
    report["seed"] = o.seed;
    report["samples"] = sample_sweep(o, sample_ok);
    std::cout << (sample_ok ? "PASS " : "FAIL ") << "random sample of " << o.sample << " (seed " << o.seed << ")\n";
    ok = ok && sample_ok;
  }
  report["overall"] = ok ? "PASS" : "FAIL";
  if (write_report(o, report)) return 1;
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact homology and polytope-group checks for finite flat collections"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--json", o.json_out, "Write the JSON report to this file ('-' for stdout)");
  app.add_flag("--timings", o.timings, "Include wall-clock timings in the report");
  app.add_flag("-v,--verbose", o.verbose, "Print full results");
  app.add_option("--seed", o.seed, "Seed for randomized sampling");

  std::string which;
  auto scene_arg = [&](CLI::App* c) { c->add_option("scene", o.scene, "Scene JSON file")->required(); };

  auto* validate = app.add_subcommand("validate", "Parse and validate a scene");
  scene_arg(validate);
  auto* closure = app.add_subcommand("closure", "List the members of the collection");
  scene_arg(closure);
  auto* arrangement = app.add_subcommand("arrangement", "Cell census of the arrangement");
  scene_arg(arrangement);
  auto* hom = app.add_subcommand("homology", "Homology of t, st, pt or local complexes");
  hom->add_option("complex", which, "t|st|pt|local")->required()->check(CLI::IsMember({"t", "st", "pt", "local"}));
  scene_arg(hom);
  auto* verify = app.add_subcommand("verify", "Theorem checks");
  verify->add_option("claim", which, "solomon-tits|pt-ls|exact-seq|duality|suspension|local")
      ->required()
      ->check(CLI::IsMember({"solomon-tits", "pt-ls", "exact-seq", "duality", "suspension", "local"}));
  scene_arg(verify);
  auto* groups = app.add_subcommand("groups", "Presentations of the polytope and tuple groups");
  groups->add_option("group", which, "pt|ls")->required()->check(CLI::IsMember({"pt", "ls"}));
  scene_arg(groups);
  auto* resolution = app.add_subcommand("resolution", "Homology of the semi-simplicial polytope resolution");
  scene_arg(resolution);
  resolution->add_option("--p-max", o.p_max, "Highest level to build");
  auto* corpus = app.add_subcommand("corpus", "Run the bundled scenario suite");
  corpus->add_option("dir", o.corpus_dir, "Corpus directory");
  corpus->add_option("--sample", o.sample, "Also check this many random plane arrangements");

  CLI11_PARSE(app, argc, argv);

  if (corpus->parsed()) return run_corpus(o);
  if (validate->parsed()) return run_scene_command(o, "validate");
  if (closure->parsed()) return run_scene_command(o, "closure");
  if (arrangement->parsed()) return run_scene_command(o, "arrangement");
  if (hom->parsed()) return run_scene_command(o, "homology " + which);
  if (verify->parsed()) return run_scene_command(o, "verify " + which);
  if (groups->parsed()) return run_scene_command(o, "groups " + which);
  if (resolution->parsed()) return run_scene_command(o, "resolution");
  return 2;
}
