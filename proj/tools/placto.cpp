// placto: command-line front end for the plactic and shifted plactic toolkit.
#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "placto/io.hpp"

namespace {

using placto::io::json;

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

class Emitter {
 public:
  explicit Emitter(const std::string& path) {
    if (!path.empty()) {
      file_.emplace(path);
      if (!*file_) throw placto::Error("cannot open " + path + " for writing");
    }
  }
  void operator()(const json& j) {
    const auto line = j.dump();
    std::cout << line << '\n';
    if (file_) *file_ << line << '\n';
  }

 private:
  std::optional<std::ofstream> file_;
};

json summary(const std::string& command, int total, int failed) {
  return {{"kind", "summary"}, {"command", command}, {"total", total}, {"failed", failed}, {"passed", failed == 0}};
}

int run_tables(const std::string& family, const std::string& pattern, Emitter& emit) {
  using namespace placto::verify;
  std::vector<TableFamily> families;
  if (family.empty()) {
    families = {TableFamily::Unshifted1, TableFamily::Unshifted2x1, TableFamily::Shifted2, TableFamily::Unshifted3x1,
                TableFamily::Bcc};
  } else {
    families = {parse_family(family)};
  }
  int total = 0, failed = 0;
  for (auto f : families) {
    for (const auto& c : verify_tables(f, pattern)) {
      emit(placto::io::to_json(c));
      ++total;
      failed += c.passed() ? 0 : 1;
    }
  }
  emit(summary("tables", total, failed));
  return failed == 0 ? 0 : kExitFailure;
}

int run_cases(const placto::RelationSet& rels, Emitter& emit) {
  const auto reports = placto::verify::verify_case_analysis(rels);
  int failed = 0;
  for (const auto& r : reports) {
    emit(placto::io::to_json(r));
    failed += r.passed() ? 0 : 1;
  }
  const bool regenerated = placto::verify::regenerates_presentation(reports, rels);
  auto s = summary("cases", static_cast<int>(reports.size()), failed);
  s["regenerates_presentation"] = regenerated;
  s["passed"] = failed == 0 && regenerated;
  emit(s);
  return s["passed"].get<bool>() ? 0 : kExitFailure;
}

int run_axioms(const std::string& system, const placto::RelationSet& rels, int n, int degree, Emitter& emit) {
  using placto::verify::AxiomSystem;
  AxiomSystem sys;
  if (system == "plactic") {
    sys = AxiomSystem::Plactic;
  } else if (system == "shifted-plactic") {
    sys = AxiomSystem::ShiftedPlactic;
  } else {
    throw CLI::ValidationError("--system", "expected plactic or shifted-plactic");
  }
  int total = 0, failed = 0;
  for (const auto& r : placto::verify::verify_axioms(sys, rels, n, degree)) {
    emit(placto::io::to_json(r));
    if (r.informational) continue;
    ++total;
    failed += r.passed() ? 0 : 1;
  }
  emit(summary("axioms", total, failed));
  return failed == 0 ? 0 : kExitFailure;
}

int run_replacements(int n, int degree, Emitter& emit) {
  int failed = 0;
  const auto checks = placto::verify::verify_replacements(n, degree);
  for (const auto& c : checks) {
    emit(placto::io::to_json(c));
    failed += c.passed ? 0 : 1;
  }
  emit(summary("section5", static_cast<int>(checks.size()), failed));
  return failed == 0 ? 0 : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Plactic and shifted plactic monoids: insertion, classes, free Schur functions, verification"};
  app.require_subcommand(1);

  // verify
  auto* verify = app.add_subcommand("verify", "Re-derive tables, case analyses, axioms and replacement checks");
  std::string target;
  int n = 0, degree = 0;
  std::string relations, json_path, family, pattern, system;
  verify->add_option("target", target, "tables | cases | axioms | section5")
      ->required()
      ->check(CLI::IsMember({"tables", "cases", "axioms", "section5"}));
  verify->add_option("--n", n, "Alphabet size")->check(CLI::Range(1, 9));
  verify->add_option("--degree", degree, "Degree bound")->check(CLI::Range(1, 12));
  verify->add_option("--relations", relations, "knuth | shifted-knuth | free | custom:<file>");
  verify->add_option("--system", system, "Axiom system for 'axioms': plactic | shifted-plactic");
  verify->add_option("--family", family, "Table family for 'tables'");
  verify->add_option("--pattern", pattern, "Content pattern for 'tables', e.g. aacd");
  verify->add_option("--json", json_path, "Also write the JSON lines to this file");

  // insert
  auto* insert = app.add_subcommand("insert", "Insertion tableau of a word");
  std::string mode = "plactic", word_text;
  insert->add_option("--mode", mode, "plactic | mixed")->check(CLI::IsMember({"plactic", "mixed"}));
  insert->add_option("--n", n, "Alphabet size (default: largest letter)");
  insert->add_option("word", word_text, "Word, e.g. 3142 or 10,2,7")->required();

  // class
  auto* cls = app.add_subcommand("class", "Congruence class of a word");
  cls->add_option("--relations", relations, "knuth | shifted-knuth | free | custom:<file>")->required();
  cls->add_option("--n", n, "Alphabet size (default: largest letter)");
  cls->add_option("word", word_text, "Word")->required();

  // schur
  auto* schur = app.add_subcommand("schur", "Free Schur function as a polynomial");
  std::string shape;
  bool shifted = false;
  schur->add_option("--shape", shape, "Partition, e.g. 2,1")->required();
  schur->add_flag("--shifted", shifted, "Shifted free Schur function of a strict partition");
  schur->add_option("--n", n, "Alphabet size")->required()->check(CLI::Range(1, 9));

  // lr
  auto* lr = app.add_subcommand("lr", "Expand a plactic product of free Schur functions");
  std::string nu_text, mu_text;
  lr->add_option("--nu", nu_text, "Partition")->required();
  lr->add_option("--mu", mu_text, "Partition")->required();
  lr->add_option("--n", n, "Alphabet size")->required()->check(CLI::Range(1, 9));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*verify) {
      Emitter emit(json_path);
      if (target == "tables") return run_tables(family, pattern, emit);
      if (target == "cases") {
        return run_cases(placto::RelationSet::by_name(relations.empty() ? "knuth" : relations), emit);
      }
      if (target == "axioms") {
        if (system.empty()) system = relations == "shifted-knuth" ? "shifted-plactic" : "plactic";
        if (relations.empty()) relations = system == "plactic" ? "knuth" : "shifted-knuth";
        return run_axioms(system, placto::RelationSet::by_name(relations), n ? n : 3, degree ? degree : 5, emit);
      }
      return run_replacements(n ? n : 4, degree ? degree : 4, emit);
    }
    if (*insert) {
      const auto w = n ? placto::Word::parse(word_text, n) : placto::Word::parse(word_text);
      json out{{"word", w.str()}, {"mode", mode}};
      if (mode == "plactic") {
        const auto t = placto::p_tableau(w);
        out["tableau"] = placto::io::to_json(t);
        out["reading_word"] = placto::reading_word(t, w.alphabet_size()).str();
      } else {
        out["tableau"] = placto::io::to_json(placto::mixed_insert_word(w));
        // Canonical word of the shifted class: its unique hook-factorized member.
        const auto cls_members = placto::equiv_class(w, placto::RelationSet::shifted_knuth());
        for (const auto& m : cls_members.members) {
          const auto& parts = out["tableau"]["shape"];
          placto::StrictPartition nu(parts.get<std::vector<int>>());
          if (placto::hook_factorization_check(m, nu)) out["hook_word"] = m.str();
        }
      }
      std::cout << out.dump() << '\n';
      return 0;
    }
    if (*cls) {
      const auto rels = placto::RelationSet::by_name(relations);
      const auto w = n ? placto::Word::parse(word_text, n) : placto::Word::parse(word_text);
      std::cout << placto::io::class_json(w, rels, placto::equiv_class(w, rels)).dump() << '\n';
      return 0;
    }
    if (*schur) {
      placto::NcPoly p(placto::Context{n, 0});
      if (shifted) {
        const auto nu = placto::StrictPartition::parse(shape);
        p = placto::shifted_free_schur(nu, n, nu.size());
      } else {
        const auto nu = placto::Partition::parse(shape);
        p = placto::free_schur(nu, n, nu.size());
      }
      std::cout << placto::io::to_json(p).dump() << '\n';
      return 0;
    }
    if (*lr) {
      const auto nu = placto::Partition::parse(nu_text);
      const auto mu = placto::Partition::parse(mu_text);
      std::cout << placto::io::lr_json(nu, mu, placto::lr_expand(nu, mu, n)).dump() << '\n';
      return 0;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const placto::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
