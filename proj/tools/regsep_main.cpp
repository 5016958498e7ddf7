#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "regsep/io.hpp"

using namespace regsep;

namespace {

// 0 separable/true, 1 inseparable/false, 2 budget exceeded, 3 input error,
// 4 not disjoint from the Dyck language (cover only).
constexpr int kExitSeparable = 0;
constexpr int kExitInseparable = 1;
constexpr int kExitBudget = 2;
constexpr int kExitInput = 3;
constexpr int kExitNotDisjoint = 4;

long long km_budget_default() {
  if (const char* env = std::getenv("REGSEP_BUDGET_KM")) {
    try {
      return std::stoll(env);
    } catch (...) {
    }
  }
  return 50000;
}

void emit(const json& j, const std::string& out_path, bool as_text) {
  std::string payload = as_text ? j.dump(2) : j.dump();
  if (out_path.empty()) {
    std::cout << payload << "\n";
  } else {
    std::ofstream out(out_path);
    out << payload << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"regular separability of Buchi VASS languages from Dyck languages"};
  app.require_subcommand(1);

  long long km_budget = km_budget_default();
  long long profile_cap = 200000;
  bool as_json = false, as_text = false, verbose = false;
  std::string out_path;

  auto add_budget_opts = [&](CLI::App* cmd) {
    cmd->add_option("--km-budget", km_budget, "Karp-Miller tree node budget");
    cmd->add_option("--profile-cap", profile_cap, "profile candidate cap");
  };

  std::string file1, file2, word_text, set_text;

  CLI::App* cmd_decide = app.add_subcommand("decide", "decide regular separability of two instances");
  cmd_decide->add_option("file1", file1)->required();
  cmd_decide->add_option("file2", file2)->required();
  add_budget_opts(cmd_decide);
  cmd_decide->add_flag("--json", as_json, "compact JSON report (default)");
  cmd_decide->add_flag("--text", as_text, "indented report");
  cmd_decide->add_option("--out", out_path, "write the report to a file");

  CLI::App* cmd_km = app.add_subcommand("km", "dump the Karp-Miller graph of an instance");
  cmd_km->add_option("file1", file1)->required();
  cmd_km->add_option("--budget", km_budget, "Karp-Miller tree node budget");

  CLI::App* cmd_pump = app.add_subcommand("pump", "dump the pumpable product of an instance");
  cmd_pump->add_option("file1", file1)->required();
  add_budget_opts(cmd_pump);

  CLI::App* cmd_profiles =
      app.add_subcommand("profiles", "dump the profiles of the pumped Karp-Miller graph");
  cmd_profiles->add_option("file1", file1)->required();
  add_budget_opts(cmd_profiles);

  CLI::App* cmd_member = app.add_subcommand("member", "membership of an ultimately periodic word");
  cmd_member->add_option("file1", file1)->required();
  cmd_member->add_option("--word", word_text, "word as 'prefix @ period'")->required();
  cmd_member
      ->add_option("--set", set_text,
                   "lang | dyck | P:i:k | S:x1,..,xn:k (default lang)")
      ->default_val("lang");
  cmd_member->add_flag("--verbose", verbose, "print the evidence");
  add_budget_opts(cmd_member);

  CLI::App* cmd_cover =
      app.add_subcommand("cover", "basic-separator cover of a Buchi automaton (d = 0)");
  cmd_cover->add_option("file1", file1)->required();
  add_budget_opts(cmd_cover);
  cmd_cover->add_option("--out", out_path, "write the report to a file");

  CLI11_PARSE(app, argc, argv);

  DecideBudget budget;
  budget.km.max_tree_nodes = km_budget;
  budget.profile_cap = profile_cap;

  try {
    if (cmd_decide->parsed()) {
      BuchiVass v1 = load_instance(file1);
      BuchiVass v2 = load_instance(file2);
      auto t0 = std::chrono::steady_clock::now();
      auto [v, n] = reduce_to_dyck(v1, v2, budget.product);
      DecideTrace tr = decide_traced(v, budget);
      double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      if (!tr.verdict.separable) {
        // Re-verify the certificate and the flower before reporting.
        CycleData& cd = *tr.verdict.cycle_data;
        IneqSystem sys = build_system(tr.km, cd);
        RatVec y(tr.verdict.farkas_y.size());
        for (std::size_t i = 0; i < y.size(); ++i) y[i] = Rat(tr.verdict.farkas_y[i]);
        if (!verify_certificate(sys.a, sys.b, y) || !verify_flower(tr.km, *tr.verdict.flower)) {
          std::cerr << "internal error: inseparability evidence failed re-verification\n";
          return kExitInput;
        }
      }
      emit(report_to_json(tr, secs), out_path, as_text);
      return tr.verdict.separable ? kExitSeparable : kExitInseparable;
    }
    if (cmd_km->parsed()) {
      BuchiVass v = load_instance(file1);
      std::cout << km_dump(build_km(v, budget.km));
      return kExitSeparable;
    }
    if (cmd_pump->parsed()) {
      BuchiVass v = load_instance(file1);
      std::cout << pump_dump(build_pump(v, budget.km));
      return kExitSeparable;
    }
    if (cmd_profiles->parsed()) {
      BuchiVass v = load_instance(file1);
      PumpArtifacts pa = build_pump(v, budget.km);
      KarpMillerGraph km = build_km(pa.pump_v, budget.km);
      std::cout << profiles_dump(km, enumerate_profiles(km, budget.profile_cap));
      return kExitSeparable;
    }
    if (cmd_member->parsed()) {
      BuchiVass v = load_instance(file1);
      UPWord w = parse_upword(word_text, v.alphabet);
      MembershipReport rep;
      if (set_text == "lang") {
        OracleBudget ob;
        ob.km = budget.km;
        rep = member_lang(v, w, ob);
      } else if (set_text == "dyck") {
        if (!v.alphabet.is_dyck()) throw ParseError("dyck membership needs a Dyck alphabet");
        rep = member_dyck(w, v.alphabet.pairs());
      } else if (set_text.rfind("P:", 0) == 0) {
        auto c = set_text.find(':', 2);
        if (c == std::string::npos) throw ParseError("use P:i:k");
        rep = member_p(w, v.alphabet.pairs(), std::stoi(set_text.substr(2, c - 2)),
                       Int(set_text.substr(c + 1)));
      } else if (set_text.rfind("S:", 0) == 0) {
        auto c = set_text.find(':', 2);
        if (c == std::string::npos) throw ParseError("use S:x1,..,xn:k");
        IntVec x;
        std::string xs = set_text.substr(2, c - 2);
        std::size_t p = 0;
        while (p <= xs.size()) {
          auto comma = xs.find(',', p);
          if (comma == std::string::npos) comma = xs.size();
          x.push_back(Int(xs.substr(p, comma - p)));
          p = comma + 1;
        }
        rep = member_s(w, v.alphabet.pairs(), x, Int(set_text.substr(c + 1)));
      } else {
        throw ParseError("unknown set '" + set_text + "'");
      }
      if (verbose) std::cerr << rep.evidence << "\n";
      return rep.verdict ? kExitSeparable : kExitInseparable;
    }
    if (cmd_cover->parsed()) {
      BuchiVass a = load_instance(file1);
      try {
        auto cover = basic_separator_cover(a, budget);
        Verdict v;
        v.separable = true;
        v.cover = cover;
        emit(verdict_to_json(v), out_path, true);
        return kExitSeparable;
      } catch (const NotDisjointFromDyck& e) {
        std::cerr << e.what() << "\n";
        std::cerr << "witness: " << e.witness.to_string(a.alphabet) << "\n";
        return kExitNotDisjoint;
      }
    }
  } catch (const BudgetExceeded& e) {
    std::cerr << e.what() << "\n";
    return kExitBudget;
  } catch (const CapExceeded& e) {
    std::cerr << e.what() << "\n";
    return kExitBudget;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
