#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "etmod/report.hpp"

using namespace etmod;

namespace {

FieldSpec parse_field(const std::string& text, std::uint64_t p) {
  if (text == "closed") return FieldSpec::closed(p);
  try {
    std::uint64_t q = std::stoull(text);
    return FieldSpec::finite(p, q);
  } catch (const std::exception&) {
    fail(ErrorKind::BadFieldSpec,
         "field must be 'closed' or a prime power integer");
  }
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) fail(ErrorKind::ParseError, "cannot write " + path);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"p-local analysis of finite permutation groups: fundamental "
               "group of the orbit category, K(G), weak S-homomorphisms and "
               "metacyclic Sylow structure"};
  app.require_subcommand(1);

  std::string group_path, out_path, field_text = "closed", suite = "default";
  std::uint64_t prime = 0;
  std::uint64_t mp = 3;
  unsigned mm = 1, mn = 1, ml = 1;
  int mq = -1;

  auto* analyze_cmd = app.add_subcommand("analyze", "analyze one group file");
  analyze_cmd->add_option("--group", group_path, "group file (JSON)")
      ->required();
  analyze_cmd->add_option("--prime", prime, "the prime p")->required();
  analyze_cmd->add_option("--field", field_text,
                          "'closed' or a prime power q for F_q");
  analyze_cmd->add_option("--out", out_path, "output path (default stdout)");

  auto* battery_cmd = app.add_subcommand("battery", "run a built-in suite");
  battery_cmd->add_option("--suite", suite, "default | metacyclic-grid");
  battery_cmd->add_option("--out", out_path, "output path (default stdout)");

  auto* mc_cmd =
      app.add_subcommand("metacyclic", "emit a metacyclic group file");
  mc_cmd->add_option("--p", mp, "odd prime")->required();
  mc_cmd->add_option("--m", mm, "x has order p^m")->required();
  mc_cmd->add_option("--n", mn, "y maps onto a quotient of order p^n")
      ->required();
  mc_cmd->add_option("--l", ml, "conjugation exponent 1 + p^l")->required();
  mc_cmd->add_option("--q", mq, "power relation y^(p^n) = x^(p^q); default m");
  mc_cmd->add_option("--out", out_path, "output path (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze_cmd->parsed()) {
      FiniteGroup G = load_group(group_path);
      AnalysisOptions opts;
      opts.field = parse_field(field_text, prime);
      AnalysisReport rep = analyze(G, prime, opts);
      write_output(out_path, rep.doc.dump(2) + "\n");
      return rep.mismatch ? 2 : 0;
    }
    if (battery_cmd->parsed()) {
      FieldSpec field = FieldSpec::closed(2);  // characteristic set per item
      BatteryResult res = run_battery(suite, field);
      for (const BatteryItem& item : res.items)
        std::cerr << (item.ok ? "PASS " : "FAIL ") << item.name
                  << (item.error.empty() ? "" : ": " + item.error) << "\n";
      Json doc;
      doc["suite"] = suite;
      doc["all_ok"] = res.all_ok;
      doc["matrix"] = res.matrix;
      write_output(out_path, doc.dump(2) + "\n");
      if (res.any_mismatch) return 2;
      return res.all_ok ? 0 : 1;
    }
    if (mc_cmd->parsed()) {
      MetacyclicParams P{mp, mm, mn, ml, mq < 0 ? mm : static_cast<unsigned>(mq)};
      MetacyclicGroup M = construct_metacyclic(P);
      write_output(out_path, emit_group(M.group));
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error [" << error_kind_name(e.kind()) << "]: " << e.what()
              << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
