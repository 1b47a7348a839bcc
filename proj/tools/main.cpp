#include "commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace folia;
using namespace folia::cli;

namespace {

struct Global {
  Options opts;
  bool json = false;
  bool pretty = false;
  std::string out;
};

int emit(const CommandResult& r, const Global& g) {
  if (g.pretty) {
    std::cout << r.json.dump(2) << "\n";
  } else if (g.json) {
    std::cout << r.json.dump() << "\n";
  } else {
    (r.exit_code == kOk ? std::cout : std::cerr) << r.text;
  }
  if (!g.out.empty()) {
    std::ofstream f(g.out, std::ios::binary);
    if (!f) {
      std::cerr << "error: cannot write " << g.out << "\n";
      return kIoError;
    }
    f << r.json.dump(2) << "\n";
  }
  return r.exit_code;
}

CommandResult with_file(const std::string& path, CommandResult (*cmd)(const Json&, const Options&),
                        const Options& opts) {
  return guarded([&] { return cmd(io::read_file(path), opts); });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with codimension-one polynomial foliations"};
  app.require_subcommand(1);
  app.fallthrough();
  Global g;
  app.add_option("--seed", g.opts.seed, "Seed for random lines and shears")->capture_default_str();
  app.add_option("--max-depth", g.opts.max_depth, "Reduction depth guard")->capture_default_str();
  app.add_flag("--json", g.json, "Print compact JSON instead of text");
  app.add_flag("--pretty", g.pretty, "Print indented JSON instead of text");
  app.add_option("--out", g.out, "Write the JSON result to this file (corpus: output directory)");

  std::string input;
  std::string second;
  struct Simple {
    const char* name;
    const char* help;
    CommandResult (*cmd)(const Json&, const Options&);
  };
  const Simple simple[] = {
      {"check", "Validate a foliation, logarithmic form or corpus entry", cmd_check},
      {"degree", "Compare the homogeneous degree with the tangency count", cmd_degree},
      {"singular", "Rational singular points of a foliation of P^2", cmd_singular},
      {"bb", "Baum-Bott indices and their sum for a foliation of P^2", cmd_bb},
      {"reduce", "Reduce a plane germ by blow-ups", cmd_reduce},
      {"riccati", "Riccati equation to sl(2) triple, Maurer-Cartan check and unfolding", cmd_riccati},
      {"catalog", "Realize a simple-singularity normal form", cmd_catalog},
  };
  int code = kOk;
  for (const auto& s : simple) {
    auto* sub = app.add_subcommand(s.name, s.help);
    sub->add_option("input", input, "JSON input file")->required();
    sub->callback([&, cmd = s.cmd] { code = emit(with_file(input, cmd, g.opts), g); });
  }
  auto* pull = app.add_subcommand("pullback", "Pull a foliation back by a polynomial map");
  pull->add_option("map", input, "JSON map file")->required();
  pull->add_option("foliation", second, "JSON foliation file")->required();
  pull->callback([&] {
    code = emit(guarded([&] { return cmd_pullback(io::read_file(input), io::read_file(second), g.opts); }), g);
  });
  auto* corpus = app.add_subcommand("corpus", "Write the bundled corpus");
  corpus->callback([&] {
    if (g.out.empty()) {
      std::cerr << "error: corpus needs --out DIR\n";
      code = kValidation;
      return;
    }
    const auto r = guarded([&] {
      const auto files = write_corpus(g.out, g.opts);
      Json j;
      j["directory"] = g.out;
      j["files"] = files;
      return CommandResult{kOk, j, "wrote " + std::to_string(files.size()) + " entries to " + g.out + "\n"};
    });
    if (g.json || g.pretty) {
      std::cout << (g.pretty ? r.json.dump(2) : r.json.dump()) << "\n";
    } else {
      (r.exit_code == kOk ? std::cout : std::cerr) << r.text;
    }
    code = r.exit_code;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kValidation;
  }
  return code;
}
