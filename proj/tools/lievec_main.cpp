// Command-line front end; talks to the core exclusively through the C API.
#include <lievec/lievec.h>

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

int defaultMaxDim() {
  const char *env = std::getenv("LIEVEC_MAX_DIM");
  if (!env || !*env)
    return 0; // library default
  return std::atoi(env);
}

std::string readFile(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw CLI::ValidationError("input", "cannot read file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

struct Owned {
  char *ptr = nullptr;
  ~Owned() { lievec_string_free(ptr); }
};

struct AlgebraHandle {
  lievec_algebra *ptr = nullptr;
  ~AlgebraHandle() { lievec_algebra_close(ptr); }
};

int fail(lievec_status status, const Owned &error) {
  std::cerr << "error (" << lievec_status_name(status)
            << "): " << (error.ptr ? error.ptr : "unknown") << "\n";
  return static_cast<int>(status);
}

int openAlgebra(const std::string &path, int maxDim, AlgebraHandle &handle) {
  Owned error;
  std::string text = readFile(path);
  lievec_status st =
      lievec_algebra_open(text.c_str(), maxDim, &handle.ptr, &error.ptr);
  if (st != LIEVEC_OK)
    return fail(st, error);
  return 0;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"exact analysis of solvable Lie algebras of vector fields"};
  app.require_subcommand(1);
  int maxDim = defaultMaxDim();
  app.add_option("--max-dim", maxDim,
                 "closure cap (overrides LIEVEC_MAX_DIM; 0 = default 64)");

  std::string file, kind = "nilradical", weights, varsCsv, mode = "nonpos";
  std::string path = "auto", strategy = "forms", density;
  long degree = 0;
  unsigned jetOrder = 0;
  std::uint64_t seed = 0;

  auto *parse = app.add_subcommand("parse", "echo canonical generator forms");
  parse->add_option("file", file)->required();

  auto *analyze = app.add_subcommand(
      "analyze", "closure report: dimension, solvable, nilpotent, transitive");
  analyze->add_option("file", file)->required();

  auto *series = app.add_subcommand("series", "series report as JSON");
  series->add_option("file", file)->required();
  series->add_option("--kind", kind, "derived | lcs | nilradical")
      ->check(CLI::IsMember({"derived", "lcs", "nilradical"}));

  auto *nilrad =
      app.add_subcommand("nilradical", "nilradical basis in canonical text");
  nilrad->add_option("file", file)->required();

  auto *grade = app.add_subcommand(
      "grade", "degree membership of the file's generators");
  grade->add_option("file", file)->required();
  grade->add_option("--weights", weights, "w1,...,wn");
  grade->add_option("--mode", mode, "nonpos | strictneg")
      ->check(CLI::IsMember({"nonpos", "strictneg"}));

  auto *enumCmd =
      app.add_subcommand("enum", "monomial generators of a graded component");
  enumCmd->add_option("--vars", varsCsv, "x,y,...")->required();
  enumCmd->add_option("--weights", weights, "w1,...,wn")->required();
  enumCmd->add_option("--degree", degree, "negative degree")->required();

  auto *normalize = app.add_subcommand(
      "normalize", "derive weights, build the chart, certify gradedness");
  normalize->add_option("file", file)->required();
  normalize->add_option("--jet-order", jetOrder, "0 = 2*(w(h)+1)");
  normalize->add_option("--path", path, "auto | nilpotent | solvable")
      ->check(CLI::IsMember({"auto", "nilpotent", "solvable"}));
  normalize->add_option("--strategy", strategy, "forms | flows")
      ->check(CLI::IsMember({"forms", "flows"}));

  auto *witness = app.add_subcommand(
      "witness", "Lie-conjecture witness (normalizes first when needed)");
  witness->add_option("file", file)->required();
  witness->add_option("--jet-order", jetOrder, "0 = 2*(w(h)+1)");

  auto *gen =
      app.add_subcommand("gen", "emit a random solvable algebra file");
  gen->add_option("--vars", varsCsv, "x,y,...")->required();
  gen->add_option("--weights", weights, "w1,...,wn")->required();
  gen->add_option("--seed", seed, "RNG seed")->required();
  gen->add_option("--density", density, "inclusion probability p/q");

  CLI11_PARSE(app, argc, argv);

  try {
    if (parse->parsed()) {
      Owned out, error;
      lievec_status st =
          lievec_parse(readFile(file).c_str(), &out.ptr, &error.ptr);
      if (st != LIEVEC_OK)
        return fail(st, error);
      std::cout << out.ptr;
      return 0;
    }
    if (enumCmd->parsed()) {
      Owned out, error;
      lievec_status st = lievec_enumerate(varsCsv.c_str(), weights.c_str(),
                                          degree, &out.ptr, &error.ptr);
      if (st != LIEVEC_OK)
        return fail(st, error);
      std::cout << out.ptr;
      return 0;
    }
    if (gen->parsed()) {
      Owned out, error;
      lievec_status st = lievec_generate(
          varsCsv.c_str(), weights.c_str(), seed,
          density.empty() ? nullptr : density.c_str(), maxDim, &out.ptr,
          &error.ptr);
      if (st != LIEVEC_OK)
        return fail(st, error);
      std::cout << out.ptr;
      return 0;
    }
    if (grade->parsed()) {
      Owned out, error;
      lievec_status st =
          lievec_grade(readFile(file).c_str(),
                       weights.empty() ? nullptr : weights.c_str(),
                       mode.c_str(), &out.ptr, &error.ptr);
      if (st != LIEVEC_OK)
        return fail(st, error);
      std::cout << out.ptr;
      return 0;
    }

    AlgebraHandle algebra;
    if (int rc = openAlgebra(file, maxDim, algebra))
      return rc;
    Owned out, error;
    if (analyze->parsed()) {
      lievec_status st = lievec_analyze(algebra.ptr, &out.ptr, &error.ptr);
      if (st != LIEVEC_OK)
        return fail(st, error);
      std::cout << out.ptr;
      return 0;
    }
    if (series->parsed()) {
      lievec_status st =
          lievec_series(algebra.ptr, kind.c_str(), &out.ptr, &error.ptr);
      if (st != LIEVEC_OK)
        return fail(st, error);
      std::cout << out.ptr;
      return 0;
    }
    if (nilrad->parsed()) {
      lievec_status st =
          lievec_nilradical(algebra.ptr, &out.ptr, &error.ptr);
      if (st != LIEVEC_OK)
        return fail(st, error);
      std::cout << out.ptr;
      return 0;
    }
    if (normalize->parsed()) {
      int certified = 0;
      lievec_status st =
          lievec_normalize(algebra.ptr, jetOrder, path.c_str(),
                           strategy.c_str(), &certified, &out.ptr,
                           &error.ptr);
      if (st != LIEVEC_OK)
        return fail(st, error);
      std::cout << out.ptr;
      return certified ? 0 : 4;
    }
    if (witness->parsed()) {
      int witnessed = 0;
      lievec_status st = lievec_witness(algebra.ptr, jetOrder, &witnessed,
                                        &out.ptr, &error.ptr);
      if (st != LIEVEC_OK)
        return fail(st, error);
      std::cout << out.ptr;
      return witnessed ? 0 : 4;
    }
  } catch (const CLI::Error &e) {
    return app.exit(e);
  }
  return 0;
}
