// Command-line frontend: graded invariants of colored positive rational
// tangles and 2-bridge links.  Verbs: poincare, homfly, stable, alexander,
// validate, selftest.
#include "twistfold/qsymbols.h"
#include "twistfold/tangle.h"

#include <CLI11.hpp>

#include <cstdio>

int main(int argc, char** argv) {
  CLI::App app{"graded invariants of colored positive rational tangles"};
  app.require_subcommand(1);
  // Verb handlers are registered as the corresponding modules land.
  CLI11_PARSE(app, argc, argv);
  std::fputs("no verb implemented yet\n", stderr);
  return 2;
}
