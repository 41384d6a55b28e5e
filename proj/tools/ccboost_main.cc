/*!
 * Copyright 2026 by ccboost Contributors
 * \file ccboost_main.cc
 * \brief CLI entry point.
 */
#include <string>
#include <vector>

#include "ccboost/cli.h"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return ccboost::run_cli(args);
}
