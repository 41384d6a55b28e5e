/*!
 * Copyright 2026 by ccboost Contributors
 * \file cli.h
 * \brief Command-line front end; exposed as a function for in-process tests.
 */
#ifndef CCBOOST_CLI_H_
#define CCBOOST_CLI_H_

#include <string>
#include <vector>

namespace ccboost {

/*!
 * \brief Run the CLI with argv-style arguments (program name excluded).
 *
 * Exit codes: 0 success, 1 usage error, 2 data error, 3 numeric failure.
 */
int run_cli(const std::vector<std::string>& args);

}  // namespace ccboost

#endif  // CCBOOST_CLI_H_
