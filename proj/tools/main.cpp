// SPDX-License-Identifier: Apache-2.0
#include "elab/cli.hpp"

int main(int argc, char** argv) { return elab::cli::main_entry(argc, argv); }
