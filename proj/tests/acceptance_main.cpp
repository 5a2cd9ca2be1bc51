// Acceptance suite runner: exercises every acceptance criterion at its stated
// tolerance against the default configuration and prints one
// PASS/FAIL line per criterion. Exit status is the number of failed criteria.
#include <iostream>

#include "riscov/validate.hpp"

int main() {
    const riscov::cli::RunConfig base = riscov::cli::default_config();
    const int failed = riscov::cli::cmd_validate(base, std::cout);
    return failed;
}
