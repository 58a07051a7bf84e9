#pragma once

#include "mvop/dualhahn.hpp"
#include "mvop/lie.hpp"

#include <string>

namespace mvop {

struct CommandResult {
    json out;         // carries "schema": 1
    bool ok = false;  // every oracle-backed check passed
    std::string csv;  // xi only
};

// Parallel width: MVOP_THREADS if set (>= 1), else the hardware concurrency.
int thread_cap();

CommandResult compute_polys_command(const WeightSpec& w, int nmax);
// suite: operators | laguerre | dualhahn | all. The dual Hahn family uses (N, nu) of w with c, d.
CommandResult verify_command(const WeightSpec& w, int nmax, const std::string& suite, const Q& c, const Q& d);
CommandResult xi_command(const WeightSpec& w, int nmax);
CommandResult lie_command(const RPoly& phi);
CommandResult dualhahn_command(const DHParams& p, int nmax);

// Exit code: 0 all checks pass, 1 a check failed, 2 bad arguments.
int run(int argc, char** argv);

}  // namespace mvop
