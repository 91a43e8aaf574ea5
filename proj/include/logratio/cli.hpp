#pragma once

// Command-line surface: density CSV dumps with optional gnuplot scripts, the
// verification suite with a flat key/value report, half-plane/inequality/
// monotonicity scans, and the exact counterexample report.
//
// Exit codes everywhere: 0 success, 1 verification or runtime failure,
// 2 usage or argument-domain error.

#include <iosfwd>
#include <string>
#include <vector>

#include "logratio/densities.hpp"

namespace logratio {

struct CheckRecord {
    std::string name;
    double computed;
    double target;
    double residual;
    double tolerance;
    bool pass;
};

struct VerificationReport {
    std::vector<CheckRecord> checks;
    bool overall;  // conjunction of the pass flags
};

struct DensityArgs {
    std::string kind;  // sigma | omega | phi | tsigma
    double r = 0;
    double t_min = 0, t_max = 0;
    int n = 1000;
    std::string out_path;  // empty writes the CSV to the out stream
    bool gnuplot = false;  // also write <out_path>.gp splitting panels at knots
};

struct VerifyArgs {
    std::vector<double> r_list;  // empty uses the default list
    double tol = 1e-8;
    std::string suite = "all";   // or identities | representations | pick |
                                 // convolution | inequalities | reciprocity
    unsigned long long seed = 20260817ull;
    bool seed_free = false;     // skip randomized suites
    int grid = 200;             // half-plane scan grid is grid x grid
};

inline const std::vector<double> kDefaultRList = {0.1, 0.3, 0.5, 0.7, 0.9,
                                                  1.5, 2.5, 5.0, 10.0};

// t moved onto the nearest knot when within 1e-12 relative, else unchanged.
double snap_to_knots(const DensitySpec& spec, double t);

// Value cmd_density writes at abscissa t (after snapping): +inf at
// log-divergent knots (printed as the token `inf`), the defined limit 0 at
// zero-limit knots, the plain density everywhere else.
double csv_density_value(const DensitySpec& spec, double t);

VerificationReport run_verification(const VerifyArgs& args);

int cmd_density(const DensityArgs& args, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err);
int cmd_counterexample(std::ostream& out, std::ostream& err);

// Parses argv and dispatches; the entry point of the logratio binary.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace logratio
