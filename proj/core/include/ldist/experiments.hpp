#pragma once

#include <ldist/bounds.hpp>
#include <ldist/quadrature.hpp>

#include <array>
#include <string>
#include <vector>

namespace ldist {

// One verified quantity of an experiment. mode selects the comparison:
//   "rel"  |computed - expected| <= tolerance * |expected|
//   "abs"  |computed - expected| <= tolerance
//   "le"   computed <= expected + tolerance
//   "ge"   computed >= expected - tolerance
//   "true" computed != 0 (a boolean condition)
struct CheckRow {
    std::string name;
    double computed = 0.0;
    double expected = 0.0;
    double tolerance = 0.0;
    std::string mode = "abs";
    std::string origin; // where the target comes from: closed form, table, oracle
    bool pass = false;
};

CheckRow make_check(std::string name, double computed, double expected, double tolerance,
                    std::string mode, std::string origin);

struct ExperimentReport {
    std::string id;
    std::vector<std::pair<std::string, std::string>> inputs;
    std::vector<CheckRow> checks;
    std::string note;
    double wall_time_seconds = 0.0;

    bool passed() const;
};

// Reference values of the nine-row bounds table: p, the reported minimizer
// q, the reported minimum, and the two-decimal lower endpoint.
struct TableReferenceRow {
    double p;
    double q;
    double m;
    double lower;
};
const std::array<TableReferenceRow, 9>& table1_reference();

// Recomputes the table: q* within 0.05, minimum within 0.5% relative, lower
// endpoint matching after truncation to two decimals.
std::pair<std::vector<BoundRow>, ExperimentReport> reproduce_table1();

// Quadrature lengths of kp over the diameter and the semicircle against the
// closed forms, the ratio against the lower bound, and the ratio against the
// minimized distortion bound when p is in its domain.
ExperimentReport verify_extremal(double p, double rel_tol = 1e-8);

// The counterexample: upper-semicircle image length 1, truncated diameter
// lengths 2/eps - 1 diverging monotonically, and their ratio dwarfing every
// table minimum.
ExperimentReport f0_divergence();

// The straightening map T = g^{-1} o g1: sends the geodesic through alpha1
// onto the vertical diameter, the complementary boundary arc onto the left
// semicircle, the threshold pole to sqrt(2)-1, and p1 to reduced_pole(p1).
ExperimentReport theorem2_reduction(Complex alpha1, double p1);

// Rotation sector: the intersection of |z| = p with the critical geodesic
// carrier, and inside/outside classification of the rotated pole.
ExperimentReport corollary_sector(double p, double theta);

// Small-pole probe for p in (0, sqrt(2)-1]: numeric length ratios of kp
// (lower-bound evidence only; no upper bound is claimed).
ExperimentReport conjecture_probe(const std::vector<double>& p_list);

} // namespace ldist
