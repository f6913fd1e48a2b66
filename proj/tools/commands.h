#pragma once

#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "fct/configuration.h"

namespace fct::cli {

enum Exit { kPass = 0, kFail = 1, kInputError = 2, kBudget = 3 };

/// Conjunction of `field op value` terms separated by commas, e.g.
/// `ring<=11,internal>2` or `name=birkhoff`.
std::function<bool(const Configuration&)> parse_filter(const std::string& expr);

/// `5..11`, `7` or `5,7,9`.
std::vector<int> parse_degrees(const std::string& s);

/// `p/10` (or a bare integer in tenths).
int parse_tenths(const std::string& s);

int cmd_validate(const std::string& path, int degree, std::ostream& out, std::ostream& err);

struct ReduceArgs {
    std::string configs;
    int jobs = 1;
    std::string filter;
    std::string report;
    bool no_timing = false;
    int max_ring = 16;
    int max_rounds = 0;
    long max_millis = 0;
};
int cmd_reduce(const ReduceArgs& a, std::ostream& out, std::ostream& err);

struct DischargeArgs {
    std::string rules, configs, present;
    std::string degrees = "5..11";
    bool verbose = false;
    bool radius_warn = false;  // report configurations of radius > 2 instead of rejecting them
    int jobs = 1;
};
int cmd_discharge(const DischargeArgs& a, std::ostream& out, std::ostream& err);

struct OverchargeArgs {
    std::string rules, configs;
    std::string bound = "5/10";
    bool radius_warn = false;
};
int cmd_overcharge(const OverchargeArgs& a, std::ostream& out, std::ostream& err);

int cmd_stats(const std::string& configs, std::ostream& out, std::ostream& err);

/// Wraps a ring around a face of the graph (the longest one by default) and
/// checks the lifted colouring set against the consistency definition and
/// the fixed point.
int cmd_oracle_consistency(const std::string& graph, int face, std::ostream& out, std::ostream& err);

}  // namespace fct::cli
