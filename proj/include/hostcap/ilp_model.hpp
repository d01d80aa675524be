#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "hostcap/scenario.hpp"

namespace hostcap {

enum class RowKind {
    Capacity,      // sum_n nu*kappa[n,t] <= C_max - load[t]
    SwitchLower,   // kappa[n,t-1] - kappa[n,t] + alpha*omega[n,t] <= alpha - beta
    SwitchUpper,   // kappa[n,t] - kappa[n,t-1] - alpha*omega[n,t] <= 0
    SwitchInit,    // omega[n,0] = kappa[n,0]
    MinRunHead,    // kappa[n,0] - kappa[n,t] <= 0, t in [0, tau_min-1]
    MinRunBody,    // kappa[n,t] - kappa[n,t-1] - kappa[n,t+i] <= 0
    MinRunTail,    // kappa[n,t+1] - kappa[n,t] <= 0 near the end of day
    SwitchBudget,  // sum_t omega[n,t] <= S
    Demand         // sum_t nu*dt*kappa[n,t] >= D_n
};

const char* to_string(RowKind kind);

struct IlpTerm {
    int var = 0;
    double coeff = 0.0;
};

// sense: '<' for <=, '>' for >=, '=' for equality.
struct LinearRow {
    RowKind kind;
    int ev = -1;    // -1 when the row is not tied to one EV
    int slot = -1;  // -1 when the row is not tied to one slot
    char sense = '<';
    double rhs = 0.0;
    std::vector<IlpTerm> terms;
};

// Explicit integer-program description of a scenario: binary variables
// kappa and omega, a linear objective, linear rows, and availability
// fixings. The exact search consumes the same discretization; this form
// exists so the encoding itself can be inspected and checked row by row.
struct IlpModel {
    int num_evs = 0;
    int num_slots = 0;
    Eigen::ArrayXd objective;          // cost per variable, omegas are 0
    std::vector<LinearRow> rows;
    std::vector<int> fixed_zero_vars;  // kappa variables pinned to 0

    int num_vars() const { return 2 * num_evs * num_slots; }
    int kappa_var(int ev, int t) const { return ev * num_slots + t; }
    int omega_var(int ev, int t) const {
        return num_evs * num_slots + ev * num_slots + t;
    }
};

IlpModel build_ilp(const Scenario& scenario);

// Evaluates every row and fixing against a candidate assignment; returns
// one message per violated row. Tolerance kRelTol-scaled.
std::vector<std::string> check_against_model(const IlpModel& model,
                                             const Eigen::ArrayXXi& kappa,
                                             const Eigen::ArrayXXi& omega);

}  // namespace hostcap
