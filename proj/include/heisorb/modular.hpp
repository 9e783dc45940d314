#pragma once

#include "heisorb/qseries.hpp"

#include <complex>
#include <optional>
#include <string>
#include <vector>

namespace heisorb {

using Complex = std::complex<double>;

// q^(1/24) prod (1 - q^n), q = exp(2 pi i tau); stops once |q|^n < cutoff.
Complex eta(Complex tau, double cutoff = 1e-30);

struct GaussReport {
    int line = 0;  // 1: rank 3 untwisted, 2: 2-cycle, 3: 3-cycle
    std::string identity;
    Complex tau;
    Complex lhs, rhs;
    double rel_err = 0;
    std::optional<double> quadrature_rel_err;  // closed Gaussian value vs Simpson
    bool pass = false;
};

// tau must lie on the positive imaginary axis.
GaussReport check_gauss_identity(int line, Complex tau, double tol = 1e-9, bool quadrature = false);

// ch[M](it) in closed product form; the log version avoids overflow for small t.
double log_character(const ModuleId& id, double t);
double character_value(const ModuleId& id, double t);

struct QdimReport {
    ModuleId id;
    std::vector<double> t;
    std::vector<double> ratio;  // ch[M](it) / ch[orbifold](it)
    double slope = 0;           // least squares d log(ratio) / d log(t)
    double tail_slope = 0;      // same fit over the smaller half of the t values
    bool divergent = false;     // tail slope below -1/4
    bool tenfold_rule = false;  // ratio at the smallest t above 10x the ratio at the largest
    double limit = 0;           // ratio at the smallest t when not divergent
};

// t_list must be positive and strictly decreasing.
QdimReport qdim_estimate(const ModuleId& id, const std::vector<double>& t_list);

}  // namespace heisorb
