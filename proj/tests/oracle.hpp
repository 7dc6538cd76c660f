#pragma once

// Brute-force reference implementations of the twelve metrics, written as
// literal transcriptions of their defining formulas over a dense adjacency
// matrix. Independent of the production kernels: no shared aggregate code,
// no factorized null terms. Test-only; O(|V|^2) and worse by design.

#include <vector>

#include <ovq/belonging.hpp>
#include <ovq/cover.hpp>
#include <ovq/graph.hpp>
#include <ovq/report.hpp>

namespace oracle {

struct Dense {
    int n = 0;
    std::vector<std::vector<double>> a;     ///< adjacency matrix
    std::vector<std::vector<double>> coef;  ///< coef[c][i] = a_{i,c}, 0 for non-members
    std::vector<std::vector<int>> members;  ///< node lists per community
    std::vector<double> degree;
    double m = 0.0;
};

Dense densify(const ovq::Graph& g, const ovq::Cover& cover);

double e_in(const Dense& d, const ovq::BelongingConfig& cfg, int c);
double e_out(const Dense& d, const ovq::BelongingConfig& cfg, int c);
double e_between(const Dense& d, const ovq::BelongingConfig& cfg, int c, int c2);

double q_ov(const Dense& d, const ovq::BelongingConfig& cfg);
double q_ov_prime(const Dense& d, const ovq::BelongingConfig& cfg);
double q_ov_link(const Dense& d, double p);
double nq_ov(const Dense& d, const ovq::BelongingConfig& cfg);
double q_ds_ov(const Dense& d, const ovq::BelongingConfig& cfg);

/// All twelve metrics in report order.
ovq::MetricReport report(const ovq::Graph& g, const ovq::Cover& cover,
                         const ovq::BelongingConfig& cfg);

} // namespace oracle
