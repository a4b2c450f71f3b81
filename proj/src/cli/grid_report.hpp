#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cotlsa/scalar.hpp"

namespace cotlsa::cli {

/// Comma-separated items, each a rational or an inclusive range lo:hi[:step]
/// (step defaults to 1). Empty text gives an empty list. Results are sorted
/// and deduplicated.
std::vector<Scalar> parse_grid_values(std::string_view text);

struct GridAxes {
    std::vector<Scalar> alphas;
    std::vector<Scalar> betas;
    std::vector<Scalar> lambdas;
    bool has_alpha = false;
    bool has_beta = false;
    bool has_lambda = false;
};

/// "alpha=...;beta=..." or "lambda=..." merged into axes.
void parse_grid_spec(std::string_view text, GridAxes& axes);

/// One JSON line per (alpha, beta) point in (alpha, beta) order.
std::vector<std::string> family_report(unsigned n, const std::vector<Scalar>& alphas, const std::vector<Scalar>& betas,
                                       unsigned jobs);

/// One JSON line per lambda in ascending order.
std::vector<std::string> lambda_report(unsigned n, const std::vector<Scalar>& lambdas, unsigned jobs);

}  // namespace cotlsa::cli
