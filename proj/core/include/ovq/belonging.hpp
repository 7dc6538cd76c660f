#pragma once

#include <optional>
#include <string_view>

namespace ovq {

/// How a crisp cover is turned into belonging coefficients. Given means the
/// coefficients arrive with the cover and are only validated.
enum class Scheme { Given, V1, V2 };

/// Pairwise belonging function f(a, b) used to weight node pairs.
enum class BelongingFn { Average, Product, Logistic };

struct BelongingConfig {
    Scheme scheme = Scheme::Given;
    BelongingFn fn = BelongingFn::Product;
    double p = 30.0; ///< steepness of the logistic scaling, must be > 0
};

/// Logistic squashing g(x) = 1 / (1 + exp(p - 2*p*x)). g(0.5) is exactly 0.5
/// and g(1) is within ~1e-13 of 1 at p = 30.
double logistic_g(double x, double p);

/// average -> (a+b)/2, product -> a*b, logistic -> g(a)*g(b).
/// Symmetric in (a, b) for all three choices.
double belonging_value(const BelongingConfig& cfg, double a, double b);

std::optional<Scheme> scheme_from_name(std::string_view name);
std::optional<BelongingFn> belonging_fn_from_name(std::string_view name);
const char* scheme_name(Scheme s);
const char* belonging_fn_name(BelongingFn f);

} // namespace ovq
