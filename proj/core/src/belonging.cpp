#include <ovq/belonging.hpp>

#include <cmath>

namespace ovq {

double logistic_g(double x, double p) {
    return 1.0 / (1.0 + std::exp(p - 2.0 * p * x));
}

double belonging_value(const BelongingConfig& cfg, double a, double b) {
    switch (cfg.fn) {
    case BelongingFn::Average:
        return 0.5 * (a + b);
    case BelongingFn::Product:
        return a * b;
    case BelongingFn::Logistic:
        return logistic_g(a, cfg.p) * logistic_g(b, cfg.p);
    }
    return 0.0;
}

std::optional<Scheme> scheme_from_name(std::string_view name) {
    if (name == "given")
        return Scheme::Given;
    if (name == "v1")
        return Scheme::V1;
    if (name == "v2")
        return Scheme::V2;
    return std::nullopt;
}

std::optional<BelongingFn> belonging_fn_from_name(std::string_view name) {
    if (name == "avg" || name == "average")
        return BelongingFn::Average;
    if (name == "prod" || name == "product")
        return BelongingFn::Product;
    if (name == "logistic")
        return BelongingFn::Logistic;
    return std::nullopt;
}

const char* scheme_name(Scheme s) {
    switch (s) {
    case Scheme::Given:
        return "given";
    case Scheme::V1:
        return "v1";
    case Scheme::V2:
        return "v2";
    }
    return "?";
}

const char* belonging_fn_name(BelongingFn f) {
    switch (f) {
    case BelongingFn::Average:
        return "avg";
    case BelongingFn::Product:
        return "prod";
    case BelongingFn::Logistic:
        return "logistic";
    }
    return "?";
}

} // namespace ovq
