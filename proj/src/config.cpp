#include "hurwitz/config.hpp"

#include <cmath>

namespace hurwitz {

long bits_for_digits(double digits) {
    return static_cast<long>(std::ceil(digits * std::log2(10.0)));
}

EvalConfig EvalConfig::for_digits(int digits) {
    if (digits < 1) throw DomainError("digits must be positive");
    EvalConfig cfg;
    const double internal = std::ceil(1.2 * digits) + 10.0;
    cfg.precision_bits = std::max(bits_for_digits(internal), MpReal::kMinBits);
    cfg.target_tol = MpReal::parse("1e-" + std::to_string(digits), cfg.precision_bits);
    return cfg;
}

int EvalConfig::digits() const {
    const double d = -target_tol.log2_abs() / std::log2(10.0);
    return std::max(1, static_cast<int>(std::lround(d)));
}

EvalConfig EvalConfig::with_precision(long bits) const {
    EvalConfig c = *this;
    c.precision_bits = bits;
    c.target_tol = target_tol.with_precision(bits);
    return c;
}

void EvalConfig::validate() const {
    if (precision_bits < MpReal::kMinBits) throw DomainError("precision_bits must be >= 64");
    if (max_terms < 1) throw DomainError("max_terms must be >= 1");
    if (quad_levels < 1) throw DomainError("quad_levels must be >= 1");
    if (target_tol.sign() <= 0) throw DomainError("target_tol must be positive");
}

void ShiftParameter::require_half_open_unit(const char* where) const {
    if (!in_half_open_unit()) throw DomainError(std::string(where) + ": shift a must lie in (0,1]");
}

void ShiftParameter::require_closed_unit(const char* where) const {
    if (!in_closed_unit()) throw DomainError(std::string(where) + ": shift a must lie in [0,1]");
}

std::string to_string(Method m) {
    switch (m) {
        case Method::Integral: return "integral";
        case Method::Continued: return "continued";
        case Method::ShiftedIntegral: return "shifted-integral";
        case Method::Series: return "series";
        case Method::ShiftedSeries: return "shifted-series";
        case Method::DirichletOracle: return "dirichlet-oracle";
        case Method::ClassicalIntegralOracle: return "classical-integral-oracle";
        case Method::BernoulliOracle: return "bernoulli-oracle";
    }
    return "unknown";
}

void attach_zeta(EvalResult& r, const ComplexPoint& s) {
    const MpComplex sm1 = s - 1L;
    if (sm1.is_zero()) {
        r.zeta.reset();
        r.zeta_err = MpReal(r.phi.precision());
        return;
    }
    r.zeta = r.phi / sm1;
    r.zeta_err = r.err_estimate / abs(sm1);
}

}  // namespace hurwitz
