#pragma once

// Double-exponential quadrature on the half line (0, inf).
//
// The half line is split at t = 1. On (0, 1] the substitution t = e^-u turns
// endpoint behaviour t^(s-1) (and powers of log t) into exponential decay
// e^(-Re(s) u) on u in (0, inf); on [1, inf) we set t = 1 + x. Both pieces
// are then integrated with the transform x = exp(tau - e^-tau) / c, where c
// is the piece's decay rate, and the trapezoid rule in tau with step
// h = 2^-(L+1) at level L. Each level reuses the previous level's nodes.

#include "hurwitz/config.hpp"
#include "hurwitz/errors.hpp"
#include "hurwitz/mp.hpp"

#include <functional>
#include <span>
#include <vector>

namespace hurwitz {

/// Abscissa x(tau) and derivative x'(tau) of the transform, before scaling.
struct QuadNode {
    MpReal x;
    MpReal dx;
};

/// Precomputed node lists per level for one working precision.
class QuadratureRule {
public:
    QuadratureRule(long bits, int levels);

    long precision() const { return bits_; }
    int levels() const { return static_cast<int>(levels_.size()) - 1; }
    /// Nodes first introduced at `level`; level 0 holds the coarse grid.
    const std::vector<QuadNode>& level(int level) const { return levels_.at(static_cast<size_t>(level)); }
    /// Step size in tau at `level`.
    static double step(int level);

    /// Nodes of one level, without building a rule.
    static std::vector<QuadNode> make_level(long bits, int level);

private:
    long bits_;
    std::vector<std::vector<QuadNode>> levels_;
};

/// Where an integrand is sampled: t together with log t (exact on the
/// (0,1] piece, where log t = -u).
struct QuadPoint {
    const MpReal& t;
    const MpReal& log_t;
};

/// Integrand filling one or more outputs at a point.
using HalflineIntegrand = std::function<void(const QuadPoint&, std::span<MpComplex>)>;

/// Exponential decay rates of the integrand: |f(t)| ~ t^(origin_rate-1)
/// as t -> 0 and ~ e^(-tail_rate t) as t -> inf. Both must be positive.
struct HalflineHints {
    double origin_rate = 1.0;
    double tail_rate = 1.0;
};

struct QuadResult {
    std::vector<MpComplex> values;
    std::vector<MpReal> errors;  // absolute, per output
    long nodes = 0;
    int level = 0;
    bool converged = false;
};

/// Integrates every output of `f` over (0, inf). Convergence is declared at
/// level L >= 3 when |I_L - I_(L-1)| <= target_tol * |I_L| plus a rounding
/// floor, for each output. The reported error is max(|I_L - I_(L-1)|, floor),
/// where the floor is 2^-(bits-8) times the L1 norm of the rule sum.
QuadResult integrate_halfline(const HalflineIntegrand& f, int outputs, const HalflineHints& hints,
                              const EvalConfig& cfg, const QuadratureRule* rule = nullptr);

/// Thrown by quad_halfline when the levels run out.
class QuadratureAccuracyError : public AccuracyError {
public:
    QuadratureAccuracyError(const std::string& what, MpComplex best, MpReal err)
        : AccuracyError(what), best_(std::move(best)), err_(std::move(err)) {}
    const MpComplex& best_estimate() const { return best_; }
    const MpReal& error_estimate() const { return err_; }

private:
    MpComplex best_;
    MpReal err_;
};

struct QuadValue {
    MpComplex value;
    MpReal err;
    long nodes = 0;
};

/// Scalar convenience wrapper; throws QuadratureAccuracyError when the
/// configured levels do not reach the target.
QuadValue quad_halfline(const std::function<MpComplex(const QuadPoint&)>& f, const HalflineHints& hints,
                        const EvalConfig& cfg);

}  // namespace hurwitz
