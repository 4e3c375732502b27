#pragma once

// Series representations built on the alternating sums S_n(s,a):
//   phi_series          sum_n S_n(s,a)   (1/(n+1) + (a-1)/n) = (s-1) zeta(s,a)
//   phi_shifted_series  sum_n S_n(s,a+1) (1/(n+1) + a/n)     = (s-1)(zeta(s,a) - a^-s)
// The shifted form is the first series at shift a+1, since
// zeta(s,a) - a^-s = zeta(s,a+1); it stays valid at a = 0.
//
// Terms decay like n^(-1-b) (log n)^(Re s - 1) for shift b, so the series
// converges slowly; N doubles from 64 up to cfg.max_terms until the tail
// estimate meets the target.

#include "hurwitz/config.hpp"
#include "hurwitz/sums.hpp"

namespace hurwitz {

/// B: weights of phi_series. F: weights of phi_shifted_series.
enum class SeriesVariant { B, F };

/// 1/(n+1) + (a-1)/n for B, 1/(n+1) + a/n for F.
MpReal series_weight(long n, const MpReal& a, SeriesVariant variant);

/// S_n(s,a) times the B weight, or S_n(s,a+1) times the F weight.
MpComplex series_term(long n, const ComplexPoint& s, const ShiftParameter& a, SeriesVariant variant,
                      const EvalConfig& cfg);

/// Partial sums of the series at each requested N (ascending), from one table.
std::vector<MpComplex> series_partial_sums(const ComplexPoint& s, const ShiftParameter& a, SeriesVariant variant,
                                           const std::vector<long>& checkpoints, const EvalConfig& cfg);

struct SeriesTail {
    MpReal rigorous;  // dominating bound, absent (0) for Re s <= 0
    MpReal fitted;    // C n^(-1-b) (log n)^(Re s - 1) fitted to the last terms
    bool has_rigorous = false;
};

/// Tail estimates after N terms of the series at shift b with weights
/// 1/(n+1) + (b-1)/n; `terms` holds the computed terms 1..N.
SeriesTail series_tail(const ComplexPoint& s, const MpReal& shift, const std::vector<MpComplex>& terms);

/// err_estimate = max(rigorous, fitted) + accumulated S_n errors. Re s <= 0
/// sets convergence_caveat and uses the fitted tail alone. When the target
/// is not met at cfg.max_terms, EvalAccuracyError carries the partial sum.
/// `cache` may be shared between calls.
EvalResult phi_series(const ComplexPoint& s, const ShiftParameter& a, const EvalConfig& cfg,
                      SnCache* cache = nullptr);
EvalResult phi_shifted_series(const ComplexPoint& s, const ShiftParameter& a, const EvalConfig& cfg,
                              SnCache* cache = nullptr);

}  // namespace hurwitz
