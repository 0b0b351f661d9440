#ifndef GPW_INEQUALITIES_HPP
#define GPW_INEQUALITIES_HPP

#include "gpw/graph.hpp"
#include "gpw/spectral.hpp"
#include "gpw/subset.hpp"

namespace gpw {

/// Default slack for inequality verification, scaled by (1 + rhs): both sides
/// are O(|f|), so a relative budget avoids false failures at scale.
inline constexpr double inequality_tol = 1e-9;

/// Evaluation record of one norm inequality
///   |f| over cl^n(S)  <=  A * sample_norm + B * smoothness_norm.
///
/// Three forms share this record:
///  - Iterated (level n): A = (prod (2 D_i / K_i + 1))^(1/2),
///    B = 2 (sum_j 1/K_j prod_{i>j} (2 D_i / K_i + 1))^(1/2), plain sample
///    norm over S, smoothness |L^(1/2) f|.
///  - Single (level 1, refined): per-vertex weights 2 d_0(u)/K_0 + 1 are
///    folded into sample_norm (A = 1 by convention, flagged by
///    per_vertex_weights); B = 2/sqrt(K_0).  Sharper than the iterated n=1
///    form because it keeps d_0(u) instead of D_0.
///  - Power (r = 2^l, requires cl^n(S) = V): A = 2r * A_n,
///    B = 2^(4r-3) * (sum_n)^(r/2) where sum_n is the sum under B_n above,
///    smoothness |L^(r/2) f|.  For r = 1 this is exactly (2*A_n, B_n).
struct PoincareReport {
    enum class Form { Single, Iterated, Power };

    Form form = Form::Iterated;
    int level = 0;   // n
    int power = 1;   // r
    bool global = false;           // cl^n(S) = V, so lhs is the full norm
    bool per_vertex_weights = false;
    double sample_coefficient = 0.0;     // A
    double smoothness_coefficient = 0.0; // B
    double lhs = 0.0;
    double sample_norm = 0.0;
    double smoothness_norm = 0.0;
    double rhs = 0.0;
    double slack = 0.0;  // rhs - lhs
    bool holds = false;
};

/// Level-n inequality with constants built from D_0..D_{n-1}, K_0..K_{n-1}.
/// The geometry must have been computed to depth n.
PoincareReport poincare_iterated(const Graph& g, const SubsetGeometry& geometry, int n,
                                 const Signal& f, double tol = inequality_tol);

/// Refined one-level form with per-vertex sample weights 2 d_0(u)/K_0 + 1.
PoincareReport poincare_single(const Graph& g, const SubsetGeometry& geometry,
                               const Signal& f, double tol = inequality_tol);

/// Bootstrapped form for r in {1, 2, 4, 8, ...}; requires the closure to
/// reach the whole vertex set (InvalidPower for other r, ClosureNotFull
/// otherwise).
PoincareReport poincare_power(const Graph& g, const SubsetGeometry& geometry, const Signal& f,
                              int r, double tol = inequality_tol);

/// Two-sided sample-norm equivalence for bandlimited signals:
///   sample_norm <= |f| <= (1-gamma)^{-1} A_n sample_norm,
///   gamma = 2 sqrt(omega * sum_n) < 1.
struct PlancherelPolyaReport {
    double omega = 0.0;
    double gamma = 0.0;
    int level = 0;                   // exhaustion level n used
    double sample_coefficient = 0.0; // A_n
    double lower = 0.0;              // sample norm over S
    double norm = 0.0;               // |f|
    double upper = 0.0;
    bool holds = false;
};

/// Requires f in PW_omega (NotBandlimited) and gamma < 1 (BandwidthTooLarge);
/// the geometry must reach the whole vertex set (ClosureNotFull).
PlancherelPolyaReport plancherel_polya(const Graph& g, const SubsetGeometry& geometry,
                                       Bandwidth omega, const Signal& f,
                                       const SpectralBasis& basis,
                                       double tol = inequality_tol);

/// |L^(1/2) f| = sqrt(<Lf, f>), computed matrix-free.
double half_power_norm(const Graph& g, const Signal& f);

/// Largest omega for which the one-level sampling theorem can certify the
/// set: K_0(S)/4, exclusive.  Requires cl(S) = V (ClosureNotFull); infinite
/// when S is the whole vertex set.
double max_certified_bandwidth(const SubsetGeometry& geometry);

} // namespace gpw

#endif // GPW_INEQUALITIES_HPP
