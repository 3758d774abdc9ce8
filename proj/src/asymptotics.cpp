#include "whp/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "whp/appell.hpp"
#include "whp/core_quotient.hpp"
#include "whp/hermite.hpp"

namespace whp {

PsiPolynomial psi(const Partition& mu, const Partition& nu) {
    const long lm = static_cast<long>(mu.length());
    const long ln = static_cast<long>(nu.length());
    const long s = std::max(0L, ln - lm);
    const long sp = std::max(0L, lm - ln);
    const MayaDiagram m_mu = MayaDiagram::of(mu, s);
    const MayaDiagram m_nu = MayaDiagram::of(nu, sp);

    IntPoly result(Int(1));
    for (long m : m_mu.filled())
        for (long n = 0; n < m; ++n)
            if (!m_nu.is_filled(n)) result *= IntPoly({Int(2 * (m - n) - 1), Int(-2)});
    for (long n : m_nu.filled())
        for (long m = 0; m <= n; ++m)
            if (!m_mu.is_filled(m)) result *= IntPoly({Int(2 * (n - m) + 1), Int(2)});

    const Partition lambda0 = phi(mu, nu, 0);
    const long h = height_p(lambda0, Partition(), 2) + lambda0.size() / 2;
    if (h % 2) result = Int(-1) * result;
    return PsiPolynomial{mu, nu, std::move(result)};
}

namespace {

// r_{lambda,j}: the coefficient of y^{deg - j} in R_lambda.
Int remainder_coeff(const Partition& lambda, long j) {
    const HermiteFactorization f = remainder_polynomial(lambda);
    return f.remainder.coeff(f.remainder.degree() - j);
}

}  // namespace

RatPoly coeff_in_k(const Partition& mu, const Partition& nu, long j) {
    const long d = mu.size() + nu.size();
    if (j < 0 || j > d) throw std::invalid_argument("coeff_in_k: j out of range");

    std::vector<std::pair<Rat, Rat>> points;
    for (long k = 0; k <= j; ++k)
        points.emplace_back(Rat(k), Rat(remainder_coeff(phi(mu, nu, k), j)));
    RatPoly result = lagrange_interpolate(points);

    for (long k = j + 1; k <= j + 5; ++k)
        if (result.evaluate(Rat(k)) != Rat(remainder_coeff(phi(mu, nu, k), j)))
            throw std::logic_error("coeff_in_k: interpolation failed verification");

    Rat lead(0);
    Int two_j(1);
    for (long t = 0; t < j; ++t) two_j *= 2;
    for (long l = 0; l <= j; ++l) {
        Int term(Int(binomial(mu.size(), j - l)) * binomial(nu.size(), l));
        lead += Rat(l % 2 ? Int(-term) : term);
    }
    lead *= Rat(two_j);
    if (result.coeff(j) != lead)
        throw std::logic_error("coeff_in_k: top-degree coefficient mismatch");
    return result;
}

Rat asymptotic_error(const Partition& mu, const Partition& nu, long k) {
    if (k == 0) throw std::invalid_argument("asymptotic_error requires k != 0");
    const long d = mu.size() + nu.size();
    const RatPoly remainder = to_rational(remainder_polynomial(phi(mu, nu, k)).remainder);

    RatPoly scaled = remainder.scaled_argument(Rat(2 * k));
    Rat denom(1);
    for (long i = 0; i < d; ++i) denom *= Rat(2 * k);
    scaled = scaled.divided_by(denom);

    RatPoly target(Rat(1));
    const RatPoly x_plus = RatPoly::x() + RatPoly(Rat(1));
    const RatPoly x_minus = RatPoly::x() - RatPoly(Rat(1));
    for (long i = 0; i < mu.size(); ++i) target *= x_plus;
    for (long i = 0; i < nu.size(); ++i) target *= x_minus;

    const RatPoly diff = scaled - target;
    Rat max_abs(0);
    for (const Rat& c : diff.coeffs()) {
        Rat a = c < 0 ? Rat(-c) : c;
        if (a > max_abs) max_abs = a;
    }
    return max_abs;
}

std::vector<std::complex<double>> aberth_roots(const std::vector<double>& coeffs, double tol) {
    using C = std::complex<double>;
    const long deg = static_cast<long>(coeffs.size()) - 1;
    if (deg <= 0) return {};
    std::vector<double> deriv(deg);
    for (long i = 1; i <= deg; ++i) deriv[i - 1] = i * coeffs[i];
    auto eval = [](const std::vector<double>& c, C z) {
        C v(0);
        for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * z + *it;
        return v;
    };

    // Initial guesses on a circle of radius the Cauchy bound, with an
    // irrational angular offset so no guess sits on a symmetry axis.
    double bound = 0.0;
    for (long i = 0; i < deg; ++i) bound = std::max(bound, std::abs(coeffs[i] / coeffs[deg]));
    const double radius = 1.0 + bound;
    std::vector<C> roots(deg);
    for (long i = 0; i < deg; ++i) {
        double angle = 2.0 * std::numbers::pi * i / deg + 0.4;
        roots[i] = radius * C(std::cos(angle), std::sin(angle));
    }

    for (int round = 0; round < 200; ++round) {
        double max_step = 0.0;
        for (long i = 0; i < deg; ++i) {
            const C p = eval(coeffs, roots[i]);
            const C dp = eval(deriv, roots[i]);
            C ratio = p / dp;
            C repulsion(0);
            for (long j = 0; j < deg; ++j)
                if (j != i) repulsion += 1.0 / (roots[i] - roots[j]);
            const C step = ratio / (1.0 - ratio * repulsion);
            roots[i] -= step;
            max_step = std::max(max_step, std::abs(step));
        }
        if (max_step < tol * radius) break;
    }

    double scale = 0.0;
    for (double c : coeffs) scale = std::max(scale, std::abs(c));
    for (const C& r : roots)
        if (std::abs(eval(coeffs, r)) > tol * scale * std::pow(std::max(1.0, std::abs(r)), deg))
            throw std::runtime_error("aberth_roots: did not converge to the residual bound");
    return roots;
}

ZeroDataset zeros(const Partition& lambda, double tol, int p) {
    if (tol <= 0) throw std::invalid_argument("zeros: tol must be positive");
    ZeroDataset data;
    data.lambda = lambda;
    data.p = p;

    IntPoly remainder;
    if (p == 2) {
        const HermiteFactorization f = remainder_polynomial(lambda);
        data.origin_multiplicity = f.core_size;
        remainder = f.remainder;
    } else {
        const AppellFactorization f = factor_p(p, lambda);
        data.origin_multiplicity = f.core_size;
        remainder = f.remainder;
    }

    std::vector<double> coeffs;
    for (const Int& c : remainder.coeffs()) coeffs.push_back(c.get_d());
    std::vector<std::complex<double>> y_roots = aberth_roots(coeffs, tol);

    for (const auto& y : y_roots) {
        // Map each root of R(y) to its p preimages under y = x^p.
        const double r = std::pow(std::abs(y), 1.0 / p);
        const double theta = std::arg(y) / p;
        for (int t = 0; t < p; ++t) {
            const double angle = theta + 2.0 * std::numbers::pi * t / p;
            data.zeros.push_back({r * std::cos(angle), r * std::sin(angle), 1});
        }
    }

    // Merge numerically coincident zeros into multiplicity annotations.
    std::vector<Zero> merged;
    const double merge_eps = 1e-6 * (1.0 + std::abs(coeffs.empty() ? 0.0 : coeffs.back()));
    for (const Zero& z : data.zeros) {
        bool found = false;
        for (Zero& m : merged)
            if (std::hypot(m.re - z.re, m.im - z.im) < merge_eps) {
                ++m.multiplicity;
                found = true;
                break;
            }
        if (!found) merged.push_back(z);
    }
    data.zeros = std::move(merged);
    return data;
}

}  // namespace whp
