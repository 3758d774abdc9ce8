#include "whp/laguerre.hpp"

#include <stdexcept>
#include <vector>

#include "whp/core_quotient.hpp"
#include "whp/hermite.hpp"

namespace whp {

RatPoly laguerre(long n, const Rat& alpha) {
    if (n < 0) throw std::invalid_argument("laguerre: degree must be non-negative");
    std::vector<Rat> coeffs(static_cast<std::size_t>(n) + 1, Rat(0));
    for (long i = 0; i <= n; ++i) {
        // (n!/i!) * C(n+alpha, n-i) as a product of n-i linear factors.
        Rat c(exact_div(factorial(n), factorial(i)));
        for (long t = 1; t <= n - i; ++t) c *= (alpha + i + t) / Rat(t);
        coeffs[static_cast<std::size_t>(i)] = (n + i) % 2 ? Rat(-c) : c;
    }
    return RatPoly(std::move(coeffs));
}

namespace {

Rat rational_vandermonde(const std::vector<Rat>& values) {
    Rat product(1);
    for (std::size_t i = 0; i < values.size(); ++i)
        for (std::size_t j = i + 1; j < values.size(); ++j)
            product *= values[j] - values[i];
    return product;
}

// Divides by x^k, throwing if the low-order coefficients are nonzero.
RatPoly shift_down(const RatPoly& poly, long k) {
    if (k == 0) return poly;
    return poly.divided_by(RatPoly::monomial(k));
}

}  // namespace

RatPoly wronskian_laguerre(const Partition& mu, const Partition& nu, const Rat& alpha) {
    const std::vector<long> n_mu = mu.degree_vector();
    const std::vector<long> m_nu = nu.degree_vector();
    const long lm = static_cast<long>(n_mu.size());
    const long ln = static_cast<long>(m_nu.size());
    const long r = lm + ln;
    if (r == 0) return RatPoly(Rat(1));

    std::vector<Rat> index_values;
    for (long n : n_mu) index_values.emplace_back(n);
    for (long m : m_nu) index_values.emplace_back(Rat(m) - alpha);
    const Rat delta = rational_vandermonde(index_values);
    if (delta == 0)
        throw std::invalid_argument("wronskian_laguerre: index values collide for this alpha");

    /*
     * True column entries at derivative order i:
     *   plain column:     d^i/dx^i P          = x^{-i} * (x^i P^{(i)})
     *   weighted column:  d^i/dx^i (x^s P)    = x^{s-i} * T_i,
     *                     T_0 = P, T_{i+1} = x T_i' + (s - i) T_i,
     * so the determinant is x^{s l(nu) - r(r-1)/2} times a polynomial
     * determinant, with s = -alpha here.
     */
    std::vector<std::vector<RatPoly>> m(r, std::vector<RatPoly>(r));
    for (long j = 0; j < lm; ++j) {
        RatPoly deriv = laguerre(n_mu[j], alpha);
        for (long i = 0; i < r; ++i) {
            m[i][j] = RatPoly::monomial(i) * deriv;
            deriv = deriv.derivative();
        }
    }
    for (long j = 0; j < ln; ++j) {
        RatPoly t = laguerre(m_nu[j], Rat(-alpha));
        for (long i = 0; i < r; ++i) {
            m[i][lm + j] = t;
            t = RatPoly::x() * t.derivative() + (-alpha - Rat(i)) * t;
        }
    }
    RatPoly det = determinant_bareiss(std::move(m));
    // Prefactor x^{(l(mu)+alpha) l(nu)} leaves the net monomial
    // x^{l(mu) l(nu) - r(r-1)/2}; the determinant is divisible by the rest.
    const long deficit = r * (r - 1) / 2 - lm * ln;
    RatPoly result = shift_down(det, deficit).divided_by(delta);
    if (result.degree() != mu.size() + nu.size() || result.leading() != 1)
        throw std::logic_error("wronskian_laguerre: result is not monic of the expected degree");
    return result;
}

RatPoly omega_polynomial(const Partition& mu, const Partition& nu, const Rat& alpha) {
    const std::vector<long> n_mu = mu.degree_vector();
    const std::vector<long> m_nu = nu.degree_vector();
    const long lm = static_cast<long>(n_mu.size());
    const long ln = static_cast<long>(m_nu.size());
    const long r = lm + ln;
    if (r == 0) return RatPoly(Rat(1));

    std::vector<std::vector<RatPoly>> m(r, std::vector<RatPoly>(r));
    for (long j = 0; j < lm; ++j) {
        RatPoly deriv = laguerre(n_mu[j], alpha);
        for (long i = 0; i < r; ++i) {
            m[i][j] = deriv;
            deriv = deriv.derivative();
        }
    }
    // Weighted columns e^x Q: successive derivatives are e^x U_i with
    // U_0 = Q and U_{i+1} = U_i + U_i'; the e^{l(nu) x} factor cancels
    // against the normalization.
    for (long j = 0; j < ln; ++j) {
        RatPoly u = laguerre(m_nu[j], alpha).scaled_argument(Rat(-1));
        for (long i = 0; i < r; ++i) {
            m[i][lm + j] = u;
            u = u + u.derivative();
        }
    }
    RatPoly det = determinant_bareiss(std::move(m));

    Rat norm(1);
    std::vector<Rat> n_vals, m_vals;
    long m_sum = 0;
    for (long n : n_mu) n_vals.emplace_back(n);
    for (long v : m_nu) {
        m_vals.emplace_back(v);
        m_sum += v;
    }
    norm = rational_vandermonde(n_vals) * rational_vandermonde(m_vals);
    if (m_sum % 2) norm = -norm;
    RatPoly result = det.divided_by(norm);
    if (result.degree() != mu.size() + nu.size() || result.leading() != 1)
        throw std::logic_error("omega_polynomial: result is not monic of the expected degree");
    return result;
}

bool hermite_laguerre_check(const Partition& lambda) {
    const QuotientData2 q = core_and_quotient_2(lambda);
    const long d = q.quotient_size();
    const Rat alpha_k = Rat(-1, 2) - Rat(static_cast<long>(q.mu.length())) +
                        Rat(static_cast<long>(q.nu.length())) - Rat(q.k);
    RatPoly rhs = wronskian_laguerre(q.mu, q.nu, alpha_k).scaled_argument(Rat(1, 2));
    Rat scale(Int(1) << static_cast<unsigned>(d));
    return to_rational(remainder_polynomial(lambda).remainder) == scale * rhs;
}

bool hermite_omega_check(const Partition& lambda) {
    const QuotientData2 q = core_and_quotient_2(lambda);
    const long d = q.quotient_size();
    const Partition nu_conj = q.nu.conjugate();
    const Rat alpha_k = Rat(-1, 2) - Rat(static_cast<long>(q.mu.length())) -
                        Rat(static_cast<long>(nu_conj.length())) - Rat(q.k);
    RatPoly rhs = omega_polynomial(q.mu, nu_conj, alpha_k).scaled_argument(Rat(1, 2));
    Rat scale(Int(1) << static_cast<unsigned>(d));
    return to_rational(remainder_polynomial(lambda).remainder) == scale * rhs;
}

Rat omega_asymptotic_error(const Partition& mu, const Partition& nu, const Rat& alpha) {
    if (alpha == 0) throw std::invalid_argument("omega_asymptotic_error requires alpha != 0");
    const long d = mu.size() + nu.size();
    RatPoly scaled = omega_polynomial(mu, nu, alpha).scaled_argument(alpha);
    Rat alpha_power(1);
    for (long i = 0; i < d; ++i) alpha_power *= alpha;
    scaled = scaled.divided_by(alpha_power);

    RatPoly target(Rat(1));
    const RatPoly x_minus = RatPoly::x() - RatPoly(Rat(1));
    const RatPoly x_plus = RatPoly::x() + RatPoly(Rat(1));
    for (long i = 0; i < mu.size(); ++i) target *= x_minus;
    for (long i = 0; i < nu.size(); ++i) target *= x_plus;

    const RatPoly diff = scaled - target;
    Rat max_abs(0);
    for (const Rat& c : diff.coeffs()) {
        Rat a = c < 0 ? Rat(-c) : c;
        if (a > max_abs) max_abs = a;
    }
    return max_abs;
}

}  // namespace whp
