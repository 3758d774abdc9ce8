#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "whp/partition.hpp"

namespace whp {

// Exact scalar division; throws when b does not divide a over Int.
inline Int exact_div(const Int& a, const Int& b) {
    if (b == 0) throw std::invalid_argument("division by zero");
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (r != 0) throw std::logic_error("inexact integer division");
    return q;
}

inline Rat exact_div(const Rat& a, const Rat& b) {
    if (b == 0) throw std::invalid_argument("division by zero");
    return a / b;
}

/*
 * Dense univariate polynomial over an exact coefficient ring (Int or Rat).
 * Coefficients are stored low-to-high and kept normalized (no trailing
 * zeros); the zero polynomial has an empty coefficient vector and degree -1.
 */
template <typename T>
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }
    explicit Polynomial(const T& constant) : coeffs_{constant} { normalize(); }
    explicit Polynomial(long constant) : coeffs_{T(constant)} { normalize(); }

    static Polynomial x() { return monomial(1); }

    static Polynomial monomial(long degree, T coeff = T(1)) {
        if (coeff == 0) return {};
        std::vector<T> c(static_cast<std::size_t>(degree) + 1, T(0));
        c.back() = std::move(coeff);
        return Polynomial(std::move(c));
    }

    const std::vector<T>& coeffs() const { return coeffs_; }
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }

    T coeff(long i) const {
        if (i < 0 || i >= static_cast<long>(coeffs_.size())) return T(0);
        return coeffs_[static_cast<std::size_t>(i)];
    }

    T leading() const {
        if (is_zero()) throw std::logic_error("zero polynomial has no leading coefficient");
        return coeffs_.back();
    }

    bool operator==(const Polynomial&) const = default;

    Polynomial operator-() const {
        std::vector<T> c(coeffs_);
        for (T& v : c) v = -v;
        return Polynomial(std::move(c));
    }

    Polynomial& operator+=(const Polynomial& other) {
        if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), T(0));
        for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
        normalize();
        return *this;
    }

    Polynomial& operator-=(const Polynomial& other) {
        if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), T(0));
        for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
        normalize();
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<T> c(a.coeffs_.size() + b.coeffs_.size() - 1, T(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                c[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return Polynomial(std::move(c));
    }

    Polynomial& operator*=(const Polynomial& other) { return *this = *this * other; }

    Polynomial& operator*=(const T& scalar) {
        for (T& v : coeffs_) v *= scalar;
        normalize();
        return *this;
    }

    friend Polynomial operator*(Polynomial a, const T& scalar) { return a *= scalar; }
    friend Polynomial operator*(const T& scalar, Polynomial a) { return a *= scalar; }

    // Divides every coefficient by `scalar`; exact over Int.
    Polynomial divided_by(const T& scalar) const {
        std::vector<T> c(coeffs_);
        for (T& v : c) v = exact_div(v, scalar);
        return Polynomial(std::move(c));
    }

    // Polynomial long division, required to be exact (zero remainder).
    Polynomial divided_by(const Polynomial& divisor) const {
        if (divisor.is_zero()) throw std::invalid_argument("division by zero polynomial");
        Polynomial remainder = *this;
        if (remainder.degree() < divisor.degree() && !remainder.is_zero())
            throw std::logic_error("inexact polynomial division");
        std::vector<T> q(remainder.is_zero()
                             ? 0
                             : static_cast<std::size_t>(remainder.degree() - divisor.degree()) + 1,
                         T(0));
        while (!remainder.is_zero() && remainder.degree() >= divisor.degree()) {
            const long shift = remainder.degree() - divisor.degree();
            const T c = exact_div(remainder.leading(), divisor.leading());
            q[static_cast<std::size_t>(shift)] = c;
            remainder -= monomial(shift, c) * divisor;
        }
        if (!remainder.is_zero()) throw std::logic_error("inexact polynomial division");
        return Polynomial(std::move(q));
    }

    Polynomial derivative() const {
        if (coeffs_.size() <= 1) return {};
        std::vector<T> c(coeffs_.size() - 1);
        for (std::size_t i = 1; i < coeffs_.size(); ++i)
            c[i - 1] = coeffs_[i] * T(static_cast<long>(i));
        return Polynomial(std::move(c));
    }

    template <typename V>
    V evaluate(const V& x) const {
        V result{};
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            result = result * x;
            result += V(*it);
        }
        return result;
    }

    double evaluate_double(double x) const {
        double result = 0.0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
            result = result * x + it->get_d();
        return result;
    }

    // P(a * x)
    Polynomial scaled_argument(const T& a) const {
        std::vector<T> c(coeffs_);
        T power(1);
        for (std::size_t i = 1; i < c.size(); ++i) {
            power *= a;
            c[i] *= power;
        }
        return Polynomial(std::move(c));
    }

    // P(x^p)
    Polynomial power_substituted(long p) const {
        if (p < 1) throw std::invalid_argument("power substitution requires p >= 1");
        if (is_zero()) return {};
        std::vector<T> c(static_cast<std::size_t>(degree()) * p + 1, T(0));
        for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i * p] = coeffs_[i];
        return Polynomial(std::move(c));
    }

    // P(x + a)
    Polynomial shifted_argument(const T& a) const {
        Polynomial result;
        const Polynomial xa = x() + Polynomial(a);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
            result = result * xa + Polynomial(*it);
        return result;
    }

    std::string to_string(const std::string& var = "x") const;

private:
    void normalize() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<T> coeffs_;
};

using IntPoly = Polynomial<Int>;
using RatPoly = Polynomial<Rat>;

inline std::string scalar_string(const Int& v) { return v.get_str(); }
inline std::string scalar_string(const Rat& v) {
    Rat c(v);
    c.canonicalize();
    return c.get_den() == 1 ? c.get_num().get_str()
                            : c.get_num().get_str() + "/" + c.get_den().get_str();
}

template <typename T>
std::string Polynomial<T>::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (long i = degree(); i >= 0; --i) {
        const T& c = coeffs_[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        const bool negative = c < 0;
        std::string mag = scalar_string(negative ? T(-c) : c);
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        const bool unit = (mag == "1") && i > 0;
        if (!unit) out += mag;
        if (i > 0) {
            if (!unit) out += "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

inline RatPoly to_rational(const IntPoly& p) {
    std::vector<Rat> c;
    c.reserve(p.coeffs().size());
    for (const Int& v : p.coeffs()) c.emplace_back(v);
    return RatPoly(std::move(c));
}

/*
 * Fraction-free (Bareiss) determinant. All divisions are exact in the
 * coefficient ring, so an Int (or polynomial-over-Int) matrix never leaves
 * the ring. The matrix is consumed.
 */
template <typename E>
E determinant_bareiss(std::vector<std::vector<E>> m) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("determinant of non-square matrix");
    if (n == 0) return E(1);
    bool negate = false;
    E prev_pivot(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == E(0)) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k] == E(0)) ++swap_row;
            if (swap_row == n) return E(0);
            std::swap(m[k], m[swap_row]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                E num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                m[i][j] = num.divided_by(prev_pivot);
            }
            m[i][k] = E(0);
        }
        prev_pivot = m[k][k];
    }
    return negate ? E(0) - m[n - 1][n - 1] : m[n - 1][n - 1];
}

// Bareiss needs divided_by on matrix entries; wrap plain scalars when the
// matrix is numeric rather than polynomial.
template <typename T>
T determinant_bareiss_scalar(std::vector<std::vector<T>> m) {
    std::vector<std::vector<Polynomial<T>>> wrapped(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (const T& v : m[i]) wrapped[i].emplace_back(v);
    Polynomial<T> det = determinant_bareiss(std::move(wrapped));
    return det.is_zero() ? T(0) : det.coeff(0);
}

// Wronskian determinant Wr[f_1, ..., f_r]: row i holds the i-th derivatives.
template <typename T>
Polynomial<T> wronskian(const std::vector<Polynomial<T>>& fs) {
    const std::size_t r = fs.size();
    if (r == 0) return Polynomial<T>(1);
    std::vector<std::vector<Polynomial<T>>> m(r);
    m[0] = fs;
    for (std::size_t i = 1; i < r; ++i) {
        m[i].reserve(r);
        for (const auto& f : m[i - 1]) m[i].push_back(f.derivative());
    }
    return determinant_bareiss(std::move(m));
}

// prod_{i < j} (v_j - v_i)
inline Int vandermonde(const std::vector<long>& values) {
    Int product = 1;
    for (std::size_t i = 0; i < values.size(); ++i)
        for (std::size_t j = i + 1; j < values.size(); ++j)
            product *= Int(values[j] - values[i]);
    return product;
}

// Unique polynomial of degree < #points through the given points.
inline RatPoly lagrange_interpolate(const std::vector<std::pair<Rat, Rat>>& points) {
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (points[i].first == points[j].first)
                throw std::invalid_argument("interpolation requires distinct abscissas");
    RatPoly result;
    for (std::size_t i = 0; i < points.size(); ++i) {
        RatPoly basis(Rat(1));
        Rat denom(1);
        for (std::size_t j = 0; j < points.size(); ++j) {
            if (j == i) continue;
            basis *= RatPoly::x() - RatPoly(points[j].first);
            denom *= points[i].first - points[j].first;
        }
        result += basis * (points[i].second / denom);
    }
    return result;
}

}  // namespace whp
