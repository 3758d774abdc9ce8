#include "whp/identity.hpp"

#include <map>
#include <stdexcept>

namespace whp {

std::pair<Rat, Rat> identity_check(const std::vector<Rat>& xs) {
    const long n = static_cast<long>(xs.size());
    for (long i = 0; i < n; ++i)
        for (long j = i + 1; j < n; ++j)
            if (xs[i] == xs[j]) throw std::invalid_argument("identity_check: duplicate entries");

    Rat lhs(0);
    for (long j = 0; j < n; ++j) {
        Rat term = xs[j] * (xs[j] - 1);
        for (long i = 0; i < n; ++i)
            if (i != j) term *= (xs[j] - xs[i] - 2) / (xs[j] - xs[i]);
        lhs += term;
    }
    Rat rhs(0);
    for (long j = 1; j <= n; ++j)
        rhs += (xs[j - 1] - n + j) * (xs[j - 1] - n - j + 1);
    return {lhs, rhs};
}

namespace {

// Sparse multivariate polynomial: exponent vector -> coefficient.
using MPoly = std::map<std::vector<int>, Int>;

MPoly mp_const(int n, const Int& c) {
    MPoly p;
    if (c != 0) p[std::vector<int>(n, 0)] = c;
    return p;
}

// c + the variable with index v (v < 0 for no variable).
MPoly mp_linear(int n, int v, const Int& c) {
    MPoly p = mp_const(n, c);
    std::vector<int> e(n, 0);
    e[v] = 1;
    p[e] += 1;
    if (p[e] == 0) p.erase(e);
    return p;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            std::vector<int> e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out[e] += Int(ca * cb);
            if (out[e] == 0) out.erase(e);
        }
    return out;
}

MPoly& operator+=(MPoly& a, const MPoly& b) {
    for (const auto& [e, c] : b) {
        a[e] += c;
        if (a[e] == 0) a.erase(e);
    }
    return a;
}

// x_j - x_i + c
MPoly mp_diff(int n, int j, int i, const Int& c) {
    MPoly p = mp_const(n, c);
    std::vector<int> ej(n, 0), ei(n, 0);
    ej[j] = 1;
    ei[i] = 1;
    p[ej] += 1;
    p[ei] -= 1;
    if (p[ej] == 0) p.erase(ej);
    if (p[ei] == 0) p.erase(ei);
    return p;
}

}  // namespace

bool identity_check_symbolic(int n) {
    if (n <= 0) return true;
    // Clear the denominator: compare lhs * D with rhs * D where
    // D = prod_{a<b} (x_b - x_a).
    MPoly big_d = mp_const(n, 1);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) big_d = big_d * mp_diff(n, b, a, 0);

    MPoly lhs;
    for (int j = 0; j < n; ++j) {
        // x_j (x_j - 1) prod_{i != j} (x_j - x_i - 2), times the cofactor
        // (-1)^{n-1-j} prod_{a<b, a,b != j} (x_b - x_a) = D / prod_{i != j}(x_j - x_i).
        MPoly term = mp_linear(n, j, 0) * mp_linear(n, j, -1);
        for (int i = 0; i < n; ++i)
            if (i != j) term = term * mp_diff(n, j, i, -2);
        MPoly cofactor = mp_const(n, (n - 1 - j) % 2 ? Int(-1) : Int(1));
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (a != j && b != j) cofactor = cofactor * mp_diff(n, b, a, 0);
        lhs += term * cofactor;
    }

    MPoly rhs;
    for (int j = 1; j <= n; ++j)
        rhs += mp_linear(n, j - 1, Int(j - n)) * mp_linear(n, j - 1, Int(1 - n - j));
    rhs = rhs * big_d;

    return lhs == rhs;
}

}  // namespace whp
