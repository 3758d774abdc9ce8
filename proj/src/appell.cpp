#include "whp/appell.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

#include "whp/characters.hpp"
#include "whp/core_quotient.hpp"

namespace whp {

IntPoly q_poly(int p, long n) {
    if (p < 1) throw std::invalid_argument("q_poly requires p >= 1");
    if (n < 0) throw std::invalid_argument("q_poly requires n >= 0");
    std::vector<IntPoly> qs;
    qs.reserve(n + 1);
    for (long m = 0; m <= n; ++m) {
        if (m < p) {
            qs.push_back(IntPoly::monomial(m));
        } else {
            Int falling = exact_div(factorial(m - 1), factorial(m - p));
            qs.push_back(IntPoly::x() * qs[m - 1] - falling * qs[m - p]);
        }
    }
    return qs.back();
}

IntPoly q_poly_expansion(int p, long n) {
    if (p < 1) throw std::invalid_argument("q_poly_expansion requires p >= 1");
    if (n < 0) throw std::invalid_argument("q_poly_expansion requires n >= 0");
    std::vector<Int> coeffs(static_cast<std::size_t>(n) + 1, Int(0));
    Int p_power = 1;
    for (long j = 0; p * j <= n; ++j) {
        Int c = exact_div(factorial(n), Int(factorial(j) * factorial(n - p * j) * p_power));
        coeffs[static_cast<std::size_t>(n - p * j)] = j % 2 ? Int(-c) : c;
        p_power *= p;
    }
    return IntPoly(std::move(coeffs));
}

namespace {

IntPoly appell_via_determinant(int p, const Partition& lambda) {
    const std::vector<long> degrees = lambda.degree_vector();
    std::vector<IntPoly> fs;
    fs.reserve(degrees.size());
    for (long n : degrees) fs.push_back(q_poly(p, n));
    return wronskian(fs).divided_by(vandermonde(degrees));
}

std::map<std::pair<int, std::vector<long>>, IntPoly> appell_memo;
std::mutex appell_memo_mutex;

/*
 * Coefficientwise generating recurrence, same shape as the Hermite case:
 * with n = |lambda| and S the signed sum over size-p strip removals,
 * c_m = -(n!/(n-p)!) S_m / (F (n-m)) for m < n. The sign and prefactor are
 * the ones consistent with the coefficient recurrence for the remainder
 * (which reduces to the p = 2 case), and every division is exact.
 */
IntPoly appell_via_recurrence(int p, const Partition& lambda) {
    if (lambda.empty()) return IntPoly(1);
    const long n = lambda.size();
    if (n < p) return IntPoly::monomial(n);  // single removable strip absent: q_lambda = x^n
    {
        std::lock_guard<std::mutex> lock(appell_memo_mutex);
        auto it = appell_memo.find({p, lambda.parts()});
        if (it != appell_memo.end()) return it->second;
    }
    IntPoly sum;
    for (const auto& [smaller, height] : remove_border_strips(lambda, p)) {
        const IntPoly term = path_count(smaller) * appell_via_recurrence(p, smaller);
        if (height % 2)
            sum -= term;
        else
            sum += term;
    }
    const Int f = path_count(lambda);
    const Int falling = exact_div(factorial(n), factorial(n - p));
    std::vector<Int> coeffs(static_cast<std::size_t>(n) + 1, Int(0));
    coeffs.back() = 1;
    for (long m = 0; m < n; ++m)
        coeffs[static_cast<std::size_t>(m)] =
            exact_div(Int(-falling * sum.coeff(m)), Int(f * (n - m)));
    IntPoly result(std::move(coeffs));
    {
        std::lock_guard<std::mutex> lock(appell_memo_mutex);
        appell_memo.emplace(std::make_pair(p, lambda.parts()), result);
    }
    return result;
}

IntPoly appell_via_characters(int p, const Partition& lambda) {
    const long n = lambda.size();
    const Int f = path_count(lambda);
    std::vector<Int> coeffs(static_cast<std::size_t>(n) + 1, Int(0));
    Int p_power = 1;
    for (long j = 0; p * j <= n; ++j) {
        Int weight =
            exact_div(factorial(n), Int(factorial(j) * factorial(n - p * j) * p_power));
        if (j % 2) weight = -weight;
        coeffs[static_cast<std::size_t>(n - p * j)] =
            exact_div(Int(weight * character_path_sum(lambda, p, j)), f);
        p_power *= p;
    }
    return IntPoly(std::move(coeffs));
}

}  // namespace

IntPoly wronskian_appell(int p, const Partition& lambda, AppellMethod method) {
    if (p < 1) throw std::invalid_argument("wronskian_appell requires p >= 1");
    switch (method) {
        case AppellMethod::determinant: return appell_via_determinant(p, lambda);
        case AppellMethod::recurrence: return appell_via_recurrence(p, lambda);
        case AppellMethod::characters: return appell_via_characters(p, lambda);
    }
    throw std::invalid_argument("unknown method");
}

AppellFactorization factor_p(int p, const Partition& lambda) {
    if (p < 2) throw std::invalid_argument("factor_p requires p >= 2");
    AppellFactorization out;
    out.lambda = lambda;
    out.p = p;
    out.full = wronskian_appell(p, lambda, AppellMethod::recurrence);

    const QuotientDataP q = core_and_quotient_p(lambda, p);
    out.core_size = q.core.size();
    const long d = q.quotient_size();

    std::vector<Int> remainder(static_cast<std::size_t>(d) + 1, Int(0));
    for (long i = 0; i <= lambda.size(); ++i) {
        const Int c = out.full.coeff(i);
        if (c == 0) continue;
        const long offset = i - out.core_size;
        if (offset < 0 || offset % p != 0)
            throw std::logic_error("unexpected coefficient support in p-factorization");
        remainder[static_cast<std::size_t>(offset / p)] = c;
    }
    out.remainder = IntPoly(std::move(remainder));
    out.h_parity = static_cast<int>(
        (height_p(lambda, q.core, p) + (lambda.size() - q.core.size()) / p) % 2);
    out.r0 = out.remainder.coeff(0);
    return out;
}

namespace {

// r_{lambda,j} for the p-family by the coefficient recurrence; memoized on
// (p, partition) and returning the whole remainder coefficient vector
// r_0..r_d (index j).
std::vector<Int> remainder_coeffs_recurrence(int p, const Partition& lambda) {
    const QuotientDataP q = core_and_quotient_p(lambda, p);
    const long d = q.quotient_size();
    std::vector<Int> r(static_cast<std::size_t>(d) + 1, Int(0));
    r[0] = 1;
    if (d == 0) return r;
    const long n = lambda.size();
    const Int f = path_count(lambda);
    const Int falling = exact_div(factorial(n), factorial(n - p));

    std::vector<std::pair<std::vector<Int>, std::pair<Int, int>>> children;
    for (const auto& [smaller, height] : remove_border_strips(lambda, p))
        children.push_back({remainder_coeffs_recurrence(p, smaller),
                            {path_count(smaller), height % 2}});
    for (long j = 1; j <= d; ++j) {
        Int sum = 0;
        for (const auto& [child_r, info] : children) {
            if (j - 1 >= static_cast<long>(child_r.size())) continue;
            const Int term = info.first * child_r[static_cast<std::size_t>(j - 1)];
            sum += info.second ? -term : term;
        }
        r[static_cast<std::size_t>(j)] = exact_div(Int(-falling * sum), Int(f * p * j));
    }
    return r;
}

}  // namespace

IntPoly remainder_via_recurrence(int p, const Partition& lambda) {
    if (p < 2) throw std::invalid_argument("remainder_via_recurrence requires p >= 2");
    const std::vector<Int> r = remainder_coeffs_recurrence(p, lambda);
    const long d = static_cast<long>(r.size()) - 1;
    std::vector<Int> coeffs(r.size(), Int(0));
    for (long j = 0; j <= d; ++j) coeffs[static_cast<std::size_t>(d - j)] = r[j];
    return IntPoly(std::move(coeffs));
}

IntPoly remainder_via_hooks(int p, const Partition& lambda) {
    if (p < 2) throw std::invalid_argument("remainder_via_hooks requires p >= 2");
    const QuotientDataP q = core_and_quotient_p(lambda, p);
    const long d = q.quotient_size();
    const Int h_non_p = hook_products_split(lambda, p).first;

    // F^{(p)} of the full quotient tuple: multinomial times product of F's.
    Int f_full = factorial(d);
    for (const Partition& component : q.components)
        f_full = exact_div(Int(f_full * path_count(component)), factorial(component.size()));

    // Enumerate componentwise sub-tuples.
    std::vector<std::vector<Partition>> subs(q.components.size());
    for (std::size_t i = 0; i < q.components.size(); ++i)
        subs[i] = sub_partitions(q.components[i]);

    std::vector<Rat> r(static_cast<std::size_t>(d) + 1, Rat(0));
    std::vector<Partition> chosen(q.components.size());
    const auto recurse = [&](auto&& self, std::size_t idx) -> void {
        if (idx == q.components.size()) {
            const Partition reduced = compose_with_core_of(lambda, p, chosen);
            long kept = 0;
            Int f_sub = 1, f_skew = 1, kept_factorials = 1, removed_factorials = 1;
            for (std::size_t i = 0; i < chosen.size(); ++i) {
                kept += chosen[i].size();
                f_sub *= path_count(chosen[i]);
                kept_factorials *= factorial(chosen[i].size());
                f_skew *= skew_path_count(q.components[i], chosen[i]);
                removed_factorials *= factorial(q.components[i].size() - chosen[i].size());
            }
            const long j = d - kept;
            f_sub = exact_div(Int(f_sub * factorial(kept)), kept_factorials);
            f_skew = exact_div(Int(f_skew * factorial(j)), removed_factorials);
            Rat term = Rat(f_sub * f_skew * h_non_p) /
                       Rat(f_full * hook_products_split(reduced, p).first);
            if (height_p(lambda, reduced, p) % 2) term = -term;
            r[static_cast<std::size_t>(j)] += term;
            return;
        }
        for (const Partition& sub : subs[idx]) {
            chosen[idx] = sub;
            self(self, idx + 1);
        }
    };
    recurse(recurse, 0);

    std::vector<Int> coeffs(static_cast<std::size_t>(d) + 1, Int(0));
    for (long j = 0; j <= d; ++j) {
        Rat value = r[static_cast<std::size_t>(j)] * Rat(binomial(d, j));
        if (j % 2) value = -value;
        value.canonicalize();
        if (value.get_den() != 1)
            throw std::logic_error("p-family hook coefficient formula gave a non-integer");
        coeffs[static_cast<std::size_t>(d - j)] = value.get_num();
    }
    return IntPoly(std::move(coeffs));
}

RatPoly appell_poly(const std::vector<Rat>& z, long n) {
    if (n < 0) throw std::invalid_argument("appell_poly requires n >= 0");
    if (static_cast<long>(z.size()) <= n)
        throw std::invalid_argument("z-sequence too short for the requested degree");
    if (z[0] != 1) throw std::invalid_argument("z_0 must be 1");
    std::vector<Rat> coeffs(static_cast<std::size_t>(n) + 1, Rat(0));
    for (long j = 0; j <= n; ++j)
        coeffs[static_cast<std::size_t>(n - j)] = Rat(binomial(n, j)) * z[static_cast<std::size_t>(j)];
    return RatPoly(std::move(coeffs));
}

RatPoly wronskian_appell_generic(const std::vector<Rat>& z, const Partition& lambda) {
    const std::vector<long> degrees = lambda.degree_vector();
    std::vector<RatPoly> fs;
    fs.reserve(degrees.size());
    for (long n : degrees) fs.push_back(appell_poly(z, n));
    return wronskian(fs).divided_by(Rat(vandermonde(degrees)));
}

std::pair<Rat, Rat> appell_leading_coeffs(const std::vector<Rat>& z, const Partition& lambda) {
    const long n = lambda.size();
    if (n < 2) throw std::invalid_argument("appell_leading_coeffs requires |lambda| >= 2");
    if (z.size() < 3) throw std::invalid_argument("z-sequence must provide z_1 and z_2");
    const Rat z1 = z[1], z2 = z[2];
    const Rat a1 = Rat(binomial(n, 1)) * z1;
    const Rat a2 = Rat(content_sum(lambda)) * (z2 - z1 * z1) + Rat(binomial(n, 2)) * z1 * z1;
    return {a1, a2};
}

}  // namespace whp
