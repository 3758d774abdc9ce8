#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "whp/appell.hpp"
#include "whp/asymptotics.hpp"
#include "whp/characters.hpp"
#include "whp/core_quotient.hpp"
#include "whp/hermite.hpp"
#include "whp/identity.hpp"
#include "whp/laguerre.hpp"
#include "whp/maya.hpp"
#include "whp/partition.hpp"
#include "whp/polynomial.hpp"

using json = nlohmann::json;
using namespace whp;

namespace {

constexpr const char* kSchema = "whp/1";

template <typename T>
json poly_json(const Polynomial<T>& poly, const std::string& variable) {
    json out;
    out["variable"] = variable;
    json arr = json::array();
    for (const T& c : poly.coeffs()) arr.push_back(scalar_string(c));
    out["coeffs"] = std::move(arr);
    return out;
}

Rat parse_rational(const std::string& text) {
    Rat value;
    if (value.set_str(text, 10) != 0)
        throw std::invalid_argument("malformed rational: '" + text + "'");
    value.canonicalize();
    return value;
}

std::vector<Rat> parse_rational_list(const std::string& text) {
    std::vector<Rat> values;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        values.push_back(parse_rational(text.substr(pos, comma - pos)));
        pos = comma + 1;
    }
    return values;
}

void emit(const json& payload) {
    json out = payload;
    out["schema"] = kSchema;
    std::cout << out.dump(2) << "\n";
}

long thread_budget() {
    if (const char* env = std::getenv("WHP_THREADS")) {
        long n = std::strtol(env, nullptr, 10);
        return n <= 0 ? 1 : n;
    }
    long hw = static_cast<long>(std::thread::hardware_concurrency());
    return hw > 0 ? hw : 1;
}

// Applies `check` to every item; returns the sorted list of failure strings.
// Results are identical to sequential execution (each case is pure).
template <typename Item, typename Check>
std::vector<std::string> parallel_check(const std::vector<Item>& items, Check check) {
    const long threads = std::min<long>(thread_budget(), static_cast<long>(items.size()));
    std::vector<std::vector<std::string>> fails(std::max<long>(threads, 1));
    if (threads <= 1) {
        for (const Item& item : items) check(item, fails[0]);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (long t = 0; t < threads; ++t)
            pool.emplace_back([&, t] {
                for (std::size_t i = next++; i < items.size(); i = next++) check(items[i], fails[t]);
            });
        for (std::thread& th : pool) th.join();
    }
    std::vector<std::string> merged;
    for (const auto& part : fails) merged.insert(merged.end(), part.begin(), part.end());
    std::sort(merged.begin(), merged.end());
    return merged;
}

std::vector<Partition> partitions_up_to(long max_size) {
    std::vector<Partition> all;
    for (long n = 0; n <= max_size; ++n)
        for (const Partition& lam : enumerate_partitions(n)) all.push_back(lam);
    return all;
}

struct Suite {
    std::string name;
    long cases = 0;
    std::vector<std::string> failures;
};

Suite suite_hermite(long max_size) {
    Suite s{"hermite-routes"};
    const std::vector<Partition> items = partitions_up_to(max_size);
    s.cases = static_cast<long>(items.size());
    s.failures = parallel_check(items, [](const Partition& lam, std::vector<std::string>& bad) {
        const IntPoly det = wronskian_hermite(lam, HermiteMethod::determinant);
        for (HermiteMethod m : {HermiteMethod::recurrence, HermiteMethod::characters,
                                HermiteMethod::hooks})
            if (wronskian_hermite(lam, m) != det) {
                bad.push_back(lam.to_string());
                return;
            }
        const HermiteFactorization f = remainder_polynomial(lam);
        if (f.full != det || f.remainder.coeff(0) != f.r0 || !conjugation_check(lam)) {
            bad.push_back(lam.to_string());
            return;
        }
        if (f.remainder.degree() >= 1) {
            auto [first, second] = subleading_coefficient(lam);
            if (first != second) bad.push_back(lam.to_string());
        }
    });
    return s;
}

Suite suite_characters(long max_size, const std::vector<int>& p_list) {
    Suite s{"characters"};
    const std::vector<Partition> items = partitions_up_to(max_size);
    std::vector<std::string> all_fails;
    for (int p : p_list) {
        if (p < 1) continue;
        s.cases += static_cast<long>(items.size());
        auto fails = parallel_check(items, [p](const Partition& lam, std::vector<std::string>& bad) {
            for (long j = 0; p * j <= lam.size(); ++j)
                if (character_path_sum(lam, p, j) != character_mn_oracle(lam, p, j)) {
                    bad.push_back(lam.to_string() + " p=" + std::to_string(p));
                    return;
                }
        });
        all_fails.insert(all_fails.end(), fails.begin(), fails.end());
    }
    std::sort(all_fails.begin(), all_fails.end());
    s.failures = std::move(all_fails);
    return s;
}

Suite suite_appell(long max_size, const std::vector<int>& p_list) {
    Suite s{"appell-routes"};
    const std::vector<Partition> items = partitions_up_to(std::min<long>(max_size, 9));
    std::vector<std::string> all_fails;
    for (int p : p_list) {
        if (p < 1) continue;
        s.cases += static_cast<long>(items.size());
        auto fails = parallel_check(items, [p](const Partition& lam, std::vector<std::string>& bad) {
            const IntPoly det = wronskian_appell(p, lam, AppellMethod::determinant);
            if (wronskian_appell(p, lam, AppellMethod::recurrence) != det ||
                wronskian_appell(p, lam, AppellMethod::characters) != det) {
                bad.push_back(lam.to_string() + " p=" + std::to_string(p));
                return;
            }
            if (p >= 2) {
                const AppellFactorization f = factor_p(p, lam);
                if (f.full != det || remainder_via_recurrence(p, lam) != f.remainder ||
                    remainder_via_hooks(p, lam) != f.remainder)
                    bad.push_back(lam.to_string() + " p=" + std::to_string(p));
            }
        });
        all_fails.insert(all_fails.end(), fails.begin(), fails.end());
    }
    std::sort(all_fails.begin(), all_fails.end());
    s.failures = std::move(all_fails);
    return s;
}

Suite suite_laguerre(long max_size) {
    Suite s{"laguerre-correspondence"};
    const std::vector<Partition> items = partitions_up_to(std::min<long>(max_size, 10));
    s.cases = static_cast<long>(items.size());
    s.failures = parallel_check(items, [](const Partition& lam, std::vector<std::string>& bad) {
        if (!hermite_laguerre_check(lam) || !hermite_omega_check(lam))
            bad.push_back(lam.to_string());
    });
    return s;
}

Suite suite_psi(long max_size) {
    Suite s{"psi-constant-term"};
    const long bound = std::min<long>(max_size, 5);
    std::vector<std::pair<Partition, Partition>> pairs;
    for (long n = 0; n <= bound; ++n)
        for (long a = 0; a <= n; ++a)
            for (const Partition& mu : enumerate_partitions(a))
                for (const Partition& nu : enumerate_partitions(n - a)) pairs.emplace_back(mu, nu);
    s.cases = static_cast<long>(pairs.size());
    s.failures = parallel_check(pairs, [](const auto& pr, std::vector<std::string>& bad) {
        const auto& [mu, nu] = pr;
        const PsiPolynomial ps = psi(mu, nu);
        Int lead(1);
        for (long t = 0; t < mu.size() + nu.size(); ++t) lead *= 2;
        if (nu.size() % 2) lead = -lead;
        if (ps.poly.degree() != mu.size() + nu.size() || ps.poly.leading() != lead) {
            bad.push_back(mu.to_string() + "|" + nu.to_string());
            return;
        }
        for (long k = 0; k <= 6; ++k)
            if (ps.poly.evaluate(Int(k)) != remainder_polynomial(phi(mu, nu, k)).r0) {
                bad.push_back(mu.to_string() + "|" + nu.to_string());
                return;
            }
    });
    return s;
}

Suite suite_identity(unsigned long seed) {
    Suite s{"appendix-identity"};
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> num(-40, 40), den(1, 12), size(1, 6);
    for (int round = 0; round < 200; ++round) {
        const long n = size(rng);
        std::vector<Rat> xs;
        while (static_cast<long>(xs.size()) < n) {
            Rat candidate(num(rng), den(rng));
            candidate.canonicalize();
            bool dup = false;
            for (const Rat& x : xs) dup = dup || x == candidate;
            if (!dup) xs.push_back(candidate);
        }
        ++s.cases;
        auto [lhs, rhs] = identity_check(xs);
        if (lhs != rhs) s.failures.push_back("tuple round " + std::to_string(round));
    }
    for (int n = 1; n <= 4; ++n) {
        ++s.cases;
        if (!identity_check_symbolic(n)) s.failures.push_back("symbolic n=" + std::to_string(n));
    }
    return s;
}

Suite suite_appell_generic(unsigned long seed) {
    Suite s{"appell-generic"};
    std::mt19937_64 rng(seed + 1);
    std::uniform_int_distribution<long> num(-6, 6), den(1, 4), pick_n(2, 8);
    for (int round = 0; round < 50; ++round) {
        const long n = pick_n(rng);
        const std::vector<Partition> parts = enumerate_partitions(n);
        const Partition& lam = parts[rng() % parts.size()];
        std::vector<Rat> z{Rat(1)};
        for (long i = 0; i < n; ++i) {
            Rat v(num(rng), den(rng));
            v.canonicalize();
            z.push_back(v);
        }
        ++s.cases;
        const RatPoly w = wronskian_appell_generic(z, lam);
        auto [a1, a2] = appell_leading_coeffs(z, lam);
        if (w.coeff(n - 1) != a1 || w.coeff(n - 2) != a2)
            s.failures.push_back("round " + std::to_string(round));
    }
    return s;
}

int run_verify(long max_size, const std::vector<int>& p_list, unsigned long seed) {
    const auto start = std::chrono::steady_clock::now();
    std::vector<Suite> suites;
    suites.push_back(suite_hermite(max_size));
    suites.push_back(suite_characters(max_size, p_list));
    suites.push_back(suite_appell(max_size, p_list));
    suites.push_back(suite_laguerre(max_size));
    suites.push_back(suite_psi(max_size));
    suites.push_back(suite_identity(seed));
    suites.push_back(suite_appell_generic(seed));
    const auto elapsed = std::chrono::steady_clock::now() - start;

    json report;
    report["bounds"] = {{"max_size", max_size}, {"p", p_list}, {"seed", seed}};
    long total_failures = 0;
    json list = json::array();
    for (const Suite& s : suites) {
        total_failures += static_cast<long>(s.failures.size());
        list.push_back({{"name", s.name}, {"cases", s.cases}, {"failures", s.failures}});
    }
    report["suites"] = std::move(list);
    report["total_failures"] = total_failures;
    report["wall_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
    emit(report);
    return total_failures == 0 ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computation with Wronskian Hermite polynomials and relatives"};
    app.require_subcommand(1);

    std::string part_text, mu_text = "-", nu_text = "-", method = "determinant";
    std::string alpha_text = "-1/2", z_text, xs_text, csv_path;
    long j_arg = 0, k_arg = 0, max_size = 8;
    int p_arg = 2;
    unsigned long seed = 1;
    double tol = 1e-10;
    bool show_maya = false;
    std::vector<int> p_list{2, 3};

    auto* info = app.add_subcommand("partition-info", "Combinatorial data of one partition");
    info->add_option("partition", part_text)->required();
    info->add_flag("--show-maya", show_maya);

    auto* cq = app.add_subcommand("core-quotient", "p-core and p-quotient decomposition");
    cq->add_option("partition", part_text)->required();
    cq->add_option("--p", p_arg);

    auto* herm = app.add_subcommand("hermite", "Wronskian Hermite polynomial");
    herm->add_option("partition", part_text)->required();
    herm->add_option("--method", method)
        ->check(CLI::IsMember({"determinant", "recurrence", "characters", "hooks"}));

    auto* rem = app.add_subcommand("remainder", "Nontrivial factor of the Wronskian Hermite");
    rem->add_option("partition", part_text)->required();

    auto* app_cmd = app.add_subcommand("appell", "Wronskian of an Appell family");
    app_cmd->add_option("partition", part_text)->required();
    auto* app_p = app_cmd->add_option("--p", p_arg);
    auto* app_z = app_cmd->add_option("--z", z_text, "Appell constants z_0,z_1,...");
    app_z->excludes(app_p);

    auto* ch = app.add_subcommand("character", "Character value at cycle type (p^j, 1^{n-pj})");
    ch->add_option("partition", part_text)->required();
    ch->add_option("--j", j_arg)->required();
    ch->add_option("--p", p_arg);

    auto* lagc = app.add_subcommand("laguerre-check", "Hermite remainder vs Laguerre Wronskian");
    lagc->add_option("partition", part_text)->required();

    auto* lag = app.add_subcommand("laguerre", "Wronskian Laguerre polynomial");
    lag->add_option("--mu", mu_text)->required();
    lag->add_option("--nu", nu_text)->required();
    lag->add_option("--alpha", alpha_text);

    auto* psi_cmd = app.add_subcommand("psi", "Constant term R(0) as a polynomial in k");
    psi_cmd->add_option("--mu", mu_text)->required();
    psi_cmd->add_option("--nu", nu_text)->required();

    auto* cpoly = app.add_subcommand("coeff-poly", "Remainder coefficient as a polynomial in k");
    cpoly->add_option("--mu", mu_text)->required();
    cpoly->add_option("--nu", nu_text)->required();
    cpoly->add_option("--j", j_arg)->required();

    auto* zr = app.add_subcommand("zeros", "Numerical zeros of the Wronskian polynomial");
    zr->add_option("partition", part_text)->required();
    zr->add_option("--tol", tol);
    zr->add_option("--p", p_arg);
    zr->add_option("--csv", csv_path);

    auto* id = app.add_subcommand("identity", "Rational-function identity check");
    id->add_option("--xs", xs_text)->required();

    auto* ver = app.add_subcommand("verify", "Run all invariant suites");
    ver->add_option("--max-size", max_size);
    ver->add_option("--p", p_list);
    ver->add_option("--seed", seed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (info->parsed()) {
            const Partition lam = Partition::parse(part_text);
            json out;
            out["partition"] = lam.to_string();
            out["size"] = lam.size();
            out["length"] = lam.length();
            out["conjugate"] = lam.conjugate().to_string();
            out["degree_vector"] = lam.degree_vector();
            out["hook_product"] = scalar_string(hook_product(lam));
            out["content_sum"] = content_sum(lam);
            out["path_count"] = scalar_string(path_count(lam));
            if (show_maya) out["maya"] = MayaDiagram::of(lam).render();
            emit(out);
        } else if (cq->parsed()) {
            const Partition lam = Partition::parse(part_text);
            json out;
            if (p_arg == 2) {
                const QuotientData2 q = core_and_quotient_2(lam);
                out["core"] = q.core().to_string();
                out["quotient"] = {q.mu.to_string(), q.nu.to_string()};
                out["mu"] = q.mu.to_string();
                out["nu"] = q.nu.to_string();
                out["k"] = q.k;
            } else {
                const QuotientDataP q = core_and_quotient_p(lam, p_arg);
                out["core"] = q.core.to_string();
                json comps = json::array();
                for (const Partition& c : q.components) comps.push_back(c.to_string());
                out["quotient"] = std::move(comps);
            }
            emit(out);
        } else if (herm->parsed()) {
            const Partition lam = Partition::parse(part_text);
            HermiteMethod m = HermiteMethod::determinant;
            if (method == "recurrence") m = HermiteMethod::recurrence;
            if (method == "characters") m = HermiteMethod::characters;
            if (method == "hooks") m = HermiteMethod::hooks;
            emit(poly_json(wronskian_hermite(lam, m), "x"));
        } else if (rem->parsed()) {
            const Partition lam = Partition::parse(part_text);
            const HermiteFactorization f = remainder_polynomial(lam);
            json out = poly_json(f.remainder, "y");
            out["core_size"] = f.core_size;
            out["h_parity"] = f.h_parity;
            out["R0"] = scalar_string(f.r0);
            emit(out);
        } else if (app_cmd->parsed()) {
            const Partition lam = Partition::parse(part_text);
            if (!z_text.empty()) {
                emit(poly_json(wronskian_appell_generic(parse_rational_list(z_text), lam), "x"));
            } else {
                emit(poly_json(wronskian_appell(p_arg, lam, AppellMethod::determinant), "x"));
            }
        } else if (ch->parsed()) {
            const Partition lam = Partition::parse(part_text);
            json out;
            out["value"] = scalar_string(character_path_sum(lam, p_arg, j_arg));
            emit(out);
        } else if (lagc->parsed()) {
            const Partition lam = Partition::parse(part_text);
            const QuotientData2 q = core_and_quotient_2(lam);
            const Rat alpha_k = Rat(-1, 2) - Rat(static_cast<long>(q.mu.length())) +
                                Rat(static_cast<long>(q.nu.length())) - Rat(q.k);
            const RatPoly lhs = to_rational(remainder_polynomial(lam).remainder);
            RatPoly rhs = wronskian_laguerre(q.mu, q.nu, alpha_k).scaled_argument(Rat(1, 2));
            rhs = Rat(Int(1) << static_cast<unsigned>(q.quotient_size())) * rhs;
            json out;
            out["alpha_k"] = scalar_string(alpha_k);
            out["equal"] = lhs == rhs;
            out["lhs"] = poly_json(lhs, "x");
            out["rhs"] = poly_json(rhs, "x");
            emit(out);
            return lhs == rhs ? 0 : 2;
        } else if (lag->parsed()) {
            const Partition mu = Partition::parse(mu_text);
            const Partition nu = Partition::parse(nu_text);
            emit(poly_json(wronskian_laguerre(mu, nu, parse_rational(alpha_text)), "x"));
        } else if (psi_cmd->parsed()) {
            emit(poly_json(psi(Partition::parse(mu_text), Partition::parse(nu_text)).poly, "k"));
        } else if (cpoly->parsed()) {
            emit(poly_json(coeff_in_k(Partition::parse(mu_text), Partition::parse(nu_text), j_arg),
                           "k"));
        } else if (zr->parsed()) {
            const Partition lam = Partition::parse(part_text);
            const ZeroDataset data = zeros(lam, tol, p_arg);
            json out;
            out["partition"] = lam.to_string();
            out["p"] = data.p;
            out["origin_multiplicity"] = data.origin_multiplicity;
            json roots = json::array();
            for (const Zero& z : data.zeros)
                roots.push_back({{"re", z.re}, {"im", z.im}, {"multiplicity", z.multiplicity}});
            out["zeros"] = std::move(roots);
            if (!csv_path.empty()) {
                std::ofstream csv(csv_path);
                csv << "re,im,multiplicity\n";
                if (data.origin_multiplicity > 0)
                    csv << "0,0," << data.origin_multiplicity << "\n";
                for (const Zero& z : data.zeros)
                    csv << z.re << "," << z.im << "," << z.multiplicity << "\n";
            }
            emit(out);
        } else if (id->parsed()) {
            auto [lhs, rhs] = identity_check(parse_rational_list(xs_text));
            json out;
            out["lhs"] = scalar_string(lhs);
            out["rhs"] = scalar_string(rhs);
            out["equal"] = lhs == rhs;
            emit(out);
            return lhs == rhs ? 0 : 2;
        } else if (ver->parsed()) {
            return run_verify(max_size, p_list, seed);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
