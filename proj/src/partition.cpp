#include "whp/partition.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace whp {

Partition::Partition(std::vector<long> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0 || (i + 1 < parts_.size() && parts_[i] < parts_[i + 1]))
            throw std::invalid_argument("partition parts must be weakly decreasing and positive");
    }
}

Partition Partition::parse(const std::string& text) {
    if (text == "-" || text.empty()) return Partition{};
    std::vector<long> parts;
    std::stringstream ss(text);
    std::string token;
    while (std::getline(ss, token, ',')) {
        std::size_t pos = 0;
        long value = 0;
        try {
            value = std::stol(token, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("invalid partition token '" + token + "'");
        }
        if (pos != token.size() || value <= 0)
            throw std::invalid_argument("invalid partition token '" + token + "'");
        parts.push_back(value);
    }
    return Partition(std::move(parts));
}

long Partition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0L);
}

std::vector<long> Partition::degree_vector() const {
    std::vector<long> n(parts_.size());
    const long len = static_cast<long>(parts_.size());
    for (long i = 0; i < len; ++i) n[i] = parts_[i] + len - i - 1;
    return n;
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return {};
    std::vector<long> conj(parts_[0], 0);
    for (long row : parts_)
        for (long j = 0; j < row; ++j) ++conj[j];
    return Partition(std::move(conj));
}

bool Partition::contains(const Partition& other) const {
    if (other.length() > length()) return false;
    for (std::size_t i = 0; i < other.length(); ++i)
        if (other.parts_[i] > parts_[i]) return false;
    return true;
}

std::string Partition::to_string() const {
    if (parts_.empty()) return "-";
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

HookTable hook_table(const Partition& lambda) {
    HookTable table;
    const auto& parts = lambda.parts();
    const Partition conj = lambda.conjugate();
    table.hooks.resize(parts.size());
    table.contents.resize(parts.size());
    for (std::size_t i = 0; i < parts.size(); ++i) {
        table.hooks[i].resize(parts[i]);
        table.contents[i].resize(parts[i]);
        for (long j = 0; j < parts[i]; ++j) {
            const long arm = parts[i] - j - 1;
            const long leg = conj.parts()[j] - static_cast<long>(i) - 1;
            table.hooks[i][j] = arm + leg + 1;
            table.contents[i][j] = j - static_cast<long>(i);
        }
    }
    return table;
}

Int hook_product(const Partition& lambda) {
    Int product = 1;
    for (const auto& row : hook_table(lambda).hooks)
        for (long h : row) product *= h;
    return product;
}

long content_sum(const Partition& lambda) {
    long sum = 0;
    const auto& parts = lambda.parts();
    for (std::size_t i = 0; i < parts.size(); ++i)
        sum += parts[i] * (parts[i] - (2 * static_cast<long>(i) + 1));
    return sum / 2;
}

Int factorial(long n) {
    Int f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
}

Int binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    Int b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return b;
}

Int path_count(const Partition& lambda) {
    Int count = factorial(lambda.size());
    Int h = hook_product(lambda);
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), count.get_mpz_t(), h.get_mpz_t());
    if (r != 0) throw std::logic_error("hook product does not divide |lambda|!");
    return q;
}

namespace {

// Memo for skew path counts, keyed on the partition pair.
std::map<std::pair<std::vector<long>, std::vector<long>>, Int> skew_memo;
std::mutex skew_memo_mutex;

Int skew_path_count_impl(const Partition& lambda, const Partition& mu) {
    if (lambda == mu) return 1;
    const auto key = std::make_pair(lambda.parts(), mu.parts());
    {
        std::lock_guard<std::mutex> lock(skew_memo_mutex);
        auto it = skew_memo.find(key);
        if (it != skew_memo.end()) return it->second;
    }
    Int total = 0;
    for (const Partition& nu : covers_below(lambda))
        if (nu.contains(mu)) total += skew_path_count_impl(nu, mu);
    {
        std::lock_guard<std::mutex> lock(skew_memo_mutex);
        skew_memo.emplace(key, total);
    }
    return total;
}

}  // namespace

Int skew_path_count(const Partition& lambda, const Partition& mu) {
    if (!lambda.contains(mu))
        throw std::invalid_argument("skew_path_count: mu is not contained in lambda");
    if (mu.empty()) return path_count(lambda);
    return skew_path_count_impl(lambda, mu);
}

std::vector<Partition> covers_below(const Partition& lambda) {
    std::vector<Partition> result;
    const auto& parts = lambda.parts();
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i + 1 == parts.size() || parts[i] > parts[i + 1]) {
            std::vector<long> copy = parts;
            --copy[i];
            result.emplace_back(std::move(copy));
        }
    }
    return result;
}

std::vector<Partition> covers_above(const Partition& lambda) {
    std::vector<Partition> result;
    const auto& parts = lambda.parts();
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i == 0 || parts[i] < parts[i - 1]) {
            std::vector<long> copy = parts;
            ++copy[i];
            result.emplace_back(std::move(copy));
        }
    }
    std::vector<long> extended = parts;
    extended.push_back(1);
    result.emplace_back(std::move(extended));
    return result;
}

namespace {

void enumerate_rec(long n, long max_part, std::vector<long>& current,
                   std::vector<Partition>& out) {
    if (n == 0) {
        out.emplace_back(current);
        return;
    }
    for (long first = std::min(n, max_part); first >= 1; --first) {
        current.push_back(first);
        enumerate_rec(n - first, first, current, out);
        current.pop_back();
    }
}

}  // namespace

namespace {

void sub_partitions_rec(const std::vector<long>& bound, std::size_t row, long prev,
                        std::vector<long>& current, std::vector<Partition>& out) {
    out.emplace_back(current);
    if (row >= bound.size()) return;
    for (long value = std::min(prev, bound[row]); value >= 1; --value) {
        current.push_back(value);
        sub_partitions_rec(bound, row + 1, value, current, out);
        current.pop_back();
    }
}

}  // namespace

std::vector<Partition> sub_partitions(const Partition& lambda) {
    std::vector<Partition> out;
    std::vector<long> current;
    sub_partitions_rec(lambda.parts(), 0, lambda.part(0), current, out);
    return out;
}

std::vector<Partition> enumerate_partitions(long n) {
    if (n < 0) throw std::invalid_argument("enumerate_partitions: n must be non-negative");
    std::vector<Partition> out;
    std::vector<long> current;
    enumerate_rec(n, n, current, out);
    if (n == 0) out = {Partition{}};
    return out;
}

}  // namespace whp
