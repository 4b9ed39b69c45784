#pragma once

#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "altsum/multiindex.hpp"
#include "altsum/rational.hpp"

namespace altsum {

/// Exact binomial coefficient via the Pascal recurrence (cached rows).
inline Int binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    static std::mutex mu;
    static std::vector<std::vector<Int>> rows{{Int(1)}};
    std::lock_guard<std::mutex> lock(mu);
    while (static_cast<int>(rows.size()) <= n) {
        const auto& prev = rows.back();
        std::vector<Int> row(prev.size() + 1, Int(1));
        for (std::size_t i = 1; i + 1 < row.size(); ++i) row[i] = prev[i - 1] + prev[i];
        rows.push_back(std::move(row));
    }
    return rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

/// One order's worth of summation coefficients, exact.
///
/// gamma[j-1] = (-1)^{j-1} (2/j) C(2m, m+j) / C(2m, m)   for j = 1..m
/// tau[j-1]   = sum of gamma[j-1+2b] over b >= 0 while j+2b <= m
struct CoefficientTable {
    int m = 0;
    std::vector<Rational> gamma;
    std::vector<Rational> tau;

    const Rational& gamma_at(int j) const {
        if (j < 1 || j > m) throw std::out_of_range("gamma index out of [1, m]");
        return gamma[static_cast<std::size_t>(j - 1)];
    }
    const Rational& tau_at(int j) const {
        if (j < 1 || j > m) throw std::out_of_range("tau index out of [1, m]");
        return tau[static_cast<std::size_t>(j - 1)];
    }
};

inline CoefficientTable build_coefficient_table(int m) {
    if (m < 1) throw std::invalid_argument("coefficient table order must be >= 1");
    CoefficientTable t;
    t.m = m;
    t.gamma.reserve(static_cast<std::size_t>(m));
    const Int central = binomial(2 * m, m);
    for (int j = 1; j <= m; ++j) {
        Rational g = make_rational(2 * binomial(2 * m, m + j), Int(j) * central);
        if (j % 2 == 0) g = -g;
        t.gamma.push_back(g);
    }
    t.tau.assign(static_cast<std::size_t>(m), Rational(0));
    for (int j = 1; j <= m; ++j) {
        Rational s(0);
        for (int jj = j; jj <= m; jj += 2) s += t.gamma[static_cast<std::size_t>(jj - 1)];
        t.tau[static_cast<std::size_t>(j - 1)] = s;
    }
    return t;
}

/// Cached table per order; references stay valid for the process lifetime.
inline const CoefficientTable& gamma_table(int m) {
    if (m < 1) throw std::invalid_argument("coefficient table order must be >= 1");
    static std::mutex mu;
    static std::map<int, CoefficientTable> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(m);
    if (it == cache.end()) it = cache.emplace(m, build_coefficient_table(m)).first;
    return it->second;
}

/// Product of per-axis tau values over a multi-index of orders in [1, m].
inline Rational tau_of(const CoefficientTable& table, const MultiIndex& multi_j) {
    Rational prod(1);
    for (int j : multi_j) prod *= table.tau_at(j);
    return prod;
}

/// Product of per-axis gamma values over a multi-index of orders in [1, m].
inline Rational gamma_of(const CoefficientTable& table, const MultiIndex& multi_j) {
    Rational prod(1);
    for (int j : multi_j) prod *= table.gamma_at(j);
    return prod;
}

/// j-th Bernoulli number by the recurrence sum_{i=0}^{j} C(j+1,i) B_i = 0,
/// B_0 = 1 (so B_1 = -1/2).
inline Rational bernoulli(int j) {
    if (j < 0) throw std::invalid_argument("bernoulli index must be >= 0");
    static std::mutex mu;
    static std::vector<Rational> cache{Rational(1)};
    std::lock_guard<std::mutex> lock(mu);
    while (static_cast<int>(cache.size()) <= j) {
        const int n = static_cast<int>(cache.size());
        Rational s(0);
        for (int i = 0; i < n; ++i) s += Rational(binomial(n + 1, i)) * cache[static_cast<std::size_t>(i)];
        cache.push_back(-s / Rational(n + 1));
    }
    return cache[static_cast<std::size_t>(j)];
}

}  // namespace altsum
