#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "altsum/multiindex.hpp"
#include "altsum/rational.hpp"

namespace altsum {

/// Sparse multivariate polynomial with exact rational coefficients.
/// Drives the exact summation paths: evaluation at rational points,
/// partial derivatives, and per-variable antiderivatives are all exact.
class RationalPolynomial {
  public:
    using Terms = std::map<std::vector<int>, Rational>;

    explicit RationalPolynomial(int dim = 1) : dim_(dim) {
        if (dim < 1) throw std::invalid_argument("polynomial dimension must be >= 1");
    }

    static RationalPolynomial constant(int dim, const Rational& c) {
        RationalPolynomial p(dim);
        if (c != 0) p.terms_[std::vector<int>(static_cast<std::size_t>(dim), 0)] = c;
        return p;
    }

    static RationalPolynomial variable(int dim, int var) {
        RationalPolynomial p(dim);
        p.check_var(var);
        std::vector<int> e(static_cast<std::size_t>(dim), 0);
        e[static_cast<std::size_t>(var)] = 1;
        p.terms_[e] = 1;
        return p;
    }

    int dim() const { return dim_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && norm_l1(terms_.begin()->first) == 0);
    }

    Rational constant_value() const {
        if (terms_.empty()) return Rational(0);
        if (!is_constant()) throw std::invalid_argument("polynomial is not constant");
        return terms_.begin()->second;
    }

    long long total_degree() const {
        long long d = 0;
        for (const auto& [e, c] : terms_) d = std::max(d, norm_l1(e));
        return d;
    }

    void add_term(const std::vector<int>& expo, const Rational& coeff) {
        if (static_cast<int>(expo.size()) != dim_) throw std::invalid_argument("exponent arity mismatch");
        auto it = terms_.find(expo);
        if (it == terms_.end()) {
            if (coeff != 0) terms_[expo] = coeff;
        } else {
            it->second += coeff;
            if (it->second == 0) terms_.erase(it);
        }
    }

    RationalPolynomial operator-() const {
        RationalPolynomial r(dim_);
        for (const auto& [e, c] : terms_) r.terms_[e] = -c;
        return r;
    }

    RationalPolynomial& operator+=(const RationalPolynomial& o) {
        check_dim(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    RationalPolynomial& operator-=(const RationalPolynomial& o) {
        check_dim(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }

    friend RationalPolynomial operator+(RationalPolynomial a, const RationalPolynomial& b) { return a += b; }
    friend RationalPolynomial operator-(RationalPolynomial a, const RationalPolynomial& b) { return a -= b; }

    friend RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b) {
        a.check_dim(b);
        RationalPolynomial r(a.dim_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                std::vector<int> e(ea);
                for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    }

    RationalPolynomial& operator*=(const Rational& s) {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, c] : terms_) c *= s;
        return *this;
    }
    friend RationalPolynomial operator*(RationalPolynomial a, const Rational& s) { return a *= s; }
    friend RationalPolynomial operator*(const Rational& s, RationalPolynomial a) { return a *= s; }

    RationalPolynomial pow(long long e) const {
        if (e < 0) throw std::invalid_argument("polynomial power must be >= 0");
        RationalPolynomial acc = constant(dim_, 1);
        RationalPolynomial base = *this;
        while (e) {
            if (e & 1) acc = acc * base;
            if (e >>= 1) base = base * base;
        }
        return acc;
    }

    Rational eval(const RatVec& x) const {
        check_point(x.size());
        Rational s(0);
        for (const auto& [e, c] : terms_) {
            Rational t = c;
            for (std::size_t i = 0; i < x.size(); ++i)
                if (e[i] != 0) t *= rat_pow(x[i], e[i]);
            s += t;
        }
        return s;
    }

    double eval(const std::vector<double>& x) const {
        check_point(x.size());
        double s = 0.0;
        for (const auto& [e, c] : terms_) {
            double t = to_double(c);
            for (std::size_t i = 0; i < x.size(); ++i)
                for (int k = 0; k < e[i]; ++k) t *= x[i];
            s += t;
        }
        return s;
    }

    RationalPolynomial partial(int var) const {
        check_var(var);
        RationalPolynomial r(dim_);
        const std::size_t v = static_cast<std::size_t>(var);
        for (const auto& [e, c] : terms_) {
            if (e[v] == 0) continue;
            std::vector<int> d(e);
            --d[v];
            r.add_term(d, c * e[v]);
        }
        return r;
    }

    RationalPolynomial partial(const MultiIndex& alpha) const {
        if (static_cast<int>(alpha.size()) != dim_) throw std::invalid_argument("multi-index arity mismatch");
        RationalPolynomial r = *this;
        for (int v = 0; v < dim_; ++v)
            for (int k = 0; k < alpha[static_cast<std::size_t>(v)]; ++k) r = r.partial(v);
        return r;
    }

    /// Antiderivative in one variable with zero constant of integration.
    RationalPolynomial antiderivative(int var) const {
        check_var(var);
        RationalPolynomial r(dim_);
        const std::size_t v = static_cast<std::size_t>(var);
        for (const auto& [e, c] : terms_) {
            std::vector<int> a(e);
            ++a[v];
            r.add_term(a, c / Rational(a[v]));
        }
        return r;
    }

    /// Iterated antiderivative, once in every variable: F with F^{(1,..,1)} = f.
    RationalPolynomial antiderivative_all() const {
        RationalPolynomial r = *this;
        for (int v = 0; v < dim_; ++v) r = r.antiderivative(v);
        return r;
    }

  private:
    void check_dim(const RationalPolynomial& o) const {
        if (o.dim_ != dim_) throw std::invalid_argument("polynomial dimension mismatch");
    }
    void check_var(int var) const {
        if (var < 0 || var >= dim_) throw std::out_of_range("variable index out of range");
    }
    void check_point(std::size_t n) const {
        if (static_cast<int>(n) != dim_) throw std::invalid_argument("evaluation point arity mismatch");
    }

    int dim_;
    Terms terms_;
};

}  // namespace altsum
