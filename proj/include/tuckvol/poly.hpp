#pragma once

#include "tuckvol/rational.hpp"

#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tuckvol {

// Univariate polynomial over the rationals, dense coefficient form.
// coefficients[k] is the coefficient of t^k; trailing zeros are stripped, so
// the zero polynomial has an empty coefficient vector and degree() == -1.
class Poly {
public:
    Poly() = default;

    explicit Poly(std::vector<Rational> coefficients)
        : coeffs_(std::move(coefficients)) {
        normalize();
    }

    Poly(std::initializer_list<Rational> coefficients)
        : coeffs_(coefficients) {
        normalize();
    }

    static Poly zero() { return Poly(); }

    static Poly constant(const Rational& c) { return Poly({c}); }

    const std::vector<Rational>& coefficients() const { return coeffs_; }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    bool is_zero() const { return coeffs_.empty(); }

    bool is_constant() const { return coeffs_.size() <= 1; }

    Rational coefficient(std::size_t power) const {
        return power < coeffs_.size() ? coeffs_[power] : Rational(0);
    }

    // Exact Horner evaluation.
    Rational eval(const Rational& t) const {
        Rational acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
            acc = acc * t + *it;
        return acc;
    }

    Poly& operator+=(const Poly& other) {
        if (other.coeffs_.size() > coeffs_.size())
            coeffs_.resize(other.coeffs_.size(), Rational(0));
        for (std::size_t i = 0; i < other.coeffs_.size(); ++i)
            coeffs_[i] += other.coeffs_[i];
        normalize();
        return *this;
    }

    Poly& operator-=(const Poly& other) {
        if (other.coeffs_.size() > coeffs_.size())
            coeffs_.resize(other.coeffs_.size(), Rational(0));
        for (std::size_t i = 0; i < other.coeffs_.size(); ++i)
            coeffs_[i] -= other.coeffs_[i];
        normalize();
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

    friend Poly operator*(const Poly& p, const Rational& s) {
        if (s == 0) return Poly();
        std::vector<Rational> out = p.coeffs_;
        for (auto& c : out) c *= s;
        return Poly(std::move(out));
    }

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    // Human-readable form for reports and test diagnostics, e.g. "1/2 - t + 1/2 t^2".
    std::string str() const {
        if (coeffs_.empty()) return "0";
        std::string out;
        for (std::size_t k = 0; k < coeffs_.size(); ++k) {
            if (coeffs_[k] == 0) continue;
            if (!out.empty()) out += coeffs_[k] > 0 ? " + " : " - ";
            else if (coeffs_[k] < 0) out += "-";
            const Rational a = abs_of(coeffs_[k]);
            if (k == 0) {
                out += rational_str(a);
            } else {
                if (a != 1) out += rational_str(a) + " ";
                out += k == 1 ? "t" : "t^" + std::to_string(k);
            }
        }
        return out.empty() ? "0" : out;
    }

private:
    void normalize() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
};

// Exact Lagrange interpolation: the unique polynomial of degree < n through
// n sample points. Duplicate abscissae are rejected.
inline Poly poly_interpolate(std::span<const std::pair<Rational, Rational>> points) {
    if (points.empty())
        throw std::invalid_argument("poly_interpolate: no sample points");
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (points[i].first == points[j].first)
                throw std::invalid_argument(
                    "poly_interpolate: duplicate abscissa " + rational_str(points[i].first));

    Poly result;
    for (std::size_t i = 0; i < points.size(); ++i) {
        // Basis polynomial prod_{j != i} (t - x_j) / (x_i - x_j), scaled by y_i.
        std::vector<Rational> basis{Rational(1)};
        Rational denom(1);
        for (std::size_t j = 0; j < points.size(); ++j) {
            if (j == i) continue;
            std::vector<Rational> next(basis.size() + 1, Rational(0));
            for (std::size_t k = 0; k < basis.size(); ++k) {
                next[k] -= basis[k] * points[j].first;
                next[k + 1] += basis[k];
            }
            basis = std::move(next);
            denom *= points[i].first - points[j].first;
        }
        const Rational scale = points[i].second / denom;
        for (auto& c : basis) c *= scale;
        result += Poly(std::move(basis));
    }
    return result;
}

inline Poly poly_interpolate(const std::vector<std::pair<Rational, Rational>>& points) {
    return poly_interpolate(std::span<const std::pair<Rational, Rational>>(points));
}

inline Rational poly_eval(const Poly& p, const Rational& t) { return p.eval(t); }

}  // namespace tuckvol
