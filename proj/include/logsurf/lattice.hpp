#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "logsurf/linalg.hpp"
#include "logsurf/rational.hpp"

namespace logsurf {

// Finite formal rational combination of named curve classes. Zero
// coefficients are never stored, so equality of the underlying maps is
// equality of divisors.
class Divisor {
public:
    Divisor() = default;

    static Divisor unit(const std::string& cls) {
        Divisor d;
        d.coeffs_[cls] = 1;
        return d;
    }

    Rational coeff(const std::string& cls) const {
        auto it = coeffs_.find(cls);
        return it == coeffs_.end() ? Rational(0) : it->second;
    }

    Divisor& set(const std::string& cls, const Rational& value) {
        if (value == 0)
            coeffs_.erase(cls);
        else
            coeffs_[cls] = value;
        return *this;
    }

    Divisor& add(const std::string& cls, const Rational& value) {
        return set(cls, coeff(cls) + value);
    }

    bool zero() const { return coeffs_.empty(); }

    std::vector<std::string> support() const {
        std::vector<std::string> s;
        s.reserve(coeffs_.size());
        for (const auto& [cls, c] : coeffs_) s.push_back(cls);
        return s;
    }

    const std::map<std::string, Rational>& coefficients() const { return coeffs_; }

    Divisor& operator+=(const Divisor& o) {
        for (const auto& [cls, c] : o.coeffs_) add(cls, c);
        return *this;
    }
    Divisor& operator-=(const Divisor& o) {
        for (const auto& [cls, c] : o.coeffs_) add(cls, -c);
        return *this;
    }
    Divisor& operator*=(const Rational& s) {
        if (s == 0) {
            coeffs_.clear();
            return *this;
        }
        for (auto& [cls, c] : coeffs_) c *= s;
        return *this;
    }

    friend Divisor operator+(Divisor a, const Divisor& b) { return a += b; }
    friend Divisor operator-(Divisor a, const Divisor& b) { return a -= b; }
    friend Divisor operator*(const Rational& s, Divisor d) { return d *= s; }
    friend Divisor operator-(Divisor a) { return a *= Rational(-1); }
    friend bool operator==(const Divisor& a, const Divisor& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const Divisor& a, const Divisor& b) { return !(a == b); }

private:
    std::map<std::string, Rational> coeffs_;
};

// Reduced cycle: a set of distinct class names.
using Cycle = std::vector<std::string>;

struct BoundaryComponent {
    std::string cls;
    long genus = 0;
};

// An abstract surface: named classes with a symmetric rational pairing, a
// canonical divisor, the topological Euler number, and the designated
// boundary components (with their genera) whose sum is the divisor D.
class SurfaceModel {
public:
    SurfaceModel() = default;
    SurfaceModel(std::vector<std::string> classes,
                 Matrix intersection,
                 Divisor canonical,
                 long euler_top,
                 std::vector<BoundaryComponent> boundary);

    bool has_class(const std::string& cls) const { return index_.count(cls) != 0; }
    std::size_t index(const std::string& cls) const;

    const std::vector<std::string>& classes() const { return classes_; }
    const Matrix& intersection() const { return intersection_; }
    const Divisor& canonical() const { return canonical_; }
    long euler_top() const { return euler_top_; }
    const std::vector<BoundaryComponent>& boundary() const { return boundary_; }

    // Sum of the designated boundary classes (the divisor D).
    Divisor boundary_divisor() const;

    Rational pair(std::size_t i, std::size_t j) const { return intersection_[i][j]; }

private:
    std::vector<std::string> classes_;
    std::map<std::string, std::size_t> index_;
    Matrix intersection_;
    Divisor canonical_;
    long euler_top_ = 0;
    std::vector<BoundaryComponent> boundary_;
};

// Bilinear intersection product. Throws InputError when a divisor touches a
// class the model does not know.
Rational intersect(const Divisor& a, const Divisor& b, const SurfaceModel& model);

// All coefficients >= 0.
bool is_effective(const Divisor& d);

// Coefficientwise partial order: b - a is effective.
bool leq(const Divisor& a, const Divisor& b);

// Principal submatrix of the intersection form on the cycle's classes.
Matrix cycle_matrix(const Cycle& cycle, const SurfaceModel& model);

// Sylvester's criterion with exact fraction-free minors: the cycle's
// intersection matrix M is negative definite iff (-1)^k det(M_k) > 0 for
// every leading principal minor. The empty cycle counts as negative
// definite. Throws InputError on repeated or unknown classes.
bool is_negative_definite(const Cycle& cycle, const SurfaceModel& model);

} // namespace logsurf
