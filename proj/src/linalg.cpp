#include "logsurf/linalg.hpp"

#include <cstddef>

namespace logsurf {

namespace {

// Multiplies each row (matrix and rhs alike) by the lcm of its denominators
// so the elimination below runs over integers. Row scales are positive, so
// determinant signs are unchanged and solutions are unchanged.
struct ClearedSystem {
    std::vector<std::vector<Int>> a;
    std::vector<Int> b;
};

ClearedSystem clear_rows(const Matrix& m, const std::vector<Rational>* rhs) {
    const std::size_t n = m.size();
    ClearedSystem out;
    out.a.resize(n);
    if (rhs) out.b.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (m[i].size() != n) throw InputError("matrix is not square");
        Int l = 1;
        for (const auto& e : m[i]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), e.get_den().get_mpz_t());
        if (rhs) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), (*rhs)[i].get_den().get_mpz_t());
        out.a[i].reserve(n);
        for (const auto& e : m[i]) {
            Rational scaled = e * l;
            out.a[i].push_back(scaled.get_num());
        }
        if (rhs) {
            Rational scaled = (*rhs)[i] * l;
            out.b[i] = scaled.get_num();
        }
    }
    return out;
}

} // namespace

std::vector<int> leading_minor_signs(const Matrix& m) {
    const std::size_t n = m.size();
    std::vector<int> signs;
    if (n == 0) return signs;
    auto sys = clear_rows(m, nullptr);
    auto& a = sys.a;
    Int prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        signs.push_back(sgn(a[k][k]));
        if (a[k][k] == 0) break; // minor vanished; cannot eliminate further
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return signs;
}

std::vector<Rational> solve_linear(const Matrix& m, const std::vector<Rational>& rhs) {
    const std::size_t n = m.size();
    if (rhs.size() != n) throw InputError("rhs size does not match matrix");
    if (n == 0) return {};
    auto sys = clear_rows(m, &rhs);
    auto& a = sys.a;
    auto& b = sys.b;

    Int prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        if (a[k][k] == 0) {
            // Rows at or below k are interchangeable here: entries are still
            // k-step minors of a row-permuted original, so the exact-division
            // property below is unaffected by the swap.
            std::size_t p = k + 1;
            while (p < n && a[p][k] == 0) ++p;
            if (p == n) throw PreconditionError("singular linear system");
            std::swap(a[k], a[p]);
            std::swap(b[k], b[p]);
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            Int t = b[i] * a[k][k] - a[i][k] * b[k];
            mpz_divexact(b[i].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            a[i][k] = 0;
        }
        prev = a[k][k];
    }

    std::vector<Rational> x(n);
    for (std::size_t ii = n; ii-- > 0;) {
        Rational acc(b[ii]);
        for (std::size_t j = ii + 1; j < n; ++j) acc -= Rational(a[ii][j]) * x[j];
        x[ii] = acc / Rational(a[ii][ii]);
        x[ii].canonicalize();
    }
    return x;
}

} // namespace logsurf
