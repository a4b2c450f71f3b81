#pragma once

// Reference implementations for cross-checking the library. Everything here
// is dense, naive, and written directly from the defining formulas; nothing
// calls the library beyond Scalar arithmetic.

#include <cstddef>
#include <optional>
#include <tuple>
#include <vector>

#include "cotlsa/scalar.hpp"

namespace oracle {

using cotlsa::Scalar;
using Vec = std::vector<Scalar>;
using Mat = std::vector<Vec>;  // row-major
// T[i][j][k]: coefficient of x_k in x_i * x_j
using Tensor = std::vector<std::vector<Vec>>;

inline Tensor zero_tensor(std::size_t d) { return Tensor(d, std::vector<Vec>(d, Vec(d))); }

// E ordering {z, e_1, f_1, ..., e_n, f_n, t}
inline std::size_t Z(unsigned) { return 0; }
inline std::size_t E(unsigned, unsigned i) { return 2 * i - 1; }
inline std::size_t F(unsigned, unsigned i) { return 2 * i; }
inline std::size_t T(unsigned n) { return 2 * n + 1; }

inline void set_bracket(Tensor& c, std::size_t i, std::size_t j, std::size_t k, const Scalar& v) {
    c[i][j][k] = v;
    c[j][i][k] = -v;
}

/// T*g structure tensor straight from the bracket table.
inline Tensor tg(unsigned n) {
    Tensor c = zero_tensor(2 * n + 2);
    for (unsigned i = 1; i < n; ++i) {
        set_bracket(c, T(n), E(n, i + 1), E(n, i), 1);
        set_bracket(c, T(n), F(n, i + 1), F(n, i), -1);
        set_bracket(c, E(n, i + 1), F(n, n - i + 1), Z(n), 1);
    }
    return c;
}

inline Vec apply(const Tensor& t, const Vec& x, const Vec& y) {
    const std::size_t d = t.size();
    Vec out(d);
    for (std::size_t i = 0; i < d; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < d; ++j) {
            if (y[j].is_zero()) continue;
            const Scalar s = x[i] * y[j];
            for (std::size_t k = 0; k < d; ++k)
                if (!t[i][j][k].is_zero()) out[k] += s * t[i][j][k];
        }
    }
    return out;
}

inline Vec unit(std::size_t d, std::size_t i) {
    Vec v(d);
    v[i] = 1;
    return v;
}

inline Vec add(Vec a, const Vec& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

inline Vec sub(Vec a, const Vec& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    return a;
}

inline bool is_zero(const Vec& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

/// Failing triples i<j<k of the Jacobi identity.
inline std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> jacobi_failures(const Tensor& c) {
    std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> out;
    const std::size_t d = c.size();
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j)
            for (std::size_t k = j + 1; k < d; ++k) {
                const Vec a = unit(d, i), b = unit(d, j), e = unit(d, k);
                Vec s = apply(c, a, apply(c, b, e));
                s = add(s, apply(c, b, apply(c, e, a)));
                s = add(s, apply(c, e, apply(c, a, b)));
                if (!is_zero(s)) out.emplace_back(i, j, k);
            }
    return out;
}

/// Sequences by the recurrences alpha_{i+1} = 2 - 1/alpha_i,
/// beta_{i+1} = -2 - 1/beta_i starting from alpha_1 = alpha, beta_1 = beta.
struct Sequences {
    Vec alpha, beta, gamma;
};

inline Sequences recurrence_sequences(unsigned n, const Scalar& a, const Scalar& b) {
    Sequences s;
    s.alpha.push_back(a);
    s.beta.push_back(b);
    for (unsigned i = 1; i < n; ++i) {
        s.alpha.push_back(Scalar(2) - s.alpha.back().inverse());
        s.beta.push_back(Scalar(-2) - s.beta.back().inverse());
    }
    // gamma_i = (alpha_i beta_{n-i} - beta_{n-i}) / (2 alpha_i beta_{n-i} + alpha_i - beta_{n-i})
    for (unsigned i = 1; i < n; ++i) {
        const Scalar& ai = s.alpha[i - 1];
        const Scalar& bj = s.beta[n - i - 1];
        s.gamma.push_back((ai * bj - bj) / (Scalar(2) * ai * bj + ai - bj));
    }
    return s;
}

/// Product tensor of the family from explicit sequences.
inline Tensor delta(unsigned n, const Sequences& s) {
    Tensor p = zero_tensor(2 * n + 2);
    for (unsigned i = 1; i < n; ++i) {
        const Scalar& a = s.alpha[i - 1];
        const Scalar& b = s.beta[i - 1];
        const Scalar& g = s.gamma[i - 1];
        p[T(n)][E(n, i + 1)][E(n, i)] = a;
        p[E(n, i + 1)][T(n)][E(n, i)] = a - 1;
        p[T(n)][F(n, i + 1)][F(n, i)] = b;
        p[F(n, i + 1)][T(n)][F(n, i)] = b + 1;
        p[E(n, i + 1)][F(n, n - i + 1)][Z(n)] = g;
        p[F(n, n - i + 1)][E(n, i + 1)][Z(n)] = g - 1;
    }
    return p;
}

/// Triples (i,j,k) where (x_i,x_j,x_k) != (x_j,x_i,x_k) for the associator.
inline std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> associator_failures(const Tensor& p) {
    std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> out;
    const std::size_t d = p.size();
    auto assoc = [&](std::size_t i, std::size_t j, std::size_t k) {
        const Vec a = unit(d, i), b = unit(d, j), c = unit(d, k);
        return sub(apply(p, a, apply(p, b, c)), apply(p, apply(p, a, b), c));
    };
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k)
                if (assoc(i, j, k) != assoc(j, i, k)) out.emplace_back(i, j, k);
    return out;
}

/// Pairs i<j where x_i*x_j - x_j*x_i != [x_i, x_j].
inline std::vector<std::pair<std::size_t, std::size_t>> commutator_failures(const Tensor& p, const Tensor& c) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    const std::size_t d = p.size();
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j)
            if (sub(p[i][j], p[j][i]) != c[i][j]) out.emplace_back(i, j);
    return out;
}

/// Rank by plain Gaussian elimination on a copy.
inline std::size_t rank(Mat m) {
    std::size_t r = 0;
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m[piv][c].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[r]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            const Scalar f = m[i][c] / m[r][c];
            for (std::size_t k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
        }
        ++r;
    }
    return r;
}

/// Independent row basis of the given vectors.
inline Mat basis_of(const Mat& vs) {
    Mat out;
    for (const auto& v : vs) {
        Mat trial = out;
        trial.push_back(v);
        if (rank(trial) > out.size()) out.push_back(v);
    }
    return out;
}

/// Dimensions of g, [g,g], [[g,g],g], ... down to 0 (or until it repeats).
inline std::vector<std::size_t> lcs_dims(const Tensor& c) {
    const std::size_t d = c.size();
    Mat cur;
    for (std::size_t i = 0; i < d; ++i) cur.push_back(unit(d, i));
    std::vector<std::size_t> dims{d};
    for (std::size_t step = 0; step <= d; ++step) {
        Mat next;
        for (const auto& u : cur)
            for (std::size_t j = 0; j < d; ++j) next.push_back(apply(c, u, unit(d, j)));
        Mat b = basis_of(next);
        if (b.size() == cur.size()) break;
        dims.push_back(b.size());
        if (b.empty()) break;
        cur = b;
    }
    return dims;
}

/// Dimension of the center: d - rank of the stacked ad maps.
inline std::size_t center_dim(const Tensor& c) {
    const std::size_t d = c.size();
    // x central iff sum_i x_i c[i][j][k] = 0 for all j, k
    Mat rows;
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = 0; k < d; ++k) {
            Vec row(d);
            for (std::size_t i = 0; i < d; ++i) row[i] = c[i][j][k];
            rows.push_back(row);
        }
    return d - rank(rows);
}

/// Solves A x = b for square invertible A, nullopt when singular.
inline std::optional<Vec> solve(Mat a, Vec b) {
    const std::size_t n = a.size();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && a[piv][c].is_zero()) ++piv;
        if (piv == n) return std::nullopt;
        std::swap(a[piv], a[c]);
        std::swap(b[piv], b[c]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || a[i][c].is_zero()) continue;
            const Scalar f = a[i][c] / a[c][c];
            for (std::size_t k = c; k < n; ++k) a[i][k] -= f * a[c][k];
            b[i] -= f * b[c];
        }
    }
    Vec x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
    return x;
}

/// omega_lambda as a dense skew matrix in the E ordering.
inline Mat omega_lambda(unsigned n, const Scalar& lambda) {
    const std::size_t d = 2 * n + 2;
    Mat w(d, Vec(d));
    w[T(n)][Z(n)] = 1;
    w[Z(n)][T(n)] = -1;
    for (unsigned i = 1; i <= n; ++i) {
        const Scalar li = lambda - Scalar(i) + 1;
        w[E(n, i)][F(n, n - i + 1)] = li;
        w[F(n, n - i + 1)][E(n, i)] = -li;
    }
    return w;
}

/// Cyclic-sum failures of a two-form on a Lie algebra.
inline std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> closed_failures(const Mat& w, const Tensor& c) {
    std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> out;
    const std::size_t d = w.size();
    auto form = [&](std::size_t a, const Vec& v) {
        Scalar s;
        for (std::size_t k = 0; k < d; ++k) s += w[a][k] * v[k];
        return s;
    };
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j)
            for (std::size_t k = j + 1; k < d; ++k) {
                const Scalar s = form(i, c[j][k]) + form(j, c[k][i]) + form(k, c[i][j]);
                if (!s.is_zero()) out.emplace_back(i, j, k);
            }
    return out;
}

/// Induced product from w(x_i*x_j, x_k) = -w(x_j, [x_i, x_k]) solved pair by pair.
inline std::optional<Tensor> induced_product(const Mat& w, const Tensor& c) {
    const std::size_t d = w.size();
    // unknown v = x_i*x_j: sum_m v_m w[m][k] = rhs_k, so the system matrix is w^T
    Mat wt(d, Vec(d));
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) wt[a][b] = w[b][a];
    Tensor p = zero_tensor(d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Vec rhs(d);
            for (std::size_t k = 0; k < d; ++k) {
                Scalar s;
                for (std::size_t m = 0; m < d; ++m) s += w[j][m] * c[i][k][m];
                rhs[k] = -s;
            }
            auto v = solve(wt, rhs);
            if (!v) return std::nullopt;
            p[i][j] = *v;
        }
    return p;
}

}  // namespace oracle
