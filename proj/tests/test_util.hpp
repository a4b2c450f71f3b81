#pragma once

#include <cstdint>
#include <random>

#include "cotlsa/algebra.hpp"
#include "cotlsa/lsa.hpp"
#include "cotlsa/symplectic.hpp"
#include "oracle.hpp"

namespace testutil {

inline oracle::Tensor tensor_of(const cotlsa::LieAlgebra& L) {
    const std::size_t d = L.dim();
    oracle::Tensor t = oracle::zero_tensor(d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (const auto& [k, c] : L.basis_bracket(i, j)) t[i][j][k] = c;
    return t;
}

inline oracle::Tensor tensor_of(const cotlsa::LsaProduct& S) {
    const std::size_t d = S.dim();
    oracle::Tensor t = oracle::zero_tensor(d);
    for (const auto& e : S.entries()) t[e.i][e.j][e.k] = e.p;
    return t;
}

inline oracle::Mat mat_of(const cotlsa::Matrix& m) {
    oracle::Mat out(m.rows(), oracle::Vec(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m(r, c);
    return out;
}

/// Deterministic small rationals for property tests.
class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    cotlsa::Scalar scalar(long max_num = 9, long max_den = 6) {
        std::uniform_int_distribution<long> num(-max_num, max_num);
        std::uniform_int_distribution<long> den(1, max_den);
        return cotlsa::Scalar(num(rng_), den(rng_));
    }

    cotlsa::Vector vector(std::size_t n) {
        cotlsa::Vector v;
        for (std::size_t i = 0; i < n; ++i) v.push_back(scalar());
        return v;
    }

    cotlsa::Matrix matrix(std::size_t r, std::size_t c) {
        cotlsa::Matrix m(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) m(i, j) = scalar();
        return m;
    }

    std::size_t index(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }
    bool coin() { return std::uniform_int_distribution<int>(0, 1)(rng_) == 1; }

private:
    std::mt19937_64 rng_;
};

}  // namespace testutil
