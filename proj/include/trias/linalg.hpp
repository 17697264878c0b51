#pragma once

#include <vector>

#include "fields.hpp"

namespace trias {

template <class K>
using Vec = std::vector<K>;

template <class K>
using Mat = std::vector<std::vector<K>>; // row-major

template <class K>
Vec<K> zero_vec(size_t n, const K& sample) {
    return Vec<K>(n, zero_like(sample));
}

template <class K>
Vec<K> add(const Vec<K>& a, const Vec<K>& b) {
    if (a.size() != b.size()) throw DimensionError("vector length mismatch");
    Vec<K> r = a;
    for (size_t i = 0; i < b.size(); ++i) r[i] = r[i] + b[i];
    return r;
}

template <class K>
Vec<K> scale(const K& c, const Vec<K>& a) {
    Vec<K> r = a;
    for (auto& x : r) x = c * x;
    return r;
}

template <class K>
Vec<K> mat_vec(const Mat<K>& m, const Vec<K>& u) {
    size_t n = m.size();
    if (u.size() != n) throw DimensionError("matrix/vector size mismatch");
    Vec<K> r = zero_vec(n, u[0]);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) r[i] = r[i] + m[i][j] * u[j];
    return r;
}

template <class K>
Mat<K> mat_mul(const Mat<K>& a, const Mat<K>& b) {
    size_t n = a.size();
    Mat<K> r(n, Vec<K>(n, zero_like(a[0][0])));
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k)
            for (size_t j = 0; j < n; ++j) r[i][j] = r[i][j] + a[i][k] * b[k][j];
    return r;
}

template <class K>
Mat<K> identity_mat(size_t n, const K& sample) {
    Mat<K> r(n, Vec<K>(n, zero_like(sample)));
    for (size_t i = 0; i < n; ++i) r[i][i] = one_like(sample);
    return r;
}

// cofactor determinant; fine for the n <= 4 sizes this toolkit handles
template <class K>
K det(const Mat<K>& m) {
    size_t n = m.size();
    if (n == 0) throw DimensionError("empty matrix");
    if (n == 1) return m[0][0];
    if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
    K acc = zero_like(m[0][0]);
    for (size_t j = 0; j < n; ++j) {
        Mat<K> minor;
        for (size_t r = 1; r < n; ++r) {
            Vec<K> row;
            for (size_t c = 0; c < n; ++c)
                if (c != j) row.push_back(m[r][c]);
            minor.push_back(std::move(row));
        }
        K term = m[0][j] * det(minor);
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

template <class K>
Mat<K> invert(const Mat<K>& m) {
    size_t n = m.size();
    K d = det(m);
    if (d.is_zero()) throw SingularMatrixError("matrix is singular");
    K dinv = d.inv();
    if (n == 1) return {{dinv}};
    Mat<K> adj(n, Vec<K>(n, zero_like(d)));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            Mat<K> minor;
            for (size_t r = 0; r < n; ++r) {
                if (r == i) continue;
                Vec<K> row;
                for (size_t c = 0; c < n; ++c)
                    if (c != j) row.push_back(m[r][c]);
                minor.push_back(std::move(row));
            }
            K cof = det(minor);
            if ((i + j) % 2 == 1) cof = -cof;
            adj[j][i] = cof * dinv; // transpose in place
        }
    }
    return adj;
}

// rank by Gaussian elimination over an exact field; rows = arbitrary count
template <class K>
size_t rank(Mat<K> m) {
    if (m.empty()) return 0;
    size_t rows = m.size(), cols = m[0].size(), r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && m[piv][c].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[r]);
        K inv = m[r][c].inv();
        for (size_t j = c; j < cols; ++j) m[r][j] = m[r][j] * inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            K f = m[i][c];
            for (size_t j = c; j < cols; ++j) m[i][j] = m[i][j] - f * m[r][j];
        }
        ++r;
    }
    return r;
}

} // namespace trias
