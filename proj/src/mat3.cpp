#include "a2w/mat3.hpp"

#include "a2w/errors.hpp"

#include <algorithm>

namespace a2w {

MatQ MatQ::identity() {
    MatQ m;
    for (int i = 0; i < 3; ++i) m(i, i) = 1;
    return m;
}

MatQ MatQ::operator+(const MatQ& o) const {
    MatQ r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r(i, j) = (*this)(i, j) + o(i, j);
    return r;
}

MatQ MatQ::operator-(const MatQ& o) const {
    MatQ r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r(i, j) = (*this)(i, j) - o(i, j);
    return r;
}

MatQ MatQ::operator*(const MatQ& o) const {
    MatQ r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Rat s = 0;
            for (int k = 0; k < 3; ++k) s += (*this)(i, k) * o(k, j);
            r(i, j) = s;
        }
    return r;
}

MatQ MatQ::scaled(const Rat& s) const {
    MatQ r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r(i, j) = s * (*this)(i, j);
    return r;
}

Rat MatQ::det() const {
    const auto& m = a;
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

MatQ MatQ::inverse() const {
    Rat d = det();
    if (d == 0) throw SingularSystem("3x3 matrix not invertible");
    const auto& m = a;
    MatQ adj;
    adj(0, 0) = m[1][1] * m[2][2] - m[1][2] * m[2][1];
    adj(0, 1) = m[0][2] * m[2][1] - m[0][1] * m[2][2];
    adj(0, 2) = m[0][1] * m[1][2] - m[0][2] * m[1][1];
    adj(1, 0) = m[1][2] * m[2][0] - m[1][0] * m[2][2];
    adj(1, 1) = m[0][0] * m[2][2] - m[0][2] * m[2][0];
    adj(1, 2) = m[0][2] * m[1][0] - m[0][0] * m[1][2];
    adj(2, 0) = m[1][0] * m[2][1] - m[1][1] * m[2][0];
    adj(2, 1) = m[0][1] * m[2][0] - m[0][0] * m[2][1];
    adj(2, 2) = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    return adj.scaled(Rat(1) / d);
}

Poly MatQ::char_poly() const {
    // det(tI - M) = t^3 - tr t^2 + (sum of principal 2x2 minors) t - det.
    const auto& m = a;
    Rat c2 = m[0][0] * m[1][1] - m[0][1] * m[1][0] + m[0][0] * m[2][2] - m[0][2] * m[2][0] +
             m[1][1] * m[2][2] - m[1][2] * m[2][1];
    return Poly({-det(), c2, -trace(), Rat(1)});
}

MatP MatP::identity() {
    MatP m;
    for (int i = 0; i < 3; ++i) m(i, i) = Poly(Rat(1));
    return m;
}

MatP MatP::from_const(const MatQ& m) {
    MatP r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r(i, j) = Poly(m(i, j));
    return r;
}

MatP MatP::operator+(const MatP& o) const {
    MatP r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r(i, j) = (*this)(i, j) + o(i, j);
    return r;
}

MatP MatP::operator-(const MatP& o) const {
    MatP r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r(i, j) = (*this)(i, j) - o(i, j);
    return r;
}

MatP MatP::operator*(const MatP& o) const {
    MatP r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Poly s;
            for (int k = 0; k < 3; ++k) s += (*this)(i, k) * o(k, j);
            r(i, j) = s;
        }
    return r;
}

MatP MatP::scaled(const Poly& s) const {
    MatP r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r(i, j) = s * (*this)(i, j);
    return r;
}

MatQ MatP::eval(const Rat& x) const {
    MatQ r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r(i, j) = (*this)(i, j).eval(x);
    return r;
}

MatP MatP::derivative() const {
    MatP r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r(i, j) = (*this)(i, j).derivative();
    return r;
}

Poly MatP::det() const {
    const auto& m = a;
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

bool MatP::is_constant() const {
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (!(*this)(i, j).is_constant()) return false;
    return true;
}

int MatP::max_degree() const {
    int d = -1;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) d = std::max(d, (*this)(i, j).degree());
    return d;
}

bool char_poly_matches(const MatQ& m, const std::array<Rat, 3>& eigs) {
    Poly target({-eigs[0] * eigs[1] * eigs[2],
                 eigs[0] * eigs[1] + eigs[1] * eigs[2] + eigs[2] * eigs[0],
                 -(eigs[0] + eigs[1] + eigs[2]), Rat(1)});
    return m.char_poly() == target;
}

MatQ residue_of_form(const MatP& A, int at) {
    if (at == 0) return A.eval(0).scaled(-1);
    if (at == 1) return A.eval(1);
    throw InvalidParameter("residue_of_form: finite pole must be 0 or 1");
}

MatP gauge_transform(const MatP& A, const MatP& P) {
    Poly d = P.det();
    if (!d.is_constant() || d.is_zero())
        throw InvalidParameter("gauge_transform: gauge determinant must be a nonzero constant");
    const auto& m = P.a;
    MatP adj;
    adj(0, 0) = m[1][1] * m[2][2] - m[1][2] * m[2][1];
    adj(0, 1) = m[0][2] * m[2][1] - m[0][1] * m[2][2];
    adj(0, 2) = m[0][1] * m[1][2] - m[0][2] * m[1][1];
    adj(1, 0) = m[1][2] * m[2][0] - m[1][0] * m[2][2];
    adj(1, 1) = m[0][0] * m[2][2] - m[0][2] * m[2][0];
    adj(1, 2) = m[0][2] * m[1][0] - m[0][0] * m[1][2];
    adj(2, 0) = m[1][0] * m[2][1] - m[1][1] * m[2][0];
    adj(2, 1) = m[0][1] * m[2][0] - m[0][0] * m[2][1];
    adj(2, 2) = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    MatP Pinv = adj.scaled(Poly(Rat(1) / d.constant_term()));
    Poly zz1({Rat(0), Rat(-1), Rat(1)});  // z(z-1)
    return Pinv * A * P + (Pinv * P.derivative()).scaled(zz1);
}

std::vector<std::size_t> MatX::rref() {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
        std::size_t sel = r;
        while (sel < rows_ && a_[sel][c] == 0) ++sel;
        if (sel == rows_) continue;
        std::swap(a_[sel], a_[r]);
        Rat inv = Rat(1) / a_[r][c];
        for (std::size_t j = c; j < cols_; ++j) a_[r][j] *= inv;
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == r || a_[i][c] == 0) continue;
            Rat f = a_[i][c];
            for (std::size_t j = c; j < cols_; ++j) a_[i][j] -= f * a_[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::size_t MatX::rank() const {
    MatX copy = *this;
    return copy.rref().size();
}

std::vector<std::vector<Rat>> MatX::nullspace() const {
    MatX red = *this;
    std::vector<std::size_t> pivots = red.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Rat>> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rat> v(cols_, Rat(0));
        v[free] = 1;
        for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -red(k, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<Rat> MatX::solve(const std::vector<Rat>& b) const {
    if (b.size() != rows_) throw InvalidParameter("solve: dimension mismatch");
    MatX aug(rows_, cols_ + 1);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) aug(i, j) = a_[i][j];
        aug(i, cols_) = b[i];
    }
    std::vector<std::size_t> pivots = aug.rref();
    for (std::size_t c : pivots)
        if (c == cols_) throw SingularSystem("linear system inconsistent");
    if (pivots.size() != cols_) throw SingularSystem("linear system underdetermined");
    std::vector<Rat> x(cols_);
    for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = aug(k, cols_);
    return x;
}

}  // namespace a2w
