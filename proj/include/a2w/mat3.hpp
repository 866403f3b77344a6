#pragma once

#include "a2w/poly.hpp"
#include "a2w/rat.hpp"

#include <array>
#include <vector>

namespace a2w {

// Constant 3x3 matrix over Q.
struct MatQ {
    std::array<std::array<Rat, 3>, 3> a{};

    static MatQ identity();
    static MatQ zero() { return MatQ{}; }

    Rat& operator()(int i, int j) { return a[i][j]; }
    const Rat& operator()(int i, int j) const { return a[i][j]; }

    MatQ operator+(const MatQ& o) const;
    MatQ operator-(const MatQ& o) const;
    MatQ operator*(const MatQ& o) const;
    MatQ scaled(const Rat& s) const;
    friend bool operator==(const MatQ&, const MatQ&) = default;

    Rat trace() const { return a[0][0] + a[1][1] + a[2][2]; }
    Rat det() const;
    // Exact inverse; throws SingularSystem when det = 0.
    MatQ inverse() const;
    // det(tI - M) as a monic cubic in t.
    Poly char_poly() const;
};

// 3x3 matrix with polynomial entries (the connection-matrix substrate).
struct MatP {
    std::array<std::array<Poly, 3>, 3> a{};

    static MatP identity();
    static MatP from_const(const MatQ& m);

    Poly& operator()(int i, int j) { return a[i][j]; }
    const Poly& operator()(int i, int j) const { return a[i][j]; }

    MatP operator+(const MatP& o) const;
    MatP operator-(const MatP& o) const;
    MatP operator*(const MatP& o) const;
    MatP scaled(const Poly& s) const;
    friend bool operator==(const MatP&, const MatP&) = default;

    MatQ eval(const Rat& x) const;
    MatP derivative() const;
    Poly trace() const { return a[0][0] + a[1][1] + a[2][2]; }
    Poly det() const;
    bool is_constant() const;
    int max_degree() const;
};

// True iff det(tI - M) = (t - e0)(t - e1)(t - e2) coefficientwise; eigenvalue
// verification without any root-finding.
bool char_poly_matches(const MatQ& m, const std::array<Rat, 3>& eigs);

// Residue of the form A(z) dz/(z(z-1)) at a finite singular point:
// -A(0) at z = 0 and A(1) at z = 1.
MatQ residue_of_form(const MatP& A, int at);

// Frame change for d + A dz/(z(z-1)) by a polynomial gauge P with constant
// nonzero determinant: returns P^{-1} A P + z(z-1) P^{-1} P'.
MatP gauge_transform(const MatP& A, const MatP& P);

// Dense exact row-reduction workhorse for the handful of small linear
// systems in the library (cubic kernel, chi systems, lattice ranks).
class MatX {
public:
    MatX(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows, std::vector<Rat>(cols)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rat& operator()(std::size_t i, std::size_t j) { return a_[i][j]; }
    const Rat& operator()(std::size_t i, std::size_t j) const { return a_[i][j]; }

    // In-place reduced row echelon form; returns pivot column indices.
    std::vector<std::size_t> rref();
    std::size_t rank() const;
    // Basis of the right kernel.
    std::vector<std::vector<Rat>> nullspace() const;
    // Unique solution of A x = b; throws SingularSystem if the system is
    // singular or inconsistent.
    std::vector<Rat> solve(const std::vector<Rat>& b) const;

private:
    std::size_t rows_, cols_;
    std::vector<std::vector<Rat>> a_;
};

}  // namespace a2w
