#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace a2w {

// Generators of the extended affine Weyl group W~(E6^(1)) = Aut x| W.
// w0..w6 are the simple reflections, each labeled by its root in the list
// below; s1, s2 the diagram automorphisms.
enum class Generator { W0, W1, W2, W3, W4, W5, W6, S1, S2 };

constexpr std::array<Generator, 9> kAllGenerators = {
    Generator::W0, Generator::W1, Generator::W2, Generator::W3, Generator::W4,
    Generator::W5, Generator::W6, Generator::S1, Generator::S2};

std::string generator_name(Generator g);

// Class in Pic(S_nu) = Z E0 + ... + Z E9, coordinates in basis order E0..E9.
struct PicClass {
    std::array<std::int64_t, 10> c{};

    static PicClass basis(int i);

    std::int64_t& operator[](int i) { return c[static_cast<std::size_t>(i)]; }
    std::int64_t operator[](int i) const { return c[static_cast<std::size_t>(i)]; }

    PicClass operator+(const PicClass& o) const;
    PicClass operator-(const PicClass& o) const;
    PicClass scaled(std::int64_t s) const;
    friend bool operator==(const PicClass&, const PicClass&) = default;

    std::string to_string() const;
};

// Blow-up intersection form: E0.E0 = 1, Ei.Ei = -1 (i >= 1), mixed 0.
std::int64_t intersect(const PicClass& a, const PicClass& b);

// Z-linear automorphism of Pic given by its matrix on the basis classes
// (columns = images of E0..E9).
struct LatticeMap {
    std::array<std::array<std::int64_t, 10>, 10> m{};

    static LatticeMap identity();

    PicClass apply(const PicClass& v) const;
    LatticeMap operator*(const LatticeMap& o) const;  // composition
    friend bool operator==(const LatticeMap&, const LatticeMap&) = default;

    // Mt G M = G with the intersection Gram matrix: preserves the form.
    bool preserves_form() const;
};

// Simple roots:
//   a1 = E2-E3, a2 = E1-E2, a3 = E0-E1-E4-E6,
//   a4 = E6-E7, a5 = E7-E8, a6 = E4-E5, a0 = E5-E9.
const PicClass& simple_root(int i);  // i in 0..6
// Triangle classes D0 = E0-E4-E5-E9, D1 = E0-E1-E2-E3, D2 = E0-E6-E7-E8.
const PicClass& triangle_class(int k);  // k in 0..2
// Null root delta = D0+D1+D2 = a1+2a2+3a3+2a4+a5+2a6+a0.
const PicClass& null_root();

// w_root(d) = d + (d.root) root; requires root.root = -2.
PicClass reflect(const PicClass& root, const PicClass& d);
LatticeMap reflection_map(const PicClass& root);

// Permutation actions of the diagram automorphisms on basis classes:
// s1 = (14)(25)(39), s2 = (46)(57)(89).
LatticeMap diagram_automorphism(Generator which);  // S1 or S2

// Lattice realization of any generator.
LatticeMap generator_lattice_map(Generator g);

// Index permutation a generator induces on the nine blown-up points: entry i
// is g(i) when g maps E_i to another basis class, or 0 when E_i is sent to a
// non-basis class (blown up; only w3 does this, at i = 1,4,6).
std::array<int, 10> index_permutation(Generator g);

struct CoxeterReport {
    bool ok = true;
    int checks = 0;
    std::vector<std::string> failures;
    // Node permutation each sigma induces on the simple-root list
    // (position i holds the image label of node i).
    std::array<int, 7> sigma1_nodes{};
    std::array<int, 7> sigma2_nodes{};
    // Honest lattice ranks (see compatibility notes: the rank of the sum is
    // 9, not 10).
    int rank_e6 = 0, rank_a2 = 0, rank_sum = 0;
    bool intersection_is_z_delta = false;
};

// Verifies the full presentation as exact 10x10 integer matrix identities:
// involutions, commutation/braid per adjacency a_i.a_j, sigma involutions and
// sigma-conjugation, form preservation, delta fixing, the w3 basis-image
// table, and the root-lattice rank/intersection facts.
CoxeterReport verify_coxeter();

}  // namespace a2w
