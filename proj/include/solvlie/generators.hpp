#ifndef SOLVLIE_GENERATORS_HPP
#define SOLVLIE_GENERATORS_HPP

#include "solvlie/liealg.hpp"

namespace solvlie {

// deterministic splitmix64 stream; all corpus generation is a pure
// function of the seed
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }
};

// The solvable non-metabelian workhorse: dimension p+2 on basis
// (e, f, x_1..x_p) over a field of characteristic p, with
// [e,f] = e, [x_i,e] = x_{i+1 mod p}, [x_i,f] = (i-1)x_i.
// The x-block is an abelian minimal ideal of dimension p.
LieAlgebra example_2_4(const FieldSpec& f);

// [b1,b2] = b1
LieAlgebra two_dim_nonabelian(const FieldSpec& f);
// [x,y] = z, z central: nilpotent non-abelian (the standing negative control)
LieAlgebra heisenberg(const FieldSpec& f);
// abelian of the given dimension
LieAlgebra abelian_algebra(const FieldSpec& f, int dim);

struct Theorem61Params {
    int m = 1, n = 1;
    std::vector<std::vector<Scalar>> lambda;  // m x n
};

// span{a_1..a_m} + span{b_1..b_n} with [a_i,b_j] = lambda_ij a_i,
// all other products zero (simultaneously diagonal action; metabelian)
LieAlgebra theorem_6_1_algebra(const Theorem61Params& params, const FieldSpec& f);

// L = (A_1 (+) ... (+) A_n) + C + B over characteristic p, where each A_i
// has basis a_{i1}..a_{ip} and, writing c_i, b_i for the matching C/B basis
// vectors: [c_i,b_i] = c_i, [a_{ij},c_i] = a_{i(j+1 mod p)},
// [a_{ij},b_i] = (lambda_i + j) a_{ij}; all unnamed products zero.
LieAlgebra theorem_6_6_algebra(std::uint64_t p, int n, const std::vector<Scalar>& lambda,
                               const FieldSpec& f);

// Iterated semidirect extensions of abelian ideals by the existing algebra,
// acting through commuting matrices that factor through the abelianization;
// solvability is guaranteed by construction. Finishes with a random basis
// change so the constants are not visibly block-shaped.
LieAlgebra random_solvable(std::uint64_t seed, int dim_budget, const FieldSpec& f);

// the same algebra rewritten in a seeded random basis
LieAlgebra scrambled_copy(const LieAlgebra& L, std::uint64_t seed);

// Abelian V + abelian B where B acts on V through a regular commuting
// family (polynomials in one companion matrix of an irreducible polynomial),
// so every nonzero element of B acts invertibly on V = L^2.
LieAlgebra random_A_candidate(std::uint64_t seed, const FieldSpec& f);

}  // namespace solvlie

#endif
