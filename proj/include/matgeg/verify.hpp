#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "matgeg/report.hpp"

namespace matgeg {

// Batteries shared by the command-line tool, the acceptance binary and the
// Python module. Each returns one record per check.

// All sixteen products D_i D_j: twelve printed rows as identities, the four
// unprinted ones as nonzero members with multiplicative eigenvalue.
std::vector<CheckRecord> remark_products(const DWAlgebra& alg = symbolic_algebra());
// The four generator relations for A, B as printed.
std::vector<CheckRecord> ab_relations(const DWAlgebra& alg = symbolic_algebra());
// The four reconstructions of D1..D4 from A, B and the (D3+D4)^2 identity.
std::vector<CheckRecord> ds_rows(const DWAlgebra& alg = symbolic_algebra());
// B^3 - ABA = 0, the cubic relation that does hold; diagnostic.
CheckRecord cubic_relation(const DWAlgebra& alg = symbolic_algebra());

std::vector<CheckRecord> eigen_battery(unsigned wmax, const Bindings& b = {});
std::vector<CheckRecord> mop_cross_check(unsigned wmax);
std::vector<CheckRecord> center_battery(const DWAlgebra& alg = symbolic_algebra());
std::vector<CheckRecord> order2_classification();
std::vector<CheckRecord> presented_battery(Presentation pr, unsigned pairs = 500, std::uint64_t seed = 7);
std::vector<CheckRecord> structure_battery(unsigned words = 200, std::uint64_t seed = 11);
std::vector<CheckRecord> tilde_battery(unsigned words = 200, std::uint64_t seed = 13);
std::vector<CheckRecord> orthogonality_battery(long n_val, const Rat& p_val, unsigned wmax);
std::vector<CheckRecord> bridge_battery();

// The numbered acceptance criteria 1..11.
int acceptance_criterion_count();
std::string acceptance_title(int k);
std::vector<CheckRecord> acceptance_criterion(int k);

// Random word over D1..D4 of the given length, as generator indices.
std::vector<int> random_generator_word(std::mt19937_64& rng, unsigned length);
DiffOp evaluate_generator_word(const std::vector<int>& word, const DWAlgebra& alg = symbolic_algebra());
std::string generator_word_name(const std::vector<int>& word);

}  // namespace matgeg
