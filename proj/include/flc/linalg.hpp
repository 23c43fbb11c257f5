#pragma once

#include <vector>

#include "flc/fq.hpp"

namespace flc {

using FMat = std::vector<std::vector<FqField::Elt>>;  // row-major

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(const FqField& F, FMat& M);
// Basis of the right kernel {x : M x = 0} (ncols given for empty M).
FMat kernel_basis(const FqField& F, FMat M, int ncols);
int rank_of(const FqField& F, FMat M);

// All subspaces of K^n with entries restricted to `scalars` (a subfield of
// K, listed by its elements), each as the rows of its RREF basis.
std::vector<FMat> all_subspaces(const FqField& K, const std::vector<FqField::Elt>& scalars, int n);

}  // namespace flc
