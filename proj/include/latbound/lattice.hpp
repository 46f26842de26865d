#pragma once

#include <Eigen/Dense>
#include <iosfwd>
#include <utility>

namespace latbound::lattice {

using Matrix = Eigen::MatrixXd;
using IntMatrix = Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = Eigen::Matrix<long long, Eigen::Dynamic, 1>;

inline constexpr int default_dimension_cap = 24;

// Columns are the basis vectors; m >= n and full column rank.
struct Basis {
    Matrix A;
    int rows() const { return static_cast<int>(A.rows()); }
    int cols() const { return static_cast<int>(A.cols()); }
};

// Upper-triangular R of the thin QR factorization, diagonal > 0.
struct RFactor {
    Matrix R;
    int dim() const { return static_cast<int>(R.cols()); }
};

// Integer column transform with |det| = 1; the determinant is validated
// exactly over integers (fraction-free elimination), never in floating point.
struct UnimodularTransform {
    IntMatrix Z;
};

struct ShortestVectorResult {
    IntVector coefficients;   // nonzero
    double norm = 0.0;        // ||A x||_2, recomputed from R at the end
};

// Householder QR with the diagonal sign fixed positive. Throws
// RankDeficientError when some |r_ii| <= 1e-10 * max column norm.
RFactor qr_decompose(const Basis& basis);

// Exact shortest nonzero vector by depth-first enumeration in zig-zag order
// around each interval midpoint, no pruning beyond the running radius. The
// initial radius min_i r_ii (1 + 1e-9) is a lower bound on the minimum, so
// it is doubled until the search ball is nonempty; the radius then shrinks
// on every strict improvement. Ties keep the first vector in traversal
// order. Throws DimensionCapError above dim_cap.
ShortestVectorResult svp_shortest(const RFactor& r,
                                  int dim_cap = default_dimension_cap);

// Size-reduced basis satisfying the Lovasz condition with parameter delta;
// requires 1/4 < delta <= 1 (delta < 1 guarantees termination). Returns the
// reduced basis and the transform taking the input to it.
std::pair<Basis, UnimodularTransform> lll_reduce(const Basis& basis,
                                                 double delta = 0.99);

// Reduction making every r_ii the shortest-vector length of the trailing
// block R[i:n, i:n], with size-reduced off-diagonals: per index, enumerate
// the block, complete the found (necessarily primitive) coefficient vector
// to a unimodular transform, apply, re-factor; one final size-reduction
// pass. lll_reduce(0.99) runs first to keep enumeration cheap.
std::pair<Basis, UnimodularTransform> kz_reduce(
    const Basis& basis, int dim_cap = default_dimension_cap);

// |r_ij| <= |r_ii|/2 + tol for i < j, and each |r_ii| equal to the trailing
// block minimum within relative tol.
bool is_kz_reduced(const Basis& basis, double tol = 1e-9,
                   int dim_cap = default_dimension_cap);

// lambda(A)^2 / det(A^T A)^(1/n); the quantity the Hermite bounds cap.
double hermite_ratio(const Basis& basis,
                     int dim_cap = default_dimension_cap);

// lambda(A)^2 / r_nn^2 over a KZ-reduced basis; throws NotKZReducedError
// otherwise (the constant it is compared against is defined only there).
double kz_ratio(const Basis& basis, int dim_cap = default_dimension_cap);

// prod ||a_i|| / det(A^T A)^(1/2), always >= 1; equality iff orthogonal.
double orthogonality_defect(const Basis& basis);

// Exact integer determinant check for the transform invariant.
bool is_unimodular(const IntMatrix& Z);

// Upper-triangular basis whose Gram matrix is G (Cholesky transpose).
// Throws std::invalid_argument when G is not symmetric positive definite.
Basis basis_from_gram(const Matrix& G);

// Text format: first line `m n`, then m rows of n numbers; or first line
// `gram n`, then n rows of n numbers to be passed through basis_from_gram.
Basis read_basis(std::istream& in);
void write_basis(std::ostream& out, const Basis& basis);

}  // namespace latbound::lattice
