#include "latbound/lattice.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "latbound/errors.hpp"
#include "latbound/format.hpp"

namespace latbound::lattice {

namespace {

// Zig-zag step: visits round(c), then the integers at distance 1, 2, ...
// alternating sides, nearer side first. |x - c| is nondecreasing along the
// sequence, which is what makes abandoning a level on the first failure
// exact.
void zigzag_advance(long long& x, long long& dx) {
    x += dx;
    dx = -dx - (dx > 0 ? 1 : -1);
}

struct EnumerationPass {
    bool found = false;
    std::vector<long long> best;
    double best2 = 0.0;
};

// One depth-first pass with a fixed starting radius; best2 shrinks on every
// strict improvement. The all-zero leaf is skipped, ties keep the first
// vector found.
EnumerationPass enumerate_within(const Matrix& R, double radius2) {
    const int n = static_cast<int>(R.cols());
    EnumerationPass pass;
    pass.best2 = radius2;
    std::vector<double> dist(n + 1, 0.0);
    std::vector<double> c(n, 0.0);
    std::vector<long long> x(n, 0);
    std::vector<long long> dx(n, 1);
    int k = n - 1;
    while (true) {
        double d = R(k, k) * (static_cast<double>(x[k]) - c[k]);
        double nd = dist[k + 1] + d * d;
        bool within = pass.found ? nd < pass.best2 : nd <= pass.best2;
        if (within) {
            if (k == 0) {
                bool nonzero = std::any_of(x.begin(), x.end(),
                                           [](long long v) {
                                               return v != 0;
                                           });
                if (nonzero) {
                    pass.best2 = nd;
                    pass.best = x;
                    pass.found = true;
                }
                zigzag_advance(x[k], dx[k]);
            } else {
                dist[k] = nd;
                --k;
                double s = 0.0;
                for (int j = k + 1; j < n; ++j) {
                    s += R(k, j) * static_cast<double>(x[j]);
                }
                c[k] = -s / R(k, k);
                x[k] = std::llround(c[k]);
                dx[k] = c[k] >= static_cast<double>(x[k]) ? 1 : -1;
            }
        } else {
            ++k;
            if (k == n) {
                break;
            }
            zigzag_advance(x[k], dx[k]);
        }
    }
    return pass;
}

// Size-reduce column k of R against columns i < k, mirroring the integer
// operations into Z.
void size_reduce_column(Matrix& R, IntMatrix& Z, int k) {
    for (int i = k - 1; i >= 0; --i) {
        long long q = std::llround(R(i, k) / R(i, i));
        if (q != 0) {
            R.col(k).head(i + 1) -=
                static_cast<double>(q) * R.col(i).head(i + 1);
            Z.col(k) -= q * Z.col(i);
        }
    }
}

// Extend a primitive integer vector to a unimodular matrix having it as the
// first column: run Euclid column operations that drive a working copy to a
// unit vector while accumulating the inverse operations.
IntMatrix complete_unimodular(const IntVector& x) {
    const int n = static_cast<int>(x.size());
    IntMatrix U = IntMatrix::Identity(n, n);
    IntVector v = x;
    while (true) {
        int pivot = -1;
        int nonzero_count = 0;
        for (int i = 0; i < n; ++i) {
            if (v[i] == 0) {
                continue;
            }
            ++nonzero_count;
            if (pivot < 0 || std::abs(v[i]) < std::abs(v[pivot])) {
                pivot = i;
            }
        }
        if (pivot < 0) {
            throw std::logic_error("complete_unimodular: zero vector");
        }
        if (nonzero_count == 1) {
            if (std::abs(v[pivot]) != 1) {
                throw std::logic_error(
                    "complete_unimodular: vector not primitive");
            }
            if (v[pivot] == -1) {
                v[pivot] = 1;
                U.col(pivot) = -U.col(pivot);
            }
            if (pivot != 0) {
                std::swap(v[pivot], v[0]);
                U.col(pivot).swap(U.col(0));
            }
            return U;
        }
        for (int i = 0; i < n; ++i) {
            if (i == pivot || v[i] == 0) {
                continue;
            }
            long long q = v[i] / v[pivot];
            if (q != 0) {
                v[i] -= q * v[pivot];
                U.col(pivot) += q * U.col(i);
            }
        }
    }
}

bool is_signed_unit_first(const IntVector& x) {
    if (std::abs(x[0]) != 1) {
        return false;
    }
    for (int i = 1; i < static_cast<int>(x.size()); ++i) {
        if (x[i] != 0) {
            return false;
        }
    }
    return true;
}

void require_enumerable(int n, int dim_cap) {
    if (n > dim_cap) {
        throw DimensionCapError("dimension " + std::to_string(n) +
                                " exceeds enumeration cap " +
                                std::to_string(dim_cap));
    }
}

}  // namespace

RFactor qr_decompose(const Basis& basis) {
    const int m = basis.rows();
    const int n = basis.cols();
    if (n < 1 || m < n) {
        throw std::invalid_argument(
            "qr_decompose: basis must be m x n with m >= n >= 1");
    }
    Eigen::HouseholderQR<Matrix> qr(basis.A);
    Matrix R = qr.matrixQR()
                   .topLeftCorner(n, n)
                   .triangularView<Eigen::Upper>();
    for (int i = 0; i < n; ++i) {
        if (R(i, i) < 0.0) {
            R.row(i).tail(n - i) = -R.row(i).tail(n - i);
        }
    }
    double scale = 0.0;
    for (int j = 0; j < n; ++j) {
        scale = std::max(scale, basis.A.col(j).norm());
    }
    for (int i = 0; i < n; ++i) {
        if (R(i, i) <= 1e-10 * scale) {
            throw RankDeficientError(
                "matrix is rank deficient at column " + std::to_string(i));
        }
    }
    return RFactor{std::move(R)};
}

ShortestVectorResult svp_shortest(const RFactor& r, int dim_cap) {
    const int n = r.dim();
    require_enumerable(n, dim_cap);
    double min_rii = r.R(0, 0);
    for (int i = 1; i < n; ++i) {
        min_rii = std::min(min_rii, r.R(i, i));
    }
    // min r_ii is a lower bound on the minimum, not an upper bound, so the
    // first ball can be empty; double the radius until it is not.
    double radius = min_rii * (1.0 + 1e-9);
    EnumerationPass pass;
    while (true) {
        pass = enumerate_within(r.R, radius * radius);
        if (pass.found) {
            break;
        }
        radius *= 2.0;
    }
    ShortestVectorResult result;
    result.coefficients = IntVector(n);
    for (int i = 0; i < n; ++i) {
        result.coefficients[i] = pass.best[i];
    }
    Eigen::VectorXd xv = result.coefficients.cast<double>();
    result.norm = (r.R * xv).norm();
    return result;
}

std::pair<Basis, UnimodularTransform> lll_reduce(const Basis& basis,
                                                 double delta) {
    if (!(delta > 0.25 && delta <= 1.0)) {
        throw std::invalid_argument(
            "lll_reduce: delta must satisfy 1/4 < delta <= 1");
    }
    RFactor rf = qr_decompose(basis);
    Matrix R = std::move(rf.R);
    const int n = static_cast<int>(R.cols());
    IntMatrix Z = IntMatrix::Identity(n, n);
    int k = 1;
    while (k < n) {
        size_reduce_column(R, Z, k);
        double lhs = delta * R(k - 1, k - 1) * R(k - 1, k - 1);
        double rhs = R(k - 1, k) * R(k - 1, k) + R(k, k) * R(k, k);
        if (lhs > rhs) {
            R.col(k - 1).swap(R.col(k));
            Z.col(k - 1).swap(Z.col(k));
            // One Givens rotation on rows (k-1, k) restores the triangle.
            double a = R(k - 1, k - 1);
            double b = R(k, k - 1);
            double hyp = std::hypot(a, b);
            double cth = a / hyp;
            double sth = b / hyp;
            for (int j = k - 1; j < n; ++j) {
                double t1 = R(k - 1, j);
                double t2 = R(k, j);
                R(k - 1, j) = cth * t1 + sth * t2;
                R(k, j) = -sth * t1 + cth * t2;
            }
            R(k - 1, k - 1) = hyp;
            R(k, k - 1) = 0.0;
            if (R(k, k) < 0.0) {
                R.row(k).tail(n - k) = -R.row(k).tail(n - k);
            }
            k = std::max(k - 1, 1);
        } else {
            ++k;
        }
    }
    Basis reduced{basis.A * Z.cast<double>()};
    return {std::move(reduced), UnimodularTransform{std::move(Z)}};
}

std::pair<Basis, UnimodularTransform> kz_reduce(const Basis& basis,
                                                int dim_cap) {
    const int n = basis.cols();
    require_enumerable(n, dim_cap);
    auto [pre, transform] = lll_reduce(basis, 0.99);
    Matrix W = std::move(pre.A);
    IntMatrix Z = std::move(transform.Z);
    for (int i = 0; i < n; ++i) {
        RFactor rf = qr_decompose(Basis{W});
        const int nb = n - i;
        Matrix block = rf.R.block(i, i, nb, nb);
        ShortestVectorResult sv = svp_shortest(RFactor{block}, dim_cap);
        if (is_signed_unit_first(sv.coefficients)) {
            continue;
        }
        IntMatrix U = complete_unimodular(sv.coefficients);
        Z.block(0, i, n, nb) = (Z.block(0, i, n, nb) * U).eval();
        W = basis.A * Z.cast<double>();
    }
    RFactor rf = qr_decompose(Basis{W});
    Matrix R = std::move(rf.R);
    for (int k = 1; k < n; ++k) {
        size_reduce_column(R, Z, k);
    }
    Basis reduced{basis.A * Z.cast<double>()};
    return {std::move(reduced), UnimodularTransform{std::move(Z)}};
}

bool is_kz_reduced(const Basis& basis, double tol, int dim_cap) {
    const int n = basis.cols();
    require_enumerable(n, dim_cap);
    RFactor rf = qr_decompose(basis);
    const Matrix& R = rf.R;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (std::abs(R(i, j)) > 0.5 * R(i, i) + tol) {
                return false;
            }
        }
    }
    for (int i = 0; i < n; ++i) {
        const int nb = n - i;
        Matrix block = R.block(i, i, nb, nb);
        ShortestVectorResult sv = svp_shortest(RFactor{block}, dim_cap);
        if (std::abs(R(i, i) - sv.norm) > tol * sv.norm) {
            return false;
        }
    }
    return true;
}

double hermite_ratio(const Basis& basis, int dim_cap) {
    const int n = basis.cols();
    require_enumerable(n, dim_cap);
    // The ratio is invariant under unimodular column operations, and
    // enumeration over a reduced basis is far cheaper.
    auto [reduced, transform] = lll_reduce(basis);
    (void)transform;
    RFactor rf = qr_decompose(reduced);
    ShortestVectorResult sv = svp_shortest(rf, dim_cap);
    double log_det = 0.0;
    for (int i = 0; i < n; ++i) {
        log_det += std::log(rf.R(i, i));
    }
    return sv.norm * sv.norm * std::exp(-2.0 * log_det / n);
}

double kz_ratio(const Basis& basis, int dim_cap) {
    if (!is_kz_reduced(basis, 1e-9, dim_cap)) {
        throw NotKZReducedError(
            "kz_ratio requires a KZ-reduced basis");
    }
    RFactor rf = qr_decompose(basis);
    const int n = rf.dim();
    ShortestVectorResult sv = svp_shortest(rf, dim_cap);
    double last = rf.R(n - 1, n - 1);
    return sv.norm * sv.norm / (last * last);
}

double orthogonality_defect(const Basis& basis) {
    RFactor rf = qr_decompose(basis);
    double log_defect = 0.0;
    for (int j = 0; j < basis.cols(); ++j) {
        log_defect += std::log(basis.A.col(j).norm());
        log_defect -= std::log(rf.R(j, j));
    }
    return std::exp(log_defect);
}

bool is_unimodular(const IntMatrix& Z) {
    const int n = static_cast<int>(Z.rows());
    if (n == 0 || Z.cols() != n) {
        return false;
    }
    // Bareiss fraction-free elimination: every division is exact, entries
    // stay integral, no floating point anywhere.
    std::vector<std::vector<__int128>> m(n, std::vector<__int128>(n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            m[i][j] = Z(i, j);
        }
    }
    int sign = 1;
    __int128 prev = 1;
    for (int k = 0; k + 1 < n; ++k) {
        int pivot = -1;
        for (int i = k; i < n; ++i) {
            if (m[i][k] != 0) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) {
            return false;
        }
        if (pivot != k) {
            std::swap(m[pivot], m[k]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    __int128 det = m[n - 1][n - 1];
    if (sign < 0) {
        det = -det;
    }
    return det == 1 || det == -1;
}

Basis basis_from_gram(const Matrix& G) {
    const int n = static_cast<int>(G.rows());
    if (n < 1 || G.cols() != n) {
        throw std::invalid_argument("gram matrix must be square");
    }
    double scale = std::max(1.0, G.cwiseAbs().maxCoeff());
    double asym = (G - G.transpose()).cwiseAbs().maxCoeff();
    if (asym > 1e-12 * scale) {
        throw std::invalid_argument("gram matrix is not symmetric");
    }
    Eigen::LLT<Matrix> llt(G);
    if (llt.info() != Eigen::Success) {
        throw std::invalid_argument("gram matrix is not positive definite");
    }
    Matrix A = llt.matrixU();
    return Basis{std::move(A)};
}

Basis read_basis(std::istream& in) {
    std::string head;
    if (!(in >> head)) {
        throw FileFormatError("basis file is empty");
    }
    if (head == "gram") {
        long long n = 0;
        if (!(in >> n) || n < 1) {
            throw FileFormatError("gram header needs a positive dimension");
        }
        Matrix G(n, n);
        for (long long i = 0; i < n; ++i) {
            for (long long j = 0; j < n; ++j) {
                if (!(in >> G(i, j))) {
                    throw FileFormatError("gram matrix entries truncated");
                }
            }
        }
        return basis_from_gram(G);
    }
    long long m = 0;
    auto [ptr, ec] = std::from_chars(head.data(), head.data() + head.size(),
                                     m);
    if (ec != std::errc() || ptr != head.data() + head.size()) {
        throw FileFormatError("header must be `m n` or `gram n`");
    }
    long long n = 0;
    if (!(in >> n)) {
        throw FileFormatError("header must be `m n` or `gram n`");
    }
    if (n < 1 || m < n) {
        throw FileFormatError("basis dimensions need m >= n >= 1");
    }
    Matrix A(m, n);
    for (long long i = 0; i < m; ++i) {
        for (long long j = 0; j < n; ++j) {
            if (!(in >> A(i, j))) {
                throw FileFormatError("basis entries truncated");
            }
        }
    }
    return Basis{std::move(A)};
}

void write_basis(std::ostream& out, const Basis& basis) {
    out << basis.rows() << " " << basis.cols() << "\n";
    for (int i = 0; i < basis.rows(); ++i) {
        for (int j = 0; j < basis.cols(); ++j) {
            if (j > 0) {
                out << " ";
            }
            out << fmt17(basis.A(i, j));
        }
        out << "\n";
    }
}

}  // namespace latbound::lattice
