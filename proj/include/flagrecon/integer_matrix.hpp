#ifndef FLAGRECON_INTEGER_MATRIX_HPP
#define FLAGRECON_INTEGER_MATRIX_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include <cstdlib>
#include <optional>
#include <utility>
#include <vector>

namespace flagrecon {

/// Arbitrary-precision integer. Expression templates are off so the type
/// behaves as a plain value inside Eigen expressions.
using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                              boost::multiprecision::et_off>;

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using IntegerMatrix = DenseMatrix<Integer>;

enum class Transforms { skip, track };

template <typename Scalar>
struct SmithNormalForm {
    /// D = U * M * V, diagonal, with d_1 | d_2 | ... | d_rank and d_i > 0.
    DenseMatrix<Scalar> diagonal;
    Eigen::Index rank = 0;
    /// Nonzero diagonal entries in order.
    std::vector<Scalar> invariant_factors;
    /// Unimodular U and V, present when requested.
    std::optional<DenseMatrix<Scalar>> left;
    std::optional<DenseMatrix<Scalar>> right;

    /// Invariant factors greater than one: the torsion of coker M.
    std::vector<Scalar> torsion() const
    {
        std::vector<Scalar> out;
        for (const auto& d : invariant_factors) {
            if (d > 1) {
                out.push_back(d);
            }
        }
        return out;
    }
};

namespace detail {

template <typename Scalar>
Scalar magnitude(const Scalar& x)
{
    using std::abs;
    return abs(x);
}

template <typename Scalar>
class SmithReduction {
public:
    SmithReduction(DenseMatrix<Scalar> a, bool track)
        : a_(std::move(a)), track_(track)
    {
        if (track_) {
            u_ = DenseMatrix<Scalar>::Identity(a_.rows(), a_.rows());
            v_ = DenseMatrix<Scalar>::Identity(a_.cols(), a_.cols());
        }
    }

    SmithNormalForm<Scalar> run()
    {
        const Eigen::Index steps = std::min(a_.rows(), a_.cols());
        Eigen::Index t = 0;
        for (; t < steps; ++t) {
            auto pivot = smallest_nonzero(t, t, a_.rows(), a_.cols());
            if (!pivot) {
                break;
            }
            swap_rows(t, pivot->first);
            swap_cols(t, pivot->second);
            reduce_at(t);
            if (a_(t, t) < 0) {
                negate_row(t);
            }
        }

        SmithNormalForm<Scalar> out;
        out.rank = t;
        for (Eigen::Index i = 0; i < t; ++i) {
            out.invariant_factors.push_back(a_(i, i));
        }
        out.diagonal = std::move(a_);
        if (track_) {
            out.left = std::move(u_);
            out.right = std::move(v_);
        }
        return out;
    }

private:
    // Smallest |a(i,j)| != 0 over rows [r0,r1) x cols [c0,c1), first in row-major order on ties.
    std::optional<std::pair<Eigen::Index, Eigen::Index>> smallest_nonzero(Eigen::Index r0, Eigen::Index c0,
                                                                         Eigen::Index r1, Eigen::Index c1) const
    {
        std::optional<std::pair<Eigen::Index, Eigen::Index>> best;
        Scalar best_mag = 0;
        for (Eigen::Index i = r0; i < r1; ++i) {
            for (Eigen::Index j = c0; j < c1; ++j) {
                if (a_(i, j) == 0) {
                    continue;
                }
                Scalar mag = magnitude(a_(i, j));
                if (!best || mag < best_mag) {
                    best = {i, j};
                    best_mag = std::move(mag);
                    if (best_mag == 1) {
                        return best;
                    }
                }
            }
        }
        return best;
    }

    void reduce_at(Eigen::Index t)
    {
        while (true) {
            bool clear = true;
            for (Eigen::Index i = t + 1; i < a_.rows(); ++i) {
                if (a_(i, t) != 0) {
                    Scalar q = a_(i, t) / a_(t, t);
                    add_row_multiple(i, t, -q);
                    clear = clear && a_(i, t) == 0;
                }
            }
            for (Eigen::Index j = t + 1; j < a_.cols(); ++j) {
                if (a_(t, j) != 0) {
                    Scalar q = a_(t, j) / a_(t, t);
                    add_col_multiple(j, t, -q);
                    clear = clear && a_(t, j) == 0;
                }
            }
            if (!clear) {
                // a remainder smaller than the pivot survived; move the smallest one in
                auto in_col = smallest_nonzero(t + 1, t, a_.rows(), t + 1);
                auto in_row = smallest_nonzero(t, t + 1, t + 1, a_.cols());
                std::optional<std::pair<Eigen::Index, Eigen::Index>> pick = in_col;
                if (in_row && (!pick || magnitude(a_(in_row->first, in_row->second)) <
                                            magnitude(a_(pick->first, pick->second)))) {
                    pick = in_row;
                }
                swap_rows(t, pick->first);
                swap_cols(t, pick->second);
                continue;
            }
            // divisibility: fold an offending row into row t and keep reducing
            bool divides = true;
            for (Eigen::Index i = t + 1; i < a_.rows() && divides; ++i) {
                for (Eigen::Index j = t + 1; j < a_.cols(); ++j) {
                    if (a_(i, j) != 0 && a_(i, j) % a_(t, t) != 0) {
                        add_row_multiple(t, i, Scalar(1));
                        divides = false;
                        break;
                    }
                }
            }
            if (divides) {
                return;
            }
        }
    }

    void add_row_multiple(Eigen::Index target, Eigen::Index source, const Scalar& q)
    {
        for (Eigen::Index j = 0; j < a_.cols(); ++j) {
            if (a_(source, j) != 0) {
                a_(target, j) += q * a_(source, j);
            }
        }
        if (track_) {
            for (Eigen::Index j = 0; j < u_.cols(); ++j) {
                if (u_(source, j) != 0) {
                    u_(target, j) += q * u_(source, j);
                }
            }
        }
    }

    void add_col_multiple(Eigen::Index target, Eigen::Index source, const Scalar& q)
    {
        for (Eigen::Index i = 0; i < a_.rows(); ++i) {
            if (a_(i, source) != 0) {
                a_(i, target) += q * a_(i, source);
            }
        }
        if (track_) {
            for (Eigen::Index i = 0; i < v_.rows(); ++i) {
                if (v_(i, source) != 0) {
                    v_(i, target) += q * v_(i, source);
                }
            }
        }
    }

    void swap_rows(Eigen::Index i, Eigen::Index k)
    {
        if (i == k) {
            return;
        }
        a_.row(i).swap(a_.row(k));
        if (track_) {
            u_.row(i).swap(u_.row(k));
        }
    }

    void swap_cols(Eigen::Index j, Eigen::Index k)
    {
        if (j == k) {
            return;
        }
        a_.col(j).swap(a_.col(k));
        if (track_) {
            v_.col(j).swap(v_.col(k));
        }
    }

    void negate_row(Eigen::Index i)
    {
        a_.row(i) = -a_.row(i);
        if (track_) {
            u_.row(i) = -u_.row(i);
        }
    }

    DenseMatrix<Scalar> a_;
    DenseMatrix<Scalar> u_;
    DenseMatrix<Scalar> v_;
    bool track_;
};

} // namespace detail

/**
 * Smith normal form by elimination with smallest-magnitude pivoting.
 * Deterministic: ties are broken by row-major position. Works for any
 * signed integral scalar; use Integer when entries may grow.
 */
template <typename Derived>
SmithNormalForm<typename Derived::Scalar> smith_normal_form(const Eigen::MatrixBase<Derived>& m,
                                                            Transforms transforms = Transforms::skip)
{
    using Scalar = typename Derived::Scalar;
    // assignment rather than the converting constructor, whose overload
    // resolution trips over multiprecision's byte-container trait
    DenseMatrix<Scalar> copy(m.rows(), m.cols());
    copy = m;
    detail::SmithReduction<Scalar> reduction(std::move(copy), transforms == Transforms::track);
    return reduction.run();
}

} // namespace flagrecon

#endif // FLAGRECON_INTEGER_MATRIX_HPP
