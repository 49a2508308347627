// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "copo/spectral.hpp"
#include "copo/tensor.hpp"

namespace copo {

/// Subcone of the copositive cone used to prune the detector's search.
/// NonNeg accepts entrywise-nonnegative tensors only; ZSplit accepts a
/// tensor when its Z-part (positive off-diagonal entries stripped) is
/// positive semi-definite (even order) or copositive (odd order), both
/// decided through the nonnegative-tensor spectral radius.
enum class ConeKind {
    NonNeg,
    ZSplit,
};

/// Absolute slack on the eigenvalue comparison in `member`. Acceptance
/// requires a margin of at least this much, so power-method error (which
/// is kept well below it) can never certify a tensor outside the cone.
inline constexpr double kMembershipSlack = 1e-9;

/// N(A): the strictly positive off-diagonal entries of A; everything
/// else is zero. A - N(A) is a Z-tensor by construction.
SymTensor n_part(const SymTensor& a);

/// Membership of A in the chosen subcone. Total: numerical trouble
/// (non-convergence of the power iteration) resolves to false, never to
/// a false certificate. True implies A is copositive.
bool member(const SymTensor& a, ConeKind cone, const PowerConfig& cfg = {},
            double tol_psd = kMembershipSlack);

}  // namespace copo
