"""The curvature term of the Weitzenboeck formula on p-forms and its
decomposition through trace-free symmetric tensors.

For a p-form w and symmetric S, the action (S w)(X_1,...,X_p) =
sum_i w(X_1,...,S X_i,...,X_p) is again a p-form.  Expanding w over an
orthonormal basis {S_a} of trace-free symmetric tensors yields the weights
|S_a w|^2, whose total is (p(n-p)/n) * ((n+2)/2) * |w|^2 while each single
weight is at most (p(n-p)/n) * |S|^2 |w|^2.

The quadratic curvature term is

    g(Ric_L w, w) = p sum R_ij w_{i...} w_{j...}
                    - p(p-1)/2 sum R_{ijkl} w_{ij...} w_{kl...}

and it decomposes as

    3/2 g(Ric_L w, w) = <second-kind quadratic form on the expansion>
                        + p(n-2p)/n sum R_jk w_{j...} w_{k...}
                        + p^2/n^2 scal |w|^2.
"""

from dataclasses import dataclass
import math

import numpy as np

from .errors import DimensionMismatch, POutOfRange
from .operators import (
    act_sym_dense,
    ricci_scalar,
    second_kind_matrix,
    spectrum,
)
from .tensor_core import (
    PForm,
    canonical_s02_basis,
    multi_indices,
    multi_index_positions,
    require_square,
    rotate_curvature,
    rotate_form,
)


def _act_stack_dense(basis, dense):
    """Apply every symmetric matrix in a stacked basis to a dense tensor."""
    p = dense.ndim
    out = np.zeros((basis.shape[0],) + dense.shape)
    for m in range(p):
        out += np.moveaxis(np.tensordot(basis, dense, axes=([2], [m])), 1, 1 + m)
    return out


def _act_stack_coeffs(basis, w):
    """Sorted coefficients of S_a w for every S_a in the stack: shape (N, C(n,p))."""
    if w.p == 0:
        return np.zeros((basis.shape[0], 1))
    dense = _act_stack_dense(basis, w.to_dense())
    idx = np.array(multi_indices(w.n, w.p))
    return dense[(slice(None),) + tuple(idx[:, m] for m in range(w.p))]


def act_sym_on_form(S, w):
    """The p-form S w; diagonal S scales each wedge by the sum of its entries."""
    S = require_square(S, n=w.n)
    coeffs = _act_stack_coeffs(S[None, :, :], w)[0]
    return PForm(w.n, w.p, coeffs)


def form_two_point(w):
    """Matrix W_jk = sum over i_2..i_p of w_{j i_2..} w_{k i_2..} (all indices)."""
    if w.p == 0:
        return np.zeros((w.n, w.n))
    flat = w.to_dense().reshape(w.n, -1)
    return flat @ flat.T


@dataclass(frozen=True)
class FormS02Expansion:
    """Expansion data of a p-form over canonical_s02_basis(n).

    coefficient_matrix[a] holds the sorted coefficients of S_a w; weights[a]
    is |S_a w|^2, and total is their sum, which equals |w^{S^2_0}|^2.
    """

    form: PForm
    coefficient_matrix: np.ndarray
    weights: np.ndarray
    total: float

    def gram(self):
        """Gram matrix <S_a w, S_b w> of the expansion coefficients."""
        fact = math.factorial(self.form.p)
        return fact * (self.coefficient_matrix @ self.coefficient_matrix.T)


def form_s02_expansion(w):
    """Expand w over the canonical trace-free basis and collect the weights.

    The total satisfies sum_a |S_a w|^2 = (p(n-p)/n)((n+2)/2) |w|^2 and each
    weight is bounded by (p(n-p)/n) |w|^2 for unit-norm basis elements.
    """
    basis = canonical_s02_basis(w.n)
    coeff = _act_stack_coeffs(basis, w)
    fact = math.factorial(w.p)
    weights = fact * np.einsum("ad,ad->a", coeff, coeff)
    return FormS02Expansion(
        form=w, coefficient_matrix=coeff, weights=weights, total=float(weights.sum())
    )


def second_kind_form_term(R, w, expansion=None):
    """g(second-kind(w^{S^2_0}), w^{S^2_0}) via the canonical-basis matrix."""
    if expansion is None:
        expansion = form_s02_expansion(w)
    return float(np.einsum("ab,ab->", second_kind_matrix(R), expansion.gram()))


def ric_l_quadratic(R, w):
    """The curvature term g(Ric_L w, w) by direct contraction."""
    n, p = R.n, w.p
    if w.n != n:
        raise DimensionMismatch("form and curvature live on different dimensions")
    if p == 0:
        return 0.0
    summary = ricci_scalar(R)
    dense = w.to_dense()
    flat1 = dense.reshape(n, -1)
    term1 = float(np.einsum("ij,ij->", summary.ricci, flat1 @ flat1.T))
    total = p * term1
    if p >= 2:
        flat2 = dense.reshape(n * n, -1)
        R4 = R.components.reshape(n * n, n * n)
        term2 = float(np.sum((R4 @ flat2) * flat2))
        total -= 0.5 * p * (p - 1) * term2
    return total


def _pair_sign(sorted_tuple, member):
    """Parity of extracting `member` from a sorted tuple: (-1)^position."""
    return -1 if sorted_tuple.index(member) % 2 else 1


def _pair_sign2(sorted_tuple, a, b):
    """Parity of extracting the ordered pair (a, b) from a sorted tuple."""
    rest = tuple(x for x in sorted_tuple if x != a)
    return _pair_sign(sorted_tuple, a) * _pair_sign(rest, b)


def ric_l_matrix(R, p):
    """Matrix of Ric_L over the unit-norm sorted wedge basis of p-forms.

    Entries are the polarization of ric_l_quadratic: with I, J increasing
    p-tuples,

      M[I,I] = sum_{i in I} Ric_ii - 2 sum_{a<b in I} R_{abab}
      M[I,J] = s * (Ric_ab - 2 sum_{c in I cap J} R_{acbc})   (|I^J| = p-1)
      M[I,J] = -2 s * R_{abcd}                                (|I^J| = p-2)

    where s carries the wedge reordering parities, I \\ J = {a} (resp.
    {a,b}) and J \\ I = {b} (resp. {c,d}).  For p = 1 this is the Ricci
    matrix; for the unit sphere it is p(n-p) times the identity.
    """
    n = R.n
    if not 1 <= p <= n:
        raise POutOfRange(f"need 1 <= p <= n, got p={p}")
    Rc = R.components
    ric = ricci_scalar(R).ricci
    idxs = multi_indices(n, p)
    pos = multi_index_positions(n, p)
    M = np.zeros((len(idxs), len(idxs)))
    universe = set(range(n))

    for r, I in enumerate(idxs):
        members = list(I)
        M[r, r] = sum(ric[i, i] for i in members) - 2.0 * sum(
            Rc[a, b, a, b] for qa, a in enumerate(members) for b in members[qa + 1 :]
        )
        outside = sorted(universe.difference(I))
        for a in members:
            rest = tuple(x for x in members if x != a)
            sa = _pair_sign(I, a)
            for b in outside:
                J = tuple(sorted(rest + (b,)))
                entry = ric[a, b] - 2.0 * sum(Rc[a, c, b, c] for c in rest)
                M[r, pos[J]] = sa * _pair_sign(J, b) * entry
        if p >= 2:
            for qa, a in enumerate(members):
                for b in members[qa + 1 :]:
                    core = tuple(x for x in members if x not in (a, b))
                    sab = _pair_sign2(I, a, b)
                    for qc, c in enumerate(outside):
                        for d in outside[qc + 1 :]:
                            J = tuple(sorted(core + (c, d)))
                            M[r, pos[J]] = (
                                -2.0 * sab * _pair_sign2(J, c, d) * Rc[a, b, c, d]
                            )
    return M


@dataclass(frozen=True)
class BochnerReport:
    """The three-term decomposition of (3/2) g(Ric_L w, w).

    einstein_residual additionally checks the short Einstein form
    lhs = operator term + p(n-p)/n^2 * scal * |w|^2 and is None when the
    input is not Einstein.
    """

    lhs: float
    term_operator: float
    term_ricci: float
    term_scal: float
    residual: float
    einstein_residual: float | None = None


def bochner_decomposition(R, w):
    """Evaluate both sides of the decomposition and report the residual."""
    n, p = R.n, w.p
    if w.n != n:
        raise DimensionMismatch("form and curvature live on different dimensions")
    summary = ricci_scalar(R)
    norm_sq = w.norm_sq
    if p == 0:
        return BochnerReport(0.0, 0.0, 0.0, 0.0, 0.0, 0.0)
    lhs = 1.5 * ric_l_quadratic(R, w)
    term_op = second_kind_form_term(R, w)
    term_ricci = (p * (n - 2 * p) / n) * float(
        np.einsum("ij,ij->", summary.ricci, form_two_point(w))
    )
    term_scal = (p**2 / n**2) * summary.scalar * norm_sq
    residual = abs(lhs - term_op - term_ricci - term_scal) / (1.0 + abs(lhs))
    einstein_residual = None
    if summary.is_einstein():
        short = term_op + (p * (n - p) / n**2) * summary.scalar * norm_sq
        einstein_residual = abs(lhs - short) / (1.0 + abs(lhs))
    return BochnerReport(lhs, term_op, term_ricci, term_scal, residual, einstein_residual)


def ogiue_tachibana_term(R, w):
    """Quadratic form of the second kind on w^{S^2_0} via the non-orthogonal
    trace-free family e^i (.) e^j = e^i x e^j + e^j x e^i - (2/n) d_ij g:

        1/4 sum_{ijkl} <(e^i (.) e^l) w, (e^j (.) e^k) w> R_{ijkl}.
    """
    n = w.n
    if R.n != n:
        raise DimensionMismatch("form and curvature live on different dimensions")
    stack = np.zeros((n * n, n, n))
    eye = np.eye(n)
    for i in range(n):
        for j in range(n):
            S = np.zeros((n, n))
            S[i, j] += 1.0
            S[j, i] += 1.0
            stack[i * n + j] = S - (2.0 / n) * eye[i, j] * eye
    coeff = _act_stack_coeffs(stack, w)
    gram = (math.factorial(w.p) * (coeff @ coeff.T)).reshape(n, n, n, n)
    return 0.25 * float(np.einsum("ijkl,iljk->", R.components, gram))


def ric_l_apply_dense(R, T):
    """Slot-wise curvature action on a dense (0,p)-tensor:

        (Ric_L T)_{i_1..i_p} = (Ric T)_{i_1..i_p}
            - sum_{m != s} sum_{j,q} R_{i_m j i_s q} T_{.. j@m .. q@s ..}.

    Agrees with ric_l_quadratic under the tensor inner product when T is
    alternating; used as the independent oracle for the assembled matrix.
    """
    T = np.asarray(T, dtype=float)
    p = T.ndim
    out = act_sym_dense(ricci_scalar(R).ricci, T)
    for m in range(p):
        for s in range(p):
            if m == s:
                continue
            tmp = np.tensordot(T, R.components, axes=([m, s], [1, 3]))
            out -= np.moveaxis(tmp, (-2, -1), (m, s))
    return out


def general_tensor_bochner_check(R, T):
    """Residual of the decomposition for a general (0,p)-tensor, p in {2,3}.

    Beyond the three p-form terms the right side carries the correction

        sum_{r != s} sum_{ijkl} (R_{kijl} + R_{kjil})
            sum_I T_{..i@r..j@s..} T_{..k@r..l@s..},

    which vanishes identically on alternating tensors.  The Ricci term is
    summed over the slot carrying the contraction; on alternating tensors
    every slot contributes equally, recovering the factor p of the form
    decomposition.
    """
    T = np.asarray(T, dtype=float)
    p = T.ndim
    n = R.n
    if p not in (2, 3):
        raise POutOfRange(f"general check implemented for p in {{2, 3}}, got {p}")
    if T.shape != (n,) * p:
        raise DimensionMismatch(f"tensor shape {T.shape} does not match n={n}")

    summary = ricci_scalar(R)
    norm_sq = float(np.sum(T * T))
    lhs = 1.5 * float(np.sum(ric_l_apply_dense(R, T) * T))

    basis = canonical_s02_basis(n)
    acts = np.stack([act_sym_dense(S, T) for S in basis])
    gram = np.einsum("aX,bX->ab", acts.reshape(len(basis), -1), acts.reshape(len(basis), -1))
    term_op = float(np.einsum("ab,ab->", second_kind_matrix(R), gram))

    term_ricci = 0.0
    for m in range(p):
        flat = np.moveaxis(T, m, 0).reshape(n, -1)
        term_ricci += ((n - 2 * p) / n) * float(
            np.einsum("ij,ij->", summary.ricci, flat @ flat.T)
        )
    term_scal = (p**2 / n**2) * summary.scalar * norm_sq

    extra = 0.0
    for r in range(p):
        for s in range(p):
            if r == s:
                continue
            Tm = np.moveaxis(T, (r, s), (0, 1)).reshape(n, n, -1)
            extra += float(
                np.einsum("kijl,ijM,klM->", R.components, Tm, Tm)
                + np.einsum("kjil,ijM,klM->", R.components, Tm, Tm)
            )
    rhs = term_op + term_ricci + term_scal + extra
    return abs(lhs - rhs) / (1.0 + abs(lhs))


def bochner_ricci_diagonal_residual(R, w):
    """Residual of the Ricci-diagonal form of the decomposition.

    The frame is rotated to diagonalize Ric; there the Ricci term becomes
    (n-2p)/n * sum_I (sum_{i in I} Ric_ii) w_I^2 over all index tuples.
    """
    summary = ricci_scalar(R)
    _, Q = np.linalg.eigh(summary.ricci)
    Rr = rotate_curvature(R, Q)
    wr = rotate_form(w, Q)
    n, p = R.n, w.p
    if p == 0:
        return 0.0
    rsum = ricci_scalar(Rr)
    ric_diag = np.diag(rsum.ricci)
    fact = math.factorial(p)
    weighted = fact * sum(
        sum(ric_diag[i] for i in I) * wr.coeffs[pos] ** 2
        for pos, I in enumerate(multi_indices(n, p))
    )
    lhs = 1.5 * ric_l_quadratic(Rr, wr)
    rhs = (
        second_kind_form_term(Rr, wr)
        + ((n - 2 * p) / n) * weighted
        + (p**2 / n**2) * rsum.scalar * wr.norm_sq
    )
    return abs(lhs - rhs) / (1.0 + abs(lhs))


def ric_l_spectrum(R, p):
    """Ascending eigenvalues of the assembled Ric_L matrix."""
    return spectrum(ric_l_matrix(R, p))
