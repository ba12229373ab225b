"""Euclidean scaffolding: multi-indices, p-forms, symmetric 2-tensors and
algebraic curvature tensors.

Everything lives on R^n with the standard inner product and orthonormal
basis e_1, ..., e_n (0-based in code, 1-based in prose).  The inner product
on (0,k)-tensors is the componentwise one, so a p-form stored on strictly
increasing multi-indices has |w|^2 = p! * sum of squared stored coefficients.

Sign convention for curvature: the unit round sphere is
R_{ijkl} = d_{ik} d_{jl} - d_{il} d_{jk}, and Ric_{ij} = sum_k R_{ikjk}.
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations
import math
import os

import numpy as np

from .errors import CurvatureSymmetryError, DimensionMismatch, ShapeMismatch

DEFAULT_DIMENSION_CAP = 12


def dimension_cap():
    """Soft upper bound on n, overridable via CURVKIND_NMAX."""
    return int(os.environ.get("CURVKIND_NMAX", DEFAULT_DIMENSION_CAP))


def check_dimension(n):
    if not isinstance(n, (int, np.integer)) or n < 2:
        raise ShapeMismatch(f"dimension must be an integer >= 2, got {n!r}")
    return int(n)


def s02_dimension(n):
    """dim of trace-free symmetric 2-tensors: (n-1)(n+2)/2."""
    return (n - 1) * (n + 2) // 2


@lru_cache(maxsize=None)
def multi_indices(n, p):
    """All strictly increasing p-tuples from {0, ..., n-1}, sorted."""
    if p < 0 or p > n:
        raise ShapeMismatch(f"need 0 <= p <= n, got p={p}, n={n}")
    return tuple(combinations(range(n), p))


@lru_cache(maxsize=None)
def multi_index_positions(n, p):
    return {idx: pos for pos, idx in enumerate(multi_indices(n, p))}


def sort_with_sign(idx):
    """Sort an index tuple, tracking permutation parity.

    Returns (sign, sorted_tuple); sign is 0 when the tuple has a repeated
    entry (the corresponding alternating coefficient vanishes).
    """
    seq = list(idx)
    sign = 1
    for i in range(1, len(seq)):
        j = i
        while j > 0 and seq[j - 1] > seq[j]:
            seq[j - 1], seq[j] = seq[j], seq[j - 1]
            sign = -sign
            j -= 1
        if j > 0 and seq[j - 1] == seq[j]:
            return 0, None
    return sign, tuple(seq)


@lru_cache(maxsize=None)
def _signed_permutations(p):
    """Permutations of range(p) with their parities."""
    out = []
    for perm in permutations(range(p)):
        sign, _ = sort_with_sign(perm)
        out.append((perm, sign))
    return tuple(out)


@dataclass(frozen=True)
class PForm:
    """Alternating (0,p)-tensor stored on strictly increasing multi-indices.

    coeffs[k] is the component on multi_indices(n, p)[k]; the full
    antisymmetric extension is implied.  |w|^2 = p! * sum(coeffs**2).
    """

    n: int
    p: int
    coeffs: np.ndarray

    def __post_init__(self):
        check_dimension(self.n)
        expected = math.comb(self.n, self.p)
        c = np.asarray(self.coeffs, dtype=float)
        if c.shape != (expected,):
            raise ShapeMismatch(
                f"p-form on n={self.n}, p={self.p} needs {expected} coefficients,"
                f" got shape {c.shape}"
            )
        object.__setattr__(self, "coeffs", c)

    @property
    def norm_sq(self):
        return math.factorial(self.p) * float(np.dot(self.coeffs, self.coeffs))

    def inner(self, other):
        """Tensor inner product <w, h> = p! * sum over sorted indices."""
        if (self.n, self.p) != (other.n, other.p):
            raise DimensionMismatch("forms live on different spaces")
        return math.factorial(self.p) * float(np.dot(self.coeffs, other.coeffs))

    def to_dense(self):
        """Full n^p component array of the antisymmetric extension."""
        dense = np.zeros((self.n,) * self.p)
        for pos, idx in enumerate(multi_indices(self.n, self.p)):
            c = self.coeffs[pos]
            if c == 0.0:
                continue
            for perm, sign in _signed_permutations(self.p):
                dense[tuple(idx[q] for q in perm)] = sign * c
        return dense

    @classmethod
    def from_dense(cls, dense):
        dense = np.asarray(dense, dtype=float)
        p = dense.ndim
        n = dense.shape[0] if p else 2
        if p and dense.shape != (n,) * p:
            raise ShapeMismatch(f"dense form must be cubical, got {dense.shape}")
        if p == 0:
            raise ShapeMismatch("from_dense needs p >= 1; use zero/basis constructors")
        idxs = multi_indices(n, p)
        coeffs = np.array([dense[idx] for idx in idxs])
        return cls(n, p, coeffs)

    @classmethod
    def zero(cls, n, p):
        return cls(n, p, np.zeros(math.comb(n, p)))

    @classmethod
    def wedge(cls, n, idx):
        """e^{i_1} ^ ... ^ e^{i_p} (coefficient 1 on the sorted tuple idx)."""
        p = len(idx)
        sign, sidx = sort_with_sign(tuple(idx))
        if sign == 0:
            raise ShapeMismatch(f"repeated index in wedge {idx}")
        coeffs = np.zeros(math.comb(n, p))
        coeffs[multi_index_positions(n, p)[sidx]] = sign
        return cls(n, p, coeffs)

    @classmethod
    def unit_wedge(cls, n, idx):
        """Unit-norm wedge basis element: wedge(idx) / sqrt(p!)."""
        w = cls.wedge(n, idx)
        return cls(n, w.p, w.coeffs / math.sqrt(math.factorial(w.p)))

    @classmethod
    def random(cls, n, p, rng):
        return cls(n, p, rng.standard_normal(math.comb(n, p)))


# ---------------------------------------------------------------------------
# symmetric 2-tensors


def require_square(S, n=None):
    S = np.asarray(S, dtype=float)
    if S.ndim != 2 or S.shape[0] != S.shape[1]:
        raise ShapeMismatch(f"expected a square matrix, got shape {S.shape}")
    if n is not None and S.shape[0] != n:
        raise DimensionMismatch(f"expected dimension {n}, got {S.shape[0]}")
    return S


def trace_free_project(S):
    """Orthogonal projection S -> S - (tr S / n) g onto trace-free tensors."""
    S = require_square(S)
    n = S.shape[0]
    return S - (np.trace(S) / n) * np.eye(n)


def is_trace_free(S, tol=None):
    S = require_square(S)
    if tol is None:
        tol = 1e-12 * (1.0 + float(np.abs(S).max(initial=0.0)))
    return abs(float(np.trace(S))) <= tol


def sym_inner(A, B):
    """<A, B> = sum_{ij} A_{ij} B_{ij}."""
    return float(np.sum(np.asarray(A) * np.asarray(B)))


def canonical_s02_basis(n):
    """Orthonormal basis of trace-free symmetric 2-tensors, shape (N, n, n).

    First the (e^i x e^j + e^j x e^i)/sqrt(2) for i < j, then for
    k = 1, ..., n-1 the diagonal tensors

        (-(n-k) e^k x e^k + sum_{l>k} e^l x e^l) / sqrt((n-k+1)(n-k)).

    Pairwise orthonormal under sym_inner, each trace-free; N = (n-1)(n+2)/2.
    """
    n = check_dimension(n)
    out = np.zeros((s02_dimension(n), n, n))
    pos = 0
    for i in range(n):
        for j in range(i + 1, n):
            out[pos, i, j] = out[pos, j, i] = 1.0 / math.sqrt(2.0)
            pos += 1
    for k in range(n - 1):
        m = n - (k + 1)  # number of trailing +1 entries
        norm = math.sqrt((m + 1) * m)
        out[pos, k, k] = -m / norm
        for l in range(k + 1, n):
            out[pos, l, l] = 1.0 / norm
        pos += 1
    return out


def canonical_s2_basis(n):
    """Orthonormal basis of all symmetric 2-tensors: e^i x e^i, then the
    off-diagonal (e^i x e^j + e^j x e^i)/sqrt(2); shape (n(n+1)/2, n, n)."""
    n = check_dimension(n)
    out = np.zeros((n * (n + 1) // 2, n, n))
    pos = 0
    for i in range(n):
        out[pos, i, i] = 1.0
        pos += 1
    for i in range(n):
        for j in range(i + 1, n):
            out[pos, i, j] = out[pos, j, i] = 1.0 / math.sqrt(2.0)
            pos += 1
    return out


def random_trace_free(n, rng):
    """Random trace-free symmetric matrix with unit Frobenius norm."""
    A = rng.standard_normal((n, n))
    S = trace_free_project(A + A.T)
    return S / np.linalg.norm(S)


# ---------------------------------------------------------------------------
# algebraic curvature tensors


@dataclass(frozen=True)
class CurvatureTensor:
    """Dense (0,4)-tensor R_{ijkl} with the algebraic curvature symmetries.

    Construction validates nothing; call validate() (or build through the
    model constructors) before trusting an instance.  Invalid input is
    rejected by validate(), never silently symmetrized.
    """

    n: int
    components: np.ndarray

    def __post_init__(self):
        n = check_dimension(self.n)
        R = np.asarray(self.components, dtype=float)
        if R.size != n**4:
            raise ShapeMismatch(
                f"curvature tensor on n={n} needs {n**4} components, got {R.size}"
            )
        object.__setattr__(self, "components", R.reshape((n, n, n, n)))

    def validate(self, tol=None):
        validate_curvature(self, tol=tol)
        return self

    @property
    def max_abs(self):
        return float(np.abs(self.components).max(initial=0.0))

    def __add__(self, other):
        if not isinstance(other, CurvatureTensor):
            return NotImplemented
        if other.n != self.n:
            raise DimensionMismatch("curvature tensors on different dimensions")
        return CurvatureTensor(self.n, self.components + other.components)

    def __mul__(self, scalar):
        return CurvatureTensor(self.n, self.components * float(scalar))

    __rmul__ = __mul__


def curvature_symmetry_report(R):
    """Worst residual of each curvature identity, with offending indices.

    Returns a dict with keys 'antisymmetry_first', 'antisymmetry_second',
    'pair_symmetry', 'first_bianchi'; each value is (residual, (i,j,k,l)).
    """
    A = R.components
    checks = {
        "antisymmetry_first": A + np.transpose(A, (1, 0, 2, 3)),
        "antisymmetry_second": A + np.transpose(A, (0, 1, 3, 2)),
        "pair_symmetry": A - np.transpose(A, (2, 3, 0, 1)),
        "first_bianchi": A + np.transpose(A, (1, 2, 0, 3)) + np.transpose(A, (2, 0, 1, 3)),
    }
    report = {}
    for name, res in checks.items():
        flat = np.abs(res)
        worst = np.unravel_index(int(np.argmax(flat)), flat.shape)
        report[name] = (float(flat[worst]), tuple(int(q) for q in worst))
    return report


def validate_curvature(R, tol=None):
    """Raise CurvatureSymmetryError unless R has all curvature symmetries.

    Default tolerance is 1e-12 * max|R| (exact-arithmetic constructions stay
    far below it; genuinely broken tensors are rejected, not repaired).
    """
    if tol is None:
        tol = 1e-12 * R.max_abs
    report = curvature_symmetry_report(R)
    worst_name = max(report, key=lambda k: report[k][0])
    worst_res, worst_idx = report[worst_name]
    if worst_res > tol:
        raise CurvatureSymmetryError(
            f"{worst_name} violated: residual {worst_res:.3e} at indices "
            f"{tuple(q + 1 for q in worst_idx)} (1-based), tolerance {tol:.3e}",
            report=report,
        )
    return report


def rotate_curvature(R, Q):
    """Components of R in the rotated orthonormal frame f_i = sum_a Q_{ai} e_a."""
    Q = require_square(Q, n=R.n)
    Rr = np.einsum("abcd,ai,bj,ck,dl->ijkl", R.components, Q, Q, Q, Q, optimize=True)
    return CurvatureTensor(R.n, Rr)


def rotate_form(w, Q):
    """Coefficients of a p-form in the rotated frame f_i = sum_a Q_{ai} e_a."""
    Q = require_square(Q, n=w.n)
    if w.p == 0:
        return w
    dense = w.to_dense()
    for _ in range(w.p):
        # contract the leading slot and cycle it to the back
        dense = np.tensordot(Q, dense, axes=([0], [0]))
        dense = np.moveaxis(dense, 0, -1)
    return PForm.from_dense(dense)


def kulkarni_nomizu(h, k):
    """Kulkarni-Nomizu product of symmetric matrices,

        (h o k)_{ijkl} = h_ik k_jl + h_jl k_ik - h_il k_jk - h_jk k_il.

    g o g / 2 is the unit-sphere tensor.
    """
    h = require_square(h)
    k = require_square(k, n=h.shape[0])
    R = (
        np.einsum("ik,jl->ijkl", h, k)
        + np.einsum("jl,ik->ijkl", h, k)
        - np.einsum("il,jk->ijkl", h, k)
        - np.einsum("jk,il->ijkl", h, k)
    )
    return CurvatureTensor(h.shape[0], R)
