"""States, local operators and decompositions.

Amplitude indexing is big-endian: index ``i`` of the amplitude vector is
read as the binary string ``|q1 q2 ... qn>`` with qubit 1 the most
significant bit.  States are complex vectors that need not be normalized;
all rank and zero decisions use tolerances relative to the largest
magnitude in the object at hand.
"""

import json
from dataclasses import dataclass

import numpy as np

from .errors import (
    DimensionMismatch,
    SingularOperator,
    StateFormatError,
    ZeroState,
)

DEFAULT_EPS = 1e-9

#: Absolute floor below which a local operator counts as singular.
DET_FLOOR = 1e-300


class PureState:
    """An unnormalized pure state of ``n`` qubits (1 <= n <= 4)."""

    __slots__ = ("n", "amps")

    def __init__(self, amps):
        arr = np.asarray(amps, dtype=np.complex128).reshape(-1).copy()
        size = arr.shape[0]
        n = size.bit_length() - 1
        if size != 2**n or not 1 <= n <= 4:
            raise DimensionMismatch(
                f"amplitude vector of length {size} is not a 1..4 qubit state"
            )
        if not np.all(np.isfinite(arr.view(np.float64))):
            raise StateFormatError("amplitudes must be finite")
        arr.setflags(write=False)
        self.n = n
        self.amps = arr

    def max_abs(self) -> float:
        return float(np.abs(self.amps).max())

    def norm(self) -> float:
        return float(np.linalg.norm(self.amps))

    def is_zero(self) -> bool:
        return self.max_abs() == 0.0

    def reshaped(self):
        """Amplitudes viewed as a (2,)*n tensor, one axis per qubit."""
        return self.amps.reshape((2,) * self.n)

    def __repr__(self):
        return f"PureState(n={self.n}, amps={self.amps!r})"


@dataclass(frozen=True)
class LocalOperator:
    """An invertible 2x2 complex matrix acting on a single qubit."""

    m: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.m, dtype=np.complex128)
        if arr.shape != (2, 2):
            raise DimensionMismatch("local operator must be a 2x2 matrix")
        det = arr[0, 0] * arr[1, 1] - arr[0, 1] * arr[1, 0]
        if not np.isfinite(det) or abs(det) < DET_FLOOR:
            raise SingularOperator(f"operator determinant {det} below floor")
        arr = arr.copy()
        arr.setflags(write=False)
        object.__setattr__(self, "m", arr)

    @property
    def det(self) -> complex:
        return complex(self.m[0, 0] * self.m[1, 1] - self.m[0, 1] * self.m[1, 0])

    def inverse(self) -> "LocalOperator":
        d = self.det
        inv = np.array(
            [[self.m[1, 1], -self.m[0, 1]], [-self.m[1, 0], self.m[0, 0]]]
        ) / d
        return LocalOperator(inv)


@dataclass(frozen=True)
class SloccOp:
    """One invertible local operator per qubit (a SLOCC group element)."""

    ops: tuple

    def __post_init__(self):
        ops = tuple(
            op if isinstance(op, LocalOperator) else LocalOperator(op)
            for op in self.ops
        )
        if not 1 <= len(ops) <= 4:
            raise DimensionMismatch("SloccOp must act on 1..4 qubits")
        object.__setattr__(self, "ops", ops)

    @property
    def n(self) -> int:
        return len(self.ops)

    @classmethod
    def identity(cls, n: int) -> "SloccOp":
        return cls(tuple(LocalOperator(np.eye(2)) for _ in range(n)))

    def inverse(self) -> "SloccOp":
        return SloccOp(tuple(op.inverse() for op in self.ops))


@dataclass(frozen=True)
class Decomposition:
    """Split of a state as |0>|phi0> + |1>|phi1> on a distinguished qubit.

    ``phi0`` collects the amplitudes where the distinguished qubit is 0 and
    ``phi1`` those where it is 1; the remaining qubits keep their relative
    order.
    """

    phi0: PureState
    phi1: PureState
    distinguished: int


_EINSUM = {
    1: "ai,i->a",
    2: "ai,bj,ij->ab",
    3: "ai,bj,ck,ijk->abc",
    4: "ai,bj,ck,dl,ijkl->abcd",
}


def apply_slocc(state: PureState, op: SloccOp) -> PureState:
    """Apply the tensor product of the per-qubit operators to the state."""
    if op.n != state.n:
        raise DimensionMismatch(f"operator acts on {op.n} qubits, state has {state.n}")
    mats = [o.m for o in op.ops]
    out = np.einsum(_EINSUM[state.n], *mats, state.reshaped())
    return PureState(out.reshape(-1))


def decompose(state: PureState, distinguished: int) -> Decomposition:
    """Decompose on the given qubit (1-based index)."""
    if state.n < 2:
        raise DimensionMismatch("decomposition needs at least 2 qubits")
    if not 1 <= distinguished <= state.n:
        raise DimensionMismatch(
            f"distinguished qubit {distinguished} out of range 1..{state.n}"
        )
    arr = np.moveaxis(state.reshaped(), distinguished - 1, 0)
    half = 2 ** (state.n - 1)
    return Decomposition(
        phi0=PureState(arr[0].reshape(half)),
        phi1=PureState(arr[1].reshape(half)),
        distinguished=distinguished,
    )


def recompose(d: Decomposition) -> PureState:
    """Inverse of :func:`decompose`; a pure index permutation, no arithmetic."""
    n = d.phi0.n + 1
    arr = np.stack([d.phi0.reshaped(), d.phi1.reshaped()])
    return PureState(np.moveaxis(arr, 0, d.distinguished - 1).reshape(2**n))


def permute_qubits(state: PureState, perm) -> PureState:
    """Reorder qubits so that new qubit ``i`` is old qubit ``perm[i-1]`` (1-based)."""
    perm = tuple(perm)
    if sorted(perm) != list(range(1, state.n + 1)):
        raise DimensionMismatch(f"{perm} is not a permutation of 1..{state.n}")
    axes = tuple(p - 1 for p in perm)
    return PureState(state.reshaped().transpose(axes).reshape(-1))


def _herm2_eigs(u, v):
    """Eigenvalues (min, max) of the 2x2 Gram matrix of two row vectors,
    in closed form."""
    g00 = float(np.vdot(u, u).real)
    g11 = float(np.vdot(v, v).real)
    g01 = complex(np.vdot(v, u))
    tr = g00 + g11
    disc = ((g00 - g11) ** 2 + 4.0 * (g01.real**2 + g01.imag**2)) ** 0.5
    return max(0.5 * (tr - disc), 0.0), 0.5 * (tr + disc)


def span_dimension(d: Decomposition, eps: float = DEFAULT_EPS) -> int:
    """Dimension (1 or 2) of span{phi0, phi1}.

    Returns 2 iff the smallest singular value of the Gram matrix of the two
    residual states exceeds ``eps`` times the largest.
    """
    lo, hi = _herm2_eigs(d.phi0.amps, d.phi1.amps)
    if hi <= 0.0:
        raise ZeroState("both residual states vanish")
    return 2 if lo > eps * hi else 1


#: The seven nontrivial bipartitions of four qubits, named by the qubits on
#: the row side of the reshaped amplitude matrix.
BIPARTITIONS = ((1,), (2,), (3,), (4,), (1, 2), (1, 3), (1, 4))

_CUT_AXES = {
    (1,): (0, 1, 2, 3),
    (2,): (1, 0, 2, 3),
    (3,): (2, 0, 1, 3),
    (4,): (3, 0, 1, 2),
    (1, 2): (0, 1, 2, 3),
    (1, 3): (0, 2, 1, 3),
    (1, 4): (0, 3, 1, 2),
}


def cut_matrix(state: PureState, cut) -> np.ndarray:
    """Amplitude matrix of a 4-qubit state reshaped along the given cut."""
    if state.n != 4:
        raise DimensionMismatch("bipartition cuts are defined for 4-qubit states")
    cut = tuple(cut)
    rows = 2 ** len(cut)
    return state.reshaped().transpose(_CUT_AXES[cut]).reshape(rows, 16 // rows)


def _two_row_sv_ratio(m: np.ndarray) -> float:
    """sigma_min/sigma_max of a 2-row matrix, cancellation-free.

    The product sigma_1 sigma_2 is the square root of the Gram determinant,
    accumulated as a sum of squared 2x2 minors so that exact rank
    deficiency is resolved to ~1e-16 rather than sqrt(machine eps).
    """
    u, v = m[0], m[1]
    g00 = float(np.vdot(u, u).real)
    g11 = float(np.vdot(v, v).real)
    g01 = complex(np.vdot(v, u))
    tr = g00 + g11
    if tr == 0.0:
        return 0.0
    outer = np.multiply.outer(u, v)
    minors = outer - outer.T
    det = 0.5 * float(np.vdot(minors, minors).real)
    disc = ((g00 - g11) ** 2 + 4.0 * (g01.real**2 + g01.imag**2)) ** 0.5
    lmax = 0.5 * (tr + disc)
    return max(det, 0.0) ** 0.5 / lmax


def bipartition_ranks(state: PureState, eps: float = DEFAULT_EPS) -> dict:
    """Numerical rank of the amplitude matrix along each of the 7 cuts."""
    if state.is_zero():
        raise ZeroState("cannot rank the zero state")
    ranks = {}
    for cut in BIPARTITIONS[:4]:
        ratio = _two_row_sv_ratio(cut_matrix(state, cut))
        ranks[cut] = 2 if ratio > eps else 1
    stack = np.stack([cut_matrix(state, cut) for cut in BIPARTITIONS[4:]])
    sv = np.linalg.svd(stack, compute_uv=False)
    for i, cut in enumerate(BIPARTITIONS[4:]):
        ranks[cut] = int(np.sum(sv[i] > eps * sv[i][0]))
    return ranks


# ---------------------------------------------------------------------------
# state JSON format: {"n": int, "amps": [[re, im], ...]} with 2^n entries

def state_to_json(state: PureState) -> dict:
    return {
        "n": state.n,
        "amps": [[float(z.real), float(z.imag)] for z in state.amps],
    }


def state_from_json(obj) -> PureState:
    if not isinstance(obj, dict):
        raise StateFormatError("state JSON must be an object")
    try:
        n = obj["n"]
        amps = obj["amps"]
    except (KeyError, TypeError) as exc:
        raise StateFormatError("state JSON needs 'n' and 'amps' fields") from exc
    if not isinstance(n, int) or not 1 <= n <= 4:
        raise StateFormatError(f"'n' must be an integer in 1..4, got {n!r}")
    if not isinstance(amps, list) or len(amps) != 2**n:
        raise StateFormatError(f"'amps' must list 2^{n} = {2**n} entries")
    vec = np.empty(2**n, dtype=np.complex128)
    for i, entry in enumerate(amps):
        if (
            not isinstance(entry, (list, tuple))
            or len(entry) != 2
            or not all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in entry)
        ):
            raise StateFormatError(f"amplitude {i} must be a [re, im] number pair")
        vec[i] = complex(entry[0], entry[1])
    try:
        return PureState(vec)
    except StateFormatError:
        raise
    except Exception as exc:  # pragma: no cover - defensive
        raise StateFormatError(str(exc)) from exc


def load_state(fp) -> PureState:
    """Read a state from a file object or path."""
    if hasattr(fp, "read"):
        text = fp.read()
    else:
        with open(fp, "r", encoding="utf-8") as fh:
            text = fh.read()
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise StateFormatError(f"invalid JSON: {exc}") from exc
    return state_from_json(obj)


def save_state(state: PureState, fp) -> None:
    if hasattr(fp, "write"):
        json.dump(state_to_json(state), fp)
    else:
        with open(fp, "w", encoding="utf-8") as fh:
            json.dump(state_to_json(state), fh)
