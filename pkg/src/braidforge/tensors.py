"""Four-index braid tensors and their action on tensor-product spaces.

A BraidTensor T stores entries T[i1][i2][j1][j2]; the upper pair (i1, i2) is
the output (row) index and the lower pair (j1, j2) the input (column) index,
flattened row-major as i1*m + i2.  A tensor satisfying the braid equation and
whose m^2 x m^2 matrix is invertible yields a braid-group representation by
acting on adjacent factors of V tensored n times.

Traces of word images can be computed three ways: densely (small n only), by
sparse row contraction, or, for tensors built from a matrix pair, by folding
the word onto per-strand matrix products and multiplying cycle traces.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .braids import BraidWord, Permutation, underlying_permutation
from .errors import (
    DimensionMismatch,
    IndexOutOfRange,
    NotScalar,
    SingularInput,
    ZeroScalar,
)
from .matrix import RingMatrix, mat_det, mat_inverse


@dataclass(frozen=True)
class BraidTensor:
    """A 4-index tensor T[i1][i2][j1][j2] over an exact ring."""

    m: int
    ring: object
    entries: tuple
    # When built from a matrix pair (a, b), keep the pair for fast traces.
    pair: tuple[RingMatrix, RingMatrix] | None = field(default=None, compare=False)

    @classmethod
    def from_function(cls, m: int, ring, fn, pair=None) -> "BraidTensor":
        entries = tuple(
            tuple(
                tuple(
                    tuple(ring.coerce(fn(i1, i2, j1, j2)) for j2 in range(m))
                    for j1 in range(m)
                )
                for i2 in range(m)
            )
            for i1 in range(m)
        )
        return cls(m, ring, entries, pair)

    def __getitem__(self, idx: tuple[int, int, int, int]):
        i1, i2, j1, j2 = idx
        return self.entries[i1][i2][j1][j2]

    def to_jsonable(self) -> dict:
        return {
            "m": self.m,
            "ring": self.ring.name,
            "entries": [
                [
                    [[self.ring.to_text(x) for x in r2] for r2 in r1]
                    for r1 in block
                ]
                for block in self.entries
            ],
        }


def tensor_to_matrix(T: BraidTensor) -> RingMatrix:
    """The m^2 x m^2 matrix with row (i1, i2) and column (j1, j2)."""
    m = T.m
    rows = [
        [T[i1, i2, j1, j2] for j1 in range(m) for j2 in range(m)]
        for i1 in range(m)
        for i2 in range(m)
    ]
    return RingMatrix(T.ring, rows)


def matrix_to_tensor(mat: RingMatrix, m: int, pair=None) -> BraidTensor:
    if mat.rows != m * m or mat.cols != m * m:
        raise DimensionMismatch(f"expected a {m * m} x {m * m} matrix")
    return BraidTensor.from_function(
        m, mat.ring, lambda i1, i2, j1, j2: mat.entries[i1 * m + i2][j1 * m + j2], pair
    )


def identity_tensor(m: int, ring) -> BraidTensor:
    return BraidTensor.from_function(
        m, ring, lambda i1, i2, j1, j2: ring.one if (i1, i2) == (j1, j2) else ring.zero
    )


def swap_tensor(m: int, ring) -> BraidTensor:
    return BraidTensor.from_function(
        m, ring, lambda i1, i2, j1, j2: ring.one if (i1, i2) == (j2, j1) else ring.zero
    )


def tensor_from_matrix_pair(a: RingMatrix, b: RingMatrix) -> BraidTensor:
    """The tensor T[i1][i2][j1][j2] = b[i1][j2] * a[i2][j1].

    As a matrix this is (b kron a) times the swap, so it is invertible exactly
    when a and b are.
    """
    if a.ring is not b.ring or a.rows != b.rows or not a.is_square() or not b.is_square():
        raise DimensionMismatch("pair must be square matrices of equal size and ring")
    ring = a.ring
    if not ring.is_unit(mat_det(a)) or not ring.is_unit(mat_det(b)):
        raise SingularInput("both matrices of the pair must be invertible")
    return BraidTensor.from_function(
        a.rows,
        ring,
        lambda i1, i2, j1, j2: b.entries[i1][j2] * a.entries[i2][j1],
        pair=(a, b),
    )


def tensor_inverse(T: BraidTensor) -> BraidTensor:
    """The tensor of the inverse operator, refolded to 4-index form."""
    inv_pair = None
    if T.pair is not None:
        a, b = T.pair
        inv_pair = (mat_inverse(b), mat_inverse(a))
    return matrix_to_tensor(mat_inverse(tensor_to_matrix(T)), T.m, pair=inv_pair)


def check_braid_equation(
    T: BraidTensor, U: BraidTensor | None = None
) -> list[tuple[str, tuple[int, ...]]]:
    """Violations of the braid equation, empty iff the tensor(s) pass.

    With one tensor the period-1 equation is checked; with two, the period-2
    pair of equations.  Each violation is (relation name, (i1,i2,i3,j1,j2,j3)).
    """
    if U is None:
        return _check_one_equation(T, T, T, "viii")
    if U.m != T.m:
        raise DimensionMismatch("both tensors must share the local dimension")
    return _check_one_equation(T, U, T, "xv") + _check_xvi(T, U)


def _check_one_equation(
    T1: BraidTensor, T2: BraidTensor, T3: BraidTensor, name: str
) -> list[tuple[str, tuple[int, ...]]]:
    # sum_k T1^{i1 i2}_{k1 k3} T2^{k3 i3}_{k2 j3} T3^{k1 k2}_{j1 j2}
    #   = sum_k T2^{i2 i3}_{k1 k3} T3^{i1 k1}_{j1 k2} T2'^{k2 k3}_{j2 j3}
    # with the standard role pattern (T, U, T) vs (U, T, U).
    m = T1.m
    ring = T1.ring
    rng = range(m)
    out = []
    for i1 in rng:
        for i2 in rng:
            for i3 in rng:
                for j1 in rng:
                    for j2 in rng:
                        for j3 in rng:
                            lhs = ring.zero
                            rhs = ring.zero
                            for k1 in rng:
                                for k2 in rng:
                                    for k3 in rng:
                                        lhs = lhs + (
                                            T1[i1, i2, k1, k3]
                                            * T2[k3, i3, k2, j3]
                                            * T1[k1, k2, j1, j2]
                                        )
                                        rhs = rhs + (
                                            T2[i2, i3, k1, k3]
                                            * T1[i1, k1, j1, k2]
                                            * T2[k2, k3, j2, j3]
                                        )
                            if lhs != rhs:
                                out.append((name, (i1, i2, i3, j1, j2, j3)))
    return out


def _check_xvi(T1: BraidTensor, T2: BraidTensor) -> list[tuple[str, tuple[int, ...]]]:
    # sum_k T2^{i2 i3}_{k1 k3} T1^{k3 i1}_{k2 j1} T2^{k1 k2}_{j2 j3}
    #   = sum_k T1^{i3 i1}_{k1 k3} T2^{i2 k1}_{j2 k2} T1^{k2 k3}_{j3 j1}
    m = T1.m
    ring = T1.ring
    rng = range(m)
    out = []
    for i1 in rng:
        for i2 in rng:
            for i3 in rng:
                for j1 in rng:
                    for j2 in rng:
                        for j3 in rng:
                            lhs = ring.zero
                            rhs = ring.zero
                            for k1 in rng:
                                for k2 in rng:
                                    for k3 in rng:
                                        lhs = lhs + (
                                            T2[i2, i3, k1, k3]
                                            * T1[k3, i1, k2, j1]
                                            * T2[k1, k2, j2, j3]
                                        )
                                        rhs = rhs + (
                                            T1[i3, i1, k1, k3]
                                            * T2[i2, k1, j2, k2]
                                            * T1[k2, k3, j3, j1]
                                        )
                            if lhs != rhs:
                                out.append(("xvi", (i1, i2, i3, j1, j2, j3)))
    return out


def partial_trace_scalars(T: BraidTensor):
    """The scalars (lambda1, lambda2) of the two partial-trace matrices.

    lambda1 comes from gamma^{i1}_{i2} = sum_j T[i1][j][i2][j]; lambda2 from
    the same contraction of the inverse tensor.  Both matrices must be
    nonzero scalar multiples of the identity.
    """

    def scalar_of(tensor: BraidTensor):
        m = tensor.m
        ring = tensor.ring
        gamma = [
            [
                sum((tensor[i1, j, i2, j] for j in range(m)), ring.zero)
                for i2 in range(m)
            ]
            for i1 in range(m)
        ]
        lam = gamma[0][0]
        for i1 in range(m):
            for i2 in range(m):
                expected = lam if i1 == i2 else ring.zero
                if gamma[i1][i2] != expected:
                    raise NotScalar("partial trace is not a scalar matrix")
        if ring.is_zero(lam):
            raise ZeroScalar("partial-trace scalar vanished")
        return lam

    return scalar_of(T), scalar_of(tensor_inverse(T))


class SlotOperator:
    """The operator acting as a tensor on factors (i, i+1), identity elsewhere."""

    def __init__(self, T: BraidTensor, strands: int, index: int):
        if not 1 <= index <= strands - 1:
            raise IndexOutOfRange(
                f"generator index {index} out of range for {strands} strands"
            )
        self.T = T
        self.strands = strands
        self.index = index

    def to_matrix(self) -> RingMatrix:
        """The dense m^n x m^n matrix; intended for small strand counts only."""
        T, n, i = self.T, self.strands, self.index
        m, ring = T.m, T.ring
        dim = m**n
        zero = ring.zero
        rows = [[zero] * dim for _ in range(dim)]
        configs = list(_configs(m, n))
        for row_cfg in configs:
            row = _config_rank(row_cfg, m)
            u, v = row_cfg[i - 1], row_cfg[i]
            for p in range(m):
                for q in range(m):
                    val = T[u, v, p, q]
                    if ring.is_zero(val):
                        continue
                    col_cfg = row_cfg[: i - 1] + (p, q) + row_cfg[i + 1 :]
                    rows[row][_config_rank(col_cfg, m)] = val
        return RingMatrix(ring, rows)

    def apply_rows(self, rows: dict[int, dict[int, object]]) -> dict[int, dict[int, object]]:
        """Right-multiply a sparse row map {row: {col: coeff}} by this operator."""
        T, n, i = self.T, self.strands, self.index
        m, ring = T.m, T.ring
        out: dict[int, dict[int, object]] = {}
        for row, cols in rows.items():
            acc: dict[int, object] = {}
            for col, coeff in cols.items():
                cfg = _config_unrank(col, m, n)
                u, v = cfg[i - 1], cfg[i]
                for p in range(m):
                    for q in range(m):
                        val = T[u, v, p, q]
                        if ring.is_zero(val):
                            continue
                        new_col = _config_rank(cfg[: i - 1] + (p, q) + cfg[i + 1 :], m)
                        cur = acc.get(new_col)
                        term = coeff * val
                        acc[new_col] = term if cur is None else cur + term
            out[row] = {c: x for c, x in acc.items() if not ring.is_zero(x)}
        return out


def _configs(m: int, n: int):
    cfg = [0] * n
    while True:
        yield tuple(cfg)
        for pos in range(n - 1, -1, -1):
            cfg[pos] += 1
            if cfg[pos] < m:
                break
            cfg[pos] = 0
        else:
            return


def _config_rank(cfg: tuple[int, ...], m: int) -> int:
    rank = 0
    for x in cfg:
        rank = rank * m + x
    return rank


def _config_unrank(rank: int, m: int, n: int) -> tuple[int, ...]:
    cfg = [0] * n
    for pos in range(n - 1, -1, -1):
        cfg[pos] = rank % m
        rank //= m
    return tuple(cfg)


def tensor_generator_operator(T: BraidTensor, strands: int, index: int) -> SlotOperator:
    return SlotOperator(T, strands, index)


def tensor_rep_trace(T: BraidTensor, w: BraidWord, method: str = "auto"):
    """Exact trace of the word's image in the n-fold tensor representation.

    method "dense" multiplies full m^n matrices (oracle for small n);
    "contract" right-multiplies a sparse row map by each local operator;
    "slots" folds the word onto per-strand matrix products, available when the
    tensor was built from a matrix pair.  "auto" picks the fastest valid one.
    """
    if method == "auto":
        method = "slots" if T.pair is not None else "contract"
    if method == "slots":
        return _trace_by_slots(T, w)
    if method == "dense":
        return _trace_dense(T, w)
    if method == "contract":
        return _trace_by_contraction(T, w)
    raise ValueError(f"unknown trace method: {method}")


def _trace_dense(T: BraidTensor, w: BraidWord):
    n = w.strands
    ring = T.ring
    result = RingMatrix.identity(ring, T.m**n)
    inv = None
    for letter in w.letters:
        if letter > 0:
            op = SlotOperator(T, n, letter).to_matrix()
        else:
            if inv is None:
                inv = tensor_inverse(T)
            op = SlotOperator(inv, n, -letter).to_matrix()
        result = result * op
    return result.trace()


def _trace_by_contraction(T: BraidTensor, w: BraidWord):
    n = w.strands
    ring = T.ring
    dim = T.m**n
    rows: dict[int, dict[int, object]] = {r: {r: ring.one} for r in range(dim)}
    inv = None
    for letter in w.letters:
        if letter > 0:
            op = SlotOperator(T, n, letter)
        else:
            if inv is None:
                inv = tensor_inverse(T)
            op = SlotOperator(inv, n, -letter)
        rows = op.apply_rows(rows)
    return sum((rows[r].get(r, ring.zero) for r in range(dim)), ring.zero)


def _trace_by_slots(T: BraidTensor, w: BraidWord):
    """Fold the word onto one matrix product per strand, then multiply
    the traces of the label products around each closure cycle.

    For a tensor built from the pair (a, b), the generator acts on adjacent
    factors by swapping them and inserting b on one strand and a on the
    other; the full trace therefore factors over the cycles of the
    underlying permutation.
    """
    a, b = T.pair
    ring = T.ring
    n = w.strands
    ident = RingMatrix.identity(ring, T.m)
    a_inv = b_inv = None
    z = [ident] * (n + 1)
    # tau[j] tracks which original strand currently sits at position j.
    tau = list(range(n + 1))
    for letter in w.letters:
        i = abs(letter)
        if letter > 0:
            z[tau[i]] = z[tau[i]] * b
            z[tau[i + 1]] = z[tau[i + 1]] * a
        else:
            if a_inv is None:
                a_inv, b_inv = mat_inverse(a), mat_inverse(b)
            z[tau[i]] = z[tau[i]] * a_inv
            z[tau[i + 1]] = z[tau[i + 1]] * b_inv
        tau[i], tau[i + 1] = tau[i + 1], tau[i]
    perm = underlying_permutation(w)
    total = ring.one
    for cycle in perm.cycles():
        prod = ident
        for j in cycle:
            prod = prod * z[j]
        total = total * prod.trace()
    return total
