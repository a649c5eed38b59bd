"""Exact integer matrices with certified spectral-radius brackets.

For a non-negative square matrix A, every row sum R_i satisfies

    min_i R_i  <=  rho(A)  <=  max_i R_i,

where rho is the spectral radius.  Applying this to the exact power A^k
and taking k-th roots gives a bracket

    (min_i R_i(A^k)) ** (1/k)  <=  rho(A)  <=  (max_i R_i(A^k)) ** (1/k)

that tightens as k grows through doubling.  Powers are computed in
arbitrary-precision integer arithmetic, so apart from the outward
rounding applied to the k-th roots the brackets are certificates, not
estimates.  Floating point enters only in the k-th roots and in the
power iteration used to produce a point estimate inside the bracket.

A non-negative matrix is primitive when its adjacency graph is strongly
connected and the gcd of its directed cycle lengths is 1; equivalently,
some power of the matrix is entrywise positive.  Primitivity is decided
here by the graph criterion, with the dense positivity scan available as
a cross-check.
"""

from __future__ import annotations

import math
import operator
from collections import deque
from dataclasses import dataclass
from typing import Iterable

import numpy as np

# Relative slack applied outward to computed k-th roots so that float
# rounding can never push a bracket endpoint across the true value.
ROOT_SLACK = 1e-13


class NotPrimitiveError(ValueError):
    """An operation that needs a primitive matrix got a non-primitive one."""

    def __init__(self, reason: str, period: int | None = None):
        self.reason = reason
        self.period = period
        msg = f"matrix is not primitive: {reason}"
        if period is not None:
            msg += f" (cycle-length gcd {period})"
        super().__init__(msg)


class ConvergenceError(RuntimeError):
    """Power iteration exhausted its iteration cap without converging."""


@dataclass(frozen=True)
class IntMatrix:
    """Immutable square matrix of non-negative Python integers."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        n = len(self.rows)
        if n == 0:
            raise ValueError("matrix dimension must be at least 1")
        for row in self.rows:
            if len(row) != n:
                raise ValueError("matrix must be square")
            for x in row:
                if not isinstance(x, int):
                    raise TypeError(f"entries must be int, got {type(x).__name__}")
                if x < 0:
                    raise ValueError("entries must be non-negative")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> "IntMatrix":
        data = tuple(tuple(operator.index(x) for x in row) for row in rows)
        return cls(data)

    @staticmethod
    def identity(dim: int) -> "IntMatrix":
        if dim < 1:
            raise ValueError("matrix dimension must be at least 1")
        return _unsafe(tuple(tuple(1 if i == j else 0 for j in range(dim))
                             for i in range(dim)))

    @property
    def dim(self) -> int:
        return len(self.rows)

    def row_sums(self) -> tuple[int, ...]:
        return tuple(sum(row) for row in self.rows)

    def entry(self, i: int, j: int) -> int:
        return self.rows[i][j]

    def __mul__(self, other: "IntMatrix") -> "IntMatrix":
        return mat_mul(self, other)

    def __pow__(self, k: int) -> "IntMatrix":
        return mat_pow(self, k)

    def to_float_array(self) -> np.ndarray:
        try:
            return np.array([[float(x) for x in row] for row in self.rows])
        except OverflowError as exc:
            raise ValueError("matrix entries exceed double-precision range") from exc


def _unsafe(rows: tuple[tuple[int, ...], ...]) -> IntMatrix:
    # Internal constructor for products of already validated matrices.
    m = object.__new__(IntMatrix)
    object.__setattr__(m, "rows", rows)
    return m


def mat_mul(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    """Exact product.  Skips zero entries, so sparse operands stay cheap."""
    if a.dim != b.dim:
        raise ValueError(f"dimension mismatch: {a.dim} vs {b.dim}")
    n = a.dim
    brows = b.rows
    out = []
    for arow in a.rows:
        acc = [0] * n
        for k, aik in enumerate(arow):
            if aik:
                brow = brows[k]
                if aik == 1:
                    for j, x in enumerate(brow):
                        if x:
                            acc[j] += x
                else:
                    for j, x in enumerate(brow):
                        if x:
                            acc[j] += aik * x
        out.append(tuple(acc))
    return _unsafe(tuple(out))


def mat_pow(a: IntMatrix, k: int) -> IntMatrix:
    """Exact k-th power by repeated squaring, k >= 0."""
    if k < 0:
        raise ValueError("power must be non-negative")
    result = IntMatrix.identity(a.dim)
    base = a
    while k:
        if k & 1:
            result = mat_mul(result, base)
        k >>= 1
        if k:
            base = mat_mul(base, base)
    return result


def _int_root(m: int, k: int) -> float:
    if m == 0:
        return 0.0
    if k == 1 and m.bit_length() <= 53:
        return float(m)
    return math.exp(math.log(m) / k)


@dataclass(frozen=True)
class SpectralBracket:
    """Certified bracket around a spectral radius with a point estimate.

    lower and upper come from exact row sums with outward rounding, so
    lower <= rho <= upper holds whenever the source matrix is
    non-negative.  The estimate always lies inside the bracket; the
    eigenvector, when present, is normalized to maximum entry 1.
    """

    lower: float
    upper: float
    estimate: float
    eigenvector: tuple[float, ...] | None = None
    iterations: int = 0

    def __post_init__(self) -> None:
        if not (self.lower <= self.estimate <= self.upper):
            raise ValueError(
                f"estimate {self.estimate} outside bracket [{self.lower}, {self.upper}]")

    @property
    def width(self) -> float:
        return self.upper - self.lower

    def contains(self, x: float) -> bool:
        return self.lower <= x <= self.upper


def row_sum_bracket(a: IntMatrix, k: int = 1) -> SpectralBracket:
    """Bracket rho(A) between the k-th roots of the extreme row sums of A^k.

    The roots are rounded outward by ROOT_SLACK so the bracket remains a
    certificate despite float rounding.  A zero row gives lower 0; the
    zero matrix gives the degenerate bracket (0, 0).
    """
    if k < 1:
        raise ValueError("bracket power must be at least 1")
    sums = mat_pow(a, k).row_sums()
    lower = _int_root(min(sums), k) * (1.0 - ROOT_SLACK)
    upper = _int_root(max(sums), k) * (1.0 + ROOT_SLACK)
    return SpectralBracket(lower, upper, (lower + upper) / 2.0)


@dataclass(frozen=True)
class PrimitivityReport:
    """Outcome of the primitivity test with the failing criterion named."""

    primitive: bool
    reason: str  # "primitive" | "reducible" | "periodic"
    period: int | None = None

    def __bool__(self) -> bool:
        return self.primitive


def _graph_primitivity(a: IntMatrix) -> PrimitivityReport:
    n = a.dim
    succ = [[j for j, x in enumerate(row) if x] for row in a.rows]
    if n == 1:
        # Irreducibility for a single vertex needs a loop.
        if not succ[0]:
            return PrimitivityReport(False, "reducible")
        return PrimitivityReport(True, "primitive", 1)

    def reaches_all(adj: list[list[int]]) -> bool:
        seen = [False] * n
        seen[0] = True
        stack = [0]
        count = 1
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if not seen[w]:
                    seen[w] = True
                    count += 1
                    stack.append(w)
        return count == n

    pred: list[list[int]] = [[] for _ in range(n)]
    for u, outs in enumerate(succ):
        for w in outs:
            pred[w].append(u)
    if not (reaches_all(succ) and reaches_all(pred)):
        return PrimitivityReport(False, "reducible")

    # Strongly connected: the gcd of (level[u] + 1 - level[w]) over all
    # edges u -> w, with levels from any BFS, equals the cycle-length gcd.
    level = [-1] * n
    level[0] = 0
    queue = deque([0])
    g = 0
    while queue:
        u = queue.popleft()
        for w in succ[u]:
            if level[w] < 0:
                level[w] = level[u] + 1
                queue.append(w)
            g = math.gcd(g, level[u] + 1 - level[w])
    if g == 1:
        return PrimitivityReport(True, "primitive", 1)
    return PrimitivityReport(False, "periodic", g)


def is_primitive_bruteforce(a: IntMatrix, max_power: int) -> bool:
    """Dense route: does some A^k with k <= max_power have all entries positive?

    Works on positivity patterns as row bitmasks, which is exactly the
    boolean semiring product, so huge integer growth never happens.
    """
    if max_power < 1:
        raise ValueError("max_power must be at least 1")
    n = a.dim
    full = (1 << n) - 1
    base = [sum(1 << j for j, x in enumerate(row) if x) for row in a.rows]
    cur = base[:]
    for _ in range(max_power):
        if all(r == full for r in cur):
            return True
        nxt = []
        for r in cur:
            acc = 0
            rr = r
            while rr:
                low = rr & -rr
                acc |= base[low.bit_length() - 1]
                rr ^= low
            nxt.append(acc)
        if nxt == cur:
            # Pattern is stationary, so no later power can change it.
            return all(r == full for r in cur)
        cur = nxt
    return all(r == full for r in cur)


def wielandt_bound(dim: int) -> int:
    """Power beyond which primitivity is settled: (dim - 1)^2 + 1."""
    return (dim - 1) ** 2 + 1


def is_primitive(a: IntMatrix, max_power: int | None = None) -> PrimitivityReport:
    """Decide primitivity by the graph criterion.

    With max_power given, the dense positivity scan runs as well and any
    provable disagreement raises, so small inputs can cross-validate the
    two routes.  The dense scan can only certify a negative once
    max_power reaches the Wielandt bound for the dimension.
    """
    report = _graph_primitivity(a)
    if max_power is not None:
        dense = is_primitive_bruteforce(a, max_power)
        if dense and not report.primitive:
            raise AssertionError(
                f"dense scan found a positive power but graph test said {report.reason}")
        if not dense and report.primitive and max_power >= wielandt_bound(a.dim):
            raise AssertionError(
                "graph test says primitive but no positive power exists below the Wielandt bound")
    return report


def pf_eigen(a: IntMatrix,
             tol: float = 1e-12,
             max_iterations: int = 10 ** 6,
             cert_power: int = 8) -> SpectralBracket:
    """Dominant eigenvalue of a primitive matrix with certified bracket.

    The point estimate is the Rayleigh quotient of a double-precision
    power iteration, declared converged after two consecutive steps move
    it by less than tol.  The bracket is the intersection of the exact
    row-sum brackets of A^k over k = 1, 2, 4, ... up to cert_power, and
    the estimate is clamped into it.  Exceeding max_iterations raises
    ConvergenceError rather than looping on.
    """
    if tol <= 0.0:
        raise ValueError("tol must be positive")
    if max_iterations < 1:
        raise ValueError("max_iterations must be at least 1")
    if cert_power < 1:
        raise ValueError("cert_power must be at least 1")
    report = is_primitive(a)
    if not report:
        raise NotPrimitiveError(report.reason, report.period)

    arr = a.to_float_array()
    n = a.dim
    v = np.full(n, 1.0)
    lam = 0.0
    stable = 0
    iterations = 0
    converged = False
    while iterations < max_iterations:
        iterations += 1
        w = arr @ v
        lam_new = float(v @ w) / float(v @ v)
        peak = float(w.max())
        if peak <= 0.0:  # pragma: no cover - impossible for primitive input
            raise NotPrimitiveError("reducible")
        v = w / peak
        if abs(lam_new - lam) < tol:
            stable += 1
            if stable >= 2:
                lam = lam_new
                converged = True
                break
        else:
            stable = 0
        lam = lam_new
    if not converged:
        raise ConvergenceError(
            f"power iteration did not converge within {max_iterations} iterations (tol {tol})")

    lower = 0.0
    upper = math.inf
    k = 1
    while k <= cert_power:
        bracket = row_sum_bracket(a, k)
        lower = max(lower, bracket.lower)
        upper = min(upper, bracket.upper)
        k *= 2
    if lower > upper:  # pragma: no cover - each bracket contains rho
        raise AssertionError("row-sum brackets have empty intersection")
    estimate = min(max(lam, lower), upper)
    vec = v / float(v.max())
    return SpectralBracket(lower, upper, estimate, tuple(float(x) for x in vec), iterations)


def matrix_from_text(text: str) -> IntMatrix:
    """Parse the matrix text format: first line the dimension, then that
    many lines of space-separated decimal integers."""
    lines = [ln for ln in (s.strip() for s in text.splitlines()) if ln]
    if not lines:
        raise ValueError("empty matrix text")
    try:
        dim = int(lines[0])
    except ValueError:
        raise ValueError(f"first line must be the dimension, got {lines[0]!r}") from None
    if dim < 1:
        raise ValueError("dimension must be positive")
    if len(lines) != dim + 1:
        raise ValueError(f"expected {dim} rows after the dimension line, "
                         f"got {len(lines) - 1}")
    rows = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != dim:
            raise ValueError(f"row {ln!r} does not have {dim} entries")
        try:
            rows.append([int(p) for p in parts])
        except ValueError:
            raise ValueError(f"non-integer entry in row {ln!r}") from None
    return IntMatrix.from_rows(rows)


def matrix_to_text(a: IntMatrix) -> str:
    lines = [str(a.dim)]
    for row in a.rows:
        lines.append(" ".join(str(x) for x in row))
    return "\n".join(lines) + "\n"
