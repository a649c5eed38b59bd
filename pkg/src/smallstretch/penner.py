"""Transition matrices for products of Dehn twists on a two-sided curve system.

A curve system lists labeled curves, each on one of two sides ("alpha"
curves are the ones twisted positively, "beta" curves negatively), with
a symmetric non-negative intersection matrix that vanishes on the
diagonal.  A twist about curve c with exponent m acts on measures as the
unipotent integer matrix

    I + |m| * E_c,

where E_c is zero except for row c, which lists the intersection numbers
of c with every curve.  Relabeling steps act as permutation matrices and
must preserve sides and the intersection matrix.  A word composes right
to left: the last listed step acts first on measure vectors, so the word
matrix is the left-to-right product of the step matrices.

A word qualifies as a twist word in the positive/negative normal form
when, possibly after passing to an iterate (relabeling steps rotate the
twisted curves from iterate to iterate), every alpha curve receives a
positive twist and every beta curve a negative one.  The transition
matrix of such a word is primitive and its dominant eigenvalue, the
dilatation, is strictly larger than 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Union

from .intmatrix import IntMatrix, SpectralBracket, mat_mul, pf_eigen

ALPHA = "alpha"
BETA = "beta"


@dataclass(frozen=True)
class CurveSystem:
    labels: tuple[str, ...]
    sides: tuple[str, ...]
    intersections: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        n = len(self.labels)
        if n == 0:
            raise ValueError("curve system needs at least one curve")
        if len(set(self.labels)) != n:
            raise ValueError("curve labels must be unique")
        if len(self.sides) != n:
            raise ValueError("one side per curve required")
        if len(self.intersections) != n or any(len(r) != n for r in self.intersections):
            raise ValueError("intersection matrix must be square of matching size")

    @classmethod
    def build(cls, labels: Iterable[str], sides: Iterable[str],
              intersections: Iterable[Iterable[int]]) -> "CurveSystem":
        return cls(tuple(labels), tuple(sides),
                   tuple(tuple(int(x) for x in row) for row in intersections))

    @property
    def size(self) -> int:
        return len(self.labels)

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(f"unknown curve {label!r}") from None

    def side_of(self, label: str) -> str:
        return self.sides[self.index(label)]

    def intersection(self, c: str, d: str) -> int:
        return self.intersections[self.index(c)][self.index(d)]

    def curves_on_side(self, side: str) -> tuple[str, ...]:
        return tuple(l for l, s in zip(self.labels, self.sides) if s == side)


@dataclass(frozen=True)
class SystemReport:
    violations: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.violations


def check_curve_system(sys: CurveSystem) -> SystemReport:
    """Report every violation of the curve-system contract.

    Checked: sides are alpha/beta, intersections are non-negative,
    symmetric, and zero on the diagonal.
    """
    bad: list[str] = []
    for label, side in zip(sys.labels, sys.sides):
        if side not in (ALPHA, BETA):
            bad.append(f"curve {label}: unknown side {side!r}")
    n = sys.size
    for i in range(n):
        if sys.intersections[i][i] != 0:
            bad.append(f"nonzero self-intersection at {sys.labels[i]}")
        for j in range(n):
            x = sys.intersections[i][j]
            if x < 0:
                bad.append(f"negative intersection at ({sys.labels[i]}, {sys.labels[j]})")
            elif j > i and x != sys.intersections[j][i]:
                bad.append(f"asymmetry at ({sys.labels[i]}, {sys.labels[j]})")
    return SystemReport(tuple(bad))


def chain_system(genus: int) -> CurveSystem:
    """Alternating chain of 2*genus + 1 curves with unit consecutive intersections.

    Curves a1, b1, a2, b2, ..., a_{genus+1} in chain order; the a-curves
    are alpha, the b-curves beta.  Consecutive curves meet once, all
    other pairs are disjoint.  This system fills a closed surface of the
    given genus.
    """
    if genus < 1:
        raise ValueError("genus must be at least 1")
    labels: list[str] = []
    sides: list[str] = []
    for i in range(1, genus + 2):
        labels.append(f"a{i}")
        sides.append(ALPHA)
        if i <= genus:
            labels.append(f"b{i}")
            sides.append(BETA)
    n = len(labels)
    inter = [[0] * n for _ in range(n)]
    for i in range(n - 1):
        inter[i][i + 1] = 1
        inter[i + 1][i] = 1
    return CurveSystem.build(labels, sides, inter)


def necklace_system(pairs: int) -> CurveSystem:
    """Cyclic alternating system a1, b1, ..., a_pairs, b_pairs with unit
    intersections around the cycle (b_pairs also meets a1).

    Unlike the open chain, the cyclic intersection pattern admits the
    rotation a_i -> a_{i+1}, b_i -> b_{i+1} as a symmetry, so words mixing
    a rotation step with a single twist can still cover every curve
    through iteration.
    """
    if pairs < 2:
        raise ValueError("need at least two alpha/beta pairs")
    labels: list[str] = []
    sides: list[str] = []
    for i in range(1, pairs + 1):
        labels.append(f"a{i}")
        sides.append(ALPHA)
        labels.append(f"b{i}")
        sides.append(BETA)
    n = len(labels)
    inter = [[0] * n for _ in range(n)]
    for i in range(n):
        j = (i + 1) % n
        inter[i][j] = 1
        inter[j][i] = 1
    return CurveSystem.build(labels, sides, inter)


def necklace_rotation(pairs: int) -> "Permute":
    """The index-shift symmetry of necklace_system(pairs)."""
    mapping = {}
    for i in range(1, pairs + 1):
        j = i % pairs + 1
        mapping[f"a{i}"] = f"a{j}"
        mapping[f"b{i}"] = f"b{j}"
    return Permute.from_dict(mapping)


@dataclass(frozen=True)
class Twist:
    curve: str
    power: int

    def __post_init__(self) -> None:
        if self.power == 0:
            raise ValueError("twist power must be nonzero")


@dataclass(frozen=True)
class Permute:
    """Relabeling step, stored as sorted (source, target) pairs."""

    mapping: tuple[tuple[str, str], ...]

    @classmethod
    def from_dict(cls, d: dict[str, str]) -> "Permute":
        if sorted(d.keys()) != sorted(d.values()):
            raise ValueError("relabeling must be a permutation of its own keys")
        return cls(tuple(sorted(d.items())))

    def as_dict(self) -> dict[str, str]:
        return dict(self.mapping)

    def apply(self, label: str) -> str:
        return self.as_dict().get(label, label)


Step = Union[Twist, Permute]


@dataclass(frozen=True)
class TwistWord:
    """Composition-ordered steps: the last listed step acts first."""

    steps: tuple[Step, ...]

    @classmethod
    def build(cls, steps: Iterable[Step]) -> "TwistWord":
        return cls(tuple(steps))

    def rotated(self, offset: int) -> "TwistWord":
        k = offset % len(self.steps) if self.steps else 0
        return TwistWord(self.steps[k:] + self.steps[:k])

    def __len__(self) -> int:
        return len(self.steps)


def twist_matrix(sys: CurveSystem, curve: str, power: int,
                 enforce_signs: bool = True) -> IntMatrix:
    """Unipotent transition matrix I + |power| * E_curve.

    Positive powers belong on alpha curves and negative powers on beta
    curves; a violation raises unless enforce_signs is False.
    """
    if power == 0:
        raise ValueError("twist power must be nonzero")
    c = sys.index(curve)
    if enforce_signs:
        side = sys.sides[c]
        if power > 0 and side != ALPHA:
            raise ValueError(f"positive twist on non-alpha curve {curve}")
        if power < 0 and side != BETA:
            raise ValueError(f"negative twist on non-beta curve {curve}")
    n = sys.size
    rows = []
    m = abs(power)
    for i in range(n):
        if i == c:
            rows.append(tuple((1 if j == c else 0) + m * sys.intersections[c][j]
                              for j in range(n)))
        else:
            rows.append(tuple(1 if j == i else 0 for j in range(n)))
    return IntMatrix(tuple(rows))


def permutation_matrix(sys: CurveSystem, perm: Permute) -> IntMatrix:
    """Matrix of a relabeling step; the step must be a symmetry of the system.

    Sides must be preserved and the intersection matrix must be invariant,
    otherwise the relabeling is not realized by any homeomorphism of the
    configuration and a ValueError is raised.
    """
    d = perm.as_dict()
    for src in d:
        sys.index(src)  # raises KeyError for unknown labels
    full = {label: d.get(label, label) for label in sys.labels}
    for label, target in full.items():
        if sys.side_of(label) != sys.side_of(target):
            raise ValueError(f"relabeling {label} -> {target} does not preserve sides")
    for a in sys.labels:
        for b in sys.labels:
            if sys.intersection(full[a], full[b]) != sys.intersection(a, b):
                raise ValueError(
                    f"relabeling is not an intersection symmetry at pair ({a}, {b})")
    n = sys.size
    rows = [[0] * n for _ in range(n)]
    for label in sys.labels:
        rows[sys.index(full[label])][sys.index(label)] = 1
    return IntMatrix(tuple(tuple(r) for r in rows))


def _step_matrix(sys: CurveSystem, step: Step, enforce_signs: bool) -> IntMatrix:
    if isinstance(step, Twist):
        return twist_matrix(sys, step.curve, step.power, enforce_signs)
    return permutation_matrix(sys, step)


def word_matrix(sys: CurveSystem, word: TwistWord,
                enforce_signs: bool = True) -> IntMatrix:
    """Left-to-right product of step matrices (right-to-left composition)."""
    result = IntMatrix.identity(sys.size)
    for step in word.steps:
        result = mat_mul(result, _step_matrix(sys, step, enforce_signs))
    return result


@dataclass(frozen=True)
class WordCheckReport:
    """Coverage analysis of a twist word.

    certified_power is the least iterate p such that the p-th power of
    the word twists every alpha curve positively and every beta curve
    negatively; None when no iterate achieves it.  The per-side powers
    record when each family alone is covered, so a word can certify its
    alpha coverage while missing beta twists outright.  missing_alpha
    and missing_beta list curves never covered by any iterate.
    """

    ok: bool
    certified_power: int | None
    alpha_certified_power: int | None
    beta_certified_power: int | None
    perm_order: int
    sign_violations: tuple[str, ...]
    missing_alpha: tuple[str, ...]
    missing_beta: tuple[str, ...]


def _perm_order(perm: dict[str, str]) -> int:
    order = 1
    seen: set[str] = set()
    for start in perm:
        if start in seen:
            continue
        length = 0
        cur = start
        while True:
            seen.add(cur)
            cur = perm[cur]
            length += 1
            if cur == start:
                break
        order = order * length // math.gcd(order, length)
    return order


def check_penner_word(sys: CurveSystem, word: TwistWord) -> WordCheckReport:
    """Decide whether some iterate of the word twists every curve correctly.

    Relabeling steps are pushed to the right of the word: a twist about c
    behind accumulated relabeling P is a twist about P(c).  The word then
    factors as (twists) o (total relabeling P), and its p-th power twists
    the orbit of the effective curves under P^0, ..., P^{p-1}.  The scan
    stops at the order of P, beyond which coverage cannot grow.
    """
    acc = {label: label for label in sys.labels}
    positive: set[str] = set()
    negative: set[str] = set()
    sign_bad: list[str] = []
    for step in word.steps:
        if isinstance(step, Twist):
            effective = acc[step.curve]
            side = sys.side_of(effective)
            if step.power > 0:
                positive.add(effective)
                if side != ALPHA:
                    sign_bad.append(f"positive twist lands on {side} curve {effective}")
            else:
                negative.add(effective)
                if side != BETA:
                    sign_bad.append(f"negative twist lands on {side} curve {effective}")
        else:
            sigma = step.as_dict()
            acc = {label: acc[sigma.get(label, label)] for label in sys.labels}

    order = _perm_order(acc)
    alphas = set(sys.curves_on_side(ALPHA))
    betas = set(sys.curves_on_side(BETA))

    pos_cov = set(positive)
    neg_cov = set(negative)
    alpha_power: int | None = None
    beta_power: int | None = None
    cur_pos, cur_neg = set(positive), set(negative)
    for p in range(1, order + 1):
        if p > 1:
            cur_pos = {acc[c] for c in cur_pos}
            cur_neg = {acc[c] for c in cur_neg}
            pos_cov |= cur_pos
            neg_cov |= cur_neg
        if alpha_power is None and alphas <= pos_cov:
            alpha_power = p
        if beta_power is None and betas <= neg_cov:
            beta_power = p
        if alpha_power is not None and beta_power is not None:
            break

    certified: int | None = None
    if alpha_power is not None and beta_power is not None:
        certified = max(alpha_power, beta_power)
    ok = certified is not None and not sign_bad
    return WordCheckReport(
        ok=ok,
        certified_power=certified,
        alpha_certified_power=alpha_power,
        beta_certified_power=beta_power,
        perm_order=order,
        sign_violations=tuple(sign_bad),
        missing_alpha=tuple(sorted(alphas - pos_cov)),
        missing_beta=tuple(sorted(betas - neg_cov)),
    )


def dilatation(sys: CurveSystem, word: TwistWord,
               tol: float = 1e-12) -> SpectralBracket:
    """Dominant eigenvalue of the word matrix with row-sum certification.

    Callers are expected to have a passing check_penner_word; a word that
    misses curves typically produces a reducible matrix and the
    primitivity error propagates from the eigensolver.
    """
    matrix = word_matrix(sys, word)
    bracket = pf_eigen(matrix, tol=tol)
    if sys.size >= 2 and bracket.estimate <= 1.0:
        raise ArithmeticError(
            f"dilatation estimate {bracket.estimate} is not > 1; "
            "the word does not stretch")
    return bracket


# --- JSON interchange -------------------------------------------------------
#
# Curve system: {"curves": [{"label": str, "side": "alpha"|"beta"}, ...],
#                "intersections": [[int, ...], ...]}
# Word: [{"twist": label, "exp": int} | {"permute": {label: label}}, ...]

def curve_system_from_json(obj: dict) -> CurveSystem:
    try:
        curves = obj["curves"]
        labels = [c["label"] for c in curves]
        sides = [c["side"] for c in curves]
        inter = obj["intersections"]
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed curve-system object: {exc}") from exc
    sys = CurveSystem.build(labels, sides, inter)
    report = check_curve_system(sys)
    if not report.ok:
        raise ValueError("invalid curve system: " + "; ".join(report.violations))
    return sys


def curve_system_to_json(sys: CurveSystem) -> dict:
    return {
        "curves": [{"label": l, "side": s} for l, s in zip(sys.labels, sys.sides)],
        "intersections": [list(row) for row in sys.intersections],
    }


def word_from_json(obj: list) -> TwistWord:
    steps: list[Step] = []
    for item in obj:
        if not isinstance(item, dict):
            raise ValueError(f"malformed word step: {item!r}")
        if "twist" in item:
            steps.append(Twist(item["twist"], int(item["exp"])))
        elif "permute" in item:
            steps.append(Permute.from_dict(dict(item["permute"])))
        else:
            raise ValueError(f"word step needs 'twist' or 'permute': {item!r}")
    return TwistWord.build(steps)


def word_to_json(word: TwistWord) -> list:
    out: list[dict] = []
    for step in word.steps:
        if isinstance(step, Twist):
            out.append({"twist": step.curve, "exp": step.power})
        else:
            out.append({"permute": step.as_dict()})
    return out


# --- canonical small examples ---------------------------------------------------

def two_curve_system() -> CurveSystem:
    """One alpha curve and one beta curve meeting once."""
    return CurveSystem.build(("a", "b"), (ALPHA, BETA), ((0, 1), (1, 0)))


def two_curve_word() -> TwistWord:
    """Positive twist along a composed with a negative twist along b;
    its transition matrix is [[2, 1], [1, 1]] with dominant root
    (3 + sqrt(5))/2."""
    return TwistWord.build((Twist("a", 1), Twist("b", -1)))


def genus_two_example_word() -> TwistWord:
    """Six-step twist word on chain_system(2) using every curve once or
    more: a1 twice, then a2, b2^-3, a3, b1^-1, a1.  Its transition matrix
    has characteristic polynomial x^5 - 15x^4 + 61x^3 - 61x^2 + 15x - 1
    and dominant root (9 + sqrt(77))/2; used as a regression anchor."""
    return TwistWord.build((
        Twist("a1", 2),
        Twist("a2", 1),
        Twist("b2", -3),
        Twist("a3", 1),
        Twist("b1", -1),
        Twist("a1", 1),
    ))
