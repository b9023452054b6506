"""Error detection, error location and three ways of extracting error values.

* :func:`decode_exhaustive` searches every assignment of values to the
  candidate positions (Method I).
* :func:`decode_time_domain` solves ``A X = B`` with one equation per common
  zero and one unknown per candidate position (Method II).
* :func:`decode_frequency_domain` solves for the non-null spectrum values from
  the positions known to be error free, then inverts the transform (Method III).

Candidates come from :func:`locate`, which flags every row and column whose
partial evaluation at the common-zero coordinates is nonzero.
"""
from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field as dc_field
from typing import Iterable, Sequence

import numpy as np

from .code import CodeSpec, _check_shape, check_syndrome, is_codeword, syndrome
from .exceptions import BudgetExceeded
from .linalg import LinearSolution, ModP, solve_linear
from .ring import ArrayMN, eval2
from .transform import fft2, ifft2

__all__ = [
    "DEFAULT_BUDGET",
    "Status",
    "LocateReport",
    "DualSets",
    "DecodeOutcome",
    "detect",
    "locate",
    "dual_sets",
    "decode_exhaustive",
    "decode_time_domain",
    "decode_frequency_domain",
    "decode",
    "solve_linear",
]

DEFAULT_BUDGET = 1 << 20

Position = tuple[int, int]


class Status(str, enum.Enum):
    CLEAN = "Clean"
    CORRECTED = "Corrected"
    FAILURE = "Failure"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class LocateReport:
    detected: bool
    row_candidates: frozenset[int]
    col_candidates: frozenset[int]
    candidates: tuple[Position, ...]  # row-major
    t_max: int


@dataclass(frozen=True)
class DualSets:
    """Unknown spectral positions and the equations available to find them."""

    spectral_support: tuple[Position, ...]  # (theta, phi) outside the spectral nulls
    errorfree_support: tuple[Position, ...]  # (i, j) outside the candidate set

    @property
    def s_prime(self) -> int:
        return len(self.spectral_support)

    @property
    def t_prime(self) -> int:
        return len(self.errorfree_support)


@dataclass(frozen=True)
class DecodeOutcome:
    status: Status
    received: ArrayMN
    codeword: ArrayMN | None = None
    error_pattern: ArrayMN | None = None
    method_used: str = ""
    failure_reason: str | None = None
    candidates: tuple[Position, ...] = ()
    locate: LocateReport | None = None
    system: LinearSolution | None = None
    solve_ops: int = 0
    notes: tuple[str, ...] = dc_field(default_factory=tuple)

    @property
    def ok(self) -> bool:
        return self.status is not Status.FAILURE


# -- detection and location ---------------------------------------------------


def detect(code: CodeSpec, r: ArrayMN) -> bool:
    return any(syndrome(code, r))


def locate(code: CodeSpec, r: ArrayMN) -> LocateReport:
    _check_shape(code, r)
    f = code.field
    t_max = len(code.cz_set) // 2
    detected = detect(code, r)
    if not detected:
        return LocateReport(False, frozenset(), frozenset(), (), t_max)
    pts = code.points()
    col_coords = sorted({a for a, _ in pts})
    row_coords = sorted({b for _, b in pts})
    rows = frozenset(
        i
        for i in range(code.m)
        if any(eval2(ArrayMN(f, [r.entries[i]]), 1, b) for b in row_coords)
    )
    cols = frozenset(
        j
        for j in range(code.n)
        if any(eval2(ArrayMN(f, [[row[j]] for row in r.entries]), a, 1) for a in col_coords)
    )
    cands = tuple((i, j) for i in sorted(rows) for j in sorted(cols))
    return LocateReport(True, rows, cols, cands, t_max)


def dual_sets(code: CodeSpec, candidates: Iterable[Position]) -> DualSets:
    nulls = {(pt.theta, pt.phi) for pt in code.cz_set}
    cands = set(candidates)
    spectral = tuple(
        (th, ph) for th in range(code.m) for ph in range(code.n) if (th, ph) not in nulls
    )
    free = tuple((i, j) for i in range(code.m) for j in range(code.n) if (i, j) not in cands)
    return DualSets(spectral, free)


# -- helpers ------------------------------------------------------------------


def _failure(r, method, reason, cands, **kw) -> DecodeOutcome:
    return DecodeOutcome(Status.FAILURE, r, method_used=method, failure_reason=reason,
                         candidates=tuple(cands), **kw)


def _finish(code, r, e: ArrayMN, method, cands, **kw) -> DecodeOutcome:
    c = r - e
    if not is_codeword(code, c):
        return _failure(r, method, "NotCodeword", cands, **kw)
    status = Status.CLEAN if e.is_zero() else Status.CORRECTED
    return DecodeOutcome(status, r, c, e, method, None, tuple(cands), **kw)


def _pattern(code: CodeSpec, cands: Sequence[Position], values: Sequence[int]) -> ArrayMN:
    return ArrayMN.from_dict(code.field, code.m, code.n, dict(zip(cands, values)))


def _column_matrix(code: CodeSpec, cands: Sequence[Position]) -> np.ndarray:
    """Columns are the GF(q) check vectors of the candidate positions."""
    s = len(code.cz_set)
    H = np.zeros((s, len(cands)), dtype=np.int64)
    for c, pos in enumerate(cands):
        H[:, c] = code.check_tensor[pos]
    return H


class _Best:
    """Running minimum-weight tracker over batches of candidate error vectors."""

    def __init__(self):
        self.weight = None
        self.vector = None
        self.ties = 0
        self.matches = 0

    def update(self, X: np.ndarray) -> None:
        if not len(X):
            return
        self.matches += len(X)
        w = np.count_nonzero(X, axis=1)
        lo = int(w.min())
        hits = np.flatnonzero(w == lo)
        if self.weight is None or lo < self.weight:
            self.weight, self.vector, self.ties = lo, X[hits[0]].copy(), len(hits)
        elif lo == self.weight:
            self.ties += len(hits)


def _span(base: np.ndarray, gens: np.ndarray, p: int) -> np.ndarray:
    """Every ``base + sum_k c_k gens[k]`` (mod p), the first coefficient varying slowest."""
    dtype = np.int16 if p < 128 else np.int64
    out = base.astype(dtype)[None, :]
    for g in gens.astype(dtype):
        out = np.concatenate([(out + k * g) % p for k in range(p)])
    return out


def _search_brute(H, target, p, budget) -> tuple[_Best, int]:
    width = H.shape[1]
    total = p**width
    if total > budget:
        raise BudgetExceeded(f"{p}^{width} assignments exceed the budget {budget}")
    # carry each assignment together with its syndrome
    gens = np.hstack([np.eye(width, dtype=np.int64), H.T])
    both = _span(np.zeros(width + H.shape[0], dtype=np.int64), gens, p)
    best = _Best()
    best.update(both[np.all(both[:, width:] == target[None, :], axis=1), :width])
    return best, total


def _search_coset(H, target, p, budget) -> tuple[_Best, int, LinearSolution]:
    sol = solve_linear(ModP(p), H.tolist(), target.tolist(), unknowns=H.shape[1])
    best = _Best()
    if sol.status == "inconsistent":
        return best, 0, sol
    total = p ** len(sol.nullspace)
    if total > budget:
        raise BudgetExceeded(f"{p}^{len(sol.nullspace)} coset members exceed the budget {budget}")
    basis = np.array(sol.nullspace, dtype=np.int64).reshape(len(sol.nullspace), H.shape[1])
    best.update(_span(np.array(sol.particular, dtype=np.int64), basis, p))
    return best, total, sol


def _search_weight(H, target, p, budget) -> tuple[_Best, int]:
    """Walk error patterns by increasing weight and stop at the first weight that fits.

    Gives the same minimum-weight answer (and tie count) as the full walk, but
    only visits patterns no heavier than the answer.
    """
    width = H.shape[1]
    best = _Best()
    if not target.any():
        best.update(np.zeros((1, width), dtype=np.int64))
        return best, 1
    Ht = H.T
    visited = 1
    for k in range(1, width + 1):
        combos = np.array(list(itertools.combinations(range(width), k)), dtype=np.int64)
        vals = np.array(list(itertools.product(range(1, p), repeat=k)), dtype=np.int64)
        visited += len(combos) * len(vals)
        if visited > budget:
            raise BudgetExceeded(f"weight-{k} patterns push the search past the budget {budget}")
        step = max(1, (1 << 16) // len(vals))
        for start in range(0, len(combos), step):
            cs = combos[start : start + step]
            S = np.einsum("vk,cks->cvs", vals, Ht[cs]) % p
            ci, vi = np.nonzero(np.all(S == target[None, None, :], axis=2))
            if len(ci):
                X = np.zeros((len(ci), width), dtype=np.int64)
                np.put_along_axis(X, cs[ci], vals[vi], axis=1)
                best.update(X)
        if best.vector is not None:
            return best, visited
    return best, visited


# -- Method I -------------------------------------------------------------------


def decode_exhaustive(
    code: CodeSpec,
    r: ArrayMN,
    candidates: Iterable[Position],
    budget: int = DEFAULT_BUDGET,
    strategy: str = "auto",
) -> DecodeOutcome:
    """Minimum-weight error on ``candidates`` whose syndrome equals that of ``r``.

    ``strategy="brute"`` walks all ``q^|E|`` assignments.  ``"coset"`` solves
    the GF(q) check equations first and walks only the solution coset.
    ``"weight"`` walks patterns in order of weight and stops early.  All three
    return the same answer; ``"auto"`` means ``"weight"``.  Equal-weight ties
    are refused.
    """
    _check_shape(code, r)
    if not r.is_base():
        return _failure(r, "exhaustive", "NonBaseFieldInput", candidates)
    cands = sorted(set(candidates))
    p = code.q
    if strategy == "auto":
        strategy = "weight"
    if strategy not in ("brute", "coset", "weight"):
        raise ValueError(f"unknown strategy {strategy!r}")
    H = _column_matrix(code, cands)
    target = np.array(check_syndrome(code, r), dtype=np.int64)
    label = f"exhaustive/{strategy}"
    system = None
    if strategy == "brute":
        best, ops = _search_brute(H, target, p, budget)
    elif strategy == "weight":
        best, ops = _search_weight(H, target, p, budget)
    else:
        best, ops, system = _search_coset(H, target, p, budget)
        ops += system.mults
    if best.vector is None:
        return _failure(r, label, "NoMatch", cands, system=system, solve_ops=ops)
    if best.ties > 1:
        return _failure(r, label, "AmbiguousMinWeight", cands, system=system, solve_ops=ops)
    e = _pattern(code, cands, best.vector.tolist())
    return _finish(code, r, e, label, cands, system=system, solve_ops=ops)


# -- Method II ------------------------------------------------------------------


def _fallback(code, r, cands, label, budget, system, ops) -> DecodeOutcome:
    out = decode_exhaustive(code, r, cands, budget)
    return DecodeOutcome(
        out.status, r, out.codeword, out.error_pattern, f"{label}+{out.method_used}",
        out.failure_reason, out.candidates, system=system, solve_ops=ops + out.solve_ops,
    )


def decode_time_domain(
    code: CodeSpec,
    r: ArrayMN,
    candidates: Iterable[Position],
    budget: int = DEFAULT_BUDGET,
    fallback_candidates: Iterable[Position] | None = None,
) -> DecodeOutcome:
    """Solve ``sum_k e_k a^(i_k) b^(j_k) = r(a, b)`` over every common zero ``(a, b)``.

    A rank-deficient system hands over to the minimum-weight search on
    ``fallback_candidates`` (by default the candidates themselves).
    """
    _check_shape(code, r)
    f = code.field
    cands = sorted(set(candidates))
    pts = code.points()
    A = [[f.mul(f.pow(a, i), f.pow(b, j)) for i, j in cands] for a, b in pts]
    B = [eval2(r, a, b) for a, b in pts]
    sol = solve_linear(f, A, B, unknowns=len(cands))
    label = "time"
    if sol.status == "inconsistent":
        return _failure(r, label, "Inconsistent", cands, system=sol, solve_ops=sol.mults)
    if sol.status == "underdetermined":
        wide = cands if fallback_candidates is None else fallback_candidates
        return _fallback(code, r, wide, label, budget, sol, sol.mults)
    if not all(f.is_base(v) for v in sol.particular):
        return _failure(r, label, "NonBaseFieldSolution", cands, system=sol, solve_ops=sol.mults)
    e = _pattern(code, cands, sol.particular)
    return _finish(code, r, e, label, cands, system=sol, solve_ops=sol.mults)


# -- Method III -----------------------------------------------------------------


def decode_frequency_domain(
    code: CodeSpec,
    r: ArrayMN,
    candidates: Iterable[Position],
    budget: int = DEFAULT_BUDGET,
    fallback_candidates: Iterable[Position] | None = None,
) -> DecodeOutcome:
    """Recover the codeword spectrum from the error-free positions.

    For each ``(i, j)`` outside the candidate set the codeword and the received
    array agree, so ``C(zeta1^-i, zeta2^-j) = R(zeta1^-i, zeta2^-j)`` where
    ``C`` vanishes on the spectral nulls.  That leaves one unknown per
    non-null spectral position.  Rank deficiency is handled as in
    :func:`decode_time_domain`.
    """
    _check_shape(code, r)
    f, roots = code.field, code.roots
    cands = sorted(set(candidates))
    sets = dual_sets(code, cands)
    label = "freq"
    if sets.s_prime > sets.t_prime:
        return _failure(r, label, "DualityViolated", cands)
    z1, z2 = roots.zeta1, roots.zeta2
    R = fft2(roots, r)
    A, B = [], []
    for i, j in sets.errorfree_support:
        zi, zj = f.pow(z1, -i), f.pow(z2, -j)
        A.append([f.mul(f.pow(zi, th), f.pow(zj, ph)) for th, ph in sets.spectral_support])
        B.append(eval2(R, zi, zj))
    sol = solve_linear(f, A, B, unknowns=sets.s_prime)
    if sol.status == "inconsistent":
        return _failure(r, label, "Inconsistent", cands, system=sol, solve_ops=sol.mults)
    if sol.status == "underdetermined":
        wide = cands if fallback_candidates is None else fallback_candidates
        return _fallback(code, r, wide, label, budget, sol, sol.mults)
    spectrum = ArrayMN.from_dict(
        f, code.m, code.n, dict(zip(sets.spectral_support, sol.particular))
    )
    c = ifft2(roots, spectrum)
    if not c.is_base():
        return _failure(r, label, "NonBaseFieldResult", cands, system=sol, solve_ops=sol.mults)
    return _finish(code, r, r - c, label, cands, system=sol, solve_ops=sol.mults)


# -- dispatcher -------------------------------------------------------------------

_METHODS = {
    "exhaustive": decode_exhaustive,
    "time": decode_time_domain,
    "freq": decode_frequency_domain,
}


def widened_candidates(code: CodeSpec, report: LocateReport) -> tuple[Position, ...]:
    """Flagged rows across all columns plus flagged columns across all rows.

    An error escapes this set only if both its row and its column cancel at
    every common-zero coordinate.  With nothing flagged at all every position
    is a candidate.
    """
    out = set(report.candidates)
    out.update((i, j) for i in report.row_candidates for j in range(code.n))
    out.update((i, j) for i in range(code.m) for j in report.col_candidates)
    if not out:
        out = {(i, j) for i in range(code.m) for j in range(code.n)}
    return tuple(sorted(out))


def choose_method(code: CodeSpec, candidates: Sequence[Position]) -> str:
    """Method III when it has fewer unknowns than Method II and enough equations."""
    sets = dual_sets(code, candidates)
    if sets.s_prime < len(candidates) and sets.s_prime <= sets.t_prime:
        return "freq"
    return "time"


# failures a search over a larger candidate set can still repair
_RETRYABLE = ("Inconsistent", "NoMatch", "AmbiguousMinWeight")


def decode(
    code: CodeSpec,
    r: ArrayMN,
    method: str = "auto",
    budget: int = DEFAULT_BUDGET,
    widen: bool = True,
) -> DecodeOutcome:
    """Detect, locate and correct.

    The algebraic methods solve on the located set ``E``.  With ``widen`` on, a
    deficient or inconsistent system falls back to the minimum-weight search
    on the widened set, and a failed or tied search is repeated once over the
    whole array before giving up.
    """
    report = locate(code, r)
    if not report.detected:
        zero = ArrayMN.zeros(code.field, code.m, code.n)
        return DecodeOutcome(Status.CLEAN, r, r, zero, "none", locate=report)
    if method == "auto":
        method = choose_method(code, report.candidates)
    if method not in _METHODS:
        raise ValueError(f"unknown method {method!r}")
    stages = [report.candidates]
    if widen:
        everything = tuple((i, j) for i in range(code.m) for j in range(code.n))
        for cands in (widened_candidates(code, report), everything):
            if len(cands) > len(stages[-1]):
                stages.append(cands)
    first = stages[min(1, len(stages) - 1)]
    later = stages[2:] if method == "exhaustive" else stages[1:]
    try:
        if method == "exhaustive":
            out = decode_exhaustive(code, r, first, budget)
        else:
            out = _METHODS[method](code, r, report.candidates, budget, fallback_candidates=first)
    except BudgetExceeded as exc:
        out = _failure(r, method, "BudgetExceeded", report.candidates, notes=(str(exc),))
        later = []
    for cands in later:
        if out.failure_reason not in _RETRYABLE:
            break
        if len(cands) <= len(out.candidates):
            continue
        try:
            second = decode_exhaustive(code, r, cands, budget)
        except BudgetExceeded as exc:
            second = _failure(r, "exhaustive/weight", "BudgetExceeded", cands, notes=(str(exc),))
        out = DecodeOutcome(
            second.status, r, second.codeword, second.error_pattern,
            f"{out.method_used}+{second.method_used}", second.failure_reason,
            second.candidates, system=out.system, solve_ops=out.solve_ops + second.solve_ops,
            notes=out.notes + second.notes,
        )
    return DecodeOutcome(
        out.status, r, out.codeword, out.error_pattern, out.method_used, out.failure_reason,
        out.candidates, report, out.system, out.solve_ops, out.notes,
    )
