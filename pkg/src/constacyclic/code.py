"""2-D (lambda1, lambda2)-constacyclic codes defined by their common zeros.

A code is fixed by a set of essential common zeros (ECZ), one point per
Frobenius orbit.  Closing them under ``(a, b) -> (a^q, b^q)`` gives the
common-zero set ``V_c``; an array over GF(q) is a codeword iff its
polynomial vanishes on ``V_c``.  Points are addressed by their spectral
index ``(theta, phi)``, meaning ``(gamma * zeta1^theta, beta * zeta2^phi)``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .exceptions import (
    BasisError,
    DuplicateOrbit,
    LengthMismatch,
    ParseError,
    RankDeficiency,
    ShapeMismatch,
    TooLarge,
)
from .field import GaloisField, RootSystem, build_root_system
from .linalg import ModP, inverse
from .ring import ArrayMN, eval2

BRUTEFORCE_LIMIT = 1 << 24


@dataclass(frozen=True, order=True)
class CzPoint:
    theta: int
    phi: int

    def __iter__(self):
        return iter((self.theta, self.phi))


def point_orbit(roots: RootSystem, point: CzPoint) -> list[CzPoint]:
    """Frobenius orbit of ``point`` over GF(q), starting at ``point``."""
    f = roots.field
    q = roots.q
    a, b = roots.point(point.theta, point.phi)
    orbit = [CzPoint(point.theta % roots.m, point.phi % roots.n)]
    while True:
        a, b = f.pow(a, q), f.pow(b, q)
        nxt = CzPoint(roots.theta_of(a), roots.phi_of(b))
        if nxt == orbit[0]:
            return orbit
        orbit.append(nxt)


def build_v_circ(roots: RootSystem) -> tuple[list[CzPoint], list[CzPoint]]:
    """All ``M*N`` points of ``V_o`` and one representative per Frobenius orbit.

    Orbits are ordered by their smallest member in row-major order, and that
    member is the representative.
    """
    points = [CzPoint(th, ph) for th in range(roots.m) for ph in range(roots.n)]
    seen: set[CzPoint] = set()
    reps = []
    for pt in points:
        if pt in seen:
            continue
        seen.update(point_orbit(roots, pt))
        reps.append(pt)
    return points, reps


def frobenius_closure(roots: RootSystem, reps: Iterable[CzPoint]) -> list[CzPoint]:
    closed: list[CzPoint] = []
    seen: set[CzPoint] = set()
    for rep in reps:
        rep = CzPoint(rep.theta % roots.m, rep.phi % roots.n)
        if rep in seen:
            raise DuplicateOrbit(f"{rep} lies in the orbit of an earlier representative")
        orbit = point_orbit(roots, rep)
        seen.update(orbit)
        closed.extend(orbit)
    return closed


@dataclass(frozen=True)
class CheckGroup:
    """ECZ representatives sharing a conjugacy class of first coordinate."""

    xi: int
    xi_degree: int  # degree of the minimal polynomial of xi over GF(q)
    members: tuple[CzPoint, ...]
    eta_degrees: tuple[int, ...]  # degree of each eta over GF(q^xi_degree)


def group_representatives(roots: RootSystem, reps: Sequence[CzPoint]) -> list[CheckGroup]:
    f = roots.field
    keyed = sorted(
        reps, key=lambda r: (f.log(roots.row_root(r.theta)), f.log(roots.col_root(r.phi)))
    )
    groups: list[tuple[int, list[CzPoint]]] = []
    for rep in keyed:
        a = roots.row_root(rep.theta)
        for xi, members in groups:
            if a in f.conjugates(xi):
                members.append(rep)
                break
        else:
            groups.append((a, [rep]))
    out = []
    for xi, members in groups:
        m_i = len(f.conjugates(xi))
        degrees = tuple(len(point_orbit(roots, r)) // m_i for r in members)
        out.append(CheckGroup(xi, m_i, tuple(members), degrees))
    return out


def build_check_tensor(
    roots: RootSystem, groups: Sequence[CheckGroup]
) -> dict[tuple[int, int], tuple[int, ...]]:
    """``h[k, l]``: GF(q) coordinates of ``a^k b^l`` for every ECZ point ``(a, b)``.

    Each block has length ``m_i * n_ij`` (the orbit size of the point) and is
    expressed in the power basis of the primitive element of GF(q^(m_i n_ij));
    for full-degree points that is the basis ``1, alpha, ..., alpha^(t-1)``.
    """
    f = roots.field
    blocks = []
    for g in groups:
        for rep, n_ij in zip(g.members, g.eta_degrees):
            blocks.append((roots.point(rep.theta, rep.phi), g.xi_degree * n_ij))
    tensor = {}
    for k in range(roots.m):
        for l in range(roots.n):
            vec: list[int] = []
            for (a, b), d in blocks:
                coords = f.subfield_coordinates(f.mul(f.pow(a, k), f.pow(b, l)), d)
                if coords is None:
                    raise BasisError(f"a^{k} b^{l} is outside GF({f.p}^{d})")
                vec.extend(coords)
            tensor[(k, l)] = tuple(vec)
    return tensor


def select_parity_positions(
    roots: RootSystem, tensor: dict[tuple[int, int], tuple[int, ...]], size: int
) -> list[tuple[int, int]]:
    """Greedy row-major scan for ``size`` positions with independent check vectors."""
    p = roots.q
    basis: dict[int, list[int]] = {}  # pivot column -> reduced vector with 1 at pivot
    chosen = []
    for pos in sorted(tensor):
        if len(chosen) == size:
            break
        vec = list(tensor[pos])
        for c, row in basis.items():
            if vec[c]:
                f = vec[c]
                vec = [(v - f * w) % p for v, w in zip(vec, row)]
        pivot = next((c for c, v in enumerate(vec) if v), None)
        if pivot is None:
            continue
        inv = pow(vec[pivot], -1, p)
        vec = [v * inv % p for v in vec]
        for c, row in basis.items():
            if row[pivot]:
                f = row[pivot]
                basis[c] = [(v - f * w) % p for v, w in zip(row, vec)]
        basis[pivot] = vec
        chosen.append(pos)
    if len(chosen) < size:
        raise RankDeficiency(f"check tensor has rank {len(chosen)} < |V_c| = {size}")
    return chosen


@dataclass(frozen=True, eq=False)
class CodeSpec:
    """Everything derived from one choice of area, lambdas and ECZ points.

    Build instances with :func:`build_code`.
    """

    roots: RootSystem
    ecz_reps: tuple[CzPoint, ...]
    cz_set: tuple[CzPoint, ...]
    groups: tuple[CheckGroup, ...]
    check_tensor: dict
    parity_positions: tuple[tuple[int, int], ...]
    message_positions: tuple[tuple[int, int], ...]
    parity_map: tuple[tuple[int, ...], ...]  # |Pi| x K over GF(q)

    @property
    def field(self) -> GaloisField:
        return self.roots.field

    @property
    def m(self) -> int:
        return self.roots.m

    @property
    def n(self) -> int:
        return self.roots.n

    @property
    def q(self) -> int:
        return self.roots.q

    @property
    def dimension(self) -> int:
        return self.m * self.n - len(self.cz_set)

    @property
    def redundancy(self) -> int:
        return len(self.cz_set)

    def points(self, subset: Iterable[CzPoint] | None = None) -> list[tuple[int, int]]:
        """Field coordinates ``(a, b)`` of the given points (default: all of V_c)."""
        pts = self.cz_set if subset is None else subset
        return [self.roots.point(pt.theta, pt.phi) for pt in pts]

    def __repr__(self) -> str:
        return (
            f"CodeSpec(area={self.m}x{self.n}, lambda=({self.roots.lambda1}, {self.roots.lambda2}), "
            f"|V_c|={len(self.cz_set)}, K={self.dimension})"
        )


def build_code(roots: RootSystem, ecz_reps: Iterable[CzPoint | tuple[int, int]]) -> CodeSpec:
    reps = tuple(CzPoint(*r) for r in ecz_reps)
    cz_set = tuple(frobenius_closure(roots, reps))
    groups = tuple(group_representatives(roots, reps))
    tensor = build_check_tensor(roots, groups)
    parity = tuple(select_parity_positions(roots, tensor, len(cz_set)))
    pset = set(parity)
    message = tuple(pos for pos in sorted(tensor) if pos not in pset)

    # Codewords satisfy P c_parity + Q c_message = 0, where the columns of P
    # and Q are check vectors; hence c_parity = -P^-1 Q c_message.
    ops = ModP(roots.q)
    s = len(cz_set)
    parity_map: list[list[int]] = [[] for _ in range(s)]
    if s:
        P = [[tensor[pos][r] for pos in parity] for r in range(s)]
        P_inv = inverse(ops, P)
        Q = [[tensor[pos][r] for pos in message] for r in range(s)]
        parity_map = [
            [(-sum(P_inv[i][r] * Q[r][c] for r in range(s))) % roots.q for c in range(len(message))]
            for i in range(s)
        ]
    return CodeSpec(
        roots=roots,
        ecz_reps=reps,
        cz_set=cz_set,
        groups=groups,
        check_tensor=tensor,
        parity_positions=parity,
        message_positions=message,
        parity_map=tuple(tuple(row) for row in parity_map),
    )


def _check_shape(code: CodeSpec, arr: ArrayMN) -> None:
    if arr.shape != (code.m, code.n) or arr.field != code.field:
        raise ShapeMismatch(f"array shape {arr.shape} does not match code area {code.m}x{code.n}")


def syndrome(code: CodeSpec, arr: ArrayMN) -> list[int]:
    """Evaluations of ``arr`` at the ECZ representatives."""
    _check_shape(code, arr)
    return [eval2(arr, a, b) for a, b in code.points(code.ecz_reps)]


def check_syndrome(code: CodeSpec, arr: ArrayMN) -> list[int]:
    """``sum_kl arr[k][l] * h[k, l]`` over GF(q); the check-tensor form of the syndrome."""
    _check_shape(code, arr)
    p = code.q
    acc = [0] * len(code.cz_set)
    for (k, l), h in code.check_tensor.items():
        v = arr.entries[k][l]
        if v:
            acc = [(x + v * y) % p for x, y in zip(acc, h)]
    return acc


def is_codeword(code: CodeSpec, arr: ArrayMN) -> bool:
    _check_shape(code, arr)
    if not arr.is_base():
        # representatives only suffice for GF(q) arrays
        return all(eval2(arr, a, b) == 0 for a, b in code.points())
    return not any(syndrome(code, arr))


def systematic_encode(code: CodeSpec, message: Sequence[int]) -> ArrayMN:
    """Place ``message`` on the non-parity positions (row-major) and solve the parity."""
    if len(message) != code.dimension:
        raise LengthMismatch(f"message has {len(message)} symbols, code dimension is {code.dimension}")
    p = code.q
    msg = [int(v) % p for v in message]
    grid = [[0] * code.n for _ in range(code.m)]
    for (i, j), v in zip(code.message_positions, msg):
        grid[i][j] = v
    for (i, j), row in zip(code.parity_positions, code.parity_map):
        grid[i][j] = sum(g * v for g, v in zip(row, msg)) % p
    return ArrayMN(code.field, grid)


def extract_message(code: CodeSpec, arr: ArrayMN) -> list[int]:
    _check_shape(code, arr)
    return [arr.entries[i][j] for i, j in code.message_positions]


def error_capability(code: CodeSpec) -> tuple[int, int]:
    """``(|V_c| + 1, floor(|V_c| / 2))``: Singleton distance bound and design radius."""
    s = len(code.cz_set)
    return s + 1, s // 2


def min_distance_bruteforce(code: CodeSpec, limit: int = BRUTEFORCE_LIMIT, chunk: int = 1 << 16) -> int:
    """Minimum weight over all nonzero codewords, by enumerating messages."""
    p, k = code.q, code.dimension
    if k == 0:
        raise ValueError("the code has no nonzero codewords")
    if not code.cz_set:
        return 1  # every array is a codeword
    total = p**k
    if total > limit:
        raise TooLarge(f"{total} codewords exceed the enumeration limit {limit}")
    gen = np.array(code.parity_map, dtype=np.int64).reshape(len(code.cz_set), k)
    powers = p ** np.arange(k, dtype=np.int64)
    best = code.m * code.n
    for start in range(1, total, chunk):
        idx = np.arange(start, min(start + chunk, total), dtype=np.int64)
        msgs = (idx[:, None] // powers[None, :]) % p
        par = (msgs @ gen.T) % p
        weights = np.count_nonzero(msgs, axis=1) + np.count_nonzero(par, axis=1)
        best = min(best, int(weights.min()))
    return best


# -- code description files ------------------------------------------------

_SCALAR_KEYS = ("p", "t", "M", "N", "lambda1", "lambda2")


def format_code_spec(code: CodeSpec) -> str:
    f, r = code.field, code.roots
    lines = [
        f"p {f.p}",
        f"t {f.t}",
        "primpoly " + " ".join(str(c) for c in f.primitive_poly),
        f"M {r.m}",
        f"N {r.n}",
        f"lambda1 {r.lambda1}",
        f"lambda2 {r.lambda2}",
    ]
    lines += [f"ecz {pt.theta} {pt.phi}" for pt in code.ecz_reps]
    return "\n".join(lines) + "\n"


def parse_code_spec(text: str) -> CodeSpec:
    """Build a :class:`CodeSpec` from the line-oriented spec file format."""
    values: dict[str, int] = {}
    primpoly = None
    reps = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, *rest = line.split()
        try:
            nums = [int(x) for x in rest]
        except ValueError:
            raise ParseError(f"line {lineno}: non-integer value in {raw!r}") from None
        if key in _SCALAR_KEYS:
            if len(nums) != 1 or key in values:
                raise ParseError(f"line {lineno}: bad or repeated {key!r}")
            values[key] = nums[0]
        elif key == "primpoly":
            primpoly = nums
        elif key == "ecz":
            if len(nums) != 2:
                raise ParseError(f"line {lineno}: ecz needs theta and phi")
            reps.append(CzPoint(*nums))
        else:
            raise ParseError(f"line {lineno}: unknown key {key!r}")
    missing = [k for k in _SCALAR_KEYS if k not in values] + (["primpoly"] if primpoly is None else [])
    if missing:
        raise ParseError(f"missing keys: {', '.join(missing)}")
    field = GaloisField(values["p"], values["t"], primpoly)
    roots = build_root_system(field, values["M"], values["N"], values["lambda1"], values["lambda2"])
    return build_code(roots, reps)


def iter_codewords(code: CodeSpec) -> Iterable[ArrayMN]:
    """Every codeword, in message order.  Only sensible for tiny codes."""
    for msg in itertools.product(range(code.q), repeat=code.dimension):
        yield systematic_encode(code, msg)
