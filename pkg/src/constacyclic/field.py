"""Arithmetic in GF(p) and GF(p^t) backed by exp/log tables.

Elements are plain ints.  The int ``a`` encodes the coefficient vector of
``a`` in the power basis ``1, alpha, ..., alpha^(t-1)`` as base-p digits,
least significant digit first.  The prime subfield GF(p) is therefore
embedded as ``0 .. p-1`` and can be mixed freely with extension elements.

    >>> F = GaloisField(3, 4, [2, 1, 0, 0, 1])      # x^4 + x + 2
    >>> F.mul(F.alpha_pow(10), F.alpha_pow(8)) == F.alpha_pow(18)
    True
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Sequence

from .exceptions import (
    CharacteristicDividesArea,
    DivisionByZero,
    IncompatibleExtension,
    InvalidSubfield,
    NotPrime,
    NotPrimitivePolynomial,
    ParseError,
)

# Full addition tables are built only up to this many elements.
_ADD_TABLE_LIMIT = 4096
_MAX_ORDER = 1 << 20

_POWER_TOKEN = re.compile(r"a\^(-?\d+)$")


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    return all(n % d for d in range(3, math.isqrt(n) + 1, 2))


class GaloisField:
    """The finite field GF(p^t) = GF(p)[x] / (primitive_poly).

    Parameters
    ----------
    p : int
        Characteristic (must be prime).
    t : int
        Extension degree, ``t >= 1``.
    primitive_poly : sequence of int
        Monic degree-``t`` polynomial over GF(p), coefficients in ascending
        order.  It must be primitive: its root ``alpha`` has to generate the
        multiplicative group.

    Instances are immutable and compare equal when built from the same
    ``(p, t, primitive_poly)``.
    """

    def __init__(self, p: int, t: int, primitive_poly: Sequence[int]):
        if not is_prime(p):
            raise NotPrime(f"{p} is not prime")
        if t < 1:
            raise ValueError("extension degree must be >= 1")
        poly = tuple(int(c) for c in primitive_poly)
        if len(poly) != t + 1:
            raise NotPrimitivePolynomial(f"expected {t + 1} coefficients, got {len(poly)}")
        if any(not 0 <= c < p for c in poly):
            raise NotPrimitivePolynomial("coefficients must lie in [0, p)")
        if poly[-1] != 1:
            raise NotPrimitivePolynomial("polynomial must be monic")
        if p**t > _MAX_ORDER:
            raise ValueError(f"field of order {p**t} is too large for full tables")

        self.p = p
        self.t = t
        self.primitive_poly = poly
        self.order = p**t
        self.mult_order = self.order - 1
        self._weights = [p**i for i in range(t)]
        self._build_tables()

    def _build_tables(self) -> None:
        p, t, poly = self.p, self.t, self.primitive_poly
        n = self.mult_order
        exp = [0] * n
        log = [-1] * self.order
        coeffs = [1] + [0] * (t - 1)
        for k in range(n):
            value = self.from_digits(coeffs)
            if log[value] != -1:
                raise NotPrimitivePolynomial(
                    f"root of {poly} has multiplicative order {k} < {n}"
                )
            exp[k] = value
            log[value] = k
            # multiply the running power by alpha and reduce modulo poly
            top = coeffs[-1]
            coeffs = [0] + coeffs[:-1]
            if top:
                coeffs = [(c - top * poly[i]) % p for i, c in enumerate(coeffs)]
        if self.from_digits(coeffs) != 1:
            raise NotPrimitivePolynomial(f"alpha^{n} != 1 for {poly}")
        self._exp = exp + exp  # doubled so log sums need no reduction
        self._log = log
        self._add_table = None
        if self.order <= _ADD_TABLE_LIMIT:
            self._add_table = [
                [self._add_digits(a, b) for b in range(self.order)] for a in range(self.order)
            ]

    # -- identity ------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GaloisField):
            return NotImplemented
        return (self.p, self.t, self.primitive_poly) == (other.p, other.t, other.primitive_poly)

    def __hash__(self) -> int:
        return hash((self.p, self.t, self.primitive_poly))

    def __repr__(self) -> str:
        return f"GaloisField(p={self.p}, t={self.t}, primitive_poly={list(self.primitive_poly)})"

    # -- representation ------------------------------------------------------

    def digits(self, a: int) -> list[int]:
        """Coefficient vector of ``a`` (coefficient of alpha^i at index i)."""
        out = []
        for _ in range(self.t):
            a, r = divmod(a, self.p)
            out.append(r)
        return out

    def from_digits(self, coeffs: Sequence[int]) -> int:
        return sum(c * w for c, w in zip(coeffs, self._weights))

    def __contains__(self, a: object) -> bool:
        return isinstance(a, int) and 0 <= a < self.order

    @property
    def alpha(self) -> int:
        return self._exp[1 % self.mult_order]

    def alpha_pow(self, k: int) -> int:
        return self._exp[k % self.mult_order]

    def log(self, a: int) -> int:
        """Discrete logarithm base alpha; ``a`` must be nonzero."""
        if a == 0:
            raise DivisionByZero("log of zero")
        return self._log[a]

    def elements(self) -> Iterator[int]:
        return iter(range(self.order))

    def is_base(self, a: int) -> bool:
        """True iff ``a`` lies in the prime subfield GF(p)."""
        return 0 <= a < self.p

    # -- arithmetic ----------------------------------------------------------

    def _add_digits(self, a: int, b: int) -> int:
        p = self.p
        out = 0
        w = 1
        while a or b:
            a, da = divmod(a, p)
            b, db = divmod(b, p)
            out += ((da + db) % p) * w
            w *= p
        return out

    def add(self, a: int, b: int) -> int:
        if self._add_table is not None:
            return self._add_table[a][b]
        if self.p == 2:
            return a ^ b
        return self._add_digits(a, b)

    def neg(self, a: int) -> int:
        if self.p == 2 or a == 0:
            return a
        return self.from_digits([(-c) % self.p for c in self.digits(a)])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("inverse of zero")
        return self._exp[(-self._log[a]) % self.mult_order]

    def div(self, a: int, b: int) -> int:
        if b == 0:
            raise DivisionByZero("division by zero")
        if a == 0:
            return 0
        return self._exp[(self._log[a] - self._log[b]) % self.mult_order]

    def pow(self, a: int, k: int) -> int:
        """``a**k``; negative ``k`` is allowed for nonzero ``a``."""
        if a == 0:
            if k < 0:
                raise DivisionByZero("negative power of zero")
            return 1 if k == 0 else 0
        return self._exp[(self._log[a] * k) % self.mult_order]

    def sum(self, values) -> int:
        acc = 0
        for v in values:
            acc = self.add(acc, v)
        return acc

    def scalar(self, n: int) -> int:
        """Image of the integer ``n`` in GF(p)."""
        return n % self.p

    def multiplicative_order(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("zero has no multiplicative order")
        return self.mult_order // math.gcd(self._log[a], self.mult_order)

    # -- subfields -----------------------------------------------------------

    def subfield_degree(self, base_q: int) -> int:
        """Return ``s`` for ``base_q = p^s`` with ``s | t``."""
        s = 0
        n = base_q
        while n > 1 and n % self.p == 0:
            n //= self.p
            s += 1
        if n != 1 or s == 0 or self.t % s:
            raise InvalidSubfield(f"{base_q} is not the order of a subfield of GF({self.order})")
        return s

    def frobenius(self, a: int, base_q: int | None = None) -> int:
        """``a**base_q``; ``base_q`` defaults to ``p``."""
        if base_q is None:
            base_q = self.p
        self.subfield_degree(base_q)
        return self.pow(a, base_q)

    def in_subfield(self, a: int, s: int) -> bool:
        """True iff ``a`` lies in GF(p^s)."""
        if self.t % s:
            raise InvalidSubfield(f"{s} does not divide {self.t}")
        if a == 0:
            return True
        return self._log[a] % (self.mult_order // (self.p**s - 1)) == 0

    def conjugates(self, a: int, s: int = 1) -> list[int]:
        """Frobenius orbit of ``a`` over GF(p^s), starting from ``a``."""
        base_q = self.p**s
        self.subfield_degree(base_q)
        orbit = [a]
        b = self.pow(a, base_q)
        while b != a:
            orbit.append(b)
            b = self.pow(b, base_q)
        return orbit

    def subfield_generator(self, d: int) -> int:
        """Primitive element ``alpha^((p^t-1)/(p^d-1))`` of GF(p^d)."""
        if self.t % d:
            raise InvalidSubfield(f"{d} does not divide {self.t}")
        return self.alpha_pow(self.mult_order // (self.p**d - 1))

    @cached_property
    def _subfield_coordinate_maps(self) -> dict[int, tuple[list[int], list[list[int]]]]:
        return {}

    def subfield_coordinates(self, a: int, d: int) -> list[int] | None:
        """Coordinates of ``a`` over GF(p) in the basis ``1, w, ..., w^(d-1)``.

        ``w`` is :meth:`subfield_generator` ``(d)``; for ``d == t`` this is the
        power basis of ``alpha`` and the result equals :meth:`digits`.  Returns
        None when ``a`` is outside GF(p^d).
        """
        if d == self.t:
            return self.digits(a)
        if not self.in_subfield(a, d):
            return None
        cache = self._subfield_coordinate_maps
        if d not in cache:
            from .linalg import left_inverse_mod_p

            w = self.subfield_generator(d)
            basis = [self.digits(self.pow(w, i)) for i in range(d)]
            # columns are basis vectors: a t x d matrix over GF(p)
            matrix = [[basis[col][row] for col in range(d)] for row in range(self.t)]
            cache[d] = left_inverse_mod_p(matrix, self.p)
        linv = cache[d]
        x = self.digits(a)
        return [sum(r * v for r, v in zip(row, x)) % self.p for row in linv]

    # -- text forms ----------------------------------------------------------

    def format_element(self, a: int) -> str:
        """``"0"`` for zero, otherwise ``"a^k"`` with ``k`` the discrete log."""
        if a == 0:
            return "0"
        return f"a^{self._log[a]}"

    def parse_element(self, token: str) -> int:
        """Inverse of :meth:`format_element`; bare digits denote GF(p) elements."""
        token = token.strip()
        m = _POWER_TOKEN.match(token)
        if m:
            return self.alpha_pow(int(m.group(1)))
        if token.isdigit() and int(token) < self.p:
            return int(token)
        raise ParseError(f"bad field element token {token!r}")

    def format_coeffs(self, a: int) -> str:
        return " ".join(str(c) for c in self.digits(a))

    def parse_coeffs(self, text: str) -> int:
        parts = text.split()
        if len(parts) != self.t or not all(s.isdigit() and int(s) < self.p for s in parts):
            raise ParseError(f"expected {self.t} base-{self.p} digits, got {text!r}")
        return self.from_digits([int(s) for s in parts])


def build_field(p: int, t: int, primitive_poly: Sequence[int]) -> GaloisField:
    return GaloisField(p, t, primitive_poly)


def minimal_polynomial(field: GaloisField, a: int, sub_degree: int = 1) -> list[int]:
    """Minimal polynomial of ``a`` over GF(p^sub_degree), ascending coefficients.

    The coefficients are field elements of ``field`` lying in the subfield;
    the polynomial is the product of ``(x - c)`` over the Frobenius orbit.
    """
    orbit = field.conjugates(a, sub_degree)
    poly = [1]
    for root in orbit:
        shifted = [0] + poly
        for i, c in enumerate(poly):
            shifted[i] = field.sub(shifted[i], field.mul(root, c))
        poly = shifted
    if not all(field.in_subfield(c, sub_degree) for c in poly):
        raise InvalidSubfield("minimal polynomial has coefficients outside the subfield")
    return poly


def poly_eval(field: GaloisField, coeffs: Sequence[int], x: int) -> int:
    acc = 0
    for c in reversed(coeffs):
        acc = field.add(field.mul(acc, x), c)
    return acc


def poly_mul(field: GaloisField, a: Sequence[int], b: Sequence[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] = field.add(out[i + j], field.mul(x, y))
    return out


@dataclass(frozen=True)
class RootSystem:
    """The offset roots and roots of unity that index the common-zero points.

    ``gamma**m == lambda1`` and ``beta**n == lambda2``; ``zeta1`` and ``zeta2``
    have multiplicative orders exactly ``m`` and ``n``.  The point with
    spectral index ``(theta, phi)`` is ``(gamma*zeta1**theta, beta*zeta2**phi)``.
    """

    field: GaloisField
    m: int
    n: int
    lambda1: int
    lambda2: int
    gamma: int
    beta: int
    zeta1: int
    zeta2: int
    r1: int
    r2: int
    t1: int
    t2: int

    @property
    def q(self) -> int:
        return self.field.p

    def row_root(self, theta: int) -> int:
        """``gamma * zeta1**theta``: the x-coordinate of spectral row ``theta``."""
        f = self.field
        return f.mul(self.gamma, f.pow(self.zeta1, theta))

    def col_root(self, phi: int) -> int:
        f = self.field
        return f.mul(self.beta, f.pow(self.zeta2, phi))

    def point(self, theta: int, phi: int) -> tuple[int, int]:
        return self.row_root(theta), self.col_root(phi)

    def theta_of(self, a: int) -> int:
        """Inverse of :meth:`row_root` on the m-th roots of lambda1."""
        step = self.field.mult_order // self.m
        k, rem = divmod((self.field.log(a) - self.r1) % self.field.mult_order, step)
        if rem:
            raise ValueError(f"{a} is not an m-th root of lambda1")
        return k

    def phi_of(self, b: int) -> int:
        step = self.field.mult_order // self.n
        k, rem = divmod((self.field.log(b) - self.r2) % self.field.mult_order, step)
        if rem:
            raise ValueError(f"{b} is not an n-th root of lambda2")
        return k

    def extension_identities(self) -> tuple[int, int]:
        """``(r1*t1*m + 1, r2*t2*n + 1)``; both equal ``q**t`` for canonical roots."""
        return self.r1 * self.t1 * self.m + 1, self.r2 * self.t2 * self.n + 1

    def extension_check(self) -> bool:
        return self.extension_identities() == (self.field.order, self.field.order)

    def cyclic(self) -> RootSystem:
        """Same area and roots of unity with gamma = beta = 1 (the cyclic transform)."""
        return RootSystem(
            self.field, self.m, self.n, 1, 1, 1, 1, self.zeta1, self.zeta2, 0, 0, 1, 1
        )


def _primitive_root_of(field: GaloisField, lam: int, k: int, t_lam: int) -> int:
    """Smallest positive log ``r`` with ``alpha^(r*k) == lam`` and order ``t_lam*k``."""
    n = field.mult_order
    step = n // k
    base = field.log(lam) // k  # exact: k * t_lam divides n and lam has order t_lam
    want = step // t_lam  # gcd(r, n) for an element of order t_lam * k
    candidates = sorted((base + i * step) % n or n for i in range(k))
    for r in candidates:
        if math.gcd(r, n) == want:
            return r % n
    raise IncompatibleExtension(f"no primitive {k}-th root of {lam} found")


def build_root_system(
    field: GaloisField, m: int, n: int, lambda1: int = 1, lambda2: int = 1
) -> RootSystem:
    """Choose gamma, beta, zeta1, zeta2 for an ``m x n`` area in ``field``.

    ``zeta1 = alpha^((q^t-1)/m)`` and ``zeta2 = alpha^((q^t-1)/n)``.  ``gamma``
    is the primitive m-th root of ``lambda1`` with the smallest positive
    discrete log; when ``lambda1 = alpha^((q^t-1)/t1)`` this is exactly
    ``alpha^((q^t-1)/(t1*m))``.  ``beta`` is chosen the same way.
    """
    p = field.p
    if m < 1 or n < 1:
        raise ValueError("area dimensions must be positive")
    if math.gcd(m * n, p) != 1:
        raise CharacteristicDividesArea(f"p={p} divides the area {m}x{n}")
    for lam in (lambda1, lambda2):
        if not (0 < lam < p):
            raise IncompatibleExtension(f"lambda={lam} must be a nonzero element of GF({p})")
    t1 = field.multiplicative_order(lambda1)
    t2 = field.multiplicative_order(lambda2)
    if field.mult_order % (t1 * m) or field.mult_order % (t2 * n):
        raise IncompatibleExtension(
            f"GF({field.order}) lacks primitive roots: need {t1 * m} and {t2 * n} "
            f"to divide {field.mult_order}"
        )
    r1 = _primitive_root_of(field, lambda1, m, t1)
    r2 = _primitive_root_of(field, lambda2, n, t2)
    roots = RootSystem(
        field=field,
        m=m,
        n=n,
        lambda1=lambda1,
        lambda2=lambda2,
        gamma=field.alpha_pow(r1),
        beta=field.alpha_pow(r2),
        zeta1=field.alpha_pow(field.mult_order // m),
        zeta2=field.alpha_pow(field.mult_order // n),
        r1=r1,
        r2=r2,
        t1=t1,
        t2=t2,
    )
    f = field
    assert f.pow(roots.gamma, m) == lambda1 and f.pow(roots.beta, n) == lambda2
    assert f.multiplicative_order(roots.zeta1) == m and f.multiplicative_order(roots.zeta2) == n
    assert f.multiplicative_order(roots.gamma) == t1 * m
    assert f.multiplicative_order(roots.beta) == t2 * n
    return roots
