"""Two-dimensional finite field Fourier transform (FFFT) and its laws.

``fft2`` maps a time-domain array ``c`` to the spectrum

    C[theta][phi] = c(gamma * zeta1**theta, beta * zeta2**phi),

i.e. the evaluations of ``c(x, y)`` at every point of ``V_o``.  It runs as
row transforms followed by column transforms; :func:`fft2_direct` keeps the
plain double sum around as an independent oracle.
"""
from __future__ import annotations

from .exceptions import CharacteristicDividesArea, ShapeMismatch
from .field import RootSystem
from .ring import ArrayMN, eval2


class Spectrum(ArrayMN):
    """An M x N array over the extension field, indexed by ``(theta, phi)``."""


def _check_shape(roots: RootSystem, arr: ArrayMN) -> None:
    if arr.shape != (roots.m, roots.n) or arr.field != roots.field:
        raise ShapeMismatch(f"array shape {arr.shape} does not match area {roots.m}x{roots.n}")


def _kernel(f, entries, row_exp, col_exp):
    """``out[u][v] = sum_ij entries[i][j] * alpha^(row_exp[u][i] + col_exp[v][j])``."""
    exp = f.alpha_pow
    partial = []
    for row in entries:
        terms = [(j, v) for j, v in enumerate(row) if v]
        partial.append([f.sum(f.mul(v, exp(ce[j])) for j, v in terms) for ce in col_exp])
    out = []
    for re_ in row_exp:
        out.append(
            [
                f.sum(f.mul(partial[i][v], exp(re_[i])) for i in range(len(entries)) if partial[i][v])
                for v in range(len(col_exp))
            ]
        )
    return out


def _root_logs(roots: RootSystem) -> tuple[list[int], list[int]]:
    f = roots.field
    return (
        [f.log(roots.row_root(th)) for th in range(roots.m)],
        [f.log(roots.col_root(ph)) for ph in range(roots.n)],
    )


def fft2(roots: RootSystem, arr: ArrayMN) -> Spectrum:
    _check_shape(roots, arr)
    f = roots.field
    row_logs, col_logs = _root_logs(roots)
    row_exp = [[i * la for i in range(roots.m)] for la in row_logs]
    col_exp = [[j * lb for j in range(roots.n)] for lb in col_logs]
    return Spectrum(f, _kernel(f, arr.entries, row_exp, col_exp))


def fft2_direct(roots: RootSystem, arr: ArrayMN) -> Spectrum:
    """The defining double sum, evaluated point by point with :func:`eval2`."""
    _check_shape(roots, arr)
    return Spectrum(
        roots.field,
        [[eval2(arr, *roots.point(th, ph)) for ph in range(roots.n)] for th in range(roots.m)],
    )


def inverse_scale(roots: RootSystem) -> int:
    """``1 / ((M mod p) * (N mod p))`` in GF(p)."""
    f = roots.field
    s = f.scalar((roots.m % f.p) * (roots.n % f.p))
    if s == 0:
        raise CharacteristicDividesArea(f"p={f.p} divides the area {roots.m}x{roots.n}")
    return f.inv(s)


def ifft2(roots: RootSystem, spectrum: ArrayMN) -> ArrayMN:
    _check_shape(roots, spectrum)
    f = roots.field
    scale = inverse_scale(roots)
    row_logs, col_logs = _root_logs(roots)
    row_exp = [[-i * la for la in row_logs] for i in range(roots.m)]
    col_exp = [[-j * lb for lb in col_logs] for j in range(roots.n)]
    values = _kernel(f, spectrum.entries, row_exp, col_exp)
    return ArrayMN(f, [[f.mul(scale, v) for v in row] for row in values])


def spectral_nulls(code) -> list[tuple[int, int]]:
    """Spectral positions forced to zero for every codeword of ``code``."""
    return sorted((pt.theta, pt.phi) for pt in code.cz_set)


def check_conjugate_symmetry(roots: RootSystem, spectrum: ArrayMN) -> bool:
    """True iff ``spectrum`` is the transform of an array over GF(q).

    With ``c = ifft2(spectrum)`` this checks
    ``C[th][ph]**q == sum c[i][j] * row_root(th)**(i*q) * col_root(ph)**(j*q)``
    at every position.
    """
    f = roots.field
    q = roots.q
    c = ifft2(roots, spectrum)
    for th in range(roots.m):
        a = f.pow(roots.row_root(th), q)
        for ph in range(roots.n):
            b = f.pow(roots.col_root(ph), q)
            if f.pow(spectrum.entries[th][ph], q) != eval2(c, a, b):
                return False
    return True


def dual_root_check(roots: RootSystem, arr: ArrayMN, spectrum: ArrayMN) -> bool:
    """Verify both directions of the time/frequency root duality.

    ``C[th][ph] == 0`` iff ``c`` vanishes at ``(gamma zeta1^th, beta zeta2^ph)``,
    and ``c[i][j] == 0`` iff the spectrum polynomial vanishes at
    ``(zeta1^-i, zeta2^-j)``.
    """
    f = roots.field
    for th in range(roots.m):
        for ph in range(roots.n):
            if (spectrum.entries[th][ph] == 0) != (eval2(arr, *roots.point(th, ph)) == 0):
                return False
    for i in range(roots.m):
        for j in range(roots.n):
            at = eval2(spectrum, f.pow(roots.zeta1, -i), f.pow(roots.zeta2, -j))
            if (arr.entries[i][j] == 0) != (at == 0):
                return False
    return True


def spectral_convolution(roots: RootSystem, cyclic_a: ArrayMN, spectrum_b: ArrayMN) -> Spectrum:
    """``scale * sum cyclic_a[th - th'][ph - ph'] * B[th'][ph']`` (indices mod M, N).

    With ``cyclic_a = fft2(roots.cyclic(), a)`` and ``B = fft2(roots, b)`` this
    equals ``fft2(roots, a.hadamard(b))``.
    """
    f = roots.field
    m, n = roots.m, roots.n
    scale = inverse_scale(roots)
    b_terms = [(u, v, x) for (u, v) in spectrum_b.positions() if (x := spectrum_b.entries[u][v])]
    out = [
        [
            f.mul(
                scale,
                f.sum(f.mul(cyclic_a.entries[(th - u) % m][(ph - v) % n], x) for u, v, x in b_terms),
            )
            for ph in range(n)
        ]
        for th in range(m)
    ]
    return Spectrum(f, out)
