"""
Independent reference computations used to freeze expected values.

Everything here works on labelled basis vectors (dicts from label tuples to
Fractions) and closed-form formulas worked out by hand, so it shares no
code path with the engine beyond ``Fraction``.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import count


def cantor_pair_by_walk(x: int, y: int) -> int:
    """Position of (x, y) when walking the anti-diagonals x + y = 0, 1, 2, ... by increasing y."""
    n = 0
    for s in count():
        for b in range(s + 1):
            if (s - b, b) == (x, y):
                return n
            n += 1


def encode_by_bits(degrees) -> int:
    """Bit string: for each degree, z zeros then a one, read from the low end."""
    bits = ""
    for d in degrees:
        z = 2 * d if d >= 0 else -2 * d - 1
        bits += "0" * z + "1"
    return int(bits[::-1], 2) if bits else 0


def kron_order(n_left: int, n_right: int):
    """Index of basis vector (i, j) in the lexicographic tensor basis."""
    return lambda i, j: i * n_right + j


def gamma_closed_form(q, x_deg, y_deg):
    """Gamma_{x,y} as {(col, row): value} from the hand-derived formula

    f*_j (x) f_k (x) e*_i (x) e_l  ->  q^{y_k (x_l - x_i)} (e_i (x) f_j)* (x) (e_l (x) f_k)

    where e is the basis of x and f the basis of y.
    """
    q = Fraction(q)
    nx, ny = len(x_deg), len(y_deg)
    nxy = nx * ny
    out = {}
    for j in range(ny):
        for k in range(ny):
            for i in range(nx):
                for l in range(nx):
                    col = ((j * ny + k) * nx + i) * nx + l
                    row = (i * ny + j) * nxy + (l * ny + k)
                    out[(col, row)] = q ** (y_deg[k] * (x_deg[l] - x_deg[i]))
    return out


def gamma_dual_closed_form(x_deg, y_deg):
    """gamma_{x,y}: f*_j (x) e*_i -> (e_i (x) f_j)*, a permutation."""
    nx, ny = len(x_deg), len(y_deg)
    return {(j * nx + i, i * ny + j): Fraction(1) for j in range(ny) for i in range(nx)}


def braid_closed_form(q, a_deg, b_deg):
    q = Fraction(q)
    na, nb = len(a_deg), len(b_deg)
    return {(i * nb + j, j * na + i): q ** (a_deg[i] * b_deg[j]) for i in range(na) for j in range(nb)}


def as_entries(m) -> dict:
    """Engine morphism to {(col, row): value} for comparison."""
    return {(c, r): v for c, col in m.columns.items() for r, v in col.items()}
