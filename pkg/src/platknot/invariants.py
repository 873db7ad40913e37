"""Desk-scale diagram invariants used as the verification oracle.

Everything here is exact integer arithmetic: Laurent polynomials with
integer coefficients, a brute-force Kauffman bracket over all 2^c
smoothing states (capped, default 22 crossings), the Jones polynomial by
writhe normalization, and the knot/link determinant from the Wirtinger
presentation evaluated at t = -1 with fraction-free (Bareiss) elimination.

The bracket and the determinant are deliberately independent computations
of overlapping information: |jones(t=-1)| must reproduce the determinant,
and that cross-check is what lets the rest of the package trust its sign
and orientation conventions.
"""

from __future__ import annotations

from typing import Mapping

from .errors import TooManyCrossings
from .plat import PlanarDiagram

__all__ = [
    "LaurentPoly",
    "DELTA",
    "kauffman_bracket",
    "jones",
    "jones_canonical",
    "jones_at_minus_one",
    "max_writhe",
    "determinant",
    "writhe",
    "BRACKET_CAP",
]

BRACKET_CAP = 22


class LaurentPoly:
    """Laurent polynomial in one variable with integer coefficients.

    Exponents are plain integers; what one unit of exponent means (A, t, or
    t^(1/2)) is up to the caller.  Zero coefficients are never stored.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        self.coeffs = {e: c for e, c in (coeffs or {}).items() if c != 0}

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({0: 1})

    @classmethod
    def monomial(cls, coeff: int, exp: int) -> "LaurentPoly":
        return cls({exp: coeff})

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        return isinstance(other, LaurentPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(tuple(sorted(self.coeffs.items())))

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        out: dict[int, int] = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly(out)

    def scale(self, k: int) -> "LaurentPoly":
        return LaurentPoly({e: k * c for e, c in self.coeffs.items()})

    def shift(self, d: int) -> "LaurentPoly":
        """Multiply by x^d."""
        return LaurentPoly({e + d: c for e, c in self.coeffs.items()})

    def reciprocal(self) -> "LaurentPoly":
        """Substitute x -> 1/x."""
        return LaurentPoly({-e: c for e, c in self.coeffs.items()})

    def format(self, var: str = "A", exponent_denominator: int = 1) -> str:
        """Render with exponents divided by ``exponent_denominator``."""
        if not self.coeffs:
            return "0"
        parts = []
        for e in sorted(self.coeffs, reverse=True):
            c = self.coeffs[e]
            num, rem = divmod(e, exponent_denominator)
            if rem == 0:
                power = "" if num == 1 else f"^{num}"
                term = "1" if e == 0 else f"{var}{power}"
            else:
                term = f"{var}^({e}/{exponent_denominator})"
            if e == 0:
                body = str(abs(c))
            else:
                body = term if abs(c) == 1 else f"{abs(c)}*{term}"
            parts.append(("- " if c < 0 else "+ ") + body)
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]

    def __repr__(self) -> str:
        return f"LaurentPoly({self.coeffs!r})"


DELTA = LaurentPoly({2: -1, -2: -1})  # loop value -A^2 - A^-2


def writhe(diagram: PlanarDiagram) -> int:
    """Sum of crossing signs under the diagram's stored orientation."""
    return diagram.writhe


def _state_loop_counts(quadruples, arc_count: int) -> dict[tuple[int, int], int]:
    """Tally (sum of smoothing exponents, closed loops) over all 2^c states.

    Smoothings are explored as a depth-first binary tree sharing prefixes,
    with a rollback union-find over arc labels; every one of the 2^c leaves
    is visited (no state merging).  At a crossing X[a,b,c,d] the A-smoothing
    joins a-b and c-d, the B-smoothing joins a-d and b-c.
    """
    ncross = len(quadruples)
    if ncross == 0:
        return {(0, 0): 1}
    parent = list(range(arc_count + 1))
    size = [1] * (arc_count + 1)
    counts: dict[tuple[int, int], int] = {}
    joins = [((q[0], q[1], q[2], q[3]), (q[0], q[3], q[1], q[2]))
             for q in quadruples]
    last = ncross - 1

    def go(k: int, sigma: int, loops: int) -> None:
        pair = joins[k]
        for ds in (1, -1):
            x, y, z, w = pair[0] if ds == 1 else pair[1]
            merged1 = merged2 = 0
            lp = loops
            rx = x
            while parent[rx] != rx:
                rx = parent[rx]
            ry = y
            while parent[ry] != ry:
                ry = parent[ry]
            if rx == ry:
                lp += 1
            else:
                if size[rx] < size[ry]:
                    rx, ry = ry, rx
                parent[ry] = rx
                size[rx] += size[ry]
                merged1 = ry
            rz = z
            while parent[rz] != rz:
                rz = parent[rz]
            rw = w
            while parent[rw] != rw:
                rw = parent[rw]
            if rz == rw:
                lp += 1
            else:
                if size[rz] < size[rw]:
                    rz, rw = rw, rz
                parent[rw] = rz
                size[rz] += size[rw]
                merged2 = rw
            if k == last:
                key = (sigma + ds, lp)
                counts[key] = counts.get(key, 0) + 1
            else:
                go(k + 1, sigma + ds, lp)
            if merged2:
                parent[merged2] = merged2
                size[rz] -= size[merged2]
            if merged1:
                parent[merged1] = merged1
                size[rx] -= size[merged1]

    go(0, 0, 0)
    return counts


def kauffman_bracket(diagram: PlanarDiagram, cap: int = BRACKET_CAP) -> LaurentPoly:
    """Bracket polynomial in A: sum over states of A^sigma * delta^(loops-1).

    Raises TooManyCrossings beyond ``cap`` (2^c states get expensive fast).
    The 0-crossing unknot gives 1; each extra split circle multiplies by
    delta = -A^2 - A^-2.
    """
    c = diagram.crossing_count
    if c > cap:
        raise TooManyCrossings(c, cap)
    if c == 0 and diagram.free_loops == 0:
        return LaurentPoly.one()
    counts = _state_loop_counts(diagram.quadruples, diagram.arc_count)
    delta_pow: dict[int, LaurentPoly] = {0: LaurentPoly.one()}

    def dpow(k: int) -> LaurentPoly:
        if k not in delta_pow:
            delta_pow[k] = dpow(k - 1) * DELTA
        return delta_pow[k]

    total = LaurentPoly.zero()
    extra = diagram.free_loops
    for (sigma, loops), mult in counts.items():
        total = total + dpow(loops + extra - 1).shift(sigma).scale(mult)
    return total


def jones(diagram: PlanarDiagram, cap: int = BRACKET_CAP) -> LaurentPoly:
    """Jones polynomial: (-A)^(-3w) * bracket, substituted A = t^(-1/4).

    Returned exponents are in units of t^(1/2) (the half-integer grid);
    they are integers because sigma - 3w is always even.
    """
    return _normalize_bracket(kauffman_bracket(diagram, cap), diagram.writhe)


def max_writhe(diagram: PlanarDiagram) -> int:
    """Largest writhe achievable by re-orienting components independently.

    Self-crossing signs never change; a crossing between two components
    flips sign when exactly one of them reverses.  The maximum is intrinsic
    to the unoriented diagram, unlike the traversal-assigned writhe.
    """
    self_w = 0
    inter: dict[tuple[int, int], int] = {}
    for quad, sign in zip(diagram.quadruples, diagram.signs):
        cu = diagram.component_of_arc[quad[0] - 1]
        co = diagram.component_of_arc[quad[1] - 1]
        if cu == co:
            self_w += sign
        else:
            key = (cu, co) if cu < co else (co, cu)
            inter[key] = inter.get(key, 0) + sign
    if not inter:
        return self_w
    ids = sorted({c for key in inter for c in key})
    pos = {c: i for i, c in enumerate(ids)}
    best = None
    for mask in range(1 << (len(ids) - 1)):  # global reversal changes nothing
        flips = [1] + [(-1 if mask >> i & 1 else 1) for i in range(len(ids) - 1)]
        w = self_w + sum(v * flips[pos[a]] * flips[pos[b]]
                         for (a, b), v in inter.items())
        if best is None or w > best:
            best = w
    return best


def _normalize_bracket(bracket: LaurentPoly, w: int) -> LaurentPoly:
    sign = -1 if w % 2 else 1
    out: dict[int, int] = {}
    for e, cf in bracket.coeffs.items():
        ea = e - 3 * w
        if ea % 2 != 0:
            raise AssertionError("normalized bracket exponent is odd")
        out[-ea // 2] = sign * cf
    return LaurentPoly(out)


def jones_canonical(diagram: PlanarDiagram, cap: int = BRACKET_CAP) -> LaurentPoly:
    """Jones polynomial of the diagram re-oriented to maximal writhe.

    This is the Jones polynomial of the closure for a specific orientation
    choice, picked so the result does not depend on how the traversal
    happened to orient each component.  Use it when comparing two diagrams
    that should present the same unoriented link.
    """
    return _normalize_bracket(kauffman_bracket(diagram, cap), max_writhe(diagram))


def jones_at_minus_one(poly: LaurentPoly) -> int:
    """|V(t = -1)| for a half-grid Jones polynomial, taking t^(1/2) = i.

    The value of any Jones polynomial there is a Gaussian integer with one
    vanishing part; its absolute value is the link determinant.
    """
    re = im = 0
    for e, cf in poly.coeffs.items():
        r = e % 4
        if r == 0:
            re += cf
        elif r == 1:
            im += cf
        elif r == 2:
            re -= cf
        else:
            im -= cf
    if re != 0 and im != 0:
        raise AssertionError(f"V(-1) = {re}{im:+d}i is not unit times integer")
    return abs(re) + abs(im)


def _bareiss_abs_det(mat: list[list[int]]) -> int:
    """|det| of an integer matrix by fraction-free elimination."""
    n = len(mat)
    if n == 0:
        return 1
    m = [row[:] for row in mat]
    prev = 1
    for k in range(n - 1):
        piv = next((r for r in range(k, n) if m[r][k] != 0), None)
        if piv is None:
            return 0
        if piv != k:
            m[k], m[piv] = m[piv], m[k]
        mkk = m[k][k]
        for i in range(k + 1, n):
            mik = m[i][k]
            row_i = m[i]
            row_k = m[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * mkk - mik * row_k[j]) // prev
        prev = mkk
    return abs(m[n - 1][n - 1])


def determinant(diagram: PlanarDiagram) -> int:
    """Link determinant |Delta(-1)| via Fox calculus on the Wirtinger
    presentation: one relation per crossing with integer stencil
    (over, under_in, under_out) = (2, -1, -1), one column deleted.

    Split diagrams return the product over split factors (each crossingless
    circle contributes 1).  A factor containing an entirely-over circle has
    an underdetermined presentation and contributes 0.
    """
    quads = diagram.quadruples
    ncross = len(quads)
    if ncross == 0:
        return 1

    # Split the 4-valent graph into connected factors (crossings as nodes).
    cparent = list(range(ncross))

    def cfind(x: int) -> int:
        while cparent[x] != x:
            cparent[x] = cparent[cparent[x]]
            x = cparent[x]
        return x

    arc_home: dict[int, int] = {}
    for k, quad in enumerate(quads):
        for a in quad:
            if a in arc_home:
                ra, rk = cfind(arc_home[a]), cfind(k)
                if ra != rk:
                    cparent[rk] = ra
            else:
                arc_home[a] = k

    factors: dict[int, list[int]] = {}
    for k in range(ncross):
        factors.setdefault(cfind(k), []).append(k)

    result = 1
    for crossings in factors.values():
        result *= _factor_determinant(quads, crossings)
        if result == 0:
            return 0
    return result


def _factor_determinant(quads, crossings: list[int]) -> int:
    # Wirtinger generators: PD arcs glued along over-strands.
    aparent: dict[int, int] = {}

    def afind(x: int) -> int:
        root = x
        while aparent[root] != root:
            root = aparent[root]
        while aparent[x] != root:
            aparent[x], x = root, aparent[x]
        return root

    for k in crossings:
        for a in quads[k]:
            aparent.setdefault(a, a)
    for k in crossings:
        _, b, _, d = quads[k]
        rb, rd = afind(b), afind(d)
        if rb != rd:
            aparent[rd] = rb

    cols: dict[int, int] = {}
    for a in aparent:
        r = afind(a)
        if r not in cols:
            cols[r] = len(cols)
    n_arcs = len(cols)
    n_cross = len(crossings)
    if n_arcs > n_cross:
        # an entirely-over circle: presentation has a free generator
        return 0

    matrix = [[0] * n_arcs for _ in range(n_cross)]
    for row, k in enumerate(crossings):
        a, b, c, _ = quads[k]
        matrix[row][cols[afind(b)]] += 2
        matrix[row][cols[afind(a)]] -= 1
        matrix[row][cols[afind(c)]] -= 1
    # delete one relation and one generator; first minors at t=-1 agree up to sign
    minor = [row[: n_arcs - 1] for row in matrix[: n_cross - 1]]
    return _bareiss_abs_det(minor)
