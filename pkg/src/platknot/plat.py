"""Plat diagrams in standard form.

A standard-form plat of width m and height n (n odd) is described by its
coefficient matrix: row i holds the signed crossing counts of the twist
regions at level i, with m-1 entries on odd rows (even-index generators)
and m entries on even rows (odd-index generators).  The braid word
expansion attaches exponent -a_ij to the corresponding generator; that
negation happens in exactly one place, :func:`to_braid_word`.

Closing the braid with bridge arcs (three styles: standard, even, doubly
even) yields a crossing-level planar diagram with deterministic PD codes,
arc labels and orientation, suitable for the invariant oracle.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .braid import BraidWord, word_from_syllables
from . import braid as _braid
from .errors import (
    EvenHeight,
    FormatError,
    WidthTooSmall,
    WrongRowLength,
)

__all__ = [
    "TwistMatrix",
    "PlatClosureStyle",
    "PlanarDiagram",
    "validate",
    "is_highly_twisted",
    "to_braid_word",
    "braid_closure",
    "closure",
    "component_count",
]


def row_width(m: int, i: int) -> int:
    """Number of twist regions at level i (1-based): m-1 on odd rows, m on even."""
    return m - 1 if i % 2 == 1 else m


@dataclass(frozen=True)
class TwistMatrix:
    """Coefficient matrix of a plat in standard form.

    Construction does not enforce the row-length pattern; call
    :func:`validate` (all operations do).  Entries may be zero: the
    invariant oracle runs on small, non-highly-twisted diagrams.
    """

    m: int
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(tuple(int(a) for a in r) for r in self.rows))

    @property
    def n(self) -> int:
        return len(self.rows)

    def entries(self) -> tuple[int, ...]:
        """All coefficients, rows concatenated in order."""
        return tuple(a for row in self.rows for a in row)

    # -- text interchange: line 1 "m n", then n whitespace-separated rows --

    @classmethod
    def from_text(cls, text: str) -> "TwistMatrix":
        lines = []
        for raw in text.splitlines():
            line = raw.split("#", 1)[0].strip()
            if line:
                lines.append(line)
        if not lines:
            raise FormatError("empty twist-matrix file")
        head = lines[0].split()
        if len(head) != 2:
            raise FormatError(f"header must be 'm n', got {lines[0]!r}")
        try:
            m, n = int(head[0]), int(head[1])
            rows = tuple(tuple(int(tok) for tok in line.split()) for line in lines[1:])
        except ValueError as exc:
            raise FormatError(str(exc)) from None
        if len(rows) != n:
            raise FormatError(f"expected {n} rows, got {len(rows)}")
        return cls(m, rows)

    def to_text(self) -> str:
        out = [f"{self.m} {self.n}"]
        out.extend(" ".join(str(a) for a in row) for row in self.rows)
        return "\n".join(out) + "\n"

    @classmethod
    def from_json_dict(cls, obj: dict) -> "TwistMatrix":
        if obj.get("plat-format", 1) != 1:
            raise FormatError(f"unsupported plat-format {obj.get('plat-format')!r}")
        try:
            mat = cls(int(obj["m"]), tuple(tuple(r) for r in obj["rows"]))
        except (KeyError, TypeError) as exc:
            raise FormatError(f"bad twist-matrix JSON: {exc}") from None
        if "n" in obj and int(obj["n"]) != mat.n:
            raise FormatError(f"n={obj['n']} does not match {mat.n} rows")
        return mat

    def to_json_dict(self) -> dict:
        return {"plat-format": 1, "m": self.m, "n": self.n,
                "rows": [list(r) for r in self.rows]}


def validate(mat: TwistMatrix) -> None:
    """Raise on the first structural violation; None means well formed."""
    if mat.m < 2:
        raise WidthTooSmall(f"width m must be >= 2, got {mat.m}")
    if mat.n < 1 or mat.n % 2 == 0:
        raise EvenHeight(f"height n must be odd and >= 1, got {mat.n}")
    for i, row in enumerate(mat.rows, start=1):
        want = row_width(mat.m, i)
        if len(row) != want:
            raise WrongRowLength(i, want, len(row))


def is_highly_twisted(mat: TwistMatrix, c: int) -> bool:
    """True iff every coefficient satisfies |a_ij| >= c."""
    validate(mat)
    return all(abs(a) >= c for a in mat.entries())


def to_braid_word(mat: TwistMatrix) -> BraidWord:
    """Expand to the standard-form word b_1 ... b_n on 2m strands.

    Odd rows use the even generators sigma_2, sigma_4, ..., even rows the
    odd generators sigma_1, sigma_3, ...; coefficient a_ij contributes
    exponent -a_ij (knot-diagram sign convention).
    """
    validate(mat)
    runs = []
    for i, row in enumerate(mat.rows, start=1):
        first = 2 if i % 2 == 1 else 1
        for j, a in enumerate(row):
            if a != 0:
                runs.append((first + 2 * j, -a))
    return word_from_syllables(2 * mat.m, runs)


class PlatClosureStyle(enum.Enum):
    STANDARD = "standard"
    EVEN = "even"
    DOUBLY_EVEN = "doubly_even"

    @classmethod
    def from_name(cls, name: str) -> "PlatClosureStyle":
        for st in cls:
            if st.value == name:
                return st
        raise FormatError(f"unknown closure style {name!r}")


# Crossing corners, and the geometry used for orientation bookkeeping.
# Braids are drawn top to bottom; NW/NE are the incoming ends.
_NW, _NE, _SW, _SE = 0, 1, 2, 3
_OPPOSITE = (_SE, _SW, _NE, _NW)          # strands swap columns through a crossing
_CCW_NEXT = (_SW, _NW, _SE, _NE)          # counterclockwise successor of each corner
_XY = ((-1, 1), (1, 1), (-1, -1), (1, -1))


@dataclass(frozen=True)
class PlanarDiagram:
    """Crossing-level diagram of a closed-up braid.

    quadruples   PD code: arc labels counterclockwise from the incoming
                 under-strand end, one quadruple per crossing, crossings in
                 braid order (row-major over twist regions, top to bottom
                 inside each region).
    signs        crossing signs under the stored orientation.
    components   arc labels in traversal order, one tuple per component;
                 crossingless circles appear as empty tuples at the end.
    visits       per component: (crossing index, passes_over) along the
                 traversal; this records the orientation.
    """

    quadruples: tuple[tuple[int, int, int, int], ...]
    signs: tuple[int, ...]
    arc_count: int
    components: tuple[tuple[int, ...], ...]
    component_of_arc: tuple[int, ...]
    visits: tuple[tuple[tuple[int, bool], ...], ...]

    @property
    def crossing_count(self) -> int:
        return len(self.quadruples)

    @property
    def writhe(self) -> int:
        return sum(self.signs)

    @property
    def n_components(self) -> int:
        return len(self.components)

    @property
    def free_loops(self) -> int:
        return sum(1 for comp in self.components if not comp)

    def pd_lines(self) -> list[str]:
        return [f"X[{a},{b},{c},{d}]" for (a, b, c, d) in self.quadruples]

    def gauss_lines(self) -> list[str]:
        """Signed Gauss code, one line per component, crossings numbered by
        first encounter along the stored traversal; O/U marks over/under."""
        number: dict[int, int] = {}
        lines = []
        for comp_visits in self.visits:
            toks = []
            for k, over in comp_visits:
                if k not in number:
                    number[k] = len(number) + 1
                s = "+" if self.signs[k] > 0 else "-"
                toks.append(f"{'O' if over else 'U'}{number[k]}{s}")
            lines.append(" ".join(toks) if toks else "(circle)")
        return lines


def _closure_pairs(strands: int, shifted: bool) -> list[tuple[int, int]]:
    if shifted:
        return [(p, p % strands + 1) for p in range(2, strands + 1, 2)]
    return [(p, p + 1) for p in range(1, strands, 2)]


def braid_closure(word: BraidWord, style: PlatClosureStyle = PlatClosureStyle.STANDARD) -> PlanarDiagram:
    """Close a braid word with bridge arcs and return its planar diagram.

    Closure arcs are nested in the projection plane and carry no crossings,
    so the diagram has exactly len(word) crossings.  Arc labels, component
    order and orientation follow the deterministic traversal rule: start at
    the leftmost top bridge, then at the smallest unvisited arc.
    """
    strands = word.strands
    top_pairs = _closure_pairs(strands, style is PlatClosureStyle.DOUBLY_EVEN)
    bottom_pairs = _closure_pairs(strands, style is not PlatClosureStyle.STANDARD)

    # Trace strand segments through the braid.  A segment is born at a top
    # bridge or a crossing output and dies at a crossing input or a bottom
    # bridge; bottom bridges merge segments (union-find), so the classes
    # that remain are exactly the arcs (edges) of the 4-valent diagram.
    seg_ports: list[list[tuple[int, int]]] = []
    parent: list[int] = []

    def new_seg() -> int:
        seg_ports.append([])
        parent.append(len(parent))
        return len(parent) - 1

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    cur = [0] * (strands + 1)
    for p, q in top_pairs:
        s = new_seg()
        cur[p] = cur[q] = s

    crossing_segs: list[list[int]] = []  # per crossing: segment at NW,NE,SW,SE
    letter_signs: list[int] = []
    for k, lt in enumerate(word.letters):
        i = lt.index
        out_l, out_r = new_seg(), new_seg()
        segs = [cur[i], cur[i + 1], out_l, out_r]
        for corner, s in enumerate(segs):
            seg_ports[s].append((k, corner))
        crossing_segs.append(segs)
        letter_signs.append(lt.sign)
        cur[i], cur[i + 1] = out_l, out_r

    has_ports = [bool(seg_ports[s]) for s in range(len(parent))]
    free_circles = 0
    for p, q in bottom_pairs:
        ra, rb = find(cur[p]), find(cur[q])
        if ra == rb:
            if not has_ports[ra]:
                free_circles += 1
        else:
            parent[rb] = ra
            has_ports[ra] = has_ports[ra] or has_ports[rb]

    # Arcs: segment classes with ports, indexed in creation order.
    arc_of_root: dict[int, int] = {}
    arc_ports: list[list[tuple[int, int]]] = []
    for s in range(len(parent)):
        if not seg_ports[s]:
            continue
        r = find(s)
        if r not in arc_of_root:
            arc_of_root[r] = len(arc_ports)
            arc_ports.append([])
        arc_ports[arc_of_root[r]].extend(seg_ports[s])
    n_arcs = len(arc_ports)
    assert all(len(ports) == 2 for ports in arc_ports)

    quad_raw = [[arc_of_root[find(s)] for s in segs] for segs in crossing_segs]
    port_arc = {}
    for a, ports in enumerate(arc_ports):
        for port in ports:
            port_arc[port] = a

    # Deterministic traversal: label arcs by first encounter.
    labels = [0] * n_arcs
    next_label = 1
    components_raw: list[list[int]] = []
    visit_lists: list[list[tuple[int, int]]] = []
    entry_corner: list[list[int]] = [[] for _ in crossing_segs]

    start_order = []
    if parent and has_ports[find(0)]:
        start_order.append(arc_of_root[find(0)])  # leftmost top bridge
    start_order.extend(range(n_arcs))
    for start in start_order:
        if labels[start]:
            continue
        comp: list[int] = []
        visits: list[tuple[int, int]] = []
        arc, far = start, arc_ports[start][0]
        while True:
            if not labels[arc]:
                labels[arc] = next_label
                next_label += 1
            comp.append(arc)
            k, corner = far
            visits.append((k, corner))
            entry_corner[k].append(corner)
            out = _OPPOSITE[corner]
            nxt = quad_raw[k][out]
            p0, p1 = arc_ports[nxt]
            arc, far = nxt, (p1 if p0 == (k, out) else p0)
            if (arc, far) == (start, arc_ports[start][0]):
                break
        components_raw.append(comp)
        visit_lists.append(visits)

    # Crossing signs and PD quadruples from the recorded entry corners.
    signs = []
    quadruples = []
    comp_visit_over: list[list[tuple[int, bool]]] = [[] for _ in components_raw]
    over_diag = []
    for k, segs in enumerate(crossing_segs):
        over = (_NW, _SE) if letter_signs[k] > 0 else (_NE, _SW)
        over_diag.append(over)
        e1, e2 = entry_corner[k]
        e_over = e1 if e1 in over else e2
        e_under = e2 if e1 in over else e1
        vo = (-_XY[e_over][0], -_XY[e_over][1])
        vu = (-_XY[e_under][0], -_XY[e_under][1])
        signs.append(1 if (-vo[1], vo[0]) == vu else -1)
        quad = []
        corner = e_under
        for _ in range(4):
            quad.append(labels[quad_raw[k][corner]])
            corner = _CCW_NEXT[corner]
        quadruples.append(tuple(quad))

    for ci, visits in enumerate(visit_lists):
        for k, corner in visits:
            comp_visit_over[ci].append((k, corner in over_diag[k]))

    components = [tuple(labels[a] for a in comp) for comp in components_raw]
    component_of_arc = [0] * n_arcs
    for ci, comp in enumerate(components, start=1):
        for lab in comp:
            component_of_arc[lab - 1] = ci
    components.extend(() for _ in range(free_circles))
    comp_visit_over.extend([] for _ in range(free_circles))

    return PlanarDiagram(
        quadruples=tuple(quadruples),
        signs=tuple(signs),
        arc_count=n_arcs,
        components=tuple(components),
        component_of_arc=tuple(component_of_arc),
        visits=tuple(tuple(v) for v in comp_visit_over),
    )


def closure(mat: TwistMatrix, style: PlatClosureStyle = PlatClosureStyle.STANDARD) -> PlanarDiagram:
    """Planar diagram of the plat closure of the standard-form word of ``mat``."""
    return braid_closure(to_braid_word(mat), style)


def component_count(mat: TwistMatrix, style: PlatClosureStyle = PlatClosureStyle.STANDARD) -> int:
    """Number of link components, via the pairing/permutation walk.

    Independent of the diagram traversal in :func:`braid_closure`: walk
    top pairing -> braid permutation -> bottom pairing and count orbits.
    Each component is covered by exactly two orbits (one per direction).
    """
    word = to_braid_word(mat)
    strands = word.strands
    perm = _braid.permutation(word)
    inv = [0] * (strands + 1)
    for i, p in enumerate(perm, start=1):
        inv[p] = i
    tau_t = _pairing_map(strands, style is PlatClosureStyle.DOUBLY_EVEN)
    tau_b = _pairing_map(strands, style is not PlatClosureStyle.STANDARD)

    seen = [False] * (strands + 1)
    orbits = 0
    for start in range(1, strands + 1):
        if seen[start]:
            continue
        orbits += 1
        p = start
        while not seen[p]:
            seen[p] = True
            p = tau_t[inv[tau_b[perm[p - 1]]]]
    assert orbits % 2 == 0
    return orbits // 2


def _pairing_map(strands: int, shifted: bool) -> list[int]:
    tau = [0] * (strands + 1)
    for p, q in _closure_pairs(strands, shifted):
        tau[p], tau[q] = q, p
    return tau
