"""Hilden moves: generators of the bridge-pairing-preserving subgroup.

Multiplying a braid word on either side by elements of this subgroup does
not change the isotopy type of its plat closure, which makes the moves a
source of equivalent-but-different words for stress-testing the invariant
oracle.  There is no membership algorithm here: coset questions are only
probed by sampling translates and comparing closure invariants plus
canonical forms (a falsification harness, not a decision procedure).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

from .braid import BraidWord, compose, free_reduce, inverse, word_from_syllables
from .canonical import equivalent
from .errors import IndexParity, IndexRange
from .invariants import BRACKET_CAP, determinant, jones
from .plat import TwistMatrix, braid_closure, to_braid_word

__all__ = [
    "HildenMove",
    "expand",
    "apply_moves",
    "random_hilden_element",
    "hilden_generators",
    "coset_consistency",
    "CosetReport",
]

KINDS = ("h1", "h2", "h3", "h4")


@dataclass(frozen=True)
class HildenMove:
    """One generator: kind h1..h4 at an odd strand index, applied on one side."""

    kind: str
    index: int
    side: str = "left"

    def __post_init__(self):
        if self.kind not in KINDS:
            raise IndexRange(f"unknown Hilden move kind {self.kind!r}")
        if self.side not in ("left", "right"):
            raise IndexRange(f"side must be left or right, got {self.side!r}")


def expand(move: HildenMove, strands: int) -> BraidWord:
    """The defining 1- or 4-letter word of a Hilden generator.

    h1_i = s_i
    h2_i = s_(i+1) s_(i+2) s_i s_(i+1)
    h3_i = s_(i+1) s_i s_(i+2)^-1 s_(i+1)^-1
    h4_i = s_(i+1)^-1 s_i^-1 s_(i+2) s_(i+1)
    with i odd, and i != strands-1 for h2..h4.
    """
    i = move.index
    if i % 2 == 0:
        raise IndexParity(f"Hilden index must be odd, got {i}")
    if not 1 <= i <= strands - 1:
        raise IndexRange(f"index {i} out of range on {strands} strands")
    if move.kind == "h1":
        return word_from_syllables(strands, [(i, 1)])
    if i == strands - 1:
        raise IndexRange(f"{move.kind} needs i != {strands - 1} on {strands} strands")
    runs = {
        "h2": [(i + 1, 1), (i + 2, 1), (i, 1), (i + 1, 1)],
        "h3": [(i + 1, 1), (i, 1), (i + 2, -1), (i + 1, -1)],
        "h4": [(i + 1, -1), (i, -1), (i + 2, 1), (i + 1, 1)],
    }[move.kind]
    return word_from_syllables(strands, runs)


def apply_moves(b: BraidWord,
                left: Sequence[HildenMove] = (),
                right: Sequence[HildenMove] = ()) -> BraidWord:
    """Multiply ``b`` by Hilden generators: (product of left) b (product of right)."""
    word = b
    for mv in reversed(left):
        word = compose(expand(mv, b.strands), word)
    for mv in right:
        word = compose(word, expand(mv, b.strands))
    return word


def hilden_generators(strands: int) -> list[HildenMove]:
    """All legal generators on the given strand count."""
    gens = [HildenMove("h1", i) for i in range(1, strands, 2)]
    for kind in ("h2", "h3", "h4"):
        gens.extend(HildenMove(kind, i) for i in range(1, strands - 1, 2))
    return gens


def random_hilden_element(strands: int, length: int, seed: int) -> BraidWord:
    """Product of ``length`` uniformly chosen generators or their inverses,
    deterministic in ``seed``."""
    rng = random.Random(seed)
    gens = hilden_generators(strands)
    word = BraidWord(strands)
    for _ in range(length):
        g = expand(gens[rng.randrange(len(gens))], strands)
        if rng.randrange(2):
            g = inverse(g)
        word = compose(word, g)
    return word


@dataclass(frozen=True)
class CosetReport:
    """Outcome of the double-coset falsification harness."""

    verdict: str                      # same_coset | provably_distinct | consistent
    rotation_related: bool
    invariants1: dict
    invariants2: dict
    samples_checked: int
    violations: tuple[str, ...]

    @property
    def consistent(self) -> bool:
        return not self.violations

    def summary(self) -> str:
        lines = [f"verdict: {self.verdict}",
                 f"rotation-related: {self.rotation_related}",
                 f"word 1 invariants: {self.invariants1}",
                 f"word 2 invariants: {self.invariants2}",
                 f"sampled translates checked: {self.samples_checked}"]
        if self.violations:
            lines.append("VIOLATIONS:")
            lines.extend(f"  {v}" for v in self.violations)
        else:
            lines.append("no violations found")
        return "\n".join(lines)


def _closure_invariants(word: BraidWord, jones_cap: int) -> dict:
    diagram = braid_closure(word)
    inv = {"components": diagram.n_components, "determinant": determinant(diagram)}
    if diagram.crossing_count <= jones_cap:
        inv["jones"] = jones(diagram, jones_cap)
    return inv


def _comparable(inv1: dict, inv2: dict) -> dict:
    keys = (inv1.keys() & inv2.keys()) - {"jones"}
    return {k: (inv1[k], inv2[k]) for k in keys if inv1[k] != inv2[k]}


def coset_consistency(mat1: TwistMatrix, mat2: TwistMatrix,
                      samples: int = 20, seed: int = 0,
                      jones_cap: int = BRACKET_CAP) -> CosetReport:
    """Probe whether the expanded words of two highly twisted plats can lie
    in the same Hilden double coset.

    If the matrices are rotation-equal the words are in the same coset and
    every sampled translate h b1 h' must keep all closure invariants of b1
    (and b2).  If they are not rotation-equal, distinct cosets are expected:
    differing invariants certify that, and no sampled translate may reduce
    to b2 as a word.  Any violation recorded here falsifies the claimed
    uniqueness and indicates a bug somewhere.
    """
    # canonical_form preconditions are enforced by `equivalent`
    rotation_related = equivalent(mat1, mat2)
    b1, b2 = to_braid_word(mat1), to_braid_word(mat2)
    inv1 = _closure_invariants(b1, jones_cap)
    inv2 = _closure_invariants(b2, jones_cap)

    violations: list[str] = []
    separating = _comparable(inv1, inv2)
    if rotation_related and separating:
        violations.append(f"rotation-equal matrices with unequal invariants: {separating}")

    rng = random.Random(seed)
    reduced_b2 = free_reduce(b2)
    for s in range(samples):
        h_left = random_hilden_element(b1.strands, rng.randrange(1, 5), rng.randrange(1 << 30))
        h_right = random_hilden_element(b1.strands, rng.randrange(1, 5), rng.randrange(1 << 30))
        translate = compose(compose(h_left, b1), h_right)
        inv_t = _closure_invariants(translate, jones_cap)
        mismatch = _comparable(inv1, inv_t)
        if mismatch:
            violations.append(
                f"sample {s}: Hilden translate changed closure invariants: {mismatch}")
        if not rotation_related and free_reduce(translate).letters == reduced_b2.letters:
            violations.append(
                f"sample {s}: translate reduces to word 2 although canonical forms differ")

    if rotation_related:
        verdict = "same_coset"
    elif separating:
        verdict = "provably_distinct"
    else:
        verdict = "consistent"
    return CosetReport(
        verdict=verdict,
        rotation_related=rotation_related,
        invariants1={k: (v.format("t", 2) if k == "jones" else v) for k, v in inv1.items()},
        invariants2={k: (v.format("t", 2) if k == "jones" else v) for k, v in inv2.items()},
        samples_checked=samples,
        violations=tuple(violations),
    )
