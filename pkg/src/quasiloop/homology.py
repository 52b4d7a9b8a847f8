"""Intersection forms on the first homology of a quasi-surface.

H1 is the abelianized fundamental group, with the free generators of the
presentation as basis.  The oriented form counts, for a pair of loops in
generic position, the signed crossings forced near the gates by a gate
orientation (plus any declared surface crossings); it depends only on the
homology classes.  Antisymmetrizing removes the orientation dependence.
"""

from __future__ import annotations

from typing import Sequence

from .diagrams import (
    ExplicitDiagram,
    GenericFamily,
    LaneDiagram,
    as_diagram,
    combine_generic,
    parse_omega,
    _realize_cyclic,
    validate_diagram,
)
from .surface import QuasiSurface
from .words import ConjClass, Word, abelianize

H1Class = tuple[int, ...]


def h1_class(qs: QuasiSurface, x: "Word | ConjClass | LaneDiagram") -> H1Class:
    if isinstance(x, LaneDiagram):
        from .diagrams import diagram_to_word

        x = diagram_to_word(qs, x)
    if isinstance(x, ConjClass):
        x = x.representative()
    return abelianize(x, qs.rank)


def gate_dual(qs: QuasiSurface, gate: str, x: H1Class) -> int:
    """The linear map dual to a gate, evaluated on a homology class."""
    k = qs.gate_index(gate)
    matrix = qs.gate_crossing_matrix()
    return sum(coeff * matrix[i][k] for i, coeff in enumerate(x))


def _gate_pair_sum(qs: QuasiSurface, omega: Sequence[int], fam: GenericFamily,
                   loop_a: int, loop_b: int) -> int:
    total = 0
    for k, gate in enumerate(qs.gates):
        seq = fam.gate_sequence(gate)
        if not seq:
            continue
        pos = {ref: i for i, ref in enumerate(seq)}
        if omega[k] < 0:
            pos = {ref: len(seq) - 1 - i for ref, i in pos.items()}
        for p in seq:
            if p.loop != loop_a:
                continue
            for q in seq:
                if q.loop != loop_b or pos[q] >= pos[p]:
                    continue
                total += omega[k] * p.sign * q.sign
    return total


def first_form(
    qs: QuasiSurface,
    omega: "str | Sequence[int] | None",
    a: "LaneDiagram | ConjClass | Word | ExplicitDiagram",
    b: "LaneDiagram | ConjClass | Word | None" = None,
) -> int:
    """The oriented crossing number of a pair of loops.

    Accepts two loops (combined generically here) or a single
    two-loop :class:`ExplicitDiagram`, whose declared crossings then
    contribute their signs on top of the gate terms.
    """
    signs = parse_omega(qs, omega)
    declared = 0
    if isinstance(a, ExplicitDiagram):
        if b is not None:
            raise ValueError("pass either two loops or one explicit two-loop family")
        if len(a.loops) != 2:
            raise ValueError("the explicit family of a pair form must hold two loops")
        for d in a.loops:
            validate_diagram(qs, d)
        fam = GenericFamily(qs, [_realize_cyclic(qs, d) for d in a.loops], normalize=False)
        for crossing in a.crossings:
            s = crossing.oriented(0, 1)
            if s is not None:
                declared += s
    else:
        if b is None:
            raise ValueError("first_form needs two loops")
        fam = combine_generic(qs, [as_diagram(qs, a), as_diagram(qs, b)])
    return declared + _gate_pair_sum(qs, signs, fam, 0, 1)


def gram_matrix(qs: QuasiSurface, omega: "str | Sequence[int] | None" = None) -> list[list[int]]:
    """Gram matrix of the orientation-independent pairing on the generator basis."""
    from .diagrams import word_to_diagram
    from .words import canonical_conjugacy

    diagrams_ = [
        word_to_diagram(qs, canonical_conjugacy(Word.generator(i)))
        for i in range(qs.rank)
    ]
    raw = [
        [first_form(qs, omega, diagrams_[i], diagrams_[j]) for j in range(qs.rank)]
        for i in range(qs.rank)
    ]
    return [
        [raw[i][j] - raw[j][i] for j in range(qs.rank)]
        for i in range(qs.rank)
    ]


def second_form(qs: QuasiSurface, x, y) -> int:
    """The skew-symmetric homological intersection form; orientation-free."""
    if not isinstance(x, tuple):
        x = h1_class(qs, x)
    if not isinstance(y, tuple):
        y = h1_class(qs, y)
    gram = gram_matrix(qs)
    return sum(
        x[i] * y[j] * gram[i][j] for i in range(qs.rank) for j in range(qs.rank)
    )
