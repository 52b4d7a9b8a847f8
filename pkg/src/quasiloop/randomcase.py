"""Seeded random generation of desk-scale quasi-surfaces and loops.

Shared by the property-test suites and the CLI selftest so that both see
the same distribution and both are reproducible from a seed.
"""

from __future__ import annotations

import random

from .surface import QuasiSurface, QuasiSurfaceSpec, build
from .words import ConjClass, Word, canonical_conjugacy


def random_surface(
    rng: random.Random,
    max_disks: int = 2,
    max_gates: int = 4,
    max_vertices: int = 3,
    max_edges: int = 3,
    min_rank: int = 1,
) -> QuasiSurface:
    """A random connected quasi-surface of bounded size with rank >= min_rank."""
    for _ in range(500):
        n_disks = rng.randint(1, max_disks)
        counts = []
        remaining = max_gates
        for d in range(n_disks):
            low = 1
            high = remaining - (n_disks - d - 1)
            counts.append(rng.randint(low, max(low, high)))
            remaining -= counts[-1]
        n_vertices = rng.randint(1, max_vertices)
        vertices = tuple(f"v{i + 1}" for i in range(n_vertices))
        n_edges = rng.randint(0, max_edges)
        edges = tuple(
            (rng.choice(vertices), rng.choice(vertices)) for _ in range(n_edges)
        )
        gate_id = 0
        disks = []
        gluing = {}
        for count in counts:
            gates = []
            for _ in range(count):
                gate_id += 1
                gates.append(f"g{gate_id}")
                gluing[gates[-1]] = rng.choice(vertices)
            disks.append(tuple(gates))
        spec = QuasiSurfaceSpec(
            disks=tuple(disks),
            vertices=vertices,
            edges=edges,
            gluing=gluing,
            basepoint=rng.choice(vertices),
        )
        try:
            qs = build(spec)
        except ValueError:
            continue
        if qs.rank >= min_rank:
            return qs
    raise RuntimeError("could not generate a connected surface; widen the bounds")


def random_word(rng: random.Random, rank: int, max_len: int = 8, min_len: int = 0) -> Word:
    if rank == 0:
        return Word()
    n = rng.randint(min_len, max_len)
    return Word([(rng.randrange(rank), rng.choice((1, -1))) for _ in range(n)])


def random_class(rng: random.Random, rank: int, max_len: int = 8, min_len: int = 0) -> ConjClass:
    return canonical_conjugacy(random_word(rng, rank, max_len, min_len))


def random_nontrivial_class(rng: random.Random, rank: int, max_len: int = 8) -> ConjClass:
    for _ in range(100):
        c = random_class(rng, rank, max_len, min_len=1)
        if not c.is_trivial():
            return c
    return canonical_conjugacy(Word.generator(rng.randrange(rank)))


def random_omega(rng: random.Random, qs: QuasiSurface) -> tuple[int, ...]:
    return tuple(rng.choice((1, -1)) for _ in range(qs.n_gates))
