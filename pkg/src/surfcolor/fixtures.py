"""Small embedded graphs with known surfaces, used by tests, examples and the CLI."""

from __future__ import annotations

from .embedding import EmbeddedGraph


def planar_k4() -> EmbeddedGraph:
    """K4 on the sphere: 4 triangular faces."""
    return EmbeddedGraph.from_neighbor_rotation({0: [1, 2, 3], 1: [0, 3, 2], 2: [0, 1, 3], 3: [0, 2, 1]})


def toroidal_k7() -> EmbeddedGraph:
    """K7 triangulating the torus (Euler genus 2): 14 faces."""
    return EmbeddedGraph.from_neighbor_rotation({i: [(i + d) % 7 for d in (1, 3, 2, 6, 4, 5)] for i in range(7)})


def toroidal_grid(p: int = 3, q: int = 3) -> EmbeddedGraph:
    """The ``p x q`` toroidal grid ``C_p x C_q`` (Euler genus 2): ``pq`` quadrilateral faces."""

    def vid(i, j):
        return q * (i % p) + (j % q)

    return EmbeddedGraph.from_neighbor_rotation(
        {vid(i, j): [vid(i + 1, j), vid(i, j + 1), vid(i - 1, j), vid(i, j - 1)] for i in range(p) for j in range(q)}
    )


def projective_k5() -> EmbeddedGraph:
    """K5 on the projective plane (Euler genus 1): 6 faces."""
    rotation = {0: [1, 2, 3, 4], 1: [0, 2, 3, 4], 2: [0, 4, 1, 3], 3: [0, 2, 1, 4], 4: [0, 3, 1, 2]}
    signs = {(1, 2): -1, (1, 3): -1, (1, 4): -1, (2, 4): -1}
    return EmbeddedGraph.from_neighbor_rotation(rotation, signs)


FIXTURES = {
    "k4": planar_k4,
    "k7": toroidal_k7,
    "grid": toroidal_grid,
    "k5": projective_k5,
}
