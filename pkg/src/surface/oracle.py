# src/surface/oracle.py

import networkx as nx

from src.errors import GenusParityError
from src.surface.word import SurfaceWord


def corner_classes(word: SurfaceWord) -> int:
    """Number of vertices of the glued polygon (classes of identified corners)."""
    n = len(word)
    corners = nx.Graph()
    corners.add_nodes_from(range(n))
    partners = word.partners()
    for i, letter in enumerate(word):
        j = partners[i]
        if j < i:
            continue
        # side p runs corner p -> p+1 when its exponent is +1, p+1 -> p otherwise
        p, q = (i, j) if letter.exponent == 1 else (j, i)
        corners.add_edge(p, (q + 1) % n)
        corners.add_edge((p + 1) % n, q)
    return nx.number_connected_components(corners)


def genus_from_characteristic(chi: int) -> int:
    """Orientable genus (2 - chi) / 2; chi must be even and at most 2."""
    if chi > 2 or chi % 2:
        raise GenusParityError(f"Euler characteristic {chi} gives no orientable genus")
    return (2 - chi) // 2


def genus_by_corner_orbits(word: SurfaceWord) -> int:
    """Genus from the Euler characteristic V - L + 1 of the one-face gluing."""
    if len(word) == 0:
        return 0
    return genus_from_characteristic(corner_classes(word) - word.symbol_count + 1)
