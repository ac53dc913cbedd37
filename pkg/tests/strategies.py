"""Hypothesis strategies shared across the property tests."""
from __future__ import annotations

from hypothesis import strategies as st

from chromabound.graph import graph_from_edge_mask


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 8):
    """Uniform labeled graph with min_n <= n <= max_n vertices."""
    n = draw(st.integers(min_n, max_n))
    m = n * (n - 1) // 2
    mask = draw(st.integers(0, (1 << m) - 1)) if m else 0
    return graph_from_edge_mask(n, mask)
