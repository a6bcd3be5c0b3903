r"""The six built-in dual graphs of the worked examples.

Each graph is the dual graph of the special fibre of a stable curve that
is also regular (so all thicknesses are 1 and m1 = 1).  Vertex genera are
the least ones making the configuration stable: genus 1 where fewer than
three branches of nodes meet the component, genus 0 elsewhere.

    loop                    banana                  square

        __                   .--e0--.               v0 --e0-- v1
       /  \                v0        v1             |          |
      v0   e0                '--e1--'              e3         e1
       \__/                                         |          |
                                                   v3 --e2-- v2

    theta-fan: three chains of two edges between n and s

            n
          / | \
        a   b   c
          \ | /
            s

    two-squares-bridge: two 4-circuits joined by a bridge

        n1          n2
       /  \        /  \
     w1    e1 -- w2    e2
       \  /        \  /
        s1          s2

    grid: doubled chains of two edges on the left and right, joined by
    two single-edge chains (top and bottom)

         a ------- b
        / \       / \
       c   d     e   f
        \ /       \ /
         g ------- h

The circuit invariants come out as c = 1, 2, 4, 2, 4, 2 respectively, so
for r a multiple of 4 the indices are m2 = r, r/2, r/4, r/2, r/4, r/2 and
m3 = r throughout.  The last two graphs are the standard witnesses that
being r-divided is not necessary for a finite model: two-squares-bridge
fails to be 4-divided because of the bridge, grid fails to be 2-divided
because of the two horizontal chains of length 1.
"""

from __future__ import annotations

from .graph import MultiGraph


def _stable_genera(vertices, edges):
    ends: dict[str, int] = {v: 0 for v in vertices}
    for _, tail, tip in edges:
        ends[tail] += 1
        ends[tip] += 1
    return {v: (0 if n >= 3 else 1) for v, n in ends.items()}


def _graph(vertices, edges) -> MultiGraph:
    return MultiGraph(vertices, edges, vertex_genus=_stable_genera(vertices, edges))


def _loop() -> MultiGraph:
    return _graph(["v0"], [("e0", "v0", "v0")])


def _banana() -> MultiGraph:
    return _graph(["v0", "v1"], [("e0", "v0", "v1"), ("e1", "v0", "v1")])


def _square() -> MultiGraph:
    vs = ["v0", "v1", "v2", "v3"]
    es = [
        ("e0", "v0", "v1"),
        ("e1", "v1", "v2"),
        ("e2", "v2", "v3"),
        ("e3", "v3", "v0"),
    ]
    return _graph(vs, es)


def _theta_fan() -> MultiGraph:
    vs = ["n", "a", "b", "c", "s"]
    es = [
        ("e0", "n", "a"),
        ("e1", "n", "b"),
        ("e2", "n", "c"),
        ("e3", "a", "s"),
        ("e4", "b", "s"),
        ("e5", "c", "s"),
    ]
    return _graph(vs, es)


def _two_squares_bridge() -> MultiGraph:
    vs = ["n1", "w1", "e1", "s1", "n2", "w2", "e2", "s2"]
    es = [
        ("a0", "n1", "w1"),
        ("a1", "n1", "e1"),
        ("a2", "w1", "s1"),
        ("a3", "e1", "s1"),
        ("b0", "n2", "w2"),
        ("b1", "n2", "e2"),
        ("b2", "w2", "s2"),
        ("b3", "e2", "s2"),
        ("bridge", "e1", "w2"),
    ]
    return _graph(vs, es)


def _grid() -> MultiGraph:
    vs = ["a", "b", "c", "d", "e", "f", "g", "h"]
    es = [
        ("e0", "a", "c"),
        ("e1", "a", "d"),
        ("e2", "a", "b"),
        ("e3", "b", "e"),
        ("e4", "b", "f"),
        ("e5", "c", "g"),
        ("e6", "d", "g"),
        ("e7", "e", "h"),
        ("e8", "f", "h"),
        ("e9", "g", "h"),
    ]
    return _graph(vs, es)


_BUILDERS = {
    "loop": _loop,
    "banana": _banana,
    "square": _square,
    "theta-fan": _theta_fan,
    "two-squares-bridge": _two_squares_bridge,
    "grid": _grid,
}

#: Fixture names in table order.
FIXTURE_NAMES: tuple[str, ...] = tuple(_BUILDERS)


def fixture(name: str) -> MultiGraph:
    """One of the built-in graphs by name; see :data:`FIXTURE_NAMES`."""
    try:
        return _BUILDERS[name]()
    except KeyError:
        raise KeyError(
            f"unknown fixture {name!r}; choose from {', '.join(FIXTURE_NAMES)}"
        ) from None


def paper_fixtures() -> list[tuple[str, MultiGraph]]:
    """All six built-in graphs, in table order."""
    return [(name, build()) for name, build in _BUILDERS.items()]
