"""Bundled example polytopes with hand-checkable invariants.

Every entry is Delzant; the registry order is fixed so reports and files
are reproducible.  The non-Delzant triangle used to exercise rejection is
provided separately and deliberately kept out of the registry.
"""

from .polytope import HPolytope


def interval(k, name=None):
    """The segment [0, k]."""
    return HPolytope(1, [((1,), 0), ((-1,), -k)], name or "interval%d" % k)


def square(k, name=None):
    """The square [0, k]^2."""
    return HPolytope(2, [((1, 0), 0), ((0, 1), 0), ((-1, 0), -k), ((0, -1), -k)],
                     name or "square%d" % k)


def rectangle(a, b, name=None):
    """The box [0, a] x [0, b]."""
    return HPolytope(2, [((1, 0), 0), ((0, 1), 0), ((-1, 0), -a), ((0, -1), -b)],
                     name or "rect%dx%d" % (a, b))


def cp2_triangle(k, name=None):
    """Right triangle with legs of length k; the projective plane at scale k."""
    return HPolytope(2, [((1, 0), 0), ((0, 1), 0), ((-1, -1), -k)],
                     name or "triangle%d" % k)


def hirzebruch(name=None):
    """Trapezoid with vertices (0,0), (2,0), (1,1), (0,1); a Hirzebruch surface."""
    return HPolytope(2, [((1, 0), 0), ((0, 1), 0), ((-1, -1), -2), ((0, -1), -1)],
                     name or "hirzebruch")


def cube(k=1, name=None):
    """The cube [0, k]^3."""
    return HPolytope(3, [((1, 0, 0), 0), ((0, 1, 0), 0), ((0, 0, 1), 0),
                         ((-1, 0, 0), -k), ((0, -1, 0), -k), ((0, 0, -1), -k)],
                     name or "cube%d" % k)


def simplex3(k, name=None):
    """The 3-simplex with legs of length k at the origin."""
    return HPolytope(3, [((1, 0, 0), 0), ((0, 1, 0), 0), ((0, 0, 1), 0),
                         ((-1, -1, -1), -k)], name or "simplex3_%d" % k)


def prism(name=None):
    """Unit triangle times unit interval."""
    return HPolytope(3, [((1, 0, 0), 0), ((0, 1, 0), 0), ((-1, -1, 0), -1),
                         ((0, 0, 1), 0), ((0, 0, -1), -1)], name or "prism")


def non_delzant_triangle(name=None):
    """Simple lattice triangle that is not smooth: det -2 at the vertex (0, 1)."""
    return HPolytope(2, [((1, 0), 0), ((0, 1), 0), ((-1, -2), -2)], name or "p112")


CORPUS = (
    interval(1),
    interval(2),
    interval(5),
    square(1),
    square(2),
    rectangle(2, 3),
    cp2_triangle(1),
    cp2_triangle(2),
    cp2_triangle(3),
    hirzebruch(),
    cube(1),
    simplex3(1),
    simplex3(2),
    prism(),
)

_BY_NAME = {p.name: p for p in CORPUS}


def names():
    return tuple(p.name for p in CORPUS)


def get(name):
    return _BY_NAME[name]


def write_corpus(dirpath):
    """Write every registry entry as a JSON file under the directory."""
    import os

    from .cli import dump_polytope
    os.makedirs(dirpath, exist_ok=True)
    written = []
    for p in CORPUS:
        path = os.path.join(dirpath, "%s.json" % p.name)
        with open(path, "w") as fh:
            fh.write(dump_polytope(p))
        written.append(path)
    return written
