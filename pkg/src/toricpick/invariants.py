"""Identity checks tying counting, combinatorics and localization together.

Each check computes its two sides by fully independent code paths
(enumeration vs. fixed points, h-vector vs. genus series) and returns a
Report whose verdict is exact rational equality.
"""

from fractions import Fraction

from .errors import InputError, ShapeError
from .lattice import (count_points, pick_rhs_3d, weighted_sum_closed,
                      weighted_sum_relint)
from .localization import (choose_generic, integrate_poly,
                           integrate_poly_breakdown)
from .polytope import (enumerate_vertices, face_lattice, h_vector,
                       induce_face_polytope, is_delzant, signature_from_h,
                       volume)
from .series import MultiPoly, exp_linear, genus_series, product_over_facets


class Report:
    """Verification result: both sides exactly, a verdict, and a breakdown."""

    def __init__(self, identity, polytope, lhs, rhs, holds, breakdown, generic_vectors):
        self.identity = identity
        self.polytope = polytope
        self.lhs = lhs
        self.rhs = rhs
        self.holds = holds
        self.breakdown = breakdown
        self.generic_vectors = tuple(tuple(u) for u in generic_vectors)

    def __repr__(self):
        return "Report(%s on %s: lhs=%s rhs=%s holds=%s)" % (
            self.identity, self.polytope, self.lhs, self.rhs, self.holds)


def _require_delzant(p):
    verdict = is_delzant(p)
    if not verdict:
        raise InputError(
            "polytope %s is not Delzant: vertex %s has det %d"
            % (p.name or "", verdict.vertex, verdict.det))


def kahler_class(p):
    """The degree-1 class -sum a_i v_i carried by the offsets."""
    m = len(p.facets)
    terms = {}
    for i, a in enumerate(p.offsets):
        if a:
            e = tuple(1 if j == i else 0 for j in range(m))
            terms[e] = -a
    return MultiPoly(m, p.dim, terms)


def _twist_factor(p):
    """exp(w_P) truncated at the dimension."""
    return exp_linear([-a for a in p.offsets], p.dim)


def _genus_class(p, kind):
    return product_over_facets(genus_series(kind, p.dim), len(p.facets), p.dim)


def _twisted_genus(p, kind, u):
    _require_delzant(p)
    if u is None:
        u = choose_generic(enumerate_vertices(p))
    cls = _twist_factor(p)
    if kind is not None:
        cls = cls.mul(_genus_class(p, kind))
    return integrate_poly_breakdown(p, cls, u)


def twisted_todd(p, u=None):
    """<exp(w_P) prod Td(v_i), [M_P]>; equals the lattice point count."""
    return _twisted_genus(p, "Todd", u)[0]


def twisted_todd_breakdown(p, u=None):
    """Twisted Todd genus together with its per-vertex contributions."""
    return _twisted_genus(p, "Todd", u)


def twisted_signature(p, u=None):
    """<exp(w_P) prod (v_i/2)/tanh(v_i/2), [M_P]>."""
    return _twisted_genus(p, "SignatureHalf", u)[0]


def twisted_signature_breakdown(p, u=None):
    """Twisted signature together with its per-vertex contributions."""
    return _twisted_genus(p, "SignatureHalf", u)


def volume_by_localization(p, u=None):
    """<exp(w_P), [M_P]> = w_P^n/n!, the Euclidean volume by fixed points."""
    return _twisted_genus(p, None, u)[0]


def volume_breakdown(p, u=None):
    """Euclidean volume by fixed points with per-vertex contributions."""
    return _twisted_genus(p, None, u)


def _format_point(point):
    return "(%s)" % ",".join(str(x) for x in point)


def check_pick(p, u=None):
    """Weighted lattice point count against the twisted signature.

    The left side is evaluated at two distinct generic vectors (both are
    reported); the right side is the closed-face weighted sum, cross-checked
    against the relative-interior formulation.
    """
    _require_delzant(p)
    charts = enumerate_vertices(p)
    u1 = u if u is not None else choose_generic(charts)
    u2 = choose_generic(charts, exclude=(tuple(u1),))
    cls = _twist_factor(p).mul(_genus_class(p, "SignatureHalf"))
    lhs, per_vertex = integrate_poly_breakdown(p, cls, u1)
    lhs2 = integrate_poly(p, cls, u2)
    fc = count_points(p)
    rhs = weighted_sum_closed(fc)
    rhs_relint = weighted_sum_relint(fc)
    n = p.dim
    breakdown = {
        "lhs_at_second_vector": lhs2,
        "relint_formulation_rhs": rhs_relint,
        "closed_count_by_dim": {str(d): fc.closed_by_dim(d) for d in range(n + 1)},
        "per_vertex": {_format_point(v): c for v, c in per_vertex},
    }
    if n == 2:
        area = volume_by_localization(p, u1)
        interior = fc.relint_by_dim(2)
        boundary = fc.total - interior
        breakdown["area"] = area
        breakdown["interior_points"] = interior
        breakdown["boundary_points"] = boundary
        breakdown["classical_pick_holds"] = area == interior + Fraction(boundary, 2) - 1
    holds = lhs == rhs and lhs2 == lhs and rhs_relint == rhs
    return Report("pick", p.name, lhs, rhs, holds, breakdown, (u1, u2))


def check_todd(p, u=None):
    """Twisted Todd genus against the brute-force lattice point count."""
    _require_delzant(p)
    charts = enumerate_vertices(p)
    u1 = u if u is not None else choose_generic(charts)
    u2 = choose_generic(charts, exclude=(tuple(u1),))
    cls = _twist_factor(p).mul(_genus_class(p, "Todd"))
    lhs, per_vertex = integrate_poly_breakdown(p, cls, u1)
    lhs2 = integrate_poly(p, cls, u2)
    fc = count_points(p)
    rhs = Fraction(fc.total)
    breakdown = {
        "lhs_at_second_vector": lhs2,
        "closed_count_by_dim": {str(d): fc.closed_by_dim(d) for d in range(p.dim + 1)},
        "per_vertex": {_format_point(v): c for v, c in per_vertex},
    }
    holds = lhs == rhs and lhs2 == lhs
    return Report("todd", p.name, lhs, rhs, holds, breakdown, (u1, u2))


def check_untwisted_signature(p, u=None):
    """Constant-twist genus term against the h-vector signature over 2^n."""
    _require_delzant(p)
    charts = enumerate_vertices(p)
    u1 = u if u is not None else choose_generic(charts)
    u2 = choose_generic(charts, exclude=(tuple(u1),))
    cls = _genus_class(p, "SignatureHalf")
    lhs, per_vertex = integrate_poly_breakdown(p, cls, u1)
    lhs2 = integrate_poly(p, cls, u2)
    hv = h_vector(face_lattice(p))
    sigma = signature_from_h(hv)
    n = p.dim
    rhs = sigma / 2 ** n
    breakdown = {
        "lhs_at_second_vector": lhs2,
        "h_vector": list(hv.h),
        "signature": sigma,
        "per_vertex": {_format_point(v): c for v, c in per_vertex},
    }
    if n == 2:
        breakdown["four_minus_m"] = 4 - len(p.facets)
    holds = lhs == rhs and lhs2 == lhs
    return Report("signature", p.name, lhs, rhs, holds, breakdown, (u1, u2))


def check_tetrahedron(p):
    """Interior-weighted count against Vol(P) - sum a_j / 3 for n = 3, m = 4."""
    if p.dim != 3 or len(p.facets) != 4:
        raise ShapeError("expected a 3-dimensional polytope with 4 facets, got dim %d with %d"
                         % (p.dim, len(p.facets)))
    _require_delzant(p)
    fc = count_points(p)
    lhs = pick_rhs_3d(fc)
    vol = volume(p)
    offset_term = Fraction(sum(p.offsets), 3)
    rhs = vol - offset_term
    breakdown = {
        "volume": vol,
        "offset_sum_over_3": offset_term,
        "relint_by_dim": {str(d): fc.relint_by_dim(d) for d in range(4)},
    }
    holds = lhs == rhs
    return Report("tetrahedron", p.name, lhs, rhs, holds, breakdown, ())


def check_face_todd(p):
    """Twisted Todd of every induced face against its closed lattice count.

    Vertices count as 1; the polytope itself uses its own twisted Todd; every
    intermediate face is re-presented in its own integral chart first.
    """
    _require_delzant(p)
    fl = face_lattice(p)
    fc = count_points(p)
    faces = {}
    all_hold = True
    lhs_total = Fraction(0)
    rhs_total = Fraction(0)
    for fid, face in enumerate(fl.faces):
        if face.dim == 0:
            got = Fraction(1)
        elif face.dim == p.dim:
            got = twisted_todd(p)
        else:
            got = twisted_todd(induce_face_polytope(p, face))
        expected = Fraction(fc.closed[fid])
        label = "dim%d/facets(%s)" % (face.dim, ",".join(map(str, face.facet_set)))
        faces[label] = {"twisted_todd": got, "lattice_count": expected}
        lhs_total += got
        rhs_total += expected
        if got != expected:
            all_hold = False
    breakdown = {"faces": faces}
    return Report("face-todd", p.name, lhs_total, rhs_total, all_hold, breakdown, ())
