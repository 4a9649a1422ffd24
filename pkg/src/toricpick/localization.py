"""Fixed point integration over the toric manifold of a Delzant polytope.

At the vertex p the facet class v_i restricts to <mu_{p,i}, u> when facet i
passes through p and to 0 otherwise; the equivariant Euler class is the
product of the n incident restrictions.  Evaluating a polynomial in the
facet classes at every vertex and summing restriction/Euler quotients gives
the pairing with the fundamental class, independent of the generic vector u.
"""

from fractions import Fraction
from itertools import combinations, permutations
from math import factorial

from .errors import (DimensionError, GenericityError, InputError,
                     RouteDisagreementError, ToricError)
from .exact import dot
from .polytope import enumerate_vertices
from .series import MultiPoly, elementary_symmetric


class GenericVector:
    """Integer vector with nonzero pairing against every weight row in use."""

    def __init__(self, u):
        self.u = tuple(int(x) for x in u)

    def __iter__(self):
        return iter(self.u)

    def __len__(self):
        return len(self.u)

    def __eq__(self, other):
        other_u = tuple(other) if isinstance(other, (tuple, list, GenericVector)) else None
        return self.u == other_u

    def __hash__(self):
        return hash(self.u)

    def __repr__(self):
        return "GenericVector(%s)" % (self.u,)


def _primes():
    found = []
    q = 2
    while True:
        if all(q % f for f in found):
            found.append(q)
            yield q
        q += 1 if q == 2 else 2


def _candidate_vectors(n):
    """Injective stream of candidates: (1, t, t^2, ...) over primes t.

    In dimension 1 that family is the constant (1,), so there the stream
    walks (1,), (2,), (3,), ... instead; any nonzero entry is generic.
    """
    if n == 1:
        k = 1
        while True:
            yield (k,)
            k += 1
    else:
        for t in _primes():
            yield tuple(t ** k for k in range(n))


def choose_generic(charts, exclude=()):
    """First candidate u = (1, t, t^2, ...) that avoids every weight row.

    Each bad hyperplane <mu, u> = 0 excludes finitely many t, so the search
    terminates for any finite chart list.
    """
    if not charts:
        raise InputError("no vertex charts to choose a generic vector for")
    n = len(charts[0].vertex)
    skip = {tuple(e) for e in exclude}
    for u in _candidate_vectors(n):
        if u in skip:
            continue
        ok = True
        for c in charts:
            if c.mu_matrix is None:
                raise InputError(
                    "localization requires a Delzant polytope; vertex %s has det %d"
                    % (c.vertex, c.det))
            if any(dot(c.mu_matrix.row(j), u) == 0 for j in range(n)):
                ok = False
                break
        if ok:
            return GenericVector(u)


def _chart_weights(p, u):
    """Per-chart weight tuples <mu_{p,i_j}, u> with genericity enforced."""
    charts = enumerate_vertices(p)
    uu = tuple(u)
    n = p.dim
    if len(uu) != n:
        raise DimensionError("generic vector has length %d, expected %d" % (len(uu), n))
    data = []
    for c in charts:
        if c.mu_matrix is None:
            raise InputError(
                "localization requires a Delzant polytope; vertex %s has det %d"
                % (c.vertex, c.det))
        w = tuple(dot(c.mu_matrix.row(j), uu) for j in range(n))
        if any(x == 0 for x in w):
            raise GenericityError(
                "u = %s pairs to zero with a weight at vertex %s; pick another vector"
                % (uu, c.vertex))
        data.append((c, w))
    return data


def assert_generic(p, u):
    """Check a candidate vector against every weight; raise if any pairs to zero."""
    _chart_weights(p, u)


def integrate_monomial(p, exponents, u):
    """Localization sum for one monomial in the facet classes.

    A chart contributes only when every facet with positive exponent passes
    through its vertex; the value is the weight monomial over the Euler
    product.  Degrees below n sum to exactly 0, degree n gives the
    intersection number.
    """
    exponents = tuple(int(e) for e in exponents)
    if len(exponents) != len(p.facets):
        raise DimensionError("exponent vector length %d, expected %d" % (
            len(exponents), len(p.facets)))
    if any(e < 0 for e in exponents):
        raise DimensionError("negative exponent")
    if sum(exponents) > p.dim:
        raise DimensionError("monomial degree exceeds the polytope dimension")
    total = Fraction(0)
    for c, w in _chart_weights(p, u):
        num = Fraction(1)
        for i, e in enumerate(exponents):
            if e == 0:
                continue
            if i not in c.facet_set:
                num = Fraction(0)
                break
            num *= Fraction(w[c.facet_set.index(i)]) ** e
        if num == 0:
            continue
        den = 1
        for x in w:
            den *= x
        total += num / den
    return total


def _integrate_parts(p, f, u):
    """Per-chart, per-degree localization values for a truncated polynomial."""
    if f.num_vars != len(p.facets):
        raise DimensionError("polynomial has %d variables, polytope has %d facets" % (
            f.num_vars, len(p.facets)))
    if f.trunc > p.dim:
        raise DimensionError("truncation %d exceeds the dimension %d" % (f.trunc, p.dim))
    data = _chart_weights(p, u)
    per_chart = []
    for c, w in data:
        restr = {i: Fraction(w[pos]) for pos, i in enumerate(c.facet_set)}
        den = 1
        for x in w:
            den *= x
        by_deg = {}
        for e, coeff in f.terms.items():
            val = coeff
            for i, k in enumerate(e):
                if k == 0:
                    continue
                r = restr.get(i)
                if r is None:
                    val = Fraction(0)
                    break
                val *= r ** k
            if val:
                d = sum(e)
                by_deg[d] = by_deg.get(d, Fraction(0)) + val / den
        per_chart.append((c, by_deg))
    return per_chart


def integrate_poly(p, f, u):
    """Pairing of the degree-n part with the fundamental class.

    Every homogeneous part of degree below n must localize to exactly 0;
    a nonzero value there signals a chart bug, not a user error.
    """
    value, _ = integrate_poly_breakdown(p, f, u)
    return value


def integrate_poly_breakdown(p, f, u):
    """Integral together with the per-vertex fixed point contributions."""
    n = p.dim
    per_chart = _integrate_parts(p, f, u)
    for d in range(n):
        s = sum((bd.get(d, Fraction(0)) for _, bd in per_chart), Fraction(0))
        if s != 0:
            raise ToricError(
                "localization of the degree-%d part is %s, expected 0 (chart bug)" % (d, s))
    value = sum((bd.get(n, Fraction(0)) for _, bd in per_chart), Fraction(0))
    contributions = tuple(
        (c.vertex, sum(bd.values(), Fraction(0))) for c, bd in per_chart)
    return value, contributions


def gysin_power(p, facet, k, u):
    """Direct fixed point sum for the n-th power of one facet class.

    Sums <mu_{p,i}, u>^(n-1) over the product of the other incident weights,
    across the vertices on facet i; equals integrate_monomial at n*delta_i.
    """
    n = p.dim
    if k != n:
        raise DimensionError("the direct sum is stated for the top power k = n")
    if not 0 <= facet < len(p.facets):
        raise DimensionError("facet index %d out of range" % facet)
    total = Fraction(0)
    for c, w in _chart_weights(p, u):
        if facet not in c.facet_set:
            continue
        pos = c.facet_set.index(facet)
        num = Fraction(w[pos]) ** (n - 1)
        den = 1
        for j, x in enumerate(w):
            if j != pos:
                den *= x
        total += num / den
    return total


def gysin_power_v3(p, facet, u):
    """3D evaluation of the same sum from raw normals via triple products.

    Writing <a, b, c> for det[a b c], each vertex on facet i with other
    facets j, k contributes <u, lam_j, lam_k>^2 divided by
    <u, lam_k, lam_i> <u, lam_i, lam_j>; the chart inverse never appears.
    """
    if p.dim != 3:
        raise DimensionError("triple product form is specific to dimension 3")
    if not 0 <= facet < len(p.facets):
        raise DimensionError("facet index %d out of range" % facet)
    uu = tuple(u)
    total = Fraction(0)
    for c in enumerate_vertices(p):
        if facet not in c.facet_set:
            continue
        others = [i for i in c.facet_set if i != facet]
        lam_i = p.normals[facet]
        lam_j, lam_k = p.normals[others[0]], p.normals[others[1]]
        a = _det3(uu, lam_j, lam_k)
        b = _det3(uu, lam_k, lam_i)
        cden = _det3(uu, lam_i, lam_j)
        if b == 0 or cden == 0:
            raise GenericityError("u = %s is not generic at vertex %s" % (uu, c.vertex))
        total += Fraction(a * a, b * cden)
    return total


def _det3(r0, r1, r2):
    return (r0[0] * (r1[1] * r2[2] - r1[2] * r2[1])
            - r0[1] * (r1[0] * r2[2] - r1[2] * r2[0])
            + r0[2] * (r1[0] * r2[1] - r1[1] * r2[0]))


def partitions_of(n):
    """All partitions of n as weakly decreasing tuples, largest part first."""
    def gen(rest, cap):
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in gen(rest - first, first):
                yield (first,) + tail
    return tuple(gen(n, n))


def check_partition(omega, n=None):
    """Canonicalize a partition; optionally require a given total."""
    omega = tuple(int(w) for w in omega)
    if not omega or any(w < 1 for w in omega):
        raise DimensionError("partition parts must be positive: %s" % (omega,))
    if tuple(sorted(omega, reverse=True)) != omega:
        raise DimensionError("partition must be weakly decreasing: %s" % (omega,))
    if n is not None and sum(omega) != n:
        raise DimensionError("partition %s does not sum to %d" % (omega, n))
    return omega


def _automorphisms(lam):
    out = 1
    for part in set(lam):
        out *= factorial(lam.count(part))
    return out


def fixed_point_partition_sum(p, lam, u):
    """Literal fixed point formula for a partition: ordered disjoint index
    tuples at each vertex and all permutations of the parts.

    At a vertex, splitting the n incident facets into a sorted l-tuple I1
    and its sorted complement I2 and summing the weight powers over
    permutations evaluates the augmented monomial symmetric function of the
    restrictions over the Euler class.
    """
    n = p.dim
    lam = check_partition(lam, n)
    l = len(lam)
    total = Fraction(0)
    for _c, w in _chart_weights(p, u):
        for i1 in combinations(range(n), l):
            rest = [w[j] for j in range(n) if j not in i1]
            den = 1
            for x in rest:
                den *= x
            for sigma in permutations(range(l)):
                num = 1
                for slot, j in enumerate(i1):
                    num *= w[j] ** (lam[sigma[slot]] - 1)
                total += Fraction(num, den)
    return total


def _monomial_coefficients(omega, n):
    """Monomial-symmetric expansion of prod_j e_{w_j} in n variables.

    n variables suffice because every partition of n has at most n parts.
    Returns {lam: coefficient of m_lam} over partitions of n.
    """
    poly = MultiPoly.constant(n, n, 1)
    for w in omega:
        poly = poly.mul(elementary_symmetric(w, n, n))
    out = {}
    for lam in partitions_of(n):
        rep = lam + (0,) * (n - len(lam))
        c = poly.coefficient(rep)
        if c:
            out[lam] = c
    return out


def chern_number(p, omega, u=None):
    """Chern number for a partition of n, computed two independent ways.

    Route one pushes the literal fixed point formula through the exact
    expansion of the elementary symmetric product into augmented monomials;
    route two integrates prod_j e_{w_j}(v_1..v_m) directly.  Any
    disagreement or non-integrality is reported as an error, never patched.
    """
    n = p.dim
    omega = check_partition(omega, n)
    charts = enumerate_vertices(p)
    if u is None:
        u = choose_generic(charts)
    m = len(p.facets)
    route_fixed = Fraction(0)
    for lam, coeff in _monomial_coefficients(omega, n).items():
        s = fixed_point_partition_sum(p, lam, u)
        route_fixed += coeff * s / _automorphisms(lam)
    poly = MultiPoly.constant(m, n, 1)
    for w in omega:
        poly = poly.mul(elementary_symmetric(w, m, n))
    route_classes = integrate_poly(p, poly, u)
    if route_fixed != route_classes:
        raise RouteDisagreementError(
            "fixed point route %s disagrees with class route %s for partition %s"
            % (route_fixed, route_classes, omega))
    if route_fixed.denominator != 1:
        raise RouteDisagreementError(
            "Chern number %s for partition %s is not an integer" % (route_fixed, omega))
    return route_fixed
