"""Constructive enumeration of the finite-index subgroups of the HW group.

Every finite-index subgroup is isomorphic to exactly one of Z^3, the dicosm
group G2, or the Hantzsche-Wendt group itself, according to the size of its
image in the Klein four-group quotient.  Each type has an exact parameter
description, realized here by three descriptor records:

* :class:`Z3Descriptor` -- a sublattice of the translation subgroup
  Lambda = <x^2, y^2, z^2>, stored as an Hnf3 in half-exponent coordinates.
  Index in HW = 4 * lattice index.
* :class:`G2Descriptor` -- a subgroup of one of the three index-2 subgroups
  Gamma_x = <x, y^2, z^2>, Gamma_y, Gamma_z.  Stored as (axis, k, H, (s, t)):
  k is the odd exponent of the distinguished generator axis^k * h, H is the
  plane sublattice (intersection with the two complementary squared
  generators), and (s, t) is the coset representative of h, reduced to the
  canonical transversal [0, H.b) x [0, H.a).  Index = 2 * k * H.index.
* :class:`G6Descriptor` -- a subgroup isomorphic to the whole group, given
  by six parameters (k, l, m, u, v, w) with k, l, m odd, k*l*m = index,
  0 <= u < l, 0 <= v < m, 0 <= w < k.

Conjugation of descriptors is computed exactly: conjugate the generating
elements with the group arithmetic and re-extract the canonical parameters.
The textbook action formulas are therefore test assertions here, not trusted
inputs.

Counting functions named ``count_s`` (subgroups) and ``count_c`` (conjugacy
classes = equivalence classes of coverings) return the closed-form values;
the enumeration and classing machinery reproduces them constructively, and
the test suite compares both against a brute-force coset-table search.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, NamedTuple

from . import arith
from .arith import d3, d3_alternating, divisors, omega, sigma0, sigma2
from .group import E, GEN_X, GEN_Y, GEN_Z, SIGNS, Element
from .lattice import Hnf2, Hnf3, hnf2_all, hnf2_of, hnf3_all, transform2, transform3

ISO_TYPES = ("g1", "g2", "g6")
AXES = ("x", "y", "z")

# Half-exponent coordinate of each axis, and the cyclically-complementary
# plane coordinates: axis x pairs with (y, z), axis y with (z, x), axis z
# with (x, y).  The cyclic choice transports the x-axis conventions to the
# other two axes along the outer automorphism permuting the generators.
_AXIS_POS = {"x": 0, "y": 1, "z": 2}
_PLANE_POS = {"x": (1, 2), "y": (2, 0), "z": (0, 1)}


class Z3Descriptor(NamedTuple):
    lattice: Hnf3


class G2Descriptor(NamedTuple):
    axis: str
    k: int
    lattice: Hnf2
    s: int
    t: int


class G6Descriptor(NamedTuple):
    k: int
    l: int
    m: int
    u: int
    v: int
    w: int


Descriptor = Z3Descriptor | G2Descriptor | G6Descriptor


def descriptor_type(d: Descriptor) -> str:
    """JSON tag of the descriptor: z3, g2 or g6."""
    if isinstance(d, Z3Descriptor):
        return "z3"
    if isinstance(d, G2Descriptor):
        return "g2"
    return "g6"


def iso_of(d: Descriptor) -> str:
    """Isomorphism type of the subgroup (g1 = Z^3 covering a torus)."""
    return {"z3": "g1", "g2": "g2", "g6": "g6"}[descriptor_type(d)]


_TYPE_RANK = {"z3": 0, "g2": 1, "g6": 2}


def sort_key(d: Descriptor) -> tuple:
    """Canonical total order: z3 block, then g2, then g6, lexicographic inside."""
    return (_TYPE_RANK[descriptor_type(d)], d)


# ---------------------------------------------------------------------------
# Closed-form counts
# ---------------------------------------------------------------------------

def count_s(iso: str, n: int) -> int:
    """Number of index-n subgroups of the given isomorphism type."""
    if iso == "g1":
        return omega(Fraction(n, 4))
    if iso == "g2":
        return 3 * omega(Fraction(n, 2)) - 3 * omega(Fraction(n, 4))
    if iso == "g6":
        return n * d3_alternating(n)
    raise ValueError(f"unknown isomorphism type {iso!r}")


def count_c(iso: str, n: int) -> int:
    """Number of conjugacy classes of index-n subgroups (= coverings)."""
    if iso == "g1":
        val = (
            Fraction(1, 4) * omega(Fraction(n, 4))
            + Fraction(3, 4) * sigma2(Fraction(n, 4))
            + Fraction(9, 4) * sigma2(Fraction(n, 8))
        )
    elif iso == "g2":
        val = Fraction(3, 2) * (
            sigma2(Fraction(n, 2))
            + 2 * sigma2(Fraction(n, 4))
            - 3 * sigma2(Fraction(n, 8))
            + d3(Fraction(n, 2))
            - d3(Fraction(n, 4))
            - 3 * d3(Fraction(n, 8))
            + 5 * d3(Fraction(n, 16))
            - 2 * d3(Fraction(n, 32))
        )
    elif iso == "g6":
        return d3_alternating(n)
    else:
        raise ValueError(f"unknown isomorphism type {iso!r}")
    if val.denominator != 1:
        raise ArithmeticError(f"class count for {iso} at n={n} is fractional: {val}")
    return int(val)


# ---------------------------------------------------------------------------
# Enumeration
# ---------------------------------------------------------------------------

def _odd_divisors(n: int) -> list[int]:
    return [d for d in divisors(n) if d % 2]


def enumerate_z3(n: int) -> list[Z3Descriptor]:
    """All index-n subgroups isomorphic to Z^3 (empty unless 4 | n)."""
    if n < 1 or n % 4:
        return []
    return [Z3Descriptor(h) for h in hnf3_all(n // 4)]


def enumerate_g2(n: int) -> list[G2Descriptor]:
    """All index-n subgroups isomorphic to the dicosm group (n even only)."""
    if n < 1 or n % 2:
        return []
    q = n // 2
    out = []
    for axis in AXES:
        for k in _odd_divisors(q):
            for lat in hnf2_all(q // k):
                out.extend(
                    G2Descriptor(axis, k, lat, s, t)
                    for s in range(lat.b)
                    for t in range(lat.a)
                )
    out.sort()
    return out


def enumerate_g6(n: int) -> list[G6Descriptor]:
    """All index-n subgroups isomorphic to the whole group (n odd only)."""
    if n < 1 or n % 2 == 0:
        return []
    out = []
    for k in _odd_divisors(n):
        for l in _odd_divisors(n // k):
            m = n // (k * l)
            out.extend(
                G6Descriptor(k, l, m, u, v, w)
                for u in range(l)
                for v in range(m)
                for w in range(k)
            )
    out.sort()
    return out


_ENUMERATORS = {"g1": enumerate_z3, "g2": enumerate_g2, "g6": enumerate_g6}


def enumerate_iso(iso: str, n: int) -> list[Descriptor]:
    return _ENUMERATORS[iso](n)


def enumerate_index(n: int) -> list[Descriptor]:
    """All index-n subgroups, z3 block first, then g2, then g6."""
    return [*enumerate_z3(n), *enumerate_g2(n), *enumerate_g6(n)]


# ---------------------------------------------------------------------------
# Generators, membership, index
# ---------------------------------------------------------------------------

def _vec(g: Element) -> tuple[int, int, int]:
    return (g.a, g.b, g.c)


def _plane_element(axis: str, s: int, t: int) -> Element:
    vec = [0, 0, 0]
    p1, p2 = _PLANE_POS[axis]
    vec[p1], vec[p2] = s, t
    return Element(E, *vec)


def _axis_element(axis: str, k: int, s: int, t: int) -> Element:
    vec = [0, 0, 0]
    vec[_AXIS_POS[axis]] = (k - 1) // 2
    p1, p2 = _PLANE_POS[axis]
    vec[p1], vec[p2] = s, t
    return Element(axis, *vec)


def _g6_brackets(d: G6Descriptor) -> tuple[int, int, int]:
    """Reduced translation exponents (A, B, C) of the three generators."""
    k, l, m, u, v, w = d
    A = (m - 1 + 2 * v) % (2 * m)
    B = (1 - k + 2 * w) % (2 * k)
    C = (l - 1 + 2 * u) % (2 * l)
    return A, B, C


def generators(d: Descriptor) -> tuple[Element, Element, Element]:
    """Three elements generating the subgroup."""
    if isinstance(d, Z3Descriptor):
        c1, c2, c3 = d.lattice.columns()
        return Element(E, *c1), Element(E, *c2), Element(E, *c3)
    if isinstance(d, G2Descriptor):
        lat = d.lattice
        return (
            _plane_element(d.axis, lat.b, 0),
            _plane_element(d.axis, lat.c, lat.a),
            _axis_element(d.axis, d.k, d.s, d.t),
        )
    A, B, C = _g6_brackets(d)
    k, l, m = d.k, d.l, d.m
    g_x = Element("x", (m - 1) // 2, B // 2, C // 2)
    g_y = Element("y", A // 2, (k - 1) // 2, d.u)
    g_z = Element("z", d.v, d.w, (l - 1) // 2)
    return g_x, g_y, g_z


def contains(d: Descriptor, g: Element) -> bool:
    """Exact membership test."""
    if isinstance(d, Z3Descriptor):
        return g.letter == E and d.lattice.contains(_vec(g))
    if isinstance(d, G2Descriptor):
        axis, k, lat = d.axis, d.k, d.lattice
        vec = _vec(g)
        p1, p2 = _PLANE_POS[axis]
        pv = (vec[p1], vec[p2])
        if g.letter == E:
            return vec[_AXIS_POS[axis]] % k == 0 and lat.contains(pv)
        if g.letter == axis:
            if (2 * vec[_AXIS_POS[axis]] + 1 - k) % (2 * k):
                return False
            return lat.contains((pv[0] - d.s, pv[1] - d.t))
        return False
    k, l, m = d.k, d.l, d.m
    A, B, C = _g6_brackets(d)
    ex, ey, ez = g.exponents()
    if g.letter == E:
        return ex % (2 * m) == 0 and ey % (2 * k) == 0 and ez % (2 * l) == 0
    if g.letter == "x":
        return (ex - m) % (2 * m) == 0 and (ey - B) % (2 * k) == 0 and (ez - C) % (2 * l) == 0
    if g.letter == "y":
        return (ey - k) % (2 * k) == 0 and (ex - A) % (2 * m) == 0 and (ez - 2 * d.u) % (2 * l) == 0
    return (ez - l) % (2 * l) == 0 and (ex - 2 * d.v) % (2 * m) == 0 and (ey - 2 * d.w) % (2 * k) == 0


def index_of(d: Descriptor) -> int:
    if isinstance(d, Z3Descriptor):
        return 4 * d.lattice.index
    if isinstance(d, G2Descriptor):
        return 2 * d.k * d.lattice.index
    return d.k * d.l * d.m


# ---------------------------------------------------------------------------
# Conjugation
# ---------------------------------------------------------------------------

def _plane_coords(axis: str, g: Element) -> tuple[int, int]:
    vec = _vec(g)
    p1, p2 = _PLANE_POS[axis]
    return vec[p1], vec[p2]


def _g2_extract(axis: str, k: int, ga: Element, gb: Element, gz: Element) -> G2Descriptor:
    """Canonical descriptor of the subgroup <ga, gb, gz> of Gamma_axis.

    ga, gb must lie in the complementary plane lattice and gz must carry
    axis-exponent +-k; any generating triple of that shape works, which is
    what makes exact conjugation possible.
    """
    if ga.letter != E or gb.letter != E:
        raise ValueError("plane generators left the translation lattice")
    lat = hnf2_of([_plane_coords(axis, ga), _plane_coords(axis, gb)])
    if gz.letter != axis:
        raise ValueError("distinguished generator changed letter under conjugation")
    apos = _AXIS_POS[axis]
    if 2 * _vec(gz)[apos] + 1 < 0:
        gz = gz.inverse()
    if 2 * _vec(gz)[apos] + 1 != k:
        raise ValueError("axis exponent magnitude changed under conjugation")
    s0, t0 = _plane_coords(axis, gz)
    s, t = lat.reduce_coset(s0, t0)
    return G2Descriptor(axis, k, lat, s, t)


def _g6_extract(gx: Element, gy: Element, gz: Element) -> G6Descriptor:
    """Canonical 6-parameter descriptor from any letter-x/y/z generator triple."""
    if (gx.letter, gy.letter, gz.letter) != ("x", "y", "z"):
        raise ValueError("generator letters changed under conjugation")
    if gx.exponents()[0] < 0:
        gx = gx.inverse()
    if gy.exponents()[1] < 0:
        gy = gy.inverse()
    if gz.exponents()[2] < 0:
        gz = gz.inverse()
    m = gx.exponents()[0]
    k = gy.exponents()[1]
    l = gz.exponents()[2]
    B = gx.exponents()[1] % (2 * k)
    C = gx.exponents()[2] % (2 * l)
    A = gy.exponents()[0] % (2 * m)
    w = ((B - (1 - k)) // 2) % k
    u = ((C - (l - 1)) // 2) % l
    v = ((A - (m - 1)) // 2) % m
    return G6Descriptor(k, l, m, u, v, w)


def conjugate_descriptor(d: Descriptor, v: Element) -> Descriptor:
    """Descriptor of v * Delta * v**-1, renormalized to canonical parameters."""
    if isinstance(d, Z3Descriptor):
        return Z3Descriptor(transform3(d.lattice, SIGNS[v.letter]))
    if isinstance(d, G2Descriptor):
        ga, gb, gz = (g.conjugated_by(v) for g in generators(d))
        return _g2_extract(d.axis, d.k, ga, gb, gz)
    gx, gy, gz = (g.conjugated_by(v) for g in generators(d))
    return _g6_extract(gx, gy, gz)


_CONJUGATORS = (GEN_X, GEN_Y, GEN_Z)


def conjugacy_classes(ds: Iterable[Descriptor]) -> list[list[Descriptor]]:
    """Partition descriptors of one index into conjugation orbits.

    Orbit closure under conjugation by the three generators; this equals
    closure under the whole group because each generator acts with finite
    order on the (finitely many) parameters.
    """
    ds = sorted(set(ds), key=sort_key)
    if not ds:
        return []
    indices = {index_of(d) for d in ds}
    if len(indices) != 1:
        raise ValueError(f"descriptors of mixed index: {sorted(indices)}")
    seen: set[Descriptor] = set()
    classes = []
    for d in ds:
        if d in seen:
            continue
        orbit = {d}
        frontier = [d]
        while frontier:
            cur = frontier.pop()
            for g in _CONJUGATORS:
                nxt = conjugate_descriptor(cur, g)
                if nxt not in orbit:
                    orbit.add(nxt)
                    frontier.append(nxt)
        seen |= orbit
        classes.append(sorted(orbit))
    return classes


def is_normal(d: Descriptor) -> bool:
    return all(conjugate_descriptor(d, g) == d for g in _CONJUGATORS)


# ---------------------------------------------------------------------------
# Class counts without full orbit closure
# ---------------------------------------------------------------------------

class CrossCheckError(AssertionError):
    """Two supposedly-equal internal computations disagreed."""


def _g2_key_lattice(lat: Hnf2) -> Hnf2:
    """The lattice <H, (2,0), (0,2)> whose cosets label partial classes."""
    return hnf2_of(lat.columns() + ((2, 0), (0, 2)))


def _g2_axis_partial_split(n: int) -> tuple[int, int]:
    """Partial conjugacy classes of axis-x subgroups at index n.

    A partial class is an orbit under conjugation by Gamma_x only; it is
    labeled by (k, H, h mod <H, (2,0), (0,2)>).  Returns (fixed, swapped):
    the numbers of partial classes that are fixed / not fixed by the outer
    conjugation by y.  Whole-group classes then number fixed + swapped/2.
    """
    if n < 1 or n % 2:
        return 0, 0
    q = n // 2
    fixed = swapped = 0
    for k in _odd_divisors(q):
        for lat in hnf2_all(q // k):
            key = _g2_key_lattice(lat)
            if transform2(lat, (1, -1)) != lat:
                swapped += key.index
                continue
            for s in range(key.b):
                for t in range(key.a):
                    d = G2Descriptor("x", k, lat, *lat.reduce_coset(s, t))
                    d2 = conjugate_descriptor(d, GEN_Y)
                    if d2.lattice != lat:
                        raise CrossCheckError("plane lattice not y-stable after all")
                    if key.reduce_coset(d2.s, d2.t) == key.reduce_coset(s, t):
                        fixed += 1
                    else:
                        swapped += 1
    if swapped % 2:
        raise CrossCheckError("unpaired swapped partial classes")
    return fixed, swapped


def class_count(iso: str, n: int) -> int:
    """Conjugacy classes of index-n subgroups, computed constructively.

    Uses per-type structure instead of generic orbit closure so that the
    full range of the acceptance checks stays fast; agreement with
    conjugacy_classes and with count_c is asserted by the test suite.
    """
    if iso == "g1":
        ds = enumerate_z3(n)
        if not ds:
            return 0
        # Burnside over the Klein four-group acting by coordinate sign flips.
        total = len(ds)
        for letter in AXES:
            signs = SIGNS[letter]
            total += sum(1 for d in ds if transform3(d.lattice, signs) == d.lattice)
        if total % 4:
            raise CrossCheckError("Burnside sum not divisible by 4")
        return total // 4
    if iso == "g2":
        fixed, swapped = _g2_axis_partial_split(n)
        return 3 * (fixed + swapped // 2)
    if iso == "g6":
        if n < 1 or n % 2 == 0:
            return 0
        return sum(
            1
            for k in _odd_divisors(n)
            for l in _odd_divisors(n // k)
        )
    raise ValueError(f"unknown isomorphism type {iso!r}")


# ---------------------------------------------------------------------------
# Orbit-size partitions and sign-flip-invariant sublattice counts
# ---------------------------------------------------------------------------

class Z3OrbitSplit(NamedTuple):
    """Numbers of Z^3-type subgroups lying in classes of size 1, 2, 4."""

    size1: int
    size2: int
    size4: int


class PartialClassSplit(NamedTuple):
    """Axis-x partial classes fixed / swapped by the outer conjugation."""

    fixed: int
    swapped: int


def z3_normal_closed_form(n: int) -> int:
    """Normal Z^3-type subgroups of index n: d3(n/4) + 4 d3(n/8) + d3(n/16).

    Erratum note: the published closed form carries an extra 2 d3(n/32)
    term coming from two matrix families that are not in fact normal (their
    basis vector x^(2f) y^2 z^2 conjugates to x^(2f) y^-2 z^-2, which the
    lattice misses whenever the half-shift structure forces 4 | exponent
    gaps).  The form used here matches the sign-flip-invariance filter, the
    exact conjugation machinery, and a coset-table word test at every
    index; the first divergence of the published form is n = 32 (39 vs the
    actual 37).  See the test suite for the recorded comparison.
    """
    return (
        d3(Fraction(n, 4)) + 4 * d3(Fraction(n, 8)) + d3(Fraction(n, 16))
    )


def z3_orbit_split(n: int) -> Z3OrbitSplit:
    """Class-size partition of the Z^3-type subgroups, computed two ways."""
    sizes = {1: 0, 2: 0, 4: 0}
    for cls in conjugacy_classes(enumerate_z3(n)):
        if len(cls) not in sizes:
            raise CrossCheckError(f"impossible class size {len(cls)}")
        sizes[len(cls)] += len(cls)
    split = Z3OrbitSplit(sizes[1], sizes[2], sizes[4])

    m1 = z3_normal_closed_form(n)
    per_axis_fixed = sigma2(Fraction(n, 4)) + 3 * sigma2(Fraction(n, 8))
    m2 = 3 * per_axis_fixed - 3 * m1
    m4 = omega(Fraction(n, 4)) - m1 - m2
    if split != (m1, m2, m4):
        raise CrossCheckError(
            f"orbit split mismatch at n={n}: counted {split}, formulas {(m1, m2, m4)}"
        )
    return split


def g2_partial_split(n: int) -> PartialClassSplit:
    """Axis-x partial-class split, computed two ways and cross-checked."""
    fixed, swapped = _g2_axis_partial_split(n)
    k1 = (
        d3(Fraction(n, 2))
        - d3(Fraction(n, 4))
        - 3 * d3(Fraction(n, 8))
        + 5 * d3(Fraction(n, 16))
        - 2 * d3(Fraction(n, 32))
    )
    total = (
        sigma2(Fraction(n, 2)) + 2 * sigma2(Fraction(n, 4)) - 3 * sigma2(Fraction(n, 8))
    )
    if (fixed, swapped) != (k1, total - k1):
        raise CrossCheckError(
            f"partial split mismatch at n={n}: counted {(fixed, swapped)}, "
            f"formulas {(k1, total - k1)}"
        )
    return PartialClassSplit(fixed, swapped)


def flip_fixed_count_2d(n: int) -> int:
    """Index-n sublattices of Z^2 fixed by (u, v) -> (u, -v), dual-route."""
    counted = sum(1 for h in hnf2_all(n) if transform2(h, (1, -1)) == h)
    formula = sigma0(n) + sigma0(Fraction(n, 2))
    if counted != formula:
        raise CrossCheckError(f"2d flip count mismatch at n={n}: {counted} vs {formula}")
    return counted


def flip_fixed_count_3d(n: int) -> int:
    """Index-n sublattices of Z^3 fixed by (u, v, w) -> (u, v, -w), dual-route."""
    counted = sum(1 for h in hnf3_all(n) if transform3(h, (1, 1, -1)) == h)
    formula = sigma2(n) + 3 * sigma2(Fraction(n, 2))
    if counted != formula:
        raise CrossCheckError(f"3d flip count mismatch at n={n}: {counted} vs {formula}")
    return counted


def normal_counts(n: int) -> tuple[int, int, int]:
    """Normal index-n subgroups per type (z3, g2, g6), dual-route.

    Closed forms: the z3 count is z3_normal_closed_form (see its erratum
    note); the g2 count is 3 when n = 2 mod 4, 6 when n = 4 mod 8, else 0;
    the only normal g6-type subgroup is the whole group.  Each value is
    re-derived by filtering the enumeration through is_normal.
    """
    z3_formula = z3_normal_closed_form(n)
    if n % 4 == 2:
        g2_formula = 3
    elif n % 8 == 4:
        g2_formula = 6
    else:
        g2_formula = 0
    g6_formula = 1 if n == 1 else 0

    z3_counted = sum(1 for d in enumerate_z3(n) if is_normal(d))
    g2_counted = sum(1 for d in enumerate_g2(n) if is_normal(d))
    g6_counted = sum(1 for d in enumerate_g6(n) if is_normal(d))
    counted = (z3_counted, g2_counted, g6_counted)
    if counted != (z3_formula, g2_formula, g6_formula):
        raise CrossCheckError(
            f"normal count mismatch at n={n}: counted {counted}, "
            f"formulas {(z3_formula, g2_formula, g6_formula)}"
        )
    return counted


# ---------------------------------------------------------------------------
# Series audit
# ---------------------------------------------------------------------------

def count_arrays(N: int) -> dict[tuple[str, str], list[int]]:
    """Closed-form count values for all n <= N via sieved divisor lists.

    Same formulas as count_s / count_c, evaluated with precomputed divisor
    tables so series-length audits stay fast.
    """
    divs: list[list[int]] = [[] for _ in range(N + 1)]
    for d in range(1, N + 1):
        for mult in range(d, N + 1, d):
            divs[mult].append(d)
    sig1 = [0] + [sum(divs[n]) for n in range(1, N + 1)]
    sig0_ = [0] + [len(divs[n]) for n in range(1, N + 1)]
    sig2_ = [0] + [sum(sig1[d] for d in divs[n]) for n in range(1, N + 1)]
    dd3 = [0] + [sum(sig0_[d] for d in divs[n]) for n in range(1, N + 1)]
    om = [0] + [sum(d * sig1[d] for d in divs[n]) for n in range(1, N + 1)]

    def dy(arr: list[int], n: int, k: int) -> int:
        step = 1 << k
        return arr[n // step] if n % step == 0 else 0

    out: dict[tuple[str, str], list[int]] = {key: [] for key in arith.GF_TABLE}
    for n in range(1, N + 1):
        alt = dd3[n] - 3 * dy(dd3, n, 1) + 3 * dy(dd3, n, 2) - dy(dd3, n, 3)
        out["g1", "s"].append(dy(om, n, 2))
        out["g2", "s"].append(3 * dy(om, n, 1) - 3 * dy(om, n, 2))
        out["g6", "s"].append(n * alt)
        c1 = Fraction(dy(om, n, 2), 4) + Fraction(3 * dy(sig2_, n, 2), 4) + Fraction(
            9 * dy(sig2_, n, 3), 4
        )
        c2 = Fraction(3, 2) * (
            dy(sig2_, n, 1) + 2 * dy(sig2_, n, 2) - 3 * dy(sig2_, n, 3)
            + dy(dd3, n, 1) - dy(dd3, n, 2) - 3 * dy(dd3, n, 3)
            + 5 * dy(dd3, n, 4) - 2 * dy(dd3, n, 5)
        )
        for key, val in ((("g1", "c"), c1), (("g2", "c"), c2)):
            if val.denominator != 1:
                raise ArithmeticError(f"fractional class count for {key} at n={n}")
            out[key].append(int(val))
        out["g6", "c"].append(alt)
    return out


def _first_divergence(a: list[int], b: list[int]) -> int | None:
    for i, (u, v) in enumerate(zip(a, b)):
        if u != v:
            return i + 1
    return None


def series_report(N: int) -> dict:
    """Audit the tabulated generating functions against the count formulas.

    For each of the six (type, kind) rows: the tabulated coefficients, the
    closed-form count values, and a verdict (match, or the first divergent
    n).  The report also settles the two known anomalies: the (g2, s) row
    scaled by 3, and the row tabulated under a g1 label whose shape
    (1 - 2^(1-s))^3 zeta^3(s-1) actually generates the g6 subgroup counts.
    """
    formulas = count_arrays(N)
    gf = {key: list(arith.gf_coeffs(*key, N).coeffs) for key in arith.GF_TABLE}
    rows = []
    for key in (("g1", "s"), ("g2", "s"), ("g6", "s"), ("g1", "c"), ("g2", "c"), ("g6", "c")):
        div = _first_divergence(gf[key], formulas[key])
        row = {
            "type": key[0],
            "kind": key[1],
            "verdict": "match" if div is None else "mismatch",
            "first_divergent_n": div,
        }
        if key == ("g2", "s") and div is not None:
            rescaled = [3 * v for v in gf[key]]
            if _first_divergence(rescaled, formulas[key]) is None:
                row["note"] = "tabulated row times 3 matches the subgroup counts"
        rows.append(row)
    row3_vs_g1 = _first_divergence(gf["g6", "s"], formulas["g1", "s"])
    row3 = {
        "row": "(1 - 2^(1-s))^3 zeta(s-1)^3",
        "tabulated_label": "g1 s",
        "vs_g1_s": "match" if row3_vs_g1 is None else f"mismatch at n={row3_vs_g1}",
        "vs_g6_s": "match"
        if _first_divergence(gf["g6", "s"], formulas["g6", "s"]) is None
        else "mismatch",
    }
    return {"n_max": N, "rows": rows, "row3_label": row3}


# ---------------------------------------------------------------------------
# Serialization
# ---------------------------------------------------------------------------

def to_json_dict(d: Descriptor) -> dict:
    if isinstance(d, Z3Descriptor):
        lat = d.lattice
        return {"type": "z3", "c": lat.c, "e": lat.e, "f": lat.f,
                "b": lat.b, "d": lat.d, "a": lat.a}
    if isinstance(d, G2Descriptor):
        lat = d.lattice
        return {"type": "g2", "axis": d.axis, "k": d.k,
                "b": lat.b, "c": lat.c, "a": lat.a, "s": d.s, "t": d.t}
    return {"type": "g6", "k": d.k, "l": d.l, "m": d.m, "u": d.u, "v": d.v, "w": d.w}


def from_json_dict(obj: dict) -> Descriptor:
    tag = obj["type"]
    if tag == "z3":
        return Z3Descriptor(Hnf3(c=int(obj["c"]), e=int(obj["e"]), f=int(obj["f"]),
                                 b=int(obj["b"]), d=int(obj["d"]), a=int(obj["a"])))
    if tag == "g2":
        return G2Descriptor(obj["axis"], int(obj["k"]),
                            Hnf2(b=int(obj["b"]), c=int(obj["c"]), a=int(obj["a"])),
                            int(obj["s"]), int(obj["t"]))
    if tag == "g6":
        return G6Descriptor(int(obj["k"]), int(obj["l"]), int(obj["m"]),
                            int(obj["u"]), int(obj["v"]), int(obj["w"]))
    raise ValueError(f"unknown descriptor type {tag!r}")
