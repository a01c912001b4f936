"""Generic polynomials, Moebius changes of parameter and inverse specialization."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from math import gcd

from .errors import (
    BranchPoint,
    CyclotomicObstruction,
    Degenerate,
    InadmissibleGroup,
    Inseparable,
    Unsupported,
)
from .exact.bipoly import BiPoly
from .exact.cyclo import has_cos_of_root_of_unity, has_root_of_unity
from .exact.factor import factor_over, roots_in_field
from .exact.field import QQ, NumberField, coerce
from .exact.poly import UniPoly
from .exact.roots import INFINITY, AlgPoint, rational_point
from .groups import GroupId

# ---------------------------------------------------------------------------
# generic polynomials


def _kummer(n: int) -> BiPoly:
    return BiPoly({(0, n): 1, (1, 0): -1})


SHANKS = BiPoly({(0, 3): 1, (1, 2): -1, (1, 1): 1, (0, 1): -3, (0, 0): 1})
S3_FAMILY = BiPoly({(0, 3): 1, (1, 1): 1, (1, 0): 1})


def construct_generic(g: GroupId, k: NumberField = QQ) -> BiPoly:
    """A generic polynomial for G over k, for the families implemented here.

    Even cyclic groups get the Kummer family Y^n - T (needs zeta_n in k),
    C3 the Shanks cubic and S3 the family Y^3 + T Y + T.  Odd cyclic and
    odd dihedral groups of larger order are admissible when 2cos(2 pi/n) is
    in k, but their families are not implemented.
    """
    n = g.n
    if g.is_cyclic():
        if n == 1:
            raise InadmissibleGroup("the trivial group has no generic cover of positive degree")
        if n % 2 == 0:
            if not has_root_of_unity(k, n):
                raise CyclotomicObstruction(f"zeta_{n} is not in {k.describe()}")
            return _kummer(n)
        if n == 3:
            return SHANKS
        if not has_cos_of_root_of_unity(k, n):
            raise CyclotomicObstruction(f"2cos(2pi/{n}) is not in {k.describe()}")
        raise Unsupported(f"no generic family implemented for C{n} (Gaussian period families)")
    if g.is_dihedral():
        if n % 2 == 0:
            raise InadmissibleGroup(f"dihedral groups of order {2 * n} with n even are never generic")
        if n == 3:
            return S3_FAMILY
        if not has_cos_of_root_of_unity(k, n):
            raise CyclotomicObstruction(f"2cos(2pi/{n}) is not in {k.describe()}")
        raise Unsupported(f"no generic family implemented for D{n} (Hashimoto-Miyake families)")
    raise InadmissibleGroup(f"{g.name} is neither cyclic nor dihedral of odd degree")


# ---------------------------------------------------------------------------
# Moebius maps


@dataclass(frozen=True)
class MoebiusMap:
    """T -> (aT + b)/(cT + d), stored with the first nonzero entry equal to 1."""

    a: object
    b: object
    c: object
    d: object

    @classmethod
    def make(cls, a, b, c, d) -> "MoebiusMap":
        entries = [a, b, c, d]
        entries = [Fraction(x) if isinstance(x, int) else x for x in entries]
        if entries[0] * entries[3] - entries[1] * entries[2] == 0:
            raise Degenerate("ad - bc = 0")
        lead = next(x for x in entries if x != 0)
        return cls(*(x / lead for x in entries))

    @classmethod
    def identity(cls) -> "MoebiusMap":
        return cls.make(1, 0, 0, 1)

    def det(self):
        return self.a * self.d - self.b * self.c

    def __matmul__(self, other: "MoebiusMap") -> "MoebiusMap":
        """Matrix product; as maps of P^1 this is self o other."""
        return MoebiusMap.make(self.a * other.a + self.b * other.c, self.a * other.b + self.b * other.d,
                               self.c * other.a + self.d * other.c, self.c * other.b + self.d * other.d)

    def inverse(self) -> "MoebiusMap":
        return MoebiusMap.make(self.d, -self.b, -self.c, self.a)

    def __call__(self, t):
        """Image of a point; ``None`` stands for infinity."""
        if t is None:
            return None if self.c == 0 else self.a / self.c
        num = self.a * t + self.b
        den = self.c * t + self.d
        if den == 0:
            return None
        return num / den

    def height(self) -> int:
        h = 1
        for x in (self.a, self.b, self.c, self.d):
            x = Fraction(x) if not hasattr(x, "c") else None
            if x is None:
                continue
            h = max(h, abs(x.numerator), x.denominator)
        return h

    def entries(self):
        return (self.a, self.b, self.c, self.d)

    def __str__(self):
        from .exact.render import render_uni

        # display with a monic denominator
        s = self.c if self.c != 0 else self.d
        num = render_uni(UniPoly([self.b / s, self.a / s]))
        den = render_uni(UniPoly([self.d / s, self.c / s]))
        if den == "1":
            return num

        def wrap(t):
            return t if all(ch not in t for ch in "+ ") else f"({t})"
        return f"{wrap(num)}/{wrap(den)}"


def moebius_apply(p: BiPoly, m: MoebiusMap) -> BiPoly:
    """Substitute T -> m(T), clear denominators and renormalize monic in Y.

    With m = (aT+b)/(cT+d) the result is (cT+d)^(n w) P(m(T), Y/(cT+d)^w)
    for the smallest w making it a polynomial.
    """
    if m.det() == 0:
        raise Degenerate("ad - bc = 0")
    n = p.deg_y()
    L = UniPoly([m.b, m.a])
    M = UniPoly([m.d, m.c])
    w = 0
    if M.degree() > 0:
        for (i, j) in p.coeffs:
            if j < n:
                w = max(w, -(-i // (n - j)))
    cs = p.y_coeffs()
    out = []
    for j, a_j in enumerate(cs):
        e = w * (n - j)
        acc = UniPoly([])
        for i, c in enumerate(a_j.coeffs):
            if c == 0:
                continue
            if M.degree() > 0:
                acc = acc + L ** i * M ** (e - i) * c
            else:
                acc = acc + L ** i * c * Fraction(M[0]) ** (-i)
        out.append(acc)
    return BiPoly.from_y_coeffs(out)


def _map_through(p1, p2, p3, q1, q2, q3):
    """The Moebius map sending p_i to q_i (None is infinity)."""
    def to_inf(x, y, z):
        # cross-ratio map sending x -> 0, y -> infinity, z -> 1
        if x is None:
            return MoebiusMap.make(0, z - y, 1, -y)
        if y is None:
            return MoebiusMap.make(1, -x, 0, z - x)
        if z is None:
            return MoebiusMap.make(1, -x, 1, -y)
        return MoebiusMap.make(z - y, -x * (z - y), z - x, -y * (z - x))

    A = to_inf(p1, p2, p3)
    B = to_inf(q1, q2, q3)
    return B.inverse() @ A


def _canonical_key(m: MoebiusMap, fixed_candidates=()):
    ent = m.entries()
    fixed = sum(1 for x in fixed_candidates if m(x) == x)
    return (-fixed, m.height(), sum(1 for x in ent if x != 0),
            tuple((abs(Fraction(x)), Fraction(x) < 0) for x in ent))


_EXTRA = [None, Fraction(0), Fraction(1), Fraction(-1), Fraction(2), Fraction(-2), Fraction(1, 2)]


def _maps_for_pairs(pairs):
    """All maps from the small completion family respecting the pairs."""
    used_src = {x for x, _ in pairs}
    used_dst = {y for _, y in pairs}
    need = 3 - len(pairs)
    src = [z for z in _EXTRA if z not in used_src]
    dst = [z for z in _EXTRA if z not in used_dst]
    out = []
    if need == 0:
        return [_map_through(*(x for x, _ in pairs), *(y for _, y in pairs))]
    for zs in permutations(src, need):
        for ws in permutations(dst, need):
            full = list(pairs) + list(zip(zs, ws))
            try:
                out.append(_map_through(*(x for x, _ in full), *(y for _, y in full)))
            except Degenerate:
                continue
    return out


def _rational_value(pt: AlgPoint):
    return None if pt.is_infinity else pt.value()


def _orbit_split(points, k: NumberField):
    """Split a point set into k-rational values and quadratic orbits."""
    if not k.is_q:
        for pt in points:
            if not pt.is_infinity and pt.degree > 1 and len(factor_over(pt.min_poly, k)[1]) > 1:
                raise Unsupported("orbits that split over a proper extension of Q are not supported")
    rational, orbits = [], {}
    for pt in points:
        if pt.is_infinity or pt.degree == 1:
            rational.append(_rational_value(pt))
        elif pt.degree == 2:
            orbits.setdefault(pt.min_poly, []).append(pt)
        else:
            raise Unsupported("orbits of degree >= 3 are not supported")
    for poly, pts in orbits.items():
        if len(pts) != 2:
            raise ValueError("point sets must be closed under conjugation")
    return rational, list(orbits)


def _moebius_image_quadratic(q: UniPoly, m: MoebiusMap) -> UniPoly:
    """Monic quadratic whose roots are the images under m of the roots of q."""
    inv = m.inverse()
    # roots of q(inv(t)): clear denominators of q((a't+b')/(c't+d'))
    L = UniPoly([inv.b, inv.a])
    M = UniPoly([inv.d, inv.c])
    out = UniPoly([])
    for i, c in enumerate(q.coeffs):
        out = out + L ** i * M ** (2 - i) * c
    return out.monic()


def _quad_disc(q: UniPoly):
    return q[1] * q[1] - q[0] * 4 * q[2]


def _affine_between(q1: UniPoly, q2: UniPoly, k: NumberField):
    """Affine maps over k sending the roots of q1 onto the roots of q2."""
    q1, q2 = q1.monic(), q2.monic()
    ratio = _quad_disc(q2) / _quad_disc(q1)
    alphas = roots_in_field(UniPoly([-coerce(k, ratio), 0, 1], "x"), k)
    out = []
    for alpha in alphas:
        beta = -q2[1] / 2 - alpha * (-q1[1] / 2)
        out.append(MoebiusMap.make(alpha, beta, 0, 1))
    return out


def moebius_between(s1, s2, k: NumberField = QQ) -> MoebiusMap | None:
    """A Moebius map over k carrying the point set s1 onto s2, or None.

    Rational points and quadratic orbits are supported.  For rational sets
    the candidates are the maps through the prescribed pairs completed by
    small auxiliary points; the canonical answer has minimal height, then
    fewest nonzero entries, then positive entries first.  Three rational
    points determine the map uniquely.
    """
    s1, s2 = list(s1), list(s2)
    if len(s1) != len(s2) or len(s1) > 3:
        return None
    r1, o1 = _orbit_split(s1, k)
    r2, o2 = _orbit_split(s2, k)
    if len(r1) != len(r2) or len(o1) != len(o2):
        return None
    candidates = []
    if not o1:
        for perm in permutations(r2):
            candidates.extend(_maps_for_pairs(list(zip(r1, perm))))
    else:
        q1, q2 = o1[0], o2[0]
        if not r1:
            candidates = _affine_between(q1, q2, k)
            if not candidates:
                # a non-affine map would still identify the two quadratic fields
                return None
        else:
            x, y = r1[0], r2[0]
            N1 = MoebiusMap.identity() if x is None else MoebiusMap.make(0, 1, 1, -x)
            N2 = MoebiusMap.identity() if y is None else MoebiusMap.make(0, 1, 1, -y)
            for A in _affine_between(_moebius_image_quadratic(q1, N1), _moebius_image_quadratic(q2, N2), k):
                candidates.append(N2.inverse() @ A @ N1)
    good = [m for m in candidates if _maps_onto(m, s1, s2)]
    if not good:
        return None
    common = [x for x in r1 if x in r2]
    return min(good, key=lambda m: _canonical_key(m, common))


def _maps_onto(m: MoebiusMap, s1, s2) -> bool:
    """Check m(s1) = s2 exactly, orbit by orbit."""
    r1 = sorted((_rational_value(p) for p in s1 if p.is_infinity or p.degree == 1), key=_pt_key)
    r2 = sorted((_rational_value(p) for p in s2 if p.is_infinity or p.degree == 1), key=_pt_key)
    if sorted((m(x) for x in r1), key=_pt_key) != r2:
        return False
    q1 = {p.min_poly for p in s1 if not p.is_infinity and p.degree == 2}
    q2 = {p.min_poly for p in s2 if not p.is_infinity and p.degree == 2}
    return {_moebius_image_quadratic(q, m) for q in q1} == {q.monic() for q in q2}


def _pt_key(x):
    return (1, 0) if x is None else (0, x)


def point_set(values) -> list[AlgPoint]:
    """Convenience: AlgPoints from rationals (None for infinity) and quadratics."""
    from .exact.roots import points_of

    out = []
    for v in values:
        if v is None:
            out.append(INFINITY)
        elif isinstance(v, UniPoly):
            out.extend(points_of(v))
        else:
            out.append(rational_point(v))
    return out


# ---------------------------------------------------------------------------
# inverse specialization


@dataclass(frozen=True)
class TargetExtension:
    defining_poly: UniPoly
    expected_group: GroupId | None = None


def height_order(bound: int):
    """Rationals a/b with max(|a|, b) <= bound in enumeration order.

    Ordered by height, then denominator, then |numerator|, positive first.
    """
    yield Fraction(0)
    for h in range(1, bound + 1):
        batch = []
        for b in range(1, h + 1):
            for a in range(0, h + 1):
                if max(a, b) != h or gcd(a, b) != 1 or a == 0:
                    continue
                batch.append((b, a))
        for b, a in sorted(batch):
            yield Fraction(a, b)
            yield Fraction(-a, b)


def _same_field(L1: NumberField, L2: NumberField) -> bool:
    if L1.degree != L2.degree:
        return False
    if L1.degree == 1:
        return True
    m1 = L1.minpoly.map_coeffs(lambda v: coerce(L2, v))
    m2 = L2.minpoly.map_coeffs(lambda v: coerce(L1, v))
    return bool(roots_in_field(m1, L2)) and bool(roots_in_field(m2, L1))


def _split_signature(f: UniPoly, k: NumberField, count: int = 30):
    """Which small primes split f completely; equal Galois closures agree here."""
    from .sampling import _mod_p_type, _primes_for

    sig = {}
    for q in _primes_for(k):
        if len(sig) >= count or q > 2000:
            break
        t = _mod_p_type(f, q)
        if t is not None:
            sig[q] = all(x == 1 for x in t)
    return sig


def _compatible(s1: dict, s2: dict) -> bool:
    return all(s1[q] == s2[q] for q in s1.keys() & s2.keys())


def solve_parameter_search(p: BiPoly, target: TargetExtension, k: NumberField = QQ,
                           height_bound: int = 10):
    """Minimal-height t0 with F_t0 isomorphic to the target, and the number checked."""
    from .galois import check_cover_input, group_of_specialization, polynomial_group, splitting_field

    check_cover_input(p, k)
    f = target.defining_poly.monic()
    G_target = target.expected_group or polynomial_group(f, k)
    L_target, deg_target = splitting_field(f, k)
    sig = _split_signature(f, k)
    checked = 0
    for t0 in height_order(height_bound):
        checked += 1
        try:
            G = group_of_specialization(p, t0, k)
        except (BranchPoint, Inseparable):
            continue
        if G != G_target:
            continue
        special = p.subs_t(t0)
        if not _compatible(sig, _split_signature(special, k)):
            continue
        L, deg = splitting_field(special, k)
        if deg == deg_target and _same_field(L, L_target):
            return t0, checked
    return None, checked


def solve_parameter(p: BiPoly, target: TargetExtension, k: NumberField = QQ,
                    height_bound: int = 10) -> Fraction | None:
    """Minimal-height t0 such that P(t0, Y) has the target's splitting field."""
    return solve_parameter_search(p, target, k, height_bound)[0]
