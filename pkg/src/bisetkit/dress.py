"""The shifted Burnside functor RB_C: triple subgroups and their composition.

Elements of RB_C(G x K) are combinations of classes of subgroups of G x K x C.
Composition carries a diagonal action of C and obeys a three-set Mackey
formula: the composite of (GxLxC)/E and (LxKxC)/D decomposes over double
cosets of p23(E) \\ (L x C) / p13(D) with stabilizers E * shifted D, where

    E * D = {(g, k, c) : exists l with (g, l, c) in E and (l, k, c) in D}.

The module also hosts the factorization machinery: which classes factor
through strictly smaller middle groups, the kernel-shape pruning that powers
it, and the quaternion/dihedral counterexample for |C| = 4.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from . import catalog as _catalog
from .errors import (
    FactorMismatch,
    FoundBridge,
    NotCentral,
    NotAutomorphism,
    OrderBound,
    PreconditionViolated,
    SearchBound,
)
from .groups import (
    FiniteGroup,
    GroupHom,
    Subgroup,
    all_homs,
    all_isomorphisms,
    canonical_subgroup_rep,
    center,
    closure,
    double_cosets,
    generating_sequence,
    is_isomorphic,
    is_normal,
    is_subgroup_members,
    left_cosets,
    make_group,
    product_group,
    quotient_group,
    sub_as_group,
    subgroup,
    subgroup_classes,
    subgroups,
)

ORACLE_POINT_BOUND = 1 << 20
GENERAL_SCAN_BOUND = 128


@dataclass(frozen=True)
class TripleSubgroup:
    """A subgroup of G x K x C with its projections and kernels on demand."""

    g: FiniteGroup
    k: FiniteGroup
    c: FiniteGroup
    members: tuple[int, ...]

    @property
    def triple(self) -> FiniteGroup:
        return product_group(self.g, self.k, self.c)

    @property
    def order(self) -> int:
        return len(self.members)

    def _decoded(self) -> list[tuple[int, int, int]]:
        p = self.triple
        return [p.decode(m) for m in self.members]

    def proj(self, i: int) -> tuple[int, ...]:
        return tuple(sorted({t[i] for t in self._decoded()}))

    def proj_pair(self, i: int, j: int) -> tuple[int, ...]:
        factors = (self.g, self.k, self.c)
        pij = product_group(factors[i], factors[j])
        return tuple(sorted({pij.encode((t[i], t[j])) for t in self._decoded()}))

    def kern(self, i: int) -> tuple[int, ...]:
        others = [j for j in range(3) if j != i]
        return tuple(sorted({t[i] for t in self._decoded()
                             if all(t[j] == 0 for j in others)}))

    def kern_pair(self, i: int, j: int) -> tuple[int, ...]:
        other = next(a for a in range(3) if a not in (i, j))
        factors = (self.g, self.k, self.c)
        pij = product_group(factors[i], factors[j])
        return tuple(sorted({pij.encode((t[i], t[j])) for t in self._decoded()
                             if t[other] == 0}))

    def canonical_rep(self) -> tuple[int, ...]:
        return canonical_subgroup_rep(self.triple, self.members)

    def __repr__(self) -> str:
        return (f"TripleSubgroup(({self.g.label},{self.k.label},{self.c.label}),"
                f" order {self.order})")


def triple_subgroup(g: FiniteGroup, k: FiniteGroup, c: FiniteGroup,
                    members: Sequence[int]) -> TripleSubgroup:
    p = product_group(g, k, c)
    ms = tuple(sorted(set(members)))
    assert is_subgroup_members(p, ms)
    return TripleSubgroup(g, k, c, ms)


def triple_classes(g: FiniteGroup, k: FiniteGroup, c: FiniteGroup) -> list[TripleSubgroup]:
    p = product_group(g, k, c)
    return [TripleSubgroup(g, k, c, cls.representative.members)
            for cls in subgroup_classes(p)]


@dataclass
class DressElement:
    """Sparse rational combination of triple subgroup classes for fixed (G, K, C)."""

    g: FiniteGroup
    k: FiniteGroup
    c: FiniteGroup
    coeffs: dict[tuple[int, ...], Fraction]

    def __eq__(self, other) -> bool:
        return (isinstance(other, DressElement) and self.g is other.g
                and self.k is other.k and self.c is other.c
                and self.coeffs == other.coeffs)

    def support(self) -> list[tuple[int, ...]]:
        return sorted(self.coeffs)

    def __repr__(self) -> str:
        terms = ", ".join(f"{v}*{list(kk)}" for kk, v in sorted(self.coeffs.items()))
        return f"RBC({self.g.label},{self.k.label};{self.c.label})[{terms}]"


def dress_identity(g: FiniteGroup, c: FiniteGroup) -> DressElement:
    """The class of Delta(G) x C, the identity of RB_C(G x G)."""
    p = product_group(g, g, c)
    members = tuple(sorted(p.encode((a, a, cc))
                           for a in range(g.order) for cc in range(c.order)))
    rep = canonical_subgroup_rep(p, members)
    return DressElement(g, g, c, {rep: Fraction(1)})


# ---------------------------------------------------------------------------
# Star product and Mackey composition
# ---------------------------------------------------------------------------

def star_triple(e: TripleSubgroup, d: TripleSubgroup) -> TripleSubgroup:
    """E * D over a shared middle factor and shared C; verified to be a subgroup."""
    if e.k is not d.g or e.c is not d.c:
        raise FactorMismatch("star_triple: factors do not chain")
    members = _star_members(e.g, e.k, d.k, e.c, e.members, d.members)
    out = TripleSubgroup(e.g, d.k, e.c, members)
    assert is_subgroup_members(out.triple, members), "star product not a subgroup"
    return out


def _star_members(g: FiniteGroup, l: FiniteGroup, k: FiniteGroup, c: FiniteGroup,
                  e_members: Sequence[int], d_members: Sequence[int]) -> tuple[int, ...]:
    p_glc = product_group(g, l, c)
    p_lkc = product_group(l, k, c)
    p_gkc = product_group(g, k, c)
    by_lc: dict[tuple[int, int], list[int]] = {}
    for m in d_members:
        ll, kk, cc = p_lkc.decode(m)
        by_lc.setdefault((ll, cc), []).append(kk)
    out = set()
    for m in e_members:
        gg, ll, cc = p_glc.decode(m)
        for kk in by_lc.get((ll, cc), ()):
            out.add(p_gkc.encode((gg, kk, cc)))
    return tuple(sorted(out))


def dress_compose_members(g: FiniteGroup, l: FiniteGroup, k: FiniteGroup,
                          c: FiniteGroup, e_members: Sequence[int],
                          d_members: Sequence[int]) -> dict[tuple[int, ...], Fraction]:
    """Transitive three-set Mackey rule; returns class rep -> multiplicity."""
    p_lkc = product_group(l, k, c)
    p_gkc = product_group(g, k, c)
    p_lc = product_group(l, c)
    e_triple = TripleSubgroup(g, l, c, tuple(e_members))
    d_triple = TripleSubgroup(l, k, c, tuple(d_members))
    p23e = subgroup(p_lc, e_triple.proj_pair(1, 2), check=False)
    p13d = subgroup(p_lc, d_triple.proj_pair(0, 2), check=False)
    out: dict[tuple[int, ...], Fraction] = {}
    t, inv = p_lkc.table, p_lkc.inv
    for rep in double_cosets(p_lc, p23e, p13d):
        l0, c0 = p_lc.decode(rep)
        shift = p_lkc.encode((l0, 0, c0))
        shift_inv = inv[shift]
        conj_d = tuple(sorted(t[t[shift][m]][shift_inv] for m in d_members))
        star = _star_members(g, l, k, c, e_members, conj_d)
        crep = canonical_subgroup_rep(p_gkc, star)
        out[crep] = out.get(crep, Fraction(0)) + 1
    return out


def dress_compose(x: DressElement, y: DressElement) -> DressElement:
    """Bilinear extension of the three-set Mackey formula."""
    if x.k is not y.g or x.c is not y.c:
        raise FactorMismatch("dress_compose: factors do not chain")
    g, l, k, c = x.g, x.k, y.k, x.c
    out: dict[tuple[int, ...], Fraction] = {}
    for erep, a in x.coeffs.items():
        for drep, b in y.coeffs.items():
            piece = dress_compose_members(g, l, k, c, erep, drep)
            ab = a * b
            for crep, coeff in piece.items():
                nv = out.get(crep, Fraction(0)) + ab * coeff
                if nv:
                    out[crep] = nv
                else:
                    out.pop(crep, None)
    return DressElement(g, k, c, out)


class _UnionFind:
    __slots__ = ("parent",)

    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra


def dress_oracle(e: TripleSubgroup, d: TripleSubgroup,
                 point_bound: int = ORACLE_POINT_BOUND) -> DressElement:
    """Set-level composite with the diagonal C action, decomposed by orbits.

    Builds the cosets, quotients by the middle L-orbit relation, then splits
    the G x K x C action (g,k,c)[x, y] = [(g,1,c)x, (1,k,c)y] into transitive
    pieces by computing stabilizers directly.
    """
    if e.k is not d.g or e.c is not d.c:
        raise FactorMismatch("dress_oracle: factors do not chain")
    g, l, k, c = e.g, e.k, d.k, e.c
    p_glc = product_group(g, l, c)
    p_lkc = product_group(l, k, c)
    p_gkc = product_group(g, k, c)

    xs = left_cosets(p_glc, e.members)
    xs.sort(key=lambda cs: cs[0])
    ys = left_cosets(p_lkc, d.members)
    ys.sort(key=lambda cs: cs[0])
    nx, ny = len(xs), len(ys)
    if nx * ny > point_bound:
        raise OrderBound("dress oracle point bound exceeded")
    x_of = [0] * p_glc.order
    for i, cs in enumerate(xs):
        for m in cs:
            x_of[m] = i
    y_of = [0] * p_lkc.order
    for i, cs in enumerate(ys):
        for m in cs:
            y_of[m] = i

    def xact(trip: tuple[int, int, int]) -> list[int]:
        s = p_glc.encode(trip)
        return [x_of[p_glc.table[s][cs[0]]] for cs in xs]

    def yact(trip: tuple[int, int, int]) -> list[int]:
        s = p_lkc.encode(trip)
        return [y_of[p_lkc.table[s][cs[0]]] for cs in ys]

    uf = _UnionFind(nx * ny)
    for m in generating_sequence(l):
        xrow = xact((0, l.inv[m], 0))
        yrow = yact((l.inv[m], 0, 0))
        for i in range(nx):
            base, nbase = i * ny, xrow[i] * ny
            for j in range(ny):
                uf.union(base + j, nbase + yrow[j])

    class_of: dict[int, int] = {}
    reps: list[int] = []
    for pt in range(nx * ny):
        r = uf.find(pt)
        if r not in class_of:
            class_of[r] = len(reps)
            reps.append(r)

    # action tables for single-factor moves
    gx = {gg: xact((gg, 0, 0)) for gg in range(g.order)}
    cx = {cc: xact((0, 0, cc)) for cc in range(c.order)}
    ky = {kk: yact((0, kk, 0)) for kk in range(k.order)}
    cy = {cc: yact((0, 0, cc)) for cc in range(c.order)}

    def act(gg: int, kk: int, cc: int, cls_id: int) -> int:
        pt = reps[cls_id]
        i, j = divmod(pt, ny)
        i2 = gx[gg][cx[cc][i]]
        j2 = ky[kk][cy[cc][j]]
        return class_of[uf.find(i2 * ny + j2)]

    ncls = len(reps)
    seen = [False] * ncls
    out: dict[tuple[int, ...], Fraction] = {}
    gens = ([(gg, 0, 0) for gg in generating_sequence(g)]
            + [(0, kk, 0) for kk in generating_sequence(k)]
            + [(0, 0, cc) for cc in generating_sequence(c)])
    for c0 in range(ncls):
        if seen[c0]:
            continue
        orbit = {c0}
        frontier = [c0]
        while frontier:
            cur = frontier.pop()
            for gg, kk, cc in gens:
                nxt = act(gg, kk, cc, cur)
                if nxt not in orbit:
                    orbit.add(nxt)
                    frontier.append(nxt)
        for cid in orbit:
            seen[cid] = True
        stab = []
        for gg in range(g.order):
            for kk in range(k.order):
                for cc in range(c.order):
                    if act(gg, kk, cc, c0) == c0:
                        stab.append(p_gkc.encode((gg, kk, cc)))
        assert len(stab) * len(orbit) == p_gkc.order
        rep = canonical_subgroup_rep(p_gkc, tuple(sorted(stab)))
        out[rep] = out.get(rep, Fraction(0)) + 1
    return DressElement(g, k, c, out)


# ---------------------------------------------------------------------------
# Twisted diagonals D_{theta, zeta}
# ---------------------------------------------------------------------------

def d_theta_zeta(g: FiniteGroup, c: FiniteGroup, theta: GroupHom,
                 zeta: GroupHom) -> TripleSubgroup:
    """{(theta(x) zeta(cc), x, cc)}: full first and second projections,
    trivial first and second kernels, order |G| |C|."""
    if not (theta.domain is g and theta.codomain is g and theta.is_bijective()
            and theta.is_hom()):
        raise NotAutomorphism("theta must be an automorphism of G")
    if not (zeta.domain is c and zeta.codomain is g and zeta.is_hom()):
        raise NotCentral("zeta must map C into G")
    zg = set(center(g))
    if not all(zeta(x) in zg for x in range(c.order)):
        raise NotCentral("zeta must land in the center of G")
    p = product_group(g, g, c)
    members = tuple(sorted(
        p.encode((g.mul(theta(x), zeta(cc)), x, cc))
        for x in range(g.order) for cc in range(c.order)))
    out = TripleSubgroup(g, g, c, members)
    assert out.order == g.order * c.order
    assert out.proj(0) == tuple(range(g.order))
    assert out.proj(1) == tuple(range(g.order))
    assert out.kern(0) == (0,) and out.kern(1) == (0,)
    return out


def trivial_hom(c: FiniteGroup, g: FiniteGroup) -> GroupHom:
    return GroupHom(c, g, (0,) * c.order)


# ---------------------------------------------------------------------------
# Kernel-shape analysis and decomposability
# ---------------------------------------------------------------------------

def _graph_form(d: TripleSubgroup) -> bool:
    return (d.proj(0) == tuple(range(d.g.order))
            and d.proj(1) == tuple(range(d.k.order))
            and d.kern(0) == (0,) and d.kern(1) == (0,))


def p3_injective_subgroups(d: TripleSubgroup) -> list[tuple[int, ...]]:
    """Subgroups N <= D whose members have pairwise distinct third coordinates."""
    p = d.triple
    d_sub = subgroup(p, d.members, check=False)
    d_grp, incl = sub_as_group(d_sub)
    out = []
    for s in subgroups(d_grp):
        members = tuple(incl(i) for i in s.members)
        thirds = {p.decode(m)[2] for m in members}
        if len(thirds) == len(members):
            out.append(tuple(sorted(members)))
    return out


def admissible_kernel_check(d: TripleSubgroup, max_index_bound: int) -> list[tuple[int, ...]]:
    """Candidate kernels N of the factorization morphism: subgroups of D that
    are injective on the third coordinate, normal in D, with [D:N] within the
    bound. Requires D in graph form (full p1, p2 and trivial k1, k2)."""
    if not _graph_form(d):
        raise PreconditionViolated("admissible_kernel_check needs graph form")
    p = d.triple
    out = []
    for members in p3_injective_subgroups(d):
        if d.order // len(members) > max_index_bound:
            continue
        if _normal_within(p, d.members, members):
            out.append(members)
    return sorted(out, key=lambda m: (len(m), m))


def _normal_within(p: FiniteGroup, d_members: Sequence[int],
                   n_members: Sequence[int]) -> bool:
    nset = set(n_members)
    t, inv = p.table, p.inv
    for x in d_members:
        xi = inv[x]
        for m in n_members:
            if t[t[x][m]][xi] not in nset:
                return False
    return True


def subgroups_with_full_first(x_grp: FiniteGroup, y_grp: FiniteGroup) -> list[tuple[int, ...]]:
    """All subgroups A <= X x Y with p1(A) = X, via the section correspondence:
    A = {(x, s) : iso(x N) = proj(s)} for N normal in X, S <= Y, S0 normal in S
    and an isomorphism X/N -> S/S0. Members are encoded in product(X, Y)."""
    p = product_group(x_grp, y_grp)
    out = set()
    normals = [s for s in subgroups(x_grp) if is_normal(x_grp, s.members)]
    for n1 in normals:
        q1, proj1 = quotient_group(x_grp, n1)
        for s in subgroups(y_grp):
            if s.order % q1.order:
                continue
            s_grp, s_incl = sub_as_group(s)
            for s0 in subgroups(s_grp):
                if s.order // s0.order != q1.order:
                    continue
                if not is_normal(s_grp, s0.members):
                    continue
                q2, proj2 = quotient_group(s_grp, s0)
                for iso in all_isomorphisms(q1, q2):
                    members = []
                    for x in range(x_grp.order):
                        target = iso(proj1(x))
                        for i in range(s_grp.order):
                            if proj2(i) == target:
                                members.append(p.encode((x, s_incl(i))))
                    out.add(tuple(sorted(members)))
    return sorted(out, key=lambda m: (len(m), m))


def _a_side_classes(g: FiniteGroup, k: FiniteGroup, c: FiniteGroup,
                    p1_required: tuple[int, ...]) -> list[tuple[int, ...]]:
    """Class reps of subgroups A <= G x K x C with p1(A) containing the target."""
    p_gkc = product_group(g, k, c)
    p_kc = product_group(k, c)
    if len(p1_required) == g.order:
        reps = set()
        for members in subgroups_with_full_first(g, p_kc):
            p_gy = product_group(g, p_kc)
            trip = []
            for m in members:
                x, s = p_gy.decode(m)
                kk, cc = p_kc.decode(s)
                trip.append(p_gkc.encode((x, kk, cc)))
            reps.add(canonical_subgroup_rep(p_gkc, tuple(sorted(trip))))
        return sorted(reps)
    if p_gkc.order > GENERAL_SCAN_BOUND:
        raise SearchBound(
            f"unconstrained scan of {p_gkc.label} (order {p_gkc.order}) refused")
    req = len(p1_required)
    out = []
    for cls in subgroup_classes(p_gkc):
        t = TripleSubgroup(g, k, c, cls.representative.members)
        if len(t.proj(0)) >= req:
            out.append(cls.representative.members)
    return out


def _b_side_classes(k: FiniteGroup, h: FiniteGroup, c: FiniteGroup,
                    p2_required: tuple[int, ...]) -> list[tuple[int, ...]]:
    """Class reps of subgroups B <= K x H x C with p2(B) containing the target."""
    p_khc = product_group(k, h, c)
    p_kc = product_group(k, c)
    if len(p2_required) == h.order:
        reps = set()
        for members in subgroups_with_full_first(h, p_kc):
            p_hy = product_group(h, p_kc)
            trip = []
            for m in members:
                x, s = p_hy.decode(m)
                kk, cc = p_kc.decode(s)
                trip.append(p_khc.encode((kk, x, cc)))
            reps.add(canonical_subgroup_rep(p_khc, tuple(sorted(trip))))
        return sorted(reps)
    if p_khc.order > GENERAL_SCAN_BOUND:
        raise SearchBound(
            f"unconstrained scan of {p_khc.label} (order {p_khc.order}) refused")
    req = len(p2_required)
    out = []
    for cls in subgroup_classes(p_khc):
        t = TripleSubgroup(k, h, c, cls.representative.members)
        if len(t.proj(1)) >= req:
            out.append(cls.representative.members)
    return out


def is_star_decomposable(d: TripleSubgroup, order_bound: int,
                         catalog_groups=None) -> Optional[dict]:
    """Search for K, A <= G x K x C, B <= K x H x C and a shift with
    D conjugate to A * shifted B; None if no witness exists.

    When D is in graph form, the kernel-shape constraint applies: any
    factorization morphism kernel N is injective on the third coordinate,
    normal in D, with D/N embedding in a section of K. Orders of K admitting
    no such N are skipped; if none remain the search short-circuits to None.
    """
    g, h, c = d.g, d.k, d.c
    p_ghc = d.triple
    d_canon = d.canonical_rep()
    if catalog_groups is None:
        def catalog_groups(n):
            return _catalog.groups_of_order(n)

    viable_orders = list(range(1, order_bound + 1))
    prune_info = None
    if _graph_form(d):
        candidates = []
        for members in p3_injective_subgroups(d):
            if _normal_within(p_ghc, d.members, members):
                candidates.append(len(d.members) // len(members))
        viable_orders = [o for o in viable_orders
                         if any(idx <= o for idx in candidates)]
        prune_info = {"admissible_indices": sorted(set(candidates)),
                      "viable_orders": viable_orders}
        if not viable_orders:
            return None

    for o in viable_orders:
        for kgrp in catalog_groups(o):
            a_list = _a_side_classes(g, kgrp, c, d.proj(0))
            b_list = _b_side_classes(kgrp, h, c, d.proj(1))
            p_kc = product_group(kgrp, c)
            p_khc = product_group(kgrp, h, c)
            t, inv = p_khc.table, p_khc.inv
            for a_members in a_list:
                a_trip = TripleSubgroup(g, kgrp, c, a_members)
                p23a = subgroup(p_kc, a_trip.proj_pair(1, 2), check=False)
                for b_members in b_list:
                    b_trip = TripleSubgroup(kgrp, h, c, b_members)
                    p13b = subgroup(p_kc, b_trip.proj_pair(0, 2), check=False)
                    for rep in double_cosets(p_kc, p23a, p13b):
                        k0, c0 = p_kc.decode(rep)
                        shift = p_khc.encode((k0, 0, c0))
                        si = inv[shift]
                        conj_b = tuple(sorted(t[t[shift][m]][si] for m in b_members))
                        star = _star_members(g, kgrp, h, c, a_members, conj_b)
                        if len(star) != len(d.members):
                            continue
                        if canonical_subgroup_rep(p_ghc, star) == d_canon:
                            return {
                                "k": kgrp,
                                "a_members": a_members,
                                "b_members": b_members,
                                "shift": (k0, c0),
                                "prune": prune_info,
                            }
    return None


# ---------------------------------------------------------------------------
# The counterexample at |C| = 4 and the prime-order bridge scan
# ---------------------------------------------------------------------------

def counterexample_check() -> dict:
    """Construct the order-16 subgroup of Q8 x D8 x C4 that factors through
    no group of order < 8, verifying every intermediate fact; hard-errors on
    any mismatch. Returns a JSON-ready transcript."""
    g = make_group("quaternion8")
    h = make_group("dihedral", 8)
    c = make_group("cyclic", 4)
    transcript: dict = {"groups": {"G": g.label, "H": h.label, "C": c.label}}

    # generators of D8: a of order 4, b of order 2 outside <a>, b a b^-1 = a^-1
    a = next(x for x in range(h.order) if h.element_order(x) == 4)
    a_sub = set(closure(h, [a]))
    b = next(x for x in range(h.order)
             if h.element_order(x) == 2 and x not in a_sub)
    assert h.conj(b, a) == h.inverse(a)
    cc = 1  # generator of C4
    p_hc = product_group(h, c)
    alpha = p_hc.encode((a, c.mul(cc, cc)))
    beta = p_hc.encode((b, cc))
    t1 = closure(p_hc, [alpha])
    t2 = closure(p_hc, [beta])
    assert len(t1) == 4 and len(t2) == 4
    assert is_normal(p_hc, t1), "T1 must be normal in H x C"
    assert set(t1) & set(t2) == {0}
    assert p_hc.conj(beta, alpha) == p_hc.inverse(alpha)
    t_members = closure(p_hc, [alpha, beta])
    assert len(t_members) == 16
    assert set(t_members) == {p_hc.mul(x, y) for x in t1 for y in t2}
    transcript["T"] = {"order": 16, "alpha": list(p_hc.decode(alpha)),
                       "beta": list(p_hc.decode(beta))}

    # tau: T -> Q8 with kernel generated by alpha^2 beta^2
    ker_gen = p_hc.mul(p_hc.power(alpha, 2), p_hc.power(beta, 2))
    t_sub = subgroup(p_hc, t_members, check=False)
    t_grp, t_incl = sub_as_group(t_sub)
    local = {m: i for i, m in enumerate(t_sub.members)}
    ker_local = closure(t_grp, [local[ker_gen]])
    assert len(ker_local) == 2
    q, proj = quotient_group(t_grp, subgroup(t_grp, ker_local, check=False))
    iso = is_isomorphic(q, g)
    assert iso is not None, "T / <alpha^2 beta^2> must be Q8"
    tau = proj.then(iso)
    assert tau.kernel_members() == tuple(sorted(ker_local))
    transcript["tau"] = {
        "kernel_order": 2,
        "kernel_generator": list(p_hc.decode(ker_gen)),
        "surjective": len(set(tau.images)) == g.order,
        "images": [[list(p_hc.decode(t_incl(i))), tau(i)]
                   for i in range(t_grp.order)],
    }

    p_ghc = product_group(g, h, c)
    members = []
    for i in range(t_grp.order):
        hh, ccc = p_hc.decode(t_incl(i))
        members.append(p_ghc.encode((tau(i), hh, ccc)))
    d = triple_subgroup(g, h, c, members)
    assert d.order == 16
    assert d.proj(0) == tuple(range(8)), "p1(D) must be all of Q8"
    assert d.proj(1) == tuple(range(8)), "p2(D) must be all of D8"
    assert d.kern(0) == (0,) and d.kern(1) == (0,)
    transcript["D"] = {"order": d.order,
                       "members": [list(p_ghc.decode(m)) for m in d.members]}

    # the four elements with third coordinate exactly the generator c; each
    # order-4 candidate kernel is generated by one of them, none normal in D
    four = [m for m in d.members if p_ghc.decode(m)[2] == cc]
    candidates = []
    for m in four:
        n = closure(p_ghc, [m])
        assert len(n) == 4
        thirds = {p_ghc.decode(x)[2] for x in n}
        assert len(thirds) == 4, "candidate kernel must be p3-injective"
        candidates.append({
            "generator": list(p_ghc.decode(m)),
            "normal_in_D": _normal_within(p_ghc, d.members, n),
        })
    assert len(four) == 4, "exactly four order-4 third-coordinate elements"
    assert not any(x["normal_in_D"] for x in candidates)
    transcript["order4_candidates"] = candidates

    admissible = admissible_kernel_check(d, 7)
    assert admissible == [], "no admissible kernel of index <= 7 may exist"
    transcript["admissible_kernels_bound7"] = []

    witness = is_star_decomposable(d, order_bound=7)
    assert witness is None, "D must not factor through order < 8"
    transcript["decomposable"] = False
    transcript["verdict"] = "NOT DECOMPOSABLE"
    return transcript


def no_bridge_check(g: FiniteGroup, h: FiniteGroup, c: FiniteGroup) -> dict:
    """Scan for D <= G x H x C with full projections and trivial kernels.

    Such D are graphs of surjections from a subgroup of H x C onto G, so the
    scan enumerates those. With |C| prime and G, H non-isomorphic of equal
    order, finding one contradicts the isomorphism corollary: FoundBridge.
    """
    p_hc = product_group(h, c)
    p_ghc = product_group(g, h, c)
    c_prime = _is_prime(c.order)
    isomorphic = is_isomorphic(g, h) is not None
    bridges = []
    scanned = 0
    for s in subgroups(p_hc):
        proj_h = {p_hc.decode(m)[0] for m in s.members}
        if len(proj_h) != h.order:
            continue
        if s.order % g.order:
            continue
        s_grp, s_incl = sub_as_group(s)
        scanned += 1
        for alpha in all_homs(s_grp, g, surjective=True):
            ok = True
            for i in range(s_grp.order):
                hh, cc = p_hc.decode(s_incl(i))
                if cc == 0 and hh != 0 and alpha(i) == 0:
                    ok = False  # nontrivial k2
                    break
            if not ok:
                continue
            members = tuple(sorted(
                p_ghc.encode((alpha(i),) + p_hc.decode(s_incl(i)))
                for i in range(s_grp.order)))
            if members not in bridges:
                bridges.append(members)
    bridges.sort()
    report = {
        "groups": {"G": g.label, "H": h.label, "C": c.label},
        "c_prime": c_prime,
        "isomorphic": isomorphic,
        "sections_scanned": scanned,
        "bridges": [list(b) for b in bridges],
        "passed": not bridges,
    }
    if c_prime and bridges and not isomorphic:
        # a bridge between non-isomorphic groups would falsify the corollary
        raise FoundBridge(f"bridge found for ({g.label}, {h.label}, {c.label}): "
                          f"{bridges[0]}")
    return report


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True
