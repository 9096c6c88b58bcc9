"""Exact character arithmetic over cyclotomic fields.

Covers permutation characters, the linearization of Burnside elements,
Artin-induction coefficients on abelian groups, composition of characters of
bimodules over a middle group, and full complex character tables of small
groups. Values are CyclotomicNumbers; rational-valued characters expose plain
Fraction vectors for the linear algebra paths.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .cyclotomic import Cyc
from .errors import (
    MiddleMismatch,
    NonRationalValues,
    NotAbelian,
    OrderBound,
)
from .groups import (
    FiniteGroup,
    Subgroup,
    SubgroupClass,
    class_index_map,
    closure,
    conjugacy_classes,
    derived_subgroup,
    generating_sequence,
    mobius_int,
    product_group,
    quotient_group,
    sub_as_group,
    subgroup,
    subgroup_classes,
    subgroups,
)

CHARACTER_TABLE_BOUND = 64


@dataclass
class CharacterVector:
    """A class function on ``group``; one value per conjugacy class."""

    group: FiniteGroup
    values: tuple[Cyc, ...]

    def __post_init__(self):
        assert len(self.values) == len(conjugacy_classes(self.group))

    def value_at_element(self, a: int) -> Cyc:
        return self.values[class_index_map(self.group)[a]]

    def __eq__(self, other) -> bool:
        return (isinstance(other, CharacterVector) and self.group is other.group
                and all(a == b for a, b in zip(self.values, other.values)))

    def __add__(self, other: "CharacterVector") -> "CharacterVector":
        assert self.group is other.group
        return CharacterVector(self.group,
                               tuple(a + b for a, b in zip(self.values, other.values)))

    def __sub__(self, other: "CharacterVector") -> "CharacterVector":
        assert self.group is other.group
        return CharacterVector(self.group,
                               tuple(a - b for a, b in zip(self.values, other.values)))

    def scale(self, c) -> "CharacterVector":
        return CharacterVector(self.group, tuple(v * c for v in self.values))

    def tensor(self, other: "CharacterVector") -> "CharacterVector":
        """Pointwise product (character of the tensor product over the group)."""
        assert self.group is other.group
        return CharacterVector(self.group,
                               tuple(a * b for a, b in zip(self.values, other.values)))

    def is_zero(self) -> bool:
        return not any(self.values)

    def is_rational(self) -> bool:
        return all(v.is_rational() for v in self.values)

    def rational_values(self) -> tuple[Fraction, ...]:
        if not self.is_rational():
            raise NonRationalValues("character has irrational values")
        return tuple(v.rational() for v in self.values)

    def degree(self) -> Fraction:
        return self.values[0].rational()

    def __repr__(self) -> str:
        return f"Char({self.group.label}, {list(self.values)})"


def zero_character(g: FiniteGroup) -> CharacterVector:
    return CharacterVector(g, (Cyc.zero(),) * len(conjugacy_classes(g)))


def inner_product(a: CharacterVector, b: CharacterVector) -> Cyc:
    """<a, b> = (1/|G|) sum |class| a(g) conj(b(g))."""
    assert a.group is b.group
    g = a.group
    total = Cyc.zero()
    for cls, va, vb in zip(conjugacy_classes(g), a.values, b.values):
        if va and vb:
            total = total + va * vb.conjugate() * len(cls)
    return total * Fraction(1, g.order)


# ---------------------------------------------------------------------------
# Permutation characters and linearization
# ---------------------------------------------------------------------------

def perm_character(g: FiniteGroup, c: Subgroup) -> CharacterVector:
    """Character of the action on G/C: value at x = #fixed cosets."""
    assert c.parent is g
    vals = []
    from .groups import left_cosets
    cosets = left_cosets(g, c.members)
    t, inv = g.table, g.inv
    mset = c.member_set()
    for cls in conjugacy_classes(g):
        x = cls[0]
        fixed = 0
        for cs in cosets:
            r = cs[0]
            if t[t[inv[r]][x]][r] in mset:
                fixed += 1
        vals.append(Cyc.from_rational(fixed))
    return CharacterVector(g, tuple(vals))


def perm_character_members(g: FiniteGroup, members: Sequence[int]) -> CharacterVector:
    return perm_character(g, subgroup(g, tuple(members), check=False))


def biset_character(x) -> CharacterVector:
    """Linearization: the permutation character of x on its product group."""
    from .bisets import BurnsideElement
    assert isinstance(x, BurnsideElement)
    p = x.product
    out = zero_character(p)
    for rep, coeff in sorted(x.coeffs.items()):
        out = out + perm_character_members(p, rep).scale(coeff)
    return out


# ---------------------------------------------------------------------------
# Artin coefficients on abelian groups
# ---------------------------------------------------------------------------

@dataclass
class RQElement:
    """Coordinates over the Artin basis: one rational per cyclic subgroup class."""

    group: FiniteGroup
    coeffs: dict[tuple[int, ...], Fraction]  # class rep members -> coefficient

    def coefficient(self, members: Sequence[int]) -> Fraction:
        from .groups import canonical_subgroup_rep
        return self.coeffs.get(canonical_subgroup_rep(self.group, tuple(sorted(members))),
                               Fraction(0))


def cyclic_subgroups(g: FiniteGroup) -> list[tuple[int, ...]]:
    """All cyclic subgroups as sorted member tuples, deterministic order."""
    got = g._derived.get("cyclic_subgroups")
    if got is None:
        got = sorted({closure(g, [a]) for a in range(g.order)},
                     key=lambda m: (len(m), m))
        g._derived["cyclic_subgroups"] = got
    return got


def rq_cyclic_basis(g: FiniteGroup) -> list[SubgroupClass]:
    """Conjugacy classes of cyclic subgroups, the Artin basis indexing."""
    got = g._derived.get("rq_basis")
    if got is not None:
        return got
    from .groups import canonical_subgroup_rep
    reps: dict[tuple[int, ...], set] = {}
    for m in cyclic_subgroups(g):
        rep = canonical_subgroup_rep(g, m)
        reps.setdefault(rep, set()).add(m)
    classes = []
    for rep in sorted(reps, key=lambda m: (len(m), m)):
        classes.append(SubgroupClass(Subgroup(g, rep), tuple(sorted(reps[rep]))))
    g._derived["rq_basis"] = classes
    return classes


def artin_coefficients(tau: CharacterVector) -> RQElement:
    """Exact Artin-basis coordinates of a rational character on an abelian group.

    For each cyclic C the coefficient is
        (1/[G:C]) * sum over cyclic overgroups C* of mu([C*:C]) tau(z*)
    with z* any generator of C*; rationality of tau makes the choice immaterial.
    """
    g = tau.group
    if not g.is_abelian:
        raise NotAbelian("artin_coefficients needs an abelian group")
    rat = tau.rational_values()  # raises NonRationalValues when inapplicable
    cls_index = class_index_map(g)
    cyc = cyclic_subgroups(g)
    generator_of = {}
    for m in cyc:
        zs = [a for a in m if g.element_order(a) == len(m)]
        generator_of[m] = zs[0]
    out: dict[tuple[int, ...], Fraction] = {}
    for c in cyc:
        cset = set(c)
        q = Fraction(0)
        for cstar in cyc:
            if len(cstar) % len(c) == 0 and cset.issubset(cstar):
                mu = mobius_int(len(cstar) // len(c))
                if mu:
                    q += mu * rat[cls_index[generator_of[cstar]]]
        q /= Fraction(g.order, len(c))
        if q:
            out[c] = q
    return RQElement(g, out)


def expand_artin(elem: RQElement) -> CharacterVector:
    out = zero_character(elem.group)
    for members, coeff in sorted(elem.coeffs.items()):
        out = out + perm_character_members(elem.group, members).scale(coeff)
    return out


# ---------------------------------------------------------------------------
# Composition over a middle group
# ---------------------------------------------------------------------------

def compose_characters(tau_m: CharacterVector, tau_n: CharacterVector,
                       h: FiniteGroup, g: FiniteGroup, k: FiniteGroup) -> CharacterVector:
    """Character of the bimodule tensor over the middle group:

        tau(h, k) = (1/|G|) sum over g of tau_m(h, g) tau_n(g, k).

    tau_m lives on H x G and tau_n on G x K; the result lives on H x K.
    """
    phg = product_group(h, g)
    pgk = product_group(g, k)
    if tau_m.group is not phg or tau_n.group is not pgk:
        raise MiddleMismatch("characters do not live on the expected products")
    phk = product_group(h, k)
    idx_m = class_index_map(phg)
    idx_n = class_index_map(pgk)
    vals = []
    inv_g = Fraction(1, g.order)
    for cls in conjugacy_classes(phk):
        hh, kk = phk.decode(cls[0])
        acc = Cyc.zero()
        for gg in range(g.order):
            vm = tau_m.values[idx_m[phg.encode((hh, gg))]]
            if vm:
                vn = tau_n.values[idx_n[pgk.encode((gg, kk))]]
                if vn:
                    acc = acc + vm * vn
        vals.append(acc * inv_g)
    return CharacterVector(phk, tuple(vals))


# ---------------------------------------------------------------------------
# Character tables
# ---------------------------------------------------------------------------

def _abelian_linear_characters(g: FiniteGroup) -> list[CharacterVector]:
    """All |G| linear characters of an abelian group via generator images."""
    assert g.is_abelian
    e = g.exponent
    gens = generating_sequence(g)
    if not gens:
        return [CharacterVector(g, (Cyc.one(),))]
    import itertools
    from .groups import _word_plan  # shared word-derivation machinery
    plan = _word_plan(g, gens)
    # image of gen s is an exponent a with a*ord(s) = 0 mod e
    cand = []
    for s in gens:
        o = g.element_order(s)
        step = e // o
        cand.append([j * step for j in range(o)])
    found = []
    seen = set()
    cyc_e = [Cyc.root_of_unity(e, j) for j in range(e)]
    for images in itertools.product(*cand):
        exps = [0] * g.order
        for j, s in enumerate(gens):
            exps[s] = images[j]
        ok = True
        for y, x, j in plan:
            exps[y] = (exps[x] + images[j]) % e
        # verify multiplicativity (generator tuples may be dependent)
        t = g.table
        for a in range(g.order):
            ea = exps[a]
            row = t[a]
            for b in range(g.order):
                if (ea + exps[b]) % e != exps[row[b]]:
                    ok = False
                    break
            if not ok:
                break
        if not ok:
            continue
        key = tuple(exps)
        if key in seen:
            continue
        seen.add(key)
        vals = tuple(cyc_e[exps[cls[0]]] for cls in conjugacy_classes(g))
        found.append(CharacterVector(g, vals))
    assert len(found) == g.order, f"dual group of {g.label}: got {len(found)}"
    return found


def linear_characters(g: FiniteGroup) -> list[CharacterVector]:
    """Linear characters of any group, lifted from G/[G,G]."""
    if g.is_abelian:
        return _abelian_linear_characters(g)
    der = derived_subgroup(g)
    q, proj = quotient_group(g, subgroup(g, der, check=False))
    out = []
    for chi in _abelian_linear_characters(q):
        vals = tuple(chi.value_at_element(proj(cls[0]))
                     for cls in conjugacy_classes(g))
        out.append(CharacterVector(g, vals))
    return out


def induced_character(g: FiniteGroup, s: Subgroup, lam: CharacterVector) -> CharacterVector:
    """Induction of a character of the subgroup s (given on sub_as_group(s))."""
    s_grp, incl = sub_as_group(s)
    assert lam.group is s_grp
    local = {m: i for i, m in enumerate(s.members)}
    t, inv = g.table, g.inv
    vals = []
    scale = Fraction(1, len(s.members))
    for cls in conjugacy_classes(g):
        x = cls[0]
        acc = Cyc.zero()
        for r in range(g.order):
            y = t[t[inv[r]][x]][r]
            li = local.get(y)
            if li is not None:
                v = lam.value_at_element(li)
                if v:
                    acc = acc + v
        vals.append(acc * scale)
    return CharacterVector(g, tuple(vals))


def _char_sort_key(chi: CharacterVector, e: int):
    return (chi.degree(), tuple(v.sort_key(e) for v in chi.values))


def character_table(g: FiniteGroup, bound: int = CHARACTER_TABLE_BOUND) -> list[CharacterVector]:
    """The irreducible complex characters, exactly.

    Linear characters come from the abelianization; the remaining irreducibles
    are peeled off inductions of linear characters of subgroups (enough for
    every monomial group, which covers this toolkit's range), topped off by
    tensor products of found irreducibles if anything is still missing.
    Verified on exit: count, orthogonality, degree equation.
    """
    if g.order > bound:
        raise OrderBound(f"character table beyond bound: |{g.label}| = {g.order}")
    got = g._derived.get("char_table")
    if got is not None:
        return got
    r = len(conjugacy_classes(g))
    e = g.exponent
    irreducibles: list[CharacterVector] = []
    seen_keys: set = set()

    def consider(psi: CharacterVector) -> None:
        if len(irreducibles) >= r or psi.is_zero():
            return
        red = psi
        for chi in irreducibles:
            m = inner_product(red, chi)
            if m:
                red = red - chi.scale(m)
        if red.is_zero():
            return
        if inner_product(red, red) == Cyc.one():
            if red.degree() < 0:
                red = red.scale(-1)
            key = tuple(v.sort_key(e) for v in red.values)
            if key not in seen_keys:
                seen_keys.add(key)
                irreducibles.append(red)

    for chi in linear_characters(g):
        consider(chi)
    if len(irreducibles) < r:
        pool: list[CharacterVector] = []
        for cls in subgroup_classes(g):
            s = cls.representative
            if s.order in (1, g.order):
                continue
            s_grp, _ = sub_as_group(s)
            for lam in linear_characters(s_grp):
                pool.append(induced_character(g, s, lam))
        pool.sort(key=lambda c: c.degree())
        for psi in pool:
            consider(psi)
            if len(irreducibles) == r:
                break
        guard = 0
        while len(irreducibles) < r and guard < 4:
            guard += 1
            fresh = [a.tensor(b) for a in list(irreducibles)
                     for b in list(irreducibles) if a.degree() > 1 or b.degree() > 1]
            for psi in fresh + [a.tensor(b) for a in irreducibles for b in pool]:
                consider(psi)
                if len(irreducibles) == r:
                    break
    assert len(irreducibles) == r, \
        f"character table of {g.label}: found {len(irreducibles)} of {r}"
    total = sum(chi.degree() ** 2 for chi in irreducibles)
    assert total == g.order, f"degree equation fails for {g.label}"
    for i, a in enumerate(irreducibles):
        for j, b in enumerate(irreducibles):
            expect = Cyc.one() if i == j else Cyc.zero()
            assert inner_product(a, b) == expect, \
                f"orthogonality fails for {g.label} at ({i},{j})"
    irreducibles.sort(key=lambda c: _char_sort_key(c, e))
    g._derived["char_table"] = irreducibles
    return irreducibles


# ---------------------------------------------------------------------------
# Kernel of the linearization on B(G)
# ---------------------------------------------------------------------------

def lin_kernel(g: FiniteGroup, bound: int = CHARACTER_TABLE_BOUND) -> list[list[Fraction]]:
    """Basis of {c : sum_L c_L perm_char(G/L) = 0} over subgroup classes of G."""
    if g.order > bound:
        raise OrderBound(f"lin_kernel beyond bound: {g.order}")
    from .linalg import rational_nullspace
    classes = subgroup_classes(g)
    rows = []
    for cls in classes:
        rows.append(list(perm_character(g, cls.representative).rational_values()))
    # kernel vectors c with c^T rows = 0: nullspace of the transpose
    width = len(classes)
    cols = [[rows[i][j] for i in range(width)] for j in range(len(rows[0]))]
    return rational_nullspace(cols, width)
