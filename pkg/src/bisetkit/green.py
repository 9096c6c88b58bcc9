"""Quotient algebras of Green backends and the seed classifications.

A backend presents each hom-space A(H x G) by a finite ordered basis together
with an injective linear coordinatization, and composes coordinate vectors
bilinearly over a middle group. The ideal of morphisms factoring through
strictly smaller groups is then the row space of all pairwise basis products,
and the quotient dimension falls out of exact rank computations.

Backends: rb (double Burnside), rq (rational representations in the Artin
basis), crc (complex representations by irreducible characters), rbc (the
Yoneda-Dress shift of rb at a fixed group C).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Optional, Sequence

from . import catalog as _catalog
from .bisets import (
    all_transitive_classes,
    compose_transitive,
    identity_biset,
)
from .characters import (
    CharacterVector,
    character_table,
    compose_characters,
    perm_character_members,
    rq_cyclic_basis,
)
from .cyclotomic import Cyc
from .errors import CatalogInsufficient, NotDivisor, OrderBound
from .groups import (
    FiniteGroup,
    automorphisms,
    canonical_subgroup_rep,
    class_index_map,
    conjugacy_classes,
    product_group,
)
from .linalg import RowSpace


# ---------------------------------------------------------------------------
# Backends
# ---------------------------------------------------------------------------

class RBBackend:
    """A(H x G) = RB(H, G); coordinates are coefficients over subgroup classes."""

    name = "rb"
    scalar_one = Fraction(1)

    def basis_labels(self, h: FiniteGroup, g: FiniteGroup) -> list[tuple[int, ...]]:
        return [c.rep for c in all_transitive_classes(h, g)]

    def coord_dim(self, h: FiniteGroup, g: FiniteGroup) -> int:
        return len(self.basis_labels(h, g))

    def basis_vector(self, h: FiniteGroup, g: FiniteGroup, i: int) -> list[Fraction]:
        n = self.coord_dim(h, g)
        v = [Fraction(0)] * n
        v[i] = Fraction(1)
        return v

    def _index(self, h, g) -> dict:
        labels = self.basis_labels(h, g)
        return {rep: i for i, rep in enumerate(labels)}

    def compose(self, h, g, k, beta: Sequence[Fraction], alpha: Sequence[Fraction]) -> list[Fraction]:
        labels_hg = self.basis_labels(h, g)
        labels_gk = self.basis_labels(g, k)
        index_hk = self._index(h, k)
        out = [Fraction(0)] * len(index_hk)
        for i, bi in enumerate(beta):
            if not bi:
                continue
            for j, aj in enumerate(alpha):
                if not aj:
                    continue
                piece = compose_transitive(h, g, k, labels_hg[i], labels_gk[j])
                c = bi * aj
                for rep, coeff in piece.coeffs.items():
                    out[index_hk[rep]] += c * coeff
        return out

    def identity(self, g: FiniteGroup) -> list[Fraction]:
        index = self._index(g, g)
        v = [Fraction(0)] * len(index)
        for rep, coeff in identity_biset(g).coeffs.items():
            v[index[rep]] = coeff
        return v


class RQBackend:
    """kR_Q in the Artin basis; coordinates are rational class-function values."""

    name = "rq"
    scalar_one = Fraction(1)

    def basis_labels(self, h, g) -> list[tuple[int, ...]]:
        p = product_group(h, g)
        return [c.representative.members for c in rq_cyclic_basis(p)]

    def coord_dim(self, h, g) -> int:
        return len(conjugacy_classes(product_group(h, g)))

    def basis_vector(self, h, g, i) -> list[Fraction]:
        p = product_group(h, g)
        rep = self.basis_labels(h, g)[i]
        return list(perm_character_members(p, rep).rational_values())

    def compose(self, h, g, k, beta, alpha) -> list[Fraction]:
        tm = CharacterVector(product_group(h, g),
                             tuple(Cyc.from_rational(c) for c in beta))
        tn = CharacterVector(product_group(g, k),
                             tuple(Cyc.from_rational(c) for c in alpha))
        return list(compose_characters(tm, tn, h, g, k).rational_values())

    def identity(self, g) -> list[Fraction]:
        p = product_group(g, g)
        diag = tuple(sorted(p.encode((a, a)) for a in range(g.order)))
        return list(perm_character_members(p, diag).rational_values())


class CRCBackend:
    """Complex representations; basis = irreducible characters of the product."""

    name = "crc"
    scalar_one = Cyc.one()

    def basis_labels(self, h, g) -> list[str]:
        p = product_group(h, g)
        return [f"chi{i}" for i in range(len(character_table(p)))]

    def coord_dim(self, h, g) -> int:
        return len(conjugacy_classes(product_group(h, g)))

    def basis_vector(self, h, g, i) -> list[Cyc]:
        p = product_group(h, g)
        return list(character_table(p)[i].values)

    def compose(self, h, g, k, beta, alpha) -> list[Cyc]:
        tm = CharacterVector(product_group(h, g), tuple(beta))
        tn = CharacterVector(product_group(g, k), tuple(alpha))
        return list(compose_characters(tm, tn, h, g, k).values)

    def identity(self, g) -> list[Cyc]:
        p = product_group(g, g)
        diag = tuple(sorted(p.encode((a, a)) for a in range(g.order)))
        return list(perm_character_members(p, diag).values)


class RBCBackend:
    """The Yoneda-Dress shift RB_C: A(H x G) = RB(H x G x C), composed with x^d."""

    name = "rbc"
    scalar_one = Fraction(1)

    def __init__(self, c: FiniteGroup):
        self.c = c

    def basis_labels(self, h, g) -> list[tuple[int, ...]]:
        from .dress import triple_classes
        return [t.members for t in triple_classes(h, g, self.c)]

    def coord_dim(self, h, g) -> int:
        return len(self.basis_labels(h, g))

    def basis_vector(self, h, g, i) -> list[Fraction]:
        n = self.coord_dim(h, g)
        v = [Fraction(0)] * n
        v[i] = Fraction(1)
        return v

    def compose(self, h, g, k, beta, alpha) -> list[Fraction]:
        from .dress import dress_compose_members
        labels_hg = self.basis_labels(h, g)
        labels_gk = self.basis_labels(g, k)
        index = {rep: i for i, rep in enumerate(self.basis_labels(h, k))}
        out = [Fraction(0)] * len(index)
        for i, bi in enumerate(beta):
            if not bi:
                continue
            for j, aj in enumerate(alpha):
                if not aj:
                    continue
                piece = dress_compose_members(h, g, k, self.c,
                                              labels_hg[i], labels_gk[j])
                c = bi * aj
                for rep, coeff in piece.items():
                    out[index[rep]] += c * coeff
        return out

    def identity(self, g) -> list[Fraction]:
        from .dress import dress_identity
        index = {rep: i for i, rep in enumerate(self.basis_labels(g, g))}
        v = [Fraction(0)] * len(index)
        ident = dress_identity(g, self.c)
        for rep, coeff in ident.coeffs.items():
            v[index[rep]] = coeff
        return v


def get_backend(name: str, c: Optional[FiniteGroup] = None):
    if name == "rb":
        return RBBackend()
    if name == "rq":
        return RQBackend()
    if name == "crc":
        return CRCBackend()
    if name == "rbc":
        assert c is not None, "rbc backend needs the shift group C"
        return RBCBackend(c)
    raise ValueError(f"unknown backend {name!r}")


# ---------------------------------------------------------------------------
# Ideal span and quotient dimension
# ---------------------------------------------------------------------------

@dataclass
class IdealReport:
    backend: str
    group: str
    ambient_dim: int
    ideal_dim: int
    quotient_dim: int
    quotient_basis: list

    def to_json_dict(self) -> dict:
        return {
            "backend": self.backend,
            "group": self.group,
            "ambient": self.ambient_dim,
            "ideal": self.ideal_dim,
            "quotient": self.quotient_dim,
            "basis": [str(list(b)) if isinstance(b, tuple) else str(b)
                      for b in self.quotient_basis],
        }


def _ideal_rowspace(backend, h: FiniteGroup) -> RowSpace:
    """Reduced row space of all basis products through smaller catalog groups."""
    if h.order - 1 > _catalog.CATALOG_MAX_ORDER:
        raise CatalogInsufficient(
            f"need all groups of order < {h.order}, catalog stops at "
            f"{_catalog.CATALOG_MAX_ORDER}")
    width = backend.coord_dim(h, h)
    space = RowSpace(width)
    seen_rows: set = set()
    for n in range(1, h.order):
        for k in _catalog.groups_of_order(n):
            dim_hk = len(backend.basis_labels(h, k))
            dim_kh = len(backend.basis_labels(k, h))
            avecs = [backend.basis_vector(h, k, i) for i in range(dim_hk)]
            bvecs = [backend.basis_vector(k, h, j) for j in range(dim_kh)]
            for avec in avecs:
                for bvec in bvecs:
                    row = backend.compose(h, k, h, avec, bvec)
                    key = tuple(str(x) for x in row)
                    if key in seen_rows:
                        continue
                    seen_rows.add(key)
                    space.add(row)
    return space


def ideal_span(backend, h: FiniteGroup) -> IdealReport:
    """Ideal of morphisms factoring through strictly smaller groups.

    The ideal is the linear span of {compose(a, b)} over basis elements a of
    A(H x K) and b of A(K x H) for every catalog K with |K| < |H|; bilinearity
    makes this span the whole submodule. Quotient basis labels are the ambient
    basis elements that stay independent modulo the span, scanned in order.
    """
    space = _ideal_rowspace(backend, h)
    ideal_dim = space.rank
    labels = backend.basis_labels(h, h)
    ambient = len(labels)
    assert 0 <= ideal_dim <= ambient, "ideal escaped the ambient module"
    quotient_basis = []
    probe = RowSpace(space.width)
    for row in space.pivots.values():
        probe.add(list(row))
    for i, lab in enumerate(labels):
        if probe.add(backend.basis_vector(h, h, i)):
            quotient_basis.append(lab)
    return IdealReport(backend.name, h.label, ambient, ideal_dim,
                       ambient - ideal_dim, quotient_basis)


def ahat_dim(backend, h: FiniteGroup) -> int:
    return ideal_span(backend, h).quotient_dim


# ---------------------------------------------------------------------------
# Unit groups, their characters, primitivity
# ---------------------------------------------------------------------------

def units_mod(m: int) -> list[int]:
    return [t for t in range(1, m + 1) if gcd(t, m) == 1] if m > 1 else [1]


def _unit_group_structure(m: int) -> list[tuple[int, int]]:
    """Independent generators of (Z/mZ)^x as (generator, order) pairs via CRT."""
    if m <= 2:
        return []
    factors = []
    mm = m
    p = 2
    while p * p <= mm:
        if mm % p == 0:
            k = 0
            while mm % p == 0:
                mm //= p
                k += 1
            factors.append((p, k))
        p += 1
    if mm > 1:
        factors.append((mm, 1))
    gens: list[tuple[int, int]] = []
    for p, k in factors:
        q = p ** k
        rest = m // q
        # component generators of U(p^k), lifted to 1 mod rest by CRT
        comp_gens: list[tuple[int, int]] = []
        if p == 2:
            if k == 2:
                comp_gens = [(3, 2)]
            elif k >= 3:
                comp_gens = [(q - 1, 2), (3, 2 ** (k - 2))]
        else:
            phi = q - p ** (k - 1)
            for g in range(2, q):
                if gcd(g, p) == 1:
                    o, x = 1, g % q
                    while x != 1:
                        x = x * g % q
                        o += 1
                    if o == phi:
                        comp_gens = [(g, phi)]
                        break
        for g, o in comp_gens:
            # CRT lift: t = g mod q, t = 1 mod rest
            t = _crt(g, q, 1, rest) if rest > 1 else g % m
            gens.append((t % m, o))
    return gens


def _crt(a: int, p: int, b: int, q: int) -> int:
    # x = a mod p, x = b mod q with gcd(p, q) = 1
    inv = pow(p, -1, q)
    return (a + p * ((b - a) * inv % q)) % (p * q)


@dataclass(frozen=True)
class UnitCharacter:
    """A linear character of (Z/mZ)^x: values[t] is the exponent k in zeta_e^k."""

    modulus: int
    exponent: int
    values: tuple[tuple[int, int], ...]  # sorted (unit, exponent-of-root) pairs

    def value_exponent(self, t: int) -> int:
        key = t % self.modulus
        if key == 0:
            key = self.modulus  # only reachable for modulus 1
        return dict(self.values)[key]

    def is_trivial_on(self, subset: Sequence[int]) -> bool:
        d = dict(self.values)
        return all(d[t % self.modulus] == 0 for t in subset)

    def signature(self) -> tuple:
        return (self.modulus, self.values)


def unit_characters(m: int) -> list[UnitCharacter]:
    """All phi(m) linear characters of the unit group, deterministic order."""
    units = units_mod(m)
    gens = _unit_group_structure(m)
    e = 1
    for _, o in gens:
        e = e * o // gcd(e, o)
    if not gens:
        return [UnitCharacter(m, 1, tuple((u, 0) for u in units))]
    # discrete logs: every unit is a product of generator powers, exponents found by BFS
    logs = {1: tuple(0 for _ in gens)}
    frontier = [1]
    while frontier:
        x = frontier.pop()
        lx = logs[x]
        for i, (g, o) in enumerate(gens):
            y = x * g % m
            if y not in logs:
                le = list(lx)
                le[i] = (le[i] + 1) % o
                logs[y] = tuple(le)
                frontier.append(y)
    assert len(logs) == len(units), f"unit group of {m}: generators incomplete"
    out = []
    import itertools
    for choices in itertools.product(*[range(o) for _, o in gens]):
        vals = []
        for u in units:
            lu = logs[u]
            k = sum(c * l * (e // o) for c, l, (_, o) in zip(choices, lu, gens)) % e
            vals.append((u, k))
        out.append(UnitCharacter(m, e, tuple(sorted(vals))))
    out.sort(key=lambda ch: tuple(k for _, k in ch.values))
    assert len(out) == len(units)
    return out


def kernel_of_reduction(m: int, n: int) -> list[int]:
    """Ker of (Z/mZ)^x -> (Z/nZ)^x, i.e. units congruent to 1 mod n."""
    if m % n:
        raise NotDivisor(f"{n} does not divide {m}")
    return [t for t in units_mod(m) if t % n == 1 % n]


def xn_element(m: int, n: int) -> dict[int, Fraction]:
    """Indicator sum over Ker((Z/mZ)^x -> (Z/nZ)^x) for a proper divisor n."""
    if m % n or n >= m:
        raise NotDivisor(f"need a proper divisor: n={n}, m={m}")
    return {t: Fraction(1) for t in kernel_of_reduction(m, n)}


def primitive_characters(m: int) -> list[UnitCharacter]:
    """Characters nontrivial on every Ker pi_{m,n} for proper divisors n.

    A trivial kernel (possible, e.g. m=6, n=3) admits no such character, so it
    empties the list, matching the vanishing of the quotient algebra.
    """
    chars = unit_characters(m)
    out = []
    proper = [n for n in range(1, m) if m % n == 0]
    for ch in chars:
        ok = True
        for n in proper:
            ker = kernel_of_reduction(m, n)
            if ch.is_trivial_on(ker):
                ok = False
                break
        if ok:
            out.append(ch)
    return out


def xn_ideal_dim(m: int) -> int:
    """Dimension of the ideal generated by all x_n inside the unit group algebra."""
    units = units_mod(m)
    pos = {u: i for i, u in enumerate(units)}
    space = RowSpace(len(units))
    for n in range(1, m):
        if m % n:
            continue
        ker = kernel_of_reduction(m, n)
        for u in units:
            row = [Fraction(0)] * len(units)
            for t in ker:
                row[pos[u * t % m]] += 1
            space.add(row)
    return space.rank


def ell_kernel_dim_from_span(h: FiniteGroup) -> int:
    """dim Ker(ell_H) computed from the rq backend ideal span.

    ell_H sends the unit group algebra onto the quotient algebra via the
    twisted diagonal classes; its kernel is the intersection of the diagonal
    span with the ideal: dim(D cap I) = dim I + dim D - dim(I + D).
    """
    backend = RQBackend()
    space = _ideal_rowspace(backend, h)
    ideal_rank = space.rank
    p = product_group(h, h)
    diags = _diagonal_reps(h)
    for rep in diags:
        space.add(list(perm_character_members(p, rep).rational_values()))
    return ideal_rank + len(diags) - space.rank


def _diagonal_reps(h: FiniteGroup) -> list[tuple[int, ...]]:
    """Twisted diagonals Delta_sigma(H) over automorphisms, as class reps."""
    p = product_group(h, h)
    auts, _, _ = automorphisms(h)
    seen = []
    for a in auts:
        members = tuple(sorted(p.encode((x, a(x))) for x in range(h.order)))
        rep = canonical_subgroup_rep(p, members)
        if rep not in seen:
            seen.append(rep)
    seen.sort()
    return seen


# ---------------------------------------------------------------------------
# Seeds for kR_Q
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Seed:
    """A classified pair (C_m, chi) with chi a primitive unit character."""

    m: int
    character: UnitCharacter

    @property
    def group_label(self) -> str:
        return f"C{self.m}"

    def key(self) -> tuple:
        return (self.m, self.character.signature())


def seeds_kRQ(max_m: int, verify_ideal_up_to: int = 0) -> list[Seed]:
    """One seed per primitive character of (Z/mZ)^x for each m <= max_m.

    With verify_ideal_up_to > 0, the count for each small m is cross-checked
    against the quotient dimension computed by the rq ideal span.
    """
    if max_m > 64:
        raise OrderBound("seeds_kRQ capped at m <= 64")
    out = []
    from .groups import make_group
    for m in range(1, max_m + 1):
        prims = primitive_characters(m)
        if 0 < m <= verify_ideal_up_to:
            dim = ahat_dim(RQBackend(), make_group("cyclic", m))
            assert dim == len(prims), \
                f"m={m}: ideal span gives {dim}, primitive count {len(prims)}"
        for ch in prims:
            out.append(Seed(m, ch))
    return out


def transport_seed(seed: Seed, phi_unit: int) -> Seed:
    """Transport along the unit-group identification induced by an isomorphism
    C_m -> C_m sending the generator to its phi_unit-th power. The unit group
    is abelian, so conjugation is trivial and the character is unchanged."""
    m = seed.m
    assert gcd(phi_unit, m) == 1 if m > 1 else True
    ch = seed.character
    units = units_mod(m)
    vals = tuple(sorted((u, ch.value_exponent(u)) for u in units))
    return Seed(m, UnitCharacter(m, ch.exponent, vals))


# ---------------------------------------------------------------------------
# Out(H) comparison and the complex product span
# ---------------------------------------------------------------------------

def check_out_iso(h: FiniteGroup) -> dict:
    """Compare the rb quotient with ROut(H): dimension and basis classes."""
    backend = RBBackend()
    report = ideal_span(backend, h)
    _, _, out_order = automorphisms(h)
    diag = _diagonal_reps(h)
    basis_set = sorted(report.quotient_basis)
    return {
        "group": h.label,
        "quotient_dim": report.quotient_dim,
        "out_order": out_order,
        "match": report.quotient_dim == out_order and basis_set == diag,
        "quotient_basis": basis_set,
        "diagonal_classes": diag,
    }


CRC_SPAN_ORDER_CAP = 256


def crc_product_span(g: FiniteGroup, k: FiniteGroup) -> dict:
    """Rank of {chi tensor psi} inside class functions of G x K vs class count."""
    p = product_group(g, k)
    if p.order > CRC_SPAN_ORDER_CAP:
        raise OrderBound("crc_product_span beyond sensible range")
    tg = character_table(g)
    tk = character_table(k)
    classes_p = conjugacy_classes(p)
    cg = class_index_map(g)
    ck = class_index_map(k)
    space = RowSpace(len(classes_p))
    for chi in tg:
        for psi in tk:
            row = []
            for cls in classes_p:
                a, b = p.decode(cls[0])
                row.append(chi.values[cg[a]] * psi.values[ck[b]])
            space.add(row)
    target = len(classes_p)
    return {
        "groups": (g.label, k.label),
        "product_rank": space.rank,
        "target_dim": target,
        "match": space.rank == target,
    }
