"""Exact finite-group arithmetic on explicit multiplication tables.

Elements of a group of order n are the integers 0..n-1, with 0 the identity.
Constructors enumerate elements canonically: identity first, then generator
words in breadth-first (length-lex) order, so element indices are reproducible
across runs. Groups are immutable; derived data (element orders, conjugacy
classes, subgroup lattices) is cached on the instance.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from typing import Callable, Iterable, Optional, Sequence

from . import cache as _cache
from .errors import (
    InvalidTable,
    NotNormal,
    NotSubgroup,
    OrderBound,
)

DEFAULT_ORDER_BOUND = 256


class FiniteGroup:
    """A finite group given by its full multiplication table.

    ``table[a][b]`` is the index of the product a*b. Index 0 is the identity.
    Products built by :func:`product_group` carry their factor list and decode
    indices row-major, e.g. (g, h) <-> g*|H| + h.
    """

    __slots__ = ("label", "order", "table", "inv", "factors", "_strides", "_derived")

    def __init__(self, label: str, table: Sequence[Sequence[int]],
                 factors: Optional[tuple["FiniteGroup", ...]] = None):
        self.label = label
        self.table = tuple(tuple(row) for row in table)
        self.order = len(self.table)
        inv = [None] * self.order
        for a in range(self.order):
            row = self.table[a]
            for b in range(self.order):
                if row[b] == 0:
                    inv[a] = b
                    break
        if any(x is None for x in inv):
            raise InvalidTable(f"{label}: some element has no inverse")
        self.inv = tuple(inv)
        self.factors = factors
        if factors is not None:
            strides = []
            acc = 1
            for f in reversed(factors):
                strides.append(acc)
                acc *= f.order
            self._strides = tuple(reversed(strides))
        else:
            self._strides = None
        self._derived: dict = {}

    # -- arithmetic --------------------------------------------------------

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inverse(self, a: int) -> int:
        return self.inv[a]

    def conj(self, g: int, a: int) -> int:
        """g * a * g^-1."""
        return self.table[self.table[g][a]][self.inv[g]]

    def power(self, a: int, k: int) -> int:
        if k < 0:
            a, k = self.inv[a], -k
        r = 0
        while k:
            if k & 1:
                r = self.table[r][a]
            a = self.table[a][a]
            k >>= 1
        return r

    def element_order(self, a: int) -> int:
        orders = self._derived.get("elt_orders")
        if orders is None:
            orders = []
            for x in range(self.order):
                n, y = 1, x
                while y != 0:
                    y = self.table[y][x]
                    n += 1
                orders.append(n)
            orders = tuple(orders)
            self._derived["elt_orders"] = orders
        return orders[a]

    @property
    def exponent(self) -> int:
        e = self._derived.get("exponent")
        if e is None:
            e = 1
            for a in range(self.order):
                e = _lcm(e, self.element_order(a))
            self._derived["exponent"] = e
        return e

    @property
    def is_abelian(self) -> bool:
        v = self._derived.get("abelian")
        if v is None:
            v = all(self.table[a][b] == self.table[b][a]
                    for a in range(self.order) for b in range(a))
            self._derived["abelian"] = v
        return v

    # -- product index maps ------------------------------------------------

    def encode(self, comps: Sequence[int]) -> int:
        assert self._strides is not None, "not a product group"
        return sum(c * s for c, s in zip(comps, self._strides))

    def decode(self, x: int) -> tuple[int, ...]:
        assert self.factors is not None, "not a product group"
        out = []
        for f, s in zip(self.factors, self._strides):
            q, x = divmod(x, s)
            out.append(q)
        return tuple(out)

    # -- identity / caching ------------------------------------------------

    @property
    def fingerprint(self) -> str:
        fp = self._derived.get("fingerprint")
        if fp is None:
            h = hashlib.sha256()
            h.update(str(self.order).encode())
            for row in self.table:
                h.update(bytes(x % 256 for x in row))
                h.update(b"|")
                h.update(",".join(map(str, row)).encode())
            fp = h.hexdigest()
            self._derived["fingerprint"] = fp
        return fp

    def __repr__(self) -> str:
        return f"FiniteGroup({self.label!r}, order={self.order})"


def _lcm(a: int, b: int) -> int:
    from math import gcd
    return a // gcd(a, b) * b


# ---------------------------------------------------------------------------
# Validation
# ---------------------------------------------------------------------------

def validate_table(table: Sequence[Sequence[int]]) -> None:
    """Raise InvalidTable unless ``table`` is a group table with identity 0.

    Checks: squareness, identity row/column, Latin square, two-sided inverses,
    and associativity. Associativity uses Light's test (middle element drawn
    from a generating set), which is sufficient and keeps the check quadratic.
    """
    n = len(table)
    if n == 0:
        raise InvalidTable("empty table")
    rng = range(n)
    for i, row in enumerate(table):
        if len(row) != n:
            raise InvalidTable(f"row {i} has length {len(row)}, expected {n}")
        if any(not (0 <= x < n) for x in row):
            raise InvalidTable(f"row {i} has out-of-range entries")
    for a in rng:
        if table[0][a] != a or table[a][0] != a:
            raise InvalidTable("index 0 is not a two-sided identity")
    for a in rng:
        if len(set(table[a])) != n:
            raise InvalidTable(f"row {a} is not a permutation")
        if len({table[b][a] for b in rng}) != n:
            raise InvalidTable(f"column {a} is not a permutation")
    for a in rng:
        if not any(table[a][b] == 0 for b in rng):
            raise InvalidTable(f"element {a} has no inverse")
    # Light's associativity test over a generating set.
    gens: list[int] = []
    reached = {0}
    for a in rng:
        if a not in reached:
            gens.append(a)
            frontier = [a]
            while frontier:
                x = frontier.pop()
                for g in list(reached) + gens:
                    for y in (table[x][g], table[g][x]):
                        if y not in reached:
                            reached.add(y)
                            frontier.append(y)
    for m in gens:
        for x in rng:
            xm = table[x][m]
            rowx = table[x]
            for y in rng:
                if rowx[table[m][y]] != table[xm][y]:
                    raise InvalidTable(
                        f"associativity fails at ({x},{m},{y})")


# ---------------------------------------------------------------------------
# Constructors
# ---------------------------------------------------------------------------

def _from_model(label: str, identity, gens: Sequence, mul: Callable) -> FiniteGroup:
    """Enumerate a group breadth-first from a concrete element model.

    Discovery order is the canonical element order: identity, then words in
    the generators by increasing length with ties broken by discovery.
    """
    elems = [identity]
    index = {identity: 0}
    i = 0
    while i < len(elems):
        x = elems[i]
        for g in gens:
            y = mul(x, g)
            if y not in index:
                index[y] = len(elems)
                elems.append(y)
        i += 1
    table = [[index[mul(a, b)] for b in elems] for a in elems]
    return FiniteGroup(label, table)


_MAKE_MEMO: dict = {}


def make_group(kind: str, param=None) -> FiniteGroup:
    """Build a canonical small group.

    Kinds: ``cyclic`` (param n), ``dihedral`` (param = group order 2n),
    ``quaternion8``, ``klein4``, ``symmetric3``, ``alternating4``,
    ``dicyclic3``, ``from_table`` (param = table rows, fully validated).
    """
    if kind == "from_table":
        key = ("from_table", tuple(tuple(r) for r in param))
    else:
        key = (kind, param)
    got = _MAKE_MEMO.get(key)
    if got is not None:
        return got

    if kind == "cyclic":
        n = int(param)
        if n < 1:
            raise InvalidTable("cyclic order must be positive")
        g = _from_model(f"C{n}", 0, [1 % n], lambda a, b: (a + b) % n)
    elif kind == "dihedral":
        order = int(param)
        if order < 2 or order % 2:
            raise InvalidTable("dihedral order must be even and >= 2")
        n = order // 2

        def dmul(p, q):
            r1, f1 = p
            r2, f2 = q
            return ((r1 + (r2 if f1 == 0 else -r2)) % n, f1 ^ f2)

        g = _from_model(f"D{order}", (0, 0), [(1 % n, 0), (0, 1)], dmul)
    elif kind == "quaternion8":
        # units +-1,+-i,+-j,+-k as (sign, axis); x=i, y=j
        axis_mul = {
            (0, 0): (0, 0), (0, 1): (0, 1), (0, 2): (0, 2), (0, 3): (0, 3),
            (1, 0): (0, 1), (2, 0): (0, 2), (3, 0): (0, 3),
            (1, 1): (1, 0), (2, 2): (1, 0), (3, 3): (1, 0),
            (1, 2): (0, 3), (2, 3): (0, 1), (3, 1): (0, 2),
            (2, 1): (1, 3), (3, 2): (1, 1), (1, 3): (1, 2),
        }

        def qmul(p, q):
            s1, a1 = p
            s2, a2 = q
            s3, a3 = axis_mul[(a1, a2)]
            return ((s1 + s2 + s3) % 2, a3)

        g = _from_model("Q8", (0, 0), [(0, 1), (0, 2)], qmul)
    elif kind == "klein4":
        g = _from_model("V4", (0, 0), [(1, 0), (0, 1)],
                        lambda a, b: ((a[0] + b[0]) % 2, (a[1] + b[1]) % 2))
    elif kind == "symmetric3":
        def pmul(p, q):
            return tuple(p[q[i]] for i in range(3))

        g = _from_model("S3", (0, 1, 2), [(1, 2, 0), (1, 0, 2)], pmul)
    elif kind == "alternating4":
        def pmul4(p, q):
            return tuple(p[q[i]] for i in range(4))

        g = _from_model("A4", (0, 1, 2, 3), [(1, 2, 0, 3), (1, 0, 3, 2)], pmul4)
    elif kind == "dicyclic3":
        # <a, b | a^6 = 1, b^2 = a^3, b a b^-1 = a^-1>, elements (i, eps)
        def dcmul(p, q):
            i, e1 = p
            j, e2 = q
            if e1 == 0:
                return ((i + j) % 6, e2)
            if e2 == 0:
                return ((i - j) % 6, 1)
            return ((i - j + 3) % 6, 0)

        g = _from_model("Dic3", (0, 0), [(1, 0), (0, 1)], dcmul)
    elif kind == "from_table":
        table = [list(map(int, row)) for row in param]
        validate_table(table)
        g = FiniteGroup("table", table)
    else:
        raise ValueError(f"unknown group kind {kind!r}")

    _MAKE_MEMO[key] = g
    return g


_PRODUCT_MEMO: dict = {}


def product_group(*factors: FiniteGroup) -> FiniteGroup:
    """Direct product with row-major index maps; memoized on factor identity."""
    assert factors
    if len(factors) == 1:
        return factors[0]
    key = tuple(id(f) for f in factors)
    got = _PRODUCT_MEMO.get(key)
    if got is not None:
        return got
    orders = [f.order for f in factors]
    n = 1
    for o in orders:
        n *= o
    strides = []
    acc = 1
    for o in reversed(orders):
        strides.append(acc)
        acc *= o
    strides = list(reversed(strides))

    def dec(x):
        out = []
        for s in strides:
            q, x = divmod(x, s)
            out.append(q)
        return out

    comps = [dec(x) for x in range(n)]
    tables = [f.table for f in factors]
    table = []
    for a in range(n):
        ca = comps[a]
        row = []
        for b in range(n):
            cb = comps[b]
            idx = 0
            for t, s, x, y in zip(tables, strides, ca, cb):
                idx += t[x][y] * s
            row.append(idx)
        table.append(row)
    label = "x".join(f.label for f in factors)
    g = FiniteGroup(label, table, factors=tuple(factors))
    _PRODUCT_MEMO[key] = g
    return g


def direct_product(g: FiniteGroup, h: FiniteGroup) -> FiniteGroup:
    return product_group(g, h)


# ---------------------------------------------------------------------------
# Subgroups
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Subgroup:
    """A subgroup of ``parent`` as a sorted tuple of element indices."""

    parent: FiniteGroup
    members: tuple[int, ...]

    def __post_init__(self):
        assert self.members and self.members[0] == 0

    @property
    def order(self) -> int:
        return len(self.members)

    def member_set(self) -> frozenset:
        return frozenset(self.members)

    def __repr__(self) -> str:
        return f"Subgroup({self.parent.label}, {list(self.members)})"


def subgroup(parent: FiniteGroup, members: Iterable[int],
             check: bool = True) -> Subgroup:
    ms = tuple(sorted(set(members)))
    if check and not is_subgroup_members(parent, ms):
        raise NotSubgroup(f"{list(ms)} is not a subgroup of {parent.label}")
    return Subgroup(parent, ms)


def is_subgroup_members(g: FiniteGroup, members: Sequence[int]) -> bool:
    s = set(members)
    if 0 not in s:
        return False
    if g.order % len(s):
        return False
    t = g.table
    return all(t[a][b] in s for a in s for b in s)


def closure(g: FiniteGroup, seed: Iterable[int]) -> tuple[int, ...]:
    """Subgroup generated by ``seed`` (finiteness supplies inverses)."""
    gens = sorted(set(seed) | {0})
    elems = set(gens)
    frontier = list(gens)
    t = g.table
    while frontier:
        x = frontier.pop()
        for s in gens:
            y = t[x][s]
            if y not in elems:
                elems.add(y)
                frontier.append(y)
    return tuple(sorted(elems))


def generating_sequence(g: FiniteGroup) -> tuple[int, ...]:
    """Greedy small generating sequence, deterministic."""
    got = g._derived.get("gens")
    if got is not None:
        return got
    gens: list[int] = []
    have = {0}
    for a in range(g.order):
        if a not in have:
            gens.append(a)
            have = set(closure(g, gens))
            if len(have) == g.order:
                break
    out = tuple(gens)
    g._derived["gens"] = out
    return out


def conjugate_members(g: FiniteGroup, members: Sequence[int], x: int) -> tuple[int, ...]:
    t, inv = g.table, g.inv
    xi = inv[x]
    return tuple(sorted(t[t[x][m]][xi] for m in members))


def normalizer_members(g: FiniteGroup, members: Sequence[int]) -> tuple[int, ...]:
    mset = set(members)
    sub_gens = _subgroup_generators(g, members)
    t, inv = g.table, g.inv
    out = []
    for x in range(g.order):
        xi = inv[x]
        if all(t[t[x][m]][xi] in mset for m in sub_gens):
            out.append(x)
    return tuple(out)


def _subgroup_generators(g: FiniteGroup, members: Sequence[int]) -> list[int]:
    gens: list[int] = []
    have = {0}
    for a in members:
        if a not in have:
            gens.append(a)
            have = set(closure(g, gens))
            if len(have) == len(members):
                break
    return gens


def is_normal(g: FiniteGroup, members: Sequence[int]) -> bool:
    return len(normalizer_members(g, members)) == g.order


def center(g: FiniteGroup) -> tuple[int, ...]:
    got = g._derived.get("center")
    if got is None:
        t = g.table
        got = tuple(a for a in range(g.order)
                    if all(t[a][b] == t[b][a] for b in range(g.order)))
        g._derived["center"] = got
    return got


def is_solvable(g: FiniteGroup) -> bool:
    got = g._derived.get("solvable")
    if got is not None:
        return got
    t, inv = g.table, g.inv
    current = tuple(range(g.order))
    while True:
        comms = set()
        for a in current:
            for b in current:
                comms.add(t[t[a][b]][t[inv[a]][inv[b]]])
        derived = closure(g, comms)
        if len(derived) == len(current):
            break
        current = derived
    got = len(current) == 1
    g._derived["solvable"] = got
    return got


def derived_subgroup(g: FiniteGroup) -> tuple[int, ...]:
    t, inv = g.table, g.inv
    comms = set()
    for a in range(g.order):
        for b in range(a):
            comms.add(t[t[a][b]][t[inv[a]][inv[b]]])
    return closure(g, comms)


def subgroups(g: FiniteGroup, bound: int = DEFAULT_ORDER_BOUND) -> list[Subgroup]:
    """All subgroups, sorted by (size, member tuple).

    Uses layered cyclic extension: every discovered subgroup U is extended by
    each element of its normalizer, which reaches exactly the subgroups with a
    subnormal cyclic chain, i.e. all solvable subgroups. For a non-solvable
    parent we fall back to joining with cyclic subgroups to a fixpoint, which
    is complete for every finite group. Results are disk-cached by table hash.
    """
    if g.order > bound:
        raise OrderBound(f"|{g.label}| = {g.order} exceeds bound {bound}")
    got = g._derived.get("subgroups")
    if got is not None:
        return got

    cached = _cache.load_lattice(g.fingerprint, g.order)
    if cached is not None:
        subs = [Subgroup(g, tuple(m)) for m in cached[0]]
        g._derived["subgroups"] = subs
        g._derived["class_ids"] = cached[1]
        return subs

    t = g.table
    if is_solvable(g):
        all_subs: dict[tuple, None] = {(0,): None}
        frontier = [(0,)]
        while frontier:
            next_frontier = []
            for u in frontier:
                uset = set(u)
                for x in normalizer_members(g, u):
                    if x in uset:
                        continue
                    # u is normal in <u, x>, so the closure is a coset union
                    v = set(u)
                    y = x
                    while y not in v:
                        v.update(t[m][y] for m in u)
                        y = t[y][x]
                    vt = tuple(sorted(v))
                    if vt not in all_subs:
                        all_subs[vt] = None
                        next_frontier.append(vt)
            frontier = next_frontier
        member_lists = sorted(all_subs, key=lambda m: (len(m), m))
    else:
        cyclics = sorted({closure(g, [a]) for a in range(g.order)})
        all_set = {(0,)} | set(cyclics)
        changed = True
        while changed:
            changed = False
            for u in sorted(all_set):
                for z in cyclics:
                    v = closure(g, set(u) | set(z))
                    if v not in all_set:
                        all_set.add(v)
                        changed = True
        member_lists = sorted(all_set, key=lambda m: (len(m), m))

    subs = [Subgroup(g, m) for m in member_lists]
    g._derived["subgroups"] = subs
    _store_lattice(g, subs)
    return subs


def subgroups_bruteforce(g: FiniteGroup, bound: int = 16) -> list[tuple[int, ...]]:
    """Oracle: enumerate all closed subsets containing 0 by bitmask scan."""
    if g.order > bound:
        raise OrderBound(f"brute-force oracle capped at order {bound}")
    n = g.order
    t = g.table
    out = []
    for mask in range(1, 1 << n):
        if not mask & 1:
            continue
        members = [i for i in range(n) if mask >> i & 1]
        if n % len(members):
            continue
        ok = True
        for a in members:
            row = t[a]
            for b in members:
                if not mask >> row[b] & 1:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.append(tuple(members))
    out.sort(key=lambda m: (len(m), m))
    return out


@dataclass(frozen=True)
class SubgroupClass:
    """A conjugacy class of subgroups; representative is the lex-least member."""

    representative: Subgroup
    members: tuple[tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return len(self.members)


def subgroup_classes(g: FiniteGroup, bound: int = DEFAULT_ORDER_BOUND) -> list[SubgroupClass]:
    got = g._derived.get("subgroup_classes")
    if got is not None:
        return got
    subs = subgroups(g, bound)
    class_ids = g._derived.get("class_ids")
    if class_ids is None:
        index = {s.members: i for i, s in enumerate(subs)}
        seen = [False] * len(subs)
        class_ids = []
        gens = generating_sequence(g)
        for i, s in enumerate(subs):
            if seen[i]:
                continue
            orbit = {s.members}
            frontier = [s.members]
            while frontier:
                m = frontier.pop()
                for x in gens:
                    c = conjugate_members(g, m, x)
                    if c not in orbit:
                        orbit.add(c)
                        frontier.append(c)
            ids = sorted(index[m] for m in orbit)
            for j in ids:
                seen[j] = True
            class_ids.append(ids)
        class_ids.sort(key=lambda ids: (len(subs[ids[0]].members), subs[ids[0]].members))
        g._derived["class_ids"] = class_ids
        _store_lattice(g, subs)
    classes = []
    for ids in class_ids:
        membs = tuple(subs[j].members for j in ids)
        classes.append(SubgroupClass(subs[ids[0]], membs))
    g._derived["subgroup_classes"] = classes
    return classes


def _store_lattice(g: FiniteGroup, subs: list[Subgroup]) -> None:
    class_ids = g._derived.get("class_ids")
    _cache.store_lattice(g.fingerprint, g.order,
                         [list(s.members) for s in subs],
                         class_ids)


def canonical_subgroup_rep(g: FiniteGroup, members: Sequence[int]) -> tuple[int, ...]:
    """Lex-least member tuple in the conjugation orbit of ``members``."""
    ms = tuple(sorted(members))
    if g.is_abelian:
        return ms
    memo = g._derived.setdefault("canon", {})
    got = memo.get(ms)
    if got is not None:
        return got
    best = ms
    orbit = {ms}
    frontier = [ms]
    gens = generating_sequence(g)
    while frontier:
        m = frontier.pop()
        for x in gens:
            c = conjugate_members(g, m, x)
            if c not in orbit:
                orbit.add(c)
                frontier.append(c)
                if c < best:
                    best = c
    for m in orbit:
        memo[m] = best
    return best


# ---------------------------------------------------------------------------
# Cosets and double cosets
# ---------------------------------------------------------------------------

def left_cosets(g: FiniteGroup, members: Sequence[int]) -> list[tuple[int, ...]]:
    """Left cosets x*U, each sorted, listed by minimal element."""
    t = g.table
    seen = [False] * g.order
    out = []
    for x in range(g.order):
        if seen[x]:
            continue
        cs = tuple(sorted(t[x][m] for m in members))
        for y in cs:
            seen[y] = True
        out.append(cs)
    return out


def double_cosets(g: FiniteGroup, u: Subgroup, v: Subgroup) -> list[int]:
    """Least-index representatives of the double cosets U\\G/V."""
    if u.parent is not g or v.parent is not g:
        raise NotSubgroup("double_cosets: subgroups of a different parent")
    key = (u.members, v.members)
    memo = g._derived.setdefault("double_cosets", {})
    got = memo.get(key)
    if got is not None:
        return got
    t = g.table
    seen = [False] * g.order
    reps = []
    for x in range(g.order):
        if seen[x]:
            continue
        reps.append(x)
        for a in u.members:
            ax = t[a][x]
            row = t[ax]
            for b in v.members:
                seen[row[b]] = True
    memo[key] = reps
    return reps


# ---------------------------------------------------------------------------
# Quotients and subgroup-as-group
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GroupHom:
    """A homomorphism as the full image list, one codomain index per element."""

    domain: FiniteGroup
    codomain: FiniteGroup
    images: tuple[int, ...]

    def __call__(self, a: int) -> int:
        return self.images[a]

    def is_hom(self) -> bool:
        td, tc = self.domain.table, self.codomain.table
        im = self.images
        n = self.domain.order
        if im[0] != 0:
            return False
        return all(im[td[a][b]] == tc[im[a]][im[b]]
                   for a in range(n) for b in range(n))

    def is_bijective(self) -> bool:
        return len(set(self.images)) == self.domain.order == self.codomain.order

    def kernel_members(self) -> tuple[int, ...]:
        return tuple(a for a in range(self.domain.order) if self.images[a] == 0)

    def image_members(self) -> tuple[int, ...]:
        return tuple(sorted(set(self.images)))

    def inverse(self) -> "GroupHom":
        assert self.is_bijective()
        inv = [0] * self.codomain.order
        for a, b in enumerate(self.images):
            inv[b] = a
        return GroupHom(self.codomain, self.domain, tuple(inv))

    def then(self, other: "GroupHom") -> "GroupHom":
        """Composite ``other . self`` (apply self first)."""
        assert self.codomain is other.domain
        return GroupHom(self.domain, other.codomain,
                        tuple(other.images[x] for x in self.images))


def identity_hom(g: FiniteGroup) -> GroupHom:
    return GroupHom(g, g, tuple(range(g.order)))


def sub_as_group(s: Subgroup) -> tuple[FiniteGroup, GroupHom]:
    """The subgroup as its own FiniteGroup plus the inclusion hom."""
    memo = s.parent._derived.setdefault("subgroup_groups", {})
    got = memo.get(s.members)
    if got is not None:
        return got
    local = {m: i for i, m in enumerate(s.members)}
    t = s.parent.table
    table = [[local[t[a][b]] for b in s.members] for a in s.members]
    grp = FiniteGroup(f"{s.parent.label}!{len(s.members)}.{s.members[1] if len(s.members) > 1 else 0}",
                      table)
    incl = GroupHom(grp, s.parent, s.members)
    memo[s.members] = (grp, incl)
    return grp, incl


def quotient_group(g: FiniteGroup, n: Subgroup) -> tuple[FiniteGroup, GroupHom]:
    """Quotient by a normal subgroup; cosets ordered by least element."""
    if n.parent is not g:
        raise NotSubgroup("quotient_group: subgroup of a different parent")
    if not is_normal(g, n.members):
        raise NotNormal(f"{list(n.members)} is not normal in {g.label}")
    memo = g._derived.setdefault("quotients", {})
    got = memo.get(n.members)
    if got is not None:
        return got
    cosets = left_cosets(g, n.members)
    cosets.sort(key=lambda c: c[0])
    coset_of = [0] * g.order
    for i, cs in enumerate(cosets):
        for x in cs:
            coset_of[x] = i
    t = g.table
    table = [[coset_of[t[a[0]][b[0]]] for b in cosets] for a in cosets]
    q = FiniteGroup(f"{g.label}/{len(n.members)}", table)
    proj = GroupHom(g, q, tuple(coset_of))
    memo[n.members] = (q, proj)
    return q, proj


# ---------------------------------------------------------------------------
# Conjugacy classes of elements
# ---------------------------------------------------------------------------

def conjugacy_classes(g: FiniteGroup) -> list[tuple[int, ...]]:
    """Element conjugacy classes, each sorted, ordered by least element."""
    got = g._derived.get("conj_classes")
    if got is not None:
        return got
    gens = generating_sequence(g)
    seen = [False] * g.order
    classes = []
    for a in range(g.order):
        if seen[a]:
            continue
        orbit = {a}
        frontier = [a]
        while frontier:
            x = frontier.pop()
            for s in gens:
                y = g.conj(s, x)
                if y not in orbit:
                    orbit.add(y)
                    frontier.append(y)
        cls = tuple(sorted(orbit))
        for y in cls:
            seen[y] = True
        classes.append(cls)
    g._derived["conj_classes"] = classes
    return classes


def class_index_map(g: FiniteGroup) -> tuple[int, ...]:
    got = g._derived.get("class_index")
    if got is None:
        idx = [0] * g.order
        for i, cls in enumerate(conjugacy_classes(g)):
            for x in cls:
                idx[x] = i
        got = tuple(idx)
        g._derived["class_index"] = got
    return got


# ---------------------------------------------------------------------------
# Homomorphism enumeration, automorphisms, isomorphism testing
# ---------------------------------------------------------------------------

def _word_plan(g: FiniteGroup, gens: Sequence[int]) -> list[tuple[int, int, int]]:
    """BFS derivations (element, predecessor, generator position) covering G."""
    known = {0}
    plan = []
    order = [0]
    i = 0
    while i < len(order):
        x = order[i]
        for j, s in enumerate(gens):
            y = g.table[x][s]
            if y not in known:
                known.add(y)
                order.append(y)
                plan.append((y, x, j))
        i += 1
    assert len(known) == g.order, "gens do not generate"
    return plan


def _induced_map(g: FiniteGroup, h: FiniteGroup, gens: Sequence[int],
                 plan: Sequence[tuple[int, int, int]],
                 images: Sequence[int]) -> list[int]:
    img = [0] * g.order
    for j, s in enumerate(gens):
        img[s] = images[j]
    th = h.table
    for y, x, j in plan:
        img[y] = th[img[x]][images[j]]
    return img


def _hom_candidates(g: FiniteGroup, h: FiniteGroup, gens: Sequence[int],
                    exact_order: bool) -> list[list[int]]:
    cands = []
    for s in gens:
        o = g.element_order(s)
        if exact_order:
            cs = [x for x in range(h.order) if h.element_order(x) == o]
        else:
            cs = [x for x in range(h.order) if o % h.element_order(x) == 0]
        cands.append(cs)
    return cands


def all_homs(g: FiniteGroup, h: FiniteGroup, *, surjective: bool = False,
             bijective: bool = False, first_only: bool = False) -> list[GroupHom]:
    """Enumerate homomorphisms G -> H by generator images, fully verified."""
    gens = generating_sequence(g)
    if not gens:  # trivial G
        hom = GroupHom(g, h, (0,) * g.order)
        if (surjective or bijective) and h.order != 1:
            return []
        return [hom]
    plan = _word_plan(g, gens)
    cands = _hom_candidates(g, h, gens, exact_order=bijective)
    out: list[GroupHom] = []
    th = h.table

    def verify(img: list[int]) -> bool:
        tg = g.table
        n = g.order
        for a in range(n):
            ia = img[a]
            ra = tg[a]
            rh = th[ia]
            for b in range(n):
                if img[ra[b]] != rh[img[b]]:
                    return False
        return True

    import itertools
    for images in itertools.product(*cands):
        img = _induced_map(g, h, gens, plan, images)
        if bijective and len(set(img)) != h.order:
            continue
        if surjective and len(set(img)) != h.order:
            continue
        if not verify(img):
            continue
        hom = GroupHom(g, h, tuple(img))
        out.append(hom)
        if first_only:
            return out
    return out


def automorphisms(g: FiniteGroup, bound: int = DEFAULT_ORDER_BOUND) -> tuple[list[GroupHom], list[GroupHom], int]:
    """All automorphisms, the inner ones, and |Out(G)|."""
    if g.order > bound:
        raise OrderBound(f"|{g.label}| exceeds bound {bound}")
    got = g._derived.get("automorphisms")
    if got is not None:
        return got
    if g.order != 1:
        auts = all_homs(g, g, bijective=True)
    else:
        auts = [identity_hom(g)]
    inner_images = set()
    inner = []
    for x in range(g.order):
        im = tuple(g.conj(x, a) for a in range(g.order))
        if im not in inner_images:
            inner_images.add(im)
            inner.append(GroupHom(g, g, im))
    out_order = len(auts) // len(inner)
    assert len(auts) % len(inner) == 0
    got = (auts, inner, out_order)
    g._derived["automorphisms"] = got
    return got


def order_profile(g: FiniteGroup) -> tuple[tuple[int, int], ...]:
    counts: dict[int, int] = {}
    for a in range(g.order):
        o = g.element_order(a)
        counts[o] = counts.get(o, 0) + 1
    return tuple(sorted(counts.items()))


def is_isomorphic(g: FiniteGroup, h: FiniteGroup,
                  bound: int = DEFAULT_ORDER_BOUND) -> Optional[GroupHom]:
    """An isomorphism G -> H if one exists, else None. Deterministic witness."""
    if g.order > bound or h.order > bound:
        raise OrderBound("isomorphism test beyond order bound")
    if g.order != h.order:
        return None
    if g.is_abelian != h.is_abelian:
        return None
    if order_profile(g) != order_profile(h):
        return None
    homs = all_homs(g, h, bijective=True, first_only=True)
    return homs[0] if homs else None


def all_isomorphisms(g: FiniteGroup, h: FiniteGroup) -> list[GroupHom]:
    if g.order != h.order or order_profile(g) != order_profile(h):
        return []
    return all_homs(g, h, bijective=True)


# ---------------------------------------------------------------------------
# Number theory
# ---------------------------------------------------------------------------

def mobius_int(n: int) -> int:
    """Number-theoretic Moebius function."""
    if n < 1:
        raise ValueError("mobius_int needs n >= 1")
    result = 1
    d = 2
    while d * d <= n:
        if n % d == 0:
            n //= d
            if n % d == 0:
                return 0
            result = -result
        d += 1
    if n > 1:
        result = -result
    return result
