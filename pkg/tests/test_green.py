from fractions import Fraction

import pytest

from bisetkit.catalog import group_by_name
from bisetkit.errors import CatalogInsufficient, NotDivisor
from bisetkit.green import (
    RBBackend,
    RBCBackend,
    RQBackend,
    CRCBackend,
    ahat_dim,
    check_out_iso,
    crc_product_span,
    ell_kernel_dim_from_span,
    get_backend,
    ideal_span,
    kernel_of_reduction,
    primitive_characters,
    seeds_kRQ,
    transport_seed,
    unit_characters,
    units_mod,
    xn_element,
    xn_ideal_dim,
)
from bisetkit.groups import make_group


def test_units_and_characters():
    assert units_mod(1) == [1]
    assert units_mod(8) == [1, 3, 5, 7]
    assert units_mod(12) == [1, 5, 7, 11]
    for m in range(1, 25):
        chars = unit_characters(m)
        assert len(chars) == len(units_mod(m))
        # characters are pairwise distinct
        assert len({c.values for c in chars}) == len(chars)


def test_unit_characters_multiplicative():
    for m in (5, 8, 9, 12, 15):
        units = units_mod(m)
        e_chars = unit_characters(m)
        for ch in e_chars:
            for a in units:
                for b in units:
                    lhs = ch.value_exponent(a * b % m)
                    rhs = (ch.value_exponent(a) + ch.value_exponent(b)) % ch.exponent
                    assert lhs == rhs


def test_xn_examples():
    assert xn_element(4, 2) == {1: Fraction(1), 3: Fraction(1)}
    assert xn_element(8, 4) == {1: Fraction(1), 5: Fraction(1)}
    assert xn_element(6, 3) == {1: Fraction(1)}
    with pytest.raises(NotDivisor):
        xn_element(6, 4)
    with pytest.raises(NotDivisor):
        xn_element(6, 6)


def test_kernel_of_reduction():
    assert kernel_of_reduction(12, 4) == [1, 5]
    assert kernel_of_reduction(12, 3) == [1, 7]
    assert kernel_of_reduction(10, 5) == [1]


def test_primitive_character_counts():
    assert len(primitive_characters(1)) == 1
    assert len(primitive_characters(2)) == 0
    assert len(primitive_characters(8)) == 2
    # m = 8: primitive characters are exactly those nontrivial at 5
    for ch in primitive_characters(8):
        assert ch.value_exponent(5) != 0
    assert len(primitive_characters(6)) == 0
    assert len(primitive_characters(10)) == 0  # Ker pi_{10,5} is trivial


def test_seed_counts_and_keys():
    seeds = seeds_kRQ(12)
    counts = {}
    for s in seeds:
        counts[s.m] = counts.get(s.m, 0) + 1
    assert counts.get(1) == 1
    assert 2 not in counts
    assert counts.get(3) == 1
    assert counts.get(6) is None
    assert counts.get(11) == 9
    # distinct keys
    assert len({s.key() for s in seeds}) == len(seeds)


def test_seed_transport_is_identity():
    for s in seeds_kRQ(8):
        for u in units_mod(s.m):
            assert transport_seed(s, u).key() == s.key()


def test_seeds_verify_against_ideal():
    seeds = seeds_kRQ(4, verify_ideal_up_to=4)  # asserts internally
    assert len([s for s in seeds if s.m == 4]) == 1


def test_ideal_span_rb_trivial_group():
    rep = ideal_span(RBBackend(), make_group("cyclic", 1))
    assert rep.ideal_dim == 0
    assert rep.quotient_dim == 1
    assert rep.ambient_dim == 1


def test_ideal_span_rb_c2():
    rep = ideal_span(RBBackend(), make_group("cyclic", 2))
    assert rep.ambient_dim == 5
    assert rep.quotient_dim == 1


def test_ideal_span_rb_klein():
    rep = ideal_span(RBBackend(), make_group("klein4"))
    assert rep.quotient_dim == 6


def test_check_out_iso_small():
    for name in ("C2", "C3", "V4"):
        rep = check_out_iso(group_by_name(name))
        assert rep["match"], rep


def test_ahat_rq_values():
    rq = RQBackend()
    assert ahat_dim(rq, make_group("cyclic", 2)) == 0
    assert ahat_dim(rq, make_group("cyclic", 4)) == 1
    assert ahat_dim(rq, group_by_name("S3")) == 0


def test_ell_kernel_matches_xn_ideal():
    for m in (1, 2, 3, 4, 6):
        h = make_group("cyclic", m)
        assert ell_kernel_dim_from_span(h) == xn_ideal_dim(m)


def test_ideal_span_confirms_primitive_counts_m9_m10():
    # the direct span computation settles the seed counts where the
    # kernel-trivial degeneracy bites: C9 keeps 4 classes, C10 collapses to 0
    assert ahat_dim(RQBackend(), make_group("cyclic", 9)) == 4
    assert len(primitive_characters(9)) == 4
    assert ahat_dim(RQBackend(), make_group("cyclic", 10)) == 0
    assert len(primitive_characters(10)) == 0


def test_catalog_insufficient():
    with pytest.raises(CatalogInsufficient):
        ideal_span(RQBackend(), make_group("cyclic", 17))


def test_identity_nonzero_in_quotient_rb():
    backend = RBBackend()
    for name in ("C2", "C3", "C4"):
        h = group_by_name(name)
        from bisetkit.green import _ideal_rowspace
        space = _ideal_rowspace(backend, h)
        assert not space.contains(backend.identity(h))


def test_ideal_is_two_sided_spot():
    # closing the span under composition with ambient basis elements stays inside
    backend = RBBackend()
    h = make_group("cyclic", 3)
    from bisetkit.green import _ideal_rowspace
    space = _ideal_rowspace(backend, h)
    rows = [list(r) for r in space.pivots.values()]
    dim_hh = len(backend.basis_labels(h, h))
    for row in rows[:4]:
        for i in range(dim_hh):
            basis_vec = backend.basis_vector(h, h, i)
            left = backend.compose(h, h, h, basis_vec, row)
            right = backend.compose(h, h, h, row, basis_vec)
            assert space.contains(left)
            assert space.contains(right)


def test_crc_product_span_examples():
    c1 = make_group("cyclic", 1)
    c2 = make_group("cyclic", 2)
    s3 = group_by_name("S3")
    assert crc_product_span(c1, c1)["match"]
    rep = crc_product_span(c2, c2)
    assert (rep["product_rank"], rep["target_dim"]) == (4, 4)
    rep = crc_product_span(s3, c2)
    assert (rep["product_rank"], rep["target_dim"]) == (6, 6)


def test_crc_backend_ahat_trivial_group():
    rep = ideal_span(CRCBackend(), make_group("cyclic", 1))
    assert rep.quotient_dim == 1


def test_crc_backend_ahat_vanishes_beyond_trivial():
    rep = ideal_span(CRCBackend(), make_group("cyclic", 2))
    assert rep.quotient_dim == 0
    rep = ideal_span(CRCBackend(), make_group("cyclic", 3))
    assert rep.quotient_dim == 0


def test_rbc_backend_quotient_contains_twisted_diagonals():
    c2 = make_group("cyclic", 2)
    backend = RBCBackend(c2)
    h = c2
    from bisetkit.green import _ideal_rowspace
    space = _ideal_rowspace(backend, h)
    # both D_{id, zeta} classes stay outside the ideal: the quotient is nonzero
    from bisetkit.dress import d_theta_zeta
    from bisetkit.groups import GroupHom, automorphisms
    auts, _, _ = automorphisms(h)
    labels = backend.basis_labels(h, h)
    for zeta_images in [(0, 0), (0, 1)]:
        zeta = GroupHom(c2, h, zeta_images)
        d = d_theta_zeta(h, c2, auts[0], zeta)
        vec = backend.basis_vector(h, h, labels.index(d.canonical_rep()))
        assert not space.contains(vec)
    rep = ideal_span(backend, h)
    assert rep.quotient_dim > 0


def test_backend_identity_laws():
    c2 = make_group("cyclic", 2)
    c3 = make_group("cyclic", 3)
    for backend in (RBBackend(), RQBackend(), CRCBackend()):
        iden = backend.identity(c2)
        for i in range(len(backend.basis_labels(c2, c3))):
            v = backend.basis_vector(c2, c3, i)
            assert backend.compose(c2, c2, c3, iden, v) == v
        for i in range(len(backend.basis_labels(c3, c2))):
            v = backend.basis_vector(c3, c2, i)
            assert backend.compose(c3, c2, c2, v, iden) == v


def test_backend_compose_associative_spot():
    c2 = make_group("cyclic", 2)
    for backend in (RBBackend(), RQBackend()):
        vs_ab = [backend.basis_vector(c2, c2, i)
                 for i in range(len(backend.basis_labels(c2, c2)))]
        for a in vs_ab[:3]:
            for b in vs_ab[:3]:
                for c in vs_ab[:3]:
                    ab = backend.compose(c2, c2, c2, a, b)
                    bc = backend.compose(c2, c2, c2, b, c)
                    assert backend.compose(c2, c2, c2, ab, c) == \
                        backend.compose(c2, c2, c2, a, bc)


def test_get_backend_dispatch():
    assert get_backend("rb").name == "rb"
    assert get_backend("rq").name == "rq"
    assert get_backend("crc").name == "crc"
    assert get_backend("rbc", make_group("cyclic", 2)).name == "rbc"
    with pytest.raises(ValueError):
        get_backend("nope")
