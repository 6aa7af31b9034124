import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from birotary.constructions import cyclic, symmetric_group
from birotary.errors import CapExceeded, InvalidAction
from birotary.extension import Block, SplitExtension


def _examples():
    return {
        "dihedral-ish": SplitExtension([Block(9), Block(5)], cyclic(2), [[-1, -1]], name="E1"),
        "plane": SplitExtension([Block(3, 2)], cyclic(3), [[[[0, 1], [2, 2]]]], name="E2"),
        "s3-on-7": SplitExtension([Block(7)], symmetric_group(3), [[-1], [1]], name="E3"),
    }


EXTS = _examples()


def _element(ext, data):
    parts = []
    for b in ext.blocks:
        vec = data.draw(st.lists(st.integers(0, b.modulus - 1), min_size=b.dim, max_size=b.dim))
        parts.append(vec if b.dim > 1 else vec[0])
    q = data.draw(st.sampled_from(ext.Q.materialize()))
    return ext.mul(ext.normal(*parts), ext.complement(q))


@pytest.mark.parametrize("key", sorted(EXTS))
@settings(max_examples=40, deadline=None)
@given(data=st.data())
def test_arithmetic_matches_permutation_model(key, data):
    ext = EXTS[key]
    G, to_perm = ext.permutation_representation()
    assert G.order() == ext.group_order()
    g, h = _element(ext, data), _element(ext, data)
    pg, ph = to_perm(g), to_perm(h)
    assert pg in G and ph in G
    assert to_perm(ext.mul(g, h)) == pg * ph
    assert to_perm(ext.inv(g)) == ~pg
    assert ext.order(g) == pg.order()
    assert to_perm(ext.commutator(g, h)) == ~pg * ~ph * pg * ph
    assert to_perm(ext.conjugate(g, h)) == pg.conjugate(ph)
    e = data.draw(st.integers(-5, 20))
    assert to_perm(ext.power(g, e)) == pg ** e


def test_group_order_and_identity():
    ext = EXTS["dihedral-ish"]
    assert ext.group_order() == 90 and ext.normal_size() == 45
    g = ext.normal(1, 1)
    assert ext.mul(g, ext.identity) == g == ext.mul(ext.identity, g)
    assert ext.order(g) == 45


def test_huge_moduli_stay_exact():
    n = 23 ** 40
    ext = SplitExtension([Block(n)], cyclic(2), [[-1]])
    a = ext.normal(1)
    b = ext.complement(cyclic(2).generators[0])
    assert ext.order(a) == n
    assert ext.order(ext.mul(a, b)) == 2
    c = ext.commutator(a, b)
    assert ext.order(c) == n  # [a, b] = a^-2 and n is odd
    assert ext.group_order() == 2 * n
    with pytest.raises(CapExceeded):
        ext.permutation_representation()


def test_invalid_actions():
    with pytest.raises(InvalidAction):
        SplitExtension([Block(5)], cyclic(2), [[2]])  # 2 has order 4 mod 5
    with pytest.raises(InvalidAction):
        SplitExtension([Block(5)], cyclic(2), [])
    with pytest.raises(InvalidAction):
        SplitExtension([Block(5), Block(3)], cyclic(2), [[-1]])
    with pytest.raises(InvalidAction):
        SplitExtension([Block(3, 2)], cyclic(2), [[[[1, 0]]]])
