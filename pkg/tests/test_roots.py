import pytest

from nilcone.errors import ConfigurationError, DomainError
from nilcone.roots import build_datum, supported_presets

EXPECTED = {
    # preset -> (rank, number of positive roots, Weyl order)
    "A1-sc": (1, 1, 2),
    "A1-adj": (1, 1, 2),
    "A2-sc": (2, 3, 6),
    "A2-adj": (2, 3, 6),
    "A3-sc": (3, 6, 24),
    "B2-sc": (2, 4, 8),
    "G2": (2, 6, 12),
}


@pytest.mark.parametrize("preset", sorted(EXPECTED))
def test_preset_shape(preset):
    rank, n_pos, w_order = EXPECTED[preset]
    datum = build_datum(preset)
    assert datum.rank == rank
    assert len(datum.positive_roots()) == n_pos
    assert datum.weyl_order() == w_order


def test_unknown_preset_names_supported():
    with pytest.raises(ConfigurationError) as err:
        build_datum("E8-sc")
    for name in supported_presets():
        assert name in str(err.value)


def test_a1_defining_data(a1):
    (root,) = a1.positive_roots()
    assert a1.pair(root.weight, root.coroot) == 2


def test_adjoint_lattice_is_root_lattice(a1_adj):
    # the fundamental weight has pairing 1, which is not in the lattice
    with pytest.raises(DomainError):
        a1_adj.weight_from_pairing((1,))
    assert a1_adj.weight_from_pairing((2,)) == (1,)


def test_positive_roots_order_graded(a2):
    heights = [r.height for r in a2.positive_roots()]
    assert heights == sorted(heights)
    assert [r.root_coords for r in a2.positive_roots()] == \
        [(0, 1), (1, 0), (1, 1)]


def test_dominant_conjugate_rank1(a1):
    w, lam = a1.dominant_conjugate((-3,))
    assert lam == (3,) and w.length == 1


def test_dominant_conjugate_identity_on_dominant(a2):
    w, lam = a2.dominant_conjugate((2, 5))
    assert w.length == 0 and lam == (2, 5)


def test_dominant_conjugate_longest(a2):
    w, lam = a2.dominant_conjugate((-1, -1))
    assert lam == (1, 1)
    assert w.length == a2.longest_element().length


def test_dominant_conjugate_idempotent(b2):
    for weight in [(-3, 2), (1, -4), (-1, -1)]:
        w, dom = b2.dominant_conjugate(weight)
        w2, dom2 = b2.dominant_conjugate(dom)
        assert w2.length == 0 and dom2 == dom


@pytest.mark.parametrize("preset", sorted(EXPECTED))
def test_longest_element_involution(preset):
    datum = build_datum(preset)
    w0 = datum.longest_element()
    for weight in [datum.simple_roots[0], tuple(range(1, datum.weight_dim + 1))]:
        assert w0.apply(w0.apply(weight)) == tuple(weight)


@pytest.mark.parametrize("preset", sorted(EXPECTED))
def test_pairing_parity_constant_on_orbits(preset):
    datum = build_datum(preset)
    weight = tuple(range(1, datum.weight_dim + 1))
    base = datum.pair_2rho_check(weight)
    for w in datum.weyl_elements():
        assert (datum.pair_2rho_check(w.apply(weight)) - base) % 2 == 0


def test_pair_2rho_examples(a1, a2):
    assert a1.pair_2rho_check((1,)) == 1
    assert a1.pair_2rho_check((0,)) == 0
    # sum over the three positive coroots: 1 + 1 + 2
    rho = (1, 1)
    assert a2.pair_2rho_check(rho) == 4


def test_weyl_words_are_reduced(b2):
    # matrix built from the recorded word must reproduce the element
    for w in b2.weyl_elements():
        acc = tuple(range(1, b2.weight_dim + 1))
        vec = tuple(acc)
        for i in reversed(w.word):
            vec = b2.reflect(vec, i)
        assert vec == w.apply(acc)


def test_weyl_matrices_permute_roots(g2):
    roots = {r.weight for r in g2.positive_roots()}
    roots |= {tuple(-c for c in r.weight) for r in g2.positive_roots()}
    for w in g2.weyl_elements():
        assert {w.apply(r) for r in roots} == roots


def test_levi_subset_validation(a2):
    with pytest.raises(DomainError):
        a2.levi((5,))


def test_height_function(a2, b2):
    assert a2.height(a2.highest_root().weight) == 2
    assert b2.height(b2.highest_root().weight) == 3
    with pytest.raises(DomainError):
        a2.levi((0,)).height((0, 1))  # not in the Levi root span
