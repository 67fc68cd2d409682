from collections import Counter

from uqsl2.center import element_to_vec
from uqsl2.hh0 import verify_hh0


def test_commutator_subspace(tower23):
    p = tower23.p
    hh = tower23.hh0
    U = tower23.U
    assert U.dim - hh.commutators.dim == 3 * p - 1
    comm = U.E() * U.F() - U.F() * U.E()
    assert hh.commutators.contains(element_to_vec(comm))
    assert not hh.commutators.contains(element_to_vec(U.one_elt()))


def test_idempotent_family(tower23):
    p = tower23.p
    hh = tower23.hh0
    U = tower23.U
    total = U.zero_elt()
    for z, _ in hh.idempotents:
        assert z * z == z
        total = total + z
    assert total == U.one_elt()
    counts = Counter(lab for _, lab in hh.idempotents)
    for k in range(1, p + 1):
        for sg in (1, -1):
            assert counts[(k, sg)] == k
    if p == 2:
        # one f each for the 1-dimensional heads, two each for the others
        assert sorted(counts.values()) == [1, 1, 2, 2]
    # orthogonality, exhaustively
    for i, (a, _) in enumerate(hh.idempotents):
        for b, _ in hh.idempotents[i + 1:]:
            assert not (a * b) and not (b * a)


def test_idempotent_ranks(tower23):
    hh = tower23.hh0
    for z, lab in hh.idempotents:
        for lab2, V in tower23.simples.items():
            rank = V.act(z).rank()
            assert rank == (1 if lab2 == lab else 0)


def test_hh0_suite(tower23):
    rep = verify_hh0(tower23.hh0, tower23.center)
    assert rep.ok, [i.name for i in rep.failures()]


def test_class_coordinates(tower23):
    p = tower23.p
    hh = tower23.hh0
    f = tower23.field
    coords = hh.class_of(tower23.U.one_elt())
    want = [f.rational(k) for k in range(1, p + 1)] * 2 + [f.zero] * (p - 1)
    assert coords == want
    # basis classes have unit coordinates
    for idx, name in enumerate(hh.basis_names()):
        coords = hh.class_of(hh.representative(name))
        assert coords[idx] == f.one
        assert all(not c for i, c in enumerate(coords) if i != idx)
