"""Integer matrix and finite abelian group layer, tested against brute force."""

import itertools
from math import gcd, prod

import pytest
from hypothesis import given, settings, strategies as st

from dinv.exact import (FinAbGroup, GroupMap, IntMatrix, all_subgroups,
                        close_under_group, cokernel, epimorphisms,
                        group_from_factors, homomorphisms, isomorphisms,
                        odd_square_factorizations, smith_normal_form,
                        smith_normal_form_with_inverse, subgroup_from_elements,
                        subgroups_of_order)


# --- Smith normal form ------------------------------------------------------

@pytest.mark.parametrize("mat,diag", [
    ([[2, 0], [0, 3]], [1, 6]),
    ([[1]], [1]),
    ([[3, 1], [1, 2]], [1, 5]),
])
def test_snf_examples(mat, diag):
    M = IntMatrix(mat)
    U, D, V = smith_normal_form(M)
    assert U * M * V == D
    assert abs(U.det()) == 1 and abs(V.det()) == 1
    assert [D[i, i] for i in range(D.rows)] == diag


@settings(max_examples=150, deadline=None)
@given(st.integers(1, 4), st.integers(1, 4), st.data())
def test_snf_random(n, m, data):
    entries = [[data.draw(st.integers(-15, 15)) for _ in range(m)] for _ in range(n)]
    M = IntMatrix(entries)
    U, D, V, Uinv = smith_normal_form_with_inverse(M)
    assert U * M * V == D
    assert U * Uinv == IntMatrix.identity(n)
    assert abs(U.det()) == 1 and abs(V.det()) == 1
    ds = [D[i, j] for i in range(D.rows) for j in range(D.cols) if i != j]
    assert all(x == 0 for x in ds)
    diag = [D[i, i] for i in range(min(n, m))]
    assert all(d >= 0 for d in diag)
    for a, b in zip(diag, diag[1:]):
        if a != 0:
            assert b % a == 0


def test_bareiss_determinant_matches_snf():
    M = IntMatrix([[4, -1, -1, -1], [-1, 4, -1, -1], [-1, -1, 3, 0], [-1, -1, 0, 3]])
    _, D, _ = smith_normal_form(M)
    assert abs(M.det()) == prod(D[i, i] for i in range(4)) == 75


# --- cokernels ---------------------------------------------------------------

def test_cokernel_examples():
    assert cokernel(IntMatrix([[33]])).factors == (33,)
    # Goeritz presentation of the double cover of the P(3,3,3) pretzel
    assert cokernel(IntMatrix([[6, -3], [-3, 6]])).factors == (3, 9)
    assert cokernel(IntMatrix([[5, 0], [0, 5]])).factors == (5, 5)


def test_cokernel_singular_errors():
    with pytest.raises(ZeroDivisionError):
        cokernel(IntMatrix([[1, 1], [1, 1]]))


# --- subgroups ---------------------------------------------------------------

def brute_subgroups(G):
    """Closures of all generator subsets of size <= number of factors."""
    els = G.elements()
    seen = {frozenset({G.zero})}
    for size in range(1, len(G.factors) + 1):
        for combo in itertools.combinations(els, size):
            seen.add(close_under_group(G, combo))
    return seen


@pytest.mark.parametrize("factors,n,count", [
    ([3, 9], 9, 4),        # four subgroups of order 9
    ([3, 15], 5, 1),       # the unique order 5 subgroup
    ([33], 3, 1),
    ([33], 11, 1),
    ([33], 33, 1),
])
def test_subgroup_counts(factors, n, count):
    G = group_from_factors(factors)
    subs = subgroups_of_order(G, n)
    assert len(subs) == count
    for H in subs:
        assert len(H.elements) == n
        els = set(H.elements)
        assert G.zero in els
        for a in els:
            assert G.neg(a) in els
            for b in els:
                assert G.add(a, b) in els


def test_subgroups_nondivisor_is_empty():
    G = group_from_factors([3, 9])
    assert subgroups_of_order(G, 5) == []


@pytest.mark.parametrize("factors", [[9], [3, 3], [27], [3, 9], [45], [3, 15], [2, 4], [81]])
def test_subgroup_enumeration_vs_bruteforce(factors):
    G = group_from_factors(factors)
    assert G.order <= 81
    ours = {frozenset(h.elements) for h in all_subgroups(G)}
    assert ours == brute_subgroups(G)


def test_subgroup_invariant_factors():
    G = group_from_factors([3, 9])
    subs = subgroups_of_order(G, 9)
    kinds = sorted(h.factors for h in subs)
    assert kinds == [(3, 3), (9,), (9,), (9,)]
    for H in subs:
        coords = H.coordinates()
        assert len(coords) == 9
        # generators realize the claimed decomposition
        assert prod(H.factors) == 9


# --- homomorphisms -----------------------------------------------------------

def brute_epimorphism_count(factors, r):
    """All maps defined on generators, verified as surjective homs by table."""
    G = group_from_factors(factors)
    target = group_from_factors([r])
    count = 0
    cands = [target.elements()] * len(G.factors)
    for images in itertools.product(*cands):
        # well defined iff order of image divides generator order
        if any(target.scale(e, im) != target.zero
               for e, im in zip(G.factors, images)):
            continue
        seen = set()
        for el in G.elements():
            out = target.zero
            for c, im in zip(el, images):
                out = target.add(out, target.scale(c, im))
            seen.add(out)
        if len(seen) == target.order:
            count += 1
    return count


@pytest.mark.parametrize("factors,r,count", [
    ([9], 3, 2),
    ([3, 3], 3, 8),
    ([3, 9], 2, 0),
    ([3, 15], 5, 4),
    ([45], 15, 8),
])
def test_epimorphism_counts(factors, r, count):
    G = group_from_factors(factors)
    eps = epimorphisms(G, r)
    assert len(eps) == count
    assert count == brute_epimorphism_count(factors, r)
    for phi in eps:
        assert len(phi.image_elements()) == max(r, 1)


def test_epimorphisms_on_subgroup():
    G = group_from_factors([3, 15])
    H = subgroups_of_order(G, 15)[0]
    eps = epimorphisms(H, 5)
    assert len(eps) == 4
    for phi in eps:
        imgs = {phi.apply(el) for el in H.elements}
        assert len(imgs) == 5


def test_epimorphism_r1_trivial_target():
    G = group_from_factors([9])
    eps = epimorphisms(G, 1)
    assert len(eps) == 1
    assert eps[0].apply((4,)) == ()


# --- isomorphisms ------------------------------------------------------------

def test_isomorphism_counts():
    G17 = group_from_factors([17])
    assert len(isomorphisms(G17, G17)) == 16
    assert isomorphisms(group_from_factors([3, 9]), group_from_factors([27])) == []
    G33 = group_from_factors([33])
    # Euler phi(33) = 20 by brute force over units
    units = [u for u in range(1, 33) if gcd(u, 33) == 1]
    assert len(isomorphisms(G33, G33)) == len(units) == 20


def test_isomorphisms_form_group_under_composition():
    G = group_from_factors([3, 9])
    isos = isomorphisms(G, G)
    keyset = {phi.images for phi in isos}
    sample = isos[:6] + isos[-4:]
    for phi in sample:
        for psi in sample:
            comp = tuple(psi.apply(phi.apply(e))
                         for e in (tuple(1 if i == j else 0 for j in range(2))
                                   for i in range(2)))
            assert comp in keyset


def test_noncyclic_isomorphisms_bijective():
    G = group_from_factors([3, 9])
    for phi in isomorphisms(G, G):
        assert phi.is_injective() and phi.is_surjective()


# --- misc --------------------------------------------------------------------

def test_odd_square_factorizations():
    assert odd_square_factorizations(45) == [(45, 1), (5, 3)]
    assert odd_square_factorizations(25) == [(25, 1), (1, 5)]
    assert odd_square_factorizations(33) == [(33, 1)]


def test_group_from_factors_normalizes():
    assert group_from_factors([2, 3]).factors == (6,)
    assert group_from_factors([1, 1]).factors == ()
    assert group_from_factors([3, 15]).factors == (3, 15)
    assert group_from_factors([15, 3]).factors == (3, 15)
