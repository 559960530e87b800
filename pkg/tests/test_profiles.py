"""Profile constructors against the published lists and their symmetries."""

from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from dinv.exact import FinAbGroup, group_from_factors, subgroups_of_order
from dinv.profiles import (DProfile, connected_sum, lens_d, negate,
                           parse_profile, restrict, serialize_profile,
                           unknot_half_surgery_d)
from dinv.lattice import QuadForm, d_from_sharp

# the published 33 correction terms of the double cover of 9_10 (L(33,23))
PAPER_9_10 = [F(-1), F(-23, 33), F(7, 33), F(-3, 11), F(-5, 33), F(19, 33),
              F(-1, 11), F(-5, 33), F(13, 33), F(-5, 11), F(-23, 33),
              F(-1, 3), F(7, 11), F(7, 33), F(13, 33), F(13, 11), F(19, 33),
              F(19, 33), F(13, 11), F(13, 33), F(7, 33), F(7, 11),
              F(-1, 3), F(-23, 33), F(-5, 11), F(13, 33), F(-5, 33),
              F(-1, 11), F(19, 33), F(-5, 33), F(-3, 11), F(7, 33), F(-23, 33)]

# the published 17 correction terms of the double cover of 8_3 (L(17,4)),
# in cyclic order from the spin structure
PAPER_8_3 = [F(0), F(4, 17), F(16, 17), F(2, 17), F(-4, 17), F(-2, 17),
             F(8, 17), F(-8, 17), F(-16, 17), F(-16, 17), F(-8, 17), F(8, 17),
             F(-2, 17), F(-4, 17), F(2, 17), F(16, 17), F(4, 17)]

# the published d-invariants of r/2 surgery on the unknot
PAPER_SURGERY_17 = [F(0), F(-8, 17), F(2, 17), F(-4, 17), F(8, 17), F(4, 17),
                    F(18, 17), F(16, 17), F(32, 17), F(32, 17), F(16, 17),
                    F(18, 17), F(4, 17), F(8, 17), F(-4, 17), F(2, 17), F(-8, 17)]
PAPER_SURGERY_5 = [F(0), F(-2, 5), F(2, 5), F(2, 5), F(-2, 5)]
PAPER_SURGERY_3 = [F(-1, 2), F(1, 6), F(1, 6)]


def test_lens_9_10_multiset():
    P = lens_d(33, 23, +1)
    assert sorted(P.values.values()) == sorted(PAPER_9_10)


def test_lens_9_10_ordered_from_spin():
    P = lens_d(33, 23, +1)
    assert [P.values[(k,)] for k in range(33)] == PAPER_9_10


def test_lens_8_3_ordered_from_spin():
    P = lens_d(17, 4, +1)
    assert [P.values[(k,)] for k in range(17)] == PAPER_8_3


def test_lens_trivial():
    P = lens_d(1, 0)
    assert P.group.factors == () and P.values[()] == 0


def test_lens_validation():
    with pytest.raises(ValueError):
        lens_d(10, 4)
    with pytest.raises(ValueError):
        lens_d(17, 4, 0)


@pytest.mark.parametrize("r,expected", [
    (17, PAPER_SURGERY_17), (5, PAPER_SURGERY_5), (3, PAPER_SURGERY_3)])
def test_unknot_surgery_lists(r, expected):
    assert list(unknot_half_surgery_d(r).values) == expected


def test_unknot_surgery_spin_value_parity():
    # value at i = 0 is 0 when (r-1)/2 is even, -1/2 when odd
    for r in range(1, 100, 2):
        v = unknot_half_surgery_d(r).values[0]
        assert v == (F(0) if ((r - 1) // 2) % 2 == 0 else F(-1, 2))


def test_unknot_surgery_rejects_even():
    with pytest.raises(ValueError):
        unknot_half_surgery_d(4)


def test_surgery_profile_symmetry():
    for r in (3, 9, 15, 33):
        sp = unknot_half_surgery_d(r)
        assert all(sp.values[i] == sp.values[r - i] for i in range(1, r))
        sp.as_profile()   # constructor enforces conjugation symmetry


def test_dlens_equals_lens_r_2_for_one_orientation():
    # S^3_{r/2}(O) is a lens space of order r; exactly one orientation of
    # L(r,2) reproduces it (this pins the orientation convention)
    for r in range(3, 100, 2):
        model = sorted(unknot_half_surgery_d(r).values)
        raw = lens_d(r, 2, -1)
        pos = lens_d(r, 2, +1)
        match_neg = sorted(raw.values.values()) == model
        match_pos = sorted(pos.values.values()) == model
        assert match_neg, f"r={r}: -L(r,2) must match the surgery model"
        if model != sorted(-v for v in model):
            assert not match_pos


def test_negate_involution_and_multiset():
    P = lens_d(33, 23, +1)
    N = negate(P)
    assert sorted(N.values.values()) == sorted(-v for v in P.values.values())
    assert negate(N).values == P.values
    S3 = lens_d(1, 0)
    assert negate(S3).values == S3.values


def test_connected_sum_identity():
    P = lens_d(17, 4, +1)
    S3 = lens_d(1, 0)
    Q = connected_sum(P, S3)
    assert Q.group.factors == P.group.factors
    assert sorted(Q.values.values()) == sorted(P.values.values())


def test_connected_sum_group_and_values():
    P1 = lens_d(3, 1, +1)
    P2 = lens_d(5, 2, +1)
    Q = connected_sum(P1, P2)
    assert Q.group.factors == (15,)
    assert Q.spin_value == P1.spin_value + P2.spin_value
    assert sorted(Q.values.values()) == sorted(a + b for a in P1.values.values()
                                               for b in P2.values.values())


def test_connected_sum_noncyclic():
    P = lens_d(3, 1, +1)
    Q = connected_sum(P, P)
    assert Q.group.factors == (3, 3)
    assert Q.spin_value == 2 * P.spin_value


def test_restrict_trivial_subgroup():
    P = lens_d(17, 4, +1)
    H = subgroups_of_order(P.group, 1)[0]
    R = restrict(P, H)
    assert R.group.factors == () and R.values[()] == P.spin_value


def test_restrict_published_subgroup_values(data_dir):
    import os
    from dinv.lattice import parse_form
    with open(os.path.join(data_dir, "goeritz_8_18.txt")) as fh:
        P = d_from_sharp(parse_form(fh.read()))
    H = subgroups_of_order(P.group, 5)
    assert len(H) == 1
    R = restrict(P, H[0])
    assert sorted(R.values.values()) == sorted([F(0), F(4, 5), F(-4, 5), F(-4, 5), F(4, 5)])

    with open(os.path.join(data_dir, "goeritz_9_40.txt")) as fh:
        P = d_from_sharp(parse_form(fh.read()))
    H = subgroups_of_order(P.group, 3)
    assert len(H) == 1
    R = restrict(P, H[0])
    assert sorted(R.values.values()) == sorted([F(-1, 2), F(5, 6), F(5, 6)])


def test_conjugation_symmetry_everywhere():
    profiles = [lens_d(33, 23, +1), lens_d(17, 4, -1), lens_d(25, 7, +1),
                unknot_half_surgery_d(15).as_profile(),
                connected_sum(lens_d(3, 2, +1), negate(lens_d(5, 4, +1)))]
    for P in profiles:
        for t in P.group.elements():
            assert P.values[P.group.neg(t)] == P.values[t]


def test_profile_constructor_rejects_asymmetry():
    G = group_from_factors([3])
    with pytest.raises(ValueError):
        DProfile(G, {(0,): F(0), (1,): F(1), (2,): F(2)})
    with pytest.raises(ValueError):
        DProfile(G, {(0,): F(0), (1,): F(1)})


# --- serialization -----------------------------------------------------------

def test_serialize_round_trip_bit_exact():
    P = lens_d(17, 4, +1)
    text = serialize_profile(P)
    Q = parse_profile(text)
    assert Q.group == P.group and Q.values == P.values
    assert serialize_profile(Q) == text


def test_serialize_trivial_group():
    P = lens_d(1, 0)
    text = serialize_profile(P)
    assert text.splitlines()[0] == "group: "
    assert parse_profile(text).values[()] == 0


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([(3,), (5,), (9,), (3, 3), (3, 9)]), st.data())
def test_serialize_round_trip_random(factors, data):
    G = FinAbGroup(factors)
    vals = {}
    for t in G.elements():
        n = G.neg(t)
        if n in vals:
            vals[t] = vals[n]
        else:
            vals[t] = F(data.draw(st.integers(-40, 40)), data.draw(st.integers(1, 24)))
    P = DProfile(G, vals)
    assert parse_profile(serialize_profile(P)).values == P.values
