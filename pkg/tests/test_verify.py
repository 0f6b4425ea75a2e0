from fractions import Fraction

import pytest

from modhyp.errors import UnknownIdentity
from modhyp.verify import (DISCREPANCY, REGISTRY, VERIFIED, golden_f_diff, partial_zeta_values,
                           supersingular_agreement, verify, wronskian_constant)

# identities whose printed form differs from what the internal checks establish
PRINT_DISCREPANCIES = {"ramanujan", "exdeg5", "eis-match-n4-3dim", "golden-a4-3dim"}


@pytest.mark.parametrize("name", sorted(REGISTRY))
def test_registered_identity_status(name):
    r = verify(name)
    want = DISCREPANCY if name in PRINT_DISCREPANCIES else VERIFIED
    assert r.status == want, r.details
    assert r.ok
    rec = r.to_record()
    assert rec["identity"] == name
    assert (rec["witness"] is None) == (want == VERIFIED)


def test_unknown_identity():
    with pytest.raises(UnknownIdentity):
        verify("nope")


def test_ramanujan_witness_is_constant_term():
    r = verify("ramanujan")
    e, got, want = r.witness
    assert e == 0 and got == 2 * want


def test_golden_f3_print_skips_terms():
    e, got, printed = golden_f_diff("a4-3dim-f3")
    assert printed == 0 and got != 0
    assert golden_f_diff("a4-3dim-f1") is None


def test_helpers():
    c, W, want = wronskian_constant((0, Fraction(1, 2)), 12)
    assert c != 0 and W.first_difference(want) is None
    closed, direct, tail, target = partial_zeta_values(10 ** 5)
    assert abs(closed - target) < 1e-12
    assert abs(direct - target) < tail
    roots, oracle = supersingular_agreement(13)
    assert roots == oracle == {(5, 0)}
