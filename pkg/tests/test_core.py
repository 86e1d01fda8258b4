import json
import math

import pytest
from hypothesis import given, strategies as st

from zerosum.core import (
    ResidueSequence, decompose_check, dilate, f_control, format_sequence, is_prime, load_sequence,
    multiplicity_vectors, multisets_count, norm, parse_sequence, signed_rep, translate,
)
from zerosum.errors import PreconditionError

from conftest import sequences


def seq(p, *elems):
    return ResidueSequence.of(p, elems)


def test_norm_examples():
    assert norm(10, 11) == 1
    assert norm(0, 7) == 0
    assert norm(6, 13) == 6


def test_norm_rejects_non_residue():
    with pytest.raises(PreconditionError):
        norm(11, 11)


@given(st.sampled_from([3, 5, 7, 11, 13, 101]), st.data())
def test_norm_symmetric_and_bounded(p, data):
    x = data.draw(st.integers(1, p - 1))
    assert norm(x, p) == norm(p - x, p)
    assert norm(x, p) <= (p - 1) // 2


def test_dilate_examples():
    assert dilate(seq(11, 3, 6, 9), 4) == seq(11, 1, 2, 3)
    assert dilate(seq(11, 1, 1, 7), 2) == seq(11, 2, 2, 3)
    A = seq(13, 0, 5, 5, 12)
    assert dilate(A, 1) == A


def test_dilate_by_zero_rejected():
    with pytest.raises(PreconditionError):
        dilate(seq(11, 1, 2), 11)


def test_translate_examples():
    assert translate(seq(11, 1, 1, 7), 0) == seq(11, 1, 1, 7)
    assert translate(seq(11, 1, 1, 7), 4) == seq(11, 5, 5, 0)
    assert translate(seq(11, 0), 10) == seq(11, 10)


def test_signed_rep_examples():
    assert signed_rep(10, 11) == -1
    assert signed_rep(5, 11) == 5
    assert signed_rep(6, 11) == -5


@pytest.mark.parametrize("p", [2, 3, 5, 11, 101])
def test_signed_rep_is_bijection(p):
    reps = [signed_rep(x, p) for x in range(p)]
    assert sorted(reps) == list(range(-((p - 1) // 2), (p - 1) // 2 + 1)) or p == 2
    assert all(r % p == x for x, r in enumerate(reps))


def test_f_control_examples():
    assert f_control(11, 1) == 36
    assert f_control(2, 1) == 1


@pytest.mark.parametrize("p", [2, 3, 5, 7, 11, 13, 31, 101, 1009])
def test_f_control_matches_float_evaluation(p):
    for m in {1, 2, p // 2 or 1, p}:
        approx = (p * m) ** (6 / 13) * math.log2(p) ** 2
        if abs(approx - round(approx)) > 1e-6:
            assert f_control(p, m) == math.floor(approx)
        assert f_control(p, m) >= 0


def test_f_control_rejects_bad_m():
    with pytest.raises(PreconditionError):
        f_control(11, 12)


def test_decompose_check():
    A = seq(11, 1, 1, 7)
    assert decompose_check(A, [seq(11, 1, 7), seq(11, 1)])
    assert not decompose_check(A, [seq(11, 1, 7), seq(11, 7)])
    assert decompose_check(A, [A, ResidueSequence(11)])
    with pytest.raises(PreconditionError):
        decompose_check(A, [seq(13, 1)])


def test_multiplicity_cap_enforced():
    with pytest.raises(PreconditionError):
        ResidueSequence.of(3, [1, 1, 1, 1])
    assert len(ResidueSequence.of(3, [1, 1, 1, 1], capped=False)) == 4


def test_non_prime_modulus_rejected():
    with pytest.raises(PreconditionError):
        ResidueSequence.of(12, [1])
    assert [n for n in range(30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]


def test_text_format():
    A = parse_sequence("p=11; A=1^2,7")
    assert A == seq(11, 1, 1, 7)
    assert format_sequence(A) == "p=11; A=1^2,7"
    assert parse_sequence("p=11; A=-1, 12") == seq(11, 10, 1)
    assert parse_sequence("p=5; A=") == ResidueSequence(5)
    with pytest.raises(PreconditionError):
        parse_sequence("q=11; A=1")


def test_structured_format():
    A = load_sequence('{"p": 11, "elements": [[1,2],[7,1]]}')
    assert A == seq(11, 1, 1, 7)
    assert A.to_dict() == {"p": 11, "elements": [[1, 2], [7, 1]]}
    with pytest.raises(PreconditionError):
        load_sequence('{"p": 11}')


@given(sequences(min_size=0))
def test_serializers_round_trip(A):
    assert parse_sequence(format_sequence(A)) == A
    assert ResidueSequence.from_dict(json.loads(json.dumps(A.to_dict()))) == A


@given(sequences(primes=[3, 5, 7, 11, 13]), st.data())
def test_dilation_inverse_and_invariants(A, data):
    b = data.draw(st.integers(1, A.p - 1))
    c = data.draw(st.integers(0, A.p - 1))
    assert dilate(dilate(A, b), pow(b, -1, A.p)) == A
    for B in (dilate(A, b), translate(A, c)):
        assert len(B) == len(A)
        assert B.max_multiplicity() == A.max_multiplicity()


def test_multiset_algebra():
    A = seq(11, 1, 1, 7)
    assert A.minus(seq(11, 1)) == seq(11, 1, 7)
    assert A.union(seq(11, 7)) == seq(11, 1, 1, 7, 7)
    with pytest.raises(PreconditionError):
        A.minus(seq(11, 7, 7))


@pytest.mark.parametrize("p,size", [(2, 3), (3, 5), (5, 4), (7, 6)])
def test_multiplicity_vectors_count(p, size):
    vecs = list(multiplicity_vectors(p, size))
    assert len(vecs) == len(set(vecs)) == multisets_count(p, size)
    assert all(sum(v) == size and len(v) == p for v in vecs)
