import json

import pytest

from symbidisc import Jacobian2, SymPoint, lift, make_candidate, make_moebius
from symbidisc.jsonio import (
    candidate_from_json,
    candidate_to_json,
    complex_from_json,
    complex_to_json,
    dumps,
    g2_from_json,
    g2_to_json,
    jacobian_from_json,
    jacobian_to_json,
    moebius_from_json,
    moebius_to_json,
    sympoint_from_json,
    sympoint_to_json,
)


class TestComplex:
    def test_roundtrip(self):
        z = 0.3 - 1.7j
        assert complex_from_json(complex_to_json(z)) == z

    def test_real_shorthand(self):
        assert complex_from_json(2.5) == 2.5 + 0j
        assert complex_from_json(-1) == -1 + 0j

    def test_negative_zero_flushed(self):
        assert complex_to_json(complex(-0.0, -0.0)) == {"re": 0.0, "im": 0.0}

    def test_partial_keys_default_to_zero(self):
        assert complex_from_json({"re": 1.0}) == 1.0 + 0j
        assert complex_from_json({"im": 2.0}) == 2.0j

    @pytest.mark.parametrize("bad", [True, "1", [1, 2], {"re": 1, "x": 2}, None])
    def test_rejects_malformed(self, bad):
        with pytest.raises(ValueError):
            complex_from_json(bad)


class TestDomainTypes:
    def test_moebius_roundtrip(self):
        h = make_moebius(1j, 0.3 + 0.4j)
        back = moebius_from_json(json.loads(dumps(moebius_to_json(h))))
        assert back == h

    def test_moebius_input_is_validated(self):
        with pytest.raises(ValueError):
            moebius_from_json({"tau": 1, "a": 2})

    def test_sympoint_roundtrip(self):
        pt = SymPoint(0.9 + 0.3j, 0.2 - 0.1j)
        assert sympoint_from_json(sympoint_to_json(pt)) == pt

    def test_g2_roundtrip(self):
        H = lift(make_moebius(-1, 0.25j))
        assert g2_from_json(g2_to_json(H)) == H

    def test_jacobian_roundtrip(self):
        J = Jacobian2(1, 0.5 - 0.5j, 0, 2j)
        assert jacobian_from_json(jacobian_to_json(J)) == J

    def test_jacobian_shape_checked(self):
        with pytest.raises(ValueError):
            jacobian_from_json([[{"re": 1}]])


class TestCandidate:
    def test_roundtrip(self):
        F = make_candidate({(1, 0): (1, 0), (0, 1): (0.5j, 1), (2, 0): (0, 0.3)})
        back = candidate_from_json(json.loads(dumps(candidate_to_json(F))))
        assert back == F

    def test_terms_sorted_in_output(self):
        F = make_candidate({(2, 0): (0, 1), (1, 0): (1, 0), (0, 1): (0, 1)})
        keys = [(t["j"], t["k"]) for t in candidate_to_json(F)["terms"]]
        assert keys == sorted(keys)

    def test_rejects_duplicate_monomials(self):
        with pytest.raises(ValueError):
            candidate_from_json({"terms": [
                {"j": 1, "k": 0, "S": 1, "P": 0},
                {"j": 1, "k": 0, "S": 2, "P": 0},
            ]})

    def test_rejects_missing_exponents(self):
        with pytest.raises(ValueError):
            candidate_from_json({"terms": [{"S": 1, "P": 0}]})

    def test_dumps_is_single_line(self):
        F = make_candidate({(1, 0): (1, 0), (0, 1): (0, 1)})
        assert "\n" not in dumps(candidate_to_json(F))
