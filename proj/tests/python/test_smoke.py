# Copyright 2026 The mom Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.


from fractions import Fraction

import pytest

import mom


def test_hasse_and_multiplicity():
    assert mom.hasse("5", 2, "1:2,1", [1, 1]) == "2:1,0"
    assert mom.multiplicity("5", "1:2,3", "0,0") == 5
    assert mom.multiplicity("5", "0", "0,0") is None


def test_mass():
    assert mom.multiplicity_mass("3", 2, "1:1,1") == 6
    assert mom.multiplicity_mass("3", 2, "1:1,1", set=[0, 1], jobs=2) == 4


def test_interpolate():
    p = mom.interpolate("3", 2, ["0,0", "1,2"], m=1, degree=1)
    assert p != "0"
    for a in ["0,0", "1,2"]:
        assert mom.multiplicity("3", p, a) >= 1


def test_kakeya():
    r = mom.min_kakeya("3", 2)
    assert len(r["set"]) == 7
    assert r["main"] == Fraction(81, 25)
    assert mom.is_kakeya("3", 2, r["set"])
    assert not mom.is_kakeya("3", 2, r["set"][1:])
    assert mom.kakeya_bounds(3, 2) == (Fraction(9, 4), Fraction(81, 25))


def test_merger():
    assert mom.seed_length(Fraction(1, 2), "1/2", 2) == 6
    v = mom.verify_merger(Fraction(1, 2), Fraction(1, 2), 2, 1)
    assert v["seed_bits"] == 6
    assert v["all_within_eps"]
    assert all(s["distance"] <= Fraction(1, 2) for s in v["sources"])


def test_rs():
    assert mom.list_decode("5", [0, 1, 2, 0, 0], k=1, t=3) == ["0", "1:1"]
    assert mom.brute_force_decode("5", [0, 1, 2, 0, 0], k=1, t=3) == ["0", "1:1"]
    assert mom.list_size_bound(Fraction(3, 5), "1/5") == Fraction(15, 2)
    assert mom.count_weighted_monomials(1, 4, Fraction(1, 2)) == 12


def test_errors():
    with pytest.raises(mom.MomError) as e:
        mom.list_decode("5", [0, 1, 2, 3, 4], k=1, t=2)
    assert e.value.args[0] == "BelowJohnsonRadius"


def test_selftest():
    rows = mom.selftest(7, trials=20)
    assert rows and all(r["passed"] for r in rows)
