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

"""Polynomial-method toolkit over finite fields.

Fields are given as strings: "5", "2^6" or "4" (a prime power). Polynomials
use the "c:e1,e2;..." text form and points are comma-separated element
indices. Rational arguments accept Fraction, int or "n/d" strings and
rational results come back as Fraction.
"""

from fractions import Fraction

from . import _mom
from ._mom import (
    MomError,
    brute_force_decode,
    hasse,
    interpolate,
    is_kakeya,
    multiplicity,
    multiplicity_mass,
)

__all__ = [
    "MomError",
    "brute_force_decode",
    "count_weighted_monomials",
    "hasse",
    "interpolate",
    "is_kakeya",
    "kakeya_bounds",
    "list_decode",
    "list_size_bound",
    "min_kakeya",
    "multiplicity",
    "multiplicity_mass",
    "seed_length",
    "selftest",
    "verify_merger",
]


def _text(x):
    if isinstance(x, str):
        return x
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def kakeya_bounds(q, n):
    crude, main = _mom.kakeya_bounds(q, n)
    return Fraction(crude), Fraction(main)


def min_kakeya(field, n):
    out = _mom.min_kakeya(field, n)
    out["crude"] = Fraction(out["crude"])
    out["main"] = Fraction(out["main"])
    return out


def seed_length(delta, eps, blocks):
    return _mom.seed_length(_text(delta), _text(eps), blocks)


def verify_merger(delta, eps, blocks, n, jobs=1):
    out = _mom.verify_merger(_text(delta), _text(eps), blocks, n, jobs)
    out["threshold_bits"] = Fraction(out["threshold_bits"])
    for s in out["sources"]:
        s["distance"] = Fraction(s["distance"])
        s["max_probability"] = Fraction(s["max_probability"])
    return out


def list_decode(field, betas, k, t, alphas=None, eps=Fraction(1, 4)):
    return _mom.list_decode(field, betas, k, t, alphas, _text(eps))


def list_size_bound(gamma, rate):
    return Fraction(_mom.list_size_bound(_text(gamma), _text(rate)))


def count_weighted_monomials(k, d, theta):
    return _mom.count_weighted_monomials(k, d, _text(theta))


def selftest(seed, trials=200, jobs=1):
    return _mom.selftest(seed, trials, jobs)
