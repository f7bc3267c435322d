#!/usr/bin/env python3
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
"""Regenerates data/moduli.txt.

For every prime p and e >= 2 with p**e <= 2**20, picks the first monic
polynomial of degree e (coefficient vectors ordered as base-p integers,
constant term least significant) for which X has multiplicative order
p**e - 1. Such a polynomial is irreducible and X is a primitive element.
"""

import sys

LICENSE = """\
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

"""

LIMIT = 1 << 20


def primes_upto(n):
    sieve = bytearray([1]) * (n + 1)
    sieve[0:2] = b"\x00\x00"
    for i in range(2, int(n ** 0.5) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(sieve[i * i :: i]))
    return [i for i in range(n + 1) if sieve[i]]


def prime_factors(n):
    out, f = [], 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


def mulmod(a, b, mod, p):
    e = len(mod) - 1
    prod = [0] * (2 * e - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] = (prod[i + j] + x * y) % p
    for k in range(len(prod) - 1, e - 1, -1):
        c = prod[k]
        if c:
            for j in range(e + 1):
                prod[k - e + j] = (prod[k - e + j] - c * mod[j]) % p
    return prod[:e]


def powx(n, mod, p):
    e = len(mod) - 1
    result = [1] + [0] * (e - 1)
    base = [0, 1] + [0] * (e - 2)
    while n:
        if n & 1:
            result = mulmod(result, base, mod, p)
        base = mulmod(base, base, mod, p)
        n >>= 1
    return result


def is_primitive(mod, p):
    e = len(mod) - 1
    order = p ** e - 1
    one = [1] + [0] * (e - 1)
    if powx(order, mod, p) != one:
        return False
    return all(powx(order // r, mod, p) != one for r in prime_factors(order))


def main():
    lines = []
    for p in primes_upto(1024):
        e = 2
        while p ** e <= LIMIT:
            for idx in range(p ** e):
                coeffs = [(idx // p ** i) % p for i in range(e)] + [1]
                if coeffs[0] and is_primitive(coeffs, p):
                    lines.append(" ".join(map(str, [p, e] + coeffs)))
                    break
            e += 1
    sys.stdout.write(LICENSE)
    sys.stdout.write("# p e c_0 c_1 ... c_e (monic, primitive)\n")
    sys.stdout.write("\n".join(lines) + "\n")


if __name__ == "__main__":
    main()
