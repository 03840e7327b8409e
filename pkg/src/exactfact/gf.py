"""Arithmetic in GF(p^m) for small prime powers, plus the projective line.

Elements are tuples of coefficients (c0, c1, ..., c_{m-1}) modulo an
irreducible polynomial, representing c0 + c1*x + ... .  The canonical
element order is by integer value sum(c_i * p^i), i.e. lexicographic on
the descending-degree coefficient vector; this fixes the projective
point indexing and hence every permutation built on top of a field.
"""

from __future__ import annotations

import warnings
from functools import lru_cache


class CharacteristicTwoSquares(UserWarning):
    """is_square was asked about a characteristic-2 field, where every
    element is a square and the question carries no information."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


# Fixed moduli for the prime powers the group constructions use, so
# constructed permutations and cached artifacts stay bit-stable.
# Coefficient lists are ascending and monic.
FIXED_MODULI: dict[tuple[int, int], tuple[int, ...]] = {
    (2, 2): (1, 1, 1),          # x^2 + x + 1
    (2, 3): (1, 1, 0, 1),       # x^3 + x + 1
    (2, 5): (1, 0, 1, 0, 0, 1),  # x^5 + x^2 + 1
    (3, 2): (2, 2, 1),          # x^2 + 2x + 2
    (5, 2): (2, 4, 1),          # x^2 + 4x + 2
}


def _poly_trim(c: list[int]) -> tuple[int, ...]:
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _poly_mulmod(a, b, modulus, p):
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    # reduce by the monic modulus
    deg_m = len(modulus) - 1
    for i in range(len(out) - 1, deg_m - 1, -1):
        coef = out[i]
        if coef:
            out[i] = 0
            for j in range(deg_m):
                out[i - deg_m + j] = (out[i - deg_m + j] - coef * modulus[j]) % p
    return _poly_trim(out)


def _poly_divmod(a, b, p):
    a = list(a)
    deg_b = len(b) - 1
    inv_lead = pow(b[-1], -1, p)
    q = [0] * max(0, len(a) - deg_b)
    while len(a) - 1 >= deg_b and a:
        if a[-1] == 0:
            a.pop()
            continue
        shift = len(a) - 1 - deg_b
        factor = a[-1] * inv_lead % p
        q[shift] = factor
        for j in range(len(b)):
            a[shift + j] = (a[shift + j] - factor * b[j]) % p
        while a and a[-1] == 0:
            a.pop()
    return _poly_trim(q), _poly_trim(a)


def _is_irreducible(modulus, p) -> bool:
    """Trial division by every monic polynomial of degree 1..deg/2."""
    deg = len(modulus) - 1
    if deg < 1 or modulus[-1] == 0:
        return False
    if deg == 1:
        return True
    for d in range(1, deg // 2 + 1):
        for idx in range(p ** d):
            coeffs = []
            v = idx
            for _ in range(d):
                coeffs.append(v % p)
                v //= p
            cand = tuple(coeffs) + (1,)
            _, rem = _poly_divmod(modulus, cand, p)
            if not rem:
                return False
    return True


def default_modulus(p: int, m: int) -> tuple[int, ...]:
    """The fixed-table modulus when registered, otherwise the first
    irreducible monic polynomial in canonical coefficient order."""
    if m == 1:
        return (0, 1)  # the polynomial x; elements are residues mod p
    if (p, m) in FIXED_MODULI:
        return FIXED_MODULI[(p, m)]
    for idx in range(p ** m):
        coeffs = []
        v = idx
        for _ in range(m):
            coeffs.append(v % p)
            v //= p
        cand = tuple(coeffs) + (1,)
        if _is_irreducible(cand, p):
            return cand
    raise ValueError(f"no irreducible polynomial of degree {m} over GF({p})")


class FieldSpec:
    """GF(p^m) with a fixed irreducible modulus.

    Elements are coefficient tuples of length m.  ``enumerate_field``
    lists them in canonical order; ``element_index`` inverts that order.
    """

    def __init__(self, p: int, m: int, modulus=None):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        if m < 1:
            raise ValueError("extension degree must be positive")
        if p ** m > 2 ** 16:
            raise ValueError(f"field size {p}^{m} exceeds 2^16")
        self.p = p
        self.m = m
        self.q = p ** m
        if modulus is None:
            modulus = default_modulus(p, m)
        modulus = tuple(c % p for c in modulus)
        if len(modulus) != m + 1 or modulus[-1] != 1:
            raise ValueError("modulus must be monic of degree m")
        if m > 1 and not _is_irreducible(modulus, p):
            raise ValueError(f"modulus {modulus} is reducible over GF({p})")
        self.modulus = modulus
        self.zero = (0,) * m
        self.one = (1,) + (0,) * (m - 1)

    def __repr__(self):
        return f"FieldSpec(GF({self.q}))"

    # -- element encoding ------------------------------------------------

    def element_of_value(self, value: int) -> tuple[int, ...]:
        coeffs = []
        for _ in range(self.m):
            coeffs.append(value % self.p)
            value //= self.p
        return tuple(coeffs)

    def value_of(self, e) -> int:
        v = 0
        for c in reversed(e):
            v = v * self.p + c
        return v

    def enumerate_field(self) -> list[tuple[int, ...]]:
        return [self.element_of_value(v) for v in range(self.q)]

    # -- arithmetic ---------------------------------------------------------

    def add(self, a, b):
        return tuple((x + y) % self.p for x, y in zip(a, b))

    def sub(self, a, b):
        return tuple((x - y) % self.p for x, y in zip(a, b))

    def neg(self, a):
        return tuple((-x) % self.p for x in a)

    def mul(self, a, b):
        if self.m == 1:
            return (a[0] * b[0] % self.p,)
        res = _poly_mulmod(a, b, self.modulus, self.p)
        return res + (0,) * (self.m - len(res))

    def power(self, a, n: int):
        if n < 0:
            return self.power(self.inv(a), -n)
        result = self.one
        base = a
        while n:
            if n & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            n >>= 1
        return result

    def inv(self, a):
        if a == self.zero:
            raise ZeroDivisionError("inverse of zero")
        return self.power(a, self.q - 2)

    def frobenius(self, e, k: int = 1):
        """e ** (p^k), the k-th power of the Frobenius automorphism."""
        return self.power(e, self.p ** (k % self.m))

    def is_square(self, e) -> bool:
        """Whether e is a square.  In odd characteristic the nonzero
        squares are exactly the (q-1)/2 elements with e^((q-1)/2) = 1.
        In characteristic 2 every element is a square; the call is
        answered True but flagged with a warning."""
        if self.p == 2:
            warnings.warn(
                "every element of a characteristic-2 field is a square",
                CharacteristicTwoSquares, stacklevel=2)
            return True
        if e == self.zero:
            return True
        return self.power(e, (self.q - 1) // 2) == self.one

    def multiplicative_generator(self):
        """Smallest element (canonical order) of multiplicative order q-1."""
        for v in range(1, self.q):
            e = self.element_of_value(v)
            if self.multiplicative_order(e) == self.q - 1:
                return e
        raise RuntimeError("no generator found (impossible for a field)")

    def multiplicative_order(self, e) -> int:
        if e == self.zero:
            raise ValueError("zero has no multiplicative order")
        acc = e
        n = 1
        while acc != self.one:
            acc = self.mul(acc, e)
            n += 1
        return n


@lru_cache(maxsize=None)
def field(p: int, m: int) -> FieldSpec:
    """Shared FieldSpec with the canonical modulus."""
    return FieldSpec(p, m)


INFINITY = "inf"


class ProjectiveLine:
    """The q+1 points of P^1(GF(q)) with stable 1-based indices.

    Field elements take indices 1..q in canonical field order and the
    point at infinity takes index q+1.
    """

    def __init__(self, F: FieldSpec):
        self.field = F
        self.q = F.q
        self.points = F.enumerate_field() + [INFINITY]

    def index_of(self, pt) -> int:
        if pt == INFINITY:
            return self.q + 1
        return self.field.value_of(pt) + 1

    def point_of(self, index: int):
        if index == self.q + 1:
            return INFINITY
        return self.field.element_of_value(index - 1)

    def apply_matrix(self, a, b, c, d, sigma_power: int = 0):
        """The permutation of point indices given by the fractional
        semilinear map x -> (a x^s + b) / (c x^s + d), s = frobenius^k.
        Returns 1-based image list."""
        F = self.field
        images = []
        for pt in self.points:
            if pt == INFINITY:
                if c == F.zero:
                    img = INFINITY
                else:
                    img = F.mul(a, F.inv(c))
            else:
                x = F.frobenius(pt, sigma_power) if sigma_power else pt
                den = F.add(F.mul(c, x), d)
                if den == F.zero:
                    img = INFINITY
                else:
                    num = F.add(F.mul(a, x), b)
                    img = F.mul(num, F.inv(den))
            images.append(self.index_of(img))
        return images
