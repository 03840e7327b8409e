"""Named group families as explicit permutation groups.

Natural actions are used where a standard small-degree one exists
(cyclic, dihedral, alternating, symmetric, the affine and projective
families); everything defined by a presentation is realized through the
left regular action on its normal forms, which is cheap at these orders
and hands the census a free multiplication table.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .gf import field, is_prime
from .group import PermGroup, _greedy_generators
from .perm import Permutation

FAMILIES = (
    "cyclic", "abelian", "dihedral", "generalized_quaternion",
    "semidihedral", "modular_p", "alternating", "symmetric",
    "psl2", "pgl2", "pgammal2", "lf", "mq",
    "agl1", "agammal1", "asl1", "agl32", "catalog_entry",
)


@dataclass(frozen=True)
class FamilySpec:
    """Symbolic descriptor of a named group family instance."""
    family: str
    params: tuple[int, ...] = ()

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        object.__setattr__(self, "params", tuple(self.params))


def _mk(images) -> Permutation:
    """Permutation from known-good images, skipping validation."""
    p = object.__new__(Permutation)
    object.__setattr__(p, "images", tuple(images))
    return p


# ---------------------------------------------------------------------------
# normal-form groups and the regular action


class NormalFormGroup:
    """A finite group on explicit normal-form labels."""

    def __init__(self, elements, product, one):
        self.elements = list(elements)
        self.product = product
        self.one = one
        self.index = {e: i for i, e in enumerate(self.elements)}
        if one not in self.index:
            raise ValueError("identity label missing from element list")


def regular_perm_group(nf: NormalFormGroup, gen_labels: dict,
                       name: str | None = None):
    """Left regular action; returns (group, {label: generator image}).

    The permutation of element h sends (the index of) x to h*x.  Indices
    here follow the normal-form order; the group's canonical element
    order re-sorts lexicographically later.
    """
    n = len(nf.elements)
    idx = nf.index
    prod = nf.product
    perms = []
    for h in nf.elements:
        perms.append(_mk(idx[prod(h, x)] + 1 for x in nf.elements))
    by_label = {lbl: perms[idx[lbl]] for lbl in gen_labels}
    gens = [by_label[lbl] for lbl in gen_labels]
    group = PermGroup(gens, n, name=name, elements=perms)
    return group, by_label


def metacyclic_nf(nx: int, ny: int, t: int, s: int = 0) -> NormalFormGroup:
    """<x, y | x^nx = 1, y^ny = x^s, y^-1 x y = x^t> on labels (i, j).

    The caller is responsible for supplying a consistent presentation;
    consistency (t invertible, t^ny = 1, s(t-1) = 0 mod nx) is asserted.
    """
    if nx < 1 or ny < 1:
        raise ValueError("orders must be positive")
    t %= nx
    if pow(t, ny, nx) != 1 % nx or (s * (t - 1)) % nx != 0:
        raise ValueError(f"inconsistent metacyclic data nx={nx} ny={ny} t={t} s={s}")
    u = pow(t, -1, nx)
    u_pows = [pow(u, j, nx) for j in range(ny)]

    def product(a, b):
        i1, j1 = a
        i2, j2 = b
        jj = j1 + j2
        q, r = divmod(jj, ny)
        return ((i1 + i2 * u_pows[j1] + s * q) % nx, r)

    elements = [(i, j) for i in range(nx) for j in range(ny)]
    return NormalFormGroup(elements, product, (0, 0))


def direct_nf(A: NormalFormGroup, B: NormalFormGroup) -> NormalFormGroup:
    elements = [(a, b) for a in A.elements for b in B.elements]

    def product(x, y):
        return (A.product(x[0], y[0]), B.product(x[1], y[1]))

    return NormalFormGroup(elements, product, (A.one, B.one))


def semidirect_nf(N: NormalFormGroup, H: NormalFormGroup,
                  act) -> NormalFormGroup:
    """N x| H with act(h_label, n_label) the automorphism action."""
    elements = [(n, h) for n in N.elements for h in H.elements]

    def product(x, y):
        return (N.product(x[0], act(x[1], y[0])), H.product(x[1], y[1]))

    return NormalFormGroup(elements, product, (N.one, H.one))


def cyclic_nf(n: int) -> NormalFormGroup:
    return NormalFormGroup(range(n), lambda a, b: (a + b) % n, 0)


# ---------------------------------------------------------------------------
# elementary families


def cyclic(n: int) -> PermGroup:
    if n < 1:
        raise ValueError("cyclic group order must be positive")
    if n == 1:
        return PermGroup.trivial(1)
    gen = Permutation.from_cycles([tuple(range(1, n + 1))], n)
    return PermGroup([gen], n, name=f"Z{n}")


def abelian(factors) -> PermGroup:
    """Direct sum of cyclic groups, one disjoint cycle per factor."""
    factors = [int(f) for f in factors]
    if not factors or any(f < 1 for f in factors):
        raise ValueError("factors must be positive integers")
    degree = sum(f for f in factors if f > 1) or 1
    gens = []
    offset = 0
    for f in factors:
        if f == 1:
            continue
        gens.append(Permutation.from_cycles(
            [tuple(range(offset + 1, offset + f + 1))], degree))
        offset += f
    name = "x".join(f"Z{f}" for f in sorted(factors, reverse=True) if f > 1) or "1"
    return PermGroup(gens, degree, name=name)


def dihedral(order: int) -> PermGroup:
    """D_{2n} of the given order, acting naturally on the n-gon."""
    if order < 6 or order % 2:
        raise ValueError(f"dihedral order must be an even integer >= 6, got {order}")
    n = order // 2
    r = Permutation.from_cycles([tuple(range(1, n + 1))], n)
    s = Permutation([1] + list(range(n, 1, -1)))
    return PermGroup([r, s], n, name=f"D{order}")


def generalized_quaternion(order: int) -> PermGroup:
    n = order.bit_length() - 1
    if order != 1 << n or n < 3:
        raise ValueError(f"generalized quaternion order must be 2^n, n >= 3, got {order}")
    nx = order // 2
    nf = metacyclic_nf(nx, 2, t=nx - 1, s=nx // 2)
    group, _ = regular_perm_group(nf, {(1, 0): "a", (0, 1): "b"},
                                  name=f"Q{order}")
    return group


def semidihedral(order: int) -> PermGroup:
    n = order.bit_length() - 1
    if order != 1 << n or n < 3:
        raise ValueError(f"semidihedral order must be 2^n, n >= 3, got {order}")
    a = order // 4
    nf = metacyclic_nf(order // 2, 2, t=a - 1, s=0)
    group, _ = regular_perm_group(nf, {(1, 0): "x", (0, 1): "y"},
                                  name=f"SD{order}")
    return group


def modular_p(p: int, n: int) -> PermGroup:
    """The modular p-group of order p^n (p odd, n >= 3)."""
    if not is_prime(p) or p == 2:
        raise ValueError(f"modular_p requires an odd prime, got {p}")
    if n < 3:
        raise ValueError("modular_p requires n >= 3")
    nx = p ** (n - 1)
    nf = metacyclic_nf(nx, p, t=1 + p ** (n - 2), s=0)
    group, _ = regular_perm_group(nf, {(1, 0): "x", (0, 1): "y"},
                                  name=f"M{p ** n}")
    return group


def alternating(n: int) -> PermGroup:
    from .group import alternating_group
    return alternating_group(n)


def symmetric(n: int) -> PermGroup:
    from .group import symmetric_group
    return symmetric_group(n)


# ---------------------------------------------------------------------------
# field-based families


class _FieldTables:
    """Value-indexed arithmetic tables for a small field."""

    def __init__(self, p: int, m: int):
        F = field(p, m)
        self.F = F
        q = F.q
        self.q = q
        elems = F.enumerate_field()
        val = F.value_of
        self.add = [[val(F.add(a, b)) for b in elems] for a in elems]
        self.mul = [[val(F.mul(a, b)) for b in elems] for a in elems]
        self.neg = [val(F.neg(a)) for a in elems]
        self.inv = [0] + [val(F.inv(a)) for a in elems[1:]]
        frob1 = [val(F.frobenius(a, 1)) for a in elems]
        self.frob_pows = [list(range(q))]
        for _ in range(1, m):
            prev = self.frob_pows[-1]
            self.frob_pows.append([frob1[v] for v in prev])
        if p == 2:
            self.squares = set(range(q))
        else:
            self.squares = {self.mul[v][v] for v in range(q)}


@lru_cache(maxsize=None)
def _tables(p: int, m: int) -> _FieldTables:
    return _FieldTables(p, m)


def _split_prime_power(q: int) -> tuple[int, int]:
    for p in range(2, q + 1):
        if q % p == 0:
            if not is_prime(p):
                break
            m = 0
            qq = q
            while qq % p == 0:
                qq //= p
                m += 1
            if qq != 1:
                break
            return p, m
    raise ValueError(f"{q} is not a prime power")


def _normalized_matrices(T: _FieldTables):
    """One representative (a, b, c, d) per PGL(2,q) class, with its
    determinant, in a fixed deterministic order."""
    q = T.q
    out = []
    # c = 0, d = 1: x -> a x + b with a != 0
    for a in range(1, q):
        for b in range(q):
            out.append((a, b, 0, 1, a))
    # c = 1: det = a d - b != 0
    for a in range(q):
        for d in range(q):
            ad = T.mul[a][d]
            for b in range(q):
                if b != ad:
                    det = T.add[ad][T.neg[b]]
                    out.append((a, b, 1, d, det))
    return out


def _fractional_map_images(T: _FieldTables, a, b, c, d, sigma_power=0):
    """1-based image list on the q+1 projective points; infinity is q+1."""
    q = T.q
    add, mul, inv, neg = T.add, T.mul, T.inv, T.neg
    frob = T.frob_pows[sigma_power % len(T.frob_pows)]
    images = []
    for x in range(q):
        xs = frob[x]
        den = add[mul[c][xs]][d]
        if den == 0:
            images.append(q + 1)
        else:
            num = add[mul[a][xs]][b]
            images.append(mul[num][inv[den]] + 1)
    if c == 0:
        images.append(q + 1)
    else:
        images.append(mul[a][inv[c]] + 1)
    return images


def _projective_elements(q: int, want, sigma_powers) -> list[Permutation]:
    """All fractional (semi)linear maps whose determinant class passes
    ``want(det_is_square)`` for the listed Frobenius powers."""
    p, m = _split_prime_power(q)
    T = _tables(p, m)
    mats = _normalized_matrices(T)
    base = {}
    for a, b, c, d, det in mats:
        if want(det in T.squares):
            base[(a, b, c, d)] = _fractional_map_images(T, a, b, c, d)
    out = []
    for j in sigma_powers:
        if j == 0:
            out.extend(_mk(img) for img in base.values())
        else:
            frob = T.frob_pows[j]
            frob_perm = [v + 1 for v in frob] + [q + 1]
            for img in base.values():
                out.append(_mk(img[frob_perm[x] - 1] for x in range(q + 1)))
    return out


def _group_from_elements(elements, degree, name) -> PermGroup:
    gens = _greedy_generators(list(elements))
    return PermGroup(gens, degree, name=name, elements=elements)


def _check_q(q: int) -> tuple[int, int]:
    if q < 2 or q > 2 ** 15:
        raise ValueError(f"q must be a prime power in 2..2^15, got {q}")
    return _split_prime_power(q)


def pgl2(q: int) -> PermGroup:
    _check_q(q)
    elems = _projective_elements(q, lambda sq: True, [0])
    return _group_from_elements(elems, q + 1, f"PGL(2,{q})")


def psl2(q: int) -> PermGroup:
    p, _ = _check_q(q)
    if p == 2:
        elems = _projective_elements(q, lambda sq: True, [0])
    else:
        elems = _projective_elements(q, lambda sq: sq, [0])
    return _group_from_elements(elems, q + 1, f"PSL(2,{q})")


def pgammal2(q: int) -> PermGroup:
    _, m = _check_q(q)
    elems = _projective_elements(q, lambda sq: True, list(range(m)))
    return _group_from_elements(elems, q + 1, f"PGammaL(2,{q})")


def lf(q: int) -> PermGroup:
    """The group of all fractional linear maps of the projective line,
    i.e. PGL(2,q)."""
    g = pgl2(q)
    g.name = f"LF({q})"
    return g


def mq(q: int) -> PermGroup:
    """The sharply 3-transitive group M_q, q an odd square: linear maps
    of square determinant together with sigma-semilinear maps of
    non-square determinant, sigma the involutory field automorphism."""
    p, m = _check_q(q)
    if p == 2 or m % 2:
        raise ValueError(f"M_q requires q = p^(2k) with p odd, got {q}")
    T = _tables(p, m)
    mats = _normalized_matrices(T)
    k = m // 2
    elems = []
    for a, b, c, d, det in mats:
        if det in T.squares:
            elems.append(_mk(_fractional_map_images(T, a, b, c, d)))
        else:
            elems.append(_mk(_fractional_map_images(T, a, b, c, d, k)))
    return _group_from_elements(elems, q + 1, f"M({q})")


def _affine_elements(q: int, sigma_powers, parity_filter=None):
    p, m = _split_prime_power(q)
    T = _tables(p, m)
    out = []
    for j in sigma_powers:
        frob = T.frob_pows[j]
        for a in range(1, q):
            mul_a = T.mul[a]
            for b in range(q):
                add_b = T.add[b]
                perm = _mk(add_b[mul_a[frob[x]]] + 1 for x in range(q))
                if parity_filter is None or parity_filter(perm):
                    out.append(perm)
    return out


def agl1(q: int) -> PermGroup:
    _check_q(q)
    elems = _affine_elements(q, [0])
    return _group_from_elements(elems, q, f"AGL(1,{q})")


def agammal1(q: int) -> PermGroup:
    _, m = _check_q(q)
    elems = _affine_elements(q, list(range(m)))
    return _group_from_elements(elems, q, f"AGammaL(1,{q})")


def asl1(q: int) -> PermGroup:
    """The even permutations inside AGL(1,q); index 2 for odd q."""
    p, _ = _check_q(q)
    if p == 2:
        raise ValueError("asl1 requires odd q (index 2 only in odd characteristic)")
    elems = _affine_elements(q, [0], parity_filter=lambda g: g.is_even())
    return _group_from_elements(elems, q, f"ASL(1,{q})")


def agl32() -> PermGroup:
    """AGL(3,2) acting on the 8 vectors of GF(2)^3 (order 1344)."""
    def apply_row(row: int, v: int) -> int:
        return bin(row & v).count("1") & 1

    matrices = []
    for rows in range(512):
        r0, r1, r2 = rows & 7, (rows >> 3) & 7, (rows >> 6) & 7
        # invertibility over GF(2): rows nonzero, pairwise sums nonzero, full sum nonzero
        if r0 and r1 and r2 and (r0 ^ r1) and (r0 ^ r2) and (r1 ^ r2) \
                and (r0 ^ r1 ^ r2):
            matrices.append((r0, r1, r2))
    elems = []
    for r0, r1, r2 in matrices:
        base = [apply_row(r0, v) | (apply_row(r1, v) << 1) | (apply_row(r2, v) << 2)
                for v in range(8)]
        for b in range(8):
            elems.append(_mk(base[v] ^ b + 1 for v in range(8)))
    return _group_from_elements(elems, 8, "AGL(3,2)")


# ---------------------------------------------------------------------------
# dispatch


def build(spec: FamilySpec) -> PermGroup:
    """Construct the permutation group described by a FamilySpec."""
    fam, params = spec.family, spec.params
    if fam == "cyclic":
        (n,) = params
        return cyclic(n)
    if fam == "abelian":
        return abelian(params)
    if fam == "dihedral":
        (order,) = params
        return dihedral(order)
    if fam == "generalized_quaternion":
        (order,) = params
        return generalized_quaternion(order)
    if fam == "semidihedral":
        (order,) = params
        return semidihedral(order)
    if fam == "modular_p":
        p, n = params
        return modular_p(p, n)
    if fam == "alternating":
        (n,) = params
        return alternating(n)
    if fam == "symmetric":
        (n,) = params
        return symmetric(n)
    if fam == "psl2":
        (q,) = params
        return psl2(q)
    if fam == "pgl2":
        (q,) = params
        return pgl2(q)
    if fam == "pgammal2":
        (q,) = params
        return pgammal2(q)
    if fam == "lf":
        (q,) = params
        return lf(q)
    if fam == "mq":
        (q,) = params
        return mq(q)
    if fam == "agl1":
        (q,) = params
        return agl1(q)
    if fam == "agammal1":
        (q,) = params
        return agammal1(q)
    if fam == "asl1":
        (q,) = params
        return asl1(q)
    if fam == "agl32":
        return agl32()
    if fam == "catalog_entry":
        from .catalog import catalog
        order, index = params
        entries = catalog(order)
        return entries[index].group()
    raise ValueError(f"unknown family {fam!r}")
