"""The dicyclic group T_{4n}: normal forms, conjugacy classes, ordinary and
Brauer characters, and the regular embedding into S_{4n}.

Elements are written r^a s^b with a taken mod 2n and b in {0,1}; the
presentation relations r^{2n}=e, s^2=r^n, s^{-1}rs=r^{-1} drive the
multiplication normal form.  Character values are exact CyclotomicNumbers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .cyclotomic import CyclotomicNumber, cyclo, root_of_unity

__all__ = [
    "DicyclicElement",
    "DicyclicGroup",
    "CharacterFn",
    "class_inner_product",
    "decompose_into",
    "scalar_json",
    "table_report",
]


@dataclass(frozen=True)
class DicyclicElement:
    """Normal form r^a s^b of an element of T_{4n}."""

    n: int
    a: int
    b: int

    def __post_init__(self):
        object.__setattr__(self, "a", self.a % (2 * self.n))
        object.__setattr__(self, "b", self.b % 2)

    def __mul__(self, other: "DicyclicElement") -> "DicyclicElement":
        if self.n != other.n:
            raise ValueError("elements from different groups")
        if self.b == 0:
            return DicyclicElement(self.n, self.a + other.a, other.b)
        # s r^c = r^{-c} s, and s^2 = r^n
        a = self.a - other.a + (self.n if other.b else 0)
        return DicyclicElement(self.n, a, 1 - other.b)

    def inverse(self) -> "DicyclicElement":
        if self.b == 0:
            return DicyclicElement(self.n, -self.a, 0)
        return DicyclicElement(self.n, self.a + self.n, 1)

    def word(self) -> str:
        return f"r^{self.a}*s" if self.b else f"r^{self.a}"

    def __repr__(self):
        if self.b == 0:
            if self.a == 0:
                return "e"
            return "r" if self.a == 1 else f"r^{self.a}"
        if self.a == 0:
            return "s"
        return "r*s" if self.a == 1 else f"r^{self.a}*s"


class DicyclicGroup:
    """T_{4n} with the canonical enumeration r^0..r^{2n-1}, s, rs, ..., r^{2n-1}s."""

    def __init__(self, n: int):
        if n < 1:
            raise ValueError("n must be a positive integer")
        self.n = n
        self.order = 4 * n
        self.elements = tuple(
            DicyclicElement(n, a, b) for b in (0, 1) for a in range(2 * n)
        )
        self._index = {g: i for i, g in enumerate(self.elements)}
        self.identity = self.elements[0]
        self.r = DicyclicElement(n, 1, 0)
        self.s = DicyclicElement(n, 0, 1)
        self._perms = {}
        self._orders = {}

    # -- basic structure ----------------------------------------------------

    def element(self, a: int, b: int = 0) -> DicyclicElement:
        return DicyclicElement(self.n, a, b)

    def index(self, g: DicyclicElement) -> int:
        return self._index[g]

    def multiply(self, g: DicyclicElement, h: DicyclicElement) -> DicyclicElement:
        if g.n != self.n or h.n != self.n:
            raise ValueError("elements from different groups")
        return g * h

    def inverse(self, g: DicyclicElement) -> DicyclicElement:
        return g.inverse()

    def element_order(self, g: DicyclicElement) -> int:
        if g not in self._orders:
            k = 1
            x = g
            while x != self.identity:
                x = x * g
                k += 1
            self._orders[g] = k
        return self._orders[g]

    def power(self, g: DicyclicElement, k: int) -> DicyclicElement:
        result = self.identity
        if k < 0:
            g, k = g.inverse(), -k
        for _ in range(k):
            result = result * g
        return result

    def conjugacy_classes(self):
        """Partition of G into conjugacy classes by brute-force conjugation,
        ordered by the minimal canonical index of a member."""
        seen = set()
        classes = []
        for g in self.elements:
            if g in seen:
                continue
            cls = {x * g * x.inverse() for x in self.elements}
            seen |= cls
            classes.append(tuple(sorted(cls, key=self.index)))
        classes.sort(key=lambda c: self.index(c[0]))
        return tuple(classes)

    def class_of(self, g: DicyclicElement):
        for cls in self.conjugacy_classes():
            if g in cls:
                return cls
        raise ValueError(f"{g} not in group")

    # -- regular embedding ---------------------------------------------------

    def regular_permutation(self, g: DicyclicElement):
        """Left regular action: the permutation tuple p with p[i] = index(g * x_i)."""
        if g not in self._perms:
            self._perms[g] = tuple(self._index[g * x] for x in self.elements)
        return self._perms[g]

    # -- p-regular structure --------------------------------------------------

    def p_regular_elements(self, p: int):
        """All elements whose order is coprime to p, in canonical order."""
        return tuple(g for g in self.elements
                     if math.gcd(self.element_order(g), p) == 1)

    def p_regular_classes(self, p: int):
        return tuple(cls for cls in self.conjugacy_classes()
                     if math.gcd(self.element_order(cls[0]), p) == 1)

    def cyclic_subgroup(self):
        """The cyclic subgroup <r>, in canonical order."""
        return tuple(self.elements[: 2 * self.n])

    def p_regular_cyclic(self, p: int):
        """<r> intersected with the p-regular elements."""
        return tuple(g for g in self.cyclic_subgroup()
                     if math.gcd(self.element_order(g), p) == 1)

    # -- characters ------------------------------------------------------------

    def linear_characters(self):
        """The four linear characters psi_0..psi_3, matching the table rows for
        either parity of n.

        For even n the generator images are psi(r), psi(s) in {1,-1}
        independently; for odd n psi(s) runs over the fourth roots of unity
        and psi(r) = psi(s)^2.
        """
        chars = []
        if self.n % 2 == 0:
            images = [(1, 1), (-1, 1), (1, -1), (-1, -1)]  # (psi(r), psi(s))
            for j, (vr, vs) in enumerate(images):
                values = {
                    g: cyclo(vr**g.a * vs**g.b) for g in self.elements
                }
                chars.append(CharacterFn(self, f"psi:{j}", "ordinary-linear",
                                         self.elements, values, 1))
        else:
            for j in range(4):
                vs = root_of_unity(4, j)
                vr = root_of_unity(4, 2 * j)
                values = {}
                for g in self.elements:
                    v = root_of_unity(4, 2 * j * g.a + j * g.b)
                    values[g] = v
                chars.append(CharacterFn(self, f"psi:{j}", "ordinary-linear",
                                         self.elements, values, 1))
        return chars

    def degree2_character(self, h: int) -> "CharacterFn":
        """chi_h, induced from the character r^k -> omega^{kh} of <r> with
        omega = zeta_{2n}; irreducible exactly for 1 <= h <= n-1."""
        two_n = 2 * self.n
        values = {}
        for g in self.elements:
            if g.b == 0:
                values[g] = (root_of_unity(two_n, g.a * h)
                             + root_of_unity(two_n, -g.a * h))
            else:
                values[g] = cyclo(0)
        return CharacterFn(self, f"chi:{h}", "ordinary-degree-2",
                           self.elements, values, 2)

    def lambda_character(self, h: int, domain=None) -> "CharacterFn":
        """The linear character lambda_h of <r> (or of the given subset of
        <r>): r^k -> omega^{kh}."""
        if domain is None:
            domain = self.cyclic_subgroup()
        two_n = 2 * self.n
        values = {}
        for g in domain:
            if g.b != 0:
                raise ValueError("lambda characters live on the cyclic subgroup")
            values[g] = root_of_unity(two_n, g.a * h)
        return CharacterFn(self, f"lambda:{h}", "cyclic-linear",
                           tuple(domain), values, 1)

    def character_table(self):
        """Ordinary irreducible characters: psi_0..psi_3 then chi_1..chi_{n-1}."""
        return self.linear_characters() + [
            self.degree2_character(h) for h in range(1, self.n)
        ]

    def p_decomposition(self, p: int):
        """4n = p^t * l with p not dividing l; returns (t, l)."""
        t, l = 0, self.order
        while l % p == 0:
            l //= p
            t += 1
        return t, l

    def brauer_characters(self, p: int):
        """Irreducible Brauer characters realized as restrictions to the
        p-regular elements: psi-hat_j for j < epsilon (epsilon = 1 at p = 2,
        else 4) followed by the irreducible, pairwise-distinct chi-hat_h.

        Candidate restrictions chi-hat_h are generated for 1 <= h < l/2 and
        filtered: duplicates of an earlier candidate are dropped, as is any
        candidate that splits as a sum of two linear restrictions.  The
        resulting count matches the number of p-regular classes.
        """
        ghat = self.p_regular_elements(p)
        _, l = self.p_decomposition(p)
        epsilon = 1 if p == 2 else 4
        linear_all = [psi.restrict(ghat) for psi in self.linear_characters()]
        chars = linear_all[:epsilon]
        linear_sums = []
        for i in range(4):
            for j in range(i, 4):
                linear_sums.append({
                    g: linear_all[i](g) + linear_all[j](g) for g in ghat
                })
        kept = []
        h = 1
        while 2 * h < l:
            cand = self.degree2_character(h).restrict(ghat)
            if any(cand.same_values(prev) for prev in kept):
                h += 1
                continue
            if any(all(cand(g) == sv[g] for g in ghat) for sv in linear_sums):
                h += 1
                continue
            kept.append(cand)
            h += 1
        return chars + kept

    def __repr__(self):
        return f"DicyclicGroup(n={self.n}, order={self.order})"


@lru_cache(maxsize=None)
def dicyclic_group(n: int) -> DicyclicGroup:
    return DicyclicGroup(n)


class CharacterFn:
    """A scalar-valued function on a declared subset of T_{4n}.

    `domain` is the subset S (all of G for ordinary characters, the
    p-regular set for Brauer ones, a cyclic subgroup for the lambda_h);
    values are exact.  The degree is the value at the identity.
    """

    def __init__(self, group, name, kind, domain, values, degree, hat=False):
        self.group = group
        self.name = name
        self.kind = kind
        self.domain = tuple(domain)
        self.domain_set = frozenset(domain)
        self.values = dict(values)
        self.degree = degree
        self.hat = hat
        if group.identity not in self.domain_set:
            raise ValueError("character domain must contain the identity")
        if self.values[group.identity] != degree:
            raise ValueError("degree must equal the value at the identity")
        self._conj = None
        self._pairs = {}

    def __call__(self, g) -> CyclotomicNumber:
        try:
            return self.values[g]
        except KeyError:
            raise ValueError(f"{g} is outside the domain of {self.name}") from None

    def conj_value(self, g) -> CyclotomicNumber:
        if self._conj is None:
            self._conj = {x: v.conjugate() for x, v in self.values.items()}
        return self._conj[g]

    def pair_product(self, g, h) -> CyclotomicNumber:
        """phi(g) * conj(phi(h)), cached; the workhorse of Gram double sums."""
        key = (g, h)
        cached = self._pairs.get(key)
        if cached is None:
            cached = self.values[g] * self.conj_value(h)
            self._pairs[key] = cached
        return cached

    def restrict(self, domain, hat=True) -> "CharacterFn":
        kind = self.kind
        if hat and kind.startswith("ordinary"):
            kind = "brauer" + kind[len("ordinary"):]
        values = {g: self.values[g] for g in domain}
        return CharacterFn(self.group, self.name, kind, domain, values,
                           self.degree, hat=hat)

    def same_values(self, other) -> bool:
        if self.domain_set != other.domain_set:
            return False
        return all(self.values[g] == other.values[g] for g in self.domain)

    @property
    def selector(self) -> str:
        return self.name

    def __repr__(self):
        return f"CharacterFn({self.name}{'^' if self.hat else ''}, {self.kind})"


def class_inner_product(phi, psi, elements) -> CyclotomicNumber:
    """(phi, psi)_K = (1/|K|) sum_{g in K} phi(g) psi(g^{-1}) for class
    functions given as CharacterFn objects (or element->value mappings)."""
    phi_of = phi if callable(phi) else phi.__getitem__
    psi_of = psi if callable(psi) else psi.__getitem__
    total = cyclo(0)
    for g in elements:
        total = total + phi_of(g) * psi_of(g.inverse())
    return total / len(tuple(elements))


def decompose_into(target, basis_chars, elements) -> list:
    """Multiplicities of `target` against orthogonal `basis_chars` over the
    given element set, via the class-function inner product."""
    return [class_inner_product(target, chi, elements) for chi in basis_chars]


def scalar_json(x: CyclotomicNumber):
    red = x.reduced()
    approx = red.to_complex()
    return {
        "order": red.order,
        "coeffs": [str(c) for c in red.coeffs],
        "approx": [approx.real, approx.imag],
    }


def table_report(group, characters=None, p=None) -> dict:
    """Machine-readable character table: one row per character, one column
    per class representative, entries as exact coefficient vectors plus
    floating approximations."""
    if characters is None:
        characters = group.character_table()
    if p is None:
        classes = group.conjugacy_classes()
    else:
        classes = group.p_regular_classes(p)
    reps = [cls[0] for cls in classes]
    rows = []
    for char in characters:
        rows.append({
            "character": char.selector,
            "hat": char.hat,
            "kind": char.kind,
            "degree": char.degree,
            "values": [scalar_json(char(rep)) for rep in reps],
        })
    return {
        "n": group.n,
        "group_order": group.order,
        "p": p,
        "class_representatives": [rep.word() for rep in reps],
        "class_sizes": [len(cls) for cls in classes],
        "characters": rows,
    }
