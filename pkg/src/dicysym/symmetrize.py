"""Symmetrized monomials and decomposable symmetrized tensors as explicit
exact vectors, with inner products computed two independent ways: by direct
expansion over the sparse support (the oracle) and by closed-form double or
coset sums over the character domain.

Conventions, fixed once: exponent tuples carry the right action, translated
vectors are symmetrize(alpha * sigma); the induced Hermitian inner product
is conjugate-linear in the second argument.
"""

from __future__ import annotations

from fractions import Fraction

from .cyclotomic import CyclotomicNumber, cyclo
from .orbits import act_poly, act_tensor, stabilizer_poly, stabilizer_tensor

__all__ = [
    "SymmetrizedVector",
    "symmetrize_poly",
    "symmetrize_tensor",
    "inner_direct",
    "gram_poly_closed",
    "gram_tensor_closed",
    "gram_matrix",
    "relabel_poly",
    "apply_poly_symmetrizer",
    "apply_tensor_symmetrizer",
    "orbital_dimension",
]

_ZERO = cyclo(0)


class SymmetrizedVector:
    """Sparse exact coordinate vector in the monomial or product-tensor basis.

    Only exactly-nonzero coefficients are stored; the zero vector has empty
    support.  Provenance (base index, character, translating element) rides
    along for reports.
    """

    __slots__ = ("kind", "coeffs", "base", "character", "translate")

    def __init__(self, kind, coeffs, base=None, character=None, translate=None):
        self.kind = kind
        self.coeffs = {k: v for k, v in coeffs.items() if not v.is_zero()}
        self.base = base
        self.character = character
        self.translate = translate

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def support(self):
        return sorted(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, SymmetrizedVector):
            return NotImplemented
        return self.kind == other.kind and self.coeffs == other.coeffs

    def __repr__(self):
        char = f", {self.character}" if self.character else ""
        return (f"SymmetrizedVector({self.kind}, support={len(self.coeffs)}"
                f"{char})")


def _accumulate(pairs):
    acc = {}
    for key, value in pairs:
        prev = acc.get(key)
        acc[key] = value if prev is None else prev + value
    return acc


def symmetrize_poly(alpha, char, translate=None) -> SymmetrizedVector:
    """The symmetrized monomial at alpha: (phi(1)/|S|) sum_{sigma in S}
    phi(sigma) X^(alpha sigma^-1).  The zero vector is a legal result."""
    group = char.group
    if len(alpha) != group.order:
        raise ValueError("multi-index length must equal the group order")
    scale = Fraction(char.degree, len(char.domain))
    acc = _accumulate(
        (act_poly(alpha, sigma.inverse(), group), char(sigma))
        for sigma in char.domain
    )
    coeffs = {k: v * scale for k, v in acc.items()}
    return SymmetrizedVector("monomial", coeffs, base=alpha,
                             character=char.selector, translate=translate)


def symmetrize_tensor(gamma, char, dim_v, translate=None) -> SymmetrizedVector:
    """The decomposable symmetrized tensor at gamma, as its coefficient
    vector in the orthonormal product basis: coefficient at beta is
    (chi(1)/|S|) sum_{sigma in S, sigma.gamma = beta} chi(sigma)."""
    group = char.group
    if len(gamma) != group.order:
        raise ValueError("sequence length must equal the group order")
    if any(not 1 <= c <= dim_v for c in gamma):
        raise ValueError("sequence entry out of range")
    scale = Fraction(char.degree, len(char.domain))
    acc = _accumulate(
        (act_tensor(gamma, sigma, group), char(sigma)) for sigma in char.domain
    )
    coeffs = {k: v * scale for k, v in acc.items()}
    return SymmetrizedVector("tensor", coeffs, base=gamma,
                             character=char.selector, translate=translate)


def inner_direct(v: SymmetrizedVector, w: SymmetrizedVector) -> CyclotomicNumber:
    """Hermitian inner product by direct expansion over the shared support;
    conjugate-linear in the second argument.  This is the oracle the closed
    forms are checked against."""
    if v.kind != w.kind:
        raise ValueError(f"cannot pair a {v.kind} vector with a {w.kind} vector")
    if len(v.coeffs) > len(w.coeffs):
        v, w = w, v
        total = _ZERO
        for key, a in v.coeffs.items():
            b = w.coeffs.get(key)
            if b is not None:
                total = total + b * a.conjugate()
        return total
    total = _ZERO
    for key, a in v.coeffs.items():
        b = w.coeffs.get(key)
        if b is not None:
            total = total + a * b.conjugate()
    return total


def gram_poly_closed(alpha, sigma1, sigma2, char, stabilizer=None) -> CyclotomicNumber:
    """Closed-form <X^(alpha sigma1,*), X^(alpha sigma2,*)>:

        (phi(1)^2/|S|^2) sum_{mu in S} sum_{tau in G_alpha,
                                            mu sigma1^-1 tau sigma2 in S}
            phi(mu) conj(phi(mu sigma1^-1 tau sigma2))

    which is the double sum of the translated-vector inner product written
    against the fixed right-action convention."""
    group = char.group
    stab = stabilizer if stabilizer is not None else stabilizer_poly(alpha, group)
    in_s = char.domain_set
    inv1 = sigma1.inverse()
    total = _ZERO
    for mu in char.domain:
        left = mu * inv1
        for tau in stab:
            rho = left * tau * sigma2
            if rho in in_s:
                total = total + char.pair_product(mu, rho)
    return total * Fraction(char.degree**2, len(char.domain) ** 2)


def gram_tensor_closed(gamma, sigma1, sigma2, char, stabilizer=None) -> CyclotomicNumber:
    """Closed-form <e*_(sigma1.gamma), e*_(sigma2.gamma)>.

    When the character domain is the whole group (ordinary characters) this
    is the coset sum (chi(1)/|G|) sum_{x in sigma2 G_gamma sigma1^-1} chi(x);
    for a restricted domain S the symmetrizer is no longer a self-adjoint
    idempotent and the general double sum over S x G_gamma is used instead.
    Both paths agree with inner_direct."""
    group = char.group
    stab = stabilizer if stabilizer is not None else stabilizer_tensor(gamma, group)
    inv1 = sigma1.inverse()
    if len(char.domain) == group.order:
        total = _ZERO
        for tau in stab:
            total = total + char(sigma2 * tau * inv1)
        return total * Fraction(char.degree, group.order)
    in_s = char.domain_set
    total = _ZERO
    for rho in char.domain:
        base = rho * sigma2
        for tau in stab:
            mu = base * tau * inv1
            if mu in in_s:
                total = total + char.pair_product(mu, rho)
    return total * Fraction(char.degree**2, len(char.domain) ** 2)


def gram_matrix(orbit, char, kind) -> list:
    """Full closed-form Gram matrix over the orbit transversal, as a nested
    list indexed like the transversal.  Hermitian by construction of the
    underlying form; assembled entry-wise from the closed forms with the
    stabilizer computed once."""
    entry = gram_poly_closed if kind == "monomial" else gram_tensor_closed
    sigmas = orbit.transversal
    size = len(sigmas)
    rows = [[None] * size for _ in range(size)]
    for i in range(size):
        for j in range(i, size):
            value = entry(orbit.representative, sigmas[i], sigmas[j], char,
                          stabilizer=orbit.stabilizer)
            rows[i][j] = value
            if i != j:
                rows[j][i] = value.conjugate()
    return rows


def relabel_poly(v: SymmetrizedVector, sigma, group) -> SymmetrizedVector:
    """Permute the variables of a monomial vector: the basis monomial at beta
    moves to beta*sigma.  For a conjugation-closed domain and a class-function
    character this coincides with translating the defining index."""
    coeffs = {act_poly(key, sigma, group): value for key, value in v.coeffs.items()}
    return SymmetrizedVector(v.kind, coeffs, base=v.base, character=v.character)


def _apply_symmetrizer(v, char, move):
    scale = Fraction(char.degree, len(char.domain))
    acc = {}
    for sigma in char.domain:
        weight = char(sigma)
        for key, value in v.coeffs.items():
            moved = move(key, sigma)
            prev = acc.get(moved)
            term = weight * value
            acc[moved] = term if prev is None else prev + term
    return SymmetrizedVector(v.kind, {k: w * scale for k, w in acc.items()},
                             character=char.selector)


def apply_poly_symmetrizer(v: SymmetrizedVector, char) -> SymmetrizedVector:
    """Apply the averaging operator to an arbitrary monomial vector."""
    group = char.group
    return _apply_symmetrizer(v, char,
                              lambda key, sigma: act_poly(key, sigma.inverse(), group))


def apply_tensor_symmetrizer(v: SymmetrizedVector, char) -> SymmetrizedVector:
    group = char.group
    return _apply_symmetrizer(v, char,
                              lambda key, sigma: act_tensor(key, sigma, group))


def orbital_dimension(stabilizer, constituents) -> int:
    """Dimension of an orbital subspace from the character side:
    sum_i chi_i(1) * (chi_i, 1)_{G_alpha} over the irreducible constituents.

    The result must be a non-negative rational integer; anything else means
    the formula was applied outside its hypotheses and raises."""
    size = len(stabilizer)
    total = Fraction(0)
    for chi in constituents:
        acc = _ZERO
        for tau in stabilizer:
            acc = acc + chi(tau)
        if not acc.is_rational():
            raise ValueError(f"non-rational stabilizer sum for {chi.selector}")
        total += Fraction(chi.degree) * acc.rational_value() / size
    if total.denominator != 1 or total < 0:
        raise ValueError(f"orbital dimension {total} is not a non-negative integer")
    return int(total)
