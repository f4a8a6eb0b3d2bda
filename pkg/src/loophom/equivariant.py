"""Finite subgroups of O(2) acting on loops, quotient homology, transfers.

A finite subgroup G of O(2) acts on the free loop space by rotating (and,
for reflections, reversing) the loop parameter.  Rotations act trivially on
homology; every reflection acts by loop reversal.  Three families are
modeled:

* ``cyclic(m)``              — rotations only, order m;
* ``dihedral(m)``            — m rotations and m reflections through the
                               standard axis, order 2m;
* ``conjugate_dihedral(m,s)``— the copy of the dihedral group conjugated by
                               the rotation through s (a fraction of a full
                               turn).  ``theta_group()`` is the order-2 copy
                               generated by the basepoint-moving reflection.

Homology of the quotient is modeled through invariant representatives:
rationally, ``q_*`` identifies H(X/G; Q) with the G-invariants of H(X; Q),
and we store the invariant projection (z + theta z)/2 of a representative.
The transfer ``tr`` goes the other way; its two defining properties

    q_* ( tr(a) )  =  |G| . a           (on quotient homology)
    tr ( q_*(z) )  =  sum_g g_*(z)      (on covering-space homology)

pin it exactly.  The transfer product on quotient homology is

    P_G(a, b)  =  q_*( tr(a) * tr(b) ),

an associative, graded-commutative product with the same sign rule as the
loop product; its unit is q_*(E) / |G|^2.  The same construction on the
based algebra gives the based transfer product (``POmega`` in the CLI).

Everything here requires ring Q: the invariant-projection bookkeeping
divides by 2, and no integral quotient structure is modeled.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction

from .core import DomainError, Element, Monomial, RING_Q, StructureError, scalar_str
from .maps import LinearMap, theta_star
from .spaces import LOOP, OMEGA, BettiTable, Space, TableRow


@dataclass(frozen=True)
class Subgroup:
    """A finite subgroup of O(2), up to the data homology can see."""

    kind: str  # "cyclic" | "dihedral" | "conjugate_dihedral"
    m: int
    rotation: object = None  # conjugating rotation, conjugate_dihedral only

    def __post_init__(self):
        if self.kind not in ("cyclic", "dihedral", "conjugate_dihedral"):
            raise DomainError(f"unknown subgroup kind {self.kind!r}")
        if self.m < 1:
            raise DomainError(f"subgroup parameter m must be >= 1, got {self.m}")
        if self.kind == "conjugate_dihedral" and self.rotation is None:
            raise DomainError("conjugate_dihedral needs its conjugating rotation")

    @property
    def order(self) -> int:
        return self.m if self.kind == "cyclic" else 2 * self.m

    @property
    def has_reflections(self) -> bool:
        return self.kind != "cyclic"

    @property
    def label(self) -> str:
        if self.kind == "cyclic":
            return f"C{self.m}"
        if self.kind == "dihedral":
            return f"D{self.m}"
        if self.m == 1:
            return "theta"
        return f"D{self.m}@{self.rotation}"

    def homology_factors(self):
        """The list of g_* for g in G; each entry is 'id' or 'theta'."""
        if self.kind == "cyclic":
            return ("id",) * self.m
        return ("id",) * self.m + ("theta",) * self.m


def cyclic(m: int) -> Subgroup:
    return Subgroup("cyclic", m)


def dihedral(m: int) -> Subgroup:
    return Subgroup("dihedral", m)


def conjugate_dihedral(m: int, rotation) -> Subgroup:
    return Subgroup("conjugate_dihedral", m, Fraction(rotation))


def theta_group() -> Subgroup:
    """The order-2 group generated by the basepoint-moving reflection."""
    return conjugate_dihedral(1, Fraction(1, 2))


def homology_action(group: Subgroup, space: Space) -> LinearMap:
    """The action of any reflection of G on homology (identity if none)."""
    from .maps import chi_star

    if group.has_reflections:
        return theta_star(space)
    return chi_star(space)


class Quotient:
    """Rational homology of X/G with the transfer product, X = loop or omega.

    Classes are `QElement` values carrying their invariant representative in
    H(X; Q); `project` is q_*, `transfer` is tr.
    """

    def __init__(self, space: Space, group: Subgroup):
        if space.ring != RING_Q:
            raise DomainError("quotient homology bookkeeping requires ring Q")
        if space.kind not in (LOOP, OMEGA):
            raise DomainError("quotients are modeled for the loop and omega spaces")
        if space.n < 3:
            raise DomainError("quotient claims are modeled for n >= 3")
        self.space = space
        self.group = group
        self.action = homology_action(group, space)
        self._invariants_cache: dict = {}

    # -- the two structure maps ------------------------------------------

    def project(self, elt: Element) -> "QElement":
        """q_*: push a covering-space class down to the quotient.

        The stored representative is the invariant projection (z+theta z)/2;
        the anti-invariant part of z is exactly the kernel of q_*.
        """
        if elt.algebra is not self.space.algebra:
            raise StructureError(
                f"q expects an element of {self.space.algebra.label}"
            )
        rep = (elt + self.action(elt)) * Fraction(1, 2)
        return QElement(self, rep)

    def transfer(self, a: "QElement") -> Element:
        """tr: wrong-way map back to the covering space; tr(q z) = sum_g g z."""
        if not isinstance(a, QElement) or a.quotient is not self:
            raise StructureError("transfer expects a class on this quotient")
        rep = a.rep
        if self.action(rep) != rep:
            raise StructureError(
                f"non-invariant representative {rep} on the quotient"
            )
        return self.group.order * rep

    def action_sum(self, elt: Element) -> Element:
        """sum_{g in G} g_*(elt), by explicit enumeration of the elements."""
        total = self.space.algebra.zero()
        for g in self.group.homology_factors():
            total = total + (self.action(elt) if g == "theta" else elt)
        return total

    # -- the transfer product --------------------------------------------

    def product(self, a: "QElement", b: "QElement") -> "QElement":
        """P_G(a, b) = q_*( tr(a) * tr(b) )."""
        if not isinstance(a, QElement) or not isinstance(b, QElement):
            raise StructureError("transfer product expects quotient classes")
        if a.quotient is not self or b.quotient is not self:
            raise StructureError("transfer product arguments live on different quotients")
        return self.project(self.transfer(a) * self.transfer(b))

    def unit(self) -> "QElement":
        """The two-sided unit e = q_*(E) / |G|^2 of the transfer product."""
        return self.project(self.space.unit) * Fraction(1, self.group.order**2)

    # -- graded pieces ----------------------------------------------------

    def invariants(self, degree: int) -> list:
        """Basis monomials of degree d fixed by the action.

        For reflections these are the monomials with an even number of
        sign-reversed letters; for cyclic groups, everything.
        """
        hit = self._invariants_cache.get(degree)
        if hit is not None:
            return list(hit)
        out = []
        for mono in self.space.algebra.basis(degree):
            elt = self.space.algebra.monomial_element(mono)
            if self.action.image_of_monomial(mono) == elt:
                out.append(mono)
        self._invariants_cache[degree] = tuple(out)
        return out

    def basis(self, degree: int) -> list:
        """Quotient-homology basis in one degree, as QElements."""
        return [
            QElement(self, self.space.algebra.monomial_element(m))
            for m in self.invariants(degree)
        ]

    def betti(self, max_degree: int) -> BettiTable:
        if max_degree < 0:
            raise DomainError(f"max_degree must be >= 0, got {max_degree}")
        rows = []
        for d in range(max_degree + 1):
            monos = self.invariants(d)
            if not monos:
                continue
            gens = tuple(
                f"q({self.space.algebra.monomial_str(m)})" for m in monos
            )
            families = {self.space.family_of(m) for m in monos}
            family = families.pop() if len(families) == 1 else None
            rows.append(TableRow(d, len(monos), (), gens, family))
        return BettiTable(
            self.space.kind,
            self.space.n,
            self.space.ring,
            self.group.label,
            max_degree,
            tuple(rows),
        )

    def __repr__(self):
        return f"Quotient({self.space!r} / {self.group.label})"


class QElement:
    """A quotient-homology class, stored by its invariant representative.

    `*` is the transfer product P_G and `**` iterates it (the 0th power is
    the transfer unit).  Addition and scalar multiplication are inherited
    from representatives.
    """

    __slots__ = ("quotient", "rep")

    def __init__(self, quotient: Quotient, rep: Element):
        self.quotient = quotient
        self.rep = rep

    def _check_same(self, other: "QElement"):
        if self.quotient is not other.quotient:
            raise StructureError("cannot combine classes on different quotients")

    def __bool__(self):
        return bool(self.rep)

    def degrees(self):
        return self.rep.degrees()

    def degree(self):
        return self.rep.degree()

    def is_homogeneous(self):
        return self.rep.is_homogeneous()

    def homogeneous_parts(self):
        return {
            d: QElement(self.quotient, part)
            for d, part in self.rep.homogeneous_parts().items()
        }

    def __add__(self, other):
        if not isinstance(other, QElement):
            return NotImplemented
        self._check_same(other)
        return QElement(self.quotient, self.rep + other.rep)

    def __sub__(self, other):
        if not isinstance(other, QElement):
            return NotImplemented
        self._check_same(other)
        return QElement(self.quotient, self.rep - other.rep)

    def __neg__(self):
        return QElement(self.quotient, -self.rep)

    def __mul__(self, other):
        if isinstance(other, QElement):
            return self.quotient.product(self, other)
        if isinstance(other, (int, Fraction)):
            return QElement(self.quotient, self.rep * other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return QElement(self.quotient, self.rep / other)
        return NotImplemented

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise DomainError(f"exponent must be a natural number, got {k!r}")
        out = self.quotient.unit()
        for _ in range(k):
            out = self.quotient.product(out, self)
        return out

    def __eq__(self, other):
        if not isinstance(other, QElement):
            return NotImplemented
        return self.quotient is other.quotient and self.rep == other.rep

    def __hash__(self):
        return hash((id(self.quotient), self.rep))

    def __str__(self):
        if not self.rep:
            return "0"
        alg = self.rep.algebra
        chunks = []
        for mono, coeff in self.rep.sorted_terms():
            negative = coeff < 0
            mag = -coeff if negative else coeff
            body = f"q({alg.monomial_str(mono)})"
            if mag != 1:
                body = f"{scalar_str(mag)}*{body}"
            if not chunks:
                chunks.append("-" + body if negative else body)
            else:
                chunks.append((" - " if negative else " + ") + body)
        return "".join(chunks)

    def __repr__(self):
        return f"<{self} on {self.quotient!r}>"


@functools.lru_cache(maxsize=None)
def quotient(space: Space, group: Subgroup) -> Quotient:
    """Cached quotient constructor, so object identity follows (space, group)."""
    return Quotient(space, group)


# ----------------------------------------------------------------------
# distinguished nonnilpotent classes
# ----------------------------------------------------------------------


def mu_class(q: Quotient) -> QElement:
    """mu = q_*(U*U) on a loop quotient, n odd (degree 3n-2)."""
    if q.space.kind != LOOP or q.space.n % 2 == 0:
        raise DomainError("mu lives on loop quotients with n odd")
    return q.project(q.space.generator("Theta"))


def eta_class(q: Quotient) -> QElement:
    """eta = q_*(Theta*Theta) on a loop quotient, n even (degree 5n-4)."""
    if q.space.kind != LOOP or q.space.n % 2:
        raise DomainError("eta lives on loop quotients with n even")
    theta = q.space.generator("Theta")
    return q.project(theta * theta)


# ----------------------------------------------------------------------
# geometric two-argument products on the order-2 quotients
# ----------------------------------------------------------------------


def a_product(variant: str, q: Quotient, a: QElement, b: QElement) -> QElement:
    """The geometric class-A product on an order-2 reflection quotient.

    `variant` is "vartheta" (the axis reflection, i.e. the D1 quotient) or
    "theta" (the basepoint-moving reflection).  The second argument must be
    homogeneous: the construction's sign depends on its degree.

    For the vartheta variant with n odd the product is identically zero; in
    the remaining cases it agrees with the transfer product up to the sign
    (-1)^{n(n-j)}, j = deg b.
    """
    if variant not in ("vartheta", "theta"):
        raise DomainError(f"unknown A-product variant {variant!r}")
    if q.space.kind != LOOP:
        raise DomainError("A-products live on loop quotients")
    if variant == "vartheta":
        if not (q.group.kind == "dihedral" and q.group.m == 1):
            raise DomainError("the vartheta A-product needs the D1 quotient")
    else:
        if not (q.group.kind == "conjugate_dihedral" and q.group.m == 1):
            raise DomainError("the theta A-product needs the theta quotient")
    if a.quotient is not q or b.quotient is not q:
        raise StructureError("A-product arguments live on a different quotient")
    if not b:
        return QElement(q, q.space.algebra.zero())
    if not b.is_homogeneous():
        raise DomainError(
            f"A-product needs a homogeneous second argument, degrees {b.degrees()}"
        )
    n = q.space.n
    if variant == "vartheta" and n % 2:
        return QElement(q, q.space.algebra.zero())
    j = b.degree()
    sign = -1 if (n * (n - j)) % 2 else 1
    return q.product(a, b) * sign
