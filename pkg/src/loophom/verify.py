"""Mechanical verification suites for every identity the package models.

Each suite checks one cluster of identities by exhaustive enumeration of
basis classes up to a degree bound, with exact arithmetic throughout.  A
suite returns `Check` records — one per identity and context, carrying the
first counterexample on failure — and `run` assembles them into a `Report`
with stable, printable lines and an overall verdict.

Default bounds: product identities up to total degree 60, transfer axioms
and stability/bijectivity sweeps up to degree 100, powers of nonnilpotent
classes up to 25, reversal signs on Pontrjagin powers up to 40.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .core import DomainError, Element, RING_Q, RING_Z
from .equivariant import (
    QElement,
    Quotient,
    Subgroup,
    a_product,
    cyclic,
    dihedral,
    eta_class,
    mu_class,
    quotient,
    theta_group,
)
from .maps import (
    chi_star,
    ev_star,
    j_shriek,
    j_star,
    reversal_power_sign,
    theta_star,
)
from .spaces import based_loop_space, loop_space, sphere_space

DEFAULT_NS = (3, 4, 5, 6)
PRODUCT_BOUND = 60
SWEEP_BOUND = 100
POWER_BOUND = 25
REVERSAL_POWER_BOUND = 40
TORSION_POWER_BOUND = 20

SUITE_NAMES = (
    "algebra",
    "presentation",
    "maps",
    "gysin",
    "transfer",
    "quotient-product",
    "main-theorem",
    "theta-vs-vartheta",
    "a-products",
    "quotient-homs",
)


@dataclass
class Check:
    label: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        mark = "ok  " if self.passed else "FAIL"
        out = f"[{mark}] {self.label}"
        if not self.passed and self.detail:
            out += f"  -- {self.detail}"
        return out


@dataclass
class Report:
    title: str
    checks: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def render(self) -> str:
        lines = [self.title]
        lines += [c.line() for c in self.checks]
        good = sum(1 for c in self.checks if c.passed)
        lines.append(f"{good}/{len(self.checks)} checks passed")
        return "\n".join(lines)


# ----------------------------------------------------------------------
# small exact linear algebra
# ----------------------------------------------------------------------


def rank_of(elements, monomials) -> int:
    """Rank of the span of `elements` against an ordered monomial basis."""
    cols = list(monomials)
    rows = [[Fraction(e.coefficient(m)) for m in cols] for e in elements]
    rank = 0
    for col in range(len(cols)):
        pivot = None
        for r in range(rank, len(rows)):
            if rows[r][col]:
                pivot = r
                break
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = Fraction(1) / rows[rank][col]
        rows[rank] = [v * inv for v in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col]:
                factor = rows[r][col]
                rows[r] = [a - factor * b for a, b in zip(rows[r], rows[rank])]
        rank += 1
    return rank


def monomials_up_to(algebra, bound: int):
    """[(degree, monomial)] for every basis monomial of degree <= bound."""
    out = []
    for d in range(bound + 1):
        for m in algebra.basis(d):
            out.append((d, m))
    return out


# ----------------------------------------------------------------------
# suites
# ----------------------------------------------------------------------


def suite_algebra(n, rings, D, K):
    """Ring axioms of the products: associativity, commutation, unit, torsion."""
    D = PRODUCT_BOUND if D is None else D
    checks = []
    for ring in rings:
        for space in (loop_space(n, ring), based_loop_space(n, ring), sphere_space(n, ring)):
            alg = space.algebra
            tag = f"{alg.label}"
            ms = [(d, alg.monomial_element(m)) for d, m in monomials_up_to(alg, D)]
            unit = alg.unit()

            bad = None
            for d, u in ms:
                if u * unit != u or unit * u != u:
                    bad = f"u={u}"
                    break
            checks.append(Check(f"{tag}: unit is two-sided on degrees <= {D}", bad is None, bad or ""))

            bad = None
            for du, u in ms:
                for dv, v in ms:
                    if du + dv > D:
                        break
                    if space.kind == "omega":
                        # genuinely commutative polynomial ring
                        if u * v != v * u:
                            bad = f"u={u}, v={v}"
                            break
                    else:
                        sign = -1 if ((du - n) * (dv - n)) % 2 else 1
                        if v * u != sign * (u * v):
                            bad = f"u={u}, v={v}"
                            break
                if bad:
                    break
            label = (
                f"{tag}: commutativity on basis pairs, total degree <= {D}"
                if space.kind == "omega"
                else f"{tag}: v*u = (-1)^((deg u - n)(deg v - n)) u*v, total degree <= {D}"
            )
            checks.append(Check(label, bad is None, bad or ""))

            bad = None
            for du, u in ms:
                for dv, v in ms:
                    if du + dv > D:
                        break
                    uv = u * v
                    for dw, w in ms:
                        if du + dv + dw > D:
                            break
                        if uv * w != u * (v * w):
                            bad = f"u={u}, v={v}, w={w}"
                            break
                    if bad:
                        break
                if bad:
                    break
            checks.append(
                Check(f"{tag}: (u*v)*w = u*(v*w) on basis triples, total degree <= {D}", bad is None, bad or "")
            )

    # torsion lives exactly in degrees 2r(n-1), and only over Z, n even
    if RING_Z in rings:
        alg = loop_space(n, RING_Z).algebra
        found = {
            d
            for d in range(D + 1)
            for m in alg.basis(d)
            if alg.is_torsion_monomial(m)
        }
        expected = (
            {2 * r * (n - 1) for r in range(1, D) if 2 * r * (n - 1) <= D}
            if n % 2 == 0
            else set()
        )
        ok = found == expected
        checks.append(
            Check(
                f"{alg.label}: torsion exactly in degrees 2r(n-1) up to {D}",
                ok,
                "" if ok else f"found {sorted(found)}, expected {sorted(expected)}",
            )
        )
    return checks


def suite_presentation(n, rings, D, K):
    """Generators generate, *Theta stability, nonnilpotence, torsion facts."""
    D = PRODUCT_BOUND if D is None else D
    K = POWER_BOUND if K is None else K
    checks = []
    for ring in rings:
        space = loop_space(n, ring)
        alg = space.algebra
        tag = alg.label

        # every basis class is the stated product of named generators
        bad = None
        for d, m in monomials_up_to(alg, D):
            if n % 2:
                a, k = m
                built = space.generator("A") ** a * space.generator("U") ** k
            else:
                s, a, k = m
                built = (
                    space.generator("sigma1") ** s
                    * space.generator("A") ** a
                    * space.generator("Theta") ** k
                )
            if built != alg.monomial_element(m):
                bad = f"monomial {alg.monomial_str(m)} rebuilt as {built}"
                break
        names = "A,U" if n % 2 else "A,sigma1,Theta"
        checks.append(
            Check(f"{tag}: every basis class <= {D} is a product of {names}", bad is None, bad or "")
        )

        # multiplication by Theta: H_k -> H_{k+2n-2} bijective for 0<k<=D,
        # except (n odd, k=1) where H_1 = 0 yet H_{2n-1} = <U>
        theta = space.generator("Theta")
        bad = None
        for k in range(1, D + 1):
            src = alg.basis(k)
            dst = alg.basis(k + 2 * n - 2)
            if n % 2 and k == 1:
                if src != [] or len(dst) != 1:
                    bad = f"k=1 sharpness: H_1 basis {src}, H_{2*n-1} basis {dst}"
                    break
                continue
            images = [alg.monomial_element(m) * theta for m in src]
            if any(not img for img in images):
                bad = f"k={k}: *Theta kills a basis class"
                break
            hit = set()
            for img in images:
                if len(img.terms) != 1:
                    bad = f"k={k}: image not monomial: {img}"
                    break
                mono, coeff = next(iter(img.terms.items()))
                if coeff not in (1, -1):
                    bad = f"k={k}: non-unimodular image {img}"
                    break
                hit.add(mono)
            if bad:
                break
            if hit != set(dst):
                bad = f"k={k}: images {sorted(hit)} vs basis {dst}"
                break
        checks.append(
            Check(
                f"{tag}: *Theta is a bijection H_k -> H_(k+2n-2) for 0<k<={D} "
                f"(k=1 sharp for n odd)",
                bad is None,
                bad or "",
            )
        )

        # nonnilpotence
        bad = None
        power = alg.unit()
        for k in range(1, K + 1):
            power = power * theta
            if not power:
                bad = f"Theta^{k} = 0"
                break
        checks.append(Check(f"{tag}: Theta^k != 0 for k <= {K}", bad is None, bad or ""))

        if n % 2 == 0:
            a_cls = space.generator("A")
            bad = None
            for k in range(1, TORSION_POWER_BOUND + 1):
                cls = a_cls * theta**k
                if ring == RING_Q:
                    if cls:
                        bad = f"A*Theta^{k} = {cls} != 0 over Q"
                        break
                else:
                    if not cls:
                        bad = f"A*Theta^{k} = 0 over Z"
                        break
                    if 2 * cls:
                        bad = f"2*(A*Theta^{k}) = {2 * cls} != 0"
                        break
            label = (
                f"{tag}: A*Theta^k = 0 for 1<=k<={TORSION_POWER_BOUND}"
                if ring == RING_Q
                else f"{tag}: A*Theta^k != 0 and 2*(A*Theta^k) = 0 for 1<=k<={TORSION_POWER_BOUND}"
            )
            checks.append(Check(label, bad is None, bad or ""))
    return checks


def suite_maps(n, rings, D, K):
    """Loop reversal, chi, basepoint evaluation."""
    D = PRODUCT_BOUND if D is None else D
    checks = []
    for ring in rings:
        loop = loop_space(n, ring)
        omega = based_loop_space(n, ring)
        th = theta_star(loop)
        tho = theta_star(omega)
        ev = ev_star(n, ring)
        sphere = sphere_space(n, ring)

        for space, mp in ((loop, th), (omega, tho)):
            alg = space.algebra
            bad = None
            for d, m in monomials_up_to(alg, D):
                u = alg.monomial_element(m)
                if mp(mp(u)) != u:
                    bad = f"u={u}"
                    break
            checks.append(
                Check(f"{alg.label}: theta(theta(u)) = u on degrees <= {D}", bad is None, bad or "")
            )

        alg = loop.algebra
        ms = [(d, alg.monomial_element(m)) for d, m in monomials_up_to(alg, D)]
        bad = None
        for du, u in ms:
            for dv, v in ms:
                if du + dv > D:
                    break
                if th(u * v) != th(u) * th(v):
                    bad = f"u={u}, v={v}"
                    break
            if bad:
                break
        checks.append(
            Check(f"{alg.label}: theta(u*v) = theta(u)*theta(v), total degree <= {D}", bad is None, bad or "")
        )

        theta_cls = loop.generator("Theta")
        want = theta_cls if (n - 1) % 2 == 0 else -theta_cls
        ok = th(theta_cls) == want
        checks.append(
            Check(f"{alg.label}: theta(Theta) = (-1)^(n-1)*Theta", ok, "" if ok else f"got {th(theta_cls)}")
        )
        ok = th(loop.generator("A")) == loop.generator("A") and th(loop.unit) == loop.unit
        checks.append(Check(f"{alg.label}: theta fixes A and E", ok, ""))

        chi = chi_star(loop)
        bad = None
        for d, u in ms:
            if chi(u) != u:
                bad = f"u={u}"
                break
        checks.append(Check(f"{alg.label}: chi = identity on degrees <= {D}", bad is None, bad or ""))

        # Pontrjagin sign law and the power-sign case split
        oalg = omega.algebra
        x = omega.generator("x")
        kmax = max(REVERSAL_POWER_BOUND, D // max(1, n - 1))
        powers = [oalg.unit()]
        for k in range(1, kmax + 1):
            powers.append(powers[-1] * x)
        bad = None
        for i in range(kmax + 1):
            for j in range(kmax + 1 - i):
                a, b = powers[i], powers[j]
                sign = -1 if (i * (n - 1) * j * (n - 1)) % 2 else 1
                if sign * (tho(a) * tho(b)) != tho(a * b):
                    bad = f"a=x^{i}, b=x^{j}"
                    break
            if bad:
                break
        checks.append(
            Check(
                f"{oalg.label}: (-1)^(|a||b|) theta(a)*theta(b) = theta(a*b), powers <= {kmax}",
                bad is None,
                bad or "",
            )
        )

        bad = None
        for k in range(REVERSAL_POWER_BOUND + 1):
            if n % 2 or ((k - 1) * k) % 4 == 0:
                expected = -1 if k % 2 else 1
            else:
                expected = 1 if k % 2 else -1
            if tho(powers[k]) != expected * powers[k]:
                bad = f"k={k}: theta(x^{k}) = {tho(powers[k])}, expected sign {expected}"
                break
            if reversal_power_sign(n, k) != expected:
                bad = f"k={k}: closed-form sign disagrees with case split"
                break
        checks.append(
            Check(
                f"{oalg.label}: theta(x^k) sign matches the parity case split, k <= {REVERSAL_POWER_BOUND}",
                bad is None,
                bad or "",
            )
        )

        # evaluation at the basepoint is an algebra map
        bad = None
        for du, u in ms:
            for dv, v in ms:
                if du + dv > D:
                    break
                if ev(u * v) != ev(u) * ev(v):
                    bad = f"u={u}, v={v}"
                    break
            if bad:
                break
        checks.append(
            Check(f"{alg.label}: ev(u*v) = ev(u).ev(v), total degree <= {D}", bad is None, bad or "")
        )
        ok = ev(loop.generator("A")) == sphere.generator("pt") and ev(loop.unit) == sphere.unit
        checks.append(Check(f"{alg.label}: ev(A) = pt, ev(E) = fundamental", ok, ""))
    return checks


def suite_gysin(n, rings, D, K):
    """The three compatibility identities for j_! and j_*."""
    D = PRODUCT_BOUND if D is None else D
    checks = []
    for ring in rings:
        loop = loop_space(n, ring)
        omega = based_loop_space(n, ring)
        jb = j_shriek(n, ring)
        js = j_star(n, ring)
        tag = f"S^{n}({ring})"
        lms = [(d, loop.algebra.monomial_element(m)) for d, m in monomials_up_to(loop.algebra, D)]
        oms = [(d, omega.algebra.monomial_element(m)) for d, m in monomials_up_to(omega.algebra, D)]

        bad = None
        for du, u in lms:
            for dv, v in lms:
                if du + dv > D:
                    break
                if jb(u * v) != jb(u) * jb(v):
                    bad = f"u={u}, v={v}"
                    break
            if bad:
                break
        checks.append(Check(f"{tag}: j!(u*v) = j!(u).j!(v), total degree <= {D}", bad is None, bad or ""))

        bad = None
        for dy, y in oms:
            for da, a in lms:
                if dy + da > D:
                    break
                if js(y) * a != js(y * jb(a)):
                    bad = f"y={y}, a={a}"
                    break
            if bad:
                break
        checks.append(Check(f"{tag}: j*(y)*a = j*(y.j!(a)), total degree <= {D}", bad is None, bad or ""))

        a_cls = loop.generator("A")
        bad = None
        for da, a in lms:
            if js(jb(a)) != a_cls * a:
                bad = f"a={a}"
                break
        checks.append(Check(f"{tag}: j*(j!(a)) = A*a on degrees <= {D}", bad is None, bad or ""))

        x = omega.generator("x")
        spot = jb(loop.unit) == omega.unit and js(omega.unit) == a_cls
        if n % 2:
            spot = spot and jb(loop.generator("U")) == x
        spot = spot and jb(loop.generator("Theta")) == x * x
        checks.append(Check(f"{tag}: j!(E)=1, j!(Theta)=x^2" + (", j!(U)=x" if n % 2 else "") + ", j*(1)=A", spot, ""))
    return checks


def _transfer_groups():
    groups = [dihedral(m) for m in range(1, 6)]
    groups.append(theta_group())
    groups += [cyclic(m) for m in range(2, 8)]
    return groups


def suite_transfer(n, rings, D, K):
    """The transfer axioms and the quotient/covering product comparison."""
    D = SWEEP_BOUND if D is None else D
    checks = []
    loop = loop_space(n, RING_Q)
    alg = loop.algebra
    all_ms = monomials_up_to(alg, D)
    for group in _transfer_groups():
        q = quotient(loop, group)
        order = group.order
        tag = f"LS^{n}/{group.label}"

        bad = None
        for d in range(D + 1):
            for a in q.basis(d):
                if q.project(q.transfer(a)) != order * a:
                    bad = f"a={a}"
                    break
            if bad:
                break
        checks.append(Check(f"{tag}: q(tr(a)) = |G|*a on degrees <= {D}", bad is None, bad or ""))

        bad = None
        for d, m in all_ms:
            z = alg.monomial_element(m)
            if q.transfer(q.project(z)) != q.action_sum(z):
                bad = f"z={z}"
                break
        checks.append(
            Check(f"{tag}: tr(q(z)) = sum_g g(z) on degrees <= {D}", bad is None, bad or "")
        )

        bad = None
        for d in range(D + 1):
            for m in q.invariants(d):
                z = alg.monomial_element(m)
                if q.project(z).rep != z:
                    bad = f"z={z}"
                    break
            if bad:
                break
        checks.append(
            Check(f"{tag}: q is injective on invariants (projection fixes them), degrees <= {D}", bad is None, bad or "")
        )

        qms = [(d, b) for d in range(D + 1) for b in q.basis(d)]
        bad = None
        for da, a in qms:
            for db, b in qms:
                if da + db > D:
                    break
                if q.transfer(q.product(a, b)) != order * (q.transfer(a) * q.transfer(b)):
                    bad = f"a={a}, b={b}"
                    break
            if bad:
                break
        checks.append(
            Check(f"{tag}: tr(P(a,b)) = |G|*tr(a)*tr(b), total degree <= {D}", bad is None, bad or "")
        )

        scale = Fraction(1, order**2)
        bad = None
        for da, a in qms:
            for db, b in qms:
                if da + db > D:
                    break
                if q.project(a.rep * b.rep) != scale * q.product(a, b):
                    bad = f"x={a.rep}, y={b.rep}"
                    break
            if bad:
                break
        checks.append(
            Check(
                f"{tag}: q(x*y) = |G|^-2 P(q(x),q(y)) for invariant x,y, total degree <= {D}",
                bad is None,
                bad or "",
            )
        )

        if group.kind == "cyclic":
            bad = None
            for d in range(D + 1):
                if q.invariants(d) != alg.basis(d):
                    bad = f"degree {d}"
                    break
            checks.append(
                Check(f"{tag}: rotations leave every class invariant, degrees <= {D}", bad is None, bad or "")
            )

    # unscaled products on dihedral quotients do not depend on m
    base = quotient(loop, dihedral(1))
    pair_bound = min(D, PRODUCT_BOUND)
    qms = [(d, m) for d in range(pair_bound + 1) for m in base.invariants(d)]
    bad = None
    for m in range(2, 6):
        qm = quotient(loop, dihedral(m))
        scale_1 = Fraction(1, dihedral(1).order ** 2)
        scale_m = Fraction(1, dihedral(m).order ** 2)
        for da, ma in qms:
            for db, mb in qms:
                if da + db > pair_bound:
                    break
                a1 = base.project(alg.monomial_element(ma))
                b1 = base.project(alg.monomial_element(mb))
                am = qm.project(alg.monomial_element(ma))
                bm = qm.project(alg.monomial_element(mb))
                lhs = (scale_1 * base.product(a1, b1)).rep
                rhs = (scale_m * qm.product(am, bm)).rep
                if lhs != rhs:
                    bad = f"m={m}, x={ma}, y={mb}"
                    break
            if bad:
                break
        if bad:
            break
    checks.append(
        Check(
            f"LS^{n}/D_m: unscaled transfer products agree for m in 1..5, total degree <= {pair_bound}",
            bad is None,
            bad or "",
        )
    )
    return checks


def suite_quotient_product(n, rings, D, K):
    """Ring axioms of the transfer product on quotient homology."""
    D = PRODUCT_BOUND if D is None else D
    checks = []
    loop = loop_space(n, RING_Q)
    for group in (dihedral(1), dihedral(2), theta_group(), cyclic(3)):
        q = quotient(loop, group)
        tag = f"LS^{n}/{group.label}"
        qms = [(d, b) for d in range(D + 1) for b in q.basis(d)]
        e = q.unit()

        bad = None
        for d, a in qms:
            if q.product(e, a) != a or q.product(a, e) != a:
                bad = f"a={a}"
                break
        checks.append(Check(f"{tag}: P(e,a) = a = P(a,e) on degrees <= {D}", bad is None, bad or ""))

        bad = None
        for da, a in qms:
            for db, b in qms:
                if da + db > D:
                    break
                sign = -1 if ((da - n) * (db - n)) % 2 else 1
                if q.product(b, a) != sign * q.product(a, b):
                    bad = f"a={a}, b={b}"
                    break
            if bad:
                break
        checks.append(
            Check(
                f"{tag}: P(b,a) = (-1)^((deg a - n)(deg b - n)) P(a,b), total degree <= {D}",
                bad is None,
                bad or "",
            )
        )

        bad = None
        for da, a in qms:
            for db, b in qms:
                if da + db > D:
                    break
                ab = q.product(a, b)
                for dc, c in qms:
                    if da + db + dc > D:
                        break
                    if q.product(ab, c) != q.product(a, q.product(b, c)):
                        bad = f"a={a}, b={b}, c={c}"
                        break
                if bad:
                    break
            if bad:
                break
        checks.append(
            Check(f"{tag}: P(P(a,b),c) = P(a,P(b,c)), total degree <= {D}", bad is None, bad or "")
        )
    return checks


def suite_main_theorem(n, rings, D, K):
    """Nonnilpotent quotient classes span their degrees; P(.,class) is bijective."""
    D = SWEEP_BOUND if D is None else D
    K = POWER_BOUND if K is None else K
    checks = []
    loop = loop_space(n, RING_Q)
    q = quotient(loop, dihedral(1))
    if n % 2:
        cls, cls_name, stride, start = mu_class(q), "mu", 2, 0
    else:
        cls, cls_name, stride, start = eta_class(q), "eta", 4, 1

    bad = None
    power = q.unit()
    for k in range(1, K + 1):
        power = q.product(power, cls)
        if not power:
            bad = f"{cls_name}^{k} = 0"
            break
        d = stride * k * (n - 1) + n
        monos = q.invariants(d)
        if len(monos) != 1:
            bad = f"H_{d} has rank {len(monos)}, expected 1"
            break
        if set(power.rep.terms) != {monos[0]}:
            bad = f"{cls_name}^{k} = {power} does not span H_{d}"
            break
    checks.append(
        Check(
            f"LS^{n}/D1: {cls_name}^k != 0 and spans H_({stride}k(n-1)+n) for k <= {K}",
            bad is None,
            bad or "",
        )
    )

    shift = cls.degree() - n
    bad = None
    for i in range(start, D + 1):
        src = q.basis(i)
        dst = q.invariants(i + shift)
        images = [q.product(a, cls).rep for a in src]
        if len(src) != len(dst) or rank_of(images, dst) != len(dst):
            bad = f"degree {i}: dim src {len(src)}, dim dst {len(dst)}, rank {rank_of(images, dst)}"
            break
    span = f"{start} <= i <= {D}" if start == 0 else f"{start - 1} < i <= {D}"
    checks.append(
        Check(
            f"LS^{n}/D1: P(., {cls_name}) bijective H_i -> H_(i+{shift}) for {span}",
            bad is None,
            bad or "",
        )
    )

    if n % 2 == 0:
        a_q = q.project(loop.generator("A"))
        ok = bool(a_q) and not q.product(a_q, cls)
        checks.append(
            Check(
                f"LS^{n}/D1: the degree-0 exclusion is sharp (q(A) != 0, P(q(A),eta) = 0)",
                ok,
                "" if ok else f"q(A)={a_q}, P={q.product(a_q, cls)}",
            )
        )
    return checks


def suite_theta_vs_vartheta(n, rings, D, K):
    """The two reflection quotients carry identified transfer algebras."""
    D = PRODUCT_BOUND if D is None else D
    checks = []
    loop = loop_space(n, RING_Q)
    qv = quotient(loop, dihedral(1))
    qt = quotient(loop, theta_group())
    chi = chi_star(loop)
    tag = f"LS^{n}: vartheta vs theta"

    bad = None
    for d in range(D + 1):
        if qv.invariants(d) != qt.invariants(d):
            bad = f"degree {d}"
            break
    checks.append(Check(f"{tag}: identical invariants on degrees <= {D}", bad is None, bad or ""))

    def f(a: QElement) -> QElement:
        return QElement(qt, chi(a.rep))

    qms = [(d, b) for d in range(D + 1) for b in qv.basis(d)]
    bad = None
    for da, a in qms:
        for db, b in qms:
            if da + db > D:
                break
            if f(qv.product(a, b)) != qt.product(f(a), f(b)):
                bad = f"a={a}, b={b}"
                break
        if bad:
            break
    checks.append(
        Check(f"{tag}: chi intertwines P_vartheta and P_theta, total degree <= {D}", bad is None, bad or "")
    )

    ok = f(qv.unit()) == qt.unit()
    if n % 2:
        ok = ok and f(mu_class(qv)) == mu_class(qt)
    checks.append(Check(f"{tag}: units (and mu for n odd) correspond", ok, ""))
    return checks


def suite_a_products(n, rings, D, K):
    """The geometric class-A products against the transfer products."""
    D = PRODUCT_BOUND if D is None else D
    checks = []
    loop = loop_space(n, RING_Q)
    qv = quotient(loop, dihedral(1))
    qt = quotient(loop, theta_group())

    vms = [(d, b) for d in range(D + 1) for b in qv.basis(d)]
    tms = [(d, b) for d in range(D + 1) for b in qt.basis(d)]

    if n % 2:
        bad = None
        for da, a in vms:
            for db, b in vms:
                if da + db > D:
                    break
                if a_product("vartheta", qv, a, b):
                    bad = f"a={a}, b={b}"
                    break
            if bad:
                break
        checks.append(
            Check(f"LS^{n}/D1: A_vartheta = 0 for n odd, total degree <= {D}", bad is None, bad or "")
        )
        mu = mu_class(qv)
        ok = bool(qv.product(mu, mu))
        checks.append(
            Check(f"LS^{n}/D1: yet P_vartheta is not zero (P(mu,mu) != 0)", ok, "")
        )
    else:
        bad = None
        for da, a in vms:
            for db, b in vms:
                if da + db > D:
                    break
                j = db
                sign = -1 if (n * (n - j)) % 2 else 1
                if sign * a_product("vartheta", qv, a, b) != qv.product(a, b):
                    bad = f"a={a}, b={b}"
                    break
            if bad:
                break
        checks.append(
            Check(
                f"LS^{n}/D1: (-1)^(n(n-j)) A_vartheta(a,b) = P_vartheta(a,b), total degree <= {D}",
                bad is None,
                bad or "",
            )
        )

    bad = None
    for da, a in tms:
        for db, b in tms:
            if da + db > D:
                break
            j = db
            sign = -1 if (n * (n - j)) % 2 else 1
            if sign * a_product("theta", qt, a, b) != qt.product(a, b):
                bad = f"a={a}, b={b}"
                break
        if bad:
            break
    checks.append(
        Check(
            f"LS^{n}/theta: (-1)^(n(n-j)) A_theta(a,b) = P_theta(a,b), total degree <= {D}",
            bad is None,
            bad or "",
        )
    )

    # the construction refuses inhomogeneous second arguments
    a0 = qv.project(loop.generator("A"))
    e0 = qv.project(loop.unit)
    mixed = a0 + e0
    try:
        a_product("vartheta", qv, a0, mixed)
        ok = False
    except DomainError:
        ok = True
    checks.append(Check(f"LS^{n}/D1: A-product rejects inhomogeneous b", ok, ""))
    return checks


def suite_quotient_homs(n, rings, D, K):
    """Quotient versions of ev and j_! against the displayed scaling laws."""
    D = PRODUCT_BOUND if D is None else D
    checks = []
    loop = loop_space(n, RING_Q)
    omega = based_loop_space(n, RING_Q)
    group = dihedral(1)
    q = quotient(loop, group)
    qo = quotient(omega, group)
    ev = ev_star(n, RING_Q)
    jb = j_shriek(n, RING_Q)
    order = group.order
    inv_order = Fraction(1, order)

    def ev_quot(a: QElement) -> Element:
        return inv_order * ev(q.transfer(a))

    def j_quot(a: QElement) -> QElement:
        return qo.project(jb(q.transfer(a))) * inv_order

    qms = [(d, b) for d in range(D + 1) for b in q.basis(d)]
    tag = f"LS^{n}/D1"

    bad = None
    for da, a in qms:
        for db, b in qms:
            if da + db > D:
                break
            lhs = ev_quot(q.product(a, b))
            rhs = order**2 * (ev_quot(a) * ev_quot(b))
            if lhs != rhs:
                bad = f"a={a}, b={b}"
                break
        if bad:
            break
    checks.append(
        Check(
            f"{tag}: (ev/G)(P(a,b)) = |G|^2 (ev/G)(a).(ev/G)(b), total degree <= {D}",
            bad is None,
            bad or "",
        )
    )

    ok = ev_quot(q.unit()) == sphere_space(n, RING_Q).unit / order**2
    checks.append(Check(f"{tag}: (ev/G)(e) = fundamental/|G|^2", ok, ""))

    bad = None
    for da, a in qms:
        for db, b in qms:
            if da + db > D:
                break
            lhs = j_quot(q.product(a, b))
            rhs = qo.product(j_quot(a), j_quot(b))
            if lhs != rhs:
                bad = f"a={a}, b={b}"
                break
        if bad:
            break
    checks.append(
        Check(
            f"{tag}: (j/G)(P(a,b)) = POmega((j/G)(a),(j/G)(b)), total degree <= {D}",
            bad is None,
            bad or "",
        )
    )

    ok = j_quot(q.unit()) == qo.unit()
    checks.append(Check(f"{tag}: (j/G)(e) is the based transfer unit", ok, ""))

    # spot facts on the based quotient
    x = omega.generator("x")
    ok = not qo.project(x)
    checks.append(Check(f"OS^{n}/D1: q(x) = 0", ok, ""))
    if n % 2:
        x2 = qo.project(x**2)
        ok = qo.product(x2, x2) == 4 * qo.project(x**4)
        checks.append(Check(f"OS^{n}/D1: POmega(q(x^2),q(x^2)) = 4*q(x^4)", ok, ""))
    else:
        x4 = qo.project(x**4)
        ok = qo.product(x4, x4) == 4 * qo.project(x**8)
        checks.append(Check(f"OS^{n}/D1: POmega(q(x^4),q(x^4)) = 4*q(x^8)", ok, ""))
    return checks


SUITES = {
    "algebra": suite_algebra,
    "presentation": suite_presentation,
    "maps": suite_maps,
    "gysin": suite_gysin,
    "transfer": suite_transfer,
    "quotient-product": suite_quotient_product,
    "main-theorem": suite_main_theorem,
    "theta-vs-vartheta": suite_theta_vs_vartheta,
    "a-products": suite_a_products,
    "quotient-homs": suite_quotient_homs,
}


def run(suite: str, ns=None, rings=None, degree_bound=None, power_bound=None) -> Report:
    """Run one named suite (or "all") over the requested dimensions/rings."""
    if suite == "all":
        names = SUITE_NAMES
    elif suite in SUITES:
        names = (suite,)
    else:
        raise DomainError(
            f"unknown suite {suite!r}; choose from {', '.join(SUITE_NAMES)} or all"
        )
    ns = tuple(ns) if ns else DEFAULT_NS
    rings = tuple(rings) if rings else (RING_Q, RING_Z)
    checks = []
    for name in names:
        fn = SUITES[name]
        for n in ns:
            checks.extend(fn(n, rings, degree_bound, power_bound))
    bound_note = f", degree bound {degree_bound}" if degree_bound else ""
    title = f"verify {suite}: n in {list(ns)}, rings {list(rings)}{bound_note}"
    return Report(title, checks)
