"""Root systems for osp and gl/sl, and the generator tables into the kernels.

Each named homomorphism sends the Chevalley root vectors of a classical Lie
superalgebra to explicit monomials of a Weyl or Clifford algebra:

* ``PHI``    : osp(2b|2a)   -> D(a|b)
* ``PSI``    : osp(2a|2b)   -> Cl(a|b)
* ``THETA``  : osp(2a+1|2b) -> Cl(a|b)  (PSI plus linear images)
* ``UPSILON_PLUS``  : sl(a|b) -> D(a|b)_0
* ``UPSILON_MINUS`` : sl(a|b) -> D(b|a)_0

All images are fixed with scalar 1 on the written monomial (a normalization
map can rescale them); the verification sweep recomputes every structure
constant from the kernel itself instead of trusting a constant table.  Note
that rescaling images by nonzero scalars yields an equally valid table, so
the sweep checks closure, weight consistency and Cartan eigenvalues, which
are normalization-free.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Iterator, Mapping

from .algebra import (
    AlgebraElement,
    Subalgebra,
    gradings,
    multiply,
    subalgebra_member,
    super_bracket,
)
from .errors import RootError, SignatureError
from .weights import (
    AlgebraSignature,
    ClassicalWeight,
    Hom,
    RootVector,
    f_linear,
    signature_for_hom,
)


class RootFamily(Enum):
    OSP_EVEN = "osp-even"
    OSP_ODD = "osp-odd"
    GL = "gl"
    SL = "sl"


@dataclass(frozen=True)
class Root:
    """An integer combination of epsilon and delta coordinates."""

    eps: tuple[tuple[int, int], ...] = ()
    delta: tuple[tuple[int, int], ...] = ()

    @staticmethod
    def make(eps: Mapping[int, int] = (), delta: Mapping[int, int] = ()) -> "Root":
        def norm(pairs) -> tuple[tuple[int, int], ...]:
            items = dict(pairs.items() if isinstance(pairs, Mapping) else pairs)
            return tuple((i, items[i]) for i in sorted(items) if items[i])

        return Root(norm(eps), norm(delta))

    def eps_coeff(self, i: int) -> int:
        return dict(self.eps).get(i, 0)

    def delta_coeff(self, j: int) -> int:
        return dict(self.delta).get(j, 0)

    def neg(self) -> "Root":
        return Root.make({i: -c for i, c in self.eps}, {j: -c for j, c in self.delta})

    def add(self, other: "Root") -> "Root":
        eps = dict(self.eps)
        for i, c in other.eps:
            eps[i] = eps.get(i, 0) + c
        delta = dict(self.delta)
        for j, c in other.delta:
            delta[j] = delta.get(j, 0) + c
        return Root.make(eps, delta)

    def is_zero(self) -> bool:
        return not self.eps and not self.delta

    def to_classical(self) -> ClassicalWeight:
        return ClassicalWeight.make(dict(self.eps), dict(self.delta))

    def __str__(self):
        parts = []
        for i, c in self.eps:
            parts.append(("-" if c < 0 else "+") + (f"e[{i}]" if abs(c) == 1 else f"{abs(c)}*e[{i}]"))
        for j, c in self.delta:
            parts.append(("-" if c < 0 else "+") + (f"f[{j}]" if abs(c) == 1 else f"{abs(c)}*f[{j}]"))
        if not parts:
            return "0"
        out = parts[0][1:] if parts[0].startswith("+") else parts[0]
        for p in parts[1:]:
            out += " " + p[0] + " " + p[1:]
        return out


def form_pairing(x: Root | ClassicalWeight, y: Root | ClassicalWeight) -> Fraction:
    """The fixed invariant form: (eps_i, eps_j) = delta_ij, (delta_i, delta_j) = -delta_ij."""
    xe, xd = dict(x.eps), dict(x.delta)
    ye, yd = dict(y.eps), dict(y.delta)
    out = Fraction(0)
    for i, c in xe.items():
        out += Fraction(c) * Fraction(ye.get(i, 0))
    for j, c in xd.items():
        out -= Fraction(c) * Fraction(yd.get(j, 0))
    return out


@dataclass(frozen=True)
class RootSystemDescriptor:
    family: RootFamily
    rank_eps: int
    rank_delta: int

    def roots(self) -> Iterator[Root]:
        """All roots, epsilon block first, lexicographic within each shape."""
        a, b = self.rank_eps, self.rank_delta
        osp = self.family in (RootFamily.OSP_EVEN, RootFamily.OSP_ODD)
        # epsilon - epsilon
        for i, k in itertools.permutations(range(1, a + 1), 2):
            yield Root.make({i: 1, k: -1})
        if osp:
            for i, k in itertools.combinations(range(1, a + 1), 2):
                yield Root.make({i: 1, k: 1})
                yield Root.make({i: -1, k: -1})
        if self.family is RootFamily.OSP_ODD:
            for i in range(1, a + 1):
                yield Root.make({i: 1})
                yield Root.make({i: -1})
        # delta - delta
        for i, k in itertools.permutations(range(1, b + 1), 2):
            yield Root.make({}, {i: 1, k: -1})
        if osp:
            for i, k in itertools.combinations(range(1, b + 1), 2):
                yield Root.make({}, {i: 1, k: 1})
                yield Root.make({}, {i: -1, k: -1})
            for i in range(1, b + 1):
                yield Root.make({}, {i: 2})
                yield Root.make({}, {i: -2})
        if self.family is RootFamily.OSP_ODD:
            for i in range(1, b + 1):
                yield Root.make({}, {i: 1})
                yield Root.make({}, {i: -1})
        # mixed
        for i in range(1, a + 1):
            for j in range(1, b + 1):
                yield Root.make({i: 1}, {j: -1})
                yield Root.make({i: -1}, {j: 1})
                if osp:
                    yield Root.make({i: 1}, {j: 1})
                    yield Root.make({i: -1}, {j: -1})

    def is_root(self, alpha: Root) -> bool:
        return alpha in set(self.roots())

    def is_odd(self, alpha: Root) -> bool:
        """Odd roots mix the two blocks; for the odd family the +-delta_j too."""
        has_eps = bool(alpha.eps)
        has_delta = bool(alpha.delta)
        if has_eps and has_delta:
            return True
        if self.family is RootFamily.OSP_ODD and not has_eps:
            return all(abs(c) == 1 for _, c in alpha.delta) and len(alpha.delta) == 1
        return False

    def is_isotropic(self, alpha: Root) -> bool:
        return form_pairing(alpha, alpha) == 0


def source_system(hom: Hom, a: int, b: int) -> RootSystemDescriptor:
    """Root system of the source Lie superalgebra for a rank-(a, b) table."""
    if hom is Hom.PHI:
        return RootSystemDescriptor(RootFamily.OSP_EVEN, b, a)
    if hom is Hom.PSI:
        return RootSystemDescriptor(RootFamily.OSP_EVEN, a, b)
    if hom is Hom.THETA:
        return RootSystemDescriptor(RootFamily.OSP_ODD, a, b)
    return RootSystemDescriptor(RootFamily.SL, a, b)


def _two_single_indices(alpha: Root) -> tuple[tuple[str, int, int], ...]:
    """Flatten a root into (block, index, coefficient) triples."""
    out = [("eps", i, c) for i, c in alpha.eps]
    out += [("delta", j, c) for j, c in alpha.delta]
    return tuple(out)


@dataclass(frozen=True)
class GeneratorTable:
    """A named homomorphism at finite ranks with optional rescaling."""

    hom: Hom
    a: int
    b: int
    normalization: tuple[tuple[Root, Fraction], ...] = ()

    @property
    def system(self) -> RootSystemDescriptor:
        return source_system(self.hom, self.a, self.b)

    @property
    def target(self) -> AlgebraSignature:
        return signature_for_hom(self.hom, self.a, self.b)

    def scale_of(self, alpha: Root) -> Fraction:
        return dict(self.normalization).get(alpha, Fraction(1))

    def rescaled(self, alpha: Root, scalar: Fraction | int) -> "GeneratorTable":
        updated = dict(self.normalization)
        updated[alpha] = Fraction(scalar)
        return GeneratorTable(self.hom, self.a, self.b, tuple(sorted(updated.items(), key=str)))


def _raising(sig: AlgebraSignature, i: int) -> AlgebraElement:
    return AlgebraElement.raising(sig, i)


def _lowering(sig: AlgebraSignature, i: int) -> AlgebraElement:
    return AlgebraElement.lowering(sig, i)


def _word(*factors: AlgebraElement) -> AlgebraElement:
    out = factors[0]
    for f in factors[1:]:
        out = multiply(out, f)
    return out


def image(table: GeneratorTable, alpha: Root) -> AlgebraElement:
    """The tabulated monomial for a root vector, scaled by the normalization."""
    system = table.system
    if not system.is_root(alpha):
        raise RootError(f"{alpha} is not a root of {system.family.value}({table.a}|{table.b})")
    sig = table.target
    base = _image_monomial(table.hom, alpha, sig)
    return base.scale(table.scale_of(alpha))


def _image_monomial(hom: Hom, alpha: Root, sig: AlgebraSignature) -> AlgebraElement:
    eps = dict(alpha.eps)
    delta = dict(alpha.delta)
    x = lambda i: _raising(sig, i)
    d = lambda i: _lowering(sig, i)

    if hom is Hom.PHI:
        # source osp(2b|2a): eps indices map to the negative side of D(a|b)
        if eps and not delta:
            if set(eps.values()) == {1, -1}:
                (k,) = [i for i, c in eps.items() if c == 1]
                (l,) = [i for i, c in eps.items() if c == -1]
                return _word(x(-l), d(-k))
            ks = sorted(eps)
            if all(c == -1 for c in eps.values()):
                return _word(*[x(-k) for k in ks])
            return _word(*[d(-k) for k in ks])
        if delta and not eps:
            if set(delta.values()) == {1, -1}:
                (i,) = [j for j, c in delta.items() if c == 1]
                (j,) = [j for j, c in delta.items() if c == -1]
                return _word(x(j), d(i))
            js = sorted(delta)
            if len(js) == 1:
                (j,) = js
                return _word(x(j), x(j)) if delta[j] < 0 else _word(d(j), d(j))
            if all(c == -1 for c in delta.values()):
                return _word(*[x(j) for j in js])
            return _word(*[d(j) for j in js])
        ((k, ck),) = eps.items()
        ((i, ci),) = delta.items()
        if ck == -1 and ci == 1:
            return _word(x(-k), d(i))
        if ck == 1 and ci == -1:
            return _word(x(i), d(-k))
        if ck == -1 and ci == -1:
            return _word(x(-k), x(i))
        return _word(d(-k), d(i))

    if hom in (Hom.PSI, Hom.THETA):
        values = list(eps.values()) + list(delta.values())
        if hom is Hom.THETA and len(values) == 1 and abs(values[0]) == 1:
            if eps:
                ((k, c),) = eps.items()
                return d(k) if c == 1 else x(k)
            ((j, c),) = delta.items()
            return d(-j) if c == 1 else x(-j)
        if eps and not delta:
            if set(eps.values()) == {1, -1}:
                (k,) = [i for i, c in eps.items() if c == 1]
                (l,) = [i for i, c in eps.items() if c == -1]
                return _word(x(l), d(k))
            ks = sorted(eps)
            if all(c == -1 for c in eps.values()):
                return _word(*[x(k) for k in ks])
            return _word(*[d(k) for k in ks])
        if delta and not eps:
            if set(delta.values()) == {1, -1}:
                (i,) = [j for j, c in delta.items() if c == 1]
                (j,) = [j for j, c in delta.items() if c == -1]
                return _word(x(-j), d(-i))
            js = sorted(delta)
            if len(js) == 1:
                (j,) = js
                return _word(x(-j), x(-j)) if delta[j] < 0 else _word(d(-j), d(-j))
            if all(c == -1 for c in delta.values()):
                return _word(*[x(-j) for j in js])
            return _word(*[d(-j) for j in js])
        ((k, ck),) = eps.items()
        ((i, ci),) = delta.items()
        if ck == -1 and ci == 1:
            return _word(x(k), d(-i))
        if ck == 1 and ci == -1:
            return _word(d(k), x(-i))
        if ck == -1 and ci == -1:
            return _word(x(k), x(-i))
        return _word(d(k), d(-i))

    if hom is Hom.UPSILON_PLUS:
        rename = lambda block, idx: idx if block == "eps" else -idx
    else:
        rename = lambda block, idx: -idx if block == "eps" else idx
    triples = _two_single_indices(alpha)
    (b1, i1, c1), (b2, i2, c2) = triples
    if c1 == 1 and c2 == -1:
        return _word(x(rename(b1, i1)), d(rename(b2, i2)))
    return _word(x(rename(b2, i2)), d(rename(b1, i1)))


def cartan_image(table: GeneratorTable, alpha: Root) -> AlgebraElement:
    """The coroot image: the bracket of the two opposite root images."""
    return super_bracket(image(table, alpha), image(table, alpha.neg()))


def _scalar_multiple(e: AlgebraElement, target: AlgebraElement) -> Fraction | None:
    """The scalar c with e == c * target, or None if there is none."""
    if target.is_zero():
        return Fraction(0) if e.is_zero() else None
    if e.is_zero():
        return Fraction(0)
    if set(e.terms) != set(target.terms):
        return None
    ratios = {e.terms[k] / target.terms[k] for k in e.terms}
    if len(ratios) != 1:
        return None
    return ratios.pop()


@dataclass
class CheckFailure:
    pair: str
    status: str
    witness: str


@dataclass
class VerificationReport:
    hom: Hom
    a: int
    b: int
    pairs_checked: int = 0
    failures: list[CheckFailure] = field(default_factory=list)
    weight_sign: int | None = None

    @property
    def ok(self) -> bool:
        return not self.failures

    def fail(self, pair: str, status: str, witness: str) -> None:
        self.failures.append(CheckFailure(pair, status, witness))


def verify_homomorphism(
    table: GeneratorTable,
    exhaustive: bool = True,
    images_override: dict[Root, AlgebraElement] | None = None,
) -> VerificationReport:
    """Machine verification that the table respects the Lie superalgebra.

    For every pair of roots the kernel bracket of the images is compared
    with the image of the sum: a nonzero multiple when the sum is a root, an
    element of H_A when the sum is zero, and zero otherwise (except for an
    odd root with double a root, where the self-bracket realizes it).  The
    adjoint weights must rename back to the roots with one global sign, and
    every Cartan image must act on every image as the exact scalar given by
    the adjoint-weight pairing.

    Rescaling any image by a nonzero scalar yields another valid table (the
    written monomials are only one normalization), so all checks here are
    scale-free; ``images_override`` lets callers corrupt entries to exercise
    the failure paths.
    """
    report = VerificationReport(table.hom, table.a, table.b)
    system = table.system
    roots = list(system.roots())
    root_set = set(roots)
    images = {alpha: image(table, alpha) for alpha in roots}
    if images_override:
        images.update(images_override)

    # (iii) adjoint-weight consistency with a single global sign
    sign_choices = {1, -1}
    for alpha, img in images.items():
        if img.is_zero():
            report.fail(str(alpha), "zero-image", "image vanishes")
            continue
        weights = {gradings(key)[1] for key in img.terms}
        if len(weights) != 1:
            report.fail(str(alpha), "mixed-weight", str(img))
            continue
        w = f_linear(weights.pop(), table.hom)
        renamed = Root.make({i: int(c) for i, c in w.eps}, {j: int(c) for j, c in w.delta})
        local = set()
        if renamed == alpha:
            local.add(1)
        if renamed == alpha.neg():
            local.add(-1)
        if not local:
            report.fail(str(alpha), "weight-mismatch", f"image weight renames to {renamed}")
            continue
        sign_choices &= local
    if not sign_choices and not report.failures:
        report.fail("(global)", "weight-sign", "no single sign matches all images")
    report.weight_sign = next(iter(sorted(sign_choices)), None) if sign_choices else None

    # (i)/(ii) closure on pairs
    for alpha, beta in itertools.combinations_with_replacement(roots, 2):
        report.pairs_checked += 1
        bracket = super_bracket(images[alpha], images[beta])
        total = alpha.add(beta)
        pair = f"[{alpha}, {beta}]"
        if total.is_zero():
            if not subalgebra_member(bracket, Subalgebra.H_A):
                report.fail(pair, "cartan-escape", str(bracket))
            continue
        if total in root_set:
            if alpha == beta and not system.is_odd(alpha):
                # even self-bracket is zero; 2*alpha being a root cannot occur
                continue
            scalar = _scalar_multiple(bracket, images[total])
            if scalar is None:
                report.fail(pair, "not-multiple", str(bracket))
            elif scalar == 0:
                report.fail(pair, "zero-constant", str(bracket))
            continue
        if not bracket.is_zero():
            report.fail(pair, "nonzero-outside", str(bracket))

    # (iv) Cartan membership and eigenvalues, scalars read off the kernel
    for alpha in roots:
        h = super_bracket(images[alpha], images[alpha.neg()])
        report.pairs_checked += 1
        if not subalgebra_member(h, Subalgebra.H_A):
            report.fail(f"h({alpha})", "cartan-escape", str(h))
            continue
        if not _is_affine_cartan(h):
            report.fail(f"h({alpha})", "nonaffine-cartan", str(h))
            continue
        for gamma in roots:
            report.pairs_checked += 1
            expected = _eigenvalue(h, images[gamma])
            if expected is None:
                continue  # the degenerate image was already flagged above
            acted = super_bracket(h, images[gamma])
            difference = acted.sub(images[gamma].scale(expected))
            if not difference.is_zero():
                report.fail(f"[h({alpha}), {gamma}]", "not-eigenvector", str(acted))
    return report


def _is_affine_cartan(h: AlgebraElement) -> bool:
    """Affine in the Cartan generators: constants plus single u_i terms.

    The adjoint action of such an element on a weight vector is the scalar
    obtained by evaluating the linear part at the adjoint weight; genuinely
    quadratic elements of H_A do not act by scalars.
    """
    for raising, lowering in h.terms:
        length = sum(e for _, e in raising)
        if length != sum(e for _, e in lowering):
            return False
        if length > 1:
            return False
        if length == 1 and raising[0][0] != lowering[0][0]:
            return False
    return True


def _eigenvalue(h: AlgebraElement, img: AlgebraElement) -> Fraction | None:
    """Adjoint-weight pairing of an affine H_A element against an image.

    None when the image is zero or weight-mixed (flagged elsewhere); the
    constant part of ``h`` acts as zero in the adjoint action.
    """
    weights = {gradings(key)[1] for key in img.terms}
    if len(weights) != 1:
        return None
    w = weights.pop()
    total = Fraction(0)
    for (raising, lowering), coeff in h.terms.items():
        if not raising and not lowering:
            continue
        value = Fraction(1)
        for index, exp in raising:
            value *= Fraction(w[index]) ** exp
        total += coeff * value
    return total


def even_subalgebra_generation_check(hom: Hom, a: int, b: int, product_cap: int) -> bool:
    """Do products of table images span the even-degree subalgebra locally?

    Collects the root images, Cartan images and 1, forms all products of at
    most ``max(product_cap, 1)`` factors, and checks per adjoint weight that
    their span contains every normal-ordered even-degree monomial of length
    at most ``2 * product_cap``.
    """
    spans = _generation_spans(hom, a, b, max(product_cap, 1))
    target_length = 2 * product_cap
    sig = signature_for_hom(hom, a, b)
    from .linalg import SparseEchelon  # local import to avoid a cycle

    for key in _even_monomials(sig, target_length):
        _, w, _ = gradings(key)
        echelon = spans.get(w)
        if echelon is None or not echelon.contains_unit(key):
            return False
    return True


def _even_monomials(sig: AlgebraSignature, max_length: int) -> Iterator[tuple]:
    """All normal monomial keys of A_ev with length <= max_length."""
    indices = list(sig.indices())

    def blocks(length_budget: int) -> Iterator[tuple]:
        # all ascending exponent blocks with total exponent <= budget
        def rec(pos: int, budget: int, acc: list) -> Iterator[tuple]:
            if pos == len(indices):
                yield tuple(acc)
                return
            idx = indices_sorted[pos]
            cap = 1 if sig.is_fermionic_index(idx) else budget
            for exp in range(0, min(cap, budget) + 1):
                if exp:
                    acc.append((idx, exp))
                    yield from rec(pos + 1, budget - exp, acc)
                    acc.pop()
                else:
                    yield from rec(pos + 1, budget, acc)

        indices_sorted = sorted(indices)
        yield from rec(0, length_budget, [])

    for raising in blocks(max_length):
        used = sum(e for _, e in raising)
        for lowering in blocks(max_length - used):
            degree = used - sum(e for _, e in lowering)
            if degree % 2 == 0:
                yield (raising, lowering)


def _generation_spans(hom: Hom, a: int, b: int, factor_cap: int):
    from .linalg import SparseEchelon

    table = GeneratorTable(hom, a, b)
    system = table.system
    generators = [AlgebraElement.one(table.target)]
    for alpha in system.roots():
        generators.append(image(table, alpha))
        generators.append(cartan_image(table, alpha))

    spans: dict[RootVector, SparseEchelon] = {}

    def absorb(element: AlgebraElement) -> None:
        by_weight: dict[RootVector, dict] = {}
        for key, coeff in element.terms.items():
            _, w, _ = gradings(key)
            by_weight.setdefault(w, {})[key] = coeff
        for w, vector in by_weight.items():
            spans.setdefault(w, SparseEchelon()).insert(vector)

    frontier = [AlgebraElement.one(table.target)]
    for element in frontier:
        absorb(element)
    for _ in range(factor_cap):
        next_frontier = []
        for element in frontier:
            for gen in generators[1:]:
                product = multiply(element, gen)
                if not product.is_zero():
                    next_frontier.append(product)
                    absorb(product)
        frontier = next_frontier
    return spans
