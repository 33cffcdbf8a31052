"""Permutations on {1..n}: parsing, printing, composition, duals, families.

Everything is 1-based to match the point set P_n = {1..n}; conversion to
0-based indices happens only inside array accesses.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import permutations as _itertools_permutations
from typing import Iterable, Iterator, Sequence, Union

from .errors import AdmissibilityError, DegreeMismatchError, ParseError


@dataclass(frozen=True)
class Permutation:
    """A bijection of {1..n}, stored as the image list (images[i-1] = p(i))."""

    images: tuple[int, ...]

    def __post_init__(self):
        imgs = tuple(int(v) for v in self.images)
        n = len(imgs)
        if n < 1:
            raise ValueError("degree must be at least 1")
        if sorted(imgs) != list(range(1, n + 1)):
            raise ValueError(f"not a bijection of 1..{n}: {imgs}")
        object.__setattr__(self, "images", imgs)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        if not 1 <= i <= self.degree:
            raise ValueError(f"point {i} outside 1..{self.degree}")
        return self.images[i - 1]

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for i, v in enumerate(self.images, 1):
            inv[v - 1] = i
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(v == i for i, v in enumerate(self.images, 1))

    def cycles(self) -> list[tuple[int, ...]]:
        """All cycles (including fixed points), each starting at its minimum."""
        seen = [False] * (self.degree + 1)
        out = []
        for s in range(1, self.degree + 1):
            if seen[s]:
                continue
            cyc = [s]
            seen[s] = True
            v = self.images[s - 1]
            while v != s:
                cyc.append(v)
                seen[v] = True
                v = self.images[v - 1]
            out.append(tuple(cyc))
        return out

    def image_string(self) -> str:
        """Canonical text form: space-separated image list."""
        return " ".join(str(v) for v in self.images)

    def cycle_string(self) -> str:
        """Cycle-notation text that parses back to this permutation."""
        nontrivial = [c for c in self.cycles() if len(c) > 1]
        if not nontrivial:
            body, top = "(1)", 1
        else:
            body = "".join("(" + " ".join(map(str, c)) + ")" for c in nontrivial)
            top = max(max(c) for c in nontrivial)
        return body if top == self.degree else f"{body}@{self.degree}"

    def __str__(self) -> str:
        return self.image_string()


@dataclass(frozen=True)
class StepMap:
    """A map {1..n} -> {1..n}, not necessarily bijective, with no equal
    values at consecutive points (the condition under which it induces a
    transition matrix)."""

    images: tuple[int, ...]

    def __post_init__(self):
        imgs = tuple(int(v) for v in self.images)
        n = len(imgs)
        if n < 1:
            raise ValueError("degree must be at least 1")
        if any(not 1 <= v <= n for v in imgs):
            raise ValueError(f"values must lie in 1..{n}: {imgs}")
        for i in range(n - 1):
            if imgs[i] == imgs[i + 1]:
                raise AdmissibilityError(
                    f"equal values {imgs[i]} at consecutive points {i + 1}, {i + 2}"
                )
        object.__setattr__(self, "images", imgs)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        if not 1 <= i <= self.degree:
            raise ValueError(f"point {i} outside 1..{self.degree}")
        return self.images[i - 1]

    def image_string(self) -> str:
        return " ".join(str(v) for v in self.images)


PointMap = Union[Permutation, StepMap]

_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_permutation(text: str) -> Permutation:
    """Parse an image list ("3 1 4 5 2") or cycle notation ("(1 3 4)(2 5)").

    Cycle notation takes its degree from the largest mentioned point unless
    an explicit "@n" suffix raises it (required whenever trailing fixed
    points exist, so the same cycles on different point sets cannot be
    confused).
    """
    text = text.strip()
    if not text:
        raise ParseError("empty permutation text")
    if "(" in text:
        return _parse_cycles(text)
    try:
        imgs = tuple(int(tok) for tok in text.split())
    except ValueError as exc:
        raise ParseError(f"bad image-list token in {text!r}") from exc
    n = len(imgs)
    missing = set(range(1, n + 1)) - set(imgs)
    if missing:
        bad = [v for v in imgs if not 1 <= v <= n]
        if bad:
            raise ParseError(f"out-of-range value(s) {bad} for degree {n}")
        raise ParseError(f"duplicate values; missing {sorted(missing)}")
    return Permutation(imgs)


def _parse_cycles(text: str) -> Permutation:
    body = text
    degree_override = None
    if "@" in text:
        body, _, suffix = text.partition("@")
        try:
            degree_override = int(suffix)
        except ValueError as exc:
            raise ParseError(f"bad degree suffix {suffix!r}") from exc
    cycles = []
    consumed = _CYCLE_RE.sub("", body).strip()
    if consumed:
        raise ParseError(f"stray text {consumed!r} outside cycles")
    for match in _CYCLE_RE.finditer(body):
        toks = match.group(1).replace(",", " ").split()
        if not toks:
            raise ParseError("empty cycle '()'")
        try:
            cyc = [int(t) for t in toks]
        except ValueError as exc:
            raise ParseError(f"bad cycle token in ({match.group(1)})") from exc
        if any(v < 1 for v in cyc):
            raise ParseError(f"cycle points must be positive: {cyc}")
        cycles.append(cyc)
    if not cycles:
        raise ParseError(f"no cycles found in {text!r}")
    mentioned = [v for c in cycles for v in c]
    if len(set(mentioned)) != len(mentioned):
        raise ParseError("cycles are not disjoint")
    n = max(mentioned)
    if degree_override is not None:
        if degree_override < n:
            raise ParseError(f"degree suffix @{degree_override} below largest point {n}")
        n = degree_override
    imgs = list(range(1, n + 1))
    for cyc in cycles:
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            imgs[a - 1] = b
    return Permutation(tuple(imgs))


def cycle_chain(points: Sequence[int], degree: int | None = None) -> Permutation:
    """The cyclic permutation sending points[0] -> points[1] -> ... -> points[0]."""
    n = max(points) if degree is None else degree
    imgs = list(range(1, n + 1))
    for a, b in zip(points, tuple(points[1:]) + (points[0],)):
        imgs[a - 1] = b
    return Permutation(tuple(imgs))


def compose(outer: PointMap, inner: PointMap) -> PointMap:
    """Pointwise composition i -> outer(inner(i)).

    Permutations compose to a Permutation; any step-map operand gives a
    StepMap, whose constructor rejects results that take equal values at
    consecutive points (AdmissibilityError), keeping the composition-law
    precondition checkable.
    """
    if outer.degree != inner.degree:
        raise DegreeMismatchError(f"degrees {outer.degree} and {inner.degree}")
    imgs = tuple(outer.images[inner.images[i] - 1] for i in range(inner.degree))
    if isinstance(outer, Permutation) and isinstance(inner, Permutation):
        return Permutation(imgs)
    return StepMap(imgs)


def dual(p: Permutation) -> Permutation:
    """The mirror permutation p*(i) = n+1 - p(n+1-i); an involution."""
    n = p.degree
    return Permutation(tuple(n + 1 - p.images[n - i] for i in range(1, n + 1)))


def is_cyclic(p: Permutation) -> bool:
    """True iff p is a single n-cycle."""
    cyc = 1
    v = p.images[0]
    while v != 1:
        cyc += 1
        v = p.images[v - 1]
    return cyc == p.degree


def all_permutations(n: int) -> Iterator[Permutation]:
    """All n! permutations of {1..n} in lexicographic image-list order."""
    for imgs in _itertools_permutations(range(1, n + 1)):
        yield Permutation(imgs)


# --------------------------------------------------------------------------
# named families


def family_sigma_nk(n: int, k: int) -> Permutation:
    """The cyclic permutation 1 -> n -> n+1 -> ... -> k -> n-1 -> ... -> 2 -> 1.

    n = 2 degenerates to the ascending shift, n = k to the descending one.
    """
    if k < 4:
        raise ValueError(f"k must be >= 4, got {k}")
    if not 2 <= n <= k:
        raise ValueError(f"n must lie in 2..{k}, got {n}")
    if n == 2:
        return Permutation(tuple(range(2, k + 1)) + (1,))
    if n == k:
        return Permutation((k,) + tuple(range(1, k)))
    imgs = [0] * k
    imgs[0] = n
    for i in range(n, k):
        imgs[i - 1] = i + 1
    imgs[k - 1] = n - 1
    for j in range(2, n):
        imgs[j - 1] = j - 1
    return Permutation(tuple(imgs))


def family_thm12(k: int) -> tuple[Permutation, Permutation]:
    """The cyclic pair 1->3->2->5->6->...->k->4->1 and 1->k->...->5->2->3->4->1."""
    if k < 5:
        raise ValueError(f"k must be >= 5, got {k}")
    alpha = cycle_chain([1, 3, 2] + list(range(5, k + 1)) + [4])
    theta = cycle_chain([1] + list(range(k, 4, -1)) + [2, 3, 4])
    return alpha, theta


def family_thm13(k: int) -> tuple[Permutation, Permutation]:
    """The cyclic pair 1->3->2->4->5->...->k->1 and 1->k->...->5->3->2->4->1."""
    if k < 5:
        raise ValueError(f"k must be >= 5, got {k}")
    beta = cycle_chain([1, 3, 2] + list(range(4, k + 1)))
    delta = cycle_chain([1] + list(range(k, 4, -1)) + [3, 2, 4])
    return beta, delta


def family_cor11(pi: Permutation, k: int) -> tuple[Permutation, Permutation, Permutation, Permutation]:
    """Four extensions of a seed permutation pi with pi(j-1) < pi(j) < j.

    Returns (sigma_k, rho_k, mu_k, nu_k): the first three are pairwise right
    and two-sided similar while nu_k is neither, which makes the family a
    stock source of positive and negative classification examples.
    """
    j = pi.degree
    if j < 3:
        raise ValueError(f"seed degree must be >= 3, got {j}")
    if not pi(j - 1) < pi(j) < j:
        raise ValueError(f"need pi(j-1) < pi(j) < j, got pi({j - 1})={pi(j - 1)}, pi({j})={pi(j)}")
    if k < j + 2:
        raise ValueError(f"k must be >= {j + 2}, got {k}")

    sigma = [0] * k
    for x in range(1, j):
        sigma[x - 1] = pi(x)
    for x in range(j, k):
        sigma[x - 1] = x + 1
    sigma[k - 1] = pi(j)

    rho = [0] * k
    for x in range(1, j + 1):
        rho[x - 1] = j + 1 if pi(x) == j else pi(x)
    for x in range(j + 1, k):
        rho[x - 1] = x + 1
    rho[k - 1] = j

    mu = [0] * k
    for x in range(1, j + 1):
        mu[x - 1] = k if pi(x) == j else pi(x)
    for x in range(j + 1, k + 1):
        mu[x - 1] = x - 1

    nu = [0] * k
    for x in range(1, j):
        nu[x - 1] = pi(x)
    nu[j - 1] = k
    nu[j] = pi(j)
    for x in range(j + 2, k + 1):
        nu[x - 1] = x - 1

    return (Permutation(tuple(sigma)), Permutation(tuple(rho)),
            Permutation(tuple(mu)), Permutation(tuple(nu)))


def family_thm4_combine(
    sigma_l: Permutation,
    rho_l: Permutation,
    xi: Permutation,
    eta: Permutation,
    k: int,
) -> tuple[Permutation, Permutation, Permutation]:
    """Glue a degree-l pair with a pair on {l-1..k} into three degree-k permutations.

    xi and eta are given as permutations of {1..k-l+2} read on the shifted
    range {l-1..k} (value y stands for y + l - 2).  Preconditions:
    sigma_l(l) = l-1, sigma_l(l-1) < l-1, xi(l) = l-1, eta(l-1) = l,
    eta(l) > l.  The first output is a left extension of xi and the third a
    right extension of rho_l, which is what propagates similarity through
    the combination.
    """
    l = sigma_l.degree
    if l < 4:
        raise ValueError(f"base degree must be >= 4, got {l}")
    if rho_l.degree != l:
        raise DegreeMismatchError(f"degrees {l} and {rho_l.degree}")
    if k < l + 1:
        raise ValueError(f"k must be >= {l + 1}, got {k}")
    width = k - l + 2
    if xi.degree != width or eta.degree != width:
        raise DegreeMismatchError(f"range permutations must have degree {width}")
    off = l - 2

    def xi_at(x: int) -> int:
        return xi(x - off) + off

    def eta_at(x: int) -> int:
        return eta(x - off) + off

    if sigma_l(l) != l - 1:
        raise ValueError(f"need sigma_l({l}) = {l - 1}, got {sigma_l(l)}")
    if not sigma_l(l - 1) < l - 1:
        raise ValueError(f"need sigma_l({l - 1}) < {l - 1}, got {sigma_l(l - 1)}")
    if xi_at(l) != l - 1:
        raise ValueError(f"need xi({l}) = {l - 1}, got {xi_at(l)}")
    if eta_at(l - 1) != l:
        raise ValueError(f"need eta({l - 1}) = {l}, got {eta_at(l - 1)}")
    if not eta_at(l) > l:
        raise ValueError(f"need eta({l}) > {l}, got {eta_at(l)}")

    sx = [0] * k
    for x in range(1, l):
        sx[x - 1] = xi_at(l - 1) if sigma_l(x) == l else sigma_l(x)
    for x in range(l, k + 1):
        sx[x - 1] = xi_at(x)

    se = [0] * k
    for x in range(1, l):
        se[x - 1] = sigma_l(x)
    for x in range(l, k + 1):
        se[x - 1] = eta_at(x)

    re_ = [0] * k
    for x in range(1, l):
        re_[x - 1] = rho_l(x)
    for x in range(l, k + 1):
        re_[x - 1] = rho_l(l) if eta_at(x) == l - 1 else eta_at(x)

    return Permutation(tuple(sx)), Permutation(tuple(se)), Permutation(tuple(re_))
