"""Right, left and two-sided extension operators and their enumerators.

A right extension of a degree-k permutation keeps positions 1..k-1, routes
the old image of k through a chosen slot t in the new tail block, and fills
the remaining tail positions with a filler permutation of the new points.
Left extensions mirror this at the bottom after translating the base up by
m; two-sided extensions do both at once.  A synchronized extension of a
*pair* shares the filler(s) and slot(s), so the two extended permutations
differ only where the bases differ.

Fillers are stored as plain permutations of {1..n} read on the shifted
range: a right filler value v at position i means the new permutation sends
point (k+i) to (k+v).  JSON forms use the actual shifted values.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations as _itertools_permutations
from typing import Iterator, Optional

from .errors import DegreeMismatchError, SpecError
from .perms import Permutation


@dataclass(frozen=True)
class RightExtensionSpec:
    """Filler on the tail block {k+1..k+n} plus the slot receiving base(k)."""

    base_degree: int
    filler: Permutation
    slot: int

    def __post_init__(self):
        k, n = self.base_degree, self.filler.degree
        if k < 1:
            raise SpecError(f"base degree must be positive, got {k}")
        if not k + 1 <= self.slot <= k + n:
            raise SpecError(f"slot {self.slot} outside {k + 1}..{k + n}")

    @property
    def size(self) -> int:
        return self.filler.degree

    def to_json(self) -> dict:
        k = self.base_degree
        return {
            "kind": "right",
            "base_degree": k,
            "filler": [v + k for v in self.filler.images],
            "slot": self.slot,
        }


@dataclass(frozen=True)
class LeftExtensionSpec:
    """Filler on the head block {1..m} plus the slot receiving m + base(1)."""

    base_degree: int
    filler: Permutation
    slot: int

    def __post_init__(self):
        if self.base_degree < 1:
            raise SpecError(f"base degree must be positive, got {self.base_degree}")
        if not 1 <= self.slot <= self.filler.degree:
            raise SpecError(f"slot {self.slot} outside 1..{self.filler.degree}")

    @property
    def size(self) -> int:
        return self.filler.degree

    def to_json(self) -> dict:
        return {
            "kind": "left",
            "base_degree": self.base_degree,
            "filler": list(self.filler.images),
            "slot": self.slot,
        }


@dataclass(frozen=True)
class TwoSidedExtensionSpec:
    """Head filler with slot s and tail filler with slot t, applied together."""

    base_degree: int
    left_filler: Permutation
    slot_s: int
    right_filler: Permutation
    slot_t: int

    def __post_init__(self):
        k, m, n = self.base_degree, self.left_filler.degree, self.right_filler.degree
        if k < 1:
            raise SpecError(f"base degree must be positive, got {k}")
        if not 1 <= self.slot_s <= m:
            raise SpecError(f"slot s={self.slot_s} outside 1..{m}")
        if not m + k + 1 <= self.slot_t <= m + k + n:
            raise SpecError(f"slot t={self.slot_t} outside {m + k + 1}..{m + k + n}")

    @property
    def sizes(self) -> tuple[int, int]:
        return self.left_filler.degree, self.right_filler.degree

    def to_json(self) -> dict:
        m, k = self.left_filler.degree, self.base_degree
        return {
            "kind": "two-sided",
            "base_degree": k,
            "left_filler": list(self.left_filler.images),
            "slot_s": self.slot_s,
            "right_filler": [v + m + k for v in self.right_filler.images],
            "slot_t": self.slot_t,
        }


ExtensionSpec = RightExtensionSpec | LeftExtensionSpec | TwoSidedExtensionSpec


def spec_from_json(data: dict) -> ExtensionSpec:
    """Rebuild a spec from its JSON form (fillers carry actual shifted values)."""
    kind = data.get("kind")
    if kind == "right":
        filler_vals = [int(v) for v in data["filler"]]
        k = int(data.get("base_degree", min(filler_vals) - 1))
        filler = Permutation(tuple(v - k for v in filler_vals))
        return RightExtensionSpec(k, filler, int(data["slot"]))
    if kind == "left":
        filler = Permutation(tuple(int(v) for v in data["filler"]))
        return LeftExtensionSpec(int(data["base_degree"]), filler, int(data["slot"]))
    if kind == "two-sided":
        left = Permutation(tuple(int(v) for v in data["left_filler"]))
        m = left.degree
        right_vals = [int(v) for v in data["right_filler"]]
        k = int(data.get("base_degree", min(right_vals) - m - 1))
        right = Permutation(tuple(v - m - k for v in right_vals))
        return TwoSidedExtensionSpec(k, left, int(data["slot_s"]), right, int(data["slot_t"]))
    raise SpecError(f"unknown spec kind {kind!r}")


def _require_degree(base: Permutation, spec) -> None:
    if base.degree != spec.base_degree:
        raise SpecError(f"spec is for degree {spec.base_degree}, base has degree {base.degree}")


def right_extend(base: Permutation, spec: RightExtensionSpec) -> Permutation:
    """Extend on the right: keep 1..k-1, put filler on the tail except that
    position k gets the filler value of the slot and the slot gets base(k)."""
    _require_degree(base, spec)
    k, n, t = base.degree, spec.size, spec.slot
    beta = spec.filler
    out = [0] * (k + n)
    out[: k - 1] = base.images[: k - 1]
    out[k - 1] = beta(t - k) + k
    for j in range(k + 1, k + n + 1):
        if j != t:
            out[j - 1] = beta(j - k) + k
    out[t - 1] = base(k)
    return Permutation(tuple(out))


def left_extend(base: Permutation, spec: LeftExtensionSpec) -> Permutation:
    """Extend on the left: translate the base up by m onto positions m+2..m+k,
    put the filler on the head except that the slot gets m + base(1) and
    position m+1 gets the filler value of the slot."""
    _require_degree(base, spec)
    k, m, s = base.degree, spec.size, spec.slot
    alpha = spec.filler
    out = [0] * (m + k)
    for i in range(1, m + 1):
        if i != s:
            out[i - 1] = alpha(i)
    out[s - 1] = m + base(1)
    out[m] = alpha(s)
    for j in range(m + 2, m + k + 1):
        out[j - 1] = m + base(j - m)
    return Permutation(tuple(out))


def two_sided_extend(base: Permutation, spec: TwoSidedExtensionSpec) -> Permutation:
    """Apply the head and tail constructions simultaneously."""
    _require_degree(base, spec)
    k = base.degree
    m, n = spec.sizes
    s, t = spec.slot_s, spec.slot_t
    alpha, beta = spec.left_filler, spec.right_filler
    out = [0] * (m + k + n)
    for i in range(1, m + 1):
        if i != s:
            out[i - 1] = alpha(i)
    out[s - 1] = m + base(1)
    out[m] = alpha(s)
    for j in range(m + 2, m + k):
        out[j - 1] = m + base(j - m)
    out[m + k - 1] = beta(t - m - k) + m + k
    for j in range(m + k + 1, m + k + n + 1):
        if j != t:
            out[j - 1] = beta(j - m - k) + m + k
    out[t - 1] = m + base(k)
    return Permutation(tuple(out))


def decompose_right(tau: Permutation, k: int) -> Optional[tuple[Permutation, RightExtensionSpec]]:
    """Invert right_extend: the unique (base, spec) with right_extend(base,
    spec) = tau, or None when tau is not a right extension of degree k."""
    d = tau.degree
    if not 1 <= k < d:
        return None
    head = tau.images[: k - 1]
    if any(v > k for v in head):
        return None
    low = [j for j in range(k + 1, d + 1) if tau(j) <= k]
    if len(low) != 1:
        return None
    t = low[0]
    if tau(k) <= k:
        return None
    base = Permutation(head + (tau(t),))
    filler_vals = [0] * (d - k)
    filler_vals[t - k - 1] = tau(k) - k
    for j in range(k + 1, d + 1):
        if j != t:
            filler_vals[j - k - 1] = tau(j) - k
    spec = RightExtensionSpec(k, Permutation(tuple(filler_vals)), t)
    return base, spec


def decompose_left(tau: Permutation, k: int) -> Optional[tuple[Permutation, LeftExtensionSpec]]:
    """Invert left_extend for base degree k (head size is tau.degree - k)."""
    d = tau.degree
    m = d - k
    if m < 1 or k < 1:
        return None
    if any(tau(j) <= m for j in range(m + 2, d + 1)):
        return None
    high = [j for j in range(1, m + 1) if tau(j) >= m + 1]
    if len(high) != 1:
        return None
    s = high[0]
    if tau(m + 1) > m:
        return None
    base = Permutation((tau(s) - m,) + tuple(tau(j) - m for j in range(m + 2, d + 1)))
    filler_vals = [0] * m
    filler_vals[s - 1] = tau(m + 1)
    for i in range(1, m + 1):
        if i != s:
            filler_vals[i - 1] = tau(i)
    spec = LeftExtensionSpec(k, Permutation(tuple(filler_vals)), s)
    return base, spec


def decompose_two_sided(
    tau: Permutation, k: int, m: int
) -> Optional[tuple[Permutation, TwoSidedExtensionSpec]]:
    """Invert two_sided_extend for base degree k and head size m."""
    d = tau.degree
    n = d - k - m
    if m < 1 or n < 1 or k < 1:
        return None
    high = [j for j in range(1, m + 1) if tau(j) >= m + 1]
    if len(high) != 1 or tau(m + 1) > m:
        return None
    s = high[0]
    low = [j for j in range(m + k + 1, d + 1) if tau(j) <= m + k]
    if len(low) != 1 or tau(m + k) <= m + k:
        return None
    t = low[0]
    if tau(t) <= m:
        return None
    mid = [tau(j) - m for j in range(m + 2, m + k)]
    if any(not 1 <= v <= k for v in mid):
        return None
    if tau(s) <= m:
        return None
    try:
        base = Permutation((tau(s) - m,) + tuple(mid) + (tau(t) - m,))
    except ValueError:
        return None
    left_vals = [0] * m
    left_vals[s - 1] = tau(m + 1)
    for i in range(1, m + 1):
        if i != s:
            left_vals[i - 1] = tau(i)
    right_vals = [0] * n
    right_vals[t - m - k - 1] = tau(m + k) - m - k
    for j in range(m + k + 1, d + 1):
        if j != t:
            right_vals[j - m - k - 1] = tau(j) - m - k
    try:
        spec = TwoSidedExtensionSpec(
            k, Permutation(tuple(left_vals)), s, Permutation(tuple(right_vals)), t
        )
    except ValueError:
        return None
    return base, spec


# --------------------------------------------------------------------------
# enumeration (deterministic: fillers in lexicographic image order, slots
# ascending, so any reported witness is reproducible)


def enumerate_right_specs(k: int, n: int) -> Iterator[RightExtensionSpec]:
    """All n!*n right specs for base degree k."""
    for imgs in _itertools_permutations(range(1, n + 1)):
        filler = Permutation(imgs)
        for t in range(k + 1, k + n + 1):
            yield RightExtensionSpec(k, filler, t)


def enumerate_left_specs(k: int, m: int) -> Iterator[LeftExtensionSpec]:
    """All m!*m left specs for base degree k."""
    for imgs in _itertools_permutations(range(1, m + 1)):
        filler = Permutation(imgs)
        for s in range(1, m + 1):
            yield LeftExtensionSpec(k, filler, s)


def enumerate_two_sided_specs(k: int, m: int, n: int) -> Iterator[TwoSidedExtensionSpec]:
    """All (m!*m)*(n!*n) two-sided specs for base degree k."""
    for left_imgs in _itertools_permutations(range(1, m + 1)):
        alpha = Permutation(left_imgs)
        for s in range(1, m + 1):
            for right_imgs in _itertools_permutations(range(1, n + 1)):
                beta = Permutation(right_imgs)
                for t in range(m + k + 1, m + k + n + 1):
                    yield TwoSidedExtensionSpec(k, alpha, s, beta, t)


def apply_spec(base: Permutation, spec: ExtensionSpec) -> Permutation:
    """Dispatch on the spec kind."""
    if isinstance(spec, RightExtensionSpec):
        return right_extend(base, spec)
    if isinstance(spec, LeftExtensionSpec):
        return left_extend(base, spec)
    return two_sided_extend(base, spec)


def _check_equal_degrees(sigma: Permutation, rho: Permutation) -> None:
    if sigma.degree != rho.degree:
        raise DegreeMismatchError(f"degrees {sigma.degree} and {rho.degree}")


def enumerate_synchronized_right(
    sigma: Permutation, rho: Permutation, n: int
) -> Iterator[tuple[Permutation, Permutation]]:
    """All synchronized right extension pairs of size n (shared filler and slot)."""
    _check_equal_degrees(sigma, rho)
    for spec in enumerate_right_specs(sigma.degree, n):
        yield right_extend(sigma, spec), right_extend(rho, spec)


def enumerate_synchronized_left(
    sigma: Permutation, rho: Permutation, m: int
) -> Iterator[tuple[Permutation, Permutation]]:
    """All synchronized left extension pairs of size m."""
    _check_equal_degrees(sigma, rho)
    for spec in enumerate_left_specs(sigma.degree, m):
        yield left_extend(sigma, spec), left_extend(rho, spec)


def enumerate_synchronized_two_sided(
    sigma: Permutation, rho: Permutation, m: int, n: int
) -> Iterator[tuple[Permutation, Permutation]]:
    """All synchronized two-sided extension pairs of sizes (m, n)."""
    _check_equal_degrees(sigma, rho)
    for spec in enumerate_two_sided_specs(sigma.degree, m, n):
        yield two_sided_extend(sigma, spec), two_sided_extend(rho, spec)
