"""Bounded-evidence deciders for the extension-based similarity relations.

The relations quantify over *all* synchronized extensions, so no finite
computation can affirm them; it can only refute them or report consistency
up to a bound.  Verdicts say exactly which of the three happened:

  refuted     - a synchronized extension separates the pair; the witness
                (filler + slot + discriminator values) replays exactly.
  consistent  - every synchronized extension up to the bound agrees.
  certified   - consistent, and a registered certificate family covers the
                pair with a verified conjugacy witness, settling all sizes.

Base transition matrices are compared as well, but only as a reported
datum: the relations are about extensions, and all four combinations of
(base similar) x (pair similar) genuinely occur.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Optional, Sequence, Union

from . import certificates as _certs
from .errors import DegreeMismatchError
from .exact import IntMatrix, charpoly, det, invariant_factors, trace
from .extensions import (
    ExtensionSpec,
    apply_spec,
    enumerate_left_specs,
    enumerate_right_specs,
    enumerate_two_sided_specs,
    spec_from_json,
)
from .perms import Permutation, all_permutations
from .transition import petrie_matrix

RIGHT, LEFT, TWO_SIDED = "right", "left", "two-sided"
MODES = (RIGHT, LEFT, TWO_SIDED)
SIMILAR, WEAKLY_SIMILAR = "similar", "weakly-similar"
STRENGTHS = (SIMILAR, WEAKLY_SIMILAR)

DEFAULT_BOUND_ONE_SIDED = 3
DEFAULT_BOUND_TWO_SIDED = (2, 2)

SCHEMA_VERSION = 1

Bound = Union[int, tuple[int, int]]


def default_bound(mode: str) -> Bound:
    return DEFAULT_BOUND_TWO_SIDED if mode == TWO_SIDED else DEFAULT_BOUND_ONE_SIDED


def _normalize(mode: str, strength: str, bound: Optional[Bound]) -> tuple[str, str, Bound]:
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
    if strength not in STRENGTHS:
        raise ValueError(f"strength must be one of {STRENGTHS}, got {strength!r}")
    if bound is None:
        bound = default_bound(mode)
    if mode == TWO_SIDED:
        if isinstance(bound, int):
            bound = (bound, bound)
        mb, nb = bound
        if mb < 1 or nb < 1:
            raise ValueError(f"bounds must be >= 1, got {bound}")
        return mode, strength, (int(mb), int(nb))
    if not isinstance(bound, int) or bound < 1:
        raise ValueError(f"bound must be a positive integer, got {bound!r}")
    return mode, strength, bound


def bound_label(bound: Bound) -> str:
    return f"{bound[0]}x{bound[1]}" if isinstance(bound, tuple) else str(bound)


# --------------------------------------------------------------------------
# cached exact invariants of extended permutations


@lru_cache(maxsize=65536)
def _cp(images: tuple[int, ...]):
    return charpoly(petrie_matrix(Permutation(images)))


@lru_cache(maxsize=16384)
def _ifs(images: tuple[int, ...]):
    return tuple(invariant_factors(petrie_matrix(Permutation(images))))


def _agree(a: Permutation, b: Permutation, strength: str) -> bool:
    if _cp(a.images) != _cp(b.images):
        return False
    if strength == WEAKLY_SIMILAR:
        return True
    return _ifs(a.images) == _ifs(b.images)


_DISCRIMINATORS = ("determinant", "trace", "charpoly", "invariant-factors")


def discriminator_value(name: str, p: Permutation):
    """The serialized value a refutation witness records for one side."""
    m = petrie_matrix(p)
    if name == "determinant":
        return det(m)
    if name == "trace":
        return trace(m)
    if name == "charpoly":
        return charpoly(m).to_json()
    if name == "invariant-factors":
        return [f.to_json() for f in invariant_factors(m)]
    raise ValueError(f"unknown discriminator {name!r}")


def _cheapest_discriminator(a: Permutation, b: Permutation) -> str:
    for name in _DISCRIMINATORS:
        if discriminator_value(name, a) != discriminator_value(name, b):
            return name
    raise AssertionError("called on an agreeing pair")


# --------------------------------------------------------------------------
# verdicts


@dataclass(frozen=True)
class Verdict:
    """Outcome of one bounded check of a pair in one mode and strength."""

    outcome: str  # "refuted" | "consistent" | "certified"
    sigma: Permutation
    rho: Permutation
    mode: str
    strength: str
    bound: Bound
    base: dict
    log: tuple[tuple[object, int], ...] = ()
    witness: Optional[dict] = None
    certificate: Optional[dict] = None

    @property
    def refuted(self) -> bool:
        return self.outcome == "refuted"

    def to_json(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "outcome": self.outcome,
            "sigma": list(self.sigma.images),
            "rho": list(self.rho.images),
            "mode": self.mode,
            "strength": self.strength,
            "bound": list(self.bound) if isinstance(self.bound, tuple) else self.bound,
            "base": self.base,
            "log": [{"size": s, "checked": c} for s, c in self.log],
            "witness": self.witness,
            "certificate": self.certificate,
        }

    @classmethod
    def from_json(cls, data: dict) -> "Verdict":
        bound = data["bound"]
        if isinstance(bound, list):
            bound = (bound[0], bound[1])
        return cls(
            outcome=data["outcome"],
            sigma=Permutation(tuple(data["sigma"])),
            rho=Permutation(tuple(data["rho"])),
            mode=data["mode"],
            strength=data["strength"],
            bound=bound,
            base=data["base"],
            log=tuple((e["size"], e["checked"]) for e in data["log"]),
            witness=data["witness"],
            certificate=data["certificate"],
        )


def _sizes(mode: str, bound: Bound) -> Iterator[object]:
    if mode == TWO_SIDED:
        mb, nb = bound
        for total in range(2, mb + nb + 1):
            for m in range(1, mb + 1):
                n = total - m
                if 1 <= n <= nb:
                    yield (m, n)
    else:
        yield from range(1, bound + 1)


def _specs_for(mode: str, k: int, size) -> Iterator[ExtensionSpec]:
    if mode == RIGHT:
        return enumerate_right_specs(k, size)
    if mode == LEFT:
        return enumerate_left_specs(k, size)
    m, n = size
    return enumerate_two_sided_specs(k, m, n)


def refute(
    sigma: Permutation,
    rho: Permutation,
    mode: str,
    strength: str = SIMILAR,
    bound: Optional[Bound] = None,
) -> Optional[dict]:
    """First separating synchronized extension in enumeration order, as a
    replayable witness dict, or None if the bound is exhausted."""
    mode, strength, bound = _normalize(mode, strength, bound)
    if sigma.degree != rho.degree:
        raise DegreeMismatchError(f"degrees {sigma.degree} and {rho.degree}")
    wit, _ = _scan(sigma, rho, mode, strength, bound)
    return wit


def _scan(
    sigma: Permutation, rho: Permutation, mode: str, strength: str, bound: Bound
) -> tuple[Optional[dict], tuple]:
    log = []
    for size in _sizes(mode, bound):
        checked = 0
        for spec in _specs_for(mode, sigma.degree, size):
            ea, eb = apply_spec(sigma, spec), apply_spec(rho, spec)
            checked += 1
            if not _agree(ea, eb, strength):
                name = _cheapest_discriminator(ea, eb)
                if strength == WEAKLY_SIMILAR and name == "invariant-factors":
                    continue  # unreachable: weak disagreement is a charpoly difference
                log.append((size, checked))
                witness = {
                    "size": list(size) if isinstance(size, tuple) else size,
                    "spec": spec.to_json(),
                    "extended": [list(ea.images), list(eb.images)],
                    "discriminator": name,
                    "value_sigma": discriminator_value(name, ea),
                    "value_rho": discriminator_value(name, eb),
                }
                return witness, tuple(log)
        log.append((size, checked))
    return None, tuple(log)


def check_pair(
    sigma: Permutation,
    rho: Permutation,
    mode: str,
    strength: str = SIMILAR,
    bound: Optional[Bound] = None,
    use_certificates: bool = True,
) -> Verdict:
    """Bounded decision: scan every synchronized extension up to the bound,
    then consult the certificate registry for an upgrade to certified."""
    mode, strength, bound = _normalize(mode, strength, bound)
    if sigma.degree != rho.degree:
        raise DegreeMismatchError(f"degrees {sigma.degree} and {rho.degree}")
    if sigma.degree < 3:
        raise ValueError(f"degree must be >= 3, got {sigma.degree}")
    ms, mr = petrie_matrix(sigma), petrie_matrix(rho)
    base = {
        "charpoly_equal": charpoly(ms) == charpoly(mr),
        "similar": _ifs(sigma.images) == _ifs(rho.images),
    }
    witness, log = _scan(sigma, rho, mode, strength, bound)
    if witness is not None:
        return Verdict("refuted", sigma, rho, mode, strength, bound, base, log, witness)
    certificate = None
    if use_certificates and sigma != rho:
        certificate = _certs.certify(sigma, rho, mode)
    if certificate is not None:
        return Verdict(
            "certified", sigma, rho, mode, strength, bound, base, log, None, certificate
        )
    return Verdict("consistent", sigma, rho, mode, strength, bound, base, log)


def replay_witness(sigma: Permutation, rho: Permutation, witness: dict) -> bool:
    """Re-run a refutation witness: rebuild the extension from its spec and
    confirm both recorded discriminator values bit-exactly."""
    spec = spec_from_json(witness["spec"])
    ea, eb = apply_spec(sigma, spec), apply_spec(rho, spec)
    if [list(ea.images), list(eb.images)] != witness["extended"]:
        return False
    name = witness["discriminator"]
    va, vb = discriminator_value(name, ea), discriminator_value(name, eb)
    return va == witness["value_sigma"] and vb == witness["value_rho"] and va != vb


def propagate_check(
    sigma: Permutation,
    rho: Permutation,
    spec: ExtensionSpec,
    modes: Sequence[str],
    strength: str = SIMILAR,
    bound: Optional[Bound] = None,
) -> list[Verdict]:
    """Extend the pair by one shared spec, then check the extended pair in
    each requested mode (used to probe how similarity propagates)."""
    ea, eb = apply_spec(sigma, spec), apply_spec(rho, spec)
    return [check_pair(ea, eb, mode, strength, bound) for mode in modes]


# --------------------------------------------------------------------------
# classification of a full symmetric group


@dataclass(frozen=True)
class ClassificationReport:
    """Candidate equivalence classes of S_n under one bounded relation."""

    degree: int
    mode: str
    strength: str
    bound: Bound
    classes: tuple[tuple[tuple[int, ...], ...], ...]
    candidate_flags: tuple[bool, ...]  # True unless every internal pair is certified
    refutations: dict  # "sigma images|rho images" -> witness dict

    def nontrivial_classes(self) -> list[tuple[tuple[int, ...], ...]]:
        return [c for c in self.classes if len(c) > 1]

    def to_json(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "degree": self.degree,
            "mode": self.mode,
            "strength": self.strength,
            "bound": list(self.bound) if isinstance(self.bound, tuple) else self.bound,
            "classes": [[list(p) for p in c] for c in self.classes],
            "candidate": list(self.candidate_flags),
            "refutations": self.refutations,
        }

    @classmethod
    def from_json(cls, data: dict) -> "ClassificationReport":
        bound = data["bound"]
        if isinstance(bound, list):
            bound = (bound[0], bound[1])
        return cls(
            degree=data["degree"],
            mode=data["mode"],
            strength=data["strength"],
            bound=bound,
            classes=tuple(tuple(tuple(p) for p in c) for c in data["classes"]),
            candidate_flags=tuple(data["candidate"]),
            refutations=data["refutations"],
        )

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True) + "\n"


def _pair_job(args) -> tuple[int, int, dict]:
    i, j, imgs_a, imgs_b, mode, strength, bound = args
    verdict = check_pair(
        Permutation(imgs_a), Permutation(imgs_b), mode, strength, bound
    )
    return i, j, verdict.to_json()


def classify(
    n: int,
    mode: str,
    strength: str = SIMILAR,
    bound: Optional[Bound] = None,
    jobs: int = 1,
) -> ClassificationReport:
    """Pairwise bounded check over all of S_n, merged into candidate classes.

    Classes are the connected components of the agrees-up-to-the-bound
    graph; every cross-class pair carries a replayable refutation witness.
    The pair jobs are independent, and the merge sorts results, so any job
    count yields an identical report.
    """
    mode, strength, bound = _normalize(mode, strength, bound)
    if n < 3:
        raise ValueError(f"degree must be >= 3, got {n}")
    perms = [p.images for p in all_permutations(n)]
    idx = {imgs: i for i, imgs in enumerate(perms)}
    tasks = [
        (i, j, perms[i], perms[j], mode, strength, bound)
        for i in range(len(perms))
        for j in range(i + 1, len(perms))
    ]
    if jobs > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = sorted(pool.map(_pair_job, tasks, chunksize=64))
    else:
        results = [_pair_job(t) for t in tasks]

    parent = list(range(len(perms)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    refutations = {}
    certified_pairs = set()
    for i, j, vj in results:
        if vj["outcome"] == "refuted":
            key = " ".join(map(str, perms[i])) + "|" + " ".join(map(str, perms[j]))
            refutations[key] = vj["witness"]
        else:
            parent[find(i)] = find(j)
            if vj["outcome"] == "certified":
                certified_pairs.add((i, j))

    groups: dict[int, list[int]] = {}
    for i in range(len(perms)):
        groups.setdefault(find(i), []).append(i)
    classes = sorted(tuple(sorted(perms[i] for i in members)) for members in groups.values())
    flags = []
    for cls_members in classes:
        ids = [idx[imgs] for imgs in cls_members]
        pairs = [(min(a, b), max(a, b)) for x, a in enumerate(ids) for b in ids[x + 1 :]]
        flags.append(bool(pairs) and not all(p in certified_pairs for p in pairs))
    return ClassificationReport(
        degree=n,
        mode=mode,
        strength=strength,
        bound=bound,
        classes=tuple(classes),
        candidate_flags=tuple(bool(f) for f in flags),
        refutations=refutations,
    )


# --------------------------------------------------------------------------
# report cache


def report_cache_path(cache_dir: str, n: int, mode: str, strength: str, bound: Bound) -> str:
    name = f"classify-n{n}-{mode}-{strength}-b{bound_label(bound)}-v{SCHEMA_VERSION}.json"
    return os.path.join(cache_dir, name)


def load_cached_report(path: str) -> Optional[ClassificationReport]:
    """Read a cached report; stale schema versions are ignored, not migrated."""
    if not os.path.exists(path):
        return None
    with open(path, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    if data.get("schema_version") != SCHEMA_VERSION:
        return None
    return ClassificationReport.from_json(data)


def store_report(path: str, report: ClassificationReport) -> None:
    os.makedirs(os.path.dirname(path) or ".", exist_ok=True)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(report.dumps())
