"""Parametric families of numerical semigroups with closed-form predictions.

Three families:

* staircase(m, k, s): {0, m, 2m, ..., km, km+s+1, ->}.  Frobenius km+s,
  type m-1, and always lambda-minimal.
* interval_m(m): generated by m..2m-5 for m >= 9.  Exactly six associated
  sets with size multiset {4m-5, 5m-13, 5m-7}, each twice; |lambda(S)| is
  5m-13, so these are never lambda-minimal.
* interval_k(k, l): generated by 2k+1..3k+1 with l dividing k.  Here
  |lambda(S)| = k^2 + 4k and an explicit associated witness T built from the
  divisor has size (3k^2 l - k^2 + 4k l^3 + 3k l^2 + kl - 2l^4 + 2l^3)/(2l^2),
  strictly smaller whenever l is a proper divisor other than 1.

``validate`` recomputes every prediction from first principles with the
solver so the closed forms are checked, not trusted.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import NumericalSemigroup, NumericalSet
from .partitions import size_via_gap_count
from .solver import is_lambda_minimal, solve


@dataclass(frozen=True)
class FamilyInstance:
    family: str
    params: dict[str, int]
    semigroup: NumericalSemigroup
    predicted: dict[str, object]
    witness: NumericalSet | None = None


@dataclass(frozen=True)
class CheckRow:
    name: str
    predicted: object
    computed: object

    @property
    def ok(self) -> bool:
        return self.predicted == self.computed


def staircase(m: int, k: int, s: int) -> FamilyInstance:
    """S_{m,k,s} = {0, m, 2m, ..., km, km+s+1, ->}."""
    if m < 2 or k < 1 or not 1 <= s <= m - 1:
        raise ValueError(f"staircase parameters out of domain: m={m}, k={k}, s={s}")
    gaps = [x for x in range(1, k * m + s + 1) if x % m != 0]
    pf = tuple(sorted(set(range((k - 1) * m + s + 1, (k - 1) * m + m))
                      | set(range(k * m + 1, k * m + s + 1))))
    return FamilyInstance(
        family="staircase",
        params={"m": m, "k": k, "s": s},
        semigroup=NumericalSemigroup(gaps),
        predicted={
            "frobenius": k * m + s,
            "type": m - 1,
            "pseudo_frobenius": pf,
            "lambda_minimal": True,
        },
    )


def interval_m(m: int) -> FamilyInstance:
    """The semigroup generated by the interval m..2m-5, for m >= 9."""
    if m < 9:
        raise ValueError(f"interval family needs m >= 9, got {m}")
    s = NumericalSemigroup.from_generators(range(m, 2 * m - 4))
    sizes = tuple(sorted((4 * m - 5, 4 * m - 5, 5 * m - 13, 5 * m - 13,
                          5 * m - 7, 5 * m - 7)))
    return FamilyInstance(
        family="interval_m",
        params={"m": m},
        semigroup=s,
        predicted={
            "gaps": tuple(range(1, m)) + tuple(range(2 * m - 4, 2 * m)),
            "pseudo_frobenius": tuple(range(2 * m - 4, 2 * m)),
            "lambda_size": 5 * m - 13,
            "pa": 6,
            "sizes": sizes,
            "min_size": 4 * m - 5,
            "lambda_minimal": False,
        },
    )


def interval_k(k: int, l: int) -> FamilyInstance:
    """The semigroup generated by 2k+1..3k+1 plus its divisor witness.

    The witness T adds 1..l-1 and the values in (3k+1, 4k+1] not congruent
    to 1 mod l; its size follows a closed form whose division by 2l^2 must
    be exact.
    """
    if k < 4:
        raise ValueError(f"interval family needs k >= 4, got {k}")
    if l < 1 or k % l != 0:
        raise ValueError(f"{l} does not divide {k}")
    s = NumericalSemigroup.from_generators(range(2 * k + 1, 3 * k + 2))
    added = set(range(1, l)) | {x for x in range(3 * k + 2, 4 * k + 2)
                                if (x - 1) % l != 0}
    witness = s.union(added)
    numerator = (3 * k * k * l - k * k + 4 * k * l**3 + 3 * k * l * l + k * l
                 - 2 * l**4 + 2 * l**3)
    if numerator % (2 * l * l) != 0:
        raise ValueError(f"size formula not an integer for k={k}, l={l}")
    lam_t = numerator // (2 * l * l)
    u = k // l
    drop2 = (l - 1) * (u - 1) * (2 * l * u - 2 * l - u)  # twice the size drop
    if drop2 % 2 != 0:
        raise ValueError(f"size drop not an integer for k={k}, l={l}")
    return FamilyInstance(
        family="interval_k",
        params={"k": k, "l": l},
        semigroup=s,
        predicted={
            "lambda_s": k * k + 4 * k,
            "lambda_t": lam_t,
            "witness_associated": True,
            "size_drop": drop2 // 2,
            "improves": l not in (1, k),
        },
        witness=witness,
    )


def validate(inst: FamilyInstance) -> list[CheckRow]:
    """Prediction-vs-computed rows; computed values come from the solver."""
    s = inst.semigroup
    pred = inst.predicted
    rows = []
    if inst.family == "staircase":
        rows.append(CheckRow("frobenius", pred["frobenius"], s.frobenius))
        rows.append(CheckRow("type", pred["type"], s.type))
        rows.append(CheckRow("pseudo_frobenius", pred["pseudo_frobenius"],
                             s.pseudo_frobenius))
        rows.append(CheckRow("lambda_minimal", pred["lambda_minimal"],
                             is_lambda_minimal(s)))
    elif inst.family == "interval_m":
        solution = solve(s)
        rows.append(CheckRow("gaps", pred["gaps"], s.gaps))
        rows.append(CheckRow("pseudo_frobenius", pred["pseudo_frobenius"],
                             s.pseudo_frobenius))
        rows.append(CheckRow("lambda_size", pred["lambda_size"],
                             solution.lambda_s_size))
        rows.append(CheckRow("pa", pred["pa"], solution.pa))
        rows.append(CheckRow("sizes", pred["sizes"], solution.sizes))
        rows.append(CheckRow("min_size", pred["min_size"], solution.min_size))
        rows.append(CheckRow("lambda_minimal", pred["lambda_minimal"],
                             solution.lambda_minimal))
    elif inst.family == "interval_k":
        lam_s = size_via_gap_count(s)
        lam_t = size_via_gap_count(inst.witness)
        rows.append(CheckRow("lambda_s", pred["lambda_s"], lam_s))
        rows.append(CheckRow("lambda_t", pred["lambda_t"], lam_t))
        rows.append(CheckRow("witness_associated", pred["witness_associated"],
                             inst.witness.atom_monoid() == s))
        rows.append(CheckRow("size_drop", pred["size_drop"], lam_s - lam_t))
        rows.append(CheckRow("improves", pred["improves"], lam_t < lam_s))
    else:
        raise ValueError(f"unknown family {inst.family!r}")
    return rows


def asymptotic_ratio(l1: int) -> float:
    """Witness size over 2*sqrt(3)*|lambda(S)|^(3/4) at k = 12*l1^2, l = 3*l1.

    The ratio climbs toward 1 as l1 grows; sizes are measured on the actual
    sets, not read off the closed forms.
    """
    inst = interval_k(12 * l1 * l1, 3 * l1)
    lam_s = size_via_gap_count(inst.semigroup)
    lam_t = size_via_gap_count(inst.witness)
    return lam_t / (2 * math.sqrt(3) * lam_s ** 0.75)
