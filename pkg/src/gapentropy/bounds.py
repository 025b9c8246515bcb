"""Catalogue of prime-gap and prime-size bound formulas as named pure functions.

Every formula is registered with its constants, validity domain, and formula
string.  Asymptotic statements (~, big-O) are evaluated with implicit
constant 1 — the convention the threshold claims downstream assume — and each
registry entry records that.  Inputs whose inner logarithms would be non-real
are rejected with DomainError; the boundary point itself is excluded.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .errors import DomainError

E = math.e
# Stored to >= 12 significant digits; truncated displays are formatting only.
EULER_GAMMA = 0.5772156649015329
# Catalogue constant for the log-squared correction term, stored verbatim.
WOLF_C = 0.2778769
ZHANG_CONSTANT = 70_000_000


class BoundId(str, Enum):
    wolf = "wolf"
    cramer_log2 = "cramer_log2"
    heath_brown = "heath_brown"
    granville = "granville"
    baker_harman = "baker_harman"
    cramer_rh = "cramer_rh"
    sinha_firoozbakht = "sinha_firoozbakht"
    jaroma_power = "jaroma_power"
    robin_upper = "robin_upper"
    pnt_nth_prime = "pnt_nth_prime"
    zhang_constant = "zhang_constant"


@dataclass(frozen=True)
class BoundFunction:
    """Registry row: a named formula, its constants, and its domain."""

    id: BoundId
    constants: dict[str, float]
    domain_lower: float  # smallest admissible input (exclusive); -inf if total
    arity: int
    formula: str
    validity_notes: str = ""


@dataclass(frozen=True)
class BoundEvaluation:
    id: str
    inputs: tuple[float, ...]
    value: float | Fraction | int | None
    in_domain: bool
    note: str = ""


def wolf_G(x: float) -> float:
    """ln x * (ln x - 2 ln ln x + c) with c = 0.2778769."""
    if x <= E:
        raise DomainError(f"wolf_G requires x > e, got {x}")
    lx = math.log(x)
    return lx * (lx - 2.0 * math.log(lx) + WOLF_C)


def cramer_G(x: float) -> float:
    """(ln x)^2."""
    if x <= 1:
        raise DomainError(f"cramer_G requires x > 1, got {x}")
    return math.log(x) ** 2


def heath_brown_G(x: float) -> float:
    """ln x * (ln x + ln ln ln x); the inner triple log may be negative."""
    if x <= E:
        raise DomainError(f"heath_brown_G requires x > e, got {x}")
    lx = math.log(x)
    return lx * (lx + math.log(math.log(lx)))


def granville_G(P: float) -> float:
    """2 e^(-gamma) (ln P)^2 ~= 1.12292 (ln P)^2."""
    if P <= 1:
        raise DomainError(f"granville_G requires P > 1, got {P}")
    return 2.0 * math.exp(-EULER_GAMMA) * math.log(P) ** 2


def baker_harman_G(P: float) -> float:
    """P^0.535 (implicit constant 1)."""
    if P <= 0:
        raise DomainError(f"baker_harman_G requires P > 0, got {P}")
    return P**0.535


def cramer_rh_G(P: float) -> float:
    """sqrt(P) * ln P."""
    if P <= 1:
        raise DomainError(f"cramer_rh_G requires P > 1, got {P}")
    return math.sqrt(P) * math.log(P)


def sinha_G(P: float, P_next: float) -> float:
    """(ln P)^2 - 2 ln P_next for a consecutive pair P < P_next.

    The -2 offset used in the downstream validity comparison is applied by
    the threshold claims, not here.
    """
    if P <= 1:
        raise DomainError(f"sinha_G requires P > 1, got {P}")
    if P_next <= P:
        raise DomainError(f"sinha_G requires P_next > P, got {P} >= {P_next}")
    return math.log(P) ** 2 - 2.0 * math.log(P_next)


def pnt_nth(n: float) -> float:
    """n ln n, the leading-order size of the n-th prime."""
    if n < 2:
        raise DomainError(f"pnt_nth requires n >= 2, got {n}")
    return n * math.log(n)


def jaroma_pow(n: float) -> float:
    """1.2^n, a geometric lower-envelope for prime growth in index n."""
    return 1.2**n


def robin_upper(n: float) -> tuple[float, bool]:
    """n ln n + n(ln ln n - 0.9385) and whether n >= 7022 (stated validity)."""
    if n <= E:
        raise DomainError(f"robin_upper requires n > e, got {n}")
    ln_n = math.log(n)
    value = n * ln_n + n * (math.log(ln_n) - 0.9385)
    return value, n >= 7022


def mertens_f(k: int) -> Fraction:
    """Product of (p-1)/(p-2) over odd primes p dividing k, as an exact rational.

    Defined for even k >= 2; an empty product (k a power of two) is 1.
    Predicts relative gap frequencies, e.g. f(6) = 2 vs f(8) = 1.
    """
    if isinstance(k, float):
        if not k.is_integer():
            raise DomainError(f"mertens_f requires an integer, got {k}")
        k = int(k)
    if k < 2:
        raise DomainError(f"mertens_f requires k >= 2, got {k}")
    if k % 2:
        raise DomainError(f"mertens_f requires even k, got {k}")
    m = k
    while m % 2 == 0:
        m //= 2
    result = Fraction(1)
    d = 3
    while d * d <= m:
        if m % d == 0:
            result *= Fraction(d - 1, d - 2)
            while m % d == 0:
                m //= d
        d += 2
    if m > 1:
        result *= Fraction(m - 1, m - 2)
    return result


def zhang_bound() -> int:
    """The fixed bounded-gap constant 7*10^7."""
    return ZHANG_CONSTANT


REGISTRY: dict[BoundId, BoundFunction] = {
    BoundId.wolf: BoundFunction(
        id=BoundId.wolf,
        constants={"c": WOLF_C},
        domain_lower=E,
        arity=1,
        formula="ln(x)*(ln(x) - 2*ln(ln(x)) + c)",
        validity_notes="implicit_constant=1",
    ),
    BoundId.cramer_log2: BoundFunction(
        id=BoundId.cramer_log2,
        constants={},
        domain_lower=1.0,
        arity=1,
        formula="ln(x)**2",
        validity_notes="implicit_constant=1 (asymptotic ~ taken as equality)",
    ),
    BoundId.heath_brown: BoundFunction(
        id=BoundId.heath_brown,
        constants={},
        domain_lower=E,
        arity=1,
        formula="ln(x)*(ln(x) + ln(ln(ln(x))))",
        validity_notes="implicit_constant=1; inner triple log may be negative",
    ),
    BoundId.granville: BoundFunction(
        id=BoundId.granville,
        constants={"gamma": EULER_GAMMA, "two_exp_neg_gamma": 2.0 * math.exp(-EULER_GAMMA)},
        domain_lower=1.0,
        arity=1,
        formula="2*exp(-gamma)*ln(P)**2",
        validity_notes="leading coefficient 2*exp(-gamma) ~= 1.12292",
    ),
    BoundId.baker_harman: BoundFunction(
        id=BoundId.baker_harman,
        constants={"exponent": 0.535},
        domain_lower=0.0,
        arity=1,
        formula="P**0.535",
        validity_notes="implicit_constant=1 (big-O taken as equality)",
    ),
    BoundId.cramer_rh: BoundFunction(
        id=BoundId.cramer_rh,
        constants={},
        domain_lower=1.0,
        arity=1,
        formula="sqrt(P)*ln(P)",
        validity_notes="implicit_constant=1",
    ),
    BoundId.sinha_firoozbakht: BoundFunction(
        id=BoundId.sinha_firoozbakht,
        constants={},
        domain_lower=1.0,
        arity=2,
        formula="ln(P)**2 - 2*ln(P_next)",
        validity_notes="requires P_next > P; the -2 comparison offset is applied downstream",
    ),
    BoundId.jaroma_power: BoundFunction(
        id=BoundId.jaroma_power,
        constants={"base": 1.2},
        domain_lower=float("-inf"),
        arity=1,
        formula="1.2**n",
        validity_notes="total on the reals",
    ),
    BoundId.robin_upper: BoundFunction(
        id=BoundId.robin_upper,
        constants={"offset": 0.9385, "valid_from": 7022.0},
        domain_lower=E,
        arity=1,
        formula="n*ln(n) + n*(ln(ln(n)) - 0.9385)",
        validity_notes="stated validity n >= 7022; below that in_validity is False",
    ),
    BoundId.pnt_nth_prime: BoundFunction(
        id=BoundId.pnt_nth_prime,
        constants={},
        domain_lower=2.0,
        arity=1,
        formula="n*ln(n)",
        validity_notes="leading-order only; undershoots the true n-th prime",
    ),
    BoundId.zhang_constant: BoundFunction(
        id=BoundId.zhang_constant,
        constants={"value": float(ZHANG_CONSTANT)},
        domain_lower=float("-inf"),
        arity=0,
        formula="70000000",
        validity_notes="fixed constant",
    ),
}

# Callables behind each registry id; mertens_f is evaluable by id as well even
# though it lives outside the BoundId enum (it returns a rational, not a real).
_EVALUATORS = {
    BoundId.wolf.value: wolf_G,
    BoundId.cramer_log2.value: cramer_G,
    BoundId.heath_brown.value: heath_brown_G,
    BoundId.granville.value: granville_G,
    BoundId.baker_harman.value: baker_harman_G,
    BoundId.cramer_rh.value: cramer_rh_G,
    BoundId.sinha_firoozbakht.value: sinha_G,
    BoundId.jaroma_power.value: jaroma_pow,
    BoundId.robin_upper.value: robin_upper,
    BoundId.pnt_nth_prime.value: pnt_nth,
    BoundId.zhang_constant.value: zhang_bound,
    "mertens_f": mertens_f,
}


def evaluable_ids() -> tuple[str, ...]:
    return tuple(sorted(_EVALUATORS))


def evaluate(bound_id: str, *inputs: float) -> BoundEvaluation:
    """Evaluate a bound by id, reporting out-of-domain inputs instead of raising."""
    if bound_id not in _EVALUATORS:
        raise DomainError(f"unknown bound id {bound_id!r}; known: {', '.join(evaluable_ids())}")
    fn = _EVALUATORS[bound_id]
    try:
        result = fn(*inputs)
    except DomainError as exc:
        return BoundEvaluation(
            id=bound_id, inputs=tuple(float(v) for v in inputs),
            value=None, in_domain=False, note=str(exc),
        )
    note = ""
    if bound_id == BoundId.robin_upper.value:
        result, in_validity = result
        note = f"in_validity={in_validity} (stated validity n >= 7022)"
    elif bound_id == "mertens_f":
        note = "exact rational"
    return BoundEvaluation(
        id=bound_id, inputs=tuple(float(v) for v in inputs),
        value=result, in_domain=True, note=note,
    )


def export_registry() -> list[dict]:
    """Registry as plain dicts: id, formula, constants, domain, validity notes."""
    rows = []
    for bid in BoundId:
        bf = REGISTRY[bid]
        rows.append(
            {
                "id": bf.id.value,
                "formula": bf.formula,
                "constants": dict(bf.constants),
                "domain_lower": bf.domain_lower,
                "arity": bf.arity,
                "validity_notes": bf.validity_notes,
            }
        )
    rows.append(
        {
            "id": "mertens_f",
            "formula": "prod over odd primes p | k of (p-1)/(p-2)",
            "constants": {},
            "domain_lower": 2.0,
            "arity": 1,
            "validity_notes": "even k only; exact rational arithmetic",
        }
    )
    return rows
