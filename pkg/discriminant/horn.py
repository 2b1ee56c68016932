from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Tuple

from gkz.fan import GKZFan
from lattice.vectors import LatticeVector


@dataclass(frozen=True)
class FactoredRational:
    """coefficient * prod over ray groups of chi_i(u, v)^exponent."""

    coefficient: Fraction
    factors: Tuple[Tuple[int, int], ...]

    def degree(self) -> int:
        return sum(e for _, e in self.factors)

    def times(self, other: "FactoredRational") -> "FactoredRational":
        exponents: Dict[int, int] = dict(self.factors)
        for ray, e in other.factors:
            exponents[ray] = exponents.get(ray, 0) + e
        return FactoredRational(
            coefficient=self.coefficient * other.coefficient,
            factors=tuple((ray, e) for ray, e in sorted(exponents.items()) if e != 0),
        )


@dataclass(frozen=True)
class NormalizedRational:
    """Same value with every linear form scaled to a positive leading coefficient."""

    coefficient: Fraction
    factors: Tuple[Tuple[LatticeVector, int], ...]

    def render(self) -> str:
        return render_rational(self)


def horn_pullback(fan: GKZFan, lam: LatticeVector) -> FactoredRational:
    """Pull the monomial x^lambda back along the Horn parameterization."""
    coefficient = Fraction(1)
    factors = []
    for index, group in enumerate(fan.ray_groups):
        pairing = group.chi.pairing(lam)
        for d in group.multipliers:
            coefficient *= Fraction(d) ** (-d * pairing)
        exponent = -group.total * pairing
        if exponent != 0:
            factors.append((index, exponent))
    return FactoredRational(coefficient=coefficient, factors=tuple(factors))


def positive_form(chi: LatticeVector) -> Tuple[LatticeVector, int]:
    """(form with positive leading coefficient, sign that was absorbed)."""
    lead = chi.x if chi.x != 0 else chi.y
    return (chi, 1) if lead > 0 else (-chi, -1)


def normalize(fan: GKZFan, value: FactoredRational) -> NormalizedRational:
    coefficient = value.coefficient
    merged: Dict[LatticeVector, int] = {}
    order: List[LatticeVector] = []
    for ray, exponent in value.factors:
        form, sign = positive_form(fan.ray_groups[ray].chi)
        if sign < 0 and exponent % 2 != 0:
            coefficient = -coefficient
        if form not in merged:
            order.append(form)
            merged[form] = 0
        merged[form] += exponent
    return NormalizedRational(
        coefficient=coefficient,
        factors=tuple((form, merged[form]) for form in order if merged[form] != 0),
    )


def render_form(form: LatticeVector) -> str:
    """alpha*u + beta*v as text, e.g. 'u+3v' or '2u-v'."""
    terms = []
    for coefficient, variable in ((form.x, "u"), (form.y, "v")):
        if coefficient == 0:
            continue
        if abs(coefficient) == 1:
            body = variable
        else:
            body = f"{abs(coefficient)}{variable}"
        if coefficient < 0:
            terms.append(f"-{body}")
        elif terms:
            terms.append(f"+{body}")
        else:
            terms.append(body)
    text = "".join(terms)
    return f"({text})" if form.x != 0 and form.y != 0 else text


def _power(form: LatticeVector, exponent: int) -> str:
    base = render_form(form)
    return base if exponent == 1 else f"{base}^{exponent}"


def render_rational(value: NormalizedRational) -> str:
    numerator = [_power(f, e) for f, e in value.factors if e > 0]
    denominator = [_power(f, -e) for f, e in value.factors if e < 0]

    c = value.coefficient
    if numerator:
        prefix = "" if c == 1 else "-" if c == -1 else f"{c}*"
        text = prefix + "*".join(numerator)
    else:
        text = str(c)

    if len(denominator) == 1:
        text += f"/{denominator[0]}"
    elif denominator:
        text += f"/({'*'.join(denominator)})"
    return text
