import logging
import math
from fractions import Fraction
from functools import lru_cache
from typing import Sequence, Tuple, Union

import numpy as np

from hdran.core.exceptions import DomainException, NumericException

logger = logging.getLogger(__name__)

Rational = Union[int, Fraction]

# Below this argument the recurrence shifts x upward before the asymptotic series.
_ASYMPTOTIC_START = 10.0

# Bernoulli numbers B_2 .. B_16
_BERNOULLI = (
    Fraction(1, 6),
    Fraction(-1, 30),
    Fraction(1, 42),
    Fraction(-1, 30),
    Fraction(5, 66),
    Fraction(-691, 2730),
    Fraction(7, 6),
    Fraction(-3617, 510),
)

_HYP_BLOCK = 4096
_HYP_MAX_TERMS = 4_000_000
_HYP_TAIL_TOL = 1e-13


# [EVAL DIGAMMA]
# [Função digamma por recorrência ascendente seguida da série assintótica]
# [ENTRADA: x - real positivo]
# [SAIDA: float - Psi(x) com erro absoluto abaixo de 1e-12]
# [DEPENDENCIAS: math.log, _BERNOULLI]
def eval_digamma(x: float) -> float:
    if not x > 0:
        raise DomainException(f"digamma requires x > 0, got {x}", "x")
    shift = 0.0
    while x < _ASYMPTOTIC_START:
        shift -= 1.0 / x
        x += 1.0
    inv2 = 1.0 / (x * x)
    series = 0.0
    power = inv2
    for index, bernoulli in enumerate(_BERNOULLI, start=1):
        series += float(bernoulli) / (2 * index) * power
        power *= inv2
    return shift + math.log(x) - 0.5 / x - series


# [EVAL TRIGAMMA]
# [Primeira derivada da digamma, mesma estratégia de recorrência e série assintótica]
# [ENTRADA: x - real positivo]
# [SAIDA: float - Psi(1, x)]
# [DEPENDENCIAS: _BERNOULLI]
def eval_trigamma(x: float) -> float:
    if not x > 0:
        raise DomainException(f"trigamma requires x > 0, got {x}", "x")
    shift = 0.0
    while x < _ASYMPTOTIC_START:
        shift += 1.0 / (x * x)
        x += 1.0
    inv2 = 1.0 / (x * x)
    series = 0.0
    power = inv2 / x
    for bernoulli in _BERNOULLI:
        series += float(bernoulli) * power
        power *= inv2
    return shift + 1.0 / x + 0.5 * inv2 + series


# [STIRLING2]
# [Número de Stirling de segunda espécie pela recorrência do triângulo]
# [ENTRADA: r - tamanho do conjunto, i - número de blocos]
# [SAIDA: int - S(r, i); zero quando i > r]
# [DEPENDENCIAS: _stirling_row]
def stirling2(r: int, i: int) -> int:
    if r < 0 or i < 0:
        raise DomainException(f"stirling2 requires non-negative arguments, got ({r}, {i})")
    if i > r:
        return 0
    return _stirling_row(r)[i]


@lru_cache(maxsize=None)
def _stirling_row(r: int) -> Tuple[int, ...]:
    if r == 0:
        return (1,)
    previous = _stirling_row(r - 1) + (0,)
    row = [0] * (r + 1)
    for i in range(1, r + 1):
        row[i] = i * previous[i] + previous[i - 1]
    return tuple(row)


# [RISING FACTORIAL]
# [Símbolo de Pochhammer <x>_m = x(x+1)...(x+m-1) em aritmética exata]
# [ENTRADA: x - racional, m - inteiro não negativo]
# [SAIDA: Fraction]
# [DEPENDENCIAS: Fraction]
def rising_factorial(x: Rational, m: int) -> Fraction:
    result = Fraction(1)
    x = Fraction(x)
    for offset in range(m):
        result *= x + offset
    return result


# [GENERALIZED BINOMIAL]
# [Coeficiente binomial com topo racional: x(x-1)...(x-m+1)/m!]
# [ENTRADA: x - racional, m - inteiro não negativo]
# [SAIDA: Fraction]
# [DEPENDENCIAS: Fraction]
def generalized_binomial(x: Rational, m: int) -> Fraction:
    result = Fraction(1)
    x = Fraction(x)
    for offset in range(m):
        result *= (x - offset) / (offset + 1)
    return result


def _is_nonpositive_integer(value: Fraction) -> bool:
    return value.denominator == 1 and value <= 0


# [HYP3F2 TERMS]
# [Primeiros termos da série 3F2 no argumento 1, calculados em blocos com produto acumulado]
# [ENTRADA: upper - (a1, a2, a3), lower - (b1, b2), start - índice inicial, count - quantidade, first - termo no índice start]
# [SAIDA: np.ndarray - termos start+1 .. start+count]
# [DEPENDENCIAS: numpy.cumprod]
def hyp3f2_terms(upper: Sequence[Rational], lower: Sequence[Rational], count: int, start: int = 0, first: float = 1.0) -> np.ndarray:
    m = np.arange(start, start + count, dtype=float)
    a1, a2, a3 = (float(a) for a in upper)
    b1, b2 = (float(b) for b in lower)
    ratios = (a1 + m) * (a2 + m) * (a3 + m) / ((b1 + m) * (b2 + m) * (m + 1.0))
    return first * np.cumprod(ratios)


# [HYP3F2 UNIT]
# [Série hipergeométrica generalizada 3F2(a1,a2,a3; b1,b2; 1) truncada com estimativa de cauda]
# [ENTRADA: a1, a2, a3, b1, b2 - parâmetros racionais com b1 + b2 - a1 - a2 - a3 > 0]
# [SAIDA: float - soma da série com cauda estimada abaixo de 1e-12]
# [DEPENDENCIAS: hyp3f2_terms, DomainException, NumericException]
def hyp3f2_unit(a1: Rational, a2: Rational, a3: Rational, b1: Rational, b2: Rational) -> float:
    upper = tuple(Fraction(a) for a in (a1, a2, a3))
    lower = tuple(Fraction(b) for b in (b1, b2))
    if any(_is_nonpositive_integer(b) for b in lower):
        raise DomainException(f"3F2 lower parameters must not be non-positive integers, got {lower}")
    terminating = any(_is_nonpositive_integer(a) for a in upper)
    excess = sum(lower) - sum(upper)
    if not terminating and excess <= 0:
        raise DomainException(
            f"3F2 at argument 1 diverges: b1 + b2 - a1 - a2 - a3 = {excess} must be positive"
        )
    s = float(excess)

    total = 1.0
    last = 1.0
    index = 0
    while index < _HYP_MAX_TERMS:
        block = hyp3f2_terms(upper, lower, _HYP_BLOCK, start=index, first=last)
        total += float(np.sum(block))
        index += _HYP_BLOCK
        last = float(block[-1])
        if last == 0.0:
            return total
        # terms behave like C m^-(s+1); Euler-Maclaurin gives the remaining sum
        tail = last * (index / s - 0.5)
        if abs(tail) <= _HYP_TAIL_TOL * max(1.0, abs(total)):
            return total + tail
    tail = last * (index / s - 0.5)
    if abs(tail) > 1e-8 * max(1.0, abs(total)):
        raise NumericException(
            f"3F2 series did not converge within {_HYP_MAX_TERMS} terms (tail estimate {tail:.3e})",
            details={"upper": [str(a) for a in upper], "lower": [str(b) for b in lower]},
        )
    logger.warning(f"3F2 series stopped at {index} terms with tail estimate {tail:.3e}")
    return total + tail
