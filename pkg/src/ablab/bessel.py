"""Bessel functions J0, J1, Y0, Y1 for real nonnegative arguments.

Two regimes with a crossover at x = 5:

* x <= 5: ascending power series in z = (x/2)^2, coefficients built exactly
  (rational arithmetic) at import time.  The largest summand on this range is
  ~10, so double-precision Horner evaluation stays within a few ulp.
* x > 5: Hankel-form trigonometric representation with the classic Cephes
  rational approximations P(z), Q(z) in z = (5/x)^2 (Cephes Math Library,
  S. L. Moshier; degree 6/6 and 7/7, peak error ~1e-15 on this range).

Scalar inputs take a pure-math fast path; numpy arrays are evaluated
vectorised.  Absolute accuracy is ~1e-15 on (0, 50], well inside the 1e-12
contract checked by the test suite.
"""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np

_EULER_GAMMA = 0.57721566490153286061
_SQ2OPI = 0.79788456080286535588  # sqrt(2/pi)
_PIO4 = 0.78539816339744830962
_THPIO4 = 2.35619449019234492885
_TWO_OVER_PI = 0.63661977236758134308

_CROSSOVER = 5.0
_NSER = 24  # series terms; term 24 at x=5 is ~1e-28


def _harmonic(k: int) -> Fraction:
    return sum((Fraction(1, j) for j in range(1, k + 1)), Fraction(0))


def _series_coeffs():
    j0 = []
    j1 = []
    y0s = []  # sum part of Y0, k >= 1
    y1s = []  # sum part of Y1, k >= 0
    for k in range(_NSER):
        fk = math.factorial(k)
        fk1 = math.factorial(k + 1)
        sign = -1 if k % 2 else 1
        j0.append(float(Fraction(sign, fk * fk)))
        j1.append(float(Fraction(sign, fk * fk1)))
        if k >= 1:
            y0s.append(float(Fraction(-sign) * _harmonic(k) / (fk * fk)))
        y1s.append(float(Fraction(sign) * (_harmonic(k) + _harmonic(k + 1)) / (fk * fk1)))
    return j0, j1, y0s, y1s


_J0C, _J1C, _Y0C, _Y1C = _series_coeffs()

# Cephes rational-approximation tables for the Hankel asymptotic form,
# z = (5/x)^2.  PP/PQ give P(z); QP/QQ give Q(z) (QQ has an implicit
# leading 1).  Order 0 and order 1 sets.
_PP0 = [7.96936729297347051624e-4, 8.28352392107440799803e-2, 1.23953371646414299388e0,
        5.44725003058768775090e0, 8.74716500199817011941e0, 5.30324038235394892183e0,
        9.99999999999999997821e-1]
_PQ0 = [9.24408810558863637013e-4, 8.56288474354474431428e-2, 1.25352743901058953537e0,
        5.47097740330417105182e0, 8.76190883237069594232e0, 5.30605288235394617618e0,
        1.00000000000000000218e0]
_QP0 = [-1.13663838898469149931e-2, -1.28252718670509318512e0, -1.95539544257735972385e1,
        -9.32060152123768231369e1, -1.77681167980488050595e2, -1.47077505154951170175e2,
        -5.14105326766599330220e1, -6.05014350600728481186e0]
_QQ0 = [6.43178256118178023184e1, 8.56430025976980587198e2, 3.88240183605401609683e3,
        7.24046774195652478189e3, 5.93072701187316984827e3, 2.06209331660327847417e3,
        2.42005740240291393179e2]
_PP1 = [7.62125616208173112003e-4, 7.31397056940917570436e-2, 1.12719608129684925192e0,
        5.11207951146807644818e0, 8.42404590141772420927e0, 5.21451598682361504063e0,
        1.00000000000000000254e0]
_PQ1 = [5.71323128072548699714e-4, 6.88455908754495404082e-2, 1.10514232634061696926e0,
        5.07386386128601488557e0, 8.39985554327604159757e0, 5.20982848682361821619e0,
        9.99999999999999997461e-1]
_QP1 = [5.10862594750176621635e-2, 4.98213872951233449420e0, 7.58238284132545283818e1,
        3.66779609360150777800e2, 7.10856304998926107277e2, 5.97489612400613639965e2,
        2.11688757100572135698e2, 2.52070205858023719784e1]
_QQ1 = [7.42373277035675149943e1, 1.05644886038262816351e3, 4.98641058337653607651e3,
        9.56231892404756170795e3, 7.99704160447350683650e3, 2.82619278517639096600e3,
        3.36093607810698293419e2]


def _polevl(x, coef):
    ans = coef[0]
    for c in coef[1:]:
        ans = ans * x + c
    return ans


def _p1evl(x, coef):
    ans = x + coef[0]
    for c in coef[1:]:
        ans = ans * x + c
    return ans


def _horner_desc(z, coeffs, n_terms):
    # ascending-series sum c[0] + c[1] z + ... evaluated Horner-style
    ans = coeffs[n_terms - 1]
    for k in range(n_terms - 2, -1, -1):
        ans = ans * z + coeffs[k]
    return ans


def _j0_small(x):
    z = 0.25 * x * x
    return _horner_desc(z, _J0C, _NSER)


def _j1_small(x):
    z = 0.25 * x * x
    return 0.5 * x * _horner_desc(z, _J1C, _NSER)


def _y0_small(x, log_half_x):
    z = 0.25 * x * x
    s = z * _horner_desc(z, _Y0C, _NSER - 1)
    return _TWO_OVER_PI * ((log_half_x + _EULER_GAMMA) * _j0_small(x) + s)


def _y1_small(x, log_half_x):
    z = 0.25 * x * x
    s = 0.5 * x * _horner_desc(z, _Y1C, _NSER)
    return (_TWO_OVER_PI * (log_half_x + _EULER_GAMMA) * _j1_small(x)
            - _TWO_OVER_PI / x - s / math.pi)


def _asymptotic(x, order, second_kind, lib):
    pp, pq, qp, qq = (_PP1, _PQ1, _QP1, _QQ1) if order else (_PP0, _PQ0, _QP0, _QQ0)
    w = 5.0 / x
    z = w * w
    p = _polevl(z, pp) / _polevl(z, pq)
    q = w * _polevl(z, qp) / _p1evl(z, qq)
    xn = x - (_THPIO4 if order else _PIO4)
    c, s = lib.cos(xn), lib.sin(xn)
    if second_kind:
        amp = p * s + q * c
    else:
        amp = p * c - q * s
    return _SQ2OPI * amp / lib.sqrt(x)


def _check_domain(x, second_kind):
    bad = (x <= 0.0) if second_kind else (x < 0.0)
    if isinstance(bad, np.ndarray):
        bad = bool(bad.any())
    if bad:
        kind = "Y" if second_kind else "J"
        raise ValueError(f"{kind} requires x {'> 0' if second_kind else '>= 0'}, got {x!r}")


def _eval(x, order, second_kind):
    if isinstance(x, np.ndarray):
        return _eval_array(x, order, second_kind)
    x = float(x)
    _check_domain(x, second_kind)
    if x <= _CROSSOVER:
        if second_kind:
            lhx = math.log(0.5 * x)
            return _y1_small(x, lhx) if order else _y0_small(x, lhx)
        return _j1_small(x) if order else _j0_small(x)
    return _asymptotic(x, order, second_kind, math)


def _eval_array(x, order, second_kind):
    x = np.asarray(x, dtype=float)
    _check_domain(x, second_kind)
    out = np.empty_like(x)
    small = x <= _CROSSOVER
    if small.any():
        xs = x[small]
        z = 0.25 * xs * xs
        j0 = _horner_desc(z, _J0C, _NSER)
        j1 = 0.5 * xs * _horner_desc(z, _J1C, _NSER)
        if second_kind:
            lhx = np.log(0.5 * xs)
            if order:
                s = 0.5 * xs * _horner_desc(z, _Y1C, _NSER)
                out[small] = (_TWO_OVER_PI * (lhx + _EULER_GAMMA) * j1
                              - _TWO_OVER_PI / xs - s / math.pi)
            else:
                s = z * _horner_desc(z, _Y0C, _NSER - 1)
                out[small] = _TWO_OVER_PI * ((lhx + _EULER_GAMMA) * j0 + s)
        else:
            out[small] = j1 if order else j0
    large = ~small
    if large.any():
        out[large] = _asymptotic(x[large], order, second_kind, np)
    return out


def bessel_j0(x):
    """J0(x) for x >= 0 (float or ndarray)."""
    return _eval(x, order=0, second_kind=False)


def bessel_j1(x):
    """J1(x) for x >= 0 (float or ndarray)."""
    return _eval(x, order=1, second_kind=False)


def bessel_y0(x):
    """Y0(x) for x > 0 (float or ndarray)."""
    return _eval(x, order=0, second_kind=True)


def bessel_y1(x):
    """Y1(x) for x > 0 (float or ndarray)."""
    return _eval(x, order=1, second_kind=True)


_KINDS = {"first": False, "second": True}


def bessel(kind: str, order: int, x):
    """Dispatch on kind ("first" | "second") and order (0 | 1)."""
    if kind not in _KINDS:
        raise ValueError(f"kind must be 'first' or 'second', got {kind!r}")
    if order not in (0, 1):
        raise ValueError(f"order must be 0 or 1, got {order!r}")
    return _eval(x, order=order, second_kind=_KINDS[kind])
