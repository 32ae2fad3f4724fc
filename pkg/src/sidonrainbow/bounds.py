"""Bound formulas evaluated as exact rational leading terms.

Error terms of order n^2 are carried as symbolic flags, never as numbers: the
source bounds do not come with explicit constants, so any finite-n comparison
against them is indicative only. The two bounds that hold absolutely (the
trivial total-count ceiling and the cyclic 3n^3/64 ceiling for four colors)
carry no flag and may be asserted.

Three distinct parity constants show up around these formulas and are easy to
conflate, so they get separate names here:
  theta_total    0 or 1/8, in the exact total count of Sidon 4-sets;
  theta_modular  1/2 or 3/8, in |S(k)|;
  theta_lb       1/3 or 1/4, in the lower-bound coefficient (2/3 of theta_modular).
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .core import mod_coloring
from .counting import count_rainbow_fast
from .enumeration import modular_count_formula, total_quads_formula

FLAG_UPPER = "+O_k(n^2)"
FLAG_LOWER = "-O_k(n^2)"


def theta_total(n: int) -> Fraction:
    return Fraction(0) if n % 2 == 0 else Fraction(1, 8)


def theta_modular(k: int) -> Fraction:
    return Fraction(1, 2) if k % 2 == 0 else Fraction(3, 8)


def theta_lb(k: int) -> Fraction:
    return Fraction(1, 3) if k % 2 == 0 else Fraction(1, 4)


def lb_coefficient(k: int) -> Fraction:
    """Leading coefficient 1/12 - 1/(3k) + theta_lb/k^2 of the constructive lower bound."""
    return Fraction(1, 12) - Fraction(1, 3 * k) + theta_lb(k) / k**2


def ub_general_coefficient(k: int) -> Fraction:
    """Leading coefficient 1/12 - 1/(24k) of the general upper bound."""
    return Fraction(1, 12) - Fraction(1, 24 * k)


@dataclass(frozen=True)
class BoundsReport:
    """Every bound formula for one (n, k), with exact rationals throughout.

    Fields holding leading terms of flagged bounds pair with *_flag strings;
    ub_trivial, cyclic_ub_k4 and cyclic_lb_k4 are absolute (no hidden terms).
    """

    n: int
    k: int
    total_exact: int
    ub_trivial: Fraction
    ub_general: Fraction
    ub_general_flag: str
    ub_k4: Optional[Fraction]
    ub_k4_flag: Optional[str]
    lb_construction: Fraction
    lb_construction_flag: str
    cyclic_ub_k4: Optional[Fraction]
    cyclic_lb_k4: Optional[Fraction]
    s_k: int


def _sig6(x: Fraction) -> str:
    """Decimal rendering with 6 significant digits."""
    return f"{float(x):.6g}"


def bounds_report(n: int, k: int) -> BoundsReport:
    """Evaluate all bound formulas for n >= k >= 4."""
    if k < 4 or n < k:
        raise ValueError(f"need n >= k >= 4, got n={n}, k={k}")
    n3 = Fraction(n) ** 3
    is4 = k == 4
    return BoundsReport(
        n=n,
        k=k,
        total_exact=total_quads_formula(n),
        ub_trivial=Fraction(n**3, 12) - Fraction(3 * n**2, 8) + Fraction(5 * n, 12),
        ub_general=ub_general_coefficient(k) * n3,
        ub_general_flag=FLAG_UPPER,
        ub_k4=Fraction(3 * n**3, 96) if is4 else None,
        ub_k4_flag="+O(n^2)" if is4 else None,
        lb_construction=lb_coefficient(k) * n3,
        lb_construction_flag=FLAG_LOWER,
        cyclic_ub_k4=Fraction(3 * n**3, 64) if is4 else None,
        cyclic_lb_k4=Fraction(n**3, 32) if is4 and n % 4 == 0 else None,
        s_k=modular_count_formula(k),
    )


def _fmt(x: Optional[Fraction], flag: Optional[str] = None) -> str:
    if x is None:
        return "-"
    body = f"{x.numerator}/{x.denominator} ({_sig6(x)})" if x.denominator != 1 else f"{x} ({_sig6(x)})"
    return f"{body} {flag}" if flag else body


def report_to_text(r: BoundsReport) -> str:
    rows = [
        ("n", str(r.n)),
        ("k", str(r.k)),
        ("total_exact", str(r.total_exact)),
        ("ub_trivial", _fmt(r.ub_trivial)),
        ("ub_general", _fmt(r.ub_general, r.ub_general_flag)),
        ("ub_k4", _fmt(r.ub_k4, r.ub_k4_flag)),
        ("lb_construction", _fmt(r.lb_construction, r.lb_construction_flag)),
        ("cyclic_ub_k4", _fmt(r.cyclic_ub_k4)),
        ("cyclic_lb_k4", _fmt(r.cyclic_lb_k4)),
        ("s_k", str(r.s_k)),
    ]
    width = max(len(name) for name, _ in rows)
    return "\n".join(f"{name:<{width}}  {val}" for name, val in rows)


def _frac_json(x: Optional[Fraction]) -> Optional[str]:
    if x is None:
        return None
    return f"{x.numerator}/{x.denominator}"


def report_to_json(r: BoundsReport) -> str:
    return json.dumps(
        {
            "n": r.n,
            "k": r.k,
            "total_exact": r.total_exact,
            "ub_trivial": _frac_json(r.ub_trivial),
            "ub_general": _frac_json(r.ub_general),
            "ub_general_flag": r.ub_general_flag,
            "ub_k4": _frac_json(r.ub_k4),
            "ub_k4_flag": r.ub_k4_flag,
            "lb_construction": _frac_json(r.lb_construction),
            "lb_construction_flag": r.lb_construction_flag,
            "cyclic_ub_k4": _frac_json(r.cyclic_ub_k4),
            "cyclic_lb_k4": _frac_json(r.cyclic_lb_k4),
            "s_k": r.s_k,
        },
        separators=(",", ":"),
    )


@dataclass(frozen=True)
class ConstructionReport:
    """Measured rainbow count of the mod-k coloring against its limit coefficient."""

    n: int
    k: int
    rainbow: int
    ratio: Fraction
    target_coefficient: Fraction
    gap: Fraction


def check_construction_vs_lb(n: int, k: int) -> ConstructionReport:
    """Exact rainbow count of mod_coloring(n, k) versus 2|S(k)| / (3k^3).

    The ratio rainbow/n^3 approaches the target from below as n grows; the
    monotone trend itself is asserted in tests, not here.
    """
    if k < 4 or n < k:
        raise ValueError(f"need n >= k >= 4, got n={n}, k={k}")
    if n % k != 0:
        raise ValueError(f"need k | n, got n={n}, k={k}")
    rainbow = count_rainbow_fast(mod_coloring(n, k))
    ratio = Fraction(rainbow, n**3)
    target = Fraction(2 * modular_count_formula(k), 3 * k**3)
    return ConstructionReport(n, k, rainbow, ratio, target, target - ratio)
