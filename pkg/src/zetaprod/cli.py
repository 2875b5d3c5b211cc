"""Command-line frontend: values, eval, primes, verify.

Numbers are serialized with 17 significant digits so JSON output
round-trips binary64 exactly; all reduction orders in the library are
fixed, so identical invocations produce byte-identical output.

Exit codes: 0 all good, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import math
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import arith, products, rings, zetas
from .special import hurwitz_zeta, hurwitz_zeta_ds, log_gamma
from .special import riemann_zeta, riemann_zeta_ds

SUITES = (
    "euler-product",
    "factorization",
    "partial-zeta",
    "artin-hasse",
    "lerch",
    "bold-z",
    "power-identity",
    "all",
)

_HALF_LN_TWO_PI = 0.9189385332046727
_FLOAT_NOISE = 1e-12  # binary64 floor added to truncation-tail tolerances


def _fmt(x: float) -> str:
    return format(x, ".17g")


def _render_json(obj) -> str:
    """Deterministic JSON with 17-significant-digit floats."""
    if isinstance(obj, dict):
        items = ", ".join(f'"{k}": {_render_json(v)}' for k, v in obj.items())
        return "{" + items + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(_render_json(v) for v in obj) + "]"
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if isinstance(obj, float):
        return _fmt(obj)
    if isinstance(obj, int):
        return str(obj)
    if obj is None:
        return "null"
    return '"' + str(obj).replace("\\", "\\\\").replace('"', '\\"') + '"'


# ---------------------------------------------------------------- values


def _cmd_values(args) -> int:
    product = (
        products.regularized_integer_product(args.ring)
        if args.target == "integers"
        else products.regularized_prime_product(args.ring)
    )
    doc = {
        "command": "values",
        "ring": product.ring,
        "target": product.target,
        "log_value": product.log_value,
        "numeric_value": product.numeric_value,
        "closed_form_value": product.closed_form_value,
        "discrepancy": product.discrepancy,
        "modulus": product.modulus,
    }
    if args.format == "text":
        for key in ("log_value", "numeric_value", "closed_form_value",
                    "discrepancy", "modulus"):
            print(f"{key} = {_fmt(doc[key])}")
    else:
        print(_render_json(doc))
    return 0


# ------------------------------------------------------------------ eval


def _eval_dispatch(args) -> tuple[float, float, dict]:
    name = args.function
    s, x, cutoff = args.s, args.x, args.cutoff

    def need_s():
        if s is None:
            raise ValueError(f"--s is required for {name}")
        return s

    def need_x():
        if x is None:
            raise ValueError(f"--x is required for {name}")
        return x

    def need_modulus():
        if args.modulus is None:
            raise ValueError(f"--modulus is required for {name}")
        return args.modulus

    def need_ring():
        if args.ring is None:
            raise ValueError(f"--ring is required for {name}")
        return args.ring

    if name == "log-gamma":
        return log_gamma(need_x()), 0.0, {}
    if name == "hurwitz-zeta":
        r = hurwitz_zeta(need_s(), need_x())
    elif name == "hurwitz-zeta-ds":
        r = hurwitz_zeta_ds(need_s(), need_x())
    elif name == "riemann-zeta":
        r = riemann_zeta(need_s())
    elif name == "riemann-zeta-ds":
        r = riemann_zeta_ds(need_s())
    elif name == "dirichlet-l":
        r = zetas.dirichlet_L(need_modulus(), need_s())
    elif name == "dirichlet-l-ds":
        r = zetas.dirichlet_L_ds(need_modulus(), need_s())
    elif name == "dedekind-zeta":
        r = zetas.dedekind_zeta(need_ring(), need_s())
    elif name == "dedekind-zeta-ds":
        r = zetas.dedekind_zeta_ds(need_ring(), need_s())
    elif name == "dedekind-zeta-lattice":
        r = zetas.dedekind_zeta_lattice(need_ring(), need_s(), cutoff or 300)
    elif name == "partial-prime-zeta":
        if args.residue_class is None:
            raise ValueError("--residue-class is required for partial-prime-zeta")
        r = zetas.partial_prime_zeta(
            need_modulus(), args.residue_class, need_s(), cutoff or 100_000
        )
    elif name == "l-euler-product":
        r = zetas.L_euler_product(need_modulus(), need_s(), cutoff or 100_000)
    elif name == "zeta-euler-product":
        r = zetas.zeta_euler_product(need_s(), cutoff or 100_000)
    elif name == "prime-zeta-mobius":
        r = zetas.prime_zeta_mobius(need_s(), cutoff or 40)
    elif name == "prime-zeta-direct":
        r = zetas.prime_zeta_direct(need_s(), cutoff or 1_000_000)
    elif name == "ring-euler-closed":
        r = zetas.ring_euler_closed(need_ring(), need_s())
    elif name == "ring-euler-product":
        r = zetas.ring_euler_product(need_ring(), need_s(), cutoff or 100_000)
    else:
        raise ValueError(f"unknown function {name!r}")
    return r.value, r.tail_bound, dict(r.params)


def _cmd_eval(args) -> int:
    value, tail, params = _eval_dispatch(args)
    doc = {"command": "eval", "function": args.function}
    if args.s is not None:
        doc["s"] = args.s
    if args.x is not None:
        doc["x"] = args.x
    doc.update({"value": value, "tail_bound": tail, "params": params})
    if args.format == "text":
        print(f"value = {_fmt(value)}")
        print(f"tail_bound = {_fmt(tail)}")
    else:
        print(_render_json(doc))
    return 0


# ---------------------------------------------------------------- primes


def _cmd_primes(args) -> int:
    ring = rings.ring_by_tag(args.ring)
    pairs = rings.enumerate_ring_primes(ring, args.max_norm)
    rows = [
        (z.a, z.b, n, rings.classify_norm(ring, n)) for z, n in pairs
    ]
    if args.format == "csv":
        print("a,b,norm,class")
        for a, b, n, kind in rows:
            print(f"{a},{b},{n},{kind}")
    elif args.format == "text":
        for a, b, n, kind in rows:
            print(f"({a}, {b})  norm={n}  class={kind}")
    else:
        doc = {
            "command": "primes",
            "ring": args.ring,
            "max_norm": args.max_norm,
            "count": len(rows),
            "primes": [
                {"a": a, "b": b, "norm": n, "class": kind}
                for a, b, n, kind in rows
            ],
        }
        print(_render_json(doc))
    return 0


# ---------------------------------------------------------------- verify


@dataclass
class Check:
    name: str
    residual: float
    tolerance: float
    passed: bool


def _make_check(name: str, residual: float, default_tol: float,
                override: float | None) -> Check:
    tol = default_tol if override is None else override
    return Check(name, residual, tol, residual < tol)


def _suite_euler_product(override) -> list[Check]:
    checks = []
    for s in (2.0, 3.0):
        prod = zetas.zeta_euler_product(s, 100_000)
        ref = riemann_zeta(s)
        checks.append(
            _make_check(
                f"euler-product/zeta/s={s:g}",
                abs(prod.value - ref.value),
                prod.tail_bound + ref.tail_bound + _FLOAT_NOISE,
                override,
            )
        )
    for s in (2.0, 3.0):
        two = zetas.prime_zeta_mobius(s, 40)
        one = zetas.prime_zeta_direct(s, 1_000_000)
        checks.append(
            _make_check(
                f"euler-product/prime-zeta-two-route/s={s:g}",
                abs(two.value - one.value),
                1e-8,
                override,
            )
        )
    return checks


def _suite_factorization(override) -> list[Check]:
    checks = []
    for ring in ("gauss", "eisenstein"):
        for s in (2.0, 3.0):
            lattice = zetas.dedekind_zeta_lattice(ring, s, 300)
            ref = zetas.dedekind_zeta(ring, s)
            checks.append(
                _make_check(
                    f"factorization/{ring}/s={s:g}",
                    abs(lattice.value - ref.value),
                    lattice.tail_bound + ref.tail_bound + _FLOAT_NOISE,
                    override,
                )
            )
    return checks


def _suite_partial_zeta(override) -> list[Check]:
    checks = []
    for modulus in (4, 3):
        other = 3 if modulus == 4 else 2
        ramified = 2 if modulus == 4 else 3
        for s in (2.0, 3.0):
            z1 = zetas.partial_prime_zeta(modulus, 1, s, 100_000)
            zo = zetas.partial_prime_zeta(modulus, other, s, 100_000)
            ref = (1.0 - float(ramified) ** -s) * riemann_zeta(s).value
            combined = (
                z1.value * zo.tail_bound + zo.value * z1.tail_bound
            )
            checks.append(
                _make_check(
                    f"partial-zeta/identity/mod{modulus}/s={s:g}",
                    abs(z1.value * zo.value - ref),
                    combined + _FLOAT_NOISE,
                    override,
                )
            )
    for modulus in (4, 3):
        for s, tol in ((2.0, 1e-4), (3.0, 1e-6)):
            via_primes = zetas.L_euler_product(modulus, s, 100_000)
            via_hurwitz = zetas.dirichlet_L(modulus, s)
            checks.append(
                _make_check(
                    f"partial-zeta/l-route/mod{modulus}/s={s:g}",
                    abs(via_primes.value - via_hurwitz.value),
                    tol,
                    override,
                )
            )
    return checks


def _suite_artin_hasse(override) -> list[Check]:
    order = 30
    series = arith.artin_hasse_series(order, arith.default_tables())
    deltas = [
        series.coefficients[k] - Fraction(1, math.factorial(k))
        for k in range(order + 1)
    ]
    exact = all(d == 0 for d in deltas)
    residual = max(abs(float(d)) for d in deltas)
    if override is None:
        return [Check(f"artin-hasse/order-{order}", residual, 0.0, exact)]
    return [_make_check(f"artin-hasse/order-{order}", residual, 0.0, override)]


def _suite_lerch(override) -> list[Check]:
    checks = []
    for num, den in ((1, 4), (1, 3), (1, 2), (2, 3), (3, 4), (1, 1)):
        x = num / den
        lhs = hurwitz_zeta_ds(0.0, x).value
        rhs = log_gamma(x) - _HALF_LN_TWO_PI
        checks.append(
            _make_check(f"lerch/x={num}/{den}", abs(lhs - rhs), 1e-10, override)
        )
    return checks


def _suite_bold_z(override) -> list[Check]:
    checks = []
    for ring in ("gauss", "eisenstein"):
        prod = zetas.ring_euler_product(ring, 2.0, 100_000)
        closed = zetas.ring_euler_closed(ring, 2.0)
        checks.append(
            _make_check(
                f"bold-z/{ring}/s=2",
                abs(prod.value - closed.value),
                prod.tail_bound + closed.tail_bound + _FLOAT_NOISE,
                override,
            )
        )
    return checks


def _suite_power_identity(override) -> list[Check]:
    checks = []
    for ring in products.RINGS:
        report = products.power_identity_check(ring)
        checks.append(
            _make_check(
                f"power-identity/{ring}/k={report.exponent}",
                report.residual,
                products.POWER_IDENTITY_TOLERANCE,
                override,
            )
        )
    return checks


_SUITE_RUNNERS = {
    "euler-product": _suite_euler_product,
    "factorization": _suite_factorization,
    "partial-zeta": _suite_partial_zeta,
    "artin-hasse": _suite_artin_hasse,
    "lerch": _suite_lerch,
    "bold-z": _suite_bold_z,
    "power-identity": _suite_power_identity,
}


def run_suite(suite: str, tolerance: float | None = None) -> list[Check]:
    """Run one named verification suite (or all of them) and collect checks."""
    if suite == "all":
        checks = []
        for name in _SUITE_RUNNERS:
            checks.extend(_SUITE_RUNNERS[name](tolerance))
        return checks
    return _SUITE_RUNNERS[suite](tolerance)


def _cmd_verify(args) -> int:
    checks = run_suite(args.suite, args.tolerance)
    failed = sum(not c.passed for c in checks)
    if args.format == "json":
        doc = {
            "command": "verify",
            "suite": args.suite,
            "checks": [
                {
                    "name": c.name,
                    "residual": c.residual,
                    "tolerance": c.tolerance,
                    "pass": c.passed,
                }
                for c in checks
            ],
            "passed": len(checks) - failed,
            "failed": failed,
        }
        print(_render_json(doc))
    else:
        for c in checks:
            mark = "PASS" if c.passed else "FAIL"
            print(
                f"[{mark}] {c.name}: residual={_fmt(c.residual)} "
                f"tolerance={_fmt(c.tolerance)}"
            )
        print(f"{len(checks) - failed}/{len(checks)} checks passed")
    return 1 if failed else 0


# ----------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zetaprod",
        description=(
            "Zeta-regularized products of lattice-ring integers and primes, "
            "plus the zeta/L-function evaluators behind them."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_values = sub.add_parser(
        "values", help="regularized product values and closed forms"
    )
    p_values.add_argument("--ring", required=True, choices=products.RINGS)
    p_values.add_argument(
        "--target", required=True, choices=("integers", "primes")
    )
    p_values.add_argument("--format", default="json", choices=("json", "text"))
    p_values.set_defaults(handler=_cmd_values)

    p_eval = sub.add_parser("eval", help="evaluate one function at a point")
    p_eval.add_argument(
        "--function",
        required=True,
        choices=(
            "riemann-zeta", "riemann-zeta-ds", "hurwitz-zeta",
            "hurwitz-zeta-ds", "log-gamma", "dirichlet-l", "dirichlet-l-ds",
            "dedekind-zeta", "dedekind-zeta-ds", "dedekind-zeta-lattice",
            "partial-prime-zeta", "l-euler-product", "zeta-euler-product",
            "prime-zeta-mobius", "prime-zeta-direct", "ring-euler-closed",
            "ring-euler-product",
        ),
    )
    p_eval.add_argument("--s", type=float)
    p_eval.add_argument("--x", type=float)
    p_eval.add_argument("--modulus", type=int, choices=(3, 4))
    p_eval.add_argument("--ring", choices=("gauss", "eisenstein"))
    p_eval.add_argument("--residue-class", type=int)
    p_eval.add_argument(
        "--cutoff",
        type=int,
        help="generic truncation knob: lattice radius, prime cutoff, "
        "series length or norm cutoff, depending on the function",
    )
    p_eval.add_argument("--format", default="json", choices=("json", "text"))
    p_eval.set_defaults(handler=_cmd_eval)

    p_primes = sub.add_parser("primes", help="enumerate ring primes by norm")
    p_primes.add_argument("--ring", required=True, choices=("gauss", "eisenstein"))
    p_primes.add_argument("--max-norm", required=True, type=int)
    p_primes.add_argument(
        "--format", default="json", choices=("json", "csv", "text")
    )
    p_primes.set_defaults(handler=_cmd_primes)

    p_verify = sub.add_parser("verify", help="run a named identity suite")
    p_verify.add_argument("--suite", required=True, choices=SUITES)
    p_verify.add_argument(
        "--tolerance",
        type=float,
        help="uniform tolerance override for every check in the suite",
    )
    p_verify.add_argument("--format", default="text", choices=("json", "text"))
    p_verify.set_defaults(handler=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.handler(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
