"""Command-line front end: rendering, classification, orbits, verification.

Flags may also be supplied through a config file of ``key = value`` lines
(``#`` starts a comment); explicit flags override file values, and unknown
keys are errors. Exit codes: 0 success, 1 I/O or verification failure,
2 flag/config errors.
"""
from __future__ import annotations

import argparse
import re
import sys
from dataclasses import dataclass
from typing import Callable

from . import __version__
from ._backend import BACKEND_NAME
from .classify import describe_factor, mandelbrot_member, quadchotomy
from .escape import EscapeConfig, hyper_orbit
from .hypnum import HyperbolicNumber
from .realdyn import classify_real
from .oracle import verify_mandelbrot_square, verify_quadchotomy
from .render import GridSpec, colorize, render_julia, render_mandelbrot, write_counts, write_ppm


@dataclass(frozen=True)
class Opt:
    """One configurable option: flag name (dashed), converter, default."""

    name: str
    type: Callable
    default: object = None
    help: str = ""
    choices: tuple | None = None

    @property
    def dest(self) -> str:
        return self.name.replace("-", "_")


def _frame(value: str) -> str:
    if value not in ("cartesian", "characteristic"):
        raise ValueError(f"frame must be cartesian or characteristic, got {value!r}")
    return value


def _char_pair(value: str) -> tuple[float, float]:
    parts = value.split(",")
    if len(parts) != 2:
        raise ValueError(f"expected X,Y, got {value!r}")
    return float(parts[0]), float(parts[1])


def _positive_int(value: str) -> int:
    n = int(value)
    if n < 1:
        raise ValueError(f"must be >= 1, got {n}")
    return n


def _nonneg_int(value: str) -> int:
    n = int(value)
    if n < 0:
        raise ValueError(f"must be >= 0, got {n}")
    return n


def _positive_float(value: str) -> float:
    x = float(value)
    if not x > 0:
        raise ValueError(f"must be > 0, got {x}")
    return x


_GRID_OPTS = [
    Opt("frame", _frame, "characteristic", "viewport frame"),
    Opt("min-u", float, -3.0), Opt("max-u", float, 1.25),
    Opt("min-v", float, -3.0), Opt("max-v", float, 1.25),
    Opt("width", _positive_int, 800), Opt("height", _positive_int, 800),
    Opt("max-iter", _positive_int, 200), Opt("bound", _positive_float, 4.0),
    Opt("out", str, None, "output PPM path, or - for stdout"),
    Opt("counts", str, None, "optional escape-count CSV path, or -"),
    Opt("workers", _positive_int, None, "render workers (default: all cores)"),
]

_PARAM_OPTS = [
    Opt("c-re", float, None, "cartesian real part of c"),
    Opt("c-im", float, None, "cartesian tau part of c"),
    Opt("c-char", _char_pair, None, "characteristic coordinates X,Y of c"),
]

_ORBIT_OPTS = [
    Opt("z0-re", float, 0.0), Opt("z0-im", float, 0.0),
    Opt("c-re", float, 0.0), Opt("c-im", float, 0.0),
    Opt("steps", _nonneg_int, 10),
]

_VERIFY_OPTS = [
    Opt("suite", str, "all", choices=("mandelbrot", "quadchotomy", "all")),
    Opt("resolution", _positive_int, 512),
    Opt("margin", _positive_float, 0.05),
    Opt("workers", _positive_int, None),
]

_SUBCOMMAND_OPTS: dict[str, list[Opt]] = {
    "mandelbrot": _GRID_OPTS,
    "julia": _GRID_OPTS + _PARAM_OPTS,
    "classify": _PARAM_OPTS,
    "orbit": _ORBIT_OPTS,
    "verify": _VERIFY_OPTS,
}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hyperjulia",
        description="Quadratic dynamics over the hyperbolic numbers "
                    f"(kernel backend: {BACKEND_NAME})",
    )
    parser.add_argument("--version", action="version", version=__version__)
    subs = parser.add_subparsers(dest="command", required=True)
    for name, opts in _SUBCOMMAND_OPTS.items():
        sub = subs.add_parser(name)
        sub.add_argument("--config", type=str, default=None,
                         help="key = value file; flags override it")
        for opt in opts:
            kwargs = {"type": opt.type, "default": None, "help": opt.help,
                      "dest": opt.dest}
            if opt.choices:
                kwargs["choices"] = opt.choices
            sub.add_argument(f"--{opt.name}", **kwargs)
    return parser


def _read_config(path: str) -> dict[str, str]:
    values = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{lineno}: expected key = value")
            key, _, val = line.partition("=")
            values[key.strip().replace("_", "-")] = val.strip()
    return values


def _resolve(command: str, ns: argparse.Namespace,
             fail: Callable[[str], None]) -> dict:
    """Merge flag values over config-file values over defaults."""
    opts = {o.name: o for o in _SUBCOMMAND_OPTS[command]}
    resolved = {o.dest: o.default for o in opts.values()}
    if ns.config is not None:
        try:
            file_values = _read_config(ns.config)
        except OSError as exc:
            fail(f"cannot read config file: {exc}")
        except ValueError as exc:
            fail(str(exc))
        for key, raw in file_values.items():
            if key not in opts:
                fail(f"unknown config key {key!r} for {command!r}")
            opt = opts[key]
            try:
                resolved[opt.dest] = opt.type(raw)
            except ValueError as exc:
                fail(f"config key {key!r}: {exc}")
            if opt.choices and resolved[opt.dest] not in opt.choices:
                fail(f"config key {key!r}: must be one of {opt.choices}")
    for opt in opts.values():
        flag_value = getattr(ns, opt.dest)
        if flag_value is not None:
            resolved[opt.dest] = flag_value
    return resolved


def _parse_parameter(o: dict, fail: Callable[[str], None]) -> HyperbolicNumber:
    cartesian_given = o["c_re"] is not None or o["c_im"] is not None
    char_given = o["c_char"] is not None
    if cartesian_given and char_given:
        fail("give either --c-re/--c-im or --c-char, not both")
    if char_given:
        return HyperbolicNumber.from_char(*o["c_char"])
    if o["c_re"] is None or o["c_im"] is None:
        fail("parameter required: --c-re R --c-im I, or --c-char X,Y")
    return HyperbolicNumber(o["c_re"], o["c_im"])


def _grid_spec(o: dict, fail: Callable[[str], None]) -> GridSpec:
    try:
        return GridSpec(frame=o["frame"], min_u=o["min_u"], max_u=o["max_u"],
                        min_v=o["min_v"], max_v=o["max_v"],
                        width=o["width"], height=o["height"])
    except ValueError as exc:
        fail(str(exc))


def _write_binary(path: str, write) -> int:
    try:
        if path == "-":
            write(sys.stdout.buffer)
            sys.stdout.buffer.flush()
        else:
            with open(path, "wb") as fh:
                write(fh)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


def _emit_render(grid, o: dict) -> int:
    status = _write_binary(o["out"], lambda fh: write_ppm(colorize(grid), fh))
    if status == 0 and o["counts"] is not None:
        status = _write_binary(o["counts"], lambda fh: write_counts(grid, fh))
    return status


def cmd_mandelbrot(o: dict, fail) -> int:
    if o["out"] is None:
        fail("--out is required")
    spec = _grid_spec(o, fail)
    cfg = EscapeConfig(max_iter=o["max_iter"], bound=o["bound"])
    grid = render_mandelbrot(spec, cfg, workers=o["workers"])
    return _emit_render(grid, o)


def cmd_julia(o: dict, fail) -> int:
    if o["out"] is None:
        fail("--out is required")
    c = _parse_parameter(o, fail)
    spec = _grid_spec(o, fail)
    cfg = EscapeConfig(max_iter=o["max_iter"], bound=o["bound"])
    grid = render_julia(c, spec, cfg, workers=o["workers"])
    return _emit_render(grid, o)


def cmd_classify(o: dict, fail) -> int:
    c = _parse_parameter(o, fail)
    cX, cY = c.to_char()
    # Factor classes are reported per coordinate even on the diagonals,
    # where the chamber tag warns that the product law does not apply.
    print(f"c_char={cX!r},{cY!r} "
          f"mandelbrot={'true' if mandelbrot_member(c) else 'false'} "
          f"chamber={quadchotomy(c)} "
          f"factor_X={describe_factor(classify_real(cX))} "
          f"factor_Y={describe_factor(classify_real(cY))}")
    return 0


def cmd_orbit(o: dict, fail) -> int:
    z0 = HyperbolicNumber(o["z0_re"], o["z0_im"])
    c = HyperbolicNumber(o["c_re"], o["c_im"])
    print("n,x,y,X,Y,norm")
    for n, z in enumerate(hyper_orbit(z0, c, o["steps"])):
        if z.is_finite():
            X, Y = z.to_char()
            print(f"{n},{z.x!r},{z.y!r},{X!r},{Y!r},{z.quad_form()!r}")
        else:
            print(f"{n},inf,inf,inf,inf,inf")
    return 0


def cmd_verify(o: dict, fail) -> int:
    all_passed = True
    if o["suite"] in ("mandelbrot", "all"):
        report = verify_mandelbrot_square(resolution=o["resolution"],
                                          margin=o["margin"],
                                          workers=o["workers"])
        for line in report.lines():
            print(line)
        all_passed &= report.all_passed
    if o["suite"] in ("quadchotomy", "all"):
        report = verify_quadchotomy(resolution=o["resolution"],
                                    workers=o["workers"])
        for line in report.lines():
            print(line)
        all_passed &= report.all_passed
    return 0 if all_passed else 1


_COMMANDS = {
    "mandelbrot": cmd_mandelbrot,
    "julia": cmd_julia,
    "classify": cmd_classify,
    "orbit": cmd_orbit,
    "verify": cmd_verify,
}


def _merge_negative_values(argv: list[str]) -> list[str]:
    """Join flags with negative-number-like values: --c-char -1,-1 parses as
    --c-char=-1,-1 (argparse would otherwise read the value as a flag)."""
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        nxt = argv[i + 1] if i + 1 < len(argv) else None
        if (tok.startswith("--") and "=" not in tok and nxt is not None
                and (nxt == "-" or re.match(r"^-(\d|\.|,)", nxt))):
            out.append(f"{tok}={nxt}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    if argv is None:
        argv = sys.argv[1:]
    ns = parser.parse_args(_merge_negative_values(list(argv)))
    resolved = _resolve(ns.command, ns, parser.error)
    return _COMMANDS[ns.command](resolved, parser.error)


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
