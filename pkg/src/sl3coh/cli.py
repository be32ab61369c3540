"""Command-line front end.

Subcommands ``char``, ``dims``, ``support``, ``verify`` and ``figure``.
Exit status is 0 on success, 1 when a computed invariant or a verification
fails, and 2 on a usage error.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from typing import Optional

from .cohomology import BundleTag, EngineError, cohomology, dims
from .figure import is_prime, render_svg
from .identities import CHECKS, ALIASES, resolve, verify_many
from .supportvar import support_variety

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    primes: list
    weight: Optional[tuple] = None
    box: Optional[int] = None
    degree: Optional[int] = None
    bundle: str = "Plain"
    prop: str = "all"
    fmt: str = "json"
    out: Optional[str] = None
    jobs: int = 1
    extra: dict = field(default_factory=dict)


def _parse_weight(text) -> tuple:
    if isinstance(text, (list, tuple)):
        parts = list(text)
    else:
        parts = str(text).split(",")
    try:
        r, s = (int(str(x).strip()) for x in parts)
    except ValueError:
        raise UsageError(f"weight must be 'r,s', got {text!r}") from None
    return r, s


def _parse_primes(text) -> list:
    if isinstance(text, int):
        items = [text]
    elif isinstance(text, (list, tuple)):
        items = list(text)
    else:
        items = str(text).split(",")
    try:
        primes = [int(str(x).strip()) for x in items]
    except ValueError:
        raise UsageError(f"primes must be integers, got {text!r}") from None
    for p in primes:
        if not is_prime(p):
            raise UsageError(f"{p} is not prime")
    return primes


def _parse_box(text) -> Optional[int]:
    if text is None or str(text) == "default":
        return None
    try:
        box = int(text)
    except ValueError:
        raise UsageError(f"box must be an integer or 'default', got {text!r}") from None
    if box < 0:
        raise UsageError("box must be nonnegative")
    return box


def _common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("-p", "--prime", help="prime, or comma-separated primes for verify")
    parser.add_argument("--box", help="sweep bound B meaning |r|,|s| <= B, or 'default'")
    parser.add_argument("--format", dest="fmt", choices=("json", "table", "svg"))
    parser.add_argument("--out", help="write output to this file")
    parser.add_argument("--jobs", type=int, help="worker processes for sweeps")
    parser.add_argument("--config", help="JSON file with default option values")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sl3coh",
        description="Line bundle cohomology, support varieties and identity checks for SL3.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_char = sub.add_parser("char", help="characters of H^i")
    p_char.add_argument("-w", "--weight")
    p_char.add_argument("--bundle", help="Plain, alpha or beta")

    p_dims = sub.add_parser("dims", help="dimensions of H^i at a weight or over a box")
    p_dims.add_argument("-w", "--weight")
    p_dims.add_argument("--bundle", help="Plain, alpha or beta")

    p_sup = sub.add_parser("support", help="support variety of H^i over G_1")
    p_sup.add_argument("-w", "--weight")
    p_sup.add_argument("-i", "--degree", type=int)

    p_ver = sub.add_parser("verify", help="exhaustive identity checks")
    p_ver.add_argument("--prop", help="check name, numeric alias or 'all'")
    p_ver.add_argument("--list", action="store_true", help="list available checks")

    p_fig = sub.add_parser("figure", help="annotated SVG of the weight lattice")
    p_fig.add_argument("-i", "--degree", type=int, help="only degree 1 is drawn")

    for p in (p_char, p_dims, p_sup, p_ver, p_fig):
        _common(p)
    return parser


def _glue_negative_values(argv: list) -> list:
    """Let ``--weight -1,0`` through argparse by rewriting it as ``--weight=-1,0``."""
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in ("-w", "--weight", "--box", "-p", "--prime") and i + 1 < len(argv) \
                and argv[i + 1].startswith("-") and argv[i + 1][1:2].isdigit():
            out.append(f"{tok}={argv[i + 1]}" if tok.startswith("--") else tok + argv[i + 1])
            i += 2
            continue
        out.append(tok)
        i += 1
    return out


def _load_config(path: Optional[str]) -> dict:
    if not path:
        return {}
    try:
        with open(path) as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read config {path}: {exc}") from None
    if not isinstance(data, dict):
        raise UsageError("config must be a JSON object")
    return data


def make_config(ns: argparse.Namespace) -> RunConfig:
    """Merge command-line flags over values from ``--config``."""
    file_cfg = _load_config(ns.config)

    def pick(name, *aliases, default=None):
        val = getattr(ns, name, None)
        if val is not None:
            return val
        for key in (name,) + aliases:
            if key in file_cfg:
                return file_cfg[key]
        return default

    default_fmt = "svg" if ns.command == "figure" else "json"
    cfg = RunConfig(
        command=ns.command,
        primes=_parse_primes(pick("prime", "p", "primes", default=None) or _missing("-p/--prime")),
        weight=None,
        box=_parse_box(pick("box")),
        degree=pick("degree", "i"),
        bundle=pick("bundle", default="Plain"),
        prop=str(pick("prop", default="all")),
        fmt=pick("fmt", "format", default=default_fmt),
        out=pick("out"),
        jobs=int(pick("jobs", default=1)),
    )
    w = pick("weight")
    if w is not None:
        cfg.weight = _parse_weight(w)
    if cfg.command != "verify" and len(cfg.primes) != 1:
        raise UsageError(f"{cfg.command} takes a single prime")
    if cfg.degree is not None and not 0 <= int(cfg.degree) <= 3:
        raise UsageError("degree must lie in 0..3")
    if cfg.jobs < 1:
        raise UsageError("--jobs must be positive")
    return cfg


def _missing(flag: str):
    raise UsageError(f"{flag} is required")


# ---------------------------------------------------------------------------


def _emit(cfg: RunConfig, text: str) -> None:
    if cfg.out:
        with open(cfg.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False) + "\n"


def _require_weight(cfg: RunConfig) -> tuple:
    if cfg.weight is None:
        raise UsageError("--weight is required")
    return cfg.weight


def _bundle(cfg: RunConfig) -> BundleTag:
    try:
        return BundleTag.parse(cfg.bundle)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_char(cfg: RunConfig) -> int:
    lam, p = _require_weight(cfg), cfg.primes[0]
    table = cohomology(lam, _bundle(cfg), p)
    ok = table.euler() == table.expected_euler()
    if cfg.fmt == "table":
        lines = [f"weight {lam}  bundle {table.bundle.value}  p={p}"]
        for i, ch in enumerate(table.chars):
            lines.append(f"H^{i}: dim {ch.dim()}  {len(ch.items())} weights")
        lines.append(f"Euler characteristic check: {'ok' if ok else 'FAILED'}")
        _emit(cfg, "\n".join(lines) + "\n")
    else:
        _emit(cfg, _dump(table.to_json()))
    return EXIT_OK if ok else EXIT_FAIL


def cmd_dims(cfg: RunConfig) -> int:
    p, bundle = cfg.primes[0], _bundle(cfg)
    if cfg.weight is not None:
        weights = [cfg.weight]
    elif cfg.box is not None:
        b = cfg.box
        weights = [(r, s) for r in range(-b, b + 1) for s in range(-b, b + 1)]
    else:
        raise UsageError("dims needs --weight or --box")
    rows = [{"weight": list(w), "dims": list(dims(w, bundle, p))} for w in weights]
    if cfg.fmt == "table":
        text = "".join(f"{r['weight'][0]:>6} {r['weight'][1]:>6}  "
                       + " ".join(f"{d:>12}" for d in r["dims"]) + "\n" for r in rows)
        _emit(cfg, text)
    else:
        _emit(cfg, _dump({"p": p, "bundle": bundle.value, "rows": rows}))
    return EXIT_OK


def cmd_support(cfg: RunConfig) -> int:
    lam, p = _require_weight(cfg), cfg.primes[0]
    degrees = [int(cfg.degree)] if cfg.degree is not None else [0, 1, 2, 3]
    results = []
    for i in degrees:
        res = support_variety(lam, i, p)
        if res is None:
            results.append({"weight": list(lam), "i": i, "p": p, "class": None,
                            "dim": None, "zero_module": True})
        else:
            results.append(res.to_json())
    if cfg.fmt == "table":
        text = ""
        for r in results:
            if r["class"] is None:
                text += f"H^{r['i']}{tuple(lam)} = 0\n"
            else:
                text += (f"H^{r['i']}{tuple(lam)}: {r['class']} (dim {r['dim']}), "
                         f"psi-order {r['evidence']['psi_order']}\n")
        _emit(cfg, text)
    else:
        _emit(cfg, _dump(results[0] if len(results) == 1 else results))
    return EXIT_OK


def cmd_verify(cfg: RunConfig, list_only: bool = False) -> int:
    if list_only:
        lines = [f"{name:28s} {c.description}" for name, c in CHECKS.items()]
        lines += [f"alias {k:>5} -> {v}" for k, v in ALIASES.items()]
        _emit(cfg, "\n".join(lines) + "\n")
        return EXIT_OK
    props = [s.strip() for s in cfg.prop.split(",")]
    for prop in props:
        if prop != "all":
            try:
                name = resolve(prop)
            except KeyError as exc:
                raise UsageError(str(exc)) from None
            low = min(cfg.primes)
            if low < CHECKS[name].min_p:
                raise UsageError(f"{name} needs p >= {CHECKS[name].min_p}")
    reports = verify_many(props, cfg.primes, cfg.box, jobs=cfg.jobs)
    failed = any(not r.passed for r in reports)
    if cfg.fmt == "table":
        lines = []
        for r in reports:
            lines.append(f"{'PASS' if r.passed else 'FAIL'}  {r.prop}  p={r.p} box={r.box}")
            for c in r.cases:
                lines.append(f"    {c.name:40s} {c.passed}/{c.tested}")
            for w in r.counterexamples:
                lines.append(f"    counterexample: {json.dumps(w)}")
        _emit(cfg, "\n".join(lines) + "\n")
    else:
        payload = [r.to_json() for r in reports]
        _emit(cfg, _dump(payload[0] if len(payload) == 1 else payload))
    return EXIT_FAIL if failed else EXIT_OK


def cmd_figure(cfg: RunConfig) -> int:
    p = cfg.primes[0]
    box = cfg.box if cfg.box is not None else 5
    if cfg.degree not in (None, 1):
        raise UsageError("the figure shows degree 1 only")
    try:
        svg = render_svg(p, box)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _emit(cfg, svg)
    return EXIT_OK


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        ns = parser.parse_args(_glue_negative_values(argv))
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        cfg = make_config(ns)
        if cfg.command == "char":
            return cmd_char(cfg)
        if cfg.command == "dims":
            return cmd_dims(cfg)
        if cfg.command == "support":
            return cmd_support(cfg)
        if cfg.command == "verify":
            return cmd_verify(cfg, list_only=bool(getattr(ns, "list", False)))
        return cmd_figure(cfg)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except EngineError as exc:
        print(f"invariant failure: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
