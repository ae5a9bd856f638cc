"""``strang`` command line.

Module arguments use a compact syntax: ``ba`` (string module), ``1_0``
(simple), ``aBG/2`` or ``aBG/2/3`` (band with λ=2, m=3), ``P_0`` / ``P_1``
(projectives).  Field elements are bitmask integers.
"""
from __future__ import annotations

import argparse
import inspect
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Optional, Sequence

from . import __version__
from .algebra import AlgebraError, build_algebra, projective_module
from .arquiver import HookError, grow_component
from .field import FieldCtx, FieldError, parse_field
from .homology import HomologyError, ModuleLabel, ext1_dim, hom_space, is_isomorphic, omega_power, strip_and_recognize
from .krause import krause_hom_dim
from .modules import ModuleError, Representation, band_module, string_module, structure
from .polynomials import minpoly_halfroot, pd
from .suites import SUITES, all_jobs, run_job
from .words import WordError, canonical_band_flag, canonical_string, enumerate_words, parse_word

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _common(p: argparse.ArgumentParser, out=("json", "text")) -> None:
    p.add_argument("--family", type=int, choices=(1, 2), default=2)
    p.add_argument("--c", type=int, choices=(0, 1), default=0)
    p.add_argument("--d", type=int, default=3)
    p.add_argument("--field", default="2", help="field order: 2, 4, 2^3, F_16, 2^8")
    p.add_argument("--out", choices=out, default=out[-1] if "text" in out else out[0])


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="strang", description="Modules over the algebras Λ_{i,c}.")
    ap.add_argument("--version", action="version", version=f"strang {__version__}")
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("enum", help="enumerate canonical strings or bands")
    _common(p)
    p.add_argument("--kind", choices=("strings", "bands"), default="strings")
    p.add_argument("--maxlen", type=int, default=4)

    p = sub.add_parser("module", help="build a module and print it")
    _common(p)
    p.add_argument("module")
    p.add_argument("--structure", choices=("radical", "socle", "top", "dim_vector"))

    p = sub.add_parser("hom", help="Hom, projective-factoring and stable Hom dimensions")
    _common(p)
    p.add_argument("source")
    p.add_argument("target")
    p.add_argument("--krause", action="store_true", help="also count graph maps (strings only)")

    p = sub.add_parser("ext", help="dim Ext^1")
    _common(p)
    p.add_argument("source")
    p.add_argument("target")

    p = sub.add_parser("omega", help="apply Ω^k and recognize the result")
    _common(p)
    p.add_argument("--word", required=True, help="module argument")
    p.add_argument("--power", type=int, default=1)
    p.add_argument("--maxlen", type=int, default=0, help="recognition bound (default: dimension)")

    p = sub.add_parser("ar", help="grow a stable AR component")
    _common(p, out=("json", "dot", "text"))
    p.add_argument("--seed", required=True, help="string word or band WORD/λ[/m]")
    p.add_argument("--radius", type=int, default=2)

    p = sub.add_parser("pd", help="the polynomial p_d(t) or q_ℓ(t)")
    p.add_argument("--d", type=int)
    p.add_argument("--ell", type=int)
    p.add_argument("--out", choices=("json", "text"), default="text")

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("--suite", choices=sorted(SUITES))
    p.add_argument("--all", action="store_true")
    p.add_argument("--family", type=int, choices=(1, 2), default=2)
    p.add_argument("--c", type=int, choices=(0, 1), default=0)
    p.add_argument("--d", type=int, default=3)
    p.add_argument("--field", default=None)
    p.add_argument("--maxlen", type=int)
    p.add_argument("--nmax", type=int)
    p.add_argument("--radius", type=int)
    p.add_argument("--lam", type=int)
    p.add_argument("--out", choices=("json", "text"), default="json")
    return ap


# --- argument helpers --------------------------------------------------------


def _spec_ctx(args):
    if args.d < 3:
        raise UsageError("defect-too-small: --d must be >= 3")
    return build_algebra(args.family, args.c, args.d), parse_field(args.field)


def parse_module_arg(text: str, spec, ctx: FieldCtx) -> tuple[ModuleLabel, Representation]:
    t = text.strip()
    if t in ("P_0", "P0", "P_1", "P1"):
        u = int(t[-1])
        return ModuleLabel("projective", f"P_{u}"), projective_module(spec, ctx, u)[0]
    if "/" in t:
        parts = t.split("/")
        if len(parts) not in (2, 3):
            raise UsageError(f"band syntax is WORD/λ or WORD/λ/m, got {t!r}")
        word = parse_word(parts[0], spec)
        lam = int(parts[1], 0)
        m = int(parts[2]) if len(parts) == 3 else 1
        rep = band_module(word, lam, m, spec, ctx)
        w, flipped = canonical_band_flag(word)
        return ModuleLabel("band", w.text, ctx.inv(lam) if flipped else lam, m), rep
    word = parse_word(t, spec)
    rep = string_module(word, spec, ctx)
    return ModuleLabel("string", canonical_string(word.unoriented()).text), rep


def _emit(obj, fmt: str, text: str) -> str:
    if fmt == "json":
        return json.dumps(obj, indent=2, ensure_ascii=False, sort_keys=False) + "\n"
    return f"# strang {__version__}\n{text}"


def _matrix_text(m) -> str:
    return "\n".join("  " + " ".join(str(int(x)) for x in row) for row in m) or "  (empty)"


# --- subcommands -------------------------------------------------------------


def cmd_enum(args) -> tuple[int, str]:
    spec, _ = _spec_ctx(args)
    if args.maxlen < 0:
        raise UsageError("--maxlen must be >= 0")
    words = [w.text for w in enumerate_words(spec, args.kind, args.maxlen)]
    return EXIT_OK, _emit({"kind": args.kind, "maxlen": args.maxlen, "count": len(words), "words": words}, args.out, "\n".join(words) + "\n")


def cmd_module(args) -> tuple[int, str]:
    spec, ctx = _spec_ctx(args)
    lab, rep = parse_module_arg(args.module, spec, ctx)
    if args.structure == "dim_vector":
        return EXIT_OK, _emit({"dims": list(rep.dims)}, args.out, f"{rep.dims[0]} {rep.dims[1]}\n")
    if args.structure:
        rep = structure(rep, args.structure)
    lines = [f"{rep.label}  dims {rep.dims}"]
    for a in spec.arrow_names:
        lines.append(f"{a}:")
        lines.append(_matrix_text(rep.arrows[a]))
    return EXIT_OK, _emit(rep.to_json(), args.out, "\n".join(lines) + "\n")


def cmd_hom(args) -> tuple[int, str]:
    spec, ctx = _spec_ctx(args)
    _, m = parse_module_arg(args.source, spec, ctx)
    _, n = parse_module_arg(args.target, spec, ctx)
    h = hom_space(m, n)
    ph = h.projective_sub.shape[0]
    out = {"source": m.label, "target": n.label, "hom": h.dim, "phom": ph, "stable": h.dim - ph}
    if args.krause:
        if "/" in args.source + args.target or "P" in args.source + args.target:
            raise UsageError("--krause needs two string modules")
        out["krause"] = krause_hom_dim(parse_word(args.source, spec), parse_word(args.target, spec), spec)
    text = "\n".join(f"{k}: {v}" for k, v in out.items()) + "\n"
    return EXIT_OK, _emit(out, args.out, text)


def cmd_ext(args) -> tuple[int, str]:
    spec, ctx = _spec_ctx(args)
    _, m = parse_module_arg(args.source, spec, ctx)
    _, n = parse_module_arg(args.target, spec, ctx)
    e = ext1_dim(m, n)
    return EXIT_OK, _emit({"source": m.label, "target": n.label, "ext1": e}, args.out, f"dim Ext^1 = {e}\n")


def cmd_omega(args) -> tuple[int, str]:
    spec, ctx = _spec_ctx(args)
    _, m = parse_module_arg(args.word, spec, ctx)
    r = omega_power(m, args.power)
    iso = is_isomorphic(m, r)
    out = {"input": m.label, "power": args.power, "dims": list(r.dims), "isomorphic_to_input": iso.isomorphic, "mode": iso.mode}
    if r.dim:
        mult, labels = strip_and_recognize(r, args.maxlen or r.dim)
        out["projective_summands"] = list(mult)
        out["summands"] = [str(x) for x in labels]
    text = (
        f"Ω^{args.power}({m.label}) has dims {r.dims}\n"
        + (f"summands: {', '.join(out.get('summands', [])) or '-'}\n")
        + f"isomorphic to input: {'true' if iso.isomorphic else 'false'} ({iso.mode})\n"
    )
    return EXIT_OK, _emit(out, args.out, text)


def cmd_ar(args) -> tuple[int, str]:
    spec, ctx = _spec_ctx(args)
    if args.radius < 0:
        raise UsageError("--radius must be >= 0")
    lab, _ = parse_module_arg(args.seed, spec, ctx)
    if lab.kind == "projective":
        raise UsageError("projective modules are not in the stable AR quiver")
    g = grow_component(lab, args.radius, spec, ctx)
    if args.out == "dot":
        return EXIT_OK, g.to_dot()
    data = g.to_json()
    lines = [f"component of {data['seed']}: {data['classification']}"]
    lines += [f"  [{n['layer']}] {n['label']} dims {tuple(n['dims'])}" for n in data["nodes"]]
    lines += [f"  {e['src']} -> {e['dst']} ({e['kind']})" for e in data["edges"]]
    return EXIT_OK, _emit(data, args.out, "\n".join(lines) + "\n")


def cmd_pd(args) -> tuple[int, str]:
    if (args.d is None) == (args.ell is None):
        raise UsageError("give exactly one of --d or --ell")
    if args.d is not None:
        if args.d < 3:
            raise UsageError("--d must be >= 3")
        poly, name = pd(args.d), f"p_{args.d}"
    else:
        if args.ell < 2:
            raise UsageError("--ell must be >= 2")
        poly, name = minpoly_halfroot(args.ell), f"q_{args.ell}"
    data = {"name": name, "poly": str(poly), "coefficients": list(poly.coeffs), "degree": poly.degree}
    return EXIT_OK, _emit(data, args.out, f"{name}(t) = {poly}\ncoefficients {list(poly.coeffs)}\n")


def _suite_kwargs(args) -> dict:
    name = args.suite
    kw: dict = {}
    if name not in ("pd",):
        kw.update({"i": args.family, "c": args.c, "d": args.d})
    if args.field is not None and name not in ("pd",):
        kw["ctx"] = parse_field(args.field)
    for flag in ("maxlen", "nmax", "radius"):
        v = getattr(args, flag)
        if v is not None:
            kw[flag] = v
    if args.lam is not None:
        kw["lam"] = args.lam
    allowed = set(inspect.signature(SUITES[name]).parameters)
    bad = sorted(k for k in kw if k not in allowed)
    if bad:
        raise UsageError(f"suite {name} does not take {', '.join('--' + b for b in bad)}")
    return kw


def _threads() -> int:
    env = os.environ.get("STRANG_THREADS")
    if env:
        try:
            n = int(env)
        except ValueError:
            raise UsageError("STRANG_THREADS must be an integer")
        return max(1, n)
    return os.cpu_count() or 1


def cmd_verify(args) -> tuple[int, str]:
    if args.all == bool(args.suite):
        raise UsageError("give exactly one of --suite or --all")
    if args.all:
        jobs = all_jobs()
        n = _threads()
        if n == 1:
            reports = [run_job(j) for j in jobs]
        else:
            with ProcessPoolExecutor(max_workers=n) as ex:
                reports = list(ex.map(run_job, jobs))
        ok = all(r["pass"] for r in reports)
        lines = [f"{'PASS' if r['pass'] else 'FAIL'}  {r['suite']} {json.dumps(r['params'], ensure_ascii=False)}" for r in reports]
        lines.append(f"overall: {'PASS' if ok else 'FAIL'}")
        payload = {"reports": reports, "pass": ok}
        return (EXIT_OK if ok else EXIT_FAIL), _emit(payload, args.out, "\n".join(lines) + "\n")
    if args.d < 3:
        raise UsageError("defect-too-small: --d must be >= 3")
    report = SUITES[args.suite](**_suite_kwargs(args))
    out = report.dumps() + "\n" if args.out == "json" else f"# strang {__version__}\n" + report.to_text()
    return (EXIT_OK if report.passed else EXIT_FAIL), out


COMMANDS = {
    "enum": cmd_enum,
    "module": cmd_module,
    "hom": cmd_hom,
    "ext": cmd_ext,
    "omega": cmd_omega,
    "ar": cmd_ar,
    "pd": cmd_pd,
    "verify": cmd_verify,
}


def run(argv: Optional[Sequence[str]] = None) -> tuple[int, str]:
    """Parse and dispatch; returns (exit code, output text)."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0), ""
    try:
        return COMMANDS[args.cmd](args)
    except (UsageError, WordError, ModuleError, AlgebraError, FieldError, HookError, ValueError) as e:
        return EXIT_USAGE, f"strang {args.cmd}: error: {e}\n"
    except HomologyError as e:
        return EXIT_FAIL, f"strang {args.cmd}: {e}\n"


def main(argv: Optional[Sequence[str]] = None) -> int:
    code, out = run(argv)
    stream = sys.stdout if code == EXIT_OK or (code == EXIT_FAIL and out.lstrip().startswith(("{", "#"))) else sys.stderr
    stream.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
