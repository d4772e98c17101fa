"""
Command-line front end.

Exit status is 0 on success, 2 for unparsable input and 1 when the input
parses but the computation rejects it.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction
from typing import Sequence

from . import affine, f2gp, grassmann, lusztig, order, quiver, ratmat
from .laurent import LaurentMatrix, PrecisionError, parse_series
from .permgroup import (Constellation, InvalidConstellation, Overflow, monodromy_order,
                        surface_data, validate_constellation)


class InputError(Exception):
    """Raised for input that cannot be parsed (exit status 2)."""


# -- input helpers -----------------------------------------------------------

def _load_json(path: str):
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON ({exc})") from None
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None


def _constellation(path: str) -> Constellation:
    data = _load_json(path)
    try:
        return Constellation.from_dict(data)
    except (ValueError, TypeError) as exc:
        raise InputError(f"{path}: {exc}") from None


def _laurent_matrix(data) -> LaurentMatrix:
    try:
        if isinstance(data, dict) and "rows" in data:
            data = data["rows"]
        return LaurentMatrix([[parse_series(e) if isinstance(e, str) else
                               (parse_series(str(e)) if isinstance(e, (int, float)) else
                                _laurent_entry(e)) for e in row] for row in data])
    except (ValueError, TypeError, KeyError) as exc:
        raise InputError(f"bad matrix: {exc}") from None


def _laurent_entry(e):
    from .laurent import Laurent
    return Laurent.from_json_dict(e)


def _rational_matrix(data):
    try:
        return ratmat.mat([[Fraction(str(c)) for c in row] for row in data])
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise InputError(f"bad rational matrix: {exc}") from None


def _window(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(t) for t in text.split(","))
    except ValueError:
        raise InputError(f"window must be a comma-separated list of integers, got {text!r}") from None


def _affine(n: int, text: str) -> affine.AffinePermutation:
    w = _window(text)
    if len(w) != n:
        raise InputError(f"window {text!r} has {len(w)} entries, expected {n}")
    return affine.AffinePermutation(n, w)


def _word(text: str):
    try:
        return f2gp.parse_word(text)
    except (f2gp.NotReduced, f2gp.ZeroInQuotient):
        raise
    except ValueError as exc:
        raise InputError(str(exc)) from None


# -- output helpers ----------------------------------------------------------

def _emit(args, text: str, payload=None, dot: str | None = None):
    if args.format == "json":
        if payload is None:
            raise InputError(f"--format json is not available for '{args.group} {args.action}'")
        print(json.dumps(payload, indent=2, sort_keys=True))
    elif args.format == "dot":
        if dot is None:
            raise InputError(f"--format dot is not available for '{args.group} {args.action}'")
        print(dot, end="" if dot.endswith("\n") else "\n")
    else:
        print(text)


def _frac_rows(a):
    return ratmat.to_strings(a)


# -- commands ----------------------------------------------------------------

def cmd_constellation(args):
    c = _constellation(args.file)
    if args.action == "validate":
        rep = validate_constellation(c)
        payload = dict(rep._asdict(), valid=rep.valid)
        text = "\n".join(f"{k}: {'yes' if v else 'no'}" for k, v in payload.items())
        _emit(args, text, payload)
        return 0 if rep.valid else 1
    if args.action == "genus":
        sd = surface_data(c)
        payload = dict(sd._asdict())
        payload["ramification_degrees"] = list(sd.ramification_degrees)
        text = (f"V={sd.vertices} E={sd.edges} F={sd.faces} chi={sd.euler_characteristic} "
                f"genus={sd.genus}\nramification degrees: "
                + " ".join(map(str, sd.ramification_degrees)))
        _emit(args, text, payload)
        return 0
    result = monodromy_order(c, cap=args.cap)
    if isinstance(result, Overflow):
        _emit(args, f"order exceeds cap {result.cap}", {"overflow": True, "cap": result.cap})
    else:
        _emit(args, f"monodromy group order: {result}", {"order": result})
    return 0


def cmd_quiver(args):
    c = _constellation(args.file)
    q, ideal = quiver.medial_quiver(c)
    dot = quiver.to_dot(q, ideal)
    if args.action == "axioms":
        rep = quiver.check_surface_axioms(q, ideal)
        payload = dict(rep._asdict(), all=rep.all)
        lines = [f"{k}: {'yes' if v else 'no'}" for k, v in payload.items()]
        if rep.all:
            lengths = quiver.nonzero_cycle_lengths(q, ideal)
            payload["nonzero_cycle_lengths"] = {str(k): v for k, v in lengths.items()}
            lines.append("nonzero cycle lengths: "
                         + ", ".join(f"{k}:{v}" for k, v in sorted(lengths.items())))
        _emit(args, "\n".join(lines), payload, dot)
        return 0 if rep.all else 1
    if args.action == "dot":
        if args.format == "json":
            raise InputError("'quiver dot' only writes DOT; use 'quiver build --format json'")
        print(dot, end="" if dot.endswith("\n") else "\n")
        return 0
    lines = [f"vertices: {len(q.vertices)}", f"arrows: {len(q.arrows)}"]
    for a in q.arrows:
        lines.append(f"  {a.id}: {a.tail} -> {a.head}  [cycle {a.tag}]")
    lines.append("relations (zero composites, second arrow written first):")
    lines.extend(f"  {w}" for w in sorted(quiver.relation_words(q, ideal)))
    _emit(args, "\n".join(lines), json.loads(quiver.quiver_to_json(q, ideal)), dot)
    return 0


def cmd_order(args):
    c = _constellation(args.file)
    so = order.build_surface_order(c)
    if args.action == "build":
        _emit(args, so.report(), so.to_dict())
        return 0
    if not args.element:
        raise InputError("'order member' needs --element FILE")
    data = _load_json(args.element)
    if not isinstance(data, list):
        raise InputError("element file must hold a list of matrices, one per vertex order")
    mats = [_laurent_matrix(m) for m in data]
    ok = order.membership(so, mats)
    _emit(args, "member" if ok else "not a member", {"member": ok})
    return 0 if ok else 1


def cmd_affine(args):
    if args.action == "compose":
        if len(args.window) != 2:
            raise InputError("'affine compose' needs exactly two --window arguments")
        u, v = (_affine(args.n, w) for w in args.window)
        r = affine.compose(u, v)
        _emit(args, f"{u} o {v} = {r}", {"n": args.n, "window": list(r.window)})
        return 0
    if len(args.window) != 1:
        raise InputError(f"'affine {args.action}' needs exactly one --window")
    if args.action == "validate":
        w = _window(args.window[0])
        ok = affine.validate_window(args.n, w)
        _emit(args, "valid" if ok else "invalid", {"valid": ok})
        return 0 if ok else 1
    s = _affine(args.n, args.window[0])
    if args.action == "split":
        sp = affine.split(s)
        payload = {"finite": list(sp.finite), "translation": list(sp.translation),
                   "winding_numbers": list(affine.winding_numbers(s))}
        text = (f"finite part: {list(sp.finite)}\ntranslation: {list(sp.translation)}\n"
                f"winding numbers: {list(affine.winding_numbers(s))}")
        _emit(args, text, payload)
        return 0
    m = affine.to_matrix(s)
    _emit(args, str(m), m.to_dict())
    return 0


def _lattices(path: str) -> list[grassmann.LatticeBasis]:
    data = _load_json(path)
    if isinstance(data, dict):
        data = data.get("lattices", data.get("chain"))
    if not isinstance(data, list) or not data:
        raise InputError(f"{path}: expected a list of matrices under 'lattices'")
    out = []
    for m in data:
        mat = _laurent_matrix(m)
        if mat.nrows != mat.ncols:
            raise InputError("lattice bases must be square")
        out.append(grassmann.LatticeBasis(mat))
    return out


def cmd_lattice(args):
    ls = _lattices(args.file)
    if args.action == "component":
        idx = [grassmann.component_index(l) for l in ls]
        _emit(args, "\n".join(f"L{i}: component {v}" for i, v in enumerate(idx, 1)),
              {"component_index": idx})
        return 0
    if args.action == "equal":
        table = [[grassmann.lattice_equal(a, b) for b in ls] for a in ls]
        idx = [grassmann.component_index(l) for l in ls]
        width = len(str(len(ls))) + 1
        header = " " * (width + 1) + " ".join(f"L{j}".rjust(width) for j in range(1, len(ls) + 1))
        lines = [f"component indices: {idx}", header]
        for i, row in enumerate(table, 1):
            lines.append(f"L{i}".rjust(width) + " " + " ".join(("=" if v else ".").rjust(width)
                                                             for v in row))
        _emit(args, "\n".join(lines), {"equal": table, "component_index": idx})
        return 0
    rep = grassmann.validate_flag(ls)
    payload = dict(rep._asdict(), valid=rep.valid)
    _emit(args, "\n".join(f"{k}: {'yes' if v else 'no'}" for k, v in payload.items()), payload)
    return 0 if rep.valid else 1


def cmd_lusztig(args):
    if args.action == "embed":
        data = _load_json(args.file)
        if isinstance(data, dict):
            if "matrix" not in data:
                raise InputError("nilpotent matrix file needs key 'matrix'")
            data = data["matrix"]
        n_mat = _rational_matrix(data)
        basis = lusztig.phi_nilpotent(n_mat)
        idx = grassmann.component_index(basis)
        _emit(args, f"{basis}\ncomponent index: {idx}",
              {"basis": basis.to_dict(), "component_index": idx})
        return 0
    if args.action == "equivariance":
        if args.file:
            data = _load_json(args.file)
            try:
                pairs = [(_rational_matrix(data["g"]), _rational_matrix(data["N"]))]
            except (KeyError, TypeError):
                raise InputError("equivariance file needs keys 'g' and 'N'") from None
        else:
            rng = random.Random(args.seed)
            pairs = []
            for _ in range(args.samples):
                n = rng.randint(1, args.max_n)
                pairs.append((ratmat.random_invertible(n, rng), ratmat.random_nilpotent(n, rng)))
        results = [lusztig.check_equivariance(g, n) for g, n in pairs]
        ok = all(results)
        _emit(args, f"checked {len(results)} pair(s): "
                    f"{'all equivariant' if ok else str(results.count(False)) + ' failure(s)'}",
              {"checked": len(results), "failures": results.count(False)})
        return 0 if ok else 1
    try:
        rep = lusztig.CyclicQuiverRep.from_dict(_load_json(args.file))
    except TypeError as exc:
        raise InputError(str(exc)) from None
    nil = lusztig.is_nilpotent_rep(rep)
    big = lusztig.big_matrix(rep)
    payload = {"nilpotent": nil, "big_matrix": big.to_dict()}
    lines = [f"dimension vector: {list(rep.dims)}", f"nilpotent: {'yes' if nil else 'no'}",
             "big matrix:", str(big)]
    if nil:
        lats = lusztig.lambda_lattices(rep)
        idx = [grassmann.component_index(l) for l in lats]
        payload["lambda"] = [l.to_dict() for l in lats]
        payload["component_index"] = idx
        for j, (l, i) in enumerate(zip(lats, idx), 1):
            lines += [f"Lambda_{j} (component {i}):", str(l)]
    _emit(args, "\n".join(lines), payload)
    return 0 if nil else 1


def cmd_f2(args):
    if args.action == "encode":
        w = _word(args.words[0])
        bits, copy = f2gp.encode(w)
        _emit(args, bits if bits else "(empty)", {"bits": bits, "copy": copy, "word": str(w)})
        return 0
    if len(args.words) != 2:
        raise InputError("'f2 compare' needs two words")
    a, b = (_word(t) for t in args.words)
    r = f2gp.compare(a, b)
    sym = {f2gp.LESS: "<", f2gp.EQUAL: "=", f2gp.GREATER: ">"}[r]
    _emit(args, f"{a} {sym} {b}", {"result": r})
    return 0


def cmd_gp(args):
    if args.action == "string":
        try:
            m = f2gp.string_module(args.arg)
        except (f2gp.NotReduced, f2gp.ZeroInQuotient):
            raise
        payload = {"word": str(m.word), "dim": m.dim, "X": _frac_rows(m.X), "Y": _frac_rows(m.Y)}
        text = (f"word: {m.word}\ndim: {m.dim}\nX =\n{ratmat.format_matrix(m.X)}\n"
                f"Y =\n{ratmat.format_matrix(m.Y)}")
        _emit(args, text, payload)
        return 0
    try:
        n = int(args.arg)
    except ValueError:
        raise InputError(f"symmetric power must be an integer, got {args.arg!r}") from None
    r = f2gp.sym_rep(n)
    payload = {"n": n, "X": _frac_rows(r.X), "Y": _frac_rows(r.Y), "H": _frac_rows(r.H)}
    text = "\n".join(f"{k} =\n{ratmat.format_matrix(v)}" for k, v in
                     (("X", r.X), ("Y", r.Y), ("H", r.H)))
    _emit(args, text, payload)
    return 0


# -- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "dot"), default="text")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized checks")

    p = argparse.ArgumentParser(prog="dessins", description="Exact computations around dessins d'enfants.")
    sub = p.add_subparsers(dest="group", required=True)

    def group(name, actions, handler, help_):
        g = sub.add_parser(name, help=help_)
        gs = g.add_subparsers(dest="action", required=True)
        parsers = {}
        for a in actions:
            parsers[a] = gs.add_parser(a, parents=[common])
            parsers[a].set_defaults(handler=handler)
        return parsers

    ps = group("constellation", ("validate", "genus", "monodromy"), cmd_constellation,
               "constellation checks")
    for a in ps.values():
        a.add_argument("file", help="constellation JSON ('-' for stdin)")
    ps["monodromy"].add_argument("--cap", type=int, default=100_000)

    for a in group("quiver", ("build", "axioms", "dot"), cmd_quiver, "medial quiver").values():
        a.add_argument("file")

    ps = group("order", ("build", "member"), cmd_order, "surface order")
    for a in ps.values():
        a.add_argument("file", help="constellation JSON")
    ps["member"].add_argument("--element", help="JSON list of matrices, one per vertex order")

    for a in group("affine", ("validate", "split", "matrix", "compose"), cmd_affine,
                   "affine symmetric group").values():
        a.add_argument("--n", type=int, required=True)
        a.add_argument("--window", action="append", required=True,
                       help="comma-separated window, e.g. 0,3 (twice for compose)")

    for a in group("lattice", ("equal", "component", "flag"), cmd_lattice, "lattices").values():
        a.add_argument("file", help="JSON with a list of matrices under 'lattices'")

    ps = group("lusztig", ("embed", "equivariance", "rep"), cmd_lusztig, "Lusztig embedding")
    ps["embed"].add_argument("file", help="JSON nilpotent matrix (key 'matrix')")
    ps["rep"].add_argument("file", help="cyclic-quiver representation JSON")
    ps["equivariance"].add_argument("file", nargs="?", help="JSON with keys 'g' and 'N'")
    ps["equivariance"].add_argument("--samples", type=int, default=20)
    ps["equivariance"].add_argument("--max-n", type=int, default=3)

    ps = group("f2", ("encode", "compare"), cmd_f2, "free-group words")
    ps["encode"].add_argument("words", nargs=1)
    ps["compare"].add_argument("words", nargs=2)

    ps = group("gp", ("string", "sym"), cmd_gp, "Gel'fand-Ponomarev modules")
    ps["string"].add_argument("arg", metavar="zigzag")
    ps["sym"].add_argument("arg", metavar="n")
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.handler(args)
    except InputError as exc:
        print(f"dessins: input error: {exc}", file=sys.stderr)
        return 2
    except (InvalidConstellation, f2gp.NotReduced, f2gp.ZeroInQuotient, lusztig.NotNilpotent,
            PrecisionError, ValueError, ArithmeticError) as exc:
        print(f"dessins: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
