"""Batch command-line front end.

Every command reads and writes JSON documents; scalars travel as exact
strings "p/q", Neveu-Schwarz G-indices as strings "n/2".  Exit codes:
0 success, 1 semantic or validation failure, 2 parse or usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from fractions import Fraction
from typing import Dict, List, Optional

from . import conformal, induced, superalgebra
from .conformal import ExtensionAnsatz, render_poly
from .induced import DEFAULT_FUEL, InducedVector
from .order import BoolIndex, IndexVec, PBWMonomial
from .superalgebra import NEVEU_SCHWARZ, RAMOND, SuperElement, TagMismatchError


class UsageError(Exception):
    """Bad input document or parameters (exit 2)."""


class SemanticError(Exception):
    """Well-formed input that fails a check (exit 1)."""


# ---------------------------------------------------------------------------
# Scalars, indices, elements
# ---------------------------------------------------------------------------

def parse_scalar(s) -> Fraction:
    try:
        return Fraction(str(s))
    except (ValueError, ZeroDivisionError) as e:
        raise UsageError(f"bad scalar {s!r}: {e}") from None


def render_scalar(c: Fraction) -> str:
    return str(c)


def _parse_index(x) -> int:
    """Index to doubled form; accepts ints and strings like '-3' or '5/2'."""
    try:
        f = Fraction(str(x))
    except ValueError:
        raise UsageError(f"bad index {x!r}") from None
    d = f * 2
    if d.denominator != 1:
        raise UsageError(f"index {x!r} is not a half-integer")
    return int(d)


def _render_index(doubled: int):
    return doubled // 2 if doubled % 2 == 0 else f"{doubled}/2"


def parse_element(doc, algebra: Optional[str] = None) -> SuperElement:
    if not isinstance(doc, dict) or "terms" not in doc:
        raise UsageError("element document must be an object with a 'terms' list")
    alg = doc.get("algebra", algebra or RAMOND)
    if alg not in (RAMOND, NEVEU_SCHWARZ):
        raise UsageError(f"unknown algebra tag {alg!r}")
    terms: Dict = {}
    for t in doc["terms"]:
        try:
            fam = t["family"]
            doubled = _parse_index(t["index"])
            coeff = parse_scalar(t.get("coeff", "1"))
        except (KeyError, TypeError) as e:
            raise UsageError(f"bad element term {t!r}: {e}") from None
        key = (fam, doubled)
        terms[key] = terms.get(key, Fraction(0)) + coeff
    try:
        return SuperElement(alg, terms)
    except ValueError as e:
        raise UsageError(str(e)) from None


def render_element(x: SuperElement) -> dict:
    return {
        "algebra": x.algebra,
        "terms": [
            {"coeff": render_scalar(c), "family": f, "index": _render_index(d)}
            for f, d, c in x.sorted_terms()
        ],
    }


# ---------------------------------------------------------------------------
# Modules, monomials, vectors
# ---------------------------------------------------------------------------

def _parse_genkey(s: str):
    """'L-3' -> ('L', -3)."""
    fam, rest = s[:1], s[1:]
    if fam not in ("L", "I", "G"):
        raise UsageError(f"bad generator {s!r}")
    try:
        return (fam, int(rest))
    except ValueError:
        raise UsageError(f"bad generator index in {s!r}") from None


def parse_module(doc) -> induced.BaseModule:
    if not isinstance(doc, dict) or "type" not in doc:
        raise UsageError("module document must be an object with a 'type'")
    kind = doc["type"]
    try:
        if kind == "verma":
            return induced.verma(parse_scalar(doc.get("h", "0")), parse_scalar(doc.get("c0", "0")))
        if kind == "whittaker":
            phi = {_parse_genkey(k): parse_scalar(v) for k, v in doc.get("phi", {}).items()}
            return induced.whittaker(int(doc["k"]), phi, parse_scalar(doc.get("c0", "0")))
        if kind == "table":
            parities = {str(k): int(p) for k, p in doc["parities"].items()}
            actions = {}
            for gk, table in doc.get("actions", {}).items():
                actions[_parse_genkey(gk)] = {
                    str(src): {str(dst): parse_scalar(c) for dst, c in col.items()}
                    for src, col in table.items()
                }
            return induced.FiniteTableModule(
                int(doc.get("alpha", 0)),
                int(doc.get("beta", 0)),
                int(doc.get("z", 0)),
                parse_scalar(doc.get("c0", "0")),
                parities,
                actions,
            )
    except (KeyError, TypeError) as e:
        raise UsageError(f"bad module document: {e}") from None
    except ValueError as e:
        raise SemanticError(f"invalid module: {e}") from None
    raise UsageError(f"unknown module type {kind!r}")


def render_module(module: induced.BaseModule) -> dict:
    if isinstance(module, induced.WhittakerBase):
        return {
            "type": "whittaker",
            "k": module.k,
            "phi": {f"{f}{i}": render_scalar(c) for (f, i), c in sorted(module.phi.items())},
            "c0": render_scalar(module.c0),
        }
    if isinstance(module, induced.FiniteTableModule):
        return {
            "type": "table",
            "alpha": module.alpha,
            "beta": module.beta,
            "z": module.z,
            "c0": render_scalar(module.c0),
            "parities": dict(sorted(module.parities.items())),
            "actions": {
                f"{f}{i}": {
                    src: {dst: render_scalar(c) for dst, c in sorted(col.items())}
                    for src, col in sorted(table.items())
                }
                for (f, i), table in sorted(module.actions.items())
            },
        }
    raise UsageError("unsupported module kind")


def parse_monomial(term: dict, module: induced.BaseModule) -> PBWMonomial:
    def vec(obj) -> IndexVec:
        try:
            return IndexVec({int(p): int(e) for p, e in (obj or {}).items()})
        except (ValueError, TypeError, AttributeError) as e:
            raise UsageError(f"bad index vector {obj!r}: {e}") from None

    try:
        j = BoolIndex({int(p): 1 for p in term.get("j", [])})
    except (ValueError, TypeError) as e:
        raise UsageError(f"bad G-block {term.get('j')!r}: {e}") from None
    return PBWMonomial(vec(term.get("i")), j, vec(term.get("k")), module.alpha, module.beta)


def render_monomial(mono: PBWMonomial) -> dict:
    return {
        "i": {str(p): e for p, e in mono.i.entries},
        "j": [p for p, _ in mono.j.entries],
        "k": {str(p): e for p, e in mono.k.entries},
    }


def _coord_key_to_str(key) -> str:
    if isinstance(key, str):
        return key
    # Whittaker keys: (l_exps, i_exps, g_bits)
    l_exps, i_exps, g_bits = key
    parts = []
    for idx, e in enumerate(i_exps, start=1):
        if e:
            parts.append(f"I{idx}" + (f"^{e}" if e > 1 else ""))
    for idx, b in enumerate(g_bits):
        if b:
            parts.append(f"G{idx}")
    for idx, e in enumerate(l_exps):
        if e:
            parts.append(f"L{idx}" + (f"^{e}" if e > 1 else ""))
    return "*".join(parts) if parts else "1"


def _coord_key_from_str(s: str, module: induced.BaseModule):
    if isinstance(module, induced.FiniteTableModule):
        if s not in module.parities:
            raise UsageError(f"unknown basis key {s!r}")
        return s
    if not isinstance(module, induced.WhittakerBase):
        raise UsageError("unsupported module kind for coordinate parsing")
    k = module.k
    l_exps = [0] * k
    i_exps = [0] * max(k - 1, 0)
    g_bits = [0] * k
    if s != "1":
        for piece in s.split("*"):
            base, _, exps = piece.partition("^")
            exp = int(exps) if exps else 1
            fam, idx = _parse_genkey(base)
            try:
                if fam == "L":
                    l_exps[idx] += exp
                elif fam == "I":
                    i_exps[idx - 1] += exp
                else:
                    g_bits[idx] += exp
            except IndexError:
                raise UsageError(f"basis letter {piece!r} out of range") from None
    key = (tuple(l_exps), tuple(i_exps), tuple(g_bits))
    if any(b > 1 for b in key[2]):
        raise UsageError(f"G exponent above 1 in {s!r}")
    return key


def parse_vector(doc, module: induced.BaseModule) -> InducedVector:
    if not isinstance(doc, dict) or "terms" not in doc:
        raise UsageError("vector document must be an object with a 'terms' list")
    terms: Dict[PBWMonomial, Dict] = {}
    for t in doc["terms"]:
        mono = parse_monomial(t, module)
        coord = {
            _coord_key_from_str(k, module): parse_scalar(c)
            for k, c in t.get("coord", {}).items()
        }
        dst = terms.setdefault(mono, {})
        for k, c in coord.items():
            dst[k] = dst.get(k, Fraction(0)) + c
    return InducedVector(module, terms)


def render_vector(v: InducedVector) -> dict:
    out = []
    for mono in sorted(v.terms, key=lambda m: json.dumps(render_monomial(m), sort_keys=True)):
        coord = {
            _coord_key_to_str(k): render_scalar(c)
            for k, c in v.terms[mono].items()
        }
        entry = render_monomial(mono)
        entry["coord"] = dict(sorted(coord.items()))
        out.append(entry)
    return {"terms": out}


def parse_word(doc) -> List:
    if not isinstance(doc, dict) or "word" not in doc:
        raise UsageError("word document must be an object with a 'word' list")
    word = []
    for t in doc["word"]:
        try:
            word.append((t["family"], int(t["index"]), parse_scalar(t.get("coeff", "1"))))
        except (KeyError, TypeError) as e:
            raise UsageError(f"bad word letter {t!r}: {e}") from None
    return word


def parse_bivar(doc) -> Dict:
    out = {}
    for t in doc or []:
        try:
            out[(int(t["d"]), int(t["lam"]))] = parse_scalar(t["coeff"])
        except (KeyError, TypeError) as e:
            raise UsageError(f"bad polynomial term {t!r}: {e}") from None
    return out


# ---------------------------------------------------------------------------
# I/O plumbing
# ---------------------------------------------------------------------------

def _read_doc(arg: str):
    try:
        if arg == "-":
            text = sys.stdin.read()
        elif arg.lstrip().startswith(("{", "[")):
            text = arg
        else:
            with open(arg, "r", encoding="utf-8") as fh:
                text = fh.read()
    except OSError as e:
        raise UsageError(f"cannot read {arg!r}: {e}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise UsageError(f"malformed JSON in {arg!r}: {e}") from None


def _emit(doc) -> None:
    sys.stdout.write(json.dumps(doc, sort_keys=True, ensure_ascii=False) + "\n")


def _fuel() -> int:
    raw = os.environ.get("SHV_FUEL")
    if raw is None:
        return DEFAULT_FUEL
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"SHV_FUEL must be an integer, got {raw!r}") from None


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------

def cmd_bracket(args) -> int:
    x = parse_element(_read_doc(args.x), args.algebra)
    y = parse_element(_read_doc(args.y), args.algebra)
    try:
        out = superalgebra.bracket(x, y)
    except TagMismatchError as e:
        raise SemanticError(str(e)) from None
    _emit(render_element(out))
    return 0


def _conformal_spec(args):
    if getattr(args, "ansatz", None):
        doc = _read_doc(args.ansatz)
        try:
            ansatz = ExtensionAnsatz(
                parse_scalar(doc.get("a", "0")),
                parse_scalar(doc.get("b", "0")),
                parse_scalar(doc.get("c", "0")),
                parse_bivar(doc.get("phi")),
                parse_bivar(doc.get("psi")),
            )
        except ValueError as e:
            raise UsageError(f"invalid ansatz: {e}") from None
        return conformal.extension_spec(ansatz)
    return conformal.s_spec() if args.algebra == "s" else conformal.hv_spec()


def cmd_conformal_check(args) -> int:
    spec = _conformal_spec(args)
    skew = conformal.check_skew(spec)
    jac = conformal.check_jacobi(spec)
    doc = {
        "skew": "pass" if skew.passed else "fail",
        "jacobi": "pass" if jac.passed else "fail",
    }
    if not skew.passed:
        doc["skew_violations"] = sorted(map(list, skew.violations))
    if not jac.passed:
        doc["jacobi_violations"] = sorted(map(list, jac.violations))
    _emit(doc)
    return 0 if (skew.passed and jac.passed) else 1


def _render_bivar(p: Dict) -> str:
    if not p:
        return "0"
    parts = []
    for (d, l), c in sorted(p.items()):
        piece = "" if c == 1 and (d or l) else ("-" if c == -1 and (d or l) else str(c))
        if d:
            piece += "∂" if d == 1 else f"∂^{d}"
        if l:
            piece += "λ" if l == 1 else f"λ^{l}"
        parts.append(piece)
    return " + ".join(parts)


def cmd_conformal_classify(args) -> int:
    if args.degree < 0:
        raise UsageError("--degree must be non-negative")
    fams = conformal.classify_rank_one_extension(args.degree, c_nonzero=args.c_nonzero)
    out = []
    for f in fams:
        unit = _render_bivar(f.psi_unit)
        psi = "Δ" if unit == "1" else f"Δ*({unit})"
        out.append(
            {
                "a": render_scalar(f.a),
                "b": render_scalar(f.b),
                "c": render_scalar(f.c),
                "phi": _render_bivar(f.phi),
                "psi": psi,
            }
        )
    _emit({"degree": args.degree, "families": out})
    return 0


def cmd_conformal_products(args) -> int:
    spec = _conformal_spec(args)
    pairs = []
    for x in spec.generators:
        for y in spec.generators:
            prods = conformal.jth_products(spec, x, y)
            pairs.append(
                {
                    "pair": [x, y],
                    "products": [[j, render_poly(p)] for j, p in prods],
                }
            )
    _emit({"pairs": pairs})
    return 0


def cmd_lie_of(args) -> int:
    if not 0 <= args.range <= 64:
        raise UsageError("--range must lie in [0, 64]")
    spec = conformal.s_spec()
    matches = superalgebra.lie_matches_bracket(spec, -args.range, args.range)
    # the pre-shift identity [L_(m), L_(n)] = (m-n) L_(m+n-1)
    preshift = True
    for m in range(-args.range, args.range + 1):
        for n in range(-args.range, args.range + 1):
            raw = superalgebra.formal_bracket(spec, ("L", m), ("L", n))
            want = {("L", m + n - 1): Fraction(m - n)} if m != n else {}
            if raw != want:
                preshift = False
    _emit({"range": args.range, "matches": matches, "preshift_identity": preshift})
    return 0 if matches and preshift else 1


def cmd_ns_check(args) -> int:
    if not 0 <= args.range <= 64:
        raise UsageError("--range must lie in [0, 64]")
    rep = superalgebra.check_ns_embedding(args.range)
    _emit({"range": args.range, "passed": rep.passed, "injective": rep.injective})
    return 0 if rep.passed else 1


def cmd_quotient(args) -> int:
    if args.alpha < 0 or args.beta < 0 or args.z < 0 or args.alpha < 2 * args.beta:
        raise UsageError("need alpha >= 2*beta >= 0 and z >= 0")
    qa = superalgebra.quotient_algebra(args.alpha, args.beta, args.z)
    _emit(
        {
            "alpha": qa.alpha,
            "beta": qa.beta,
            "z": qa.z,
            "survivors": [f"{f}{m}" for f, m in qa.survivors],
            "ideal_check": "pass" if qa.ideal_checked else "fail",
            "jacobi": "pass" if qa.jacobi_checked else "fail",
            "nonzero_entries": len(qa.table),
        }
    )
    return 0


def cmd_normal_form(args) -> int:
    module = parse_module(_read_doc(args.module))
    word = parse_word(_read_doc(args.word))
    v = InducedVector.vacuum(module)
    out = v.act_word(word, strategy=args.strategy, fuel=_fuel())
    _emit(render_vector(out))
    return 0


def cmd_act(args) -> int:
    module = parse_module(_read_doc(args.module))
    fam, idx = _parse_genkey(args.generator)
    v = parse_vector(_read_doc(args.vector), module)
    _emit(render_vector(v.act(fam, idx, fuel=_fuel())))
    return 0


def cmd_validate_module(args) -> int:
    module = parse_module(_read_doc(args.module))
    rep = induced.validate_conditions(module, args.sample_bound)
    _emit({"ok": rep.ok, "z": rep.z, "failures": rep.failures})
    if not rep.ok:
        print("; ".join(rep.failures), file=sys.stderr)
        return 1
    return 0


def cmd_probe(args) -> int:
    module = parse_module(_read_doc(args.module))
    rep = induced.validate_conditions(module, args.sample_bound)
    if not rep.ok:
        _emit({"validation": {"ok": False, "z": rep.z, "failures": rep.failures}, "probes": []})
        print("; ".join(rep.failures), file=sys.stderr)
        return 1
    vectors: List[InducedVector] = []
    if args.random is not None:
        if args.seed is None:
            raise UsageError("--random requires --seed")
        rng = random.Random(args.seed)
        while len(vectors) < args.random:
            v = induced.random_vector(module, rng, args.max_weight)
            if not v.is_zero():
                vectors.append(v)
    elif args.vector is not None:
        vectors.append(parse_vector(_read_doc(args.vector), module))
    else:
        raise UsageError("probe needs a vector document or --random N --seed S")
    fuel = _fuel()
    probes = []
    all_ok = True
    for v in vectors:
        if v.is_zero():
            raise SemanticError("cannot probe the zero vector")
        trace = induced.simplicity_probe(v, fuel=fuel)
        all_ok = all_ok and trace.ok
        probes.append(
            {
                "vector": render_vector(v),
                "ok": trace.ok,
                "failure": trace.failure,
                "steps": [
                    {
                        "apply": f"{fam}{idx}",
                        "degree": render_monomial(
                            PBWMonomial(d[0], d[1], d[2], module.alpha, module.beta)
                        ),
                    }
                    for (fam, idx), d in trace.steps
                ],
                "terminal": None
                if trace.terminal is None
                else {
                    _coord_key_to_str(k): render_scalar(c) for k, c in sorted(
                        trace.terminal.items(), key=lambda kv: _coord_key_to_str(kv[0])
                    )
                },
            }
        )
    _emit({"validation": {"ok": True, "z": rep.z, "failures": []}, "probes": probes})
    return 0 if all_ok else 1


# ---------------------------------------------------------------------------
# Entry point
# ---------------------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="shv", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    b = sub.add_parser("bracket", help="bracket of two elements")
    b.add_argument("--algebra", choices=(RAMOND, NEVEU_SCHWARZ), default=RAMOND)
    b.add_argument("x")
    b.add_argument("y")
    b.set_defaults(func=cmd_bracket)

    c = sub.add_parser("conformal", help="conformal-algebra operations")
    csub = c.add_subparsers(dest="subcommand", required=True)
    cc = csub.add_parser("check")
    cc.add_argument("--algebra", choices=("s", "v"), default="s")
    cc.add_argument("--ansatz", help="extension ansatz document")
    cc.set_defaults(func=cmd_conformal_check)
    cl = csub.add_parser("classify")
    cl.add_argument("--degree", type=int, required=True)
    cl.add_argument("--c-nonzero", action="store_true", dest="c_nonzero")
    cl.set_defaults(func=cmd_conformal_classify)
    cp = csub.add_parser("products")
    cp.add_argument("--algebra", choices=("s", "v"), default="s")
    cp.add_argument("--ansatz")
    cp.set_defaults(func=cmd_conformal_products)

    lo = sub.add_parser("lie-of", help="compare Lie(s) with the defining relations")
    lo.add_argument("--range", type=int, default=8)
    lo.set_defaults(func=cmd_lie_of)

    ns = sub.add_parser("ns-check", help="verify the Neveu-Schwarz embedding")
    ns.add_argument("--range", type=int, default=8)
    ns.set_defaults(func=cmd_ns_check)

    q = sub.add_parser("quotient", help="finite quotient algebra")
    q.add_argument("--alpha", type=int, required=True)
    q.add_argument("--beta", type=int, required=True)
    q.add_argument("--z", type=int, required=True)
    q.set_defaults(func=cmd_quotient)

    nf = sub.add_parser("normal-form", help="straighten a word applied to 1⊗v")
    nf.add_argument("--module", required=True)
    nf.add_argument("--strategy", choices=("leftmost", "rightmost"), default="leftmost")
    nf.add_argument("word")
    nf.set_defaults(func=cmd_normal_form)

    a = sub.add_parser("act", help="act by one generator on an induced vector")
    a.add_argument("--module", required=True)
    a.add_argument("--generator", required=True, help="e.g. L-1 or I2")
    a.add_argument("vector")
    a.set_defaults(func=cmd_act)

    vm = sub.add_parser("validate-module", help="check the simplicity conditions")
    vm.add_argument("--module", required=True)
    vm.add_argument("--sample-bound", type=int, default=6)
    vm.set_defaults(func=cmd_validate_module)

    pr = sub.add_parser("probe", help="run the degree-lowering probe")
    pr.add_argument("--module", required=True)
    pr.add_argument("--sample-bound", type=int, default=6)
    pr.add_argument("vector", nargs="?")
    pr.add_argument("--random", type=int)
    pr.add_argument("--max-weight", type=int, default=6)
    pr.add_argument("--seed", type=int)
    pr.set_defaults(func=cmd_probe)

    return p


def main(argv: Optional[List[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return args.func(args)
    except UsageError as e:
        print(f"shv: {e}", file=sys.stderr)
        return 2
    except SemanticError as e:
        print(f"shv: {e}", file=sys.stderr)
        return 1
    except TagMismatchError as e:
        print(f"shv: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
