"""Command line front end.

Exit codes: 0 success, 1 mathematical rejection or failed identity, 2 bad input.
"""

from __future__ import annotations

import json
import sys

import click

from .exactfield import FieldError, FieldSpec, Scalar
from .families import (
    BadParameters,
    FieldUnsupported,
    UnclassifiableInconsistency,
    classify,
    construct,
    normalize,
    parse_descriptor,
    rho_sequence,
)
from .linalg import Matrix
from .lrpair import weyl_kind
from .lrtriple import (
    LRTriple,
    check_lr_triple,
    cycle_checks,
    data_suite,
    recognize_lr_triple,
    rotator_suite,
)
from .relations import casimir_check, module_checks, verify_relations

SUITES = ("data", "relations", "rotator", "cycle", "module", "all")


class InputError(click.ClickException):
    exit_code = 2


class Rejected(click.ClickException):
    exit_code = 1

    def show(self, file=None):
        click.echo(self.format_message(), err=True)


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _emit(text: str, out):
    if out is None or out == "-":
        click.echo(text, nl=False)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def load_matrices(path: str) -> tuple:
    """(A, B, C, raw document) from a JSON file; InputError when malformed."""
    try:
        if path == "-":
            doc = json.load(sys.stdin)
        else:
            with open(path, encoding="utf-8") as fh:
                doc = json.load(fh)
        field = FieldSpec.from_json(doc.get("field", {"kind": "q"}))
        mats = [Matrix.from_json(doc[k], field) for k in "ABC"]
    except (OSError, json.JSONDecodeError, KeyError, TypeError, ValueError, FieldError) as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    if len({m.n for m in mats}) != 1:
        raise InputError("A, B, C must have the same size")
    return (*mats, doc)


def load_triple(path: str) -> tuple:
    A, B, C, doc = load_matrices(path)
    reason = check_lr_triple(A, B, C)
    if reason is not None:
        raise Rejected(f"not an LR triple: {reason}")
    return recognize_lr_triple(A, B, C), doc


def derived_mismatches(t: LRTriple, doc: dict) -> list:
    """Keys of an embedded "derived" block that disagree with recomputation."""
    given = doc.get("derived")
    if not isinstance(given, dict):
        return []
    fresh = t.to_json()["derived"]
    return [f"derived.{k}" for k in sorted(given) if k in fresh and given[k] != fresh[k]]


def describe(t: LRTriple) -> str:
    if t.d == 0:
        return "LR triple, trivial"
    kind = "bipartite" if t.is_bipartite else "nonbipartite"
    norm = "normalized" if t.is_normalized else "not normalized"
    return f"LR triple, d={t.d}, {kind}, {norm}"


@click.group()
def main():
    """Construct, recognize, analyze, classify and verify LR triples."""


@main.command("construct")
@click.argument("descriptor")
@click.option("--field", "field_text", default=None, help='"q" or "gfp:<p>"; chosen automatically if omitted.')
@click.option("--out", "-o", default=None, help="Output file (stdout by default).")
def cmd_construct(descriptor, field_text, out):
    """Build a family member from DESCRIPTOR, e.g. nbg:d=2,q=2."""
    try:
        field = FieldSpec.parse(field_text) if field_text else None
        desc = parse_descriptor(descriptor, field)
        t = construct(desc)
    except (BadParameters, FieldUnsupported, FieldError, ZeroDivisionError) as exc:
        raise InputError(f"{type(exc).__name__}: {exc}") from exc
    _emit(dumps(t.to_json()), out)


@main.command("recognize")
@click.argument("path")
def cmd_recognize(path):
    """Decide whether the matrices in PATH form an LR triple."""
    t, doc = load_triple(path)
    click.echo(describe(t))
    click.echo("flags: " + ", ".join(f"{k}={str(v).lower()}" for k, v in sorted(t.flags().items())))
    if t.d:
        for name, seq in zip(("phi", "phi1", "phi2"), t.parameter_array):
            click.echo(f"{name}: " + " ".join(str(x) for x in seq))
    bad = derived_mismatches(t, doc)
    if bad:
        raise Rejected("embedded derived data disagrees: " + ", ".join(bad))


@main.command("analyze")
@click.argument("path")
def cmd_analyze(path):
    """Print the full derived data of the triple in PATH as JSON."""
    t, _ = load_triple(path)
    doc = t.to_json()
    extra = doc["derived"]
    extra["centralizer_dim"] = len(t.idempotent_centralizer_basis())
    extra["double_lowering_dim"] = {w: len(t.double_lowering_basis(w)) for w in "ABC"}
    kind, qs = weyl_kind(t.pairs[0])
    extra["pair_type"] = kind
    if qs:
        extra["pair_q"] = [q.to_json() for q in qs]
    if t.d >= 1 and t.is_equitable:
        rho = rho_sequence(t)
        extra["rho"] = [[x.to_json() for x in s] for s in rho] if t.is_bipartite else [x.to_json() for x in rho]
    _emit(dumps(doc), None)


def _classified(t: LRTriple):
    if t.is_normalized:
        return t, None, classify(t)
    n, report = normalize(t)
    return n, report, classify(n)


@main.command("classify")
@click.argument("path")
def cmd_classify(path):
    """Normalize if needed and print the family descriptor."""
    t, _ = load_triple(path)
    try:
        n, report, desc = _classified(t)
    except UnclassifiableInconsistency as exc:
        raise Rejected(str(exc)) from exc
    if report is not None:
        click.echo("scaling: " + ", ".join(f"{k}={v}" for k, v in sorted(report.items())))
    click.echo(str(desc))


def run_suites(t: LRTriple, suite: str, q=None, doc=None) -> tuple:
    """({id: holds}, notes) for the selected suite."""
    results, notes = {}, []
    want = set(SUITES[:-1]) if suite == "all" else {suite}
    if "data" in want:
        results.update(data_suite(t))
        if doc is not None:
            for key in derived_mismatches(t, doc):
                results[key] = False
    if "rotator" in want:
        results.update(rotator_suite(t))
    if "cycle" in want:
        res = cycle_checks(t)
        results.update(res)
        if res["twelve_cycle"]:
            notes.append(f"twelve-cycle scalar: {t.twelve_cycle_check()}")
    if want & {"relations", "module"}:
        kind, qs = weyl_kind(t.pairs[0])
        if kind == "Weyl" and "relations" in want:
            desc = parse_descriptor(f"weyl:d={t.d}", t.field)
            results.update(verify_relations(t, desc).checked)
        elif kind == "QWeyl" and "module" in want:
            try:
                notes.append(f"casimir scalar: {casimir_check(t, qs[0])}")
                results["qweyl.casimir"] = True
            except AssertionError:
                results["qweyl.casimir"] = False
        n, _, desc = _classified(t)
        notes.append(f"family: {desc}")
        if "relations" in want:
            results.update(verify_relations(n, desc).checked)
        if "module" in want:
            mod = module_checks(n, desc, q)
            if not mod:
                notes.append("module: no module structure applies")
            results.update(mod)
    return results, notes


@main.command("verify")
@click.argument("path")
@click.option("--suite", type=click.Choice(SUITES), default="all", show_default=True)
@click.option("--q", "q_text", default=None, help="q for the module suite when it is not determined.")
def cmd_verify(path, suite, q_text):
    """Run identity suites on the triple in PATH; exit 1 on any failure."""
    t, doc = load_triple(path)
    q = Scalar(q_text, t.field) if q_text else None
    try:
        results, notes = run_suites(t, suite, q, doc)
    except UnclassifiableInconsistency as exc:
        raise Rejected(str(exc)) from exc
    for line in notes:
        click.echo(line)
    failed = [k for k, ok in results.items() if not ok]
    click.echo(f"{len(results) - len(failed)}/{len(results)} identities hold")
    if failed:
        raise Rejected("failing identities: " + ", ".join(failed))


@main.command("export-data")
@click.argument("path")
@click.option("--out", "-o", default=None, help="Output file (stdout by default).")
def cmd_export(path, out):
    """Recompute and write the canonical JSON for the triple in PATH."""
    t, _ = load_triple(path)
    _emit(dumps(t.to_json()), out)


if __name__ == "__main__":  # pragma: no cover
    main()
