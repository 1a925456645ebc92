"""Command-line front end: counting tables, completeness verdicts, decompositions.

Subcommands:
    counts    --n-max N [--format json|markdown]
    verify    --n N --rep1 KIND --rep2 KIND --basis product|coupled
              [--with-exchange] [--tol X] [--cluster-tol X] [--scalar-tol X]
              [--format ...] [--cache-dir P]
    decompose --n N --rep1 KIND --rep2 KIND [--format ...] [--cache-dir P]

Exit codes: 0 all checks pass, 2 invariant failure, 3 invalid configuration.
JSON output is canonical: sorted keys, floats at 12 significant digits, so
repeated runs are byte-identical.
"""

import argparse
import os
import sys
from dataclasses import dataclass

from .algebra import adjoint_rep, build_generators, conjugate_rep, defining_rep, structure_constants
from .cache import OperatorCache
from .completeness import (
    DEFAULT_CLUSTER_TOL,
    DEFAULT_COMMUTE_TOL,
    DEFAULT_SCALAR_TOL,
    completeness_report,
)
from .decomp import isotypic_decomposition
from .labels import (
    count_coupled,
    count_difference,
    count_product,
    count_single_ir,
    enumerate_labels,
    materialize,
)
from .tensor import ProductSpace

__all__ = ["RunConfig", "ConfigError", "cmd_counts", "cmd_verify", "cmd_decompose", "canonical_json", "main"]

REP_KINDS = ("defining", "conjugate", "adjoint")

CACHE_ENV_VAR = "LIEBASIS_CACHE_DIR"

EXIT_OK = 0
EXIT_FAILURE = 2
EXIT_CONFIG = 3


class ConfigError(ValueError):
    pass


@dataclass
class RunConfig:
    n: int
    rep1: str = "defining"
    rep2: str = "defining"
    basis_kind: str = "coupled"
    with_exchange: bool = False
    commute_tol: float = DEFAULT_COMMUTE_TOL
    cluster_tol: float = DEFAULT_CLUSTER_TOL
    scalar_tol: float = DEFAULT_SCALAR_TOL
    fmt: str = "json"
    cache_dir: str | None = None

    def validate(self):
        if self.n < 2:
            raise ConfigError(f"n must be >= 2, got {self.n}")
        for kind in (self.rep1, self.rep2):
            if kind not in REP_KINDS:
                raise ConfigError(f"unknown representation kind {kind!r}")
        if self.basis_kind not in ("product", "coupled"):
            raise ConfigError(f"basis must be product or coupled, got {self.basis_kind!r}")
        if self.with_exchange and self.rep1 != self.rep2:
            raise ConfigError("--with-exchange requires identical factor representations")
        if self.fmt not in ("json", "markdown"):
            raise ConfigError(f"format must be json or markdown, got {self.fmt!r}")


# ---------------------------------------------------------------------------
# canonical serialization

def _canon_float(x):
    if x == 0.0:
        x = 0.0  # normalize -0.0
    return format(x, ".12g")


def canonical_json(obj) -> str:
    """Deterministic JSON: sorted keys, 12-significant-digit floats."""
    import json

    if isinstance(obj, dict):
        parts = []
        for key in sorted(obj):
            parts.append(json.dumps(str(key)) + ":" + canonical_json(obj[key]))
        return "{" + ",".join(parts) + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ",".join(canonical_json(v) for v in obj) + "]"
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if obj is None:
        return "null"
    if isinstance(obj, int):
        return repr(obj)
    if isinstance(obj, float):
        return _canon_float(obj)
    return json.dumps(obj)


def _round_eig(value):
    rounded = round(value, 9)
    return 0.0 if rounded == 0.0 else rounded


# ---------------------------------------------------------------------------
# commands

def cmd_counts(n_max: int):
    """Closed-form and enumeration-derived label counts for n = 2..n_max."""
    if n_max < 2:
        raise ConfigError(f"--n-max must be >= 2, got {n_max}")
    rows = []
    for n in range(2, n_max + 1):
        enum = {
            kind: len(enumerate_labels(n, kind))
            for kind in ("single_ir", "product", "coupled")
        }
        closed = {
            "single_ir": count_single_ir(n),
            "product": count_product(n),
            "coupled": count_coupled(n),
            "difference": count_difference(n),
        }
        rows.append(
            {
                "n": n,
                "single_ir": closed["single_ir"],
                "product": closed["product"],
                "coupled": closed["coupled"],
                "difference": closed["difference"],
                "enumerated": enum,
                "match": (
                    enum["single_ir"] == closed["single_ir"]
                    and enum["product"] == closed["product"]
                    and enum["coupled"] == closed["coupled"]
                    and closed["product"] - closed["coupled"] == closed["difference"]
                ),
            }
        )
    return {"meta": {"command": "counts", "n_max": n_max}, "rows": rows}


def _build_rep(kind, basis, sc):
    if kind == "defining":
        return defining_rep(basis)
    if kind == "conjugate":
        return conjugate_rep(basis)
    return adjoint_rep(basis, sc)


def _product_space(config):
    basis = build_generators(config.n)
    sc = structure_constants(basis)
    ps = ProductSpace(
        rep1=_build_rep(config.rep1, basis, sc),
        rep2=_build_rep(config.rep2, basis, sc),
    )
    return basis, ps


def _meta(config, command, ps, labels=None):
    meta = {
        "command": command,
        "n": config.n,
        "rep1": config.rep1,
        "rep2": config.rep2,
        "dim": ps.dim,
        "tolerances": {
            "commute": config.commute_tol,
            "cluster": config.cluster_tol,
            "scalar": config.scalar_tol,
        },
    }
    if command == "verify":
        meta["basis"] = config.basis_kind
        meta["with_exchange"] = config.with_exchange
        meta["labels"] = [str(lab) for lab in labels]
    return meta


def cmd_verify(config: RunConfig):
    """Materialize the configured set, analyze it, and report the verdict."""
    config.validate()
    basis, ps = _product_space(config)
    labels = enumerate_labels(config.n, config.basis_kind)
    cache = OperatorCache(config.cache_dir) if config.cache_dir else None
    opset = materialize(labels, ps, basis, cache=cache)
    extra = None
    if config.with_exchange:
        from .labels import OperatorLabel, materialize_label

        lab = OperatorLabel("exchange")
        mat = None
        if cache is not None:
            mat = cache.load(basis.n, (ps.rep1.kind, ps.rep2.kind), lab, ps.dim)
        if mat is None:
            mat = materialize_label(lab, ps, basis)
            if cache is not None:
                cache.save(basis.n, (ps.rep1.kind, ps.rep2.kind), lab, mat)
        extra = (lab, mat)
    report = completeness_report(
        opset,
        extra=extra,
        commute_tol=config.commute_tol,
        cluster_tol=config.cluster_tol,
        scalar_tol=config.scalar_tol,
    )
    analyzed = list(report.spectrum.labels)
    blocks = sorted(
        (
            {
                "dim": b.dim,
                "eigenvalues": [_round_eig(v) for v in b.eigenvalue_tuple],
            }
            for b in report.spectrum.blocks
        ),
        key=lambda rec: (rec["eigenvalues"], rec["dim"]),
    )
    failures = []
    if not report.commutation.passed:
        failures.append(
            f"commutation residual {report.commutation.max_residual:g} exceeds "
            f"tolerance {config.commute_tol:g}"
        )
    if report.counts["actual"] != report.counts["expected"]:
        failures.append(
            f"set has {report.counts['actual']} operators, closed form says "
            f"{report.counts['expected']}"
        )
    if report.spectrum.total_dim != ps.dim:
        failures.append(
            f"block dimensions sum to {report.spectrum.total_dim}, space has {ps.dim}"
        )
    doc = {
        "meta": _meta(config, "verify", ps, labels),
        "counts": report.counts,
        "commutation": {
            "max_residual": report.commutation.max_residual,
            "worst_pair": list(report.commutation.worst_pair or ()),
            "tol": report.commutation.tol,
            "pass": report.commutation.passed,
        },
        "rank": {
            "matrix_rank": report.rank,
            "scalar_operators": [
                lab for lab, flag in zip(analyzed, report.scalar_flags) if flag
            ],
        },
        "blocks": {
            "count": len(blocks),
            "max_dim": report.max_block_dim,
            "items": blocks,
        },
        "verdict": report.verdict,
    }
    if failures:
        doc["failures"] = failures
    return doc


def cmd_decompose(config: RunConfig):
    """Isotypic component table for the configured product space."""
    config.validate()
    basis, ps = _product_space(config)
    components = isotypic_decomposition(ps, basis, cluster_tol=config.cluster_tol)
    records = []
    for comp in components:
        rec = {
            "fingerprint": [_round_eig(v) for v in comp.fingerprint],
            "total_dim": comp.total_dim,
            "irrep_dim": comp.irrep_dim,
            "multiplicity": comp.multiplicity,
            "labels": list(comp.su3_labels) if comp.su3_labels else None,
            "identified": comp.su3_labels is not None,
        }
        records.append(rec)
    return {
        "meta": _meta(config, "decompose", ps),
        "components": records,
        "dimension_check": {
            "total": sum(c.total_dim for c in components),
            "space": ps.dim,
        },
    }


# ---------------------------------------------------------------------------
# rendering

def _md_table(headers, rows):
    out = ["| " + " | ".join(headers) + " |", "|" + "|".join("---" for _ in headers) + "|"]
    for row in rows:
        out.append("| " + " | ".join(str(v) for v in row) + " |")
    return "\n".join(out)


def render_markdown(doc) -> str:
    if "meta" not in doc:
        return "".join(f"FAIL: {item}\n" for item in doc.get("failures", []))
    command = doc["meta"]["command"]
    lines = []
    if command == "counts":
        lines.append(f"# Operator counts (n up to {doc['meta']['n_max']})")
        lines.append("")
        lines.append(
            _md_table(
                ["n", "single IR", "product", "coupled", "difference", "match"],
                [
                    (
                        r["n"],
                        r["single_ir"],
                        r["product"],
                        r["coupled"],
                        r["difference"],
                        "yes" if r["match"] else "NO",
                    )
                    for r in doc["rows"]
                ],
            )
        )
    elif command == "verify":
        meta = doc["meta"]
        lines.append(
            f"# Completeness of the {meta['basis']} set, su({meta['n']}) "
            f"{meta['rep1']} (x) {meta['rep2']}"
        )
        lines.append("")
        lines.append(f"- operators: {', '.join(meta['labels'])}")
        if meta["with_exchange"]:
            lines.append("- exchange operator appended")
        lines.append(
            f"- commutation: max residual {_canon_float(doc['commutation']['max_residual'])} "
            f"({'pass' if doc['commutation']['pass'] else 'FAIL'})"
        )
        lines.append(
            f"- matrix rank {doc['rank']['matrix_rank']}"
            + (
                f" (scalar on this space: {', '.join(doc['rank']['scalar_operators'])})"
                if doc["rank"]["scalar_operators"]
                else ""
            )
        )
        lines.append(
            f"- joint blocks: {doc['blocks']['count']}, largest {doc['blocks']['max_dim']}"
        )
        lines.append(f"- verdict: **{doc['verdict']}**")
        lines.append("")
        dims = {}
        for b in doc["blocks"]["items"]:
            dims[b["dim"]] = dims.get(b["dim"], 0) + 1
        lines.append(
            _md_table(
                ["block dim", "count"], [(d, dims[d]) for d in sorted(dims)]
            )
        )
        if doc.get("failures"):
            lines.append("")
            lines.append("Failures:")
            for item in doc["failures"]:
                lines.append(f"- {item}")
    else:
        meta = doc["meta"]
        lines.append(
            f"# Isotypic components of su({meta['n']}) {meta['rep1']} (x) {meta['rep2']}"
        )
        lines.append("")
        rows = []
        for comp in doc["components"]:
            fp = ", ".join(_canon_float(v) for v in comp["fingerprint"])
            lab = tuple(comp["labels"]) if comp["labels"] else "?"
            rows.append(
                (
                    f"({fp})",
                    comp["total_dim"],
                    comp["irrep_dim"] if comp["irrep_dim"] else "?",
                    comp["multiplicity"] if comp["multiplicity"] else "?",
                    lab,
                )
            )
        lines.append(
            _md_table(["fingerprint", "total dim", "irrep dim", "sigma", "(p, q)"], rows)
        )
        check = doc["dimension_check"]
        lines.append("")
        lines.append(f"Dimension check: {check['total']} of {check['space']}")
    return "\n".join(lines) + "\n"


def _emit(doc, fmt, stream):
    if fmt == "json":
        stream.write(canonical_json(doc) + "\n")
    else:
        stream.write(render_markdown(doc))


# ---------------------------------------------------------------------------
# argument parsing

def _add_common(parser):
    parser.add_argument("--format", dest="fmt", default="json", choices=["json", "markdown"])


def build_parser():
    parser = argparse.ArgumentParser(
        prog="liebasis",
        description="Commuting operator sets for SU(n) tensor products",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_counts = sub.add_parser("counts", help="label-count table, closed form vs enumeration")
    p_counts.add_argument("--n-max", type=int, required=True)
    _add_common(p_counts)

    p_verify = sub.add_parser("verify", help="commutation + completeness analysis of a set")
    p_verify.add_argument("--n", type=int, required=True)
    p_verify.add_argument("--rep1", default="defining", help="defining|conjugate|adjoint")
    p_verify.add_argument("--rep2", default="defining", help="defining|conjugate|adjoint")
    p_verify.add_argument("--basis", default="coupled", help="product|coupled")
    p_verify.add_argument("--with-exchange", action="store_true")
    p_verify.add_argument("--tol", type=float, default=DEFAULT_COMMUTE_TOL,
                          help="commutation tolerance")
    p_verify.add_argument("--cluster-tol", type=float, default=DEFAULT_CLUSTER_TOL)
    p_verify.add_argument("--scalar-tol", type=float, default=DEFAULT_SCALAR_TOL)
    p_verify.add_argument("--cache-dir", default=None)
    _add_common(p_verify)

    p_dec = sub.add_parser("decompose", help="isotypic decomposition of a product space")
    p_dec.add_argument("--n", type=int, required=True)
    p_dec.add_argument("--rep1", default="defining", help="defining|conjugate|adjoint")
    p_dec.add_argument("--rep2", default="defining", help="defining|conjugate|adjoint")
    p_dec.add_argument("--cluster-tol", type=float, default=DEFAULT_CLUSTER_TOL)
    p_dec.add_argument("--cache-dir", default=None)
    _add_common(p_dec)

    return parser


def _config_from(args):
    cache_dir = getattr(args, "cache_dir", None) or os.environ.get(CACHE_ENV_VAR) or None
    return RunConfig(
        n=args.n,
        rep1=args.rep1,
        rep2=args.rep2,
        basis_kind=getattr(args, "basis", "coupled"),
        with_exchange=getattr(args, "with_exchange", False),
        commute_tol=getattr(args, "tol", DEFAULT_COMMUTE_TOL),
        cluster_tol=getattr(args, "cluster_tol", DEFAULT_CLUSTER_TOL),
        scalar_tol=getattr(args, "scalar_tol", DEFAULT_SCALAR_TOL),
        fmt=args.fmt,
        cache_dir=cache_dir,
    )


def main(argv=None, stdout=None) -> int:
    stream = stdout or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        if args.command == "counts":
            doc = cmd_counts(args.n_max)
            _emit(doc, args.fmt, stream)
            return EXIT_OK if all(r["match"] for r in doc["rows"]) else EXIT_FAILURE
        config = _config_from(args)
        doc = cmd_verify(config) if args.command == "verify" else cmd_decompose(config)
        _emit(doc, config.fmt, stream)
        return EXIT_FAILURE if doc.get("failures") else EXIT_OK
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except ValueError as exc:
        _emit({"failures": [str(exc)]}, getattr(args, "fmt", "json"), stream)
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())
