#!/usr/bin/env python3
"""Command-line interface for orbitkit.

Commands:
    dim      orbit dimension and bound for one orthogonal subset
    table    recompute the G2 or F4 orbit table
    verify   sweep orthogonal subsets of a root system through the bound check
    scan     search a root system for non-admissible root configurations
"""

import argparse
import csv
import json
import logging
import sys
from pathlib import Path
from typing import Optional, Sequence

from orbitkit.chevalley import dump_constants_csv, structure_constants
from orbitkit.config import Settings, load_settings
from orbitkit.constants import EXIT_FIELD, EXIT_OK, EXIT_PARSE, EXIT_PRECONDITION, EXIT_VERIFY_FAILED
from orbitkit.enumeration import reduce_singular, scan_non_admissible, verify_sweep
from orbitkit.exceptions import (
    DomainError,
    FieldTooSmall,
    OrbitKitException,
    RootParseError,
    UnsupportedRank,
)
from orbitkit.form import PrimeField, default_prime, orbit_dimension
from orbitkit.models import OrthoSubset, RootSystemId
from orbitkit.rootexpr import parse_roots
from orbitkit.rootsys import build_root_system
from orbitkit.tables import evaluate_table
from orbitkit.weyl import involution_stats

_LOGGER = logging.getLogger("orbitkit.cli")


def _int_list(text: Optional[str]) -> Optional[list[int]]:
    if not text:
        return None
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise RootParseError(f"expected a comma-separated list of integers, got {text!r}")


class OrbitKitCLI:
    """One method per command; each returns an exit code."""

    def __init__(self, settings: Settings, out=None):
        self.settings = settings
        self.out = out or sys.stdout

    def emit(self, text: str = ""):
        print(text, file=self.out)

    def cmd_dim(self, args) -> int:
        """Orbit dimension, bound, l and s for one subset."""
        rs = build_root_system(RootSystemId.parse(args.type))
        tbl = structure_constants(rs)
        if args.dump_constants:
            with open(args.dump_constants, "w", newline="") as f:
                count = dump_constants_csv(tbl, f)
            _LOGGER.info(f"Wrote {count} structure constants to {args.dump_constants}")

        roots = parse_roots(rs, args.roots)
        xi = _int_list(args.xi) or [1] * len(roots)
        if len(xi) != len(roots):
            raise DomainError(f"{len(xi)} scalars given for {len(roots)} roots")
        p = args.prime or default_prime(rs)
        PrimeField(p).require_coxeter(rs)

        ortho = OrthoSubset(rs, tuple(roots), tuple(xi), p)
        reduced = reduce_singular(ortho)
        dim = orbit_dimension(reduced, tbl)
        stats = involution_stats(rs, reduced.roots)
        reduced_applied = len(reduced) != len(ortho)

        if args.json:
            self.emit(json.dumps({
                "system": rs.id.label,
                "D": list(ortho.indices),
                "dim": dim,
                "bound": stats.bound,
                "l": stats.l,
                "s": stats.s,
                "flags": {
                    "bound_ok": dim <= stats.bound,
                    "even_ok": dim % 2 == 0,
                    "reduced_applied": reduced_applied,
                },
                "prime": [p],
                "seed": self.settings.seed,
            }, sort_keys=True))
        else:
            self.emit(f"{rs.id} D={{{', '.join(str(r) for r in roots)}}} p={p}")
            self.emit(f"  dim = {dim}")
            self.emit(f"  bound = l - s = {stats.l} - {stats.s} = {stats.bound}")
            if reduced_applied:
                self.emit(f"  note: reduced to D={{{', '.join(str(r) for r in reduced.roots)}}}")
        return EXIT_OK

    def cmd_table(self, args) -> int:
        """Print a table with recomputed columns; nonzero exit on any mismatch."""
        rows = evaluate_table(args.name, args.prime)
        if args.format == "json":
            self.emit(json.dumps([row.to_dict() for row in rows], indent=2))
        elif args.format == "csv":
            writer = csv.writer(self.out)
            writer.writerow(["row", "D", "M", "|M|", "F", "dim_computed"])
            for row in rows:
                writer.writerow(
                    [row.row_no, "; ".join(row.D), "; ".join(row.M), row.m_size, row.F, row.dim_computed]
                )
        else:
            for row in rows:
                status = "MISMATCH" if row.mismatch else "ok"
                bound = row.bound_computed if row.orthogonal else "n/a"
                self.emit(
                    f"{row.row_no:>2}) D={{{', '.join(row.D)}}} |M|={row.m_size} F={row.F} "
                    f"dim={row.dim_computed} bound={bound} {status}"
                )
                if not row.orthogonal:
                    self.emit("    note: D is not orthogonal as printed; bound not recomputed")
        failed = [row.row_no for row in rows if row.mismatch]
        if failed:
            print(f"error: rows {failed} disagree with the printed table", file=sys.stderr)
            return EXIT_VERIFY_FAILED
        return EXIT_OK

    def cmd_verify(self, args) -> int:
        """Sweep orthogonal subsets and check dim <= bound, evenness and independence."""
        rs = build_root_system(RootSystemId.parse(args.type))
        seed = self.settings.seed if args.seed is None else args.seed
        reports = verify_sweep(
            rs,
            max_size=args.max_size,
            primes=_int_list(args.primes),
            xi_samples=args.xi_samples or self.settings.xi_samples,
            seed=seed,
            sample_budget=args.sample_budget or self.settings.sample_budget,
            workers=args.workers or self.settings.workers,
        )
        failed = sum(1 for r in reports if not r.passed)
        if args.json:
            self.emit(json.dumps([r.to_dict() for r in reports], sort_keys=True))
            print(f"{len(reports)} subsets, {failed} failed", file=sys.stderr)
        else:
            for report in reports:
                self.emit(str(report))
            self.emit(f"{len(reports)} subsets, {failed} failed")
        return EXIT_VERIFY_FAILED if failed else EXIT_OK

    def cmd_scan(self, args) -> int:
        """Report every non-admissible configuration found."""
        rs = build_root_system(RootSystemId.parse(args.type))
        hits = scan_non_admissible(rs)
        self.emit(f"{rs.id}: {len(hits)} non-admissible hits")
        for hit in hits:
            self.emit(f"  {hit}")
        if hits and args.expect_none:
            return EXIT_VERIFY_FAILED
        return EXIT_OK


def _exit_code(error: OrbitKitException) -> int:
    if isinstance(error, (RootParseError, UnsupportedRank)):
        return EXIT_PARSE
    if isinstance(error, FieldTooSmall):
        return EXIT_FIELD
    return EXIT_PRECONDITION


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="orbitkit", description=__doc__.splitlines()[0])
    parser.add_argument("--debug", action="store_true", help="verbose logging on stderr")
    parser.add_argument("--config", help="JSON settings file (default: $ORBITKIT_CONFIG or ./orbitkit.json)")
    sub = parser.add_subparsers(dest="command", required=True)

    dim = sub.add_parser("dim", help="orbit dimension for one orthogonal subset")
    dim.add_argument("--type", required=True, help="root system, e.g. B3")
    dim.add_argument("--roots", required=True, help='comma-separated roots, e.g. "e1,e2+e3"')
    dim.add_argument("--xi", help="comma-separated nonzero scalars (default all 1)")
    dim.add_argument("--prime", type=int, help="field characteristic (default: smallest prime >= h)")
    dim.add_argument("--json", action="store_true")
    dim.add_argument("--dump-constants", metavar="PATH", help="write the structure constants as CSV")

    table = sub.add_parser("table", help="recompute the G2 or F4 table")
    table.add_argument("name", choices=["g2", "f4"])
    table.add_argument("--format", choices=["text", "json", "csv"], default="text")
    table.add_argument("--prime", type=int)

    verify = sub.add_parser("verify", help="sweep orthogonal subsets")
    verify.add_argument("--type", required=True)
    verify.add_argument("--max-size", type=int, default=2)
    verify.add_argument("--primes", help="comma-separated primes (default: smallest prime >= h)")
    verify.add_argument("--xi-samples", type=int)
    verify.add_argument("--seed", type=int)
    verify.add_argument("--sample-budget", type=int)
    verify.add_argument("--workers", type=int)
    verify.add_argument("--json", action="store_true")

    scan = sub.add_parser("scan", help="search for non-admissible configurations")
    scan.add_argument("--type", required=True)
    scan.add_argument("--expect-none", action="store_true", help="exit 1 if anything is found")
    return parser


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    """Entry point for the CLI; returns the exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_PARSE if e.code else EXIT_OK

    settings = load_settings(Path(args.config) if args.config else None)
    logging.basicConfig(
        stream=sys.stderr,
        level=logging.DEBUG if args.debug or settings.debug_enabled else logging.INFO,
        format="%(levelname)s %(name)s: %(message)s",
    )
    cli = OrbitKitCLI(settings, out)
    handler = getattr(cli, f"cmd_{args.command}")
    try:
        return handler(args)
    except OrbitKitException as e:
        print(f"error: {e}", file=sys.stderr)
        return _exit_code(e)


if __name__ == "__main__":
    try:
        sys.exit(main())
    except KeyboardInterrupt:
        print("\n\nExiting...")
        sys.exit(130)
