"""
CLI commands for sgdigit.

Data goes to stdout, either as plain text or as JSON (``--format json``);
errors go to stderr. Exit codes: 0 success or affirmative verdict, 1
negative verdict or unrepresentable input, 2 usage error, 3 overflow or
exhausted resource. Negative positional integers must follow ``--``, as in
``sgdigit repr --base -2 -- -1``.
"""
import json
import sys
from dataclasses import dataclass
from enum import Enum
from typing import Any, List, NoReturn, Optional

import typer
import yaml
from rich.console import Console
from rich.table import Table

from sgdigit.core.digital import (
    complement, smallest_digital_containing, theta, theta_contains, verify_closure,
)
from sgdigit.core.digits import Base, DigitString, delta_band, delta_count, length, to_digits
from sgdigit.core.errors import NotMember, NotRepresentable, Overflow
from sgdigit.core.ldsg import LDClass, enumerate_by_genus, ld_closure, ld_violation
from sgdigit.core.monoid import Submonoid
from sgdigit.oracle.reference import brute_delta, brute_length
from sgdigit.oracle.sweep import sweep, sweep_offsets
from sgdigit.utils.config import load_settings, set_settings
from sgdigit.utils.logging import configure_logging
from sgdigit.utils.validators import parse_generator_list, parse_int_list

app = typer.Typer(
    name="sgdigit",
    help="Digit lengths in positive and negative bases, numerical monoids and b-digital semigroups",
    add_completion=False
)

console = Console(stderr=True)
out = Console()


class OutputFormat(str, Enum):
    text = "text"
    json = "json"


class ClassName(str, Enum):
    L = "l"
    LMINUS = "lminus"


@dataclass
class CliConfig:
    """Options shared by the subcommands, after validation."""
    base: Optional[Base] = None
    ld_class: Optional[LDClass] = None
    bound: Optional[int] = None
    format: OutputFormat = OutputFormat.text

    @property
    def json(self) -> bool:
        return self.format is OutputFormat.json


def _make_config(
    base: Optional[int] = None,
    ld_class: Optional[ClassName] = None,
    bound: Optional[int] = None,
    fmt: OutputFormat = OutputFormat.text,
    need_class: bool = False,
) -> CliConfig:
    """Validate the shared options; the class defaults from the sign of the base."""
    cfg = CliConfig(base=Base(base) if base is not None else None, bound=bound, format=fmt)
    if ld_class is not None:
        cfg.ld_class = LDClass.parse(ld_class.value)
    elif cfg.base is not None:
        cfg.ld_class = LDClass.for_base(cfg.base)
    if need_class and cfg.ld_class is None:
        raise ValueError("Give --class or --base to choose between l and lminus")
    if bound is not None and bound < 0:
        raise ValueError(f"--bound must be nonnegative, got {bound}")
    return cfg


def _fail(error: Exception) -> NoReturn:
    """Report an error on stderr and exit with its code."""
    if isinstance(error, (NotRepresentable, NotMember)):
        code = 1
    elif isinstance(error, ValueError):
        code = 2
    else:
        code = 3
    console.print(f"[bold red]Error:[/bold red] {str(error)}")
    sys.exit(code)


def _emit_json(payload: Any) -> None:
    typer.echo(json.dumps(payload))


def _join(values: List[int], sep: str = ", ") -> str:
    return sep.join(str(v) for v in values) if values else "none"


def _monoid_lines(s: Submonoid) -> List[str]:
    lines = [f"Minimal system of generators: {_join(list(s.gens))}"]
    if s.is_numerical:
        lines.append(f"Frobenius number: {s.frobenius}")
        lines.append(f"Gaps: {_join(s.gaps())}")
        lines.append(f"Members: {s.render_members()}")
    else:
        lines.append(f"Not numerical (gcd {s.gcd})")
    return lines


@app.callback()
def main_callback(
    config: Optional[str] = typer.Option(None, "--config", help="Settings file (YAML or JSON)")
):
    """Digit lengths, numerical monoids and b-digital semigroups."""
    try:
        settings = load_settings(config)
    except (OSError, ValueError, yaml.YAMLError) as e:
        console.print(f"[bold red]Error:[/bold red] Could not load settings: {str(e)}")
        sys.exit(2)
    set_settings(settings)
    configure_logging(settings.log_level, settings.log_file)


@app.command("repr")
def repr_command(
    z: int = typer.Argument(..., help="The integer to expand (put negative values after --)"),
    base: int = typer.Option(..., "--base", "-b", help="The base b, |b| >= 2"),
    fmt: OutputFormat = typer.Option(OutputFormat.text, "--format", help="Output format"),
):
    """Print the base-b digit string of an integer."""
    try:
        cfg = _make_config(base=base, fmt=fmt)
        digits = to_digits(cfg.base, z)
    except Exception as e:
        _fail(e)

    if cfg.json:
        _emit_json({
            "base": cfg.base.b,
            "value": z,
            "digits": list(digits.digits),
            "length": digits.length,
            "text": digits.render(),
        })
    else:
        typer.echo(digits.render())


@app.command("parse")
def parse_command(
    text: str = typer.Argument(..., help="A digit string such as 111_-2"),
    fmt: OutputFormat = typer.Option(OutputFormat.text, "--format", help="Output format"),
):
    """Evaluate a digit string."""
    try:
        digits = DigitString.parse(text)
        value = digits.value
    except Exception as e:
        _fail(e)

    if fmt is OutputFormat.json:
        _emit_json({"base": digits.base.b, "value": value, "length": digits.length})
    else:
        typer.echo(str(value))


@app.command("closure")
def closure_command(
    values: List[int] = typer.Argument(..., help="Integers the result must contain"),
    ld_class: Optional[ClassName] = typer.Option(None, "--class", "-c", help="l or lminus"),
    base: Optional[int] = typer.Option(None, "--base", "-b", help="Derive the class from the sign of the base"),
    bound: Optional[int] = typer.Option(None, "--bound", "-k", help="Iteration budget (defaults to closure_bound)"),
    fmt: OutputFormat = typer.Option(OutputFormat.text, "--format", help="Output format"),
):
    """Compute the smallest monoid of the class containing the given integers."""
    try:
        cfg = _make_config(base=base, ld_class=ld_class, bound=bound, fmt=fmt, need_class=True)
        s, trace = ld_closure(values, cfg.ld_class, cfg.bound)
    except Overflow as e:
        if cfg.json:
            _emit_json({"result": "overflow", "trace": e.trace.to_dict() if e.trace else None})
        else:
            typer.echo("overflow")
        sys.exit(3)
    except Exception as e:
        _fail(e)

    if cfg.json:
        payload = s.to_dict()
        payload["trace"] = trace.to_dict()
        _emit_json(payload)
    else:
        for line in _monoid_lines(s):
            typer.echo(line)


@app.command("check")
def check_command(
    gens: str = typer.Option(..., "--gens", "-g", help="Generators, e.g. 4,6,7,9"),
    ld_class: Optional[ClassName] = typer.Option(None, "--class", "-c", help="l or lminus"),
    base: Optional[int] = typer.Option(None, "--base", "-b", help="Derive the class from the sign of the base"),
    fmt: OutputFormat = typer.Option(OutputFormat.text, "--format", help="Output format"),
):
    """Decide whether the monoid spanned by the generators is in the class."""
    try:
        cfg = _make_config(base=base, ld_class=ld_class, fmt=fmt, need_class=True)
        s = Submonoid.from_generators(parse_generator_list(gens))
        violation = ld_violation(s, cfg.ld_class)
    except Exception as e:
        _fail(e)

    holds = violation is None
    if cfg.json:
        payload = {"class": str(cfg.ld_class), "generators": list(s.gens), "holds": holds, "violation": None}
        if violation is not None:
            x, y, e = violation
            payload["violation"] = {"x": x, "y": y, "e": e, "sum": x + y + e}
        _emit_json(payload)
    elif holds:
        typer.echo("yes")
    else:
        x, y, e = violation
        typer.echo(f"no ({x}+{y}{e:+d}={x + y + e} not in S)")
    if not holds:
        sys.exit(1)


@app.command("delta")
def delta_command(
    base: int = typer.Option(..., "--base", "-b", help="The base b, |b| >= 2"),
    n: int = typer.Option(..., "--n", help="The digit length"),
    count: bool = typer.Option(False, "--count", help="Print only the number of elements"),
    fmt: OutputFormat = typer.Option(OutputFormat.text, "--format", help="Output format"),
):
    """Print the band of integers with exactly n digits."""
    try:
        cfg = _make_config(base=base, fmt=fmt)
        band = delta_band(cfg.base, n)
        size = delta_count(cfg.base, n)
    except Exception as e:
        _fail(e)

    if cfg.json:
        _emit_json({"base": cfg.base.b, "n": n, "lo": band.lo, "hi": band.hi, "count": size})
    elif count:
        typer.echo(str(size))
    else:
        typer.echo(f"[{band.lo}, {band.hi}]")


@app.command("theta")
def theta_command(
    base: int = typer.Option(..., "--base", "-b", help="The base b, |b| >= 2"),
    gens: Optional[str] = typer.Option(None, "--gens", "-g", help="Generators of the length monoid"),
    values: Optional[str] = typer.Option(None, "--values", help="Integers to generate from, e.g. -1,3"),
    member: Optional[int] = typer.Option(None, "--member", help="Test one integer for membership"),
    show_complement: bool = typer.Option(False, "--complement", help="Print the finite complement"),
    verify: Optional[int] = typer.Option(None, "--verify", help="Check closure under products up to this magnitude"),
    bound: Optional[int] = typer.Option(None, "--bound", "-k", help="Iteration budget for --values"),
    fmt: OutputFormat = typer.Option(OutputFormat.text, "--format", help="Output format"),
):
    """Work with the b-digital semigroup of all integers whose length lies in S."""
    try:
        cfg = _make_config(base=base, bound=bound, fmt=fmt)
        if (gens is None) == (values is None):
            raise ValueError("Give exactly one of --gens and --values")
        if gens is not None:
            d = theta(cfg.base, Submonoid.from_generators(parse_generator_list(gens)))
        else:
            d = smallest_digital_containing(cfg.base, parse_int_list(values), cfg.bound)

        if member is not None:
            verdict = theta_contains(d, member)
            if cfg.json:
                _emit_json({"base": cfg.base.b, "z": member, "member": verdict})
            else:
                typer.echo("yes" if verdict else "no")
            if not verdict:
                sys.exit(1)
            return

        if show_complement:
            missing = complement(d)
            if cfg.json:
                _emit_json({"base": cfg.base.b, "complement": missing})
            else:
                typer.echo(" ".join(str(z) for z in missing))
            return

        if verify is not None:
            result = verify_closure(d, verify)
            if cfg.json:
                _emit_json(result.to_dict())
            elif result:
                typer.echo("yes")
            else:
                x, y, p = result.counterexample
                typer.echo(f"no ({x}*{y}={p} not in D)")
            if not result:
                sys.exit(1)
            return
    except Overflow:
        typer.echo("overflow")
        sys.exit(3)
    except Exception as e:
        _fail(e)

    if cfg.json:
        _emit_json(d.to_dict())
    else:
        for line in _monoid_lines(d.lengths):
            typer.echo(line)


@app.command("monoid")
def monoid_command(
    gens: str = typer.Option(..., "--gens", "-g", help="Generators, e.g. 3,5,7"),
    p_of: Optional[int] = typer.Option(None, "--p-of", help="Print the largest factorization length of a member"),
    contains: Optional[int] = typer.Option(None, "--contains", help="Test one integer for membership"),
    intersect: Optional[str] = typer.Option(None, "--intersect", help="Intersect with the monoid of these generators"),
    adjoin: bool = typer.Option(False, "--adjoin-frobenius", help="Add the Frobenius number"),
    fmt: OutputFormat = typer.Option(OutputFormat.text, "--format", help="Output format"),
):
    """Report on a submonoid of the nonnegative integers."""
    try:
        s = Submonoid.from_generators(parse_generator_list(gens))
        if p_of is not None:
            p = s.max_fact_length(p_of)
            if fmt is OutputFormat.json:
                _emit_json({"generators": list(s.gens), "s": p_of, "P": p})
            else:
                typer.echo(str(p))
            return
        if contains is not None:
            verdict = s.contains(contains)
            if fmt is OutputFormat.json:
                _emit_json({"generators": list(s.gens), "x": contains, "member": verdict})
            else:
                typer.echo("yes" if verdict else "no")
            if not verdict:
                sys.exit(1)
            return
        if intersect is not None:
            s = s.intersect(Submonoid.from_generators(parse_generator_list(intersect)))
        if adjoin:
            s = s.adjoin_frobenius()
    except Exception as e:
        _fail(e)

    if fmt is OutputFormat.json:
        _emit_json(s.to_dict())
    else:
        for line in _monoid_lines(s):
            typer.echo(line)
        if s.is_numerical:
            typer.echo(f"Genus: {s.genus}")


@app.command("tree")
def tree_command(
    max_genus: int = typer.Option(..., "--max-genus", "-g", help="Deepest genus to list"),
    ld_class: Optional[ClassName] = typer.Option(None, "--class", "-c", help="l or lminus"),
    base: Optional[int] = typer.Option(None, "--base", "-b", help="Derive the class from the sign of the base"),
    fmt: OutputFormat = typer.Option(OutputFormat.text, "--format", help="Output format"),
):
    """List the monoids of the class by genus, breadth first."""
    try:
        cfg = _make_config(base=base, ld_class=ld_class, fmt=fmt, need_class=True)
        found = enumerate_by_genus(cfg.ld_class, max_genus)
    except Exception as e:
        _fail(e)

    if cfg.json:
        _emit_json([s.to_dict() for s in found])
        return
    for s in found:
        typer.echo(f"gens={','.join(str(g) for g in s.gens)};F={s.frobenius};genus={s.genus}")


@app.command("sweep")
def sweep_command(
    base: int = typer.Option(..., "--base", "-b", help="The base b, |b| >= 2"),
    max_abs: int = typer.Option(1000, "--max-abs", help="Largest |z| to check"),
    fmt: OutputFormat = typer.Option(OutputFormat.json, "--format", help="Output format"),
):
    """Cross-check lengths and bands against the references, then product length offsets band by band."""
    try:
        cfg = _make_config(base=base, fmt=fmt)
        b = cfg.base
        if max_abs < 1:
            raise ValueError(f"--max-abs must be positive, got {max_abs}")
        low = -max_abs if b.negative else 1
        lengths = sweep(((b.b, z) for z in range(low, max_abs + 1) if z != 0), brute_length, length, name="length")

        def band_window(base_value: int, n: int, scan_bound: int) -> set:
            window = delta_band(base_value, n).clip(scan_bound)
            return set(range(window[0], window[1] + 1)) if window else set()

        top = max(brute_length(b.b, z) for z in (max_abs, -max_abs) if b.in_z(z))
        bands = sweep(((b.b, n, max_abs) for n in range(1, top + 1)), brute_delta, band_window, name="delta")
        offsets = sweep_offsets(b, max_abs)
    except Exception as e:
        _fail(e)

    reports = {"length": lengths, "delta": bands, "offset": offsets}
    if cfg.json:
        _emit_json({name: report.to_dict() for name, report in reports.items()})
    else:
        table = Table(title=f"Reference sweep, base {b.b}, |z| <= {max_abs}")
        table.add_column("Check", style="cyan")
        table.add_column("Inputs", style="green")
        table.add_column("Violations", style="magenta")
        table.add_column("ms", style="yellow")
        for name, report in reports.items():
            table.add_row(name, str(report.checked), str(len(report.violations)), f"{report.elapsed * 1000:.1f}")
        out.print(table)
    if not all(report.ok for report in reports.values()):
        sys.exit(1)
