import logging
import sys

import click

from fsr.core.config import log_level
from fsr.core.constants import EXIT_INPUT, EXIT_INTERNAL, EXIT_PRECONDITION, EXIT_VERIFY
from fsr.core.exceptions import FsrError, InputError, PreconditionError, VerificationError
from fsr.core.utils import add_approximations, dumps, to_csv
from fsr.invariants_manager import InvariantsManager

logger = logging.getLogger(__name__)

ERROR_CODES = (
    (InputError, EXIT_INPUT, "Input error"),
    (PreconditionError, EXIT_PRECONDITION, "Precondition violated"),
    (VerificationError, EXIT_VERIFY, "Verification failed"),
    (FsrError, EXIT_INTERNAL, "Internal error"),
)


def handle_command(operation, *args, as_csv: bool = False, approx: bool = False):
    """Run one command and print its payload.

    Exceptions from the engines are reported on stderr and mapped to the exit
    codes 2 (input), 3 (precondition or oracle refusal), 4 (verification) and 1.
    """
    try:
        payload = operation(*args)
    except FsrError as e:
        code, prefix = next((code, prefix) for kind, code, prefix in ERROR_CODES if isinstance(e, kind))
        click.echo(f"{prefix}: {e!s}", err=True)
        sys.exit(code)
    except Exception as e:
        logger.exception("Unexpected failure")
        click.echo(f"Internal error: {e!s}", err=True)
        sys.exit(EXIT_INTERNAL)

    if as_csv and "table" in payload:
        click.echo(to_csv(payload["table"]), nl=False)
        return
    if approx:
        payload = add_approximations(payload)
    click.echo(dumps(payload))


def ring_options(func):
    func = click.option("-p", "p", type=int, default=None, help="Override the ring's characteristic.")(func)
    return click.option("--ring", "ring_source", required=True, help="Ring file (JSON) or inline JSON object.")(func)


def level_option(func):
    return click.option("-e", "e", type=click.IntRange(min=0), required=True, help="Frobenius exponent, q = p^e.")(func)


def verify_option(func):
    return click.option("--verify", is_flag=True, help="Cross-check with the brute-force oracle.")(func)


def approx_option(func):
    return click.option("--approx", is_flag=True, help="Add decimal approximations (display only).")(func)


@click.group()
@click.option("--verbose", is_flag=True, help="Log pipeline steps to stderr.")
def cli(verbose):
    """Exact F-invariants of Stanley-Reisner rings."""
    logging.basicConfig(
        level=log_level(verbose), stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s", force=True
    )


@cli.command("min-primes")
@ring_options
@click.option("--ideal", "ideal", default=None, help="Squarefree ideal; defaults to the defining ideal.")
def min_primes_command(ring_source, p, ideal):
    """Minimal primes and dimension."""
    handle_command(lambda: InvariantsManager.from_source(ring_source, p).min_primes(ideal))


@cli.command("colon")
@ring_options
@click.option("--a", "a", required=True)
@click.option("--b", "b", required=True)
def colon_command(ring_source, p, a, b):
    """(A : B) in the polynomial ring."""
    handle_command(lambda: InvariantsManager.from_source(ring_source, p).colon(a, b))


@cli.command("intersect")
@ring_options
@click.option("--a", "a", required=True)
@click.option("--b", "b", required=True)
def intersect_command(ring_source, p, a, b):
    handle_command(lambda: InvariantsManager.from_source(ring_source, p).intersect(a, b))


@cli.command("frobenius")
@ring_options
@click.option("--a", "a", required=True)
@level_option
def frobenius_command(ring_source, p, a, e):
    """A^[q]."""
    handle_command(lambda: InvariantsManager.from_source(ring_source, p).frobenius(a, e))


@cli.command("nu")
@ring_options
@click.option("--a", "a", required=True)
@click.option("--j", "j", required=True)
@level_option
@verify_option
@approx_option
def nu_command(ring_source, p, a, j, e, verify, approx):
    """nu_a^J(p^e) = max{m : a^m not in J^[p^e]}."""
    handle_command(lambda: InvariantsManager.from_source(ring_source, p).nu(a, j, e, verify), approx=approx)


@cli.command("threshold")
@ring_options
@click.option("--a", "a", required=True)
@click.option("--j", "j", required=True)
@click.option("--table", "table", type=click.IntRange(min=0), default=None, help="Add nu rows for e = 0..TABLE.")
@click.option("--csv", "as_csv", is_flag=True)
@verify_option
@approx_option
def threshold_command(ring_source, p, a, j, table, as_csv, verify, approx):
    """F-threshold c^J(a)."""
    handle_command(
        lambda: InvariantsManager.from_source(ring_source, p).threshold(a, j, table, verify), as_csv=as_csv, approx=approx
    )


@cli.group("cartier")
def cartier_group():
    """Cartier contractions, cores and thresholds."""


@cartier_group.command("contraction")
@ring_options
@click.option("--j", "j", required=True)
@level_option
@click.option("--monomial", "monomial", default=None, help="Also test membership of this monomial.")
@verify_option
def contraction_command(ring_source, p, j, e, monomial, verify):
    """J_e."""
    handle_command(lambda: InvariantsManager.from_source(ring_source, p).contraction(j, e, monomial, verify))


@cartier_group.command("core")
@ring_options
@click.option("--j", "j", required=True)
def core_command(ring_source, p, j):
    """Cartier core P(J)."""
    handle_command(lambda: InvariantsManager.from_source(ring_source, p).core(j))


@cartier_group.command("compatible")
@ring_options
@click.option("--c", "c", required=True)
def compatible_command(ring_source, p, c):
    """Is C uniformly F-compatible?"""
    handle_command(lambda: InvariantsManager.from_source(ring_source, p).compatible(c))


@cartier_group.command("b")
@ring_options
@click.option("--a", "a", required=True)
@click.option("--j", "j", required=True)
@level_option
@verify_option
def b_command(ring_source, p, a, j, e, verify):
    """b_a^J(p^e) = max{t : a^t not in J_e}."""
    handle_command(lambda: InvariantsManager.from_source(ring_source, p).b_value(a, j, e, verify))


@cartier_group.command("threshold")
@ring_options
@click.option("--a", "a", required=True)
@click.option("--j", "j", required=True)
@verify_option
@approx_option
def cartier_threshold_command(ring_source, p, a, j, verify, approx):
    """Cartier threshold ct_J(a); the F-pure threshold when J is maximal."""
    handle_command(lambda: InvariantsManager.from_source(ring_source, p).cartier_threshold(a, j, verify), approx=approx)


@cartier_group.command("table")
@ring_options
@click.option("--a", "a", required=True)
@click.option("--j", "j", required=True)
@click.option("--emax", "e_max", type=click.IntRange(min=1), required=True)
@click.option("--csv", "as_csv", is_flag=True)
@verify_option
@approx_option
def cartier_table_command(ring_source, p, a, j, e_max, as_csv, verify, approx):
    """b(p^e)/p^e and c^{J_e}(a)/p^e for e = 1..EMAX."""
    handle_command(
        lambda: InvariantsManager.from_source(ring_source, p).sandwich_table(a, j, e_max, verify), as_csv=as_csv, approx=approx
    )


@cli.group("reg")
def reg_group():
    """a-invariants and the asymptotic regularity of R/J^[q]."""


@reg_group.command("limit")
@ring_options
@click.option("--j", "j", required=True)
def reg_limit_command(ring_source, p, j):
    handle_command(lambda: InvariantsManager.from_source(ring_source, p).reg_limit(j))


@reg_group.command("table")
@ring_options
@click.option("--j", "j", required=True)
@click.option("--emax", "e_max", type=click.IntRange(min=0), required=True)
@click.option("--csv", "as_csv", is_flag=True)
@approx_option
def reg_table_command(ring_source, p, j, e_max, as_csv, approx):
    """reg(R/J^[q])/q for e = 0..EMAX."""
    handle_command(lambda: InvariantsManager.from_source(ring_source, p).reg_table(j, e_max), as_csv=as_csv, approx=approx)


@reg_group.command("a-invariants")
@ring_options
@click.option("--j", "j", default=None, help="Squarefree J; the table is for R/J.")
def a_invariants_command(ring_source, p, j):
    handle_command(lambda: InvariantsManager.from_source(ring_source, p).a_invariants(j))


@cli.group("oracle")
def oracle_group():
    """Brute-force reference computations (bounded by FSR_ORACLE_BUDGET)."""


@oracle_group.command("nu")
@ring_options
@click.option("--a", "a", required=True)
@click.option("--j", "j", required=True)
@level_option
def oracle_nu_command(ring_source, p, a, j, e):
    handle_command(lambda: InvariantsManager.from_source(ring_source, p).oracle_nu(a, j, e))


@oracle_group.command("je")
@ring_options
@click.option("--j", "j", required=True)
@level_option
@click.option("--monomial", "monomial", required=True)
def oracle_je_command(ring_source, p, j, e, monomial):
    handle_command(lambda: InvariantsManager.from_source(ring_source, p).oracle_je(j, e, monomial))


@oracle_group.command("bracket")
@ring_options
@click.option("--a", "a", required=True)
@click.option("--j", "j", required=True)
@level_option
@approx_option
def oracle_bracket_command(ring_source, p, a, j, e, approx):
    handle_command(lambda: InvariantsManager.from_source(ring_source, p).oracle_bracket(a, j, e), approx=approx)


def main():
    cli()
