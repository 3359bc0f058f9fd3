import asyncio
import os

from dotenv import load_dotenv
from mcp.server.fastmcp import Context, FastMCP

from fsr.core.utils import dumps
from fsr.invariants_manager import InvariantsManager

load_dotenv()


def handle_operation(operation_func, error_prefix: str, *args):
    """Generic handler for invariant computations.

    Args:
        operation_func: Callable returning a JSON-ready payload
        error_prefix: Prefix for error messages
        *args: Arguments to pass to the operation function

    Returns:
        Canonical JSON of the payload, or the error message
    """
    try:
        payload = operation_func(*args)
    except Exception as e:
        return f"{error_prefix}: {e!s}"
    else:
        return dumps(payload)


def _create_ideal_tools(mcp: FastMCP):
    """Create monomial ideal tools."""

    @mcp.tool()
    async def min_primes(ctx: Context, ring: str) -> str:
        """Minimal primes and Krull dimension of a Stanley-Reisner ring.

        Args:
            ring: Ring file path or inline JSON {"variables": [...], "p": 2, "relations": [...]}

        Returns:
            JSON with the minimal primes (as variable lists) and the dimension
        """
        return handle_operation(lambda: InvariantsManager.from_source(ring).min_primes(), "Error computing minimal primes")


def _create_threshold_tools(mcp: FastMCP):
    """Create nu-value and F-threshold tools."""

    @mcp.tool()
    async def nu(ctx: Context, ring: str, a: str, j: str, e: int) -> str:
        """nu_a^J(p^e), the largest m with a^m outside J^[p^e].

        Args:
            ring: Ring file path or inline JSON
            a: Monomial ideal, e.g. "x^2, y^2"
            j: Monomial ideal with a inside its radical
            e: Frobenius exponent

        Returns:
            JSON with nu, q and nu/q
        """
        return handle_operation(lambda: InvariantsManager.from_source(ring).nu(a, j, e), "Error computing nu")

    @mcp.tool()
    async def threshold(ctx: Context, ring: str, a: str, j: str) -> str:
        """Exact F-threshold c^J(a).

        Args:
            ring: Ring file path or inline JSON
            a: Monomial ideal
            j: Monomial ideal with a inside its radical

        Returns:
            JSON with the threshold as "num/den" and per-prime values
        """
        return handle_operation(lambda: InvariantsManager.from_source(ring).threshold(a, j), "Error computing threshold")


def _create_cartier_tools(mcp: FastMCP):
    """Create Cartier core and Cartier threshold tools."""

    @mcp.tool()
    async def cartier_core(ctx: Context, ring: str, j: str) -> str:
        """Cartier core P(J), the largest uniformly F-compatible ideal inside J."""
        return handle_operation(lambda: InvariantsManager.from_source(ring).core(j), "Error computing Cartier core")

    @mcp.tool()
    async def cartier_threshold(ctx: Context, ring: str, a: str, j: str) -> str:
        """Cartier threshold ct_J(a) for a radical J containing a.

        Args:
            ring: Ring file path or inline JSON
            a: Monomial ideal inside J
            j: Squarefree monomial ideal

        Returns:
            JSON with the threshold and the per-prime pipeline trace
        """
        return handle_operation(lambda: InvariantsManager.from_source(ring).cartier_threshold(a, j), "Error computing Cartier threshold")


def _create_regularity_tools(mcp: FastMCP):
    """Create regularity tools."""

    @mcp.tool()
    async def regularity_limit(ctx: Context, ring: str, j: str) -> str:
        """lim reg(R/J^[q])/q for a squarefree J, with the maximizing (alpha, i) terms."""
        return handle_operation(lambda: InvariantsManager.from_source(ring).reg_limit(j), "Error computing regularity limit")


def create_invariant_tools(mcp: FastMCP):
    """Create and register invariant tools with MCP instance.

    Args:
        mcp: FastMCP instance
    """
    _create_ideal_tools(mcp)
    _create_threshold_tools(mcp)
    _create_cartier_tools(mcp)
    _create_regularity_tools(mcp)


def create_mcp() -> FastMCP:
    """Create a new MCP instance with the invariant tools.

    Returns:
        Configured FastMCP instance
    """
    mcp = FastMCP(
        "FSR INVARIANTS",
        instructions="Exact F-invariants of Stanley-Reisner rings over F_p",
        host=os.getenv("HOST", "127.0.0.1"),
        port=int(os.getenv("PORT", "8050")),
    )
    create_invariant_tools(mcp)
    return mcp


async def async_main():
    mcp = create_mcp()

    transport = os.getenv("TRANSPORT", "sse")
    if transport == "sse":
        await mcp.run_sse_async()
    else:
        await mcp.run_stdio_async()


def main():
    asyncio.run(async_main())
