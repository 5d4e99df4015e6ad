"""Command-line client of the service.

Every command builds a request, sends it through the HTTP layer (an
in-process ASGI transport by default, or a remote server with --server) and
prints the response.  JSON output is canonical and byte-stable for identical
command, seed and configuration; text and csv are projections of it.

Exit codes: 0 all requested checks pass, 1 a verification check failed,
2 usage error, 3 numerical non-convergence.

FOCKLAB_CONFIG may point to a JSON file of defaults (order, seed, format,
server, zeta_r, step, max_iter, tol, rank_tol, eps, nmax); explicit flags win.
"""

from __future__ import annotations

import asyncio
import json
import os
import sys

import click
import httpx

CONFIG_ENV = "FOCKLAB_CONFIG"

BUILTIN_DEFAULTS = {
    "order": 10,
    "seed": 0,
    "format": "json",
    "server": None,
    "zeta_r": -1.0,
    "step": 0.25,
    "max_iter": 10000,
    "tol": 1e-8,
    "rank_tol": 1e-6,
    "eps": 0.01,
    "nmax": 6,
}


def load_config() -> dict:
    config = dict(BUILTIN_DEFAULTS)
    path = os.environ.get(CONFIG_ENV)
    if path:
        try:
            with open(path) as fh:
                overrides = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise click.UsageError(f"cannot read config {path}: {exc}")
        unknown = set(overrides) - set(config)
        if unknown:
            raise click.UsageError(f"unknown config keys in {path}: {sorted(unknown)}")
        config.update(overrides)
    return config


def post(server: str | None, path: str, payload: dict):
    """POST to a remote server, or run the request through the app in-process."""
    if server:
        with httpx.Client(base_url=server, timeout=600.0) as client:
            resp = client.post(path, json=payload)
        return resp.status_code, resp.json()

    from .service.app import app

    async def run():
        transport = httpx.ASGITransport(app=app)
        async with httpx.AsyncClient(
            transport=transport, base_url="http://focklab.internal", timeout=600.0
        ) as client:
            return await client.post(path, json=payload)

    resp = asyncio.run(run())
    return resp.status_code, resp.json()


def emit(payload: dict, fmt: str, text_lines, csv_rows) -> None:
    if fmt == "json":
        click.echo(json.dumps(payload, indent=2, sort_keys=True))
    elif fmt == "text":
        for line in text_lines(payload):
            click.echo(line)
    else:
        for row in csv_rows(payload):
            click.echo(",".join(str(cell) for cell in row))


def fail_for_status(status: int, body) -> None:
    if status >= 400:
        detail = body.get("detail", body) if isinstance(body, dict) else body
        click.echo(f"error: {detail}", err=True)
        sys.exit(2)


def parse_ints(text: str, what: str) -> list[int]:
    if text == "":
        return []
    try:
        return [int(piece) for piece in text.split(",")]
    except ValueError:
        raise click.UsageError(f"{what} must be comma-separated integers, got {text!r}")


@click.group()
@click.option("--server", default=None, help="Remote service URL; default in-process.")
@click.option(
    "--format",
    "fmt",
    type=click.Choice(["json", "text", "csv"]),
    default=None,
    help="Output format (default json).",
)
@click.pass_context
def main(ctx, server, fmt):
    """Exact Fock-space algebra, Hilbert-scheme Betti series and the ADHM lab."""
    config = load_config()
    ctx.obj = {
        "server": server or config["server"],
        "format": fmt or config["format"],
        "config": config,
    }


@main.command()
@click.option("--betti", default="1,0,0,0,0", help="b0,b1,b2,b3,b4 of the surface.")
@click.option("--order", type=int, default=None, help="Truncation order in q.")
@click.pass_context
def goettsche(ctx, betti, order):
    """Poincare polynomials of the point Hilbert schemes, plus Euler numbers."""
    betti_list = parse_ints(betti, "--betti")
    if len(betti_list) != 5:
        raise click.UsageError("--betti needs exactly five integers")
    payload = {
        "betti": betti_list,
        "order": order if order is not None else ctx.obj["config"]["order"],
    }
    status, body = post(ctx.obj["server"], "/goettsche", payload)
    fail_for_status(status, body)

    def text_lines(b):
        for row in b["rows"]:
            yield f"n={row['n']}: {row['polynomial']}  (euler {row['euler']})"

    def csv_rows(b):
        yield ("n", "polynomial", "euler")
        for row in b["rows"]:
            yield (row["n"], row["polynomial"], row["euler"])

    emit(body, ctx.obj["format"], text_lines, csv_rows)


@main.command()
@click.argument(
    "suite", type=click.Choice(["relations", "characters", "identity", "appendix"])
)
@click.option("--order", type=int, default=None)
@click.option("--betti", default=None, help="Restrict the identity suite to one profile.")
@click.option("--nmax", type=int, default=None)
@click.option("--seed", type=int, default=None)
@click.pass_context
def verify(ctx, suite, order, betti, nmax, seed):
    """Run a verification suite; exit 0 iff every check passes."""
    config = ctx.obj["config"]
    payload = {
        "suite": suite,
        "order": order,
        "betti": parse_ints(betti, "--betti") if betti else None,
        "nmax": nmax if nmax is not None else config["nmax"],
        "seed": seed if seed is not None else config["seed"],
        "flow_tol": config["tol"],
        "rank_tol": config["rank_tol"],
        "eps": config["eps"],
    }
    click.echo(f"running suite {suite} ...", err=True)
    status, body = post(ctx.obj["server"], "/verify", payload)
    fail_for_status(status, body)

    def text_lines(b):
        for check in b["checks"]:
            mark = "pass" if check["passed"] else "FAIL"
            yield f"[{mark}] {check['name']}" + (
                f": {check['detail']}" if check["detail"] else ""
            )
        yield f"suite {b['suite']}: {'all passed' if b['all_passed'] else 'FAILURES'}"

    def csv_rows(b):
        yield ("name", "passed", "detail")
        for check in b["checks"]:
            yield (check["name"], check["passed"], check["detail"])

    emit(body, ctx.obj["format"], text_lines, csv_rows)
    if not body["all_passed"]:
        sys.exit(1)


@main.group()
def adhm():
    """Fixed points, moment-map flow and dimension counts."""


@adhm.command()
@click.option("--partition", default="", help="Non-increasing parts, e.g. 2,1.")
@click.option("--r", type=int, default=1)
@click.pass_context
def fixed(ctx, partition, r):
    """Emit the fixed-point datum of a partition with its certificates."""
    payload = {"partition": parse_ints(partition, "--partition"), "r": r}
    status, body = post(ctx.obj["server"], "/adhm/fixed", payload)
    fail_for_status(status, body)

    def text_lines(b):
        yield f"partition {b['config']['partition']}: n={b['datum']['n']}"
        yield f"mu_c_norm={b['mu_c_norm']}, stable={b['stable']}, complex_ok={b['complex_ok']}"
        yield f"weights: {b['weights']}"

    def csv_rows(b):
        yield ("key", "value")
        yield ("n", b["datum"]["n"])
        yield ("mu_c_norm", b["mu_c_norm"])
        yield ("stable", b["stable"])
        yield ("complex_ok", b["complex_ok"])

    emit(body, ctx.obj["format"], text_lines, csv_rows)


@adhm.command()
@click.option("--n", type=int, default=2)
@click.option("--r", type=int, default=1)
@click.option("--seed", type=int, default=None)
@click.option("--input", "input_path", type=click.Path(exists=True), default=None,
              help="Flow an explicit datum from a JSON file instead of sampling.")
@click.option("--zeta-r", type=float, default=None)
@click.option("--step", type=float, default=None)
@click.option("--max-iter", type=int, default=None)
@click.option("--tol", type=float, default=None)
@click.pass_context
def flow(ctx, n, r, seed, input_path, zeta_r, step, max_iter, tol):
    """Flow seeded (or given) stable data onto the real moment-map level."""
    config = ctx.obj["config"]
    payload = {
        "n": n,
        "r": r,
        "seed": seed if seed is not None else config["seed"],
        "zeta_r": zeta_r if zeta_r is not None else config["zeta_r"],
        "step": step if step is not None else config["step"],
        "max_iter": max_iter if max_iter is not None else config["max_iter"],
        "tol": tol if tol is not None else config["tol"],
    }
    if input_path:
        with open(input_path) as fh:
            payload["datum"] = json.load(fh)
    status, body = post(ctx.obj["server"], "/adhm/flow", payload)
    fail_for_status(status, body)

    def text_lines(b):
        state = "converged" if b["converged"] else "NOT CONVERGED"
        yield f"flow {state}: residual {b['residual']:.3e} after {b['iterations']} iterations"
        yield f"mu_c_norm {b['mu_c_norm']:.3e}"

    def csv_rows(b):
        yield ("converged", "residual", "iterations", "mu_c_norm")
        yield (b["converged"], b["residual"], b["iterations"], b["mu_c_norm"])

    emit(body, ctx.obj["format"], text_lines, csv_rows)
    if not body["converged"]:
        sys.exit(3)


@adhm.command()
@click.option("--n", type=int, default=1)
@click.option("--r", type=int, default=1)
@click.option("--seed", type=int, default=None)
@click.option("--rank-tol", type=float, default=None)
@click.pass_context
def dim(ctx, n, r, seed, rank_tol):
    """Tangent dimension of the quotient at flowed random stable data."""
    config = ctx.obj["config"]
    payload = {
        "n": n,
        "r": r,
        "seed": seed if seed is not None else config["seed"],
        "rank_tol": rank_tol if rank_tol is not None else config["rank_tol"],
        "zeta_r": config["zeta_r"],
        "flow_tol": config["tol"],
    }
    status, body = post(ctx.obj["server"], "/adhm/dim", payload)
    fail_for_status(status, body)

    def text_lines(b):
        yield f"tangent dimension {b['dimension']} (4nr = {b['expected']})"

    def csv_rows(b):
        yield ("dimension", "expected")
        yield (b["dimension"], b["expected"])

    emit(body, ctx.obj["format"], text_lines, csv_rows)


@main.command()
@click.option("--host", default="127.0.0.1")
@click.option("--port", type=int, default=8000)
def serve(host, port):
    """Run the HTTP service."""
    import uvicorn

    from .service.app import app

    uvicorn.run(app, host=host, port=port)


if __name__ == "__main__":
    main()
