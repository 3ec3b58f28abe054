"""Command-line client for the verification service.

Subcommands: ``verify``, ``contract``, ``squeeze``, ``ellipse``.  Each
builds a request, sends it to the FastAPI app (in-process by default, or
to a running server if O32OPTICS_SERVICE_URL is set), and renders the
response as JSON or CSV.

Exit codes: 0 all checks below tolerance / output written; 1 a tolerance
was violated or the computation was rejected as out of its safe domain
(e.g. insufficient truncation); 2 configuration error.

Output is deterministic: payloads carry no timestamps and JSON is
serialized with sorted keys, so identical configurations produce
byte-identical output.
"""

from __future__ import annotations

import argparse
import asyncio
import json
import os
import sys

import httpx

__all__ = ["main"]

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_CONFIG = 2

GENERATOR_ORDER = ("Q1", "Q2", "Q3", "S0")


def _post(path: str, payload: dict) -> tuple[int, dict]:
    """POST to the service; in-process unless a base URL is configured."""
    base_url = os.environ.get("O32OPTICS_SERVICE_URL")
    if base_url:
        response = httpx.post(base_url.rstrip("/") + path, json=payload,
                              timeout=300.0)
        return response.status_code, response.json()

    from .service import app

    async def call():
        transport = httpx.ASGITransport(app=app)
        async with httpx.AsyncClient(transport=transport,
                                     base_url="http://service") as client:
            return await client.post(path, json=payload, timeout=300.0)

    response = asyncio.run(call())
    return response.status_code, response.json()


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _json_text(payload: dict) -> str:
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def _config_error(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return EXIT_CONFIG


def cmd_verify(args) -> int:
    if args.format != "json":
        return _config_error("verify emits JSON only")
    status, payload = _post("/verify", {"n_max": args.n_max, "margin": args.margin})
    if status == 422:
        return _config_error(f"invalid configuration: {payload.get('detail')}")
    _emit(_json_text(payload), args.out)
    if not payload.get("passed", False):
        print("verification FAILED: a residual exceeded its tolerance",
              file=sys.stderr)
        return EXIT_VIOLATION
    return EXIT_OK


def cmd_contract(args) -> int:
    epsilons = args.eps if args.eps else [1e-1, 1e-2, 1e-3]
    if any(e <= 0 or e > 1 for e in epsilons):
        return _config_error("every --eps must lie in (0, 1]")
    status, payload = _post("/contract", {"epsilons": epsilons})
    if status == 422:
        return _config_error(f"invalid configuration: {payload.get('detail')}")
    for gen in GENERATOR_ORDER:
        slope = payload.get("slopes", {}).get(gen)
        if slope is not None:
            print(f"slope {gen}: {slope:.6f}", file=sys.stderr)
    if args.format == "json":
        _emit(_json_text(payload), args.out)
    else:
        lines = ["epsilon,generator,deviation"]
        for row in payload["rows"]:
            lines.append(f"{row['epsilon']!r},{row['generator']},{row['deviation']!r}")
        _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def cmd_squeeze(args) -> int:
    if args.format != "json":
        return _config_error("squeeze emits JSON only")
    status, payload = _post("/squeeze", {"r": args.r, "n_max": args.n_max})
    if status == 422:
        return _config_error(f"invalid configuration: {payload.get('detail')}")
    if status == 400:
        print(f"error: {payload.get('detail')}", file=sys.stderr)
        return EXIT_VIOLATION
    _emit(_json_text(payload), args.out)
    return EXIT_OK


def cmd_ellipse(args) -> int:
    status, payload = _post("/ellipse", {"eta": args.eta})
    if status == 422:
        return _config_error(f"invalid configuration: {payload.get('detail')}")
    axes = payload["axes"]
    print(f"semi-axes: u={axes['u']!r} v={axes['v']!r} product={axes['product']!r}",
          file=sys.stderr)
    if args.format == "json":
        _emit(_json_text(payload), args.out)
    else:
        lines = ["z,t,psi_abs"]
        for z, t, p in zip(payload["z"], payload["t"], payload["psi_abs"]):
            lines.append(f"{z!r},{t!r},{p!r}")
        _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="o32optics",
        description="Run the O(3,2)/Poincare verification suites, contraction "
                    "scans, and squeezed-state exports.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="run every algebraic check")
    verify.add_argument("--n-max", type=int, default=20)
    verify.add_argument("--margin", type=int, default=2)
    verify.add_argument("--out", type=str, default=None)
    verify.add_argument("--format", choices=["json", "csv"], default="json")
    verify.set_defaults(handler=cmd_verify)

    contract = sub.add_parser("contract", help="contraction convergence scan")
    contract.add_argument("--eps", type=float, action="append", default=None,
                          help="contraction parameter, repeatable "
                               "(default: 1e-1 1e-2 1e-3)")
    contract.add_argument("--out", type=str, default=None)
    contract.add_argument("--format", choices=["json", "csv"], default="csv")
    contract.set_defaults(handler=cmd_contract)

    squeeze = sub.add_parser("squeeze", help="two-mode squeezed vacuum export")
    squeeze.add_argument("--r", type=float, default=0.5)
    squeeze.add_argument("--n-max", type=int, default=20)
    squeeze.add_argument("--out", type=str, default=None)
    squeeze.add_argument("--format", choices=["json", "csv"], default="json")
    squeeze.set_defaults(handler=cmd_squeeze)

    ellipse = sub.add_parser("ellipse", help="boost-squeezed level-set export")
    ellipse.add_argument("--eta", type=float, default=0.0)
    ellipse.add_argument("--out", type=str, default=None)
    ellipse.add_argument("--format", choices=["json", "csv"], default="csv")
    ellipse.set_defaults(handler=cmd_ellipse)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except httpx.HTTPError as exc:
        print(f"error: service request failed: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
