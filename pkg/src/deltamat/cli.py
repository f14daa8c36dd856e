"""Command-line front end.

The CLI is a thin client of the HTTP service: every command posts the
file contents to the corresponding endpoint and prints the response.  By
default the service runs in-process over an ASGI transport (no socket,
no separate process); --server URL or the DELTAMAT_SERVER environment
variable points the same commands at a remote instance instead.

Exit codes: 0 success / affirmative verdict, 1 negative verdict or
semantic error, 2 malformed input."""

from __future__ import annotations

import argparse
import asyncio
import os
import sys
from typing import Optional

import httpx


def _post(server: Optional[str], path: str, payload: dict) -> tuple[int, dict]:
    async def go() -> tuple[int, dict]:
        if server:
            transport = None
            base_url = server.rstrip("/")
        else:
            from .service import app

            transport = httpx.ASGITransport(app=app)
            base_url = "http://deltamat.local"
        async with httpx.AsyncClient(
            transport=transport, base_url=base_url, timeout=None
        ) as client:
            response = await client.post(path, json=payload)
            try:
                data = response.json()
            except ValueError:
                data = {"error": response.text.strip() or "malformed response"}
            return response.status_code, data

    return asyncio.run(go())


def _read_file(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as handle:
            return handle.read()
    except OSError as err:
        print(f"error: cannot read {path}: {err.strerror}", file=sys.stderr)
        raise SystemExit(2) from None


def _fail_from(status: int, data: dict) -> int:
    message = data.get("error") or str(data.get("detail", "request failed"))
    print(f"error: {message}", file=sys.stderr)
    return 2 if status == 422 else 1


def _emit(lines: list[str], quiet: bool) -> None:
    for line in lines[:1] if quiet else lines:
        print(line)


def _system_lines(text: str) -> list[str]:
    return text.rstrip("\n").splitlines()


def _cmd_check(args: argparse.Namespace) -> int:
    status, data = _post(args.server, "/check", {"system": _read_file(args.file)})
    if status != 200:
        return _fail_from(status, data)
    verdict = data["delta_matroid"]
    _emit(
        [
            f"delta-matroid: {'yes' if verdict else 'no'}",
            f"matroid: {'yes' if data['matroid'] else 'no'}",
        ],
        args.quiet,
    )
    return 0 if verdict else 1


def _cmd_profile(args: argparse.Namespace) -> int:
    status, data = _post(args.server, "/profile", {"system": _read_file(args.file)})
    if status != 200:
        return _fail_from(status, data)
    _emit(
        [
            f"min: {data['min_size']}",
            f"max: {data['max_size']}",
            f"parity: {data['parity']}",
            ("loops: " + " ".join(data["loops"])).rstrip(),
            ("everywhere: " + " ".join(data["everywhere"])).rstrip(),
        ],
        args.quiet,
    )
    return 0


def _system_command(args: argparse.Namespace, path: str, payload: dict) -> int:
    status, data = _post(args.server, path, payload)
    if status != 200:
        return _fail_from(status, data)
    _emit(_system_lines(data["system"]), args.quiet)
    return 0


def _cmd_twist(args: argparse.Namespace) -> int:
    payload = {"system": _read_file(args.file), "elements": args.set.split()}
    return _system_command(args, "/twist", payload)


def _cmd_dual(args: argparse.Namespace) -> int:
    return _system_command(args, "/dual", {"system": _read_file(args.file)})


def _cmd_minor(args: argparse.Namespace) -> int:
    payload = {
        "system": _read_file(args.file),
        "delete": args.delete.split(),
        "contract": args.contract.split(),
    }
    return _system_command(args, "/minor", payload)


def _cmd_slide(args: argparse.Namespace) -> int:
    payload = {"system": _read_file(args.file), "trace": _read_file(args.trace)}
    return _system_command(args, "/slide", payload)


def _cmd_binary(args: argparse.Namespace) -> int:
    status, data = _post(args.server, "/binary", {"system": _read_file(args.file)})
    if status != 200:
        return _fail_from(status, data)
    if not data["binary"]:
        print("not binary")
        return 1
    lines = [("base: " + " ".join(data["base"])).rstrip()]
    lines.extend(_system_lines(data["matrix"]))
    _emit(lines, args.quiet)
    return 0


def _cmd_canon(args: argparse.Namespace) -> int:
    status, data = _post(args.server, "/canon", {"system": _read_file(args.file)})
    if status != 200:
        return _fail_from(status, data)
    lines = [f"canonical: i={data['i']} j={data['j']} k={data['k']} l={data['l']}"]
    lines.extend(_system_lines(data["trace"]))
    lines.extend(_system_lines(data["system"]))
    _emit(lines, args.quiet)
    return 0


def _cmd_census(args: argparse.Namespace) -> int:
    status, data = _post(args.server, "/census", {"n": args.n, "depth": args.depth})
    if status != 200:
        return _fail_from(status, data)
    _emit(_system_lines(data["dump"] if args.dump else data["text"]), args.quiet)
    return 0 if data["failures"] == 0 else 1


def _cmd_from_graph(args: argparse.Namespace) -> int:
    return _system_command(args, "/from-graph", {"graph": _read_file(args.file)})


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--server",
        default=os.environ.get("DELTAMAT_SERVER"),
        help="URL of a running deltamat service (default: in-process)",
    )
    common.add_argument(
        "-q", "--quiet", action="store_true", help="print only the first output line"
    )

    parser = argparse.ArgumentParser(
        prog="deltamat", description="delta-matroid algebra toolkit"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", parents=[common], help="test the two exchange axioms")
    p.add_argument("file")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("profile", parents=[common], help="size range, parity, loops")
    p.add_argument("file")
    p.set_defaults(func=_cmd_profile)

    p = sub.add_parser("twist", parents=[common], help="twist by a subset")
    p.add_argument("file")
    p.add_argument("--set", default="", help="elements, space-separated")
    p.set_defaults(func=_cmd_twist)

    p = sub.add_parser("dual", parents=[common], help="twist by the full ground set")
    p.add_argument("file")
    p.set_defaults(func=_cmd_dual)

    p = sub.add_parser("minor", parents=[common], help="delete/contract elements")
    p.add_argument("file")
    p.add_argument("--delete", default="", help="elements to delete")
    p.add_argument("--contract", default="", help="elements to contract")
    p.set_defaults(func=_cmd_minor)

    p = sub.add_parser("slide", parents=[common], help="apply a slide trace")
    p.add_argument("file")
    p.add_argument("--trace", required=True, help="trace file (slide: a b lines)")
    p.set_defaults(func=_cmd_slide)

    p = sub.add_parser("binary", parents=[common], help="binary representability")
    p.add_argument("file")
    p.set_defaults(func=_cmd_binary)

    p = sub.add_parser("canon", parents=[common], help="canonical form with trace")
    p.add_argument("file")
    p.set_defaults(func=_cmd_canon)

    p = sub.add_parser("census", parents=[common], help="enumerate and verify")
    p.add_argument("-n", type=int, required=True, help="ground set size (1..4)")
    p.add_argument("--depth", type=int, default=12, help="search depth budget")
    p.add_argument("--dump", action="store_true", help="machine-readable output")
    p.set_defaults(func=_cmd_census)

    p = sub.add_parser("from-graph", parents=[common], help="graphic matroid")
    p.add_argument("file")
    p.set_defaults(func=_cmd_from_graph)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SystemExit as err:
        code = err.code
        return code if isinstance(code, int) else 2
    except httpx.HTTPError as err:
        print(f"error: {err}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
