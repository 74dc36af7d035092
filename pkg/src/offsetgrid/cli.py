"""Command-line interface: a thin client over the HTTP service.

By default commands drive the service in-process; point --server at a
running instance to go over the network.  Exit codes: 0 success (or suite
pass), 1 suite failure, 2 input error.  Reports on stdout are byte-identical
across runs for identical inputs and seeds; timing goes to stderr.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Any, Optional

from .client import ServiceClient

_OK, _FAIL, _INPUT_ERROR = 0, 1, 2


def _default_seed() -> int:
    try:
        return int(os.environ.get("OFFSETGRID_SEED", "0"))
    except ValueError:
        return 0


def _load_scene_payload(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise _CliInputError(f"cannot read scene file: {exc}")
    try:
        # keep decimal literals as strings so the service sees them exactly
        doc = json.loads(text, parse_float=str)
    except json.JSONDecodeError as exc:
        raise _CliInputError(f"scene file is not valid JSON: {exc}")
    if not isinstance(doc, dict):
        raise _CliInputError("scene file must contain a JSON object")
    return doc


class _CliInputError(Exception):
    pass


def _post(client: ServiceClient, path: str, payload: dict) -> Any:
    resp = client.post(path, payload)
    if resp.status_code in (400, 422):
        detail = resp.json().get("detail")
        if isinstance(detail, list):
            detail = "; ".join(
                f"{'.'.join(str(p) for p in item.get('loc', []))}: {item.get('msg')}"
                for item in detail
            )
        raise _CliInputError(str(detail))
    if resp.status_code != 200:
        raise _CliInputError(f"service error {resp.status_code}: {resp.text}")
    return resp


def _fmt_point(p: list) -> str:
    return "(" + ",".join(str(c) for c in p) + ")"


def _fmt_r2(value: Optional[str], exact: str) -> str:
    return value if value is not None else f"({exact})^2"


def _bool(b: bool) -> str:
    return "true" if b else "false"


def cmd_discretize(client: ServiceClient, args) -> int:
    payload = {"scene": _load_scene_payload(args.scene), "radius": args.radius}
    data = _post(client, "/discretize", payload).json()
    print(f"dim: {data['dim']}")
    print(f"r2: {data['r2']}")
    print(f"count: {data['count']}")
    for p in data["points"]:
        print(f"point: {_fmt_point(p)}")
    return _OK


def cmd_components(client: ServiceClient, args) -> int:
    payload = {
        "scene": _load_scene_payload(args.scene),
        "radius": args.radius,
        "k": args.k,
    }
    data = _post(client, "/components", payload).json()
    print(f"dim: {data['dim']}")
    print(f"r2: {data['r2']}")
    print(f"k: {data['k']}")
    print(f"components: {data['count']}")
    for i, group in enumerate(data["components"]):
        print(f"component {i}: " + " ".join(_fmt_point(p) for p in group))
    return _OK


def _print_value(name: str, value: dict) -> None:
    print(f"{name}_r2: {_fmt_r2(value['r2'], value['exact'])}")
    print(f"{name}: {value['decimal']}")


def cmd_radii(client: ServiceClient, args) -> int:
    payload = {"scene": _load_scene_payload(args.scene), "seed": args.seed}
    data = _post(client, "/radii", payload).json()
    print(f"dim: {data['dim']}")
    print(f"components: {data['m']}")
    _print_value("rho", data["rho"])
    _print_value("bottleneck_gap", data["bottleneck_gap"])
    _print_value("delta", data["delta"])
    if data["omega"] is not None:
        omega = data["omega"]
        print(f"omega_r2: {omega['r2']}")
        print(f"omega: {omega['decimal']}")
        print("omega_center: (" + ",".join(omega["center"]) + ")")
    else:
        print(f"omega: unavailable ({data['omega_note']})")
    for key in ("alpha0", "alpha_top"):
        a = data[key]
        name = f"alpha{a['j']}"
        print(f"{name}_r2: {_fmt_r2(a['r2'], a['exact'])}")
        print(f"{name}: {a['decimal']}")
        print(f"{name}_attained: {_bool(a['attained'])}")
    return _OK


def cmd_alpha(client: ServiceClient, args) -> int:
    payload: dict = {"scene": _load_scene_payload(args.scene), "j": args.j}
    if args.radius_max is not None:
        payload["radius_max"] = args.radius_max
    data = _post(client, "/alpha", payload).json()
    print(f"j: {data['j']}")
    print(f"alpha_r2: {_fmt_r2(data['r2'], data['exact'])}")
    print(f"alpha: {data['decimal']}")
    print(f"attained: {_bool(data['attained'])}")
    return _OK


def cmd_verify(client: ServiceClient, args) -> int:
    payload = {"suite": args.suite, "trials": args.trials, "seed": args.seed}
    data = _post(client, "/verify", payload).json()
    print(f"suite: {data['suite']}")
    print(f"trials: {data['trials']}")
    print(f"seed: {data['seed']}")
    print(f"failures: {len(data['failures'])}")
    for i, f in enumerate(data["failures"]):
        print(f"failure {i}: trial={f['trial']} seed={f['seed']} witness={f['witness']}")
        if f["scene"]:
            print(f"failure {i} scene: {f['scene']}")
    print(f"result: {'pass' if data['passed'] else 'fail'}")
    print(f"elapsed: {data['elapsed']:.3f}s", file=sys.stderr)
    return _OK if data["passed"] else _FAIL


def cmd_render(client: ServiceClient, args) -> int:
    payload = {"scene": _load_scene_payload(args.scene), "radius": args.radius}
    resp = _post(client, "/render", payload)
    try:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(resp.text)
    except OSError as exc:
        raise _CliInputError(f"cannot write output file: {exc}")
    print(f"wrote: {args.out}")
    return _OK


def cmd_serve(args) -> int:
    import uvicorn

    from .service.app import app

    uvicorn.run(app, host=args.host, port=args.port)
    return _OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="offsetgrid",
        description="Exact offset discretization and connectivity analysis.",
    )
    parser.add_argument(
        "--server",
        default=None,
        help="base URL of a running service (default: run in-process)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("discretize", help="lattice points of the offset at a radius")
    p.add_argument("--scene", required=True, help="scene file (JSON)")
    p.add_argument("--radius", required=True, help='radius: "3/4", "0.5", "sqrt(K)/2" or "r2=p/q"')

    p = sub.add_parser("components", help="k-connected components of the discretization")
    p.add_argument("--scene", required=True)
    p.add_argument("--radius", required=True)
    p.add_argument("--k", type=int, required=True, help="adjacency level")

    p = sub.add_parser("radii", help="all radius functionals of a scene")
    p.add_argument("--scene", required=True)
    p.add_argument("--seed", type=int, default=_default_seed())

    p = sub.add_parser("alpha", help="least radius with stable j-connectivity")
    p.add_argument("--scene", required=True)
    p.add_argument("--j", type=int, required=True, help="connectivity level")
    p.add_argument("--radius-max", default=None, help="sweep cap (radius argument)")

    p = sub.add_parser("verify", help="run a property suite")
    p.add_argument("--suite", required=True)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=_default_seed())

    p = sub.add_parser("render", help="render a 2D scene and its offset to SVG")
    p.add_argument("--scene", required=True)
    p.add_argument("--radius", required=True)
    p.add_argument("--out", required=True, help="output SVG path")

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "serve":
        return cmd_serve(args)
    handlers = {
        "discretize": cmd_discretize,
        "components": cmd_components,
        "radii": cmd_radii,
        "alpha": cmd_alpha,
        "verify": cmd_verify,
        "render": cmd_render,
    }
    import httpx

    try:
        with ServiceClient(args.server) as client:
            return handlers[args.command](client, args)
    except _CliInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _INPUT_ERROR
    except httpx.HTTPError as exc:
        print(f"error: cannot reach service: {exc}", file=sys.stderr)
        return _INPUT_ERROR


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
