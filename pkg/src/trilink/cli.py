"""Batch JSON command line exposing every computation in the package.

One subcommand per operation family; each reads a single JSON object
(stdin by default, or --input FILE), writes a single JSON object to
stdout, and exits with

    0  success
    2  malformed input (including schema problems), error object emitted
    3  a mathematical precondition of the requested operation fails
    4  an internal cross-check failed (defect signal, not user error)

Integers of magnitude >= 2**53 are emitted as decimal strings so that
results survive double-precision JSON consumers; string-encoded
integers are accepted anywhere an integer is expected.  Randomized
self-checks are seeded (--seed) and the seed is echoed in the output.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from random import Random

from . import infection, magnus, nilpotent, realization, seifert
from .errors import CrossCheckError, PreconditionError
from .words import parse_word

BIG = 2**53
ENV_DEGREE_CAP = "TRILINK_DEGREE_CAP"


def _encode(obj):
    if isinstance(obj, bool):
        return obj
    if isinstance(obj, int):
        return str(obj) if abs(obj) >= BIG else obj
    if isinstance(obj, (list, tuple)):
        return [_encode(x) for x in obj]
    if isinstance(obj, dict):
        return {k: _encode(v) for k, v in obj.items()}
    return obj


def _as_int(value, what: str) -> int:
    if isinstance(value, bool):
        raise ValueError(f"{what} must be an integer, got a boolean")
    if isinstance(value, int):
        return value
    if isinstance(value, str):
        try:
            return int(value.strip())
        except ValueError:
            raise ValueError(f"{what} is not an integer: {value!r}") from None
    raise ValueError(f"{what} must be an integer (or a decimal string)")


def _require(payload: dict, key: str):
    if key not in payload:
        raise ValueError(f"missing field {key!r}")
    return payload[key]


def _int_matrix(raw, what: str) -> list[list[int]]:
    if not isinstance(raw, list) or not all(isinstance(r, list) for r in raw):
        raise ValueError(f"{what} must be a list of rows")
    return [[_as_int(x, f"{what} entry") for x in row] for row in raw]


def _parse_matrix(raw) -> seifert.SeifertMatrix:
    if not isinstance(raw, dict):
        raise ValueError("matrix must be an object with genus/ordering/entries")
    entries = _int_matrix(_require(raw, "entries"), "matrix")
    ordering = _require(raw, "ordering")
    m = seifert.validate(entries, ordering)
    if "genus" in raw and _as_int(raw["genus"], "genus") != m.genus:
        raise ValueError(f"declared genus {raw['genus']} but entries give {m.genus}")
    return m


def _matrix_json(m: seifert.SeifertMatrix) -> dict:
    return {"genus": m.genus, "ordering": m.ordering, "entries": [list(r) for r in m.entries]}


def _parse_metabolizer(raw) -> seifert.MetabolizerBasis:
    if not isinstance(raw, dict):
        raise ValueError("metabolizer must be an object with a 'columns' field")
    cols = _int_matrix(_require(raw, "columns"), "metabolizer column")
    return seifert.MetabolizerBasis(tuple(tuple(c) for c in cols))


def _degree_cap_from_env() -> int:
    raw = os.environ.get(ENV_DEGREE_CAP, str(magnus.DEFAULT_DEGREE_CAP))
    cap = _as_int(raw, ENV_DEGREE_CAP)
    if cap < 2:
        raise ValueError(f"{ENV_DEGREE_CAP} must be >= 2, got {cap}")
    return cap


def cmd_mu(payload: dict, args) -> dict:
    rank = _as_int(payload.get("rank", 3), "rank")
    if rank != 3:
        raise ValueError(f"mu requires rank 3, got {rank}")
    word = parse_word(_require(payload, "longitude3"), 3)
    out = {"mu123": magnus.mu123(word)}
    if args.show_series:
        cap = _degree_cap_from_env()
        out["series"] = magnus.phi(word, cap).to_text()
        out["degree_cap"] = cap
    return out


def cmd_depth(payload: dict, args) -> dict:
    rank = _as_int(_require(payload, "rank"), "rank")
    kmax = _as_int(_require(payload, "kmax"), "kmax")
    word = parse_word(_require(payload, "word"), rank)
    return {"depth": magnus.lcs_depth(word, kmax)}


def cmd_class(payload: dict, args) -> dict:
    word = parse_word(_require(payload, "word"), 3)
    cls = nilpotent.class_of(word)
    return {"class": list(cls), "mu123": nilpotent.mu_from_class(cls)}


def cmd_generator(payload: dict, args) -> dict:
    m = _parse_matrix(_require(payload, "matrix"))
    v = _parse_metabolizer(_require(payload, "metabolizer"))
    result = seifert.generator_for_metabolizer(m, v)
    again = seifert.generator_for_metabolizer(m, v, rng=Random(args.seed))
    if again.generator != result.generator:
        raise CrossCheckError(
            f"completions disagree: {result.generator} vs {again.generator}"
        )
    return {
        "generator": result.generator,
        "signed": result.signed,
        "meaning": result.meaning,
        "self_check": {"seed": args.seed, "completions_agree": True},
    }


def cmd_metabolizer(payload: dict, args) -> dict:
    m = _parse_matrix(_require(payload, "matrix"))
    v = _parse_metabolizer(_require(payload, "metabolizer"))
    verdict = seifert.is_metabolizer(m, v)
    vanishes = all(
        seifert.form(m, list(ci), list(cj)) == 0
        for ci in v.columns
        for cj in v.columns
    )
    try:
        primitive = seifert.is_primitive(v)
        independent = True
    except ValueError:
        primitive = False
        independent = False
    return {
        "is_metabolizer": verdict,
        "form_vanishes": vanishes,
        "primitive": primitive,
        "independent": independent,
    }


def cmd_enumerate(payload: dict, args) -> dict:
    m = _parse_matrix(_require(payload, "matrix"))
    bound = _as_int(_require(payload, "bound"), "bound")
    cap = _as_int(payload.get("bound_cap", seifert.DEFAULT_BOUND_CAP), "bound_cap")
    results = seifert.enumerate_metabolizers(m, bound, bound_cap=cap)
    return {
        "count": len(results),
        "metabolizers": [{"columns": [list(c) for c in v.columns]} for v in results],
    }


def cmd_infect(payload: dict, args) -> dict:
    mu_j = _as_int(_require(payload, "mu_J"), "mu_J")
    mu_l = _as_int(_require(payload, "mu_L"), "mu_L")
    if "N" in payload:
        profile = infection.IntersectionProfile(
            tuple(tuple(r) for r in _int_matrix(payload["N"], "N"))
        )
        return {"mu": infection.infected_mu(mu_j, profile, mu_l), "route": "profile"}
    if "alpha" in payload or "beta" in payload:
        counts = infection.BandSumCounts(
            tuple(tuple(r) for r in _int_matrix(_require(payload, "alpha"), "alpha")),
            tuple(tuple(r) for r in _int_matrix(_require(payload, "beta"), "beta")),
        )
        via_bands = infection.band_sum_expansion(mu_j, counts, mu_l)
        via_profile = infection.infected_mu(mu_j, counts.net_profile(), mu_l)
        if via_bands != via_profile:
            raise CrossCheckError(
                f"band-sum expansion {via_bands} != profile formula {via_profile}"
            )
        return {"mu": via_bands, "route": "band-sum", "cross_checked": True}
    raise ValueError("need either 'N' or 'alpha' and 'beta'")


def cmd_genus_one(payload: dict, args) -> dict:
    d = _as_int(_require(payload, "d"), "d")
    e = _as_int(_require(payload, "e"), "e")
    r = seifert.genus_one_normalize(d, e)
    return {
        "n": r.n,
        "x": r.x,
        "y": r.y,
        "z": r.z,
        "w": r.w,
        "normalized_e": seifert.normalize_e(e),
        "new_matrix": _matrix_json(r.new_matrix),
    }


def cmd_ledger(payload: dict, args) -> dict:
    raw = _require(payload, "params")
    if not isinstance(raw, dict):
        raise ValueError("params must be an object")
    names = ("a", "b", "c", "x1", "x2", "y1", "y2", "z1", "z2")
    params = realization.GenusThreeParams(
        **{name: _as_int(_require(raw, name), name) for name in names}
    )
    n = _as_int(_require(payload, "n"), "n")
    led = realization.ledger(params, n)
    return {
        "band1_term": led.band1_term,
        "band3_term": led.band3_term,
        "band5_term": led.band5_term,
        "residual_term": led.residual_term,
        "total": led.total,
        "n": led.n,
        "description": {
            "parallel_copies": led.description.parallel_copies,
            "wrap_count": led.description.wrap_count,
            "inner_alteration_count": led.description.inner_alteration_count,
        },
        "pushoff_entries": [
            [name, value] for name, value in realization.pushoff_ledger_entries(params, n)
        ],
    }


_HANDLERS = {
    "mu": cmd_mu,
    "depth": cmd_depth,
    "class": cmd_class,
    "generator": cmd_generator,
    "metabolizer": cmd_metabolizer,
    "enumerate": cmd_enumerate,
    "infect": cmd_infect,
    "genus-one": cmd_genus_one,
    "ledger": cmd_ledger,
}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="trilink",
        description="Exact computations for triple linking numbers of derivative links.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="SUBCOMMAND")
    for name in _HANDLERS:
        p = sub.add_parser(name)
        p.add_argument("--input", default=None, help="JSON input file (default: stdin)")
        p.add_argument("--output", choices=("json", "text"), default="json")
        p.add_argument("--seed", type=int, default=0, help="seed for self-checks")
        if name == "mu":
            p.add_argument(
                "--show-series",
                action="store_true",
                help=f"include the Magnus series (cap from ${ENV_DEGREE_CAP}, default "
                f"{magnus.DEFAULT_DEGREE_CAP})",
            )
    return parser


def _load_payload(args) -> dict:
    if args.input is None:
        text = sys.stdin.read()
    else:
        try:
            with open(args.input, "r", encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise ValueError(f"cannot read input file: {exc}") from None
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"invalid JSON: {exc}") from None
    if not isinstance(payload, dict):
        raise ValueError("top-level JSON value must be an object")
    return payload


def _emit(result: dict, mode: str) -> None:
    encoded = _encode(result)
    if mode == "text":
        for key, value in encoded.items():
            if isinstance(value, (dict, list)):
                print(f"{key}: {json.dumps(value)}")
            else:
                print(f"{key}: {value}")
    else:
        print(json.dumps(encoded))


def _emit_error(code: str, detail: str) -> None:
    print(json.dumps({"error": code, "detail": detail}))


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        payload = _load_payload(args)
        result = _HANDLERS[args.command](payload, args)
    except PreconditionError as exc:
        _emit_error("precondition", str(exc))
        return 3
    except CrossCheckError as exc:
        _emit_error("internal-check", str(exc))
        return 4
    except (ValueError, TypeError, KeyError) as exc:
        _emit_error("bad-input", str(exc))
        return 2
    _emit(result, args.output)
    return 0


if __name__ == "__main__":
    sys.exit(main())
