"""Command-line front end.

Subcommands: value, schedule, compare, sweep, batch, surplus. Every
subcommand takes --format {table,csv,json} and --deterministic (omits the
timestamp from JSON envelopes so identical invocations are byte-identical).

Exit codes: 0 success, 1 internal error, 2 input validation failure,
3 batch run with at least one failed record.

Money is rendered with exactly 4 decimal places (half-even). CSV output
uses '.' decimals, ',' separators, '\\n' line endings, and always carries
a header row.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from datetime import datetime, timezone
from pathlib import Path

from . import __version__
from .classic import Method
from .core import AssetSpec, DiscountRate, check_age, delayed_present_cost, intrinsic_value, present_cost
from .errors import InvalidInput
from .schedule import build_schedule, chord_gap, compare_methods, rate_sweep, trade_surplus

METHOD_TOKENS = {
    "intrinsic": Method.INTRINSIC,
    "sl": Method.STRAIGHT_LINE,
    "ddb": Method.DOUBLE_DECLINING,
    "syd": Method.SUM_OF_YEARS,
}


class CliError(Exception):
    """Validation failure; message names the offending flag. Exit 2."""


def fmt_money(x: float) -> str:
    s = f"{x:.4f}"
    return "0.0000" if s == "-0.0000" else s


def _round4(x: float) -> float:
    return round(x, 4)


def _parse_number(token: str, flag: str) -> float:
    try:
        value = float(token)
    except (TypeError, ValueError):
        raise CliError(f"{flag}: cannot parse number {token!r}") from None
    if not math.isfinite(value):
        raise CliError(f"{flag}: must be finite, got {token!r}")
    return value


def parse_rate(token: str, flag: str) -> DiscountRate:
    """Accept a fraction ('0.2') or a percentage ('20%')."""
    text = str(token).strip()
    scale = 1.0
    if text.endswith("%"):
        text = text[:-1].strip()
        scale = 0.01
    value = _parse_number(text, flag) * scale
    if value < 0:
        raise CliError(f"{flag}: rate must be non-negative, got {token!r}")
    return DiscountRate(value)


def parse_asset(cost_token: str, life_token: str) -> AssetSpec:
    cost = _parse_number(cost_token, "--cost")
    if cost <= 0:
        raise CliError(f"--cost: must be positive, got {cost_token!r}")
    life = _parse_number(life_token, "--life")
    if life <= 0:
        raise CliError(f"--life: must be positive, got {life_token!r}")
    return AssetSpec(cost=cost, lifetime=life)


def parse_age(token: str, asset: AssetSpec, flag: str = "--age") -> float:
    age = _parse_number(token, flag)
    if age < 0 or age > asset.lifetime:
        raise CliError(f"{flag}: out of range [0, {asset.lifetime:g}], got {token!r}")
    return age


def _envelope(command: str, payload: dict, deterministic: bool) -> dict:
    env: dict = {"tool_version": __version__, "command": command}
    if not deterministic:
        env["generated_at"] = datetime.now(timezone.utc).isoformat(timespec="seconds")
    env["payload"] = payload
    return env


def _emit_json(out, command: str, payload: dict, deterministic: bool) -> None:
    json.dump(_envelope(command, payload, deterministic), out, indent=2)
    out.write("\n")


def _emit_csv(out, header: list[str], rows: list[list[str]]) -> None:
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)


def _emit_table(out, header: list[str], rows: list[list[str]]) -> None:
    widths = [
        max(len(header[i]), *(len(r[i]) for r in rows)) if rows else len(header[i])
        for i in range(len(header))
    ]
    out.write("  ".join(h.ljust(widths[i]) for i, h in enumerate(header)).rstrip() + "\n")
    for row in rows:
        out.write("  ".join(c.rjust(widths[i]) for i, c in enumerate(row)) + "\n")


# ---------------------------------------------------------------- commands


def cmd_value(args, out) -> int:
    asset = parse_asset(args.cost, args.life)
    rate = parse_rate(args.rate, "--rate")
    age = parse_age(args.age, asset)
    value = intrinsic_value(asset, rate, age)
    detail = {}
    if args.detail:
        if rate.rate == 0:
            raise CliError("--rate: present and delayed cost diverge at rate 0")
        detail = {
            "present_cost": present_cost(asset, rate).amount,
            "delayed_cost": delayed_present_cost(asset, rate, age).amount,
        }
    if args.format == "json":
        payload = {
            "kind": "intrinsic_value",
            "age": age,
            "amount": _round4(value.amount),
        }
        payload.update({k: _round4(v) for k, v in detail.items()})
        _emit_json(out, "value", payload, args.deterministic)
    elif args.format == "csv":
        header = ["value"] + list(detail)
        _emit_csv(out, header, [[fmt_money(value.amount)] + [fmt_money(v) for v in detail.values()]])
    else:
        out.write(fmt_money(value.amount) + "\n")
        for name, v in detail.items():
            out.write(f"{name}  {fmt_money(v)}\n")
    return 0


def _parse_method(token: str, flag: str) -> Method:
    try:
        return METHOD_TOKENS[token]
    except KeyError:
        raise CliError(
            f"{flag}: unknown method {token!r} (expected one of {', '.join(METHOD_TOKENS)})"
        ) from None


def cmd_schedule(args, out) -> int:
    asset = parse_asset(args.cost, args.life)
    method = _parse_method(args.method, "--method")
    rate = None
    if method is Method.INTRINSIC:
        if args.rate is None:
            raise CliError("--rate: required for the intrinsic method")
        rate = parse_rate(args.rate, "--rate")
    sched = build_schedule(asset, method, rate)
    rows = [
        [str(r.period), fmt_money(r.expense), fmt_money(r.book_value)]
        for r in sched.rows
    ]
    if args.format == "json":
        payload = {
            "method": method.value,
            "asset": {"cost": asset.cost, "lifetime": asset.lifetime},
            "rows": [
                {
                    "period": r.period,
                    "expense": _round4(r.expense),
                    "book_value": _round4(r.book_value),
                }
                for r in sched.rows
            ],
        }
        if rate is not None:
            payload["rate"] = rate.rate
        _emit_json(out, "schedule", payload, args.deterministic)
    elif args.format == "csv":
        _emit_csv(out, ["period", "expense", "book_value"], rows)
    else:
        _emit_table(out, ["period", "expense", "book_value"], rows)
    return 0


def cmd_compare(args, out) -> int:
    asset = parse_asset(args.cost, args.life)
    tokens = [t.strip() for t in args.methods.split(",") if t.strip()]
    if not tokens:
        raise CliError("--methods: at least one method is required")
    methods = [_parse_method(t, "--methods") for t in tokens]
    rate = parse_rate(args.rate, "--rate") if args.rate is not None else None
    if Method.INTRINSIC in methods and rate is None:
        raise CliError("--rate: required when comparing the intrinsic method")
    report = compare_methods(asset, methods, rate)
    periods = range(1, len(report.schedules[0].rows) + 1)
    rows = [
        [str(n)] + [fmt_money(s.rows[n - 1].book_value) for s in report.schedules]
        for n in periods
    ]
    if args.format == "json":
        payload = {
            "asset": {"cost": asset.cost, "lifetime": asset.lifetime},
            "periods": list(periods),
            "book_values": {
                tok: [_round4(r.book_value) for r in s.rows]
                for tok, s in zip(tokens, report.schedules)
            },
        }
        if rate is not None:
            payload["rate"] = rate.rate
        _emit_json(out, "compare", payload, args.deterministic)
    elif args.format == "csv":
        _emit_csv(out, ["period"] + tokens, rows)
    else:
        _emit_table(out, ["period"] + tokens, rows)
    return 0


def cmd_sweep(args, out) -> int:
    asset = parse_asset(args.cost, args.life)
    tokens = [t.strip() for t in args.rates.split(",") if t.strip()]
    if not tokens:
        raise CliError("--rates: at least one rate is required")
    rates = [parse_rate(t, "--rates") for t in tokens]
    report = rate_sweep(asset, rates)
    gaps = [chord_gap(asset, r) for r in rates]
    ages = range(len(report.values[0]))
    rows = [
        [str(a)] + [fmt_money(report.values[i][a]) for i in range(len(rates))]
        for a in ages
    ]
    rows.append(["chord_gap"] + [fmt_money(g) for g in gaps])
    if args.format == "json":
        payload = {
            "asset": {"cost": asset.cost, "lifetime": asset.lifetime},
            "ages": list(ages),
            "rates": [r.rate for r in rates],
            "values": {
                tok: [_round4(v) for v in report.values[i]]
                for i, tok in enumerate(tokens)
            },
            "chord_gap": {tok: _round4(g) for tok, g in zip(tokens, gaps)},
        }
        _emit_json(out, "sweep", payload, args.deterministic)
    elif args.format == "csv":
        _emit_csv(out, ["age"] + tokens, rows)
    else:
        _emit_table(out, ["age"] + tokens, rows)
    return 0


def cmd_surplus(args, out) -> int:
    asset = parse_asset(args.cost, args.life)
    seller = parse_rate(args.seller_rate, "--seller-rate")
    buyer = parse_rate(args.buyer_rate, "--buyer-rate")
    age = parse_age(args.age, asset)
    buyer_value = intrinsic_value(asset, buyer, age).amount
    seller_value = intrinsic_value(asset, seller, age).amount
    surplus = trade_surplus(asset, age, seller, buyer)
    if args.format == "json":
        payload = {
            "age": age,
            "seller_rate": seller.rate,
            "buyer_rate": buyer.rate,
            "buyer_value": _round4(buyer_value),
            "seller_value": _round4(seller_value),
            "surplus": _round4(surplus),
        }
        _emit_json(out, "surplus", payload, args.deterministic)
    elif args.format == "csv":
        _emit_csv(
            out,
            ["buyer_value", "seller_value", "surplus"],
            [[fmt_money(buyer_value), fmt_money(seller_value), fmt_money(surplus)]],
        )
    else:
        out.write(f"buyer_value   {fmt_money(buyer_value)}\n")
        out.write(f"seller_value  {fmt_money(seller_value)}\n")
        out.write(f"surplus       {fmt_money(surplus)}\n")
    return 0


# ------------------------------------------------------------------ batch

REGISTRY_FIELDS = ("id", "cost", "lifetime", "rate", "age")


def _load_registry(path: Path) -> list[dict]:
    """Rows as dicts with string values; format sniffed by extension."""
    suffix = path.suffix.lower()
    if suffix == ".csv":
        with path.open(newline="") as fh:
            reader = csv.DictReader(fh)
            header = reader.fieldnames or []
            missing = [f for f in REGISTRY_FIELDS[:4] if f not in header]
            if missing:
                raise CliError(
                    f"--input: registry header missing column(s) {', '.join(missing)}"
                )
            return list(reader)
    if suffix == ".json":
        try:
            records = json.loads(path.read_text())
        except json.JSONDecodeError as exc:
            raise CliError(f"--input: invalid JSON registry ({exc})") from None
        if not isinstance(records, list) or not all(isinstance(r, dict) for r in records):
            raise CliError("--input: JSON registry must be an array of objects")
        return records
    raise CliError(f"--input: unsupported registry extension {suffix!r} (use .csv or .json)")


def _batch_record(record: dict) -> dict:
    """Validate one registry record and compute its value and schedule."""
    cost = _parse_number(str(record.get("cost", "")), "cost")
    lifetime = _parse_number(str(record.get("lifetime", "")), "lifetime")
    if cost <= 0:
        raise CliError(f"cost must be positive, got {record.get('cost')!r}")
    if lifetime <= 0:
        raise CliError(f"lifetime must be positive, got {record.get('lifetime')!r}")
    asset = AssetSpec(cost=cost, lifetime=lifetime)
    rate = parse_rate(str(record.get("rate", "")), "rate")
    age_token = record.get("age")
    if age_token in (None, ""):
        age = 0.0
    else:
        age = _parse_number(str(age_token), "age")
        check_age(asset, age)
    value = intrinsic_value(asset, rate, age).amount
    sched = build_schedule(asset, Method.INTRINSIC, rate)
    return {
        "id": record["id"],
        "age": age,
        "value": _round4(value),
        "schedule": [
            {
                "period": r.period,
                "expense": _round4(r.expense),
                "book_value": _round4(r.book_value),
            }
            for r in sched.rows
        ],
    }


def cmd_batch(args, out) -> int:
    path = Path(args.input)
    try:
        records = _load_registry(path)
    except OSError as exc:
        raise CliError(f"--input: cannot read {args.input!r} ({exc.strerror or exc})") from None

    entries: list[dict] = []
    errors: list[dict] = []
    seen: set[str] = set()
    for idx, record in enumerate(records, start=1):
        rec_id = str(record.get("id") or "").strip()
        if not rec_id:
            errors.append({"id": f"<row {idx}>", "reason": "missing or empty id"})
            continue
        if rec_id in seen:
            errors.append({"id": rec_id, "reason": "duplicate id"})
            continue
        seen.add(rec_id)
        try:
            entries.append(_batch_record({**record, "id": rec_id}))
        except (CliError, InvalidInput) as exc:
            errors.append({"id": rec_id, "reason": str(exc)})

    sink = open(args.output, "w") if args.output else out
    try:
        if args.format == "csv":
            rows = []
            for e in entries:
                for r in e["schedule"]:
                    rows.append(
                        [
                            e["id"],
                            fmt_money(e["value"]),
                            str(r["period"]),
                            fmt_money(r["expense"]),
                            fmt_money(r["book_value"]),
                        ]
                    )
            _emit_csv(sink, ["id", "value", "period", "expense", "book_value"], rows)
            for err in errors:
                print(f"{err['id']}: {err['reason']}", file=sys.stderr)
        else:
            _emit_json(sink, "batch", {"entries": entries, "errors": errors}, args.deterministic)
    finally:
        if args.output:
            sink.close()
    return 3 if errors else 0


# ------------------------------------------------------------------ parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("table", "csv", "json"), default="table")
    common.add_argument(
        "--deterministic",
        action="store_true",
        help="omit the timestamp so identical runs are byte-identical",
    )

    parser = argparse.ArgumentParser(
        prog="assetval",
        description="Intrinsic (time-value-of-money) valuation and depreciation of assets",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("value", parents=[common], help="intrinsic value at an age")
    p.add_argument("--cost", required=True)
    p.add_argument("--life", required=True)
    p.add_argument("--rate", required=True)
    p.add_argument("--age", default="0")
    p.add_argument("--detail", action="store_true", help="also report present and delayed cost")
    p.set_defaults(handler=cmd_value)

    p = sub.add_parser("schedule", parents=[common], help="per-period depreciation schedule")
    p.add_argument("--cost", required=True)
    p.add_argument("--life", required=True)
    p.add_argument("--rate")
    p.add_argument("--method", required=True, help="intrinsic, sl, ddb or syd")
    p.set_defaults(handler=cmd_schedule)

    p = sub.add_parser("compare", parents=[common], help="book values across methods")
    p.add_argument("--cost", required=True)
    p.add_argument("--life", required=True)
    p.add_argument("--rate")
    p.add_argument("--methods", required=True, help="comma list of intrinsic, sl, ddb, syd")
    p.set_defaults(handler=cmd_compare)

    p = sub.add_parser("sweep", parents=[common], help="intrinsic value across discount rates")
    p.add_argument("--cost", required=True)
    p.add_argument("--life", required=True)
    p.add_argument("--rates", required=True, help="comma list of per-period rates")
    p.set_defaults(handler=cmd_sweep)

    p = sub.add_parser("surplus", parents=[common], help="buyer/seller valuation gap")
    p.add_argument("--cost", required=True)
    p.add_argument("--life", required=True)
    p.add_argument("--age", required=True)
    p.add_argument("--seller-rate", required=True)
    p.add_argument("--buyer-rate", required=True)
    p.set_defaults(handler=cmd_surplus)

    p = sub.add_parser("batch", parents=[common], help="process an asset registry file")
    p.add_argument("--input", required=True, help="CSV or JSON registry of assets")
    p.add_argument("--output", help="report file (default: stdout)")
    p.set_defaults(handler=cmd_batch)

    return parser


def main(argv: list[str] | None = None, out: io.TextIOBase | None = None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args, out)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except InvalidInput as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # noqa: BLE001 - last-resort guard for exit code 1
        print(f"internal error: {exc}", file=sys.stderr)
        return 1


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
