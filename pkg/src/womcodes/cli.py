"""``womc``: command-line front end.

Exit codes: 0 success, 2 validation error (including write-once
violations), 3 no good matrix / no solution, 4 I/O or file-format error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import f2k, fileformat, lookupfree, rates, rs_code, stuckat, womcode2, womcode3
from .errors import FormatError, NoGoodMatrix, NoSolution, ValidationError
from .f2linalg import BitVector
from .ranking import bounded_subset_rank, bounded_subset_unrank, perm_rank, perm_unrank
from .wozencraft import WozParams, verify_ensemble

EXIT_OK, EXIT_INVALID, EXIT_NO_MATRIX, EXIT_IO = 0, 2, 3, 4


def _read_text(path) -> str:
    if path is None:
        raise ValidationError("this command needs a message/payload file")
    return Path(path).read_text()


def _ints(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split()]
    except ValueError:
        raise ValidationError("expected whitespace-separated decimal integers") from None


def _save(args, img):
    fileformat.write_image(args.out or args.image, img)


def _emit_report(report: rates.RateReport, as_json: bool):
    if as_json:
        print(json.dumps(report.as_dict(), sort_keys=True))
        return
    print(f"scheme={report.scheme}")
    for i, bits in enumerate(report.round_bits, 1):
        print(f"round{i}_bits={bits:.6f}")
    print(f"cells={report.n_cells}")
    print(f"rate={report.rate:.6f}")
    print(f"reference={report.reference:.6f}")
    print(f"gap={report.gap:.6f}")
    for key, val in report.extra.items():
        print(f"{key}={val}")


def _parse_pair(text: str) -> tuple[int, int]:
    try:
        k, b = (int(v) for v in text.split(","))
    except ValueError:
        raise ValidationError(f"expected k,b, got {text!r}") from None
    return k, b


# commands

def cmd_field_table(args):
    for k, line in enumerate(f2k.field_table(), 1):
        print(f"{k}: {line}")


def cmd_verify_ensemble(args):
    p = WozParams(args.k, args.b)
    ok = True
    for r in verify_ensemble(p):
        ok &= r.passed
        print(f"{'PASS' if r.passed else 'FAIL'} {r.name}: checked={r.checked} worst={r.worst} bound={r.bound}")
    return EXIT_OK if ok else 1


def cmd_analyze(args):
    if args.what == "capacity":
        opt = rates.maximize_capacity2()
        table = rates.curve_table(rates.capacity2_curve, 0.0, 1.0, args.steps)
        out = {"capacity": rates.wom_capacity(args.t), "p": opt.p, "value": opt.value}
    elif args.what == "equal-rate":
        opt = rates.equal_rate_point()
        table = rates.curve_table(lambda p: rates.entropy(p) - (1 - p), 0.0, 0.5, args.steps)
        out = {"p": opt.p, "value": opt.value}
    else:
        if args.variant is None:
            raise ValidationError("rate3 needs --variant")
        opt = rates.maximize_rate3(args.variant)
        table = rates.curve_table(lambda p: rates.rate3(args.variant, p), 0.0, 1.0, args.steps)
        out = {"variant": args.variant, "p": opt.p, "value": opt.value}
    if args.json:
        out["curve"] = [[c.p, c.value] for c in table]
        print(json.dumps(out, sort_keys=True))
        return
    for key, val in out.items():
        print(f"# {key}={val:.9f}" if isinstance(val, float) else f"# {key}={val}")
    print("p,value")
    for c in table:
        print(f"{c.p:.6f},{c.value:.9f}")


def cmd_rs(args):
    if args.image:
        if args.action == "decode":
            print("".join(str(s) for s in rs_code.read(fileformat.read_image(args.image))))
            return
        word = womcode3.parse_word(_read_text(args.message))
        if args.action == "encode1":
            img = rs_code.write1(word)
        else:
            img = rs_code.write2(fileformat.read_image(args.image), word)
        _save(args, img)
        return
    vals = args.values
    if args.action == "encode1" and len(vals) == 1:
        print(rs_code.triplet_str(rs_code.encode1(int(vals[0]))))
    elif args.action == "encode2" and len(vals) == 2:
        print(rs_code.triplet_str(rs_code.encode2(rs_code.triplet(vals[0]), int(vals[1]))))
    elif args.action == "decode" and len(vals) == 1:
        print(rs_code.decode(rs_code.triplet(vals[0])))
    else:
        raise ValidationError("usage: rs encode1 SYMBOL | rs encode2 TRIPLET SYMBOL | rs decode TRIPLET")


def cmd_wom2(args):
    if args.action == "rate":
        _emit_report(womcode2.rate(womcode2.Wom2Params.parse(args.params)), args.json)
        return
    if args.action == "encode1":
        p = womcode2.Wom2Params.parse(args.params)
        ranks = _ints(_read_text(args.message))
        subsets = [bounded_subset_unrank(r, p.block, p.smax) for r in ranks]
        _save(args, womcode2.encode1(p, subsets))
        return
    img = fileformat.read_image(args.image)
    p = womcode2.params_of(img)
    if args.params and womcode2.Wom2Params.parse(args.params) != p:
        raise ValidationError("--params disagree with the image header")
    if args.action == "encode2":
        _save(args, womcode2.encode2(p, img, BitVector.from_str(_read_text(args.message))))
    elif img.round == 1:
        print("\n".join(str(bounded_subset_rank(S, p.smax)) for S in womcode2.decode1(img)))
    else:
        print(womcode2.decode2(img))


def cmd_wom3(args):
    if args.action == "write1":
        if None in (args.variant, args.m, args.z, args.chunk):
            raise ValidationError("write1 needs --variant, --m, --z and --chunk")
        p = womcode3.Wom3Params(args.m, args.z, args.variant, *_parse_pair(args.chunk))
        _save(args, womcode3.write1(p, womcode3.parse_word(_read_text(args.message))))
        return
    img = fileformat.read_image(args.image)
    p = womcode3.params_of(img)
    if args.action == "write2":
        _save(args, womcode3.write2(p, img, womcode3.parse_word(_read_text(args.message))))
    elif args.action == "write3":
        out, written = womcode3.write3(p, img, BitVector.from_str(_read_text(args.message)))
        _save(args, out)
        print(f"written_bits={written}")
    elif args.action == "capacity":
        print(womcode3.capacity3(img))
    elif img.round == 1:
        print("".join(map(str, womcode3.read1(img))))
    elif img.round == 2:
        print("".join(map(str, womcode3.read2(img))))
    else:
        print(womcode3.read3(img))


def _lf_params(args) -> lookupfree.LookupFreeParams:
    if args.m is None or args.w is None:
        raise ValidationError("--m and --w are required")
    if args.alpha is None:
        return lookupfree.lf_search(args.m, args.w)[1]
    try:
        alpha = int(args.alpha, 16)
    except ValueError:
        raise ValidationError(f"--alpha must be hexadecimal, got {args.alpha!r}") from None
    return lookupfree.lf_build(args.m, args.w, lookupfree.default_matrix(args.m, args.w, alpha))


def cmd_lookupfree(args):
    if args.action == "search":
        alpha, p = lookupfree.lf_search(args.m, args.w)
        print(f"alpha={alpha:x}")
        print(f"sigma={p.sigma}")
        print(f"sigma_g={p.sigma_g}")
        return
    if args.action == "build":
        p = _lf_params(args)
        if not args.json:
            print(f"sigma={p.sigma}")
            print(f"sigma_g={p.sigma_g}")
        _emit_report(lookupfree.lf_rate(p), args.json)
        return
    if args.action == "encode1":
        p = _lf_params(args)
        (r,) = _ints(_read_text(args.message))
        _save(args, lookupfree.lf_encode1(p, perm_unrank(r, p.sigma)))
        return
    img = fileformat.read_image(args.image)
    p = lookupfree.params_of(img)
    if args.action == "encode2":
        xs = [lookupfree.int_to_payload(p, v) for v in _ints(_read_text(args.message))]
        _save(args, lookupfree.lf_encode2(p, img, xs))
    elif img.round == 1:
        print(perm_rank(lookupfree.lf_decode1(img)))
    else:
        print("\n".join(str(lookupfree.payload_to_int(p, x)) for x in lookupfree.lf_decode2(img)))


def parse_stuck(text: str, length: int) -> stuckat.DefectPattern:
    frozen = {}
    for n, line in enumerate(text.splitlines(), 1):
        line = line.split("#")[0].strip()
        if not line:
            continue
        try:
            idx, bit = (int(v) for v in line.split("="))
        except ValueError:
            raise ValidationError(f"stuck file line {n}: expected index=bit") from None
        if bit not in (0, 1) or not 0 <= idx < length or idx in frozen:
            raise ValidationError(f"stuck file line {n}: bad entry {line!r}")
        frozen[idx] = bit
    return stuckat.DefectPattern.from_dict(length, frozen)


def cmd_defect(args):
    if args.action == "read":
        print(stuckat.read(fileformat.read_image(args.image)))
        return
    if args.k is None or args.b is None:
        raise ValidationError("write needs --k and --b")
    p = WozParams(args.k, args.b)
    payload = BitVector.from_str(_read_text(args.payload))
    chunks = args.chunks or max(1, payload.length // p.k)
    defects = parse_stuck(_read_text(args.stuck), chunks * p.n)
    _save(args, stuckat.write(p, chunks, defects, payload))


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="womc", description="Write-once-memory coding toolkit")
    sub = ap.add_subparsers(dest="command", required=True)

    s = sub.add_parser("field-table", help="print the GF(2^k) modulus table")
    s.set_defaults(func=cmd_field_table)

    s = sub.add_parser("verify-ensemble", help="exhaustively check the Wozencraft counting claims")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--b", type=int, required=True)
    s.set_defaults(func=cmd_verify_ensemble)

    s = sub.add_parser("analyze", help="closed-form rates and their maxima")
    s.add_argument("what", choices=["capacity", "equal-rate", "rate3"])
    s.add_argument("--variant", choices=rates.VARIANTS)
    s.add_argument("--t", type=int, default=2, help="number of writes for the capacity figure")
    s.add_argument("--steps", type=int, default=100)
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_analyze)

    s = sub.add_parser("rs", help="Rivest-Shamir code (single triplets or whole images)")
    s.add_argument("action", choices=["encode1", "encode2", "decode"])
    s.add_argument("values", nargs="*")
    s.add_argument("--image")
    s.add_argument("--message")
    s.add_argument("--out")
    s.set_defaults(func=cmd_rs)

    s = sub.add_parser("wom2", help="capacity-approaching two-write code")
    s.add_argument("action", choices=["encode1", "encode2", "decode", "rate"])
    s.add_argument("--params", help="k,b,t,g,smax")
    s.add_argument("--image")
    s.add_argument("--message")
    s.add_argument("--out")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_wom2)

    s = sub.add_parser("wom3", help="three-write code")
    s.add_argument("action", choices=["write1", "write2", "write3", "read", "capacity"])
    s.add_argument("--variant", choices=womcode3.VARIANTS)
    s.add_argument("--m", type=int)
    s.add_argument("--z", type=int)
    s.add_argument("--chunk", help="k,b of the round-3 chunks")
    s.add_argument("--image")
    s.add_argument("--message")
    s.add_argument("--out")
    s.set_defaults(func=cmd_wom3)

    s = sub.add_parser("lookupfree", help="table-free two-write code")
    s.add_argument("action", choices=["build", "search", "encode1", "encode2", "decode"])
    s.add_argument("--m", type=int)
    s.add_argument("--w", type=int)
    s.add_argument("--alpha", help="Wozencraft seed in hex (default: best seed found by search)")
    s.add_argument("--image")
    s.add_argument("--message")
    s.add_argument("--out")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_lookupfree)

    s = sub.add_parser("defect", help="memory with stuck-at cells")
    s.add_argument("action", choices=["write", "read"])
    s.add_argument("--k", type=int)
    s.add_argument("--b", type=int)
    s.add_argument("--chunks", type=int)
    s.add_argument("--stuck")
    s.add_argument("--payload")
    s.add_argument("--image")
    s.add_argument("--out")
    s.set_defaults(func=cmd_defect)
    return ap


_NEEDS_IMAGE = {
    "rs": set(),
    "wom2": {"encode1", "encode2", "decode"},
    "wom3": {"write1", "write2", "write3", "read", "capacity"},
    "lookupfree": {"encode1", "encode2", "decode"},
    "defect": {"write", "read"},
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command in _NEEDS_IMAGE and args.action in _NEEDS_IMAGE[args.command] and not args.image:
        print(f"womc: error: {args.command} {args.action} needs --image", file=sys.stderr)
        return EXIT_INVALID
    try:
        code = args.func(args)
    except ValidationError as e:
        print(f"womc: error: {e}", file=sys.stderr)
        return EXIT_INVALID
    except (NoGoodMatrix, NoSolution) as e:
        print(f"womc: no good matrix: {e}", file=sys.stderr)
        return EXIT_NO_MATRIX
    except (FormatError, OSError) as e:
        print(f"womc: cannot read or write image: {e}", file=sys.stderr)
        return EXIT_IO
    return code or EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
