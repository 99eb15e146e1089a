"""Command-line front end.

JSON in, JSON out, everything seeded.  Exit codes: 0 when the requested
object was found/validated, 1 when a search was exhaustively negative, a
claim failed to verify, or separation does not hold, 2 on usage errors,
malformed input, or degenerate (non-general-position) outcomes.
"""

import argparse
import csv
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from tvpm import colored as colored_mod
from tvpm import core, gen, search
from tvpm.linalg import format_rat, format_vec, parse_rat
from tvpm.sarkaria import (
    DegenerateGamma,
    PMCertificate,
    SeparationViolated,
    tverberg_pm,
)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2


class UsageError(Exception):
    pass


def _read_json(path):
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as e:
        raise UsageError("cannot read JSON from %s: %s" % (path, e))


def _emit(obj, out=None):
    text = core.dump_json(obj)
    if out and out != "-":
        with open(out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _parse_m(text):
    if text is None or text.strip() == "":
        return frozenset()
    try:
        return frozenset(int(tok) for tok in text.split(","))
    except ValueError:
        raise UsageError("--m expects a comma-separated index list")


def _m_from_args_or_input(args, obj):
    if args.m is not None:
        return _parse_m(args.m)
    if isinstance(obj, dict) and "m" in obj:
        return frozenset(obj["m"])
    return frozenset()


def cmd_gen(args):
    config = gen.random_config(args.d, args.r, args.seed)
    out = core.config_to_json(config)
    out["seed"] = args.seed
    _emit(out, args.out)
    return EXIT_OK


def cmd_example(args):
    eps = parse_rat(args.eps)
    builder = gen.example1 if args.kind == 1 else gen.example2
    config, m_set = builder(args.d, args.r, eps, args.seed)
    out = core.config_to_json(config, m_set=m_set)
    out["seed"] = args.seed
    out["eps"] = format_rat(eps)
    _emit(out, args.out)
    return EXIT_OK


def _trace_writer(step, choice, w, normsq):
    line = {
        "step": step,
        "choice": list(choice),
        "w": format_vec(w),
        "normsq": format_rat(normsq),
    }
    print(json.dumps(line), file=sys.stderr)


def cmd_solve(args):
    obj = _read_json(args.input)
    config = core.config_from_json(obj)
    m_set = _m_from_args_or_input(args, obj)
    trace = _trace_writer if args.trace else None
    result = tverberg_pm(config, m_set,
                         check_sep=not args.no_separation_check,
                         trace=trace)
    if isinstance(result, PMCertificate):
        out = core.certificate_to_json(
            result.cert, result.partition,
            alternative=result.alternative, proper=result.proper)
        out["m"] = sorted(m_set)
        if result.separation_warning is not None:
            out["separation_warning"] = result.separation_warning
        _emit(out)
        return EXIT_OK
    if isinstance(result, SeparationViolated):
        _emit({
            "schema": core.SCHEMA,
            "result": "separation_violated",
            "common_point": format_vec(result.common_point),
            "part": list(result.part),
            "m_weights": {str(i): format_rat(w)
                          for i, w in sorted(result.m_weights.items())},
            "rest_weights": {str(i): format_rat(w)
                             for i, w in sorted(result.rest_weights.items())},
        })
        return EXIT_NEGATIVE
    assert isinstance(result, DegenerateGamma)
    _emit({"schema": core.SCHEMA, "result": "degenerate_gamma"})
    return EXIT_USAGE


def cmd_search(args):
    obj = _read_json(args.input)
    config = core.config_from_json(obj)
    if (args.k is None) == (args.prescribe is None):
        raise UsageError("search needs exactly one of --k and --prescribe")
    if args.k is not None:
        res = search.search_exact_k(config, args.k)
    else:
        res = search.search_prescribed(config, _parse_m(args.prescribe))
    if res.found:
        out = core.certificate_to_json(res.cert, res.partition)
        out["partitions_scanned"] = res.scanned
        out["degenerate_skipped"] = res.skipped
        _emit(out)
        return EXIT_OK
    _emit({
        "schema": core.SCHEMA,
        "result": "not_found",
        "partitions_scanned": res.scanned,
        "degenerate_skipped": res.skipped,
    })
    return EXIT_NEGATIVE


def cmd_spectrum(args):
    obj = _read_json(args.input)
    config = core.config_from_json(obj)
    res = search.radon_spectrum(config)
    _emit({
        "schema": core.SCHEMA,
        "result": "spectrum",
        "achievable": sorted(res.achievable),
        "bound": (config.d + 2) // 2,
        "partitions_scanned": res.scanned,
        "degenerate_skipped": res.skipped,
    })
    return EXIT_OK


def cmd_separation(args):
    obj = _read_json(args.input)
    config = core.config_from_json(obj)
    m_set = _m_from_args_or_input(args, obj)
    res = search.check_separation(config, m_set)
    if isinstance(res, search.Separated):
        _emit({
            "schema": core.SCHEMA,
            "result": "separated",
            "normal": format_vec(res.normal),
            "offset": format_rat(res.offset),
        })
        return EXIT_OK
    _emit({
        "schema": core.SCHEMA,
        "result": "not_separated",
        "point": format_vec(res.point),
        "m_weights": {str(i): format_rat(w)
                      for i, w in sorted(res.m_weights.items())},
        "rest_weights": {str(i): format_rat(w)
                         for i, w in sorted(res.rest_weights.items())},
    })
    return EXIT_NEGATIVE


def cmd_colored(args):
    obj = _read_json(args.input)
    cc = colored_mod.classes_from_json(obj)
    m_set = _m_from_args_or_input(args, obj)
    trace = _trace_writer if args.trace else None
    result = colored_mod.colored_tverberg_pm(cc, m_set, trace=trace)
    if isinstance(result, DegenerateGamma):
        _emit({"schema": core.SCHEMA, "result": "degenerate_gamma"})
        return EXIT_USAGE
    out = colored_mod.colorful_to_json(result)
    out["m"] = sorted(m_set)
    _emit(out)
    return EXIT_OK


def cmd_verify(args):
    cert_obj = _read_json(args.cert)
    input_obj = _read_json(args.input)
    kind = cert_obj.get("kind", "certificate")
    try:
        if kind == "colored_certificate":
            cc = colored_mod.classes_from_json(input_obj)
            cp = colored_mod.colorful_from_json(cert_obj)
            ok, problems = colored_mod.verify_colorful(cc, cp)
        else:
            config = core.config_from_json(input_obj)
            cert, partition, _ = core.certificate_from_json(cert_obj)
            ok, problems = core.verify_certificate(config, partition, cert)
    except ValueError as e:
        raise UsageError(str(e))
    if ok:
        _emit({"schema": core.SCHEMA, "result": "valid"})
        return EXIT_OK
    _emit({"schema": core.SCHEMA, "result": "invalid", "problems": problems})
    return EXIT_NEGATIVE


def _batch_trial(task):
    mode, d, r, param, seed = task
    config = gen.random_config(d, r, seed)
    if mode == "search-k":
        res = search.search_exact_k(config, param)
        if res.found:
            return ("found", "negatives=%d" % len(res.cert.negatives))
        return ("not_found", "scanned=%d" % res.scanned)
    m_set = gen.separated_subset(config, param, seed + 1000003)
    result = tverberg_pm(config, m_set, check_sep=False)
    if isinstance(result, PMCertificate):
        return ("certificate",
                "alternative=%s negatives=%d"
                % (result.alternative, len(result.cert.negatives)))
    if isinstance(result, SeparationViolated):
        return ("separation_violated", "")
    return ("degenerate", "")


def cmd_batch(args):
    if args.mode == "search-k":
        if args.k is None:
            raise UsageError("batch --mode search-k needs --k")
        param = args.k
    else:
        if args.m_size is None:
            raise UsageError("batch --mode solve needs --m-size")
        param = args.m_size
    tasks = [
        (args.mode, args.d, args.r, param, args.seed_base + trial)
        for trial in range(args.trials)
    ]
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            outcomes = list(pool.map(_batch_trial, tasks))
    else:
        outcomes = [_batch_trial(t) for t in tasks]
    writer = csv.writer(sys.stdout)
    writer.writerow(["trial", "seed", "d", "r", "mode", "param",
                     "outcome", "detail"])
    counts = {}
    for trial, (task, (outcome, detail)) in enumerate(zip(tasks, outcomes)):
        writer.writerow([trial, task[4], args.d, args.r, args.mode, param,
                         outcome, detail])
        counts[outcome] = counts.get(outcome, 0) + 1
    summary = " ".join("%s=%d" % kv for kv in sorted(counts.items()))
    print("# summary: %s" % summary, file=sys.stderr)
    return EXIT_OK


def build_parser():
    p = argparse.ArgumentParser(
        prog="tvpm",
        description="Exact Tverberg partitions with prescribed signs.")
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("gen", help="seeded random configuration")
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--r", type=int, required=True)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--out", default=None)
    sp.set_defaults(func=cmd_gen)

    sp = sub.add_parser("example", help="cluster-built instances")
    sp.add_argument("--kind", type=int, choices=(1, 2), required=True)
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--r", type=int, required=True)
    sp.add_argument("--eps", default="1/100")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--out", default=None)
    sp.set_defaults(func=cmd_example)

    sp = sub.add_parser("solve", help="constructive solver")
    sp.add_argument("--input", default="-")
    sp.add_argument("--m", default=None,
                    help="comma-separated indices; default: input's m")
    sp.add_argument("--no-separation-check", action="store_true")
    sp.add_argument("--trace", action="store_true",
                    help="per-pivot JSON lines on stderr")
    sp.set_defaults(func=cmd_solve)

    sp = sub.add_parser("search", help="exhaustive scan")
    sp.add_argument("--input", default="-")
    sp.add_argument("--k", type=int, default=None)
    sp.add_argument("--prescribe", default=None)
    sp.set_defaults(func=cmd_search)

    sp = sub.add_parser("spectrum", help="achievable negative counts, r=2")
    sp.add_argument("--input", default="-")
    sp.set_defaults(func=cmd_spectrum)

    sp = sub.add_parser("separation", help="hull disjointness test")
    sp.add_argument("--input", default="-")
    sp.add_argument("--m", default=None)
    sp.set_defaults(func=cmd_separation)

    sp = sub.add_parser("colored", help="per-class solver")
    sp.add_argument("--input", default="-")
    sp.add_argument("--m", default=None,
                    help="class indices; default: input's m")
    sp.add_argument("--trace", action="store_true")
    sp.set_defaults(func=cmd_colored)

    sp = sub.add_parser("verify", help="re-check a certificate")
    sp.add_argument("--input", default="-",
                    help="configuration (or classes) JSON")
    sp.add_argument("--cert", required=True)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("batch", help="seeded experiment driver, CSV out")
    sp.add_argument("--mode", choices=("search-k", "solve"), required=True)
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--r", type=int, required=True)
    sp.add_argument("--trials", type=int, required=True)
    sp.add_argument("--k", type=int, default=None)
    sp.add_argument("--m-size", type=int, default=None)
    sp.add_argument("--seed-base", type=int, default=0)
    sp.add_argument("--jobs", type=int, default=1)
    sp.set_defaults(func=cmd_batch)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as e:
        print("error: %s" % e, file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, colored_mod.CapacityError) as e:
        print("error: %s" % e, file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
