"""Batch driver: run identity suites and scenario verifications.

Exit codes: 0 all checks pass, 1 any check fails, 2 usage or config error.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import dims, em, fields as fl, metric as mt, scenarios as sc, \
    splitting as sp, verify
from .dual import real
from .verify import Report, VerifyConfig


def _build_parser():
    p = argparse.ArgumentParser(prog="relsplit",
                                description="numerical verification of "
                                "space-time splitting identities")
    sub = p.add_subparsers(dest="command", required=True)

    pv = sub.add_parser("verify", help="run identity suites")
    pv.add_argument("--suite", action="append", default=None,
                    help="suite name (repeatable); default: all")
    pv.add_argument("--seed", type=int, default=None)
    pv.add_argument("--points", type=int, default=None)
    pv.add_argument("--tol", action="append", default=None,
                    metavar="SUITE=VALUE",
                    help="override every tolerance in a suite")
    pv.add_argument("--config", default=None, help="JSON config file")
    pv.add_argument("--out", default=None, help="write the report here")

    ps = sub.add_parser("scenario", help="scenario tables and profiles")
    ps.add_argument("name", choices=["rotating", "schiff", "minkowski",
                                     "expanding"])
    ps.add_argument("--omega", type=float, default=0.3)
    ps.add_argument("--L", type=float, default=1.0)
    ps.add_argument("--c0", type=float, default=1.0)
    ps.add_argument("--Q", type=float, default=1.0)
    ps.add_argument("--R1", type=float, default=0.2)
    ps.add_argument("--R2", type=float, default=0.4)
    ps.add_argument("--R", type=float, default=0.8)
    ps.add_argument("--order", choices=["zeroth", "exact"], default="exact")
    ps.add_argument("--samples", type=int, default=40)
    ps.add_argument("--out", default=None, help="write the CSV table here")

    pd = sub.add_parser("dims", help="physical-dimension audit")
    pd.add_argument("action", choices=["check"])
    pd.add_argument("--seed", type=int, default=7)
    return p


def _load_config(args) -> VerifyConfig:
    raw = {}
    if args.config:
        try:
            with open(args.config) as f:
                raw = json.load(f)
        except (OSError, json.JSONDecodeError) as exc:
            raise UsageError(f"cannot read config: {exc}")
    if args.suite:
        raw["suites"] = args.suite
    if args.seed is not None:
        raw["seed"] = args.seed
    if args.points is not None:
        raw["points"] = args.points
    if args.tol:
        tols = dict(raw.get("tolerances", {}))
        for item in args.tol:
            if "=" not in item:
                raise UsageError(f"bad --tol {item!r}, want SUITE=VALUE")
            k, v = item.split("=", 1)
            try:
                tols[k] = float(v)
            except ValueError:
                raise UsageError(f"bad tolerance value in {item!r}")
        raw["tolerances"] = tols
    known = {f for f in VerifyConfig.__dataclass_fields__}
    bad = set(raw) - known
    if bad:
        raise UsageError(f"unknown config keys: {sorted(bad)}")
    try:
        cfg = VerifyConfig(**raw)
    except (TypeError, ValueError) as exc:
        raise UsageError(str(exc))
    for s in cfg.suites or []:
        if s not in verify.SUITES:
            raise UsageError(
                f"unknown suite {s!r}; valid: {', '.join(verify.SUITES)}")
    return cfg


class UsageError(Exception):
    pass


def _emit_report(report: Report, out_path) -> None:
    doc = report.as_dict()
    text = json.dumps(doc, indent=1, sort_keys=True)
    if out_path:
        with open(out_path, "w") as f:
            f.write(text + "\n")
    else:
        print(text)
    for r in report.records:
        status = "PASS" if r.passed else "FAIL"
        print(f"{status} {r.suite}.{r.check}: |res| = {r.residual:.3e} "
              f"(tol {r.tol:.1e})  [{r.anchor}]", file=sys.stderr)


def cmd_verify(args) -> int:
    cfg = _load_config(args)
    report = verify.run_suites(cfg)
    _emit_report(report, args.out)
    return 0 if report.passed else 1


def _csv_write(rows, header, out_path):
    lines = [",".join(header)]
    for row in rows:
        lines.append(",".join(f"{v:.12e}" if isinstance(v, float) else str(v)
                              for v in row))
    text = "\n".join(lines)
    if out_path:
        with open(out_path, "w") as f:
            f.write(text + "\n")
    else:
        print(text)


def cmd_scenario(args) -> int:
    if args.name in ("rotating", "schiff") and args.omega * args.R >= args.c0:
        raise UsageError("omega R >= c0: the domain reaches the light "
                         "cylinder; shrink R or omega")
    ns = args.samples
    if args.name == "rotating":
        scn = sc.scenario_rotating(args.omega, args.L, args.c0)
        obs = mt.lapse_shift(scn.structure, scn.metric)
        kin = mt.kinematics(scn.structure, scn.metric, scn.c0, obs)
        Om = sp.curvature_omega(scn.structure)
        rows = []
        rmin, rmax = scn.box.lows[1], scn.box.highs[1]
        for i in range(ns):
            r = rmin + (rmax - rmin) * i / (ns - 1)
            p = [0.0, r, 0.3, 0.1]
            d_om = real(Om.at(p).comp(0, 1))
            o_om = real(scn.oracles["curvature"].at(p).comp(0, 1))
            d_eta = real(kin.eta.at(p).comp(0, 1))
            o_eta = real(scn.oracles["eta"].at(p).comp(0, 1))
            d_n = real(obs.lapse.comps_fn(p)[0])
            o_n = real(scn.oracles["lapse"].comps_fn(p)[0])
            rows.append((r, d_om, o_om, abs(d_om - o_om),
                         d_eta, o_eta, abs(d_eta - o_eta),
                         d_n, o_n, abs(d_n - o_n)))
        _csv_write(rows, ["r", "Om_rphi", "Om_rphi_oracle", "Om_abs_err",
                          "eta_rphi", "eta_rphi_oracle", "eta_abs_err",
                          "lapse", "lapse_oracle", "lapse_abs_err"],
                   args.out)
        worst = max(max(row[3], row[6], row[9]) for row in rows)
        print(f"max |derived - oracle| = {worst:.3e}", file=sys.stderr)
        return 0 if worst < 1e-10 else 1

    if args.name == "schiff":
        scn = sc.scenario_schiff_solution(args.Q, args.R1, args.R2,
                                          args.omega, args.L, args.c0,
                                          R=args.R)
        red = scn.reduced
        pick = {"zeroth": ("e0", "d0"), "exact": ("e", "d")}[args.order]
        rows = []
        shell = 0.025 * args.R1
        for i in range(ns):
            r = 0.03 + (args.R - 0.04) * i / (ns - 1)
            p = [0.0, r, 0.0, 0.0]
            if abs(r - args.R1) < shell or abs(r - args.R2) < shell:
                continue
            e_r = real(red[pick[0]].at(p).comps[0])
            d_z = real(red[pick[1]].at(p).comps[1])
            b_r = real(red["b"].at(p).comps[0])
            h_z = real(red["h"].at(p).comps[1])
            rows.append((r, e_r, d_z, b_r, h_z))
        _csv_write(rows, ["r", "e_r", "d_z", "b_r", "h_z"], args.out)
        outside = [row for row in rows if row[0] > args.R2 + shell]
        worst = max((max(abs(v) for v in row[1:]) for row in outside),
                    default=0.0)
        print(f"fields outside the outer sphere: max |.| = {worst:.3e}",
              file=sys.stderr)
        return 0 if worst < 1e-14 else 1

    if args.name == "minkowski":
        scn = sc.scenario_minkowski_rest(args.L, args.c0)
    else:
        scn = sc.scenario_expanding(L=args.L, c0=args.c0)
    obs = mt.lapse_shift(scn.structure, scn.metric)
    kin = mt.kinematics(scn.structure, scn.metric, scn.c0, obs)
    rows = []
    for i in range(ns):
        t = i / max(ns - 1, 1)
        p = [t, 0.3, 0.2, 0.1]
        rows.append((t, real(obs.lapse.comps_fn(p)[0]),
                     real(kin.expansion_scalar.comps_fn(p)[0])))
    _csv_write(rows, ["t", "lapse", "expansion_scalar"], args.out)
    return 0


def cmd_dims(args) -> int:
    cfg = VerifyConfig(seed=args.seed)
    ok = True
    for name, terms in verify._dims_equations(cfg).items():
        good = dims.pd_check(terms)
        ok = ok and good
        print(f"{name}: pd = {terms[0]}  {'PASS' if good else 'FAIL'}")
    neg = not dims.pd_check([dims.UT, dims.UT * dims.L])
    print(f"negative_control: mismatch detected  "
          f"{'PASS' if neg else 'FAIL'}")
    ok = ok and neg
    return 0 if ok else 1


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        if args.command == "verify":
            return cmd_verify(args)
        if args.command == "scenario":
            return cmd_scenario(args)
        return cmd_dims(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
