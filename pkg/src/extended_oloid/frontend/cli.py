#!/usr/bin/env python3
# Copyright (c) 2026 extended-oloid contributors
# SPDX-License-Identifier: MIT

# @file    cli.py
# @author  extended-oloid contributors
# @date    2026-03-12

"""
Command line front end.

    python -m extended_oloid.frontend.cli sample touching --lambda 0.3 --n 400
    python -m extended_oloid.frontend.cli plot touching asymptotes --lambda inf -p X -w 5 -o fig.svg
    python -m extended_oloid.frontend.cli verify --suite tangency
"""

import argparse
import json
import sys

from ..geometry import common, sampling, verification
from ..geometry.common import ETA_WINDOW, OloidError, Tolerance, format_lambda, parse_lambda
from . import plot


def parse_options(options):
    if options.command == "sample":
        options.lam = None if options.lam is None else parse_lambda(options.lam)
    if options.command == "plot":
        options.lams = [parse_lambda(lam) for lam in options.lams]
        plot.check_projection(options.objects, options.projection)
        if options.window is None:
            options.window = ETA_WINDOW if options.projection == "plane" else 5.
        options.window = plot.parse_window(options.window)
    if options.command == "verify":
        options.suite = options.suite_flag or options.suite
        options.tol = Tolerance(options.tol, options.tol) if options.tol else common.DEFAULT_TOL
    return options


def _add_range(parser):
    parser.add_argument("-n", "--n", type=int, default=200,
                        help="number of samples per object (and per lambda)")
    parser.add_argument("--t-min", type=float,
                        help="start of the parameter range (default depends on the object)")
    parser.add_argument("--t-max", type=float,
                        help="end of the parameter range (default depends on the object)")


def get_options(args=None):
    verbosity = argparse.ArgumentParser(add_help=False)
    verbosity.add_argument("-v", "--verbose", action="count", default=0,
                           help="increase verbosity")
    parser = argparse.ArgumentParser(description="Sample, plot and verify the geometry of the extended oloid")
    commands = parser.add_subparsers(dest="command", required=True)

    sample = commands.add_parser("sample", parents=[verbosity], help="write samples of one object as CSV or JSON")
    sample.add_argument("object", choices=list(sampling.OBJECTS))
    sample.add_argument("-l", "--lambda", dest="lam", metavar="LAMBDA",
                        help="family parameter, a number or inf")
    _add_range(sample)
    sample.add_argument("-b", "--branch", nargs="+", metavar="BRANCH",
                        help="only write these branches (for example R+ or kB-)")
    sample.add_argument("-f", "--format", choices=("csv", "json"), default="csv",
                        help="output format")
    sample.add_argument("-o", "--out", metavar="FILE",
                        help="write to FILE instead of stdout")

    plotter = commands.add_parser("plot", parents=[verbosity], help="draw objects into an SVG projection")
    plotter.add_argument("objects", nargs="+", choices=list(sampling.OBJECTS), metavar="OBJECT",
                         help="one or more of " + ", ".join(sampling.OBJECTS))
    plotter.add_argument("-l", "--lambda", dest="lams", metavar="LAMBDA", nargs="+", default=[],
                         help="family parameters for the objects which need one")
    _add_range(plotter)
    plotter.add_argument("-p", "--projection", choices=list(plot.PROJECTIONS), default="Z",
                         help="X (y,z), Y (x,z), Z (x,y) or the development plane (xi,eta)")
    plotter.add_argument("-w", "--window",
                         help="half width of the plot window or xmin,xmax,ymin,ymax (use --window=...)")
    plotter.add_argument("--dashed", nargs="+", default=[], metavar="OBJECT",
                         help="draw these objects dashed")
    plotter.add_argument("--thick", nargs="+", default=[], metavar="OBJECT",
                         help="draw these objects thick")
    plotter.add_argument("--title", help="plot title")
    plotter.add_argument("-o", "--out", metavar="FILE", default="plot.svg",
                         help="SVG output file")

    verify = commands.add_parser("verify", parents=[verbosity], help="run the numerical verification suites")
    suites = ["all", *verification.SUITES]
    verify.add_argument("suite", nargs="?", choices=suites, default="all")
    verify.add_argument("-s", "--suite", dest="suite_flag", choices=suites,
                        help="suite to run (same as the positional argument)")
    verify.add_argument("--tol", type=float,
                        help="absolute and relative tolerance for the tolerance based checks")
    verify.add_argument("--seed", type=int, default=0,
                        help="accepted for reproducibility, all suites use fixed grids")
    verify.add_argument("-o", "--out", metavar="FILE",
                        help="also write the report as CSV to FILE")
    return parse_options(parser.parse_args(args=args))


def cmd_sample(options):
    with common.Benchmarker(options.verbose, f"sampling {options.object}"):
        df = sampling.sample(options.object, options.lam, options.t_min, options.t_max, options.n)
    if options.branch:
        df = sampling.select_branches(df, options.branch)
        if df.empty:
            print(f"Warning: no samples on the branches {', '.join(options.branch)}", file=sys.stderr)
    if options.verbose:
        gaps = int((df["branch"] == sampling.GAP).sum())
        print(f"{len(df) - gaps} points, {gaps} gaps", file=sys.stderr)
    if options.format == "csv":
        common.write_csv(options.out or sys.stdout, df)
    elif options.out:
        common.save_json(options.out, sampling.to_records(df))
    else:
        json.dump(sampling.to_records(df), sys.stdout, indent=2)
        print()
    return 0


def cmd_plot(options):
    frames = []
    for obj in options.objects:
        for lam in (options.lams or [None]) if obj in sampling.NEEDS_LAMBDA else [None]:
            if options.verbose:
                print(f"sampling {obj}" + ("" if lam is None else f" lambda={format_lambda(lam)}"), file=sys.stderr)
            frames.append(sampling.sample(obj, lam, options.t_min, options.t_max, options.n))
    drawn, dropped = plot.render_svg(frames, options.projection, options.window, options.out,
                                     options.dashed, options.thick, options.title)
    if dropped:
        print(f"Warning: {dropped} polylines lie completely outside the window", file=sys.stderr)
    if options.verbose:
        print(f"wrote {drawn} polylines to {options.out}", file=sys.stderr)
    return 0


def cmd_verify(options):
    if options.suite == "all":
        checks = verification.run_all(options.tol, options.verbose)
    else:
        checks = verification.run_suite(options.suite, options.tol, options.verbose)
    report = verification.report(checks)
    print(report.to_string(index=False, float_format=lambda x: "%.3g" % x))
    failed = int((~report["passed"]).sum())
    print(f"{len(report) - failed} of {len(report)} checks passed")
    if options.out:
        common.write_csv(options.out, report)
    return 1 if failed else 0


COMMANDS = {
    "sample": cmd_sample,
    "plot": cmd_plot,
    "verify": cmd_verify,
}


def main(args=None):
    try:
        options = get_options(args)
        return COMMANDS[options.command](options)
    except OloidError as error:
        print(f"Error: {error}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
