"""
Command line interface.

Every command is deterministic given its flags, seeds included. Results go
to stdout or to the requested files, diagnostics go to the log on stderr.
The exit code is 0 on success, 2 for invalid input, 3 when a resource
guard refuses the work and 4 for numerical failures.
"""
import argparse
import asyncio
import csv
import io
import json
import logging
import os
import sys

from . import bounds, helpers, instances, samplers, suites, version
from .client import SamplingClient
from .errors import KronSamplerError, InvalidInputError, NumericalError
from .extensions import csvio, pgm
from .reports import CSV_HEADER
from .types import Selection

EXIT_OK = 0
EXIT_INVALID = 2

_log = logging.getLogger(__name__)


# region Argument parsing


def _shape(text):
    try:
        n, k = (int(x) for x in text.split(','))
    except ValueError:
        raise argparse.ArgumentTypeError('expected N,K, not {!r}'.format(text)) from None
    return n, k


def _budgets(text):
    """``45,50,60`` or ``LOW:HIGH:STEP``."""
    try:
        if ':' in text:
            low, high, step = (int(x) for x in text.split(':'))
            return suites.budget_grid(low, high, step)
        return [int(x) for x in text.split(',')]
    except (ValueError, KronSamplerError):
        raise argparse.ArgumentTypeError('bad budget list {!r}'.format(text)) from None


def _paths(text):
    return [p for p in text.split(',') if p]


def _names(text):
    return [p.strip() for p in text.split(',') if p.strip()]


def build_parser():
    parser = argparse.ArgumentParser(
        prog='kronsampler',
        description='Sampling set selection for Kronecker-structured signals.')
    parser.add_argument('--version', action='version', version=version.__version__)
    parser.add_argument('-v', '--verbose', action='count', default=0,
                        help='log progress (-v) or every step (-vv) to stderr')
    parser.add_argument('--threads', type=int, default=None,
                        help='benchmark worker threads (default: $KRONSAMPLER_THREADS or CPUs)')
    parser.add_argument('--guard', type=int, default=samplers.DEFAULT_ENUMERATION_LIMIT,
                        help='largest number of selections exhaustive search may visit')
    parser.add_argument('--draws', type=int, default=samplers.DEFAULT_SURROGATE_DRAWS,
                        help='draws of the best-of-random reference optimum')

    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('gen', help='generate random factor matrices')
    p.add_argument('--kind', choices=sorted(instances.KIND_ALIASES), default='signed')
    p.add_argument('--shape', type=_shape, action='append', required=True,
                   help='N,K of one mode, repeat for every mode')
    p.add_argument('--seed', type=int, default=0)
    p.add_argument('--trials', type=int, default=1)
    p.add_argument('--unit-rows', action='store_true',
                   help='scale every factor row to unit norm')
    p.add_argument('--out-dir', required=True)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser('select', help='select rows with one algorithm')
    p.add_argument('--algo', choices=sorted(samplers.ALGORITHMS), default=samplers.FFW)
    p.add_argument('--budget', type=int, required=True)
    p.add_argument('--factors', type=_paths, required=True,
                   help='comma-separated matrix CSV files, one per mode')
    p.add_argument('--seed', type=int, default=None)
    p.add_argument('--out', help='write the selection JSON here instead of stdout')
    p.set_defaults(func=cmd_select)

    p = sub.add_parser('eval', help='frame potential and MSE of a selection')
    p.add_argument('--factors', type=_paths, required=True)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument('--selection', help='selection JSON file to evaluate')
    group.add_argument('--algo', choices=sorted(samplers.ALGORITHMS),
                       help='run this algorithm and evaluate its selection')
    p.add_argument('--budget', type=int, help='budget for --algo')
    p.add_argument('--seed', type=int, default=None)
    p.add_argument('--metric', choices=('fp', 'mse', 'both'), default='both')
    p.add_argument('--format', choices=('json', 'csv'), default='json')
    p.add_argument('--out')
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser('bound', help='check an approximation bound of FFW')
    p.add_argument('--kind', choices=sorted(bounds.KINDS), required=True)
    p.add_argument('--factors', type=_paths, required=True)
    p.add_argument('--budget', type=int, required=True)
    p.add_argument('--oracle', default='random',
                   help='exhaustive, auto, random or random:COUNT (default random with --draws)')
    p.add_argument('--seed', type=int, default=0)
    p.add_argument('--format', choices=('json', 'csv'), default='json')
    p.add_argument('--out')
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser('bench', help='run a benchmark suite')
    p.add_argument('--suite', choices=sorted(suites.SUITES) + ['custom'], required=True)
    p.add_argument('--kind', choices=sorted(instances.KIND_ALIASES), default=None)
    p.add_argument('--trials', type=int, default=None)
    p.add_argument('--seed', type=int, default=0)
    p.add_argument('--shape', type=_shape, action='append', help='custom suite only')
    p.add_argument('--budgets', type=_budgets, help='custom suite only')
    p.add_argument('--algos', type=_names, help='custom suite only')
    p.add_argument('--bound', choices=sorted(bounds.KINDS), help='custom suite only')
    p.add_argument('--oracle', default='random')
    p.add_argument('--out-dir', required=True)
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser('image', help='sample and reconstruct a grayscale image')
    p.add_argument('--input', required=True, help='PGM (P2/P5), other grayscale image or CSV')
    p.add_argument('--k1', type=int, default=40)
    p.add_argument('--k2', type=int, default=40)
    p.add_argument('--budget', type=int, default=400)
    p.add_argument('--algo', choices=sorted(samplers.ALGORITHMS), default=samplers.FFW)
    p.add_argument('--seed', type=int, default=0)
    p.add_argument('--random-trials', type=int, default=0,
                   help='also report the mean metrics of this many random selections')
    p.add_argument('--out', required=True, help='reconstructed PGM image')
    p.add_argument('--metrics', help='metrics JSON (default: next to --out)')
    p.add_argument('--plain', action='store_true', help='write plain (P2) PGM')
    p.set_defaults(func=cmd_image)

    return parser


# endregion

# region Output helpers


def _emit(text, out=None):
    if out:
        helpers.ensure_parent_dir_exists(out)
        with open(out, 'w', encoding='utf-8') as f:
            f.write(text)
    else:
        sys.stdout.write(text)


def _csv_text(header, rows):
    out = io.StringIO()
    writer = csv.writer(out, lineterminator='\n')
    writer.writerow(header)
    writer.writerows(rows)
    return out.getvalue()


def _summary(value):
    return 'n/a' if value is None else helpers.format_float(value, 6)


# endregion

# region Commands


def cmd_gen(client, args):
    spec = instances.EnsembleSpec(args.kind, args.shape, args.seed, args.trials,
                                  unit_rows=args.unit_rows)
    os.makedirs(args.out_dir, exist_ok=True)
    count = 0
    for t in range(spec.trials):
        for r, f in enumerate(spec.generate(t), start=1):
            csvio.write_matrix(
                os.path.join(args.out_dir, 'trial{:03d}_mode{}.csv'.format(t, r)), f.matrix)
            count += 1

    with open(os.path.join(args.out_dir, 'ensemble.json'), 'w', encoding='utf-8') as f:
        f.write(spec.to_json(indent=2) + '\n')

    _log.info('Wrote %d factor files to %s', count, args.out_dir)
    return EXIT_OK


def cmd_select(client, args):
    instance = client.load_instance(args.factors, args.budget)
    sel = client.select(instance, args.algo, seed=args.seed)
    fp = client.frame_potential(instance, sel)

    # Timing changes across runs, keep the JSON reproducible
    elapsed = sel.metadata.pop('wall_time_ns')
    text = sel.to_json(indent=2) + '\n'
    if args.out:
        _emit(text, args.out)
    else:
        sys.stdout.write(text)

    print('algorithm={} fp={} sizes={} elapsed_ms={}'.format(
        sel.algorithm, _summary(fp), list(sel.sizes), _summary(elapsed / 1e6)),
        file=sys.stdout if args.out else sys.stderr)
    return EXIT_OK


def cmd_eval(client, args):
    if args.selection:
        with open(args.selection, encoding='utf-8') as f:
            sel = Selection.from_json(f.read())
        instance = client.load_instance(args.factors, sel.budget)
        report = client.evaluate_selection(instance, sel, metric=args.metric)
    else:
        if args.budget is None:
            raise InvalidInputError('--algo needs --budget')
        instance = client.load_instance(args.factors, args.budget)
        report = client.evaluate(instance, args.algo, seed=args.seed, metric=args.metric)

    if args.format == 'json':
        _emit(json.dumps(report.to_dict(), indent=2) + '\n', args.out)
    else:
        _emit(_csv_text(CSV_HEADER + ('error',), [
            report.csv_row() + ('; '.join(report.errors.values()),)]), args.out)

    # Only numerical failures reach the report, anything else raises
    return NumericalError.code if report.errors else EXIT_OK


def cmd_bound(client, args):
    instance = client.load_instance(args.factors, args.budget)
    report = client.check_bound(instance, args.kind, oracle=args.oracle, seed=args.seed)
    if args.format == 'json':
        _emit(json.dumps(report.to_dict(), indent=2) + '\n', args.out)
    else:
        _emit(_csv_text(bounds.CSV_HEADER, [report.csv_row()]), args.out)
    return EXIT_OK


def _suite_from_args(args):
    kwargs = {'seed': args.seed}
    if args.kind:
        kwargs['kind'] = args.kind
    if args.trials:
        kwargs['trials'] = args.trials

    if args.suite != 'custom':
        if args.suite == 'bounds':
            kwargs['oracle'] = args.oracle
        return suites.SUITES[args.suite](**kwargs)

    if not (args.shape and args.budgets and args.algos):
        raise InvalidInputError('The custom suite needs --shape, --budgets and --algos')
    return suites.custom_suite(args.shape, args.budgets, args.algos,
                               bound=args.bound, oracle=args.oracle, **kwargs)


def cmd_bench(client, args):
    suite = _suite_from_args(args)

    def progress(done, total):
        _log.info('Finished trial %d of %d', done, total)

    result = asyncio.run(client.bench(suite, progress_callback=progress))
    for path in client.write_bench(result, args.out_dir):
        print(path)

    if result.failures:
        _log.warning('%d of %d rows failed', len(result.failures), len(result.rows))
    return EXIT_OK


def cmd_image(client, args):
    pixels = client.load_image(args.input)
    image = instances.image_to_instance(pixels, args.k1, args.k2)
    result = client.reconstruct_image(
        image, args.budget, args.algo, seed=args.seed, random_trials=args.random_trials)

    pgm.write_pgm(args.out, result.pixels, plain=args.plain)
    metrics_path = args.metrics or os.path.splitext(args.out)[0] + '.json'
    metrics = dict(result.metrics)
    metrics['selection'] = result.selection.to_dict()
    metrics['selection'].pop('metadata', None)
    with open(metrics_path, 'w', encoding='utf-8') as f:
        # Infinity is not valid JSON, a perfect reconstruction is stored as null
        json.dump({k: (None if isinstance(v, float) and v == float('inf') else v)
                   for k, v in metrics.items()}, f, indent=2)
        f.write('\n')

    print('algorithm={} mse={} psnr={} sizes={}'.format(
        args.algo, _summary(metrics['mse']), _summary(metrics['psnr']), metrics['sizes']))
    return EXIT_OK


# endregion


def configure_logging(verbosity):
    level = logging.WARNING if verbosity <= 0 else logging.INFO if verbosity == 1 else logging.DEBUG
    logging.basicConfig(
        stream=sys.stderr, level=level,
        format="[%(levelname) 5s/%(asctime)s] %(name)s: %(message)s")


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging(args.verbose)

    try:
        client = SamplingClient(
            enumeration_limit=args.guard, surrogate_draws=args.draws, workers=args.threads)
        return args.func(client, args)
    except KronSamplerError as e:
        _log.debug('Command failed', exc_info=True)
        print('kronsampler: {}'.format(e), file=sys.stderr)
        return e.code
    except OSError as e:
        print('kronsampler: {}'.format(e), file=sys.stderr)
        return EXIT_INVALID
