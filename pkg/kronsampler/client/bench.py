import asyncio
import csv
import functools
import json
import os
import typing
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from .. import helpers, hints, samplers, version
from ..errors import KronSamplerError
from ..reports import BenchRow, EvalReport, CSV_HEADER, format_shapes
from ..suites import BenchSuite
from ..types import ProblemInstance

if typing.TYPE_CHECKING:
    from .samplingclient import SamplingClient

AGGREGATE_HEADER = (
    'algo', 'shapes', 'budget', 'trials', 'fp_mean', 'fp_std', 'mse_count',
    'mse_mean', 'mse_std', 'wall_time_ns_mean', 'wall_time_ns_std',
    'bound_satisfied', 'failures'
)

ROWS_FILE = 'rows.csv'
AGGREGATE_FILE = 'aggregate.csv'
METADATA_FILE = 'metadata.json'


def _stats(values):
    if not values:
        return None, None
    a = np.asarray(values, dtype=np.float64)
    return float(a.mean()), float(a.std(ddof=1)) if a.size > 1 else 0.0


def aggregate_rows(rows):
    """
    Mean and standard deviation of every metric per (algorithm, shapes,
    budget) cell, in the order cells first appear in ``rows``.
    """
    cells = {}
    for row in rows:
        cells.setdefault((row.algorithm, row.shapes, row.budget), []).append(row)

    result = []
    for (algo, shapes, budget), group in cells.items():
        fp_mean, fp_std = _stats([r.fp for r in group if r.fp is not None])
        mses = [r.mse for r in group if r.mse is not None]
        mse_mean, mse_std = _stats(mses)
        t_mean, t_std = _stats([r.wall_time_ns for r in group if r.wall_time_ns])
        checked = [r.bound.satisfied for r in group if r.bound is not None]
        result.append({
            'algo': algo,
            'shapes': format_shapes(shapes),
            'budget': budget,
            'trials': len(group),
            'fp_mean': fp_mean,
            'fp_std': fp_std,
            'mse_count': len(mses),
            'mse_mean': mse_mean,
            'mse_std': mse_std,
            'wall_time_ns_mean': t_mean,
            'wall_time_ns_std': t_std,
            'bound_satisfied': sum(checked) / len(checked) if checked else None,
            'failures': sum(1 for r in group if not r.ok),
        })
    return result


class BenchResult:
    """
    Every row of a benchmark run, in a deterministic order, together with
    the per-cell aggregate and the metadata describing the run.
    """
    def __init__(self, suite, rows, metadata):
        self.suite = suite
        self.rows = rows
        self.metadata = metadata

    @functools.cached_property
    def aggregate(self):
        return aggregate_rows(self.rows)

    @property
    def failures(self):
        return [r for r in self.rows if not r.ok]


class BenchMethods:

    # region Public methods

    async def bench(
            self: 'SamplingClient',
            suite: BenchSuite,
            *,
            progress_callback: 'hints.ProgressCallback' = None) -> BenchResult:
        """
        Runs every trial of ``suite`` on a pool of ``workers`` threads.

        Each trial generates its instance from the seed ``seed + trial``,
        then, for every budget and algorithm, times the selection alone
        and evaluates it. Failures are recorded on their row and the run
        goes on. The rows come back in suite order no matter how many
        workers ran them.

        Arguments
            suite (`BenchSuite`):
                What to run, see `kronsampler.suites`.

            progress_callback (`callable`, optional):
                Called as ``progress_callback(done, total)`` after every
                trial finishes.

        Example
            .. code-block:: python

                from kronsampler import suites

                result = await client.bench(suites.vector_suite(trials=5))
                client.write_bench(result, 'out/vector')
        """
        loop = asyncio.get_running_loop()
        jobs = [(p, t) for p, plan in enumerate(suite.plans)
                for t in range(plan.spec.trials)]
        total = len(jobs)
        done = 0
        log = self._log[__name__]
        log.info('Running %r on %d workers', suite, self.workers)

        with ThreadPoolExecutor(max_workers=self.workers) as pool:
            futures = [
                loop.run_in_executor(pool, self._run_trial, suite.plans[p], t)
                for p, t in jobs
            ]
            for fut in asyncio.as_completed(futures):
                await fut
                done += 1
                if progress_callback:
                    progress_callback(done, total)

        rows = [row for fut in futures for row in fut.result()]
        for row in rows:
            if not row.ok:
                log.warning('Trial %d %s at budget %d failed: %s',
                            row.trial, row.algorithm, row.budget, row.errors)

        metadata = {
            'version': version.__version__,
            'suite': suite.to_dict(),
            'seeds': {
                str(p): [helpers.trial_seed(plan.spec.seed, t) for t in range(plan.spec.trials)]
                for p, plan in enumerate(suite.plans)
            },
            'removal_policy': samplers.REMOVAL_POLICY,
            'limits': self.limits,
            'rows': len(rows),
            'failures': [r.to_dict() for r in rows if not r.ok],
        }
        return BenchResult(suite, rows, metadata)

    def write_bench(
            self: 'SamplingClient',
            result: BenchResult,
            out_dir: 'hints.LocalPath') -> typing.List[str]:
        """
        Writes ``rows.csv``, ``aggregate.csv`` and ``metadata.json`` into
        ``out_dir`` and returns their paths.
        """
        paths = [os.path.join(out_dir, name)
                 for name in (ROWS_FILE, AGGREGATE_FILE, METADATA_FILE)]
        helpers.ensure_parent_dir_exists(paths[0])

        with open(paths[0], 'w', newline='', encoding='utf-8') as f:
            writer = csv.writer(f, lineterminator='\n')
            writer.writerow(CSV_HEADER)
            writer.writerows(r.csv_row() for r in result.rows)

        with open(paths[1], 'w', newline='', encoding='utf-8') as f:
            writer = csv.writer(f, lineterminator='\n')
            writer.writerow(AGGREGATE_HEADER)
            for cell in result.aggregate:
                writer.writerow(
                    '' if cell[k] is None else
                    helpers.format_float(cell[k]) if isinstance(cell[k], float) else cell[k]
                    for k in AGGREGATE_HEADER)

        with open(paths[2], 'w', encoding='utf-8') as f:
            json.dump(result.metadata, f, indent=2)
            f.write('\n')

        self._log[__name__].info('Wrote %d benchmark rows to %s', len(result.rows), out_dir)
        return paths

    # endregion

    # region Private methods

    def _run_trial(self: 'SamplingClient', plan, trial):
        """One trial of ``plan``, run on a worker thread."""
        seed = helpers.trial_seed(plan.spec.seed, trial)
        factors = plan.spec.generate(trial)
        rows = []
        for budget in plan.budgets:
            instance = ProblemInstance(factors, budget)
            reference = None
            if plan.bound:
                try:
                    reference = self.reference_optimum(instance, plan.oracle, seed=seed)
                except KronSamplerError as e:
                    self._log[__name__].warning(
                        'No reference optimum for trial %d at budget %d: %s', trial, budget, e)

            for algo in plan.algorithms:
                rows.append(BenchRow(trial, self._bench_cell(
                    instance, algo, seed, plan.bound if reference else None, reference)))
        return rows

    def _bench_cell(self: 'SamplingClient', instance, algo, seed, bound, reference):
        try:
            report = self.evaluate(instance, algo, seed=seed, bound=bound, reference=reference)
        except KronSamplerError as e:
            report = EvalReport(instance.shapes, algo, instance.budget, seed=seed,
                                errors={'select': str(e)})
        report.seed = seed
        return report

    # endregion
