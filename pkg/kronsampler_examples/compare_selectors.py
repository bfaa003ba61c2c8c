#!/usr/bin/env python3
# Compare the selectors on one random two-mode instance.
import logging

from kronsampler import SamplingClient, ProblemInstance, instances, samplers

logging.basicConfig(level=logging.WARNING)

client = SamplingClient()

# Sign-condition factors of 30x5 and 24x4, the generator the benchmarks use
factors = instances.EnsembleSpec('signed', [(30, 5), (24, 4)], seed=7).generate()

print('{:>6}  {:<10} {:>14} {:>14} {:>10}'.format('budget', 'algorithm', 'fp', 'mse', 'time (us)'))
for budget in (10, 20, 30, 40, 50):
    # Instances only hold the factors and the budget, so they are cheap
    instance = ProblemInstance(factors, budget)

    for algo in (samplers.FFW, samplers.GREEDY_FP, samplers.RANDOM):
        report = client.evaluate(instance, algo, seed=budget)
        print('{:>6}  {:<10} {:>14.6g} {:>14.6g} {:>10.1f}'.format(
            budget, algo, report.fp, report.mse, report.wall_time_ns / 1000))
