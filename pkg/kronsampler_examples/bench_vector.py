#!/usr/bin/env python3
# Run a small single-mode benchmark and write its results.
import asyncio
import logging
import sys

from kronsampler import SamplingClient, suites

logging.basicConfig(format='[%(levelname) 5s/%(asctime)s] %(name)s: %(message)s',
                    level=logging.INFO)


def progress(done, total):
    print('\r{}/{} trials'.format(done, total), end='', flush=True)


async def main(out_dir):
    client = SamplingClient()

    # Ten trials instead of a hundred and every tenth budget
    suite = suites.vector_suite(trials=10, step=10)
    result = await client.bench(suite, progress_callback=progress)
    print()

    for cell in result.aggregate:
        print('{algo:<10} L={budget:<4} fp={fp_mean:.6g} mse={mse_mean}'.format(**cell))

    for path in client.write_bench(result, out_dir):
        print('Wrote', path)


if __name__ == '__main__':
    asyncio.run(main(sys.argv[1] if len(sys.argv) > 1 else 'out/vector'))
