#!/usr/bin/env python3
# Sample a grayscale image with FFW and compare against random selections.
import logging
import os
import sys

from kronsampler import SamplingClient
from kronsampler.extensions import pgm
from kronsampler.instances import image_to_instance

logging.basicConfig(level=logging.INFO)

if len(sys.argv) < 2:
    print('usage: image_demo.py IMAGE [BUDGET]', file=sys.stderr)
    sys.exit(1)

path = sys.argv[1]
budget = int(sys.argv[2]) if len(sys.argv) > 2 else 400

client = SamplingClient()

# The rank 40 truncation is computed once and shared by every run
image = image_to_instance(client.load_image(path), 40, 40)
root, _ = os.path.splitext(path)

for algo in ('ffw', 'greedyfp'):
    result = client.reconstruct_image(image, budget, algo, seed=0, random_trials=20)
    out = '{}-{}.pgm'.format(root, algo)
    pgm.write_pgm(out, result.pixels)

    m = result.metrics
    print('{}: rows {} psnr {} (random selections: {}) -> {}'.format(
        algo, m['sizes'], m['psnr'], m['random_psnr_mean'], out))
