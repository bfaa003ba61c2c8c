"""
Grayscale image input and output.

Both PGM variants (plain P2 and binary P5, 8 or 16 bit) are parsed here and
rescaled from their maxval to 0-255. Any other single-channel format is
decoded with pillow, 16-bit ones being rescaled the same way. Matrix CSV
files are accepted as images too.
"""
import itertools
import logging
import os
import re

import numpy as np
from PIL import Image

from .. import helpers
from ..errors import InvalidInputError
from .csvio import read_matrix

MAXVAL = 255
MAXVAL_16 = 65535

# Single-channel pillow modes
_GRAY_MODES = {'1', 'L', 'I', 'I;16', 'I;16B', 'I;16L', 'F'}

# Width, height and maxval may be preceded by comments, then exactly one
# whitespace byte before the raster
_P5_HEADER = re.compile(
    rb'P5(?:\s|#[^\n]*\n)+(\d+)(?:\s|#[^\n]*\n)+(\d+)(?:\s|#[^\n]*\n)+(\d+)\s')

_log = logging.getLogger(__name__)


def _tokens(text):
    for line in text.splitlines():
        line = line.split('#', 1)[0]
        yield from line.split()


def _rescaled(pixels, maxval):
    if maxval != MAXVAL:
        pixels = pixels * MAXVAL / maxval
    return pixels


def loads_plain_pgm(data, *, path='<bytes>'):
    """Parses a plain (P2) PGM document into a float64 array."""
    try:
        text = data.decode('ascii')
    except UnicodeDecodeError:
        raise InvalidInputError('{}: plain PGM must be ASCII'.format(path)) from None

    tokens = _tokens(text)
    if next(tokens, None) != 'P2':
        raise InvalidInputError('{}: not a plain PGM file'.format(path))

    try:
        width, height, maxval = (int(t) for t in itertools.islice(tokens, 3))
        values = [int(t) for t in tokens]
    except ValueError:
        raise InvalidInputError('{}: malformed PGM header or data'.format(path)) from None

    if width < 1 or height < 1 or maxval < 1:
        raise InvalidInputError('{}: bad PGM header'.format(path))
    if len(values) != width * height:
        raise InvalidInputError('{}: expected {} pixels, found {}'.format(
            path, width * height, len(values)))

    return _rescaled(np.array(values, dtype=np.float64).reshape(height, width), maxval)


def loads_binary_pgm(data, *, path='<bytes>'):
    """
    Parses a binary (P5) PGM document into a float64 array. Samples are
    one byte when maxval is below 256 and two big-endian bytes otherwise.
    """
    match = _P5_HEADER.match(data)
    if not match:
        raise InvalidInputError('{}: malformed binary PGM header'.format(path))

    width, height, maxval = (int(g) for g in match.groups())
    if width < 1 or height < 1 or not 1 <= maxval <= MAXVAL_16:
        raise InvalidInputError('{}: bad PGM header'.format(path))

    dtype = np.dtype('u1') if maxval <= MAXVAL else np.dtype('>u2')
    count = width * height
    raster = data[match.end():]
    if len(raster) < count * dtype.itemsize:
        raise InvalidInputError('{}: expected {} pixels, found {}'.format(
            path, count, len(raster) // dtype.itemsize))

    pixels = np.frombuffer(raster, dtype=dtype, count=count).astype(np.float64)
    return _rescaled(pixels.reshape(height, width), maxval)


def read_image(path):
    """
    Reads a grayscale image as a float64 matrix in 0-255, rows being image
    rows. Colour images are rejected.
    """
    path = os.fspath(path)
    if path.lower().endswith('.csv'):
        return read_matrix(path)

    with open(path, 'rb') as f:
        data = f.read()

    if data[:2] == b'P2':
        return loads_plain_pgm(data, path=path)
    if data[:2] == b'P5':
        return loads_binary_pgm(data, path=path)

    try:
        with Image.open(path) as img:
            img.load()
            if img.mode not in _GRAY_MODES:
                raise InvalidInputError(
                    '{} is a {} image, only grayscale is supported'.format(path, img.mode))
            pixels = np.asarray(img, dtype=np.float64)
            # pillow widens 16-bit PNG to mode I
            if img.mode.startswith('I;16') or (img.mode == 'I' and pixels.max(initial=0) > MAXVAL):
                pixels = _rescaled(pixels, MAXVAL_16)
    except OSError as e:
        raise InvalidInputError('Cannot decode image {}: {}'.format(path, e)) from None

    _log.debug('Read %s image %s of size %s', img.mode, path, pixels.shape)
    return pixels


def to_bytes(pixels):
    """Rounds and clips ``pixels`` into ``[0, 255]`` 8-bit values."""
    return np.clip(np.rint(np.asarray(pixels, dtype=np.float64)), 0, MAXVAL).astype(np.uint8)


def dumps_plain_pgm(pixels):
    data = to_bytes(pixels)
    height, width = data.shape
    lines = ['P2', '{} {}'.format(width, height), str(MAXVAL)]
    lines.extend(' '.join(str(v) for v in row) for row in data)
    return ('\n'.join(lines) + '\n').encode('ascii')


def write_pgm(path, pixels, *, plain=False):
    """
    Writes ``pixels`` as a PGM image with maxval 255, binary (P5) through
    pillow unless ``plain`` asks for the text (P2) variant.
    """
    helpers.ensure_parent_dir_exists(path)
    if plain:
        with open(path, 'wb') as f:
            f.write(dumps_plain_pgm(pixels))
    else:
        Image.fromarray(to_bytes(pixels)).save(path, format='PPM')
