import typing

import numpy as np

from .. import helpers, hints, recon, samplers
from ..errors import KronSamplerError, InvalidInputError
from ..extensions import pgm
from ..instances import ImageInstance, image_to_instance
from ..types import Selection

if typing.TYPE_CHECKING:
    from .samplingclient import SamplingClient


class ImageResult:
    """
    The outcome of sampling and reconstructing an image.

    Members:
        pixels (`numpy.ndarray`):
            The reconstructed image, same shape as the input.

        selection (`Selection`):
            The selected rows (mode 1) and columns (mode 2).

        metrics (`dict`):
            Error metrics against the input image plus the configuration
            of the run, ready to be written as JSON.
    """
    def __init__(self, pixels, selection, metrics):
        self.pixels = pixels
        self.selection = selection
        self.metrics = metrics


class ReconstructionMethods:

    # region Public methods

    def sample(
            self: 'SamplingClient',
            model: recon.SignalModel,
            sel: Selection,
            *,
            noise_sigma: float = recon.DEFAULT_NOISE_SIGMA,
            seed: 'hints.SeedLike' = None) -> recon.Measurement:
        """
        Measures ``model`` on the grid of ``sel`` with white Gaussian noise
        of standard deviation ``noise_sigma`` (unit by default).
        """
        return recon.sample(model, sel, noise_sigma, seed)

    def reconstruct(
            self: 'SamplingClient',
            model: recon.SignalModel,
            measurement: recon.Measurement,
            sel: Selection = None,
            *,
            explicit: bool = False):
        """
        Least-squares estimate of the core and the full signal of ``model``
        from ``measurement``.

        Arguments
            model (`SignalModel`):
                Provides the bases. Its core is not used.

            measurement (`Measurement`):
                The sampled values.

            sel (`Selection`, optional):
                The selection the values were sampled on. Defaults to the
                one stored in the measurement.

            explicit (`bool`, optional):
                Invert the explicit Kronecker product of the restricted
                bases instead of working mode by mode. Products larger
                than the client's ``kron_max_entries`` raise
                `KronSizeError`.

        Returns
            The pair ``(g_hat, f_hat)``.
        """
        sel = sel or measurement.selection
        if sel is None:
            raise InvalidInputError('The measurement does not say which selection it used')
        restricted = recon.restricted_bases(model.bases, sel)
        if explicit:
            return recon.reconstruct_explicit(
                restricted, measurement, model.bases, max_entries=self.kron_max_entries)
        return recon.reconstruct(restricted, measurement, model.bases)

    def load_image(
            self: 'SamplingClient',
            path: 'hints.LocalPath') -> np.ndarray:
        """Reads a grayscale PGM (P2 or P5), other pillow image or matrix CSV."""
        pixels = pgm.read_image(path)
        self._log[__name__].info('Loaded %dx%d image from %s', *pixels.shape, path)
        return pixels

    def reconstruct_image(
            self: 'SamplingClient',
            image: typing.Union[ImageInstance, np.ndarray],
            budget: int,
            algorithm: str = samplers.FFW,
            *,
            k1: int = None,
            k2: int = None,
            seed: 'hints.SeedLike' = None,
            random_trials: int = 0) -> ImageResult:
        """
        Selects rows and columns of an image, samples the pixels on their
        intersection grid and reconstructs the whole image by least squares.

        Arguments
            image (`ImageInstance` | `numpy.ndarray`):
                The decomposed image, or raw pixels to be decomposed with
                ranks ``k1`` and ``k2``.

            budget (`int`):
                Rows plus columns to select, at least ``k1 + k2``.

            algorithm (`str`, optional):
                The sampler name, as in `select`.

            seed (`int`, optional):
                Seed of the random samplers.

            random_trials (`int`, optional):
                Also reconstruct from this many random selections (seeds
                ``seed``, ``seed + 1``, ...) and report their mean metrics
                for comparison.

        Example
            .. code-block:: python

                pixels = client.load_image('peppers.pgm')
                result = client.reconstruct_image(pixels, 400, 'ffw', k1=40, k2=40)
                print(result.metrics['psnr'])
        """
        if not isinstance(image, ImageInstance):
            if k1 is None or k2 is None:
                raise InvalidInputError('Raw pixels need the ranks k1 and k2')
            image = image_to_instance(image, k1, k2)

        instance = image.problem(budget)
        sel = self.select(instance, algorithm, seed=seed)
        pixels, metrics = self._reconstruct_grid(image, sel)
        metrics.update({
            'algorithm': sel.algorithm,
            'budget': instance.budget,
            'sizes': list(sel.sizes),
            'k1': image.k1,
            'k2': image.k2,
            'requested_ranks': list(image.requested),
            'wall_time_ns': sel.metadata['wall_time_ns'],
        })

        if random_trials:
            psnrs, mses = [], []
            for t in range(int(random_trials)):
                rand = samplers.random_selection(instance, helpers.trial_seed(seed, t))
                try:
                    _, m = self._reconstruct_grid(image, rand)
                except KronSamplerError as e:
                    self._log[__name__].warning('Random trial %d failed: %s', t, e)
                    continue
                mses.append(m['mse'])
                if m['psnr'] is not None:
                    psnrs.append(m['psnr'])

            metrics['random_trials'] = int(random_trials)
            metrics['random_mse_mean'] = float(np.mean(mses)) if mses else None
            metrics['random_psnr_mean'] = float(np.mean(psnrs)) if psnrs else None

        self._log[__name__].info('%s image reconstruction: mse %.6g, psnr %s',
                                 algorithm, metrics['mse'], metrics['psnr'])
        return ImageResult(pixels, sel, metrics)

    # endregion

    # region Private methods

    def _reconstruct_grid(self, image, sel):
        measurement = image.sample(sel)
        _, f_hat = recon.reconstruct(
            recon.restricted_bases([image.u1.matrix, image.u2.matrix], sel),
            measurement, [image.u1.matrix, image.u2.matrix])

        pixels = f_hat.reshape(image.shape)
        return pixels, recon.error_metrics(image.pixels, pixels)

    # endregion
