"""
File formats the library reads and writes: the plain text matrix CSV used
for factors, signals and cores, and grayscale PGM images.
"""
from .csvio import read_matrix, write_matrix, read_vector, write_vector
from .pgm import read_image, write_pgm
