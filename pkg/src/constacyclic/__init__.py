"""Two-dimensional (lambda1, lambda2)-constacyclic codes over GF(p)."""
from .code import (
    CodeSpec,
    CzPoint,
    build_code,
    check_syndrome,
    error_capability,
    extract_message,
    format_code_spec,
    is_codeword,
    min_distance_bruteforce,
    parse_code_spec,
    syndrome,
    systematic_encode,
)
from .decoder import (
    DecodeOutcome,
    LocateReport,
    Status,
    decode,
    decode_exhaustive,
    decode_frequency_domain,
    decode_time_domain,
    detect,
    locate,
)
from .field import GaloisField, RootSystem, build_field, build_root_system, minimal_polynomial
from .linalg import solve_linear
from .ring import ArrayMN, eval2, format_array, parse_array, ring_mul
from .transform import Spectrum, fft2, ifft2, spectral_nulls

__version__ = "0.1.0"
