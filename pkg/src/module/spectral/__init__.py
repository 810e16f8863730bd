from .exception import InvalidOracleError, NonFiniteOperatorError, SpectralError
from .oracle import radial_constant_rayleigh, radial_oracle, radial_oracle_table
from .schema import OracleRow, Spectrum
from .solver import eigen_decompose, principal_eigenpair, rayleigh_quotient

__all__ = [
    "InvalidOracleError",
    "NonFiniteOperatorError",
    "OracleRow",
    "SpectralError",
    "Spectrum",
    "eigen_decompose",
    "principal_eigenpair",
    "radial_constant_rayleigh",
    "radial_oracle",
    "radial_oracle_table",
    "rayleigh_quotient",
]
