class SecretaryLabError(Exception):
    """Base class for all package errors."""


class ParameterError(SecretaryLabError, ValueError):
    """Raised when an operation is called outside its valid parameter range."""


class OracleCapError(ParameterError):
    """Raised when exhaustive enumeration is requested above the configured cap."""


class ConfigError(SecretaryLabError):
    """Raised for malformed or unknown configuration entries."""
