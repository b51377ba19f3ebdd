"""picentral: codimensions, exponents and identity certificates for
Grassmann envelopes of finite-dimensional superalgebras."""

__version__ = "0.1.0"
