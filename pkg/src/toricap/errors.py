"""Exception hierarchy shared by all toricap modules."""


class ToricapError(Exception):
    """Base class for all errors raised by this package."""


class DimensionMismatch(ToricapError):
    """A vector or domain has the wrong ambient dimension."""


class DomainFormatError(ToricapError):
    """A domain-spec file is syntactically or semantically invalid."""


class UnboundedDomainError(ToricapError):
    """The requested quantity is undefined for this unbounded domain."""


class EnumerationCapExceeded(ToricapError):
    """A brute-force enumeration would exceed the configured cap."""
